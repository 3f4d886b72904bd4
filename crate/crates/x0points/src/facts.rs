//! Bundled fact tables: the known classifications of levels with
//! infinitely many points of degree at most 4, the degree-5 function
//! witnesses, rank-0 Jacobian levels, the externally computed verdicts, and
//! the expected outputs used for divergence checks.
//!
//! Each fact carries a citation tag naming the kind of argument that
//! establishes it; the classifier copies these tags into proof traces.

use std::collections::BTreeSet;

/// Parse a compact level list like "1-33,35-37,39" into a set.
pub fn parse_levels(spec: &str) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for part in spec.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        match part.split_once('-') {
            Some((a, b)) => {
                let a: u64 = a.trim().parse().expect("range start");
                let b: u64 = b.trim().parse().expect("range end");
                out.extend(a..=b);
            }
            None => {
                out.insert(part.parse().expect("level"));
            }
        }
    }
    out
}

/// Levels with infinitely many quadratic points.
pub fn quadratic_infinite() -> BTreeSet<u64> {
    parse_levels("1-33,35-37,39-41,43,46-50,53,59,61,65,71,79,83,89,101,131")
}

/// Levels with infinitely many cubic points.
pub fn cubic_infinite() -> BTreeSet<u64> {
    parse_levels("1-29,31,32,34,36,37,43,45,49,50,54,64,81")
}

/// Levels with infinitely many quartic points.
pub fn quartic_infinite() -> BTreeSet<u64> {
    parse_levels(
        "1-75,77-83,85-89,91,92,94-96,98-101,103,104,107,111,118,119,121,123,125,128,131,141-143,145,155,159,167,191",
    )
}

/// Union of the three lists: infinitely many points of degree <= 4.
pub fn degree_le4_infinite() -> BTreeSet<u64> {
    let mut s = quadratic_infinite();
    s.extend(cubic_infinite());
    s.extend(quartic_infinite());
    s
}

/// How a degree-5 function on X_0(N) is known to exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Deg5FunctionSource {
    /// genus <= 2: 5 * infinity is nonspecial
    LowGenus,
    /// genus 3 or 4 with a non-Weierstrass rational cusp
    NonWeierstrassCusp,
    /// degree-5 degeneracy map to a genus-0 level
    DegeneracyMap,
    /// function found by a Riemann-Roch space search over cusps and
    /// quadratic points
    RiemannRochSearch,
    /// the unique gonality-5 level
    GonalityFive,
}

/// Levels with a known degree-5 function over Q, with their witnesses.
pub fn deg5_function_facts() -> Vec<(u64, Deg5FunctionSource)> {
    let mut out = Vec::new();
    for n in parse_levels("1-29,31,32,36,37,49,50") {
        out.push((n, Deg5FunctionSource::LowGenus));
    }
    for n in parse_levels("30,33,34,35,38,39,40,41,43,44,45,47,48,53,61,81") {
        out.push((n, Deg5FunctionSource::NonWeierstrassCusp));
    }
    out.push((125, Deg5FunctionSource::DegeneracyMap));
    for n in parse_levels("42,51,52,54-58,63,64,65,67,68,72,73,75,80,91,121") {
        out.push((n, Deg5FunctionSource::RiemannRochSearch));
    }
    out.push((109, Deg5FunctionSource::GonalityFive));
    out.sort_by_key(|&(n, _)| n);
    out
}

/// Levels where J_0(N) has rank 0 over Q (cited).
pub fn rank_zero_jacobian_levels() -> BTreeSet<u64> {
    parse_levels("46,59,60,62,66,69,70,71,76,78,84,87,90,94,95,96,98,100,104,105,108,110,119,120,126,132,140,144,150,168,180")
}

/// The expected candidate list (used as a divergence check).
pub fn expected_candidates() -> Vec<u64> {
    vec![76, 84, 90, 93, 97, 108, 109, 112, 113, 115, 117, 127, 133, 137, 139, 147, 169]
}

/// Candidate levels settled by each density rule.
pub fn rank0_rule_levels() -> BTreeSet<u64> {
    parse_levels("76,84,90,108")
}
pub fn dim_bound_rule_levels() -> BTreeSet<u64> {
    parse_levels("97,113,127,137,139,169")
}
pub fn df_rule_levels() -> BTreeSet<u64> {
    parse_levels("93,115,133,147")
}
/// Levels whose verdict is ingested from an external symmetric-power
/// computation: no positive-rank translate exists in the degree-5 image.
pub fn external_translate_verdicts() -> BTreeSet<u64> {
    parse_levels("112,117")
}

/// Expected quintic classification (used as a divergence check).
pub fn expected_quintic_infinite() -> BTreeSet<u64> {
    parse_levels("1-45,47-58,61,63,64,65,67,68,72,73,75,80,81,91,109,121,125")
}
pub fn expected_quintic_open() -> BTreeSet<u64> {
    parse_levels("74,77,79,82,83,85,86,88,89,92,96,98,99,100,101,103,107,111,118,123,128,131,141,142,143,145,155,159,167,191")
}
pub fn expected_quintic_finite_le191() -> BTreeSet<u64> {
    parse_levels("46,59,60,62,66,69,70,71,76,78,84,87,90,93,94,95,97,102,104,105,106,108,110,112-117,119,120,122,124,126,127,129,130,132-140,144,146-154,156,157,158,160-166,168-190")
}

/// Levels where finiteness of quintic points follows from a rank-0
/// Jacobian combined with a Castelnuovo-Severi certificate.
pub fn quintic_rank0_cs_levels() -> BTreeSet<u64> {
    parse_levels("46,59,60,62,66,69,70,71,78,87,94,95,104,119")
}

/// One row of the degree-5-to-P^1 exclusion table: level, genus, auxiliary
/// map (Hall divisor of the quotient, or None for a degree-4 pencil),
/// auxiliary degree, auxiliary target genus.
pub struct CsTableRow {
    pub level: u64,
    pub genus: u64,
    pub quotient: Option<u64>,
    pub aux_degree: u64,
    pub aux_genus: u64,
}

/// The P^1 table (26 rows). Genus column as corrected: the printed source
/// has 11 at level 92 where the genus formula (and the open-level table)
/// give 10.
pub fn cs_p1_rows() -> Vec<CsTableRow> {
    let rows: [(u64, u64, Option<u64>, u64, u64); 26] = [
        (46, 5, Some(23), 2, 0), (59, 5, Some(59), 2, 0),
        (60, 7, Some(15), 2, 1), (62, 7, Some(31), 2, 1),
        (66, 9, Some(11), 2, 2), (69, 7, Some(23), 2, 1),
        (70, 9, Some(35), 2, 2), (71, 6, Some(71), 2, 0),
        (78, 11, Some(39), 2, 2), (83, 7, Some(83), 2, 1),
        (87, 9, Some(87), 2, 2), (89, 7, Some(89), 2, 1),
        (92, 10, Some(23), 2, 1), (94, 11, Some(47), 2, 1),
        (95, 9, Some(95), 2, 1), (101, 8, Some(101), 2, 1),
        (104, 11, Some(104), 2, 3), (107, 9, Some(107), 2, 2),
        (111, 11, Some(111), 2, 2), (119, 11, Some(119), 2, 1),
        (131, 11, Some(131), 2, 1), (141, 15, Some(47), 2, 3),
        (142, 17, None, 4, 0), (143, 13, None, 4, 0),
        (167, 14, None, 4, 0), (191, 16, None, 4, 0),
    ];
    rows.iter()
        .map(|&(level, genus, quotient, aux_degree, aux_genus)| CsTableRow {
            level, genus, quotient, aux_degree, aux_genus,
        })
        .collect()
}

/// The elliptic-target table (8 rows).
pub fn cs_elliptic_rows() -> Vec<CsTableRow> {
    let rows: [(u64, u64, u64, u64); 8] = [
        (174, 27, 87, 8), (184, 21, 23, 5),
        (222, 35, 111, 10), (231, 29, 231, 9),
        (248, 29, 31, 9), (249, 27, 83, 9),
        (262, 32, 131, 9), (267, 29, 89, 9),
    ];
    rows.iter()
        .map(|&(level, genus, d, aux_genus)| CsTableRow {
            level,
            genus,
            quotient: Some(d),
            aux_degree: 2,
            aux_genus,
        })
        .collect()
}

/// Whether a degree-5 function on X_0(N) is known to exist / not exist,
/// for the open-level table's function column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum FunctionVerdict {
    Yes,
    No,
    Unknown,
}
