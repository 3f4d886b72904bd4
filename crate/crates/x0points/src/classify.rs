//! The decision engine: composes the exclusion filters and bundled facts
//! into per-level verdicts with replayable proof traces.
//!
//! Density-degree-5 classification walks the case split: levels with
//! infinitely many points of degree <= 4 are out of scope (n/a); the
//! candidate filter (gonality >= 6 and genus >= 12, backed by the
//! pentaelliptic sweep) removes everything outside a 17-level set; the
//! remaining candidates fall to one of four rules (rank-0 Jacobian,
//! dimension bound on positive-rank subvarieties, Debarre-Fahlaoui
//! exclusion, or the ingested symmetric-power verdicts), with the unique
//! gonality-5 level as the only "yes".

use crate::csfilter::{find_cs_exclusion, CsCertificate};
use crate::elliptic::CurveTable;
use crate::error::ClassifyError;
use crate::facts::{self, Deg5FunctionSource, FunctionVerdict};
use crate::homlattice::{pentaelliptic_exclusion, CurveExclusionTrace, MdFiveFacts,
                        PentaellipticOutcome};
use crate::ingest::{LmfdbClient, NewformFactor};
use crate::invariants::{genus, level_invariants, quotient_genus, star_quotient_genus,
                        GonalityTable};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Density-degree-5 verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Density5 {
    Yes,
    No,
    NotApplicable,
}

/// Quintic-point verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Quintic {
    Infinite,
    Finite,
    Open,
}

/// One applied rule, with enough inputs to replay it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Rule {
    /// membership in the degree <= 4 infinite lists
    DegreeLe4Membership { level: u64, member: bool },
    /// computed genus compared against a threshold
    GenusAtLeast { level: u64, genus: u64, threshold: u64 },
    /// merged gonality fact compared against a threshold
    GonalityAtLeast { level: u64, lower: u64, threshold: u64 },
    /// the cited degree-5 map to the line at the gonality-5 level
    GonalityFiveWitness { level: u64 },
    /// no degree-5 map to a positive-rank elliptic curve (quadratic-form sweep)
    PentaellipticExcluded { level: u64, curves_checked: Vec<String> },
    /// every isogeny factor of J_0(N) has analytic rank 0
    RankZeroJacobian { level: u64, factor_count: usize },
    /// every positive-analytic-rank simple factor has dimension > 2
    DimensionBound { level: u64, positive_factors: Vec<(String, u64)> },
    /// genus >= 9, gonality >= 6, and no positive-rank elliptic curve of
    /// dividing conductor: the symmetric-square alternative needs one
    DebarreFahlaouiExcluded { level: u64 },
    /// ingested verdict: the degree-5 image carries no positive-rank translate
    ExternalTranslateVerdict { level: u64 },
    /// a degree-5 function exists
    Deg5Function { level: u64, source: Deg5FunctionSource },
    /// a Castelnuovo-Severi certificate
    CastelnuovoSeveri(CsCertificate),
    /// finiteness of degree <= 4 points (complement of the quartic list)
    DegreeLe4Finite { level: u64 },
}

/// A trace record: the rule, its rendered output, a citation tag, and
/// whether positivity of an analytic rank was consumed without an
/// algebraic-rank confirmation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RuleRecord {
    pub rule: Rule,
    pub output: String,
    pub citation: &'static str,
    pub assumes_bsd: bool,
}

pub type ProofTrace = Vec<RuleRecord>;

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub level: u64,
    pub density_degree_5: Density5,
    pub quintic_points: Quintic,
    pub trace: ProofTrace,
    pub assumptions: Vec<String>,
}

/// Everything the pure classification functions need, prefetched so that
/// per-level work can run in parallel.
pub struct Engine {
    pub curves: CurveTable,
    pub gonality: GonalityTable,
    pub factors: BTreeMap<u64, Vec<NewformFactor>>,
    pub md5: MdFiveFacts,
    quartic: BTreeSet<u64>,
    deg5_functions: BTreeMap<u64, Deg5FunctionSource>,
    rank0_cs: BTreeSet<u64>,
    open30: BTreeSet<u64>,
}

/// Levels whose factor tables the engine prefetches.
pub fn levels_needing_factors() -> Vec<u64> {
    let mut set: BTreeSet<u64> = facts::expected_candidates().into_iter().collect();
    set.extend(facts::quintic_rank0_cs_levels());
    set.extend(table1_levels());
    set.extend([1, 96, 98, 100]);
    set.into_iter().collect()
}

/// The open levels with a positive-rank factor (the rows of the report
/// table); the three rank-0 open levels have no rows.
pub fn table1_levels() -> Vec<u64> {
    facts::expected_quintic_open()
        .into_iter()
        .filter(|n| ![96, 98, 100].contains(n))
        .collect()
}

impl Engine {
    /// Prefetch all data the classification needs from the client.
    pub fn prepare(client: &mut LmfdbClient) -> Result<Engine, ClassifyError> {
        let curves = CurveTable::bundled();
        let gonality = GonalityTable::bundled();
        let mut factors = BTreeMap::new();
        for n in levels_needing_factors() {
            factors.insert(n, client.fetch_newform_factors(n)?);
        }
        let (_, md5) = client.modular_degree_five_curves()?;
        Ok(Engine {
            curves,
            gonality,
            factors,
            md5,
            quartic: facts::quartic_infinite(),
            deg5_functions: facts::deg5_function_facts().into_iter().collect(),
            rank0_cs: facts::quintic_rank0_cs_levels(),
            open30: facts::expected_quintic_open(),
        })
    }

    fn factors_of(&self, n: u64) -> Option<&[NewformFactor]> {
        self.factors.get(&n).map(|v| v.as_slice())
    }

    fn gonality_lower(&self, n: u64) -> u64 {
        self.gonality.fact(n).map(|f| f.lower).unwrap_or(1)
    }

    // -- individual rules ---------------------------------------------------

    fn degree_le4_record(&self, n: u64) -> RuleRecord {
        let member = self.quartic.contains(&n);
        RuleRecord {
            rule: Rule::DegreeLe4Membership { level: n, member },
            output: format!("degree<=4 points {}", if member { "infinite" } else { "finite" }),
            citation: "cited-degree-le4-classifications",
            assumes_bsd: false,
        }
    }

    /// rank-0 rule: every factor has analytic rank 0 and gonality >= 6
    fn rank0_rule(&self, n: u64) -> Option<RuleRecord> {
        let factors = self.factors_of(n)?;
        if factors.iter().all(|f| f.analytic_rank == 0) && self.gonality_lower(n) >= 6 {
            Some(RuleRecord {
                rule: Rule::RankZeroJacobian { level: n, factor_count: factors.len() },
                output: format!(
                    "all {} isogeny factors of J_0({}) have analytic rank 0; gonality >= 6",
                    factors.len(), n
                ),
                citation: "cited-rank-zero-jacobian",
                assumes_bsd: false,
            })
        } else {
            None
        }
    }

    /// dimension-bound rule: genus >= 6, gonality >= 6, and every
    /// positive-analytic-rank simple factor has dimension > 2
    fn dim_bound_rule(&self, n: u64) -> Option<RuleRecord> {
        if genus(n) < 6 || self.gonality_lower(n) < 6 {
            return None;
        }
        let factors = self.factors_of(n)?;
        let positive: Vec<(String, u64)> = factors
            .iter()
            .filter(|f| f.analytic_rank > 0)
            .map(|f| (f.label.clone(), f.dim))
            .collect();
        if positive.iter().all(|&(_, d)| d > 2) {
            Some(RuleRecord {
                rule: Rule::DimensionBound { level: n, positive_factors: positive.clone() },
                output: format!(
                    "every positive-rank simple factor of J_0({}) has dimension > 2 ({:?}); \
                     a translate inside the degree-5 image would have dimension <= 2",
                    n, positive
                ),
                citation: "cited-symmetric-power-dimension-bound",
                assumes_bsd: false,
            })
        } else {
            None
        }
    }

    /// Debarre-Fahlaoui exclusion: genus >= 9, gonality >= 6, no
    /// positive-rank elliptic curve of conductor dividing N
    fn df_rule(&self, n: u64) -> Option<RuleRecord> {
        if genus(n) < 9 || self.gonality_lower(n) < 6 {
            return None;
        }
        let has_positive_elliptic = self
            .curves
            .positive_rank_dividing(n)
            .iter()
            .any(|c| c.rank > 0);
        if has_positive_elliptic {
            return None;
        }
        // the alternative would force a nonconstant map to a positive-rank
        // elliptic curve of dividing conductor
        Some(RuleRecord {
            rule: Rule::DebarreFahlaouiExcluded { level: n },
            output: format!(
                "no positive-rank elliptic curve has conductor dividing {}; a curve on the \
                 symmetric square of one would map to it",
                n
            ),
            citation: "cited-debarre-fahlaoui-alternative",
            assumes_bsd: false,
        })
    }

    fn external_rule(&self, n: u64) -> Option<RuleRecord> {
        if facts::external_translate_verdicts().contains(&n) {
            Some(RuleRecord {
                rule: Rule::ExternalTranslateVerdict { level: n },
                output: format!(
                    "ingested verdict: the degree-5 image of X_0({}) contains no translate of a \
                     positive-rank abelian variety",
                    n
                ),
                citation: "ingested-symmetric-power-computation",
                assumes_bsd: false,
            })
        } else {
            None
        }
    }

    fn pentaelliptic_record(&self, n: u64) -> (PentaellipticOutcome, RuleRecord, Vec<CurveExclusionTrace>) {
        let curves = self.curves.positive_rank_dividing(n);
        let (outcome, traces) = pentaelliptic_exclusion(n, &curves, &self.md5);
        let labels: Vec<String> = curves.iter().map(|c| c.label.clone()).collect();
        let record = RuleRecord {
            rule: Rule::PentaellipticExcluded { level: n, curves_checked: labels.clone() },
            output: format!(
                "no degree-5 map to a positive-rank elliptic curve (checked {:?}): {:?}",
                labels, outcome
            ),
            citation: "degree-pairing-sweep",
            assumes_bsd: false,
        };
        (outcome, record, traces)
    }

    // -- candidate filter ---------------------------------------------------

    /// Is the level removed by the high-gonality high-genus filter?
    fn candidate_excluded(&self, n: u64) -> Option<Vec<RuleRecord>> {
        let g = genus(n);
        let lower = self.gonality_lower(n);
        if g >= 12 && lower >= 6 {
            Some(vec![
                RuleRecord {
                    rule: Rule::GenusAtLeast { level: n, genus: g, threshold: 12 },
                    output: format!("genus {} >= 12", g),
                    citation: "genus-formula",
                    assumes_bsd: false,
                },
                RuleRecord {
                    rule: Rule::GonalityAtLeast { level: n, lower, threshold: 6 },
                    output: format!("gonality >= {} >= 6", lower),
                    citation: "cited-gonality-tables",
                    assumes_bsd: false,
                },
            ])
        } else {
            None
        }
    }

    /// The candidate list: levels that survive every filter. Diverging from
    /// the expected 17-level list is an error.
    pub fn candidate_levels_density5(&self) -> Result<Vec<u64>, ClassifyError> {
        let mut out = Vec::new();
        for n in 1..=191u64 {
            if self.quartic.contains(&n) {
                continue;
            }
            if self.candidate_excluded(n).is_some() {
                continue;
            }
            out.push(n);
        }
        if out != facts::expected_candidates() {
            return Err(ClassifyError::Divergence(format!(
                "candidate list {:?} differs from the expected 17 levels", out
            )));
        }
        Ok(out)
    }

    // -- main classifications -----------------------------------------------

    pub fn classify_density5(&self, n: u64) -> Result<(Density5, ProofTrace), ClassifyError> {
        let mut trace = vec![self.degree_le4_record(n)];
        if self.quartic.contains(&n) {
            return Ok((Density5::NotApplicable, trace));
        }
        if n == 109 {
            trace.push(RuleRecord {
                rule: Rule::GonalityFiveWitness { level: n },
                output: "a degree-5 map to the line exists (gonality 5)".into(),
                citation: "cited-gonality-tables",
                assumes_bsd: false,
            });
            return Ok((Density5::Yes, trace));
        }
        if let Some(mut records) = self.candidate_excluded(n) {
            trace.append(&mut records);
            // which mechanism covers the absence of positive-rank degree-5
            // targets at this level
            if n < 468 {
                let (outcome, record, _) = self.pentaelliptic_record(n);
                if outcome != PentaellipticOutcome::Excluded {
                    return Err(ClassifyError::Divergence(format!(
                        "pentaelliptic sweep undecided at {}", n
                    )));
                }
                trace.push(record);
            } else {
                trace.push(RuleRecord {
                    rule: Rule::GonalityAtLeast {
                        level: n,
                        lower: crate::invariants::best_ogg_degree_bound(n)
                            .max(crate::invariants::abramovich_gonality_bound(n)),
                        threshold: 6,
                    },
                    output: "point-count and eigenvalue bounds exceed degree 5".into(),
                    citation: "bound-filters",
                    assumes_bsd: false,
                });
            }
            return Ok((Density5::No, trace));
        }
        // candidate level: apply the four rules in order, recording the
        // first as the verdict and the rest as corroboration
        let rules = [
            self.rank0_rule(n),
            self.dim_bound_rule(n),
            self.df_rule(n),
            self.external_rule(n),
        ];
        let mut applied: Vec<RuleRecord> = rules.into_iter().flatten().collect();
        if applied.is_empty() {
            return Err(ClassifyError::Open(n));
        }
        trace.append(&mut applied);
        Ok((Density5::No, trace))
    }

    fn quintic_for(&self, n: u64, density: Density5, density_trace: &ProofTrace) -> Result<(Quintic, ProofTrace), ClassifyError> {
        if let Some(src) = self.deg5_functions.get(&n) {
            return Ok((
                Quintic::Infinite,
                vec![RuleRecord {
                    rule: Rule::Deg5Function { level: n, source: *src },
                    output: format!("degree-5 function exists ({:?})", src),
                    citation: "cited-degree5-function-facts",
                    assumes_bsd: false,
                }],
            ));
        }
        if !self.quartic.contains(&n) {
            // finitely many degree <= 4 points and density degree != 5
            let mut trace = vec![RuleRecord {
                rule: Rule::DegreeLe4Finite { level: n },
                output: "finitely many points of degree <= 4".into(),
                citation: "cited-degree-le4-classifications",
                assumes_bsd: false,
            }];
            debug_assert_eq!(density, Density5::No);
            trace.extend(density_trace.iter().cloned());
            return Ok((Quintic::Finite, trace));
        }
        if self.rank0_cs.contains(&n) {
            let factors = self
                .factors_of(n)
                .ok_or_else(|| ClassifyError::Divergence(format!("no factor table for {}", n)))?;
            if !factors.iter().all(|f| f.analytic_rank == 0) {
                return Err(ClassifyError::Divergence(format!(
                    "expected rank-0 Jacobian at {}", n
                )));
            }
            let cert = find_cs_exclusion(n, 0, None).ok_or_else(|| {
                ClassifyError::Divergence(format!("no CS certificate for {}", n))
            })?;
            let trace = vec![
                RuleRecord {
                    rule: Rule::RankZeroJacobian { level: n, factor_count: factors.len() },
                    output: format!("J_0({}) has rank 0", n),
                    citation: "cited-rank-zero-jacobian",
                    assumes_bsd: false,
                },
                RuleRecord {
                    rule: Rule::CastelnuovoSeveri(cert.clone()),
                    output: format!(
                        "no degree-5 map to the line: genus {} > bound {}", cert.genus, cert.bound
                    ),
                    citation: "castelnuovo-severi",
                    assumes_bsd: false,
                },
            ];
            return Ok((Quintic::Finite, trace));
        }
        if self.open30.contains(&n) {
            return Ok((Quintic::Open, Vec::new()));
        }
        Err(ClassifyError::Divergence(format!(
            "level {} escapes the quintic partition", n
        )))
    }

    pub fn classify(&self, n: u64) -> Result<Verdict, ClassifyError> {
        let (density, dtrace) = self.classify_density5(n)?;
        let (quintic, mut qtrace) = self.quintic_for(n, density, &dtrace)?;
        let mut trace = dtrace;
        trace.append(&mut qtrace);
        // dedupe identical records picked up by both halves
        let mut seen = Vec::new();
        trace.retain(|r| {
            let key = format!("{:?}", r.rule);
            if seen.contains(&key) {
                false
            } else {
                seen.push(key);
                true
            }
        });
        let assumptions = trace
            .iter()
            .filter(|r| r.assumes_bsd)
            .map(|r| format!("analytic rank used as rank in: {}", r.output))
            .collect();
        Ok(Verdict {
            level: n,
            density_degree_5: density,
            quintic_points: quintic,
            trace,
            assumptions,
        })
    }

    pub fn classify_range(&self, lo: u64, hi: u64) -> Result<Vec<Verdict>, ClassifyError> {
        let levels: Vec<u64> = (lo..=hi).collect();
        #[cfg(feature = "parallel")]
        let iter = levels.par_iter();
        #[cfg(not(feature = "parallel"))]
        let iter = levels.iter();
        iter.map(|&n| self.classify(n)).collect()
    }

    // -- sweep ----------------------------------------------------------------

    /// The pentaelliptic sweep: every level below the cutoff must come back
    /// EXCLUDED.
    pub fn sweep_pentaelliptic(&self, max: u64) -> Vec<SweepRow> {
        let levels: Vec<u64> = (1..=max).collect();
        #[cfg(feature = "parallel")]
        let iter = levels.par_iter();
        #[cfg(not(feature = "parallel"))]
        let iter = levels.iter();
        iter.map(|&n| {
            let curves = self.curves.positive_rank_dividing(n);
            let (outcome, traces) = pentaelliptic_exclusion(n, &curves, &self.md5);
            SweepRow { level: n, outcome, traces }
        })
        .collect()
    }

    /// Strictly sequential sweep, for comparison benchmarks.
    pub fn sweep_pentaelliptic_sequential(&self, max: u64) -> Vec<SweepRow> {
        (1..=max)
            .map(|n| {
                let curves = self.curves.positive_rank_dividing(n);
                let (outcome, traces) = pentaelliptic_exclusion(n, &curves, &self.md5);
                SweepRow { level: n, outcome, traces }
            })
            .collect()
    }

    // -- the open-level table -------------------------------------------------

    pub fn render_table1(&self) -> Result<Vec<Table1Row>, ClassifyError> {
        let mut rows = Vec::new();
        for n in table1_levels() {
            let factors = self
                .factors_of(n)
                .ok_or_else(|| ClassifyError::Divergence(format!("no factor table for {}", n)))?;
            let function = self.function_verdict(n);
            let mut positive: Vec<&NewformFactor> =
                factors.iter().filter(|f| f.analytic_rank > 0).collect();
            positive.sort_by_key(|f| f.label.clone());
            for f in positive {
                let multiplicity = LmfdbClient::multiplicity(n, f)
                    .map_err(ClassifyError::Ingest)?;
                let w4 = self.w4_flag(n, f, multiplicity)?;
                rows.push(Table1Row {
                    level: n,
                    genus: genus(n),
                    deg5_function: function,
                    factor: f.label.clone(),
                    dim: f.dim,
                    multiplicity,
                    in_w4: w4,
                    assumes_bsd: true,
                });
            }
        }
        Ok(rows)
    }

    /// Degree-5 function column of the open-level table.
    pub fn function_verdict(&self, n: u64) -> FunctionVerdict {
        if self.deg5_functions.contains_key(&n) {
            return FunctionVerdict::Yes;
        }
        let fact = match self.gonality.fact(n) {
            Ok(f) => f,
            Err(_) => return FunctionVerdict::Unknown,
        };
        if fact.lower >= 6 {
            return FunctionVerdict::No;
        }
        let pencil = match fact.upper {
            Some(4) => Some(4),
            _ => None,
        };
        if find_cs_exclusion(n, 0, pencil).is_some() {
            return FunctionVerdict::No;
        }
        FunctionVerdict::Unknown
    }

    /// The last column: is a translate of the factor known inside the
    /// degree-4 image?
    fn w4_flag(&self, n: u64, f: &NewformFactor, multiplicity: u64) -> Result<W4Flag, ClassifyError> {
        // elliptic factor of conductor N with modular degree <= 4
        if f.dim == 1 && f.level == n {
            if let Some(curve) = self.curves.by_label(&class_label(&f.label)) {
                if matches!(curve.modular_degree, Some(d) if d <= 4) {
                    return Ok(W4Flag::ModularDegreeAtMost4);
                }
            }
        }
        // elliptic factor of smaller conductor with multiplicity 2, where
        // the full Atkin-Lehner quotient is an isogenous elliptic curve
        // under a degree-4 map
        if f.dim == 1 && f.level < n && multiplicity == 2 && level_invariants(n).omega == 2 {
            if star_quotient_genus(n).map_err(|e| ClassifyError::Divergence(e.to_string()))? == 1 {
                return Ok(W4Flag::StarQuotientElliptic);
            }
        }
        // dimension-2 factor isogenous to the Fricke-quotient Jacobian of
        // genus 2 (odd analytic rank places it in the plus part)
        if f.dim == 2 && f.level == n && f.analytic_rank % 2 == 1 {
            if quotient_genus(n, n).map_err(|e| ClassifyError::Divergence(e.to_string()))? == 2 {
                return Ok(W4Flag::FrickeGenusTwo);
            }
        }
        Ok(W4Flag::Unknown)
    }

    // -- replay ----------------------------------------------------------------

    /// Re-execute a recorded rule and reproduce its rendered output.
    pub fn replay(&self, record: &RuleRecord) -> Result<String, ClassifyError> {
        let out = match &record.rule {
            Rule::DegreeLe4Membership { level, .. } => self.degree_le4_record(*level).output,
            Rule::GenusAtLeast { level, threshold, .. } => {
                let g = genus(*level);
                RuleRecord {
                    rule: Rule::GenusAtLeast { level: *level, genus: g, threshold: *threshold },
                    output: format!("genus {} >= {}", g, threshold),
                    citation: "",
                    assumes_bsd: false,
                }
                .output
            }
            Rule::GonalityAtLeast { level, threshold, .. } => {
                let lower = self.gonality_lower(*level);
                format!("gonality >= {} >= {}", lower, threshold)
            }
            Rule::GonalityFiveWitness { .. } => {
                "a degree-5 map to the line exists (gonality 5)".into()
            }
            Rule::PentaellipticExcluded { level, .. } => self.pentaelliptic_record(*level).1.output,
            Rule::RankZeroJacobian { level, .. } => self
                .rank0_rule(*level)
                .map(|r| r.output)
                .unwrap_or_else(|| format!("J_0({}) has rank 0", level)),
            Rule::DimensionBound { level, .. } => self
                .dim_bound_rule(*level)
                .ok_or_else(|| ClassifyError::Divergence(format!("dim rule gone at {}", level)))?
                .output,
            Rule::DebarreFahlaouiExcluded { level } => self
                .df_rule(*level)
                .ok_or_else(|| ClassifyError::Divergence(format!("df rule gone at {}", level)))?
                .output,
            Rule::ExternalTranslateVerdict { level } => self
                .external_rule(*level)
                .ok_or_else(|| ClassifyError::Divergence(format!("external verdict gone at {}", level)))?
                .output,
            Rule::Deg5Function { level, .. } => {
                let src = self.deg5_functions.get(level).ok_or_else(|| {
                    ClassifyError::Divergence(format!("function fact gone at {}", level))
                })?;
                format!("degree-5 function exists ({:?})", src)
            }
            Rule::CastelnuovoSeveri(cert) => {
                let again = find_cs_exclusion(cert.level, cert.candidate_target_genus, match cert.aux {
                    crate::csfilter::AuxMap::GonalityPencil { degree } => Some(degree),
                    _ => None,
                })
                .ok_or_else(|| ClassifyError::Divergence(format!("CS cert gone at {}", cert.level)))?;
                format!(
                    "no degree-5 map to the line: genus {} > bound {}", again.genus, again.bound
                )
            }
            Rule::DegreeLe4Finite { .. } => "finitely many points of degree <= 4".into(),
        };
        Ok(out)
    }
}

fn class_label(newform_label: &str) -> String {
    // "37.2.a.a" -> "37.a"
    let parts: Vec<&str> = newform_label.split('.').collect();
    if parts.len() == 4 {
        format!("{}.{}", parts[0], parts[3])
    } else {
        newform_label.to_string()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub level: u64,
    pub outcome: PentaellipticOutcome,
    pub traces: Vec<CurveExclusionTrace>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum W4Flag {
    /// elliptic curve of conductor N with modular degree <= 4
    ModularDegreeAtMost4,
    /// multiplicity-2 factor isogenous to the full Atkin-Lehner quotient
    StarQuotientElliptic,
    /// dimension-2 factor isogenous to the genus-2 Fricke quotient Jacobian
    FrickeGenusTwo,
    Unknown,
}

#[derive(Debug, Clone, Serialize)]
pub struct Table1Row {
    pub level: u64,
    pub genus: u64,
    pub deg5_function: FunctionVerdict,
    pub factor: String,
    pub dim: u64,
    pub multiplicity: u64,
    pub in_w4: W4Flag,
    /// the positivity of this row's analytic rank is an input, not a
    /// verified algebraic rank
    pub assumes_bsd: bool,
}
