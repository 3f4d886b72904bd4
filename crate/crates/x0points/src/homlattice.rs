//! The positive-definite degree pairing on Hom(J_0(N), E) over the divisor
//! basis, and the exclusion of degree-5 morphisms X_0(N) -> E for
//! positive-rank E.
//!
//! For E of conductor M | N (with N/M squarefree or coprime to M), the
//! pairing of the degeneracy-map basis vectors indexed by divisors d1, d2
//! of N/M is
//!
//! ```text
//! <d1, d2> = a * psi(N)/psi(M*lcm/gcd) * deg f,
//! a = (sum_{m^2 | d1/g} mu(m) a_{d1/(g m^2)}) (sum_{m^2 | d2/g} mu(m) a_{d2/(g m^2)})
//! ```
//!
//! with g = gcd(d1, d2). Outside that regime only the divisibility of every
//! entry by deg f is available, which is all the exclusion argument needs:
//! a form whose values are all divisible by deg f attains 5 only if
//! deg f | 5, and deg f = 1 and deg f = 5 are both impossible for a
//! positive-rank target.

use crate::arith::{divisors, gcd, lcm, moebius, psi};
use crate::elliptic::{an, EllipticCurveRecord};
use crate::error::HomLatticeError;
use serde::Serialize;

/// Gram matrix of the degree pairing over the divisor basis of N/M,
/// divisors in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GramMatrix {
    pub level: u64,
    pub curve: String,
    pub conductor: u64,
    pub modular_degree: u64,
    pub basis: Vec<u64>,
    pub entries: Vec<Vec<i64>>,
}

/// The closed pairing formula is valid when N/M is squarefree or coprime
/// to M.
fn regime_valid(n: u64, m: u64) -> bool {
    let q = n / m;
    moebius(q) != 0 || gcd(q, m) == 1
}

/// The twisted-coefficient sum `sum_{m^2 | k} mu(m) a_{k/m^2}`.
fn twisted_coefficient(e: &EllipticCurveRecord, k: u64) -> i64 {
    let mut total = 0i64;
    let mut m = 1u64;
    while m * m <= k {
        if k % (m * m) == 0 {
            total += moebius(m) * an(e, k / (m * m));
        }
        m += 1;
    }
    total
}

/// One entry of the degree pairing. Requires the formula regime (N/M
/// squarefree or coprime to M) and a known modular degree.
pub fn gram_entry(
    e: &EllipticCurveRecord,
    n: u64,
    d1: u64,
    d2: u64,
) -> Result<i64, HomLatticeError> {
    let m = e.conductor;
    if n % m != 0 {
        return Err(HomLatticeError::ConductorDoesNotDivide { n, m });
    }
    let q = n / m;
    if q % d1 != 0 || q % d2 != 0 {
        return Err(HomLatticeError::InvariantViolation(format!(
            "{} or {} does not divide N/M = {}", d1, d2, q
        )));
    }
    if !regime_valid(n, m) {
        return Err(HomLatticeError::UnsupportedRegime { n, m, q });
    }
    let deg = e
        .modular_degree
        .ok_or_else(|| HomLatticeError::MissingDegree(e.label.clone()))?;
    let g = gcd(d1, d2);
    let l = lcm(d1, d2);
    let a = twisted_coefficient(e, d1 / g) * twisted_coefficient(e, d2 / g);
    let ratio_num = psi(n);
    let ratio_den = psi(m * l / g);
    debug_assert_eq!(ratio_num % ratio_den, 0);
    Ok(a * (ratio_num / ratio_den) as i64 * deg as i64)
}

/// Leading principal minors by exact fraction-free (Bareiss) elimination.
fn leading_minors(entries: &[Vec<i64>]) -> Vec<i128> {
    let n = entries.len();
    let mut m: Vec<Vec<i128>> = entries
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut minors = Vec::with_capacity(n);
    let mut prev = 1i128;
    for k in 0..n {
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        minors.push(m[k][k] * if k == 0 { 1 } else { 1 });
        if k > 0 {
            // Bareiss: m[k][k] after step k-1 is the k+1-st leading minor
        }
        prev = m[k][k];
        if prev == 0 {
            // remaining minors are not defined by this recurrence; pad zeros
            for _ in k + 1..n {
                minors.push(0);
            }
            break;
        }
    }
    minors
}

/// Full Gram matrix over the divisor basis, with the three structural
/// invariants validated: positive definiteness, divisibility of every entry
/// by deg f, and constant diagonal deg f * psi(N)/psi(M).
pub fn gram_matrix(e: &EllipticCurveRecord, n: u64) -> Result<GramMatrix, HomLatticeError> {
    if n >= 778 {
        return Err(HomLatticeError::LevelOutOfRange(n));
    }
    let m = e.conductor;
    if n % m != 0 {
        return Err(HomLatticeError::ConductorDoesNotDivide { n, m });
    }
    let deg = e
        .modular_degree
        .ok_or_else(|| HomLatticeError::MissingDegree(e.label.clone()))?;
    let basis = divisors(n / m);
    let k = basis.len();
    let mut entries = vec![vec![0i64; k]; k];
    for i in 0..k {
        for j in i..k {
            let v = gram_entry(e, n, basis[i], basis[j])?;
            entries[i][j] = v;
            entries[j][i] = v;
        }
    }
    let expected_diag = deg as i64 * (psi(n) / psi(m)) as i64;
    for i in 0..k {
        if entries[i][i] != expected_diag {
            return Err(HomLatticeError::InvariantViolation(format!(
                "diagonal entry {} at ({}, {}) differs from deg f * psi ratio {}",
                entries[i][i], n, e.label, expected_diag
            )));
        }
        for j in 0..k {
            if entries[i][j] % deg as i64 != 0 {
                return Err(HomLatticeError::InvariantViolation(format!(
                    "entry ({}, {}) = {} not divisible by deg f = {}",
                    i, j, entries[i][j], deg
                )));
            }
        }
    }
    for (idx, minor) in leading_minors(&entries).iter().enumerate() {
        if *minor <= 0 {
            return Err(HomLatticeError::InvariantViolation(format!(
                "leading minor {} of Gram({}, {}) is {} <= 0",
                idx + 1, n, e.label, minor
            )));
        }
    }
    Ok(GramMatrix {
        level: n,
        curve: e.label.clone(),
        conductor: m,
        modular_degree: deg,
        basis,
        entries,
    })
}

impl GramMatrix {
    /// Evaluate the quadratic form at an integer vector.
    pub fn eval(&self, v: &[i64]) -> i64 {
        let k = self.basis.len();
        let mut s = 0i64;
        for i in 0..k {
            for j in 0..k {
                s += self.entries[i][j] * v[i] * v[j];
            }
        }
        s
    }
}

/// Representability verdict for one target value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepresentationReport {
    pub target: u64,
    pub represented: bool,
    pub witness: Option<Vec<i64>>,
    /// how the finite search region was certified
    pub search_bound: String,
}

// exact nonnegative rational with i128 parts, just enough for the
// Cholesky-style pivots
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Frac {
    num: i128,
    den: i128, // > 0
}

impl Frac {
    fn new(num: i128, den: i128) -> Frac {
        debug_assert!(den != 0);
        let (mut n, mut d) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = gcd128(n.unsigned_abs(), d.unsigned_abs()) as i128;
        if g > 1 {
            n /= g;
            d /= g;
        }
        Frac { num: n, den: d }
    }
    fn from_int(v: i128) -> Frac {
        Frac { num: v, den: 1 }
    }
    fn add(self, o: Frac) -> Frac {
        Frac::new(self.num * o.den + o.num * self.den, self.den * o.den)
    }
    fn sub(self, o: Frac) -> Frac {
        Frac::new(self.num * o.den - o.num * self.den, self.den * o.den)
    }
    fn mul(self, o: Frac) -> Frac {
        Frac::new(self.num * o.num, self.den * o.den)
    }
    fn div(self, o: Frac) -> Frac {
        Frac::new(self.num * o.den, self.den * o.num)
    }
    fn is_positive(self) -> bool {
        self.num > 0
    }
    fn le(self, o: Frac) -> bool {
        self.num * o.den <= o.num * self.den
    }
}

fn gcd128(a: u128, b: u128) -> u128 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a.max(1)
}

/// Decide representability of every t <= max_t by exhaustive enumeration of
/// the ellipsoid {v : Q(v) <= max_t}, walked coordinate-by-coordinate with
/// exact rational Cholesky (LDL) pivots.
pub fn represented_values(q: &GramMatrix, max_t: u64) -> Vec<RepresentationReport> {
    let k = q.basis.len();
    // LDL decomposition over Q: Q(v) = sum_i d[i] (v_i + sum_{j>i} l[i][j] v_j)^2
    let mut d = vec![Frac::from_int(0); k];
    let mut l = vec![vec![Frac::from_int(0); k]; k];
    let mut a: Vec<Vec<Frac>> = q
        .entries
        .iter()
        .map(|r| r.iter().map(|&x| Frac::from_int(x as i128)).collect())
        .collect();
    for i in 0..k {
        d[i] = a[i][i];
        debug_assert!(d[i].is_positive(), "form not positive definite");
        for j in i + 1..k {
            l[i][j] = a[i][j].div(d[i]);
        }
        for r in i + 1..k {
            for c in i + 1..k {
                let delta = l[i][r].mul(l[i][c]).mul(d[i]);
                a[r][c] = a[r][c].sub(delta);
            }
        }
    }
    // depth-first enumeration from the last coordinate
    let mut found: Vec<Option<Vec<i64>>> = vec![None; (max_t + 1) as usize];
    let mut v = vec![0i64; k];
    enumerate(&d, &l, k, &mut v, Frac::from_int(max_t as i128), max_t, q, &mut found);
    (1..=max_t)
        .map(|t| RepresentationReport {
            target: t,
            represented: found[t as usize].is_some(),
            witness: found[t as usize].clone(),
            search_bound: format!(
                "rational LDL pivots certify |coordinate| bounds for Q(v) <= {}",
                max_t
            ),
        })
        .collect()
}

fn enumerate(
    d: &[Frac],
    l: &[Vec<Frac>],
    idx: usize,
    v: &mut Vec<i64>,
    remaining: Frac,
    max_t: u64,
    q: &GramMatrix,
    found: &mut Vec<Option<Vec<i64>>>,
) {
    if idx == 0 {
        let val = q.eval(v);
        debug_assert!(val >= 0);
        if val >= 1 && (val as u64) <= max_t && found[val as usize].is_none() {
            found[val as usize] = Some(v.clone());
        }
        return;
    }
    let i = idx - 1;
    // center c = sum_{j > i} l[i][j] v_j; need d_i (v_i + c)^2 <= remaining
    let mut c = Frac::from_int(0);
    for j in idx..v.len() {
        c = c.add(l[i][j].mul(Frac::from_int(v[j] as i128)));
    }
    let bound = remaining.div(d[i]); // (v_i + c)^2 <= bound
    // integer window around -c of width sqrt(bound)
    let center = (-c.num as f64 / c.den as f64).round() as i64;
    let radius = ((bound.num as f64 / bound.den as f64).max(0.0)).sqrt() as i64 + 2;
    for vi in center - radius..=center + radius {
        let shifted = Frac::from_int(vi as i128).add(c);
        let sq = shifted.mul(shifted);
        if !sq.mul(d[i]).le(remaining) {
            continue;
        }
        v[i] = vi;
        let next_remaining = remaining.sub(sq.mul(d[i]));
        enumerate(d, l, i, v, next_remaining, max_t, q, found);
        v[i] = 0;
    }
}

// ---------------------------------------------------------------------------
// pentaelliptic exclusion

/// Facts about the modular-degree-5 curve list used in the exclusion.
#[derive(Debug, Clone, Serialize)]
pub struct MdFiveFacts {
    pub labels: Vec<String>,
    pub all_rank_zero: bool,
    pub max_conductor: u64,
}

/// Per-curve route by which a degree-5 map X_0(N) -> E was excluded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ExclusionRoute {
    /// (a) the Gram form was computed and does not represent 5
    GramDoesNotRepresentFive { basis: Vec<u64>, entries: Vec<Vec<i64>> },
    /// (b) formula regime unavailable, but deg f is known and does not divide 5
    DivisibilityOutsideRegime { modular_degree: u64 },
    /// (b') deg f unknown, but deg f = 1 and deg f = 5 are both impossible
    /// (genus-one levels have rank 0; the degree-5 list is rank 0), so
    /// deg f does not divide 5
    DivisibilityByEliminatingOneAndFive,
    /// (c) deg f = 5 would put a positive-rank curve on the all-rank-0 list
    ModularDegreeFiveContradiction,
    /// (d) deg f = 1 would make X_0(M) a positive-rank elliptic curve
    ModularDegreeOneImpossible,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveExclusionTrace {
    pub curve: String,
    pub conductor: u64,
    pub regime_supported: bool,
    pub route: ExclusionRoute,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PentaellipticOutcome {
    Excluded,
    Undecided,
}

/// Decide whether X_0(N) can admit a degree-5 morphism to a positive-rank
/// elliptic curve, given one representative per positive-rank isogeny class
/// with conductor dividing N. Empty input is a vacuous exclusion.
pub fn pentaelliptic_exclusion(
    n: u64,
    curves: &[&EllipticCurveRecord],
    md5: &MdFiveFacts,
) -> (PentaellipticOutcome, Vec<CurveExclusionTrace>) {
    let mut traces = Vec::new();
    let mut all_excluded = true;
    for e in curves {
        let supported = regime_valid(n, e.conductor);
        let route = match e.modular_degree {
            Some(1) => Some(ExclusionRoute::ModularDegreeOneImpossible),
            Some(5) => {
                if md5.all_rank_zero && !md5.labels.iter().any(|l| l.starts_with(&e.label)) {
                    Some(ExclusionRoute::ModularDegreeFiveContradiction)
                } else {
                    None
                }
            }
            Some(deg) if supported => match gram_matrix(e, n) {
                Ok(g) => {
                    let reports = represented_values(&g, 5);
                    if reports[4].represented {
                        None
                    } else {
                        Some(ExclusionRoute::GramDoesNotRepresentFive {
                            basis: g.basis.clone(),
                            entries: g.entries.clone(),
                        })
                    }
                }
                Err(_) => {
                    if 5 % deg != 0 {
                        Some(ExclusionRoute::DivisibilityOutsideRegime { modular_degree: deg })
                    } else {
                        None
                    }
                }
            },
            Some(deg) => {
                if 5 % deg != 0 {
                    Some(ExclusionRoute::DivisibilityOutsideRegime { modular_degree: deg })
                } else {
                    None
                }
            }
            None => {
                if md5.all_rank_zero && e.rank > 0 {
                    Some(ExclusionRoute::DivisibilityByEliminatingOneAndFive)
                } else {
                    None
                }
            }
        };
        match route {
            Some(route) => traces.push(CurveExclusionTrace {
                curve: e.label.clone(),
                conductor: e.conductor,
                regime_supported: supported,
                route,
            }),
            None => {
                all_excluded = false;
            }
        }
    }
    let outcome = if all_excluded {
        PentaellipticOutcome::Excluded
    } else {
        PentaellipticOutcome::Undecided
    };
    (outcome, traces)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve_37a() -> EllipticCurveRecord {
        EllipticCurveRecord {
            label: "37.a".into(),
            conductor: 37,
            ainvs: [0, 0, 1, -1, 0],
            rank: 1,
            modular_degree: Some(2),
            provenance: "test".into(),
        }
    }

    #[test]
    fn gram_entries_37a_level_74() {
        let e = curve_37a();
        assert_eq!(gram_entry(&e, 74, 1, 1).unwrap(), 6);
        assert_eq!(gram_entry(&e, 74, 1, 2).unwrap(), -4);
        assert_eq!(gram_entry(&e, 74, 2, 2).unwrap(), 6);
    }

    #[test]
    fn gram_matrices_37a() {
        let e = curve_37a();
        let g74 = gram_matrix(&e, 74).unwrap();
        assert_eq!(g74.entries, vec![vec![6, -4], vec![-4, 6]]);
        let g37 = gram_matrix(&e, 37).unwrap();
        assert_eq!(g37.entries, vec![vec![2]]);
        // level 111: diagonal 2 * psi(111)/psi(37) = 8, off-diagonal 2 a_3 = -6
        let g111 = gram_matrix(&e, 111).unwrap();
        assert_eq!(g111.entries, vec![vec![8, -6], vec![-6, 8]]);
        // minimal nonzero value 4, consistent with a degree-4 map
        let reps = represented_values(&g111, 5);
        assert!(reps.iter().take(3).all(|r| !r.represented));
        assert!(reps[3].represented);
        assert!(!reps[4].represented);
    }

    #[test]
    fn representability_matches_naive_oracle() {
        let e = curve_37a();
        let g = gram_matrix(&e, 74).unwrap();
        let reports = represented_values(&g, 12);
        for r in &reports {
            // naive double loop oracle
            let mut naive = false;
            for x in -10i64..=10 {
                for y in -10i64..=10 {
                    if g.eval(&[x, y]) == r.target as i64 {
                        naive = true;
                    }
                }
            }
            assert_eq!(r.represented, naive, "t = {}", r.target);
            if let Some(w) = &r.witness {
                assert_eq!(g.eval(w), r.target as i64);
            }
        }
        // [[6,-4],[-4,6]]: all values even, 4 = Q(1,1)
        assert!(!reports[4].represented);
        assert!(reports[3].represented);
        assert_eq!(reports[3].witness, Some(vec![1, 1]));
    }

    #[test]
    fn exclusion_routes() {
        let e = curve_37a();
        let md5 = MdFiveFacts {
            labels: vec!["11.a1".into(), "11.a3".into(), "46.a2".into(),
                         "67.a1".into(), "89.b2".into()],
            all_rank_zero: true,
            max_conductor: 89,
        };
        // vacuous
        let (out, traces) = pentaelliptic_exclusion(109, &[], &md5);
        assert_eq!(out, PentaellipticOutcome::Excluded);
        assert!(traces.is_empty());
        // via Gram at 74
        let (out, traces) = pentaelliptic_exclusion(74, &[&e], &md5);
        assert_eq!(out, PentaellipticOutcome::Excluded);
        assert!(matches!(traces[0].route, ExclusionRoute::GramDoesNotRepresentFive { .. }));
        // unknown degree falls back to eliminating 1 and 5
        let mut e2 = curve_37a();
        e2.modular_degree = None;
        let (out, traces) = pentaelliptic_exclusion(74, &[&e2], &md5);
        assert_eq!(out, PentaellipticOutcome::Excluded);
        assert!(matches!(traces[0].route, ExclusionRoute::DivisibilityByEliminatingOneAndFive));
    }

    #[test]
    fn unsupported_regime_is_detected() {
        // conductor 58 inside N = 232 = 4 * 58: N/M = 4 is neither
        // squarefree nor coprime to 58
        let e = EllipticCurveRecord {
            label: "58.a".into(),
            conductor: 58,
            ainvs: [1, -1, 0, -1, 1],
            rank: 1,
            modular_degree: Some(4),
            provenance: "test".into(),
        };
        assert!(matches!(
            gram_entry(&e, 232, 1, 2),
            Err(HomLatticeError::UnsupportedRegime { .. })
        ));
        let md5 = MdFiveFacts { labels: vec![], all_rank_zero: true, max_conductor: 89 };
        let (out, traces) = pentaelliptic_exclusion(232, &[&e], &md5);
        assert_eq!(out, PentaellipticOutcome::Excluded);
        assert!(!traces[0].regime_supported);
        assert!(matches!(traces[0].route,
            ExclusionRoute::DivisibilityOutsideRegime { modular_degree: 4 }));
    }

    #[test]
    fn out_of_range_level_rejected() {
        let e = curve_37a();
        assert!(matches!(gram_matrix(&e, 777 + 37), Err(HomLatticeError::LevelOutOfRange(_))));
    }
}
