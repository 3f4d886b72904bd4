//! Elliptic curves over Q as data: long Weierstrass models, point counts
//! over prime fields, and the Hecke eigenvalues a_n of the attached
//! newform.
//!
//! Good primes use exhaustive counting (primes here stay small); bad primes
//! get a_p from the nonsingular point count on the reduced model:
//! a_p = p - #E^ns(F_p), which is 1 / -1 / 0 for split multiplicative,
//! non-split multiplicative, additive reduction.

use crate::arith::{factorize, gcd};
use crate::error::EllipticError;
use serde::Serialize;

/// A bundled elliptic curve: one representative per isogeny class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EllipticCurveRecord {
    /// LMFDB-style label (class labels like "37.a" or curve labels like "11.a1").
    pub label: String,
    pub conductor: u64,
    /// Long Weierstrass coefficients [a1, a2, a3, a4, a6].
    pub ainvs: [i64; 5],
    /// Mordell-Weil rank (analytic rank for the bundled data; they agree in
    /// the ranges used here).
    pub rank: u64,
    /// Modular degree of the optimal curve in the class, when known.
    pub modular_degree: Option<u64>,
    /// Data provenance tag.
    pub provenance: String,
}

impl EllipticCurveRecord {
    pub fn discriminant(&self) -> i64 {
        let [a1, a2, a3, a4, a6] = self.ainvs;
        let b2 = a1 * a1 + 4 * a2;
        let b4 = 2 * a4 + a1 * a3;
        let b6 = a3 * a3 + 4 * a6;
        let b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    }

    pub fn has_good_reduction(&self, p: u64) -> bool {
        self.conductor % p != 0
    }
}

/// #E(F_p) including the point at infinity, for a prime of good reduction,
/// by solving the y-quadratic at each x.
pub fn count_points_mod_p(e: &EllipticCurveRecord, p: u64) -> Result<u64, EllipticError> {
    if !e.has_good_reduction(p) {
        return Err(EllipticError::BadReduction { label: e.label.clone(), p });
    }
    Ok(count_points_any(&e.ainvs, p))
}

fn modp(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

fn legendre(a: u64, p: u64) -> i64 {
    // p odd prime; a reduced mod p
    if a == 0 {
        return 0;
    }
    let mut r = 1u64;
    let mut base = a % p;
    let mut exp = (p - 1) / 2;
    while exp > 0 {
        if exp & 1 == 1 {
            r = r * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    if r == 1 {
        1
    } else {
        -1
    }
}

fn count_points_any(a: &[i64; 5], p: u64) -> u64 {
    let [a1, a2, a3, a4, a6] = *a;
    let mut count = 1u64; // infinity
    if p == 2 {
        for x in 0..2i64 {
            for y in 0..2i64 {
                let f = y * y + a1 * x * y + a3 * y - (x * x * x + a2 * x * x + a4 * x + a6);
                if f.rem_euclid(2) == 0 {
                    count += 1;
                }
            }
        }
        return count;
    }
    for x in 0..p {
        let x = x as i64;
        let rhs = modp(x * x * x + a2 * x * x + a4 * x + a6, p);
        let lin = modp(a1 * x + a3, p);
        // y^2 + lin*y = rhs  <=>  (2y + lin)^2 = lin^2 + 4 rhs
        let d = (lin * lin + 4 * rhs) % p;
        match legendre(d, p) {
            0 => count += 1,
            1 => count += 2,
            _ => {}
        }
    }
    count
}

/// Hecke eigenvalue a_p. Good reduction: p + 1 - #E(F_p). Bad reduction:
/// p - #E^ns(F_p) (counting nonsingular points of the reduced model).
pub fn ap(e: &EllipticCurveRecord, p: u64) -> i64 {
    if e.has_good_reduction(p) {
        return p as i64 + 1 - count_points_any(&e.ainvs, p) as i64;
    }
    let [a1, a2, a3, a4, a6] = e.ainvs.map(|x| modp(x, p) as i64);
    let pi = p as i64;
    // locate the singular point, then count the others
    let mut singular = None;
    let mut count = 1i64; // infinity is always nonsingular
    for x in 0..pi {
        for y in 0..pi {
            let f = y * y + a1 * x * y + a3 * y - (x * x * x + a2 * x * x + a4 * x + a6);
            if f.rem_euclid(pi) != 0 {
                continue;
            }
            let fx = a1 * y - (3 * x * x + 2 * a2 * x + a4);
            let fy = 2 * y + a1 * x + a3;
            if fx.rem_euclid(pi) == 0 && fy.rem_euclid(pi) == 0 {
                singular = Some((x, y));
            } else {
                count += 1;
            }
        }
    }
    debug_assert!(singular.is_some(), "bad prime without singular point");
    pi - count
}

/// Hecke eigenvalue a_n: multiplicative, with the prime-power recursion
/// a_{p^{k+1}} = a_p a_{p^k} - p a_{p^{k-1}} at good p and a_{p^k} = a_p^k
/// at bad p.
pub fn an(e: &EllipticCurveRecord, n: u64) -> i64 {
    assert!(n >= 1);
    let mut value = 1i64;
    for (p, k) in factorize(n) {
        let apv = ap(e, p);
        let good = e.has_good_reduction(p);
        let mut prev = 1i64; // a_{p^0}
        let mut cur = apv; // a_{p^1}
        for _ in 1..k {
            let next = if good {
                apv * cur - p as i64 * prev
            } else {
                apv * cur
            };
            prev = cur;
            cur = next;
        }
        value *= cur;
    }
    value
}

/// #E(F_{p^2}) via the Frobenius trace identity
/// #E(F_{p^2}) = p^2 + 1 - (a_p^2 - 2p).
pub fn count_points_over_p2(e: &EllipticCurveRecord, p: u64) -> Result<u64, EllipticError> {
    if !e.has_good_reduction(p) {
        return Err(EllipticError::BadReduction { label: e.label.clone(), p });
    }
    let a = ap(e, p);
    Ok((p * p + 1) as u64 + 2 * p - (a * a) as u64)
}

// ---------------------------------------------------------------------------
// bundled curve table

/// The bundled curve file: one record per line,
/// `label conductor a1 a2 a3 a4 a6 rank modular_degree provenance`.
pub struct CurveTable {
    curves: Vec<EllipticCurveRecord>,
}

impl CurveTable {
    pub fn from_str(data: &str) -> Self {
        let mut curves = Vec::new();
        for line in data.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let c: Vec<&str> = line.split_whitespace().collect();
            let parse = |s: &str| -> i64 { s.parse().expect("integer field") };
            curves.push(EllipticCurveRecord {
                label: c[0].to_string(),
                conductor: c[1].parse().expect("conductor"),
                ainvs: [parse(c[2]), parse(c[3]), parse(c[4]), parse(c[5]), parse(c[6])],
                rank: c[7].parse().expect("rank"),
                modular_degree: match c[8] {
                    "?" => None,
                    v => Some(v.parse().expect("degree")),
                },
                provenance: c[9].to_string(),
            });
        }
        CurveTable { curves }
    }

    pub fn bundled() -> Self {
        Self::from_str(include_str!("../data/curves.tsv"))
    }

    pub fn all(&self) -> &[EllipticCurveRecord] {
        &self.curves
    }

    pub fn by_label(&self, label: &str) -> Option<&EllipticCurveRecord> {
        self.curves.iter().find(|c| c.label == label)
    }

    /// One representative per positive-rank isogeny class with conductor
    /// dividing n.
    pub fn positive_rank_dividing(&self, n: u64) -> Vec<&EllipticCurveRecord> {
        self.curves
            .iter()
            .filter(|c| c.rank > 0 && n % c.conductor == 0 && !c.label.contains('*'))
            .collect()
    }
}

/// Model integrity: support of the conductor is contained in the support of
/// the discriminant.
pub fn model_consistent(e: &EllipticCurveRecord) -> bool {
    let disc = e.discriminant();
    if disc == 0 {
        return false;
    }
    let dsupport: Vec<u64> = factorize(disc.unsigned_abs()).into_iter().map(|(p, _)| p).collect();
    factorize(e.conductor).into_iter().all(|(p, _)| dsupport.contains(&p))
        && dsupport.iter().all(|&p| gcd(e.conductor, p) == p)
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
    fn point_counts_37a() {
        let e = curve_37a();
        assert_eq!(count_points_mod_p(&e, 2).unwrap(), 5);
        assert_eq!(count_points_mod_p(&e, 3).unwrap(), 7);
        assert_eq!(count_points_mod_p(&e, 5).unwrap(), 8);
        assert!(count_points_mod_p(&e, 37).is_err());
    }

    #[test]
    fn ap_37a() {
        let e = curve_37a();
        assert_eq!(ap(&e, 2), -2);
        assert_eq!(ap(&e, 3), -3);
        // nonsplit multiplicative at the conductor
        assert_eq!(ap(&e, 37), -1);
    }

    #[test]
    fn an_recursion_and_multiplicativity() {
        let e = curve_37a();
        assert_eq!(an(&e, 1), 1);
        assert_eq!(an(&e, 4), 2); // a_2^2 - 2
        assert_eq!(an(&e, 6), 6); // a_2 a_3 = (-2)(-3)
        // multiplicativity on pseudo-random coprime pairs
        let mut x = 42u64;
        let mut tested = 0;
        while tested < 40 {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(97);
            let m = (x >> 33) % 40 + 1;
            let n = (x >> 13) % 40 + 1;
            if gcd(m, n) == 1 {
                assert_eq!(an(&e, m * n), an(&e, m) * an(&e, n), "m={} n={}", m, n);
                tested += 1;
            }
        }
    }

    #[test]
    fn hasse_window() {
        let e = curve_37a();
        for p in [2u64, 3, 5, 7, 11, 101, 199] {
            if !e.has_good_reduction(p) {
                continue;
            }
            let a = ap(&e, p);
            assert!((a * a) as u64 <= 4 * p, "Hasse fails at {}", p);
        }
    }

    /// Exhaustive count over F_{p^2} realized as F_p[t]/(t^2 - r) for a
    /// quadratic nonresidue r (p odd) or F_4 = F_2[t]/(t^2+t+1).
    fn count_p2_exhaustive(a: &[i64; 5], p: u64) -> u64 {
        let pi = p as i64;
        // field elements are (u, v) = u + v t
        let (mul, add, elems): (
            Box<dyn Fn((i64, i64), (i64, i64)) -> (i64, i64)>,
            Box<dyn Fn((i64, i64), (i64, i64)) -> (i64, i64)>,
            Vec<(i64, i64)>,
        );
        if p == 2 {
            // t^2 = t + 1
            mul = Box::new(move |x, y| {
                let uu = x.0 * y.0;
                let cross = x.0 * y.1 + x.1 * y.0;
                let vv = x.1 * y.1;
                (((uu + vv) % 2 + 2) % 2, ((cross + vv) % 2 + 2) % 2)
            });
        } else {
            // t^2 = r, r a nonresidue
            let mut r = 2;
            while legendre(r as u64 % p, p) != -1 {
                r += 1;
            }
            mul = Box::new(move |x, y| {
                let u = (x.0 * y.0 + r * x.1 * y.1).rem_euclid(pi);
                let v = (x.0 * y.1 + x.1 * y.0).rem_euclid(pi);
                (u, v)
            });
        }
        add = Box::new(move |x, y| ((x.0 + y.0).rem_euclid(pi), (x.1 + y.1).rem_euclid(pi)));
        elems = (0..pi).flat_map(|u| (0..pi).map(move |v| (u, v))).collect();
        let c = |k: i64| ((k.rem_euclid(pi)), 0);
        let mut count = 1u64;
        for &x in &elems {
            for &y in &elems {
                // y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6
                let x2 = mul(x, x);
                let x3 = mul(x2, x);
                let mut lhs = mul(y, y);
                lhs = add(lhs, mul(c(a[0]), mul(x, y)));
                lhs = add(lhs, mul(c(a[2]), y));
                let mut rhs = x3;
                rhs = add(rhs, mul(c(a[1]), x2));
                rhs = add(rhs, mul(c(a[3]), x));
                rhs = add(rhs, c(a[4]));
                if lhs == rhs {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn trace_identity_matches_exhaustive_enumeration() {
        let e = curve_37a();
        for p in [2u64, 3, 5] {
            assert_eq!(
                count_points_over_p2(&e, p).unwrap(),
                count_p2_exhaustive(&e.ainvs, p),
                "p = {}", p
            );
        }
        // Hasse extremal sanity: a_p = 0 forces (p+1)^2
        let e2 = EllipticCurveRecord {
            label: "test.supersingular".into(),
            conductor: 1,
            ainvs: [0, 0, 1, 0, 0], // y^2 + y = x^3, supersingular at 2
            rank: 0,
            modular_degree: None,
            provenance: "test".into(),
        };
        if ap(&e2, 2) == 0 {
            assert_eq!(count_points_over_p2(&e2, 2).unwrap(), 9);
        }
    }

    #[test]
    fn bundled_curves_parse_and_are_consistent() {
        let table = CurveTable::bundled();
        assert!(table.by_label("37.a").is_some());
        for c in table.all() {
            assert!(model_consistent(c), "model inconsistency for {}", c.label);
        }
    }
}
