//! Exact integer arithmetic primitives: factorization, multiplicative
//! functions, divisor enumeration, and class numbers of imaginary quadratic
//! orders by reduced-form enumeration.
//!
//! Everything here is plain `u64`/`i64` arithmetic; all inputs in this
//! project are small (levels below 2100, discriminants above -10^4), but the
//! routines are correct well past 10^6.

use crate::error::ArithError;

/// Factor `n` into (prime, exponent) pairs by trial division, ascending.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut n = n;
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// All positive divisors of `n`, in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut ds = vec![1u64];
    for (p, e) in factorize(n) {
        let prev = ds.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            ds.extend(prev.iter().map(|d| d * pk));
        }
    }
    ds.sort_unstable();
    ds
}

/// psi(N) = N * prod_{q | N} (1 + 1/q), the index of +-Gamma_0(N) in PSL_2(Z).
pub fn psi(n: u64) -> u64 {
    assert!(n >= 1);
    let mut r = n;
    for (p, _) in factorize(n) {
        r = r / p * (p + 1);
    }
    r
}

/// omega(N): number of distinct prime divisors.
pub fn omega(n: u64) -> u32 {
    factorize(n).len() as u32
}

/// Moebius function.
pub fn moebius(n: u64) -> i64 {
    let fs = factorize(n);
    if fs.iter().any(|&(_, e)| e > 1) {
        return 0;
    }
    if fs.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Euler totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut r = n;
    for (p, _) in factorize(n) {
        r = r / p * (p - 1);
    }
    r
}

/// A negative discriminant: D < 0 with D = 0 or 1 (mod 4).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Discriminant(i64);

impl Discriminant {
    pub fn new(value: i64) -> Result<Self, ArithError> {
        if value >= 0 || value.rem_euclid(4) > 1 {
            return Err(ArithError::NotADiscriminant(value));
        }
        Ok(Discriminant(value))
    }

    pub fn value(self) -> i64 {
        self.0
    }
}

/// Class number h(D): the number of classes of primitive positive-definite
/// binary quadratic forms of discriminant D, by exhaustive enumeration of
/// reduced forms |b| <= a <= c with b^2 - 4ac = D, gcd(a,b,c) = 1, and the
/// boundary convention b >= 0 when a = c or |b| = a.
pub fn class_number(d: Discriminant) -> u64 {
    let disc = d.value();
    let mut h = 0u64;
    let mut b = disc.rem_euclid(2);
    // reduced forms satisfy b^2 <= |D|/3
    while 3 * b * b <= -disc {
        let m = b * b - disc;
        if m % 4 == 0 {
            let ac = m / 4;
            let mut a = if b > 1 { b } else { 1 };
            while a * a <= ac {
                if ac % a == 0 {
                    let c = ac / a;
                    if gcd(gcd(a as u64, b as u64), c as u64) == 1 {
                        h += 1;
                        // (a, -b, c) is a distinct reduced class unless on
                        // the boundary b = 0, |b| = a, or a = c
                        if b != 0 && a != b && a != c {
                            h += 1;
                        }
                    }
                }
                a += 1;
            }
        }
        b += 2;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi_small_values() {
        assert_eq!(psi(1), 1);
        assert_eq!(psi(109), 110);
        assert_eq!(psi(74), 114);
        assert_eq!(psi(468), 1008);
        assert_eq!(psi(505), 612);
    }

    /// Independent oracle for psi: the coset count #P^1(Z/NZ), i.e. the
    /// number of (c:d) with gcd(c,d,N)=1 up to unit scaling.
    fn p1_size(n: u64) -> u64 {
        if n == 1 {
            return 1;
        }
        let mut reps = std::collections::HashSet::new();
        for c in 0..n {
            for d in 0..n {
                if gcd(gcd(c, d), n) != 1 {
                    continue;
                }
                // canonical representative: smallest (uc mod n, ud mod n)
                // over units u of Z/N
                let mut best = (n, n);
                for u in 0..n {
                    if gcd(u, n) != 1 {
                        continue;
                    }
                    let cand = ((u * c) % n, (u * d) % n);
                    if cand < best {
                        best = cand;
                    }
                }
                reps.insert(best);
            }
        }
        reps.len() as u64
    }

    #[test]
    fn psi_matches_coset_index_oracle() {
        for n in [1u64, 2, 6, 12, 37, 74] {
            assert_eq!(psi(n), p1_size(n), "psi({}) vs P^1(Z/{})", n, n);
        }
    }

    #[test]
    fn psi_multiplicative_on_coprime_pairs() {
        // deterministic pseudo-random pairs below 10^4
        let mut x = 123456789u64;
        let mut tested = 0;
        while tested < 200 {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let m = (x >> 33) % 9999 + 1;
            let n = (x >> 13) % 9999 + 1;
            if gcd(m, n) == 1 {
                assert_eq!(psi(m * n), psi(m) * psi(n), "m={} n={}", m, n);
                tested += 1;
            }
        }
    }

    #[test]
    fn psi_lower_bound_equality_iff_prime() {
        for n in 2..2000u64 {
            assert!(psi(n) >= n + 1);
            assert_eq!(psi(n) == n + 1, is_prime(n), "n={}", n);
        }
    }

    #[test]
    fn omega_small_values() {
        assert_eq!(omega(1), 0);
        assert_eq!(omega(46), 2);
        assert_eq!(omega(112), 2);
    }

    #[test]
    fn divisors_examples() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(2), vec![1, 2]);
        // oracle: trial division
        let naive: Vec<u64> = (1..=12).filter(|d| 12 % d == 0).collect();
        assert_eq!(divisors(12), naive);
        for n in 1..500u64 {
            let naive: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            assert_eq!(divisors(n), naive);
        }
    }

    #[test]
    fn moebius_values_and_sum() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(4), 0);
        assert_eq!(moebius(30), -1);
        for n in 2..500u64 {
            let s: i64 = divisors(n).iter().map(|&d| moebius(d)).sum();
            assert_eq!(s, 0, "sum_{{d|{}}} mu(d)", n);
        }
        let mut x = 99u64;
        let mut tested = 0;
        while tested < 100 {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1);
            let m = (x >> 33) % 999 + 1;
            let n = (x >> 13) % 999 + 1;
            if gcd(m, n) == 1 {
                assert_eq!(moebius(m * n), moebius(m) * moebius(n));
                tested += 1;
            }
        }
    }

    #[test]
    fn discriminant_validation() {
        assert!(Discriminant::new(-3).is_ok());
        assert!(Discriminant::new(-4).is_ok());
        assert!(Discriminant::new(-5).is_err());
        assert!(Discriminant::new(-2).is_err());
        assert!(Discriminant::new(5).is_err());
        assert!(Discriminant::new(0).is_err());
    }

    #[test]
    fn class_number_examples() {
        for (d, h) in [(-3, 1), (-4, 1), (-23, 3), (-47, 5), (-92, 3),
                       (-15, 2), (-20, 2), (-71, 7), (-104, 6), (-111, 8),
                       (-231, 12), (-296, 10), (-676, 6)] {
            assert_eq!(class_number(Discriminant::new(d).unwrap()), h, "D={}", d);
        }
    }

    /// Independent oracle: count SL_2(Z)-equivalence classes of primitive
    /// positive-definite forms by Gauss reduction of every form with
    /// bounded coefficients.
    fn class_number_by_reduction(disc: i64) -> u64 {
        fn reduce(mut a: i64, mut b: i64, mut c: i64) -> (i64, i64, i64) {
            loop {
                if c < a {
                    // invert: (a,b,c) -> (c,-b,a)
                    std::mem::swap(&mut a, &mut c);
                    b = -b;
                }
                if b > a || b <= -a {
                    // translate b into (-a, a]
                    let k = (b + a).div_euclid(2 * a);
                    // (a, b, c) -> (a, b - 2ka, c - kb + k^2 a)
                    c += k * k * a - k * b;
                    b -= 2 * k * a;
                    continue;
                }
                if c < a {
                    continue;
                }
                if a == c && b < 0 {
                    b = -b;
                }
                if b == -a {
                    b = a;
                }
                return (a, b, c);
            }
        }
        let mut classes = std::collections::HashSet::new();
        let bound = ((-disc) as f64).sqrt() as i64 + 2;
        for a in 1..=bound {
            for b in -bound..=bound {
                let num = b * b - disc;
                if num % (4 * a) != 0 {
                    continue;
                }
                let c = num / (4 * a);
                if c < a {
                    continue;
                }
                if gcd(gcd(a as u64, b.unsigned_abs()), c as u64) != 1 {
                    continue;
                }
                classes.insert(reduce(a, b, c));
            }
        }
        classes.len() as u64
    }

    #[test]
    fn class_number_matches_sl2_reduction_oracle() {
        let mut d = -3i64;
        while d >= -200 {
            if d.rem_euclid(4) <= 1 {
                let disc = Discriminant::new(d).unwrap();
                assert_eq!(class_number(disc), class_number_by_reduction(d), "D={}", d);
            }
            d -= 1;
        }
    }
}
