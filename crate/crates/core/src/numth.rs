//! Exact integer number theory on `u64`.
//!
//! Everything here is small-scale by construction: inputs are capped at
//! [`FACTOR_LIMIT`], which keeps trial division complete.

use crate::error::{Error, Result};

/// Largest integer accepted by [`factorize`].
pub const FACTOR_LIMIT: u64 = 1_000_000_000_000;

/// Prime factorization as ascending `(prime, exponent)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PrimeFactorization {
    pairs: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    /// Multiplies the factorization back out.
    pub fn value(&self) -> u64 {
        self.pairs.iter().map(|&(p, e)| p.pow(e)).product()
    }

    /// All positive divisors, ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.pairs {
            let len = divs.len();
            let mut pk = 1;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Factors `m` by trial division. Since `m <= 10^12`, any cofactor left
/// after dividing out primes below `10^6` is itself prime.
pub fn factorize(m: u64) -> Result<PrimeFactorization> {
    if m == 0 || m > FACTOR_LIMIT {
        return Err(Error::InputRange {
            what: "m",
            value: m,
            range: "[1, 10^12]",
        });
    }
    let mut pairs = Vec::new();
    let mut rest = m;
    let mut push = |p: u64, rest: &mut u64| {
        let mut e = 0;
        while (*rest).is_multiple_of(p) {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            pairs.push((p, e));
        }
    };
    push(2, &mut rest);
    let mut p = 3;
    while p * p <= rest {
        push(p, &mut rest);
        p += 2;
    }
    if rest > 1 {
        pairs.push((rest, 1));
    }
    Ok(PrimeFactorization { pairs })
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Splits `q = p^e`, or `None` when `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = factorize(q).ok()?;
    match f.pairs() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

/// p-adic valuation: the largest `k` with `p^k | m`.
pub fn nu(p: u64, m: u64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::InvalidArgument("valuation of zero".into()));
    }
    let mut m = m;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    Ok(k)
}

/// 2-adic valuation, for the many places where the prime is fixed.
pub fn nu2(m: u64) -> u32 {
    debug_assert!(m > 0);
    m.trailing_zeros()
}

/// Product of the distinct primes dividing `m`.
pub fn radical(m: u64) -> Result<u64> {
    Ok(factorize(m)?.primes().product())
}

/// `a / gcd(a, b)`.
pub fn div_part(a: u64, b: u64) -> u64 {
    a / gcd(a, b)
}

pub fn euler_phi(t: u64) -> Result<u64> {
    let f = factorize(t)?;
    Ok(f.pairs()
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product())
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Multiplicative order of `a` modulo `n`; requires `gcd(a, n) = 1`.
pub fn multiplicative_order(a: u64, n: u64) -> Result<u64> {
    if n == 1 {
        return Ok(1);
    }
    if gcd(a, n) != 1 {
        return Err(Error::InvalidArgument(format!(
            "{a} is not a unit modulo {n}"
        )));
    }
    let group = euler_phi(n)?;
    let mut ord = group;
    for p in factorize(group)?.primes() {
        while ord % p == 0 && pow_mod(a, ord / p, n) == 1 {
            ord /= p;
        }
    }
    Ok(ord)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(288).unwrap().pairs(), &[(2, 5), (3, 2)]);
        assert!(factorize(1).unwrap().pairs().is_empty());
        assert_eq!(factorize(960).unwrap().pairs(), &[(2, 6), (3, 1), (5, 1)]);
        assert_eq!(
            factorize(999_999_999_989).unwrap().pairs(),
            &[(999_999_999_989, 1)]
        );
    }

    #[test]
    fn factorize_rejects_out_of_range() {
        assert!(matches!(factorize(0), Err(Error::InputRange { .. })));
        assert!(matches!(
            factorize(FACTOR_LIMIT + 1),
            Err(Error::InputRange { .. })
        ));
    }

    #[test]
    fn factorize_reconstructs_exhaustively() {
        for m in 1..=1_000_000u64 {
            let f = factorize(m).unwrap();
            assert_eq!(f.value(), m);
            assert!(f.pairs().windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.primes().all(is_prime));
        }
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(nu(2, 288).unwrap(), 5);
        assert_eq!(nu(2, 32).unwrap(), 5);
        assert_eq!(nu(5, 288).unwrap(), 0);
        assert_eq!(nu(4, 16), Err(Error::NotPrime(4)));
    }

    #[test]
    fn radical_and_div_part_examples() {
        assert_eq!(radical(288).unwrap(), 6);
        assert_eq!(radical(1).unwrap(), 1);
        assert_eq!(radical(30).unwrap(), 30);
        assert_eq!(div_part(288, 960), 3);
        assert_eq!(div_part(960, 288), 10);
        assert_eq!(div_part(7, 7), 1);
    }

    #[test]
    fn phi_examples_and_divisor_sum() {
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(6).unwrap(), 2);
        assert_eq!(euler_phi(3).unwrap(), 2);
        for t in 1..=10_000u64 {
            let divs = factorize(t).unwrap().divisors();
            let sum: u64 = divs.iter().map(|&d| euler_phi(d).unwrap()).sum();
            assert_eq!(sum, t);
        }
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(31), Some((31, 1)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn order_mod_n() {
        assert_eq!(multiplicative_order(2, 7).unwrap(), 3);
        assert_eq!(multiplicative_order(3, 8).unwrap(), 2);
        assert_eq!(multiplicative_order(31, 288).unwrap(), 6);
    }

    proptest! {
        #[test]
        fn valuation_is_additive(a in 1u64..1_000_000, b in 1u64..1_000_000, pi in 0usize..5) {
            let p = [2u64, 3, 5, 7, 31][pi];
            prop_assert_eq!(nu(p, a * b).unwrap(), nu(p, a).unwrap() + nu(p, b).unwrap());
        }

        #[test]
        fn radical_divides_and_is_idempotent(m in 1u64..FACTOR_LIMIT) {
            let r = radical(m).unwrap();
            prop_assert_eq!(m % r, 0);
            prop_assert_eq!(radical(r).unwrap(), r);
        }

        #[test]
        fn div_part_times_gcd(a in 1u64..1_000_000_000, b in 1u64..1_000_000_000) {
            let d = div_part(a, b);
            prop_assert_eq!(a % d, 0);
            prop_assert_eq!(gcd(a, b) * d, a);
        }
    }
}
