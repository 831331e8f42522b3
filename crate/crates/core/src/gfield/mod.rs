//! The finite field `F_q` (`q = p^e`) and its quadratic extension `F_{q^2}`.
//!
//! Elements are stored by their canonical encoding: a base element with
//! residue-polynomial coefficients `c_0 .. c_{e-1}` encodes to
//! `sum c_i p^i`, and `lo + hi*beta` in the extension encodes to
//! `enc(lo) + enc(hi) * q`. Every "smallest element" choice in the crate
//! uses this order.

pub mod dense;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numth::{factorize, is_prime};
use dense::{Arith, PrimeField};

/// Largest field order accepted by [`FieldTower::new`].
pub const MAX_ORDER: u64 = 1_000_000;

/// An element of `F_q`, held as its canonical encoding.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
pub struct BaseElement(u32);

impl BaseElement {
    pub const ZERO: BaseElement = BaseElement(0);
    pub const ONE: BaseElement = BaseElement(1);

    pub fn encoding(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for BaseElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `lo + hi * beta`, where `beta` is the class of `x` modulo the extension
/// modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExtElement {
    pub lo: BaseElement,
    pub hi: BaseElement,
}

impl ExtElement {
    pub fn is_zero(self) -> bool {
        self.lo.is_zero() && self.hi.is_zero()
    }
}

#[derive(Debug, Clone)]
struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// `F_q` as `F_p[y] / (base_modulus)`.
#[derive(Debug, Clone)]
pub struct BaseField {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    tables: Option<LogTables>,
}

impl BaseField {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::InvalidArgument("extension degree e must be >= 1".into()));
        }
        let q = (p as u128).checked_pow(e).unwrap_or(u128::MAX);
        if q > MAX_ORDER as u128 {
            return Err(Error::InputRange {
                what: "q",
                value: q.min(u64::MAX as u128) as u64,
                range: "[2, 10^6]",
            });
        }
        let prime = PrimeField { p: p as u32 };
        let modulus = dense::smallest_irreducible(&prime, e as usize);
        let mut field = BaseField {
            p: p as u32,
            e,
            q: q as u32,
            modulus,
            tables: None,
        };
        if e > 1 {
            field.tables = Some(field.build_tables());
        }
        Ok(field)
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u64 {
        self.q as u64
    }

    /// Monic modulus over `F_p`, low degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn element(&self, encoding: u64) -> Result<BaseElement> {
        if encoding >= self.q as u64 {
            return Err(Error::InvalidArgument(format!(
                "encoding {encoding} is not an element of F_{}",
                self.q
            )));
        }
        Ok(BaseElement(encoding as u32))
    }

    /// Image of an integer under `Z -> F_p -> F_q`.
    pub fn from_int(&self, k: i64) -> BaseElement {
        BaseElement(k.rem_euclid(self.p as i64) as u32)
    }

    pub fn zero(&self) -> BaseElement {
        BaseElement(0)
    }

    pub fn one(&self) -> BaseElement {
        BaseElement(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = BaseElement> {
        (0..self.q).map(BaseElement)
    }

    /// Residue coefficients, low degree first, length `e`.
    pub fn coeffs(&self, x: BaseElement) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.e as usize);
        let mut rest = x.0;
        for _ in 0..self.e {
            v.push(rest % self.p);
            rest /= self.p;
        }
        v
    }

    fn from_coeffs(&self, coeffs: &[u32]) -> BaseElement {
        BaseElement(coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c))
    }

    pub fn add(&self, a: BaseElement, b: BaseElement) -> BaseElement {
        if self.e == 1 {
            let s = a.0 + b.0;
            return BaseElement(if s >= self.p { s - self.p } else { s });
        }
        if self.p == 2 {
            return BaseElement(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.e {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        BaseElement(out)
    }

    pub fn neg(&self, a: BaseElement) -> BaseElement {
        if self.e == 1 {
            return BaseElement(if a.0 == 0 { 0 } else { self.p - a.0 });
        }
        if self.p == 2 {
            return a;
        }
        let c: Vec<u32> = self
            .coeffs(a)
            .into_iter()
            .map(|c| (self.p - c) % self.p)
            .collect();
        self.from_coeffs(&c)
    }

    pub fn sub(&self, a: BaseElement, b: BaseElement) -> BaseElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: BaseElement, b: BaseElement) -> BaseElement {
        if a.0 == 0 || b.0 == 0 {
            return BaseElement(0);
        }
        match &self.tables {
            None => BaseElement((a.0 as u64 * b.0 as u64 % self.p as u64) as u32),
            Some(t) => {
                let s = (t.log[a.0 as usize] as u64 + t.log[b.0 as usize] as u64)
                    % (self.q as u64 - 1);
                BaseElement(t.exp[s as usize])
            }
        }
    }

    pub fn pow(&self, a: BaseElement, mut k: u64) -> BaseElement {
        let mut acc = self.one();
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `a^(q-2)`.
    pub fn inv(&self, a: BaseElement) -> Result<BaseElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }

    pub fn div(&self, a: BaseElement, b: BaseElement) -> Result<BaseElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Multiplication through the residue polynomials; only used to seed
    /// the log tables.
    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let prime = PrimeField { p: self.p };
        let pa = dense::trim(&prime, self.coeffs(BaseElement(a)));
        let pb = dense::trim(&prime, self.coeffs(BaseElement(b)));
        let prod = dense::mulmod(&prime, &pa, &pb, &self.modulus);
        self.from_coeffs(&prod).0
    }

    fn build_tables(&self) -> LogTables {
        let group = self.q as u64 - 1;
        let primes: Vec<u64> = factorize(group).expect("q <= 10^6").primes().collect();
        let pow_slow = |a: u32, mut k: u64| {
            let mut acc = 1u32;
            let mut base = a;
            while k > 0 {
                if k & 1 == 1 {
                    acc = self.mul_slow(acc, base);
                }
                base = self.mul_slow(base, base);
                k >>= 1;
            }
            acc
        };
        let gen = (2..self.q)
            .find(|&g| primes.iter().all(|&r| pow_slow(g, group / r) != 1))
            .expect("F_q^* is cyclic");
        let mut exp = Vec::with_capacity(group as usize);
        let mut log = vec![0u32; self.q as usize];
        let mut x = 1u32;
        for i in 0..group {
            exp.push(x);
            log[x as usize] = i as u32;
            x = self.mul_slow(x, gen);
        }
        LogTables { exp, log }
    }
}

impl Arith for BaseField {
    type E = BaseElement;
    fn zero(&self) -> BaseElement {
        BaseElement(0)
    }
    fn one(&self) -> BaseElement {
        BaseElement(1)
    }
    fn add(&self, a: BaseElement, b: BaseElement) -> BaseElement {
        BaseField::add(self, a, b)
    }
    fn sub(&self, a: BaseElement, b: BaseElement) -> BaseElement {
        BaseField::sub(self, a, b)
    }
    fn mul(&self, a: BaseElement, b: BaseElement) -> BaseElement {
        BaseField::mul(self, a, b)
    }
    fn inv(&self, a: BaseElement) -> BaseElement {
        BaseField::inv(self, a).expect("dense routines only invert nonzero leads")
    }
    fn order(&self) -> u64 {
        self.q as u64
    }
    fn from_index(&self, i: u64) -> BaseElement {
        BaseElement(i as u32)
    }
}

/// Element types living in a [`FieldTower`], for the order computation.
pub trait TowerElement: Copy {
    fn is_zero_in(self, tower: &FieldTower) -> bool;
    fn is_one_in(self, tower: &FieldTower) -> bool;
    fn pow_in(self, tower: &FieldTower, k: u64) -> Self;
    /// Order of the multiplicative group the element lives in.
    fn group_order(tower: &FieldTower) -> u64;
}

impl TowerElement for BaseElement {
    fn is_zero_in(self, _: &FieldTower) -> bool {
        self.is_zero()
    }
    fn is_one_in(self, _: &FieldTower) -> bool {
        self.0 == 1
    }
    fn pow_in(self, tower: &FieldTower, k: u64) -> Self {
        tower.base.pow(self, k)
    }
    fn group_order(tower: &FieldTower) -> u64 {
        tower.q() - 1
    }
}

impl TowerElement for ExtElement {
    fn is_zero_in(self, _: &FieldTower) -> bool {
        self.is_zero()
    }
    fn is_one_in(self, tower: &FieldTower) -> bool {
        self == tower.ext_one()
    }
    fn pow_in(self, tower: &FieldTower, k: u64) -> Self {
        tower.ext_pow(self, k)
    }
    fn group_order(tower: &FieldTower) -> u64 {
        tower.q() * tower.q() - 1
    }
}

/// `F_q ⊂ F_{q^2}` with a generator `alpha` of `F_{q^2}^*` and
/// `theta = alpha^(q+1)`, which then generates `F_q^*`.
#[derive(Debug, Clone)]
pub struct FieldTower {
    base: BaseField,
    // beta^2 + c1*beta + c0 = 0
    ext_c0: BaseElement,
    ext_c1: BaseElement,
    alpha: ExtElement,
    theta: BaseElement,
    ext_order_primes: Vec<u64>,
}

impl FieldTower {
    /// Canonical tower: smallest irreducible moduli and the smallest
    /// generator of `F_{q^2}^*`.
    pub fn new(p: u64, e: u32) -> Result<Self> {
        let mut tower = Self::skeleton(p, e)?;
        let alpha = tower
            .ext_elements()
            .skip(1)
            .find(|&x| tower.is_ext_generator(x))
            .expect("F_{q^2}^* is cyclic");
        tower.set_alpha(alpha);
        Ok(tower)
    }

    /// Tower of order `q`, which must be a prime power.
    pub fn for_order(q: u64) -> Result<Self> {
        let (p, e) = crate::numth::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, e)
    }

    /// Same moduli as [`FieldTower::new`] but with a caller-chosen
    /// generator, given by its extension encoding.
    pub fn with_generator(p: u64, e: u32, alpha_encoding: u64) -> Result<Self> {
        let mut tower = Self::skeleton(p, e)?;
        let alpha = tower.ext_element(alpha_encoding)?;
        if !tower.is_ext_generator(alpha) {
            return Err(Error::InvalidArgument(format!(
                "element {alpha_encoding} does not generate F_{{q^2}}^*"
            )));
        }
        tower.set_alpha(alpha);
        Ok(tower)
    }

    fn skeleton(p: u64, e: u32) -> Result<Self> {
        let base = BaseField::new(p, e)?;
        let ext_mod = dense::smallest_irreducible(&base, 2);
        let q = base.order();
        let ext_order_primes = factorize(q * q - 1)?.primes().collect();
        Ok(FieldTower {
            ext_c0: ext_mod[0],
            ext_c1: ext_mod[1],
            base,
            alpha: ExtElement::default(),
            theta: BaseElement::default(),
            ext_order_primes,
        })
    }

    fn set_alpha(&mut self, alpha: ExtElement) {
        self.alpha = alpha;
        let q = self.q();
        self.theta = self
            .descend(self.ext_pow(alpha, q + 1))
            .expect("the norm lies in the base field");
    }

    fn is_ext_generator(&self, x: ExtElement) -> bool {
        if x.is_zero() {
            return false;
        }
        let group = self.q() * self.q() - 1;
        self.ext_order_primes
            .iter()
            .all(|&r| self.ext_pow(x, group / r) != self.ext_one())
    }

    pub fn base(&self) -> &BaseField {
        &self.base
    }

    pub fn q(&self) -> u64 {
        self.base.order()
    }

    pub fn alpha(&self) -> ExtElement {
        self.alpha
    }

    pub fn theta(&self) -> BaseElement {
        self.theta
    }

    /// `[c0, c1, 1]`, low degree first.
    pub fn ext_modulus(&self) -> [BaseElement; 3] {
        [self.ext_c0, self.ext_c1, self.base.one()]
    }

    pub fn ext_one(&self) -> ExtElement {
        self.embed(self.base.one())
    }

    pub fn beta(&self) -> ExtElement {
        ExtElement {
            lo: self.base.zero(),
            hi: self.base.one(),
        }
    }

    pub fn embed(&self, x: BaseElement) -> ExtElement {
        ExtElement {
            lo: x,
            hi: BaseElement::ZERO,
        }
    }

    pub fn ext_encoding(&self, x: ExtElement) -> u64 {
        x.lo.0 as u64 + x.hi.0 as u64 * self.q()
    }

    pub fn ext_element(&self, encoding: u64) -> Result<ExtElement> {
        let q = self.q();
        if encoding >= q * q {
            return Err(Error::InvalidArgument(format!(
                "encoding {encoding} is not an element of F_{}",
                q * q
            )));
        }
        Ok(ExtElement {
            lo: BaseElement((encoding % q) as u32),
            hi: BaseElement((encoding / q) as u32),
        })
    }

    pub fn ext_elements(&self) -> impl Iterator<Item = ExtElement> + '_ {
        let q = self.q();
        (0..q * q).map(move |i| ExtElement {
            lo: BaseElement((i % q) as u32),
            hi: BaseElement((i / q) as u32),
        })
    }

    pub fn ext_add(&self, a: ExtElement, b: ExtElement) -> ExtElement {
        ExtElement {
            lo: self.base.add(a.lo, b.lo),
            hi: self.base.add(a.hi, b.hi),
        }
    }

    pub fn ext_neg(&self, a: ExtElement) -> ExtElement {
        ExtElement {
            lo: self.base.neg(a.lo),
            hi: self.base.neg(a.hi),
        }
    }

    pub fn ext_sub(&self, a: ExtElement, b: ExtElement) -> ExtElement {
        self.ext_add(a, self.ext_neg(b))
    }

    pub fn ext_mul(&self, a: ExtElement, b: ExtElement) -> ExtElement {
        let f = &self.base;
        // (a0 + a1 b)(b0 + b1 b) with b^2 = -c1 b - c0
        let lo = f.mul(a.lo, b.lo);
        let mid = f.add(f.mul(a.lo, b.hi), f.mul(a.hi, b.lo));
        let top = f.mul(a.hi, b.hi);
        ExtElement {
            lo: f.sub(lo, f.mul(top, self.ext_c0)),
            hi: f.sub(mid, f.mul(top, self.ext_c1)),
        }
    }

    pub fn ext_pow(&self, a: ExtElement, mut k: u64) -> ExtElement {
        let mut acc = self.ext_one();
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.ext_mul(acc, base);
            }
            base = self.ext_mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `a^(q^2 - 2)`.
    pub fn ext_inv(&self, a: ExtElement) -> Result<ExtElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let q = self.q();
        Ok(self.ext_pow(a, q * q - 2))
    }

    pub fn ext_div(&self, a: ExtElement, b: ExtElement) -> Result<ExtElement> {
        Ok(self.ext_mul(a, self.ext_inv(b)?))
    }

    /// `x -> x^q`. The conjugate of `beta` is the other root `-c1 - beta`.
    pub fn frobenius(&self, x: ExtElement) -> ExtElement {
        let f = &self.base;
        ExtElement {
            lo: f.sub(x.lo, f.mul(x.hi, self.ext_c1)),
            hi: f.neg(x.hi),
        }
    }

    /// Preimage of a Frobenius-fixed element under [`FieldTower::embed`].
    pub fn descend(&self, x: ExtElement) -> Result<BaseElement> {
        if self.frobenius(x) != x {
            return Err(Error::NotInBaseField);
        }
        Ok(x.lo)
    }

    /// Multiplicative order of a nonzero element, by stripping prime
    /// factors off the group order.
    pub fn element_order<E: TowerElement>(&self, x: E) -> Result<u64> {
        if x.is_zero_in(self) {
            return Err(Error::InvalidArgument("order of zero".into()));
        }
        let group = E::group_order(self);
        let mut ord = group;
        for r in factorize(group)?.primes() {
            while ord % r == 0 && x.pow_in(self, ord / r).is_one_in(self) {
                ord /= r;
            }
        }
        Ok(ord)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{rngs::StdRng, Rng, SeedableRng};

    const PRIME_POWERS: [(u64, u32); 10] = [
        (2, 1),
        (3, 1),
        (2, 2),
        (5, 1),
        (7, 1),
        (2, 3),
        (3, 2),
        (2, 4),
        (5, 2),
        (7, 2),
    ];

    #[test]
    fn tower_over_f3() {
        let t = FieldTower::new(3, 1).unwrap();
        assert_eq!(t.base().modulus(), &[0, 1]);
        let f = t.base();
        assert_eq!(t.ext_modulus(), [f.one(), f.zero(), f.one()]);
        // alpha = 1 + beta
        assert_eq!(
            t.alpha(),
            ExtElement {
                lo: f.one(),
                hi: f.one()
            }
        );
        assert_eq!(t.theta(), f.from_int(2));
    }

    #[test]
    fn tower_over_f31() {
        let t = FieldTower::new(31, 1).unwrap();
        assert_eq!(t.element_order(t.theta()).unwrap(), 30);
        assert_eq!(t.element_order(t.alpha()).unwrap(), 960);
        assert_eq!(t.embed(t.theta()), t.ext_pow(t.alpha(), 32));
    }

    #[test]
    fn small_orders() {
        let t3 = FieldTower::new(3, 1).unwrap();
        assert_eq!(t3.element_order(t3.base().from_int(2)).unwrap(), 2);
        let a2 = t3.ext_mul(t3.alpha(), t3.alpha());
        assert_eq!(t3.element_order(a2).unwrap(), 4);
        assert!(t3.element_order(t3.base().zero()).is_err());
    }

    #[test]
    fn generators_have_full_order() {
        for (p, e) in PRIME_POWERS {
            let t = FieldTower::new(p, e).unwrap();
            let q = t.q();
            assert_eq!(t.element_order(t.alpha()).unwrap(), q * q - 1);
            assert_eq!(t.element_order(t.theta()).unwrap(), q - 1);
            assert_eq!(t.ext_pow(t.alpha(), q * q - 1), t.ext_one());
            assert_eq!(t.base().pow(t.theta(), q - 1), t.base().one());
        }
    }

    #[test]
    fn alpha_powers_are_a_bijection() {
        for (p, e) in PRIME_POWERS {
            let t = FieldTower::new(p, e).unwrap();
            let q = t.q();
            let mut seen = vec![false; (q * q) as usize];
            let mut x = t.ext_one();
            for _ in 0..q * q - 1 {
                let enc = t.ext_encoding(x) as usize;
                assert!(!seen[enc]);
                seen[enc] = true;
                x = t.ext_mul(x, t.alpha());
            }
            assert!(!seen[0]);
            assert_eq!(seen.iter().filter(|&&s| s).count() as u64, q * q - 1);
        }
    }

    #[test]
    fn frobenius_examples() {
        let t = FieldTower::new(3, 1).unwrap();
        let f = t.base();
        let x = ExtElement {
            lo: f.one(),
            hi: f.one(),
        };
        assert_eq!(
            t.frobenius(x),
            ExtElement {
                lo: f.one(),
                hi: f.from_int(2)
            }
        );
        assert!(t.descend(t.beta()).is_err());
    }

    #[test]
    fn frobenius_matches_power_and_is_involution() {
        let mut rng = StdRng::seed_from_u64(7);
        for (p, e) in PRIME_POWERS {
            let t = FieldTower::new(p, e).unwrap();
            let q = t.q();
            for _ in 0..100 {
                let x = t.ext_element(rng.gen_range(0..q * q)).unwrap();
                assert_eq!(t.frobenius(x), t.ext_pow(x, q));
                assert_eq!(t.frobenius(t.frobenius(x)), x);
                let norm = t.ext_mul(x, t.frobenius(x));
                let trace = t.ext_add(x, t.frobenius(x));
                assert!(t.descend(norm).is_ok());
                assert!(t.descend(trace).is_ok());
            }
            for c in t.base().elements() {
                assert_eq!(t.frobenius(t.embed(c)), t.embed(c));
                assert_eq!(t.descend(t.embed(c)).unwrap(), c);
            }
        }
    }

    #[test]
    fn field_axioms_on_random_triples() {
        let mut rng = StdRng::seed_from_u64(11);
        for (p, e) in PRIME_POWERS {
            let t = FieldTower::new(p, e).unwrap();
            let f = t.base();
            let q = t.q();
            for _ in 0..1000 {
                let [a, b, c] =
                    [0; 3].map(|_| f.element(rng.gen_range(0..q)).unwrap());
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
                let [x, y, z] =
                    [0; 3].map(|_| t.ext_element(rng.gen_range(0..q * q)).unwrap());
                assert_eq!(t.ext_mul(t.ext_mul(x, y), z), t.ext_mul(x, t.ext_mul(y, z)));
                assert_eq!(
                    t.ext_mul(x, t.ext_add(y, z)),
                    t.ext_add(t.ext_mul(x, y), t.ext_mul(x, z))
                );
                assert_eq!(t.ext_sub(x, x), ExtElement::default());
                if !x.is_zero() {
                    assert_eq!(t.ext_mul(x, t.ext_inv(x).unwrap()), t.ext_one());
                }
            }
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(FieldTower::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(
            FieldTower::new(2, 20),
            Err(Error::InputRange { .. })
        ));
        let f = BaseField::new(5, 1).unwrap();
        assert_eq!(f.inv(f.zero()), Err(Error::DivisionByZero));
        // beta has order 4 in F_9, not a generator
        assert!(FieldTower::with_generator(3, 1, 3).is_err());
    }

    #[test]
    fn injected_generator_keeps_compatibility() {
        let canonical = FieldTower::new(31, 1).unwrap();
        let alt_enc = canonical.ext_encoding(canonical.ext_pow(canonical.alpha(), 7));
        let t = FieldTower::with_generator(31, 1, alt_enc).unwrap();
        assert_eq!(t.element_order(t.alpha()).unwrap(), 960);
        assert_eq!(t.element_order(t.theta()).unwrap(), 30);
    }
}
