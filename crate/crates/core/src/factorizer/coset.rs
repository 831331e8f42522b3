//! Factorization of `x^n - 1` through `q`-cyclotomic cosets, for any `n`
//! coprime to `q`. It shares no code path with the closed forms and serves
//! as their oracle.

use crate::error::{Error, Result};
use crate::gfield::dense::{self, Arith};
use crate::gfield::{BaseElement, BaseField};
use crate::numth::{factorize, gcd, multiplicative_order};
use crate::polyring::Poly;

/// Largest splitting-field degree the oracle will build.
pub const ORACLE_DEGREE_CAP: u64 = 12;

/// Orbits of `Z/n` under multiplication by `q`, each listed from its
/// smallest member, ordered by that member.
pub fn cyclotomic_cosets(n: u64, q: u64) -> Vec<Vec<u64>> {
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start as usize] {
            continue;
        }
        let mut coset = Vec::new();
        let mut i = start;
        while !seen[i as usize] {
            seen[i as usize] = true;
            coset.push(i);
            i = (i as u128 * q as u128 % n as u128) as u64;
        }
        out.push(coset);
    }
    out
}

/// `F_q[y] / (modulus)` with dense residues.
struct Splitting<'a> {
    base: &'a BaseField,
    modulus: Vec<BaseElement>,
}

type Elem = Vec<BaseElement>;

impl Splitting<'_> {
    fn one(&self) -> Elem {
        dense::rem(self.base, &[self.base.one()], &self.modulus)
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        dense::mulmod(self.base, a, b, &self.modulus)
    }

    fn pow(&self, a: &Elem, exp: u128) -> Elem {
        dense::powmod(self.base, a, exp, &self.modulus)
    }

    fn from_index(&self, mut i: u128) -> Elem {
        let q = self.base.order() as u128;
        let mut v = Vec::new();
        while i > 0 {
            v.push(self.base.from_index((i % q) as u64));
            i /= q;
        }
        dense::trim(self.base, v)
    }

    /// First element, in encoding order, of multiplicative order exactly `n`.
    fn root_of_unity(&self, n: u64, field_order: u128) -> Elem {
        let cofactor = (field_order - 1) / n as u128;
        let primes: Vec<u64> = factorize(n).expect("n in range").primes().collect();
        let one = self.one();
        (1..field_order)
            .map(|i| self.pow(&self.from_index(i), cofactor))
            .find(|w| primes.iter().all(|&p| self.pow(w, (n / p) as u128) != one))
            .expect("F_{q^s}^* contains an element of every order dividing q^s - 1")
    }
}

/// Monic irreducible factors of `x^n - 1` over `field`, sorted canonically.
/// Each factor is `prod_{i in C} (x - rho^i)` over a coset `C`, computed in
/// `F_{q^s}` with `s = ord_n(q)`.
pub fn coset_oracle(n: u64, field: &BaseField) -> Result<Vec<Poly>> {
    let q = field.order();
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    if gcd(n, q) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    let s = multiplicative_order(q % n, n)?;
    if s > ORACLE_DEGREE_CAP {
        return Err(Error::OracleOutOfRange {
            degree: s,
            cap: ORACLE_DEGREE_CAP,
        });
    }
    let ext = Splitting {
        base: field,
        modulus: dense::smallest_irreducible(field, s as usize),
    };
    let field_order = (q as u128).pow(s as u32);
    let rho = ext.root_of_unity(n, field_order);

    let mut powers = Vec::with_capacity(n as usize);
    let mut x = ext.one();
    for _ in 0..n {
        powers.push(x.clone());
        x = ext.mul(&x, &rho);
    }

    let mut out = Vec::new();
    for coset in cyclotomic_cosets(n, q) {
        // coefficients over F_{q^s}, low degree first
        let mut acc: Vec<Elem> = vec![ext.one()];
        for &i in &coset {
            let neg_root = dense::sub(field, &[], &powers[i as usize]);
            let mut next = vec![Vec::new(); acc.len() + 1];
            for (d, c) in acc.iter().enumerate() {
                next[d + 1] = dense::add(field, &next[d + 1], c);
                next[d] = dense::add(field, &next[d], &ext.mul(c, &neg_root));
            }
            acc = next;
        }
        let coeffs = acc
            .into_iter()
            .map(|c| match c.len() {
                0 => Ok(field.zero()),
                1 => Ok(c[0]),
                _ => Err(Error::InconsistentParameters(
                    "coset product has a coefficient outside F_q".into(),
                )),
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(Poly::from_dense(&coeffs));
    }
    out.sort_by(Poly::canonical_cmp);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rendered(v: &[Poly]) -> Vec<String> {
        v.iter().map(Poly::render).collect()
    }

    #[test]
    fn cosets_mod_8_base_3() {
        assert_eq!(
            cyclotomic_cosets(8, 3),
            vec![vec![0], vec![1, 3], vec![2, 6], vec![4], vec![5, 7]]
        );
    }

    #[test]
    fn x8_minus_1_over_f3() {
        let f = BaseField::new(3, 1).unwrap();
        let fs = coset_oracle(8, &f).unwrap();
        assert_eq!(rendered(&fs), ["x + 1", "x + 2", "x^2 + 1", "x^2 + x + 2", "x^2 + 2x + 2"]);
    }

    #[test]
    fn x7_minus_1_over_f2() {
        let f = BaseField::new(2, 1).unwrap();
        let fs = coset_oracle(7, &f).unwrap();
        assert_eq!(rendered(&fs), ["x + 1", "x^3 + x + 1", "x^3 + x^2 + 1"]);
    }

    #[test]
    fn oracle_limits() {
        let f = BaseField::new(3, 1).unwrap();
        assert!(matches!(coset_oracle(256, &f), Err(Error::OracleOutOfRange { .. })));
        assert_eq!(coset_oracle(6, &f), Err(Error::NotCoprime { n: 6, q: 3 }));
    }

    #[test]
    fn product_is_x_n_minus_1_outside_regime() {
        for (p, e, n) in [(2u64, 1u32, 15u64), (2, 2, 21), (3, 1, 13), (5, 1, 11), (3, 2, 20)] {
            let f = BaseField::new(p, e).unwrap();
            let fs = coset_oracle(n, &f).unwrap();
            let prod = fs.iter().fold(Poly::one(), |acc, g| acc.mul(g, &f));
            assert_eq!(prod, Poly::x_n_minus_one(n as usize, &f), "q={} n={n}", f.order());
        }
    }
}
