//! Closed-form factorization of `x^n - 1` over `F_q` when `rad(n) | q - 1`.
//!
//! Two regimes exist. When `8 ∤ n` or `q ≢ 3 (mod 4)` every irreducible
//! factor is a binomial `x^t - theta^(u l)`. Otherwise (the mixed case)
//! odd-degree binomials appear alongside factors of the shape
//! `x^(2t) - (a + a^q) x^t + a^(q+1)` with `a = alpha^(u l')` in `F_{q^2}`;
//! those whose middle coefficient vanishes are binomials of degree `2t`.

mod counts;
mod coset;

pub use counts::{audit_counts, measured_counts, predicted_counts, CountAudit, CountKey, CountPrediction, CountSource, FactorClass, Ratio};
pub use coset::{coset_oracle, cyclotomic_cosets, ORACLE_DEGREE_CAP};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gfield::{BaseElement, ExtElement, FieldTower};
use crate::numth::{div_part, factorize, gcd, nu2, prime_power, radical};
use crate::polyring::Poly;

/// Longest code length accepted.
pub const MAX_LENGTH: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Case {
    /// `8 ∤ n` or `q ≢ 3 (mod 4)`: all factors are binomials.
    BinomialOnly,
    /// `8 | n` and `q ≡ 3 (mod 4)`.
    Mixed,
}

/// Integers derived from `(n, q)` that drive both factorizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseParameters {
    pub n: u64,
    pub q: u64,
    pub case: Case,
    /// `n / gcd(n, q - 1)`
    pub m: u64,
    /// `(q - 1) / gcd(q - 1, n)`
    pub l: u64,
    /// `n / gcd(n, q^2 - 1)`
    pub m_prime: u64,
    /// `(q^2 - 1) / gcd(q^2 - 1, n)`
    pub l_prime: u64,
    /// `min(nu_2(n/2), nu_2(q + 1))`, mixed case only.
    pub r: Option<u32>,
}

impl CaseParameters {
    pub fn gcd_n_q_minus_1(&self) -> u64 {
        gcd(self.n, self.q - 1)
    }

    pub fn gcd_n_q2_minus_1(&self) -> u64 {
        gcd(self.n, self.q * self.q - 1)
    }

    fn require_r(&self) -> Result<u32> {
        self.r.ok_or(Error::CaseMismatch { expected: "mixed" })
    }
}

/// Validates `(n, q)` and derives the case parameters.
pub fn case_parameters(n: u64, q: u64) -> Result<CaseParameters> {
    if n == 0 || n > MAX_LENGTH {
        return Err(Error::InputRange {
            what: "n",
            value: n,
            range: "[1, 10^6]",
        });
    }
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    if gcd(n, q) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    if q > crate::gfield::MAX_ORDER {
        return Err(Error::InputRange {
            what: "q",
            value: q,
            range: "[2, 10^6]",
        });
    }
    prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let rad = radical(n)?;
    if !(q - 1).is_multiple_of(rad) {
        return Err(Error::OutOfRegime { n, q, radical: rad });
    }
    let q2 = q * q - 1;
    let case = if n.is_multiple_of(8) && q % 4 == 3 {
        Case::Mixed
    } else {
        Case::BinomialOnly
    };
    let r = match case {
        Case::Mixed => Some(nu2(n / 2).min(nu2(q + 1))),
        Case::BinomialOnly => None,
    };
    Ok(CaseParameters {
        n,
        q,
        case,
        m: div_part(n, q - 1),
        l: div_part(q - 1, n),
        m_prime: div_part(n, q2),
        l_prime: div_part(q2, n),
        r,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorKind {
    /// `x^degree - constant`
    Binomial { degree: usize, constant: BaseElement },
    /// `x^(2t) - (a + a^q) x^t + a^(q+1)` with `t = half_degree`.
    Trinomial { half_degree: usize, a: ExtElement },
}

/// One irreducible factor of `x^n - 1` together with its provenance.
///
/// The label `u` depends on the chosen generator `alpha`; `nu2u` is
/// recorded for every factor of the quadratic-in-`x^t` family and is
/// independent of that choice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibleFactor {
    kind: FactorKind,
    u: u64,
    nu2u: Option<u32>,
    poly: Poly,
}

impl IrreducibleFactor {
    fn binomial(degree: usize, constant: BaseElement, u: u64, nu2u: Option<u32>, tower: &FieldTower) -> Self {
        let f = tower.base();
        let poly = Poly::from_terms([(degree, f.one()), (0, f.neg(constant))]);
        IrreducibleFactor {
            kind: FactorKind::Binomial { degree, constant },
            u,
            nu2u,
            poly,
        }
    }

    fn trinomial(half_degree: usize, a: ExtElement, u: u64, nu2u: u32, tower: &FieldTower) -> Result<Self> {
        let f = tower.base();
        let conj = tower.frobenius(a);
        let trace = tower.descend(tower.ext_add(a, conj))?;
        let norm = tower.descend(tower.ext_mul(a, conj))?;
        let poly = Poly::from_terms([
            (2 * half_degree, f.one()),
            (half_degree, f.neg(trace)),
            (0, norm),
        ]);
        Ok(IrreducibleFactor {
            kind: FactorKind::Trinomial { half_degree, a },
            u,
            nu2u: Some(nu2u),
            poly,
        })
    }

    pub fn kind(&self) -> &FactorKind {
        &self.kind
    }

    pub fn u(&self) -> u64 {
        self.u
    }

    pub fn nu2u(&self) -> Option<u32> {
        self.nu2u
    }

    /// The factor as a polynomial; it is the check polynomial of its code.
    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        match self.kind {
            FactorKind::Binomial { degree, .. } => degree,
            FactorKind::Trinomial { half_degree, .. } => 2 * half_degree,
        }
    }

    pub fn is_trinomial(&self) -> bool {
        matches!(self.kind, FactorKind::Trinomial { .. })
    }
}

fn check_tower(params: &CaseParameters, tower: &FieldTower) -> Result<()> {
    if tower.q() != params.q {
        return Err(Error::InvalidArgument(format!(
            "tower has order {}, parameters are for q = {}",
            tower.q(),
            params.q
        )));
    }
    Ok(())
}

fn sort_factors(factors: &mut [IrreducibleFactor]) {
    factors.sort_by(|a, b| a.poly.canonical_cmp(&b.poly));
}

/// `x^t - theta^(u l)` for `t | m` and `1 <= u <= gcd(n, q-1)` coprime to `t`,
/// restricted to the degrees `t` accepted by `keep`.
fn binomial_family(
    params: &CaseParameters,
    tower: &FieldTower,
    divisors_of: u64,
    keep: impl Fn(u64) -> bool,
) -> Result<Vec<IrreducibleFactor>> {
    let f = tower.base();
    let group = params.q - 1;
    let bound = params.gcd_n_q_minus_1();
    let mut out = Vec::new();
    for t in factorize(divisors_of)?.divisors().into_iter().filter(|&t| keep(t)) {
        for u in (1..=bound).filter(|&u| gcd(u, t) == 1) {
            let exp = (u as u128 * params.l as u128 % group as u128) as u64;
            let c = f.pow(tower.theta(), exp);
            out.push(IrreducibleFactor::binomial(t as usize, c, u, None, tower));
        }
    }
    Ok(out)
}

/// Factorization in the binomial-only case, sorted canonically.
pub fn factor_binomial_case(params: &CaseParameters, tower: &FieldTower) -> Result<Vec<IrreducibleFactor>> {
    if params.case != Case::BinomialOnly {
        return Err(Error::CaseMismatch {
            expected: "binomial-only",
        });
    }
    check_tower(params, tower)?;
    let mut out = binomial_family(params, tower, params.m, |_| true)?;
    sort_factors(&mut out);
    Ok(out)
}

/// `S_t`: the `u` in `[1, gcd(n, q^2-1)]` coprime to `t` with `2^r ∤ u` and
/// `u < (q u mod gcd(n, q^2-1))`. Ascending.
pub fn s_t_set(t: u64, params: &CaseParameters) -> Result<Vec<u64>> {
    let r = params.require_r()?;
    if t == 0 || !params.m_prime.is_multiple_of(t) {
        return Err(Error::InvalidArgument(format!(
            "t = {t} does not divide m' = {}",
            params.m_prime
        )));
    }
    let bound = params.gcd_n_q2_minus_1();
    let two_r = 1u64 << r;
    Ok((1..=bound)
        .filter(|&u| gcd(u, t) == 1 && u % two_r != 0 && u < (params.q as u128 * u as u128 % bound as u128) as u64)
        .collect())
}

/// Factorization in the mixed case, sorted canonically. Members of the
/// `S_t` family with `a + a^q = 0` come out as binomials of degree `2t`.
pub fn factor_mixed_case(params: &CaseParameters, tower: &FieldTower) -> Result<Vec<IrreducibleFactor>> {
    if params.case != Case::Mixed {
        return Err(Error::CaseMismatch { expected: "mixed" });
    }
    check_tower(params, tower)?;
    let r = params.require_r()?;
    let mut out = binomial_family(params, tower, params.m_prime, |t| t % 2 == 1)?;
    let f = tower.base();
    let group = params.q * params.q - 1;
    for t in factorize(params.m_prime)?.divisors() {
        for u in s_t_set(t, params)? {
            let exp = (u as u128 * params.l_prime as u128 % group as u128) as u64;
            let a = tower.ext_pow(tower.alpha(), exp);
            let conj = tower.frobenius(a);
            let nu = nu2(u);
            if tower.ext_add(a, conj).is_zero() {
                let norm = tower.descend(tower.ext_mul(a, conj))?;
                out.push(IrreducibleFactor::binomial(2 * t as usize, f.neg(norm), u, Some(nu), tower));
            } else {
                if nu + 2 > r {
                    return Err(Error::InconsistentParameters(format!(
                        "trinomial factor with nu_2(u) = {nu} > r - 2 = {}",
                        r as i64 - 2
                    )));
                }
                out.push(IrreducibleFactor::trinomial(t as usize, a, u, nu, tower)?);
            }
        }
    }
    sort_factors(&mut out);
    Ok(out)
}

/// Dispatches on the case tag.
pub fn factor(params: &CaseParameters, tower: &FieldTower) -> Result<Vec<IrreducibleFactor>> {
    match params.case {
        Case::BinomialOnly => factor_binomial_case(params, tower),
        Case::Mixed => factor_mixed_case(params, tower),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rendered(factors: &[IrreducibleFactor]) -> Vec<String> {
        factors.iter().map(|f| f.poly().render()).collect()
    }

    #[test]
    fn parameters_for_the_worked_example() {
        let p = case_parameters(288, 31).unwrap();
        assert_eq!(p.case, Case::Mixed);
        assert_eq!((p.m_prime, p.l_prime, p.r), (3, 10, Some(4)));
    }

    #[test]
    fn parameters_binomial_case() {
        let p = case_parameters(15, 31).unwrap();
        assert_eq!(p.case, Case::BinomialOnly);
        assert_eq!((p.m, p.l, p.r), (1, 2, None));
    }

    #[test]
    fn parameter_errors() {
        assert_eq!(case_parameters(6, 4), Err(Error::NotCoprime { n: 6, q: 4 }));
        assert_eq!(case_parameters(4, 6), Err(Error::NotCoprime { n: 4, q: 6 }));
        assert!(matches!(case_parameters(7, 2), Err(Error::OutOfRegime { .. })));
        assert_eq!(case_parameters(5, 6), Err(Error::NotPrimePower(6)));
        assert!(matches!(case_parameters(0, 3), Err(Error::InputRange { .. })));
    }

    #[test]
    fn r_is_at_least_two_in_mixed_case() {
        for q in [3u64, 7, 11, 19, 23, 27, 31, 43, 47] {
            for n in (8..=512).step_by(8) {
                if let Ok(p) = case_parameters(n, q) {
                    assert_eq!(p.case, Case::Mixed);
                    assert!(p.r.unwrap() >= 2);
                }
            }
        }
    }

    #[test]
    fn binomial_case_examples() {
        let t31 = FieldTower::new(31, 1).unwrap();
        let fs = factor_binomial_case(&case_parameters(15, 31).unwrap(), &t31).unwrap();
        assert_eq!(fs.len(), 15);
        assert!(fs.iter().all(|f| f.degree() == 1));
        let fs = factor_binomial_case(&case_parameters(2, 31).unwrap(), &t31).unwrap();
        assert_eq!(rendered(&fs), ["x + 1", "x + 30"]);
        let t5 = FieldTower::new(5, 1).unwrap();
        let fs = factor_binomial_case(&case_parameters(4, 5).unwrap(), &t5).unwrap();
        assert_eq!(rendered(&fs), ["x + 1", "x + 2", "x + 3", "x + 4"]);
        let mixed = case_parameters(288, 31).unwrap();
        assert!(matches!(
            factor_binomial_case(&mixed, &t31),
            Err(Error::CaseMismatch { .. })
        ));
    }

    #[test]
    fn s_t_examples() {
        let p = case_parameters(8, 3).unwrap();
        assert_eq!(s_t_set(1, &p).unwrap(), [1, 2, 5]);
        let p = case_parameters(288, 31).unwrap();
        let s3 = s_t_set(3, &p).unwrap();
        assert_eq!(s3.len(), 30);
        assert!(s3.iter().all(|&u| gcd(u, 3) == 1));
        assert_eq!(s_t_set(1, &p).unwrap().len(), 45);
        assert!(s_t_set(2, &p).is_err());
        assert!(s_t_set(1, &case_parameters(15, 31).unwrap()).is_err());
    }

    #[test]
    fn mixed_case_small_example() {
        let t = FieldTower::new(3, 1).unwrap();
        let fs = factor_mixed_case(&case_parameters(8, 3).unwrap(), &t).unwrap();
        assert_eq!(rendered(&fs), ["x + 1", "x + 2", "x^2 + 1", "x^2 + x + 2", "x^2 + 2x + 2"]);
        let kinds: Vec<bool> = fs.iter().map(IrreducibleFactor::is_trinomial).collect();
        assert_eq!(kinds, [false, false, false, true, true]);
        let degenerate = &fs[2];
        assert_eq!((degenerate.u(), degenerate.nu2u()), (2, Some(1)));
        assert!(fs[3..].iter().all(|f| f.nu2u() == Some(0)));
    }

    #[test]
    fn mixed_case_worked_example_shape() {
        let t = FieldTower::new(31, 1).unwrap();
        let fs = factor(&case_parameters(288, 31).unwrap(), &t).unwrap();
        let count = |deg: usize, tri: bool| fs.iter().filter(|f| f.degree() == deg && f.is_trinomial() == tri).count();
        assert_eq!(fs.len(), 85);
        assert_eq!([count(1, false), count(2, false), count(3, false), count(6, false)], [6, 3, 4, 2]);
        assert_eq!([count(2, true), count(6, true)], [42, 28]);
        assert_eq!(fs.iter().map(IrreducibleFactor::degree).sum::<usize>(), 288);
        for f in fs.iter().filter(|f| f.is_trinomial()) {
            let (d, _) = f.poly().terms().nth(1).unwrap();
            assert_eq!(d, f.degree() / 2, "middle coefficient present");
        }
    }
}
