//! Weight enumerators of irreducible cyclic codes in closed form.
//!
//! A binomial code with check polynomial `x^s - c` has enumerator
//! `(1 + (q-1) z^(n/s))^s`. A trinomial code of dimension `2t` with class
//! `v = nu_2(u)` has enumerator
//! `(1 + 2^(r-v)(q-1) z^d + (q-1)(q+1-2^(r-v)) z^(n/t))^t` where
//! `d = (n/t)(1 - 2^-(r-v))`. Enumerators are stored factored and expanded
//! on demand with exact big-integer counts.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factorizer::{CaseParameters, FactorKind, IrreducibleFactor};
use crate::gfield::{BaseElement, ExtElement, FieldTower};
use crate::polyring::{check_to_generator, Poly};

/// Sparse weight distribution, weight -> number of codewords.
pub type Distribution = BTreeMap<usize, BigUint>;

/// `(sum of base terms)^outer_exponent`, expanded lazily.
#[derive(Debug)]
pub struct WeightEnumerator {
    base_terms: Vec<(usize, BigUint)>,
    outer_exponent: u32,
    expanded: OnceLock<Distribution>,
}

impl Clone for WeightEnumerator {
    fn clone(&self) -> Self {
        WeightEnumerator {
            base_terms: self.base_terms.clone(),
            outer_exponent: self.outer_exponent,
            expanded: self.expanded.clone(),
        }
    }
}

impl PartialEq for WeightEnumerator {
    fn eq(&self, other: &Self) -> bool {
        self.base_terms == other.base_terms && self.outer_exponent == other.outer_exponent
    }
}

impl Eq for WeightEnumerator {}

impl WeightEnumerator {
    /// Base terms must start with `(0, 1)`, have strictly increasing
    /// weights and positive counts.
    pub fn new(base_terms: Vec<(usize, BigUint)>, outer_exponent: u32) -> Result<Self> {
        if outer_exponent == 0 {
            return Err(Error::InvalidArgument("outer exponent must be positive".into()));
        }
        if base_terms.first() != Some(&(0, BigUint::one())) {
            return Err(Error::InvalidArgument("base terms must start with the constant 1".into()));
        }
        if base_terms.windows(2).any(|w| w[0].0 >= w[1].0) || base_terms.iter().any(|(_, c)| c.is_zero()) {
            return Err(Error::InvalidArgument(
                "base weights must increase strictly with positive counts".into(),
            ));
        }
        Ok(WeightEnumerator {
            base_terms,
            outer_exponent,
            expanded: OnceLock::new(),
        })
    }

    pub fn base_terms(&self) -> &[(usize, BigUint)] {
        &self.base_terms
    }

    pub fn outer_exponent(&self) -> u32 {
        self.outer_exponent
    }

    /// Least positive weight.
    pub fn min_distance(&self) -> Option<usize> {
        self.base_terms.get(1).map(|&(w, _)| w)
    }

    /// `(sum of base counts)^t`, i.e. `q^k` for a code.
    pub fn total_mass(&self) -> BigUint {
        let base: BigUint = self.base_terms.iter().map(|(_, c)| c).sum();
        base.pow(self.outer_exponent)
    }

    /// Exact expansion, computed once.
    pub fn expanded(&self) -> &Distribution {
        self.expanded.get_or_init(|| expand_terms(&self.base_terms, self.outer_exponent))
    }

    /// `1+120z^216+840z^288`, or `(1+30z^48)^6` when `t > 1`.
    pub fn render(&self) -> String {
        let inner = render_terms(self.base_terms.iter().map(|(w, c)| (*w, c)));
        if self.outer_exponent == 1 {
            inner
        } else {
            format!("({inner})^{}", self.outer_exponent)
        }
    }

    /// `weight,count` CSV of the expansion, ascending by weight.
    pub fn render_csv(&self) -> String {
        distribution_csv(self.expanded())
    }
}

fn render_terms<'a>(terms: impl Iterator<Item = (usize, &'a BigUint)>) -> String {
    let mut out = String::new();
    for (i, (w, c)) in terms.enumerate() {
        if i > 0 {
            out.push('+');
        }
        let coeff = if c.is_one() && w > 0 { String::new() } else { c.to_string() };
        match w {
            0 => write!(out, "{c}").unwrap(),
            1 => write!(out, "{coeff}z").unwrap(),
            _ => write!(out, "{coeff}z^{w}").unwrap(),
        }
    }
    out
}

/// Renders an expanded distribution as a sum, e.g. `1+4z^4+4z^8`.
pub fn render_distribution(dist: &Distribution) -> String {
    render_terms(dist.iter().map(|(w, c)| (*w, c)))
}

pub fn distribution_csv(dist: &Distribution) -> String {
    let mut out = String::from("weight,count\n");
    for (w, c) in dist {
        writeln!(out, "{w},{c}").unwrap();
    }
    out
}

/// Multinomial expansion of `(1 + b1 z^w1 + b2 z^w2)^t`:
/// the coefficient of `z^(w1 i + w2 j)` collects
/// `C(t, i) C(t-i, j) b1^i b2^j`. Other shapes fall back to repeated
/// squaring of the sparse polynomial.
fn expand_terms(base: &[(usize, BigUint)], t: u32) -> Distribution {
    match base {
        [(0, _)] => BTreeMap::from([(0, BigUint::one())]),
        [(0, _), (w1, b1)] => {
            let binom = binomial_row(t);
            let mut out = Distribution::new();
            let mut p1 = BigUint::one();
            for (i, c) in binom.iter().enumerate() {
                out.insert(w1 * i, c * &p1);
                p1 *= b1;
            }
            out
        }
        [(0, _), (w1, b1), (w2, b2)] => {
            let rows: Vec<Vec<BigUint>> = (0..=t).map(binomial_row).collect();
            let pow1: Vec<BigUint> = powers(b1, t);
            let pow2: Vec<BigUint> = powers(b2, t);
            let mut out = Distribution::new();
            for i in 0..=t as usize {
                let lead = &rows[t as usize][i] * &pow1[i];
                let rest = t as usize - i;
                for j in 0..=rest {
                    let term = &lead * &rows[rest][j] * &pow2[j];
                    *out.entry(w1 * i + w2 * j).or_default() += term;
                }
            }
            out
        }
        _ => {
            let base: Distribution = base.iter().cloned().collect();
            let mut acc = BTreeMap::from([(0, BigUint::one())]);
            let mut sq = base;
            let mut e = t;
            while e > 0 {
                if e & 1 == 1 {
                    acc = convolve(&acc, &sq);
                }
                e >>= 1;
                if e > 0 {
                    sq = convolve(&sq, &sq);
                }
            }
            acc
        }
    }
}

fn binomial_row(t: u32) -> Vec<BigUint> {
    let mut row = Vec::with_capacity(t as usize + 1);
    let mut c = BigUint::one();
    row.push(c.clone());
    for i in 0..t {
        c = c * (t - i) / (i + 1);
        row.push(c.clone());
    }
    row
}

fn powers(b: &BigUint, t: u32) -> Vec<BigUint> {
    let mut v = Vec::with_capacity(t as usize + 1);
    let mut x = BigUint::one();
    for _ in 0..=t {
        v.push(x.clone());
        x *= b;
    }
    v
}

fn convolve(a: &Distribution, b: &Distribution) -> Distribution {
    let mut out = Distribution::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            *out.entry(wa + wb).or_default() += ca * cb;
        }
    }
    out
}

/// Expansion of a stored enumerator.
pub fn expand(e: &WeightEnumerator) -> Distribution {
    e.expanded().clone()
}

/// `(1 + (q-1) z^(n/s))^s` for a binomial check polynomial of degree `s`.
pub fn enumerator_binomial(q: u64, n: u64, s: u64) -> Result<WeightEnumerator> {
    if s == 0 || !n.is_multiple_of(s) {
        return Err(Error::InvalidArgument(format!("binomial degree {s} does not divide n = {n}")));
    }
    WeightEnumerator::new(
        vec![(0, BigUint::one()), ((n / s) as usize, BigUint::from(q - 1))],
        s as u32,
    )
}

fn class_parameters(n: u64, t: u64, r: u32, nu2u: u32) -> Result<u64> {
    if nu2u + 2 > r {
        return Err(Error::InconsistentParameters(format!(
            "nu_2(u) = {nu2u} exceeds r - 2 = {}",
            r as i64 - 2
        )));
    }
    let split = 1u64 << (r - nu2u);
    if t == 0 || !n.is_multiple_of(t * split) {
        return Err(Error::InconsistentParameters(format!(
            "t * 2^(r - nu_2(u)) = {} does not divide n = {n}",
            t.saturating_mul(split)
        )));
    }
    Ok(split)
}

/// `(n/t)(1 - 2^-(r - nu2u))`.
pub fn trinomial_min_distance(n: u64, t: u64, r: u32, nu2u: u32) -> Result<u64> {
    let split = class_parameters(n, t, r, nu2u)?;
    Ok(n / t - n / (t * split))
}

pub fn enumerator_trinomial(q: u64, n: u64, t: u64, r: u32, nu2u: u32) -> Result<WeightEnumerator> {
    let split = class_parameters(n, t, r, nu2u)?;
    let d = trinomial_min_distance(n, t, r, nu2u)?;
    if split > q + 1 {
        return Err(Error::InconsistentParameters(format!(
            "2^(r - nu_2(u)) = {split} exceeds q + 1 = {}",
            q + 1
        )));
    }
    let mut terms = vec![(0, BigUint::one()), (d as usize, BigUint::from(pair_weight_count(q, r, nu2u)))];
    let top = (q - 1) * (q + 1 - split);
    if top > 0 {
        terms.push(((n / t) as usize, BigUint::from(top)));
    }
    WeightEnumerator::new(terms, t as u32)
}

/// Number of `(mu, lambda)` in `F_q^2` for which `mu g + lambda x^t g` has
/// weight `d`: `2^(r - nu2u) (q - 1)`.
pub fn pair_weight_count(q: u64, r: u32, nu2u: u32) -> u64 {
    (1u64 << (r - nu2u)) * (q - 1)
}

/// `{(a^i - a^(qi)) / (a^(i+1) - a^(q(i+1))) : 0 <= i <= 2^(r - nu2u) - 2}`,
/// the scalars for which `g - lambda x^t g` loses weight. Elements are
/// returned in index order.
pub fn lambda_set(a: ExtElement, r: u32, nu2u: u32, tower: &FieldTower) -> Result<Vec<BaseElement>> {
    if tower.ext_add(a, tower.frobenius(a)).is_zero() {
        return Err(Error::InvalidArgument("a + a^q must be nonzero".into()));
    }
    if nu2u + 2 > r {
        return Err(Error::InconsistentParameters(format!("nu_2(u) = {nu2u} exceeds r - 2")));
    }
    let size = (1u64 << (r - nu2u)) - 1;
    let diff = |k: u64| {
        let ak = tower.ext_pow(a, k);
        tower.ext_sub(ak, tower.frobenius(ak))
    };
    let mut out = Vec::with_capacity(size as usize);
    for i in 0..size {
        let den = diff(i + 1);
        if den.is_zero() {
            return Err(Error::DegenerateDenominator { index: i + 1 });
        }
        let lambda = tower.ext_div(diff(i), den)?;
        out.push(tower.descend(lambda)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Channel {
    /// `sum A_i p^i (1-p)^(n-i)`; requires `q = 2`.
    Binary,
    /// Errors spread evenly over the `q - 1` wrong symbols.
    QAry,
}

impl Channel {
    pub fn label(self) -> &'static str {
        match self {
            Channel::Binary => "binary (exact)",
            Channel::QAry => "q-ary (extension)",
        }
    }
}

fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("finite below 2^1000").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64-bit value");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Probability that the channel turns a transmitted codeword into a
/// different codeword, `sum_{i>=1} A_i s^i (1-p)^(n-i)` with symbol error
/// mass `s = p` (binary) or `s = p/(q-1)` (q-ary). Terms are evaluated in
/// the log domain and summed with Neumaier compensation.
pub fn undetected_error_probability(dist: &Distribution, q: u64, n: u64, p: f64, channel: Channel) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ProbabilityRange(p));
    }
    if channel == Channel::Binary && q != 2 {
        return Err(Error::ChannelMismatch(q));
    }
    let symbol = match channel {
        Channel::Binary => p,
        Channel::QAry => p / (q - 1) as f64,
    };
    let (ln_s, ln_keep) = (symbol.ln(), (1.0 - p).ln());
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for (&w, count) in dist.range(1..) {
        if count.is_zero() || w as u64 > n {
            continue;
        }
        let rest = n - w as u64;
        if symbol == 0.0 || (rest > 0 && p == 1.0) {
            continue;
        }
        let ln_term = ln_big(count) + w as f64 * ln_s + if rest > 0 { rest as f64 * ln_keep } else { 0.0 };
        let term = ln_term.exp();
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }
    Ok(sum + comp)
}

/// One irreducible cyclic code: `[q; n, k, d]` with check polynomial `h`,
/// generator `g = (x^n - 1)/h` and its enumerator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeRecord {
    pub q: u64,
    pub n: u64,
    pub dimension: usize,
    pub min_distance: usize,
    pub check_poly: Poly,
    pub generator_poly: Poly,
    pub factor: IrreducibleFactor,
    pub enumerator: WeightEnumerator,
}

impl CodeRecord {
    /// `[q;n,k,d]`
    pub fn label(&self) -> String {
        format!("[{};{},{},{}]", self.q, self.n, self.dimension, self.min_distance)
    }

    /// `q^k` as an exact integer.
    pub fn codeword_count(&self) -> BigUint {
        BigUint::from(self.q).pow(self.dimension as u32)
    }
}

pub fn build_code_record(factor: &IrreducibleFactor, params: &CaseParameters, tower: &FieldTower) -> Result<CodeRecord> {
    let (q, n) = (params.q, params.n);
    let field = tower.base();
    let h = factor.poly().clone();
    let g = check_to_generator(n as usize, &h, field)?;
    let (enumerator, expected_d) = match *factor.kind() {
        FactorKind::Binomial { degree, .. } => (enumerator_binomial(q, n, degree as u64)?, n / degree as u64),
        FactorKind::Trinomial { half_degree, .. } => {
            let r = params.r.ok_or(Error::CaseMismatch { expected: "mixed" })?;
            let nu = factor.nu2u().expect("trinomials carry nu_2(u)");
            let t = half_degree as u64;
            (enumerator_trinomial(q, n, t, r, nu)?, trinomial_min_distance(n, t, r, nu)?)
        }
    };
    let d = enumerator
        .min_distance()
        .ok_or_else(|| Error::InconsistentParameters("enumerator has no positive weight".into()))?;
    if d as u64 != expected_d {
        return Err(Error::InconsistentParameters(format!(
            "enumerator distance {d} differs from the closed form {expected_d}"
        )));
    }
    let dimension = h.degree().expect("nonzero factor");
    if dimension != factor.degree() {
        return Err(Error::InconsistentParameters("factor degree mismatch".into()));
    }
    Ok(CodeRecord {
        q,
        n,
        dimension,
        min_distance: d,
        check_poly: h,
        generator_poly: g,
        factor: factor.clone(),
        enumerator,
    })
}

/// Every irreducible cyclic code of length `n` over the tower's base field,
/// in canonical factor order.
pub fn all_codes(params: &CaseParameters, tower: &FieldTower) -> Result<Vec<CodeRecord>> {
    crate::factorizer::factor(params, tower)?
        .iter()
        .map(|f| build_code_record(f, params, tower))
        .collect()
}
