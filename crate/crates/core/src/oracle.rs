//! Exhaustive codeword enumeration and per-code verification reports.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factorizer::{case_parameters, FactorKind};
use crate::gfield::{BaseElement, BaseField, FieldTower};
use crate::polyring::{codeword, Poly};
use crate::wdist::{
    lambda_set, pair_weight_count, render_distribution, trinomial_min_distance, CodeRecord, Distribution,
};

pub const DEFAULT_CAP: u64 = 1_000_000;
pub const DEFAULT_EXHAUSTIVE_Q_BOUND: u64 = 9;

/// Messages per parallel chunk below which a single pass is used.
const CHUNK_FLOOR: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForce {
    pub distribution: Distribution,
    /// Number of messages actually enumerated.
    pub messages: u64,
}

fn message_count(code: &CodeRecord, cap: u64) -> Result<u64> {
    let total = code.codeword_count();
    match total.to_u64() {
        Some(m) if m <= cap => Ok(m),
        _ => Err(Error::CapExceeded {
            codewords: total.to_string(),
            cap,
        }),
    }
}

/// Walks the messages whose leading digits (all but digit 0) run through
/// `start..end` as base-`q` counters; digit `j` multiplies `x^basis[j] g`.
/// For each prefix the `q` choices of digit 0 are handled together: a
/// position in the support of `x^basis[0] g` vanishes for exactly one
/// value of the digit, so one pass over that support yields all `q`
/// weights.
fn walk(
    field: &BaseField,
    g: &Poly,
    n: usize,
    basis: &[usize],
    start: u64,
    end: u64,
) -> Result<BTreeMap<usize, u64>> {
    let q = field.order();
    let k = basis.len();
    let symbol = |d: u64| field.element(d).expect("digit below q");
    let mut digits = vec![0u64; k];
    let mut rest = start;
    for d in digits.iter_mut().skip(1) {
        *d = rest % q;
        rest /= q;
    }
    let mut message = vec![field.zero(); basis.iter().max().map_or(0, |m| m + 1)];
    for (j, &d) in digits.iter().enumerate() {
        message[basis[j]] = symbol(d);
    }
    let mut word = codeword(&message, g, n, field)?.to_dense();
    word.resize(n, field.zero());
    let support: Vec<(usize, BaseElement)> = g.terms().collect();

    let mut inner = vec![false; n];
    let inner_support: Vec<(usize, BaseElement)> = support
        .iter()
        .map(|&(pos, c)| {
            inner[pos + basis[0]] = true;
            (pos + basis[0], field.neg(field.inv(c).expect("nonzero coefficient")))
        })
        .collect();
    let mut outside = (0..n).filter(|&i| !inner[i] && !word[i].is_zero()).count();

    let mut hist = vec![0u64; n + 1];
    let mut vanish = vec![0usize; q as usize];
    for index in start..end {
        vanish.iter_mut().for_each(|v| *v = 0);
        for &(pos, neg_inv) in &inner_support {
            vanish[field.mul(word[pos], neg_inv).encoding() as usize] += 1;
        }
        for &v in &vanish {
            hist[outside + inner_support.len() - v] += 1;
        }
        if index + 1 == end {
            break;
        }
        for j in 1..k {
            let old = digits[j];
            let new = (old + 1) % q;
            digits[j] = new;
            let delta = field.sub(symbol(new), symbol(old));
            for &(pos, c) in &support {
                let at = pos + basis[j];
                let slot = &mut word[at];
                let before = slot.is_zero();
                *slot = field.add(*slot, field.mul(delta, c));
                if !inner[at] {
                    match (before, slot.is_zero()) {
                        (true, false) => outside += 1,
                        (false, true) => outside -= 1,
                        _ => {}
                    }
                }
            }
            if new != 0 {
                break;
            }
        }
    }
    Ok(hist
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .collect())
}

fn to_distribution(hist: BTreeMap<usize, u64>) -> Distribution {
    hist.into_iter().map(|(w, c)| (w, BigUint::from(c))).collect()
}

fn merge(mut a: BTreeMap<usize, u64>, b: BTreeMap<usize, u64>) -> BTreeMap<usize, u64> {
    for (w, c) in b {
        *a.entry(w).or_insert(0) += c;
    }
    a
}

fn run_chunks(field: &BaseField, g: &Poly, n: usize, basis: &[usize], messages: u64, chunks: u64) -> Result<BruteForce> {
    let prefixes = messages / field.order();
    let chunks = chunks.clamp(1, prefixes.max(1));
    let bounds: Vec<(u64, u64)> = (0..chunks)
        .map(|i| (prefixes * i / chunks, prefixes * (i + 1) / chunks))
        .filter(|(s, e)| s < e)
        .collect();
    let parts = bounds
        .par_iter()
        .map(|&(s, e)| walk(field, g, n, basis, s, e))
        .collect::<Result<Vec<_>>>()?;
    let hist = parts.into_iter().fold(BTreeMap::new(), merge);
    let counted: u64 = hist.values().sum();
    Ok(BruteForce {
        distribution: to_distribution(hist),
        messages: counted,
    })
}

fn default_chunks(messages: u64) -> u64 {
    if messages < 4 * CHUNK_FLOOR {
        1
    } else {
        (messages / CHUNK_FLOOR).min(4 * rayon::current_num_threads() as u64)
    }
}

/// Exact weight distribution split over `chunks` disjoint message ranges,
/// with an explicit basis ordering (a permutation of `0..k`).
pub fn brute_force_with(code: &CodeRecord, cap: u64, chunks: u64, basis: &[usize]) -> Result<BruteForce> {
    let messages = message_count(code, cap)?;
    let mut sorted = basis.to_vec();
    sorted.sort_unstable();
    if sorted != (0..code.dimension).collect::<Vec<_>>() {
        return Err(Error::InvalidArgument("basis order must permute 0..k".into()));
    }
    let (p, e) = crate::numth::prime_power(code.q).ok_or(Error::NotPrimePower(code.q))?;
    let field = BaseField::new(p, e)?;
    run_chunks(&field, &code.generator_poly, code.n as usize, basis, messages, chunks)
}

/// Distribution of the cyclic code of length `n` generated by any divisor
/// `g` of `x^n - 1`.
pub fn brute_force_generator(field: &BaseField, g: &Poly, n: usize, cap: u64) -> Result<BruteForce> {
    let deg = g.degree().ok_or(Error::InvalidArgument("generator must be nonzero".into()))?;
    if deg >= n {
        return Err(Error::ImproperCheckPolynomial { degree: 0, n });
    }
    let k = n - deg;
    let total = BigUint::from(field.order()).pow(k as u32);
    let messages = match total.to_u64() {
        Some(m) if m <= cap => m,
        _ => {
            return Err(Error::CapExceeded {
                codewords: total.to_string(),
                cap,
            })
        }
    };
    let basis: Vec<usize> = (0..k).collect();
    run_chunks(field, g, n, &basis, messages, default_chunks(messages))
}

/// Exact weight distribution over all `q^k` codewords.
pub fn brute_force_distribution(code: &CodeRecord, cap: u64) -> Result<BruteForce> {
    let chunks = default_chunks(message_count(code, cap)?);
    let basis: Vec<usize> = (0..code.dimension).collect();
    brute_force_with(code, cap, chunks, &basis)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub cap: u64,
    /// Largest `q` for which the scalar-by-scalar checks run.
    pub exhaustive_q_bound: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            cap: DEFAULT_CAP,
            exhaustive_q_bound: DEFAULT_EXHAUSTIVE_Q_BOUND,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeId {
    pub q: u64,
    pub n: u64,
    pub check_poly: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub predicted: String,
    pub measured: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    pub name: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub code_id: CodeId,
    pub checks: Vec<Check>,
    pub skipped: Vec<Skipped>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    fn check(&mut self, name: &str, predicted: impl ToString, measured: impl ToString) {
        let (predicted, measured) = (predicted.to_string(), measured.to_string());
        self.checks.push(Check {
            name: name.into(),
            pass: predicted == measured,
            predicted,
            measured,
        });
    }

    fn skip(&mut self, name: &str, reason: impl Into<String>) {
        self.skipped.push(Skipped {
            name: name.into(),
            reason: reason.into(),
        });
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "q={} n={} h={}: {}\n",
            self.code_id.q,
            self.code_id.n,
            self.code_id.check_poly,
            if self.passed() { "ok" } else { "FAILED" }
        );
        for c in &self.checks {
            let mark = if c.pass { "pass" } else { "FAIL" };
            out += &format!("  {mark} {}: predicted {} measured {}\n", c.name, c.predicted, c.measured);
        }
        for s in &self.skipped {
            out += &format!("  skip {}: {}\n", s.name, s.reason);
        }
        out
    }
}

fn weights_joined(v: &[usize]) -> String {
    if v.is_empty() {
        return "none".into();
    }
    v.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(",")
}

/// Runs every applicable check on one code. Failures become report
/// entries; only malformed inputs return an error.
pub fn verify_code(code: &CodeRecord, tower: &FieldTower, config: &VerifyConfig) -> Result<VerificationReport> {
    let field = tower.base();
    let (q, n) = (code.q, code.n);
    let mut report = VerificationReport {
        code_id: CodeId {
            q,
            n,
            check_poly: code.check_poly.render(),
        },
        checks: Vec::new(),
        skipped: Vec::new(),
    };
    let expanded = code.enumerator.expanded();

    report.check("mass", code.codeword_count(), expanded.values().sum::<BigUint>());

    let positive = expanded.iter().find(|(w, c)| **w > 0 && !c.is_zero()).map(|(w, _)| *w);
    match brute_force_distribution(code, config.cap) {
        Ok(bf) => {
            report.check("messages enumerated", code.codeword_count(), bf.messages);
            report.check(
                "distribution",
                render_distribution(expanded),
                render_distribution(&bf.distribution),
            );
            let measured_d = bf.distribution.keys().copied().find(|&w| w > 0);
            report.check(
                "minimum distance",
                code.min_distance,
                measured_d.map_or("none".into(), |d| d.to_string()),
            );
        }
        Err(Error::CapExceeded { codewords, cap }) => {
            let reason = format!("cap: q^k = {codewords} exceeds {cap}");
            report.skip("distribution", reason.clone());
            report.skip("messages enumerated", reason);
            report.check(
                "minimum distance",
                code.min_distance,
                positive.map_or("none".into(), |d| d.to_string()),
            );
        }
        Err(e) => return Err(e),
    }

    let support: Vec<usize> = expanded.iter().filter(|(_, c)| !c.is_zero()).map(|(w, _)| *w).collect();
    match *code.factor.kind() {
        FactorKind::Binomial { degree, .. } => {
            let step = n as usize / degree;
            report.check("distance formula", step, code.min_distance);
            let bad: Vec<usize> = support.iter().copied().filter(|w| w % step != 0).collect();
            report.check("divisibility", format!("all weights divisible by {step}"), divisibility(&bad, step));
            for name in ["weight values", "pair count"] {
                report.skip(name, "binomial code");
            }
        }
        FactorKind::Trinomial { half_degree, a } => {
            let params = case_parameters(n, q)?;
            let r = params.r.ok_or(Error::CaseMismatch { expected: "mixed" })?;
            let nu = code.factor.nu2u().expect("trinomials carry nu_2(u)");
            let t = half_degree as u64;
            let d = trinomial_min_distance(n, t, r, nu)?;
            report.check("distance formula", d, code.min_distance);
            let step = (n / (t << (r - nu))) as usize;
            let bad: Vec<usize> = support.iter().copied().filter(|w| w % step != 0).collect();
            report.check("divisibility", format!("all weights divisible by {step}"), divisibility(&bad, step));

            let lambdas = lambda_set(a, r, nu, tower)?;
            let mut distinct = lambdas.clone();
            distinct.sort();
            distinct.dedup();
            report.check("lambda set size", (1u64 << (r - nu)) - 1, distinct.len());

            if q > config.exhaustive_q_bound {
                let reason = format!("q = {q} exceeds exhaustive bound {}", config.exhaustive_q_bound);
                report.skip("weight values", reason.clone());
                report.skip("pair count", reason);
            } else {
                let g = &code.generator_poly;
                let shifted = g.shift(half_degree);
                let formula: Vec<String> = field
                    .elements()
                    .map(|lam| {
                        let w = if lambdas.contains(&lam) { d } else { n / t };
                        format!("{lam}:{w}")
                    })
                    .collect();
                let measured: Vec<String> = field
                    .elements()
                    .map(|lam| format!("{lam}:{}", g.sub(&shifted.scale(lam, field), field).hamming_weight()))
                    .collect();
                report.check("weight values", formula.join(" "), measured.join(" "));

                let mut pairs = 0u64;
                for mu in field.elements() {
                    let base = g.scale(mu, field);
                    for lam in field.elements() {
                        if base.add(&shifted.scale(lam, field), field).hamming_weight() as u64 == d {
                            pairs += 1;
                        }
                    }
                }
                report.check("pair count", pair_weight_count(q, r, nu), pairs);
            }
        }
    }
    Ok(report)
}

fn divisibility(bad: &[usize], step: usize) -> String {
    if bad.is_empty() {
        format!("all weights divisible by {step}")
    } else {
        format!("counterexamples {}", weights_joined(bad))
    }
}

/// Verifies every code, preserving input order.
pub fn verify_all(codes: &[CodeRecord], tower: &FieldTower, config: &VerifyConfig) -> Result<Vec<VerificationReport>> {
    codes.par_iter().map(|c| verify_code(c, tower, config)).collect()
}
