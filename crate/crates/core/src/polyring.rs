//! Sparse univariate polynomials over `F_q` and codeword synthesis in
//! `F_q[x] / (x^n - 1)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gfield::{BaseElement, BaseField};

/// Polynomial keyed by degree; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<usize, BaseElement>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::monomial(0, BaseElement::ONE)
    }

    pub fn monomial(degree: usize, c: BaseElement) -> Self {
        Poly::from_terms([(degree, c)])
    }

    /// Repeated degrees are not summed; the last one wins.
    pub fn from_terms(terms: impl IntoIterator<Item = (usize, BaseElement)>) -> Self {
        Poly {
            terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Dense coefficients, low degree first.
    pub fn from_dense(coeffs: &[BaseElement]) -> Self {
        Poly::from_terms(coeffs.iter().copied().enumerate())
    }

    pub fn to_dense(&self) -> Vec<BaseElement> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|i| self.coeff(i)).collect(),
        }
    }

    /// `x^n - 1`.
    pub fn x_n_minus_one(n: usize, field: &BaseField) -> Self {
        if n == 0 {
            return Poly::zero();
        }
        Poly::from_terms([(0, field.neg(field.one())), (n, field.one())])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, degree: usize) -> BaseElement {
        self.terms.get(&degree).copied().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> Option<BaseElement> {
        self.terms.values().next_back().copied()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, BaseElement)> + '_ {
        self.terms.iter().map(|(&d, &c)| (d, c))
    }

    /// Number of nonzero coefficients.
    pub fn hamming_weight(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &Poly, field: &BaseField) -> Poly {
        let mut terms = self.terms.clone();
        for (d, c) in other.terms() {
            let s = field.add(terms.get(&d).copied().unwrap_or_default(), c);
            if s.is_zero() {
                terms.remove(&d);
            } else {
                terms.insert(d, s);
            }
        }
        Poly { terms }
    }

    pub fn neg(&self, field: &BaseField) -> Poly {
        Poly::from_terms(self.terms().map(|(d, c)| (d, field.neg(c))))
    }

    pub fn sub(&self, other: &Poly, field: &BaseField) -> Poly {
        self.add(&other.neg(field), field)
    }

    pub fn scale(&self, c: BaseElement, field: &BaseField) -> Poly {
        Poly::from_terms(self.terms().map(|(d, x)| (d, field.mul(c, x))))
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        Poly {
            terms: self.terms().map(|(d, c)| (d + k, c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly, field: &BaseField) -> Poly {
        let mut acc: BTreeMap<usize, BaseElement> = BTreeMap::new();
        for (d1, c1) in self.terms() {
            for (d2, c2) in other.terms() {
                let slot = acc.entry(d1 + d2).or_default();
                *slot = field.add(*slot, field.mul(c1, c2));
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Poly { terms: acc }
    }

    /// Quotient and remainder by long division from the top degree down.
    pub fn div_rem(&self, divisor: &Poly, field: &BaseField) -> Result<(Poly, Poly)> {
        let dg = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = field.inv(divisor.leading_coeff().expect("nonzero"))?;
        let mut rem = self.to_dense();
        let Some(df) = self.degree().filter(|&d| d >= dg) else {
            return Ok((Poly::zero(), self.clone()));
        };
        let mut quot = vec![BaseElement::default(); df - dg + 1];
        for top in (dg..=df).rev() {
            let c = rem[top];
            if c.is_zero() {
                continue;
            }
            let k = field.mul(c, lead_inv);
            let shift = top - dg;
            quot[shift] = k;
            for (d, gc) in divisor.terms() {
                rem[shift + d] = field.sub(rem[shift + d], field.mul(k, gc));
            }
        }
        Ok((Poly::from_dense(&quot), Poly::from_dense(&rem)))
    }

    /// `self / divisor`, failing unless the division is exact.
    pub fn div_exact(&self, divisor: &Poly, field: &BaseField) -> Result<Poly> {
        let (q, r) = self.div_rem(divisor, field)?;
        if !r.is_zero() {
            return Err(Error::RemainderNonzero);
        }
        Ok(q)
    }

    /// Degree first, then coefficients compared from the top degree down by
    /// canonical encoding. For equal degrees this is the order of the
    /// integer `sum enc(c_i) q^i`.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        match (self.degree(), other.degree()) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) if a != b => a.cmp(&b),
            (Some(d), Some(_)) => (0..=d)
                .rev()
                .map(|i| self.coeff(i).cmp(&other.coeff(i)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal),
        }
    }

    /// `x^2 + 8x + 1` style: descending degree, coefficients as canonical
    /// encodings, unit coefficients omitted on non-constant terms.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (d, c)) in self.terms().rev().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let enc = c.encoding();
            match (d, enc) {
                (0, _) => write!(out, "{enc}").unwrap(),
                (1, 1) => out.push('x'),
                (1, _) => write!(out, "{enc}x").unwrap(),
                (_, 1) => write!(out, "x^{d}").unwrap(),
                _ => write!(out, "{enc}x^{d}").unwrap(),
            }
        }
        out
    }

    /// Parses the [`Poly::render`] syntax. Also accepts `-` between terms,
    /// an optional `*` before `x`, and arbitrary whitespace. Over a prime
    /// field integer coefficients are reduced mod `p`; over a proper prime
    /// power they are canonical encodings and must be below `q`.
    pub fn parse(text: &str, field: &BaseField) -> Result<Poly> {
        let err = |reason: &str| Error::Parse {
            input: text.to_string(),
            reason: reason.to_string(),
        };
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(err("empty input"));
        }
        let mut pieces = Vec::new();
        let mut start = 0;
        let bytes = cleaned.as_bytes();
        for (i, &b) in bytes.iter().enumerate() {
            if (b == b'+' || b == b'-') && i > 0 && bytes[i - 1] != b'^' {
                pieces.push(&cleaned[start..i]);
                start = i;
            }
        }
        pieces.push(&cleaned[start..]);

        let mut acc = Poly::zero();
        for piece in pieces {
            let (negative, body) = match piece.as_bytes().first() {
                Some(b'+') => (false, &piece[1..]),
                Some(b'-') => (true, &piece[1..]),
                _ => (false, piece),
            };
            if body.is_empty() {
                return Err(err("dangling sign"));
            }
            let (coeff_text, degree) = match body.find('x') {
                None => (body, 0usize),
                Some(pos) => {
                    let coeff_text = body[..pos].trim_end_matches('*');
                    let rest = &body[pos + 1..];
                    let degree = if rest.is_empty() {
                        1
                    } else if let Some(exp) = rest.strip_prefix('^') {
                        exp.parse().map_err(|_| err("bad exponent"))?
                    } else {
                        return Err(err("unexpected text after x"));
                    };
                    (coeff_text, degree)
                }
            };
            let mut c = if coeff_text.is_empty() {
                field.one()
            } else {
                let value: u64 = coeff_text.parse().map_err(|_| err("bad coefficient"))?;
                if field.degree() == 1 {
                    field.from_int((value % field.characteristic()) as i64)
                } else {
                    field
                        .element(value)
                        .map_err(|_| err("coefficient encoding out of range"))?
                }
            };
            if negative {
                c = field.neg(c);
            }
            acc = acc.add(&Poly::monomial(degree, c), field);
        }
        Ok(acc)
    }
}

/// `g = (x^n - 1) / h` for a proper divisor `h` of `x^n - 1`.
pub fn check_to_generator(n: usize, h: &Poly, field: &BaseField) -> Result<Poly> {
    let degree = h.degree().ok_or(Error::DivisionByZero)?;
    if degree == 0 || degree >= n {
        return Err(Error::ImproperCheckPolynomial { degree, n });
    }
    Poly::x_n_minus_one(n, field).div_exact(h, field)
}

/// `sum_j message[j] * x^j * g`. Since `deg g + k - 1 < n` no reduction
/// modulo `x^n - 1` is needed.
pub fn codeword(message: &[BaseElement], g: &Poly, n: usize, field: &BaseField) -> Result<Poly> {
    let deg_g = g.degree().ok_or(Error::DivisionByZero)?;
    let k = n.checked_sub(deg_g).ok_or(Error::ImproperCheckPolynomial { degree: deg_g, n })?;
    if message.len() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            got: message.len(),
        });
    }
    let mut acc: BTreeMap<usize, BaseElement> = BTreeMap::new();
    for (j, &m) in message.iter().enumerate() {
        if m.is_zero() {
            continue;
        }
        for (d, c) in g.terms() {
            let slot = acc.entry(d + j).or_default();
            *slot = field.add(*slot, field.mul(m, c));
        }
    }
    Ok(Poly::from_terms(acc))
}
