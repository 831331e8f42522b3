//! Dense polynomial helpers over any small field, used for modulus searches
//! and for the ad-hoc splitting fields of the coset oracle.
//!
//! Polynomials are coefficient vectors, low degree first, with no trailing
//! zeros. The empty vector is the zero polynomial.

use std::fmt::Debug;

use crate::numth::factorize;

/// Minimal field interface needed by the dense routines.
pub trait Arith {
    type E: Copy + Eq + Debug;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn add(&self, a: Self::E, b: Self::E) -> Self::E;
    fn sub(&self, a: Self::E, b: Self::E) -> Self::E;
    fn mul(&self, a: Self::E, b: Self::E) -> Self::E;
    /// Inverse of a nonzero element.
    fn inv(&self, a: Self::E) -> Self::E;
    fn order(&self) -> u64;
    /// The element with canonical encoding `i < order()`.
    fn from_index(&self, i: u64) -> Self::E;
}

/// `Z/pZ` with `u32` residues.
#[derive(Debug, Clone, Copy)]
pub struct PrimeField {
    pub p: u32,
}

impl Arith for PrimeField {
    type E = u32;
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }
    fn sub(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.p as u64 - b as u64) % self.p as u64) as u32
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        (a as u64 * b as u64 % self.p as u64) as u32
    }
    fn inv(&self, a: u32) -> u32 {
        let mut acc = 1u64;
        let mut base = a as u64;
        let m = self.p as u64;
        let mut e = m - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        acc as u32
    }
    fn order(&self) -> u64 {
        self.p as u64
    }
    fn from_index(&self, i: u64) -> u32 {
        i as u32
    }
}

pub fn trim<F: Arith>(f: &F, mut a: Vec<F::E>) -> Vec<F::E> {
    while a.last() == Some(&f.zero()) {
        a.pop();
    }
    a
}

pub fn add<F: Arith>(f: &F, a: &[F::E], b: &[F::E]) -> Vec<F::E> {
    zip_with(f, a, b, |x, y| f.add(x, y))
}

pub fn sub<F: Arith>(f: &F, a: &[F::E], b: &[F::E]) -> Vec<F::E> {
    zip_with(f, a, b, |x, y| f.sub(x, y))
}

fn zip_with<F: Arith>(f: &F, a: &[F::E], b: &[F::E], op: impl Fn(F::E, F::E) -> F::E) -> Vec<F::E> {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(f.zero());
            let y = b.get(i).copied().unwrap_or(f.zero());
            op(x, y)
        })
        .collect();
    trim(f, out)
}

pub fn mul<F: Arith>(f: &F, a: &[F::E], b: &[F::E]) -> Vec<F::E> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == f.zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(f, out)
}

/// Remainder of `a` modulo the nonzero polynomial `m`.
pub fn rem<F: Arith>(f: &F, a: &[F::E], m: &[F::E]) -> Vec<F::E> {
    assert!(!m.is_empty(), "division by the zero polynomial");
    let mut r = trim(f, a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = f.inv(m[dm]);
    while r.len() > dm {
        let top = r.len() - 1;
        let c = f.mul(r[top], lead_inv);
        let shift = top - dm;
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = f.sub(r[shift + i], f.mul(c, mi));
        }
        r = trim(f, r);
    }
    r
}

pub fn mulmod<F: Arith>(f: &F, a: &[F::E], b: &[F::E], m: &[F::E]) -> Vec<F::E> {
    rem(f, &mul(f, a, b), m)
}

pub fn powmod<F: Arith>(f: &F, a: &[F::E], mut exp: u128, m: &[F::E]) -> Vec<F::E> {
    let mut acc = rem(f, &[f.one()], m);
    let mut base = rem(f, a, m);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(f, &acc, &base, m);
        }
        base = mulmod(f, &base, &base, m);
        exp >>= 1;
    }
    acc
}

/// Monic gcd.
pub fn gcd<F: Arith>(f: &F, a: &[F::E], b: &[F::E]) -> Vec<F::E> {
    let mut a = trim(f, a.to_vec());
    let mut b = trim(f, b.to_vec());
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let li = f.inv(lead);
        a.iter_mut().for_each(|c| *c = f.mul(*c, li));
    }
    a
}

/// Rabin's irreducibility test for a monic `m` of degree `d >= 1`:
/// `x^(Q^d) = x mod m` and `gcd(x^(Q^(d/r)) - x, m) = 1` for each prime `r | d`.
pub fn is_irreducible<F: Arith>(f: &F, m: &[F::E]) -> bool {
    let d = m.len().saturating_sub(1);
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x = vec![f.zero(), f.one()];
    let q = f.order() as u128;
    // frob[k] = x^(Q^k) mod m
    let mut frob = vec![rem(f, &x, m)];
    for k in 1..=d {
        let next = powmod(f, &frob[k - 1], q, m);
        frob.push(next);
    }
    if frob[d] != rem(f, &x, m) {
        return false;
    }
    let primes: Vec<u64> = factorize(d as u64)
        .expect("degree within range")
        .primes()
        .collect();
    primes.into_iter().all(|r| {
        let k = d / r as usize;
        let diff = sub(f, &frob[k], &x);
        gcd(f, &diff, m).len() == 1
    })
}

/// The monic irreducible polynomial of the given degree whose lower
/// coefficients `c_0 .. c_{d-1}` have the smallest encoding
/// `sum c_i Q^i`, searched in increasing encoding order.
pub fn smallest_irreducible<F: Arith>(f: &F, degree: usize) -> Vec<F::E> {
    assert!(degree >= 1);
    let q = f.order();
    let mut counter = vec![0u64; degree];
    loop {
        let mut poly: Vec<F::E> = counter.iter().map(|&i| f.from_index(i)).collect();
        poly.push(f.one());
        if is_irreducible(f, &poly) {
            return poly;
        }
        // increment the little-endian base-Q counter
        let mut i = 0;
        loop {
            counter[i] += 1;
            if counter[i] < q {
                break;
            }
            counter[i] = 0;
            i += 1;
            assert!(i < degree, "an irreducible polynomial of every degree exists");
        }
    }
}
