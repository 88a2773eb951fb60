//! Arithmetic in GF(p^m) with a canonical irreducible modulus.
//!
//! Elements are coefficient vectors over GF(p), constant term first. The
//! modulus is the monic irreducible polynomial of degree m whose coefficient
//! vector is smallest when read as the integer Σ c_i p^i; for m = 1 this is
//! the polynomial t, so arithmetic reduces to plain arithmetic mod p.
//!
//! Elements are also numbered `0..q` in canonical order: sorted by
//! coefficient vector with the constant term most significant.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Largest field order accepted by [`FiniteField::new`].
pub const MAX_FIELD_ORDER: u64 = 1 << 32;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement {
    pub coeffs: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    m: u32,
    /// Monic modulus, constant term first, length m + 1.
    modulus: Vec<u32>,
    q: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            return false;
        }
        f += 1;
    }
    true
}

/// Splits `q` as p^m with p prime.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let (mut rest, mut m) = (q, 0u32);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1 && p <= u32::MAX as u64).then_some((p as u32, m))
}

impl FiniteField {
    /// GF(p^m) with the canonical modulus.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::InvalidParams("extension degree must be >= 1".into()));
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or(Error::TooLarge(p.saturating_pow(m)))?;
        let p = p as u32;
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, m as usize)
        };
        Ok(Self { p, m, modulus, q })
    }

    /// GF(q) for a prime power q.
    pub fn with_order(q: u64) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p as u64, m)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { coeffs: vec![0; self.m as usize] }
    }

    pub fn one(&self) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = 1;
        e
    }

    /// Element with canonical index `index` (constant term most significant).
    pub fn element(&self, index: u64) -> FieldElement {
        let mut coeffs = vec![0; self.m as usize];
        let mut rest = index;
        for c in coeffs.iter_mut().rev() {
            *c = (rest % self.p as u64) as u32;
            rest /= self.p as u64;
        }
        FieldElement { coeffs }
    }

    pub fn index_of(&self, a: &FieldElement) -> u64 {
        a.coeffs.iter().fold(0, |acc, &c| acc * self.p as u64 + c as u64)
    }

    /// Embeds an integer into the prime subfield.
    pub fn from_int(&self, k: i64) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = k.rem_euclid(self.p as i64) as u32;
        e
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(|i| self.element(i))
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| (x + y) % self.p).collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let coeffs = a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect();
        FieldElement { coeffs }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.p as u64;
        let m = self.m as usize;
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // Reduce using t^m = -(c_0 + ... + c_{m-1} t^{m-1}).
        for k in (m..prod.len()).rev() {
            let top = prod[k];
            if top == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &c) in self.modulus[..m].iter().enumerate() {
                let sub = top * c as u64 % p;
                prod[k - m + i] = (prod[k - m + i] + p - sub) % p;
            }
        }
        FieldElement { coeffs: prod[..m].iter().map(|&c| c as u32).collect() }
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via a^(q-2); `None` for zero.
    pub fn inv(&self, a: &FieldElement) -> Option<FieldElement> {
        (!self.is_zero(a)).then(|| self.pow(a, self.q - 2))
    }

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }

    /// Euler's criterion: a ≠ 0 and a^((q-1)/2) = 1. In characteristic 2
    /// every element is a square.
    pub fn is_nonzero_square(&self, a: &FieldElement) -> bool {
        if self.is_zero(a) {
            return false;
        }
        if self.p == 2 {
            return true;
        }
        self.pow(a, (self.q - 1) / 2) == self.one()
    }

    /// Table of `is_nonzero_square` by canonical index, built by squaring
    /// every element once.
    pub fn square_table(&self) -> Vec<bool> {
        let mut table = vec![false; self.q as usize];
        for a in self.elements().skip(1) {
            let s = self.mul(&a, &a);
            table[self.index_of(&s) as usize] = true;
        }
        table
    }
}

fn poly_rem(mut a: Vec<u32>, b: &[u32], p: u32) -> Vec<u32> {
    // b is monic.
    let db = b.len() - 1;
    let p = p as u64;
    while a.len() > db {
        let top = *a.last().unwrap() as u64;
        let shift = a.len() - 1 - db;
        if top != 0 {
            for (i, &c) in b.iter().enumerate() {
                let v = (a[shift + i] as u64 + p - top * c as u64 % p) % p;
                a[shift + i] = v as u32;
            }
        }
        a.pop();
    }
    a
}

/// Monic polynomial of degree `deg` whose low coefficients spell `code` in base p.
fn monic_from_code(code: u64, deg: usize, p: u32) -> Vec<u32> {
    let mut coeffs = Vec::with_capacity(deg + 1);
    let mut rest = code;
    for _ in 0..deg {
        coeffs.push((rest % p as u64) as u32);
        rest /= p as u64;
    }
    coeffs.push(1);
    coeffs
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for k in 1..=deg / 2 {
        let count = (p as u64).pow(k as u32);
        for code in 0..count {
            let g = monic_from_code(code, k, p);
            if poly_rem(f.to_vec(), &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, m: usize) -> Vec<u32> {
    let count = (p as u64).pow(m as u32);
    (0..count)
        .map(|code| monic_from_code(code, m, p))
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible polynomial of every degree exists")
}
