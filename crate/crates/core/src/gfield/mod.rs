//! Exact arithmetic in `GF(p^e)`.
//!
//! A [`FieldSpec`] fixes the polynomial basis `GF(p)[x]/(f)`; an
//! [`Element`] is a coefficient vector in that basis. Elements carry no
//! field pointer, so every operation goes through the owning `FieldSpec`.
//!
//! [`TowerMap`] links `GF(q^2)` to `GF(q^4)`, where the primitive `n`-th
//! roots of unity live for `n | q^2 + 1`. [`ZechField`] is a table-driven
//! copy of `GF(q^2)` used by the linear algebra.

mod poly;
mod tower;
mod zech;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::intmath::{distinct_prime_factors_of_product, factorize, is_prime};
use crate::{Error, Result};

pub use tower::TowerMap;
pub use zech::{Fq, ZechField};

/// `q = p^e` with `p` prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimePower {
    pub p: u64,
    pub e: u32,
    pub q: u64,
}

pub fn factor_prime_power(q: u64) -> Result<PrimePower> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let f = factorize(q);
    if f.len() != 1 {
        return Err(Error::NotPrimePower(q));
    }
    let (p, e) = f[0];
    Ok(PrimePower { p, e, q })
}

/// `GF(p)[x] / (modulus)` with a monic irreducible modulus of degree `degree`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u64,
    degree: u32,
    modulus: Vec<u64>,
    order: u64,
}

/// A field element as `degree` coefficients over `GF(p)`, low-to-high.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    coeffs: Vec<u64>,
}

impl Element {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "{c}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Smallest monic irreducible of degree `e` over `GF(p)`, comparing
/// coefficients from the highest degree down. For `e = 1` the modulus is
/// `x` and the field is `GF(p)` itself.
pub fn make_field(p: u64, e: u32) -> Result<FieldSpec> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if e == 0 {
        return Err(Error::Internal("field degree must be positive".into()));
    }
    if p >= 1 << 31 {
        return Err(Error::FieldTooLarge { p, degree: e });
    }
    let order = p
        .checked_pow(e)
        .ok_or(Error::FieldTooLarge { p, degree: e })?;
    if e == 1 {
        return Ok(FieldSpec {
            p,
            degree: 1,
            modulus: vec![0, 1],
            order,
        });
    }
    let e_us = e as usize;
    for idx in 0..order {
        let mut modulus = digits(idx, p, e_us);
        modulus.push(1);
        if modulus[0] != 0 && poly::is_irreducible(&modulus, p) {
            return Ok(FieldSpec {
                p,
                degree: e,
                modulus,
                order,
            });
        }
    }
    Err(Error::Internal("no irreducible polynomial found".into()))
}

fn digits(mut idx: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(idx % p);
        idx /= p;
    }
    out
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Monic modulus, coefficients low-to-high.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn zero(&self) -> Element {
        Element {
            coeffs: vec![0; self.degree as usize],
        }
    }

    pub fn one(&self) -> Element {
        self.constant(1)
    }

    pub fn constant(&self, c: u64) -> Element {
        let mut e = self.zero();
        e.coeffs[0] = c % self.p;
        e
    }

    /// The basis element `x`. In the prime field the modulus is `x`
    /// itself, so this reduces to zero.
    pub fn generator_x(&self) -> Element {
        if self.degree == 1 {
            return self.zero();
        }
        let mut e = self.zero();
        e.coeffs[1] = 1;
        e
    }

    /// Builds an element from low-to-high coefficients, reducing each mod p.
    pub fn element(&self, coeffs: &[u64]) -> Element {
        assert!(coeffs.len() <= self.degree as usize, "too many coefficients");
        let mut e = self.zero();
        for (slot, &c) in e.coeffs.iter_mut().zip(coeffs) {
            *slot = c % self.p;
        }
        e
    }

    /// Packs coefficients as `sum c_i p^i`. Ordering by index matches the
    /// high-degree-first lexicographic order.
    pub fn to_index(&self, a: &Element) -> u64 {
        a.coeffs.iter().rev().fold(0u64, |acc, &c| acc * self.p + c)
    }

    pub fn from_index(&self, idx: u64) -> Element {
        Element {
            coeffs: digits(idx, self.p, self.degree as usize),
        }
    }

    fn check(&self, a: &Element) {
        debug_assert_eq!(a.coeffs.len(), self.degree as usize, "element from another field");
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        self.check(a);
        self.check(b);
        Element {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| (x + y) % self.p)
                .collect(),
        }
    }

    pub fn neg(&self, a: &Element) -> Element {
        Element {
            coeffs: a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect(),
        }
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        self.check(a);
        self.check(b);
        let p = self.p;
        let d = self.degree as usize;
        if d == 1 {
            return Element {
                coeffs: vec![a.coeffs[0] * b.coeffs[0] % p],
            };
        }
        let mut prod = vec![0u64; 2 * d - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for top in (d..2 * d - 1).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for i in 0..d {
                let m = self.modulus[i];
                if m != 0 {
                    let idx = top - d + i;
                    prod[idx] = (prod[idx] + (p - c) * m) % p;
                }
            }
        }
        prod.truncate(d);
        Element { coeffs: prod }
    }

    pub fn pow(&self, a: &Element, mut k: u64) -> Element {
        let mut acc = self.one();
        let mut base = a.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Signed exponent; negative powers go through the inverse.
    pub fn pow_signed(&self, a: &Element, k: i64) -> Result<Element> {
        if k >= 0 {
            Ok(self.pow(a, k as u64))
        } else {
            Ok(self.pow(&self.inv(a)?, k.unsigned_abs()))
        }
    }

    pub fn inv(&self, a: &Element) -> Result<Element> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.order - 2))
    }

    pub fn div(&self, a: &Element, b: &Element) -> Result<Element> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// `a -> a^p`.
    pub fn frobenius(&self, a: &Element) -> Element {
        self.pow(a, self.p)
    }

    /// For a field of even degree `2e` viewed as `GF(q^2)` with `q = p^e`,
    /// the conjugation `a -> a^q`.
    pub fn conjugate(&self, a: &Element) -> Result<Element> {
        if !self.degree.is_multiple_of(2) {
            return Err(Error::Internal("conjugation needs a field of even degree".into()));
        }
        Ok(self.pow(a, self.p.pow(self.degree / 2)))
    }

    /// Distinct primes dividing `order - 1`, factoring `p^d - 1` through
    /// `p^d - 1 = (p^(d/2) - 1)(p^(d/2) + 1)` so no factor exceeds `p^(d/2)+1`.
    pub fn group_order_primes(&self) -> Vec<u64> {
        let mut parts = Vec::new();
        let mut d = self.degree;
        while d.is_multiple_of(2) {
            parts.push(self.p.pow(d / 2) + 1);
            d /= 2;
        }
        parts.push(self.p.pow(d) - 1);
        distinct_prime_factors_of_product(&parts)
    }

    pub fn is_primitive(&self, a: &Element, primes: &[u64]) -> bool {
        if a.is_zero() {
            return false;
        }
        let m = self.order - 1;
        primes.iter().all(|&r| self.pow(a, m / r) != self.one())
    }

    /// First generator of the multiplicative group in index order.
    pub fn primitive_element(&self) -> Element {
        let primes = self.group_order_primes();
        for idx in 1..self.order {
            let a = self.from_index(idx);
            if self.is_primitive(&a, &primes) {
                return a;
            }
        }
        unreachable!("every finite field has a primitive element")
    }

    /// Horner evaluation of a polynomial over the prime field.
    pub fn eval_prime_poly(&self, poly: &[u64], at: &Element) -> Element {
        poly.iter().rev().fold(self.zero(), |acc, &c| {
            self.add(&self.mul(&acc, at), &self.constant(c))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_factoring() {
        assert_eq!(factor_prime_power(13).unwrap(), PrimePower { p: 13, e: 1, q: 13 });
        assert_eq!(factor_prime_power(27).unwrap(), PrimePower { p: 3, e: 3, q: 27 });
        assert_eq!(factor_prime_power(81).unwrap().e, 4);
        assert_eq!(factor_prime_power(12), Err(Error::NotPrimePower(12)));
        assert_eq!(factor_prime_power(33), Err(Error::NotPrimePower(33)));
        assert_eq!(factor_prime_power(1), Err(Error::NotPrimePower(1)));
    }

    #[test]
    fn field_moduli() {
        assert_eq!(make_field(13, 2).unwrap().modulus(), &[2, 0, 1]);
        assert_eq!(make_field(3, 2).unwrap().modulus(), &[1, 0, 1]);
        let f = make_field(7, 1).unwrap();
        assert_eq!(f.degree(), 1);
        assert_eq!(f.order(), 7);
        assert_eq!(make_field(12, 1), Err(Error::NotPrime(12)));
    }

    #[test]
    fn deterministic_modulus() {
        assert_eq!(make_field(17, 4).unwrap(), make_field(17, 4).unwrap());
    }

    #[test]
    fn x_squared_in_gf169() {
        let f = make_field(13, 2).unwrap();
        let x = f.generator_x();
        assert_eq!(f.mul(&x, &x), f.constant(11));
    }

    #[test]
    fn inverse_of_zero() {
        let f = make_field(13, 2).unwrap();
        assert_eq!(f.inv(&f.zero()), Err(Error::DivisionByZero));
        assert!(f.div(&f.one(), &f.zero()).is_err());
    }

    #[test]
    fn conjugation_in_gf9() {
        let f = make_field(3, 2).unwrap();
        let x = f.generator_x();
        assert_eq!(f.conjugate(&x).unwrap(), f.element(&[0, 2]));
        assert!(make_field(3, 3).unwrap().conjugate(&f.one()).is_err());
    }

    #[test]
    fn negative_powers() {
        let f = make_field(13, 2).unwrap();
        let a = f.element(&[3, 4]);
        let inv = f.pow_signed(&a, -1).unwrap();
        assert_eq!(f.mul(&a, &inv), f.one());
        assert_eq!(f.pow_signed(&a, -3).unwrap(), f.pow(&inv, 3));
    }

    #[test]
    fn index_round_trip_and_display() {
        let f = make_field(13, 2).unwrap();
        let a = f.element(&[5, 7]);
        assert_eq!(f.to_index(&a), 5 + 7 * 13);
        assert_eq!(f.from_index(96), a);
        assert_eq!(alloc::format!("{a}"), "7x+5");
        assert_eq!(alloc::format!("{}", f.zero()), "0");
    }
}
