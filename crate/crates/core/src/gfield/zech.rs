use alloc::vec;
use alloc::vec::Vec;

use super::{Element, FieldSpec};
use crate::{Error, Result};

/// Largest field order tabulated.
const MAX_ORDER: u64 = 1 << 26;

/// An element of a [`ZechField`]: `0` is zero, `i + 1` is `g^i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fq(u32);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn raw(self) -> u32 {
        self.0
    }
}

/// `GF(Q)` in logarithmic form over a fixed generator `g`, with a Zech
/// table `zech[i] = 1 + g^i` for addition.
#[derive(Debug, Clone)]
pub struct ZechField {
    spec: FieldSpec,
    /// `q` such that the field is `GF(q^2)`; conjugation is `a -> a^q`.
    conj_power: u64,
    group: u32,
    exp: Vec<u64>,
    log: Vec<Fq>,
    zech: Vec<Fq>,
    minus_one: Fq,
}

impl ZechField {
    /// Tabulates `spec`. The field must have even degree so that it is
    /// `GF(q^2)` with `q = p^(degree/2)`.
    pub fn new(spec: &FieldSpec) -> Result<Self> {
        let order = spec.order();
        if order > MAX_ORDER {
            return Err(Error::FieldTooLarge {
                p: spec.characteristic(),
                degree: spec.degree(),
            });
        }
        if !spec.degree().is_multiple_of(2) {
            return Err(Error::Internal("ZechField expects GF(q^2)".into()));
        }
        let group = (order - 1) as u32;
        let g = spec.primitive_element();
        let mut exp = Vec::with_capacity(group as usize);
        let mut log = vec![Fq::ZERO; order as usize];
        let mut acc = spec.one();
        for i in 0..group {
            let idx = spec.to_index(&acc);
            exp.push(idx);
            log[idx as usize] = Fq(i + 1);
            acc = spec.mul(&acc, &g);
        }
        let one = spec.one();
        let zech = exp
            .iter()
            .map(|&idx| {
                let s = spec.add(&spec.from_index(idx), &one);
                log[spec.to_index(&s) as usize]
            })
            .collect();
        let minus_one = log[spec.to_index(&spec.neg(&one)) as usize];
        Ok(Self {
            spec: spec.clone(),
            conj_power: spec.characteristic().pow(spec.degree() / 2),
            group,
            exp,
            log,
            zech,
            minus_one,
        })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn order(&self) -> u64 {
        self.group as u64 + 1
    }

    pub fn from_element(&self, a: &Element) -> Fq {
        self.log[self.spec.to_index(a) as usize]
    }

    pub fn to_element(&self, a: Fq) -> Element {
        self.spec.from_index(self.to_index(a))
    }

    /// Polynomial-basis index of `a`, as in [`FieldSpec::to_index`].
    pub fn to_index(&self, a: Fq) -> u64 {
        if a.is_zero() {
            0
        } else {
            self.exp[(a.0 - 1) as usize]
        }
    }

    pub fn from_index(&self, idx: u64) -> Fq {
        self.log[idx as usize]
    }

    #[inline]
    fn wrap(&self, l: u64) -> Fq {
        Fq((l % self.group as u64) as u32 + 1)
    }

    #[inline]
    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if a.is_zero() || b.is_zero() {
            return Fq::ZERO;
        }
        let s = (a.0 - 1) as u64 + (b.0 - 1) as u64;
        self.wrap(s)
    }

    #[inline]
    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        // a + b = a * (1 + b/a)
        let d = (b.0 + self.group - a.0) % self.group;
        let z = self.zech[d as usize];
        self.mul(a, z)
    }

    #[inline]
    pub fn neg(&self, a: Fq) -> Fq {
        self.mul(a, self.minus_one)
    }

    #[inline]
    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: Fq) -> Result<Fq> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.wrap(self.group as u64 - (a.0 - 1) as u64))
    }

    pub fn div(&self, a: Fq, b: Fq) -> Result<Fq> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fq, k: u64) -> Fq {
        if k == 0 {
            return Fq::ONE;
        }
        if a.is_zero() {
            return Fq::ZERO;
        }
        let l = ((a.0 - 1) as u128 * k as u128 % self.group as u128) as u64;
        self.wrap(l)
    }

    /// `a -> a^q`.
    #[inline]
    pub fn conj(&self, a: Fq) -> Fq {
        if a.is_zero() {
            return a;
        }
        let l = (a.0 - 1) as u64 * (self.conj_power % self.group as u64);
        self.wrap(l)
    }

    /// Every element, zero first.
    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..=self.group).map(Fq)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfield::make_field;

    #[test]
    fn agrees_with_polynomial_arithmetic() {
        let spec = make_field(5, 2).unwrap();
        let z = ZechField::new(&spec).unwrap();
        for i in 0..25 {
            for j in 0..25 {
                let (a, b) = (spec.from_index(i), spec.from_index(j));
                let (za, zb) = (z.from_index(i), z.from_index(j));
                assert_eq!(z.to_element(z.add(za, zb)), spec.add(&a, &b));
                assert_eq!(z.to_element(z.sub(za, zb)), spec.sub(&a, &b));
                assert_eq!(z.to_element(z.mul(za, zb)), spec.mul(&a, &b));
            }
            let a = spec.from_index(i);
            let za = z.from_index(i);
            assert_eq!(z.to_element(z.conj(za)), spec.conjugate(&a).unwrap());
            if i != 0 {
                assert_eq!(z.to_element(z.inv(za).unwrap()), spec.inv(&a).unwrap());
            }
        }
        assert!(z.inv(Fq::ZERO).is_err());
    }

    #[test]
    fn characteristic_two() {
        let spec = make_field(2, 4).unwrap();
        let z = ZechField::new(&spec).unwrap();
        for a in z.elements() {
            assert_eq!(z.add(a, a), Fq::ZERO);
            assert_eq!(z.neg(a), a);
        }
    }
}
