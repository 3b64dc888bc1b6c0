//! Residues modulo `n`, `q^2`-cyclotomic cosets, the neg-q image
//! `x -> n - q*x` and the decomposition `T = T_ss ∪ T_sas` of a defining set.
//!
//! Cosets are stored as sorted element sets; the canonical representative
//! is the smallest element. Two labels naming the same set (for example
//! `C_13` and `C_16` modulo 29) therefore compare equal.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::intmath::{gcd, mul_mod};
use crate::{Error, Result};

/// An element of `Z_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    pub fn new(value: u64, modulus: u64) -> Result<Self> {
        if value >= modulus {
            return Err(Error::ResidueOutOfRange { value, modulus });
        }
        Ok(Self { value, modulus })
    }

    /// Reduces an arbitrary signed integer into `Z_n`.
    pub fn reduce(value: i128, modulus: u64) -> Self {
        let m = modulus as i128;
        Self {
            value: value.rem_euclid(m) as u64,
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// The orbit of a residue under multiplication by `q^2` modulo `n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclotomicCoset {
    modulus: u64,
    base: u64,
    elements: Vec<u64>,
}

impl CyclotomicCoset {
    pub fn representative(&self) -> u64 {
        self.elements[0]
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `q^2 mod n`.
    pub fn base(&self) -> u64 {
        self.base
    }
}

impl fmt::Display for CyclotomicCoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// How a coset behaves under the neg-q map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetClass {
    SkewSymmetric,
    /// The coset is exchanged with the coset whose representative is
    /// `partner`.
    AsymmetricPair { partner: u64 },
}

/// A union of cyclotomic cosets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefiningSet {
    n: u64,
    q: u64,
    reps: Vec<u64>,
    elements: BTreeSet<u64>,
}

impl DefiningSet {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Canonical coset representatives, in insertion order.
    pub fn reps(&self) -> &[u64] {
        &self.reps
    }

    pub fn elements(&self) -> &BTreeSet<u64> {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.contains(&x)
    }
}

/// Evidence for a coset landing in `T_ss`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    SkewSymmetric { rep: u64 },
    /// Both cosets lie in `T`; `image` is `n - q*rep mod n`, an element of
    /// the partner coset.
    AsymmetricPair { rep: u64, partner: u64, image: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub tss: DefiningSet,
    pub tsas: DefiningSet,
    pub witnesses: Vec<Witness>,
}

impl Decomposition {
    pub fn tss_size(&self) -> usize {
        self.tss.len()
    }
}

/// The `(n, q)` pair all coset operations are relative to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CosetContext {
    n: u64,
    q: u64,
    base: u64,
}

impl CosetContext {
    pub fn new(n: u64, q: u64) -> Result<Self> {
        if n == 0 || q == 0 || gcd(n, q) != 1 {
            return Err(Error::InvalidModulus { n, q });
        }
        let qm = q % n;
        Ok(Self {
            n,
            q,
            base: mul_mod(qm, qm, n),
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    fn check(&self, x: u64) -> Result<()> {
        if x >= self.n {
            Err(Error::ResidueOutOfRange {
                value: x,
                modulus: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// `C_s = { s * q^(2j) mod n }`.
    pub fn coset(&self, s: u64) -> Result<CyclotomicCoset> {
        self.check(s)?;
        let mut elements = Vec::new();
        let mut x = s;
        loop {
            elements.push(x);
            x = mul_mod(x, self.base, self.n);
            if x == s {
                break;
            }
        }
        elements.sort_unstable();
        Ok(CyclotomicCoset {
            modulus: self.n,
            base: self.base,
            elements,
        })
    }

    /// The coset partition of `Z_n`, ordered by representative.
    pub fn all_cosets(&self) -> Vec<CyclotomicCoset> {
        let mut seen = alloc::vec![false; self.n as usize];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s as usize] {
                continue;
            }
            let c = self.coset(s).expect("s < n");
            for &x in c.elements() {
                seen[x as usize] = true;
            }
            out.push(c);
        }
        out
    }

    /// `n - q*x mod n`.
    pub fn neg_q(&self, x: u64) -> u64 {
        let t = mul_mod(self.q % self.n, x % self.n, self.n);
        (self.n - t) % self.n
    }

    pub fn neg_q_image(&self, set: &BTreeSet<u64>) -> BTreeSet<u64> {
        set.iter().map(|&x| self.neg_q(x)).collect()
    }

    pub fn classify(&self, c: &CyclotomicCoset) -> CosetClass {
        let image = self.neg_q(c.representative());
        if c.contains(image) {
            CosetClass::SkewSymmetric
        } else {
            let partner = self.coset(image).expect("image < n").representative();
            CosetClass::AsymmetricPair { partner }
        }
    }

    /// Union of the cosets of the given residues. Repeated cosets are
    /// merged; representatives keep first-seen order.
    pub fn defining_set<I>(&self, residues: I) -> Result<DefiningSet>
    where
        I: IntoIterator<Item = u64>,
    {
        let mut reps = Vec::new();
        let mut elements = BTreeSet::new();
        for s in residues {
            let c = self.coset(s)?;
            if elements.contains(&c.representative()) {
                continue;
            }
            reps.push(c.representative());
            elements.extend(c.elements().iter().copied());
        }
        Ok(DefiningSet {
            n: self.n,
            q: self.q,
            reps,
            elements,
        })
    }

    /// Definition-level split: `T_ss = T ∩ T^{-q}`, `T_sas = T \ T_ss`.
    pub fn decompose(&self, t: &DefiningSet) -> Decomposition {
        let image = self.neg_q_image(&t.elements);
        let mut tss_reps = Vec::new();
        let mut tsas_reps = Vec::new();
        let mut witnesses = Vec::new();
        for &rep in &t.reps {
            if image.contains(&rep) {
                tss_reps.push(rep);
            } else {
                tsas_reps.push(rep);
            }
        }
        let mut sorted = t.reps.clone();
        sorted.sort_unstable();
        for &rep in &sorted {
            let c = self.coset(rep).expect("rep < n");
            match self.classify(&c) {
                CosetClass::SkewSymmetric => witnesses.push(Witness::SkewSymmetric { rep }),
                CosetClass::AsymmetricPair { partner } => {
                    if rep < partner && t.contains(partner) {
                        witnesses.push(Witness::AsymmetricPair {
                            rep,
                            partner,
                            image: self.neg_q(rep),
                        });
                    }
                }
            }
        }
        let tss = self.defining_set(tss_reps).expect("reps < n");
        let tsas = self.defining_set(tsas_reps).expect("reps < n");
        Decomposition {
            tss,
            tsas,
            witnesses,
        }
    }
}

/// `cyclotomic_coset(s, n, q)` without an explicit context.
pub fn cyclotomic_coset(s: u64, n: u64, q: u64) -> Result<CyclotomicCoset> {
    CosetContext::new(n, q)?.coset(s)
}

pub fn all_cosets(n: u64, q: u64) -> Result<Vec<CyclotomicCoset>> {
    Ok(CosetContext::new(n, q)?.all_cosets())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn set(xs: &[u64]) -> BTreeSet<u64> {
        xs.iter().copied().collect()
    }

    #[test]
    fn coset_examples() {
        assert_eq!(cyclotomic_coset(9, 17, 13).unwrap().elements(), &[8, 9]);
        assert_eq!(cyclotomic_coset(1, 17, 13).unwrap().elements(), &[1, 16]);
        assert_eq!(cyclotomic_coset(0, 17, 13).unwrap().elements(), &[0]);
        assert_eq!(cyclotomic_coset(0, 29, 17).unwrap().elements(), &[0]);
        assert_eq!(cyclotomic_coset(9, 17, 13).unwrap().representative(), 8);
    }

    #[test]
    fn coset_errors() {
        assert_eq!(
            cyclotomic_coset(1, 26, 13),
            Err(Error::InvalidModulus { n: 26, q: 13 })
        );
        assert!(matches!(
            cyclotomic_coset(17, 17, 13),
            Err(Error::ResidueOutOfRange { .. })
        ));
    }

    #[test]
    fn small_partition_mod_5() {
        // base 4 = -1 mod 5
        let cs = all_cosets(5, 2).unwrap();
        let sets: Vec<Vec<u64>> = cs.iter().map(|c| c.elements().to_vec()).collect();
        assert_eq!(sets, vec![vec![0], vec![1, 4], vec![2, 3]]);
    }

    #[test]
    fn partition_mod_17_and_29() {
        let cs = all_cosets(17, 13).unwrap();
        assert_eq!(cs.len(), 9);
        assert_eq!(cs[8].elements(), &[8, 9]);
        let cs = all_cosets(29, 17).unwrap();
        assert_eq!(cs.len(), 15);
        for c in &cs[1..] {
            let x = c.representative();
            assert_eq!(c.elements(), &[x, 29 - x]);
        }
    }

    #[test]
    fn neg_q_examples() {
        let ctx = CosetContext::new(17, 13).unwrap();
        assert_eq!(ctx.neg_q_image(&set(&[10, 7])), set(&[6, 11]));
        assert!(ctx.neg_q_image(&BTreeSet::new()).is_empty());
        assert_eq!(ctx.neg_q_image(&set(&[0])), set(&[0]));
    }

    #[test]
    fn classify_examples() {
        let ctx = CosetContext::new(17, 13).unwrap();
        assert_eq!(ctx.classify(&ctx.coset(0).unwrap()), CosetClass::SkewSymmetric);
        assert_eq!(
            ctx.classify(&ctx.coset(7).unwrap()),
            CosetClass::AsymmetricPair { partner: 6 }
        );
        assert_eq!(
            ctx.classify(&ctx.coset(8).unwrap()),
            CosetClass::AsymmetricPair { partner: 2 }
        );
    }

    #[test]
    fn decompose_examples() {
        let ctx = CosetContext::new(17, 13).unwrap();
        let t = ctx.defining_set([9, 10, 11, 12, 13]).unwrap();
        assert_eq!(t.len(), 10);
        let d = ctx.decompose(&t);
        assert_eq!(d.tss.elements(), &set(&[6, 7, 10, 11]));
        assert_eq!(d.tss_size(), 4);
        assert_eq!(
            d.witnesses,
            vec![Witness::AsymmetricPair {
                rep: 6,
                partner: 7,
                image: 7
            }]
        );
        assert_eq!(d.tsas.len(), 6);

        let t = ctx.defining_set([9, 10]).unwrap();
        assert!(ctx.decompose(&t).tss.is_empty());

        let t = ctx.defining_set(core::iter::empty()).unwrap();
        let d = ctx.decompose(&t);
        assert!(d.tss.is_empty() && d.tsas.is_empty());
    }

    #[test]
    fn label_aliasing() {
        let ctx = CosetContext::new(29, 17).unwrap();
        assert_eq!(ctx.coset(13).unwrap(), ctx.coset(16).unwrap());
        let t = ctx.defining_set([13, 16]).unwrap();
        assert_eq!(t.reps(), &[13]);
    }
}
