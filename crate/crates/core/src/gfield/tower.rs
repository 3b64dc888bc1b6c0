use alloc::vec;
use alloc::vec::Vec;

use super::{factor_prime_power, make_field, Element, FieldSpec, PrimePower};
use crate::intmath::pow_mod;
use crate::{Error, Result};

/// `GF(q^2) ⊂ GF(q^4)`, both built over the prime field.
///
/// The embedding sends the base field's `x` to `theta`, the smallest root
/// (in index order) of the base modulus inside the top field. The top field
/// is two-dimensional over the image with basis `{1, x}`.
#[derive(Debug, Clone)]
pub struct TowerMap {
    prime_power: PrimePower,
    base: FieldSpec,
    top: FieldSpec,
    theta: Element,
    theta_pows: Vec<Element>,
    beta: Element,
    // inverse of the GF(p)-matrix whose columns are theta^i and theta^i * beta
    coords: Vec<Vec<u64>>,
    top_generator: Element,
}

impl TowerMap {
    pub fn new(q: u64) -> Result<Self> {
        let pp = factor_prime_power(q)?;
        let (p, e) = (pp.p, pp.e);
        let base = make_field(p, 2 * e)?;
        let top = make_field(p, 4 * e)?;
        let top_generator = top.primitive_element();

        // g^(q^2+1) generates the copy of GF(q^2)^* inside GF(q^4)
        let q2 = q * q;
        let omega = top.pow(&top_generator, q2 + 1);
        let want = base.degree() as usize;
        let mut roots = Vec::with_capacity(want);
        let mut y = top.one();
        for _ in 0..q2 - 1 {
            if top.eval_prime_poly(base.modulus(), &y).is_zero() {
                roots.push(y.clone());
                if roots.len() == want {
                    break;
                }
            }
            y = top.mul(&y, &omega);
        }
        let theta = roots
            .into_iter()
            .min_by_key(|r| top.to_index(r))
            .ok_or_else(|| Error::Internal("base modulus has no root in GF(q^4)".into()))?;

        let mut theta_pows = Vec::with_capacity(want);
        let mut acc = top.one();
        for _ in 0..want {
            theta_pows.push(acc.clone());
            acc = top.mul(&acc, &theta);
        }
        let beta = top.generator_x();

        let dim = top.degree() as usize;
        let mut basis = vec![vec![0u64; dim]; dim];
        for (j, t) in theta_pows.iter().enumerate() {
            let tb = top.mul(t, &beta);
            for i in 0..dim {
                basis[i][j] = t.coeffs()[i];
                basis[i][j + want] = tb.coeffs()[i];
            }
        }
        let coords = invert_mod_p(basis, p)
            .ok_or_else(|| Error::Internal("tower basis is singular".into()))?;

        Ok(Self {
            prime_power: pp,
            base,
            top,
            theta,
            theta_pows,
            beta,
            coords,
            top_generator,
        })
    }

    pub fn q(&self) -> u64 {
        self.prime_power.q
    }

    pub fn prime_power(&self) -> PrimePower {
        self.prime_power
    }

    /// `GF(q^2)`.
    pub fn base(&self) -> &FieldSpec {
        &self.base
    }

    /// `GF(q^4)`.
    pub fn top(&self) -> &FieldSpec {
        &self.top
    }

    pub fn theta(&self) -> &Element {
        &self.theta
    }

    /// Second basis vector of `GF(q^4)` over `GF(q^2)`.
    pub fn beta(&self) -> &Element {
        &self.beta
    }

    pub fn top_generator(&self) -> &Element {
        &self.top_generator
    }

    pub fn embed(&self, b: &Element) -> Element {
        b.coeffs()
            .iter()
            .zip(&self.theta_pows)
            .fold(self.top.zero(), |acc, (&c, t)| {
                self.top.add(&acc, &self.top.mul(&self.top.constant(c), t))
            })
    }

    /// Coordinates `(b0, b1)` with `a = embed(b0) + embed(b1) * beta`.
    pub fn project(&self, a: &Element) -> (Element, Element) {
        let p = self.top.characteristic();
        let half = self.base.degree() as usize;
        let v = a.coeffs();
        let solved: Vec<u64> = self
            .coords
            .iter()
            .map(|row| row.iter().zip(v).fold(0u64, |s, (&m, &x)| (s + m * x) % p))
            .collect();
        (
            self.base.element(&solved[..half]),
            self.base.element(&solved[half..]),
        )
    }

    pub fn in_subfield(&self, a: &Element) -> bool {
        let q2 = self.q() * self.q();
        self.top.pow(a, q2) == *a
    }

    /// `g^((q^4 - 1) / n)` for the fixed generator `g` of `GF(q^4)^*`.
    pub fn nth_root_of_unity(&self, n: u64) -> Result<Element> {
        let order = self.top.order() - 1;
        if n == 0 || !order.is_multiple_of(n) {
            return Err(Error::NoRootOfUnity { n, order });
        }
        Ok(self.top.pow(&self.top_generator, order / n))
    }
}

fn invert_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> Option<Vec<Vec<u64>>> {
    let dim = m.len();
    let mut inv: Vec<Vec<u64>> = (0..dim)
        .map(|i| (0..dim).map(|j| u64::from(i == j)).collect())
        .collect();
    for col in 0..dim {
        let pivot = (col..dim).find(|&r| m[r][col] != 0)?;
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let scale = pow_mod(m[col][col], p - 2, p);
        for j in 0..dim {
            m[col][j] = m[col][j] * scale % p;
            inv[col][j] = inv[col][j] * scale % p;
        }
        for r in 0..dim {
            if r == col || m[r][col] == 0 {
                continue;
            }
            let f = m[r][col];
            for j in 0..dim {
                m[r][j] = (m[r][j] + p - f * m[col][j] % p) % p;
                inv[r][j] = (inv[r][j] + p - f * inv[col][j] % p) % p;
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_is_a_root() {
        let t = TowerMap::new(13).unwrap();
        let f = t.base().modulus();
        assert!(t.top().eval_prime_poly(f, t.theta()).is_zero());
        assert!(t.in_subfield(t.theta()));
        assert!(!t.in_subfield(t.beta()));
    }

    #[test]
    fn projection_sections() {
        let t = TowerMap::new(9).unwrap();
        let b = t.base().element(&[2, 1, 0, 1]);
        assert_eq!(t.project(&t.embed(&b)), (b, t.base().zero()));
        assert_eq!(t.project(t.beta()), (t.base().zero(), t.base().one()));
    }

    #[test]
    fn roots_of_unity() {
        let t = TowerMap::new(13).unwrap();
        let g = t.nth_root_of_unity(17).unwrap();
        let top = t.top();
        assert_eq!(top.pow(&g, 17), top.one());
        for j in 1..17 {
            assert_ne!(top.pow(&g, j), top.one());
        }
        assert_eq!(t.nth_root_of_unity(1).unwrap(), top.one());
        let g7 = t.nth_root_of_unity(7).unwrap();
        assert_eq!(top.pow(&g7, 7), top.one());
        assert_ne!(g7, top.one());
        assert!(matches!(
            t.nth_root_of_unity(11),
            Err(Error::NoRootOfUnity { n: 11, .. })
        ));
    }
}
