//! Cyclic codes over `GF(q^2)` of length `n | q^2 + 1`: consecutive-coset
//! defining sets, generator polynomials, parity-check matrices and the
//! BCH designed distance.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::gfield::{Element, Fq, TowerMap, ZechField};
use crate::intmath::mul_mod;
use crate::linalg::Matrix;
use crate::zmod::{CosetContext, DefiningSet};
use crate::{Error, Result};

/// `T = C_s ∪ C_{s+1} ∪ ... ∪ C_{s+k}` with `s = (n+1)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConsecutiveSpec {
    q: u64,
    n: u64,
    s: u64,
    k: u64,
}

impl ConsecutiveSpec {
    pub fn new(q: u64, n: u64, k: u64) -> Result<Self> {
        let q2p1 = (q as u128) * (q as u128) + 1;
        if n < 3 || n.is_multiple_of(2) || !q2p1.is_multiple_of(n as u128) {
            return Err(Error::BadLength { q, n });
        }
        let s = n.div_ceil(2);
        if k > s - 2 {
            return Err(Error::RunIndexOutOfRange { k, max: s - 2 });
        }
        Ok(Self { q, n, s, k })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// Largest admissible run index, `s - 2`.
    pub fn max_k(&self) -> u64 {
        self.s - 2
    }

    /// The defining set; its elements are `{s-k-1, ..., s+k}`.
    pub fn build_t(&self) -> DefiningSet {
        let ctx = CosetContext::new(self.n, self.q).expect("n | q^2+1 forces gcd(n, q) = 1");
        ctx.defining_set((0..=self.k).map(|i| self.s + i))
            .expect("s + k <= n - 1")
    }
}

/// Length of the longest cyclic run of consecutive residues in `T`, plus one.
pub fn bch_designed_distance(t: &DefiningSet) -> Result<u64> {
    let n = t.n();
    if t.len() as u64 == n {
        return Err(Error::DegenerateCode);
    }
    let mut best = 0u64;
    for &x in t.elements() {
        let prev = (x + n - 1) % n;
        if t.contains(prev) {
            continue;
        }
        let mut len = 1;
        let mut y = (x + 1) % n;
        while t.contains(y) {
            len += 1;
            y = (y + 1) % n;
        }
        best = best.max(len);
    }
    Ok(best + 1)
}

/// A parity-check matrix in reduced row echelon form with `|T|` rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckMatrix {
    matrix: Matrix,
}

impl CheckMatrix {
    pub fn new(matrix: Matrix) -> Self {
        Self { matrix }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    pub fn annihilates(&self, field: &ZechField, v: &[Fq]) -> bool {
        self.matrix.mul_vec(field, v).iter().all(|x| x.is_zero())
    }
}

#[derive(Debug, Clone)]
pub struct CyclicCodeSpec {
    pub n: u64,
    pub q: u64,
    pub defining_set: DefiningSet,
    /// Monic generator over `GF(q^2)`, coefficients low-to-high.
    pub generator: Vec<Element>,
    pub dimension: u64,
    pub designed_distance: u64,
}

/// Everything fixed by `(q, n)`: the coset context, the field tower, the
/// chosen primitive `n`-th root of unity `gamma` and the tabulated
/// `GF(q^2)`.
#[derive(Debug, Clone)]
pub struct CyclicSetup {
    ctx: CosetContext,
    tower: TowerMap,
    field: ZechField,
    gamma: Element,
    gamma_pows: Vec<Element>,
    // GF(q^2)-coordinates of gamma^j in the basis {1, beta}
    gamma_coords: Vec<(Fq, Fq)>,
}

impl CyclicSetup {
    pub fn new(q: u64, n: u64) -> Result<Self> {
        let ctx = CosetContext::new(n, q)?;
        let tower = TowerMap::new(q)?;
        let field = ZechField::new(tower.base())?;
        let gamma = tower.nth_root_of_unity(n)?;
        let top = tower.top();
        let mut gamma_pows = Vec::with_capacity(n as usize);
        let mut acc = top.one();
        for _ in 0..n {
            gamma_pows.push(acc.clone());
            acc = top.mul(&acc, &gamma);
        }
        let gamma_coords = gamma_pows
            .iter()
            .map(|g| {
                let (b0, b1) = tower.project(g);
                (field.from_element(&b0), field.from_element(&b1))
            })
            .collect();
        Ok(Self {
            ctx,
            tower,
            field,
            gamma,
            gamma_pows,
            gamma_coords,
        })
    }

    pub fn n(&self) -> u64 {
        self.ctx.n()
    }

    pub fn q(&self) -> u64 {
        self.ctx.q()
    }

    pub fn cosets(&self) -> &CosetContext {
        &self.ctx
    }

    pub fn tower(&self) -> &TowerMap {
        &self.tower
    }

    pub fn field(&self) -> &ZechField {
        &self.field
    }

    pub fn gamma(&self) -> &Element {
        &self.gamma
    }

    /// `gamma^i` for any exponent.
    pub fn gamma_pow(&self, i: u64) -> &Element {
        &self.gamma_pows[(i % self.n()) as usize]
    }

    fn check_set(&self, t: &DefiningSet) -> Result<()> {
        if t.n() != self.n() || t.q() != self.q() {
            return Err(Error::Internal(format!(
                "defining set for (n={}, q={}) used with (n={}, q={})",
                t.n(),
                t.q(),
                self.n(),
                self.q()
            )));
        }
        Ok(())
    }

    /// `g(x) = prod_{i in T} (x - gamma^i)`, expanded in `GF(q^4)` and
    /// projected to `GF(q^2)`.
    pub fn generator_polynomial(&self, t: &DefiningSet) -> Result<Vec<Element>> {
        self.check_set(t)?;
        let top = self.tower.top();
        let mut poly = vec![top.one()];
        for &i in t.elements() {
            let root = self.gamma_pow(i);
            let mut next = vec![top.zero(); poly.len() + 1];
            for (j, c) in poly.iter().enumerate() {
                next[j + 1] = top.add(&next[j + 1], c);
                next[j] = top.sub(&next[j], &top.mul(root, c));
            }
            poly = next;
        }
        poly.iter()
            .enumerate()
            .map(|(j, c)| {
                let (b0, b1) = self.tower.project(c);
                if b1.is_zero() {
                    Ok(b0)
                } else {
                    Err(Error::Internal(format!(
                        "coefficient {j} of the generator is outside GF(q^2)"
                    )))
                }
            })
            .collect()
    }

    /// Evaluates a `GF(q^2)` polynomial at a `GF(q^4)` point.
    pub fn eval_in_top(&self, poly: &[Element], at: &Element) -> Element {
        let top = self.tower.top();
        poly.iter().rev().fold(top.zero(), |acc, c| {
            top.add(&top.mul(&acc, at), &self.tower.embed(c))
        })
    }

    /// Vandermonde rows `(gamma^(i*j))_j`, one per coset representative,
    /// split into their two `GF(q^2)` coordinate rows and row reduced.
    pub fn parity_check_matrix(&self, t: &DefiningSet) -> Result<CheckMatrix> {
        self.check_set(t)?;
        let n = self.n();
        let mut rows = Vec::with_capacity(2 * t.reps().len());
        for &i in t.reps() {
            let (r0, r1): (Vec<Fq>, Vec<Fq>) = (0..n)
                .map(|j| self.gamma_coords[mul_mod(i, j, n) as usize])
                .unzip();
            rows.push(r0);
            rows.push(r1);
        }
        if rows.is_empty() {
            return Ok(CheckMatrix::new(Matrix::zeros(0, n as usize)));
        }
        let mut m = Matrix::from_rows(rows);
        let rank = m.rref(&self.field).len();
        if rank != t.len() {
            return Err(Error::Internal(format!(
                "check matrix has rank {rank}, expected |T| = {}",
                t.len()
            )));
        }
        let reduced = Matrix::from_rows((0..rank).map(|i| m.row(i).to_vec()).collect());
        Ok(CheckMatrix::new(reduced))
    }

    pub fn code_spec(&self, t: &DefiningSet) -> Result<CyclicCodeSpec> {
        let generator = self.generator_polynomial(t)?;
        Ok(CyclicCodeSpec {
            n: self.n(),
            q: self.q(),
            defining_set: t.clone(),
            dimension: self.n() - (generator.len() as u64 - 1),
            designed_distance: bch_designed_distance(t)?,
            generator,
        })
    }
}

/// Check matrix built from the check polynomial `h = (x^n - 1) / g`: the
/// rows are the shifts of the reciprocal of `h`. `g` must be monic and
/// divide `x^n - 1`. Independent of the Vandermonde route.
pub fn check_matrix_from_generator(field: &ZechField, g: &[Fq], n: usize) -> Result<Matrix> {
    let deg_g = g.len() - 1;
    if g[deg_g] != Fq::ONE {
        return Err(Error::Internal("generator is not monic".into()));
    }
    // long division of x^n - 1 by g
    let mut rem = vec![Fq::ZERO; n + 1];
    rem[0] = field.neg(Fq::ONE);
    rem[n] = Fq::ONE;
    let k = n - deg_g;
    let mut h = vec![Fq::ZERO; k + 1];
    for top in (deg_g..=n).rev() {
        let c = rem[top];
        if c.is_zero() {
            continue;
        }
        h[top - deg_g] = c;
        for (i, &gi) in g.iter().enumerate() {
            let idx = top - deg_g + i;
            rem[idx] = field.sub(rem[idx], field.mul(c, gi));
        }
    }
    if rem.iter().any(|x| !x.is_zero()) {
        return Err(Error::Internal("generator does not divide x^n - 1".into()));
    }
    let mut m = Matrix::zeros(deg_g, n);
    for r in 0..deg_g {
        for (i, &hi) in h.iter().rev().enumerate() {
            m[(r, r + i)] = hi;
        }
    }
    Ok(m)
}
