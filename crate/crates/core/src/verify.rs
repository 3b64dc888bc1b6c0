//! Independent oracles for EA-quantum code parameters: the Hermitian Gram
//! rank `rank(H H^†)`, the exhaustive MDS minor check, the EA-Singleton
//! bound and the record builder that combines them.

use alloc::vec;
use alloc::vec::Vec;

use crate::cyclic::CheckMatrix;
use crate::gfield::{Fq, ZechField};
use crate::intmath::binomial;
use crate::linalg::Matrix;
use crate::zmod::{CosetContext, DefiningSet};
use crate::{Error, Result};

/// Default number of column subsets the minor check may enumerate.
pub const DEFAULT_MINOR_CAP: u128 = 1_000_000;

/// `rank(H H^†)` over `GF(q^2)`, where `H^†` is the conjugate transpose.
pub fn gram_rank(field: &ZechField, h: &Matrix) -> usize {
    if h.rows() == 0 {
        return 0;
    }
    let gram = h.mul(field, &h.conj_transpose(field));
    gram.rank(field)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EbitReport {
    pub gram_rank: usize,
    pub tss_size: usize,
    pub agree: bool,
}

/// Compares the Gram rank of `h` with `|T_ss|`. A disagreement is reported,
/// not raised.
pub fn ebit_cross_check(
    ctx: &CosetContext,
    field: &ZechField,
    t: &DefiningSet,
    h: &CheckMatrix,
) -> EbitReport {
    let gram = gram_rank(field, h.matrix());
    let tss = ctx.decompose(t).tss_size();
    EbitReport {
        gram_rank: gram,
        tss_size: tss,
        agree: gram == tss,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinorVerdict {
    /// Every `r`-column subset is independent.
    Mds { subsets: u128 },
    /// First dependent `r`-subset in lexicographic order.
    NotMds { witness: Vec<usize> },
    /// `C(n, r)` exceeded the cap.
    Skipped { cost: u128 },
}

/// Decides whether every `r` columns of the full-row-rank `r x n` matrix
/// `h` are linearly independent, i.e. whether the code it checks has
/// distance `r + 1`.
///
/// Subsets are walked depth first in lexicographic order. Each node keeps
/// the remaining columns reduced against the pivots chosen so far, so a
/// leaf costs one lookup.
pub fn mds_minor_check(field: &ZechField, h: &Matrix, cap: u128) -> MinorVerdict {
    let (r, n) = (h.rows(), h.cols());
    let cost = binomial(n as u64, r as u64);
    if r > n {
        return MinorVerdict::NotMds {
            witness: (0..n).collect(),
        };
    }
    if cost > cap {
        return MinorVerdict::Skipped { cost };
    }
    if r == 0 {
        return MinorVerdict::Mds { subsets: 1 };
    }
    let mut search = MinorSearch {
        field,
        r,
        n,
        buffers: vec![vec![Fq::ZERO; n * r]; r],
        active: vec![Vec::new(); r],
        chosen: Vec::with_capacity(r),
        leaves: 0,
    };
    for c in 0..n {
        for i in 0..r {
            search.buffers[0][c * r + i] = h[(i, c)];
        }
    }
    search.active[0] = (0..r).collect();
    match search.descend(0, 0) {
        Some(witness) => MinorVerdict::NotMds { witness },
        None => MinorVerdict::Mds {
            subsets: search.leaves,
        },
    }
}

struct MinorSearch<'a> {
    field: &'a ZechField,
    r: usize,
    n: usize,
    // buffers[j]: columns (stride r) reduced against the first j chosen pivots
    buffers: Vec<Vec<Fq>>,
    // rows not yet used as pivots at depth j
    active: Vec<Vec<usize>>,
    chosen: Vec<usize>,
    leaves: u128,
}

impl MinorSearch<'_> {
    fn descend(&mut self, depth: usize, start: usize) -> Option<Vec<usize>> {
        let (r, n) = (self.r, self.n);
        let last = n - (r - depth);
        for c in start..=last {
            let pivot = {
                let col = &self.buffers[depth][c * r..(c + 1) * r];
                self.active[depth]
                    .iter()
                    .copied()
                    .find(|&row| !col[row].is_zero())
            };
            let Some(pivot) = pivot else {
                let mut witness = self.chosen.clone();
                witness.extend(c..c + (r - depth));
                return Some(witness);
            };
            if depth + 1 == r {
                self.leaves += 1;
                continue;
            }
            self.pivot_into(depth, c, pivot);
            self.chosen.push(c);
            let found = self.descend(depth + 1, c + 1);
            self.chosen.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Eliminates `pivot` from every column after `c` into the next buffer.
    fn pivot_into(&mut self, depth: usize, c: usize, pivot: usize) {
        let (r, n, f) = (self.r, self.n, self.field);
        let next_active: Vec<usize> = self.active[depth]
            .iter()
            .copied()
            .filter(|&row| row != pivot)
            .collect();
        let (lo, hi) = self.buffers.split_at_mut(depth + 1);
        let src = &lo[depth];
        let dst = &mut hi[0];
        let v = &src[c * r..(c + 1) * r];
        let inv = f.inv(v[pivot]).expect("pivot is non-zero");
        for u in c + 1..n {
            let col = &src[u * r..(u + 1) * r];
            let out = &mut dst[u * r..(u + 1) * r];
            let factor = f.mul(col[pivot], inv);
            if factor.is_zero() {
                for &row in &next_active {
                    out[row] = col[row];
                }
            } else {
                for &row in &next_active {
                    out[row] = f.sub(col[row], f.mul(factor, v[row]));
                }
            }
        }
        self.active[depth + 1] = next_active;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Saturation {
    Saturated,
    Slack,
    Violated,
}

/// EA-Singleton bound `2(d - 1) <= n - k + c`.
pub fn ea_singleton(n: u64, k: i64, d: u64, c: u64) -> Result<Saturation> {
    if n == 0 || c > n - 1 {
        return Err(Error::EbitsOutOfRange { c, n });
    }
    let lhs = 2 * (d as i128 - 1);
    let rhs = n as i128 - k as i128 + c as i128;
    Ok(match lhs.cmp(&rhs) {
        core::cmp::Ordering::Greater => Saturation::Violated,
        core::cmp::Ordering::Equal => Saturation::Saturated,
        core::cmp::Ordering::Less => Saturation::Slack,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MdsStatus {
    Verified,
    Failed,
    Skipped,
}

/// `[[n, k, d; c]]_q` together with the verdicts that back it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EaqmdsRecord {
    pub q: u64,
    pub n: u64,
    pub k: i64,
    pub d: u64,
    pub c: u64,
    pub defining_set_size: u64,
    pub tss_size: u64,
    pub saturation: Saturation,
    pub mds: MdsStatus,
    /// `None` when only the coset-level computation ran.
    pub ebits: Option<EbitReport>,
    pub minor: Option<MinorVerdict>,
}

impl EaqmdsRecord {
    /// True when every check that ran came back clean.
    pub fn is_consistent(&self) -> bool {
        self.saturation != Saturation::Violated
            && self.mds != MdsStatus::Failed
            && self.ebits.is_none_or(|e| e.agree)
    }
}

/// Builds the record `[[n, n - 2|T| + c, delta; c]]` with `c = rank(H H^†)`.
pub fn eaqmds_record(
    ctx: &CosetContext,
    field: &ZechField,
    t: &DefiningSet,
    h: &CheckMatrix,
    delta: u64,
    cap: u128,
) -> Result<EaqmdsRecord> {
    let ebits = ebit_cross_check(ctx, field, t, h);
    let minor = mds_minor_check(field, h.matrix(), cap);
    let mds = match &minor {
        MinorVerdict::Mds { .. } => MdsStatus::Verified,
        MinorVerdict::NotMds { .. } => MdsStatus::Failed,
        MinorVerdict::Skipped { .. } => MdsStatus::Skipped,
    };
    let n = ctx.n();
    let c = ebits.gram_rank as u64;
    let k = n as i64 - 2 * t.len() as i64 + c as i64;
    Ok(EaqmdsRecord {
        q: ctx.q(),
        n,
        k,
        d: delta,
        c,
        defining_set_size: t.len() as u64,
        tss_size: ebits.tss_size as u64,
        saturation: ea_singleton(n, k, delta, c)?,
        mds,
        ebits: Some(ebits),
        minor: Some(minor),
    })
}

/// Coset-level record: `c = |T_ss|`, no matrix work.
pub fn eaqmds_record_from_cosets(ctx: &CosetContext, t: &DefiningSet, delta: u64) -> Result<EaqmdsRecord> {
    let tss = ctx.decompose(t).tss_size() as u64;
    let n = ctx.n();
    let k = n as i64 - 2 * t.len() as i64 + tss as i64;
    Ok(EaqmdsRecord {
        q: ctx.q(),
        n,
        k,
        d: delta,
        c: tss,
        defining_set_size: t.len() as u64,
        tss_size: tss,
        saturation: ea_singleton(n, k, delta, tss)?,
        mds: MdsStatus::Skipped,
        ebits: None,
        minor: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::{ConsecutiveSpec, CyclicSetup};
    use crate::gfield::make_field;

    #[test]
    fn singleton_examples() {
        assert_eq!(ea_singleton(17, 9, 7, 4), Ok(Saturation::Saturated));
        assert_eq!(ea_singleton(17, 10, 7, 4), Ok(Saturation::Violated));
        assert_eq!(ea_singleton(17, 8, 7, 4), Ok(Saturation::Slack));
        assert_eq!(
            ea_singleton(17, 8, 7, 17),
            Err(Error::EbitsOutOfRange { c: 17, n: 17 })
        );
    }

    #[test]
    fn gram_rank_of_zero_matrix() {
        let f = ZechField::new(&make_field(13, 2).unwrap()).unwrap();
        assert_eq!(gram_rank(&f, &Matrix::zeros(3, 5)), 0);
        assert_eq!(gram_rank(&f, &Matrix::zeros(0, 5)), 0);
    }

    #[test]
    fn all_ones_row_is_mds() {
        let f = ZechField::new(&make_field(3, 2).unwrap()).unwrap();
        let h = Matrix::from_rows(vec![vec![Fq::ONE; 6]]);
        assert_eq!(mds_minor_check(&f, &h, 100), MinorVerdict::Mds { subsets: 6 });
    }

    #[test]
    fn zero_column_is_caught() {
        let f = ZechField::new(&make_field(3, 2).unwrap()).unwrap();
        let a = f.from_index(5);
        let h = Matrix::from_rows(vec![
            vec![Fq::ZERO, Fq::ONE, a, Fq::ONE],
            vec![Fq::ZERO, a, Fq::ONE, Fq::ONE],
        ]);
        assert_eq!(
            mds_minor_check(&f, &h, 100),
            MinorVerdict::NotMds { witness: vec![0, 1] }
        );
        // zero column in the middle; {0, 1} is the first subset containing it
        let h = Matrix::from_rows(vec![
            vec![Fq::ONE, Fq::ZERO, Fq::ONE, a],
            vec![a, Fq::ZERO, Fq::ONE, Fq::ONE],
        ]);
        assert_eq!(
            mds_minor_check(&f, &h, 100),
            MinorVerdict::NotMds { witness: vec![0, 1] }
        );
    }

    #[test]
    fn skipped_above_cap() {
        let f = ZechField::new(&make_field(3, 2).unwrap()).unwrap();
        let h = Matrix::from_rows(vec![vec![Fq::ONE; 6]; 3]);
        assert_eq!(mds_minor_check(&f, &h, 19), MinorVerdict::Skipped { cost: 20 });
    }

    #[test]
    fn q13_records() {
        let setup = CyclicSetup::new(13, 17).unwrap();
        let f = setup.field();
        for (k, expected_c) in [(1u64, 0u64), (2, 4), (4, 4)] {
            let t = ConsecutiveSpec::new(13, 17, k).unwrap().build_t();
            let h = setup.parity_check_matrix(&t).unwrap();
            let delta = crate::cyclic::bch_designed_distance(&t).unwrap();
            let rec = eaqmds_record(setup.cosets(), f, &t, &h, delta, DEFAULT_MINOR_CAP).unwrap();
            assert_eq!(rec.c, expected_c);
            assert!(rec.ebits.unwrap().agree);
            assert_eq!(rec.mds, MdsStatus::Verified);
        }
    }
}
