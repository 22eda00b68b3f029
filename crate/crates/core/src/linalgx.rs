//! Exact sparse linear algebra over the rationals.
//!
//! Elimination runs fraction-free on primitive integer vectors; rationals only
//! appear when an echelon basis is normalized for output. Nothing here touches
//! floating point.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A sparse rational vector: sorted `(index, value)` pairs with no stored zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseVec {
    dim: usize,
    entries: Vec<(usize, BigRational)>,
}

impl SparseVec {
    pub fn zero(dim: usize) -> Self {
        SparseVec {
            dim,
            entries: Vec::new(),
        }
    }

    /// Builds a vector from unsorted entries; duplicates are summed.
    pub fn from_entries<I>(dim: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, BigRational)>,
    {
        let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (i, v) in entries {
            assert!(i < dim, "index {i} out of range for dimension {dim}");
            *acc.entry(i).or_insert_with(BigRational::zero) += v;
        }
        SparseVec {
            dim,
            entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn from_dense(values: &[BigRational]) -> Self {
        SparseVec {
            dim: values.len(),
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        Self::from_entries(dim, [(i, BigRational::one())])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, BigRational)] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> BigRational {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => BigRational::zero(),
        }
    }

    pub fn leading(&self) -> Option<&(usize, BigRational)> {
        self.entries.first()
    }

    pub fn to_dense(&self) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn scale(&mut self, k: &BigRational) {
        if k.is_zero() {
            self.entries.clear();
            return;
        }
        for (_, v) in &mut self.entries {
            *v *= k;
        }
    }

    /// `self += k * other`.
    pub fn axpy(&mut self, k: &BigRational, other: &SparseVec) {
        debug_assert_eq!(self.dim, other.dim);
        if k.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, _)), Some((j, _))) => match i.cmp(j) {
                    Ordering::Less => out.push(a.next().unwrap()),
                    Ordering::Greater => {
                        let (j, w) = b.next().unwrap();
                        out.push((*j, k * w));
                    }
                    Ordering::Equal => {
                        let (i, v) = a.next().unwrap();
                        let (_, w) = b.next().unwrap();
                        let s = v + k * w;
                        if !s.is_zero() {
                            out.push((i, s));
                        }
                    }
                },
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (j, w) = b.next().unwrap();
                    out.push((*j, k * w));
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }
}

/// Sparse rational matrix, stored by columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            ncols,
            cols: vec![SparseVec::zero(nrows); ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_columns(n, (0..n).map(|i| SparseVec::unit(n, i)).collect())
    }

    pub fn from_columns(nrows: usize, cols: Vec<SparseVec>) -> Self {
        for c in &cols {
            assert_eq!(c.dim(), nrows, "column dimension mismatch");
        }
        SparseMatrix {
            nrows,
            ncols: cols.len(),
            cols,
        }
    }

    pub fn from_triplets<I>(nrows: usize, ncols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, BigRational)>,
    {
        let mut by_col: Vec<Vec<(usize, BigRational)>> = vec![Vec::new(); ncols];
        for (r, c, v) in triplets {
            assert!(r < nrows && c < ncols, "entry ({r}, {c}) out of range");
            by_col[c].push((r, v));
        }
        let cols = by_col
            .into_iter()
            .map(|e| SparseVec::from_entries(nrows, e))
            .collect();
        SparseMatrix { nrows, ncols, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(SparseVec::nnz).sum()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> BigRational {
        self.cols[c].get(r)
    }

    /// Iterates over `(row, col, value)` of the nonzero entries, column by column.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &BigRational)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.entries().iter().map(move |(r, v)| (*r, c, v)))
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix::from_triplets(
            self.ncols,
            self.nrows,
            self.triplets().map(|(r, c, v)| (c, r, v.clone())),
        )
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        assert_eq!(v.dim(), self.ncols);
        let mut out = SparseVec::zero(self.nrows);
        for (j, k) in v.entries() {
            out.axpy(k, &self.cols[*j]);
        }
        out
    }

    pub fn matmul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows);
        let cols = other.cols.iter().map(|c| self.mul_vec(c)).collect();
        SparseMatrix::from_columns(self.nrows, cols)
    }

    /// `self + k * other`.
    pub fn add_scaled(&self, k: &BigRational, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut a = a.clone();
                a.axpy(k, b);
                a
            })
            .collect();
        SparseMatrix::from_columns(self.nrows, cols)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_zero)
    }
}

/// Reduced row-echelon basis of a subspace.
///
/// Pivot columns are strictly increasing, each pivot entry is 1, and every
/// vector vanishes at the pivots of the others.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EchelonBasis {
    dim: usize,
    vectors: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(dim: usize) -> Self {
        EchelonBasis {
            dim,
            vectors: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[SparseVec] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn pivot_slot(&self, col: usize) -> std::result::Result<usize, usize> {
        self.pivots.binary_search(&col)
    }

    /// Remainder of `v` after subtracting its projection onto the basis pivots.
    pub fn reduce(&self, v: &SparseVec) -> Result<SparseVec> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.dim(),
            });
        }
        let mut rem = v.clone();
        // basis vectors vanish at each other's pivots, so the original
        // coefficients of v at the pivots are the right multipliers
        for (col, val) in v.entries() {
            if let Ok(slot) = self.pivot_slot(*col) {
                rem.axpy(&-val, &self.vectors[slot]);
            }
        }
        Ok(rem)
    }

    pub fn contains(&self, v: &SparseVec) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Adds `v` to the span, returning whether the dimension grew.
    pub fn insert(&mut self, v: &SparseVec) -> Result<bool> {
        let mut rem = self.reduce(v)?;
        let Some((lead, lead_val)) = rem.leading().cloned() else {
            return Ok(false);
        };
        rem.scale(&lead_val.recip());
        for b in &mut self.vectors {
            let k = b.get(lead);
            if !k.is_zero() {
                b.axpy(&-k, &rem);
            }
        }
        let slot = self.pivot_slot(lead).unwrap_err();
        self.pivots.insert(slot, lead);
        self.vectors.insert(slot, rem);
        Ok(true)
    }

    /// Appends every vector of `other`.
    pub fn merge(&mut self, other: &EchelonBasis) -> Result<()> {
        for v in other.vectors() {
            self.insert(v)?;
        }
        Ok(())
    }
}

/// Reduces `v` against `b` and inserts the normalized remainder if nonzero.
pub fn append_and_rank(mut b: EchelonBasis, v: &SparseVec) -> Result<(EchelonBasis, bool)> {
    let grew = b.insert(v)?;
    Ok((b, grew))
}

type IntVec = Vec<(usize, BigInt)>;

fn primitive(mut v: IntVec) -> IntVec {
    let mut g = BigInt::zero();
    for (_, x) in &v {
        g = g.gcd(x);
        if g.is_one() {
            return v;
        }
    }
    if !g.is_zero() {
        for (_, x) in &mut v {
            *x /= &g;
        }
    }
    v
}

fn to_integer_vec(v: &SparseVec) -> IntVec {
    let mut l = BigInt::one();
    for (_, x) in v.entries() {
        l = l.lcm(x.denom());
    }
    primitive(
        v.entries()
            .iter()
            .map(|(i, x)| (*i, x.numer() * (&l / x.denom())))
            .collect(),
    )
}

/// Primitive part of `a * r - b * p`, the fraction-free elimination step.
fn eliminate(r: &IntVec, r_coef: &BigInt, p: &IntVec, p_coef: &BigInt) -> IntVec {
    let g = r_coef.gcd(p_coef);
    let (a, b) = if g.is_one() {
        (p_coef.clone(), r_coef.clone())
    } else {
        (p_coef / &g, r_coef / &g)
    };
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let ci = r.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cj = p.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        match ci.cmp(&cj) {
            Ordering::Less => {
                out.push((ci, &a * &r[i].1));
                i += 1;
            }
            Ordering::Greater => {
                out.push((cj, -(&b * &p[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let s = &a * &r[i].1 - &b * &p[j].1;
                if !s.is_zero() {
                    out.push((ci, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    primitive(out)
}

/// Fraction-free forward elimination; returns echelon rows keyed by leading column.
fn forward_echelon(vectors: impl IntoIterator<Item = IntVec>) -> BTreeMap<usize, IntVec> {
    let mut rows: Vec<IntVec> = vectors.into_iter().filter(|v| !v.is_empty()).collect();
    // sparsest first keeps fill-in down
    rows.sort_by_key(Vec::len);
    let mut pivots: BTreeMap<usize, IntVec> = BTreeMap::new();
    for mut v in rows {
        while let Some((lead, lead_val)) = v.first().cloned() {
            match pivots.get_mut(&lead) {
                None => {
                    pivots.insert(lead, v);
                    break;
                }
                Some(p) => {
                    if v.len() < p.len() {
                        std::mem::swap(p, &mut v);
                        continue;
                    }
                    let p_lead = p[0].1.clone();
                    v = eliminate(&v, &lead_val, p, &p_lead);
                }
            }
        }
    }
    pivots
}

/// Exact rank over the rationals.
pub fn rank(m: &SparseMatrix) -> usize {
    forward_echelon(m.columns().iter().map(to_integer_vec)).len()
}

/// Reduced echelon basis of the column span of `m`.
pub fn image_basis(m: &SparseMatrix) -> EchelonBasis {
    echelon_of(m.nrows(), m.columns())
}

/// Reduced echelon basis of the span of `vectors`, each of dimension `dim`.
pub fn echelon_of(dim: usize, vectors: &[SparseVec]) -> EchelonBasis {
    for v in vectors {
        assert_eq!(v.dim(), dim, "vector dimension mismatch");
    }
    let forward = forward_echelon(vectors.iter().map(to_integer_vec));
    let mut reduced: BTreeMap<usize, IntVec> = BTreeMap::new();
    for (lead, mut row) in forward.into_iter().rev() {
        loop {
            let hit = row
                .iter()
                .skip(1)
                .find(|(c, _)| reduced.contains_key(c))
                .map(|(c, x)| (*c, x.clone()));
            let Some((col, coef)) = hit else { break };
            let p = &reduced[&col];
            let p_lead = p[0].1.clone();
            row = eliminate(&row, &coef, p, &p_lead);
            debug_assert_eq!(row[0].0, lead);
        }
        reduced.insert(lead, row);
    }
    let mut basis = EchelonBasis::new(dim);
    for (lead, row) in reduced {
        let d = row[0].1.clone();
        let entries = row
            .into_iter()
            .map(|(c, x)| (c, BigRational::new(x, d.clone())))
            .collect();
        basis.pivots.push(lead);
        basis.vectors.push(SparseVec { dim, entries });
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn qv(values: &[i64]) -> SparseVec {
        SparseVec::from_dense(&values.iter().map(|&x| q(x)).collect::<Vec<_>>())
    }

    #[test]
    fn rank_of_zero_and_identity() {
        assert_eq!(rank(&SparseMatrix::zeros(5, 7)), 0);
        for n in [1, 4, 13] {
            assert_eq!(rank(&SparseMatrix::identity(n)), n);
        }
    }

    #[test]
    fn image_of_identity_is_standard_basis() {
        let b = image_basis(&SparseMatrix::identity(4));
        assert_eq!(b.pivots(), &[0, 1, 2, 3]);
        for (i, v) in b.vectors().iter().enumerate() {
            assert_eq!(v, &SparseVec::unit(4, i));
        }
    }

    #[test]
    fn repeated_column_gives_one_vector() {
        let col = qv(&[0, 3, -6, 9]);
        let m = SparseMatrix::from_columns(4, vec![col.clone(), col.clone(), col]);
        let b = image_basis(&m);
        assert_eq!(b.len(), 1);
        assert_eq!(b.vectors()[0], qv(&[0, 1, -2, 3]));
    }

    #[test]
    fn rational_entries() {
        let half = BigRational::new(1.into(), 2.into());
        let third = BigRational::new(1.into(), 3.into());
        let m = SparseMatrix::from_triplets(
            2,
            2,
            [
                (0, 0, half.clone()),
                (1, 0, third.clone()),
                (0, 1, q(3)),
                (1, 1, q(2)),
            ],
        );
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn append_semantics() {
        let b = EchelonBasis::new(3);
        let (b, grew) = append_and_rank(b, &SparseVec::zero(3)).unwrap();
        assert!(!grew && b.is_empty());
        let (b, grew) = append_and_rank(b, &qv(&[0, 2, 4])).unwrap();
        assert!(grew);
        assert_eq!(b.len(), 1);
        let (b, _) = append_and_rank(b, &qv(&[1, 1, 0])).unwrap();
        let (b, grew) = append_and_rank(b, &qv(&[2, 5, 6])).unwrap();
        assert!(!grew);
        assert_eq!(b.len(), 2);
        assert!(append_and_rank(b, &SparseVec::zero(4)).is_err());
    }

    #[test]
    fn incremental_matches_batch() {
        let cols = vec![
            qv(&[1, 2, 3, 0]),
            qv(&[0, 1, 1, 1]),
            qv(&[1, 3, 4, 1]),
            qv(&[2, 0, 0, 5]),
        ];
        let batch = image_basis(&SparseMatrix::from_columns(4, cols.clone()));
        let mut inc = EchelonBasis::new(4);
        for c in &cols {
            inc.insert(c).unwrap();
        }
        assert_eq!(batch, inc);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn matrix() -> impl Strategy<Value = SparseMatrix> {
            (1usize..12, 1usize..12).prop_flat_map(|(r, c)| {
                proptest::collection::vec((0..r, 0..c, -4i64..=4, 1i64..=3), 0..40).prop_map(
                    move |entries| {
                        SparseMatrix::from_triplets(
                            r,
                            c,
                            entries
                                .into_iter()
                                .map(|(i, j, n, d)| (i, j, BigRational::new(n.into(), d.into()))),
                        )
                    },
                )
            })
        }

        proptest! {
            #[test]
            fn rank_equals_rank_of_transpose(m in matrix()) {
                prop_assert_eq!(rank(&m), rank(&m.transpose()));
            }

            #[test]
            fn image_basis_spans_columns(m in matrix()) {
                let b = image_basis(&m);
                prop_assert_eq!(b.len(), rank(&m));
                for w in b.pivots().windows(2) {
                    prop_assert!(w[0] < w[1]);
                }
                for (i, v) in b.vectors().iter().enumerate() {
                    for (j, p) in b.pivots().iter().enumerate() {
                        let expected = if i == j { BigRational::one() } else { BigRational::zero() };
                        prop_assert_eq!(v.get(*p), expected);
                    }
                }
                for col in m.columns() {
                    prop_assert!(b.reduce(col).unwrap().is_zero());
                }
            }

            #[test]
            fn merge_equals_joint_span(a in matrix(), b in matrix()) {
                let rows = a.nrows().min(b.nrows());
                let crop = |m: &SparseMatrix| -> Vec<SparseVec> {
                    m.columns()
                        .iter()
                        .map(|c| SparseVec::from_entries(rows, c.entries().iter().filter(|(i, _)| *i < rows).cloned()))
                        .collect()
                };
                let (ca, cb) = (crop(&a), crop(&b));
                let mut merged = echelon_of(rows, &ca);
                merged.merge(&echelon_of(rows, &cb)).unwrap();
                let all: Vec<SparseVec> = ca.into_iter().chain(cb).collect();
                prop_assert_eq!(merged, echelon_of(rows, &all));
            }
        }
    }
}
