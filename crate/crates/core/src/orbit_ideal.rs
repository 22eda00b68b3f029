//! Quadratic part of the ideal of the minimal orbit closure and its image in
//! `Sym[h]`.
//!
//! The degree-2 component of the ideal is the sum of all irreducible summands
//! of `Sym²g` other than `V(2θ)`. The split Casimir acts on each summand by a
//! scalar and reaches `c = (θ, θ)` only on `V(2θ)`, so the component is the
//! image of `Ω − c`. That claim is checked at run time against the Weyl
//! dimension of `V(2θ)`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::chevalley::{casimir_on_monomial, BasisIndex, LieAlgebra, SplitCasimir};
use crate::error::{Error, Result};
use crate::linalgx::{echelon_of, image_basis, rank, EchelonBasis, SparseMatrix, SparseVec};

/// Homogeneous polynomial on the Cartan subalgebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanPolynomial {
    nvars: usize,
    degree: u32,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl CartanPolynomial {
    pub fn zero(nvars: usize, degree: u32) -> Self {
        CartanPolynomial {
            nvars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exponents: Vec<u32>, coef: BigRational) -> Self {
        let mut p = Self::zero(exponents.len(), exponents.iter().sum());
        p.add_term(exponents, coef);
        p
    }

    /// The linear form `x_i`.
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, BigRational::from_integer(1.into()))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigRational {
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coef: BigRational) {
        assert_eq!(exponents.len(), self.nvars);
        assert_eq!(
            exponents.iter().sum::<u32>(),
            self.degree,
            "inhomogeneous term"
        );
        let slot = self
            .terms
            .entry(exponents)
            .or_insert_with(BigRational::zero);
        *slot += coef;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &CartanPolynomial) -> CartanPolynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigRational) -> CartanPolynomial {
        let mut out = Self::zero(self.nvars, self.degree);
        if !k.is_zero() {
            out.terms = self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect();
        }
        out
    }

    pub fn mul(&self, other: &CartanPolynomial) -> CartanPolynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars, self.degree + other.degree);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Coordinates in the monomial basis of the matching degree.
    pub fn to_vector(&self, index: &MonomialIndex) -> SparseVec {
        assert_eq!((index.nvars, index.degree), (self.nvars, self.degree));
        SparseVec::from_entries(
            index.len(),
            self.terms
                .iter()
                .map(|(e, c)| (index.position(e), c.clone())),
        )
    }

    pub fn from_vector(index: &MonomialIndex, v: &SparseVec) -> CartanPolynomial {
        let mut p = Self::zero(index.nvars, index.degree);
        for (i, c) in v.entries() {
            p.add_term(index.monomials[*i].clone(), c.clone());
        }
        p
    }

    /// Whether `self = k * other` for some nonzero rational `k`.
    pub fn is_proportional_to(&self, other: &CartanPolynomial) -> bool {
        if self.is_zero() || other.is_zero() || self.terms.len() != other.terms.len() {
            return false;
        }
        let (e0, c0) = self.terms.iter().next().unwrap();
        let Some(d0) = other.terms.get(e0) else {
            return false;
        };
        let k = c0 / d0;
        self.terms
            .iter()
            .all(|(e, c)| other.terms.get(e).is_some_and(|d| &(d * &k) == c))
    }
}

/// Degree-`d` monomials in `n` variables with a fixed order.
#[derive(Debug, Clone)]
pub struct MonomialIndex {
    nvars: usize,
    degree: u32,
    monomials: Vec<Vec<u32>>,
    lookup: HashMap<Vec<u32>, usize>,
}

impl MonomialIndex {
    /// Monomials listed in decreasing lexicographic order of exponent vectors.
    pub fn new(nvars: usize, degree: u32) -> Self {
        let mut monomials = Vec::new();
        let mut current = vec![0u32; nvars];
        fill(&mut monomials, &mut current, 0, degree);
        let lookup = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        MonomialIndex {
            nvars,
            degree,
            monomials,
            lookup,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Vec<u32>] {
        &self.monomials
    }

    pub fn position(&self, exponents: &[u32]) -> usize {
        self.lookup[exponents]
    }
}

fn fill(out: &mut Vec<Vec<u32>>, current: &mut Vec<u32>, var: usize, left: u32) {
    let n = current.len();
    if n == 0 {
        if left == 0 {
            out.push(Vec::new());
        }
        return;
    }
    if var == n - 1 {
        current[var] = left;
        out.push(current.clone());
        current[var] = 0;
        return;
    }
    for k in (0..=left).rev() {
        current[var] = k;
        fill(out, current, var + 1, left - k);
    }
    current[var] = 0;
}

/// `dim Sym^d` of an `n`-dimensional space.
pub fn sym_dim(n: usize, d: u32) -> usize {
    // C(n + d - 1, d)
    if n == 0 {
        return usize::from(d == 0);
    }
    let mut acc: u128 = 1;
    for k in 0..d as u128 {
        acc = acc * (n as u128 + k) / (k + 1);
    }
    acc as usize
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Whole degree-2 ideal via the image of `Ω − c`.
    Full,
    /// Only the images of Cartan monomials `h_i h_j`.
    CartanPairs,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Full => "full",
            Mode::CartanPairs => "cartan-pairs",
        })
    }
}

/// Echelon basis of `I₂ ⊂ Sym²g`.
#[derive(Debug, Clone)]
pub struct IdealDegree2 {
    pub basis: EchelonBasis,
}

impl IdealDegree2 {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Graded dimensions, indexed by polynomial degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HilbertFunction(pub Vec<usize>);

/// `dim V(2θ)` from the Weyl dimension formula.
pub fn dim_v2theta(l: &LieAlgebra) -> Result<usize> {
    let rs = &l.rs;
    let w = rs.weyl_dim(&rs.highest_weight_of_adjoint().scaled(2))?;
    w.to_usize()
        .ok_or_else(|| Error::invariant("orbit_ideal", "dim V(2θ) overflows usize"))
}

/// `Ω − c` on `Sym²g`.
pub fn shifted_operator(omega: &SplitCasimir, c: &BigRational) -> SparseMatrix {
    let n = omega.matrix.nrows();
    omega.matrix.add_scaled(&-c, &SparseMatrix::identity(n))
}

pub fn degree2_ideal(
    l: &LieAlgebra,
    omega: &SplitCasimir,
    c: &BigRational,
) -> Result<IdealDegree2> {
    let basis = image_basis(&shifted_operator(omega, c));
    let expected = l.sym2_dim() - dim_v2theta(l)?;
    if basis.len() != expected {
        return Err(Error::invariant(
            "orbit_ideal",
            format!(
                "image of Ω − c has dimension {}, Weyl formula gives {expected}",
                basis.len()
            ),
        ));
    }
    Ok(IdealDegree2 { basis })
}

/// Restriction of a quadratic form on `g*` to `h*`: root-vector coordinates die.
pub fn restrict_to_cartan(l: &LieAlgebra, v: &SparseVec) -> CartanPolynomial {
    let n = l.rs.rank();
    let pairs = l.sym2_pairs();
    let mut p = CartanPolynomial::zero(n, 2);
    for (k, coef) in v.entries() {
        let (a, b) = pairs[*k];
        if let (BasisIndex::H(i), BasisIndex::H(j)) = (l.basis()[a], l.basis()[b]) {
            let mut e = vec![0; n];
            e[i] += 1;
            e[j] += 1;
            p.add_term(e, coef.clone());
        }
    }
    p
}

/// Echelon basis of the span of degree-2 polynomials in `Sym²h` coordinates.
pub fn span_in_sym2(nvars: usize, polys: &[CartanPolynomial]) -> EchelonBasis {
    let index = MonomialIndex::new(nvars, 2);
    let vectors: Vec<SparseVec> = polys.iter().map(|p| p.to_vector(&index)).collect();
    echelon_of(index.len(), &vectors)
}

/// Restricts every basis vector of `I₂` and returns the rank and basis of the span.
pub fn projected_span(l: &LieAlgebra, ideal: &IdealDegree2) -> (usize, EchelonBasis) {
    let polys: Vec<CartanPolynomial> = ideal
        .basis
        .vectors()
        .iter()
        .map(|v| restrict_to_cartan(l, v))
        .collect();
    let basis = span_in_sym2(l.rs.rank(), &polys);
    (basis.len(), basis)
}

/// `(Ω − c)(h_i h_j)` restricted to the Cartan, for every `i ≤ j`.
///
/// Only these columns of the operator are evaluated, so this works for
/// algebras whose full `Sym²g` is too large to assemble.
pub fn cartan_pair_generators(l: &LieAlgebra, c: &BigRational) -> Vec<CartanPolynomial> {
    let n = l.rs.rank();
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            let a = l.position(BasisIndex::H(i));
            let b = l.position(BasisIndex::H(j));
            let mut v = casimir_on_monomial(l, a, b);
            v.axpy(&-c, &SparseVec::unit(l.sym2_dim(), l.sym2_index(a, b)));
            out.push(restrict_to_cartan(l, &v));
        }
    }
    out
}

/// The monomial `h_i h_j` in `n` variables.
pub fn cartan_monomial(n: usize, i: usize, j: usize) -> CartanPolynomial {
    let mut e = vec![0; n];
    e[i] += 1;
    e[j] += 1;
    CartanPolynomial::monomial(e, BigRational::from_integer(BigInt::from(1)))
}

/// Hilbert function of `Sym[h] / (degree-2 span)` up to `max_degree`.
pub fn quotient_hilbert(
    nvars: usize,
    projected: &EchelonBasis,
    max_degree: u32,
) -> Result<HilbertFunction> {
    if max_degree < 2 {
        return Err(Error::InvalidDegree(format!(
            "max_degree must be at least 2, got {max_degree}"
        )));
    }
    let sym2 = MonomialIndex::new(nvars, 2);
    if projected.dim() != sym2.len() {
        return Err(Error::DimensionMismatch {
            expected: sym2.len(),
            got: projected.dim(),
        });
    }
    let gens: Vec<CartanPolynomial> = projected
        .vectors()
        .iter()
        .map(|v| CartanPolynomial::from_vector(&sym2, v))
        .collect();
    let mut dims = vec![1, nvars];
    for d in 2..=max_degree {
        let target = MonomialIndex::new(nvars, d);
        let shifts = MonomialIndex::new(nvars, d - 2);
        let one = BigRational::from_integer(1.into());
        let mut columns = Vec::with_capacity(gens.len() * shifts.len());
        for g in &gens {
            for m in shifts.monomials() {
                let prod = g.mul(&CartanPolynomial::monomial(m.clone(), one.clone()));
                columns.push(prod.to_vector(&target));
            }
        }
        let r = rank(&SparseMatrix::from_columns(target.len(), columns));
        dims.push(target.len() - r);
    }
    Ok(HilbertFunction(dims))
}

/// Value of a quadratic polynomial at the highest-weight covector `(E(θ), ·)`.
pub fn evaluate_at_highest_weight(l: &LieAlgebra, v: &SparseVec) -> BigRational {
    let top = l.e_of(&l.rs.highest_root).expect("highest root present");
    let point: HashMap<usize, i64> = l.form_row(top).iter().copied().collect();
    let pairs = l.sym2_pairs();
    let mut acc = BigRational::zero();
    for (k, coef) in v.entries() {
        let (a, b) = pairs[*k];
        if let (Some(x), Some(y)) = (point.get(&a), point.get(&b)) {
            acc += coef * BigRational::from_integer(BigInt::from(x * y));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::{build_chevalley, casimir_top_eigenvalue, split_casimir};
    use crate::rootsys::{build_root_system, Family, SimpleType};

    fn algebra(f: Family, n: usize) -> LieAlgebra {
        build_chevalley(&build_root_system(SimpleType::new(f, n).unwrap()).unwrap())
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn ideal(l: &LieAlgebra) -> IdealDegree2 {
        let omega = split_casimir(l);
        let c = casimir_top_eigenvalue(l).unwrap();
        degree2_ideal(l, &omega, &c).unwrap()
    }

    #[test]
    fn monomial_index_sizes() {
        for (n, d) in [(1, 0), (1, 5), (3, 2), (4, 4), (8, 4)] {
            assert_eq!(MonomialIndex::new(n, d).len(), sym_dim(n, d));
        }
        assert_eq!(sym_dim(4, 2), 10);
        assert_eq!(sym_dim(8, 4), 330);
        let idx = MonomialIndex::new(2, 2);
        assert_eq!(idx.monomials(), &[vec![2, 0], vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn polynomial_arithmetic() {
        let x = CartanPolynomial::variable(2, 0);
        let y = CartanPolynomial::variable(2, 1);
        let s = x.add(&y);
        let sq = s.mul(&s);
        assert_eq!(sq.coefficient(&[1, 1]), q(2));
        assert_eq!(sq.degree(), 2);
        assert!(sq.scale(&q(3)).is_proportional_to(&sq));
        assert!(!sq.is_proportional_to(&x.mul(&y)));
        assert!(x.add(&x.scale(&q(-1))).is_zero());
    }

    #[test]
    fn sl2_ideal_generator() {
        let l = algebra(Family::A, 1);
        let i2 = ideal(&l);
        assert_eq!(i2.dim(), 1);
        let (e, f, h) = (0, 1, 2);
        let expected =
            SparseVec::from_entries(6, [(l.sym2_index(h, h), q(2)), (l.sym2_index(e, f), q(8))]);
        let mut span = EchelonBasis::new(6);
        span.insert(&expected).unwrap();
        assert_eq!(span.vectors(), i2.basis.vectors());
    }

    #[test]
    fn restriction_examples() {
        let l = algebra(Family::A, 1);
        let ef = SparseVec::unit(6, l.sym2_index(0, 1));
        assert!(restrict_to_cartan(&l, &ef).is_zero());
        let gen =
            SparseVec::from_entries(6, [(l.sym2_index(2, 2), q(2)), (l.sym2_index(0, 1), q(8))]);
        assert_eq!(
            restrict_to_cartan(&l, &gen),
            CartanPolynomial::monomial(vec![2], q(2))
        );

        let a2 = algebra(Family::A, 2);
        let h1 = a2.position(BasisIndex::H(0));
        let h2 = a2.position(BasisIndex::H(1));
        let v = SparseVec::unit(a2.sym2_dim(), a2.sym2_index(h1, h2));
        assert_eq!(restrict_to_cartan(&a2, &v), cartan_monomial(2, 0, 1));
    }

    #[test]
    fn small_ideal_dimensions_and_projection() {
        for (f, n, dim, proj) in [
            (Family::A, 1, 1, 1),
            (Family::A, 2, 9, 3),
            (Family::D, 4, 106, 10),
        ] {
            let l = algebra(f, n);
            let i2 = ideal(&l);
            assert_eq!(i2.dim(), dim, "{f}{n}");
            assert_eq!(projected_span(&l, &i2).0, proj, "{f}{n}");
        }
    }

    #[test]
    fn ideal_vanishes_on_highest_weight_line() {
        for (f, n) in [(Family::A, 1), (Family::A, 3), (Family::D, 4)] {
            let l = algebra(f, n);
            for v in ideal(&l).basis.vectors() {
                assert!(evaluate_at_highest_weight(&l, v).is_zero());
            }
            // F(θ)² is the one monomial that does not vanish there
            let top = l.e_of(&l.rs.highest_root).unwrap();
            let m = l.rs.positive_roots.len();
            let ff = SparseVec::unit(l.sym2_dim(), l.sym2_index(top + m, top + m));
            assert_eq!(evaluate_at_highest_weight(&l, &ff), q(1));
        }
    }

    #[test]
    fn cartan_pairs_are_scaled_monomials() {
        let l = algebra(Family::A, 1);
        let c = q(2);
        let gens = cartan_pair_generators(&l, &c);
        assert_eq!(gens, vec![CartanPolynomial::monomial(vec![2], q(-2))]);

        let l = algebra(Family::D, 5);
        let gens = cartan_pair_generators(&l, &c);
        assert_eq!(gens.len(), 15);
        let mut k = 0;
        for i in 0..5 {
            for j in i..5 {
                assert_eq!(gens[k], cartan_monomial(5, i, j).scale(&-c.clone()));
                k += 1;
            }
        }
    }

    #[test]
    fn quotient_hilbert_examples() {
        let l = algebra(Family::A, 1);
        let (_, b) = projected_span(&l, &ideal(&l));
        assert_eq!(
            quotient_hilbert(1, &b, 4).unwrap(),
            HilbertFunction(vec![1, 1, 0, 0, 0])
        );
        assert!(quotient_hilbert(1, &b, 1).is_err());

        let l = algebra(Family::A, 2);
        let (_, b) = projected_span(&l, &ideal(&l));
        assert_eq!(
            quotient_hilbert(2, &b, 4).unwrap(),
            HilbertFunction(vec![1, 2, 0, 0, 0])
        );
    }

    #[test]
    fn partial_degree2_span_leaves_room_in_higher_degrees() {
        // only x² in two variables: quotient is k[x, y]/(x²), dims 1, 2, 2, 2
        let b = span_in_sym2(2, &[CartanPolynomial::monomial(vec![2, 0], q(1))]);
        assert_eq!(
            quotient_hilbert(2, &b, 3).unwrap(),
            HilbertFunction(vec![1, 2, 2, 2])
        );
    }
}
