//! Chevalley basis, adjoint action, invariant form and the split Casimir.
//!
//! The basis is `E(α)` for each positive root, then `F(α)`, then `H(i)` for
//! each simple coroot, in that order. Brackets of root vectors use the
//! bimultiplicative sign `ε(α, β)` fixed by orienting every Dynkin edge from
//! the lower to the higher index. With this choice every structure constant
//! lies in `{0, ±1, ±2}`, apart from `[E(α), F(α)] = h_α` whose expansion in
//! simple coroots carries the coefficients of `α`.
//!
//! Elements of `Sym²g` are written as commutative quadratic monomials
//! `x_a x_b` with `a ≤ b`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalgx::{SparseMatrix, SparseVec};
use crate::rootsys::{Root, RootSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisIndex {
    /// Root vector for the positive root with this index.
    E(usize),
    /// Root vector for the negative of the positive root with this index.
    F(usize),
    /// Simple coroot `h_i`.
    H(usize),
}

/// A linear combination of basis vectors with integer coefficients.
pub type Combination = Vec<(usize, i64)>;

#[derive(Debug, Clone)]
pub struct LieAlgebra {
    pub rs: RootSystem,
    basis: Vec<BasisIndex>,
    /// `brackets[a * dim + b]` is `[x_a, x_b]`.
    brackets: Vec<Combination>,
    /// Nonzero entries of the invariant form, per basis vector.
    form: Vec<Combination>,
    /// Form-dual basis: `dual[a]` is `x^a` with `(x_a, x^b) = δ_ab`.
    dual: Vec<Vec<(usize, BigRational)>>,
    /// Weight of each basis vector in simple-root coordinates.
    weights: Vec<Vec<i64>>,
}

fn sign_exponent(rs: &RootSystem, a: &[i64], b: &[i64]) -> i64 {
    let n = rs.rank();
    let mut s = 0;
    for i in 0..n {
        if a[i] == 0 {
            continue;
        }
        for j in i..n {
            if i == j || rs.cartan_matrix[i][j] == -1 {
                s += a[i] * b[j];
            }
        }
    }
    s
}

/// `ε(α, β) ∈ {±1}`.
fn epsilon(rs: &RootSystem, a: &[i64], b: &[i64]) -> i64 {
    if sign_exponent(rs, a, b).rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub fn build_chevalley(rs: &RootSystem) -> LieAlgebra {
    let n = rs.rank();
    let m = rs.positive_roots.len();
    let dim = 2 * m + n;

    let mut basis = Vec::with_capacity(dim);
    basis.extend((0..m).map(BasisIndex::E));
    basis.extend((0..m).map(BasisIndex::F));
    basis.extend((0..n).map(BasisIndex::H));

    let root_pos: HashMap<&[i64], usize> = rs
        .positive_roots
        .iter()
        .enumerate()
        .map(|(i, r)| (r.0.as_slice(), i))
        .collect();

    // x = sign * E_γ for the root γ (E(α) = E_α, F(α) = -E_{-α})
    let signed_root = |idx: BasisIndex| -> Option<(Vec<i64>, i64)> {
        match idx {
            BasisIndex::E(i) => Some((rs.positive_roots[i].0.clone(), 1)),
            BasisIndex::F(i) => Some((rs.positive_roots[i].0.iter().map(|c| -c).collect(), -1)),
            BasisIndex::H(_) => None,
        }
    };
    // basis position and sign of E_γ
    let locate = |gamma: &[i64]| -> Option<(usize, i64)> {
        if let Some(&i) = root_pos.get(gamma) {
            return Some((i, 1));
        }
        let neg: Vec<i64> = gamma.iter().map(|c| -c).collect();
        root_pos.get(neg.as_slice()).map(|&i| (m + i, -1))
    };

    let weights: Vec<Vec<i64>> = basis
        .iter()
        .map(|&b| signed_root(b).map(|(g, _)| g).unwrap_or_else(|| vec![0; n]))
        .collect();

    let root_pair =
        |g: &[i64], i: usize| -> i64 { (0..n).map(|j| g[j] * rs.cartan_matrix[j][i]).sum() };

    let mut brackets = vec![Vec::new(); dim * dim];
    for a in 0..dim {
        for b in 0..dim {
            let out: Combination = match (basis[a], basis[b]) {
                (BasisIndex::H(_), BasisIndex::H(_)) => Vec::new(),
                (BasisIndex::H(i), _) => {
                    let c = root_pair(&weights[b], i);
                    if c == 0 {
                        Vec::new()
                    } else {
                        vec![(b, c)]
                    }
                }
                (_, BasisIndex::H(i)) => {
                    let c = -root_pair(&weights[a], i);
                    if c == 0 {
                        Vec::new()
                    } else {
                        vec![(a, c)]
                    }
                }
                (x, y) => {
                    let (g1, s1) = signed_root(x).unwrap();
                    let (g2, s2) = signed_root(y).unwrap();
                    let sum: Vec<i64> = g1.iter().zip(&g2).map(|(p, q)| p + q).collect();
                    if sum.iter().all(|&c| c == 0) {
                        // [E_γ, E_{-γ}] = -γ
                        g1.iter()
                            .enumerate()
                            .filter(|(_, &c)| c != 0)
                            .map(|(i, &c)| (2 * m + i, -s1 * s2 * c))
                            .collect()
                    } else if let Some((pos, s3)) = locate(&sum) {
                        vec![(pos, s1 * s2 * s3 * epsilon(rs, &g1, &g2))]
                    } else {
                        Vec::new()
                    }
                }
            };
            brackets[a * dim + b] = out;
        }
    }

    let mut form = vec![Vec::new(); dim];
    for i in 0..m {
        form[i].push((m + i, 1));
        form[m + i].push((i, 1));
    }
    for i in 0..n {
        for j in 0..n {
            let c = rs.cartan_matrix[i][j];
            if c != 0 {
                form[2 * m + i].push((2 * m + j, c));
            }
        }
    }

    let mut dual: Vec<Vec<(usize, BigRational)>> = vec![Vec::new(); dim];
    for i in 0..m {
        dual[i].push((m + i, BigRational::one()));
        dual[m + i].push((i, BigRational::one()));
    }
    for i in 0..n {
        for j in 0..n {
            let c = &rs.form[i][j];
            if !c.is_zero() {
                dual[2 * m + i].push((2 * m + j, c.clone()));
            }
        }
    }

    LieAlgebra {
        rs: rs.clone(),
        basis,
        brackets,
        form,
        dual,
        weights,
    }
}

impl LieAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisIndex] {
        &self.basis
    }

    pub fn position(&self, x: BasisIndex) -> usize {
        let m = self.rs.positive_roots.len();
        match x {
            BasisIndex::E(i) => i,
            BasisIndex::F(i) => m + i,
            BasisIndex::H(i) => 2 * m + i,
        }
    }

    pub fn e_of(&self, r: &Root) -> Option<usize> {
        self.rs
            .root_index(r)
            .map(|i| self.position(BasisIndex::E(i)))
    }

    pub fn bracket(&self, a: usize, b: usize) -> &[(usize, i64)] {
        &self.brackets[a * self.dim() + b]
    }

    /// Bracket of two elements given as sparse coefficient lists.
    pub fn bracket_vectors(
        &self,
        x: &[(usize, BigRational)],
        y: &[(usize, BigRational)],
    ) -> SparseVec {
        let mut acc: Vec<(usize, BigRational)> = Vec::new();
        for (a, u) in x {
            for (b, v) in y {
                for (c, k) in self.bracket(*a, *b) {
                    acc.push((*c, u * v * BigRational::from_integer((*k).into())));
                }
            }
        }
        SparseVec::from_entries(self.dim(), acc)
    }

    pub fn form(&self, a: usize, b: usize) -> i64 {
        self.form[a]
            .iter()
            .find(|(c, _)| *c == b)
            .map(|(_, v)| *v)
            .unwrap_or(0)
    }

    pub fn form_row(&self, a: usize) -> &[(usize, i64)] {
        &self.form[a]
    }

    pub fn dual(&self, a: usize) -> &[(usize, BigRational)] {
        &self.dual[a]
    }

    /// Weight of basis vector `a` in simple-root coordinates (zero for `H`).
    pub fn weight(&self, a: usize) -> &[i64] {
        &self.weights[a]
    }

    /// Whether `[x_a, x_b] = -[x_b, x_a]`.
    pub fn is_antisymmetric_on(&self, a: usize, b: usize) -> bool {
        let mut neg: Combination = self.bracket(b, a).iter().map(|&(c, k)| (c, -k)).collect();
        neg.sort_unstable();
        let mut ab = self.bracket(a, b).to_vec();
        ab.sort_unstable();
        ab == neg
    }

    /// `[x_a, [x_b, x_c]] + [x_b, [x_c, x_a]] + [x_c, [x_a, x_b]]`, nonzero terms only.
    pub fn jacobi_residual(&self, a: usize, b: usize, c: usize) -> Combination {
        let mut acc: HashMap<usize, i64> = HashMap::new();
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            for &(d, k) in self.bracket(y, z) {
                for &(e, l) in self.bracket(x, d) {
                    *acc.entry(e).or_insert(0) += k * l;
                }
            }
        }
        let mut out: Combination = acc.into_iter().filter(|(_, v)| *v != 0).collect();
        out.sort_unstable();
        out
    }

    /// `([x_a, x_b], x_c) + (x_b, [x_a, x_c])`, zero for an invariant form.
    pub fn invariance_residual(&self, a: usize, b: usize, c: usize) -> i64 {
        let left: i64 = self
            .bracket(a, b)
            .iter()
            .map(|&(d, k)| k * self.form(d, c))
            .sum();
        let right: i64 = self
            .bracket(a, c)
            .iter()
            .map(|&(d, k)| k * self.form(b, d))
            .sum();
        left + right
    }

    /// Matrix of `ad(x) = [x, -]` in the Chevalley basis.
    pub fn adjoint_matrix(&self, x: BasisIndex) -> SparseMatrix {
        let a = self.position(x);
        let n = self.dim();
        SparseMatrix::from_triplets(
            n,
            n,
            (0..n).flat_map(|b| {
                self.bracket(a, b)
                    .iter()
                    .map(move |(c, k)| (*c, b, BigRational::from_integer((*k).into())))
            }),
        )
    }

    pub fn sym2_dim(&self) -> usize {
        let n = self.dim();
        n * (n + 1) / 2
    }

    /// Coordinate of the monomial `x_a x_b` in `Sym²g`.
    pub fn sym2_index(&self, a: usize, b: usize) -> usize {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let n = self.dim();
        a * n - a * a.saturating_sub(1) / 2 + (b - a)
    }

    /// All monomials `(a, b)`, `a ≤ b`, in coordinate order.
    pub fn sym2_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.dim();
        (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect()
    }

    /// Derivation action of `ad(x)` on `Sym²g`.
    pub fn sym2_adjoint(&self, x: usize) -> SparseMatrix {
        let pairs = self.sym2_pairs();
        let d = pairs.len();
        let cols = pairs
            .par_iter()
            .map(|&(a, b)| {
                let mut acc = Vec::new();
                for (c, k) in self.bracket(x, a) {
                    acc.push((
                        self.sym2_index(*c, b),
                        BigRational::from_integer((*k).into()),
                    ));
                }
                for (c, k) in self.bracket(x, b) {
                    acc.push((
                        self.sym2_index(a, *c),
                        BigRational::from_integer((*k).into()),
                    ));
                }
                SparseVec::from_entries(d, acc)
            })
            .collect();
        SparseMatrix::from_columns(d, cols)
    }
}

/// The split Casimir `Ω = Σ_a x_a ⊗ x^a` acting on `Sym²g` by
/// `Ω(v·w) = Σ_a [x_a, v]·[x^a, w]`.
#[derive(Debug, Clone)]
pub struct SplitCasimir {
    pub matrix: SparseMatrix,
}

/// `Ω(x_a x_b)` in `Sym²g` coordinates, without assembling the whole operator.
pub fn casimir_on_monomial(l: &LieAlgebra, a: usize, b: usize) -> SparseVec {
    let mut acc: Vec<(usize, BigRational)> = Vec::new();
    for c in 0..l.dim() {
        let left = l.bracket(c, a);
        if left.is_empty() {
            continue;
        }
        for (d, k) in l.dual(c) {
            for (p, u) in left {
                for (q, v) in l.bracket(*d, b) {
                    let coef = k * BigRational::from_integer(BigInt::from(u * v));
                    acc.push((l.sym2_index(*p, *q), coef));
                }
            }
        }
    }
    SparseVec::from_entries(l.sym2_dim(), acc)
}

pub fn split_casimir(l: &LieAlgebra) -> SplitCasimir {
    let cols = l
        .sym2_pairs()
        .par_iter()
        .map(|&(a, b)| casimir_on_monomial(l, a, b))
        .collect();
    SplitCasimir {
        matrix: SparseMatrix::from_columns(l.sym2_dim(), cols),
    }
}

/// The scalar by which `Ω` acts on `E(θ)²`, checked to be an eigenvalue.
pub fn casimir_top_eigenvalue(l: &LieAlgebra) -> Result<BigRational> {
    let top = l
        .e_of(&l.rs.highest_root)
        .ok_or_else(|| Error::invariant("chevalley", "highest root has no root vector"))?;
    let idx = l.sym2_index(top, top);
    let image = casimir_on_monomial(l, top, top);
    let c = image.get(idx);
    if image.nnz() > 1 || (image.nnz() == 1 && c.is_zero()) {
        return Err(Error::invariant(
            "chevalley",
            "Ω(E(θ)²) is not proportional to E(θ)²",
        ));
    }
    Ok(c)
}

/// The form on `Sym²g` induced by the invariant form,
/// `B(x_a x_b, x_c x_d) = (a,c)(b,d) + (a,d)(b,c)`, as a Gram matrix.
pub fn sym2_gram(l: &LieAlgebra) -> SparseMatrix {
    let d = l.sym2_dim();
    let cols = l
        .sym2_pairs()
        .into_iter()
        .map(|(a, b)| {
            let mut acc = Vec::new();
            for (c, f1) in l.form_row(a) {
                for (dd, f2) in l.form_row(b) {
                    // square monomials receive both terms of the sum
                    let k = if c == dd { 2 } else { 1 };
                    acc.push((
                        l.sym2_index(*c, *dd),
                        BigRational::from_integer((k * f1 * f2).into()),
                    ));
                }
            }
            SparseVec::from_entries(d, acc)
        })
        .collect();
    SparseMatrix::from_columns(d, cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, Family, SimpleType};

    fn algebra(f: Family, n: usize) -> LieAlgebra {
        build_chevalley(&build_root_system(SimpleType::new(f, n).unwrap()).unwrap())
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn sl2_relations() {
        let l = algebra(Family::A, 1);
        let (e, f, h) = (0, 1, 2);
        assert_eq!(l.bracket(h, e), &[(e, 2)]);
        assert_eq!(l.bracket(h, f), &[(f, -2)]);
        assert_eq!(l.bracket(e, f), &[(h, 1)]);
        assert_eq!(l.form(e, f), 1);
        assert_eq!(l.form(h, h), 2);
    }

    #[test]
    fn sl2_adjoint_matrices() {
        let l = algebra(Family::A, 1);
        let adh = l.adjoint_matrix(BasisIndex::H(0));
        assert_eq!(adh.get(0, 0), q(2));
        assert_eq!(adh.get(1, 1), q(-2));
        assert_eq!(adh.nnz(), 2);
        let ade = l.adjoint_matrix(BasisIndex::E(0));
        assert_eq!(ade.column(1), &SparseVec::unit(3, 2));
    }

    #[test]
    fn a2_simple_root_vectors_bracket_to_highest() {
        let l = algebra(Family::A, 2);
        let a1 = l.e_of(&Root(vec![1, 0])).unwrap();
        let a2 = l.e_of(&Root(vec![0, 1])).unwrap();
        let top = l.e_of(&Root(vec![1, 1])).unwrap();
        let br = l.bracket(a1, a2);
        assert_eq!(br.len(), 1);
        assert_eq!(br[0].0, top);
        assert_eq!(br[0].1.abs(), 1);
    }

    #[test]
    fn structure_checks_exhaustive_small() {
        for (f, n) in [(Family::A, 1), (Family::A, 3), (Family::D, 4)] {
            let l = algebra(f, n);
            let d = l.dim();
            for a in 0..d {
                for b in 0..d {
                    assert!(l.is_antisymmetric_on(a, b));
                    for c in 0..d {
                        assert!(
                            l.jacobi_residual(a, b, c).is_empty(),
                            "{f}{n} ({a},{b},{c})"
                        );
                        assert_eq!(l.invariance_residual(a, b, c), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn structure_constants_are_small_integers() {
        let l = algebra(Family::E, 6);
        let m = l.rs.positive_roots.len();
        for a in 0..l.dim() {
            for b in 0..l.dim() {
                if a < m && b == a + m {
                    // [E(α), F(α)] is the coroot h_α = Σ α_i h_i
                    let coroot: Combination = l.rs.positive_roots[a]
                        .0
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(i, &c)| (2 * m + i, c))
                        .collect();
                    assert_eq!(l.bracket(a, b), coroot.as_slice());
                } else if !(b < m && a == b + m) {
                    assert!(l.bracket(a, b).iter().all(|(_, k)| (-2..=2).contains(k)));
                }
            }
        }
    }

    #[test]
    fn cartan_form_matches_root_pairing() {
        let l = algebra(Family::D, 5);
        let n = l.rs.rank();
        for i in 0..n {
            for j in 0..n {
                let hi = l.position(BasisIndex::H(i));
                let hj = l.position(BasisIndex::H(j));
                let p = l.rs.root_pairing(&Root::simple(n, i), &Root::simple(n, j));
                assert_eq!(l.form(hi, hj), p);
            }
        }
    }

    #[test]
    fn sl2_casimir_examples() {
        let l = algebra(Family::A, 1);
        let (e, f, h) = (0, 1, 2);
        let hh = casimir_on_monomial(&l, h, h);
        assert_eq!(
            hh,
            SparseVec::from_entries(6, [(l.sym2_index(e, f), q(-8))])
        );
        let ee = casimir_on_monomial(&l, e, e);
        assert_eq!(ee, SparseVec::from_entries(6, [(l.sym2_index(e, e), q(2))]));
    }

    #[test]
    fn top_eigenvalue_is_two() {
        for (f, n) in [(Family::A, 1), (Family::A, 2), (Family::D, 4)] {
            assert_eq!(casimir_top_eigenvalue(&algebra(f, n)).unwrap(), q(2));
        }
    }

    #[test]
    fn sym2_indexing_is_a_bijection() {
        let l = algebra(Family::A, 2);
        for (k, (a, b)) in l.sym2_pairs().into_iter().enumerate() {
            assert_eq!(l.sym2_index(a, b), k);
            assert_eq!(l.sym2_index(b, a), k);
        }
    }

    #[test]
    fn killing_form_is_twice_dual_coxeter_times_form() {
        for (f, n, hv) in [(Family::A, 1, 2), (Family::A, 3, 4), (Family::D, 4, 6)] {
            let l = algebra(f, n);
            let ads: Vec<_> = l.basis().iter().map(|&x| l.adjoint_matrix(x)).collect();
            for a in 0..l.dim() {
                for b in 0..l.dim() {
                    let prod = ads[a].matmul(&ads[b]);
                    let tr: BigRational = (0..l.dim()).map(|i| prod.get(i, i)).sum();
                    assert_eq!(tr, q(2 * hv * l.form(a, b)), "{f}{n} ({a},{b})");
                }
            }
        }
    }

    #[test]
    fn casimir_is_self_adjoint() {
        for (f, n) in [(Family::A, 1), (Family::A, 2)] {
            let l = algebra(f, n);
            let omega = split_casimir(&l).matrix;
            let g = sym2_gram(&l);
            assert_eq!(omega.transpose().matmul(&g), g.matmul(&omega));
        }
    }
}
