//! Matrix model of the minimal orbit in `sl(n)`.
//!
//! A matrix lies in the closure of the minimal nilpotent orbit when it has
//! rank at most one and squares to zero. Both conditions are quadratic: the
//! 2×2 minors and the entries of `A²`. Restricting them to the traceless
//! diagonal gives an independent route to the degree-2 image in `Sym[h]` for
//! type `A_{n-1}`. Traceless coordinates are the first `n − 1` diagonal
//! entries, with `a_nn = −(a_11 + … + a_{n−1,n−1})`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::orbit_ideal::{quotient_hilbert, span_in_sym2, CartanPolynomial, HilbertFunction};

/// Quadratic polynomial in the entries `a_ij` of an `n × n` matrix.
///
/// Keys are sorted pairs of variable indices `i * n + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixPolynomial {
    pub n: usize,
    pub terms: BTreeMap<(usize, usize), BigRational>,
}

impl MatrixPolynomial {
    fn new(n: usize) -> Self {
        MatrixPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    fn add(&mut self, (i, j): (usize, usize), (k, l): (usize, usize), coef: BigRational) {
        let (u, v) = (i * self.n + j, k * self.n + l);
        let key = if u <= v { (u, v) } else { (v, u) };
        let slot = self.terms.entry(key).or_insert_with(BigRational::zero);
        *slot += coef;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Coefficient of `a_ij a_kl`.
    pub fn coefficient(&self, (i, j): (usize, usize), (k, l): (usize, usize)) -> BigRational {
        let (u, v) = (i * self.n + j, k * self.n + l);
        let key = if u <= v { (u, v) } else { (v, u) };
        self.terms
            .get(&key)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Value at a matrix given row-major.
    pub fn evaluate(&self, matrix: &[BigRational]) -> BigRational {
        assert_eq!(matrix.len(), self.n * self.n);
        self.terms
            .iter()
            .map(|(&(u, v), c)| c * &matrix[u] * &matrix[v])
            .sum()
    }
}

fn check_size(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidType(format!(
            "matrix size must be at least 2, got {n}"
        )));
    }
    Ok(())
}

/// `a_ij a_kl − a_il a_kj` for `i < k`, `j < l`.
pub fn minor_generators(n: usize) -> Result<Vec<MatrixPolynomial>> {
    check_size(n)?;
    let one = BigRational::one();
    let mut out = Vec::new();
    for i in 0..n {
        for k in i + 1..n {
            for j in 0..n {
                for l in j + 1..n {
                    let mut p = MatrixPolynomial::new(n);
                    p.add((i, j), (k, l), one.clone());
                    p.add((i, l), (k, j), -one.clone());
                    out.push(p);
                }
            }
        }
    }
    Ok(out)
}

/// Entries of `A²`, row-major.
pub fn square_generators(n: usize) -> Result<Vec<MatrixPolynomial>> {
    check_size(n)?;
    let one = BigRational::one();
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut p = MatrixPolynomial::new(n);
            for k in 0..n {
                p.add((i, k), (k, j), one.clone());
            }
            out.push(p);
        }
    }
    Ok(out)
}

fn diagonal_form(n: usize, var: usize) -> Option<CartanPolynomial> {
    let (i, j) = (var / n, var % n);
    if i != j {
        return None;
    }
    if i + 1 < n {
        return Some(CartanPolynomial::variable(n - 1, i));
    }
    let mut last = CartanPolynomial::zero(n - 1, 1);
    for k in 0..n - 1 {
        last = last.add(&CartanPolynomial::variable(n - 1, k));
    }
    Some(last.scale(&-BigRational::one()))
}

/// Sets off-diagonal entries to zero and rewrites in traceless coordinates.
pub fn restrict_to_diagonal(polys: &[MatrixPolynomial], n: usize) -> Vec<CartanPolynomial> {
    polys
        .iter()
        .map(|p| {
            assert_eq!(p.n, n);
            let mut out = CartanPolynomial::zero(n - 1, 2);
            for (&(u, v), c) in &p.terms {
                if let (Some(x), Some(y)) = (diagonal_form(n, u), diagonal_form(n, v)) {
                    out = out.add(&x.mul(&y).scale(c));
                }
            }
            out
        })
        .collect()
}

/// Minors followed by the entries of `A²`.
pub fn all_generators(n: usize) -> Result<Vec<MatrixPolynomial>> {
    let mut gens = minor_generators(n)?;
    gens.extend(square_generators(n)?);
    Ok(gens)
}

pub fn oracle_quotient_dims(n: usize, max_degree: u32) -> Result<HilbertFunction> {
    let restricted = restrict_to_diagonal(&all_generators(n)?, n);
    let span = span_in_sym2(n - 1, &restricted);
    quotient_hilbert(n - 1, &span, max_degree)
}

/// The elementary matrix `E_1n`, a rank-one square-zero matrix.
pub fn highest_weight_matrix(n: usize) -> Vec<BigRational> {
    let mut m = vec![BigRational::zero(); n * n];
    m[n - 1] = BigRational::one();
    m
}
