//! Simply-laced root systems of types A, D and E.
//!
//! Simple roots follow Bourbaki numbering. Roots are stored in the simple-root
//! basis and weights in the fundamental-weight basis, so every lattice vector
//! is integral; the two bases are related by the Cartan matrix. The invariant
//! form is normalized so that every root has squared length 2.

use std::collections::HashSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
        };
        f.write_str(c)
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            other => Err(Error::InvalidType(format!(
                "unknown family `{other}`, expected one of A, D, E"
            ))),
        }
    }
}

/// A Dynkin label such as `A3` or `E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if !ok {
            let bound = match family {
                Family::A => "rank >= 1",
                Family::D => "rank >= 4",
                Family::E => "rank in {6, 7, 8}",
            };
            return Err(Error::InvalidType(format!(
                "{family}{rank} violates {bound} for family {family}"
            )));
        }
        Ok(SimpleType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the simple Lie algebra of this type.
    pub fn dim_g(&self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 2),
            (Family::D, _) => n * (2 * n - 1),
            (Family::E, 6) => 78,
            (Family::E, 7) => 133,
            (Family::E, 8) => 248,
            _ => unreachable!("validated in SimpleType::new"),
        }
    }

    /// Edges of the Dynkin diagram, 0-based, Bourbaki numbering.
    pub fn dynkin_edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.family {
            Family::A => (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect(),
            Family::D => {
                let mut edges: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
                edges.push((n - 3, n - 1));
                edges
            }
            Family::E => {
                // 1-3-4-5-6-7-8 with 2 hanging off 4
                let mut edges = vec![(0, 2), (1, 3)];
                edges.extend((2..n - 1).map(|i| (i, i + 1)));
                edges
            }
        }
    }

    /// Every valid ADE type of rank at most `max_rank`, in the order A, D, E.
    pub fn all_up_to(max_rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for family in [Family::A, Family::D, Family::E] {
            for rank in 1..=max_rank {
                if let Ok(t) = SimpleType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn simple(rank: usize, i: usize) -> Root {
        let mut c = vec![0; rank];
        c[i] = 1;
        Root(c)
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn fundamental(rank: usize, i: usize) -> Weight {
        let mut c = vec![0; rank];
        c[i] = 1;
        Weight(c)
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }
}

/// Anything that can be written in fundamental-weight coordinates.
pub trait LatticeVector {
    fn len(&self) -> usize;
    fn weight_coords(&self, rs: &RootSystem) -> Vec<i64>;
}

impl LatticeVector for Root {
    fn len(&self) -> usize {
        self.0.len()
    }

    fn weight_coords(&self, rs: &RootSystem) -> Vec<i64> {
        rs.root_to_weight(self).0
    }
}

impl LatticeVector for Weight {
    fn len(&self) -> usize {
        self.0.len()
    }

    fn weight_coords(&self, _rs: &RootSystem) -> Vec<i64> {
        self.0.clone()
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub simple_type: SimpleType,
    pub cartan_matrix: Vec<Vec<i64>>,
    /// Ordered by height, then lexicographically.
    pub positive_roots: Vec<Root>,
    pub highest_root: Root,
    pub rho: Weight,
    /// Gram matrix of the fundamental weights, i.e. the inverse Cartan matrix.
    pub form: Vec<Vec<BigRational>>,
}

pub fn cartan_matrix(t: SimpleType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in t.dynkin_edges() {
        c[i][j] = -1;
        c[j][i] = -1;
    }
    c
}

pub fn build_root_system(t: SimpleType) -> Result<RootSystem> {
    let n = t.rank();
    let cartan = cartan_matrix(t);

    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..n).map(|i| Root::simple(n, i).0).collect();
    let mut all: Vec<Vec<i64>> = Vec::new();
    while !layer.is_empty() {
        layer.sort();
        layer.dedup();
        for r in &layer {
            known.insert(r.clone());
        }
        all.extend(layer.iter().cloned());
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                // alpha_i-string through beta: q = p - <beta, alpha_i^vee>
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let coroot: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                if p - coroot > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.push(up);
                }
            }
        }
        layer = next;
    }
    all.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| a.cmp(b))
    });
    let positive_roots: Vec<Root> = all.into_iter().map(Root).collect();

    let expected = (t.dim_g() - n) / 2;
    if positive_roots.len() != expected {
        return Err(Error::invariant(
            "rootsys",
            format!(
                "{t}: closure produced {} positive roots, expected {expected}",
                positive_roots.len()
            ),
        ));
    }

    let highest_root = positive_roots.last().cloned().expect("nonempty");
    for r in &positive_roots {
        if highest_root.0.iter().zip(&r.0).any(|(a, b)| a < b) {
            return Err(Error::invariant(
                "rootsys",
                format!(
                    "{t}: highest root {:?} does not dominate {:?}",
                    highest_root.0, r.0
                ),
            ));
        }
    }

    Ok(RootSystem {
        simple_type: t,
        form: invert_integer_matrix(&cartan),
        cartan_matrix: cartan,
        positive_roots,
        highest_root,
        rho: Weight(vec![1; n]),
    })
}

fn invert_integer_matrix(m: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row
                .iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix is nonsingular");
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let k = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &k * p;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.simple_type.rank()
    }

    pub fn dim_g(&self) -> usize {
        self.rank() + 2 * self.positive_roots.len()
    }

    pub fn root_to_weight(&self, r: &Root) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|i| (0..n).map(|j| r.0[j] * self.cartan_matrix[j][i]).sum())
                .collect(),
        )
    }

    /// Index of a positive root in `positive_roots`.
    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.positive_roots.iter().position(|x| x == r)
    }

    /// The normalized invariant form; every root has `(a, a) = 2`.
    pub fn pairing<A, B>(&self, a: &A, b: &B) -> Result<BigRational>
    where
        A: LatticeVector + ?Sized,
        B: LatticeVector + ?Sized,
    {
        let n = self.rank();
        for len in [a.len(), b.len()] {
            if len != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: len,
                });
            }
        }
        let x = a.weight_coords(self);
        let y = b.weight_coords(self);
        let mut acc = BigRational::zero();
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                if y[j] != 0 {
                    acc += &self.form[i][j] * BigRational::from_integer(BigInt::from(x[i] * y[j]));
                }
            }
        }
        Ok(acc)
    }

    /// Integer pairing of two roots, read off the Cartan matrix.
    pub fn root_pairing(&self, a: &Root, b: &Root) -> i64 {
        let n = self.rank();
        let mut acc = 0;
        for i in 0..n {
            if a.0[i] != 0 {
                for j in 0..n {
                    acc += a.0[i] * self.cartan_matrix[i][j] * b.0[j];
                }
            }
        }
        acc
    }

    /// `theta` in fundamental-weight coordinates.
    pub fn highest_weight_of_adjoint(&self) -> Weight {
        self.root_to_weight(&self.highest_root)
    }

    /// Dimension of the irreducible representation with highest weight `lam`.
    pub fn weyl_dim(&self, lam: &Weight) -> Result<BigUint> {
        if lam.0.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: lam.0.len(),
            });
        }
        if !lam.is_dominant() {
            return Err(Error::NonDominant(lam.0.clone()));
        }
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for alpha in &self.positive_roots {
            // (lam + rho, alpha) with alpha^vee = alpha
            let shifted: i64 = alpha.0.iter().zip(&lam.0).map(|(a, l)| a * (l + 1)).sum();
            num *= BigUint::from(shifted as u64);
            den *= BigUint::from(alpha.height() as u64);
        }
        let (q, r) = num.div_rem(&den);
        if !r.is_zero() {
            return Err(Error::invariant(
                "rootsys",
                format!("Weyl dimension of {:?} is not integral", lam.0),
            ));
        }
        Ok(q)
    }
}
