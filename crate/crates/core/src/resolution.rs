//! Cohomology of the minimal resolution of a Kleinian singularity.
//!
//! The exceptional fiber is a configuration of projective lines whose dual
//! graph is the Dynkin diagram. Betti numbers are read off that graph: one
//! degree-2 class per line, no odd cohomology since the graph is a tree. Ring
//! dimensions use the convention that cohomological degree `2d` matches
//! polynomial degree `d`; the resulting ring is `Sym[h] / Sym^{≥2}[h]`.

use crate::error::{Error, Result};
use crate::orbit_ideal::HilbertFunction;
use crate::rootsys::{cartan_matrix, SimpleType};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinTree {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl DynkinTree {
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|(a, b)| *a == v || *b == v)
            .count()
    }

    pub fn components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut count = self.vertices;
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                count -= 1;
            }
        }
        count
    }

    pub fn is_tree(&self) -> bool {
        self.vertices > 0 && self.edges.len() + 1 == self.vertices && self.components() == 1
    }
}

pub fn dynkin_tree(t: SimpleType) -> Result<DynkinTree> {
    let tree = DynkinTree {
        vertices: t.rank(),
        edges: t.dynkin_edges(),
    };
    if !tree.is_tree() {
        return Err(Error::invariant(
            "resolution",
            format!("Dynkin diagram of {t} is not a tree"),
        ));
    }
    let c = cartan_matrix(t);
    for i in 0..tree.vertices {
        for j in 0..tree.vertices {
            if i == j {
                continue;
            }
            let edge = tree.edges.contains(&(i, j)) || tree.edges.contains(&(j, i));
            if edge != (c[i][j] == -1) {
                return Err(Error::invariant(
                    "resolution",
                    format!("{t}: diagram and Cartan matrix disagree at ({i}, {j})"),
                ));
            }
        }
    }
    Ok(tree)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyModel {
    /// `b_0, b_1, b_2`; all higher Betti numbers vanish.
    pub betti: Vec<usize>,
    /// Coefficients of the Poincaré polynomial in `t`, lowest degree first.
    pub poincare: Vec<usize>,
}

impl CohomologyModel {
    /// `dim H^{2d}` for `d = 0..=max_degree`.
    pub fn ring_dims(&self, max_degree: u32) -> HilbertFunction {
        HilbertFunction(
            (0..=max_degree as usize)
                .map(|d| self.betti.get(2 * d).copied().unwrap_or(0))
                .collect(),
        )
    }
}

pub fn betti_numbers(tree: &DynkinTree) -> CohomologyModel {
    let b0 = tree.components();
    // a union of spheres glued at points has H¹ of rank equal to the
    // cycle rank of its dual graph
    let b1 = tree.edges.len() + b0 - tree.vertices;
    let b2 = tree.vertices;
    CohomologyModel {
        betti: vec![b0, b1, b2],
        poincare: vec![b0, b1, b2],
    }
}

/// Euler characteristic of the sphere configuration: each sphere contributes
/// 2 and each gluing point is counted twice.
pub fn euler_characteristic(tree: &DynkinTree) -> i64 {
    2 * tree.vertices as i64 - tree.edges.len() as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    fn tree(f: Family, n: usize) -> DynkinTree {
        dynkin_tree(SimpleType::new(f, n).unwrap()).unwrap()
    }

    #[test]
    fn shapes() {
        let a3 = tree(Family::A, 3);
        assert_eq!(a3.edges.len(), 2);
        assert!((0..3).all(|v| a3.degree(v) <= 2));

        let d4 = tree(Family::D, 4);
        let degrees: Vec<_> = (0..4).map(|v| d4.degree(v)).collect();
        assert_eq!(degrees.iter().filter(|&&d| d == 3).count(), 1);
        assert_eq!(degrees.iter().filter(|&&d| d == 1).count(), 3);

        let e6 = tree(Family::E, 6);
        assert_eq!(e6.vertices, 6);
        assert_eq!(e6.edges.len(), 5);
        assert_eq!((0..6).filter(|&v| e6.degree(v) == 3).count(), 1);
    }

    #[test]
    fn betti_examples() {
        let a1 = betti_numbers(&tree(Family::A, 1));
        assert_eq!(a1.betti, vec![1, 0, 1]);
        assert_eq!(a1.poincare, vec![1, 0, 1]);
        assert_eq!(betti_numbers(&tree(Family::D, 4)).betti, vec![1, 0, 4]);
        assert_eq!(betti_numbers(&tree(Family::E, 8)).betti, vec![1, 0, 8]);
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_characteristic(&tree(Family::A, 1)), 2);
        assert_eq!(euler_characteristic(&tree(Family::A, 2)), 3);
        assert_eq!(euler_characteristic(&tree(Family::E, 6)), 7);
    }

    #[test]
    fn ring_dims_halve_degrees() {
        let m = betti_numbers(&tree(Family::E, 7));
        assert_eq!(m.ring_dims(4), HilbertFunction(vec![1, 7, 0, 0, 0]));
    }

    #[test]
    fn cycle_would_show_up_in_b1() {
        let triangle = DynkinTree {
            vertices: 3,
            edges: vec![(0, 1), (1, 2), (2, 0)],
        };
        assert!(!triangle.is_tree());
        assert_eq!(betti_numbers(&triangle).betti, vec![1, 1, 3]);
    }
}
