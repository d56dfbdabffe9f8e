//! Small named quivers and modules used by tests, benches and examples.

use std::sync::Arc;

use crate::linalg::Matrix;
use crate::quiver::{Quiver, Representation};

/// `1 -> 2` with its three indecomposables.
#[derive(Clone, Debug)]
pub struct A2 {
    pub quiver: Arc<Quiver>,
    pub p: u32,
    pub s1: Representation,
    pub s2: Representation,
    /// `P(1) = I(2)`
    pub p1: Representation,
}

impl A2 {
    pub fn new(p: u32) -> Self {
        let quiver = Arc::new(Quiver::linear_a(2));
        let s1 = Representation::simple(quiver.clone(), p, 0);
        let s2 = Representation::simple(quiver.clone(), p, 1);
        let p1 = Representation::new(quiver.clone(), p, vec![1, 1], vec![Matrix::identity(p, 1)]).unwrap();
        A2 { quiver, p, s1, s2, p1 }
    }

    pub fn indecomposables(&self) -> Vec<Representation> {
        vec![self.s1.clone(), self.s2.clone(), self.p1.clone()]
    }
}

/// The interval module `M[i, j]` (1-based, `i <= j`) of the linear quiver `1 -> ... -> n`.
pub fn interval(quiver: &Arc<Quiver>, p: u32, i: usize, j: usize) -> Representation {
    let n = quiver.num_vertices();
    assert!(1 <= i && i <= j && j <= n);
    let dims: Vec<usize> = (1..=n).map(|v| usize::from(i <= v && v <= j)).collect();
    let maps = quiver
        .arrows()
        .iter()
        .map(|a| {
            if dims[a.source] == 1 && dims[a.target] == 1 {
                Matrix::identity(p, 1)
            } else {
                Matrix::zeros(p, dims[a.target], dims[a.source])
            }
        })
        .collect();
    Representation::new(quiver.clone(), p, dims, maps).unwrap()
}

/// Linear `A_n` with all `n(n+1)/2` interval modules, shortest first.
pub fn linear_catalog(n: usize, p: u32) -> (Arc<Quiver>, Vec<Representation>) {
    let q = Arc::new(Quiver::linear_a(n));
    let mut out = Vec::new();
    for len in 0..n {
        for i in 1..=n - len {
            out.push(interval(&q, p, i, i + len));
        }
    }
    (q, out)
}

/// `D_4` with the three outer vertices as sources: `1 -> 4`, `2 -> 4`, `3 -> 4`.
pub fn d4() -> Arc<Quiver> {
    Arc::new(Quiver::new(&["1", "2", "3", "4"], &[("a", "1", "4"), ("b", "2", "4"), ("c", "3", "4")]).unwrap())
}

/// The Kronecker quiver `1 ⇉ 2` with arrows `a`, `b`.
pub fn kronecker() -> Arc<Quiver> {
    Arc::new(Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]).unwrap())
}

/// Kronecker module of dimension vector `(m, n)` from explicit matrices.
pub fn kronecker_module(q: &Arc<Quiver>, p: u32, a: Matrix, b: Matrix) -> Representation {
    let dims = vec![a.cols(), a.rows()];
    Representation::new(q.clone(), p, dims, vec![a, b]).unwrap()
}

/// The preprojective `(n, n+1)` and preinjective `(n+1, n)` Kronecker modules
/// with total dimension at most `max_total`.
pub fn kronecker_catalog(p: u32, max_total: usize) -> (Arc<Quiver>, Vec<Representation>) {
    let q = kronecker();
    let mut out = Vec::new();
    let mut n = 0;
    while 2 * n < max_total {
        // preprojective (n, n+1): a = [I; 0], b = [0; I]
        let a = Matrix::from_fn(p, n + 1, n, |r, c| u32::from(r == c));
        let b = Matrix::from_fn(p, n + 1, n, |r, c| u32::from(r == c + 1));
        out.push(kronecker_module(&q, p, a, b));
        n += 1;
    }
    let mut n = 0;
    while 2 * n < max_total {
        // preinjective (n+1, n): a = [I 0], b = [0 I]
        let a = Matrix::from_fn(p, n, n + 1, |r, c| u32::from(r == c));
        let b = Matrix::from_fn(p, n, n + 1, |r, c| u32::from(c == r + 1));
        out.push(kronecker_module(&q, p, a, b));
        n += 1;
    }
    (q, out)
}
