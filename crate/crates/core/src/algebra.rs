//! Finite-dimensional algebras given by structure constants, their modules,
//! Jacobson radicals and submodule lattices.

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{verify, Result};
use crate::hom::HomSpace;
use crate::limits;
use crate::linalg::{self, vector_from_index, Matrix, Subspace};
use crate::par;
use crate::quiver::{RepMorphism, Representation};

/// An associative unital algebra over F_p with a fixed basis `b_0, ..., b_{n-1}`.
///
/// `left[i]` is the matrix of left multiplication by `b_i`: its column `j`
/// holds the coordinates of `b_i b_j`.
#[derive(Clone, Debug)]
pub struct FDAlgebra {
    p: u32,
    left: Vec<Matrix>,
    unit: Vec<u32>,
    origin: Option<HomSpace>,
}

impl FDAlgebra {
    /// Builds an algebra from its products, checking associativity and the unit.
    pub fn new(p: u32, left: Vec<Matrix>, unit: Vec<u32>) -> Result<Self> {
        let a = FDAlgebra { p, left, unit, origin: None };
        a.check_axioms()?;
        Ok(a)
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.dim();
        verify(self.unit.len() == n && self.left.iter().all(|m| m.shape() == (n, n)), || {
            "structure constants have the wrong shape".into()
        })?;
        let u = self.left_mult(&self.unit);
        verify(u == Matrix::identity(self.p, n), || "unit is not a left unit".into())?;
        for i in 0..n {
            verify(self.left[i].mul_vec(&self.unit) == unit_vector(n, i), || "unit is not a right unit".into())?;
        }
        // (b_i b_j) b_k = b_i (b_j b_k)  <=>  L_{b_i b_j} = L_i L_j
        for i in 0..n {
            for j in 0..n {
                let prod = self.left[i].column(j);
                verify(self.left_mult(&prod) == self.left[i].mul(&self.left[j]), || {
                    format!("associativity fails for basis elements {i}, {j}")
                })?;
            }
        }
        Ok(())
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn dim(&self) -> usize {
        self.left.len()
    }
    pub fn unit(&self) -> &[u32] {
        &self.unit
    }
    /// The Hom space this algebra was built from, if any.
    pub fn origin(&self) -> Option<&HomSpace> {
        self.origin.as_ref()
    }

    /// Matrix of left multiplication by an element.
    pub fn left_mult(&self, x: &[u32]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.p, n, n);
        for (i, &c) in x.iter().enumerate() {
            if c != 0 {
                m = m.add(&self.left[i].scale(c));
            }
        }
        m
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        self.left_mult(x).mul_vec(y)
    }

    /// The opposite algebra on the same basis.
    pub fn opposite(&self) -> FDAlgebra {
        let n = self.dim();
        // in A^op, b_i * b_j = b_j b_i, i.e. column j of left_op[i] is column i of left[j]
        let left = (0..n)
            .map(|i| {
                let cols: Vec<Vec<u32>> = (0..n).map(|j| self.left[j].column(i)).collect();
                Matrix::from_columns(self.p, n, &cols)
            })
            .collect();
        FDAlgebra { p: self.p, left, unit: self.unit.clone(), origin: self.origin.clone() }
    }

    /// Jacobson radical, by the trace criterion of Cohen, Ivanyos and Wales.
    ///
    /// With `l = ⌊log_p n⌋` for the degree `n` of the (faithful) regular
    /// representation, set `I_{-1} = A` and
    /// `I_i = {x ∈ I_{i-1} : g_i(xy) = 0 for all y}`, where
    /// `g_i(a) = Tr(ã^{p^i}) / p^i mod p` for an integral lift `ã` of the
    /// matrix of `a`. Each `g_i` is additive on `I_{i-1}` and `rad A = I_l`.
    pub fn radical(&self) -> Subspace {
        let n = self.dim();
        let p = self.p;
        if n == 0 {
            return Subspace::zero(p, 0);
        }
        let mut l = 0u32;
        while (p as u64).pow(l + 1) <= n as u64 {
            l += 1;
        }
        let mut current = Subspace::full(p, n);
        for i in 0..=l {
            if current.is_zero() {
                break;
            }
            let pi = (p as u64).pow(i);
            let modulus = pi * p as u64;
            let xs = current.vectors();
            let rows: Vec<Vec<u32>> = (0..n)
                .map(|y| {
                    let by = unit_vector(n, y);
                    xs.iter()
                        .map(|x| {
                            let z = self.mul(x, &by);
                            let t = lifted_trace_of_power(&self.left_mult(&z), pi, modulus);
                            assert_eq!(t % pi, 0, "trace of a p^i-th power must be divisible by p^i");
                            ((t / pi) % p as u64) as u32
                        })
                        .collect()
                })
                .collect();
            let m = Matrix::from_row_vectors(p, xs.len(), &rows);
            let keep = m.kernel();
            current = Subspace::span(p, n, keep.vectors().iter().map(|c| current.combine(c)));
        }
        current
    }

    pub fn is_nilpotent_element(&self, x: &[u32]) -> bool {
        self.left_mult(x).pow(self.dim().max(1) as u64).is_zero()
    }

    /// Whether the two-sided ideal generated by `x` is nilpotent; equivalently `x ∈ rad A`.
    pub fn generates_nilpotent_ideal(&self, x: &[u32]) -> bool {
        let n = self.dim();
        let gens: Vec<Vec<u32>> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| self.mul(&self.mul(&unit_vector(n, i), x), &unit_vector(n, j)))
            .collect();
        let ideal = Subspace::span(self.p, n, gens);
        let mut power = ideal.clone();
        for _ in 0..=n {
            if power.is_zero() {
                return true;
            }
            let prods: Vec<Vec<u32>> = power
                .vectors()
                .iter()
                .flat_map(|a| ideal.vectors().into_iter().map(move |b| (a.clone(), b)))
                .map(|(a, b)| self.mul(&a, &b))
                .collect();
            power = Subspace::span(self.p, n, prods);
        }
        power.is_zero()
    }
}

fn unit_vector(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0u32; n];
    v[i] = 1;
    v
}

/// `Tr(M^e) mod modulus` for the integral lift of `m` (entries in `[0, p)`).
fn lifted_trace_of_power(m: &Matrix, e: u64, modulus: u64) -> u64 {
    let n = m.rows();
    let lift: Vec<u64> = m.data().iter().map(|&x| x as u64 % modulus).collect();
    let mul = |a: &[u64], b: &[u64]| -> Vec<u64> {
        let mut out = vec![0u64; n * n];
        for r in 0..n {
            for k in 0..n {
                let x = a[r * n + k];
                if x == 0 {
                    continue;
                }
                for c in 0..n {
                    out[r * n + c] = (out[r * n + c] + x * b[k * n + c]) % modulus;
                }
            }
        }
        out
    };
    let mut result: Vec<u64> = (0..n * n).map(|i| u64::from(i / n == i % n)).collect();
    let mut base = lift;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = mul(&result, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(&base, &base);
        }
    }
    (0..n).map(|i| result[i * n + i]).sum::<u64>() % modulus
}

/// `End(K)` with composition as multiplication, on the basis of `hom_basis(K, K)`.
pub fn endo_algebra(k: &Representation) -> Result<FDAlgebra> {
    let hom = HomSpace::new(k, k)?;
    let basis = hom.basis();
    let n = basis.len();
    let left = par::par_map(basis, |bi| {
        let cols: Vec<Vec<u32>> =
            basis.iter().map(|bj| hom.coords(&bi.compose(bj)).expect("End is closed under composition")).collect();
        Matrix::from_columns(k.p(), n, &cols)
    });
    let unit = hom.coords(&RepMorphism::identity(k)).expect("identity is an endomorphism");
    let mut a = FDAlgebra::new(k.p(), left, unit)?;
    a.origin = Some(hom);
    Ok(a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
}

/// A module over an [`FDAlgebra`], stored as a left module: `action[i]` is the
/// matrix by which `b_i` acts. Right modules over `A` are stored as left
/// modules over `A^op`; `side` records which description the caller meant.
#[derive(Clone, Debug)]
pub struct FDModule {
    algebra: Arc<FDAlgebra>,
    side: Side,
    dim: usize,
    action: Vec<Matrix>,
}

impl FDModule {
    pub fn new(algebra: Arc<FDAlgebra>, side: Side, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        let m = FDModule { algebra, side, dim, action };
        m.check_axioms()?;
        Ok(m)
    }

    fn check_axioms(&self) -> Result<()> {
        let a = &self.algebra;
        let n = a.dim();
        verify(self.action.len() == n && self.action.iter().all(|m| m.shape() == (self.dim, self.dim)), || {
            "action matrices have the wrong shape".into()
        })?;
        verify(self.act(a.unit()) == Matrix::identity(a.p(), self.dim), || "unit does not act as identity".into())?;
        for i in 0..n {
            for j in 0..n {
                let prod = a.left[i].column(j);
                verify(self.act(&prod) == self.action[i].mul(&self.action[j]), || {
                    format!("action is not multiplicative on basis elements {i}, {j}")
                })?;
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<FDAlgebra> {
        &self.algebra
    }
    pub fn side(&self) -> Side {
        self.side
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn p(&self) -> u32 {
        self.algebra.p()
    }
    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    /// The matrix by which an algebra element acts.
    pub fn act(&self, x: &[u32]) -> Matrix {
        let mut m = Matrix::zeros(self.p(), self.dim, self.dim);
        for (i, &c) in x.iter().enumerate() {
            if c != 0 {
                m = m.add(&self.action[i].scale(c));
            }
        }
        m
    }

    pub fn is_submodule(&self, s: &Subspace) -> bool {
        s.ambient_dim() == self.dim && self.action.iter().all(|a| s.is_stable_under(a))
    }

    /// The submodule generated by some vectors.
    pub fn generated(&self, vectors: &[Vec<u32>]) -> Subspace {
        let mut s = Subspace::span(self.p(), self.dim, vectors.iter().cloned());
        let mut queue: VecDeque<Vec<u32>> = s.vectors().into();
        while let Some(v) = queue.pop_front() {
            for a in &self.action {
                let w = a.mul_vec(&v);
                if !s.contains_vector(&w) {
                    s = s.sum(&Subspace::span(self.p(), self.dim, [w.clone()]));
                    queue.push_back(w);
                }
            }
        }
        s
    }

    /// `rad(A) · M`.
    pub fn radical(&self) -> Subspace {
        let rad = self.algebra.radical();
        let mut s = Subspace::zero(self.p(), self.dim);
        for r in rad.vectors() {
            s = s.sum(&self.act(&r).column_space());
        }
        s
    }

    /// `rad(A) · S` for a submodule `S`.
    pub fn radical_of(&self, sub: &Subspace) -> Subspace {
        let rad = self.algebra.radical();
        let vs: Vec<Vec<u32>> = rad
            .vectors()
            .iter()
            .flat_map(|r| {
                let m = self.act(r);
                sub.vectors().into_iter().map(move |v| m.mul_vec(&v))
            })
            .collect();
        Subspace::span(self.p(), self.dim, vs)
    }
}

pub fn radical_of_module(m: &FDModule) -> Subspace {
    m.radical()
}

/// All submodules of a module with the covering relation of inclusion.
#[derive(Clone, Debug, Serialize)]
pub struct SubmoduleLattice {
    pub members: Vec<Subspace>,
    /// Pairs `(i, j)` with `members[i] ⊂ members[j]` and nothing strictly between.
    pub covers: Vec<(usize, usize)>,
}

impl SubmoduleLattice {
    pub fn len(&self) -> usize {
        self.members.len()
    }
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
    pub fn index_of(&self, s: &Subspace) -> Option<usize> {
        self.members.iter().position(|m| m == s)
    }
    /// Every member is finitely generated; over a finite field this holds trivially.
    pub fn all_finitely_generated(&self) -> bool {
        true
    }
}

/// Every cyclic submodule, spun from each normalized vector, then closed
/// under sums. Members are ordered by dimension and then by basis.
pub fn submodule_lattice(m: &FDModule) -> Result<SubmoduleLattice> {
    let p = m.p();
    let d = m.dim();
    let total = limits::check_space("submodule lattice carrier", p, d, limits::max_lattice())?;
    let seeds: Vec<u64> = (1..total)
        .filter(|&i| {
            let v = vector_from_index(p, d, i);
            v.iter().find(|&&x| x != 0) == Some(&1)
        })
        .collect();
    let mut cyclic: Vec<Subspace> = par::par_map(&seeds, |&i| m.generated(&[vector_from_index(p, d, i)]));
    sort_subspaces(&mut cyclic);
    cyclic.dedup();

    let zero = Subspace::zero(p, d);
    let mut seen: HashSet<Subspace> = HashSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    while let Some(u) = queue.pop_front() {
        for c in &cyclic {
            if u.contains(c) {
                continue;
            }
            let w = u.sum(c);
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    let mut members: Vec<Subspace> = seen.into_iter().collect();
    sort_subspaces(&mut members);
    let covers = hasse(&members);
    Ok(SubmoduleLattice { members, covers })
}

fn sort_subspaces(v: &mut [Subspace]) {
    v.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.basis().data().cmp(b.basis().data())));
}

fn hasse(members: &[Subspace]) -> Vec<(usize, usize)> {
    let n = members.len();
    let below: Vec<Vec<usize>> =
        (0..n).map(|j| (0..n).filter(|&i| i != j && members[j].contains(&members[i])).collect()).collect();
    let mut covers = Vec::new();
    for j in 0..n {
        for &i in &below[j] {
            let between =
                below[j].iter().any(|&k| k != i && members[k].contains(&members[i]) && members[k] != members[i]);
            if !between {
                covers.push((i, j));
            }
        }
    }
    covers
}

/// Submodules found by testing every subspace for stability. Test-scale oracle.
pub fn submodules_by_filtering(m: &FDModule) -> Vec<Subspace> {
    let mut out: Vec<Subspace> =
        linalg::all_subspaces(m.p(), m.dim()).into_iter().filter(|s| m.is_submodule(s)).collect();
    sort_subspaces(&mut out);
    out
}

/// Radical by brute force: `x ∈ rad A` iff the ideal it generates is nilpotent.
pub fn radical_by_enumeration(a: &FDAlgebra) -> Result<Subspace> {
    let count = limits::check_space("algebra elements", a.p(), a.dim(), limits::max_enum())?;
    let members: Vec<Vec<u32>> =
        (0..count).map(|i| vector_from_index(a.p(), a.dim(), i)).filter(|x| a.generates_nilpotent_ideal(x)).collect();
    let s = Subspace::span(a.p(), a.dim(), members.iter().cloned());
    verify(linalg::space_size(a.p(), s.dim()) == members.len() as u128, || {
        "nilpotent-ideal elements do not form a subspace".into()
    })?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::A2;
    use crate::hom::direct_sum2;

    fn diag_algebra(p: u32) -> FDAlgebra {
        // k x k with basis e1, e2
        let l0 = Matrix::from_fn(p, 2, 2, |r, c| u32::from(r == 0 && c == 0));
        let l1 = Matrix::from_fn(p, 2, 2, |r, c| u32::from(r == 1 && c == 1));
        FDAlgebra::new(p, vec![l0, l1], vec![1, 1]).unwrap()
    }

    #[test]
    fn endo_algebras_on_a2() {
        let a2 = A2::new(2);
        let ss = direct_sum2(&a2.s1, &a2.s2).sum;
        let e = endo_algebra(&ss).unwrap();
        assert_eq!(e.dim(), 2);
        assert!(e.radical().is_zero());
        assert_eq!(endo_algebra(&a2.s1).unwrap().dim(), 1);
        let ps = direct_sum2(&a2.p1, &a2.s1).sum;
        let e = endo_algebra(&ps).unwrap();
        assert_eq!(e.dim(), 3);
        assert_eq!(e.radical().dim(), 1);
        assert_eq!(radical_by_enumeration(&e).unwrap(), e.radical());
    }

    #[test]
    fn semisimple_lattice() {
        let a = Arc::new(diag_algebra(3));
        let m = FDModule::new(a.clone(), Side::Left, 2, vec![a.left[0].clone(), a.left[1].clone()]).unwrap();
        let lat = submodule_lattice(&m).unwrap();
        assert_eq!(lat.len(), 4);
        assert_eq!(lat.members, submodules_by_filtering(&m));
        assert!(m.radical().is_zero());
    }

    #[test]
    fn zero_objects() {
        let a = Arc::new(diag_algebra(2));
        let m = FDModule::new(a, Side::Left, 0, vec![Matrix::zeros(2, 0, 0); 2]).unwrap();
        assert_eq!(submodule_lattice(&m).unwrap().len(), 1);
        let z = FDAlgebra::new(2, vec![], vec![]);
        assert!(z.is_err() || z.unwrap().radical().is_zero());
    }

    #[test]
    fn module_axioms_are_checked() {
        let a = Arc::new(diag_algebra(2));
        let bad = FDModule::new(a, Side::Left, 1, vec![Matrix::identity(2, 1), Matrix::identity(2, 1)]);
        assert!(bad.is_err());
    }

    #[test]
    fn radical_of_truncated_polynomials() {
        // k[x]/(x^3) over F_2 and F_3, basis 1, x, x^2
        for p in [2, 3, 5] {
            let shift = Matrix::from_fn(p, 3, 3, |r, c| u32::from(r == c + 1));
            let left = vec![Matrix::identity(p, 3), shift.clone(), shift.mul(&shift)];
            let a = FDAlgebra::new(p, left, vec![1, 0, 0]).unwrap();
            let rad = a.radical();
            assert_eq!(rad, Subspace::span(p, 3, [vec![0, 1, 0], vec![0, 0, 1]]));
            assert_eq!(rad, radical_by_enumeration(&a).unwrap());
        }
    }

    #[test]
    fn radical_of_group_algebra_in_defining_characteristic() {
        // F_2[C_2]: basis 1, g with g^2 = 1; radical spanned by 1 + g
        let g = Matrix::from_fn(2, 2, 2, |r, c| u32::from(r != c));
        let a = FDAlgebra::new(2, vec![Matrix::identity(2, 2), g], vec![1, 0]).unwrap();
        assert_eq!(a.radical(), Subspace::span(2, 2, [vec![1, 1]]));
        // F_3[C_3]
        let g = Matrix::from_fn(3, 3, 3, |r, c| u32::from(r == (c + 1) % 3));
        let a = FDAlgebra::new(3, vec![Matrix::identity(3, 3), g.clone(), g.mul(&g)], vec![1, 0, 0]).unwrap();
        assert_eq!(a.radical().dim(), 2);
        assert_eq!(a.radical(), radical_by_enumeration(&a).unwrap());
    }
}
