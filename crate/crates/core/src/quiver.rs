//! Finite acyclic quivers and their representations over F_p.
//!
//! A representation assigns a dimension to every vertex and, to every arrow
//! `a: i -> j`, a `dim_j x dim_i` matrix acting on column vectors. A morphism
//! `f: X -> Y` has one component per vertex and satisfies
//! `f_j * X_a = Y_a * f_i` for every arrow.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{check_prime, Matrix, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

/// A path `start -> ... -> end`; `arrows` lists arrow indices in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub start: usize,
    pub end: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { start: v, end: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// If `self` is `prefix` followed by `suffix`, returns `prefix`.
    pub fn strip_suffix(&self, suffix: &Path) -> Option<Path> {
        if suffix.end != self.end || suffix.len() > self.len() {
            return None;
        }
        let split = self.len() - suffix.len();
        if self.arrows[split..] != suffix.arrows[..] {
            return None;
        }
        Some(Path { start: self.start, end: suffix.start, arrows: self.arrows[..split].to_vec() })
    }

    /// If `self` is `prefix` followed by the remainder, returns the remainder.
    pub fn strip_prefix(&self, prefix: &Path) -> Option<Path> {
        if prefix.start != self.start || prefix.len() > self.len() {
            return None;
        }
        if self.arrows[..prefix.len()] != prefix.arrows[..] {
            return None;
        }
        Some(Path { start: prefix.end, end: self.end, arrows: self.arrows[prefix.len()..].to_vec() })
    }
}

impl Quiver {
    /// Builds a quiver from vertex labels and `(name, source, target)` triples.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut seen = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if seen.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate vertex `{v}`")));
            }
        }
        let mut names = HashMap::new();
        let mut list = Vec::with_capacity(arrows.len());
        for (name, s, t) in arrows {
            let name = name.as_ref().to_string();
            if names.insert(name.clone(), ()).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate arrow `{name}`")));
            }
            let source = *seen.get(s.as_ref()).ok_or_else(|| Error::UnknownVertex(s.as_ref().to_string()))?;
            let target = *seen.get(t.as_ref()).ok_or_else(|| Error::UnknownVertex(t.as_ref().to_string()))?;
            list.push(Arrow { name, source, target });
        }
        let q = Quiver { vertices, arrows: list };
        q.topological_order()?;
        Ok(q)
    }

    /// Linearly oriented `A_n`: `1 -> 2 -> ... -> n`, arrows `a1, a2, ...`.
    pub fn linear_a(n: usize) -> Self {
        let vs: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let arrows: Vec<(String, String, String)> =
            (1..n).map(|i| (format!("a{i}"), i.to_string(), (i + 1).to_string())).collect();
        Quiver::new(&vs, &arrows).expect("linear quiver is valid")
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.vertices.iter().position(|v| v == label).ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows.iter().position(|a| a.name == name).ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        ready.reverse();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop() {
            order.push(v);
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    ready.push(a.target);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&v| indeg[v] > 0).expect("some vertex remains");
            return Err(Error::Cyclic(self.vertices[stuck].clone()));
        }
        Ok(order)
    }

    /// Same vertices, every arrow reversed (names kept).
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }

    fn path_key(&self, p: &Path) -> (usize, Vec<String>) {
        (p.len(), p.arrows.iter().map(|&a| self.arrows[a].name.clone()).collect())
    }

    fn sort_paths(&self, paths: &mut [Path]) {
        paths.sort_by_cached_key(|p| self.path_key(p));
    }

    /// All paths starting at `i`, ordered by length and then arrow names.
    pub fn paths_from(&self, i: usize) -> Vec<Path> {
        let mut out = vec![Path::trivial(i)];
        let mut frontier = vec![Path::trivial(i)];
        while let Some(p) = frontier.pop() {
            for (ai, a) in self.arrows.iter().enumerate().filter(|(_, a)| a.source == p.end) {
                let mut arrows = p.arrows.clone();
                arrows.push(ai);
                let q = Path { start: i, end: a.target, arrows };
                out.push(q.clone());
                frontier.push(q);
            }
        }
        self.sort_paths(&mut out);
        out
    }

    /// All paths ending at `i`, ordered by length and then arrow names.
    pub fn paths_to(&self, i: usize) -> Vec<Path> {
        let mut out = vec![Path::trivial(i)];
        let mut frontier = vec![Path::trivial(i)];
        while let Some(p) = frontier.pop() {
            for (ai, a) in self.arrows.iter().enumerate().filter(|(_, a)| a.target == p.start) {
                let mut arrows = vec![ai];
                arrows.extend_from_slice(&p.arrows);
                let q = Path { start: a.source, end: i, arrows };
                out.push(q.clone());
                frontier.push(q);
            }
        }
        self.sort_paths(&mut out);
        out
    }

    /// Underlying undirected multigraph: adjacency counts.
    pub(crate) fn undirected_edges(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut adj = vec![vec![0usize; n]; n];
        for a in &self.arrows {
            adj[a.source][a.target] += 1;
            adj[a.target][a.source] += 1;
        }
        adj
    }
}

/// A finite-dimensional representation of an acyclic quiver over F_p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Representation {
    quiver: Arc<Quiver>,
    p: u32,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep(dims {:?}", self.dims)?;
        for (a, m) in self.quiver.arrows.iter().zip(&self.maps) {
            write!(f, ", {}: {:?}", a.name, m.row_vectors())?;
        }
        write!(f, ")")
    }
}

impl Representation {
    pub fn new(quiver: Arc<Quiver>, p: u32, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        check_prime(p)?;
        if dims.len() != quiver.num_vertices() {
            return Err(Error::InvalidRepresentation(format!(
                "{} dimensions given for {} vertices",
                dims.len(),
                quiver.num_vertices()
            )));
        }
        if maps.len() != quiver.arrows.len() {
            return Err(Error::InvalidRepresentation(format!(
                "{} maps given for {} arrows",
                maps.len(),
                quiver.arrows.len()
            )));
        }
        for (a, m) in quiver.arrows.iter().zip(&maps) {
            if m.p() != p {
                return Err(Error::FieldMismatch(m.p(), p));
            }
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::InvalidRepresentation(format!(
                    "map for arrow `{}` has shape {:?}, expected {:?}",
                    a.name,
                    m.shape(),
                    (dims[a.target], dims[a.source])
                )));
            }
        }
        Ok(Representation { quiver, p, dims, maps })
    }

    pub(crate) fn new_unchecked(quiver: Arc<Quiver>, p: u32, dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        debug_assert!(quiver.arrows.iter().zip(&maps).all(|(a, m)| m.shape() == (dims[a.target], dims[a.source])));
        Representation { quiver, p, dims, maps }
    }

    pub fn zero(quiver: Arc<Quiver>, p: u32) -> Self {
        let dims = vec![0; quiver.num_vertices()];
        let maps = quiver.arrows.iter().map(|_| Matrix::zeros(p, 0, 0)).collect();
        Representation { quiver, p, dims, maps }
    }

    pub fn simple(quiver: Arc<Quiver>, p: u32, v: usize) -> Self {
        let mut dims = vec![0; quiver.num_vertices()];
        dims[v] = 1;
        let maps = quiver.arrows.iter().map(|a| Matrix::zeros(p, dims[a.target], dims[a.source])).collect();
        Representation { quiver, p, dims, maps }
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }
    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }
    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }
    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn same_category(&self, other: &Representation) -> Result<()> {
        if self.p != other.p {
            return Err(Error::FieldMismatch(self.p, other.p));
        }
        if !Arc::ptr_eq(&self.quiver, &other.quiver) && self.quiver != other.quiver {
            return Err(Error::QuiverMismatch);
        }
        Ok(())
    }

    /// The linear map of a path, `X_{a_n} ... X_{a_1}`.
    pub fn path_map(&self, path: &Path) -> Matrix {
        let mut m = Matrix::identity(self.p, self.dims[path.start]);
        for &a in &path.arrows {
            m = self.maps[a].mul(&m);
        }
        m
    }

    /// `D X` as a representation of the opposite quiver.
    pub fn dual(&self) -> Representation {
        Representation {
            quiver: Arc::new(self.quiver.opposite()),
            p: self.p,
            dims: self.dims.clone(),
            maps: self.maps.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Dual of a representation of `Q^op`, landing in the given quiver.
    pub(crate) fn dual_into(&self, quiver: &Arc<Quiver>) -> Representation {
        debug_assert_eq!(**quiver, self.quiver.opposite());
        Representation {
            quiver: quiver.clone(),
            p: self.p,
            dims: self.dims.clone(),
            maps: self.maps.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Radical `Σ_a Im X_a`, vertex by vertex.
    pub fn radical_subspaces(&self) -> Vec<Subspace> {
        (0..self.quiver.num_vertices())
            .map(|v| {
                let mut s = Subspace::zero(self.p, self.dims[v]);
                for (ai, a) in self.quiver.arrows.iter().enumerate() {
                    if a.target == v {
                        s = s.sum(&self.maps[ai].column_space());
                    }
                }
                s
            })
            .collect()
    }

    /// Sub-representation on vertexwise subspaces, with its inclusion.
    pub fn subrepresentation(&self, subspaces: &[Subspace]) -> Result<(Representation, RepMorphism)> {
        let maps = self
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let (s, t) = (&subspaces[a.source], &subspaces[a.target]);
                let cols = (0..s.dim())
                    .map(|k| t.coords(&self.maps[ai].mul_vec(s.basis().row(k))).ok_or(Error::NotStable))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Matrix::from_columns(self.p, t.dim(), &cols))
            })
            .collect::<Result<Vec<_>>>()?;
        let dims = subspaces.iter().map(Subspace::dim).collect();
        let sub = Representation::new_unchecked(self.quiver.clone(), self.p, dims, maps);
        let comps = subspaces.iter().map(|s| s.basis().transpose()).collect();
        let incl = RepMorphism::new_unchecked(sub.clone(), self.clone(), comps);
        Ok((sub, incl))
    }

    /// Quotient by vertexwise subspaces, with its projection.
    pub fn quotient(&self, subspaces: &[Subspace]) -> Result<(Representation, RepMorphism)> {
        for (ai, a) in self.quiver.arrows.iter().enumerate() {
            if !subspaces[a.source]
                .vectors()
                .iter()
                .all(|v| subspaces[a.target].contains_vector(&self.maps[ai].mul_vec(v)))
            {
                return Err(Error::NotStable);
            }
        }
        let projs: Vec<Matrix> = subspaces
            .iter()
            .enumerate()
            .map(|(v, s)| {
                let n = self.dims[v];
                let cols: Vec<Vec<u32>> = (0..n)
                    .map(|c| {
                        let mut e = vec![0u32; n];
                        e[c] = 1;
                        s.quotient_coords(&e)
                    })
                    .collect();
                Matrix::from_columns(self.p, s.quotient_dim(), &cols)
            })
            .collect();
        let maps = self
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let src = &subspaces[a.source];
                let cols: Vec<Vec<u32>> = src
                    .quotient_reps()
                    .iter()
                    .map(|r| subspaces[a.target].quotient_coords(&self.maps[ai].mul_vec(r)))
                    .collect();
                Matrix::from_columns(self.p, subspaces[a.target].quotient_dim(), &cols)
            })
            .collect();
        let dims = subspaces.iter().map(Subspace::quotient_dim).collect();
        let q = Representation::new_unchecked(self.quiver.clone(), self.p, dims, maps);
        let proj = RepMorphism::new_unchecked(self.clone(), q.clone(), projs);
        Ok((q, proj))
    }
}

/// A morphism of representations, one matrix per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RepMorphism {
    source: Representation,
    target: Representation,
    comps: Vec<Matrix>,
}

impl fmt::Debug for RepMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mor({:?} -> {:?}: ", self.source.dims, self.target.dims)?;
        for (v, c) in self.comps.iter().enumerate() {
            write!(f, "[{}] {:?} ", v, c.row_vectors())?;
        }
        write!(f, ")")
    }
}

impl RepMorphism {
    /// Checked constructor: shapes and every commuting square.
    pub fn new(source: Representation, target: Representation, comps: Vec<Matrix>) -> Result<Self> {
        source.same_category(&target)?;
        let q = source.quiver.clone();
        if comps.len() != q.num_vertices() {
            return Err(Error::NotAMorphism(format!("{} components for {} vertices", comps.len(), q.num_vertices())));
        }
        for (v, c) in comps.iter().enumerate() {
            if c.shape() != (target.dims[v], source.dims[v]) {
                return Err(Error::NotAMorphism(format!(
                    "component at `{}` has shape {:?}, expected {:?}",
                    q.vertices[v],
                    c.shape(),
                    (target.dims[v], source.dims[v])
                )));
            }
        }
        let f = RepMorphism { source, target, comps };
        if let Some(a) = f.failing_square() {
            return Err(Error::NotAMorphism(format!("square for arrow `{}` does not commute", q.arrows[a].name)));
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: Representation, target: Representation, comps: Vec<Matrix>) -> Self {
        let f = RepMorphism { source, target, comps };
        debug_assert!(f.failing_square().is_none(), "constructed a non-morphism: {f:?}");
        f
    }

    fn failing_square(&self) -> Option<usize> {
        self.source.quiver.arrows.iter().enumerate().position(|(ai, a)| {
            self.comps[a.target].mul(&self.source.maps[ai]) != self.target.maps[ai].mul(&self.comps[a.source])
        })
    }

    pub fn is_valid(&self) -> bool {
        self.failing_square().is_none()
    }

    pub fn zero(source: &Representation, target: &Representation) -> Self {
        let comps = (0..source.quiver.num_vertices())
            .map(|v| Matrix::zeros(source.p, target.dims[v], source.dims[v]))
            .collect();
        RepMorphism { source: source.clone(), target: target.clone(), comps }
    }

    pub fn identity(x: &Representation) -> Self {
        let comps = x.dims.iter().map(|&d| Matrix::identity(x.p, d)).collect();
        RepMorphism { source: x.clone(), target: x.clone(), comps }
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }
    pub fn target(&self) -> &Representation {
        &self.target
    }
    pub fn component(&self, v: usize) -> &Matrix {
        &self.comps[v]
    }
    pub fn components(&self) -> &[Matrix] {
        &self.comps
    }
    pub fn p(&self) -> u32 {
        self.source.p
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &RepMorphism) -> RepMorphism {
        assert_eq!(other.target.dims, self.source.dims, "composition of incompatible morphisms");
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a.mul(b)).collect();
        RepMorphism { source: other.source.clone(), target: self.target.clone(), comps }
    }

    pub fn add(&self, other: &RepMorphism) -> RepMorphism {
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect();
        RepMorphism { source: self.source.clone(), target: self.target.clone(), comps }
    }

    pub fn sub(&self, other: &RepMorphism) -> RepMorphism {
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a.sub(b)).collect();
        RepMorphism { source: self.source.clone(), target: self.target.clone(), comps }
    }

    pub fn scale(&self, c: u32) -> RepMorphism {
        let comps = self.comps.iter().map(|a| a.scale(c)).collect();
        RepMorphism { source: self.source.clone(), target: self.target.clone(), comps }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Matrix::is_zero)
    }

    pub fn is_mono(&self) -> bool {
        self.comps.iter().all(|c| c.rank() == c.cols())
    }

    pub fn is_epi(&self) -> bool {
        self.comps.iter().all(|c| c.rank() == c.rows())
    }

    pub fn is_iso(&self) -> bool {
        self.comps.iter().all(Matrix::is_invertible)
    }

    pub fn inverse(&self) -> Option<RepMorphism> {
        let comps = self.comps.iter().map(Matrix::inverse).collect::<Option<Vec<_>>>()?;
        Some(RepMorphism { source: self.target.clone(), target: self.source.clone(), comps })
    }

    /// Concatenation of row-major components, vertex by vertex.
    pub fn vectorize(&self) -> Vec<u32> {
        self.comps.iter().flat_map(|c| c.data().iter().copied()).collect()
    }

    /// `D f: D Y -> D X` over the opposite quiver.
    pub fn dual(&self) -> RepMorphism {
        let s = self.target.dual();
        let t = self.source.dual().dual_quiver_like(&s);
        RepMorphism { source: s, target: t, comps: self.comps.iter().map(Matrix::transpose).collect() }
    }
}

impl Representation {
    fn dual_quiver_like(self, other: &Representation) -> Representation {
        Representation { quiver: other.quiver.clone(), ..self }
    }
}
