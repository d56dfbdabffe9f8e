//! Projectives, injectives and simples, presented through path bases.
//!
//! A [`FreeProjective`] is `⊕_k P(i_k)` with the basis of `P(i)_v` given by
//! the paths `i ⇝ v`. A morphism out of it is determined by the images of the
//! generators `e_{i_k}`, which is how every lifting problem here is solved.
//! The Nakayama functor sends it to `⊕_k I(i_k)` whose basis at `v` is the
//! set of paths `v ⇝ i_k`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{self, solve_linear, Matrix};
use crate::quiver::{Path, Quiver, RepMorphism, Representation};

#[derive(Clone, Debug)]
struct PathBasis {
    /// Per vertex: `(summand, path)` in basis order.
    at: Vec<Vec<(usize, Path)>>,
    index: HashMap<(usize, Vec<usize>), usize>,
}

impl PathBasis {
    fn build(quiver: &Quiver, tops: &[usize], injective: bool) -> Self {
        let nv = quiver.num_vertices();
        let mut at = vec![Vec::new(); nv];
        let mut index = HashMap::new();
        for (k, &i) in tops.iter().enumerate() {
            let paths = if injective { quiver.paths_to(i) } else { quiver.paths_from(i) };
            for path in paths {
                let v = if injective { path.start } else { path.end };
                index.insert((k, path.arrows.clone()), at[v].len());
                at[v].push((k, path));
            }
        }
        PathBasis { at, index }
    }

    fn position(&self, k: usize, path: &Path) -> usize {
        self.index[&(k, path.arrows.clone())]
    }
}

/// `⊕_k P(tops[k])`, with its Nakayama image `⊕_k I(tops[k])`.
#[derive(Clone, Debug)]
pub struct FreeProjective {
    tops: Vec<usize>,
    rep: Representation,
    basis: PathBasis,
    nu_rep: Representation,
    nu_basis: PathBasis,
}

impl FreeProjective {
    pub fn new(quiver: &Arc<Quiver>, p: u32, tops: Vec<usize>) -> Self {
        let nv = quiver.num_vertices();
        let basis = PathBasis::build(quiver, &tops, false);
        let nu_basis = PathBasis::build(quiver, &tops, true);
        let dims: Vec<usize> = basis.at.iter().map(Vec::len).collect();
        let nu_dims: Vec<usize> = nu_basis.at.iter().map(Vec::len).collect();
        let mut maps = Vec::with_capacity(quiver.arrows().len());
        let mut nu_maps = Vec::with_capacity(quiver.arrows().len());
        for (ai, a) in quiver.arrows().iter().enumerate() {
            let mut m = Matrix::zeros(p, dims[a.target], dims[a.source]);
            for (c, (k, path)) in basis.at[a.source].iter().enumerate() {
                let mut arrows = path.arrows.clone();
                arrows.push(ai);
                m.set(basis.index[&(*k, arrows)], c, 1);
            }
            maps.push(m);
            let mut m = Matrix::zeros(p, nu_dims[a.target], nu_dims[a.source]);
            let first = Path { start: a.source, end: a.target, arrows: vec![ai] };
            for (c, (k, path)) in nu_basis.at[a.source].iter().enumerate() {
                if let Some(rest) = path.strip_prefix(&first) {
                    m.set(nu_basis.position(*k, &rest), c, 1);
                }
            }
            nu_maps.push(m);
        }
        debug_assert_eq!(dims.len(), nv);
        let rep = Representation::new_unchecked(quiver.clone(), p, dims, maps);
        let nu_rep = Representation::new_unchecked(quiver.clone(), p, nu_dims, nu_maps);
        FreeProjective { tops, rep, basis, nu_rep, nu_basis }
    }

    pub fn tops(&self) -> &[usize] {
        &self.tops
    }
    pub fn rep(&self) -> &Representation {
        &self.rep
    }
    /// `ν` of this projective: `⊕_k I(tops[k])`.
    pub fn nakayama(&self) -> &Representation {
        &self.nu_rep
    }
    pub fn rank(&self) -> usize {
        self.tops.len()
    }

    /// Basis of `P_v` as `(summand, path)` pairs.
    pub fn basis_at(&self, v: usize) -> &[(usize, Path)] {
        &self.basis.at[v]
    }

    /// Matrix of `Hom(target, Z) -> Hom(self, Z)`, `g ↦ g ∘ f`, in generator
    /// coordinates, for `f: self -> target`.
    pub fn precomposition_matrix(&self, target: &FreeProjective, f: &RepMorphism, z: &Representation) -> Matrix {
        let p = z.p();
        let row_offsets: Vec<usize> = offsets(self.tops.iter().map(|&v| z.dim(v)));
        let col_offsets: Vec<usize> = offsets(target.tops.iter().map(|&v| z.dim(v)));
        let mut m = Matrix::zeros(p, self.hom_dim(z), target.hom_dim(z));
        for (k, image) in self.generator_images(f).iter().enumerate() {
            let t = self.tops[k];
            for (pos, &c) in image.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let (l, q) = &target.basis.at[t][pos];
                let block = z.path_map(q).scale(c);
                for r in 0..block.rows() {
                    for cc in 0..block.cols() {
                        let (rr, col) = (row_offsets[k] + r, col_offsets[*l] + cc);
                        m.set(rr, col, linalg::add(p, m.get(rr, col), block.get(r, cc)));
                    }
                }
            }
        }
        m
    }

    /// Generator coordinates of `u ∘ h` from those of `h: P -> A`, for `u: A -> B`.
    pub fn postcompose_coords(&self, u: &RepMorphism, h: &[u32]) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.hom_dim(u.target()));
        let mut off = 0;
        for &t in &self.tops {
            let d = u.source().dim(t);
            out.extend(u.component(t).mul_vec(&h[off..off + d]));
            off += d;
        }
        out
    }

    /// Position of generator `k` inside the basis of vertex `tops[k]`.
    pub fn generator_position(&self, k: usize) -> usize {
        self.basis.position(k, &Path::trivial(self.tops[k]))
    }

    /// Images of the generators under `f: P -> X`.
    pub fn generator_images(&self, f: &RepMorphism) -> Vec<Vec<u32>> {
        (0..self.rank()).map(|k| f.component(self.tops[k]).column(self.generator_position(k))).collect()
    }

    /// The morphism `P -> X` sending generator `k` to `images[k] ∈ X_{tops[k]}`.
    pub fn morphism_from_images(&self, x: &Representation, images: &[Vec<u32>]) -> RepMorphism {
        assert_eq!(images.len(), self.rank());
        let p = x.p();
        let comps = (0..x.quiver().num_vertices())
            .map(|v| {
                let cols: Vec<Vec<u32>> =
                    self.basis.at[v].iter().map(|(k, path)| x.path_map(path).mul_vec(&images[*k])).collect();
                Matrix::from_columns(p, x.dim(v), &cols)
            })
            .collect();
        RepMorphism::new_unchecked(self.rep.clone(), x.clone(), comps)
    }

    /// Dimension of `Hom(P, X) ≅ ⊕_k X_{tops[k]}`.
    pub fn hom_dim(&self, x: &Representation) -> usize {
        self.tops.iter().map(|&v| x.dim(v)).sum()
    }

    /// Generator coordinates of `f: P -> X`, concatenated.
    pub fn hom_coords(&self, f: &RepMorphism) -> Vec<u32> {
        self.generator_images(f).concat()
    }

    pub fn hom_from_coords(&self, x: &Representation, coords: &[u32]) -> RepMorphism {
        let mut images = Vec::with_capacity(self.rank());
        let mut off = 0;
        for &v in &self.tops {
            images.push(coords[off..off + x.dim(v)].to_vec());
            off += x.dim(v);
        }
        self.morphism_from_images(x, &images)
    }

    /// A lift `g: P -> X` of `f: P -> B` through `epi: X -> B`, generator by generator.
    pub fn lift(&self, f: &RepMorphism, epi: &RepMorphism) -> Result<Option<RepMorphism>> {
        let mut images = Vec::with_capacity(self.rank());
        for (k, y) in self.generator_images(f).into_iter().enumerate() {
            match solve_linear(epi.component(self.tops[k]), &y)? {
                Some(x) => images.push(x),
                None => return Ok(None),
            }
        }
        Ok(Some(self.morphism_from_images(epi.source(), &images)))
    }

    /// `ν f: ν P -> ν P'` for `f: P -> P'`.
    pub fn nakayama_morphism(&self, target: &FreeProjective, f: &RepMorphism) -> RepMorphism {
        let p = self.rep.p();
        let q = self.rep.quiver();
        let mut comps: Vec<Matrix> =
            (0..q.num_vertices()).map(|v| Matrix::zeros(p, target.nu_rep.dim(v), self.nu_rep.dim(v))).collect();
        for (k, image) in self.generator_images(f).iter().enumerate() {
            let top = self.tops[k];
            for (pos, &c) in image.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let (l, qpath) = &target.basis.at[top][pos];
                for v in 0..q.num_vertices() {
                    for (col, (kk, r)) in self.nu_basis.at[v].iter().enumerate() {
                        if *kk != k {
                            continue;
                        }
                        if let Some(s) = r.strip_suffix(qpath) {
                            let row = target.nu_basis.position(*l, &s);
                            let m = &mut comps[v];
                            m.set(row, col, linalg::add(p, m.get(row, col), c));
                        }
                    }
                }
            }
        }
        RepMorphism::new_unchecked(self.nu_rep.clone(), target.nu_rep.clone(), comps)
    }

    /// The trace functional on `Hom(P, ν P) ≅ D End(P)`: the sum over the
    /// generators of the coefficient of the trivial path in `φ(e_k)`'s own block.
    pub fn trace(&self, phi: &RepMorphism) -> u32 {
        let p = self.rep.p();
        (0..self.rank()).fold(0, |acc, k| {
            let top = self.tops[k];
            let row = self.nu_basis.position(k, &Path::trivial(top));
            linalg::add(p, acc, phi.component(top).get(row, self.generator_position(k)))
        })
    }
}

fn offsets(sizes: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut acc = 0;
    sizes
        .map(|s| {
            let o = acc;
            acc += s;
            o
        })
        .collect()
}

/// `P(i)`, `I(i)` and `S(i)`.
pub fn standard_objects(
    quiver: &Arc<Quiver>,
    p: u32,
    vertex: &str,
) -> Result<(Representation, Representation, Representation)> {
    let i = quiver.vertex_index(vertex)?;
    let f = FreeProjective::new(quiver, p, vec![i]);
    Ok((f.rep.clone(), f.nu_rep.clone(), Representation::simple(quiver.clone(), p, i)))
}

pub fn projective(quiver: &Arc<Quiver>, p: u32, i: usize) -> Representation {
    FreeProjective::new(quiver, p, vec![i]).rep
}

pub fn injective(quiver: &Arc<Quiver>, p: u32, i: usize) -> Representation {
    FreeProjective::new(quiver, p, vec![i]).nu_rep
}

/// A projective cover `π: P -> X`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub free: FreeProjective,
    pub map: RepMorphism,
}

/// `P = ⊕_i P(i)^{dim top(X)_i}`, generators sent to the standard lifts of a
/// basis of `top X = X / rad X`.
pub fn projective_cover(x: &Representation) -> ProjectiveCover {
    let rad = x.radical_subspaces();
    let mut tops = Vec::new();
    let mut images = Vec::new();
    for (v, r) in rad.iter().enumerate() {
        for rep in r.quotient_reps() {
            tops.push(v);
            images.push(rep);
        }
    }
    let free = FreeProjective::new(x.quiver(), x.p(), tops);
    let map = free.morphism_from_images(x, &images);
    debug_assert!(map.is_epi());
    ProjectiveCover { free, map }
}

/// Whether `X` is projective: its projective cover is injective.
pub fn is_projective(x: &Representation) -> bool {
    projective_cover(x).free.rep.total_dim() == x.total_dim()
}

/// Whether `X` is injective, checked on the opposite quiver.
pub fn is_injective(x: &Representation) -> bool {
    is_projective(&x.dual())
}

/// The projective `P` and an isomorphism `P -> X`, failing if `X` is not projective.
pub fn as_free(x: &Representation) -> Result<ProjectiveCover> {
    let c = projective_cover(x);
    if c.free.rep.total_dim() != x.total_dim() {
        return Err(Error::NotProjective);
    }
    Ok(c)
}
