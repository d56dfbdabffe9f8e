//! Morphism spaces, factorizations and direct sums.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{self, solve_linear, Matrix, Subspace};
use crate::quiver::{Quiver, RepMorphism, Representation};

/// `Hom(X, Y)` with a fixed basis.
///
/// Morphisms are coordinatized by their vectorization (row-major components,
/// vertex by vertex); `space` is the RREF span of the basis vectors, so the
/// basis order is the row order of that canonical form.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: Representation,
    target: Representation,
    basis: Vec<RepMorphism>,
    space: Subspace,
}

impl HomSpace {
    pub fn new(x: &Representation, y: &Representation) -> Result<Self> {
        x.same_category(y)?;
        let q = x.quiver();
        let p = x.p();
        let nv = q.num_vertices();
        let mut offsets = Vec::with_capacity(nv + 1);
        let mut total = 0;
        for v in 0..nv {
            offsets.push(total);
            total += x.dim(v) * y.dim(v);
        }
        let n_eq: usize = q.arrows().iter().map(|a| y.dim(a.target) * x.dim(a.source)).sum();
        let mut sys = Matrix::zeros(p, n_eq, total);
        let mut row = 0;
        for (ai, a) in q.arrows().iter().enumerate() {
            let (i, j) = (a.source, a.target);
            let (xa, ya) = (x.map(ai), y.map(ai));
            // (F_j X_a - Y_a F_i)[r][c] = 0
            for r in 0..y.dim(j) {
                for c in 0..x.dim(i) {
                    for m in 0..x.dim(j) {
                        let v = xa.get(m, c);
                        if v != 0 {
                            let idx = offsets[j] + r * x.dim(j) + m;
                            sys.set(row, idx, linalg::add(p, sys.get(row, idx), v));
                        }
                    }
                    for m in 0..y.dim(i) {
                        let v = ya.get(r, m);
                        if v != 0 {
                            let idx = offsets[i] + m * x.dim(i) + c;
                            sys.set(row, idx, linalg::sub(p, sys.get(row, idx), v));
                        }
                    }
                    row += 1;
                }
            }
        }
        let space = sys.kernel();
        let basis = space.vectors().iter().map(|v| devectorize(x, y, &offsets, v)).collect();
        Ok(HomSpace { source: x.clone(), target: y.clone(), basis, space })
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }
    pub fn target(&self) -> &Representation {
        &self.target
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[RepMorphism] {
        &self.basis
    }
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// Coordinates of `f` in the basis; `None` if the components do not form
    /// a morphism between the two objects.
    pub fn coords(&self, f: &RepMorphism) -> Option<Vec<u32>> {
        if f.source().dims() != self.source.dims() || f.target().dims() != self.target.dims() {
            return None;
        }
        self.space.coords(&f.vectorize())
    }

    pub fn element(&self, coords: &[u32]) -> RepMorphism {
        assert_eq!(coords.len(), self.dim());
        let mut f = RepMorphism::zero(&self.source, &self.target);
        for (c, b) in coords.iter().zip(&self.basis) {
            if *c != 0 {
                f = f.add(&b.scale(*c));
            }
        }
        f
    }

    /// The subspace (in this space's coordinates) spanned by some morphisms.
    pub fn span_of<'a>(&self, fs: impl IntoIterator<Item = &'a RepMorphism>) -> Subspace {
        let vs: Vec<Vec<u32>> =
            fs.into_iter().map(|f| self.coords(f).expect("morphism lies in this Hom space")).collect();
        Subspace::span(self.source.p(), self.dim(), vs)
    }
}

fn devectorize(x: &Representation, y: &Representation, offsets: &[usize], v: &[u32]) -> RepMorphism {
    let comps = (0..x.quiver().num_vertices())
        .map(|u| {
            let (r, c) = (y.dim(u), x.dim(u));
            Matrix::from_vec(x.p(), r, c, v[offsets[u]..offsets[u] + r * c].to_vec())
        })
        .collect();
    RepMorphism::new_unchecked(x.clone(), y.clone(), comps)
}

/// A basis of `Hom(X, Y)`.
pub fn hom_basis(x: &Representation, y: &Representation) -> Result<Vec<RepMorphism>> {
    Ok(HomSpace::new(x, y)?.basis)
}

/// Some `h: X -> Y` with `g ∘ h = f`, where `f: X -> Z` and `g: Y -> Z`.
pub fn factor_through(f: &RepMorphism, g: &RepMorphism) -> Result<Option<RepMorphism>> {
    if f.target().dims() != g.target().dims() {
        return Err(Error::DimensionMismatch("factor_through: targets differ".into()));
    }
    let hom = HomSpace::new(f.source(), g.source())?;
    let cols: Vec<Vec<u32>> = hom.basis().iter().map(|h| g.compose(h).vectorize()).collect();
    let a = Matrix::from_columns(f.p(), f.vectorize().len(), &cols);
    Ok(solve_linear(&a, &f.vectorize())?.map(|c| hom.element(&c)))
}

/// Some `h: Y -> Z` with `h ∘ g = f`, where `f: X -> Z` and `g: X -> Y`.
pub fn factor_through_left(f: &RepMorphism, g: &RepMorphism) -> Result<Option<RepMorphism>> {
    if f.source().dims() != g.source().dims() {
        return Err(Error::DimensionMismatch("factor_through_left: sources differ".into()));
    }
    let hom = HomSpace::new(g.target(), f.target())?;
    let cols: Vec<Vec<u32>> = hom.basis().iter().map(|h| h.compose(g).vectorize()).collect();
    let a = Matrix::from_columns(f.p(), f.vectorize().len(), &cols);
    Ok(solve_linear(&a, &f.vectorize())?.map(|c| hom.element(&c)))
}

/// `Im Hom(C, α) ⊆ Hom(C, Y)` for `α: X -> Y`, in the coordinates of `hom_cy`.
pub fn postcomposition_image(hom_cy: &HomSpace, alpha: &RepMorphism) -> Result<Subspace> {
    let hom_cx = HomSpace::new(hom_cy.source(), alpha.source())?;
    let images: Vec<RepMorphism> = hom_cx.basis().iter().map(|h| alpha.compose(h)).collect();
    Ok(hom_cy.span_of(&images))
}

/// Kernel, image and cokernel of a morphism.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub kernel: Representation,
    pub kernel_incl: RepMorphism,
    pub image: Representation,
    pub image_incl: RepMorphism,
    /// The corestriction `X -> Im f`.
    pub coimage: RepMorphism,
    pub cokernel: Representation,
    pub cokernel_proj: RepMorphism,
}

pub fn kernel(f: &RepMorphism) -> (Representation, RepMorphism) {
    let subs: Vec<Subspace> = f.components().iter().map(Matrix::kernel).collect();
    f.source().subrepresentation(&subs).expect("kernels are stable")
}

pub fn morphism_factorization(f: &RepMorphism) -> Result<Factorization> {
    if !f.is_valid() {
        return Err(Error::NotAMorphism("input does not commute with the arrow maps".into()));
    }
    let (kernel, kernel_incl) = kernel(f);
    let images: Vec<Subspace> = f.components().iter().map(Matrix::column_space).collect();
    let (image, image_incl) = f.target().subrepresentation(&images)?;
    let coimage_comps = images
        .iter()
        .zip(f.components())
        .map(|(s, c)| {
            let cols: Vec<Vec<u32>> =
                (0..c.cols()).map(|k| s.coords(&c.column(k)).expect("column lies in the image")).collect();
            Matrix::from_columns(f.p(), s.dim(), &cols)
        })
        .collect();
    let coimage = RepMorphism::new_unchecked(f.source().clone(), image.clone(), coimage_comps);
    crate::error::verify(image_incl.compose(&coimage) == *f, || "f = incl ∘ coimage".into())?;
    let (cokernel, cokernel_proj) = f.target().quotient(&images)?;
    Ok(Factorization { kernel, kernel_incl, image, image_incl, coimage, cokernel, cokernel_proj })
}

/// The map `A/S -> B` induced by `f: A -> B` vanishing on the vertexwise
/// subspaces `subs`, where `quotient` was built by `A.quotient(subs)`.
pub fn descend(f: &RepMorphism, subs: &[Subspace], quotient: &Representation) -> RepMorphism {
    let comps = subs
        .iter()
        .enumerate()
        .map(|(v, s)| {
            let cols: Vec<Vec<u32>> = s.quotient_reps().iter().map(|r| f.component(v).mul_vec(r)).collect();
            Matrix::from_columns(f.p(), f.target().dim(v), &cols)
        })
        .collect();
    RepMorphism::new_unchecked(quotient.clone(), f.target().clone(), comps)
}

/// The map `A -> S` through which `f: A -> B` factors, where `sub` was built
/// by `B.subrepresentation(subs)` and `f` lands in those subspaces.
pub fn corestrict(f: &RepMorphism, subs: &[Subspace], sub: &Representation) -> Result<RepMorphism> {
    let comps = subs
        .iter()
        .enumerate()
        .map(|(v, s)| {
            let c = f.component(v);
            let cols = (0..c.cols())
                .map(|k| {
                    s.coords(&c.column(k)).ok_or_else(|| Error::NoLift("map does not land in the subobject".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_columns(f.p(), s.dim(), &cols))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RepMorphism::new_unchecked(f.source().clone(), sub.clone(), comps))
}

/// A direct sum with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub sum: Representation,
    pub injections: Vec<RepMorphism>,
    pub projections: Vec<RepMorphism>,
}

impl DirectSum {
    /// The map `⊕ X_k -> T` restricting to `fs[k]` on each summand.
    pub fn copair(&self, target: &Representation, fs: &[&RepMorphism]) -> RepMorphism {
        let mut out = RepMorphism::zero(&self.sum, target);
        for (f, pr) in fs.iter().zip(&self.projections) {
            out = out.add(&f.compose(pr));
        }
        out
    }

    /// The map `S -> ⊕ X_k` with components `fs[k]`.
    pub fn pair(&self, source: &Representation, fs: &[&RepMorphism]) -> RepMorphism {
        let mut out = RepMorphism::zero(source, &self.sum);
        for (f, inj) in fs.iter().zip(&self.injections) {
            out = out.add(&inj.compose(f));
        }
        out
    }
}

pub fn direct_sum(quiver: &Arc<Quiver>, p: u32, parts: &[Representation]) -> DirectSum {
    let nv = quiver.num_vertices();
    let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|x| x.dim(v)).sum()).collect();
    let maps = (0..quiver.arrows().len())
        .map(|a| {
            let blocks: Vec<&Matrix> = parts.iter().map(|x| x.map(a)).collect();
            Matrix::block_diag(p, &blocks)
        })
        .collect();
    let sum = Representation::new_unchecked(quiver.clone(), p, dims.clone(), maps);
    let mut offsets = vec![0usize; nv];
    let mut injections = Vec::with_capacity(parts.len());
    let mut projections = Vec::with_capacity(parts.len());
    for x in parts {
        let mut inj = Vec::with_capacity(nv);
        let mut proj = Vec::with_capacity(nv);
        for v in 0..nv {
            let mut i = Matrix::zeros(p, dims[v], x.dim(v));
            let mut pr = Matrix::zeros(p, x.dim(v), dims[v]);
            for k in 0..x.dim(v) {
                i.set(offsets[v] + k, k, 1);
                pr.set(k, offsets[v] + k, 1);
            }
            inj.push(i);
            proj.push(pr);
            offsets[v] += x.dim(v);
        }
        injections.push(RepMorphism::new_unchecked(x.clone(), sum.clone(), inj));
        projections.push(RepMorphism::new_unchecked(sum.clone(), x.clone(), proj));
    }
    DirectSum { sum, injections, projections }
}

/// `X ⊕ Y` for two objects of the same category.
pub fn direct_sum2(x: &Representation, y: &Representation) -> DirectSum {
    direct_sum(x.quiver(), x.p(), &[x.clone(), y.clone()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::A2;

    #[test]
    fn a2_hom_dimensions() {
        let a2 = A2::new(2);
        assert_eq!(hom_basis(&a2.p1, &a2.s1).unwrap().len(), 1);
        assert!(hom_basis(&a2.s1, &a2.p1).unwrap().is_empty());
        assert_eq!(hom_basis(&a2.p1, &a2.p1).unwrap().len(), 1);
        let id = RepMorphism::identity(&a2.p1);
        let h = HomSpace::new(&a2.p1, &a2.p1).unwrap();
        assert_eq!(h.coords(&id), Some(vec![1]));
    }

    #[test]
    fn factorization_of_identity_zero_and_projection() {
        let a2 = A2::new(2);
        let id = RepMorphism::identity(&a2.p1);
        let f = morphism_factorization(&id).unwrap();
        assert!(f.kernel.is_zero() && f.cokernel.is_zero());
        assert_eq!(f.image.dims(), a2.p1.dims());

        let z = RepMorphism::zero(&a2.p1, &a2.s1);
        let f = morphism_factorization(&z).unwrap();
        assert_eq!(f.kernel.dims(), a2.p1.dims());
        assert_eq!(f.cokernel.dims(), a2.s1.dims());

        let pi = hom_basis(&a2.p1, &a2.s1).unwrap().remove(0);
        let f = morphism_factorization(&pi).unwrap();
        assert_eq!(f.kernel, a2.s2);
    }

    #[test]
    fn direct_sums() {
        let a2 = A2::new(2);
        let q = a2.quiver.clone();
        assert!(direct_sum(&q, 2, &[]).sum.is_zero());
        let s = direct_sum2(&a2.s1, &a2.s2);
        assert_eq!(s.sum.dims(), &[1, 1]);
        assert!(s.sum.map(0).is_zero());
        let pp = direct_sum2(&a2.p1, &a2.p1);
        assert_eq!(pp.sum.dims(), &[2, 2]);
        assert_eq!(*pp.sum.map(0), Matrix::identity(2, 2));
        let total = pp.injections[0].compose(&pp.projections[0]).add(&pp.injections[1].compose(&pp.projections[1]));
        assert_eq!(total, RepMorphism::identity(&pp.sum));
    }

    #[test]
    fn factor_through_projection() {
        let a2 = A2::new(2);
        let pi = hom_basis(&a2.p1, &a2.s1).unwrap().remove(0);
        let id = RepMorphism::identity(&a2.s1);
        assert!(factor_through(&id, &pi).unwrap().is_none());
        let h = factor_through(&pi, &id).unwrap().unwrap();
        assert_eq!(id.compose(&h), pi);
        assert_eq!(factor_through_left(&pi, &id.compose(&pi)).unwrap().unwrap(), id);
    }
}
