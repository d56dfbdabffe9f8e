//! `Ext¹` through minimal projective presentations.
//!
//! For `0 -> P1 -> P0 -> Y -> 0`, `Ext¹(Y, Z)` is the cokernel of
//! `Hom(P0, Z) -> Hom(P1, Z)`. Both Hom spaces are taken in generator
//! coordinates (`Hom(⊕ P(i_k), Z) ≅ ⊕ Z_{i_k}`), so a class is represented by
//! a morphism `h: P1 -> Z` and the basis of the cokernel consists of unit
//! vectors at the non-pivot positions of the image.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{verify, Error, Result};
use crate::hom::{corestrict, descend, direct_sum2, kernel, HomSpace};
use crate::linalg::{Matrix, Subspace};
use crate::projective::{projective_cover, FreeProjective};
use crate::quiver::{RepMorphism, Representation};

/// `0 -> P1 -> P0 -> Y -> 0` with `P0 -> Y` a projective cover.
#[derive(Clone, Debug)]
pub struct ProjPresentation {
    pub y: Representation,
    pub p1: FreeProjective,
    pub p0: FreeProjective,
    /// `P1 -> P0`
    pub map1: RepMorphism,
    /// `P0 -> Y`
    pub map0: RepMorphism,
}

pub fn min_proj_presentation(y: &Representation) -> Result<ProjPresentation> {
    let cover = projective_cover(y);
    let (k, incl) = kernel(&cover.map);
    let kcover = projective_cover(&k);
    verify(kcover.map.is_iso(), || "kernel of a projective cover over a path algebra must be projective".into())?;
    let map1 = incl.compose(&kcover.map);
    Ok(ProjPresentation { y: y.clone(), p1: kcover.free, p0: cover.free, map1, map0: cover.map })
}

impl ProjPresentation {
    /// Lifts `t ∘ map0: P0 -> B` through the epimorphism `alpha: X -> B`,
    /// then restricts along `map1`: returns `(t0, t1)` with `alpha t0 = t map0`
    /// and `iota t1 = t0 map1`, where `iota` is the kernel of `alpha`.
    fn lift_to_kernel(
        &self,
        t: &RepMorphism,
        alpha: &RepMorphism,
        iota: &RepMorphism,
    ) -> Result<(RepMorphism, RepMorphism)> {
        let target = t.compose(&self.map0);
        let t0 = self
            .p0
            .lift(&target, alpha)?
            .ok_or_else(|| Error::NoLift("sequence is not exact at its middle term".into()))?;
        let w = t0.compose(&self.map1);
        let t1 = self
            .p1
            .lift(&w, iota)?
            .ok_or_else(|| Error::NoLift("restricted lift does not land in the kernel".into()))?;
        Ok((t0, t1))
    }

    fn lift_to_kernel_of(&self, f: &RepMorphism, src: &ProjPresentation) -> Result<(RepMorphism, RepMorphism)> {
        let f0 = src
            .p0
            .lift(&f.compose(&src.map0), &self.map0)?
            .ok_or_else(|| Error::NoLift("projective cover is not epi".into()))?;
        let f1 = src
            .p1
            .lift(&f0.compose(&src.map1), &self.map1)?
            .ok_or_else(|| Error::NoLift("presentation is not exact".into()))?;
        Ok((f0, f1))
    }
}

/// A morphism of presentations `(f0, f1)` over `f: X -> X'`:
/// `map0' f0 = f map0` and `map1' f1 = f0 map1`.
pub fn lift_to_presentations(
    f: &RepMorphism,
    src: &ProjPresentation,
    dst: &ProjPresentation,
) -> Result<(RepMorphism, RepMorphism)> {
    dst.lift_to_kernel_of(f, src)
}

/// `Ext¹(Y, Z)` with a chosen basis.
#[derive(Clone, Debug)]
pub struct ExtSpace {
    pres: Arc<ProjPresentation>,
    z: Representation,
    /// Image of `Hom(P0, Z)` inside `Hom(P1, Z)`, generator coordinates.
    image: Subspace,
    /// `Hom(P0, Z) -> Hom(P1, Z)` in generator coordinates.
    restriction: Matrix,
}

pub fn ext_space(y: &Representation, z: &Representation) -> Result<ExtSpace> {
    y.same_category(z)?;
    Ok(ExtSpace::with_presentation(Arc::new(min_proj_presentation(y)?), z))
}

impl ExtSpace {
    pub fn with_presentation(pres: Arc<ProjPresentation>, z: &Representation) -> Self {
        let restriction = pres.p1.precomposition_matrix(&pres.p0, &pres.map1, z);
        let image = restriction.column_space();
        ExtSpace { pres, z: z.clone(), image, restriction }
    }

    pub fn y(&self) -> &Representation {
        &self.pres.y
    }
    pub fn z(&self) -> &Representation {
        &self.z
    }
    pub fn presentation(&self) -> &Arc<ProjPresentation> {
        &self.pres
    }
    pub fn dim(&self) -> usize {
        self.image.quotient_dim()
    }
    pub fn p(&self) -> u32 {
        self.z.p()
    }

    /// `dim Hom(Y, Z)`, read off as the kernel of the restriction map.
    pub fn hom_dim(&self) -> usize {
        self.restriction.cols() - self.restriction.rank()
    }

    /// Generator coordinates of the representative of a class.
    pub fn representative_coords(&self, coords: &[u32]) -> Vec<u32> {
        self.image.quotient_lift(coords)
    }

    /// The representative `P1 -> Z` of a class.
    pub fn representative(&self, coords: &[u32]) -> RepMorphism {
        self.pres.p1.hom_from_coords(&self.z, &self.representative_coords(coords))
    }

    /// Class of a morphism `P1 -> Z` given in generator coordinates.
    pub fn class_of_coords(&self, h: &[u32]) -> Vec<u32> {
        self.image.quotient_coords(h)
    }

    pub fn class_of(&self, h: &RepMorphism) -> Vec<u32> {
        self.class_of_coords(&self.pres.p1.hom_coords(h))
    }

    pub fn class(&self, coords: Vec<u32>) -> ExtClass {
        assert_eq!(coords.len(), self.dim());
        ExtClass { space: self.clone(), coords }
    }

    /// The class `[u.ξ] ∈ Ext¹(Y, Z)` for `[ξ] ∈ Ext¹(Y, K)` and `u: K -> Z`.
    pub fn pushout_class(&self, source: &ExtSpace, coords: &[u32], u: &RepMorphism) -> Vec<u32> {
        let h = source.representative_coords(coords);
        self.class_of_coords(&self.pres.p1.postcompose_coords(u, &h))
    }

    /// The class `[ξ.t] ∈ Ext¹(T, K)` where `self = Ext¹(T, K)`, `ξ` ends at
    /// `Y` with kernel `K`, and `t: T -> Y`.
    pub fn pullback_class(&self, seq: &ShortExactSeq, t: &RepMorphism) -> Result<Vec<u32>> {
        if seq.kernel != self.z || t.source() != self.y() || t.target() != &seq.cokernel {
            return Err(Error::SequenceMismatch("pullback_class: objects do not match".into()));
        }
        let (_, t1) = self.pres.lift_to_kernel(t, &seq.alpha, &seq.iota)?;
        Ok(self.class_of(&t1))
    }

    /// Yoneda realization: the pushout of the presentation along the representative.
    pub fn realize(&self, coords: &[u32]) -> ShortExactSeq {
        let pres = &self.pres;
        let h = self.representative(coords);
        let ds = direct_sum2(pres.p0.rep(), &self.z);
        let j = ds.pair(pres.p1.rep(), &[&pres.map1, &h.scale(self.p() - 1)]);
        let images: Vec<Subspace> = j.components().iter().map(Matrix::column_space).collect();
        let (middle, proj) = ds.sum.quotient(&images).expect("image of a morphism is stable");
        let iota = proj.compose(&ds.injections[1]);
        let zero = RepMorphism::zero(&self.z, &pres.y);
        let alpha = descend(&ds.copair(&pres.y, &[&pres.map0, &zero]), &images, &middle);
        let seq = ShortExactSeq { kernel: self.z.clone(), middle, cokernel: pres.y.clone(), iota, alpha };
        debug_assert!(seq.check().is_ok());
        seq
    }

    /// Inverse Yoneda direction. The sequence must end at exactly this `Y`
    /// and start at exactly this `Z`.
    pub fn ses_to_class(&self, seq: &ShortExactSeq) -> Result<Vec<u32>> {
        if seq.cokernel != self.pres.y {
            return Err(Error::SequenceMismatch("cokernel is not the Y of this Ext space".into()));
        }
        if seq.kernel != self.z {
            return Err(Error::SequenceMismatch("kernel is not the Z of this Ext space".into()));
        }
        let id = RepMorphism::identity(&self.pres.y);
        let (_, h) = self.pres.lift_to_kernel(&id, &seq.alpha, &seq.iota)?;
        Ok(self.class_of(&h))
    }
}

/// An element of an [`ExtSpace`].
#[derive(Clone, Debug)]
pub struct ExtClass {
    pub space: ExtSpace,
    pub coords: Vec<u32>,
}

impl ExtClass {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
    pub fn realize(&self) -> ShortExactSeq {
        self.space.realize(&self.coords)
    }
}

pub fn realize_ext(x: &ExtClass) -> ShortExactSeq {
    x.realize()
}

pub fn ses_to_class(space: &ExtSpace, seq: &ShortExactSeq) -> Result<ExtClass> {
    Ok(space.class(space.ses_to_class(seq)?))
}

/// `0 -> K -> X -> Y -> 0`.
#[derive(Clone, Debug)]
pub struct ShortExactSeq {
    pub kernel: Representation,
    pub middle: Representation,
    pub cokernel: Representation,
    /// `K -> X`
    pub iota: RepMorphism,
    /// `X -> Y`
    pub alpha: RepMorphism,
}

#[derive(Clone, Debug, Serialize)]
pub struct SequenceDims {
    pub kernel: Vec<usize>,
    pub middle: Vec<usize>,
    pub cokernel: Vec<usize>,
}

impl ShortExactSeq {
    pub fn new(iota: RepMorphism, alpha: RepMorphism) -> Result<Self> {
        let s = ShortExactSeq {
            kernel: iota.source().clone(),
            middle: iota.target().clone(),
            cokernel: alpha.target().clone(),
            iota,
            alpha,
        };
        s.check()?;
        Ok(s)
    }

    pub fn check(&self) -> Result<()> {
        if self.iota.target() != &self.middle || self.alpha.source() != &self.middle {
            return Err(Error::SequenceMismatch("maps do not meet at the middle term".into()));
        }
        if !self.iota.is_mono() || !self.alpha.is_epi() || !self.alpha.compose(&self.iota).is_zero() {
            return Err(Error::SequenceMismatch("sequence is not short exact".into()));
        }
        let exact =
            (0..self.middle.dims().len()).all(|v| self.kernel.dim(v) + self.cokernel.dim(v) == self.middle.dim(v));
        if !exact {
            return Err(Error::SequenceMismatch("sequence is not exact in the middle".into()));
        }
        Ok(())
    }

    /// `0 -> K -> K ⊕ Y -> Y -> 0`.
    pub fn split(k: &Representation, y: &Representation) -> Self {
        let ds = direct_sum2(k, y);
        ShortExactSeq {
            kernel: k.clone(),
            middle: ds.sum.clone(),
            cokernel: y.clone(),
            iota: ds.injections[0].clone(),
            alpha: ds.projections[1].clone(),
        }
    }

    pub fn dims(&self) -> SequenceDims {
        SequenceDims {
            kernel: self.kernel.dims().to_vec(),
            middle: self.middle.dims().to_vec(),
            cokernel: self.cokernel.dims().to_vec(),
        }
    }
}

/// `u.ξ` for `u: K -> Z`: the middle term is `(X ⊕ Z) / {(ι k, -u k)}`.
pub fn pushout_ext(u: &RepMorphism, seq: &ShortExactSeq) -> Result<ShortExactSeq> {
    if u.source() != &seq.kernel {
        return Err(Error::SequenceMismatch("pushout map must start at the kernel".into()));
    }
    let z = u.target();
    let p = z.p();
    let ds = direct_sum2(&seq.middle, z);
    let j = ds.pair(&seq.kernel, &[&seq.iota, &u.scale(p - 1)]);
    let images: Vec<Subspace> = j.components().iter().map(Matrix::column_space).collect();
    let (middle, proj) = ds.sum.quotient(&images)?;
    let iota = proj.compose(&ds.injections[1]);
    let zero = RepMorphism::zero(z, &seq.cokernel);
    let alpha = descend(&ds.copair(&seq.cokernel, &[&seq.alpha, &zero]), &images, &middle);
    ShortExactSeq::new(iota, alpha)
}

/// `ξ.t` for `t: T -> Y`: the middle term is `{(x, s) : α x = t s} ⊆ X ⊕ T`.
pub fn pullback_ext(seq: &ShortExactSeq, t: &RepMorphism) -> Result<ShortExactSeq> {
    if t.target() != &seq.cokernel {
        return Err(Error::SequenceMismatch("pullback map must end at the cokernel".into()));
    }
    let tt = t.source();
    let p = tt.p();
    let ds = direct_sum2(&seq.middle, tt);
    let diff = ds.copair(&seq.cokernel, &[&seq.alpha, &t.scale(p - 1)]);
    let subs: Vec<Subspace> = diff.components().iter().map(Matrix::kernel).collect();
    let (middle, incl) = ds.sum.subrepresentation(&subs)?;
    let alpha = ds.projections[1].compose(&incl);
    let zero = RepMorphism::zero(&seq.kernel, tt);
    let into_sum = ds.pair(&seq.kernel, &[&seq.iota, &zero]);
    let iota = corestrict(&into_sum, &subs, &middle)?;
    ShortExactSeq::new(iota, alpha)
}

/// A linear map between a Hom space and an Ext space, in their bases.
#[derive(Clone, Debug)]
pub struct ConnectingMap {
    pub hom: HomSpace,
    pub ext: ExtSpace,
    /// `ext.dim() x hom.dim()`
    pub matrix: Matrix,
}

impl ConnectingMap {
    pub fn image(&self) -> Subspace {
        self.matrix.column_space()
    }
    pub fn kernel(&self) -> Subspace {
        self.matrix.kernel()
    }
}

/// `c(ξ, Z): Hom(K, Z) -> Ext¹(Y, Z)`, `u ↦ [u.ξ]`.
pub fn connecting_right(seq: &ShortExactSeq, z: &Representation) -> Result<ConnectingMap> {
    let pres = Arc::new(min_proj_presentation(&seq.cokernel)?);
    connecting_right_with(&pres, seq, z)
}

pub fn connecting_right_with(
    pres: &Arc<ProjPresentation>,
    seq: &ShortExactSeq,
    z: &Representation,
) -> Result<ConnectingMap> {
    let source = ExtSpace::with_presentation(pres.clone(), &seq.kernel);
    let xi = source.ses_to_class(seq)?;
    let ext = ExtSpace::with_presentation(pres.clone(), z);
    let hom = HomSpace::new(&seq.kernel, z)?;
    let cols: Vec<Vec<u32>> = hom.basis().iter().map(|u| ext.pushout_class(&source, &xi, u)).collect();
    let matrix = Matrix::from_columns(z.p(), ext.dim(), &cols);
    Ok(ConnectingMap { hom, ext, matrix })
}

/// `c(Z, ξ): Hom(Z, Y) -> Ext¹(Z, K)`, `t ↦ [ξ.t]`.
pub fn connecting_left(z: &Representation, seq: &ShortExactSeq) -> Result<ConnectingMap> {
    let ext = ext_space(z, &seq.kernel)?;
    let hom = HomSpace::new(z, &seq.cokernel)?;
    let cols = hom.basis().iter().map(|t| ext.pullback_class(seq, t)).collect::<Result<Vec<_>>>()?;
    let matrix = Matrix::from_columns(z.p(), ext.dim(), &cols);
    Ok(ConnectingMap { hom, ext, matrix })
}
