//! Auslander–Reiten translation through the Nakayama functor, stable Hom, and
//! the duality pairing `Ext¹(Y, τC) x Hom(C, Y)/𝒫 -> F_p`.

use std::sync::Arc;

use crate::decompose::has_projective_summand;
use crate::error::{verify, Error, Result};
use crate::ext::{lift_to_presentations, min_proj_presentation, ExtSpace, ProjPresentation};
use crate::hom::{corestrict, postcomposition_image, HomSpace};
use crate::linalg::{Matrix, Subspace};
use crate::par;
use crate::projective::{as_free, projective_cover, FreeProjective};
use crate::quiver::{RepMorphism, Representation};

/// `ν P` for a projective `P`, via an isomorphism with a [`FreeProjective`].
pub fn nakayama(p: &Representation) -> Result<Representation> {
    Ok(as_free(p)?.free.nakayama().clone())
}

/// `ν f: ν P -> ν P'` for a morphism between projectives. The result is
/// expressed on the standard path bases of `ν P` and `ν P'`.
pub fn nakayama_morphism(f: &RepMorphism) -> Result<RepMorphism> {
    let src = as_free(f.source())?;
    let dst = as_free(f.target())?;
    let back = dst.map.inverse().expect("cover of a projective is an isomorphism");
    let g = back.compose(f).compose(&src.map);
    Ok(src.free.nakayama_morphism(&dst.free, &g))
}

/// `τX = Ker(ν map1: ν P1 -> ν P0)` with its inclusion into `ν P1`.
#[derive(Clone, Debug)]
pub struct Translate {
    pub pres: Arc<ProjPresentation>,
    pub tau: Representation,
    /// `τX -> ν P1`
    pub incl: RepMorphism,
    subs: Vec<Subspace>,
}

pub fn tau_data(x: &Representation) -> Result<Translate> {
    let pres = Arc::new(min_proj_presentation(x)?);
    let nu = pres.p1.nakayama_morphism(&pres.p0, &pres.map1);
    let subs: Vec<Subspace> = nu.components().iter().map(Matrix::kernel).collect();
    let (tau, incl) = nu.source().subrepresentation(&subs)?;
    Ok(Translate { pres, tau, incl, subs })
}

pub fn tau(x: &Representation) -> Result<Representation> {
    Ok(tau_data(x)?.tau)
}

/// `τ g: τX -> τX'` computed by lifting `g` to the presentations.
pub fn tau_morphism_with(g: &RepMorphism, src: &Translate, dst: &Translate) -> Result<RepMorphism> {
    let (_, g1) = lift_to_presentations(g, &src.pres, &dst.pres)?;
    let nu = src.pres.p1.nakayama_morphism(&dst.pres.p1, &g1);
    corestrict(&nu.compose(&src.incl), &dst.subs, &dst.tau)
}

pub fn tau_morphism(g: &RepMorphism) -> Result<RepMorphism> {
    tau_morphism_with(g, &tau_data(g.source())?, &tau_data(g.target())?)
}

/// `τ⁻¹X = D τ_{Q^op} D X`.
pub fn tau_inverse(x: &Representation) -> Result<Representation> {
    let dual = x.dual();
    let t = tau(&dual)?;
    Ok(t.dual_into(x.quiver()))
}

/// `𝒫(C, Y) = Im Hom(C, π)` for the projective cover `π` of `Y`.
pub fn projectively_trivial_subspace(hom_cy: &HomSpace) -> Result<Subspace> {
    let cover = projective_cover(hom_cy.target());
    postcomposition_image(hom_cy, &cover.map)
}

/// `Σ_i Im(Hom(P(i), Y) ∘ Hom(C, P(i)))`, an independent description of `𝒫(C, Y)`.
pub fn projectively_trivial_by_vertices(hom_cy: &HomSpace) -> Result<Subspace> {
    let (c, y) = (hom_cy.source(), hom_cy.target());
    let mut out = Subspace::zero(c.p(), hom_cy.dim());
    for i in 0..c.quiver().num_vertices() {
        let pi = FreeProjective::new(c.quiver(), c.p(), vec![i]);
        let into = HomSpace::new(c, pi.rep())?;
        let out_of = HomSpace::new(pi.rep(), y)?;
        let comps: Vec<RepMorphism> =
            out_of.basis().iter().flat_map(|b| into.basis().iter().map(move |a| b.compose(a))).collect();
        out = out.sum(&hom_cy.span_of(&comps));
    }
    Ok(out)
}

/// `Hom(C, Y) / 𝒫(C, Y)`.
#[derive(Clone, Debug)]
pub struct StableHomSpace {
    pub hom: HomSpace,
    pub trivial: Subspace,
}

pub fn stable_hom(c: &Representation, y: &Representation) -> Result<StableHomSpace> {
    let hom = HomSpace::new(c, y)?;
    let trivial = projectively_trivial_subspace(&hom)?;
    Ok(StableHomSpace { hom, trivial })
}

impl StableHomSpace {
    pub fn dim(&self) -> usize {
        self.trivial.quotient_dim()
    }

    /// Stable coordinates of a morphism `C -> Y`.
    pub fn coords(&self, f: &RepMorphism) -> Vec<u32> {
        self.trivial.quotient_coords(&self.hom.coords(f).expect("morphism C -> Y"))
    }

    /// The representative morphism of a stable class.
    pub fn representative(&self, coords: &[u32]) -> RepMorphism {
        self.hom.element(&self.trivial.quotient_lift(coords))
    }

    pub fn representatives(&self) -> Vec<RepMorphism> {
        self.trivial.quotient_reps().iter().map(|v| self.hom.element(v)).collect()
    }

    /// Image of a subspace of `Hom(C, Y)` (full coordinates) in stable coordinates.
    pub fn project(&self, s: &Subspace) -> Subspace {
        Subspace::span(self.hom.source().p(), self.dim(), s.vectors().iter().map(|v| self.trivial.quotient_coords(v)))
    }
}

/// The canonical functional `ε_C: Ext¹(C, τC) -> F_p`: include `τC` into
/// `ν Q1` and take the trace of `Q1 -> ν Q1`.
pub fn epsilon(t: &Translate, h: &RepMorphism) -> u32 {
    t.pres.p1.trace(&t.incl.compose(h))
}

/// `B[x, f] = ε_C([ξ_x . f])` on `Ext¹(Y, τC) x Hom(C, Y)/𝒫`.
#[derive(Clone, Debug)]
pub struct PairingForm {
    pub c: Representation,
    pub y: Representation,
    pub translate: Translate,
    pub ext: ExtSpace,
    pub stable: StableHomSpace,
    /// Rows: Ext basis, columns: stable representatives.
    pub matrix: Matrix,
}

pub fn ar_pairing(c: &Representation, y: &Representation) -> Result<PairingForm> {
    if has_projective_summand(c)? {
        return Err(Error::ProjectiveSummand);
    }
    let translate = tau_data(c)?;
    let ypres = Arc::new(min_proj_presentation(y)?);
    let ext = ExtSpace::with_presentation(ypres, &translate.tau);
    let stable = stable_hom(c, y)?;
    let mut form =
        PairingForm { c: c.clone(), y: y.clone(), translate, ext, stable, matrix: Matrix::zeros(c.p(), 0, 0) };
    let reps = form.stable.representatives();
    let cols = par::par_map(&reps, |f| form.column(f));
    let cols = cols.into_iter().collect::<Result<Vec<_>>>()?;
    form.matrix = Matrix::from_columns(c.p(), form.ext.dim(), &cols);
    verify(form.matrix.is_square() && form.matrix.is_invertible(), || {
        format!(
            "duality pairing is degenerate: Ext has dim {}, stable Hom has dim {}, rank {}",
            form.ext.dim(),
            form.stable.dim(),
            form.matrix.rank()
        )
    })?;
    Ok(form)
}

impl PairingForm {
    /// `(B[e_i, f])_i` for an arbitrary `f: C -> Y`.
    pub fn column(&self, f: &RepMorphism) -> Result<Vec<u32>> {
        let (_, f1) = lift_to_presentations(f, &self.translate.pres, self.ext.presentation())?;
        Ok((0..self.ext.dim())
            .map(|i| {
                let mut e = vec![0u32; self.ext.dim()];
                e[i] = 1;
                let h = self.ext.representative(&e);
                epsilon(&self.translate, &h.compose(&f1))
            })
            .collect())
    }

    /// `B[x, f]`.
    pub fn value(&self, x: &[u32], f: &RepMorphism) -> Result<u32> {
        let col = self.column(f)?;
        Ok(crate::linalg::dot(self.c.p(), x, &col))
    }

    /// `L^⊥` in stable coordinates, for `L ⊆ Ext¹(Y, τC)`.
    pub fn perp(&self, l: &Subspace) -> Subspace {
        l.basis().mul(&self.matrix).kernel()
    }

    /// `S^⊥` in Ext coordinates, for `S` in stable coordinates.
    pub fn perp_of_stable(&self, s: &Subspace) -> Subspace {
        s.basis().mul(&self.matrix.transpose()).kernel()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::is_isomorphic;
    use crate::fixtures::{linear_catalog, A2};
    use crate::projective::{injective, projective};

    #[test]
    fn nakayama_of_standard_projectives() {
        let a2 = A2::new(2);
        assert_eq!(nakayama(&a2.p1).unwrap(), a2.s1);
        assert_eq!(nakayama(&a2.s2).unwrap().dims(), &[1, 1]);
        let id = RepMorphism::identity(&a2.p1);
        assert_eq!(nakayama_morphism(&id).unwrap(), RepMorphism::identity(&a2.s1));
        assert!(matches!(nakayama(&a2.s1), Err(Error::NotProjective)));
    }

    #[test]
    fn translates() {
        let a2 = A2::new(2);
        assert!(tau(&a2.p1).unwrap().is_zero());
        assert!(is_isomorphic(&tau(&a2.s1).unwrap(), &a2.s2).unwrap());
        assert!(is_isomorphic(&tau_inverse(&a2.s2).unwrap(), &a2.s1).unwrap());
        let (q, cat) = linear_catalog(3, 2);
        // cat: S1, S2, S3, M12, M23, M13
        assert!(is_isomorphic(&tau(&cat[1]).unwrap(), &cat[2]).unwrap());
        assert!(is_isomorphic(&tau_inverse(&cat[2]).unwrap(), &cat[1]).unwrap());
        for i in 0..3 {
            assert!(tau_inverse(&injective(&q, 2, i)).unwrap().is_zero());
            assert!(tau(&projective(&q, 2, i)).unwrap().is_zero());
        }
    }

    #[test]
    fn projectively_trivial_maps() {
        let a2 = A2::new(2);
        let s = stable_hom(&a2.s1, &a2.s1).unwrap();
        assert!(s.trivial.is_zero());
        assert_eq!(s.dim(), 1);
        assert_eq!(stable_hom(&a2.p1, &a2.s1).unwrap().dim(), 0);
        let h = HomSpace::new(&a2.p1, &a2.p1).unwrap();
        assert!(projectively_trivial_subspace(&h).unwrap().is_full());
    }

    #[test]
    fn pairings() {
        let a2 = A2::new(2);
        let b = ar_pairing(&a2.s1, &a2.s1).unwrap();
        assert_eq!(b.matrix, Matrix::identity(2, 1));
        let (_, cat) = linear_catalog(3, 2);
        let b = ar_pairing(&cat[1], &cat[1]).unwrap();
        assert_eq!(b.matrix.shape(), (1, 1));
        assert!(b.matrix.is_invertible());
        assert!(matches!(ar_pairing(&a2.p1, &a2.s1), Err(Error::ProjectiveSummand)));
        let b = ar_pairing(&a2.s1, &a2.s2).unwrap();
        assert_eq!(b.matrix.shape(), (0, 0));
    }
}
