//! `Ext¹(Y, K)` as a left `End(K)`-module, stable Hom as a left
//! `End(C)^op`-module, and projective covers of `End(K)`-submodules of Ext.

use std::sync::Arc;

use crate::algebra::{endo_algebra, FDAlgebra, FDModule, Side};
use crate::ar::{stable_hom, StableHomSpace};
use crate::decompose::{decompose, Decomposition};
use crate::error::{verify, Error, Result};
use crate::ext::{min_proj_presentation, ExtSpace, ProjPresentation};
use crate::hom::{direct_sum, DirectSum, HomSpace};
use crate::linalg::{axpy, Matrix, Subspace};
use crate::quiver::{RepMorphism, Representation};

/// `Ext¹(Y, K)` with its left `Γ(K)`-action `g·[ξ] = [g.ξ]`.
#[derive(Clone, Debug)]
pub struct ExtModule {
    pub gamma: Arc<FDAlgebra>,
    pub ext: ExtSpace,
    pub module: FDModule,
}

impl ExtModule {
    pub fn k(&self) -> &Representation {
        self.ext.z()
    }
    pub fn y(&self) -> &Representation {
        self.ext.y()
    }
    /// The endomorphisms of `K` forming the basis of `Γ(K)`.
    pub fn gamma_basis(&self) -> &[RepMorphism] {
        self.gamma.origin().expect("endomorphism algebra").basis()
    }
    pub fn gamma_coords(&self, g: &RepMorphism) -> Vec<u32> {
        self.gamma.origin().expect("endomorphism algebra").coords(g).expect("endomorphism of K")
    }
}

pub fn ext_as_gamma_module(y: &Representation, k: &Representation) -> Result<ExtModule> {
    let gamma = Arc::new(endo_algebra(k)?);
    ext_module_with(Arc::new(min_proj_presentation(y)?), gamma)
}

/// Builds the module on a given presentation of `Y` and a given `Γ(K)`.
pub fn ext_module_with(pres: Arc<ProjPresentation>, gamma: Arc<FDAlgebra>) -> Result<ExtModule> {
    let hom = gamma.origin().expect("endomorphism algebra");
    let k = hom.source().clone();
    let ext = ExtSpace::with_presentation(pres, &k);
    let d = ext.dim();
    let action = hom
        .basis()
        .iter()
        .map(|g| {
            let cols: Vec<Vec<u32>> = (0..d).map(|j| ext.pushout_class(&ext, &unit(d, j), g)).collect();
            Matrix::from_columns(k.p(), d, &cols)
        })
        .collect();
    let module = FDModule::new(gamma.clone(), Side::Left, d, action)?;
    Ok(ExtModule { gamma, ext, module })
}

/// Stable `Hom(C, Y)` as a left `Γ(C)^op`-module: `g · f = f ∘ g`.
#[derive(Clone, Debug)]
pub struct StableModule {
    /// `Γ(C)^op`, on the basis of `hom_basis(C, C)`.
    pub gamma_op: Arc<FDAlgebra>,
    pub stable: StableHomSpace,
    pub module: FDModule,
}

pub fn stablehom_as_gammaop_module(c: &Representation, y: &Representation) -> Result<StableModule> {
    let gamma_op = Arc::new(endo_algebra(c)?.opposite());
    stable_module_with(stable_hom(c, y)?, gamma_op)
}

pub fn stable_module_with(stable: StableHomSpace, gamma_op: Arc<FDAlgebra>) -> Result<StableModule> {
    let ends = gamma_op.origin().expect("endomorphism algebra").basis();
    // 𝒫 is an ideal: precomposition keeps it inside
    for g in ends {
        for t in stable.trivial.vectors() {
            let f = stable.hom.element(&t).compose(g);
            verify(stable.trivial.contains_vector(&stable.hom.coords(&f).expect("C -> Y")), || {
                "projectively trivial maps are not closed under precomposition".into()
            })?;
        }
    }
    let reps = stable.representatives();
    let d = stable.dim();
    let p = stable.hom.source().p();
    let action = ends
        .iter()
        .map(|g| {
            let cols: Vec<Vec<u32>> = reps.iter().map(|f| stable.coords(&f.compose(g))).collect();
            Matrix::from_columns(p, d, &cols)
        })
        .collect();
    let module = FDModule::new(gamma_op.clone(), Side::Right, d, action)?;
    Ok(StableModule { gamma_op, stable, module })
}

/// A projective cover `Hom(K', K) -> L` of a `Γ(K)`-submodule `L ⊆ Ext¹(Y, K)`.
#[derive(Clone, Debug)]
pub struct GammaCover {
    /// `K' = ⊕_k K_{j_k}`
    pub k_prime: DirectSum,
    /// Indices into the decomposition of `K`.
    pub summands: Vec<usize>,
    /// `l_k ∈ e_{j_k} L`, Ext coordinates; their classes generate `top L`.
    pub generators: Vec<Vec<u32>>,
    pub hom: HomSpace,
    /// The cover `Hom(K', K) -> Ext¹(Y, K)`, `ext.dim() x hom.dim()`.
    pub matrix: Matrix,
}

impl GammaCover {
    pub fn image(&self) -> Subspace {
        self.matrix.column_space()
    }
}

/// Idempotent `ι_j π_j` of the `j`-th summand, in `Γ(K)` coordinates.
fn summand_idempotent(m: &ExtModule, dec: &Decomposition, j: usize) -> Vec<u32> {
    m.gamma_coords(&dec.injections[j].compose(&dec.projections[j]))
}

pub fn gamma_projective_cover(m: &ExtModule, l: &Subspace, dec: &Decomposition) -> Result<GammaCover> {
    if !m.module.is_submodule(l) {
        return Err(Error::NotStable);
    }
    let k = m.k();
    let p = k.p();
    let rad_l = m.module.radical_of(l);
    let mut covered = rad_l.clone();
    let mut summands = Vec::new();
    let mut generators = Vec::new();
    for class in &dec.classes {
        let j = class[0];
        let e = summand_idempotent(m, dec, j);
        let ej = m.module.act(&e);
        // Γ w maps onto one copy of the simple top of Γ e_j for w ∈ e_j L outside
        // the part covered so far
        for v in l.vectors() {
            let w = ej.mul_vec(&v);
            if covered.contains_vector(&w) {
                continue;
            }
            covered = covered.sum(&m.module.generated(std::slice::from_ref(&w)));
            summands.push(j);
            generators.push(w);
        }
    }
    verify(covered == *l, || "chosen generators do not cover the top of L".into())?;

    let parts: Vec<Representation> = summands.iter().map(|&j| dec.parts[j].clone()).collect();
    let k_prime = direct_sum(k.quiver(), p, &parts);
    let hom = HomSpace::new(&k_prime.sum, k)?;
    let cols: Vec<Vec<u32>> = hom
        .basis()
        .iter()
        .map(|u| {
            let mut acc = vec![0u32; m.ext.dim()];
            for (idx, (&j, lk)) in summands.iter().zip(&generators).enumerate() {
                let g = u.compose(&k_prime.injections[idx]).compose(&dec.projections[j]);
                let gl = m.module.act(&m.gamma_coords(&g)).mul_vec(lk);
                axpy(p, &mut acc, 1, &gl);
            }
            acc
        })
        .collect();
    let matrix = Matrix::from_columns(p, m.ext.dim(), &cols);
    let cover = GammaCover { k_prime, summands, generators, hom, matrix };
    verify(cover.image() == *l, || "cover does not map onto L".into())?;
    verify(kernel_is_superfluous(m, &cover)?, || "cover kernel is not in the radical".into())?;
    Ok(cover)
}

/// `Ker(c) ⊆ rad Γ(K) · Hom(K', K)`.
pub fn kernel_is_superfluous(m: &ExtModule, cover: &GammaCover) -> Result<bool> {
    let rad = m.gamma.radical();
    let rad_maps: Vec<RepMorphism> =
        rad.vectors().iter().map(|r| m.gamma.origin().expect("endomorphism algebra").element(r)).collect();
    let prods: Vec<RepMorphism> =
        rad_maps.iter().flat_map(|r| cover.hom.basis().iter().map(move |u| r.compose(u))).collect();
    let rad_hom = cover.hom.span_of(&prods);
    Ok(rad_hom.contains(&cover.matrix.kernel()))
}

/// Decomposition of `K` shared by the covers of all submodules of one module.
pub fn decompose_k(m: &ExtModule) -> Result<Decomposition> {
    decompose(m.k())
}

fn unit(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0u32; n];
    v[i] = 1;
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::submodule_lattice;
    use crate::decompose::is_isomorphic;
    use crate::fixtures::A2;

    #[test]
    fn a2_ext_module() {
        let a2 = A2::new(2);
        let m = ext_as_gamma_module(&a2.s1, &a2.s2).unwrap();
        assert_eq!(m.module.dim(), 1);
        assert_eq!(m.module.act(m.gamma.unit()), Matrix::identity(2, 1));
        assert_eq!(submodule_lattice(&m.module).unwrap().len(), 2);
        let z = ext_as_gamma_module(&a2.p1, &a2.s2).unwrap();
        assert_eq!(z.module.dim(), 0);
    }

    #[test]
    fn a2_stable_module() {
        let a2 = A2::new(2);
        assert_eq!(stablehom_as_gammaop_module(&a2.s1, &a2.s1).unwrap().module.dim(), 1);
        assert_eq!(stablehom_as_gammaop_module(&a2.p1, &a2.s1).unwrap().module.dim(), 0);
    }

    #[test]
    fn a2_cover() {
        let a2 = A2::new(2);
        let m = ext_as_gamma_module(&a2.s1, &a2.s2).unwrap();
        let dec = decompose(m.k()).unwrap();
        let whole = Subspace::full(2, 1);
        let c = gamma_projective_cover(&m, &whole, &dec).unwrap();
        assert!(is_isomorphic(&c.k_prime.sum, &a2.s2).unwrap());
        assert!(c.matrix.is_invertible());
        let zero = Subspace::zero(2, 1);
        let c = gamma_projective_cover(&m, &zero, &dec).unwrap();
        assert!(c.k_prime.sum.is_zero());
    }
}
