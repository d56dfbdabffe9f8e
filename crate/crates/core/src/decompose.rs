//! Krull–Schmidt decomposition by Fitting splitting, isomorphism tests and `add`.

use serde::Serialize;

use crate::algebra::endo_algebra;
use crate::error::{Error, Result};
use crate::hom::{direct_sum, HomSpace};
use crate::limits;
use crate::linalg::{vector_from_index, Subspace};
use crate::projective::is_projective;
use crate::quiver::{RepMorphism, Representation};

/// `X ≅ ⊕ parts`, with `Σ injections[k] ∘ projections[k] = id_X`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub object: Representation,
    pub parts: Vec<Representation>,
    /// `parts[k] -> X`
    pub injections: Vec<RepMorphism>,
    /// `X -> parts[k]`
    pub projections: Vec<RepMorphism>,
    /// Isomorphism classes: indices into `parts`, in order of first appearance.
    pub classes: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SummandCount {
    pub dims: Vec<usize>,
    pub multiplicity: usize,
}

impl Decomposition {
    /// One representative per iso class with its multiplicity.
    pub fn multiset(&self) -> Vec<(Representation, usize)> {
        self.classes.iter().map(|c| (self.parts[c[0]].clone(), c.len())).collect()
    }

    pub fn summary(&self) -> Vec<SummandCount> {
        self.classes
            .iter()
            .map(|c| SummandCount { dims: self.parts[c[0]].dims().to_vec(), multiplicity: c.len() })
            .collect()
    }

    /// The isomorphism `⊕ parts -> X` and its inverse.
    pub fn isomorphism(&self) -> (RepMorphism, RepMorphism) {
        let ds = direct_sum(self.object.quiver(), self.object.p(), &self.parts);
        let injs: Vec<&RepMorphism> = self.injections.iter().collect();
        let projs: Vec<&RepMorphism> = self.projections.iter().collect();
        (ds.copair(&self.object, &injs), ds.pair(&self.object, &projs))
    }
}

fn nilpotency_split(x: &Representation, u: &RepMorphism) -> Option<(Vec<Subspace>, Vec<Subspace>)> {
    let powered: Vec<_> = u.components().iter().map(|c| c.pow(c.rows() as u64)).collect();
    let kers: Vec<Subspace> = powered.iter().map(|m| m.kernel()).collect();
    let ims: Vec<Subspace> = powered.iter().map(|m| m.column_space()).collect();
    let k: usize = kers.iter().map(Subspace::dim).sum();
    (k != 0 && k != x.total_dim()).then_some((kers, ims))
}

/// An endomorphism that is neither nilpotent nor invertible, if one exists.
fn splitting_endomorphism(x: &Representation) -> Result<Option<(Vec<Subspace>, Vec<Subspace>)>> {
    let end = HomSpace::new(x, x)?;
    let basis = end.basis();
    for u in basis {
        if let Some(s) = nilpotency_split(x, u) {
            return Ok(Some(s));
        }
    }
    if basis.len() <= 1 {
        return Ok(None);
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if let Some(s) = nilpotency_split(x, &basis[i].add(&basis[j])) {
                return Ok(Some(s));
            }
        }
    }
    // X is indecomposable iff End(X)/rad is a division algebra; any lift of a
    // nonzero non-invertible residue class splits X.
    let alg = endo_algebra(x)?;
    let rad = alg.radical();
    let positions = rad.complement_positions();
    if positions.len() <= 1 {
        return Ok(None);
    }
    let p = x.p();
    let count = limits::check_space("End/rad residues", p, positions.len(), limits::max_enum())
        .map_err(|e| Error::DecompositionCap(e.to_string()))?;
    for idx in 1..count {
        let c = vector_from_index(p, positions.len(), idx);
        let mut coords = vec![0u32; basis.len()];
        for (&pos, &v) in positions.iter().zip(&c) {
            coords[pos] = v;
        }
        if let Some(s) = nilpotency_split(x, &end.element(&coords)) {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

fn split_recursive(x: &Representation, out: &mut Vec<(Representation, RepMorphism, RepMorphism)>) -> Result<()> {
    if x.is_zero() {
        return Ok(());
    }
    match splitting_endomorphism(x)? {
        None => {
            out.push((x.clone(), RepMorphism::identity(x), RepMorphism::identity(x)));
            Ok(())
        }
        Some((kers, ims)) => {
            let (k, k_incl) = x.subrepresentation(&kers)?;
            let (i, i_incl) = x.subrepresentation(&ims)?;
            let ds = direct_sum(x.quiver(), x.p(), &[k.clone(), i.clone()]);
            let to_x = ds.copair(x, &[&k_incl, &i_incl]);
            let from_x = to_x.inverse().expect("Fitting decomposition is direct");
            let k_proj = ds.projections[0].compose(&from_x);
            let i_proj = ds.projections[1].compose(&from_x);
            for (sub, incl, proj) in [(k, k_incl, k_proj), (i, i_incl, i_proj)] {
                let mut inner = Vec::new();
                split_recursive(&sub, &mut inner)?;
                for (part, inj, pr) in inner {
                    out.push((part, incl.compose(&inj), pr.compose(&proj)));
                }
            }
            Ok(())
        }
    }
}

/// Decomposes `X` into indecomposables and groups them by isomorphism class.
pub fn decompose(x: &Representation) -> Result<Decomposition> {
    let mut pieces = Vec::new();
    split_recursive(x, &mut pieces)?;
    let mut parts = Vec::new();
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    for (part, inj, proj) in pieces {
        parts.push(part);
        injections.push(inj);
        projections.push(proj);
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for k in 0..parts.len() {
        let mut placed = false;
        for c in classes.iter_mut() {
            if indecomposables_isomorphic(&parts[c[0]], &parts[k])?.is_some() {
                c.push(k);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![k]);
        }
    }
    let d = Decomposition { object: x.clone(), parts, injections, projections, classes };
    debug_assert!({
        let (to, from) = d.isomorphism();
        to.compose(&from) == RepMorphism::identity(x)
    });
    Ok(d)
}

pub fn is_indecomposable(x: &Representation) -> Result<bool> {
    Ok(!x.is_zero() && splitting_endomorphism(x)?.is_none())
}

/// An isomorphism between two indecomposables, if they are isomorphic.
///
/// For indecomposable `X`, `End(X)` is local, so some `g ∘ f` with `f, g`
/// drawn from Hom bases is invertible exactly when `X ≅ Y`.
pub fn indecomposables_isomorphic(x: &Representation, y: &Representation) -> Result<Option<RepMorphism>> {
    x.same_category(y)?;
    if x.dims() != y.dims() {
        return Ok(None);
    }
    let fs = HomSpace::new(x, y)?;
    let gs = HomSpace::new(y, x)?;
    for f in fs.basis() {
        // an invertible g ∘ f makes f split mono, hence iso
        if !f.is_iso() {
            continue;
        }
        if gs.basis().iter().any(|g| g.compose(f).is_iso()) {
            return Ok(Some(f.clone()));
        }
    }
    // rad End(X) is a subspace, so if every basis product lies in it (is
    // nilpotent) then so does every g ∘ f.
    Ok(None)
}

/// An isomorphism `X -> Y` if one exists.
pub fn find_isomorphism(x: &Representation, y: &Representation) -> Result<Option<RepMorphism>> {
    x.same_category(y)?;
    if x.dims() != y.dims() {
        return Ok(None);
    }
    let dx = decompose(x)?;
    let dy = decompose(y)?;
    if dx.parts.len() != dy.parts.len() {
        return Ok(None);
    }
    let mut used = vec![false; dy.parts.len()];
    let mut f = RepMorphism::zero(x, y);
    for (k, part) in dx.parts.iter().enumerate() {
        let mut matched = false;
        for (l, other) in dy.parts.iter().enumerate() {
            if used[l] {
                continue;
            }
            if let Some(iso) = indecomposables_isomorphic(part, other)? {
                used[l] = true;
                f = f.add(&dy.injections[l].compose(&iso).compose(&dx.projections[k]));
                matched = true;
                break;
            }
        }
        if !matched {
            return Ok(None);
        }
    }
    debug_assert!(f.is_iso());
    Ok(Some(f))
}

pub fn is_isomorphic(x: &Representation, y: &Representation) -> Result<bool> {
    Ok(find_isomorphism(x, y)?.is_some())
}

/// Whether every indecomposable summand of `X` (non-projective ones only, if
/// `strip_projectives`) is isomorphic to a summand of `K`.
pub fn in_add(x: &Representation, k: &Representation, strip_projectives: bool) -> Result<bool> {
    x.same_category(k)?;
    let dx = decompose(x)?;
    let dk = decompose(k)?;
    for (part, _) in dx.multiset() {
        if strip_projectives && is_projective(&part) {
            continue;
        }
        let mut found = false;
        for (q, _) in dk.multiset() {
            if indecomposables_isomorphic(&part, &q)?.is_some() {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The direct sum of the non-projective summands of `X`, with its split
/// inclusion and projection.
pub fn strip_projectives(x: &Representation) -> Result<(Representation, RepMorphism, RepMorphism)> {
    let d = decompose(x)?;
    let keep: Vec<usize> = (0..d.parts.len()).filter(|&k| !is_projective(&d.parts[k])).collect();
    if keep.len() == d.parts.len() {
        return Ok((x.clone(), RepMorphism::identity(x), RepMorphism::identity(x)));
    }
    let parts: Vec<Representation> = keep.iter().map(|&k| d.parts[k].clone()).collect();
    let ds = direct_sum(x.quiver(), x.p(), &parts);
    let injs: Vec<&RepMorphism> = keep.iter().map(|&k| &d.injections[k]).collect();
    let projs: Vec<&RepMorphism> = keep.iter().map(|&k| &d.projections[k]).collect();
    let incl = ds.copair(x, &injs);
    let proj = ds.pair(x, &projs);
    Ok((ds.sum, incl, proj))
}

pub fn has_projective_summand(x: &Representation) -> Result<bool> {
    Ok(decompose(x)?.parts.iter().any(is_projective))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{interval, linear_catalog, A2};
    use crate::hom::direct_sum2;

    #[test]
    fn a2_decompositions() {
        let a2 = A2::new(2);
        let d = decompose(&direct_sum2(&a2.p1, &a2.s2).sum).unwrap();
        let mut dims: Vec<_> = d.summary().into_iter().map(|s| (s.dims, s.multiplicity)).collect();
        dims.sort();
        assert_eq!(dims, vec![(vec![0, 1], 1), (vec![1, 1], 1)]);
        let d = decompose(&a2.s1).unwrap();
        assert_eq!(d.parts.len(), 1);
        let d = decompose(&direct_sum2(&a2.s1, &a2.s1).sum).unwrap();
        assert_eq!(d.summary(), vec![SummandCount { dims: vec![1, 0], multiplicity: 2 }]);
    }

    #[test]
    fn add_membership() {
        let a2 = A2::new(2);
        let kk = direct_sum2(&a2.p1, &a2.p1).sum;
        assert!(in_add(&kk, &a2.p1, false).unwrap());
        assert!(!in_add(&a2.s1, &a2.s2, false).unwrap());
        let ps = direct_sum2(&a2.p1, &a2.s1).sum;
        assert!(in_add(&ps, &a2.s1, true).unwrap());
        assert!(!in_add(&ps, &a2.s1, false).unwrap());
    }

    #[test]
    fn a3_catalog_is_pairwise_non_isomorphic() {
        let (_, cat) = linear_catalog(3, 2);
        for (i, x) in cat.iter().enumerate() {
            assert!(is_indecomposable(x).unwrap());
            for (j, y) in cat.iter().enumerate() {
                assert_eq!(is_isomorphic(x, y).unwrap(), i == j);
            }
        }
    }

    #[test]
    fn isomorphism_after_base_change() {
        let (q, _) = linear_catalog(3, 3);
        let x = direct_sum(&q, 3, &[interval(&q, 3, 1, 2), interval(&q, 3, 2, 3), interval(&q, 3, 2, 2)]).sum;
        // conjugate vertex 2 by an invertible matrix
        let g = crate::linalg::Matrix::from_rows(3, 3, 3, &[vec![1, 2, 0], vec![0, 1, 1], vec![1, 0, 2]]).unwrap();
        let gi = g.inverse().unwrap();
        let maps = vec![g.mul(x.map(0)), x.map(1).mul(&gi)];
        let y = Representation::new(q.clone(), 3, x.dims().to_vec(), maps).unwrap();
        let f = find_isomorphism(&x, &y).unwrap().unwrap();
        assert!(f.is_iso() && f.is_valid());
        assert_eq!(decompose(&y).unwrap().parts.len(), 3);
    }
}
