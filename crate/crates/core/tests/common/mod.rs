#![allow(dead_code)]

use std::sync::Arc;

use auslander::ar::{ar_pairing, tau_morphism_with, PairingForm};
use auslander::ext::{connecting_left, connecting_right_with, ExtSpace};
use auslander::fixtures::{d4, kronecker_catalog, linear_catalog};
use auslander::hom::{direct_sum2, HomSpace};
use auslander::projective::is_projective;
use auslander::triangle::indecomposables;
use auslander::{Quiver, RepMorphism, Representation, Result};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub struct Fixture {
    pub name: &'static str,
    pub quiver: Arc<Quiver>,
    pub p: u32,
    pub catalog: Vec<Representation>,
    pub dynkin: bool,
}

impl Fixture {
    pub fn non_projective(&self) -> Vec<Representation> {
        self.catalog.iter().filter(|x| !is_projective(x)).cloned().collect()
    }

    pub fn pick<'a>(&'a self, rng: &mut ChaCha8Rng) -> &'a Representation {
        &self.catalog[rng.gen_range(0..self.catalog.len())]
    }

    /// A random catalog object or a sum of two.
    pub fn random_object(&self, rng: &mut ChaCha8Rng) -> Representation {
        let x = self.pick(rng).clone();
        if rng.gen_bool(0.3) {
            direct_sum2(&x, self.pick(rng)).sum
        } else {
            x
        }
    }
}

pub fn linear(n: usize, p: u32, name: &'static str) -> Fixture {
    let (quiver, catalog) = linear_catalog(n, p);
    Fixture { name, quiver, p, catalog, dynkin: true }
}

pub fn a2(p: u32) -> Fixture {
    linear(2, p, if p == 2 { "A2/F2" } else { "A2/F3" })
}

pub fn a3() -> Fixture {
    linear(3, 2, "A3/F2")
}

pub fn d4_fixture() -> Fixture {
    let quiver = d4();
    let catalog = indecomposables(&quiver, 2).unwrap();
    Fixture { name: "D4/F2", quiver, p: 2, catalog, dynkin: true }
}

pub fn kronecker_fixture(max_total: usize) -> Fixture {
    let (quiver, catalog) = kronecker_catalog(2, max_total);
    Fixture { name: "Kronecker/F2", quiver, p: 2, catalog, dynkin: false }
}

pub fn random_vec(rng: &mut ChaCha8Rng, p: u32, n: usize) -> Vec<u32> {
    (0..n).map(|_| rng.gen_range(0..p)).collect()
}

pub fn random_hom(rng: &mut ChaCha8Rng, h: &HomSpace) -> RepMorphism {
    let p = h.source().p();
    h.element(&random_vec(rng, p, h.dim()))
}

/// One random instance of the pairing identities for a fixture. Returns the
/// list of violated identities (empty when all hold).
pub fn pairing_instance(fx: &Fixture, rng: &mut ChaCha8Rng) -> Result<Vec<String>> {
    let cs = fx.non_projective();
    let c = &cs[rng.gen_range(0..cs.len())];
    let y = fx.random_object(rng);
    let form = ar_pairing(c, &y)?;
    let p = fx.p;
    let mut bad = Vec::new();
    let stable = &form.stable;
    let k = form.translate.tau.clone();

    if !(form.matrix.is_square() && form.matrix.rank() == form.ext.dim()) {
        bad.push("non-degeneracy".to_string());
    }
    for t in stable.trivial.vectors() {
        if form.column(&stable.hom.element(&t))?.iter().any(|&v| v != 0) {
            bad.push("descent to stable Hom".to_string());
        }
    }

    // the kernel/perp identity for a random extension of Y by K or K ⊕ K
    let kp = if rng.gen_bool(0.5) { k.clone() } else { direct_sum2(&k, &k).sum };
    let e1 = ExtSpace::with_presentation(form.ext.presentation().clone(), &kp);
    let seq = e1.realize(&random_vec(rng, p, e1.dim()));
    let left = connecting_left(c, &seq)?;
    let right = connecting_right_with(form.ext.presentation(), &seq, &k)?;
    let ker = left.kernel();
    if !ker.contains(&stable.trivial) || stable.project(&ker) != form.perp(&right.image()) {
        bad.push("Ker c(C, ξ) = (Im c(ξ, τC))^⊥".to_string());
    }

    // Γ(C)-balance
    let x = random_vec(rng, p, form.ext.dim());
    let f = random_hom(rng, &stable.hom);
    let g = random_hom(rng, &HomSpace::new(c, c)?);
    let tg = tau_morphism_with(&g, &form.translate, &form.translate)?;
    let pushed = form.ext.pushout_class(&form.ext, &x, &tg);
    if form.value(&pushed, &f)? != form.value(&x, &f.compose(&g))? {
        bad.push("Γ-balance".to_string());
    }

    // naturality in Y along t: Y -> Y'
    let y2 = fx.random_object(rng);
    let hom_t = HomSpace::new(&y, &y2)?;
    if hom_t.dim() > 0 {
        let t = random_hom(rng, &hom_t);
        let form2: PairingForm = ar_pairing(c, &y2)?;
        let x2 = random_vec(rng, p, form2.ext.dim());
        let seq2 = form2.ext.realize(&x2);
        let pulled = form.ext.pullback_class(&seq2, &t)?;
        if form2.value(&x2, &t.compose(&f))? != form.value(&pulled, &f)? {
            bad.push("naturality in Y".to_string());
        }
    }
    Ok(bad)
}
