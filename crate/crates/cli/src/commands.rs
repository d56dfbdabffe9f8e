//! Command dispatch.

use std::collections::BTreeMap;

use auslander::algebra::{submodule_lattice, SubmoduleLattice};
use auslander::ar::{ar_pairing, stable_hom, tau, tau_inverse};
use auslander::decompose::{decompose, is_isomorphic};
use auslander::ext::ext_space;
use auslander::hom::HomSpace;
use auslander::modules::{ext_as_gamma_module, stablehom_as_gammaop_module};
use auslander::triangle::{
    delta, determined_by_kernel, determined_oracle, eta, gamma, indecomposables, is_right_minimal,
    present_objects_check, right_minimal_version, ringel_f, universal_extension_with, verify_triangle,
};
use auslander::{RepMorphism, Representation, Subspace};
use clap::Subcommand;
use serde_json::{json, Value};

use crate::report::{dims_text, rows_text, Report};
use crate::workspace::Workspace;
use crate::CliError;

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Basis of Hom(X, Y)
    Hom {
        #[arg(long = "X")]
        x: String,
        #[arg(long = "Y")]
        y: String,
    },
    /// Dimension of Ext¹(Y, Z)
    Ext {
        #[arg(long = "Y")]
        y: String,
        #[arg(long = "Z")]
        z: String,
    },
    /// Auslander-Reiten translate τX, or τ⁻¹X with --inverse
    Tau {
        #[arg(long = "X")]
        x: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Hom(C, Y) modulo projectively trivial maps
    Stablehom {
        #[arg(long = "C")]
        c: String,
        #[arg(long = "Y")]
        y: String,
    },
    /// Matrix of the duality pairing Ext¹(Y, τC) x stable Hom(C, Y) -> F_p
    Pairing {
        #[arg(long = "C")]
        c: String,
        #[arg(long = "Y")]
        y: String,
    },
    /// Submodule lattice of Ext¹(Y, K) over End(K), or of stable Hom(C, Y) over End(C)^op
    Lattice {
        #[arg(long = "Y")]
        y: String,
        #[arg(long = "K", conflicts_with = "c", required_unless_present = "c")]
        k: Option<String>,
        #[arg(long = "C")]
        c: Option<String>,
    },
    /// Universal extension of Y by a submodule L of Ext¹(Y, K) (default: all of it)
    UniversalExt {
        #[arg(long = "Y")]
        y: String,
        #[arg(long = "K")]
        k: String,
        #[arg(long = "L")]
        l: Option<String>,
    },
    /// δ(α) ⊆ Ext¹(Y, K) for an epimorphism α onto Y
    Delta {
        #[arg(long)]
        alpha: String,
        #[arg(long = "K")]
        k: String,
    },
    /// γ(L) = L^⊥ in stable Hom(C, Y), for L ⊆ Ext¹(Y, τC)
    Gamma {
        #[arg(long = "C")]
        c: String,
        #[arg(long = "Y")]
        y: String,
        #[arg(long = "L")]
        l: String,
    },
    /// η(α) = Im Hom(C, α) in stable Hom(C, Y)
    Eta {
        #[arg(long = "C")]
        c: String,
        #[arg(long)]
        alpha: String,
    },
    /// Right minimality of α and a right minimal version of an epimorphism
    Minimal {
        #[arg(long)]
        alpha: String,
    },
    /// Right C-determinedness of α: brute force over a universe and the kernel criterion
    Determined {
        #[arg(long)]
        alpha: String,
        #[arg(long = "C")]
        c: String,
    },
    /// Verify the bijection triangle for (C, Y)
    Triangle {
        #[arg(long = "C")]
        c: String,
        #[arg(long = "Y")]
        y: String,
    },
    /// F(θ) for a functional θ on stable Hom(C', Y), C' in add C (default C' = C)
    Ringel {
        #[arg(long = "C")]
        c: String,
        #[arg(long = "Y")]
        y: String,
        #[arg(long = "Cprime")]
        c_prime: Option<String>,
        #[arg(long)]
        theta: String,
    },
    /// Present objects as quotients of X̄ ⊕ K^n
    Present {
        #[arg(long = "C")]
        c: String,
        #[arg(long = "Y")]
        y: String,
    },
    /// All indecomposables of a Dynkin quiver
    Indecomposables,
}

/// Settings resolved from the flags and the workspace config.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub universe: Option<Vec<String>>,
}

pub fn run_command(ws: &Workspace, command: &Command, opts: &Options) -> Result<Report, CliError> {
    match command {
        Command::Hom { x, y } => {
            let h = HomSpace::new(&ws.module(x)?, &ws.module(y)?)?;
            let mut r = Report::new("hom");
            r.line(format!("dim Hom({x}, {y}) = {}", h.dim()));
            for (i, f) in h.basis().iter().enumerate() {
                r.line(format!("  basis {i}: {}", morphism_text(ws, f)));
            }
            r.data =
                json!({"dim": h.dim(), "basis": h.basis().iter().map(|f| morphism_json(ws, f)).collect::<Vec<_>>()});
            Ok(r)
        }
        Command::Ext { y, z } => {
            let e = ext_space(&ws.module(y)?, &ws.module(z)?)?;
            let mut r = Report::new("ext");
            r.line(format!("dim Ext¹({y}, {z}) = {}", e.dim()));
            r.data = json!({"dim": e.dim(), "hom_p1_dim": e.hom_dim()});
            Ok(r)
        }
        Command::Tau { x, inverse } => {
            let m = ws.module(x)?;
            let t = if *inverse { tau_inverse(&m)? } else { tau(&m)? };
            let name = if *inverse { "τ⁻¹" } else { "τ" };
            let mut r = Report::new("tau");
            if t.is_zero() {
                r.line(format!("{name}{x} is the zero object"));
            } else {
                r.line(format!("{name}{x} has dimension vector {}", dims_text(t.dims())));
                r.line(format!("  {}", module_text(ws, &t)));
                if let Some(n) = find_named(ws, &t)? {
                    r.line(format!("  isomorphic to {n}"));
                }
            }
            r.data = json!({"zero": t.is_zero(), "module": module_json(ws, &t), "isomorphic_to": find_named(ws, &t)?});
            Ok(r)
        }
        Command::Stablehom { c, y } => {
            let s = stable_hom(&ws.module(c)?, &ws.module(y)?)?;
            let mut r = Report::new("stablehom");
            r.line(format!(
                "dim Hom({c}, {y}) = {}, projectively trivial {}, stable {}",
                s.hom.dim(),
                s.trivial.dim(),
                s.dim()
            ));
            r.line(format!("trivial subspace (Hom coordinates): {}", rows_text(&s.trivial.vectors())));
            r.data = json!({
                "hom_dim": s.hom.dim(),
                "trivial": s.trivial.vectors(),
                "stable_dim": s.dim(),
                "representatives": s.representatives().iter().map(|f| morphism_json(ws, f)).collect::<Vec<_>>(),
            });
            Ok(r)
        }
        Command::Pairing { c, y } => {
            let b = ar_pairing(&ws.module(c)?, &ws.module(y)?)?;
            let mut r = Report::new("pairing");
            r.line(format!(
                "pairing Ext¹({y}, τ{c}) x stable Hom({c}, {y}): {}x{}, rank {}",
                b.matrix.rows(),
                b.matrix.cols(),
                b.matrix.rank()
            ));
            for row in b.matrix.row_vectors() {
                r.line(format!("  [{}]", row.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")));
            }
            r.data = json!({"matrix": b.matrix.row_vectors(), "rank": b.matrix.rank(), "tau_c": module_json(ws, &b.translate.tau)});
            Ok(r)
        }
        Command::Lattice { y, k, c } => {
            let ym = ws.module(y)?;
            let (module, label) = match (k, c) {
                (Some(k), _) => (ext_as_gamma_module(&ym, &ws.module(k)?)?.module, format!("Ext¹({y}, {k})")),
                (None, Some(c)) => {
                    (stablehom_as_gammaop_module(&ws.module(c)?, &ym)?.module, format!("stable Hom({c}, {y})"))
                }
                (None, None) => return Err(CliError::Input("lattice needs --K or --C".into())),
            };
            let lat = submodule_lattice(&module)?;
            let mut r = Report::new("lattice");
            r.line(format!("{label}: dimension {}, {} submodules", module.dim(), lat.len()));
            r.table(&["#", "dim", "basis"], lattice_rows(&lat));
            r.line(format!(
                "covers: {}",
                lat.covers.iter().map(|(a, b)| format!("{a}<{b}")).collect::<Vec<_>>().join(" ")
            ));
            r.data = json!({
                "dim": module.dim(),
                "members": lat.members.iter().map(Subspace::vectors).collect::<Vec<_>>(),
                "covers": lat.covers,
            });
            Ok(r)
        }
        Command::UniversalExt { y, k, l } => {
            let (ym, km) = (ws.module(y)?, ws.module(k)?);
            let m = ext_as_gamma_module(&ym, &km)?;
            let l = match l {
                Some(s) => parse_subspace(ws.p, m.ext.dim(), s)?,
                None => Subspace::full(ws.p, m.ext.dim()),
            };
            let ue = universal_extension_with(&m, &decompose(&km)?, &l)?;
            let mut r = Report::new("universal-ext");
            r.line(format!("L = {} in Ext¹({y}, {k}) of dimension {}", rows_text(&l.vectors()), m.ext.dim()));
            r.line(format!("kernel K' {} = {}", dims_text(ue.seq.kernel.dims()), summary_text(&ue.seq.kernel)?));
            r.line(format!("middle term {}: {}", dims_text(ue.middle().dims()), module_text(ws, ue.middle())));
            if let Some(n) = find_named(ws, ue.middle())? {
                r.line(format!("  middle term is isomorphic to {n}"));
            }
            r.line(format!("epimorphism: {}", morphism_text(ws, ue.alpha())));
            r.data = json!({
                "L": l.vectors(),
                "kernel": module_json(ws, &ue.seq.kernel),
                "middle": module_json(ws, ue.middle()),
                "iota": morphism_json(ws, &ue.seq.iota),
                "alpha": morphism_json(ws, ue.alpha()),
                "class": ue.class,
            });
            Ok(r)
        }
        Command::Delta { alpha, k } => {
            let a = ws.morphism(alpha)?;
            let d = delta(&a, &ws.module(k)?)?;
            let mut r = Report::new("delta");
            r.line(format!("δ({alpha}) = {} (dimension {})", rows_text(&d.vectors()), d.dim()));
            r.data = json!({"delta": d.vectors(), "ambient_dim": d.ambient_dim()});
            Ok(r)
        }
        Command::Gamma { c, y, l } => {
            let (cm, ym) = (ws.module(c)?, ws.module(y)?);
            let ext_dim = ext_space(&ym, &tau(&cm)?)?.dim();
            let l = parse_subspace(ws.p, ext_dim, l)?;
            let g = gamma(&cm, &ym, &l)?;
            let mut r = Report::new("gamma");
            r.line(format!("γ(L) = {} (dimension {} of {})", rows_text(&g.vectors()), g.dim(), g.ambient_dim()));
            r.data = json!({"L": l.vectors(), "gamma": g.vectors(), "ambient_dim": g.ambient_dim()});
            Ok(r)
        }
        Command::Eta { c, alpha } => {
            let e = eta(&ws.module(c)?, &ws.morphism(alpha)?)?;
            let mut r = Report::new("eta");
            r.line(format!("η({alpha}) = {} (dimension {} of {})", rows_text(&e.vectors()), e.dim(), e.ambient_dim()));
            r.data = json!({"eta": e.vectors(), "ambient_dim": e.ambient_dim()});
            Ok(r)
        }
        Command::Minimal { alpha } => {
            let a = ws.morphism(alpha)?;
            let minimal = is_right_minimal(&a)?;
            let mut r = Report::new("minimal");
            r.line(format!("{alpha} is {}right minimal", if minimal { "" } else { "not " }));
            let mut data = json!({"right_minimal": minimal});
            if a.is_epi() {
                let mv = right_minimal_version(&a)?;
                r.line(format!("right minimal version: {}", morphism_text(ws, &mv.alpha)));
                if let Some(n) = find_named(ws, mv.alpha.source())? {
                    r.line(format!("  source is isomorphic to {n}"));
                }
                data["minimal_version"] = morphism_json(ws, &mv.alpha);
                data["source"] = module_json(ws, mv.alpha.source());
            }
            r.data = data;
            Ok(r)
        }
        Command::Determined { alpha, c } => {
            let a = ws.morphism(alpha)?;
            let cm = ws.module(c)?;
            let universe = universe(ws, opts)?;
            let oracle = determined_oracle(&a, &cm, &universe)?;
            let criterion = determined_by_kernel(&a, &cm)?;
            let mut r = Report::new("determined");
            r.line(format!("{alpha} right {c}-determined (oracle over {} objects): {oracle}", universe.len()));
            r.line(format!("kernel criterion: {criterion}"));
            r.verdict = Some(oracle == criterion);
            r.data = json!({"oracle": oracle, "kernel_criterion": criterion, "universe_size": universe.len()});
            Ok(r)
        }
        Command::Triangle { c, y } => {
            let cm = ws.module(c)?;
            let universe = universe(ws, opts).ok();
            let rep = verify_triangle(&cm, &ws.module(y)?, universe.as_deref())?;
            let mut r = Report::new("triangle");
            r.line(format!(
                "C={c} {}  Y={y} {}  K=τC {}",
                dims_text(&rep.c_dims),
                dims_text(&rep.y_dims),
                dims_text(&rep.k_dims)
            ));
            for n in &rep.notes {
                r.line(format!("note: {n}"));
            }
            r.line(format!(
                "dim Ext¹(Y, K) = {}, dim stable Hom(C, Y) = {}, {} submodules",
                rep.ext_dim, rep.stable_dim, rep.lattice_size
            ));
            let rows = rep
                .records
                .iter()
                .map(|x| {
                    vec![
                        rows_text(&x.l),
                        dims_text(&x.middle_dims),
                        dims_text(&x.kernel_dims),
                        rows_text(&x.eta),
                        rows_text(&x.gamma),
                        x.determined.map_or("-".into(), |d| d.to_string()),
                        if x.passed { "ok" } else { "FAIL" }.to_string(),
                    ]
                })
                .collect();
            r.table(&["L", "middle", "kernel", "eta", "gamma", "determined", "status"], rows);
            r.line(format!(
                "order reversal via factorization: {}, via γ: {}, γ onto stable lattice: {}",
                rep.order_delta, rep.order_gamma, rep.gamma_onto
            ));
            r.verdict = Some(rep.passed);
            r.data = serde_json::to_value(&rep).expect("report serializes");
            Ok(r)
        }
        Command::Ringel { c, y, c_prime, theta } => {
            let cm = ws.module(c)?;
            let cp = match c_prime {
                Some(n) => ws.module(n)?,
                None => cm.clone(),
            };
            let theta = parse_vector(ws.p, theta)?;
            let rep = ringel_f(&cp, &cm, &ws.module(y)?, &theta)?;
            let mut r = Report::new("ringel");
            r.line(format!("F(θ) via the pairing: {}", rows_text(&rep.composite)));
            r.line(format!("F(θ) via the formula: {}", rows_text(&rep.formula)));
            if let Some(b) = rep.largest_in_kernel {
                r.line(format!("largest submodule inside Ker θ: {b}"));
            }
            r.verdict = Some(rep.passed);
            r.data = serde_json::to_value(&rep).expect("report serializes");
            Ok(r)
        }
        Command::Present { c, y } => {
            let rep = present_objects_check(&ws.module(c)?, &ws.module(y)?)?;
            let mut r = Report::new("present");
            r.line(format!("n = {}, X̄ {}", rep.n, dims_text(&rep.xbar_dims)));
            for n in &rep.notes {
                r.line(format!("note: {n}"));
            }
            let rows = rep
                .records
                .iter()
                .map(|x| {
                    vec![
                        rows_text(&x.l),
                        dims_text(&x.middle_dims),
                        dims_text(&x.summand_dims),
                        dims_text(&x.kernel_dims),
                        if x.epi && x.summand_of_power { "ok" } else { "FAIL" }.to_string(),
                    ]
                })
                .collect();
            r.table(&["L", "X_L", "K''", "kernel", "status"], rows);
            r.line(format!(
                "present objects: {}",
                rep.objects.iter().map(|d| dims_text(d)).collect::<Vec<_>>().join(" ")
            ));
            r.verdict = Some(rep.passed);
            r.data = serde_json::to_value(&rep).expect("report serializes");
            Ok(r)
        }
        Command::Indecomposables => {
            let cat = indecomposables(&ws.quiver, ws.p)?;
            let mut r = Report::new("indecomposables");
            r.line(format!("{} indecomposables", cat.len()));
            let mut rows = Vec::new();
            let mut list = Vec::new();
            for (i, x) in cat.iter().enumerate() {
                let named = find_named(ws, x)?;
                rows.push(vec![i.to_string(), dims_text(x.dims()), named.clone().unwrap_or_else(|| "-".into())]);
                list.push(json!({"module": module_json(ws, x), "named": named}));
            }
            r.table(&["#", "dims", "named"], rows);
            r.data = json!({"count": cat.len(), "indecomposables": list});
            Ok(r)
        }
    }
}

fn universe(ws: &Workspace, opts: &Options) -> Result<Vec<Representation>, CliError> {
    match opts.universe.as_ref().or(ws.config.universe.as_ref()) {
        Some(names) => names.iter().map(|n| ws.module(n)).collect(),
        None => indecomposables(&ws.quiver, ws.p).map_err(|e| match e {
            auslander::Error::NotDynkin => {
                CliError::Input("quiver is not of Dynkin type; pass --universe NAME,...".into())
            }
            e => e.into(),
        }),
    }
}

fn lattice_rows(lat: &SubmoduleLattice) -> Vec<Vec<String>> {
    lat.members
        .iter()
        .enumerate()
        .map(|(i, s)| vec![i.to_string(), s.dim().to_string(), rows_text(&s.vectors())])
        .collect()
}

/// The workspace modules isomorphic to `x`, comma separated.
fn find_named(ws: &Workspace, x: &Representation) -> Result<Option<String>, CliError> {
    let mut names = Vec::new();
    for (name, m) in &ws.modules {
        if m.dims() == x.dims() && is_isomorphic(m, x)? {
            names.push(name.as_str());
        }
    }
    Ok((!names.is_empty()).then(|| names.join(", ")))
}

fn summary_text(x: &Representation) -> Result<String, CliError> {
    if x.is_zero() {
        return Ok("0".into());
    }
    let parts: Vec<String> =
        decompose(x)?.summary().iter().map(|s| format!("{}^{}", dims_text(&s.dims), s.multiplicity)).collect();
    Ok(parts.join(" ⊕ "))
}

fn module_json(ws: &Workspace, x: &Representation) -> Value {
    let q = &ws.quiver;
    let dims: BTreeMap<&str, usize> = q.vertices().iter().map(String::as_str).zip(x.dims().iter().copied()).collect();
    let maps: BTreeMap<&str, Vec<Vec<u64>>> =
        q.arrows().iter().enumerate().map(|(i, a)| (a.name.as_str(), x.map(i).to_rows_u64())).collect();
    json!({"dims": dims, "maps": maps})
}

fn morphism_json(ws: &Workspace, f: &RepMorphism) -> Value {
    let comps: BTreeMap<&str, Vec<Vec<u64>>> =
        ws.quiver.vertices().iter().map(String::as_str).zip(f.components().iter().map(|m| m.to_rows_u64())).collect();
    json!({"components": comps})
}

fn module_text(ws: &Workspace, x: &Representation) -> String {
    let parts: Vec<String> =
        ws.quiver.arrows().iter().enumerate().map(|(i, a)| format!("{}={}", a.name, matrix_text(x.map(i)))).collect();
    if parts.is_empty() {
        dims_text(x.dims())
    } else {
        parts.join(" ")
    }
}

fn morphism_text(ws: &Workspace, f: &RepMorphism) -> String {
    ws.quiver
        .vertices()
        .iter()
        .zip(f.components())
        .map(|(v, m)| format!("{v}:{}", matrix_text(m)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn matrix_text(m: &auslander::Matrix) -> String {
    if m.rows() == 0 || m.cols() == 0 {
        "[]".into()
    } else {
        format!("[{}]", rows_text(&m.row_vectors()))
    }
}

pub fn parse_vector(p: u32, s: &str) -> Result<Vec<u32>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let v: u64 = t.trim().parse().map_err(|_| CliError::Input(format!("not an integer: `{t}`")))?;
            if v >= p as u64 {
                return Err(CliError::Input(format!("entry {v} is not reduced modulo {p}")));
            }
            Ok(v as u32)
        })
        .collect()
}

/// `1,0;0,1` (rows of a spanning set), `0` for the zero space, `all` for everything.
pub fn parse_subspace(p: u32, ambient: usize, s: &str) -> Result<Subspace, CliError> {
    match s.trim() {
        "all" => return Ok(Subspace::full(p, ambient)),
        "0" | "" => return Ok(Subspace::zero(p, ambient)),
        _ => {}
    }
    let rows = s.split(';').map(|r| parse_vector(p, r)).collect::<Result<Vec<_>, _>>()?;
    if let Some(r) = rows.iter().find(|r| r.len() != ambient) {
        return Err(CliError::Input(format!("vector of length {} in a space of dimension {ambient}", r.len())));
    }
    Ok(Subspace::span(p, ambient, rows))
}
