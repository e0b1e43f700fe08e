use picard2::json::{self as j, DocError};
use picard2::oracle::{self, PredicateKind, SearchOptions, DEFAULT_CANDIDATE_CAP};
use picard2::ring2mod as rm;
use picard2::sgp2::{self, check_2morphism, Homotopy};
use picard2::{abgroup::AbHom, BigInt, Error};
use serde_json::{json, Value};

use crate::{Failure, Outcome, Predicate};

type Z = BigInt;

impl From<DocError> for Failure {
    fn from(e: DocError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn lib(e: Error) -> Failure {
    match e {
        Error::Overflow { .. } => Failure::Guard(e.to_string()),
        _ => Failure::Input(e.to_string()),
    }
}

fn done(json: Value, summary: String) -> Result<Outcome, Failure> {
    Ok(Outcome { json, summary, code: 0 })
}

fn verdict(json: Value, summary: String, ok: bool) -> Result<Outcome, Failure> {
    Ok(Outcome { json, summary, code: if ok { 0 } else { 1 } })
}

fn expect_type(doc: &Value, allowed: &[&str]) -> Result<String, Failure> {
    match j::document_type(doc) {
        Some(t) if allowed.contains(&t) => Ok(t.to_string()),
        Some(t) => Err(Failure::Input(format!("$: document type {t:?} not accepted here (expected {allowed:?})"))),
        None => Err(Failure::Input("$: missing field \"type\"".into())),
    }
}

pub fn pi0(doc: &Value) -> Result<Outcome, Failure> {
    expect_type(doc, &["sgp2"])?;
    let a = j::complex_from_json::<Z>(doc, "$")?;
    let g = sgp2::pi0(&a).0;
    done(j::group_to_json(&g.canonical_group()), format!("pi0 = {g}"))
}

pub fn pi1(doc: &Value) -> Result<Outcome, Failure> {
    expect_type(doc, &["sgp2"])?;
    let a = j::complex_from_json::<Z>(doc, "$")?;
    let g = sgp2::pi1(&a);
    done(j::group_to_json(&g.canonical_group()), format!("pi1 = {g}"))
}

pub fn dis(doc: &Value) -> Result<Outcome, Failure> {
    if expect_type(doc, &["fgab", "abhom"])? == "fgab" {
        let g = j::group_from_json::<Z>(doc, "$")?;
        done(j::complex_to_json(&sgp2::dis(&g)), format!("dis({g})"))
    } else {
        let f = j::hom_from_json::<Z>(doc, "$")?;
        let summary = format!("dis_hom: dis({}) -> dis({})", f.src(), f.dst());
        done(j::chain_map_to_json(&sgp2::dis_hom(&f)), summary)
    }
}

fn kind(p: Predicate) -> Option<PredicateKind> {
    match p {
        Predicate::Faithful => Some(PredicateKind::Faithful),
        Predicate::Full => Some(PredicateKind::Full),
        Predicate::Esssurj => Some(PredicateKind::EssentiallySurjective),
        Predicate::Chainhom | Predicate::Htpy => None,
    }
}

fn predicate_name(p: Predicate) -> &'static str {
    match kind(p) {
        Some(k) => k.name(),
        None if p == Predicate::Chainhom => "chainhom",
        None => "htpy",
    }
}

pub fn check(doc: &Value, p: Predicate) -> Result<Outcome, Failure> {
    let ok = match p {
        Predicate::Chainhom => {
            expect_type(doc, &["sgp2hom"])?;
            let (src, dst, f1, f0) = j::chain_map_parts_from_json::<Z>(doc, "$")?;
            let f1 = AbHom::new(src.c1().clone(), dst.c1().clone(), f1);
            let f0 = AbHom::new(src.c0().clone(), dst.c0().clone(), f0);
            match (f1, f0) {
                (Ok(f1), Ok(f0)) => sgp2::ChainMap::new(src, dst, f1, f0).is_ok(),
                _ => false,
            }
        }
        Predicate::Htpy => {
            expect_type(doc, &["htpy"])?;
            let (f, g, t) = j::homotopy_parts_from_json::<Z>(doc, "$")?;
            let t = AbHom::new(f.src().c0().clone(), f.dst().c1().clone(), t);
            matches!(t.map(|t| Homotopy::new(f, g, t)), Ok(Ok(h)) if check_2morphism(&h))
        }
        _ => {
            expect_type(doc, &["sgp2hom"])?;
            let f = j::chain_map_from_json::<Z>(doc, "$")?;
            match p {
                Predicate::Faithful => sgp2::is_faithful(&f),
                Predicate::Full => sgp2::is_full(&f),
                _ => sgp2::is_essentially_surjective(&f),
            }
        }
    };
    let name = predicate_name(p);
    verdict(json!({"predicate": name, "verdict": ok}), format!("{name}: {ok}"), ok)
}

pub fn kernel(doc: &Value) -> Result<Outcome, Failure> {
    expect_type(doc, &["sgp2hom"])?;
    let f = j::chain_map_from_json::<Z>(doc, "$")?;
    let k = sgp2::kernel2(&f).map_err(lib)?;
    let summary = format!("Ker: pi0 = {}, pi1 = {}", sgp2::pi0(&k.complex).0, sgp2::pi1(&k.complex));
    let out = json!({
        "type": "kernel2",
        "complex": j::complex_to_json(&k.complex),
        "incl": j::chain_map_to_json(&k.incl),
        "eps": j::bare_homotopy_to_json(&k.eps),
    });
    done(out, summary)
}

pub fn cokernel(doc: &Value) -> Result<Outcome, Failure> {
    expect_type(doc, &["sgp2hom"])?;
    let f = j::chain_map_from_json::<Z>(doc, "$")?;
    let q = sgp2::cokernel2(&f).map_err(lib)?;
    let summary = format!("Coker: pi0 = {}, pi1 = {}", sgp2::pi0(&q.complex).0, sgp2::pi1(&q.complex));
    let out = json!({
        "type": "cokernel2",
        "complex": j::complex_to_json(&q.complex),
        "proj": j::chain_map_to_json(&q.proj),
        "pi": j::bare_homotopy_to_json(&q.pi),
    });
    done(out, summary)
}

pub fn exact2(doc: &Value) -> Result<Outcome, Failure> {
    expect_type(doc, &["triple"])?;
    let t = j::triple_from_json::<Z>(doc, "$")?;
    let cert = sgp2::two_exactness_witnesses(&t.gamma, &t.sigma, &t.phi).map_err(lib)?;
    let (c1, c2) = (cert.condition1(), cert.condition2());
    let out = json!({
        "type": "exact2",
        "verdict": c1 && c2,
        "condition1": c1,
        "condition2": c2,
        "gamma0": {
            "full": cert.gamma0_full,
            "essentially_surjective": cert.gamma0_essentially_surjective,
            "faithful": cert.gamma0_faithful,
            "map": j::chain_map_to_json(&cert.gamma0),
        },
        "sigma0": {
            "full": cert.sigma0_full,
            "faithful": cert.sigma0_faithful,
            "essentially_surjective": cert.sigma0_essentially_surjective,
            "map": j::chain_map_to_json(&cert.sigma0),
        },
    });
    verdict(out, format!("2-exact: {} (condition 1: {c1}, condition 2: {c2})", c1 && c2), c1 && c2)
}

pub fn extension(doc: &Value) -> Result<Outcome, Failure> {
    expect_type(doc, &["triple"])?;
    let t = j::triple_from_json::<Z>(doc, "$")?;
    let r = sgp2::is_extension(&t.gamma, &t.sigma, &t.phi).map_err(lib)?;
    let ok = r.condition1 && r.agree();
    let out = json!({
        "type": "extension",
        "verdict": ok,
        "condition1": r.condition1,
        "condition2": r.condition2,
        "condition3": r.condition3,
    });
    let summary = format!("extension: {ok} (conditions: {}, {}, {})", r.condition1, r.condition2, r.condition3);
    verdict(out, summary, ok)
}

pub fn present(doc: &Value) -> Result<Outcome, Failure> {
    expect_type(doc, &["sgp2"])?;
    let a = j::complex_from_json::<Z>(doc, "$")?;
    let (p, f, cert) = sgp2::projective_presentation(&a).map_err(lib)?;
    let out = json!({
        "type": "presentation",
        "p": j::complex_to_json(&p),
        "f": j::chain_map_to_json(&f),
        "cert": {
            "holds": cert.holds(),
            "p_discrete_free": cert.p_discrete_free,
            "f_essentially_surjective": cert.f_essentially_surjective,
            "triangle_strict": cert.triangle_strict,
            "cover": j::hom_to_json(&cert.cover),
            "triangle": j::bare_homotopy_to_json(&cert.triangle),
        },
    });
    let summary =
        format!("P = dis(Z^{}), pi0 = {}, certificate holds: {}", p.c0().gens(), cert.cover.dst(), cert.holds());
    verdict(out, summary, cert.holds())
}

pub fn present_mod(doc: &Value) -> Result<Outcome, Failure> {
    expect_type(doc, &["mod2"])?;
    let m = j::mod2_from_json(doc, "$")?;
    let (p, f, cert) = rm::module_projective_presentation(&m).map_err(lib)?;
    let out = json!({
        "type": "presentation-mod",
        "p": j::mod2_to_json(&p),
        "f": j::mod2hom_to_json(&f),
        "cert": {
            "holds": cert.holds(),
            "p_discrete_free": cert.p_discrete_free,
            "f_essentially_surjective": cert.f_essentially_surjective,
            "triangle_strict": cert.triangle_strict,
            "cover": j::modhom_to_json(&cert.cover),
        },
    });
    let summary =
        format!("|P| = {}, |pi0| = {}, certificate holds: {}", p.m0().size(), cert.cover.dst().size(), cert.holds());
    verdict(out, summary, cert.holds())
}

pub fn lift(doc: &Value) -> Result<Outcome, Failure> {
    expect_type(doc, &["liftproblem"])?;
    let (g, f) = j::lift_problem_from_json::<Z>(doc, "$")?;
    let (gp, h) = sgp2::lift_discrete_free(&g, &f).map_err(lib)?;
    let ok = check_2morphism(&h);
    let out = json!({
        "type": "lift",
        "verdict": ok,
        "g_prime": j::chain_map_to_json(&gp),
        "h": j::bare_homotopy_to_json(&h),
    });
    verdict(out, format!("lift found, 2-morphism valid: {ok}"), ok)
}

pub fn lift_mod(doc: &Value) -> Result<Outcome, Failure> {
    expect_type(doc, &["liftproblem-mod"])?;
    let (g, f) = j::lift_problem_mod_from_json(doc, "$")?;
    let (gp, h) = rm::lift_discrete_free_mod(&g, &f).map_err(lib)?;
    let ok = rm::check_mod_2morphism(&h);
    let out = json!({
        "type": "lift-mod",
        "verdict": ok,
        "g_prime": j::mod2hom_to_json(&gp),
        "t": h.t().map(),
    });
    verdict(out, format!("lift found, 2-morphism valid: {ok}"), ok)
}

pub fn pi0_ring(doc: &Value) -> Result<Outcome, Failure> {
    expect_type(doc, &["ring2"])?;
    let r = j::ring2_from_json(doc, "$")?;
    let (q, proj) = rm::pi0_ring_with_projection(&r).map_err(lib)?;
    let mut out = j::finring_to_json(&q);
    out["projection"] = json!(proj);
    done(out, format!("pi0 ring of order {}", q.size()))
}

pub fn pi0_mod(doc: &Value) -> Result<Outcome, Failure> {
    expect_type(doc, &["mod2"])?;
    let m = j::mod2_from_json(doc, "$")?;
    let (q, proj) = rm::pi0_module_with_projection(&m).map_err(lib)?;
    let mut out = j::finmod_to_json(&q);
    out["projection"] = json!(proj.map());
    done(out, format!("pi0 module of order {}", q.size()))
}

pub fn oracle_predicate(doc: &Value, p: Predicate) -> Result<Outcome, Failure> {
    expect_type(doc, &["sgp2hom"])?;
    let k = kind(p).ok_or_else(|| Failure::Input("oracle predicates are faithful, full and esssurj".into()))?;
    let f = j::chain_map_from_json::<Z>(doc, "$")?;
    let v = oracle::oracle_predicate(&f, k).map_err(lib)?;
    let out = json!({
        "type": "oracle-predicate",
        "predicate": k.name(),
        "verdict": v.verdict,
        "objects": {"src": v.src_objects, "dst": v.dst_objects},
        "morphisms": {"src": v.src_morphisms, "dst": v.dst_morphisms},
    });
    verdict(out, format!("{} (oracle): {}", k.name(), v.verdict), v.verdict)
}

fn candidate_cap() -> Result<u64, Failure> {
    match std::env::var("PICARD2_CANDIDATE_CAP") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("PICARD2_CANDIDATE_CAP: not a non-negative integer: {s:?}"))),
        Err(_) => Ok(DEFAULT_CANDIDATE_CAP),
    }
}

pub fn oracle_lift(doc: &Value, jobs: usize) -> Result<Outcome, Failure> {
    expect_type(doc, &["liftproblem"])?;
    let (g, f) = j::lift_problem_from_json::<Z>(doc, "$")?;
    let opts = SearchOptions { cap: candidate_cap()?, jobs };
    let r = oracle::oracle_lift_search(&g, &f, opts).map_err(lib)?;
    let found = r.found.is_some();
    let mut out = json!({
        "type": "oracle-lift",
        "found": found,
        "candidates": r.candidates,
        "space": r.space,
    });
    if let Some((gp, h)) = &r.found {
        out["verified"] = json!(check_2morphism(h));
        out["g_prime"] = j::chain_map_to_json(gp);
        out["h"] = j::bare_homotopy_to_json(h);
    }
    let summary =
        format!("lift {} after {} of {} candidates", if found { "found" } else { "not found" }, r.candidates, r.space);
    verdict(out, summary, found)
}

pub fn oracle_verify_all(doc: &Value) -> Result<Outcome, Failure> {
    expect_type(doc, &["sgp2hom"])?;
    let f = j::chain_map_from_json::<Z>(doc, "$")?;
    let r = oracle::verify_all(&f).map_err(lib)?;
    let axioms = |a: &Result<(), String>| match a {
        Ok(()) => json!(true),
        Err(e) => json!(e),
    };
    let predicates: serde_json::Map<String, Value> = r
        .predicates
        .iter()
        .map(|(k, o, s)| (k.name().to_string(), json!({"oracle": o, "formula": s, "agree": o == s})))
        .collect();
    let ok = r.all_agree();
    let out = json!({
        "type": "oracle-verify-all",
        "verdict": ok,
        "axioms": {"src": axioms(&r.axioms_src), "dst": axioms(&r.axioms_dst)},
        "predicates": predicates,
        "objects": {"src": r.src_objects, "dst": r.dst_objects},
        "morphisms": {"src": r.src_morphisms, "dst": r.dst_morphisms},
    });
    verdict(out, format!("oracle and formulas agree: {ok}"), ok)
}
