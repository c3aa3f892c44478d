//! The machine-checked law suite.
//!
//! Every algebraic law of the quantifiers, inter-modalities, and the
//! parts lattice is evaluated over all pairs of a model's parts (with the
//! top and bottom parts added when absent). Constraint quantification is
//! exhaustive over all `2^n` predicates when a carrier has at most 6
//! behaviors, and otherwise uses 64 seeded constraints. Failures are
//! data: each failing report carries a replayable counterexample.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::behavior::BehaviorType;
use crate::constraint::{entails, Constraint};
use crate::model::SystemModel;
use crate::modal::{exists_along, forall_along, pullback_along, InterModal};
use crate::part::{
    compatible, determines, disjoint, join, meet, order_equivalents, part_leq, Part,
    PartOrderWitness,
};

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub parts: Vec<String>,
    pub behaviors: Vec<usize>,
    pub constraints: Vec<String>,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct LawReport {
    pub law: String,
    pub system: String,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
}

/// Names of every law checked by [`law_suite`], in report order.
pub const LAW_NAMES: &[&str] = &[
    "quantifiers.adjoint_exists",
    "quantifiers.adjoint_forall",
    "quantifiers.identity",
    "quantifiers.composition",
    "saturation.exists",
    "saturation.forall",
    "saturation.unit_counit",
    "modalities.de_morgan",
    "modalities.monotone",
    "modalities.ensures_entails_allows",
    "modalities.adjunction",
    "modalities.distributive",
    "modalities.pointwise_recovery",
    "roundtrip.adjunction",
    "roundtrip.identity_iff_below",
    "determination.unique",
    "determination.order_equivalents",
    "compatibility.symmetric",
    "disjointness.strong_implies_disjoint",
    "lattice.bounds",
    "lattice.universal",
];

struct Ctx {
    parts: Vec<(String, Part)>,
    /// `witness[i][j]`: factor witness for `parts[j] <= parts[i]`.
    witness: Vec<Vec<Option<PartOrderWitness>>>,
    /// `modal[i][j]`: compatibility matrix from `parts[i]` to `parts[j]`.
    modal: Vec<Vec<InterModal>>,
    pools: Vec<Vec<Constraint>>,
    top: Part,
    /// Witness `top -> parts[i]` for the whole-system quantifiers.
    from_top: Vec<PartOrderWitness>,
    pool_sys: Vec<Constraint>,
}

fn pool(carrier: &Arc<BehaviorType>, rng: &mut ChaCha8Rng) -> Vec<Constraint> {
    let n = carrier.len();
    if n <= 6 {
        (0..(1u64 << n)).map(|m| Constraint::from_mask(carrier, m)).collect()
    } else {
        let mut out = vec![Constraint::all_false(carrier), Constraint::all_true(carrier)];
        while out.len() < 64 {
            out.push(Constraint::from_fn(carrier, |_, _| rng.gen::<bool>()));
        }
        out
    }
}

impl Ctx {
    fn build(model: &SystemModel, seed: u64) -> Ctx {
        let mut parts: Vec<(String, Part)> = model
            .parts
            .iter()
            .map(|(name, part)| (name.clone(), part.clone()))
            .collect();
        let top = Part::top(&model.system);
        let bottom = Part::bottom(&model.system);
        for (name, extreme) in [("\u{22a4}", &top), ("\u{22a5}", &bottom)] {
            let present = parts
                .iter()
                .any(|(_, p)| p.same_partition(extreme).unwrap_or(false));
            if !present {
                parts.push((name.to_string(), extreme.clone()));
            }
        }

        let k = parts.len();
        let mut witness = Vec::with_capacity(k);
        let mut modal = Vec::with_capacity(k);
        for i in 0..k {
            let mut wrow = Vec::with_capacity(k);
            let mut mrow = Vec::with_capacity(k);
            for j in 0..k {
                wrow.push(part_leq(&parts[j].1, &parts[i].1).expect("same system"));
                mrow.push(InterModal::new(&parts[i].1, &parts[j].1).expect("same system"));
            }
            witness.push(wrow);
            modal.push(mrow);
        }

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pools = parts
            .iter()
            .map(|(_, p)| pool(p.codomain(), &mut rng))
            .collect();
        let pool_sys = pool(top.codomain(), &mut rng);
        let from_top = parts
            .iter()
            .map(|(_, p)| part_leq(p, &top).expect("same system").expect("below top"))
            .collect();

        Ctx { parts, witness, modal, pools, top, from_top, pool_sys }
    }

    fn len(&self) -> usize {
        self.parts.len()
    }

    fn name(&self, i: usize) -> &str {
        &self.parts[i].0
    }

    fn part(&self, i: usize) -> &Part {
        &self.parts[i].1
    }
}

fn ce(
    parts: Vec<&str>,
    behaviors: Vec<usize>,
    constraints: Vec<&Constraint>,
    detail: String,
) -> Counterexample {
    Counterexample {
        parts: parts.into_iter().map(String::from).collect(),
        behaviors,
        constraints: constraints.into_iter().map(Constraint::bitstring).collect(),
        detail,
    }
}

type LawResult = Result<(), Counterexample>;

/// Existential pushforward is left adjoint to pullback.
fn law_adjoint_exists(ctx: &Ctx) -> LawResult {
    for i in 0..ctx.len() {
        for j in 0..ctx.len() {
            let Some(w) = &ctx.witness[i][j] else { continue };
            let pushed: Vec<Constraint> = ctx.pools[i]
                .iter()
                .map(|phi| exists_along(w, phi).expect("typed"))
                .collect();
            let pulled: Vec<Constraint> = ctx.pools[j]
                .iter()
                .map(|psi| pullback_along(w, psi).expect("typed"))
                .collect();
            for (pi, phi) in ctx.pools[i].iter().enumerate() {
                for (qi, psi) in ctx.pools[j].iter().enumerate() {
                    let lhs = entails(&pushed[pi], psi).expect("typed");
                    let rhs = entails(phi, &pulled[qi]).expect("typed");
                    if lhs != rhs {
                        return Err(ce(
                            vec![ctx.name(i), ctx.name(j)],
                            vec![],
                            vec![phi, psi],
                            format!("exists-adjoint sides disagree: {lhs} vs {rhs}"),
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Pullback is left adjoint to the universal pushforward.
fn law_adjoint_forall(ctx: &Ctx) -> LawResult {
    for i in 0..ctx.len() {
        for j in 0..ctx.len() {
            let Some(w) = &ctx.witness[i][j] else { continue };
            let pulled: Vec<Constraint> = ctx.pools[j]
                .iter()
                .map(|psi| pullback_along(w, psi).expect("typed"))
                .collect();
            let alled: Vec<Constraint> = ctx.pools[i]
                .iter()
                .map(|xi| forall_along(w, xi).expect("typed"))
                .collect();
            for (qi, psi) in ctx.pools[j].iter().enumerate() {
                for (pi, xi) in ctx.pools[i].iter().enumerate() {
                    let lhs = entails(&pulled[qi], xi).expect("typed");
                    let rhs = entails(psi, &alled[pi]).expect("typed");
                    if lhs != rhs {
                        return Err(ce(
                            vec![ctx.name(i), ctx.name(j)],
                            vec![],
                            vec![psi, xi],
                            format!("forall-adjoint sides disagree: {lhs} vs {rhs}"),
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Quantifying along the identity witness changes nothing.
fn law_quantifier_identity(ctx: &Ctx) -> LawResult {
    for i in 0..ctx.len() {
        let w = ctx.witness[i][i].as_ref().expect("reflexive");
        for phi in &ctx.pools[i] {
            let e = exists_along(w, phi).expect("typed");
            let d = pullback_along(w, phi).expect("typed");
            let a = forall_along(w, phi).expect("typed");
            if &e != phi || &d != phi || &a != phi {
                return Err(ce(
                    vec![ctx.name(i)],
                    vec![],
                    vec![phi],
                    "identity witness moved a constraint".to_string(),
                ));
            }
        }
    }
    Ok(())
}

/// Quantifiers compose along chains in the part order.
fn law_quantifier_composition(ctx: &Ctx) -> LawResult {
    for i in 0..ctx.len() {
        for j in 0..ctx.len() {
            let Some(w_ij) = &ctx.witness[i][j] else { continue };
            for k in 0..ctx.len() {
                let (Some(w_jk), Some(w_ik)) = (&ctx.witness[j][k], &ctx.witness[i][k]) else {
                    continue;
                };
                for phi in &ctx.pools[i] {
                    let stepped =
                        exists_along(w_jk, &exists_along(w_ij, phi).expect("typed")).expect("typed");
                    let direct = exists_along(w_ik, phi).expect("typed");
                    if stepped != direct {
                        return Err(ce(
                            vec![ctx.name(i), ctx.name(j), ctx.name(k)],
                            vec![],
                            vec![phi],
                            "exists does not compose".to_string(),
                        ));
                    }
                    let stepped =
                        forall_along(w_jk, &forall_along(w_ij, phi).expect("typed")).expect("typed");
                    let direct = forall_along(w_ik, phi).expect("typed");
                    if stepped != direct {
                        return Err(ce(
                            vec![ctx.name(i), ctx.name(j), ctx.name(k)],
                            vec![],
                            vec![phi],
                            "forall does not compose".to_string(),
                        ));
                    }
                }
                for psi in &ctx.pools[k] {
                    let stepped =
                        pullback_along(w_ij, &pullback_along(w_jk, psi).expect("typed"))
                            .expect("typed");
                    let direct = pullback_along(w_ik, psi).expect("typed");
                    if stepped != direct {
                        return Err(ce(
                            vec![ctx.name(i), ctx.name(j), ctx.name(k)],
                            vec![],
                            vec![psi],
                            "pullback does not compose".to_string(),
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Pulled-back existentials saturate along observational equivalence.
fn law_saturation_exists(ctx: &Ctx) -> LawResult {
    let n = ctx.top.system().len();
    for i in 0..ctx.len() {
        let w = &ctx.from_top[i];
        let part = ctx.part(i);
        for phi in &ctx.pool_sys {
            let lhs = pullback_along(w, &exists_along(w, phi).expect("typed")).expect("typed");
            for s in 0..n {
                let direct =
                    (0..n).any(|s2| part.map()[s] == part.map()[s2] && phi.holds(s2));
                if lhs.holds(s) != direct {
                    return Err(ce(
                        vec![ctx.name(i)],
                        vec![s],
                        vec![phi],
                        "saturated existential disagrees with the kernel formula".to_string(),
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Pulled-back universals are the kernel-class core.
fn law_saturation_forall(ctx: &Ctx) -> LawResult {
    let n = ctx.top.system().len();
    for i in 0..ctx.len() {
        let w = &ctx.from_top[i];
        let part = ctx.part(i);
        for phi in &ctx.pool_sys {
            let lhs = pullback_along(w, &forall_along(w, phi).expect("typed")).expect("typed");
            for s in 0..n {
                let direct =
                    (0..n).all(|s2| part.map()[s] != part.map()[s2] || phi.holds(s2));
                if lhs.holds(s) != direct {
                    return Err(ce(
                        vec![ctx.name(i)],
                        vec![s],
                        vec![phi],
                        "universal core disagrees with the kernel formula".to_string(),
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Saturation is inflationary; the core is deflationary.
fn law_saturation_unit_counit(ctx: &Ctx) -> LawResult {
    for i in 0..ctx.len() {
        let w = &ctx.from_top[i];
        for phi in &ctx.pool_sys {
            let sat = pullback_along(w, &exists_along(w, phi).expect("typed")).expect("typed");
            if !entails(phi, &sat).expect("typed") {
                return Err(ce(
                    vec![ctx.name(i)],
                    vec![],
                    vec![phi],
                    "constraint does not entail its saturation".to_string(),
                ));
            }
            let core = pullback_along(w, &forall_along(w, phi).expect("typed")).expect("typed");
            if !entails(&core, phi).expect("typed") {
                return Err(ce(
                    vec![ctx.name(i)],
                    vec![],
                    vec![phi],
                    "core does not entail the constraint".to_string(),
                ));
            }
        }
    }
    Ok(())
}

/// Allowance and ensurance are de Morgan duals.
fn law_de_morgan(ctx: &Ctx) -> LawResult {
    for i in 0..ctx.len() {
        for j in 0..ctx.len() {
            let m = &ctx.modal[i][j];
            for phi in &ctx.pools[i] {
                let lhs = m.allows(&phi.not()).expect("typed").not();
                let rhs = m.ensures(phi).expect("typed");
                if lhs != rhs {
                    return Err(ce(
                        vec![ctx.name(i), ctx.name(j)],
                        vec![],
                        vec![phi],
                        "negated allowance of the negation differs from ensurance".to_string(),
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Both inter-modalities are monotone.
fn law_monotone(ctx: &Ctx) -> LawResult {
    for i in 0..ctx.len() {
        for j in 0..ctx.len() {
            let m = &ctx.modal[i][j];
            let dia: Vec<Constraint> =
                ctx.pools[i].iter().map(|p| m.allows(p).expect("typed")).collect();
            let boxed: Vec<Constraint> =
                ctx.pools[i].iter().map(|p| m.ensures(p).expect("typed")).collect();
            for (a, phi) in ctx.pools[i].iter().enumerate() {
                for (b, psi) in ctx.pools[i].iter().enumerate() {
                    if entails(phi, psi).expect("typed") {
                        if !entails(&dia[a], &dia[b]).expect("typed") {
                            return Err(ce(
                                vec![ctx.name(i), ctx.name(j)],
                                vec![],
                                vec![phi, psi],
                                "allowance is not monotone".to_string(),
                            ));
                        }
                        if !entails(&boxed[a], &boxed[b]).expect("typed") {
                            return Err(ce(
                                vec![ctx.name(i), ctx.name(j)],
                                vec![],
                                vec![phi, psi],
                                "ensurance is not monotone".to_string(),
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Ensuring a constraint entails allowing it.
fn law_ensures_entails_allows(ctx: &Ctx) -> LawResult {
    for i in 0..ctx.len() {
        for j in 0..ctx.len() {
            let m = &ctx.modal[i][j];
            for phi in &ctx.pools[i] {
                let boxed = m.ensures(phi).expect("typed");
                let dia = m.allows(phi).expect("typed");
                if !entails(&boxed, &dia).expect("typed") {
                    return Err(ce(
                        vec![ctx.name(i), ctx.name(j)],
                        vec![],
                        vec![phi],
                        "ensurance does not entail allowance".to_string(),
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Allowance from P to Q is left adjoint to ensurance from Q to P.
fn law_modal_adjunction(ctx: &Ctx) -> LawResult {
    for i in 0..ctx.len() {
        for j in 0..ctx.len() {
            let fwd = &ctx.modal[i][j];
            let back = &ctx.modal[j][i];
            let dia: Vec<Constraint> =
                ctx.pools[i].iter().map(|p| fwd.allows(p).expect("typed")).collect();
            let boxed: Vec<Constraint> =
                ctx.pools[j].iter().map(|p| back.ensures(p).expect("typed")).collect();
            for (a, phi) in ctx.pools[i].iter().enumerate() {
                for (b, psi) in ctx.pools[j].iter().enumerate() {
                    let lhs = entails(&dia[a], psi).expect("typed");
                    let rhs = entails(phi, &boxed[b]).expect("typed");
                    if lhs != rhs {
                        return Err(ce(
                            vec![ctx.name(i), ctx.name(j)],
                            vec![],
                            vec![phi, psi],
                            format!("modal adjunction sides disagree: {lhs} vs {rhs}"),
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// All constraint pairs when the pool is small, a strided sample
/// otherwise.
fn constraint_pairs(len: usize) -> Vec<(usize, usize)> {
    if len <= 16 {
        let mut out = Vec::with_capacity(len * len);
        for a in 0..len {
            for b in 0..len {
                out.push((a, b));
            }
        }
        out
    } else {
        let mut out = Vec::with_capacity(3 * len);
        for stride in [1usize, 3, 7] {
            for a in 0..len {
                out.push((a, (a + stride) % len));
            }
        }
        out
    }
}

/// Allowance distributes over disjunction; ensurance over conjunction.
fn law_distributive(ctx: &Ctx) -> LawResult {
    for i in 0..ctx.len() {
        for j in 0..ctx.len() {
            let m = &ctx.modal[i][j];
            let pairs = constraint_pairs(ctx.pools[i].len());
            let dia: Vec<Constraint> =
                ctx.pools[i].iter().map(|p| m.allows(p).expect("typed")).collect();
            let boxed: Vec<Constraint> =
                ctx.pools[i].iter().map(|p| m.ensures(p).expect("typed")).collect();
            for (a, b) in pairs {
                let phi = &ctx.pools[i][a];
                let psi = &ctx.pools[i][b];
                let or_in = m.allows(&phi.or(psi).expect("typed")).expect("typed");
                let or_out = dia[a].or(&dia[b]).expect("typed");
                if or_in != or_out {
                    return Err(ce(
                        vec![ctx.name(i), ctx.name(j)],
                        vec![],
                        vec![phi, psi],
                        "allowance does not distribute over disjunction".to_string(),
                    ));
                }
                let and_in = m.ensures(&phi.and(psi).expect("typed")).expect("typed");
                let and_out = boxed[a].and(&boxed[b]).expect("typed");
                if and_in != and_out {
                    return Err(ce(
                        vec![ctx.name(i), ctx.name(j)],
                        vec![],
                        vec![phi, psi],
                        "ensurance does not distribute over conjunction".to_string(),
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Compatibility and determination are the pointwise faces of the
/// inter-modalities.
fn law_pointwise_recovery(ctx: &Ctx) -> LawResult {
    for i in 0..ctx.len() {
        for j in 0..ctx.len() {
            let p = ctx.part(i);
            let q = ctx.part(j);
            for a in 0..p.codomain().len() {
                let point = Constraint::point(p.codomain(), a).expect("index");
                let dia = ctx.modal[i][j].allows(&point).expect("typed");
                let ens = ctx.modal[i][j].ensures(&point).expect("typed");
                for b in 0..q.codomain().len() {
                    if dia.holds(b) != compatible(p, a, q, b).expect("typed") {
                        return Err(ce(
                            vec![ctx.name(i), ctx.name(j)],
                            vec![a, b],
                            vec![&point],
                            "allowance of a point is not compatibility".to_string(),
                        ));
                    }
                    if ens.holds(b) != determines(q, b, p, a).expect("typed") {
                        return Err(ce(
                            vec![ctx.name(i), ctx.name(j)],
                            vec![a, b],
                            vec![&point],
                            "ensurance of a point is not determination".to_string(),
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// The two round trips form an adjoint pair of modalities.
fn law_roundtrip_adjunction(ctx: &Ctx) -> LawResult {
    for i in 0..ctx.len() {
        for j in 0..ctx.len() {
            let fwd = &ctx.modal[i][j];
            let back = &ctx.modal[j][i];
            let rt_dia: Vec<Constraint> = ctx.pools[i]
                .iter()
                .map(|p| back.allows(&fwd.allows(p).expect("typed")).expect("typed"))
                .collect();
            let rt_box: Vec<Constraint> = ctx.pools[i]
                .iter()
                .map(|p| back.ensures(&fwd.ensures(p).expect("typed")).expect("typed"))
                .collect();
            for (a, phi) in ctx.pools[i].iter().enumerate() {
                for (b, psi) in ctx.pools[i].iter().enumerate() {
                    let lhs = entails(&rt_dia[a], psi).expect("typed");
                    let rhs = entails(phi, &rt_box[b]).expect("typed");
                    if lhs != rhs {
                        return Err(ce(
                            vec![ctx.name(i), ctx.name(j)],
                            vec![],
                            vec![phi, psi],
                            format!("round-trip adjunction sides disagree: {lhs} vs {rhs}"),
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// The round trips are the identity exactly when the first part is below
/// the second. The refutation for an incomparable pair is a point
/// constraint built from a kernel-pair violation.
fn law_roundtrip_identity(ctx: &Ctx) -> LawResult {
    let n = ctx.top.system().len();
    for i in 0..ctx.len() {
        for j in 0..ctx.len() {
            let below = ctx.witness[j][i].is_some();
            let fwd = &ctx.modal[i][j];
            let back = &ctx.modal[j][i];
            if below {
                for phi in &ctx.pools[i] {
                    let rt = back.allows(&fwd.allows(phi).expect("typed")).expect("typed");
                    if &rt != phi {
                        return Err(ce(
                            vec![ctx.name(i), ctx.name(j)],
                            vec![],
                            vec![phi, &rt],
                            "round trip below a coarser part is not the identity".to_string(),
                        ));
                    }
                    let rt = back.ensures(&fwd.ensures(phi).expect("typed")).expect("typed");
                    if &rt != phi {
                        return Err(ce(
                            vec![ctx.name(i), ctx.name(j)],
                            vec![],
                            vec![phi, &rt],
                            "universal round trip below a coarser part is not the identity"
                                .to_string(),
                        ));
                    }
                }
            } else {
                // Some pair agrees on parts[j] but not parts[i]; the point
                // at its image refutes identity.
                let p = ctx.part(i);
                let q = ctx.part(j);
                let pair = (0..n)
                    .flat_map(|s| (0..n).map(move |s2| (s, s2)))
                    .find(|&(s, s2)| q.map()[s] == q.map()[s2] && p.map()[s] != p.map()[s2]);
                let Some((s, s2)) = pair else {
                    return Err(ce(
                        vec![ctx.name(i), ctx.name(j)],
                        vec![],
                        vec![],
                        "order fails but no kernel violation exists".to_string(),
                    ));
                };
                let point = Constraint::point(p.codomain(), p.map()[s]).expect("index");
                let rt = back.allows(&fwd.allows(&point).expect("typed")).expect("typed");
                if rt == point {
                    return Err(ce(
                        vec![ctx.name(i), ctx.name(j)],
                        vec![s, s2],
                        vec![&point],
                        "round trip is the identity on the refuting point".to_string(),
                    ));
                }
                let co_point = point.not();
                let rt = back
                    .ensures(&fwd.ensures(&co_point).expect("typed"))
                    .expect("typed");
                if rt == co_point {
                    return Err(ce(
                        vec![ctx.name(i), ctx.name(j)],
                        vec![s, s2],
                        vec![&co_point],
                        "universal round trip is the identity on the refuting co-point"
                            .to_string(),
                    ));
                }
            }
        }
    }
    Ok(())
}

/// A behavior determines at most one behavior of any other part.
fn law_unique_determination(ctx: &Ctx) -> LawResult {
    for i in 0..ctx.len() {
        for j in 0..ctx.len() {
            let p = ctx.part(i);
            let q = ctx.part(j);
            for a in 0..p.codomain().len() {
                let mut found: Option<usize> = None;
                for b in 0..q.codomain().len() {
                    if determines(p, a, q, b).expect("typed") {
                        if let Some(first) = found {
                            return Err(ce(
                                vec![ctx.name(i), ctx.name(j)],
                                vec![a, first, b],
                                vec![],
                                "behavior determines two distinct behaviors".to_string(),
                            ));
                        }
                        found = Some(b);
                    }
                }
            }
        }
    }
    Ok(())
}

/// The four formulations of the part order agree.
fn law_order_equivalents(ctx: &Ctx) -> LawResult {
    for i in 0..ctx.len() {
        for j in 0..ctx.len() {
            let flags = order_equivalents(ctx.part(i), ctx.part(j)).expect("same system");
            if flags.iter().any(|&f| f != flags[0]) {
                return Err(ce(
                    vec![ctx.name(i), ctx.name(j)],
                    vec![],
                    vec![],
                    format!("order formulations disagree: {flags:?}"),
                ));
            }
        }
    }
    Ok(())
}

/// Compatibility is symmetric.
fn law_compat_symmetric(ctx: &Ctx) -> LawResult {
    for i in 0..ctx.len() {
        for j in 0..ctx.len() {
            let p = ctx.part(i);
            let q = ctx.part(j);
            for a in 0..p.codomain().len() {
                for b in 0..q.codomain().len() {
                    let fwd = compatible(p, a, q, b).expect("typed");
                    let bwd = compatible(q, b, p, a).expect("typed");
                    if fwd != bwd {
                        return Err(ce(
                            vec![ctx.name(i), ctx.name(j)],
                            vec![a, b],
                            vec![],
                            "compatibility is not symmetric".to_string(),
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Strongly disjoint parts are disjoint.
fn law_strong_disjoint(ctx: &Ctx) -> LawResult {
    for i in 0..ctx.len() {
        for j in 0..ctx.len() {
            let p = ctx.part(i);
            let q = ctx.part(j);
            let strong = crate::part::strongly_disjoint(p, q).expect("typed");
            if strong && !disjoint(p, q).expect("typed") {
                return Err(ce(
                    vec![ctx.name(i), ctx.name(j)],
                    vec![],
                    vec![],
                    "strongly disjoint parts have a nontrivial meet".to_string(),
                ));
            }
        }
    }
    Ok(())
}

/// The meet is a lower bound and the join an upper bound.
fn law_lattice_bounds(ctx: &Ctx) -> LawResult {
    for i in 0..ctx.len() {
        for j in 0..ctx.len() {
            let p = ctx.part(i);
            let q = ctx.part(j);
            let m = meet(p, q).expect("same system");
            if part_leq(&m, p).expect("typed").is_none()
                || part_leq(&m, q).expect("typed").is_none()
            {
                return Err(ce(
                    vec![ctx.name(i), ctx.name(j)],
                    vec![],
                    vec![],
                    "meet is not a lower bound".to_string(),
                ));
            }
            let jn = join(p, q).expect("same system");
            if part_leq(p, &jn).expect("typed").is_none()
                || part_leq(q, &jn).expect("typed").is_none()
            {
                return Err(ce(
                    vec![ctx.name(i), ctx.name(j)],
                    vec![],
                    vec![],
                    "join is not an upper bound".to_string(),
                ));
            }
        }
    }
    Ok(())
}

/// The meet is the greatest lower bound and the join the least upper
/// bound, relative to the model's other parts.
fn law_lattice_universal(ctx: &Ctx) -> LawResult {
    for i in 0..ctx.len() {
        for j in 0..ctx.len() {
            let p = ctx.part(i);
            let q = ctx.part(j);
            let m = meet(p, q).expect("same system");
            let jn = join(p, q).expect("same system");
            for k in 0..ctx.len() {
                let r = ctx.part(k);
                let r_below_both = part_leq(r, p).expect("typed").is_some()
                    && part_leq(r, q).expect("typed").is_some();
                if r_below_both && part_leq(r, &m).expect("typed").is_none() {
                    return Err(ce(
                        vec![ctx.name(i), ctx.name(j), ctx.name(k)],
                        vec![],
                        vec![],
                        "a common lower bound is not below the meet".to_string(),
                    ));
                }
                let r_above_both = part_leq(p, r).expect("typed").is_some()
                    && part_leq(q, r).expect("typed").is_some();
                if r_above_both && part_leq(&jn, r).expect("typed").is_none() {
                    return Err(ce(
                        vec![ctx.name(i), ctx.name(j), ctx.name(k)],
                        vec![],
                        vec![],
                        "a common upper bound is not above the join".to_string(),
                    ));
                }
            }
        }
    }
    Ok(())
}

const LAWS: &[(&str, fn(&Ctx) -> LawResult)] = &[
    ("quantifiers.adjoint_exists", law_adjoint_exists),
    ("quantifiers.adjoint_forall", law_adjoint_forall),
    ("quantifiers.identity", law_quantifier_identity),
    ("quantifiers.composition", law_quantifier_composition),
    ("saturation.exists", law_saturation_exists),
    ("saturation.forall", law_saturation_forall),
    ("saturation.unit_counit", law_saturation_unit_counit),
    ("modalities.de_morgan", law_de_morgan),
    ("modalities.monotone", law_monotone),
    ("modalities.ensures_entails_allows", law_ensures_entails_allows),
    ("modalities.adjunction", law_modal_adjunction),
    ("modalities.distributive", law_distributive),
    ("modalities.pointwise_recovery", law_pointwise_recovery),
    ("roundtrip.adjunction", law_roundtrip_adjunction),
    ("roundtrip.identity_iff_below", law_roundtrip_identity),
    ("determination.unique", law_unique_determination),
    ("determination.order_equivalents", law_order_equivalents),
    ("compatibility.symmetric", law_compat_symmetric),
    ("disjointness.strong_implies_disjoint", law_strong_disjoint),
    ("lattice.bounds", law_lattice_bounds),
    ("lattice.universal", law_lattice_universal),
];

/// Run every law against the model. Failures are reported, not raised.
pub fn law_suite(model: &SystemModel, seed: u64) -> Vec<LawReport> {
    let ctx = Ctx::build(model, seed);
    LAWS.iter()
        .map(|(name, check)| {
            let outcome = check(&ctx);
            LawReport {
                law: name.to_string(),
                system: model.name.clone(),
                passed: outcome.is_ok(),
                counterexample: outcome.err(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{default_bicycle, default_water, random_system};

    #[test]
    fn law_names_match_the_table() {
        let names: Vec<&str> = LAWS.iter().map(|(n, _)| *n).collect();
        assert_eq!(names, LAW_NAMES);
    }

    #[test]
    fn suite_passes_on_small_random_systems() {
        for seed in 0..8 {
            let bundle = random_system(seed, 1 + (seed as usize % 6), 2 + (seed as usize % 3))
                .unwrap();
            let reports = law_suite(&bundle.model, seed);
            for report in &reports {
                assert!(
                    report.passed,
                    "law {} failed on seed {seed}: {:?}",
                    report.law, report.counterexample
                );
            }
            assert_eq!(reports.len(), LAW_NAMES.len());
        }
    }

    #[test]
    fn suite_passes_on_the_bicycle() {
        let bundle = default_bicycle();
        for report in law_suite(&bundle.model, 7) {
            assert!(report.passed, "law {} failed: {:?}", report.law, report.counterexample);
        }
    }

    #[test]
    fn suite_passes_on_the_water_cup() {
        let bundle = default_water();
        for report in law_suite(&bundle.model, 7) {
            assert!(report.passed, "law {} failed: {:?}", report.law, report.counterexample);
        }
    }

    #[test]
    fn failing_reports_carry_counterexamples() {
        // A deliberately broken "law" is not constructible from outside,
        // so instead check the counterexample plumbing through a law that
        // cannot fail, by asserting shape invariants of the report list.
        let bundle = random_system(3, 4, 2).unwrap();
        let reports = law_suite(&bundle.model, 3);
        for report in reports {
            assert_eq!(report.system, bundle.model.name);
            assert!(report.passed == report.counterexample.is_none());
        }
    }
}
