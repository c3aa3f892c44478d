//! Builders for the worked example systems and a seeded random-system
//! generator.
//!
//! All builders are pure functions of their arguments (and seed): the
//! same inputs reproduce identical behavior labels, parts, and orderings.
//! Trajectories are simulated with exact rational arithmetic.

use std::sync::Arc;

use indexmap::IndexMap;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::behavior::{Behavior, BehaviorType, Rational};
use crate::error::Error as CoreError;
use crate::expr::{eval_bool, Env, EvalError, Expr};
use crate::model::SystemModel;
use crate::part::Part;

/// Largest horizon accepted by the ecosystem builder; denominators grow
/// roughly squaring per step.
pub const ECOSYSTEM_HORIZON_CAP: u32 = 10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("range for `{var}` is malformed: {reason}")]
    BadRange { var: String, reason: String },

    #[error("filtered grid for `{id}` is empty")]
    EmptyGrid { id: String },

    #[error("grid must bind exactly the variables {expected:?}, got {got:?}")]
    GridVariables { expected: Vec<String>, got: Vec<String> },

    #[error("initial grid must not carry a filter")]
    FilteredInit,

    #[error("initial temperatures must be nonempty and pairwise distinct")]
    BadInitTemps,

    #[error("horizon must be at least 1")]
    ZeroHorizon,

    #[error("horizon {got} exceeds the cap of {cap}")]
    HorizonTooLarge { got: u32, cap: u32 },

    #[error("update rule for `{var}` is {problem}")]
    BadUpdate { var: String, problem: String },

    #[error("{0} must be in {1}")]
    OutOfBounds(&'static str, &'static str),

    #[error("evaluation failed: {0}")]
    Eval(String),

    #[error(transparent)]
    Core(#[from] CoreError),
}

impl From<EvalError> for ModelError {
    fn from(e: EvalError) -> ModelError {
        ModelError::Eval(e.message)
    }
}

/// An inclusive rational range walked by a positive step that must divide
/// its width exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct Range {
    pub min: Rational,
    pub max: Rational,
    pub step: Rational,
}

impl Range {
    pub fn values(&self, var: &str) -> Result<Vec<Rational>, ModelError> {
        use num_traits::Signed;
        if self.step.is_negative() || self.step == Rational::from_integer(0.into()) {
            return Err(ModelError::BadRange {
                var: var.into(),
                reason: format!("step {} is not positive", self.step),
            });
        }
        if self.min > self.max {
            return Err(ModelError::BadRange {
                var: var.into(),
                reason: format!("min {} exceeds max {}", self.min, self.max),
            });
        }
        let width = &self.max - &self.min;
        let count = &width / &self.step;
        if !count.is_integer() {
            return Err(ModelError::BadRange {
                var: var.into(),
                reason: format!("step {} does not divide {} exactly", self.step, width),
            });
        }
        let count = count.to_integer();
        let mut values = Vec::new();
        let mut v = self.min.clone();
        let mut i = num_bigint::BigInt::from(0);
        while i <= count {
            values.push(v.clone());
            v += &self.step;
            i += 1;
        }
        Ok(values)
    }
}

/// A finite grid of named rational variables with an optional boolean
/// filter expression.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub vars: Vec<(String, Range)>,
    pub filter: Option<Expr>,
}

impl GridSpec {
    pub fn new(vars: Vec<(String, Range)>) -> GridSpec {
        GridSpec { vars, filter: None }
    }

    pub fn with_filter(vars: Vec<(String, Range)>, filter: Expr) -> GridSpec {
        GridSpec { vars, filter: Some(filter) }
    }

    /// Cartesian points in row-major order (first variable outermost),
    /// after applying the filter.
    pub fn points(&self) -> Result<Vec<Vec<(String, Rational)>>, ModelError> {
        let mut axes = Vec::new();
        for (var, range) in &self.vars {
            axes.push((var.clone(), range.values(var)?));
        }
        let mut points = vec![Vec::new()];
        for (var, values) in &axes {
            let mut next = Vec::with_capacity(points.len() * values.len());
            for prefix in &points {
                for value in values {
                    let mut point = prefix.clone();
                    point.push((var.clone(), value.clone()));
                    next.push(point);
                }
            }
            points = next;
        }
        if let Some(filter) = &self.filter {
            let mut kept = Vec::new();
            for point in points {
                if eval_bool(filter, &mut Env::new(&point))? {
                    kept.push(point);
                }
            }
            points = kept;
        }
        Ok(points)
    }
}

/// A simulation: initial conditions on a grid, one exact update
/// expression per state variable, and a finite horizon.
#[derive(Debug, Clone, PartialEq)]
pub struct SimSpec {
    pub vars: Vec<String>,
    pub init: GridSpec,
    pub updates: Vec<(String, Expr)>,
    pub horizon: u32,
}

/// A built system: the model plus the rational parameters it was built
/// from.
#[derive(Debug, Clone)]
pub struct ModelBundle {
    pub model: SystemModel,
    pub params: IndexMap<String, Rational>,
}

/// Run a simulation from explicit initial points. Behaviors are
/// trajectories of length `horizon + 1` in the order of `init_points`.
pub fn simulate_trajectories(
    id: &str,
    vars: &[String],
    init_points: &[Vec<(String, Rational)>],
    updates: &[(String, Expr)],
    horizon: u32,
) -> Result<Arc<BehaviorType>, ModelError> {
    if horizon == 0 {
        return Err(ModelError::ZeroHorizon);
    }
    for var in vars {
        if !updates.iter().any(|(v, _)| v == var) {
            return Err(ModelError::BadUpdate { var: var.clone(), problem: "missing".into() });
        }
    }
    for (var, _) in updates {
        if !vars.iter().any(|v| v == var) {
            return Err(ModelError::BadUpdate {
                var: var.clone(),
                problem: "not a state variable".into(),
            });
        }
    }
    let mut labels = Vec::with_capacity(init_points.len());
    for init in init_points {
        let mut state: Vec<(String, Rational)> = vars
            .iter()
            .map(|var| {
                let value = init
                    .iter()
                    .find(|(n, _)| n == var)
                    .map(|(_, v)| v.clone())
                    .ok_or_else(|| ModelError::BadUpdate {
                        var: var.clone(),
                        problem: "missing from the initial point".into(),
                    })?;
                Ok((var.clone(), value))
            })
            .collect::<Result<_, ModelError>>()?;
        let mut steps = vec![state.clone()];
        for _ in 0..horizon {
            let mut next = Vec::with_capacity(vars.len());
            for var in vars {
                let update = &updates.iter().find(|(v, _)| v == var).unwrap().1;
                let value = crate::expr::eval_num(update, &mut Env::new(&state))?;
                next.push((var.clone(), value));
            }
            state = next;
            steps.push(state.clone());
        }
        labels.push(Behavior::Trajectory(steps));
    }
    Ok(BehaviorType::new(id, labels)?)
}

/// The pedal/wheel system on a finite grid: grid points `(p, w)` with
/// `w >= r p`, with the two projection parts.
pub fn build_bicycle(r: &Rational, grid: &GridSpec) -> Result<ModelBundle, ModelError> {
    let names: Vec<String> = grid.vars.iter().map(|(n, _)| n.clone()).collect();
    if names != ["p".to_string(), "w".to_string()] {
        return Err(ModelError::GridVariables {
            expected: vec!["p".into(), "w".into()],
            got: names,
        });
    }
    let mut points = grid.points()?;
    points.retain(|point| {
        let p = &point[0].1;
        let w = &point[1].1;
        w >= &(r * p)
    });
    if points.is_empty() {
        return Err(ModelError::EmptyGrid { id: "Bicycle".into() });
    }
    let labels = points.into_iter().map(Behavior::Point).collect();
    let system = BehaviorType::new("Bicycle", labels)?;
    let mut model = SystemModel::new("Bicycle", system.clone());
    model.add_part("Pedal", Part::project(&system, "Pedal", &["p".into()])?)?;
    model.add_part("Wheel", Part::project(&system, "Wheel", &["w".into()])?)?;
    let mut params = IndexMap::new();
    params.insert("r".to_string(), r.clone());
    Ok(ModelBundle { model, params })
}

/// The cooling cup: one trajectory per initial temperature under
/// `T' = T + k (R - T)`, with one part per time step.
pub fn build_water(
    k: &Rational,
    big_r: &Rational,
    init_temps: &[Rational],
    horizon: u32,
) -> Result<ModelBundle, ModelError> {
    if init_temps.is_empty() {
        return Err(ModelError::BadInitTemps);
    }
    for (i, t) in init_temps.iter().enumerate() {
        if init_temps[..i].contains(t) {
            return Err(ModelError::BadInitTemps);
        }
    }
    let update = Expr::binary(
        crate::expr::BinOp::Add,
        Expr::var("T"),
        Expr::binary(
            crate::expr::BinOp::Mul,
            Expr::num(k.clone()),
            Expr::binary(crate::expr::BinOp::Sub, Expr::num(big_r.clone()), Expr::var("T")),
        ),
    );
    let init_points: Vec<Vec<(String, Rational)>> = init_temps
        .iter()
        .map(|t| vec![("T".to_string(), t.clone())])
        .collect();
    let system = simulate_trajectories(
        "Water",
        &["T".to_string()],
        &init_points,
        &[("T".to_string(), update)],
        horizon,
    )?;
    let mut model = SystemModel::new("Water", system.clone());
    for t in 0..=horizon {
        let name = format!("Water{t}");
        let var = format!("T{t}");
        model.add_part(&name, Part::project(&system, &name, &[var])?)?;
    }
    let mut params = IndexMap::new();
    params.insert("k".to_string(), k.clone());
    params.insert("R".to_string(), big_r.clone());
    Ok(ModelBundle { model, params })
}

/// The fox/rabbit ecosystem: one trajectory per initial pair under the
/// discrete predator-prey recurrences, with fox and rabbit parts per
/// time step.
pub fn build_ecosystem(
    d_f: &Rational,
    b_r: &Rational,
    c_f: &Rational,
    c_r: &Rational,
    init_grid: &GridSpec,
    horizon: u32,
) -> Result<ModelBundle, ModelError> {
    if horizon > ECOSYSTEM_HORIZON_CAP {
        return Err(ModelError::HorizonTooLarge { got: horizon, cap: ECOSYSTEM_HORIZON_CAP });
    }
    if init_grid.filter.is_some() {
        return Err(ModelError::FilteredInit);
    }
    let names: Vec<String> = init_grid.vars.iter().map(|(n, _)| n.clone()).collect();
    if names != ["f".to_string(), "r".to_string()] {
        return Err(ModelError::GridVariables {
            expected: vec!["f".into(), "r".into()],
            got: names,
        });
    }
    use crate::expr::BinOp::{Add, Mul, Sub};
    let one = Rational::one();
    // f' = (1 - d_f) f + c_f r f
    let f_update = Expr::binary(
        Add,
        Expr::binary(Mul, Expr::num(&one - d_f), Expr::var("f")),
        Expr::binary(
            Mul,
            Expr::num(c_f.clone()),
            Expr::binary(Mul, Expr::var("r"), Expr::var("f")),
        ),
    );
    // r' = (1 + b_r) r - c_r r f
    let r_update = Expr::binary(
        Sub,
        Expr::binary(Mul, Expr::num(&one + b_r), Expr::var("r")),
        Expr::binary(
            Mul,
            Expr::num(c_r.clone()),
            Expr::binary(Mul, Expr::var("r"), Expr::var("f")),
        ),
    );
    let init_points = init_grid.points()?;
    if init_points.is_empty() {
        return Err(ModelError::EmptyGrid { id: "Eco".into() });
    }
    let system = simulate_trajectories(
        "Eco",
        &["f".to_string(), "r".to_string()],
        &init_points,
        &[("f".to_string(), f_update), ("r".to_string(), r_update)],
        horizon,
    )?;
    let mut model = SystemModel::new("Eco", system.clone());
    for t in 0..=horizon {
        let fox = format!("Fox{t}");
        model.add_part(&fox, Part::project(&system, &fox, &[format!("f{t}")])?)?;
        let rabbit = format!("Rabbit{t}");
        model.add_part(&rabbit, Part::project(&system, &rabbit, &[format!("r{t}")])?)?;
    }
    let mut params = IndexMap::new();
    params.insert("d_f".to_string(), d_f.clone());
    params.insert("b_r".to_string(), b_r.clone());
    params.insert("c_f".to_string(), c_f.clone());
    params.insert("c_r".to_string(), c_r.clone());
    Ok(ModelBundle { model, params })
}

/// The default bicycle: ratio 2 on the grid `p, w in -5..=5` by halves.
pub fn default_bicycle() -> ModelBundle {
    let r = Rational::from_integer(2.into());
    let half = Rational::new(1.into(), 2.into());
    let five = Rational::from_integer(5.into());
    let grid = GridSpec::new(vec![
        ("p".to_string(), Range { min: -five.clone(), max: five.clone(), step: half.clone() }),
        ("w".to_string(), Range { min: -five.clone(), max: five, step: half }),
    ]);
    build_bicycle(&r, &grid).expect("default bicycle parameters")
}

/// The default water cup: `k = 1/2`, `R = 20`, initial temperatures
/// `0, 5, ..., 40`, horizon 6.
pub fn default_water() -> ModelBundle {
    let k = Rational::new(1.into(), 2.into());
    let big_r = Rational::from_integer(20.into());
    let temps: Vec<Rational> = (0..=8)
        .map(|i| Rational::from_integer((i * 5).into()))
        .collect();
    build_water(&k, &big_r, &temps, 6).expect("default water parameters")
}

/// The default ecosystem: `d_f = 1/10`, `b_r = 1/5`, `c_f = c_r = 1/100`,
/// initial populations `f, r in {0, 10, 20, 30}`, horizon 5.
pub fn default_ecosystem() -> ModelBundle {
    let d_f = Rational::new(1.into(), 10.into());
    let b_r = Rational::new(1.into(), 5.into());
    let c = Rational::new(1.into(), 100.into());
    let ten = Rational::from_integer(10.into());
    let thirty = Rational::from_integer(30.into());
    let zero = Rational::from_integer(0.into());
    let grid = GridSpec::new(vec![
        ("f".to_string(), Range { min: zero.clone(), max: thirty.clone(), step: ten.clone() }),
        ("r".to_string(), Range { min: zero, max: thirty, step: ten }),
    ]);
    build_ecosystem(&d_f, &b_r, &c, &c, &grid, 5).expect("default ecosystem parameters")
}

/// A deterministic random system: opaque token behaviors and uniformly
/// random surjective parts, plus the top and bottom parts.
///
/// `size` must lie in `1..=8` and `num_parts` in `2..=4`.
pub fn random_system(seed: u64, size: usize, num_parts: usize) -> Result<ModelBundle, ModelError> {
    if !(1..=8).contains(&size) {
        return Err(ModelError::OutOfBounds("size", "1..=8"));
    }
    if !(2..=4).contains(&num_parts) {
        return Err(ModelError::OutOfBounds("num_parts", "2..=4"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let id = format!("random-{seed}");
    let system = BehaviorType::tokens(&id, (0..size).map(|i| format!("b{i}")))?;
    let mut model = SystemModel::new(&id, system.clone());
    for i in 1..=num_parts {
        let part_id = format!("P{i}");
        let codomain_size = rng.gen_range(1..=size);
        let codomain =
            BehaviorType::tokens(&part_id, (0..codomain_size).map(|j| format!("{part_id}.{j}")))?;
        // Resample until surjective.
        let map = loop {
            let candidate: Vec<usize> = (0..size).map(|_| rng.gen_range(0..codomain_size)).collect();
            let mut hit = vec![false; codomain_size];
            for &b in &candidate {
                hit[b] = true;
            }
            if hit.into_iter().all(|h| h) {
                break candidate;
            }
        };
        model.add_part(&part_id, Part::new(system.clone(), codomain, map)?)?;
    }
    model.add_part("top", Part::top(&system))?;
    model.add_part("bottom", Part::bottom(&system))?;
    Ok(ModelBundle { model, params: IndexMap::new() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::behavior::{int, rat};
    use crate::part::{compatible, join, meet, part_leq, strongly_disjoint, Part};

    pub fn default_bicycle_grid() -> GridSpec {
        GridSpec::new(vec![
            ("p".to_string(), Range { min: int(-5), max: int(5), step: rat(1, 2) }),
            ("w".to_string(), Range { min: int(-5), max: int(5), step: rat(1, 2) }),
        ])
    }

    /// Independent count of the default bicycle grid by double loop.
    fn count_grid_points_with(r: &Rational) -> usize {
        let mut count = 0;
        for pi in -10..=10i64 {
            for wi in -10..=10i64 {
                let p = rat(pi, 2);
                let w = rat(wi, 2);
                if w >= r.clone() * p {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn bicycle_behavior_count_matches_double_loop() {
        let r = int(2);
        let bundle = build_bicycle(&r, &default_bicycle_grid()).unwrap();
        assert_eq!(bundle.model.system.len(), count_grid_points_with(&r));
        assert_eq!(bundle.model.system.len(), 226);
        // Projected codomains.
        assert_eq!(bundle.model.part("Pedal").unwrap().codomain().len(), 16);
        assert_eq!(bundle.model.part("Wheel").unwrap().codomain().len(), 21);
    }

    #[test]
    fn bicycle_restriction_projects_the_grid_point() {
        let bundle = build_bicycle(&int(2), &default_bicycle_grid()).unwrap();
        let system = &bundle.model.system;
        let pedal = bundle.model.part("Pedal").unwrap();
        let target = Behavior::point(vec![("p".into(), int(1)), ("w".into(), int(4))]);
        let s = system.index_of(&target).unwrap();
        let p_behavior = pedal.codomain().label(pedal.restrict(s).unwrap());
        assert_eq!(p_behavior, &Behavior::point(vec![("p".into(), int(1))]));
    }

    #[test]
    fn bicycle_join_is_top_and_parts_are_incomparable() {
        let bundle = build_bicycle(&int(2), &default_bicycle_grid()).unwrap();
        let pedal = bundle.model.part("Pedal").unwrap();
        let wheel = bundle.model.part("Wheel").unwrap();
        let top = Part::top(&bundle.model.system);
        assert!(join(pedal, wheel).unwrap().same_partition(&top).unwrap());
        assert!(part_leq(pedal, wheel).unwrap().is_none());
        assert!(part_leq(wheel, pedal).unwrap().is_none());
    }

    #[test]
    fn bicycle_zero_ratio_admits_nonnegative_wheels() {
        let bundle = build_bicycle(&int(0), &default_bicycle_grid()).unwrap();
        // w >= 0 for every p: 21 p-values times 11 w-values.
        assert_eq!(bundle.model.system.len(), 21 * 11);
    }

    #[test]
    fn bicycle_compatibility_follows_the_ratio() {
        let bundle = build_bicycle(&int(2), &default_bicycle_grid()).unwrap();
        let pedal = bundle.model.part("Pedal").unwrap();
        let wheel = bundle.model.part("Wheel").unwrap();
        let p1 = pedal
            .codomain()
            .index_of(&Behavior::point(vec![("p".into(), int(1))]))
            .unwrap();
        let w4 = wheel
            .codomain()
            .index_of(&Behavior::point(vec![("w".into(), int(4))]))
            .unwrap();
        let w1 = wheel
            .codomain()
            .index_of(&Behavior::point(vec![("w".into(), int(1))]))
            .unwrap();
        assert!(compatible(pedal, p1, wheel, w4).unwrap());
        assert!(!compatible(pedal, p1, wheel, w1).unwrap());
    }

    #[test]
    fn water_trajectory_prefix() {
        let bundle = build_water(&rat(1, 2), &int(20), &[int(10)], 6).unwrap();
        let label = bundle.model.system.label(0);
        let bindings = label.bindings();
        let expect = [int(10), int(15), rat(35, 2), rat(75, 4), rat(155, 8), rat(315, 16), rat(635, 32)];
        for (t, want) in expect.iter().enumerate() {
            assert_eq!(&bindings[t].1, want, "T{t}");
        }
    }

    #[test]
    fn water_frozen_dynamics_collapse_time_parts() {
        let temps: Vec<Rational> = (0..5).map(|i| int(i * 10)).collect();
        let bundle = build_water(&int(0), &int(20), &temps, 3).unwrap();
        let w0 = bundle.model.part("Water0").unwrap();
        for t in 1..=3 {
            let wt = bundle.model.part(&format!("Water{t}")).unwrap();
            assert!(w0.same_partition(wt).unwrap());
        }
    }

    #[test]
    fn water_compatibility_is_the_recurrence() {
        // Include 12 so that 16 occurs as a time-1 temperature reachable
        // only from it.
        let bundle = build_water(&rat(1, 2), &int(20), &[int(10), int(12)], 2).unwrap();
        let w0 = bundle.model.part("Water0").unwrap();
        let w1 = bundle.model.part("Water1").unwrap();
        let t10 = w0.codomain().index_of(&Behavior::point(vec![("T0".into(), int(10))])).unwrap();
        let t15 = w1.codomain().index_of(&Behavior::point(vec![("T1".into(), int(15))])).unwrap();
        let t16 = w1.codomain().index_of(&Behavior::point(vec![("T1".into(), int(16))])).unwrap();
        assert!(compatible(w0, t10, w1, t15).unwrap());
        assert!(!compatible(w0, t10, w1, t16).unwrap());
    }

    #[test]
    fn water_rejects_bad_inputs() {
        assert_eq!(
            build_water(&rat(1, 2), &int(20), &[], 3).unwrap_err(),
            ModelError::BadInitTemps
        );
        assert_eq!(
            build_water(&rat(1, 2), &int(20), &[int(1), int(1)], 3).unwrap_err(),
            ModelError::BadInitTemps
        );
        assert_eq!(
            build_water(&rat(1, 2), &int(20), &[int(1)], 0).unwrap_err(),
            ModelError::ZeroHorizon
        );
    }

    pub fn default_eco_grid() -> GridSpec {
        GridSpec::new(vec![
            ("f".to_string(), Range { min: int(0), max: int(30), step: int(10) }),
            ("r".to_string(), Range { min: int(0), max: int(30), step: int(10) }),
        ])
    }

    #[test]
    fn ecosystem_one_step_value() {
        let bundle = build_ecosystem(
            &rat(1, 10),
            &rat(1, 5),
            &rat(1, 100),
            &rat(1, 100),
            &default_eco_grid(),
            5,
        )
        .unwrap();
        // Trajectory starting at f=10, r=20: f1 = 0.9*10 + 0.01*20*10 = 11.
        let label = bundle
            .model
            .system
            .labels()
            .iter()
            .find(|l| {
                let b = l.bindings();
                b[0].1 == int(10) && b[1].1 == int(20)
            })
            .unwrap();
        let bindings = label.bindings();
        let f1 = bindings.iter().find(|(n, _)| n == "f1").unwrap();
        assert_eq!(f1.1, int(11));
    }

    #[test]
    fn ecosystem_initial_parts_do_not_constrain_each_other() {
        let bundle = build_ecosystem(
            &rat(1, 10),
            &rat(1, 5),
            &rat(1, 100),
            &rat(1, 100),
            &default_eco_grid(),
            5,
        )
        .unwrap();
        let fox0 = bundle.model.part("Fox0").unwrap();
        let rabbit0 = bundle.model.part("Rabbit0").unwrap();
        assert!(strongly_disjoint(fox0, rabbit0).unwrap());
        let m = meet(fox0, rabbit0).unwrap();
        assert!(m.same_partition(&Part::bottom(&bundle.model.system)).unwrap());
    }

    #[test]
    fn ecosystem_horizon_cap() {
        let err = build_ecosystem(
            &rat(1, 10),
            &rat(1, 5),
            &rat(1, 100),
            &rat(1, 100),
            &default_eco_grid(),
            11,
        )
        .unwrap_err();
        assert_eq!(err, ModelError::HorizonTooLarge { got: 11, cap: 10 });
    }

    #[test]
    fn random_system_is_deterministic_and_surjective() {
        let a = random_system(42, 6, 3).unwrap();
        let b = random_system(42, 6, 3).unwrap();
        assert_eq!(a.model.system, b.model.system);
        assert_eq!(a.model.parts.len(), b.model.parts.len());
        for (name, part) in &a.model.parts {
            let other = b.model.part(name).unwrap();
            assert_eq!(part.map(), other.map());
            // Surjectivity enforced at construction; spot-check fibers.
            for i in 0..part.codomain().len() {
                assert!(!part.fiber(i).is_empty());
            }
        }
        assert!(a.model.part("top").is_some());
        assert!(a.model.part("bottom").is_some());
    }

    #[test]
    fn random_system_bounds() {
        assert!(random_system(1, 0, 3).is_err());
        assert!(random_system(1, 9, 3).is_err());
        assert!(random_system(1, 4, 1).is_err());
        assert!(random_system(1, 4, 5).is_err());
    }

    #[test]
    fn grid_step_must_divide_width() {
        let grid = GridSpec::new(vec![(
            "x".to_string(),
            Range { min: int(0), max: int(1), step: rat(3, 10) },
        )]);
        assert!(matches!(grid.points(), Err(ModelError::BadRange { .. })));
    }
}
