//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::collections::HashMap;
use std::fs;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use fuzzy_approx::best::{gamma_profile, oracle_report};
use fuzzy_approx::fixtures::{self, CONSTANT_NAMES};
use fuzzy_approx::io::{AnyDocument, ClassDocument, FunctionDocument, LoadedFunction};
use fuzzy_approx::real::{dist_to_real_level, g_interval};
use fuzzy_approx::{
    construct_approximant, dist_to_real, midpoint_selector, radius, telescoping_psis, DomainGrid,
    Error, FunctionClass, FuzzyFunction, FuzzyNumber, LevelGrid, Membership, ScalarFunction,
};
use rand::Rng;

const TOL: f64 = 1e-12;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(failures: &[String], detail: String) -> Self {
        match failures.first() {
            None => Outcome {
                passed: true,
                detail,
            },
            Some(first) => Outcome {
                passed: false,
                detail: format!("{detail}; {} failure(s), first: {first}", failures.len()),
            },
        }
    }
}

fn default_grids() -> (DomainGrid, LevelGrid) {
    (DomainGrid::default(), LevelGrid::default())
}

fn metric_axioms() -> Outcome {
    let start = Instant::now();
    let mut rng = common::rng(1);
    let (domain, grid) = default_grids();
    let mut failures = Vec::new();
    let mut check = |label: &str,
                     i: usize,
                     d_uu: f64,
                     d_uv: f64,
                     d_vu: f64,
                     d_uw: f64,
                     d_wv: f64,
                     equal: bool| {
        if d_uu.abs() > TOL {
            failures.push(format!("{label} {i}: d(u,u) = {d_uu}"));
        }
        if (d_uv - d_vu).abs() > TOL {
            failures.push(format!("{label} {i}: asymmetric {d_uv} vs {d_vu}"));
        }
        if d_uv < 0.0 || (d_uv == 0.0) != equal {
            failures.push(format!("{label} {i}: separation, d = {d_uv}"));
        }
        if d_uv > d_uw + d_wv + TOL {
            failures.push(format!("{label} {i}: triangle {d_uv} > {d_uw} + {d_wv}"));
        }
    };
    for i in 0..1000 {
        let u = common::fuzzy_number(&mut rng, &grid);
        let v = if i % 50 == 0 {
            u.clone()
        } else {
            common::fuzzy_number(&mut rng, &grid)
        };
        let w = common::fuzzy_number(&mut rng, &grid);
        let d = |a: &FuzzyNumber, b: &FuzzyNumber| a.d_inf(b).unwrap();
        check(
            "d_inf",
            i,
            d(&u, &u),
            d(&u, &v),
            d(&v, &u),
            d(&u, &w),
            d(&w, &v),
            u == v,
        );
    }
    for i in 0..1000 {
        let f = common::fuzzy_function(&mut rng, &domain, &grid);
        let g = if i % 50 == 0 {
            f.clone()
        } else {
            common::fuzzy_function(&mut rng, &domain, &grid)
        };
        let h = common::fuzzy_function(&mut rng, &domain, &grid);
        let d = |a: &FuzzyFunction, b: &FuzzyFunction| a.distance(b).unwrap();
        check(
            "D",
            i,
            d(&f, &f),
            d(&f, &g),
            d(&g, &f),
            d(&f, &h),
            d(&h, &g),
            f == g,
        );
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(10) {
        failures.push(format!("runtime {elapsed:?} exceeds 10 s"));
    }
    Outcome::new(
        &failures,
        format!("1000 numbers + 1000 functions, tol 1e-12, {elapsed:.2?}"),
    )
}

fn scaling_properties() -> Outcome {
    let mut rng = common::rng(2);
    let grid = LevelGrid::default();
    let zero = FuzzyNumber::crisp_on(&grid, 0.0);
    let mut failures = Vec::new();
    for i in 0..1000 {
        let m = rng.random_range(1..=6);
        let us: Vec<FuzzyNumber> = (0..m)
            .map(|_| common::fuzzy_number(&mut rng, &grid))
            .collect();
        let vs: Vec<FuzzyNumber> = (0..m)
            .map(|_| common::fuzzy_number(&mut rng, &grid))
            .collect();
        let sum = |xs: &[FuzzyNumber]| {
            xs[1..]
                .iter()
                .fold(xs[0].clone(), |acc, x| acc.add(x).unwrap())
        };
        let lhs = sum(&us).d_inf(&sum(&vs)).unwrap();
        let rhs: f64 = us.iter().zip(&vs).map(|(u, v)| u.d_inf(v).unwrap()).sum();
        if lhs > rhs + TOL {
            failures.push(format!("(1) instance {i}: {lhs} > {rhs}"));
        }
    }
    for i in 0..1000 {
        let u = common::fuzzy_number(&mut rng, &grid);
        let v = common::fuzzy_number(&mut rng, &grid);
        let k: f64 = rng.random_range(0.0..5.0);
        let lhs = u.scale(k).d_inf(&v.scale(k)).unwrap();
        let rhs = k * u.d_inf(&v).unwrap();
        if (lhs - rhs).abs() > TOL {
            failures.push(format!("(2) instance {i}: {lhs} vs {rhs}"));
        }
    }
    for i in 0..1000 {
        let u = common::fuzzy_number(&mut rng, &grid);
        let k: f64 = rng.random_range(0.0..5.0);
        let mu: f64 = rng.random_range(0.0..5.0);
        let lhs = u.scale(k).d_inf(&u.scale(mu)).unwrap();
        let rhs = (k - mu).abs() * u.d_inf(&zero).unwrap();
        if (lhs - rhs).abs() > TOL {
            failures.push(format!("(3) instance {i}: {lhs} vs {rhs}"));
        }
    }
    for i in 0..1000 {
        let u = common::fuzzy_number(&mut rng, &grid);
        let v = common::fuzzy_number(&mut rng, &grid);
        let k: f64 = rng.random_range(0.0..5.0);
        let mu: f64 = rng.random_range(0.0..5.0);
        let lhs = u.scale(k).d_inf(&v.scale(mu)).unwrap();
        let rhs = (k - mu).abs() * u.d_inf(&zero).unwrap() + mu * u.d_inf(&v).unwrap();
        if lhs > rhs + TOL {
            failures.push(format!("(4) instance {i}: {lhs} > {rhs}"));
        }
    }
    Outcome::new(&failures, "properties (1)-(4), 1000 instances each".into())
}

fn level_set_round_trip() -> Outcome {
    let mut rng = common::rng(3);
    let grid = LevelGrid::default();
    let mut failures = Vec::new();
    for i in 0..1000 {
        let u = common::fuzzy_number(&mut rng, &grid);
        let (lo, hi): (Vec<f64>, Vec<f64>) = grid
            .levels()
            .iter()
            .map(|&l| {
                let s = u.level_set(l).unwrap();
                (s.lo, s.hi)
            })
            .unzip();
        match FuzzyNumber::new(grid.clone(), lo.clone(), hi.clone()) {
            Ok(v) if v == u && v.lower() == lo && v.upper() == hi => {}
            Ok(_) => failures.push(format!("number {i}: rebuilt value differs")),
            Err(e) => failures.push(format!("number {i}: rejected: {e}")),
        }
    }
    let two = LevelGrid::new(vec![0.0, 1.0]).unwrap();
    let three = LevelGrid::new(vec![0.0, 0.5, 1.0]).unwrap();
    match FuzzyNumber::new(two.clone(), vec![0.0, 2.0], vec![1.0, 1.0]) {
        Err(Error::CrossingViolation { index: 1, .. }) => {}
        other => failures.push(format!("crossing case gave {other:?}")),
    }
    match FuzzyNumber::new(three, vec![0.0, 0.6, 0.4], vec![2.0, 2.0, 2.0]) {
        Err(Error::MonotonicityViolation { index: 2, .. }) => {}
        other => failures.push(format!("monotonicity case gave {other:?}")),
    }
    match FuzzyNumber::new(two, vec![0.0, 1.0, 1.0], vec![2.0, 1.0]) {
        Err(Error::LengthMismatch { .. }) => {}
        other => failures.push(format!("length case gave {other:?}")),
    }
    Outcome::new(
        &failures,
        "1000 random numbers exact at grid levels; crossing, monotonicity and length errors".into(),
    )
}

fn telescoping_identity() -> Outcome {
    let mut rng = common::rng(4);
    let domain = DomainGrid::default();
    let mut failures = Vec::new();
    for t in 0..500 {
        let m = rng.random_range(1..=8);
        let phis: Vec<ScalarFunction> = (0..m)
            .map(|_| common::unit_scalar(&mut rng, &domain))
            .collect();
        let psis = telescoping_psis(&phis).unwrap();
        for i in 0..domain.len() {
            let sum: f64 = psis.iter().map(|p| p.value(i)).sum();
            let prod: f64 = phis.iter().map(|p| 1.0 - p.value(i)).product();
            let err = (sum - (1.0 - prod)).abs();
            if err > TOL {
                failures.push(format!("tuple {t} point {i}: error {err:e}"));
            }
        }
    }
    Outcome::new(&failures, "500 tuples, m <= 8, tol 1e-12".into())
}

/// `max_x min_g d∞(f(x), g(x))`, computed without the library's helpers.
fn pointwise_target(f: &FuzzyFunction, class: &FunctionClass) -> f64 {
    (0..f.domain().len())
        .map(|i| {
            class
                .enumeration()
                .iter()
                .map(|g| f.value(i).d_inf(g.value(i)).unwrap())
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
}

fn constructive_bound() -> Outcome {
    let start = Instant::now();
    let mut rng = common::rng(5);
    let (domain, grid) = default_grids();
    let mut failures = Vec::new();
    let mut runs = 0;
    for fixture in 0..100 {
        let count = rng.random_range(5..=50);
        let class = if fixture % 2 == 0 {
            common::random_crisp_class(&mut rng, &domain, &grid, count, 0.0, 2.0)
        } else {
            common::random_fuzzy_class(&mut rng, &domain, &grid, count, -1.0, 3.0)
        };
        let f = common::fuzzy_function(&mut rng, &domain, &grid);
        let target = pointwise_target(&f, &class);
        for eps in [0.01, 0.05, 0.1] {
            runs += 1;
            match construct_approximant(&f, &class, eps) {
                Ok(r) => {
                    let achieved = f.distance(&r.h).unwrap();
                    if achieved > target + 3.0 * eps + 1e-9 {
                        failures.push(format!(
                            "fixture {fixture} eps {eps}: D = {achieved} > {target} + 3 eps"
                        ));
                    }
                    if !class.contains(&r.h) {
                        failures.push(format!("fixture {fixture} eps {eps}: h not in W"));
                    }
                }
                Err(e) => failures.push(format!("fixture {fixture} eps {eps}: {e}")),
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(60) {
        failures.push(format!("runtime {elapsed:?} exceeds 60 s"));
    }
    Outcome::new(
        &failures,
        format!("100 fixtures x 3 epsilons = {runs} runs, 5-50 candidates, {elapsed:.2?}"),
    )
}

/// Every crisp function on `domain` with values in `{-1, -1 + 1/n, ..., 1}`.
fn lattice_class(domain: &DomainGrid, grid: &LevelGrid, n: usize) -> FunctionClass {
    let values: Vec<f64> = (0..=2 * n).map(|j| -1.0 + j as f64 / n as f64).collect();
    let k = domain.len();
    let total = values.len().pow(k as u32);
    let functions: Vec<FuzzyFunction> = (0..total)
        .map(|mut code| {
            let point_values = (0..k)
                .map(|_| {
                    let v = values[code % values.len()];
                    code /= values.len();
                    FuzzyNumber::crisp_on(grid, v)
                })
                .collect();
            FuzzyFunction::new(domain.clone(), point_values).unwrap()
        })
        .collect();
    let constants: Vec<FuzzyFunction> = [-1.0, 0.0, 1.0]
        .iter()
        .map(|&c| FuzzyFunction::constant(domain, FuzzyNumber::crisp_on(grid, c)))
        .collect();
    FunctionClass::new(
        Membership::PointwiseCrispRange { lo: -1.0, hi: 1.0 },
        constants,
    )
    .and_then(|w| w.with_candidates(functions))
    .and_then(|w| w.with_multipliers(vec![common::ramp(domain)]))
    .unwrap()
}

fn equality_trend() -> Outcome {
    let mut rng = common::rng(6);
    let grid = LevelGrid::default();
    let mut failures = Vec::new();
    let mut gaps = Vec::new();
    let mut fixtures = 0;
    for points in [3, 4] {
        let domain = DomainGrid::uniform(points);
        let coarse = lattice_class(&domain, &grid, 2);
        let fine = lattice_class(&domain, &grid, 4);
        for _ in 0..5 {
            fixtures += 1;
            let f = common::fuzzy_function(&mut rng, &domain, &grid);
            let a = oracle_report(&f, &coarse).unwrap();
            let b = oracle_report(&f, &fine).unwrap();
            if !a.attainment.hypothesis_met || !b.attainment.hypothesis_met {
                failures.push(format!("{points}-point fixture does not separate points"));
            }
            if b.gap > a.gap + TOL {
                failures.push(format!(
                    "{points}-point fixture: gap rose from {} to {}",
                    a.gap, b.gap
                ));
            }
            gaps.push(a.gap.max(b.gap));
        }
    }
    let worst = gaps.iter().cloned().fold(0.0, f64::max);
    Outcome::new(
        &failures,
        format!("{fixtures} fixtures, lattice density 2 -> 4, largest gap {worst:e}"),
    )
}

fn real_exactness() -> Outcome {
    let mut rng = common::rng(7);
    let (domain, grid) = default_grids();
    let mut failures = Vec::new();
    for i in 0..1000 {
        let f = common::fuzzy_function(&mut rng, &domain, &grid);
        let r = midpoint_selector(&f);
        let d = dist_to_real(&f, &r.f0).unwrap();
        if (d - radius(&f)).abs() > TOL {
            failures.push(format!("f {i}: D(f, F0) = {d}, rad = {}", radius(&f)));
        }
    }
    for i in 0..20 {
        let f = common::fuzzy_function(&mut rng, &domain, &grid);
        let rad = radius(&f);
        let f0 = midpoint_selector(&f).f0;
        let d0 = dist_to_real(&f, &f0).unwrap();
        for j in 0..200 {
            let candidate = if j % 2 == 0 {
                common::scalar_in(&mut rng, &domain, -6.0, 6.0)
            } else {
                let noise = common::scalar_in(&mut rng, &domain, -0.2, 0.2);
                let values = f0
                    .values()
                    .iter()
                    .zip(noise.values())
                    .map(|(a, b)| a + b)
                    .collect();
                ScalarFunction::new(domain.clone(), values).unwrap()
            };
            let d = dist_to_real(&f, &candidate).unwrap();
            if d < rad - TOL {
                failures.push(format!("f {i} F {j}: D = {d} < rad = {rad}"));
            }
            if d0 > d {
                failures.push(format!("f {i} F {j}: D(f, F0) = {d0} > {d}"));
            }
        }
    }
    Outcome::new(&failures, "1000 f exact; 20 f x 200 F lower bound".into())
}

fn level_monotonicity() -> Outcome {
    let mut rng = common::rng(8);
    let (domain, grid) = default_grids();
    let mut failures = Vec::new();
    for i in 0..500 {
        let f = common::fuzzy_function(&mut rng, &domain, &grid);
        let real = common::scalar_in(&mut rng, &domain, -5.0, 5.0);
        let d: Vec<f64> = grid
            .levels()
            .iter()
            .map(|&l| dist_to_real_level(&f, &real, l).unwrap())
            .collect();
        for a in 0..d.len() {
            for b in a..d.len() {
                if d[a] < d[b] {
                    failures.push(format!("pair {i}: D at level index {a} below index {b}"));
                }
            }
        }
        if dist_to_real(&f, &real).unwrap() != d[d.len() - 1] {
            failures.push(format!("pair {i}: D differs from D_1"));
        }
    }
    Outcome::new(&failures, "500 pairs, all level pairs, D == D_1".into())
}

fn selection_validity() -> Outcome {
    let mut rng = common::rng(9);
    let (domain, grid) = default_grids();
    let mut failures = Vec::new();
    for i in 0..1000 {
        let f = common::fuzzy_function(&mut rng, &domain, &grid);
        let r = midpoint_selector(&f);
        for x in 0..domain.len() {
            let g = g_interval(&f, x).unwrap();
            if g.lo > g.hi || !g.contains(r.f0.value(x)) {
                failures.push(format!(
                    "f {i} point {x}: F0 = {} outside {g}",
                    r.f0.value(x)
                ));
            }
        }
    }
    let tight = fixtures::constant_core();
    for x in 0..domain.len() {
        let g = g_interval(&tight, x).unwrap();
        if g.lo != 1.0 || g.hi != 1.0 {
            failures.push(format!("tight fixture point {x}: G = {g}"));
        }
    }
    Outcome::new(
        &failures,
        "1000 random f; tight fixture gives G = [1, 1]".into(),
    )
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_fuzzy-approx"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "{args:?} exited with {}: {}",
            out.status,
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(out.stdout)
}

fn key_values(stdout: &[u8]) -> HashMap<String, String> {
    String::from_utf8_lossy(stdout)
        .lines()
        .take_while(|l| !l.is_empty())
        .filter_map(|l| l.split_once('='))
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

fn same_bits(map: &HashMap<String, String>, key: &str, expected: f64) -> bool {
    map.get(key)
        .and_then(|v| v.parse::<f64>().ok())
        .is_some_and(|v| v.to_bits() == expected.to_bits())
}

fn cli_determinism() -> Outcome {
    let dir = common::fixture_dir();
    let mut failures = Vec::new();

    let mut files: Vec<_> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    files.sort();
    for path in &files {
        let text = fs::read_to_string(path).unwrap();
        let resaved = match AnyDocument::from_json(&text) {
            Ok(AnyDocument::Function(doc)) => match doc.to_function() {
                Ok(LoadedFunction::Fuzzy(f)) => FunctionDocument::from_fuzzy(&f).to_json(),
                Ok(LoadedFunction::Scalar(s)) => FunctionDocument::from_scalar(&s).to_json(),
                Err(e) => {
                    failures.push(format!("{}: {e}", path.display()));
                    continue;
                }
            },
            Ok(AnyDocument::Class(doc)) => match doc.to_class() {
                Ok(class) => ClassDocument::from_class(&class, &doc.names())
                    .unwrap()
                    .to_json(),
                Err(e) => {
                    failures.push(format!("{}: {e}", path.display()));
                    continue;
                }
            },
            Err(e) => {
                failures.push(format!("{}: {e}", path.display()));
                continue;
            }
        };
        if resaved != text {
            failures.push(format!("{}: save/load not identical", path.display()));
        }
    }

    let p = |name: &str| dir.join(format!("{name}.json")).display().to_string();
    let class_path = p("crisp_constants_class");
    let commands: Vec<Vec<String>> = vec![
        vec!["dist".into(), p("fuzzy_wave"), p("crisp_ramp")],
        vec!["dist-real".into(), p("constant_core"), p("zero_real")],
        vec!["radius".into(), p("mixed_width")],
        vec!["best-real".into(), p("fuzzy_wave")],
        vec!["check".into(), class_path.clone()],
        vec!["oracle".into(), p("fuzzy_wave"), class_path.clone()],
        vec![
            "approx".into(),
            p("fuzzy_wave"),
            class_path.clone(),
            "--epsilon".into(),
            "0.05".into(),
        ],
    ];
    let mut outputs = HashMap::new();
    for args in &commands {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        match (run_cli(&args), run_cli(&args)) {
            (Ok(a), Ok(b)) if a == b => {
                outputs.insert(args[0].to_string(), a);
            }
            (Ok(_), Ok(_)) => failures.push(format!("{}: repeated runs differ", args[0])),
            (Err(e), _) | (_, Err(e)) => failures.push(e),
        }
    }

    let class = fixtures::crisp_constants_class();
    for (stem, f) in fixtures::fuzzy_functions() {
        let f_path = p(stem);
        let oracle = run_cli(&["oracle", &f_path, &class_path]).map(|o| key_values(&o));
        let approx =
            run_cli(&["approx", &f_path, &class_path, "--epsilon", "0.05"]).map(|o| key_values(&o));
        let (oracle, approx) = match (oracle, approx) {
            (Ok(o), Ok(a)) => (o, a),
            (Err(e), _) | (_, Err(e)) => {
                failures.push(e);
                continue;
            }
        };
        let lib = oracle_report(&f, &class).unwrap();
        let agrees = same_bits(&oracle, "global", lib.global)
            && same_bits(&oracle, "max_pointwise", lib.max_pointwise)
            && same_bits(&oracle, "gap", lib.gap)
            && oracle.get("global_argmin").map(String::as_str)
                == Some(CONSTANT_NAMES[lib.global_argmin])
            && oracle.get("attainment_index") == Some(&lib.attainment.index.to_string());
        if !agrees {
            failures.push(format!("{stem}: oracle output disagrees with library"));
        }
        let lib = construct_approximant(&f, &class, 0.05).unwrap();
        let agrees = same_bits(&approx, "target", lib.target)
            && same_bits(&approx, "achieved", lib.achieved)
            && same_bits(&approx, "bound", lib.bound())
            && same_bits(&approx, "delta", lib.delta)
            && same_bits(&approx, "k", lib.k_const)
            && approx.get("cover_size") == Some(&lib.cover.len().to_string());
        if !agrees {
            failures.push(format!("{stem}: approx output disagrees with library"));
        }
        let gamma = gamma_profile(&f, &class).unwrap();
        if gamma != lib.gamma {
            failures.push(format!("{stem}: gamma profile mismatch"));
        }
    }

    let saved = tempfile::tempdir().unwrap();
    let h_path = saved.path().join("h.json");
    let h_arg = h_path.display().to_string();
    match run_cli(&[
        "approx",
        &p("fuzzy_wave"),
        &class_path,
        "--epsilon",
        "0.05",
        "--out",
        &h_arg,
    ]) {
        Ok(_) => {
            let lib = construct_approximant(&fixtures::fuzzy_wave(), &class, 0.05).unwrap();
            match FunctionDocument::load(Path::new(&h_path)).and_then(|d| d.to_fuzzy()) {
                Ok(h) if h == lib.h => {}
                Ok(_) => failures.push("saved h differs from library h".into()),
                Err(e) => failures.push(format!("saved h: {e}")),
            }
        }
        Err(e) => failures.push(e),
    }

    Outcome::new(
        &failures,
        format!(
            "{} fixture files, {} commands run twice, oracle/approx on {} functions",
            files.len(),
            outputs.len(),
            fixtures::fuzzy_functions().len()
        ),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("metric axioms", metric_axioms),
        ("sum and scaling inequalities", scaling_properties),
        ("level-set round trip and validation", level_set_round_trip),
        ("telescoping identity", telescoping_identity),
        ("constructive bound", constructive_bound),
        ("gap trend under refinement", equality_trend),
        ("best real approximant exactness", real_exactness),
        ("level monotonicity", level_monotonicity),
        ("selection validity", selection_validity),
        ("CLI determinism and round trip", cli_determinism),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let outcome = run();
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status} {name}: {}", n + 1, outcome.detail);
        failed += usize::from(!outcome.passed);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
