#![allow(dead_code)]

use std::path::PathBuf;

use fuzzy_approx::{
    DomainGrid, FunctionClass, FuzzyFunction, FuzzyNumber, LevelGrid, Membership, ScalarFunction,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

/// Random fuzzy number with core inside `[center - 1, center + 1]` and
/// spreads up to `2`. About one in ten is crisp, one in ten has a
/// single-point core.
pub fn fuzzy_number_around(rng: &mut impl Rng, grid: &LevelGrid, center: f64) -> FuzzyNumber {
    let n = grid.len();
    let kind = rng.random_range(0..10);
    let a = center + rng.random_range(-1.0..1.0);
    if kind == 0 {
        return FuzzyNumber::crisp_on(grid, a);
    }
    let b = if kind == 1 {
        a
    } else {
        a + rng.random_range(0.0..1.0)
    };
    let mut lo = vec![0.0; n];
    let mut hi = vec![0.0; n];
    lo[n - 1] = a;
    hi[n - 1] = b;
    for j in (0..n - 1).rev() {
        lo[j] = lo[j + 1] - rng.random_range(0.0..2.0 / n as f64);
        hi[j] = hi[j + 1] + rng.random_range(0.0..2.0 / n as f64);
    }
    FuzzyNumber::new(grid.clone(), lo, hi).expect("generator keeps invariants")
}

pub fn fuzzy_number(rng: &mut impl Rng, grid: &LevelGrid) -> FuzzyNumber {
    let center = rng.random_range(-4.0..4.0);
    fuzzy_number_around(rng, grid, center)
}

/// Random fuzzy function whose core centers follow a random walk, so
/// neighbouring samples stay close.
pub fn fuzzy_function(rng: &mut impl Rng, domain: &DomainGrid, grid: &LevelGrid) -> FuzzyFunction {
    let mut center = rng.random_range(-2.0..2.0);
    let values = domain
        .points()
        .iter()
        .map(|_| {
            center += rng.random_range(-0.3..0.3);
            fuzzy_number_around(rng, grid, center)
        })
        .collect();
    FuzzyFunction::new(domain.clone(), values).expect("shared grids")
}

/// Random real function with values in `[lo, hi]`, built as a clamped
/// random walk.
pub fn scalar_in(rng: &mut impl Rng, domain: &DomainGrid, lo: f64, hi: f64) -> ScalarFunction {
    let step = (hi - lo) / 4.0;
    let mut v = rng.random_range(lo..=hi);
    let values = domain
        .points()
        .iter()
        .map(|_| {
            v = (v + rng.random_range(-step..=step)).clamp(lo, hi);
            v
        })
        .collect();
    ScalarFunction::new(domain.clone(), values).expect("finite")
}

pub fn unit_scalar(rng: &mut impl Rng, domain: &DomainGrid) -> ScalarFunction {
    let s = scalar_in(rng, domain, 0.0, 1.0);
    ScalarFunction::unit(domain.clone(), s.values().to_vec()).expect("unit range")
}

/// Crisp function with values in `[lo, hi]`.
pub fn crisp_function(
    rng: &mut impl Rng,
    domain: &DomainGrid,
    grid: &LevelGrid,
    lo: f64,
    hi: f64,
) -> FuzzyFunction {
    let s = scalar_in(rng, domain, lo, hi);
    let values = s
        .values()
        .iter()
        .map(|&v| FuzzyNumber::crisp_on(grid, v))
        .collect();
    FuzzyFunction::new(domain.clone(), values).expect("shared grids")
}

/// Fuzzy function whose supports stay inside `[lo, hi]`.
pub fn supported_function(
    rng: &mut impl Rng,
    domain: &DomainGrid,
    grid: &LevelGrid,
    lo: f64,
    hi: f64,
) -> FuzzyFunction {
    let centers = scalar_in(rng, domain, lo + 0.5, hi - 0.5);
    let values = centers
        .values()
        .iter()
        .map(|&c| {
            let left: f64 = rng.random_range(0.0..0.5);
            let right: f64 = rng.random_range(0.0..0.5);
            let core_lo = c - left * rng.random_range(0.0..=1.0);
            let core_hi = c + right * rng.random_range(0.0..=1.0);
            FuzzyNumber::trapezoidal_on(grid, c - left, core_lo, core_hi, c + right)
                .expect("ordered parameters")
        })
        .collect();
    FuzzyFunction::new(domain.clone(), values).expect("shared grids")
}

/// Membership "every value has support inside `[lo, hi]`". Closed under
/// pointwise convex combinations.
pub fn support_range_rule(lo: f64, hi: f64) -> Membership {
    Membership::custom(
        format!("support-range({lo}, {hi})"),
        move |f: &FuzzyFunction| {
            f.values().iter().all(|v| {
                let s = v.support();
                s.lo >= lo - 1e-9 && s.hi <= hi + 1e-9
            })
        },
    )
}

/// `phi(x) = x` on the given domain.
pub fn ramp(domain: &DomainGrid) -> ScalarFunction {
    ScalarFunction::unit_from_fn(domain, |x| x).expect("unit range")
}

/// Pointwise crisp class on `[lo, hi]` with `count` random candidates.
pub fn random_crisp_class(
    rng: &mut impl Rng,
    domain: &DomainGrid,
    grid: &LevelGrid,
    count: usize,
    lo: f64,
    hi: f64,
) -> FunctionClass {
    let candidates = (0..count)
        .map(|_| crisp_function(rng, domain, grid, lo, hi))
        .collect();
    FunctionClass::new(Membership::PointwiseCrispRange { lo, hi }, candidates)
        .and_then(|w| w.with_multipliers(vec![ramp(domain)]))
        .expect("valid class")
}

/// Fuzzy class "supports inside `[lo, hi]`" with `count` random candidates.
pub fn random_fuzzy_class(
    rng: &mut impl Rng,
    domain: &DomainGrid,
    grid: &LevelGrid,
    count: usize,
    lo: f64,
    hi: f64,
) -> FunctionClass {
    let candidates = (0..count)
        .map(|_| supported_function(rng, domain, grid, lo, hi))
        .collect();
    FunctionClass::new(support_range_rule(lo, hi), candidates)
        .and_then(|w| w.with_multipliers(vec![ramp(domain)]))
        .expect("valid class")
}
