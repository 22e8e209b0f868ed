//! Named example functions and classes. The JSON files under `fixtures/`
//! are generated from these by `cargo run --example write_fixtures`.

use std::f64::consts::PI;

use crate::conv::{FunctionClass, Membership};
use crate::fuzzy::{FuzzyNumber, LevelGrid};
use crate::space::{DomainGrid, FuzzyFunction, ScalarFunction};

fn trap(a: f64, b: f64, c: f64, d: f64) -> crate::Result<FuzzyNumber> {
    FuzzyNumber::trapezoidal_on(&LevelGrid::default(), a, b, c, d)
}

/// `f(x) = crisp(x)`.
pub fn crisp_ramp() -> FuzzyFunction {
    FuzzyFunction::from_fn(&DomainGrid::default(), |x| Ok(FuzzyNumber::crisp(x)))
        .expect("valid fixture")
}

/// Core `[0, 2]` and support `[-1, 3]` at every point.
pub fn constant_core() -> FuzzyFunction {
    FuzzyFunction::from_fn(&DomainGrid::default(), |_| trap(-1.0, 0.0, 2.0, 3.0))
        .expect("valid fixture")
}

/// Core `[0, x]`, so the core half-width grows to `1/2`.
pub fn mixed_width() -> FuzzyFunction {
    FuzzyFunction::from_fn(&DomainGrid::default(), |x| trap(-1.0, 0.0, x, x + 1.0))
        .expect("valid fixture")
}

/// `f(x) = triangular(x - 1, x, x + 1)`.
pub fn triangles_low() -> FuzzyFunction {
    FuzzyFunction::from_fn(&DomainGrid::default(), |x| {
        FuzzyNumber::triangular(x - 1.0, x, x + 1.0)
    })
    .expect("valid fixture")
}

/// `f(x) = triangular(x, x + 1, x + 2)`.
pub fn triangles_high() -> FuzzyFunction {
    FuzzyFunction::from_fn(&DomainGrid::default(), |x| {
        FuzzyNumber::triangular(x, x + 1.0, x + 2.0)
    })
    .expect("valid fixture")
}

/// A fuzzy function with a wavy center and varying spreads.
pub fn fuzzy_wave() -> FuzzyFunction {
    FuzzyFunction::from_fn(&DomainGrid::default(), |x| {
        let m = 1.0 + 0.5 * (2.0 * PI * x).sin();
        let w = 0.1 + 0.2 * x;
        trap(m - w - 0.4, m - w, m + w, m + w + 0.3 * (1.0 - x) + 0.1)
    })
    .expect("valid fixture")
}

/// `F ≡ 0`.
pub fn zero_real() -> ScalarFunction {
    ScalarFunction::constant(&DomainGrid::default(), 0.0).expect("valid fixture")
}

/// `F(x) = x`, a multiplier that separates points.
pub fn ramp_multiplier() -> ScalarFunction {
    ScalarFunction::unit_from_fn(&DomainGrid::default(), |x| x).expect("valid fixture")
}

fn crisp_constants() -> Vec<FuzzyFunction> {
    [0.0, 1.0, 2.0]
        .iter()
        .map(|&c| FuzzyFunction::constant(&DomainGrid::default(), FuzzyNumber::crisp(c)))
        .collect()
}

/// Pointwise crisp functions with values in `[0, 2]`, enumerated by the
/// constants 0, 1 and 2. Every multiplier lies in `Conv(W)`.
pub fn crisp_constants_class() -> FunctionClass {
    FunctionClass::new(
        Membership::PointwiseCrispRange { lo: 0.0, hi: 2.0 },
        crisp_constants(),
    )
    .and_then(|w| w.with_multipliers(vec![ramp_multiplier()]))
    .expect("valid fixture")
}

/// Crisp constant functions with value in `[0, 2]`. Only constant
/// multipliers lie in `Conv(W)`, so points cannot be separated.
pub fn rigid_constants_class() -> FunctionClass {
    FunctionClass::new(
        Membership::CrispConstantRange { lo: 0.0, hi: 2.0 },
        crisp_constants(),
    )
    .expect("valid fixture")
}

pub const CONSTANT_NAMES: [&str; 3] = ["c0", "c1", "c2"];

/// Every shipped fuzzy function, by file stem.
pub fn fuzzy_functions() -> Vec<(&'static str, FuzzyFunction)> {
    vec![
        ("crisp_ramp", crisp_ramp()),
        ("constant_core", constant_core()),
        ("mixed_width", mixed_width()),
        ("triangles_low", triangles_low()),
        ("triangles_high", triangles_high()),
        ("fuzzy_wave", fuzzy_wave()),
    ]
}

/// Every shipped scalar function, by file stem.
pub fn scalar_functions() -> Vec<(&'static str, ScalarFunction)> {
    vec![
        ("zero_real", zero_real()),
        ("ramp_multiplier", ramp_multiplier()),
    ]
}

/// Every shipped class, by file stem.
pub fn classes() -> Vec<(&'static str, FunctionClass)> {
    vec![
        ("crisp_constants_class", crisp_constants_class()),
        ("rigid_constants_class", rigid_constants_class()),
    ]
}
