//! Distance from a fuzzy-number-valued function to real-valued functions and
//! the best real-valued approximant.
//!
//! `D(f, F) = max_x sup{|F(x) - t| : t ∈ core f(x)}`. Its infimum over all
//! real functions equals `rad(f)`, the largest core half-width, and the core
//! midpoint is a continuous selection attaining it: it always lies in
//! `G(x) = {α : core f(x) ⊆ [α - rad(f), α + rad(f)]}`.

use crate::error::{Error, Result};
use crate::fuzzy::Interval;
use crate::space::{FuzzyFunction, ScalarFunction};

/// Which level set of `f(x)` the distances are measured against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Convention {
    /// Level 1.
    #[default]
    Core,
    /// Level 0.
    Support,
}

impl Convention {
    pub fn level(self) -> f64 {
        match self {
            Convention::Core => 1.0,
            Convention::Support => 0.0,
        }
    }

    fn interval(self, f: &FuzzyFunction, index: usize) -> Interval {
        match self {
            Convention::Core => f.value(index).core(),
            Convention::Support => f.value(index).support(),
        }
    }
}

fn check_domain(f: &FuzzyFunction, real: &ScalarFunction) -> Result<()> {
    if f.domain() != real.domain() {
        return Err(Error::GridMismatch);
    }
    Ok(())
}

fn farthest_over(intervals: impl Iterator<Item = Interval>, real: &ScalarFunction) -> f64 {
    intervals
        .zip(real.values())
        .fold(0.0, |acc, (iv, &a)| acc.max(iv.farthest_distance(a)))
}

/// `D(f, F)` measured at the cores.
pub fn dist_to_real(f: &FuzzyFunction, real: &ScalarFunction) -> Result<f64> {
    dist_to_real_with(f, real, Convention::Core)
}

pub fn dist_to_real_with(
    f: &FuzzyFunction,
    real: &ScalarFunction,
    convention: Convention,
) -> Result<f64> {
    check_domain(f, real)?;
    let intervals = (0..f.domain().len()).map(|i| convention.interval(f, i));
    Ok(farthest_over(intervals, real))
}

/// `D_λ(f, F)` measured at the `λ`-level sets.
pub fn dist_to_real_level(f: &FuzzyFunction, real: &ScalarFunction, lambda: f64) -> Result<f64> {
    check_domain(f, real)?;
    let intervals = f
        .values()
        .iter()
        .map(|u| u.level_set(lambda))
        .collect::<Result<Vec<_>>>()?;
    Ok(farthest_over(intervals.into_iter(), real))
}

/// `rad(x, f)`: the half-width of the core at the indexed point.
pub fn radius_at(f: &FuzzyFunction, index: usize) -> Result<f64> {
    radius_at_with(f, index, Convention::Core)
}

pub fn radius_at_with(f: &FuzzyFunction, index: usize, convention: Convention) -> Result<f64> {
    f.domain().check_index(index)?;
    Ok(convention.interval(f, index).radius())
}

/// `rad(f) = max_x rad(x, f)`.
pub fn radius(f: &FuzzyFunction) -> f64 {
    radius_with(f, Convention::Core)
}

pub fn radius_with(f: &FuzzyFunction, convention: Convention) -> f64 {
    (0..f.domain().len())
        .map(|i| convention.interval(f, i).radius())
        .fold(0.0, f64::max)
}

/// `D(f, C(K))`, which equals `rad(f)`.
pub fn best_real_distance(f: &FuzzyFunction) -> f64 {
    radius(f)
}

fn selection_interval(core: Interval, rad: f64) -> Interval {
    let lo = core.hi - rad;
    let hi = core.lo + rad;
    if lo <= hi {
        Interval { lo, hi }
    } else {
        // the two bounds crossed by rounding when the core is as wide as 2·rad
        Interval::point(core.midpoint())
    }
}

/// `G(x) = [f(x)⁺(1) - rad(f), f(x)⁻(1) + rad(f)]`: all centers whose
/// `rad(f)`-ball contains the core at `x`.
pub fn g_interval(f: &FuzzyFunction, index: usize) -> Result<Interval> {
    f.domain().check_index(index)?;
    Ok(selection_interval(f.value(index).core(), radius(f)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct RealApproxReport {
    pub convention: Convention,
    /// `x ↦ rad(x, f)`.
    pub rad_profile: ScalarFunction,
    /// `rad(f)`.
    pub radius: f64,
    /// The selection `F₀(x)`, the midpoint of the reference interval.
    pub f0: ScalarFunction,
    /// `D(f, F₀)`.
    pub achieved: f64,
    /// `G(x)` at every domain point.
    pub g_intervals: Vec<Interval>,
}

/// Best real-valued approximant under the core convention.
pub fn midpoint_selector(f: &FuzzyFunction) -> RealApproxReport {
    midpoint_selector_with(f, Convention::Core)
}

pub fn midpoint_selector_with(f: &FuzzyFunction, convention: Convention) -> RealApproxReport {
    let domain = f.domain();
    let intervals: Vec<Interval> = (0..domain.len())
        .map(|i| convention.interval(f, i))
        .collect();
    let rad_values: Vec<f64> = intervals.iter().map(Interval::radius).collect();
    let radius = rad_values.iter().copied().fold(0.0, f64::max);
    let f0 = ScalarFunction::new(
        domain.clone(),
        intervals.iter().map(Interval::midpoint).collect(),
    )
    .expect("midpoints of finite intervals are finite");
    let achieved = farthest_over(intervals.iter().copied(), &f0);
    let g_intervals = intervals
        .iter()
        .map(|&iv| selection_interval(iv, radius))
        .collect();
    RealApproxReport {
        convention,
        rad_profile: ScalarFunction::new(domain.clone(), rad_values)
            .expect("radii of finite intervals are finite"),
        radius,
        f0,
        achieved,
        g_intervals,
    }
}
