//! Best approximation of a fuzzy-number-valued function inside a function
//! class `W`.
//!
//! `d(f, W)` is the infimum of the uniform distance `D(f, g)` over `W` and
//! `d_x(f, W)` the infimum of the pointwise distance at `x`. Both infima run
//! over the class's finite enumeration. When the multipliers of `W` separate
//! points the two agree at the worst point, `d(f, W) = max_x d_x(f, W)`, and
//! [`construct_approximant`] builds an element `h ∈ W` with
//! `D(f, h) ≤ max_x d_x(f, W) + 3ε` by gluing local best matches with a
//! telescoping partition of bumps.

use crate::conv::{bump, separates_points, telescoping_psis, BumpSpec, FunctionClass, IndexRun};
use crate::error::{Error, Result};
use crate::space::{convex_combine, FuzzyFunction, ScalarFunction};

/// Absolute slack for every distance comparison against a theoretical bound.
pub const DISTANCE_TOLERANCE: f64 = 1e-9;

/// Smallest-index minimizer of `d∞(f(x_i), g(x_i))` over the enumeration.
fn nearest_at(f: &FuzzyFunction, class: &FunctionClass, index: usize) -> (usize, f64) {
    let target = f.value(index);
    class
        .enumeration()
        .iter()
        .map(|g| target.d_inf_unchecked(g.value(index)))
        .enumerate()
        .fold(
            (0, f64::INFINITY),
            |best, (j, d)| if d < best.1 { (j, d) } else { best },
        )
}

fn check_inputs(f: &FuzzyFunction, class: &FunctionClass) -> Result<()> {
    class.check_function(f)?;
    if class.enumeration().is_empty() {
        return Err(Error::EmptyClass);
    }
    Ok(())
}

/// `d_x(f, W)` at the domain point with the given index.
pub fn pointwise_distance(f: &FuzzyFunction, class: &FunctionClass, index: usize) -> Result<f64> {
    check_inputs(f, class)?;
    f.domain().check_index(index)?;
    Ok(nearest_at(f, class, index).1)
}

/// `γ(x) = d_x(f, W)` at every domain point.
pub fn gamma_profile(f: &FuzzyFunction, class: &FunctionClass) -> Result<ScalarFunction> {
    check_inputs(f, class)?;
    let values = (0..f.domain().len())
        .map(|i| nearest_at(f, class, i).1)
        .collect();
    ScalarFunction::new(f.domain().clone(), values)
}

/// Brute-force `d(f, W)`: the minimum of `D(f, g)` over the enumeration,
/// together with the smallest minimizing index.
pub fn global_distance_oracle(f: &FuzzyFunction, class: &FunctionClass) -> Result<(usize, f64)> {
    check_inputs(f, class)?;
    Ok(class
        .enumeration()
        .iter()
        .map(|g| f.distance_unchecked(g))
        .enumerate()
        .fold(
            (0, f64::INFINITY),
            |best, (j, d)| if d < best.1 { (j, d) } else { best },
        ))
}

/// Where `γ` attains its maximum.
#[derive(Debug, Clone, PartialEq)]
pub struct Attainment {
    pub index: usize,
    pub point: f64,
    pub value: f64,
    /// Whether the class's multiplier family separates points. When it does
    /// not, `value` need not equal `d(f, W)`.
    pub hypothesis_met: bool,
}

/// Smallest-index maximizer of the `γ` profile.
pub fn attainment_point(f: &FuzzyFunction, class: &FunctionClass) -> Result<Attainment> {
    let gamma = gamma_profile(f, class)?;
    let (index, value) =
        gamma
            .values()
            .iter()
            .copied()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |best, (i, v)| {
                if v > best.1 {
                    (i, v)
                } else {
                    best
                }
            });
    Ok(Attainment {
        index,
        point: f.domain().points()[index],
        value,
        hypothesis_met: separates_points(class.multipliers(), class.domain())?,
    })
}

/// Global oracle, pointwise maximum and their gap in one pass.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub global: f64,
    pub global_argmin: usize,
    pub max_pointwise: f64,
    pub attainment: Attainment,
    pub gap: f64,
}

pub fn oracle_report(f: &FuzzyFunction, class: &FunctionClass) -> Result<OracleReport> {
    let (global_argmin, global) = global_distance_oracle(f, class)?;
    let attainment = attainment_point(f, class)?;
    Ok(OracleReport {
        global,
        global_argmin,
        max_pointwise: attainment.value,
        gap: (global - attainment.value).abs(),
        attainment,
    })
}

/// One element of the finite cover: a center `x_i`, its local best match
/// `f_{x_i}`, the set `N(x_i)` where that match is good enough and the run
/// `U(x_i) ⊆ N(x_i)` around the center.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverPatch {
    pub center: usize,
    pub candidate: usize,
    pub inner: IndexRun,
    pub outer: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct ApproxReport {
    pub epsilon: f64,
    /// `max_x d_x(f, W)`.
    pub target: f64,
    pub gamma: ScalarFunction,
    pub delta: f64,
    pub k_const: f64,
    pub cover: Vec<CoverPatch>,
    pub local_approximants: Vec<FuzzyFunction>,
    pub bumps: Vec<ScalarFunction>,
    pub psis: Vec<ScalarFunction>,
    pub h: FuzzyFunction,
    /// `D(f, h)`.
    pub achieved: f64,
}

impl ApproxReport {
    /// `target + 3ε`.
    pub fn bound(&self) -> f64 {
        self.target + 3.0 * self.epsilon
    }

    pub fn is_center(&self, index: usize) -> bool {
        self.cover.iter().any(|p| p.center == index)
    }
}

/// Builds `h ∈ W` with `D(f, h) ≤ max_x d_x(f, W) + 3ε`.
///
/// 1. `target = max_x d_x(f, W)`; every point `x'` gets its best enumerated
///    match `f_{x'}`.
/// 2. `N(x') = {t : d∞(f(t), f_{x'}(t)) < target + ε}` and `U(x')` is the
///    maximal run of `N(x')` through `x'`.
/// 3. Centers are picked greedily, leftmost uncovered point first, until the
///    runs cover the domain.
/// 4. `k = max{D(f, 0), D(f, f_{x_i})}` and `δ = ½·min(½, ε / (k m))`.
/// 5. Bumps `φ_i` for `(U(x_i), N(x_i), δ)` and the telescoping `ψ_i`.
/// 6. `h = φ₁ f_{x₁} + (1 - φ₁)[φ₂ f_{x₂} + (1 - φ₂)[⋯ + (1 - φ_{m-1}) f_{x_m}]]`,
///    built with convex combinations only, so `h ∈ W` whenever each `φ_i`
///    lies in `Conv(W)`.
pub fn construct_approximant(
    f: &FuzzyFunction,
    class: &FunctionClass,
    epsilon: f64,
) -> Result<ApproxReport> {
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(Error::InvalidEpsilon(epsilon));
    }
    check_inputs(f, class)?;
    let domain = class.domain();
    if !separates_points(class.multipliers(), domain)? {
        return Err(Error::SeparationHypothesisUnmet);
    }
    let n = domain.len();
    let enumeration = class.enumeration();

    let nearest: Vec<(usize, f64)> = (0..n).map(|i| nearest_at(f, class, i)).collect();
    let target = nearest.iter().fold(0.0_f64, |acc, &(_, d)| acc.max(d));
    let gamma = ScalarFunction::new(domain.clone(), nearest.iter().map(|&(_, d)| d).collect())?;
    let threshold = target + epsilon;

    let mut covered = vec![false; n];
    let mut cover = Vec::new();
    while let Some(center) = covered.iter().position(|c| !c) {
        let candidate = nearest[center].0;
        let local = f.pointwise_distances(&enumeration[candidate])?;
        let good: Vec<bool> = local.iter().map(|&d| d < threshold).collect();
        if !good[center] {
            return Err(Error::CoverFailure { index: center });
        }
        let mut start = center;
        while start > 0 && good[start - 1] {
            start -= 1;
        }
        let mut end = center;
        while end + 1 < n && good[end + 1] {
            end += 1;
        }
        let inner = IndexRun::new(start, end);
        for i in inner.indices() {
            covered[i] = true;
        }
        cover.push(CoverPatch {
            center,
            candidate,
            inner,
            outer: (0..n).filter(|&i| good[i]).collect(),
        });
    }
    let m = cover.len();

    let local_approximants: Vec<FuzzyFunction> = cover
        .iter()
        .map(|p| enumeration[p.candidate].clone())
        .collect();
    let zero = FuzzyFunction::zero(domain, class.levels());
    let k_const = local_approximants
        .iter()
        .map(|g| f.distance_unchecked(g))
        .fold(f.distance_unchecked(&zero), f64::max);
    let delta = 0.5 * (epsilon / (k_const * m as f64)).min(0.5);

    let bumps = cover
        .iter()
        .map(|p| {
            let spec = BumpSpec::new(domain, p.center, p.inner, &p.outer, delta)?;
            bump(&spec, class)
        })
        .collect::<Result<Vec<_>>>()?;
    let psis = telescoping_psis(&bumps)?;

    let mut h = local_approximants[m - 1].clone();
    for (phi, g) in bumps.iter().zip(&local_approximants).take(m - 1).rev() {
        h = convex_combine(phi, g, &h)?;
    }
    if !class.contains(&h) {
        return Err(Error::MembershipFailure);
    }

    let achieved = f.distance_unchecked(&h);
    let report = ApproxReport {
        epsilon,
        target,
        gamma,
        delta,
        k_const,
        cover,
        local_approximants,
        bumps,
        psis,
        h,
        achieved,
    };
    if achieved > report.bound() + DISTANCE_TOLERANCE {
        return Err(Error::BoundViolated {
            achieved,
            bound: report.bound(),
        });
    }
    Ok(report)
}
