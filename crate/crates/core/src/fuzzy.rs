//! Fuzzy numbers stored through their level-set endpoint functions.
//!
//! A fuzzy number `u` is determined by the pair `λ ↦ [u⁻(λ), u⁺(λ)]`, where
//! `u⁻` is nondecreasing, `u⁺` is nonincreasing and `u⁻(1) ≤ u⁺(1)`. Both
//! functions are sampled on a [`LevelGrid`] and read piecewise-linearly
//! between grid levels, which makes the left/right continuity requirements
//! hold by construction. Validation therefore reduces to monotonicity,
//! finiteness and the ordering of the endpoints.

use std::fmt;
use std::sync::Arc;

use crate::error::{Endpoint, Error, Result};

/// Number of intervals in the default level grid `{0, 0.1, ..., 1}`.
pub const DEFAULT_LEVEL_INTERVALS: usize = 10;

/// Strictly increasing membership levels `0 = λ₀ < λ₁ < ... < λ_L = 1`.
#[derive(Clone)]
pub struct LevelGrid(Arc<[f64]>);

impl LevelGrid {
    pub fn new(levels: Vec<f64>) -> Result<Self> {
        if levels.len() < 2 {
            return Err(Error::InvalidLevelGrid(format!(
                "need at least two levels, got {}",
                levels.len()
            )));
        }
        if levels[0] != 0.0 {
            return Err(Error::InvalidLevelGrid(format!(
                "first level must be 0, got {}",
                levels[0]
            )));
        }
        if levels[levels.len() - 1] != 1.0 {
            return Err(Error::InvalidLevelGrid(format!(
                "last level must be 1, got {}",
                levels[levels.len() - 1]
            )));
        }
        if let Some(j) = levels.windows(2).position(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidLevelGrid(format!(
                "levels not strictly increasing at index {}",
                j + 1
            )));
        }
        Ok(LevelGrid(levels.into()))
    }

    /// `intervals + 1` equally spaced levels.
    ///
    /// # Panics
    ///
    /// If `intervals` is zero.
    pub fn uniform(intervals: usize) -> Self {
        assert!(intervals >= 1, "a level grid needs at least one interval");
        let n = intervals as f64;
        let levels: Vec<f64> = (0..=intervals)
            .map(|j| if j == intervals { 1.0 } else { j as f64 / n })
            .collect();
        LevelGrid(levels.into())
    }

    pub fn levels(&self) -> &[f64] {
        &self.0
    }

    /// Number of stored levels (`L + 1`).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Bracketing index `j` and local coordinate `t ∈ [0, 1)` with
    /// `λ = λ_j + t (λ_{j+1} - λ_j)`; `t == 0` exactly on grid levels.
    fn bracket(&self, lambda: f64) -> (usize, f64) {
        let levels = &self.0;
        let last = levels.len() - 1;
        if lambda >= 1.0 {
            return (last, 0.0);
        }
        // first index with level > λ, minus one
        let j = levels.partition_point(|&l| l <= lambda) - 1;
        if levels[j] == lambda {
            (j, 0.0)
        } else {
            (j, (lambda - levels[j]) / (levels[j + 1] - levels[j]))
        }
    }
}

impl Default for LevelGrid {
    fn default() -> Self {
        LevelGrid::uniform(DEFAULT_LEVEL_INTERVALS)
    }
}

impl PartialEq for LevelGrid {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl fmt::Debug for LevelGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("LevelGrid").field(&&*self.0).finish()
    }
}

/// A closed real interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo <= hi) {
            return Err(Error::CrossingViolation { index: 0, lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn radius(&self) -> f64 {
        (self.hi - self.lo) / 2.0
    }

    pub fn midpoint(&self) -> f64 {
        (self.lo + self.hi) / 2.0
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Largest distance from `x` to a point of the interval.
    pub fn farthest_distance(&self, x: f64) -> f64 {
        (x - self.lo).abs().max((x - self.hi).abs())
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// A fuzzy number in level-set form.
///
/// Equality is exact equality of the stored endpoint samples.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyNumber {
    grid: LevelGrid,
    lo: Vec<f64>,
    hi: Vec<f64>,
}

impl FuzzyNumber {
    /// Validating constructor: accepts the endpoint samples iff they describe
    /// a fuzzy number (monotone endpoints, `lo ≤ hi`, all finite).
    pub fn new(grid: LevelGrid, lo: Vec<f64>, hi: Vec<f64>) -> Result<Self> {
        let n = grid.len();
        for len in [lo.len(), hi.len()] {
            if len != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: len,
                });
            }
        }
        for (endpoint, values) in [(Endpoint::Lower, &lo), (Endpoint::Upper, &hi)] {
            if let Some(index) = values.iter().position(|v| !v.is_finite()) {
                return Err(Error::NonFinite { endpoint, index });
            }
        }
        if let Some(j) = lo.windows(2).position(|w| w[1] < w[0]) {
            return Err(Error::MonotonicityViolation {
                endpoint: Endpoint::Lower,
                index: j + 1,
                previous: lo[j],
                value: lo[j + 1],
            });
        }
        if let Some(j) = hi.windows(2).position(|w| w[1] > w[0]) {
            return Err(Error::MonotonicityViolation {
                endpoint: Endpoint::Upper,
                index: j + 1,
                previous: hi[j],
                value: hi[j + 1],
            });
        }
        if let Some(index) = lo.iter().zip(&hi).position(|(l, h)| l > h) {
            return Err(Error::CrossingViolation {
                index,
                lo: lo[index],
                hi: hi[index],
            });
        }
        Ok(FuzzyNumber { grid, lo, hi })
    }

    fn from_parts_unchecked(grid: LevelGrid, lo: Vec<f64>, hi: Vec<f64>) -> Self {
        debug_assert!(
            FuzzyNumber::new(grid.clone(), lo.clone(), hi.clone()).is_ok(),
            "internal construction produced an invalid fuzzy number"
        );
        FuzzyNumber { grid, lo, hi }
    }

    /// The real number `x` seen as a fuzzy number on the default grid.
    pub fn crisp(x: f64) -> Self {
        Self::crisp_on(&LevelGrid::default(), x)
    }

    /// # Panics
    ///
    /// If `x` is not finite.
    pub fn crisp_on(grid: &LevelGrid, x: f64) -> Self {
        assert!(x.is_finite(), "crisp value must be finite, got {x}");
        let n = grid.len();
        FuzzyNumber {
            grid: grid.clone(),
            lo: vec![x; n],
            hi: vec![x; n],
        }
    }

    /// Triangular number with support `[a, c]` and core `{b}` on the default grid.
    pub fn triangular(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::triangular_on(&LevelGrid::default(), a, b, c)
    }

    pub fn triangular_on(grid: &LevelGrid, a: f64, b: f64, c: f64) -> Result<Self> {
        Self::trapezoidal_on(grid, a, b, b, c).map_err(|_| Error::OrderViolation {
            params: vec![a, b, c],
        })
    }

    /// Trapezoidal number with support `[a, d]` and core `[b, c]`.
    pub fn trapezoidal_on(grid: &LevelGrid, a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let finite = [a, b, c, d].iter().all(|v| v.is_finite());
        if !finite || !(a <= b && b <= c && c <= d) {
            return Err(Error::OrderViolation {
                params: vec![a, b, c, d],
            });
        }
        let lo = grid
            .levels()
            .iter()
            .map(|&l| {
                if l == 1.0 {
                    b
                } else {
                    (a + l * (b - a)).min(b)
                }
            })
            .collect();
        let hi = grid
            .levels()
            .iter()
            .map(|&l| {
                if l == 1.0 {
                    c
                } else {
                    (d - l * (d - c)).max(c)
                }
            })
            .collect();
        Ok(Self::from_parts_unchecked(grid.clone(), lo, hi))
    }

    pub fn grid(&self) -> &LevelGrid {
        &self.grid
    }

    /// Samples of `u⁻` at the grid levels.
    pub fn lower(&self) -> &[f64] {
        &self.lo
    }

    /// Samples of `u⁺` at the grid levels.
    pub fn upper(&self) -> &[f64] {
        &self.hi
    }

    /// The level-1 set `[u⁻(1), u⁺(1)]`.
    pub fn core(&self) -> Interval {
        let last = self.lo.len() - 1;
        Interval {
            lo: self.lo[last],
            hi: self.hi[last],
        }
    }

    /// The level-0 set `[u⁻(0), u⁺(0)]`.
    pub fn support(&self) -> Interval {
        Interval {
            lo: self.lo[0],
            hi: self.hi[0],
        }
    }

    /// `[u]^λ`, linearly interpolated between the bracketing grid levels and
    /// exact on grid levels.
    pub fn level_set(&self, lambda: f64) -> Result<Interval> {
        if !(0.0..=1.0).contains(&lambda) {
            return Err(Error::OutOfRange { value: lambda });
        }
        let (j, t) = self.grid.bracket(lambda);
        if t == 0.0 {
            return Ok(Interval {
                lo: self.lo[j],
                hi: self.hi[j],
            });
        }
        Ok(Interval {
            lo: lerp_clamped(self.lo[j], self.lo[j + 1], t),
            hi: lerp_clamped(self.hi[j], self.hi[j + 1], t),
        })
    }

    pub fn is_crisp(&self) -> bool {
        let x = self.lo[0];
        self.lo.iter().chain(&self.hi).all(|&v| v == x)
    }

    /// Levelwise interval sum.
    pub fn add(&self, other: &FuzzyNumber) -> Result<FuzzyNumber> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        let lo: Vec<f64> = self.lo.iter().zip(&other.lo).map(|(a, b)| a + b).collect();
        let hi: Vec<f64> = self.hi.iter().zip(&other.hi).map(|(a, b)| a + b).collect();
        check_finite(&lo, &hi)?;
        Ok(Self::from_parts_unchecked(self.grid.clone(), lo, hi))
    }

    /// Levelwise image of the interval under `x ↦ k x`; endpoints swap when
    /// `k < 0`.
    ///
    /// # Panics
    ///
    /// If `k` is not finite.
    pub fn scale(&self, k: f64) -> FuzzyNumber {
        assert!(k.is_finite(), "scale factor must be finite, got {k}");
        let times = |v: &[f64]| v.iter().map(|x| k * x).collect::<Vec<f64>>();
        let (lo, hi) = if k >= 0.0 {
            (times(&self.lo), times(&self.hi))
        } else {
            (times(&self.hi), times(&self.lo))
        };
        Self::from_parts_unchecked(self.grid.clone(), lo, hi)
    }

    /// Supremum metric `sup_λ max{|u⁻ - v⁻|, |u⁺ - v⁺|}`.
    ///
    /// Endpoint differences are piecewise linear in `λ`, so the supremum is a
    /// maximum over the grid levels.
    pub fn d_inf(&self, other: &FuzzyNumber) -> Result<f64> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        Ok(self.d_inf_unchecked(other))
    }

    pub(crate) fn d_inf_unchecked(&self, other: &FuzzyNumber) -> f64 {
        self.lo
            .iter()
            .zip(&other.lo)
            .chain(self.hi.iter().zip(&other.hi))
            .fold(0.0_f64, |acc, (a, b)| acc.max((a - b).abs()))
    }

    /// Re-samples the endpoint functions on another grid by linear
    /// interpolation.
    pub fn resample(&self, grid: &LevelGrid) -> FuzzyNumber {
        let (lo, hi) = grid
            .levels()
            .iter()
            .map(|&l| {
                let iv = self.level_set(l).expect("grid levels always lie in [0, 1]");
                (iv.lo, iv.hi)
            })
            .unzip();
        Self::from_parts_unchecked(grid.clone(), lo, hi)
    }
}

fn lerp_clamped(a: f64, b: f64, t: f64) -> f64 {
    let v = a + (b - a) * t;
    v.clamp(a.min(b), a.max(b))
}

fn check_finite(lo: &[f64], hi: &[f64]) -> Result<()> {
    for (endpoint, values) in [(Endpoint::Lower, lo), (Endpoint::Upper, hi)] {
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { endpoint, index });
        }
    }
    Ok(())
}
