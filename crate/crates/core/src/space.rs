//! Sampled function spaces over a compact domain: fuzzy-number-valued
//! functions, real-valued functions and multipliers.
//!
//! The compact space is a finite ordered sample of `[0, 1]`, so every
//! supremum over the domain is an exact maximum over the sample.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyNumber, Interval, LevelGrid};

/// Default number of points in a domain grid.
pub const DEFAULT_DOMAIN_POINTS: usize = 21;

/// Strictly increasing sample points in `[0, 1]`.
#[derive(Clone)]
pub struct DomainGrid(Arc<[f64]>);

impl DomainGrid {
    pub fn new(points: Vec<f64>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidDomainGrid("no points".into()));
        }
        if let Some(i) = points.iter().position(|p| !(0.0..=1.0).contains(p)) {
            return Err(Error::InvalidDomainGrid(format!(
                "point {} at index {i} is outside [0, 1]",
                points[i]
            )));
        }
        if let Some(i) = points.windows(2).position(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidDomainGrid(format!(
                "points not strictly increasing at index {}",
                i + 1
            )));
        }
        Ok(DomainGrid(points.into()))
    }

    /// `n` equally spaced points from 0 to 1 (just `{0}` when `n == 1`).
    ///
    /// # Panics
    ///
    /// If `n` is zero.
    pub fn uniform(n: usize) -> Self {
        assert!(n >= 1, "a domain grid needs at least one point");
        if n == 1 {
            return DomainGrid(vec![0.0].into());
        }
        let last = n - 1;
        let points: Vec<f64> = (0..n)
            .map(|i| {
                if i == last {
                    1.0
                } else {
                    i as f64 / last as f64
                }
            })
            .collect();
        DomainGrid(points.into())
    }

    pub fn points(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<()> {
        if index < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfBounds {
                index,
                len: self.len(),
            })
        }
    }
}

impl Default for DomainGrid {
    fn default() -> Self {
        DomainGrid::uniform(DEFAULT_DOMAIN_POINTS)
    }
}

impl PartialEq for DomainGrid {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl fmt::Debug for DomainGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("DomainGrid").field(&&*self.0).finish()
    }
}

/// A fuzzy-number-valued function sampled on a domain grid. All values
/// share one level grid.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyFunction {
    domain: DomainGrid,
    levels: LevelGrid,
    values: Vec<FuzzyNumber>,
}

impl FuzzyFunction {
    pub fn new(domain: DomainGrid, values: Vec<FuzzyNumber>) -> Result<Self> {
        if values.len() != domain.len() {
            return Err(Error::LengthMismatch {
                expected: domain.len(),
                found: values.len(),
            });
        }
        let levels = values[0].grid().clone();
        if values.iter().any(|v| v.grid() != &levels) {
            return Err(Error::GridMismatch);
        }
        Ok(FuzzyFunction {
            domain,
            levels,
            values,
        })
    }

    pub fn from_fn<F>(domain: &DomainGrid, f: F) -> Result<Self>
    where
        F: FnMut(f64) -> Result<FuzzyNumber>,
    {
        let values = domain
            .points()
            .iter()
            .copied()
            .map(f)
            .collect::<Result<_>>()?;
        Self::new(domain.clone(), values)
    }

    pub fn constant(domain: &DomainGrid, value: FuzzyNumber) -> Self {
        let levels = value.grid().clone();
        FuzzyFunction {
            domain: domain.clone(),
            levels,
            values: vec![value; domain.len()],
        }
    }

    /// The function that is `crisp(0)` everywhere.
    pub fn zero(domain: &DomainGrid, levels: &LevelGrid) -> Self {
        Self::constant(domain, FuzzyNumber::crisp_on(levels, 0.0))
    }

    pub fn domain(&self) -> &DomainGrid {
        &self.domain
    }

    pub fn levels(&self) -> &LevelGrid {
        &self.levels
    }

    pub fn values(&self) -> &[FuzzyNumber] {
        &self.values
    }

    pub fn value(&self, index: usize) -> &FuzzyNumber {
        &self.values[index]
    }

    pub fn cores(&self) -> impl Iterator<Item = Interval> + '_ {
        self.values.iter().map(FuzzyNumber::core)
    }

    pub(crate) fn check_compatible(&self, other: &FuzzyFunction) -> Result<()> {
        if self.domain != other.domain || self.levels != other.levels {
            return Err(Error::GridMismatch);
        }
        Ok(())
    }

    /// The uniform metric `D(f, g) = max_t d∞(f(t), g(t))`.
    pub fn distance(&self, other: &FuzzyFunction) -> Result<f64> {
        self.check_compatible(other)?;
        Ok(self.distance_unchecked(other))
    }

    pub(crate) fn distance_unchecked(&self, other: &FuzzyFunction) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .fold(0.0, |acc, (u, v)| acc.max(u.d_inf_unchecked(v)))
    }

    /// Pointwise `d∞(f(t), g(t))` at every domain point.
    pub fn pointwise_distances(&self, other: &FuzzyFunction) -> Result<Vec<f64>> {
        self.check_compatible(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(u, v)| u.d_inf_unchecked(v))
            .collect())
    }
}

/// A real-valued function sampled on a domain grid.
///
/// When built with [`ScalarFunction::unit`] every value is checked to lie in
/// `[0, 1]`, which is what multipliers require.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarFunction {
    domain: DomainGrid,
    values: Vec<f64>,
    unit_range: bool,
}

impl ScalarFunction {
    pub fn new(domain: DomainGrid, values: Vec<f64>) -> Result<Self> {
        if values.len() != domain.len() {
            return Err(Error::LengthMismatch {
                expected: domain.len(),
                found: values.len(),
            });
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::OutOfRange { value: values[i] });
        }
        Ok(ScalarFunction {
            domain,
            values,
            unit_range: false,
        })
    }

    /// A multiplier: every value must lie in `[0, 1]`.
    pub fn unit(domain: DomainGrid, values: Vec<f64>) -> Result<Self> {
        let mut s = Self::new(domain, values)?;
        check_unit_range(&s.values)?;
        s.unit_range = true;
        Ok(s)
    }

    pub fn from_fn<F: FnMut(f64) -> f64>(domain: &DomainGrid, f: F) -> Result<Self> {
        Self::new(
            domain.clone(),
            domain.points().iter().copied().map(f).collect(),
        )
    }

    pub fn unit_from_fn<F: FnMut(f64) -> f64>(domain: &DomainGrid, f: F) -> Result<Self> {
        Self::unit(
            domain.clone(),
            domain.points().iter().copied().map(f).collect(),
        )
    }

    pub fn constant(domain: &DomainGrid, value: f64) -> Result<Self> {
        Self::new(domain.clone(), vec![value; domain.len()])
    }

    pub fn domain(&self) -> &DomainGrid {
        &self.domain
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value(&self, index: usize) -> f64 {
        self.values[index]
    }

    pub fn is_unit_range(&self) -> bool {
        self.unit_range
    }

    /// `1 - φ`.
    pub fn complement(&self) -> Result<ScalarFunction> {
        check_unit_range(&self.values)?;
        Self::unit(
            self.domain.clone(),
            self.values.iter().map(|v| 1.0 - v).collect(),
        )
    }

    /// Pointwise product; unit-range if both factors are.
    pub fn product(&self, other: &ScalarFunction) -> Result<ScalarFunction> {
        if self.domain != other.domain {
            return Err(Error::GridMismatch);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b)
            .collect();
        if self.unit_range && other.unit_range {
            Self::unit(self.domain.clone(), values)
        } else {
            Self::new(self.domain.clone(), values)
        }
    }

    pub fn max(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

fn check_unit_range(values: &[f64]) -> Result<()> {
    match values.iter().position(|v| !(0.0..=1.0).contains(v)) {
        Some(index) => Err(Error::RangeViolation {
            index,
            value: values[index],
        }),
        None => Ok(()),
    }
}

/// Pointwise `φ f + (1 - φ) g`.
pub fn convex_combine(
    phi: &ScalarFunction,
    f: &FuzzyFunction,
    g: &FuzzyFunction,
) -> Result<FuzzyFunction> {
    f.check_compatible(g)?;
    if phi.domain != f.domain {
        return Err(Error::GridMismatch);
    }
    check_unit_range(&phi.values)?;
    let values = phi
        .values
        .iter()
        .zip(f.values.iter().zip(&g.values))
        .map(|(&w, (u, v))| u.scale(w).add(&v.scale(1.0 - w)))
        .collect::<Result<Vec<_>>>()?;
    Ok(FuzzyFunction {
        domain: f.domain.clone(),
        levels: f.levels.clone(),
        values,
    })
}

/// `sup{|α - t| : t ∈ core(u)}`: the distance from `α` to the farthest core
/// endpoint.
pub fn core_distance(u: &FuzzyNumber, alpha: f64) -> f64 {
    u.core().farthest_distance(alpha)
}
