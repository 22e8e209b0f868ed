//! Function classes `W ⊆ C(K, E¹)` and their multiplier families `Conv(W)`.
//!
//! `Conv(W)` is the set of multipliers `φ: K → [0, 1]` under which `W` is
//! closed for pointwise convex combinations `φ f + (1 - φ) g`. Membership of
//! a multiplier is decided against the class's finite enumeration: all ordered
//! pairs `(f, g)` of enumerated functions are combined and the result must be
//! accepted by the class's membership rule.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fuzzy::LevelGrid;
use crate::space::{convex_combine, DomainGrid, FuzzyFunction, ScalarFunction};

/// Slack allowed by the range rules. Convex combinations of values inside a
/// range can leave it by a few ulps.
pub const RANGE_TOLERANCE: f64 = 1e-9;

type Predicate = Arc<dyn Fn(&FuzzyFunction) -> bool + Send + Sync>;

/// Decision procedure for membership in a function class.
#[derive(Clone)]
pub enum Membership {
    /// Exactly the enumerated functions.
    Enumerated,
    /// Functions equal to the same crisp constant `c ∈ [lo, hi]` everywhere.
    CrispConstantRange { lo: f64, hi: f64 },
    /// Functions whose value at every point is a crisp number in `[lo, hi]`.
    PointwiseCrispRange { lo: f64, hi: f64 },
    /// Arbitrary pure predicate; not serializable.
    Custom { label: String, predicate: Predicate },
}

impl Membership {
    pub fn custom<F>(label: impl Into<String>, predicate: F) -> Self
    where
        F: Fn(&FuzzyFunction) -> bool + Send + Sync + 'static,
    {
        Membership::Custom {
            label: label.into(),
            predicate: Arc::new(predicate),
        }
    }

    fn accepts(&self, enumeration: &[FuzzyFunction], f: &FuzzyFunction) -> bool {
        let in_range =
            |x: f64, lo: f64, hi: f64| lo - RANGE_TOLERANCE <= x && x <= hi + RANGE_TOLERANCE;
        match self {
            Membership::Enumerated => enumeration.iter().any(|g| g == f),
            Membership::CrispConstantRange { lo, hi } => {
                let first = f.value(0);
                first.is_crisp()
                    && in_range(first.lower()[0], *lo, *hi)
                    && f.values().iter().all(|v| v == first)
            }
            Membership::PointwiseCrispRange { lo, hi } => f
                .values()
                .iter()
                .all(|v| v.is_crisp() && in_range(v.lower()[0], *lo, *hi)),
            Membership::Custom { predicate, .. } => predicate(f),
        }
    }
}

impl fmt::Debug for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Membership::Enumerated => f.write_str("Enumerated"),
            Membership::CrispConstantRange { lo, hi } => f
                .debug_struct("CrispConstantRange")
                .field("lo", lo)
                .field("hi", hi)
                .finish(),
            Membership::PointwiseCrispRange { lo, hi } => f
                .debug_struct("PointwiseCrispRange")
                .field("lo", lo)
                .field("hi", hi)
                .finish(),
            Membership::Custom { label, .. } => f.debug_tuple("Custom").field(label).finish(),
        }
    }
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Membership::Enumerated => f.write_str("enumerated"),
            Membership::CrispConstantRange { lo, hi } => {
                write!(f, "crisp-constant-range({lo}, {hi})")
            }
            Membership::PointwiseCrispRange { lo, hi } => {
                write!(f, "pointwise-crisp-range({lo}, {hi})")
            }
            Membership::Custom { label, .. } => write!(f, "custom({label})"),
        }
    }
}

/// A finitely described subset `W` of fuzzy-number-valued functions.
///
/// The enumeration (generators first, then any extra candidates) is the
/// brute-force search set for infima over `W`; every entry satisfies the
/// membership rule. Every multiplier in the family is checked against all
/// ordered pairs of generators when it is attached.
#[derive(Debug, Clone)]
pub struct FunctionClass {
    domain: DomainGrid,
    levels: LevelGrid,
    rule: Membership,
    generator_count: usize,
    enumeration: Vec<FuzzyFunction>,
    multipliers: Vec<ScalarFunction>,
}

impl FunctionClass {
    pub fn new(rule: Membership, generators: Vec<FuzzyFunction>) -> Result<Self> {
        let first = generators.first().ok_or(Error::EmptyClass)?;
        let domain = first.domain().clone();
        let levels = first.levels().clone();
        for g in &generators {
            first.check_compatible(g)?;
        }
        let class = FunctionClass {
            domain,
            levels,
            rule,
            generator_count: generators.len(),
            enumeration: generators,
            multipliers: Vec::new(),
        };
        for (i, g) in class.enumeration.iter().enumerate() {
            if !class.rule.accepts(&class.enumeration, g) {
                return Err(Error::NotInClass(format!(
                    "generator {i} fails rule {}",
                    class.rule
                )));
            }
        }
        Ok(class)
    }

    /// Appends extra enumeration candidates (the brute-force search set
    /// beyond the generators).
    pub fn with_candidates(mut self, candidates: Vec<FuzzyFunction>) -> Result<Self> {
        let start = self.enumeration.len();
        for g in &candidates {
            self.enumeration[0].check_compatible(g)?;
        }
        self.enumeration.extend(candidates);
        for i in start..self.enumeration.len() {
            if !self.rule.accepts(&self.enumeration, &self.enumeration[i]) {
                return Err(Error::NotInClass(format!(
                    "candidate {i} fails rule {}",
                    self.rule
                )));
            }
        }
        Ok(self)
    }

    /// Attaches a multiplier family after checking each member against every
    /// ordered pair of generators.
    pub fn with_multipliers(mut self, family: Vec<ScalarFunction>) -> Result<Self> {
        let generators = &self.enumeration[..self.generator_count];
        for (index, phi) in family.iter().enumerate() {
            if phi.domain() != &self.domain {
                return Err(Error::GridMismatch);
            }
            if !pairs_closed(phi, &self.rule, &self.enumeration, generators)? {
                return Err(Error::NotAMultiplier { index });
            }
        }
        self.multipliers = family;
        Ok(self)
    }

    pub fn domain(&self) -> &DomainGrid {
        &self.domain
    }

    pub fn levels(&self) -> &LevelGrid {
        &self.levels
    }

    pub fn rule(&self) -> &Membership {
        &self.rule
    }

    pub fn generators(&self) -> &[FuzzyFunction] {
        &self.enumeration[..self.generator_count]
    }

    pub fn enumeration(&self) -> &[FuzzyFunction] {
        &self.enumeration
    }

    pub fn multipliers(&self) -> &[ScalarFunction] {
        &self.multipliers
    }

    /// The membership predicate. Functions on other grids are never members.
    pub fn contains(&self, f: &FuzzyFunction) -> bool {
        f.domain() == &self.domain
            && f.levels() == &self.levels
            && self.rule.accepts(&self.enumeration, f)
    }

    pub(crate) fn check_function(&self, f: &FuzzyFunction) -> Result<()> {
        if f.domain() != &self.domain || f.levels() != &self.levels {
            return Err(Error::GridMismatch);
        }
        Ok(())
    }
}

fn pairs_closed(
    phi: &ScalarFunction,
    rule: &Membership,
    enumeration: &[FuzzyFunction],
    pool: &[FuzzyFunction],
) -> Result<bool> {
    for f in pool {
        for g in pool {
            let combo = convex_combine(phi, f, g)?;
            if !rule.accepts(enumeration, &combo) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Sampled `Conv(W)` test: `φ f + (1 - φ) g` must belong to `W` for every
/// ordered pair of enumerated functions.
pub fn check_conv_membership(phi: &ScalarFunction, class: &FunctionClass) -> Result<bool> {
    if phi.domain() != class.domain() {
        return Err(Error::GridMismatch);
    }
    pairs_closed(phi, &class.rule, &class.enumeration, &class.enumeration)
}

/// Whether `1 - φ` is again a sampled multiplier. For `φ ∈ Conv(W)` this
/// always holds; `false` points at a membership rule that is not closed.
pub fn complement_closure(phi: &ScalarFunction, class: &FunctionClass) -> Result<bool> {
    check_conv_membership(&phi.complement()?, class)
}

/// Whether `φ ψ` is again a sampled multiplier.
pub fn product_closure(
    phi: &ScalarFunction,
    psi: &ScalarFunction,
    class: &FunctionClass,
) -> Result<bool> {
    check_conv_membership(&phi.product(psi)?, class)
}

/// True iff for every pair of distinct domain points some member of the
/// family takes different values there.
pub fn separates_points(family: &[ScalarFunction], domain: &DomainGrid) -> Result<bool> {
    if family.iter().any(|phi| phi.domain() != domain) {
        return Err(Error::GridMismatch);
    }
    let n = domain.len();
    let signature = |i: usize| family.iter().map(move |phi| phi.value(i));
    for s in 0..n {
        for t in (s + 1)..n {
            if signature(s).eq(signature(t)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Contiguous inclusive run of domain indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexRun {
    pub start: usize,
    pub end: usize,
}

impl IndexRun {
    pub fn new(start: usize, end: usize) -> Self {
        assert!(start <= end, "empty index run {start}..={end}");
        IndexRun { start, end }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.start <= i && i <= self.end
    }

    pub fn indices(&self) -> std::ops::RangeInclusive<usize> {
        self.start..=self.end
    }

    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Inputs of a bump: a center, an inner run `U` and an outer set `N ⊇ U`,
/// and the tolerance `δ ∈ (0, 1/2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BumpSpec {
    center: usize,
    inner: IndexRun,
    outer: Vec<bool>,
    delta: f64,
}

impl BumpSpec {
    pub fn new(
        domain: &DomainGrid,
        center: usize,
        inner: IndexRun,
        outer: &[usize],
        delta: f64,
    ) -> Result<Self> {
        if !(delta > 0.0 && delta < 0.5) {
            return Err(Error::InvalidBump(format!("delta {delta} not in (0, 1/2)")));
        }
        let n = domain.len();
        domain.check_index(center)?;
        domain.check_index(inner.end)?;
        if let Some(&bad) = outer.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfBounds { index: bad, len: n });
        }
        if !inner.contains(center) {
            return Err(Error::InvalidBump(format!(
                "center {center} outside inner run {}..={}",
                inner.start, inner.end
            )));
        }
        let mut mask = vec![false; n];
        for &i in outer {
            mask[i] = true;
        }
        if let Some(i) = inner.indices().find(|&i| !mask[i]) {
            return Err(Error::InvalidBump(format!(
                "inner index {i} not contained in the outer set"
            )));
        }
        Ok(BumpSpec {
            center,
            inner,
            outer: mask,
            delta,
        })
    }

    pub fn center(&self) -> usize {
        self.center
    }

    pub fn inner(&self) -> IndexRun {
        self.inner
    }

    pub fn in_outer(&self, i: usize) -> bool {
        self.outer[i]
    }

    pub fn outer_indices(&self) -> Vec<usize> {
        (0..self.outer.len()).filter(|&i| self.outer[i]).collect()
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }
}

/// `φ > 1 - δ` on `U` and `φ < δ` off `N`.
pub fn satisfies_bump_bounds(phi: &ScalarFunction, spec: &BumpSpec) -> bool {
    let d = spec.delta;
    phi.values().len() == spec.outer.len()
        && phi
            .values()
            .iter()
            .enumerate()
            .all(|(i, &v)| (!spec.inner.contains(i) || v > 1.0 - d) && (spec.outer[i] || v < d))
}

/// Piecewise-linear hat: 1 on `U`, falling linearly to 0 at the first domain
/// point outside the run of `N` that contains `U`, and 0 everywhere else.
/// On a side where that run reaches the end of the domain the hat stays 1.
pub fn hat(domain: &DomainGrid, spec: &BumpSpec) -> ScalarFunction {
    let x = domain.points();
    let n = x.len();
    let IndexRun { start, end } = spec.inner;
    let mut run_start = start;
    while run_start > 0 && spec.outer[run_start - 1] {
        run_start -= 1;
    }
    let mut run_end = end;
    while run_end + 1 < n && spec.outer[run_end + 1] {
        run_end += 1;
    }
    let values = (0..n)
        .map(|i| {
            if spec.inner.contains(i) {
                1.0
            } else if i < run_start || i > run_end {
                0.0
            } else if i < start {
                match run_start.checked_sub(1) {
                    Some(edge) => ((x[i] - x[edge]) / (x[start] - x[edge])).clamp(0.0, 1.0),
                    None => 1.0,
                }
            } else if run_end + 1 < n {
                let edge = run_end + 1;
                ((x[edge] - x[i]) / (x[edge] - x[end])).clamp(0.0, 1.0)
            } else {
                1.0
            }
        })
        .collect();
    ScalarFunction::unit(domain.clone(), values).expect("hat values lie in [0, 1]")
}

/// A multiplier in the sampled `Conv(W)` that is `> 1 - δ` on `U` and `< δ`
/// off `N`.
///
/// The default hat is tried first; if the class rejects it, the first member
/// of the class's multiplier family meeting both bounds is used.
pub fn bump(spec: &BumpSpec, class: &FunctionClass) -> Result<ScalarFunction> {
    if spec.outer.len() != class.domain().len() {
        return Err(Error::GridMismatch);
    }
    let candidate = hat(class.domain(), spec);
    debug_assert!(satisfies_bump_bounds(&candidate, spec));
    if check_conv_membership(&candidate, class)? {
        return Ok(candidate);
    }
    for phi in class.multipliers() {
        if satisfies_bump_bounds(phi, spec) && check_conv_membership(phi, class)? {
            return Ok(phi.clone());
        }
    }
    Err(Error::CannotSeparate {
        center: spec.center,
    })
}

/// `ψ₁ = φ₁`, `ψ_j = (1 - φ₁)⋯(1 - φ_{j-1}) φ_j`.
///
/// Every prefix sum satisfies `ψ₁ + ⋯ + ψ_J = 1 - (1 - φ₁)⋯(1 - φ_J)`.
pub fn telescoping_psis(phis: &[ScalarFunction]) -> Result<Vec<ScalarFunction>> {
    let Some(first) = phis.first() else {
        return Ok(Vec::new());
    };
    let domain = first.domain();
    for phi in phis {
        if phi.domain() != domain {
            return Err(Error::GridMismatch);
        }
        if let Some(index) = phi.values().iter().position(|v| !(0.0..=1.0).contains(v)) {
            return Err(Error::RangeViolation {
                index,
                value: phi.value(index),
            });
        }
    }
    let mut rest = vec![1.0; domain.len()];
    phis.iter()
        .map(|phi| {
            let psi: Vec<f64> = rest.iter().zip(phi.values()).map(|(r, p)| r * p).collect();
            for (r, p) in rest.iter_mut().zip(phi.values()) {
                *r *= 1.0 - p;
            }
            ScalarFunction::unit(domain.clone(), psi)
        })
        .collect()
}
