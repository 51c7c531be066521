//! Population-level quantities: the per-dimension range vector and the
//! short/long split of paths by cost.

use crate::error::{PciaError, Result};
use crate::path::Path;
use crate::space::SearchSpace;

/// Relative floor applied to every range entry, as a fraction of the box width.
pub const EPSILON_RANGE: f64 = 1e-12;

/// Per-dimension spread of a population, floored away from zero.
#[derive(Debug, Clone, PartialEq)]
pub struct RangeVector(Vec<f64>);

impl RangeVector {
    /// Wrap raw range values. Entries must be positive.
    pub fn from_values(values: Vec<f64>) -> Self {
        debug_assert!(values.iter().all(|r| *r > 0.0));
        Self(values)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

impl std::ops::Index<usize> for RangeVector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    Short,
    Long,
}

/// Per-dimension `max - min` over the population, floored at
/// `EPSILON_RANGE * (upper - lower)`.
pub fn compute_range(members: &[Path], space: &SearchSpace) -> Result<RangeVector> {
    let first = members.first().ok_or(PciaError::EmptyPopulation)?;
    space.check_dim(first.dim())?;
    let mut lo = first.position().to_vec();
    let mut hi = lo.clone();
    for p in &members[1..] {
        space.check_dim(p.dim())?;
        for (i, &x) in p.position().iter().enumerate() {
            lo[i] = lo[i].min(x);
            hi[i] = hi[i].max(x);
        }
    }
    let range = (0..space.dim())
        .map(|i| (hi[i] - lo[i]).max(EPSILON_RANGE * space.width(i)))
        .collect();
    Ok(RangeVector(range))
}

/// Median split on cost: paths with cost at or below the median are short.
pub fn classify_paths(members: &[Path]) -> Result<Vec<Label>> {
    if members.is_empty() {
        return Err(PciaError::EmptyPopulation);
    }
    if let Some(index) = members.iter().position(|p| !p.is_evaluated()) {
        return Err(PciaError::Unevaluated { index });
    }
    let median = median_cost(members);
    Ok(members
        .iter()
        .map(|p| {
            if p.cost() <= median {
                Label::Short
            } else {
                Label::Long
            }
        })
        .collect())
}

fn median_cost(members: &[Path]) -> f64 {
    let mut costs: Vec<f64> = members.iter().map(Path::cost).collect();
    costs.sort_by(f64::total_cmp);
    let n = costs.len();
    if n % 2 == 1 {
        costs[n / 2]
    } else {
        0.5 * (costs[n / 2 - 1] + costs[n / 2])
    }
}

/// Evaluated paths together with their range vector and labels.
#[derive(Debug, Clone)]
pub struct Population {
    members: Vec<Path>,
    range: RangeVector,
    labels: Vec<Label>,
}

impl Population {
    pub fn new(members: Vec<Path>, space: &SearchSpace) -> Result<Self> {
        let range = compute_range(&members, space)?;
        let labels = classify_paths(&members)?;
        Ok(Self {
            members,
            range,
            labels,
        })
    }

    pub fn members(&self) -> &[Path] {
        &self.members
    }

    pub fn into_members(self) -> Vec<Path> {
        self.members
    }

    pub fn range(&self) -> &RangeVector {
        &self.range
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Index of the lowest-cost member; the earliest one on ties.
    pub fn best_index(&self) -> usize {
        best_index(&self.members)
    }
}

pub(crate) fn best_index(members: &[Path]) -> usize {
    let mut best = 0;
    for (i, p) in members.iter().enumerate().skip(1) {
        if p.cost() < members[best].cost() {
            best = i;
        }
    }
    best
}
