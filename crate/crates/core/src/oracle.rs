//! Brute-force ground truth: enumerate step sequences and classify each one
//! directly from its descents.
//!
//! Nothing here consults the automaton's transitions; the classification
//! is written from the definitions of the four classes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::class::{Layer, LayerState, PathClass, Step};
use crate::error::OracleError;
use crate::table::CountTable;

/// Longest step sequence the enumerator will accept.
pub const MAX_STEPS: usize = 28;

/// A sequence of unit steps that never goes below the axis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    steps: Vec<Step>,
}

impl Path {
    pub fn new(steps: Vec<Step>) -> Result<Self, OracleError> {
        let mut h = 0i64;
        for (i, s) in steps.iter().enumerate() {
            h += s.delta();
            if h < 0 {
                return Err(OracleError::BelowAxis(i));
            }
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn height(&self) -> usize {
        final_height(&self.steps)
    }
}

impl FromStr for Path {
    type Err = String;

    /// Parses a word over `U`/`D`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let steps = s
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Step::Up),
                'D' | 'd' => Ok(Step::Down),
                other => Err(format!("unexpected step {other:?}")),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Path::new(steps).map_err(|e| e.to_string())
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps
            .iter()
            .try_for_each(|s| write!(f, "{}", s.symbol()))
    }
}

/// A maximal run of down-steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DescentRun {
    pub start_height: usize,
    pub length: usize,
    pub end_height: usize,
    /// An up-step follows, so the length is final.
    pub completed: bool,
    pub touches_axis: bool,
}

fn final_height(steps: &[Step]) -> usize {
    steps.iter().map(|s| s.delta()).sum::<i64>() as usize
}

fn runs_of(steps: &[Step]) -> Vec<DescentRun> {
    let mut runs = Vec::new();
    let mut height = 0usize;
    let mut i = 0;
    while i < steps.len() {
        match steps[i] {
            Step::Up => {
                height += 1;
                i += 1;
            }
            Step::Down => {
                let start = height;
                let mut length = 0;
                while i < steps.len() && steps[i] == Step::Down {
                    length += 1;
                    height -= 1;
                    i += 1;
                }
                runs.push(DescentRun {
                    start_height: start,
                    length,
                    end_height: height,
                    completed: i < steps.len(),
                    touches_axis: height == 0,
                });
            }
        }
    }
    runs
}

/// The maximal descents of `p`, in order.
pub fn descent_runs(p: &Path) -> Vec<DescentRun> {
    runs_of(&p.steps)
}

/// Outcome of classifying a prefix against a class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Accept(LayerState),
    Reject,
}

fn classify_steps(class: PathClass, steps: &[Step]) -> Classification {
    let runs = runs_of(steps);
    let violates = |r: &DescentRun| {
        r.completed && r.length.is_multiple_of(2) && (class.is_strict() || r.end_height >= 1)
    };
    if runs.iter().any(violates) {
        return Classification::Reject;
    }
    let height = final_height(steps);
    let layer = match (steps.last(), runs.last()) {
        (None, _) | (Some(Step::Up), _) => Layer::F,
        (Some(Step::Down), Some(r)) => {
            if (!class.is_strict() && r.touches_axis) || r.length % 2 == 1 {
                Layer::G
            } else {
                Layer::H
            }
        }
        (Some(Step::Down), None) => unreachable!("a down-step always opens a run"),
    };
    Classification::Accept(LayerState::new(layer, height))
}

/// Which state `p` ends in for the class, or `Reject` if some completed
/// descent breaks the class's rule.
pub fn classify(class: PathClass, p: &Path) -> Classification {
    classify_steps(class, &p.steps)
}

/// Tallies every non-rejected Dyck prefix of length `0..=n_max` by state.
///
/// Enumeration is depth-first; a subtree is dropped as soon as its root is
/// rejected, since a completed descent stays completed in every extension.
pub fn oracle_counts(class: PathClass, n_max: usize) -> Result<CountTable, OracleError> {
    if n_max > MAX_STEPS {
        return Err(OracleError::CapExceeded {
            cap: MAX_STEPS,
            requested: n_max,
        });
    }
    let mut tally: Vec<std::collections::HashMap<LayerState, u64>> =
        vec![Default::default(); n_max + 1];
    let mut steps = Vec::with_capacity(n_max);
    walk(class, n_max, &mut steps, 0, &mut tally);

    let mut table = CountTable::empty(class, n_max);
    for (n, row) in tally.into_iter().enumerate() {
        for (state, count) in row {
            table.add(n, state, &BigUint::from(count));
        }
    }
    Ok(table)
}

fn walk(
    class: PathClass,
    n_max: usize,
    steps: &mut Vec<Step>,
    height: usize,
    tally: &mut [std::collections::HashMap<LayerState, u64>],
) {
    let state = match classify_steps(class, steps) {
        Classification::Accept(s) => s,
        Classification::Reject => return,
    };
    *tally[steps.len()].entry(state).or_insert(0) += 1;
    if steps.len() == n_max {
        return;
    }
    steps.push(Step::Up);
    walk(class, n_max, steps, height + 1, tally);
    steps.pop();
    if height > 0 {
        steps.push(Step::Down);
        walk(class, n_max, steps, height - 1, tally);
        steps.pop();
    }
}
