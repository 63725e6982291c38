use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use crate::class::{Layer, LayerState, PathClass};
use crate::error::AutomatonError;
use crate::series::Series;

/// Number of paths of each length `n` (0..=n_max) ending in each state.
///
/// Only nonzero entries are stored, so two tables built by different
/// routes compare equal exactly when they agree entrywise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    class: PathClass,
    n_max: usize,
    rows: Vec<BTreeMap<LayerState, BigUint>>,
}

impl CountTable {
    /// An empty table with no paths recorded.
    pub fn empty(class: PathClass, n_max: usize) -> Self {
        Self {
            class,
            n_max,
            rows: vec![BTreeMap::new(); n_max + 1],
        }
    }

    pub fn class(&self) -> PathClass {
        self.class
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn add(&mut self, n: usize, state: LayerState, count: &BigUint) {
        if count.is_zero() {
            return;
        }
        *self.rows[n].entry(state).or_default() += count;
    }

    pub fn get(&self, n: usize, state: LayerState) -> BigUint {
        self.rows
            .get(n)
            .and_then(|r| r.get(&state))
            .cloned()
            .unwrap_or_default()
    }

    /// Nonzero entries of row `n`, ordered by layer then height.
    pub fn row(&self, n: usize) -> &BTreeMap<LayerState, BigUint> {
        &self.rows[n]
    }

    /// All nonzero entries as `(n, state, count)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, LayerState, &BigUint)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(n, row)| row.iter().map(move |(s, c)| (n, *s, c)))
    }

    pub fn total(&self, n: usize) -> BigUint {
        self.rows[n].values().sum()
    }

    /// Complete paths of semilength `m >= 1`: the sum over accepting states
    /// at length `2m`.
    pub fn complete(&self, m: usize) -> Result<BigUint, AutomatonError> {
        if m == 0 {
            return Err(AutomatonError::EmptyPath(0));
        }
        if 2 * m > self.n_max {
            return Err(AutomatonError::TableTooShort {
                n_max: self.n_max,
                requested: 2 * m,
            });
        }
        Ok(self
            .class
            .accepting_states()
            .iter()
            .map(|s| self.get(2 * m, *s))
            .sum())
    }

    /// Complete-path counts for semilengths `1..=n_max/2`.
    pub fn complete_counts(&self) -> Vec<BigUint> {
        (1..=self.n_max / 2)
            .map(|m| self.complete(m).expect("within table"))
            .collect()
    }

    /// The column for one state as a generating function in `z`, known
    /// below `z^(n_max+1)`.
    pub fn series(&self, layer: Layer, height: usize) -> Series {
        let state = LayerState::new(layer, height);
        let coeffs = (0..=self.n_max)
            .map(|n| BigRational::from_integer(BigInt::from(self.get(n, state))))
            .collect();
        Series::from_coeffs(0, coeffs, self.n_max as i64 + 1)
    }

    /// Generating function of complete paths in `Z = z^2`, known below
    /// `Z^(n_max/2 + 1)`. The constant term (empty path) is zero.
    pub fn complete_series(&self) -> Series {
        let mut coeffs = vec![BigRational::zero()];
        coeffs.extend(
            self.complete_counts()
                .into_iter()
                .map(|c| BigRational::from_integer(BigInt::from(c))),
        );
        Series::from_coeffs(0, coeffs, (self.n_max / 2) as i64 + 1)
    }
}
