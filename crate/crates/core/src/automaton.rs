//! Layered state machines for the four path classes, and the dynamic
//! program that counts paths by final state.
//!
//! A state `(layer, height)` remembers the current height and the parity of
//! the trailing descent. Strict classes forbid an up-step out of an `H`
//! state, which is exactly the rule that a completed descent must be odd.
//! The bonus class differs only at the axis: every down-step landing on
//! height 0 goes to `(G,0)`, and `(H,0)` does not exist.

use num_bigint::BigUint;
use num_traits::One;

use crate::class::{Layer, LayerState, PathClass, Step};
use crate::error::AutomatonError;
use crate::series::Series;
use crate::table::CountTable;

/// Outgoing moves from `state`.
pub fn transitions(class: PathClass, state: LayerState) -> Vec<(Step, LayerState)> {
    let LayerState { layer, height } = state;
    let mut out = Vec::with_capacity(2);
    if class == PathClass::BonusInteriorOdd && layer == Layer::H && height == 0 {
        return out;
    }
    match layer {
        Layer::F | Layer::G => out.push((Step::Up, LayerState::new(Layer::F, height + 1))),
        Layer::H => {}
    }
    if height >= 1 {
        let below = height - 1;
        let target = if class == PathClass::BonusInteriorOdd && below == 0 {
            LayerState::new(Layer::G, 0)
        } else {
            match layer {
                Layer::F | Layer::H => LayerState::new(Layer::G, below),
                Layer::G => LayerState::new(Layer::H, below),
            }
        };
        out.push((Step::Down, target));
    }
    out
}

/// All states of the class's automaton up to `max_height`.
pub fn states(class: PathClass, max_height: usize) -> Vec<LayerState> {
    let mut out = Vec::new();
    for layer in [Layer::F, Layer::G, Layer::H] {
        for height in 0..=max_height {
            if class == PathClass::BonusInteriorOdd && layer == Layer::H && height == 0 {
                continue;
            }
            out.push(LayerState::new(layer, height));
        }
    }
    out
}

/// Counts paths of every length up to `n_max` by final state.
///
/// Heights never exceed `n_max`, so no state above that is ever allocated.
pub fn dp_counts(class: PathClass, n_max: usize) -> CountTable {
    let mut table = CountTable::empty(class, n_max);
    table.add(0, LayerState::START, &BigUint::one());
    for n in 0..n_max {
        let row: Vec<(LayerState, BigUint)> =
            table.row(n).iter().map(|(s, c)| (*s, c.clone())).collect();
        for (state, count) in row {
            for (_, next) in transitions(class, state) {
                table.add(n + 1, next, &count);
            }
        }
    }
    table
}

/// Number of complete Dyck paths of semilength `m` in the class.
pub fn count_complete(class: PathClass, m: u64) -> Result<BigUint, AutomatonError> {
    if m == 0 {
        return Err(AutomatonError::EmptyPath(0));
    }
    dp_counts(class, 2 * m as usize).complete(m as usize)
}

/// Generating function of paths ending in `(layer, height)`, known below
/// `z^(n_max+1)`.
pub fn partial_series(class: PathClass, layer: Layer, height: usize, n_max: usize) -> Series {
    dp_counts(class, n_max).series(layer, height)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn st(layer: Layer, height: usize) -> LayerState {
        LayerState::new(layer, height)
    }

    #[test]
    fn even_run_state_only_steps_down() {
        assert_eq!(
            transitions(PathClass::OddAll, st(Layer::H, 3)),
            vec![(Step::Down, st(Layer::G, 2))]
        );
    }

    #[test]
    fn start_state_only_steps_up() {
        assert_eq!(
            transitions(PathClass::OddAll, LayerState::START),
            vec![(Step::Up, st(Layer::F, 1))]
        );
    }

    #[test]
    fn bonus_axis_landing() {
        for layer in [Layer::F, Layer::G, Layer::H] {
            let moves = transitions(PathClass::BonusInteriorOdd, st(layer, 1));
            assert!(moves.contains(&(Step::Down, st(Layer::G, 0))), "{layer}");
        }
        assert_eq!(
            transitions(PathClass::BonusInteriorOdd, st(Layer::H, 1)),
            vec![(Step::Down, st(Layer::G, 0))]
        );
        assert_eq!(
            transitions(PathClass::BonusInteriorOdd, st(Layer::G, 0)),
            vec![(Step::Up, st(Layer::F, 1))]
        );
    }

    #[test]
    fn bonus_has_no_h0() {
        assert!(!states(PathClass::BonusInteriorOdd, 5).contains(&st(Layer::H, 0)));
        assert!(states(PathClass::OddAll, 5).contains(&st(Layer::H, 0)));
        let t = dp_counts(PathClass::BonusInteriorOdd, 16);
        assert!(t.entries().all(|(_, s, _)| s != st(Layer::H, 0)));
    }

    #[test]
    fn empty_row() {
        let t = dp_counts(PathClass::OddAll, 0);
        assert_eq!(t.row(0).len(), 1);
        assert_eq!(t.get(0, LayerState::START), BigUint::from(1u32));
    }

    #[test]
    fn complete_counts_small() {
        assert_eq!(
            count_complete(PathClass::OddAll, 1).unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(
            count_complete(PathClass::OddLastEven, 4).unwrap(),
            BigUint::from(4u32)
        );
        assert_eq!(
            count_complete(PathClass::BonusInteriorOdd, 3).unwrap(),
            BigUint::from(5u32)
        );
        assert_eq!(
            count_complete(PathClass::OddAll, 0),
            Err(AutomatonError::EmptyPath(0))
        );
    }

    #[test]
    fn odd_all_column_matches_known_terms() {
        let t = dp_counts(PathClass::OddAll, 22);
        let got: Vec<u64> = (1..=11)
            .map(|m| t.get(2 * m, st(Layer::G, 0)).try_into().unwrap())
            .collect();
        assert_eq!(got, [1, 1, 2, 5, 12, 30, 79, 213, 584, 1628, 4600]);
    }

    #[test]
    fn start_column_is_one() {
        let s = partial_series(PathClass::OddAll, Layer::F, 0, 12);
        assert_eq!(s, Series::one(13));
    }
}
