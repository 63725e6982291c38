//! Path classes, steps and automaton states.

use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }
}

/// The four descent-constrained families of (partial) Dyck paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathClass {
    /// Every descent has odd length.
    OddAll,
    /// Every descent but the last has odd length; the last one is even.
    OddLastEven,
    /// Every descent but the last has odd length; the last one is free.
    OddLastAny,
    /// Descents that end above the axis have odd length; those reaching
    /// the axis are free.
    BonusInteriorOdd,
}

impl PathClass {
    pub const ALL: [PathClass; 4] = [
        PathClass::OddAll,
        PathClass::OddLastEven,
        PathClass::OddLastAny,
        PathClass::BonusInteriorOdd,
    ];

    /// States in which a complete (nonempty) Dyck path of this class ends.
    pub fn accepting_states(self) -> &'static [LayerState] {
        const G0: LayerState = LayerState::new(Layer::G, 0);
        const H0: LayerState = LayerState::new(Layer::H, 0);
        match self {
            PathClass::OddAll | PathClass::BonusInteriorOdd => &[G0],
            PathClass::OddLastEven => &[H0],
            PathClass::OddLastAny => &[G0, H0],
        }
    }

    /// True for the three classes where every completed descent must be odd.
    pub fn is_strict(self) -> bool {
        !matches!(self, PathClass::BonusInteriorOdd)
    }

    pub fn name(self) -> &'static str {
        match self {
            PathClass::OddAll => "odd-all",
            PathClass::OddLastEven => "odd-last-even",
            PathClass::OddLastAny => "odd-last-any",
            PathClass::BonusInteriorOdd => "bonus",
        }
    }
}

impl fmt::Display for PathClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownClass(pub String);

impl fmt::Display for UnknownClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown path class {:?} (expected odd-all, odd-last-even, odd-last-any or bonus)",
            self.0
        )
    }
}

impl std::error::Error for UnknownClass {}

impl FromStr for PathClass {
    type Err = UnknownClass;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PathClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| UnknownClass(s.to_string()))
    }
}

/// Which layer of the automaton a state lives in. The layer records the
/// parity of the trailing descent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Layer {
    /// Empty path, or the last step was up.
    F,
    /// Trailing descent of odd length.
    G,
    /// Trailing descent of even (positive) length.
    H,
}

impl Layer {
    pub fn name(self) -> &'static str {
        match self {
            Layer::F => "F",
            Layer::G => "G",
            Layer::H => "H",
        }
    }
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Layer {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "F" | "f" => Ok(Layer::F),
            "G" | "g" => Ok(Layer::G),
            "H" | "h" => Ok(Layer::H),
            _ => Err(format!("unknown layer {s:?} (expected F, G or H)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LayerState {
    pub layer: Layer,
    pub height: usize,
}

impl LayerState {
    pub const START: LayerState = LayerState::new(Layer::F, 0);

    pub const fn new(layer: Layer, height: usize) -> Self {
        Self { layer, height }
    }
}

impl fmt::Display for LayerState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.layer, self.height)
    }
}
