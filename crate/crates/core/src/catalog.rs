//! Small categories used as examples and test fixtures.

use crate::fincat::{poset_category, validate_category, FiniteCategory, RawCategory};

/// One object, one morphism.
pub fn terminal() -> FiniteCategory {
    poset_category(&["*"], &[]).expect("terminal category")
}

/// The chain `[n] = {0 < 1 < ... < n}`; `chain(1)` is the walking arrow.
pub fn chain(n: usize) -> FiniteCategory {
    let elements: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
    let leq: Vec<(String, String)> = (0..n)
        .map(|i| (i.to_string(), (i + 1).to_string()))
        .collect();
    poset_category(&elements, &leq).expect("chain")
}

pub fn walking_arrow() -> FiniteCategory {
    chain(1)
}

/// `bot < a, b < top` with `a`, `b` incomparable.
pub fn diamond() -> FiniteCategory {
    poset_category(
        &["bot", "a", "b", "top"],
        &[("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top")],
    )
    .expect("diamond")
}

/// The pentagon lattice N5: `0 < a < b < 1` and `0 < c < 1`.
pub fn pentagon() -> FiniteCategory {
    poset_category(
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
    )
    .expect("pentagon")
}

/// `n` objects and only identities.
pub fn discrete(n: usize) -> FiniteCategory {
    let raw = RawCategory {
        objects: (0..n).map(|i| format!("d{i}")).collect(),
        ..RawCategory::default()
    };
    validate_category(&raw).expect("discrete category")
}

/// The lattices every suite sweeps: terminal, [1], [2], diamond, N5.
pub fn test_lattices() -> Vec<FiniteCategory> {
    vec![terminal(), chain(1), chain(2), diamond(), pentagon()]
}

/// Names matching [`test_lattices`].
pub const TEST_LATTICE_NAMES: [&str; 5] = ["terminal", "[1]", "[2]", "diamond", "pentagon"];
