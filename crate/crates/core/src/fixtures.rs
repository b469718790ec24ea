//! The three small designs used throughout the tests and examples, given as
//! 1-based block lists.

use crate::design::BlockDesign;

const FANO: &[&[usize]] = &[
    &[1, 2, 4],
    &[2, 3, 5],
    &[3, 4, 6],
    &[4, 5, 7],
    &[1, 5, 6],
    &[2, 6, 7],
    &[1, 3, 7],
];

const TWOFOLD_SIX: &[&[usize]] = &[
    &[1, 2, 4],
    &[1, 2, 3],
    &[3, 4, 5],
    &[2, 4, 5],
    &[2, 5, 6],
    &[1, 5, 6],
    &[2, 3, 6],
    &[1, 3, 5],
    &[1, 4, 6],
    &[3, 4, 6],
];

const BIPLANE_SEVEN: &[&[usize]] = &[
    &[1, 2, 3, 4],
    &[1, 3, 5, 7],
    &[1, 4, 5, 6],
    &[1, 2, 6, 7],
    &[2, 3, 5, 6],
    &[2, 4, 5, 7],
    &[3, 4, 6, 7],
];

/// The Fano plane, a (7, 7, 3, 3, 1) design.
pub fn fano() -> BlockDesign {
    BlockDesign::from_one_based(7, FANO).expect("valid block list")
}

/// A (10, 6, 5, 3, 2) twofold triple system.
pub fn twofold_six() -> BlockDesign {
    BlockDesign::from_one_based(6, TWOFOLD_SIX).expect("valid block list")
}

/// A (7, 7, 4, 4, 2) symmetric design.
pub fn biplane_seven() -> BlockDesign {
    BlockDesign::from_one_based(7, BIPLANE_SEVEN).expect("valid block list")
}
