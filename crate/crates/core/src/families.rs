//! Reference reduction types: two families of curves whose index is one
//! while the specialization index is two, plus a small set of
//! Winters-valid seed models used by property harnesses.

use crate::error::Result;
use crate::reduction::ReductionType;

/// Five components with multiplicities (2, 2, 3, 4, 6); the first
/// component carries the free genus label `x`. Index 1, specialization
/// index 2, genus `5 + 2x`.
pub fn example1(x: i64) -> Result<ReductionType> {
    ReductionType::new(
        vec![2, 2, 3, 4, 6],
        vec![x, 0, 0, 0, 0],
        vec![
            vec![-3, 0, 0, 0, 1],
            vec![0, -2, 0, 1, 0],
            vec![0, 0, -4, 0, 2],
            vec![0, 1, 0, -2, 1],
            vec![1, 0, 2, 1, -2],
        ],
    )
}

/// Six components with multiplicities (2, 2, 3, 3, 4, 6) in a star around
/// the multiplicity-6 component; the first component carries the free
/// genus label `x`. Index 1, specialization index 2, genus `2 + 2x`.
pub fn example2(x: i64) -> Result<ReductionType> {
    ReductionType::new(
        vec![2, 2, 3, 3, 4, 6],
        vec![x, 0, 0, 0, 0, 0],
        vec![
            vec![-3, 0, 0, 0, 0, 1],
            vec![0, -2, 0, 0, 1, 0],
            vec![0, 0, -2, 0, 0, 1],
            vec![0, 0, 0, -2, 0, 1],
            vec![0, 1, 0, 0, -2, 1],
            vec![1, 0, 1, 1, 1, -2],
        ],
    )
}

/// Ten hand-built Winters-valid models of assorted shapes (single smooth
/// components, a chain, a cycle, a star, and the two reference families),
/// used as bases for randomized blow-up harnesses.
pub fn winters_seeds() -> Vec<ReductionType> {
    vec![
        example1(0).unwrap(),
        example1(2).unwrap(),
        example2(0).unwrap(),
        example2(1).unwrap(),
        // single rational component, genus 0
        ReductionType::new(vec![1], vec![0], vec![vec![0]]).unwrap(),
        // single component of genus 3
        ReductionType::new(vec![1], vec![3], vec![vec![0]]).unwrap(),
        // two components of multiplicities 1 and 2, genus 1
        ReductionType::new(
            vec![1, 2],
            vec![0, 0],
            vec![vec![-4, 2], vec![2, -1]],
        )
        .unwrap(),
        // two components of multiplicities 2 and 3, genus 11
        ReductionType::new(
            vec![2, 3],
            vec![0, 0],
            vec![vec![-9, 6], vec![6, -4]],
        )
        .unwrap(),
        // cycle of three rational curves, genus 1
        ReductionType::new(
            vec![1, 1, 1],
            vec![0, 0, 0],
            vec![vec![-2, 1, 1], vec![1, -2, 1], vec![1, 1, -2]],
        )
        .unwrap(),
        // star: central multiplicity-2 component with four reduced legs, genus 1
        ReductionType::new(
            vec![2, 1, 1, 1, 1],
            vec![0, 0, 0, 0, 0],
            vec![
                vec![-2, 1, 1, 1, 1],
                vec![1, -2, 0, 0, 0],
                vec![1, 0, -2, 0, 0],
                vec![1, 0, 0, -2, 0],
                vec![1, 0, 0, 0, -2],
            ],
        )
        .unwrap(),
    ]
}
