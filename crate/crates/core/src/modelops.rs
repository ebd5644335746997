//! Blow-up transformations of reduction types and constructive degree
//! realization.
//!
//! Blowing up a closed point of the model inserts a new rational
//! component of self-intersection -1. At a smooth point of `E_i` the new
//! component has multiplicity `N_i`; at an intersection point of `E_i`
//! and `E_j` it has multiplicity `N_i + N_j` and separates one of the
//! `c_ij` intersection points. Both moves preserve `C * N^t = 0`,
//! connectivity, the genus, and all degree invariants.
//!
//! `realize_degree` turns a membership witness `sum a_j N_j = d` over an
//! edge stratum into an explicit chain of intersection blow-ups whose
//! final component has multiplicity dividing `d`: the primitive direction
//! of `a` is reached by walking the Stern-Brocot mediant tree inside the
//! cone spanned by the two components.

use num_integer::Integer;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::reduction::{ReductionType, MAX_COMPONENTS, MAX_ENTRY};

/// Where a blow-up is centered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlowupCenter {
    /// A point of one component lying on no other component.
    SmoothPoint { component: usize },
    /// One of the intersection points of two distinct components.
    Intersection { first: usize, second: usize },
}

/// One blow-up, with the index and multiplicity of the component it
/// creates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupStep {
    pub center: BlowupCenter,
    pub new_index: usize,
    pub new_multiplicity: i64,
}

/// A recorded sequence of blow-ups from `base` to `result`. Replaying the
/// steps from the base reproduces the result exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupChain {
    pub base: ReductionType,
    pub steps: Vec<BlowupStep>,
    pub result: ReductionType,
}

impl BlowupChain {
    /// Reapplies every step to the base.
    pub fn replay(&self) -> Result<ReductionType> {
        let mut current = self.base.clone();
        for step in &self.steps {
            current = match step.center {
                BlowupCenter::SmoothPoint { component } => {
                    current.blowup_smooth_point(component)?
                }
                BlowupCenter::Intersection { first, second } => {
                    current.blowup_intersection(first, second)?
                }
            };
        }
        Ok(current)
    }
}

/// A degree-realization outcome: the blow-up chain and the index of the
/// component of the result whose multiplicity divides the requested
/// degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub chain: BlowupChain,
    pub witness: usize,
}

impl ReductionType {
    fn grow(&self, new_multiplicity: i64) -> Result<ReductionType> {
        let r = self.component_count();
        if r + 1 > MAX_COMPONENTS {
            return Err(Error::TooManyComponents {
                count: r + 1,
                max: MAX_COMPONENTS,
            });
        }
        if new_multiplicity > MAX_ENTRY {
            return Err(Error::Overflow {
                context: "blow-up multiplicity",
            });
        }
        let mut out = self.clone();
        out.multiplicities.push(new_multiplicity);
        out.genera.push(0);
        for row in out.intersections.iter_mut() {
            row.push(0);
        }
        let mut new_row = vec![0i64; r + 1];
        new_row[r] = -1;
        out.intersections.push(new_row);
        Ok(out)
    }

    /// Blow-up at a smooth point of component `i`: appends a component of
    /// multiplicity `N_i` meeting only `E_i`, and decrements `c_ii`.
    pub fn blowup_smooth_point(&self, i: usize) -> Result<ReductionType> {
        let r = self.component_count();
        if i >= r {
            return Err(Error::ComponentOutOfRange { index: i, count: r });
        }
        let mut out = self.grow(self.multiplicities[i])?;
        out.intersections[i][i] = out.intersections[i][i].checked_sub(1).ok_or(Error::Overflow {
            context: "self-intersection update",
        })?;
        out.intersections[i][r] = 1;
        out.intersections[r][i] = 1;
        Ok(out)
    }

    /// Blow-up at one of the `c_ij` intersection points of components `i`
    /// and `j`: appends a component of multiplicity `N_i + N_j` meeting
    /// each of them once, decrements `c_ij` and both self-intersections.
    /// Which of the intersection points is blown up is immaterial: the
    /// data `(N, G, C)` cannot distinguish them.
    pub fn blowup_intersection(&self, i: usize, j: usize) -> Result<ReductionType> {
        let r = self.component_count();
        if i >= r {
            return Err(Error::ComponentOutOfRange { index: i, count: r });
        }
        if j >= r {
            return Err(Error::ComponentOutOfRange { index: j, count: r });
        }
        if i == j || self.intersections[i][j] < 1 {
            return Err(Error::NoIntersection { i, j });
        }
        let sum = self.multiplicities[i]
            .checked_add(self.multiplicities[j])
            .ok_or(Error::Overflow {
                context: "blow-up multiplicity",
            })?;
        let mut out = self.grow(sum)?;
        out.intersections[i][j] -= 1;
        out.intersections[j][i] -= 1;
        for k in [i, j] {
            out.intersections[k][k] =
                out.intersections[k][k].checked_sub(1).ok_or(Error::Overflow {
                    context: "self-intersection update",
                })?;
            out.intersections[k][r] = 1;
            out.intersections[r][k] = 1;
        }
        Ok(out)
    }

    /// Realizes a degree `d` from the semigroup of a stratum as an actual
    /// component multiplicity: for a singleton stratum the component
    /// itself works; for an edge stratum `{i, j}` the minimal witness
    /// `a_i N_i + a_j N_j = d` (smallest `a_i`) is reduced to a primitive
    /// direction and reached by mediant blow-ups. The final component has
    /// multiplicity `d / gcd(a_i, a_j)`, which divides `d`.
    pub fn realize_degree(&self, stratum: &[usize], degree: i64) -> Result<Realization> {
        if degree < 1 {
            return Err(Error::NonPositiveDegree(degree));
        }
        let r = self.component_count();
        let mut subset: Vec<usize> = stratum.to_vec();
        subset.sort_unstable();
        subset.dedup();
        if let Some(&bad) = subset.iter().find(|&&k| k >= r) {
            return Err(Error::ComponentOutOfRange {
                index: bad,
                count: r,
            });
        }
        match subset.as_slice() {
            [i] => {
                let n = self.multiplicities[*i];
                if degree % n != 0 {
                    return Err(Error::DegreeNotRealizable {
                        degree,
                        stratum: subset,
                    });
                }
                Ok(Realization {
                    chain: BlowupChain {
                        base: self.clone(),
                        steps: Vec::new(),
                        result: self.clone(),
                    },
                    witness: *i,
                })
            }
            [i, j] => {
                let (i, j) = (*i, *j);
                if self.intersections[i][j] < 1 {
                    return Err(Error::NotAStratum { subset });
                }
                let (ni, nj) = (self.multiplicities[i], self.multiplicities[j]);
                let (alpha_i, alpha_j) =
                    minimal_witness(ni, nj, degree).ok_or(Error::DegreeNotRealizable {
                        degree,
                        stratum: subset.clone(),
                    })?;
                let d = alpha_i.gcd(&alpha_j);
                let target = (alpha_i / d, alpha_j / d);

                let mut current = self.clone();
                let mut steps = Vec::new();
                let mut side_u = (1i64, 0i64);
                let mut side_v = (0i64, 1i64);
                let mut comp_u = i;
                let mut comp_v = j;
                let witness = loop {
                    if side_u == target {
                        break comp_u;
                    }
                    if side_v == target {
                        break comp_v;
                    }
                    let mediant = (side_u.0 + side_v.0, side_u.1 + side_v.1);
                    current = current.blowup_intersection(comp_u, comp_v)?;
                    let new_index = current.component_count() - 1;
                    steps.push(BlowupStep {
                        center: BlowupCenter::Intersection {
                            first: comp_u,
                            second: comp_v,
                        },
                        new_index,
                        new_multiplicity: current.multiplicities[new_index],
                    });
                    let det = mediant.0 as i128 * target.1 as i128
                        - mediant.1 as i128 * target.0 as i128;
                    if det == 0 {
                        break new_index;
                    } else if det < 0 {
                        // target lies in the cone [u, mediant]
                        side_v = mediant;
                        comp_v = new_index;
                    } else {
                        side_u = mediant;
                        comp_u = new_index;
                    }
                };
                debug_assert_eq!(current.multiplicities[witness], degree / d);
                Ok(Realization {
                    chain: BlowupChain {
                        base: self.clone(),
                        steps,
                        result: current,
                    },
                    witness,
                })
            }
            _ => Err(Error::NotAStratum { subset }),
        }
    }

    /// Applies `steps` blow-ups chosen uniformly among all legal moves
    /// (every smooth point, every intersecting pair) by a seeded
    /// deterministic generator. The same seed yields the same chain.
    pub fn random_refinement(&self, steps: usize, seed: u64) -> Result<BlowupChain> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut current = self.clone();
        let mut recorded = Vec::with_capacity(steps);
        for _ in 0..steps {
            let r = current.component_count();
            let mut moves: Vec<BlowupCenter> = (0..r)
                .map(|component| BlowupCenter::SmoothPoint { component })
                .collect();
            for i in 0..r {
                for j in (i + 1)..r {
                    if current.intersections[i][j] > 0 {
                        moves.push(BlowupCenter::Intersection { first: i, second: j });
                    }
                }
            }
            let center = moves[rng.random_range(0..moves.len())];
            current = match center {
                BlowupCenter::SmoothPoint { component } => {
                    current.blowup_smooth_point(component)?
                }
                BlowupCenter::Intersection { first, second } => {
                    current.blowup_intersection(first, second)?
                }
            };
            let new_index = current.component_count() - 1;
            recorded.push(BlowupStep {
                center,
                new_index,
                new_multiplicity: current.multiplicities[new_index],
            });
        }
        Ok(BlowupChain {
            base: self.clone(),
            steps: recorded,
            result: current,
        })
    }
}

/// The witness `(a, b)` with `a * ni + b * nj = d`, `a, b >= 1`, smallest
/// `a`. Solved modulo `nj / gcd` so that huge degrees need no scanning.
fn minimal_witness(ni: i64, nj: i64, d: i64) -> Option<(i64, i64)> {
    let g = ni.gcd(&nj);
    if d % g != 0 {
        return None;
    }
    let (ni_r, nj_r, d_r) = (ni / g, nj / g, d / g);
    let a = if nj_r == 1 {
        1
    } else {
        let inv = mod_inverse_i128(ni_r % nj_r, nj_r);
        let a0 = ((d_r % nj_r) as i128 * inv).rem_euclid(nj_r as i128) as i64;
        if a0 == 0 {
            nj_r
        } else {
            a0
        }
    };
    let rest = d as i128 - a as i128 * ni as i128;
    if rest < nj as i128 {
        return None;
    }
    debug_assert_eq!(rest % nj as i128, 0);
    Some((a, (rest / nj as i128) as i64))
}

fn mod_inverse_i128(x: i64, modulus: i64) -> i128 {
    let (mut r0, mut r1) = (x.rem_euclid(modulus) as i128, modulus as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(modulus as i128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{example1, example2};

    fn invariants(rt: &ReductionType) -> (i64, i64, i64, crate::Rational) {
        (rt.index(), rt.sp_index(), rt.nu(), rt.genus())
    }

    #[test]
    fn smooth_blowup_of_example1() {
        let rt = example1(0).unwrap();
        let out = rt.blowup_smooth_point(0).unwrap();
        assert_eq!(out.component_count(), 6);
        assert_eq!(out.multiplicities[5], 2);
        assert_eq!(out.genera[5], 0);
        assert_eq!(out.intersections[0][0], -4);
        assert_eq!(out.intersections[0][5], 1);
        assert_eq!(out.intersections[5][5], -1);
        assert!(out.validate().fiber_ok);
        assert_eq!(invariants(&rt), invariants(&out));
    }

    #[test]
    fn smooth_blowup_of_a_point() {
        let rt = ReductionType::new(vec![1], vec![0], vec![vec![0]]).unwrap();
        let out = rt.blowup_smooth_point(0).unwrap();
        assert_eq!(out.multiplicities, vec![1, 1]);
        assert_eq!(out.intersections, vec![vec![-1, 1], vec![1, -1]]);
        assert!(out.validate().winters_ok);
    }

    #[test]
    fn intersection_blowup_of_example1() {
        let rt = example1(0).unwrap();
        let out = rt.blowup_intersection(3, 4).unwrap();
        assert_eq!(out.multiplicities[5], 10);
        assert_eq!(out.intersections[3][4], 0);
        assert_eq!(out.intersections[3][5], 1);
        assert_eq!(out.intersections[4][5], 1);
        assert!(out.validate().fiber_ok);
        assert_eq!(out.sp_index(), 2);
        assert_eq!(invariants(&rt), invariants(&out));
    }

    #[test]
    fn intersection_blowup_row_sums() {
        let rt = ReductionType::new(vec![1, 2], vec![0, 0], vec![vec![-4, 2], vec![2, -1]])
            .unwrap();
        let out = rt.blowup_intersection(0, 1).unwrap();
        assert_eq!(out.multiplicities, vec![1, 2, 3]);
        assert_eq!(out.intersections[0][1], 1);
        assert!(out.validate().fiber_ok);
    }

    #[test]
    fn blowup_rejects_missing_intersection() {
        let rt = example1(0).unwrap();
        // components 0 and 1 do not meet
        assert_eq!(
            rt.blowup_intersection(0, 1).unwrap_err(),
            Error::NoIntersection { i: 0, j: 1 }
        );
        assert_eq!(
            rt.blowup_intersection(2, 2).unwrap_err(),
            Error::NoIntersection { i: 2, j: 2 }
        );
        assert!(matches!(
            rt.blowup_smooth_point(9),
            Err(Error::ComponentOutOfRange { .. })
        ));
    }

    #[test]
    fn realize_degree_on_a_mixed_edge() {
        let rt = ReductionType::new(vec![1, 2], vec![0, 0], vec![vec![-4, 2], vec![2, -1]])
            .unwrap();
        let out = rt.realize_degree(&[0, 1], 5).unwrap();
        assert_eq!(out.chain.steps.len(), 2);
        assert_eq!(out.chain.steps[0].new_multiplicity, 3);
        assert_eq!(out.chain.steps[1].new_multiplicity, 5);
        assert_eq!(out.chain.result.multiplicities[out.witness], 5);
        assert_eq!(out.chain.replay().unwrap(), out.chain.result);
    }

    #[test]
    fn realize_degree_on_example1_edge() {
        let rt = example1(0).unwrap();
        // stratum {2, 4} carries multiplicities 3 and 6; 12 = 2*3 + 1*6
        let out = rt.realize_degree(&[2, 4], 12).unwrap();
        assert_eq!(out.chain.steps.len(), 2);
        assert_eq!(out.chain.steps[0].new_multiplicity, 9);
        assert_eq!(out.chain.steps[1].new_multiplicity, 12);
        assert_eq!(out.chain.result.multiplicities[out.witness], 12);
        assert!(out.chain.result.validate().fiber_ok);
    }

    #[test]
    fn realize_degree_on_singleton() {
        let rt = example1(0).unwrap();
        let out = rt.realize_degree(&[2], 9).unwrap();
        assert!(out.chain.steps.is_empty());
        assert_eq!(out.witness, 2);
        assert!(matches!(
            rt.realize_degree(&[2], 10),
            Err(Error::DegreeNotRealizable { .. })
        ));
    }

    #[test]
    fn realize_degree_rejects_non_members() {
        let rt = example1(0).unwrap();
        // stratum {3, 4}: multiplicities 4 and 6, minimum 10, gcd 2
        assert!(matches!(
            rt.realize_degree(&[3, 4], 7),
            Err(Error::DegreeNotRealizable { .. })
        ));
        assert!(matches!(
            rt.realize_degree(&[3, 4], 8),
            Err(Error::DegreeNotRealizable { .. })
        ));
        assert!(rt.realize_degree(&[3, 4], 10).is_ok());
        // {0, 1} is not an edge
        assert!(matches!(
            rt.realize_degree(&[0, 1], 4),
            Err(Error::NotAStratum { .. })
        ));
        assert!(matches!(
            rt.realize_degree(&[0, 1, 2], 6),
            Err(Error::NotAStratum { .. })
        ));
    }

    #[test]
    fn minimal_witness_picks_smallest_first_coefficient() {
        assert_eq!(minimal_witness(3, 6, 12), Some((2, 1)));
        assert_eq!(minimal_witness(1, 2, 5), Some((1, 2)));
        assert_eq!(minimal_witness(2, 3, 11), Some((1, 3)));
        assert_eq!(minimal_witness(2, 3, 5), Some((1, 1)));
        assert_eq!(minimal_witness(4, 6, 8), None);
        assert_eq!(minimal_witness(4, 6, 9), None);
    }

    #[test]
    fn random_refinement_is_deterministic_and_invariant() {
        let rt = example2(0).unwrap();
        let chain = rt.random_refinement(10, 1).unwrap();
        assert_eq!(chain.result.component_count(), 16);
        assert_eq!(chain.result, rt.random_refinement(10, 1).unwrap().result);
        assert_ne!(chain.result, rt.random_refinement(10, 2).unwrap().result);
        assert!(chain.result.validate().fiber_ok);
        assert!(chain.result.validate().connected);
        assert_eq!(invariants(&rt), invariants(&chain.result));
        assert_eq!(chain.replay().unwrap(), chain.result);
        assert_eq!(
            rt.degree_set().generators(),
            chain.result.degree_set().generators()
        );
    }

    #[test]
    fn zero_step_refinement_is_identity() {
        let rt = example1(1).unwrap();
        let chain = rt.random_refinement(0, 7).unwrap();
        assert!(chain.steps.is_empty());
        assert_eq!(chain.result, rt);
    }
}
