//! Arithmetic invariants of a reduction type: the ν-invariant, the index,
//! the specialization index, the realizable-degree set, the genus, and
//! the Riemann-Roch degree bound.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::reduction::{AbstractSncFiber, ReductionType};
use crate::Rational;

/// The set of realizable degrees, stored as its divisibility-minimal
/// generators: `d` belongs to the set iff some generator divides `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSet {
    generators: Vec<i64>,
}

impl DegreeSet {
    /// Reduces an arbitrary collection of positive values to
    /// divisibility-minimal generators, sorted ascending.
    pub fn from_values(values: impl IntoIterator<Item = i64>) -> DegreeSet {
        let mut sorted: Vec<i64> = values.into_iter().collect();
        sorted.sort_unstable();
        sorted.dedup();
        let mut generators: Vec<i64> = Vec::new();
        for v in sorted {
            if !generators.iter().any(|&g| v % g == 0) {
                generators.push(v);
            }
        }
        DegreeSet { generators }
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// Membership: true iff some generator divides `degree`.
    pub fn contains(&self, degree: i64) -> bool {
        degree >= 1 && self.generators.iter().any(|&g| degree % g == 0)
    }

    /// The smallest realizable degree (the minimum generator).
    pub fn min_degree(&self) -> i64 {
        self.generators[0]
    }

    pub fn gcd(&self) -> i64 {
        self.generators.iter().fold(0i64, |acc, &g| acc.gcd(&g))
    }
}

/// All invariants of a reduction type in one record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantSummary {
    pub nu: i64,
    pub index: i64,
    pub sp_index: i64,
    pub genus: Rational,
    pub degree_set: DegreeSet,
}

/// Result of the degree bound check for integral genus `g >= 2`:
/// `m` is the smallest positive multiple of the index that is at least
/// `g`, and a curve of this reduction type has a closed point of degree
/// at most `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub genus: i64,
    pub index: i64,
    pub nu: i64,
    pub sp_index: i64,
    /// Smallest positive multiple of `index` with `m >= genus`.
    pub m: i64,
    /// `nu <= m`.
    pub holds: bool,
    /// `sp_index <= 2g - 2`.
    pub sp_index_within_bound: bool,
}

impl ReductionType {
    /// The ν-invariant: the minimal multiplicity, i.e. the minimal degree
    /// of a closed point of the generic fiber.
    pub fn nu(&self) -> i64 {
        *self
            .multiplicities
            .iter()
            .min()
            .expect("reduction type must have at least one component")
    }

    /// The index: the gcd of the multiplicities.
    pub fn index(&self) -> i64 {
        self.multiplicities
            .iter()
            .fold(0i64, |acc, &n| acc.gcd(&n))
    }

    /// The specialization index: the minimum of `N_J` over the nonempty
    /// strata. For connected models with at least two components this is
    /// the minimum over edges of `gcd(N_i, N_j)`.
    pub fn sp_index(&self) -> i64 {
        self.strata()
            .iter()
            .map(|s| s.gcd)
            .min()
            .expect("reduction type must have at least one stratum")
    }

    /// The realizable-degree set: the union over strata of the multiples
    /// of `N_J`, represented by divisibility-minimal generators.
    pub fn degree_set(&self) -> DegreeSet {
        DegreeSet::from_values(self.strata().into_iter().map(|s| s.gcd))
    }

    /// The genus of the generic fiber, from
    /// `2 - 2g = sum_i N_i (2 - 2 G_i + c_ii)`, as an exact rational.
    /// Integrality is reported by [`ReductionType::validate`], never
    /// assumed.
    pub fn genus(&self) -> Rational {
        let s: i128 = self
            .multiplicities
            .iter()
            .zip(&self.genera)
            .enumerate()
            .map(|(i, (&n, &g))| {
                n as i128 * (2 - 2 * g as i128 + self.intersections[i][i] as i128)
            })
            .sum();
        Rational::new(2 - s, 2)
    }

    pub fn invariant_summary(&self) -> InvariantSummary {
        let degree_set = self.degree_set();
        let summary = InvariantSummary {
            nu: self.nu(),
            index: self.index(),
            sp_index: self.sp_index(),
            genus: self.genus(),
            degree_set,
        };
        debug_assert_eq!(summary.sp_index % summary.index, 0);
        debug_assert!(summary.sp_index <= summary.nu);
        debug_assert_eq!(summary.sp_index, summary.degree_set.min_degree());
        summary
    }

    /// Riemann-Roch bound check, applicable to Winters-valid data with
    /// integral genus `g >= 2`.
    pub fn bound_check(&self) -> Result<BoundReport> {
        self.check_structure()?;
        let genus = self.genus();
        if !genus.is_integer() || genus < Rational::from_integer(2) {
            return Err(Error::BoundNotApplicable {
                genus: genus.to_string(),
            });
        }
        let report = self.validate();
        if !report.winters_ok {
            return Err(Error::NotWintersValid(
                report
                    .diagnostics
                    .first()
                    .cloned()
                    .unwrap_or_else(|| "unknown violation".to_string()),
            ));
        }
        let g = i64::try_from(genus.to_integer()).map_err(|_| Error::Overflow {
            context: "converting the genus to i64",
        })?;
        let index = self.index();
        let nu = self.nu();
        let sp_index = self.sp_index();
        let m = g.div_ceil(index) * index;
        Ok(BoundReport {
            genus: g,
            index,
            nu,
            sp_index,
            m,
            holds: nu <= m,
            sp_index_within_bound: sp_index <= 2 * g - 2,
        })
    }
}

impl AbstractSncFiber {
    /// The specialization index computed from the explicit stratum list:
    /// the minimum over strata of the gcd of the member multiplicities.
    pub fn sp_index(&self) -> Result<i64> {
        if self.strata.is_empty() {
            return Err(Error::EmptyStrata);
        }
        Ok(self
            .strata
            .iter()
            .map(|subset| {
                subset
                    .iter()
                    .fold(0i64, |acc, &j| acc.gcd(&self.multiplicities[j]))
            })
            .min()
            .unwrap())
    }
}
