//! Reduction types: the labeled dual graph of an snc special fiber,
//! structural and semantic validation, and stratum extraction.
//!
//! A reduction type records, per irreducible component of the special
//! fiber, its multiplicity `N_i >= 1` and genus `G_i >= 0`, together with
//! the symmetric intersection matrix `C = (c_ij)`. For a curve the
//! nonempty strata are the single components and the intersecting pairs;
//! a point of the model lies on at most two components.

use num_integer::Integer;

use crate::error::{Error, Result};

/// Largest absolute value accepted for multiplicities, genus labels and
/// intersection numbers. Entries below this bound keep every downstream
/// computation representable in `i128` without overflow.
pub const MAX_ENTRY: i64 = 1 << 40;

/// Largest accepted component count.
pub const MAX_COMPONENTS: usize = 1 << 16;

/// The combinatorial data `(N, G, C)` of an snc special fiber.
///
/// Fields are public so that malformed data can be constructed and fed to
/// [`ReductionType::validate`]; use [`ReductionType::new`] for checked
/// construction. Component indices are 0-based throughout the library.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReductionType {
    /// Multiplicity of each component in the special fiber.
    pub multiplicities: Vec<i64>,
    /// Genus of each component.
    pub genera: Vec<i64>,
    /// Symmetric matrix of intersection numbers, `intersections[i][j] = E_i . E_j`.
    pub intersections: Vec<Vec<i64>>,
}

/// Outcome of validating a reduction type.
///
/// `winters_ok` holds exactly when the data is realizable as the special
/// fiber of an snc-model of a smooth, proper, geometrically connected
/// curve: the structure is well-formed, `C * N^t = 0`, the dual graph is
/// connected, the multiplicity vector is primitive, and the genus formula
/// yields a non-negative integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub structural_ok: bool,
    /// `C * N^t = 0` exactly.
    pub fiber_ok: bool,
    /// The graph with an edge `{i, j}` whenever `c_ij > 0` is connected.
    pub connected: bool,
    /// `gcd(N) = 1`.
    pub primitive: bool,
    /// Exact genus from `2 - 2g = sum N_i (2 - 2 G_i + c_ii)`, when the
    /// shape of the data allows computing it.
    pub genus: Option<crate::Rational>,
    pub genus_integral_nonneg: bool,
    pub winters_ok: bool,
    /// Human-readable violation records (1-based component indices).
    pub diagnostics: Vec<String>,
}

/// A nonempty stratum: the components meeting at some point of the
/// special fiber, with the gcd of their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Stratum {
    /// Sorted component indices (0-based).
    pub components: Vec<usize>,
    /// `gcd { N_j : j in components }`.
    pub gcd: i64,
}

/// Multiplicities plus an explicit list of nonempty strata. This is the
/// shape the specialization index takes on higher-dimensional fibers,
/// where strata are not restricted to singletons and pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractSncFiber {
    pub multiplicities: Vec<i64>,
    /// Distinct nonempty subsets of component indices, each sorted; the
    /// list is sorted by (length, content). Every singleton is present.
    pub strata: Vec<Vec<usize>>,
}

impl ReductionType {
    /// Checked constructor; rejects malformed shapes and out-of-range
    /// entries.
    pub fn new(
        multiplicities: Vec<i64>,
        genera: Vec<i64>,
        intersections: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let rt = ReductionType {
            multiplicities,
            genera,
            intersections,
        };
        rt.check_structure()?;
        Ok(rt)
    }

    pub fn component_count(&self) -> usize {
        self.multiplicities.len()
    }

    fn shape_consistent(&self) -> bool {
        let r = self.multiplicities.len();
        r >= 1
            && r <= MAX_COMPONENTS
            && self.genera.len() == r
            && self.intersections.len() == r
            && self.intersections.iter().all(|row| row.len() == r)
    }

    fn entries_in_range(&self) -> bool {
        self.multiplicities.iter().all(|v| v.abs() <= MAX_ENTRY)
            && self.genera.iter().all(|v| v.abs() <= MAX_ENTRY)
            && self
                .intersections
                .iter()
                .all(|row| row.iter().all(|v| v.abs() <= MAX_ENTRY))
    }

    /// Returns the first structural violation, if any.
    pub fn check_structure(&self) -> Result<()> {
        let r = self.multiplicities.len();
        if r == 0 {
            return Err(Error::EmptyModel);
        }
        if r > MAX_COMPONENTS {
            return Err(Error::TooManyComponents {
                count: r,
                max: MAX_COMPONENTS,
            });
        }
        if self.genera.len() != r {
            return Err(Error::LengthMismatch {
                what: "G",
                expected: r,
                found: self.genera.len(),
            });
        }
        if self.intersections.len() != r {
            return Err(Error::LengthMismatch {
                what: "C",
                expected: r,
                found: self.intersections.len(),
            });
        }
        for (i, row) in self.intersections.iter().enumerate() {
            if row.len() != r {
                return Err(Error::NotSquare {
                    rows: r,
                    row: i,
                    cols: row.len(),
                });
            }
        }
        for (i, &n) in self.multiplicities.iter().enumerate() {
            if n < 1 || n > MAX_ENTRY {
                return Err(Error::ValueOutOfRange {
                    what: "N",
                    index: i,
                    value: n,
                });
            }
        }
        for (i, &g) in self.genera.iter().enumerate() {
            if g < 0 || g > MAX_ENTRY {
                return Err(Error::ValueOutOfRange {
                    what: "G",
                    index: i,
                    value: g,
                });
            }
        }
        for i in 0..r {
            for j in 0..r {
                let v = self.intersections[i][j];
                if v.abs() > MAX_ENTRY {
                    return Err(Error::ValueOutOfRange {
                        what: "C",
                        index: i * r + j,
                        value: v,
                    });
                }
                if j > i {
                    if v != self.intersections[j][i] {
                        return Err(Error::AsymmetricMatrix { i, j });
                    }
                    if v < 0 {
                        return Err(Error::NegativeIntersection { i, j, value: v });
                    }
                }
            }
        }
        Ok(())
    }

    /// Validates structure and Winters realizability, reporting every
    /// violation rather than stopping at the first.
    ///
    /// `fiber_ok`, `connected`, `primitive` and the genus are computed
    /// whenever the shape of the data allows it, even if some value
    /// constraint fails; only shape or range violations suppress them.
    pub fn validate(&self) -> ValidationReport {
        let mut diagnostics = Vec::new();
        let r = self.multiplicities.len();

        if r == 0 {
            diagnostics.push("model has no components".to_string());
        }
        if r > MAX_COMPONENTS {
            diagnostics.push(format!(
                "model has {r} components, more than the supported {MAX_COMPONENTS}"
            ));
        }
        if self.genera.len() != r {
            diagnostics.push(format!(
                "G has length {}, expected {r}",
                self.genera.len()
            ));
        }
        if self.intersections.len() != r {
            diagnostics.push(format!(
                "C has {} rows, expected {r}",
                self.intersections.len()
            ));
        } else {
            for (i, row) in self.intersections.iter().enumerate() {
                if row.len() != r {
                    diagnostics.push(format!(
                        "C row {} has {} entries, expected {r}",
                        i + 1,
                        row.len()
                    ));
                }
            }
        }
        let shape_ok = self.shape_consistent() && diagnostics.is_empty();

        let mut in_range = true;
        if shape_ok {
            for (i, &n) in self.multiplicities.iter().enumerate() {
                if n.abs() > MAX_ENTRY {
                    diagnostics.push(format!("N[{}] = {n} is outside the supported range", i + 1));
                    in_range = false;
                } else if n < 1 {
                    diagnostics.push(format!("component {}: multiplicity {n} is not positive", i + 1));
                }
            }
            for (i, &g) in self.genera.iter().enumerate() {
                if g.abs() > MAX_ENTRY {
                    diagnostics.push(format!("G[{}] = {g} is outside the supported range", i + 1));
                    in_range = false;
                } else if g < 0 {
                    diagnostics.push(format!("component {}: genus {g} is negative", i + 1));
                }
            }
            for i in 0..r {
                for j in 0..r {
                    let v = self.intersections[i][j];
                    if v.abs() > MAX_ENTRY {
                        diagnostics.push(format!(
                            "C[{}][{}] = {v} is outside the supported range",
                            i + 1,
                            j + 1
                        ));
                        in_range = false;
                    }
                }
            }
            for i in 0..r {
                for j in (i + 1)..r {
                    if self.intersections[i][j] != self.intersections[j][i] {
                        diagnostics.push(format!(
                            "C is not symmetric at ({}, {})",
                            i + 1,
                            j + 1
                        ));
                    } else if self.intersections[i][j] < 0 {
                        diagnostics.push(format!(
                            "components {} and {}: negative intersection number {}",
                            i + 1,
                            j + 1,
                            self.intersections[i][j]
                        ));
                    }
                }
            }
        }
        let structural_ok = shape_ok && in_range && diagnostics.is_empty();

        let computable = shape_ok && in_range;
        let (fiber_ok, connected, primitive, genus) = if computable {
            let mut fiber_ok = true;
            for i in 0..r {
                let s: i128 = (0..r)
                    .map(|j| self.intersections[i][j] as i128 * self.multiplicities[j] as i128)
                    .sum();
                if s != 0 {
                    diagnostics.push(format!("row {}: C*N^t = {s}, expected 0", i + 1));
                    fiber_ok = false;
                }
            }
            let connected = self.dual_graph_connected();
            if !connected {
                diagnostics.push("dual graph is disconnected".to_string());
            }
            let g = self
                .multiplicities
                .iter()
                .fold(0i64, |acc, &n| acc.gcd(&n.abs()));
            let primitive = g == 1;
            if !primitive {
                diagnostics.push(format!("multiplicities are not primitive (gcd {g})"));
            }
            (fiber_ok, connected, primitive, Some(self.genus()))
        } else {
            (false, false, false, None)
        };

        let genus_integral_nonneg = match genus {
            Some(g) => g.is_integer() && g >= crate::Rational::from_integer(0),
            None => false,
        };
        if computable && !genus_integral_nonneg {
            diagnostics.push(format!(
                "genus {} is not a non-negative integer",
                genus.unwrap()
            ));
        }

        let winters_ok =
            structural_ok && fiber_ok && connected && primitive && genus_integral_nonneg;
        ValidationReport {
            structural_ok,
            fiber_ok,
            connected,
            primitive,
            genus,
            genus_integral_nonneg,
            winters_ok,
            diagnostics,
        }
    }

    fn dual_graph_connected(&self) -> bool {
        let r = self.multiplicities.len();
        if r == 0 {
            return false;
        }
        let mut seen = vec![false; r];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut visited = 1;
        while let Some(i) = stack.pop() {
            for j in 0..r {
                if !seen[j] && i != j && (self.intersections[i][j] > 0 || self.intersections[j][i] > 0)
                {
                    seen[j] = true;
                    visited += 1;
                    stack.push(j);
                }
            }
        }
        visited == r
    }

    /// The nonempty strata of the special fiber: every single component,
    /// followed by every intersecting pair `{i, j}` with `c_ij > 0`.
    /// Singletons come in ascending order, pairs in lexicographic order.
    pub fn strata(&self) -> Vec<Stratum> {
        let r = self.component_count();
        let mut out = Vec::with_capacity(r);
        for i in 0..r {
            out.push(Stratum {
                components: vec![i],
                gcd: self.multiplicities[i],
            });
        }
        for i in 0..r {
            for j in (i + 1)..r {
                if self.intersections[i][j] > 0 {
                    out.push(Stratum {
                        components: vec![i, j],
                        gcd: self.multiplicities[i].gcd(&self.multiplicities[j]),
                    });
                }
            }
        }
        out
    }

    /// Forgets the intersection matrix, keeping multiplicities and the
    /// subsets underlying the strata.
    pub fn to_abstract(&self) -> AbstractSncFiber {
        AbstractSncFiber {
            multiplicities: self.multiplicities.clone(),
            strata: self.strata().into_iter().map(|s| s.components).collect(),
        }
    }
}

impl AbstractSncFiber {
    /// Checked constructor. Subsets are sorted and the list is normalized
    /// to (length, content) order; every singleton must be present.
    pub fn new(multiplicities: Vec<i64>, strata: Vec<Vec<usize>>) -> Result<Self> {
        let r = multiplicities.len();
        if r == 0 {
            return Err(Error::EmptyModel);
        }
        for (i, &n) in multiplicities.iter().enumerate() {
            if n < 1 || n > MAX_ENTRY {
                return Err(Error::ValueOutOfRange {
                    what: "N",
                    index: i,
                    value: n,
                });
            }
        }
        let mut normalized: Vec<Vec<usize>> = Vec::with_capacity(strata.len());
        for mut subset in strata {
            subset.sort_unstable();
            subset.dedup();
            if subset.is_empty() {
                return Err(Error::EmptyStrata);
            }
            if let Some(&bad) = subset.iter().find(|&&i| i >= r) {
                return Err(Error::ComponentOutOfRange {
                    index: bad,
                    count: r,
                });
            }
            normalized.push(subset);
        }
        normalized.sort_by(|a, b| (a.len(), a.as_slice()).cmp(&(b.len(), b.as_slice())));
        for w in normalized.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateStratum {
                    subset: w[0].clone(),
                });
            }
        }
        for i in 0..r {
            if !normalized.contains(&vec![i]) {
                return Err(Error::MissingSingleton { index: i });
            }
        }
        Ok(AbstractSncFiber {
            multiplicities,
            strata: normalized,
        })
    }

    pub fn component_count(&self) -> usize {
        self.multiplicities.len()
    }
}
