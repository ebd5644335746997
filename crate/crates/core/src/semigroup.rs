//! Realizable-degree semigroups: all-positive integer combinations of a
//! multiset of generators.
//!
//! For a stratum with multiplicities `N_j` the realizable degrees over it
//! are `{ sum_j a_j N_j : a_j >= 1 }`. The module computes membership,
//! gcds, the stability threshold past which every multiple of the gcd is
//! realizable, and constructive certificates for the minimum-gcd
//! stability of unions: a finitely generated sub-semigroup `S'` of a
//! union of semigroups has gcd at least the minimum of the part gcds,
//! witnessed by an explicit Bezout combination and a rearrangement that
//! represents `m * gcd(S')` with non-negative coefficients for every
//! `m` above an explicit threshold `m0`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::reduction::MAX_ENTRY;

/// Largest modulus for which exact membership tables are built. Beyond
/// this, membership with three or more reduced generators is refused
/// rather than approximated.
const RESIDUE_TABLE_LIMIT: i64 = 1 << 21;

/// Largest accepted number of generators.
const MAX_GENERATORS: usize = 1 << 16;

/// The semigroup `{ sum_j a_j g_j : a_j >= 1 for all j }` for a multiset
/// of positive generators `g_j`. Duplicates matter: each copy of a
/// generator must receive a positive coefficient, so the minimum element
/// is always the sum of all generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShiftedSemigroup {
    gens: Vec<i64>,
}

impl ShiftedSemigroup {
    pub fn new(mut gens: Vec<i64>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.len() > MAX_GENERATORS {
            return Err(Error::ResourceLimit(format!(
                "{} generators exceed the supported {MAX_GENERATORS}",
                gens.len()
            )));
        }
        for &g in &gens {
            if g < 1 {
                return Err(Error::NonPositiveGenerator { value: g });
            }
            if g > MAX_ENTRY {
                return Err(Error::ValueOutOfRange {
                    what: "generator",
                    index: 0,
                    value: g,
                });
            }
        }
        gens.sort_unstable();
        Ok(ShiftedSemigroup { gens })
    }

    /// The generator multiset, sorted ascending.
    pub fn generators(&self) -> &[i64] {
        &self.gens
    }

    /// `gcd` of the generators; every element of the semigroup is a
    /// multiple of it.
    pub fn gcd(&self) -> i64 {
        self.gens.iter().fold(0i64, |acc, &g| acc.gcd(&g))
    }

    /// The minimum element: the sum of all generators (all coefficients 1).
    pub fn min_element(&self) -> i64 {
        // bounded by MAX_GENERATORS * MAX_ENTRY < 2^57
        self.gens.iter().sum()
    }

    /// Exact membership: is `degree` a combination with every coefficient
    /// at least one? Subtracting the minimum element reduces this to
    /// non-negative representability, decided exactly on residue classes
    /// modulo the smallest reduced generator.
    pub fn contains(&self, degree: i64) -> Result<bool> {
        if degree < 1 {
            return Ok(false);
        }
        let rest = degree - self.min_element();
        if rest < 0 {
            return Ok(false);
        }
        let (g, reduced) = self.reduced();
        if rest % g != 0 {
            return Ok(false);
        }
        nonneg_representable(&reduced, rest / g)
    }

    /// The least `M` such that every multiple of [`ShiftedSemigroup::gcd`]
    /// that is `>= M` lies in the semigroup. `M` itself is always a
    /// member: it equals `min_element + gcd * conductor` where the
    /// conductor is taken in the reduced non-negative monoid.
    pub fn stability_threshold(&self) -> Result<i64> {
        let (g, reduced) = self.reduced();
        let c0 = monoid_conductor(&reduced)?;
        let threshold = self.min_element() as i128 + g as i128 * c0 as i128;
        i64::try_from(threshold).map_err(|_| Error::Overflow {
            context: "computing the stability threshold",
        })
    }

    /// (gcd, distinct generators divided by the gcd, sorted ascending).
    fn reduced(&self) -> (i64, Vec<i64>) {
        let g = self.gcd();
        let mut reduced: Vec<i64> = self.gens.iter().map(|&x| x / g).collect();
        reduced.dedup();
        (g, reduced)
    }
}

/// Minimum over the parts of their gcd. By the stability lemma this value
/// does not depend on how a given union is split into semigroups.
pub fn min_gcd_of_union(parts: &[ShiftedSemigroup]) -> Result<i64> {
    parts
        .iter()
        .map(|p| p.gcd())
        .min()
        .ok_or(Error::EmptyUnion)
}

/// Is `t >= 0` a non-negative combination of `gens` (gcd 1, sorted,
/// distinct)?
fn nonneg_representable(gens: &[i64], t: i64) -> Result<bool> {
    debug_assert!(t >= 0);
    if t == 0 || gens[0] == 1 {
        return Ok(true);
    }
    match gens.len() {
        1 => Ok(t % gens[0] == 0),
        2 => Ok(two_generator_representable(gens[0], gens[1], t)),
        _ => {
            let table = ResidueTable::build(gens)?;
            Ok(table.contains(t))
        }
    }
}

/// Membership for two coprime generators `a < b`: `t = xa + yb` with
/// `x, y >= 0` iff the least `y` with `yb = t (mod a)` satisfies `yb <= t`.
fn two_generator_representable(a: i64, b: i64, t: i64) -> bool {
    debug_assert_eq!(a.gcd(&b), 1);
    let inv = mod_inverse(b % a, a);
    let y0 = ((t % a) as i128 * inv as i128).rem_euclid(a as i128) as i64;
    y0 as i128 * b as i128 <= t as i128
}

/// Least non-representable gap bound of the monoid generated by `gens`
/// (gcd 1): the smallest `c` such that every integer `>= c` is a
/// non-negative combination.
fn monoid_conductor(gens: &[i64]) -> Result<i64> {
    if gens[0] == 1 {
        return Ok(0);
    }
    match gens.len() {
        1 => unreachable!("single reduced generator is always 1"),
        2 => {
            let c = (gens[0] as i128 - 1) * (gens[1] as i128 - 1);
            i64::try_from(c).map_err(|_| Error::Overflow {
                context: "computing the two-generator conductor",
            })
        }
        _ => {
            let table = ResidueTable::build(gens)?;
            Ok(table.conductor())
        }
    }
}

/// For each residue class modulo the smallest generator, the least
/// element of the non-negative monoid in that class (an Apery set).
struct ResidueTable {
    modulus: i64,
    min_value: Vec<i64>,
}

impl ResidueTable {
    /// Shortest-path computation over residues: from class `r` with least
    /// representative `d`, adding a generator `g` reaches class
    /// `(r + g) mod a` with representative `d + g`.
    fn build(gens: &[i64]) -> Result<ResidueTable> {
        let a = gens[0];
        if a > RESIDUE_TABLE_LIMIT {
            return Err(Error::ResourceLimit(format!(
                "smallest reduced generator {a} exceeds the membership table limit {RESIDUE_TABLE_LIMIT}"
            )));
        }
        let m = a as usize;
        let mut min_value = vec![i64::MAX; m];
        min_value[0] = 0;
        let mut heap: BinaryHeap<Reverse<(i64, usize)>> = BinaryHeap::new();
        heap.push(Reverse((0, 0)));
        while let Some(Reverse((d, r))) = heap.pop() {
            if d > min_value[r] {
                continue;
            }
            for &g in &gens[1..] {
                let nr = (r + (g % a) as usize) % m;
                let nd = d + g;
                if nd < min_value[nr] {
                    min_value[nr] = nd;
                    heap.push(Reverse((nd, nr)));
                }
            }
        }
        Ok(ResidueTable {
            modulus: a,
            min_value,
        })
    }

    fn contains(&self, t: i64) -> bool {
        t >= self.min_value[(t % self.modulus) as usize]
    }

    fn conductor(&self) -> i64 {
        // every t >= max(min_value) - modulus + 1 is representable and the
        // bound is attained one step below.
        let max = *self.min_value.iter().max().unwrap();
        max - self.modulus + 1
    }
}

/// `(g, u, v)` with `u*a + v*b = g = gcd(a, b)` and the classical minimal
/// coefficients.
fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0, s0, t0)
}

fn mod_inverse(x: i64, modulus: i64) -> i64 {
    let (g, u, _) = extended_gcd(x.rem_euclid(modulus), modulus);
    debug_assert_eq!(g, 1);
    u.rem_euclid(modulus)
}

/// A Bezout certificate for `gcd(S') = target`: elements `x_j` of the
/// semigroup `S'` and integers `lambda_j` with `sum lambda_j x_j = target`,
/// ordered with the positive coefficients first. For every `m > m0` the
/// rearrangement [`GcdCertificate::rearranged_combination`] represents
/// `m * target` as a non-negative combination of the `x_j`, so
/// `m * target` lies in `S'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdCertificate {
    /// `gcd` of the semigroup the certificate is about.
    pub target: i64,
    /// Elements of the semigroup, positive-coefficient entries first.
    pub elements: Vec<i64>,
    /// Non-zero coefficients with `sum coefficients[j] * elements[j] = target`.
    pub coefficients: Vec<i64>,
    /// Number of leading positive coefficients (at least one).
    pub positive_count: usize,
    /// Threshold: every `m > m0` admits the non-negative rearrangement.
    pub m0: i64,
}

impl GcdCertificate {
    /// Builds a certificate for the semigroup of all-positive combinations
    /// of `subgens` by iterated extended gcd, in ascending order, over the
    /// semigroup elements `T, T + g_1, T + g_2, ...` where `T` is the sum
    /// of the generators.
    pub fn build(subgens: &ShiftedSemigroup) -> Result<GcdCertificate> {
        let target = subgens.gcd();
        let total = subgens.min_element();
        let mut xs: Vec<i64> = Vec::with_capacity(subgens.generators().len() + 1);
        xs.push(total);
        for &g in subgens.generators() {
            let x = total.checked_add(g).ok_or(Error::Overflow {
                context: "building certificate elements",
            })?;
            xs.push(x);
        }
        xs.dedup();

        let mut lambdas: Vec<i128> = vec![1];
        let mut d = xs[0];
        for &x in &xs[1..] {
            let (g, u, v) = extended_gcd(d, x);
            for l in lambdas.iter_mut() {
                *l = l.checked_mul(u as i128).ok_or(Error::Overflow {
                    context: "accumulating Bezout coefficients",
                })?;
            }
            lambdas.push(v as i128);
            d = g;
        }
        if d != target {
            return Err(Error::CertificateConstruction(format!(
                "gcd of certificate elements is {d}, expected {target}"
            )));
        }

        let mut positives: Vec<(i64, i64)> = Vec::new();
        let mut negatives: Vec<(i64, i64)> = Vec::new();
        for (&x, &l) in xs.iter().zip(&lambdas) {
            let l = i64::try_from(l).map_err(|_| Error::Overflow {
                context: "normalizing Bezout coefficients",
            })?;
            if l > 0 {
                positives.push((x, l));
            } else if l < 0 {
                negatives.push((x, l));
            }
        }
        if positives.is_empty() {
            return Err(Error::CertificateConstruction(
                "no positive Bezout coefficient".to_string(),
            ));
        }
        let positive_count = positives.len();
        let x1 = positives[0].0;
        let m0: i128 = negatives
            .iter()
            .map(|&(x, l)| (x1 as i128 - 1) * (-l as i128) * (x as i128 / target as i128))
            .sum();
        let m0 = i64::try_from(m0).map_err(|_| Error::Overflow {
            context: "computing the certificate threshold m0",
        })?;

        let mut elements = Vec::with_capacity(positive_count + negatives.len());
        let mut coefficients = Vec::with_capacity(positive_count + negatives.len());
        for (x, l) in positives.into_iter().chain(negatives) {
            elements.push(x);
            coefficients.push(l);
        }
        Ok(GcdCertificate {
            target,
            elements,
            coefficients,
            positive_count,
            m0,
        })
    }

    /// The explicit rearrangement: non-negative coefficients `c_j` with
    /// `sum c_j * elements[j] = m * target`, valid for every `m > m0`.
    ///
    /// Writing `m - m0 = alpha * (x_1 / target) + r` with
    /// `0 <= r < x_1 / target`, the combination is
    /// `alpha * x_1 + r * sum_{j <= q} lambda_j x_j
    ///  - (x_1 - 1 - r) * sum_{j > q} lambda_j x_j`.
    pub fn rearranged_combination(&self, m: i64) -> Result<Vec<i128>> {
        if m <= self.m0 {
            return Err(Error::SampleBelowThreshold { m, m0: self.m0 });
        }
        let x1 = self.elements[0];
        let step = x1 / self.target;
        let excess = m - self.m0;
        let alpha = (excess / step) as i128;
        let r = (excess % step) as i128;
        let mut out: Vec<i128> = Vec::with_capacity(self.elements.len());
        for (j, &l) in self.coefficients.iter().enumerate() {
            let mut c = if j < self.positive_count {
                r * l as i128
            } else {
                -(x1 as i128 - 1 - r) * l as i128
            };
            if j == 0 {
                c += alpha;
            }
            out.push(c);
        }
        Ok(out)
    }

    /// Checks the rearrangement for one sample: all coefficients
    /// non-negative, at least one positive, and the weighted sum equal to
    /// `m * target`.
    pub fn verify(&self, m: i64) -> Result<()> {
        let coeffs = self.rearranged_combination(m)?;
        let mut total: i128 = 0;
        for (&x, &c) in self.elements.iter().zip(&coeffs) {
            if c < 0 {
                return Err(Error::CertificateConstruction(format!(
                    "negative rearranged coefficient {c} at sample m = {m}"
                )));
            }
            total += c * x as i128;
        }
        if total != m as i128 * self.target as i128 {
            return Err(Error::CertificateConstruction(format!(
                "rearranged combination sums to {total}, expected {}",
                m as i128 * self.target as i128
            )));
        }
        if coeffs.iter().all(|&c| c == 0) {
            return Err(Error::CertificateConstruction(format!(
                "rearranged combination is empty at sample m = {m}"
            )));
        }
        Ok(())
    }
}

/// Result of [`check_stability`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    /// Whether `S'` (generated by `subgens`) is contained in the union of
    /// the parts. Decided exactly: elements below `bound` are checked one
    /// by one, and beyond `bound` both sides are periodic unions of
    /// arithmetic progressions compared over one full period.
    pub contained: bool,
    /// `gcd` of `subgens`.
    pub s_prime: i64,
    /// Minimum of the part gcds.
    pub s_min: i64,
    /// `contained` and `s_min <= s_prime`.
    pub holds: bool,
    /// The explicit-check bound `B`: at least every stability threshold
    /// plus the largest generator in play.
    pub bound: i64,
    /// Length of the periodic tail window compared beyond `bound`, in
    /// steps of `s_prime`.
    pub tail_period: i64,
    /// The least element of `S'` outside the union, when not contained.
    pub counterexample: Option<i64>,
    pub certificate: Option<GcdCertificate>,
    /// The samples `m > m0` whose rearrangement was verified.
    pub verified_samples: Vec<i64>,
}

/// Checks that the semigroup `S'` generated (with all-positive
/// coefficients) by `subgens` is contained in the union of `parts`, and
/// that the minimum part gcd bounds `gcd(S')` from below, producing a
/// verified [`GcdCertificate`]. Every membership test counts against
/// `budget`.
pub fn check_stability(
    parts: &[ShiftedSemigroup],
    subgens: &ShiftedSemigroup,
    budget: u64,
) -> Result<StabilityReport> {
    if parts.is_empty() {
        return Err(Error::EmptyUnion);
    }
    let s_prime = subgens.gcd();
    let s_min = min_gcd_of_union(parts)?;

    let mut spent: u64 = 0;
    let mut step = |spent: &mut u64| -> Result<()> {
        *spent += 1;
        if *spent > budget {
            Err(Error::BudgetExhausted {
                spent: *spent,
                budget,
            })
        } else {
            Ok(())
        }
    };

    let mut bound: i64 = subgens.stability_threshold()?;
    let mut max_gen: i64 = *subgens.generators().last().unwrap();
    for part in parts {
        bound = bound.max(part.stability_threshold()?);
        max_gen = max_gen.max(*part.generators().last().unwrap());
    }
    let bound = bound.checked_add(max_gen).ok_or(Error::Overflow {
        context: "computing the containment bound",
    })?;

    let mut contained = true;
    let mut counterexample = None;

    // sporadic range: every element of S' below the bound
    let mut x = s_prime;
    while x < bound {
        step(&mut spent)?;
        if subgens.contains(x)? {
            let mut in_union = false;
            for part in parts {
                step(&mut spent)?;
                if part.contains(x)? {
                    in_union = true;
                    break;
                }
            }
            if !in_union {
                contained = false;
                counterexample = Some(x);
                break;
            }
        }
        x += s_prime;
    }

    // periodic tail: past every threshold, membership in S' and in each
    // part is plain divisibility by the respective gcd, so one window of
    // length lcm_i(s_i / gcd(s_i, s')) decides all larger elements.
    let mut tail_period: i128 = 1;
    for part in parts {
        let s_i = part.gcd();
        tail_period = tail_period.lcm(&((s_i / s_i.gcd(&s_prime)) as i128));
    }
    let tail_period = i64::try_from(tail_period).map_err(|_| Error::Overflow {
        context: "computing the tail period",
    })?;
    if contained {
        let start = bound.div_ceil(s_prime) * s_prime;
        for k in 0..tail_period {
            step(&mut spent)?;
            let x = start + k * s_prime;
            if !parts.iter().any(|p| x % p.gcd() == 0) {
                contained = false;
                counterexample = Some(x);
                break;
            }
        }
    }

    let (certificate, verified_samples) = if contained {
        let cert = GcdCertificate::build(subgens)?;
        let samples: Vec<i64> = (1..=10).map(|k| cert.m0 + k).collect();
        for &m in &samples {
            cert.verify(m)?;
        }
        (Some(cert), samples)
    } else {
        (None, Vec::new())
    };

    Ok(StabilityReport {
        contained,
        s_prime,
        s_min,
        holds: contained && s_min <= s_prime,
        bound,
        tail_period,
        counterexample,
        certificate,
        verified_samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> ShiftedSemigroup {
        ShiftedSemigroup::new(gens.to_vec()).unwrap()
    }

    /// Brute force over all coefficient vectors with every entry >= 1.
    fn naive_contains(gens: &[i64], d: i64) -> bool {
        fn rec(gens: &[i64], rest: i64) -> bool {
            match gens {
                [] => rest == 0,
                [g, tail @ ..] => {
                    let mut x = *g;
                    while x <= rest {
                        if rec(tail, rest - x) {
                            return true;
                        }
                        x += *g;
                    }
                    false
                }
            }
        }
        rec(gens, d)
    }

    #[test]
    fn membership_examples() {
        let s = sg(&[2, 3]);
        assert!(s.contains(5).unwrap());
        assert!(!s.contains(6).unwrap());
        assert!(s.contains(7).unwrap());
        assert!(!s.contains(1).unwrap());
        assert!(sg(&[4]).contains(8).unwrap());
        assert!(!sg(&[4]).contains(6).unwrap());
        // duplicates shift the minimum: {2, 2} is the even numbers >= 4
        let s = sg(&[2, 2]);
        assert!(!s.contains(2).unwrap());
        assert!(s.contains(4).unwrap());
        assert!(!s.contains(5).unwrap());
    }

    #[test]
    fn membership_matches_naive_enumeration() {
        let cases: Vec<Vec<i64>> = vec![
            vec![2, 3],
            vec![4],
            vec![4, 6],
            vec![6, 10, 15],
            vec![3, 3, 5],
            vec![5, 7, 11, 13],
            vec![2, 2, 2],
        ];
        for gens in cases {
            let s = sg(&gens);
            for d in 1..=120 {
                assert_eq!(
                    s.contains(d).unwrap(),
                    naive_contains(&gens, d),
                    "gens {gens:?}, d = {d}"
                );
            }
        }
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(sg(&[2, 3]).gcd(), 1);
        assert_eq!(sg(&[4, 6]).gcd(), 2);
        assert_eq!(sg(&[7]).gcd(), 7);
    }

    #[test]
    fn stability_thresholds() {
        // {2,3}: S = {5} and everything >= 7
        assert_eq!(sg(&[2, 3]).stability_threshold().unwrap(), 7);
        // {4}: all multiples of 4
        assert_eq!(sg(&[4]).stability_threshold().unwrap(), 4);
        // {4,6}: S = {10} and the even numbers >= 14 (12 is missing),
        // confirmed by brute force below
        assert_eq!(sg(&[4, 6]).stability_threshold().unwrap(), 14);
    }

    /// Sieve of semigroup membership up to `limit`, by coin DP on the
    /// non-negative part after the all-ones shift.
    fn membership_sieve(gens: &[i64], limit: usize) -> Vec<bool> {
        let shift: i64 = gens.iter().sum();
        let mut monoid = vec![false; limit + 1];
        monoid[0] = true;
        for &g in gens {
            for t in g as usize..=limit {
                if monoid[t - g as usize] {
                    monoid[t] = true;
                }
            }
        }
        (0..=limit)
            .map(|d| d as i64 >= shift && monoid[d - shift as usize])
            .collect()
    }

    #[test]
    fn stability_threshold_matches_brute_force() {
        let cases: Vec<Vec<i64>> = vec![
            vec![2, 3],
            vec![4],
            vec![4, 6],
            vec![6, 10, 15],
            vec![5, 7],
            vec![3, 3, 5],
            vec![9, 15],
        ];
        for gens in cases {
            let s = sg(&gens);
            let g = s.gcd();
            let threshold = s.stability_threshold().unwrap();
            let limit = 10_000;
            let member = membership_sieve(&gens, limit);
            let mut last_missing = 0;
            let mut m = g;
            while m <= limit as i64 {
                if !member[m as usize] {
                    last_missing = m;
                }
                m += g;
            }
            assert!(threshold > last_missing, "gens {gens:?}");
            assert_eq!(
                threshold,
                last_missing + g,
                "gens {gens:?}: threshold must be the first member past the last gap"
            );
            assert!(member[threshold as usize], "gens {gens:?}");
        }
    }

    #[test]
    fn min_gcd_examples() {
        assert_eq!(
            min_gcd_of_union(&[sg(&[4, 6]), sg(&[9, 15])]).unwrap(),
            2
        );
        assert_eq!(min_gcd_of_union(&[sg(&[5])]).unwrap(), 5);
        assert_eq!(min_gcd_of_union(&[]), Err(Error::EmptyUnion));
    }

    #[test]
    fn min_gcd_over_strata_equals_sp_index() {
        let rt = crate::families::example1(0).unwrap();
        let parts: Vec<ShiftedSemigroup> = rt
            .strata()
            .iter()
            .map(|s| {
                sg(&s
                    .components
                    .iter()
                    .map(|&j| rt.multiplicities[j])
                    .collect::<Vec<_>>())
            })
            .collect();
        assert_eq!(min_gcd_of_union(&parts).unwrap(), rt.sp_index());
    }

    #[test]
    fn certificate_is_sound() {
        let s = sg(&[10, 14]);
        let cert = GcdCertificate::build(&s).unwrap();
        assert_eq!(cert.target, 2);
        let total: i128 = cert
            .elements
            .iter()
            .zip(&cert.coefficients)
            .map(|(&x, &l)| x as i128 * l as i128)
            .sum();
        assert_eq!(total, 2);
        assert!(cert.positive_count >= 1);
        for m in cert.m0 + 1..=cert.m0 + 25 {
            cert.verify(m).unwrap();
            // the represented value really is in S'
            assert!(s.contains(m * cert.target).unwrap(), "m = {m}");
        }
        assert!(matches!(
            cert.verify(cert.m0),
            Err(Error::SampleBelowThreshold { .. })
        ));
    }

    #[test]
    fn check_stability_example() {
        let parts = vec![sg(&[4, 6]), sg(&[9, 15])];
        let subgens = sg(&[10, 14]);
        let report = check_stability(&parts, &subgens, 1_000_000).unwrap();
        assert!(report.contained);
        assert_eq!(report.s_prime, 2);
        assert_eq!(report.s_min, 2);
        assert!(report.holds);
        assert!(report.certificate.is_some());
        assert_eq!(report.verified_samples.len(), 10);
    }

    #[test]
    fn check_stability_trivial_part() {
        let parts = vec![sg(&[2])];
        let report = check_stability(&parts, &sg(&[2]), 1_000_000).unwrap();
        assert!(report.contained);
        assert!(report.holds);
    }

    #[test]
    fn check_stability_detects_escape() {
        // S' generated by {3} is not inside the even numbers
        let parts = vec![sg(&[2])];
        let report = check_stability(&parts, &sg(&[3]), 1_000_000).unwrap();
        assert!(!report.contained);
        assert_eq!(report.counterexample, Some(3));
        assert!(!report.holds);
        assert!(report.certificate.is_none());
    }

    #[test]
    fn check_stability_budget() {
        let parts = vec![sg(&[4, 6]), sg(&[9, 15])];
        let err = check_stability(&parts, &sg(&[10, 14]), 3).unwrap_err();
        assert!(matches!(err, Error::BudgetExhausted { .. }));
    }

    #[test]
    fn constructor_rejects_bad_generators() {
        assert_eq!(
            ShiftedSemigroup::new(vec![]).unwrap_err(),
            Error::EmptyGenerators
        );
        assert_eq!(
            ShiftedSemigroup::new(vec![2, 0]).unwrap_err(),
            Error::NonPositiveGenerator { value: 0 }
        );
    }
}
