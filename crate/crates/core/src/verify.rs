//! Exhaustive verification of the three rigidity theorems over the genus
//! census: pairwise non-isomorphism of gap posets, inclusion posets and
//! ideal class monoids, plus recovery round trips under random relabeling.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::time::Instant;

use crate::error::Result;
use crate::ideal::{self, InclusionPoset};
use crate::monoid::{self, IdealClassMonoid};
use crate::poset::{self, GapPoset};
use crate::semigroup::NumericalSemigroup;

/// Which rigidity theorem to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    GapPoset,
    InclusionPoset,
    ClassMonoid,
}

impl Theorem {
    pub fn id(self) -> &'static str {
        match self {
            Theorem::GapPoset => "gap-poset",
            Theorem::InclusionPoset => "inclusion-poset",
            Theorem::ClassMonoid => "monoid",
        }
    }
}

/// Outcome of a census-wide verification run.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub genus_bound: u64,
    pub census_size: usize,
    pub pairs_checked: usize,
    /// Human-readable descriptions of violations; empty when the theorem
    /// holds at this scale.
    pub violations: Vec<String>,
    pub wall_seconds: f64,
}

impl VerificationReport {
    pub fn confirmed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// Applies a relabeling to a Cayley table: new element k is old `perm[k]`.
fn permute_table(m: &monoid::AbstractMonoid, perm: &[usize]) -> Vec<Vec<usize>> {
    let n = m.len();
    let mut inverse = vec![0usize; n];
    for (k, &p) in perm.iter().enumerate() {
        inverse[p] = k;
    }
    (0..n)
        .map(|i| (0..n).map(|j| inverse[m.add(perm[i], perm[j])]).collect())
        .collect()
}

/// Runs the chosen theorem over the full census of genus at most
/// `genus_bound`: all pairwise isomorphism checks must come back negative,
/// and for the inclusion-poset and monoid theorems every census member must
/// additionally round-trip through its recovery algorithm under a seeded
/// random relabeling.
pub fn run(theorem: Theorem, genus_bound: u64, seed: u64) -> Result<VerificationReport> {
    let start = Instant::now();
    let census = NumericalSemigroup::enumerate_by_genus(genus_bound);
    let mut violations: Vec<String> = Vec::new();

    match theorem {
        Theorem::GapPoset => {
            // ℕ has an empty gap poset; it is vacuously distinct, so only
            // proper semigroups enter the pairwise matrix
            let posets: Vec<Option<GapPoset>> = census
                .iter()
                .map(|s| if s.is_full() { None } else { Some(GapPoset::build(s).unwrap()) })
                .collect();
            let pairs = all_pairs(census.len());
            violations.extend(pairs.par_iter().filter_map(|&(i, j)| {
                let iso = match (&posets[i], &posets[j]) {
                    (Some(p), Some(q)) => poset::poset_isomorphic(p.base(), q.base()).is_some(),
                    _ => false, // one side is ℕ, sizes differ
                };
                iso.then(|| format!("gap posets of {} and {} isomorphic", census[i], census[j]))
            }).collect::<Vec<_>>());
            Ok(VerificationReport {
                theorem,
                genus_bound,
                census_size: census.len(),
                pairs_checked: pairs.len(),
                violations,
                wall_seconds: start.elapsed().as_secs_f64(),
            })
        }
        Theorem::InclusionPoset => {
            let posets: Vec<InclusionPoset> = census
                .par_iter()
                .map(|s| InclusionPoset::build(s).unwrap())
                .collect();
            let pairs = all_pairs(census.len());
            violations.extend(pairs.par_iter().filter_map(|&(i, j)| {
                poset::poset_isomorphic(posets[i].base(), posets[j].base())
                    .is_some()
                    .then(|| {
                        format!(
                            "inclusion posets of {} and {} isomorphic",
                            census[i], census[j]
                        )
                    })
            }).collect::<Vec<_>>());
            for (i, s) in census.iter().enumerate() {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ i as u64);
                let perm = random_permutation(posets[i].base().len(), &mut rng);
                let shuffled = posets[i].base().permuted(&perm);
                match ideal::recover_from_inclusion_poset(&shuffled) {
                    Ok(t) if &t == s => {}
                    other => violations.push(format!(
                        "inclusion-poset recovery failed for {s}: {other:?}"
                    )),
                }
            }
            Ok(VerificationReport {
                theorem,
                genus_bound,
                census_size: census.len(),
                pairs_checked: pairs.len(),
                violations,
                wall_seconds: start.elapsed().as_secs_f64(),
            })
        }
        Theorem::ClassMonoid => {
            let monoids: Vec<IdealClassMonoid> = census
                .par_iter()
                .map(|s| IdealClassMonoid::build(s).unwrap())
                .collect();
            let pairs = all_pairs(census.len());
            violations.extend(pairs.par_iter().filter_map(|&(i, j)| {
                monoid::monoid_isomorphic(monoids[i].abstract_monoid(), monoids[j].abstract_monoid())
                    .is_some()
                    .then(|| {
                        format!(
                            "class monoids of {} and {} isomorphic",
                            census[i], census[j]
                        )
                    })
            }).collect::<Vec<_>>());
            let recovery: Vec<String> = census
                .par_iter()
                .enumerate()
                .filter_map(|(i, s)| {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ i as u64);
                    let perm = random_permutation(monoids[i].len(), &mut rng);
                    let rows = permute_table(monoids[i].abstract_monoid(), &perm);
                    let shuffled = monoid::AbstractMonoid::new(&rows).unwrap();
                    match monoid::recover_from_abstract_monoid(&shuffled) {
                        Ok(t) if &t == s => None,
                        other => Some(format!("monoid recovery failed for {s}: {other:?}")),
                    }
                })
                .collect();
            violations.extend(recovery);
            Ok(VerificationReport {
                theorem,
                genus_bound,
                census_size: census.len(),
                pairs_checked: pairs.len(),
                violations,
                wall_seconds: start.elapsed().as_secs_f64(),
            })
        }
    }
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gap_poset_rigidity_small() {
        let report = run(Theorem::GapPoset, 4, 0).unwrap();
        assert_eq!(report.census_size, 15); // 1+1+2+4+7
        assert_eq!(report.pairs_checked, 15 * 14 / 2);
        assert!(report.confirmed(), "{:?}", report.violations);
    }

    #[test]
    fn inclusion_rigidity_small() {
        let report = run(Theorem::InclusionPoset, 3, 1).unwrap();
        assert_eq!(report.census_size, 8);
        assert!(report.confirmed(), "{:?}", report.violations);
    }

    #[test]
    fn monoid_rigidity_small() {
        let report = run(Theorem::ClassMonoid, 2, 7).unwrap();
        assert_eq!(report.census_size, 4);
        assert_eq!(report.pairs_checked, 6);
        assert!(report.confirmed(), "{:?}", report.violations);
    }
}
