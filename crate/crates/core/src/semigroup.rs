//! Core arithmetic of numerical semigroups: construction, membership,
//! invariants, distinguished gap sets, extensions and the genus census.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::error::{Error, Result};

/// A cofinite submonoid of the non-negative integers.
///
/// Stored as the minimal generating set plus a membership table on
/// `[0, conductor)`; everything at or above the conductor is a member.
/// The full monoid of non-negative integers is encoded with `frobenius == -1`.
#[derive(Debug, Clone)]
pub struct NumericalSemigroup {
    min_generators: Vec<u64>,
    membership: Vec<bool>,
    frobenius: i64,
    conductor: u64,
    multiplicity: u64,
    genus: u64,
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        // the minimal generating set is unique
        self.min_generators == other.min_generators
    }
}
impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.min_generators.hash(state);
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.genus
            .cmp(&other.genus)
            .then_with(|| self.gap_set().cmp(&other.gap_set()))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl NumericalSemigroup {
    /// The full monoid of non-negative integers (empty gap set).
    pub fn full() -> Self {
        NumericalSemigroup {
            min_generators: vec![1],
            membership: Vec::new(),
            frobenius: -1,
            conductor: 0,
            multiplicity: 1,
            genus: 0,
        }
    }

    /// Smallest submonoid containing `gens`. Fails with `NotCoprime`
    /// unless the generators have gcd one.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() || gens.contains(&0) {
            return Err(Error::ParseError(
                "generators must be a non-empty list of positive integers".into(),
            ));
        }
        let g = gens.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(Error::NotCoprime(g));
        }
        if gens.contains(&1) {
            return Ok(Self::full());
        }
        let m = *gens.iter().min().unwrap() as usize;
        // Sieve until a window of m consecutive members appears; from the
        // start of that window on, everything is a member.
        let mut bound = (*gens.iter().max().unwrap() as usize + 1) * 2;
        loop {
            let mut member = vec![false; bound];
            member[0] = true;
            for n in 1..bound {
                member[n] = gens
                    .iter()
                    .any(|&g| n >= g as usize && member[n - g as usize]);
            }
            let mut run = 0usize;
            for n in 1..bound {
                if member[n] {
                    run += 1;
                    if run == m {
                        let conductor = n + 1 - m;
                        member.truncate(conductor);
                        return Ok(Self::from_small_members(member));
                    }
                } else {
                    run = 0;
                }
            }
            bound *= 2;
        }
    }

    /// The semigroup with exactly the given gap set, if one exists.
    pub fn from_gaps(gaps: &BTreeSet<u64>) -> Result<Self> {
        if gaps.is_empty() {
            return Ok(Self::full());
        }
        let frobenius = *gaps.iter().next_back().unwrap();
        let conductor = frobenius as usize + 1;
        let mut member = vec![true; conductor];
        for &h in gaps {
            member[h as usize] = false;
        }
        // closure check: no gap may be a sum of two nonzero members
        for a in 1..conductor {
            if !member[a] {
                continue;
            }
            for b in a..conductor.saturating_sub(a) {
                if member[b] && !member[a + b] {
                    return Err(Error::NotAGapSet {
                        a: a as u64,
                        b: b as u64,
                        sum: (a + b) as u64,
                    });
                }
            }
        }
        Ok(Self::from_small_members(member))
    }

    /// Builds the struct from a membership table of length `conductor`,
    /// assumed closed under addition with all-member tail.
    fn from_small_members(member: Vec<bool>) -> Self {
        let conductor = member.len() as u64;
        debug_assert!(conductor == 0 || !member[conductor as usize - 1]);
        let frobenius = conductor as i64 - 1;
        if conductor == 0 {
            return Self::full();
        }
        let contains = |x: u64| x >= conductor || member[x as usize];
        let multiplicity = (1..).find(|&x| contains(x)).unwrap();
        let genus = member.iter().filter(|&&b| !b).count() as u64;
        // minimal generators: nonzero members that are not a sum of two
        // smaller nonzero members; all of them lie below C + m
        let mut min_generators = Vec::new();
        for n in 1..conductor + multiplicity {
            if !contains(n) {
                continue;
            }
            let decomposable = (1..=n / 2).any(|a| contains(a) && contains(n - a));
            if !decomposable {
                min_generators.push(n);
            }
        }
        NumericalSemigroup {
            min_generators,
            membership: member,
            frobenius,
            conductor,
            multiplicity,
            genus,
        }
    }

    pub fn contains(&self, x: u64) -> bool {
        x >= self.conductor || self.membership[x as usize]
    }

    /// Membership extended to all integers (negatives are never members).
    pub fn contains_int(&self, x: i64) -> bool {
        x >= 0 && self.contains(x as u64)
    }

    pub fn is_full(&self) -> bool {
        self.frobenius < 0
    }

    pub fn min_generators(&self) -> &[u64] {
        &self.min_generators
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Gaps in increasing order.
    pub fn gap_set(&self) -> Vec<u64> {
        (0..self.conductor).filter(|&x| !self.contains(x)).collect()
    }

    /// Members below the conductor, in increasing order.
    pub fn small_members(&self) -> Vec<u64> {
        (0..self.conductor).filter(|&x| self.contains(x)).collect()
    }

    /// Pseudo-Frobenius numbers: gaps h with h + s a member for every
    /// nonzero member s.
    pub fn pseudo_frobenius(&self) -> Result<Vec<u64>> {
        if self.is_full() {
            return Err(Error::FullMonoid);
        }
        Ok(self
            .gap_set()
            .into_iter()
            .filter(|&h| {
                (1..self.conductor).all(|s| !self.contains(s) || self.contains(h + s))
            })
            .collect())
    }

    /// Type of the semigroup, the number of pseudo-Frobenius numbers.
    pub fn type_count(&self) -> u64 {
        if self.is_full() {
            0
        } else {
            self.pseudo_frobenius().unwrap().len() as u64
        }
    }

    /// Special gaps: pseudo-Frobenius numbers h with 2h and 3h members.
    /// Adjoining one of these yields a semigroup again.
    pub fn special_gaps(&self) -> Result<Vec<u64>> {
        Ok(self
            .pseudo_frobenius()?
            .into_iter()
            .filter(|&h| self.contains(2 * h) && self.contains(3 * h))
            .collect())
    }

    /// All semigroups obtained by adjoining one special gap.
    pub fn unitary_extensions(&self) -> Result<Vec<NumericalSemigroup>> {
        let gaps: BTreeSet<u64> = self.gap_set().into_iter().collect();
        self.special_gaps()?
            .into_iter()
            .map(|h| {
                let mut g = gaps.clone();
                g.remove(&h);
                Self::from_gaps(&g)
            })
            .collect()
    }

    pub fn is_symmetric(&self) -> Result<bool> {
        if self.is_full() {
            return Err(Error::FullMonoid);
        }
        let f = self.frobenius;
        Ok((0..=f).all(|z| self.contains_int(z) || self.contains_int(f - z)))
    }

    pub fn is_pseudo_symmetric(&self) -> Result<bool> {
        if self.is_full() {
            return Err(Error::FullMonoid);
        }
        let f = self.frobenius;
        if f % 2 != 0 {
            return Ok(false);
        }
        Ok((0..=f)
            .all(|z| z == f / 2 || self.contains_int(z) || self.contains_int(f - z)))
    }

    /// A semigroup is irreducible iff it has at most one special gap.
    pub fn is_irreducible(&self) -> Result<bool> {
        Ok(self.special_gaps()?.len() <= 1)
    }

    /// All semigroups containing this one, sorted by genus then gap set.
    pub fn over_semigroups(&self) -> Vec<NumericalSemigroup> {
        let mut seen: BTreeSet<NumericalSemigroup> = BTreeSet::new();
        let mut stack = vec![self.clone()];
        while let Some(s) = stack.pop() {
            if !seen.insert(s.clone()) {
                continue;
            }
            if !s.is_full() {
                stack.extend(s.unitary_extensions().unwrap());
            }
        }
        seen.into_iter().collect()
    }

    /// Membership-wise intersection; always a numerical semigroup.
    pub fn intersect(&self, other: &NumericalSemigroup) -> NumericalSemigroup {
        let mut gaps: BTreeSet<u64> = self.gap_set().into_iter().collect();
        gaps.extend(other.gap_set());
        Self::from_gaps(&gaps).expect("intersection of semigroups is a semigroup")
    }

    /// Intersection of all unitary extensions: `S ∪ {F(S)}` when S is
    /// irreducible, S itself otherwise.
    pub fn intersection_of_unitary_extensions(&self) -> Result<NumericalSemigroup> {
        let exts = self.unitary_extensions()?;
        let mut iter = exts.into_iter();
        let first = iter.next().expect("a proper semigroup has F(S) as a special gap");
        Ok(iter.fold(first, |acc, t| acc.intersect(&t)))
    }

    /// Children in the semigroup tree: remove a minimal generator larger
    /// than the Frobenius number. Each semigroup is reached exactly once.
    fn tree_children(&self) -> Vec<NumericalSemigroup> {
        self.min_generators
            .iter()
            .copied()
            .filter(|&a| (a as i64) > self.frobenius)
            .map(|a| {
                let mut gaps: BTreeSet<u64> = self.gap_set().into_iter().collect();
                gaps.insert(a);
                Self::from_gaps(&gaps).expect("removing a minimal generator keeps closure")
            })
            .collect()
    }

    /// Every numerical semigroup of genus at most `g_max`, depth first.
    pub fn enumerate_by_genus(g_max: u64) -> Vec<NumericalSemigroup> {
        Self::enumerate_by_genus_limited(g_max, usize::MAX).unwrap()
    }

    /// Same as [`enumerate_by_genus`](Self::enumerate_by_genus) with a cap
    /// on the number of tree nodes visited.
    pub fn enumerate_by_genus_limited(
        g_max: u64,
        node_budget: usize,
    ) -> Result<Vec<NumericalSemigroup>> {
        let mut out = Vec::new();
        let mut stack = vec![Self::full()];
        while let Some(s) = stack.pop() {
            if out.len() >= node_budget {
                return Err(Error::ResourceLimit(format!(
                    "census node budget of {node_budget} exceeded"
                )));
            }
            if s.genus < g_max {
                let mut children = s.tree_children();
                children.reverse();
                stack.extend(children);
            }
            out.push(s);
        }
        out.sort();
        Ok(out)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self
            .min_generators
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let gaps = self
            .gap_set()
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(
            f,
            "⟨{}⟩ | gaps={{{}}} | F={} g={} m={} t={}",
            gens,
            gaps,
            self.frobenius,
            self.genus,
            self.multiplicity,
            self.type_count()
        )
    }
}

/// Parses the semigroup literals accepted by the CLI:
/// `gens:4,6,9` or `gaps:1,2,3,5,7,11`.
impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_list = |body: &str| -> Result<Vec<u64>> {
            if body.trim().is_empty() {
                return Ok(Vec::new());
            }
            body.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u64>()
                        .map_err(|e| Error::ParseError(format!("bad integer {t:?}: {e}")))
                })
                .collect()
        };
        if let Some(body) = s.strip_prefix("gens:") {
            let gens = parse_list(body)?;
            NumericalSemigroup::from_generators(&gens)
        } else if let Some(body) = s.strip_prefix("gaps:") {
            let gaps: BTreeSet<u64> = parse_list(body)?.into_iter().collect();
            if gaps.contains(&0) {
                return Err(Error::ParseError("0 cannot be a gap".into()));
            }
            NumericalSemigroup::from_gaps(&gaps)
        } else {
            Err(Error::ParseError(format!(
                "expected \"gens:...\" or \"gaps:...\", got {s:?}"
            )))
        }
    }
}
