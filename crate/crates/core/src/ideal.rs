//! Normalized ideals of a numerical semigroup: representation, minimal
//! generators, addition, enumeration via antichains of gaps, the inclusion
//! poset, and recovery of the semigroup from an abstract inclusion poset.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poset::{self, AbstractPoset, GapPoset};
use crate::semigroup::NumericalSemigroup;

/// An ideal I of S with min(I) = 0, stored as membership on `[0, F(S)]`;
/// every integer at or above the conductor is an implicit member.
#[derive(Debug, Clone)]
pub struct NormalizedIdeal {
    ambient: Arc<NumericalSemigroup>,
    small_elements: Vec<bool>, // length = conductor
    min_gens: Vec<u64>,
}

impl PartialEq for NormalizedIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.small_elements == other.small_elements
    }
}
impl Eq for NormalizedIdeal {}

impl NormalizedIdeal {
    /// The ideal `gens + S`; the generating set must contain 0 but need not
    /// be an antichain, minimal generators are recomputed.
    pub fn from_generators(ambient: Arc<NumericalSemigroup>, gens: &[u64]) -> Result<Self> {
        if !gens.contains(&0) {
            return Err(Error::ParseError(
                "ideal generators must contain 0".into(),
            ));
        }
        let c = ambient.conductor();
        let mut table = vec![false; c as usize];
        for x in 0..c {
            if gens
                .iter()
                .any(|&g| x >= g && ambient.contains(x - g))
            {
                table[x as usize] = true;
            }
        }
        Ok(Self::from_table(ambient, table))
    }

    fn from_table(ambient: Arc<NumericalSemigroup>, table: Vec<bool>) -> Self {
        let mut ideal = NormalizedIdeal {
            ambient,
            small_elements: table,
            min_gens: Vec::new(),
        };
        ideal.min_gens = ideal.compute_min_gens();
        ideal
    }

    /// Minimal generators: I \ (I + S*). Nonzero ones are gaps of S, so the
    /// scan stays below the conductor.
    fn compute_min_gens(&self) -> Vec<u64> {
        if self.ambient.is_full() {
            return vec![0];
        }
        let c = self.ambient.conductor();
        (0..c)
            .filter(|&x| self.contains(x))
            .filter(|&x| {
                !(1..=x).any(|s| self.ambient.contains(s) && self.contains(x - s))
            })
            .collect()
    }

    pub fn ambient(&self) -> &Arc<NumericalSemigroup> {
        &self.ambient
    }

    pub fn contains(&self, x: u64) -> bool {
        x >= self.ambient.conductor() || self.small_elements[x as usize]
    }

    /// Members on `[0, F(S)]`.
    pub fn small_elements(&self) -> Vec<u64> {
        (0..self.ambient.conductor())
            .filter(|&x| self.contains(x))
            .collect()
    }

    pub fn minimal_generators(&self) -> &[u64] {
        &self.min_gens
    }

    /// Label used in figures and JSON documents: comma-joined minimal
    /// generators.
    pub fn label(&self) -> String {
        self.min_gens
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// The ambient semigroup as an ideal of itself (the identity).
    pub fn identity(ambient: Arc<NumericalSemigroup>) -> Self {
        let table: Vec<bool> = (0..ambient.conductor()).map(|x| ambient.contains(x)).collect();
        Self::from_table(ambient, table)
    }

    /// Removes `x` from the ideal; succeeds exactly when `x` is a nonzero
    /// minimal generator.
    pub fn remove_element(&self, x: u64) -> Result<NormalizedIdeal> {
        if x == 0 || !self.contains(x) || !self.min_gens.contains(&x) {
            return Err(Error::NotMinimalGenerator(x));
        }
        // a nonzero minimal generator is a gap of S, hence below the conductor
        let mut table = self.small_elements.clone();
        table[x as usize] = false;
        Ok(Self::from_table(self.ambient.clone(), table))
    }

    /// Pointwise sum of ideals over the same ambient semigroup.
    pub fn add(&self, other: &NormalizedIdeal) -> Result<NormalizedIdeal> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        let c = self.ambient.conductor();
        let mut table = vec![false; c as usize];
        for x in 0..c {
            table[x as usize] = (0..=x).any(|a| self.contains(a) && other.contains(x - a));
        }
        Ok(Self::from_table(self.ambient.clone(), table))
    }

    /// Proper containment with |self \ other| = 1, the inclusion cover
    /// relation.
    pub fn covers(&self, other: &NormalizedIdeal) -> Result<bool> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        let mut diff = 0usize;
        for x in 0..self.ambient.conductor() {
            match (self.contains(x), other.contains(x)) {
                (true, false) => diff += 1,
                (false, true) => return Ok(false), // not even a superset
                _ => {}
            }
        }
        Ok(diff == 1)
    }

    pub fn is_subset_of(&self, other: &NormalizedIdeal) -> Result<bool> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        Ok((0..self.ambient.conductor()).all(|x| !self.contains(x) || other.contains(x)))
    }

    /// Number of ideals covered by this one; equals the number of nonzero
    /// minimal generators.
    pub fn covered_count(&self) -> usize {
        self.min_gens.iter().filter(|&&g| g != 0).count()
    }

    /// Idempotent ideals are over-semigroups; converts the member set into a
    /// standalone semigroup.
    pub fn to_semigroup(&self) -> Result<NumericalSemigroup> {
        let gaps: std::collections::BTreeSet<u64> = (0..self.ambient.conductor())
            .filter(|&x| !self.contains(x))
            .collect();
        NumericalSemigroup::from_gaps(&gaps)
    }
}

/// All normalized ideals of S, one per antichain of gaps. The identity
/// (empty antichain) comes first; the rest follow the antichain generation
/// order, which walks gaps in increasing value.
pub fn enumerate_normalized_ideals(s: &NumericalSemigroup) -> Vec<NormalizedIdeal> {
    enumerate_normalized_ideals_limited(s, usize::MAX).unwrap()
}

pub fn enumerate_normalized_ideals_limited(
    s: &NumericalSemigroup,
    cap: usize,
) -> Result<Vec<NormalizedIdeal>> {
    let ambient = Arc::new(s.clone());
    if s.is_full() {
        return Ok(vec![NormalizedIdeal::identity(ambient)]);
    }
    let gp = GapPoset::build(s).expect("proper semigroup has gaps");
    let gaps = gp.gaps().to_vec();
    let n = gaps.len();
    let comparable = |i: usize, j: usize| gp.base().le(i, j) || gp.base().le(j, i);
    let mut out = Vec::new();
    let mut antichain: Vec<usize> = Vec::new();

    // depth-first over gap indices in increasing value order; the empty
    // antichain (the identity ideal S) is emitted first
    fn walk(
        start: usize,
        n: usize,
        cap: usize,
        comparable: &dyn Fn(usize, usize) -> bool,
        antichain: &mut Vec<usize>,
        emit: &mut dyn FnMut(&[usize]) -> Result<()>,
    ) -> Result<()> {
        for i in start..n {
            if antichain.iter().all(|&j| !comparable(i, j)) {
                antichain.push(i);
                emit(antichain)?;
                walk(i + 1, n, cap, comparable, antichain, emit)?;
                antichain.pop();
            }
        }
        Ok(())
    }

    let mut emit = |chosen: &[usize]| -> Result<()> {
        if out.len() >= cap {
            return Err(Error::ResourceLimit(format!("ideal cap of {cap} exceeded")));
        }
        let mut gens: Vec<u64> = chosen.iter().map(|&i| gaps[i]).collect();
        gens.push(0);
        out.push(NormalizedIdeal::from_generators(ambient.clone(), &gens).unwrap());
        Ok(())
    };
    emit(&[])?;
    walk(0, n, cap, &comparable, &mut antichain, &mut emit)?;
    Ok(out)
}

/// The ideals `{0, g} + S`, one per gap, in increasing gap order.
/// Containment among them is anti-isomorphic to the gap poset.
pub fn gap_ideals(s: &NumericalSemigroup) -> Result<Vec<NormalizedIdeal>> {
    if s.is_full() {
        return Err(Error::FullMonoid);
    }
    let ambient = Arc::new(s.clone());
    s.gap_set()
        .into_iter()
        .map(|g| NormalizedIdeal::from_generators(ambient.clone(), &[0, g]))
        .collect()
}

/// The poset of all normalized ideals of S under inclusion.
#[derive(Debug, Clone)]
pub struct InclusionPoset {
    ideals: Vec<NormalizedIdeal>,
    base: AbstractPoset,
    covers: Vec<(usize, usize)>,
}

impl InclusionPoset {
    pub fn build(s: &NumericalSemigroup) -> Result<InclusionPoset> {
        Self::build_limited(s, usize::MAX)
    }

    pub fn build_limited(s: &NumericalSemigroup, cap: usize) -> Result<InclusionPoset> {
        let ideals = enumerate_normalized_ideals_limited(s, cap)?;
        let n = ideals.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = ideals[i].is_subset_of(&ideals[j]).unwrap();
            }
        }
        let labels = ideals.iter().map(|i| i.label()).collect();
        let base = AbstractPoset::new(labels, leq)?;
        let covers = base.hasse_covers();
        Ok(InclusionPoset {
            ideals,
            base,
            covers,
        })
    }

    pub fn ideals(&self) -> &[NormalizedIdeal] {
        &self.ideals
    }

    pub fn base(&self) -> &AbstractPoset {
        &self.base
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }
}

/// Recovers S from an abstract copy of its inclusion poset of normalized
/// ideals: the nodes covering exactly one node are the `{0, g} + S` ideals,
/// whose induced order reversed is the gap poset.
pub fn recover_from_inclusion_poset(p: &AbstractPoset) -> Result<NumericalSemigroup> {
    let n = p.len();
    if n == 0 {
        return Err(Error::NotAnInclusionPoset);
    }
    if n == 1 {
        return Ok(NumericalSemigroup::full());
    }
    let covers = p.hasse_covers();
    let principal: Vec<usize> = (0..n)
        .filter(|&i| covers.iter().filter(|&&(_, hi)| hi == i).count() == 1)
        .collect();
    let gap_like = p.induced(&principal).reversed();
    let s = poset::reconstruct(&gap_like).map_err(|_| Error::NotAnInclusionPoset)?;
    let rebuilt = InclusionPoset::build(&s).map_err(|_| Error::NotAnInclusionPoset)?;
    if poset::poset_isomorphic(p, rebuilt.base()).is_some() {
        Ok(s)
    } else {
        Err(Error::NotAnInclusionPoset)
    }
}
