//! Finite posets: the gap poset of a numerical semigroup, nd statistics,
//! reconstruction of the semigroup from an abstract isomorphic copy, and
//! generic isomorphism testing.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// A finite partial order on opaque labels, stored as a full relation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractPoset {
    elements: Vec<String>,
    leq: Vec<bool>, // row-major n*n, leq[i*n+j] means element i <= element j
}

impl AbstractPoset {
    /// Validates reflexivity, antisymmetry and transitivity.
    pub fn new(elements: Vec<String>, leq: Vec<bool>) -> Result<Self> {
        let n = elements.len();
        if leq.len() != n * n {
            return Err(Error::NotAPartialOrder(format!(
                "relation matrix has {} entries, expected {}",
                leq.len(),
                n * n
            )));
        }
        let p = AbstractPoset { elements, leq };
        for i in 0..n {
            if !p.le(i, i) {
                return Err(Error::NotAPartialOrder(format!("not reflexive at {i}")));
            }
            for j in 0..n {
                if i != j && p.le(i, j) && p.le(j, i) {
                    return Err(Error::NotAPartialOrder(format!(
                        "antisymmetry fails on ({i}, {j})"
                    )));
                }
                for k in 0..n {
                    if p.le(i, j) && p.le(j, k) && !p.le(i, k) {
                        return Err(Error::NotAPartialOrder(format!(
                            "transitivity fails on ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        Ok(p)
    }

    /// Builds a poset from a list of `i <= j` pairs. Reflexive pairs are
    /// optional and the transitive closure is applied before validation.
    pub fn from_pairs(elements: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = elements.len();
        let mut leq = vec![false; n * n];
        for &(i, j) in pairs {
            if i >= n || j >= n {
                return Err(Error::NotAPartialOrder(format!(
                    "pair ({i}, {j}) out of range for {n} elements"
                )));
            }
            leq[i * n + j] = true;
        }
        for i in 0..n {
            leq[i * n + i] = true;
        }
        // Floyd-Warshall style transitive closure
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Self::new(elements, leq)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    #[inline]
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.len() + j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.le(i, j)
    }

    /// Size of the down-set of `i`, including `i` itself.
    pub fn down_set_size(&self, i: usize) -> usize {
        (0..self.len()).filter(|&j| self.le(j, i)).count()
    }

    pub fn up_set_size(&self, i: usize) -> usize {
        (0..self.len()).filter(|&j| self.le(i, j)).count()
    }

    /// Minimal elements.
    pub fn minimals(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.down_set_size(i) == 1)
            .collect()
    }

    /// Transitive reduction minus reflexivity, as ordered (low, high) pairs.
    pub fn hasse_covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut covers = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) && !(0..n).any(|k| self.lt(i, k) && self.lt(k, j)) {
                    covers.push((i, j));
                }
            }
        }
        covers
    }

    /// Connected components of the undirected comparability graph.
    pub fn component_count(&self) -> usize {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = count;
            while let Some(i) = stack.pop() {
                for j in 0..n {
                    if comp[j] == usize::MAX && (self.lt(i, j) || self.lt(j, i)) {
                        comp[j] = count;
                        stack.push(j);
                    }
                }
            }
            count += 1;
        }
        count
    }

    /// Induced subposet on the given indices, with its own labels.
    pub fn induced(&self, indices: &[usize]) -> AbstractPoset {
        let m = indices.len();
        let mut leq = vec![false; m * m];
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                leq[a * m + b] = self.le(i, j);
            }
        }
        AbstractPoset {
            elements: indices.iter().map(|&i| self.elements[i].clone()).collect(),
            leq,
        }
    }

    /// The same elements with the order reversed.
    pub fn reversed(&self) -> AbstractPoset {
        let n = self.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = self.le(j, i);
            }
        }
        AbstractPoset {
            elements: self.elements.clone(),
            leq,
        }
    }

    /// Relabels elements by a permutation: new index `k` holds old element
    /// `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> AbstractPoset {
        let n = self.len();
        assert_eq!(perm.len(), n);
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = self.le(perm[i], perm[j]);
            }
        }
        AbstractPoset {
            elements: perm.iter().map(|&i| self.elements[i].clone()).collect(),
            leq,
        }
    }
}

/// The poset of gaps of a semigroup under the order induced by membership:
/// `h <= h'` iff `h' - h` is a member.
#[derive(Debug, Clone)]
pub struct GapPoset {
    base: AbstractPoset,
    gaps: Vec<u64>,
    semigroup: NumericalSemigroup,
}

impl GapPoset {
    pub fn build(s: &NumericalSemigroup) -> Result<GapPoset> {
        if s.is_full() {
            return Err(Error::EmptyPoset);
        }
        let gaps = s.gap_set();
        let n = gaps.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = s.contains_int(gaps[j] as i64 - gaps[i] as i64);
            }
        }
        let elements = gaps.iter().map(|g| g.to_string()).collect();
        Ok(GapPoset {
            base: AbstractPoset::new(elements, leq)?,
            gaps,
            semigroup: s.clone(),
        })
    }

    pub fn base(&self) -> &AbstractPoset {
        &self.base
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    /// Number of connected components of the undirected Hasse graph.
    /// Always at most the type of the semigroup.
    pub fn component_count(&self) -> usize {
        self.base.component_count()
    }
}

/// Down-set statistics of a poset: `nd` values plus the partition of
/// elements into deserts (nd-equivalence classes, ordered by nd value).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NdProfile {
    /// nd value per element index.
    pub nd: Vec<usize>,
    /// Element indices grouped by nd value, in increasing nd order.
    pub deserts: Vec<Vec<usize>>,
}

/// Down-set sizes and the desert decomposition of a poset.
pub fn nd_profile(p: &AbstractPoset) -> NdProfile {
    let nd: Vec<usize> = (0..p.len()).map(|i| p.down_set_size(i)).collect();
    let mut by_value: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, &v) in nd.iter().enumerate() {
        by_value.entry(v).or_default().push(i);
    }
    NdProfile {
        nd,
        deserts: by_value.into_values().collect(),
    }
}

/// Recovers the unique numerical semigroup whose gap poset is isomorphic to
/// `p`. The nd values of the deserts pin down the gap positions; the result
/// is validated by rebuilding its gap poset and testing isomorphism.
pub fn reconstruct(p: &AbstractPoset) -> Result<NumericalSemigroup> {
    if p.is_empty() {
        return Ok(NumericalSemigroup::full());
    }
    let profile = nd_profile(p);
    // Desert i has nd value v_i and size c_i; its gaps occupy the interval
    // [v_i + cum_{i-1}, v_i + cum_i - 1] with cum the running desert sizes.
    let mut gaps: BTreeSet<u64> = BTreeSet::new();
    let mut cum = 0usize;
    for desert in &profile.deserts {
        let v = profile.nd[desert[0]];
        for offset in 0..desert.len() {
            gaps.insert((v + cum + offset) as u64);
        }
        cum += desert.len();
    }
    let s = NumericalSemigroup::from_gaps(&gaps).map_err(|_| Error::NotAGapPoset)?;
    let rebuilt = GapPoset::build(&s).map_err(|_| Error::NotAGapPoset)?;
    if poset_isomorphic(p, rebuilt.base()).is_some() {
        Ok(s)
    } else {
        Err(Error::NotAGapPoset)
    }
}

/// Iterated invariant refinement over a relation with per-pair edge kinds.
/// `edge(i, j)` must return a small code; elements end up in the same class
/// only if their invariant histories agree.
fn refine_classes<F: Fn(usize, usize) -> u8>(n: usize, edge: F) -> Vec<usize> {
    let mut class: Vec<usize> = vec![0; n];
    loop {
        let mut sigs: Vec<(usize, Vec<(u8, usize)>)> = (0..n)
            .map(|i| {
                let mut neigh: Vec<(u8, usize)> =
                    (0..n).filter(|&j| j != i).map(|j| (edge(i, j), class[j])).collect();
                neigh.sort_unstable();
                (class[i], neigh)
            })
            .collect();
        let mut lookup: HashMap<(usize, Vec<(u8, usize)>), usize> = HashMap::new();
        let mut next: Vec<usize> = Vec::with_capacity(n);
        for sig in sigs.drain(..) {
            let id = lookup.len();
            let id = *lookup.entry(sig).or_insert(id);
            next.push(id);
        }
        if next == class {
            return class;
        }
        class = next;
    }
}

/// Order-isomorphism test. Returns a witness mapping index i of `p` to
/// `witness[i]` in `q` when the posets are isomorphic.
pub fn poset_isomorphic(p: &AbstractPoset, q: &AbstractPoset) -> Option<Vec<usize>> {
    if p.len() != q.len() {
        return None;
    }
    let n = p.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let edge_code = |p: &AbstractPoset, i: usize, j: usize| -> u8 {
        match (p.le(i, j), p.le(j, i)) {
            (true, _) => 1,
            (_, true) => 2,
            _ => 0,
        }
    };
    // classes must be computed jointly so ids are comparable across posets
    let joint_edge = |i: usize, j: usize| -> u8 {
        if i < n && j < n {
            edge_code(p, i, j)
        } else if i >= n && j >= n {
            edge_code(q, i - n, j - n)
        } else {
            3 // cross pairs carry no information
        }
    };
    let class = refine_classes(2 * n, joint_edge);
    let (pc, qc) = class.split_at(n);
    let mut p_hist: BTreeMap<usize, usize> = BTreeMap::new();
    let mut q_hist: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in pc {
        *p_hist.entry(c).or_default() += 1;
    }
    for &c in qc {
        *q_hist.entry(c).or_default() += 1;
    }
    if p_hist != q_hist {
        return None;
    }
    // backtracking restricted to refinement classes
    let mut witness = vec![usize::MAX; n];
    let mut used = vec![false; n];
    // match most-constrained (rarest class) elements first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (p_hist[&pc[i]], pc[i], i));
    fn assign(
        p: &AbstractPoset,
        q: &AbstractPoset,
        order: &[usize],
        pos: usize,
        pc: &[usize],
        qc: &[usize],
        witness: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let i = order[pos];
        for j in 0..q.len() {
            if used[j] || qc[j] != pc[i] {
                continue;
            }
            let ok = order[..pos].iter().all(|&k| {
                p.le(i, k) == q.le(j, witness[k]) && p.le(k, i) == q.le(witness[k], j)
            });
            if ok {
                witness[i] = j;
                used[j] = true;
                if assign(p, q, order, pos + 1, pc, qc, witness, used) {
                    return true;
                }
                witness[i] = usize::MAX;
                used[j] = false;
            }
        }
        false
    }
    if assign(p, q, &order, 0, pc, qc, &mut witness, &mut used) {
        debug_assert!((0..n)
            .all(|a| (0..n).all(|b| p.le(a, b) == q.le(witness[a], witness[b]))));
        Some(witness)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn sgp(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn running_example() -> NumericalSemigroup {
        let gaps: BTreeSet<u64> = [1, 2, 3, 4, 5, 9, 10].into_iter().collect();
        NumericalSemigroup::from_gaps(&gaps).unwrap()
    }

    fn chain(n: usize) -> AbstractPoset {
        let pairs: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        AbstractPoset::from_pairs((0..n).map(|i| i.to_string()).collect(), &pairs).unwrap()
    }

    fn antichain(n: usize) -> AbstractPoset {
        AbstractPoset::from_pairs((0..n).map(|i| i.to_string()).collect(), &[]).unwrap()
    }

    #[test]
    fn gap_poset_relations() {
        let p = GapPoset::build(&running_example()).unwrap();
        let idx = |g: u64| p.gaps().iter().position(|&h| h == g).unwrap();
        assert!(p.base().le(idx(1), idx(9))); // 9-1=8 in S
        assert!(p.base().le(idx(3), idx(9))); // 6 in S
        assert!(p.base().le(idx(4), idx(10))); // 6 in S
        assert!(!p.base().le(idx(5), idx(9)) && !p.base().le(idx(9), idx(5))); // 4 not in S

        let p = GapPoset::build(&sgp(&[3, 4, 5])).unwrap();
        assert_eq!(p.base().hasse_covers(), vec![]);
        assert_eq!(p.base().len(), 2);

        let p = GapPoset::build(&sgp(&[2, 3])).unwrap();
        assert_eq!(p.base().len(), 1);

        assert!(matches!(
            GapPoset::build(&NumericalSemigroup::full()),
            Err(Error::EmptyPoset)
        ));
    }

    #[test]
    fn nd_profile_examples() {
        let p = GapPoset::build(&running_example()).unwrap();
        let profile = nd_profile(p.base());
        // gaps 1..5 have nd 1, gaps 9 and 10 have nd 4 = |S ∩ [0,h]|
        assert_eq!(profile.nd, vec![1, 1, 1, 1, 1, 4, 4]);
        assert_eq!(profile.deserts.len(), 2);

        let single = chain(1);
        assert_eq!(nd_profile(&single).nd, vec![1]);
    }

    #[test]
    fn reconstruct_paper_example() {
        // abstract poset with nd multiset (1,1,1,1,2,3,3,6): a fence built
        // directly from the gap poset of the expected answer, relabeled
        let expected_gaps: BTreeSet<u64> = [1, 2, 3, 4, 6, 8, 9, 13].into_iter().collect();
        let s_expected = NumericalSemigroup::from_gaps(&expected_gaps).unwrap();
        assert_eq!(s_expected.small_members(), vec![0, 5, 7, 10, 11, 12]);
        let p = GapPoset::build(&s_expected).unwrap();
        let nd = nd_profile(p.base());
        let mut nds = nd.nd.clone();
        nds.sort_unstable();
        assert_eq!(nds, vec![1, 1, 1, 1, 2, 3, 3, 6]);
        // erase labels by reversing element order
        let n = p.base().len();
        let perm: Vec<usize> = (0..n).rev().collect();
        let shuffled = p.base().permuted(&perm);
        let s = reconstruct(&shuffled).unwrap();
        assert_eq!(s, s_expected);
        assert_eq!(s.multiplicity(), 5);
    }

    #[test]
    fn reconstruct_trivial_and_round_trip() {
        let empty = AbstractPoset::from_pairs(vec![], &[]).unwrap();
        assert!(reconstruct(&empty).unwrap().is_full());

        let s = sgp(&[4, 6, 9]);
        let p = GapPoset::build(&s).unwrap();
        assert_eq!(reconstruct(p.base()).unwrap(), s);
    }

    #[test]
    fn reconstruct_rejects_unrealizable() {
        // a 3-chain plus an extra incomparable bottom is no gap poset
        let p = AbstractPoset::from_pairs(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            &[(0, 1), (1, 2)],
        )
        .unwrap();
        assert_eq!(reconstruct(&p), Err(Error::NotAGapPoset));
    }

    #[test]
    fn isomorphism_examples() {
        // over-semigroup posets of ⟨3,5,7⟩ and ⟨2,7⟩ are both 4-chains
        let build_over_poset = |s: &NumericalSemigroup| {
            let over = s.over_semigroups();
            let n = over.len();
            let mut pairs = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    // containment: every member of over[i] is in over[j],
                    // i.e. no gap of over[j] is a member of over[i]
                    if over[j].gap_set().iter().all(|&g| !over[i].contains(g)) {
                        pairs.push((i, j));
                    }
                }
            }
            AbstractPoset::from_pairs((0..n).map(|i| i.to_string()).collect(), &pairs).unwrap()
        };
        let a = build_over_poset(&sgp(&[3, 5, 7]));
        let b = build_over_poset(&sgp(&[2, 7]));
        assert!(poset_isomorphic(&a, &b).is_some());

        let gp1 = GapPoset::build(&sgp(&[3, 4, 5])).unwrap(); // antichain {1,2}
        let gp2 = GapPoset::build(&sgp(&[2, 5])).unwrap(); // chain 1 <= 3
        assert!(poset_isomorphic(gp1.base(), gp2.base()).is_none());

        let p = gp2.base();
        let w = poset_isomorphic(p, p).unwrap();
        assert_eq!(w, vec![0, 1]);
    }

    #[test]
    fn isomorphism_needs_backtracking_on_regular_posets() {
        // two 6-element posets where every node has the same degree profile
        // locally: C3 x C2 grid vs a crown-like order; refinement alone can
        // stall, the search must still decide correctly
        let grid = AbstractPoset::from_pairs(
            (0..6).map(|i| i.to_string()).collect(),
            &[(0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        let crown = AbstractPoset::from_pairs(
            (0..6).map(|i| i.to_string()).collect(),
            &[(0, 4), (0, 5), (1, 3), (1, 5), (2, 3), (2, 4)],
        )
        .unwrap();
        assert!(poset_isomorphic(&grid, &grid).is_some());
        assert!(poset_isomorphic(&grid, &crown).is_none());
        // permuted copies stay isomorphic
        let perm = vec![5, 3, 4, 0, 2, 1];
        assert!(poset_isomorphic(&crown, &crown.permuted(&perm)).is_some());
    }

    #[test]
    fn hasse_and_components() {
        assert_eq!(chain(3).hasse_covers().len(), 2);
        assert_eq!(antichain(4).hasse_covers().len(), 0);
        let p = GapPoset::build(&running_example()).unwrap();
        assert_eq!(p.component_count(), 2);
        assert_eq!(p.semigroup().type_count(), 3);
        let p = GapPoset::build(&sgp(&[2, 3])).unwrap();
        assert_eq!(p.component_count(), 1);
    }

    #[test]
    fn invalid_relations_rejected() {
        // 2-cycle
        let r = AbstractPoset::from_pairs(vec!["a".into(), "b".into()], &[(0, 1), (1, 0)]);
        assert!(matches!(r, Err(Error::NotAPartialOrder(_))));
        // matrix of wrong size
        assert!(AbstractPoset::new(vec!["a".into()], vec![]).is_err());
    }

    #[test]
    fn minimals_and_multiplicity() {
        for s in NumericalSemigroup::enumerate_by_genus(5) {
            if s.is_full() {
                continue;
            }
            let p = GapPoset::build(&s).unwrap();
            assert_eq!(
                p.base().minimals().len() + 1,
                s.multiplicity() as usize,
                "minimals vs multiplicity for {s}"
            );
        }
    }
}
