//! The finite commutative monoid of normalized ideals under addition:
//! Cayley table, the divisibility order, quarks, irreducibles, idempotents,
//! the C_E and T-down substructures, isomorphism testing and recovery of
//! the semigroup from an abstract Cayley table.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::ideal::{self, NormalizedIdeal};
use crate::semigroup::NumericalSemigroup;

/// A finite commutative monoid given only by its Cayley table.
/// The identity is discovered, not designated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractMonoid {
    n: usize,
    table: Vec<usize>, // row-major n*n
    identity: usize,
}

impl AbstractMonoid {
    /// Validates closure, commutativity, associativity and the existence of
    /// an identity, naming the first violating entry or triple.
    pub fn new(table_rows: &[Vec<usize>]) -> Result<Self> {
        let n = table_rows.len();
        if n == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        let mut table = vec![0usize; n * n];
        for (i, row) in table_rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::MalformedTable(format!(
                        "entry ({i}, {j}) = {v} out of range"
                    )));
                }
                table[i * n + j] = v;
            }
        }
        let add = |a: usize, b: usize| table[a * n + b];
        for a in 0..n {
            for b in a + 1..n {
                if add(a, b) != add(b, a) {
                    return Err(Error::MalformedTable(format!(
                        "not commutative at ({a}, {b}): {} != {}",
                        add(a, b),
                        add(b, a)
                    )));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if add(add(a, b), c) != add(a, add(b, c)) {
                        return Err(Error::MalformedTable(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| add(e, a) == a))
            .ok_or_else(|| Error::MalformedTable("no identity element".into()))?;
        Ok(AbstractMonoid { n, table, identity })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|i| self.table[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    /// Divisibility: a ⪯ b iff a + c = b for some c.
    pub fn preceq(&self, a: usize, b: usize) -> bool {
        (0..self.n).any(|c| self.add(a, c) == b)
    }

    /// Elements with x + x = x.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.add(x, x) == x).collect()
    }

    /// Non-identity elements with no proper divisor other than the identity:
    /// no j outside {x, identity} divides x.
    pub fn quarks(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| x != self.identity)
            .filter(|&x| {
                (0..self.n)
                    .filter(|&j| j != x && j != self.identity)
                    .all(|j| !self.preceq(j, x))
            })
            .collect()
    }

    /// Non-identity elements that are not a sum of two elements both
    /// different from themselves.
    pub fn irreducibles(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| x != self.identity)
            .filter(|&x| {
                !(0..self.n).any(|j| {
                    j != x && (0..self.n).any(|k| k != x && self.add(j, k) == x)
                })
            })
            .collect()
    }

    /// Closure of a set of elements under the table, starting from the
    /// identity.
    pub fn generated_by(&self, gens: &[usize]) -> Vec<usize> {
        let mut in_set = vec![false; self.n];
        in_set[self.identity] = true;
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.add(x, g);
                if !in_set[y] {
                    in_set[y] = true;
                    frontier.push(y);
                }
            }
        }
        (0..self.n).filter(|&x| in_set[x]).collect()
    }

    /// Sub-table on a subset of elements, re-indexed in the given order.
    /// The subset must be closed under the table restricted to it only if
    /// it really is a submonoid of itself; closure is validated.
    fn sub_table(&self, members: &[usize]) -> Result<AbstractMonoid> {
        let index: HashMap<usize, usize> =
            members.iter().enumerate().map(|(k, &x)| (x, k)).collect();
        let rows: Vec<Vec<usize>> = members
            .iter()
            .map(|&a| {
                members
                    .iter()
                    .map(|&b| {
                        index.get(&self.add(a, b)).copied().ok_or_else(|| {
                            Error::MalformedTable(format!(
                                "subset not closed: {a} + {b} = {} escapes",
                                self.add(a, b)
                            ))
                        })
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        AbstractMonoid::new(&rows)
    }

    /// C_E = { x : x + E = x } for an idempotent E; a monoid with identity E.
    /// Returns the sub-monoid together with the member indices in the parent.
    pub fn sub_c_e(&self, e: usize) -> Result<(AbstractMonoid, Vec<usize>)> {
        if self.add(e, e) != e {
            return Err(Error::NotIdempotent(e));
        }
        let members: Vec<usize> = (0..self.n).filter(|&x| self.add(x, e) == x).collect();
        Ok((self.sub_table(&members)?, members))
    }

    /// T-down = { x : x + T = T } for an idempotent T; a submonoid whose
    /// identity is the identity of the parent.
    pub fn sub_t_down(&self, t: usize) -> Result<(AbstractMonoid, Vec<usize>)> {
        if self.add(t, t) != t {
            return Err(Error::NotIdempotent(t));
        }
        let members: Vec<usize> = (0..self.n).filter(|&x| self.add(x, t) == t).collect();
        Ok((self.sub_table(&members)?, members))
    }

    /// The monoid on T2-down ∩ C_T for nested idempotents T + T2 = T2;
    /// its identity is T.
    pub fn slice(&self, t: usize, t2: usize) -> Result<(AbstractMonoid, Vec<usize>)> {
        if self.add(t, t) != t {
            return Err(Error::NotIdempotent(t));
        }
        if self.add(t2, t2) != t2 {
            return Err(Error::NotIdempotent(t2));
        }
        if self.add(t, t2) != t2 {
            return Err(Error::NotNested);
        }
        let members: Vec<usize> = (0..self.n)
            .filter(|&x| self.add(x, t2) == t2 && self.add(x, t) == x)
            .collect();
        Ok((self.sub_table(&members)?, members))
    }

    /// Length of the longest strictly ascending divisibility chain, minus
    /// one. For an ideal class monoid this is the genus of the semigroup.
    pub fn genus_estimate(&self) -> usize {
        let n = self.n;
        // strict order: a ≺ b without b ⪯ a; on class monoids ⪯ is a partial
        // order, but longest-path on the condensation stays safe in general
        let mut strict = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                strict[a * n + b] = a != b && self.preceq(a, b) && !self.preceq(b, a);
            }
        }
        fn h(x: usize, n: usize, strict: &[bool], memo: &mut [usize]) -> usize {
            if memo[x] != usize::MAX {
                return memo[x];
            }
            memo[x] = 0; // cycle guard; a strict order has no cycles
            let best = (0..n)
                .filter(|&y| strict[y * n + x])
                .map(|y| h(y, n, strict, memo) + 1)
                .max()
                .unwrap_or(0);
            memo[x] = best;
            best
        }
        let mut memo = vec![usize::MAX; n];
        (0..n).map(|x| h(x, n, &strict, &mut memo)).max().unwrap_or(0)
    }

    /// Node count of the longest strictly ascending divisibility chain
    /// (the height of the Hasse diagram), one more than the genus.
    pub fn preceq_height(&self) -> usize {
        self.genus_estimate() + 1
    }
}

/// The ideal class monoid of a concrete semigroup: normalized ideals plus
/// the full addition table. Element 0 is the identity S.
#[derive(Debug, Clone)]
pub struct IdealClassMonoid {
    semigroup: NumericalSemigroup,
    elements: Vec<NormalizedIdeal>,
    abstract_monoid: AbstractMonoid,
}

impl IdealClassMonoid {
    pub fn build(s: &NumericalSemigroup) -> Result<IdealClassMonoid> {
        Self::build_limited(s, usize::MAX)
    }

    pub fn build_limited(s: &NumericalSemigroup, cap: usize) -> Result<IdealClassMonoid> {
        let elements = ideal::enumerate_normalized_ideals_limited(s, cap)?;
        let index: HashMap<Vec<u64>, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.small_elements(), i))
            .collect();
        let n = elements.len();
        let mut rows = vec![vec![0usize; n]; n];
        for i in 0..n {
            for j in i..n {
                let sum = elements[i].add(&elements[j]).unwrap();
                let k = index[&sum.small_elements()];
                rows[i][j] = k;
                rows[j][i] = k;
            }
        }
        Ok(IdealClassMonoid {
            semigroup: s.clone(),
            elements,
            abstract_monoid: AbstractMonoid::new(&rows)?,
        })
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn elements(&self) -> &[NormalizedIdeal] {
        &self.elements
    }

    pub fn abstract_monoid(&self) -> &AbstractMonoid {
        &self.abstract_monoid
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The idempotents realized as semigroups; exactly the over-semigroups
    /// of the ambient semigroup.
    pub fn as_over_semigroups(&self) -> Result<Vec<NumericalSemigroup>> {
        self.abstract_monoid
            .idempotents()
            .into_iter()
            .map(|i| self.elements[i].to_semigroup())
            .collect()
    }

    /// Idempotent quarks; they correspond 1:1 with the unitary extensions.
    pub fn unitary_extension_elements(&self) -> Vec<usize> {
        let idem = self.abstract_monoid.idempotents();
        self.abstract_monoid
            .quarks()
            .into_iter()
            .filter(|q| idem.contains(q))
            .collect()
    }
}

/// Per-element invariant refinement, shared across both tables so class ids
/// are comparable: start from (idempotent, quark, irreducible, identity)
/// flags and iterate with the multiset of (partner class, sum class) pairs.
fn monoid_classes(a: &AbstractMonoid, b: &AbstractMonoid) -> (Vec<usize>, Vec<usize>) {
    let n = a.len();
    debug_assert_eq!(n, b.len());
    let flags = |m: &AbstractMonoid| -> Vec<(bool, bool, bool, bool)> {
        let quarks = m.quarks();
        let irr = m.irreducibles();
        (0..m.len())
            .map(|x| {
                (
                    m.add(x, x) == x,
                    quarks.contains(&x),
                    irr.contains(&x),
                    x == m.identity(),
                )
            })
            .collect()
    };
    let mut sig0: Vec<(bool, bool, bool, bool)> = flags(a);
    sig0.extend(flags(b));
    let mut lookup: BTreeMap<(bool, bool, bool, bool), usize> = BTreeMap::new();
    let mut class: Vec<usize> = sig0
        .into_iter()
        .map(|s| {
            let next = lookup.len();
            *lookup.entry(s).or_insert(next)
        })
        .collect();
    loop {
        let sig = |m: &AbstractMonoid, off: usize, x: usize, class: &[usize]| {
            let mut pairs: Vec<(usize, usize)> = (0..n)
                .map(|y| (class[off + y], class[off + m.add(x, y)]))
                .collect();
            pairs.sort_unstable();
            (class[off + x], pairs)
        };
        let mut sigs: Vec<(usize, Vec<(usize, usize)>)> = Vec::with_capacity(2 * n);
        for x in 0..n {
            sigs.push(sig(a, 0, x, &class));
        }
        for x in 0..n {
            sigs.push(sig(b, n, x, &class));
        }
        let mut lookup: HashMap<(usize, Vec<(usize, usize)>), usize> = HashMap::new();
        let mut next: Vec<usize> = Vec::with_capacity(2 * n);
        for s in sigs {
            let id = lookup.len();
            next.push(*lookup.entry(s).or_insert(id));
        }
        if next == class {
            let (ca, cb) = class.split_at(n);
            return (ca.to_vec(), cb.to_vec());
        }
        class = next;
    }
}

/// Table-preserving bijection test. Returns a witness mapping element x of
/// `a` to `witness[x]` of `b` when the monoids are isomorphic.
pub fn monoid_isomorphic(a: &AbstractMonoid, b: &AbstractMonoid) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let n = a.len();
    let (ca, cb) = monoid_classes(a, b);
    let mut hist_a: BTreeMap<usize, usize> = BTreeMap::new();
    let mut hist_b: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &ca {
        *hist_a.entry(c).or_default() += 1;
    }
    for &c in &cb {
        *hist_b.entry(c).or_default() += 1;
    }
    if hist_a != hist_b {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (hist_a[&ca[x]], ca[x], x));
    let mut witness = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn assign(
        a: &AbstractMonoid,
        b: &AbstractMonoid,
        order: &[usize],
        pos: usize,
        ca: &[usize],
        cb: &[usize],
        witness: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if pos == order.len() {
            // witness is total; verify every pair (partial checks below only
            // cover pairs of already-assigned elements whose sum is assigned)
            let n = a.len();
            return (0..n).all(|x| {
                (0..n).all(|y| witness[a.add(x, y)] == b.add(witness[x], witness[y]))
            });
        }
        let x = order[pos];
        for y in 0..b.len() {
            if used[y] || cb[y] != ca[x] {
                continue;
            }
            let consistent = order[..pos].iter().all(|&z| {
                let s = a.add(x, z);
                witness[s] == usize::MAX || b.add(y, witness[z]) == witness[s]
            });
            if consistent {
                witness[x] = y;
                used[y] = true;
                if assign(a, b, order, pos + 1, ca, cb, witness, used) {
                    return true;
                }
                witness[x] = usize::MAX;
                used[y] = false;
            }
        }
        false
    }

    if assign(a, b, &order, 0, &ca, &cb, &mut witness, &mut used) {
        Some(witness)
    } else {
        None
    }
}

/// Recovers the unique semigroup whose ideal class monoid is isomorphic to
/// the given table, by induction on the genus: recurse into the C_E
/// submonoids of the idempotent quarks to obtain the unitary extensions,
/// then intersect them (or, for irreducible semigroups, strip the Frobenius
/// number back off). The result is validated against the input table.
pub fn recover_from_abstract_monoid(m: &AbstractMonoid) -> Result<NumericalSemigroup> {
    let s = recover_inner(m)?;
    let rebuilt = IdealClassMonoid::build(&s).map_err(|_| Error::NotAClassMonoid)?;
    if monoid_isomorphic(rebuilt.abstract_monoid(), m).is_some() {
        Ok(s)
    } else {
        Err(Error::NotAClassMonoid)
    }
}

fn recover_inner(m: &AbstractMonoid) -> Result<NumericalSemigroup> {
    if m.len() == 1 {
        return Ok(NumericalSemigroup::full());
    }
    let genus = m.genus_estimate();
    let quarks = m.quarks();
    let idem = m.idempotents();
    let idempotent_quarks: Vec<usize> = quarks
        .iter()
        .copied()
        .filter(|q| idem.contains(q))
        .collect();
    if idempotent_quarks.is_empty() {
        return Err(Error::NotAClassMonoid);
    }
    let mut extensions = Vec::new();
    for &e in &idempotent_quarks {
        let (sub, _) = m.sub_c_e(e).map_err(|_| Error::NotAClassMonoid)?;
        let o = recover_inner(&sub)?;
        if o.genus() + 1 != genus as u64 {
            return Err(Error::NotAClassMonoid);
        }
        extensions.push(o);
    }
    if extensions.len() >= 2 {
        let mut iter = extensions.into_iter();
        let first = iter.next().unwrap();
        return Ok(iter.fold(first, |acc, t| acc.intersect(&t)));
    }
    // a single idempotent quark means the semigroup is irreducible; the
    // total quark count separates symmetric (1) from pseudo-symmetric (2)
    let frobenius = match quarks.len() {
        1 => 2 * genus as u64 - 1,
        2 => 2 * genus as u64 - 2,
        _ => return Err(Error::NotAClassMonoid),
    };
    let o = extensions.pop().unwrap();
    if !o.contains(frobenius) {
        return Err(Error::NotAClassMonoid);
    }
    let mut gaps: std::collections::BTreeSet<u64> = o.gap_set().into_iter().collect();
    gaps.insert(frobenius);
    NumericalSemigroup::from_gaps(&gaps).map_err(|_| Error::NotAClassMonoid)
}
