//! Finite posets stored as dense bitset rows.
//!
//! Elements are the indices `0..n`. Row `up[x]` holds the principal filter
//! `↑x` and row `down[x]` the principal ideal `↓x`, so most order-theoretic
//! queries reduce to a handful of mask operations.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_ELEMENTS};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    n: usize,
    up: Vec<Subset>,
    down: Vec<Subset>,
    labels: Option<Vec<String>>,
    join_semilattice: bool,
}

impl FinitePoset {
    /// Builds a poset from a full order predicate and validates the axioms.
    pub fn from_leq(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        check_size(n)?;
        let mut up = vec![Subset::EMPTY; n];
        for (x, row) in up.iter_mut().enumerate() {
            for y in 0..n {
                if leq(x, y) {
                    row.insert(y);
                }
            }
        }
        for (x, row) in up.iter().enumerate() {
            if !row.contains(x) {
                return Err(Error::NotReflexive(x));
            }
        }
        for x in 0..n {
            for y in up[x] {
                if y != x && up[y].contains(x) {
                    return Err(Error::Cycle(vec![x.to_string(), y.to_string(), x.to_string()]));
                }
                if !up[y].is_subset(up[x]) {
                    let z = (up[y] - up[x]).first().unwrap();
                    return Err(Error::NotTransitive(x, y, z));
                }
            }
        }
        Ok(Self::from_rows(up, None))
    }

    /// Builds the reflexive-transitive closure of `pairs` (each `(x, y)`
    /// meaning `x <= y`) on `n` elements.
    pub fn from_relation(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::close(n, pairs, None)
    }

    /// Like [`FinitePoset::from_relation`] with element names attached.
    pub fn from_labeled_relation(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        check_labels(&labels, n)?;
        Self::close(n, pairs, Some(labels))
    }

    fn close(n: usize, pairs: &[(usize, usize)], labels: Option<Vec<String>>) -> Result<Self> {
        check_size(n)?;
        let mut up: Vec<Subset> = (0..n).map(Subset::singleton).collect();
        for &(x, y) in pairs {
            for i in [x, y] {
                if i >= n {
                    return Err(Error::IndexOutOfRange { index: i, size: n });
                }
            }
            up[x].insert(y);
        }
        for k in 0..n {
            let row = up[k];
            for r in up.iter_mut() {
                if r.contains(k) {
                    *r = *r | row;
                }
            }
        }
        for x in 0..n {
            for y in up[x] {
                if y != x && up[y].contains(x) {
                    let name = |i: usize| match &labels {
                        Some(l) => l[i].clone(),
                        None => i.to_string(),
                    };
                    let mut cycle: Vec<String> = edge_path(n, pairs, x, y)
                        .into_iter()
                        .chain(edge_path(n, pairs, y, x).into_iter().skip(1))
                        .map(name)
                        .collect();
                    if cycle.is_empty() {
                        cycle = vec![name(x), name(y), name(x)];
                    }
                    return Err(Error::Cycle(cycle));
                }
            }
        }
        Ok(Self::from_rows(up, labels))
    }

    fn from_rows(up: Vec<Subset>, labels: Option<Vec<String>>) -> Self {
        let n = up.len();
        let mut down = vec![Subset::EMPTY; n];
        for (x, row) in up.iter().enumerate() {
            for y in *row {
                down[y].insert(x);
            }
        }
        let mut p = FinitePoset {
            n,
            up,
            down,
            labels,
            join_semilattice: false,
        };
        p.join_semilattice = (0..n).all(|x| (x + 1..n).all(|y| p.join(x, y).is_some()));
        p
    }

    /// Attaches element names; they must be distinct and one per element.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        check_labels(&labels, self.n)?;
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn chain(n: usize) -> Self {
        Self::from_leq(n, |x, y| x <= y).expect("chain")
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_leq(n, |x, y| x == y).expect("antichain")
    }

    /// The four-element lattice `⊥ < a, b < ⊤`.
    pub fn diamond() -> Self {
        named(&["⊥", "a", "b", "⊤"], &[(0, 1), (0, 2), (1, 3), (2, 3)])
    }

    /// The five-element modular, non-distributive lattice.
    pub fn m3() -> Self {
        named(
            &["⊥", "a", "b", "c", "⊤"],
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        )
    }

    /// The five-element non-modular lattice `⊥ < a < c < ⊤`, `⊥ < b < ⊤`.
    pub fn n5() -> Self {
        named(&["⊥", "a", "b", "c", "⊤"], &[(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)])
    }

    /// Seven elements `a, b, c, α, β, γ, z` with `a, b <= α`, `b, c <= β`,
    /// `c, a <= γ`, `a, b, c <= z` and nothing else. No two of `a, b, c`
    /// have a join, yet `z` is the join of all three.
    pub fn seven_element() -> Self {
        named(
            &["a", "b", "c", "α", "β", "γ", "z"],
            &[(0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5), (0, 6), (1, 6), (2, 6)],
        )
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn all(&self) -> Subset {
        Subset::full(self.n)
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// `↑x`.
    #[inline]
    pub fn up(&self, x: usize) -> Subset {
        self.up[x]
    }

    /// `↓x`.
    #[inline]
    pub fn down(&self, x: usize) -> Subset {
        self.down[x]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(l) => l.iter().position(|s| s == label),
            None => label.parse().ok().filter(|&i| i < self.n),
        }
    }

    pub fn format_subset(&self, a: Subset) -> String {
        let names: Vec<String> = a.iter().map(|x| self.label(x)).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Same elements and same order, ignoring labels.
    pub fn same_order(&self, other: &FinitePoset) -> bool {
        self.n == other.n && self.up == other.up
    }

    pub fn check_subset(&self, a: Subset) -> Result<()> {
        if a.bound() > self.n {
            return Err(Error::IndexOutOfRange {
                index: a.bound() - 1,
                size: self.n,
            });
        }
        Ok(())
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x >= self.n {
            return Err(Error::IndexOutOfRange { index: x, size: self.n });
        }
        Ok(())
    }

    /// `↑a`, checked against the poset size.
    pub fn upper_closure(&self, a: Subset) -> Result<Subset> {
        self.check_subset(a)?;
        Ok(self.up_set(a))
    }

    /// `↓a`, checked against the poset size.
    pub fn lower_closure(&self, a: Subset) -> Result<Subset> {
        self.check_subset(a)?;
        Ok(self.down_set(a))
    }

    pub(crate) fn up_set(&self, a: Subset) -> Subset {
        a.iter().fold(Subset::EMPTY, |acc, x| acc | self.up[x])
    }

    pub(crate) fn down_set(&self, a: Subset) -> Subset {
        a.iter().fold(Subset::EMPTY, |acc, x| acc | self.down[x])
    }

    pub fn upper_bounds(&self, a: Subset) -> Subset {
        a.iter().fold(self.all(), |acc, x| acc & self.up[x])
    }

    pub fn lower_bounds(&self, a: Subset) -> Subset {
        a.iter().fold(self.all(), |acc, x| acc & self.down[x])
    }

    /// Least element of `a`, if any.
    pub fn minimum(&self, a: Subset) -> Option<usize> {
        a.iter().find(|&x| a.is_subset(self.up[x]))
    }

    /// Greatest element of `a`, if any.
    pub fn maximum(&self, a: Subset) -> Option<usize> {
        a.iter().find(|&x| a.is_subset(self.down[x]))
    }

    pub fn minimal_elements(&self, a: Subset) -> Subset {
        a.iter().filter(|&x| (self.down[x] & a).len() == 1).collect()
    }

    pub fn maximal_elements(&self, a: Subset) -> Subset {
        a.iter().filter(|&x| (self.up[x] & a).len() == 1).collect()
    }

    /// Least upper bound of `a`. The empty set has the bottom as its least
    /// upper bound when one exists.
    pub fn lub(&self, a: Subset) -> Option<usize> {
        self.minimum(self.upper_bounds(a))
    }

    /// Greatest lower bound of `a`; `glb(∅)` is the top, if any.
    pub fn glb(&self, a: Subset) -> Option<usize> {
        self.maximum(self.lower_bounds(a))
    }

    /// Supremum of a nonempty subset, or `None` when it does not exist.
    pub fn sup_of(&self, a: Subset) -> Result<Option<usize>> {
        self.check_subset(a)?;
        if a.is_empty() {
            return Err(Error::EmptySubset);
        }
        Ok(self.lub(a))
    }

    /// Infimum of a nonempty subset, or `None` when it does not exist.
    pub fn inf_of(&self, a: Subset) -> Result<Option<usize>> {
        self.check_subset(a)?;
        if a.is_empty() {
            return Err(Error::EmptySubset);
        }
        Ok(self.glb(a))
    }

    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        self.minimum(self.up[x] & self.up[y])
    }

    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        self.maximum(self.down[x] & self.down[y])
    }

    pub fn top(&self) -> Option<usize> {
        self.maximum(self.all())
    }

    pub fn bottom(&self) -> Option<usize> {
        self.minimum(self.all())
    }

    pub fn is_upper_set(&self, a: Subset) -> bool {
        a.bound() <= self.n && self.up_set(a) == a
    }

    pub fn is_lower_set(&self, a: Subset) -> bool {
        a.bound() <= self.n && self.down_set(a) == a
    }

    /// Every pair of elements has a join.
    pub fn is_join_semilattice(&self) -> bool {
        self.join_semilattice
    }

    pub fn is_meet_semilattice(&self) -> bool {
        (0..self.n).all(|x| (x + 1..self.n).all(|y| self.meet(x, y).is_some()))
    }

    pub fn is_lattice(&self) -> bool {
        self.join_semilattice && self.is_meet_semilattice()
    }

    /// Every subset, the empty one included, has a supremum.
    pub fn is_complete_lattice(&self) -> bool {
        self.is_lattice() && self.top().is_some() && self.bottom().is_some()
    }

    /// An ideal is empty, or a lower set containing the supremum of each of
    /// its nonempty finite subsets whenever that supremum exists in the poset.
    /// Ideals need not be directed.
    pub fn is_ideal(&self, a: Subset) -> bool {
        if a.is_empty() {
            return true;
        }
        if !self.is_lower_set(a) {
            return false;
        }
        let members: Vec<usize> = a.iter().collect();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                if let Some(j) = self.join(x, y) {
                    if !a.contains(j) {
                        return false;
                    }
                }
            }
        }
        if self.join_semilattice {
            // every finite join is an iterated binary one
            return true;
        }
        a.subsets()
            .filter(|s| s.len() >= 3)
            .all(|s| self.lub(s).is_none_or(|j| a.contains(j)))
    }

    /// All ideals, in increasing bitmask order of their complements' walk.
    pub fn ideals(&self) -> Vec<Subset> {
        let mut out = Vec::new();
        self.for_each_lower_set(|s| {
            if self.is_ideal(s) {
                out.push(s);
            }
        });
        out
    }

    /// Calls `f` once for every upper set, including `∅` and the whole poset.
    pub fn for_each_upper_set(&self, mut f: impl FnMut(Subset)) {
        // tops first: x < y implies |↑y| < |↑x|
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&x| (self.up[x].len(), x));
        self.upper_sets_rec(&order, 0, Subset::EMPTY, &mut f);
    }

    fn upper_sets_rec(&self, order: &[usize], i: usize, cur: Subset, f: &mut impl FnMut(Subset)) {
        if i == order.len() {
            f(cur);
            return;
        }
        let x = order[i];
        self.upper_sets_rec(order, i + 1, cur, f);
        if (self.up[x] - Subset::singleton(x)).is_subset(cur) {
            self.upper_sets_rec(order, i + 1, cur.with(x), f);
        }
    }

    pub fn for_each_lower_set(&self, mut f: impl FnMut(Subset)) {
        let all = self.all();
        self.for_each_upper_set(|u| f(all - u));
    }

    pub fn upper_sets(&self) -> Vec<Subset> {
        let mut out = Vec::new();
        self.for_each_upper_set(|s| out.push(s));
        out.sort();
        out
    }

    pub fn lower_sets(&self) -> Vec<Subset> {
        let mut out = Vec::new();
        self.for_each_lower_set(|s| out.push(s));
        out.sort();
        out
    }

    /// The subposet on `members`, with the induced order. Returns the
    /// subposet and, for each of its elements, the original index.
    pub fn induced(&self, members: Subset) -> (FinitePoset, Vec<usize>) {
        let index: Vec<usize> = members.iter().collect();
        let up = index
            .iter()
            .map(|&x| {
                index
                    .iter()
                    .enumerate()
                    .filter(|&(_, &y)| self.leq(x, y))
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| index.iter().map(|&x| l[x].clone()).collect());
        (Self::from_rows(up, labels), index)
    }

    /// The same elements with the reversed order.
    pub fn dual(&self) -> FinitePoset {
        Self::from_rows(self.down.clone(), self.labels.clone())
    }

    /// Cover pairs `(x, y)`: `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in self.up[x] {
                if y != x && (self.up[x] & self.down[y]).len() == 2 {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Elements listed so that `x < y` puts `x` first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&x| (self.down[x].len(), x));
        order
    }

    pub fn classify(&self) -> PosetProfile {
        let is_join_semilattice = self.join_semilattice;
        let is_meet_semilattice = self.is_meet_semilattice();
        let is_lattice = is_join_semilattice && is_meet_semilattice;
        let is_complete_lattice = is_lattice && self.top().is_some() && self.bottom().is_some();
        let (is_distributive, is_meet_continuous) = if is_lattice {
            let t = LatticeTables::new(self);
            (t.is_distributive(), self.meet_continuous(&t))
        } else {
            (false, false)
        };
        PosetProfile {
            is_join_semilattice,
            is_meet_semilattice,
            is_lattice,
            is_complete_lattice,
            is_distributive,
            is_meet_continuous,
        }
    }

    /// `x ∧ ⋁I = ⋁(↓x ∩ I)` for every ideal `I` with a supremum and every `x`.
    fn meet_continuous(&self, t: &LatticeTables) -> bool {
        let mut ok = true;
        self.for_each_lower_set(|low| {
            if !ok {
                return;
            }
            // in a lattice, closure under binary joins makes a lower set an ideal
            let closed = low.iter().all(|x| low.iter().all(|y| low.contains(t.join[x][y])));
            if !closed {
                return;
            }
            let Some(s) = self.lub(low) else { return };
            for x in 0..self.n {
                if Some(t.meet[x][s]) != self.lub(self.down[x] & low) {
                    ok = false;
                    return;
                }
            }
        });
        ok
    }
}

impl fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .covers()
            .into_iter()
            .map(|(x, y)| format!("{}<{}", self.label(x), self.label(y)))
            .collect();
        write!(f, "FinitePoset(n={}; {})", self.n, covers.join(" "))
    }
}

/// Join and meet tables of a lattice.
pub(crate) struct LatticeTables {
    pub join: Vec<Vec<usize>>,
    pub meet: Vec<Vec<usize>>,
}

impl LatticeTables {
    pub fn new(p: &FinitePoset) -> Self {
        let n = p.len();
        let mut join = vec![vec![0; n]; n];
        let mut meet = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                join[x][y] = p.join(x, y).expect("lattice join");
                meet[x][y] = p.meet(x, y).expect("lattice meet");
            }
        }
        LatticeTables { join, meet }
    }

    pub fn is_distributive(&self) -> bool {
        let n = self.join.len();
        (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| self.meet[x][self.join[y][z]] == self.join[self.meet[x][y]][self.meet[x][z]]))
        })
    }
}

/// Lattice-theoretic flags of a poset, each computed from its definition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct PosetProfile {
    pub is_join_semilattice: bool,
    pub is_meet_semilattice: bool,
    pub is_lattice: bool,
    pub is_complete_lattice: bool,
    pub is_distributive: bool,
    pub is_meet_continuous: bool,
}

/// A poset `E` embedded in a finite complete lattice `Ē` so that existing
/// suprema and infima of `E` are kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderExtension {
    base: std::sync::Arc<FinitePoset>,
    complete: std::sync::Arc<FinitePoset>,
    embed: Vec<usize>,
}

/// Largest base for which [`OrderExtension::new`] checks every subset.
pub const EXTENSION_CHECK_CAP: usize = 16;

impl OrderExtension {
    pub fn new(
        base: std::sync::Arc<FinitePoset>,
        complete: std::sync::Arc<FinitePoset>,
        embed: Vec<usize>,
    ) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidExtension(m));
        if embed.len() != base.len() {
            return bad(format!(
                "embedding has {} entries for {} elements",
                embed.len(),
                base.len()
            ));
        }
        if base.len() > EXTENSION_CHECK_CAP {
            return Err(Error::CapExceeded {
                what: "extension base",
                size: base.len(),
                cap: EXTENSION_CHECK_CAP,
            });
        }
        for &e in &embed {
            complete.check_element(e)?;
        }
        if !complete.is_complete_lattice() {
            return bad("the ambient poset is not a complete lattice".into());
        }
        let image: Subset = embed.iter().copied().collect();
        if image.len() != embed.len() {
            return bad("embedding is not injective".into());
        }
        for x in 0..base.len() {
            for y in 0..base.len() {
                if base.leq(x, y) != complete.leq(embed[x], embed[y]) {
                    return bad(format!(
                        "embedding does not reflect the order at ({}, {})",
                        base.label(x),
                        base.label(y)
                    ));
                }
            }
        }
        let ext = OrderExtension { base, complete, embed };
        for a in ext.base.all().subsets() {
            let pushed = ext.push(a);
            if let Some(s) = ext.base.lub(a) {
                if ext.complete.lub(pushed) != Some(ext.embed[s]) {
                    return bad(format!("supremum of {} is not kept", ext.base.format_subset(a)));
                }
            }
            if let Some(s) = ext.base.glb(a) {
                if ext.complete.glb(pushed) != Some(ext.embed[s]) {
                    return bad(format!("infimum of {} is not kept", ext.base.format_subset(a)));
                }
            }
        }
        Ok(ext)
    }

    pub fn base(&self) -> &FinitePoset {
        &self.base
    }

    pub fn complete(&self) -> &FinitePoset {
        &self.complete
    }

    pub fn base_arc(&self) -> &std::sync::Arc<FinitePoset> {
        &self.base
    }

    pub fn complete_arc(&self) -> &std::sync::Arc<FinitePoset> {
        &self.complete
    }

    pub fn embed(&self, g: usize) -> usize {
        self.embed[g]
    }

    pub fn embedding(&self) -> &[usize] {
        &self.embed
    }

    /// Image of `E` in `Ē`.
    pub fn image(&self) -> Subset {
        self.embed.iter().copied().collect()
    }

    /// Image of a subset of `E`.
    pub fn push(&self, a: Subset) -> Subset {
        a.iter().map(|g| self.embed[g]).collect()
    }

    /// Elements of `E` whose image lies in `s ⊆ Ē`.
    pub fn pull(&self, s: Subset) -> Subset {
        (0..self.embed.len()).filter(|&g| s.contains(self.embed[g])).collect()
    }

    /// Index in `E` of an element of `Ē`, if it is in the image.
    pub fn preimage(&self, a: usize) -> Option<usize> {
        self.embed.iter().position(|&e| e == a)
    }

    /// Some `ā ∈ Ē` with `a = ↓ā ∩ E`, if any.
    pub fn principal_witness(&self, a: Subset) -> Option<usize> {
        (0..self.complete.len()).find(|&x| self.pull(self.complete.down(x)) == a)
    }

    /// Whether the ideal `a` of `E` has the form `↓ā ∩ E`.
    pub fn is_principal_ideal_on(&self, a: Subset) -> Result<bool> {
        self.base.check_subset(a)?;
        if !self.base.is_ideal(a) {
            return Err(Error::NotIdeal(a));
        }
        Ok(self.principal_witness(a).is_some())
    }
}

/// Dedekind–MacNeille completion: the cuts of `p` (intersections of
/// principal ideals), ordered by inclusion, with `x ↦ ↓x`.
pub fn dm_completion(p: &FinitePoset) -> OrderExtension {
    let mut cuts: Vec<Subset> = vec![p.all()];
    for x in 0..p.len() {
        push_unique(&mut cuts, p.down(x));
    }
    let mut i = 0;
    while i < cuts.len() {
        for j in 0..i {
            let c = cuts[i] & cuts[j];
            push_unique(&mut cuts, c);
        }
        i += 1;
    }
    cuts.sort_by_key(|c| (c.len(), *c));
    assert!(cuts.len() <= MAX_ELEMENTS, "completion exceeds the element limit");
    let embed: Vec<usize> = (0..p.len())
        .map(|x| cuts.iter().position(|&c| c == p.down(x)).unwrap())
        .collect();
    let mut labels: Vec<String> = cuts
        .iter()
        .map(|&c| match (0..p.len()).find(|&x| p.down(x) == c) {
            Some(x) => p.label(x),
            None => p.format_subset(c),
        })
        .collect();
    for k in 0..labels.len() {
        while labels[..k].contains(&labels[k]) {
            labels[k].push('\'');
        }
    }
    let complete = FinitePoset::from_leq(cuts.len(), |a, b| cuts[a].is_subset(cuts[b]))
        .expect("inclusion order")
        .with_labels(labels)
        .expect("distinct labels");
    OrderExtension::new(std::sync::Arc::new(p.clone()), std::sync::Arc::new(complete), embed)
        .expect("completion is an order extension")
}

fn push_unique(v: &mut Vec<Subset>, s: Subset) {
    if !v.contains(&s) {
        v.push(s);
    }
}

fn named(labels: &[&str], pairs: &[(usize, usize)]) -> FinitePoset {
    FinitePoset::from_labeled_relation(labels.iter().map(|s| s.to_string()).collect(), pairs).expect("named poset")
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyPoset);
    }
    if n > MAX_ELEMENTS {
        return Err(Error::TooManyElements(n));
    }
    Ok(())
}

fn check_labels(labels: &[String], n: usize) -> Result<()> {
    let mut sorted: Vec<&String> = labels.iter().collect();
    sorted.sort();
    sorted.dedup();
    if labels.len() != n || sorted.len() != n {
        return Err(Error::BadLabels {
            expected: n,
            got: sorted.len(),
        });
    }
    Ok(())
}

/// Shortest path of edges from `from` to `to`, as a node list.
fn edge_path(n: usize, pairs: &[(usize, usize)], from: usize, to: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([from]);
    seen[from] = true;
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return path;
        }
        for &(a, b) in pairs {
            if a == x && !seen[b] {
                seen[b] = true;
                prev[b] = x;
                queue.push_back(b);
            }
        }
    }
    Vec::new()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(p: &FinitePoset, names: &[&str]) -> Subset {
        names.iter().map(|s| p.index_of(s).unwrap()).collect()
    }

    #[test]
    fn closures_on_chain_and_antichain() {
        let c = FinitePoset::chain(3);
        assert_eq!(c.upper_closure(Subset::singleton(0)).unwrap(), c.all());
        assert_eq!(c.upper_closure(Subset::singleton(2)).unwrap(), Subset::singleton(2));
        assert_eq!(c.lower_closure(Subset::singleton(2)).unwrap(), c.all());
        assert_eq!(c.lower_closure(Subset::singleton(0)).unwrap(), Subset::singleton(0));
        let a = FinitePoset::antichain(3);
        let ab: Subset = [0, 1].into_iter().collect();
        assert_eq!(a.upper_closure(ab).unwrap(), ab);
        assert!(matches!(
            c.upper_closure(Subset::singleton(5)),
            Err(Error::IndexOutOfRange { index: 5, size: 3 })
        ));
    }

    #[test]
    fn diamond_down_and_sup() {
        let d = FinitePoset::diamond();
        assert_eq!(d.lower_closure(set(&d, &["a"])).unwrap(), set(&d, &["⊥", "a"]));
        assert_eq!(d.sup_of(set(&d, &["a", "b"])).unwrap(), d.index_of("⊤"));
        let a2 = FinitePoset::antichain(2);
        assert_eq!(a2.sup_of(a2.all()).unwrap(), None);
        assert_eq!(d.sup_of(set(&d, &["b"])).unwrap(), d.index_of("b"));
        assert_eq!(d.sup_of(Subset::EMPTY), Err(Error::EmptySubset));
    }

    #[test]
    fn classify_small_lattices() {
        let n5 = FinitePoset::n5().classify();
        assert!(n5.is_lattice && !n5.is_distributive);
        let m3 = FinitePoset::m3().classify();
        assert!(m3.is_lattice && !m3.is_distributive);
        for n in 1..=5 {
            let c = FinitePoset::chain(n).classify();
            assert!(
                c.is_join_semilattice
                    && c.is_meet_semilattice
                    && c.is_lattice
                    && c.is_complete_lattice
                    && c.is_distributive
                    && c.is_meet_continuous
            );
        }
        let seven = FinitePoset::seven_element().classify();
        assert!(!seven.is_join_semilattice && !seven.is_lattice);
    }

    #[test]
    fn ideals_follow_existing_joins() {
        let s = FinitePoset::seven_element();
        assert!(s.is_ideal(set(&s, &["a", "b", "α"])));
        // a ∨ b ∨ c = z exists although no pair of them has a join
        assert!(!s.is_ideal(set(&s, &["a", "b", "c"])));
        assert!(s.is_ideal(set(&s, &["a", "b"])));
        let d = FinitePoset::diamond();
        assert!(!d.is_ideal(set(&d, &["⊥", "a", "b"])));
        assert!(!d.is_ideal(set(&d, &["a", "b"])));
        assert!(d.is_ideal(Subset::EMPTY));
    }

    #[test]
    fn dm_completion_examples() {
        let a2 = FinitePoset::antichain(2);
        let ext = dm_completion(&a2);
        assert_eq!(ext.complete().len(), 4);
        assert!(ext.complete().classify().is_distributive);
        assert!(ext.is_principal_ideal_on(a2.all()).unwrap());
        assert!(ext.is_principal_ideal_on(Subset::singleton(0)).unwrap());

        let c3 = FinitePoset::chain(3);
        let ext = dm_completion(&c3);
        assert_eq!(ext.complete().len(), 3);
        assert_eq!(ext.image(), ext.complete().all());

        let s = FinitePoset::seven_element();
        let ext = dm_completion(&s);
        let abc = ext.push(set(&s, &["a", "b", "c"]));
        let z = ext.embed(s.index_of("z").unwrap());
        assert_eq!(ext.complete().lub(abc), Some(z));
        let ab = ext.push(set(&s, &["a", "b"]));
        let j = ext.complete().lub(ab).unwrap();
        assert!(ext.preimage(j).is_none(), "a ∨ b is a new cut");
        assert!(ext.complete().leq(j, z));
    }

    #[test]
    fn principal_ideal_requires_ideal() {
        let d = FinitePoset::diamond();
        let ext = dm_completion(&d);
        assert_eq!(
            ext.is_principal_ideal_on(set(&d, &["a", "b"])),
            Err(Error::NotIdeal(set(&d, &["a", "b"])))
        );
        assert!(ext.is_principal_ideal_on(set(&d, &["⊥", "a"])).unwrap());
    }

    #[test]
    fn relation_closure_and_cycles() {
        let p = FinitePoset::from_relation(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(0, 2));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        let err =
            FinitePoset::from_labeled_relation(vec!["a".into(), "b".into(), "c".into()], &[(0, 1), (1, 2), (2, 0)])
                .unwrap_err();
        match err {
            Error::Cycle(c) => {
                assert_eq!(c.first(), c.last());
                assert!(c.len() >= 3);
            }
            e => panic!("unexpected {e:?}"),
        }
        assert!(FinitePoset::from_relation(2, &[(0, 0)]).is_ok());
        assert_eq!(FinitePoset::from_relation(0, &[]), Err(Error::EmptyPoset));
    }

    #[test]
    fn from_leq_rejects_bad_relations() {
        assert_eq!(
            FinitePoset::from_leq(2, |x, y| x < y).unwrap_err(),
            Error::NotReflexive(0)
        );
        assert!(matches!(
            FinitePoset::from_leq(3, |x, y| x == y || (x, y) == (0, 1) || (x, y) == (1, 2)),
            Err(Error::NotTransitive(0, 1, 2))
        ));
    }

    #[test]
    fn upper_set_counts() {
        // upper sets of an n-antichain are all 2^n subsets
        assert_eq!(FinitePoset::antichain(4).upper_sets().len(), 16);
        // upper sets of an n-chain: n + 1
        assert_eq!(FinitePoset::chain(5).upper_sets().len(), 6);
        let d = FinitePoset::diamond();
        assert_eq!(d.upper_sets().len(), 6);
        assert!(d.upper_sets().into_iter().all(|u| d.is_upper_set(u)));
    }
}
