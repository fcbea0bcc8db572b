//! Occurrence relations between formulas and the linking equivalences they
//! generate.
//!
//! A [`TypedRelArrow`] is the relational image of a deduction `A -> B`: a set
//! of (source occurrence, target occurrence) pairs. A [`LinkEquivalence`] is a
//! partition of the disjoint union of the two occurrence sets.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::formula::{Formula, OccId, Side};

pub type Relation = BTreeSet<(usize, usize)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypedRelArrow {
    pub source: Formula,
    pub target: Formula,
    pub rel: Relation,
}

impl TypedRelArrow {
    pub fn new(source: Formula, target: Formula, rel: Relation) -> Result<Self> {
        let (m, n) = (source.size(), target.size());
        if let Some(&(i, j)) = rel.iter().find(|&&(i, j)| i >= m || j >= n) {
            return Err(Error::TypeMismatch(format!(
                "pair ({i},{j}) out of range for {source} -> {target}"
            )));
        }
        Ok(TypedRelArrow { source, target, rel })
    }

    pub(crate) fn unchecked(source: Formula, target: Formula, rel: Relation) -> Self {
        debug_assert!(rel
            .iter()
            .all(|&(i, j)| i < source.size() && j < target.size()));
        TypedRelArrow { source, target, rel }
    }

    pub fn converse(&self) -> TypedRelArrow {
        TypedRelArrow {
            source: self.target.clone(),
            target: self.source.clone(),
            rel: self.rel.iter().map(|&(i, j)| (j, i)).collect(),
        }
    }

    /// True iff the relation is the graph of a bijection between occurrences.
    pub fn is_bijective(&self) -> bool {
        let (m, n) = (self.source.size(), self.target.size());
        if m != n || self.rel.len() != m {
            return false;
        }
        let sources: BTreeSet<_> = self.rel.iter().map(|p| p.0).collect();
        let targets: BTreeSet<_> = self.rel.iter().map(|p| p.1).collect();
        sources.len() == m && targets.len() == n
    }

    /// Relation as `[s, t]` pairs, for serialization.
    pub fn pairs(&self) -> Vec<[usize; 2]> {
        self.rel.iter().map(|&(i, j)| [i, j]).collect()
    }
}

impl fmt::Display for TypedRelArrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (i, j)) in self.rel.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "({i},{j})")?;
        }
        f.write_str("}")
    }
}

/// `1_A`: the diagonal relation.
pub fn identity_arrow(a: &Formula) -> TypedRelArrow {
    let rel = (0..a.size()).map(|i| (i, i)).collect();
    TypedRelArrow::unchecked(a.clone(), a.clone(), rel)
}

/// The empty relation; its linking is the all-singletons partition.
pub fn zero_arrow(a: &Formula, b: &Formula) -> TypedRelArrow {
    TypedRelArrow::unchecked(a.clone(), b.clone(), Relation::new())
}

/// Relational composite `g . f` of `f: A -> B` and `g: B -> C`.
pub fn compose(f: &TypedRelArrow, g: &TypedRelArrow) -> Result<TypedRelArrow> {
    if f.target != g.source {
        return Err(Error::TypeMismatch(format!(
            "cannot compose {} -> {} with {} -> {}",
            f.source, f.target, g.source, g.target
        )));
    }
    let mut by_middle: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(j, k) in &g.rel {
        by_middle.entry(j).or_default().push(k);
    }
    let rel = f
        .rel
        .iter()
        .flat_map(|&(i, j)| by_middle.get(&j).into_iter().flatten().map(move |&k| (i, k)))
        .collect();
    Ok(TypedRelArrow::unchecked(f.source.clone(), g.target.clone(), rel))
}

pub fn union(f: &TypedRelArrow, g: &TypedRelArrow) -> Result<TypedRelArrow> {
    if f.source != g.source || f.target != g.target {
        return Err(Error::TypeMismatch(format!(
            "union of {} -> {} and {} -> {}",
            f.source, f.target, g.source, g.target
        )));
    }
    let rel = f.rel.union(&g.rel).copied().collect();
    Ok(TypedRelArrow::unchecked(f.source.clone(), f.target.clone(), rel))
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller index wins so roots are stable
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Partition of source and target occurrences.
///
/// Blocks are kept sorted (sources before targets, then by index) and ordered
/// by their first element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkEquivalence {
    source_len: usize,
    target_len: usize,
    blocks: Vec<Vec<OccId>>,
}

impl LinkEquivalence {
    /// Builds a partition from explicit blocks. Elements not mentioned become
    /// singletons; overlap, empty blocks and out-of-range elements are errors.
    pub fn new(source_len: usize, target_len: usize, blocks: Vec<Vec<OccId>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidLinking("empty block".into()));
            }
            for &occ in block {
                let len = match occ.side {
                    Side::Source => source_len,
                    Side::Target => target_len,
                };
                if occ.index >= len {
                    return Err(Error::InvalidLinking(format!("{occ} out of range")));
                }
                if !seen.insert(occ) {
                    return Err(Error::InvalidLinking(format!("{occ} appears in two blocks")));
                }
            }
        }
        let mut all = blocks;
        for occ in Self::elements(source_len, target_len) {
            if !seen.contains(&occ) {
                all.push(vec![occ]);
            }
        }
        Ok(Self::normalized(source_len, target_len, all))
    }

    fn normalized(source_len: usize, target_len: usize, mut blocks: Vec<Vec<OccId>>) -> Self {
        for b in &mut blocks {
            b.sort();
        }
        blocks.sort();
        LinkEquivalence {
            source_len,
            target_len,
            blocks,
        }
    }

    fn elements(source_len: usize, target_len: usize) -> impl Iterator<Item = OccId> {
        (0..source_len)
            .map(OccId::source)
            .chain((0..target_len).map(OccId::target))
    }

    fn from_sets(source_len: usize, target_len: usize, sets: &mut DisjointSets) -> Self {
        let mut groups: BTreeMap<usize, Vec<OccId>> = BTreeMap::new();
        for occ in Self::elements(source_len, target_len) {
            let root = sets.find(occ.global(source_len));
            groups.entry(root).or_default().push(occ);
        }
        Self::normalized(source_len, target_len, groups.into_values().collect())
    }

    /// The all-singletons partition (the diagonal links only).
    pub fn discrete(source_len: usize, target_len: usize) -> Self {
        Self::normalized(
            source_len,
            target_len,
            Self::elements(source_len, target_len).map(|o| vec![o]).collect(),
        )
    }

    /// Parses `"s0 s1 | s2 t0"`. Blocks may be separated by `|` or `,`.
    pub fn parse(text: &str, source_len: usize, target_len: usize) -> Result<Self> {
        let mut blocks = Vec::new();
        for chunk in text.split(['|', ',']) {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let block = chunk
                .split_whitespace()
                .map(|tok| {
                    let (side, rest) = match tok.split_at(1) {
                        ("s", rest) => (Side::Source, rest),
                        ("t", rest) => (Side::Target, rest),
                        _ => return Err(Error::InvalidLinking(format!("bad element `{tok}`"))),
                    };
                    let index = rest
                        .parse()
                        .map_err(|_| Error::InvalidLinking(format!("bad element `{tok}`")))?;
                    Ok(OccId { side, index })
                })
                .collect::<Result<Vec<_>>>()?;
            blocks.push(block);
        }
        Self::new(source_len, target_len, blocks)
    }

    pub fn source_len(&self) -> usize {
        self.source_len
    }

    pub fn target_len(&self) -> usize {
        self.target_len
    }

    pub fn blocks(&self) -> &[Vec<OccId>] {
        &self.blocks
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    fn block_ids(&self) -> BTreeMap<OccId, usize> {
        self.blocks
            .iter()
            .enumerate()
            .flat_map(|(k, b)| b.iter().map(move |&o| (o, k)))
            .collect()
    }

    pub fn linked(&self, x: OccId, y: OccId) -> bool {
        self.blocks.iter().any(|b| b.contains(&x) && b.contains(&y))
    }

    fn check_sizes(&self, a: &Formula, b: &Formula) -> Result<()> {
        if self.source_len != a.size() || self.target_len != b.size() {
            return Err(Error::InvalidLinking(format!(
                "linking over {}+{} occurrences, formulas have {}+{}",
                self.source_len,
                self.target_len,
                a.size(),
                b.size()
            )));
        }
        Ok(())
    }

    /// First block joining occurrences of different letters, if any.
    fn mixed_block(&self, a: &Formula, b: &Formula) -> Option<&Vec<OccId>> {
        let (la, lb) = (a.leaf_letters(), b.leaf_letters());
        let letter = |o: &OccId| match o.side {
            Side::Source => la[o.index],
            Side::Target => lb[o.index],
        };
        self.blocks
            .iter()
            .find(|block| block.iter().any(|o| letter(o) != letter(&block[0])))
    }
}

impl fmt::Display for LinkEquivalence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, block) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str(" | ")?;
            }
            for (i, occ) in block.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{occ}")?;
            }
        }
        Ok(())
    }
}

/// Finest partition of `|A| + |B|` merging every related pair.
pub fn eq_closure(f: &TypedRelArrow) -> LinkEquivalence {
    let (m, n) = (f.source.size(), f.target.size());
    let mut sets = DisjointSets::new(m + n);
    for &(i, j) in &f.rel {
        sets.union(i, m + j);
    }
    LinkEquivalence::from_sets(m, n, &mut sets)
}

/// Linked exactly when carrying the same letter, across both formulas.
pub fn is_perfect(l: &LinkEquivalence, a: &Formula, b: &Formula) -> Result<bool> {
    l.check_sizes(a, b)?;
    let (la, lb) = (a.leaf_letters(), b.leaf_letters());
    let letter = |o: OccId| match o.side {
        Side::Source => la[o.index],
        Side::Target => lb[o.index],
    };
    let ids = l.block_ids();
    let elems: Vec<OccId> = ids.keys().copied().collect();
    Ok(elems.iter().enumerate().all(|(k, &x)| {
        elems[k + 1..]
            .iter()
            .all(|&y| (ids[&x] == ids[&y]) == (letter(x) == letter(y)))
    }))
}

pub fn is_bijective(f: &TypedRelArrow) -> bool {
    f.is_bijective()
}

/// Result of relabeling each linking block with a fresh letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generalization {
    pub source: Formula,
    pub target: Formula,
    /// Fresh letter to the original letter it stands for.
    pub substitution: BTreeMap<String, String>,
}

/// Gives every block of `l` its own fresh letter (`q1`, `q2`, ... in block
/// order, skipping letters already used by `a` or `b`).
pub fn generalize(a: &Formula, b: &Formula, l: &LinkEquivalence) -> Result<Generalization> {
    l.check_sizes(a, b)?;
    if let Some(block) = l.mixed_block(a, b) {
        let shown: Vec<String> = block.iter().map(OccId::to_string).collect();
        return Err(Error::InvalidLinking(format!(
            "block {{{}}} links occurrences of different letters",
            shown.join(" ")
        )));
    }
    let used: BTreeSet<String> = a.letters().union(&b.letters()).cloned().collect();
    let mut fresh = (1..).map(|i| format!("q{i}")).filter(|q| !used.contains(q));

    let (la, lb) = (a.leaf_letters(), b.leaf_letters());
    let mut name_of = BTreeMap::new();
    let mut substitution = BTreeMap::new();
    for block in l.blocks() {
        let name = fresh.next().expect("unbounded supply");
        let original = match block[0].side {
            Side::Source => la[block[0].index],
            Side::Target => lb[block[0].index],
        };
        substitution.insert(name.clone(), original.to_string());
        for &occ in block {
            name_of.insert(occ, name.clone());
        }
    }
    let source = a.relabel_occurrences(|i, _| name_of[&OccId::source(i)].clone());
    let target = b.relabel_occurrences(|i, _| name_of[&OccId::target(i)].clone());
    Ok(Generalization {
        source,
        target,
        substitution,
    })
}

/// Composite of split equivalences: outer occurrences are linked when they
/// are connected through alternating blocks of `l1` and `l2` across the
/// middle formula.
pub fn gen_compose(l1: &LinkEquivalence, l2: &LinkEquivalence) -> Result<LinkEquivalence> {
    if l1.target_len != l2.source_len {
        return Err(Error::TypeMismatch(format!(
            "middle formula has {} occurrences on one side and {} on the other",
            l1.target_len, l2.source_len
        )));
    }
    let (a, b, c) = (l1.source_len, l1.target_len, l2.target_len);
    // nodes: A = 0..a, B = a..a+b, C = a+b..a+b+c
    let mut sets = DisjointSets::new(a + b + c);
    let join = |sets: &mut DisjointSets, block: &[OccId], offsets: (usize, usize)| {
        let node = |o: &OccId| match o.side {
            Side::Source => offsets.0 + o.index,
            Side::Target => offsets.1 + o.index,
        };
        for o in &block[1..] {
            sets.union(node(&block[0]), node(o));
        }
    };
    for block in &l1.blocks {
        join(&mut sets, block, (0, a));
    }
    for block in &l2.blocks {
        join(&mut sets, block, (a, a + b));
    }
    let mut groups: BTreeMap<usize, Vec<OccId>> = BTreeMap::new();
    for i in 0..a {
        groups.entry(sets.find(i)).or_default().push(OccId::source(i));
    }
    for k in 0..c {
        groups
            .entry(sets.find(a + b + k))
            .or_default()
            .push(OccId::target(k));
    }
    Ok(LinkEquivalence::normalized(a, c, groups.into_values().collect()))
}
