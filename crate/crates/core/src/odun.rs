//! Canonical unlabeled rooted forests ("oduns"), their enumeration, and the
//! terminal-branch combinatorics that governs the sign representation.
//!
//! A tree is encoded as `"(" + children + ")"` with the child encodings
//! sorted in descending string order; a forest is the descending-sorted
//! concatenation of its tree encodings. Two forests are isomorphic exactly
//! when their encodings agree, so the encoding doubles as a map key and as
//! a total order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::counting::factorial;
use crate::error::{Error, Result};

/// Parsing refuses encodings with more vertices than this.
pub const MAX_PARSE_VERTICES: usize = 256;

/// A rooted tree in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RootedTree {
    code: String,
    size: usize,
    children: Vec<RootedTree>,
}

impl RootedTree {
    pub fn leaf() -> Self {
        Self::from_children(Vec::new())
    }

    /// A root with the given subtrees hanging from it.
    pub fn from_children(mut children: Vec<RootedTree>) -> Self {
        children.sort_unstable_by(|a, b| b.code.cmp(&a.code));
        let mut code = String::with_capacity(2 + children.iter().map(|c| c.code.len()).sum::<usize>());
        code.push('(');
        for c in &children {
            code.push_str(&c.code);
        }
        code.push(')');
        let size = 1 + children.iter().map(|c| c.size).sum::<usize>();
        Self { code, size, children }
    }

    /// The path on `len` vertices, rooted at one end.
    pub fn chain(len: usize) -> Self {
        assert!(len >= 1, "a chain has at least one vertex");
        (1..len).fold(Self::leaf(), |t, _| Self::from_children(vec![t]))
    }

    pub fn code(&self) -> &str {
        &self.code
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn children(&self) -> &[RootedTree] {
        &self.children
    }

    /// The forest left after deleting the root.
    pub fn remove_root(&self) -> Odun {
        Odun::from_trees(self.children.clone())
    }

    /// Whether every vertex has at most one child.
    pub fn is_chain(&self) -> bool {
        match self.children.as_slice() {
            [] => true,
            [only] => only.is_chain(),
            _ => false,
        }
    }

    /// Distinct child subtrees with their multiplicities.
    pub fn child_groups(&self) -> Vec<(&RootedTree, usize)> {
        group(&self.children)
    }

    /// Product of subtree sizes over all vertices.
    pub fn hook_product(&self) -> BigUint {
        self.children
            .iter()
            .fold(BigUint::from(self.size), |acc, c| acc * c.hook_product())
    }
}

impl Ord for RootedTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.code.cmp(&other.code)
    }
}

impl PartialOrd for RootedTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code)
    }
}

fn group(sorted: &[RootedTree]) -> Vec<(&RootedTree, usize)> {
    let mut out: Vec<(&RootedTree, usize)> = Vec::new();
    for t in sorted {
        match out.last_mut() {
            Some((last, m)) if last.code == t.code => *m += 1,
            _ => out.push((t, 1)),
        }
    }
    out
}

/// A canonical unlabeled rooted forest: a multiset of canonical trees.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Odun {
    trees: Vec<RootedTree>,
    vertex_count: usize,
}

impl Odun {
    /// The forest with no vertices.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_trees(mut trees: Vec<RootedTree>) -> Self {
        trees.sort_unstable_by(|a, b| b.code.cmp(&a.code));
        let vertex_count = trees.iter().map(RootedTree::size).sum();
        Self { trees, vertex_count }
    }

    pub fn tree(t: RootedTree) -> Self {
        Self::from_trees(vec![t])
    }

    /// Disjoint union of chains, one per part of `lengths`.
    pub fn chains(lengths: &[usize]) -> Self {
        Self::from_trees(lengths.iter().map(|&l| RootedTree::chain(l)).collect())
    }

    pub fn trees(&self) -> &[RootedTree] {
        &self.trees
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn component_count(&self) -> usize {
        self.trees.len()
    }

    pub fn code(&self) -> String {
        self.trees.iter().map(|t| t.code.as_str()).collect()
    }

    /// Distinct component trees with multiplicities, in canonical order.
    pub fn tree_groups(&self) -> Vec<(&RootedTree, usize)> {
        group(&self.trees)
    }

    /// The single component, or `NotATree`.
    pub fn as_tree(&self) -> Result<&RootedTree> {
        match self.trees.as_slice() {
            [t] => Ok(t),
            ts => Err(Error::NotATree(ts.len())),
        }
    }

    /// The tree obtained by attaching every root to a new common root.
    pub fn add_root(&self) -> RootedTree {
        RootedTree::from_children(self.trees.clone())
    }

    /// Disjoint union.
    pub fn union(&self, other: &Odun) -> Odun {
        let mut trees = self.trees.clone();
        trees.extend(other.trees.iter().cloned());
        Odun::from_trees(trees)
    }

    /// JSON form `{"trees":[{"repr":"((()))","mult":1},...]}`.
    pub fn to_json(&self) -> OdunJson {
        OdunJson {
            trees: self
                .tree_groups()
                .into_iter()
                .map(|(t, mult)| TreeJson { repr: t.code.clone(), mult })
                .collect(),
        }
    }

    pub fn from_json(json: &OdunJson) -> Result<Self> {
        let mut trees = Vec::new();
        let mut total = 0usize;
        for entry in &json.trees {
            let parsed: Odun = entry.repr.parse()?;
            let t = parsed.as_tree()?.clone();
            total = total.saturating_add(t.size.saturating_mul(entry.mult));
            if total > MAX_PARSE_VERTICES {
                return Err(Error::Parse(format!("odun exceeds {MAX_PARSE_VERTICES} vertices")));
            }
            trees.extend(std::iter::repeat_n(t, entry.mult));
        }
        Ok(Odun::from_trees(trees))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OdunJson {
    pub trees: Vec<TreeJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub repr: String,
    pub mult: usize,
}

impl Ord for Odun {
    fn cmp(&self, other: &Self) -> Ordering {
        self.trees.cmp(&other.trees)
    }
}

impl PartialOrd for Odun {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Odun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.trees {
            f.write_str(&t.code)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Odun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Odun({self})")
    }
}

/// Parses any balanced parenthesis string, canonicalizing it. Surrounding
/// whitespace is ignored; the empty string is rejected.
impl FromStr for Odun {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty odun".into()));
        }
        if s.len() > 2 * MAX_PARSE_VERTICES {
            return Err(Error::Parse(format!("odun exceeds {MAX_PARSE_VERTICES} vertices")));
        }
        let mut stack: Vec<Vec<RootedTree>> = vec![Vec::new()];
        for (i, ch) in s.char_indices() {
            match ch {
                '(' => stack.push(Vec::new()),
                ')' => {
                    if stack.len() < 2 {
                        return Err(Error::Parse(format!("unmatched ')' at byte {i}")));
                    }
                    let kids = stack.pop().unwrap();
                    stack.last_mut().unwrap().push(RootedTree::from_children(kids));
                }
                other => return Err(Error::Parse(format!("unexpected character {other:?} at byte {i}"))),
            }
        }
        if stack.len() != 1 {
            return Err(Error::Parse("unbalanced parentheses".into()));
        }
        Ok(Odun::from_trees(stack.pop().unwrap()))
    }
}

/// Canonical trees grouped by vertex count, built level by level: the trees
/// on `s` vertices are the forests on `s - 1` vertices under a new root, and
/// forests are generated as non-increasing sequences of trees, so no
/// isomorphism test is ever needed.
struct Census {
    // trees[s] = canonical trees on s vertices
    trees: Vec<Vec<RootedTree>>,
}

impl Census {
    fn up_to(n: usize) -> Self {
        let mut census = Census { trees: vec![Vec::new(); n + 1] };
        for s in 1..=n {
            let level: Vec<RootedTree> = census.forests(s - 1).into_iter().map(|f| f.add_root()).collect();
            census.trees[s] = level;
        }
        census
    }

    /// All forests on `m` vertices using the trees built so far.
    fn forests(&self, m: usize) -> Vec<Odun> {
        // pool of candidate trees in descending canonical order
        let mut pool: Vec<&RootedTree> = self.trees[1..=m.min(self.trees.len() - 1)].iter().flatten().collect();
        pool.sort_unstable_by(|a, b| b.code.cmp(&a.code));
        let mut out = Vec::new();
        let mut current = Vec::new();
        Self::extend(&pool, 0, m, &mut current, &mut out);
        out
    }

    fn extend<'a>(pool: &[&'a RootedTree], from: usize, remaining: usize, current: &mut Vec<&'a RootedTree>, out: &mut Vec<Odun>) {
        if remaining == 0 {
            out.push(Odun::from_trees(current.iter().map(|t| (*t).clone()).collect()));
            return;
        }
        for i in from..pool.len() {
            if pool[i].size <= remaining {
                current.push(pool[i]);
                Self::extend(pool, i, remaining - pool[i].size, current, out);
                current.pop();
            }
        }
    }
}

/// Every rooted forest on `n` vertices up to isomorphism, optionally only
/// those with the given number of components. Sorted by component count,
/// then by descending encoding.
pub fn enumerate_oduns(n: usize, components: Option<usize>) -> Vec<Odun> {
    let census = Census::up_to(n);
    let mut all: Vec<Odun> = census
        .forests(n)
        .into_iter()
        .filter(|o| components.is_none_or(|c| o.component_count() == c))
        .collect();
    all.sort_by(|a, b| a.component_count().cmp(&b.component_count()).then_with(|| b.cmp(a)));
    all
}

/// Rooted trees on `n` vertices up to isomorphism, in descending encoding.
pub fn enumerate_rooted_trees(n: usize) -> Vec<RootedTree> {
    if n == 0 {
        return Vec::new();
    }
    let mut trees = Census::up_to(n).trees.swap_remove(n);
    trees.sort_unstable_by(|a, b| b.code.cmp(&a.code));
    trees
}

/// Number of unlabeled rooted trees on `n` vertices from the recurrence
/// `t_{m+1} = (1/m) Σ_{k=1}^{m} (Σ_{d|k} d t_d) t_{m-k+1}`, `t_1 = 1`.
pub fn count_rooted_trees(n: usize) -> BigUint {
    rooted_tree_counts(n).pop().unwrap_or_else(BigUint::zero)
}

/// `[t_1, ..., t_n]` from the same recurrence.
pub fn rooted_tree_counts(n: usize) -> Vec<BigUint> {
    if n == 0 {
        return Vec::new();
    }
    // t[i] for i in 1..=n; index 0 unused
    let mut t = vec![BigUint::zero(); n + 1];
    t[1] = BigUint::one();
    // divisor sums s[k] = Σ_{d|k} d t_d, filled as t grows
    let mut s = vec![BigUint::zero(); n + 1];
    for m in 1..n {
        s[m] = (1..=m).filter(|d| m % d == 0).map(|d| BigUint::from(d) * &t[d]).sum();
        let total: BigUint = (1..=m).map(|k| &s[k] * &t[m - k + 1]).sum();
        t[m + 1] = total / BigUint::from(m);
    }
    t.split_off(1)
}

/// A maximal hanging chain: its length and the preorder id of the vertex it
/// hangs from (`None` when the whole tree is a chain).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct TerminalBranch {
    pub parent: Option<usize>,
    pub length: usize,
}

/// The maximal terminal branches of a single tree. Vertex ids are preorder
/// positions in the canonical tree, the root being 0.
pub fn maximal_terminal_branches(odun: &Odun) -> Result<Vec<TerminalBranch>> {
    let tree = odun.as_tree()?;
    if tree.is_chain() {
        return Ok(vec![TerminalBranch { parent: None, length: tree.size }]);
    }
    let mut out = Vec::new();
    let mut next_id = 0;
    collect_branches(tree, &mut next_id, &mut out);
    Ok(out)
}

fn collect_branches(t: &RootedTree, next_id: &mut usize, out: &mut Vec<TerminalBranch>) {
    let me = *next_id;
    *next_id += 1;
    let hangs_here = t.children.len() >= 2;
    for c in &t.children {
        if hangs_here && c.is_chain() {
            out.push(TerminalBranch { parent: Some(me), length: c.size });
        }
        collect_branches(c, next_id, out);
    }
}

/// A vertex is "dry" when two of its maximal terminal branches have the
/// same odd length. A tree blossoms when no vertex is dry; a forest
/// blossoms when the tree made by adding a common root does.
pub fn is_blossoming(odun: &Odun) -> bool {
    !has_odd_twin_branches(&odun.trees) && odun.trees.iter().all(tree_blossoms)
}

fn tree_blossoms(t: &RootedTree) -> bool {
    !has_odd_twin_branches(&t.children) && t.children.iter().all(tree_blossoms)
}

// children are sorted, so equal chains are adjacent
fn has_odd_twin_branches(children: &[RootedTree]) -> bool {
    children
        .windows(2)
        .any(|w| w[0].code == w[1].code && w[0].size % 2 == 1 && w[0].is_chain())
}

/// Whether every relabeling symmetry of the forest is an even permutation:
/// no vertex, counting a common root over all components, has two
/// isomorphic children of odd size. Agrees with [`is_blossoming`] on fewer
/// than ten vertices; beyond that, twin odd subtrees that are not chains
/// also contribute odd symmetries.
pub fn has_only_even_symmetries(odun: &Odun) -> bool {
    fn ok(children: &[RootedTree]) -> bool {
        !children.windows(2).any(|w| w[0].code == w[1].code && w[0].size % 2 == 1)
            && children.iter().all(|c| ok(&c.children))
    }
    ok(&odun.trees)
}

/// Number of blossoming forests on `n` vertices.
pub fn count_blossoming(n: usize) -> usize {
    enumerate_oduns(n, None).iter().filter(|o| is_blossoming(o)).count()
}

/// Blossoming forests on `n` vertices split by whether some component is a
/// single vertex: `(without, with)`.
pub fn blossoming_split(n: usize) -> (usize, usize) {
    let mut without = 0;
    let mut with = 0;
    for o in enumerate_oduns(n, None).iter().filter(|o| is_blossoming(o)) {
        if o.trees.iter().any(|t| t.size == 1) {
            with += 1;
        } else {
            without += 1;
        }
    }
    (without, with)
}

/// `n! / Π h(a)` with `h(a)` the size of the subtree below `a`.
pub fn hook_length_value(tree: &RootedTree) -> BigUint {
    factorial(tree.size) / tree.hook_product()
}

/// Counts labelings that decrease strictly from every vertex to its
/// descendants by enumerating the linear extensions one label at a time.
pub fn natural_labelings_count(tree: &RootedTree) -> BigUint {
    // children lists over preorder ids
    let mut children: Vec<Vec<usize>> = Vec::new();
    fn index(t: &RootedTree, children: &mut Vec<Vec<usize>>) -> usize {
        let me = children.len();
        children.push(Vec::new());
        for c in &t.children {
            let id = index(c, children);
            children[me].push(id);
        }
        me
    }
    index(tree, &mut children);
    let mut available = vec![0usize];
    let mut memo = BTreeMap::new();
    count_extensions(&children, &mut available, &mut memo)
}

// label 1 goes to a currently available vertex (all ancestors labeled),
// which releases its children
fn count_extensions(children: &[Vec<usize>], available: &mut Vec<usize>, memo: &mut BTreeMap<Vec<usize>, BigUint>) -> BigUint {
    if available.is_empty() {
        return BigUint::one();
    }
    let mut key = available.clone();
    key.sort_unstable();
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for i in 0..available.len() {
        let v = available.swap_remove(i);
        let before = available.len();
        available.extend(&children[v]);
        total += count_extensions(children, available, memo);
        available.truncate(before);
        available.push(v);
        let last = available.len() - 1;
        available.swap(i, last);
    }
    memo.insert(key, total.clone());
    total
}
