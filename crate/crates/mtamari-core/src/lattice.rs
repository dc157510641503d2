//! The m-Tamari order: covering relation, order test, Hasse diagrams,
//! interval enumeration with statistics, and the (m+1)-ary tree view.
//!
//! The order test defaults to componentwise comparison of distance vectors,
//! which is linear after precomputation; graph reachability on the cover DAG
//! is kept available as an independent oracle ([`HasseDiagram::reachable`]).

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use crate::formulas;
use crate::paths::{DistanceVector, PathBuilder, Step, StepPath};

/// Default cap on Hasse-diagram node counts; exceeding it raises
/// [`LatticeError::ResourceLimit`] instead of thrashing.
pub const DEFAULT_NODE_CAP: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeError {
    /// The two paths do not have the same size.
    SizeMismatch,
    /// The diagram would exceed the node cap.
    ResourceLimit { expected: String, cap: usize },
    /// A meet or join failed to be unique; this would falsify the lattice
    /// property.
    NotALattice,
    /// The path is not an m-Dyck path for the requested m.
    NotMDyck,
    /// The preorder position is not a leaf followed by an internal node.
    InvalidLeaf,
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::SizeMismatch => write!(f, "paths have different sizes"),
            LatticeError::ResourceLimit { expected, cap } => {
                write!(f, "diagram would have {expected} nodes, above the cap of {cap}")
            }
            LatticeError::NotALattice => {
                write!(f, "meet/join is not unique; this would falsify the lattice property")
            }
            LatticeError::NotMDyck => write!(f, "path is not an m-Dyck path"),
            LatticeError::InvalidLeaf => {
                write!(f, "position is not a leaf followed in preorder by an internal node")
            }
        }
    }
}

/// All paths covering `p` in the Tamari lattice of its size: one for each
/// down step immediately followed by an up step, obtained by swapping the
/// down step with the excursion of the up step.
pub fn covers(p: &StepPath) -> Vec<StepPath> {
    let steps: Vec<Step> = p.steps().collect();
    let mut out = Vec::new();
    let mut ups = 0usize;
    for j in 0..steps.len().saturating_sub(1) {
        if steps[j] == Step::Up {
            ups += 1;
            continue;
        }
        if steps[j + 1] != Step::Up {
            continue;
        }
        // excursion of the up step of rank ups+1 spans j+1 ..= e
        let e = p.match_of_up(ups + 1);
        let mut b = PathBuilder::new();
        for s in &steps[..j] {
            b.push(*s);
        }
        for s in &steps[j + 1..=e] {
            b.push(*s);
        }
        b.push(Step::Down);
        for s in &steps[e + 1..] {
            b.push(*s);
        }
        out.push(b.finish().expect("rotation preserves validity"));
    }
    out
}

/// Tamari order test via distance vectors: `p <= q` iff the vectors compare
/// componentwise.
pub fn leq(p: &StepPath, q: &StepPath) -> Result<bool, LatticeError> {
    if p.size() != q.size() {
        return Err(LatticeError::SizeMismatch);
    }
    Ok(p.distance_vector().leq(&q.distance_vector()))
}

/// One interval of the lattice, with the statistics used throughout the
/// enumeration: contacts of the lower path, initial rise of the upper path,
/// and the length of the longest cover chain from lower to upper.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalRecord {
    pub lower: usize,
    pub upper: usize,
    pub contacts_lower: usize,
    pub initial_rise_upper: usize,
    pub longest_chain: usize,
}

/// Aggregate of the interval statistics of a diagram.
///
/// `joint` maps `(contacts_lower - 1, initial_rise_upper, longest_chain)` to
/// the number of intervals with those statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalTable {
    pub m: usize,
    pub n: usize,
    pub total: u64,
    pub by_contacts: Vec<(usize, u64)>,
    pub joint: Vec<((usize, usize, usize), u64)>,
}

/// Explicit Hasse diagram of the m-Tamari lattice of size n.
///
/// Nodes are all m-Dyck paths of size mn in lexicographic order (up < down);
/// this order is deterministic and reverse-topological for the cover edges
/// (every cover has a strictly smaller index).
pub struct HasseDiagram {
    m: usize,
    n: usize,
    nodes: Vec<StepPath>,
    dvs: Vec<DistanceVector>,
    covers: Vec<Vec<u32>>,
    covered: Vec<Vec<u32>>,
    contacts: Vec<u32>,
    rises: Vec<u32>,
}

impl HasseDiagram {
    pub fn build(m: usize, n: usize) -> Result<Self, LatticeError> {
        Self::build_with_cap(m, n, DEFAULT_NODE_CAP)
    }

    pub fn build_with_cap(m: usize, n: usize, cap: usize) -> Result<Self, LatticeError> {
        assert!(m >= 1);
        let expected = formulas::count_paths(m, n);
        if expected.to_u64().is_none_or(|c| c as u128 > cap as u128) {
            return Err(LatticeError::ResourceLimit {
                expected: alloc::format!("{expected}"),
                cap,
            });
        }
        let nodes = crate::paths::generate_m_dyck(m, n);
        debug_assert_eq!(nodes.len() as u64, expected.to_u64().unwrap());
        let dvs: Vec<DistanceVector> = nodes.iter().map(|p| p.distance_vector()).collect();
        let contacts: Vec<u32> = nodes.iter().map(|p| p.contacts() as u32).collect();
        let rises: Vec<u32> =
            nodes.iter().map(|p| p.initial_rise(m).expect("nodes are m-Dyck") as u32).collect();
        let mut cover_edges: Vec<Vec<u32>> = Vec::with_capacity(nodes.len());
        let mut covered: Vec<Vec<u32>> = alloc::vec![Vec::new(); nodes.len()];
        for (i, p) in nodes.iter().enumerate() {
            let mut cs = Vec::new();
            for q in covers(p) {
                debug_assert!(q.is_m_dyck(m), "covers of m-Dyck paths are m-Dyck");
                let j = nodes.binary_search(&q).expect("cover is a node");
                debug_assert!(j < i, "covers precede in lexicographic order");
                cs.push(j as u32);
                covered[j].push(i as u32);
            }
            cs.sort_unstable();
            cover_edges.push(cs);
        }
        Ok(HasseDiagram { m, n, nodes, dvs, covers: cover_edges, covered, contacts, rises })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node(&self, i: usize) -> &StepPath {
        &self.nodes[i]
    }

    pub fn nodes(&self) -> &[StepPath] {
        &self.nodes
    }

    pub fn index_of(&self, p: &StepPath) -> Option<usize> {
        self.nodes.binary_search(p).ok()
    }

    /// Indices of the paths covering node `i` (its upper neighbours).
    pub fn covers_of(&self, i: usize) -> &[u32] {
        &self.covers[i]
    }

    /// Indices of the paths covered by node `i` (its lower neighbours).
    pub fn covered_by(&self, i: usize) -> &[u32] {
        &self.covered[i]
    }

    /// Order test on node indices, via the precomputed distance vectors.
    pub fn leq_idx(&self, a: usize, b: usize) -> bool {
        self.dvs[a].leq(&self.dvs[b])
    }

    /// Reachability oracle: follows cover edges from `a` looking for `b`.
    /// Agrees with [`HasseDiagram::leq_idx`]; kept as the independent route.
    pub fn reachable(&self, a: usize, b: usize) -> bool {
        if a == b {
            return true;
        }
        let mut seen = alloc::vec![false; self.nodes.len()];
        let mut stack = alloc::vec![a];
        seen[a] = true;
        while let Some(v) = stack.pop() {
            for &c in &self.covers[v] {
                let c = c as usize;
                if c == b {
                    return true;
                }
                if !seen[c] {
                    seen[c] = true;
                    stack.push(c);
                }
            }
        }
        false
    }

    /// The unique minimum, `(u^m d^m)^n`: the lexicographically last node.
    pub fn minimum(&self) -> usize {
        self.nodes.len() - 1
    }

    /// The unique maximum, `u^{mn} d^{mn}`: the lexicographically first node.
    pub fn maximum(&self) -> usize {
        0
    }

    /// Longest cover-chain lengths from `lower` to every node; -1 where
    /// unreachable. Cover edges decrease the node index, so a single sweep
    /// in decreasing index order is a topological-order DP.
    pub fn longest_chains_from(&self, lower: usize) -> Vec<i64> {
        let mut dist = alloc::vec![-1i64; self.nodes.len()];
        dist[lower] = 0;
        for v in (0..=lower).rev() {
            if dist[v] < 0 {
                continue;
            }
            for &c in &self.covers[v] {
                let c = c as usize;
                if dist[c] < dist[v] + 1 {
                    dist[c] = dist[v] + 1;
                }
            }
        }
        dist
    }

    /// Streams every interval exactly once, grouped by lower path.
    pub fn intervals(&self) -> Intervals<'_> {
        Intervals { h: self, lower: 0, upper: 0, dist: self.longest_chains_from(0) }
    }

    pub fn interval_count(&self) -> u64 {
        self.intervals().count() as u64
    }

    /// Single-pass aggregation of the interval statistics.
    pub fn interval_table(&self) -> IntervalTable {
        let mut by_contacts: BTreeMap<usize, u64> = BTreeMap::new();
        let mut joint: BTreeMap<(usize, usize, usize), u64> = BTreeMap::new();
        let mut total = 0u64;
        for r in self.intervals() {
            total += 1;
            *by_contacts.entry(r.contacts_lower).or_insert(0) += 1;
            *joint
                .entry((r.contacts_lower - 1, r.initial_rise_upper, r.longest_chain))
                .or_insert(0) += 1;
        }
        IntervalTable {
            m: self.m,
            n: self.n,
            total,
            by_contacts: by_contacts.into_iter().collect(),
            joint: joint.into_iter().collect(),
        }
    }

    fn down_set(&self, a: usize) -> Vec<bool> {
        self.closure(a, &self.covered)
    }

    fn up_set(&self, a: usize) -> Vec<bool> {
        self.closure(a, &self.covers)
    }

    fn closure(&self, a: usize, adj: &[Vec<u32>]) -> Vec<bool> {
        let mut seen = alloc::vec![false; self.nodes.len()];
        seen[a] = true;
        let mut stack = alloc::vec![a];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                let w = w as usize;
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Greatest lower bound, computed by intersecting down-sets on the
    /// diagram and extracting the unique maximal element.
    pub fn meet(&self, a: usize, b: usize) -> Result<usize, LatticeError> {
        let da = self.down_set(a);
        let db = self.down_set(b);
        let inter: Vec<bool> = da.iter().zip(&db).map(|(x, y)| *x && *y).collect();
        // the intersection is a down-set: an element is maximal in it iff
        // none of its covers belongs to it
        let mut best = None;
        for v in 0..self.nodes.len() {
            if !inter[v] {
                continue;
            }
            if self.covers[v].iter().any(|&c| inter[c as usize]) {
                continue;
            }
            if best.is_some() {
                return Err(LatticeError::NotALattice);
            }
            best = Some(v);
        }
        best.ok_or(LatticeError::NotALattice)
    }

    /// Least upper bound, dual to [`HasseDiagram::meet`].
    pub fn join(&self, a: usize, b: usize) -> Result<usize, LatticeError> {
        let ua = self.up_set(a);
        let ub = self.up_set(b);
        let inter: Vec<bool> = ua.iter().zip(&ub).map(|(x, y)| *x && *y).collect();
        let mut best = None;
        for v in 0..self.nodes.len() {
            if !inter[v] {
                continue;
            }
            if self.covered[v].iter().any(|&c| inter[c as usize]) {
                continue;
            }
            if best.is_some() {
                return Err(LatticeError::NotALattice);
            }
            best = Some(v);
        }
        best.ok_or(LatticeError::NotALattice)
    }

    /// Exploratory only: whether the meet coincides with the componentwise
    /// minimum of distance vectors on this diagram. Suggested by the
    /// coordinate system but not claimed anywhere; never relied upon.
    pub fn meet_is_componentwise_min(&self) -> Result<bool, LatticeError> {
        for a in 0..self.node_count() {
            for b in a..self.node_count() {
                let m = self.meet(a, b)?;
                let min: Vec<usize> = self.dvs[a]
                    .entries()
                    .iter()
                    .zip(self.dvs[b].entries())
                    .map(|(x, y)| *x.min(y))
                    .collect();
                if self.dvs[m].entries() != min {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// DOT digraph with path-string labels; edges run lower -> upper.
    pub fn export_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"tamari_m{}_n{}\" {{", self.m, self.n);
        for p in &self.nodes {
            let _ = writeln!(out, "  \"{p}\";");
        }
        for (i, cs) in self.covers.iter().enumerate() {
            for &c in cs {
                let _ = writeln!(out, "  \"{}\" -> \"{}\";", self.nodes[i], self.nodes[c as usize]);
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Iterator over all intervals of a diagram, grouped by lower path.
pub struct Intervals<'a> {
    h: &'a HasseDiagram,
    lower: usize,
    upper: usize,
    dist: Vec<i64>,
}

impl Iterator for Intervals<'_> {
    type Item = IntervalRecord;

    fn next(&mut self) -> Option<IntervalRecord> {
        loop {
            if self.lower >= self.h.node_count() {
                return None;
            }
            while self.upper <= self.lower {
                let u = self.upper;
                self.upper += 1;
                if self.dist[u] >= 0 {
                    debug_assert!(self.h.leq_idx(self.lower, u));
                    return Some(IntervalRecord {
                        lower: self.lower,
                        upper: u,
                        contacts_lower: self.h.contacts[self.lower] as usize,
                        initial_rise_upper: self.h.rises[u] as usize,
                        longest_chain: self.dist[u] as usize,
                    });
                }
            }
            self.lower += 1;
            self.upper = 0;
            if self.lower < self.h.node_count() {
                self.dist = self.h.longest_chains_from(self.lower);
            }
        }
    }
}

/// A pair of k-pointed paths `lower <= upper` with each upper mark weakly
/// right of the corresponding lower mark.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedInterval {
    pub lower: crate::paths::PointedPath,
    pub upper: crate::paths::PointedPath,
}

impl PointedInterval {
    /// Contacts of the lower path weakly right of its last mark (all
    /// contacts when k = 0).
    pub fn active_contacts(&self) -> usize {
        match self.lower.points().last() {
            None => self.lower.path().contacts(),
            Some(&pk) => {
                self.lower.path().contact_abscissas().iter().filter(|&&c| c >= pk).count()
            }
        }
    }

    /// The rise statistic of the pair: the initial rise of the upper path,
    /// counted as zero when the first mark sits at the origin. This is the
    /// statistic for which the pointed recursion holds coefficientwise.
    pub fn initial_rise(&self, m: usize) -> usize {
        if self.upper.points().first() == Some(&0) {
            return 0;
        }
        self.upper.path().initial_rise(m).expect("upper path is m-Dyck")
    }
}

/// All k-pointed intervals of the diagram, in deterministic order.
pub fn pointed_intervals(h: &HasseDiagram, k: usize) -> Vec<PointedInterval> {
    let mut out = Vec::new();
    for lower in 0..h.node_count() {
        for upper in 0..h.node_count() {
            if !h.leq_idx(lower, upper) {
                continue;
            }
            let lc = h.node(lower).contact_abscissas();
            let uc = h.node(upper).contact_abscissas();
            let mut stack: Vec<(Vec<usize>, Vec<usize>)> = alloc::vec![(Vec::new(), Vec::new())];
            for _ in 0..k {
                let mut next = Vec::new();
                for (ps, qs) in &stack {
                    let pmin = ps.last().copied().unwrap_or(0);
                    let qmin = qs.last().copied().unwrap_or(0);
                    for &p in lc.iter().filter(|&&p| p >= pmin) {
                        for &q in uc.iter().filter(|&&q| q >= qmin && q >= p) {
                            let mut ps2 = ps.clone();
                            let mut qs2 = qs.clone();
                            ps2.push(p);
                            qs2.push(q);
                            next.push((ps2, qs2));
                        }
                    }
                }
                stack = next;
            }
            for (ps, qs) in stack {
                out.push(PointedInterval {
                    lower: crate::paths::PointedPath::new(h.node(lower).clone(), ps)
                        .expect("contacts by construction"),
                    upper: crate::paths::PointedPath::new(h.node(upper).clone(), qs)
                        .expect("contacts by construction"),
                });
            }
        }
    }
    out
}

/// An (m+1)-ary tree: a leaf, or an internal node whose children are all
/// (m+1)-ary trees. Internal nodes carry exactly m+1 children.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tree {
    Leaf,
    Node(Vec<Tree>),
}

impl Tree {
    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf)
    }

    pub fn internal_count(&self) -> usize {
        match self {
            Tree::Leaf => 0,
            Tree::Node(cs) => 1 + cs.iter().map(Tree::internal_count).sum::<usize>(),
        }
    }

    fn preorder(&self) -> Vec<(Vec<usize>, bool)> {
        let mut out = Vec::new();
        fn walk(t: &Tree, addr: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, bool)>) {
            out.push((addr.clone(), t.is_leaf()));
            if let Tree::Node(cs) = t {
                for (i, c) in cs.iter().enumerate() {
                    addr.push(i);
                    walk(c, addr, out);
                    addr.pop();
                }
            }
        }
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    fn at(&self, addr: &[usize]) -> &Tree {
        match addr.split_first() {
            None => self,
            Some((&i, rest)) => match self {
                Tree::Node(cs) => cs[i].at(rest),
                Tree::Leaf => panic!("address into a leaf"),
            },
        }
    }

    fn replace(&mut self, addr: &[usize], with: Tree) {
        match addr.split_first() {
            None => *self = with,
            Some((&i, rest)) => match self {
                Tree::Node(cs) => cs[i].replace(rest, with),
                Tree::Leaf => panic!("address into a leaf"),
            },
        }
    }
}

/// Decodes an m-Dyck path as the prefix code of an (m+1)-ary tree: each
/// block of m up steps opens an internal node, each down step is a leaf,
/// and one final leaf is appended.
pub fn tree_view(p: &StepPath, m: usize) -> Result<Tree, LatticeError> {
    assert!(m >= 1);
    if !p.is_m_dyck(m) {
        return Err(LatticeError::NotMDyck);
    }
    let steps: Vec<Step> = p.steps().collect();
    let mut pos = 0usize;
    let t = parse_tree(&steps, &mut pos, m);
    debug_assert_eq!(pos, steps.len() + 1, "exactly the appended leaf remains");
    Ok(t)
}

fn parse_tree(steps: &[Step], pos: &mut usize, m: usize) -> Tree {
    if *pos >= steps.len() {
        // the appended final leaf
        *pos += 1;
        return Tree::Leaf;
    }
    match steps[*pos] {
        Step::Down => {
            *pos += 1;
            Tree::Leaf
        }
        Step::Up => {
            for k in 0..m {
                debug_assert_eq!(steps[*pos + k], Step::Up, "up steps come in blocks of m");
            }
            *pos += m;
            let children = (0..=m).map(|_| parse_tree(steps, pos, m)).collect();
            Tree::Node(children)
        }
    }
}

/// Inverse of [`tree_view`]: preorder encoding with the final leaf dropped.
pub fn tree_to_path(t: &Tree, m: usize) -> StepPath {
    let mut steps = Vec::new();
    fn emit(t: &Tree, m: usize, steps: &mut Vec<Step>) {
        match t {
            Tree::Leaf => steps.push(Step::Down),
            Tree::Node(cs) => {
                assert_eq!(cs.len(), m + 1, "internal nodes have m+1 children");
                for _ in 0..m {
                    steps.push(Step::Up);
                }
                for c in cs {
                    emit(c, m, steps);
                }
            }
        }
    }
    emit(t, m, &mut steps);
    let last = steps.pop();
    debug_assert_eq!(last, Some(Step::Down), "preorder ends with a leaf");
    StepPath::from_steps(steps).expect("preorder codes are valid paths")
}

/// Preorder positions (over all nodes) of the leaves at which a rotation
/// applies: leaves followed in preorder by an internal node.
pub fn rotation_sites(t: &Tree) -> Vec<usize> {
    let pre = t.preorder();
    (0..pre.len())
        .filter(|&i| pre[i].1 && i + 1 < pre.len() && !pre[i + 1].1)
        .collect()
}

/// The covering move on trees: for a leaf followed in preorder by an
/// internal node `v` with subtrees `T_0..T_m`, the node `v` with its first
/// m subtrees replaces the leaf, the leaf becomes the rightmost child of
/// `v`, and `T_m` takes the former place of `v`.
pub fn tree_rotate(t: &Tree, leaf: usize) -> Result<Tree, LatticeError> {
    let pre = t.preorder();
    if leaf >= pre.len() || !pre[leaf].1 {
        return Err(LatticeError::InvalidLeaf);
    }
    if leaf + 1 >= pre.len() || pre[leaf + 1].1 {
        return Err(LatticeError::InvalidLeaf);
    }
    let leaf_addr = pre[leaf].0.clone();
    let v_addr = pre[leaf + 1].0.clone();
    let Tree::Node(mut children) = t.at(&v_addr).clone() else { unreachable!() };
    let t_m = children.pop().expect("internal node has children");
    children.push(Tree::Leaf);
    let mut out = t.clone();
    out.replace(&v_addr, t_m);
    out.replace(&leaf_addr, Tree::Node(children));
    Ok(out)
}

/// All (m+1)-ary trees with n internal nodes, generated structurally
/// (independent of the path bijection).
pub fn generate_trees(m: usize, n: usize) -> Vec<Tree> {
    if n == 0 {
        return alloc::vec![Tree::Leaf];
    }
    // distribute the remaining n-1 internal nodes over m+1 children
    let mut out = Vec::new();
    let mut parts = alloc::vec![0usize; m + 1];
    distribute(m, n - 1, 0, &mut parts, &mut out);
    out
}

fn distribute(m: usize, left: usize, idx: usize, parts: &mut Vec<usize>, out: &mut Vec<Tree>) {
    if idx == m {
        parts[idx] = left;
        let choices: Vec<Vec<Tree>> = parts.iter().map(|&k| generate_trees(m, k)).collect();
        let mut pick = alloc::vec![0usize; m + 1];
        loop {
            out.push(Tree::Node(
                (0..=m).map(|i| choices[i][pick[i]].clone()).collect(),
            ));
            let mut i = m + 1;
            while i > 0 {
                i -= 1;
                pick[i] += 1;
                if pick[i] < choices[i].len() {
                    break;
                }
                pick[i] = 0;
                if i == 0 {
                    return;
                }
            }
        }
    } else {
        for k in 0..=left {
            parts[idx] = k;
            distribute(m, left - k, idx + 1, parts, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::format;
    use alloc::vec;

    fn p(s: &str) -> StepPath {
        StepPath::parse(s).unwrap()
    }

    #[test]
    fn covers_examples() {
        let cs = covers(&p("udud"));
        assert_eq!(cs, vec![p("uudd")]);
        assert!(covers(&p("uuuddd")).is_empty());
        for q in covers(&p("uudduudd")) {
            assert!(q.is_m_dyck(2));
        }
    }

    #[test]
    fn leq_examples() {
        assert_eq!(leq(&p("udud"), &p("uudd")), Ok(true));
        assert_eq!(leq(&p("udud"), &p("udud")), Ok(true));
        assert_eq!(leq(&p("uudd"), &p("udud")), Ok(false));
        assert_eq!(leq(&p("ud"), &p("uudd")), Err(LatticeError::SizeMismatch));
    }

    #[test]
    fn hasse_node_counts() {
        assert_eq!(HasseDiagram::build(1, 4).unwrap().node_count(), 14);
        assert_eq!(HasseDiagram::build(2, 3).unwrap().node_count(), 12);
        let h = HasseDiagram::build(1, 0).unwrap();
        assert_eq!(h.node_count(), 1);
        assert!(h.covers_of(0).is_empty());
    }

    #[test]
    fn hasse_cap() {
        match HasseDiagram::build_with_cap(1, 5, 10) {
            Err(LatticeError::ResourceLimit { expected, cap }) => {
                assert_eq!(expected, "42");
                assert_eq!(cap, 10);
            }
            Err(other) => panic!("expected ResourceLimit, got {other:?}"),
            Ok(_) => panic!("expected ResourceLimit, got a diagram"),
        }
    }

    #[test]
    fn unique_extrema() {
        for (m, n) in [(1usize, 4usize), (2, 3), (3, 2)] {
            let h = HasseDiagram::build(m, n).unwrap();
            let unit = "u".repeat(m) + &"d".repeat(m);
            assert_eq!(h.node(h.minimum()), &p(&unit.repeat(n)));
            assert_eq!(h.node(h.maximum()), &p(&("u".repeat(m * n) + &"d".repeat(m * n))));
            for v in 0..h.node_count() {
                assert!(h.leq_idx(h.minimum(), v));
                assert!(h.leq_idx(v, h.maximum()));
            }
        }
    }

    #[test]
    fn interval_counts_small() {
        assert_eq!(HasseDiagram::build(1, 2).unwrap().interval_count(), 3);
        assert_eq!(HasseDiagram::build(2, 3).unwrap().interval_count(), 58);
    }

    #[test]
    fn longest_chain_multiset() {
        let h = HasseDiagram::build(1, 2).unwrap();
        let mut chains: Vec<usize> = h.intervals().map(|r| r.longest_chain).collect();
        chains.sort_unstable();
        assert_eq!(chains, vec![0, 0, 1]);
    }

    #[test]
    fn interval_table_joint() {
        let h = HasseDiagram::build(1, 2).unwrap();
        let t = h.interval_table();
        assert_eq!(t.total, 3);
        assert_eq!(t.by_contacts, vec![(2, 1), (3, 2)]);
        assert_eq!(t.joint, vec![((1, 2, 0), 1), ((2, 1, 0), 1), ((2, 2, 1), 1)]);
    }

    #[test]
    fn joint_marginal_is_symmetric() {
        for (m, n) in [(1usize, 4usize), (2, 3)] {
            let t = HasseDiagram::build(m, n).unwrap().interval_table();
            let mut marginal: BTreeMap<(usize, usize), u64> = BTreeMap::new();
            for (&(c, r, _), &count) in t.joint.iter().map(|(k, v)| (k, v)) {
                *marginal.entry((c, r)).or_insert(0) += count;
            }
            for (&(c, r), &count) in &marginal {
                assert_eq!(marginal.get(&(r, c)), Some(&count));
            }
        }
    }

    #[test]
    fn meet_join_basics() {
        let h = HasseDiagram::build(1, 3).unwrap();
        for v in 0..h.node_count() {
            assert_eq!(h.meet(v, v), Ok(v));
            assert_eq!(h.join(v, v), Ok(v));
        }
        let a = h.index_of(&p("ududud")).unwrap();
        let b = h.index_of(&p("uuddud")).unwrap();
        assert_eq!(h.meet(a, b), Ok(a));
        assert_eq!(h.join(a, b), Ok(b));
        // join of the two atoms, against a brute-force oracle over the
        // 5-element diagram
        let atoms: Vec<usize> = h.covers_of(h.minimum()).iter().map(|&c| c as usize).collect();
        assert_eq!(atoms.len(), 2);
        let ub: Vec<usize> = (0..h.node_count())
            .filter(|&v| h.leq_idx(atoms[0], v) && h.leq_idx(atoms[1], v))
            .collect();
        let oracle = *ub
            .iter()
            .find(|&&v| ub.iter().all(|&w| h.leq_idx(v, w)))
            .expect("least upper bound exists");
        assert_eq!(h.join(atoms[0], atoms[1]), Ok(oracle));
    }

    #[test]
    fn dot_export_shape() {
        let dot = HasseDiagram::build(1, 2).unwrap().export_dot();
        let nodes = dot.lines().filter(|l| l.ends_with("\";") && !l.contains("->")).count();
        let edges = dot.lines().filter(|l| l.contains("->")).count();
        assert_eq!(nodes, 2);
        assert_eq!(edges, 1);
        assert!(dot.contains("\"udud\" -> \"uudd\";"));
    }

    #[test]
    fn pointed_examples() {
        let h = HasseDiagram::build(1, 1).unwrap();
        let k0 = pointed_intervals(&h, 0);
        assert_eq!(k0.len(), 1);
        assert_eq!(k0[0].active_contacts(), 2);
        let k1 = pointed_intervals(&h, 1);
        assert_eq!(k1.len(), 3);
        let mut stats: Vec<(usize, usize)> =
            k1.iter().map(|pi| (pi.active_contacts(), pi.initial_rise(1))).collect();
        stats.sort_unstable();
        assert_eq!(stats, vec![(1, 1), (2, 0), (2, 1)]);
    }

    #[test]
    fn tree_round_trip_and_counts() {
        for m in 1..=2usize {
            for n in 0..=4usize {
                let paths = crate::paths::generate_m_dyck(m, n);
                let trees = generate_trees(m, n);
                assert_eq!(paths.len(), trees.len());
                let mut seen = BTreeSet::new();
                for path in &paths {
                    let t = tree_view(path, m).unwrap();
                    assert_eq!(t.internal_count(), n);
                    assert_eq!(&tree_to_path(&t, m), path);
                    seen.insert(format!("{t:?}"));
                }
                assert_eq!(seen.len(), paths.len());
            }
        }
    }

    #[test]
    fn tree_rotation_matches_covers() {
        // the rotation graph is isomorphic to the cover DAG via the coding
        for m in 1..=2usize {
            for n in 1..=4usize {
                for path in crate::paths::generate_m_dyck(m, n) {
                    let t = tree_view(&path, m).unwrap();
                    let mut rotated: Vec<StepPath> = rotation_sites(&t)
                        .into_iter()
                        .map(|leaf| tree_to_path(&tree_rotate(&t, leaf).unwrap(), m))
                        .collect();
                    rotated.sort();
                    let mut cov = covers(&path);
                    cov.sort();
                    assert_eq!(rotated, cov);
                }
            }
        }
    }

    #[test]
    fn tree_rotate_binary_example() {
        let t = tree_view(&p("udud"), 1).unwrap();
        let sites = rotation_sites(&t);
        assert_eq!(sites.len(), 1);
        let r = tree_rotate(&t, sites[0]).unwrap();
        assert_eq!(tree_to_path(&r, 1), p("uudd"));
        // a single internal node admits no rotation
        let single = tree_view(&p("ud"), 1).unwrap();
        assert!(rotation_sites(&single).is_empty());
        assert_eq!(tree_rotate(&single, 0), Err(LatticeError::InvalidLeaf));
        assert_eq!(tree_rotate(&single, 1), Err(LatticeError::InvalidLeaf));
        assert_eq!(tree_rotate(&single, 9), Err(LatticeError::InvalidLeaf));
    }

    #[test]
    fn ternary_rotation_graph() {
        // m=2, n=2: 3 trees, rotation graph isomorphic to the cover DAG
        let h = HasseDiagram::build(2, 2).unwrap();
        assert_eq!(h.node_count(), 3);
        let total_edges: usize = (0..3).map(|v| h.covers_of(v).len()).sum();
        let total_rotations: usize = (0..3)
            .map(|v| rotation_sites(&tree_view(h.node(v), 2).unwrap()).len())
            .sum();
        assert_eq!(total_edges, total_rotations);
    }
}
