//! m-ballot and m-Dyck paths and their structural primitives.
//!
//! Paths are stored one bit per step (1 = up), packed into `u64` words with
//! the earliest step in the most significant bit. The comparison order on
//! paths is lexicographic on the step sequence with up < down; generated
//! node lists are sorted in this order, which fixes the node indices of the
//! Hasse diagrams built on top.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// A single step of a Dyck path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Up,
    Down,
}

/// A single step of a ballot path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BallotStep {
    North,
    East,
}

/// Errors produced by path construction and path operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathError {
    /// The numbers of up and down steps differ.
    UnbalancedPath,
    /// Some prefix has more down than up steps.
    BelowAxis,
    /// A character outside the expected alphabet.
    BadCharacter(char),
    /// The path is not an m-Dyck path for the requested m.
    NotMDyck,
    /// The operation requires a nonempty path.
    EmptyPath,
    /// A marked point is not a contact of the path, or points are not
    /// weakly increasing.
    InvalidPoints,
}

impl fmt::Display for PathError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathError::UnbalancedPath => write!(f, "up and down step counts differ"),
            PathError::BelowAxis => write!(f, "path goes below the x-axis"),
            PathError::BadCharacter(c) => write!(f, "unexpected character {c:?}"),
            PathError::NotMDyck => write!(f, "path is not an m-Dyck path"),
            PathError::EmptyPath => write!(f, "path is empty"),
            PathError::InvalidPoints => write!(f, "marked points are not weakly increasing contacts"),
        }
    }
}

/// A Dyck path: balanced up/down steps never going below the x-axis.
///
/// `size()` is the number of up steps (half the length). The empty path is
/// valid everywhere; it has one contact and an empty distance vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StepPath {
    words: Vec<u64>,
    len: usize,
}

impl StepPath {
    /// The empty path (a single vertex at the origin).
    pub fn empty() -> Self {
        StepPath { words: Vec::new(), len: 0 }
    }

    /// Builds a path from steps, validating balance and the prefix condition.
    pub fn from_steps<I: IntoIterator<Item = Step>>(steps: I) -> Result<Self, PathError> {
        let mut b = PathBuilder::new();
        for s in steps {
            b.push(s);
        }
        b.finish()
    }

    /// Parses a string of `u`/`d` characters.
    pub fn parse(s: &str) -> Result<Self, PathError> {
        let mut b = PathBuilder::new();
        for c in s.chars() {
            match c {
                'u' => b.push(Step::Up),
                'd' => b.push(Step::Down),
                _ => return Err(PathError::BadCharacter(c)),
            }
        }
        b.finish()
    }

    /// Number of steps (twice the size).
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Half-size: the number of up steps.
    pub fn size(&self) -> usize {
        self.len / 2
    }

    /// The step at 0-based index `i`.
    pub fn step(&self, i: usize) -> Step {
        debug_assert!(i < self.len);
        let bit = (self.words[i >> 6] >> (63 - (i & 63))) & 1;
        if bit == 1 {
            Step::Up
        } else {
            Step::Down
        }
    }

    /// Iterates over the steps in order.
    pub fn steps(&self) -> impl Iterator<Item = Step> + '_ {
        (0..self.len).map(move |i| self.step(i))
    }

    /// Ordinates of the 2N+1 vertices of the path, in abscissa order.
    pub fn height_profile(&self) -> Vec<usize> {
        let mut h = Vec::with_capacity(self.len + 1);
        let mut cur = 0usize;
        h.push(0);
        for s in self.steps() {
            match s {
                Step::Up => cur += 1,
                Step::Down => cur -= 1,
            }
            h.push(cur);
        }
        h
    }

    /// True iff the size is a multiple of `m` and the up steps of ranks
    /// `mi+1, ..., m(i+1)` are consecutive in the step sequence for every
    /// block index `i`.
    pub fn is_m_dyck(&self, m: usize) -> bool {
        assert!(m >= 1);
        if self.size() % m != 0 {
            return false;
        }
        let mut ups = 0usize;
        let mut prev_up = false;
        for s in self.steps() {
            match s {
                Step::Up => {
                    // an up step that is not first in its block must extend a run
                    if ups % m != 0 && !prev_up {
                        return false;
                    }
                    ups += 1;
                    prev_up = true;
                }
                Step::Down => prev_up = false,
            }
        }
        true
    }

    /// The distance vector: entry `i` is the size of the excursion of the
    /// up step of rank `i+1`.
    pub fn distance_vector(&self) -> DistanceVector {
        let n = self.size();
        let mut entries = alloc::vec![0usize; n];
        let mut stack: Vec<usize> = Vec::with_capacity(n);
        let mut ups = 0usize;
        for s in self.steps() {
            match s {
                Step::Up => {
                    stack.push(ups);
                    ups += 1;
                }
                Step::Down => {
                    let rank0 = stack.pop().expect("valid path");
                    // every up step of the excursion has been seen by now
                    entries[rank0] = ups - rank0;
                }
            }
        }
        DistanceVector(entries)
    }

    /// 0-based index of the down step closing the excursion of the up step
    /// of 1-based rank `rank`.
    pub fn match_of_up(&self, rank: usize) -> usize {
        assert!(rank >= 1 && rank <= self.size());
        let mut stack: Vec<usize> = Vec::new();
        let mut ups = 0usize;
        for (i, s) in self.steps().enumerate() {
            match s {
                Step::Up => {
                    ups += 1;
                    stack.push(ups);
                }
                Step::Down => {
                    if stack.pop().expect("valid path") == rank {
                        return i;
                    }
                }
            }
        }
        unreachable!("every up step is matched in a valid path")
    }

    /// 1-based rank of the up step matched with the down step at 0-based
    /// index `down_index`.
    pub fn match_of_down(&self, down_index: usize) -> usize {
        assert!(down_index < self.len);
        let mut stack: Vec<usize> = Vec::new();
        let mut ups = 0usize;
        for (i, s) in self.steps().enumerate() {
            match s {
                Step::Up => {
                    ups += 1;
                    stack.push(ups);
                }
                Step::Down => {
                    let rank = stack.pop().expect("valid path");
                    if i == down_index {
                        return rank;
                    }
                }
            }
        }
        panic!("step at index {down_index} is not a down step")
    }

    /// Number of vertices on the x-axis, including the two endpoints.
    pub fn contacts(&self) -> usize {
        self.contact_abscissas().len()
    }

    /// Abscissas of the contacts, in increasing order. The empty path has
    /// the single contact 0.
    pub fn contact_abscissas(&self) -> Vec<usize> {
        let mut out = alloc::vec![0usize];
        let mut h = 0isize;
        for (i, s) in self.steps().enumerate() {
            match s {
                Step::Up => h += 1,
                Step::Down => h -= 1,
            }
            if h == 0 {
                out.push(i + 1);
            }
        }
        out
    }

    /// Initial rise: length of the maximal initial run of up steps divided
    /// by `m`. Errors unless the path is an m-Dyck path.
    pub fn initial_rise(&self, m: usize) -> Result<usize, PathError> {
        if !self.is_m_dyck(m) {
            return Err(PathError::NotMDyck);
        }
        let run = self.steps().take_while(|s| *s == Step::Up).count();
        debug_assert!(run % m == 0);
        Ok(run / m)
    }

    fn from_bits(words: Vec<u64>, len: usize) -> Self {
        StepPath { words, len }
    }
}

impl fmt::Display for StepPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.steps() {
            f.write_str(if s == Step::Up { "u" } else { "d" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for StepPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl Ord for StepPath {
    fn cmp(&self, other: &Self) -> Ordering {
        // lexicographic on steps with up < down; up is encoded as 1, so the
        // word comparison is reversed
        let common = core::cmp::min(self.len, other.len);
        let full = common >> 6;
        for i in 0..full {
            match self.words[i].cmp(&other.words[i]) {
                Ordering::Equal => {}
                ord => return ord.reverse(),
            }
        }
        let rem = common & 63;
        if rem > 0 {
            let mask = !0u64 << (64 - rem);
            match (self.words[full] & mask).cmp(&(other.words[full] & mask)) {
                Ordering::Equal => {}
                ord => return ord.reverse(),
            }
        }
        self.len.cmp(&other.len)
    }
}

impl PartialOrd for StepPath {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Incremental path builder used by parsing, generation and rotation.
pub(crate) struct PathBuilder {
    words: Vec<u64>,
    len: usize,
    height: isize,
    below: bool,
}

impl PathBuilder {
    pub fn new() -> Self {
        PathBuilder { words: Vec::new(), len: 0, height: 0, below: false }
    }

    pub fn push(&mut self, s: Step) {
        if self.len & 63 == 0 {
            self.words.push(0);
        }
        match s {
            Step::Up => {
                let i = self.len;
                *self.words.last_mut().unwrap() |= 1u64 << (63 - (i & 63));
                self.height += 1;
            }
            Step::Down => {
                self.height -= 1;
                if self.height < 0 {
                    self.below = true;
                }
            }
        }
        self.len += 1;
    }

    pub fn finish(self) -> Result<StepPath, PathError> {
        if self.height != 0 {
            Err(PathError::UnbalancedPath)
        } else if self.below {
            Err(PathError::BelowAxis)
        } else {
            Ok(StepPath::from_bits(self.words, self.len))
        }
    }
}

/// Componentwise-comparable vector of excursion sizes, in rank order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DistanceVector(Vec<usize>);

impl DistanceVector {
    pub fn new(entries: Vec<usize>) -> Self {
        DistanceVector(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Componentwise `self[i] <= other[i]`; requires equal lengths.
    pub fn leq(&self, other: &DistanceVector) -> bool {
        assert_eq!(self.0.len(), other.0.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

/// An m-ballot path: north/east steps from the origin to `(mn, n)` never
/// going below the line `{x = my}`.
///
/// The above-the-line condition is awkward to state in raw coordinates; the
/// authoritative validity test is the round trip through [`BallotPath::to_dyck`],
/// which is how the constructor validates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BallotPath {
    m: usize,
    steps: Vec<BallotStep>,
}

impl BallotPath {
    /// Builds and validates an m-ballot path.
    pub fn new(m: usize, steps: Vec<BallotStep>) -> Result<Self, PathError> {
        assert!(m >= 1);
        let b = BallotPath { m, steps };
        // validity of the ballot path is exactly validity of its Dyck image
        let mut pb = PathBuilder::new();
        for s in &b.steps {
            match s {
                BallotStep::North => {
                    for _ in 0..m {
                        pb.push(Step::Up);
                    }
                }
                BallotStep::East => pb.push(Step::Down),
            }
        }
        pb.finish()?;
        Ok(b)
    }

    /// Parses a string of `N`/`E` characters.
    pub fn parse(m: usize, s: &str) -> Result<Self, PathError> {
        let mut steps = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                'N' => steps.push(BallotStep::North),
                'E' => steps.push(BallotStep::East),
                _ => return Err(PathError::BadCharacter(c)),
            }
        }
        BallotPath::new(m, steps)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn steps(&self) -> &[BallotStep] {
        &self.steps
    }

    /// Number of north steps.
    pub fn size(&self) -> usize {
        self.steps.iter().filter(|s| **s == BallotStep::North).count()
    }

    /// Replaces each north step by m up steps and each east step by a down
    /// step. The image is an m-Dyck path of size mn.
    pub fn to_dyck(&self) -> StepPath {
        let mut pb = PathBuilder::new();
        for s in &self.steps {
            match s {
                BallotStep::North => {
                    for _ in 0..self.m {
                        pb.push(Step::Up);
                    }
                }
                BallotStep::East => pb.push(Step::Down),
            }
        }
        pb.finish().expect("validated at construction")
    }

    /// Inverse of [`BallotPath::to_dyck`]: groups each maximal up run of
    /// length `km` into k north steps.
    pub fn from_dyck(p: &StepPath, m: usize) -> Result<Self, PathError> {
        assert!(m >= 1);
        if !p.is_m_dyck(m) {
            return Err(PathError::NotMDyck);
        }
        let mut steps = Vec::with_capacity(p.len());
        let mut run = 0usize;
        for s in p.steps() {
            match s {
                Step::Up => run += 1,
                Step::Down => {
                    debug_assert!(run % m == 0);
                    for _ in 0..run / m {
                        steps.push(BallotStep::North);
                    }
                    run = 0;
                    steps.push(BallotStep::East);
                }
            }
        }
        debug_assert_eq!(run, 0);
        Ok(BallotPath { m, steps })
    }
}

impl fmt::Display for BallotPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(if *s == BallotStep::North { "N" } else { "E" })?;
        }
        Ok(())
    }
}

/// A Dyck path together with k marked contacts, stored as a weakly
/// increasing sequence of abscissas (marks may coincide).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointedPath {
    path: StepPath,
    points: Vec<usize>,
}

impl PointedPath {
    pub fn new(path: StepPath, points: Vec<usize>) -> Result<Self, PathError> {
        let contacts = path.contact_abscissas();
        let mut prev = 0usize;
        for (idx, &p) in points.iter().enumerate() {
            if idx > 0 && p < prev {
                return Err(PathError::InvalidPoints);
            }
            if !contacts.contains(&p) {
                return Err(PathError::InvalidPoints);
            }
            prev = p;
        }
        Ok(PointedPath { path, points })
    }

    pub fn path(&self) -> &StepPath {
        &self.path
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn k(&self) -> usize {
        self.points.len()
    }
}

/// Contracts the m initial up steps and their matched down steps.
///
/// The marked points of the result are the contraction images of the matched
/// down steps, listed in weakly increasing abscissa order (innermost match
/// first). The result path is an m-Dyck path of size `m(n-1)`.
pub fn m_reduction(p: &StepPath, m: usize) -> Result<PointedPath, PathError> {
    assert!(m >= 1);
    if !p.is_m_dyck(m) {
        return Err(PathError::NotMDyck);
    }
    if p.is_empty() {
        return Err(PathError::EmptyPath);
    }
    // matches of the first m up steps; nested, so q_1 > q_2 > ... > q_m
    let matches: Vec<usize> = (1..=m).map(|rank| p.match_of_up(rank)).collect();
    let mut pb = PathBuilder::new();
    for (i, s) in p.steps().enumerate() {
        if i < m || matches.contains(&i) {
            continue;
        }
        pb.push(s);
    }
    let reduced = pb.finish().expect("contraction preserves validity");
    // image abscissa of the match of rank i (1-based): q_i + i - 2m
    let mut points: Vec<usize> =
        matches.iter().enumerate().map(|(i0, &q)| q + (i0 + 1) - 2 * m).collect();
    points.reverse();
    debug_assert!(points.windows(2).all(|w| w[0] <= w[1]));
    PointedPath::new(reduced, points)
}

/// Inverse of [`m_reduction`]: prepends m up steps and re-inserts a down
/// step at each marked contact.
pub fn m_expansion(pp: &PointedPath) -> Result<StepPath, PathError> {
    let m = pp.k();
    assert!(m >= 1);
    if !pp.path().is_m_dyck(m) {
        return Err(PathError::NotMDyck);
    }
    let mut pb = PathBuilder::new();
    for _ in 0..m {
        pb.push(Step::Up);
    }
    let mut next = 0usize;
    for (j, s) in pp.path().steps().enumerate() {
        while next < m && pp.points()[next] == j {
            pb.push(Step::Down);
            next += 1;
        }
        pb.push(s);
    }
    while next < m {
        debug_assert_eq!(pp.points()[next], pp.path().len());
        pb.push(Step::Down);
        next += 1;
    }
    pb.finish()
}

/// Distance vector of the expansion, computed from the reduced vector and
/// the marked points `(2x_1, ..., 2x_m)`: prepends
/// `(x_m + m, x_{m-1} + m - 1, ..., x_1 + 1)`.
pub fn prepend_distance(dv: &DistanceVector, points: &[usize]) -> DistanceVector {
    let m = points.len();
    debug_assert!(points.iter().all(|p| p % 2 == 0));
    let mut entries = Vec::with_capacity(m + dv.len());
    for i in (0..m).rev() {
        entries.push(points[i] / 2 + i + 1);
    }
    entries.extend_from_slice(dv.entries());
    DistanceVector(entries)
}

/// All m-Dyck paths of size mn, in lexicographic order (up < down).
pub fn generate_m_dyck(m: usize, n: usize) -> Vec<StepPath> {
    assert!(m >= 1);
    let mut out = Vec::new();
    let mut steps: Vec<Step> = Vec::with_capacity(2 * m * n);
    gen_rec(m, m * n, 0, 0, &mut steps, &mut out);
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    out
}

fn gen_rec(
    m: usize,
    total_ups: usize,
    ups: usize,
    downs: usize,
    steps: &mut Vec<Step>,
    out: &mut Vec<StepPath>,
) {
    if ups == total_ups && downs == total_ups {
        out.push(StepPath::from_steps(steps.iter().copied()).expect("generated valid"));
        return;
    }
    let mid_block = ups % m != 0;
    if ups < total_ups {
        steps.push(Step::Up);
        gen_rec(m, total_ups, ups + 1, downs, steps, out);
        steps.pop();
    }
    if !mid_block && downs < ups {
        steps.push(Step::Down);
        gen_rec(m, total_ups, ups, downs + 1, steps, out);
        steps.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;

    fn p(s: &str) -> StepPath {
        StepPath::parse(s).unwrap()
    }

    #[test]
    fn parse_smallest() {
        assert_eq!(p("ud").size(), 1);
        assert_eq!(p("uudd").size(), 2);
        assert_eq!(StepPath::parse("").unwrap().size(), 0);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(StepPath::parse("ududd"), Err(PathError::UnbalancedPath));
        assert_eq!(StepPath::parse("duud"), Err(PathError::BelowAxis));
        assert_eq!(StepPath::parse("uxd"), Err(PathError::BadCharacter('x')));
    }

    #[test]
    fn display_round_trip() {
        for s in ["", "ud", "uudd", "uuduuddd", "ududud"] {
            assert_eq!(format!("{}", p(s)), s);
        }
    }

    #[test]
    fn m_dyck_recognition() {
        assert!(p("uudd").is_m_dyck(2));
        assert!(p("uuduuddd").is_m_dyck(2));
        assert!(!p("uududd").is_m_dyck(2));
        assert!(p("").is_m_dyck(3));
        // every path is a 1-Dyck path
        assert!(p("ududud").is_m_dyck(1));
    }

    #[test]
    fn distance_vectors() {
        assert_eq!(p("uudd").distance_vector().entries(), &[2, 1]);
        assert_eq!(p("udud").distance_vector().entries(), &[1, 1]);
        let n = 7;
        let nested = p(&format!("{}{}", "u".repeat(n), "d".repeat(n)));
        let expect: Vec<usize> = (1..=n).rev().collect();
        assert_eq!(nested.distance_vector().entries(), &expect[..]);
        assert!(p("").distance_vector().is_empty());
    }

    #[test]
    fn matches() {
        // ranks are 1-based, step indices 0-based
        assert_eq!(p("uudd").match_of_up(1), 3);
        assert_eq!(p("uudd").match_of_up(2), 2);
        assert_eq!(p("ud").match_of_up(1), 1);
        assert_eq!(p("uudd").match_of_down(3), 1);
        assert_eq!(p("uudd").match_of_down(2), 2);
    }

    #[test]
    fn contacts_count() {
        assert_eq!(p("udud").contacts(), 3);
        assert_eq!(p("uudd").contacts(), 2);
        assert_eq!(p("").contacts(), 1);
        assert_eq!(p("udud").contact_abscissas(), vec![0, 2, 4]);
    }

    #[test]
    fn initial_rises() {
        assert_eq!(p("uudd").initial_rise(2), Ok(1));
        assert_eq!(p("uuuudddd").initial_rise(2), Ok(2));
        assert_eq!(p("uuduuddd").initial_rise(2), Ok(1));
        assert_eq!(p("ududud").initial_rise(2), Err(PathError::NotMDyck));
    }

    #[test]
    fn ballot_dyck_examples() {
        let b = BallotPath::parse(1, "NENE").unwrap();
        assert_eq!(format!("{}", b.to_dyck()), "udud");
        let b = BallotPath::parse(2, "NNEEEE").unwrap();
        assert_eq!(format!("{}", b.to_dyck()), "uuuudddd");
        let b = BallotPath::parse(2, "NEENEE").unwrap();
        assert_eq!(format!("{}", b.to_dyck()), "uudduudd");
        assert!(BallotPath::parse(2, "NEEE").is_err());
        assert_eq!(BallotPath::parse(1, "EN"), Err(PathError::BelowAxis));
    }

    #[test]
    fn ballot_round_trip_small() {
        for m in 1..=3usize {
            for n in 0..=3usize {
                for path in generate_m_dyck(m, n) {
                    let b = BallotPath::from_dyck(&path, m).unwrap();
                    assert_eq!(b.to_dyck(), path);
                }
            }
        }
    }

    #[test]
    fn reduction_examples() {
        let r = m_reduction(&p("uudd"), 1).unwrap();
        assert_eq!(format!("{}", r.path()), "ud");
        assert_eq!(r.points(), &[2]);

        let r = m_reduction(&p("uuuudddd"), 2).unwrap();
        assert_eq!(format!("{}", r.path()), "uudd");
        assert_eq!(r.points(), &[4, 4]);

        let r = m_reduction(&p("uudd"), 2).unwrap();
        assert!(r.path().is_empty());
        assert_eq!(r.points(), &[0, 0]);

        let r = m_reduction(&p("uuduuddd"), 2).unwrap();
        assert_eq!(format!("{}", r.path()), "uudd");
        assert_eq!(r.points(), &[0, 4]);

        assert_eq!(m_reduction(&p(""), 1), Err(PathError::EmptyPath));
        assert_eq!(m_reduction(&p("udud"), 2), Err(PathError::NotMDyck));
    }

    #[test]
    fn expansion_inverts_reduction() {
        for m in 1..=3usize {
            for n in 1..=4usize {
                for path in generate_m_dyck(m, n) {
                    let r = m_reduction(&path, m).unwrap();
                    assert_eq!(m_expansion(&r).unwrap(), path);
                }
            }
        }
    }

    #[test]
    fn reduction_inverts_expansion() {
        // enumerate all m-pointed m-Dyck paths of size m(n-1) and round-trip
        for m in 1..=3usize {
            for n in 1..=3usize {
                for path in generate_m_dyck(m, n - 1) {
                    let contacts = path.contact_abscissas();
                    let mut tuples: Vec<Vec<usize>> = vec![vec![]];
                    for _ in 0..m {
                        let mut next = Vec::new();
                        for t in &tuples {
                            let lo = t.last().copied().unwrap_or(0);
                            for &c in contacts.iter().filter(|&&c| c >= lo) {
                                let mut t2 = t.clone();
                                t2.push(c);
                                next.push(t2);
                            }
                        }
                        tuples = next;
                    }
                    for points in tuples {
                        let pp = PointedPath::new(path.clone(), points).unwrap();
                        let big = m_expansion(&pp).unwrap();
                        assert!(big.is_m_dyck(m));
                        assert_eq!(m_reduction(&big, m).unwrap(), pp);
                    }
                }
            }
        }
    }

    #[test]
    fn prepend_distance_examples() {
        let dv = prepend_distance(&DistanceVector::new(vec![]), &[0]);
        assert_eq!(dv.entries(), &[1]);
        let dv = prepend_distance(&DistanceVector::new(vec![1]), &[2]);
        assert_eq!(dv.entries(), &[2, 1]);
        let dv = prepend_distance(&DistanceVector::new(vec![2, 1]), &[4, 4]);
        assert_eq!(dv.entries(), &[4, 3, 2, 1]);
    }

    #[test]
    fn prepend_distance_matches_expansion() {
        for m in 1..=3usize {
            for n in 1..=4usize {
                for path in generate_m_dyck(m, n) {
                    let r = m_reduction(&path, m).unwrap();
                    let dv = prepend_distance(&r.path().distance_vector(), r.points());
                    assert_eq!(dv, path.distance_vector());
                }
            }
        }
    }

    #[test]
    fn generation_counts_and_order() {
        // Fuss-Catalan path counts, exhaustive generation
        let catalan = [1usize, 1, 2, 5, 14, 42];
        for n in 0..=5 {
            assert_eq!(generate_m_dyck(1, n).len(), catalan[n]);
        }
        assert_eq!(generate_m_dyck(2, 3).len(), 12);
        assert_eq!(generate_m_dyck(3, 2).len(), 4);
        let all = generate_m_dyck(1, 3);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        // lexicographically first path is the maximum element u^n d^n
        assert_eq!(format!("{}", all[0]), "uuuddd");
    }

    #[test]
    fn contacts_bound() {
        for m in 1..=3usize {
            for n in 0..=4usize {
                let unit = "u".repeat(m) + &"d".repeat(m);
                let min_path = StepPath::parse(&unit.repeat(n)).unwrap();
                for path in generate_m_dyck(m, n) {
                    let c = path.contacts();
                    assert!(c <= n + 1);
                    assert_eq!(c == n + 1, path == min_path);
                }
            }
        }
    }

    #[test]
    fn pointed_path_validation() {
        assert!(PointedPath::new(p("udud"), vec![0, 2]).is_ok());
        assert_eq!(
            PointedPath::new(p("udud"), vec![2, 0]),
            Err(PathError::InvalidPoints)
        );
        assert_eq!(
            PointedPath::new(p("udud"), vec![1]),
            Err(PathError::InvalidPoints)
        );
    }
}
