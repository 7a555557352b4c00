//! Brute-force triangulation oracle: exhaustive enumeration of the
//! triangulations of a convex n-gon and exact per-class diagonal counts.
//!
//! Vertices are labeled `0..n` counterclockwise. In a regular n-gon two
//! segments are parallel exactly when their endpoint sums agree modulo `n`,
//! so each residue `s` names a direction class.
//!
//! Every sub-polygon met during enumeration is a contiguous arc `lo..=hi` of
//! the original boundary closed by the segment `(lo, hi)`. Splitting an arc
//! at an apex `a` fixes the triangle `(lo, a, hi)` sitting on the closing
//! segment and leaves the arcs `(lo, a)` and `(a, hi)`, so the whole walk
//! works on index pairs and the cost per triangulation stays O(1) amortized.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::Error;

/// Vertex label of an `n`-gon, in `0..n`.
pub type Vertex = u32;

/// An undirected polygon segment, stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    a: Vertex,
    b: Vertex,
}

impl Segment {
    /// Canonicalizes the endpoint order. Panics if `a == b`.
    pub fn new(a: Vertex, b: Vertex) -> Self {
        assert_ne!(a, b, "segment endpoints must be distinct");
        if a < b {
            Segment { a, b }
        } else {
            Segment { a: b, b: a }
        }
    }

    pub fn a(self) -> Vertex {
        self.a
    }

    pub fn b(self) -> Vertex {
        self.b
    }

    /// True when the endpoints are adjacent on the `n`-gon boundary.
    pub fn is_side(self, n: u32) -> bool {
        self.b - self.a == 1 || (self.a == 0 && self.b == n - 1)
    }

    pub fn is_diagonal(self, n: u32) -> bool {
        !self.is_side(n)
    }

    pub fn direction_class(self, n: u32) -> DirectionClass {
        DirectionClass::new(n, (self.a + self.b) % n)
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// The segments `xy` of an `n`-gon with `x + y = s (mod n)`: a maximal set
/// of mutually parallel segments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DirectionClass {
    n: u32,
    s: u32,
}

impl DirectionClass {
    /// Panics unless `s < n`.
    pub fn new(n: u32, s: u32) -> Self {
        assert!(s < n, "class residue {s} out of range for an {n}-gon");
        DirectionClass { n, s }
    }

    pub fn of_segment(n: u32, seg: Segment) -> Self {
        seg.direction_class(n)
    }

    pub fn n(self) -> u32 {
        self.n
    }

    pub fn s(self) -> u32 {
        self.s
    }

    pub fn contains(self, seg: Segment) -> bool {
        (seg.a + seg.b) % self.n == self.s
    }
}

/// Two segments of a regular `n`-gon are parallel iff their endpoint sums are
/// congruent modulo `n`. Every segment is parallel to itself.
pub fn is_parallel(n: u32, e1: Segment, e2: Segment) -> bool {
    (e1.a + e1.b) % n == (e2.a + e2.b) % n
}

/// Strict interior crossing; segments sharing an endpoint never cross.
pub fn segments_cross(s1: Segment, s2: Segment) -> bool {
    if s1.a == s2.a || s1.a == s2.b || s1.b == s2.a || s1.b == s2.b {
        return false;
    }
    let inside = |v: Vertex| s1.a < v && v < s1.b;
    inside(s2.a) != inside(s2.b)
}

/// A triangulation of the `n`-gon: `n - 3` pairwise non-crossing diagonals,
/// kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangulation {
    n: u32,
    diagonals: Vec<Segment>,
}

impl Triangulation {
    /// Validates and canonicalizes a diagonal set for an `n`-gon.
    pub fn new(n: u32, mut diagonals: Vec<Segment>) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::PolygonTooSmall(n));
        }
        for seg in &diagonals {
            if seg.b >= n {
                return Err(Error::VertexOutOfRange { label: seg.b, n });
            }
            if seg.is_side(n) {
                return Err(Error::NotADiagonal(*seg));
            }
        }
        diagonals.sort_unstable();
        for w in diagonals.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateDiagonal(w[0]));
            }
        }
        if diagonals.len() != (n - 3) as usize {
            return Err(Error::WrongDiagonalCount {
                n,
                expected: n - 3,
                got: diagonals.len() as u32,
            });
        }
        for (i, &s1) in diagonals.iter().enumerate() {
            for &s2 in &diagonals[i + 1..] {
                if segments_cross(s1, s2) {
                    return Err(Error::CrossingDiagonals(s1, s2));
                }
            }
        }
        Ok(Triangulation { n, diagonals })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Sorted diagonal list.
    pub fn diagonals(&self) -> &[Segment] {
        &self.diagonals
    }
}

/// Diagonals of `t` parallel to the given direction class.
///
/// Panics if the class belongs to a different polygon size.
pub fn count_parallel_diagonals(t: &Triangulation, cls: DirectionClass) -> u32 {
    assert_eq!(cls.n, t.n, "class and triangulation sizes must match");
    t.diagonals.iter().filter(|seg| cls.contains(**seg)).count() as u32
}

/// What a [`KHistogram`] counted per triangulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountedClass {
    /// Diagonals parallel to a fixed direction class.
    ParallelTo(DirectionClass),
    /// Diagonals from vertex 0 whose far endpoint has the given parity.
    FanFromZero(Parity),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Triangulation counts keyed by how many counted diagonals each one has.
/// Keys with a zero count are omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KHistogram {
    n: u32,
    counted: CountedClass,
    counts: BTreeMap<u32, BigUint>,
}

impl KHistogram {
    pub(crate) fn new(n: u32, counted: CountedClass, counts: BTreeMap<u32, BigUint>) -> Self {
        debug_assert!(counts.values().all(|v| *v != BigUint::default()));
        KHistogram { n, counted, counts }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn counted(&self) -> CountedClass {
        self.counted
    }

    pub fn counts(&self) -> &BTreeMap<u32, BigUint> {
        &self.counts
    }

    /// Count for exactly `k` counted diagonals; zero when absent.
    pub fn count(&self, k: u32) -> BigUint {
        self.counts.get(&k).cloned().unwrap_or_default()
    }

    /// Sum over all `k`; always the total number of triangulations.
    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }
}

/// Depth-first walk over all triangulations of the arcs on `pending`.
///
/// `pending` is a stack of unresolved arcs; `diagonals` holds the closing
/// segments created so far, and `in_class` tracks how many of them the
/// `counted` predicate accepted. Each call to `run` restores the state it
/// found, so siblings in the walk never see each other's choices.
struct Walker<'a, P, F>
where
    P: Fn(Segment) -> bool,
    F: FnMut(&[Segment], u32),
{
    counted: &'a P,
    on_leaf: F,
    pending: Vec<(u32, u32)>,
    diagonals: Vec<Segment>,
    in_class: u32,
}

impl<'a, P, F> Walker<'a, P, F>
where
    P: Fn(Segment) -> bool,
    F: FnMut(&[Segment], u32),
{
    fn new(counted: &'a P, on_leaf: F) -> Self {
        Walker {
            counted,
            on_leaf,
            pending: Vec::new(),
            diagonals: Vec::new(),
            in_class: 0,
        }
    }

    /// Records a fresh diagonal and queues the arc it closes.
    fn push(&mut self, seg: Segment) {
        self.pending.push((seg.a, seg.b));
        if (self.counted)(seg) {
            self.in_class += 1;
        }
        self.diagonals.push(seg);
    }

    fn pop(&mut self) {
        let seg = self.diagonals.pop().unwrap();
        self.pending.pop();
        if (self.counted)(seg) {
            self.in_class -= 1;
        }
    }

    fn run(&mut self) {
        let Some((lo, hi)) = self.pending.pop() else {
            (self.on_leaf)(&self.diagonals, self.in_class);
            return;
        };
        for apex in lo + 1..hi {
            let mut pushed = 0;
            if apex - lo >= 2 {
                self.push(Segment { a: lo, b: apex });
                pushed += 1;
            }
            if hi - apex >= 2 {
                self.push(Segment { a: apex, b: hi });
                pushed += 1;
            }
            self.run();
            for _ in 0..pushed {
                self.pop();
            }
        }
        self.pending.push((lo, hi));
    }
}

/// Counts triangulations by how many diagonals satisfy `counted`, splitting
/// the work across the apex choices of the root arc. The merge is a plain
/// elementwise sum, so the result is identical for any thread count.
fn class_counts<P>(n: u32, counted: P) -> Vec<u128>
where
    P: Fn(Segment) -> bool + Sync,
{
    let slots = (n - 2) as usize;
    (1..n - 1)
        .into_par_iter()
        .map(|apex| {
            let mut hist = vec![0u128; slots];
            let mut w = Walker::new(&counted, |_diags: &[Segment], k: u32| {
                hist[k as usize] += 1;
            });
            if apex >= 2 {
                w.push(Segment { a: 0, b: apex });
            }
            if (n - 1) - apex >= 2 {
                w.push(Segment { a: apex, b: n - 1 });
            }
            w.run();
            drop(w);
            hist
        })
        .reduce(
            || vec![0u128; slots],
            |mut acc, hist| {
                for (a, v) in acc.iter_mut().zip(hist) {
                    *a += v;
                }
                acc
            },
        )
}

fn to_counts_map(raw: Vec<u128>) -> BTreeMap<u32, BigUint> {
    raw.into_iter()
        .enumerate()
        .filter(|(_, v)| *v != 0)
        .map(|(k, v)| (k as u32, BigUint::from(v)))
        .collect()
}

/// Full-enumeration histogram of triangulations of the `n`-gon by the number
/// of diagonals parallel to the segment `(x, y)`.
pub fn histogram(n: u32, x: Vertex, y: Vertex) -> Result<KHistogram, Error> {
    if n < 3 {
        return Err(Error::PolygonTooSmall(n));
    }
    for label in [x, y] {
        if label >= n {
            return Err(Error::VertexOutOfRange { label, n });
        }
    }
    if x == y {
        return Err(Error::DegenerateSegment);
    }
    let s = (x + y) % n;
    let raw = class_counts(n, move |seg: Segment| (seg.a + seg.b) % n == s);
    Ok(KHistogram::new(
        n,
        CountedClass::ParallelTo(DirectionClass::new(n, s)),
        to_counts_map(raw),
    ))
}

/// Histogram by the number of diagonals `(0, j)` present with `j` of the
/// given parity.
pub fn fan_histogram(n: u32, parity: Parity) -> Result<KHistogram, Error> {
    if n < 3 {
        return Err(Error::PolygonTooSmall(n));
    }
    let bit = match parity {
        Parity::Even => 0,
        Parity::Odd => 1,
    };
    let raw = class_counts(n, move |seg: Segment| seg.a == 0 && seg.b % 2 == bit);
    Ok(KHistogram::new(
        n,
        CountedClass::FanFromZero(parity),
        to_counts_map(raw),
    ))
}

/// Counts pairs (triangulation of the `2m`-gon, mark), where the mark sits on
/// side `(0, 1)`, on side `(m, m+1)`, or on a present diagonal whose endpoint
/// sum is `2m + 1`. Those diagonals are exactly the ones parallel to side
/// `(0, 1)`, so a triangulation with `k` of them gets `k + 2` marks.
pub fn count_marked_triangulations(m: u32) -> Result<BigUint, Error> {
    if m < 2 {
        return Err(Error::HalfSizeTooSmall(m));
    }
    let hist = histogram(2 * m, 0, 1)?;
    Ok(hist.counts().iter().map(|(k, v)| v * (k + 2)).sum())
}

/// All triangulations of the `n`-gon in lexicographic order of their sorted
/// diagonal lists.
///
/// The full set is materialized before the iterator is handed back, so this
/// costs memory proportional to `(n - 3) * C_{n-2}`; the counting entry
/// points above stream instead and should be preferred for statistics.
pub fn enumerate_triangulations(n: u32) -> Result<impl Iterator<Item = Triangulation>, Error> {
    if n < 3 {
        return Err(Error::PolygonTooSmall(n));
    }
    let mut all = Vec::new();
    let none = |_: Segment| false;
    let mut w = Walker::new(&none, |diags: &[Segment], _| {
        let mut diagonals = diags.to_vec();
        diagonals.sort_unstable();
        all.push(Triangulation { n, diagonals });
    });
    w.pending.push((0, n - 1));
    w.run();
    drop(w);
    all.sort_unstable();
    Ok(all.into_iter())
}
