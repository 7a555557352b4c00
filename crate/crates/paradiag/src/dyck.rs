//! Dyck paths with forbidden axis returns, plus a bijection onto polygon
//! triangulations.
//!
//! A Dyck path of semilength `s` is a lattice walk of `s` up-steps and `s`
//! down-steps that never dips below the axis. [`count_avoiding`] counts the
//! paths that have no interior return to the axis at an x-coordinate of a
//! given residue mod 4; those counts match the 0-parallel triangulation
//! counts of [`crate::closed_forms`], which the tests and the acceptance
//! suite pin down.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::polygon::{Segment, Triangulation, Vertex};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
}

/// A validated Dyck path.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    /// Validates the ballot property: every prefix has at least as many ups
    /// as downs, and the totals agree.
    pub fn new(steps: Vec<Step>) -> Result<Self, Error> {
        let mut height: i64 = 0;
        for step in &steps {
            height += match step {
                Step::Up => 1,
                Step::Down => -1,
            };
            if height < 0 {
                return Err(Error::InvalidDyckPath);
            }
        }
        if height != 0 {
            return Err(Error::InvalidDyckPath);
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> u32 {
        (self.steps.len() / 2) as u32
    }
}

/// Residue class of forbidden interior return points `(x, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForbiddenResidue {
    /// Returns at `x` with `x % 4 == 0` are forbidden.
    ZeroMod4,
    /// Returns at `x` with `x % 4 == 2` are forbidden.
    TwoMod4,
}

/// A counting problem: Dyck paths of the given semilength, optionally
/// restricted to avoid interior axis returns in one residue class. The
/// endpoints `(0, 0)` and `(2s, 0)` are never forbidden.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DyckSpec {
    pub semilength: u32,
    pub forbidden: Option<ForbiddenResidue>,
}

/// Exact count of the paths described by `spec`, by a height-profile sweep:
/// one pass over x, keeping the count of partial walks per height, zeroing
/// the height-0 slot at forbidden interior positions.
pub fn count_avoiding(spec: &DyckSpec) -> BigUint {
    let s = spec.semilength as usize;
    let width = 2 * s;
    let mut heights = vec![BigUint::zero(); s + 1];
    heights[0] = BigUint::one();
    for x in 1..=width {
        let mut next = vec![BigUint::zero(); s + 1];
        for (h, count) in heights.iter().enumerate() {
            if count.is_zero() {
                continue;
            }
            if h < s {
                next[h + 1] += count;
            }
            if h >= 1 {
                next[h - 1] += count;
            }
        }
        let interior = x < width;
        if interior {
            let forbidden_here = match spec.forbidden {
                Some(ForbiddenResidue::ZeroMod4) => x % 4 == 0,
                Some(ForbiddenResidue::TwoMod4) => x % 4 == 2,
                None => false,
            };
            if forbidden_here {
                next[0] = BigUint::zero();
            }
        }
        heights = next;
    }
    heights[0].clone()
}

/// Unrestricted count: the Catalan number C_s.
pub fn count_dyck(s: u32) -> BigUint {
    count_avoiding(&DyckSpec {
        semilength: s,
        forbidden: None,
    })
}

/// Maps a triangulation of an n-gon to a Dyck path of semilength `n - 2`.
///
/// The triangulation is read as a binary tree rooted at the side `(0, n-1)`:
/// the triangle on an arc `(lo, hi)` has a unique apex `a` with both
/// `(lo, a)` and `(a, hi)` present as edges, and the path emits `Up`, the
/// left subtree `(lo, a)`, `Down`, then the right subtree `(a, hi)`.
pub fn triangulation_to_path(t: &Triangulation) -> DyckPath {
    fn emit(lo: Vertex, hi: Vertex, t: &Triangulation, steps: &mut Vec<Step>) {
        if hi - lo == 1 {
            return;
        }
        let is_edge = |a: Vertex, b: Vertex| {
            b - a == 1 || t.diagonals().binary_search(&Segment::new(a, b)).is_ok()
        };
        let apex = (lo + 1..hi)
            .find(|&a| is_edge(lo, a) && is_edge(a, hi))
            .expect("a triangulation has a triangle on every arc");
        steps.push(Step::Up);
        emit(lo, apex, t, steps);
        steps.push(Step::Down);
        emit(apex, hi, t, steps);
    }
    let mut steps = Vec::with_capacity(2 * (t.n() as usize - 2));
    emit(0, t.n() - 1, t, &mut steps);
    DyckPath { steps }
}

/// Inverse of [`triangulation_to_path`]: rebuilds the triangulation of the
/// `(s + 2)`-gon from a path of semilength `s >= 1`.
pub fn path_to_triangulation(path: &DyckPath) -> Result<Triangulation, Error> {
    fn build(lo: Vertex, hi: Vertex, steps: &[Step], diagonals: &mut Vec<Segment>) {
        if steps.is_empty() {
            return;
        }
        // steps = Up, <left>, Down, <right>; the Down is the first height-0
        // return, and the left block's length fixes the apex.
        let mut height = 0i64;
        let mut split = 0usize;
        for (i, step) in steps.iter().enumerate() {
            height += match step {
                Step::Up => 1,
                Step::Down => -1,
            };
            if height == 0 {
                split = i;
                break;
            }
        }
        let left = &steps[1..split];
        let right = &steps[split + 1..];
        let apex = lo + 1 + (left.len() / 2) as Vertex;
        if apex - lo >= 2 {
            diagonals.push(Segment::new(lo, apex));
        }
        if hi - apex >= 2 {
            diagonals.push(Segment::new(apex, hi));
        }
        build(lo, apex, left, diagonals);
        build(apex, hi, right, diagonals);
    }
    let n = path.semilength() + 2;
    if n < 3 {
        return Err(Error::PolygonTooSmall(n));
    }
    let mut diagonals = Vec::with_capacity(n as usize - 3);
    build(0, n - 1, path.steps(), &mut diagonals);
    Triangulation::new(n, diagonals)
}
