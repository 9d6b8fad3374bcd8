use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A point of the nonnegative integer lattice.
///
/// The total order (`Ord`) is graded lexicographic: points compare first by
/// coordinate sum, then lexicographically. This is the canonical order for
/// every point set emitted by the crate. The componentwise partial order is
/// exposed separately as [`Point::le_componentwise`].
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point {
    coords: Vec<u32>,
}

impl Point {
    pub fn new(coords: Vec<u32>) -> Point {
        assert!(!coords.is_empty(), "a point needs at least one coordinate");
        Point { coords }
    }

    pub fn zero(dim: usize) -> Point {
        Point::new(vec![0; dim])
    }

    /// `value` times the `axis`-th unit vector.
    pub fn on_axis(dim: usize, axis: usize, value: u32) -> Point {
        assert!(axis < dim);
        let mut coords = vec![0; dim];
        coords[axis] = value;
        Point::new(coords)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    /// Coordinate sum.
    pub fn norm(&self) -> u64 {
        self.coords.iter().map(|&c| u64::from(c)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn nonzero_coords(&self) -> usize {
        self.coords.iter().filter(|&&c| c != 0).count()
    }

    /// True when at most one coordinate is nonzero (the zero point counts).
    pub fn is_axial(&self) -> bool {
        self.nonzero_coords() <= 1
    }

    pub fn add(&self, rhs: &Point) -> Point {
        debug_assert_eq!(self.dim(), rhs.dim());
        Point::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(&a, &b)| a + b)
                .collect(),
        )
    }

    pub fn double(&self) -> Point {
        self.add(self)
    }

    /// Componentwise difference, `None` when any coordinate would go negative.
    pub fn checked_sub(&self, rhs: &Point) -> Option<Point> {
        debug_assert_eq!(self.dim(), rhs.dim());
        self.coords
            .iter()
            .zip(&rhs.coords)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<u32>>>()
            .map(Point::new)
    }

    /// Componentwise partial order: every coordinate of `self` is <= the
    /// matching coordinate of `rhs`.
    pub fn le_componentwise(&self, rhs: &Point) -> bool {
        debug_assert_eq!(self.dim(), rhs.dim());
        self.coords.iter().zip(&rhs.coords).all(|(&a, &b)| a <= b)
    }
}

impl Ord for Point {
    fn cmp(&self, other: &Point) -> Ordering {
        self.dim()
            .cmp(&other.dim())
            .then_with(|| self.norm().cmp(&other.norm()))
            .then_with(|| self.coords.cmp(&other.coords))
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Point) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<u32>> for Point {
    fn from(coords: Vec<u32>) -> Point {
        Point::new(coords)
    }
}
