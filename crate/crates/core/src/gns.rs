//! Submonoids of the nonnegative integer lattice with finite complement,
//! represented by their gap set. Everything here is exhaustive and
//! definition-driven: generator sets come from a bounded region scan, the
//! pseudo-Frobenius and maximal-gap sets from elementwise checks. The
//! closed-form counterparts live in `constructions` as a fully separate
//! code path, so the two can be cross-validated against each other.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::ns::InvariantRecord;
use crate::point::Point;
use crate::wilf::{self, GeneralizedWilfReport};

/// Largest supported lattice dimension.
pub const MAX_DIMENSION: usize = 8;

/// Largest supported gap set.
pub const MAX_GAP_COUNT: usize = 1_000_000;

/// Largest supported minimal generating set.
pub const MAX_GENERATOR_COUNT: usize = 1_000_000;

/// Quasi-classification of a lattice semigroup: `quasi_irreducible` when the
/// componentwise-maximal gaps are exactly the special gaps, `quasi_symmetric`
/// when their count equals the pseudo-Frobenius count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiFlags {
    pub quasi_irreducible: bool,
    pub quasi_symmetric: bool,
}

/// A finite-complement submonoid of the d-dimensional lattice, immutable
/// once built. The gap set, its hash index, and the minimal generating set
/// are all computed eagerly at construction, so shared references are safe
/// across threads with no interior mutability.
#[derive(Debug, Clone)]
pub struct Gns {
    dimension: usize,
    gaps: Vec<Point>,
    gap_index: HashSet<Point>,
    max_gap_norm: u64,
    generators: Vec<Point>,
}

/// Visits every point `p <= bound` componentwise, in lexicographic order.
fn for_each_in_box(bound: &Point, f: &mut impl FnMut(&Point)) {
    let mut scratch = vec![0u32; bound.dim()];
    fn rec(bound: &[u32], i: usize, scratch: &mut Vec<u32>, f: &mut impl FnMut(&Point)) {
        if i == bound.len() {
            f(&Point::new(scratch.clone()));
            return;
        }
        for v in 0..=bound[i] {
            scratch[i] = v;
            rec(bound, i + 1, scratch, f);
        }
    }
    rec(bound.coords(), 0, &mut scratch, f);
}

/// Visits every point of coordinate sum `norm` in `dim` coordinates, in
/// lexicographic order.
fn for_each_with_norm(dim: usize, norm: u64, f: &mut impl FnMut(&Point)) {
    let mut scratch = vec![0u32; dim];
    fn rec(dim: usize, left: u64, i: usize, scratch: &mut Vec<u32>, f: &mut impl FnMut(&Point)) {
        if i == dim - 1 {
            scratch[i] = left as u32;
            f(&Point::new(scratch.clone()));
            return;
        }
        for v in 0..=left {
            scratch[i] = v as u32;
            rec(dim, left - v, i + 1, scratch, f);
        }
    }
    rec(dim, norm, 0, &mut scratch, f);
}

impl Gns {
    /// Validates `gaps` as the complement of a submonoid and builds the
    /// semigroup. Validation rejects the zero point, mismatched dimensions,
    /// and any complement pair summing into the gap set (returned as a
    /// `NotAMonoid` witness).
    pub fn from_gaps(dimension: usize, gaps: impl IntoIterator<Item = Point>) -> Result<Gns, Error> {
        if dimension == 0 || dimension > MAX_DIMENSION {
            return Err(Error::RangeExceeded(format!(
                "dimension {dimension} outside [1, {MAX_DIMENSION}]"
            )));
        }
        let mut gap_index: HashSet<Point> = HashSet::new();
        for p in gaps {
            if p.dim() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    got: p.dim(),
                });
            }
            if p.is_zero() {
                return Err(Error::ZeroGap);
            }
            gap_index.insert(p);
            if gap_index.len() > MAX_GAP_COUNT {
                return Err(Error::RangeExceeded(format!(
                    "gap set exceeds {MAX_GAP_COUNT} points"
                )));
            }
        }
        let mut gaps: Vec<Point> = gap_index.iter().cloned().collect();
        gaps.sort();
        let max_gap_norm = gaps.last().map_or(0, Point::norm);

        // Closure check: a gap h that splits as u + v with both parts in the
        // complement witnesses that the complement is not closed.
        for h in &gaps {
            let mut witness: Option<(Point, Point)> = None;
            for_each_in_box(h, &mut |u| {
                if witness.is_some() || u.is_zero() || u == h || gap_index.contains(u) {
                    return;
                }
                let v = h.checked_sub(u).unwrap();
                if !gap_index.contains(&v) {
                    witness = Some((u.clone(), v));
                }
            });
            if let Some((s1, s2)) = witness {
                return Err(Error::NotAMonoid { s1, s2 });
            }
        }

        let mut gns = Gns {
            dimension,
            gaps,
            gap_index,
            max_gap_norm,
            generators: vec![],
        };
        gns.generators = gns.scan_minimal_generators()?;
        Ok(gns)
    }

    /// Brute-force minimal generating set, via a scan of the region of norm
    /// at most `2M + 1` (`M` = largest gap norm) in graded-lex order. The
    /// bound is exhaustive: any element of norm at least `2M + 2` splits,
    /// by the weight-splitting lemma, into two points of norm at least
    /// `M + 1`, and every point of norm above `M` is an element, so such an
    /// element is a sum of two nonzero elements and never minimal.
    fn scan_minimal_generators(&self) -> Result<Vec<Point>, Error> {
        let limit = 2 * self.max_gap_norm + 1;
        let mut gens: Vec<Point> = vec![];
        let mut result: Result<(), Error> = Ok(());
        for norm in 1..=limit {
            // Generators found on earlier levels are the only possible
            // summands that matter: an element decomposes if and only if
            // subtracting some lower-norm minimal generator leaves an
            // element.
            let prior = gens.len();
            for_each_with_norm(self.dimension, norm, &mut |x| {
                if result.is_err() || !self.member(x) {
                    return;
                }
                let decomposable = gens[..prior].iter().any(|g| {
                    g.le_componentwise(x) && self.member(&x.checked_sub(g).unwrap())
                });
                if !decomposable {
                    if gens.len() == MAX_GENERATOR_COUNT {
                        result = Err(Error::RangeExceeded(format!(
                            "generator set exceeds {MAX_GENERATOR_COUNT} points"
                        )));
                        return;
                    }
                    gens.push(x.clone());
                }
            });
            result.clone()?;
        }
        Ok(gens)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Gap set in graded-lex order.
    pub fn gaps(&self) -> &[Point] {
        &self.gaps
    }

    pub fn genus(&self) -> u64 {
        self.gaps.len() as u64
    }

    pub fn max_gap_norm(&self) -> u64 {
        self.max_gap_norm
    }

    /// Minimal generating set in graded-lex order.
    pub fn minimal_generators(&self) -> &[Point] {
        &self.generators
    }

    pub fn embedding_dimension(&self) -> u64 {
        self.generators.len() as u64
    }

    fn member(&self, p: &Point) -> bool {
        p.norm() > self.max_gap_norm || !self.gap_index.contains(p)
    }

    /// Membership test; the point's dimension must match.
    pub fn contains(&self, p: &Point) -> Result<bool, Error> {
        if p.dim() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                got: p.dim(),
            });
        }
        Ok(self.member(p))
    }

    /// Gaps x with x + s an element for every nonzero element s. It is
    /// enough to test s over the minimal generators: sums of further
    /// generators stay in the semigroup once each single step does.
    pub fn pseudo_frobenius(&self) -> Vec<Point> {
        self.gaps
            .iter()
            .filter(|x| self.generators.iter().all(|g| self.member(&x.add(g))))
            .cloned()
            .collect()
    }

    /// Pseudo-Frobenius gaps whose double is an element; exactly the gaps
    /// that can be adjoined leaving a semigroup.
    pub fn special_gaps(&self) -> Vec<Point> {
        self.pseudo_frobenius()
            .into_iter()
            .filter(|x| self.member(&x.double()))
            .collect()
    }

    /// Gaps maximal under the componentwise partial order.
    pub fn maximal_gaps(&self) -> Vec<Point> {
        self.gaps
            .iter()
            .filter(|x| {
                !self
                    .gaps
                    .iter()
                    .any(|y| y != *x && x.le_componentwise(y))
            })
            .cloned()
            .collect()
    }

    /// Points dominated componentwise by some gap, split into elements
    /// (`n_count`) and gaps; their total is `c_count`.
    fn dominated_counts(&self) -> (u64, u64) {
        if self.gaps.is_empty() {
            return (0, 0);
        }
        let mut cmax = vec![0u32; self.dimension];
        for h in &self.gaps {
            for (i, &v) in h.coords().iter().enumerate() {
                cmax[i] = cmax[i].max(v);
            }
        }
        let volume = cmax
            .iter()
            .try_fold(1u64, |acc, &v| acc.checked_mul(v as u64 + 1))
            .filter(|&v| v <= 50_000_000);

        if let Some(volume) = volume {
            // Dense path: flag each point of the bounding box that lies
            // under some gap.
            let strides: Vec<u64> = {
                let mut s = vec![1u64; self.dimension];
                for i in (0..self.dimension.saturating_sub(1)).rev() {
                    s[i] = s[i + 1] * (cmax[i + 1] as u64 + 1);
                }
                s
            };
            let index = |p: &Point| -> usize {
                p.coords()
                    .iter()
                    .zip(&strides)
                    .map(|(&c, &s)| c as u64 * s)
                    .sum::<u64>() as usize
            };
            let mut flags = vec![0u8; volume as usize];
            for h in &self.gaps {
                for_each_in_box(h, &mut |p| flags[index(p)] = 1);
            }
            for h in &self.gaps {
                flags[index(h)] = 2;
            }
            let n = flags.iter().filter(|&&f| f == 1).count() as u64;
            let c = n + self.genus();
            (n, c)
        } else {
            let mut under: HashSet<Point> = HashSet::new();
            for h in &self.gaps {
                for_each_in_box(h, &mut |p| {
                    under.insert(p.clone());
                });
            }
            let c = under.len() as u64;
            let n = under.iter().filter(|p| self.member(p)).count() as u64;
            (n, c)
        }
    }

    pub fn invariants(&self) -> InvariantRecord {
        let (n, c) = self.dominated_counts();
        InvariantRecord {
            dimension: self.dimension,
            multiplicity: None,
            embedding_dimension: self.embedding_dimension(),
            genus: self.genus(),
            type_t: self.pseudo_frobenius().len() as u64,
            tau: Some(self.maximal_gaps().len() as u64),
            frobenius: None,
            n_count: n,
            c_count: c,
        }
    }

    pub fn quasi_flags(&self) -> QuasiFlags {
        let pf = self.pseudo_frobenius();
        let sg = self.special_gaps();
        let fa = self.maximal_gaps();
        QuasiFlags {
            quasi_irreducible: fa == sg,
            quasi_symmetric: fa.len() == pf.len(),
        }
    }

    /// Lattice-form conjecture report (`e*n >= d*c` plus the equivalent
    /// rearrangement).
    pub fn generalized_wilf(&self) -> GeneralizedWilfReport {
        wilf::generalized_report(&self.invariants())
    }
}
