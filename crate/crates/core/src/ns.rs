//! Numerical semigroups: cofinite submonoids of the nonnegative integers,
//! described by a generating set with gcd 1.
//!
//! Construction runs a representability table over `[0, g1*g2]` (the two
//! smallest generators), which covers every gap and every Apery element.
//! All arithmetic is exact 64-bit; inputs beyond desk scale are rejected
//! rather than silently truncated.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::wilf::{self, WilfReport};

/// Largest admissible generator.
pub const MAX_GENERATOR: u64 = 1_000_000;

/// Cap on the representability table length (product of the two smallest
/// generators); beyond this the table would not be desk scale.
pub const MAX_TABLE_BOUND: u64 = 100_000_000;

/// Summary invariants of a semigroup, shared by the 1-dimensional and the
/// lattice case. `multiplicity` and `frobenius` are only defined in
/// dimension 1; `tau` (the count of componentwise-maximal gaps) only matters
/// in dimension >= 1 lattice form and is `None` for numerical semigroups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub dimension: usize,
    pub multiplicity: Option<u64>,
    pub embedding_dimension: u64,
    pub genus: u64,
    pub type_t: u64,
    pub tau: Option<u64>,
    pub frobenius: Option<i64>,
    pub n_count: u64,
    pub c_count: u64,
}

/// Classification flags for a numerical semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub irreducible: bool,
    pub symmetric: bool,
    pub pseudo_symmetric: bool,
    pub max_embedding_dimension: bool,
}

/// A numerical semigroup, immutable once built. The minimal generating set,
/// the gap set, and the Apery set with respect to the multiplicity are
/// computed eagerly at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    gaps: Vec<u64>,
    apery: Vec<u64>,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`. Duplicates and redundant
    /// generators are dropped; the stored generating set is minimal.
    pub fn from_generators(gens: &[u64]) -> Result<NumericalSemigroup, Error> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::Domain("generators must be positive".into()));
        }
        if let Some(&g) = gens.iter().find(|&&g| g > MAX_GENERATOR) {
            return Err(Error::RangeExceeded(format!(
                "generator {g} exceeds {MAX_GENERATOR}"
            )));
        }
        let mut sorted: Vec<u64> = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();

        let g = sorted.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::NotCofinite { gcd: g });
        }
        if sorted[0] == 1 {
            return Ok(NumericalSemigroup {
                generators: vec![1],
                gaps: vec![],
                apery: vec![0],
            });
        }

        let m = sorted[0];
        // reachable[x] == x is a sum of generators. When the two smallest
        // generators are coprime their product bounds the Frobenius number,
        // but no pair of generators need be coprime even when the whole set
        // is, so the guess can fall short. A table is provably long enough
        // once it ends in m consecutive reachable values: adding m keeps
        // things reachable, so no gap lies beyond the run. Grow until that
        // certificate holds. (The redundancy test below also indexes up to
        // the largest listed generator.)
        let mut bound = (m * sorted[1]).max(*sorted.last().unwrap());
        let reachable = loop {
            if bound > MAX_TABLE_BOUND {
                return Err(Error::RangeExceeded(format!(
                    "representability table bound {bound} exceeds {MAX_TABLE_BOUND}"
                )));
            }
            let mut reachable = vec![false; (bound + 1) as usize];
            reachable[0] = true;
            for x in 1..=bound as usize {
                for &gen in &sorted {
                    let gen = gen as usize;
                    if gen > x {
                        break;
                    }
                    if reachable[x - gen] {
                        reachable[x] = true;
                        break;
                    }
                }
            }
            if reachable[(bound - m + 1) as usize..].iter().all(|&r| r) {
                break reachable;
            }
            bound *= 2;
        };

        let gaps: Vec<u64> = (1..=bound).filter(|&x| !reachable[x as usize]).collect();
        debug_assert!(!gaps.is_empty());

        // A listed generator is redundant exactly when it splits as a sum of
        // two nonzero elements.
        let generators: Vec<u64> = sorted
            .iter()
            .copied()
            .filter(|&t| !(m..=t / 2).any(|a| reachable[a as usize] && reachable[(t - a) as usize]))
            .collect();

        let mut apery = vec![0u64; m as usize];
        for r in 1..m {
            let mut x = r;
            while !reachable[x as usize] {
                x += m;
            }
            apery[r as usize] = x;
        }

        Ok(NumericalSemigroup {
            generators,
            gaps,
            apery,
        })
    }

    /// The semigroup of all nonnegative integers.
    pub fn natural() -> NumericalSemigroup {
        NumericalSemigroup::from_generators(&[1]).unwrap()
    }

    pub fn is_natural(&self) -> bool {
        self.gaps.is_empty()
    }

    /// Minimal generating set, ascending.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Gap set (the finite complement), ascending.
    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// `apery()[r]` is the least element congruent to `r` modulo the
    /// multiplicity.
    pub fn apery(&self) -> &[u64] {
        &self.apery
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// Largest gap; -1 when there are no gaps.
    pub fn frobenius(&self) -> i64 {
        self.gaps.last().map_or(-1, |&f| f as i64)
    }

    pub fn genus(&self) -> u64 {
        self.gaps.len() as u64
    }

    pub fn embedding_dimension(&self) -> u64 {
        self.generators.len() as u64
    }

    /// Membership test via the Apery set: `x` belongs to the semigroup
    /// exactly when it is at least the least element in its residue class.
    pub fn contains(&self, x: u64) -> bool {
        let m = self.multiplicity();
        x >= self.apery[(x % m) as usize]
    }

    /// Pseudo-Frobenius elements: gaps x with x + s in S for every nonzero
    /// element s. Computed as the maximal Apery elements under the partial
    /// order "difference stays in S", shifted down by the multiplicity.
    pub fn pseudo_frobenius(&self) -> Vec<u64> {
        if self.is_natural() {
            return vec![];
        }
        let m = self.multiplicity();
        let mut pf: Vec<u64> = self
            .apery
            .iter()
            .filter(|&&w| {
                self.apery
                    .iter()
                    .all(|&w2| w2 <= w || !self.contains(w2 - w))
            })
            .map(|&w| w - m)
            .collect();
        pf.sort_unstable();
        pf
    }

    /// Gaps x in PF(S) whose double lands in S; exactly the gaps x for which
    /// S union {x} is again a semigroup.
    pub fn special_gaps(&self) -> Vec<u64> {
        self.pseudo_frobenius()
            .into_iter()
            .filter(|&x| self.contains(2 * x))
            .collect()
    }

    /// Count of elements below the Frobenius number (0 included).
    pub fn sporadic_count(&self) -> u64 {
        let f = self.frobenius();
        if f < 0 {
            return 0;
        }
        (0..=f as u64).filter(|&x| self.contains(x)).count() as u64
    }

    pub fn invariants(&self) -> InvariantRecord {
        let f = self.frobenius();
        InvariantRecord {
            dimension: 1,
            multiplicity: Some(self.multiplicity()),
            embedding_dimension: self.embedding_dimension(),
            genus: self.genus(),
            type_t: self.pseudo_frobenius().len() as u64,
            tau: None,
            frobenius: Some(f),
            n_count: self.sporadic_count(),
            c_count: (f + 1) as u64,
        }
    }

    pub fn classify(&self) -> Classification {
        let f = self.frobenius();
        let pf = self.pseudo_frobenius();
        let sg = self.special_gaps();
        let symmetric = f > 0 && pf == [f as u64];
        let pseudo_symmetric = f > 0 && f % 2 == 0 && pf == [f as u64 / 2, f as u64];
        Classification {
            irreducible: f > 0 && sg == [f as u64],
            symmetric,
            pseudo_symmetric,
            max_embedding_dimension: self.embedding_dimension() == self.multiplicity(),
        }
    }

    /// The classical conjecture check e * n >= F + 1.
    pub fn wilf_check(&self) -> WilfReport {
        let inv = self.invariants();
        wilf::classical_report(&inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[]),
            Err(Error::EmptyGenerators)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::NotCofinite { gcd: 2 })
        );
        assert!(matches!(
            NumericalSemigroup::from_generators(&[6, 10, 15, 0]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            NumericalSemigroup::from_generators(&[3, 1_000_001]),
            Err(Error::RangeExceeded(_))
        ));
        assert!(matches!(
            NumericalSemigroup::from_generators(&[999_983, 999_979]),
            Err(Error::RangeExceeded(_))
        ));
    }

    #[test]
    fn whole_line() {
        let s = ns(&[1]);
        assert!(s.is_natural());
        assert_eq!(s.generators(), &[1]);
        assert_eq!(s.frobenius(), -1);
        assert_eq!(s.genus(), 0);
        assert_eq!(s.pseudo_frobenius(), Vec::<u64>::new());
        let inv = s.invariants();
        assert_eq!(inv.n_count, 0);
        assert_eq!(inv.c_count, 0);
    }

    #[test]
    fn small_gap_sets() {
        assert_eq!(ns(&[2, 3]).gaps(), &[1]);
        assert_eq!(ns(&[2, 7]).gaps(), &[1, 3, 5]);
        assert_eq!(ns(&[3, 5]).gaps(), &[1, 2, 4, 7]);
        assert_eq!(ns(&[4, 6, 7]).gaps(), &[1, 2, 3, 5, 9]);
    }

    #[test]
    fn generator_list_is_minimized() {
        // 8 = 4 + 4 drops out; input order and duplicates do not matter.
        assert_eq!(ns(&[4, 6, 8, 7]).generators(), &[4, 6, 7]);
        assert_eq!(ns(&[7, 4, 6, 6]).generators(), &[4, 6, 7]);
        assert_eq!(ns(&[2, 3, 4, 5]).generators(), &[2, 3]);
    }

    #[test]
    fn five_six_thirteen() {
        // 13 is a minimal generator here, so it is not a gap.
        let s = ns(&[5, 6, 13]);
        assert_eq!(s.generators(), &[5, 6, 13]);
        assert_eq!(s.gaps(), &[1, 2, 3, 4, 7, 8, 9, 14]);
        assert_eq!(s.frobenius(), 14);
        assert_eq!(s.pseudo_frobenius(), &[7, 14]);
    }

    #[test]
    fn apery_set() {
        let s = ns(&[3, 5]);
        // residues 0,1,2 -> least elements 0, 10, 5
        assert_eq!(s.apery(), &[0, 10, 5]);
        for x in 0..30 {
            let member = x >= s.apery()[(x % 3) as usize];
            assert_eq!(s.contains(x), member);
            assert_eq!(s.contains(x), !s.gaps().contains(&x));
        }
    }

    #[test]
    fn pseudo_frobenius_examples() {
        assert_eq!(ns(&[2, 3]).pseudo_frobenius(), &[1]);
        assert_eq!(ns(&[3, 4, 5]).pseudo_frobenius(), &[1, 2]);
        assert_eq!(ns(&[4, 6, 7]).pseudo_frobenius(), &[9]);
        assert_eq!(ns(&[5, 6, 8]).pseudo_frobenius(), &[7, 9]);
    }

    #[test]
    fn special_gaps_examples() {
        // For <3,4,5>: PF = {1,2} but 2*1 = 2 is itself a gap, so only 2 is
        // special. Removing the check would wrongly keep 1.
        assert_eq!(ns(&[3, 4, 5]).special_gaps(), &[2]);
        assert_eq!(ns(&[2, 3]).special_gaps(), &[1]);
        assert_eq!(ns(&[4, 6, 7]).special_gaps(), &[9]);
        assert_eq!(ns(&[5, 6, 8]).special_gaps(), &[7, 9]);
    }

    #[test]
    fn classification_examples() {
        let c = ns(&[4, 6, 7]).classify();
        assert!(c.irreducible && c.symmetric && !c.pseudo_symmetric);
        assert!(!c.max_embedding_dimension);

        let c = ns(&[3, 4, 5]).classify();
        assert!(c.irreducible && !c.symmetric && c.pseudo_symmetric);
        assert!(c.max_embedding_dimension);

        let c = ns(&[5, 6, 8]).classify();
        assert!(!c.irreducible && !c.symmetric && !c.pseudo_symmetric);

        let c = ns(&[2, 3]).classify();
        assert!(c.irreducible && c.symmetric);
        assert!(c.max_embedding_dimension);
    }

    #[test]
    fn invariant_records() {
        let inv = ns(&[3, 5]).invariants();
        assert_eq!(inv.multiplicity, Some(3));
        assert_eq!(inv.embedding_dimension, 2);
        assert_eq!(inv.genus, 4);
        assert_eq!(inv.type_t, 1);
        assert_eq!(inv.frobenius, Some(7));
        assert_eq!(inv.n_count, 4);
        assert_eq!(inv.c_count, 8);
        assert_eq!(inv.c_count, inv.genus + inv.n_count);

        let inv = ns(&[17, 18, 20, 22, 24, 25]).invariants();
        assert_eq!(inv.multiplicity, Some(17));
        assert_eq!(inv.embedding_dimension, 6);
        assert_eq!(inv.genus, 27);
        assert_eq!(inv.type_t, 11);
    }

    #[test]
    fn wilf_reports() {
        let r = ns(&[3, 5]).wilf_check();
        assert_eq!((r.lhs, r.rhs, r.margin), (8, 8, 0));
        assert!(r.holds);

        let r = ns(&[2, 3]).wilf_check();
        assert_eq!((r.lhs, r.rhs, r.margin), (2, 2, 0));
        assert!(r.holds && r.sufficient_condition);
    }

    #[test]
    fn generators_beyond_the_initial_table_guess() {
        // 43 exceeds 2 * 9, the first representability-table size guess;
        // the redundancy test must still be able to index it. 43 = 34 + 9
        // with 34 = 17 * 2, so it is redundant.
        let s = ns(&[2, 9, 43]);
        assert_eq!(s.generators(), [2, 9]);
        assert_eq!(s.frobenius(), 7);
    }

    #[test]
    fn no_coprime_generator_pair() {
        // gcd(7, 14) = 7, so the product of the two smallest generators
        // does not bound the Frobenius number; the table has to grow until
        // a run of 7 consecutive elements certifies completeness.
        let s = ns(&[7, 14, 33]);
        assert_eq!(s.generators(), [7, 33]);
        assert_eq!(s.frobenius(), 7 * 33 - 7 - 33);
        assert_eq!(s.genus(), (7 - 1) * (33 - 1) / 2);

        // No coprime pair at all: pairwise gcds are 2, 3, and 5.
        let s = ns(&[6, 10, 15]);
        assert_eq!(s.frobenius(), 29);
        assert!(s.contains(30) && s.contains(31) && !s.contains(29));
    }
}
