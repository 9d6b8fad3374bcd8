//! Shared helpers for the integration suites: a seeded random corpus of
//! construction instances, and a subset-search enumeration oracle that is
//! fully independent of the production tree walk.

#![allow(dead_code)]

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gnslab_core::{
    AxisSpec, ClosedForms, Gns, GradedSpec, NumericalSemigroup, StripeSpec,
};

/// One corpus entry: a construction recipe with a printable label.
pub enum AnySpec {
    Stripe(StripeSpec),
    Graded(GradedSpec),
    Axis(AxisSpec),
}

impl AnySpec {
    pub fn label(&self) -> String {
        match self {
            AnySpec::Stripe(s) => format!(
                "stripe base {:?} dim {}",
                s.base().generators(),
                s.dimension()
            ),
            AnySpec::Graded(s) => format!(
                "graded base {:?} dim {}",
                s.base().generators(),
                s.dimension()
            ),
            AnySpec::Axis(s) => format!(
                "axis {:?}",
                s.components()
                    .iter()
                    .map(|c| c.generators().to_vec())
                    .collect::<Vec<_>>()
            ),
        }
    }

    pub fn dimension(&self) -> usize {
        match self {
            AnySpec::Stripe(s) => s.dimension(),
            AnySpec::Graded(s) => s.dimension(),
            AnySpec::Axis(s) => s.dimension(),
        }
    }

    pub fn build(&self) -> Gns {
        let built = match self {
            AnySpec::Stripe(s) => s.build(),
            AnySpec::Graded(s) => s.build(),
            AnySpec::Axis(s) => s.build(),
        };
        built.unwrap_or_else(|e| panic!("{} failed to build: {e}", self.label()))
    }

    pub fn closed(&self) -> ClosedForms {
        let forms = match self {
            AnySpec::Stripe(s) => s.closed_forms().map(|c| c.forms),
            AnySpec::Graded(s) => s.closed_forms(),
            AnySpec::Axis(s) => s.closed_forms(),
        };
        forms.unwrap_or_else(|e| panic!("{} closed forms failed: {e}", self.label()))
    }
}

/// Random proper numerical semigroup with multiplicity in [2, m_max] and
/// Frobenius number at most f_cap, by rejection sampling.
fn random_semigroup(rng: &mut ChaCha8Rng, m_max: u64, f_cap: i64) -> NumericalSemigroup {
    loop {
        let m = rng.random_range(2..=m_max);
        let extras = rng.random_range(1..=3u32);
        let mut gens = vec![m];
        for _ in 0..extras {
            gens.push(rng.random_range(m + 1..=3 * m));
        }
        match NumericalSemigroup::from_generators(&gens) {
            Ok(s) if !s.is_natural() && s.frobenius() <= f_cap => return s,
            _ => continue,
        }
    }
}

/// The randomized corpus: three constructions in dimensions 2, 3, and 4,
/// with base sizes chosen so the whole brute-force pass stays fast. The
/// seed is fixed, so every suite sees the same instances.
pub fn corpus() -> &'static Vec<AnySpec> {
    static CORPUS: OnceLock<Vec<AnySpec>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6e5_1ab);
        let mut out: Vec<AnySpec> = vec![];
        // (dimension, instances per construction, m_max, f_cap)
        let plan: &[(usize, usize, u64, i64)] =
            &[(2, 40, 10, 60), (3, 35, 7, 20), (4, 30, 5, 10)];
        for &(dim, count, m_max, f_cap) in plan {
            for _ in 0..count {
                let base = random_semigroup(&mut rng, m_max, f_cap);
                out.push(AnySpec::Stripe(StripeSpec::new(base, dim).unwrap()));

                let base = random_semigroup(&mut rng, m_max, f_cap);
                out.push(AnySpec::Graded(GradedSpec::new(base, dim).unwrap()));

                let components: Vec<NumericalSemigroup> = (0..dim)
                    .map(|_| random_semigroup(&mut rng, m_max, f_cap))
                    .collect();
                out.push(AnySpec::Axis(AxisSpec::new(components).unwrap()));
            }
        }
        out
    })
}

/// Brute-force builds of the whole corpus, computed once and shared.
pub fn built_corpus() -> &'static Vec<Gns> {
    static BUILT: OnceLock<Vec<Gns>> = OnceLock::new();
    BUILT.get_or_init(|| corpus().iter().map(AnySpec::build).collect())
}

/// Counts numerical semigroups by genus with a subset search, sharing no
/// code with the production enumeration: every subset of [1, 2*g_max - 1]
/// is tested literally for being the gap set of a semigroup (complement
/// closed under addition). Sound because every semigroup of genus g has
/// its Frobenius number below 2g.
pub fn naive_genus_counts(g_max: u32) -> Vec<u64> {
    assert!((1..=12).contains(&g_max), "subset search is exponential");
    let top = 2 * g_max as usize - 1;
    let mut counts = vec![0u64; g_max as usize + 1];
    for mask in 0u32..(1 << top) {
        let genus = mask.count_ones();
        if genus > g_max {
            continue;
        }
        // bit i of mask set <=> the integer i + 1 is a gap
        let is_gap = |x: usize| x >= 1 && x <= top && mask & (1 << (x - 1)) != 0;
        let frobenius = (1..=top).rev().find(|&x| is_gap(x)).unwrap_or(0);
        let mut closed = true;
        'outer: for a in 1..=frobenius {
            if is_gap(a) {
                continue;
            }
            for b in a..=frobenius.saturating_sub(a) {
                if !is_gap(b) && is_gap(a + b) {
                    closed = false;
                    break 'outer;
                }
            }
        }
        if closed {
            counts[genus as usize] += 1;
        }
    }
    counts
}
