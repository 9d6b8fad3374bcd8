//! Three families of lattice semigroups built from 1-dimensional bases,
//! each with two independent code paths: `build` materializes the gap set
//! and runs it through full validation, while `closed_forms` produces the
//! generator / pseudo-Frobenius / count data from combinatorial formulas
//! alone. The paths share nothing but point arithmetic, so cross-checking
//! one against the other is a real test.
//!
//! - stripe: gaps are every point of norm below the base multiplicity plus
//!   the base's gaps embedded on each axis;
//! - graded: gaps are every point whose norm is a gap of the base;
//! - axis: gaps of one base per axis, embedded on that axis only.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::gns::{Gns, QuasiFlags, MAX_DIMENSION};
use crate::ns::NumericalSemigroup;
use crate::point::Point;
use crate::wilf::binom_b;

/// Closed-form invariant data for a construction. Point sets are in
/// graded-lex order; counts are computed from formulas, not from the sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedForms {
    pub generators: Vec<Point>,
    pub embedding_dimension: u64,
    pub pseudo_frobenius: Vec<Point>,
    pub type_t: u64,
    pub special_gaps: Vec<Point>,
    pub maximal_gaps: Vec<Point>,
    pub tau: u64,
    pub genus: u64,
    pub n_count: u64,
    pub c_count: u64,
}

/// Stripe closed forms carry the off-axis low-norm kernel explicitly: those
/// points are pseudo-Frobenius elements that do not come from the base.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripeClosedForms {
    pub forms: ClosedForms,
    pub kernel: Vec<Point>,
}

/// All points of the given coordinate sum, lexicographically.
fn shell(dim: usize, norm: u64) -> Vec<Point> {
    fn rec(dim: usize, left: u64, prefix: &mut Vec<u32>, out: &mut Vec<Point>) {
        if prefix.len() == dim - 1 {
            prefix.push(left as u32);
            out.push(Point::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for v in 0..=left {
            prefix.push(v as u32);
            rec(dim, left - v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = vec![];
    rec(dim, norm, &mut vec![], &mut out);
    out
}

fn off_axis_shell(dim: usize, norm: u64) -> Vec<Point> {
    shell(dim, norm)
        .into_iter()
        .filter(|p| !p.is_axial())
        .collect()
}

fn coord(value: u64) -> u32 {
    u32::try_from(value).expect("coordinate fits u32 at desk scale")
}

fn embed_on_axes(dim: usize, values: &[u64]) -> Vec<Point> {
    let mut out = vec![];
    for axis in 0..dim {
        for &v in values {
            out.push(Point::on_axis(dim, axis, coord(v)));
        }
    }
    out
}

fn check_dimension(dim: usize, least: usize) -> Result<(), Error> {
    if dim < least || dim > MAX_DIMENSION {
        return Err(Error::Domain(format!(
            "dimension {dim} outside [{least}, {MAX_DIMENSION}]"
        )));
    }
    Ok(())
}

/// Stripe construction over a base semigroup with multiplicity m: the gap
/// set is every point of norm in [1, m-1] together with the base's gaps on
/// each axis.
#[derive(Debug, Clone)]
pub struct StripeSpec {
    base: NumericalSemigroup,
    dimension: usize,
}

impl StripeSpec {
    pub fn new(base: NumericalSemigroup, dimension: usize) -> Result<StripeSpec, Error> {
        check_dimension(dimension, 2)?;
        if base.is_natural() {
            return Err(Error::Domain(
                "stripe construction needs a base with at least one gap".into(),
            ));
        }
        Ok(StripeSpec { base, dimension })
    }

    pub fn base(&self) -> &NumericalSemigroup {
        &self.base
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// The gap set this construction prescribes.
    pub fn gap_points(&self) -> Vec<Point> {
        let d = self.dimension;
        let m = self.base.multiplicity();
        let mut gaps = vec![];
        for norm in 1..m {
            gaps.extend(shell(d, norm));
        }
        let high: Vec<u64> = self.base.gaps().iter().copied().filter(|&h| h >= m).collect();
        gaps.extend(embed_on_axes(d, &high));
        gaps.sort();
        gaps
    }

    /// Materializes and fully validates the semigroup.
    pub fn build(&self) -> Result<Gns, Error> {
        Gns::from_gaps(self.dimension, self.gap_points())
    }

    pub fn closed_forms(&self) -> Result<StripeClosedForms, Error> {
        let d = self.dimension;
        let du = d as u64;
        let m = self.base.multiplicity();
        let f = self.base.frobenius() as u64;
        let e_t = self.base.embedding_dimension();
        let pf_t = self.base.pseudo_frobenius();
        let t_t = pf_t.len() as u64;
        let sg_t = self.base.special_gaps();
        let high_gaps = self.base.gaps().iter().filter(|&&h| h >= m).count() as u64;

        // kernel: off-axis points of norm below m
        let mut kernel = vec![];
        for norm in 1..m {
            kernel.extend(off_axis_shell(d, norm));
        }
        kernel.sort();

        let mut generators = embed_on_axes(d, self.base.generators());
        for norm in m..=2 * m - 1 {
            generators.extend(off_axis_shell(d, norm));
        }
        generators.sort();

        let mut shell_sum = 0u64;
        for i in m..=2 * m - 1 {
            shell_sum = shell_sum
                .checked_add(binom_b(du, i)?)
                .ok_or_else(|| Error::RangeExceeded("generator count overflows".into()))?;
        }
        let embedding_dimension = shell_sum - du * (m - e_t);
        debug_assert_eq!(embedding_dimension as usize, generators.len());

        let mut pseudo_frobenius = embed_on_axes(d, &pf_t);
        pseudo_frobenius.extend(kernel.iter().cloned());
        pseudo_frobenius.sort();

        let low_ball = binom_b(du + 1, m - 1)? - 1; // points of norm in [1, m-1]
        let type_t = low_ball - du * (m - 1) + du * t_t;
        debug_assert_eq!(type_t as usize, pseudo_frobenius.len());

        let mut special_gaps = embed_on_axes(d, &sg_t);
        special_gaps.extend(kernel.iter().filter(|x| 2 * x.norm() >= m).cloned());
        special_gaps.sort();

        let mut maximal_gaps = embed_on_axes(d, &[f]);
        maximal_gaps.extend(off_axis_shell(d, m - 1));
        maximal_gaps.sort();
        let tau = binom_b(du, m - 1)?;
        debug_assert_eq!(tau as usize, maximal_gaps.len());

        let genus = low_ball + du * high_gaps;
        let n_count = 1 + du * (self.base.sporadic_count() - 1);
        let c_count = binom_b(du + 1, m - 1)? + du * (f + 1 - m);

        Ok(StripeClosedForms {
            forms: ClosedForms {
                generators,
                embedding_dimension,
                pseudo_frobenius,
                type_t,
                special_gaps,
                maximal_gaps,
                tau,
                genus,
                n_count,
                c_count,
            },
            kernel,
        })
    }
}

/// Graded construction: the gap set is every point whose norm is a gap of
/// the base, so membership depends on the norm alone.
#[derive(Debug, Clone)]
pub struct GradedSpec {
    base: NumericalSemigroup,
    dimension: usize,
}

impl GradedSpec {
    pub fn new(base: NumericalSemigroup, dimension: usize) -> Result<GradedSpec, Error> {
        check_dimension(dimension, 1)?;
        Ok(GradedSpec { base, dimension })
    }

    pub fn base(&self) -> &NumericalSemigroup {
        &self.base
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn gap_points(&self) -> Vec<Point> {
        let mut gaps = vec![];
        for &h in self.base.gaps() {
            gaps.extend(shell(self.dimension, h));
        }
        gaps.sort();
        gaps
    }

    pub fn build(&self) -> Result<Gns, Error> {
        Gns::from_gaps(self.dimension, self.gap_points())
    }

    pub fn closed_forms(&self) -> Result<ClosedForms, Error> {
        let d = self.dimension;
        let du = d as u64;
        let f = self.base.frobenius();

        let collect_shells = |values: &[u64]| -> Vec<Point> {
            let mut out: Vec<Point> = values.iter().flat_map(|&v| shell(d, v)).collect();
            out.sort();
            out
        };
        let count_shells = |values: &[u64]| -> Result<u64, Error> {
            values.iter().try_fold(0u64, |acc, &v| {
                acc.checked_add(binom_b(du, v)?)
                    .ok_or_else(|| Error::RangeExceeded("shell count sum overflows".into()))
            })
        };

        let pf_t = self.base.pseudo_frobenius();
        let generators = collect_shells(self.base.generators());
        let embedding_dimension = count_shells(self.base.generators())?;
        let pseudo_frobenius = collect_shells(&pf_t);
        let type_t = count_shells(&pf_t)?;
        let special_gaps = collect_shells(&self.base.special_gaps());
        let genus = count_shells(self.base.gaps())?;

        let sporadic: Vec<u64> = if f < 0 {
            vec![]
        } else {
            (0..=f as u64).filter(|&x| self.base.contains(x)).collect()
        };
        let n_count = count_shells(&sporadic)?;

        let (maximal_gaps, tau, c_count) = if f < 0 {
            (vec![], 0, 0)
        } else {
            (
                shell(d, f as u64),
                binom_b(du, f as u64)?,
                binom_b(du + 1, f as u64)?,
            )
        };

        Ok(ClosedForms {
            generators,
            embedding_dimension,
            pseudo_frobenius,
            type_t,
            special_gaps,
            maximal_gaps,
            tau,
            genus,
            n_count,
            c_count,
        })
    }

    /// Quasi-classification straight from the base: the maximal gaps all sit
    /// on the top norm shell, so quasi-irreducibility matches the base having
    /// its top gap as only special gap, and quasi-symmetry matches base
    /// symmetry.
    pub fn quasi_flags(&self) -> QuasiFlags {
        let c = self.base.classify();
        QuasiFlags {
            quasi_irreducible: c.irreducible,
            quasi_symmetric: c.symmetric,
        }
    }
}

/// Axis construction: component gaps embedded on their own axes; everything
/// off the axes belongs to the semigroup.
#[derive(Debug, Clone)]
pub struct AxisSpec {
    components: Vec<NumericalSemigroup>,
}

impl AxisSpec {
    pub fn new(components: Vec<NumericalSemigroup>) -> Result<AxisSpec, Error> {
        check_dimension(components.len(), 2)?;
        if components.iter().any(NumericalSemigroup::is_natural) {
            return Err(Error::Domain(
                "axis construction needs components with at least one gap".into(),
            ));
        }
        Ok(AxisSpec { components })
    }

    pub fn components(&self) -> &[NumericalSemigroup] {
        &self.components
    }

    pub fn dimension(&self) -> usize {
        self.components.len()
    }

    pub fn gap_points(&self) -> Vec<Point> {
        let d = self.dimension();
        let mut gaps = vec![];
        for (axis, s) in self.components.iter().enumerate() {
            for &h in s.gaps() {
                gaps.push(Point::on_axis(d, axis, coord(h)));
            }
        }
        gaps.sort();
        gaps
    }

    pub fn build(&self) -> Result<Gns, Error> {
        Gns::from_gaps(self.dimension(), self.gap_points())
    }

    pub fn closed_forms(&self) -> Result<ClosedForms, Error> {
        let d = self.dimension();
        let du = d as u64;

        let mut generators = vec![];
        for (axis, s) in self.components.iter().enumerate() {
            for &g in s.generators() {
                generators.push(Point::on_axis(d, axis, coord(g)));
            }
        }
        // one unit step off an axis reaches every remaining element:
        // e_i + h e_j for 2 <= h <= m_j, the plane points e_i + e_j, and in
        // dimension >= 3 the triples e_i + e_j + e_k.
        for i in 0..d {
            for j in 0..d {
                if i == j {
                    continue;
                }
                for h in 2..=self.components[j].multiplicity() {
                    let mut coords = vec![0u32; d];
                    coords[i] = 1;
                    coords[j] = coord(h);
                    generators.push(Point::new(coords));
                }
            }
        }
        for i in 0..d {
            for j in i + 1..d {
                let mut coords = vec![0u32; d];
                coords[i] = 1;
                coords[j] = 1;
                generators.push(Point::new(coords));
            }
        }
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let mut coords = vec![0u32; d];
                    coords[i] = 1;
                    coords[j] = 1;
                    coords[k] = 1;
                    generators.push(Point::new(coords));
                }
            }
        }
        generators.sort();

        let sum_e: u64 = self.components.iter().map(|s| s.embedding_dimension()).sum();
        let sum_m1: u64 = self.components.iter().map(|s| s.multiplicity() - 1).sum();
        let embedding_dimension = sum_e
            + (du - 1) * sum_m1
            + crate::wilf::binomial(du, 2)?
            + crate::wilf::binomial(du, 3)?;
        debug_assert_eq!(embedding_dimension as usize, generators.len());

        let mut pseudo_frobenius = vec![];
        let mut special_gaps = vec![];
        let mut maximal_gaps = vec![];
        let mut type_t = 0u64;
        for (axis, s) in self.components.iter().enumerate() {
            for &x in &s.pseudo_frobenius() {
                pseudo_frobenius.push(Point::on_axis(d, axis, coord(x)));
            }
            for &x in &s.special_gaps() {
                special_gaps.push(Point::on_axis(d, axis, coord(x)));
            }
            maximal_gaps.push(Point::on_axis(d, axis, coord(s.frobenius() as u64)));
            type_t += s.pseudo_frobenius().len() as u64;
        }
        pseudo_frobenius.sort();
        special_gaps.sort();
        maximal_gaps.sort();

        let genus: u64 = self.components.iter().map(NumericalSemigroup::genus).sum();
        let sum_n: u64 = self.components.iter().map(|s| s.sporadic_count()).sum();
        let sum_c: u64 = self
            .components
            .iter()
            .map(|s| (s.frobenius() + 1) as u64)
            .sum();

        Ok(ClosedForms {
            generators,
            embedding_dimension,
            pseudo_frobenius,
            type_t,
            special_gaps,
            maximal_gaps,
            tau: du,
            genus,
            n_count: sum_n - (du - 1),
            c_count: sum_c - (du - 1),
        })
    }

    /// Quasi-classification straight from the components.
    pub fn quasi_flags(&self) -> QuasiFlags {
        QuasiFlags {
            quasi_irreducible: self.components.iter().all(|s| s.classify().irreducible),
            quasi_symmetric: self.components.iter().all(|s| s.classify().symmetric),
        }
    }
}

/// Splits a weight target off a weakly decreasing vector: returns `beta`
/// with `beta <= alpha` componentwise and coordinate sum exactly `target`.
/// Such a split exists exactly when the sum of `alpha` reaches `target`.
///
/// When one entry already reaches the target, the first such entry takes it
/// all. Otherwise entries are decremented one unit at a time across the
/// nonzero prefix until the remaining deficit fits in one more sweep, which
/// is charged to the lowest indices.
pub fn lemma_split(alpha: &[u64], target: u64) -> Result<Vec<u64>, Error> {
    if alpha.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotSorted);
    }
    let sum = alpha.iter().try_fold(0u64, |acc, &a| {
        acc.checked_add(a)
            .ok_or_else(|| Error::RangeExceeded("weight sum overflows".into()))
    })?;
    if sum < target {
        return Err(Error::InsufficientSum { sum, target });
    }

    let mut beta = vec![0u64; alpha.len()];
    if alpha[0] >= target {
        beta[0] = target;
        return Ok(beta);
    }

    let mut work = alpha.to_vec();
    let mut remaining = target;
    loop {
        let r = work.iter().filter(|&&a| a > 0).count() as u64;
        if r >= remaining {
            for b in beta.iter_mut().take(remaining as usize) {
                *b += 1;
            }
            return Ok(beta);
        }
        for (w, b) in work.iter_mut().zip(beta.iter_mut()) {
            if *w > 0 {
                *w -= 1;
                *b += 1;
            }
        }
        remaining -= r;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn p(coords: &[u32]) -> Point {
        Point::new(coords.to_vec())
    }

    fn pts(coords: &[&[u32]]) -> Vec<Point> {
        let mut v: Vec<Point> = coords.iter().map(|c| p(c)).collect();
        v.sort();
        v
    }

    #[test]
    fn split_examples() {
        assert_eq!(lemma_split(&[8, 7, 3, 2], 10), Ok(vec![3, 3, 2, 2]));
        assert_eq!(lemma_split(&[10, 0, 0], 10), Ok(vec![10, 0, 0]));
        assert_eq!(lemma_split(&[3, 3, 3], 7), Ok(vec![3, 2, 2]));
        assert_eq!(lemma_split(&[5, 1], 3), Ok(vec![3, 0]));
        assert_eq!(lemma_split(&[2, 2, 1], 4), Ok(vec![2, 1, 1]));
        // exact-sum split returns alpha itself
        assert_eq!(lemma_split(&[3, 2], 5), Ok(vec![3, 2]));
    }

    #[test]
    fn split_rejects_bad_inputs() {
        assert_eq!(lemma_split(&[1, 2], 2), Err(Error::NotSorted));
        assert_eq!(
            lemma_split(&[3, 2], 6),
            Err(Error::InsufficientSum { sum: 5, target: 6 })
        );
        assert_eq!(
            lemma_split(&[], 1),
            Err(Error::InsufficientSum { sum: 0, target: 1 })
        );
    }

    #[test]
    fn stripe_smallest_case() {
        let spec = StripeSpec::new(ns(&[2, 3]), 2).unwrap();
        assert_eq!(spec.gap_points(), pts(&[&[1, 0], &[0, 1]]));
        let s = spec.build().unwrap();
        assert_eq!(s.genus(), 2);

        let closed = spec.closed_forms().unwrap();
        assert_eq!(closed.forms.embedding_dimension, 7);
        assert_eq!(closed.forms.type_t, 2);
        assert_eq!(closed.forms.tau, 2);
        assert_eq!(closed.kernel, vec![]);
        assert_eq!(closed.forms.generators, s.minimal_generators());
        assert_eq!(closed.forms.pseudo_frobenius, s.pseudo_frobenius());
    }

    #[test]
    fn stripe_rejects_bad_specs() {
        assert!(matches!(
            StripeSpec::new(ns(&[1]), 2),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            StripeSpec::new(ns(&[2, 3]), 1),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn stripe_med_base() {
        // Base <3,4,5>, d = 2: the norm-1,2 ball has 5 points, so
        // t = 5 - 2*2 + 2*2 = 5, e = (4 + 5 + 6) - 0 = 15. Brute force
        // agrees on both.
        let spec = StripeSpec::new(ns(&[3, 4, 5]), 2).unwrap();
        let closed = spec.closed_forms().unwrap();
        assert_eq!(closed.forms.embedding_dimension, 15);
        assert_eq!(closed.forms.type_t, 5);
        assert_eq!(closed.kernel, pts(&[&[1, 1]]));

        let s = spec.build().unwrap();
        assert_eq!(closed.forms.generators, s.minimal_generators());
        assert_eq!(closed.forms.pseudo_frobenius, s.pseudo_frobenius());
        assert_eq!(closed.forms.type_t, s.pseudo_frobenius().len() as u64);

        let d3 = StripeSpec::new(ns(&[3, 4, 5]), 3).unwrap();
        assert_eq!(d3.build().unwrap().genus(), 9);
        assert_eq!(d3.closed_forms().unwrap().forms.genus, 9);
    }

    #[test]
    fn stripe_closed_counts_match_brute_force() {
        let spec = StripeSpec::new(ns(&[5, 6, 13]), 2).unwrap();
        let closed = spec.closed_forms().unwrap();
        assert_eq!(closed.forms.embedding_dimension, 36);
        assert_eq!(closed.forms.type_t, 10);
        assert_eq!(closed.kernel.len(), 6);

        let s = spec.build().unwrap();
        let inv = s.invariants();
        assert_eq!(closed.forms.embedding_dimension, inv.embedding_dimension);
        assert_eq!(closed.forms.type_t, inv.type_t);
        assert_eq!(closed.forms.tau, inv.tau.unwrap());
        assert_eq!(closed.forms.genus, inv.genus);
        assert_eq!(closed.forms.n_count, inv.n_count);
        assert_eq!(closed.forms.c_count, inv.c_count);
        assert_eq!(closed.forms.special_gaps, s.special_gaps());
        assert_eq!(closed.forms.maximal_gaps, s.maximal_gaps());
    }

    #[test]
    fn graded_small_cases() {
        let spec = GradedSpec::new(ns(&[2, 5]), 3).unwrap();
        let s = spec.build().unwrap();
        assert_eq!(s.genus(), 13); // shells of norm 1 and 3: 3 + 10
        assert_eq!(spec.closed_forms().unwrap().genus, 13);

        // dimension 1 degenerates to the base itself
        let spec = GradedSpec::new(ns(&[2, 3]), 1).unwrap();
        let closed = spec.closed_forms().unwrap();
        assert_eq!(closed.embedding_dimension, 2);
        assert_eq!(closed.type_t, 1);
        assert_eq!(closed.tau, 1);
        let s = spec.build().unwrap();
        assert_eq!(closed.generators, s.minimal_generators());
    }

    #[test]
    fn graded_closed_counts_match_brute_force() {
        let spec = GradedSpec::new(ns(&[4, 6, 7]), 2).unwrap();
        let closed = spec.closed_forms().unwrap();
        assert_eq!(closed.embedding_dimension, 20);
        assert_eq!(closed.type_t, 10);

        let s = spec.build().unwrap();
        let inv = s.invariants();
        assert_eq!(closed.embedding_dimension, inv.embedding_dimension);
        assert_eq!(closed.type_t, inv.type_t);
        assert_eq!(closed.tau, inv.tau.unwrap());
        assert_eq!(closed.genus, inv.genus);
        assert_eq!(closed.n_count, inv.n_count);
        assert_eq!(closed.c_count, inv.c_count);
        assert_eq!(closed.generators, s.minimal_generators());
        assert_eq!(closed.pseudo_frobenius, s.pseudo_frobenius());
        assert_eq!(closed.special_gaps, s.special_gaps());
        assert_eq!(closed.maximal_gaps, s.maximal_gaps());
    }

    #[test]
    fn graded_type_formula_for_two_generators() {
        // For a base <a, b> the pseudo-Frobenius set is the single norm
        // ab - a - b, so t is one shell count.
        for (a, b, d) in [(2u64, 3u64, 2u64), (3, 5, 2), (3, 5, 3), (5, 6, 4)] {
            let spec = GradedSpec::new(ns(&[a, b]), d as usize).unwrap();
            let closed = spec.closed_forms().unwrap();
            let expected = binom_b(d, a * b - a - b).unwrap();
            assert_eq!(closed.type_t, expected);
        }
    }

    #[test]
    fn graded_quasi_flags_follow_base() {
        // symmetric base: both flags set
        let spec = GradedSpec::new(ns(&[4, 6, 7]), 2).unwrap();
        let closed = spec.quasi_flags();
        assert!(closed.quasi_irreducible && closed.quasi_symmetric);
        assert_eq!(closed, spec.build().unwrap().quasi_flags());

        // pseudo-symmetric base: irreducible but not symmetric
        let spec = GradedSpec::new(ns(&[3, 4, 5]), 2).unwrap();
        let closed = spec.quasi_flags();
        assert!(closed.quasi_irreducible && !closed.quasi_symmetric);
        assert_eq!(closed, spec.build().unwrap().quasi_flags());

        // neither
        let spec = GradedSpec::new(ns(&[5, 6, 8]), 2).unwrap();
        let closed = spec.quasi_flags();
        assert!(!closed.quasi_irreducible && !closed.quasi_symmetric);
        assert_eq!(closed, spec.build().unwrap().quasi_flags());
    }

    #[test]
    fn axis_pair_of_smallest() {
        let spec = AxisSpec::new(vec![ns(&[2, 3]), ns(&[2, 3])]).unwrap();
        let closed = spec.closed_forms().unwrap();
        assert_eq!(closed.embedding_dimension, 7);
        assert_eq!(
            closed.generators,
            pts(&[&[2, 0], &[3, 0], &[0, 2], &[0, 3], &[2, 1], &[1, 2], &[1, 1]])
        );
        assert_eq!(closed.special_gaps, pts(&[&[1, 0], &[0, 1]]));

        let s = spec.build().unwrap();
        assert_eq!(closed.generators, s.minimal_generators());
        assert_eq!(closed.special_gaps, s.special_gaps());
    }

    #[test]
    fn axis_mixed_pair() {
        let spec = AxisSpec::new(vec![ns(&[2, 3]), ns(&[3, 5])]).unwrap();
        let closed = spec.closed_forms().unwrap();
        assert_eq!(closed.embedding_dimension, 8);
        assert_eq!(closed.type_t, 2);
        assert_eq!(closed.genus, 5);
        assert_eq!(closed.n_count, 4);
        assert_eq!(closed.c_count, 9);
        assert_eq!(closed.tau, 2);

        let s = spec.build().unwrap();
        let inv = s.invariants();
        assert_eq!(closed.embedding_dimension, inv.embedding_dimension);
        assert_eq!(closed.type_t, inv.type_t);
        assert_eq!(closed.genus, inv.genus);
        assert_eq!(closed.n_count, inv.n_count);
        assert_eq!(closed.c_count, inv.c_count);
        assert_eq!(closed.generators, s.minimal_generators());
        assert_eq!(closed.pseudo_frobenius, s.pseudo_frobenius());
        assert_eq!(closed.maximal_gaps, s.maximal_gaps());
    }

    #[test]
    fn axis_triple() {
        let spec = AxisSpec::new(vec![ns(&[2, 3]), ns(&[2, 3]), ns(&[2, 3])]).unwrap();
        let closed = spec.closed_forms().unwrap();
        // 6 component generators + 2*3 raised steps + 3 pairs + 1 triple
        assert_eq!(closed.embedding_dimension, 16);
        let s = spec.build().unwrap();
        assert_eq!(closed.generators, s.minimal_generators());
        assert_eq!(closed.tau, 3);
    }

    #[test]
    fn axis_quasi_flags_follow_components() {
        let both = AxisSpec::new(vec![ns(&[2, 3]), ns(&[4, 6, 7])]).unwrap();
        let flags = both.quasi_flags();
        assert!(flags.quasi_irreducible && flags.quasi_symmetric);
        assert_eq!(flags, both.build().unwrap().quasi_flags());

        let pseudo = AxisSpec::new(vec![ns(&[2, 3]), ns(&[3, 4, 5])]).unwrap();
        let flags = pseudo.quasi_flags();
        assert!(flags.quasi_irreducible && !flags.quasi_symmetric);
        assert_eq!(flags, pseudo.build().unwrap().quasi_flags());

        let neither = AxisSpec::new(vec![ns(&[2, 3]), ns(&[5, 6, 8])]).unwrap();
        let flags = neither.quasi_flags();
        assert!(!flags.quasi_irreducible && !flags.quasi_symmetric);
        assert_eq!(flags, neither.build().unwrap().quasi_flags());
    }

    #[test]
    fn axis_rejects_bad_specs() {
        assert!(matches!(
            AxisSpec::new(vec![ns(&[2, 3])]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            AxisSpec::new(vec![ns(&[2, 3]), ns(&[1])]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn constructions_always_validate() {
        for d in 2..=4 {
            assert!(StripeSpec::new(ns(&[5, 6, 13]), d).unwrap().build().is_ok());
            assert!(GradedSpec::new(ns(&[4, 6, 7]), d).unwrap().build().is_ok());
        }
        assert!(AxisSpec::new(vec![ns(&[3, 5]), ns(&[4, 6, 7]), ns(&[2, 3])])
            .unwrap()
            .build()
            .is_ok());
    }
}
