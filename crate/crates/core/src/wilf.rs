//! Conjecture bookkeeping: exact shell-count binomials, Wilf-style reports
//! for both the classical and the lattice form of the inequality, and the
//! combinatorial inequality that powers the stripe construction's
//! sufficient condition, scanned over parameter grids.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::ns::InvariantRecord;

/// Exact binomial coefficient in 64 bits; `RangeExceeded` if the value does
/// not fit. Intermediates run in 128 bits, so the usual "overflows on the
/// way to a small answer" failure mode does not apply.
pub fn binomial(n: u64, k: u64) -> Result<u64, Error> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc
            .checked_mul((n - k + i) as u128)
            .ok_or_else(|| Error::RangeExceeded(format!("binomial({n}, {k}) overflows")))?;
        acc /= i as u128; // exact: acc is now C(n-k+i, i)
    }
    u64::try_from(acc).map_err(|_| Error::RangeExceeded(format!("binomial({n}, {k}) overflows")))
}

/// Number of points of coordinate sum `m` in `d` coordinates:
/// `C(m + d - 1, d - 1)`.
pub fn binom_b(d: u64, m: u64) -> Result<u64, Error> {
    if d == 0 {
        return Err(Error::Domain("shell count needs d >= 1".into()));
    }
    binomial(m + d - 1, d - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WilfVariant {
    Classical,
    Generalized,
    EquivalentForm,
}

/// One inequality check: `holds` is `lhs >= rhs`, `margin` is `lhs - rhs`,
/// and `sufficient_condition` records whether `e >= d(t+1)` (which forces
/// the inequality) held for the instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WilfReport {
    pub variant: WilfVariant,
    pub lhs: i64,
    pub rhs: i64,
    pub margin: i64,
    pub holds: bool,
    pub sufficient_condition: bool,
}

/// The lattice-form conjecture `e*n >= d*c` together with its equivalent
/// rearrangement `(e - d)*n >= d*g`; the two verdicts agree whenever
/// `c = g + n`, which every valid instance satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralizedWilfReport {
    pub conjecture: WilfReport,
    pub equivalent: WilfReport,
}

fn report(variant: WilfVariant, lhs: i64, rhs: i64, sufficient: bool) -> WilfReport {
    WilfReport {
        variant,
        lhs,
        rhs,
        margin: lhs - rhs,
        holds: lhs >= rhs,
        sufficient_condition: sufficient,
    }
}

/// Classical check `e * n >= F + 1` from a dimension-1 invariant record.
pub fn classical_report(inv: &InvariantRecord) -> WilfReport {
    debug_assert_eq!(inv.dimension, 1);
    let e = inv.embedding_dimension as i64;
    let n = inv.n_count as i64;
    let sufficient = inv.embedding_dimension > inv.type_t;
    report(WilfVariant::Classical, e * n, inv.frobenius.unwrap_or(-1) + 1, sufficient)
}

/// Lattice-form check from an invariant record of any dimension.
pub fn generalized_report(inv: &InvariantRecord) -> GeneralizedWilfReport {
    let d = inv.dimension as i64;
    let e = inv.embedding_dimension as i64;
    let n = inv.n_count as i64;
    let c = inv.c_count as i64;
    let g = inv.genus as i64;
    let sufficient = inv.embedding_dimension >= inv.dimension as u64 * (inv.type_t + 1);
    GeneralizedWilfReport {
        conjecture: report(WilfVariant::Generalized, e * n, d * c, sufficient),
        equivalent: report(WilfVariant::EquivalentForm, (e - d) * n, d * g, sufficient),
    }
}

/// One evaluation of the stripe count inequality
/// `B_{d+1}(2m-1) - (d+1) B_{d+1}(m-1) >= d [m - e - d(m-1-t)]`
/// at parameters `(m, d, e, t)` of the base semigroup. The side conditions
/// record the sharper lower bounds `lhs >= 0`, `lhs >= d(d-1)` (needs
/// m >= 3) and `lhs >= d(m-6)` (needs m >= 7); a bound whose precondition
/// fails is reported as `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripeInequalityRecord {
    pub m: u64,
    pub d: u64,
    pub e_t: u64,
    pub t_t: u64,
    pub lhs: i64,
    pub theta: i64,
    pub nonnegative: bool,
    pub ge_d_times_d_minus_1: Option<bool>,
    pub ge_d_times_m_minus_6: Option<bool>,
    pub ge_theta: bool,
}

/// Evaluates the stripe count inequality. Admissible parameters are the
/// necessary conditions on a proper numerical semigroup of multiplicity m:
/// `m >= 2`, `d >= 2`, `2 <= e_t <= m`, `1 <= t_t <= m - 1` (a semigroup
/// with one generator and finite complement is the naturals, which has
/// multiplicity 1, so e_t = 1 never pairs with m >= 2).
pub fn stripe_inequality(m: u64, d: u64, e_t: u64, t_t: u64) -> Result<StripeInequalityRecord, Error> {
    if m < 2 || d < 2 {
        return Err(Error::Domain(format!(
            "stripe inequality needs m >= 2 and d >= 2, got m = {m}, d = {d}"
        )));
    }
    if e_t < 2 || e_t > m {
        return Err(Error::Domain(format!(
            "embedding dimension {e_t} out of range [2, {m}]"
        )));
    }
    if t_t == 0 || t_t > m - 1 {
        return Err(Error::Domain(format!(
            "type {t_t} out of range [1, {}]",
            m - 1
        )));
    }

    let as_i64 = |v: u64, what: &str| -> Result<i64, Error> {
        i64::try_from(v).map_err(|_| Error::RangeExceeded(format!("{what} overflows i64")))
    };
    let big = as_i64(binom_b(d + 1, 2 * m - 1)?, "shell sum")?;
    let small = as_i64(binom_b(d + 1, m - 1)?, "shell sum")?;
    let lhs = big
        .checked_sub((d as i64 + 1).checked_mul(small).ok_or_else(|| {
            Error::RangeExceeded("stripe inequality lhs overflows".into())
        })?)
        .ok_or_else(|| Error::RangeExceeded("stripe inequality lhs overflows".into()))?;

    let (m_i, d_i, e_i, t_i) = (m as i64, d as i64, e_t as i64, t_t as i64);
    let theta = d_i * (m_i - e_i - d_i * (m_i - 1 - t_i));

    Ok(StripeInequalityRecord {
        m,
        d,
        e_t,
        t_t,
        lhs,
        theta,
        nonnegative: lhs >= 0,
        ge_d_times_d_minus_1: (m >= 3).then(|| lhs >= d_i * (d_i - 1)),
        ge_d_times_m_minus_6: (m >= 7).then(|| lhs >= d_i * (m_i - 6)),
        ge_theta: lhs >= theta,
    })
}

/// Result of scanning the stripe inequality over a parameter grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridScanReport {
    pub m_max: u64,
    pub d_max: u64,
    /// Number of (m, d, e, t) tuples evaluated.
    pub scanned: u64,
    /// Records where `lhs >= theta` failed; expected empty.
    pub violations: Vec<StripeInequalityRecord>,
}

/// Scans all `2 <= m <= m_max`, `2 <= d <= d_max` and every admissible
/// `(e, t)` pair (the full rectangle `2 <= e <= m`, `1 <= t <= m-1`; this
/// includes some pairs no semigroup realizes, which only strengthens the
/// check) for violations of `lhs >= theta`.
pub fn wilf_grid_scan(m_max: u64, d_max: u64) -> Result<GridScanReport, Error> {
    if m_max < 2 || d_max < 2 {
        return Err(Error::Domain(format!(
            "grid scan needs m_max >= 2 and d_max >= 2, got {m_max}, {d_max}"
        )));
    }
    let mut scanned = 0;
    let mut violations = vec![];
    for m in 2..=m_max {
        for d in 2..=d_max {
            for e_t in 2..=m {
                for t_t in 1..m {
                    let rec = stripe_inequality(m, d, e_t, t_t)?;
                    scanned += 1;
                    if !rec.ge_theta {
                        violations.push(rec);
                    }
                }
            }
        }
    }
    Ok(GridScanReport {
        m_max,
        d_max,
        scanned,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(11, 2), Ok(55));
        assert_eq!(binomial(4, 0), Ok(1));
        assert_eq!(binomial(3, 7), Ok(0));
        assert_eq!(binomial(65, 6), Ok(82_598_880));
        assert!(matches!(binomial(200, 100), Err(Error::RangeExceeded(_))));
    }

    #[test]
    fn shell_counts() {
        // one coordinate: a single point per sum
        for m in 0..5 {
            assert_eq!(binom_b(1, m), Ok(1));
        }
        // two coordinates: m + 1 points of sum m
        for m in 0..10 {
            assert_eq!(binom_b(2, m), Ok(m + 1));
        }
        assert_eq!(binom_b(3, 9), Ok(55));
        assert_eq!(binom_b(4, 0), Ok(1));
        assert!(matches!(binom_b(20, 1_000_000), Err(Error::RangeExceeded(_))));
    }

    #[test]
    fn shell_counts_satisfy_pascal_recurrence() {
        // B_d(m) = sum of B_{d-1}(i) for i <= m
        for d in 2..=10u64 {
            for m in 0..=60u64 {
                let direct = binom_b(d, m).unwrap();
                let summed: u64 = (0..=m).map(|i| binom_b(d - 1, i).unwrap()).sum();
                assert_eq!(direct, summed, "d = {d}, m = {m}");
            }
        }
    }

    #[test]
    fn stripe_inequality_examples() {
        let rec = stripe_inequality(5, 2, 3, 2).unwrap();
        assert_eq!(rec.lhs, 10); // 55 - 3*15
        assert_eq!(rec.theta, -4); // 2*(5 - 3 - 2*2)
        assert!(rec.nonnegative && rec.ge_theta);
        assert_eq!(rec.ge_d_times_d_minus_1, Some(true));
        assert_eq!(rec.ge_d_times_m_minus_6, None);

        let rec = stripe_inequality(2, 2, 2, 1).unwrap();
        assert_eq!(rec.lhs, 1); // 10 - 3*3
        assert!(rec.nonnegative);
        assert_eq!(rec.ge_d_times_d_minus_1, None);

        let rec = stripe_inequality(7, 2, 7, 6).unwrap();
        assert_eq!(rec.ge_d_times_m_minus_6, Some(true));
    }

    #[test]
    fn stripe_inequality_rejects_bad_parameters() {
        assert!(matches!(stripe_inequality(1, 2, 1, 1), Err(Error::Domain(_))));
        assert!(matches!(stripe_inequality(5, 1, 3, 2), Err(Error::Domain(_))));
        assert!(matches!(stripe_inequality(5, 2, 6, 2), Err(Error::Domain(_))));
        assert!(matches!(stripe_inequality(5, 2, 3, 5), Err(Error::Domain(_))));
        assert!(matches!(stripe_inequality(5, 2, 0, 1), Err(Error::Domain(_))));
        // e = 1 forces the base to be the naturals, which has multiplicity 1
        assert!(matches!(stripe_inequality(2, 2, 1, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn tiny_grid() {
        let report = wilf_grid_scan(2, 2).unwrap();
        assert_eq!(report.scanned, 1); // multiplicity 2 admits only (e, t) = (2, 1)
        assert!(report.violations.is_empty());

        assert!(matches!(wilf_grid_scan(1, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn lhs_minus_linear_term_is_monotone_in_m() {
        // a_m = lhs(m, d) - d*(m - 6) never decreases once m >= 7.
        for d in 2..=8u64 {
            let mut prev: Option<i64> = None;
            for m in 7..=60u64 {
                let rec = stripe_inequality(m, d, 2, 1).unwrap();
                let a = rec.lhs - (d as i64) * (m as i64 - 6);
                if let Some(p) = prev {
                    assert!(a >= p, "d = {d}, m = {m}: {a} < {p}");
                }
                prev = Some(a);
            }
        }
    }

    #[test]
    fn classical_report_fields() {
        let inv = InvariantRecord {
            dimension: 1,
            multiplicity: Some(3),
            embedding_dimension: 2,
            genus: 4,
            type_t: 1,
            tau: None,
            frobenius: Some(7),
            n_count: 4,
            c_count: 8,
        };
        let r = classical_report(&inv);
        assert_eq!((r.lhs, r.rhs, r.margin), (8, 8, 0));
        assert!(r.holds && r.sufficient_condition);
        assert_eq!(r.variant, WilfVariant::Classical);
    }

    #[test]
    fn generalized_report_fields() {
        let inv = InvariantRecord {
            dimension: 2,
            multiplicity: None,
            embedding_dimension: 7,
            genus: 2,
            type_t: 2,
            tau: Some(2),
            frobenius: None,
            n_count: 1,
            c_count: 3,
        };
        let r = generalized_report(&inv);
        assert_eq!((r.conjecture.lhs, r.conjecture.rhs), (7, 6));
        assert_eq!((r.equivalent.lhs, r.equivalent.rhs), (5, 4));
        assert!(r.conjecture.holds && r.equivalent.holds);
        assert!(r.conjecture.sufficient_condition); // 7 >= 2*(2+1)
    }
}
