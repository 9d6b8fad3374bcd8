//! Exhaustive enumeration of numerical semigroups by genus, as a rooted
//! tree: the root is the whole of the naturals, and each child removes one
//! minimal generator larger than the Frobenius number of its parent. Each
//! semigroup of genus g appears exactly once at depth g, so visiting the
//! tree to a depth bound visits each semigroup up to that genus once.
//!
//! Frames carry a fixed-width membership bitset. Width `3 * g_max + 1`
//! covers every query: a semigroup of genus g has Frobenius number at most
//! `2g - 1` (of any pair x, F - x at least one is a gap, so the gap count
//! is at least (F+1)/2) and multiplicity at most `g + 1`, and every scan
//! stays within `F + m`.
//!
//! Scans split the tree at a configurable genus into independent subtree
//! tasks whose partial results merge commutatively, so thread count and
//! scheduling cannot change any reported result.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::Error;
use crate::ns::NumericalSemigroup;

/// Hard cap on the genus bound accepted by the scans; frames stay small and
/// subtree counts stay within desk scale below it.
pub const MAX_GENUS: u32 = 35;

/// Subtree tasks are split off this many levels below the root unless the
/// caller picks a depth.
const DEFAULT_SPLIT_DEPTH: u32 = 8;

/// One node of the enumeration tree: a numerical semigroup held as a
/// membership bitset plus the bookkeeping the descent rule needs.
#[derive(Debug, Clone)]
pub struct EnumFrame {
    bits: Vec<u64>,
    width: u32,
    frobenius: i64,
    genus: u32,
    multiplicity: u32,
    effective_generators: Vec<u32>,
}

impl EnumFrame {
    /// The root frame: the whole of the naturals.
    fn natural(width: u32) -> EnumFrame {
        EnumFrame {
            bits: vec![u64::MAX; (width as usize).div_ceil(64)],
            width,
            frobenius: -1,
            genus: 0,
            multiplicity: 1,
            effective_generators: vec![1],
        }
    }

    /// The ordinary semigroup {0, m, m+1, ...}: the root of the subtree of
    /// multiplicity-m semigroups. Its minimal generators are m..=2m-1, all
    /// beyond its Frobenius number m-1.
    fn ordinary(m: u32, width: u32) -> EnumFrame {
        let mut frame = EnumFrame::natural(width);
        for x in 1..m {
            frame.clear(x);
        }
        frame.frobenius = i64::from(m) - 1;
        frame.genus = m - 1;
        frame.multiplicity = m;
        frame.effective_generators = (m..2 * m).collect();
        frame
    }

    pub fn contains(&self, x: u32) -> bool {
        debug_assert!(x < self.width);
        self.bits[(x / 64) as usize] >> (x % 64) & 1 == 1
    }

    fn clear(&mut self, x: u32) {
        self.bits[(x / 64) as usize] &= !(1u64 << (x % 64));
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    /// Minimal generators exceeding the Frobenius number: removing any one
    /// of them leaves a semigroup, and these removals are exactly the tree
    /// edges out of this frame.
    pub fn effective_generators(&self) -> &[u32] {
        &self.effective_generators
    }

    /// True when x is a sum of two nonzero elements.
    fn decomposes(&self, x: u32) -> bool {
        (self.multiplicity..=x / 2).any(|u| self.contains(u) && self.contains(x - u))
    }

    /// The child obtained by removing one effective generator.
    fn child(&self, a: u32) -> EnumFrame {
        debug_assert!(self.effective_generators.contains(&a));
        let mut child = EnumFrame {
            bits: self.bits.clone(),
            width: self.width,
            frobenius: i64::from(a),
            genus: self.genus + 1,
            // removing the multiplicity promotes a+1 (still an element,
            // since everything beyond the new Frobenius number a is)
            multiplicity: if a == self.multiplicity {
                a + 1
            } else {
                self.multiplicity
            },
            effective_generators: vec![],
        };
        child.clear(a);
        // Effective generators of the child lie in (a, a + m']: they exceed
        // the new Frobenius number a, and any element beyond a + m' splits
        // off the multiplicity.
        for x in a + 1..=a + child.multiplicity {
            if !child.decomposes(x) {
                child.effective_generators.push(x);
            }
        }
        child
    }

    /// The minimal generating set; every minimal generator lies in
    /// [m, F + m], since beyond that the multiplicity splits off.
    pub fn minimal_generators(&self) -> Vec<u64> {
        if self.frobenius < 0 {
            return vec![1];
        }
        let top = self.frobenius as u32 + self.multiplicity;
        (self.multiplicity..=top)
            .filter(|&x| self.contains(x) && !self.decomposes(x))
            .map(u64::from)
            .collect()
    }

    pub fn embedding_dimension(&self) -> u64 {
        self.minimal_generators().len() as u64
    }

    /// Count of pseudo-Frobenius gaps: gaps x with x + s an element for
    /// every nonzero element s. Only s <= F - x can fail, so the test stays
    /// inside the bitset.
    pub fn type_t(&self) -> u64 {
        if self.frobenius < 0 {
            return 0;
        }
        let f = self.frobenius as u32;
        let m = self.multiplicity;
        (1..=f)
            .filter(|&x| {
                !self.contains(x)
                    && (m..=f - x).all(|s| !self.contains(s) || self.contains(x + s))
            })
            .count() as u64
    }

    /// m + e - 2(t + 1) for this frame.
    pub fn margin(&self) -> i64 {
        u64::from(self.multiplicity) as i64 + self.embedding_dimension() as i64
            - 2 * (self.type_t() as i64 + 1)
    }
}

/// m + e - 2(t + 1), the slack in the inequality m + e >= 2t + 2.
pub fn margin_of(s: &NumericalSemigroup) -> i64 {
    let t = s.pseudo_frobenius().len() as i64;
    s.multiplicity() as i64 + s.embedding_dimension() as i64 - 2 * (t + 1)
}

/// Worker and task-splitting choices for the parallel scans. `threads` 0
/// uses the default pool size, 1 runs strictly sequentially; `split_genus`
/// picks the tree level that becomes the task frontier.
#[derive(Debug, Clone, Copy, Default)]
pub struct EnumOptions {
    pub threads: usize,
    pub split_genus: Option<u32>,
}

/// Progress reports: one per breadth-first level while building the task
/// frontier, then one per finished subtree task.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProgressEvent {
    Level { genus: u32, frames: u64 },
    Subtree { done: u64, total: u64, frames: u64 },
}

/// A semigroup violating m + e >= 2t + 2, with the values that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetViolation {
    pub generators: Vec<u64>,
    pub genus: u64,
    pub multiplicity: u64,
    pub embedding_dimension: u64,
    pub type_t: u64,
    pub margin: i64,
}

/// Outcome of a met-inequality scan over all semigroups of bounded genus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetScanReport {
    pub counts: Vec<u64>,
    pub scanned: u64,
    pub violations: Vec<MetViolation>,
}

/// Outcome of a minimum-margin scan over the semigroups of one fixed
/// multiplicity with bounded genus. The minimum is only an upper bound for
/// the unbounded-genus infimum: deeper levels could go lower.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GmScanResult {
    pub multiplicity: u32,
    pub genus_bound: u32,
    pub min_margin: i64,
    pub witness: Vec<u64>,
    pub scanned_count: u64,
}

/// A partial scan result that can absorb frames and merge with the result
/// of a sibling subtree. Merging is commutative and associative, so task
/// scheduling cannot influence the final value.
trait Scan: Clone + Send + Sync {
    fn visit(&mut self, frame: &EnumFrame);
    fn frames(&self) -> u64;
    fn merge(&mut self, other: Self);
}

#[derive(Clone)]
struct CountScan {
    counts: Vec<u64>,
    frames: u64,
}

impl Scan for CountScan {
    fn visit(&mut self, frame: &EnumFrame) {
        self.counts[frame.genus() as usize] += 1;
        self.frames += 1;
    }

    fn frames(&self) -> u64 {
        self.frames
    }

    fn merge(&mut self, other: CountScan) {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        self.frames += other.frames;
    }
}

#[derive(Clone)]
struct MetScan {
    counts: Vec<u64>,
    frames: u64,
    violations: Vec<MetViolation>,
}

impl Scan for MetScan {
    fn visit(&mut self, frame: &EnumFrame) {
        self.counts[frame.genus() as usize] += 1;
        self.frames += 1;
        let e = frame.embedding_dimension();
        let t = frame.type_t();
        let margin = u64::from(frame.multiplicity()) as i64 + e as i64 - 2 * (t as i64 + 1);
        if margin < 0 {
            self.violations.push(MetViolation {
                generators: frame.minimal_generators(),
                genus: u64::from(frame.genus()),
                multiplicity: u64::from(frame.multiplicity()),
                embedding_dimension: e,
                type_t: t,
                margin,
            });
        }
    }

    fn frames(&self) -> u64 {
        self.frames
    }

    fn merge(&mut self, other: MetScan) {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        self.frames += other.frames;
        self.violations.extend(other.violations);
    }
}

#[derive(Clone)]
struct GmScan {
    frames: u64,
    best: Option<(i64, u32, Vec<u64>)>,
}

impl GmScan {
    fn offer(&mut self, candidate: (i64, u32, Vec<u64>)) {
        if self.best.as_ref().map_or(true, |b| candidate < *b) {
            self.best = Some(candidate);
        }
    }
}

impl Scan for GmScan {
    fn visit(&mut self, frame: &EnumFrame) {
        self.frames += 1;
        self.offer((frame.margin(), frame.genus(), frame.minimal_generators()));
    }

    fn frames(&self) -> u64 {
        self.frames
    }

    fn merge(&mut self, other: GmScan) {
        self.frames += other.frames;
        if let Some(b) = other.best {
            self.offer(b);
        }
    }
}

fn dfs<S: Scan>(frame: &EnumFrame, g_max: u32, keep: Option<u32>, acc: &mut S) {
    acc.visit(frame);
    if frame.genus() >= g_max {
        return;
    }
    for &a in frame.effective_generators() {
        if keep == Some(a) {
            continue;
        }
        dfs(&frame.child(a), g_max, keep, acc);
    }
}

/// Breadth-first down to the split level, then one task per frontier frame.
/// Tasks run sequentially or on a worker pool; partials merge in frontier
/// order either way.
fn run_scan<S: Scan>(
    root: EnumFrame,
    g_max: u32,
    keep: Option<u32>,
    opts: &EnumOptions,
    progress: &(dyn Fn(ProgressEvent) + Sync),
    proto: S,
) -> Result<S, Error> {
    let split = opts
        .split_genus
        .unwrap_or(root.genus() + DEFAULT_SPLIT_DEPTH)
        .clamp(root.genus(), g_max);

    let mut acc = proto.clone();
    let mut level = vec![root];
    // a level can empty out before the split depth: frames with no
    // effective generator are leaves
    while !level.is_empty() && level[0].genus() < split {
        let genus = level[0].genus();
        let mut next = vec![];
        for frame in &level {
            acc.visit(frame);
            for &a in frame.effective_generators() {
                if keep == Some(a) {
                    continue;
                }
                next.push(frame.child(a));
            }
        }
        progress(ProgressEvent::Level {
            genus,
            frames: level.len() as u64,
        });
        level = next;
    }

    let total = level.len() as u64;
    let done = AtomicU64::new(0);
    let task = |frame: &EnumFrame| {
        let mut partial = proto.clone();
        dfs(frame, g_max, keep, &mut partial);
        progress(ProgressEvent::Subtree {
            done: done.fetch_add(1, Ordering::Relaxed) + 1,
            total,
            frames: partial.frames(),
        });
        partial
    };

    let partials: Vec<S> = match opts.threads {
        1 => level.iter().map(task).collect(),
        0 => level.par_iter().map(task).collect(),
        n => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Domain(format!("worker pool: {e}")))?
            .install(|| level.par_iter().map(task).collect()),
    };
    for partial in partials {
        acc.merge(partial);
    }
    Ok(acc)
}

fn check_genus_bound(g_max: u32) -> Result<(), Error> {
    if g_max == 0 || g_max > MAX_GENUS {
        return Err(Error::RangeExceeded(format!(
            "genus bound {g_max} outside [1, {MAX_GENUS}]"
        )));
    }
    Ok(())
}

fn frame_width(g_max: u32) -> u32 {
    3 * g_max + 1
}

/// Visits every numerical semigroup of genus at most `g_max` exactly once,
/// depth-first from the naturals, and returns the count at each genus.
pub fn enumerate_by_genus(
    g_max: u32,
    mut visit: impl FnMut(&EnumFrame),
) -> Result<Vec<u64>, Error> {
    check_genus_bound(g_max)?;
    let mut counts = vec![0u64; g_max as usize + 1];
    let root = EnumFrame::natural(frame_width(g_max));
    fn walk(
        frame: &EnumFrame,
        g_max: u32,
        counts: &mut [u64],
        visit: &mut impl FnMut(&EnumFrame),
    ) {
        counts[frame.genus() as usize] += 1;
        visit(frame);
        if frame.genus() >= g_max {
            return;
        }
        for &a in frame.effective_generators() {
            walk(&frame.child(a), g_max, counts, visit);
        }
    }
    walk(&root, g_max, &mut counts, &mut visit);
    Ok(counts)
}

/// Per-genus counts, computed with the parallel scan machinery.
pub fn genus_counts(
    g_max: u32,
    opts: &EnumOptions,
    progress: &(dyn Fn(ProgressEvent) + Sync),
) -> Result<Vec<u64>, Error> {
    check_genus_bound(g_max)?;
    let proto = CountScan {
        counts: vec![0; g_max as usize + 1],
        frames: 0,
    };
    let root = EnumFrame::natural(frame_width(g_max));
    Ok(run_scan(root, g_max, None, opts, progress, proto)?.counts)
}

/// Scans every numerical semigroup of genus at most `g_max` for violations
/// of m + e >= 2t + 2. Violations come back sorted by genus, then by
/// generator list.
pub fn scan_met_inequality(
    g_max: u32,
    opts: &EnumOptions,
    progress: &(dyn Fn(ProgressEvent) + Sync),
) -> Result<MetScanReport, Error> {
    check_genus_bound(g_max)?;
    let proto = MetScan {
        counts: vec![0; g_max as usize + 1],
        frames: 0,
        violations: vec![],
    };
    let root = EnumFrame::natural(frame_width(g_max));
    let scan = run_scan(root, g_max, None, opts, progress, proto)?;
    let mut violations = scan.violations;
    violations.sort_by(|a, b| (a.genus, &a.generators).cmp(&(b.genus, &b.generators)));
    Ok(MetScanReport {
        counts: scan.counts,
        scanned: scan.frames,
        violations,
    })
}

/// Minimum of m + e - 2(t + 1) over every numerical semigroup with
/// multiplicity exactly `multiplicity` and genus at most `genus_max`,
/// with a witness attaining it.
///
/// The subtree of fixed multiplicity is rooted at the ordinary semigroup
/// {0, m, m+1, ...} and never removes the generator m; ancestors of any
/// multiplicity-m semigroup re-adjoin gaps above m, so the restricted
/// subtree covers them all. The reported minimum is an upper bound for the
/// infimum over the whole multiplicity class, not its value: semigroups of
/// larger genus are not scanned.
pub fn gm_scan(
    multiplicity: u32,
    genus_max: u32,
    opts: &EnumOptions,
    progress: &(dyn Fn(ProgressEvent) + Sync),
) -> Result<GmScanResult, Error> {
    if multiplicity < 2 {
        return Err(Error::Domain(
            "multiplicity classes start at 2; the naturals are the only semigroup of multiplicity 1"
                .into(),
        ));
    }
    check_genus_bound(genus_max)?;
    if genus_max < multiplicity - 1 {
        return Err(Error::InfeasibleBound {
            multiplicity,
            genus_bound: genus_max,
            minimum: multiplicity - 1,
        });
    }
    let root = EnumFrame::ordinary(multiplicity, frame_width(genus_max));
    let proto = GmScan {
        frames: 0,
        best: None,
    };
    let scan = run_scan(
        root,
        genus_max,
        Some(multiplicity),
        opts,
        progress,
        proto,
    )?;
    let (min_margin, _, witness) = scan.best.expect("the ordinary root is always scanned");
    Ok(GmScanResult {
        multiplicity,
        genus_bound: genus_max,
        min_margin,
        witness,
        scanned_count: scan.frames,
    })
}
