//! The on-disk document format: a self-describing JSON record of one
//! semigroup, carrying enough provenance to rebuild it from scratch and
//! cross-check every stored value.

use gnslab_core::wilf::classical_report;
use gnslab_core::{
    AxisSpec, ClosedForms, Gns, GradedSpec, InvariantRecord, NumericalSemigroup, Point,
    QuasiFlags, StripeSpec, WilfReport,
};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Version of the document layout this build reads and writes.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DocKind {
    /// Dimension-1 semigroup entered directly through its generators.
    Numerical,
    /// Generalized (lattice-point) semigroup.
    Gns,
}

/// How the semigroup was obtained. Everything needed to rebuild it is
/// stored, so a document can be re-derived and audited at any time.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum Construction {
    /// No construction recipe: the gap set itself is the definition.
    Raw,
    /// Fill every lattice point of norm below the base multiplicity,
    /// embed the base on each axis.
    Stripe { base: Vec<u64>, dim: usize },
    /// Gaps are all points whose norm is a gap of the base.
    Graded { base: Vec<u64>, dim: usize },
    /// An independent numerical semigroup on each axis, glued at the
    /// origin; one base per coordinate.
    Axis { bases: Vec<Vec<u64>> },
}

impl Construction {
    /// Dimension the recipe produces, if it fixes one.
    pub fn dimension(&self) -> Option<usize> {
        match self {
            Construction::Raw => None,
            Construction::Stripe { dim, .. } | Construction::Graded { dim, .. } => Some(*dim),
            Construction::Axis { bases } => Some(bases.len()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SemigroupDocument {
    pub schema_version: u32,
    pub kind: DocKind,
    pub dimension: usize,
    pub construction: Construction,
    pub generators: Vec<Point>,
    pub gaps: Vec<Point>,
    pub invariants: InvariantRecord,
    pub quasi: QuasiFlags,
    /// Wilf-style inequality report: the classical form for dimension-1
    /// documents, the lattice conjecture `e*n >= d*c` otherwise.
    pub wilf: WilfReport,
    /// The rearranged form `(e - d)*n >= d*g`, carried for lattice
    /// documents so both verdicts can be compared.
    pub wilf_equivalent: Option<WilfReport>,
}

/// Reads and parses a document file.
pub fn load_document(path: &std::path::Path) -> Result<SemigroupDocument, CliError> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

/// Parses one comma-separated generator list, e.g. `5,6,13`.
pub fn parse_generator_list(text: &str) -> Result<Vec<u64>, CliError> {
    let mut out = vec![];
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            return Err(CliError::Usage(format!(
                "empty entry in generator list '{text}'"
            )));
        }
        out.push(part.parse::<u64>().map_err(|_| {
            CliError::Usage(format!("'{part}' is not a non-negative integer"))
        })?);
    }
    Ok(out)
}

fn format_generators(gens: &[u64]) -> String {
    let parts: Vec<String> = gens.iter().map(u64::to_string).collect();
    format!("<{}>", parts.join(", "))
}

/// Builds the document for a dimension-1 semigroup given by generators.
pub fn document_from_numerical(s: &NumericalSemigroup) -> SemigroupDocument {
    let invariants = s.invariants();
    let wilf = classical_report(&invariants);
    SemigroupDocument {
        schema_version: SCHEMA_VERSION,
        kind: DocKind::Numerical,
        dimension: 1,
        construction: Construction::Raw,
        generators: s.generators().iter().map(|&g| Point::new(vec![g as u32])).collect(),
        gaps: s.gaps().iter().map(|&h| Point::new(vec![h as u32])).collect(),
        invariants,
        quasi: QuasiFlags {
            quasi_irreducible: s.classify().irreducible,
            quasi_symmetric: s.classify().symmetric,
        },
        wilf,
        wilf_equivalent: None,
    }
}

/// Builds the document for an already-validated lattice semigroup.
pub fn document_from_gns(construction: Construction, s: &Gns) -> SemigroupDocument {
    let invariants = s.invariants();
    let wilf = s.generalized_wilf();
    SemigroupDocument {
        schema_version: SCHEMA_VERSION,
        kind: DocKind::Gns,
        dimension: s.dimension(),
        construction,
        generators: s.minimal_generators().to_vec(),
        gaps: s.gaps().to_vec(),
        invariants,
        quasi: s.quasi_flags(),
        wilf: wilf.conjecture,
        wilf_equivalent: Some(wilf.equivalent),
    }
}

/// Runs a construction recipe end to end: build the gap set, validate it
/// as a semigroup, and package the result. `Raw` has no recipe to run.
pub fn construct_document(construction: &Construction) -> Result<SemigroupDocument, CliError> {
    let built = match construction {
        Construction::Raw => {
            return Err(CliError::Usage(
                "a raw document has no construction recipe to run".into(),
            ))
        }
        Construction::Stripe { base, dim } => {
            let base = NumericalSemigroup::from_generators(base)?;
            StripeSpec::new(base, *dim)?.build()?
        }
        Construction::Graded { base, dim } => {
            let base = NumericalSemigroup::from_generators(base)?;
            GradedSpec::new(base, *dim)?.build()?
        }
        Construction::Axis { bases } => {
            let components = bases
                .iter()
                .map(|b| NumericalSemigroup::from_generators(b))
                .collect::<Result<Vec<_>, _>>()?;
            AxisSpec::new(components)?.build()?
        }
    };
    Ok(document_from_gns(construction.clone(), &built))
}

/// One line of a document audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

/// Full audit result; `ok` is the conjunction of the lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub lines: Vec<CheckLine>,
    pub ok: bool,
}

struct Audit {
    lines: Vec<CheckLine>,
}

impl Audit {
    fn pass(&mut self, name: &str) {
        self.lines.push(CheckLine {
            name: name.into(),
            ok: true,
            detail: String::new(),
        });
    }

    fn fail(&mut self, name: &str, detail: String) {
        self.lines.push(CheckLine {
            name: name.into(),
            ok: false,
            detail,
        });
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, name: &str, stored: &T, recomputed: &T) {
        if stored == recomputed {
            self.pass(name);
        } else {
            self.fail(
                name,
                format!("stored {stored:?}, recomputed {recomputed:?}"),
            );
        }
    }

    fn finish(self) -> CheckOutcome {
        let ok = self.lines.iter().all(|l| l.ok);
        CheckOutcome { lines: self.lines, ok }
    }
}

/// Closed-form values for a construction, reduced to the common record.
fn closed_forms_of(construction: &Construction) -> Result<Option<ClosedForms>, CliError> {
    Ok(match construction {
        Construction::Raw => None,
        Construction::Stripe { base, dim } => {
            let base = NumericalSemigroup::from_generators(base)?;
            Some(StripeSpec::new(base, *dim)?.closed_forms()?.forms)
        }
        Construction::Graded { base, dim } => {
            let base = NumericalSemigroup::from_generators(base)?;
            Some(GradedSpec::new(base, *dim)?.closed_forms()?)
        }
        Construction::Axis { bases } => {
            let components = bases
                .iter()
                .map(|b| NumericalSemigroup::from_generators(b))
                .collect::<Result<Vec<_>, _>>()?;
            Some(AxisSpec::new(components)?.closed_forms()?)
        }
    })
}

/// Audits a document against two independent recomputations: a brute-force
/// pass over the stored gap set, and (when provenance is present) the
/// closed forms of the recorded construction. Any tampering with gaps,
/// generators, invariants, or reports shows up as a failed line.
pub fn check_document(doc: &SemigroupDocument) -> CheckOutcome {
    let mut audit = Audit { lines: vec![] };

    if doc.schema_version != SCHEMA_VERSION {
        audit.fail(
            "schema",
            format!(
                "schema_version {} is not the supported {SCHEMA_VERSION}",
                doc.schema_version
            ),
        );
        return audit.finish();
    }
    audit.pass("schema");

    if let Some(d) = doc.construction.dimension() {
        audit.eq("dimension matches construction", &doc.dimension, &d);
    }
    if doc.kind == DocKind::Numerical && doc.dimension != 1 {
        audit.fail(
            "kind",
            format!("numerical documents are 1-dimensional, got {}", doc.dimension),
        );
    }

    if doc.kind == DocKind::Numerical {
        check_numerical(doc, &mut audit);
        return audit.finish();
    }

    // First recomputation: take the stored gap set at face value, validate
    // that it defines a semigroup at all, and re-derive everything from it.
    let rebuilt = Gns::from_gaps(doc.dimension, doc.gaps.iter().cloned());
    let rebuilt = match rebuilt {
        Ok(s) => s,
        Err(e) => {
            audit.fail("gap set is a semigroup complement", format!("{e}"));
            return audit.finish();
        }
    };
    audit.pass("gap set is a semigroup complement");
    audit.eq(
        "generators",
        &doc.generators,
        &rebuilt.minimal_generators().to_vec(),
    );
    audit.eq("invariants", &doc.invariants, &rebuilt.invariants());
    audit.eq("quasi flags", &doc.quasi, &rebuilt.quasi_flags());
    let wilf = rebuilt.generalized_wilf();
    audit.eq("wilf report", &doc.wilf, &wilf.conjecture);
    audit.eq(
        "wilf equivalent form",
        &doc.wilf_equivalent,
        &Some(wilf.equivalent),
    );

    // Second recomputation: replay the recorded construction. The gap set
    // must be exactly what the recipe yields, and the closed-form counts
    // and distinguished sets must agree with the brute-force pass above.
    match closed_forms_of(&doc.construction) {
        Err(e) => audit.fail("construction replays", format!("{e}")),
        Ok(None) => {}
        Ok(Some(closed)) => {
            let recipe_gaps: Result<Vec<Point>, CliError> = match &doc.construction {
                Construction::Raw => unreachable!("raw has no closed forms"),
                Construction::Stripe { base, dim } => {
                    NumericalSemigroup::from_generators(base)
                        .and_then(|b| StripeSpec::new(b, *dim))
                        .map(|s| s.gap_points())
                        .map_err(CliError::from)
                }
                Construction::Graded { base, dim } => {
                    NumericalSemigroup::from_generators(base)
                        .and_then(|b| GradedSpec::new(b, *dim))
                        .map(|s| s.gap_points())
                        .map_err(CliError::from)
                }
                Construction::Axis { bases } => bases
                    .iter()
                    .map(|b| NumericalSemigroup::from_generators(b))
                    .collect::<Result<Vec<_>, _>>()
                    .and_then(AxisSpec::new)
                    .map(|s| s.gap_points())
                    .map_err(CliError::from),
            };
            match recipe_gaps {
                Err(e) => audit.fail("construction replays", format!("{e}")),
                Ok(mut gaps) => {
                    gaps.sort();
                    gaps.dedup();
                    audit.eq("gaps match construction", &doc.gaps, &gaps);
                }
            }
            audit.eq(
                "closed-form generators",
                &closed.generators,
                &rebuilt.minimal_generators().to_vec(),
            );
            audit.eq(
                "closed-form pseudo-frobenius",
                &closed.pseudo_frobenius,
                &rebuilt.pseudo_frobenius(),
            );
            audit.eq(
                "closed-form special gaps",
                &closed.special_gaps,
                &rebuilt.special_gaps(),
            );
            audit.eq(
                "closed-form maximal gaps",
                &closed.maximal_gaps,
                &rebuilt.maximal_gaps(),
            );
            let inv = rebuilt.invariants();
            audit.eq(
                "closed-form counts",
                &(
                    closed.embedding_dimension,
                    closed.type_t,
                    closed.tau,
                    closed.genus,
                    closed.n_count,
                    closed.c_count,
                ),
                &(
                    inv.embedding_dimension,
                    inv.type_t,
                    inv.tau.unwrap_or(0),
                    inv.genus,
                    inv.n_count,
                    inv.c_count,
                ),
            );
        }
    }

    audit.finish()
}

/// Audit branch for dimension-1 documents: regenerate the semigroup from
/// the stored generators and compare every derived field; independently
/// validate the stored gap set's closure through the lattice code.
fn check_numerical(doc: &SemigroupDocument, audit: &mut Audit) {
    if doc.construction != Construction::Raw {
        audit.fail(
            "construction",
            "numerical documents carry no construction recipe".into(),
        );
        return;
    }
    let gens: Vec<u64> = doc
        .generators
        .iter()
        .map(|p| p.coords()[0] as u64)
        .collect();
    let rebuilt = match NumericalSemigroup::from_generators(&gens) {
        Ok(s) => s,
        Err(e) => {
            audit.fail("generators define a semigroup", format!("{e}"));
            return;
        }
    };
    audit.pass("generators define a semigroup");

    match Gns::from_gaps(1, doc.gaps.iter().cloned()) {
        Ok(_) => audit.pass("gap set is a semigroup complement"),
        Err(e) => audit.fail("gap set is a semigroup complement", format!("{e}")),
    }

    let expected_gaps: Vec<Point> = rebuilt
        .gaps()
        .iter()
        .map(|&h| Point::new(vec![h as u32]))
        .collect();
    audit.eq("gaps", &doc.gaps, &expected_gaps);
    audit.eq(
        "generators are minimal",
        &gens,
        &rebuilt.generators().to_vec(),
    );
    audit.eq("invariants", &doc.invariants, &rebuilt.invariants());
    let class = rebuilt.classify();
    audit.eq(
        "quasi flags",
        &doc.quasi,
        &QuasiFlags {
            quasi_irreducible: class.irreducible,
            quasi_symmetric: class.symmetric,
        },
    );
    audit.eq(
        "wilf report",
        &doc.wilf,
        &classical_report(&rebuilt.invariants()),
    );
    audit.eq("wilf equivalent form", &doc.wilf_equivalent, &None);
}

/// Pretty label for a construction, used in human-readable output.
pub fn describe_construction(construction: &Construction) -> String {
    match construction {
        Construction::Raw => "raw gap set".into(),
        Construction::Stripe { base, dim } => {
            format!("stripe over {} in dimension {dim}", format_generators(base))
        }
        Construction::Graded { base, dim } => {
            format!("graded over {} in dimension {dim}", format_generators(base))
        }
        Construction::Axis { bases } => {
            let parts: Vec<String> = bases.iter().map(|b| format_generators(b)).collect();
            format!("axis glue of {}", parts.join(" and "))
        }
    }
}
