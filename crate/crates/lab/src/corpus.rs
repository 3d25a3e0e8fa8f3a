//! Exhaustive cross-check of the classifier against the algebraic oracle over
//! all small connected graphs.

use std::io::Write;

use koszul_core::canon::connected_graphs;
use koszul_core::classifier::{check_necessary_conditions, Case, RejectionReason, MAX_CYCLE_CHECK_N};
use koszul_core::groebner::{quadratic_gb_search, s_pairs_reduce_to_zero, TermOrder};
use koszul_core::semigroup::{edge_ring_basis, strongly_koszul_pairwise, MonoidIdealWitness, OracleVerdict};
use koszul_core::toric::{generator_counts, is_quadratically_generated, minimal_generators};
use koszul_core::{classify, Graph};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::LabError;
use crate::graph6;

pub const MAX_CORPUS_N: usize = 7;

#[derive(Clone, Debug)]
pub struct CorpusOptions {
    pub max_n: usize,
    pub degree_bound: usize,
    pub gb_attempts: usize,
    pub seed: u64,
    /// Worker threads; `None` uses rayon's default.
    pub jobs: Option<usize>,
}

impl Default for CorpusOptions {
    fn default() -> Self {
        CorpusOptions {
            max_n: 6,
            degree_bound: koszul_core::groebner::DEFAULT_DEGREE_BOUND,
            gb_attempts: koszul_core::groebner::DEFAULT_ATTEMPTS,
            seed: koszul_core::groebner::DEFAULT_SEED,
            jobs: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifierSummary {
    pub strongly_koszul: bool,
    pub trivial: bool,
    pub case: Case,
    pub rejection_reason: Option<RejectionReason>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleSummary {
    pub degree_bound: usize,
    pub passed: bool,
    pub witness: Option<MonoidIdealWitness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ToricSummary {
    /// Minimal generators per degree `0..=degree_bound`.
    pub generator_counts: Vec<usize>,
    /// Certified: the quadrics generate the whole ideal, whatever the bound.
    pub quadratic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum GroebnerStatus {
    Found {
        attempt: usize,
        order: TermOrder,
        size: usize,
        s_pairs_verified: bool,
    },
    NotFound {
        attempts: usize,
    },
    /// The quadrics do not generate the ideal, so no quadratic basis exists.
    NotQuadraticallyGenerated,
}

#[derive(Clone, Debug, Serialize)]
pub struct FilterSummary {
    pub checked: bool,
    pub violations: Vec<&'static str>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub graph6: String,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub classifier: ClassifierSummary,
    pub oracle: OracleSummary,
    pub agree: bool,
    pub toric: ToricSummary,
    pub groebner: GroebnerStatus,
    pub filters: FilterSummary,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub max_n: usize,
    pub degree_bound: usize,
    pub total: usize,
    pub agree: usize,
    pub strongly_koszul: usize,
    /// Isomorphism classes per vertex count `1..=max_n`.
    pub classes_by_n: Vec<usize>,
    /// graph6 strings of graphs where classifier and oracle differ.
    pub disagreements: Vec<String>,
    /// Accepted graphs for which no quadratic Gröbner basis was found.
    pub missing_quadratic_gb: Vec<String>,
    /// Accepted graphs that violate a necessary condition.
    pub filter_violations: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusReport {
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl CorpusReport {
    pub fn is_clean(&self) -> bool {
        self.summary.disagreements.is_empty()
    }

    /// One JSON object per record, then `{"summary": ...}`.
    pub fn write_jsonl(&self, mut out: impl Write) -> Result<(), LabError> {
        for r in &self.records {
            serde_json::to_writer(&mut out, r).map_err(std::io::Error::from)?;
            out.write_all(b"\n")?;
        }
        #[derive(Serialize)]
        struct Last<'a> {
            summary: &'a Summary,
        }
        serde_json::to_writer(&mut out, &Last { summary: &self.summary }).map_err(std::io::Error::from)?;
        out.write_all(b"\n")?;
        Ok(())
    }
}

pub fn run(opts: &CorpusOptions) -> Result<CorpusReport, LabError> {
    if opts.max_n > MAX_CORPUS_N {
        return Err(LabError::Cap { what: "corpus enumeration", n: opts.max_n, max: MAX_CORPUS_N });
    }
    let mut graphs = Vec::new();
    let mut classes_by_n = Vec::new();
    for n in 1..=opts.max_n {
        let reps = connected_graphs(n)?;
        classes_by_n.push(reps.len());
        graphs.extend(reps);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.unwrap_or(0))
        .build()
        .map_err(|e| std::io::Error::other(e.to_string()))?;
    let records = pool.install(|| graphs.par_iter().map(|g| record(g, opts)).collect::<Result<Vec<_>, _>>())?;

    let pick = |f: &dyn Fn(&Record) -> bool| records.iter().filter(|r| f(r)).map(|r| r.graph6.clone()).collect();
    let summary = Summary {
        max_n: opts.max_n,
        degree_bound: opts.degree_bound,
        total: records.len(),
        agree: records.iter().filter(|r| r.agree).count(),
        strongly_koszul: records.iter().filter(|r| r.classifier.strongly_koszul).count(),
        classes_by_n,
        disagreements: pick(&|r| !r.agree),
        missing_quadratic_gb: pick(&|r| {
            r.classifier.strongly_koszul && !matches!(r.groebner, GroebnerStatus::Found { s_pairs_verified: true, .. })
        }),
        filter_violations: pick(&|r| r.classifier.strongly_koszul && !r.filters.violations.is_empty()),
    };
    Ok(CorpusReport { records, summary })
}

pub fn record(g: &Graph, opts: &CorpusOptions) -> Result<Record, LabError> {
    let report = classify(g)?;
    let classifier = ClassifierSummary {
        strongly_koszul: report.strongly_koszul,
        trivial: report.trivial,
        case: report.case,
        rejection_reason: report.rejection_reason,
    };
    let oracle = oracle_summary(g, opts.degree_bound);
    let toric = toric_summary(g, opts.degree_bound);
    let groebner = groebner_status(g, &toric, opts.gb_attempts, opts.seed);
    let filters = if g.n() <= MAX_CYCLE_CHECK_N {
        let violations = check_necessary_conditions(g)?.iter().map(|v| v.label()).collect();
        FilterSummary { checked: true, violations }
    } else {
        FilterSummary { checked: false, violations: Vec::new() }
    };
    Ok(Record {
        graph6: graph6::encode(g)?,
        n: g.n(),
        edges: g.edges().to_vec(),
        agree: classifier.strongly_koszul == oracle.passed,
        classifier,
        oracle,
        toric,
        groebner,
        filters,
    })
}

/// A graph without edges has the ground field as edge ring and passes trivially.
pub fn oracle_summary(g: &Graph, degree_bound: usize) -> OracleSummary {
    let verdict = match edge_ring_basis(g) {
        Ok(b) => strongly_koszul_pairwise(&b, degree_bound),
        Err(_) => OracleVerdict::Pass { degree_bound },
    };
    match verdict {
        OracleVerdict::Pass { .. } => OracleSummary { degree_bound, passed: true, witness: None },
        OracleVerdict::Fail { witness, .. } => OracleSummary { degree_bound, passed: false, witness: Some(witness) },
    }
}

pub fn toric_summary(g: &Graph, degree_bound: usize) -> ToricSummary {
    match edge_ring_basis(g) {
        Ok(b) => ToricSummary {
            generator_counts: generator_counts(&minimal_generators(&b, degree_bound), degree_bound),
            quadratic: is_quadratically_generated(&b),
        },
        Err(_) => ToricSummary { generator_counts: vec![0; degree_bound + 1], quadratic: true },
    }
}

fn groebner_status(g: &Graph, toric: &ToricSummary, attempts: usize, seed: u64) -> GroebnerStatus {
    if !toric.quadratic {
        return GroebnerStatus::NotQuadraticallyGenerated;
    }
    let Ok(b) = edge_ring_basis(g) else {
        return GroebnerStatus::Found { attempt: 0, order: TermOrder::identity(0), size: 0, s_pairs_verified: true };
    };
    match quadratic_gb_search(&b, attempts, seed) {
        Some(found) => GroebnerStatus::Found {
            attempt: found.attempt,
            s_pairs_verified: s_pairs_reduce_to_zero(&found.basis, &found.order),
            size: found.basis.len(),
            order: found.order,
        },
        None => GroebnerStatus::NotFound { attempts },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_corpus_is_clean() {
        let report = run(&CorpusOptions { max_n: 4, ..Default::default() }).unwrap();
        assert_eq!(report.summary.classes_by_n, [1, 1, 2, 6]);
        assert_eq!(report.summary.total, 10);
        assert!(report.is_clean());
        assert!(report.summary.missing_quadratic_gb.is_empty());
        let k4 = report.records.iter().find(|r| r.graph6 == "C~").unwrap();
        assert_eq!(k4.classifier.case, Case::OneBlockK4);
        assert_eq!(k4.toric.generator_counts, [0, 0, 2, 0, 0]);
    }

    #[test]
    fn cap_is_enforced() {
        let err = run(&CorpusOptions { max_n: 8, ..Default::default() }).unwrap_err();
        assert_eq!(err.exit_code(), crate::error::exit::CAP);
    }

    #[test]
    fn output_is_deterministic() {
        let opts = CorpusOptions { max_n: 5, jobs: Some(3), ..Default::default() };
        let mut a = Vec::new();
        let mut b = Vec::new();
        run(&opts).unwrap().write_jsonl(&mut a).unwrap();
        run(&CorpusOptions { jobs: Some(1), ..opts }).unwrap().write_jsonl(&mut b).unwrap();
        assert_eq!(a, b);
        assert_eq!(String::from_utf8(a).unwrap().lines().count(), 1 + 1 + 2 + 6 + 21 + 1);
    }
}
