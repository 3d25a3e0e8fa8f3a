//! Strongly Koszul and trivial edge rings, decided from the block structure.
//!
//! `K[G]` (for connected `G`) is strongly Koszul iff all blocks but at most one
//! are complete bipartite and the remaining block `B` is complete bipartite,
//! is `K_4`, or has a vertex `v` with `B - v` bipartite such that every block
//! of the bipartite split `B(v, V1, V2)` is complete bipartite. The ring is
//! trivial in exactly the same cases minus `K_4`.

use alloc::vec::Vec;

use serde::Serialize;

use crate::bipartite::{bipartition_without, complete_bipartite_unchecked, split_construction, two_color, Bipartition};
use crate::blocks::{blocks_any, Block};
use crate::cycles::{even_chord_violations, odd_cycle_intersection_violations, MissingEvenChord};
use crate::error::{Error, Result};
use crate::graph::{Cycle, Graph};

/// Vertex cap for the cycle-enumerating necessary-condition checks.
pub const MAX_CYCLE_CHECK_N: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Case {
    AllBlocksCompleteBipartite,
    OneBlockK4,
    OneBlockAlmostBipartiteSplitOk,
    Rejected,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RejectionReason {
    TwoBadBlocks,
    BadBlockNotK4NotAlmostBipartite,
    SplitHasNonCbBlock,
}

/// One candidate vertex `v` of the bad block, in the block's own labels
/// `1..=|V(B)|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitAttempt {
    /// `v` in the labels of the input graph.
    pub vertex: usize,
    pub local_vertex: usize,
    pub bipartition: Bipartition,
    pub split: Graph,
    /// First block of the split that is not complete bipartite, if any.
    pub non_complete_bipartite_block: Option<Block>,
}

impl SplitAttempt {
    pub fn passed(&self) -> bool {
        self.non_complete_bipartite_block.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
    /// Indices into `blocks`.
    pub non_complete_bipartite_blocks: Vec<usize>,
    /// Every almost-bipartite witness of the bad block that was tried.
    pub split_attempts: Vec<SplitAttempt>,
    /// Index into `split_attempts` of the attempt that was accepted.
    pub chosen_split: Option<usize>,
    /// Some split passed and another failed.
    pub witness_disagreement: bool,
    /// For rejections on graphs within the cycle cap: the first violated
    /// necessary condition, if any.
    pub violation: Option<Violation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub strongly_koszul: bool,
    pub trivial: bool,
    pub case: Case,
    pub rejection_reason: Option<RejectionReason>,
    pub witness: Witness,
}

pub fn classify(g: &Graph) -> Result<ClassificationReport> {
    g.require_connected()?;
    let decomposition = blocks_any(g);
    let bad: Vec<usize> = decomposition
        .blocks
        .iter()
        .enumerate()
        .filter(|(_, b)| !complete_bipartite_unchecked(&b.to_graph()))
        .map(|(k, _)| k)
        .collect();
    let mut witness = Witness {
        blocks: decomposition.blocks,
        cut_vertices: decomposition.cut_vertices,
        non_complete_bipartite_blocks: bad,
        split_attempts: Vec::new(),
        chosen_split: None,
        witness_disagreement: false,
        violation: None,
    };
    let accept = |case, witness| ClassificationReport {
        strongly_koszul: true,
        trivial: case != Case::OneBlockK4,
        case,
        rejection_reason: None,
        witness,
    };
    let reject = |reason, mut witness: Witness| {
        if g.n() <= MAX_CYCLE_CHECK_N {
            witness.violation = first_violation(g);
        }
        ClassificationReport {
            strongly_koszul: false,
            trivial: false,
            case: Case::Rejected,
            rejection_reason: Some(reason),
            witness,
        }
    };

    match witness.non_complete_bipartite_blocks[..] {
        [] => return Ok(accept(Case::AllBlocksCompleteBipartite, witness)),
        [_] => {}
        _ => return Ok(reject(RejectionReason::TwoBadBlocks, witness)),
    }
    let block = &witness.blocks[witness.non_complete_bipartite_blocks[0]];
    let local = block.to_graph();
    if local.n() == 4 && local.edge_count() == 6 {
        return Ok(accept(Case::OneBlockK4, witness));
    }
    let mut attempts = Vec::new();
    for v in local.vertices() {
        let Some(part) = bipartition_without(&local, v) else { continue };
        let split = split_construction(&local, v, &part)?;
        let non_cb = blocks_any(&split).blocks.into_iter().find(|b| !complete_bipartite_unchecked(&b.to_graph()));
        attempts.push(SplitAttempt {
            vertex: block.original_label(v),
            local_vertex: v,
            bipartition: part,
            split,
            non_complete_bipartite_block: non_cb,
        });
    }
    witness.chosen_split = attempts.iter().position(SplitAttempt::passed);
    witness.witness_disagreement = witness.chosen_split.is_some() && attempts.iter().any(|a| !a.passed());
    let no_witness = attempts.is_empty();
    witness.split_attempts = attempts;
    Ok(if witness.chosen_split.is_some() {
        accept(Case::OneBlockAlmostBipartiteSplitOk, witness)
    } else if no_witness {
        reject(RejectionReason::BadBlockNotK4NotAlmostBipartite, witness)
    } else {
        reject(RejectionReason::SplitHasNonCbBlock, witness)
    })
}

/// Accepted by [`classify`] through a case other than `K_4`.
pub fn classify_trivial(g: &Graph) -> Result<bool> {
    Ok(classify(g)?.trivial)
}

/// A violated necessary condition for `K[G]` to be strongly Koszul.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum Violation {
    /// An even cycle lacks some of its even-chords.
    MissingEvenChords { missing: Vec<MissingEvenChord> },
    /// Two odd cycles share at most one vertex.
    OddCyclesMeetOnce { pairs: Vec<(Cycle, Cycle)> },
    /// More than one block is not complete bipartite.
    SeveralNonCompleteBipartiteBlocks { blocks: Vec<Block> },
    /// A block contains `K_4` but is larger than it.
    BlockStrictlyContainsK4 { block: Block, k4: [usize; 4] },
    /// No vertex meets every odd cycle, and there is no `K_4`.
    NotAlmostBipartiteWithoutK4,
}

impl Violation {
    pub fn label(&self) -> &'static str {
        match self {
            Violation::MissingEvenChords { .. } => "missing_even_chords",
            Violation::OddCyclesMeetOnce { .. } => "odd_cycles_meet_once",
            Violation::SeveralNonCompleteBipartiteBlocks { .. } => "several_non_complete_bipartite_blocks",
            Violation::BlockStrictlyContainsK4 { .. } => "block_strictly_contains_k4",
            Violation::NotAlmostBipartiteWithoutK4 => "not_almost_bipartite_without_k4",
        }
    }
}

/// All five necessary conditions, each reported at most once with its
/// witnesses, in the order: even-chords, odd-cycle pairs, bad-block count,
/// `K_4` maximality, almost-bipartite-or-`K_4`.
pub fn check_necessary_conditions(g: &Graph) -> Result<Vec<Violation>> {
    g.require_connected()?;
    if g.n() > MAX_CYCLE_CHECK_N {
        return Err(Error::TooLarge { what: "cycle enumeration", n: g.n(), max: MAX_CYCLE_CHECK_N });
    }
    let checks = Checks(g);
    Ok([checks.even_chords(), checks.odd_pairs(), checks.bad_blocks(), checks.k4_blocks(), checks.almost_bipartite()]
        .into_iter()
        .flatten()
        .collect())
}

// Cheapest first.
fn first_violation(g: &Graph) -> Option<Violation> {
    let checks = Checks(g);
    checks
        .bad_blocks()
        .or_else(|| checks.k4_blocks())
        .or_else(|| checks.even_chords())
        .or_else(|| checks.odd_pairs())
        .or_else(|| checks.almost_bipartite())
}

struct Checks<'a>(&'a Graph);

impl Checks<'_> {
    fn even_chords(&self) -> Option<Violation> {
        let missing = even_chord_violations(self.0, self.0.n());
        (!missing.is_empty()).then_some(Violation::MissingEvenChords { missing })
    }

    fn odd_pairs(&self) -> Option<Violation> {
        let pairs = odd_cycle_intersection_violations(self.0, self.0.n());
        (!pairs.is_empty()).then_some(Violation::OddCyclesMeetOnce { pairs })
    }

    fn bad_blocks(&self) -> Option<Violation> {
        let blocks: Vec<Block> =
            blocks_any(self.0).blocks.into_iter().filter(|b| !complete_bipartite_unchecked(&b.to_graph())).collect();
        (blocks.len() >= 2).then_some(Violation::SeveralNonCompleteBipartiteBlocks { blocks })
    }

    fn k4_blocks(&self) -> Option<Violation> {
        blocks_any(self.0).blocks.into_iter().filter(|b| b.vertices.len() > 4).find_map(|block| {
            let local = block.to_graph();
            let k4 = local.k4_subgraphs().into_iter().next()?.map(|v| block.original_label(v));
            Some(Violation::BlockStrictlyContainsK4 { block, k4 })
        })
    }

    fn almost_bipartite(&self) -> Option<Violation> {
        let g = self.0;
        let almost = g.vertices().any(|v| two_color(g, Some(v)).is_ok());
        (!almost && g.k4_subgraphs().is_empty()).then_some(Violation::NotAlmostBipartiteWithoutK4)
    }
}
