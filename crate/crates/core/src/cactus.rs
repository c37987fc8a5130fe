//! Cactus recognition through the block structure.
//!
//! In a cactus every block is a bridge, an isolated vertex or a single cycle,
//! so cycles can be read off the blocks without enumerating them.

use serde::Serialize;

use crate::blocks::bridges_and_blocks;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Ordered from weakest to strongest, so `a >= CactusClass::NiceCactus`
/// reads as "at least a nice cactus".
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CactusClass {
    NotCactus,
    /// No two cycles share an edge.
    Cactus,
    /// No two cycles share a vertex.
    NiceCactus,
    /// Every vertex lies on exactly one cycle.
    VeryNiceCactus,
}

/// Vertex sets of the blocks that are cycles. For a cactus these are exactly
/// its cycles.
pub fn cycle_blocks(g: &Graph) -> Vec<VertexSet> {
    bridges_and_blocks(g)
        .blocks
        .into_iter()
        .filter(|b| b.is_cycle())
        .map(|b| b.vertices)
        .collect()
}

pub fn cactus_classify(g: &Graph) -> Result<CactusClass> {
    if !g.is_connected() {
        return Err(Error::Validation(
            "cactus classification needs a connected graph".into(),
        ));
    }
    let blocks = bridges_and_blocks(g).blocks;
    if blocks.iter().any(|b| b.edges.len() > 1 && !b.is_cycle()) {
        return Ok(CactusClass::NotCactus);
    }
    let mut on_cycles = vec![0usize; g.n()];
    for b in blocks.iter().filter(|b| b.is_cycle()) {
        for &v in &b.vertices {
            on_cycles[v] += 1;
        }
    }
    if on_cycles.iter().any(|&c| c > 1) {
        return Ok(CactusClass::Cactus);
    }
    if g.n() > 0 && on_cycles.iter().all(|&c| c == 1) {
        return Ok(CactusClass::VeryNiceCactus);
    }
    Ok(CactusClass::NiceCactus)
}

pub fn is_very_nice_cactus(g: &Graph) -> bool {
    matches!(cactus_classify(g), Ok(CactusClass::VeryNiceCactus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn cycle_is_very_nice() {
        assert_eq!(
            cactus_classify(&generate::cycle(4).unwrap()).unwrap(),
            CactusClass::VeryNiceCactus
        );
    }

    #[test]
    fn shared_vertex_is_plain_cactus() {
        let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert_eq!(cactus_classify(&bowtie).unwrap(), CactusClass::Cactus);
    }

    #[test]
    fn k4_is_not_cactus() {
        assert_eq!(
            cactus_classify(&generate::complete(4).unwrap()).unwrap(),
            CactusClass::NotCactus
        );
    }

    #[test]
    fn trees_and_pendants_are_nice() {
        assert_eq!(
            cactus_classify(&generate::path(4).unwrap()).unwrap(),
            CactusClass::NiceCactus
        );
        let tadpole = Graph::from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        assert_eq!(cactus_classify(&tadpole).unwrap(), CactusClass::NiceCactus);
    }

    #[test]
    fn disconnected_is_rejected() {
        assert!(cactus_classify(&Graph::new(2)).is_err());
    }
}
