//! Matching cuts by enumerating vertex bipartitions.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::oracle::cvc::BITMASK_CEILING;
use crate::Limits;

/// A smallest matching cut of a connected graph (ties broken by the sorted
/// edge list), or `None` if the graph has none.
pub fn oracle_matching_cut(g: &Graph, limits: &Limits) -> Result<Option<Vec<Edge>>> {
    if !g.is_connected() {
        return Err(Error::Validation(
            "matching cut is defined for connected graphs only".into(),
        ));
    }
    Error::check_capacity(
        "matching cut oracle input",
        g.n(),
        limits.matching_cut.min(BITMASK_CEILING),
    )?;
    let n = g.n();
    if n < 2 {
        return Ok(None);
    }
    let edges = g.edges();
    let mut best: Option<Vec<Edge>> = None;
    // Vertex 0 stays on side A; `side` marks side B.
    for half in 1u32..1 << (n - 1) {
        let side = half << 1;
        let mut touched = 0u32;
        let mut cut = Vec::new();
        let mut matching = true;
        for &(u, v) in &edges {
            if (side >> u ^ side >> v) & 1 == 1 {
                let ends = 1 << u | 1 << v;
                if touched & ends != 0 {
                    matching = false;
                    break;
                }
                touched |= ends;
                cut.push((u, v));
            }
        }
        if !matching {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) => (cut.len(), &cut) < (b.len(), b),
        };
        if better {
            best = Some(cut);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle};
    use crate::oracle::check::check_matching_cut;

    #[test]
    fn small_cases() {
        let lim = Limits::default();
        assert_eq!(oracle_matching_cut(&complete(4).unwrap(), &lim).unwrap(), None);
        let c4 = cycle(4).unwrap();
        let cut = oracle_matching_cut(&c4, &lim).unwrap().unwrap();
        assert_eq!(cut.len(), 2);
        assert!(check_matching_cut(&c4, &cut));
        let bridged = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap();
        assert_eq!(oracle_matching_cut(&bridged, &lim).unwrap(), Some(vec![(2, 3)]));
        assert_eq!(oracle_matching_cut(&Graph::new(1), &lim).unwrap(), None);
        assert!(matches!(
            oracle_matching_cut(&Graph::new(2), &lim),
            Err(Error::Validation(_))
        ));
    }
}
