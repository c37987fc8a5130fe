// Splitting a graph into subcubic (C) and bounded-treedepth (T) parts, and
// checking the treedepth bounds for spider-free graphs.
//
// cargo run --example decomposition

use subfree::generate::{complete, petersen};
use subfree::meta::{check_structure_theorem, decompose_ct, BoundStatus};
use subfree::{Graph, Limits};

fn main() {
    let lim = Limits::default();

    // K5 joined by a bridge to a subdivided Petersen graph. The bridge ends
    // at a subdivision vertex (id 5 + 10), keeping that side subcubic.
    let k5 = complete(5).unwrap();
    let p = petersen().subdivide(1).unwrap();
    let g: Graph = k5.disjoint_union(&p).with_edges(&[(0, 15)]).unwrap();
    let d = decompose_ct(&g, &lim).unwrap();
    for (i, part) in d.parts.iter().enumerate() {
        println!("part {i}: {:?} on {} vertices, treedepth {:?}", part.kind, part.vertices.len(), part.treedepth);
    }
    for b in &d.connecting_bridges {
        assert_eq!(b.edge, (0, 15));
        println!("bridge {:?} joins C part {} to T part {}", b.edge, b.c_part, b.t_part);
    }

    // K5 has no S_{1,1,2,1}, so the quadratic bound applies. With r = 1 the
    // linear pattern is K_{1,4}, which K5 contains.
    let rep = check_structure_theorem(&k5, 2, 1, &lim).unwrap();
    println!("K5: treedepth {:?}", rep.treedepth);
    for c in [&rep.quadratic, &rep.linear] {
        println!("  {}-free => td <= {}: {:?}", c.pattern, c.bound, c.status);
    }
    assert_eq!(rep.quadratic.status, BoundStatus::Holds);
}
