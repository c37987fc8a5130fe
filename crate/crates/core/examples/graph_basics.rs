// Graph text format, bridges and blocks, and cactus classes.
//
// cargo run --example graph_basics

use subfree::blocks::bridges_and_blocks;
use subfree::cactus::{cactus_classify, CactusClass};
use subfree::generate::{petersen, random_cactus};
use subfree::Graph;

fn main() {
    // Two triangles joined by the bridge 2-3, plus a pendant vertex 6.
    let text = "# label 6 tail\n7\n0 1\n1 2\n0 2\n2 3\n3 4\n4 5\n3 5\n5 6\n";
    let g = Graph::parse(text).expect("valid graph");
    println!("{} vertices, {} edges, max degree {}", g.n(), g.m(), g.max_degree());
    println!("vertex 6 is labelled {:?}", g.label(6));

    let d = bridges_and_blocks(&g);
    println!("bridges {:?}, proper bridges {:?}", d.bridges, d.proper_bridges);
    println!("cut vertices {:?}", d.cut_vertices);
    assert_eq!(d.proper_bridges, vec![(2, 3)]);

    // The text format round-trips.
    assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);

    for (name, h) in [
        ("two triangles", g.clone()),
        ("very nice cactus", random_cactus(1, 3, true).unwrap()),
        ("petersen", petersen()),
    ] {
        let class = cactus_classify(&h).unwrap();
        println!("{name}: {class:?}");
        if name == "petersen" {
            assert_eq!(class, CactusClass::NotCactus);
        }
    }

    println!("{}", g.to_dot());
}
