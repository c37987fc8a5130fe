// Finding subdivided stars S_{w,x,y,z} and other small patterns.
//
// cargo run --example spider_detection

use subfree::generate::{cycle, petersen};
use subfree::subgraph::{contains_spider, contains_subgraph, validate_embedding, SpiderPattern};

fn main() {
    let host = petersen();
    for lengths in ["1,1,1,1", "1,1,1,2", "2,2,2,2"] {
        let p: SpiderPattern = lengths.parse().unwrap();
        match contains_spider(&host, &p) {
            // Petersen is cubic, so it has no vertex of degree 4.
            None => println!("petersen is {p}-free"),
            Some(emb) => println!("petersen contains {p} at {emb:?}"),
        }
    }

    // Any vertex of degree 4 with long enough tentacles will do.
    let mut edges = vec![(0, 1), (0, 2), (0, 3), (0, 4)];
    edges.extend([(1, 5), (2, 6), (3, 7), (4, 8)]);
    let host = subfree::Graph::from_edges(9, edges).unwrap();
    let p = SpiderPattern::new(2, 2, 2, 2).unwrap();
    let emb = contains_spider(&host, &p).expect("the host is S_{2,2,2,2}");
    assert!(validate_embedding(&host, &p.graph(), &emb));
    println!("{p} maps centre to {} via {emb:?}", emb[0]);

    // The generic matcher handles any pattern up to the size cap.
    let c5 = cycle(5).unwrap();
    let found = contains_subgraph(&petersen(), &c5, 12).unwrap();
    println!("C5 in petersen: {found:?}");
    assert!(found.is_some());
}
