// Exhaustive small-graph families, up to isomorphism.
//
// cargo run --example enumeration

use subfree::enumerate::{all_graphs, connected_subcubic_graphs, is_isomorphic, subcubic_very_nice_cacti};
use subfree::generate::{cycle, random_subcubic};
use subfree::Graph;

fn main() {
    let family = connected_subcubic_graphs(8).unwrap();
    for n in 1..=8 {
        let count = family.iter().filter(|g| g.n() == n).count();
        println!("connected subcubic graphs on {n} vertices: {count}");
    }
    println!("all graphs on <= 6 vertices: {}", all_graphs(6).unwrap().len());
    println!("very nice subcubic cacti on <= 9 vertices: {}", subcubic_very_nice_cacti(9).unwrap().len());

    // Relabelling does not change the isomorphism class.
    let g = random_subcubic(2, 8, 2).unwrap();
    let reversed = Graph::from_edges(g.n(), g.edges().into_iter().map(|(u, v)| (7 - u, 7 - v))).unwrap();
    assert!(is_isomorphic(&g, &reversed).unwrap());
    println!("reversed labels give an isomorphic graph; C8 is not: {}", !is_isomorphic(&g, &cycle(8).unwrap()).unwrap());
}
