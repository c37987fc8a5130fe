// Minimum independent feedback vertex sets of subcubic graphs, step by
// step and in one call.
//
// cargo run --example subcubic_ifvs

use subfree::generate::{complete, petersen, random_cactus, random_subcubic};
use subfree::ifvs::{
    complete_ifvs, make_nice_cactus_traced, min_fvs_exact, min_ifvs_subcubic, normalize_degree3, TransformState,
};
use subfree::oracle::check::check_ifvs;
use subfree::Limits;

fn main() {
    let lim = Limits::default();

    // The pipeline by hand on a random subcubic graph.
    let g = random_subcubic(7, 20, 6).unwrap();
    let seed = min_fvs_exact(&g, &lim).unwrap();
    let f = normalize_degree3(&g, &seed).unwrap();
    println!("min FVS {seed:?}, moved onto degree-3 vertices: {f:?}");
    let mut moves = 0;
    let state = make_nice_cactus_traced(TransformState::new(g.clone(), f).unwrap(), |s| {
        moves += 1;
        println!("  move {moves}: J = {:?}", s.j);
    })
    .unwrap();
    let set = complete_ifvs(&state).unwrap();
    println!("independent FVS {set:?}");
    assert!(check_ifvs(&g, &set));
    assert_eq!(set.len(), seed.len());

    // One call, with the degree-3 flag.
    for (name, h) in [
        ("petersen", petersen()),
        ("very nice cactus", random_cactus(3, 4, true).unwrap()),
        ("K4", complete(4).unwrap()),
    ] {
        let r = min_ifvs_subcubic(&h, &lim).unwrap();
        match r.set() {
            Some(s) => println!("{name}: {s:?}, all degree 3: {:?}", r.degree3_only()),
            None => println!("{name}: no independent FVS exists"),
        }
    }
}
