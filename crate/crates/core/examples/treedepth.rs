// Exact treedepth, the DFS upper bound, and longest paths.
//
// cargo run --example treedepth

use subfree::generate::{complete, path, petersen, star};
use subfree::treedepth::{longest_path_length, treedepth, treedepth_exact, treedepth_upper_bound};

fn main() {
    for (name, g) in [
        ("P7", path(7).unwrap()),
        ("K_{1,5}", star(5).unwrap()),
        ("K6", complete(6).unwrap()),
        ("petersen", petersen()),
    ] {
        let exact = treedepth_exact(&g, 20).unwrap();
        let upper = treedepth_upper_bound(&g);
        let lp = longest_path_length(&g, 20).unwrap();
        println!("{name}: td {exact}, DFS bound {upper}, longest path {lp} edges");
        assert!(exact <= upper);
        assert!(lp + 1 >= exact);
    }
    assert_eq!(treedepth_exact(&path(7).unwrap(), 20).unwrap(), 3);

    // Above the cap the combined entry point falls back to the bound.
    println!("P40 with cap 10: {:?}", treedepth(&path(40).unwrap(), 10));
}
