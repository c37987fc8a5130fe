// From a 2P1N-3SAT formula to a feedback vertex set instance with maximum
// degree 4 and no S_{2,2,2,2} subgraph.
//
// cargo run --example hardness_reduction

use subfree::hardness::cnf::random_2p1n;
use subfree::hardness::{build_variable_gadget, gadget_checklist, parse_cnf, reduce, verify_reduction};
use subfree::Limits;

fn main() {
    let gadget = build_variable_gadget();
    for (item, ok) in gadget_checklist(&gadget.graph) {
        println!("gadget {item:?}: {ok}");
    }

    // Each variable occurs twice positively and once negatively.
    let f = parse_cnf("p cnf 2 3\n1 2 0\n1 -2 0\n2 -1 0\n").unwrap();
    let out = reduce(&f).unwrap();
    println!("{} vertices, {} edges, threshold {}", out.vertices, out.edges, out.threshold);
    for slot in &out.literal_map {
        println!("  x{} {:?} in clause {} -> vertex {}", slot.variable, slot.occurrence, slot.clause, slot.vertex);
    }

    let lim = Limits::default();
    for formula in [f, random_2p1n(4, 3).unwrap()] {
        let r = verify_reduction(&formula, &lim).unwrap();
        println!(
            "satisfiable {} | min FVS {} vs 4n = {} | S_{{2,2,2,2}}-free {}",
            r.satisfiable, r.min_fvs, r.threshold, r.spider_free
        );
        assert!(r.consistent());
    }
}
