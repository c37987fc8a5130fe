// Solving all five problems by splitting at bridges, checked against the
// whole-graph oracles.
//
// cargo run --example meta_solver

use subfree::generate::random_block_bridge;
use subfree::meta::solve;
use subfree::oracle::{oracle_min_fvs, ProblemKind};
use subfree::{to_canonical_json, Limits};

fn main() {
    let lim = Limits::default();
    let g = random_block_bridge(11, 16).unwrap();
    println!("{} vertices, {} edges", g.n(), g.m());
    for problem in [
        ProblemKind::Fvs,
        ProblemKind::Ifvs,
        ProblemKind::Cvc,
        ProblemKind::Colouring(3),
        ProblemKind::MatchingCut,
    ] {
        let r = solve(problem, &g, &lim).unwrap();
        assert!(r.validation.ok);
        let engines: Vec<_> = r.route.iter().map(|s| format!("{:?}", s.engine)).collect();
        println!(
            "{:<12} decision {:<5} value {:?} via {}",
            problem.name(),
            r.decision,
            r.value,
            engines.join(", ")
        );
        if problem == ProblemKind::Fvs {
            assert_eq!(r.value, Some(oracle_min_fvs(&g, &lim).unwrap().len()));
        }
    }

    let report = solve(ProblemKind::MatchingCut, &g, &lim).unwrap();
    println!("{}", to_canonical_json(&report));
}
