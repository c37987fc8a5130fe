// Brute-force reference solvers for all five problems.
//
// cargo run --example oracles

use subfree::generate::{cycle, petersen};
use subfree::oracle::{
    oracle_chromatic, oracle_k_colouring, oracle_matching_cut, oracle_min_cvc, oracle_min_fvs, oracle_min_ifvs,
};
use subfree::Limits;

fn main() {
    let lim = Limits::default();
    let g = petersen();
    println!("min FVS   {:?}", oracle_min_fvs(&g, &lim).unwrap());
    println!("min IFVS  {:?}", oracle_min_ifvs(&g, &lim).unwrap());
    println!("min CVC   {:?}", oracle_min_cvc(&g, &lim).unwrap());
    let (chi, colours) = oracle_chromatic(&g, &lim).unwrap();
    println!("chromatic number {chi}: {colours:?}");
    assert_eq!(chi, 3);
    assert!(oracle_k_colouring(&g, 2, &lim).unwrap().is_none());
    println!("matching cut {:?}", oracle_matching_cut(&g, &lim).unwrap());

    // Every cycle of length at least 4 has a matching cut of two edges.
    let cut = oracle_matching_cut(&cycle(6).unwrap(), &lim).unwrap().unwrap();
    println!("C6 matching cut {cut:?}");
    assert_eq!(cut.len(), 2);

    // Oversized inputs are refused instead of run.
    let big = subfree::generate::complete(30).unwrap();
    println!("K30: {}", oracle_min_fvs(&big, &lim).unwrap_err());
}
