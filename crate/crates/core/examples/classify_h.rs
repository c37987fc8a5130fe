// Complexity of the five problems on H-subgraph-free graphs for a few
// patterns H.
//
// cargo run --example classify_h

use subfree::generate::{cycle, path, spider, star};
use subfree::meta::{classify_h, Complexity};
use subfree::subgraph::SpiderPattern;

fn main() {
    let patterns = [
        ("P6", path(6).unwrap()),
        ("C4", cycle(4).unwrap()),
        ("K_{1,5}", star(5).unwrap()),
        ("S_{1,1,2,3}", spider(&SpiderPattern::new(1, 1, 2, 3).unwrap())),
        ("S_{2,2,2,2}", spider(&SpiderPattern::new(2, 2, 2, 2).unwrap())),
    ];
    for (name, h) in patterns {
        let c = classify_h(&h).unwrap();
        let row: Vec<String> = c.problems.iter().map(|p| format!("{}={:?}", p.problem, p.complexity)).collect();
        println!("{name:<12} {}", row.join("  "));
    }
    let s = classify_h(&spider(&SpiderPattern::new(2, 2, 2, 2).unwrap())).unwrap();
    assert_eq!(s.get("fvs"), Some(Complexity::NpComplete));
    assert_eq!(s.get("cvc"), Some(Complexity::Open));
}
