//! Complexity of the five problems on `H`-subgraph-free graphs for a
//! connected pattern `H`, from the known polynomial and hardness conditions.
//!
//! Hardness transfers to supergraphs of a hard pattern, so "is `K_{1,5}`" is
//! tested as "has a vertex of degree at least 5" and likewise for
//! `S_{2,2,2,2}`. The colouring conditions that refer to the trees `T1`,
//! `T2`, `T4`, `T5` and `T6` are not encoded (their shapes are only given as
//! a drawing), so patterns that would need them report `Open`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subgraph::{contains_spider, SpiderPattern};

pub const MAX_PATTERN_VERTICES: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Complexity {
    PolynomialTime,
    NpComplete,
    Open,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProblemClass {
    pub problem: &'static str,
    pub complexity: Complexity,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub vertices: usize,
    pub edges: usize,
    pub shape: String,
    pub problems: Vec<ProblemClass>,
}

impl Classification {
    pub fn get(&self, problem: &str) -> Option<Complexity> {
        self.problems.iter().find(|p| p.problem == problem).map(|p| p.complexity)
    }
}

/// Tentacle lengths of a tree with one vertex of degree 4 and all others of
/// degree at most 2.
fn tentacles(h: &Graph, centre: usize) -> Vec<usize> {
    let mut lengths: Vec<usize> = h
        .neighbors(centre)
        .iter()
        .map(|&first| {
            let (mut prev, mut v, mut len) = (centre, first, 1);
            while let Some(&next) = h.neighbors(v).iter().find(|&&w| w != prev) {
                prev = v;
                v = next;
                len += 1;
            }
            len
        })
        .collect();
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths
}

struct Facts {
    cycle: bool,
    high: usize,
    max_degree: usize,
    in_s: bool,
    s11qr: bool,
    has_s2222: bool,
    small_forest: bool,
}

pub fn classify_h(h: &Graph) -> Result<Classification> {
    Error::check_capacity("pattern graph", h.n(), MAX_PATTERN_VERTICES)?;
    if h.n() == 0 || !h.is_connected() {
        return Err(Error::Validation("the pattern must be a nonempty connected graph".into()));
    }
    let cycle = !h.is_forest();
    let high: Vec<usize> = h.vertices().filter(|&v| h.degree(v) >= 3).collect();
    let max_degree = h.max_degree();
    let spider = (!cycle && high.len() == 1 && max_degree == 4).then(|| tentacles(h, high[0]));
    let f = Facts {
        cycle,
        high: high.len(),
        max_degree,
        in_s: !cycle && (high.is_empty() || (high.len() == 1 && max_degree == 3)),
        s11qr: spider.as_ref().is_some_and(|t| t[2] == 1 && t[3] == 1),
        has_s2222: contains_spider(h, &SpiderPattern::new(2, 2, 2, 2)?).is_some(),
        small_forest: !cycle && max_degree <= 4 && h.n() <= 7,
    };
    let shape = if cycle {
        "contains a cycle".to_string()
    } else if high.is_empty() {
        format!("path P{}", h.n())
    } else if f.in_s {
        let mut t = tentacles(h, high[0]);
        t.truncate(3);
        format!("subdivided claw with legs {t:?}")
    } else if let Some(t) = &spider {
        format!("spider S_{{{},{},{},{}}}", t[0], t[1], t[2], t[3])
    } else {
        format!("tree with {} vertices of degree at least 3", high.len())
    };
    let problems = ["fvs", "ifvs", "cvc", "colouring", "matchingcut"]
        .into_iter()
        .map(|problem| classify_one(problem, &f))
        .collect::<Result<Vec<_>>>()?;
    Ok(Classification {
        vertices: h.n(),
        edges: h.m(),
        shape,
        problems,
    })
}

fn classify_one(problem: &'static str, f: &Facts) -> Result<ProblemClass> {
    let mut easy = Vec::new();
    if f.in_s {
        easy.push("a path or subdivided claw");
    }
    if f.s11qr {
        easy.push("a spider with two legs of length 1");
    }
    if problem == "colouring" && f.small_forest {
        easy.push("a forest with maximum degree 4 and at most 7 vertices");
    }
    let mut hard = Vec::new();
    if f.cycle {
        hard.push("contains a cycle");
    }
    if f.max_degree >= 5 {
        hard.push("contains K_{1,5}");
    }
    if matches!(problem, "fvs" | "ifvs" | "colouring") && f.has_s2222 {
        hard.push("contains S_{2,2,2,2}");
    }
    if matches!(problem, "fvs" | "ifvs") && f.high >= 2 {
        hard.push("has two vertices of degree at least 3");
    }
    let (complexity, reasons) = match (easy.is_empty(), hard.is_empty()) {
        (false, false) => {
            return Err(Error::Invariant(format!(
                "{problem}: pattern is both {easy:?} and {hard:?}"
            )))
        }
        (false, true) => (Complexity::PolynomialTime, easy),
        (true, false) => (Complexity::NpComplete, hard),
        (true, true) => (Complexity::Open, vec!["no known condition applies"]),
    };
    Ok(ProblemClass {
        problem,
        complexity,
        reason: reasons.join("; "),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle, path, spider, star};

    fn all(c: &Classification) -> Vec<Complexity> {
        c.problems.iter().map(|p| p.complexity).collect()
    }

    #[test]
    fn path_and_cycle() {
        let p6 = classify_h(&path(6).unwrap()).unwrap();
        assert_eq!(all(&p6), vec![Complexity::PolynomialTime; 5]);
        let c4 = classify_h(&cycle(4).unwrap()).unwrap();
        assert_eq!(all(&c4), vec![Complexity::NpComplete; 5]);
    }

    #[test]
    fn spiders() {
        let s = classify_h(&spider(&SpiderPattern::new(2, 2, 2, 2).unwrap())).unwrap();
        use Complexity::*;
        assert_eq!(all(&s), vec![NpComplete, NpComplete, Open, NpComplete, Open]);
        let easy = classify_h(&spider(&SpiderPattern::new(1, 1, 3, 2).unwrap())).unwrap();
        assert_eq!(all(&easy), vec![PolynomialTime; 5]);
        let open = classify_h(&spider(&SpiderPattern::new(1, 2, 2, 2).unwrap())).unwrap();
        assert_eq!(all(&open), vec![Open; 5]);
    }

    #[test]
    fn stars_and_trees() {
        use Complexity::*;
        assert_eq!(all(&classify_h(&star(5).unwrap()).unwrap()), vec![NpComplete; 5]);
        assert_eq!(classify_h(&star(3).unwrap()).unwrap().get("cvc"), Some(PolynomialTime));
        // Two adjacent degree-3 vertices.
        let h = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        let c = classify_h(&h).unwrap();
        assert_eq!(c.get("fvs"), Some(NpComplete));
        assert_eq!(c.get("cvc"), Some(Open));
        assert_eq!(c.get("colouring"), Some(PolynomialTime));
    }

    #[test]
    fn limits() {
        assert!(matches!(classify_h(&path(13).unwrap()), Err(Error::Capacity { .. })));
        assert!(classify_h(&Graph::new(2)).is_err());
    }
}
