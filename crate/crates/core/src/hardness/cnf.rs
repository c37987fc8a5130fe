//! CNF formulas in DIMACS form and the twice-positive, once-negative
//! restriction used by the reduction.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// A CNF formula over variables `1..=variables`. Literals are nonzero signed
/// integers as in DIMACS.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CnfFormula {
    pub variables: usize,
    pub clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    /// Parses DIMACS `cnf` text: comment lines start with `c`, the header is
    /// `p cnf <vars> <clauses>`, and each clause ends with `0`. Clauses may
    /// span lines.
    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if line.starts_with('p') {
                let parts: Vec<&str> = line.split_whitespace().collect();
                let parsed = match parts[..] {
                    ["p", "cnf", v, c] => v.parse().ok().zip(c.parse().ok()),
                    _ => None,
                };
                if header.is_some() || parsed.is_none() {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("bad header {line:?}, expected `p cnf <vars> <clauses>`"),
                    });
                }
                header = parsed;
                continue;
            }
            let Some((vars, _)) = header else {
                return Err(Error::Parse {
                    line: line_no,
                    message: "clause before `p cnf` header".into(),
                });
            };
            for tok in line.split_whitespace() {
                let lit: i32 = tok.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("not an integer literal: {tok:?}"),
                })?;
                if lit == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else if lit.unsigned_abs() as usize > vars {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("literal {lit} names a variable above {vars}"),
                    });
                } else {
                    current.push(lit);
                }
            }
        }
        let Some((variables, declared)) = header else {
            return Err(Error::Parse {
                line: 0,
                message: "missing `p cnf` header".into(),
            });
        };
        if !current.is_empty() {
            return Err(Error::Parse {
                line: text.lines().count(),
                message: "last clause is not terminated by 0".into(),
            });
        }
        if clauses.len() != declared {
            return Err(Error::Parse {
                line: 0,
                message: format!("header declares {declared} clauses, found {}", clauses.len()),
            });
        }
        Ok(CnfFormula { variables, clauses })
    }

    /// Checks the restricted form: every clause has two or three literals with
    /// no literal repeated, and every variable occurs exactly twice positively
    /// and once negatively.
    pub fn validate_2p1n(&self) -> Result<()> {
        if self.variables == 0 {
            return Err(Error::Validation("formula has no variables".into()));
        }
        for (i, clause) in self.clauses.iter().enumerate() {
            if !(2..=3).contains(&clause.len()) {
                return Err(Error::Validation(format!(
                    "clause {} has {} literals, expected 2 or 3",
                    i + 1,
                    clause.len()
                )));
            }
            for (j, lit) in clause.iter().enumerate() {
                if clause[..j].contains(lit) {
                    return Err(Error::Validation(format!(
                        "clause {} repeats literal {lit}",
                        i + 1
                    )));
                }
            }
        }
        for var in 1..=self.variables {
            let (pos, neg) = self.occurrences(var);
            if (pos, neg) != (2, 1) {
                return Err(Error::Validation(format!(
                    "variable {var} occurs {pos} times positively and {neg} times negatively, expected 2 and 1"
                )));
            }
        }
        Ok(())
    }

    fn occurrences(&self, var: usize) -> (usize, usize) {
        let lits = self.clauses.iter().flatten();
        let pos = lits.clone().filter(|&&l| l == var as i32).count();
        let neg = lits.filter(|&&l| l == -(var as i32)).count();
        (pos, neg)
    }

    /// Whether `assignment[v - 1]` satisfies every clause.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter()
                .any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0))
        })
    }

    pub fn to_dimacs(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p cnf {} {}", self.variables, self.clauses.len())?;
        for c in &self.clauses {
            for l in c {
                write!(f, "{l} ")?;
            }
            writeln!(f, "0")?;
        }
        Ok(())
    }
}

/// A random valid 2P1N formula on `n` variables: the `3n` occurrences are
/// shuffled and cut into clauses of two or three literals, retrying whenever
/// a clause would repeat a literal. A single variable cannot fill a clause
/// of size 2 or 3 without repeating a literal, so `n` must be at least 2.
pub fn random_2p1n(seed: u64, n: usize) -> Result<CnfFormula> {
    if n < 2 {
        return Err(Error::Validation("2P1N formulas need at least two variables".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lits: Vec<i32> = (1..=n as i32).flat_map(|v| [v, v, -v]).collect();
    loop {
        lits.shuffle(&mut rng);
        let mut clauses = Vec::new();
        let mut rest = &lits[..];
        while !rest.is_empty() {
            let size = match rest.len() {
                2 | 3 => rest.len(),
                4 => 2,
                _ => rng.gen_range(2..=3),
            };
            clauses.push(rest[..size].to_vec());
            rest = &rest[size..];
        }
        let f = CnfFormula {
            variables: n,
            clauses,
        };
        if f.validate_2p1n().is_ok() {
            return Ok(f);
        }
    }
}

/// Parses DIMACS text and validates the restricted form.
pub fn parse_cnf(text: &str) -> Result<CnfFormula> {
    let f = CnfFormula::parse_dimacs(text)?;
    f.validate_2p1n()?;
    Ok(f)
}
