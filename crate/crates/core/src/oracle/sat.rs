//! DPLL with unit propagation.

use crate::error::Result;
use crate::hardness::cnf::CnfFormula;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Value {
    Unset,
    True,
    False,
}

fn lit_value(assign: &[Value], lit: i32) -> Value {
    match (assign[lit.unsigned_abs() as usize - 1], lit > 0) {
        (Value::Unset, _) => Value::Unset,
        (Value::True, true) | (Value::False, false) => Value::True,
        _ => Value::False,
    }
}

fn set_lit(assign: &mut [Value], lit: i32) {
    assign[lit.unsigned_abs() as usize - 1] = if lit > 0 { Value::True } else { Value::False };
}

fn search(clauses: &[Vec<i32>], mut assign: Vec<Value>) -> Option<Vec<Value>> {
    loop {
        let mut unit = None;
        for c in clauses {
            let mut open = None;
            let mut open_count = 0;
            let mut satisfied = false;
            for &l in c {
                match lit_value(&assign, l) {
                    Value::True => {
                        satisfied = true;
                        break;
                    }
                    Value::Unset => {
                        open_count += 1;
                        open = Some(l);
                    }
                    Value::False => {}
                }
            }
            if satisfied {
                continue;
            }
            match open_count {
                0 => return None,
                1 => {
                    unit = open;
                    break;
                }
                _ => {}
            }
        }
        match unit {
            Some(l) => set_lit(&mut assign, l),
            None => break,
        }
    }
    let Some(var) = assign.iter().position(|&v| v == Value::Unset) else {
        return Some(assign);
    };
    for value in [Value::True, Value::False] {
        let mut next = assign.clone();
        next[var] = value;
        if let Some(done) = search(clauses, next) {
            return Some(done);
        }
    }
    None
}

/// A satisfying assignment of an arbitrary CNF formula, if any. Branches on
/// the lowest unassigned variable, true first.
pub fn dpll(formula: &CnfFormula) -> Option<Vec<bool>> {
    search(&formula.clauses, vec![Value::Unset; formula.variables])
        .map(|a| a.into_iter().map(|v| v == Value::True).collect())
}

/// Decides a formula in the twice-positive, once-negative form.
pub fn sat_2p1n(formula: &CnfFormula) -> Result<Option<Vec<bool>>> {
    formula.validate_2p1n()?;
    Ok(dpll(formula))
}
