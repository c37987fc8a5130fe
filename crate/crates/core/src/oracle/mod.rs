//! Reference solvers. They are exponential and capped by [`Limits`], and
//! share no search code with the structural solvers they are used to check.
//!
//! [`Limits`]: crate::Limits

pub mod check;
pub mod colouring;
pub mod cvc;
pub mod fvs;
pub mod matching_cut;
pub mod sat;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

pub use colouring::{oracle_chromatic, oracle_k_colouring};
pub use cvc::{oracle_min_cvc, oracle_min_cvc_with};
pub use fvs::{oracle_min_fvs, oracle_min_ifvs};
pub use matching_cut::oracle_matching_cut;
pub use sat::{dpll, sat_2p1n};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProblemKind {
    Fvs,
    Ifvs,
    Cvc,
    /// Decide whether `k` colours suffice.
    Colouring(usize),
    MatchingCut,
}

impl ProblemKind {
    pub fn name(&self) -> &'static str {
        match self {
            ProblemKind::Fvs => "fvs",
            ProblemKind::Ifvs => "ifvs",
            ProblemKind::Cvc => "cvc",
            ProblemKind::Colouring(_) => "colouring",
            ProblemKind::MatchingCut => "matchingcut",
        }
    }

    /// Parses a problem name; `k` is required for colouring.
    pub fn parse(name: &str, k: Option<usize>) -> Result<Self> {
        match (name, k) {
            ("fvs", _) => Ok(ProblemKind::Fvs),
            ("ifvs", _) => Ok(ProblemKind::Ifvs),
            ("cvc", _) => Ok(ProblemKind::Cvc),
            ("colouring" | "coloring", Some(k)) if k >= 1 => Ok(ProblemKind::Colouring(k)),
            ("colouring" | "coloring", _) => Err(Error::Validation(
                "colouring needs a number of colours k >= 1".into(),
            )),
            ("matchingcut" | "matching-cut", _) => Ok(ProblemKind::MatchingCut),
            _ => Err(Error::Validation(format!(
                "unknown problem {name:?}; expected fvs, ifvs, cvc, colouring or matchingcut"
            ))),
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProblemKind::Colouring(k) => write!(f, "colouring({k})"),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for ProblemKind {
    type Err = Error;

    /// Accepts the plain names and `colouring(k)`.
    fn from_str(s: &str) -> Result<Self> {
        if let Some(k) = s
            .strip_prefix("colouring(")
            .and_then(|rest| rest.strip_suffix(')'))
        {
            let k = k
                .parse()
                .map_err(|_| Error::Validation(format!("bad colour count in {s:?}")))?;
            return ProblemKind::parse("colouring", Some(k));
        }
        ProblemKind::parse(s, None)
    }
}

impl Serialize for ProblemKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for p in [
            ProblemKind::Fvs,
            ProblemKind::Ifvs,
            ProblemKind::Cvc,
            ProblemKind::Colouring(3),
            ProblemKind::MatchingCut,
        ] {
            assert_eq!(p.to_string().parse::<ProblemKind>().unwrap(), p);
        }
        assert!(ProblemKind::parse("colouring", None).is_err());
        assert!(ProblemKind::parse("colouring", Some(0)).is_err());
        assert!("tsp".parse::<ProblemKind>().is_err());
    }
}
