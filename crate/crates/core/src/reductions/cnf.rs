use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::ReductionError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Literal {
    /// 1-based variable index.
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, positive: false }
    }

    pub fn from_dimacs(x: i64) -> Self {
        Literal {
            var: x.unsigned_abs() as usize,
            positive: x > 0,
        }
    }

    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64;
        if self.positive {
            v
        } else {
            -v
        }
    }

    pub fn holds(self, assignment: &BTreeMap<usize, bool>) -> Option<bool> {
        assignment.get(&self.var).map(|&value| value == self.positive)
    }
}

/// A 3-CNF formula. Clauses have exactly three literals; repeats are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cnf {
    pub num_vars: usize,
    pub clauses: Vec<[Literal; 3]>,
}

impl Cnf {
    pub fn new(num_vars: usize, clauses: Vec<[Literal; 3]>) -> Self {
        Cnf { num_vars, clauses }
    }

    /// Parses DIMACS: `c` comments, a `p cnf n m` header, then `m` clause
    /// lines of three nonzero literals followed by `0`.
    pub fn parse_dimacs(text: &str) -> Result<Self, ReductionError> {
        let bad = |line: usize, message: &str| ReductionError::MalformedCnf {
            line,
            message: message.to_string(),
        };
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if line.starts_with('p') {
                if header.is_some() {
                    return Err(bad(line_no, "duplicate header"));
                }
                let fields: Vec<&str> = line.split_whitespace().collect();
                match fields.as_slice() {
                    ["p", "cnf", n, m] => {
                        let n = n.parse().map_err(|_| bad(line_no, "bad variable count"))?;
                        let m = m.parse().map_err(|_| bad(line_no, "bad clause count"))?;
                        header = Some((n, m));
                    }
                    _ => return Err(bad(line_no, "expected `p cnf <vars> <clauses>`")),
                }
                continue;
            }
            let (n, _) = header.ok_or_else(|| bad(line_no, "clause before header"))?;
            let values: Vec<i64> = line
                .split_whitespace()
                .map(|t| t.parse::<i64>().map_err(|_| bad(line_no, "non-integer literal")))
                .collect::<Result<_, _>>()?;
            if values.len() != 4 || values[3] != 0 {
                return Err(bad(line_no, "clause must be three literals followed by 0"));
            }
            let mut clause = [Literal::pos(1); 3];
            for (slot, &x) in clause.iter_mut().zip(&values[..3]) {
                if x == 0 {
                    return Err(bad(line_no, "literal 0 inside clause"));
                }
                let lit = Literal::from_dimacs(x);
                if lit.var > n {
                    return Err(bad(line_no, "variable exceeds header count"));
                }
                *slot = lit;
            }
            clauses.push(clause);
        }
        let (n, m) = header.ok_or(ReductionError::MalformedCnf {
            line: 0,
            message: "missing `p cnf` header".into(),
        })?;
        if clauses.len() != m {
            return Err(ReductionError::MalformedCnf {
                line: 0,
                message: format!("header declares {m} clauses, found {}", clauses.len()),
            });
        }
        Ok(Cnf::new(n, clauses))
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                let _ = write!(out, "{} ", lit.to_dimacs());
            }
            out.push_str("0\n");
        }
        out
    }

    /// Variables that occur in some clause.
    pub fn variables(&self) -> BTreeSet<usize> {
        self.clauses.iter().flatten().map(|l| l.var).collect()
    }

    /// Index of the first clause the assignment fails, if any. Unassigned
    /// variables count as false.
    pub fn first_unsatisfied(&self, assignment: &BTreeMap<usize, bool>) -> Option<usize> {
        self.clauses
            .iter()
            .position(|clause| !clause.iter().any(|l| l.holds(assignment) == Some(true)))
    }

    /// Pure-literal elimination to a fixpoint: drops every clause holding a
    /// literal whose negation occurs nowhere among the remaining clauses.
    pub fn normalized(&self) -> Cnf {
        let mut clauses = self.clauses.clone();
        loop {
            let literals: BTreeSet<Literal> = clauses.iter().flatten().copied().collect();
            let pure = |l: &Literal| {
                !literals.contains(&Literal {
                    var: l.var,
                    positive: !l.positive,
                })
            };
            let before = clauses.len();
            clauses.retain(|clause| !clause.iter().any(pure));
            if clauses.len() == before {
                break;
            }
        }
        Cnf::new(self.num_vars, clauses)
    }
}
