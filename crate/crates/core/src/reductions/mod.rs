//! Encoders turning combinatorial problems (Partition, boolean constraint
//! systems, 3-CNF) into homogeneous polynomial systems, together with the
//! combinatorial brute-force deciders that serve as ground truth when the
//! encodings are verified.

pub mod boolsys;
pub mod fixtures;
pub mod hn;
pub mod partition;
pub mod plaisted;

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EncodeError {
    #[error("instance is invalid: {0}")]
    InvalidInstance(String),
    #[error("desk-scale exceeded: modulus {modulus} is above the configured cap {cap}")]
    DeskScaleExceeded { modulus: BigUint, cap: u64 },
    #[error("this encoder supports characteristic 0 only")]
    PositiveCharacteristic,
    #[error("exponent does not fit the dense polynomial representation")]
    ExponentOverflow,
}

/// A Partition instance: non-negative integer weights, at least one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionInstance {
    weights: Vec<u64>,
}

impl PartitionInstance {
    pub fn new(weights: Vec<u64>) -> Result<PartitionInstance, EncodeError> {
        if weights.is_empty() {
            return Err(EncodeError::InvalidInstance(
                "a Partition instance needs at least one weight".into(),
            ));
        }
        Ok(PartitionInstance { weights })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        false // constructor guarantees at least one weight
    }

    /// Subset-sum dynamic program: can the weights be split into two halves
    /// of equal sum? Independent of any polynomial encoding.
    pub fn feasible_by_dp(&self) -> bool {
        let total: u64 = self.weights.iter().sum();
        if total % 2 != 0 {
            return false;
        }
        let target = (total / 2) as usize;
        let mut reachable = vec![false; target + 1];
        reachable[0] = true;
        for &w in &self.weights {
            let w = w as usize;
            if w > target {
                continue;
            }
            for s in (w..=target).rev() {
                if reachable[s - w] {
                    reachable[s] = true;
                }
            }
        }
        reachable[target]
    }

    /// Brute-force witness: a sign vector s with sum(s_i * w_i) = 0, if any.
    pub fn sign_witness(&self) -> Option<Vec<i8>> {
        let n = self.weights.len();
        assert!(n <= 24, "sign witness search is desk-scale only");
        for mask in 0u32..1 << n {
            let sum: i128 = self
                .weights
                .iter()
                .enumerate()
                .map(|(i, &w)| {
                    if mask >> i & 1 == 1 {
                        -(w as i128)
                    } else {
                        w as i128
                    }
                })
                .sum();
            if sum == 0 {
                return Some(
                    (0..n)
                        .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                        .collect(),
                );
            }
        }
        None
    }
}

/// One equation of a boolean constraint system. Variable indices are
/// 1-based, matching the usual X_1, ..., X_n naming.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BoolEquation {
    /// X_i = true
    IsTrue(usize),
    /// X_i = not X_j
    Negation(usize, usize),
    /// X_i = X_j or X_k
    Disjunction(usize, usize, usize),
}

impl BoolEquation {
    fn max_index(&self) -> usize {
        match *self {
            BoolEquation::IsTrue(i) => i,
            BoolEquation::Negation(i, j) => i.max(j),
            BoolEquation::Disjunction(i, j, k) => i.max(j).max(k),
        }
    }

    fn min_index(&self) -> usize {
        match *self {
            BoolEquation::IsTrue(i) => i,
            BoolEquation::Negation(i, j) => i.min(j),
            BoolEquation::Disjunction(i, j, k) => i.min(j).min(k),
        }
    }

    /// Is the equation satisfied under the assignment (index 0 unused)?
    pub fn holds(&self, assignment: &[bool]) -> bool {
        match *self {
            BoolEquation::IsTrue(i) => assignment[i],
            BoolEquation::Negation(i, j) => assignment[i] == !assignment[j],
            BoolEquation::Disjunction(i, j, k) => {
                assignment[i] == (assignment[j] || assignment[k])
            }
        }
    }
}

/// A boolean constraint system in the three permitted equation forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoolsysInstance {
    num_vars: usize,
    equations: Vec<BoolEquation>,
}

impl BoolsysInstance {
    pub fn new(
        num_vars: usize,
        equations: Vec<BoolEquation>,
    ) -> Result<BoolsysInstance, EncodeError> {
        if equations.is_empty() {
            return Err(EncodeError::InvalidInstance(
                "a Boolsys instance needs at least one equation".into(),
            ));
        }
        for eq in &equations {
            if eq.min_index() < 1 || eq.max_index() > num_vars {
                return Err(EncodeError::InvalidInstance(format!(
                    "equation {eq:?} references a variable outside 1..={num_vars}"
                )));
            }
        }
        Ok(BoolsysInstance {
            num_vars,
            equations,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn equations(&self) -> &[BoolEquation] {
        &self.equations
    }

    /// Exhaustive satisfiability over all 2^n assignments.
    pub fn brute_force_satisfiable(&self) -> bool {
        self.satisfying_assignment().is_some()
    }

    pub fn satisfying_assignment(&self) -> Option<Vec<bool>> {
        assert!(self.num_vars <= 24, "brute force is desk-scale only");
        for mask in 0u32..1 << self.num_vars {
            let assignment: Vec<bool> = std::iter::once(false)
                .chain((0..self.num_vars).map(|i| mask >> i & 1 == 1))
                .collect();
            if self.equations.iter().all(|eq| eq.holds(&assignment)) {
                return Some(assignment[1..].to_vec());
            }
        }
        None
    }
}

/// A CNF formula with clauses of at most three literals. Literals are
/// signed 1-based indices, DIMACS style.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<CnfFormula, EncodeError> {
        for clause in &clauses {
            if clause.is_empty() {
                return Err(EncodeError::InvalidInstance("empty clause".into()));
            }
            if clause.len() > 3 {
                return Err(EncodeError::InvalidInstance(format!(
                    "clause {clause:?} has more than three literals"
                )));
            }
            for &lit in clause {
                let var = lit.unsigned_abs() as usize;
                if lit == 0 || var > num_vars {
                    return Err(EncodeError::InvalidInstance(format!(
                        "literal {lit} out of range for {num_vars} variables"
                    )));
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|clause| {
            clause.iter().any(|&lit| {
                let value = assignment[lit.unsigned_abs() as usize - 1];
                if lit > 0 {
                    value
                } else {
                    !value
                }
            })
        })
    }

    /// Exhaustive satisfiability over all 2^n assignments.
    pub fn brute_force_satisfiable(&self) -> bool {
        assert!(self.num_vars <= 24, "brute force is desk-scale only");
        (0u32..1 << self.num_vars).any(|mask| {
            let assignment: Vec<bool> =
                (0..self.num_vars).map(|i| mask >> i & 1 == 1).collect();
            self.evaluate(&assignment)
        })
    }
}
