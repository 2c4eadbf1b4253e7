//! Exact feasibility of small mixed systems of linear equalities and (strict or weak)
//! inequalities, by substitution followed by Fourier–Motzkin elimination.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::linalg::Rational;

/// `coeffs · x ≥ rhs`, or `> rhs` when `strict`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Inequality {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
    pub strict: bool,
}

impl Inequality {
    pub fn new(coeffs: Vec<Rational>, rhs: Rational, strict: bool) -> Self {
        Self {
            coeffs,
            rhs,
            strict,
        }
    }

    fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn holds_trivially(&self) -> bool {
        if self.strict {
            self.rhs.is_negative()
        } else {
            !self.rhs.is_positive()
        }
    }

    /// Scale so that the first nonzero coefficient has magnitude one.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for c in self.coeffs.iter_mut() {
                *c = &*c / &lead;
            }
            self.rhs = &self.rhs / &lead;
        }
        self
    }
}

/// Equalities are `coeffs · x = rhs`.
pub(crate) fn is_feasible(
    dim: usize,
    equalities: &[(Vec<Rational>, Rational)],
    inequalities: &[Inequality],
) -> bool {
    let mut eqs: Vec<(Vec<Rational>, Rational)> = equalities.to_vec();
    let mut ineqs: Vec<Inequality> = inequalities.to_vec();

    while let Some((coeffs, rhs)) = eqs.pop() {
        let Some(var) = (0..dim).find(|&j| !coeffs[j].is_zero()) else {
            if !rhs.is_zero() {
                return false;
            }
            continue;
        };
        // x_var = (rhs - Σ_{j≠var} c_j x_j) / c_var
        let pivot = coeffs[var].clone();
        let eliminate = |row: &mut Vec<Rational>, row_rhs: &mut Rational| {
            let factor = &row[var] / &pivot;
            if factor.is_zero() {
                return;
            }
            for j in 0..dim {
                let delta = &factor * &coeffs[j];
                row[j] -= delta;
            }
            *row_rhs -= &factor * &rhs;
        };
        for (row, row_rhs) in eqs.iter_mut() {
            eliminate(row, row_rhs);
        }
        for ineq in ineqs.iter_mut() {
            eliminate(&mut ineq.coeffs, &mut ineq.rhs);
        }
    }

    for var in 0..dim {
        ineqs = prune(ineqs);
        if ineqs.iter().any(|q| q.is_trivial() && !q.holds_trivially()) {
            return false;
        }
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for q in ineqs {
            if q.coeffs[var].is_positive() {
                pos.push(q);
            } else if q.coeffs[var].is_negative() {
                neg.push(q);
            } else {
                rest.push(q);
            }
        }
        for p in &pos {
            for n in &neg {
                let a = p.coeffs[var].clone();
                let b = -n.coeffs[var].clone();
                let coeffs: Vec<BigRational> = p
                    .coeffs
                    .iter()
                    .zip(&n.coeffs)
                    .map(|(x, y)| &b * x + &a * y)
                    .collect();
                let rhs = &b * &p.rhs + &a * &n.rhs;
                rest.push(Inequality::new(coeffs, rhs, p.strict || n.strict));
            }
        }
        ineqs = rest;
    }
    ineqs.iter().all(Inequality::holds_trivially)
}

fn prune(ineqs: Vec<Inequality>) -> Vec<Inequality> {
    let mut out: Vec<Inequality> = Vec::with_capacity(ineqs.len());
    for q in ineqs.into_iter().map(Inequality::normalized) {
        if q.is_trivial() && q.holds_trivially() {
            continue;
        }
        // Same left-hand side: keep only the tightest bound.
        if let Some(existing) = out.iter_mut().find(|e| e.coeffs == q.coeffs) {
            if q.rhs > existing.rhs || (q.rhs == existing.rhs && q.strict) {
                *existing = q;
            }
            continue;
        }
        out.push(q);
    }
    out
}
