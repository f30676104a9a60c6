//! Dense two-phase simplex over exact rationals, Bland's rule throughout.
//!
//! Every variable of a [`Problem`] is free; internally each one is split into a
//! difference of two nonnegative variables.

use num_traits::{Signed, Zero};

use crate::geometry::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub(crate) struct Problem {
    num_vars: usize,
    objective: Vec<Rational>,
    rows: Vec<(Vec<Rational>, Relation, Rational)>,
}

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Outcome {
    Optimal { value: Rational, point: Vec<Rational> },
    Infeasible,
    Unbounded,
}

impl Problem {
    /// Maximize `objective · x` over free variables `x`.
    pub(crate) fn maximize(objective: Vec<Rational>) -> Self {
        Problem { num_vars: objective.len(), objective, rows: Vec::new() }
    }

    pub(crate) fn constrain(&mut self, coeffs: Vec<Rational>, rel: Relation, rhs: Rational) {
        debug_assert_eq!(coeffs.len(), self.num_vars);
        self.rows.push((coeffs, rel, rhs));
    }

    pub(crate) fn solve(&self) -> Outcome {
        let nv = 2 * self.num_vars;
        let split = |a: &[Rational]| -> Vec<Rational> {
            let mut out = Vec::with_capacity(nv);
            for v in a {
                out.push(v.clone());
                out.push(-v.clone());
            }
            out
        };

        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for (a, rel, b) in &self.rows {
            if matches!(rel, Relation::Le | Relation::Eq) {
                rows.push(split(a));
                rhs.push(b.clone());
            }
            if matches!(rel, Relation::Ge | Relation::Eq) {
                let neg: Vec<Rational> = a.iter().map(|v| -v.clone()).collect();
                rows.push(split(&neg));
                rhs.push(-b.clone());
            }
        }

        let mut tab = Tableau::with_slacks(nv, rows, rhs);
        if !tab.make_feasible() {
            return Outcome::Infeasible;
        }

        let mut cost = split(&self.objective);
        cost.resize(tab.num_cols(), Rational::zero());
        tab.set_objective(cost);
        if !tab.run() {
            return Outcome::Unbounded;
        }

        let y = tab.solution();
        let point = (0..self.num_vars).map(|i| &y[2 * i] - &y[2 * i + 1]).collect();
        Outcome::Optimal { value: tab.obj_value.clone(), point }
    }
}

/// Rows read `x_{basis[i]} + Σ_j rows[i][j] x_j = rhs[i]`; the objective is
/// `obj_value + Σ_j obj[j] x_j` over the nonbasic columns.
struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    obj: Vec<Rational>,
    obj_value: Rational,
}

impl Tableau {
    fn with_slacks(nv: usize, mut rows: Vec<Vec<Rational>>, rhs: Vec<Rational>) -> Self {
        let m = rows.len();
        for (i, row) in rows.iter_mut().enumerate() {
            row.resize(nv + m, Rational::zero());
            row[nv + i] = Rational::from_integer(1.into());
        }
        let basis = (nv..nv + m).collect();
        Tableau {
            rows,
            rhs,
            basis,
            obj: vec![Rational::zero(); nv + m],
            obj_value: Rational::zero(),
        }
    }

    fn num_cols(&self) -> usize {
        self.obj.len()
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v /= &p;
        }
        self.rhs[r] /= &p;

        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (v, pv) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
            self.rhs[i] -= &f * &pivot_rhs;
        }
        if !self.obj[c].is_zero() {
            let f = self.obj[c].clone();
            for (v, pv) in self.obj.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
            self.obj_value += &f * &pivot_rhs;
        }
        self.basis[r] = c;
    }

    /// Runs simplex iterations to optimality. Returns `false` when unbounded.
    fn run(&mut self) -> bool {
        loop {
            let Some(c) = self.obj.iter().position(|v| v.is_positive()) else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }

    /// Phase one. Returns `false` when the constraints are infeasible.
    fn make_feasible(&mut self) -> bool {
        let Some((worst, _)) = self
            .rhs
            .iter()
            .enumerate()
            .filter(|(_, b)| b.is_negative())
            .min_by(|a, b| a.1.cmp(b.1))
        else {
            return true;
        };

        let art = self.num_cols();
        let minus_one = -Rational::from_integer(1.into());
        for row in self.rows.iter_mut() {
            row.push(minus_one.clone());
        }
        self.obj = vec![Rational::zero(); art + 1];
        self.obj[art] = minus_one;
        self.obj_value = Rational::zero();

        self.pivot(worst, art);
        // the auxiliary objective is bounded above by zero
        self.run();
        if self.obj_value.is_negative() {
            return false;
        }

        if let Some(r) = self.basis.iter().position(|&b| b == art) {
            match (0..art).find(|&j| !self.rows[r][j].is_zero()) {
                Some(j) => self.pivot(r, j),
                None => {
                    self.rows.remove(r);
                    self.rhs.remove(r);
                    self.basis.remove(r);
                }
            }
        }
        for row in self.rows.iter_mut() {
            row.truncate(art);
        }
        self.obj.truncate(art);
        true
    }

    fn set_objective(&mut self, cost: Vec<Rational>) {
        self.obj = cost;
        self.obj_value = Rational::zero();
        for i in 0..self.rows.len() {
            let b = self.basis[i];
            if self.obj[b].is_zero() {
                continue;
            }
            let f = self.obj[b].clone();
            for (v, rv) in self.obj.iter_mut().zip(&self.rows[i]) {
                if !rv.is_zero() {
                    *v -= &f * rv;
                }
            }
            self.obj_value += &f * &self.rhs[i];
        }
    }

    fn solution(&self) -> Vec<Rational> {
        let mut y = vec![Rational::zero(); self.num_cols()];
        for (i, &b) in self.basis.iter().enumerate() {
            y[b] = self.rhs[i].clone();
        }
        y
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn simple_maximum() {
        // max x + y, x + 2y <= 4, 3x + y <= 6, x >= 0, y >= 0 -> (8/5, 6/5)
        let mut p = Problem::maximize(vec![r(1), r(1)]);
        p.constrain(vec![r(1), r(2)], Relation::Le, r(4));
        p.constrain(vec![r(3), r(1)], Relation::Le, r(6));
        p.constrain(vec![r(1), r(0)], Relation::Ge, r(0));
        p.constrain(vec![r(0), r(1)], Relation::Ge, r(0));
        match p.solve() {
            Outcome::Optimal { value, point } => {
                assert_eq!(value, Rational::new(14.into(), 5.into()));
                assert_eq!(point, vec![Rational::new(8.into(), 5.into()), Rational::new(6.into(), 5.into())]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut p = Problem::maximize(vec![r(1)]);
        p.constrain(vec![r(1)], Relation::Ge, r(2));
        p.constrain(vec![r(1)], Relation::Le, r(1));
        assert_eq!(p.solve(), Outcome::Infeasible);

        let mut p = Problem::maximize(vec![r(1)]);
        p.constrain(vec![r(1)], Relation::Ge, r(2));
        assert_eq!(p.solve(), Outcome::Unbounded);
    }

    #[test]
    fn equalities_with_negative_rhs() {
        // max -x - y subject to x + y = -3, x - y = 1 -> (-1, -2)
        let mut p = Problem::maximize(vec![r(-1), r(-1)]);
        p.constrain(vec![r(1), r(1)], Relation::Eq, r(-3));
        p.constrain(vec![r(1), r(-1)], Relation::Eq, r(1));
        match p.solve() {
            Outcome::Optimal { value, point } => {
                assert_eq!(value, r(3));
                assert_eq!(point, vec![r(-1), r(-2)]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
