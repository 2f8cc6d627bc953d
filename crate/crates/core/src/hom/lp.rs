//! Exact rational linear programming.
//!
//! Two-phase revised simplex with an explicit basis inverse. All arithmetic
//! is exact: rows are scaled to integers, and the inverse is stored
//! fraction-free as `adj = det(B) * B^-1` together with `det(B)`, updated by
//! exact integer division after each pivot.
//!
//! Entering columns follow the most negative reduced cost. After a run of
//! degenerate pivots the solver switches to Bland's rule (lowest-index
//! entering column, lowest-index leaving basic variable on ratio ties) until
//! the objective moves again. A cycle would have to stay inside one
//! degenerate run, where Bland's rule forbids it, so the method terminates.
//!
//! Problems are `minimize c.x` subject to rows `a.x {>=,<=,=} b`, `x >= 0`.
//! Each row gets a slack or surplus column, rows with negative right-hand
//! side are negated, and phase one starts from an artificial identity basis.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Ge,
    Le,
    Eq,
}

#[derive(Clone, Debug)]
struct Row {
    coeffs: Vec<(usize, Rational)>,
    relation: Relation,
    rhs: Rational,
}

#[derive(Clone, Debug)]
pub struct LinearProgram {
    num_vars: usize,
    cost: Vec<Rational>,
    rows: Vec<Row>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution {
    pub value: Rational,
    pub x: Vec<Rational>,
    /// One multiplier per row, with the sign convention of the dual of a
    /// minimization: nonnegative for `>=` rows, nonpositive for `<=` rows.
    pub duals: Vec<Rational>,
    pub pivots: usize,
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            cost: vec![Rational::zero(); num_vars],
            rows: Vec::new(),
        }
    }

    pub fn set_cost(&mut self, var: usize, c: Rational) {
        self.cost[var] = c;
    }

    pub fn add_constraint(&mut self, coeffs: Vec<(usize, Rational)>, relation: Relation, rhs: Rational) {
        debug_assert!(coeffs.iter().all(|&(j, _)| j < self.num_vars));
        self.rows.push(Row { coeffs, relation, rhs });
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn solve(&self) -> Result<LpSolution> {
        Tableau::build(self).solve(self)
    }
}

/// Consecutive degenerate pivots tolerated before switching to Bland's rule.
const DEGENERATE_RUN: usize = 64;

fn lcm_of_denoms<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

fn scale_to_int(v: &Rational, by: &BigInt) -> BigInt {
    (v * by).to_integer()
}

struct Tableau {
    m: usize,
    /// Integer column data after row scaling.
    columns: Vec<Vec<(usize, BigInt)>>,
    /// Columns at or beyond this index are artificial.
    first_artificial: usize,
    /// Positive or negative integer that each original row was multiplied by.
    row_scale: Vec<BigInt>,
    basis: Vec<usize>,
    in_basis: Vec<bool>,
    /// `det * B^-1`, integral.
    adj: Vec<Vec<BigInt>>,
    /// `det * x_B`, integral.
    xb: Vec<BigInt>,
    /// Positive basis determinant (up to sign).
    det: BigInt,
    pivots: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Self {
        let m = lp.rows.len();
        let mut columns: Vec<Vec<(usize, BigInt)>> = vec![Vec::new(); lp.num_vars];
        let mut row_scale = Vec::with_capacity(m);
        let mut xb = Vec::with_capacity(m);
        for (i, row) in lp.rows.iter().enumerate() {
            let mut scale = lcm_of_denoms(row.coeffs.iter().map(|(_, a)| a).chain([&row.rhs]));
            if row.rhs.is_negative() {
                scale = -scale;
            }
            for (j, a) in &row.coeffs {
                if !a.is_zero() {
                    columns[*j].push((i, scale_to_int(a, &scale)));
                }
            }
            xb.push(scale_to_int(&row.rhs, &scale));
            row_scale.push(scale);
        }
        for (i, row) in lp.rows.iter().enumerate() {
            let coef = match row.relation {
                Relation::Ge => -BigInt::one(),
                Relation::Le => BigInt::one(),
                Relation::Eq => continue,
            };
            columns.push(vec![(i, coef * &row_scale[i])]);
        }
        let first_artificial = columns.len();
        for i in 0..m {
            columns.push(vec![(i, BigInt::one())]);
        }
        let mut in_basis = vec![false; columns.len()];
        let basis: Vec<usize> = (first_artificial..first_artificial + m).collect();
        for &b in &basis {
            in_basis[b] = true;
        }
        let adj = (0..m)
            .map(|i| (0..m).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
        Tableau {
            m,
            columns,
            first_artificial,
            row_scale,
            basis,
            in_basis,
            adj,
            xb,
            det: BigInt::one(),
            pivots: 0,
        }
    }

    /// `det * lcm * c_B B^-1` for integer-scaled costs `cost`.
    fn scaled_duals(&self, cost: &[BigInt]) -> Vec<BigInt> {
        let mut y = vec![BigInt::zero(); self.m];
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for (yj, a) in y.iter_mut().zip(&self.adj[i]) {
                if !a.is_zero() {
                    *yj += cb * a;
                }
            }
        }
        y
    }

    /// `det * B^-1 a_col`.
    fn column_image(&self, col: usize) -> Vec<BigInt> {
        (0..self.m).map(|i| self.row_entry(i, col)).collect()
    }

    fn row_entry(&self, i: usize, col: usize) -> BigInt {
        self.columns[col].iter().fold(BigInt::zero(), |acc, (r, a)| {
            let e = &self.adj[i][*r];
            if e.is_zero() {
                acc
            } else {
                acc + e * a
            }
        })
    }

    fn pivot(&mut self, r: usize, col: usize, d: &[BigInt]) {
        let p = d[r].clone();
        debug_assert!(!p.is_zero());
        let pivot_row = self.adj[r].clone();
        let pivot_x = self.xb[r].clone();
        for i in 0..self.m {
            if i == r {
                continue;
            }
            let f = &d[i];
            for (v, pr) in self.adj[i].iter_mut().zip(&pivot_row) {
                let t = &*v * &p - f * pr;
                *v = exact_div(t, &self.det);
            }
            let t = &self.xb[i] * &p - f * &pivot_x;
            self.xb[i] = exact_div(t, &self.det);
        }
        // keep the stored determinant positive
        if p.is_negative() {
            for row in &mut self.adj {
                row.iter_mut().for_each(|v| *v = -&*v);
            }
            self.xb.iter_mut().for_each(|v| *v = -&*v);
            self.det = -p;
        } else {
            self.det = p;
        }
        self.in_basis[self.basis[r]] = false;
        self.in_basis[col] = true;
        self.basis[r] = col;
        self.pivots += 1;
    }

    /// Runs simplex iterations for `cost` until optimal. Columns for which
    /// `allowed` is false never enter.
    fn optimize(&mut self, cost: &[Rational], allowed: impl Fn(usize) -> bool) -> Result<()> {
        let lcm = lcm_of_denoms(cost);
        let cost: Vec<BigInt> = cost.iter().map(|c| scale_to_int(c, &lcm)).collect();
        let mut degenerate_run = 0usize;
        loop {
            let bland = degenerate_run >= DEGENERATE_RUN;
            let y = self.scaled_duals(&cost);
            let Some(col) = self.choose_entering(&cost, &y, &allowed, bland) else {
                return Ok(());
            };
            let d = self.column_image(col);
            let mut leave: Option<usize> = None;
            for i in 0..self.m {
                if !d[i].is_positive() {
                    continue;
                }
                let better = match leave {
                    None => true,
                    Some(l) => {
                        // xb[i]/d[i] vs xb[l]/d[l], both denominators positive
                        let lhs = &self.xb[i] * &d[l];
                        let rhs = &self.xb[l] * &d[i];
                        lhs < rhs || (lhs == rhs && self.basis[i] < self.basis[l])
                    }
                };
                if better {
                    leave = Some(i);
                }
            }
            let Some(r) = leave else {
                return Err(Error::Unbounded);
            };
            if self.xb[r].is_zero() {
                degenerate_run += 1;
            } else {
                degenerate_run = 0;
            }
            self.pivot(r, col, &d);
        }
    }

    /// Sign-correct reduced costs, scaled by the positive factor
    /// `det * lcm`. Uses `i128` when everything fits, `BigInt` otherwise.
    fn choose_entering(
        &self,
        cost: &[BigInt],
        y: &[BigInt],
        allowed: &impl Fn(usize) -> bool,
        bland: bool,
    ) -> Option<usize> {
        let small_y: Option<Vec<i128>> = y.iter().map(ToPrimitive::to_i128).collect();
        let small_det = self.det.to_i128();
        let mut best: Option<(usize, BigInt)> = None;
        for j in 0..self.columns.len() {
            if self.in_basis[j] || !allowed(j) {
                continue;
            }
            let fast = match (&small_y, small_det, cost[j].to_i128()) {
                (Some(ys), Some(det), Some(c)) => reduced_small(c, det, ys, &self.columns[j]),
                _ => None,
            };
            let rc = match fast {
                Some(v) => BigInt::from(v),
                None => self.columns[j]
                    .iter()
                    .fold(&cost[j] * &self.det, |acc, (r, a)| acc - &y[*r] * a),
            };
            if !rc.is_negative() {
                continue;
            }
            if bland {
                return Some(j);
            }
            if best.as_ref().map_or(true, |(_, b)| rc < *b) {
                best = Some((j, rc));
            }
        }
        best.map(|(j, _)| j)
    }

    fn solve(mut self, lp: &LinearProgram) -> Result<LpSolution> {
        let ncols = self.columns.len();
        let phase1: Vec<Rational> = (0..ncols)
            .map(|j| if j >= self.first_artificial { Rational::one() } else { Rational::zero() })
            .collect();
        self.optimize(&phase1, |_| true)?;
        let infeasible = self
            .basis
            .iter()
            .zip(&self.xb)
            .any(|(&b, x)| b >= self.first_artificial && !x.is_zero());
        if infeasible {
            return Err(Error::Infeasible("linear program has no feasible point".into()));
        }
        // Drive zero-level artificials out of the basis where possible; rows
        // where no real column can replace them are redundant and inert.
        for r in 0..self.m {
            if self.basis[r] < self.first_artificial {
                continue;
            }
            let replacement =
                (0..self.first_artificial).find(|&j| !self.in_basis[j] && !self.row_entry(r, j).is_zero());
            if let Some(j) = replacement {
                let d = self.column_image(j);
                self.pivot(r, j, &d);
            }
        }

        let mut phase2 = vec![Rational::zero(); ncols];
        phase2[..lp.num_vars].clone_from_slice(&lp.cost);
        let first_artificial = self.first_artificial;
        self.optimize(&phase2, |j| j < first_artificial)?;

        let det = Rational::from_integer(self.det.clone());
        let mut x = vec![Rational::zero(); lp.num_vars];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < lp.num_vars {
                x[b] = Rational::from_integer(self.xb[i].clone()) / &det;
            }
        }
        let value = x
            .iter()
            .zip(&lp.cost)
            .fold(Rational::zero(), |acc, (xi, ci)| acc + xi * ci);
        let lcm = lcm_of_denoms(&phase2);
        let int_cost: Vec<BigInt> = phase2.iter().map(|c| scale_to_int(c, &lcm)).collect();
        let scale = &det * Rational::from_integer(lcm);
        let duals = self
            .scaled_duals(&int_cost)
            .into_iter()
            .zip(&self.row_scale)
            .map(|(y, s)| Rational::from_integer(y * s) / &scale)
            .collect();
        Ok(LpSolution {
            value,
            x,
            duals,
            pivots: self.pivots,
        })
    }
}

fn exact_div(t: BigInt, det: &BigInt) -> BigInt {
    debug_assert!((&t % det).is_zero(), "fraction-free update must divide exactly");
    t / det
}

fn reduced_small(c: i128, det: i128, ys: &[i128], col: &[(usize, BigInt)]) -> Option<i128> {
    col.iter().try_fold(c.checked_mul(det)?, |acc, (r, a)| {
        acc.checked_sub(ys[*r].checked_mul(a.to_i128()?)?)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{integer, ratio};

    fn q(n: i64) -> Rational {
        integer(n)
    }

    #[test]
    fn textbook_maximization() {
        // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18  ->  36 at (2, 6)
        let mut lp = LinearProgram::new(2);
        lp.set_cost(0, q(-3));
        lp.set_cost(1, q(-5));
        lp.add_constraint(vec![(0, q(1))], Relation::Le, q(4));
        lp.add_constraint(vec![(1, q(2))], Relation::Le, q(12));
        lp.add_constraint(vec![(0, q(3)), (1, q(2))], Relation::Le, q(18));
        let s = lp.solve().unwrap();
        assert_eq!(s.value, q(-36));
        assert_eq!(s.x, vec![q(2), q(6)]);
        // duals of the maximization are (0, 3/2, 1); here with min signs
        assert_eq!(s.duals, vec![q(0), ratio(-3, 2), q(-1)]);
    }

    #[test]
    fn covering_with_fractional_optimum() {
        // min a + b + c s.t. a + b >= 1, b + c >= 1, a + c >= 1 -> 3/2
        let mut lp = LinearProgram::new(3);
        for j in 0..3 {
            lp.set_cost(j, q(1));
        }
        for (u, v) in [(0, 1), (1, 2), (0, 2)] {
            lp.add_constraint(vec![(u, q(1)), (v, q(1))], Relation::Ge, q(1));
        }
        let s = lp.solve().unwrap();
        assert_eq!(s.value, ratio(3, 2));
        assert_eq!(s.duals, vec![ratio(1, 2); 3]);
    }

    #[test]
    fn equality_negative_rhs_and_redundant_rows() {
        // min x + y s.t. -x - y = -2, x + y = 2, x - y >= 0 -> 2
        let mut lp = LinearProgram::new(2);
        lp.set_cost(0, q(1));
        lp.set_cost(1, q(1));
        lp.add_constraint(vec![(0, q(-1)), (1, q(-1))], Relation::Eq, q(-2));
        lp.add_constraint(vec![(0, q(1)), (1, q(1))], Relation::Eq, q(2));
        lp.add_constraint(vec![(0, q(1)), (1, q(-1))], Relation::Ge, q(0));
        let s = lp.solve().unwrap();
        assert_eq!(s.value, q(2));
        assert_eq!(&s.x[0] + &s.x[1], q(2));
        assert!(s.x[0] >= s.x[1]);
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut lp = LinearProgram::new(1);
        lp.add_constraint(vec![(0, q(1))], Relation::Le, q(1));
        lp.add_constraint(vec![(0, q(1))], Relation::Ge, q(2));
        assert!(matches!(lp.solve(), Err(Error::Infeasible(_))));

        let mut lp = LinearProgram::new(1);
        lp.set_cost(0, q(-1));
        lp.add_constraint(vec![(0, q(1))], Relation::Ge, q(1));
        assert!(matches!(lp.solve(), Err(Error::Unbounded)));
    }
}
