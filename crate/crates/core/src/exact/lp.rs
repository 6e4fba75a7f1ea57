//! Exact rational linear programming in equality form.
//!
//! Two-phase dense simplex with Bland's rule, so termination is guaranteed
//! and no floating point is involved anywhere. Infeasibility is returned as
//! a Farkas certificate that re-verifies by substitution.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::mat::QMat;
use crate::exact::rat::Rat;

/// Outcome of `lp_feasible`: a nonnegative witness of `A x = b`, or a
/// separating functional `y` with `y^T A >= 0` and `y^T b < 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    Feasible { witness: Vec<Rat> },
    Infeasible { certificate: Vec<Rat> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { x: Vec<Rat>, value: Rat },
    Infeasible { certificate: Vec<Rat> },
    Unbounded,
}

struct Tableau {
    rows: usize,
    n: usize,     // original variable count
    total: usize, // originals + artificials
    t: Vec<Vec<Rat>>,
    basis: Vec<usize>,
}

impl Tableau {
    /// Builds the phase-1 tableau for `A x = b`, flipping rows so the right
    /// hand side is nonnegative. Returns the tableau and the row signs.
    fn new(a: &QMat, b: &[Rat]) -> (Tableau, Vec<i32>) {
        let rows = a.rows();
        let n = a.cols();
        let mut flips = vec![1i32; rows];
        let mut t = Vec::with_capacity(rows);
        for i in 0..rows {
            let neg = b[i].is_negative();
            if neg {
                flips[i] = -1;
            }
            let mut row: Vec<Rat> = a
                .row(i)
                .iter()
                .map(|x| if neg { -x.clone() } else { x.clone() })
                .collect();
            for j in 0..rows {
                row.push(if i == j { Rat::one() } else { Rat::zero() });
            }
            row.push(if neg { -b[i].clone() } else { b[i].clone() });
            t.push(row);
        }
        let basis = (n..n + rows).collect();
        (
            Tableau {
                rows,
                n,
                total: n + rows,
                t,
                basis,
            },
            flips,
        )
    }

    fn rhs(&self, i: usize) -> &Rat {
        &self.t[i][self.total]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.t[row][col].clone();
        for v in self.t[row].iter_mut() {
            *v = &*v / &inv;
        }
        for i in 0..self.rows {
            if i != row && !self.t[i][col].is_zero() {
                let f = self.t[i][col].clone();
                for j in 0..=self.total {
                    let delta = &f * &self.t[row][j];
                    self.t[i][j] = &self.t[i][j] - &delta;
                }
            }
        }
        self.basis[row] = col;
    }

    /// Simplex multipliers y = c_B B^{-1} recovered from reduced costs of
    /// the artificial (identity) columns.
    fn multipliers(&self, cost: &[Rat]) -> Vec<Rat> {
        (0..self.rows)
            .map(|i| {
                let col = self.n + i;
                let mut y = Rat::zero();
                for (r, &bv) in self.basis.iter().enumerate() {
                    y += &cost[bv] * &self.t[r][col];
                }
                y
            })
            .collect()
    }

    fn reduced_cost(&self, cost: &[Rat], j: usize) -> Rat {
        let mut r = cost[j].clone();
        for (i, &bv) in self.basis.iter().enumerate() {
            if !cost[bv].is_zero() {
                r -= &cost[bv] * &self.t[i][j];
            }
        }
        r
    }

    /// Minimize cost over the current tableau with Bland's rule. `allowed`
    /// limits the entering columns. Returns false if unbounded.
    fn run(&mut self, cost: &[Rat], allowed: usize) -> bool {
        loop {
            let entering = (0..allowed)
                .find(|&j| !self.basis.contains(&j) && self.reduced_cost(cost, j).is_negative());
            let Some(col) = entering else {
                return true;
            };
            let mut best: Option<(usize, Rat)> = None;
            for i in 0..self.rows {
                if self.t[i][col].is_positive() {
                    let ratio = self.rhs(i) / &self.t[i][col];
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => {
                            ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                        }
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            let Some((row, _)) = best else {
                return false;
            };
            self.pivot(row, col);
        }
    }

    fn objective(&self, cost: &[Rat]) -> Rat {
        self.basis
            .iter()
            .enumerate()
            .map(|(i, &bv)| &cost[bv] * self.rhs(i))
            .fold(Rat::zero(), |a, t| a + t)
    }

    fn solution(&self) -> Vec<Rat> {
        let mut x = vec![Rat::zero(); self.n];
        for (i, &bv) in self.basis.iter().enumerate() {
            if bv < self.n {
                x[bv] = self.rhs(i).clone();
            }
        }
        x
    }
}

/// Exact minimization of `c . x` subject to `A x = b`, `x >= 0`.
pub fn simplex_minimize(a: &QMat, b: &[Rat], c: &[Rat]) -> Result<LpOutcome> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            got: b.len(),
        });
    }
    if c.len() != a.cols() {
        return Err(Error::DimensionMismatch {
            expected: a.cols(),
            got: c.len(),
        });
    }
    let (mut tab, flips) = Tableau::new(a, b);
    let mut phase1 = vec![Rat::zero(); tab.total + 1];
    for j in tab.n..tab.total {
        phase1[j] = Rat::one();
    }
    let ok = tab.run(&phase1, tab.total);
    debug_assert!(ok, "phase 1 is always bounded below by zero");
    if tab.objective(&phase1).is_positive() {
        let y = tab.multipliers(&phase1);
        // Map back through the row flips and negate so the certificate
        // satisfies cert^T A >= 0 and cert^T b < 0.
        let certificate: Vec<Rat> = y
            .iter()
            .zip(&flips)
            .map(|(yi, &s)| if s < 0 { yi.clone() } else { -yi.clone() })
            .collect();
        debug_assert!(verify_farkas(a, b, &certificate));
        return Ok(LpOutcome::Infeasible { certificate });
    }
    // Drive artificials out of the basis; drop redundant rows.
    let mut drop_rows = Vec::new();
    for i in 0..tab.rows {
        if tab.basis[i] >= tab.n {
            debug_assert!(tab.rhs(i).is_zero(), "basic artificial at nonzero level");
            match (0..tab.n).find(|&j| !tab.t[i][j].is_zero()) {
                Some(j) => tab.pivot(i, j),
                None => drop_rows.push(i),
            }
        }
    }
    for &i in drop_rows.iter().rev() {
        tab.t.remove(i);
        tab.basis.remove(i);
        tab.rows -= 1;
    }
    let mut phase2 = c.to_vec();
    phase2.extend(std::iter::repeat_with(Rat::zero).take(tab.total - tab.n + 1));
    if !tab.run(&phase2, tab.n) {
        return Ok(LpOutcome::Unbounded);
    }
    let x = tab.solution();
    let value = tab.objective(&phase2);
    Ok(LpOutcome::Optimal { x, value })
}

/// Decision procedure: does `A x = b` admit `x >= 0`?
pub fn lp_feasible(a: &QMat, b: &[Rat]) -> Result<Feasibility> {
    let zero_cost = vec![Rat::zero(); a.cols()];
    match simplex_minimize(a, b, &zero_cost)? {
        LpOutcome::Optimal { x, .. } => {
            debug_assert!(verify_witness(a, b, &x));
            Ok(Feasibility::Feasible { witness: x })
        }
        LpOutcome::Infeasible { certificate } => Ok(Feasibility::Infeasible { certificate }),
        LpOutcome::Unbounded => unreachable!("zero objective cannot be unbounded"),
    }
}

/// Exact re-verification of a feasibility witness.
pub fn verify_witness(a: &QMat, b: &[Rat], x: &[Rat]) -> bool {
    x.len() == a.cols()
        && x.iter().all(|v| !v.is_negative())
        && a.apply(x) == b
}

/// Exact re-verification of a Farkas certificate: y^T A >= 0 and y^T b < 0.
pub fn verify_farkas(a: &QMat, b: &[Rat], y: &[Rat]) -> bool {
    if y.len() != a.rows() {
        return false;
    }
    for j in 0..a.cols() {
        let mut dot = Rat::zero();
        for i in 0..a.rows() {
            dot += &y[i] * a.at(i, j);
        }
        if dot.is_negative() {
            return false;
        }
    }
    let mut dot = Rat::zero();
    for i in 0..a.rows() {
        dot += &y[i] * &b[i];
    }
    dot.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::rat;

    fn qmat(rows: &[&[i64]]) -> QMat {
        let r = rows.len();
        let c = rows[0].len();
        QMat::new(
            r,
            c,
            rows.iter().flat_map(|row| row.iter().map(|&v| rat(v))).collect(),
        )
    }

    #[test]
    fn feasible_singleton() {
        let a = qmat(&[&[1]]);
        match lp_feasible(&a, &[rat(1)]).unwrap() {
            Feasibility::Feasible { witness } => assert_eq!(witness, vec![rat(1)]),
            other => panic!("expected feasible, got {other:?}"),
        }
    }

    #[test]
    fn infeasible_negative_target() {
        let a = qmat(&[&[1]]);
        let b = [rat(-1)];
        match lp_feasible(&a, &b).unwrap() {
            Feasibility::Infeasible { certificate } => {
                assert!(verify_farkas(&a, &b, &certificate));
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn zero_is_a_cone_member() {
        let a = qmat(&[&[1, -1]]);
        match lp_feasible(&a, &[rat(0)]).unwrap() {
            Feasibility::Feasible { witness } => {
                assert!(verify_witness(&a, &[rat(0)], &witness));
            }
            other => panic!("expected feasible, got {other:?}"),
        }
    }

    #[test]
    fn minimization_reaches_vertex() {
        // min x + y s.t. x + y + s = 2, x - y = 0  => x = y = 0 via slack
        let a = qmat(&[&[1, 1, 1], &[1, -1, 0]]);
        let b = [rat(2), rat(0)];
        let c = [rat(1), rat(1), rat(0)];
        match simplex_minimize(&a, &b, &c).unwrap() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(0)),
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn unbounded_direction_detected() {
        // min -x s.t. x - y = 1: x can grow with y
        let a = qmat(&[&[1, -1]]);
        let b = [rat(1)];
        let c = [rat(-1), rat(0)];
        assert_eq!(simplex_minimize(&a, &b, &c).unwrap(), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_rows_are_dropped() {
        let a = qmat(&[&[1, 1], &[2, 2]]);
        let b = [rat(1), rat(2)];
        match lp_feasible(&a, &b).unwrap() {
            Feasibility::Feasible { witness } => assert!(verify_witness(&a, &b, &witness)),
            other => panic!("expected feasible, got {other:?}"),
        }
    }
}
