//! Double description: extreme rays of a pointed polyhedral cone given by
//! homogeneous inequalities, over exact rationals.
//!
//! The classic incremental algorithm: start from a simplicial subcone cut
//! out by d independent constraints, insert the remaining halfspaces one at
//! a time, and combine adjacent rays across the new hyperplane. Adjacency
//! is the combinatorial test (no third ray's zero set contains the
//! intersection of the pair's zero sets), which is exact for pointed cones.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::mat::{primitivize, QMat};
use crate::exact::rat::{rat_from_int, Int, Rat};

#[derive(Clone, Debug)]
struct Ray {
    v: Vec<Int>,
    /// Indices of processed constraints vanishing on this ray.
    zero: Vec<usize>,
}

fn dot(a: &[Rat], v: &[Int]) -> Rat {
    a.iter()
        .zip(v)
        .map(|(x, y)| x * rat_from_int(y))
        .fold(Rat::zero(), |acc, t| acc + t)
}

/// Extreme rays of `{x : row . x >= 0 for every row}`. The cone must be
/// pointed (the rows must have full column rank); otherwise an error is
/// returned. Rays come back as primitive integer vectors, sorted.
pub fn extreme_rays(rows: &[Vec<Rat>]) -> Result<Vec<Vec<Int>>> {
    let d = rows.first().map(Vec::len).ok_or_else(|| {
        Error::InvalidParameter("double description needs at least one constraint".into())
    })?;
    for r in rows {
        if r.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: r.len(),
            });
        }
    }
    // Pick d independent rows for the initial simplicial cone.
    let mut chosen: Vec<usize> = Vec::new();
    {
        let mut work: Vec<Vec<Rat>> = Vec::new();
        for (i, r) in rows.iter().enumerate() {
            let mut cand = work.clone();
            cand.push(r.clone());
            let flat: Vec<Rat> = cand.iter().flatten().cloned().collect();
            let m = QMat::new(cand.len(), d, flat);
            if m.rank() == cand.len() {
                work = cand;
                chosen.push(i);
                if work.len() == d {
                    break;
                }
            }
        }
    }
    if chosen.len() < d {
        return Err(Error::InvalidParameter(
            "cone is not pointed: constraints do not have full rank".into(),
        ));
    }
    // Initial rays: columns of the inverse of the chosen constraint matrix.
    let flat: Vec<Rat> = chosen
        .iter()
        .flat_map(|&i| rows[i].iter().cloned())
        .collect();
    let base = QMat::new(d, d, flat);
    let inv = base.inverse()?;
    let mut rays: Vec<Ray> = (0..d)
        .map(|j| {
            let col: Vec<Rat> = (0..d).map(|i| inv.at(i, j).clone()).collect();
            let v = primitivize(&col);
            let zero: Vec<usize> = (0..d).filter(|&i| i != j).collect();
            Ray { v, zero }
        })
        .collect();

    // Insert the remaining constraints.
    for (step, (idx, row)) in rows
        .iter()
        .enumerate()
        .filter(|(i, _)| !chosen.contains(i))
        .enumerate()
    {
        let _ = step;
        let vals: Vec<Rat> = rays.iter().map(|r| dot(row, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        if neg.is_empty() {
            for (i, r) in rays.iter_mut().enumerate() {
                if vals[i].is_zero() {
                    r.zero.push(local_index(&chosen, idx));
                }
            }
            continue;
        }
        let mut next: Vec<Ray> = Vec::new();
        for (i, r) in rays.iter().enumerate() {
            if !vals[i].is_negative() {
                let mut r = r.clone();
                if vals[i].is_zero() {
                    r.zero.push(local_index(&chosen, idx));
                }
                next.push(r);
            }
        }
        for &p in &pos {
            for &m in &neg {
                if !adjacent(&rays, p, m, d) {
                    continue;
                }
                // new = val[p] * ray[m] - val[m] * ray[p]  (positive combo)
                let vp = &vals[p];
                let vm = &vals[m];
                let combo: Vec<Rat> = rays[p]
                    .v
                    .iter()
                    .zip(&rays[m].v)
                    .map(|(a, b)| vp * rat_from_int(b) - vm * rat_from_int(a))
                    .collect();
                let v = primitivize(&combo);
                let mut zero: Vec<usize> = rays[p]
                    .zero
                    .iter()
                    .filter(|z| rays[m].zero.contains(z))
                    .cloned()
                    .collect();
                zero.push(local_index(&chosen, idx));
                next.push(Ray { v, zero });
            }
        }
        rays = next;
    }
    let mut out: Vec<Vec<Int>> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Constraint indices used in zero sets: the initial d constraints get
/// 0..d, later ones their insertion order offset by d. Only consistency
/// matters, not the actual numbering.
fn local_index(chosen: &[usize], global: usize) -> usize {
    chosen.len() + global
}

fn adjacent(rays: &[Ray], p: usize, m: usize, d: usize) -> bool {
    let common: Vec<usize> = rays[p]
        .zero
        .iter()
        .filter(|z| rays[m].zero.contains(z))
        .cloned()
        .collect();
    // Quick dimension necessary condition.
    if common.len() + 2 < d {
        return false;
    }
    for (i, r) in rays.iter().enumerate() {
        if i == p || i == m {
            continue;
        }
        if common.iter().all(|z| r.zero.contains(z)) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{int, rat};

    #[test]
    fn orthant_from_inequalities() {
        let rows = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
        let rays = extreme_rays(&rows).unwrap();
        assert_eq!(rays, vec![vec![int(0), int(1)], vec![int(1), int(0)]]);
    }

    #[test]
    fn triangle_cone_three_constraints() {
        // {x >= 0, y >= 0, x + y <= 1} homogenized: t - x - y >= 0, x,y >= 0
        // coordinates (t, x, y)
        let rows = vec![
            vec![rat(0), rat(1), rat(0)],
            vec![rat(0), rat(0), rat(1)],
            vec![rat(1), rat(-1), rat(-1)],
            vec![rat(1), rat(0), rat(0)],
        ];
        let mut rays = extreme_rays(&rows).unwrap();
        rays.sort();
        assert_eq!(
            rays,
            vec![
                vec![int(1), int(0), int(0)],
                vec![int(1), int(0), int(1)],
                vec![int(1), int(1), int(0)],
            ]
        );
    }

    #[test]
    fn non_pointed_cone_rejected() {
        let rows = vec![vec![rat(1), rat(0)]];
        assert!(extreme_rays(&rows).is_err());
    }
}
