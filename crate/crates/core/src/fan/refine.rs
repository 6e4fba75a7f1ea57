//! Common refinements: the coarsest complete simplicial fan sitting inside
//! both a fan and its preimage under a monomial map, built by exact
//! pairwise cone intersection followed by a pulling triangulation with
//! rays in global lexicographic order (so adjacent pieces glue).

use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::mat::{primitivize, IntMat, QMat};
use crate::exact::rat::{rat_from_int, Int, Rat};
use crate::polytope::dd;

use super::Fan;

fn linear_rank(rays: &[Vec<Int>]) -> usize {
    if rays.is_empty() {
        return 0;
    }
    let d = rays[0].len();
    let flat: Vec<Rat> = rays.iter().flat_map(|r| r.iter().map(rat_from_int)).collect();
    QMat::new(rays.len(), d, flat).rank()
}

/// Inequality rows cutting out the simplicial cone spanned by the given
/// rays: the rows of the inverse of the ray matrix (scaled integral).
fn cone_halfspaces(fan: &Fan, cone: &[usize]) -> Result<Vec<Vec<Rat>>> {
    let m = fan.cone_matrix(cone);
    let inv = m.inverse().map_err(|_| Error::NonSimplicialCone {
        cone: cone.to_vec(),
    })?;
    Ok((0..inv.rows())
        .map(|i| inv.row(i).to_vec())
        .collect())
}

/// Pulling triangulation of a pointed full-dimensional cone given its
/// extreme rays (global indices into `rays`) and the facet incidence.
fn cone_pulling(
    rays: &[Vec<Int>],
    facet_incidence: &[Vec<usize>],
    face: &[usize],
    m: usize,
    out: &mut Vec<Vec<usize>>,
    prefix: &mut Vec<usize>,
) {
    if m == 1 {
        debug_assert_eq!(face.len(), 1);
        let mut simplex = prefix.clone();
        simplex.push(face[0]);
        out.push(simplex);
        return;
    }
    // Lex-min ray vector of the face.
    let w0 = *face
        .iter()
        .min_by(|&&a, &&b| rays[a].cmp(&rays[b]))
        .expect("face is nonempty");
    let mut seen: Vec<Vec<usize>> = Vec::new();
    for inc in facet_incidence {
        let sub: Vec<usize> = face.iter().copied().filter(|i| inc.contains(i)).collect();
        if sub.len() == face.len() || sub.is_empty() {
            continue;
        }
        let vecs: Vec<Vec<Int>> = sub.iter().map(|&i| rays[i].clone()).collect();
        if linear_rank(&vecs) != m - 1 {
            continue;
        }
        if seen.contains(&sub) {
            continue;
        }
        seen.push(sub.clone());
        if sub.contains(&w0) {
            continue;
        }
        prefix.push(w0);
        cone_pulling(rays, facet_incidence, &sub, m - 1, out, prefix);
        prefix.pop();
    }
}

/// The complete simplicial fan refining both `fan` and `A^{-1}(fan)`:
/// every cone lands in a cone of `fan`, and its image under `A` lands in a
/// cone of `fan`.
pub fn common_refinement(fan: &Arc<Fan>, a: &IntMat) -> Result<Arc<Fan>> {
    let n = fan.rank();
    if !a.is_square() || a.rows() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: a.rows(),
        });
    }
    if a.det()?.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let mut global_rays: Vec<Vec<Int>> = Vec::new();
    let mut cones: Vec<Vec<usize>> = Vec::new();
    let mut intern = |v: Vec<Int>, store: &mut Vec<Vec<Int>>| -> usize {
        match store.iter().position(|r| r == &v) {
            Some(i) => i,
            None => {
                store.push(v);
                store.len() - 1
            }
        }
    };
    for sigma in fan.max_cones() {
        let sigma_rows = cone_halfspaces(fan, sigma)?;
        for tau in fan.max_cones() {
            // x in A^{-1}(tau)  <=>  rows(tau) * A * x >= 0
            let tau_rows = cone_halfspaces(fan, tau)?;
            let mut rows = sigma_rows.clone();
            for r in &tau_rows {
                let mut composed = vec![Rat::zero(); n];
                for (j, cell) in composed.iter_mut().enumerate() {
                    for (k, rv) in r.iter().enumerate() {
                        *cell += rv * rat_from_int(a.at(k, j));
                    }
                }
                rows.push(composed);
            }
            let piece_rays = match dd::extreme_rays(&rows) {
                Ok(r) => r,
                Err(_) => continue, // not pointed cannot happen; empty rank
            };
            if piece_rays.is_empty() || linear_rank(&piece_rays) < n {
                continue;
            }
            // Essential facet incidence from the H-description.
            let local: Vec<usize> = piece_rays
                .iter()
                .map(|r| intern(r.clone(), &mut global_rays))
                .collect();
            let mut incidence: Vec<Vec<usize>> = Vec::new();
            for row in &rows {
                let on: Vec<usize> = piece_rays
                    .iter()
                    .enumerate()
                    .filter(|(_, r)| {
                        row.iter()
                            .zip(r.iter())
                            .map(|(c, v)| c * rat_from_int(v))
                            .fold(Rat::zero(), |acc, t| acc + t)
                            .is_zero()
                    })
                    .map(|(i, _)| local[i])
                    .collect();
                if on.len() < n - 1 {
                    continue;
                }
                let vecs: Vec<Vec<Int>> = on.iter().map(|&i| global_rays[i].clone()).collect();
                if linear_rank(&vecs) == n - 1 && !incidence.contains(&on) {
                    incidence.push(on);
                }
            }
            let mut simplices = Vec::new();
            cone_pulling(
                &global_rays,
                &incidence,
                &local,
                n,
                &mut simplices,
                &mut Vec::new(),
            );
            for mut s in simplices {
                s.sort_unstable();
                if !cones.contains(&s) {
                    cones.push(s);
                }
            }
        }
    }
    // Primitivize ray vectors (extreme_rays already returns primitive
    // integer vectors, but normalize defensively) and validate.
    let rays: Vec<Vec<Int>> = global_rays
        .iter()
        .map(|r| primitivize(&r.iter().map(rat_from_int).collect::<Vec<Rat>>()))
        .collect();
    Fan::validate(n, rays, cones)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::standard;
    use crate::fan::check_map_compatible;
    use crate::exact::rat::int;

    #[test]
    fn identity_refinement_is_a_no_op() {
        let fan = standard::projective_space(2);
        let a = IntMat::identity(2);
        let refined = common_refinement(&fan, &a).unwrap();
        assert_eq!(refined.canonicalized(), fan.canonicalized());
    }

    #[test]
    fn cremona_refinement_has_six_rays() {
        let fan = standard::projective_space(2);
        let a = IntMat::from_i64(&[vec![-1, 0], vec![0, -1]]);
        let refined = common_refinement(&fan, &a).unwrap();
        assert_eq!(refined.rays().len(), 6);
        assert_eq!(refined.max_cones().len(), 6);
        // Both compatibility conditions hold.
        check_map_compatible(&refined, &IntMat::identity(2), &fan).unwrap();
        check_map_compatible(&refined, &a, &fan).unwrap();
    }

    #[test]
    fn shear_refinement_of_p1xp1_adds_antidiagonal_rays() {
        // The pieces are sigma and its preimage under A, so the new rays
        // are A^{-1} e2 = (-1, 1) and its negative.
        let fan = standard::product_of_projective_spaces(&[1, 1]);
        let a = IntMat::from_i64(&[vec![1, 1], vec![0, 1]]);
        let refined = common_refinement(&fan, &a).unwrap();
        assert!(refined.rays().contains(&vec![int(-1), int(1)]));
        assert!(refined.rays().contains(&vec![int(1), int(-1)]));
        assert_eq!(refined.rays().len(), 6);
        check_map_compatible(&refined, &IntMat::identity(2), &fan).unwrap();
        check_map_compatible(&refined, &a, &fan).unwrap();
    }

    #[test]
    fn refinement_in_three_dimensions() {
        let fan = standard::projective_space(3);
        let a = IntMat::from_i64(&[vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]]);
        let refined = common_refinement(&fan, &a).unwrap();
        check_map_compatible(&refined, &IntMat::identity(3), &fan).unwrap();
        check_map_compatible(&refined, &a, &fan).unwrap();
    }

    #[test]
    fn singular_matrix_rejected() {
        let fan = standard::projective_space(2);
        let a = IntMat::from_i64(&[vec![1, 1], vec![1, 1]]);
        assert!(matches!(
            common_refinement(&fan, &a),
            Err(Error::SingularMatrix)
        ));
    }
}
