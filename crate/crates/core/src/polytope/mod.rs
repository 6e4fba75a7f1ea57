//! Rational convex polytopes: exact hulls via double description of the
//! polar, pulling triangulations for volume, Minkowski sums, and the
//! normalized mixed volume that realizes intersection numbers of nef
//! divisors (`MV(P,...,P) = n! vol(P)`).

pub mod dd;

use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::lp::{lp_feasible, Feasibility};
use crate::exact::mat::QMat;
use crate::exact::rat::{rat, rat_from_int, Int, Rat};

/// Facet data of a full-dimensional polytope: `<u, x> <= rhs` per facet,
/// with the list of input-point indices lying on the facet.
#[derive(Clone, Debug)]
pub struct Facets {
    pub halfspaces: Vec<(Vec<Int>, Rat)>,
    pub incidence: Vec<Vec<usize>>,
}

/// A rational polytope given by its exact set of extreme points. May be
/// lower-dimensional; the facet description is cached once computed.
#[derive(Debug)]
pub struct Polytope {
    dim: usize,
    verts: Vec<Vec<Rat>>,
    facets: OnceLock<Option<Facets>>,
}

impl Clone for Polytope {
    fn clone(&self) -> Self {
        Polytope {
            dim: self.dim,
            verts: self.verts.clone(),
            facets: self.facets.clone(),
        }
    }
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.verts == other.verts
    }
}
impl Eq for Polytope {}

fn dedup_sorted(mut pts: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    pts.sort();
    pts.dedup();
    pts
}

fn affine_rank(pts: &[Vec<Rat>]) -> usize {
    if pts.len() <= 1 {
        return 0;
    }
    let d = pts[0].len();
    let rows: Vec<Rat> = pts[1..]
        .iter()
        .flat_map(|p| p.iter().zip(&pts[0]).map(|(a, b)| a - b))
        .collect();
    QMat::new(pts.len() - 1, d, rows).rank()
}

fn centroid(pts: &[Vec<Rat>]) -> Vec<Rat> {
    let d = pts[0].len();
    let n = rat(pts.len() as i64);
    (0..d)
        .map(|j| {
            pts.iter()
                .map(|p| p[j].clone())
                .fold(Rat::zero(), |a, t| a + t)
                / n.clone()
        })
        .collect()
}

/// Facets of the convex hull of a full-dimensional point set, via the
/// polar dual: vertices of `{y : <p_i - c, y> <= 1}` are facet normals.
fn facets_of_points(dim: usize, pts: &[Vec<Rat>]) -> Result<Facets> {
    let c = centroid(pts);
    // Homogenized polar cone in coordinates (t, y):
    //   t - <p_i - c, y> >= 0  and  t >= 0.
    let mut rows: Vec<Vec<Rat>> = pts
        .iter()
        .map(|p| {
            let mut row = Vec::with_capacity(dim + 1);
            row.push(Rat::one());
            for j in 0..dim {
                row.push(c[j].clone() - p[j].clone());
            }
            row
        })
        .collect();
    let mut t_row = vec![Rat::zero(); dim + 1];
    t_row[0] = Rat::one();
    rows.push(t_row);
    let rays = dd::extreme_rays(&rows)?;
    let mut halfspaces = Vec::new();
    for ray in rays {
        let t = &ray[0];
        if t.is_zero() {
            // Recession direction of the polar: impossible for bounded P.
            return Err(Error::InvalidParameter(
                "polar of a bounded polytope has no recession ray".into(),
            ));
        }
        // Facet: <u, x - c> <= t with u = ray[1..].
        let u: Vec<Int> = ray[1..].to_vec();
        let mut rhs = rat_from_int(t);
        for j in 0..dim {
            rhs += rat_from_int(&u[j]) * c[j].clone();
        }
        halfspaces.push((u, rhs));
    }
    halfspaces.sort();
    let incidence = halfspaces
        .iter()
        .map(|(u, rhs)| {
            (0..pts.len())
                .filter(|&i| {
                    let lhs: Rat = u
                        .iter()
                        .zip(&pts[i])
                        .map(|(a, b)| rat_from_int(a) * b)
                        .fold(Rat::zero(), |acc, t| acc + t);
                    lhs == *rhs
                })
                .collect()
        })
        .collect();
    Ok(Facets {
        halfspaces,
        incidence,
    })
}

/// Pulling triangulation by lexicographic-minimum vertices. `points` are
/// the configuration, `face` is a sorted list of point indices spanning an
/// `m`-dimensional face, `facet_incidence` the global facet incidence.
fn pulling(
    points: &[Vec<Rat>],
    facet_incidence: &[Vec<usize>],
    face: &[usize],
    m: usize,
    out: &mut Vec<Vec<usize>>,
    prefix: &mut Vec<usize>,
) {
    if m == 0 {
        debug_assert_eq!(face.len(), 1);
        let mut simplex = prefix.clone();
        simplex.push(face[0]);
        out.push(simplex);
        return;
    }
    // Lexicographic minimum point of the face (points are globally sorted,
    // so the smallest index is the lex-min point).
    let w0 = *face.iter().min().expect("face is nonempty");
    let mut seen: Vec<Vec<usize>> = Vec::new();
    for inc in facet_incidence {
        let sub: Vec<usize> = face.iter().copied().filter(|i| inc.contains(i)).collect();
        if sub.len() == face.len() || sub.is_empty() {
            continue; // facet contains the whole face, or misses it
        }
        let pts_sub: Vec<Vec<Rat>> = sub.iter().map(|&i| points[i].clone()).collect();
        if affine_rank(&pts_sub) != m - 1 {
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
        pulling(points, facet_incidence, &sub, m - 1, out, prefix);
        prefix.pop();
    }
}

/// Exact volume of the convex hull of a point set (not necessarily reduced
/// to extreme points). Lower-dimensional hulls have volume zero.
pub fn volume_of_points(dim: usize, pts: Vec<Vec<Rat>>) -> Result<Rat> {
    let pts = dedup_sorted(pts);
    if pts.is_empty() || dim == 0 {
        return Ok(Rat::zero());
    }
    if affine_rank(&pts) < dim {
        return Ok(Rat::zero());
    }
    let facets = facets_of_points(dim, &pts)?;
    let all: Vec<usize> = (0..pts.len()).collect();
    let mut simplices = Vec::new();
    pulling(
        &pts,
        &facets.incidence,
        &all,
        dim,
        &mut simplices,
        &mut Vec::new(),
    );
    let mut total = Rat::zero();
    for s in simplices {
        debug_assert_eq!(s.len(), dim + 1);
        let base = &pts[s[0]];
        let rows: Vec<Rat> = s[1..]
            .iter()
            .flat_map(|&i| pts[i].iter().zip(base).map(|(a, b)| a - b))
            .collect();
        let m = QMat::new(dim, dim, rows);
        total += det_rat(&m).abs();
    }
    let mut fact = Rat::one();
    for i in 1..=dim {
        fact *= rat(i as i64);
    }
    Ok(total / fact)
}

fn det_rat(m: &QMat) -> Rat {
    let n = m.rows();
    let mut a: Vec<Vec<Rat>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !a[i][col].is_zero()) else {
            return Rat::zero();
        };
        if p != col {
            a.swap(col, p);
            det = -det;
        }
        det *= a[col][col].clone();
        let inv = a[col][col].clone();
        for i in col + 1..n {
            if !a[i][col].is_zero() {
                let f = a[i][col].clone() / inv.clone();
                for j in col..n {
                    let v = a[i][j].clone() - f.clone() * a[col][j].clone();
                    a[i][j] = v;
                }
            }
        }
    }
    det
}

impl Polytope {
    /// Convex hull: reduces `pts` to its exact set of extreme points.
    pub fn from_points(dim: usize, pts: Vec<Vec<Rat>>) -> Result<Polytope> {
        for p in &pts {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
        }
        let pts = dedup_sorted(pts);
        if pts.len() <= 1 {
            return Ok(Polytope {
                dim,
                verts: pts,
                facets: OnceLock::new(),
            });
        }
        let rank = affine_rank(&pts);
        if rank == dim {
            let facets = facets_of_points(dim, &pts)?;
            // A point is extreme iff its active facet normals span R^dim.
            let verts: Vec<Vec<Rat>> = (0..pts.len())
                .filter(|&i| {
                    let active: Vec<Rat> = facets
                        .incidence
                        .iter()
                        .enumerate()
                        .filter(|(_, inc)| inc.contains(&i))
                        .flat_map(|(f, _)| {
                            facets.halfspaces[f].0.iter().map(rat_from_int)
                        })
                        .collect();
                    let rows = active.len() / dim;
                    rows > 0 && QMat::new(rows, dim, active).rank() == dim
                })
                .map(|i| pts[i].clone())
                .collect();
            let poly = Polytope {
                dim,
                verts,
                facets: OnceLock::new(),
            };
            Ok(poly)
        } else {
            // Lower-dimensional: reduce in affine-hull coordinates.
            let base = pts[0].clone();
            let dirs: Vec<Vec<Rat>> = pts[1..]
                .iter()
                .map(|p| p.iter().zip(&base).map(|(a, b)| a - b).collect())
                .collect();
            // Independent subset of direction vectors as a basis.
            let mut basis: Vec<Vec<Rat>> = Vec::new();
            for v in &dirs {
                if basis.len() == rank {
                    break;
                }
                let mut cand = basis.clone();
                cand.push(v.clone());
                let flat: Vec<Rat> = cand.iter().flatten().cloned().collect();
                if QMat::new(cand.len(), dim, flat).rank() == cand.len() {
                    basis = cand;
                }
            }
            // Coordinates: solve [basis^T] coords = p - base in the least
            // restrictive way: basis rows are independent, use the normal
            // equations over Q via a square subsystem on pivot columns.
            let flat: Vec<Rat> = basis.iter().flatten().cloned().collect();
            let bmat = QMat::new(rank, dim, flat);
            let (_, pivots) = crate::exact::mat::rref(&bmat);
            let square = QMat::new(
                rank,
                rank,
                basis
                    .iter()
                    .flat_map(|row| pivots.iter().map(|&j| row[j].clone()))
                    .collect(),
            );
            let square_t = transpose(&square);
            let coords: Vec<Vec<Rat>> = pts
                .iter()
                .map(|p| {
                    let rhs: Vec<Rat> = pivots
                        .iter()
                        .map(|&j| p[j].clone() - base[j].clone())
                        .collect();
                    square_t.solve(&rhs).expect("basis is invertible")
                })
                .collect();
            let inner = Polytope::from_points(rank, coords.clone())?;
            let verts: Vec<Vec<Rat>> = pts
                .iter()
                .zip(&coords)
                .filter(|(_, c)| inner.verts.contains(c))
                .map(|(p, _)| p.clone())
                .collect();
            Ok(Polytope {
                dim,
                verts: dedup_sorted(verts),
                facets: OnceLock::new(),
            })
        }
    }

    /// Polytope from inequalities `<u_i, x> >= c_i` (vertex enumeration).
    /// Errors when the region is unbounded or empty.
    pub fn from_halfspaces(dim: usize, rows: &[(Vec<Rat>, Rat)]) -> Result<Polytope> {
        // Homogenize to the cone {(t, x) : <u_i, x> - c_i t >= 0, t >= 0}.
        let mut cone_rows: Vec<Vec<Rat>> = rows
            .iter()
            .map(|(u, c)| {
                let mut row = Vec::with_capacity(dim + 1);
                row.push(-c.clone());
                row.extend(u.iter().cloned());
                row
            })
            .collect();
        let mut t_row = vec![Rat::zero(); dim + 1];
        t_row[0] = Rat::one();
        cone_rows.push(t_row);
        let rays = dd::extreme_rays(&cone_rows)?;
        let mut verts = Vec::new();
        for ray in &rays {
            if ray[0].is_zero() {
                if ray.iter().any(|v| !v.is_zero()) {
                    return Err(Error::UnboundedPolytope);
                }
                continue;
            }
            let t = rat_from_int(&ray[0]);
            verts.push(ray[1..].iter().map(|v| rat_from_int(v) / t.clone()).collect());
        }
        if verts.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        Ok(Polytope {
            dim,
            verts: dedup_sorted(verts),
            facets: OnceLock::new(),
        })
    }

    pub fn point(dim: usize) -> Polytope {
        Polytope {
            dim,
            verts: vec![vec![Rat::zero(); dim]],
            facets: OnceLock::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<Rat>] {
        &self.verts
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    /// Dimension of the affine hull.
    pub fn dim(&self) -> usize {
        affine_rank(&self.verts)
    }

    pub fn is_full_dimensional(&self) -> bool {
        !self.verts.is_empty() && self.dim() == self.dim
    }

    fn facet_data(&self) -> Option<&Facets> {
        self.facets
            .get_or_init(|| {
                if self.is_full_dimensional() {
                    facets_of_points(self.dim, &self.verts).ok()
                } else {
                    None
                }
            })
            .as_ref()
    }

    /// Facet halfspaces `<u, x> <= rhs` (full-dimensional polytopes only).
    pub fn facet_halfspaces(&self) -> Option<&[(Vec<Int>, Rat)]> {
        self.facet_data().map(|f| f.halfspaces.as_slice())
    }

    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Polytope> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        if self.is_empty() || other.is_empty() {
            return Ok(Polytope {
                dim: self.dim,
                verts: Vec::new(),
                facets: OnceLock::new(),
            });
        }
        let pts: Vec<Vec<Rat>> = self
            .verts
            .iter()
            .flat_map(|p| {
                other
                    .verts
                    .iter()
                    .map(move |q| p.iter().zip(q).map(|(a, b)| a + b).collect())
            })
            .collect();
        Polytope::from_points(self.dim, pts)
    }

    /// Scale by an arbitrary rational (negative scales reflect).
    pub fn dilate(&self, lambda: &Rat) -> Polytope {
        let verts = self
            .verts
            .iter()
            .map(|p| p.iter().map(|x| x * lambda).collect())
            .collect();
        Polytope {
            dim: self.dim,
            verts: dedup_sorted(verts),
            facets: OnceLock::new(),
        }
    }

    pub fn neg(&self) -> Polytope {
        self.dilate(&-Rat::one())
    }

    pub fn translate(&self, v: &[Rat]) -> Polytope {
        let verts = self
            .verts
            .iter()
            .map(|p| p.iter().zip(v).map(|(a, b)| a + b).collect())
            .collect();
        Polytope {
            dim: self.dim,
            verts: dedup_sorted(verts),
            facets: OnceLock::new(),
        }
    }

    /// Image under a linear map given row-major; injective maps carry
    /// extreme points to extreme points, otherwise the hull is recomputed.
    pub fn linear_image(&self, m: &QMat) -> Result<Polytope> {
        if m.cols() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: m.cols(),
            });
        }
        let pts: Vec<Vec<Rat>> = self.verts.iter().map(|p| m.apply(p)).collect();
        if m.rank() == self.dim {
            Ok(Polytope {
                dim: m.rows(),
                verts: dedup_sorted(pts),
                facets: OnceLock::new(),
            })
        } else {
            Polytope::from_points(m.rows(), pts)
        }
    }

    pub fn volume(&self) -> Result<Rat> {
        volume_of_points(self.dim, self.verts.clone())
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        if self.verts.is_empty() {
            return false;
        }
        if let Some(f) = self.facet_data() {
            return f.halfspaces.iter().all(|(u, rhs)| {
                let lhs: Rat = u
                    .iter()
                    .zip(x)
                    .map(|(a, b)| rat_from_int(a) * b)
                    .fold(Rat::zero(), |acc, t| acc + t);
                lhs <= *rhs
            });
        }
        // Lower-dimensional: x in conv(verts) via LP.
        let rows = self.dim + 1;
        let cols = self.verts.len();
        let mut a = Vec::with_capacity(rows * cols);
        for j in 0..self.dim {
            for v in &self.verts {
                a.push(v[j].clone());
            }
        }
        a.extend(std::iter::repeat_with(Rat::one).take(cols));
        let mut b: Vec<Rat> = x.to_vec();
        b.push(Rat::one());
        matches!(
            lp_feasible(&QMat::new(rows, cols, a), &b),
            Ok(Feasibility::Feasible { .. })
        )
    }

    /// Exact number of integer points, by bounding-box scan.
    pub fn lattice_point_count(&self) -> Result<u64> {
        if self.verts.is_empty() {
            return Ok(0);
        }
        let mut lo = Vec::with_capacity(self.dim);
        let mut hi = Vec::with_capacity(self.dim);
        for j in 0..self.dim {
            let mn = self.verts.iter().map(|v| &v[j]).min().unwrap();
            let mx = self.verts.iter().map(|v| &v[j]).max().unwrap();
            lo.push(mn.floor().to_integer());
            hi.push(mx.ceil().to_integer());
        }
        let mut count = 0u64;
        let mut cursor: Vec<Int> = lo.clone();
        'scan: loop {
            let pt: Vec<Rat> = cursor.iter().map(rat_from_int).collect();
            if self.contains(&pt) {
                count += 1;
            }
            for j in 0..self.dim {
                if cursor[j] < hi[j] {
                    cursor[j] += 1;
                    for jj in 0..j {
                        cursor[jj] = lo[jj].clone();
                    }
                    continue 'scan;
                }
            }
            break;
        }
        Ok(count)
    }
}

fn transpose(m: &QMat) -> QMat {
    let mut t = QMat::zero(m.cols(), m.rows());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            t.set(j, i, m.at(i, j).clone());
        }
    }
    t
}

/// Normalized mixed volume of `n` bodies in dimension `n`, by
/// inclusion--exclusion over nonempty subsets of partial Minkowski sums:
/// symmetric, multilinear, and `MV(P,...,P) = n! vol(P)`.
pub fn mixed_volume(bodies: &[&Polytope]) -> Result<Rat> {
    let n = bodies
        .first()
        .map(|p| p.ambient_dim())
        .ok_or(Error::WrongBodyCount {
            expected: 1,
            got: 0,
        })?;
    if bodies.len() != n {
        return Err(Error::WrongBodyCount {
            expected: n,
            got: bodies.len(),
        });
    }
    for b in bodies {
        if b.ambient_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: b.ambient_dim(),
            });
        }
        if b.is_empty() {
            return Err(Error::EmptyPolytope);
        }
    }
    let mut total = Rat::zero();
    // Subsets in lexicographic order of bitmask for determinism.
    for mask in 1u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let mut pts: Vec<Vec<Rat>> = vec![vec![Rat::zero(); n]];
        for &i in &members {
            let mut next = Vec::with_capacity(pts.len() * bodies[i].vertices().len());
            for p in &pts {
                for q in bodies[i].vertices() {
                    next.push(p.iter().zip(q).map(|(a, b)| a + b).collect());
                }
            }
            pts = dedup_sorted(next);
        }
        let vol = volume_of_points(n, pts)?;
        if (n - members.len()) % 2 == 0 {
            total += vol;
        } else {
            total -= vol;
        }
    }
    Ok(total)
}

/// Convenience: mixed volume with multiplicities `(body, count)`.
pub fn mixed_volume_with_multiplicity(parts: &[(&Polytope, usize)]) -> Result<Rat> {
    let mut refs: Vec<&Polytope> = Vec::new();
    for (p, c) in parts {
        for _ in 0..*c {
            refs.push(p);
        }
    }
    mixed_volume(&refs)
}

/// Integer points helper used by tests: count of `P` scaled by `m`.
pub fn ehrhart_count(p: &Polytope, m: i64) -> Result<u64> {
    p.dilate(&rat(m)).lattice_point_count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{rat, rat_pq};

    fn pt(coords: &[i64]) -> Vec<Rat> {
        coords.iter().map(|&c| rat(c)).collect()
    }

    fn unit_square() -> Polytope {
        Polytope::from_points(2, vec![pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1]), pt(&[1, 1])]).unwrap()
    }

    fn simplex2() -> Polytope {
        Polytope::from_points(2, vec![pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1])]).unwrap()
    }

    #[test]
    fn hull_filters_interior_and_duplicate_points() {
        let p = Polytope::from_points(
            2,
            vec![
                pt(&[0, 0]),
                pt(&[2, 0]),
                pt(&[0, 2]),
                pt(&[2, 2]),
                pt(&[1, 1]),
                pt(&[2, 0]),
                vec![rat_pq(1, 2), rat_pq(1, 2)],
            ],
        )
        .unwrap();
        assert_eq!(p.vertices().len(), 4);
    }

    #[test]
    fn segment_vertices_in_the_plane() {
        let p = Polytope::from_points(2, vec![pt(&[0, 0]), pt(&[1, 1]), pt(&[2, 2])]).unwrap();
        assert_eq!(p.vertices(), &[pt(&[0, 0]), pt(&[2, 2])]);
        assert_eq!(p.volume().unwrap(), rat(0));
    }

    #[test]
    fn unit_square_volume_and_count() {
        let p = unit_square();
        assert_eq!(p.volume().unwrap(), rat(1));
        assert_eq!(p.lattice_point_count().unwrap(), 4);
    }

    #[test]
    fn simplex_volume_and_counts() {
        let p = simplex2();
        assert_eq!(p.volume().unwrap(), rat_pq(1, 2));
        assert_eq!(p.lattice_point_count().unwrap(), 3);
        assert_eq!(p.dilate(&rat(2)).lattice_point_count().unwrap(), 6);
    }

    #[test]
    fn minkowski_segments_make_square() {
        let s1 = Polytope::from_points(2, vec![pt(&[0, 0]), pt(&[1, 0])]).unwrap();
        let s2 = Polytope::from_points(2, vec![pt(&[0, 0]), pt(&[0, 1])]).unwrap();
        assert_eq!(s1.minkowski_sum(&s2).unwrap(), unit_square());
    }

    #[test]
    fn minkowski_with_origin_is_identity() {
        let p = simplex2();
        let origin = Polytope::point(2);
        assert_eq!(p.minkowski_sum(&origin).unwrap(), p);
    }

    #[test]
    fn simplex_plus_its_negation_is_hexagon() {
        let p = simplex2();
        let q = p.neg();
        let hex = p.minkowski_sum(&q).unwrap();
        assert_eq!(hex.vertices().len(), 6);
        assert_eq!(hex.volume().unwrap(), rat(3));
    }

    #[test]
    fn hexagon_volume_three() {
        let hex = Polytope::from_points(
            2,
            vec![
                pt(&[1, 0]),
                pt(&[-1, 0]),
                pt(&[0, 1]),
                pt(&[0, -1]),
                pt(&[1, -1]),
                pt(&[-1, 1]),
            ],
        )
        .unwrap();
        assert_eq!(hex.volume().unwrap(), rat(3));
    }

    #[test]
    fn mixed_volume_of_equal_simplices() {
        let p = simplex2();
        assert_eq!(mixed_volume(&[&p, &p]).unwrap(), rat(1));
    }

    #[test]
    fn mixed_volume_cremona_value() {
        let p = simplex2();
        let q = p.neg();
        assert_eq!(mixed_volume(&[&p, &q]).unwrap(), rat(2));
    }

    #[test]
    fn mixed_volume_degenerate_summand_is_zero() {
        let p = simplex2();
        let origin = Polytope::point(2);
        assert_eq!(mixed_volume(&[&p, &origin]).unwrap(), rat(0));
    }

    #[test]
    fn cube_volume() {
        let mut pts = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    pts.push(pt(&[x, y, z]));
                }
            }
        }
        let c = Polytope::from_points(3, pts).unwrap();
        assert_eq!(c.vertices().len(), 8);
        assert_eq!(c.volume().unwrap(), rat(1));
        assert_eq!(mixed_volume(&[&c, &c, &c]).unwrap(), rat(6));
    }

    #[test]
    fn from_halfspaces_recovers_simplex() {
        let rows = vec![
            (vec![rat(1), rat(0)], rat(0)),
            (vec![rat(0), rat(1)], rat(0)),
            (vec![rat(-1), rat(-1)], rat(-1)),
        ];
        let p = Polytope::from_halfspaces(2, &rows).unwrap();
        assert_eq!(p, simplex2());
    }

    #[test]
    fn from_halfspaces_detects_unbounded() {
        let rows = vec![
            (vec![rat(1), rat(0)], rat(0)),
            (vec![rat(0), rat(1)], rat(0)),
        ];
        assert!(matches!(
            Polytope::from_halfspaces(2, &rows),
            Err(Error::UnboundedPolytope)
        ));
    }
}
