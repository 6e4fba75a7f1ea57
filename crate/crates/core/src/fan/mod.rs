//! Complete simplicial rational fans, torus-invariant Q-divisors,
//! nefness/ampleness, divisor polytopes, and toric standard constructions.

pub mod fibration;
pub mod refine;

use std::sync::Arc;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::mat::{lattice_index, QMat};
use crate::exact::rat::{rat_from_int, Int, Rat};
use crate::polytope::Polytope;

pub use fibration::Fibration;
pub use refine::common_refinement;

/// A complete simplicial rational fan: primitive ray generators and the
/// list of maximal cones as sorted ray-index sets of size `rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    rank: usize,
    rays: Vec<Vec<Int>>,
    max_cones: Vec<Vec<usize>>,
}

fn is_primitive(ray: &[Int]) -> bool {
    let mut g = Int::zero();
    for x in ray {
        g = g.gcd(x);
    }
    g == Int::from(1)
}

impl Fan {
    /// Validates all fan invariants: primitivity, distinctness,
    /// simpliciality (determinant test), and completeness (every facet of
    /// every max cone shared by exactly one other max cone, with the two
    /// cones on opposite sides).
    pub fn validate(rank: usize, rays: Vec<Vec<Int>>, max_cones: Vec<Vec<usize>>) -> Result<Arc<Fan>> {
        if rank == 0 {
            return Err(Error::InvalidParameter("rank must be positive".into()));
        }
        for (i, ray) in rays.iter().enumerate() {
            if ray.len() != rank {
                return Err(Error::DimensionMismatch {
                    expected: rank,
                    got: ray.len(),
                });
            }
            if ray.iter().all(|x| x.is_zero()) || !is_primitive(ray) {
                return Err(Error::NonPrimitiveRay {
                    index: i,
                    ray: ray.iter().map(|x| x.to_string()).collect(),
                });
            }
            if let Some(first) = rays[..i].iter().position(|r| r == ray) {
                return Err(Error::DuplicateRay { index: i, first });
            }
        }
        let mut cones = Vec::with_capacity(max_cones.len());
        for cone in &max_cones {
            let mut c = cone.clone();
            c.sort_unstable();
            c.dedup();
            if c.len() != rank || cone.len() != rank {
                return Err(Error::BadConeSize {
                    cone: cone.clone(),
                    got: cone.len(),
                    expected: rank,
                });
            }
            for &i in &c {
                if i >= rays.len() {
                    return Err(Error::BadRayIndex {
                        cone: cone.clone(),
                        index: i,
                        rays: rays.len(),
                    });
                }
            }
            let cols: Vec<Vec<Int>> = c.iter().map(|&i| rays[i].clone()).collect();
            let flat: Vec<Int> = (0..rank)
                .flat_map(|row| cols.iter().map(move |col| col[row].clone()))
                .collect();
            let det = crate::exact::mat::IntMat::new(rank, rank, flat).det()?;
            if det.is_zero() {
                return Err(Error::NonSimplicialCone { cone: cone.clone() });
            }
            cones.push(c);
        }
        let fan = Fan {
            rank,
            rays,
            max_cones: cones,
        };
        fan.check_complete()?;
        for (i, _) in fan.rays.iter().enumerate() {
            if !fan.max_cones.iter().any(|c| c.contains(&i)) {
                return Err(Error::InvalidParameter(format!(
                    "ray {i} does not appear in any max cone"
                )));
            }
        }
        Ok(Arc::new(fan))
    }

    fn check_complete(&self) -> Result<()> {
        for cone in &self.max_cones {
            for drop in 0..self.rank {
                let facet: Vec<usize> = cone
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != drop)
                    .map(|(_, &i)| i)
                    .collect();
                let sharing: Vec<&Vec<usize>> = self
                    .max_cones
                    .iter()
                    .filter(|c| facet.iter().all(|i| c.contains(i)))
                    .collect();
                if sharing.len() != 2 {
                    return Err(Error::NotComplete {
                        cone: cone.clone(),
                        facet: facet.clone(),
                        count: sharing.len(),
                    });
                }
                // Opposite-side test: a functional vanishing on the facet
                // must take opposite signs on the two remaining rays.
                let normal = self.facet_normal(&facet)?;
                let mut signs = Vec::new();
                for c in &sharing {
                    let extra = c
                        .iter()
                        .find(|i| !facet.contains(i))
                        .expect("max cone strictly contains its facet");
                    let v: Rat = normal
                        .iter()
                        .zip(&self.rays[*extra])
                        .map(|(a, b)| a * rat_from_int(b))
                        .fold(Rat::zero(), |acc, t| acc + t);
                    signs.push(v);
                }
                if !(signs[0].is_positive() && signs[1].is_negative()
                    || signs[0].is_negative() && signs[1].is_positive())
                {
                    return Err(Error::NotComplete {
                        cone: cone.clone(),
                        facet,
                        count: sharing.len(),
                    });
                }
            }
        }
        Ok(())
    }

    /// A nonzero functional vanishing on the span of the given rays
    /// (requires them to span a hyperplane or less).
    fn facet_normal(&self, facet: &[usize]) -> Result<Vec<Rat>> {
        let rows: Vec<Rat> = facet
            .iter()
            .flat_map(|&i| self.rays[i].iter().map(rat_from_int))
            .collect();
        let m = QMat::new(facet.len(), self.rank, rows);
        // Solve m * x = 0 for a nonzero x via RREF null space.
        let (ech, pivots) = crate::exact::mat::rref(&m);
        let free = (0..self.rank).find(|j| !pivots.contains(j)).ok_or(
            Error::InvalidParameter("facet spans the whole space".into()),
        )?;
        let mut x = vec![Rat::zero(); self.rank];
        x[free] = Rat::from_integer(Int::from(1));
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = -ech.at(r, free).clone();
        }
        Ok(x)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[Vec<Int>] {
        &self.rays
    }

    pub fn ray(&self, i: usize) -> &[Int] {
        &self.rays[i]
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    /// All cones of the given dimension, as sorted ray-index sets in
    /// lexicographic order. Dimension 0 is the trivial cone `[]`.
    pub fn cones_of_dim(&self, dim: usize) -> Vec<Vec<usize>> {
        use itertools::Itertools;
        if dim == 0 {
            return vec![Vec::new()];
        }
        let mut out: Vec<Vec<usize>> = self
            .max_cones
            .iter()
            .flat_map(|c| c.iter().copied().combinations(dim))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Index of the sublattice generated by the cone's rays inside the
    /// lattice points of its span; 1 exactly when the cone is smooth.
    pub fn cone_multiplicity(&self, cone: &[usize]) -> Result<Int> {
        if cone.is_empty() {
            return Ok(Int::from(1));
        }
        let cols: Vec<Vec<Int>> = cone.iter().map(|&i| self.rays[i].clone()).collect();
        lattice_index(&cols)
    }

    pub fn is_smooth(&self) -> bool {
        self.max_cones
            .iter()
            .all(|c| self.cone_multiplicity(c).map_or(false, |m| m == Int::from(1)))
    }

    /// Square matrix whose columns are the cone's rays.
    pub fn cone_matrix(&self, cone: &[usize]) -> QMat {
        let k = cone.len();
        let mut m = QMat::zero(self.rank, k);
        for (j, &i) in cone.iter().enumerate() {
            for r in 0..self.rank {
                m.set(r, j, rat_from_int(&self.rays[i][r]));
            }
        }
        m
    }

    /// Does the (simplicial, full-dimensional) max cone contain `x`?
    pub fn max_cone_contains(&self, cone_idx: usize, x: &[Rat]) -> bool {
        let cone = &self.max_cones[cone_idx];
        let m = self.cone_matrix(cone);
        match m.solve(x) {
            Ok(lambda) => lambda.iter().all(|l| !l.is_negative()),
            Err(_) => false,
        }
    }

    /// Index of some max cone containing `x` (exists by completeness).
    pub fn locate(&self, x: &[Rat]) -> usize {
        (0..self.max_cones.len())
            .find(|&i| self.max_cone_contains(i, x))
            .expect("complete fan covers every point")
    }

    /// Does the possibly lower-dimensional cone spanned by `cone` contain
    /// `x`? Exact LP test.
    pub fn cone_contains(&self, cone: &[usize], x: &[Rat]) -> bool {
        if cone.is_empty() {
            return x.iter().all(|v| v.is_zero());
        }
        let m = self.cone_matrix(cone);
        // lambda >= 0 with M lambda = x
        matches!(
            crate::exact::lp::lp_feasible(&m, x),
            Ok(crate::exact::lp::Feasibility::Feasible { .. })
        )
    }

    /// The smallest cone of the fan containing all given points, as a
    /// ray-index set, if the points lie in a common cone.
    pub fn smallest_containing_cone(&self, points: &[Vec<Rat>]) -> Option<Vec<usize>> {
        let max = (0..self.max_cones.len()).find(|&ci| {
            points.iter().all(|x| self.max_cone_contains(ci, x))
        })?;
        let cone = &self.max_cones[max];
        // Drop rays whose barycentric coefficient is zero for all points.
        let m = self.cone_matrix(cone);
        let mut used = vec![false; cone.len()];
        for x in points {
            let lambda = m.solve(x).expect("simplicial cone matrix is invertible");
            for (k, l) in lambda.iter().enumerate() {
                if !l.is_zero() {
                    used[k] = true;
                }
            }
        }
        Some(
            cone.iter()
                .zip(&used)
                .filter(|(_, &u)| u)
                .map(|(&i, _)| i)
                .collect(),
        )
    }

    /// Canonical relabeling: rays sorted lexicographically, cones remapped
    /// and sorted. Two fans are equal as fans iff their canonical forms
    /// are equal.
    pub fn canonicalized(&self) -> Fan {
        let mut order: Vec<usize> = (0..self.rays.len()).collect();
        order.sort_by(|&a, &b| self.rays[a].cmp(&self.rays[b]));
        let mut inv = vec![0usize; order.len()];
        for (new, &old) in order.iter().enumerate() {
            inv[old] = new;
        }
        let rays = order.iter().map(|&i| self.rays[i].clone()).collect();
        let mut cones: Vec<Vec<usize>> = self
            .max_cones
            .iter()
            .map(|c| {
                let mut c: Vec<usize> = c.iter().map(|&i| inv[i]).collect();
                c.sort_unstable();
                c
            })
            .collect();
        cones.sort();
        Fan {
            rank: self.rank,
            rays,
            max_cones: cones,
        }
    }
}

/// Ray-indexed rational coefficients: the Q-Cartier divisor
/// `D = sum a_rho D_rho`, also read as a class in N^1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TDivisor {
    pub fan: Arc<Fan>,
    pub coeffs: Vec<Rat>,
}

impl TDivisor {
    pub fn new(fan: Arc<Fan>, coeffs: Vec<Rat>) -> Result<TDivisor> {
        if coeffs.len() != fan.rays().len() {
            return Err(Error::BadDivisorLength {
                expected: fan.rays().len(),
                got: coeffs.len(),
            });
        }
        Ok(TDivisor { fan, coeffs })
    }

    pub fn zero(fan: Arc<Fan>) -> TDivisor {
        let n = fan.rays().len();
        TDivisor {
            fan,
            coeffs: vec![Rat::zero(); n],
        }
    }

    /// The divisor with coefficient 1 on one ray and 0 elsewhere.
    pub fn ray_divisor(fan: Arc<Fan>, ray: usize) -> TDivisor {
        let mut coeffs = vec![Rat::zero(); fan.rays().len()];
        coeffs[ray] = Rat::from_integer(Int::from(1));
        TDivisor { fan, coeffs }
    }

    pub fn all_ones(fan: Arc<Fan>) -> TDivisor {
        let n = fan.rays().len();
        TDivisor {
            fan,
            coeffs: vec![Rat::from_integer(Int::from(1)); n],
        }
    }

    pub fn add(&self, other: &TDivisor) -> TDivisor {
        debug_assert_eq!(self.fan, other.fan);
        TDivisor {
            fan: self.fan.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> TDivisor {
        TDivisor {
            fan: self.fan.clone(),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> TDivisor {
        self.scale(&-Rat::from_integer(Int::from(1)))
    }

    /// Per-cone linear data `m_sigma` with `<m_sigma, u_rho> = -a_rho` on
    /// the cone's rays.
    pub fn cone_linear_data(&self, cone_idx: usize) -> Result<Vec<Rat>> {
        let cone = &self.fan.max_cones()[cone_idx];
        let rows: Vec<Rat> = cone
            .iter()
            .flat_map(|&i| self.fan.ray(i).iter().map(rat_from_int))
            .collect();
        let m = QMat::new(cone.len(), self.fan.rank(), rows);
        let rhs: Vec<Rat> = cone.iter().map(|&i| -self.coeffs[i].clone()).collect();
        m.solve(&rhs)
    }

    /// Value of the support function at `x`: `<m_sigma, x>` for the max
    /// cone containing `x`.
    pub fn support_value(&self, x: &[Rat]) -> Result<Rat> {
        let ci = self.fan.locate(x);
        let m = self.cone_linear_data(ci)?;
        Ok(m.iter()
            .zip(x)
            .map(|(a, b)| a * b)
            .fold(Rat::zero(), |acc, t| acc + t))
    }

    /// Local convexity test: nef iff every cone's linear data satisfies
    /// all ray inequalities; ample iff strict off the cone.
    pub fn is_nef(&self) -> bool {
        self.nef_check(false)
    }

    pub fn is_ample(&self) -> bool {
        self.nef_check(true)
    }

    fn nef_check(&self, strict: bool) -> bool {
        for ci in 0..self.fan.max_cones().len() {
            let Ok(m) = self.cone_linear_data(ci) else {
                return false;
            };
            let cone = &self.fan.max_cones()[ci];
            for (ri, ray) in self.fan.rays().iter().enumerate() {
                let v: Rat = m
                    .iter()
                    .zip(ray)
                    .map(|(a, b)| a * rat_from_int(b))
                    .fold(Rat::zero(), |acc, t| acc + t);
                let bound = -self.coeffs[ri].clone();
                if cone.contains(&ri) {
                    continue;
                }
                if strict {
                    if v <= bound {
                        return false;
                    }
                } else if v < bound {
                    return false;
                }
            }
        }
        true
    }

    /// Is the divisor Cartier (each cone's linear data integral)?
    pub fn is_cartier(&self) -> bool {
        (0..self.fan.max_cones().len()).all(|ci| {
            self.cone_linear_data(ci)
                .map(|m| m.iter().all(|x| x.is_integer()))
                .unwrap_or(false)
        })
    }

    /// `P_D = { m : <m, u_rho> >= -a_rho }`, in vertex form. Errors when
    /// the region is unbounded (inconsistent input on a complete fan this
    /// cannot happen for genuine divisors, but raw coefficients may).
    pub fn polytope(&self) -> Result<Polytope> {
        let rows: Vec<(Vec<Rat>, Rat)> = self
            .fan
            .rays()
            .iter()
            .zip(&self.coeffs)
            .map(|(ray, a)| (ray.iter().map(rat_from_int).collect(), -a.clone()))
            .collect();
        Polytope::from_halfspaces(self.fan.rank(), &rows)
    }

    /// Big = full-dimensional polytope among nef divisors.
    pub fn is_big(&self) -> Result<bool> {
        match self.polytope() {
            Ok(p) => Ok(p.is_full_dimensional()),
            Err(Error::EmptyPolytope) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Minimal `c >= 0` such that `self + c * ample` is nef; exact.
    pub fn nef_threshold(&self, ample: &TDivisor) -> Result<Rat> {
        debug_assert!(ample.is_ample());
        let mut c_min = Rat::zero();
        for ci in 0..self.fan.max_cones().len() {
            let md = self.cone_linear_data(ci)?;
            let mh = ample.cone_linear_data(ci)?;
            let cone = &self.fan.max_cones()[ci];
            for (ri, ray) in self.fan.rays().iter().enumerate() {
                if cone.contains(&ri) {
                    continue;
                }
                let vd: Rat = md
                    .iter()
                    .zip(ray)
                    .map(|(a, b)| a * rat_from_int(b))
                    .fold(Rat::zero(), |acc, t| acc + t)
                    + self.coeffs[ri].clone();
                let vh: Rat = mh
                    .iter()
                    .zip(ray)
                    .map(|(a, b)| a * rat_from_int(b))
                    .fold(Rat::zero(), |acc, t| acc + t)
                    + ample.coeffs[ri].clone();
                debug_assert!(vh.is_positive(), "ample reference must be strict");
                if vd.is_negative() {
                    let need = -vd / vh;
                    if need > c_min {
                        c_min = need;
                    }
                }
            }
        }
        Ok(c_min)
    }
}

/// First ample divisor found by scanning small positive integer
/// coefficient vectors in lexicographic order (all-ones first).
pub fn ample_reference(fan: &Arc<Fan>) -> Result<TDivisor> {
    let r = fan.rays().len();
    let bound = 6i64;
    for max_entry in 1..=bound {
        let mut stack = vec![Vec::<i64>::new()];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == r {
                if max_entry == 1 || prefix.iter().any(|&v| v == max_entry) {
                    let coeffs: Vec<Rat> = prefix
                        .iter()
                        .map(|&v| Rat::from_integer(Int::from(v)))
                        .collect();
                    let d = TDivisor::new(fan.clone(), coeffs)?;
                    if d.is_ample() {
                        return Ok(d);
                    }
                }
                continue;
            }
            // Push in reverse so the smallest next entry pops first.
            for v in (1..=max_entry).rev() {
                let mut next = prefix.clone();
                next.push(v);
                stack.push(next);
            }
        }
    }
    Err(Error::NoAmpleReference { bound })
}

/// Standard fan constructions.
pub mod standard {
    use super::*;

    /// Fan of projective n-space: rays e_1..e_n and -(e_1+...+e_n).
    pub fn projective_space(n: usize) -> Arc<Fan> {
        let mut rays: Vec<Vec<Int>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Int::from(1) } else { Int::zero() })
                    .collect()
            })
            .collect();
        rays.push(vec![Int::from(-1); n]);
        use itertools::Itertools;
        let cones: Vec<Vec<usize>> = (0..=n).combinations(n).collect();
        Fan::validate(n, rays, cones).expect("projective space fan is valid")
    }

    /// Product of projective spaces with the given factor dimensions.
    pub fn product_of_projective_spaces(dims: &[usize]) -> Arc<Fan> {
        let n: usize = dims.iter().sum();
        let mut rays: Vec<Vec<Int>> = Vec::new();
        let mut factor_ray_ids: Vec<Vec<usize>> = Vec::new();
        let mut offset = 0;
        for &d in dims {
            let mut ids = Vec::new();
            for i in 0..d {
                let mut ray = vec![Int::zero(); n];
                ray[offset + i] = Int::from(1);
                ids.push(rays.len());
                rays.push(ray);
            }
            let mut anti = vec![Int::zero(); n];
            for i in 0..d {
                anti[offset + i] = Int::from(-1);
            }
            ids.push(rays.len());
            rays.push(anti);
            factor_ray_ids.push(ids);
            offset += d;
        }
        // Max cones: pick a max cone in each factor, concatenate.
        use itertools::Itertools;
        let per_factor: Vec<Vec<Vec<usize>>> = dims
            .iter()
            .zip(&factor_ray_ids)
            .map(|(&d, ids)| {
                ids.iter()
                    .copied()
                    .combinations(d)
                    .collect::<Vec<Vec<usize>>>()
            })
            .collect();
        let mut cones: Vec<Vec<usize>> = vec![Vec::new()];
        for choices in &per_factor {
            let mut next = Vec::new();
            for base in &cones {
                for ch in choices {
                    let mut c = base.clone();
                    c.extend(ch.iter().copied());
                    next.push(c);
                }
            }
            cones = next;
        }
        Fan::validate(n, rays, cones).expect("product fan is valid")
    }

    /// Hirzebruch surface F_a: rays e1, e2, -e1 + a e2, -e2.
    pub fn hirzebruch(a: i64) -> Arc<Fan> {
        let rays = vec![
            vec![Int::from(1), Int::zero()],
            vec![Int::zero(), Int::from(1)],
            vec![Int::from(-1), Int::from(a)],
            vec![Int::zero(), Int::from(-1)],
        ];
        let cones = vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]];
        Fan::validate(2, rays, cones).expect("Hirzebruch fan is valid")
    }

    /// Stellar subdivision at the sum of the cone's rays.
    pub fn blowup_at_fixed_point(fan: &Arc<Fan>, cone: &[usize]) -> Result<Arc<Fan>> {
        let mut cone = cone.to_vec();
        cone.sort_unstable();
        let mut new_ray = vec![Int::zero(); fan.rank()];
        for &i in &cone {
            if i >= fan.rays().len() {
                return Err(Error::BadRayIndex {
                    cone: cone.clone(),
                    index: i,
                    rays: fan.rays().len(),
                });
            }
            for (j, v) in fan.ray(i).iter().enumerate() {
                new_ray[j] += v;
            }
        }
        let new_ray = crate::exact::mat::primitivize(
            &new_ray.iter().map(rat_from_int).collect::<Vec<Rat>>(),
        );
        let mut rays = fan.rays().to_vec();
        let new_idx = rays.len();
        rays.push(new_ray);
        let mut cones = Vec::new();
        for c in fan.max_cones() {
            if cone.iter().all(|i| c.contains(i)) {
                for &drop in &cone {
                    let mut nc: Vec<usize> =
                        c.iter().copied().filter(|&i| i != drop).collect();
                    nc.push(new_idx);
                    nc.sort_unstable();
                    cones.push(nc);
                }
            } else {
                cones.push(c.clone());
            }
        }
        Fan::validate(fan.rank(), rays, cones).map_err(|e| match e {
            Error::NotComplete { cone, facet, count } => Error::NotComplete { cone, facet, count },
            other => other,
        })
    }
}

/// Pullback of a divisor along the monomial map `A`: the coefficient at a
/// source ray `u` is `-psi_D(A u)` where `psi_D` is the support function
/// of `D`, so the polytope of the pullback is `A^T P_D`.
pub fn pullback_divisor(
    divisor: &TDivisor,
    a: &crate::exact::mat::IntMat,
    source: &Arc<Fan>,
) -> Result<TDivisor> {
    let target = &divisor.fan;
    if a.rows() != target.rank() || a.cols() != source.rank() {
        return Err(Error::DimensionMismatch {
            expected: target.rank(),
            got: a.rows(),
        });
    }
    check_map_compatible(source, a, target)?;
    let mut coeffs = Vec::with_capacity(source.rays().len());
    for ray in source.rays() {
        let image: Vec<Rat> = a
            .apply_int(ray)
            .iter()
            .map(rat_from_int)
            .collect();
        coeffs.push(-divisor.support_value(&image)?);
    }
    TDivisor::new(source.clone(), coeffs)
}

/// Does `A` map every cone of `source` into some cone of `target`?
pub fn check_map_compatible(
    source: &Arc<Fan>,
    a: &crate::exact::mat::IntMat,
    target: &Arc<Fan>,
) -> Result<()> {
    for cone in source.max_cones() {
        let images: Vec<Vec<Rat>> = cone
            .iter()
            .map(|&i| a.apply_int(source.ray(i)).iter().map(rat_from_int).collect())
            .collect();
        let found = (0..target.max_cones().len())
            .any(|ci| images.iter().all(|x| target.max_cone_contains(ci, x)));
        if !found {
            return Err(Error::IncompatibleMap);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{int, rat};

    #[test]
    fn p2_fan_is_valid() {
        let fan = standard::projective_space(2);
        assert_eq!(fan.rays().len(), 3);
        assert_eq!(fan.max_cones().len(), 3);
        assert!(fan.is_smooth());
    }

    #[test]
    fn incomplete_fan_rejected() {
        let rays = vec![
            vec![int(1), int(0)],
            vec![int(0), int(1)],
            vec![int(-1), int(-1)],
        ];
        let err = Fan::validate(2, rays, vec![vec![0, 1]]).unwrap_err();
        assert!(matches!(err, Error::NotComplete { .. }));
    }

    #[test]
    fn non_primitive_ray_rejected() {
        let rays = vec![
            vec![int(2), int(0)],
            vec![int(0), int(1)],
            vec![int(-1), int(-1)],
        ];
        let err = Fan::validate(2, rays, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap_err();
        assert!(matches!(err, Error::NonPrimitiveRay { index: 0, .. }));
    }

    #[test]
    fn hirzebruch_one_shape() {
        let fan = standard::hirzebruch(1);
        assert_eq!(fan.rays().len(), 4);
        assert_eq!(fan.max_cones().len(), 4);
        assert!(fan.is_smooth());
    }

    #[test]
    fn blowup_of_p2_has_four_rays() {
        let p2 = standard::projective_space(2);
        let bl = standard::blowup_at_fixed_point(&p2, &[0, 1]).unwrap();
        assert_eq!(bl.rays().len(), 4);
        assert_eq!(bl.max_cones().len(), 4);
        assert!(bl.rays().contains(&vec![int(1), int(1)]));
    }

    #[test]
    fn hyperplane_polytope_on_p2() {
        let fan = standard::projective_space(2);
        let h = TDivisor::new(fan.clone(), vec![rat(0), rat(0), rat(1)]).unwrap();
        let p = h.polytope().unwrap();
        assert_eq!(
            p.vertices(),
            &[
                vec![rat(0), rat(0)],
                vec![rat(0), rat(1)],
                vec![rat(1), rat(0)]
            ]
        );
        assert!(h.is_nef() && h.is_ample());
    }

    #[test]
    fn zero_divisor_polytope_is_origin() {
        let fan = standard::projective_space(2);
        let z = TDivisor::zero(fan);
        let p = z.polytope().unwrap();
        assert_eq!(p.vertices(), &[vec![rat(0), rat(0)]]);
    }

    #[test]
    fn product_polytope_is_unit_square() {
        let fan = standard::product_of_projective_spaces(&[1, 1]);
        let d = TDivisor::new(fan, vec![rat(0), rat(1), rat(0), rat(1)]).unwrap();
        let p = d.polytope().unwrap();
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.volume().unwrap(), rat(1));
    }

    #[test]
    fn negative_hyperplane_is_not_nef() {
        let fan = standard::projective_space(2);
        let h = TDivisor::new(fan, vec![rat(0), rat(0), rat(-1)]).unwrap();
        assert!(!h.is_nef());
    }

    #[test]
    fn exceptional_curve_on_f1_is_not_nef_but_fiber_is() {
        // On the Hirzebruch convention the e2-ray divisor is the -1 section
        // and the -e1+e2 ray divisor is a fiber.
        let fan = standard::hirzebruch(1);
        let e = TDivisor::ray_divisor(fan.clone(), 1);
        assert!(!e.is_nef());
        let f = TDivisor::ray_divisor(fan, 2);
        assert!(f.is_nef() && !f.is_ample());
    }

    #[test]
    fn ample_reference_on_catalog() {
        for fan in [
            standard::projective_space(2),
            standard::projective_space(3),
            standard::product_of_projective_spaces(&[1, 1, 1]),
            standard::hirzebruch(0),
            standard::hirzebruch(1),
            standard::hirzebruch(2),
            standard::hirzebruch(3),
        ] {
            let h = ample_reference(&fan).unwrap();
            assert!(h.is_ample());
        }
    }

    #[test]
    fn all_ones_not_ample_on_f2_scan_finds_another() {
        let fan = standard::hirzebruch(2);
        let ones = TDivisor::all_ones(fan.clone());
        assert!(ones.is_nef() && !ones.is_ample());
        let h = ample_reference(&fan).unwrap();
        assert_eq!(
            h.coeffs,
            vec![rat(1), rat(1), rat(2), rat(1)],
            "lexicographic scan order is deterministic"
        );
    }

    #[test]
    fn nef_threshold_of_negative_hyperplane() {
        let fan = standard::projective_space(2);
        let h = TDivisor::new(fan.clone(), vec![rat(0), rat(0), rat(1)]).unwrap();
        let neg = h.neg();
        let amp = ample_reference(&fan).unwrap();
        let c = neg.nef_threshold(&amp).unwrap();
        assert!((neg.add(&amp.scale(&c))).is_nef());
        // minimality: slightly smaller multiple is not nef
        let eps = crate::exact::rat::rat_pq(1, 1000);
        let smaller = neg.add(&amp.scale(&(c - eps)));
        assert!(!smaller.is_nef());
    }

    #[test]
    fn cremona_pullback_polytope_is_reflected_simplex() {
        let fan = standard::projective_space(2);
        let h = TDivisor::new(fan.clone(), vec![rat(0), rat(0), rat(1)]).unwrap();
        let a = crate::exact::mat::IntMat::from_i64(&[vec![-1, 0], vec![0, -1]]);
        let refined = common_refinement(&fan, &a).unwrap();
        let pb = pullback_divisor(&h, &a, &refined).unwrap();
        let p = pb.polytope().unwrap();
        let expected = h.polytope().unwrap().neg();
        assert_eq!(p, expected);
    }
}
