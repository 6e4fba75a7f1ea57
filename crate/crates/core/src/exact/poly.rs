//! Univariate polynomials over the rationals, characteristic polynomials,
//! and certified enclosures of the maximum root modulus.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::mat::QMat;
use crate::exact::rat::{cmp_roots, nth_root_bounds, rat, Rat};

/// Coefficients stored lowest degree first; the leading coefficient of a
/// nonzero polynomial is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    c: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut c: Vec<Rat>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UniPoly { c }
    }

    pub fn zero() -> Self {
        UniPoly { c: Vec::new() }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        UniPoly::new(c.iter().map(|&v| rat(v)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.c.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn mul(&self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut c = vec![Rat::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UniPoly::new(c)
    }

    /// Evaluate at a square matrix (for Cayley--Hamilton style checks).
    pub fn eval_matrix(&self, m: &QMat) -> QMat {
        assert!(m.is_square());
        let n = m.rows();
        let mut acc = QMat::zero(n, n);
        for c in self.c.iter().rev() {
            acc = acc.mul(m);
            for i in 0..n {
                let v = acc.at(i, i).clone() + c;
                acc.set(i, i, v);
            }
        }
        acc
    }

    fn monic(&self) -> UniPoly {
        let lead = self.c.last().expect("nonzero polynomial");
        UniPoly::new(self.c.iter().map(|x| x / lead).collect())
    }

    /// One Graeffe step: returns the monic polynomial whose roots are the
    /// squares of the roots, via p(t)p(-t) = q(t^2) up to sign.
    fn graeffe_step(&self) -> UniPoly {
        let d = self.degree();
        let neg = UniPoly::new(
            self.c
                .iter()
                .enumerate()
                .map(|(i, x)| if i % 2 == 1 { -x.clone() } else { x.clone() })
                .collect(),
        );
        let prod = self.mul(&neg);
        let mut even = Vec::with_capacity(d + 1);
        for i in 0..=d {
            even.push(prod.coeff(2 * i));
        }
        let q = UniPoly::new(even);
        if d % 2 == 1 {
            UniPoly::new(q.c.iter().map(|x| -x.clone()).collect())
        } else {
            q
        }
    }
}

/// Characteristic polynomial det(tI - M), monic, by the Faddeev--LeVerrier
/// recursion; exact over the rationals.
pub fn char_poly(m: &QMat) -> Result<UniPoly> {
    if !m.is_square() {
        return Err(Error::NonSquareMatrix {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let mut aux = QMat::zero(n, n);
    for k in 1..=n {
        // aux <- M (aux + c_{n-k+1} I)
        let mut shifted = aux;
        for i in 0..n {
            let v = shifted.at(i, i).clone() + &coeffs[n - k + 1];
            shifted.set(i, i, v);
        }
        aux = m.mul(&shifted);
        let c = -aux.trace() / rat(k as i64);
        coeffs[n - k] = c;
    }
    Ok(UniPoly::new(coeffs))
}

/// Degree-normalized coefficient bounds on the maximum root modulus of a
/// monic polynomial: `lower <= max |root| <= upper` with
/// upper = 2 max_j |b_{d-j}|^(1/j) and lower = max_j (|b_{d-j}|/C(d,j))^(1/j).
fn coefficient_bounds(p: &UniPoly, precision_bits: u32) -> Result<(Rat, Rat)> {
    let d = p.degree();
    debug_assert!(d >= 1);
    // Track the argmax of |b_{d-j}|^(1/j) exactly, then round outward once.
    let mut best_u: Option<(Rat, u32)> = None;
    let mut best_l: Option<(Rat, u32)> = None;
    for j in 1..=d {
        let b = p.coeff(d - j).abs();
        if !b.is_zero() {
            let ju = j as u32;
            if best_u
                .as_ref()
                .is_none_or(|(bv, bj)| cmp_roots(&b, ju, bv, *bj) == std::cmp::Ordering::Greater)
            {
                best_u = Some((b.clone(), ju));
            }
            let scaled = &b / rat(binomial(d, j) as i64);
            if best_l
                .as_ref()
                .is_none_or(|(bv, bj)| cmp_roots(&scaled, ju, bv, *bj) == std::cmp::Ordering::Greater)
            {
                best_l = Some((scaled, ju));
            }
        }
    }
    let Some((bu, ju)) = best_u else {
        // All lower coefficients vanish: p = t^d, every root is zero.
        return Ok((Rat::zero(), Rat::zero()));
    };
    let (bl, jl) = best_l.expect("lower bound exists when upper does");
    let (_, u_hi) = nth_root_bounds(&bu, ju, precision_bits)?;
    let (l_lo, _) = nth_root_bounds(&bl, jl, precision_bits)?;
    let two = if d == 1 { rat(1) } else { rat(2) };
    Ok((l_lo, u_hi * two))
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Lower bound on `x^(1/2^j)` by a chain of rounded-down square roots.
fn root_pow2_lower(x: &Rat, j: u32, precision_bits: u32) -> Result<Rat> {
    let mut v = x.clone();
    for _ in 0..j {
        v = nth_root_bounds(&v, 2, precision_bits)?.0;
    }
    Ok(v)
}

/// Upper bound on `x^(1/2^j)` by a chain of rounded-up square roots.
fn root_pow2_upper(x: &Rat, j: u32, precision_bits: u32) -> Result<Rat> {
    let mut v = x.clone();
    for _ in 0..j {
        v = nth_root_bounds(&v, 2, precision_bits)?.1;
    }
    Ok(v)
}

/// Certified enclosure of the maximum modulus of the roots of `p`, of width
/// at most `tol`. Bounds come from degree-normalized coefficient estimates
/// sharpened by repeated root squaring, so successive enclosures are nested
/// and always contain the spectral radius when `p` is a characteristic
/// polynomial.
pub fn perron_radius(p: &UniPoly, tol: &Rat) -> Result<(Rat, Rat)> {
    if !tol.is_positive() {
        return Err(Error::NonPositiveTolerance);
    }
    if p.degree() < 1 || p.is_zero() {
        return Err(Error::ConstantPolynomial);
    }
    let mut q = p.monic();
    let mut lo = Rat::zero();
    let mut hi: Option<Rat> = None;
    // Roots of the j-th iterate are the 2^j powers of the roots of p.
    let mut j: u32 = 0;
    loop {
        let bits = 24 + 2 * j;
        let (l, u) = coefficient_bounds(&q, bits)?;
        let l_root = root_pow2_lower(&l, j, bits)?;
        let u_root = root_pow2_upper(&u, j, bits)?;
        if l_root > lo {
            lo = l_root;
        }
        match &hi {
            Some(h) if *h <= u_root => {}
            _ => hi = Some(u_root),
        }
        let h = hi.clone().expect("upper bound set");
        if &h - &lo <= *tol {
            return Ok((lo, h));
        }
        if j > 40 {
            // Unreachable for sane tolerances; guards against runaway loops.
            return Ok((lo, h));
        }
        q = q.graeffe_step();
        j += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::mat::QMat;
    use crate::exact::rat::{rat_pq, Rat};

    #[test]
    fn char_poly_of_fibonacci_like_matrix() {
        let m = QMat::new(2, 2, vec![rat(2), rat(1), rat(1), rat(1)]);
        let p = char_poly(&m).unwrap();
        assert_eq!(p, UniPoly::from_i64(&[1, -3, 1]));
    }

    #[test]
    fn char_poly_of_zero_and_identity() {
        let z = QMat::zero(2, 2);
        assert_eq!(char_poly(&z).unwrap(), UniPoly::from_i64(&[0, 0, 1]));
        let i = QMat::identity(2);
        assert_eq!(char_poly(&i).unwrap(), UniPoly::from_i64(&[1, -2, 1]));
    }

    #[test]
    fn perron_encloses_golden_ratio_square() {
        // t^2 - 3t + 1 has largest root (3+sqrt(5))/2
        let p = UniPoly::from_i64(&[1, -3, 1]);
        let tol = rat_pq(1, 1000);
        let (lo, hi) = perron_radius(&p, &tol).unwrap();
        assert!(&hi - &lo <= tol);
        // Check (3+sqrt5)/2 in [lo,hi] exactly: lo <= r iff (2lo-3)^2 <= 5
        // (valid since both endpoints are >= 3/2 here).
        let check = |x: &Rat, upper: bool| {
            let t = x * rat(2) - rat(3);
            assert!(t.is_positive(), "endpoint below 3/2");
            let t2 = t.clone() * t;
            if upper {
                assert!(t2 >= rat(5), "upper endpoint must dominate the root");
            } else {
                assert!(t2 <= rat(5), "lower endpoint must not exceed the root");
            }
        };
        check(&lo, false);
        check(&hi, true);
    }

    #[test]
    fn perron_exact_on_linear_and_pure_power() {
        let p = UniPoly::from_i64(&[-2, 1]); // t - 2
        let (lo, hi) = perron_radius(&p, &rat_pq(1, 100)).unwrap();
        assert_eq!((lo, hi), (rat(2), rat(2)));
        let q = UniPoly::from_i64(&[0, 0, 1]); // t^2
        let (lo, hi) = perron_radius(&q, &rat_pq(1, 100)).unwrap();
        assert_eq!((lo, hi), (Rat::zero(), Rat::zero()));
    }

    #[test]
    fn perron_rejects_bad_inputs() {
        let p = UniPoly::from_i64(&[3]);
        assert!(perron_radius(&p, &rat_pq(1, 10)).is_err());
        let q = UniPoly::from_i64(&[-2, 1]);
        assert!(perron_radius(&q, &rat(0)).is_err());
    }

    #[test]
    fn perron_intervals_are_nested_as_tol_shrinks() {
        let p = UniPoly::from_i64(&[1, -3, 1]);
        let (lo1, hi1) = perron_radius(&p, &rat_pq(1, 10)).unwrap();
        let (lo2, hi2) = perron_radius(&p, &rat_pq(1, 10_000)).unwrap();
        assert!(lo2 >= lo1 && hi2 <= hi1);
    }
}
