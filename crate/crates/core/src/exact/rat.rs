//! Exact rational scalars and root bounds.
//!
//! `Rat` is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator; every operation in this crate is exact. Roots are
//! never taken as floats: `nth_root_bounds` returns a rational enclosure.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rat = num_rational::BigRational;
pub type Int = BigInt;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(int(v))
}

pub fn rat_pq(p: i64, q: i64) -> Rat {
    Rat::new(int(p), int(q))
}

pub fn rat_from_int(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}

/// Render as `"p/q"`, or `"p"` when the denominator is one.
pub fn fmt_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse `"p/q"` or `"p"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<Int> {
        t.trim()
            .parse::<Int>()
            .map_err(|_| Error::InvalidParameter(format!("bad rational literal {s:?}")))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::InvalidParameter(format!(
                    "zero denominator in {s:?}"
                )));
            }
            Ok(Rat::new(parse_int(p)?, den))
        }
    }
}

/// Approximate decimal rendering for human-facing tables. Display only.
pub fn approx(x: &Rat) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // Fall back to a scaled quotient when the parts overflow f64.
        let scaled = (x * Rat::from_integer(int(1_000_000))).to_integer();
        scaled.to_f64().unwrap_or(f64::NAN) / 1e6
    })
}

fn floor_nth_root(x: &Int, n: u32) -> Int {
    debug_assert!(!x.is_negative());
    if x.is_zero() {
        return Int::zero();
    }
    x.nth_root(n)
}

/// Rational enclosure `[lo, hi]` of `x^(1/n)` for `x >= 0`, with
/// `hi - lo <= 2^-precision_bits`.
pub fn nth_root_bounds(x: &Rat, n: u32, precision_bits: u32) -> Result<(Rat, Rat)> {
    if x.is_negative() {
        return Err(Error::InvalidParameter(
            "nth root of a negative rational".into(),
        ));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("zeroth root".into()));
    }
    if x.is_zero() {
        return Ok((Rat::zero(), Rat::zero()));
    }
    if n == 1 {
        return Ok((x.clone(), x.clone()));
    }
    // x = a/b in lowest terms. (a/b)^(1/n) = (a * b^(n-1))^(1/n) / b.
    // Scale by 2^(n*s) so the integer root carries s extra bits.
    let a = x.numer();
    let b = x.denom();
    let s = precision_bits;
    let scaled = a * b.pow(n - 1) << (n as u64 * s as u64);
    let r = floor_nth_root(&scaled, n);
    let den = Rat::from_integer(b << (s as u64));
    let lo = Rat::from_integer(r.clone()) / den.clone();
    let hi = Rat::from_integer(r + Int::one()) / den;
    // Exactness check: if lo^n == x the root is rational.
    if lo.clone().pow(n as i32) == *x {
        return Ok((lo.clone(), lo));
    }
    Ok((lo, hi))
}

/// Compare `a^(1/i)` with `c^(1/j)` exactly (`a, c >= 0`) by cross-powering.
pub fn cmp_roots(a: &Rat, i: u32, c: &Rat, j: u32) -> std::cmp::Ordering {
    let left = a.clone().pow(j as i32);
    let right = c.clone().pow(i as i32);
    left.cmp(&right)
}

/// Sign of a big integer as -1, 0, 1.
pub fn sign(x: &Int) -> i32 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_and_parse_round_trip() {
        let x = rat_pq(-22, 7);
        assert_eq!(fmt_rat(&x), "-22/7");
        assert_eq!(parse_rat("-22/7").unwrap(), x);
        assert_eq!(parse_rat("5").unwrap(), rat(5));
        assert_eq!(fmt_rat(&rat(5)), "5");
        assert!(parse_rat("1/0").is_err());
    }

    #[test]
    fn root_bounds_enclose() {
        let two = rat(2);
        let (lo, hi) = nth_root_bounds(&two, 2, 30).unwrap();
        assert!(lo.clone().pow(2) <= two && two <= hi.clone().pow(2));
        assert!(hi - lo <= rat_pq(1, 1 << 30));
    }

    #[test]
    fn root_bounds_exact_for_perfect_powers() {
        let (lo, hi) = nth_root_bounds(&rat_pq(8, 27), 3, 10).unwrap();
        assert_eq!(lo, rat_pq(2, 3));
        assert_eq!(hi, rat_pq(2, 3));
    }

    #[test]
    fn cross_power_comparison() {
        // 3^(1/1) vs 8^(1/2): 3 > 2.828
        assert_eq!(cmp_roots(&rat(3), 1, &rat(8), 2), std::cmp::Ordering::Greater);
        assert_eq!(cmp_roots(&rat(4), 2, &rat(2), 1), std::cmp::Ordering::Equal);
    }
}
