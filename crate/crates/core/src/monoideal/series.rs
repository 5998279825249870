use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// `numerator(t) / denominator(t)` with integer coefficients listed by
/// ascending power of `t`. Canonical form: the fraction is reduced and the
/// denominator has constant term `1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalSeries {
    pub numerator: Vec<BigInt>,
    pub denominator: Vec<BigInt>,
}

impl RationalSeries {
    /// First `len` Taylor coefficients at `t = 0`.
    pub fn expand(&self, len: usize) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = Vec::with_capacity(len);
        // denominator[0] = 1, so c_k = num_k − Σ_{i≥1} den_i c_{k−i}
        for k in 0..len {
            let mut c = self.numerator.get(k).cloned().unwrap_or_else(BigInt::zero);
            for (i, d) in self.denominator.iter().enumerate().skip(1) {
                if i > k {
                    break;
                }
                c -= d * &out[k - i];
            }
            out.push(c);
        }
        out
    }

    /// True iff the series is a polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.denominator.len() == 1
    }

    /// Multiplicity of `t = 1` as a root of the denominator.
    pub fn pole_order_at_one(&self) -> usize {
        let mut den: Vec<BigRational> = self
            .denominator
            .iter()
            .cloned()
            .map(BigRational::from_integer)
            .collect();
        let root = vec![-BigRational::one(), BigRational::one()];
        let mut k = 0;
        while den.len() > 1 {
            let (q, r) = divrem(&den, &root);
            if !r.is_empty() {
                break;
            }
            den = q;
            k += 1;
        }
        k
    }
}

fn fmt_poly(coeffs: &[BigInt], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    if coeffs.iter().all(Zero::is_zero) {
        return write!(f, "0");
    }
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        match k {
            0 => write!(f, "{mag}")?,
            _ => {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                write!(f, "t")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
    }
    Ok(())
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num_terms = self.numerator.iter().filter(|c| !c.is_zero()).count();
        if self.is_polynomial() {
            return fmt_poly(&self.numerator, f);
        }
        if num_terms > 1 {
            write!(f, "(")?;
            fmt_poly(&self.numerator, f)?;
            write!(f, ")")?;
        } else {
            fmt_poly(&self.numerator, f)?;
        }
        write!(f, "/(")?;
        fmt_poly(&self.denominator, f)?;
        write!(f, ")")
    }
}

// Dense univariate polynomials over ℚ, ascending powers, no trailing zeros.

pub(crate) type QPoly = Vec<BigRational>;

fn trim(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn mul(a: &[BigRational], b: &[BigRational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub(crate) fn add(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] += y;
    }
    trim(out)
}

pub(crate) fn divrem(a: &[BigRational], b: &[BigRational]) -> (QPoly, QPoly) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = b.last().expect("nonzero").clone();
    let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().expect("nonzero") / &lead;
        for (i, y) in b.iter().enumerate() {
            r[shift + i] -= &c * y;
        }
        q[shift] = c;
        r = trim(r);
    }
    (trim(q), r)
}

fn gcd(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    x
}

/// Coefficients of `det(I − tM)` by ascending power of `t`, computed with
/// the Faddeev–LeVerrier recursion in exact arithmetic.
pub(crate) fn reversed_charpoly(m: &[Vec<BigInt>]) -> QPoly {
    let n = m.len();
    let a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| row.iter().cloned().map(BigRational::from_integer).collect())
        .collect();
    let mut coeffs = vec![BigRational::one()];
    let mut mk: Vec<Vec<BigRational>> = identity(n);
    for k in 1..=n {
        let am = matmul(&a, &mk);
        let trace: BigRational = (0..n).map(|i| am[i][i].clone()).sum();
        let c = -trace / BigRational::from_integer(BigInt::from(k));
        mk = am;
        for (i, row) in mk.iter_mut().enumerate() {
            row[i] += &c;
        }
        coeffs.push(c);
    }
    trim(coeffs)
}

fn identity(n: usize) -> Vec<Vec<BigRational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn matmul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut out = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

/// Reduces `num/den` and rescales so that the denominator has constant
/// term 1; the result has integer coefficients when the series does.
pub(crate) fn canonical(num: QPoly, den: QPoly) -> RationalSeries {
    let num = trim(num);
    let den = trim(den);
    let g = gcd(&num, &den);
    let (mut num, mut den) = if num.is_empty() {
        (Vec::new(), vec![BigRational::one()])
    } else {
        (divrem(&num, &g).0, divrem(&den, &g).0)
    };
    let c0 = den[0].clone();
    assert!(!c0.is_zero(), "denominator vanishes at t = 0");
    for x in num.iter_mut().chain(den.iter_mut()) {
        *x = &*x / &c0;
    }
    let to_int = |p: &[BigRational]| -> Vec<BigInt> {
        p.iter()
            .map(|x| {
                assert!(x.denom().is_one(), "non-integral coefficient {x}");
                x.numer().clone()
            })
            .collect()
    };
    RationalSeries {
        numerator: to_int(&num),
        denominator: to_int(&den),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn rats(v: &[i64]) -> QPoly {
        v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()
    }

    #[test]
    fn expansion() {
        let s = RationalSeries {
            numerator: ints(&[1, 1]),
            denominator: ints(&[1, -1]),
        };
        assert_eq!(s.expand(5), ints(&[1, 2, 2, 2, 2]));
        let s = RationalSeries {
            numerator: ints(&[1]),
            denominator: ints(&[1, -2, 1]),
        };
        assert_eq!(s.expand(5), ints(&[1, 2, 3, 4, 5]));
        assert_eq!(s.pole_order_at_one(), 2);
    }

    #[test]
    fn canonical_cancels_common_factor() {
        // (1 - t^2)/(1 - t)^2 = (1 + t)/(1 - t)
        let s = canonical(rats(&[1, 0, -1]), rats(&[1, -2, 1]));
        assert_eq!(
            s,
            RationalSeries {
                numerator: ints(&[1, 1]),
                denominator: ints(&[1, -1])
            }
        );
        assert_eq!(s.to_string(), "(1 + t)/(1 - t)");
        let z = canonical(Vec::new(), rats(&[1, -3]));
        assert_eq!(z.to_string(), "0");
        assert!(z.is_polynomial());
    }

    #[test]
    fn charpoly_of_small_matrix() {
        // [[1,1],[0,1]]: det(I − tM) = (1 − t)^2
        let m = vec![ints(&[1, 1]), ints(&[0, 1])];
        assert_eq!(reversed_charpoly(&m), rats(&[1, -2, 1]));
        let full = vec![ints(&[1, 1]), ints(&[1, 1])];
        assert_eq!(reversed_charpoly(&full), rats(&[1, -2]));
    }
}
