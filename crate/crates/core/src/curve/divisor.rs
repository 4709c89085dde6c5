use std::collections::BTreeMap;
use std::fmt;

use super::function::{Function, Repr};
use super::local::{order_of_numerator, order_of_x_poly};
use super::model::{Curve, Place};
use crate::error::{Error, Result};
use crate::ff::{factor, Poly};

/// A finite formal sum of places with nonzero integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Divisor {
    curve: Curve,
    coeffs: BTreeMap<Place, i64>,
}

impl fmt::Debug for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// `c*(place)` terms joined by signs, in place order; `0` for the zero divisor.
impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (place, &c)) in self.coeffs.iter().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            let place_s = match place {
                Place::Infinity | Place::Origin => format!("({place})"),
                _ => place.to_string(),
            };
            write!(f, "{sign}{}*{place_s}", c.abs())?;
        }
        Ok(())
    }
}

impl Divisor {
    pub fn zero(curve: &Curve) -> Divisor {
        Divisor { curve: curve.clone(), coeffs: BTreeMap::new() }
    }

    /// `n·(place)` after validating the place.
    pub fn point(curve: &Curve, place: Place, n: i64) -> Result<Divisor> {
        Divisor::from_terms(curve, [(place, n)])
    }

    pub fn from_terms(curve: &Curve, terms: impl IntoIterator<Item = (Place, i64)>) -> Result<Divisor> {
        let mut d = Divisor::zero(curve);
        for (place, n) in terms {
            curve.check_place(&place)?;
            d.add_term(place, n);
        }
        Ok(d)
    }

    pub(crate) fn add_term(&mut self, place: Place, n: i64) {
        if n == 0 {
            return;
        }
        let total = self.coefficient(&place) + n;
        if total == 0 {
            self.coeffs.remove(&place);
        } else {
            self.coeffs.insert(place, total);
        }
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn coefficient(&self, place: &Place) -> i64 {
        self.coeffs.get(place).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Place, i64)> {
        self.coeffs.iter().map(|(p, &c)| (p, c))
    }

    pub fn support(&self) -> impl Iterator<Item = &Place> {
        self.coeffs.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `Σ deg(x)·D(x)`.
    pub fn degree(&self) -> i64 {
        self.coeffs.iter().map(|(p, &c)| p.degree() * c).sum()
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|&c| c > 0)
    }

    pub fn checked_add(&self, other: &Divisor) -> Result<Divisor> {
        if self.curve != other.curve {
            return Err(Error::structural("divisors on different curves"));
        }
        let mut out = self.clone();
        for (p, &c) in &other.coeffs {
            out.add_term(p.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, n: i64) -> Divisor {
        let mut out = Divisor::zero(&self.curve);
        if n != 0 {
            for (p, &c) in &self.coeffs {
                out.coeffs.insert(p.clone(), c * n);
            }
        }
        out
    }

    pub fn neg(&self) -> Divisor {
        self.scale(-1)
    }

    pub fn checked_sub(&self, other: &Divisor) -> Result<Divisor> {
        self.checked_add(&other.neg())
    }

    pub fn base_change(&self, curve: &Curve) -> Result<Divisor> {
        let terms =
            self.coeffs.iter().map(|(p, &c)| Ok((p.base_change(curve.base())?, c))).collect::<Result<Vec<_>>>()?;
        Divisor::from_terms(curve, terms)
    }
}

/// The principal divisor `div(f) = Σ ord_x(f)·x`.
///
/// On an elliptic curve every zero and pole must be a rational point; otherwise
/// the curve has to be base-changed first and a domain error is returned.
pub fn divisor_of(f: &Function) -> Result<Divisor> {
    let curve = f.curve();
    let mut d = Divisor::zero(curve);
    match f.repr() {
        Repr::Ratio { num, den } => {
            for (pi, m) in factor(num)?.factors {
                d.add_term(Place::Finite(pi), m as i64);
            }
            for (pi, m) in factor(den)?.factors {
                d.add_term(Place::Finite(pi), -(m as i64));
            }
            d.add_term(Place::Infinity, den.deg_i64() - num.deg_i64());
        }
        Repr::Ell { a, b, c } => {
            let fx = curve.weierstrass_rhs().unwrap();
            let norm = &(a * a) - &(&(b * b) * &fx);
            let zeros = rational_points_over(&norm, norm.deg_i64(), &fx, |p| order_of_numerator(curve, a, b, p))?;
            let poles = rational_points_over(c, 2 * c.deg_i64(), &fx, |p| order_of_x_poly(c, p))?;
            for (p, n) in zeros {
                d.add_term(p, n);
            }
            for (p, n) in poles {
                d.add_term(p, -n);
            }
            d.add_term(Place::Origin, 2 * c.deg_i64() - norm.deg_i64());
        }
    }
    Ok(d)
}

/// Affine rational points over the roots of `h` with the orders given by `ord`.
/// The affine zeros of `a + b*y` have total degree `deg(a^2 - b^2*F)` and those of
/// `c(x)` total degree `2 deg c`, so the rational orders reach `expected` exactly
/// when no zero sits at a closed point of higher degree.
fn rational_points_over(h: &Poly, expected: i64, fx: &Poly, ord: impl Fn(&Place) -> i64) -> Result<Vec<(Place, i64)>> {
    let mut out = Vec::new();
    let mut total = 0;
    for (x0, _) in h.roots() {
        let Some(y0) = fx.eval(&x0).sqrt() else { continue };
        let mut pts = vec![Place::Affine(x0.clone(), y0.clone())];
        if !y0.is_zero() {
            pts.push(Place::Affine(x0.clone(), -&y0));
        }
        for p in pts {
            let n = ord(&p);
            if n != 0 {
                total += n;
                out.push((p, n));
            }
        }
    }
    if total != expected {
        return Err(Error::domain("function has zeros or poles at closed points of degree > 1; extend the base field"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::Field;

    #[test]
    fn line_divisors() {
        let k = Field::prime(5).unwrap();
        let line = Curve::projective_line(&k);
        let t = Function::coordinate(&line);
        assert_eq!(divisor_of(&t).unwrap().to_string(), "-1*(inf)+1*(t)");
        let k3 = Field::prime(3).unwrap();
        let l3 = Curve::projective_line(&k3);
        let f = Function::from_poly(&l3, Poly::from_u64s(&k3, &[1, 0, 1])).unwrap();
        let d = divisor_of(&f).unwrap();
        assert_eq!(d.to_string(), "-2*(inf)+1*(t^2+1)");
        assert_eq!(d.degree(), 0);
    }

    #[test]
    fn elliptic_x() {
        let k = Field::prime(5).unwrap();
        let e = Curve::elliptic(&k, k.from_u64(4), k.zero()).unwrap();
        let d = divisor_of(&Function::coordinate(&e)).unwrap();
        assert_eq!(d.to_string(), "-2*(O)+2*(0,0)");
    }

    #[test]
    fn non_rational_support_is_reported() {
        let k = Field::prime(5).unwrap();
        let e = Curve::elliptic(&k, k.from_u64(4), k.zero()).unwrap();
        // x^2 - 2 has no roots mod 5
        let f = Function::from_poly(&e, Poly::from_u64s(&k, &[3, 0, 1])).unwrap();
        assert!(matches!(divisor_of(&f), Err(Error::Domain(_))));
    }
}
