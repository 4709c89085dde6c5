//! Nonzero rational functions in canonical form.
//!
//! On the line a function is `num/den` with coprime polynomials in `t` and a monic
//! denominator. On `y^2 = F(x)` it is `(a(x) + b(x)·y)/c(x)` with
//! `gcd(a, b, c) = 1` and `c` monic; that representation is unique.

use std::fmt;
use std::ops::{Div, Mul};

use rand::Rng;

use super::model::{Curve, CurveKind};
use crate::error::{Error, Result};
use crate::ff::{Fe, Field, Poly};

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) enum Repr {
    Ratio { num: Poly, den: Poly },
    Ell { a: Poly, b: Poly, c: Poly },
}

/// A nonzero element of the function field of a [`Curve`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Function {
    curve: Curve,
    repr: Repr,
}

impl fmt::Debug for Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn wrap(s: String) -> String {
    if s.contains('+') {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = match &self.repr {
            Repr::Ratio { num, den } => (num.to_string_in("t"), den.to_string_in("t")),
            Repr::Ell { a, b, c } => {
                let mut parts = Vec::new();
                if !a.is_zero() {
                    parts.push(a.to_string_in("x"));
                }
                if !b.is_zero() {
                    parts.push(if b.is_one() { "y".to_string() } else { format!("{}*y", wrap(b.to_string_in("x"))) });
                }
                (parts.join("+"), c.to_string_in("x"))
            }
        };
        if den == "1" {
            write!(f, "{num}")
        } else {
            write!(f, "{}/{}", wrap(num), wrap(den))
        }
    }
}

impl Function {
    /// `num/den` on the projective line.
    pub fn ratio(curve: &Curve, num: Poly, den: Poly) -> Result<Function> {
        if !curve.is_line() {
            return Err(Error::structural("num/den form is for the projective line"));
        }
        if num.field() != curve.base() || den.field() != curve.base() {
            return Err(Error::structural("polynomials over the wrong field"));
        }
        if num.is_zero() {
            return Err(Error::domain("the zero function is not a unit"));
        }
        if den.is_zero() {
            return Err(Error::arithmetic("zero denominator"));
        }
        Ok(Self::normalize(curve, Repr::Ratio { num, den }))
    }

    /// `(a + b·y)/c` on an elliptic curve.
    pub fn elliptic(curve: &Curve, a: Poly, b: Poly, c: Poly) -> Result<Function> {
        if curve.is_line() {
            return Err(Error::structural("(a + b*y)/c form is for elliptic curves"));
        }
        for p in [&a, &b, &c] {
            if p.field() != curve.base() {
                return Err(Error::structural("polynomials over the wrong field"));
            }
        }
        if a.is_zero() && b.is_zero() {
            return Err(Error::domain("the zero function is not a unit"));
        }
        if c.is_zero() {
            return Err(Error::arithmetic("zero denominator"));
        }
        Ok(Self::normalize(curve, Repr::Ell { a, b, c }))
    }

    fn normalize(curve: &Curve, repr: Repr) -> Function {
        let repr = match repr {
            Repr::Ratio { num, den } => {
                let g = num.gcd(&den);
                let (mut num, mut den) =
                    if g.is_one() { (num, den) } else { (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap()) };
                if !den.is_monic() {
                    let inv = den.lc().inv().unwrap();
                    num = num.scale(&inv);
                    den = den.scale(&inv);
                }
                Repr::Ratio { num, den }
            }
            Repr::Ell { a, b, c } => {
                let g = a.gcd(&b).gcd(&c);
                let (mut a, mut b, mut c) = if g.is_one() {
                    (a, b, c)
                } else {
                    (a.div_exact(&g).unwrap(), b.div_exact(&g).unwrap(), c.div_exact(&g).unwrap())
                };
                if !c.is_monic() {
                    let inv = c.lc().inv().unwrap();
                    a = a.scale(&inv);
                    b = b.scale(&inv);
                    c = c.scale(&inv);
                }
                Repr::Ell { a, b, c }
            }
        };
        Function { curve: curve.clone(), repr }
    }

    pub fn constant(curve: &Curve, c: Fe) -> Result<Function> {
        let c = curve.base().embed(&c)?;
        if c.is_zero() {
            return Err(Error::domain("the zero function is not a unit"));
        }
        let k = curve.base();
        Ok(match curve.kind() {
            CurveKind::Line => {
                Function { curve: curve.clone(), repr: Repr::Ratio { num: Poly::constant(c), den: Poly::one(k) } }
            }
            CurveKind::Elliptic { .. } => Function {
                curve: curve.clone(),
                repr: Repr::Ell { a: Poly::constant(c), b: Poly::zero(k), c: Poly::one(k) },
            },
        })
    }

    pub fn one(curve: &Curve) -> Function {
        Function::constant(curve, curve.base().one()).expect("one is nonzero")
    }

    /// A nonzero polynomial in the curve's base coordinate (`t` or `x`).
    pub fn from_poly(curve: &Curve, p: Poly) -> Result<Function> {
        let k = curve.base().clone();
        match curve.kind() {
            CurveKind::Line => Function::ratio(curve, p, Poly::one(&k)),
            CurveKind::Elliptic { .. } => Function::elliptic(curve, p, Poly::zero(&k), Poly::one(&k)),
        }
    }

    /// The coordinate `t` on the line or `x` on an elliptic curve.
    pub fn coordinate(curve: &Curve) -> Function {
        Function::from_poly(curve, Poly::x(curve.base())).expect("nonzero")
    }

    /// The coordinate `y` on an elliptic curve.
    pub fn y(curve: &Curve) -> Result<Function> {
        let k = curve.base().clone();
        Function::elliptic(curve, Poly::zero(&k), Poly::one(&k), Poly::one(&k))
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub(crate) fn repr(&self) -> &Repr {
        &self.repr
    }

    /// `(num, den)` on the line.
    pub fn as_ratio(&self) -> Option<(&Poly, &Poly)> {
        match &self.repr {
            Repr::Ratio { num, den } => Some((num, den)),
            _ => None,
        }
    }

    /// `(a, b, c)` on an elliptic curve.
    pub fn as_elliptic(&self) -> Option<(&Poly, &Poly, &Poly)> {
        match &self.repr {
            Repr::Ell { a, b, c } => Some((a, b, c)),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Ratio { num, den } => num.is_one() && den.is_one(),
            Repr::Ell { a, b, c } => a.is_one() && b.is_zero() && c.is_one(),
        }
    }

    /// The value when the function is a constant.
    pub fn as_constant(&self) -> Option<Fe> {
        match &self.repr {
            Repr::Ratio { num, den } if num.is_constant() && den.is_one() => Some(num.lc()),
            Repr::Ell { a, b, c } if a.is_constant() && b.is_zero() && c.is_one() => Some(a.lc()),
            _ => None,
        }
    }

    fn check(&self, other: &Function) -> Result<()> {
        if self.curve != other.curve {
            return Err(Error::structural("functions on different curves"));
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &Function) -> Result<Function> {
        self.check(other)?;
        let repr = match (&self.repr, &other.repr) {
            (Repr::Ratio { num: n1, den: d1 }, Repr::Ratio { num: n2, den: d2 }) => {
                Repr::Ratio { num: n1 * n2, den: d1 * d2 }
            }
            (Repr::Ell { a: a1, b: b1, c: c1 }, Repr::Ell { a: a2, b: b2, c: c2 }) => {
                let f = self.curve.weierstrass_rhs().unwrap();
                let a = &(a1 * a2) + &(&(b1 * b2) * &f);
                let b = &(a1 * b2) + &(a2 * b1);
                Repr::Ell { a, b, c: c1 * c2 }
            }
            _ => unreachable!("curve kinds agree"),
        };
        Ok(Self::normalize(&self.curve, repr))
    }

    pub fn inv(&self) -> Function {
        let repr = match &self.repr {
            Repr::Ratio { num, den } => Repr::Ratio { num: den.clone(), den: num.clone() },
            Repr::Ell { a, b, c } => {
                let f = self.curve.weierstrass_rhs().unwrap();
                let norm = &(a * a) - &(&(b * b) * &f);
                Repr::Ell { a: c * a, b: -&(c * b), c: norm }
            }
        };
        Self::normalize(&self.curve, repr)
    }

    pub fn checked_div(&self, other: &Function) -> Result<Function> {
        self.checked_mul(&other.inv())
    }

    pub fn pow(&self, e: i64) -> Function {
        let mut base = if e < 0 { self.inv() } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Function::one(&self.curve);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, s: &Fe) -> Result<Function> {
        self.checked_mul(&Function::constant(&self.curve, s.clone())?)
    }

    /// Sum of two functions; an error when the sum vanishes.
    pub fn checked_add(&self, other: &Function) -> Result<Function> {
        self.check(other)?;
        match (&self.repr, &other.repr) {
            (Repr::Ratio { num: n1, den: d1 }, Repr::Ratio { num: n2, den: d2 }) => {
                Function::ratio(&self.curve, &(n1 * d2) + &(n2 * d1), d1 * d2)
            }
            (Repr::Ell { a: a1, b: b1, c: c1 }, Repr::Ell { a: a2, b: b2, c: c2 }) => {
                Function::elliptic(&self.curve, &(a1 * c2) + &(a2 * c1), &(b1 * c2) + &(b2 * c1), c1 * c2)
            }
            _ => unreachable!("curve kinds agree"),
        }
    }

    pub fn neg(&self) -> Function {
        self.scale(&-&self.curve.base().one()).expect("-1 is nonzero")
    }

    pub fn checked_sub(&self, other: &Function) -> Result<Function> {
        self.checked_add(&other.neg())
    }

    /// Maps the function to the same curve over an extension field.
    pub fn base_change(&self, curve: &Curve) -> Result<Function> {
        let ext = curve.base();
        match &self.repr {
            Repr::Ratio { num, den } => Function::ratio(curve, num.embed(ext)?, den.embed(ext)?),
            Repr::Ell { a, b, c } => Function::elliptic(curve, a.embed(ext)?, b.embed(ext)?, c.embed(ext)?),
        }
    }

    /// A rough size measure: the largest polynomial degree in the representation.
    pub fn height(&self) -> usize {
        match &self.repr {
            Repr::Ratio { num, den } => num.degree().unwrap_or(0).max(den.degree().unwrap_or(0)),
            Repr::Ell { a, b, c } => {
                a.degree().unwrap_or(0).max(b.degree().unwrap_or(0) + 2).max(c.degree().unwrap_or(0))
            }
        }
    }

    /// A random function on the line: `num/den` with degrees up to `max_deg`.
    pub fn random_on_line<R: Rng + ?Sized>(curve: &Curve, max_deg: usize, rng: &mut R) -> Function {
        let k: &Field = curve.base();
        loop {
            let num = Poly::random(k, max_deg, rng);
            let den = Poly::random(k, max_deg, rng);
            if let Ok(f) = Function::ratio(curve, num, den) {
                return f;
            }
        }
    }
}

impl<'a> Mul<&'a Function> for &'a Function {
    type Output = Function;
    fn mul(self, rhs: &'a Function) -> Function {
        self.checked_mul(rhs).expect("Function::mul")
    }
}

impl<'a> Div<&'a Function> for &'a Function {
    type Output = Function;
    fn div(self, rhs: &'a Function) -> Function {
        self.checked_div(rhs).expect("Function::div")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elliptic_inverse_and_normal_form() {
        let k = Field::prime(5).unwrap();
        let e = Curve::elliptic(&k, k.from_u64(4), k.zero()).unwrap();
        let x = Function::coordinate(&e);
        let y = Function::y(&e).unwrap();
        let f = &(&x * &y) / &(&x * &x);
        assert!((&f * &f.inv()).is_one());
        // y^2 = x^3 - x, so y^2 / x = x^2 - 1
        let g = &(&y * &y) / &x;
        assert_eq!(g.to_string(), "x^2+4");
        assert_eq!(f.to_string(), "y/x");
    }

    #[test]
    fn line_normal_form() {
        let k = Field::prime(5).unwrap();
        let line = Curve::projective_line(&k);
        let f = Function::ratio(&line, Poly::from_u64s(&k, &[0, 2, 2]), Poly::from_u64s(&k, &[0, 2])).unwrap();
        assert_eq!(f.to_string(), "t+1");
        assert!(Function::ratio(&line, Poly::zero(&k), Poly::one(&k)).is_err());
        let t = Function::coordinate(&line);
        assert!(t.checked_sub(&t).is_err());
    }
}
