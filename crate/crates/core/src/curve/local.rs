//! Valuations, residues and uniformizers at closed points.

use super::function::{Function, Repr};
use super::model::{Curve, Place};
use crate::error::{Error, Result};
use crate::ff::{Fe, Poly};

/// Stand-in for the order of the zero polynomial.
const INF: i64 = i64::MAX / 4;

fn mult(p: &Poly, x0: &Fe) -> i64 {
    if p.is_zero() {
        INF
    } else {
        p.root_multiplicity(x0) as i64
    }
}

fn strip(p: &Poly, x0: &Fe, k: i64) -> Poly {
    if p.is_zero() || k == 0 {
        return p.clone();
    }
    p.div_exact(&Poly::linear(x0).pow(k as u64)).expect("root multiplicity")
}

fn check_place(curve: &Curve, place: &Place) -> Result<()> {
    match (curve.is_line(), place) {
        (true, Place::Infinity | Place::Finite(_)) | (false, Place::Origin | Place::Affine(..)) => Ok(()),
        _ => Err(Error::structural(format!("{place} is not a place of {curve}"))),
    }
}

/// Order of `a(x) + b(x)·y` at a rational point.
pub(crate) fn order_of_numerator(curve: &Curve, a: &Poly, b: &Poly, place: &Place) -> i64 {
    match place {
        Place::Origin => {
            let oa = if a.is_zero() { INF } else { -2 * a.deg_i64() };
            let ob = if b.is_zero() { INF } else { -2 * b.deg_i64() - 3 };
            oa.min(ob)
        }
        Place::Affine(x0, y0) if y0.is_zero() => (2 * mult(a, x0)).min((2 * mult(b, x0)).saturating_add(1)),
        Place::Affine(x0, y0) => {
            let k = mult(a, x0).min(mult(b, x0));
            let a1 = strip(a, x0, k);
            let b1 = strip(b, x0, k);
            let v = &a1.eval(x0) + &(&b1.eval(x0) * y0);
            if !v.is_zero() {
                return k;
            }
            // a1 - b1*y is a unit at this point, so the zero order of a1 + b1*y is
            // the multiplicity of x0 in the norm a1^2 - b1^2*F
            let f = curve.weierstrass_rhs().unwrap();
            let norm = &(&a1 * &a1) - &(&(&b1 * &b1) * &f);
            k + mult(&norm, x0)
        }
        _ => unreachable!("elliptic places only"),
    }
}

/// Order of a polynomial `c(x)` at a rational point of an elliptic curve.
pub(crate) fn order_of_x_poly(c: &Poly, place: &Place) -> i64 {
    match place {
        Place::Origin => -2 * c.deg_i64(),
        Place::Affine(x0, y0) if y0.is_zero() => 2 * mult(c, x0),
        Place::Affine(x0, _) => mult(c, x0),
        _ => unreachable!("elliptic places only"),
    }
}

/// The discrete valuation `ord_x(f)`.
pub fn order_at(f: &Function, place: &Place) -> Result<i64> {
    check_place(f.curve(), place)?;
    Ok(match (f.repr(), place) {
        (Repr::Ratio { num, den }, Place::Infinity) => den.deg_i64() - num.deg_i64(),
        (Repr::Ratio { num, den }, Place::Finite(pi)) => num.valuation(pi).0 as i64 - den.valuation(pi).0 as i64,
        (Repr::Ell { a, b, c }, _) => order_of_numerator(f.curve(), a, b, place) - order_of_x_poly(c, place),
        _ => unreachable!(),
    })
}

/// The image of a function of order zero in the residue field `k(x)`.
pub fn evaluate_at(f: &Function, place: &Place) -> Result<Fe> {
    let ord = order_at(f, place)?;
    if ord != 0 {
        return Err(Error::domain(format!("cannot evaluate {f} at {place}: order there is {ord}, not 0")));
    }
    let curve = f.curve();
    Ok(match (f.repr(), place) {
        (Repr::Ratio { num, den }, Place::Infinity) => &num.lc() / &den.lc(),
        (Repr::Ratio { num, den }, Place::Finite(pi)) => {
            if pi.degree() == Some(1) {
                let r = -&pi.coeff(0);
                &num.eval(&r) / &den.eval(&r)
            } else {
                let res = curve.residue_field(place);
                let lift = |p: &Poly| res.from_base_coeffs(p.rem(pi).unwrap().coeffs()).unwrap();
                &lift(num) / &lift(den)
            }
        }
        (Repr::Ell { a, b, c }, Place::Origin) => {
            let _ = b;
            &a.lc() / &c.lc()
        }
        (Repr::Ell { a, b, c }, Place::Affine(x0, y0)) => {
            // clear common factors (x - x0) first
            let k = mult(a, x0).min(mult(b, x0)).min(mult(c, x0));
            let (a, b, c) = (strip(a, x0, k), strip(b, x0, k), strip(c, x0, k));
            let kc = mult(&c, x0);
            if kc == 0 {
                &(&a.eval(x0) + &(&b.eval(x0) * y0)) / &c.eval(x0)
            } else if y0.is_zero() {
                &strip(&a, x0, kc).eval(x0) / &strip(&c, x0, kc).eval(x0)
            } else {
                let fx = curve.weierstrass_rhs().unwrap();
                let conj = &a.eval(x0) - &(&b.eval(x0) * y0);
                debug_assert!(!conj.is_zero());
                let norm = &(&a * &a) - &(&(&b * &b) * &fx);
                let top = strip(&norm, x0, kc).eval(x0);
                let bottom = &strip(&c, x0, kc).eval(x0) * &conj;
                &top / &bottom
            }
        }
        _ => unreachable!(),
    })
}

/// The fixed uniformizer at a place: `pi`, `1/t`, `x - x0`, `y`, or `x/y`.
pub fn uniformizer(curve: &Curve, place: &Place) -> Result<Function> {
    check_place(curve, place)?;
    let k = curve.base();
    Ok(match place {
        Place::Finite(pi) => Function::from_poly(curve, pi.clone())?,
        Place::Infinity => Function::coordinate(curve).inv(),
        Place::Affine(x0, y0) if y0.is_zero() => Function::y(curve)?,
        Place::Affine(x0, _) => Function::from_poly(curve, Poly::linear(x0))?,
        Place::Origin => {
            let _ = k;
            &Function::coordinate(curve) / &Function::y(curve)?
        }
    })
}

/// Coefficient of the lowest term of `f` expanded in the uniformizer at the base
/// place (`1/t` on the line, `x/y` on an elliptic curve).
pub fn leading_coefficient_at_base(f: &Function) -> Fe {
    match f.repr() {
        Repr::Ratio { num, den } => &num.lc() / &den.lc(),
        Repr::Ell { a, b, c } => {
            // x = s^-2(1 + ...), y = s^-3(1 + ...) for s = x/y
            let lead = if b.is_zero() {
                a.lc()
            } else if a.is_zero() || 2 * b.deg_i64() + 3 > 2 * a.deg_i64() {
                b.lc()
            } else {
                a.lc()
            };
            &lead / &c.lc()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::Field;

    fn e5() -> (Field, Curve) {
        let k = Field::prime(5).unwrap();
        let e = Curve::elliptic(&k, k.from_u64(4), k.zero()).unwrap();
        (k, e)
    }

    #[test]
    fn line_orders() {
        let k = Field::prime(5).unwrap();
        let line = Curve::projective_line(&k);
        let f = Function::ratio(&line, Poly::from_u64s(&k, &[0, 0, 1]), Poly::from_u64s(&k, &[4, 1])).unwrap();
        assert_eq!(order_at(&f, &Place::Finite(Poly::from_u64s(&k, &[0, 1]))).unwrap(), 2);
        assert_eq!(order_at(&f, &Place::Infinity).unwrap(), -1);
    }

    #[test]
    fn elliptic_x_at_two_torsion() {
        let (k, e) = e5();
        let x = Function::coordinate(&e);
        assert_eq!(order_at(&x, &Place::Affine(k.zero(), k.zero())).unwrap(), 2);
        assert_eq!(order_at(&x, &Place::Origin).unwrap(), -2);
        let y = Function::y(&e).unwrap();
        let f = &y / &x;
        let err = evaluate_at(&f, &Place::Affine(k.zero(), k.zero())).unwrap_err();
        assert!(err.to_string().contains("order there is -1"));
    }

    #[test]
    fn line_evaluation() {
        let k7 = Field::prime(7).unwrap();
        let line = Curve::projective_line(&k7);
        let f = Function::from_poly(&line, Poly::from_u64s(&k7, &[1, 6])).unwrap();
        assert_eq!(evaluate_at(&f, &Place::Finite(Poly::from_u64s(&k7, &[0, 1]))).unwrap(), k7.one());

        let k3 = Field::prime(3).unwrap();
        let line3 = Curve::projective_line(&k3);
        let pi = Poly::from_u64s(&k3, &[1, 0, 1]);
        let g = Function::from_poly(&line3, Poly::from_u64s(&k3, &[1, 1])).unwrap();
        let v = evaluate_at(&g, &Place::Finite(pi)).unwrap();
        assert_eq!(v.render(), "u+1");
        assert_eq!(v.field().order(), 9);
    }

    #[test]
    fn uniformizers_have_order_one() {
        let (k, e) = e5();
        for place in [Place::Origin, Place::Affine(k.zero(), k.zero()), Place::Affine(k.from_u64(2), k.from_u64(1))] {
            let u = uniformizer(&e, &place).unwrap();
            assert_eq!(order_at(&u, &place).unwrap(), 1, "{place}");
        }
    }

    #[test]
    fn evaluation_through_a_pole_cancellation() {
        let (k, e) = e5();
        // (y - 1)/(x - 2) at (2, 1): y - 1 vanishes to order 1, x - 2 to order 1
        let f = Function::elliptic(&e, Poly::from_u64s(&k, &[4]), Poly::one(&k), Poly::from_u64s(&k, &[3, 1])).unwrap();
        let p = Place::Affine(k.from_u64(2), k.from_u64(1));
        assert_eq!(order_at(&f, &p).unwrap(), 0);
        // derivative of y along the curve: 2y y' = 3x^2 - 1, so y'(2) = 11/2 = 3
        assert_eq!(evaluate_at(&f, &p).unwrap(), k.from_u64(3));
    }
}
