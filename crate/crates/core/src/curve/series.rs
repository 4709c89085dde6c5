//! Truncated expansions of `x` and `y` in the uniformizer at an affine point.

use super::model::{Curve, Place};
use crate::ff::{Fe, Field, Poly};

/// Power series truncated to `prec` terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Series {
    pub c: Vec<Fe>,
}

impl Series {
    fn zero(k: &Field, prec: usize) -> Series {
        Series { c: vec![k.zero(); prec] }
    }

    fn constant(k: &Field, v: Fe, prec: usize) -> Series {
        let mut s = Series::zero(k, prec);
        if prec > 0 {
            s.c[0] = v;
        }
        s
    }

    fn prec(&self) -> usize {
        self.c.len()
    }

    pub fn mul(&self, other: &Series) -> Series {
        let n = self.prec();
        let k = self.c.first().map(|x| x.field().clone());
        let Some(k) = k else { return self.clone() };
        let mut out = Series::zero(&k, n);
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate().take(n - i) {
                out.c[i + j] = &out.c[i + j] + &(a * b);
            }
        }
        out
    }

    fn add(&self, other: &Series) -> Series {
        Series { c: self.c.iter().zip(&other.c).map(|(a, b)| a + b).collect() }
    }

    fn scale(&self, s: &Fe) -> Series {
        Series { c: self.c.iter().map(|a| a * s).collect() }
    }

    /// Evaluates a polynomial at this series by Horner's rule.
    pub fn compose(&self, p: &Poly) -> Series {
        let k = p.field();
        let mut acc = Series::zero(k, self.prec());
        for coef in p.coeffs().iter().rev() {
            acc = acc.mul(self).add(&Series::constant(k, coef.clone(), self.prec()));
        }
        acc
    }
}

/// Expansions of `x` and `y` at a rational affine point in its fixed uniformizer
/// (`x - x0` when `y0 != 0`, `y` when `y0 = 0`), to `prec` terms.
pub(crate) fn local_xy(curve: &Curve, place: &Place, prec: usize) -> (Series, Series) {
    let Place::Affine(x0, y0) = place else { panic!("affine points only") };
    let k = curve.base();
    let f = curve.weierstrass_rhs().expect("elliptic curve");
    if prec == 0 {
        return (Series::zero(k, 0), Series::zero(k, 0));
    }
    if !y0.is_zero() {
        // x = x0 + t and y^2 = F(x0 + t); solve for y term by term
        let mut x = Series::constant(k, x0.clone(), prec);
        if prec > 1 {
            x.c[1] = k.one();
        }
        let g = x.compose(&f);
        let mut y = Series::constant(k, y0.clone(), prec);
        let two_y0_inv = (y0 + y0).inv().expect("odd characteristic");
        for n in 1..prec {
            let mut s = g.c[n].clone();
            for i in 1..n {
                s = &s - &(&y.c[i] * &y.c[n - i]);
            }
            y.c[n] = &s * &two_y0_inv;
        }
        (x, y)
    } else {
        // y = t and x = x0 + s with F'(x0)·s + a2·s^2 + s^3 = t^2
        let shifted = shift(&f, x0);
        let d1 = shifted.coeff(1);
        let d1_inv = d1.inv().expect("smooth curve");
        let a2 = shifted.coeff(2);
        let mut t2 = Series::zero(k, prec);
        if prec > 2 {
            t2.c[2] = k.one();
        }
        let mut s = Series::zero(k, prec);
        // each pass fixes at least one more coefficient
        for _ in 0..prec {
            let s2 = s.mul(&s);
            let s3 = s2.mul(&s);
            let rest = t2.add(&s2.scale(&-&a2)).add(&s3.scale(&-&k.one()));
            s = rest.scale(&d1_inv);
        }
        let x = s.add(&Series::constant(k, x0.clone(), prec));
        let mut y = Series::zero(k, prec);
        if prec > 1 {
            y.c[1] = k.one();
        }
        (x, y)
    }
}

/// `p(x + a)` as a polynomial in `x`.
fn shift(p: &Poly, a: &Fe) -> Poly {
    let k = p.field();
    let lin = Poly::new(k, vec![a.clone(), k.one()]);
    let mut acc = Poly::zero(k);
    for coef in p.coeffs().iter().rev() {
        acc = &(&acc * &lin) + &Poly::constant(coef.clone());
    }
    acc
}
