//! Riemann–Roch spaces `L(D) = {f : div(f) + D >= 0} ∪ {0}`.

use std::collections::BTreeMap;

use super::divisor::Divisor;
use super::function::Function;
use super::local::leading_coefficient_at_base;
use super::model::Place;
use super::series::local_xy;
use crate::error::{Error, Result};
use crate::ff::{linalg, Fe, Poly};

/// A basis of `L(D)` with `h0 = dim L(D)` and `h1 = dim L(K - D)`.
#[derive(Clone, Debug)]
pub struct RiemannRoch {
    pub basis: Vec<Function>,
    pub h0: usize,
    pub h1: usize,
}

impl RiemannRoch {
    /// `h0 - h1`, which Riemann–Roch predicts to be `deg D + 1 - g`.
    pub fn euler_characteristic(&self) -> i64 {
        self.h0 as i64 - self.h1 as i64
    }
}

pub fn riemann_roch(d: &Divisor) -> Result<RiemannRoch> {
    let curve = d.curve();
    let basis = space(d)?;
    // K = -2·inf on the line; K = 0 on an elliptic curve
    let dual = if curve.is_line() { Divisor::point(curve, Place::Infinity, -2)?.checked_sub(d)? } else { d.neg() };
    let h1 = space(&dual)?.len();
    Ok(RiemannRoch { h0: basis.len(), basis, h1 })
}

/// A basis of `L(D)`.
pub fn space(d: &Divisor) -> Result<Vec<Function>> {
    if d.curve().is_line() {
        line_space(d)
    } else {
        elliptic_space(d)
    }
}

fn line_space(d: &Divisor) -> Result<Vec<Function>> {
    let curve = d.curve();
    let k = curve.base();
    let deg = d.degree();
    if deg < 0 {
        return Ok(Vec::new());
    }
    let mut num = Poly::one(k);
    let mut den = Poly::one(k);
    for (place, n) in d.terms() {
        if let Place::Finite(pi) = place {
            if n > 0 {
                num = &num * &pi.pow(n as u64);
            } else {
                den = &den * &pi.pow(n.unsigned_abs());
            }
        }
    }
    // f·num/den is a polynomial of degree at most deg D
    (0..=deg as usize).map(|i| Function::ratio(curve, &Poly::monomial(k.one(), i) * &den, num.clone())).collect()
}

fn elliptic_space(d: &Divisor) -> Result<Vec<Function>> {
    let curve = d.curve();
    let k = curve.base();
    let rhs = curve.weierstrass_rhs().unwrap();

    // c(x) clears every allowed affine pole, so g = f·c lies in k[x, y]
    let mut exps: BTreeMap<Fe, i64> = BTreeMap::new();
    for (place, n) in d.terms() {
        if let Place::Affine(x0, y0) = place {
            if n > 0 {
                let need = if y0.is_zero() { (n + 1) / 2 } else { n };
                let e = exps.entry(x0.clone()).or_insert(0);
                *e = (*e).max(need);
            }
        }
    }
    let mut c = Poly::one(k);
    for (x0, &e) in &exps {
        c = &c * &Poly::linear(x0).pow(e as u64);
    }
    let bound = d.coefficient(&Place::Origin) + 2 * c.deg_i64();
    if bound < 0 {
        return Ok(Vec::new());
    }
    // monomials x^i (pole order 2i) and x^j·y (pole order 2j + 3) at the origin
    let n_a = (bound / 2 + 1) as usize;
    let n_b = if bound >= 3 { ((bound - 3) / 2 + 1) as usize } else { 0 };
    let ncols = n_a + n_b;

    let mut points: Vec<Place> = d.support().filter(|p| matches!(p, Place::Affine(..))).cloned().collect();
    for x0 in exps.keys() {
        if let Some(y0) = rhs.eval(x0).sqrt() {
            for y in [y0.clone(), -&y0] {
                let p = Place::Affine(x0.clone(), y);
                if !points.contains(&p) {
                    points.push(p);
                }
            }
        }
    }

    let mut rows = Vec::new();
    for p in &points {
        let Place::Affine(x0, y0) = p else { unreachable!() };
        let e = exps.get(x0).copied().unwrap_or(0);
        let ord_c = if y0.is_zero() { 2 * e } else { e };
        let need = ord_c - d.coefficient(p);
        if need <= 0 {
            continue;
        }
        let prec = need as usize;
        let (xs, ys) = local_xy(curve, p, prec);
        let mut cols = Vec::with_capacity(ncols);
        let mut xp = Poly::one(k);
        for _ in 0..n_a {
            cols.push(xs.compose(&xp));
            xp = &xp * &Poly::x(k);
        }
        let mut xp = Poly::one(k);
        for _ in 0..n_b {
            cols.push(xs.compose(&xp).mul(&ys));
            xp = &xp * &Poly::x(k);
        }
        for t in 0..prec {
            rows.push(cols.iter().map(|s| s.c[t].clone()).collect::<Vec<_>>());
        }
    }

    linalg::kernel(k, &rows, ncols)
        .into_iter()
        .map(|v| {
            let a = Poly::new(k, v[..n_a].to_vec());
            let b = Poly::new(k, v[n_a..].to_vec());
            Function::elliptic(curve, a, b, c.clone())
        })
        .collect()
}

/// A function `f` with `div(f) = m·D` when the class of `D` is `m`-torsion, scaled so
/// that its leading coefficient at the base place is 1; `None` otherwise.
pub fn certify_m_torsion(d: &Divisor, m: u64) -> Result<Option<Function>> {
    if d.degree() != 0 {
        return Err(Error::domain(format!("divisor has degree {}, expected 0", d.degree())));
    }
    let p = d.curve().base().characteristic();
    if m == 0 {
        return Err(Error::domain("m must be at least 1"));
    }
    if m.is_multiple_of(p) {
        return Err(Error::domain(format!("m = {m} is not coprime to the characteristic {p}")));
    }
    let basis = space(&d.scale(m as i64).neg())?;
    match basis.len() {
        0 => Ok(None),
        1 => {
            let f = &basis[0];
            let lead = leading_coefficient_at_base(f);
            Ok(Some(f.scale(&lead.inv()?)?))
        }
        n => Err(Error::structural(format!("L(-mD) of degree 0 has dimension {n}"))),
    }
}

/// Whether `D` is the divisor of a function.
pub fn is_principal(d: &Divisor) -> Result<bool> {
    if d.degree() != 0 {
        return Ok(false);
    }
    Ok(!space(&d.neg())?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{order_at, Curve};
    use crate::ff::Field;

    fn e5() -> (Field, Curve) {
        let k = Field::prime(5).unwrap();
        let e = Curve::elliptic(&k, k.from_u64(4), k.zero()).unwrap();
        (k, e)
    }

    #[test]
    fn line_examples() {
        let k = Field::prime(5).unwrap();
        let line = Curve::projective_line(&k);
        let d = Divisor::point(&line, Place::Infinity, 2).unwrap();
        let rr = riemann_roch(&d).unwrap();
        let shown: Vec<String> = rr.basis.iter().map(|f| f.to_string()).collect();
        assert_eq!(shown, ["1", "t", "t^2"]);
        assert_eq!((rr.h0, rr.h1), (3, 0));
        let d = Divisor::from_terms(&line, [(Place::Finite(Poly::from_u64s(&k, &[0, 1])), 1), (Place::Infinity, -1)])
            .unwrap();
        let f = certify_m_torsion(&d, 3).unwrap().unwrap();
        assert_eq!(f.to_string(), "t^3");
    }

    #[test]
    fn elliptic_examples() {
        let (k, e) = e5();
        let rr = riemann_roch(&Divisor::zero(&e)).unwrap();
        assert_eq!((rr.h0, rr.h1), (1, 1));
        let rr = riemann_roch(&Divisor::point(&e, Place::Origin, 2).unwrap()).unwrap();
        let shown: Vec<String> = rr.basis.iter().map(|f| f.to_string()).collect();
        assert_eq!(shown, ["1", "x"]);
        assert_eq!((rr.h0, rr.h1), (2, 0));

        let d = Divisor::from_terms(&e, [(Place::Affine(k.zero(), k.zero()), 1), (Place::Origin, -1)]).unwrap();
        assert_eq!(certify_m_torsion(&d, 2).unwrap().unwrap().to_string(), "x");
        let d =
            Divisor::from_terms(&e, [(Place::Affine(k.from_u64(2), k.from_u64(1)), 1), (Place::Origin, -1)]).unwrap();
        assert!(certify_m_torsion(&d, 2).unwrap().is_none());
        assert!(certify_m_torsion(&d, 5).is_err());
    }

    #[test]
    fn spaces_with_affine_poles() {
        let (k, e) = e5();
        let p = Place::Affine(k.from_u64(2), k.from_u64(1));
        let q = Place::Affine(k.zero(), k.zero());
        for d in [
            Divisor::from_terms(&e, [(p.clone(), 2), (Place::Origin, 1)]).unwrap(),
            Divisor::from_terms(&e, [(q.clone(), 3), (p.clone(), -1)]).unwrap(),
            Divisor::from_terms(&e, [(q.clone(), 1), (p.clone(), 1), (Place::Origin, 1)]).unwrap(),
        ] {
            let rr = riemann_roch(&d).unwrap();
            assert_eq!(rr.euler_characteristic(), d.degree(), "{d}");
            // poles can only sit at rational points, so checking those suffices
            let mut places = vec![Place::Origin];
            for x in k.elements() {
                for y in k.elements() {
                    let p = Place::Affine(x.clone(), y);
                    if e.check_place(&p).is_ok() {
                        places.push(p);
                    }
                }
            }
            for f in &rr.basis {
                for p in &places {
                    assert!(order_at(f, p).unwrap() + d.coefficient(p) >= 0, "{f} not in L({d}) at {p}");
                }
            }
        }
    }
}
