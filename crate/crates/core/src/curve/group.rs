//! The chord-and-tangent group law on rational points of `y^2 = x^3 + a4·x + a6`.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;

use super::divisor::Divisor;
use super::function::Function;
use super::model::{Curve, CurveKind, Place};
use crate::error::{Error, Result};
use crate::ff::{Fe, Poly};

fn coefficients(curve: &Curve) -> Result<(Fe, Fe)> {
    match curve.kind() {
        CurveKind::Elliptic { a4, a6 } => Ok((a4.clone(), a6.clone())),
        CurveKind::Line => Err(Error::structural("the group law needs an elliptic curve")),
    }
}

pub fn point_neg(p: &Place) -> Place {
    match p {
        Place::Affine(x, y) => Place::Affine(x.clone(), -y),
        other => other.clone(),
    }
}

/// Slope of the chord or tangent through `p` and `q`, or `None` when it is vertical.
fn slope(curve: &Curve, p: &Place, q: &Place) -> Result<Option<Fe>> {
    let (a4, _) = coefficients(curve)?;
    let (Place::Affine(x1, y1), Place::Affine(x2, y2)) = (p, q) else {
        return Ok(None);
    };
    if x1 != x2 {
        return Ok(Some(&(y2 - y1) / &(x2 - x1)));
    }
    if y1 != y2 || y1.is_zero() {
        return Ok(None);
    }
    let k = curve.base();
    let num = &(&(x1 * x1) * &k.from_u64(3)) + &a4;
    Ok(Some(&num / &(y1 + y1)))
}

pub fn point_add(curve: &Curve, p: &Place, q: &Place) -> Result<Place> {
    curve.check_place(p)?;
    curve.check_place(q)?;
    Ok(add_unchecked(curve, p, q))
}

fn add_unchecked(curve: &Curve, p: &Place, q: &Place) -> Place {
    match (p, q) {
        (Place::Origin, _) => q.clone(),
        (_, Place::Origin) => p.clone(),
        (Place::Affine(x1, y1), Place::Affine(x2, _)) => match slope(curve, p, q).unwrap() {
            None => Place::Origin,
            Some(l) => {
                let x3 = &(&(&l * &l) - x1) - x2;
                let y3 = &(&l * &(x1 - &x3)) - y1;
                Place::Affine(x3, y3)
            }
        },
        _ => unreachable!("elliptic places"),
    }
}

pub fn point_mul(curve: &Curve, n: i64, p: &Place) -> Result<Place> {
    curve.check_place(p)?;
    let mut base = if n < 0 { point_neg(p) } else { p.clone() };
    let mut e = n.unsigned_abs();
    let mut acc = Place::Origin;
    while e > 0 {
        if e & 1 == 1 {
            acc = add_unchecked(curve, &acc, &base);
        }
        base = add_unchecked(curve, &base, &base);
        e >>= 1;
    }
    Ok(acc)
}

/// All rational points, origin first, then affine points in coordinate order.
pub fn rational_points(curve: &Curve) -> Result<Vec<Place>> {
    coefficients(curve)?;
    let rhs = curve.weierstrass_rhs().unwrap();
    let k = curve.base();
    // one square root per square, cheaper than a root extraction per x
    let mut roots: HashMap<Fe, Fe> = HashMap::new();
    for y in k.elements() {
        let sq = &y * &y;
        roots.entry(sq).or_insert(y);
    }
    let mut out = vec![Place::Origin];
    for x in k.elements() {
        if let Some(y) = roots.get(&rhs.eval(&x)) {
            if y.is_zero() {
                out.push(Place::Affine(x, y.clone()));
            } else {
                let ny = -y;
                let (lo, hi) = if *y < ny { (y.clone(), ny) } else { (ny, y.clone()) };
                out.push(Place::Affine(x.clone(), lo));
                out.push(Place::Affine(x, hi));
            }
        }
    }
    Ok(out)
}

/// Rational points `P` with `m·P = O`.
pub fn torsion_points(curve: &Curve, m: u64) -> Result<Vec<Place>> {
    let mut out = Vec::new();
    for p in rational_points(curve)? {
        if point_mul(curve, m as i64, &p)? == Place::Origin {
            out.push(p);
        }
    }
    Ok(out)
}

/// The Miller function `h` with `div(h) = (P) + (Q) - (P+Q) - (O)`: the chord or
/// tangent through `P` and `Q` divided by the vertical through `P + Q`.
pub fn chord_over_vertical(curve: &Curve, p: &Place, q: &Place) -> Result<Function> {
    curve.check_place(p)?;
    curve.check_place(q)?;
    let k = curve.base();
    match (p, q) {
        (Place::Origin, _) | (_, Place::Origin) => Ok(Function::one(curve)),
        (Place::Affine(x1, y1), _) => match slope(curve, p, q)? {
            None => Function::from_poly(curve, Poly::linear(x1)),
            Some(l) => {
                let Place::Affine(x3, _) = add_unchecked(curve, p, q) else { unreachable!("non-vertical chord") };
                // y - y1 - l·(x - x1)
                let a = Poly::new(k, vec![&(&l * x1) - y1, -&l]);
                Function::elliptic(curve, a, Poly::one(k), Poly::linear(&x3))
            }
        },
        _ => unreachable!("elliptic places"),
    }
}

/// A random nonzero function whose zeros and poles are all rational: a constant
/// times products of Miller functions and verticals at random rational points.
/// On the line this is simply a random ratio of polynomials of degree `<= size`.
pub fn random_function<R: Rng + ?Sized>(curve: &Curve, size: usize, rng: &mut R) -> Function {
    let k = curve.base();
    if curve.is_line() {
        return Function::random_on_line(curve, size, rng);
    }
    let points = rational_points(curve).expect("elliptic curve");
    let mut f = Function::constant(curve, k.random_nonzero(rng)).unwrap();
    for _ in 0..rng.gen_range(1..=size.max(1)) {
        let p = points.choose(rng).unwrap();
        let q = points.choose(rng).unwrap();
        let h = if rng.gen_bool(0.25) {
            match p {
                Place::Affine(x, _) => Function::from_poly(curve, Poly::linear(x)).unwrap(),
                _ => continue,
            }
        } else {
            chord_over_vertical(curve, p, q).unwrap()
        };
        f = if rng.gen_bool(0.5) { &f * &h } else { &f / &h };
    }
    f
}

/// A random closed point: on the line a monic irreducible of degree 1 to 3 or
/// infinity, on an elliptic curve a random rational point.
pub fn random_place<R: Rng + ?Sized>(curve: &Curve, rng: &mut R) -> Place {
    let k = curve.base();
    if curve.is_line() {
        if rng.gen_ratio(1, 8) {
            return Place::Infinity;
        }
        let deg = rng.gen_range(1..=3);
        loop {
            let pi = Poly::random_monic(k, deg, rng);
            if pi.is_irreducible() {
                return Place::Finite(pi);
            }
        }
    }
    rational_points(curve).expect("elliptic curve").choose(rng).unwrap().clone()
}

/// A random divisor with up to `terms` places and coefficients in `-3..=3`.
pub fn random_divisor<R: Rng + ?Sized>(curve: &Curve, terms: usize, rng: &mut R) -> Divisor {
    let entries: Vec<(Place, i64)> =
        (0..rng.gen_range(0..=terms)).map(|_| (random_place(curve, rng), rng.gen_range(-3..=3))).collect();
    Divisor::from_terms(curve, entries).expect("places of this curve")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::divisor_of;
    use crate::ff::Field;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn two_torsion_of_x3_minus_x() {
        let k = Field::prime(5).unwrap();
        let e = Curve::elliptic(&k, k.from_u64(4), k.zero()).unwrap();
        let pts = rational_points(&e).unwrap();
        assert_eq!(pts.len(), 8);
        let e2: Vec<String> = torsion_points(&e, 2).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(e2, ["O", "(0,0)", "(1,0)", "(4,0)"]);
        for p in &pts {
            for q in &pts {
                let r = point_add(&e, p, q).unwrap();
                assert!(e.check_place(&r).is_ok());
                assert_eq!(r, point_add(&e, q, p).unwrap());
            }
        }
    }

    #[test]
    fn miller_functions_have_the_expected_divisor() {
        let k = Field::prime(7).unwrap();
        let e = Curve::elliptic(&k, k.zero(), k.from_u64(2)).unwrap();
        let pts = rational_points(&e).unwrap();
        for p in &pts {
            for q in &pts {
                let h = chord_over_vertical(&e, p, q).unwrap();
                let r = point_add(&e, p, q).unwrap();
                let expect = crate::curve::Divisor::from_terms(
                    &e,
                    [(p.clone(), 1), (q.clone(), 1), (r, -1), (Place::Origin, -1)],
                )
                .unwrap();
                assert_eq!(divisor_of(&h).unwrap(), expect, "{p} {q}");
            }
        }
    }

    #[test]
    fn random_functions_have_rational_support() {
        let k = Field::prime(7).unwrap();
        let e = Curve::elliptic(&k, k.zero(), k.from_u64(2)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let f = random_function(&e, 4, &mut rng);
            assert_eq!(divisor_of(&f).unwrap().degree(), 0);
        }
    }
}
