//! Tame symbols, their norms to the base field, and Weil reciprocity.

use std::collections::BTreeSet;

use crate::curve::{divisor_of, evaluate_at, order_at, uniformizer, Curve, Function, Place};
use crate::error::{Error, Result};
use crate::ff::{norm_via_resultant, Fe, Poly};

/// The value at `place` of `f·π^{-ord f}` for the fixed uniformizer `π`.
pub(crate) fn unit_part(f: &Function, place: &Place) -> Result<(i64, Fe)> {
    let n = order_at(f, place)?;
    let unit = if n == 0 { f.clone() } else { f.checked_mul(&uniformizer(f.curve(), place)?.pow(-n))? };
    Ok((n, evaluate_at(&unit, place)?))
}

/// `(f, g)_x = (-1)^{ord f · ord g} · (f^{ord g} · g^{-ord f})(x)` in `k(x)^*`.
///
/// Writing `f = π^a·u` and `g = π^b·v`, the function `f^b·g^{-a}` equals
/// `u^b·v^{-a}`, so only the unit parts are evaluated.
pub fn tame_symbol(f: &Function, g: &Function, place: &Place) -> Result<Fe> {
    if f.curve() != g.curve() {
        return Err(Error::structural("functions on different curves"));
    }
    let (a, u) = unit_part(f, place)?;
    let (b, v) = unit_part(g, place)?;
    let value = &u.pow(b)? * &v.pow(-a)?;
    Ok(if (a * b) % 2 != 0 { -value } else { value })
}

/// `Nm_{k(x)/k}` of an element of the residue field at `place`.
pub fn residue_norm(curve: &Curve, place: &Place, v: &Fe) -> Result<Fe> {
    match place {
        Place::Finite(pi) if pi.degree().unwrap_or(0) > 1 => {
            let coeffs = v
                .base_coeffs()
                .filter(|_| v.field() == &curve.residue_field(place))
                .ok_or_else(|| Error::structural("value is not in the residue field of the place"))?;
            norm_via_resultant(&Poly::new(curve.base(), coeffs), pi)
        }
        _ => Ok(v.clone()),
    }
}

/// `Nm_{k(x)/k}[(f, g)_x]`.
pub fn tame_symbol_norm(f: &Function, g: &Function, place: &Place) -> Result<Fe> {
    residue_norm(f.curve(), place, &tame_symbol(f, g, place)?)
}

/// The places where `(f, g)_x` can differ from 1.
pub fn joint_support(f: &Function, g: &Function) -> Result<BTreeSet<Place>> {
    let mut places: BTreeSet<Place> = divisor_of(f)?.support().cloned().collect();
    places.extend(divisor_of(g)?.support().cloned());
    Ok(places)
}

/// The nontrivial factors `(x, Nm[(f, g)_x])` of the reciprocity product.
pub fn reciprocity_factors(f: &Function, g: &Function) -> Result<Vec<(Place, Fe)>> {
    joint_support(f, g)?
        .into_iter()
        .map(|x| {
            let v = tame_symbol_norm(f, g, &x)?;
            Ok((x, v))
        })
        .collect()
}

/// `∏_x Nm[(f, g)_x]` over every place where a symbol can be nontrivial.
pub fn weil_reciprocity(f: &Function, g: &Function) -> Result<Fe> {
    let k = f.curve().base();
    reciprocity_factors(f, g)?.iter().try_fold(k.one(), |acc, (_, v)| acc.checked_mul(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::random_function;
    use crate::ff::Field;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn lin(k: &Field, c: &[u64]) -> Poly {
        Poly::from_u64s(k, c)
    }

    /// The defining formula, evaluated literally.
    fn literal(f: &Function, g: &Function, x: &Place) -> Fe {
        let a = order_at(f, x).unwrap();
        let b = order_at(g, x).unwrap();
        let h = &f.pow(b) * &g.pow(-a);
        let v = evaluate_at(&h, x).unwrap();
        if (a * b) % 2 != 0 {
            -v
        } else {
            v
        }
    }

    #[test]
    fn symbol_examples() {
        let k5 = Field::prime(5).unwrap();
        let l5 = Curve::projective_line(&k5);
        let t = Function::coordinate(&l5);
        let origin = Place::Finite(lin(&k5, &[0, 1]));
        assert_eq!(tame_symbol(&t, &t, &origin).unwrap(), k5.from_u64(4));

        let k7 = Field::prime(7).unwrap();
        let l7 = Curve::projective_line(&k7);
        let t = Function::coordinate(&l7);
        let one_minus_t = Function::from_poly(&l7, lin(&k7, &[1, 6])).unwrap();
        let origin = Place::Finite(lin(&k7, &[0, 1]));
        assert_eq!(tame_symbol(&t, &one_minus_t, &origin).unwrap(), k7.one());
        assert_eq!(weil_reciprocity(&t, &one_minus_t).unwrap(), k7.one());

        let k3 = Field::prime(3).unwrap();
        let l3 = Curve::projective_line(&k3);
        let f = Function::from_poly(&l3, lin(&k3, &[1, 1])).unwrap();
        let g = Function::from_poly(&l3, lin(&k3, &[1, 0, 1])).unwrap();
        let x = Place::Finite(lin(&k3, &[1, 0, 1]));
        assert_eq!(tame_symbol(&f, &g, &x).unwrap().render(), "u+1");
        assert_eq!(tame_symbol_norm(&f, &g, &x).unwrap(), k3.from_u64(2));
        assert_eq!(weil_reciprocity(&f, &g).unwrap(), k3.one());
    }

    #[test]
    fn elliptic_reciprocity_example() {
        let k = Field::prime(5).unwrap();
        let e = Curve::elliptic(&k, k.from_u64(4), k.zero()).unwrap();
        let x = Function::coordinate(&e);
        let x1 = Function::from_poly(&e, lin(&k, &[4, 1])).unwrap();
        assert_eq!(weil_reciprocity(&x, &x1).unwrap(), k.one());
    }

    #[test]
    fn unit_parts_agree_with_the_literal_formula() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let k = Field::prime(7).unwrap();
        let curves = [Curve::projective_line(&k), Curve::elliptic(&k, k.zero(), k.from_u64(2)).unwrap()];
        for c in &curves {
            for _ in 0..40 {
                let f = random_function(c, 3, &mut rng);
                let g = random_function(c, 3, &mut rng);
                for x in joint_support(&f, &g).unwrap() {
                    assert_eq!(tame_symbol(&f, &g, &x).unwrap(), literal(&f, &g, &x), "{f} {g} {x}");
                }
            }
        }
    }
}
