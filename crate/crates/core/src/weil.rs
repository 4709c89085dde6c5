//! Weil pairings on `m`-torsion divisor classes: the idelic symbol formula, the
//! evaluation formula for disjoint supports, and Miller's algorithm as an oracle.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::curve::{
    certify_m_torsion, chord_over_vertical, divisor_of, evaluate_at, point_add, point_mul, rational_points, Curve,
    Divisor, Function, Place,
};
use crate::error::{Error, Result};
use crate::ff::{smallest_irreducible, Fe, Field};
use crate::idele::{symbol_product_over, Idele};
use crate::tame::residue_norm;

/// Number of auxiliary-point draws before Miller's algorithm gives up.
const MILLER_ATTEMPTS: usize = 200;

fn check_m(curve: &Curve, m: u64) -> Result<()> {
    let p = curve.base().characteristic();
    if m == 0 {
        return Err(Error::domain("m must be at least 1"));
    }
    if m.is_multiple_of(p) {
        return Err(Error::domain(format!("m = {m} must be coprime to the characteristic {p} of the base field")));
    }
    Ok(())
}

fn check_pair(d: &Divisor, dp: &Divisor) -> Result<()> {
    if d.curve() != dp.curve() {
        return Err(Error::structural("divisors on different curves"));
    }
    for (name, x) in [("D", d), ("Dp", dp)] {
        if x.degree() != 0 {
            return Err(Error::domain(format!("{name} has degree {}, expected 0", x.degree())));
        }
    }
    Ok(())
}

/// The function `f` with `div f = m·D`, or a torsion error.
pub fn certify(d: &Divisor, m: u64) -> Result<Function> {
    certify_m_torsion(d, m)?.ok_or_else(|| Error::Torsion(format!("the class of {d} is not {m}-torsion")))
}

/// The pairing from explicit data: ideles `α`, `α'` and functions `f`, `f'` with
/// `α^m = f·u` and `α'^m = f'·u'` for unit ideles `u`, `u'`. Returns
/// `∏_x Nm[(f, α'_x)_x · (α_x, u'_x)_x^{-1}]`.
pub fn weil_pairing_from_ideles(alpha: &Idele, alpha_p: &Idele, f: &Function, f_p: &Function, m: u64) -> Result<Fe> {
    let curve = alpha.curve();
    check_m(curve, m)?;
    let u = alpha.pow(m as i64).checked_mul(&Idele::principal(f).inv())?;
    let u_p = alpha_p.pow(m as i64).checked_mul(&Idele::principal(f_p).inv())?;
    if !u.is_unit()? || !u_p.is_unit()? {
        return Err(Error::domain("alpha^m / f is not a unit idele"));
    }
    let f_idele = Idele::principal(f);

    // (f, α'_x) is trivial where both are units; (α_x, u'_x) where α_x is a unit
    let mut first_places: BTreeSet<Place> = divisor_of(f)?.support().cloned().collect();
    first_places.extend(alpha_p.divisor_degree()?.0.support().cloned());
    let second_places: BTreeSet<Place> = alpha.divisor_degree()?.0.support().cloned().collect();

    let first = symbol_product_over(&f_idele, alpha_p, first_places)?;
    let second = symbol_product_over(alpha, &u_p, second_places)?;
    let value = first.checked_div(&second)?;
    if !value.pow_u128(m as u128).is_one() {
        return Err(Error::structural(format!("pairing value {value} is not an {m}-th root of unity")));
    }
    Ok(value)
}

/// `φ_m(D, D')` from uniformizer ideles and the certified functions `f`, `f'`.
pub fn weil_pairing_adelic(d: &Divisor, dp: &Divisor, m: u64) -> Result<Fe> {
    check_m(d.curve(), m)?;
    check_pair(d, dp)?;
    let f = certify(d, m)?;
    let f_p = certify(dp, m)?;
    weil_pairing_from_ideles(&Idele::uniformizer_idele(d)?, &Idele::uniformizer_idele(dp)?, &f, &f_p, m)
}

/// `g(E) = ∏_x Nm(g(x))^{E(x)}` for `g` a unit on the support of `E`.
pub fn evaluate_on_divisor(g: &Function, e: &Divisor) -> Result<Fe> {
    let mut acc = g.curve().base().one();
    for (x, n) in e.terms() {
        let v = residue_norm(g.curve(), x, &evaluate_at(g, x)?)?;
        acc = &acc * &v.pow(n)?;
    }
    Ok(acc)
}

/// For divisors with disjoint supports the symbol product reduces to
/// `f(D') / f'(D)` where `div f = m·D` and `div f' = m·D'`.
pub fn weil_pairing_disjoint(d: &Divisor, dp: &Divisor, m: u64) -> Result<Fe> {
    check_m(d.curve(), m)?;
    check_pair(d, dp)?;
    if let Some(x) = d.support().find(|x| dp.coefficient(x) != 0) {
        return Err(Error::domain(format!(
            "supports of D and Dp share {x}; add a principal divisor to one of them first"
        )));
    }
    let f = certify(d, m)?;
    let f_p = certify(dp, m)?;
    evaluate_on_divisor(&f, dp)?.checked_div(&evaluate_on_divisor(&f_p, d)?)
}

/// Values `(f(A), f(B))` of the Miller function with `div f = m·((P+R) - (R))`.
fn miller_values(curve: &Curve, p: &Place, r: &Place, m: u64, at: [&Place; 2]) -> Result<[Fe; 2]> {
    let eval = |h: &Function| -> Result<[Fe; 2]> { Ok([evaluate_at(h, at[0])?, evaluate_at(h, at[1])?]) };
    let mul = |a: &[Fe; 2], b: &[Fe; 2]| [&a[0] * &b[0], &a[1] * &b[1]];
    // div f_1 = (P+R) - (R) - (P) + (O)
    let h = eval(&chord_over_vertical(curve, p, r)?)?;
    let f1 = [h[0].inv()?, h[1].inv()?];
    // invariant: div f_i = i·((P+R) - (R)) - (iP) + (O)
    let mut f = f1.clone();
    let mut t = p.clone();
    let bits = 64 - m.leading_zeros();
    for i in (0..bits - 1).rev() {
        let h = eval(&chord_over_vertical(curve, &t, &t)?)?;
        f = mul(&mul(&f, &f), &h);
        t = point_add(curve, &t, &t)?;
        if (m >> i) & 1 == 1 {
            let h = eval(&chord_over_vertical(curve, &t, p)?)?;
            f = mul(&mul(&f, &f1), &h);
            t = point_add(curve, &t, p)?;
        }
    }
    debug_assert_eq!(t, Place::Origin);
    Ok(f)
}

/// The Weil pairing `e_m(P, Q) = f_P(D_Q) / f_Q(D_P)` with `D_P = (P+R) - (R)`,
/// `D_Q = (Q+S) - (S)` for random auxiliary points `R`, `S`, redrawn until every
/// evaluation is defined. Small curves may have no suitable rational `R`, `S`; the
/// auxiliary points are then drawn over extensions of degree 2, 3 and 4 and the
/// value is restricted back to the base field.
pub fn weil_pairing_miller(p: &Place, q: &Place, m: u64, curve: &Curve, seed: u64) -> Result<Fe> {
    if curve.is_line() {
        return Err(Error::structural("Miller's algorithm needs an elliptic curve"));
    }
    check_m(curve, m)?;
    for pt in [p, q] {
        curve.check_place(pt)?;
        if point_mul(curve, m as i64, pt)? != Place::Origin {
            return Err(Error::domain(format!("{pt} is not an {m}-torsion point")));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if let Some(v) = miller_with_auxiliaries(curve, p, q, m, &mut rng)? {
        return Ok(v);
    }
    let k = curve.base();
    for d in 2..=4 {
        let ext = Field::extension(k, &smallest_irreducible(k, d)?)?;
        let big = curve.base_change(&ext)?;
        let (pe, qe) = (p.base_change(&ext)?, q.base_change(&ext)?);
        if let Some(v) = miller_with_auxiliaries(&big, &pe, &qe, m, &mut rng)? {
            return v.restrict_to(k).ok_or_else(|| Error::structural("Miller value does not lie in the base field"));
        }
    }
    Err(Error::domain("no auxiliary points make every Miller evaluation defined"))
}

fn miller_with_auxiliaries(curve: &Curve, p: &Place, q: &Place, m: u64, rng: &mut ChaCha8Rng) -> Result<Option<Fe>> {
    let points = rational_points(curve)?;
    for _ in 0..MILLER_ATTEMPTS {
        let r = points.choose(rng).unwrap();
        let s = points.choose(rng).unwrap();
        let pr = point_add(curve, p, r)?;
        let qs = point_add(curve, q, s)?;
        if [&pr, r].iter().any(|x| **x == qs || *x == s) {
            continue;
        }
        let (Ok(fp), Ok(fq)) = (miller_values(curve, p, r, m, [&qs, s]), miller_values(curve, q, s, m, [&pr, r]))
        else {
            continue;
        };
        let num = fp[0].checked_div(&fp[1])?;
        let den = fq[0].checked_div(&fq[1])?;
        return Ok(Some(num.checked_div(&den)?));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e5() -> (Field, Curve) {
        let k = Field::prime(5).unwrap();
        let e = Curve::elliptic(&k, k.from_u64(4), k.zero()).unwrap();
        (k, e)
    }

    fn pt_minus_o(e: &Curve, p: &Place) -> Divisor {
        Divisor::from_terms(e, [(p.clone(), 1), (Place::Origin, -1)]).unwrap()
    }

    #[test]
    fn two_torsion_example() {
        let (k, e) = e5();
        let p = Place::Affine(k.zero(), k.zero());
        let q = Place::Affine(k.one(), k.zero());
        let d = pt_minus_o(&e, &p);
        let dp = pt_minus_o(&e, &q);
        assert_eq!(weil_pairing_adelic(&d, &dp, 2).unwrap(), k.from_u64(4));
        assert_eq!(weil_pairing_miller(&p, &q, 2, &e, 0).unwrap(), k.from_u64(4));
        assert!(weil_pairing_adelic(&d, &d, 2).unwrap().is_one());
        assert!(weil_pairing_adelic(&d, &Divisor::zero(&e), 2).unwrap().is_one());
        assert!(weil_pairing_miller(&p, &p, 2, &e, 0).unwrap().is_one());
        assert!(weil_pairing_miller(&p, &Place::Origin, 2, &e, 0).unwrap().is_one());
    }

    #[test]
    fn errors() {
        let (k, e) = e5();
        let d = pt_minus_o(&e, &Place::Affine(k.zero(), k.zero()));
        let non = pt_minus_o(&e, &Place::Affine(k.from_u64(2), k.from_u64(1)));
        assert!(matches!(weil_pairing_adelic(&d, &non, 2), Err(Error::Torsion(_))));
        assert!(matches!(weil_pairing_adelic(&d, &d, 10), Err(Error::Domain(_))));
        assert!(matches!(weil_pairing_disjoint(&d, &d, 2), Err(Error::Domain(_))));
        assert!(matches!(
            weil_pairing_miller(&Place::Affine(k.from_u64(2), k.from_u64(1)), &Place::Origin, 2, &e, 0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn disjoint_matches_adelic_after_a_shift() {
        let (k, e) = e5();
        let d = pt_minus_o(&e, &Place::Affine(k.zero(), k.zero()));
        let q = Place::Affine(k.one(), k.zero());
        // vertical over chord has a simple zero at O, which clears O from the support
        let h = chord_over_vertical(
            &e,
            &Place::Affine(k.from_u64(2), k.from_u64(1)),
            &Place::Affine(k.from_u64(3), k.from_u64(2)),
        )
        .unwrap()
        .inv();
        let dp = pt_minus_o(&e, &q).checked_add(&divisor_of(&h).unwrap()).unwrap();
        assert!(dp.support().all(|x| d.coefficient(x) == 0), "{dp}");
        assert_eq!(weil_pairing_disjoint(&d, &dp, 2).unwrap(), k.from_u64(4));
        assert_eq!(weil_pairing_adelic(&d, &dp, 2).unwrap(), k.from_u64(4));
    }
}
