//! A finite pairing setup cut out of idelic data on an elliptic curve.
//!
//! For rational `m`-torsion points `P_1..P_r` let `α_i` be the uniformizer idele of
//! `(P_i) - (O)`, `f_i` the function with `div f_i = m·((P_i) - (O))`, and
//! `u_i = α_i^m / f_i`, a unit idele. The group `A` is free on the `α_i` (order `m·n`)
//! and the `u_i` (order `n`), where `n = |k^*|`, paired into `N = Z/n` through a
//! discrete logarithm of the commutator pairing. `B` is spanned by the images
//! `m·α_i - u_i` of the principal ideles `f_i` and `C` by the units `u_i`.

use crate::biext::{quotient_weil_pairing, FiniteAbelianGroup, PairingSetup};
use crate::curve::{point_add, Curve, Divisor, Place};
use crate::error::{Error, Result};
use crate::ff::Fe;
use crate::idele::{commutator_pairing, Idele};
use crate::weil::{certify, weil_pairing_adelic};

/// Discrete logarithms in `k^*` for a fixed generator.
pub struct DiscreteLog {
    powers: Vec<Fe>,
}

impl DiscreteLog {
    pub fn new(curve: &Curve) -> Result<DiscreteLog> {
        let k = curve.base();
        let n = (k.order() - 1) as usize;
        let g = k
            .elements()
            .find(|x| !x.is_zero() && x.multiplicative_order().ok() == Some(n as u128))
            .ok_or_else(|| Error::structural("no primitive element"))?;
        let mut powers = Vec::with_capacity(n);
        let mut x = k.one();
        for _ in 0..n {
            powers.push(x.clone());
            x = &x * &g;
        }
        Ok(DiscreteLog { powers })
    }

    pub fn order(&self) -> u64 {
        self.powers.len() as u64
    }

    pub fn log(&self, v: &Fe) -> Result<u64> {
        self.powers
            .iter()
            .position(|p| p == v)
            .map(|i| i as u64)
            .ok_or_else(|| Error::domain(format!("{v} is not in the multiplicative group")))
    }

    pub fn exp(&self, e: u64) -> Fe {
        self.powers[(e % self.order()) as usize].clone()
    }
}

pub struct CurveShadow {
    pub curve: Curve,
    pub m: u64,
    pub points: Vec<Place>,
    pub setup: PairingSetup,
    pub dlog: DiscreteLog,
}

/// One class pair compared by [`CurveShadow::compare`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowRow {
    pub left: Place,
    pub right: Place,
    pub quotient: Fe,
    pub adelic: Fe,
}

impl CurveShadow {
    pub fn new(curve: &Curve, points: &[Place], m: u64) -> Result<CurveShadow> {
        let dlog = DiscreteLog::new(curve)?;
        let n = dlog.order();
        let r = points.len();
        let mut gens = Vec::with_capacity(2 * r);
        let mut units = Vec::with_capacity(r);
        for p in points {
            let d = Divisor::from_terms(curve, [(p.clone(), 1), (Place::Origin, -1)])?;
            let alpha = Idele::uniformizer_idele(&d)?;
            let f = certify(&d, m)?;
            let u = alpha.pow(m as i64).checked_mul(&Idele::principal(&f).inv())?;
            if !u.is_unit()? {
                return Err(Error::structural("alpha^m / f is not a unit idele"));
            }
            gens.push(alpha);
            units.push(u);
        }
        gens.extend(units);
        let mut matrix = vec![vec![0; 2 * r]; 2 * r];
        for (i, x) in gens.iter().enumerate() {
            for (j, y) in gens.iter().enumerate() {
                matrix[i][j] = dlog.log(&commutator_pairing(x, y)?)?;
            }
        }
        let orders: Vec<u64> = (0..2 * r).map(|i| if i < r { m * n } else { n }).collect();
        let a = FiniteAbelianGroup::new(orders)?;
        let unit_vec = |i: usize, c: u64| -> Vec<u64> {
            let mut v = vec![0; 2 * r];
            v[i] = c;
            v
        };
        let b: Vec<Vec<u64>> = (0..r)
            .map(|i| {
                let mut v = unit_vec(i, m);
                v[r + i] = n - 1;
                v
            })
            .collect();
        let c: Vec<Vec<u64>> = (0..r).map(|i| unit_vec(r + i, 1)).collect();
        let setup = PairingSetup::new(a.clone(), a, n, matrix, [b.clone(), c.clone(), b, c])?;
        Ok(CurveShadow { curve: curve.clone(), m, points: points.to_vec(), setup, dlog })
    }

    /// Nonzero classes `Σ e_i α_i` with `0 <= e_i < m`, each with its point `Σ e_i P_i`.
    pub fn classes(&self) -> Result<Vec<(usize, Place)>> {
        let r = self.points.len();
        let mut out = Vec::new();
        let count = (self.m as usize).pow(r as u32);
        for code in 1..count {
            let mut e = vec![0u64; 2 * r];
            let mut rest = code;
            let mut point = Place::Origin;
            for i in (0..r).rev() {
                e[i] = (rest % self.m as usize) as u64;
                rest /= self.m as usize;
            }
            for (i, p) in self.points.iter().enumerate() {
                for _ in 0..e[i] {
                    point = point_add(&self.curve, &point, p)?;
                }
            }
            out.push((self.setup.a().encode(&e)?, point));
        }
        Ok(out)
    }

    /// The quotient pairing and the adelic Weil pairing on every pair of nonzero classes.
    pub fn compare(&self) -> Result<Vec<ShadowRow>> {
        let classes = self.classes()?;
        let mut rows = Vec::new();
        for (a, p) in &classes {
            for (b, q) in &classes {
                let v = quotient_weil_pairing(&self.setup, *a, *b, self.m)?;
                let d = Divisor::from_terms(&self.curve, [(p.clone(), 1), (Place::Origin, -1)])?;
                let dq = Divisor::from_terms(&self.curve, [(q.clone(), 1), (Place::Origin, -1)])?;
                rows.push(ShadowRow {
                    left: p.clone(),
                    right: q.clone(),
                    quotient: self.dlog.exp(v),
                    adelic: weil_pairing_adelic(&d, &dq, self.m)?,
                });
            }
        }
        Ok(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biext::validate_setup;
    use crate::ff::Field;

    #[test]
    fn two_torsion_shadow_agrees() {
        let k = Field::prime(5).unwrap();
        let e = Curve::elliptic(&k, k.from_u64(4), k.zero()).unwrap();
        let pts = [Place::Affine(k.zero(), k.zero()), Place::Affine(k.one(), k.zero())];
        let s = CurveShadow::new(&e, &pts, 2).unwrap();
        assert!(validate_setup(&s.setup).passed(), "{}", validate_setup(&s.setup));
        let rows = s.compare().unwrap();
        assert_eq!(rows.len(), 9);
        for r in &rows {
            assert_eq!(r.quotient, r.adelic, "{} {}", r.left, r.right);
        }
        assert_eq!(rows[1].adelic, k.from_u64(4));
    }

    #[test]
    fn three_torsion_shadow_agrees() {
        let k = Field::prime(7).unwrap();
        let e = Curve::elliptic(&k, k.zero(), k.from_u64(2)).unwrap();
        let tors = crate::curve::torsion_points(&e, 3).unwrap();
        let p = tors.iter().find(|x| **x != Place::Origin).unwrap().clone();
        let span = [Place::Origin, p.clone(), crate::curve::point_mul(&e, 2, &p).unwrap()];
        let q = tors.iter().find(|x| !span.contains(x)).unwrap().clone();
        let s = CurveShadow::new(&e, &[p, q], 3).unwrap();
        assert!(validate_setup(&s.setup).passed());
        let rows = s.compare().unwrap();
        assert_eq!(rows.len(), 64);
        assert!(rows.iter().all(|r| r.quotient == r.adelic));
        assert!(rows.iter().any(|r| !r.adelic.is_one()));
    }
}
