//! Finite-data ideles and the norm-of-tame-symbol commutator pairing.
//!
//! An idele is stored as a global function `tail`, its component at every place
//! not listed, plus finitely many exceptional components. This covers ideles such
//! as `α^m / f` whose components differ from 1 at infinitely many places.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curve::{divisor_of, order_at, random_function, random_place, uniformizer, Curve, Divisor, Function, Place};
use crate::error::{Error, Result};
use crate::ff::Fe;
use crate::tame::tame_symbol_norm;

#[derive(Clone, PartialEq, Eq)]
pub struct Idele {
    tail: Function,
    exceptions: BTreeMap<Place, Function>,
}

impl fmt::Debug for Idele {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// `tail=<f>; (place)=><g>; ...` with places in their canonical order.
impl fmt::Display for Idele {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tail={}", self.tail)?;
        for (place, g) in &self.exceptions {
            let shown = match place {
                Place::Infinity | Place::Origin => format!("({place})"),
                _ => place.to_string(),
            };
            write!(f, "; {shown}=>{g}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdeleOp {
    Mul,
    Inv,
    Pow(i64),
}

impl Idele {
    /// Builds an idele, dropping exceptions that coincide with the tail.
    pub fn new(tail: Function, exceptions: impl IntoIterator<Item = (Place, Function)>) -> Result<Idele> {
        let curve = tail.curve().clone();
        let mut map = BTreeMap::new();
        for (place, g) in exceptions {
            curve.check_place(&place)?;
            if g.curve() != &curve {
                return Err(Error::structural("idele components on different curves"));
            }
            if map.insert(place.clone(), g).is_some() {
                return Err(Error::Semantic(format!("place {place} listed twice")));
            }
        }
        Ok(Idele { tail, exceptions: map }.pruned())
    }

    fn pruned(mut self) -> Idele {
        let tail = &self.tail;
        self.exceptions.retain(|_, g| g != tail);
        self
    }

    pub fn identity(curve: &Curve) -> Idele {
        Idele { tail: Function::one(curve), exceptions: BTreeMap::new() }
    }

    /// The diagonal image of a global function.
    pub fn principal(f: &Function) -> Idele {
        Idele { tail: f.clone(), exceptions: BTreeMap::new() }
    }

    /// Tail 1 and component `π_x^{D(x)}` at each `x` in the support of `D`.
    pub fn uniformizer_idele(d: &Divisor) -> Result<Idele> {
        let curve = d.curve();
        let exceptions =
            d.terms().map(|(x, n)| Ok((x.clone(), uniformizer(curve, x)?.pow(n)))).collect::<Result<Vec<_>>>()?;
        Idele::new(Function::one(curve), exceptions)
    }

    pub fn curve(&self) -> &Curve {
        self.tail.curve()
    }

    pub fn tail(&self) -> &Function {
        &self.tail
    }

    pub fn exceptions(&self) -> &BTreeMap<Place, Function> {
        &self.exceptions
    }

    /// The component at `place`.
    pub fn component(&self, place: &Place) -> &Function {
        self.exceptions.get(place).unwrap_or(&self.tail)
    }

    /// Every place where the component can have nonzero order.
    pub fn support_candidates(&self) -> Result<BTreeSet<Place>> {
        let mut places: BTreeSet<Place> = self.exceptions.keys().cloned().collect();
        places.extend(divisor_of(&self.tail)?.support().cloned());
        Ok(places)
    }

    /// `div(α) = Σ ord_x(α_x)·x` and `deg(α)`.
    pub fn divisor_degree(&self) -> Result<(Divisor, i64)> {
        let terms = self
            .support_candidates()?
            .into_iter()
            .map(|x| {
                let n = order_at(self.component(&x), &x)?;
                Ok((x, n))
            })
            .collect::<Result<Vec<_>>>()?;
        let d = Divisor::from_terms(self.curve(), terms)?;
        let deg = d.degree();
        Ok((d, deg))
    }

    pub fn degree(&self) -> Result<i64> {
        Ok(self.divisor_degree()?.1)
    }

    /// True when every component has order zero.
    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.divisor_degree()?.0.is_zero())
    }

    pub fn checked_mul(&self, other: &Idele) -> Result<Idele> {
        if self.curve() != other.curve() {
            return Err(Error::structural("ideles on different curves"));
        }
        let tail = self.tail.checked_mul(&other.tail)?;
        let keys: BTreeSet<&Place> = self.exceptions.keys().chain(other.exceptions.keys()).collect();
        let exceptions = keys
            .into_iter()
            .map(|x| Ok((x.clone(), self.component(x).checked_mul(other.component(x))?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Idele { tail, exceptions }.pruned())
    }

    pub fn inv(&self) -> Idele {
        self.pow(-1)
    }

    pub fn pow(&self, e: i64) -> Idele {
        Idele {
            tail: self.tail.pow(e),
            exceptions: self.exceptions.iter().map(|(x, g)| (x.clone(), g.pow(e))).collect(),
        }
        .pruned()
    }

    /// Replaces the component at one place.
    pub fn with_component(&self, place: Place, g: Function) -> Result<Idele> {
        self.curve().check_place(&place)?;
        let mut out = self.clone();
        out.exceptions.insert(place, g);
        Ok(out.pruned())
    }
}

/// Componentwise group law.
pub fn idele_combine(a: &Idele, b: Option<&Idele>, op: IdeleOp) -> Result<Idele> {
    match op {
        IdeleOp::Mul => a.checked_mul(b.ok_or_else(|| Error::structural("multiplication needs two ideles"))?),
        IdeleOp::Inv => Ok(a.inv()),
        IdeleOp::Pow(e) => Ok(a.pow(e)),
    }
}

/// Places outside of which both components of every idele are units.
pub fn pairing_support(a: &Idele, b: &Idele) -> Result<BTreeSet<Place>> {
    let mut places = a.support_candidates()?;
    places.extend(b.support_candidates()?);
    Ok(places)
}

/// `∏_{x ∈ places} Nm[(α_x, β_x)_x]`.
pub fn symbol_product_over(a: &Idele, b: &Idele, places: impl IntoIterator<Item = Place>) -> Result<Fe> {
    let mut acc = a.curve().base().one();
    for x in places {
        acc = &acc * &tame_symbol_norm(a.component(&x), b.component(&x), &x)?;
    }
    Ok(acc)
}

/// The unsigned product `∏_x Nm[(α_x, β_x)_x]`.
pub fn unsigned_pairing(a: &Idele, b: &Idele) -> Result<Fe> {
    if a.curve() != b.curve() {
        return Err(Error::structural("ideles on different curves"));
    }
    symbol_product_over(a, b, pairing_support(a, b)?)
}

/// `⟨α, β⟩ = (-1)^{deg α · deg β} · ∏_x Nm[(α_x, β_x)_x]`.
pub fn commutator_pairing(a: &Idele, b: &Idele) -> Result<Fe> {
    let v = unsigned_pairing(a, b)?;
    let odd = (a.degree()? * b.degree()?) % 2 != 0;
    Ok(if odd { -v } else { v })
}

/// A function of order zero at `x` with random value there.
fn random_unit_at<R: Rng + ?Sized>(curve: &Curve, x: &Place, rng: &mut R) -> Result<Function> {
    let f = random_function(curve, 2, rng);
    let n = order_at(&f, x)?;
    f.checked_mul(&uniformizer(curve, x)?.pow(-n))
}

/// A random idele: random tail and one to three random exceptional components.
pub fn random_idele<R: Rng + ?Sized>(curve: &Curve, rng: &mut R) -> Result<Idele> {
    let tail = random_function(curve, 2, rng);
    let mut exceptions = BTreeMap::new();
    for _ in 0..rng.gen_range(1..=3) {
        exceptions.insert(random_place(curve, rng), random_function(curve, 2, rng));
    }
    Idele::new(tail, exceptions)
}

/// A random idele of degree zero, corrected at the base place.
pub fn random_degree_zero_idele<R: Rng + ?Sized>(curve: &Curve, rng: &mut R) -> Result<Idele> {
    let a = random_idele(curve, rng)?;
    let deg = a.degree()?;
    a.checked_mul(&Idele::uniformizer_idele(&Divisor::point(curve, curve.base_place(), -deg)?)?)
}

/// A random unit idele: a random tail whose zeros and poles are all overridden by
/// unit components, plus a few more unit exceptions.
pub fn random_unit_idele<R: Rng + ?Sized>(curve: &Curve, rng: &mut R) -> Result<Idele> {
    let tail = random_function(curve, 2, rng);
    let mut places: BTreeSet<Place> = divisor_of(&tail)?.support().cloned().collect();
    for _ in 0..rng.gen_range(0..=2) {
        places.insert(random_place(curve, rng));
    }
    let exceptions = places
        .into_iter()
        .map(|x| {
            let u = random_unit_at(curve, &x, rng)?;
            Ok((x, u))
        })
        .collect::<Result<Vec<_>>>()?;
    Idele::new(tail, exceptions)
}

pub fn random_principal_idele<R: Rng + ?Sized>(curve: &Curve, rng: &mut R) -> Idele {
    Idele::principal(&random_function(curve, 3, rng))
}

/// The outcome of sampling one of the four pairing conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionCheck {
    pub name: &'static str,
    pub samples: usize,
    pub failures: usize,
    pub witness: Option<String>,
}

impl ConditionCheck {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub checks: Vec<ConditionCheck>,
}

impl ConditionReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(ConditionCheck::passed)
    }
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed() { "pass" } else { "FAIL" };
            write!(f, "{status} {} ({} samples)", c.name, c.samples)?;
            if let Some(w) = &c.witness {
                write!(f, " witness: {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Samples the conditions on the unsigned pairing for `A = A' =` degree-zero ideles,
/// `B = B' =` principal ideles and `C = C' =` unit ideles. `B ∩ C` is the constants.
pub fn check_pairing_conditions(curve: &Curve, samples: usize, seed: u64) -> Result<ConditionReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    type Sampler = fn(&Curve, &mut ChaCha8Rng) -> Result<(Idele, Idele)>;
    let conditions: [(&'static str, Sampler); 4] = [
        ("<B,B'> = 1 (principal, principal)", |c, r| Ok((random_principal_idele(c, r), random_principal_idele(c, r)))),
        ("<C,C'> = 1 (unit, unit)", |c, r| Ok((random_unit_idele(c, r)?, random_unit_idele(c, r)?))),
        ("<B∩C,A'> = 1 (constant, degree 0)", |c, r| {
            let k = c.base().random_nonzero(r);
            Ok((Idele::principal(&Function::constant(c, k)?), random_degree_zero_idele(c, r)?))
        }),
        ("<A,B'∩C'> = 1 (degree 0, constant)", |c, r| {
            let k = c.base().random_nonzero(r);
            Ok((random_degree_zero_idele(c, r)?, Idele::principal(&Function::constant(c, k)?)))
        }),
    ];
    let mut checks = Vec::new();
    for (name, sample) in conditions {
        let mut failures = 0;
        let mut witness = None;
        for _ in 0..samples {
            let (a, b) = sample(curve, &mut rng)?;
            let v = unsigned_pairing(&a, &b)?;
            if !v.is_one() {
                failures += 1;
                witness.get_or_insert_with(|| format!("<{a}, {b}> = {v}"));
            }
        }
        checks.push(ConditionCheck { name, samples, failures, witness });
    }
    Ok(ConditionReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::{Field, Poly};

    fn line5() -> (Field, Curve) {
        let k = Field::prime(5).unwrap();
        (k.clone(), Curve::projective_line(&k))
    }

    fn fin(k: &Field, c: &[u64]) -> Place {
        Place::Finite(Poly::from_u64s(k, c))
    }

    #[test]
    fn divisor_examples() {
        let (k, l) = line5();
        let f = Function::from_poly(&l, Poly::from_u64s(&k, &[0, 4, 1])).unwrap();
        let (d, deg) = Idele::principal(&f).divisor_degree().unwrap();
        assert_eq!(d.to_string(), "-2*(inf)+1*(t)+1*(t+4)");
        assert_eq!(deg, 0);

        let t = Function::coordinate(&l);
        let a = Idele::new(Function::one(&l), [(fin(&k, &[0, 1]), t.pow(3))]).unwrap();
        assert_eq!(a.divisor_degree().unwrap().1, 3);

        let tail = Function::from_poly(&l, Poly::from_u64s(&k, &[4, 1])).unwrap().inv();
        let b = Idele::new(tail, [(fin(&k, &[4, 1]), Function::one(&l))]).unwrap();
        let (d, deg) = b.divisor_degree().unwrap();
        assert_eq!(d.to_string(), "1*(inf)");
        assert_eq!(deg, 1);
    }

    #[test]
    fn group_law_examples() {
        let (k, l) = line5();
        let t = Function::coordinate(&l);
        let a = Idele::new(Function::one(&l), [(fin(&k, &[0, 1]), t.clone())]).unwrap();
        assert_eq!(a.checked_mul(&a.inv()).unwrap(), Idele::identity(&l));
        assert_eq!(a.pow(2).to_string(), "tail=1; (t)=>t^2");
        let d = Divisor::from_terms(&l, [(fin(&k, &[0, 1]), 1), (Place::Infinity, -1)]).unwrap();
        assert_eq!(Idele::uniformizer_idele(&d).unwrap().to_string(), "tail=1; (inf)=>t; (t)=>t");
    }

    #[test]
    fn elliptic_uniformizer_idele() {
        let k = Field::prime(5).unwrap();
        let e = Curve::elliptic(&k, k.from_u64(4), k.zero()).unwrap();
        let d = Divisor::from_terms(&e, [(Place::Affine(k.zero(), k.zero()), 1), (Place::Origin, -1)]).unwrap();
        let a = Idele::uniformizer_idele(&d).unwrap();
        assert_eq!(a.to_string(), "tail=1; (O)=>y/x; (0,0)=>y");
        assert_eq!(a.divisor_degree().unwrap().0, d);
    }

    #[test]
    fn two_exception_pairing_is_minus_one() {
        let (k, l) = line5();
        let t = Function::coordinate(&l);
        let t1 = Function::from_poly(&l, Poly::from_u64s(&k, &[4, 1])).unwrap();
        let a = Idele::new(Function::one(&l), [(fin(&k, &[0, 1]), t)]).unwrap();
        let b = Idele::new(Function::one(&l), [(fin(&k, &[4, 1]), t1)]).unwrap();
        assert_eq!(commutator_pairing(&a, &b).unwrap(), k.from_u64(4));
        assert_eq!(unsigned_pairing(&a, &b).unwrap(), k.one());
    }

    #[test]
    fn conditions_hold_on_a_few_samples() {
        let (_, l) = line5();
        let report = check_pairing_conditions(&l, 5, 9).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.checks.len(), 4);
    }
}
