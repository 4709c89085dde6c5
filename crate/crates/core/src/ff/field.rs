//! Prime fields and towers of finite extensions.
//!
//! A [`Field`] is either `GF(p)` or `base[u]/(modulus)` for a monic irreducible
//! modulus over `base`. Elements store their coordinates flattened all the way
//! down to `GF(p)`, so an element of a field of absolute degree `N` is a vector
//! of `N` residues in `[0, p)`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};

/// Names of the adjoined generators, indexed by tower level.
const GENERATOR_NAMES: [&str; 3] = ["u", "v", "w"];

#[derive(Debug)]
struct FieldData {
    p: u64,
    base: Option<Field>,
    /// Monic modulus over `base`, flattened: `degree + 1` chunks of `base.abs_degree()`.
    modulus: Vec<u64>,
    degree: usize,
    abs_degree: usize,
    level: usize,
    order: u128,
}

/// A finite field, cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.degree == other.0.degree
                && self.0.modulus == other.0.modulus
                && self.0.base == other.0.base)
    }
}

impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.abs_degree.hash(state);
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[inline]
fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

impl Field {
    /// The prime field `GF(p)`.
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::Semantic(format!("{p} is not prime")));
        }
        Ok(Field(Arc::new(FieldData {
            p,
            base: None,
            modulus: Vec::new(),
            degree: 1,
            abs_degree: 1,
            level: 0,
            order: p as u128,
        })))
    }

    /// `GF(p^n)` over `GF(p)` with the lexicographically smallest monic irreducible modulus.
    pub fn gf(p: u64, n: usize) -> Result<Field> {
        let fp = Field::prime(p)?;
        if n == 1 {
            return Ok(fp);
        }
        let modulus = super::poly::smallest_irreducible(&fp, n)?;
        Field::extension_unchecked(&fp, &modulus)
    }

    /// `base[u]/(modulus)`, after checking that the modulus is monic and irreducible.
    pub fn extension(base: &Field, modulus: &super::Poly) -> Result<Field> {
        if modulus.field() != base {
            return Err(Error::structural("modulus is not defined over the base field"));
        }
        if modulus.degree().unwrap_or(0) < 1 {
            return Err(Error::Semantic("modulus must have degree at least 1".into()));
        }
        if !modulus.is_monic() {
            return Err(Error::Semantic(format!("modulus {modulus} is not monic")));
        }
        if !modulus.is_irreducible() {
            return Err(Error::Semantic(format!("modulus {modulus} is reducible")));
        }
        Field::extension_unchecked(base, modulus)
    }

    /// As [`Field::extension`] without the irreducibility test. The caller vouches for it.
    pub fn extension_unchecked(base: &Field, modulus: &super::Poly) -> Result<Field> {
        let degree = modulus
            .degree()
            .filter(|&d| d >= 1)
            .ok_or_else(|| Error::Semantic("modulus must have degree at least 1".into()))?;
        let abs_degree = degree * base.abs_degree();
        let bits = 64 - base.0.p.leading_zeros() as usize;
        if bits * abs_degree > 120 {
            return Err(Error::domain("field order too large for exact exponent arithmetic"));
        }
        let mut flat = Vec::with_capacity((degree + 1) * base.abs_degree());
        for c in modulus.coeffs() {
            flat.extend_from_slice(&c.v);
        }
        let order = (base.0.p as u128).pow(abs_degree as u32);
        Ok(Field(Arc::new(FieldData {
            p: base.0.p,
            base: Some(base.clone()),
            modulus: flat,
            degree,
            abs_degree,
            level: base.0.level + 1,
            order,
        })))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    /// Degree over the immediate base field.
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// Degree over the prime field.
    pub fn abs_degree(&self) -> usize {
        self.0.abs_degree
    }

    pub fn order(&self) -> u128 {
        self.0.order
    }

    pub fn level(&self) -> usize {
        self.0.level
    }

    pub fn base(&self) -> Option<&Field> {
        self.0.base.as_ref()
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.base.is_none()
    }

    /// The defining modulus over the base field; `None` for a prime field.
    pub fn modulus(&self) -> Option<super::Poly> {
        let base = self.0.base.as_ref()?;
        let w = base.abs_degree();
        let coeffs = self.0.modulus.chunks(w).map(|c| Fe { field: base.clone(), v: c.to_vec() }).collect();
        Some(super::Poly::new(base, coeffs))
    }

    /// True when `self` is `other` or is built on top of it.
    pub fn contains(&self, other: &Field) -> bool {
        let mut cur = Some(self);
        while let Some(f) = cur {
            if f == other {
                return true;
            }
            cur = f.base();
        }
        false
    }

    pub fn zero(&self) -> Fe {
        Fe { field: self.clone(), v: vec![0; self.0.abs_degree] }
    }

    pub fn one(&self) -> Fe {
        self.from_u64(1)
    }

    pub fn from_u64(&self, n: u64) -> Fe {
        let mut v = vec![0; self.0.abs_degree];
        v[0] = n % self.0.p;
        Fe { field: self.clone(), v }
    }

    pub fn from_i64(&self, n: i64) -> Fe {
        let p = self.0.p as i128;
        let r = (n as i128).rem_euclid(p) as u64;
        self.from_u64(r)
    }

    /// The adjoined generator `u` of `base[u]/(modulus)`.
    pub fn generator(&self) -> Result<Fe> {
        let base = self.base().ok_or_else(|| Error::domain("a prime field has no adjoined generator"))?;
        if self.0.degree == 1 {
            // u is the root of a linear modulus u + c0
            let c0 = Fe { field: base.clone(), v: self.0.modulus[..base.abs_degree()].to_vec() };
            return Ok(self.embed(&(-&c0)).expect("base embeds"));
        }
        let mut v = vec![0; self.0.abs_degree];
        v[base.abs_degree()] = 1;
        Ok(Fe { field: self.clone(), v })
    }

    /// Embeds an element of a subfield in the tower below `self`.
    pub fn embed(&self, x: &Fe) -> Result<Fe> {
        if &x.field == self {
            return Ok(x.clone());
        }
        if !self.contains(&x.field) {
            return Err(Error::structural(format!("{} is not a subfield of {}", x.field, self)));
        }
        let mut v = x.v.clone();
        v.resize(self.0.abs_degree, 0);
        Ok(Fe { field: self.clone(), v })
    }

    /// Element with coordinates `coeffs` over the immediate base field (low degree first).
    pub fn from_base_coeffs(&self, coeffs: &[Fe]) -> Result<Fe> {
        let base = self.base().ok_or_else(|| Error::domain("prime field has no base coordinates"))?;
        if coeffs.len() > self.0.degree {
            return Err(Error::structural("too many coordinates for this extension"));
        }
        let mut v = Vec::with_capacity(self.0.abs_degree);
        for c in coeffs {
            if &c.field != base {
                return Err(Error::structural("coordinate not in the base field"));
            }
            v.extend_from_slice(&c.v);
        }
        v.resize(self.0.abs_degree, 0);
        Ok(Fe { field: self.clone(), v })
    }

    /// Element from raw residues over `GF(p)`.
    pub fn from_residues(&self, v: &[u64]) -> Result<Fe> {
        if v.len() != self.0.abs_degree {
            return Err(Error::structural("wrong number of residues"));
        }
        Ok(Fe { field: self.clone(), v: v.iter().map(|x| x % self.0.p).collect() })
    }

    /// The `i`-th element in the canonical enumeration (base-`p` digits of `i`).
    pub fn element(&self, mut i: u128) -> Fe {
        let p = self.0.p as u128;
        let mut v = vec![0; self.0.abs_degree];
        for c in v.iter_mut() {
            *c = (i % p) as u64;
            i /= p;
        }
        Fe { field: self.clone(), v }
    }

    /// All elements, in enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.0.order).map(move |i| self.element(i))
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Fe {
        let p = self.0.p;
        Fe { field: self.clone(), v: (0..self.0.abs_degree).map(|_| rng.gen_range(0..p)).collect() }
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Fe {
        loop {
            let x = self.random(rng);
            if !x.is_zero() {
                return x;
            }
        }
    }

    fn mul_raw(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let d = &self.0;
        let p = d.p;
        match &d.base {
            None => vec![mulmod(a[0], b[0], p)],
            Some(base) if base.is_prime_field() => {
                let n = d.degree;
                let mut prod = vec![0u64; 2 * n - 1];
                for (i, &ai) in a.iter().enumerate() {
                    if ai == 0 {
                        continue;
                    }
                    for (j, &bj) in b.iter().enumerate() {
                        prod[i + j] = addmod(prod[i + j], mulmod(ai, bj, p), p);
                    }
                }
                for k in (n..2 * n - 1).rev() {
                    let c = prod[k];
                    if c == 0 {
                        continue;
                    }
                    for i in 0..n {
                        let t = mulmod(c, d.modulus[i], p);
                        prod[k - n + i] = submod(prod[k - n + i], t, p);
                    }
                }
                prod.truncate(n);
                prod
            }
            Some(base) => {
                let n = d.degree;
                let w = base.abs_degree();
                let mut prod = vec![0u64; (2 * n - 1) * w];
                for i in 0..n {
                    let ai = &a[i * w..(i + 1) * w];
                    if ai.iter().all(|&x| x == 0) {
                        continue;
                    }
                    for j in 0..n {
                        let bj = &b[j * w..(j + 1) * w];
                        if bj.iter().all(|&x| x == 0) {
                            continue;
                        }
                        let t = base.mul_raw(ai, bj);
                        for (dst, s) in prod[(i + j) * w..(i + j + 1) * w].iter_mut().zip(t) {
                            *dst = addmod(*dst, s, p);
                        }
                    }
                }
                for k in (n..2 * n - 1).rev() {
                    let c = prod[k * w..(k + 1) * w].to_vec();
                    if c.iter().all(|&x| x == 0) {
                        continue;
                    }
                    for i in 0..n {
                        let mi = &d.modulus[i * w..(i + 1) * w];
                        if mi.iter().all(|&x| x == 0) {
                            continue;
                        }
                        let t = base.mul_raw(&c, mi);
                        let off = (k - n + i) * w;
                        for (dst, s) in prod[off..off + w].iter_mut().zip(t) {
                            *dst = submod(*dst, s, p);
                        }
                    }
                }
                prod.truncate(n * w);
                prod
            }
        }
    }

    pub fn generator_name(&self) -> String {
        let l = self.0.level;
        if l == 0 {
            String::new()
        } else if l <= GENERATOR_NAMES.len() {
            GENERATOR_NAMES[l - 1].to_string()
        } else {
            format!("u{l}")
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.base() {
            None => write!(f, "GF({})", self.0.p),
            Some(base) if base.is_prime_field() => {
                let m = self.modulus().expect("extension has a modulus");
                write!(f, "GF({};{})", self.0.order, m.to_string_in(&self.generator_name()))
            }
            Some(base) => {
                let m = self.modulus().expect("extension has a modulus");
                write!(f, "{}[{}]/({})", base, self.generator_name(), m.to_string_in(&self.generator_name()))
            }
        }
    }
}

/// An element of a [`Field`] in canonical form.
#[derive(Clone)]
pub struct Fe {
    field: Field,
    v: Vec<u64>,
}

impl PartialEq for Fe {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v && self.field == other.field
    }
}

impl Eq for Fe {}

impl Hash for Fe {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.v.hash(state);
    }
}

impl PartialOrd for Fe {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by residues from the highest coordinate down.
impl Ord for Fe {
    fn cmp(&self, other: &Self) -> Ordering {
        self.v.iter().rev().cmp(other.v.iter().rev())
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Fe {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Raw residues over `GF(p)`.
    pub fn residues(&self) -> &[u64] {
        &self.v
    }

    pub fn is_zero(&self) -> bool {
        self.v.iter().all(|&x| x == 0)
    }

    pub fn is_one(&self) -> bool {
        self.v[0] == 1 && self.v[1..].iter().all(|&x| x == 0)
    }

    /// True when the element lies in the prime field.
    pub fn is_prime_field_value(&self) -> bool {
        self.v[1..].iter().all(|&x| x == 0)
    }

    /// Coordinates over the immediate base field (low degree first).
    pub fn base_coeffs(&self) -> Option<Vec<Fe>> {
        let base = self.field.base()?;
        let w = base.abs_degree();
        Some(self.v.chunks(w).map(|c| Fe { field: base.clone(), v: c.to_vec() }).collect())
    }

    /// Pulls the element down to `sub` when it lies there.
    pub fn restrict_to(&self, sub: &Field) -> Option<Fe> {
        if !self.field.contains(sub) {
            return None;
        }
        let n = sub.abs_degree();
        if self.v[n..].iter().any(|&x| x != 0) {
            return None;
        }
        Some(Fe { field: sub.clone(), v: self.v[..n].to_vec() })
    }

    fn check(&self, other: &Fe) -> Result<()> {
        if self.field != other.field {
            return Err(Error::structural(format!(
                "operands live in different fields: {} and {}",
                self.field, other.field
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Fe) -> Result<Fe> {
        self.check(other)?;
        let p = self.field.0.p;
        let v = self.v.iter().zip(&other.v).map(|(&a, &b)| addmod(a, b, p)).collect();
        Ok(Fe { field: self.field.clone(), v })
    }

    pub fn checked_sub(&self, other: &Fe) -> Result<Fe> {
        self.check(other)?;
        let p = self.field.0.p;
        let v = self.v.iter().zip(&other.v).map(|(&a, &b)| submod(a, b, p)).collect();
        Ok(Fe { field: self.field.clone(), v })
    }

    pub fn checked_mul(&self, other: &Fe) -> Result<Fe> {
        self.check(other)?;
        Ok(Fe { field: self.field.clone(), v: self.field.mul_raw(&self.v, &other.v) })
    }

    pub fn checked_div(&self, other: &Fe) -> Result<Fe> {
        self.check(other)?;
        self.checked_mul(&other.inv()?)
    }

    /// Multiplicative inverse; division by zero is an arithmetic error.
    pub fn inv(&self) -> Result<Fe> {
        if self.is_zero() {
            return Err(Error::arithmetic("division by zero"));
        }
        Ok(self.pow_u128(self.field.order() - 2))
    }

    pub fn pow_u128(&self, mut e: u128) -> Fe {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Fe> {
        if e >= 0 {
            Ok(self.pow_u128(e as u128))
        } else {
            Ok(self.inv()?.pow_u128(e.unsigned_abs() as u128))
        }
    }

    /// Inverse Frobenius: the unique `r` with `r^p = self`.
    pub fn pth_root(&self) -> Fe {
        self.pow_u128(self.field.order() / self.field.0.p as u128)
    }

    pub fn is_square(&self) -> bool {
        if self.is_zero() || self.field.0.p == 2 {
            return true;
        }
        self.pow_u128((self.field.order() - 1) / 2).is_one()
    }

    /// A square root, or `None` for non-squares (Tonelli–Shanks; odd characteristic
    /// only, every element is a square in characteristic 2).
    pub fn sqrt(&self) -> Option<Fe> {
        let q = self.field.order();
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.field.0.p == 2 {
            return Some(self.pow_u128(q / 2));
        }
        if !self.is_square() {
            return None;
        }
        let mut s = 0u32;
        let mut t = q - 1;
        while t.is_multiple_of(2) {
            t /= 2;
            s += 1;
        }
        let z = (1..q)
            .map(|i| self.field.element(i))
            .find(|z| !z.is_square())
            .expect("a non-square exists in odd characteristic");
        let mut m = s;
        let mut c = z.pow_u128(t);
        let mut tt = self.pow_u128(t);
        let mut r = self.pow_u128(t.div_ceil(2));
        while !tt.is_one() {
            let mut i = 0;
            let mut probe = tt.clone();
            while !probe.is_one() {
                probe = &probe * &probe;
                i += 1;
            }
            let mut b = c.clone();
            for _ in 0..(m - i - 1) {
                b = &b * &b;
            }
            m = i;
            c = &b * &b;
            tt = &tt * &c;
            r = &r * &b;
        }
        Some(r)
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self) -> Result<u128> {
        if self.is_zero() {
            return Err(Error::domain("zero has no multiplicative order"));
        }
        let n = self.field.order() - 1;
        let mut ord = n;
        for (prime, _) in factor_u128(n) {
            while ord.is_multiple_of(prime) && self.pow_u128(ord / prime).is_one() {
                ord /= prime;
            }
        }
        Ok(ord)
    }

    pub(crate) fn write_in(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }

    /// Canonical text: an integer in `[0, p)` or a polynomial in the tower generator.
    pub fn render(&self) -> String {
        match self.base_coeffs() {
            None => self.v[0].to_string(),
            Some(coeffs) => {
                let var = self.field.generator_name();
                let mut terms = Vec::new();
                for (i, c) in coeffs.iter().enumerate().rev() {
                    if c.is_zero() {
                        continue;
                    }
                    let cs = c.render();
                    let compound = cs.contains('+');
                    let mono = match i {
                        0 => String::new(),
                        1 => var.clone(),
                        _ => format!("{var}^{i}"),
                    };
                    let term = if i == 0 {
                        cs
                    } else if c.is_one() {
                        mono
                    } else if compound {
                        format!("({cs})*{mono}")
                    } else {
                        format!("{cs}*{mono}")
                    };
                    terms.push(term);
                }
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join("+")
                }
            }
        }
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_in(f)
    }
}

/// Trial-division factorisation of a positive integer.
pub fn factor_u128(mut n: u128) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a Fe> for &'a Fe {
            type Output = Fe;
            fn $method(self, rhs: &'a Fe) -> Fe {
                self.$checked(rhs).expect(concat!("Fe::", stringify!($method)))
            }
        }
        impl $trait<Fe> for Fe {
            type Output = Fe;
            fn $method(self, rhs: Fe) -> Fe {
                (&self).$checked(&rhs).expect(concat!("Fe::", stringify!($method)))
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl Neg for &Fe {
    type Output = Fe;
    fn neg(self) -> Fe {
        self.field.zero().checked_sub(self).expect("same field")
    }
}

impl Neg for Fe {
    type Output = Fe;
    fn neg(self) -> Fe {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(&f5.from_u64(2) + &f5.from_u64(4), f5.from_u64(1));
        assert_eq!(f5.from_u64(2).inv().unwrap(), f5.from_u64(3));
        assert_eq!(f5.from_i64(-1), f5.from_u64(4));
        assert!(Field::prime(9).is_err());
    }

    #[test]
    fn gf9_relation() {
        let f9 = Field::gf(3, 2).unwrap();
        assert_eq!(f9.to_string(), "GF(9;u^2+1)");
        let u = f9.generator().unwrap();
        assert_eq!(&u * &u, f9.from_u64(2));
    }

    #[test]
    fn division_by_zero_is_arithmetic_error() {
        let f7 = Field::prime(7).unwrap();
        assert!(matches!(f7.zero().inv(), Err(Error::Arithmetic(_))));
        assert!(f7.from_u64(3).pow(-2).is_ok());
    }

    #[test]
    fn mismatched_fields_are_structural() {
        let a = Field::prime(5).unwrap().one();
        let b = Field::prime(7).unwrap().one();
        assert!(matches!(a.checked_add(&b), Err(Error::Structural(_))));
    }

    #[test]
    fn sqrt_and_order() {
        let f = Field::gf(19, 2).unwrap();
        for x in f.elements() {
            let sq = &x * &x;
            let r = sq.sqrt().unwrap();
            assert_eq!(&r * &r, sq);
        }
        assert_eq!(f.from_u64(18).multiplicative_order().unwrap(), 2);
    }

    #[test]
    fn render_extension_elements() {
        let f9 = Field::gf(3, 2).unwrap();
        let u = f9.generator().unwrap();
        let x = &(&u * &f9.from_u64(2)) + &f9.one();
        assert_eq!(x.render(), "2*u+1");
        assert_eq!(f9.zero().render(), "0");
    }
}
