//! Dense univariate polynomials over a [`Field`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{factor_u128, Fe, Field};
use crate::error::{Error, Result};

/// Default seed for the randomized equal-degree splitting step.
pub const DEFAULT_FACTOR_SEED: u64 = 0x5eed_fac7;

/// A polynomial with coefficients low degree first, trailing zeros stripped.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    c: Vec<Fe>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_in("t"))
    }
}

/// Degree first, then coefficients from the top down.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.c.len().cmp(&other.c.len()).then_with(|| self.c.iter().rev().cmp(other.c.iter().rev()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Poly {
    pub fn new(field: &Field, mut c: Vec<Fe>) -> Poly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        debug_assert!(c.iter().all(|x| x.field() == field));
        Poly { field: field.clone(), c }
    }

    /// Checked constructor used at API boundaries.
    pub fn try_new(field: &Field, c: Vec<Fe>) -> Result<Poly> {
        if c.iter().any(|x| x.field() != field) {
            return Err(Error::structural("coefficient outside the polynomial's field"));
        }
        Ok(Poly::new(field, c))
    }

    pub fn from_u64s(field: &Field, c: &[u64]) -> Poly {
        Poly::new(field, c.iter().map(|&x| field.from_u64(x)).collect())
    }

    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), c: Vec::new() }
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field.one())
    }

    pub fn constant(c: Fe) -> Poly {
        let field = c.field().clone();
        Poly::new(&field, vec![c])
    }

    /// The variable itself.
    pub fn x(field: &Field) -> Poly {
        Poly::monomial(field.one(), 1)
    }

    pub fn monomial(c: Fe, deg: usize) -> Poly {
        let field = c.field().clone();
        let mut v = vec![field.zero(); deg];
        v.push(c);
        Poly::new(&field, v)
    }

    /// `x - a`.
    pub fn linear(a: &Fe) -> Poly {
        let f = a.field().clone();
        Poly::new(&f, vec![-a, f.one()])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.c.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree with `-1` for zero.
    pub fn deg_i64(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.c.last().is_some_and(|x| x.is_one())
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lc(&self) -> Fe {
        self.c.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn scale(&self, s: &Fe) -> Poly {
        Poly::new(&self.field, self.c.iter().map(|x| x * s).collect())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self.lc().inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::structural("polynomials over different fields"));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let n = self.c.len().max(other.c.len());
        let c = (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect();
        Ok(Poly::new(&self.field, c))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let n = self.c.len().max(other.c.len());
        let c = (0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect();
        Ok(Poly::new(&self.field, c))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let mut c = vec![self.field.zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        Ok(Poly::new(&self.field, c))
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        self.check(d)?;
        if d.is_zero() {
            return Err(Error::arithmetic("polynomial division by zero"));
        }
        let dd = d.c.len() - 1;
        if self.c.len() <= dd {
            return Ok((Poly::zero(&self.field), self.clone()));
        }
        let inv_lc = d.lc().inv()?;
        let mut r = self.c.clone();
        let mut q = vec![self.field.zero(); self.c.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = &r[k + dd] * &inv_lc;
            if coef.is_zero() {
                continue;
            }
            for (i, di) in d.c.iter().enumerate() {
                r[k + i] = &r[k + i] - &(&coef * di);
            }
            q[k] = coef;
        }
        r.truncate(dd);
        Ok((Poly::new(&self.field, q), Poly::new(&self.field, r)))
    }

    pub fn rem(&self, d: &Poly) -> Result<Poly> {
        Ok(self.div_rem(d)?.1)
    }

    /// Exact quotient; errors when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::arithmetic(format!("{d} does not divide {self}")));
        }
        Ok(q)
    }

    /// Monic gcd (zero when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        let c = self.c.iter().enumerate().skip(1).map(|(i, x)| x * &self.field.from_u64(i as u64)).collect();
        Poly::new(&self.field, c)
    }

    pub fn eval(&self, x: &Fe) -> Fe {
        let mut acc = x.field().zero();
        for c in self.c.iter().rev() {
            acc = &(&acc * x) + &x.field().embed(c).expect("evaluation point lies over the coefficient field");
        }
        acc
    }

    /// Coefficients mapped into an extension field containing this one.
    pub fn embed(&self, ext: &Field) -> Result<Poly> {
        let c = self.c.iter().map(|x| ext.embed(x)).collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(ext, c))
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.field);
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

    pub fn pow_mod(&self, mut e: u128, m: &Poly) -> Poly {
        let mut base = self.rem(m).expect("nonzero modulus");
        let mut acc = Poly::one(&self.field).rem(m).expect("nonzero modulus");
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(m).expect("nonzero modulus");
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).rem(m).expect("nonzero modulus");
            }
        }
        acc
    }

    /// Largest `k` with `d^k | self`, and the cofactor `self / d^k`.
    pub fn valuation(&self, d: &Poly) -> (u32, Poly) {
        let mut k = 0;
        let mut cur = self.clone();
        if cur.is_zero() || d.is_constant() {
            return (0, cur);
        }
        loop {
            let (q, r) = cur.div_rem(d).expect("nonzero divisor");
            if !r.is_zero() {
                return (k, cur);
            }
            cur = q;
            k += 1;
        }
    }

    /// Multiplicity of `a` as a root.
    pub fn root_multiplicity(&self, a: &Fe) -> u32 {
        self.valuation(&Poly::linear(a)).0
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.c.is_empty() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.render();
            let compound = cs.contains('+');
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            terms.push(if i == 0 {
                if compound && self.c.len() > 1 {
                    format!("({cs})")
                } else {
                    cs
                }
            } else if c.is_one() {
                mono
            } else if compound {
                format!("({cs})*{mono}")
            } else {
                format!("{cs}*{mono}")
            });
        }
        terms.join("+")
    }

    pub fn random<R: Rng + ?Sized>(field: &Field, max_deg: usize, rng: &mut R) -> Poly {
        let d = rng.gen_range(0..=max_deg);
        Poly::new(field, (0..=d).map(|_| field.random(rng)).collect())
    }

    pub fn random_monic<R: Rng + ?Sized>(field: &Field, deg: usize, rng: &mut R) -> Poly {
        let mut c: Vec<Fe> = (0..deg).map(|_| field.random(rng)).collect();
        c.push(field.one());
        Poly::new(field, c)
    }

    /// Rabin's irreducibility test.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            Some(0) | None => return false,
            Some(n) => n,
        };
        if n == 1 {
            return true;
        }
        let f = self.monic();
        let q = self.field.order();
        let x = Poly::x(&self.field);
        let frob = |h: &Poly, times: usize| {
            let mut h = h.clone();
            for _ in 0..times {
                h = h.pow_mod(q, &f);
            }
            h
        };
        if frob(&x, n) != x.rem(&f).unwrap() {
            return false;
        }
        for (r, _) in factor_u128(n as u128) {
            let h = frob(&x, n / r as usize);
            if !f.gcd(&(&h - &x)).is_one() {
                return false;
            }
        }
        true
    }

    /// `Res(self, other) = lc(self)^deg(other) · ∏_{self(r)=0} other(r)`.
    pub fn resultant(&self, other: &Poly) -> Result<Fe> {
        self.check(other)?;
        let k = &self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(k.zero());
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let mut acc = k.one();
        loop {
            let da = a.degree().unwrap();
            let db = b.degree().unwrap();
            if db == 0 {
                return Ok(&acc * &b.lc().pow_u128(da as u128));
            }
            let r = a.rem(&b)?;
            if r.is_zero() {
                return Ok(k.zero());
            }
            let dr = r.degree().unwrap();
            if (da * db) % 2 == 1 {
                acc = -&acc;
            }
            acc = &acc * &b.lc().pow_u128((da - dr) as u128);
            a = b;
            b = r;
        }
    }

    /// Monic roots lying in the coefficient field, with multiplicity, sorted.
    pub fn roots(&self) -> Vec<(Fe, u32)> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut out: Vec<(Fe, u32)> = factor(self)
            .expect("nonzero")
            .factors
            .into_iter()
            .filter(|(p, _)| p.degree() == Some(1))
            .map(|(p, m)| (-&p.coeff(0), m))
            .collect();
        out.sort();
        out
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a Poly> for &'a Poly {
            type Output = Poly;
            fn $method(self, rhs: &'a Poly) -> Poly {
                self.$checked(rhs).expect(concat!("Poly::", stringify!($method)))
            }
        }
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$checked(&rhs).expect(concat!("Poly::", stringify!($method)))
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(&self.field, self.c.iter().map(|x| -x).collect())
    }
}

/// A factorisation `unit · ∏ factor^multiplicity` with distinct monic irreducible factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Fe,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> Poly {
        let mut acc = Poly::constant(self.unit.clone());
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m as u64);
        }
        acc
    }
}

/// Factors a nonzero polynomial with the default splitting seed.
pub fn factor(f: &Poly) -> Result<Factorization> {
    factor_with_seed(f, DEFAULT_FACTOR_SEED)
}

/// Squarefree decomposition, distinct-degree, then equal-degree splitting.
pub fn factor_with_seed(f: &Poly, seed: u64) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::domain("cannot factor the zero polynomial"));
    }
    let unit = f.lc();
    let g = f.monic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (sq, mult) in squarefree(&g) {
        for (part, d) in distinct_degree(&sq) {
            for irr in equal_degree(&part, d, &mut rng) {
                factors.push((irr, mult));
            }
        }
    }
    factors.sort();
    Ok(Factorization { unit, factors })
}

fn squarefree(f: &Poly) -> Vec<(Poly, u32)> {
    let k = f.field().clone();
    let p = k.characteristic();
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let df = f.derivative();
    let mut c = f.gcd(&df);
    let mut w = f.div_exact(&c).unwrap();
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y).unwrap();
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.div_exact(&w).unwrap();
        i += 1;
    }
    if !c.is_one() {
        // c is a p-th power
        let n = c.degree().unwrap() / p as usize;
        let root = Poly::new(&k, (0..=n).map(|j| c.coeff(j * p as usize).pth_root()).collect());
        for (g, j) in squarefree(&root) {
            out.push((g, j * p as u32));
        }
    }
    out
}

fn distinct_degree(f: &Poly) -> Vec<(Poly, usize)> {
    let k = f.field().clone();
    let q = k.order();
    let x = Poly::x(&k);
    let mut g = f.clone();
    let mut h = x.rem(&g).unwrap();
    let mut out = Vec::new();
    let mut i = 1;
    while g.degree().unwrap_or(0) >= 2 * i {
        h = h.pow_mod(q, &g);
        let d = g.gcd(&(&h - &x));
        if !d.is_one() {
            g = g.div_exact(&d).unwrap();
            h = h.rem(&g).unwrap();
            out.push((d, i));
        }
        i += 1;
    }
    if g.degree().unwrap_or(0) > 0 {
        let d = g.degree().unwrap();
        out.push((g, d));
    }
    out
}

fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let n = f.degree().unwrap();
    if n == d {
        return vec![f.clone()];
    }
    let k = f.field().clone();
    let q = k.order();
    loop {
        let a = Poly::random(&k, n - 1, rng);
        if a.is_constant() {
            continue;
        }
        let b = if q % 2 == 1 {
            // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
            let mut t = a.rem(f).unwrap();
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.pow_mod(q, f);
                acc = (&acc * &t).rem(f).unwrap();
            }
            &acc.pow_mod((q - 1) / 2, f) - &Poly::one(&k)
        } else {
            // absolute trace down to GF(2)
            let bits = k.abs_degree() * d;
            let mut t = a.rem(f).unwrap();
            let mut acc = t.clone();
            for _ in 1..bits {
                t = (&t * &t).rem(f).unwrap();
                acc = &acc + &t;
            }
            acc
        };
        let g = f.gcd(&b);
        if !g.is_one() && g.degree() != f.degree() {
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&f.div_exact(&g).unwrap(), d, rng));
            return out;
        }
    }
}

/// The lexicographically smallest monic irreducible of degree `n`, comparing the
/// coefficients below the leading one from the top down.
pub fn smallest_irreducible(field: &Field, n: usize) -> Result<Poly> {
    if n == 0 {
        return Err(Error::domain("degree must be positive"));
    }
    let q = field.order();
    let total = q.checked_pow(n as u32).ok_or_else(|| Error::domain("search space too large"))?;
    for idx in 0..total {
        let cand = monic_from_index(field, n, idx);
        if cand.is_irreducible() {
            return Ok(cand);
        }
    }
    Err(Error::domain("no irreducible polynomial found"))
}

/// All monic irreducible polynomials of degree `n`, in canonical order.
pub fn monic_irreducibles(field: &Field, n: usize) -> Vec<Poly> {
    let q = field.order();
    let total = q.pow(n as u32);
    let mut out: Vec<Poly> =
        (0..total).map(|idx| monic_from_index(field, n, idx)).filter(|c| c.is_irreducible()).collect();
    out.sort();
    out
}

/// Monic polynomial whose lower coefficients are the base-`q` digits of `idx`,
/// the coefficient of `x^(n-1)` being the most significant digit.
fn monic_from_index(field: &Field, n: usize, mut idx: u128) -> Poly {
    let q = field.order();
    let mut coeffs = Vec::with_capacity(n + 1);
    for _ in 0..n {
        coeffs.push(field.element(idx % q));
        idx /= q;
    }
    coeffs.push(field.one());
    Poly::new(field, coeffs)
}

/// Field norm of `h mod pi` from `K[t]/(pi)` down to `K`, as `Res(pi, h)`.
pub fn norm_via_resultant(h: &Poly, pi: &Poly) -> Result<Fe> {
    if !pi.is_monic() || pi.degree().unwrap_or(0) == 0 {
        return Err(Error::domain("norm modulus must be monic of positive degree"));
    }
    if h.rem(pi)?.is_zero() {
        return Err(Error::domain(format!("{h} vanishes modulo {pi}; norm of zero is undefined")));
    }
    pi.resultant(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(field: &Field, c: &[u64]) -> Poly {
        Poly::from_u64s(field, c)
    }

    #[test]
    fn factor_t2_plus_1_over_gf5() {
        let k = Field::prime(5).unwrap();
        let fac = factor(&p(&k, &[1, 0, 1])).unwrap();
        assert_eq!(fac.factors, vec![(p(&k, &[2, 1]), 1), (p(&k, &[3, 1]), 1)]);
    }

    #[test]
    fn t2_plus_1_irreducible_over_gf3() {
        let k = Field::prime(3).unwrap();
        let f = p(&k, &[1, 0, 1]);
        // exhaustive root check
        assert!(k.elements().all(|x| !f.eval(&x).is_zero()));
        let fac = factor(&f).unwrap();
        assert_eq!(fac.factors, vec![(f.clone(), 1)]);
    }

    #[test]
    fn factor_square() {
        let k = Field::prime(5).unwrap();
        let fac = factor(&p(&k, &[0, 0, 1])).unwrap();
        assert_eq!(fac.factors, vec![(p(&k, &[0, 1]), 2)]);
        assert!(factor(&Poly::zero(&k)).is_err());
    }

    #[test]
    fn factor_pth_powers() {
        let k = Field::prime(3).unwrap();
        // (t+1)^3 (t^2+1)^2 t
        let f = &(&p(&k, &[1, 1]).pow(3) * &p(&k, &[1, 0, 1]).pow(2)) * &p(&k, &[0, 1]);
        let fac = factor(&f.scale(&k.from_u64(2))).unwrap();
        assert_eq!(fac.unit, k.from_u64(2));
        assert_eq!(fac.expand(), f.scale(&k.from_u64(2)));
        assert_eq!(fac.factors.len(), 3);
    }

    #[test]
    fn factor_char_two() {
        let k = Field::prime(2).unwrap();
        let f = &p(&k, &[1, 1, 1]) * &p(&k, &[1, 1, 0, 1]);
        let f = &f * &p(&k, &[1, 0, 1, 1]);
        let fac = factor(&f).unwrap();
        assert_eq!(fac.factors.len(), 3);
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn norm_examples() {
        let k = Field::prime(3).unwrap();
        let pi = p(&k, &[1, 0, 1]);
        assert_eq!(norm_via_resultant(&p(&k, &[1, 1]), &pi).unwrap(), k.from_u64(2));
        assert_eq!(norm_via_resultant(&p(&k, &[0, 1]), &pi).unwrap(), k.from_u64(1));
        assert_eq!(norm_via_resultant(&p(&k, &[2]), &pi).unwrap(), k.from_u64(1));
        assert!(norm_via_resultant(&pi, &pi).is_err());
    }

    #[test]
    fn smallest_irreducibles() {
        let k3 = Field::prime(3).unwrap();
        assert_eq!(smallest_irreducible(&k3, 2).unwrap(), p(&k3, &[1, 0, 1]));
        let k5 = Field::prime(5).unwrap();
        assert_eq!(smallest_irreducible(&k5, 2).unwrap(), p(&k5, &[2, 0, 1]));
        assert_eq!(monic_irreducibles(&k3, 2).len(), 3);
        assert_eq!(monic_irreducibles(&k5, 3).len(), 40);
    }

    #[test]
    fn rendering() {
        let k = Field::prime(5).unwrap();
        assert_eq!(p(&k, &[4, 0, 0, 2]).to_string(), "2*t^3+4");
        assert_eq!(p(&k, &[1, 0, 1]).to_string(), "t^2+1");
    }
}
