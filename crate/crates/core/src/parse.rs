//! Text grammars for fields, curves, functions, places, divisors and ideles.
//!
//! Whitespace is ignored and parsing is case-sensitive. Every printed object parses
//! back to an equal object.

use std::fmt;

use crate::curve::{Curve, Divisor, Function, Place};
use crate::error::{Error, Result};
use crate::ff::{Fe, Field, Poly};
use crate::idele::Idele;

/// The kinds of object [`parse_object`] understands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Field,
    Curve,
    Function,
    Place,
    Divisor,
    Idele,
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Kind> {
        Ok(match s {
            "field" => Kind::Field,
            "curve" => Kind::Curve,
            "function" => Kind::Function,
            "place" => Kind::Place,
            "divisor" => Kind::Divisor,
            "idele" => Kind::Idele,
            _ => return Err(Error::Parse { pos: 0, msg: format!("unknown object kind '{s}'") }),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Field(Field),
    Curve(Curve),
    Function(Function),
    Place(Place),
    Divisor(Divisor),
    Idele(Idele),
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Field(x) => write!(f, "{x}"),
            Object::Curve(x) => write!(f, "{x}"),
            Object::Function(x) => write!(f, "{x}"),
            Object::Place(x) => write!(f, "{x}"),
            Object::Divisor(x) => write!(f, "{x}"),
            Object::Idele(x) => write!(f, "{x}"),
        }
    }
}

/// Parses `text` as an object of the given kind. Functions, places, divisors and
/// ideles need the curve they live on.
pub fn parse_object(kind: Kind, text: &str, curve: Option<&Curve>) -> Result<Object> {
    let need = || curve.ok_or_else(|| Error::Semantic(format!("parsing a {kind:?} needs a curve")));
    Ok(match kind {
        Kind::Field => Object::Field(parse_field(text)?),
        Kind::Curve => Object::Curve(parse_curve(text)?),
        Kind::Function => Object::Function(parse_function(need()?, text)?),
        Kind::Place => Object::Place(parse_place(need()?, text)?),
        Kind::Divisor => Object::Divisor(parse_divisor(need()?, text)?),
        Kind::Idele => Object::Idele(parse_idele(need()?, text)?),
    })
}

pub fn parse_field(text: &str) -> Result<Field> {
    let mut p = Parser::new(text);
    let k = p.field()?;
    p.end()?;
    Ok(k)
}

pub fn parse_curve(text: &str) -> Result<Curve> {
    let mut p = Parser::new(text);
    let c = p.curve()?;
    p.end()?;
    Ok(c)
}

/// A field element written as an expression in the tower generators.
pub fn parse_element(field: &Field, text: &str) -> Result<Fe> {
    let mut p = Parser::new(text);
    let v = p.expr(&FieldAlg::new(field))?;
    p.end()?;
    Ok(v)
}

/// A polynomial over `field` in the variable `var`.
pub fn parse_poly(field: &Field, var: &str, text: &str) -> Result<Poly> {
    let mut p = Parser::new(text);
    let v = p.expr(&PolyAlg::new(field, var))?;
    p.end()?;
    Ok(v)
}

pub fn parse_function(curve: &Curve, text: &str) -> Result<Function> {
    let mut p = Parser::new(text);
    let f = p.function(curve)?;
    p.end()?;
    Ok(f)
}

pub fn parse_place(curve: &Curve, text: &str) -> Result<Place> {
    let mut p = Parser::new(text);
    let x = p.place(curve)?;
    p.end()?;
    Ok(x)
}

pub fn parse_divisor(curve: &Curve, text: &str) -> Result<Divisor> {
    let mut p = Parser::new(text);
    let d = p.divisor(curve)?;
    p.end()?;
    Ok(d)
}

pub fn parse_idele(curve: &Curve, text: &str) -> Result<Idele> {
    let mut p = Parser::new(text);
    let i = p.idele(curve)?;
    p.end()?;
    Ok(i)
}

/// Values an expression can evaluate to.
trait Algebra {
    type V: Clone;
    fn int(&self, n: u64, pos: usize) -> Result<Self::V>;
    fn var(&self, name: &str, pos: usize) -> Result<Self::V>;
    fn add(&self, a: Self::V, b: Self::V) -> Result<Self::V>;
    fn neg(&self, a: Self::V) -> Result<Self::V>;
    fn mul(&self, a: Self::V, b: Self::V) -> Result<Self::V>;
    fn div(&self, a: Self::V, b: Self::V, pos: usize) -> Result<Self::V>;
    fn pow(&self, a: Self::V, e: i64, pos: usize) -> Result<Self::V>;
}

/// The generators `u, v, ...` of every level of the tower, embedded in `field`.
fn generators(field: &Field) -> Vec<(String, Fe)> {
    let mut out = Vec::new();
    let mut k = Some(field.clone());
    while let Some(f) = k {
        if let Ok(g) = f.generator() {
            out.push((f.generator_name(), field.embed(&g).expect("tower subfield")));
        }
        k = f.base().cloned();
    }
    out
}

struct FieldAlg {
    field: Field,
    gens: Vec<(String, Fe)>,
}

impl FieldAlg {
    fn new(field: &Field) -> FieldAlg {
        FieldAlg { field: field.clone(), gens: generators(field) }
    }

    fn coefficient(&self, n: u64, pos: usize) -> Result<Fe> {
        let p = self.field.characteristic();
        if n >= p {
            return Err(Error::Parse { pos, msg: format!("coefficient {n} is not in [0,{p})") });
        }
        Ok(self.field.from_u64(n))
    }

    fn generator(&self, name: &str, pos: usize) -> Result<Fe> {
        self.gens
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, g)| g.clone())
            .ok_or_else(|| Error::Parse { pos, msg: format!("unknown symbol '{name}'") })
    }
}

impl Algebra for FieldAlg {
    type V = Fe;

    fn int(&self, n: u64, pos: usize) -> Result<Fe> {
        self.coefficient(n, pos)
    }

    fn var(&self, name: &str, pos: usize) -> Result<Fe> {
        self.generator(name, pos)
    }

    fn add(&self, a: Fe, b: Fe) -> Result<Fe> {
        a.checked_add(&b)
    }

    fn neg(&self, a: Fe) -> Result<Fe> {
        Ok(-a)
    }

    fn mul(&self, a: Fe, b: Fe) -> Result<Fe> {
        a.checked_mul(&b)
    }

    fn div(&self, a: Fe, b: Fe, pos: usize) -> Result<Fe> {
        if b.is_zero() {
            return Err(Error::Arithmetic(format!("division by zero at position {pos}")));
        }
        a.checked_div(&b)
    }

    fn pow(&self, a: Fe, e: i64, _pos: usize) -> Result<Fe> {
        a.pow(e)
    }
}

struct PolyAlg {
    inner: FieldAlg,
    var: String,
}

impl PolyAlg {
    fn new(field: &Field, var: &str) -> PolyAlg {
        PolyAlg { inner: FieldAlg::new(field), var: var.to_string() }
    }
}

impl Algebra for PolyAlg {
    type V = Poly;

    fn int(&self, n: u64, pos: usize) -> Result<Poly> {
        Ok(Poly::constant(self.inner.coefficient(n, pos)?))
    }

    fn var(&self, name: &str, pos: usize) -> Result<Poly> {
        if name == self.var {
            return Ok(Poly::x(&self.inner.field));
        }
        Ok(Poly::constant(self.inner.generator(name, pos)?))
    }

    fn add(&self, a: Poly, b: Poly) -> Result<Poly> {
        a.checked_add(&b)
    }

    fn neg(&self, a: Poly) -> Result<Poly> {
        Ok(-&a)
    }

    fn mul(&self, a: Poly, b: Poly) -> Result<Poly> {
        a.checked_mul(&b)
    }

    fn div(&self, a: Poly, b: Poly, pos: usize) -> Result<Poly> {
        match b.degree() {
            Some(0) => Ok(a.scale(&b.lc().inv()?)),
            _ => Err(Error::Parse { pos, msg: "only division by nonzero constants is allowed in a polynomial".into() }),
        }
    }

    fn pow(&self, a: Poly, e: i64, pos: usize) -> Result<Poly> {
        if e < 0 {
            return Err(Error::Parse { pos, msg: "negative exponent in a polynomial".into() });
        }
        Ok(a.pow(e as u64))
    }
}

/// Functions, with `None` standing for zero so that sums may cancel on the way.
struct FunctionAlg {
    curve: Curve,
    inner: FieldAlg,
}

impl Algebra for FunctionAlg {
    type V = Option<Function>;

    fn int(&self, n: u64, pos: usize) -> Result<Self::V> {
        let c = self.inner.coefficient(n, pos)?;
        if c.is_zero() {
            return Ok(None);
        }
        Function::constant(&self.curve, c).map(Some)
    }

    fn var(&self, name: &str, pos: usize) -> Result<Self::V> {
        let line = self.curve.is_line();
        match name {
            "t" if line => Ok(Some(Function::coordinate(&self.curve))),
            "x" if !line => Ok(Some(Function::coordinate(&self.curve))),
            "y" if !line => Function::y(&self.curve).map(Some),
            _ => Function::constant(&self.curve, self.inner.generator(name, pos)?).map(Some),
        }
    }

    fn add(&self, a: Self::V, b: Self::V) -> Result<Self::V> {
        match (a, b) {
            (None, x) | (x, None) => Ok(x),
            (Some(a), Some(b)) => match a.checked_add(&b) {
                Ok(f) => Ok(Some(f)),
                Err(Error::Domain(_) | Error::Arithmetic(_)) => Ok(None),
                Err(e) => Err(e),
            },
        }
    }

    fn neg(&self, a: Self::V) -> Result<Self::V> {
        Ok(a.map(|f| f.neg()))
    }

    fn mul(&self, a: Self::V, b: Self::V) -> Result<Self::V> {
        match (a, b) {
            (Some(a), Some(b)) => a.checked_mul(&b).map(Some),
            _ => Ok(None),
        }
    }

    fn div(&self, a: Self::V, b: Self::V, pos: usize) -> Result<Self::V> {
        match (a, b) {
            (_, None) => Err(Error::Arithmetic(format!("division by zero at position {pos}"))),
            (None, _) => Ok(None),
            (Some(a), Some(b)) => a.checked_div(&b).map(Some),
        }
    }

    fn pow(&self, a: Self::V, e: i64, pos: usize) -> Result<Self::V> {
        match a {
            Some(f) => Ok(Some(f.pow(e))),
            None if e > 0 => Ok(None),
            None => Err(Error::Arithmetic(format!("zero raised to a non-positive power at position {pos}"))),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Parser<'a> {
        Parser { src, pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn found(&mut self) -> String {
        match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".into(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = self.found();
            self.err(format!("expected '{c}', found {found}"))
        }
    }

    fn expect_str(&mut self, s: &str) -> Result<()> {
        if self.eat_str(s) {
            Ok(())
        } else {
            let found = self.found();
            self.err(format!("expected '{s}', found {found}"))
        }
    }

    fn end(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.err(format!("unexpected '{c}' after the end of the object")),
        }
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if len == 0 {
            let found = self.found();
            return self.err(format!("expected an integer, found {found}"));
        }
        let v = rest[..len].parse().or_else(|_| self.err("integer too large"))?;
        self.pos += len;
        Ok(v)
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let first = rest.chars().next().filter(|c| c.is_ascii_alphabetic())?;
        let len = first.len_utf8()
            + rest[first.len_utf8()..]
                .find(|c: char| !c.is_ascii_alphanumeric())
                .unwrap_or(rest.len() - first.len_utf8());
        self.pos += len;
        Some(rest[..len].to_string())
    }

    fn expr<A: Algebra>(&mut self, alg: &A) -> Result<A::V> {
        let negate = self.eat('-');
        let mut acc = self.term(alg)?;
        if negate {
            acc = alg.neg(acc)?;
        }
        loop {
            if self.eat('+') {
                let t = self.term(alg)?;
                acc = alg.add(acc, t)?;
            } else if self.eat('-') {
                let t = self.term(alg)?;
                acc = alg.add(acc, alg.neg(t)?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<A: Algebra>(&mut self, alg: &A) -> Result<A::V> {
        let mut acc = self.factor(alg)?;
        loop {
            if self.eat('*') {
                let f = self.factor(alg)?;
                acc = alg.mul(acc, f)?;
            } else if self.peek() == Some('/') {
                let pos = self.pos;
                self.pos += 1;
                let f = self.factor(alg)?;
                acc = alg.div(acc, f, pos)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor<A: Algebra>(&mut self, alg: &A) -> Result<A::V> {
        let base = self.atom(alg)?;
        if self.peek() == Some('^') {
            let pos = self.pos;
            self.pos += 1;
            let neg = self.eat('-');
            let e = self.integer()?;
            let e = i64::try_from(e).or_else(|_| self.err("exponent too large"))?;
            return alg.pow(base, if neg { -e } else { e }, pos);
        }
        Ok(base)
    }

    fn atom<A: Algebra>(&mut self, alg: &A) -> Result<A::V> {
        let pos = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr(alg)?;
                self.expect(')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let n = self.integer()?;
                alg.int(n, start)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let name = self.ident().expect("alphabetic start");
                alg.var(&name, start)
            }
            _ => {
                let found = self.found();
                Err(Error::Parse { pos, msg: format!("expected a number, symbol or '(', found {found}") })
            }
        }
    }

    /// `GF(p)`, `GF(q)`, `GF(q;poly in u)`, optionally followed by `[v]/(poly in v)` levels.
    fn field(&mut self) -> Result<Field> {
        self.expect_str("GF")?;
        self.expect('(')?;
        let qpos = self.pos;
        let q = self.integer()?;
        let (p, n) = prime_power(q).ok_or_else(|| Error::Semantic(format!("{q} is not a prime power")))?;
        let mut k = if self.eat(';') {
            let fp = Field::prime(p)?;
            let mpos = self.pos;
            let modulus = self.expr(&PolyAlg::new(&fp, "u"))?;
            if modulus.degree() != Some(n as usize) {
                return Err(Error::Parse { pos: mpos, msg: format!("modulus of GF({q}) must have degree {n}") });
            }
            Field::extension(&fp, &modulus)?
        } else if n == 1 {
            Field::prime(p)?
        } else {
            Field::gf(p, n as usize).map_err(|e| match e {
                Error::Domain(m) => Error::Parse { pos: qpos, msg: m },
                e => e,
            })?
        };
        self.expect(')')?;
        while self.eat('[') {
            let npos = self.pos;
            let name = match self.ident() {
                Some(n) => n,
                None => return self.err("expected a generator name"),
            };
            self.expect(']')?;
            self.expect('/')?;
            self.expect('(')?;
            let modulus = self.expr(&PolyAlg::new(&k, &name))?;
            self.expect(')')?;
            let ext = Field::extension(&k, &modulus)?;
            if ext.generator_name() != name {
                return Err(Error::Parse {
                    pos: npos,
                    msg: format!("generator at this level is named '{}'", ext.generator_name()),
                });
            }
            k = ext;
        }
        Ok(k)
    }

    /// `P1/<field>` or `E/<field>:a4=<element>,a6=<element>`.
    fn curve(&mut self) -> Result<Curve> {
        if self.eat_str("P1") {
            self.expect('/')?;
            return Ok(Curve::projective_line(&self.field()?));
        }
        if self.eat_str("E") {
            self.expect('/')?;
            let k = self.field()?;
            let alg = FieldAlg::new(&k);
            self.expect(':')?;
            self.expect_str("a4")?;
            self.expect('=')?;
            let a4 = self.expr(&alg)?;
            self.expect(',')?;
            self.expect_str("a6")?;
            self.expect('=')?;
            let a6 = self.expr(&alg)?;
            return Curve::elliptic(&k, a4, a6);
        }
        let found = self.found();
        self.err(format!("expected 'P1/' or 'E/', found {found}"))
    }

    fn function(&mut self, curve: &Curve) -> Result<Function> {
        let pos = self.pos;
        let alg = FunctionAlg { curve: curve.clone(), inner: FieldAlg::new(curve.base()) };
        self.expr(&alg)?.ok_or(Error::Parse { pos, msg: "the zero function is not allowed here".into() })
    }

    /// `inf`, `O`, `(inf)`, `(O)`, `(poly in t)` on the line and `(x0,y0)` on elliptic curves.
    fn place(&mut self, curve: &Curve) -> Result<Place> {
        let pos = self.pos;
        let line = curve.is_line();
        if line && self.eat_str("inf") {
            return Ok(Place::Infinity);
        }
        if !line && self.eat_str("O") {
            return Ok(Place::Origin);
        }
        self.expect('(')?;
        let place = if line && self.eat_str("inf") {
            Place::Infinity
        } else if !line && self.eat_str("O") {
            Place::Origin
        } else if line {
            let pi = self.expr(&PolyAlg::new(curve.base(), "t"))?;
            Place::Finite(pi)
        } else {
            let alg = FieldAlg::new(curve.base());
            let x = self.expr(&alg)?;
            self.expect(',')?;
            let y = self.expr(&alg)?;
            Place::Affine(x, y)
        };
        self.expect(')')?;
        curve.check_place(&place).map_err(|e| match e {
            Error::Structural(m) => Error::Parse { pos, msg: m },
            e => e,
        })?;
        Ok(place)
    }

    /// Terms `[+|-][n*]place`, or `0`.
    fn divisor(&mut self, curve: &Curve) -> Result<Divisor> {
        if self.peek() == Some('0') {
            let save = self.pos;
            self.pos += 1;
            if self.peek().is_none() {
                return Ok(Divisor::zero(curve));
            }
            self.pos = save;
        }
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let sign = if self.eat('-') {
                -1
            } else if self.eat('+') || first {
                1
            } else {
                break;
            };
            first = false;
            let n = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                let n = self.integer()?;
                self.expect('*')?;
                i64::try_from(n).or_else(|_| self.err("coefficient too large"))?
            } else {
                1
            };
            terms.push((self.place(curve)?, sign * n));
            if self.peek().is_none() {
                break;
            }
        }
        Divisor::from_terms(curve, terms)
    }

    /// `tail=<f>; (place)=><f>; ...`
    fn idele(&mut self, curve: &Curve) -> Result<Idele> {
        self.expect_str("tail")?;
        self.expect('=')?;
        let tail = self.function(curve)?;
        let mut exceptions = Vec::new();
        while self.eat(';') {
            if self.peek().is_none() {
                break;
            }
            let place = self.place(curve)?;
            self.expect_str("=>")?;
            exceptions.push((place, self.function(curve)?));
        }
        Idele::new(tail, exceptions)
    }
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut n = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        n += 1;
    }
    (r == 1).then_some((p, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_examples() {
        let k = parse_field("GF(9;u^2+1)").unwrap();
        assert_eq!(k.order(), 9);
        assert_eq!(k.to_string(), "GF(9;u^2+1)");
        assert_eq!(parse_field("GF(9)").unwrap(), Field::gf(3, 2).unwrap());
        let e = parse_curve("E/GF(5):a4=4,a6=0").unwrap();
        assert_eq!(e.to_string(), "E/GF(5):a4=4,a6=0");
        let l = parse_curve("P1/GF(5)").unwrap();
        let d = parse_divisor(&l, "1*(t)-1*(inf)").unwrap();
        assert_eq!(d.degree(), 0);
        assert_eq!(parse_divisor(&l, "(t) - inf").unwrap(), d);
        let d = parse_divisor(&e, "1*(0,0)-1*O").unwrap();
        assert_eq!(d.to_string(), "-1*(O)+1*(0,0)");
        assert_eq!(parse_function(&l, "(t^2+1)/(t-3)").unwrap().to_string(), "t+3");
        assert_eq!(parse_function(&e, "(x^2+y)/(x-1)").unwrap().to_string(), "(x^2+y)/(x+4)");
        assert_eq!(parse_place(&l, "(t^2+2)").unwrap().degree(), 2);
        assert_eq!(parse_element(&k, "u^3").unwrap().render(), "2*u");
    }

    #[test]
    fn idele_round_trip() {
        let l = parse_curve("P1/GF(5)").unwrap();
        let text = "tail=1; (inf)=>t; (t)=>t";
        let i = parse_idele(&l, text).unwrap();
        assert_eq!(i.to_string(), text);
        let e = parse_curve("E/GF(5):a4=4,a6=0").unwrap();
        let text = "tail=1; (O)=>y/x; (0,0)=>y";
        assert_eq!(parse_idele(&e, text).unwrap().to_string(), text);
    }

    #[test]
    fn tower_fields_round_trip() {
        let base = parse_field("GF(9;u^2+1)").unwrap();
        let m = crate::ff::smallest_irreducible(&base, 2).unwrap();
        let k = Field::extension(&base, &m).unwrap();
        assert_eq!(parse_field(&k.to_string()).unwrap(), k);
        let x = k.element(77);
        assert_eq!(parse_element(&k, &x.render()).unwrap(), x);
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_field("GF(6)").unwrap_err(), Error::Semantic("6 is not a prime power".into()));
        assert!(matches!(parse_field("GF(9;u^2+u+1)"), Err(Error::Semantic(_))));
        assert_eq!(
            parse_curve("E/GF(5):a4=7,a6=0").unwrap_err(),
            Error::Parse { pos: 11, msg: "coefficient 7 is not in [0,5)".into() }
        );
        let l = parse_curve("P1/GF(5)").unwrap();
        assert!(matches!(parse_function(&l, "t+"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_function(&l, "x"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_function(&l, "t-t"), Err(Error::Parse { .. })));
        assert!(matches!(parse_place(&l, "(t^2+1)"), Err(Error::Semantic(_))));
        assert!(matches!(parse_divisor(&l, "1*(t) 2*(t)"), Err(Error::Parse { .. })));
        assert!(matches!(parse_field("GF(5) x"), Err(Error::Parse { pos: 6, .. })));
    }
}
