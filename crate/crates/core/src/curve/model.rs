use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ff::{Fe, Field, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveKind {
    /// The projective line with affine coordinate `t`.
    Line,
    /// `y^2 = x^3 + a4·x + a6`.
    Elliptic { a4: Fe, a6: Fe },
}

#[derive(Debug)]
struct CurveData {
    base: Field,
    kind: CurveKind,
}

/// A smooth projective curve over a finite field: the line or an elliptic curve.
#[derive(Clone, Debug)]
pub struct Curve(Arc<CurveData>);

impl PartialEq for Curve {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.base == other.0.base && self.0.kind == other.0.kind)
    }
}

impl Eq for Curve {}

impl Hash for Curve {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.base.hash(state);
    }
}

/// A closed point. Line places are `Infinity` or a monic irreducible `Finite(pi)`;
/// elliptic places are the `Origin` or a rational `Affine(x, y)` point.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Infinity,
    Finite(Poly),
    Origin,
    Affine(Fe, Fe),
}

impl fmt::Debug for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinity => write!(f, "inf"),
            Place::Finite(pi) => write!(f, "({})", pi.to_string_in("t")),
            Place::Origin => write!(f, "O"),
            Place::Affine(x, y) => write!(f, "({},{})", x, y),
        }
    }
}

impl Place {
    /// Degree of the residue field over the base field.
    pub fn degree(&self) -> i64 {
        match self {
            Place::Finite(pi) => pi.degree().unwrap_or(0) as i64,
            _ => 1,
        }
    }

    pub fn is_base_place(&self) -> bool {
        matches!(self, Place::Infinity | Place::Origin)
    }

    /// Moves the place to a curve over an extension field. Line places of degree > 1
    /// may split there, so only degree-one places are accepted.
    pub fn base_change(&self, ext: &Field) -> Result<Place> {
        Ok(match self {
            Place::Infinity => Place::Infinity,
            Place::Origin => Place::Origin,
            Place::Affine(x, y) => Place::Affine(ext.embed(x)?, ext.embed(y)?),
            Place::Finite(pi) if pi.degree() == Some(1) => Place::Finite(pi.embed(ext)?),
            Place::Finite(_) => return Err(Error::domain("a closed point of degree > 1 may split under base change")),
        })
    }
}

impl Curve {
    pub fn projective_line(base: &Field) -> Curve {
        Curve(Arc::new(CurveData { base: base.clone(), kind: CurveKind::Line }))
    }

    /// `y^2 = x^3 + a4·x + a6`; needs characteristic other than 2 and 3 and a
    /// nonzero discriminant.
    pub fn elliptic(base: &Field, a4: Fe, a6: Fe) -> Result<Curve> {
        let a4 = base.embed(&a4)?;
        let a6 = base.embed(&a6)?;
        let p = base.characteristic();
        if p == 2 || p == 3 {
            return Err(Error::Semantic("elliptic models need characteristic other than 2 and 3".into()));
        }
        let disc = &(&a4.pow_u128(3) * &base.from_u64(4)) + &(&(&a6 * &a6) * &base.from_u64(27));
        if disc.is_zero() {
            return Err(Error::Semantic(format!("y^2 = x^3 + {a4}*x + {a6} is singular (4*a4^3 + 27*a6^2 = 0)")));
        }
        Ok(Curve(Arc::new(CurveData { base: base.clone(), kind: CurveKind::Elliptic { a4, a6 } })))
    }

    pub fn base(&self) -> &Field {
        &self.0.base
    }

    pub fn kind(&self) -> &CurveKind {
        &self.0.kind
    }

    pub fn is_line(&self) -> bool {
        matches!(self.0.kind, CurveKind::Line)
    }

    pub fn genus(&self) -> i64 {
        match self.0.kind {
            CurveKind::Line => 0,
            CurveKind::Elliptic { .. } => 1,
        }
    }

    /// `x^3 + a4·x + a6` for an elliptic curve.
    pub fn weierstrass_rhs(&self) -> Option<Poly> {
        match &self.0.kind {
            CurveKind::Line => None,
            CurveKind::Elliptic { a4, a6 } => {
                let k = self.base();
                Some(Poly::new(k, vec![a6.clone(), a4.clone(), k.zero(), k.one()]))
            }
        }
    }

    /// Infinity on the line, the origin on an elliptic curve.
    pub fn base_place(&self) -> Place {
        match self.0.kind {
            CurveKind::Line => Place::Infinity,
            CurveKind::Elliptic { .. } => Place::Origin,
        }
    }

    /// The same curve over an extension of its base field.
    pub fn base_change(&self, ext: &Field) -> Result<Curve> {
        if !ext.contains(self.base()) {
            return Err(Error::structural(format!("{} is not an extension of {}", ext, self.base())));
        }
        match &self.0.kind {
            CurveKind::Line => Ok(Curve::projective_line(ext)),
            CurveKind::Elliptic { a4, a6 } => Curve::elliptic(ext, ext.embed(a4)?, ext.embed(a6)?),
        }
    }

    /// Checks that `place` is a well-formed closed point of this curve.
    pub fn check_place(&self, place: &Place) -> Result<()> {
        match (&self.0.kind, place) {
            (CurveKind::Line, Place::Infinity) => Ok(()),
            (CurveKind::Line, Place::Finite(pi)) => {
                if pi.field() != self.base() {
                    return Err(Error::structural("place polynomial over the wrong field"));
                }
                if !pi.is_monic() || !pi.is_irreducible() {
                    return Err(Error::Semantic(format!("({pi}) is not monic irreducible")));
                }
                Ok(())
            }
            (CurveKind::Elliptic { .. }, Place::Origin) => Ok(()),
            (CurveKind::Elliptic { .. }, Place::Affine(x, y)) => {
                if x.field() != self.base() || y.field() != self.base() {
                    return Err(Error::structural("point coordinates over the wrong field"));
                }
                let rhs = self.weierstrass_rhs().unwrap().eval(x);
                if (y * y) != rhs {
                    return Err(Error::Semantic(format!("({x},{y}) is not on {self}")));
                }
                Ok(())
            }
            _ => Err(Error::structural(format!("{place} is not a place of {self}"))),
        }
    }

    /// The field `k(x)` of a place. Degree-one places use the base field itself.
    pub fn residue_field(&self, place: &Place) -> Field {
        match place {
            Place::Finite(pi) if pi.degree().unwrap_or(0) > 1 => {
                Field::extension_unchecked(self.base(), pi).expect("place modulus is irreducible")
            }
            _ => self.base().clone(),
        }
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.kind {
            CurveKind::Line => write!(f, "P1/{}", self.0.base),
            CurveKind::Elliptic { a4, a6 } => {
                let wrap = |x: &Fe| {
                    let s = x.render();
                    if s.contains('+') {
                        format!("({s})")
                    } else {
                        s
                    }
                };
                write!(f, "E/{}:a4={},a6={}", self.0.base, wrap(a4), wrap(a6))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elliptic_validation() {
        let k = Field::prime(5).unwrap();
        assert!(Curve::elliptic(&k, k.from_u64(4), k.zero()).is_ok());
        assert!(Curve::elliptic(&k, k.zero(), k.zero()).is_err());
        let k3 = Field::prime(3).unwrap();
        assert!(Curve::elliptic(&k3, k3.one(), k3.one()).is_err());
    }

    #[test]
    fn place_checks() {
        let k = Field::prime(5).unwrap();
        let e = Curve::elliptic(&k, k.from_u64(4), k.zero()).unwrap();
        assert!(e.check_place(&Place::Affine(k.from_u64(2), k.from_u64(1))).is_ok());
        assert!(e.check_place(&Place::Affine(k.from_u64(2), k.from_u64(2))).is_err());
        assert!(e.check_place(&Place::Infinity).is_err());
        let line = Curve::projective_line(&k);
        assert!(line.check_place(&Place::Finite(Poly::from_u64s(&k, &[1, 0, 1]))).is_err());
        assert_eq!(line.to_string(), "P1/GF(5)");
        assert_eq!(e.to_string(), "E/GF(5):a4=4,a6=0");
    }
}
