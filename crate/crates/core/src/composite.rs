//! Elements of `R = K + X·L[X]`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::QuadElement;
use crate::poly::Poly;
use crate::ringdesc::{CompositePair, LField};

/// A polynomial over L whose constant term lies in K.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CompositeElement {
    pair: Arc<CompositePair>,
    poly: Poly,
}

fn check_in_l(l: LField, c: &QuadElement) -> Result<()> {
    let ok = c.is_rational() || l.radicand() == c.radicand();
    if ok {
        Ok(())
    } else {
        Err(Error::NotInL(c.to_string()))
    }
}

/// Whether `t` has all coefficients in L.
pub fn poly_in_l(pair: &CompositePair, t: &Poly) -> Result<()> {
    t.coeffs().iter().try_for_each(|c| check_in_l(pair.l_field, c))
}

impl CompositeElement {
    pub fn new(pair: &Arc<CompositePair>, poly: Poly) -> Result<Self> {
        poly_in_l(pair, &poly)?;
        let c0 = poly.constant_term();
        if !pair.k_tag.contains(&c0)? {
            return Err(Error::NotInR(c0.to_string()));
        }
        Ok(CompositeElement { pair: Arc::clone(pair), poly })
    }

    /// For results of ring operations, whose membership follows from closure.
    fn trusted(pair: &Arc<CompositePair>, poly: Poly) -> Self {
        debug_assert!(
            pair.k_tag.contains(&poly.constant_term()).unwrap_or(false),
            "constant term {} escaped K",
            poly.constant_term()
        );
        CompositeElement { pair: Arc::clone(pair), poly }
    }

    pub fn zero(pair: &Arc<CompositePair>) -> Self {
        Self::trusted(pair, Poly::zero())
    }

    pub fn one(pair: &Arc<CompositePair>) -> Self {
        Self::trusted(pair, Poly::one())
    }

    pub fn x(pair: &Arc<CompositePair>) -> Self {
        Self::trusted(pair, Poly::x_pow(1))
    }

    pub fn from_k(pair: &Arc<CompositePair>, c: QuadElement) -> Result<Self> {
        Self::new(pair, Poly::constant(c))
    }

    pub fn pair(&self) -> &Arc<CompositePair> {
        &self.pair
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn degree(&self) -> Option<usize> {
        self.poly.degree()
    }

    pub fn constant_term(&self) -> QuadElement {
        self.poly.constant_term()
    }

    fn same_pair(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.pair, &other.pair) || self.pair == other.pair {
            Ok(())
        } else {
            Err(Error::PairMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_pair(other)?;
        Ok(Self::trusted(&self.pair, &self.poly + &other.poly))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_pair(other)?;
        Ok(Self::trusted(&self.pair, &self.poly - &other.poly))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_pair(other)?;
        Ok(Self::trusted(&self.pair, &self.poly * &other.poly))
    }

    pub fn neg(&self) -> Self {
        Self::trusted(&self.pair, -&self.poly)
    }

    /// Multiplication by an element of K.
    pub fn scale_k(&self, k: &QuadElement) -> Result<Self> {
        if !self.pair.k_tag.contains(k)? {
            return Err(Error::NotInR(k.to_string()));
        }
        Ok(Self::trusted(&self.pair, self.poly.scale(k)))
    }

    pub fn ord_x(&self) -> Result<usize> {
        self.poly.ord_x().ok_or(Error::ZeroElement)
    }

    /// `Some(q)` with `self·q = a` and `q ∈ R`, if `self` divides `a` in R.
    pub fn divides(&self, a: &Self) -> Result<Option<Self>> {
        self.same_pair(a)?;
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if a.is_zero() {
            return Ok(Some(Self::zero(&self.pair)));
        }
        let Some(q) = a.poly.exact_div(&self.poly) else {
            return Ok(None);
        };
        if !self.pair.k_tag.contains(&q.constant_term())? {
            return Ok(None);
        }
        Ok(Some(Self::trusted(&self.pair, q)))
    }

    pub fn is_unit(&self) -> bool {
        self.poly.degree() == Some(0) && self.pair.k_tag.is_unit(&self.poly.constant_term())
    }

    /// The canonical associate: the lowest nonzero coefficient is brought
    /// to the normal form of K's unit convention.
    pub fn normalize_unit(&self) -> Self {
        let Some(k) = self.poly.ord_x() else {
            return self.clone();
        };
        let u = self.pair.k_tag.normalizing_unit(&self.poly.coeff(k));
        Self::trusted(&self.pair, self.poly.scale(&u))
    }

    pub fn associates(&self, other: &Self) -> bool {
        self.pair == other.pair && self.normalize_unit() == other.normalize_unit()
    }
}

/// `(c, r)` with `c ∈ K∖{0}` the least clearing constant of `t(0)` and
/// `r = c·t ∈ R`.
pub fn scale_into_r(pair: &Arc<CompositePair>, t: &Poly) -> Result<(QuadElement, CompositeElement)> {
    if !pair.l_is_quotient_field_of_k {
        return Err(Error::NotQuotientField);
    }
    if t.is_zero() {
        return Err(Error::ZeroInput);
    }
    poly_in_l(pair, t)?;
    let c = QuadElement::rational(pair.k_tag.clearing_denominator(&t.constant_term())?);
    let r = CompositeElement::new(pair, t.scale(&c))?;
    Ok((c, r))
}

impl fmt::Display for CompositeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

impl fmt::Debug for CompositeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] in {}", self.poly, self.pair)
    }
}
