//! Greatest common divisors in `K + X·L[X]`: strip the common power of X,
//! take the gcd in L[X], then rescale its constant term to the K-gcd of the
//! constant terms.

use std::sync::Arc;

use crate::composite::CompositeElement;
use crate::error::{Error, Result};
use crate::oracle::licenses_gcd;
use crate::poly::Poly;
use crate::ringdesc::CompositePair;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdResult {
    pub g: CompositeElement,
    /// `(a/g, b/g)`.
    pub cofactors: Option<(CompositeElement, CompositeElement)>,
}

/// Monic gcd in L[X] with cofactors `alpha·t1 + beta·t2 = g`.
pub fn poly_gcd_l(t1: &Poly, t2: &Poly) -> Result<(Poly, Poly, Poly)> {
    if t1.is_zero() && t2.is_zero() {
        return Err(Error::Exact(crate::exactnum::ExactError::BothZero));
    }
    Ok(Poly::ext_gcd(t1, t2))
}

fn gate(pair: &CompositePair) -> Result<()> {
    if licenses_gcd(pair) {
        Ok(())
    } else {
        Err(Error::NotGCDConfiguration(pair.to_string()))
    }
}

/// gcd in R of `t` and `u` where `u(0) ≠ 0`: the L[X]-gcd rescaled so its
/// constant term is `inf_K(t(0), u(0))`.
pub fn inf_r_units_of_tm(pair: &CompositePair, t: &Poly, u: &Poly) -> Result<Poly> {
    gate(pair)?;
    inf_ungated(pair, t, u)
}

fn inf_ungated(pair: &CompositePair, t: &Poly, u: &Poly) -> Result<Poly> {
    let u0 = u.constant_term();
    if u0.is_zero() {
        return Err(Error::UnitDenominatorZero);
    }
    let g = Poly::gcd(t, u);
    let l = pair.k_tag.inf_fraction(&t.constant_term(), &u0)?;
    let g0 = g.constant_term();
    Ok(g.scale(&(&l / &g0)))
}

pub fn gcd_composite(a: &CompositeElement, b: &CompositeElement) -> Result<GcdResult> {
    if a.pair() != b.pair() {
        return Err(Error::PairMismatch);
    }
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput);
    }
    let pair = a.pair();
    gate(pair)?;
    let (oa, ob) = (a.ord_x()?, b.ord_x()?);
    let (hi, lo) = if ob <= oa { (a, b) } else { (b, a) };
    let v = oa.min(ob);
    let t = hi.poly().shift_down(v);
    let u = lo.poly().shift_down(v);
    let core = inf_ungated(pair, &t, &u)?;
    let g = CompositeElement::new(pair, core.shift_up(v))
        .map_err(|e| Error::InvariantViolation(format!("gcd left R: {e}")))?
        .normalize_unit();
    let ca = g.divides(a)?;
    let cb = g.divides(b)?;
    match (ca, cb) {
        (Some(ca), Some(cb)) => Ok(GcdResult { g, cofactors: Some((ca, cb)) }),
        _ => Err(Error::InvariantViolation(format!("gcd {g} does not divide both inputs"))),
    }
}

pub fn lcm_composite(a: &CompositeElement, b: &CompositeElement) -> Result<CompositeElement> {
    let GcdResult { g, .. } = gcd_composite(a, b)?;
    let ab = a.mul(b)?;
    g.divides(&ab)?
        .map(|l| l.normalize_unit())
        .ok_or_else(|| Error::InvariantViolation(format!("gcd {g} does not divide the product")))
}

/// Left fold of `gcd_composite` over nonzero elements.
pub fn gcd_fold(pair: &Arc<CompositePair>, xs: &[CompositeElement]) -> Result<CompositeElement> {
    let mut it = xs.iter().filter(|x| !x.is_zero());
    let first = it.next().ok_or(Error::ZeroInput)?;
    if first.pair() != pair {
        return Err(Error::PairMismatch);
    }
    it.try_fold(first.normalize_unit(), |acc, x| Ok(gcd_composite(&acc, x)?.g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composite::testutil::*;
    use crate::exactnum::{KTag, QuadElement, Rational};
    use crate::ringdesc::LField;
    use proptest::prelude::*;

    #[test]
    fn poly_gcd_examples() {
        let (g, _, _) = poly_gcd_l(&poly(&[(-1, 1), (0, 1), (1, 1)]), &poly(&[(-1, 1), (1, 1)])).unwrap();
        assert_eq!(g, poly(&[(-1, 1), (1, 1)]));
        let (g, a, b) = poly_gcd_l(&poly(&[(2, 1)]), &poly(&[(0, 1), (1, 1)])).unwrap();
        assert_eq!((g, a, b), (Poly::one(), poly(&[(1, 2)]), Poly::zero()));
        assert_eq!(poly_gcd_l(&Poly::zero(), &Poly::zero()).unwrap_err().name(), "BothZero");
    }

    #[test]
    fn inf_over_units_examples() {
        let r = zq();
        assert_eq!(inf_r_units_of_tm(&r, &poly(&[(0, 1), (1, 1)]), &poly(&[(2, 1)])).unwrap(), poly(&[(2, 1)]));
        assert_eq!(inf_r_units_of_tm(&r, &poly(&[(2, 1)]), &poly(&[(3, 1)])).unwrap(), Poly::one());
        assert_eq!(
            inf_r_units_of_tm(&r, &poly(&[(2, 1), (1, 1)]), &poly(&[(4, 1), (2, 1)])).unwrap(),
            poly(&[(2, 1), (1, 1)])
        );
        assert_eq!(inf_r_units_of_tm(&r, &poly(&[(1, 1)]), &poly(&[(0, 1), (1, 1)])).unwrap_err(), Error::UnitDenominatorZero);
        let z5 = pair(KTag::QuadRing(-5), LField::Quadratic(-5));
        assert_eq!(inf_r_units_of_tm(&z5, &poly(&[(1, 1)]), &poly(&[(1, 1)])).unwrap_err().name(), "NotGCDConfiguration");
    }

    #[test]
    fn gcd_examples() {
        let r = zq();
        let g = |a: &[(i64, i64)], b: &[(i64, i64)]| gcd_composite(&el(&r, a), &el(&r, b)).unwrap().g;
        assert_eq!(g(&[(0, 1), (2, 1)], &[(0, 1), (3, 1)]), el(&r, &[(0, 1), (1, 1)]));
        assert_eq!(g(&[(0, 1), (0, 1), (1, 1)], &[(0, 1), (2, 1)]), el(&r, &[(0, 1), (2, 1)]));
        assert_eq!(g(&[(6, 1)], &[(4, 1)]), el(&r, &[(2, 1)]));
        let a = el(&r, &[(-3, 1), (1, 2), (5, 3)]);
        assert_eq!(gcd_composite(&a, &a).unwrap().g, a.normalize_unit());
    }

    #[test]
    fn gcd_errors() {
        let r = zq();
        assert_eq!(gcd_composite(&el(&r, &[(1, 1)]), &CompositeElement::zero(&r)).unwrap_err(), Error::ZeroInput);
        let gi = pair(KTag::Rationals, LField::Quadratic(-1));
        let one = CompositeElement::one(&gi);
        assert_eq!(gcd_composite(&one, &one).unwrap_err().name(), "NotGCDConfiguration");
    }

    #[test]
    fn gaussian_gcd() {
        let zi = pair(KTag::QuadRing(-1), LField::Quadratic(-1));
        let qi = |a: i64, b: i64| QuadElement::new(Rational::from_int(a), Rational::from_int(b), -1);
        let a = CompositeElement::new(&zi, Poly::new(vec![qi(1, 3), QuadElement::frac(1, 2)])).unwrap();
        let b = CompositeElement::new(&zi, Poly::constant(qi(3, 1))).unwrap();
        let g = gcd_composite(&a, &b).unwrap().g;
        assert_eq!(g, CompositeElement::from_k(&zi, qi(1, 1)).unwrap());
    }

    #[test]
    fn lcm_examples() {
        let r = zq();
        let l = |a: &[(i64, i64)], b: &[(i64, i64)]| lcm_composite(&el(&r, a), &el(&r, b)).unwrap();
        assert_eq!(l(&[(0, 1), (2, 1)], &[(0, 1), (3, 1)]), el(&r, &[(0, 1), (6, 1)]));
        assert_eq!(l(&[(2, 1)], &[(3, 1)]), el(&r, &[(6, 1)]));
        assert_eq!(l(&[(0, 1), (0, 1), (1, 1)], &[(0, 1), (2, 1)]), el(&r, &[(0, 1), (0, 1), (1, 1)]));
    }

    fn nonzero(p: Arc<CompositePair>) -> impl Strategy<Value = CompositeElement> {
        arb_rational_element(p, 4, 30).prop_filter("nonzero", |a| !a.is_zero())
    }

    fn pairs() -> impl Strategy<Value = Arc<CompositePair>> {
        prop_oneof![Just(zq()), Just(pair(KTag::LocalizedIntegers(2), LField::Rationals))]
    }

    proptest! {
        #[test]
        fn laws((a, b, c) in pairs().prop_flat_map(|p| (nonzero(p.clone()), nonzero(p.clone()), nonzero(p)))) {
            let g = gcd_composite(&a, &b).unwrap();
            let (ca, cb) = g.cofactors.clone().unwrap();
            prop_assert_eq!(g.g.mul(&ca).unwrap(), a.clone());
            prop_assert_eq!(g.g.mul(&cb).unwrap(), b.clone());
            let gc = gcd_composite(&c.mul(&a).unwrap(), &c.mul(&b).unwrap()).unwrap().g;
            prop_assert!(c.divides(&gc).unwrap().is_some());
            prop_assert_eq!(gc, c.mul(&g.g).unwrap().normalize_unit());
            prop_assert_eq!(gcd_composite(&b, &a).unwrap().g, g.g.clone());
            let left = gcd_composite(&g.g, &c).unwrap().g;
            let right = gcd_composite(&a, &gcd_composite(&b, &c).unwrap().g).unwrap().g;
            prop_assert_eq!(left, right);
            let l = lcm_composite(&a, &b).unwrap();
            prop_assert!(a.divides(&l).unwrap().is_some() && b.divides(&l).unwrap().is_some());
        }
    }
}
