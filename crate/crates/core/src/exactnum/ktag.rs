use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::intmath::{common_denominator, ext_gcd_fold};
use super::{ExactError, QuadElement, Rational};

/// Which subring K of L an element is tested against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KTag {
    /// ℤ
    Integers,
    /// ℚ
    Rationals,
    /// ℤ localized at the prime ideal (p)
    LocalizedIntegers(u64),
    /// ℤ[√d]
    QuadRing(i64),
    /// ℚ(√d)
    QuadField(i64),
}

impl fmt::Display for KTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KTag::Integers => write!(f, "Z"),
            KTag::Rationals => write!(f, "Q"),
            KTag::LocalizedIntegers(p) => write!(f, "Z_({p})"),
            KTag::QuadRing(d) => write!(f, "Z[sqrt({d})]"),
            KTag::QuadField(d) => write!(f, "Q(sqrt({d}))"),
        }
    }
}

fn unit_candidates(d: i64) -> Vec<QuadElement> {
    let mut u = vec![QuadElement::one(), QuadElement::int(-1)];
    if d == -1 {
        u.push(QuadElement::sqrt(-1));
        u.push(-QuadElement::sqrt(-1));
    }
    u
}

fn sign_unit(x: &QuadElement) -> QuadElement {
    let s = if x.re().is_zero() { x.im().signum() } else { x.re().signum() };
    QuadElement::int(if s < 0 { -1 } else { 1 })
}

impl KTag {
    pub fn is_field(&self) -> bool {
        matches!(self, KTag::Rationals | KTag::QuadField(_))
    }

    /// Radicand of the field K lives in (0 for subrings of ℚ).
    pub fn radicand(&self) -> i64 {
        match self {
            KTag::QuadRing(d) | KTag::QuadField(d) => *d,
            _ => 0,
        }
    }

    /// K admits gcds of arbitrary pairs of fractions. For ℤ[√d] with d < 0
    /// this holds exactly for d = −1, −2.
    pub fn is_gcd_domain(&self) -> bool {
        match self {
            KTag::QuadRing(d) => matches!(d, -1 | -2),
            _ => true,
        }
    }

    fn check_compatible(&self, x: &QuadElement) -> Result<(), ExactError> {
        if x.is_rational() {
            return Ok(());
        }
        match self {
            KTag::QuadRing(d) | KTag::QuadField(d) if *d != x.radicand() => {
                Err(ExactError::IncompatibleTag { tag: *self, value: x.to_string() })
            }
            _ => Ok(()),
        }
    }

    /// Membership of an element of L in K.
    pub fn contains(&self, x: &QuadElement) -> Result<bool, ExactError> {
        self.check_compatible(x)?;
        Ok(match self {
            KTag::Integers => x.is_rational() && x.re().is_integer(),
            KTag::Rationals => x.is_rational(),
            KTag::LocalizedIntegers(p) => {
                x.is_rational()
                    && match x.re().to_small() {
                        Some((_, d)) => d as u64 % p != 0,
                        None => x.re().denom().mod_floor(&BigInt::from(*p)) != BigInt::zero(),
                    }
            }
            KTag::QuadRing(_) => x.is_integral_coords(),
            KTag::QuadField(_) => true,
        })
    }

    /// Unit test for an element already known to lie in K.
    pub fn is_unit(&self, x: &QuadElement) -> bool {
        if x.is_zero() {
            return false;
        }
        match self {
            KTag::Integers => x.is_rational() && x.re().abs().is_one(),
            KTag::LocalizedIntegers(p) => x.is_rational() && x.re().valuation(*p) == Some(0),
            KTag::QuadRing(_) => x.is_integral_coords() && x.norm().is_one(),
            KTag::Rationals | KTag::QuadField(_) => true,
        }
    }

    /// The unit `u` of K for which `u·x` is the canonical associate of `x`.
    ///
    /// Canonical associates: positive for ℤ; `p^v` for ℤ_(p); for ℤ[√d]
    /// the associate with `a > 0, b ≥ 0` when d = −1, otherwise `a > 0`
    /// (or `a = 0, b > 0`); for a field K, 1 if x ∈ K, and otherwise the
    /// K-multiple whose first nonzero coordinate is 1.
    pub fn normalizing_unit(&self, x: &QuadElement) -> QuadElement {
        if x.is_zero() {
            return QuadElement::one();
        }
        match self {
            KTag::Integers => sign_unit(x),
            KTag::LocalizedIntegers(p) if x.is_rational() => {
                let v = x.re().valuation(*p).unwrap_or(0);
                let target = Rational::from_int(*p as i64).powi(v);
                QuadElement::rational(&target / x.re())
            }
            KTag::LocalizedIntegers(_) => sign_unit(x),
            KTag::QuadRing(d) => {
                let units = unit_candidates(*d);
                let strict = *d == -1;
                units
                    .into_iter()
                    .find(|u| {
                        let y = u * x;
                        let (a, b) = (y.re().signum(), y.im().signum());
                        if strict {
                            a > 0 && b >= 0
                        } else {
                            a > 0 || (a == 0 && b > 0)
                        }
                    })
                    .expect("some unit multiple is canonical")
            }
            KTag::Rationals => {
                let lead = if x.re().is_zero() { x.im() } else { x.re() };
                QuadElement::rational(lead.recip().expect("nonzero"))
            }
            KTag::QuadField(_) => x.recip().expect("nonzero"),
        }
    }

    pub fn unit_normalize(&self, x: &QuadElement) -> QuadElement {
        &self.normalizing_unit(x) * x
    }

    /// Least positive integer `c` (a power of p for ℤ_(p)) with `c·x ∈ K`.
    pub fn clearing_denominator(&self, x: &QuadElement) -> Result<Rational, ExactError> {
        self.check_compatible(x)?;
        Ok(match self {
            KTag::Integers | KTag::QuadRing(_) => {
                Rational::from_bigint(common_denominator(std::iter::once(x)))
            }
            KTag::LocalizedIntegers(p) => match x.re().valuation(*p) {
                Some(v) if v < 0 => Rational::from_int(*p as i64).pow((-v) as u32),
                _ => Rational::one(),
            },
            // no scalar moves an irrational element into ℚ
            KTag::Rationals if !x.is_rational() => {
                return Err(ExactError::NoClearingDenominator { tag: *self, value: x.to_string() })
            }
            KTag::Rationals | KTag::QuadField(_) => Rational::one(),
        })
    }

    /// Generator of the smallest principal K-submodule of L containing
    /// `K·l1 + K·l2`, unit-normalized.
    pub fn inf_fraction(&self, l1: &QuadElement, l2: &QuadElement) -> Result<QuadElement, ExactError> {
        self.check_compatible(l1)?;
        self.check_compatible(l2)?;
        if l1.is_zero() && l2.is_zero() {
            return Err(ExactError::BothZero);
        }
        let rational_only = |x: &QuadElement| {
            if x.is_rational() {
                Ok(x.re().clone())
            } else {
                Err(ExactError::IncompatibleTag { tag: *self, value: x.to_string() })
            }
        };
        match self {
            KTag::Integers => {
                let (a, b) = (rational_only(l1)?, rational_only(l2)?);
                if let (Some((an, ad)), Some((bn, bd))) = (a.to_small(), b.to_small()) {
                    let den = (ad as i128).lcm(&(bd as i128));
                    let g = (an as i128 * (den / ad as i128)).gcd(&(bn as i128 * (den / bd as i128)));
                    return Ok(QuadElement::rational(Rational::from_big(g.into(), den.into())));
                }
                let den = a.denom().lcm(&b.denom());
                let na = a.numer() * (&den / a.denom());
                let nb = b.numer() * (&den / b.denom());
                let g = na.gcd(&nb);
                Ok(QuadElement::rational(Rational::from_big(g, den)))
            }
            KTag::LocalizedIntegers(p) => {
                let (a, b) = (rational_only(l1)?, rational_only(l2)?);
                let v = match (a.valuation(*p), b.valuation(*p)) {
                    (Some(x), Some(y)) => x.min(y),
                    (Some(x), None) | (None, Some(x)) => x,
                    (None, None) => unreachable!(),
                };
                Ok(QuadElement::rational(Rational::from_int(*p as i64).powi(v)))
            }
            KTag::Rationals | KTag::QuadField(_) => Ok(QuadElement::one()),
            KTag::QuadRing(d) => {
                if !self.is_gcd_domain() {
                    return Err(ExactError::NotGCDDomain(*self));
                }
                let den = common_denominator([l1, l2]);
                let s = Rational::from_bigint(den);
                let g = quad_gcd(&l1.scale(&s), &l2.scale(&s), *d);
                let s_inv = s.recip().expect("positive");
                Ok(self.unit_normalize(&g.scale(&s_inv)))
            }
        }
    }

    /// `(κ, c)` with `κ` the normalized inf of `xs` and `Σ c_i·x_i = κ`,
    /// every `c_i` in K. Requires K to be a GCD domain.
    pub fn bezout_combination(&self, xs: &[QuadElement]) -> Result<(QuadElement, Vec<QuadElement>), ExactError> {
        for x in xs {
            self.check_compatible(x)?;
        }
        let Some(first) = xs.iter().position(|x| !x.is_zero()) else {
            return Err(ExactError::BothZero);
        };
        let mut coeffs = vec![QuadElement::zero(); xs.len()];
        match self {
            KTag::Integers => {
                if let Some(x) = xs.iter().find(|x| !x.is_rational()) {
                    return Err(ExactError::IncompatibleTag { tag: *self, value: x.to_string() });
                }
                let den = common_denominator(xs);
                let ints: Vec<BigInt> =
                    xs.iter().map(|x| x.re().numer() * (&den / x.re().denom())).collect();
                let (g, c) = ext_gcd_fold(&ints);
                for (slot, k) in coeffs.iter_mut().zip(c) {
                    *slot = QuadElement::rational(Rational::from_bigint(k));
                }
                Ok((QuadElement::rational(Rational::from_big(g, den)), coeffs))
            }
            KTag::LocalizedIntegers(p) => {
                let mut best = first;
                let mut best_v = i64::MAX;
                for (i, x) in xs.iter().enumerate() {
                    if !x.is_rational() {
                        return Err(ExactError::IncompatibleTag { tag: *self, value: x.to_string() });
                    }
                    if let Some(v) = x.re().valuation(*p) {
                        if v < best_v {
                            best_v = v;
                            best = i;
                        }
                    }
                }
                let kappa = self.unit_normalize(&xs[best]);
                coeffs[best] = &kappa / &xs[best];
                Ok((kappa, coeffs))
            }
            KTag::Rationals | KTag::QuadField(_) => {
                coeffs[first] = xs[first].recip().expect("nonzero");
                Ok((QuadElement::one(), coeffs))
            }
            KTag::QuadRing(d) => {
                if !self.is_gcd_domain() {
                    return Err(ExactError::NotGCDDomain(*self));
                }
                let den = common_denominator(xs);
                let s = Rational::from_bigint(den);
                let mut g = QuadElement::zero();
                for (i, x) in xs.iter().enumerate() {
                    let (ng, a, b) = quad_ext_gcd(&g, &x.scale(&s), *d);
                    for c in coeffs[..i].iter_mut() {
                        *c = &*c * &a;
                    }
                    coeffs[i] = b;
                    g = ng;
                }
                let u = self.normalizing_unit(&g);
                for c in coeffs.iter_mut() {
                    *c = &*c * &u;
                }
                let s_inv = s.recip().expect("positive");
                Ok(((&u * &g).scale(&s_inv), coeffs))
            }
        }
    }
}

fn round_quotient(x: &QuadElement, y: &QuadElement, d: i64) -> QuadElement {
    let q = x / y;
    QuadElement::new(
        Rational::from_bigint(q.re().round()),
        Rational::from_bigint(q.im().round()),
        d,
    )
}

/// Euclidean gcd in ℤ[√d] for d = −1, −2 (both norm-Euclidean).
pub fn quad_gcd(x: &QuadElement, y: &QuadElement, d: i64) -> QuadElement {
    quad_ext_gcd(x, y, d).0
}

/// `(g, s, t)` with `s·x + t·y = g` in ℤ[√d], d ∈ {−1, −2}.
pub fn quad_ext_gcd(x: &QuadElement, y: &QuadElement, d: i64) -> (QuadElement, QuadElement, QuadElement) {
    debug_assert!(matches!(d, -1 | -2));
    let (mut r0, mut r1) = (x.clone(), y.clone());
    let (mut s0, mut s1) = (QuadElement::one(), QuadElement::zero());
    let (mut t0, mut t1) = (QuadElement::zero(), QuadElement::one());
    while !r1.is_zero() {
        let q = round_quotient(&r0, &r1, d);
        let r2 = &r0 - &(&q * &r1);
        debug_assert!(r2.norm() < r1.norm());
        let s2 = &s0 - &(&q * &s1);
        let t2 = &t0 - &(&q * &t1);
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    (r0, s0, t0)
}
