//! Dense univariate polynomials over L (ℚ or ℚ(√d)).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exactnum::QuadElement;

/// Coefficients constant-term first, trailing zeros trimmed; the zero
/// polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<QuadElement>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<QuadElement>) -> Self {
        while coeffs.last().is_some_and(QuadElement::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: QuadElement) -> Self {
        Poly::new(vec![c])
    }

    pub fn one() -> Self {
        Poly::constant(QuadElement::one())
    }

    /// `c·X^k`
    pub fn monomial(c: QuadElement, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![QuadElement::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn x_pow(k: usize) -> Self {
        Poly::monomial(QuadElement::one(), k)
    }

    pub fn coeffs(&self) -> &[QuadElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> QuadElement {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> QuadElement {
        self.coeff(0)
    }

    pub fn lead(&self) -> Option<&QuadElement> {
        self.coeffs.last()
    }

    /// Index of the first nonzero coefficient.
    pub fn ord_x(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, k: &QuadElement) -> Self {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiplication by `X^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![QuadElement::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Exact division by `X^k`; panics if `X^k` does not divide.
    pub fn shift_down(&self, k: usize) -> Self {
        assert!(self.coeffs.iter().take(k).all(QuadElement::is_zero), "X^{k} does not divide");
        Poly::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// Part of degree ≥ 1, i.e. `p − p(0)`.
    pub fn without_constant(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = self.coeffs.clone();
        c[0] = QuadElement::zero();
        Poly::new(c)
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Poly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.recip().expect("nonzero lead")),
        }
    }

    pub fn eval(&self, x: &QuadElement) -> QuadElement {
        let mut acc = QuadElement::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dl = d.lead().expect("division by zero polynomial");
        let dl_inv = dl.recip().expect("nonzero");
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        if dd == 0 {
            return (self.scale(&dl_inv), Poly::zero());
        }
        let monic = dl.is_one();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![QuadElement::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = if monic { rem[i + dd].clone() } else { &rem[i + dd] * &dl_inv };
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs[..dd].iter().enumerate() {
                if !dc.is_zero() {
                    rem[i + j] = &rem[i + j] - &(&c * dc);
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// `Some(q)` with `d·q = self` when the division is exact.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd with Bézout cofactors: `(g, s, t)` with `s·a + t·b = g`.
    /// Both zero gives `(0, 0, 0)`.
    pub fn ext_gcd(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r2) = r0.div_rem(&r1);
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r2);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.lead() {
            None => (Poly::zero(), Poly::zero(), Poly::zero()),
            Some(l) => {
                let inv = l.recip().expect("nonzero");
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// Monic gcd without cofactors; zero when both inputs are zero.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        while !r1.is_zero() {
            if r1.degree() == Some(0) {
                return Poly::one();
            }
            let r2 = r0.div_rem(&r1).1;
            r0 = std::mem::replace(&mut r1, r2);
        }
        r0.monic()
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![QuadElement::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for Poly {
    /// Highest degree first: `3/2*X^2 + 2*X + 1`, `(1+sqrt(-5))*X - 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.is_rational() && c.re().is_negative() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{k}"),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
