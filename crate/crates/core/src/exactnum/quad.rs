use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::Rational;

/// An element `a + b·√d` of ℚ or of a quadratic field ℚ(√d).
///
/// Purely rational values carry no radicand: whenever `b = 0` the stored `d`
/// is 0, so a rational number compares equal regardless of which field it
/// was produced in. Mixing two irrational elements of different fields is a
/// logic error and panics.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QuadElement {
    a: Rational,
    b: Rational,
    d: i64,
}

impl QuadElement {
    pub fn new(a: Rational, b: Rational, d: i64) -> Self {
        if b.is_zero() {
            QuadElement { a, b, d: 0 }
        } else {
            assert!(d != 0 && d != 1, "radicand must be squarefree and not 0 or 1");
            QuadElement { a, b, d }
        }
    }

    pub fn rational(a: Rational) -> Self {
        QuadElement { a, b: Rational::zero(), d: 0 }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(Rational::from_int(n))
    }

    pub fn frac(n: i64, den: i64) -> Self {
        Self::rational(Rational::new(n, den))
    }

    /// `√d` itself.
    pub fn sqrt(d: i64) -> Self {
        Self::new(Rational::zero(), Rational::one(), d)
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    /// Rational part.
    pub fn re(&self) -> &Rational {
        &self.a
    }

    /// Coefficient of `√d`.
    pub fn im(&self) -> &Rational {
        &self.b
    }

    /// Radicand, 0 for a rational value.
    pub fn radicand(&self) -> i64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Both components are integers.
    pub fn is_integral_coords(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }

    pub fn conj(&self) -> Self {
        QuadElement { a: self.a.clone(), b: -&self.b, d: self.d }
    }

    /// Field norm `a² − d·b²`.
    pub fn norm(&self) -> Rational {
        let a2 = &self.a * &self.a;
        if self.b.is_zero() {
            return a2;
        }
        let db2 = &Rational::from_int(self.d) * &(&self.b * &self.b);
        &a2 - &db2
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.b.is_zero() {
            return Some(Self::rational(self.a.recip()?));
        }
        let n = self.norm().recip()?;
        let c = self.conj();
        Some(QuadElement::new(&c.a * &n, &c.b * &n, self.d))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        QuadElement::new(&self.a * k, &self.b * k, self.d)
    }

    fn join_d(&self, other: &Self) -> i64 {
        match (self.d, other.d) {
            (0, d) | (d, 0) => d,
            (d, e) if d == e => d,
            (d, e) => panic!("mixing elements of Q(sqrt({d})) and Q(sqrt({e}))"),
        }
    }
}

/// Norm of a quadratic element, `a² − d·b²`.
pub fn quad_norm(x: &QuadElement) -> Rational {
    x.norm()
}

impl From<Rational> for QuadElement {
    fn from(a: Rational) -> Self {
        Self::rational(a)
    }
}

impl<'a> Add<&'a QuadElement> for &'a QuadElement {
    type Output = QuadElement;
    fn add(self, rhs: &QuadElement) -> QuadElement {
        if self.b.is_zero() && rhs.b.is_zero() {
            return QuadElement::rational(&self.a + &rhs.a);
        }
        let d = self.join_d(rhs);
        QuadElement::new(&self.a + &rhs.a, &self.b + &rhs.b, d)
    }
}

impl<'a> Sub<&'a QuadElement> for &'a QuadElement {
    type Output = QuadElement;
    fn sub(self, rhs: &QuadElement) -> QuadElement {
        if self.b.is_zero() && rhs.b.is_zero() {
            return QuadElement::rational(&self.a - &rhs.a);
        }
        let d = self.join_d(rhs);
        QuadElement::new(&self.a - &rhs.a, &self.b - &rhs.b, d)
    }
}

impl<'a> Mul<&'a QuadElement> for &'a QuadElement {
    type Output = QuadElement;
    fn mul(self, rhs: &QuadElement) -> QuadElement {
        match (self.b.is_zero(), rhs.b.is_zero()) {
            (true, true) => QuadElement::rational(&self.a * &rhs.a),
            (true, false) => rhs.scale(&self.a),
            (false, true) => self.scale(&rhs.a),
            (false, false) => {
                let d = self.join_d(rhs);
                let dq = Rational::from_int(d);
                let a = &(&self.a * &rhs.a) + &(&dq * &(&self.b * &rhs.b));
                let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
                QuadElement::new(a, b, d)
            }
        }
    }
}

impl<'a> Div<&'a QuadElement> for &'a QuadElement {
    type Output = QuadElement;
    fn div(self, rhs: &QuadElement) -> QuadElement {
        if rhs.b.is_zero() {
            let inv = rhs.a.recip().expect("division by zero");
            return self.scale(&inv);
        }
        self * &rhs.recip().expect("division by zero")
    }
}

impl Neg for &QuadElement {
    type Output = QuadElement;
    fn neg(self) -> QuadElement {
        QuadElement { a: -&self.a, b: -&self.b, d: self.d }
    }
}

impl Neg for QuadElement {
    type Output = QuadElement;
    fn neg(self) -> QuadElement {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<QuadElement> for QuadElement {
            type Output = QuadElement;
            fn $m(self, rhs: QuadElement) -> QuadElement { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a QuadElement> for QuadElement {
            type Output = QuadElement;
            fn $m(self, rhs: &QuadElement) -> QuadElement { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl fmt::Display for QuadElement {
    /// Rationals print bare (`-3/2`); irrational values print parenthesised,
    /// e.g. `(1/2-3*sqrt(-5))` or `(sqrt(-1))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        write!(f, "(")?;
        let neg = self.b.is_negative();
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            write!(f, "{}", if neg { "-" } else { "+" })?;
        } else if neg {
            write!(f, "-")?;
        }
        let mag = self.b.abs();
        if !mag.is_one() {
            write!(f, "{mag}*")?;
        }
        write!(f, "sqrt({}))", self.d)
    }
}

impl fmt::Debug for QuadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
