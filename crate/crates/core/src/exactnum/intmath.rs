//! Integer helpers shared by the K-level code.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{QuadElement, Rational};

/// Extended gcd of a list: returns `(g, c)` with `g ≥ 0` and `Σ c_i·v_i = g`.
pub fn ext_gcd_fold(values: &[BigInt]) -> (BigInt, Vec<BigInt>) {
    let mut g = BigInt::zero();
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(values.len());
    for (i, v) in values.iter().enumerate() {
        let e = g.extended_gcd(v);
        // e.x * g + e.y * v = e.gcd
        for c in coeffs.iter_mut() {
            *c = &*c * &e.x;
        }
        coeffs.push(e.y.clone());
        g = e.gcd;
        debug_assert_eq!(coeffs.len(), i + 1);
    }
    if g.is_negative() {
        g = -g;
        for c in coeffs.iter_mut() {
            *c = -&*c;
        }
    }
    (g, coeffs)
}

pub fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}

/// Least positive integer `D` with `D·x` having integral coordinates for
/// every `x` in `xs`.
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a QuadElement>) -> BigInt {
    let mut d = BigInt::one();
    for x in xs {
        d = d.lcm(&x.re().denom());
        d = d.lcm(&x.im().denom());
    }
    d
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

pub fn is_squarefree(d: i64) -> bool {
    if d == 0 {
        return false;
    }
    let n = d.unsigned_abs();
    let mut k = 2u64;
    while k * k <= n {
        if n % (k * k) == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// Integer part of a rational known to be integral.
pub fn as_int(q: &Rational) -> BigInt {
    debug_assert!(q.is_integer());
    q.numer()
}
