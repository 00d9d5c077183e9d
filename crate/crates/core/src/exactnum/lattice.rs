//! ℤ-lattices of rank ≤ 2 inside ℚ(√d), used for fractional-ideal
//! membership over ℤ and ℤ[√d].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::intmath::{common_denominator, ext_gcd_fold};
use super::{QuadElement, Rational};

/// The ℤ-span of a finite set of elements, in Hermite form
/// `{ (a, 0), (c, e) } / scale` with `a, e ≥ 0` and `0 ≤ c < a` when `a > 0`.
/// Every basis vector remembers how it was built from the generators.
#[derive(Debug, Clone)]
pub struct ZLattice {
    d: i64,
    scale: BigInt,
    a: BigInt,
    a_combo: Vec<BigInt>,
    c: BigInt,
    e: BigInt,
    w_combo: Vec<BigInt>,
}

fn coords(x: &QuadElement, scale: &BigInt) -> (BigInt, BigInt) {
    let s = Rational::from_bigint(scale.clone());
    let (re, im) = (x.re() * &s, x.im() * &s);
    debug_assert!(re.is_integer() && im.is_integer());
    (re.numer(), im.numer())
}

fn axpy(acc: &mut [BigInt], k: &BigInt, v: &[BigInt]) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a += k * b;
    }
}

impl ZLattice {
    /// ℤ-span of `gens`; `d` is the radicand of the ambient field (0 for ℚ).
    pub fn span(gens: &[QuadElement], d: i64) -> Self {
        let n = gens.len();
        let scale = common_denominator(gens);
        let vs: Vec<(BigInt, BigInt)> = gens.iter().map(|g| coords(g, &scale)).collect();

        let ys: Vec<BigInt> = vs.iter().map(|v| v.1.clone()).collect();
        let (e, w_combo) = ext_gcd_fold(&ys);
        let mut wx = BigInt::zero();
        for (v, k) in vs.iter().zip(&w_combo) {
            wx += &v.0 * k;
        }

        // Clear the √d coordinate of every generator against w.
        let mut xs = Vec::with_capacity(n);
        let mut combos = Vec::with_capacity(n);
        for (i, v) in vs.iter().enumerate() {
            let mut combo = vec![BigInt::zero(); n];
            combo[i] = BigInt::from(1);
            let mut x = v.0.clone();
            if !e.is_zero() {
                let q = &v.1 / &e;
                x -= &q * &wx;
                axpy(&mut combo, &(-&q), &w_combo);
            }
            xs.push(x);
            combos.push(combo);
        }
        let (a, xc) = ext_gcd_fold(&xs);
        let mut a_combo = vec![BigInt::zero(); n];
        for (k, combo) in xc.iter().zip(&combos) {
            axpy(&mut a_combo, k, combo);
        }

        let mut lat = ZLattice { d, scale, a, a_combo, c: wx, e, w_combo };
        if !lat.a.is_zero() && !lat.e.is_zero() {
            let q = lat.c.div_floor(&lat.a);
            lat.c -= &q * &lat.a;
            let ac = lat.a_combo.clone();
            axpy(&mut lat.w_combo, &(-&q), &ac);
        }
        lat
    }

    /// Integer coefficients expressing `t` over the generators, if `t` lies
    /// in the lattice.
    pub fn solve(&self, t: &QuadElement) -> Option<Vec<BigInt>> {
        let s = Rational::from_bigint(self.scale.clone());
        let (tx, ty) = (t.re() * &s, t.im() * &s);
        if !tx.is_integer() || !ty.is_integer() {
            return None;
        }
        let (mut tx, ty) = (tx.numer(), ty.numer());
        let mut out = vec![BigInt::zero(); self.a_combo.len()];
        if self.e.is_zero() {
            if !ty.is_zero() {
                return None;
            }
        } else {
            let (q2, r) = ty.div_rem(&self.e);
            if !r.is_zero() {
                return None;
            }
            tx -= &q2 * &self.c;
            axpy(&mut out, &q2, &self.w_combo);
        }
        if self.a.is_zero() {
            if !tx.is_zero() {
                return None;
            }
        } else {
            let (q1, r) = tx.div_rem(&self.a);
            if !r.is_zero() {
                return None;
            }
            axpy(&mut out, &q1, &self.a_combo);
        }
        Some(out)
    }

    pub fn contains(&self, t: &QuadElement) -> bool {
        self.solve(t).is_some()
    }

    pub fn rank(&self) -> usize {
        (!self.a.is_zero()) as usize + (!self.e.is_zero()) as usize
    }

    /// Hermite basis as field elements: `a/scale` and `(c + e√d)/scale`
    /// (absent entries are zero vectors).
    pub fn basis(&self) -> (QuadElement, QuadElement) {
        let s = Rational::from_bigint(self.scale.clone());
        let v1 = QuadElement::rational(&Rational::from_bigint(self.a.clone()) / &s);
        let v2 = if self.e.is_zero() {
            QuadElement::zero()
        } else {
            QuadElement::new(
                &Rational::from_bigint(self.c.clone()) / &s,
                &Rational::from_bigint(self.e.clone()) / &s,
                self.d,
            )
        };
        (v1, v2)
    }

    /// Raw Hermite entries `(a, c, e)` and the common scale.
    pub fn hermite(&self) -> (&BigInt, &BigInt, &BigInt, &BigInt) {
        (&self.a, &self.c, &self.e, &self.scale)
    }

    /// Covolume relative to ℤ + ℤ√d, i.e. `a·e / scale²` (0 if rank < 2).
    pub fn covolume(&self) -> Rational {
        let s = Rational::from_bigint(self.scale.clone());
        let ae = Rational::from_bigint(&self.a * &self.e);
        &ae / &(&s * &s)
    }

    pub fn is_nonneg(&self) -> bool {
        !self.a.is_negative() && !self.e.is_negative()
    }
}
