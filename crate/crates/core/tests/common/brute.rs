//! Brute-force common divisors in Z + X*Q[X] for polynomials of degree at
//! most 2, in fixed-width arithmetic (overflow panics in test builds) and without any gcd routine for
//! polynomials. Every common divisor is `c * X^j * m` with `m` a monic
//! product of shared irreducible factors (found by the rational root test)
//! and `c` a rational scalar; the admissible scalars are enumerated
//! directly from the integrality conditions on constant terms.

pub type Int = i64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Q {
    pub n: Int,
    pub d: Int,
}

fn igcd(mut a: Int, mut b: Int) -> Int {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Q {
    pub const ZERO: Q = Q { n: 0, d: 1 };
    pub const ONE: Q = Q { n: 1, d: 1 };

    pub fn new(n: Int, d: Int) -> Q {
        assert!(d != 0);
        let g = igcd(n, d).max(1);
        let s = if d < 0 { -1 } else { 1 };
        Q { n: s * n / g, d: s * d / g }
    }

    pub fn int(n: Int) -> Q {
        Q { n, d: 1 }
    }

    pub fn is_zero(self) -> bool {
        self.n == 0
    }

    pub fn is_int(self) -> bool {
        self.d == 1
    }

    pub fn add(self, o: Q) -> Q {
        Q::new(self.n * o.d + o.n * self.d, self.d * o.d)
    }

    pub fn sub(self, o: Q) -> Q {
        Q::new(self.n * o.d - o.n * self.d, self.d * o.d)
    }

    pub fn mul(self, o: Q) -> Q {
        Q::new(self.n * o.n, self.d * o.d)
    }

    pub fn div(self, o: Q) -> Q {
        Q::new(self.n * o.d, self.d * o.n)
    }

    pub fn neg(self) -> Q {
        Q { n: -self.n, d: self.d }
    }
}

/// Coefficients, constant term first, length 3.
pub type P = [Q; 3];

pub fn deg(p: &P) -> Option<usize> {
    (0..3).rev().find(|&i| !p[i].is_zero())
}

pub fn ord(p: &P) -> Option<usize> {
    (0..3).find(|&i| !p[i].is_zero())
}

fn scale(p: &P, c: Q) -> P {
    [p[0].mul(c), p[1].mul(c), p[2].mul(c)]
}

fn neg(p: &P) -> P {
    scale(p, Q::int(-1))
}

/// Product, which must stay within degree 2.
fn mul(a: &P, b: &P) -> P {
    let mut out = [Q::ZERO; 3];
    for i in 0..3 {
        for j in 0..3 {
            if a[i].is_zero() || b[j].is_zero() {
                continue;
            }
            assert!(i + j < 3, "product exceeds degree 2");
            out[i + j] = out[i + j].add(a[i].mul(b[j]));
        }
    }
    out
}

/// Exact quotient in Q[X], if any.
fn exact_div(a: &P, b: &P) -> Option<P> {
    let db = deg(b).expect("nonzero divisor");
    let mut rem = *a;
    let mut quot = [Q::ZERO; 3];
    let Some(da) = deg(a) else { return Some(quot) };
    if da < db {
        return None;
    }
    for i in (0..=da - db).rev() {
        let c = rem[i + db].div(b[db]);
        if c.is_zero() {
            continue;
        }
        for j in 0..=db {
            rem[i + j] = rem[i + j].sub(c.mul(b[j]));
        }
        quot[i] = c;
    }
    rem.iter().all(|c| c.is_zero()).then_some(quot)
}

/// `d | e` in Z + X*Q[X]: exact quotient with integral constant term.
pub fn divides_r(d: &P, e: &P) -> bool {
    match exact_div(e, d) {
        Some(q) => q[0].is_int(),
        None => false,
    }
}

fn x_pow(j: usize) -> P {
    let mut p = [Q::ZERO; 3];
    p[j] = Q::ONE;
    p
}

fn eval(p: &P, x: Q) -> Q {
    p[0].add(x.mul(p[1].add(x.mul(p[2]))))
}

fn divisors(n: Int) -> Vec<Int> {
    let n = n.abs();
    (1..=n).filter(|k| n % k == 0).collect()
}

/// Monic irreducible factors over Q (with multiplicity) of a polynomial
/// of degree at most 2 with nonzero constant term.
fn factor_monic(p: &P) -> Vec<P> {
    match deg(p) {
        None | Some(0) => Vec::new(),
        Some(1) => vec![[p[0].div(p[1]), Q::ONE, Q::ZERO]],
        Some(_) => {
            let l = p.iter().fold(1 as Int, |acc, c| acc / igcd(acc, c.d) * c.d);
            let ip: Vec<Int> = p.iter().map(|c| c.n * (l / c.d)).collect();
            let mut root = None;
            'search: for num in divisors(ip[0]) {
                for den in divisors(ip[2]) {
                    for s in [1, -1] {
                        let r = Q::new(s * num, den);
                        if eval(p, r).is_zero() {
                            root = Some(r);
                            break 'search;
                        }
                    }
                }
            }
            match root {
                Some(r) => {
                    let other = p[1].div(p[2]).neg().sub(r);
                    vec![[r.neg(), Q::ONE, Q::ZERO], [other.neg(), Q::ONE, Q::ZERO]]
                }
                None => vec![scale(p, Q::ONE.div(p[2]))],
            }
        }
    }
}

/// Precomputed structure of one nonzero element.
#[derive(Clone, Debug)]
pub struct Info {
    pub p: P,
    pub k: usize,
    pub factors: Vec<P>,
}

impl Info {
    pub fn new(p: P) -> Info {
        let k = ord(&p).expect("nonzero");
        let mut low = [Q::ZERO; 3];
        for i in k..3 {
            low[i - k] = p[i];
        }
        Info { p, k, factors: factor_monic(&low) }
    }
}

fn common_factors(a: &[P], b: &[P]) -> Vec<P> {
    let mut rest = b.to_vec();
    let mut out = Vec::new();
    for f in a {
        if let Some(i) = rest.iter().position(|g| g == f) {
            rest.swap_remove(i);
            out.push(*f);
        }
    }
    out
}

/// Scalars tried for the unbounded families of admissible scalars.
const WIDE: Int = 720;
const SMALL: Int = 12;

/// Common divisors of `a` and `b`: complete for bounded families and a
/// finite window of the unbounded ones.
pub fn common_divisor_pool(a: &Info, b: &Info) -> Vec<P> {
    let shared = common_factors(&a.factors, &b.factors);
    let mut shapes = Vec::new();
    for j in 0..=a.k.min(b.k) {
        for mask in 0..(1u32 << shared.len()) {
            let mut s = x_pow(j);
            for (i, f) in shared.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    s = mul(&s, f);
                }
            }
            if !shapes.contains(&s) {
                shapes.push(s);
            }
        }
    }
    let mut pool = Vec::new();
    let mut push = |s: &P, c: Q| {
        pool.push(scale(s, c));
        pool.push(scale(s, c.neg()));
    };
    for s in &shapes {
        let j = ord(s).unwrap();
        if j == 0 {
            let (a0, b0) = (a.p[0].n, b.p[0].n);
            let top = match (a0, b0) {
                (0, 0) => SMALL,
                (0, n) | (n, 0) => n.abs(),
                (n, m) => n.abs().min(m.abs()),
            };
            for u in 1..=top {
                if a0 % u == 0 && b0 % u == 0 {
                    push(s, Q::int(u).div(s[0]));
                }
            }
            continue;
        }
        let ta = exact_div(&a.p, s).expect("shape divides a")[0];
        let tb = exact_div(&b.p, s).expect("shape divides b")[0];
        match (ta.is_zero(), tb.is_zero()) {
            (false, false) => {
                for w in 1..=WIDE {
                    let c = ta.div(Q::int(w));
                    if tb.div(c).is_int() {
                        push(s, c);
                    }
                }
            }
            (false, true) | (true, false) => {
                let t = if ta.is_zero() { tb } else { ta };
                for w in 1..=SMALL {
                    push(s, t.div(Q::int(w)));
                }
            }
            (true, true) => {
                for num in 1..=6 {
                    for den in 1..=6 {
                        push(s, Q::new(num, den));
                    }
                }
            }
        }
    }
    pool
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Disagreement {
    NotCommonDivisor,
    PoolElementNotDividing,
    NotInPool,
    PoolUnsound,
}

/// Whether `g` is the maximum of the common-divisor pool of `a`, `b` up
/// to sign. With `audit` every pool element is also re-checked to be a
/// common divisor.
pub fn check_gcd(a: &Info, b: &Info, g: &P, audit: bool) -> Result<(), Disagreement> {
    if !divides_r(g, &a.p) || !divides_r(g, &b.p) {
        return Err(Disagreement::NotCommonDivisor);
    }
    let pool = common_divisor_pool(a, b);
    let mut found = false;
    for d in &pool {
        if audit && (!divides_r(d, &a.p) || !divides_r(d, &b.p)) {
            return Err(Disagreement::PoolUnsound);
        }
        if !divides_r(d, g) {
            return Err(Disagreement::PoolElementNotDividing);
        }
        found |= d == g || neg(d) == *g;
    }
    if found {
        Ok(())
    } else {
        Err(Disagreement::NotInPool)
    }
}

/// Grid values `n/d` with `n` in [-6, 6] and `d` in {1, 2, 3}, deduplicated.
pub fn grid_values() -> Vec<Q> {
    let mut v: Vec<Q> = (-6..=6).flat_map(|n| [1, 2, 3].map(|d| Q::new(n, d))).collect();
    v.sort_by(|x, y| (x.n * y.d).cmp(&(y.n * x.d)));
    v.dedup();
    v
}

/// Nonzero grid elements of Z + X*Q[X] of degree at most 2.
pub fn grid() -> Vec<P> {
    let vals = grid_values();
    let mut out = Vec::new();
    for c0 in -6..=6 {
        for &c1 in &vals {
            for &c2 in &vals {
                let p = [Q::int(c0), c1, c2];
                if deg(&p).is_some() {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Representative of `{p, -p}`: lowest nonzero coefficient positive.
pub fn is_sign_rep(p: &P) -> bool {
    p[ord(p).expect("nonzero")].n > 0
}
