//! Primes of `R = K + X·L[X]` when L is the quotient field of K. Each one
//! is either the contraction of a prime of L[X] or `P + M` for a prime P of
//! K, the two families meeting at `M = X·L[X]`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::composite::CompositeElement;
use crate::error::{Error, Result};
use crate::exactnum::intmath::{common_denominator, is_prime_u64};
use crate::exactnum::lattice::ZLattice;
use crate::exactnum::{KTag, QuadElement, Rational};
use crate::poly::Poly;
use crate::ringdesc::CompositePair;

/// A prime of K.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum KPrime {
    Zero,
    /// `pℤ` in ℤ.
    Integer(u64),
    /// The maximal ideal `pℤ_(p)` of ℤ_(p).
    LocalMaximal(u64),
    /// A nonzero prime of ℤ[√d] by its Hermite basis `a`, `c + e√d`.
    Quad { d: i64, a: BigInt, c: BigInt, e: BigInt },
}

impl KPrime {
    /// The prime of K generated by `gens`, or `NotPrime`.
    pub fn from_gens(tag: KTag, gens: &[QuadElement]) -> Result<KPrime> {
        let not_prime = || Error::NotPrime(format!("({}) in {tag}", join(gens)));
        for g in gens {
            if !tag.contains(g)? {
                return Err(Error::NotPrime(format!("{g} does not lie in {tag}")));
            }
        }
        if gens.iter().all(QuadElement::is_zero) {
            return Ok(KPrime::Zero);
        }
        match tag {
            KTag::Integers => {
                let (g, _) = tag.bezout_combination(gens)?;
                let p = g.re().numer().to_u64().filter(|&p| is_prime_u64(p)).ok_or_else(not_prime)?;
                Ok(KPrime::Integer(p))
            }
            KTag::LocalizedIntegers(p) => {
                let v = gens.iter().filter_map(|g| g.re().valuation(p)).min().unwrap_or(0);
                if v >= 1 {
                    Ok(KPrime::LocalMaximal(p))
                } else {
                    Err(not_prime())
                }
            }
            KTag::QuadRing(d) => {
                let root = QuadElement::sqrt(d);
                let spanning: Vec<QuadElement> = gens.iter().flat_map(|g| [g.clone(), g * &root]).collect();
                let lat = ZLattice::span(&spanning, d);
                let (a, c, e, _) = lat.hermite();
                let kp = KPrime::Quad { d, a: a.clone(), c: c.clone(), e: e.clone() };
                if quad_ideal_is_prime(d, a, c, e) {
                    Ok(kp)
                } else {
                    Err(not_prime())
                }
            }
            KTag::Rationals | KTag::QuadField(_) => Err(not_prime()),
        }
    }

    /// Whether `x ∈ K` lies in the prime.
    pub fn contains(&self, x: &QuadElement) -> bool {
        match self {
            KPrime::Zero => x.is_zero(),
            KPrime::Integer(p) => {
                x.is_rational() && x.re().is_integer() && x.re().numer().is_multiple_of(&BigInt::from(*p))
            }
            KPrime::LocalMaximal(p) => x.is_zero() || x.re().valuation(*p).is_some_and(|v| v >= 1),
            KPrime::Quad { a, c, e, .. } => {
                if !x.is_integral_coords() {
                    return false;
                }
                let (tx, ty) = (x.re().numer(), x.im().numer());
                if !ty.is_multiple_of(e) {
                    return false;
                }
                (tx - (&ty / e) * c).is_multiple_of(a)
            }
        }
    }

    /// A nonzero element of the prime, if it is nonzero.
    pub fn witness(&self) -> Option<QuadElement> {
        match self {
            KPrime::Zero => None,
            KPrime::Integer(p) | KPrime::LocalMaximal(p) => Some(QuadElement::int(*p as i64)),
            KPrime::Quad { a, .. } => Some(QuadElement::rational(Rational::from_bigint(a.clone()))),
        }
    }

    /// Number of elements of `K/P`, for a nonzero prime.
    pub fn residue_size(&self) -> Option<BigInt> {
        match self {
            KPrime::Zero => None,
            KPrime::Integer(p) | KPrime::LocalMaximal(p) => Some(BigInt::from(*p)),
            KPrime::Quad { a, e, .. } => Some(a * e),
        }
    }

    fn generators(&self) -> Vec<QuadElement> {
        match self {
            KPrime::Zero => vec![QuadElement::zero()],
            KPrime::Integer(p) | KPrime::LocalMaximal(p) => vec![QuadElement::int(*p as i64)],
            KPrime::Quad { d, a, c, e } => vec![
                QuadElement::rational(Rational::from_bigint(a.clone())),
                QuadElement::new(Rational::from_bigint(c.clone()), Rational::from_bigint(e.clone()), *d),
            ],
        }
    }
}

impl fmt::Display for KPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({})", join(&self.generators()))
    }
}

fn join(xs: &[QuadElement]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

/// Primality of the ideal of ℤ[√d] with Hermite basis `a`, `c + e√d`.
fn quad_ideal_is_prime(d: i64, a: &BigInt, c: &BigInt, e: &BigInt) -> bool {
    if a.is_zero() || e.is_zero() {
        return false;
    }
    let small = |n: &BigInt| n.to_u64().filter(|&n| is_prime_u64(n));
    if e.is_one() {
        return small(a).is_some();
    }
    // otherwise the ideal is e·(a/e, c/e + √d); prime only as an inert (p)
    if a != e || !c.is_zero() {
        return false;
    }
    let Some(p) = small(a) else { return false };
    if p == 2 || (d.rem_euclid(p as i64)) == 0 {
        return false;
    }
    let dm = BigInt::from(d.rem_euclid(p as i64));
    dm.modpow(&BigInt::from((p - 1) / 2), &BigInt::from(p)) == BigInt::from(p - 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PrimeDescriptor {
    ZeroIdeal,
    /// `f·L[X] ∩ R` for monic irreducible f; `FromT(X)` is M.
    FromT(Poly),
    /// `P + M` for a prime P of K.
    OverM(KPrime),
}

impl fmt::Display for PrimeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeDescriptor::ZeroIdeal => write!(f, "prime:0"),
            PrimeDescriptor::FromT(p) if *p == Poly::x_pow(1) => write!(f, "prime:M"),
            PrimeDescriptor::FromT(p) => write!(f, "prime:T({p})"),
            PrimeDescriptor::OverM(KPrime::Zero) => write!(f, "prime:M"),
            PrimeDescriptor::OverM(kp) => write!(f, "prime:{kp}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PrimeBranch {
    /// Meets `K∖{0}` trivially; corresponds to a prime of L[X].
    ContractionFromT,
    /// Of the form `P + M`.
    ExtensionOverM,
    /// M itself, in both families.
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeReport {
    pub prime: String,
    pub branch: PrimeBranch,
    pub k_contraction: String,
    pub contains_m: bool,
    pub maximal: bool,
    pub height: u32,
    pub quotient: String,
}

fn require_qf(pair: &CompositePair) -> Result<()> {
    if pair.l_is_quotient_field_of_k {
        Ok(())
    } else {
        Err(Error::NotQuotientField)
    }
}

/// Validates `q` and reports its place in the spectrum.
pub fn classify_prime(pair: &CompositePair, q: &PrimeDescriptor) -> Result<PrimeReport> {
    require_qf(pair)?;
    validate(pair, q)?;
    let k = pair.k_tag.to_string();
    let l = pair.l_field.to_string();
    let report = match q {
        PrimeDescriptor::ZeroIdeal => PrimeReport {
            prime: q.to_string(),
            branch: PrimeBranch::ContractionFromT,
            k_contraction: "0".into(),
            contains_m: false,
            maximal: false,
            height: 0,
            quotient: format!("{pair}"),
        },
        PrimeDescriptor::FromT(f) if *f == Poly::x_pow(1) => m_report(pair),
        PrimeDescriptor::OverM(KPrime::Zero) => m_report(pair),
        PrimeDescriptor::FromT(f) => PrimeReport {
            prime: q.to_string(),
            branch: PrimeBranch::ContractionFromT,
            k_contraction: "0".into(),
            contains_m: false,
            maximal: true,
            height: 1,
            quotient: format!("{l}[X]/({f})"),
        },
        PrimeDescriptor::OverM(kp) => PrimeReport {
            prime: q.to_string(),
            branch: PrimeBranch::ExtensionOverM,
            k_contraction: kp.to_string(),
            contains_m: true,
            maximal: true,
            height: 1 + pair.k_flags.krull_dim.unwrap_or(1),
            quotient: format!("{k}/({}) = field with {} elements", join(&kp.generators()), kp.residue_size().expect("nonzero")),
        },
    };
    Ok(report)
}

fn m_report(pair: &CompositePair) -> PrimeReport {
    PrimeReport {
        prime: "prime:M".into(),
        branch: PrimeBranch::Both,
        k_contraction: "0".into(),
        contains_m: true,
        maximal: pair.k_flags.is_field == Some(true),
        height: 1,
        quotient: pair.k_tag.to_string(),
    }
}

fn validate(pair: &CompositePair, q: &PrimeDescriptor) -> Result<()> {
    match q {
        PrimeDescriptor::ZeroIdeal => Ok(()),
        PrimeDescriptor::FromT(f) => {
            crate::composite::poly_in_l(pair, f)?;
            if f.lead().is_none_or(|c| !c.is_one()) {
                return Err(Error::NotPrime(format!("{f} is not monic")));
            }
            if is_irreducible(f, pair.l_field.radicand())? {
                Ok(())
            } else {
                Err(Error::NotPrime(format!("{f} is reducible")))
            }
        }
        PrimeDescriptor::OverM(kp) => {
            let gens = kp.generators();
            let canon = KPrime::from_gens(pair.k_tag, &gens)?;
            if &canon == kp {
                Ok(())
            } else {
                Err(Error::NotPrime(format!("{kp} is not a prime of {}", pair.k_tag)))
            }
        }
    }
}

/// Irreducibility over ℚ up to degree 3 and over ℚ(√d) up to degree 2.
pub fn is_irreducible(f: &Poly, d: i64) -> Result<bool> {
    let Some(deg) = f.degree() else { return Ok(false) };
    if deg == 0 {
        return Ok(false);
    }
    if deg == 1 {
        return Ok(true);
    }
    if deg == 2 {
        return Ok(!has_root_in_field(f, d));
    }
    // a cubic over ℚ without rational roots has no root in any quadratic field
    if deg == 3 && f.coeffs().iter().all(QuadElement::is_rational) {
        return Ok(rational_root(f).is_none());
    }
    Err(Error::NotPrime(format!("cannot certify irreducibility of degree-{deg} {f}")))
}

fn rational_root(f: &Poly) -> Option<Rational> {
    let den = common_denominator(f.coeffs());
    let ints: Vec<BigInt> =
        f.coeffs().iter().map(|c| (c.re() * &Rational::from_bigint(den.clone())).numer()).collect();
    if ints[0].is_zero() {
        return Some(Rational::zero());
    }
    let lead = ints.last().expect("nonzero");
    for p in divisors(&ints[0]) {
        for q in divisors(lead) {
            for s in [1i64, -1] {
                let r = Rational::from_big(&p * s, q.clone());
                if f.eval(&QuadElement::rational(r.clone())).is_zero() {
                    return Some(r);
                }
            }
        }
    }
    None
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= n {
        if n.is_multiple_of(&i) {
            out.push(i.clone());
            let j = &n / &i;
            if j != i {
                out.push(j);
            }
        }
        i += 1;
    }
    out
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let (n, m) = (r.numer(), r.denom());
    let (sn, sm) = (n.sqrt(), m.sqrt());
    (&sn * &sn == n && &sm * &sm == m).then(|| Rational::from_big(sn, sm))
}

/// Whether `x` is a square in ℚ(√d) (in ℚ when `d = 0`).
fn is_square_in_field(x: &QuadElement, d: i64) -> bool {
    let (u, v) = (x.re(), x.im());
    if v.is_zero() {
        if rational_sqrt(u).is_some() {
            return true;
        }
        return d != 0 && rational_sqrt(&(u / &Rational::from_int(d))).is_some();
    }
    // (s + t√d)² = x gives t² = (u ± √(u² − d v²)) / (2d)
    let disc = &(u * u) - &(&Rational::from_int(d) * &(v * v));
    let Some(root) = rational_sqrt(&disc) else { return false };
    let two_d = Rational::from_int(2 * d);
    for cand in [&(u + &root) / &two_d, &(u - &root) / &two_d] {
        if let Some(t) = rational_sqrt(&cand) {
            if t.is_zero() {
                continue;
            }
            let s = v / &(&Rational::from_int(2) * &t);
            let y = QuadElement::new(s, t, d);
            if &(&y * &y) == x {
                return true;
            }
        }
    }
    false
}

fn has_root_in_field(f: &Poly, d: i64) -> bool {
    let (c, b) = (f.coeff(0), f.coeff(1));
    let disc = &(&b * &b) - &(&QuadElement::int(4) * &c);
    is_square_in_field(&disc, d)
}

/// Whether `x` lies in the prime `q`.
pub fn prime_contains(q: &PrimeDescriptor, x: &CompositeElement) -> bool {
    match q {
        PrimeDescriptor::ZeroIdeal => x.is_zero(),
        PrimeDescriptor::FromT(f) => x.poly().exact_div(f).is_some(),
        PrimeDescriptor::OverM(kp) => kp.contains(&x.constant_term()),
    }
}

/// `Q ∩ K`.
pub fn contract_prime(pair: &CompositePair, q: &PrimeDescriptor) -> Result<KPrime> {
    require_qf(pair)?;
    validate(pair, q)?;
    Ok(match q {
        PrimeDescriptor::OverM(kp) => kp.clone(),
        _ => KPrime::Zero,
    })
}

/// `P + M` for a prime P of K.
pub fn lift_prime(pair: &CompositePair, p: &KPrime) -> Result<PrimeDescriptor> {
    require_qf(pair)?;
    let q = PrimeDescriptor::OverM(p.clone());
    validate(pair, &q)?;
    Ok(q)
}

/// `max(height(XL[X]) + dim K, dim L[X]) = max(1 + dim K, 1)`.
pub fn krull_dim(pair: &CompositePair) -> Result<u32> {
    require_qf(pair)?;
    let dim_k = pair.k_flags.krull_dim.ok_or_else(|| Error::InsufficientData("k_krull_dim".into()))?;
    Ok((1 + dim_k).max(1))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeChain {
    pub links: Vec<PrimeDescriptor>,
    /// `separators[i]` lies in `links[i + 1]` but not in `links[i]`.
    pub separators: Vec<CompositeElement>,
}

/// The nonzero prime of K used to top off witness chains.
pub fn default_k_prime(tag: KTag) -> Option<KPrime> {
    match tag {
        KTag::Integers => Some(KPrime::Integer(2)),
        KTag::LocalizedIntegers(p) => Some(KPrime::LocalMaximal(p)),
        KTag::QuadRing(d) => {
            let second = if d.rem_euclid(2) == 1 { QuadElement::new(Rational::one(), Rational::one(), d) } else { QuadElement::sqrt(d) };
            KPrime::from_gens(tag, &[QuadElement::int(2), second]).ok()
        }
        KTag::Rationals | KTag::QuadField(_) => None,
    }
}

/// `(0) ⊂ M ⊂ P + M`, of length `krull_dim`.
pub fn witness_chain(pair: &Arc<CompositePair>) -> Result<PrimeChain> {
    let dim = krull_dim(pair)?;
    let mut links = vec![PrimeDescriptor::ZeroIdeal, PrimeDescriptor::FromT(Poly::x_pow(1))];
    let mut separators = vec![CompositeElement::x(pair)];
    if dim >= 2 {
        let kp = default_k_prime(pair.k_tag)
            .ok_or_else(|| Error::InvariantViolation(format!("no prime of {} to extend by", pair.k_tag)))?;
        let w = kp.witness().expect("nonzero prime");
        separators.push(CompositeElement::from_k(pair, w)?);
        links.push(PrimeDescriptor::OverM(kp));
    }
    if links.len() as u32 != dim + 1 {
        return Err(Error::InvariantViolation(format!("chain of length {} for dimension {dim}", links.len() - 1)));
    }
    let chain = PrimeChain { links, separators };
    if !verify_chain(pair, &chain)? {
        return Err(Error::InvariantViolation("witness chain failed verification".into()));
    }
    Ok(chain)
}

/// Every link classifies as a prime, every separator separates, and the
/// links are nested (checked on the generators of the smaller prime).
pub fn verify_chain(pair: &Arc<CompositePair>, chain: &PrimeChain) -> Result<bool> {
    if chain.separators.len() + 1 != chain.links.len() {
        return Ok(false);
    }
    for l in &chain.links {
        classify_prime(pair, l)?;
    }
    for (i, s) in chain.separators.iter().enumerate() {
        let (lo, hi) = (&chain.links[i], &chain.links[i + 1]);
        if prime_contains(lo, s) || !prime_contains(hi, s) {
            return Ok(false);
        }
        if !sample_generators(pair, lo)?.iter().all(|g| prime_contains(hi, g)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Elements generating (or, for M, spanning a generating family of) a prime.
fn sample_generators(pair: &Arc<CompositePair>, q: &PrimeDescriptor) -> Result<Vec<CompositeElement>> {
    let d = pair.l_field.radicand();
    let m_gens = || {
        let mut v = vec![CompositeElement::x(pair)];
        if d != 0 {
            v.push(CompositeElement::new(pair, Poly::monomial(QuadElement::sqrt(d), 1)).expect("in M"));
        }
        v.push(CompositeElement::new(pair, Poly::monomial(QuadElement::frac(1, 3), 1)).expect("in M"));
        v
    };
    Ok(match q {
        PrimeDescriptor::ZeroIdeal => vec![],
        PrimeDescriptor::FromT(f) if *f == Poly::x_pow(1) => m_gens(),
        PrimeDescriptor::FromT(f) => vec![crate::composite::scale_into_r(pair, f)?.1],
        PrimeDescriptor::OverM(kp) => {
            let mut v = m_gens();
            for g in kp.generators().into_iter().filter(|g| !g.is_zero()) {
                v.push(CompositeElement::from_k(pair, g)?);
            }
            v
        }
    })
}

impl Serialize for PrimeDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composite::testutil::*;
    use crate::ringdesc::LField;
    use proptest::prelude::*;

    fn qd(a: i64, b: i64, d: i64) -> QuadElement {
        QuadElement::new(Rational::from_int(a), Rational::from_int(b), d)
    }

    #[test]
    fn m_is_the_pasting_point() {
        let r = zq();
        let a = classify_prime(&r, &PrimeDescriptor::FromT(Poly::x_pow(1))).unwrap();
        let b = classify_prime(&r, &PrimeDescriptor::OverM(KPrime::Zero)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.branch, PrimeBranch::Both);
        assert_eq!(a.quotient, "Z");
        assert!(a.contains_m && !a.maximal);
    }

    #[test]
    fn over_two() {
        let r = zq();
        let q = PrimeDescriptor::OverM(KPrime::Integer(2));
        let rep = classify_prime(&r, &q).unwrap();
        assert!(rep.maximal && rep.contains_m);
        assert_eq!(rep.height, 2);
        assert_eq!(rep.k_contraction, "K(2)");
        assert!(rep.quotient == "Z/(2) = field with 2 elements");
        assert!(prime_contains(&q, &CompositeElement::x(&r)));
        assert!(!prime_contains(&q, &el(&r, &[(3, 1), (1, 1)])));
        assert_eq!(classify_prime(&r, &PrimeDescriptor::OverM(KPrime::Integer(4))).unwrap_err().name(), "NotPrime");
    }

    #[test]
    fn from_t() {
        let r = zq();
        let f = poly(&[(-1, 1), (1, 1)]);
        let rep = classify_prime(&r, &PrimeDescriptor::FromT(f.clone())).unwrap();
        assert_eq!(rep.branch, PrimeBranch::ContractionFromT);
        assert_eq!((rep.height, rep.k_contraction.as_str(), rep.maximal), (1, "0", true));
        assert_eq!(rep.quotient, "Q[X]/(X - 1)");
        let bad = PrimeDescriptor::FromT(poly(&[(-1, 1), (0, 1), (1, 1)]));
        assert_eq!(classify_prime(&r, &bad).unwrap_err().name(), "NotPrime");
        assert!(classify_prime(&r, &PrimeDescriptor::FromT(poly(&[(-2, 1), (0, 1), (1, 1)]))).is_ok());
        assert!(classify_prime(&r, &PrimeDescriptor::FromT(poly(&[(-2, 1), (0, 1), (0, 1), (1, 1)]))).is_ok());
        assert!(classify_prime(&r, &PrimeDescriptor::FromT(poly(&[(2, 1), (1, 1)]))).is_ok());
    }

    #[test]
    fn irreducibility_over_quadratic_fields() {
        // X² + 1 splits over ℚ(i), X² + 5 over ℚ(√-5), X² − 2 does not
        assert!(!is_irreducible(&poly(&[(1, 1), (0, 1), (1, 1)]), -1).unwrap());
        assert!(!is_irreducible(&poly(&[(5, 1), (0, 1), (1, 1)]), -5).unwrap());
        assert!(!is_irreducible(&poly(&[(20, 1), (0, 1), (1, 1)]), -5).unwrap());
        assert!(is_irreducible(&poly(&[(-2, 1), (0, 1), (1, 1)]), -1).unwrap());
        // X² − i = (X − (1+i)/√2)…, irreducible over ℚ(i); X² − 2i = (X − (1+i))(X + 1 + i)
        let x2 = |c: QuadElement| Poly::new(vec![-&c, QuadElement::zero(), QuadElement::one()]);
        assert!(is_irreducible(&x2(qd(0, 1, -1)), -1).unwrap());
        assert!(!is_irreducible(&x2(qd(0, 2, -1)), -1).unwrap());
        assert!(is_irreducible(&poly(&[(1, 1), (0, 1), (0, 1), (0, 1), (1, 1)]), 0).is_err());
    }

    #[test]
    fn quad_primes() {
        let tag = KTag::QuadRing(-5);
        assert!(KPrime::from_gens(tag, &[qd(2, 0, -5), qd(1, 1, -5)]).is_ok());
        assert!(KPrime::from_gens(tag, &[qd(3, 0, -5), qd(1, 1, -5)]).is_ok());
        assert!(KPrime::from_gens(tag, &[qd(2, 0, -5)]).is_err());
        assert!(KPrime::from_gens(tag, &[qd(11, 0, -5)]).is_ok(), "-5 is a non-residue mod 11");
        assert!(KPrime::from_gens(tag, &[qd(3, 0, -5)]).is_err(), "3 splits");
        assert!(KPrime::from_gens(tag, &[qd(6, 0, -5), qd(1, 1, -5)]).is_err());
        assert!(KPrime::from_gens(KTag::QuadRing(-1), &[qd(3, 0, -1)]).is_ok());
        assert!(KPrime::from_gens(KTag::QuadRing(-1), &[qd(5, 0, -1)]).is_err());
    }

    #[test]
    fn dims_and_chains() {
        for p in [zq(), pair(KTag::LocalizedIntegers(2), LField::Rationals)] {
            assert_eq!(krull_dim(&p).unwrap(), 2);
            let c = witness_chain(&p).unwrap();
            assert_eq!(c.links.len(), 3);
            assert_eq!(c.separators[0], CompositeElement::x(&p));
        }
        let z5 = pair(KTag::QuadRing(-5), LField::Quadratic(-5));
        let c = witness_chain(&z5).unwrap();
        assert_eq!(c.links[2].to_string(), "prime:K(2; (1+sqrt(-5)))");
        for d in [-1, -2, -6] {
            assert_eq!(witness_chain(&pair(KTag::QuadRing(d), LField::Quadratic(d))).unwrap().links.len(), 3);
        }
        let gi = pair(KTag::Rationals, LField::Quadratic(-1));
        assert_eq!(krull_dim(&gi).unwrap_err(), Error::NotQuotientField);
        assert_eq!(witness_chain(&gi).unwrap_err(), Error::NotQuotientField);
    }

    #[test]
    fn broken_chain_is_rejected() {
        let r = zq();
        let mut c = witness_chain(&r).unwrap();
        c.separators[1] = el(&r, &[(3, 1)]);
        assert!(!verify_chain(&r, &c).unwrap());
        c.links.swap(1, 2);
        c.separators = vec![el(&r, &[(2, 1)]), CompositeElement::x(&r)];
        assert!(!verify_chain(&r, &c).unwrap());
    }

    #[test]
    fn lift_and_contract() {
        let r = zq();
        let q = lift_prime(&r, &KPrime::Integer(3)).unwrap();
        assert_eq!(contract_prime(&r, &q).unwrap(), KPrime::Integer(3));
        assert_eq!(contract_prime(&r, &PrimeDescriptor::FromT(poly(&[(1, 1), (1, 1)]))).unwrap(), KPrime::Zero);
    }

    proptest! {
        #[test]
        fn from_t_contracts_to_zero(c in 1i64..50, s in prop_oneof![Just(1i64), Just(-1)], den in 1i64..5) {
            let r = zq();
            let f = poly(&[(s * c, den), (1, 1)]);
            let rep = classify_prime(&r, &PrimeDescriptor::FromT(f.clone())).unwrap();
            prop_assert_eq!(rep.k_contraction, "0");
            for k in 1..20 {
                let x = CompositeElement::from_k(&r, QuadElement::int(k)).unwrap();
                prop_assert!(!prime_contains(&PrimeDescriptor::FromT(f.clone()), &x));
            }
        }

        #[test]
        fn evaluation_kernel(cs in proptest::collection::vec((-9i64..9, 1i64..4), 0..5), k in -5i64..5) {
            // g ∈ (X − 1)L[X] ∩ R iff g(1) = 0
            let r = zq();
            let f = poly(&[(-1, 1), (1, 1)]);
            let g = &(&poly(&cs) * &f) + &Poly::constant(QuadElement::int(k));
            if let Ok(x) = CompositeElement::new(&r, g.clone()) {
                let inside = prime_contains(&PrimeDescriptor::FromT(f.clone()), &x);
                prop_assert_eq!(inside, g.eval(&QuadElement::one()).is_zero());
            }
        }
    }
}
