//! Finitely generated ideals of `R = K + X·L[X]`.
//!
//! When L is the quotient field of K every such ideal factors as
//! `I = b·(J + M) = b·J·R` with `b ∈ I` and J a fractional K-ideal
//! containing 1; membership, classes and generator reduction are all read
//! off that factorization.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::composite::CompositeElement;
use crate::error::{Error, Result};
use crate::exactnum::lattice::ZLattice;
use crate::exactnum::{KTag, QuadElement, Rational};
use crate::gcdengine::lcm_composite;
use crate::oracle::{decide_n_generator, licenses_bezout, licenses_prufer};
use crate::poly::Poly;
use crate::ringdesc::{ClassGroup, CompositePair};

/// A nonzero ideal given by nonzero generators.
#[derive(Clone, PartialEq, Eq)]
pub struct FGIdeal {
    pair: Arc<CompositePair>,
    gens: Vec<CompositeElement>,
}

impl FGIdeal {
    /// Zero generators are dropped; at least one must remain.
    pub fn new(pair: &Arc<CompositePair>, gens: Vec<CompositeElement>) -> Result<Self> {
        if gens.iter().any(|g| g.pair() != pair) {
            return Err(Error::PairMismatch);
        }
        let gens: Vec<_> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        Ok(FGIdeal { pair: Arc::clone(pair), gens })
    }

    pub fn pair(&self) -> &Arc<CompositePair> {
        &self.pair
    }

    pub fn gens(&self) -> &[CompositeElement] {
        &self.gens
    }
}

impl fmt::Display for FGIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ideal(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for FGIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.pair)
    }
}

/// The K-submodule of L spanned by `gens`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KFractionalIdeal {
    pub k_tag: KTag,
    pub gens: Vec<QuadElement>,
}

impl KFractionalIdeal {
    /// Coefficients `e_s ∈ K` with `Σ e_s·gens[s] = x`, if `x` lies in the module.
    pub fn combination(&self, x: &QuadElement) -> Result<Option<Vec<QuadElement>>> {
        let n = self.gens.len();
        if x.is_zero() {
            return Ok(Some(vec![QuadElement::zero(); n]));
        }
        let Some(first) = self.gens.iter().position(|g| !g.is_zero()) else {
            return Ok(None);
        };
        match self.k_tag {
            KTag::QuadRing(d) => {
                let lat = self.lattice(d);
                Ok(lat.solve(x).map(|c| {
                    (0..n)
                        .map(|s| {
                            QuadElement::new(
                                Rational::from_bigint(c[2 * s].clone()),
                                Rational::from_bigint(c[2 * s + 1].clone()),
                                d,
                            )
                        })
                        .collect()
                }))
            }
            KTag::Rationals | KTag::QuadField(_) => {
                let t = x / &self.gens[first];
                if !self.k_tag.contains(&t)? {
                    return Ok(None);
                }
                let mut e = vec![QuadElement::zero(); n];
                e[first] = t;
                Ok(Some(e))
            }
            KTag::Integers | KTag::LocalizedIntegers(_) => {
                let (gamma, k) = self.k_tag.bezout_combination(&self.gens)?;
                let t = x / &gamma;
                if !self.k_tag.contains(&t)? {
                    return Ok(None);
                }
                Ok(Some(k.iter().map(|ki| ki * &t).collect()))
            }
        }
    }

    pub fn contains(&self, x: &QuadElement) -> Result<bool> {
        Ok(self.combination(x)?.is_some())
    }

    /// ℤ-lattice of the module over `ℤ[√d] = ℤ + ℤ√d`; generator `s`
    /// contributes columns `2s` (itself) and `2s + 1` (times √d).
    fn lattice(&self, d: i64) -> ZLattice {
        let root = QuadElement::sqrt(d);
        let spanning: Vec<QuadElement> = self.gens.iter().flat_map(|g| [g.clone(), g * &root]).collect();
        ZLattice::span(&spanning, d)
    }

    /// For `K = ℤ[√d]`: `(D, a, c, e)` with `D` the least positive integer
    /// making `D·J` integral, and `D·J` having ℤ-basis `a`, `c + e√d`.
    pub fn integral_hermite(&self) -> Option<(BigInt, BigInt, BigInt, BigInt)> {
        let KTag::QuadRing(d) = self.k_tag else { return None };
        let lat = self.lattice(d);
        let (a, c, e, s) = lat.hermite();
        Some((s.clone(), a.clone(), c.clone(), e.clone()))
    }

    /// A single generator of the module, if it is principal. Decided by
    /// searching for an element of the right norm in the integral rescaling.
    pub fn principal_generator(&self) -> Result<Option<QuadElement>> {
        match self.k_tag {
            KTag::QuadRing(d) => {
                let (scale, a, c, e) = self.integral_hermite().expect("quadratic ring");
                let norm = &a * &e;
                let Some(alpha) = norm_search(d, &norm, |cand| {
                    let ty = cand.im().numer();
                    if !(&ty % &e).is_zero() {
                        return false;
                    }
                    let tx = cand.re().numer() - (&ty / &e) * &c;
                    (&tx % &a).is_zero()
                }) else {
                    return Ok(None);
                };
                let s_inv = Rational::from_big(BigInt::from(1), scale);
                Ok(Some(alpha.scale(&s_inv)))
            }
            KTag::Integers | KTag::LocalizedIntegers(_) | KTag::Rationals | KTag::QuadField(_) => {
                Ok(Some(self.k_tag.bezout_combination(&self.gens)?.0))
            }
        }
    }
}

/// An element `x + y√d` (d < 0) of norm `n` accepted by `accept`, searching
/// `0 ≤ y ≤ √(n/|d|)` and both signs of the √d part.
fn norm_search(d: i64, n: &BigInt, accept: impl Fn(&QuadElement) -> bool) -> Option<QuadElement> {
    assert!(d < 0, "norm search needs an imaginary quadratic ring");
    let md = BigInt::from(-d);
    let ymax = (n / &md).sqrt();
    let mut y = BigInt::zero();
    while y <= ymax {
        let rest = n - &md * &y * &y;
        let x = rest.sqrt();
        if &x * &x == rest {
            for sy in [y.clone(), -y.clone()] {
                let cand = QuadElement::new(Rational::from_bigint(x.clone()), Rational::from_bigint(sy), d);
                if accept(&cand) {
                    return Some(cand);
                }
            }
        }
        y += 1;
    }
    None
}

/// `I = b·J·R` with `J` spanned by `lambdas` (which always contains 1 in
/// its K-span).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealNormalForm {
    pub b: CompositeElement,
    /// `Σ b_witness[i]·gens[i] = b`.
    pub b_witness: Vec<CompositeElement>,
    /// `lambdas[i] = (gens[i]/b)(0)`.
    pub lambdas: Vec<QuadElement>,
    kappa: QuadElement,
    /// `gens[i] / d0` with `d0` the monic L[X]-gcd of the generators.
    cofactors: Vec<Poly>,
}

impl IdealNormalForm {
    pub fn j(&self) -> KFractionalIdeal {
        KFractionalIdeal { k_tag: self.b.pair().k_tag, gens: self.lambdas.clone() }
    }
}

/// Normal form `b·J·R` of an ideal, with an explicit expression of `b`
/// over the generators. Requires L to be the quotient field of K.
pub fn normalize_ideal(ideal: &FGIdeal) -> Result<IdealNormalForm> {
    let pair = &ideal.pair;
    if !pair.l_is_quotient_field_of_k {
        return Err(Error::NotQuotientField);
    }
    let tag = pair.k_tag;
    let gens = &ideal.gens;
    let n = gens.len();

    // d0 = Σ alpha_i g_i, monic
    let mut d0 = Poly::zero();
    let mut alpha: Vec<Poly> = Vec::with_capacity(n);
    for g in gens {
        let (nd, s, t) = Poly::ext_gcd(&d0, g.poly());
        for a in alpha.iter_mut() {
            *a = &*a * &s;
        }
        alpha.push(t);
        d0 = nd;
    }
    let hs: Vec<Poly> = gens.iter().map(|g| g.poly().exact_div(&d0).expect("d0 divides")).collect();
    let cs: Vec<QuadElement> = hs.iter().map(Poly::constant_term).collect();

    let (kappa, ks) = if tag.is_gcd_domain() {
        tag.bezout_combination(&cs)?
    } else {
        let j = cs.iter().position(|c| !c.is_zero()).expect("gcd of cofactors is 1");
        let mut ks = vec![QuadElement::zero(); n];
        ks[j] = QuadElement::one();
        (cs[j].clone(), ks)
    };

    // m = Σ k_i (h_i − h_i(0)) ∈ M, w_i = k_i − m·alpha_i
    let mut m = Poly::zero();
    for (k, h) in ks.iter().zip(&hs) {
        m = &m + &h.without_constant().scale(k);
    }
    let b_witness = ks
        .iter()
        .zip(&alpha)
        .map(|(k, a)| CompositeElement::new(pair, &Poly::constant(k.clone()) - &(&m * a)))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| Error::InvariantViolation(format!("normal-form witness left R: {e}")))?;
    let b = CompositeElement::new(pair, d0.scale(&kappa))
        .map_err(|e| Error::InvariantViolation(format!("normal-form generator left R: {e}")))?;

    let mut check = CompositeElement::zero(pair);
    for (w, g) in b_witness.iter().zip(gens) {
        check = check.add(&w.mul(g)?)?;
    }
    if check != b {
        return Err(Error::InvariantViolation(format!("witness combination gives {check}, not {b}")));
    }
    let kappa_inv = kappa.recip().expect("nonzero");
    let lambdas = cs.iter().map(|c| c * &kappa_inv).collect();
    Ok(IdealNormalForm { b, b_witness, lambdas, kappa, cofactors: hs })
}

/// Outcome of a membership query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    /// Coefficients `r_i ∈ R` with `Σ r_i·gens[i] = x`.
    Member(Vec<CompositeElement>),
    NotMember,
    /// No combination with coefficient degree ≤ the bound exists.
    NotMemberWithinBound(usize),
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }
}

pub fn membership(x: &CompositeElement, ideal: &FGIdeal) -> Result<Membership> {
    if x.pair() != &ideal.pair {
        return Err(Error::PairMismatch);
    }
    let pair = &ideal.pair;
    if x.is_zero() {
        return Ok(Membership::Member(vec![CompositeElement::zero(pair); ideal.gens.len()]));
    }
    if pair.l_is_quotient_field_of_k {
        let nf = normalize_ideal(ideal)?;
        membership_nf(x, ideal, &nf)
    } else {
        membership_bounded(x, ideal)
    }
}

/// Membership against a precomputed normal form of `ideal`.
pub fn membership_nf(x: &CompositeElement, ideal: &FGIdeal, nf: &IdealNormalForm) -> Result<Membership> {
    let pair = &ideal.pair;
    let Some(q) = x.poly().exact_div(nf.b.poly()) else {
        return Ok(Membership::NotMember);
    };
    let q0 = q.constant_term();
    let Some(es) = nf.j().combination(&q0)? else {
        return Ok(Membership::NotMember);
    };
    // x = Σ e_s g_s + b·E with E ∈ M
    let kappa_inv = nf.kappa.recip().expect("nonzero");
    let mut big_e = q.without_constant();
    for (e, h) in es.iter().zip(&nf.cofactors) {
        big_e = &big_e - &h.without_constant().scale(&(e * &kappa_inv));
    }
    let big_e = CompositeElement::new(pair, big_e)?;
    let rs = es
        .iter()
        .zip(&nf.b_witness)
        .map(|(e, w)| CompositeElement::from_k(pair, e.clone())?.add(&w.mul(&big_e)?))
        .collect::<Result<Vec<_>>>()?;
    let mut check = CompositeElement::zero(pair);
    for (r, g) in rs.iter().zip(&ideal.gens) {
        check = check.add(&r.mul(g)?)?;
    }
    if &check != x {
        return Err(Error::InvariantViolation(format!("membership witness gives {check}, not {x}")));
    }
    Ok(Membership::Member(rs))
}

/// Field K with `[L:K]` finite: search for coefficients of degree at most
/// `deg x + max deg gᵢ` by exact linear algebra over ℚ.
fn membership_bounded(x: &CompositeElement, ideal: &FGIdeal) -> Result<Membership> {
    let pair = &ideal.pair;
    let KTag::Rationals = pair.k_tag else {
        return Err(Error::NotQuotientField);
    };
    let d = pair.l_field.radicand();
    let max_g = ideal.gens.iter().filter_map(CompositeElement::degree).max().unwrap_or(0);
    let bound = x.degree().unwrap_or(0) + max_g;
    let top = bound + max_g;

    // unknown columns: per generator, 1 then (X^j, √d·X^j) for j = 1..=bound
    let mut basis: Vec<(usize, Poly)> = Vec::new();
    for (i, _) in ideal.gens.iter().enumerate() {
        basis.push((i, Poly::one()));
        for j in 1..=bound {
            basis.push((i, Poly::x_pow(j)));
            basis.push((i, Poly::monomial(QuadElement::sqrt(d), j)));
        }
    }
    let rows = 2 * (top + 1);
    let mut mat = vec![vec![Rational::zero(); basis.len()]; rows];
    for (col, (i, p)) in basis.iter().enumerate() {
        let prod = p * ideal.gens[*i].poly();
        for (k, c) in prod.coeffs().iter().enumerate() {
            mat[2 * k][col] = c.re().clone();
            mat[2 * k + 1][col] = c.im().clone();
        }
    }
    let mut rhs = vec![Rational::zero(); rows];
    for (k, c) in x.poly().coeffs().iter().enumerate() {
        rhs[2 * k] = c.re().clone();
        rhs[2 * k + 1] = c.im().clone();
    }
    let Some(sol) = solve_linear(mat, rhs) else {
        return Ok(Membership::NotMemberWithinBound(bound));
    };
    let mut polys = vec![Poly::zero(); ideal.gens.len()];
    for ((i, p), s) in basis.iter().zip(sol) {
        polys[*i] = &polys[*i] + &p.scale(&QuadElement::rational(s));
    }
    let rs = polys.into_iter().map(|p| CompositeElement::new(pair, p)).collect::<Result<Vec<_>>>()?;
    let mut check = CompositeElement::zero(pair);
    for (r, g) in rs.iter().zip(&ideal.gens) {
        check = check.add(&r.mul(g)?)?;
    }
    if &check != x {
        return Err(Error::InvariantViolation("bounded membership witness does not recombine".into()));
    }
    Ok(Membership::Member(rs))
}

/// Some solution of `A·v = rhs`, by Gauss–Jordan elimination.
fn solve_linear(mut a: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let (rows, cols) = (a.len(), a.first().map_or(0, Vec::len));
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        rhs.swap(r, p);
        let inv = a[r][c].recip().expect("nonzero pivot");
        for v in a[r].iter_mut() {
            *v = &*v * &inv;
        }
        rhs[r] = &rhs[r] * &inv;
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in 0..cols {
                    let t = &a[r][k] * &f;
                    a[i][k] = &a[i][k] - &t;
                }
                let t = &rhs[r] * &f;
                rhs[i] = &rhs[i] - &t;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if rhs[r..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut sol = vec![Rational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = rhs[i].clone();
    }
    Some(sol)
}

pub fn ideal_sum(i: &FGIdeal, j: &FGIdeal) -> Result<FGIdeal> {
    if i.pair != j.pair {
        return Err(Error::PairMismatch);
    }
    FGIdeal::new(&i.pair, i.gens.iter().chain(&j.gens).cloned().collect())
}

pub fn ideal_product(i: &FGIdeal, j: &FGIdeal) -> Result<FGIdeal> {
    if i.pair != j.pair {
        return Err(Error::PairMismatch);
    }
    let mut gens = Vec::with_capacity(i.gens.len() * j.gens.len());
    for a in &i.gens {
        for b in &j.gens {
            gens.push(a.mul(b)?);
        }
    }
    FGIdeal::new(&i.pair, gens)
}

/// The principal generator of an ideal in a Bézout configuration.
fn principal_generator(ideal: &FGIdeal) -> Result<CompositeElement> {
    let nf = normalize_ideal(ideal)?;
    let Some(gamma) = nf.j().principal_generator()? else {
        return Err(Error::InvariantViolation(format!("{ideal} is not principal")));
    };
    Ok(times_l(&nf.b, &gamma)?.normalize_unit())
}

pub fn ideal_intersect(i: &FGIdeal, j: &FGIdeal) -> Result<FGIdeal> {
    if i.pair != j.pair {
        return Err(Error::PairMismatch);
    }
    if !licenses_bezout(&i.pair) {
        return Err(Error::NotBezoutConfiguration(i.pair.to_string()));
    }
    let (a, b) = (principal_generator(i)?, principal_generator(j)?);
    FGIdeal::new(&i.pair, vec![lcm_composite(&a, &b)?])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum IdealClass {
    Trivial,
    NonTrivial { order: u32 },
}

impl IdealClass {
    /// Product in a cyclic class group of order `n`, for classes recorded
    /// only by their order.
    pub fn mul_in_order_two(self, other: IdealClass) -> IdealClass {
        match (self, other) {
            (IdealClass::Trivial, c) | (c, IdealClass::Trivial) => c,
            _ => IdealClass::Trivial,
        }
    }
}

impl fmt::Display for IdealClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealClass::Trivial => write!(f, "Trivial"),
            IdealClass::NonTrivial { order } => write!(f, "NonTrivial(order {order})"),
        }
    }
}

/// The class of `I` in `C(R) ≅ C(K)`, i.e. the class of `J`.
pub fn ideal_class(ideal: &FGIdeal) -> Result<IdealClass> {
    let pair = &ideal.pair;
    if !licenses_prufer(pair) {
        return Err(Error::NotPruferConfiguration(pair.to_string()));
    }
    let nf = normalize_ideal(ideal)?;
    match pair.k_flags.class_group {
        ClassGroup::Trivial => Ok(IdealClass::Trivial),
        ClassGroup::Unknown => Err(Error::UnknownClassGroup(pair.k_tag.to_string())),
        ClassGroup::CyclicOfOrder(n) => {
            if nf.j().principal_generator()?.is_some() {
                Ok(IdealClass::Trivial)
            } else if n == 2 {
                Ok(IdealClass::NonTrivial { order: 2 })
            } else {
                Err(Error::UnknownClassGroup(format!("order of a class in {}", pair.k_tag)))
            }
        }
    }
}

/// An equal ideal with at most `n` generators, `n` being the generator
/// bound of K from the fact table.
pub fn reduce_generators(ideal: &FGIdeal) -> Result<FGIdeal> {
    let pair = &ideal.pair;
    let n = pair.k_flags.n_generator.unwrap_or(0);
    if n == 0 || !decide_n_generator(pair, n)?.truth() {
        return Err(Error::NotNGeneratorConfiguration { ring: pair.to_string(), n });
    }
    let nf = normalize_ideal(ideal)?;
    let j = nf.j();
    if let Some(gamma) = j.principal_generator()? {
        return FGIdeal::new(pair, vec![times_l(&nf.b, &gamma)?.normalize_unit()]);
    }
    let (scale, a, c, e) = j.integral_hermite().ok_or_else(|| {
        Error::InvariantViolation(format!("non-principal J over {}", pair.k_tag))
    })?;
    let d = pair.l_field.radicand();
    let s_inv = Rational::from_big(BigInt::from(1), scale);
    let j1 = QuadElement::rational(&Rational::from_bigint(a) * &s_inv);
    let j2 = QuadElement::new(Rational::from_bigint(c), Rational::from_bigint(e), d).scale(&s_inv);
    FGIdeal::new(pair, vec![times_l(&nf.b, &j1)?, times_l(&nf.b, &j2)?])
}

/// `b·γ` for `γ ∈ J`; lies in I, hence in R.
fn times_l(b: &CompositeElement, gamma: &QuadElement) -> Result<CompositeElement> {
    CompositeElement::new(b.pair(), b.poly().scale(gamma))
        .map_err(|e| Error::InvariantViolation(format!("b·j left R: {e}")))
}

/// Two-way containment between an ideal and its normal form: every
/// generator lies in `b·J·R`, and `b`, `b·λ_s` lie in the ideal.
pub fn verify_normal_form(ideal: &FGIdeal, nf: &IdealNormalForm) -> Result<bool> {
    for g in &ideal.gens {
        let Some(q) = g.poly().exact_div(nf.b.poly()) else { return Ok(false) };
        if !nf.j().contains(&q.constant_term())? {
            return Ok(false);
        }
    }
    let mut probes = vec![nf.b.clone()];
    for l in &nf.lambdas {
        probes.push(times_l(&nf.b, l)?);
    }
    for p in probes {
        if !membership_nf(&p, ideal, nf)?.is_member() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether two ideals have the same elements, by membership both ways.
pub fn ideals_equal(i: &FGIdeal, j: &FGIdeal) -> Result<bool> {
    for g in &i.gens {
        if !membership(g, j)?.is_member() {
            return Ok(false);
        }
    }
    for g in &j.gens {
        if !membership(g, i)?.is_member() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composite::testutil::*;
    use crate::gcdengine::gcd_fold;
    use crate::ringdesc::LField;
    use proptest::prelude::*;

    fn qd(a: i64, b: i64, d: i64) -> QuadElement {
        QuadElement::new(Rational::from_int(a), Rational::from_int(b), d)
    }

    fn z5() -> Arc<CompositePair> {
        pair(KTag::QuadRing(-5), LField::Quadratic(-5))
    }

    fn ideal(p: &Arc<CompositePair>, gs: &[&[(i64, i64)]]) -> FGIdeal {
        FGIdeal::new(p, gs.iter().map(|g| el(p, g)).collect()).unwrap()
    }

    fn quad_ideal(p: &Arc<CompositePair>, gs: &[(i64, i64)], shift: usize) -> FGIdeal {
        let d = p.l_field.radicand();
        FGIdeal::new(
            p,
            gs.iter()
                .map(|&(a, b)| CompositeElement::new(p, Poly::monomial(qd(a, b, d), shift)).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn construction() {
        let r = zq();
        assert_eq!(FGIdeal::new(&r, vec![CompositeElement::zero(&r)]).unwrap_err(), Error::EmptyIdeal);
        let i = FGIdeal::new(&r, vec![CompositeElement::zero(&r), CompositeElement::x(&r)]).unwrap();
        assert_eq!(i.gens().len(), 1);
        assert_eq!(i.to_string(), "ideal(X)");
    }

    #[test]
    fn normal_form_examples() {
        let r = zq();
        let i = ideal(&r, &[&[(0, 1), (2, 1)], &[(0, 1), (3, 1)]]);
        let nf = normalize_ideal(&i).unwrap();
        assert_eq!(nf.b, CompositeElement::x(&r));
        assert_eq!(nf.b_witness, vec![el(&r, &[(-1, 1)]), el(&r, &[(1, 1)])]);
        assert_eq!(nf.lambdas, vec![q(2, 1), q(3, 1)]);
        assert!(verify_normal_form(&i, &nf).unwrap());

        let i = ideal(&r, &[&[(2, 1)], &[(0, 1), (1, 1)]]);
        let nf = normalize_ideal(&i).unwrap();
        assert_eq!(nf.b, el(&r, &[(2, 1)]));
        assert_eq!(nf.lambdas, vec![q(1, 1), q(0, 1)]);
        assert!(verify_normal_form(&i, &nf).unwrap());

        let p = z5();
        let i = quad_ideal(&p, &[(2, 0), (1, 1)], 0);
        let nf = normalize_ideal(&i).unwrap();
        assert_eq!(nf.b, el(&p, &[(2, 1)]));
        assert_eq!(nf.lambdas, vec![q(1, 1), QuadElement::new(Rational::new(1, 2), Rational::new(1, 2), -5)]);
        assert!(verify_normal_form(&i, &nf).unwrap());

        let gi = pair(KTag::Rationals, LField::Quadratic(-1));
        let i = ideal(&gi, &[&[(0, 1), (1, 1)]]);
        assert_eq!(normalize_ideal(&i).unwrap_err(), Error::NotQuotientField);
    }

    #[test]
    fn membership_examples() {
        let r = zq();
        let i = ideal(&r, &[&[(0, 1), (2, 1)], &[(0, 1), (3, 1)]]);
        assert_eq!(
            membership(&CompositeElement::x(&r), &i).unwrap(),
            Membership::Member(vec![el(&r, &[(-1, 1)]), el(&r, &[(1, 1)])])
        );
        let i2 = ideal(&r, &[&[(2, 1)], &[(0, 1), (1, 1)]]);
        assert_eq!(membership(&el(&r, &[(3, 1)]), &i2).unwrap(), Membership::NotMember);
        assert!(membership(&CompositeElement::zero(&r), &i2).unwrap().is_member());
        assert!(membership(&el(&r, &[(4, 1), (1, 3)]), &i2).unwrap().is_member());
    }

    #[test]
    fn bounded_membership_over_field_k() {
        let gi = pair(KTag::Rationals, LField::Quadratic(-1));
        let ix = CompositeElement::new(&gi, Poly::monomial(QuadElement::sqrt(-1), 1)).unwrap();
        let x = CompositeElement::x(&gi);
        let i = FGIdeal::new(&gi, vec![x.clone()]).unwrap();
        assert_eq!(membership(&ix, &i).unwrap(), Membership::NotMemberWithinBound(2));
        assert!(membership(&x.mul(&x).unwrap(), &i).unwrap().is_member());
        let ix2 = ix.mul(&x).unwrap();
        assert!(membership(&ix2, &i).unwrap().is_member());
        let j = FGIdeal::new(&gi, vec![x.clone(), ix.clone()]).unwrap();
        assert!(membership(&ix, &j).unwrap().is_member());
        assert!(!membership(&CompositeElement::one(&gi), &j).unwrap().is_member());
    }

    #[test]
    fn sum_and_product() {
        let r = zq();
        let two = ideal(&r, &[&[(2, 1)]]);
        let x = ideal(&r, &[&[(0, 1), (1, 1)]]);
        assert_eq!(ideal_sum(&two, &x).unwrap(), ideal(&r, &[&[(2, 1)], &[(0, 1), (1, 1)]]));
        assert_eq!(ideal_product(&two, &x).unwrap(), ideal(&r, &[&[(0, 1), (2, 1)]]));
        let m = ideal_sum(&two, &x).unwrap();
        assert_eq!(
            ideal_product(&m, &m).unwrap().gens().to_vec(),
            vec![el(&r, &[(4, 1)]), el(&r, &[(0, 1), (2, 1)]), el(&r, &[(0, 1), (2, 1)]), el(&r, &[(0, 1), (0, 1), (1, 1)])]
        );
    }

    #[test]
    fn intersect_examples() {
        let r = zq();
        let i = ideal(&r, &[&[(0, 1), (2, 1)]]);
        let j = ideal(&r, &[&[(0, 1), (3, 1)]]);
        assert_eq!(ideal_intersect(&i, &j).unwrap(), ideal(&r, &[&[(0, 1), (6, 1)]]));
        let two = ideal(&r, &[&[(2, 1)]]);
        let x = ideal(&r, &[&[(0, 1), (1, 1)]]);
        assert_eq!(ideal_intersect(&two, &x).unwrap(), x);
        let k = ideal(&r, &[&[(4, 1)], &[(6, 1), (1, 1)]]);
        assert_eq!(ideal_intersect(&k, &k).unwrap(), ideal(&r, &[&[(2, 1)]]));
        let p = z5();
        let a = quad_ideal(&p, &[(2, 0)], 0);
        assert_eq!(ideal_intersect(&a, &a).unwrap_err().name(), "NotBezoutConfiguration");
    }

    #[test]
    fn class_examples() {
        let r = zq();
        assert_eq!(ideal_class(&ideal(&r, &[&[(4, 1)], &[(0, 1), (1, 3)]])).unwrap(), IdealClass::Trivial);
        let p = z5();
        let j0 = quad_ideal(&p, &[(2, 0), (1, 1)], 0);
        assert_eq!(ideal_class(&j0).unwrap(), IdealClass::NonTrivial { order: 2 });
        let sq = ideal_product(&j0, &j0).unwrap();
        assert_eq!(ideal_class(&sq).unwrap(), IdealClass::Trivial);
        let ext = quad_ideal(&p, &[(2, 0), (1, 1)], 1);
        assert_eq!(ideal_class(&ext).unwrap(), IdealClass::NonTrivial { order: 2 });
        assert_eq!(ideal_class(&quad_ideal(&p, &[(1, 1)], 2)).unwrap(), IdealClass::Trivial);
        let gi = pair(KTag::Rationals, LField::Quadratic(-1));
        assert_eq!(ideal_class(&ideal(&gi, &[&[(1, 1)]])).unwrap_err().name(), "NotPruferConfiguration");
    }

    #[test]
    fn square_of_nonprincipal_is_generated_by_two() {
        let p = z5();
        let j0 = quad_ideal(&p, &[(2, 0), (1, 1)], 0);
        let sq = ideal_product(&j0, &j0).unwrap();
        let red = reduce_generators(&sq).unwrap();
        assert_eq!(red.gens(), &[el(&p, &[(2, 1)])]);
    }

    #[test]
    fn reduce_examples() {
        let r = zq();
        let i = ideal(&r, &[&[(0, 1), (2, 1)], &[(0, 1), (3, 1)], &[(0, 1), (0, 1), (5, 1)]]);
        assert_eq!(reduce_generators(&i).unwrap(), ideal(&r, &[&[(0, 1), (1, 1)]]));
        assert_eq!(reduce_generators(&ideal(&r, &[&[(4, 1)], &[(6, 1)]])).unwrap(), ideal(&r, &[&[(2, 1)]]));
        let p = z5();
        let i = quad_ideal(&p, &[(2, 0), (1, 1), (3, 1)], 1);
        let red = reduce_generators(&i).unwrap();
        assert_eq!(red, quad_ideal(&p, &[(2, 0), (1, 1)], 1));
        let probe = CompositeElement::new(&p, Poly::monomial(qd(3, 1, -5), 1)).unwrap();
        assert!(membership(&probe, &red).unwrap().is_member());
        assert!(ideals_equal(&i, &red).unwrap());
    }

    #[test]
    fn norm_search_finds_generators() {
        let k = KFractionalIdeal { k_tag: KTag::QuadRing(-5), gens: vec![qd(2, 0, -5), qd(1, 1, -5)] };
        assert_eq!(k.principal_generator().unwrap(), None);
        let k = KFractionalIdeal { k_tag: KTag::QuadRing(-5), gens: vec![qd(6, 0, -5), qd(2, 2, -5)] };
        assert!(k.principal_generator().unwrap().is_none());
        let k = KFractionalIdeal { k_tag: KTag::QuadRing(-5), gens: vec![qd(3, 3, -5), qd(6, 0, -5)] };
        // (3)·(2, 1+√-5)... scaled by 3/2: principal iff J0 principal
        assert!(k.principal_generator().unwrap().is_none());
        let k = KFractionalIdeal {
            k_tag: KTag::QuadRing(-5),
            gens: vec![qd(1, 1, -5), QuadElement::new(Rational::new(1, 3), Rational::new(1, 3), -5)],
        };
        let g = k.principal_generator().unwrap().unwrap();
        assert_eq!(g.norm(), Rational::new(6, 9));
    }

    fn arb_ideal(p: Arc<CompositePair>) -> impl Strategy<Value = FGIdeal> {
        proptest::collection::vec(arb_rational_element(p.clone(), 5, 12), 1..=5).prop_filter_map(
            "nonzero ideal",
            move |gs| FGIdeal::new(&p, gs).ok(),
        )
    }

    fn rational_pairs() -> impl Strategy<Value = Arc<CompositePair>> {
        prop_oneof![Just(zq()), Just(pair(KTag::LocalizedIntegers(2), LField::Rationals))]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn normal_form_soundness(i in rational_pairs().prop_flat_map(arb_ideal)) {
            let nf = normalize_ideal(&i).unwrap();
            prop_assert!(verify_normal_form(&i, &nf).unwrap());
            for g in i.gens() {
                prop_assert!(membership(g, &i).unwrap().is_member());
            }
        }

        #[test]
        fn bezout_collapse(i in arb_ideal(zq())) {
            let red = reduce_generators(&i).unwrap();
            prop_assert_eq!(red.gens().len(), 1);
            let folded = gcd_fold(i.pair(), i.gens()).unwrap();
            prop_assert!(red.gens()[0].associates(&folded));
        }

        #[test]
        fn membership_of_combinations(i in arb_ideal(zq()), cs in proptest::collection::vec(arb_rational_element(zq(), 2, 6), 5)) {
            let mut x = CompositeElement::zero(i.pair());
            for (c, g) in cs.iter().zip(i.gens()) {
                x = x.add(&c.mul(g).unwrap()).unwrap();
            }
            prop_assert!(membership(&x, &i).unwrap().is_member());
        }

        #[test]
        fn class_is_multiplicative(
            a in proptest::collection::vec((-6i64..6, -6i64..6), 1..3),
            b in proptest::collection::vec((-6i64..6, -6i64..6), 1..3),
            ta in any::<bool>(), tb in any::<bool>(),
        ) {
            let p = z5();
            let build = |gs: &[(i64, i64)], twist: bool| -> Option<FGIdeal> {
                let mut gens: Vec<(i64, i64)> = gs.to_vec();
                if twist {
                    gens = gens.iter().flat_map(|&(x, y)| [(2 * x, 2 * y), (x - 5 * y, x + y)]).collect();
                }
                let els = gens.iter().map(|&(x, y)| CompositeElement::new(&p, Poly::monomial(qd(x, y, -5), 1)).unwrap()).collect();
                FGIdeal::new(&p, els).ok()
            };
            let (Some(i), Some(j)) = (build(&a, ta), build(&b, tb)) else { return Ok(()) };
            let prod = ideal_product(&i, &j).unwrap();
            prop_assert_eq!(
                ideal_class(&prod).unwrap(),
                ideal_class(&i).unwrap().mul_in_order_two(ideal_class(&j).unwrap())
            );
        }

        #[test]
        fn intersection_contains_common_multiples(a in arb_rational_element(zq(), 3, 10), b in arb_rational_element(zq(), 3, 10), c in arb_rational_element(zq(), 2, 5)) {
            prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
            let r = zq();
            let (ia, ib) = (FGIdeal::new(&r, vec![a.clone()]).unwrap(), FGIdeal::new(&r, vec![b.clone()]).unwrap());
            let meet = ideal_intersect(&ia, &ib).unwrap();
            let l = &meet.gens()[0];
            prop_assert!(membership(l, &ia).unwrap().is_member() && membership(l, &ib).unwrap().is_member());
            let common = a.mul(&b).unwrap().mul(&c).unwrap();
            prop_assert!(membership(&common, &meet).unwrap().is_member());
        }
    }
}
