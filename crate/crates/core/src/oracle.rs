//! Deciders for ring-theoretic properties of `K + M` constructions, read off
//! the descriptor flags. Every verdict carries the criterion it applied and
//! the premise values it used.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Mutex;

use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ringdesc::{general_from_pair, ClassGroup, CompositePair, Degree, GeneralComposite, LRelation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    Coherent,
    Noetherian,
    Prufer,
    Bezout,
    Gcd,
    NGenerator(u32),
    FiniteConductorBranch,
}

impl Property {
    pub const FIVE: [Property; 5] =
        [Property::Coherent, Property::Noetherian, Property::Prufer, Property::Bezout, Property::Gcd];
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Coherent => write!(f, "Coherent"),
            Property::Noetherian => write!(f, "Noetherian"),
            Property::Prufer => write!(f, "Prufer"),
            Property::Bezout => write!(f, "Bezout"),
            Property::Gcd => write!(f, "GCD"),
            Property::NGenerator(n) => write!(f, "NGenerator({n})"),
            Property::FiniteConductorBranch => write!(f, "FiniteConductorBranch"),
        }
    }
}

impl Serialize for Property {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// K a field, `[L:K]` finite, M finitely generated.
    A,
    /// L the quotient field of K, `T_M` a valuation domain.
    B,
    NotFiniteConductor,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::A => "a",
            Branch::B => "b",
            Branch::NotFiniteConductor => "NotFiniteConductor",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Holds {
    Bool(bool),
    Branch(Branch),
}

impl Serialize for Holds {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Holds::Bool(b) => s.serialize_bool(*b),
            Holds::Branch(b) => s.collect_str(b),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceStep {
    pub cite: String,
    pub quote: String,
    pub premises: BTreeMap<String, Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub property: Property,
    pub holds: Holds,
    pub trace: Vec<TraceStep>,
}

impl Verdict {
    /// The boolean answer; a dichotomy verdict counts as true when some
    /// branch applies.
    pub fn truth(&self) -> bool {
        match self.holds {
            Holds::Bool(b) => b,
            Holds::Branch(b) => b != Branch::NotFiniteConductor,
        }
    }
}

struct Premises(BTreeMap<String, Value>);

impl Premises {
    fn new() -> Self {
        Premises(BTreeMap::new())
    }

    fn flag(&mut self, name: &str, v: Option<bool>) -> Result<bool> {
        let b = v.ok_or_else(|| Error::InsufficientData(name.to_string()))?;
        self.0.insert(name.to_string(), json!(b));
        Ok(b)
    }

    fn set(&mut self, name: &str, v: Value) {
        self.0.insert(name.to_string(), v);
    }

    fn step(self, cite: &str, quote: &str) -> TraceStep {
        TraceStep { cite: cite.to_string(), quote: quote.to_string(), premises: self.0 }
    }
}

fn degree_value(d: Degree) -> Value {
    match d {
        Degree::Finite(n) => json!(n),
        Degree::Infinite => json!("infinite"),
    }
}

fn relation_value(r: LRelation) -> Value {
    match r {
        LRelation::QuotientField => json!("quotient field"),
        LRelation::FiniteExtension(n) => json!(format!("finite extension of degree {n}")),
        LRelation::Other => json!("other"),
    }
}

const Q_COHERENT_POLY: &str =
    "K+XL[X] coherent iff exactly one of: (K field and [L:K] < inf) or (L = qf(K) and K coherent)";
const Q_NOETHERIAN_POLY: &str = "K+XL[X] Noetherian iff [L:K] < inf";
const Q_PRUFER_POLY: &str = "K+XL[X] Prufer iff L[X] Prufer, L = qf(K) and K Prufer";
const Q_BEZOUT_POLY: &str = "K+XL[X] Bezout iff L = qf(K) and K Bezout";
const Q_GCD_POLY: &str = "K+XL[X] GCD iff L = qf(K) and K GCD";
const Q_NGEN_POLY: &str = "K+XL[X] n-generator Prufer iff L[X] and K n-generator Prufer";

const Q_COHERENT: &str = "K+M coherent iff T coherent and exactly one of: \
     (M f.g. in T, K field, [L:K] < inf) or (L = qf(K), K coherent, T_M valuation)";
const Q_NOETHERIAN: &str = "K+M Noetherian iff T Noetherian, K field and [L:K] < inf";
const Q_PRUFER: &str = "K+M Prufer iff T Prufer, L = qf(K) and K Prufer";
const Q_BEZOUT: &str = "K+M Bezout iff T Bezout, L = qf(K) and K Bezout";
const Q_GCD: &str = "K+M GCD iff T GCD, L = qf(K), K GCD and T_M valuation";
const Q_NGEN: &str = "K+M n-generator Prufer iff T and K n-generator Prufer";
const Q_FINITE_CONDUCTOR: &str = "coherent or GCD implies finite conductor";
const Q_DICHOTOMY: &str = "finite conductor K+M satisfies exactly one of: \
     (a) K field, [L:K] < inf, M f.g. in T; (b) L = qf(K), T_M valuation";
const Q_CLASS_SEQUENCE: &str = "K+M Prufer gives 1 -> C(K) -> C(K+M) -> C(T) -> 1 exact";

/// Decides one of the five properties for `K + X·L[X]`.
pub fn decide_property(pair: &CompositePair, prop: Property) -> Result<Verdict> {
    let f = &pair.k_flags;
    let mut p = Premises::new();
    let qf = pair.l_is_quotient_field_of_k;
    let finite = matches!(pair.degree_l_over_k, Degree::Finite(_));
    let (holds, cite, quote) = match prop {
        Property::Coherent => {
            let k_field = p.flag("k_is_field", f.is_field)?;
            p.set("degree_l_over_k", degree_value(pair.degree_l_over_k));
            p.set("l_is_quotient_field_of_k", json!(qf));
            let k_coh = p.flag("k_is_coherent", f.is_coherent)?;
            let a = k_field && finite;
            let b = qf && k_coh;
            if a && b {
                return Err(Error::InvariantViolation("both coherence branches hold".into()));
            }
            p.set("branch", json!(if a { "a" } else if b { "b" } else { "none" }));
            (a || b, "coherent.polynomial-composite", Q_COHERENT_POLY)
        }
        Property::Noetherian => {
            p.flag("k_is_field", f.is_field)?;
            p.set("degree_l_over_k", degree_value(pair.degree_l_over_k));
            (finite, "noetherian.polynomial-composite", Q_NOETHERIAN_POLY)
        }
        Property::Prufer => {
            p.set("l_is_quotient_field_of_k", json!(qf));
            let k = p.flag("k_is_prufer", f.is_prufer)?;
            p.set("t_is_prufer", json!(true));
            (qf && k, "prufer.polynomial-composite", Q_PRUFER_POLY)
        }
        Property::Bezout => {
            p.set("l_is_quotient_field_of_k", json!(qf));
            let k = p.flag("k_is_bezout", f.is_bezout)?;
            (qf && k, "bezout.polynomial-composite", Q_BEZOUT_POLY)
        }
        Property::Gcd => {
            p.set("l_is_quotient_field_of_k", json!(qf));
            let k = p.flag("k_is_gcd", f.is_gcd)?;
            (qf && k, "gcd.polynomial-composite", Q_GCD_POLY)
        }
        Property::NGenerator(n) => return decide_n_generator(pair, n),
        Property::FiniteConductorBranch => return decide_dichotomy(pair),
    };
    Ok(Verdict { property: prop, holds: Holds::Bool(holds), trace: vec![p.step(cite, quote)] })
}

/// Decides a property for a general `K + M`, where nothing about T is
/// assumed beyond its flags.
pub fn decide_property_general(c: &GeneralComposite, prop: Property) -> Result<Verdict> {
    c.check_consistency()?;
    let (k, t) = (&c.k_flags, &c.t_flags);
    let mut p = Premises::new();
    p.set("l_relation", relation_value(c.l_relation));
    let qf = c.l_relation == LRelation::QuotientField;
    let finite = matches!(c.l_relation, LRelation::FiniteExtension(_));
    let (holds, cite, quote) = match prop {
        Property::Coherent => {
            let t_coh = p.flag("t_is_coherent", t.is_coherent)?;
            let m_fg = p.flag("m_finitely_generated", c.m_finitely_generated)?;
            let k_field = p.flag("k_is_field", k.is_field)?;
            let k_coh = p.flag("k_is_coherent", k.is_coherent)?;
            let val = p.flag("t_m_is_valuation", c.t_m_is_valuation)?;
            let a = m_fg && k_field && finite;
            let b = qf && k_coh && val;
            if a && b {
                return Err(Error::InvariantViolation("both coherence branches hold".into()));
            }
            (t_coh && (a || b), "coherent.general", Q_COHERENT)
        }
        Property::Noetherian => {
            let t_n = p.flag("t_is_noetherian", t.is_noetherian)?;
            let k_field = p.flag("k_is_field", k.is_field)?;
            (t_n && k_field && finite, "noetherian.general", Q_NOETHERIAN)
        }
        Property::Prufer => {
            let t_p = p.flag("t_is_prufer", t.is_prufer)?;
            let k_p = p.flag("k_is_prufer", k.is_prufer)?;
            (t_p && qf && k_p, "prufer.general", Q_PRUFER)
        }
        Property::Bezout => {
            let t_b = p.flag("t_is_bezout", t.is_bezout)?;
            let k_b = p.flag("k_is_bezout", k.is_bezout)?;
            (t_b && qf && k_b, "bezout.general", Q_BEZOUT)
        }
        Property::Gcd => {
            let t_g = p.flag("t_is_gcd", t.is_gcd)?;
            let k_g = p.flag("k_is_gcd", k.is_gcd)?;
            let val = p.flag("t_m_is_valuation", c.t_m_is_valuation)?;
            (t_g && qf && k_g && val, "gcd.general", Q_GCD)
        }
        Property::NGenerator(n) => {
            let prufer = decide_property_general(c, Property::Prufer)?;
            let mut trace = prufer.trace.clone();
            let holds = prufer.truth() && {
                let kn = need_count("k_n_generator", k.n_generator)?;
                let tn = need_count("t_n_generator", t.n_generator)?;
                p.set("k_n_generator", json!(kn));
                p.set("t_n_generator", json!(tn));
                kn <= n && tn <= n
            };
            p.set("n", json!(n));
            trace.push(p.step("n-generator.general", Q_NGEN));
            return Ok(Verdict { property: prop, holds: Holds::Bool(holds), trace });
        }
        Property::FiniteConductorBranch => {
            let coh = decide_property_general(c, Property::Coherent)?;
            let gcd = decide_property_general(c, Property::Gcd)?;
            let mut trace = finite_conductor_step(&coh, &gcd);
            let branch = if coh.truth() || gcd.truth() {
                let k_field = p.flag("k_is_field", k.is_field)?;
                let m_fg = p.flag("m_finitely_generated", c.m_finitely_generated)?;
                let val = p.flag("t_m_is_valuation", c.t_m_is_valuation)?;
                choose_branch(k_field && finite && m_fg, qf && val)?
            } else {
                Branch::NotFiniteConductor
            };
            trace.push(p.step("finite-conductor.dichotomy", Q_DICHOTOMY));
            return Ok(Verdict { property: prop, holds: Holds::Branch(branch), trace });
        }
    };
    Ok(Verdict { property: prop, holds: Holds::Bool(holds), trace: vec![p.step(cite, quote)] })
}

fn need_count(name: &str, v: Option<u32>) -> Result<u32> {
    v.ok_or_else(|| Error::InsufficientData(name.to_string()))
}

fn finite_conductor_step(coh: &Verdict, gcd: &Verdict) -> Vec<TraceStep> {
    let mut p = Premises::new();
    p.set("coherent", json!(coh.truth()));
    p.set("gcd", json!(gcd.truth()));
    vec![p.step("finite-conductor.sufficient", Q_FINITE_CONDUCTOR)]
}

fn choose_branch(a: bool, b: bool) -> Result<Branch> {
    match (a, b) {
        (true, true) => Err(Error::InvariantViolation("both dichotomy branches hold".into())),
        (true, false) => Ok(Branch::A),
        (false, true) => Ok(Branch::B),
        (false, false) => Err(Error::InvariantViolation("finite conductor domain fits neither branch".into())),
    }
}

/// Which branch of the finite-conductor dichotomy `K + X·L[X]` realizes.
pub fn decide_dichotomy(pair: &CompositePair) -> Result<Verdict> {
    let coh = decide_property(pair, Property::Coherent)?;
    let gcd = decide_property(pair, Property::Gcd)?;
    let mut trace = finite_conductor_step(&coh, &gcd);
    let mut p = Premises::new();
    let branch = if coh.truth() || gcd.truth() {
        let k_field = p.flag("k_is_field", pair.k_flags.is_field)?;
        p.set("degree_l_over_k", degree_value(pair.degree_l_over_k));
        p.set("l_is_quotient_field_of_k", json!(pair.l_is_quotient_field_of_k));
        let finite = matches!(pair.degree_l_over_k, Degree::Finite(_));
        choose_branch(k_field && finite, pair.l_is_quotient_field_of_k)?
    } else {
        Branch::NotFiniteConductor
    };
    trace.push(p.step("finite-conductor.dichotomy", Q_DICHOTOMY));
    Ok(Verdict { property: Property::FiniteConductorBranch, holds: Holds::Branch(branch), trace })
}

/// Whether `K + X·L[X]` is an n-generator Prüfer domain.
pub fn decide_n_generator(pair: &CompositePair, n: u32) -> Result<Verdict> {
    let prufer = decide_property(pair, Property::Prufer)?;
    let mut trace = prufer.trace.clone();
    let mut p = Premises::new();
    p.set("n", json!(n));
    let holds = prufer.truth() && {
        let kn = need_count("k_n_generator", pair.k_flags.n_generator)?;
        p.set("k_n_generator", json!(kn));
        p.set("t_n_generator", json!(1));
        kn <= n
    };
    trace.push(p.step("n-generator.polynomial-composite", Q_NGEN_POLY));
    Ok(Verdict { property: Property::NGenerator(n), holds: Holds::Bool(holds), trace })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassGroupReport {
    pub c_k: ClassGroup,
    pub c_t: ClassGroup,
    pub c_r: ClassGroup,
    pub trace: Vec<TraceStep>,
}

/// `C(R) ≅ C(K)`, read off the exact sequence with `C(L[X])` trivial.
pub fn class_group_sequence(pair: &CompositePair) -> Result<ClassGroupReport> {
    let prufer = decide_property(pair, Property::Prufer)?;
    if !prufer.truth() {
        return Err(Error::NotPruferConfiguration(pair.to_string()));
    }
    let c_k = pair.k_flags.class_group;
    if c_k == ClassGroup::Unknown {
        return Err(Error::UnknownClassGroup(pair.k_tag.to_string()));
    }
    let mut trace = prufer.trace;
    let mut p = Premises::new();
    p.set("c_k", json!(c_k));
    p.set("c_t", json!(ClassGroup::Trivial));
    trace.push(p.step("class-group.exact-sequence", Q_CLASS_SEQUENCE));
    Ok(ClassGroupReport { c_k, c_t: ClassGroup::Trivial, c_r: c_k, trace })
}

/// Truth of a verdict, memoized per pair since the gates sit on hot paths.
/// Few distinct pairs occur in one process, so a linear scan beats hashing.
fn licensed(pair: &CompositePair, prop: Property) -> bool {
    static CACHE: Mutex<Vec<(CompositePair, Property, bool)>> = Mutex::new(Vec::new());
    let hit = |c: &Vec<(CompositePair, Property, bool)>| {
        c.iter().find(|(q, p, _)| *p == prop && q == pair).map(|e| e.2)
    };
    if let Some(b) = hit(&CACHE.lock().expect("cache lock")) {
        return b;
    }
    let b = decide_property(pair, prop).is_ok_and(|v| v.truth());
    let mut c = CACHE.lock().expect("cache lock");
    if hit(&c).is_none() {
        c.push((pair.clone(), prop, b));
    }
    b
}

/// The pair is a GCD domain, so gcds of elements exist.
pub fn licenses_gcd(pair: &CompositePair) -> bool {
    licensed(pair, Property::Gcd)
}

pub fn licenses_bezout(pair: &CompositePair) -> bool {
    licensed(pair, Property::Bezout)
}

pub fn licenses_prufer(pair: &CompositePair) -> bool {
    licensed(pair, Property::Prufer)
}

/// Pair verdict recomputed through the general criteria with the `L[X]`
/// facts supplied.
pub fn decide_via_general(pair: &CompositePair, prop: Property) -> Result<Verdict> {
    decide_property_general(&general_from_pair(pair), prop)
}
