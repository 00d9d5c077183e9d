//! Descriptors of the pieces K, L, T = L[X], M = X·L[X] and the fact table
//! for the supported instantiations.

use std::fmt;

use serde::Serialize;

use crate::exactnum::intmath::{is_prime_u64, is_squarefree};
use crate::exactnum::KTag;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ClassGroup {
    Trivial,
    CyclicOfOrder(u32),
    Unknown,
}

/// Structural facts about one domain. `None` means the fact is not known.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingFlags {
    pub is_field: Option<bool>,
    pub is_noetherian: Option<bool>,
    pub is_coherent: Option<bool>,
    pub is_prufer: Option<bool>,
    pub is_bezout: Option<bool>,
    pub is_gcd: Option<bool>,
    pub is_dedekind: Option<bool>,
    pub n_generator: Option<u32>,
    pub krull_dim: Option<u32>,
    pub class_group: ClassGroup,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingDescError {
    #[error("unsupported instantiation K = {k}, L = {l}")]
    UnsupportedPair { k: String, l: String },
    #[error("K and L coincide ({0})")]
    KEqualsL(String),
    #[error("inconsistent flags: {0}")]
    InconsistentFlags(String),
}

impl RingDescError {
    pub fn name(&self) -> &'static str {
        match self {
            RingDescError::UnsupportedPair { .. } => "UnsupportedPair",
            RingDescError::KEqualsL(_) => "KEqualsL",
            RingDescError::InconsistentFlags(_) => "InconsistentFlags",
        }
    }
}

impl RingFlags {
    pub fn field() -> Self {
        RingFlags {
            is_field: Some(true),
            is_noetherian: Some(true),
            is_coherent: Some(true),
            is_prufer: Some(true),
            is_bezout: Some(true),
            is_gcd: Some(true),
            is_dedekind: Some(true),
            n_generator: Some(1),
            krull_dim: Some(0),
            class_group: ClassGroup::Trivial,
        }
    }

    /// A one-dimensional principal ideal domain.
    pub fn pid() -> Self {
        RingFlags { is_field: Some(false), krull_dim: Some(1), ..Self::field() }
    }

    /// A one-dimensional Dedekind domain with the given class group.
    pub fn dedekind(class_group: ClassGroup) -> Self {
        RingFlags {
            is_field: Some(false),
            is_bezout: Some(false),
            is_gcd: Some(false),
            n_generator: Some(2),
            krull_dim: Some(1),
            class_group,
            ..Self::field()
        }
    }

    pub fn unknown() -> Self {
        RingFlags {
            is_field: None,
            is_noetherian: None,
            is_coherent: None,
            is_prufer: None,
            is_bezout: None,
            is_gcd: None,
            is_dedekind: None,
            n_generator: None,
            krull_dim: None,
            class_group: ClassGroup::Unknown,
        }
    }

    /// Checks the implications between the flags that are known.
    pub fn check_consistency(&self) -> Result<(), RingDescError> {
        let bad = |m: &str| Err(RingDescError::InconsistentFlags(m.to_string()));
        let t = |f: Option<bool>| f == Some(true);
        let f = |f: Option<bool>| f == Some(false);
        if t(self.is_field) {
            let props = [
                self.is_noetherian,
                self.is_coherent,
                self.is_prufer,
                self.is_bezout,
                self.is_gcd,
                self.is_dedekind,
            ];
            if props.iter().any(|p| f(*p)) {
                return bad("a field has every property");
            }
            if matches!(self.krull_dim, Some(d) if d != 0) {
                return bad("a field has dimension 0");
            }
            if matches!(self.class_group, ClassGroup::CyclicOfOrder(n) if n > 1) {
                return bad("a field has trivial class group");
            }
        }
        if t(self.is_bezout) && (f(self.is_prufer) || f(self.is_gcd)) {
            return bad("Bezout implies Prufer and GCD");
        }
        if t(self.is_dedekind) {
            if f(self.is_noetherian) || f(self.is_prufer) {
                return bad("Dedekind implies Noetherian and Prufer");
            }
            if matches!(self.n_generator, Some(n) if n > 2) {
                return bad("Dedekind domains have the 2-generator property");
            }
        }
        if (t(self.is_noetherian) || t(self.is_prufer)) && f(self.is_coherent) {
            return bad("Noetherian and Prufer domains are coherent");
        }
        if t(self.is_bezout) && matches!(self.class_group, ClassGroup::CyclicOfOrder(n) if n > 1) {
            return bad("Bezout domains have trivial class group");
        }
        if t(self.is_prufer) && self.class_group == ClassGroup::Trivial && f(self.is_bezout) {
            return bad("a Prufer domain with trivial class group is Bezout");
        }
        Ok(())
    }
}

/// The field L.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LField {
    Rationals,
    Quadratic(i64),
}

impl LField {
    pub fn radicand(&self) -> i64 {
        match self {
            LField::Rationals => 0,
            LField::Quadratic(d) => *d,
        }
    }
}

impl fmt::Display for LField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LField::Rationals => write!(f, "Q"),
            LField::Quadratic(d) => write!(f, "Q(sqrt({d}))"),
        }
    }
}

/// Degree of L over K as a K-module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Degree {
    Finite(u32),
    Infinite,
}

/// `R = K + X·L[X]` with `T = L[X]` and `M = X·L[X]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompositePair {
    pub k_tag: KTag,
    pub k_flags: RingFlags,
    pub l_field: LField,
    pub l_is_quotient_field_of_k: bool,
    pub degree_l_over_k: Degree,
}

impl fmt::Display for CompositePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + X*{}[X]", self.k_tag, self.l_field)
    }
}

/// How L sits over K in a general `K + M` construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LRelation {
    QuotientField,
    FiniteExtension(u32),
    Other,
}

/// `R = K + M` inside an arbitrary `T = L + M`, known only through flags.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralComposite {
    pub k_flags: RingFlags,
    pub l_relation: LRelation,
    pub t_flags: RingFlags,
    pub m_finitely_generated: Option<bool>,
    pub t_m_is_valuation: Option<bool>,
    pub height_m: Option<u32>,
}

impl GeneralComposite {
    pub fn check_consistency(&self) -> Result<(), RingDescError> {
        self.k_flags.check_consistency()?;
        self.t_flags.check_consistency()?;
        if self.l_relation == LRelation::QuotientField && self.k_flags.is_field == Some(true) {
            return Err(RingDescError::KEqualsL("a field is its own quotient field".into()));
        }
        Ok(())
    }
}

/// Radicands for which ℤ[√d] is in the fact table.
pub const SUPPORTED_QUAD_RINGS: [i64; 4] = [-1, -2, -5, -6];

/// Fact-table entry for K.
pub fn k_flags(k: KTag) -> Result<RingFlags, RingDescError> {
    let unsupported = || RingDescError::UnsupportedPair { k: k.to_string(), l: String::from("-") };
    match k {
        KTag::Integers => Ok(RingFlags::pid()),
        KTag::LocalizedIntegers(p) if is_prime_u64(p) => Ok(RingFlags::pid()),
        KTag::LocalizedIntegers(_) => Err(unsupported()),
        KTag::Rationals | KTag::QuadField(_) => Ok(RingFlags::field()),
        KTag::QuadRing(-1) | KTag::QuadRing(-2) => Ok(RingFlags::pid()),
        // class number 2 for both; confirmed by the norm-search tests
        KTag::QuadRing(-5) | KTag::QuadRing(-6) => Ok(RingFlags::dedekind(ClassGroup::CyclicOfOrder(2))),
        KTag::QuadRing(_) => Err(unsupported()),
    }
}

/// Flags of `T = L[X]` for any field L.
pub fn polynomial_ring_flags() -> RingFlags {
    RingFlags::pid()
}

/// Builds the descriptor of `K + X·L[X]` for a supported `(K, L)`:
/// (ℤ, ℚ), (ℤ_(p), ℚ), (ℚ, ℚ(√d)), (ℤ[√d], ℚ(√d)).
pub fn builtin_pair(k: KTag, l: LField) -> Result<CompositePair, RingDescError> {
    let unsupported = || RingDescError::UnsupportedPair { k: k.to_string(), l: l.to_string() };
    if let LField::Quadratic(d) = l {
        if d == 1 || !is_squarefree(d) {
            return Err(unsupported());
        }
    }
    let (qf, degree) = match (k, l) {
        (KTag::Rationals, LField::Rationals) => return Err(RingDescError::KEqualsL(k.to_string())),
        (KTag::QuadField(d), LField::Quadratic(e)) if d == e => {
            return Err(RingDescError::KEqualsL(k.to_string()))
        }
        (KTag::Integers, LField::Rationals) | (KTag::LocalizedIntegers(_), LField::Rationals) => {
            (true, Degree::Infinite)
        }
        (KTag::Rationals, LField::Quadratic(_)) => (false, Degree::Finite(2)),
        (KTag::QuadRing(d), LField::Quadratic(e)) if d == e && d < 0 => (true, Degree::Infinite),
        _ => return Err(unsupported()),
    };
    let k_flags = k_flags(k).map_err(|_| unsupported())?;
    Ok(CompositePair { k_tag: k, k_flags, l_field: l, l_is_quotient_field_of_k: qf, degree_l_over_k: degree })
}

/// The general descriptor with the `T = L[X]` facts filled in.
pub fn general_from_pair(p: &CompositePair) -> GeneralComposite {
    let l_relation = if p.l_is_quotient_field_of_k {
        LRelation::QuotientField
    } else {
        match p.degree_l_over_k {
            Degree::Finite(n) => LRelation::FiniteExtension(n),
            Degree::Infinite => LRelation::Other,
        }
    };
    GeneralComposite {
        k_flags: p.k_flags.clone(),
        l_relation,
        t_flags: polynomial_ring_flags(),
        m_finitely_generated: Some(true),
        t_m_is_valuation: Some(true),
        height_m: Some(1),
    }
}

/// Every supported pair with small parameters, for exhaustive checks.
pub fn all_builtin_pairs() -> Vec<CompositePair> {
    let mut out = vec![
        builtin_pair(KTag::Integers, LField::Rationals).unwrap(),
        builtin_pair(KTag::LocalizedIntegers(2), LField::Rationals).unwrap(),
        builtin_pair(KTag::LocalizedIntegers(3), LField::Rationals).unwrap(),
    ];
    for d in SUPPORTED_QUAD_RINGS {
        out.push(builtin_pair(KTag::Rationals, LField::Quadratic(d)).unwrap());
        out.push(builtin_pair(KTag::QuadRing(d), LField::Quadratic(d)).unwrap());
    }
    out
}
