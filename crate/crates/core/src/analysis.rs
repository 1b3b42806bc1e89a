//! Classification against the published summary and capability testing.
//!
//! Matching is by [`Fingerprint`], a tuple of isomorphism invariants. Equal
//! fingerprints are evidence, never a proof of isomorphism.

use std::fmt;

use crate::catalog::{catalog_default, tabulated_entries};
use crate::error::{Error, Result};
use crate::homology::{induced_multiplier_map, schur_multiplier, InducedMap, MultiplierResult};
use crate::invariants::s_from_dim;
use crate::linalg::Scalar;
use crate::superalg::{GradedSubspace, LieSuperalgebra, Parity, VectorParity};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub dims: (usize, usize),
    pub derived_dims: (usize, usize),
    pub class: Option<usize>,
    pub center_dims: (usize, usize),
    pub multiplier_dims: (usize, usize),
    pub trivial_ls: bool,
}

impl Fingerprint {
    pub fn of(algebra: &LieSuperalgebra) -> Result<Self> {
        Ok(Self::with_multiplier(algebra, &schur_multiplier(algebra)?))
    }

    pub fn with_multiplier(algebra: &LieSuperalgebra, mult: &MultiplierResult) -> Self {
        Fingerprint {
            dims: algebra.dims(),
            derived_dims: algebra.derived_subalgebra().dims(),
            class: algebra.lower_central_series().class(),
            center_dims: algebra.center().dims(),
            multiplier_dims: mult.dims(),
            trivial_ls: algebra.is_trivial_ls(),
        }
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let class = self.class.map_or("-".to_string(), |c| c.to_string());
        write!(
            f,
            "dims ({}|{}), L² ({}|{}), class {}, Z(L) ({}|{}), M(L) A({}|{}), {}",
            self.dims.0,
            self.dims.1,
            self.derived_dims.0,
            self.derived_dims.1,
            class,
            self.center_dims.0,
            self.center_dims.1,
            self.multiplier_dims.0,
            self.multiplier_dims.1,
            if self.trivial_ls {
                "trivial"
            } else {
                "non-trivial"
            }
        )
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub s: i64,
    /// Entries the published summary lists under this `s`.
    pub bucket: Vec<&'static str>,
    /// Tabulated entries whose computed fingerprint equals the input's.
    pub fingerprint_matches: Vec<&'static str>,
    pub notes: Vec<String>,
}

/// Places a maximal-class algebra by its computed `s(L)`.
pub fn classify_maximal_class(algebra: &LieSuperalgebra) -> Result<Classification> {
    if !algebra.validate().is_valid() {
        return Err(Error::Precondition("algebra fails the axioms".into()));
    }
    if algebra.is_abelian() {
        return Err(Error::Precondition("non-abelian required".into()));
    }
    if !algebra.is_nilpotent() {
        return Err(Error::Precondition("nilpotent required".into()));
    }
    let (m, n) = algebra.dims();
    if !(3..=5).contains(&(m + n)) {
        return Err(Error::Precondition(format!(
            "3 <= m+n <= 5 required, got m+n = {}",
            m + n
        )));
    }
    if !algebra.is_maximal_class() {
        return Err(Error::Precondition(
            "maximal class (dim L² = m+n-2) required".into(),
        ));
    }
    let mult = schur_multiplier(algebra)?;
    let s = s_from_dim(m, n, mult.total());
    let fp = Fingerprint::with_multiplier(algebra, &mult);

    let entries = tabulated_entries();
    let bucket: Vec<&'static str> = entries
        .iter()
        .filter(|e| e.claim.is_some_and(|c| c.s_bucket == s))
        .map(|e| e.key)
        .collect();
    let mut fingerprint_matches = Vec::new();
    let mut notes =
        vec!["matching is by fingerprint only; isomorphism is not established".to_string()];
    for e in &entries {
        let Some(model) = catalog_default(e) else {
            continue;
        };
        if Fingerprint::of(&model)? == fp {
            fingerprint_matches.push(e.key);
            if let Some(c) = e.claim {
                if c.s_bucket != s {
                    notes.push(format!(
                        "NOTE: {} is listed under s = {} but the computed s is {}",
                        e.display, c.s_bucket, s
                    ));
                }
            }
        }
    }
    Ok(Classification {
        s,
        bucket,
        fingerprint_matches,
        notes,
    })
}

#[derive(Clone, Debug)]
pub struct DerivedMultiplierVerdict {
    pub computed: bool,
    /// The same predicate evaluated with a claimed multiplier dimension.
    pub claimed: Option<bool>,
    /// Candidate list quoted when the computed predicate holds.
    pub candidates: Vec<&'static str>,
}

const DERIVED_EQUALS_MULTIPLIER_CANDIDATES: [&str; 3] = ["L22_9", "3A11+2A", "D15A11_3"];

/// `dim L² = dim M(L) = m+n-2` and `m+n <= 5`.
pub fn derived_equals_multiplier(
    algebra: &LieSuperalgebra,
    claimed_dim: Option<usize>,
) -> Result<DerivedMultiplierVerdict> {
    if !algebra.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let (m, n) = algebra.dims();
    let derived = algebra.derived_subalgebra().dim() as i64;
    let target = m as i64 + n as i64 - 2;
    let predicate = |dim: usize| m + n <= 5 && derived == target && dim as i64 == target;
    let computed = predicate(schur_multiplier(algebra)?.total());
    Ok(DerivedMultiplierVerdict {
        computed,
        claimed: claimed_dim.map(predicate),
        candidates: if computed {
            DERIVED_EQUALS_MULTIPLIER_CANDIDATES.to_vec()
        } else {
            Vec::new()
        },
    })
}

#[derive(Clone, Debug)]
pub struct CandidateResult {
    pub vector: Vec<Scalar>,
    pub parity: Parity,
    pub map: InducedMap,
    /// Injective induced map, hence `⟨x⟩ ⊆ Z*(L)`.
    pub in_epicenter: bool,
    /// For injective maps: `dim M(L/⟨x⟩) - dim M(L) = dim(⟨x⟩ ∩ L²)`.
    pub dimension_law: Option<bool>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CapabilityConclusion {
    NotCapable,
    NoObstructionFound,
    Inconclusive,
}

impl fmt::Display for CapabilityConclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CapabilityConclusion::NotCapable => "not capable",
            CapabilityConclusion::NoObstructionFound => "no obstruction found",
            CapabilityConclusion::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CapabilityReport {
    pub candidates: Vec<CandidateResult>,
    pub conclusion: CapabilityConclusion,
    pub center_dims: (usize, usize),
    /// Every homogeneous central direction is a multiple of a candidate.
    pub exhaustive: bool,
    pub note: String,
}

/// Tests central lines `⟨x⟩`: an injective `M(L) -> M(L/⟨x⟩)` puts `x` in
/// the epicenter, so `L` is not capable. Default candidates are the
/// homogeneous basis vectors of `Z(L)`.
pub fn capability_report(
    algebra: &LieSuperalgebra,
    extra_candidates: &[Vec<Scalar>],
) -> Result<CapabilityReport> {
    let center = algebra.center();
    let mut vectors = center.basis();
    for v in extra_candidates {
        if v.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                found: v.len(),
            });
        }
        vectors.push(v.clone());
    }

    let mut candidates = Vec::new();
    for v in vectors {
        let parity = match algebra.vector_parity(&v) {
            VectorParity::Homogeneous(p) => p,
            VectorParity::Zero => return Err(Error::NotHomogeneous("candidate is zero".into())),
            VectorParity::Mixed => {
                return Err(Error::NotHomogeneous(format!(
                    "candidate {} mixes parities",
                    algebra.format_vector(&v)
                )))
            }
        };
        let line = GradedSubspace::graded_hull(algebra, [v.clone()]);
        let map = induced_multiplier_map(algebra, &line)?;
        let in_epicenter = map.injective;
        let dimension_law = in_epicenter.then(|| {
            map.target.total() as i64 - map.source.total() as i64 == map.n_cap_derived_dim() as i64
        });
        candidates.push(CandidateResult {
            vector: v,
            parity,
            map,
            in_epicenter,
            dimension_law,
        });
    }

    let center_dims = center.dims();
    let exhaustive = center_dims.0 <= 1 && center_dims.1 <= 1;
    let conclusion = if candidates.iter().any(|c| c.in_epicenter) {
        CapabilityConclusion::NotCapable
    } else if candidates.is_empty() && !center.is_zero() {
        CapabilityConclusion::Inconclusive
    } else {
        CapabilityConclusion::NoObstructionFound
    };
    let note = match conclusion {
        CapabilityConclusion::NotCapable => "a tested central line lies in Z*(L), so Z*(L) != 0".to_string(),
        _ if exhaustive => format!(
            "exhaustive: Z(L) has graded dims ({}|{}), so every homogeneous central direction was tested",
            center_dims.0, center_dims.1
        ),
        _ => format!(
            "not exhaustive: Z(L) has graded dims ({}|{}); only the tested directions are covered, conclusive only \
             if every homogeneous central direction is spanned by a tested candidate",
            center_dims.0, center_dims.1
        ),
    };
    Ok(CapabilityReport {
        candidates,
        conclusion,
        center_dims,
        exhaustive,
        note,
    })
}
