//! `t(L)`, `s(L)` and the dimension bounds for `M(L)`.
//!
//! Every check here consumes computed multiplier dimensions only.

use std::fmt;

use crate::analysis::Fingerprint;
use crate::catalog::heisenberg_plus_abelian;
use crate::error::{Error, Result};
use crate::homology::{schur_multiplier, MultiplierResult};
use crate::superalg::LieSuperalgebra;

/// `½[(m+n)² + (n-m)]`, the dimension of `Λ²L` and of `M(A(m|n))`.
pub fn universal_bound(m: usize, n: usize) -> i64 {
    let (m, n) = (m as i64, n as i64);
    ((m + n) * (m + n) + (n - m)) / 2
}

/// `½(m+n-2)(m+n-1) + n + 1`
pub fn s_offset(m: usize, n: usize) -> i64 {
    let (m, n) = (m as i64, n as i64);
    (m + n - 2) * (m + n - 1) / 2 + n + 1
}

pub fn t_from_dim(m: usize, n: usize, multiplier_dim: usize) -> i64 {
    universal_bound(m, n) - multiplier_dim as i64
}

pub fn s_from_dim(m: usize, n: usize, multiplier_dim: usize) -> i64 {
    s_offset(m, n) - multiplier_dim as i64
}

pub fn t_invariant(algebra: &LieSuperalgebra) -> Result<i64> {
    let (m, n) = algebra.dims();
    Ok(t_from_dim(m, n, schur_multiplier(algebra)?.total()))
}

/// `s(L)` for non-abelian nilpotent algebras, `None` elsewhere.
pub fn s_invariant(algebra: &LieSuperalgebra) -> Result<Option<i64>> {
    let mult = schur_multiplier(algebra)?;
    Ok(s_of(algebra, &mult, algebra.is_nilpotent()))
}

fn s_of(algebra: &LieSuperalgebra, mult: &MultiplierResult, nilpotent: bool) -> Option<i64> {
    if algebra.is_abelian() || !nilpotent {
        return None;
    }
    let (m, n) = algebra.dims();
    let s = s_from_dim(m, n, mult.total());
    debug_assert_eq!(t_from_dim(m, n, mult.total()) - s, m as i64 + n as i64 - 2);
    Some(s)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Lt,
    Gt,
    Eq,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Lt => "<",
            Relation::Gt => ">",
            Relation::Eq => "==",
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    /// Failed on an input the hypothesis may not cover; reported, not fatal.
    Flagged,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "FAILS",
            Verdict::Flagged => "FLAGGED",
        })
    }
}

/// One evaluated inequality `lhs REL rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub id: &'static str,
    pub statement: String,
    pub lhs: i64,
    pub relation: Relation,
    pub rhs: i64,
    pub verdict: Verdict,
}

impl BoundCheck {
    fn new(
        id: &'static str,
        statement: impl Into<String>,
        lhs: i64,
        relation: Relation,
        rhs: i64,
    ) -> Self {
        let ok = match relation {
            Relation::Le => lhs <= rhs,
            Relation::Lt => lhs < rhs,
            Relation::Gt => lhs > rhs,
            Relation::Eq => lhs == rhs,
        };
        BoundCheck {
            id,
            statement: statement.into(),
            lhs,
            relation,
            rhs,
            verdict: if ok { Verdict::Holds } else { Verdict::Fails },
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

impl fmt::Display for BoundCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}: {} {} {} ... {}",
            self.id, self.statement, self.lhs, self.relation, self.rhs, self.verdict
        )
    }
}

#[derive(Clone, Debug)]
pub struct GeneralBoundVerdict {
    pub bound: BoundCheck,
    pub equality: bool,
    pub abelian: bool,
    /// `equality <=> abelian`
    pub biconditional: BoundCheck,
}

/// `dim M(L) <= ½[(m+n)²+(n-m)]`, with equality exactly for abelian `L`.
pub fn check_general_bound(
    algebra: &LieSuperalgebra,
    mult: &MultiplierResult,
) -> GeneralBoundVerdict {
    let (m, n) = algebra.dims();
    let u = universal_bound(m, n);
    let dim = mult.total() as i64;
    let equality = dim == u;
    let abelian = algebra.is_abelian();
    GeneralBoundVerdict {
        bound: BoundCheck::new(
            "universal-bound",
            "dim M(L) <= ½[(m+n)²+(n-m)]",
            dim,
            Relation::Le,
            u,
        ),
        equality,
        abelian,
        biconditional: BoundCheck::new(
            "abelian-equality",
            "dim M(L) attains the universal bound iff L is abelian (1 = yes)",
            equality as i64,
            Relation::Eq,
            abelian as i64,
        ),
    }
}

#[derive(Clone, Debug)]
pub struct DerivedBoundVerdict {
    /// `(r, s)`: graded dims of `L²`.
    pub derived_dims: (usize, usize),
    pub bound: BoundCheck,
    /// Present when `r+s = 1`.
    pub equality: Option<bool>,
    /// Whether the fingerprint matches `H(1,0)⊕A(m-3|n)`; present when `r+s = 1`.
    pub heisenberg_form: Option<bool>,
    /// `equality <=> heisenberg_form`, when `r+s = 1`.
    pub equality_clause: Option<BoundCheck>,
}

/// `dim M(L) <= ½[(m+n+r+s-2)(m+n-r-s-1)] + n + 1` for nilpotent `L` with
/// `r+s >= 1`; when `r+s = 1`, equality should single out `H(1,0)⊕A(m-3|n)`.
pub fn check_derived_bound(
    algebra: &LieSuperalgebra,
    mult: &MultiplierResult,
) -> Result<DerivedBoundVerdict> {
    if !algebra.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let derived = algebra.derived_subalgebra();
    if derived.is_zero() {
        return Err(Error::DerivedZero);
    }
    let (m, n) = algebra.dims();
    let (mi, ni, k) = (m as i64, n as i64, derived.dim() as i64);
    let rhs = (mi + ni + k - 2) * (mi + ni - k - 1) / 2 + ni + 1;
    let dim = mult.total() as i64;
    let bound = BoundCheck::new(
        "derived-bound",
        "dim M(L) <= ½[(m+n+r+s-2)(m+n-r-s-1)] + n + 1",
        dim,
        Relation::Le,
        rhs,
    );
    let (equality, heisenberg_form, equality_clause) = if k == 1 {
        let eq = dim == rhs;
        let form = if m >= 3 {
            let model = heisenberg_plus_abelian(m, n)?;
            Fingerprint::of(&model)? == Fingerprint::with_multiplier(algebra, mult)
        } else {
            false
        };
        let clause = BoundCheck::new(
            "derived-bound-equality",
            "equality at r+s=1 iff L ≅ H(1,0)⊕A(m-3|n) by fingerprint (1 = yes)",
            eq as i64,
            Relation::Eq,
            form as i64,
        );
        (Some(eq), Some(form), Some(clause))
    } else {
        (None, None, None)
    };
    Ok(DerivedBoundVerdict {
        derived_dims: derived.dims(),
        bound,
        equality,
        heisenberg_form,
        equality_clause,
    })
}

#[derive(Clone, Debug)]
pub struct MaxClassVerdict {
    pub t: i64,
    pub s: i64,
    pub multiplier_bound: BoundCheck,
    pub t_lower: BoundCheck,
    pub t_upper: BoundCheck,
    pub s_lower: BoundCheck,
    pub s_upper: BoundCheck,
}

impl MaxClassVerdict {
    pub fn checks(&self) -> [&BoundCheck; 5] {
        [
            &self.multiplier_bound,
            &self.t_lower,
            &self.t_upper,
            &self.s_lower,
            &self.s_upper,
        ]
    }
}

/// The double inequalities on `2t` and `2s` for nilpotent `L` with
/// `dim L² = m+n-2`, `m+n > 2`, `n >= 1`, plus `dim M(L) <= m+2n-2`.
pub fn check_maximal_class_bounds(
    algebra: &LieSuperalgebra,
    mult: &MultiplierResult,
) -> Result<MaxClassVerdict> {
    let (m, n) = algebra.dims();
    let derived = algebra.derived_subalgebra().dim();
    if derived as i64 != m as i64 + n as i64 - 2 {
        return Err(Error::NotMaximalClass {
            derived,
            expected: m as i64 + n as i64 - 2,
        });
    }
    if !algebra.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    if m + n <= 2 {
        return Err(Error::Precondition("m+n > 2 required".into()));
    }
    if n == 0 {
        return Err(Error::Precondition("n >= 1 required".into()));
    }
    let dim = mult.total();
    let t = t_from_dim(m, n, dim);
    let s = s_from_dim(m, n, dim);
    let (mi, ni) = (m as i64, n as i64);
    let k = mi + ni;
    Ok(MaxClassVerdict {
        t,
        s,
        multiplier_bound: BoundCheck::new(
            "max-class-multiplier",
            "dim M(L) <= m+2n-2",
            dim as i64,
            Relation::Le,
            mi + 2 * ni - 2,
        ),
        t_lower: BoundCheck::new(
            "max-class-t-lower",
            "(n+m)(n+m-3)+4 <= 2t(L)",
            k * (k - 3) + 4,
            Relation::Le,
            2 * t,
        ),
        t_upper: BoundCheck::new(
            "max-class-t-upper",
            "2t(L) < (n+m)²+n-m",
            2 * t,
            Relation::Lt,
            k * k + ni - mi,
        ),
        s_lower: BoundCheck::new(
            "max-class-s-lower",
            "(n+m)(n+m-5)+8 <= 2s(L)",
            k * (k - 5) + 8,
            Relation::Le,
            2 * s,
        ),
        s_upper: BoundCheck::new(
            "max-class-s-upper",
            "2s(L) < (n+m)(n+m-1)-2m+4",
            2 * s,
            Relation::Lt,
            k * (k - 1) - 2 * mi + 4,
        ),
    })
}

#[derive(Clone, Debug)]
pub struct NonvanishingVerdict {
    /// Nilpotent and of dimension > 1.
    pub applicable: bool,
    pub check: BoundCheck,
    pub note: Option<String>,
}

/// `M(L) != 0` for nilpotent `L` of dimension > 1. A zero multiplier is
/// reported as [`Verdict::Flagged`]: the hypothesis on the class of `L` that
/// accompanies this statement is not pinned down, so a counterexample such as
/// `H(0,1)` is surfaced rather than treated as an engine failure.
pub fn check_nonvanishing(
    algebra: &LieSuperalgebra,
    mult: &MultiplierResult,
) -> NonvanishingVerdict {
    let applicable = algebra.dim() > 1 && algebra.is_nilpotent();
    let mut check = BoundCheck::new(
        "nonvanishing",
        "dim M(L) > 0",
        mult.total() as i64,
        Relation::Gt,
        0,
    );
    let mut note = None;
    if check.verdict == Verdict::Fails {
        check.verdict = Verdict::Flagged;
        note = Some(format!(
            "M({}) = 0 although L is nilpotent of dimension {}",
            algebra.name(),
            algebra.dim()
        ));
    }
    NonvanishingVerdict {
        applicable,
        check,
        note,
    }
}

#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub dims: (usize, usize),
    pub derived_dims: (usize, usize),
    pub multiplier_dims: (usize, usize),
    pub nilpotent: bool,
    pub abelian: bool,
    pub t: i64,
    /// `None` for abelian or non-nilpotent algebras.
    pub s: Option<i64>,
    pub general: GeneralBoundVerdict,
    pub derived_bound: Option<DerivedBoundVerdict>,
    pub max_class: Option<MaxClassVerdict>,
    pub nonvanishing: Option<NonvanishingVerdict>,
}

impl InvariantReport {
    pub fn compute(algebra: &LieSuperalgebra) -> Result<Self> {
        let mult = schur_multiplier(algebra)?;
        Self::with_multiplier(algebra, &mult)
    }

    pub fn with_multiplier(algebra: &LieSuperalgebra, mult: &MultiplierResult) -> Result<Self> {
        let (m, n) = algebra.dims();
        let nilpotent = algebra.is_nilpotent();
        let derived = algebra.derived_subalgebra();
        let t = t_from_dim(m, n, mult.total());
        let s = s_of(algebra, mult, nilpotent);
        if let Some(s) = s {
            if t - s != m as i64 + n as i64 - 2 {
                return Err(Error::Internal("t - s != m+n-2".into()));
            }
        }
        let derived_bound = if nilpotent && !derived.is_zero() {
            Some(check_derived_bound(algebra, mult)?)
        } else {
            None
        };
        let max_class = match check_maximal_class_bounds(algebra, mult) {
            Ok(v) => Some(v),
            Err(Error::NotMaximalClass { .. } | Error::NotNilpotent | Error::Precondition(_)) => {
                None
            }
            Err(e) => return Err(e),
        };
        let nonvanishing = check_nonvanishing(algebra, mult);
        Ok(InvariantReport {
            dims: (m, n),
            derived_dims: derived.dims(),
            multiplier_dims: mult.dims(),
            nilpotent,
            abelian: algebra.is_abelian(),
            t,
            s,
            general: check_general_bound(algebra, mult),
            derived_bound,
            max_class,
            nonvanishing: nonvanishing.applicable.then_some(nonvanishing),
        })
    }

    /// Every evaluated check, in a fixed order.
    pub fn checks(&self) -> Vec<&BoundCheck> {
        let mut out = vec![&self.general.bound, &self.general.biconditional];
        if let Some(d) = &self.derived_bound {
            out.push(&d.bound);
            if let Some(c) = &d.equality_clause {
                out.push(c);
            }
        }
        if let Some(mc) = &self.max_class {
            out.extend(mc.checks());
        }
        if let Some(nv) = &self.nonvanishing {
            out.push(&nv.check);
        }
        out
    }

    /// No check fails outright (flagged checks are allowed).
    pub fn all_hold(&self) -> bool {
        self.checks().iter().all(|c| c.verdict != Verdict::Fails)
    }
}
