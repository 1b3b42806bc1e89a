//! Finite-dimensional Lie superalgebras given by structure constants.
//!
//! The basis is ordered even block first, then odd block. Brackets are stored
//! once per unordered pair `(i, j)` with `i <= j`; the opposite order follows
//! from graded antisymmetry `[y, x] = -(-1)^{|x||y|} [x, y]`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::ops::Add;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{
    axpy, format_combination, is_zero_vec, sign, unit_vec, zero_vec, Matrix, Scalar, Subspace,
};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn is_even(self) -> bool {
        self == Parity::Even
    }

    pub const BOTH: [Parity; 2] = [Parity::Even, Parity::Odd];
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// `(-1)^{|p||q|}`
pub fn koszul(p: Parity, q: Parity) -> Scalar {
    sign(p.is_odd() && q.is_odd())
}

/// Parity content of a coordinate vector.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum VectorParity {
    Zero,
    Homogeneous(Parity),
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSuperalgebra {
    name: String,
    even_names: Vec<String>,
    odd_names: Vec<String>,
    brackets: BTreeMap<(usize, usize), Vec<Scalar>>,
}

impl LieSuperalgebra {
    /// Assembles an algebra from raw storage. Only schema-level invariants
    /// are checked here; the axioms are checked by [`validate`](Self::validate).
    ///
    /// Zero vectors are dropped from storage.
    pub fn new(
        name: impl Into<String>,
        even_names: Vec<String>,
        odd_names: Vec<String>,
        brackets: BTreeMap<(usize, usize), Vec<Scalar>>,
    ) -> Result<Self> {
        let dim = even_names.len() + odd_names.len();
        let mut seen = HashSet::new();
        for n in even_names.iter().chain(&odd_names) {
            if n.trim().is_empty() {
                return Err(Error::Malformed("empty basis name".into()));
            }
            if !seen.insert(n.as_str()) {
                return Err(Error::Malformed(format!("duplicate basis name {n:?}")));
            }
        }
        let mut stored = BTreeMap::new();
        for ((i, j), v) in brackets {
            if i > j || j >= dim {
                return Err(Error::Malformed(format!(
                    "bracket key ({i}, {j}) must satisfy i <= j < {dim}"
                )));
            }
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
            if !is_zero_vec(&v) {
                stored.insert((i, j), v);
            }
        }
        Ok(LieSuperalgebra {
            name: name.into(),
            even_names,
            odd_names,
            brackets: stored,
        })
    }

    pub fn builder(name: impl Into<String>) -> Builder {
        Builder {
            name: name.into(),
            even: Vec::new(),
            odd: Vec::new(),
            entries: Vec::new(),
        }
    }

    /// The abelian superalgebra `A(m|n)` with basis `x1..xm | ξ1..ξn`.
    pub fn abelian(m: usize, n: usize) -> Self {
        LieSuperalgebra {
            name: format!("A({m}|{n})"),
            even_names: (1..=m).map(|i| format!("x{i}")).collect(),
            odd_names: (1..=n).map(|i| format!("ξ{i}")).collect(),
            brackets: BTreeMap::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// `(m, n)`: even and odd dimensions.
    pub fn dims(&self) -> (usize, usize) {
        (self.even_names.len(), self.odd_names.len())
    }

    pub fn dim(&self) -> usize {
        self.even_names.len() + self.odd_names.len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        if i < self.even_names.len() {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn basis_name(&self, i: usize) -> &str {
        let m = self.even_names.len();
        if i < m {
            &self.even_names[i]
        } else {
            &self.odd_names[i - m]
        }
    }

    pub fn even_names(&self) -> &[String] {
        &self.even_names
    }

    pub fn odd_names(&self) -> &[String] {
        &self.odd_names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.even_names
            .iter()
            .chain(&self.odd_names)
            .position(|n| n == name)
    }

    /// Indices of the basis elements of one parity.
    pub fn block(&self, p: Parity) -> std::ops::Range<usize> {
        let m = self.even_names.len();
        match p {
            Parity::Even => 0..m,
            Parity::Odd => m..self.dim(),
        }
    }

    /// Stored brackets `(i, j) -> [e_i, e_j]`, `i <= j`, nonzero only.
    pub fn stored_brackets(&self) -> &BTreeMap<(usize, usize), Vec<Scalar>> {
        &self.brackets
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    /// `[e_i, e_j]` for any ordered pair.
    pub fn structure_constant(&self, i: usize, j: usize) -> Vec<Scalar> {
        if i <= j {
            self.brackets
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| zero_vec(self.dim()))
        } else {
            match self.brackets.get(&(j, i)) {
                None => zero_vec(self.dim()),
                Some(v) => {
                    let s = -koszul(self.parity(i), self.parity(j));
                    v.iter().map(|x| x * &s).collect()
                }
            }
        }
    }

    /// Bilinear bracket of coordinate vectors.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
        let d = self.dim();
        for w in [u, v] {
            if w.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: w.len(),
                });
            }
        }
        Ok(self.bracket_unchecked(u, v))
    }

    pub(crate) fn bracket_unchecked(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = zero_vec(d);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let c = self.structure_constant(i, j);
                if !is_zero_vec(&c) {
                    axpy(&mut out, &(ui * vj), &c);
                }
            }
        }
        out
    }

    pub fn vector_parity(&self, v: &[Scalar]) -> VectorParity {
        let has = |p: Parity| self.block(p).any(|i| !v[i].is_zero());
        match (has(Parity::Even), has(Parity::Odd)) {
            (false, false) => VectorParity::Zero,
            (true, false) => VectorParity::Homogeneous(Parity::Even),
            (false, true) => VectorParity::Homogeneous(Parity::Odd),
            (true, true) => VectorParity::Mixed,
        }
    }

    pub fn format_vector(&self, v: &[Scalar]) -> String {
        format_combination(v, |i| self.basis_name(i).to_string())
    }

    /// Checks the defining identities on all basis elements.
    pub fn validate(&self) -> ValidationReport {
        let d = self.dim();
        let mut report = ValidationReport {
            homogeneity_ok: true,
            antisymmetry_ok: true,
            even_square_ok: true,
            jacobi_ok: true,
            violations: Vec::new(),
        };

        for (&(i, j), v) in &self.brackets {
            let expected = self.parity(i) + self.parity(j);
            let bad: Vec<Scalar> = (0..d)
                .map(|k| {
                    if self.parity(k) == expected {
                        Scalar::zero()
                    } else {
                        v[k].clone()
                    }
                })
                .collect();
            if !is_zero_vec(&bad) {
                report.homogeneity_ok = false;
                report.violations.push(Violation {
                    axiom: Axiom::Homogeneity,
                    indices: vec![i, j],
                    defect: bad,
                });
            }
        }

        let units: Vec<Vec<Scalar>> = (0..d).map(|i| unit_vec(d, i)).collect();
        for i in 0..d {
            for j in i..d {
                let mut defect = self.bracket_unchecked(&units[j], &units[i]);
                let sym = koszul(self.parity(i), self.parity(j));
                axpy(
                    &mut defect,
                    &sym,
                    &self.bracket_unchecked(&units[i], &units[j]),
                );
                if !is_zero_vec(&defect) {
                    report.antisymmetry_ok = false;
                    report.violations.push(Violation {
                        axiom: Axiom::Antisymmetry,
                        indices: vec![i, j],
                        defect,
                    });
                }
            }
        }

        for i in self.block(Parity::Even) {
            let sq = self.bracket_unchecked(&units[i], &units[i]);
            if !is_zero_vec(&sq) {
                report.even_square_ok = false;
                report.violations.push(Violation {
                    axiom: Axiom::EvenSquare,
                    indices: vec![i],
                    defect: sq,
                });
            }
        }

        // [x,[y,z]] - [[x,y],z] - (-1)^{|x||y|} [y,[x,z]]
        for x in 0..d {
            for y in 0..d {
                let xy = self.structure_constant(x, y);
                let s = koszul(self.parity(x), self.parity(y));
                for z in 0..d {
                    let yz = self.structure_constant(y, z);
                    let xz = self.structure_constant(x, z);
                    let mut defect = self.bracket_unchecked(&units[x], &yz);
                    axpy(
                        &mut defect,
                        &-Scalar::one(),
                        &self.bracket_unchecked(&xy, &units[z]),
                    );
                    axpy(
                        &mut defect,
                        &-s.clone(),
                        &self.bracket_unchecked(&units[y], &xz),
                    );
                    if !is_zero_vec(&defect) {
                        report.jacobi_ok = false;
                        report.violations.push(Violation {
                            axiom: Axiom::Jacobi,
                            indices: vec![x, y, z],
                            defect,
                        });
                    }
                }
            }
        }
        report
    }

    /// `L^2 = [L, L]`.
    pub fn derived_subalgebra(&self) -> GradedSubspace {
        let d = self.dim();
        let mut vectors = Vec::new();
        for i in 0..d {
            for j in i..d {
                vectors.push(self.structure_constant(i, j));
            }
        }
        GradedSubspace::graded_hull(self, vectors)
    }

    /// `[A, L]` for a graded subspace `A`.
    pub fn bracket_with_algebra(&self, a: &GradedSubspace) -> GradedSubspace {
        let d = self.dim();
        let mut vectors = Vec::new();
        for u in a.basis() {
            for j in 0..d {
                vectors.push(self.bracket_unchecked(&u, &unit_vec(d, j)));
            }
        }
        GradedSubspace::graded_hull(self, vectors)
    }

    /// `L^1 = L`, `L^{k+1} = [L^k, L]`, stopped at zero, at stabilization,
    /// or after `m+n+1` steps.
    pub fn lower_central_series(&self) -> CentralSeries {
        let mut terms = vec![GradedSubspace::whole(self)];
        let mut nilpotent = terms[0].is_zero();
        for _ in 0..=self.dim() {
            let last = terms.last().expect("series is never empty");
            if last.is_zero() {
                nilpotent = true;
                break;
            }
            let next = self.bracket_with_algebra(last);
            let stalled = &next == last;
            terms.push(next);
            if stalled {
                break;
            }
        }
        if terms.last().is_some_and(GradedSubspace::is_zero) {
            nilpotent = true;
        }
        CentralSeries { terms, nilpotent }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().nilpotent
    }

    /// `Z(L)`, computed separately on each parity block.
    pub fn center(&self) -> GradedSubspace {
        let d = self.dim();
        // Row block j holds the map z -> [z, e_j].
        let mut stacked = Matrix::zeros(d * d, d);
        for i in 0..d {
            for j in 0..d {
                let c = self.structure_constant(i, j);
                for (k, x) in c.into_iter().enumerate() {
                    stacked[(j * d + k, i)] = x;
                }
            }
        }
        let mut parts = Vec::new();
        for p in Parity::BOTH {
            let cols: Vec<usize> = self.block(p).collect();
            let kernel = stacked.select_columns(&cols).nullspace();
            let embedded = kernel.into_iter().map(|local| {
                let mut v = zero_vec(d);
                for (k, &c) in cols.iter().enumerate() {
                    v[c] = local[k].clone();
                }
                v
            });
            parts.push(Subspace::span(d, embedded));
        }
        let odd = parts.pop().expect("two parts");
        let even = parts.pop().expect("two parts");
        GradedSubspace {
            even_block: self.even_names.len(),
            even,
            odd,
        }
    }

    pub fn is_maximal_class(&self) -> bool {
        self.derived_subalgebra().dim() as i64 == self.dim() as i64 - 2
    }

    /// True when `[L_1, L_1] = 0`.
    pub fn is_trivial_ls(&self) -> bool {
        let odd = self.block(Parity::Odd);
        !self
            .brackets
            .keys()
            .any(|&(i, j)| odd.contains(&i) && odd.contains(&j))
    }

    /// Checks `[I, L] ⊆ I`; on failure names the offending bracket.
    pub fn check_ideal(&self, ideal: &GradedSubspace) -> Result<()> {
        self.check_same_ambient(ideal)?;
        let d = self.dim();
        for u in ideal.basis() {
            for j in 0..d {
                let b = self.bracket_unchecked(&u, &unit_vec(d, j));
                if !ideal.contains(&b) {
                    return Err(Error::NotIdeal(format!(
                        "[{}, {}] = {} leaves the subspace",
                        self.format_vector(&u),
                        self.basis_name(j),
                        self.format_vector(&b)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Checks `[N, L] = 0`; on failure names the offending bracket.
    pub fn check_central(&self, n: &GradedSubspace) -> Result<()> {
        self.check_same_ambient(n)?;
        let d = self.dim();
        for u in n.basis() {
            for j in 0..d {
                let b = self.bracket_unchecked(&u, &unit_vec(d, j));
                if !is_zero_vec(&b) {
                    return Err(Error::NotCentral(format!(
                        "[{}, {}] = {} is nonzero",
                        self.format_vector(&u),
                        self.basis_name(j),
                        self.format_vector(&b)
                    )));
                }
            }
        }
        Ok(())
    }

    fn check_same_ambient(&self, s: &GradedSubspace) -> Result<()> {
        if s.ambient() != self.dim() || s.even_block != self.even_names.len() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: s.ambient(),
            });
        }
        Ok(())
    }

    /// `L / I` on the complement spanned by the non-pivot coordinates of
    /// `I`'s row-reduced form, per parity block.
    pub fn quotient(&self, ideal: &GradedSubspace) -> Result<LieSuperalgebra> {
        self.check_ideal(ideal)?;
        let proj = Projection::new(self, ideal);
        let kept = &proj.kept;
        let mut brackets = BTreeMap::new();
        for (a, &i) in kept.iter().enumerate() {
            for (b, &j) in kept.iter().enumerate().skip(a) {
                let v = proj.apply(&self.structure_constant(i, j));
                if !is_zero_vec(&v) {
                    brackets.insert((a, b), v);
                }
            }
        }
        let names = |p: Parity| -> Vec<String> {
            kept.iter()
                .filter(|&&i| self.parity(i) == p)
                .map(|&i| self.basis_name(i).to_string())
                .collect()
        };
        LieSuperalgebra::new(
            format!("{}/N", self.name),
            names(Parity::Even),
            names(Parity::Odd),
            brackets,
        )
    }

    /// `L ⊕ K` with zero cross brackets. Clashing basis names of `K` get
    /// primes appended.
    pub fn direct_sum(&self, other: &LieSuperalgebra) -> LieSuperalgebra {
        let (m1, n1) = self.dims();
        let (m2, n2) = other.dims();
        let mut taken: HashSet<String> = self
            .even_names
            .iter()
            .chain(&self.odd_names)
            .cloned()
            .collect();
        let mut fresh = |n: &String| {
            let mut cand = n.clone();
            while taken.contains(&cand) {
                cand.push('\'');
            }
            taken.insert(cand.clone());
            cand
        };
        let even_other: Vec<String> = other.even_names.iter().map(&mut fresh).collect();
        let odd_other: Vec<String> = other.odd_names.iter().map(&mut fresh).collect();

        // new index of each old index
        let left = |i: usize| if i < m1 { i } else { i + m2 };
        let right = |i: usize| {
            if i < m2 {
                m1 + i
            } else {
                m1 + n1 + m2 + (i - m2)
            }
        };
        let d = m1 + m2 + n1 + n2;
        let mut brackets = BTreeMap::new();
        for (src, map) in [(self, &left as &dyn Fn(usize) -> usize), (other, &right)] {
            for (&(i, j), v) in &src.brackets {
                let mut w = zero_vec(d);
                for (k, x) in v.iter().enumerate() {
                    w[map(k)] = x.clone();
                }
                brackets.insert((map(i), map(j)), w);
            }
        }
        let mut even = self.even_names.clone();
        even.extend(even_other);
        let mut odd = self.odd_names.clone();
        odd.extend(odd_other);
        LieSuperalgebra {
            name: format!("{}⊕{}", self.name, other.name),
            even_names: even,
            odd_names: odd,
            brackets,
        }
    }

    /// Rewrites the structure constants in the basis `f_i = Σ_k P[k][i] e_k`
    /// where `P` is block diagonal with the given even and odd blocks.
    pub fn change_basis(&self, change: &BasisChange) -> Result<LieSuperalgebra> {
        let (m, n) = self.dims();
        if change.even.rows() != m
            || change.even.cols() != m
            || change.odd.rows() != n
            || change.odd.cols() != n
        {
            return Err(Error::DimensionMismatch {
                expected: m + n,
                found: change.even.rows() + change.odd.rows(),
            });
        }
        let p = change.full_matrix();
        let inv = p
            .inverse()
            .ok_or_else(|| Error::InvalidParameter("basis change is singular".into()))?;
        let cols = p.columns();
        let d = m + n;
        let mut brackets = BTreeMap::new();
        for i in 0..d {
            for j in i..d {
                let v = inv.mul_vec(&self.bracket_unchecked(&cols[i], &cols[j]));
                if !is_zero_vec(&v) {
                    brackets.insert((i, j), v);
                }
            }
        }
        LieSuperalgebra::new(
            self.name.clone(),
            self.even_names.clone(),
            self.odd_names.clone(),
            brackets,
        )
    }
}

impl fmt::Display for LieSuperalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, n) = self.dims();
        write!(
            f,
            "{} ({m}|{n}) <{} | {}>",
            self.name,
            self.even_names.join(","),
            self.odd_names.join(",")
        )?;
        let rels: Vec<String> = self
            .brackets
            .iter()
            .map(|(&(i, j), v)| {
                format!(
                    "[{},{}]={}",
                    self.basis_name(i),
                    self.basis_name(j),
                    self.format_vector(v)
                )
            })
            .collect();
        if !rels.is_empty() {
            write!(f, " {}", rels.join(", "))?;
        }
        Ok(())
    }
}

/// Projection `L -> L/I` onto the complement coordinates.
pub(crate) struct Projection {
    ideal: Subspace,
    /// Old indices that survive, in order (even block first).
    pub(crate) kept: Vec<usize>,
}

impl Projection {
    pub(crate) fn new(algebra: &LieSuperalgebra, ideal: &GradedSubspace) -> Self {
        let flat = ideal.flattened();
        let pivots: HashSet<usize> = flat.pivots().iter().copied().collect();
        let kept = (0..algebra.dim()).filter(|i| !pivots.contains(i)).collect();
        Projection { ideal: flat, kept }
    }

    pub(crate) fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.ideal.reduce(v);
        self.kept.iter().map(|&i| r[i].clone()).collect()
    }
}

/// Parity-block-preserving change of basis.
#[derive(Clone, Debug)]
pub struct BasisChange {
    pub even: Matrix,
    pub odd: Matrix,
}

impl BasisChange {
    pub fn full_matrix(&self) -> Matrix {
        let (m, n) = (self.even.rows(), self.odd.rows());
        let mut p = Matrix::zeros(m + n, m + n);
        for r in 0..m {
            for c in 0..m {
                p[(r, c)] = self.even[(r, c)].clone();
            }
        }
        for r in 0..n {
            for c in 0..n {
                p[(m + r, m + c)] = self.odd[(r, c)].clone();
            }
        }
        p
    }
}

type NamedBracket = (String, String, Vec<(String, Scalar)>);

/// Name-based constructor used by the catalog and by tests.
pub struct Builder {
    name: String,
    even: Vec<String>,
    odd: Vec<String>,
    entries: Vec<NamedBracket>,
}

impl Builder {
    pub fn even(mut self, names: &[&str]) -> Self {
        self.even.extend(names.iter().map(|s| s.to_string()));
        self
    }

    pub fn odd(mut self, names: &[&str]) -> Self {
        self.odd.extend(names.iter().map(|s| s.to_string()));
        self
    }

    /// `[left, right] = Σ c · name` with integer coefficients.
    pub fn bracket(self, left: &str, right: &str, value: &[(&str, i64)]) -> Self {
        let value = value
            .iter()
            .map(|&(n, c)| (n, Scalar::from_integer(c.into())))
            .collect::<Vec<_>>();
        self.bracket_scalar(left, right, &value)
    }

    pub fn bracket_scalar(mut self, left: &str, right: &str, value: &[(&str, Scalar)]) -> Self {
        self.entries.push((
            left.to_string(),
            right.to_string(),
            value
                .iter()
                .map(|(n, c)| (n.to_string(), c.clone()))
                .collect(),
        ));
        self
    }

    /// Pairs given in reverse basis order are normalized through graded
    /// antisymmetry.
    pub fn build(self) -> Result<LieSuperalgebra> {
        let skeleton = LieSuperalgebra::new(self.name, self.even, self.odd, BTreeMap::new())?;
        let d = skeleton.dim();
        let idx = |n: &str| {
            skeleton
                .index_of(n)
                .ok_or_else(|| Error::UnknownBasis(n.to_string()))
        };
        let mut brackets: BTreeMap<(usize, usize), Vec<Scalar>> = BTreeMap::new();
        for (l, r, value) in &self.entries {
            let (i, j) = (idx(l)?, idx(r)?);
            let mut v = zero_vec(d);
            for (n, c) in value {
                v[idx(n)?] += c;
            }
            let key = if i <= j {
                (i, j)
            } else {
                let s = -koszul(skeleton.parity(i), skeleton.parity(j));
                v.iter_mut().for_each(|x| *x *= &s);
                (j, i)
            };
            if brackets.insert(key, v).is_some() {
                return Err(Error::DuplicateBracket(l.clone(), r.clone()));
            }
        }
        LieSuperalgebra::new(
            skeleton.name,
            skeleton.even_names,
            skeleton.odd_names,
            brackets,
        )
    }
}

/// A subspace that is the direct sum of its even and odd parts. Each part
/// is held in row-reduced form in full `m+n` coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSubspace {
    even_block: usize,
    even: Subspace,
    odd: Subspace,
}

impl GradedSubspace {
    pub fn zero(algebra: &LieSuperalgebra) -> Self {
        GradedSubspace {
            even_block: algebra.dims().0,
            even: Subspace::zero(algebra.dim()),
            odd: Subspace::zero(algebra.dim()),
        }
    }

    pub fn whole(algebra: &LieSuperalgebra) -> Self {
        let d = algebra.dim();
        Self::graded_hull(algebra, (0..d).map(|i| unit_vec(d, i)))
    }

    /// Smallest graded subspace containing the vectors: the span of their
    /// even and odd projections.
    pub fn graded_hull<I>(algebra: &LieSuperalgebra, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let d = algebra.dim();
        let m = algebra.dims().0;
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for v in vectors {
            assert_eq!(v.len(), d, "vector length must match algebra dimension");
            let mut e = v.clone();
            let mut o = v;
            e[m..].iter_mut().for_each(|x| *x = Scalar::zero());
            o[..m].iter_mut().for_each(|x| *x = Scalar::zero());
            even.push(e);
            odd.push(o);
        }
        GradedSubspace {
            even_block: m,
            even: Subspace::span(d, even),
            odd: Subspace::span(d, odd),
        }
    }

    /// Span of the vectors, which must already be graded.
    pub fn from_span(algebra: &LieSuperalgebra, vectors: Vec<Vec<Scalar>>) -> Result<Self> {
        let d = algebra.dim();
        if let Some(v) = vectors.iter().find(|v| v.len() != d) {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: v.len(),
            });
        }
        let span = Subspace::span(d, &vectors);
        let hull = Self::graded_hull(algebra, vectors);
        if hull.dim() != span.dim() {
            return Err(Error::NotGraded(format!(
                "span has dimension {} but its parity projections span {}",
                span.dim(),
                hull.dim()
            )));
        }
        Ok(hull)
    }

    pub fn ambient(&self) -> usize {
        self.even.ambient()
    }

    /// `(even dim, odd dim)`
    pub fn dims(&self) -> (usize, usize) {
        (self.even.dim(), self.odd.dim())
    }

    pub fn dim(&self) -> usize {
        self.even.dim() + self.odd.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn part(&self, p: Parity) -> &Subspace {
        match p {
            Parity::Even => &self.even,
            Parity::Odd => &self.odd,
        }
    }

    /// Homogeneous basis: even vectors first, then odd.
    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        self.even
            .basis()
            .iter()
            .chain(self.odd.basis())
            .cloned()
            .collect()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let m = self.even_block;
        let mut e = v.to_vec();
        let mut o = v.to_vec();
        e[m..].iter_mut().for_each(|x| *x = Scalar::zero());
        o[..m].iter_mut().for_each(|x| *x = Scalar::zero());
        self.even.contains(&e) && self.odd.contains(&o)
    }

    pub fn contains_subspace(&self, other: &GradedSubspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &GradedSubspace) -> GradedSubspace {
        GradedSubspace {
            even_block: self.even_block,
            even: self.even.sum(&other.even),
            odd: self.odd.sum(&other.odd),
        }
    }

    /// Graded dimensions of the intersection.
    pub fn intersection_dims(&self, other: &GradedSubspace) -> (usize, usize) {
        (
            self.even.intersection_dim(&other.even),
            self.odd.intersection_dim(&other.odd),
        )
    }

    /// The whole subspace as a single row-reduced span.
    pub fn flattened(&self) -> Subspace {
        self.even.sum(&self.odd)
    }

    pub fn describe(&self, algebra: &LieSuperalgebra) -> String {
        let vs: Vec<String> = self
            .basis()
            .iter()
            .map(|v| algebra.format_vector(v))
            .collect();
        format!("⟨{}⟩", vs.join(", "))
    }
}

#[derive(Clone, Debug)]
pub struct CentralSeries {
    /// `L^1, L^2, ...`; ends with the zero subspace when nilpotent.
    pub terms: Vec<GradedSubspace>,
    pub nilpotent: bool,
}

impl CentralSeries {
    /// Last `k` with `L^k != 0`, when nilpotent.
    pub fn class(&self) -> Option<usize> {
        self.nilpotent
            .then(|| self.terms.iter().take_while(|t| !t.is_zero()).count())
    }

    pub fn term_dims(&self) -> Vec<(usize, usize)> {
        self.terms.iter().map(GradedSubspace::dims).collect()
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Axiom {
    Homogeneity,
    Antisymmetry,
    EvenSquare,
    Jacobi,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Homogeneity => "parity homogeneity",
            Axiom::Antisymmetry => "graded antisymmetry",
            Axiom::EvenSquare => "even square",
            Axiom::Jacobi => "graded Jacobi",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Violation {
    pub axiom: Axiom,
    pub indices: Vec<usize>,
    pub defect: Vec<Scalar>,
}

#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub homogeneity_ok: bool,
    pub antisymmetry_ok: bool,
    pub even_square_ok: bool,
    pub jacobi_ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.homogeneity_ok && self.antisymmetry_ok && self.even_square_ok && self.jacobi_ok
    }

    pub fn describe(&self, algebra: &LieSuperalgebra) -> Vec<String> {
        let flag = |ok: bool| if ok { "ok" } else { "FAILED" };
        let mut lines = vec![
            format!("parity homogeneity: {}", flag(self.homogeneity_ok)),
            format!("graded antisymmetry: {}", flag(self.antisymmetry_ok)),
            format!("even squares vanish: {}", flag(self.even_square_ok)),
            format!("graded Jacobi: {}", flag(self.jacobi_ok)),
        ];
        for v in &self.violations {
            let names: Vec<&str> = v.indices.iter().map(|&i| algebra.basis_name(i)).collect();
            lines.push(format!(
                "  {} violated at ({}): defect {}",
                v.axiom,
                names.join(", "),
                algebra.format_vector(&v.defect)
            ));
        }
        lines
    }
}
