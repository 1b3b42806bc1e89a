//! The Schur multiplier as degree-2 homology of the super-exterior complex
//!
//! ```text
//!   Λ³L --d3--> Λ²L --d2--> L
//!   d2(x∧y)   = [x,y]
//!   d3(x∧y∧z) = [x,y]∧z - (-1)^{|y||z|} [x,z]∧y + (-1)^{|x|(|y|+|z|)} [y,z]∧x
//! ```
//!
//! In the super-exterior square `x∧y = -(-1)^{|x||y|} y∧x`, so `x∧x`
//! vanishes for even `x` and survives for odd `x`. `M(L) = ker d2 / im d3`.
//! Both differentials preserve parity, which yields the graded split of
//! `M(L)` directly.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{
    axpy, format_combination, is_zero_vec, unit_vec, zero_vec, Matrix, Scalar, Subspace,
};
use crate::superalg::{koszul, GradedSubspace, LieSuperalgebra, Parity, Projection};

/// Canonical basis monomial `e_i ∧ e_j`, `i <= j`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WedgeMonomial2 {
    pub i: usize,
    pub j: usize,
    pub parity: Parity,
}

/// Canonical basis monomial `e_i ∧ e_j ∧ e_k`, `i <= j <= k`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WedgeMonomial3 {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub parity: Parity,
}

impl WedgeMonomial2 {
    pub fn label(&self, algebra: &LieSuperalgebra) -> String {
        format!(
            "{}∧{}",
            algebra.basis_name(self.i),
            algebra.basis_name(self.j)
        )
    }
}

impl WedgeMonomial3 {
    pub fn label(&self, algebra: &LieSuperalgebra) -> String {
        format!(
            "{}∧{}∧{}",
            algebra.basis_name(self.i),
            algebra.basis_name(self.j),
            algebra.basis_name(self.k)
        )
    }
}

/// All pairs `i < j` plus the odd diagonals, in lexicographic order.
pub fn chain2_basis(algebra: &LieSuperalgebra) -> Vec<WedgeMonomial2> {
    let d = algebra.dim();
    let mut out = Vec::new();
    for i in 0..d {
        for j in i..d {
            if i == j && algebra.parity(i).is_even() {
                continue;
            }
            out.push(WedgeMonomial2 {
                i,
                j,
                parity: algebra.parity(i) + algebra.parity(j),
            });
        }
    }
    out
}

/// Nondecreasing triples in which only odd indices repeat.
pub fn chain3_basis(algebra: &LieSuperalgebra) -> Vec<WedgeMonomial3> {
    let d = algebra.dim();
    let mut out = Vec::new();
    for i in 0..d {
        for j in i..d {
            if i == j && algebra.parity(i).is_even() {
                continue;
            }
            for k in j..d {
                if j == k && algebra.parity(j).is_even() {
                    continue;
                }
                out.push(WedgeMonomial3 {
                    i,
                    j,
                    k,
                    parity: algebra.parity(i) + algebra.parity(j) + algebra.parity(k),
                });
            }
        }
    }
    out
}

/// Coordinates on `Λ²L` with respect to [`chain2_basis`].
pub struct Chain2Space<'a> {
    algebra: &'a LieSuperalgebra,
    basis: Vec<WedgeMonomial2>,
    index: HashMap<(usize, usize), usize>,
}

impl<'a> Chain2Space<'a> {
    pub fn new(algebra: &'a LieSuperalgebra) -> Self {
        let basis = chain2_basis(algebra);
        let index = basis
            .iter()
            .enumerate()
            .map(|(k, w)| ((w.i, w.j), k))
            .collect();
        Chain2Space {
            algebra,
            basis,
            index,
        }
    }

    pub fn basis(&self) -> &[WedgeMonomial2] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Adds `c · e_i∧e_j` to `acc`, rewriting into canonical order.
    fn add_basis_wedge(&self, acc: &mut [Scalar], c: &Scalar, i: usize, j: usize) {
        let (pi, pj) = (self.algebra.parity(i), self.algebra.parity(j));
        if i == j {
            if pi.is_odd() {
                acc[self.index[&(i, i)]] += c;
            }
        } else if i < j {
            acc[self.index[&(i, j)]] += c;
        } else {
            acc[self.index[&(j, i)]] -= c * koszul(pi, pj);
        }
    }

    /// `u ∧ v` for arbitrary coordinate vectors, extended bilinearly.
    pub fn wedge(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut acc = zero_vec(self.len());
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if !vj.is_zero() {
                    self.add_basis_wedge(&mut acc, &(ui * vj), i, j);
                }
            }
        }
        acc
    }

    pub fn format_chain(&self, chain: &[Scalar]) -> String {
        format_combination(chain, |k| self.basis[k].label(self.algebra))
    }
}

/// `d2 = κ̃`: one column per [`WedgeMonomial2`], holding `[e_i, e_j]`.
pub fn d2_matrix(algebra: &LieSuperalgebra) -> Matrix {
    let basis = chain2_basis(algebra);
    let cols: Vec<Vec<Scalar>> = basis
        .iter()
        .map(|w| algebra.structure_constant(w.i, w.j))
        .collect();
    Matrix::from_columns(algebra.dim(), &cols)
}

fn d3_unchecked(algebra: &LieSuperalgebra, c2: &Chain2Space<'_>) -> Matrix {
    let d = algebra.dim();
    let basis3 = chain3_basis(algebra);
    let mut m = Matrix::zeros(c2.len(), basis3.len());
    for (col, w) in basis3.iter().enumerate() {
        let (x, y, z) = (w.i, w.j, w.k);
        let (px, py, pz) = (algebra.parity(x), algebra.parity(y), algebra.parity(z));
        let mut out = c2.wedge(&algebra.structure_constant(x, y), &unit_vec(d, z));
        let t2 = c2.wedge(&algebra.structure_constant(x, z), &unit_vec(d, y));
        axpy(&mut out, &-koszul(py, pz), &t2);
        let t3 = c2.wedge(&algebra.structure_constant(y, z), &unit_vec(d, x));
        axpy(&mut out, &koszul(px, py + pz), &t3);
        m.set_column(col, &out);
    }
    m
}

/// `d3`: one column per [`WedgeMonomial3`]. Fails if `d2·d3 != 0`, which on a
/// valid algebra would mean a sign-convention bug.
pub fn d3_matrix(algebra: &LieSuperalgebra) -> Result<Matrix> {
    let c2 = Chain2Space::new(algebra);
    let d3 = d3_unchecked(algebra, &c2);
    let d2 = d2_matrix(algebra);
    if !d2.mul(&d3).is_zero() {
        return Err(Error::Internal(format!(
            "d2·d3 != 0 for {}; is the algebra valid?",
            algebra.name()
        )));
    }
    Ok(d3)
}

#[derive(Clone, Debug)]
pub struct Representative {
    pub parity: Parity,
    /// Coordinates on [`chain2_basis`].
    pub chain: Vec<Scalar>,
}

/// `M(L) ≅ A(even_dim | odd_dim)` together with representative cycles.
#[derive(Clone, Debug)]
pub struct MultiplierResult {
    pub even_dim: usize,
    pub odd_dim: usize,
    pub representatives: Vec<Representative>,
    pub cycle_dims: (usize, usize),
    pub boundary_dims: (usize, usize),
    boundaries: Subspace,
    rep_space: Subspace,
}

impl MultiplierResult {
    pub fn dims(&self) -> (usize, usize) {
        (self.even_dim, self.odd_dim)
    }

    pub fn total(&self) -> usize {
        self.even_dim + self.odd_dim
    }

    /// Coordinates of the class of a cycle, against `representatives`.
    pub fn class_of(&self, cycle: &[Scalar]) -> Result<Vec<Scalar>> {
        let r = self.boundaries.reduce(cycle);
        self.rep_space
            .coordinates(&r)
            .ok_or_else(|| Error::Internal("chain is not a cycle".into()))
    }

    /// Representatives in wedge notation, grouped by parity.
    pub fn describe(&self, algebra: &LieSuperalgebra) -> Vec<(Parity, String)> {
        let c2 = Chain2Space::new(algebra);
        let mut out: Vec<(Parity, String)> = self
            .representatives
            .iter()
            .map(|r| (r.parity, c2.format_chain(&r.chain)))
            .collect();
        out.sort_by_key(|(p, _)| *p == Parity::Even);
        out
    }
}

impl fmt::Display for MultiplierResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A({}|{})", self.even_dim, self.odd_dim)
    }
}

fn chain_parity(basis: &[WedgeMonomial2], chain: &[Scalar]) -> Result<Parity> {
    let mut found = None;
    for (w, c) in basis.iter().zip(chain) {
        if c.is_zero() {
            continue;
        }
        match found {
            None => found = Some(w.parity),
            Some(p) if p != w.parity => {
                return Err(Error::Internal("inhomogeneous chain".into()));
            }
            _ => {}
        }
    }
    found.ok_or_else(|| Error::Internal("zero chain".into()))
}

/// `ker d2 / im d3` with its parity split.
///
/// Representatives are the row-reduced basis of the cycles reduced modulo
/// the boundaries, so the output is deterministic.
pub fn schur_multiplier(algebra: &LieSuperalgebra) -> Result<MultiplierResult> {
    let c2 = Chain2Space::new(algebra);
    let d2 = d2_matrix(algebra);
    let d3 = d3_matrix(algebra)?;
    let n2 = c2.len();

    let cycles = Subspace::span(n2, d2.nullspace());
    let boundaries = Subspace::span(n2, d3.columns());
    if !cycles.contains_subspace(&boundaries) {
        return Err(Error::Internal("boundaries are not cycles".into()));
    }
    let rep_space = Subspace::span(n2, cycles.basis().iter().map(|z| boundaries.reduce(z)));

    let split = |s: &Subspace| -> Result<(usize, usize)> {
        let mut dims = (0, 0);
        for v in s.basis() {
            match chain_parity(c2.basis(), v)? {
                Parity::Even => dims.0 += 1,
                Parity::Odd => dims.1 += 1,
            }
        }
        Ok(dims)
    };
    let cycle_dims = split(&cycles)?;
    let boundary_dims = split(&boundaries)?;

    let mut representatives = Vec::new();
    for v in rep_space.basis() {
        representatives.push(Representative {
            parity: chain_parity(c2.basis(), v)?,
            chain: v.clone(),
        });
    }
    let even_dim = representatives
        .iter()
        .filter(|r| r.parity.is_even())
        .count();
    let odd_dim = representatives.len() - even_dim;
    debug_assert_eq!(even_dim, cycle_dims.0 - boundary_dims.0);
    debug_assert_eq!(odd_dim, cycle_dims.1 - boundary_dims.1);
    Ok(MultiplierResult {
        even_dim,
        odd_dim,
        representatives,
        cycle_dims,
        boundary_dims,
        boundaries,
        rep_space,
    })
}

/// Graded dimension of `H²(L)` with trivial coefficients, computed from
/// bilinear forms on ordered pairs. Over a field it is dual to `M(L)`, so
/// it must agree with [`schur_multiplier`].
///
/// Forms of parity `ε` are supported on pairs `(x, y)` with `|x|+|y| = ε`.
/// Cocycles are the super-antisymmetric forms satisfying
/// `f([x,y],z) - (-1)^{|y||z|} f([x,z],y) + (-1)^{|x|(|y|+|z|)} f([y,z],x) = 0`
/// on every ordered basis triple; coboundaries are the forms `g([x,y])`.
pub fn schur_multiplier_cochain_oracle(algebra: &LieSuperalgebra) -> Result<(usize, usize)> {
    let d = algebra.dim();
    let par = |i: usize| algebra.parity(i);
    let mut dims = [0usize; 2];
    for (slot, eps) in Parity::BOTH.into_iter().enumerate() {
        let pairs: Vec<(usize, usize)> = (0..d)
            .flat_map(|i| (0..d).map(move |j| (i, j)))
            .filter(|&(i, j)| par(i) + par(j) == eps)
            .collect();
        let var: HashMap<(usize, usize), usize> =
            pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        let nvar = pairs.len();
        if nvar == 0 {
            continue;
        }

        let mut constraints: Vec<Vec<Scalar>> = Vec::new();
        for &(i, j) in &pairs {
            if i > j {
                continue;
            }
            let mut row = zero_vec(nvar);
            row[var[&(i, j)]] += Scalar::one();
            row[var[&(j, i)]] += koszul(par(i), par(j));
            if !is_zero_vec(&row) {
                constraints.push(row);
            }
        }
        // f(u, e_w) for a vector u, accumulated into a constraint row
        let add_term = |row: &mut Vec<Scalar>, coeff: &Scalar, u: &[Scalar], w: usize| {
            for (k, uk) in u.iter().enumerate() {
                if uk.is_zero() {
                    continue;
                }
                if let Some(&v) = var.get(&(k, w)) {
                    row[v] += coeff * uk;
                }
            }
        };
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let mut row = zero_vec(nvar);
                    add_term(
                        &mut row,
                        &Scalar::one(),
                        &algebra.structure_constant(x, y),
                        z,
                    );
                    add_term(
                        &mut row,
                        &-koszul(par(y), par(z)),
                        &algebra.structure_constant(x, z),
                        y,
                    );
                    add_term(
                        &mut row,
                        &koszul(par(x), par(y) + par(z)),
                        &algebra.structure_constant(y, z),
                        x,
                    );
                    if !is_zero_vec(&row) {
                        constraints.push(row);
                    }
                }
            }
        }
        let cocycles = if constraints.is_empty() {
            Subspace::span(nvar, (0..nvar).map(|k| unit_vec(nvar, k)))
        } else {
            Subspace::span(nvar, Matrix::from_rows(nvar, &constraints).nullspace())
        };

        let coboundaries = Subspace::span(
            nvar,
            algebra.block(eps).map(|g| {
                let mut f = zero_vec(nvar);
                for (k, &(i, j)) in pairs.iter().enumerate() {
                    f[k] = algebra.structure_constant(i, j)[g].clone();
                }
                f
            }),
        );
        if !cocycles.contains_subspace(&coboundaries) {
            return Err(Error::Internal("coboundaries are not cocycles".into()));
        }
        dims[slot] = cocycles.dim() - coboundaries.dim();
    }
    Ok((dims[0], dims[1]))
}

/// The map `M(L) -> M(L/N)` induced by the projection, for a central `N`.
#[derive(Clone, Debug)]
pub struct InducedMap {
    /// Rows: representatives of `M(L/N)`; columns: representatives of `M(L)`.
    pub matrix: Matrix,
    pub source: MultiplierResult,
    pub target: MultiplierResult,
    pub quotient: LieSuperalgebra,
    pub rank: usize,
    pub injective: bool,
    pub kernel_dim: usize,
    pub coker_dim: usize,
    /// Graded dims of `N ∩ L²`.
    pub n_cap_derived: (usize, usize),
}

impl InducedMap {
    pub fn n_cap_derived_dim(&self) -> usize {
        self.n_cap_derived.0 + self.n_cap_derived.1
    }
}

pub fn induced_multiplier_map(algebra: &LieSuperalgebra, n: &GradedSubspace) -> Result<InducedMap> {
    algebra.check_central(n)?;
    algebra.check_ideal(n)?;
    let quotient = algebra.quotient(n)?;
    let proj = Projection::new(algebra, n);
    let d = algebra.dim();
    let images: Vec<Vec<Scalar>> = (0..d).map(|i| proj.apply(&unit_vec(d, i))).collect();

    let source = schur_multiplier(algebra)?;
    let target = schur_multiplier(&quotient)?;
    let c2 = Chain2Space::new(algebra);
    let c2q = Chain2Space::new(&quotient);

    let mut columns = Vec::new();
    for rep in &source.representatives {
        let mut image = zero_vec(c2q.len());
        for (k, c) in rep.chain.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let w = c2.basis()[k];
            axpy(&mut image, c, &c2q.wedge(&images[w.i], &images[w.j]));
        }
        columns.push(target.class_of(&image)?);
    }
    let matrix = Matrix::from_columns(target.total(), &columns);
    let rank = matrix.rank();
    let derived = algebra.derived_subalgebra();
    Ok(InducedMap {
        rank,
        injective: rank == source.total(),
        kernel_dim: source.total() - rank,
        coker_dim: target.total() - rank,
        n_cap_derived: n.intersection_dims(&derived),
        matrix,
        source,
        target,
        quotient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn l12_3() -> LieSuperalgebra {
        LieSuperalgebra::builder("L12_3")
            .even(&["a"])
            .odd(&["α", "β"])
            .bracket("a", "β", &[("α", 1)])
            .build()
            .unwrap()
    }

    fn h01() -> LieSuperalgebra {
        LieSuperalgebra::builder("H(0,1)")
            .even(&["a"])
            .odd(&["α"])
            .bracket("α", "α", &[("a", 1)])
            .build()
            .unwrap()
    }

    fn labels(l: &LieSuperalgebra) -> Vec<String> {
        chain2_basis(l).iter().map(|w| w.label(l)).collect()
    }

    #[test]
    fn chain2_enumeration() {
        let l = l12_3();
        assert_eq!(labels(&l), ["a∧α", "a∧β", "α∧α", "α∧β", "β∧β"]);
        assert_eq!(chain2_basis(&LieSuperalgebra::abelian(4, 0)).len(), 6);
        assert_eq!(chain2_basis(&LieSuperalgebra::abelian(2, 2)).len(), 8);
    }

    #[test]
    fn chain3_count_formula() {
        let binom = |n: usize, k: usize| -> usize {
            if k > n {
                return 0;
            }
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        };
        for m in 0..5 {
            for n in 0..5 {
                let l = LieSuperalgebra::abelian(m, n);
                let expected =
                    binom(m, 3) + binom(m, 2) * n + m * binom(n + 1, 2) + binom(n + 2, 3);
                assert_eq!(chain3_basis(&l).len(), expected, "({m}|{n})");
            }
        }
    }

    #[test]
    fn wedge_sign_rules() {
        let l = l12_3();
        let c2 = Chain2Space::new(&l);
        // α∧a = -a∧α (even-odd), β∧α = α∧β (odd-odd), a∧a absent
        assert_eq!(
            c2.format_chain(&c2.wedge(&unit_vec(3, 1), &unit_vec(3, 0))),
            "-a∧α"
        );
        assert_eq!(
            c2.format_chain(&c2.wedge(&unit_vec(3, 2), &unit_vec(3, 1))),
            "α∧β"
        );
        assert_eq!(
            c2.format_chain(&c2.wedge(&unit_vec(3, 0), &unit_vec(3, 0))),
            "0"
        );
        let h = LieSuperalgebra::abelian(2, 0);
        let c2h = Chain2Space::new(&h);
        assert_eq!(
            c2h.format_chain(&c2h.wedge(&unit_vec(2, 1), &unit_vec(2, 0))),
            "-x1∧x2"
        );
    }

    #[test]
    fn d2_columns_are_brackets() {
        let d2 = d2_matrix(&l12_3());
        // only a∧β (column 1) is nonzero, mapping to α
        for c in 0..5 {
            let expected = if c == 1 { unit_vec(3, 1) } else { zero_vec(3) };
            assert_eq!(d2.column(c), expected);
        }
        assert!(d2_matrix(&LieSuperalgebra::abelian(2, 2)).is_zero());
    }

    #[test]
    fn d3_image_for_l12_3() {
        let l = l12_3();
        let d3 = d3_matrix(&l).unwrap();
        let img = Subspace::span(5, d3.columns());
        let c2 = Chain2Space::new(&l);
        let expected = Subspace::span(5, [unit_vec(5, 2), unit_vec(5, 3)]);
        assert_eq!(
            img,
            expected,
            "image: {:?}",
            img.basis()
                .iter()
                .map(|v| c2.format_chain(v))
                .collect::<Vec<_>>()
        );
        assert!(d3_matrix(&LieSuperalgebra::abelian(2, 2))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn multiplier_of_l12_3_matches_worked_example() {
        let l = l12_3();
        let m = schur_multiplier(&l).unwrap();
        assert_eq!(m.dims(), (1, 1));
        let desc = m.describe(&l);
        assert_eq!(
            desc,
            vec![
                (Parity::Odd, "a∧α".to_string()),
                (Parity::Even, "β∧β".to_string())
            ]
        );
        let d2 = d2_matrix(&l);
        for r in &m.representatives {
            assert!(is_zero_vec(&d2.mul_vec(&r.chain)));
        }
        assert_eq!(schur_multiplier_cochain_oracle(&l).unwrap(), (1, 1));
    }

    #[test]
    fn multiplier_of_h01_vanishes() {
        let l = h01();
        assert_eq!(schur_multiplier(&l).unwrap().dims(), (0, 0));
        assert_eq!(schur_multiplier_cochain_oracle(&l).unwrap(), (0, 0));
    }

    #[test]
    fn abelian_multiplier_counts() {
        let a = LieSuperalgebra::abelian(1, 1);
        let m = schur_multiplier(&a).unwrap();
        assert_eq!(m.dims(), (1, 1));
        assert_eq!(schur_multiplier_cochain_oracle(&a).unwrap(), (1, 1));
        let a = LieSuperalgebra::abelian(2, 3);
        assert_eq!(schur_multiplier(&a).unwrap().total(), 13);
    }

    #[test]
    fn cochain_oracle_heisenberg() {
        let h = LieSuperalgebra::builder("H(1,0)")
            .even(&["e1", "e2", "e3"])
            .bracket("e1", "e2", &[("e3", 1)])
            .build()
            .unwrap();
        assert_eq!(schur_multiplier_cochain_oracle(&h).unwrap(), (2, 0));
        assert_eq!(schur_multiplier(&h).unwrap().dims(), (2, 0));
    }

    #[test]
    fn d3_rejects_invalid_algebra() {
        let j = LieSuperalgebra::builder("j")
            .even(&["a"])
            .odd(&["α"])
            .bracket("a", "α", &[("α", 1)])
            .bracket("α", "α", &[("a", 1)])
            .build()
            .unwrap();
        assert!(matches!(d3_matrix(&j), Err(Error::Internal(_))));
    }

    #[test]
    fn induced_map_heisenberg_center() {
        let h = LieSuperalgebra::builder("H(1,0)")
            .even(&["e1", "e2", "e3"])
            .bracket("e1", "e2", &[("e3", 1)])
            .build()
            .unwrap();
        let map = induced_multiplier_map(&h, &h.center()).unwrap();
        assert_eq!(map.source.total(), 2);
        assert_eq!(map.target.total(), 1);
        assert!(!map.injective);
        assert_eq!(map.kernel_dim, 2);
        assert_eq!(map.coker_dim, 1);
        assert_eq!(map.n_cap_derived_dim(), 1);

        let zero = induced_multiplier_map(&h, &GradedSubspace::zero(&h)).unwrap();
        assert!(zero.injective);
        assert_eq!(zero.matrix, Matrix::identity(2));
    }

    #[test]
    fn induced_map_rejects_non_central() {
        let h = LieSuperalgebra::builder("H(1,0)")
            .even(&["e1", "e2", "e3"])
            .bracket("e1", "e2", &[("e3", 1)])
            .build()
            .unwrap();
        let n = GradedSubspace::graded_hull(&h, [vec![q(1), q(0), q(0)]]);
        assert!(matches!(
            induced_multiplier_map(&h, &n),
            Err(Error::NotCentral(_))
        ));
    }
}
