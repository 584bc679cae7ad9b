//! Factorization of homogeneous polynomials into irreducibles.
//!
//! A homogeneous `p` of degree `d` factors as `p1 p2` with `deg p1 = d1`
//! exactly when its `(d1, d − d1)`-Gram matrix has rank one; writing that
//! matrix as `α βᵀ` gives `p1 = Σ αᵢ wᵢ*` and `p2 = Σ βⱼ uⱼ`. Peeling off
//! the left factor with the smallest such `d1` repeatedly yields a
//! factorization into irreducibles, unique up to scalars.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gram::gram_matrix;
use crate::linalg::exact::{self, QMatrix};
use crate::poly::{Polynomial, Q};

/// `scalar · factors[0] ⋯ factors[k-1]` with monic, irreducible factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub scalar: Q,
    pub factors: Vec<Polynomial>,
}

impl Factorization {
    pub fn product(&self, g: usize) -> Polynomial {
        Polynomial::product(&self.factors, g).scale(&self.scalar)
    }
}

impl fmt::Display for Factorization {
    /// `scalar · (f1)·(f2)·…`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.scalar)?;
        for (i, p) in self.factors.iter().enumerate() {
            f.write_str(if i == 0 { " · " } else { "·" })?;
            write!(f, "({p})")?;
        }
        Ok(())
    }
}

fn check_nonconstant_homogeneous(p: &Polynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    match p.degree() {
        Some(0) | None => Err(Error::ConstantPolynomial),
        Some(d) => Ok(d),
    }
}

/// Rank of the nonzero block of a sparse-ish rational matrix.
fn block_rank(a: &QMatrix) -> usize {
    let rows: Vec<usize> = (0..a.len()).filter(|&i| a[i].iter().any(|x| !x.is_zero())).collect();
    if rows.is_empty() {
        return 0;
    }
    let ncols = a[0].len();
    let cols: Vec<usize> = (0..ncols).filter(|&j| rows.iter().any(|&i| !a[i][j].is_zero())).collect();
    let sub: QMatrix = rows.iter().map(|&i| cols.iter().map(|&j| a[i][j].clone()).collect()).collect();
    exact::rank(&sub)
}

/// `Some((p1, p2))` with `p = p1 p2`, `deg p1 = d1`, when the
/// `(d1, deg p − d1)`-Gram matrix has rank one. `α` is taken from the
/// first nonzero row, normalised to 1 there, and `β` is that row.
pub fn rank_one_split(p: &Polynomial, d1: usize) -> Result<Option<(Polynomial, Polynomial)>> {
    let d = check_nonconstant_homogeneous(p)?;
    if d1 == 0 || d1 >= d {
        return Err(Error::InvalidArgument(alloc::format!("split degree {d1} must lie in 1..{d}")));
    }
    let gram = gram_matrix(p, d1, d - d1)?;
    if block_rank(&gram.entries) != 1 {
        return Ok(None);
    }
    let g = gram.g;
    let r0 = gram.entries.iter().position(|r| r.iter().any(|x| !x.is_zero())).unwrap();
    let c0 = gram.entries[r0].iter().position(|x| !x.is_zero()).unwrap();
    let pivot = gram.entries[r0][c0].clone();
    let mut p1 = Polynomial::zero(g);
    for (i, w) in gram.row_basis.iter().enumerate() {
        let a = &gram.entries[i][c0];
        if !a.is_zero() {
            p1.add_term(w.star(), a / &pivot);
        }
    }
    let mut p2 = Polynomial::zero(g);
    for (j, w) in gram.col_basis.iter().enumerate() {
        let b = &gram.entries[r0][j];
        if !b.is_zero() {
            p2.add_term(w.clone(), b.clone());
        }
    }
    Ok(Some((p1.with_num_vars(p.num_vars()), p2.with_num_vars(p.num_vars()))))
}

/// `p / lc(p)` and `lc(p)`, where `lc` is the coefficient of the largest word.
pub fn make_monic(p: &Polynomial) -> (Polynomial, Q) {
    match p.leading_term() {
        None => (p.clone(), Q::one()),
        Some((_, c)) => {
            let c = c.clone();
            (p.scale(&(Q::one() / &c)), c)
        }
    }
}

/// Split off the leftmost irreducible factor (smallest `d1`), if `p` is
/// reducible.
fn peel(p: &Polynomial) -> Result<Option<(Polynomial, Polynomial)>> {
    let d = check_nonconstant_homogeneous(p)?;
    for d1 in 1..d {
        if let Some(split) = rank_one_split(p, d1)? {
            return Ok(Some(split));
        }
    }
    Ok(None)
}

pub fn factor_homogeneous(p: &Polynomial) -> Result<Factorization> {
    check_nonconstant_homogeneous(p)?;
    let mut scalar = Q::one();
    let mut factors = Vec::new();
    let mut rest = p.clone();
    loop {
        match peel(&rest)? {
            Some((left, right)) => {
                let (m, c) = make_monic(&left);
                scalar *= c;
                factors.push(m);
                rest = right;
            }
            None => {
                let (m, c) = make_monic(&rest);
                scalar *= c;
                factors.push(m);
                break;
            }
        }
    }
    Ok(Factorization { scalar, factors })
}

pub fn is_irreducible_homogeneous(p: &Polynomial) -> Result<bool> {
    Ok(peel(p)?.is_none())
}

/// `Some(λ)` with `p = λ q` and `λ ≠ 0`.
pub fn scalar_multiple_of(p: &Polynomial, q: &Polynomial) -> Option<Q> {
    if p.is_zero() || q.is_zero() || p.len() != q.len() {
        return None;
    }
    let (w, c) = q.leading_term()?;
    let lambda = p.coeff(w) / c;
    if lambda.is_zero() {
        return None;
    }
    q.terms().all(|(w, c)| p.coeff(w) == c * &lambda).then_some(lambda)
}
