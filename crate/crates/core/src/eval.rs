//! Evaluation of polynomials at matrix–vector points `(X, v)`.
//!
//! `xi ↦ Xi` and `xi* ↦ Xiᵀ` extends to a unital *-homomorphism from the
//! free *-algebra to real `n × n` matrices; `p(X) v = 0` for all `p` in a
//! set `S` is what membership of `(X, v)` in the zero set `V(S)` means.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::linalg::dense::Mat;
use crate::poly::{Polynomial, Q};
use crate::word::Word;

pub use crate::linalg::dense::common_kernel;

#[derive(Clone, Debug, PartialEq)]
pub struct MatrixPoint {
    pub n: usize,
    /// `X1..Xg`, each `n × n`.
    pub mats: Vec<Mat>,
    pub v: Vec<f64>,
}

impl MatrixPoint {
    pub fn new(mats: Vec<Mat>, v: Vec<f64>) -> Result<MatrixPoint> {
        let n = v.len();
        if n == 0 {
            return Err(Error::Dimension(String::from("empty vector")));
        }
        for (i, m) in mats.iter().enumerate() {
            if m.rows() != n || m.cols() != n {
                return Err(Error::Dimension(format!("X{} is {}x{} but v has length {n}", i + 1, m.rows(), m.cols())));
            }
        }
        Ok(MatrixPoint { n, mats, v })
    }

    pub fn num_vars(&self) -> usize {
        self.mats.len()
    }

    fn check(&self, p: &Polynomial) -> Result<()> {
        if self.v.len() != self.n || self.mats.iter().any(|m| m.rows() != self.n || m.cols() != self.n) {
            return Err(Error::Dimension(format!("inconsistent point of size {}", self.n)));
        }
        let need = p.max_var();
        if need > self.mats.len() {
            return Err(Error::Dimension(format!(
                "polynomial uses x{need} but the point has {} matrices",
                self.mats.len()
            )));
        }
        Ok(())
    }

    fn letter_matrices(&self) -> Vec<Mat> {
        self.mats.iter().flat_map(|m| [m.clone(), m.transpose()]).collect()
    }
}

fn q_to_f64(q: &Q) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

fn word_matrix(w: &Word, letters: &[Mat], n: usize) -> Mat {
    let mut acc = Mat::identity(n);
    for l in w.iter() {
        acc = acc.matmul(&letters[l.code()]);
    }
    acc
}

/// `p(X)`.
pub fn evaluate(p: &Polynomial, pt: &MatrixPoint) -> Result<Mat> {
    pt.check(p)?;
    let letters = pt.letter_matrices();
    let mut out = Mat::zeros(pt.n, pt.n);
    for (w, c) in p.terms() {
        out = out.add(&word_matrix(w, &letters, pt.n).scale(q_to_f64(c)));
    }
    Ok(out)
}

/// `p(X) v`, computed right to left with matrix–vector products only.
pub fn apply(p: &Polynomial, pt: &MatrixPoint) -> Result<Vec<f64>> {
    pt.check(p)?;
    let letters = pt.letter_matrices();
    let mut out = alloc::vec![0.0; pt.n];
    for (w, c) in p.terms() {
        let mut y = pt.v.clone();
        for l in w.letters().iter().rev() {
            y = letters[l.code()].matvec(&y);
        }
        let c = q_to_f64(c);
        for (o, yi) in out.iter_mut().zip(&y) {
            *o += c * yi;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn nil() -> MatrixPoint {
        MatrixPoint::new(
            alloc::vec![Mat::from_rows(&[alloc::vec![0.0, 1.0], alloc::vec![0.0, 0.0]])],
            alloc::vec![1.0, 0.0],
        )
        .unwrap()
    }

    #[test]
    fn nilpotent_kills_e1() {
        let p = parse_poly("x1", 1).unwrap();
        assert_eq!(apply(&p, &nil()).unwrap(), alloc::vec![0.0, 0.0]);
    }

    #[test]
    fn example_commutator_point() {
        let p = parse_poly("x1 x1* - x1* x1 - 1", 1).unwrap();
        let m = evaluate(&p, &nil()).unwrap();
        assert_eq!(m, Mat::diag(&[0.0, -2.0]));
        assert_eq!(apply(&p, &nil()).unwrap(), alloc::vec![0.0, 0.0]);
    }

    #[test]
    fn unit_is_identity() {
        assert_eq!(evaluate(&Polynomial::one(1), &nil()).unwrap(), Mat::identity(2));
    }

    #[test]
    fn dimension_errors() {
        let p = parse_poly("x2", 2).unwrap();
        assert!(matches!(evaluate(&p, &nil()), Err(Error::Dimension(_))));
        assert!(MatrixPoint::new(alloc::vec![Mat::identity(3)], alloc::vec![1.0, 0.0]).is_err());
    }
}
