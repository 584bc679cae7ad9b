//! Exact linear algebra over the rationals.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Q;

/// Dense rational matrix as a list of rows.
pub type QMatrix = Vec<Vec<Q>>;

/// Rank by fraction-free (Bareiss) elimination. Rows are first scaled to
/// integers so every intermediate value stays in `ℤ`.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r)).collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

fn integer_row(row: &[Q]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    row.iter().map(|q| q.numer() * (&l / q.denom())).collect()
}

/// `A[perm[i]][perm[j]] = Σ_k l[i][k] d[k] l[j][k]` with `l` unit lower
/// triangular and `d ≥ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Ldlt {
    pub perm: Vec<usize>,
    pub l: QMatrix,
    pub d: Vec<Q>,
}

impl Ldlt {
    pub fn rank(&self) -> usize {
        self.d.iter().filter(|x| !x.is_zero()).count()
    }

    /// Rebuild `A` from the factors.
    pub fn reconstruct(&self) -> QMatrix {
        let n = self.perm.len();
        let mut a = vec![vec![Q::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = Q::zero();
                for k in 0..n {
                    if !self.d[k].is_zero() && !self.l[i][k].is_zero() && !self.l[j][k].is_zero() {
                        s += &self.l[i][k] * &self.d[k] * &self.l[j][k];
                    }
                }
                a[self.perm[i]][self.perm[j]] = s;
            }
        }
        a
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum PsdCheck {
    Psd(Ldlt),
    /// `cᵀ A c < 0`.
    NotPsd(Vec<Q>),
}

impl PsdCheck {
    pub fn is_psd(&self) -> bool {
        matches!(self, PsdCheck::Psd(_))
    }
}

pub fn is_symmetric(a: &[Vec<Q>]) -> bool {
    let n = a.len();
    a.iter().all(|r| r.len() == n) && (0..n).all(|i| (0..i).all(|j| a[i][j] == a[j][i]))
}

/// `xᵀ A x`.
pub fn quad_form(a: &[Vec<Q>], x: &[Q]) -> Q {
    let mut s = Q::zero();
    for (i, row) in a.iter().enumerate() {
        if x[i].is_zero() {
            continue;
        }
        for (j, aij) in row.iter().enumerate() {
            if !x[j].is_zero() && !aij.is_zero() {
                s += &x[i] * aij * &x[j];
            }
        }
    }
    s
}

/// Exact positive-semidefiniteness test by symmetric `LDLᵀ` with diagonal
/// pivoting.
///
/// At each step a negative diagonal entry of the current Schur complement
/// yields a witness; otherwise the first positive diagonal entry is the
/// pivot. When only zero diagonals remain, any nonzero off-diagonal entry
/// yields a witness; if there is none the remaining block is zero and the
/// matrix is PSD. Witnesses on the Schur complement are lifted back to the
/// original coordinates, so `cᵀ A c < 0` can be checked directly.
pub fn psd_check_exact(a: &[Vec<Q>]) -> Result<PsdCheck> {
    if !is_symmetric(a) {
        return Err(Error::NotSymmetric);
    }
    let n = a.len();
    let mut s: QMatrix = a.to_vec();
    let mut active = vec![true; n];
    let mut pivots: Vec<usize> = Vec::new();
    // multipliers[k][i] = s[i][p_k] / s[p_k][p_k] at the time p_k was eliminated
    let mut multipliers: Vec<Vec<Q>> = Vec::new();
    let mut d: Vec<Q> = Vec::new();

    loop {
        let act: Vec<usize> = (0..n).filter(|&i| active[i]).collect();
        if let Some(&i) = act.iter().find(|&&i| s[i][i].is_negative()) {
            let mut y = vec![Q::zero(); n];
            y[i] = Q::one();
            return Ok(PsdCheck::NotPsd(lift_witness(a, &pivots, &active, y)));
        }
        let Some(&p) = act.iter().find(|&&i| s[i][i].is_positive()) else {
            for &i in &act {
                for &j in &act {
                    if i != j && !s[i][j].is_zero() {
                        let mut y = vec![Q::zero(); n];
                        y[i] = Q::one();
                        y[j] = if s[i][j].is_positive() { -Q::one() } else { Q::one() };
                        return Ok(PsdCheck::NotPsd(lift_witness(a, &pivots, &active, y)));
                    }
                }
            }
            break;
        };
        let piv = s[p][p].clone();
        let mut col = vec![Q::zero(); n];
        for &i in &act {
            if i != p && !s[i][p].is_zero() {
                col[i] = &s[i][p] / &piv;
            }
        }
        for &i in &act {
            if i == p || col[i].is_zero() {
                continue;
            }
            for &j in &act {
                if j == p || s[p][j].is_zero() {
                    continue;
                }
                let delta = &col[i] * &s[p][j];
                s[i][j] -= delta;
            }
        }
        active[p] = false;
        pivots.push(p);
        multipliers.push(col);
        d.push(piv);
    }

    let mut perm = pivots.clone();
    perm.extend((0..n).filter(|&i| active[i]));
    let mut pos = vec![0; n];
    for (k, &i) in perm.iter().enumerate() {
        pos[i] = k;
    }
    let mut l = vec![vec![Q::zero(); n]; n];
    for (k, col) in multipliers.iter().enumerate() {
        l[k][k] = Q::one();
        for (i, v) in col.iter().enumerate() {
            if !v.is_zero() {
                l[pos[i]][k] = v.clone();
            }
        }
    }
    for k in multipliers.len()..n {
        l[k][k] = Q::one();
        d.push(Q::zero());
    }
    Ok(PsdCheck::Psd(Ldlt { perm, l, d }))
}

/// Extend `y` (supported on the active set) by `x_P = -A_PP⁻¹ A_PR y`, which
/// makes `xᵀ A x` equal to `yᵀ S y` for the Schur complement `S`.
fn lift_witness(a: &[Vec<Q>], pivots: &[usize], active: &[bool], mut y: Vec<Q>) -> Vec<Q> {
    if pivots.is_empty() {
        return y;
    }
    let k = pivots.len();
    let rest: Vec<usize> = (0..a.len()).filter(|&i| active[i]).collect();
    let app: QMatrix = pivots.iter().map(|&i| pivots.iter().map(|&j| a[i][j].clone()).collect()).collect();
    let rhs: Vec<Q> = pivots.iter().map(|&i| rest.iter().fold(Q::zero(), |acc, &j| acc + &a[i][j] * &y[j])).collect();
    let z = solve_square(app, rhs).expect("pivot block is positive definite");
    for t in 0..k {
        y[pivots[t]] = -z[t].clone();
    }
    y
}

/// Solve a nonsingular square system by Gauss-Jordan elimination.
pub fn solve_square(mut m: QMatrix, mut b: Vec<Q>) -> Option<Vec<Q>> {
    let n = m.len();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        b.swap(c, p);
        let inv = Q::one() / &m[c][c];
        for j in c..n {
            m[c][j] = &m[c][j] * &inv;
        }
        b[c] = &b[c] * &inv;
        for i in 0..n {
            if i == c || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in c..n {
                let delta = &f * &m[c][j];
                m[i][j] -= delta;
            }
            let delta = &f * &b[c];
            b[i] -= delta;
        }
    }
    Some(b)
}

/// One linear equation `Σ entries[c] · x_c = rhs`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SparseRow {
    pub entries: BTreeMap<usize, Q>,
    pub rhs: Q,
}

impl SparseRow {
    pub fn new() -> SparseRow {
        SparseRow::default()
    }

    pub fn add(&mut self, col: usize, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.entries.entry(col).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.entries.remove(&col);
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.entries.is_empty()
    }

    /// `self -= f · other`.
    fn sub_scaled(&mut self, f: &Q, other: &SparseRow) {
        for (c, v) in &other.entries {
            self.add(*c, -(f * v));
        }
        self.rhs -= f * &other.rhs;
    }
}

/// Reduced row echelon form of a sparse system.
///
/// Every stored row has coefficient 1 on its pivot column and no entry on
/// any other pivot column.
#[derive(Clone, Debug)]
pub struct Rref {
    pub ncols: usize,
    /// `(pivot column, row)`, ordered by pivot column.
    pub rows: BTreeMap<usize, SparseRow>,
    pub consistent: bool,
}

impl Rref {
    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.rows.contains_key(c)).collect()
    }

    /// Value of `col` when every free column is set from `free`.
    pub fn evaluate(&self, col: usize, free: &BTreeMap<usize, Q>) -> Q {
        match self.rows.get(&col) {
            None => free.get(&col).cloned().unwrap_or_else(Q::zero),
            Some(row) => {
                let mut v = row.rhs.clone();
                for (c, a) in &row.entries {
                    if *c != col {
                        if let Some(x) = free.get(c) {
                            v -= a * x;
                        }
                    }
                }
                v
            }
        }
    }

    /// `Some(value)` when `col` is pinned to a constant by the system.
    pub fn fixed_value(&self, col: usize) -> Option<Q> {
        let row = self.rows.get(&col)?;
        if row.entries.len() == 1 {
            Some(row.rhs.clone())
        } else {
            None
        }
    }
}

/// Incremental Gauss-Jordan elimination.
///
/// Pivots are chosen per row as the entry whose column has the smallest
/// `priority`; giving some columns a lower priority value makes them pivot
/// first, so rows whose pivot lies in the remaining columns involve only
/// those columns.
pub fn rref(ncols: usize, rows: impl IntoIterator<Item = SparseRow>, priority: impl Fn(usize) -> usize) -> Rref {
    let mut out = Rref { ncols, rows: BTreeMap::new(), consistent: true };
    // column -> pivot columns whose row has a nonzero entry there
    let mut occurs: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for mut row in rows {
        let hits: Vec<usize> = row.entries.keys().copied().filter(|c| out.rows.contains_key(c)).collect();
        for c in hits {
            let f = match row.entries.get(&c) {
                Some(f) => f.clone(),
                None => continue,
            };
            row.sub_scaled(&f, &out.rows[&c]);
        }
        if row.is_trivial() {
            if !row.rhs.is_zero() {
                out.consistent = false;
            }
            continue;
        }
        let piv = *row.entries.keys().min_by_key(|&&c| (priority(c), c)).unwrap();
        let inv = Q::one() / &row.entries[&piv];
        for v in row.entries.values_mut() {
            *v *= &inv;
        }
        row.rhs *= &inv;
        // clear the new pivot column from existing rows
        if let Some(users) = occurs.remove(&piv) {
            for pc in users {
                let existing = out.rows.get_mut(&pc).unwrap();
                let Some(f) = existing.entries.get(&piv).cloned() else { continue };
                let before: BTreeSet<usize> = existing.entries.keys().copied().collect();
                existing.sub_scaled(&f, &row);
                let after: BTreeSet<usize> = existing.entries.keys().copied().collect();
                for c in before.difference(&after) {
                    if let Some(s) = occurs.get_mut(c) {
                        s.remove(&pc);
                    }
                }
                for c in after.difference(&before) {
                    occurs.entry(*c).or_default().insert(pc);
                }
            }
        }
        for &c in row.entries.keys() {
            if c != piv {
                occurs.entry(c).or_default().insert(piv);
            }
        }
        out.rows.insert(piv, row);
    }
    out
}
