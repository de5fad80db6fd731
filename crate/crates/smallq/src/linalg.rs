//! Exact linear algebra over cyclotomic fields.
//!
//! Matrices are stored as sorted sparse rows. Elimination is pivot-normalized
//! Gauss-Jordan with pivot-row selection by sparsity; since all arithmetic is
//! exact, the only contract is correctness of the reduced echelon form, which
//! is the canonical form used to decide subspace equality.

use crate::cyc::CycNum;
use crate::error::EngineError;

/// A sparse row: sorted (column, value) pairs with nonzero values.
pub type SparseRow = Vec<(usize, CycNum)>;

fn row_trim(row: &mut SparseRow) {
    row.retain(|(_, v)| !v.is_zero());
}

/// row_a − c·row_b, both sorted.
fn row_axpy(a: &SparseRow, c: &CycNum, b: &SparseRow) -> Result<SparseRow, EngineError> {
    let mut out: SparseRow = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((ca, va)), Some((cb, vb))) => {
                if ca < cb {
                    out.push((*ca, va.clone()));
                    i += 1;
                } else if cb < ca {
                    let v = vb.mul(c)?.neg();
                    if !v.is_zero() {
                        out.push((*cb, v));
                    }
                    j += 1;
                } else {
                    let v = va.sub(&vb.mul(c)?)?;
                    if !v.is_zero() {
                        out.push((*ca, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            (Some((ca, va)), None) => {
                out.push((*ca, va.clone()));
                i += 1;
            }
            (None, Some((cb, vb))) => {
                let v = vb.mul(c)?.neg();
                if !v.is_zero() {
                    out.push((*cb, v));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    Ok(out)
}

/// Exact matrix with sparse row storage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub order: u64,
    pub data: Vec<SparseRow>,
}

impl Mat {
    pub fn zero(order: u64, rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            order,
            data: vec![vec![]; rows],
        }
    }

    pub fn identity(order: u64, n: usize) -> Self {
        let mut m = Mat::zero(order, n, n);
        for i in 0..n {
            m.data[i].push((i, CycNum::one(order)));
        }
        m
    }

    pub fn from_rows(order: u64, cols: usize, rows: Vec<SparseRow>) -> Self {
        let mut data = Vec::with_capacity(rows.len());
        for r in rows {
            let mut r = r;
            r.sort_by_key(|(c, _)| *c);
            // merge duplicate columns
            let mut merged: SparseRow = Vec::with_capacity(r.len());
            for (c, v) in r {
                match merged.last_mut() {
                    Some((c2, acc)) if *c2 == c => {
                        *acc = acc.add(&v).unwrap();
                    }
                    _ => merged.push((c, v)),
                }
            }
            row_trim(&mut merged);
            debug_assert!(merged.iter().all(|(c, _)| *c < cols));
            data.push(merged);
        }
        Mat {
            rows: data.len(),
            cols,
            order,
            data,
        }
    }

    pub fn from_dense(order: u64, entries: &[Vec<CycNum>]) -> Self {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        let data = entries
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(c, v)| (c, v.clone()))
                    .collect()
            })
            .collect();
        Mat {
            rows,
            cols,
            order,
            data,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> CycNum {
        match self.data[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(pos) => self.data[i][pos].1.clone(),
            Err(_) => CycNum::zero(self.order),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycNum) {
        match self.data[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(pos) => {
                if v.is_zero() {
                    self.data[i].remove(pos);
                } else {
                    self.data[i][pos].1 = v;
                }
            }
            Err(pos) => {
                if !v.is_zero() {
                    self.data[i].insert(pos, (j, v));
                }
            }
        }
    }

    pub fn transpose(&self) -> Mat {
        let mut data: Vec<SparseRow> = vec![vec![]; self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                data[*j].push((i, v.clone()));
            }
        }
        Mat {
            rows: self.cols,
            cols: self.rows,
            order: self.order,
            data,
        }
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat, EngineError> {
        if self.cols != other.rows {
            return Err(EngineError::ShapeMismatch(format!(
                "mul: {}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data: Vec<SparseRow> = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut acc: SparseRow = vec![];
            for (k, v) in row {
                if other.data[*k].is_empty() {
                    continue;
                }
                // acc += v · other.row(k)
                let neg = v.neg();
                acc = row_axpy(&acc, &neg, &other.data[*k])?;
            }
            data.push(acc);
        }
        Ok(Mat {
            rows: self.rows,
            cols: other.cols,
            order: self.order,
            data,
        })
    }

    pub fn add(&self, other: &Mat) -> Result<Mat, EngineError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(EngineError::ShapeMismatch("add".into()));
        }
        let mut data = Vec::with_capacity(self.rows);
        let minus_one = CycNum::from_integer(self.order, -1);
        for i in 0..self.rows {
            data.push(row_axpy(&self.data[i], &minus_one, &other.data[i])?);
        }
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            data,
        })
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat, EngineError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(EngineError::ShapeMismatch("sub".into()));
        }
        let mut data = Vec::with_capacity(self.rows);
        let one = CycNum::one(self.order);
        for i in 0..self.rows {
            data.push(row_axpy(&self.data[i], &one, &other.data[i])?);
        }
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            data,
        })
    }

    pub fn scale(&self, c: &CycNum) -> Result<Mat, EngineError> {
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut r: SparseRow = Vec::with_capacity(row.len());
            for (j, v) in row {
                let w = v.mul(c)?;
                if !w.is_zero() {
                    r.push((*j, w));
                }
            }
            data.push(r);
        }
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            data,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    /// Apply to a dense vector (length = cols), returning length-rows vector.
    pub fn apply(&self, v: &[CycNum]) -> Result<Vec<CycNum>, EngineError> {
        if v.len() != self.cols {
            return Err(EngineError::ShapeMismatch("apply".into()));
        }
        let mut out = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut acc = CycNum::zero(self.order);
            for (j, a) in row {
                if !v[*j].is_zero() {
                    acc = acc.add(&a.mul(&v[*j])?)?;
                }
            }
            out.push(acc);
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<CycNum, EngineError> {
        if self.rows != self.cols {
            return Err(EngineError::ShapeMismatch("trace of non-square".into()));
        }
        let mut acc = CycNum::zero(self.order);
        for i in 0..self.rows {
            acc = acc.add(&self.get(i, i))?;
        }
        Ok(acc)
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    pub fn rref(&mut self) -> Result<Vec<usize>, EngineError> {
        let mut pivots: Vec<usize> = Vec::new();
        let mut next_row = 0usize;
        for col in 0..self.cols {
            // pick the sparsest row at or below next_row with a nonzero in col
            let mut best: Option<(usize, usize)> = None;
            for r in next_row..self.rows {
                if let Ok(pos) = self.data[r].binary_search_by_key(&col, |(c, _)| *c) {
                    let _ = pos;
                    let len = self.data[r].len();
                    if best.map_or(true, |(_, blen)| len < blen) {
                        best = Some((r, len));
                    }
                }
            }
            let Some((prow, _)) = best else { continue };
            self.data.swap(next_row, prow);
            // normalize pivot row
            let pivot_val = {
                let pos = self.data[next_row]
                    .binary_search_by_key(&col, |(c, _)| *c)
                    .unwrap();
                self.data[next_row][pos].1.clone()
            };
            if !pivot_val.is_one() {
                let inv = pivot_val.inv()?;
                for (_, v) in self.data[next_row].iter_mut() {
                    *v = v.mul(&inv)?;
                }
            }
            // eliminate everywhere else
            let pivot_row = self.data[next_row].clone();
            for r in 0..self.rows {
                if r == next_row {
                    continue;
                }
                if let Ok(pos) = self.data[r].binary_search_by_key(&col, |(c, _)| *c) {
                    let factor = self.data[r][pos].1.clone();
                    self.data[r] = row_axpy(&self.data[r], &factor, &pivot_row)?;
                }
            }
            pivots.push(col);
            next_row += 1;
            if next_row == self.rows {
                break;
            }
        }
        // move zero rows to the bottom, keep pivot rows ordered by pivot col
        self.data.retain(|r| !r.is_empty());
        self.data
            .sort_by_key(|r| r.first().map_or(usize::MAX, |(c, _)| *c));
        while self.data.len() < self.rows {
            self.data.push(vec![]);
        }
        Ok(pivots)
    }

    pub fn rank(&self) -> Result<usize, EngineError> {
        let mut m = self.clone();
        Ok(m.rref()?.len())
    }

    /// Basis of the right kernel {x : M·x = 0}, canonical (rref) form.
    pub fn kernel(&self) -> Result<Subspace, EngineError> {
        let mut m = self.clone();
        let pivots = m.rref()?;
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis: Vec<SparseRow> = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            // kernel vector: x_free = 1, x_pivot(row) = −entry(row, free)
            let mut v: SparseRow = vec![(free, CycNum::one(self.order))];
            for (ri, pcol) in pivots.iter().enumerate() {
                let entry = m.get(ri, free);
                if !entry.is_zero() {
                    v.push((*pcol, entry.neg()));
                }
            }
            v.sort_by_key(|(c, _)| *c);
            basis.push(v);
        }
        Subspace::from_rows(self.order, self.cols, basis)
    }

    /// Row space as a subspace of k^cols.
    pub fn row_space(&self) -> Result<Subspace, EngineError> {
        Subspace::from_rows(self.order, self.cols, self.data.clone())
    }

    /// Column space as a subspace of k^rows.
    pub fn image(&self) -> Result<Subspace, EngineError> {
        self.transpose().row_space()
    }

    /// One exact solution of M·x = b if consistent, otherwise None.
    pub fn solve(&self, b: &[CycNum]) -> Result<Option<Vec<CycNum>>, EngineError> {
        if b.len() != self.rows {
            return Err(EngineError::ShapeMismatch("solve".into()));
        }
        // augment with b as the last column
        let mut aug = Mat::zero(self.order, self.rows, self.cols + 1);
        for (i, row) in self.data.iter().enumerate() {
            aug.data[i] = row.clone();
            if !b[i].is_zero() {
                aug.data[i].push((self.cols, b[i].clone()));
            }
        }
        let pivots = aug.rref()?;
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![CycNum::zero(self.order); self.cols];
        for (ri, pcol) in pivots.iter().enumerate() {
            x[*pcol] = aug.get(ri, self.cols);
        }
        Ok(Some(x))
    }
}

/// An exact subspace of k^ambient, stored as a reduced-echelon basis.
/// Two subspaces are equal iff their stored bases are identical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub ambient: usize,
    pub order: u64,
    /// rref basis, no zero rows, rows sorted by pivot column.
    pub basis: Mat,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_rows(order: u64, ambient: usize, rows: Vec<SparseRow>) -> Result<Self, EngineError> {
        let mut m = Mat::from_rows(order, ambient, rows);
        let pivots = m.rref()?;
        m.data.truncate(pivots.len());
        m.rows = pivots.len();
        Ok(Subspace {
            ambient,
            order,
            basis: m,
            pivots,
        })
    }

    pub fn zero(order: u64, ambient: usize) -> Self {
        Subspace {
            ambient,
            order,
            basis: Mat::zero(order, 0, ambient),
            pivots: vec![],
        }
    }

    pub fn full(order: u64, ambient: usize) -> Self {
        Subspace {
            ambient,
            order,
            basis: Mat::identity(order, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn contains_vector(&self, v: &SparseRow) -> bool {
        // reduce v against the basis; zero remainder means membership
        let mut rem: SparseRow = v.clone();
        rem.sort_by_key(|(c, _)| *c);
        rem.retain(|(_, x)| !x.is_zero());
        for (ri, pcol) in self.pivots.iter().enumerate() {
            if let Ok(pos) = rem.binary_search_by_key(pcol, |(c, _)| *c) {
                let factor = rem[pos].1.clone();
                rem = row_axpy(&rem, &factor, &self.basis.data[ri]).unwrap();
            }
        }
        rem.is_empty()
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, EngineError> {
        if self.ambient != other.ambient {
            return Err(EngineError::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(other
            .basis
            .data
            .iter()
            .all(|row| self.contains_vector(row)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, EngineError> {
        if self.ambient != other.ambient {
            return Err(EngineError::AmbientMismatch(self.ambient, other.ambient));
        }
        let mut rows = self.basis.data.clone();
        rows.extend(other.basis.data.clone());
        Subspace::from_rows(self.order, self.ambient, rows)
    }

    /// Zassenhaus: rref of [U | U; V | 0] yields the sum in the left block
    /// and the intersection in the right block of the zero-left rows.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, EngineError> {
        if self.ambient != other.ambient {
            return Err(EngineError::AmbientMismatch(self.ambient, other.ambient));
        }
        let amb = self.ambient;
        let mut rows: Vec<SparseRow> = Vec::new();
        for row in &self.basis.data {
            let mut r = row.clone();
            for (c, v) in row {
                r.push((c + amb, v.clone()));
            }
            rows.push(r);
        }
        for row in &other.basis.data {
            rows.push(row.clone());
        }
        let mut m = Mat::from_rows(self.order, 2 * amb, rows);
        m.rref()?;
        let mut inter_rows: Vec<SparseRow> = Vec::new();
        for row in &m.data {
            if row.is_empty() {
                continue;
            }
            if row.first().unwrap().0 >= amb {
                inter_rows.push(row.iter().map(|(c, v)| (c - amb, v.clone())).collect());
            }
        }
        Subspace::from_rows(self.order, amb, inter_rows)
    }

    /// Coordinates of v in this basis, if v lies in the subspace.
    pub fn coordinates(&self, v: &SparseRow) -> Option<Vec<CycNum>> {
        let mut rem: SparseRow = v.clone();
        rem.sort_by_key(|(c, _)| *c);
        rem.retain(|(_, x)| !x.is_zero());
        let mut coords = vec![CycNum::zero(self.order); self.dim()];
        for (ri, pcol) in self.pivots.iter().enumerate() {
            if let Ok(pos) = rem.binary_search_by_key(pcol, |(c, _)| *c) {
                let factor = rem[pos].1.clone();
                coords[ri] = factor.clone();
                rem = row_axpy(&rem, &factor, &self.basis.data[ri]).unwrap();
            }
        }
        if rem.is_empty() {
            Some(coords)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyc::QContext;

    fn c(order: u64, n: i64) -> CycNum {
        CycNum::from_integer(order, n)
    }

    #[test]
    fn rref_identity() {
        let m = Mat::identity(3, 2);
        let mut mm = m.clone();
        let piv = mm.rref().unwrap();
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(mm, m);
    }

    #[test]
    fn rref_zero_matrix() {
        let mut m = Mat::zero(3, 3, 5);
        let piv = m.rref().unwrap();
        assert!(piv.is_empty());
    }

    #[test]
    fn rank_one_over_cyclotomic() {
        // [[1, ζ], [ζ⁻¹, 1]] has rank 1 over Q(ζ_5): row2 = ζ⁻¹·row1
        let ctx = QContext::new(5);
        let m = Mat::from_dense(
            5,
            &[
                vec![ctx.one(), ctx.q_pow(1)],
                vec![ctx.q_pow(-1), ctx.one()],
            ],
        );
        assert_eq!(m.rank().unwrap(), 1);
    }

    #[test]
    fn kernel_identity_trivial() {
        let m = Mat::identity(3, 4);
        assert_eq!(m.kernel().unwrap().dim(), 0);
    }

    #[test]
    fn image_zero_trivial() {
        let m = Mat::zero(3, 4, 2);
        assert_eq!(m.image().unwrap().dim(), 0);
    }

    #[test]
    fn kernel_rank_one_3x3() {
        // rank-1 3×3 matrix: kernel has dim 2 (rank-nullity)
        let m = Mat::from_dense(
            3,
            &[
                vec![c(3, 1), c(3, 2), c(3, 3)],
                vec![c(3, 2), c(3, 4), c(3, 6)],
                vec![c(3, -1), c(3, -2), c(3, -3)],
            ],
        );
        assert_eq!(m.rank().unwrap(), 1);
        let ker = m.kernel().unwrap();
        assert_eq!(ker.dim(), 2);
        // M · kernel-basisᵀ = 0
        let prod = m.mul(&ker.basis.transpose()).unwrap();
        assert!(prod.is_zero());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = Mat::from_dense(3, &[vec![c(3, 1), c(3, 1)], vec![c(3, 2), c(3, 2)]]);
        // consistent: b = (1, 2)
        let x = m.solve(&[c(3, 1), c(3, 2)]).unwrap();
        assert!(x.is_some());
        let sol = x.unwrap();
        let b = m.apply(&sol).unwrap();
        assert_eq!(b, vec![c(3, 1), c(3, 2)]);
        // inconsistent: b = (1, 3)
        assert!(m.solve(&[c(3, 1), c(3, 3)]).unwrap().is_none());
    }

    #[test]
    fn subspace_ops_basics() {
        // two distinct lines in a plane: intersection 0, sum the plane
        let u = Subspace::from_rows(3, 2, vec![vec![(0, c(3, 1))]]).unwrap();
        let v = Subspace::from_rows(3, 2, vec![vec![(0, c(3, 1)), (1, c(3, 1))]]).unwrap();
        let inter = u.intersect(&v).unwrap();
        let sum = u.sum(&v).unwrap();
        assert_eq!(inter.dim(), 0);
        assert_eq!(sum.dim(), 2);
        // U ∩ U = U, U ∩ 0 = 0
        assert_eq!(u.intersect(&u).unwrap(), u);
        let zero = Subspace::zero(3, 2);
        assert_eq!(u.intersect(&zero).unwrap(), zero);
        // containment
        assert!(sum.contains(&u).unwrap());
        assert!(!u.contains(&sum).unwrap());
    }

    #[test]
    fn ambient_mismatch_rejected() {
        let u = Subspace::full(3, 2);
        let v = Subspace::full(3, 3);
        assert!(u.intersect(&v).is_err());
        assert!(u.sum(&v).is_err());
    }
}
