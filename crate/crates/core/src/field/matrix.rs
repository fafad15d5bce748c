//! Dense matrices over `Q(z_N)` with exact rank, null space and inverse.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use super::{CyclotomicField, FieldError, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Arc<CyclotomicField>,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: &Arc<CyclotomicField>, rows: usize, cols: usize) -> Self {
        Matrix {
            field: Arc::clone(field),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Arc<CyclotomicField>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// Builds a matrix from rows. Panics if the rows are ragged or empty.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        assert!(r > 0 && !rows[0].is_empty(), "matrix needs at least one entry");
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            field: Arc::clone(rows[0][0].field()),
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, FieldError> {
        assert_eq!(self.cols, other.rows, "matrix shapes do not compose");
        let mut out = Matrix::zeros(self.field(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].try_add(&a.try_mul(b)?)?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Exact rank. Rows and columns are first split into the connected
    /// components of the nonzero pattern; each block is eliminated on its own.
    pub fn rank(&self) -> usize {
        blocks(self)
            .into_iter()
            .map(|(rows, cols)| {
                let sub = self.submatrix(&rows, &cols);
                echelon(sub.to_rows()).0.len()
            })
            .sum()
    }

    fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|&i| cols.iter().map(|&j| self[(i, j)].clone()).collect())
                .collect(),
        )
    }

    /// Basis of `{ x : self * x = 0 }`.
    pub fn null_space(&self) -> Vec<Vec<Scalar>> {
        let field = Arc::clone(self.field());
        let (pivots, reduced) = echelon(self.to_rows());
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![field.zero(); self.cols];
                v[f] = field.one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -&reduced[r][f];
                }
                v
            })
            .collect()
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square());
        let field = Arc::clone(self.field());
        let mut rows = self.to_rows();
        let n = self.rows;
        let mut det = field.one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
                return field.zero();
            };
            if p != col {
                rows.swap(p, col);
                det = -det;
            }
            let pivot = rows[col][col].clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..n {
                if rows[r][col].is_zero() {
                    continue;
                }
                let f = &rows[r][col] * &inv;
                for c in col..n {
                    let t = &f * &rows[col][c];
                    rows[r][c] = &rows[r][c] - &t;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Matrix, FieldError> {
        assert!(self.is_square());
        let n = self.rows;
        let field = Arc::clone(self.field());
        let aug: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
                row
            })
            .collect();
        let (pivots, reduced) = echelon(aug);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Matrix::from_rows(
            reduced.into_iter().map(|row| row[n..].to_vec()).collect(),
        ))
    }

    pub fn to_complex(&self) -> Vec<Vec<Complex64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(Scalar::to_complex).collect())
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Gauss-Jordan elimination to reduced row echelon form. Returns the pivot
/// columns and the nonzero reduced rows (one per pivot).
fn echelon(mut rows: Vec<Vec<Scalar>>) -> (Vec<usize>, Vec<Vec<Scalar>>) {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r][c..].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !p.is_zero() {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (pivots, rows)
}

/// Connected components of the bipartite row/column graph of nonzero entries.
fn blocks(m: &Matrix) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = m.rows + m.cols;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut touched = vec![false; m.rows];
    for i in 0..m.rows {
        for j in 0..m.cols {
            if !m[(i, j)].is_zero() {
                touched[i] = true;
                let (a, b) = (find(&mut parent, i), find(&mut parent, m.rows + j));
                parent[a] = b;
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, (Vec<usize>, Vec<usize>)> =
        Default::default();
    for i in (0..m.rows).filter(|&i| touched[i]) {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().0.push(i);
    }
    for j in 0..m.cols {
        let root = find(&mut parent, m.rows + j);
        if let Some(g) = groups.get_mut(&root) {
            g.1.push(j);
        }
    }
    groups.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(k: &Arc<CyclotomicField>, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| k.int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_of_small_matrices() {
        let k = CyclotomicField::new(12).unwrap();
        assert_eq!(mat(&k, &[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(mat(&k, &[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(mat(&k, &[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]).rank(), 3);
        let i = k.zeta_pow(3);
        let m = Matrix::from_rows(vec![
            vec![k.one(), i.clone()],
            vec![i.clone(), k.int(-1)],
        ]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn null_space_and_inverse() {
        let k = CyclotomicField::new(12).unwrap();
        let m = mat(&k, &[&[1, 2, 3], &[2, 4, 6]]);
        let ns = m.null_space();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for i in 0..2 {
                let s = (0..3).fold(k.zero(), |acc, j| acc + &m[(i, j)] * &v[j]);
                assert!(s.is_zero());
            }
        }
        let a = mat(&k, &[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(&k, 2));
        assert_eq!(a.determinant(), k.one());
        assert!(mat(&k, &[&[1, 1], &[1, 1]]).inverse().is_err());
    }
}
