use std::fmt;

use num_traits::{One, Zero};

use super::rational::{format_rational, Rational};

/// Dense row-major matrix over Q.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixQ {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Result of Gauss–Jordan elimination.
#[derive(Clone, Debug)]
pub struct Echelon {
    /// Unique reduced row-echelon form, zero rows removed.
    pub rref: MatrixQ,
    pub rank: usize,
    /// Pivot column of each nonzero row of `rref`.
    pub pivots: Vec<usize>,
    /// Basis of the right kernel, one vector per free column.
    pub kernel: Vec<Vec<Rational>>,
}

impl MatrixQ {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatrixQ {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from row vectors; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix row");
            data.extend(r);
        }
        MatrixQ {
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| super::rat(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> MatrixQ {
        let mut t = MatrixQ::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Gauss–Jordan elimination with deterministic pivoting: the pivot of
    /// each column is the topmost remaining row with a nonzero entry.
    pub fn echelon(&self) -> Echelon {
        let (rows, cols) = (self.rows, self.cols);
        let mut a: Vec<Vec<Rational>> = self.row_vecs();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..cols {
            if prow >= rows {
                break;
            }
            let Some(found) = (prow..rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(found, prow);
            let inv = a[prow][col].recip();
            for x in a[prow][col..].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
            let pivot_row = a[prow].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r == prow || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    if !p.is_zero() {
                        *x -= &factor * p;
                    }
                }
            }
            pivots.push(col);
            prow += 1;
        }
        a.truncate(prow);
        let rank = prow;

        let mut is_pivot = vec![false; cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let kernel = (0..cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Rational::zero(); cols];
                v[free] = Rational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -a[r][free].clone();
                }
                v
            })
            .collect();

        Echelon {
            rref: MatrixQ::from_rows(cols, a),
            rank,
            pivots,
            kernel,
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank
    }

    /// Right kernel basis.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        self.echelon().kernel
    }

    /// Exact determinant by fraction elimination. Panics if not square.
    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.row_vecs();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(found) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Rational::zero();
            };
            if found != col {
                a.swap(found, col);
                det = -det;
            }
            let pivot = a[col][col].clone();
            det *= &pivot;
            let pivot_row = a[col].clone();
            for row in a.iter_mut().skip(col + 1) {
                if row[col].is_zero() {
                    continue;
                }
                let factor = &row[col] / &pivot;
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    if !p.is_zero() {
                        *x -= &factor * p;
                    }
                }
            }
        }
        det
    }
}

impl std::ops::Index<(usize, usize)> for MatrixQ {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for MatrixQ {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for MatrixQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixQ {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}
