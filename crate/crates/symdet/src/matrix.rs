//! Matrices with polynomial entries: coefficient-window column builders,
//! exact determinants, and the wedge-row determinant expansion.

use crate::error::{Error, Result};
use crate::poly::{Poly, VarId};
use crate::sym::all_chi;

/// Dense row-major matrix of polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Poly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(PolyMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch("ragged rows".to_string()));
        }
        PolyMatrix::new(nrows, ncols, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    /// All rows, restricted to the given columns in the given order.
    pub fn select_cols(&self, cols: &[usize]) -> PolyMatrix {
        let entries = (0..self.rows)
            .flat_map(|i| cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        PolyMatrix {
            rows: self.rows,
            cols: cols.len(),
            entries,
        }
    }

    /// The matrix with one row and one column removed.
    pub fn minor(&self, skip_row: usize, skip_col: usize) -> PolyMatrix {
        let entries = (0..self.rows)
            .filter(|&i| i != skip_row)
            .flat_map(|i| {
                (0..self.cols)
                    .filter(|&j| j != skip_col)
                    .map(move |j| self.get(i, j).clone())
            })
            .collect();
        PolyMatrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            entries,
        }
    }

    /// Exact determinant. Uses the fraction-free Bareiss elimination
    /// without pivoting; when a pivot vanishes, falls back to cofactor
    /// expansion along the column holding the most zero entries.
    pub fn det(&self) -> Result<Poly> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::one());
        }
        let mut m: Vec<Vec<Poly>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut prev = Poly::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                return self.cofactor_det();
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                    m[i][j] = num.exact_divide(&prev)?;
                }
            }
            prev = m[k][k].clone();
        }
        Ok(m[n - 1][n - 1].clone())
    }

    fn cofactor_det(&self) -> Result<Poly> {
        let n = self.rows;
        if n == 1 {
            return Ok(self.get(0, 0).clone());
        }
        let pivot_col = (0..n)
            .max_by_key(|&j| (0..n).filter(|&i| self.get(i, j).is_zero()).count())
            .expect("nonempty matrix");
        let mut out = Poly::zero();
        for i in 0..n {
            let entry = self.get(i, pivot_col);
            if entry.is_zero() {
                continue;
            }
            let cofactor = self.minor(i, pivot_col).det()?;
            let term = entry.mul(&cofactor);
            if (i + pivot_col) % 2 == 0 {
                out = out.add(&term);
            } else {
                out = out.sub(&term);
            }
        }
        Ok(out)
    }
}

/// Description of one column of a coefficient-window matrix. The window of
/// size D holds the coefficients of y^D down to y^0, top to bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColumnSpec {
    /// Coefficients of y^a * (s0*y^r + s1*y^(r-1) + ... + sr), with the
    /// formal s-variables as entries.
    SigmaShift(usize),
    /// Coefficients of the bare monomial y^mu: a single 1.
    MonomialUnit(usize),
    /// Coefficients of an arbitrary polynomial, read off in y.
    HCoeffs(Poly),
}

/// Assemble the (D+1) x specs.len() matrix whose row j (1-based) holds the
/// y^(D-j+1) coefficient of each column's polynomial. Columns whose
/// polynomial sticks out above the window are rejected.
pub fn build_matrix(window: usize, r: usize, specs: &[ColumnSpec]) -> Result<PolyMatrix> {
    let d = window;
    let mut rows: Vec<Vec<Poly>> = vec![Vec::with_capacity(specs.len()); d + 1];
    for spec in specs {
        match spec {
            ColumnSpec::SigmaShift(a) => {
                if a + r > d {
                    return Err(Error::WindowOverflow {
                        degree: (a + r) as i64,
                        window: d,
                    });
                }
                for (j, row) in rows.iter_mut().enumerate() {
                    let power = d - j;
                    let index = (a + r) as i64 - power as i64;
                    if (0..=r as i64).contains(&index) {
                        row.push(Poly::s(index as u32));
                    } else {
                        row.push(Poly::zero());
                    }
                }
            }
            ColumnSpec::MonomialUnit(mu) => {
                if *mu > d {
                    return Err(Error::WindowOverflow {
                        degree: *mu as i64,
                        window: d,
                    });
                }
                for (j, row) in rows.iter_mut().enumerate() {
                    let power = d - j;
                    row.push(if power == *mu { Poly::one() } else { Poly::zero() });
                }
            }
            ColumnSpec::HCoeffs(h) => {
                let deg = h.per_var_degree(VarId::Y);
                if deg > d as i64 {
                    return Err(Error::WindowOverflow {
                        degree: deg,
                        window: d,
                    });
                }
                for (j, row) in rows.iter_mut().enumerate() {
                    let power = d - j;
                    row.push(h.coeff_of_y(power as u32));
                }
            }
        }
    }
    PolyMatrix::from_rows(rows)
}

/// Expand a determinant whose extra row is a formal wedge row. The wedge
/// row has one slot per column; `occupied[j]` says whether slot j carries
/// a nonzero wedge entry. The result is a list of terms
/// (scalar coefficient, selected column indices ascending): the scalar is
/// the signed minor of the ordinary rows over the unselected columns, and
/// the caller wedges together the occupied slot contents of the selected
/// columns. Selections hitting an empty slot vanish and are skipped.
pub fn wedge_row_expand(
    ordinary: &PolyMatrix,
    occupied: &[bool],
) -> Result<Vec<(Poly, Vec<usize>)>> {
    let p = occupied.len();
    let q = ordinary.rows();
    if ordinary.cols() != p {
        return Err(Error::DimensionMismatch(format!(
            "{} ordinary columns against {p} wedge slots",
            ordinary.cols()
        )));
    }
    if p < q {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for chi in all_chi(p, p - q) {
        let selected = chi.selected();
        if selected.iter().any(|&j| !occupied[j]) {
            continue;
        }
        let minor = ordinary.select_cols(&chi.unselected()).det()?;
        if minor.is_zero() {
            continue;
        }
        let coeff = if chi.sign() == 1 { minor } else { minor.neg() };
        out.push((coeff, selected));
    }
    Ok(out)
}
