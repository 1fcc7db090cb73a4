//! Finite-dimensional C(X) for finite X as coordinate vectors, the product
//! identification C(X) (x) C(Y) = C(X x Y) as matrices, finite-family
//! suprema in the paper-form reconstruction, and bimorphism factorization
//! through the tensor product.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::Rational;

/// A function on a finite space: one rational coordinate per point.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteVector {
    coords: Vec<Rational>,
}

impl FiniteVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        FiniteVector { coords }
    }

    pub fn zeros(len: usize) -> Self {
        FiniteVector {
            coords: vec![Rational::zero(); len],
        }
    }

    /// The indicator 1_{i} of a single point.
    pub fn indicator(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.coords[i] = Rational::from_integer(1.into());
        v
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }
}

/// A function on a finite product space, row index from X, column from Y.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl FiniteMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: format!("{rows}x{cols}"),
                got: format!("{} entries", data.len()),
            });
        }
        Ok(FiniteMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        FiniteMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn scale(&self, c: &Rational) -> Self {
        FiniteMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(FiniteMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: format!("{}x{}", self.rows, self.cols),
                got: format!("{}x{}", other.rows, other.cols),
            });
        }
        Ok(())
    }
}

/// Elementary tensors as outer products: (u (x) v)(i, j) = u_i * v_j.
pub fn outer(u: &FiniteVector, v: &FiniteVector) -> FiniteMatrix {
    let mut m = FiniteMatrix::zeros(u.len(), v.len());
    for (i, a) in u.coords().iter().enumerate() {
        for (j, b) in v.coords().iter().enumerate() {
            m.set(i, j, a * b);
        }
    }
    m
}

/// Supremum of a nonempty family of equal-shape matrices. Computed pointwise
/// and, independently, reconstructed as sum_j g_j (x) 1_{j} from column-wise
/// suprema; the two routes are asserted equal.
pub fn matrix_sup(family: &[FiniteMatrix]) -> Result<FiniteMatrix> {
    let first = family
        .first()
        .ok_or_else(|| Error::Type("supremum of an empty family".into()))?;
    for m in family {
        first.check_shape(m)?;
    }
    let mut pointwise = first.clone();
    for m in &family[1..] {
        for i in 0..pointwise.rows {
            for j in 0..pointwise.cols {
                if m.get(i, j) > pointwise.get(i, j) {
                    pointwise.set(i, j, m.get(i, j).clone());
                }
            }
        }
    }
    // Paper-form reconstruction: per column j, the sup g_j over the family
    // of column functions, assembled against the indicator of j.
    let mut reconstructed = FiniteMatrix::zeros(first.rows, first.cols);
    for j in 0..first.cols {
        let mut g = FiniteVector::zeros(first.rows);
        for i in 0..first.rows {
            let mut best = family[0].get(i, j).clone();
            for m in &family[1..] {
                if m.get(i, j) > &best {
                    best = m.get(i, j).clone();
                }
            }
            g.coords[i] = best;
        }
        let term = outer(&g, &FiniteVector::indicator(first.cols, j));
        reconstructed = reconstructed.add(&term)?;
    }
    if reconstructed != pointwise {
        return Err(Error::InternalConsistency(
            "pointwise supremum differs from its indicator reconstruction".into(),
        ));
    }
    Ok(pointwise)
}

/// The linear factorization of a bimorphism given on basis pairs: T with
/// T(e_i (x) f_j) = psi(i, j), extended linearly to every matrix.
#[derive(Debug, Clone)]
pub struct FactoredMap {
    src_rows: usize,
    src_cols: usize,
    table: BTreeMap<(usize, usize), FiniteMatrix>,
}

/// Builds T from a complete table of basis-pair images and asserts the
/// defining agreement T(outer(e_i, f_j)) = psi(i, j) on every pair.
pub fn factor_bimorphism(
    src_rows: usize,
    src_cols: usize,
    table: BTreeMap<(usize, usize), FiniteMatrix>,
) -> Result<FactoredMap> {
    let mut shape: Option<(usize, usize)> = None;
    for i in 0..src_rows {
        for j in 0..src_cols {
            let m = table
                .get(&(i, j))
                .ok_or(Error::MissingTableEntry { i, j })?;
            match shape {
                None => shape = Some((m.rows, m.cols)),
                Some((r, c)) => {
                    if (m.rows, m.cols) != (r, c) {
                        return Err(Error::DimensionMismatch {
                            expected: format!("{r}x{c}"),
                            got: format!("{}x{}", m.rows, m.cols),
                        });
                    }
                }
            }
        }
    }
    let map = FactoredMap {
        src_rows,
        src_cols,
        table,
    };
    for i in 0..src_rows {
        for j in 0..src_cols {
            let basis = outer(
                &FiniteVector::indicator(src_rows, i),
                &FiniteVector::indicator(src_cols, j),
            );
            if &map.apply(&basis)? != map.table.get(&(i, j)).unwrap() {
                return Err(Error::InternalConsistency(format!(
                    "factored map disagrees with the table at basis pair ({i}, {j})"
                )));
            }
        }
    }
    Ok(map)
}

impl FactoredMap {
    /// T(M) = sum_ij M_ij * psi(i, j).
    pub fn apply(&self, m: &FiniteMatrix) -> Result<FiniteMatrix> {
        if (m.rows, m.cols) != (self.src_rows, self.src_cols) {
            return Err(Error::DimensionMismatch {
                expected: format!("{}x{}", self.src_rows, self.src_cols),
                got: format!("{}x{}", m.rows, m.cols),
            });
        }
        let sample = self.table.values().next().unwrap();
        let mut acc = FiniteMatrix::zeros(sample.rows, sample.cols);
        for i in 0..m.rows {
            for j in 0..m.cols {
                let psi = self.table.get(&(i, j)).unwrap();
                acc = acc.add(&psi.scale(m.get(i, j)))?;
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat_int;

    fn vec_of(vals: &[i64]) -> FiniteVector {
        FiniteVector::new(vals.iter().map(|&v| rat_int(v)).collect())
    }

    fn mat(rows: usize, cols: usize, vals: &[i64]) -> FiniteMatrix {
        FiniteMatrix::new(rows, cols, vals.iter().map(|&v| rat_int(v)).collect()).unwrap()
    }

    #[test]
    fn outer_products() {
        assert_eq!(
            outer(&vec_of(&[1, 2]), &vec_of(&[3, 4, 5])),
            mat(2, 3, &[3, 4, 5, 6, 8, 10])
        );
        assert_eq!(
            outer(&vec_of(&[1, 2]), &FiniteVector::zeros(2)),
            FiniteMatrix::zeros(2, 2)
        );
        assert_eq!(
            outer(&vec_of(&[1, 0]), &vec_of(&[0, 1])),
            mat(2, 2, &[0, 1, 0, 0])
        );
    }

    #[test]
    fn matrix_sup_examples() {
        let family = vec![
            mat(2, 3, &[1, 0, 2, 0, 1, 0]),
            mat(2, 3, &[0, 2, 1, 1, 0, 0]),
        ];
        assert_eq!(matrix_sup(&family).unwrap(), mat(2, 3, &[1, 2, 2, 1, 1, 0]));
        let single = vec![mat(1, 2, &[-3, 4])];
        assert_eq!(matrix_sup(&single).unwrap(), mat(1, 2, &[-3, 4]));
    }

    #[test]
    fn matrix_sup_rejects_shape_mismatch() {
        let family = vec![mat(1, 2, &[0, 0]), mat(2, 1, &[0, 0])];
        assert!(matches!(
            matrix_sup(&family),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn factor_identity_table() {
        // psi(i, j) = E_ij of the same shape makes T the identity.
        let mut table = BTreeMap::new();
        for i in 0..2 {
            for j in 0..2 {
                table.insert(
                    (i, j),
                    outer(
                        &FiniteVector::indicator(2, i),
                        &FiniteVector::indicator(2, j),
                    ),
                );
            }
        }
        let t = factor_bimorphism(2, 2, table).unwrap();
        let m = mat(2, 2, &[1, -2, 3, 5]);
        assert_eq!(t.apply(&m).unwrap(), m);
    }

    #[test]
    fn factor_zero_table() {
        let mut table = BTreeMap::new();
        for i in 0..2 {
            for j in 0..2 {
                table.insert((i, j), FiniteMatrix::zeros(3, 1));
            }
        }
        let t = factor_bimorphism(2, 2, table).unwrap();
        assert_eq!(
            t.apply(&mat(2, 2, &[1, 2, 3, 4])).unwrap(),
            FiniteMatrix::zeros(3, 1)
        );
    }

    #[test]
    fn factor_requires_complete_table() {
        let mut table = BTreeMap::new();
        table.insert((0, 0), FiniteMatrix::zeros(1, 1));
        assert!(matches!(
            factor_bimorphism(2, 1, table),
            Err(Error::MissingTableEntry { i: 1, j: 0 })
        ));
    }
}
