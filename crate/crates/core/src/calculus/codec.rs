//! JSON encodings shared by every public type: a complex number is a
//! two-element array `[re, im]`, a matrix is an array of rows.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type ComplexPair = [f64; 2];

pub fn to_pair(z: Complex64) -> ComplexPair {
    [z.re, z.im]
}

pub fn from_pair(p: ComplexPair) -> Complex64 {
    Complex64::new(p[0], p[1])
}

pub fn matrix_to_rows(m: &DMatrix<Complex64>) -> Vec<Vec<ComplexPair>> {
    (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| to_pair(m[(i, j)])).collect()).collect()
}

pub fn rows_to_matrix(rows: &[Vec<ComplexPair>]) -> Result<DMatrix<Complex64>, String> {
    let nrows = rows.len();
    if nrows == 0 {
        return Err("matrix has no rows".into());
    }
    let ncols = rows[0].len();
    if ncols == 0 {
        return Err("matrix has empty rows".into());
    }
    if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != ncols) {
        return Err(format!("row {i} has {} entries, expected {ncols}", r.len()));
    }
    Ok(DMatrix::from_fn(nrows, ncols, |i, j| from_pair(rows[i][j])))
}

pub fn vector_to_pairs(v: &DVector<Complex64>) -> Vec<ComplexPair> {
    v.iter().copied().map(to_pair).collect()
}

pub fn pairs_to_vector(p: &[ComplexPair]) -> DVector<Complex64> {
    DVector::from_iterator(p.len(), p.iter().copied().map(from_pair))
}

/// `#[serde(with = "complex")]` for a single `Complex64`.
pub mod complex {
    use super::*;

    pub fn serialize<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        to_pair(*z).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        ComplexPair::deserialize(d).map(from_pair)
    }
}

/// `#[serde(with = "complex_vec")]` for `Vec<Complex64>`.
pub mod complex_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Complex64], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|z| to_pair(*z)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Complex64>, D::Error> {
        Vec::<ComplexPair>::deserialize(d).map(|v| v.into_iter().map(from_pair).collect())
    }
}

/// `#[serde(with = "complex_matrix")]` for a dense matrix stored as rows.
pub mod complex_matrix {
    use super::*;

    pub fn serialize<S: Serializer>(m: &DMatrix<Complex64>, s: S) -> Result<S::Ok, S::Error> {
        matrix_to_rows(m).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<DMatrix<Complex64>, D::Error> {
        let rows = Vec::<Vec<ComplexPair>>::deserialize(d)?;
        rows_to_matrix(&rows).map_err(D::Error::custom)
    }
}
