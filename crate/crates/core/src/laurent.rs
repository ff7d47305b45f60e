//! Integer Laurent polynomials in one variable `t` and square matrices over
//! them, with specialization at `t = ±1`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Finitely supported map from exponents to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::monomial(1, 0)
    }

    /// `coeff · t^exp`
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// The variable `t`.
    pub fn t() -> LaurentPoly {
        LaurentPoly::monomial(1, 1)
    }

    pub fn from_terms<I, C>(terms: I) -> LaurentPoly
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (exp, coeff) in terms {
            p.add_term(exp, coeff.into());
        }
        p
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Substitutes `t = t0`, which must be a unit of the integers.
    pub fn evaluate(&self, t0: i64) -> Result<BigInt> {
        match t0 {
            1 => Ok(self.terms.values().sum()),
            -1 => Ok(self
                .terms
                .iter()
                .map(|(e, c)| if e.rem_euclid(2) == 0 { c.clone() } else { -c })
                .sum()),
            other => Err(Error::NonUnitSpecialization(other)),
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| json!([e, bigint_to_json(c)]))
                .collect(),
        )
    }

    pub fn from_json(value: &Value) -> Result<LaurentPoly> {
        let pairs = value.as_array().ok_or_else(|| {
            Error::Json("polynomial must be an array of [exp, coeff] pairs".into())
        })?;
        let mut p = LaurentPoly::zero();
        for pair in pairs {
            match pair.as_array().map(Vec::as_slice) {
                Some([e, c]) => {
                    let exp = e
                        .as_i64()
                        .ok_or_else(|| Error::Json(format!("bad exponent {e}")))?;
                    p.add_term(exp, bigint_from_json(c)?);
                }
                _ => return Err(Error::Json(format!("bad term {pair}"))),
            }
        }
        Ok(p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (&exp, coeff)) in self.terms.iter().enumerate() {
            let negative = coeff.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = coeff.abs();
            let unit = magnitude.is_one();
            match exp {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !unit {
                        write!(f, "{magnitude}*")?;
                    }
                    match exp {
                        1 => f.write_str("t")?,
                        e => write!(f, "t^{e}")?,
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

pub(crate) fn bigint_to_json(n: &BigInt) -> Value {
    // arbitrary_precision keeps wide integers exact
    Value::Number(
        n.to_string()
            .parse()
            .expect("integer literal is valid JSON"),
    )
}

pub(crate) fn bigint_from_json(value: &Value) -> Result<BigInt> {
    match value {
        Value::Number(n) => n
            .to_string()
            .parse()
            .map_err(|_| Error::Json(format!("expected an integer, got {n}"))),
        other => Err(Error::Json(format!("expected an integer, got {other}"))),
    }
}

/// Square matrix over [`LaurentPoly`], row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentMatrix {
    dim: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn identity(dim: usize) -> LaurentMatrix {
        let mut m = LaurentMatrix::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = LaurentPoly::one();
        }
        m
    }

    pub fn zero(dim: usize) -> LaurentMatrix {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        LaurentMatrix {
            dim,
            entries: vec![LaurentPoly::zero(); dim * dim],
        }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<LaurentMatrix> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch { left: 0, right: 1 });
        }
        if let Some(row) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: row.len(),
            });
        }
        Ok(LaurentMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Zero-based entry access.
    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: LaurentPoly) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn is_identity(&self) -> bool {
        *self == LaurentMatrix::identity(self.dim)
    }

    pub fn mul(&self, rhs: &LaurentMatrix) -> Result<LaurentMatrix> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        let d = self.dim;
        let mut out = LaurentMatrix::zero(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let slot = &mut out.entries[i * d + j];
                    *slot = &*slot + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Entrywise substitution `t = t0` for `t0 ∈ {1, -1}`.
    pub fn evaluate_at(&self, t0: i64) -> Result<IntMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|p| p.evaluate(t0))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntMatrix {
            dim: self.dim,
            entries,
        })
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (0..self.dim)
            .map(|i| Value::Array((0..self.dim).map(|j| self.get(i, j).to_json()).collect()))
            .collect();
        json!({ "dim": self.dim, "entries": rows })
    }

    pub fn from_json(value: &Value) -> Result<LaurentMatrix> {
        let dim = value["dim"]
            .as_u64()
            .ok_or_else(|| Error::Json("missing \"dim\"".into()))? as usize;
        let rows = value["entries"]
            .as_array()
            .ok_or_else(|| Error::Json("missing \"entries\"".into()))?;
        let rows = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Json("matrix row must be an array".into()))?
                    .iter()
                    .map(LaurentPoly::from_json)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let m = LaurentMatrix::from_rows(rows)?;
        if m.dim != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: m.dim,
            });
        }
        Ok(m)
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            f.write_str("[")?;
            for j in 0..self.dim {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
            if i + 1 < self.dim {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

/// Square integer matrix, row-major, with arbitrary-precision entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn identity(dim: usize) -> IntMatrix {
        IntMatrix::scalar(dim, 1)
    }

    pub fn scalar(dim: usize, value: i64) -> IntMatrix {
        let mut entries = vec![BigInt::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = BigInt::from(value);
        }
        IntMatrix { dim, entries }
    }

    pub fn from_rows<T: Into<BigInt>>(rows: Vec<Vec<T>>) -> Result<IntMatrix> {
        let dim = rows.len();
        if let Some(row) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: row.len(),
            });
        }
        Ok(IntMatrix {
            dim,
            entries: rows.into_iter().flatten().map(Into::into).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.dim + col]
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMatrix::identity(self.dim)
    }

    pub fn is_scalar(&self, value: i64) -> bool {
        *self == IntMatrix::scalar(self.dim, value)
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        let d = self.dim;
        let mut entries = vec![BigInt::zero(); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    entries[i * d + j] += a * rhs.get(k, j);
                }
            }
        }
        Ok(IntMatrix { dim: d, entries })
    }

    /// Fraction-free (Bareiss) elimination; exact over the integers.
    pub fn determinant(&self) -> BigInt {
        let d = self.dim;
        if d == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..d)
            .map(|i| self.entries[i * d..(i + 1) * d].to_vec())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..d - 1 {
            if a[k][k].is_zero() {
                match (k + 1..d).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..d {
                for j in k + 1..d {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[d - 1][d - 1]
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.dim)
                .map(|i| {
                    Value::Array(
                        (0..self.dim)
                            .map(|j| bigint_to_json(self.get(i, j)))
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            f.write_str("[")?;
            for j in 0..self.dim {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
            if i + 1 < self.dim {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}
