//! Fraction-free row echelon forms over the integers.
//!
//! Rows are kept primitive; elimination of a new row against the stored
//! pivots uses cross multiplication so no rationals appear in the hot loop.

use num::bigint::BigInt;
use num::{Integer, Zero};

use crate::scalar::{make_primitive, Scalar};

#[derive(Clone, Debug)]
pub struct Echelon {
    width: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Echelon { width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.width
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<BigInt>> {
        self.rows
    }

    fn reduce(&self, row: &mut [BigInt]) {
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let g = r[p].gcd(&row[p]);
            let a = &r[p] / &g;
            let b = &row[p] / &g;
            for (x, y) in row.iter_mut().zip(r) {
                if y.is_zero() {
                    if !x.is_zero() {
                        *x *= &a;
                    }
                } else {
                    *x = &*x * &a - y * &b;
                }
            }
            make_primitive(row);
        }
    }

    /// Adds a row to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut row: Vec<BigInt>) -> bool {
        assert_eq!(row.len(), self.width, "row width mismatch");
        if self.is_full() {
            return false;
        }
        self.reduce(&mut row);
        match row.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                make_primitive(&mut row);
                self.rows.push(row);
                self.pivots.push(p);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, row: &[BigInt]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r);
        r.iter().all(Zero::is_zero)
    }

    pub fn contains_all(&self, other: &Echelon) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn same_span(&self, other: &Echelon) -> bool {
        self.rank() == other.rank() && self.contains_all(other)
    }

    /// Basis of `{v : r·v = 0 for every stored row r}`, as primitive integer rows.
    pub fn nullspace(&self) -> Vec<Vec<BigInt>> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let mut rref: Vec<Vec<Scalar>> = order
            .iter()
            .map(|&i| {
                let r = &self.rows[i];
                let pv = Scalar::from_integer(r[self.pivots[i]].clone());
                r.iter().map(|x| Scalar::from_integer(x.clone()) / &pv).collect()
            })
            .collect();
        let piv: Vec<usize> = order.iter().map(|&i| self.pivots[i]).collect();
        for k in (0..rref.len()).rev() {
            let (above, rest) = rref.split_at_mut(k);
            let pr = &rest[0];
            for r in above.iter_mut() {
                let f = r[piv[k]].clone();
                if f.is_zero() {
                    continue;
                }
                for (x, y) in r.iter_mut().zip(pr) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        let mut is_piv = vec![false; self.width];
        for &p in &piv {
            is_piv[p] = true;
        }
        let mut out = Vec::new();
        for f in (0..self.width).filter(|&c| !is_piv[c]) {
            let mut v = vec![Scalar::zero(); self.width];
            v[f] = Scalar::from_integer(1.into());
            for (r, &p) in rref.iter().zip(&piv) {
                v[p] = -r[f].clone();
            }
            out.push(crate::scalar::to_int_row(&v));
        }
        out
    }
}

pub fn rank<I: IntoIterator<Item = Vec<BigInt>>>(width: usize, rows: I) -> usize {
    let mut e = Echelon::new(width);
    for r in rows {
        e.insert(r);
        if e.is_full() {
            break;
        }
    }
    e.rank()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let mut s = BigInt::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

pub fn is_zero_row(r: &[BigInt]) -> bool {
    r.iter().all(Zero::is_zero)
}
