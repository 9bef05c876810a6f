//! Exact dense linear algebra over a [`Field`]: rank, solving, inversion and
//! incremental span tracking. Sizes here are tiny (dimensions up to a few
//! dozen), so plain Gaussian elimination is enough.

use crate::field::{Field, FieldElement};

/// Incrementally echelonized span of row vectors.
pub(crate) struct Echelon {
    field: Field,
    width: usize,
    /// rows normalized with unit pivot, sorted by pivot column
    rows: Vec<(usize, Vec<FieldElement>)>,
}

impl Echelon {
    pub fn new(field: Field, width: usize) -> Echelon {
        Echelon {
            field,
            width,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the span in place; afterwards `v` is zero iff it
    /// was in the span.
    pub fn reduce_in_place(&self, v: &mut [FieldElement]) {
        for (pivot, row) in &self.rows {
            let c = v[*pivot].clone();
            if self.field.is_zero(&c) {
                continue;
            }
            for (i, r) in row.iter().enumerate() {
                v[i] = self.field.sub(&v[i], &self.field.mul(&c, r));
            }
        }
    }

    /// Adds `v` to the span. Returns `true` when `v` was independent.
    pub fn insert(&mut self, mut v: Vec<FieldElement>) -> bool {
        assert_eq!(v.len(), self.width);
        self.reduce_in_place(&mut v);
        let pivot = match v.iter().position(|c| !self.field.is_zero(c)) {
            Some(p) => p,
            None => return false,
        };
        let inv = self.field.inv(&v[pivot]).expect("nonzero pivot");
        for c in v.iter_mut() {
            *c = self.field.mul(c, &inv);
        }
        self.rows.push((pivot, v));
        self.rows.sort_by_key(|(p, _)| *p);
        true
    }

}

pub(crate) fn rank(field: Field, rows: &[Vec<FieldElement>]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let mut ech = Echelon::new(field, first.len());
    for r in rows {
        ech.insert(r.clone());
    }
    ech.rank()
}

/// Solves `sum_j x_j cols[j] = target` exactly. Free variables are set to
/// zero; returns `None` when inconsistent.
pub(crate) fn solve(
    field: Field,
    cols: &[Vec<FieldElement>],
    target: &[FieldElement],
) -> Option<Vec<FieldElement>> {
    let k = cols.len();
    let n = target.len();
    // rows of the augmented system [A | t]
    let mut rows: Vec<Vec<FieldElement>> = (0..n)
        .map(|i| {
            let mut r: Vec<FieldElement> = cols.iter().map(|c| c[i].clone()).collect();
            r.push(target[i].clone());
            r
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut row = 0;
    for col in 0..k {
        let Some(p) = (row..n).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(row, p);
        let inv = field.inv(&rows[row][col]).unwrap();
        for c in rows[row].iter_mut() {
            *c = field.mul(c, &inv);
        }
        let pivot_row = rows[row].clone();
        for (r, other) in rows.iter_mut().enumerate() {
            if r == row {
                continue;
            }
            let factor = other[col].clone();
            if field.is_zero(&factor) {
                continue;
            }
            for (c, val) in other.iter_mut().enumerate() {
                *val = field.sub(val, &field.mul(&factor, &pivot_row[c]));
            }
        }
        pivots.push((row, col));
        row += 1;
        if row == n {
            break;
        }
    }
    // inconsistent when a zero row has nonzero rhs
    for r in rows.iter() {
        if r[..k].iter().all(|c| field.is_zero(c)) && !field.is_zero(&r[k]) {
            return None;
        }
    }
    let mut x = vec![field.zero(); k];
    for (r, c) in pivots {
        x[c] = rows[r][k].clone();
    }
    Some(x)
}

/// Inverse of a square matrix (rows of equal length), `None` when singular.
pub(crate) fn invert(field: Field, mat: &[Vec<FieldElement>]) -> Option<Vec<Vec<FieldElement>>> {
    let n = mat.len();
    let mut aug: Vec<Vec<FieldElement>> = mat
        .iter()
        .enumerate()
        .map(|(i, r)| {
            assert_eq!(r.len(), n);
            let mut row = r.clone();
            for j in 0..n {
                row.push(if i == j { field.one() } else { field.zero() });
            }
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !field.is_zero(&aug[r][col]))?;
        aug.swap(col, p);
        let inv = field.inv(&aug[col][col]).unwrap();
        for c in aug[col].iter_mut() {
            *c = field.mul(c, &inv);
        }
        let pivot_row = aug[col].clone();
        for (r, other) in aug.iter_mut().enumerate() {
            if r == col {
                continue;
            }
            let factor = other[col].clone();
            if field.is_zero(&factor) {
                continue;
            }
            for (c, val) in other.iter_mut().enumerate() {
                *val = field.sub(val, &field.mul(&factor, &pivot_row[c]));
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(field: Field, vals: &[i64]) -> Vec<FieldElement> {
        vals.iter().map(|&v| field.from_i64(v)).collect()
    }

    #[test]
    fn rank_and_solve() {
        let f = Field::prime(7).unwrap();
        let cols = vec![fe(f, &[1, 0, 1]), fe(f, &[0, 1, 1])];
        assert_eq!(rank(f, &cols), 2);
        let x = solve(f, &cols, &fe(f, &[2, 3, 5])).unwrap();
        assert_eq!(x, fe(f, &[2, 3]));
        assert!(solve(f, &cols, &fe(f, &[2, 3, 6])).is_none());
    }

    #[test]
    fn inversion_roundtrip() {
        let f = Field::prime(11).unwrap();
        let m = vec![fe(f, &[2, 1, 0]), fe(f, &[1, 3, 1]), fe(f, &[0, 1, 4])];
        let inv = invert(f, &m).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = f.zero();
                for k in 0..3 {
                    acc = f.add(&acc, &f.mul(&m[i][k], &inv[k][j]));
                }
                let expect = if i == j { f.one() } else { f.zero() };
                assert_eq!(acc, expect);
            }
        }
        let singular = vec![fe(f, &[1, 2]), fe(f, &[2, 4])];
        assert!(invert(f, &singular).is_none());
    }

    #[test]
    fn echelon_membership() {
        let f = Field::rationals();
        let mut e = Echelon::new(f, 3);
        assert!(e.insert(fe(f, &[1, 2, 3])));
        assert!(e.insert(fe(f, &[0, 1, 1])));
        assert!(!e.insert(fe(f, &[1, 3, 4])));
        let mut v = fe(f, &[2, 5, 7]);
        e.reduce_in_place(&mut v);
        assert!(v.iter().all(|c| f.is_zero(c)));
        let mut w = fe(f, &[0, 0, 1]);
        e.reduce_in_place(&mut w);
        assert!(!w.iter().all(|c| f.is_zero(c)));
    }
}
