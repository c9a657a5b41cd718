//! Dense linear algebra over the two-element field.
//!
//! Vectors are bit-packed into `u64` words. Matrices are stored by rows and
//! act on row vectors: row `i` is the image of source basis vector `i`.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vector {
    len: usize,
    words: Vec<u64>,
}

impl F2Vector {
    pub fn zero(len: usize) -> Self {
        F2Vector {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = F2Vector::zero(len);
        v.set(i, true);
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = F2Vector::zero(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "index {i} out of range {}", self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "index {i} out of range {}", self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "index {i} out of range {}", self.len);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn add_assign(&mut self, other: &F2Vector) {
        assert_eq!(self.len, other.len, "vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the first nonzero coordinate.
    pub fn leading(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Concatenation `[self | other]`.
    pub fn concat(&self, other: &F2Vector) -> F2Vector {
        let mut v = F2Vector::zero(self.len + other.len);
        for i in self.ones() {
            v.set(i, true);
        }
        for i in other.ones() {
            v.set(self.len + i, true);
        }
        v
    }

    pub fn slice(&self, start: usize, end: usize) -> F2Vector {
        let mut v = F2Vector::zero(end - start);
        for i in start..end {
            if self.get(i) {
                v.set(i - start, true);
            }
        }
        v
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        f.write_str("]")
    }
}

/// A subspace kept in fully reduced row echelon form.
///
/// Pivots are leading coordinates; every stored row is zero in every other
/// row's pivot column, so the basis of a given subspace is unique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    len: usize,
    rows: Vec<F2Vector>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(len: usize) -> Self {
        Echelon {
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.len
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[F2Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the stored rows.
    pub fn reduce(&self, v: &F2Vector) -> F2Vector {
        let mut r = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r.get(p) {
                r.add_assign(row);
            }
        }
        r
    }

    pub fn contains(&self, v: &F2Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &F2Vector) -> bool {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let r = self.reduce(v);
        let Some(p) = r.leading() else {
            return false;
        };
        for row in &mut self.rows {
            if row.get(p) {
                row.add_assign(&r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct F2Matrix {
    cols: usize,
    rows: Vec<F2Vector>,
}

impl F2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        F2Matrix {
            cols,
            rows: vec![F2Vector::zero(cols); rows],
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<F2Vector>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "row length mismatch");
        F2Matrix { cols, rows }
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[F2Vector] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(F2Vector::is_zero)
    }

    /// Image of a row vector: `v · M`.
    pub fn apply(&self, v: &F2Vector) -> F2Vector {
        assert_eq!(v.len(), self.rows.len(), "vector length mismatch");
        let mut out = F2Vector::zero(self.cols);
        for i in v.ones() {
            out.add_assign(&self.rows[i]);
        }
        out
    }

    pub fn row_space(&self) -> Echelon {
        let mut e = Echelon::new(self.cols);
        for r in &self.rows {
            e.insert(r);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.row_space().rank()
    }

    /// Basis of `{v : v · M = 0}`, in reduced echelon form.
    pub fn kernel(&self) -> Echelon {
        let n = self.rows.len();
        let mut image = Echelon::new(self.cols + n);
        let mut kernel = Echelon::new(n);
        for (i, row) in self.rows.iter().enumerate() {
            let tagged = row.concat(&F2Vector::unit(n, i));
            let r = image.reduce(&tagged);
            match r.leading() {
                Some(p) if p < self.cols => {
                    image.insert(&r);
                }
                Some(_) => {
                    kernel.insert(&r.slice(self.cols, self.cols + n));
                }
                None => unreachable!("tagged rows are independent"),
            }
        }
        kernel
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows.len(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = F2Matrix> {
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), cols), rows).prop_map(
            move |rs| {
                F2Matrix::from_rows(cols, rs.iter().map(|r| F2Vector::from_bits(r)).collect())
            },
        )
    }

    /// Rank by exhaustive span enumeration: log2 of the number of distinct
    /// combinations of rows.
    fn brute_rank(m: &F2Matrix) -> usize {
        let n = m.num_rows();
        let mut seen = std::collections::HashSet::new();
        for mask in 0u32..(1 << n) {
            let v = F2Vector::from_bits(&(0..n).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>());
            seen.insert(format!("{:?}", m.apply(&v)));
        }
        seen.len().trailing_zeros() as usize
    }

    #[test]
    fn bit_operations() {
        let mut v = F2Vector::zero(130);
        assert!(v.is_zero());
        v.set(129, true);
        v.flip(3);
        assert_eq!(v.leading(), Some(3));
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![3, 129]);
        assert_eq!(v.count_ones(), 2);
        let w = v.clone();
        v.add_assign(&w);
        assert!(v.is_zero());
    }

    #[test]
    fn echelon_is_reduced() {
        let mut e = Echelon::new(3);
        assert!(e.insert(&F2Vector::from_bits(&[true, true, false])));
        assert!(e.insert(&F2Vector::from_bits(&[false, true, true])));
        assert!(!e.insert(&F2Vector::from_bits(&[true, false, true])));
        assert_eq!(e.pivots(), &[0, 1]);
        assert_eq!(e.rows()[0], F2Vector::from_bits(&[true, false, true]));
        assert_eq!(e.rows()[1], F2Vector::from_bits(&[false, true, true]));
    }

    #[test]
    fn empty_shapes() {
        let m = F2Matrix::zero(0, 4);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.kernel().rank(), 0);
        let m = F2Matrix::zero(2, 0);
        assert_eq!(m.kernel().rank(), 2);
    }

    proptest! {
        #[test]
        fn rank_nullity(m in matrix(6, 5)) {
            let rank = m.rank();
            prop_assert_eq!(rank, brute_rank(&m));
            let kernel = m.kernel();
            prop_assert_eq!(rank + kernel.rank(), m.num_rows());
            for k in kernel.rows() {
                prop_assert!(m.apply(k).is_zero());
            }
        }

        #[test]
        fn echelon_basis_is_canonical(m in matrix(5, 7), seed in any::<u64>()) {
            // Same span inserted in a different order gives identical rows.
            let mut rows = m.rows().to_vec();
            let k = (seed as usize) % (rows.len() + 1);
            rows.rotate_left(k);
            let shuffled = F2Matrix::from_rows(7, rows);
            prop_assert_eq!(m.row_space(), shuffled.row_space());
        }
    }
}
