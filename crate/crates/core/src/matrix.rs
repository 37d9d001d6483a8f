//! Dense square matrix of `f64` with symmetric update helpers.

use alloc::vec;
use alloc::vec::Vec;

/// Row-major `n x n` matrix. Pheromone and deposit tables are stored here;
/// writers that must keep the table symmetric go through [`SquareMatrix::set_sym`]
/// and [`SquareMatrix::add_sym`].
#[derive(Clone, Debug, PartialEq)]
pub struct SquareMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SquareMatrix {
    /// Creates an `n x n` matrix with every entry set to `value`.
    pub fn filled(n: usize, value: f64) -> Self {
        SquareMatrix {
            n,
            data: vec![value; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set_sym(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }

    /// Adds `delta` to both `(i, j)` and `(j, i)`.
    #[inline]
    pub fn add_sym(&mut self, i: usize, j: usize, delta: f64) {
        self.data[i * self.n + j] += delta;
        if i != j {
            self.data[j * self.n + i] += delta;
        }
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_updates_stay_symmetric() {
        let mut m = SquareMatrix::filled(4, 1.0);
        m.set_sym(0, 2, 3.5);
        m.add_sym(2, 0, 0.5);
        assert_eq!(m.get(0, 2), 4.0);
        assert_eq!(m.get(2, 0), 4.0);
        assert!(m.is_symmetric());
    }

    #[test]
    fn add_sym_on_diagonal_adds_once() {
        let mut m = SquareMatrix::filled(3, 0.0);
        m.add_sym(1, 1, 2.0);
        assert_eq!(m.get(1, 1), 2.0);
    }
}
