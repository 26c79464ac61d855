use std::collections::BTreeMap;

use num_traits::Zero;

use super::rational::Rational;
use super::LinalgError;

/// Sparse structure constants of a bilinear operation:
/// `e_i · e_j = Σ_k c[(i, j, k)] e_k`. Absent entries are zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Tensor3 {
    dim: usize,
    entries: BTreeMap<[usize; 3], Rational>,
}

/// Sparse structure constants of a trilinear operation:
/// `(e_i, e_j, e_k) = Σ_l d[(i, j, k, l)] e_l`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Tensor4 {
    dim: usize,
    entries: BTreeMap<[usize; 4], Rational>,
}

macro_rules! sparse_tensor {
    ($name:ident, $rank:literal) => {
        impl $name {
            pub fn new(dim: usize) -> Self {
                $name {
                    dim,
                    entries: BTreeMap::new(),
                }
            }

            pub fn dim(&self) -> usize {
                self.dim
            }

            pub fn get(&self, idx: [usize; $rank]) -> Rational {
                self.entries
                    .get(&idx)
                    .cloned()
                    .unwrap_or_else(Rational::zero)
            }

            /// Stores a coefficient; zero removes the entry.
            pub fn set(&mut self, idx: [usize; $rank], value: Rational) -> Result<(), LinalgError> {
                if let Some(&bad) = idx.iter().find(|&&i| i >= self.dim) {
                    return Err(LinalgError::IndexOutOfRange {
                        index: bad,
                        dim: self.dim,
                    });
                }
                if value.is_zero() {
                    self.entries.remove(&idx);
                } else {
                    self.entries.insert(idx, value);
                }
                Ok(())
            }

            pub fn add_to(
                &mut self,
                idx: [usize; $rank],
                value: Rational,
            ) -> Result<(), LinalgError> {
                let v = self.get(idx) + value;
                self.set(idx, v)
            }

            pub fn iter(&self) -> impl Iterator<Item = (&[usize; $rank], &Rational)> {
                self.entries.iter()
            }

            pub fn nnz(&self) -> usize {
                self.entries.len()
            }

            pub fn is_zero(&self) -> bool {
                self.entries.is_empty()
            }
        }
    };
}

sparse_tensor!(Tensor3, 3);
sparse_tensor!(Tensor4, 4);

impl Tensor3 {
    /// Bilinear extension: `Σ a_i b_j c^k_ij e_k`.
    pub fn contract(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (&[i, j, k], c) in &self.entries {
            if a[i].is_zero() || b[j].is_zero() {
                continue;
            }
            out[k] += &a[i] * &b[j] * c;
        }
        out
    }
}

impl Tensor4 {
    /// Trilinear extension: `Σ a_i b_j c_k d^l_ijk e_l`.
    pub fn contract(&self, a: &[Rational], b: &[Rational], c: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (&[i, j, k, l], d) in &self.entries {
            if a[i].is_zero() || b[j].is_zero() || c[k].is_zero() {
                continue;
            }
            out[l] += &a[i] * &b[j] * &c[k] * d;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;

    #[test]
    fn out_of_range_index_rejected() {
        let mut t = Tensor3::new(3);
        assert_eq!(
            t.set([0, 3, 1], int(1)),
            Err(LinalgError::IndexOutOfRange { index: 3, dim: 3 })
        );
    }

    #[test]
    fn zero_entries_are_not_stored() {
        let mut t = Tensor4::new(2);
        t.set([0, 1, 0, 1], int(2)).unwrap();
        t.add_to([0, 1, 0, 1], int(-2)).unwrap();
        assert!(t.is_zero());
    }

    #[test]
    fn contraction_is_bilinear() {
        let mut t = Tensor3::new(2);
        t.set([0, 1, 0], int(3)).unwrap();
        let out = t.contract(&[int(2), int(0)], &[int(1), int(5)]);
        assert_eq!(out, vec![int(30), int(0)]);
    }
}
