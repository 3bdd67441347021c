use num_traits::One;

use super::matrix::RationalMatrix;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Element of the monoid of `N x N` matrices with at most one nonzero entry
/// per row and per column, every entry being `+1` or `-1`. Closed under
/// products but not invertible in general (zero rows and columns are
/// allowed), which is exactly the shape of ghost creation and annihilation
/// operators on the Fock space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedPermMatrix {
    size: usize,
    /// For each column: the row it hits and the sign, or `None` for a zero
    /// column. No two columns may hit the same row.
    cols: Vec<Option<(usize, i8)>>,
}

impl SignedPermMatrix {
    /// The zero element.
    pub fn zero(size: usize) -> Self {
        SignedPermMatrix {
            size,
            cols: vec![None; size],
        }
    }

    pub fn identity(size: usize) -> Self {
        SignedPermMatrix {
            size,
            cols: (0..size).map(|i| Some((i, 1))).collect(),
        }
    }

    /// Builds from per-column entries, validating the monoid shape.
    pub fn from_columns(size: usize, cols: Vec<Option<(usize, i8)>>) -> Result<Self> {
        if cols.len() != size {
            return Err(Error::SignedPermInvariant(format!(
                "expected {size} columns, got {}",
                cols.len()
            )));
        }
        let mut row_used = vec![false; size];
        for (c, entry) in cols.iter().enumerate() {
            if let Some((r, s)) = entry {
                if *r >= size {
                    return Err(Error::SignedPermInvariant(format!(
                        "row index {r} out of range in column {c}"
                    )));
                }
                if *s != 1 && *s != -1 {
                    return Err(Error::SignedPermInvariant(format!(
                        "entry in column {c} must be +1 or -1"
                    )));
                }
                if row_used[*r] {
                    return Err(Error::SignedPermInvariant(format!(
                        "row {r} hit by more than one column"
                    )));
                }
                row_used[*r] = true;
            }
        }
        Ok(SignedPermMatrix { size, cols })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Option::is_none)
    }

    /// Entry at `(row, col)` as `0`, `+1` or `-1`.
    pub fn entry(&self, row: usize, col: usize) -> i8 {
        match self.cols[col] {
            Some((r, s)) if r == row => s,
            _ => 0,
        }
    }

    /// Image of basis column `col`: `(row, sign)` or `None`.
    pub fn column(&self, col: usize) -> Option<(usize, i8)> {
        self.cols[col]
    }

    /// Matrix product `self * rhs`, which stays inside the monoid.
    pub fn product(&self, rhs: &SignedPermMatrix) -> Result<SignedPermMatrix> {
        if self.size != rhs.size {
            return Err(Error::ShapeMismatch(format!(
                "monoid product of sizes {} and {}",
                self.size, rhs.size
            )));
        }
        let cols = rhs
            .cols
            .iter()
            .map(|entry| {
                entry.and_then(|(mid, s1)| self.cols[mid].map(|(row, s2)| (row, s1 * s2)))
            })
            .collect();
        // Row-injectivity is inherited from the factors; no revalidation
        // needed, but keep the cheap debug check.
        debug_assert!(Self::from_columns(self.size, {
            let v: Vec<_> = rhs
                .cols
                .iter()
                .map(|e| e.and_then(|(mid, s1)| self.cols[mid].map(|(row, s2)| (row, s1 * s2))))
                .collect();
            v
        })
        .is_ok());
        Ok(SignedPermMatrix {
            size: self.size,
            cols,
        })
    }

    pub fn to_rational(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.size, self.size);
        for (c, entry) in self.cols.iter().enumerate() {
            if let Some((r, s)) = entry {
                let v = if *s > 0 {
                    Rational::one()
                } else {
                    -Rational::one()
                };
                m.set(*r, c, v);
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identity_is_neutral() {
        let id = SignedPermMatrix::identity(4);
        let a = SignedPermMatrix::from_columns(4, vec![Some((2, -1)), None, Some((0, 1)), None])
            .unwrap();
        assert_eq!(id.product(&a).unwrap(), a);
        assert_eq!(a.product(&id).unwrap(), a);
    }

    #[test]
    fn rejects_duplicate_rows_and_bad_signs() {
        assert!(SignedPermMatrix::from_columns(2, vec![Some((0, 1)), Some((0, 1))]).is_err());
        assert!(SignedPermMatrix::from_columns(2, vec![Some((0, 2)), None]).is_err());
        assert!(SignedPermMatrix::from_columns(2, vec![Some((5, 1)), None]).is_err());
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let a = SignedPermMatrix::identity(2);
        let b = SignedPermMatrix::identity(3);
        assert!(a.product(&b).is_err());
    }

    fn arb_signed_perm(size: usize) -> impl Strategy<Value = SignedPermMatrix> {
        // Random injective partial map with signs: shuffle rows, keep a prefix.
        (
            Just(size),
            proptest::collection::vec(0usize..size, size),
            proptest::collection::vec(proptest::bool::ANY, size),
            proptest::collection::vec(proptest::bool::ANY, size),
        )
            .prop_map(|(size, perm_seed, keep, signs)| {
                let mut rows: Vec<usize> = (0..size).collect();
                for (i, &j) in perm_seed.iter().enumerate() {
                    rows.swap(i, j);
                }
                let cols = (0..size)
                    .map(|c| {
                        if keep[c] {
                            Some((rows[c], if signs[c] { 1 } else { -1 }))
                        } else {
                            None
                        }
                    })
                    .collect();
                SignedPermMatrix::from_columns(size, cols).unwrap()
            })
    }

    proptest! {
        #[test]
        fn product_agrees_with_dense_and_stays_in_monoid(
            a in arb_signed_perm(6),
            b in arb_signed_perm(6),
        ) {
            let p = a.product(&b).unwrap();
            // Closure: re-validating the representation must succeed.
            let revalidated = SignedPermMatrix::from_columns(6, (0..6).map(|c| p.column(c)).collect());
            prop_assert!(revalidated.is_ok());
            // Correctness against dense rational multiplication.
            prop_assert_eq!(p.to_rational(), a.to_rational().matmul(&b.to_rational()));
        }
    }
}
