//! Integer lattice membership by exact row-echelon reduction.
//!
//! The lattices here are spanned by a handful of short vectors (the divisor
//! relations), so a dense Hermite-style elimination over i128 is exact and
//! instant; no floating point is involved anywhere.

/// A lattice given by an integer row basis, reduced to echelon form.
#[derive(Debug, Clone)]
pub struct IntLattice {
    /// Echelon rows, each with its pivot column; pivots strictly increase.
    rows: Vec<(usize, Vec<i128>)>,
    width: usize,
}

impl IntLattice {
    /// Build from spanning rows (not necessarily independent).
    pub fn from_rows(span: &[Vec<i64>], width: usize) -> Self {
        let mut work: Vec<Vec<i128>> = span
            .iter()
            .map(|r| {
                assert_eq!(r.len(), width);
                r.iter().map(|&x| x as i128).collect()
            })
            .collect();
        let mut rows: Vec<(usize, Vec<i128>)> = Vec::new();
        for col in 0..width {
            loop {
                let mut nz: Vec<usize> = (0..work.len()).filter(|&r| work[r][col] != 0).collect();
                if nz.is_empty() {
                    break;
                }
                if nz.len() == 1 {
                    let row = work.swap_remove(nz[0]);
                    rows.push((col, row));
                    break;
                }
                // Reduce the two smallest entries against each other.
                nz.sort_by_key(|&r| work[r][col].unsigned_abs());
                let (small, big) = (nz[0], nz[1]);
                let q = work[big][col] / work[small][col];
                let reducer: Vec<i128> = work[small][col..].to_vec();
                for (x, s) in work[big][col..].iter_mut().zip(reducer) {
                    *x -= q * s;
                }
            }
        }
        for (_, row) in &mut rows {
            // Normalize pivot sign.
            let p = row.iter().find(|&&x| x != 0).copied().unwrap_or(0);
            if p < 0 {
                for x in row.iter_mut() {
                    *x = -*x;
                }
            }
        }
        IntLattice { rows, width }
    }

    /// True iff `v` is an integer combination of the basis rows.
    pub fn contains(&self, v: &[i64]) -> bool {
        assert_eq!(v.len(), self.width);
        let mut w: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for (pivot, row) in &self.rows {
            let x = w[*pivot];
            if x == 0 {
                continue;
            }
            let p = row[*pivot];
            if x % p != 0 {
                return false;
            }
            let q = x / p;
            for k in *pivot..self.width {
                w[k] -= q * row[k];
            }
        }
        w.iter().all(|&x| x == 0)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_plane_lattice() {
        // span{(2,0), (0,3)}: members are (even, multiple of 3)
        let l = IntLattice::from_rows(&[vec![2, 0], vec![0, 3]], 2);
        assert!(l.contains(&[4, -3]));
        assert!(!l.contains(&[1, 3]));
        assert!(!l.contains(&[2, 2]));
        assert!(l.contains(&[0, 0]));
        assert_eq!(l.rank(), 2);
    }

    #[test]
    fn dependent_rows_are_handled() {
        let l = IntLattice::from_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]], 3);
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&[1, 3, 4]));
        assert!(l.contains(&[3, 7, 10]));
        assert!(!l.contains(&[0, 0, 1]));
    }

    #[test]
    fn gcd_reduction_inside_column() {
        // span{(4,1),(6,1)}: contains (2,0); echelon needs gcd steps
        let l = IntLattice::from_rows(&[vec![4, 1], vec![6, 1]], 2);
        assert!(l.contains(&[2, 0]));
        assert!(l.contains(&[4, 1]));
        assert!(l.contains(&[10, 2]));
        assert!(!l.contains(&[1, 0]));
        assert!(!l.contains(&[3, 1]));
    }
}
