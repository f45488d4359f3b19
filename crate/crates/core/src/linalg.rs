//! Dense Gaussian elimination over any exact [`Field`].

use crate::scalar::Field;

/// Reduces `rows` in place to reduced row echelon form and drops zero rows.
/// Returns the pivot column of each remaining row.
pub fn rref<F: Field>(rows: &mut Vec<Vec<F>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for c in col..ncols {
                rows[r][c] = rows[r][c].clone() * inv.clone();
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for c in col..ncols {
                if !pivot_row[c].is_zero() {
                    row[c] = row[c].clone() - f.clone() * pivot_row[c].clone();
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Solves the square system `m * x = rhs`; `None` when `m` is singular.
pub fn solve<F: Field>(m: &[Vec<F>], rhs: &[F]) -> Option<Vec<F>> {
    let n = m.len();
    let mut aug: Vec<Vec<F>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n].clone()).collect())
}

/// Basis of the right null space `{x : m x = 0}`.
pub fn nullspace<F: Field>(m: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut rows = m.to_vec();
    let pivots = rref(&mut rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); ncols];
            v[f] = F::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    #[test]
    fn rref_drops_dependent_rows() {
        let mut a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let piv = rref(&mut a);
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(a, m(&[&[1, 0, 1], &[0, 1, 1]]));
    }

    #[test]
    fn solve_and_singular() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let x = solve(&a, &[int(3), int(4)]).unwrap();
        assert_eq!(x, vec![int(1), int(1)]);
        assert!(solve(&m(&[&[1, 2], &[2, 4]]), &[int(1), int(2)]).is_none());
    }

    #[test]
    fn nullspace_is_killed() {
        let a = m(&[&[1, 1, 0], &[0, 1, 1]]);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 1);
        for row in &a {
            let dot = row
                .iter()
                .zip(&ns[0])
                .fold(int(0), |acc, (x, y)| acc + x * y);
            assert_eq!(dot, int(0));
        }
    }
}
