//! Dense Gauss-Jordan elimination over a prime field.

use crate::field::PrimeField;

/// Reduce `rows` in place to the unique reduced row echelon form.
/// Pivoting is deterministic: leftmost column first, first nonzero row.
/// Returns the rank; zero rows end up at the bottom.
pub(crate) fn rref_in_place(rows: &mut [Vec<u64>], field: &PrimeField) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut pivot_row = 0;
    for col in 0..ncols {
        if pivot_row == nrows {
            break;
        }
        let Some(src) = (pivot_row..nrows).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, src);
        let inv = field.inv(rows[pivot_row][col]);
        if inv != 1 {
            for x in rows[pivot_row][col..].iter_mut() {
                *x = field.mul(*x, inv);
            }
        }
        for r in 0..nrows {
            if r == pivot_row || rows[r][col] == 0 {
                continue;
            }
            let factor = rows[r][col];
            let (head, tail) = rows.split_at_mut(pivot_row.max(r));
            let (pivot, target) = if r > pivot_row {
                (&head[pivot_row], &mut tail[0])
            } else {
                (&tail[0], &mut head[r])
            };
            for (x, &p) in target[col..].iter_mut().zip(&pivot[col..]) {
                if p != 0 {
                    *x = field.sub(*x, field.mul(factor, p));
                }
            }
        }
        pivot_row += 1;
    }
    pivot_row
}

/// Rank of a dense matrix over the field (the matrix is consumed).
pub(crate) fn rank(mut rows: Vec<Vec<u64>>, field: &PrimeField) -> usize {
    rref_in_place(&mut rows, field)
}
