//! Kernels of small dense matrices over a finite field.

use super::{Fe, Field};

/// Basis of the right kernel of `rows` (each row has `ncols` entries), read off the
/// reduced row echelon form: one vector per free column, in column order.
pub fn kernel(field: &Field, rows: &[Vec<Fe>], ncols: usize) -> Vec<Vec<Fe>> {
    let mut m: Vec<Vec<Fe>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pr) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][col].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                let pivot_row = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&factor * p);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -&m[i][free];
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_rank_one() {
        let k = Field::prime(5).unwrap();
        let row = vec![k.from_u64(1), k.from_u64(2), k.from_u64(3)];
        let ker = kernel(&k, std::slice::from_ref(&row), 3);
        assert_eq!(ker.len(), 2);
        for v in ker {
            let dot = row.iter().zip(&v).fold(k.zero(), |acc, (a, b)| &acc + &(a * b));
            assert!(dot.is_zero());
        }
        assert_eq!(kernel(&k, &[], 2).len(), 2);
    }
}
