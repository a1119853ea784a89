//! Test-only oracles that share no code with the library.

#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;

/// Rank by Gaussian elimination with full pivoting; pivots at or below
/// `tol · max|entry|` count as zero.
pub fn rank(m: &DMatrix<Complex64>, tol: f64) -> usize {
    let mut a = m.clone();
    let (rows, cols) = a.shape();
    let scale = a.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return 0;
    }
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let mut best = (r, c, 0.0);
        for i in r..rows {
            for j in c..cols {
                let v = a[(i, j)].norm();
                if v > best.2 {
                    best = (i, j, v);
                }
            }
        }
        if best.2 <= tol * scale {
            break;
        }
        a.swap_rows(r, best.0);
        a.swap_columns(c, best.1);
        let pivot = a[(r, c)];
        for i in r + 1..rows {
            let f = a[(i, c)] / pivot;
            if f.norm() == 0.0 {
                continue;
            }
            for j in c..cols {
                let v = a[(r, j)];
                a[(i, j)] -= f * v;
            }
        }
        r += 1;
    }
    r
}

/// Fibonacci numbers with F(1) = F(2) = 1, by direct iteration.
pub fn fib(n: usize) -> u128 {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..n {
        let next = a + b;
        a = b;
        b = next;
    }
    a
}

/// Words over `alphabet` of length `n` in lexicographic order.
pub fn all_words(alphabet: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..alphabet).map(move |k| {
                    let mut next = w.clone();
                    next.push(k);
                    next
                })
            })
            .collect();
    }
    out
}
