//! Exact integer recursions for zero-mode and fusion-space counts.
//!
//! Every function is defined at `n = 0` so chain segments of length zero
//! can be multiplied in; the value there is the empty-word count.

use num_bigint::BigUint;
use num_traits::{One, Zero};

fn two_term(n: usize, first: [u64; 3], step: impl Fn(&BigUint, &BigUint) -> BigUint) -> BigUint {
    if n < 3 {
        return BigUint::from(first[n]);
    }
    let mut prev2 = BigUint::from(first[1]);
    let mut prev1 = BigUint::from(first[2]);
    for _ in 3..=n {
        let next = step(&prev1, &prev2);
        prev2 = std::mem::replace(&mut prev1, next);
    }
    prev1
}

/// Product zero modes of the qubit chain: 1, 2, 4, 6, 10, …
pub fn qubit_product(n: usize) -> BigUint {
    two_term(n, [1, 2, 4], |a, b| a + b)
}

/// `m^n` times [`qubit_product`], via `h(n) = m·h(n−1) + m²·h(n−2)`.
pub fn index_dressed_product(m: usize, n: usize) -> BigUint {
    let m = BigUint::from(m);
    match n {
        0 => BigUint::one(),
        1 => &m * 2u32,
        _ => {
            let mut prev2 = &m * 2u32;
            let mut prev1 = &m * &m * 4u32;
            for _ in 3..=n {
                let next = &m * &prev1 + &m * &m * &prev2;
                prev2 = std::mem::replace(&mut prev1, next);
            }
            prev1
        }
    }
}

/// Product zero modes of the doubled JK chain, `j_P(n) = 2(j_P(n−1) + 2 j_P(n−2))`.
pub fn jk_product(n: usize) -> BigUint {
    two_term(n, [1, 4, 16], |a, b| (a + b * 2u32) * 2u32)
}

/// Pair-aligned product zero modes of the Ising-type chain with `m`-fold sites.
pub fn ising_product(m: usize, n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    BigUint::from(m).pow(n as u32) * 2u32
}

/// Fibonacci fusion dimension `F_n` (τ outcome).
pub fn fibonacci(n: usize) -> BigUint {
    two_term(n, [0, 1, 1], |a, b| a + b)
}

/// JK fusion dimension `j(n) = j(n−1) + 2 j(n−2)` (τ outcome).
pub fn jk_fusion(n: usize) -> BigUint {
    two_term(n, [0, 1, 1], |a, b| a + b * 2u32)
}

/// Total zero modes of the qubit chain, `f_G(n) = 2(f_G(n−2) + f_G(n−3))`.
pub fn qubit_ground_total(n: usize) -> BigUint {
    three_term(n, [1, 2, 4], |_, b, c| (b + c) * 2u32)
}

/// Entangled zero modes of the qubit chain,
/// `f_E(n) = 2(f_E(n−2) + f_E(n−3)) + f_P(n−3)` with `f_E(0..=3) = 0`.
pub fn qubit_entangled(n: usize) -> BigUint {
    if n <= 3 {
        return BigUint::zero();
    }
    let mut vals: Vec<BigUint> = vec![BigUint::zero(); 4];
    for k in 4..=n {
        let next = (&vals[k - 2] + &vals[k - 3]) * 2u32 + qubit_product(k - 3);
        vals.push(next);
    }
    vals.swap_remove(n)
}

fn three_term(
    n: usize,
    first: [u64; 3],
    step: impl Fn(&BigUint, &BigUint, &BigUint) -> BigUint,
) -> BigUint {
    let mut vals: Vec<BigUint> = first.iter().map(|&x| BigUint::from(x)).collect();
    for k in 3..=n {
        let next = step(&vals[k - 1], &vals[k - 2], &vals[k - 3]);
        vals.push(next);
    }
    vals.swap_remove(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(xs: &[u64]) -> Vec<BigUint> {
        xs.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn qubit_product_values() {
        let got: Vec<_> = (1..=11).map(qubit_product).collect();
        assert_eq!(got, big(&[2, 4, 6, 10, 16, 26, 42, 68, 110, 178, 288]));
    }

    #[test]
    fn jk_fusion_values() {
        let got: Vec<_> = (1..=8).map(jk_fusion).collect();
        assert_eq!(got, big(&[1, 1, 3, 5, 11, 21, 43, 85]));
    }

    #[test]
    fn ground_and_entangled_values() {
        let g: Vec<_> = (3..=11).map(qubit_ground_total).collect();
        assert_eq!(g, big(&[6, 12, 20, 36, 64, 112, 200, 352, 624]));
        let e: Vec<_> = (3..=11).map(qubit_entangled).collect();
        assert_eq!(e, big(&[0, 2, 4, 10, 22, 44, 90, 174, 336]));
    }

    #[test]
    fn dressed_product_generalises_jk() {
        for n in 0..=30 {
            assert_eq!(index_dressed_product(2, n), jk_product(n));
            assert_eq!(index_dressed_product(1, n), qubit_product(n));
            assert_eq!(
                index_dressed_product(3, n),
                BigUint::from(3u32).pow(n as u32) * qubit_product(n)
            );
        }
    }
}
