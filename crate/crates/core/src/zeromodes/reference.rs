//! Tabulated zero-mode counts of the qubit chain, used to flag census
//! disagreements.

/// `(N, f_E, f_P, f_G)` for N = 3..=11.
pub const TOTALS: &[(usize, i64, u64, usize)] = &[
    (3, 0, 6, 6),
    (4, 2, 10, 12),
    (5, 4, 16, 20),
    (6, 10, 26, 36),
    (7, 22, 42, 64),
    (8, 44, 68, 112),
    (9, 90, 110, 200),
    (10, 174, 178, 352),
    (11, 336, 288, 624),
];

/// Entangled zero modes per boson-number sector, `(N, [(#b, count)])`, for
/// N = 4..=11. Sectors not listed hold none.
pub const ENTANGLED_BY_SECTOR: &[(usize, &[(usize, i64)])] = &[
    (4, &[(1, 1), (3, 1)]),
    (5, &[(2, 2), (3, 2)]),
    (6, &[(2, 3), (3, 4), (4, 3)]),
    (7, &[(2, 2), (3, 9), (4, 9), (5, 2)]),
    (8, &[(3, 12), (4, 20), (5, 12)]),
    (9, &[(3, 9), (4, 36), (5, 36), (6, 9)]),
    (10, &[(3, 3), (4, 45), (5, 78), (6, 45), (7, 3)]),
    (11, &[(4, 37), (5, 131), (6, 131), (7, 37)]),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sector_rows_sum_to_totals() {
        for (n, cells) in ENTANGLED_BY_SECTOR {
            let sum: i64 = cells.iter().map(|c| c.1).sum();
            let total = TOTALS.iter().find(|t| t.0 == *n).unwrap();
            assert_eq!(sum, total.1, "N={n}");
        }
        for t in TOTALS {
            assert_eq!(t.1 + t.2 as i64, t.3 as i64);
        }
    }
}
