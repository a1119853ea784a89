use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SeriesId {
    /// Qubit-chain product zero modes.
    GF,
    /// Fibonacci fusion dimensions.
    AF,
    /// Doubled-chain product zero modes.
    GJk,
    /// JK fusion dimensions.
    AJk,
    /// All qubit-chain zero modes.
    GTotal,
    /// Entangled qubit-chain zero modes.
    EEntangled,
}

impl SeriesId {
    pub const ALL: [SeriesId; 6] = [
        SeriesId::GF,
        SeriesId::AF,
        SeriesId::GJk,
        SeriesId::AJk,
        SeriesId::GTotal,
        SeriesId::EEntangled,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesId::GF => "g_F",
            SeriesId::AF => "a_F",
            SeriesId::GJk => "g_JK",
            SeriesId::AJk => "a_JK",
            SeriesId::GTotal => "g_total",
            SeriesId::EEntangled => "e_entangled",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|id| id.name() == name)
            .ok_or_else(|| Error::Unknown {
                kind: "series",
                name: name.to_string(),
            })
    }
}

/// Rational generating function `numerator / denominator`, coefficients in
/// increasing powers of `t`. The denominator's constant term is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesSpec {
    numerator: Vec<BigInt>,
    denominator: Vec<BigInt>,
}

fn ints(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

impl SeriesSpec {
    pub fn new(numerator: Vec<BigInt>, denominator: Vec<BigInt>) -> Result<Self> {
        match denominator.first() {
            Some(c) if c.is_one() => {}
            _ => {
                return Err(Error::invalid(
                    "series denominator must have constant term 1",
                ))
            }
        }
        if numerator.first().is_some_and(|c| !c.is_zero()) {
            return Err(Error::invalid("series must start at t^1"));
        }
        Ok(SeriesSpec {
            numerator,
            denominator,
        })
    }

    pub fn builtin(id: SeriesId) -> Self {
        let (num, den): (&[i64], &[i64]) = match id {
            SeriesId::GF => (&[0, 2, 2], &[1, -1, -1]),
            SeriesId::AF => (&[0, 1], &[1, -1, -1]),
            SeriesId::GJk => (&[0, 4, 8], &[1, -2, -4]),
            SeriesId::AJk => (&[0, 1], &[1, -1, -2]),
            SeriesId::GTotal => (&[0, 2, 4, 2], &[1, 0, -2, -2]),
            // g_total − g_F over the common denominator.
            SeriesId::EEntangled => (&[0, 0, 0, 0, 2, 2], &[1, -1, -3, 0, 4, 2]),
        };
        SeriesSpec::new(ints(num), ints(den)).expect("builtin series are well formed")
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[BigInt] {
        &self.denominator
    }
}

/// Coefficients of `t^1 … t^k`.
pub fn series_coefficients(spec: &SeriesSpec, k: usize) -> Result<Vec<BigInt>> {
    if k == 0 {
        return Err(Error::invalid("need at least one coefficient"));
    }
    let mut c: Vec<BigInt> = vec![BigInt::zero()];
    for n in 1..=k {
        let mut v = spec.numerator.get(n).cloned().unwrap_or_default();
        for (i, d) in spec.denominator.iter().enumerate().skip(1).take(n) {
            v -= d * &c[n - i];
        }
        c.push(v);
    }
    c.remove(0);
    Ok(c)
}
