//! Exact matrix rank over `Q` and over prime fields.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::Characteristic;

/// Rank of an integer matrix (rows of equal length) over the given field.
pub fn rank(rows: &[Vec<i64>], characteristic: Characteristic) -> Result<usize> {
    match characteristic {
        Characteristic::Zero => Ok(rank_rational(rows)),
        Characteristic::Prime(p) => {
            if !is_prime(p) {
                return Err(Error::InvalidArgument(format!("{p} is not a prime")));
            }
            Ok(rank_mod_p(rows, u64::from(p)))
        }
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn rank_rational(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = BigRational::one() / m[rank][col].clone();
        for c in col..ncols {
            m[rank][c] = &m[rank][c] * &inv;
        }
        for r in 0..m.len() {
            if r == rank || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..ncols {
                let delta = &factor * &m[rank][c];
                m[r][c] -= delta;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let reduce = |x: i64| -> u64 { x.rem_euclid(p as i64) as u64 };
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&x| reduce(x)).collect()).collect();
    let ncols = m.first().map_or(0, Vec::len);
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = pow(m[rank][col], p - 2);
        for c in col..ncols {
            m[rank][c] = m[rank][c] * inv % p;
        }
        for r in 0..m.len() {
            if r == rank || m[r][col] == 0 {
                continue;
            }
            let factor = m[r][col];
            for c in col..ncols {
                m[r][c] = (m[r][c] + p - factor * m[rank][c] % p) % p;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]];
        assert_eq!(rank(&m, Characteristic::Zero).unwrap(), 2);
        assert_eq!(rank(&[], Characteristic::Zero).unwrap(), 0);
        assert_eq!(rank(&[vec![0, 0]], Characteristic::Zero).unwrap(), 0);
    }

    #[test]
    fn characteristic_matters() {
        // det = 2: full rank over Q, rank 1 over F_2.
        let m = vec![vec![1, 1], vec![1, -1]];
        assert_eq!(rank(&m, Characteristic::Zero).unwrap(), 2);
        assert_eq!(rank(&m, Characteristic::Prime(2)).unwrap(), 1);
        assert_eq!(rank(&m, Characteristic::Prime(3)).unwrap(), 2);
        assert!(rank(&m, Characteristic::Prime(4)).is_err());
    }
}
