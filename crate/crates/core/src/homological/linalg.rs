//! Exact matrix rank over the rationals or a prime field.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::FieldChoice;

/// Rank of an integer matrix, read over `field`.
pub fn rank(matrix: &[Vec<i64>], field: FieldChoice) -> usize {
    match field {
        FieldChoice::Rationals => rank_rational(matrix),
        FieldChoice::Prime(p) => rank_mod_p(matrix, p),
    }
}

/// Fraction-free (Bareiss) elimination in `i128`, restarted with big
/// integers if an intermediate value overflows.
pub fn rank_rational(matrix: &[Vec<i64>]) -> usize {
    let small: Vec<Vec<i128>> = matrix.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    match bareiss_i128(small) {
        Some(r) => r,
        None => {
            let big = matrix.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            bareiss_big(big)
        }
    }
}

fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        let pivot = a[r][c];
        for i in r + 1..rows {
            let lead = a[i][c];
            for j in c + 1..cols {
                let x = pivot.checked_mul(a[i][j])?.checked_sub(lead.checked_mul(a[r][j])?)?;
                a[i][j] = x / prev;
            }
            a[i][c] = 0;
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        for i in r + 1..rows {
            let lead = a[i][c].clone();
            for j in c + 1..cols {
                let x = &pivot * &a[i][j] - &lead * &a[r][j];
                a[i][j] = x / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// Plain Gaussian elimination modulo a prime.
pub fn rank_mod_p(matrix: &[Vec<i64>], p: u64) -> usize {
    let pm = p as i128;
    let mut a: Vec<Vec<u64>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| (x as i128).rem_euclid(pm) as u64).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, piv);
        let inv = mod_pow(a[r][c], p - 2, p);
        for j in c..cols {
            a[r][j] = mul_mod(a[r][j], inv, p);
        }
        for i in r + 1..rows {
            let f = a[i][c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                let sub = mul_mod(f, a[r][j], p);
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
        r += 1;
    }
    r
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]];
        assert_eq!(rank_rational(&m), 2);
        assert_eq!(rank_mod_p(&m, 2), 1);
        assert_eq!(rank_mod_p(&m, 3), 2);
        let id = vec![vec![2, 0], vec![0, 2]];
        assert_eq!(rank_rational(&id), 2);
        assert_eq!(rank_mod_p(&id, 2), 0);
        assert_eq!(rank_rational(&[]), 0);
        assert_eq!(rank_rational(&[vec![0, 0]]), 0);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        // The second elimination step multiplies two ~2^124 values.
        let big = 1i64 << 62;
        let m = vec![vec![big, 1, 0], vec![1, big, 1], vec![0, 1, big]];
        let wide: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        assert_eq!(bareiss_i128(wide), None);
        assert_eq!(rank_rational(&m), 3);
        assert_eq!(rank_rational(&[vec![big, 1], vec![big, 1]]), 1);
    }
}
