//! Exact solution of consistent overdetermined rational systems by
//! multi-modular elimination, CRT and rational reconstruction. Every
//! returned solution is re-checked over Q against all equations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::Q;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("system does not determine the unknowns uniquely")]
    RankDeficient,
    #[error("system has no solution")]
    Inconsistent,
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Primes just below 2^62, largest first.
pub struct PrimeStream {
    next: u64,
}

impl PrimeStream {
    pub fn new() -> Self {
        PrimeStream { next: (1u64 << 62) - 1 }
    }
}

impl Default for PrimeStream {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for PrimeStream {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        while !is_prime_u64(self.next) {
            self.next -= 2;
        }
        let p = self.next;
        self.next -= 2;
        Some(p)
    }
}

fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if a == 0 {
        return None;
    }
    Some(pow_mod(a, m - 2, m))
}

fn bigint_mod(x: &BigInt, m: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(m));
    r.to_u64().unwrap()
}

pub fn q_mod(x: &Q, m: u64) -> Option<u64> {
    let n = bigint_mod(x.numer(), m);
    let d = bigint_mod(x.denom(), m);
    Some(mul_mod(n, inv_mod(d, m)?, m))
}

enum ModOutcome {
    Solved(Vec<u64>),
    BadPrime,
    RankDeficient,
    Inconsistent,
}

fn solve_mod(rows: &[Vec<Q>], rhs: &[Q], p: u64) -> ModOutcome {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut m: Vec<Vec<u64>> = Vec::with_capacity(rows.len());
    for (r, b) in rows.iter().zip(rhs) {
        let mut row = Vec::with_capacity(ncols + 1);
        for x in r.iter().chain(std::iter::once(b)) {
            match q_mod(x, p) {
                Some(v) => row.push(v),
                None => return ModOutcome::BadPrime,
            }
        }
        m.push(row);
    }
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(ncols);
    for col in 0..ncols {
        let Some(sel) = (pivot_row..m.len()).find(|&i| m[i][col] != 0) else {
            return ModOutcome::RankDeficient;
        };
        m.swap(pivot_row, sel);
        let inv = inv_mod(m[pivot_row][col], p).unwrap();
        for x in m[pivot_row][col..].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let prow = m[pivot_row].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == pivot_row || row[col] == 0 {
                continue;
            }
            let f = row[col];
            for (x, &y) in row[col..].iter_mut().zip(&prow[col..]) {
                *x = (*x + p - mul_mod(f, y, p)) % p;
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if m[pivot_row..].iter().any(|row| row[ncols] != 0) {
        return ModOutcome::Inconsistent;
    }
    ModOutcome::Solved(pivots.iter().map(|&i| m[i][ncols]).collect())
}

/// Wang's rational reconstruction of `a mod m`.
pub fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<Q> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let qt = &r0 / &r1;
        let r2 = &r0 - &qt * &r1;
        let t2 = &t0 - &qt * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    if r1.gcd(&t1) != BigInt::one() {
        return None;
    }
    Some(Q::new(r1, t1))
}

fn verify(rows: &[Vec<Q>], rhs: &[Q], x: &[Q]) -> bool {
    rows.iter().zip(rhs).all(|(r, b)| {
        let mut s = Q::zero();
        for (a, v) in r.iter().zip(x) {
            if !a.is_zero() && !v.is_zero() {
                s += a * v;
            }
        }
        &s == b
    })
}

/// Unique solution of `rows · x = rhs`, certified exactly.
pub fn solve_exact(rows: &[Vec<Q>], rhs: &[Q]) -> Result<Vec<Q>, SolveError> {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    if ncols == 0 {
        return if rhs.iter().all(|b| b.is_zero()) { Ok(vec![]) } else { Err(SolveError::Inconsistent) };
    }
    if rows.len() < ncols {
        return Err(SolveError::RankDeficient);
    }
    let mut residues: Vec<BigInt> = vec![BigInt::zero(); ncols];
    let mut modulus = BigInt::one();
    let mut strikes_rank = 0;
    let mut strikes_incons = 0;
    let mut last: Option<Vec<Q>> = None;
    for p in PrimeStream::new().take(400) {
        match solve_mod(rows, rhs, p) {
            ModOutcome::BadPrime => continue,
            ModOutcome::RankDeficient => {
                strikes_rank += 1;
                if strikes_rank >= 3 {
                    return Err(SolveError::RankDeficient);
                }
                continue;
            }
            ModOutcome::Inconsistent => {
                strikes_incons += 1;
                if strikes_incons >= 3 {
                    return Err(SolveError::Inconsistent);
                }
                continue;
            }
            ModOutcome::Solved(sol) => {
                let pb = BigInt::from(p);
                let inv = BigInt::from(inv_mod(bigint_mod(&modulus, p), p).unwrap());
                for (r, s) in residues.iter_mut().zip(sol) {
                    // r' = r + M * ((s - r) * M^{-1} mod p)
                    let diff = (BigInt::from(s) - &*r).mod_floor(&pb);
                    let k = (diff * &inv).mod_floor(&pb);
                    *r = &*r + &modulus * k;
                }
                modulus *= pb;
                let rec: Option<Vec<Q>> = residues.iter().map(|r| rational_reconstruct(r, &modulus)).collect();
                if let Some(x) = rec {
                    if last.as_ref() == Some(&x) && verify(rows, rhs, &x) {
                        return Ok(x);
                    }
                    last = Some(x);
                }
            }
        }
    }
    Err(SolveError::Inconsistent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{q, qf};

    #[test]
    fn reconstructs_fractions() {
        let rows = vec![vec![q(1), q(1)], vec![q(1), q(-1)], vec![q(2), q(3)]];
        let x = [qf(7, 3), qf(-5, 11)];
        let rhs: Vec<Q> = rows.iter().map(|r| &r[0] * &x[0] + &r[1] * &x[1]).collect();
        assert_eq!(solve_exact(&rows, &rhs).unwrap(), x.to_vec());
    }

    #[test]
    fn detects_rank_and_inconsistency() {
        let rows = vec![vec![q(1), q(2)], vec![q(2), q(4)], vec![q(3), q(6)]];
        assert_eq!(solve_exact(&rows, &[q(1), q(2), q(3)]), Err(SolveError::RankDeficient));
        let rows = vec![vec![q(1)], vec![q(1)]];
        assert_eq!(solve_exact(&rows, &[q(1), q(2)]), Err(SolveError::Inconsistent));
    }

    #[test]
    fn primes_are_prime() {
        let ps: Vec<u64> = PrimeStream::new().take(3).collect();
        assert!(ps.iter().all(|&p| is_prime_u64(p) && p < (1 << 62)));
        assert!(ps[0] > ps[1]);
    }
}
