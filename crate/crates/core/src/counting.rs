//! Exact elementary counting functions.

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Stirling numbers of the second kind via `S(n,k) = k S(n-1,k) + S(n-1,k-1)`.
pub fn stirling2(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    // row[j] holds S(i, j) for the current i
    let mut row = vec![BigUint::zero(); k + 1];
    row[0] = BigUint::one();
    for _ in 1..=n {
        for j in (1..=k).rev() {
            row[j] = &row[j] * BigUint::from(j) + &row[j - 1];
        }
        row[0] = BigUint::zero();
    }
    row[k].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    /// Counts set partitions of `[n]` into exactly `k` blocks by restricted
    /// growth strings.
    fn set_partitions(n: usize, k: usize) -> u64 {
        fn go(i: usize, n: usize, k: usize, used: usize) -> u64 {
            if i == n {
                return u64::from(used == k);
            }
            let mut total = 0;
            for b in 0..=used.min(k.saturating_sub(1)) {
                total += go(i + 1, n, k, if b == used { used + 1 } else { used });
            }
            total
        }
        go(0, n, k, 0)
    }

    #[test]
    fn stirling_small_values() {
        assert_eq!(stirling2(3, 2), big(3));
        assert_eq!(stirling2(4, 3), big(6));
        assert_eq!(stirling2(0, 0), big(1));
        assert_eq!(stirling2(5, 0), big(0));
        for n in 0..=8 {
            for k in 0..=n {
                assert_eq!(stirling2(n, k), big(set_partitions(n, k)), "S({n},{k})");
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(7, 4), big(35));
        assert_eq!(binomial(5, 5), big(1));
        assert_eq!(binomial(3, 4), big(0));
        for n in 1..=20 {
            assert_eq!(binomial(n - 1, n - 1), big(1));
            let row: BigUint = (0..=n).map(|k| binomial(n, k)).sum();
            assert_eq!(row, big(1 << n));
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), big(1));
        assert_eq!(factorial(10), big(3_628_800));
        assert_eq!(factorial(25).to_string(), "15511210043330985984000000");
    }
}
