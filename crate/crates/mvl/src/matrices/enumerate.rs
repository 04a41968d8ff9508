//! Counting n-valued logics and the totient chain onto primes.

use num::bigint::BigUint;
use num::One;

/// Number of n-valued logics with connectives of the given arities:
/// the product of `n^(n^m)` over the arities `m`.
pub fn count_logics(n: u32, arities: &[u32]) -> BigUint {
    assert!(n >= 2, "need at least two truth values");
    let base = BigUint::from(n);
    let mut total = BigUint::one();
    for &m in arities {
        let exponent = (n as u64).pow(m);
        total *= pow_big(&base, exponent);
    }
    total
}

fn pow_big(base: &BigUint, mut exp: u64) -> BigUint {
    let mut acc = BigUint::one();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= &sq;
        }
        exp >>= 1;
        if exp > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Euler's totient by trial factorization.
pub fn totient(mut n: u64) -> u64 {
    let mut result = n;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            while n % d == 0 {
                n /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Iterates `k -> totient(k) + 1` from `n` until a prime is reached.
/// Primes are fixed points, so the chain for a prime is just `[n]`.
/// Returns the prime together with the whole chain including `n`.
pub fn euler_chain(n: u64) -> (u64, Vec<u64>) {
    assert!(n >= 2);
    let mut chain = vec![n];
    let mut current = n;
    while !is_prime(current) {
        current = totient(current) + 1;
        chain.push(current);
    }
    (current, chain)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn logic_counts() {
        assert_eq!(count_logics(3, &[1]), BigUint::from(27u32));
        assert_eq!(count_logics(2, &[2]), BigUint::from(16u32));
        assert_eq!(count_logics(2, &[1, 2]), BigUint::from(64u32));
    }

    #[test]
    fn totient_small_values() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(10), 4);
        assert_eq!(totient(14), 6);
        assert_eq!(totient(36), 12);
    }

    #[test]
    fn chains_terminate_at_primes() {
        assert_eq!(euler_chain(7), (7, vec![7]));
        assert_eq!(euler_chain(10), (5, vec![10, 5]));
        assert_eq!(euler_chain(14), (7, vec![14, 7]));
        let (p, chain) = euler_chain(100);
        assert!(is_prime(p));
        assert_eq!(chain.last(), Some(&p));
        // Strictly decreasing after the start until the prime.
        for w in chain.windows(2) {
            assert!(w[1] < w[0]);
        }
    }
}
