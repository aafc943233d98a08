//! Small integer helpers for group orders.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `Some(p)` if `n = p^k` with `k >= 1`.
pub fn prime_power_base(n: u64) -> Option<u64> {
    match prime_divisors(n).as_slice() {
        [p] => Some(*p),
        _ => None,
    }
}

pub fn is_prime_power(n: u64) -> bool {
    prime_power_base(n).is_some()
}

/// Largest divisor of `n` that is a power of `p`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// Largest divisor of `n` whose prime divisors all lie in `primes`.
pub fn pi_part(n: u64, primes: &[u64]) -> u64 {
    primes.iter().map(|&p| p_part(n, p)).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        assert!(is_prime(7) && !is_prime(1) && !is_prime(49));
        assert_eq!(prime_divisors(1176), vec![2, 3, 7]);
        assert_eq!(prime_power_base(49), Some(7));
        assert_eq!(prime_power_base(1), None);
        assert_eq!(prime_power_base(12), None);
        assert_eq!(p_part(1176, 7), 49);
        assert_eq!(pi_part(60, &[2, 3]), 12);
    }
}
