//! Small integer helpers shared by the abelian and localization code.

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

/// Prime factorization as `(p, e)` pairs in increasing `p`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `Some(p)` if `n` is a positive power of the prime `p`.
pub fn prime_of_power(n: u64) -> Option<u64> {
    match factorize(n).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

pub fn is_power_of(n: u64, p: u64) -> bool {
    let mut n = n;
    if n == 0 {
        return false;
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime_above(n: u64) -> u64 {
    let mut q = n + 1;
    while !is_prime(q) {
        q += 1;
    }
    q
}

#[inline]
pub fn modulo(a: i128, m: i128) -> i128 {
    a.rem_euclid(m)
}

/// Inverse of `a` modulo `m` when it exists.
pub fn inverse_mod(a: i64, m: i64) -> Option<i64> {
    let (mut r0, mut r1) = (a.rem_euclid(m), m);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0 == 1 || m == 1).then(|| s0.rem_euclid(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(prime_of_power(27), Some(3));
        assert_eq!(prime_of_power(12), None);
        assert!(is_power_of(1, 5));
        assert!(!is_power_of(6, 2));
        assert_eq!(next_prime_above(5), 7);
        assert_eq!(next_prime_above(1), 2);
        assert_eq!(inverse_mod(3, 8), Some(3));
        assert_eq!(inverse_mod(2, 8), None);
    }
}
