//! Small integer number theory shared across the crate: trial-division
//! factorization, Euler's totient, prime-power recognition, and an iterator
//! over primes. Everything here operates on machine integers; the inputs are
//! graph orders and polynomial degrees, not cryptographic moduli.

/// Prime factorization by trial division, returned as (prime, exponent)
/// pairs in increasing prime order. `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    assert!(n > 0, "totient(0)");
    let mut phi = n;
    for (p, _) in factorize(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).len() == 1 && factorize(n)[0].1 == 1
}

/// Binomial coefficient by the overflow-avoiding multiplicative ladder.
/// Panics on u64 overflow, which the callers' small arguments never reach.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 1..=k {
        acc = acc.checked_mul(n - k + i).expect("binomial overflow") / i;
    }
    acc
}

/// Decompose `q` as `p^f` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let fs = factorize(q);
    if fs.len() == 1 {
        Some(fs[0])
    } else {
        None
    }
}

/// Unbounded iterator over primes, for "smallest prime such that..." searches.
pub fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start.max(2)..).filter(|&n| is_prime(n))
}

/// All divisors of `|n|`, both signs, for rational-root style searches.
/// `n` must be nonzero.
pub fn signed_divisors(n: i64) -> Vec<i64> {
    assert!(n != 0, "signed_divisors(0)");
    let n = n.unsigned_abs();
    let mut ds = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            ds.push(d as i64);
            if d * d != n {
                ds.push((n / d) as i64);
            }
        }
        d += 1;
    }
    ds.sort_unstable();
    let mut out = Vec::with_capacity(ds.len() * 2);
    for &d in &ds {
        out.push(d);
        out.push(-d);
    }
    out
}
