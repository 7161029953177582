/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Base-`k` digits of `n`, least significant first; `0` has no digits.
pub fn lsd_digits(mut n: u64, k: u32) -> Vec<u32> {
    let mut out = Vec::new();
    while n > 0 {
        out.push((n % k as u64) as u32);
        n /= k as u64;
    }
    out
}
