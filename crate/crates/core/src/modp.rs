//! Arithmetic in `Z/p` for primes below `2^63`.

/// `2^61 - 1`.
pub const DEFAULT_PRIME: u64 = (1 << 61) - 1;

pub fn add(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + p as u128 - (b % p) as u128) % p as u128) as u64
}

pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base, p);
        }
        base = mul(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero element by Fermat's little theorem.
pub fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow(a, p - 2, p)
}

/// Determinant of a dense row-major `n × n` matrix over `Z/p`.
pub fn determinant(mut m: Vec<u64>, n: usize, p: u64) -> u64 {
    debug_assert_eq!(m.len(), n * n);
    let mut det = 1 % p;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| m[i * n + k] != 0) else {
            return 0;
        };
        if piv != k {
            for j in 0..n {
                m.swap(k * n + j, piv * n + j);
            }
            det = sub(0, det, p);
        }
        let pivot = m[k * n + k];
        det = mul(det, pivot, p);
        let pinv = inv(pivot, p);
        for i in k + 1..n {
            let f = mul(m[i * n + k], pinv, p);
            if f == 0 {
                continue;
            }
            for j in k..n {
                let v = mul(f, m[k * n + j], p);
                m[i * n + j] = sub(m[i * n + j], v, p);
            }
        }
    }
    det
}
