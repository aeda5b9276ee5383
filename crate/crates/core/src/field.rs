//! Arithmetic in the prime field `F_p`, elements stored as canonical `u32` residues.

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[inline]
pub fn add(a: u32, b: u32, p: u32) -> u32 {
    let s = a as u64 + b as u64;
    if s >= p as u64 {
        (s - p as u64) as u32
    } else {
        s as u32
    }
}

#[inline]
pub fn sub(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        (a as u64 + p as u64 - b as u64) as u32
    }
}

#[inline]
pub fn neg(a: u32, p: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

#[inline]
pub fn mul(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub fn pow(mut base: u32, mut exp: u64, p: u32) -> u32 {
    let mut acc = 1u32 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base, p);
        }
        base = mul(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue (Fermat).
pub fn inv(a: u32, p: u32) -> u32 {
    assert!(a != 0, "inverse of zero in F_{p}");
    pow(a, p as u64 - 2, p)
}

/// Reduces an arbitrary signed integer to its canonical residue.
pub fn from_i128(x: i128, p: u32) -> u32 {
    x.rem_euclid(p as i128) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(32003));
        assert!(is_prime(2147483647));
        assert!(!is_prime(1));
        assert!(!is_prime(32001));
        assert!(!is_prime(9));
    }

    #[test]
    fn inverses() {
        let p = 32003;
        for a in [1u32, 2, 3, 17, 32002] {
            assert_eq!(mul(a, inv(a, p), p), 1);
        }
        assert_eq!(from_i128(-1, p), 32002);
        assert_eq!(sub(1, 2, p), 32002);
    }
}
