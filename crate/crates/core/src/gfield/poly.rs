//! Dense polynomials over the prime field `GF(p)`, coefficients low-to-high.
//! Only what irreducibility testing needs.

use alloc::vec;
use alloc::vec::Vec;

use crate::intmath::pow_mod;

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// `a mod f`, with `f` non-zero.
pub fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let df = f.len() - 1;
    let lead_inv = inv_mod(f[df], p);
    while r.len() > df {
        let top = r.len() - 1;
        let c = r[top] * lead_inv % p;
        let shift = top - df;
        for (i, &fc) in f.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * fc % p) % p;
        }
        trim(&mut r);
    }
    r
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(&mut out);
    out
}

pub fn mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), f, p)
}

pub fn pow_mod_poly(base: &[u64], mut exp: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = rem(&[1], f, p);
    let mut b = rem(base, f, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(&acc, &b, f, p);
        }
        b = mul_mod(&b, &b, f, p);
        exp >>= 1;
    }
    acc
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let len = a.len().max(b.len());
    let mut out: Vec<u64> = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

/// Rabin's test: `f` (monic, degree `e`) is irreducible over `GF(p)` iff
/// `x^(p^e) = x mod f` and `gcd(x^(p^(e/r)) - x, f) = 1` for every prime
/// `r | e`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let e = f.len() - 1;
    if e == 0 {
        return false;
    }
    if e == 1 {
        return true;
    }
    let x = [0u64, 1];
    // frob[i] = x^(p^i) mod f
    let mut frob = Vec::with_capacity(e + 1);
    frob.push(rem(&x, f, p));
    for i in 1..=e {
        let next = pow_mod_poly(&frob[i - 1], p, f, p);
        frob.push(next);
    }
    if sub(&frob[e], &x, p) != Vec::<u64>::new() {
        return false;
    }
    for (r, _) in crate::intmath::factorize(e as u64) {
        let h = sub(&frob[e / r as usize], &x, p);
        let g = gcd(&h, f, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducibility() {
        // x^2 + 1 over GF(13): -1 = 5^2, reducible
        assert!(!is_irreducible(&[1, 0, 1], 13));
        assert!(is_irreducible(&[2, 0, 1], 13));
        assert!(is_irreducible(&[1, 0, 1], 3));
        // x^4 + 1 is reducible over every prime field
        assert!(!is_irreducible(&[1, 0, 0, 0, 1], 13));
        // x^3 + 2x + 1 over GF(3) is irreducible (no roots, degree 3)
        assert!(is_irreducible(&[1, 2, 0, 1], 3));
    }

    #[test]
    fn remainder() {
        assert_eq!(rem(&[0, 0, 1], &[2, 0, 1], 13), vec![11]);
    }
}
