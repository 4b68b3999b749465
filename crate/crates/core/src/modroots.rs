//! Roots in ℚ(ζ_n) of polynomials with coefficients in ℚ(ζ_n).
//!
//! Roots are found modulo a prime `p ≡ 1 (mod n)` under every embedding
//! `ζ ↦ w^j`, matched across embeddings, lifted by solving the Vandermonde
//! system and rational reconstruction, and finally verified exactly. Only
//! verified roots are returned, so the modular step can never produce a wrong
//! answer — at worst it misses a root, which callers report as
//! `FieldTooSmall`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::exactfield::{canonicalize, euler_phi, Scalar};

/// Give up on tuple matching beyond this many candidate combinations.
const MAX_TUPLES: usize = 200_000;

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            out.push(q);
            while n % q == 0 {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The `skip`-th prime below 2^61 congruent to 1 mod `n`, with an element of
/// multiplicative order exactly `n`.
fn field_prime(n: u64, skip: usize) -> (u64, u64) {
    let mut k = (1u64 << 61) / n;
    let mut seen = 0;
    loop {
        let p = k * n + 1;
        k -= 1;
        if !is_prime(p) {
            continue;
        }
        if seen < skip {
            seen += 1;
            continue;
        }
        let qs = prime_factors(n);
        for g in 2u64.. {
            let w = powmod(g, (p - 1) / n, p);
            if qs.iter().all(|&q| powmod(w, n / q, p) != 1) {
                return (p, w);
            }
        }
    }
}

fn rat_mod(q: &BigRational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let num = q.numer().mod_floor(&pb).to_u64()?;
    let den = q.denom().mod_floor(&pb).to_u64()?;
    if den == 0 {
        return None;
    }
    Some(mulmod(num, invmod(den, p), p))
}

/// Image of `s` (already at conductor `n`) under `ζ_n ↦ z`.
fn scalar_mod(s: &Scalar, z: u64, p: u64) -> Option<u64> {
    let mut acc = 0u64;
    for (e, q) in s.terms() {
        let c = rat_mod(q, p)?;
        acc = (acc + mulmod(c, powmod(z, *e as u64, p), p)) % p;
    }
    Some(acc)
}

// ---- polynomials over F_p, low degree first, no trailing zeros

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let inv = invmod(b[db], p);
    while r.len() > db {
        let c = mulmod(*r.last().unwrap(), inv, p);
        let shift = r.len() - 1 - db;
        for (k, &bk) in b.iter().enumerate() {
            r[shift + k] = (r[shift + k] + p - mulmod(c, bk, p)) % p;
        }
        trim(&mut r);
    }
    r
}

fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    poly_rem(&out, m, p)
}

fn poly_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut r = vec![1u64];
    let mut b = poly_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            r = poly_mulmod(&r, &b, m, p);
        }
        b = poly_mulmod(&b, &b, m, p);
        e >>= 1;
    }
    r
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let inv = invmod(lead, p);
        for c in a.iter_mut() {
            *c = mulmod(*c, inv, p);
        }
    }
    a
}

fn poly_div_exact(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = invmod(b[db], p);
    let mut q = vec![0u64; r.len() - db];
    for k in (0..q.len()).rev() {
        let c = mulmod(r[k + db], inv, p);
        q[k] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[k + j] = (r[k + j] + p - mulmod(c, bj, p)) % p;
        }
    }
    q
}

/// Split a monic squarefree product of distinct linear factors.
fn split_linear(f: &[u64], p: u64, seed: &mut u64, out: &mut Vec<u64>) {
    match f.len() {
        0 | 1 => {}
        2 => out.push((p - f[0]) % p),
        _ => loop {
            *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let a = (*seed >> 3) % p;
            let mut h = poly_powmod(&[a, 1], (p - 1) / 2, f, p);
            if h.is_empty() {
                continue;
            }
            h[0] = (h[0] + p - 1) % p;
            trim(&mut h);
            let g = poly_gcd(f, &h, p);
            if g.len() > 1 && g.len() < f.len() {
                let q = poly_div_exact(f, &g, p);
                split_linear(&g, p, seed, out);
                split_linear(&q, p, seed, out);
                return;
            }
        },
    }
}

/// Distinct roots in F_p of a polynomial, sorted.
fn roots_mod_p(f: &[u64], p: u64) -> Vec<u64> {
    let mut f = f.to_vec();
    trim(&mut f);
    if f.len() <= 1 {
        return Vec::new();
    }
    let xp = poly_powmod(&[0, 1], p, &f, p);
    let mut xp_minus_x = xp.clone();
    xp_minus_x.resize(xp_minus_x.len().max(2), 0);
    xp_minus_x[1] = (xp_minus_x[1] + p - 1) % p;
    trim(&mut xp_minus_x);
    let g = if xp_minus_x.is_empty() { poly_gcd(&f, &[], p) } else { poly_gcd(&f, &xp_minus_x, p) };
    let mut out = Vec::new();
    let mut seed = 0x9E37_79B9_7F4A_7C15u64;
    split_linear(&g, p, &mut seed, &mut out);
    out.sort_unstable();
    out
}

/// Solve `V c = v` over F_p (V square, invertible).
fn solve_mod(mut v: Vec<Vec<u64>>, mut rhs: Vec<u64>, p: u64) -> Option<Vec<u64>> {
    let n = rhs.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| v[r][col] != 0)?;
        v.swap(col, piv);
        rhs.swap(col, piv);
        let inv = invmod(v[col][col], p);
        for c in col..n {
            v[col][c] = mulmod(v[col][c], inv, p);
        }
        rhs[col] = mulmod(rhs[col], inv, p);
        for r in 0..n {
            if r != col && v[r][col] != 0 {
                let f = v[r][col];
                for c in col..n {
                    v[r][c] = (v[r][c] + p - mulmod(f, v[col][c], p)) % p;
                }
                rhs[r] = (rhs[r] + p - mulmod(f, rhs[col], p)) % p;
            }
        }
    }
    Some(rhs)
}

/// Rational number `a/b` with `|a|, b ≤ √(p/2)` congruent to `x` mod `p`.
fn rational_reconstruct(x: u64, p: u64) -> Option<BigRational> {
    let bound = num_integer::Roots::sqrt(&(p / 2)) as i128;
    let (mut r0, mut r1) = (p as i128, x as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 > bound {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() > bound {
        return None;
    }
    let q = BigRational::new(BigInt::from(r1), BigInt::from(t1));
    Some(q)
}

/// Evaluate a polynomial with coefficients in ℚ(ζ_n) (low degree first).
pub fn eval_poly(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = Scalar::zero(x.order());
    for c in coeffs.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// All roots in ℚ(ζ_n) of a nonzero polynomial with coefficients in ℚ(ζ_n),
/// in a deterministic order. Roots not found by the modular search are
/// absent; every returned root is exact.
pub fn roots_in_field(coeffs: &[Scalar], n: u32) -> Vec<Scalar> {
    let coeffs: Vec<Scalar> = coeffs.iter().map(|c| c.embed(num_integer::lcm(c.order(), n))).collect();
    let n = coeffs.iter().map(|c| c.order()).fold(n, num_integer::lcm);
    let coeffs: Vec<Scalar> = coeffs.iter().map(|c| c.embed(n)).collect();
    let deg = match coeffs.iter().rposition(|c| !c.is_zero()) {
        Some(d) => d,
        None => return Vec::new(),
    };
    if deg == 0 {
        return Vec::new();
    }
    let phi = euler_phi(n);
    let embeds: Vec<u64> = (1..=n as u64).filter(|j| j.gcd(&(n as u64)) == 1).collect();
    debug_assert_eq!(embeds.len(), phi);
    let mut found: Vec<Scalar> = Vec::new();
    for attempt in 0..3 {
        let (p, w) = field_prime(n as u64, attempt);
        let mut root_sets = Vec::with_capacity(phi);
        let mut ok = true;
        for &j in &embeds {
            let z = powmod(w, j, p);
            let f: Option<Vec<u64>> = coeffs[..=deg].iter().map(|c| scalar_mod(c, z, p)).collect();
            match f {
                Some(f) if f[deg] != 0 => root_sets.push(roots_mod_p(&f, p)),
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let combos: usize = root_sets.iter().skip(1).map(|s| s.len().max(1)).product();
        if root_sets.iter().any(|s| s.is_empty()) || combos > MAX_TUPLES {
            continue;
        }
        let vander: Vec<Vec<u64>> =
            embeds.iter().map(|&j| (0..phi).map(|e| powmod(w, j * e as u64, p)).collect()).collect();
        let mut idx = vec![0usize; phi];
        'tuples: loop {
            let tuple: Vec<u64> = idx.iter().enumerate().map(|(k, &i)| root_sets[k][i]).collect();
            if let Some(c) = solve_mod(vander.clone(), tuple, p) {
                let terms: Option<Vec<(i64, BigRational)>> = c
                    .iter()
                    .enumerate()
                    .map(|(e, &x)| rational_reconstruct(x, p).map(|q| (e as i64, q)))
                    .collect();
                if let Some(terms) = terms {
                    let cand = canonicalize(n, &terms);
                    if eval_poly(&coeffs[..=deg], &cand).is_zero() && !found.contains(&cand) {
                        found.push(cand);
                    }
                }
            }
            // odometer
            let mut k = 0;
            loop {
                if k == phi {
                    break 'tuples;
                }
                idx[k] += 1;
                if idx[k] < root_sets[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
        if found.len() == deg {
            break;
        }
    }
    found.sort_by_key(|s| s.to_string());
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: u32, txt: &str) -> Scalar {
        let v: Scalar = txt.parse().unwrap();
        v.embed(n)
    }

    #[test]
    fn rational_roots() {
        // (x-1)(x+2)(x-1/3) = x^3 + (2/3)x^2 - (7/3)x + 2/3
        let c = vec![s(1, "2/3"), s(1, "-7/3"), s(1, "2/3"), s(1, "1")];
        let r = roots_in_field(&c, 1);
        assert_eq!(r.len(), 3);
        for x in &r {
            assert!(eval_poly(&c, x).is_zero());
        }
    }

    #[test]
    fn gaussian_roots() {
        // x^2 + 1 over ℚ(i)
        let c = vec![s(4, "1"), s(4, "0"), s(4, "1")];
        let r = roots_in_field(&c, 4);
        assert_eq!(r.len(), 2);
        assert!(r.contains(&Scalar::zeta(4, 1)));
        assert!(r.contains(&Scalar::zeta(4, 3)));
        // no roots over ℚ
        let cq = vec![s(1, "1"), s(1, "0"), s(1, "1")];
        assert!(roots_in_field(&cq, 1).is_empty());
    }

    #[test]
    fn roots_of_unity_in_q_zeta5() {
        // x^5 - 1 over ℚ(ζ5): all five roots
        let mut c = vec![Scalar::zero(5); 6];
        c[0] = Scalar::from_int(5, -1);
        c[5] = Scalar::one(5);
        let r = roots_in_field(&c, 5);
        assert_eq!(r.len(), 5);
    }

    #[test]
    fn nontrivial_combination_root() {
        // (x - (1/2 + 3ζ8^3))(x - 2)
        let a = &Scalar::from_frac(8, 1, 2) + &(&Scalar::from_int(8, 3) * &Scalar::zeta(8, 3));
        let b = Scalar::from_int(8, 2);
        let c = vec![&a * &b, -(&a + &b), Scalar::one(8)];
        let r = roots_in_field(&c, 8);
        assert!(r.contains(&a) && r.contains(&b));
    }
}
