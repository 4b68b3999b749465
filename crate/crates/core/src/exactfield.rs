//! Exact arithmetic in cyclotomic fields ℚ(ζ_n).
//!
//! An element is stored in the power basis `1, ζ, …, ζ^{φ(n)-1}` modulo the
//! n-th cyclotomic polynomial, with arbitrary-precision rational coefficients.
//! Arithmetic between elements of different conductors embeds both into the
//! lcm conductor.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::rc::Rc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{HopfError, Result};

/// Largest conductor any operation will create.
pub const CONDUCTOR_BOUND: u64 = 10_000;

/// Per-conductor reduction data, cached per thread.
struct FieldCtx {
    phi: usize,
    /// `reduce[e]` = ζ^e in the power basis, as sparse integer coefficients.
    reduce: Vec<Vec<(u32, i64)>>,
}

thread_local! {
    static CTX: RefCell<HashMap<u32, Rc<FieldCtx>>> = RefCell::new(HashMap::new());
}

fn ctx(n: u32) -> Rc<FieldCtx> {
    CTX.with(|c| {
        c.borrow_mut()
            .entry(n)
            .or_insert_with(|| Rc::new(build_ctx(n)))
            .clone()
    })
}

/// Integer coefficients (low degree first) of the n-th cyclotomic polynomial.
pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = exact_div_monic(&num, &cyclotomic_poly(d));
        }
    }
    num
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        q[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

fn build_ctx(n: u32) -> FieldCtx {
    let poly = cyclotomic_poly(n);
    let phi = poly.len() - 1;
    let mut dense: Vec<Vec<i64>> = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..n {
        dense.push(cur.clone());
        // multiply by ζ and reduce ζ^φ = -Σ_{k<φ} Φ_k ζ^k
        let top = cur[phi - 1];
        for k in (1..phi).rev() {
            cur[k] = cur[k - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for k in 0..phi {
                cur[k] -= top * poly[k];
            }
        }
    }
    let reduce = dense
        .into_iter()
        .map(|v| {
            v.into_iter()
                .enumerate()
                .filter(|(_, c)| *c != 0)
                .map(|(k, c)| (k as u32, c))
                .collect()
        })
        .collect();
    FieldCtx { phi, reduce }
}

/// Euler's totient, i.e. the degree of ℚ(ζ_n).
pub fn euler_phi(n: u32) -> usize {
    ctx(n).phi
}

/// An exact element of ℚ(ζ_n) in canonical power-basis form.
#[derive(Clone, Debug)]
pub struct CycloNumber {
    order: u32,
    coeffs: Vec<(u32, BigRational)>,
}

/// The scalar type used everywhere in the crate.
pub type Scalar = CycloNumber;

/// Binary operations accepted by [`cyclo_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

fn lcm_checked(a: u32, b: u32) -> Result<u32> {
    let l = (a as u64).lcm(&(b as u64));
    if l > CONDUCTOR_BOUND {
        return Err(HopfError::ConductorOverflow(l, CONDUCTOR_BOUND));
    }
    Ok(l as u32)
}

/// Fallible arithmetic: embeds into the lcm conductor and reports overflow or
/// division by zero instead of panicking.
pub fn cyclo_arith(a: &CycloNumber, b: &CycloNumber, op: ArithOp) -> Result<CycloNumber> {
    let l = lcm_checked(a.order, b.order)?;
    let (a, b) = (a.embed(l), b.embed(l));
    Ok(match op {
        ArithOp::Add => &a + &b,
        ArithOp::Sub => &a - &b,
        ArithOp::Mul => &a * &b,
        ArithOp::Div => a.checked_div(&b)?,
    })
}

/// Reduce raw `(exponent, coefficient)` terms to canonical form in ℚ(ζ_n).
pub fn canonicalize(n: u32, raw: &[(i64, BigRational)]) -> CycloNumber {
    assert!(n >= 1, "conductor must be positive");
    let c = ctx(n);
    let mut acc: Vec<BigRational> = vec![BigRational::zero(); c.phi];
    for (e, q) in raw {
        if q.is_zero() {
            continue;
        }
        let e = e.rem_euclid(n as i64) as usize;
        for &(k, t) in &c.reduce[e] {
            acc[k as usize] += q * BigRational::from_integer(BigInt::from(t));
        }
    }
    CycloNumber::from_dense(n, acc)
}

impl CycloNumber {
    fn from_dense(order: u32, acc: Vec<BigRational>) -> Self {
        let coeffs = acc
            .into_iter()
            .enumerate()
            .filter(|(_, q)| !q.is_zero())
            .map(|(k, q)| (k as u32, q))
            .collect();
        CycloNumber { order, coeffs }
    }

    pub fn zero(n: u32) -> Self {
        CycloNumber { order: n, coeffs: Vec::new() }
    }

    pub fn one(n: u32) -> Self {
        Self::from_rational(n, BigRational::one())
    }

    pub fn from_int(n: u32, v: i64) -> Self {
        Self::from_rational(n, BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_frac(n: u32, p: i64, q: i64) -> Self {
        Self::from_rational(n, BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_rational(n: u32, q: BigRational) -> Self {
        if q.is_zero() {
            return Self::zero(n);
        }
        CycloNumber { order: n, coeffs: vec![(0, q)] }
    }

    /// ζ_n^k.
    pub fn zeta(n: u32, k: i64) -> Self {
        canonicalize(n, &[(k, BigRational::one())])
    }

    /// `sqrt(-1)` as ζ₄ inside ℚ(ζ_n); `n` must be divisible by 4.
    pub fn imag_unit(n: u32) -> Self {
        assert!(n % 4 == 0, "ℚ(ζ_{n}) does not contain sqrt(-1)");
        Self::zeta(n, (n / 4) as i64)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> &[(u32, BigRational)] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].0 == 0 && self.coeffs[0].1.is_one()
    }

    /// The element as a rational number, if it lies in ℚ.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.as_slice() {
            [] => Some(BigRational::zero()),
            [(0, q)] => Some(q.clone()),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// Re-express inside ℚ(ζ_m); `m` must be a multiple of the current order.
    pub fn embed(&self, m: u32) -> Self {
        if m == self.order {
            return self.clone();
        }
        assert!(m % self.order == 0, "cannot embed Q(zeta_{}) into Q(zeta_{m})", self.order);
        let s = (m / self.order) as i64;
        let raw: Vec<(i64, BigRational)> =
            self.coeffs.iter().map(|(e, q)| (*e as i64 * s, q.clone())).collect();
        canonicalize(m, &raw)
    }

    fn aligned<'a>(&'a self, other: &'a Self) -> (std::borrow::Cow<'a, Self>, std::borrow::Cow<'a, Self>) {
        use std::borrow::Cow;
        if self.order == other.order {
            (Cow::Borrowed(self), Cow::Borrowed(other))
        } else {
            let l = lcm_checked(self.order, other.order).expect("conductor overflow");
            (Cow::Owned(self.embed(l)), Cow::Owned(other.embed(l)))
        }
    }

    fn add_scaled(&self, other: &Self, sign: bool) -> Self {
        let (a, b) = self.aligned(other);
        let mut out = Vec::with_capacity(a.coeffs.len() + b.coeffs.len());
        let (mut i, mut j) = (0, 0);
        while i < a.coeffs.len() || j < b.coeffs.len() {
            let ea = a.coeffs.get(i).map(|t| t.0).unwrap_or(u32::MAX);
            let eb = b.coeffs.get(j).map(|t| t.0).unwrap_or(u32::MAX);
            if ea < eb {
                out.push(a.coeffs[i].clone());
                i += 1;
            } else if eb < ea {
                let q = &b.coeffs[j].1;
                out.push((eb, if sign { q.clone() } else { -q }));
                j += 1;
            } else {
                let q = if sign {
                    &a.coeffs[i].1 + &b.coeffs[j].1
                } else {
                    &a.coeffs[i].1 - &b.coeffs[j].1
                };
                if !q.is_zero() {
                    out.push((ea, q));
                }
                i += 1;
                j += 1;
            }
        }
        CycloNumber { order: a.order, coeffs: out }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let n = a.order;
        if a.is_zero() || b.is_zero() {
            return Self::zero(n);
        }
        if let Some(q) = a.as_rational() {
            return b.scale(&q);
        }
        if let Some(q) = b.as_rational() {
            return a.scale(&q);
        }
        let c = ctx(n);
        let mut acc: Vec<BigRational> = vec![BigRational::zero(); c.phi];
        for (e1, q1) in &a.coeffs {
            for (e2, q2) in &b.coeffs {
                let p = q1 * q2;
                let e = ((e1 + e2) % n) as usize;
                for &(k, t) in &c.reduce[e] {
                    if t == 1 {
                        acc[k as usize] += &p;
                    } else if t == -1 {
                        acc[k as usize] -= &p;
                    } else {
                        acc[k as usize] += &p * BigRational::from_integer(BigInt::from(t));
                    }
                }
            }
        }
        Self::from_dense(n, acc)
    }

    /// Multiply by a rational.
    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero(self.order);
        }
        CycloNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * q)).collect(),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(Self::from_rational(self.order, q.recip()));
        }
        // Solve (multiplication by self) · x = 1 over ℚ in the power basis.
        let n = self.order;
        let phi = euler_phi(n);
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(phi);
        for k in 0..phi {
            let img = self * &Self::zeta(n, k as i64);
            let mut v = vec![BigRational::zero(); phi];
            for (e, q) in img.coeffs {
                v[e as usize] = q;
            }
            cols.push(v);
        }
        // augmented rows: row r = [M[r][0..phi] | rhs]
        let mut m: Vec<Vec<BigRational>> = (0..phi)
            .map(|r| {
                let mut row: Vec<BigRational> = (0..phi).map(|c| cols[c][r].clone()).collect();
                row.push(if r == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        for col in 0..phi {
            let piv = (col..phi).find(|&r| !m[r][col].is_zero())?;
            m.swap(col, piv);
            let inv = m[col][col].recip();
            for v in m[col].iter_mut() {
                *v *= &inv;
            }
            for r in 0..phi {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    let pivot_row = m[col].clone();
                    for (x, p) in m[r].iter_mut().zip(pivot_row.iter()) {
                        *x -= &f * p;
                    }
                }
            }
        }
        let x: Vec<BigRational> = m.into_iter().map(|row| row[phi].clone()).collect();
        Some(Self::from_dense(n, x))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        let inv = other.inverse().ok_or(HopfError::DivisionByZero)?;
        Ok(self * &inv)
    }

    /// Integer power; negative exponents invert (panics on zero base).
    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse().expect("zero to a negative power") } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one(self.order);
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        acc
    }

    /// Apply the Galois automorphism ζ ↦ ζ^k (k coprime to the order).
    pub fn galois(&self, k: i64) -> Self {
        let raw: Vec<(i64, BigRational)> =
            self.coeffs.iter().map(|(e, q)| (*e as i64 * k, q.clone())).collect();
        canonicalize(self.order, &raw)
    }

    /// Least m ≥ 1 with z^m = 1, searched up to the bound 2n²; `None` if
    /// the element is not a root of unity.
    pub fn primitive_root_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let n = self.order as u64;
        let bound = 2 * n * n;
        // Roots of unity in ℚ(ζ_n) have order dividing lcm(2, n); checking
        // only those candidates is equivalent to the full bounded search.
        let l = n.lcm(&2);
        let mut divisors: Vec<u64> = (1..=l).filter(|d| l % d == 0 && *d <= bound).collect();
        divisors.sort_unstable();
        divisors.into_iter().find(|&d| self.pow(d as i64).is_one())
    }
}

/// See [`CycloNumber::primitive_root_order`].
pub fn primitive_root_order(z: &CycloNumber) -> Option<u64> {
    z.primitive_root_order()
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.aligned(other);
        a.coeffs == b.coeffs
    }
}
impl Eq for CycloNumber {}

impl Add for &CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: &CycloNumber) -> CycloNumber {
        self.add_scaled(rhs, true)
    }
}
impl Sub for &CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: &CycloNumber) -> CycloNumber {
        self.add_scaled(rhs, false)
    }
}
impl Mul for &CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &CycloNumber) -> CycloNumber {
        self.mul_impl(rhs)
    }
}
impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(e, q)| (*e, -q)).collect(),
        }
    }
}
impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(mut self) -> CycloNumber {
        for (_, q) in self.coeffs.iter_mut() {
            *q = -std::mem::take(q);
        }
        self
    }
}
impl Add for CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: CycloNumber) -> CycloNumber {
        &self + &rhs
    }
}
impl Sub for CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: CycloNumber) -> CycloNumber {
        &self - &rhs
    }
}
impl Mul for CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: CycloNumber) -> CycloNumber {
        &self * &rhs
    }
}
impl AddAssign<&CycloNumber> for CycloNumber {
    fn add_assign(&mut self, rhs: &CycloNumber) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() && self.order == rhs.order {
            *self = rhs.clone();
            return;
        }
        *self = self.add_scaled(rhs, true);
    }
}
impl SubAssign<&CycloNumber> for CycloNumber {
    fn sub_assign(&mut self, rhs: &CycloNumber) {
        if rhs.is_zero() {
            return;
        }
        *self = self.add_scaled(rhs, false);
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || HopfError::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, q)) in self.coeffs.iter().enumerate() {
            let neg = q.is_negative();
            let a = q.abs();
            if idx > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            match (*e, a.is_one()) {
                (0, _) => write!(f, "{}", fmt_rational(&a))?,
                (e, true) => write!(f, "z{}^{}", self.order, e)?,
                (e, false) => write!(f, "{}*z{}^{}", fmt_rational(&a), self.order, e)?,
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for CycloNumber {
    type Err = HopfError;

    /// Accepts a rational (`-3/4`), a root of unity `z<n>^<k>` with optional
    /// leading `-` (e.g. `-z8^3`), or the JSON scalar encoding.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('{') {
            return serde_json::from_str(t).map_err(|e| HopfError::Parse(e.to_string()));
        }
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) if rest.trim_start().starts_with('z') => (true, rest.trim_start()),
            _ => (false, t),
        };
        if let Some(rest) = body.strip_prefix('z') {
            let (n, k) = rest.split_once('^').unwrap_or((rest, "1"));
            let n: u32 = n.parse().map_err(|_| HopfError::Parse(format!("invalid root `{s}`")))?;
            let k: i64 = k.parse().map_err(|_| HopfError::Parse(format!("invalid root `{s}`")))?;
            if n == 0 || n as u64 > CONDUCTOR_BOUND {
                return Err(HopfError::Parse(format!("invalid conductor in `{s}`")));
            }
            let z = CycloNumber::zeta(n, k);
            return Ok(if neg { -z } else { z });
        }
        Ok(CycloNumber::from_rational(1, parse_rational(t)?))
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    n: u32,
    terms: Vec<(u32, String)>,
}

impl Serialize for CycloNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ScalarRepr {
            n: self.order,
            terms: self.coeffs.iter().map(|(e, q)| (*e, fmt_rational(q))).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycloNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = ScalarRepr::deserialize(d)?;
        if r.n == 0 || r.n as u64 > CONDUCTOR_BOUND {
            return Err(D::Error::custom(format!("invalid conductor {}", r.n)));
        }
        let mut raw = Vec::with_capacity(r.terms.len());
        for (e, q) in r.terms {
            if e >= r.n {
                return Err(D::Error::custom(format!("exponent {e} not below conductor {}", r.n)));
            }
            raw.push((e as i64, parse_rational(&q).map_err(D::Error::custom)?));
        }
        Ok(canonicalize(r.n, &raw))
    }
}
