//! Finite fields of prime-power order, small enough to tabulate.
//!
//! Elements of GF(p^m) are encoded as integers `0..q` whose base-`p` digits are
//! the polynomial coefficients (lowest degree first). Extension fields reduce
//! modulo the first monic irreducible polynomial of degree `m` found by
//! exhaustive search.

use crate::error::{Error, Result};

/// Largest order tabulated; the full multiplication table has `q²` entries.
pub const MAX_ORDER: u64 = 1 << 12;

/// `Some((p, m))` when `q = p^m` with `p` prime and `m >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        // q itself is prime
        return Some((q, 1));
    }
    let (mut rest, mut m) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

pub fn is_prime_power(q: u64) -> bool {
    prime_power(q).is_some()
}

#[derive(Clone, Debug)]
pub struct FiniteField {
    p: usize,
    order: usize,
    /// Monic modulus, coefficients lowest degree first, length `m + 1`.
    modulus: Vec<usize>,
    add: Vec<usize>,
    mul: Vec<usize>,
}

impl FiniteField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or_else(|| {
            Error::InadmissibleParameters(format!("{q} is not a prime power"))
        })?;
        if q > MAX_ORDER {
            return Err(Error::InadmissibleParameters(format!(
                "field order {q} exceeds the tabulated limit {MAX_ORDER}"
            )));
        }
        let (p, m, q) = (p as usize, m as usize, q as usize);
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            find_irreducible(p, m)
        };
        let mut field = Self {
            p,
            order: q,
            modulus,
            add: vec![0; q * q],
            mul: vec![0; q * q],
        };
        for a in 0..q {
            for b in 0..q {
                field.add[a * q + b] = field.add_slow(a, b);
                field.mul[a * q + b] = field.mul_slow(a, b);
            }
        }
        Ok(field)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn modulus(&self) -> &[usize] {
        &self.modulus
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    fn digits(&self, mut a: usize) -> Vec<usize> {
        let m = self.modulus.len() - 1;
        let mut d = vec![0; m];
        for slot in d.iter_mut() {
            *slot = a % self.p;
            a /= self.p;
        }
        d
    }

    fn encode(&self, digits: &[usize]) -> usize {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn add_slow(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.digits(a), self.digits(b));
        let sum: Vec<usize> = x.iter().zip(&y).map(|(s, t)| (s + t) % self.p).collect();
        self.encode(&sum)
    }

    fn mul_slow(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.digits(a), self.digits(b));
        let mut prod = poly_mul(&x, &y, self.p);
        poly_rem(&mut prod, &self.modulus, self.p);
        prod.resize(self.modulus.len() - 1, 0);
        self.encode(&prod)
    }
}

fn poly_mul(x: &[usize], y: &[usize], p: usize) -> Vec<usize> {
    let mut out = vec![0; x.len() + y.len() - 1];
    for (i, &a) in x.iter().enumerate() {
        for (j, &b) in y.iter().enumerate() {
            out[i + j] = (out[i + j] + a * b) % p;
        }
    }
    out
}

/// In-place remainder modulo a monic divisor.
fn poly_rem(num: &mut Vec<usize>, monic: &[usize], p: usize) {
    let d = monic.len() - 1;
    while num.len() > d {
        let lead = num.pop().unwrap();
        if lead == 0 {
            continue;
        }
        let shift = num.len() - d;
        for (i, &c) in monic[..d].iter().enumerate() {
            num[shift + i] = (num[shift + i] + (p - c) * lead) % p;
        }
    }
}

/// Monic polynomial of degree `deg` from the base-`p` digits of `index`.
fn monic_from_index(mut index: usize, deg: usize, p: usize) -> Vec<usize> {
    let mut coeffs = Vec::with_capacity(deg + 1);
    for _ in 0..deg {
        coeffs.push(index % p);
        index /= p;
    }
    coeffs.push(1);
    coeffs
}

fn is_irreducible(f: &[usize], p: usize) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for idx in 0..p.pow(d as u32) {
            let g = monic_from_index(idx, d, p);
            let mut r = f.to_vec();
            poly_rem(&mut r, &g, p);
            if r.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// First monic irreducible polynomial of degree `deg` over GF(p), in base-`p`
/// index order of the lower coefficients.
pub fn find_irreducible(p: usize, deg: usize) -> Vec<usize> {
    (0..p.pow(deg as u32))
        .map(|idx| monic_from_index(idx, deg, p))
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}
