//! Arithmetic on block-design parameter tuples `(b, n, r, k, λ)`.
//!
//! Everything here is pure integer arithmetic: deriving the parameter tuples of
//! triple systems and symmetric designs, and the three existence screens
//! (the counting identities, the Hanani congruences for triple systems and
//! the Bruck–Ryser–Chowla condition for symmetric designs).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The parameter tuple of a balanced incomplete block design.
///
/// `b` blocks of size `k` over `n` points, every point in `r` blocks and every
/// pair of points in `lambda` blocks. Symmetric designs store `v` in both `b`
/// and `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DesignParams {
    pub b: u64,
    pub n: u64,
    pub r: u64,
    pub k: u64,
    pub lambda: u64,
}

impl DesignParams {
    /// Builds a tuple, rejecting zero entries and block sizes outside `2..=n`.
    ///
    /// The counting identities are *not* checked here; see [`check_necessary`].
    pub fn new(b: u64, n: u64, r: u64, k: u64, lambda: u64) -> Result<Self> {
        if b == 0 || n == 0 || r == 0 || k == 0 || lambda == 0 {
            return Err(Error::InadmissibleParameters(format!(
                "({b}, {n}, {r}, {k}, {lambda}) has a zero entry"
            )));
        }
        if k < 2 || k > n {
            return Err(Error::InadmissibleParameters(format!(
                "block size {k} outside 2..={n}"
            )));
        }
        Ok(Self { b, n, r, k, lambda })
    }

    /// Symmetric tuple `(v, v, k, k, λ)`.
    pub fn symmetric(v: u64, k: u64, lambda: u64) -> Result<Self> {
        Self::new(v, v, k, k, lambda)
    }

    pub fn is_symmetric(&self) -> bool {
        self.b == self.n
    }

    /// Parameters of the complementary design, when they describe a proper design.
    pub fn complement(&self) -> Option<Self> {
        if self.k + 2 > self.n {
            return None;
        }
        let r = self.b.checked_sub(self.r)?;
        let lambda = (self.b + self.lambda).checked_sub(2 * self.r)?;
        Self::new(self.b, self.n, r, self.n - self.k, lambda).ok()
    }
}

impl fmt::Display for DesignParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {}, {})",
            self.b, self.n, self.r, self.k, self.lambda
        )
    }
}

/// `bk = nr` and `r(k-1) = λ(n-1)`, evaluated exactly.
pub fn check_necessary(params: &DesignParams) -> bool {
    let p = params;
    let (b, n, r, k, l) = (
        p.b as u128,
        p.n as u128,
        p.r as u128,
        p.k as u128,
        p.lambda as u128,
    );
    b * k == n * r && r * (k - 1) == l * (n - 1)
}

/// Hanani's condition for a triple system with pair multiplicity `lambda`:
/// `λn(n-1) ≡ 0 (mod 6)` and `λ(n-1) ≡ 0 (mod 2)`.
pub fn hanani_admissible(n: u64, lambda: u64) -> bool {
    if n < 3 || lambda == 0 {
        return false;
    }
    let (n, l) = (n as u128, lambda as u128);
    (l * n * (n - 1)) % 6 == 0 && (l * (n - 1)) % 2 == 0
}

/// The same condition restated as a case table on `λ mod 6`.
pub fn hanani_case_table(n: u64, lambda: u64) -> bool {
    if n < 3 || lambda == 0 {
        return false;
    }
    match lambda % 6 {
        1 | 5 => matches!(n % 6, 1 | 3),
        2 | 4 => matches!(n % 3, 0 | 1),
        3 => n % 2 == 1,
        _ => true,
    }
}

fn check_small_lambda(lambda: u64) -> Result<()> {
    if (1..=3).contains(&lambda) {
        Ok(())
    } else {
        Err(Error::InadmissibleParameters(format!(
            "λ = {lambda} outside {{1, 2, 3}}"
        )))
    }
}

/// `(λn(n-1)/6, n, λ(n-1)/2, 3, λ)` for `λ ∈ {1, 2, 3}`.
pub fn triple_system_params(n: u64, lambda: u64) -> Result<DesignParams> {
    check_small_lambda(lambda)?;
    if n < 3 {
        return Err(Error::InadmissibleParameters(format!(
            "triple system needs n >= 3, got {n}"
        )));
    }
    let num_b = lambda
        .checked_mul(n)
        .and_then(|x| x.checked_mul(n - 1))
        .ok_or(Error::Overflow("λn(n-1)"))?;
    let num_r = lambda * (n - 1);
    if num_b % 6 != 0 || !num_r.is_multiple_of(2) {
        return Err(Error::InadmissibleParameters(format!(
            "no triple system with n = {n}, λ = {lambda}: parameters are not integral"
        )));
    }
    DesignParams::new(num_b / 6, n, num_r / 2, 3, lambda)
}

/// Symmetric tuple `((n²+n+λ)/λ, n+1, λ)` for `λ ∈ {1, 2, 3}`.
pub fn symmetric_params(n: u64, lambda: u64) -> Result<DesignParams> {
    check_small_lambda(lambda)?;
    if n < 2 {
        return Err(Error::InadmissibleParameters(format!(
            "symmetric design needs n >= 2, got {n}"
        )));
    }
    let num = n
        .checked_mul(n)
        .and_then(|x| x.checked_add(n + lambda))
        .ok_or(Error::Overflow("n² + n + λ"))?;
    if num % lambda != 0 {
        return Err(Error::InadmissibleParameters(format!(
            "n² + n + λ = {num} is not divisible by λ = {lambda}"
        )));
    }
    DesignParams::symmetric(num / lambda, n + 1, lambda)
}

/// Outcome of the Bruck–Ryser–Chowla screen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BrcOutcome {
    Pass,
    /// `v` even and `k - λ` is not a perfect square.
    FailEvenSquare,
    /// `v` odd and the ternary form has no nontrivial integer zero.
    FailOddForm,
}

/// The reduced ternary form `a x² + b y² + c z² = 0` the odd-order search ran
/// on, with the box `|x| <= x_max, |y| <= y_max, |z| <= z_max` it exhausted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBound {
    pub reduced: [i64; 3],
    pub x_max: i64,
    pub y_max: i64,
    pub z_max: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityVerdict {
    pub params: DesignParams,
    pub necessary_ok: bool,
    /// Triple systems only.
    pub hanani_ok: Option<bool>,
    /// Symmetric designs only.
    pub brc: Option<BrcOutcome>,
    /// A nontrivial zero of `x² = (k-λ)y² + (-1)^((v-1)/2) λz²` (odd `v`).
    pub witness: Option<(i64, i64, i64)>,
    pub search_bound: Option<SearchBound>,
}

impl AdmissibilityVerdict {
    pub fn admissible(&self) -> bool {
        self.necessary_ok
            && self.hanani_ok.unwrap_or(true)
            && self.brc.is_none_or(|b| b == BrcOutcome::Pass)
    }
}

/// Verdict for the triple system `(n, λ)`.
pub fn triple_system_verdict(n: u64, lambda: u64) -> Result<AdmissibilityVerdict> {
    let params = triple_system_params(n, lambda)?;
    Ok(AdmissibilityVerdict {
        params,
        necessary_ok: check_necessary(&params),
        hanani_ok: Some(hanani_admissible(n, lambda)),
        brc: None,
        witness: None,
        search_bound: None,
    })
}

/// Bruck–Ryser–Chowla screen for a symmetric `(v, k, λ)` design.
///
/// Even `v`: `k - λ` must be a perfect square. Odd `v`: the ternary form
/// `x² - (k-λ)y² - (-1)^((v-1)/2) λz² = 0` is reduced to square-free, pairwise
/// coprime coefficients and searched exhaustively inside Holzer's bound, which
/// contains a nontrivial zero whenever one exists. A found zero is mapped back
/// to the original form.
pub fn brc_admissible(v: u64, k: u64, lambda: u64) -> Result<AdmissibilityVerdict> {
    let params = DesignParams::symmetric(v, k, lambda)
        .map_err(|e| Error::Precondition(format!("not a symmetric tuple: {e}")))?;
    if (lambda as u128) * (v as u128 - 1) != (k as u128) * (k as u128 - 1) {
        return Err(Error::Precondition(format!(
            "({v}, {k}, {lambda}) violates λ(v-1) = k(k-1)"
        )));
    }
    let mut verdict = AdmissibilityVerdict {
        params,
        necessary_ok: check_necessary(&params),
        hanani_ok: None,
        brc: None,
        witness: None,
        search_bound: None,
    };
    let order = k - lambda;
    if v.is_multiple_of(2) {
        let root = order.isqrt();
        verdict.brc = Some(if root * root == order {
            BrcOutcome::Pass
        } else {
            BrcOutcome::FailEvenSquare
        });
        return Ok(verdict);
    }
    let sign: i64 = if ((v - 1) / 2).is_multiple_of(2) { 1 } else { -1 };
    let order = i64::try_from(order).map_err(|_| Error::Overflow("k - λ"))?;
    let lambda = i64::try_from(lambda).map_err(|_| Error::Overflow("λ"))?;
    let form = [1, -order, -sign * lambda];
    let (witness, bound) = ternary_zero(form)?;
    verdict.brc = Some(if witness.is_some() {
        BrcOutcome::Pass
    } else {
        BrcOutcome::FailOddForm
    });
    verdict.witness = witness;
    verdict.search_bound = bound;
    Ok(verdict)
}

/// Finds a nontrivial zero of `c0 x² + c1 y² + c2 z²`, or proves there is none.
///
/// Returns the zero (in the caller's coordinates) and the search box used on the
/// reduced form. A zero coefficient yields a unit-vector witness with no search.
pub fn ternary_zero(form: [i64; 3]) -> Result<(Option<(i64, i64, i64)>, Option<SearchBound>)> {
    if let Some(i) = form.iter().position(|&c| c == 0) {
        let mut w = [0; 3];
        w[i] = 1;
        return Ok((Some((w[0], w[1], w[2])), None));
    }
    let (reduced, scale) = reduce_form(form)?;
    let [a, b, c] = reduced;
    let root = |p: i64| -> Result<i64> {
        let p = p.checked_abs().ok_or(Error::Overflow("Holzer bound"))?;
        Ok(p.isqrt())
    };
    let bound = SearchBound {
        reduced,
        x_max: root(b.checked_mul(c).ok_or(Error::Overflow("Holzer bound"))?)?,
        y_max: root(a.checked_mul(c).ok_or(Error::Overflow("Holzer bound"))?)?,
        z_max: root(a.checked_mul(b).ok_or(Error::Overflow("Holzer bound"))?)?,
    };
    // A definite form has only the trivial zero.
    if (a > 0) == (b > 0) && (b > 0) == (c > 0) {
        return Ok((None, Some(bound)));
    }
    let (a, b, c) = (a as i128, b as i128, c as i128);
    for y in 0..=bound.y_max {
        for z in 0..=bound.z_max {
            if y == 0 && z == 0 {
                continue;
            }
            let rest = -(b * (y as i128) * (y as i128) + c * (z as i128) * (z as i128));
            if rest % a != 0 {
                continue;
            }
            let sq = rest / a;
            if sq < 0 {
                continue;
            }
            let x = sq.isqrt();
            if x * x != sq || x > bound.x_max as i128 {
                continue;
            }
            let lift = |v: i128, m: i64| -> Result<i64> {
                i64::try_from(v * m as i128).map_err(|_| Error::Overflow("BRC witness"))
            };
            let w = (lift(x, scale[0])?, lift(y as i128, scale[1])?, lift(z as i128, scale[2])?);
            return Ok((Some(w), Some(bound)));
        }
    }
    Ok((None, Some(bound)))
}

/// Legendre reduction: returns square-free, pairwise coprime coefficients plus
/// per-variable multipliers such that a zero `(X, Y, Z)` of the reduced form
/// gives the zero `(m0 X, m1 Y, m2 Z)` of the input form.
pub(crate) fn reduce_form(form: [i64; 3]) -> Result<([i64; 3], [i64; 3])> {
    let mut coeffs = form;
    let mut scale = [1i64; 3];
    let mul = |a: i64, b: i64| a.checked_mul(b).ok_or(Error::Overflow("form reduction"));
    loop {
        let g = gcd(gcd(coeffs[0], coeffs[1]), coeffs[2]);
        if g > 1 {
            for c in &mut coeffs {
                *c /= g;
            }
        }
        let mut changed = false;
        for i in 0..3 {
            let s = square_part(coeffs[i]);
            if s > 1 {
                // c s² x² + rest = 0 becomes c X² + rest = 0 with X = s x;
                // lift by scaling the other two variables by s.
                coeffs[i] /= s * s;
                for j in 0..3 {
                    if j != i {
                        scale[j] = mul(scale[j], s)?;
                    }
                }
                changed = true;
            }
        }
        if changed {
            continue;
        }
        let mut split = None;
        'pairs: for i in 0..3 {
            for j in (i + 1)..3 {
                let g = gcd(coeffs[i], coeffs[j]);
                if g > 1 {
                    split = Some((i, j, smallest_prime_factor(g)));
                    break 'pairs;
                }
            }
        }
        let Some((i, j, p)) = split else {
            return Ok((coeffs, scale));
        };
        // p(a'x² + b'y²) + c z² = 0 forces p | z; substitute z = p Z.
        let l = 3 - i - j;
        coeffs[i] /= p;
        coeffs[j] /= p;
        coeffs[l] = mul(coeffs[l], p)?;
        scale[l] = mul(scale[l], p)?;
    }
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

/// Largest `s` with `s² | c`.
fn square_part(c: i64) -> i64 {
    let mut rest = c.unsigned_abs();
    let mut s = 1u64;
    let mut p = 2u64;
    while p * p <= rest {
        while rest.is_multiple_of(p * p) {
            rest /= p * p;
            s *= p;
        }
        while rest.is_multiple_of(p) {
            rest /= p;
        }
        p += 1;
    }
    s as i64
}

fn smallest_prime_factor(n: i64) -> i64 {
    let n = n.abs();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return p;
        }
        p += 1;
    }
    n
}
