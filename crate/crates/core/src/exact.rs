//! Exact integer linear algebra: characteristic polynomials via the
//! Faddeev-LeVerrier recurrence, determinants via fraction-free Bareiss
//! elimination, and integer root extraction by bounded divisor search.
//!
//! Every division performed here is exact; a non-zero remainder would
//! indicate a bug and is checked in debug builds.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::Result;

/// Monic integer polynomial, `coeffs[i]` multiplying the i-th power.
///
/// `root_bound` is an inclusive bound on the absolute value of every real
/// root; matrix-derived polynomials use the largest adjacency row sum
/// (Gershgorin), hand-built ones fall back to the Cauchy bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
    root_bound: u64,
}

impl CharPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() || !coeffs.last().unwrap().is_one() {
            return Err(Error::BadParams("polynomial must be monic".to_string()));
        }
        let cauchy = coeffs
            .iter()
            .take(coeffs.len() - 1)
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
            + 1u32;
        let root_bound = cauchy.to_u64().unwrap_or(u64::MAX);
        Ok(CharPoly { coeffs, root_bound })
    }

    pub(crate) fn with_root_bound(coeffs: Vec<BigInt>, root_bound: u64) -> Self {
        debug_assert!(coeffs.last().map(BigInt::is_one).unwrap_or(false));
        CharPoly { coeffs, root_bound }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of the i-th power.
    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    /// Exact evaluation by Horner's rule.
    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Constant term up to sign: `(-1)^n det(A)` for a matrix polynomial.
    pub fn constant(&self) -> &BigInt {
        &self.coeffs[0]
    }
}

/// Characteristic polynomial `det(lambda I - A)` of a symmetric non-negative
/// integer matrix, by Faddeev-LeVerrier. All intermediate matrices are
/// integral; the trace division by the step index is exact.
pub fn char_poly(entries: &[u64], n: usize) -> CharPoly {
    assert_eq!(entries.len(), n * n);
    let row_bound = (0..n)
        .map(|i| entries[i * n..(i + 1) * n].iter().sum::<u64>())
        .max()
        .unwrap_or(0);

    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    if n == 0 {
        return CharPoly::with_root_bound(coeffs, 0);
    }

    // m holds M_k = A * (M_{k-1} + c_{n-k+1} I), starting from M_1 = A
    let mut m: Vec<BigInt> = entries.iter().map(|&x| BigInt::from(x)).collect();
    let mut c = -trace(&m, n);
    coeffs[n - 1] = c.clone();
    for k in 2..=n {
        let mut b = m;
        for i in 0..n {
            b[i * n + i] += &c;
        }
        // A and M_{k-1} are polynomials in A, so the product is symmetric;
        // compute the lower triangle and mirror.
        let mut next = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for j in 0..=i {
                let mut acc = BigInt::zero();
                for l in 0..n {
                    let a = entries[i * n + l];
                    if a != 0 {
                        acc += &b[l * n + j] * a;
                    }
                }
                next[j * n + i] = acc.clone();
                next[i * n + j] = acc;
            }
        }
        m = next;
        let t = trace(&m, n);
        let (q, r) = t.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev-LeVerrier trace not divisible");
        c = -q;
        coeffs[n - k] = c.clone();
    }
    CharPoly::with_root_bound(coeffs, row_bound)
}

fn trace(m: &[BigInt], n: usize) -> BigInt {
    (0..n).map(|i| &m[i * n + i]).sum()
}

/// Exact determinant by fraction-free Bareiss elimination with row pivoting.
pub fn det_bareiss(entries: &[u64], n: usize) -> BigInt {
    assert_eq!(entries.len(), n * n);
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<BigInt> = entries.iter().map(|&x| BigInt::from(x)).collect();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k * n + k].is_zero() {
            match (k + 1..n).find(|&r| !m[r * n + k].is_zero()) {
                Some(r) => {
                    for j in 0..n {
                        m.swap(k * n + j, r * n + j);
                    }
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division not exact");
                m[i * n + j] = q;
            }
        }
        prev = m[k * n + k].clone();
    }
    let det = m[(n - 1) * n + (n - 1)].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// All integer roots with multiplicities, plus the residual polynomial that
/// has no integer roots. Candidates are the divisors of the constant term
/// within the root bound; each candidate is certified by exact evaluation
/// and removed by exact synthetic division.
pub fn integer_roots(p: &CharPoly) -> (Vec<(i64, usize)>, CharPoly) {
    let mut coeffs = p.coeffs.clone();
    let mut roots: Vec<(i64, usize)> = Vec::new();

    // roots at zero: trailing zero coefficients
    let zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
    let zeros = zeros.min(coeffs.len() - 1);
    if zeros > 0 {
        coeffs.drain(..zeros);
        roots.push((0, zeros));
    }

    if coeffs.len() > 1 {
        let c0 = coeffs[0].abs();
        for cand in divisor_candidates(&c0, p.root_bound) {
            for root in [cand, -cand] {
                let mut multiplicity = 0;
                loop {
                    let (quotient, remainder) = synthetic_div(&coeffs, root);
                    if !remainder.is_zero() || coeffs.len() == 1 {
                        break;
                    }
                    coeffs = quotient;
                    multiplicity += 1;
                }
                if multiplicity > 0 {
                    roots.push((root, multiplicity));
                }
            }
        }
    }

    roots.sort_by(|a, b| b.0.cmp(&a.0));
    let residual = CharPoly::with_root_bound(coeffs, p.root_bound);
    (roots, residual)
}

/// Positive divisors of `c0` that do not exceed `bound`.
fn divisor_candidates(c0: &BigInt, bound: u64) -> Vec<i64> {
    let mut out = BTreeSet::new();
    let bound = BigInt::from(bound.min(i64::MAX as u64));
    let mut d = BigInt::one();
    while &d <= &bound && &d * &d <= *c0 {
        if c0.is_multiple_of(&d) {
            out.insert(d.to_i64().unwrap());
            let q = c0 / &d;
            if q <= bound {
                out.insert(q.to_i64().unwrap());
            }
        }
        d += 1u32;
    }
    out.into_iter().collect()
}

/// Divide by `(lambda - root)`; returns quotient coefficients and remainder.
fn synthetic_div(coeffs: &[BigInt], root: i64) -> (Vec<BigInt>, BigInt) {
    let deg = coeffs.len() - 1;
    let mut quotient = vec![BigInt::zero(); deg];
    let mut carry = coeffs[deg].clone();
    for i in (0..deg).rev() {
        quotient[i] = carry.clone();
        carry = carry * root + &coeffs[i];
    }
    (quotient, carry)
}
