//! Exact arithmetic in cyclotomic fields Q(ζ_n).
//!
//! An element is a rational-coefficient residue modulo the n-th cyclotomic
//! polynomial Φ_n, stored in the power basis 1, ζ, …, ζ^{φ(n)−1}. All
//! operations are exact; there is no floating point anywhere in this crate.
//!
//! The field data (Φ_n and the reduction rows for ζ^k, k ≥ φ(n)) is computed
//! once per order and shared through a global registry, so values only carry
//! their order and coefficient vector.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::EngineError;

/// Euler's totient, by trial division.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Dense integer polynomial, little-endian coefficients.
fn poly_trim(p: &mut Vec<BigInt>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

/// Exact division of integer polynomials; panics if not divisible.
/// Used only for building Φ_n from x^n − 1, where divisibility is guaranteed.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    poly_trim(&mut rem);
    let mut den = den.to_vec();
    poly_trim(&mut den);
    assert!(!den.is_empty(), "division by zero polynomial");
    let dlead = den.last().unwrap().clone();
    let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(den.len()) + 1];
    while rem.len() >= den.len() && !rem.is_empty() {
        let shift = rem.len() - den.len();
        let c = rem.last().unwrap() / &dlead;
        assert_eq!(&c * &dlead, *rem.last().unwrap(), "non-exact division");
        for (k, d) in den.iter().enumerate() {
            let v = &rem[shift + k] - &c * d;
            rem[shift + k] = v;
        }
        quot[shift] = c;
        poly_trim(&mut rem);
    }
    assert!(rem.is_empty(), "nonzero remainder in exact division");
    quot
}

/// Φ_n computed by the recursion Φ_n = (x^n − 1) / Π_{d|n, d<n} Φ_d.
fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    let mut den = vec![BigInt::one()];
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_poly(d);
            den = poly_mul_int(&den, &phi_d);
        }
    }
    poly_div_exact(&num, &den)
}

fn poly_mul_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let v = &out[i + j] + ai * bj;
            out[i + j] = v;
        }
    }
    out
}

/// Shared per-order field data.
pub struct CycField {
    pub order: u64,
    pub phi: usize,
    /// Φ_order, monic, length phi+1.
    pub modulus: Vec<BigInt>,
    /// reduction[k][j]: coefficient of ζ^j in the canonical form of ζ^{phi+k},
    /// precomputed for k = 0 .. phi−1 (enough to reduce products of two
    /// canonical residues).
    reduction: Vec<Vec<BigInt>>,
}

impl CycField {
    fn new(order: u64) -> Self {
        assert!(order >= 1);
        let modulus = cyclotomic_poly(order);
        let phi = modulus.len() - 1;
        debug_assert_eq!(phi as u64, euler_phi(order));
        // ζ^phi = −(Φ − x^phi), then ζ^{phi+k} = ζ·ζ^{phi+k−1} reduced.
        let mut reduction: Vec<Vec<BigInt>> = Vec::with_capacity(phi);
        let mut row: Vec<BigInt> = (0..phi).map(|j| -modulus[j].clone()).collect();
        reduction.push(row.clone());
        for _ in 1..phi {
            // multiply by ζ: shift, then fold the overflowing top term.
            let top = row[phi - 1].clone();
            for j in (1..phi).rev() {
                row[j] = row[j - 1].clone();
            }
            row[0] = BigInt::zero();
            if !top.is_zero() {
                for j in 0..phi {
                    let v = &row[j] + &top * &reduction[0][j];
                    row[j] = v;
                }
            }
            reduction.push(row.clone());
        }
        CycField {
            order,
            phi,
            modulus,
            reduction,
        }
    }
}

fn field_registry() -> &'static Mutex<HashMap<u64, Arc<CycField>>> {
    static REG: OnceLock<Mutex<HashMap<u64, Arc<CycField>>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Fetch (or build) the shared field data for Q(ζ_order).
pub fn field(order: u64) -> Arc<CycField> {
    let mut reg = field_registry().lock().unwrap();
    reg.entry(order)
        .or_insert_with(|| Arc::new(CycField::new(order)))
        .clone()
}

/// An element of Q(ζ_order) in canonical form: coefficients of
/// 1, ζ, …, ζ^{φ−1} with trailing zeros trimmed (zero = empty vector).
#[derive(Clone, PartialEq, Eq)]
pub struct CycNum {
    pub order: u64,
    coeffs: Vec<BigRational>,
}

impl CycNum {
    pub fn zero(order: u64) -> Self {
        CycNum {
            order,
            coeffs: vec![],
        }
    }

    pub fn one(order: u64) -> Self {
        Self::from_rational(order, BigRational::one())
    }

    pub fn from_rational(order: u64, r: BigRational) -> Self {
        if r.is_zero() {
            return Self::zero(order);
        }
        CycNum {
            order,
            coeffs: vec![r],
        }
    }

    pub fn from_integer(order: u64, n: i64) -> Self {
        Self::from_rational(order, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn rational(order: u64, num: i64, den: i64) -> Self {
        Self::from_rational(
            order,
            BigRational::new(BigInt::from(num), BigInt::from(den)),
        )
    }

    /// ζ^k (k may be negative; reduced mod order).
    pub fn root_of_unity(order: u64, k: i64) -> Self {
        let k = k.rem_euclid(order as i64) as u64;
        let f = field(order);
        if (k as usize) < f.phi {
            let mut coeffs = vec![BigRational::zero(); k as usize + 1];
            coeffs[k as usize] = BigRational::one();
            return CycNum { order, coeffs };
        }
        // reduce ζ^k for phi ≤ k < order via the reduction rows, chaining as
        // needed (k < order ≤ 2·phi fails for non-prime orders, so iterate).
        let mut cur = CycNum {
            order,
            coeffs: {
                let mut c = vec![BigRational::zero(); f.phi];
                c[f.phi - 1] = BigRational::one();
                c
            },
        };
        for _ in 0..(k as usize - (f.phi - 1)) {
            cur = cur.mul_by_zeta();
        }
        cur.trim();
        cur
    }

    fn mul_by_zeta(&self) -> CycNum {
        let f = field(self.order);
        let mut out = vec![BigRational::zero(); f.phi];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if j + 1 < f.phi {
                out[j + 1] += c;
            } else {
                for (m, r) in f.reduction[0].iter().enumerate() {
                    if !r.is_zero() {
                        out[m] += c * BigRational::from_integer(r.clone());
                    }
                }
            }
        }
        let mut v = CycNum {
            order: self.order,
            coeffs: out,
        };
        v.trim();
        v
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Rational part if the element is rational, else None.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    fn check_order(&self, other: &CycNum) -> Result<(), EngineError> {
        if self.order != other.order {
            return Err(EngineError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &CycNum) -> Result<CycNum, EngineError> {
        self.check_order(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            let a = self.coeffs.get(j);
            let b = other.coeffs.get(j);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        let mut v = CycNum {
            order: self.order,
            coeffs: out,
        };
        v.trim();
        Ok(v)
    }

    pub fn sub(&self, other: &CycNum) -> Result<CycNum, EngineError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycNum {
        CycNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &CycNum) -> Result<CycNum, EngineError> {
        self.check_order(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(CycNum::zero(self.order));
        }
        let f = field(self.order);
        // schoolbook product, then fold degrees ≥ phi with the reduction rows
        let mut prod = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        let mut out = vec![BigRational::zero(); f.phi.min(prod.len())];
        for (d, c) in prod.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if d < f.phi {
                out[d] += c;
            } else {
                for (m, r) in f.reduction[d - f.phi].iter().enumerate() {
                    if !r.is_zero() {
                        out[m] += c * BigRational::from_integer(r.clone());
                    }
                }
            }
        }
        let mut v = CycNum {
            order: self.order,
            coeffs: out,
        };
        v.trim();
        Ok(v)
    }

    pub fn scale(&self, r: &BigRational) -> CycNum {
        if r.is_zero() {
            return CycNum::zero(self.order);
        }
        CycNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm in Q[x]
    /// against Φ_order.
    pub fn inv(&self) -> Result<CycNum, EngineError> {
        if self.is_zero() {
            return Err(EngineError::DivisionByZero);
        }
        let f = field(self.order);
        // xgcd over Q[x]: maintain r0 = Φ, r1 = self, with s-coefficients
        // tracking multiples of self.
        let modulus: Vec<BigRational> = f
            .modulus
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let mut r0 = modulus;
        let mut r1 = self.coeffs.clone();
        let mut t0: Vec<BigRational> = vec![];
        let mut t1: Vec<BigRational> = vec![BigRational::one()];
        let trim = |p: &mut Vec<BigRational>| {
            while p.last().map_or(false, |c| c.is_zero()) {
                p.pop();
            }
        };
        while !r1.is_empty() {
            // divide r0 by r1
            let mut rem = r0.clone();
            let mut q: Vec<BigRational> = vec![];
            if rem.len() >= r1.len() {
                q = vec![BigRational::zero(); rem.len() - r1.len() + 1];
                let lead = r1.last().unwrap().clone();
                while rem.len() >= r1.len() && !rem.is_empty() {
                    let shift = rem.len() - r1.len();
                    let c = rem.last().unwrap() / &lead;
                    for (k, d) in r1.iter().enumerate() {
                        let v = &rem[shift + k] - &c * d;
                        rem[shift + k] = v;
                    }
                    q[shift] = c;
                    trim(&mut rem);
                }
            }
            // t2 = t0 − q·t1
            let qt1 = {
                if q.is_empty() || t1.is_empty() {
                    vec![]
                } else {
                    let mut out = vec![BigRational::zero(); q.len() + t1.len() - 1];
                    for (i, a) in q.iter().enumerate() {
                        if a.is_zero() {
                            continue;
                        }
                        for (j, b) in t1.iter().enumerate() {
                            out[i + j] += a * b;
                        }
                    }
                    out
                }
            };
            let n = t0.len().max(qt1.len());
            let mut t2 = Vec::with_capacity(n);
            for j in 0..n {
                let a = t0.get(j).cloned().unwrap_or_else(BigRational::zero);
                let b = qt1.get(j).cloned().unwrap_or_else(BigRational::zero);
                t2.push(a - b);
            }
            trim(&mut t2);
            r0 = r1;
            r1 = rem;
            t0 = t1;
            t1 = t2;
        }
        // r0 is the gcd; must be a nonzero constant since Φ is irreducible
        if r0.len() != 1 {
            return Err(EngineError::DivisionByZero);
        }
        let scale = r0[0].recip();
        let mut coeffs: Vec<BigRational> = t0.iter().map(|c| c * &scale).collect();
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        let v = CycNum {
            order: self.order,
            coeffs,
        };
        debug_assert!(v.mul(self).unwrap().is_one());
        Ok(v)
    }

    pub fn div(&self, other: &CycNum) -> Result<CycNum, EngineError> {
        self.check_order(other)?;
        self.mul(&other.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> Result<CycNum, EngineError> {
        let mut base = self.clone();
        let mut acc = CycNum::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Galois conjugate ζ ↦ ζ^k (k coprime to the order).
    pub fn galois(&self, k: i64) -> CycNum {
        let mut out = CycNum::zero(self.order);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = CycNum::root_of_unity(self.order, k * j as i64).scale(c);
            out = out.add(&term).unwrap();
        }
        out
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if j == 0 {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "z^{}", j)?;
            } else {
                write!(f, "{}*z^{}", a, j)?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Context for q-arithmetic: q = ζ_order^{order/l}, a primitive l-th root of
/// unity inside Q(ζ_order). The default has order = l; the extended variant
/// uses order = 4l so that √l is available.
#[derive(Clone)]
pub struct QContext {
    pub l: u64,
    pub order: u64,
}

impl QContext {
    pub fn new(l: u64) -> Self {
        QContext { l, order: l }
    }

    /// Q(ζ_{4l}) context; q is still a primitive l-th root of unity.
    pub fn extended(l: u64) -> Self {
        QContext { l, order: 4 * l }
    }

    /// q^k, exponent taken mod l.
    pub fn q_pow(&self, k: i64) -> CycNum {
        let step = (self.order / self.l) as i64;
        CycNum::root_of_unity(self.order, step * k.rem_euclid(self.l as i64))
    }

    pub fn zero(&self) -> CycNum {
        CycNum::zero(self.order)
    }

    pub fn one(&self) -> CycNum {
        CycNum::one(self.order)
    }

    pub fn int(&self, n: i64) -> CycNum {
        CycNum::from_integer(self.order, n)
    }

    pub fn rational(&self, num: i64, den: i64) -> CycNum {
        CycNum::rational(self.order, num, den)
    }

    /// [n]_q = (q^n − q^{−n}) / (q − q^{−1}).
    pub fn q_int(&self, n: i64) -> CycNum {
        // closed form: q^{n−1} + q^{n−3} + … + q^{1−n}
        let mut acc = self.zero();
        let mut k = n.abs() - 1;
        while k >= -(n.abs() - 1) {
            acc = acc.add(&self.q_pow(k)).unwrap();
            k -= 2;
        }
        if n < 0 {
            acc = acc.neg();
        }
        acc
    }

    /// [n]_q!
    pub fn q_factorial(&self, n: u64) -> CycNum {
        let mut acc = self.one();
        for k in 1..=n {
            acc = acc.mul(&self.q_int(k as i64)).unwrap();
        }
        acc
    }

    /// Gaussian binomial coefficient at q, via the q-Pascal recursion
    /// (valid at roots of unity where the factorial quotient degenerates).
    pub fn q_binom(&self, n: u64, k: u64) -> Result<CycNum, EngineError> {
        if k > n {
            return Err(EngineError::RangeError(format!(
                "qbinom({n}, {k}): k exceeds n"
            )));
        }
        // row-by-row: binom(m, j) = q^{j} binom(m−1, j) + q^{-(m−j)} binom(m−1, j−1)
        // (the symmetric convention, matching products of q-integers)
        let mut row: Vec<CycNum> = vec![self.one()];
        for m in 1..=n {
            let mut next: Vec<CycNum> = Vec::with_capacity(row.len() + 1);
            for j in 0..=m {
                let a = if j < m as u64 as u64 && (j as usize) < row.len() {
                    row[j as usize].mul(&self.q_pow(j as i64)).unwrap()
                } else {
                    self.zero()
                };
                let b = if j >= 1 && (j as usize - 1) < row.len() {
                    row[j as usize - 1]
                        .mul(&self.q_pow(-((m - j) as i64)))
                        .unwrap()
                } else {
                    self.zero()
                };
                next.push(a.add(&b).unwrap());
            }
            row = next;
        }
        Ok(row[k as usize].clone())
    }

    /// The verified square root of l, available only in the extended field:
    /// the quadratic Gauss sum Σ_t ζ_l^{t²} equals ε√l with ε ∈ {1, i}.
    pub fn sqrt_l(&self) -> Result<CycNum, EngineError> {
        if self.order != 4 * self.l {
            return Err(EngineError::RangeError(
                "sqrt(l) requires the extended field Q(zeta_4l)".into(),
            ));
        }
        let mut gauss = self.zero();
        for t in 0..self.l {
            gauss = gauss
                .add(&self.q_pow(((t * t) % self.l) as i64))
                .unwrap();
        }
        let result = if self.l % 4 == 1 {
            gauss
        } else {
            // ε = i = ζ_{4l}^l (either primitive 4th root works: verified below)
            let i_unit = CycNum::root_of_unity(self.order, self.l as i64);
            gauss.div(&i_unit)?
        };
        let sq = result.mul(&result)?;
        if sq != self.int(self.l as i64) {
            return Err(EngineError::Internal(format!(
                "Gauss sum square check failed for l = {}",
                self.l
            )));
        }
        Ok(result)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(3), 2);
        assert_eq!(euler_phi(5), 4);
        assert_eq!(euler_phi(7), 6);
        assert_eq!(euler_phi(9), 6);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(28), 12);
    }

    #[test]
    fn cyclotomic_relation_l3() {
        // 1 + ζ + ζ² = 0 in Q(ζ_3)
        let one = CycNum::one(3);
        let z = CycNum::root_of_unity(3, 1);
        let z2 = CycNum::root_of_unity(3, 2);
        let s = one.add(&z).unwrap().add(&z2).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn root_power_l5() {
        // ζ·ζ⁴ = 1
        let z = CycNum::root_of_unity(5, 1);
        let z4 = CycNum::root_of_unity(5, 4);
        assert!(z.mul(&z4).unwrap().is_one());
    }

    #[test]
    fn field_inverse_l5() {
        // (ζ − ζ⁴)⁻¹·(ζ − ζ⁴) = 1
        let z = CycNum::root_of_unity(5, 1);
        let z4 = CycNum::root_of_unity(5, 4);
        let d = z.sub(&z4).unwrap();
        assert!(d.inv().unwrap().mul(&d).unwrap().is_one());
    }

    #[test]
    fn order_mismatch_rejected() {
        let a = CycNum::one(3);
        let b = CycNum::one(5);
        assert!(a.add(&b).is_err());
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn division_by_zero_rejected() {
        let a = CycNum::one(5);
        assert!(a.div(&CycNum::zero(5)).is_err());
        assert!(CycNum::zero(5).inv().is_err());
    }

    #[test]
    fn q_int_basics() {
        let q3 = QContext::new(3);
        assert!(q3.q_int(0).is_zero());
        assert!(q3.q_int(3).is_zero()); // [l]_q = 0
        let q5 = QContext::new(5);
        assert!(q5.q_int(5).is_zero());
        // [2]_q = q + q⁻¹ at l = 5
        let expect = q5.q_pow(1).add(&q5.q_pow(-1)).unwrap();
        assert_eq!(q5.q_int(2), expect);
        // [−n]_q = −[n]_q
        assert_eq!(q5.q_int(-2), q5.q_int(2).neg());
    }

    /// Independent oracle: the Gaussian binomial as an integer polynomial in
    /// q (built from the classical Pascal recursion over Z[q, q⁻¹]), then
    /// evaluated at the root of unity.
    fn gaussian_binom_poly_eval(ctx: &QContext, n: u64, k: u64) -> CycNum {
        // polynomial in q with integer coefficients, exponents shifted:
        // store symmetric-convention binomial as a map exponent → coeff
        use std::collections::BTreeMap;
        type Poly = BTreeMap<i64, i64>;
        let add_into = |p: &mut Poly, shift: i64, src: &Poly| {
            for (e, c) in src {
                *p.entry(e + shift).or_insert(0) += c;
            }
        };
        // Pascal: B(m, j) = q^j·B(m−1, j) + q^{j−m}·B(m−1, j−1)
        let mut row: Vec<Poly> = vec![BTreeMap::from([(0, 1)])];
        for m in 1..=n as i64 {
            let mut next: Vec<Poly> = Vec::new();
            for j in 0..=m {
                let mut p = Poly::new();
                if (j as usize) < row.len() {
                    add_into(&mut p, j, &row[j as usize]);
                }
                if j >= 1 && (j as usize - 1) < row.len() {
                    add_into(&mut p, j - m, &row[j as usize - 1]);
                }
                next.push(p);
            }
            row = next;
        }
        let mut acc = ctx.zero();
        for (e, c) in &row[k as usize] {
            acc = acc.add(&ctx.q_pow(*e).scale(&BigRational::from_integer(BigInt::from(*c)))).unwrap();
        }
        acc
    }

    #[test]
    fn q_binom_against_polynomial_oracle() {
        for l in [3u64, 5, 7] {
            let ctx = QContext::new(l);
            for n in 0..=l + 2 {
                for k in 0..=n {
                    let fast = ctx.q_binom(n, k).unwrap();
                    let oracle = gaussian_binom_poly_eval(&ctx, n, k);
                    assert_eq!(fast, oracle, "qbinom({n},{k}) at l={l}");
                }
            }
        }
    }

    #[test]
    fn q_binom_vanishes_at_root() {
        // qbinom(l, k) = 0 for 0 < k < l
        for l in [3u64, 5, 7] {
            let ctx = QContext::new(l);
            for k in 1..l {
                assert!(
                    ctx.q_binom(l, k).unwrap().is_zero(),
                    "qbinom({l},{k}) should vanish"
                );
            }
            assert!(ctx.q_binom(l, 0).unwrap().is_one());
            assert!(ctx.q_binom(l, l).unwrap().is_one());
        }
    }

    #[test]
    fn q_binom_range_check() {
        let ctx = QContext::new(5);
        assert!(ctx.q_binom(2, 3).is_err());
    }

    #[test]
    fn q_factorial_matches_product() {
        let ctx = QContext::new(7);
        let f4 = ctx.q_factorial(4);
        let prod = ctx
            .q_int(1)
            .mul(&ctx.q_int(2))
            .unwrap()
            .mul(&ctx.q_int(3))
            .unwrap()
            .mul(&ctx.q_int(4))
            .unwrap();
        assert_eq!(f4, prod);
    }

    #[test]
    fn sqrt_l_in_extended_field() {
        for l in [3u64, 5, 7] {
            let ctx = QContext::extended(l);
            let s = ctx.sqrt_l().unwrap();
            assert_eq!(s.mul(&s).unwrap(), ctx.int(l as i64));
        }
        // not available in the base field
        assert!(QContext::new(5).sqrt_l().is_err());
    }

    #[test]
    fn extended_field_q_is_primitive() {
        let ctx = QContext::extended(3);
        let q = ctx.q_pow(1);
        assert!(!q.is_one());
        assert!(q.pow(3).unwrap().is_one());
        // Φ_3 relation still holds for q inside Q(ζ_12)
        let s = ctx.one().add(&q).unwrap().add(&q.pow(2).unwrap()).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn galois_conjugation() {
        let z = CycNum::root_of_unity(5, 1);
        let g = z.galois(2);
        assert_eq!(g, CycNum::root_of_unity(5, 2));
        let a = z.add(&CycNum::one(5)).unwrap();
        // galois is a field homomorphism
        assert_eq!(
            a.galois(3).mul(&a.galois(3)).unwrap(),
            a.mul(&a).unwrap().galois(3)
        );
    }
}
