//! Real cyclotomic fields Q(2cos(pi/L)) with exact arithmetic and exact sign decisions.

use super::poly::{self, divmod_q, eval_interval, eval_q, mul_q, rat_i128, sign_q, sub_q, trim_q};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// The field Q(gamma) with gamma = 2cos(pi/L). Its conductor is 2L.
#[derive(Debug)]
pub struct RealCyclotomicField {
    l: u32,
    min_poly: Vec<i128>,
    intervals: Mutex<Vec<(u32, BigRational, BigRational)>>,
}

impl RealCyclotomicField {
    /// Shared instance for a given L.
    pub fn get(l: u32) -> Arc<RealCyclotomicField> {
        assert!(l >= 1, "L must be positive");
        static FIELDS: OnceLock<Mutex<HashMap<u32, Arc<RealCyclotomicField>>>> = OnceLock::new();
        let fields = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = fields.lock().unwrap();
        guard
            .entry(l)
            .or_insert_with(|| {
                Arc::new(RealCyclotomicField {
                    l,
                    min_poly: poly::min_poly_two_cos(l),
                    intervals: Mutex::new(Vec::new()),
                })
            })
            .clone()
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn conductor(&self) -> u32 {
        2 * self.l
    }

    pub fn degree(&self) -> usize {
        self.min_poly.len() - 1
    }

    /// Monic minimal polynomial of gamma, low degree first.
    pub fn min_poly(&self) -> &[i128] {
        &self.min_poly
    }

    pub fn gamma_f64(&self) -> f64 {
        2.0 * (std::f64::consts::PI / self.l as f64).cos()
    }

    /// Integer coefficients of 2cos(j*pi/L) in the power basis of gamma.
    pub fn two_cos_multiple(&self, j: u32) -> Vec<i128> {
        let c = poly::chebyshev_c(j as usize);
        reduce_i128(&c, &self.min_poly)
    }

    /// Integer coefficients of 2cos(pi/m); requires m | L or m <= 3.
    pub fn two_cos_pi_over(&self, m: u32) -> Option<Vec<i128>> {
        let d = self.degree();
        let constant = |v: i128| {
            let mut out = vec![0i128; d];
            out[0] = v;
            out
        };
        match m {
            1 => Some(constant(-2)),
            2 => Some(constant(0)),
            3 => Some(constant(1)),
            _ if self.l.is_multiple_of(m) => Some(self.two_cos_multiple(self.l / m)),
            _ => None,
        }
    }

    fn rational_gamma(&self) -> Option<BigRational> {
        if self.degree() == 1 {
            Some(-rat_i128(self.min_poly[0]))
        } else {
            None
        }
    }

    fn min_poly_q(&self) -> Vec<BigRational> {
        self.min_poly.iter().map(|&c| rat_i128(c)).collect()
    }

    /// Rational interval of width below 2^-bits that contains gamma and no other root
    /// of its minimal polynomial.
    pub fn gamma_interval(&self, bits: u32) -> (BigRational, BigRational) {
        if let Some(g) = self.rational_gamma() {
            return (g.clone(), g);
        }
        {
            let cache = self.intervals.lock().unwrap();
            if let Some((_, lo, hi)) = cache.iter().find(|(b, _, _)| *b >= bits) {
                return (lo.clone(), hi.clone());
            }
        }
        let mp = self.min_poly_q();
        let l = self.l as f64;
        let pi = std::f64::consts::PI;
        // distance from gamma to the nearest conjugate 2cos(3pi/L)
        let gap = 4.0 * (2.0 * pi / l).sin() * (pi / l).sin();
        let g = self.gamma_f64();
        let mut lo = BigRational::from_float(g - gap / 4.0).expect("finite");
        let mut hi = BigRational::from_float((g + gap / 4.0).min(2.0)).expect("finite");
        let mut s_lo = sign_q(&eval_q(&mp, &lo));
        let s_hi = sign_q(&eval_q(&mp, &hi));
        assert!(s_lo * s_hi < 0, "root isolation failed for L={}", self.l);
        let target = BigRational::new(BigInt::one(), BigInt::one() << bits);
        let two = rat_i128(2);
        while &hi - &lo >= target {
            let mid = (&lo + &hi) / &two;
            let s = sign_q(&eval_q(&mp, &mid));
            if s == 0 {
                return (mid.clone(), mid);
            }
            if s == s_lo {
                lo = mid;
                s_lo = s;
            } else {
                hi = mid;
            }
        }
        self.intervals
            .lock()
            .unwrap()
            .push((bits, lo.clone(), hi.clone()));
        (lo, hi)
    }
}

/// Reduce an integer polynomial modulo a monic integer polynomial, padded to its degree.
pub fn reduce_i128(p: &[i128], m: &[i128]) -> Vec<i128> {
    let d = m.len() - 1;
    let mut buf = p.to_vec();
    if buf.len() < d {
        buf.resize(d, 0);
    }
    for k in (d..buf.len()).rev() {
        let c = buf[k];
        if c != 0 {
            for i in 0..d {
                buf[k - d + i] -= c * m[i];
            }
            buf[k] = 0;
        }
    }
    buf.truncate(d);
    buf
}

/// An element of Q(2cos(pi/L)) in canonical reduced form.
#[derive(Clone)]
pub struct CyclotomicReal {
    field: Arc<RealCyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl fmt::Debug for CyclotomicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CyclotomicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push(match i {
                0 => format!("{c}"),
                1 => format!("({c})g"),
                _ => format!("({c})g^{i}"),
            });
        }
        if terms.is_empty() {
            terms.push("0".into());
        }
        write!(f, "{} [g=2cos(pi/{})]", terms.join(" + "), self.field.l)
    }
}

impl PartialEq for CyclotomicReal {
    fn eq(&self, other: &Self) -> bool {
        if self.field.l == other.field.l {
            self.coeffs == other.coeffs
        } else {
            let (a, b) = promote_pair(self, other);
            a.coeffs == b.coeffs
        }
    }
}

impl Eq for CyclotomicReal {}

fn promote_pair(a: &CyclotomicReal, b: &CyclotomicReal) -> (CyclotomicReal, CyclotomicReal) {
    let l = a.field.l.lcm(&b.field.l);
    (a.promote(l), b.promote(l))
}

impl CyclotomicReal {
    fn from_poly(field: Arc<RealCyclotomicField>, p: Vec<BigRational>) -> Self {
        let mp: Vec<BigRational> = field.min_poly_q();
        let (_, mut r) = divmod_q(&p, &mp);
        r.resize(field.degree(), BigRational::zero());
        CyclotomicReal { field, coeffs: r }
    }

    pub fn zero(field: &Arc<RealCyclotomicField>) -> Self {
        Self::from_rational(field, BigRational::zero())
    }

    pub fn one(field: &Arc<RealCyclotomicField>) -> Self {
        Self::from_rational(field, BigRational::one())
    }

    pub fn from_int(field: &Arc<RealCyclotomicField>, n: i64) -> Self {
        Self::from_rational(field, poly::rat(n))
    }

    pub fn from_rational(field: &Arc<RealCyclotomicField>, q: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); field.degree()];
        coeffs[0] = q;
        CyclotomicReal {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_int_coeffs(field: &Arc<RealCyclotomicField>, c: &[i128]) -> Self {
        let p: Vec<BigRational> = c.iter().map(|&x| rat_i128(x)).collect();
        Self::from_poly(field.clone(), p)
    }

    /// gamma = 2cos(pi/L).
    pub fn gamma(field: &Arc<RealCyclotomicField>) -> Self {
        Self::from_int_coeffs(field, &[0, 1])
    }

    /// 2cos(j*pi/L).
    pub fn two_cos_multiple(field: &Arc<RealCyclotomicField>, j: u32) -> Self {
        Self::from_int_coeffs(field, &field.two_cos_multiple(j))
    }

    /// 2cos(pi/m) in the smallest convenient field (L = m).
    pub fn two_cos_pi_over(m: u32) -> Self {
        let f = RealCyclotomicField::get(m);
        Self::gamma(&f)
    }

    pub fn field(&self) -> &Arc<RealCyclotomicField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Re-express in Q(2cos(pi/L')) where L divides L'.
    pub fn promote(&self, l_new: u32) -> CyclotomicReal {
        if l_new == self.field.l {
            return self.clone();
        }
        assert!(
            l_new.is_multiple_of(self.field.l),
            "cannot promote L={} to {}",
            self.field.l,
            l_new
        );
        let target = RealCyclotomicField::get(l_new);
        // old gamma = 2cos(pi/L) = C_{L'/L}(new gamma)
        let image: Vec<BigRational> = poly::chebyshev_c((l_new / self.field.l) as usize)
            .iter()
            .map(|&c| rat_i128(c))
            .collect();
        let mut acc = vec![BigRational::zero()];
        for c in self.coeffs.iter().rev() {
            acc = mul_q(&acc, &image);
            acc[0] += c;
        }
        Self::from_poly(target, acc)
    }

    fn aligned(&self, other: &Self) -> (CyclotomicReal, CyclotomicReal) {
        if self.field.l == other.field.l {
            (self.clone(), other.clone())
        } else {
            promote_pair(self, other)
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        CyclotomicReal {
            field: a.field,
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
        CyclotomicReal {
            field: a.field,
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        CyclotomicReal {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let p = mul_q(&a.coeffs, &b.coeffs);
        Self::from_poly(a.field, p)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        CyclotomicReal {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|x| x * q).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against the minimal polynomial.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mp = self.field.min_poly_q();
        let mut r0 = mp;
        let mut r1 = self.coeffs.clone();
        trim_q(&mut r1);
        let mut s0 = vec![BigRational::zero()];
        let mut s1 = vec![BigRational::one()];
        while !(r1.len() == 1 && r1[0].is_zero()) {
            let (q, r) = divmod_q(&r0, &r1);
            let s2 = sub_q(&s0, &mul_q(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
        }
        // r0 is a nonzero constant since the minimal polynomial is irreducible
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].clone();
        let p: Vec<BigRational> = s0.iter().map(|x| x / &c).collect();
        Ok(Self::from_poly(self.field.clone(), p))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn to_f64(&self) -> f64 {
        let g = self.field.gamma_f64();
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * g + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Enclosing interval of the real value using gamma to `bits` bits.
    pub fn interval(&self, bits: u32) -> (BigRational, BigRational) {
        let (lo, hi) = self.field.gamma_interval(bits);
        eval_interval(&self.coeffs, &lo, &hi)
    }

    /// Exact sign: zero test first, then intervals of doubling precision from 64 bits.
    pub fn sign(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let mut bits = 64;
        loop {
            let (lo, hi) = self.interval(bits);
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
            bits *= 2;
        }
    }
}

/// Exact sign of a field element.
pub fn sign_of(x: &CyclotomicReal) -> i32 {
    x.sign()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt3_squared_is_three() {
        let x = CyclotomicReal::two_cos_pi_over(6);
        let f = x.field().clone();
        assert!(x.mul(&x).sub(&CyclotomicReal::from_int(&f, 3)).is_zero());
    }

    #[test]
    fn two_cos_half_pi_is_zero() {
        let f = RealCyclotomicField::get(2);
        assert!(CyclotomicReal::gamma(&f).is_zero());
        let f12 = RealCyclotomicField::get(12);
        assert!(CyclotomicReal::two_cos_multiple(&f12, 6).is_zero());
    }

    #[test]
    fn golden_ratio_identities() {
        let f = RealCyclotomicField::get(5);
        let a = CyclotomicReal::gamma(&f);
        let b = CyclotomicReal::two_cos_multiple(&f, 2);
        let prod = a.mul(&b);
        // 2cos(pi/5) * 2cos(2pi/5) = 1
        assert!((prod.to_f64() - 1.0).abs() < 1e-12);
        assert_eq!(prod, CyclotomicReal::one(&f));
        // and 2cos(pi/5) - 2cos(2pi/5) = 1
        assert_eq!(a.sub(&b), CyclotomicReal::one(&f));
    }

    #[test]
    fn signs() {
        let a = CyclotomicReal::two_cos_pi_over(7);
        let b = CyclotomicReal::two_cos_pi_over(6);
        assert_eq!(a.sub(&b).sign(), 1);
        let f = RealCyclotomicField::get(5);
        let one = CyclotomicReal::one(&f);
        let g = CyclotomicReal::gamma(&f);
        assert_eq!(one.sub(&g.inv().unwrap()).sign(), 1);
        assert_eq!(CyclotomicReal::zero(&f).sign(), 0);
    }

    #[test]
    fn promotion_agrees_numerically() {
        let x = CyclotomicReal::two_cos_pi_over(4);
        let y = x.promote(12);
        assert!((x.to_f64() - y.to_f64()).abs() < 1e-12);
        let z = CyclotomicReal::two_cos_pi_over(6);
        let s = x.add(&z);
        assert_eq!(s.field().l(), 12);
        assert!((s.to_f64() - (2f64.sqrt() + 3f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn minimal_polynomial_residual_at_128_bits() {
        for l in [5u32, 7, 9, 12, 24, 30] {
            let f = RealCyclotomicField::get(l);
            let (lo, hi) = f.gamma_interval(128);
            let mp: Vec<BigRational> = f.min_poly().iter().map(|&c| rat_i128(c)).collect();
            let (a, b) = eval_interval(&mp, &lo, &hi);
            let bound = BigRational::new(BigInt::one(), BigInt::from(10).pow(30));
            assert!(a.abs() < bound && b.abs() < bound, "L={l}");
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let f = RealCyclotomicField::get(9);
        let x = CyclotomicReal::from_int_coeffs(&f, &[3, -1, 2]);
        let y = x.inv().unwrap();
        assert_eq!(x.mul(&y), CyclotomicReal::one(&f));
    }
}
