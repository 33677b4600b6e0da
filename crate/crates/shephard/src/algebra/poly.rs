//! Small dense polynomial helpers. Coefficient vectors are stored low degree first.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

fn trim_i128(p: &mut Vec<i128>) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

fn exact_div_i128(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut rem = num.to_vec();
    let dl = den.len();
    let lead = *den.last().unwrap();
    let mut quot = vec![0i128; num.len() + 1 - dl];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dl - 1] / lead;
        quot[k] = c;
        for (i, &d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    quot
}

/// The n-th cyclotomic polynomial.
pub fn cyclotomic(n: u32) -> Vec<i128> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i128>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut p = vec![0i128; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = exact_div_i128(&p, &cyclotomic(d));
        }
    }
    trim_i128(&mut p);
    cache.lock().unwrap().insert(n, p.clone());
    p
}

/// Chebyshev-style polynomials with C_k(x + 1/x) = x^k + x^-k.
pub fn chebyshev_c(k: usize) -> Vec<i128> {
    let mut prev = vec![2i128];
    if k == 0 {
        return prev;
    }
    let mut cur = vec![0i128, 1];
    for _ in 1..k {
        let mut next = vec![0i128; cur.len() + 1];
        for (i, &c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, &c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        trim_i128(&mut next);
        prev = cur;
        cur = next;
    }
    cur
}

/// Minimal polynomial of 2cos(pi/l), monic.
pub fn min_poly_two_cos(l: u32) -> Vec<i128> {
    match l {
        1 => return vec![2, 1],
        2 => return vec![0, 1],
        _ => {}
    }
    let phi = cyclotomic(2 * l);
    let d = (phi.len() - 1) / 2;
    let mut out = vec![0i128; d + 1];
    out[0] += phi[d];
    for k in 1..=d {
        let ck = chebyshev_c(k);
        for (i, &c) in ck.iter().enumerate() {
            out[i] += phi[d + k] * c;
        }
    }
    trim_i128(&mut out);
    out
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_i128(n: i128) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn trim_q(p: &mut Vec<BigRational>) {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
    if p.is_empty() {
        p.push(BigRational::zero());
    }
}

pub fn is_zero_q(p: &[BigRational]) -> bool {
    p.iter().all(|c| c.is_zero())
}

pub fn mul_q(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim_q(&mut out);
    out
}

pub fn sub_q(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim_q(&mut out);
    out
}

/// Quotient and remainder over Q.
pub fn divmod_q(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    trim_q(&mut rem);
    let mut bb = b.to_vec();
    trim_q(&mut bb);
    let db = bb.len() - 1;
    let lead = bb[db].clone();
    if rem.len() < bb.len() {
        return (vec![BigRational::zero()], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] / &lead;
        if !c.is_zero() {
            for (i, d) in bb.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
        }
        quot[k] = c;
    }
    rem.truncate(db.max(1));
    trim_q(&mut rem);
    trim_q(&mut quot);
    (quot, rem)
}

/// Evaluate a rational polynomial at a rational point.
pub fn eval_q(p: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Interval Horner evaluation on [lo, hi].
pub fn eval_interval(
    p: &[BigRational],
    lo: &BigRational,
    hi: &BigRational,
) -> (BigRational, BigRational) {
    let mut a = BigRational::zero();
    let mut b = BigRational::zero();
    for c in p.iter().rev() {
        let cands = [&a * lo, &a * hi, &b * lo, &b * hi];
        let mut mn = cands[0].clone();
        let mut mx = cands[0].clone();
        for v in &cands[1..] {
            if *v < mn {
                mn = v.clone();
            }
            if *v > mx {
                mx = v.clone();
            }
        }
        a = mn + c;
        b = mx + c;
    }
    (a, b)
}

pub fn sign_q(x: &BigRational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub fn one_q() -> BigRational {
    BigRational::one()
}
