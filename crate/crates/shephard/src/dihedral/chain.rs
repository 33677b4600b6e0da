use crate::algebra::{kernel_basis, IntegerMatrix};
use crate::error::{Error, Result};
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

/// Cellular boundary data of the quotient complex of a triangle group, with the
/// 2-cells e_a, e_c, e_ac and the 1-cells a, c.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ChainData {
    pub triangle: [u32; 3],
    /// Rows a, c; columns e_a, e_c, e_ac.
    pub d2: IntegerMatrix,
    /// Generator of the kernel of d2, sign fixed so the e_ac coefficient is positive.
    pub h2_generator: [i64; 3],
    /// (-L/p, -L/r, L/q) with L = lcm(p, q, r).
    pub closed_form: [i64; 3],
    /// The same expression with lcm(p, r) in the e_a and e_c coefficients.
    pub lcm_pr_variant: [i64; 3],
    pub lcm_pr_variant_is_cycle: bool,
    pub phi: [i64; 3],
    pub pairing_value: i64,
}

/// Boundary map, H2 generator and pairing with the cocycle that is 1 on e_ac, for
/// triangle parameters (p, q, r).
pub fn compute_chain_data(p: u32, q: u32, r: u32) -> Result<ChainData> {
    let (p, q, r) = (p as i64, q as i64, r as i64);
    let d2 = IntegerMatrix::from_i64(&[vec![p, 0, q], vec![0, r, q]]);
    let kernel = kernel_basis(&d2);
    if kernel.len() != 1 {
        return Err(Error::Inconclusive(format!(
            "kernel of d2 has rank {}",
            kernel.len()
        )));
    }
    let mut h2 = [0i64; 3];
    for (slot, x) in h2.iter_mut().zip(&kernel[0]) {
        *slot = x.to_i64().ok_or(Error::Overflow)?;
    }
    if h2[2] < 0 {
        h2 = h2.map(|x| -x);
    }
    let l = p.lcm(&q).lcm(&r);
    let lpr = p.lcm(&r);
    let closed_form = [-l / p, -l / r, l / q];
    let variant = [-lpr / p, -lpr / r, l / q];
    let is_cycle = |v: [i64; 3]| p * v[0] + q * v[2] == 0 && r * v[1] + q * v[2] == 0;
    let phi = [0, 0, 1];
    let pairing_value = h2.iter().zip(phi).map(|(x, y)| x * y).sum();
    Ok(ChainData {
        triangle: [p as u32, q as u32, r as u32],
        d2,
        h2_generator: h2,
        closed_form,
        lcm_pr_variant: variant,
        lcm_pr_variant_is_cycle: is_cycle(variant),
        phi,
        pairing_value,
    })
}
