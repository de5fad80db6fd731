//! JSON serialization of the engine's exchange formats.
//!
//! Cyclotomic numbers are encoded as {"l": order, "num": [ints], "den": int}
//! with coefficients in the power basis 1, ζ, …, ζ^{φ−1} over a common
//! denominator. Structure constants follow the sparse schema
//! {"dim", "labels", "mult", "coprod", "counit", "antipode"}.

use crate::cyc::CycNum;
use crate::error::EngineError;
use crate::hopf::algebra::{AlgElem, HopfData};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};
use serde_json::{json, Value};

fn bigint_to_value(b: &BigInt) -> Value {
    // serde_json with arbitrary_precision keeps the exact digits
    let n = serde_json::Number::from_string_unchecked(b.to_string());
    Value::Number(n)
}

fn value_to_bigint(v: &Value) -> Result<BigInt, EngineError> {
    match v {
        Value::Number(n) => n
            .as_str()
            .parse::<BigInt>()
            .map_err(|e| EngineError::Serialization(format!("bad integer: {e}"))),
        _ => Err(EngineError::Serialization("expected integer".into())),
    }
}

pub fn cycnum_to_json(x: &CycNum) -> Value {
    let f = crate::cyc::field(x.order);
    // common denominator over the power basis
    let mut den = BigInt::one();
    for c in x.coeffs() {
        den = den.lcm(c.denom());
    }
    let mut nums: Vec<Value> = Vec::with_capacity(f.phi);
    for j in 0..f.phi {
        let c = x
            .coeffs()
            .get(j)
            .cloned()
            .unwrap_or_else(BigRational::zero);
        let scaled = c * BigRational::from_integer(den.clone());
        debug_assert!(scaled.is_integer());
        nums.push(bigint_to_value(&scaled.to_integer()));
    }
    json!({ "l": x.order, "num": nums, "den": bigint_to_value(&den) })
}

pub fn cycnum_from_json(v: &Value) -> Result<CycNum, EngineError> {
    let obj = v
        .as_object()
        .ok_or_else(|| EngineError::Serialization("expected object".into()))?;
    let order = obj
        .get("l")
        .and_then(|x| x.as_u64())
        .ok_or_else(|| EngineError::Serialization("missing order".into()))?;
    let den = value_to_bigint(
        obj.get("den")
            .ok_or_else(|| EngineError::Serialization("missing den".into()))?,
    )?;
    if den.is_zero() {
        return Err(EngineError::Serialization("zero denominator".into()));
    }
    let nums = obj
        .get("num")
        .and_then(|x| x.as_array())
        .ok_or_else(|| EngineError::Serialization("missing num".into()))?;
    let mut acc = CycNum::zero(order);
    for (j, nv) in nums.iter().enumerate() {
        let n = value_to_bigint(nv)?;
        if n.is_zero() {
            continue;
        }
        let coeff = BigRational::new(n, den.clone());
        let term = CycNum::root_of_unity(order, j as i64).scale(&coeff);
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

pub fn algelem_to_json(x: &AlgElem) -> Value {
    Value::Array(
        x.terms
            .iter()
            .map(|(i, c)| json!([i, cycnum_to_json(c)]))
            .collect(),
    )
}

pub fn hopf_to_json(h: &HopfData) -> Value {
    let mult: Vec<Value> = (0..h.dim)
        .flat_map(|i| {
            (0..h.dim).map(move |j| {
                let prod = h.basis_product(i, j);
                json!([i, j, prod.terms.iter().map(|(k, c)| json!([k, cycnum_to_json(c)])).collect::<Vec<_>>()])
            })
        })
        .collect();
    let coprod: Vec<Value> = (0..h.dim)
        .map(|i| {
            json!([
                i,
                h.coprod[i]
                    .iter()
                    .map(|(j, k, c)| json!([j, k, cycnum_to_json(c)]))
                    .collect::<Vec<_>>()
            ])
        })
        .collect();
    let counit: Vec<Value> = h.counit.iter().map(cycnum_to_json).collect();
    let antipode: Vec<Value> = h
        .antipode
        .iter()
        .map(|img| Value::Array(img.to_dense().iter().map(cycnum_to_json).collect()))
        .collect();
    json!({
        "schema": 1,
        "dim": h.dim,
        "labels": h.labels,
        "mult": mult,
        "coprod": coprod,
        "counit": counit,
        "antipode": antipode,
    })
}

pub fn subspace_to_json(h: &HopfData, sub: &crate::linalg::Subspace) -> Value {
    Value::Array(
        sub.basis
            .data
            .iter()
            .map(|row| algelem_to_json(&AlgElem::from_sparse_row(h.order, h.dim, row)))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyc::QContext;

    #[test]
    fn cycnum_round_trip() {
        let ctx = QContext::new(5);
        let x = ctx
            .q_pow(3)
            .scale(&BigRational::new(BigInt::from(7), BigInt::from(3)))
            .add(&ctx.rational(-1, 6))
            .unwrap();
        let v = cycnum_to_json(&x);
        let y = cycnum_from_json(&v).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn zero_round_trip() {
        let z = CycNum::zero(7);
        assert_eq!(cycnum_from_json(&cycnum_to_json(&z)).unwrap(), z);
    }
}
