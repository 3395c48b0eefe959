//! Exact integers in JSON.

use num_bigint::BigInt;
use serde_json::{Number, Value};

pub fn int(v: &BigInt) -> Value {
    Value::Number(v.to_string().parse::<Number>().expect("decimal integer is a JSON number"))
}

pub fn to_int(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.to_string().parse().ok(),
        _ => None,
    }
}
