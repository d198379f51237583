use num_bigint::BigUint;
use serde::Serializer;

use crate::numeric::{q_render, Q};

pub fn biguint_str<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn q_str<S: Serializer>(v: &Q, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q_render(v))
}
