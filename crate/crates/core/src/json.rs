//! JSON helpers. Big integers are written as plain JSON numbers of any size.

use num_bigint::BigInt;
use serde_json::{Number, Value};

pub fn bigint_to_value(v: &BigInt) -> Value {
    Value::Number(v.to_string().parse::<Number>().expect("integer literal"))
}

pub fn value_to_bigint(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.to_string().parse().ok(),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

pub mod bigint {
    use super::*;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        bigint_to_value(v).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let value = Value::deserialize(d)?;
        value_to_bigint(&value).ok_or_else(|| D::Error::custom("expected an integer"))
    }

    pub mod vec {
        use super::*;

        pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
            v.iter().map(bigint_to_value).collect::<Vec<_>>().serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
            Vec::<Value>::deserialize(d)?
                .iter()
                .map(|v| value_to_bigint(v).ok_or_else(|| D::Error::custom("expected an integer")))
                .collect()
        }
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
            v.as_ref().map(bigint_to_value).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
            match Option::<Value>::deserialize(d)? {
                None | Some(Value::Null) => Ok(None),
                Some(v) => value_to_bigint(&v)
                    .map(Some)
                    .ok_or_else(|| D::Error::custom("expected an integer")),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn huge_integers_stay_exact() {
        let v: BigInt = "123456789012345678901234567890".parse().unwrap();
        let json = serde_json::to_string(&bigint_to_value(&v)).unwrap();
        assert_eq!(json, "123456789012345678901234567890");
        let back: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value_to_bigint(&back), Some(v));
    }
}
