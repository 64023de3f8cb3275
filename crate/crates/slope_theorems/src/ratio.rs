//! Exact fraction strings: `"p"` for integers, `"p/q"` otherwise, `q > 0`,
//! always in lowest terms. This is the only wire format for rationals.

use num::rational::BigRational;
use num::traits::One;
use std::str::FromStr;

pub fn format_ratio(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_ratio(s: &str) -> Result<BigRational, String> {
    BigRational::from_str(s.trim()).map_err(|e| format!("bad rational '{s}': {e}"))
}

pub mod ratio_string {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_ratio(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let text = String::deserialize(d)?;
        parse_ratio(&text).map_err(serde::de::Error::custom)
    }
}

pub mod ratio_string_opt {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_some(&format_ratio(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigRational>, D::Error> {
        let text = Option::<String>::deserialize(d)?;
        text.map(|t| parse_ratio(&t).map_err(serde::de::Error::custom))
            .transpose()
    }
}

pub mod bigint_json {
    use num::bigint::BigInt;
    use num::traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        let small = v
            .to_u64()
            .ok_or_else(|| serde::ser::Error::custom("integer out of JSON range"))?;
        s.serialize_u64(small)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        Ok(BigInt::from(u64::deserialize(d)?))
    }
}

pub mod bigint_json_opt {
    use num::bigint::BigInt;
    use num::traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => {
                let small = v
                    .to_u64()
                    .ok_or_else(|| serde::ser::Error::custom("integer out of JSON range"))?;
                s.serialize_some(&small)
            }
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        Ok(Option::<u64>::deserialize(d)?.map(BigInt::from))
    }
}
