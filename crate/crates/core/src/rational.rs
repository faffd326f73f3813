//! Exact rationals as `p/q` strings, for input parsing and serialization.

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::{Error, Result};

pub fn format(x: &Rational64) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse(s: &str) -> Result<Rational64> {
    let s = s.trim();
    let bad = || Error::Parse(format!("`{s}` is not a rational number p/q"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("`{s}` has zero denominator")));
            }
            Ok(Rational64::new(p, q))
        }
        None => s
            .parse::<i64>()
            .map(Rational64::from_integer)
            .map_err(|_| bad()),
    }
}

/// `#[serde(with = "crate::rational::serde_str")]`
pub mod serde_str {
    use num_rational::Rational64;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Rational64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational64, D::Error> {
        let s = String::deserialize(d)?;
        super::parse(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for x in [
            Rational64::new(-2, 3),
            Rational64::new(4, 2),
            Rational64::zero(),
        ] {
            assert_eq!(parse(&format(&x)).unwrap(), x);
        }
        assert_eq!(format(&Rational64::new(6, -4)), "-3/2");
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }
}
