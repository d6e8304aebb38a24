//! Canonical JSON form of exact values.
//!
//! Every series is a list of `{"exponent_times_2": e, "coefficient": c}`
//! objects with `c` in the form of the coefficient ring; rationals are the
//! strings `"num/den"`.

use num_rational::Ratio;
use serde_json::{json, Map, Value};

use super::plaurent::PLaurent;
use super::qseries::{QSeries, EXACT};
use super::rational::{self, Rational};
use super::ring::Ring;
use super::tpoly::TPoly;
use super::trat::TRat;
use crate::error::{Error, Result};

pub trait CanonicalJson: Sized {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

fn bad(what: &str, v: &Value) -> Error {
    Error::Parse(format!("expected {what}, got {v}"))
}

fn term_list<'a, C: CanonicalJson + 'a>(terms: impl Iterator<Item = (i64, &'a C)>) -> Value {
    Value::Array(terms.map(|(e, c)| json!({"exponent_times_2": e, "coefficient": c.to_json()})).collect())
}

fn parse_terms<C: CanonicalJson>(v: &Value) -> Result<Vec<(i64, C)>> {
    let arr = v.as_array().ok_or_else(|| bad("term list", v))?;
    arr.iter()
        .map(|t| {
            let e = t.get("exponent_times_2").and_then(Value::as_i64).ok_or_else(|| bad("exponent_times_2", t))?;
            let c = t.get("coefficient").ok_or_else(|| bad("coefficient", t))?;
            Ok((e, C::from_json(c)?))
        })
        .collect()
}

impl CanonicalJson for Rational {
    fn to_json(&self) -> Value {
        Value::String(rational::to_canonical(self))
    }
    fn from_json(v: &Value) -> Result<Self> {
        rational::parse(v.as_str().ok_or_else(|| bad("rational string", v))?)
    }
}

impl CanonicalJson for TPoly {
    fn to_json(&self) -> Value {
        term_list(self.terms())
    }
    fn from_json(v: &Value) -> Result<Self> {
        Ok(TPoly::from_terms(parse_terms::<Rational>(v)?))
    }
}

impl CanonicalJson for TRat {
    fn to_json(&self) -> Value {
        match self.as_poly() {
            Some(p) => p.to_json(),
            None => json!({"num": self.numer().to_json(), "den": self.denom().to_json()}),
        }
    }
    fn from_json(v: &Value) -> Result<Self> {
        if v.is_array() {
            return Ok(TRat::from_poly(TPoly::from_json(v)?));
        }
        let num = v.get("num").ok_or_else(|| bad("num", v))?;
        let den = v.get("den").ok_or_else(|| bad("den", v))?;
        TRat::new(TPoly::from_json(num)?, TPoly::from_json(den)?)
    }
}

impl CanonicalJson for PLaurent {
    fn to_json(&self) -> Value {
        json!({"terms": term_list(self.terms()), "precision_times_2": self.precision()})
    }
    fn from_json(v: &Value) -> Result<Self> {
        let terms = parse_terms::<TRat>(v.get("terms").ok_or_else(|| bad("terms", v))?)?;
        let r = PLaurent::from_terms(terms);
        Ok(match v.get("precision_times_2").and_then(Value::as_i64) {
            Some(p) => r.truncate(p),
            None => r,
        })
    }
}

impl<C: Ring + CanonicalJson> CanonicalJson for QSeries<C> {
    fn to_json(&self) -> Value {
        let mut m = Map::new();
        let off = self.offset();
        m.insert("offset".into(), Value::String(format!("{}/{}", off.numer(), off.denom())));
        m.insert("order_times_2".into(), json!(self.order()));
        m.insert("terms".into(), term_list(self.terms()));
        Value::Object(m)
    }
    fn from_json(v: &Value) -> Result<Self> {
        let terms = parse_terms::<C>(v.get("terms").ok_or_else(|| bad("terms", v))?)?;
        let order = match v.get("order_times_2") {
            Some(Value::Null) | None => EXACT,
            Some(o) => o.as_i64().ok_or_else(|| bad("order_times_2", o))?,
        };
        let off = v.get("offset").and_then(Value::as_str).unwrap_or("0/1");
        let off = rational::parse(off)?;
        let to_i64 = |b: &num_bigint::BigInt| i64::try_from(b).map_err(|_| Error::Parse(format!("offset out of range: {off}")));
        let offset = Ratio::new(to_i64(off.numer())?, to_i64(off.denom())?);
        Ok(QSeries::from_terms(terms, order).with_offset(offset))
    }
}

/// Serde support through the canonical JSON form.
macro_rules! serde_via_json {
    ($($ty:ty),*) => {$(
        impl serde::Serialize for $ty {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                self.to_json().serialize(s)
            }
        }
        impl<'de> serde::Deserialize<'de> for $ty {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let v = Value::deserialize(d)?;
                Self::from_json(&v).map_err(serde::de::Error::custom)
            }
        }
    )*};
}

serde_via_json!(TPoly, TRat, PLaurent);

/// For `#[serde(with = ...)]` on rational fields.
pub mod rational_serde {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&rational::to_canonical(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        rational::parse(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rational::{int, rat};

    #[test]
    fn rational_strings() {
        assert_eq!(rat(-1, 2).to_json(), json!("-1/2"));
        assert_eq!(int(3).to_json(), json!("3/1"));
    }

    #[test]
    fn nested_round_trip() {
        let coeff = PLaurent::from_monomials([(2, 1, int(2)), (-2, -1, rat(1, 3))]).truncate(8);
        let s = QSeries::from_terms([(0, coeff.clone()), (3, coeff.neg())], 10).with_offset(Ratio::new(1, 24));
        let v = s.to_json();
        let back = QSeries::<PLaurent>::from_json(&v).unwrap();
        assert_eq!(back, s);
        let t = TRat::new(TPoly::one(), TPoly::half_gap()).unwrap();
        assert_eq!(TRat::from_json(&t.to_json()).unwrap(), t);
    }
}
