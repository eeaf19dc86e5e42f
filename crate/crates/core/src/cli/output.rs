//! JSON and CSV rendering.
//!
//! Integers that fit in `i64` become JSON numbers; larger ones and
//! non-integral rationals become decimal strings (`"123…"`, `"-3/2"`).

use std::io::{self, Write};

use num::{BigInt, BigRational, ToPrimitive};
use serde_json::{json, Map, Value};

use crate::exactnum::GaussianRational;

pub fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(x.to_string()),
    }
}

pub fn ratio_json(x: &BigRational) -> Value {
    if x.is_integer() {
        int_json(x.numer())
    } else {
        Value::String(x.to_string())
    }
}

pub fn gaussian_json(x: &GaussianRational) -> Value {
    json!({ "re": ratio_json(&x.re), "im": ratio_json(&x.im) })
}

fn opt<T>(x: Option<&T>, f: impl Fn(&T) -> Value) -> Value {
    x.map_or(Value::Null, f)
}

/// Invariants recomputed by enumeration for `--check`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleBlock {
    pub g: BigInt,
    pub n: BigInt,
    pub s: BigInt,
    pub weighted: Option<GaussianRational>,
    pub agree: bool,
}

/// One computed result, whatever produced it. Invariants with no
/// available method are `None` and print as `null`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Computation {
    pub generators: Vec<u64>,
    pub family: &'static str,
    pub params: Vec<(&'static str, u64)>,
    pub g: Option<BigInt>,
    pub n: Option<BigInt>,
    pub s: Option<BigInt>,
    pub lambda: Option<GaussianRational>,
    pub weighted: Option<GaussianRational>,
    pub gaps: Option<Vec<u64>>,
    pub oracle: Option<OracleBlock>,
}

impl Computation {
    pub fn new(generators: Vec<u64>, family: &'static str, params: Vec<(&'static str, u64)>) -> Self {
        Self {
            generators,
            family,
            params,
            g: None,
            n: None,
            s: None,
            lambda: None,
            weighted: None,
            gaps: None,
            oracle: None,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("generators".into(), json!(self.generators));
        obj.insert("family".into(), json!(self.family));
        let params: Map<String, Value> = self.params.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
        obj.insert("params".into(), Value::Object(params));
        obj.insert("g".into(), opt(self.g.as_ref(), int_json));
        obj.insert("n".into(), opt(self.n.as_ref(), int_json));
        obj.insert("s".into(), opt(self.s.as_ref(), int_json));
        obj.insert("lambda".into(), opt(self.lambda.as_ref(), |l| json!(l.to_string())));
        obj.insert("weighted".into(), opt(self.weighted.as_ref(), gaussian_json));
        if let Some(gaps) = &self.gaps {
            obj.insert("gaps".into(), json!(gaps));
        }
        if let Some(o) = &self.oracle {
            obj.insert(
                "oracle".into(),
                json!({
                    "g": int_json(&o.g),
                    "n": int_json(&o.n),
                    "s": int_json(&o.s),
                    "weighted": opt(o.weighted.as_ref(), gaussian_json),
                    "agree": o.agree,
                }),
            );
        }
        Value::Object(obj)
    }

    pub fn write_json(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "{}", self.to_json())
    }

    pub fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut header = vec![
            "generators",
            "family",
            "params",
            "g",
            "n",
            "s",
            "lambda",
            "weighted_re",
            "weighted_im",
        ];
        let show = |x: Option<&BigInt>| x.map_or(String::new(), BigInt::to_string);
        let mut row = vec![
            join(&self.generators),
            self.family.to_string(),
            self.params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(" "),
            show(self.g.as_ref()),
            show(self.n.as_ref()),
            show(self.s.as_ref()),
            self.lambda.as_ref().map_or(String::new(), |l| l.to_string()),
            self.weighted.as_ref().map_or(String::new(), |w| w.re.to_string()),
            self.weighted.as_ref().map_or(String::new(), |w| w.im.to_string()),
        ];
        if let Some(gaps) = &self.gaps {
            header.push("gaps");
            row.push(join(gaps));
        }
        if let Some(o) = &self.oracle {
            header.extend(["oracle_g", "oracle_n", "oracle_s", "oracle_weighted", "agree"]);
            row.extend([
                o.g.to_string(),
                o.n.to_string(),
                o.s.to_string(),
                o.weighted.as_ref().map_or(String::new(), |w| w.to_string()),
                o.agree.to_string(),
            ]);
        }
        write_csv_rows(out, &header, [row])
    }
}

pub fn join(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

pub fn write_csv_rows(
    out: &mut dyn Write,
    header: &[&str],
    rows: impl IntoIterator<Item = Vec<String>>,
) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::parse_gaussian;

    #[test]
    fn big_numbers_become_strings() {
        assert_eq!(int_json(&BigInt::from(165)), json!(165));
        assert_eq!(int_json(&BigInt::from(i64::MIN)), json!(i64::MIN));
        let big: BigInt = BigInt::from(i64::MAX) + 1;
        assert_eq!(int_json(&big), json!("9223372036854775808"));
        let w = parse_gaussian("-3/2+4i").unwrap();
        assert_eq!(gaussian_json(&w), json!({"re": "-3/2", "im": 4}));
    }

    #[test]
    fn key_order_is_fixed() {
        let mut c = Computation::new(vec![4, 7, 11], "generic", vec![]);
        c.g = Some(17.into());
        let text = c.to_json().to_string();
        assert!(text.starts_with(r#"{"generators":[4,7,11],"family":"generic","params":{},"g":17,"n":null"#));
    }
}
