//! Text and JSON encodings of polynomials.
//!
//! Text: terms `(coef)*z[α,j]^e*…` joined by ` + `, highest monomial first; `0` for zero.
//! JSON: `{"ambient": {...}, "terms": [[exponents, [re_num, re_den, im_num, im_den]], …]}`
//! with integers as JSON numbers when they fit in `i64` and as strings otherwise.

use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::{Ambient, Monomial, SparsePoly};
use crate::error::{Error, Result};
use crate::scalar::{int_to_json, json_to_int, GaussianRational};

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let amb = self.ambient;
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (v, e) in m.support() {
                let vi = amb.var_index(v);
                write!(f, "*z[{},{}]", vi.alpha, vi.j)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

fn parse_term(amb: Ambient, t: &str) -> Result<(Monomial, GaussianRational)> {
    let bad = || Error::Parse(format!("bad term '{t}'"));
    let t = t.trim();
    let (coef, rest) = if let Some(body) = t.strip_prefix('(') {
        let close = body.find(')').ok_or_else(bad)?;
        let rest = body[close + 1..].trim_start_matches('*');
        (body[..close].parse::<GaussianRational>()?, rest)
    } else {
        match t.find("z[") {
            Some(0) => (GaussianRational::from_int(1), t),
            Some(k) => (t[..k].trim_end_matches('*').parse()?, &t[k..]),
            None => (t.parse()?, ""),
        }
    };
    let mut exps = vec![0u32; amb.nvars()];
    for factor in rest.split('*').filter(|s| !s.is_empty()) {
        let body = factor.strip_prefix("z[").ok_or_else(bad)?;
        let (idx, pow) = body.split_once(']').ok_or_else(bad)?;
        let (a, j) = idx.split_once(',').ok_or_else(bad)?;
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let j: usize = j.trim().parse().map_err(|_| bad())?;
        let e: u32 = match pow.strip_prefix('^') {
            Some(e) => e.parse().map_err(|_| bad())?,
            None if pow.is_empty() => 1,
            None => return Err(bad()),
        };
        exps[amb.var(a, j)?] += e;
    }
    Ok((Monomial::from_exps(exps), coef))
}

impl SparsePoly {
    /// Parses the text format; also accepts bare coefficients and omitted `(1)*`.
    pub fn parse(amb: Ambient, s: &str) -> Result<SparsePoly> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let terms = s
            .split(" + ")
            .map(|t| parse_term(amb, t))
            .collect::<Result<Vec<_>>>()?;
        SparsePoly::from_terms(amb, terms)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let parts: Vec<Value> = c.to_parts().iter().map(int_to_json).collect();
                json!([m.exps(), parts])
            })
            .collect();
        json!({ "ambient": self.ambient, "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<SparsePoly> {
        let bad = |why: &str| Error::Parse(format!("polynomial JSON: {why}"));
        let amb: Ambient = serde_json::from_value(v.get("ambient").cloned().ok_or_else(|| bad("no ambient"))?)
            .map_err(|e| bad(&e.to_string()))?;
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("no terms array"))?;
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            let pair = t.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("term is not a pair"))?;
            let exps: Vec<u32> =
                serde_json::from_value(pair[0].clone()).map_err(|e| bad(&e.to_string()))?;
            let raw = pair[1].as_array().filter(|a| a.len() == 4).ok_or_else(|| bad("coefficient needs 4 integers"))?;
            let ints = raw.iter().map(json_to_int).collect::<Result<Vec<_>>>()?;
            let parts: [BigInt; 4] = ints.try_into().expect("length checked");
            out.push((Monomial::from_exps(exps), GaussianRational::from_parts(&parts)?));
        }
        SparsePoly::from_terms(amb, out)
    }
}
