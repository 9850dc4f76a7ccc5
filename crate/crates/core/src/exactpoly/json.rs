//! Canonical JSON encoding:
//! `{"context":{...},"terms":[{"exp":[..],"coeff":[..]},..]}` with terms in
//! graded-lex order and coefficient lists low degree first.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Number;

use super::{Context, Poly, QCoeff};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyJson<C> {
    context: C,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    exp: Vec<u32>,
    coeff: Vec<Number>,
}

pub(crate) fn number(n: &BigInt) -> Number {
    Number::from_str(&n.to_string()).expect("integers are valid JSON numbers")
}

pub(crate) fn integer(n: &Number) -> Result<BigInt> {
    BigInt::from_str(&n.to_string()).map_err(|_| Error::Parse(format!("not an integer: {n}")))
}

impl QCoeff {
    pub fn to_json_numbers(&self) -> Vec<Number> {
        self.coeffs().iter().map(number).collect()
    }

    pub fn from_json_numbers(nums: &[Number]) -> Result<Self> {
        let coeffs = nums.iter().map(integer).collect::<Result<Vec<_>>>()?;
        if coeffs.last().is_some_and(|c| c == &BigInt::default()) {
            return Err(Error::Parse("coefficient list has trailing zeros".into()));
        }
        Ok(QCoeff::from_coeffs(coeffs))
    }
}

impl<C: Context + Serialize + DeserializeOwned> Poly<C> {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_json_repr()).expect("serializable")
    }

    /// Compact canonical JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_repr()).expect("serializable")
    }

    fn to_json_repr(&self) -> PolyJson<C> {
        PolyJson {
            context: self.context().clone(),
            terms: self
                .terms()
                .map(|(e, c)| TermJson {
                    exp: e.as_slice().to_vec(),
                    coeff: c.to_json_numbers(),
                })
                .collect(),
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let repr: PolyJson<C> = serde_json::from_str(s)?;
        let ctx = repr.context;
        let mut terms = std::collections::BTreeMap::new();
        for t in repr.terms {
            if t.exp.len() != ctx.slots() {
                return Err(Error::BadExponentLength {
                    expected: ctx.slots(),
                    got: t.exp.len(),
                });
            }
            let e = super::Exponent::new(t.exp);
            if e.degree() > ctx.degree_cap() {
                return Err(Error::Parse(format!(
                    "term of degree {} exceeds cap {}",
                    e.degree(),
                    ctx.degree_cap()
                )));
            }
            let c = QCoeff::from_json_numbers(&t.coeff)?;
            if c.is_zero() {
                return Err(Error::Parse("term with zero coefficient".into()));
            }
            if terms.insert(e, c).is_some() {
                return Err(Error::Parse("duplicate exponent vector".into()));
            }
        }
        Ok(Poly::from_parts(ctx, terms))
    }
}
