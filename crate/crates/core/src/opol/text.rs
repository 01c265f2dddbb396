// Text form: "3*x1^2*x2 - x3 + 5", variables ascending within a monomial.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{normalize_monomial, SkewPolynomial};
use crate::error::{Error, Result};

pub(super) fn write(p: &SkewPolynomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return f.write_str("0");
    }
    // Higher degree first, then lexicographically larger exponent vectors.
    let mut terms: Vec<_> = p.terms().iter().collect();
    terms.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()).then_with(|| b.cmp(a)));
    for (k, (m, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        match (k, neg) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        let abs = c.abs();
        let vars: Vec<String> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| if a == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, a) })
            .collect();
        if vars.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            f.write_str(&vars.join("*"))?;
        } else {
            write!(f, "{abs}*{}", vars.join("*"))?;
        }
    }
    Ok(())
}

pub(super) fn parse(s: &str, n: usize) -> Result<SkewPolynomial> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut terms = Vec::new();
    let mut rest = compact.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let (neg, body) = match rest.as_bytes()[0] {
            b'+' => (false, &rest[1..]),
            b'-' => (true, &rest[1..]),
            _ if first => (false, rest),
            _ => return Err(Error::Parse(format!("expected + or - in {s:?}"))),
        };
        first = false;
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let (term, tail) = body.split_at(end);
        rest = tail;
        let (mut coeff, word) = parse_term(term, s)?;
        if neg {
            coeff = -coeff;
        }
        let (sign, m) = normalize_monomial(&word, n)?;
        if sign.is_minus() {
            coeff = -coeff;
        }
        terms.push((m, coeff));
    }
    Ok(SkewPolynomial::from_terms(n, terms))
}

fn parse_term(term: &str, whole: &str) -> Result<(BigInt, Vec<u32>)> {
    let bad = || Error::Parse(format!("bad term {term:?} in {whole:?}"));
    if term.is_empty() {
        return Err(bad());
    }
    let mut coeff = BigInt::one();
    let mut word = Vec::new();
    for (k, factor) in term.split('*').enumerate() {
        if let Some(var) = factor.strip_prefix('x') {
            let (idx, exp) = match var.split_once('^') {
                Some((i, e)) => (i, e.parse::<u32>().map_err(|_| bad())?),
                None => (var, 1),
            };
            let idx = idx.parse::<u32>().map_err(|_| bad())?;
            word.extend(std::iter::repeat_n(idx, exp as usize));
        } else if k == 0 {
            coeff = factor.parse::<BigInt>().map_err(|_| bad())?;
        } else {
            return Err(bad());
        }
    }
    if coeff.is_zero() {
        word.clear();
    }
    Ok((coeff, word))
}

/// JSON form: `{"n": 3, "text": "x1^2 - x2"}`. The variable count travels with the text
/// so that the zero polynomial and unused trailing variables survive a round trip.
#[derive(serde::Serialize, serde::Deserialize)]
struct Wire {
    n: usize,
    text: String,
}

impl serde::Serialize for SkewPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        Wire { n: self.n(), text: self.to_string() }.serialize(serializer)
    }
}

impl<'de> serde::Deserialize<'de> for SkewPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(deserializer)?;
        parse(&w.text, w.n).map_err(serde::de::Error::custom)
    }
}
