// Text form "2*h[2,1] - h[1,1,1]" and JSON triples {basis, partition, coeff}.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Basis, SymFunction, Tensor};
use crate::diagrams::Partition;
use crate::error::{Error, Result};

fn write_terms<'a>(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (String, &'a BigInt)>) -> fmt::Result {
    let mut any = false;
    for (k, (label, c)) in terms.enumerate() {
        any = true;
        match (k, c.is_negative()) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        let abs = c.abs();
        if abs.is_one() {
            f.write_str(&label)?;
        } else {
            write!(f, "{abs}*{label}")?;
        }
    }
    if !any {
        f.write_str("0")?;
    }
    Ok(())
}

pub(super) fn write(p: &SymFunction, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let letter = p.basis.letter();
    write_terms(f, p.terms.iter().rev().map(|(lambda, c)| (format!("{letter}{lambda}"), c)))
}

pub(super) fn write_tensor(t: &Tensor, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write_terms(f, t.terms.iter().rev().map(|((a, b), c)| (format!("h{a} ⊗ h{b}"), c)))
}

/// Splits at top-level `+`/`-`, returning signed pieces.
fn split_signed(s: &str) -> Result<Vec<(bool, String)>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut out = Vec::new();
    let mut current = String::new();
    let mut neg = false;
    for (i, ch) in compact.chars().enumerate() {
        if ch == '+' || ch == '-' {
            if i > 0 {
                if current.is_empty() {
                    return Err(Error::Parse(format!("dangling sign in {s:?}")));
                }
                out.push((neg, std::mem::take(&mut current)));
            }
            neg = ch == '-';
        } else {
            current.push(ch);
        }
    }
    if current.is_empty() {
        return Err(Error::Parse(format!("dangling sign in {s:?}")));
    }
    out.push((neg, current));
    Ok(out)
}

pub(super) fn parse(s: &str) -> Result<SymFunction> {
    let mut basis: Option<Basis> = None;
    let mut terms: Vec<(Option<Partition>, BigInt)> = Vec::new();
    for (neg, piece) in split_signed(s)? {
        let bad = || Error::Parse(format!("bad term {piece:?} in {s:?}"));
        let (coeff, element) = match piece.split_once('*') {
            Some((c, e)) => (c.parse::<BigInt>().map_err(|_| bad())?, Some(e)),
            None if piece.chars().next().is_some_and(|c| c.is_ascii_digit()) => {
                (piece.parse::<BigInt>().map_err(|_| bad())?, None)
            }
            None => (BigInt::one(), Some(piece.as_str())),
        };
        let coeff = if neg { -coeff } else { coeff };
        let index = match element {
            None => None,
            Some(e) => {
                let mut chars = e.chars();
                let b: Basis = chars.next().ok_or_else(bad)?.to_string().parse()?;
                if basis.is_some_and(|prev| prev != b) {
                    return Err(Error::Parse(format!("mixed bases in {s:?}")));
                }
                basis = Some(b);
                Some(chars.as_str().parse::<Partition>()?)
            }
        };
        terms.push((index, coeff));
    }
    let basis = basis.unwrap_or(Basis::H);
    // A bare integer is a multiple of the unit.
    let terms: Vec<(Partition, BigInt)> =
        terms.into_iter().map(|(p, c)| (p.unwrap_or_else(Partition::empty), c)).collect();
    let degree = terms.iter().find(|(_, c)| !c.is_zero()).map(|(p, _)| p.weight()).unwrap_or(0);
    SymFunction::from_terms(basis, degree, terms)
}

#[derive(Serialize, Deserialize)]
struct Triple {
    basis: Basis,
    partition: Partition,
    coeff: Coeff,
}

/// Integers that fit in `i64` are written as JSON numbers, others as strings.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coeff {
    Small(i64),
    Big(String),
}

impl Coeff {
    fn from_bigint(c: &BigInt) -> Self {
        c.to_i64().map(Coeff::Small).unwrap_or_else(|| Coeff::Big(c.to_string()))
    }

    fn to_bigint(&self) -> std::result::Result<BigInt, String> {
        match self {
            Coeff::Small(v) => Ok(BigInt::from(*v)),
            Coeff::Big(s) => s.parse().map_err(|_| format!("bad coefficient {s:?}")),
        }
    }
}

impl Serialize for SymFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let triples: Vec<Triple> = self
            .terms
            .iter()
            .rev()
            .map(|(p, c)| Triple { basis: self.basis, partition: p.clone(), coeff: Coeff::from_bigint(c) })
            .collect();
        triples.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let triples = Vec::<Triple>::deserialize(deserializer)?;
        let Some(first) = triples.first() else {
            return Ok(SymFunction::zero(Basis::H, 0));
        };
        let (basis, degree) = (first.basis, first.partition.weight());
        if triples.iter().any(|t| t.basis != basis) {
            return Err(D::Error::custom("mixed bases"));
        }
        let terms = triples
            .into_iter()
            .map(|t| t.coeff.to_bigint().map(|c| (t.partition, c)))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        SymFunction::from_terms(basis, degree, terms).map_err(D::Error::custom)
    }
}
