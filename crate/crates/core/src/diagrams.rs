//! Partitions, Young diagrams and box-counting ("boxterpretation") functions.
//!
//! Boxes are addressed as `(row, column)`, both 1-based, in English notation:
//! row 1 is the top row. A box is *North* of another when its row index is
//! strictly smaller (any column); *north* also allows the same row. East/east,
//! West/west and South/south are defined likewise. `dN` ("directly North")
//! restricts North to the same column.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::sign::Sign;

/// A box `(row, column)`, 1-based.
pub type Cell = (usize, usize);

/// A partition, stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition; trailing zeros are dropped, anything else must be
    /// weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Wraps parts already known to be weakly decreasing and positive.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0));
        Partition(parts)
    }

    /// The one-row partition `(k)`.
    pub fn row(k: u32) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition(vec![k])
        }
    }

    /// The one-column partition `(1^k)`.
    pub fn column(k: u32) -> Self {
        Partition(vec![1; k as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Length of the first row (0 for the empty partition).
    pub fn width(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Part `i`, 1-based; zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n`; `None` if there are more than `n` parts.
    pub fn padded(&self, n: usize) -> Option<Vec<u32>> {
        if self.len() > n {
            return None;
        }
        let mut v = self.0.clone();
        v.resize(n, 0);
        Some(v)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.width() as usize;
        let parts = (1..=width).map(|j| self.0.iter().filter(|&&p| p as usize >= j).count() as u32).collect();
        Partition(parts)
    }

    /// Componentwise containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// All boxes in reading order (top row first, left to right).
    pub fn cells(&self) -> Vec<Cell> {
        self.0.iter().enumerate().flat_map(|(r, &len)| (1..=len as usize).map(move |c| (r + 1, c))).collect()
    }

    pub fn box_count(&self, spec: &BoxCountSpec) -> Result<u64> {
        box_count(self, spec)
    }

    /// `N(λ)`: boxes strictly above, summed over boxes.
    pub fn n(&self) -> u64 {
        count_cells(&self.cells(), Direction::N)
    }

    /// `dN(λ)`: boxes directly above, summed over boxes.
    pub fn dn(&self) -> u64 {
        count_cells(&self.cells(), Direction::DN)
    }

    /// `NE(λ)`.
    pub fn ne(&self) -> u64 {
        count_cells(&self.cells(), Direction::NE)
    }

    /// `NW(λ)`.
    pub fn nw(&self) -> u64 {
        count_cells(&self.cells(), Direction::NW)
    }

    /// `ε_λ = (-1)^{dN(λ)}`.
    pub fn eps(&self) -> Sign {
        eps(self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition must look like [3,2,1], got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|e| Error::Parse(format!("bad part {p:?} in {s:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// A skew shape `outer / inner` with `inner ⊆ outer`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer: outer.to_string(), inner: inner.to_string() });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> u32 {
        self.outer.weight() - self.inner.weight()
    }

    /// Boxes of `outer ∖ inner`, top row first, left to right.
    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.outer.len())
            .flat_map(|r| {
                let lo = self.inner.part(r) as usize;
                let hi = self.outer.part(r) as usize;
                (lo + 1..=hi).map(move |c| (r, c))
            })
            .collect()
    }

    /// Number of boxes in row `r` (1-based).
    pub fn row_len(&self, r: usize) -> u32 {
        self.outer.part(r) - self.inner.part(r)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// Direction part of a box count.
///
/// Capital letters are strict, lowercase letters include the same row or
/// column. Single letters constrain one axis only. `d*` means directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    N,
    S,
    E,
    W,
    NE,
    NW,
    SE,
    SW,
    LowerNE, // nE
    LowerNW, // nW
    LowerSE, // sE
    LowerSW, // sW
    NLowerE, // Ne
    NLowerW, // Nw
    SLowerE, // Se
    SLowerW, // Sw
    DN,
    DS,
    DE,
    DW,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Axis {
    Any,
    Strict(i8),
    Weak(i8),
    Same,
}

impl Axis {
    fn admits(self, d: isize) -> bool {
        match self {
            Axis::Any => true,
            Axis::Same => d == 0,
            Axis::Strict(s) => d.signum() == s as isize,
            Axis::Weak(s) => d == 0 || d.signum() == s as isize,
        }
    }
}

impl Direction {
    pub const ALL: [Direction; 20] = [
        Direction::N,
        Direction::S,
        Direction::E,
        Direction::W,
        Direction::NE,
        Direction::NW,
        Direction::SE,
        Direction::SW,
        Direction::LowerNE,
        Direction::LowerNW,
        Direction::LowerSE,
        Direction::LowerSW,
        Direction::NLowerE,
        Direction::NLowerW,
        Direction::SLowerE,
        Direction::SLowerW,
        Direction::DN,
        Direction::DS,
        Direction::DE,
        Direction::DW,
    ];

    // Row axis: -1 is North (smaller row index). Column axis: +1 is East.
    fn axes(self) -> (Axis, Axis) {
        use Axis::*;
        match self {
            Direction::N => (Strict(-1), Any),
            Direction::S => (Strict(1), Any),
            Direction::E => (Any, Strict(1)),
            Direction::W => (Any, Strict(-1)),
            Direction::NE => (Strict(-1), Strict(1)),
            Direction::NW => (Strict(-1), Strict(-1)),
            Direction::SE => (Strict(1), Strict(1)),
            Direction::SW => (Strict(1), Strict(-1)),
            Direction::LowerNE => (Weak(-1), Strict(1)),
            Direction::LowerNW => (Weak(-1), Strict(-1)),
            Direction::LowerSE => (Weak(1), Strict(1)),
            Direction::LowerSW => (Weak(1), Strict(-1)),
            Direction::NLowerE => (Strict(-1), Weak(1)),
            Direction::NLowerW => (Strict(-1), Weak(-1)),
            Direction::SLowerE => (Strict(1), Weak(1)),
            Direction::SLowerW => (Strict(1), Weak(-1)),
            Direction::DN => (Strict(-1), Same),
            Direction::DS => (Strict(1), Same),
            Direction::DE => (Same, Strict(1)),
            Direction::DW => (Same, Strict(-1)),
        }
    }

    /// Whether `other` lies in this direction as seen from `from`.
    pub fn relates(self, from: Cell, other: Cell) -> bool {
        if from == other {
            return false;
        }
        let (rows, cols) = self.axes();
        rows.admits(other.0 as isize - from.0 as isize) && cols.admits(other.1 as isize - from.1 as isize)
    }

    pub fn name(self) -> &'static str {
        match self {
            Direction::N => "N",
            Direction::S => "S",
            Direction::E => "E",
            Direction::W => "W",
            Direction::NE => "NE",
            Direction::NW => "NW",
            Direction::SE => "SE",
            Direction::SW => "SW",
            Direction::LowerNE => "nE",
            Direction::LowerNW => "nW",
            Direction::LowerSE => "sE",
            Direction::LowerSW => "sW",
            Direction::NLowerE => "Ne",
            Direction::NLowerW => "Nw",
            Direction::SLowerE => "Se",
            Direction::SLowerW => "Sw",
            Direction::DN => "dN",
            Direction::DS => "dS",
            Direction::DE => "dE",
            Direction::DW => "dW",
        }
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Direction::ALL
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown direction {s:?}")))
    }
}

/// Entry comparison used by decorated counts: the counted box's entry is
/// compared against the entry of the box being evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Comparator {
    Lt,
    Le,
    Gt,
    Ge,
}

impl Comparator {
    pub fn holds<T: Ord>(self, other: T, base: T) -> bool {
        match self {
            Comparator::Lt => other < base,
            Comparator::Le => other <= base,
            Comparator::Gt => other > base,
            Comparator::Ge => other >= base,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Comparator::Lt => "<",
            Comparator::Le => "<=",
            Comparator::Gt => ">",
            Comparator::Ge => ">=",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoxCountSpec {
    pub direction: Direction,
    pub comparator: Option<Comparator>,
}

impl BoxCountSpec {
    pub const fn plain(direction: Direction) -> Self {
        BoxCountSpec { direction, comparator: None }
    }

    pub const fn decorated(direction: Direction, comparator: Comparator) -> Self {
        BoxCountSpec { direction, comparator: Some(comparator) }
    }
}

impl fmt::Display for BoxCountSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.direction.name())?;
        if let Some(c) = self.comparator {
            write!(f, "^{}", c.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for BoxCountSpec {
    type Err = Error;

    /// Accepts `dN`, `E^>`, `N^<=` and so on.
    fn from_str(s: &str) -> Result<Self> {
        let (dir, cmp) = match s.split_once('^') {
            Some((d, c)) => (d, Some(c)),
            None => (s, None),
        };
        let comparator = match cmp {
            None => None,
            Some("<") => Some(Comparator::Lt),
            Some("<=") => Some(Comparator::Le),
            Some(">") => Some(Comparator::Gt),
            Some(">=") => Some(Comparator::Ge),
            Some(other) => return Err(Error::Parse(format!("unknown comparator {other:?}"))),
        };
        Ok(BoxCountSpec { direction: dir.parse()?, comparator })
    }
}

pub(crate) fn count_cells(cells: &[Cell], direction: Direction) -> u64 {
    cells.iter().map(|&b| cells.iter().filter(|&&o| direction.relates(b, o)).count() as u64).sum()
}

/// Undecorated box count on a diagram. A comparator needs entries, so it is rejected here.
pub fn box_count(shape: &Partition, spec: &BoxCountSpec) -> Result<u64> {
    if spec.comparator.is_some() {
        return Err(Error::DecoratedCountNeedsTableau);
    }
    Ok(count_cells(&shape.cells(), spec.direction))
}

pub fn transpose(lambda: &Partition) -> Partition {
    lambda.transpose()
}

/// `ε_λ = (-1)^{dN(λ)}`.
pub fn eps(lambda: &Partition) -> Sign {
    Sign::from_parity(lambda.dn())
}

/// `sign(T_λ) = (-1)^{N(λ)}`.
pub fn sign_t_lambda(lambda: &Partition) -> Sign {
    Sign::from_parity(lambda.n())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StripType {
    Horizontal,
    Vertical,
    Both,
    Neither,
}

impl StripType {
    pub fn is_horizontal(self) -> bool {
        matches!(self, StripType::Horizontal | StripType::Both)
    }

    pub fn is_vertical(self) -> bool {
        matches!(self, StripType::Vertical | StripType::Both)
    }
}

pub fn strip_type(shape: &SkewShape) -> StripType {
    let cells = shape.cells();
    let shares = |same: fn(&Cell, &Cell) -> bool| {
        cells.iter().enumerate().any(|(i, a)| cells[i + 1..].iter().any(|b| same(a, b)))
    };
    let column_clash = shares(|a, b| a.1 == b.1);
    let row_clash = shares(|a, b| a.0 == b.0);
    match (column_clash, row_clash) {
        (false, false) => StripType::Both,
        (false, true) => StripType::Horizontal,
        (true, false) => StripType::Vertical,
        (true, true) => StripType::Neither,
    }
}

/// The four truncations of a diagram at index `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Truncations {
    /// `i/λ`: rows 1 through `i` removed.
    pub below: Partition,
    /// `λ/i`: rows `i` through the bottom removed.
    pub above: Partition,
    /// `i|λ`: columns 1 through `i` removed.
    pub right: Partition,
    /// `λ|i`: columns `i` through the rightmost removed.
    pub left: Partition,
}

pub fn row_col_truncations(lambda: &Partition, i: usize) -> Truncations {
    let parts = lambda.parts();
    let below = Partition(parts.iter().skip(i).copied().collect());
    let above = Partition(parts.iter().take(i.saturating_sub(1)).copied().collect());
    let i32_ = i as u32;
    let right = Partition(parts.iter().map(|&p| p.saturating_sub(i32_)).filter(|&p| p > 0).collect());
    let left = Partition(parts.iter().map(|&p| p.min(i32_.saturating_sub(1))).filter(|&p| p > 0).collect());
    Truncations { below, above, right, left }
}

/// `|i/λ|`: boxes strictly below row `i`.
pub fn size_below_row(lambda: &Partition, i: usize) -> u32 {
    lambda.parts().iter().skip(i).sum()
}

/// `|λ/i|`: boxes strictly above row `i`.
pub fn size_above_row(lambda: &Partition, i: usize) -> u32 {
    lambda.parts().iter().take(i.saturating_sub(1)).sum()
}

/// `|i|λ|`: boxes strictly right of column `i`.
pub fn size_right_of_column(lambda: &Partition, i: usize) -> u32 {
    lambda.parts().iter().map(|&p| p.saturating_sub(i as u32)).sum()
}

/// All partitions of `k` within the bounds, descending lexicographic order.
pub fn enumerate_partitions(k: u32, max_height: Option<usize>, max_width: Option<u32>) -> Vec<Partition> {
    fn go(remaining: u32, cap: u32, height_left: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        if height_left == 0 {
            return;
        }
        for p in (1..=cap.min(remaining)).rev() {
            current.push(p);
            go(remaining - p, p, height_left - 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(k, max_width.unwrap_or(k), max_height.unwrap_or(usize::MAX), &mut Vec::new(), &mut out);
    out
}

/// Partitions of every size up to `max_weight`, smallest size first.
pub fn partitions_up_to(max_weight: u32) -> Vec<Partition> {
    (0..=max_weight).flat_map(|k| enumerate_partitions(k, None, None)).collect()
}
