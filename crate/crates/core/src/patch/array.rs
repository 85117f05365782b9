//! Distance-arrays and their canonical representatives.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::OpError;

/// Reading direction of a patch boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    /// The order in which the outer face walk meets the half-edges.
    Cw,
    Ccw,
}

/// A cyclic sequence `[a_1 ... a_k]` of gap lengths between half-edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DistanceArray(pub Vec<u8>);

/// The lexicographically smallest rotation or reversal of a distance-array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MinDistanceArray(Vec<u8>);

fn rotated(a: &[u8], start: usize, reversed: bool) -> Vec<u8> {
    let k = a.len();
    (0..k)
        .map(|i| if reversed { a[(start + k - i) % k] } else { a[(start + i) % k] })
        .collect()
}

impl DistanceArray {
    pub fn new(entries: Vec<u8>) -> Self {
        DistanceArray(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    /// Entry at a cyclic index (negative indices wrap).
    pub fn at(&self, i: isize) -> u8 {
        let k = self.0.len() as isize;
        self.0[i.rem_euclid(k) as usize]
    }

    pub fn rotate(&self, r: usize) -> DistanceArray {
        if self.0.is_empty() {
            return self.clone();
        }
        DistanceArray(rotated(&self.0, r % self.0.len(), false))
    }

    pub fn reverse(&self) -> DistanceArray {
        DistanceArray(self.0.iter().rev().copied().collect())
    }

    /// All `2k` readings: `(start, reversed, sequence)`. A reversed reading
    /// starting at `s` lists `a_{s-1}, a_{s-2}, ...`.
    pub fn readings(&self) -> Vec<(usize, bool, Vec<u8>)> {
        let k = self.0.len();
        let mut out = Vec::with_capacity(2 * k);
        for rev in [false, true] {
            for s in 0..k {
                let seq = if rev { rotated(&self.0, (s + k - 1) % k, true) } else { rotated(&self.0, s, false) };
                out.push((s, rev, seq));
            }
        }
        out
    }

    /// Distinct representatives, sorted.
    pub fn representatives(&self) -> Vec<Vec<u8>> {
        let mut reps: Vec<Vec<u8>> = self.readings().into_iter().map(|r| r.2).collect();
        reps.sort();
        reps.dedup();
        reps
    }

    pub fn normalize(&self) -> MinDistanceArray {
        if self.0.is_empty() {
            return MinDistanceArray(Vec::new());
        }
        MinDistanceArray(self.readings().into_iter().map(|r| r.2).min().unwrap())
    }

    pub fn sum(&self) -> usize {
        self.0.iter().map(|&x| x as usize).sum()
    }
}

impl MinDistanceArray {
    /// Normalizes arbitrary entries.
    pub fn of(entries: &[u8]) -> Self {
        DistanceArray(entries.to_vec()).normalize()
    }

    /// The empty array of a closed graph.
    pub fn empty() -> Self {
        MinDistanceArray(Vec::new())
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_array(&self) -> DistanceArray {
        DistanceArray(self.0.clone())
    }
}

fn write_entries(f: &mut fmt::Formatter<'_>, a: &[u8]) -> fmt::Result {
    write!(f, "[")?;
    let wide = a.iter().any(|&x| x > 9);
    for (i, x) in a.iter().enumerate() {
        if wide && i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "]")
}

impl fmt::Display for DistanceArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_entries(f, &self.0)
    }
}

impl fmt::Display for MinDistanceArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_entries(f, &self.0)
    }
}

/// Accepts `[132223]`, `132223` and comma separated forms like `[1,3,2]`.
/// A `^` marker is ignored.
impl FromStr for DistanceArray {
    type Err = OpError;

    fn from_str(s: &str) -> Result<Self, OpError> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']').replace('^', "");
        let bad = || OpError::Precondition(format!("cannot parse distance-array {s:?}"));
        let entries: Vec<u8> = if body.contains(',') {
            body.split(',').map(|t| t.trim().parse::<u8>().map_err(|_| bad())).collect::<Result<_, _>>()?
        } else {
            body.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(bad))
                .collect::<Result<_, _>>()?
        };
        Ok(DistanceArray(entries))
    }
}

impl FromStr for MinDistanceArray {
    type Err = OpError;

    fn from_str(s: &str) -> Result<Self, OpError> {
        Ok(s.parse::<DistanceArray>()?.normalize())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn da(s: &str) -> DistanceArray {
        s.parse().unwrap()
    }

    #[test]
    fn eight_readings() {
        let reps = da("3516").representatives();
        let mut want: Vec<Vec<u8>> = ["3516", "5163", "1635", "6351", "3615", "5361", "1536", "6153"]
            .iter()
            .map(|s| da(s).0)
            .collect();
        want.sort();
        assert_eq!(reps, want);
        assert_eq!(da("3516").normalize().to_string(), "[1536]");
        assert_eq!(da("11111").normalize().to_string(), "[11111]");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(da("[1,3,2]"), da("132"));
        assert_eq!(da("[2^232323]"), da("2232323"));
        assert!("[1x]".parse::<DistanceArray>().is_err());
        assert_eq!(DistanceArray(vec![10, 2]).to_string(), "[10,2]");
    }

    proptest! {
        #[test]
        fn normalize_invariant(a in proptest::collection::vec(1u8..=6, 1..=12), r in 0usize..12) {
            let a = DistanceArray(a);
            let n = a.normalize();
            prop_assert_eq!(a.rotate(r).reverse().normalize(), n.clone());
            prop_assert_eq!(n.as_array().normalize(), n.clone());
            prop_assert!(a.representatives().iter().all(|x| x.as_slice() >= n.entries()));
        }
    }
}
