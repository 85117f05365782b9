//! Operations O1 to O7 on distance-arrays.
//!
//! O1, O2 and O6 act at a position of an array and return the new array.
//! O3, O4, O5 and O7 close the patch and lead to the empty array; they
//! are returned as lists of applications since a terminal merge can
//! happen in several ways.

use serde::{Deserialize, Serialize};

use crate::error::OpError;
use crate::patch::{DistanceArray, MinDistanceArray};

/// One applied operation, replayable on the source node's canonical
/// representative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OpApplication {
    pub op: u8,
    /// Index in the source representative (reading start for merges).
    pub position: usize,
    /// Merge partner id, for O4, O5 and O7.
    pub partner: Option<String>,
    /// Reading of the source that lines up with the partner's minimum
    /// array is reversed.
    pub flip: bool,
    pub result: MinDistanceArray,
}

/// A closing partner: a terminal patch summarized by its minimum array.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partner {
    pub id: String,
    pub array: MinDistanceArray,
}

fn pre(ok: bool, what: &str) -> Result<(), OpError> {
    if ok {
        Ok(())
    } else {
        Err(OpError::Precondition(what.to_string()))
    }
}

fn splice(a: &DistanceArray, first: usize, remove: usize, insert: &[u8]) -> DistanceArray {
    // rotate so the replaced window starts at 0, then rebuild
    let r = a.rotate(first);
    let mut out = insert.to_vec();
    out.extend_from_slice(&r.0[remove..]);
    DistanceArray(out)
}

/// O1: a new vertex pair across the gap `i`.
pub fn apply_o1(a: &DistanceArray, i: usize) -> Result<DistanceArray, OpError> {
    let k = a.len();
    pre(k >= 4, "O1 needs k >= 4")?;
    let i = i as isize;
    pre(matches!(a.at(i), 4 | 5), "O1 needs a_i in {4,5}")?;
    pre((1..=4).contains(&a.at(i - 1)), "O1 needs a_(i-1) in 1..=4")?;
    pre((1..=4).contains(&a.at(i + 1)), "O1 needs a_(i+1) in 1..=4")?;
    let first = (i - 1).rem_euclid(k as isize) as usize;
    Ok(splice(a, first, 3, &[a.at(i - 1) + 2, 1, a.at(i + 1) + 2]))
}

/// O2: the two half-edges around gap `i` merge into one edge.
pub fn apply_o2(a: &DistanceArray, i: usize) -> Result<DistanceArray, OpError> {
    let k = a.len();
    pre(k >= 4, "O2 needs k >= 4")?;
    let i = i as isize;
    pre(matches!(a.at(i), 5 | 6), "O2 needs a_i in {5,6}")?;
    pre(a.at(i - 1) + a.at(i + 1) <= 6, "O2 needs a_(i-1) + a_(i+1) <= 6")?;
    let first = (i - 1).rem_euclid(k as isize) as usize;
    Ok(splice(a, first, 3, &[a.at(i - 1) + a.at(i + 1)]))
}

/// O3: the last two half-edges merge.
pub fn apply_o3(a: &DistanceArray) -> Result<DistanceArray, OpError> {
    pre(a.len() == 2, "O3 needs k = 2")?;
    pre(a.0.iter().all(|&x| matches!(x, 5 | 6)), "O3 needs both entries in {5,6}")?;
    Ok(DistanceArray(Vec::new()))
}

/// O6: a pentagon with a pendant vertex across gaps `j-1 ..= j+3`.
pub fn apply_o6(a: &DistanceArray, j: usize) -> Result<DistanceArray, OpError> {
    let k = a.len();
    pre(k == 12, "O6 needs k = 12")?;
    pre(a.0.iter().all(|&x| (1..=4).contains(&x)), "O6 needs all entries in 1..=4")?;
    let j = j as isize;
    for d in 0..3 {
        pre(matches!(a.at(j + d), 3 | 4), "O6 needs a_j, a_(j+1), a_(j+2) in {3,4}")?;
    }
    pre(a.at(j - 1) <= 3 && a.at(j + 3) <= 3, "O6 needs a_(j-1), a_(j+3) in 1..=3")?;
    let first = (j - 1).rem_euclid(k as isize) as usize;
    Ok(splice(a, first, 5, &[a.at(j - 1) + 3, 1, a.at(j + 3) + 3]))
}

/// Readings `(start, reversed)` of `a` that sum elementwise with `b` into
/// {5,6}, one per distinct reading sequence.
pub fn merge_ways(a: &DistanceArray, b: &[u8]) -> Vec<(usize, bool)> {
    if a.len() != b.len() {
        return Vec::new();
    }
    let mut seen: Vec<Vec<u8>> = Vec::new();
    let mut out = Vec::new();
    for (s, rev, seq) in a.readings() {
        if seq.iter().zip(b).all(|(x, y)| matches!(x + y, 5 | 6)) && !seen.contains(&seq) {
            seen.push(seq);
            out.push((s, rev));
        }
    }
    out
}

fn terminal(a: &DistanceArray, op: u8, partners: &[Partner]) -> Vec<OpApplication> {
    let mut out = Vec::new();
    for p in partners {
        for (s, rev) in merge_ways(a, p.array.entries()) {
            out.push(OpApplication { op, position: s, partner: Some(p.id.clone()), flip: rev, result: MinDistanceArray::empty() });
        }
    }
    out
}

/// O4: closing with J2.
pub fn apply_o4(a: &DistanceArray, j2: &Partner) -> Vec<OpApplication> {
    if a.len() != 8 {
        return Vec::new();
    }
    terminal(a, 4, std::slice::from_ref(j2))
}

/// O5: closing with a terminal patch of arity 10.
pub fn apply_o5(a: &DistanceArray, catalog10: &[Partner]) -> Vec<OpApplication> {
    if a.len() != 10 || !a.0.iter().all(|&x| (1..=4).contains(&x)) {
        return Vec::new();
    }
    terminal(a, 5, catalog10)
}

/// O7: closing with a terminal patch of arity 12.
pub fn apply_o7(a: &DistanceArray, catalog12: &[Partner]) -> Vec<OpApplication> {
    if a.len() != 12 || !a.0.iter().all(|&x| (1..=4).contains(&x)) {
        return Vec::new();
    }
    terminal(a, 7, catalog12)
}

/// Every application of O1 to O7 at every position of `a`.
pub fn all_applications(a: &MinDistanceArray, j2: &Partner, t10: &[Partner], t12: &[Partner]) -> Vec<OpApplication> {
    let arr = a.as_array();
    let k = arr.len();
    let mut out = Vec::new();
    let mut local = |op: u8, i: usize, r: Result<DistanceArray, OpError>| {
        if let Ok(b) = r {
            out.push(OpApplication { op, position: i, partner: None, flip: false, result: b.normalize() });
        }
    };
    for i in 0..k {
        local(1, i, apply_o1(&arr, i));
        local(2, i, apply_o2(&arr, i));
        local(6, i, apply_o6(&arr, i));
    }
    if apply_o3(&arr).is_ok() {
        out.push(OpApplication { op: 3, position: 0, partner: None, flip: false, result: MinDistanceArray::empty() });
    }
    out.extend(apply_o4(&arr, j2));
    out.extend(apply_o5(&arr, t10));
    out.extend(apply_o7(&arr, t12));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(s: &str) -> DistanceArray {
        s.parse().unwrap()
    }

    #[test]
    fn o1_examples() {
        let a = arr("[3435]");
        assert_eq!(apply_o1(&a, 1).unwrap().normalize().to_string(), "[1555]");
        let b = arr("[12223125]");
        let r = apply_o1(&b, 7).unwrap();
        assert_eq!(r.len(), 8);
        assert_eq!(r.normalize().to_string(), "[13222314]");
        assert!(matches!(apply_o1(&b, 0), Err(OpError::Precondition(_))));
    }

    #[test]
    fn o2_o3_examples() {
        let a = arr("[1555]");
        assert_eq!(apply_o2(&a, 1).unwrap().normalize().to_string(), "[56]");
        assert_eq!(apply_o3(&arr("[56]")).unwrap().len(), 0);
        assert_eq!(apply_o3(&arr("[55]")).unwrap().len(), 0);
        assert!(apply_o3(&arr("[46]")).is_err());
    }

    #[test]
    fn o6_shrinks_by_two() {
        let a = arr("[133313333333]");
        let mut any = false;
        for j in 0..12 {
            if let Ok(b) = apply_o6(&a, j) {
                any = true;
                assert_eq!(b.len(), 10);
                assert!(b.0.iter().all(|&x| x <= 6));
            }
        }
        assert!(any);
    }

    #[test]
    fn walk_61_replays() {
        let walk = [
            "[123151323135]", "[1323142315]", "[1323314315]", "[1323331515]", "[13332325]", "[13333234]",
            "[13333325]", "[13333334]", "[13333335]", "[333334]", "[153335]", "[135335]", "[3435]", "[1555]", "[56]",
        ];
        let dummy = Partner { id: "j2".into(), array: MinDistanceArray::of(&[2, 2, 2, 4, 2, 2, 2, 4]) };
        for w in walk.windows(2) {
            let from = MinDistanceArray::of(arr(w[0]).entries());
            let to = MinDistanceArray::of(arr(w[1]).entries());
            let apps = all_applications(&from, &dummy, &[], &[]);
            assert!(apps.iter().any(|a| a.result == to), "{} -> {}", w[0], w[1]);
        }
        let last = MinDistanceArray::of(&[5, 6]);
        assert!(all_applications(&last, &dummy, &[], &[]).iter().any(|a| a.op == 3));
    }
}
