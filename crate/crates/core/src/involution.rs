//! Involutions of `{0, .., n-1}`, the set `W_{n,2}`.
//!
//! Internally indices are 0-based; `from_one_line`/`to_one_line` speak the
//! usual 1-based one-line notation (`"3 2 1"` is the transposition `(1 3)` in S_3).

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Involution {
    map: Vec<usize>,
}

impl Involution {
    /// Validates that `map` is a permutation squaring to the identity.
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = alloc::vec![false; n];
        for &j in &map {
            if j >= n || seen[j] {
                return Err(Error::Structure(alloc::format!(
                    "{map:?} is not a permutation"
                )));
            }
            seen[j] = true;
        }
        if (0..n).any(|i| map[map[i]] != i) {
            return Err(Error::NotInvolution(map));
        }
        Ok(Involution { map })
    }

    pub fn identity(n: usize) -> Self {
        Involution {
            map: (0..n).collect(),
        }
    }

    /// Builds an involution from disjoint 2-cycles (0-based).
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut map: Vec<usize> = (0..n).collect();
        for &(i, j) in pairs {
            if i >= n || j >= n || map[i] != i || map[j] != j || i == j {
                return Err(Error::Structure(alloc::format!("bad pair ({i}, {j})")));
            }
            map[i] = j;
            map[j] = i;
        }
        Ok(Involution { map })
    }

    /// Parses 1-based one-line notation, e.g. `"3 2 1"`.
    pub fn from_one_line(text: &str) -> Result<Self> {
        let mut map = Vec::new();
        for tok in text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
        {
            let v: usize = tok
                .parse()
                .map_err(|_| Error::Parse(alloc::format!("bad permutation entry {tok:?}")))?;
            if v == 0 {
                return Err(Error::Parse("one-line notation is 1-based".into()));
            }
            map.push(v - 1);
        }
        Involution::new(map)
    }

    pub fn to_one_line(&self) -> Vec<usize> {
        self.map.iter().map(|&j| j + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.map[i] == i).collect()
    }

    /// 2-cycles `(i, w(i))` with `i < w(i)`.
    pub fn two_cycles(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter(|&i| i < self.map[i])
            .map(|i| (i, self.map[i]))
            .collect()
    }

    /// All involutions of `{0..n-1}` in lexicographic order of their one-line form.
    pub fn all(n: usize) -> Vec<Involution> {
        let mut out = Vec::new();
        let mut map = alloc::vec![usize::MAX; n];
        fill(&mut map, 0, &mut out);
        out.sort();
        out
    }
}

fn fill(map: &mut Vec<usize>, start: usize, out: &mut Vec<Involution>) {
    let n = map.len();
    let Some(i) = (start..n).find(|&i| map[i] == usize::MAX) else {
        out.push(Involution { map: map.clone() });
        return;
    };
    map[i] = i;
    fill(map, i + 1, out);
    for j in i + 1..n {
        if map[j] == usize::MAX {
            map[i] = j;
            map[j] = i;
            fill(map, i + 1, out);
            map[j] = usize::MAX;
        }
    }
    map[i] = usize::MAX;
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.two_cycles();
        if cycles.is_empty() {
            return f.write_str("id");
        }
        let mut s = String::new();
        for (i, j) in cycles {
            s.push_str(&alloc::format!("({} {})", i + 1, j + 1));
        }
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_telephone_numbers() {
        let counts: Vec<usize> = (0..8).map(|n| Involution::all(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 10, 26, 76, 232]);
    }

    #[test]
    fn every_enumerated_map_is_an_involution() {
        for w in Involution::all(5) {
            assert!(Involution::new(w.as_slice().to_vec()).is_ok());
        }
    }

    #[test]
    fn rejects_non_involutions() {
        assert!(matches!(
            Involution::new(alloc::vec![1, 2, 0]),
            Err(Error::NotInvolution(_))
        ));
        assert!(Involution::new(alloc::vec![0, 0]).is_err());
        assert!(Involution::from_one_line("0 1").is_err());
    }

    #[test]
    fn one_line_round_trip() {
        let w = Involution::from_one_line("3 2 1").unwrap();
        assert_eq!(w.two_cycles(), [(0, 2)]);
        assert_eq!(w.fixed_points(), [1]);
        assert_eq!(w.to_one_line(), [3, 2, 1]);
        assert_eq!(alloc::format!("{w}"), "(1 3)");
    }
}
