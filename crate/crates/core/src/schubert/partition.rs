use std::fmt;

use crate::error::{Error, Result};

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(k^n)`: `n` parts equal to `k`.
    pub fn rectangle(n: usize, k: u32) -> Self {
        if k == 0 {
            return Self::empty();
        }
        Partition(vec![k; n])
    }

    /// Accepts `2+2+1`, `2,2,1`, `{2,2,1}`, or `0`/empty for the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(['+', ','])
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition((1..=cols).map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32).collect())
    }

    /// At most `rows` parts, each at most `cols`.
    pub fn fits(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }

    /// Multiplicities `m_k` = number of parts equal to `k`, for `k = 1..`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0; self.part(0) as usize];
        for &p in &self.0 {
            m[p as usize - 1] += 1;
        }
        m
    }

    /// Brace notation used for Schubert classes, e.g. `{3,3}`.
    pub fn braces(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.braces())
    }
}

/// Partitions of `n` with parts `<= max_part` and at most `max_len` parts,
/// in reverse lexicographic order.
pub fn partitions(n: u32, max_part: u32, max_len: usize) -> Vec<Partition> {
    fn go(rest: u32, cap: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if cur.len() == max_len {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// Every partition inside the `rows × cols` box, by weight and then in
/// reverse lexicographic order.
pub fn partitions_in_box(rows: usize, cols: u32) -> Vec<Partition> {
    (0..=rows as u32 * cols)
        .flat_map(|n| partitions(n, cols, rows))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation() {
        let p = Partition::new(vec![4, 2, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[3, 2, 1, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
        assert!(Partition::empty().conjugate().is_empty());
    }

    #[test]
    fn parse_and_print() {
        let p = Partition::parse("2+2+1").unwrap();
        assert_eq!(p.to_string(), "2+2+1");
        assert_eq!(p.braces(), "{2,2,1}");
        assert_eq!(Partition::parse("{4,2}").unwrap().parts(), &[4, 2]);
        assert_eq!(Partition::parse("2,0").unwrap().parts(), &[2]);
        assert!(Partition::parse("1+2").is_err());
        assert!(Partition::parse("").unwrap().is_empty());
    }

    #[test]
    fn counts() {
        // p(5) = 7, of which (5) has a part > 4
        assert_eq!(partitions(5, 4, 10).len(), 6);
        assert_eq!(partitions(0, 3, 0).len(), 1);
        assert_eq!(partitions_in_box(2, 2).len(), 6);
        let p = partitions(6, 6, 6);
        assert_eq!(p.len(), 11);
        assert!(p.windows(2).all(|w| w[0] > w[1]));
    }
}
