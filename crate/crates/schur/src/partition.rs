use std::fmt;
use std::str::FromStr;

/// Weakly decreasing positive parts; trailing zeros are dropped.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("parts are not weakly decreasing: {0:?}")]
    NotDecreasing(Vec<i64>),
    #[error("negative part in {0:?}")]
    Negative(Vec<i64>),
    #[error("cannot parse partition '{0}'")]
    Syntax(String),
}

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts.iter().map(|&x| x as i64).collect()));
        }
        Ok(Self::trimmed(parts))
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_multiset(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::trimmed(parts)
    }

    fn trimmed(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn from_signed(parts: &[i64]) -> Result<Self, PartitionError> {
        if parts.iter().any(|&x| x < 0) {
            return Err(PartitionError::Negative(parts.to_vec()));
        }
        Self::new(parts.iter().map(|&x| x as u32).collect())
    }

    /// `a^b` repeated: `rect(a, b) = (a, …, a)` with `b` parts.
    pub fn rect(a: u32, b: usize) -> Self {
        Self::trimmed(vec![a; b])
    }

    pub fn staircase(s: u32) -> Self {
        Partition((1..=s).rev().collect())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition((0..first).map(|i| self.0.iter().filter(|&&x| x > i).count() as u32).collect())
    }

    /// `self ⊵ other` in dominance order (equal weights assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Parts padded with zeros to length `m`, as signed integers.
    pub fn padded(&self, m: usize) -> Vec<i64> {
        (0..m.max(self.len())).map(|i| self.part(i) as i64).collect()
    }
}

/// Partitions of `d` with at most `max_len` parts, in decreasing
/// lexicographic order.
pub fn partitions(d: u32, max_len: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: u32, max_part: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if cur.len() == max_len {
            return;
        }
        for k in (1..=rest.min(max_part)).rev() {
            cur.push(k);
            rec(rest - k, k, max_len, cur, out);
            cur.pop();
        }
    }
    rec(d, d, max_len.unwrap_or(usize::MAX), &mut cur, &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `3,3,3,1`, `3^3,1`, an empty string, or `()`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let bad = || PartitionError::Syntax(s.to_string());
        let mut parts = Vec::new();
        for item in t.split(',') {
            let item = item.trim();
            match item.split_once('^') {
                Some((a, b)) => {
                    let a: u32 = a.trim().parse().map_err(|_| bad())?;
                    let b: usize = b.trim().parse().map_err(|_| bad())?;
                    parts.extend(std::iter::repeat_n(a, b));
                }
                None => parts.push(item.parse().map_err(|_| bad())?),
            }
        }
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_and_staircase() {
        let p: Partition = "3,1".parse().unwrap();
        assert_eq!(p.conjugate(), "2,1,1".parse().unwrap());
        assert_eq!(Partition::staircase(3), "3,2,1".parse().unwrap());
        assert_eq!("3^3,1".parse::<Partition>().unwrap().parts(), &[3, 3, 3, 1]);
        assert_eq!("2,0".parse::<Partition>().unwrap().parts(), &[2]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..10).map(|d| partitions(d, None).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        assert_eq!(partitions(6, Some(2)).len(), 4);
    }

    #[test]
    fn dominance() {
        let a: Partition = "3,1".parse().unwrap();
        let b: Partition = "2,2".parse().unwrap();
        assert!(a.dominates(&b));
        assert!(!b.dominates(&a));
    }
}
