use std::fmt;
use std::str::FromStr;

use crate::EulerError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `A_i = M_1/(x^{i+1})`
    A,
    /// `Σ^r = M_r/M_r^2`
    Sigma,
    /// `I_{a,b} = M_2/(xy, x^a + y^b)`
    I2,
    /// `III_{a,b} = M_2/(x^a, xy, y^b)`
    III,
    /// `Σ^{2,1} = M_2/(x^2, xy^2, y^3)`
    SigmaTB21,
    Phi,
}

/// A named nilpotent algebra.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlgebraId {
    pub family: Family,
    pub params: Vec<u32>,
}

fn binom2(k: u32) -> u32 {
    k * k.saturating_sub(1) / 2
}

impl AlgebraId {
    pub fn a(i: u32) -> Self {
        AlgebraId { family: Family::A, params: vec![i] }
    }
    pub fn sigma(r: u32) -> Self {
        AlgebraId { family: Family::Sigma, params: vec![r] }
    }
    pub fn i2(a: u32, b: u32) -> Self {
        AlgebraId { family: Family::I2, params: vec![a, b] }
    }
    pub fn iii(a: u32, b: u32) -> Self {
        AlgebraId { family: Family::III, params: vec![a, b] }
    }
    pub fn sigma21() -> Self {
        AlgebraId { family: Family::SigmaTB21, params: vec![] }
    }
    pub fn phi(m: u32, r: u32) -> Self {
        AlgebraId { family: Family::Phi, params: vec![m, r] }
    }

    fn check(self) -> Result<Self, EulerError> {
        let p = &self.params;
        let ok = match self.family {
            Family::A | Family::Sigma => p.len() == 1 && p[0] >= 1,
            Family::I2 => p.len() == 2 && p[0] >= 2 && p[1] >= p[0],
            Family::III => p.len() == 2 && p[0] >= 2 && p[1] >= p[0],
            Family::SigmaTB21 => p.is_empty(),
            Family::Phi => p.len() == 2 && p[0] >= 1 && p[1] < p[0].max(1),
        };
        if ok {
            Ok(self)
        } else {
            Err(EulerError::BadAlgebra(self.to_string()))
        }
    }

    /// `dim Q`.
    pub fn mu(&self) -> usize {
        let p = &self.params;
        (match self.family {
            Family::A | Family::Sigma => p[0],
            Family::I2 => p[0] + p[1] - 1,
            Family::III => p[0] + p[1] - 2,
            Family::SigmaTB21 => 4,
            Family::Phi => p[0] + 1,
        }) as usize
    }

    /// `γ` in `codim tp_Q(l) = μ·l + γ`, where known per family.
    pub fn gamma(&self) -> Option<u32> {
        let p = &self.params;
        match self.family {
            Family::A => Some(p[0]),
            Family::Sigma => Some(p[0] * p[0]),
            Family::I2 | Family::III => Some(p[0] + p[1]),
            Family::SigmaTB21 => Some(7),
            Family::Phi => Some(binom2(p[0] + 1) + binom2(p[1] + 1) + 1),
        }
    }

    /// The algebras with shipped or synthetic Euler data used across the
    /// test suite.
    pub fn catalog() -> Vec<AlgebraId> {
        vec![
            AlgebraId::a(1),
            AlgebraId::a(2),
            AlgebraId::a(3),
            AlgebraId::i2(2, 2),
            AlgebraId::iii(2, 3),
            AlgebraId::iii(2, 4),
            AlgebraId::iii(3, 3),
            AlgebraId::i2(2, 3),
            AlgebraId::sigma21(),
        ]
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.params;
        match self.family {
            Family::A => write!(f, "A_{}", p[0]),
            Family::Sigma => write!(f, "Sigma^{}", p[0]),
            Family::I2 => write!(f, "I_{{{},{}}}", p[0], p[1]),
            Family::III => write!(f, "III_{{{},{}}}", p[0], p[1]),
            Family::SigmaTB21 => write!(f, "Sigma^{{2,1}}"),
            Family::Phi => write!(f, "Phi_{{{},{}}}", p[0], p[1]),
        }
    }
}

fn numbers(s: &str) -> Option<Vec<u32>> {
    let s = s.trim();
    let inner = s.strip_prefix('{').and_then(|t| t.strip_suffix('}')).unwrap_or(s);
    inner.split(',').map(|x| x.trim().parse().ok()).collect()
}

impl FromStr for AlgebraId {
    type Err = EulerError;

    /// `A_3`, `I_{2,3}`, `III_{2,4}`, `Sigma^{2,1}`, `Sigma^2`, `Phi_{3,1}`.
    fn from_str(src: &str) -> Result<Self, Self::Err> {
        let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || EulerError::BadAlgebra(src.to_string());
        let (head, tail) = match s.find(['_', '^']) {
            Some(k) => (&s[..k], &s[k + 1..]),
            None => return Err(bad()),
        };
        let sep = s.as_bytes()[head.len()];
        let nums = numbers(tail).ok_or_else(bad)?;
        let id = match (head, sep, nums.as_slice()) {
            ("A", b'_', [i]) => AlgebraId::a(*i),
            ("Sigma" | "Σ", b'^', [2, 1]) => AlgebraId::sigma21(),
            ("Sigma" | "Σ", b'^', [r]) => AlgebraId::sigma(*r),
            ("I", b'_', [a, b]) => AlgebraId::i2(*a, *b),
            ("III", b'_', [a, b]) => AlgebraId::iii(*a, *b),
            ("Phi" | "Φ", b'_', [m, r]) => AlgebraId::phi(*m, *r),
            _ => return Err(bad()),
        };
        id.check()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_roundtrip() {
        for s in ["A_3", "I_{2,3}", "III_{2,4}", "Sigma^{2,1}", "Sigma^2", "Phi_{3,1}"] {
            let a: AlgebraId = s.parse().unwrap();
            assert_eq!(a.to_string(), s);
        }
        assert_eq!("A_{4}".parse::<AlgebraId>().unwrap(), AlgebraId::a(4));
        assert!("B_2".parse::<AlgebraId>().is_err());
        assert!("Phi_{2,2}".parse::<AlgebraId>().is_err());
    }

    #[test]
    fn dimensions() {
        let mus: Vec<usize> = AlgebraId::catalog().iter().map(|a| a.mu()).collect();
        assert_eq!(mus, [1, 2, 3, 3, 3, 4, 4, 4, 4]);
        assert_eq!(AlgebraId::phi(3, 1).mu(), 4);
        assert_eq!(AlgebraId::phi(1, 0).gamma(), Some(2));
    }
}
