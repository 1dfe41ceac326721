//! Borel–Weil–Bott on Grassmannians and dimensions of Schur functors.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::partition::Partition;
use crate::error::{Error, Result};

/// Cohomology of a homogeneous bundle `S_α Q ⊗ S_β B` on `G(k, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BottResult {
    /// All cohomology vanishes: `γ + ρ` has a repeated entry.
    Zero,
    /// Cohomology is concentrated in `degree` and equals `S_weight V`.
    Nonzero {
        degree: usize,
        weight: Vec<i64>,
        dim: BigInt,
    },
}

impl BottResult {
    pub fn is_zero(&self) -> bool {
        matches!(self, BottResult::Zero)
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            BottResult::Zero => None,
            BottResult::Nonzero { degree, .. } => Some(*degree),
        }
    }

    pub fn dim(&self) -> BigInt {
        match self {
            BottResult::Zero => BigInt::zero(),
            BottResult::Nonzero { dim, .. } => dim.clone(),
        }
    }
}

/// Runs Bott's algorithm on the concatenated weight `γ = (α; β)`, where `α`
/// (length `n-k`) indexes the Schur functor of the quotient and `β`
/// (length `k`) that of the sub-bundle. Both blocks must be weakly
/// decreasing.
pub fn bott(alpha: &[i64], beta: &[i64]) -> Result<BottResult> {
    for (name, w) in [("quotient", alpha), ("sub-bundle", beta)] {
        if w.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::Invalid(format!("{name} weight {w:?} is not weakly decreasing")));
        }
    }
    let gamma: Vec<i64> = alpha.iter().chain(beta).copied().collect();
    Ok(bott_weight(&gamma))
}

/// Bott's algorithm on a raw weight of `GL(n)`: add `ρ = (n, …, 1)`; a repeat
/// kills everything, otherwise the number of inversions is the degree and
/// sorting then subtracting `ρ` gives the highest weight.
pub fn bott_weight(gamma: &[i64]) -> BottResult {
    let n = gamma.len();
    let shifted: Vec<i64> = gamma.iter().enumerate().map(|(j, g)| g + (n - j) as i64).collect();
    let mut inversions = 0;
    for a in 0..n {
        for b in a + 1..n {
            match shifted[a].cmp(&shifted[b]) {
                std::cmp::Ordering::Equal => return BottResult::Zero,
                std::cmp::Ordering::Less => inversions += 1,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    let mut sorted = shifted;
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let weight: Vec<i64> = sorted.iter().enumerate().map(|(j, s)| s - (n - j) as i64).collect();
    let dim = weyl_dim(&weight);
    BottResult::Nonzero {
        degree: inversions,
        weight,
        dim,
    }
}

/// Weyl's dimension formula for a dominant weight of `GL(n)`:
/// `Π_{i<j} (δ_i - δ_j + j - i) / (j - i)`.
pub fn weyl_dim(delta: &[i64]) -> BigInt {
    let n = delta.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= delta[i] - delta[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    num / den
}

/// `dim S_λ(k^n)` by the hook-content formula.
pub fn schur_dim(lambda: &Partition, n: usize) -> BigInt {
    if lambda.len() > n {
        return BigInt::zero();
    }
    let conj = lambda.conjugate();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (r, &len) in lambda.parts().iter().enumerate() {
        for c in 0..len as usize {
            let content = c as i64 - r as i64;
            let hook = (len as usize - c - 1) + (conj.part(c) as usize - r - 1) + 1;
            num *= n as i64 + content;
            den *= hook as i64;
        }
    }
    num / den
}

/// `dim S_λ(k^n)` by Weyl's formula on `λ` padded to length `n`.
pub fn schur_dim_weyl(lambda: &Partition, n: usize) -> BigInt {
    if lambda.len() > n {
        return BigInt::zero();
    }
    let delta: Vec<i64> = (0..n).map(|j| lambda.part(j) as i64).collect();
    weyl_dim(&delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schubert::partition::partitions;

    fn dim_of(r: &BottResult) -> i64 {
        r.dim().try_into().unwrap()
    }

    #[test]
    fn projective_line() {
        // G(1,2) = P^1, B = O(-1), Q = O(1)
        for m in -6i64..=6 {
            let r = bott(&[m], &[0]).unwrap();
            match m {
                m if m >= 0 => {
                    assert_eq!(r.degree(), Some(0));
                    assert_eq!(dim_of(&r), m + 1);
                }
                -1 => assert!(r.is_zero()),
                m => {
                    assert_eq!(r.degree(), Some(1));
                    assert_eq!(dim_of(&r), -m - 1);
                }
            }
        }
    }

    #[test]
    fn projective_space_line_bundles() {
        // G(1,4) = P^3: O(m) = det Q^m
        for m in -8i64..=5 {
            let r = bott(&[m, m, m], &[0]).unwrap();
            let expect = if m >= 0 {
                Some((0, (m + 1) * (m + 2) * (m + 3) / 6))
            } else if m <= -4 {
                let k = -m - 4;
                Some((3, (k + 1) * (k + 2) * (k + 3) / 6))
            } else {
                None
            };
            match expect {
                None => assert!(r.is_zero(), "m = {m}"),
                Some((deg, dim)) => {
                    assert_eq!(r.degree(), Some(deg), "m = {m}");
                    assert_eq!(dim_of(&r), dim, "m = {m}");
                }
            }
        }
    }

    #[test]
    fn tautological_bundles() {
        // on G(2,5): H^0(Q) = V, B has no cohomology, H^0(B*) = V*
        let q = bott(&[1, 0, 0], &[0, 0]).unwrap();
        assert_eq!((q.degree(), dim_of(&q)), (Some(0), 5));
        assert!(bott(&[0, 0, 0], &[1, 0]).unwrap().is_zero());
        let bd = bott(&[0, 0, 0], &[0, -1]).unwrap();
        assert_eq!((bd.degree(), dim_of(&bd)), (Some(0), 5));
        assert!(bott(&[0, 1, 0], &[0, 0]).is_err());
    }

    #[test]
    fn hook_content_agrees_with_weyl() {
        for n in 0..=9u32 {
            for lambda in partitions(n, n, n as usize) {
                for rank in 1..=7 {
                    assert_eq!(schur_dim(&lambda, rank), schur_dim_weyl(&lambda, rank), "{lambda:?} {rank}");
                }
            }
        }
        assert_eq!(schur_dim(&Partition::parse("1,1,1,1,1").unwrap(), 6), BigInt::from(6));
        assert_eq!(schur_dim(&Partition::parse("2").unwrap(), 3), BigInt::from(6));
    }
}
