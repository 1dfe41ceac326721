//! Level Hilbert functions of graded artin quotients of `k[x1, x2]`.
//!
//! A sequence `h_0..h_d` with `h_0 = 1`, `h_d = t` is the Hilbert function
//! of a level algebra of type `(t, d)` exactly when it is concave,
//! `2 h_i >= h_{i-1} + h_{i+1}` with `h_{-1} = h_{d+1} = 0`. Such sequences
//! are in bijection with partitions of `d - t + 1` into parts `<= t + 1`,
//! and each one is realised by a monomial Hilbert–Burch ideal.

use std::fmt;

use num_traits::One;
use rand::Rng;

use crate::apolarity::{hilbert_function, inverse_system_top};
use crate::error::{Error, Result};
use crate::exact::{rat, Form, Rational, Ring, Subspace};
use crate::exec::Exec;
use crate::schubert::partition::{partitions, Partition};

/// `h_0, ..., h_d`; values outside `0..=d` are zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HilbertFunction(Vec<i64>);

impl HilbertFunction {
    /// Requires `h_0 = 1`, `h_d > 0` and no negative values.
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.first() != Some(&1) {
            return Err(Error::MalformedHilbert("h_0 must be 1".into()));
        }
        if values.iter().any(|&h| h < 0) {
            return Err(Error::MalformedHilbert("negative value".into()));
        }
        if *values.last().expect("nonempty") == 0 {
            return Err(Error::MalformedHilbert("h_d = t must be positive".into()));
        }
        Ok(HilbertFunction(values))
    }

    /// Comma list; a single trailing `0` (the value `h_{d+1}`) is optional.
    pub fn parse(s: &str) -> Result<Self> {
        let mut values = s
            .split(',')
            .map(|v| {
                v.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::MalformedHilbert(format!("bad entry {v:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if values.len() > 1 && values.last() == Some(&0) {
            values.pop();
        }
        Self::new(values)
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn d(&self) -> usize {
        self.0.len() - 1
    }

    pub fn t(&self) -> usize {
        self.0[self.d()] as usize
    }

    pub fn get(&self, i: i64) -> i64 {
        if i < 0 {
            0
        } else {
            self.0.get(i as usize).copied().unwrap_or(0)
        }
    }

    /// Componentwise `self <= other` (same `d`).
    pub fn dominated_by(&self, other: &HilbertFunction) -> bool {
        self.d() == other.d() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.0 {
            write!(f, "{v},")?;
        }
        write!(f, "0")
    }
}

impl fmt::Debug for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// First index `i` in `0..=d` where `2 h_i < h_{i-1} + h_{i+1}`, if any.
pub fn concavity_failure(h: &HilbertFunction) -> Option<usize> {
    (0..=h.d()).find(|&i| {
        let i = i as i64;
        2 * h.get(i) < h.get(i - 1) + h.get(i + 1)
    })
}

pub fn is_level_hf(h: &HilbertFunction) -> bool {
    concavity_failure(h).is_none()
}

pub fn check_level(h: &HilbertFunction) -> Result<()> {
    match concavity_failure(h) {
        Some(i) => Err(Error::NotLevel(i)),
        None => Ok(()),
    }
}

/// Generator counts of a level ideal in two variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenProfile {
    /// `e[j - 1]` = number of minimal generators of degree `j`, `j = 1..=d+1`.
    pub e: Vec<i64>,
    /// Generator degrees `q_1 <= ... <= q_{t+1}`.
    pub q: Vec<u32>,
}

impl GenProfile {
    pub fn e_at(&self, j: usize) -> i64 {
        if j == 0 {
            0
        } else {
            self.e.get(j - 1).copied().unwrap_or(0)
        }
    }
}

/// `e_{i+1} = 2 h_i - h_{i-1} - h_{i+1}`. Meaningful for level `h`.
pub fn e_sequence(h: &HilbertFunction) -> GenProfile {
    let e: Vec<i64> = (0..=h.d() as i64)
        .map(|i| 2 * h.get(i) - h.get(i - 1) - h.get(i + 1))
        .collect();
    let q = e
        .iter()
        .enumerate()
        .flat_map(|(k, &n)| std::iter::repeat_n(k as u32 + 1, n.max(0) as usize))
        .collect();
    GenProfile { e, q }
}

/// The monomial Hilbert–Burch matrix: `M[i][i] = x1^(d+2-q_i)`,
/// `M[i][i+1] = x2^(d+2-q_{i+1})`, zero elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurchMatrix {
    pub t: usize,
    /// Exponents of the diagonal `x1` powers.
    pub diag: Vec<u32>,
    /// Exponents of the superdiagonal `x2` powers.
    pub superdiag: Vec<u32>,
}

impl BurchMatrix {
    pub fn entry(&self, i: usize, j: usize) -> Option<Form> {
        let one = Rational::one();
        if j == i {
            Some(Form::monomial(2, Ring::R, &[self.diag[i], 0], one))
        } else if j == i + 1 {
            Some(Form::monomial(2, Ring::R, &[0, self.superdiag[i]], one))
        } else {
            None
        }
    }

    /// The maximal minor deleting column `j`: `x1^(Σ_{k<j} a_k) x2^(Σ_{k>=j} b_k)`.
    pub fn minor(&self, j: usize) -> Form {
        let a: u32 = self.diag[..j].iter().sum();
        let b: u32 = self.superdiag[j..].iter().sum();
        Form::monomial(2, Ring::R, &[a, b], Rational::one())
    }

    pub fn rows_text(&self) -> Vec<String> {
        (0..self.t)
            .map(|i| {
                let cells: Vec<String> = (0..=self.t)
                    .map(|j| self.entry(i, j).map_or("0".into(), |f| f.to_string()))
                    .collect();
                format!("[{}]", cells.join(", "))
            })
            .collect()
    }
}

/// The monomial Hilbert–Burch matrix of `h` and its maximal minors, in
/// order of the `q` sequence.
pub fn burch_ideal(h: &HilbertFunction) -> Result<(BurchMatrix, Vec<Form>)> {
    check_level(h)?;
    let t = h.t();
    let d = h.d() as u32;
    let q = e_sequence(h).q;
    debug_assert_eq!(q.len(), t + 1);
    let m = BurchMatrix {
        t,
        diag: q[..t].iter().map(|&qi| d + 2 - qi).collect(),
        superdiag: q[1..].iter().map(|&qi| d + 2 - qi).collect(),
    };
    let gens = (0..=t).map(|j| m.minor(j)).collect();
    Ok((m, gens))
}

/// `Λ = (I^{-1})_d` for the monomial Hilbert–Burch ideal of `h`.
pub fn burch_point(h: &HilbertFunction) -> Result<Subspace> {
    let (_, gens) = burch_ideal(h)?;
    inverse_system_top(&gens, 2, h.d() as u32)
}

fn random_form(rng: &mut impl Rng, degree: u32) -> Form {
    let coeffs = (0..=degree).map(|_| rat(rng.gen_range(-5..=5))).collect();
    Form::from_coeffs(2, degree, Ring::R, coeffs).expect("length matches")
}

/// Determinant of a square matrix of forms by Laplace expansion along the
/// first row. Entries in a column share a degree.
fn form_det(m: &[Vec<Form>]) -> Form {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc: Option<Form> = None;
    for j in 0..n {
        let sub: Vec<Vec<Form>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, f)| f.clone()).collect())
            .collect();
        let mut term = m[0][j].mul(&form_det(&sub));
        if j % 2 == 1 {
            term = term.scale(&-Rational::one());
        }
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
    }
    acc.expect("nonempty")
}

/// Maximal minors of a `t × (t+1)` matrix of forms; minor `j` deletes column `j`.
pub fn maximal_minors(m: &[Vec<Form>]) -> Vec<Form> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| {
            let sub: Vec<Vec<Form>> = m
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, f)| f.clone()).collect())
                .collect();
            form_det(&sub)
        })
        .collect()
}

/// A random point of the stratum of `h`: the inverse system of the
/// maximal minors of a random Hilbert–Burch matrix whose column `j` has
/// entries of degree `d + 2 - q_j`. Resamples until the Hilbert function
/// is exactly `h`.
pub fn random_burch_point(h: &HilbertFunction, rng: &mut impl Rng) -> Result<Subspace> {
    check_level(h)?;
    let t = h.t();
    let d = h.d() as u32;
    let q = e_sequence(h).q;
    for _ in 0..64 {
        let m: Vec<Vec<Form>> = (0..t)
            .map(|_| q.iter().map(|&qj| random_form(rng, d + 2 - qj)).collect())
            .collect();
        let gens = maximal_minors(&m);
        if gens.iter().any(Form::is_zero) {
            continue;
        }
        let lambda = inverse_system_top(&gens, 2, d)?;
        if lambda.dim() == t && hilbert_function(&lambda)? == *h {
            return Ok(lambda);
        }
    }
    Err(Error::Verification(format!("no random point found for {h}")))
}

/// `μ_i = h_i - h_{i+1} + 1` for `i = 0..d-1`, listed as `(μ_{d-1}, ..., μ_0)`.
pub fn partition_from_hf(h: &HilbertFunction) -> Result<Partition> {
    check_level(h)?;
    let d = h.d() as i64;
    let parts = (0..d).rev().map(|i| (h.get(i) - h.get(i + 1) + 1) as u32).collect();
    Partition::new(parts)
}

pub fn hf_from_partition(mu: &Partition, t: usize, d: usize) -> Result<HilbertFunction> {
    if t == 0 || t > d + 1 {
        return Err(Error::InvalidPartition(format!("type ({t},{d}) needs 1 <= t <= d+1")));
    }
    let n = (d + 1 - t) as u32;
    if mu.weight() != n {
        return Err(Error::InvalidPartition(format!("{mu} is not a partition of {n}")));
    }
    if mu.part(0) > t as u32 + 1 {
        return Err(Error::InvalidPartition(format!("{mu} has a part exceeding {}", t + 1)));
    }
    if mu.len() > d {
        return Err(Error::InvalidPartition(format!("{mu} has more than {d} parts")));
    }
    let mut values = vec![1i64];
    for i in 0..d {
        let mu_i = mu.part(d - 1 - i) as i64;
        values.push(values[i] - mu_i + 1);
    }
    HilbertFunction::new(values)
}

/// All level Hilbert functions of type `(t, d)`, in increasing
/// lexicographic order.
pub fn enumerate_level_hf(t: usize, d: usize, exec: Exec) -> Vec<HilbertFunction> {
    if t == 0 || t > d + 1 {
        return Vec::new();
    }
    let parts = partitions((d + 1 - t) as u32, t as u32 + 1, d);
    let mut out: Vec<HilbertFunction> = exec
        .map(parts, |mu| hf_from_partition(&mu, t, d).expect("bijection"));
    out.sort();
    out
}

/// `dim Le°(h) = Σ_{i=1}^{d} e_i h_i`.
pub fn dim_stratum(h: &HilbertFunction) -> i64 {
    let g = e_sequence(h);
    (1..=h.d()).map(|i| g.e_at(i) * h.get(i as i64)).sum()
}

/// `t (d - t + 1)`.
pub fn grassmannian_dim(t: usize, d: usize) -> i64 {
    (t * (d + 1 - t)) as i64
}

/// The minimal and maximal level functions of type `(t, d)` and
/// `s_0 = ⌈t(d+1)/(t+1)⌉`.
pub fn minmax_hf(t: usize, d: usize) -> (HilbertFunction, HilbertFunction, usize) {
    let min = (0..=d).map(|i| (i as i64 + 1).min(t as i64)).collect();
    let max = (0..=d)
        .map(|i| (i as i64 + 1).min((d - i + 1) as i64 * t as i64))
        .collect();
    let s0 = (t * (d + 1)).div_ceil(t + 1);
    (
        HilbertFunction::new(min).expect("valid"),
        HilbertFunction::new(max).expect("valid"),
        s0,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apolarity::{minimal_generators, socle};
    use rand::SeedableRng;

    fn hf(s: &str) -> HilbertFunction {
        HilbertFunction::parse(s).unwrap()
    }

    #[test]
    fn parse_print() {
        let h = hf("1,2,3,4,5,5,4,3,0");
        assert_eq!((h.t(), h.d()), (3, 7));
        assert_eq!(h.to_string(), "1,2,3,4,5,5,4,3,0");
        assert_eq!(hf("1,2,3,4,5,5,4,3"), h);
        assert!(HilbertFunction::parse("2,3,0").is_err());
        assert!(HilbertFunction::parse("1,2,x").is_err());
    }

    #[test]
    fn concavity() {
        assert!(is_level_hf(&hf("1,2,3,4,5,5,4,3,0")));
        assert_eq!(concavity_failure(&hf("1,2,2,3,3,0")), Some(2));
        assert!(is_level_hf(&hf("1,2,3,4,4,2,0")));
        assert!(matches!(check_level(&hf("1,3,0")), Err(Error::NotLevel(0))));
    }

    #[test]
    fn example_profile() {
        let g = e_sequence(&hf("1,2,3,4,5,5,4,3,0"));
        assert_eq!(g.e, vec![0, 0, 0, 0, 1, 1, 0, 2]);
        assert_eq!(g.q, vec![5, 6, 8, 8]);
        let g = e_sequence(&hf("1,2,2,2,2,2,0"));
        assert_eq!((g.e_at(2), g.e_at(6)), (1, 2));
        assert_eq!(g.e.iter().sum::<i64>(), 3);
    }

    #[test]
    fn minimal_function_profile() {
        for t in 1..=4usize {
            for d in t..=9 {
                let (min, _, _) = minmax_hf(t, d);
                let g = e_sequence(&min);
                let mut q = vec![t as u32];
                q.extend(std::iter::repeat_n(d as u32 + 1, t));
                if t == d + 1 {
                    continue;
                }
                assert_eq!(g.q, q, "({t},{d})");
                assert_eq!(dim_stratum(&min), t as i64);
            }
        }
    }

    #[test]
    fn example_burch_matrix() {
        let (m, gens) = burch_ideal(&hf("1,2,3,4,5,5,4,3,0")).unwrap();
        assert_eq!(
            m.rows_text(),
            vec!["[x1^4, x2^3, 0, 0]", "[0, x1^3, x2, 0]", "[0, 0, x1, x2]"]
        );
        let text: Vec<String> = gens.iter().map(ToString::to_string).collect();
        assert_eq!(text, vec!["x2^5", "x1^4*x2^2", "x1^7*x2", "x1^8"]);
    }

    #[test]
    fn monomial_minors_match_laplace() {
        let (m, gens) = burch_ideal(&hf("1,2,3,4,4,3,2,0")).unwrap();
        let dense: Vec<Vec<Form>> = (0..m.t)
            .map(|i| {
                (0..=m.t)
                    .map(|j| {
                        m.entry(i, j).unwrap_or_else(|| {
                            // zero entries still carry the column degree
                            let deg = if j == 0 { m.diag[0] } else { m.superdiag[j - 1] };
                            Form::zero(2, deg, Ring::R)
                        })
                    })
                    .collect()
            })
            .collect();
        assert_eq!(maximal_minors(&dense), gens);
    }

    #[test]
    fn gorenstein_complete_intersection() {
        for d in 1..=9usize {
            for h in enumerate_level_hf(1, d, Exec::Sequential) {
                let (_, gens) = burch_ideal(&h).unwrap();
                assert_eq!(gens.len(), 2);
                let a = gens[0].degree();
                assert_eq!(gens[1].degree(), d as u32 + 2 - a);
                let lambda = burch_point(&h).unwrap();
                assert_eq!(hilbert_function(&lambda).unwrap(), h);
            }
        }
    }

    #[test]
    fn burch_round_trip_exhaustive() {
        for t in 1..=3 {
            for d in t..=9 {
                for h in enumerate_level_hf(t, d, Exec::default()) {
                    let (_, gens) = burch_ideal(&h).unwrap();
                    let lambda = inverse_system_top(&gens, 2, d as u32).unwrap();
                    assert_eq!(hilbert_function(&lambda).unwrap(), h);
                    let r = socle(&gens, 2).unwrap();
                    assert_eq!(r.socle, vec![(d as u32, t)]);
                }
            }
        }
    }

    #[test]
    fn random_points_have_right_generators() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(17);
        for t in 1..=4 {
            for d in [t, t + 2, 10] {
                for h in enumerate_level_hf(t, d, Exec::default()).into_iter().step_by(3) {
                    let lambda = random_burch_point(&h, &mut rng).unwrap();
                    let degs: Vec<u32> = minimal_generators(&lambda)
                        .unwrap()
                        .iter()
                        .flat_map(|(k, g)| std::iter::repeat_n(*k, g.len()))
                        .collect();
                    assert_eq!(degs, e_sequence(&h).q);
                }
            }
        }
    }

    #[test]
    fn partition_bijection() {
        let h = hf("1,2,3,4,5,5,4,3,0");
        let mu = partition_from_hf(&h).unwrap();
        assert_eq!(mu.to_string(), "2+2+1");
        assert_eq!(hf_from_partition(&mu, 3, 7).unwrap(), h);
        let (_, max, _) = minmax_hf(4, 3);
        assert!(partition_from_hf(&max).unwrap().is_empty());
        assert_eq!(hf_from_partition(&Partition::empty(), 4, 3).unwrap(), max);
        assert!(hf_from_partition(&Partition::parse("5").unwrap(), 3, 7).is_err());
        assert!(hf_from_partition(&Partition::parse("3+1").unwrap(), 3, 7).is_err());
    }

    #[test]
    fn bijection_composites_are_identities() {
        for t in 1..=5usize {
            for d in (t.max(2) - 1)..=10 {
                for mu in partitions((d + 1 - t) as u32, t as u32 + 1, d) {
                    let h = hf_from_partition(&mu, t, d).unwrap();
                    assert!(is_level_hf(&h));
                    assert_eq!(partition_from_hf(&h).unwrap(), mu);
                }
            }
        }
    }

    #[test]
    fn two_five_list() {
        let all: Vec<String> = enumerate_level_hf(2, 5, Exec::Sequential).iter().map(ToString::to_string).collect();
        assert_eq!(
            all,
            vec!["1,2,2,2,2,2,0", "1,2,3,3,3,2,0", "1,2,3,4,3,2,0", "1,2,3,4,4,2,0"]
        );
        let dims: Vec<i64> = enumerate_level_hf(2, 5, Exec::Sequential).iter().map(dim_stratum).collect();
        assert_eq!(dims, vec![2, 5, 6, 8]);
    }

    #[test]
    fn gorenstein_count() {
        for d in 1..=12usize {
            let all = enumerate_level_hf(1, d, Exec::Sequential);
            assert_eq!(all.len(), (d + 1).div_ceil(2));
        }
    }

    #[test]
    fn max_function_fills_grassmannian() {
        for t in 1..=5 {
            for d in (t - 1).max(1)..=12 {
                let (_, max, _) = minmax_hf(t, d);
                assert!(is_level_hf(&max));
                assert_eq!(dim_stratum(&max), grassmannian_dim(t, d));
                for h in enumerate_level_hf(t, d, Exec::Sequential) {
                    assert!(h.dominated_by(&max));
                }
            }
        }
    }

    #[test]
    fn s0_values() {
        assert_eq!(minmax_hf(2, 7).2, 6);
        for d in 1..=10 {
            assert_eq!(minmax_hf(1, d).2, (d + 1).div_ceil(2));
        }
    }

    #[test]
    fn example_dim() {
        assert_eq!(dim_stratum(&hf("1,2,3,4,5,5,4,3,0")), 9);
    }
}
