//! The Lascoux resolution of `Le(i, r)` and the first page of the
//! hypercohomology spectral sequence of its twists.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::bott::{bott, schur_dim, schur_dim_weyl, BottResult};
use super::kronecker::character_table;
use super::partition::{partitions, partitions_in_box, Partition};
use crate::error::{Error, Result};
use crate::exec::Exec;

/// Largest number of partitions in the Lascoux box we are willing to walk.
pub const MAX_BOX_PARTITIONS: u64 = 2_000_000;

/// Data `(t, d, i, r)` of a rank locus in `G(t, S_d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankData {
    pub t: usize,
    pub d: usize,
    pub i: usize,
    pub r: usize,
}

impl RankData {
    pub fn new(t: usize, d: usize, i: usize, r: usize) -> Result<Self> {
        if t == 0 || t > d + 1 {
            return Err(Error::Invalid(format!("need 1 <= t <= d+1, got t = {t}, d = {d}")));
        }
        if i > d {
            return Err(Error::Invalid(format!("need i <= d, got i = {i}")));
        }
        if r > i {
            return Err(Error::Invalid(format!("need r < i+1, got r = {r}, i = {i}")));
        }
        Ok(RankData { t, d, i, r })
    }

    /// Rank of `B ⊗ R_{d-i}`.
    pub fn e(&self) -> usize {
        self.t * (self.d - self.i + 1)
    }

    /// The expected codimension `(t(d-i+1) - r)(i+1-r)`.
    pub fn expected_codim(&self) -> usize {
        self.e().saturating_sub(self.r) * (self.i + 1 - self.r)
    }

    pub fn grassmannian_dim(&self) -> usize {
        self.t * (self.d + 1 - self.t)
    }

    /// `r - (d-i)(i-r) - t`: C2 asks for this to be `>= 0`.
    pub fn c2_slack(&self) -> i64 {
        self.r as i64 - ((self.d - self.i) * (self.i - self.r)) as i64 - self.t as i64
    }
}

/// One summand `S_λ(B ⊗ R_{d-i}) ⊗ H^ν(G', S_{λ'} Q*)` of the resolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LascouxTerm {
    pub lambda: Partition,
    pub nu: usize,
    pub p: i64,
    /// highest weight of `H^ν` as a `GL(S_i)`-module
    pub weight: Vec<i64>,
    pub schur_rank: BigInt,
    pub cohomology_dim: BigInt,
}

impl LascouxTerm {
    pub fn rank(&self) -> BigInt {
        &self.schur_rank * &self.cohomology_dim
    }
}

#[derive(Debug, Clone)]
pub struct ResolutionTable {
    pub data: RankData,
    pub terms: Vec<LascouxTerm>,
    /// `ranks[k]` is the rank of `E^{-k}`
    pub ranks: Vec<BigInt>,
}

impl ResolutionTable {
    pub fn length(&self) -> usize {
        self.ranks.len().saturating_sub(1)
    }

    /// Symmetric ranks are necessary for a Gorenstein locus.
    pub fn is_palindromic(&self) -> bool {
        self.ranks.iter().eq(self.ranks.iter().rev())
    }
}

/// `H^*(G(r, S_i), S_{λ'} Q*)`; `Q` has rank `i+1-r`, so `λ'` with more
/// rows gives the zero bundle.
fn cohomology_on_g_prime(data: &RankData, lambda: &Partition) -> Result<BottResult> {
    let q_rank = data.i + 1 - data.r;
    let conj = lambda.conjugate();
    if conj.len() > q_rank {
        return Ok(BottResult::Zero);
    }
    let alpha: Vec<i64> = (0..q_rank).map(|j| -(conj.part(q_rank - 1 - j) as i64)).collect();
    bott(&alpha, &vec![0; data.r])
}

fn box_partitions(data: &RankData) -> Result<Vec<Partition>> {
    let rows = data.e();
    let cols = data.i + 1 - data.r;
    let count = crate::exact::binomial((rows + cols) as i64, cols as i64);
    if count > BigInt::from(MAX_BOX_PARTITIONS) {
        return Err(Error::CapExceeded(format!(
            "{count} partitions in a {rows} x {cols} box"
        )));
    }
    Ok(partitions_in_box(rows, cols as u32))
}

/// All summands of the resolution, with the Schur rank computed by both
/// hook-content and Weyl as a consistency check.
pub fn lascoux_terms(data: RankData, exec: Exec) -> Result<Vec<LascouxTerm>> {
    let lambdas = box_partitions(&data)?;
    let e = data.e();
    let found = exec.map(lambdas, |lambda| -> Result<Option<LascouxTerm>> {
        let BottResult::Nonzero { degree, weight, dim } = cohomology_on_g_prime(&data, &lambda)? else {
            return Ok(None);
        };
        let schur_rank = schur_dim(&lambda, e);
        let check = schur_dim_weyl(&lambda, e);
        if schur_rank != check {
            return Err(Error::Verification(format!(
                "dim S_{}: hook-content {schur_rank} vs Weyl {check}",
                lambda.braces()
            )));
        }
        Ok(Some(LascouxTerm {
            p: degree as i64 - lambda.weight() as i64,
            nu: degree,
            lambda,
            weight,
            schur_rank,
            cohomology_dim: dim,
        }))
    });
    let mut terms = Vec::new();
    for t in found {
        if let Some(t) = t? {
            terms.push(t);
        }
    }
    Ok(terms)
}

pub fn lascoux_ranks(data: RankData, exec: Exec) -> Result<ResolutionTable> {
    let terms = lascoux_terms(data, exec)?;
    let mut ranks: Vec<BigInt> = Vec::new();
    for term in &terms {
        if term.p > 0 {
            return Err(Error::Verification(format!(
                "term {} sits in positive degree {}",
                term.lambda.braces(),
                term.p
            )));
        }
        let k = (-term.p) as usize;
        if ranks.len() <= k {
            ranks.resize(k + 1, BigInt::zero());
        }
        ranks[k] += term.rank();
    }
    Ok(ResolutionTable { data, terms, ranks })
}

/// `E_1^{p,q} = H^q(G(t, S_d), E^p(m))`, keyed by `(p, q)`; zero entries are
/// omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct E1Table {
    pub data: RankData,
    pub m: i64,
    pub entries: BTreeMap<(i64, usize), BigInt>,
    /// Summands skipped for exceeding the weight cap; the table is partial
    /// unless this is empty.
    pub truncated: Vec<Partition>,
}

impl E1Table {
    pub fn get(&self, p: i64, q: usize) -> BigInt {
        self.entries.get(&(p, q)).cloned().unwrap_or_default()
    }

    pub fn is_complete(&self) -> bool {
        self.truncated.is_empty()
    }

    pub fn rows_used(&self) -> Vec<usize> {
        let mut q: Vec<usize> = self.entries.keys().map(|k| k.1).collect();
        q.sort_unstable();
        q.dedup();
        q
    }
}

/// Splits each `S_λ(B ⊗ R_{d-i})` as `⊕ C_{λρμ} S_ρ B ⊗ S_μ R_{d-i}` and
/// applies Bott to `S_ρ B ⊗ O(m)`, i.e. to `γ = (m^{d-t+1}; ρ)`. Summands
/// with `|λ| > cap` are skipped and listed in `truncated`.
pub fn e1_table(data: RankData, m: i64, cap: u32, exec: Exec) -> Result<E1Table> {
    let (terms, skipped): (Vec<_>, Vec<_>) = lascoux_terms(data, exec)?
        .into_iter()
        .partition(|t| t.lambda.weight() <= cap);
    let truncated = skipped.into_iter().map(|t| t.lambda).collect();
    let (t, n) = (data.t, data.d + 1);
    let w = data.d - data.i + 1;
    let alpha = vec![m; n - t];
    let pieces = exec.map_ref(&terms, |term| -> Result<Vec<((i64, usize), BigInt)>> {
        let size = term.lambda.weight();
        let table = character_table(size);
        let a = table.index_of(&term.lambda).expect("partition of its weight");
        let mut out = Vec::new();
        for rho in partitions(size, size, t) {
            let beta: Vec<i64> = (0..t).map(|j| rho.part(j) as i64).collect();
            let BottResult::Nonzero { degree, dim, .. } = bott(&alpha, &beta)? else {
                continue;
            };
            let b = table.index_of(&rho).unwrap();
            let mut mult = BigInt::zero();
            for mu in partitions(size, size, w) {
                let g = table.kronecker(a, b, table.index_of(&mu).unwrap());
                if g != 0 {
                    mult += BigInt::from(g) * schur_dim(&mu, w);
                }
            }
            if !mult.is_zero() {
                out.push(((term.p, degree), mult * &dim * &term.cohomology_dim));
            }
        }
        Ok(out)
    });
    let mut entries = BTreeMap::new();
    for piece in pieces {
        for (k, v) in piece? {
            *entries.entry(k).or_insert_with(BigInt::zero) += v;
        }
    }
    entries.retain(|_, v: &mut BigInt| !v.is_zero());
    Ok(E1Table {
        data,
        m,
        entries,
        truncated,
    })
}

/// The vanishing pattern expected of `E_1`: for `m >= 0` only row `q = 0`
/// (given C2); for `m < 0` only row `q = dim G` (given `t = 1` or strict
/// C2). Returns `None` when the hypothesis for this `m` does not hold.
pub fn expected_row(data: &RankData, m: i64) -> Option<usize> {
    let slack = data.c2_slack();
    if m >= 0 {
        (slack >= 0).then_some(0)
    } else {
        (data.t == 1 || slack > 0).then_some(data.grassmannian_dim())
    }
}

/// `Some(true)` if every nonzero entry sits in the expected row; `None` if
/// the hypothesis fails or the table is partial.
pub fn check_vanishing(table: &E1Table) -> Option<bool> {
    if !table.is_complete() {
        return None;
    }
    let row = expected_row(&table.data, table.m)?;
    Some(table.entries.keys().all(|&(_, q)| q == row))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(t: usize, d: usize, i: usize, r: usize) -> RankData {
        RankData::new(t, d, i, r).unwrap()
    }

    #[test]
    fn gorenstein_ranks() {
        let table = lascoux_ranks(data(2, 7, 5, 4), Exec::Sequential).unwrap();
        let ranks: Vec<i64> = table.ranks.iter().map(|r| r.try_into().unwrap()).collect();
        assert_eq!(ranks, vec![1, 36, 70, 36, 1]);
        assert!(table.is_palindromic());
        let hook = table
            .terms
            .iter()
            .find(|t| t.lambda == Partition::rectangle(5, 1))
            .unwrap();
        assert_eq!((hook.nu, hook.p), (4, -1));
        assert_eq!(hook.rank(), BigInt::from(36));
    }

    #[test]
    fn codimension_one_is_a_hypersurface() {
        // square catalecticant: a single determinant, E^{-1} = det
        let d = data(2, 4, 3, 3);
        assert_eq!(d.expected_codim(), 1);
        let table = lascoux_ranks(d, Exec::Sequential).unwrap();
        let ranks: Vec<i64> = table.ranks.iter().map(|r| r.try_into().unwrap()).collect();
        assert_eq!(ranks, vec![1, 1]);
    }

    #[test]
    fn resolution_length_is_the_expected_codim() {
        for (t, d, i, r) in [(1, 6, 3, 2), (1, 8, 4, 3), (2, 7, 5, 4), (2, 6, 4, 3), (3, 10, 8, 7)] {
            let rd = data(t, d, i, r);
            let table = lascoux_ranks(rd, Exec::Sequential).unwrap();
            assert_eq!(table.length(), rd.expected_codim(), "{rd:?}");
            assert_eq!(table.ranks[0], BigInt::from(1));
        }
    }

    #[test]
    fn kronecker_split_preserves_rank() {
        // Σ C_{λρμ} dim S_ρ(k^t) dim S_μ(k^w) = dim S_λ(k^{tw})
        let (t, w) = (2usize, 3usize);
        for n in 1..=7u32 {
            let table = character_table(n);
            for lambda in partitions(n, n, t * w) {
                let a = table.index_of(&lambda).unwrap();
                let mut total = BigInt::zero();
                for rho in partitions(n, n, t) {
                    for mu in partitions(n, n, w) {
                        let g = table.kronecker(a, table.index_of(&rho).unwrap(), table.index_of(&mu).unwrap());
                        total += BigInt::from(g) * schur_dim(&rho, t) * schur_dim(&mu, w);
                    }
                }
                assert_eq!(total, schur_dim(&lambda, t * w), "{lambda:?}");
            }
        }
    }

    #[test]
    fn e1_vanishing_for_rational_normal_curves() {
        // t = 1 forces r = i once C2 holds; both vanishing patterns apply
        for rd in [data(1, 8, 3, 3), data(1, 9, 4, 4)] {
            assert!(rd.c2_slack() > 0);
            for m in -4..=2 {
                let table = e1_table(rd, m, 12, Exec::Sequential).unwrap();
                assert_eq!(check_vanishing(&table), Some(true), "{rd:?} m = {m}: {:?}", table.entries);
            }
        }
        let rd = data(1, 8, 3, 3);
        // m = 0: H^0(O_G) is one-dimensional and comes from E^0 alone
        let t0 = e1_table(rd, 0, 12, Exec::Sequential).unwrap();
        assert_eq!(t0.get(0, 0), BigInt::from(1));
    }

    #[test]
    fn negative_twist_lives_in_the_top_row() {
        // Le(2,2) for t = 1, d = 4 is the cubic secant hypersurface in P^4:
        // E^0 = O, E^{-1} = O(-3), and h^4(P^4, O(k)) = binom(-k-1, 4)
        let rd = data(1, 4, 2, 2);
        let top = rd.grassmannian_dim();
        assert_eq!(top, 4);
        for (m, e0, e1) in [(-1i64, 0, 0), (-2, 0, 1), (-5, 1, 35), (-6, 5, 70)] {
            let table = e1_table(rd, m, 10, Exec::Sequential).unwrap();
            assert!(table.is_complete());
            assert_eq!(table.get(0, top), BigInt::from(e0), "m = {m}");
            assert_eq!(table.get(-1, top), BigInt::from(e1), "m = {m}");
            assert_eq!(table.entries.len(), (e0 > 0) as usize + (e1 > 0) as usize);
            assert_eq!(check_vanishing(&table), Some(true));
        }
    }

    #[test]
    fn cap_truncates_visibly() {
        let table = e1_table(data(2, 7, 5, 4), 0, 10, Exec::Sequential).unwrap();
        assert!(!table.is_complete());
        assert!(table.truncated.iter().all(|l| l.weight() > 10));
        assert_eq!(check_vanishing(&table), None);
    }
}
