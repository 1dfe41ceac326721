//! Components of the rank loci `Le(i, r) = { h_i <= r }` and the two
//! numerical conditions under which they resolve nicely.

use super::lascoux::RankData;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::level_hf::{check_level, dim_stratum, enumerate_level_hf, HilbertFunction};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub h: HilbertFunction,
    pub dim: i64,
    pub codim: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub data: RankData,
    /// `(t(d-i+1) - r)(i+1-r)`
    pub bound: i64,
    pub candidates: Vec<Candidate>,
    pub c1: bool,
    pub c2: bool,
    pub c2_strict: bool,
    pub witness: Option<HilbertFunction>,
}

/// Level functions of type `(t, d)` with `h_i <= r` that are maximal under
/// componentwise comparison; their strata closures are the candidate
/// components. Sorted by dimension, then by decreasing `h`.
pub fn candidate_components(data: RankData, exec: Exec) -> Vec<Candidate> {
    let all: Vec<HilbertFunction> = enumerate_level_hf(data.t, data.d, exec)
        .into_iter()
        .filter(|h| h.get(data.i as i64) <= data.r as i64)
        .collect();
    let gdim = data.grassmannian_dim() as i64;
    let maximal = exec.map_ref(&all, |h| {
        let dominated = all.iter().any(|g| g != h && h.dominated_by(g));
        (!dominated).then(|| {
            let dim = dim_stratum(h);
            Candidate {
                h: h.clone(),
                dim,
                codim: gdim - dim,
            }
        })
    });
    let mut out: Vec<Candidate> = maximal.into_iter().flatten().collect();
    out.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| b.h.cmp(&a.h)));
    out
}

/// The level function exhibiting C2: `h_j = j+1` below `i`, then
/// `min(r - (j-i)(i-r), t(d-j+1))`. It exists only when also
/// `i <= t(d-i+2)`: otherwise no level function has `h_{i-1} = i`.
pub fn c2_witness(data: RankData) -> Result<HilbertFunction> {
    let (t, d, i, r) = (data.t as i64, data.d as i64, data.i as i64, data.r as i64);
    let values = (0..=d)
        .map(|j| {
            if j < i {
                j + 1
            } else {
                (r - (j - i) * (i - r)).min(t * (d - j + 1))
            }
        })
        .collect();
    let h = HilbertFunction::new(values)?;
    check_level(&h)?;
    if h.t() != data.t || h.get(i - 1) != i || h.get(i) > r {
        return Err(Error::NoWitness(format!("{h} does not exhibit C2 for {data:?}")));
    }
    Ok(h)
}

pub fn c1_c2_analysis(data: RankData, exec: Exec) -> Result<ComponentReport> {
    let candidates = candidate_components(data, exec);
    if candidates.is_empty() {
        return Err(Error::NoWitness(format!(
            "no level function of type ({},{}) has h_{} <= {}",
            data.t, data.d, data.i, data.r
        )));
    }
    let bound = data.expected_codim() as i64;
    let slack = data.c2_slack();
    let c2 = slack >= 0;
    let witness = if c2 { c2_witness(data).ok() } else { None };
    Ok(ComponentReport {
        c1: candidates.iter().all(|c| c.codim == bound),
        c2,
        c2_strict: slack > 0,
        witness,
        bound,
        candidates,
        data,
    })
}

/// Direct form of the C2 lemma: C2 holds iff some level function of type
/// `(t, d)` has `h_{i-1} = i` and `h_i <= r`.
pub fn c2_by_search(data: RankData, exec: Exec) -> bool {
    data.i >= 1
        && enumerate_level_hf(data.t, data.d, exec)
            .iter()
            .any(|h| h.get(data.i as i64 - 1) == data.i as i64 && h.get(data.i as i64) <= data.r as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(t: usize, d: usize, i: usize, r: usize) -> RankData {
        RankData::new(t, d, i, r).unwrap()
    }

    fn hf(s: &str) -> HilbertFunction {
        HilbertFunction::parse(s).unwrap()
    }

    #[test]
    fn two_equidimensional_components() {
        let rep = c1_c2_analysis(data(2, 7, 5, 4), Exec::Sequential).unwrap();
        let hs: Vec<_> = rep.candidates.iter().map(|c| c.h.clone()).collect();
        assert_eq!(hs, vec![hf("1,2,3,4,5,4,3,2"), hf("1,2,3,4,4,4,4,2")]);
        assert!(rep.candidates.iter().all(|c| c.codim == 4));
        assert!(rep.c1 && rep.c2 && !rep.c2_strict);
    }

    #[test]
    fn c1_fails_with_an_oversized_component() {
        let rep = c1_c2_analysis(data(3, 14, 11, 9), Exec::Sequential).unwrap();
        let dims: Vec<i64> = rep.candidates.iter().map(|c| c.dim).collect();
        assert_eq!(dims, vec![27, 27, 28]);
        assert!(!rep.c1 && rep.c2);
        assert_eq!(rep.candidates[2].h, hf("1,2,3,4,5,6,7,8,9,10,10,9,8,6,3"));
    }

    #[test]
    fn witness_matches_search() {
        for t in 1..=3 {
            for d in t..=9 {
                for i in 1..=d {
                    for r in 0..=i {
                        let rd = data(t, d, i, r);
                        let search = c2_by_search(rd, Exec::Sequential);
                        let reachable = i <= t * (d - i + 2);
                        assert_eq!(search, rd.c2_slack() >= 0 && reachable, "{rd:?}");
                        if !reachable {
                            assert!(c2_witness(rd).is_err());
                        }
                        if search {
                            let w = c2_witness(rd).unwrap();
                            assert_eq!(w.get(i as i64 - 1), i as i64);
                            assert!(w.get(i as i64) <= r as i64);
                        }
                    }
                }
            }
        }
    }
}
