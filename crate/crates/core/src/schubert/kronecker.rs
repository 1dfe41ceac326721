//! Characters of the symmetric group and Kronecker coefficients.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::partition::{partitions, Partition};
use crate::error::{Error, Result};
use crate::exec::Exec;

/// Weight cap applied to Kronecker computations unless the caller raises it.
pub const DEFAULT_CAP_WEIGHT: u32 = 10;

/// `χ^λ(μ)` by Murnaghan–Nakayama, peeling rim hooks of length `μ_1`,
/// `μ_2`, … on the abacus: a hook of length `k` is a bead moving from `b`
/// to an empty `b - k`, with sign given by the beads jumped over.
pub fn character(lambda: &Partition, mu: &Partition) -> i128 {
    if lambda.weight() != mu.weight() {
        return 0;
    }
    let beads: Vec<u32> = beta_set(lambda);
    let mut memo = HashMap::new();
    mn(&beads, mu.parts(), &mut memo)
}

fn beta_set(lambda: &Partition) -> Vec<u32> {
    let l = lambda.len();
    (0..l).map(|j| lambda.part(j) + (l - 1 - j) as u32).collect()
}

fn mn(beads: &[u32], hooks: &[u32], memo: &mut HashMap<(Vec<u32>, usize), i128>) -> i128 {
    let Some((&k, rest)) = hooks.split_first() else {
        return 1;
    };
    let key = (beads.to_vec(), hooks.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0i128;
    for (idx, &b) in beads.iter().enumerate() {
        if b < k || beads.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let jumped = beads.iter().filter(|&&c| c > target && c < b).count();
        let mut next = beads.to_vec();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        // trailing beads at 0,1,2,… are empty rows; dropping them keeps keys canonical
        let v = mn(&normalise(next), rest, memo);
        total += if jumped % 2 == 0 { v } else { -v };
    }
    memo.insert(key, total);
    total
}

fn normalise(mut beads: Vec<u32>) -> Vec<u32> {
    // beads sorted descending; a bead at 0 is an empty last row
    while beads.last() == Some(&0) {
        beads.pop();
        for b in &mut beads {
            *b -= 1;
        }
    }
    beads
}

/// `z_μ = Π_k k^{m_k} m_k!`, the order of the centraliser.
pub fn centraliser_order(mu: &Partition) -> i128 {
    let mut z = 1i128;
    for (k, &m) in mu.multiplicities().iter().enumerate() {
        let k = k as i128 + 1;
        for j in 1..=m as i128 {
            z *= k * j;
        }
    }
    z
}

/// Character table of `S_n`: rows and columns both indexed by
/// `partitions(n)`.
pub struct CharacterTable {
    pub n: u32,
    pub parts: Vec<Partition>,
    pub values: Vec<Vec<i128>>,
    pub z: Vec<i128>,
    index: HashMap<Partition, usize>,
}

impl CharacterTable {
    pub fn new(n: u32) -> Self {
        let parts = partitions(n, n, n as usize);
        let values = parts
            .iter()
            .map(|l| parts.iter().map(|m| character(l, m)).collect())
            .collect();
        let z = parts.iter().map(centraliser_order).collect();
        let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        CharacterTable {
            n,
            parts,
            values,
            z,
            index,
        }
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `g_{λρμ} = Σ_ν χ^λ(ν) χ^ρ(ν) χ^μ(ν) / z_ν`.
    pub fn kronecker(&self, a: usize, b: usize, c: usize) -> u64 {
        let mut order = 1i128;
        for k in 2..=self.n as i128 {
            order *= k;
        }
        let mut total = 0i128;
        for nu in 0..self.parts.len() {
            let prod = self.values[a][nu] * self.values[b][nu] * self.values[c][nu];
            if prod != 0 {
                total += prod * (order / self.z[nu]);
            }
        }
        debug_assert_eq!(total % order, 0);
        (total / order) as u64
    }
}

fn table_cache() -> &'static Mutex<HashMap<u32, std::sync::Arc<CharacterTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, std::sync::Arc<CharacterTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Shared character table of `S_n`, built once per `n`.
pub fn character_table(n: u32) -> std::sync::Arc<CharacterTable> {
    if let Some(t) = table_cache().lock().unwrap().get(&n) {
        return t.clone();
    }
    let t = std::sync::Arc::new(CharacterTable::new(n));
    table_cache().lock().unwrap().entry(n).or_insert(t).clone()
}

/// The Kronecker coefficient `g_{λρμ}`; the three partitions must have the
/// same weight, which may not exceed `cap`.
pub fn kronecker(lambda: &Partition, rho: &Partition, mu: &Partition, cap: u32) -> Result<u64> {
    let n = lambda.weight();
    if rho.weight() != n || mu.weight() != n {
        return Err(Error::WeightMismatch(format!(
            "|{}| = {n}, |{}| = {}, |{}| = {}",
            lambda.braces(),
            rho.braces(),
            rho.weight(),
            mu.braces(),
            mu.weight()
        )));
    }
    if n > cap {
        return Err(Error::CapExceeded(format!("weight {n} exceeds the cap {cap}")));
    }
    let table = character_table(n);
    let idx = |p: &Partition| table.index_of(p).expect("partition of n");
    Ok(table.kronecker(idx(lambda), idx(rho), idx(mu)))
}

/// Dvir's bound for the first row: `g_{λρμ} ≠ 0 ⇒ ρ_1 ≤ |λ ∩ μ|`, and the
/// bound is attained. Since `|λ ∩ μ| ≤ λ_1 · ℓ(μ)`, a `λ` with few columns
/// and a `μ` with few rows force a short first row in `ρ`.
pub fn dvir_bound(lambda: &Partition, mu: &Partition) -> u32 {
    (0..lambda.len().min(mu.len()))
        .map(|j| lambda.part(j).min(mu.part(j)))
        .sum()
}

/// `true` when the triple is consistent with the bound (in particular
/// whenever the coefficient vanishes).
pub fn dvir_check(lambda: &Partition, rho: &Partition, mu: &Partition, cap: u32) -> Result<bool> {
    let g = kronecker(lambda, rho, mu, cap)?;
    Ok(g == 0 || rho.part(0) <= dvir_bound(lambda, mu))
}

/// A triple violating the first-row bound, or a pair `(λ, μ)` for which
/// the bound is not attained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DvirFailure {
    Exceeds { lambda: Partition, rho: Partition, mu: Partition, coefficient: u64 },
    NotSharp { lambda: Partition, mu: Partition, max_row: u32, bound: u32 },
}

#[derive(Debug, Clone, Default)]
pub struct DvirScan {
    pub triples: usize,
    pub nonzero: usize,
    pub failures: Vec<DvirFailure>,
}

/// Every triple of each weight `1..=max_weight`: the bound must hold and,
/// for each `(λ, μ)`, be attained by some `ρ`.
pub fn dvir_scan(max_weight: u32, exec: Exec) -> DvirScan {
    let mut scan = DvirScan::default();
    for n in 1..=max_weight {
        let table = character_table(n);
        let k = table.parts.len();
        let rows = exec.map_range(k, |a| {
            let mut local = DvirScan::default();
            for c in 0..k {
                let (l, m) = (&table.parts[a], &table.parts[c]);
                let bound = dvir_bound(l, m);
                let mut max_row = 0;
                for b in 0..k {
                    local.triples += 1;
                    let g = table.kronecker(a, b, c);
                    if g == 0 {
                        continue;
                    }
                    local.nonzero += 1;
                    let r = &table.parts[b];
                    max_row = max_row.max(r.part(0));
                    if r.part(0) > bound {
                        local.failures.push(DvirFailure::Exceeds {
                            lambda: l.clone(),
                            rho: r.clone(),
                            mu: m.clone(),
                            coefficient: g,
                        });
                    }
                }
                if max_row != bound {
                    local.failures.push(DvirFailure::NotSharp {
                        lambda: l.clone(),
                        mu: m.clone(),
                        max_row,
                        bound,
                    });
                }
            }
            local
        });
        for r in rows {
            scan.triples += r.triples;
            scan.nonzero += r.nonzero;
            scan.failures.extend(r.failures);
        }
    }
    scan
}
