//! Tangent spaces to the level strata `Le°(h)`.
//!
//! At `Λ ∈ G(t, S_d)` the tangent space of the Grassmannian is
//! `Hom(Λ, S_d/Λ)`. A map `τ` is tangent to `Le°(h)` iff for every `i`
//! the composite
//!
//! ```text
//! ker α_i → R_{d-i} ⊗ Λ --id⊗τ--> R_{d-i} ⊗ S_d/Λ --μ--> S_i/Λ_i
//! ```
//!
//! vanishes, where `α_i` is the catalecticant map onto `Λ_i`. Dually, at
//! `I_d ∈ G(N-t, R_d)` a map `ω : I_d → R_d/I_d` is tangent iff for each
//! `u ∈ I_i` the vector `(ω(u x^M))_M` lies in the image of `β_i`.
//! Both are solved as exact linear systems; for two variables the
//! dimension is `Σ e_l h_l`.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::apolarity::{ann_slice, catalecticant_matrix, hilbert_function, inverse_system_slice};
use crate::error::{Error, Result};
use crate::exact::{monomials, Form, MatrixQ, Rational, Ring, Subspace};
use crate::exec::Exec;
use crate::level_hf::{self, HilbertFunction};

#[derive(Debug, Clone)]
pub struct TangentSpace {
    pub basepoint: Subspace,
    pub dimension: usize,
    /// Each tangent vector as a `t × (N - t)` matrix: row `k` holds the
    /// image of the `k`-th basis vector in quotient coordinates.
    pub basis: Vec<MatrixQ>,
    /// Shape of the assembled constraint system.
    pub constraints: (usize, usize),
    /// False outside two variables, where no closed formula is available
    /// to check against.
    pub verified: bool,
}

/// `Σ_{l=1}^{d} e_l h_l`.
pub fn tangent_dim_formula(h: &HilbertFunction) -> i64 {
    level_hf::dim_stratum(h)
}

fn check_h(lambda: &Subspace, h: &HilbertFunction) -> Result<()> {
    let found = hilbert_function(lambda)?;
    if found != *h {
        return Err(Error::HilbertMismatch {
            expected: h.to_string(),
            found: found.to_string(),
        });
    }
    Ok(())
}

fn solve(rows: Vec<Vec<Rational>>, t: usize, q: usize, lambda: &Subspace) -> TangentSpace {
    let unknowns = t * q;
    let nrows = rows.len();
    let kernel = if rows.is_empty() {
        MatrixQ::identity(unknowns).row_vecs()
    } else {
        MatrixQ::from_rows(unknowns, rows).kernel()
    };
    let basis = kernel
        .into_iter()
        .map(|v| MatrixQ::from_rows(q, v.chunks(q.max(1)).take(t).map(<[Rational]>::to_vec).collect()))
        .collect::<Vec<_>>();
    TangentSpace {
        basepoint: lambda.clone(),
        dimension: basis.len(),
        basis,
        constraints: (nrows, unknowns),
        verified: lambda.nvars() == 2,
    }
}

/// Constraint rows contributed by index `i` in the `Hom(Λ, S_d/Λ)` model.
/// Unknown `(k, c)` is the `c`-th quotient coordinate of `τ(F_k)`.
// `r` indexes the innermost level of `w[m][c]`
#[allow(clippy::needless_range_loop)]
fn rows_for_index(lambda: &Subspace, i: usize) -> Result<Vec<Vec<Rational>>> {
    let n = lambda.nvars();
    let d = lambda.degree() as usize;
    let t = lambda.dim();
    let kernel = catalecticant_matrix(lambda, i)?.transpose().kernel();
    if kernel.is_empty() {
        return Ok(Vec::new());
    }
    let lambda_i = inverse_system_slice(lambda, i)?;
    let free = lambda.non_pivots();
    let q = free.len();
    let ops = monomials(n, (d - i) as i64);
    let top = monomials(n, d as i64);
    // w[m][c] = class of x^M . y^{free_c} in S_i/Λ_i
    let w: Vec<Vec<Vec<Rational>>> = ops
        .iter()
        .map(|e| {
            let u = Form::monomial(n, Ring::R, e, Rational::one());
            free.iter()
                .map(|&c| {
                    let y = Form::monomial(n, Ring::S, top.exps(c), Rational::one());
                    let img = u.act_on(&y)?;
                    Ok(lambda_i.quotient_coords(img.coeffs()))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let out = monomials(n, i as i64).len() - lambda_i.dim();
    let nops = ops.len();
    let mut rows = Vec::with_capacity(kernel.len() * out);
    for kappa in &kernel {
        // kernel entries are indexed like catalecticant rows: form k major, monomial m minor
        for r in 0..out {
            let mut row = vec![Rational::zero(); t * q];
            for k in 0..t {
                for m in 0..nops {
                    let coef = &kappa[k * nops + m];
                    if coef.is_zero() {
                        continue;
                    }
                    for c in 0..q {
                        let x = &w[m][c][r];
                        if !x.is_zero() {
                            row[k * q + c] += coef * x;
                        }
                    }
                }
            }
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    Ok(rows)
}

/// Tangent space to the locus cut out by the rank conditions at the given
/// indices only. With `1..d` this is the tangent space to `Le°(h)`.
pub fn tangent_space_at(lambda: &Subspace, indices: &BTreeSet<usize>, exec: Exec) -> Result<TangentSpace> {
    if lambda.ring() != Ring::S || lambda.is_zero() {
        return Err(Error::ZeroSubspace);
    }
    let d = lambda.degree() as usize;
    if let Some(&i) = indices.iter().find(|&&i| i > d) {
        return Err(Error::OutOfRange { index: i, max: d });
    }
    let idx: Vec<usize> = indices.iter().copied().collect();
    let blocks = exec.map(idx, |i| rows_for_index(lambda, i));
    let mut rows = Vec::new();
    for b in blocks {
        rows.extend(b?);
    }
    Ok(solve(rows, lambda.dim(), lambda.non_pivots().len(), lambda))
}

/// Tangent space to `Le°(h)` at `Λ`, as a subspace of `Hom(Λ, S_d/Λ)`.
pub fn tangent_space(lambda: &Subspace, h: &HilbertFunction) -> Result<TangentSpace> {
    check_h(lambda, h)?;
    let d = lambda.degree() as usize;
    tangent_space_at(lambda, &(1..d).collect(), Exec::Sequential)
}

/// The same tangent space computed on the ideal side, inside
/// `Hom(I_d, R_d/I_d)`.
pub fn tangent_space_dual(lambda: &Subspace, h: &HilbertFunction) -> Result<TangentSpace> {
    check_h(lambda, h)?;
    let n = lambda.nvars();
    let d = lambda.degree() as usize;
    let id = ann_slice(lambda, d)?;
    let g = id.dim();
    let free = id.non_pivots();
    let q = free.len();
    let mut rows = Vec::new();
    for i in 1..d {
        let ii = ann_slice(lambda, i)?;
        if ii.is_zero() {
            continue;
        }
        let ms = monomials(n, (d - i) as i64);
        let here = monomials(n, i as i64);
        let shift = |u: &Form, me: &[u32]| u.mul(&Form::monomial(n, Ring::R, me, Rational::one()));
        // B_i: columns v ∈ monomials of R_i, rows (M, r)
        let mut b = MatrixQ::zeros(ms.len() * q, here.len());
        for (col, ve) in here.iter().enumerate() {
            let v = Form::monomial(n, Ring::R, ve, Rational::one());
            for (mi, me) in ms.iter().enumerate() {
                for (r, x) in id.quotient_coords(shift(&v, me).coeffs()).into_iter().enumerate() {
                    b[(mi * q + r, col)] = x;
                }
            }
        }
        let annihilators = b.transpose().kernel();
        if annihilators.is_empty() {
            continue;
        }
        for u in ii.basis() {
            // coordinates of u x^M in the echelon basis of I_d
            let coords: Vec<Vec<Rational>> = ms.iter().map(|me| id.coordinates(shift(u, me).coeffs())).collect();
            for z in &annihilators {
                let mut row = vec![Rational::zero(); g * q];
                for (mi, cm) in coords.iter().enumerate() {
                    for (k, ck) in cm.iter().enumerate() {
                        if ck.is_zero() {
                            continue;
                        }
                        for r in 0..q {
                            let zz = &z[mi * q + r];
                            if !zz.is_zero() {
                                row[k * q + r] += ck * zz;
                            }
                        }
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let mut ts = solve(rows, g, q, lambda);
    ts.basepoint = lambda.clone();
    Ok(ts)
}

/// One line of a tangent sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepEntry {
    pub h: HilbertFunction,
    pub computed: usize,
    pub formula: i64,
}

/// Tangent dimension at the monomial Hilbert–Burch point of every level
/// function with `t <= t_max`, `t <= d <= d_max`.
pub fn tangent_sweep(t_max: usize, d_max: usize, exec: Exec) -> Result<Vec<SweepEntry>> {
    let mut all = Vec::new();
    for t in 1..=t_max {
        for d in t.max(1)..=d_max {
            all.extend(level_hf::enumerate_level_hf(t, d, Exec::Sequential));
        }
    }
    exec.map(all, |h| {
        let lambda = level_hf::burch_point(&h)?;
        let ts = tangent_space(&lambda, &h)?;
        Ok(SweepEntry {
            formula: tangent_dim_formula(&h),
            computed: ts.dimension,
            h,
        })
    })
    .into_iter()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::level_hf::{burch_point, enumerate_level_hf, minmax_hf, random_burch_point};
    use rand::{Rng, SeedableRng};

    fn hf(s: &str) -> HilbertFunction {
        HilbertFunction::parse(s).unwrap()
    }

    #[test]
    fn example_dimension() {
        let h = hf("1,2,3,4,5,5,4,3,0");
        let lambda = burch_point(&h).unwrap();
        let ts = tangent_space(&lambda, &h).unwrap();
        assert_eq!(ts.dimension, 9);
        assert_eq!(tangent_space_dual(&lambda, &h).unwrap().dimension, 9);
        assert!(ts.verified);
    }

    #[test]
    fn secant_line_stratum() {
        let h = hf("1,2,2,2,2,2,0");
        let mut rng = rand::rngs::StdRng::seed_from_u64(1);
        for _ in 0..3 {
            let lambda = random_burch_point(&h, &mut rng).unwrap();
            assert_eq!(tangent_space(&lambda, &h).unwrap().dimension, 2);
        }
        assert_eq!(tangent_space(&burch_point(&h).unwrap(), &h).unwrap().dimension, 2);
    }

    #[test]
    fn open_stratum_is_unconstrained() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(2);
        for (t, d) in [(2, 5), (3, 7), (1, 6)] {
            let (_, max, _) = minmax_hf(t, d);
            let lambda = random_burch_point(&max, &mut rng).unwrap();
            let ts = tangent_space(&lambda, &max).unwrap();
            assert_eq!(ts.dimension as i64, level_hf::grassmannian_dim(t, d));
        }
    }

    #[test]
    fn mismatch_rejected() {
        let lambda = burch_point(&hf("1,2,2,2,2,2,0")).unwrap();
        assert!(matches!(
            tangent_space(&lambda, &hf("1,2,3,3,3,2,0")),
            Err(Error::HilbertMismatch { .. })
        ));
    }

    #[test]
    fn both_models_agree_with_formula() {
        for t in 1..=3 {
            for d in t..=7 {
                for h in enumerate_level_hf(t, d, Exec::Sequential) {
                    let lambda = burch_point(&h).unwrap();
                    let a = tangent_space(&lambda, &h).unwrap().dimension as i64;
                    let b = tangent_space_dual(&lambda, &h).unwrap().dimension as i64;
                    assert_eq!((a, b), (tangent_dim_formula(&h), tangent_dim_formula(&h)), "{h}");
                }
            }
        }
    }

    #[test]
    fn tangent_vectors_satisfy_constraints() {
        // each basis map really kills ker α_i modulo Λ_i
        let h = hf("1,2,3,3,3,2,0");
        let lambda = burch_point(&h).unwrap();
        let ts = tangent_space(&lambda, &h).unwrap();
        let free = lambda.non_pivots();
        let top = monomials(2, 5);
        for tau in &ts.basis {
            let images: Vec<Form> = (0..lambda.dim())
                .map(|k| {
                    let mut v = vec![rat(0); top.len()];
                    for (c, &m) in free.iter().enumerate() {
                        v[m] = tau[(k, c)].clone();
                    }
                    Form::from_coeffs(2, 5, Ring::S, v).unwrap()
                })
                .collect();
            for i in 1..5 {
                let li = inverse_system_slice(&lambda, i).unwrap();
                let ops = monomials(2, (5 - i) as i64);
                for kappa in catalecticant_matrix(&lambda, i).unwrap().transpose().kernel() {
                    let mut acc = Form::zero(2, i as u32, Ring::S);
                    for k in 0..lambda.dim() {
                        for (m, e) in ops.iter().enumerate() {
                            let u = Form::monomial(2, Ring::R, e, kappa[k * ops.len() + m].clone());
                            acc = acc.add(&u.act_on(&images[k]).unwrap());
                        }
                    }
                    assert!(li.contains(&acc));
                }
            }
        }
    }

    #[test]
    fn dropping_indices_never_shrinks() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(4);
        for h in enumerate_level_hf(2, 6, Exec::Sequential) {
            let lambda = random_burch_point(&h, &mut rng).unwrap();
            let full: BTreeSet<usize> = (1..6).collect();
            let base = tangent_space_at(&lambda, &full, Exec::Sequential).unwrap().dimension;
            for drop in 1..6 {
                let mut s = full.clone();
                s.remove(&drop);
                let dim = tangent_space_at(&lambda, &s, Exec::Sequential).unwrap().dimension;
                assert!(dim >= base);
                assert!(dim as i64 <= level_hf::grassmannian_dim(2, 6));
            }
        }
    }

    #[test]
    fn ternary_models_agree() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(9);
        for (t, d) in [(1usize, 2u32), (1, 3), (2, 3), (1, 4)] {
            let n = monomials(3, d as i64).len();
            let vecs = (0..t).map(|_| (0..n).map(|_| rat(rng.gen_range(-2..=2))).collect()).collect();
            let lambda = Subspace::from_vectors(3, d, Ring::S, vecs);
            if lambda.dim() != t {
                continue;
            }
            let h = hilbert_function(&lambda).unwrap();
            let a = tangent_space(&lambda, &h).unwrap();
            let b = tangent_space_dual(&lambda, &h).unwrap();
            assert!(!a.verified);
            assert_eq!(a.dimension, b.dimension);
            assert!(a.dimension <= t * (n - t));
        }
    }

    #[test]
    fn sweep_parallel_matches_sequential() {
        let p = tangent_sweep(2, 6, Exec::Parallel).unwrap();
        let s = tangent_sweep(2, 6, Exec::Sequential).unwrap();
        assert_eq!(p, s);
        assert!(p.iter().all(|e| e.computed as i64 == e.formula));
    }
}
