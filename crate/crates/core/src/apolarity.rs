//! The differentiation action of `R = k[x]` on `S = k[y]` and the graded
//! objects it determines: catalecticant maps, annihilator ideals, inverse
//! systems, Hilbert functions and socles.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{monomials, Form, MatrixQ, Rational, Ring, Subspace};
use crate::level_hf::{self, HilbertFunction};

/// `u.F = u(∂/∂y) F` for `u ∈ R_j`, `F ∈ S_i`, `j <= i`.
pub fn internal_product(u: &Form, f: &Form) -> Result<Form> {
    if u.ring() != Ring::R || f.ring() != Ring::S {
        return Err(Error::AmbientMismatch(
            "internal product takes an x-form and a y-form".into(),
        ));
    }
    u.act_on(f)
}

fn check_lambda(lambda: &Subspace) -> Result<()> {
    if lambda.ring() != Ring::S {
        return Err(Error::AmbientMismatch("expected a subspace of y-forms".into()));
    }
    if lambda.is_zero() {
        return Err(Error::ZeroSubspace);
    }
    Ok(())
}

fn monomial_operator(nvars: usize, exps: &[u32]) -> Form {
    Form::monomial(nvars, Ring::R, exps, Rational::one())
}

/// Matrix of `φ_i : R_{d-i} ⊗ Λ → S_i`. Rows are indexed by pairs
/// (basis form of Λ, monomial of `R_{d-i}`), basis form major; columns by
/// the monomials of `S_i`.
pub fn catalecticant_matrix(lambda: &Subspace, i: usize) -> Result<MatrixQ> {
    check_lambda(lambda)?;
    let d = lambda.degree() as usize;
    if i > d {
        return Err(Error::OutOfRange { index: i, max: d });
    }
    let n = lambda.nvars();
    let ops = monomials(n, (d - i) as i64);
    let cols = monomials(n, i as i64).len();
    let mut rows = Vec::with_capacity(lambda.dim() * ops.len());
    for f in lambda.basis() {
        for e in ops.iter() {
            rows.push(monomial_operator(n, e).act_on(f)?.into_coeffs());
        }
    }
    Ok(MatrixQ::from_rows(cols, rows))
}

/// `Λ_i = R_{d-i}.Λ`, the degree-`i` piece of the inverse system generated
/// by Λ.
pub fn inverse_system_slice(lambda: &Subspace, i: usize) -> Result<Subspace> {
    let m = catalecticant_matrix(lambda, i)?;
    Ok(Subspace::from_vectors(lambda.nvars(), i as u32, Ring::S, m.row_vecs()))
}

/// `h_i = rank φ_i` for `0 <= i <= d`.
pub fn hilbert_function(lambda: &Subspace) -> Result<HilbertFunction> {
    check_lambda(lambda)?;
    let d = lambda.degree() as usize;
    let values = (0..=d)
        .map(|i| catalecticant_matrix(lambda, i).map(|m| m.rank() as i64))
        .collect::<Result<Vec<_>>>()?;
    HilbertFunction::new(values)
}

/// `I_j = ann(Λ)_j`. For `j > d` this is all of `R_j`.
pub fn ann_slice(lambda: &Subspace, j: usize) -> Result<Subspace> {
    check_lambda(lambda)?;
    let d = lambda.degree() as usize;
    let n = lambda.nvars();
    if j > d {
        return Ok(Subspace::full(n, j as u32, Ring::R));
    }
    let ops = monomials(n, j as i64);
    let out_len = monomials(n, (d - j) as i64).len();
    // column c holds the images of the c-th monomial operator on each F
    let images: Vec<Vec<Form>> = ops
        .iter()
        .map(|e| {
            let u = monomial_operator(n, e);
            lambda.basis().iter().map(|f| u.act_on(f)).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut m = MatrixQ::zeros(lambda.dim() * out_len, ops.len());
    for (c, per_form) in images.iter().enumerate() {
        for (k, img) in per_form.iter().enumerate() {
            for (r, x) in img.coeffs().iter().enumerate() {
                m[(k * out_len + r, c)] = x.clone();
            }
        }
    }
    Ok(Subspace::from_vectors(n, j as u32, Ring::R, m.kernel()))
}

/// `R_1 · V` for a subspace `V ⊆ R_j`.
fn times_linear(v: &Subspace) -> Subspace {
    let n = v.nvars();
    let mut gens = Vec::new();
    for g in v.basis() {
        for k in 0..n {
            let mut e = vec![0u32; n];
            e[k] = 1;
            gens.push(monomial_operator(n, &e).mul(g).into_coeffs());
        }
    }
    Subspace::from_vectors(n, v.degree() + 1, v.ring(), gens)
}

/// Forms of `candidates` extending `base` to a basis of `base + span`,
/// scanned in order.
fn complement(base: &Subspace, candidates: &[Form]) -> Vec<Form> {
    let mut acc = base.clone();
    let mut picked = Vec::new();
    for f in candidates {
        if !acc.contains(f) {
            picked.push(f.clone());
            acc = acc
                .sum(&Subspace::span(std::slice::from_ref(f)).expect("single form"))
                .expect("same ambient");
        }
    }
    picked
}

/// Minimal generators of `ann(Λ)` grouped by degree (degrees `1..=d+1`,
/// empty degrees omitted).
///
/// Degree-`j` generators are chosen as a complement of `R_1 · I_{j-1}` in
/// `I_j`, which is a minimal generating set for any number of variables.
/// For binary forms the counts are additionally checked against the
/// generator counts read off the Hilbert function.
pub fn minimal_generators(lambda: &Subspace) -> Result<Vec<(u32, Vec<Form>)>> {
    check_lambda(lambda)?;
    let d = lambda.degree() as usize;
    let n = lambda.nvars();
    let mut out = Vec::new();
    let mut prev = Subspace::zero(n, 0, Ring::R);
    for j in 1..=d + 1 {
        let ij = ann_slice(lambda, j)?;
        let lower = if j == 1 {
            Subspace::zero(n, 1, Ring::R)
        } else {
            times_linear(&prev)
        };
        let gens = complement(&lower, ij.basis());
        if !gens.is_empty() {
            out.push((j as u32, gens));
        }
        prev = ij;
    }
    if n == 2 {
        let h = hilbert_function(lambda)?;
        let e = level_hf::e_sequence(&h);
        for j in 1..=d + 1 {
            let got = out.iter().find(|(deg, _)| *deg as usize == j).map_or(0, |(_, g)| g.len());
            if got as i64 != e.e[j - 1] {
                return Err(Error::Verification(format!(
                    "found {got} generators in degree {j}, expected {}",
                    e.e[j - 1]
                )));
            }
        }
    }
    Ok(out)
}

/// Graded structure of `R/I` for an ideal given by generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SocleReport {
    /// `dim (R/I)_j` for `j = 0..=top`.
    pub hilbert: Vec<usize>,
    /// Nonzero socle dimensions as `(degree, dim)`, increasing in degree.
    pub socle: Vec<(u32, usize)>,
}

impl SocleReport {
    /// Top nonzero degree of `R/I`.
    pub fn top_degree(&self) -> usize {
        self.hilbert.len() - 1
    }

    /// Level means the socle sits in the top degree only.
    pub fn is_level(&self) -> bool {
        self.socle.len() == 1 && self.socle[0].0 as usize == self.top_degree()
    }

    pub fn level_type(&self) -> Option<(usize, usize)> {
        self.is_level().then(|| (self.socle[0].1, self.top_degree()))
    }
}

pub const DEFAULT_ARTIN_BOUND: usize = 64;

/// Socle of `R/(generators)`, with the default degree bound for detecting
/// non-artin input.
pub fn socle(generators: &[Form], nvars: usize) -> Result<SocleReport> {
    socle_with_bound(generators, nvars, DEFAULT_ARTIN_BOUND)
}

/// Graded pieces `I_0, I_1, ...` of the ideal, up to the first degree where
/// `I_j = R_j` (inclusive) or `bound`.
pub fn ideal_slices(generators: &[Form], nvars: usize, bound: usize) -> Result<Vec<Subspace>> {
    for g in generators {
        if g.ring() != Ring::R || g.nvars() != nvars {
            return Err(Error::AmbientMismatch(format!(
                "generator {g} is not an x-form in {nvars} variables"
            )));
        }
    }
    let mut slices = vec![Subspace::zero(nvars, 0, Ring::R)];
    if generators.iter().any(|g| g.degree() == 0 && !g.is_zero()) {
        slices[0] = Subspace::full(nvars, 0, Ring::R);
        return Ok(slices);
    }
    for j in 1..=bound {
        let mut space = times_linear(&slices[j - 1]);
        let new: Vec<Form> = generators.iter().filter(|g| g.degree() as usize == j).cloned().collect();
        if !new.is_empty() {
            space = space.sum(&Subspace::from_forms(nvars, j as u32, Ring::R, &new)?)?;
        }
        let full = space.dim() == space.ambient_dim();
        slices.push(space);
        if full {
            return Ok(slices);
        }
    }
    Err(Error::NotArtin(bound))
}

pub fn socle_with_bound(generators: &[Form], nvars: usize, bound: usize) -> Result<SocleReport> {
    let slices = ideal_slices(generators, nvars, bound)?;
    let top = slices.len() - 2;
    if slices[0].dim() == 1 {
        return Ok(SocleReport {
            hilbert: Vec::new(),
            socle: Vec::new(),
        });
    }
    let hilbert: Vec<usize> = slices[..=top].iter().map(|s| s.ambient_dim() - s.dim()).collect();
    let mut soc = Vec::new();
    for j in 0..=top {
        let quotient_basis = slices[j].non_pivots();
        let here = monomials(nvars, j as i64);
        let next = &slices[j + 1];
        let next_len = next.non_pivots().len();
        let mut m = MatrixQ::zeros(nvars * next_len, quotient_basis.len());
        for (c, &mi) in quotient_basis.iter().enumerate() {
            for v in 0..nvars {
                let mut e = here.exps(mi).to_vec();
                e[v] += 1;
                let prod = Form::monomial(nvars, Ring::R, &e, Rational::one());
                for (r, x) in next.quotient_coords(prod.coeffs()).into_iter().enumerate() {
                    m[(v * next_len + r, c)] = x;
                }
            }
        }
        let dim = quotient_basis.len() - m.rank();
        if dim > 0 {
            soc.push((j as u32, dim));
        }
    }
    Ok(SocleReport { hilbert, socle: soc })
}

/// Everything the inverse system Λ determines about `R/ann(Λ)`.
#[derive(Debug, Clone)]
pub struct ApolarProfile {
    pub lambda: Subspace,
    pub hilbert: HilbertFunction,
    pub generators: Vec<(u32, Vec<Form>)>,
    pub socle: Vec<(u32, usize)>,
}

pub fn apolar_profile(lambda: &Subspace) -> Result<ApolarProfile> {
    let hilbert = hilbert_function(lambda)?;
    let generators = minimal_generators(lambda)?;
    let all: Vec<Form> = generators.iter().flat_map(|(_, g)| g.iter().cloned()).collect();
    let report = socle(&all, lambda.nvars())?;
    Ok(ApolarProfile {
        lambda: lambda.clone(),
        hilbert,
        generators,
        socle: report.socle,
    })
}

/// `(I^{-1})_d` for the ideal generated by `generators`: the forms of
/// `S_d` killed by every generator of degree `<= d`.
pub fn inverse_system_top(generators: &[Form], nvars: usize, d: u32) -> Result<Subspace> {
    let n_out = monomials(nvars, d as i64).len();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for g in generators.iter().filter(|g| g.degree() <= d) {
        // rows of the map F ↦ g.F, one per output monomial
        let out = monomials(nvars, (d - g.degree()) as i64).len();
        let mut block = vec![vec![Rational::zero(); n_out]; out];
        for (c, e) in monomials(nvars, d as i64).iter().enumerate() {
            let f = Form::monomial(nvars, Ring::S, e, Rational::one());
            for (r, x) in internal_product(g, &f)?.into_coeffs().into_iter().enumerate() {
                block[r][c] = x;
            }
        }
        rows.extend(block);
    }
    let kernel = if rows.is_empty() {
        MatrixQ::identity(n_out).row_vecs()
    } else {
        MatrixQ::from_rows(n_out, rows).kernel()
    };
    Ok(Subspace::from_vectors(nvars, d, Ring::S, kernel))
}

/// `(u)^{-1}_m`: forms of degree `m` apolar to `u`. All of `S_m` when
/// `deg u > m`.
pub fn apolar_subspace(u: &Form, m: u32) -> Result<Subspace> {
    if u.ring() != Ring::R {
        return Err(Error::AmbientMismatch("apolar subspace of a y-form".into()));
    }
    if u.degree() > m {
        return Ok(Subspace::full(u.nvars(), m, Ring::S));
    }
    inverse_system_top(std::slice::from_ref(u), u.nvars(), m)
}

/// A linear factor `(a x1 + b x2)^mult` of a binary form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFactor {
    pub a: Rational,
    pub b: Rational,
    pub mult: u32,
}

impl LinearFactor {
    pub fn new(a: Rational, b: Rational, mult: u32) -> Self {
        LinearFactor { a, b, mult }
    }

    pub fn to_form(&self) -> Form {
        Form::linear_power(Ring::R, &[self.a.clone(), self.b.clone()], self.mult)
    }
}

/// Points `[a:b]` must be nonzero and pairwise non-proportional.
pub fn check_admissible(points: &[(Rational, Rational)]) -> Result<()> {
    for (i, (a, b)) in points.iter().enumerate() {
        if a.is_zero() && b.is_zero() {
            return Err(Error::Inadmissible(format!("point {i} is [0:0]")));
        }
        for (j, (c, d)) in points.iter().enumerate().skip(i + 1) {
            if (a * d - b * c).is_zero() {
                return Err(Error::Inadmissible(format!("points {i} and {j} coincide")));
            }
        }
    }
    Ok(())
}

/// Jordan's description of `(u)^{-1}_m` for `u = Π (a_i x1 + b_i x2)^{μ_i}`:
/// the span of `S_{μ_i - 1} · (b_i y1 - a_i y2)^{m - μ_i + 1}`.
pub fn jordan_apolar_basis(factors: &[LinearFactor], m: u32) -> Result<Subspace> {
    let points: Vec<(Rational, Rational)> = factors.iter().map(|f| (f.a.clone(), f.b.clone())).collect();
    check_admissible(&points)?;
    let total: u32 = factors.iter().map(|f| f.mult).sum();
    if total > m {
        return Err(Error::Degree(format!(
            "total multiplicity {total} exceeds target degree {m}"
        )));
    }
    let mut forms = Vec::new();
    for f in factors.iter().filter(|f| f.mult > 0) {
        let l = Form::linear_power(Ring::S, &[f.b.clone(), -f.a.clone()], m - f.mult + 1);
        for k in 0..f.mult {
            let mono = Form::monomial(2, Ring::S, &[k, f.mult - 1 - k], Rational::one());
            forms.push(mono.mul(&l));
        }
    }
    Ok(if forms.is_empty() {
        Subspace::zero(2, m, Ring::S)
    } else {
        Subspace::from_forms(2, m, Ring::S, &forms)?
    })
}

/// Matrix of `β_i : (R/I)_i → S_{d-i} ⊗ (R/I)_d`, `u ↦ Σ_M y^M ⊗ u x^M`,
/// in the quotient bases given by non-pivot monomials. Columns index
/// `(R/I)_i`; rows index pairs (monomial `y^M`, basis of `(R/I)_d`).
pub fn beta_matrix(lambda: &Subspace, i: usize) -> Result<MatrixQ> {
    check_lambda(lambda)?;
    let d = lambda.degree() as usize;
    if i > d {
        return Err(Error::OutOfRange { index: i, max: d });
    }
    let n = lambda.nvars();
    let ii = ann_slice(lambda, i)?;
    let id = ann_slice(lambda, d)?;
    let src = ii.non_pivots();
    let ms = monomials(n, (d - i) as i64);
    let qd = id.non_pivots().len();
    let here = monomials(n, i as i64);
    let mut m = MatrixQ::zeros(ms.len() * qd, src.len());
    for (c, &ui) in src.iter().enumerate() {
        for (k, me) in ms.iter().enumerate() {
            let e: Vec<u32> = here.exps(ui).iter().zip(me).map(|(a, b)| a + b).collect();
            let prod = Form::monomial(n, Ring::R, &e, Rational::one());
            for (r, x) in id.quotient_coords(prod.coeffs()).into_iter().enumerate() {
                m[(k * qd + r, c)] = x;
            }
        }
    }
    Ok(m)
}
