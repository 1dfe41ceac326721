//! Secant planes to the rational normal curve `C_d ⊂ P S_d`, generalized
//! additive decompositions and the simultaneous Waring problem for binary
//! forms.
//!
//! A secant `(q-1)`-plane is always carried by its apolar form
//! `u ∈ R_q`: the plane is `P((u)^{-1}_d)`. Nothing here needs the roots
//! of `u`, so all computations stay over the rationals.

use std::fmt;

use num_traits::{One, Zero};

use crate::apolarity::{ann_slice, apolar_subspace, check_admissible, hilbert_function, minimal_generators};
use crate::error::{Error, Result};
use crate::exact::{binomial, Form, MatrixQ, Rational, Ring, Subspace};
use crate::level_hf::{self, HilbertFunction};

/// The secant plane `P((u)^{-1}_d)` of projective dimension `deg u - 1`.
/// A form of degree `d + 1` carries the whole space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecantPlane {
    u: Form,
    d: u32,
}

impl SecantPlane {
    pub fn new(u: Form, d: u32) -> Result<Self> {
        if u.ring() != Ring::R || u.nvars() != 2 {
            return Err(Error::AmbientMismatch("a secant plane needs a binary x-form".into()));
        }
        if u.is_zero() {
            return Err(Error::Invalid("the zero form carries no secant plane".into()));
        }
        if u.degree() > d + 1 {
            return Err(Error::Degree(format!("apolar form of degree {} in S_{d}", u.degree())));
        }
        Ok(SecantPlane { u, d })
    }

    pub fn apolar_form(&self) -> &Form {
        &self.u
    }

    pub fn ambient_degree(&self) -> u32 {
        self.d
    }

    pub fn q(&self) -> u32 {
        self.u.degree()
    }

    /// Projective dimension, `min(q, d + 1) - 1`.
    pub fn dimension(&self) -> u32 {
        self.q().min(self.d + 1) - 1
    }

    /// Codimension in `P^d`.
    pub fn codim(&self) -> u32 {
        self.d + 1 - self.q().min(self.d + 1)
    }

    pub fn subspace(&self) -> Subspace {
        apolar_subspace(&self.u, self.d).expect("binary x-form")
    }
}

impl fmt::Display for SecantPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (d={})", self.u, self.d)
    }
}

fn intersect_all(planes: &[SecantPlane], d: u32) -> Result<Subspace> {
    let mut acc = Subspace::full(2, d, Ring::S);
    for p in planes {
        acc = acc.intersect(&p.subspace())?;
    }
    Ok(acc)
}

/// Writes `PΛ` as the intersection of the secant planes of the minimal
/// generators of `ann(Λ)`, one per entry of the `q` sequence.
pub fn secant_decompose(lambda: &Subspace) -> Result<Vec<SecantPlane>> {
    if lambda.nvars() != 2 {
        return Err(Error::AmbientMismatch("secant planes need binary forms".into()));
    }
    let d = lambda.degree();
    let planes = minimal_generators(lambda)?
        .into_iter()
        .flat_map(|(_, g)| g)
        .map(|u| SecantPlane::new(u, d))
        .collect::<Result<Vec<_>>>()?;
    if intersect_all(&planes, d)? != *lambda {
        return Err(Error::Verification("secant planes do not cut out the subspace".into()));
    }
    Ok(planes)
}

/// Intersects planes meeting properly. The dimension of the result is
/// `t = d + 1 - Σ codim`, and its Hilbert function is determined by the
/// plane degrees: `h_i = 2h_{i-1} - h_{i-2} - e_i`.
pub fn secant_intersect(planes: &[SecantPlane]) -> Result<(Subspace, HilbertFunction)> {
    let d = planes
        .first()
        .ok_or(Error::Invalid("no planes to intersect".into()))?
        .d;
    if planes.iter().any(|p| p.d != d) {
        return Err(Error::AmbientMismatch("planes live in different S_d".into()));
    }
    let codims: u32 = planes.iter().map(SecantPlane::codim).sum();
    let lambda = intersect_all(planes, d)?;
    if codims > d {
        return Err(Error::Improper {
            expected: 0,
            found: lambda.dim(),
        });
    }
    let t = (d + 1 - codims) as usize;
    if lambda.dim() != t {
        return Err(Error::Improper {
            expected: t,
            found: lambda.dim(),
        });
    }
    let mut e = vec![0i64; d as usize + 2];
    for p in planes {
        e[p.q() as usize] += 1;
    }
    let mut h: Vec<i64> = vec![1];
    let at = |h: &[i64], i: i64| if i < 0 { 0 } else { h[i as usize] };
    for i in 1..=d as i64 {
        let next = 2 * at(&h, i - 1) - at(&h, i - 2) - e[i as usize];
        h.push(next);
    }
    let expected = HilbertFunction::new(h)?;
    let found = hilbert_function(&lambda)?;
    if found != expected {
        return Err(Error::HilbertMismatch {
            expected: expected.to_string(),
            found: found.to_string(),
        });
    }
    Ok((lambda, expected))
}

/// Exponent data of a generalized additive decomposition: forms
/// `Σ p_i L_i^{d - α_i}` with `deg p_i = α_i`, `L_i = b_i y1 - a_i y2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gad {
    pub points: Vec<(Rational, Rational)>,
    pub alphas: Vec<i64>,
}

impl Gad {
    pub fn new(points: Vec<(Rational, Rational)>, alphas: Vec<i64>) -> Result<Self> {
        if points.len() != alphas.len() {
            return Err(Error::Invalid("one exponent per point".into()));
        }
        check_admissible(&points)?;
        if let Some(a) = alphas.iter().find(|&&a| a < -1) {
            return Err(Error::Invalid(format!("exponent {a} below -1")));
        }
        Ok(Gad { points, alphas })
    }

    /// `Σ (α_i + 1)`.
    pub fn length(&self) -> i64 {
        self.alphas.iter().map(|a| a + 1).sum()
    }

    /// `Π (a_i x1 + b_i x2)^{α_i + 1}`.
    pub fn apolar_form(&self) -> Form {
        let one = Form::monomial(2, Ring::R, &[0, 0], Rational::one());
        self.points.iter().zip(&self.alphas).fold(one, |acc, ((a, b), &al)| {
            acc.mul(&Form::linear_power(Ring::R, &[a.clone(), b.clone()], (al + 1) as u32))
        })
    }
}

/// `W(α, L) = Σ S_{α_i} L_i^{d - α_i}`, built from its definition.
pub fn gad_subspace(g: &Gad, d: u32) -> Result<Subspace> {
    if let Some(a) = g.alphas.iter().find(|&&a| a >= d as i64) {
        return Err(Error::Invalid(format!("exponent {a} must be below d = {d}")));
    }
    if g.length() > d as i64 + 1 {
        return Err(Error::Degree(format!("length {} exceeds d + 1", g.length())));
    }
    let mut forms = Vec::new();
    for ((a, b), &al) in g.points.iter().zip(&g.alphas) {
        if al < 0 {
            continue;
        }
        let al = al as u32;
        let l = Form::linear_power(Ring::S, &[b.clone(), -a.clone()], d - al);
        for k in 0..=al {
            forms.push(Form::monomial(2, Ring::S, &[al - k, k], Rational::one()).mul(&l));
        }
    }
    if forms.is_empty() {
        return Ok(Subspace::zero(2, d, Ring::S));
    }
    Subspace::from_forms(2, d, Ring::S, &forms)
}

/// `dim Σ_s = min(s + t(s - t), t(d - t + 1))`.
pub fn sigma_dim(t: usize, d: usize, s: usize) -> Result<i64> {
    if t == 0 || s < t || s > d + 1 {
        return Err(Error::Invalid(format!("need 1 <= t <= s <= d+1, got t={t}, s={s}, d={d}")));
    }
    let (n1, n2) = sigma_bounds(t, d, s);
    Ok(n1.min(n2))
}

/// `(N_1, N_2) = (s + t(s - t), t(d - t + 1))`.
pub fn sigma_bounds(t: usize, d: usize, s: usize) -> (i64, i64) {
    let (t, d, s) = (t as i64, d as i64, s as i64);
    (s + t * (s - t), t * (d - t + 1))
}

/// The level function exhibiting `dim Σ_s = N_1` when `N_1 < N_2`: with
/// `mt <= s < (m+1)t`, `h_i = i+1` below `s`, `s` up to `d - m`, then
/// `(d - i + 1)t`.
pub fn waring_witness_hf(t: usize, d: usize, s: usize) -> Result<HilbertFunction> {
    let (n1, n2) = sigma_bounds(t, d, s);
    if t == 0 || s < t || s > d + 1 {
        return Err(Error::Invalid(format!("need 1 <= t <= s <= d+1, got t={t}, s={s}, d={d}")));
    }
    if n1 >= n2 {
        return Err(Error::NoWitness(format!(
            "N1 = {n1} >= N2 = {n2}: Σ_{s} is the whole Grassmannian"
        )));
    }
    let m = s / t;
    let values = (0..=d)
        .map(|i| {
            if i < s {
                i as i64 + 1
            } else if i <= d - m {
                s as i64
            } else {
                ((d - i + 1) * t) as i64
            }
        })
        .collect();
    let h = HilbertFunction::new(values)?;
    level_hf::check_level(&h)?;
    Ok(h)
}

/// A nonzero `u ∈ ann(Λ)_s` if `Λ` lies on a secant `(s-1)`-plane.
pub fn in_sigma(lambda: &Subspace, s: usize) -> Result<Option<Form>> {
    let d = lambda.degree() as usize;
    if s < lambda.dim() || s > d {
        return Err(Error::Invalid(format!("need t <= s <= d, got s = {s}")));
    }
    Ok(ann_slice(lambda, s)?.basis().first().cloned())
}

/// Coefficients in the scaled basis `a_j = c_j / binom(d, j)`, where `c_j`
/// multiplies `y1^(d-j) y2^j`. In these coordinates the Hankel matrices
/// of a form are its catalecticants.
pub fn scaled_coefficients(f: &Form) -> Result<Vec<Rational>> {
    if f.ring() != Ring::S || f.nvars() != 2 {
        return Err(Error::AmbientMismatch("expected a binary y-form".into()));
    }
    let d = f.degree() as i64;
    Ok(f.coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| c / Rational::from_integer(binomial(d, j as i64)))
        .collect())
}

/// `(a+1) × (d-a+1)` Hankel matrix, row `r` = `(z_r, ..., z_{r+d-a})`.
pub fn hankel_matrix(f: &Form, a: usize) -> Result<MatrixQ> {
    let z = scaled_coefficients(f)?;
    let d = f.degree() as usize;
    if a > d {
        return Err(Error::OutOfRange { index: a, max: d });
    }
    Ok(MatrixQ::from_rows(
        d - a + 1,
        (0..=a).map(|r| z[r..=r + d - a].to_vec()).collect(),
    ))
}

pub fn hankel_rank(f: &Form, a: usize) -> Result<usize> {
    Ok(hankel_matrix(f, a)?.rank())
}

/// The `t` Hankel blocks of shape `(d-s+1) × (s+1)` stacked on top of each
/// other, block `j` holding `F_j`'s coefficients.
pub fn stacked_catalecticant(forms: &[Form], s: usize) -> Result<MatrixQ> {
    let d = forms
        .first()
        .ok_or(Error::ZeroSubspace)?
        .degree() as usize;
    if s > d {
        return Err(Error::OutOfRange { index: s, max: d });
    }
    let mut rows = Vec::new();
    for f in forms {
        if f.degree() as usize != d {
            return Err(Error::AmbientMismatch("forms of different degrees".into()));
        }
        let z = scaled_coefficients(f)?;
        rows.extend((0..=d - s).map(|r| z[r..=r + s].to_vec()));
    }
    Ok(MatrixQ::from_rows(s + 1, rows))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StackedResult {
    Determinant(Rational),
    /// Non-square case: membership in `Σ_s` is `rank <= bound`.
    Rank { rank: usize, bound: usize },
}

impl StackedResult {
    pub fn vanishes(&self) -> bool {
        match self {
            StackedResult::Determinant(x) => x.is_zero(),
            StackedResult::Rank { rank, bound } => rank <= bound,
        }
    }
}

/// The determinant of the stacked catalecticant when `t(d-s+1) = s+1`,
/// otherwise its rank against the bound `s`.
pub fn stacked_catalecticant_det(forms: &[Form], s: usize) -> Result<StackedResult> {
    let m = stacked_catalecticant(forms, s)?;
    Ok(if m.rows() == m.cols() {
        StackedResult::Determinant(m.determinant())
    } else {
        StackedResult::Rank { rank: m.rank(), bound: s }
    })
}

/// `Σ_s` is a hypersurface exactly when `(t+1) | (d+2)`, for
/// `s = d + 1 - (d+2)/(t+1)`; its class is `(d - s + 1) c_1(B*)`.
/// Returns `(s, d - s + 1)`.
pub fn hypersurface_case(t: usize, d: usize) -> Option<(usize, usize)> {
    if t == 0 || !(d + 2).is_multiple_of(t + 1) {
        return None;
    }
    let s = d + 1 - (d + 2) / (t + 1);
    Some((s, d - s + 1))
}
