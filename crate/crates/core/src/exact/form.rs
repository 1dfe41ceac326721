use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Which polynomial ring a form lives in: `R` holds the differential
/// operators in `x1..xn`, `S` the forms in `y1..yn` they act upon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    R,
    S,
}

impl Ring {
    pub fn letter(self) -> char {
        match self {
            Ring::R => 'x',
            Ring::S => 'y',
        }
    }

    pub fn dual(self) -> Ring {
        match self {
            Ring::R => Ring::S,
            Ring::S => Ring::R,
        }
    }
}

/// Monomials of one degree in `nvars` variables, in graded lexicographic
/// order (`x1^m` first). For two variables the monomial at index `j` is
/// `x1^(m-j) x2^j`.
#[derive(Debug)]
pub struct MonomialBasis {
    pub nvars: usize,
    pub degree: u32,
    exps: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl MonomialBasis {
    fn build(nvars: usize, degree: u32) -> Self {
        fn rec(nvars: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if prefix.len() + 1 == nvars {
                prefix.push(left);
                out.push(prefix.clone());
                prefix.pop();
                return;
            }
            for e in (0..=left).rev() {
                prefix.push(e);
                rec(nvars, left - e, prefix, out);
                prefix.pop();
            }
        }
        let mut exps = Vec::new();
        if nvars > 0 {
            rec(nvars, degree, &mut Vec::with_capacity(nvars), &mut exps);
        }
        let index = exps.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        MonomialBasis {
            nvars,
            degree,
            exps,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exps(&self, i: usize) -> &[u32] {
        &self.exps[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> {
        self.exps.iter().map(Vec::as_slice)
    }

    pub fn index_of(&self, exps: &[u32]) -> Option<usize> {
        if self.nvars == 2 {
            // fast path: the x2 exponent is the index
            return (exps.len() == 2 && exps[0] + exps[1] == self.degree).then_some(exps[1] as usize);
        }
        self.index.get(exps).copied()
    }
}

/// Shared cached basis of degree-`degree` monomials; negative degrees have
/// no monomials.
pub fn monomials(nvars: usize, degree: i64) -> Arc<MonomialBasis> {
    type Cache = Mutex<HashMap<(usize, u32), Arc<MonomialBasis>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let degree = if degree < 0 {
        return Arc::new(MonomialBasis {
            nvars,
            degree: 0,
            exps: Vec::new(),
            index: HashMap::new(),
        });
    } else {
        degree as u32
    };
    let cache = CACHE.get_or_init(Default::default);
    let mut guard = cache.lock().expect("monomial cache poisoned");
    guard
        .entry((nvars, degree))
        .or_insert_with(|| Arc::new(MonomialBasis::build(nvars, degree)))
        .clone()
}

/// Homogeneous polynomial of a fixed degree, stored densely in the
/// [`MonomialBasis`] order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Form {
    nvars: usize,
    degree: u32,
    ring: Ring,
    coeffs: Vec<Rational>,
}

impl Form {
    pub fn zero(nvars: usize, degree: u32, ring: Ring) -> Self {
        let n = monomials(nvars, degree as i64).len();
        Form {
            nvars,
            degree,
            ring,
            coeffs: vec![Rational::zero(); n],
        }
    }

    pub fn from_coeffs(nvars: usize, degree: u32, ring: Ring, coeffs: Vec<Rational>) -> Result<Self> {
        let n = monomials(nvars, degree as i64).len();
        if coeffs.len() != n {
            return Err(Error::Invalid(format!(
                "expected {n} coefficients for degree {degree} in {nvars} variables, got {}",
                coeffs.len()
            )));
        }
        Ok(Form {
            nvars,
            degree,
            ring,
            coeffs,
        })
    }

    pub fn monomial(nvars: usize, ring: Ring, exps: &[u32], coeff: Rational) -> Self {
        assert_eq!(exps.len(), nvars);
        let degree = exps.iter().sum();
        let mut f = Form::zero(nvars, degree, ring);
        let idx = monomials(nvars, degree as i64).index_of(exps).expect("monomial in basis");
        f.coeffs[idx] = coeff;
        f
    }

    /// `sum c_i v_i` raised to `power`, where `v_i` are the ring's variables.
    pub fn linear_power(ring: Ring, linear: &[Rational], power: u32) -> Self {
        let nvars = linear.len();
        let mut lin = Form::zero(nvars, 1, ring);
        lin.coeffs.clone_from_slice(linear);
        let mut acc = Form::monomial(nvars, ring, &vec![0; nvars], Rational::one());
        for _ in 0..power {
            acc = acc.mul(&lin);
        }
        acc
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn basis(&self) -> Arc<MonomialBasis> {
        monomials(self.nvars, self.degree as i64)
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.basis()
            .index_of(exps)
            .map_or_else(Rational::zero, |i| self.coeffs[i].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn with_ring(mut self, ring: Ring) -> Self {
        self.ring = ring;
        self
    }

    fn check_same_space(&self, other: &Form) {
        assert!(
            self.nvars == other.nvars && self.degree == other.degree && self.ring == other.ring,
            "forms live in different spaces"
        );
    }

    pub fn add(&self, other: &Form) -> Form {
        self.check_same_space(other);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Form { coeffs, ..self.clone() }
    }

    pub fn sub(&self, other: &Form) -> Form {
        self.check_same_space(other);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Form { coeffs, ..self.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Form {
        let coeffs = self.coeffs.iter().map(|a| a * c).collect();
        Form { coeffs, ..self.clone() }
    }

    /// Product in the same ring.
    pub fn mul(&self, other: &Form) -> Form {
        assert!(self.nvars == other.nvars && self.ring == other.ring);
        let (ba, bb) = (self.basis(), other.basis());
        let degree = self.degree + other.degree;
        let target = monomials(self.nvars, degree as i64);
        let mut out = vec![Rational::zero(); target.len()];
        let mut e = vec![0u32; self.nvars];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                for (k, slot) in e.iter_mut().enumerate() {
                    *slot = ba.exps(i)[k] + bb.exps(j)[k];
                }
                out[target.index_of(&e).expect("product monomial")] += a * b;
            }
        }
        Form {
            nvars: self.nvars,
            degree,
            ring: self.ring,
            coeffs: out,
        }
    }

    /// Differentiation action `u(∂/∂v) F` of `self` on a form of the dual
    /// ring. Requires `deg self <= deg target`.
    pub fn act_on(&self, target: &Form) -> Result<Form> {
        if self.nvars != target.nvars {
            return Err(Error::AmbientMismatch(format!(
                "{} vs {} variables",
                self.nvars, target.nvars
            )));
        }
        if self.ring == target.ring {
            return Err(Error::AmbientMismatch("operator and form in the same ring".into()));
        }
        if self.degree > target.degree {
            return Err(Error::Degree(format!(
                "operator of degree {} applied to a form of degree {}",
                self.degree, target.degree
            )));
        }
        let (bu, bf) = (self.basis(), target.basis());
        let degree = target.degree - self.degree;
        let out_basis = monomials(self.nvars, degree as i64);
        let mut out = vec![Rational::zero(); out_basis.len()];
        let mut e = vec![0u32; self.nvars];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ue = bu.exps(i);
            'outer: for (j, b) in target.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let fe = bf.exps(j);
                let mut factor = BigInt::one();
                for k in 0..self.nvars {
                    if ue[k] > fe[k] {
                        continue 'outer;
                    }
                    e[k] = fe[k] - ue[k];
                    for x in (e[k] + 1)..=fe[k] {
                        factor *= x;
                    }
                }
                out[out_basis.index_of(&e).expect("quotient monomial")] += a * b * Rational::from_integer(factor);
            }
        }
        Ok(Form {
            nvars: self.nvars,
            degree,
            ring: target.ring,
            coeffs: out,
        })
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::parse::print_form(self))
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form[{:?}, n={}, deg={}]({})", self.ring, self.nvars, self.degree, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn binary_order_is_by_x2_exponent() {
        let b = monomials(2, 4);
        for j in 0..=4u32 {
            assert_eq!(b.exps(j as usize), &[4 - j, j]);
        }
    }

    #[test]
    fn ternary_grlex_order() {
        let b = monomials(3, 2);
        let got: Vec<Vec<u32>> = b.iter().map(|e| e.to_vec()).collect();
        assert_eq!(
            got,
            vec![vec![2, 0, 0], vec![1, 1, 0], vec![1, 0, 1], vec![0, 2, 0], vec![0, 1, 1], vec![0, 0, 2]]
        );
        for (i, e) in got.iter().enumerate() {
            assert_eq!(b.index_of(e), Some(i));
        }
    }

    #[test]
    fn differentiation() {
        let x1 = Form::monomial(2, Ring::R, &[1, 0], rat(1));
        let y13 = Form::monomial(2, Ring::S, &[3, 0], rat(1));
        assert_eq!(x1.act_on(&y13).unwrap(), Form::monomial(2, Ring::S, &[2, 0], rat(3)));
        let x1x2 = Form::monomial(2, Ring::R, &[1, 1], rat(1));
        let f = Form::monomial(2, Ring::S, &[2, 2], rat(1));
        assert_eq!(x1x2.act_on(&f).unwrap(), Form::monomial(2, Ring::S, &[1, 1], rat(4)));
        assert!(matches!(f.act_on(&x1), Err(Error::Degree(_)) | Err(Error::AmbientMismatch(_))));
        assert!(matches!(
            Form::monomial(2, Ring::R, &[2, 2], rat(1)).act_on(&y13),
            Err(Error::Degree(_))
        ));
    }

    #[test]
    fn linear_power_expands_binomially() {
        let f = Form::linear_power(Ring::S, &[rat(1), rat(1)], 3);
        let want: Vec<Rational> = [1, 3, 3, 1].iter().map(|&c| rat(c)).collect();
        assert_eq!(f.coeffs(), &want[..]);
    }
}
