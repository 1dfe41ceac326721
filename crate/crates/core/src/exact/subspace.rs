use std::fmt;

use num_traits::Zero;

use super::form::{monomials, Form, Ring};
use super::matrix::MatrixQ;
use super::rational::Rational;
use crate::error::{Error, Result};

/// A subspace of the degree-`degree` forms of one ring, held in its unique
/// reduced-echelon basis. Equality of values is equality of subspaces.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    nvars: usize,
    degree: u32,
    ring: Ring,
    basis: Vec<Form>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_vectors(nvars: usize, degree: u32, ring: Ring, vectors: Vec<Vec<Rational>>) -> Self {
        let n = monomials(nvars, degree as i64).len();
        let e = MatrixQ::from_rows(n, vectors).echelon();
        let basis = e
            .rref
            .row_vecs()
            .into_iter()
            .map(|row| Form::from_coeffs(nvars, degree, ring, row).expect("row length"))
            .collect();
        Subspace {
            nvars,
            degree,
            ring,
            basis,
            pivots: e.pivots,
        }
    }

    pub fn from_forms(nvars: usize, degree: u32, ring: Ring, forms: &[Form]) -> Result<Self> {
        for f in forms {
            if f.nvars() != nvars || f.degree() != degree || f.ring() != ring {
                return Err(Error::AmbientMismatch(format!(
                    "form {f} is not of degree {degree} in {nvars} {}-variables",
                    ring.letter()
                )));
            }
        }
        let vecs = forms.iter().map(|f| f.coeffs().to_vec()).collect();
        Ok(Self::from_vectors(nvars, degree, ring, vecs))
    }

    /// Span of a nonempty list of forms sharing an ambient space.
    pub fn span(forms: &[Form]) -> Result<Self> {
        let first = forms.first().ok_or(Error::ZeroSubspace)?;
        Self::from_forms(first.nvars(), first.degree(), first.ring(), forms)
    }

    pub fn full(nvars: usize, degree: u32, ring: Ring) -> Self {
        let n = monomials(nvars, degree as i64).len();
        Self::from_vectors(nvars, degree, ring, MatrixQ::identity(n).row_vecs())
    }

    pub fn zero(nvars: usize, degree: u32, ring: Ring) -> Self {
        Self::from_vectors(nvars, degree, ring, Vec::new())
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

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        monomials(self.nvars, self.degree as i64).len()
    }

    pub fn basis(&self) -> &[Form] {
        &self.basis
    }

    /// Pivot column (monomial index) of each basis form.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Monomial indices not used as pivots; their classes form a basis of
    /// the quotient of the ambient space by this subspace.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..is_pivot.len()).filter(|&i| !is_pivot[i]).collect()
    }

    pub fn matrix(&self) -> MatrixQ {
        MatrixQ::from_rows(
            self.ambient_dim(),
            self.basis.iter().map(|f| f.coeffs().to_vec()).collect(),
        )
    }

    /// Canonical representative of `v` modulo this subspace: the unique
    /// vector in the coset with zero entries at every pivot.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (f, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let c = out[p].clone();
            for (x, b) in out.iter_mut().zip(f.coeffs()) {
                if !b.is_zero() {
                    *x -= &c * b;
                }
            }
        }
        out
    }

    /// Coordinates of `v` in the quotient, indexed like [`Self::non_pivots`].
    pub fn quotient_coords(&self, v: &[Rational]) -> Vec<Rational> {
        let r = self.reduce(v);
        self.non_pivots().into_iter().map(|i| r[i].clone()).collect()
    }

    pub fn contains(&self, f: &Form) -> bool {
        f.nvars() == self.nvars
            && f.degree() == self.degree
            && f.ring() == self.ring
            && self.reduce(f.coeffs()).iter().all(Zero::is_zero)
    }

    /// Coordinates of a member in the echelon basis (pivot entries).
    pub fn coordinates(&self, v: &[Rational]) -> Vec<Rational> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    fn check_same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.nvars != other.nvars || self.degree != other.degree || self.ring != other.ring {
            return Err(Error::AmbientMismatch(format!(
                "degree {} in {} {}-variables vs degree {} in {} {}-variables",
                self.degree,
                self.nvars,
                self.ring.letter(),
                other.degree,
                other.nvars,
                other.ring.letter()
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same_ambient(other)?;
        let vecs = self
            .basis
            .iter()
            .chain(&other.basis)
            .map(|f| f.coeffs().to_vec())
            .collect();
        Ok(Self::from_vectors(self.nvars, self.degree, self.ring, vecs))
    }

    /// Intersection, computed from the kernel of `[A^T | -B^T]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same_ambient(other)?;
        let (a, b) = (self.dim(), other.dim());
        let n = self.ambient_dim();
        if a == 0 || b == 0 {
            return Ok(Self::zero(self.nvars, self.degree, self.ring));
        }
        let mut m = MatrixQ::zeros(n, a + b);
        for (j, f) in self.basis.iter().enumerate() {
            for (i, c) in f.coeffs().iter().enumerate() {
                m[(i, j)] = c.clone();
            }
        }
        for (j, f) in other.basis.iter().enumerate() {
            for (i, c) in f.coeffs().iter().enumerate() {
                m[(i, a + j)] = -c.clone();
            }
        }
        let vecs = m
            .kernel()
            .into_iter()
            .map(|k| {
                let mut v = vec![Rational::zero(); n];
                for (coef, f) in k[..a].iter().zip(&self.basis) {
                    if coef.is_zero() {
                        continue;
                    }
                    for (x, c) in v.iter_mut().zip(f.coeffs()) {
                        *x += coef * c;
                    }
                }
                v
            })
            .collect();
        Ok(Self::from_vectors(self.nvars, self.degree, self.ring, vecs))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|f| other.contains(f))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let forms: Vec<String> = self.basis.iter().map(ToString::to_string).collect();
        write!(f, "Subspace<{:?}{}>{{{}}}", self.ring, self.degree, forms.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{parse_form, rat, FormHint};
    use proptest::prelude::*;

    fn s(forms: &[&str]) -> Subspace {
        let f: Vec<Form> = forms.iter().map(|t| parse_form(t, FormHint::default()).unwrap()).collect();
        Subspace::span(&f).unwrap()
    }

    #[test]
    fn self_intersection() {
        let a = s(&["y1^3 + y2^3", "y1*y2^2"]);
        assert_eq!(a.intersect(&a).unwrap(), a);
    }

    #[test]
    fn pivot_disjoint_intersection() {
        let a = s(&["y1^3", "y2^3"]);
        let b = s(&["y1^3", "y1^2*y2"]);
        assert_eq!(a.intersect(&b).unwrap(), s(&["y1^3"]));
    }

    #[test]
    fn mismatched_ambients() {
        let a = s(&["y1^3"]);
        let b = s(&["y1^2"]);
        assert!(matches!(a.intersect(&b), Err(Error::AmbientMismatch(_))));
        let c = s(&["x1^3"]);
        assert!(matches!(a.sum(&c), Err(Error::AmbientMismatch(_))));
    }

    #[test]
    fn quotient_coordinates() {
        let a = s(&["y1^2 + y2^2"]);
        assert_eq!(a.non_pivots(), vec![1, 2]);
        let v = vec![rat(2), rat(1), rat(0)];
        assert_eq!(a.quotient_coords(&v), vec![rat(1), rat(-2)]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn canonical_form_independent_of_basis(
            gens in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 6), 1..=4),
            mix in proptest::collection::vec(-2i64..=2, 16),
        ) {
            let vecs: Vec<Vec<Rational>> = gens.iter().map(|g| g.iter().map(|&x| rat(x)).collect()).collect();
            let a = Subspace::from_vectors(2, 5, Ring::S, vecs.clone());
            // unitriangular change of basis, listed in reverse order
            let n = vecs.len();
            let mut other: Vec<Vec<Rational>> = (0..n)
                .map(|k| {
                    let mut v = vecs[k].clone();
                    for j in (k + 1)..n {
                        let c = rat(mix[(k * 4 + j) % mix.len()]);
                        for (x, y) in v.iter_mut().zip(&vecs[j]) {
                            *x += &c * y;
                        }
                    }
                    v
                })
                .collect();
            other.reverse();
            let b = Subspace::from_vectors(2, 5, Ring::S, other);
            prop_assert_eq!(a, b);
        }

        #[test]
        fn intersection_dimension_formula(
            ga in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 5), 1..=4),
            gb in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 5), 1..=4),
        ) {
            let conv = |g: &Vec<Vec<i64>>| g.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect::<Vec<Vec<Rational>>>();
            let a = Subspace::from_vectors(2, 4, Ring::S, conv(&ga));
            let b = Subspace::from_vectors(2, 4, Ring::S, conv(&gb));
            let i = a.intersect(&b).unwrap();
            let sum = a.sum(&b).unwrap();
            prop_assert_eq!(i.dim() + sum.dim(), a.dim() + b.dim());
            prop_assert!(i.is_subspace_of(&a) && i.is_subspace_of(&b));
        }
    }
}
