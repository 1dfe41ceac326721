//! Chern classes of the tautological bundle and the degeneracy class of the
//! locus where the catalecticant map `B ⊗ R_{d-i} → S_i` drops rank.

use super::lr::SchubertClass;
use super::partition::Partition;
use crate::error::{Error, Result};

/// `c_i(B) = (-1)^i {1^i}` for the rank-`t` sub-bundle of `G(t, N)`.
pub fn chern_taut(t: usize, n: usize, i: usize) -> SchubertClass {
    if i > t {
        return SchubertClass::zero(t, n);
    }
    let sign = if i.is_multiple_of(2) { 1 } else { -1 };
    SchubertClass::term(t, n, Partition::rectangle(i, 1), sign)
}

/// Total Chern class of the universal quotient, `Σ_k {k}`.
pub fn chern_quotient_total(t: usize, n: usize) -> SchubertClass {
    let mut c = SchubertClass::zero(t, n);
    for k in 0..=(n - t) as u32 {
        c = c.add(&SchubertClass::term(t, n, Partition::rectangle(1, k), 1)).unwrap();
    }
    c
}

/// The expected class of `{ U ∈ G(t, S_d) : dim U·R_{d-i} ≤ r }`.
///
/// The map `E = B ⊗ R_{d-i} → F = S_i ⊗ O` has ranks `e = t(d-i+1)` and
/// `f = i+1`; Thom–Porteous gives `det[c_{f-r+j-k}(F - E)]` of size
/// `(e-r) × (e-r)` with `c(F - E) = c(B)^{-(d-i+1)} = c(Q)^{d-i+1}`.
pub fn porteous_class(t: usize, d: usize, i: usize, r: usize) -> Result<SchubertClass> {
    if t == 0 || t > d + 1 {
        return Err(Error::Invalid(format!("need 1 <= t <= d+1, got t = {t}, d = {d}")));
    }
    if i > d {
        return Err(Error::Invalid(format!("need i <= d, got i = {i}, d = {d}")));
    }
    let n = d + 1;
    let e = t * (d - i + 1);
    let f = i + 1;
    if r >= e.min(f) {
        // the rank condition is vacuous
        return Ok(SchubertClass::one(t, n));
    }
    let size = e - r;
    let codim = (e - r) * (f - r);
    if codim > t * (n - t) {
        return Ok(SchubertClass::zero(t, n));
    }

    // graded pieces of c(Q)^{d-i+1}, up to the largest index needed
    let top = f - r + size - 1;
    let cq = chern_quotient_total(t, n);
    let mut total = SchubertClass::one(t, n);
    for _ in 0..(d - i + 1) {
        total = total.mul(&cq)?;
    }
    let c: Vec<SchubertClass> = (0..=top).map(|k| total.degree_part(k as u32)).collect();

    let entry = |row: usize, col: usize| -> Option<&SchubertClass> {
        let idx = (f - r + col) as i64 - row as i64;
        if idx < 0 || idx as usize > top {
            None
        } else {
            Some(&c[idx as usize])
        }
    };
    determinant(size, t, n, entry)
}

/// Laplace expansion along rows with memoisation on the set of used
/// columns: `dp[mask]` is the signed sum over injections of the first
/// `popcount(mask)` rows into `mask`.
fn determinant<'a, F>(size: usize, t: usize, n: usize, entry: F) -> Result<SchubertClass>
where
    F: Fn(usize, usize) -> Option<&'a SchubertClass>,
{
    if size > 20 {
        return Err(Error::CapExceeded(format!("determinant of size {size}")));
    }
    let full = (1usize << size) - 1;
    let mut dp: Vec<Option<SchubertClass>> = vec![None; 1 << size];
    dp[0] = Some(SchubertClass::one(t, n));
    for mask in 0..full {
        let Some(cur) = dp[mask].take() else { continue };
        if cur.is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        for col in 0..size {
            if mask & (1 << col) != 0 {
                continue;
            }
            let Some(a) = entry(row, col) else { continue };
            if a.is_zero() {
                continue;
            }
            let above = (mask >> (col + 1)).count_ones();
            let mut term = cur.mul(a)?;
            if above % 2 == 1 {
                term = term.neg();
            }
            let next = mask | (1 << col);
            dp[next] = Some(match dp[next].take() {
                Some(acc) => acc.add(&term)?,
                None => term,
            });
        }
    }
    Ok(dp[full].take().unwrap_or_else(|| SchubertClass::zero(t, n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chern_of_tautological_bundle() {
        assert_eq!(chern_taut(2, 6, 0).to_string(), "1");
        assert_eq!(chern_taut(2, 6, 1).to_string(), "-{1}");
        assert_eq!(chern_taut(2, 6, 2).to_string(), "{1,1}");
        assert!(chern_taut(2, 6, 3).is_zero());
        // c(B) c(Q) = 1
        let mut cb = SchubertClass::zero(2, 6);
        for k in 0..=2 {
            cb = cb.add(&chern_taut(2, 6, k)).unwrap();
        }
        assert_eq!(cb.mul(&chern_quotient_total(2, 6)).unwrap(), SchubertClass::one(2, 6));
    }

    #[test]
    fn secant_line_loci_in_g26() {
        let le = porteous_class(2, 5, 2, 2).unwrap();
        assert_eq!(le.to_string(), "10{3,3} + 6{4,2}");
        assert_eq!(porteous_class(2, 5, 4, 2).unwrap(), le);
        // the {3} coefficient is the number of lines through a general point
        // of a general hyperplane lying in a 3-secant plane: exactly one
        assert_eq!(porteous_class(2, 5, 3, 3).unwrap().to_string(), "8{2,1} + {3}");
    }

    #[test]
    fn corank_one_is_a_top_chern_class() {
        // with f - r = 1 the locus is where S_i* → E* fails to be injective,
        // whose class is c_{e-r}(E*) = c_{e-r}(B*^{d-i+1}), c(B*) = Σ {1^k}
        for t in 1..=3usize {
            for d in t..=7usize {
                let n = d + 1;
                for i in 0..=d {
                    let r = i;
                    let e = t * (d - i + 1);
                    if r >= e.min(i + 1) {
                        continue;
                    }
                    let mut cb = SchubertClass::zero(t, n);
                    for k in 0..=t {
                        cb = cb.add(&SchubertClass::term(t, n, Partition::rectangle(k, 1), 1)).unwrap();
                    }
                    let mut total = SchubertClass::one(t, n);
                    for _ in 0..(d - i + 1) {
                        total = total.mul(&cb).unwrap();
                    }
                    let expect = total.degree_part((e - r) as u32);
                    assert_eq!(porteous_class(t, d, i, r).unwrap(), expect, "({t},{d},{i},{r})");
                }
            }
        }
    }

    #[test]
    fn determinant_matches_permutation_expansion() {
        // integer matrix embedded as multiples of the identity class
        let m = [[2i128, -1, 3], [0, 4, 1], [5, 2, -2]];
        let cells: Vec<Vec<SchubertClass>> = m
            .iter()
            .map(|row| row.iter().map(|&v| SchubertClass::one(1, 2).scale(v)).collect())
            .collect();
        let det = determinant(3, 1, 2, |r, c| Some(&cells[r][c])).unwrap();
        let expect = 2 * (4 * -2 - 2) + (0 - 5) + 3 * (0 - 20);
        assert_eq!(det, SchubertClass::one(1, 2).scale(expect));
    }

    #[test]
    fn hypersurface_degree() {
        // a single minor condition: codimension 1, so a multiple of {1}
        let c = porteous_class(2, 4, 3, 3).unwrap();
        assert_eq!(c.terms().len(), 1);
        assert!(c.terms().keys().all(|p| p.weight() == 1));
    }
}
