//! The cohomology ring of `G(t, N)` in the Schubert basis.

use std::collections::BTreeMap;
use std::fmt;

use super::partition::Partition;
use crate::error::{Error, Result};

/// An integer combination of Schubert classes `{λ}` of `G(t, N)`, with
/// every `λ` inside the `t × (N - t)` box.
#[derive(Clone, PartialEq, Eq)]
pub struct SchubertClass {
    t: usize,
    n: usize,
    terms: BTreeMap<Partition, i128>,
}

impl SchubertClass {
    pub fn zero(t: usize, n: usize) -> Self {
        assert!(t <= n, "G({t},{n}) is empty");
        SchubertClass {
            t,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(t: usize, n: usize) -> Self {
        Self::term(t, n, Partition::empty(), 1)
    }

    /// `c {λ}`; zero if `λ` leaves the box.
    pub fn term(t: usize, n: usize, lambda: Partition, c: i128) -> Self {
        let mut out = Self::zero(t, n);
        out.add_term(lambda, c);
        out
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cols(&self) -> u32 {
        (self.n - self.t) as u32
    }

    pub fn terms(&self) -> &BTreeMap<Partition, i128> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> i128 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, lambda: Partition, c: i128) {
        if c == 0 || !lambda.fits(self.t, self.cols()) {
            return;
        }
        let e = self.terms.entry(lambda.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&lambda);
        }
    }

    fn check(&self, other: &SchubertClass) -> Result<()> {
        if (self.t, self.n) != (other.t, other.n) {
            return Err(Error::AmbientMismatch(format!(
                "G({},{}) vs G({},{})",
                self.t, self.n, other.t, other.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &SchubertClass) -> Result<SchubertClass> {
        self.check(other)?;
        let mut out = self.clone();
        for (p, &c) in &other.terms {
            out.add_term(p.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: i128) -> SchubertClass {
        let mut out = Self::zero(self.t, self.n);
        for (p, &v) in &self.terms {
            out.add_term(p.clone(), v * c);
        }
        out
    }

    pub fn neg(&self) -> SchubertClass {
        self.scale(-1)
    }

    /// Product by the Littlewood–Richardson rule, truncated to the box.
    pub fn mul(&self, other: &SchubertClass) -> Result<SchubertClass> {
        self.check(other)?;
        let mut out = Self::zero(self.t, self.n);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                for (nu, c) in lr_product(a, b, self.t, self.cols()) {
                    out.add_term(nu, ca * cb * c as i128);
                }
            }
        }
        Ok(out)
    }

    /// Homogeneous part of degree `k`.
    pub fn degree_part(&self, k: u32) -> SchubertClass {
        let mut out = Self::zero(self.t, self.n);
        for (p, &c) in &self.terms {
            if p.weight() == k {
                out.add_term(p.clone(), c);
            }
        }
        out
    }

    /// Parses `10{3,3} + 6{4,2}`, `-{1}`, `1`, `0`.
    pub fn parse(s: &str, t: usize, n: usize) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            pos: 0,
            msg: format!("{msg} in class {s:?}"),
        };
        let mut out = Self::zero(t, n);
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(out);
        }
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let mut sign = 1i128;
            if let Some(r) = rest.strip_prefix('-') {
                sign = -1;
                rest = r;
            } else if let Some(r) = rest.strip_prefix('+') {
                if first {
                    return Err(bad("leading +"));
                }
                rest = r;
            } else if !first {
                return Err(bad("expected + or -"));
            }
            let digits = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            let coeff: i128 = if digits == 0 { 1 } else { rest[..digits].parse().map_err(|_| bad("bad coefficient"))? };
            rest = &rest[digits..];
            let lambda = if let Some(r) = rest.strip_prefix('{') {
                let close = r.find('}').ok_or_else(|| bad("unclosed brace"))?;
                let p = Partition::parse(&r[..close])?;
                rest = &r[close + 1..];
                p
            } else if digits > 0 {
                Partition::empty()
            } else {
                return Err(bad("expected a coefficient or {partition}"));
            };
            out.add_term(lambda, sign * coeff);
            first = false;
        }
        Ok(out)
    }
}

impl fmt::Display for SchubertClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (p, &c)) in self.terms.iter().enumerate() {
            let a = c.abs();
            match (k, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if p.is_empty() {
                write!(f, "{a}")?;
            } else if a == 1 {
                write!(f, "{}", p.braces())?;
            } else {
                write!(f, "{a}{}", p.braces())?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SchubertClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[G({},{})] {self}", self.t, self.n)
    }
}

/// Littlewood–Richardson coefficients `c^ν_{λμ}` for all `ν` inside the
/// `rows × cols` box, by enumerating LR skew tableaux of shape `ν/λ` and
/// content `μ`: label `k` is added as a horizontal strip of `μ_k` boxes,
/// and the row reading word (right to left, top to bottom) must be a
/// lattice word.
pub fn lr_product(lambda: &Partition, mu: &Partition, rows: usize, cols: u32) -> Vec<(Partition, u64)> {
    if !lambda.fits(rows, cols) || !mu.fits(rows, cols) {
        return Vec::new();
    }
    let mut shape: Vec<u32> = (0..rows).map(|j| lambda.part(j)).collect();
    // counts[j][k]: boxes labelled k+1 in row j
    let mut counts = vec![vec![0u32; mu.len()]; rows];
    let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
    place(mu, 0, 0, mu.part(0), &mut shape, &mut counts, cols, &mut out);
    out.into_iter().collect()
}

#[allow(clippy::too_many_arguments)]
fn place(
    mu: &Partition,
    label: usize,
    row: usize,
    remaining: u32,
    shape: &mut Vec<u32>,
    counts: &mut Vec<Vec<u32>>,
    cols: u32,
    out: &mut BTreeMap<Partition, u64>,
) {
    if label == mu.len() {
        if is_lattice(counts) {
            *out.entry(Partition::new(shape.clone()).expect("shape stays a partition")).or_insert(0) += 1;
        }
        return;
    }
    if remaining == 0 {
        // the strip for this label is complete; start the next one
        let next = label + 1;
        place(mu, next, 0, mu.part(next), shape, counts, cols, out);
        return;
    }
    if row == shape.len() {
        return;
    }
    // horizontal strip: row j may grow up to the old length of row j-1,
    // where "old" means before this label; counts[row-1][label] boxes were
    // just added above and must be excluded
    let cap = if row == 0 {
        cols
    } else {
        (shape[row - 1] - counts[row - 1][label]).min(cols)
    };
    let room = cap.saturating_sub(shape[row]);
    for add in (0..=room.min(remaining)).rev() {
        shape[row] += add;
        counts[row][label] += add;
        place(mu, label, row + 1, remaining - add, shape, counts, cols, out);
        shape[row] -= add;
        counts[row][label] -= add;
    }
}

fn is_lattice(counts: &[Vec<u32>]) -> bool {
    let labels = counts.first().map_or(0, Vec::len);
    let mut seen = vec![0u32; labels];
    for row in counts {
        for k in (0..labels).rev() {
            seen[k] += row[k];
            if k > 0 && seen[k] > seen[k - 1] {
                return false;
            }
        }
    }
    true
}
