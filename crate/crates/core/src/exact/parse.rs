//! Text form of polynomials.
//!
//! ```text
//! form   := term (('+' | '-') term)*      leading sign allowed
//! term   := [rational '*'] factor ('*' factor)*  |  rational
//! factor := ('x' | 'y') index ['^' exponent]
//! ```
//!
//! A form uses one letter class only (`x` for the operator ring, `y` for
//! the forms) and must be homogeneous.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::form::{monomials, Form, Ring};
use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// Context that the text alone may not determine.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FormHint {
    /// Number of variables; defaults to the largest index seen (at least 2).
    pub nvars: Option<usize>,
    /// Ring; required for forms without variables.
    pub ring: Option<Ring>,
    /// Degree; required for the zero form.
    pub degree: Option<u32>,
}

impl FormHint {
    pub fn binary(ring: Ring) -> Self {
        FormHint {
            nvars: Some(2),
            ring: Some(ring),
            degree: None,
        }
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn small(&mut self, what: &str) -> Result<u32> {
        let at = self.pos;
        let n = self.number()?;
        u32::try_from(n).map_err(|_| Error::Parse {
            pos: at,
            msg: format!("{what} too large"),
        })
    }
}

type Terms = BTreeMap<Vec<u32>, Rational>;

fn parse_term(lx: &mut Lexer<'_>, ring: &mut Option<Ring>, max_var: &mut usize) -> Result<(BTreeMap<usize, u32>, Rational)> {
    let mut coeff = Rational::one();
    let mut vars: BTreeMap<usize, u32> = BTreeMap::new();
    let mut expect_factor;
    match lx.peek() {
        Some(c) if c.is_ascii_digit() => {
            let n = lx.number()?;
            let d = if lx.peek() == Some(b'/') {
                lx.pos += 1;
                let at = lx.pos;
                let d = lx.number()?;
                if d.is_zero() {
                    return Err(Error::Parse {
                        pos: at,
                        msg: "zero denominator".into(),
                    });
                }
                d
            } else {
                BigInt::one()
            };
            coeff = Rational::new(n, d);
            if lx.peek() == Some(b'*') {
                lx.pos += 1;
                expect_factor = true;
            } else {
                return Ok((vars, coeff));
            }
        }
        _ => expect_factor = true,
    }
    while expect_factor {
        let letter = match lx.peek() {
            Some(b'x') => Ring::R,
            Some(b'y') => Ring::S,
            _ => return lx.err("expected a variable x<i> or y<i>"),
        };
        let at = lx.pos;
        match ring {
            Some(r) if *r != letter => {
                return Err(Error::Parse {
                    pos: at,
                    msg: "mixed x and y variables in one form".into(),
                })
            }
            _ => *ring = Some(letter),
        }
        lx.pos += 1;
        if !lx.src.get(lx.pos).is_some_and(u8::is_ascii_digit) {
            return lx.err("expected a variable index");
        }
        let idx = lx.small("variable index")? as usize;
        if idx == 0 {
            return Err(Error::Parse {
                pos: at,
                msg: "variable indices start at 1".into(),
            });
        }
        let e = if lx.peek() == Some(b'^') {
            lx.pos += 1;
            lx.small("exponent")?
        } else {
            1
        };
        *max_var = (*max_var).max(idx);
        *vars.entry(idx).or_insert(0) += e;
        expect_factor = if lx.peek() == Some(b'*') {
            lx.pos += 1;
            true
        } else {
            false
        };
    }
    Ok((vars, coeff))
}

/// Parses one homogeneous form.
pub fn parse_form(text: &str, hint: FormHint) -> Result<Form> {
    let mut lx = Lexer {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut ring = hint.ring;
    let mut max_var = 0usize;
    let mut raw: Vec<(usize, BTreeMap<usize, u32>, Rational)> = Vec::new();
    let mut first = true;
    loop {
        let mut sign = Rational::one();
        match lx.peek() {
            None if first => return lx.err("empty form"),
            None => break,
            Some(b'+') if !first => lx.pos += 1,
            Some(b'-') => {
                lx.pos += 1;
                sign = -sign;
            }
            Some(_) if first => {}
            Some(c) => return lx.err(format!("unexpected character {:?}", c as char)),
        }
        lx.skip_ws();
        let start = lx.pos;
        let (vars, c) = parse_term(&mut lx, &mut ring, &mut max_var)?;
        raw.push((start, vars, c * sign));
        first = false;
    }

    let nvars = match hint.nvars {
        Some(n) if n < max_var => {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("variable index {max_var} exceeds {n} variables"),
            })
        }
        Some(n) => n,
        None => max_var.max(2),
    };
    let ring = ring.ok_or(Error::Parse {
        pos: 0,
        msg: "cannot tell x-form from y-form without variables".into(),
    })?;

    let mut terms: Terms = BTreeMap::new();
    let mut degree: Option<u32> = None;
    for (pos, vars, c) in raw {
        let mut exps = vec![0u32; nvars];
        for (i, e) in vars {
            exps[i - 1] = e;
        }
        let deg: u32 = exps.iter().sum();
        // all-zero forms like "0" carry no degree information
        if c.is_zero() && deg == 0 {
            continue;
        }
        match degree {
            Some(d) if d != deg => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("inhomogeneous: term of degree {deg} in a form of degree {d}"),
                })
            }
            _ => degree = Some(deg),
        }
        *terms.entry(exps).or_insert_with(Rational::zero) += c;
    }
    let degree = match (degree, hint.degree) {
        (Some(d), Some(h)) if d != h => {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("expected degree {h}, found {d}"),
            })
        }
        (Some(d), _) | (None, Some(d)) => d,
        (None, None) => {
            return Err(Error::Parse {
                pos: 0,
                msg: "zero form needs an explicit degree".into(),
            })
        }
    };
    let basis = monomials(nvars, degree as i64);
    let mut coeffs = vec![Rational::zero(); basis.len()];
    for (exps, c) in terms {
        coeffs[basis.index_of(&exps).expect("homogeneous monomial")] += c;
    }
    Form::from_coeffs(nvars, degree, ring, coeffs)
}

/// One form per nonempty line; `#` starts a comment.
pub fn parse_forms(text: &str, hint: FormHint) -> Result<Vec<Form>> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        out.push(parse_form(line, hint)?);
    }
    Ok(out)
}

fn print_monomial(ring: Ring, exps: &[u32]) -> String {
    let letter = ring.letter();
    exps.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("{letter}{}", i + 1)
            } else {
                format!("{letter}{}^{e}", i + 1)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

pub(crate) fn print_form(f: &Form) -> String {
    let basis = f.basis();
    let mut out = String::new();
    for (i, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        let mono = print_monomial(f.ring(), basis.exps(i));
        if mono.is_empty() {
            out.push_str(&format_rational(&a));
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{}*{mono}", format_rational(&a)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    #[test]
    fn monomial_in_r() {
        let f = parse_form("x1^4*x2^2", FormHint::default()).unwrap();
        assert_eq!(f.ring(), Ring::R);
        assert_eq!(f.degree(), 6);
        assert_eq!(f.coeff(&[4, 2]), rat(1));
    }

    #[test]
    fn rational_coefficients() {
        let f = parse_form("3/2*y1^2 - y2^2", FormHint::default()).unwrap();
        assert_eq!(f.ring(), Ring::S);
        assert_eq!(f.coeffs(), &[Rational::new(3.into(), 2.into()), rat(0), rat(-1)]);
    }

    #[test]
    fn print_parse_identity() {
        let f = parse_form("x2^5", FormHint::default()).unwrap();
        assert_eq!(f.to_string(), "x2^5");
        assert_eq!(parse_form("x1*x2 - 2*x2^2 + x1^2", FormHint::default()).unwrap().to_string(), "x1^2 + x1*x2 - 2*x2^2");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_form("y1^2 + * y2^2", FormHint::default()) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 7),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_form("x1 + y1", FormHint::default()), Err(Error::Parse { .. })));
        assert!(matches!(parse_form("", FormHint::default()), Err(Error::Parse { .. })));
        assert!(matches!(parse_form("y0^2", FormHint::default()), Err(Error::Parse { .. })));
    }

    #[test]
    fn inhomogeneous_rejected() {
        let e = parse_form("y1^2 + y2^3", FormHint::default()).unwrap_err();
        assert!(matches!(e, Error::Parse { pos: 7, .. }), "{e:?}");
    }

    #[test]
    fn zero_form_needs_degree() {
        assert!(parse_form("0", FormHint::binary(Ring::S)).is_err());
        let z = parse_form("0", FormHint { degree: Some(3), ..FormHint::binary(Ring::S) }).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
    }

    proptest! {
        #[test]
        fn round_trip(nvars in 2usize..=3, degree in 0u32..=5, seed in proptest::collection::vec((-5i64..=5, 1i64..=4), 21)) {
            let n = monomials(nvars, degree as i64).len();
            let coeffs: Vec<Rational> = seed[..n].iter().map(|&(a, b)| Rational::new(a.into(), b.into())).collect();
            let f = Form::from_coeffs(nvars, degree, Ring::S, coeffs).unwrap();
            let hint = FormHint { nvars: Some(nvars), ring: Some(Ring::S), degree: Some(degree) };
            prop_assert_eq!(parse_form(&f.to_string(), hint).unwrap(), f);
        }
    }
}
