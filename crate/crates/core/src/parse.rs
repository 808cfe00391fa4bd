//! Text and JSON forms of Laurent polynomials.
//!
//! ```text
//! poly   := term (('+' | '-' | '−') term)*
//! term   := [coeff] ['*'] factor ('*'? factor)*  |  coeff
//! factor := 't' index ['^' signed-integer]
//! coeff  := integer ['/' positive-integer]
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::rational::{format_rational, format_rational_short, parse_rational};
use crate::exactalg::{ExponentVector, LaurentPolynomial, Rational};

struct Lexer<'a> {
    chars: Vec<(usize, char)>,
    i: usize,
    src: &'a str,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { chars: src.char_indices().collect(), i: 0, src }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.i).is_some_and(|(_, c)| c.is_whitespace()) {
            self.i += 1;
        }
    }

    fn pos(&mut self) -> usize {
        self.skip_ws();
        self.chars.get(self.i).map_or(self.src.len(), |&(p, _)| p)
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.i).map(|&(_, c)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&mut self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos(), msg: msg.into() })
    }

    /// A run of digits with no whitespace inside.
    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.i;
        while self.chars.get(self.i).is_some_and(|(_, c)| c.is_ascii_digit()) {
            self.i += 1;
        }
        (self.i > start).then(|| self.chars[start..self.i].iter().map(|&(_, c)| c).collect())
    }

    fn sign(&mut self) -> Option<bool> {
        if self.eat('+') {
            Some(false)
        } else if self.eat('-') || self.eat('−') {
            Some(true)
        } else {
            None
        }
    }
}

/// Parse `text` as a Laurent polynomial in `t1..tn`.
pub fn parse_laurent(text: &str, n: usize) -> Result<LaurentPolynomial> {
    let mut lx = Lexer::new(text);
    if lx.peek().is_none() {
        return lx.err("empty expression");
    }
    let mut terms: Vec<(ExponentVector, Rational)> = Vec::new();
    let mut first = true;
    while lx.peek().is_some() {
        let negative = match lx.sign() {
            Some(s) => s,
            None if first => false,
            None => return lx.err("expected '+' or '-'"),
        };
        first = false;
        let (exp, mut coeff) = term(&mut lx, n)?;
        if negative {
            coeff = -coeff;
        }
        terms.push((exp, coeff));
    }
    LaurentPolynomial::from_terms(n, terms)
}

fn term(lx: &mut Lexer<'_>, n: usize) -> Result<(ExponentVector, Rational)> {
    let mut coeff = Rational::one();
    let mut has_coeff = false;
    if let Some(num) = lx.digits() {
        has_coeff = true;
        let num: BigInt = num.parse().expect("digits");
        let den = if lx.eat('/') {
            let at = lx.pos();
            let Some(d) = lx.digits() else {
                return lx.err("expected a denominator");
            };
            let d: BigInt = d.parse().expect("digits");
            if d.is_zero() {
                return Err(Error::ZeroDenominator(at));
            }
            d
        } else {
            BigInt::one()
        };
        coeff = Rational::new(num, den);
    }
    let star = has_coeff && lx.eat('*');
    let mut exp = vec![0i64; n];
    let mut factors = 0;
    loop {
        if factors > 0 && lx.eat('*') && lx.peek() != Some('t') {
            return lx.err("expected a factor after '*'");
        }
        if lx.peek() != Some('t') {
            break;
        }
        lx.i += 1;
        let at = lx.pos();
        let Some(idx) = lx.digits() else {
            return lx.err("expected a variable index");
        };
        let index: usize = idx.parse().map_err(|_| Error::Parse { pos: at, msg: "index too large".into() })?;
        if index == 0 || index > n {
            return Err(Error::IndexOutOfRange { index, n });
        }
        let mut e = 1i64;
        if lx.eat('^') {
            let neg = lx.sign().unwrap_or(false);
            let at = lx.pos();
            let Some(d) = lx.digits() else {
                return lx.err("expected an exponent");
            };
            e = d.parse().map_err(|_| Error::Parse { pos: at, msg: "exponent too large".into() })?;
            if neg {
                e = -e;
            }
        }
        exp[index - 1] += e;
        factors += 1;
    }
    if !has_coeff && factors == 0 {
        return lx.err("expected a coefficient or a variable");
    }
    if star && factors == 0 {
        return lx.err("expected a factor after '*'");
    }
    Ok((ExponentVector::new(exp), coeff))
}

/// Text form that reparses to the same polynomial; terms in exponent order.
pub fn format_laurent(f: &LaurentPolynomial) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (e, c)) in f.terms().enumerate() {
        let negative = c < &Rational::zero();
        let abs = if negative { -c.clone() } else { c.clone() };
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let factors: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| if x == 1 { format!("t{}", i + 1) } else { format!("t{}^{x}", i + 1) })
            .collect();
        if factors.is_empty() {
            out.push_str(&format_rational_short(&abs));
        } else {
            if !abs.is_one() {
                out.push_str(&format_rational_short(&abs));
                out.push('*');
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exp: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}

/// A polynomial as a term list or as text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyInput {
    Terms(PolyJson),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobJson {
    pub n: usize,
    pub system: Vec<PolyInput>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f0: Option<PolyInput>,
}

impl PolyJson {
    pub fn from_polynomial(f: &LaurentPolynomial) -> Self {
        PolyJson {
            terms: f.terms().map(|(e, c)| TermJson { coeff: format_rational(c), exp: e.to_vec() }).collect(),
        }
    }

    pub fn to_polynomial(&self, n: usize) -> Result<LaurentPolynomial> {
        let terms = self
            .terms
            .iter()
            .enumerate()
            .map(|(i, t)| {
                if t.exp.len() != n {
                    return Err(Error::DimensionMismatch { expected: n, found: t.exp.len() });
                }
                let c = parse_rational(&t.coeff)
                    .ok_or_else(|| Error::Parse { pos: i, msg: format!("bad coefficient {:?}", t.coeff) })?;
                Ok((ExponentVector::new(t.exp.clone()), c))
            })
            .collect::<Result<Vec<_>>>()?;
        LaurentPolynomial::from_terms(n, terms)
    }
}

impl PolyInput {
    pub fn to_polynomial(&self, n: usize) -> Result<LaurentPolynomial> {
        match self {
            PolyInput::Terms(t) => t.to_polynomial(n),
            PolyInput::Text(s) => parse_laurent(s, n),
        }
    }
}

/// Parsed JSON job: `(n, system, f0)`.
pub fn parse_job_json(text: &str) -> Result<(usize, Vec<LaurentPolynomial>, Option<LaurentPolynomial>)> {
    let job: JobJson = serde_json::from_str(text)
        .map_err(|e| Error::Parse { pos: e.column(), msg: format!("invalid job JSON: {e}") })?;
    if job.n == 0 {
        return Err(Error::Parse { pos: 0, msg: "n must be positive".into() });
    }
    let system = job.system.iter().map(|p| p.to_polynomial(job.n)).collect::<Result<_>>()?;
    let f0 = job.f0.as_ref().map(|p| p.to_polynomial(job.n)).transpose()?;
    Ok((job.n, system, f0))
}
