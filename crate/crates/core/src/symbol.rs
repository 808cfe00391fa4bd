//! The signed symbol of `n+1` monomials and its vertex and flag specializations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::rational::{format_rational, pow_big};
use crate::exactalg::{ExponentMatrix, ExponentVector, LaurentPolynomial, Monomial, Rational};
use crate::flags::flag_sign;
use crate::polytope::MinkowskiSystem;

/// `n+1` monomials in dimension `n` with their exponent matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolInput {
    monomials: Vec<Monomial>,
    matrix: ExponentMatrix,
}

impl SymbolInput {
    pub fn new(monomials: Vec<Monomial>) -> Result<Self> {
        let matrix = ExponentMatrix::new(monomials.iter().map(|m| m.exp().clone()).collect())?;
        Ok(SymbolInput { monomials, matrix })
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn matrix(&self) -> &ExponentMatrix {
        &self.matrix
    }
}

/// `B = Σ_k Σ_{i<j} a_ik a_jk A_ij^k mod 2`.
pub fn sign_exponent_b(a: &ExponentMatrix) -> u8 {
    let n = a.n();
    let mut b = BigInt::zero();
    for k in 0..n {
        for i in 0..=n {
            for j in i + 1..=n {
                let (x, y) = (a.entry(i, k), a.entry(j, k));
                if x % 2 == 0 || y % 2 == 0 {
                    continue;
                }
                b += a.double_row_column_minor(i, j, k);
            }
        }
    }
    if b.is_odd() {
        1
    } else {
        0
    }
}

/// Symbol as a sign and a list of `(base, exponent)` factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredSymbol {
    pub negative: bool,
    pub factors: Vec<(Rational, BigInt)>,
}

impl FactoredSymbol {
    pub fn evaluate(&self) -> Rational {
        let mut v = Rational::one();
        for (c, e) in &self.factors {
            v *= pow_big(c, e);
        }
        if self.negative {
            -v
        } else {
            v
        }
    }
}

#[derive(Serialize)]
struct FactorJson {
    base: String,
    exponent: String,
}

impl Serialize for FactoredSymbol {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("FactoredSymbol", 2)?;
        st.serialize_field("sign", if self.negative { &-1 } else { &1 })?;
        let f: Vec<FactorJson> = self
            .factors
            .iter()
            .map(|(c, e)| FactorJson { base: format_rational(c), exponent: e.to_string() })
            .collect();
        st.serialize_field("factors", &f)?;
        st.end()
    }
}

/// `(−1)^B ∏ c_i^{(−1)^i A_i}` in factored form; trivial factors are omitted.
pub fn symbol_factored(inp: &SymbolInput) -> FactoredSymbol {
    let a = &inp.matrix;
    let factors = inp
        .monomials
        .iter()
        .enumerate()
        .filter_map(|(i, m)| {
            let ai = a.row_deleted_minor(i);
            let e = if i % 2 == 0 { ai } else { -ai };
            (!e.is_zero() && !m.coeff().is_one()).then(|| (m.coeff().clone(), e))
        })
        .collect();
    FactoredSymbol { negative: sign_exponent_b(a) == 1, factors }
}

pub fn symbol_of_monomials(inp: &SymbolInput) -> Rational {
    symbol_factored(inp).evaluate()
}

/// Monomials `[f₀, f₁(A₁)t^{A₁}, …, fₙ(Aₙ)t^{Aₙ}]` at total vertex `vertex`.
pub fn vertex_symbol_input(
    f0: &Monomial,
    system: &[LaurentPolynomial],
    ms: &MinkowskiSystem,
    vertex: usize,
) -> Result<SymbolInput> {
    if system.len() != ms.n() {
        return Err(Error::CountMismatch { expected: ms.n(), found: system.len() });
    }
    if vertex >= ms.total().vertices().len() {
        return Err(Error::VertexNotInFace);
    }
    let mut monomials = vec![f0.clone()];
    for (f, a) in system.iter().zip(ms.vertex_decomposition(vertex)) {
        let a = ExponentVector::new(a);
        let c = f.coeff(&a);
        if c.is_zero() {
            return Err(Error::NotAVertex(a.to_vec()));
        }
        monomials.push(Monomial::new(c, a)?);
    }
    SymbolInput::new(monomials)
}

/// `[f₀,…,fₙ]_A`.
pub fn vertex_symbol(
    f0: &Monomial,
    system: &[LaurentPolynomial],
    ms: &MinkowskiSystem,
    vertex: usize,
) -> Result<Rational> {
    Ok(symbol_of_monomials(&vertex_symbol_input(f0, system, ms, vertex)?))
}

/// `[f₀,…,fₙ]_{X₀}^{sgn F}` for a flag of face indices ending at the total.
pub fn parshin_symbol_at_flag(
    f0: &Monomial,
    system: &[LaurentPolynomial],
    ms: &MinkowskiSystem,
    chain: &[usize],
) -> Result<Rational> {
    let total = ms.total();
    let s = flag_sign(total, chain)?;
    let vertex = total.face(chain[0]).vertices[0];
    let v = vertex_symbol(f0, system, ms, vertex)?;
    Ok(if s > 0 { v } else { v.recip() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::{int, rat};
    use crate::polytope::{int_point, Polytope};

    fn mono(c: Rational, e: &[i64]) -> Monomial {
        Monomial::new(c, e.to_vec().into()).unwrap()
    }

    fn matrix(rows: &[&[i64]]) -> ExponentMatrix {
        ExponentMatrix::new(rows.iter().map(|r| r.to_vec().into()).collect()).unwrap()
    }

    #[test]
    fn sign_exponent_examples() {
        assert_eq!(sign_exponent_b(&matrix(&[&[1], &[1]])), 1);
        assert_eq!(sign_exponent_b(&matrix(&[&[0], &[5]])), 0);
        assert_eq!(sign_exponent_b(&matrix(&[&[1, 1], &[1, 0], &[0, 1]])), 0);
    }

    #[test]
    fn monomial_symbol_examples() {
        let s = |ms: Vec<Monomial>| symbol_of_monomials(&SymbolInput::new(ms).unwrap());
        assert_eq!(s(vec![mono(int(2), &[1]), mono(int(3), &[0])]), rat(1, 3));
        assert_eq!(s(vec![mono(int(7), &[0]), mono(int(7), &[0])]), int(1));
        assert_eq!(
            s(vec![mono(int(2), &[0, 0]), mono(int(3), &[1, 0]), mono(int(5), &[0, 1])]),
            int(2)
        );
        // Tame symbol at 0 of t and −t: (−1)^{1}·1·(−1)^{−1} = 1.
        assert_eq!(s(vec![mono(int(1), &[1]), mono(int(-1), &[1])]), int(1));
    }

    #[test]
    fn shape_errors() {
        let ms = vec![mono(int(1), &[1, 0]), mono(int(2), &[0, 1])];
        assert!(matches!(SymbolInput::new(ms), Err(Error::Shape(_))));
    }

    #[test]
    fn transversal_point() {
        // Exponent rows: zero, then lower triangular with multiplicities on the diagonal.
        let f0x = rat(-5, 7);
        let inp = SymbolInput::new(vec![
            mono(f0x.clone(), &[0, 0, 0]),
            mono(rat(3, 2), &[2, 0, 0]),
            mono(int(-4), &[5, 3, 0]),
            mono(rat(1, 9), &[-1, 7, 1]),
        ])
        .unwrap();
        assert_eq!(symbol_of_monomials(&inp), crate::exactalg::rational::pow(&f0x, 6));
    }

    fn square() -> (Vec<LaurentPolynomial>, MinkowskiSystem) {
        let f1 = LaurentPolynomial::from_int_terms(2, &[(&[1, 0], 1), (&[0, 0], -2)]);
        let f2 = LaurentPolynomial::from_int_terms(2, &[(&[0, 1], 1), (&[0, 0], -3)]);
        let ms = MinkowskiSystem::new(vec![
            f1.newton_polytope().unwrap(),
            f2.newton_polytope().unwrap(),
        ])
        .unwrap();
        (vec![f1, f2], ms)
    }

    #[test]
    fn square_vertex_symbols() {
        let (sys, ms) = square();
        let f0 = mono(int(1), &[1, 1]);
        let v = |q: &[i64]| {
            let i = ms.total().vertex_index(&int_point(q)).unwrap();
            vertex_symbol(&f0, &sys, &ms, i).unwrap()
        };
        assert_eq!(v(&[1, 1]), int(1));
        assert_eq!(v(&[0, 0]), int(1));
        assert_eq!(v(&[1, 0]), rat(-1, 3));
        assert_eq!(v(&[0, 1]), rat(-1, 2));
    }

    #[test]
    fn square_flag_symbols() {
        let (sys, ms) = square();
        let f0 = mono(int(1), &[1, 1]);
        let t: &Polytope = ms.total();
        let face = |pts: &[&[i64]]| {
            let mut v: Vec<usize> = pts.iter().map(|p| t.vertex_index(&int_point(p)).unwrap()).collect();
            v.sort_unstable();
            t.face_by_vertices(&v).unwrap()
        };
        let top = [face(&[&[1, 1]]), face(&[&[0, 1], &[1, 1]]), t.improper_face()];
        assert_eq!(parshin_symbol_at_flag(&f0, &sys, &ms, &top).unwrap(), int(1));
        let bottom = [face(&[&[1, 0]]), face(&[&[0, 0], &[1, 0]]), t.improper_face()];
        assert_eq!(parshin_symbol_at_flag(&f0, &sys, &ms, &bottom).unwrap(), int(-3));
    }

    #[test]
    fn factored_form_matches_value() {
        let inp = SymbolInput::new(vec![
            mono(rat(2, 3), &[1, 2]),
            mono(int(-5), &[3, -1]),
            mono(rat(7, 4), &[0, 2]),
        ])
        .unwrap();
        let f = symbol_factored(&inp);
        assert_eq!(f.evaluate(), symbol_of_monomials(&inp));
        let json = serde_json::to_value(&f).unwrap();
        assert!(json["factors"].is_array());
    }
}
