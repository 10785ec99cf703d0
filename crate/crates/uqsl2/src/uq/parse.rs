//! Textual syntax for U_q(sl2) elements.
//!
//! Extends the scalar grammar with the generator atoms `E`, `F`, `K` and
//! the Casimir shorthands `Cas` (normalized) and `Cas'` (unnormalized).
//! Multiplication is noncommutative in the written order; `^` takes an
//! integer exponent, negative only on invertible elements (units c*K^j).

use crate::scalars::parse::{Cursor, ParseError, Tok};
use crate::scalars::Scalar;

use super::{UqAlgebra, UqElement};

/// Parse an element in the algebra's field mode.
pub fn parse_element(alg: &UqAlgebra, text: &str) -> Result<UqElement, ParseError> {
    let mut cur = Cursor::new(text)?;
    let value = parse_expr(alg, &mut cur)?;
    if !cur.at_end() {
        return Err(ParseError::new("trailing input", cur.pos()));
    }
    Ok(value)
}

fn parse_expr(alg: &UqAlgebra, cur: &mut Cursor) -> Result<UqElement, ParseError> {
    let mut acc = parse_term(alg, cur)?;
    loop {
        if cur.eat(&Tok::Plus) {
            acc = acc.add(&parse_term(alg, cur)?);
        } else if cur.eat(&Tok::Minus) {
            acc = acc.sub(&parse_term(alg, cur)?);
        } else {
            return Ok(acc);
        }
    }
}

fn starts_factor(tok: &Tok) -> bool {
    matches!(
        tok,
        Tok::Int(_) | Tok::LParen | Tok::LBracket | Tok::Ident(_)
    )
}

fn parse_term(alg: &UqAlgebra, cur: &mut Cursor) -> Result<UqElement, ParseError> {
    let mut acc = parse_unary(alg, cur)?;
    loop {
        if cur.eat(&Tok::Star) {
            let rhs = parse_unary(alg, cur)?;
            acc = mul(alg, &acc, &rhs, cur.pos())?;
        } else if cur.eat(&Tok::Slash) {
            let pos = cur.pos();
            let rhs = parse_unary(alg, cur)?;
            let inv = invert(alg, &rhs, pos)?;
            acc = mul(alg, &acc, &inv, pos)?;
        } else if cur.peek().map_or(false, starts_factor) {
            let pos = cur.pos();
            let rhs = parse_unary(alg, cur)?;
            acc = mul(alg, &acc, &rhs, pos)?;
        } else {
            return Ok(acc);
        }
    }
}

fn parse_unary(alg: &UqAlgebra, cur: &mut Cursor) -> Result<UqElement, ParseError> {
    if cur.eat(&Tok::Minus) {
        return Ok(parse_unary(alg, cur)?.neg());
    }
    parse_postfix(alg, cur)
}

fn parse_postfix(alg: &UqAlgebra, cur: &mut Cursor) -> Result<UqElement, ParseError> {
    let base = parse_atom(alg, cur)?;
    if cur.eat(&Tok::Caret) {
        let pos = cur.pos();
        let e = cur.signed_int()?;
        return alg
            .power(&base, e)
            .map_err(|err| ParseError::new(err.to_string(), pos));
    }
    Ok(base)
}

fn parse_atom(alg: &UqAlgebra, cur: &mut Cursor) -> Result<UqElement, ParseError> {
    let pos = cur.pos();
    let mode = alg.mode();
    match cur.peek() {
        Some(Tok::Ident(w)) if w == "E" => {
            cur.next();
            Ok(alg.e())
        }
        Some(Tok::Ident(w)) if w == "F" => {
            cur.next();
            Ok(alg.f())
        }
        Some(Tok::Ident(w)) if w == "K" => {
            cur.next();
            Ok(alg.k(1))
        }
        Some(Tok::Ident(w)) if w == "Cas" => {
            cur.next();
            Ok(alg.casimir_q())
        }
        Some(Tok::Ident(w)) if w == "Cas'" => {
            cur.next();
            Ok(alg.casimir_q_prime())
        }
        Some(Tok::Ident(w)) if w == "q" => {
            cur.next();
            Ok(scalar_elem(mode.q()))
        }
        Some(Tok::Int(_)) => {
            let s = crate::scalars::parse::parse_scalar_atom(cur, mode)?;
            Ok(scalar_elem(s))
        }
        Some(Tok::LBracket) => {
            let s = crate::scalars::parse::parse_scalar_atom(cur, mode)?;
            Ok(scalar_elem(s))
        }
        Some(Tok::LParen) => {
            cur.next();
            let inner = parse_expr(alg, cur)?;
            cur.expect(&Tok::RParen)?;
            Ok(inner)
        }
        Some(t) => Err(ParseError::new(
            format!("unexpected token '{}' in element expression", t),
            pos,
        )),
        None => Err(ParseError::new("unexpected end of input", pos)),
    }
}

fn scalar_elem(s: Scalar) -> UqElement {
    UqElement::monomial(super::KEY_ONE, s)
}

fn mul(
    alg: &UqAlgebra,
    a: &UqElement,
    b: &UqElement,
    pos: usize,
) -> Result<UqElement, ParseError> {
    alg.multiply(a, b)
        .map_err(|e| ParseError::new(e.to_string(), pos))
}

fn invert(alg: &UqAlgebra, x: &UqElement, pos: usize) -> Result<UqElement, ParseError> {
    alg.power(x, -1)
        .map_err(|e| ParseError::new(e.to_string(), pos))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::FieldMode;

    #[test]
    fn parses_generators_and_casimir() {
        let alg = UqAlgebra::new(FieldMode::Generic);
        assert_eq!(parse_element(&alg, "E").unwrap(), alg.e());
        assert_eq!(parse_element(&alg, "K^-2").unwrap(), alg.k(-2));
        assert_eq!(parse_element(&alg, "Cas").unwrap(), alg.casimir_q());
        assert_eq!(parse_element(&alg, "Cas'").unwrap(), alg.casimir_q_prime());
        let ek = alg.multiply(&alg.e(), &alg.k(1)).unwrap();
        assert_eq!(parse_element(&alg, "E K").unwrap(), ek);
        assert_eq!(parse_element(&alg, "E*K").unwrap(), ek);
    }

    #[test]
    fn scalar_coefficients() {
        let alg = UqAlgebra::new(FieldMode::Generic);
        let m = alg.mode();
        let expected = alg.e().scale(&(&m.q_pow(2) * &m.integer(3)));
        assert_eq!(parse_element(&alg, "3q^2 E").unwrap(), expected);
        let div = parse_element(&alg, "(K - K^-1)/(q - q^-1)").unwrap();
        let s = (&m.q_pow(1) - &m.q_pow(-1)).invert().unwrap();
        let expected = alg.k(1).sub(&alg.k(-1)).scale(&s);
        assert_eq!(div, expected);
    }

    #[test]
    fn rejects_bad_inverse() {
        let alg = UqAlgebra::new(FieldMode::Generic);
        assert!(parse_element(&alg, "E^-1").is_err());
        assert!(parse_element(&alg, "(E + F)^-1").is_err());
    }

    #[test]
    fn roundtrips_display() {
        let alg = UqAlgebra::new(FieldMode::Generic);
        for text in ["Cas", "E^2 K^-1 F", "F E", "K^3 - 2"] {
            let v = parse_element(&alg, text).unwrap();
            assert_eq!(parse_element(&alg, &v.to_string()).unwrap(), v);
        }
    }
}
