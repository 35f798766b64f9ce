use num_bigint::BigUint;

use super::letter::{Indexed, Letter};
use super::normal::NormalForm;
use super::{Byleen, ByleenError};
use crate::finite::Element;

fn parse_error(msg: impl Into<String>) -> ByleenError {
    ByleenError::Parse(msg.into())
}

fn parse_element(text: &str, order: usize) -> Result<Element, ByleenError> {
    let digits = text.strip_prefix('s').unwrap_or(text);
    let s: Element = digits
        .parse()
        .map_err(|_| parse_error(format!("bad base element `{text}`")))?;
    if s >= order {
        return Err(parse_error(format!(
            "base element s{s} out of range for order {order}"
        )));
    }
    Ok(s)
}

/// Parses `a(n,si)`, `b(n,si)` (the `s` is optional), `si`, or `1`.
pub fn parse_letter(token: &str, order: usize, identity: Element) -> Result<Letter, ByleenError> {
    if token == "1" {
        return Ok(Letter::S(identity));
    }
    let indexed = |body: &str| -> Result<Indexed, ByleenError> {
        let inner = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(|| parse_error(format!("expected `(n,s)` in `{token}`")))?;
        let (n, s) = inner
            .split_once(',')
            .ok_or_else(|| parse_error(format!("expected `(n,s)` in `{token}`")))?;
        let n: BigUint = n
            .trim()
            .parse()
            .map_err(|_| parse_error(format!("bad index in `{token}`")))?;
        Ok(Indexed {
            n,
            s: parse_element(s.trim(), order)?,
        })
    };
    if let Some(body) = token.strip_prefix('a') {
        Ok(Letter::A(indexed(body)?))
    } else if let Some(body) = token.strip_prefix('b') {
        Ok(Letter::B(indexed(body)?))
    } else if token.starts_with('s') {
        Ok(Letter::S(parse_element(token, order)?))
    } else {
        Err(parse_error(format!("unknown letter `{token}`")))
    }
}

/// Parses whitespace-separated letters and reduces the word.
pub fn parse_word(monoid: &Byleen, text: &str) -> Result<NormalForm, ByleenError> {
    let order = monoid.base().order();
    let identity = monoid.base_identity();
    let letters = text
        .split_whitespace()
        .map(|tok| parse_letter(tok, order, identity))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(monoid.reduce(&letters))
}
