//! ESOP expression grammar.
//!
//! Terms are separated by `^`.  A term is `0`, `1`, or a juxtaposition of
//! literals; a literal is an identifier optionally prefixed by `!`.
//! Identifiers match `[a-z][a-z0-9]*` and whitespace between literals is
//! optional, so `a d` and `ad` both denote a·d when `ad` itself is not a
//! declared variable (a run of letters is split greedily into declared
//! names, longest prefix first).

use super::{Cube, EsopFunction, Literal, VarSet};
use crate::error::{Error, Result};

#[derive(Debug, PartialEq)]
enum Token {
    Xor,
    Bang,
    Zero,
    One,
    Ident(String),
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'^' => {
                tokens.push((i, Token::Xor));
                i += 1;
            }
            b'!' => {
                tokens.push((i, Token::Bang));
                i += 1;
            }
            b'0' => {
                tokens.push((i, Token::Zero));
                i += 1;
            }
            b'1' => {
                tokens.push((i, Token::One));
                i += 1;
            }
            b'a'..=b'z' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_lowercase() || bytes[i].is_ascii_digit())
                {
                    i += 1;
                }
                tokens.push((start, Token::Ident(text[start..i].to_string())));
            }
            _ => {
                return Err(Error::Syntax {
                    pos: i,
                    msg: format!("unexpected character `{}`", c as char),
                })
            }
        }
    }
    Ok(tokens)
}

/// Split a lexed identifier into declared variable names, longest prefix
/// first with backtracking.  `abd` over (a, b, d) yields [a, b, d]; an
/// unsplittable run is an unknown-variable error.
fn split_ident(ident: &str, vars: &VarSet) -> Option<Vec<usize>> {
    if ident.is_empty() {
        return Some(Vec::new());
    }
    let mut candidates: Vec<usize> = (0..vars.len())
        .filter(|&v| ident.starts_with(vars.name(v)))
        .collect();
    // longest prefix first
    candidates.sort_by_key(|&v| std::cmp::Reverse(vars.name(v).len()));
    for v in candidates {
        if let Some(mut rest) = split_ident(&ident[vars.name(v).len()..], vars) {
            rest.insert(0, v);
            return Some(rest);
        }
    }
    None
}

pub(super) fn parse_esop(text: &str, vars: &VarSet) -> Result<EsopFunction> {
    let tokens = lex(text)?;
    if tokens.is_empty() {
        return Err(Error::Syntax { pos: 0, msg: "empty expression".to_string() });
    }
    let mut f = EsopFunction::zero(vars);
    let mut term_start = 0usize;
    loop {
        let term_end = tokens[term_start..]
            .iter()
            .position(|(_, t)| *t == Token::Xor)
            .map(|p| term_start + p)
            .unwrap_or(tokens.len());
        let term = &tokens[term_start..term_end];
        // a None cube is the 0 term and contributes nothing
        if let Some(cube) = parse_term(term, text.len(), vars)? {
            f.toggle(cube);
        }
        if term_end == tokens.len() {
            break;
        }
        term_start = term_end + 1;
        if term_start == tokens.len() {
            let (pos, _) = tokens[term_end];
            return Err(Error::Syntax { pos, msg: "dangling `^`".to_string() });
        }
    }
    Ok(f)
}

fn parse_term(term: &[(usize, Token)], text_len: usize, vars: &VarSet) -> Result<Option<Cube>> {
    match term {
        [] => Err(Error::Syntax { pos: text_len, msg: "empty term".to_string() }),
        [(_, Token::Zero)] => Ok(None),
        [(_, Token::One)] => Ok(Some(Cube::ONE)),
        _ => {
            let mut literals: Vec<(usize, Literal)> = Vec::new();
            let mut i = 0;
            while i < term.len() {
                let (pos, tok) = &term[i];
                let negated = *tok == Token::Bang;
                if negated {
                    i += 1;
                    if i == term.len() {
                        return Err(Error::Syntax {
                            pos: *pos,
                            msg: "`!` must be followed by a variable".to_string(),
                        });
                    }
                }
                let (pos, tok) = &term[i];
                let ident = match tok {
                    Token::Ident(s) => s,
                    Token::Zero | Token::One => {
                        return Err(Error::Syntax {
                            pos: *pos,
                            msg: "constants cannot be mixed with literals".to_string(),
                        })
                    }
                    _ => {
                        return Err(Error::Syntax { pos: *pos, msg: "expected a variable".to_string() })
                    }
                };
                let split = split_ident(ident, vars)
                    .ok_or_else(|| Error::UnknownVariable(ident.clone()))?;
                for (j, &v) in split.iter().enumerate() {
                    // `!` binds to the first variable of a juxtaposed run
                    let lit = if negated && j == 0 { Literal::Negative } else { Literal::Positive };
                    literals.push((v, lit));
                }
                i += 1;
            }
            let mut cube = Cube::ONE;
            for (v, lit) in literals {
                match cube.literal(v) {
                    Literal::Absent => cube = cube.with(v, lit),
                    prev if prev == lit => {} // x·x = x
                    _ => return Ok(None),     // x·x̄ = 0
                }
            }
            Ok(Some(cube))
        }
    }
}
