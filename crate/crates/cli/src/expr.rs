//! Operand expressions: sums of products of basis-tagged generators such as
//! `p[2,1]` or `M[2]` and rational-function scalars.

use macdonald::symfun::{convert, p_multiply};
use macdonald::{Basis, Error, Partition, RatFun, Result, SymFun};

fn parse_error(position: usize, message: impl Into<String>) -> Error {
    Error::Parse { position, message: message.into() }
}

/// Splits at top-level occurrences of `seps`, keeping each separator with
/// the piece that follows it. Returns `(offset, separator, piece)`.
fn split_top(s: &str, seps: &[char]) -> Result<Vec<(usize, Option<char>, String)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut sep = None;
    let mut prev: Option<char> = None;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(parse_error(i, "unbalanced bracket"));
                }
            }
            // a sign right after `^`, `*`, `/` or an opening bracket is unary
            _ if depth == 0 && seps.contains(&c) && !matches!(prev, Some('^' | '*' | '/' | '(')) => {
                out.push((start, sep, s[start..i].to_string()));
                start = i + c.len_utf8();
                sep = Some(c);
            }
            _ => {}
        }
        if !c.is_whitespace() {
            prev = Some(c);
        }
    }
    if depth != 0 {
        return Err(parse_error(s.len(), "unbalanced bracket"));
    }
    out.push((start, sep, s[start..].to_string()));
    Ok(out)
}

fn generator(text: &str) -> Option<(Basis, &str)> {
    let text = text.trim();
    let open = text.find('[')?;
    if !text.ends_with(']') {
        return None;
    }
    let basis = match &text[..open] {
        "m" => Basis::M,
        "p" => Basis::P,
        "s" => Basis::S,
        "P" => Basis::HlP,
        "Q" => Basis::HlQ,
        "M" => Basis::MacM,
        _ => return None,
    };
    Some((basis, &text[open..]))
}

/// A product of generators and scalars: `(scalar, generators)`.
fn product(text: &str, offset: usize) -> Result<(RatFun, Vec<(Basis, Partition)>)> {
    let mut scalar = RatFun::one();
    let mut gens = Vec::new();
    for (pos, _, piece) in split_top(text, &['*'])? {
        let at = offset + pos;
        if piece.trim().is_empty() {
            return Err(parse_error(at, "empty factor"));
        }
        if let Some((basis, body)) = generator(&piece) {
            let l: Partition = body.parse().map_err(|_| parse_error(at, format!("bad partition in '{}'", piece.trim())))?;
            gens.push((basis, l));
        } else {
            let c: RatFun = piece.trim().parse().map_err(|e| match e {
                Error::Parse { position, message } => parse_error(at + position, message),
                other => other,
            })?;
            scalar *= &c;
        }
    }
    Ok((scalar, gens))
}

/// Parses an expression. Terms are brought to the basis of the first
/// generator met (the power sums if there is none); products of several
/// generators are formed in the power sums.
pub fn parse_expr(text: &str) -> Result<SymFun> {
    let mut terms = Vec::new();
    for (pos, sep, piece) in split_top(text, &['+', '-'])? {
        if piece.trim().is_empty() {
            if pos == 0 && sep.is_none() {
                continue;
            }
            return Err(parse_error(pos, "empty term"));
        }
        let (mut c, gens) = product(&piece, pos)?;
        if sep == Some('-') {
            c = -&c;
        }
        terms.push((c, gens));
    }
    if terms.is_empty() {
        return Err(parse_error(0, "empty expression"));
    }
    let target = terms.iter().flat_map(|(_, g)| g.first()).map(|(b, _)| *b).next().unwrap_or(Basis::P);
    let bound = terms.iter().map(|(_, g)| g.iter().map(|(_, l)| l.weight()).sum::<usize>()).max().unwrap_or(0);
    let mut acc = SymFun::zero(target, bound);
    for (c, gens) in terms {
        let term = match gens.len() {
            0 => SymFun::scalar(target, c, bound),
            1 => {
                let (b, l) = &gens[0];
                convert(&SymFun::basis_element(*b, l, bound).scale(&c), target)?
            }
            _ => {
                let mut prod = SymFun::scalar(Basis::P, c, bound);
                for (b, l) in &gens {
                    let g = convert(&SymFun::basis_element(*b, l, bound), Basis::P)?;
                    prod = p_multiply(&prod, &g, bound)?;
                }
                convert(&prod, target)?
            }
        };
        acc = acc.checked_add(&term)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_forms() {
        let f = parse_expr("p[1]").unwrap();
        assert_eq!(f.to_plain(), "p[1]");
        let f = parse_expr("-(1-q)/q*p[2] + 3*p[1,1]").unwrap();
        assert_eq!(f.coeff(&Partition::from([2])), "-(1-q)/q".parse().unwrap());
        assert_eq!(f.coeff(&Partition::from([1, 1])), RatFun::from_int(3));
        let f = parse_expr("q^-1*p[1]").unwrap();
        assert_eq!(f.coeff(&Partition::from([1])), "1/q".parse().unwrap());
        let f = parse_expr("p[1]*p[1] - p[1,1]").unwrap();
        assert!(f.is_zero());
        // mixed bases land in the first one
        let f = parse_expr("m[2] + m[1,1] - s[2]").unwrap();
        assert!(f.is_zero());
        assert_eq!(parse_expr("2").unwrap().coeff(&Partition::empty()), RatFun::from_int(2));
    }

    #[test]
    fn errors() {
        for bad in ["", "p[1] +", "p[1", "x[1]", "p[a]", "p[1] * * q"] {
            assert!(matches!(parse_expr(bad), Err(Error::Parse { .. })), "{bad}");
        }
    }
}
