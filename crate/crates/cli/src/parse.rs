//! Flag-value parsers for set literals and membership rules, with byte
//! positions in the error messages.

use apractical::rule::SetRule;

#[derive(Debug)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "at byte {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

fn err(pos: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        pos,
        msg: msg.into(),
    }
}

/// Comma-separated positive integers; `base` offsets reported positions
/// into the surrounding literal.
pub fn int_list(s: &str, base: usize) -> Result<Vec<u64>, ParseError> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pos = 0usize;
    for piece in s.split(',') {
        let v: u64 = piece
            .trim()
            .parse()
            .map_err(|_| err(base + pos, format!("expected a positive integer, got {piece:?}")))?;
        if v == 0 {
            return Err(err(base + pos, "set elements must be positive"));
        }
        out.push(v);
        pos += piece.len() + 1;
    }
    Ok(out)
}

fn single_int(s: &str, base: usize, what: &str) -> Result<u64, ParseError> {
    s.trim()
        .parse()
        .map_err(|_| err(base, format!("expected {what}, got {s:?}")))
}

/// Rule syntax: `all`, `pow2`, `pow2:K`, `smooth:P1,P2`, `ap:A,B`,
/// `explicit:E1,E2,…`, `complement:LO..HI`.
pub fn rule(s: &str) -> Result<SetRule, ParseError> {
    let (head, rest) = match s.find(':') {
        Some(i) => (&s[..i], Some((&s[i + 1..], i + 1))),
        None => (s, None),
    };
    match (head, rest) {
        ("all", None) => Ok(SetRule::complement_of_range(1, 1, vec![]).expect("static")),
        ("pow2", None) => Ok(SetRule::powers_of_two()),
        ("pow2", Some((args, base))) => {
            let k = single_int(args, base, "an exponent")?;
            Ok(SetRule::PowersOfTwo {
                max_exp: Some(k as u32),
            })
        }
        ("smooth", Some((args, base))) => {
            let primes = int_list(args, base)?;
            SetRule::smooth_closure(primes).map_err(|e| err(base, e.to_string()))
        }
        ("ap", Some((args, base))) => {
            let parts = int_list(args, base)?;
            if parts.len() != 2 {
                return Err(err(base, "ap needs exactly two values: first,step"));
            }
            SetRule::arithmetic_progression(parts[0], parts[1])
                .map_err(|e| err(base, e.to_string()))
        }
        ("explicit", Some((args, base))) => {
            let elems = int_list(args, base)?;
            SetRule::explicit(elems).map_err(|e| err(base, e.to_string()))
        }
        ("complement", Some((args, base))) => {
            let (lo_s, hi_s) = args
                .split_once("..")
                .ok_or_else(|| err(base, "complement needs LO..HI"))?;
            let lo = single_int(lo_s, base, "a lower bound")?;
            let hi = single_int(hi_s, base + lo_s.len() + 2, "an upper bound")?;
            SetRule::complement_of_range(lo, hi, vec![]).map_err(|e| err(base, e.to_string()))
        }
        _ => Err(err(
            0,
            format!(
                "unknown rule {head:?}; expected all, pow2[:K], smooth:…, ap:A,B, explicit:…, complement:LO..HI"
            ),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_round_trips() {
        assert!(rule("pow2").is_ok());
        assert!(rule("pow2:5").is_ok());
        assert!(rule("smooth:2,3").is_ok());
        assert!(rule("ap:1,2").is_ok());
        assert!(rule("explicit:1,2,3").is_ok());
        assert!(rule("complement:3..7").is_ok());
        assert!(rule("all").is_ok());
    }

    #[test]
    fn errors_carry_positions() {
        let e = rule("explicit:1,x,3").unwrap_err();
        assert_eq!(e.pos, 11);
        let e = rule("smooth:4").unwrap_err();
        assert_eq!(e.pos, 7);
        let e = rule("nope").unwrap_err();
        assert_eq!(e.pos, 0);
        let e = int_list("1,,2", 0).unwrap_err();
        assert_eq!(e.pos, 2);
    }
}
