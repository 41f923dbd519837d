use crate::exact::{Poly, Rational, Ring};

/// Parse a polynomial in `x` written like `1 - 2/21x + 3x^2`.
pub fn parse_poly(s: &str) -> Result<Poly<Rational>, String> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty polynomial".into());
    }
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, c) in s.char_indices() {
        if (c == '+' || c == '-') && i > 0 && !s[..i].ends_with('^') {
            terms.push(&s[start..i]);
            start = i;
        }
    }
    terms.push(&s[start..]);
    let mut out = Poly::zero();
    for t in terms {
        out = out + &parse_term(t)?;
    }
    Ok(out)
}

fn parse_term(t: &str) -> Result<Poly<Rational>, String> {
    let (neg, body) = match t.as_bytes().first() {
        Some(b'-') => (true, &t[1..]),
        Some(b'+') => (false, &t[1..]),
        _ => (false, t),
    };
    let (coef, power) = match body.find('x') {
        None => (body, 0),
        Some(i) => {
            let rest = &body[i + 1..];
            let k = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .and_then(|e| e.parse::<usize>().ok())
                    .ok_or_else(|| format!("bad exponent in `{t}`"))?
            };
            (&body[..i], k)
        }
    };
    let c: Rational = if coef.is_empty() {
        Rational::one()
    } else {
        coef.parse().map_err(|_| format!("bad coefficient in `{t}`"))?
    };
    Ok(Poly::monomial(if neg { -c } else { c }, power))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn parses_display_forms() {
        assert_eq!(
            parse_poly("1 - 2/21x").unwrap(),
            Poly::new(vec![q(1, 1), q(-2, 21)])
        );
        assert_eq!(
            parse_poly("1-4x-16x^2").unwrap(),
            Poly::new(vec![q(1, 1), q(-4, 1), q(-16, 1)])
        );
        assert_eq!(parse_poly("-x^3").unwrap(), Poly::monomial(q(-1, 1), 3));
        assert_eq!(parse_poly("0").unwrap(), Poly::zero());
        assert_eq!(parse_poly("x").unwrap(), Poly::x());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly("1 - y").is_err());
        assert!(parse_poly("x^").is_err());
        assert!(parse_poly("").is_err());
    }
}
