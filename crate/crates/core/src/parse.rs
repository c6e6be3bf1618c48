//! Reader for the printed polynomial form.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! poly   := sign? term (sign term)*
//! term   := factor ('*' factor)*
//! factor := int ('/' int)? | 'i' | name ('^' int)? | '(' scalar ')'
//! ```

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::{MultiIndex, Polynomial, Space};
use crate::scalar::GaussianRational;

pub(crate) fn parse_polynomial(space: &Space, src: &str) -> Result<Polynomial> {
    let chars: Vec<char> = src.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || Error::Parse(String::from(src));
    if chars.is_empty() {
        return Err(err());
    }
    let mut out = Polynomial::zero(space);
    let mut pos = 0;
    loop {
        let mut sign = GaussianRational::one();
        if pos < chars.len() && (chars[pos] == '+' || chars[pos] == '-') {
            if chars[pos] == '-' {
                sign = -sign;
            }
            pos += 1;
        } else if pos > 0 {
            return Err(err());
        }
        let (coef, exps, next) = parse_term(space, &chars, pos).ok_or_else(err)?;
        out.add_term(exps, &(&sign * &coef));
        pos = next;
        if pos >= chars.len() {
            break;
        }
    }
    Ok(out)
}

fn parse_term(
    space: &Space,
    s: &[char],
    mut pos: usize,
) -> Option<(GaussianRational, MultiIndex, usize)> {
    let mut coef = GaussianRational::one();
    let mut exps = MultiIndex::zero(space.arity());
    loop {
        let c = *s.get(pos)?;
        if c.is_ascii_digit() {
            let (num, next) = read_int(s, pos)?;
            pos = next;
            let mut v = GaussianRational::from_rational(num.into());
            if s.get(pos) == Some(&'/') {
                let (den, next) = read_int(s, pos + 1)?;
                pos = next;
                if num_traits::Zero::is_zero(&den) {
                    return None;
                }
                v = &v / &GaussianRational::from_rational(den.into());
            }
            coef = &coef * &v;
        } else if c == '(' {
            let close = s[pos..].iter().position(|&x| x == ')')? + pos;
            let inner: String = s[pos + 1..close].iter().collect();
            let v: GaussianRational = inner.parse().ok()?;
            coef = &coef * &v;
            pos = close + 1;
        } else if c.is_ascii_alphabetic() {
            let start = pos;
            while pos < s.len() && (s[pos].is_ascii_alphanumeric() || s[pos] == '_') {
                pos += 1;
            }
            let name: String = s[start..pos].iter().collect();
            let mut e = 1u32;
            if s.get(pos) == Some(&'^') {
                let (v, next) = read_int(s, pos + 1)?;
                e = u32::try_from(v).ok()?;
                pos = next;
            }
            if name == "i" {
                coef = &coef * &GaussianRational::i().powi(e as i32);
            } else {
                let var = space.var(&name).ok()?;
                exps = exps.with(var, exps.exps()[var] + e);
            }
        } else {
            return None;
        }
        match s.get(pos) {
            Some('*') => pos += 1,
            Some('+') | Some('-') | None => return Some((coef, exps, pos)),
            _ => return None,
        }
    }
}

fn read_int(s: &[char], pos: usize) -> Option<(num_bigint::BigInt, usize)> {
    let mut end = pos;
    while end < s.len() && s[end].is_ascii_digit() {
        end += 1;
    }
    if end == pos {
        return None;
    }
    let digits: String = s[pos..end].iter().collect();
    Some((digits.parse().ok()?, end))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn reads_printed_forms() {
        let s = Space::phase(2);
        let p = Polynomial::parse(&s, "3/2*p1^2*q2").unwrap();
        assert_eq!(p.to_string(), "3/2*p1^2*q2");
        let p = Polynomial::parse(&s, "p1*q1 - 1/2*i").unwrap();
        assert_eq!(p.to_string(), "-1/2*i + p1*q1");
        let p = Polynomial::parse(&s, "(1/2+3/4*i)*q1 - q2^3").unwrap();
        assert_eq!(Polynomial::parse(&s, &p.to_string()).unwrap(), p);
        assert_eq!(Polynomial::parse(&s, "0").unwrap(), Polynomial::zero(&s));
    }

    #[test]
    fn rejects_garbage() {
        let s = Space::phase(1);
        for bad in ["", "p1 +", "z1", "p1^", "3/0", "p1 q1", "*p1"] {
            assert!(Polynomial::parse(&s, bad).is_err(), "{bad}");
        }
    }
}
