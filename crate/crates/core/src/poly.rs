//! Sparse Laurent polynomials in `v` with integer coefficients.
//!
//! Kostka-Foulkes polynomials live here too, with `q = v²`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentPoly {
    #[serde(rename = "v_coeffs")]
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c·v^k`.
    pub fn monomial(c: i64, k: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(c, k);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(c, k);
        }
        p
    }

    /// Adds `c·v^k` in place.
    pub fn add_term(&mut self, c: i64, k: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(k).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&k);
        }
    }

    pub fn coeff(&self, k: i64) -> i64 {
        self.coeffs.get(&k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    pub fn eval_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(|&c| c > 0)
    }

    /// Re-index by `q = v²`; keys are `q`-exponents as `(numerator, denominator)`
    /// in lowest terms with denominator 1 or 2.
    pub fn as_q_poly(&self) -> BTreeMap<(i64, i64), i64> {
        self.coeffs
            .iter()
            .map(|(&k, &c)| {
                let key = if k % 2 == 0 { (k / 2, 1) } else { (k, 2) };
                (key, c)
            })
            .collect()
    }

    /// Text rendering in `q`, half-integer exponents written as fractions.
    pub fn to_q_string(&self) -> String {
        render(self.coeffs.iter().map(|(&k, &c)| {
            let e = if k % 2 == 0 {
                (k / 2).to_string()
            } else {
                format!("{k}/2")
            };
            (k, e, c)
        }), "q")
    }
}

// Shared renderer: `terms` yields (raw exponent, printed exponent, coefficient).
fn render<I: Iterator<Item = (i64, String, i64)>>(terms: I, var: &str) -> String {
    let mut out = String::new();
    for (raw, exp, c) in terms {
        let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
        if out.is_empty() {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let mono = match raw {
            0 => String::new(),
            _ if exp == "1" => var.to_string(),
            _ => format!("{var}^{exp}"),
        };
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag == 1 {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = render(
            self.coeffs.iter().map(|(&k, &c)| (k, k.to_string(), c)),
            "v",
        );
        f.write_str(&s)
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the canonical text form, e.g. `"-v^-2 + 3 + 2v^5"`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("not a Laurent polynomial: {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        if compact == "0" {
            return Ok(Self::zero());
        }
        // split into signed chunks, keeping the '-' of exponents like v^-2
        let mut chunks = Vec::new();
        let mut cur = String::new();
        let mut prev = '\0';
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && prev != '^' && !cur.is_empty() {
                chunks.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
            prev = ch;
        }
        chunks.push(cur);

        let mut p = Self::zero();
        for chunk in chunks {
            let (neg, body) = match chunk.as_bytes().first() {
                Some(b'-') => (true, &chunk[1..]),
                Some(b'+') => (false, &chunk[1..]),
                _ => (false, chunk.as_str()),
            };
            let (coef, exp) = match body.find('v') {
                None => (body.parse::<i64>().map_err(|_| bad())?, 0),
                Some(pos) => {
                    let c = if pos == 0 {
                        1
                    } else {
                        body[..pos].parse::<i64>().map_err(|_| bad())?
                    };
                    let rest = &body[pos + 1..];
                    let e = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .ok_or_else(bad)?
                            .parse::<i64>()
                            .map_err(|_| bad())?
                    };
                    (c, e)
                }
            };
            p.add_term(if neg { -coef } else { coef }, exp);
        }
        Ok(p)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&k, &c) in &rhs.coeffs {
            out.add_term(c, k);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&k, &c) in &rhs.coeffs {
            out.add_term(-c, k);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, &x) in &self.coeffs {
            for (&b, &y) in &rhs.coeffs {
                out.add_term(x * y, a + b);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&k, &c)| (k, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |a, b| &a + &b)
    }
}
