//! Text formats: field spec files, generator matrix files, element
//! tokens, order files, and the monomial round-trip parser.
//!
//! Field file: line 1 holds `p r`, line 2 the r+1 modulus coefficients in
//! ascending degree. Matrix file: line 1 holds `n k`, then k rows of n
//! element tokens. Element tokens are either the integer encoding
//! c0 + c1*p + ... of the coefficient vector, or `g^j` power notation
//! (`g` alone means g^1). Lines starting with `#` and blank lines are
//! ignored everywhere.

use std::fmt;

use crate::crossing::{FieldVector, Monomial};
use crate::field::{FieldElement, FieldSpec};

/// A syntax error with its location; the path is whatever name the caller
/// hands in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub path: String,
    pub line: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.path, self.line, self.msg)
    }
}

impl std::error::Error for ParseError {}

fn err(path: &str, line: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        path: path.to_string(),
        line,
        msg: msg.into(),
    }
}

/// Content lines with their 1-based line numbers, comments stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parse a field file into (p, r, coefficients).
pub fn parse_field_file(text: &str, path: &str) -> Result<(u32, u32, Vec<u32>), ParseError> {
    let mut lines = content_lines(text);
    let (ln1, header) = lines
        .next()
        .ok_or_else(|| err(path, 1, "missing `p r` header line"))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(err(path, ln1, "expected exactly `p r`"));
    }
    let p: u32 = parts[0]
        .parse()
        .map_err(|_| err(path, ln1, format!("bad prime `{}`", parts[0])))?;
    let r: u32 = parts[1]
        .parse()
        .map_err(|_| err(path, ln1, format!("bad degree `{}`", parts[1])))?;
    let (ln2, coeff_line) = lines
        .next()
        .ok_or_else(|| err(path, ln1, "missing coefficient line"))?;
    let coeffs = coeff_line
        .split_whitespace()
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| err(path, ln2, format!("bad coefficient `{t}`")))
        })
        .collect::<Result<Vec<u32>, _>>()?;
    if let Some((ln, _)) = lines.next() {
        return Err(err(path, ln, "unexpected trailing content"));
    }
    Ok((p, r, coeffs))
}

/// Parse one element token in integer or power notation.
pub fn parse_element_token(tok: &str, spec: &FieldSpec) -> Result<FieldElement, String> {
    if let Some(rest) = tok.strip_prefix("g^") {
        let j: u32 = rest
            .parse()
            .map_err(|_| format!("bad exponent in `{tok}`"))?;
        if !(1..=spec.q() - 1).contains(&j) {
            return Err(format!(
                "exponent in `{tok}` out of range 1..{}",
                spec.q() - 1
            ));
        }
        return Ok(FieldElement::Pow(j));
    }
    if tok == "g" {
        return Ok(FieldElement::Pow(1));
    }
    let code: u32 = tok.parse().map_err(|_| format!("bad element `{tok}`"))?;
    spec.element_from_int(code)
        .ok_or_else(|| format!("element `{tok}` out of range 0..{}", spec.q() - 1))
}

/// Parse a matrix file against an already-built field.
pub fn parse_matrix_file(
    text: &str,
    path: &str,
    spec: &FieldSpec,
) -> Result<Vec<FieldVector>, ParseError> {
    let mut lines = content_lines(text);
    let (ln1, header) = lines
        .next()
        .ok_or_else(|| err(path, 1, "missing `n k` header line"))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(err(path, ln1, "expected exactly `n k`"));
    }
    let n: usize = parts[0]
        .parse()
        .map_err(|_| err(path, ln1, format!("bad length `{}`", parts[0])))?;
    let k: usize = parts[1]
        .parse()
        .map_err(|_| err(path, ln1, format!("bad dimension `{}`", parts[1])))?;
    if n == 0 || k == 0 {
        return Err(err(path, ln1, "n and k must be positive"));
    }
    let mut rows = Vec::with_capacity(k);
    for _ in 0..k {
        let (ln, row_line) = lines
            .next()
            .ok_or_else(|| err(path, ln1, format!("expected {k} rows")))?;
        let toks: Vec<&str> = row_line.split_whitespace().collect();
        if toks.len() != n {
            return Err(err(
                path,
                ln,
                format!("expected {n} entries, got {}", toks.len()),
            ));
        }
        let entries = toks
            .iter()
            .map(|t| parse_element_token(t, spec).map_err(|m| err(path, ln, m)))
            .collect::<Result<Vec<FieldElement>, _>>()?;
        rows.push(FieldVector::new(entries));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(err(path, ln, "unexpected trailing content"));
    }
    Ok(rows)
}

/// Parse an order file: the n(q-1) variables as `x[i,j]` tokens, highest
/// precedence first; must be a permutation.
pub fn parse_order_file(
    text: &str,
    path: &str,
    n: usize,
    q: u32,
) -> Result<Vec<usize>, ParseError> {
    let qm1 = (q - 1) as usize;
    let mut precedence = Vec::with_capacity(n * qm1);
    for (ln, line) in content_lines(text) {
        for tok in line.split_whitespace() {
            let (i, j) = parse_variable_token(tok).map_err(|m| err(path, ln, m))?;
            if i == 0 || i > n || j == 0 || j as usize > qm1 {
                return Err(err(path, ln, format!("variable `{tok}` out of range")));
            }
            precedence.push((i - 1) * qm1 + (j as usize - 1));
        }
    }
    Ok(precedence)
}

fn parse_variable_token(tok: &str) -> Result<(usize, u32), String> {
    let inner = tok
        .strip_prefix("x[")
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| format!("expected `x[i,j]`, got `{tok}`"))?;
    let (i_str, j_str) = inner
        .split_once(',')
        .ok_or_else(|| format!("expected `x[i,j]`, got `{tok}`"))?;
    let i = i_str
        .trim()
        .parse::<usize>()
        .map_err(|_| format!("bad coordinate in `{tok}`"))?;
    let j = j_str
        .trim()
        .parse::<u32>()
        .map_err(|_| format!("bad slot in `{tok}`"))?;
    Ok((i, j))
}

/// Parse a monomial in the printed format: `1`, or `x[i,j]` factors with
/// optional `^e` joined by `*`. Exponents of repeated variables add up.
pub fn parse_monomial(s: &str, n: usize, q: u32) -> Result<Monomial, String> {
    let s = s.trim();
    if s == "1" {
        return Ok(Monomial::one(n, q));
    }
    let qm1 = (q - 1) as usize;
    let mut exps = vec![0u32; n * qm1];
    for factor in s.split('*') {
        let factor = factor.trim();
        let (var, e) = match factor.split_once('^') {
            Some((v, e_str)) => {
                let e = e_str
                    .trim()
                    .parse::<u32>()
                    .map_err(|_| format!("bad exponent in `{factor}`"))?;
                if e == 0 {
                    return Err(format!("zero exponent in `{factor}`"));
                }
                (v.trim(), e)
            }
            None => (factor, 1),
        };
        let (i, j) = parse_variable_token(var)?;
        if i == 0 || i > n || j == 0 || j as usize > qm1 {
            return Err(format!("variable `{var}` out of range"));
        }
        exps[(i - 1) * qm1 + (j as usize - 1)] += e;
    }
    Ok(Monomial::from_exps(n, q, exps))
}

/// Space-joined integer encodings of a vector's entries.
pub fn format_vector(v: &FieldVector, spec: &FieldSpec) -> String {
    v.entries()
        .iter()
        .map(|&e| spec.element_to_int(e).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parse a whitespace-separated vector of element tokens.
pub fn parse_vector_tokens(
    toks: &[String],
    spec: &FieldSpec,
) -> Result<FieldVector, String> {
    if toks.is_empty() {
        return Err("empty vector".into());
    }
    Ok(FieldVector::new(
        toks.iter()
            .map(|t| parse_element_token(t, spec))
            .collect::<Result<Vec<_>, _>>()?,
    ))
}
