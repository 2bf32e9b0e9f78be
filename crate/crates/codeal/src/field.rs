//! Finite field construction and exact arithmetic.
//!
//! A field F_q = F_p[x]/(f(x)) is built from a prime p and a monic
//! polynomial f that must be irreducible with a primitive root. The class
//! of x (written `g` in text output) generates the multiplicative group, so
//! every nonzero element is stored as a discrete log: `Pow(j)` means g^j
//! with 1 <= j <= q-1, and g^(q-1) is the multiplicative identity.
//! Addition goes through a precomputed table over exponent pairs; only the
//! construction phase ever touches coefficient vectors.

use std::fmt;

use thiserror::Error;

/// Largest field size accepted by [`build_field`]. Irreducibility and
/// primitivity are verified by exhaustive search, so the bound stays small.
pub const DEFAULT_FIELD_BOUND: u32 = 512;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("p = {0} is not prime")]
    NotPrime(u32),
    #[error("f(x) is reducible over F_{p}")]
    NotIrreducible { p: u32 },
    #[error("x has order {order} mod f(x), expected {expected}")]
    NotPrimitive { order: u32, expected: u32 },
    #[error("q = {q} exceeds the field bound {bound}")]
    TooLarge { q: u32, bound: u32 },
    #[error("malformed modulus polynomial: {0}")]
    MalformedPolynomial(String),
    #[error("division by zero")]
    DivisionByZero,
}

/// An element of F_q in discrete-log form.
///
/// `Pow(j)` denotes g^j for the primitive element g, with j in 1..=q-1;
/// `Pow(q-1)` is the element 1. The zero element has no discrete log and
/// gets its own variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldElement {
    Zero,
    Pow(u32),
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        matches!(self, FieldElement::Zero)
    }

    /// Discrete log of a nonzero element.
    pub fn exponent(&self) -> Option<u32> {
        match self {
            FieldElement::Zero => None,
            FieldElement::Pow(j) => Some(*j),
        }
    }
}

/// A validated representation of F_q = F_p[x]/(f(x)).
///
/// Immutable after construction; all arithmetic methods are pure table
/// lookups, so a spec can be shared freely between threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u32,
    r: u32,
    q: u32,
    f_coeffs: Vec<u32>,
    /// power_table[j-1] = coefficients of g^j in the basis {1, x, ..., x^(r-1)}.
    power_table: Vec<Vec<u32>>,
    /// Upper-triangular table over exponent pairs 1 <= u <= v <= q-1.
    /// Entry w >= 1 means g^u + g^v = g^w; entry 0 means the sum is zero.
    add_table: Vec<u32>,
    /// neg_table[u-1] = exponent of -g^u, found by scanning add_table for
    /// the partner that sums to zero.
    neg_table: Vec<u32>,
    /// log_by_code[c] = j where c is the base-p code of the coefficient
    /// vector of g^j; index 0 is the zero element.
    log_by_code: Vec<u32>,
}

pub fn build_field(p: u32, r: u32, f_coeffs: &[u32]) -> Result<FieldSpec, FieldError> {
    build_field_with_bound(p, r, f_coeffs, DEFAULT_FIELD_BOUND)
}

pub fn build_field_with_bound(
    p: u32,
    r: u32,
    f_coeffs: &[u32],
    bound: u32,
) -> Result<FieldSpec, FieldError> {
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if r < 1 {
        return Err(FieldError::MalformedPolynomial(
            "extension degree must be at least 1".into(),
        ));
    }
    if f_coeffs.len() != (r + 1) as usize {
        return Err(FieldError::MalformedPolynomial(format!(
            "expected {} coefficients for degree {}, got {}",
            r + 1,
            r,
            f_coeffs.len()
        )));
    }
    if f_coeffs[r as usize] != 1 {
        return Err(FieldError::MalformedPolynomial(
            "modulus must be monic".into(),
        ));
    }
    if f_coeffs.iter().any(|&c| c >= p) {
        return Err(FieldError::MalformedPolynomial(format!(
            "coefficients must be reduced mod {p}"
        )));
    }

    let q = match checked_pow(p, r) {
        Some(q) if q <= bound => q,
        Some(q) => return Err(FieldError::TooLarge { q, bound }),
        None => return Err(FieldError::TooLarge { q: u32::MAX, bound }),
    };

    if !is_irreducible(f_coeffs, p) {
        return Err(FieldError::NotIrreducible { p });
    }

    // Enumerate powers of x mod f. Irreducibility makes the quotient a
    // field, so the order of x divides q-1 and the loop below terminates.
    let rr = r as usize;
    let mut cur = vec![0u32; rr];
    if rr == 1 {
        cur[0] = (p - f_coeffs[0]) % p; // x = -f0 in F_p[x]/(x + f0)
    } else {
        cur[1] = 1;
    }
    let one = {
        let mut v = vec![0u32; rr];
        v[0] = 1;
        v
    };
    let mut power_table = Vec::with_capacity((q - 1) as usize);
    let mut order = 0;
    for j in 1..=q - 1 {
        power_table.push(cur.clone());
        if cur == one {
            order = j;
            break;
        }
        cur = mul_by_x_mod(&cur, f_coeffs, p);
    }
    if order != q - 1 {
        return Err(FieldError::NotPrimitive {
            order,
            expected: q - 1,
        });
    }

    let mut log_by_code = vec![0u32; q as usize];
    for (idx, coeffs) in power_table.iter().enumerate() {
        let code = encode_base_p(coeffs, p);
        debug_assert_ne!(code, 0);
        log_by_code[code as usize] = idx as u32 + 1;
    }

    let qm1 = (q - 1) as usize;
    let mut add_table = vec![0u32; qm1 * (qm1 + 1) / 2];
    for u in 1..=q - 1 {
        for v in u..=q - 1 {
            let mut sum = vec![0u32; rr];
            for i in 0..rr {
                sum[i] = (power_table[(u - 1) as usize][i] + power_table[(v - 1) as usize][i]) % p;
            }
            add_table[tri_index(u, v, q)] = log_by_code[encode_base_p(&sum, p) as usize];
        }
    }

    let mut neg_table = vec![0u32; qm1];
    for u in 1..=q - 1 {
        let v = (1..=q - 1)
            .find(|&v| add_table[tri_index(u.min(v), u.max(v), q)] == 0)
            .expect("every element has an additive inverse");
        neg_table[(u - 1) as usize] = v;
    }

    Ok(FieldSpec {
        p,
        r,
        q,
        f_coeffs: f_coeffs.to_vec(),
        power_table,
        add_table,
        neg_table,
        log_by_code,
    })
}

impl FieldSpec {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus_coeffs(&self) -> &[u32] {
        &self.f_coeffs
    }

    /// The multiplicative identity g^(q-1).
    pub fn one(&self) -> FieldElement {
        FieldElement::Pow(self.q - 1)
    }

    /// The primitive element g = g^1.
    pub fn generator(&self) -> FieldElement {
        FieldElement::Pow(1)
    }

    /// All q elements, zero first.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        std::iter::once(FieldElement::Zero).chain((1..=self.q - 1).map(FieldElement::Pow))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (1..=self.q - 1).map(FieldElement::Pow)
    }

    pub fn is_valid(&self, a: FieldElement) -> bool {
        match a {
            FieldElement::Zero => true,
            FieldElement::Pow(j) => (1..=self.q - 1).contains(&j),
        }
    }

    fn check(&self, a: FieldElement) -> FieldElement {
        debug_assert!(self.is_valid(a), "element {a:?} invalid for q = {}", self.q);
        a
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match (self.check(a), self.check(b)) {
            (FieldElement::Zero, x) | (x, FieldElement::Zero) => x,
            (FieldElement::Pow(u), FieldElement::Pow(v)) => {
                match self.add_table[tri_index(u.min(v), u.max(v), self.q)] {
                    0 => FieldElement::Zero,
                    w => FieldElement::Pow(w),
                }
            }
        }
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        match self.check(a) {
            FieldElement::Zero => FieldElement::Zero,
            FieldElement::Pow(u) => FieldElement::Pow(self.neg_table[(u - 1) as usize]),
        }
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match (self.check(a), self.check(b)) {
            (FieldElement::Zero, _) | (_, FieldElement::Zero) => FieldElement::Zero,
            (FieldElement::Pow(u), FieldElement::Pow(v)) => {
                FieldElement::Pow((u + v - 1) % (self.q - 1) + 1)
            }
        }
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        match self.check(a) {
            FieldElement::Zero => Err(FieldError::DivisionByZero),
            FieldElement::Pow(u) => {
                let w = (self.q - 1) - u;
                Ok(FieldElement::Pow(if w == 0 { self.q - 1 } else { w }))
            }
        }
    }

    /// m * a for an integer multiplicity m, i.e. repeated addition after
    /// reducing m mod p. This is what the crossing map needs to interpret
    /// arbitrary exponent vectors.
    pub fn scalar_mul(&self, a: FieldElement, m: u32) -> FieldElement {
        let m = m % self.p;
        let mut acc = FieldElement::Zero;
        for _ in 0..m {
            acc = self.add(acc, a);
        }
        acc
    }

    /// Coefficient vector of an element in the basis {1, x, ..., x^(r-1)}.
    pub fn coeffs_of(&self, a: FieldElement) -> Vec<u32> {
        match self.check(a) {
            FieldElement::Zero => vec![0; self.r as usize],
            FieldElement::Pow(j) => self.power_table[(j - 1) as usize].clone(),
        }
    }

    /// Element with the given coefficient vector.
    pub fn element_from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement, FieldError> {
        if coeffs.len() != self.r as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(FieldError::MalformedPolynomial(format!(
                "expected {} coefficients reduced mod {}",
                self.r, self.p
            )));
        }
        Ok(self.element_from_int(encode_base_p(coeffs, self.p)).unwrap())
    }

    /// Integer code c0 + c1*p + ... of an element's coefficient vector.
    pub fn element_to_int(&self, a: FieldElement) -> u32 {
        match self.check(a) {
            FieldElement::Zero => 0,
            FieldElement::Pow(j) => encode_base_p(&self.power_table[(j - 1) as usize], self.p),
        }
    }

    /// Inverse of [`element_to_int`]; `None` when the code is out of range.
    pub fn element_from_int(&self, code: u32) -> Option<FieldElement> {
        if code >= self.q {
            return None;
        }
        if code == 0 {
            return Some(FieldElement::Zero);
        }
        Some(FieldElement::Pow(self.log_by_code[code as usize]))
    }

    /// Render an element in the integer encoding.
    pub fn format_element(&self, a: FieldElement) -> String {
        self.element_to_int(a).to_string()
    }

    /// Render an element in power notation: `0`, `1` or `g^j`.
    pub fn format_element_pow(&self, a: FieldElement) -> String {
        match self.check(a) {
            FieldElement::Zero => "0".to_string(),
            FieldElement::Pow(j) if j == self.q - 1 => "1".to_string(),
            FieldElement::Pow(j) => format!("g^{j}"),
        }
    }

    /// Render an element as a polynomial in g, e.g. `2g+1`.
    pub fn format_element_poly(&self, a: FieldElement) -> String {
        let coeffs = self.coeffs_of(a);
        let mut parts = Vec::new();
        for (i, &c) in coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let part = match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "g".to_string(),
                (1, c) => format!("{c}g"),
                (i, 1) => format!("g^{i}"),
                (i, c) => format!("{c}g^{i}"),
            };
            parts.push(part);
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Zero => write!(f, "0"),
            FieldElement::Pow(j) => write!(f, "g^{j}"),
        }
    }
}

/// Index into the upper-triangular additive table; requires u <= v.
fn tri_index(u: u32, v: u32, q: u32) -> usize {
    debug_assert!(1 <= u && u <= v && v < q);
    let (u, v, qm1) = (u as usize, v as usize, (q - 1) as usize);
    let before = (u - 1) * (2 * qm1 - u + 2) / 2;
    before + (v - u)
}

fn encode_base_p(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn checked_pow(p: u32, r: u32) -> Option<u32> {
    let mut acc: u64 = 1;
    for _ in 0..r {
        acc *= p as u64;
        if acc > u32::MAX as u64 {
            return None;
        }
    }
    Some(acc as u32)
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Exhaustive irreducibility check: trial division by every monic
/// polynomial of degree 1..=deg(f)/2 over F_p.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut divisor = decode_base_p(idx, p, d);
            divisor.push(1); // monic of degree d
            if poly_rem_is_zero(f, &divisor, p) {
                return false;
            }
        }
    }
    true
}

fn decode_base_p(mut idx: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len + 1);
    for _ in 0..len {
        out.push((idx % p as u64) as u32);
        idx /= p as u64;
    }
    out
}

/// Whether the monic `divisor` divides `f` exactly over F_p.
fn poly_rem_is_zero(f: &[u32], divisor: &[u32], p: u32) -> bool {
    let mut rem: Vec<u32> = f.to_vec();
    let dd = divisor.len() - 1;
    while rem.len() > dd {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let shift = rem.len() - 1 - dd;
            for (i, &c) in divisor.iter().enumerate() {
                let sub = (lead * c) % p;
                let pos = shift + i;
                rem[pos] = (rem[pos] + p - sub) % p;
            }
        }
        rem.pop();
        while rem.len() > dd && *rem.last().unwrap() == 0 {
            rem.pop();
        }
    }
    rem.iter().all(|&c| c == 0)
}

/// x * a mod f for a coefficient vector a, f monic.
fn mul_by_x_mod(a: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    let r = a.len();
    let mut out = vec![0u32; r];
    out[1..r].copy_from_slice(&a[..r - 1]);
    let carry = a[r - 1];
    if carry != 0 {
        for i in 0..r {
            let sub = (carry * f[i]) % p;
            out[i] = (out[i] + p - sub) % p;
        }
    }
    out
}
