//! Crossing between field vectors and exponent vectors.
//!
//! A vector in F_q^n is encoded as a monomial in the n(q-1) variables
//! x[i,j] (coordinate i, exponent j of the primitive element): coordinate
//! g^j becomes the variable x[i,j], zero coordinates contribute nothing.
//! That encoding ([`up`]) lands on canonical monomials, whose degree equals
//! the Hamming weight of the vector. The decoding map ([`down`]) accepts
//! arbitrary exponent vectors, interpreting the exponent of x[i,j] as an
//! integer multiplicity of g^j in coordinate i.
//!
//! Monomials are compared in the degree-lexicographic order with a
//! configurable variable precedence; the default puts x[1,1] highest and
//! x[n,q-1] lowest.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::field::{FieldElement, FieldSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrossingError {
    #[error("monomial is not divisible by the divisor")]
    NotDivisible,
    #[error("monomial is not canonical: {0}")]
    NotCanonical(String),
    #[error("invalid precedence: {0}")]
    BadPrecedence(String),
}

/// An element of F_q^n. Entries are interpreted relative to a
/// [`FieldSpec`] passed to the operations that need arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldVector {
    entries: Vec<FieldElement>,
}

impl FieldVector {
    pub fn new(entries: Vec<FieldElement>) -> Self {
        assert!(!entries.is_empty(), "vectors must have length >= 1");
        FieldVector { entries }
    }

    pub fn zero(n: usize) -> Self {
        FieldVector::new(vec![FieldElement::Zero; n])
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, i: usize) -> FieldElement {
        self.entries[i]
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FieldElement::is_zero)
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    /// 1-based indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn add(&self, other: &FieldVector, spec: &FieldSpec) -> FieldVector {
        assert_eq!(self.len(), other.len());
        FieldVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| spec.add(a, b))
                .collect(),
        )
    }

    pub fn sub(&self, other: &FieldVector, spec: &FieldSpec) -> FieldVector {
        assert_eq!(self.len(), other.len());
        FieldVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| spec.sub(a, b))
                .collect(),
        )
    }

    pub fn neg(&self, spec: &FieldSpec) -> FieldVector {
        FieldVector::new(self.entries.iter().map(|&a| spec.neg(a)).collect())
    }

    pub fn scale(&self, c: FieldElement, spec: &FieldSpec) -> FieldVector {
        FieldVector::new(self.entries.iter().map(|&a| spec.mul(c, a)).collect())
    }

    /// Inner product with another vector.
    pub fn dot(&self, other: &FieldVector, spec: &FieldSpec) -> FieldElement {
        assert_eq!(self.len(), other.len());
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(FieldElement::Zero, |acc, (&a, &b)| {
                spec.add(acc, spec.mul(a, b))
            })
    }
}

/// A monomial in the n(q-1) crossing variables, stored as a dense exponent
/// vector: block i (1-based) occupies positions (i-1)(q-1)..i(q-1), slot j
/// within a block corresponds to x[i,j].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    n: usize,
    qm1: usize,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(n: usize, q: u32) -> Self {
        let qm1 = (q - 1) as usize;
        Monomial {
            n,
            qm1,
            exps: vec![0; n * qm1],
        }
    }

    /// The variable x[i,j], with 1 <= i <= n and 1 <= j <= q-1.
    pub fn variable(n: usize, q: u32, i: usize, j: u32) -> Self {
        let mut m = Monomial::one(n, q);
        let idx = m.var_index(i, j);
        m.exps[idx] = 1;
        m
    }

    pub fn from_exps(n: usize, q: u32, exps: Vec<u32>) -> Self {
        let qm1 = (q - 1) as usize;
        assert_eq!(exps.len(), n * qm1, "exponent vector has the wrong length");
        Monomial { n, qm1, exps }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.qm1 as u32 + 1
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    fn var_index(&self, i: usize, j: u32) -> usize {
        assert!(1 <= i && i <= self.n, "coordinate out of range");
        assert!(1 <= j && j as usize <= self.qm1, "exponent slot out of range");
        (i - 1) * self.qm1 + (j as usize - 1)
    }

    /// Exponent of x[i,j].
    pub fn exp(&self, i: usize, j: u32) -> u32 {
        self.exps[self.var_index(i, j)]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    fn same_shape(&self, other: &Monomial) {
        assert!(
            self.n == other.n && self.qm1 == other.qm1,
            "monomials over different variable sets"
        );
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.same_shape(other);
        Monomial {
            n: self.n,
            qm1: self.qm1,
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.same_shape(other);
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// self / divisor; fails when some exponent would go negative.
    pub fn div(&self, divisor: &Monomial) -> Result<Monomial, CrossingError> {
        self.same_shape(divisor);
        if !divisor.divides(self) {
            return Err(CrossingError::NotDivisible);
        }
        Ok(Monomial {
            n: self.n,
            qm1: self.qm1,
            exps: self
                .exps
                .iter()
                .zip(&divisor.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.same_shape(other);
        Monomial {
            n: self.n,
            qm1: self.qm1,
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// Whether the leads share no variable.
    pub fn coprime_with(&self, other: &Monomial) -> bool {
        self.same_shape(other);
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Canonical means every block holds at most one nonzero exponent and
    /// that exponent is 1; exactly the image of the crossing map.
    pub fn is_canonical(&self) -> bool {
        for i in 0..self.n {
            let block = &self.exps[i * self.qm1..(i + 1) * self.qm1];
            let weight: u32 = block.iter().sum();
            if weight > 1 {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for i in 1..=self.n {
            for j in 1..=self.qm1 as u32 {
                let e = self.exp(i, j);
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "x[{i},{j}]")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// A monomial in the image of the crossing map: at most one unit exponent
/// per coordinate block, so degree = Hamming weight of the encoded vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalMonomial(Monomial);

impl CanonicalMonomial {
    pub fn try_new(m: Monomial) -> Result<Self, CrossingError> {
        if m.is_canonical() {
            Ok(CanonicalMonomial(m))
        } else {
            Err(CrossingError::NotCanonical(m.to_string()))
        }
    }

    pub fn monomial(&self) -> &Monomial {
        &self.0
    }

    pub fn into_monomial(self) -> Monomial {
        self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.degree()
    }
}

impl fmt::Display for CanonicalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The crossing map: encode a vector as a canonical monomial.
pub fn up(v: &FieldVector, spec: &FieldSpec) -> CanonicalMonomial {
    let mut m = Monomial::one(v.len(), spec.q());
    for (i, e) in v.entries().iter().enumerate() {
        if let FieldElement::Pow(j) = e {
            let idx = m.var_index(i + 1, *j);
            m.exps[idx] = 1;
        }
    }
    CanonicalMonomial(m)
}

/// The inverse crossing map: coordinate i of the result is the field sum
/// over j of exps[i,j] copies of g^j.
pub fn down(m: &Monomial, spec: &FieldSpec) -> FieldVector {
    let mut entries = Vec::with_capacity(m.n);
    for i in 1..=m.n {
        let mut acc = FieldElement::Zero;
        for j in 1..=m.qm1 as u32 {
            let e = m.exp(i, j);
            if e > 0 {
                acc = spec.add(acc, spec.scalar_mul(FieldElement::Pow(j), e));
            }
        }
        entries.push(acc);
    }
    FieldVector::new(entries)
}

/// Degree-lexicographic term order with configurable variable precedence.
///
/// Total degree decides first; ties go to the monomial with the larger
/// exponent on the earliest variable in precedence order. The default
/// precedence is x[1,1] > x[1,2] > ... > x[n,q-1].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermOrder {
    n: usize,
    qm1: usize,
    /// precedence[0] is the flat index of the highest variable.
    precedence: Vec<usize>,
}

impl TermOrder {
    pub fn deglex_default(n: usize, q: u32) -> TermOrder {
        let qm1 = (q - 1) as usize;
        TermOrder {
            n,
            qm1,
            precedence: (0..n * qm1).collect(),
        }
    }

    pub fn deglex_with_precedence(
        n: usize,
        q: u32,
        precedence: Vec<usize>,
    ) -> Result<TermOrder, CrossingError> {
        let qm1 = (q - 1) as usize;
        let nvars = n * qm1;
        if precedence.len() != nvars {
            return Err(CrossingError::BadPrecedence(format!(
                "expected {} entries, got {}",
                nvars,
                precedence.len()
            )));
        }
        let mut seen = vec![false; nvars];
        for &v in &precedence {
            if v >= nvars || seen[v] {
                return Err(CrossingError::BadPrecedence(
                    "entries must be a permutation of the variables".into(),
                ));
            }
            seen[v] = true;
        }
        Ok(TermOrder {
            n,
            qm1,
            precedence,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.qm1 as u32 + 1
    }

    pub fn nvars(&self) -> usize {
        self.n * self.qm1
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        assert!(
            a.n == self.n && a.qm1 == self.qm1 && b.n == self.n && b.qm1 == self.qm1,
            "monomials do not match the order's variable set"
        );
        match a.degree().cmp(&b.degree()) {
            Ordering::Equal => {}
            other => return other,
        }
        for &v in &self.precedence {
            match a.exps[v].cmp(&b.exps[v]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    pub fn min<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.compare(a, b) == Ordering::Greater {
            b
        } else {
            a
        }
    }
}
