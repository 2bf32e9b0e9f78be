//! Linear codes over F_q: generator and parity-check matrices, weights and
//! distances, exhaustive enumeration, syndromes, and the brute-force
//! coset-leader oracle that everything else is validated against.

use thiserror::Error;

use crate::crossing::{up, FieldVector, TermOrder};
use crate::field::{FieldElement, FieldSpec};

/// Cap on q^k for the exhaustive enumeration helpers.
pub const DEFAULT_ENUM_CAP: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("generator rows are linearly dependent")]
    RankDeficient,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("enumeration too large: {size} exceeds cap {cap}")]
    TooLarge { size: u64, cap: u64 },
}

/// An [n,k] linear code with a validated full-rank generator matrix and a
/// derived parity-check matrix. Immutable after construction.
#[derive(Debug, Clone)]
pub struct LinearCode {
    spec: FieldSpec,
    n: usize,
    k: usize,
    gen_rows: Vec<FieldVector>,
    check_rows: Vec<FieldVector>,
}

/// The image of a word under the parity-check matrix. Two words share a
/// syndrome exactly when their difference is a codeword, so syndromes are
/// the canonical coset keys. For k = n the syndrome is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Syndrome(Vec<FieldElement>);

impl Syndrome {
    pub fn entries(&self) -> &[FieldElement] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(FieldElement::is_zero)
    }

    /// Componentwise sum; syndromes are linear in the word.
    pub fn add(&self, other: &Syndrome, spec: &FieldSpec) -> Syndrome {
        assert_eq!(self.0.len(), other.0.len());
        Syndrome(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| spec.add(a, b))
                .collect(),
        )
    }
}

pub fn new_code(spec: FieldSpec, rows: Vec<FieldVector>) -> Result<LinearCode, CodeError> {
    if rows.is_empty() {
        return Err(CodeError::DimensionMismatch("no generator rows".into()));
    }
    let n = rows[0].len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(CodeError::DimensionMismatch(
            "generator rows have unequal lengths".into(),
        ));
    }
    let k = rows.len();
    if k > n {
        return Err(CodeError::RankDeficient);
    }

    // Row-reduce a copy of G, tracking pivot columns, to check the rank
    // and to read off a parity-check matrix. Codes need not be systematic.
    let mut m: Vec<Vec<FieldElement>> = rows.iter().map(|r| r.entries().to_vec()).collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(pivot) = (row..k).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, pivot);
        let inv = spec.inv(m[row][col]).expect("pivot is nonzero");
        for x in m[row].iter_mut() {
            *x = spec.mul(inv, *x);
        }
        let pivot_row = m[row].clone();
        for (i, other) in m.iter_mut().enumerate() {
            if i != row && !other[col].is_zero() {
                let factor = other[col];
                for (x, &pv) in other.iter_mut().zip(&pivot_row) {
                    *x = spec.sub(*x, spec.mul(factor, pv));
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == k {
            break;
        }
    }
    if row < k {
        return Err(CodeError::RankDeficient);
    }

    // H has one row per free column f: 1 at f and -rref[i][f] at the i-th
    // pivot column, which gives G * H^T = 0 by construction.
    let free_cols: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    let mut check_rows = Vec::with_capacity(n - k);
    for &f in &free_cols {
        let mut h = vec![FieldElement::Zero; n];
        h[f] = spec.one();
        for (i, &pc) in pivot_cols.iter().enumerate() {
            h[pc] = spec.neg(m[i][f]);
        }
        check_rows.push(FieldVector::new(h));
    }

    Ok(LinearCode {
        spec,
        n,
        k,
        gen_rows: rows,
        check_rows,
    })
}

impl LinearCode {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> u32 {
        self.spec.q()
    }

    pub fn generator_rows(&self) -> &[FieldVector] {
        &self.gen_rows
    }

    pub fn check_rows(&self) -> &[FieldVector] {
        &self.check_rows
    }

    /// Number of cosets q^(n-k), saturating at u64::MAX.
    pub fn coset_count(&self) -> u64 {
        saturating_pow(self.q(), (self.n - self.k) as u32)
    }

    /// Number of codewords q^k, saturating at u64::MAX.
    pub fn codeword_count(&self) -> u64 {
        saturating_pow(self.q(), self.k as u32)
    }

    pub fn syndrome(&self, y: &FieldVector) -> Syndrome {
        assert_eq!(y.len(), self.n, "word length must be n");
        Syndrome(
            self.check_rows
                .iter()
                .map(|h| h.dot(y, &self.spec))
                .collect(),
        )
    }

    pub fn contains(&self, y: &FieldVector) -> bool {
        self.syndrome(y).is_zero()
    }

    /// The codeword with message coefficients `lambda` (length k).
    pub fn encode(&self, lambda: &[FieldElement]) -> FieldVector {
        assert_eq!(lambda.len(), self.k);
        let mut acc = FieldVector::zero(self.n);
        for (c, row) in lambda.iter().zip(&self.gen_rows) {
            if !c.is_zero() {
                acc = acc.add(&row.scale(*c, &self.spec), &self.spec);
            }
        }
        acc
    }

    pub fn enumerate_codewords(&self) -> Result<CodewordStream<'_>, CodeError> {
        self.enumerate_codewords_with_cap(DEFAULT_ENUM_CAP)
    }

    /// Stream of all q^k codewords, each exactly once.
    pub fn enumerate_codewords_with_cap(&self, cap: u64) -> Result<CodewordStream<'_>, CodeError> {
        let size = self.codeword_count();
        if size > cap {
            return Err(CodeError::TooLarge { size, cap });
        }
        Ok(CodewordStream {
            code: self,
            next: 0,
            total: size,
        })
    }

    /// Minimum nonzero codeword weight, by exhaustive enumeration.
    pub fn min_distance(&self) -> Result<usize, CodeError> {
        self.enumerate_codewords()?
            .filter(|c| !c.is_zero())
            .map(|c| c.weight())
            .min()
            .ok_or(CodeError::RankDeficient)
    }

    /// Error-correcting capability t = floor((d-1)/2).
    pub fn capability(&self) -> Result<usize, CodeError> {
        Ok((self.min_distance()? - 1) / 2)
    }

    /// Brute-force coset leader: the member of y + C whose crossing image
    /// is deglex-minimal. Minimal degree means minimal Hamming weight, and
    /// the order breaks ties deterministically, which makes this oracle
    /// agree bit-exactly with Groebner normal forms under the same order.
    pub fn coset_leader_bruteforce(
        &self,
        y: &FieldVector,
        ord: &TermOrder,
    ) -> Result<FieldVector, CodeError> {
        assert_eq!(y.len(), self.n, "word length must be n");
        let mut best: Option<(FieldVector, crate::crossing::Monomial)> = None;
        for c in self.enumerate_codewords()? {
            let cand = y.add(&c, &self.spec);
            let m = up(&cand, &self.spec).into_monomial();
            let better = match &best {
                None => true,
                Some((_, bm)) => ord.compare(&m, bm) == std::cmp::Ordering::Less,
            };
            if better {
                best = Some((cand, m));
            }
        }
        Ok(best.expect("coset is nonempty").0)
    }
}

/// Iterator over all codewords in message order.
pub struct CodewordStream<'a> {
    code: &'a LinearCode,
    next: u64,
    total: u64,
}

impl Iterator for CodewordStream<'_> {
    type Item = FieldVector;

    fn next(&mut self) -> Option<FieldVector> {
        if self.next >= self.total {
            return None;
        }
        let mut idx = self.next;
        self.next += 1;
        let q = self.code.q() as u64;
        let lambda: Vec<FieldElement> = (0..self.code.k)
            .map(|_| {
                let digit = (idx % q) as u32;
                idx /= q;
                self.code.spec.element_from_int(digit).unwrap()
            })
            .collect();
        Some(self.code.encode(&lambda))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rem = (self.total - self.next) as usize;
        (rem, Some(rem))
    }
}

/// Hamming distance: the number of differing coordinates.
pub fn distance(a: &FieldVector, b: &FieldVector) -> usize {
    assert_eq!(a.len(), b.len(), "vectors must have equal length");
    a.entries()
        .iter()
        .zip(b.entries())
        .filter(|(x, y)| x != y)
        .count()
}

fn saturating_pow(q: u32, e: u32) -> u64 {
    let mut acc: u64 = 1;
    for _ in 0..e {
        acc = acc.saturating_mul(q as u64);
    }
    acc
}
