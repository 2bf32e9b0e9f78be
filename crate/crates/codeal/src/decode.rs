//! Complete decoding with the Groebner basis as a test set.
//!
//! Reducing the crossing image of a received word lands on the standard
//! monomial of its coset; decoding that monomial back gives the coset
//! leader, whose degree equals its Hamming weight, so the subtraction
//! below is minimum-distance (complete) decoding. The same basis also acts
//! as a test set: every word that is not a leader admits one substitution
//! step that strictly decreases it.

use thiserror::Error;

use crate::code::LinearCode;
use crate::crossing::{down, up, FieldVector};
use crate::field::FieldElement;
use crate::gbasis::{reduce, GroebnerBasis};
use crate::ideal::binomial_codeword;

/// Cap on q^n for the exhaustive scans in this module.
pub const DEFAULT_SCAN_CAP: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecodeError {
    #[error("scan too large: {size} words exceed cap {cap}")]
    ScanTooLarge { size: u64, cap: u64 },
    #[error("enumeration too large: {0}")]
    TooLarge(#[from] crate::code::CodeError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeResult {
    pub received: FieldVector,
    /// The coset leader of the received word.
    pub error: FieldVector,
    /// received - error; always a codeword.
    pub codeword: FieldVector,
    /// Hamming weight of the error, minimal over the coset.
    pub weight: usize,
}

/// Decode by dividing up(y) through the basis.
pub fn decode(gb: &GroebnerBasis, y: &FieldVector) -> DecodeResult {
    let spec = gb.code().spec();
    let nf = reduce(up(y, spec).monomial(), gb);
    finish(gb, y, down(nf.monomial(), spec))
}

/// Decode by a single leader-table lookup on the syndrome. Must agree
/// with [`decode`] bit for bit; the two paths exercise the algebra and
/// the table independently.
pub fn decode_via_leader_map(gb: &GroebnerBasis, y: &FieldVector) -> DecodeResult {
    let spec = gb.code().spec();
    let key = gb.code().syndrome(y);
    let leader = &gb.leader_map()[&key];
    finish(gb, y, down(leader.monomial(), spec))
}

fn finish(gb: &GroebnerBasis, y: &FieldVector, error: FieldVector) -> DecodeResult {
    let spec = gb.code().spec();
    let codeword = y.sub(&error, spec);
    debug_assert!(gb.code().contains(&codeword));
    let weight = error.weight();
    DecodeResult {
        received: y.clone(),
        error,
        codeword,
        weight,
    }
}

/// A word that the basis cannot improve is a coset leader; anything else
/// carries the index of a basis element whose lead divides its image.
#[derive(Debug, Clone)]
pub struct DescentWitness {
    pub word: FieldVector,
    pub basis_index: usize,
}

#[derive(Debug, Clone, Default)]
pub struct TestSetReport {
    pub leader_count: usize,
    pub non_leader_count: usize,
    /// One witness per non-leader word.
    pub witnesses: Vec<DescentWitness>,
}

impl TestSetReport {
    pub fn all_witnessed(&self) -> bool {
        self.witnesses.len() == self.non_leader_count
    }
}

/// Exhaustive test-set check over all q^n words: every word whose
/// crossing image is nonstandard must admit a strictly decreasing
/// substitution by some basis element.
pub fn test_set_check(gb: &GroebnerBasis) -> Result<TestSetReport, DecodeError> {
    test_set_check_with_cap(gb, DEFAULT_SCAN_CAP)
}

pub fn test_set_check_with_cap(
    gb: &GroebnerBasis,
    cap: u64,
) -> Result<TestSetReport, DecodeError> {
    let code = gb.code();
    let spec = code.spec();
    let q = code.q() as u64;
    let size = (0..code.n()).fold(1u64, |acc, _| acc.saturating_mul(q));
    if size > cap {
        return Err(DecodeError::ScanTooLarge { size, cap });
    }

    let mut report = TestSetReport::default();
    for idx in 0..size {
        let word = word_at(code, idx);
        let m = up(&word, spec).into_monomial();
        let divisor = gb
            .elements()
            .iter()
            .position(|b| b.lead().divides(&m));
        match divisor {
            None => report.leader_count += 1,
            Some(i) => {
                // One substitution step strictly decreases the monomial.
                let b = &gb.elements()[i];
                let next = m.div(b.lead()).unwrap().mul(b.trail());
                debug_assert_eq!(
                    gb.order().compare(&next, &m),
                    std::cmp::Ordering::Less
                );
                report.non_leader_count += 1;
                report.witnesses.push(DescentWitness {
                    word,
                    basis_index: i,
                });
            }
        }
    }
    Ok(report)
}

/// The idx-th word of F_q^n in base-q order.
pub fn word_at(code: &LinearCode, mut idx: u64) -> FieldVector {
    let spec = code.spec();
    let q = code.q() as u64;
    FieldVector::new(
        (0..code.n())
            .map(|_| {
                let digit = (idx % q) as u32;
                idx /= q;
                spec.element_from_int(digit).unwrap()
            })
            .collect(),
    )
}

/// A class of minimal-support codewords: all the scalar multiples of one
/// support-inclusion-minimal codeword.
#[derive(Debug, Clone)]
pub struct MinSupportClass {
    pub support: Vec<usize>,
    pub members: Vec<FieldVector>,
}

/// All nonzero codewords whose support properly contains no other nonzero
/// codeword's support, grouped into scalar-multiple classes.
pub fn minimal_support_codewords(code: &LinearCode) -> Result<Vec<MinSupportClass>, DecodeError> {
    let nonzero: Vec<FieldVector> = code
        .enumerate_codewords()?
        .filter(|c| !c.is_zero())
        .collect();
    let supports: Vec<Vec<usize>> = nonzero.iter().map(|c| c.support()).collect();
    let minimal: Vec<bool> = supports
        .iter()
        .map(|s| {
            !supports
                .iter()
                .any(|t| t.len() < s.len() && t.iter().all(|i| s.contains(i)))
        })
        .collect();

    let spec = code.spec();
    let mut classes = Vec::new();
    let mut assigned = vec![false; nonzero.len()];
    for i in 0..nonzero.len() {
        if !minimal[i] || assigned[i] {
            continue;
        }
        let mut members = Vec::new();
        for j in 1..=spec.q() - 1 {
            let scaled = nonzero[i].scale(FieldElement::Pow(j), spec);
            let pos = nonzero.iter().position(|c| *c == scaled).unwrap();
            debug_assert!(minimal[pos], "scaling preserves supports");
            assigned[pos] = true;
            members.push(scaled);
        }
        members.sort_by_key(|c| {
            c.entries()
                .iter()
                .map(|&e| spec.element_to_int(e))
                .collect::<Vec<_>>()
        });
        classes.push(MinSupportClass {
            support: supports[i].clone(),
            members,
        });
    }
    classes.sort_by(|a, b| a.support.cmp(&b.support));
    Ok(classes)
}

/// Which minimal-support classes show up among the basis binomials'
/// decoded differences (taken up to sign). Diagnostic only: the deglex
/// basis is one Groebner basis, not the universal test set, so nothing
/// here asserts containment.
#[derive(Debug, Clone)]
pub struct CoverageReport {
    pub covered: Vec<MinSupportClass>,
    pub uncovered: Vec<MinSupportClass>,
}

pub fn gb_codeword_coverage(
    gb: &GroebnerBasis,
    code: &LinearCode,
) -> Result<CoverageReport, DecodeError> {
    let spec = code.spec();
    let mut basis_words = std::collections::HashSet::new();
    for b in gb.elements() {
        let w = binomial_codeword(b, spec);
        basis_words.insert(w.neg(spec));
        basis_words.insert(w);
    }
    let mut covered = Vec::new();
    let mut uncovered = Vec::new();
    for class in minimal_support_codewords(code)? {
        if class.members.iter().any(|m| basis_words.contains(m)) {
            covered.push(class);
        } else {
            uncovered.push(class);
        }
    }
    Ok(CoverageReport { covered, uncovered })
}
