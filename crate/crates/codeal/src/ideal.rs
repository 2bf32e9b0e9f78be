//! The binomial ideal of a linear code, presented by its finite generating
//! set: one binomial per scalar multiple of each generator row, plus the
//! relations read off the field's additive table for every coordinate.
//!
//! Coefficients live in the two-element field throughout, so a binomial is
//! nothing more than an ordered pair of monomials.

use std::fmt;

use thiserror::Error;

use crate::code::LinearCode;
use crate::crossing::{down, up, FieldVector, Monomial, TermOrder};
use crate::field::{FieldElement, FieldSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("binomial sides are equal: {0}")]
    Degenerate(String),
}

/// An ordered pair of monomials with lead strictly greater than trail.
/// The coefficients are the implicit 1 and -1 of the two-element field,
/// so no coefficient data is stored anywhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Binomial {
    lead: Monomial,
    trail: Monomial,
}

impl Binomial {
    /// Build a binomial from two monomials, orienting by the given order.
    pub fn oriented(a: Monomial, b: Monomial, ord: &TermOrder) -> Result<Binomial, IdealError> {
        match ord.compare(&a, &b) {
            std::cmp::Ordering::Greater => Ok(Binomial { lead: a, trail: b }),
            std::cmp::Ordering::Less => Ok(Binomial { lead: b, trail: a }),
            std::cmp::Ordering::Equal => Err(IdealError::Degenerate(a.to_string())),
        }
    }

    pub fn lead(&self) -> &Monomial {
        &self.lead
    }

    pub fn trail(&self) -> &Monomial {
        &self.trail
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.lead, self.trail)
    }
}

/// The generating set of the code ideal: k(q-1) row binomials and
/// n*q(q-1)/2 additive-table relations.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    pub row_binomials: Vec<Binomial>,
    pub table_relations: Vec<Binomial>,
}

impl GeneratorSet {
    pub fn all(&self) -> impl Iterator<Item = &Binomial> {
        self.row_binomials.iter().chain(&self.table_relations)
    }

    pub fn len(&self) -> usize {
        self.row_binomials.len() + self.table_relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// For each generator row w_i and each scalar g^j, the binomial
/// up(g^j * w_i) - 1. The canonical monomial is always the lead since 1 is
/// order-minimal.
pub fn row_multiple_binomials(code: &LinearCode, ord: &TermOrder) -> Vec<Binomial> {
    let spec = code.spec();
    let mut out = Vec::with_capacity(code.k() * (spec.q() - 1) as usize);
    for row in code.generator_rows() {
        for j in 1..=spec.q() - 1 {
            let scaled = row.scale(FieldElement::Pow(j), spec);
            let m = up(&scaled, spec).into_monomial();
            let b = Binomial::oriented(m, Monomial::one(code.n(), spec.q()), ord)
                .expect("generator rows are nonzero");
            out.push(b);
        }
    }
    out
}

/// The additive-table relations for each coordinate block: for every
/// unordered pair u <= v, the quadratic x[i,u]x[i,v] minus the variable
/// x[i,w] with g^u + g^v = g^w, or minus 1 when the sum is zero.
pub fn additive_relations(spec: &FieldSpec, n: usize, ord: &TermOrder) -> Vec<Binomial> {
    let q = spec.q();
    let mut out = Vec::new();
    for i in 1..=n {
        for u in 1..=q - 1 {
            for v in u..=q - 1 {
                let lead =
                    Monomial::variable(n, q, i, u).mul(&Monomial::variable(n, q, i, v));
                let trail = match spec.add(FieldElement::Pow(u), FieldElement::Pow(v)) {
                    FieldElement::Zero => Monomial::one(n, q),
                    FieldElement::Pow(w) => Monomial::variable(n, q, i, w),
                };
                out.push(Binomial::oriented(lead, trail, ord).expect("degrees differ"));
            }
        }
    }
    out
}

pub fn assemble_generators(code: &LinearCode, ord: &TermOrder) -> GeneratorSet {
    GeneratorSet {
        row_binomials: row_multiple_binomials(code, ord),
        table_relations: additive_relations(code.spec(), code.n(), ord),
    }
}

/// The vector down(lead) - down(trail). For every element of the code
/// ideal this lies in the code; for table relations it is zero.
pub fn binomial_codeword(b: &Binomial, spec: &FieldSpec) -> FieldVector {
    down(b.lead(), spec).sub(&down(b.trail(), spec), spec)
}

pub fn is_member(code: &LinearCode, b: &Binomial) -> bool {
    code.contains(&binomial_codeword(b, code.spec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::new_code;
    use crate::field::build_field;

    fn vec_from_ints(spec: &FieldSpec, ints: &[u32]) -> FieldVector {
        FieldVector::new(
            ints.iter()
                .map(|&c| spec.element_from_int(c).unwrap())
                .collect(),
        )
    }

    fn f9_code() -> LinearCode {
        let spec = build_field(3, 2, &[2, 2, 1]).unwrap();
        let rows = vec![
            vec_from_ints(&spec, &[1, 0, 4]),
            vec_from_ints(&spec, &[0, 1, 6]),
        ];
        new_code(spec, rows).unwrap()
    }

    fn f3_code() -> LinearCode {
        let spec = build_field(3, 1, &[1, 1]).unwrap();
        let rows = vec![
            vec_from_ints(&spec, &[1, 0, 0, 2, 2, 0]),
            vec_from_ints(&spec, &[0, 1, 0, 1, 1, 0]),
            vec_from_ints(&spec, &[0, 0, 1, 1, 2, 1]),
        ];
        new_code(spec, rows).unwrap()
    }

    #[test]
    fn f9_row_binomials_match_the_printed_sixteen() {
        let code = f9_code();
        let ord = TermOrder::deglex_default(3, 9);
        let bins = row_multiple_binomials(&code, &ord);
        assert_eq!(bins.len(), 16);
        let rendered: Vec<String> = bins.iter().map(|b| b.to_string()).collect();
        for expected in [
            "x[1,8]*x[3,2] - 1",
            "x[1,1]*x[3,3] - 1",
            "x[1,2]*x[3,4] - 1",
            "x[1,3]*x[3,5] - 1",
            "x[1,4]*x[3,6] - 1",
            "x[1,5]*x[3,7] - 1",
            "x[1,6]*x[3,8] - 1",
            "x[1,7]*x[3,1] - 1",
            "x[2,8]*x[3,5] - 1",
            "x[2,1]*x[3,6] - 1",
            "x[2,2]*x[3,7] - 1",
            "x[2,3]*x[3,8] - 1",
            "x[2,4]*x[3,1] - 1",
            "x[2,5]*x[3,2] - 1",
            "x[2,6]*x[3,3] - 1",
            "x[2,7]*x[3,4] - 1",
        ] {
            assert!(rendered.contains(&expected.to_string()), "missing {expected}");
        }
    }

    #[test]
    fn ternary_row_binomials_include_f1_and_its_multiple() {
        let code = f3_code();
        let ord = TermOrder::deglex_default(6, 3);
        let bins = row_multiple_binomials(&code, &ord);
        assert_eq!(bins.len(), 6);
        let rendered: Vec<String> = bins.iter().map(|b| b.to_string()).collect();
        assert!(rendered.contains(&"x[1,2]*x[4,1]*x[5,1] - 1".to_string()));
        assert!(rendered.contains(&"x[1,1]*x[4,2]*x[5,2] - 1".to_string()));
        assert!(rendered.contains(&"x[3,2]*x[4,2]*x[5,1]*x[6,2] - 1".to_string()));
        assert!(rendered.contains(&"x[3,1]*x[4,1]*x[5,2]*x[6,1] - 1".to_string()));
    }

    #[test]
    fn f3_additive_relations_per_coordinate() {
        let spec = build_field(3, 1, &[1, 1]).unwrap();
        let ord = TermOrder::deglex_default(6, 3);
        let rels = additive_relations(&spec, 6, &ord);
        assert_eq!(rels.len(), 6 * 3);
        let rendered: Vec<String> = rels.iter().map(|b| b.to_string()).collect();
        for i in 1..=6 {
            assert!(rendered.contains(&format!("x[{i},1]^2 - x[{i},2]")));
            assert!(rendered.contains(&format!("x[{i},1]*x[{i},2] - 1")));
            assert!(rendered.contains(&format!("x[{i},2]^2 - x[{i},1]")));
        }
    }

    #[test]
    fn f9_additive_relations_sample_entries() {
        let spec = build_field(3, 2, &[2, 2, 1]).unwrap();
        let ord = TermOrder::deglex_default(3, 9);
        let rels = additive_relations(&spec, 3, &ord);
        assert_eq!(rels.len(), 3 * 36);
        let rendered: Vec<String> = rels.iter().map(|b| b.to_string()).collect();
        for i in 1..=3 {
            assert!(rendered.contains(&format!("x[{i},1]^2 - x[{i},5]")));
            assert!(rendered.contains(&format!("x[{i},1]*x[{i},5] - 1")));
            assert!(rendered.contains(&format!("x[{i},8]^2 - x[{i},4]")));
        }
    }

    #[test]
    fn f2_additive_relations_are_squares_minus_one() {
        let spec = build_field(2, 1, &[1, 1]).unwrap();
        let ord = TermOrder::deglex_default(4, 2);
        let rels = additive_relations(&spec, 4, &ord);
        assert_eq!(rels.len(), 4);
        for (i, b) in rels.iter().enumerate() {
            assert_eq!(b.to_string(), format!("x[{},1]^2 - 1", i + 1));
        }
    }

    #[test]
    fn generator_counts() {
        let ord9 = TermOrder::deglex_default(3, 9);
        let gens9 = assemble_generators(&f9_code(), &ord9);
        assert_eq!(gens9.row_binomials.len(), 16);
        assert_eq!(gens9.table_relations.len(), 108);
        assert_eq!(gens9.len(), 124);

        // k(q-1) + n*q(q-1)/2 = 3*2 + 6*3: three rows, two nonzero scalars
        // each, plus three table relations per coordinate.
        let ord3 = TermOrder::deglex_default(6, 3);
        let gens3 = assemble_generators(&f3_code(), &ord3);
        assert_eq!(gens3.row_binomials.len(), 6);
        assert_eq!(gens3.len(), 6 + 18);

        // [2,2] full code over F_2: 2 row binomials + 2 table relations.
        let spec = build_field(2, 1, &[1, 1]).unwrap();
        let rows = vec![vec_from_ints(&spec, &[1, 0]), vec_from_ints(&spec, &[0, 1])];
        let full = new_code(spec, rows).unwrap();
        let ord2 = TermOrder::deglex_default(2, 2);
        assert_eq!(assemble_generators(&full, &ord2).len(), 4);
    }

    #[test]
    fn every_generator_is_a_member() {
        let code = f9_code();
        let ord = TermOrder::deglex_default(3, 9);
        let gens = assemble_generators(&code, &ord);
        for b in gens.all() {
            assert!(is_member(&code, b), "{b}");
        }
        for b in &gens.table_relations {
            assert!(binomial_codeword(b, code.spec()).is_zero(), "{b}");
        }
        // Row binomials have lead degree <= n; table relations exactly 2.
        for b in &gens.row_binomials {
            assert!(b.lead().degree() as usize <= code.n());
        }
        for b in &gens.table_relations {
            assert_eq!(b.lead().degree(), 2);
        }
    }

    #[test]
    fn binomial_codewords_of_named_elements() {
        let code = f9_code();
        let spec = code.spec();
        let ord = TermOrder::deglex_default(3, 9);

        // x[1,8]*x[3,2] - 1 encodes row w1 = (1, 0, g+1).
        let b = Binomial::oriented(
            Monomial::variable(3, 9, 1, 8).mul(&Monomial::variable(3, 9, 3, 2)),
            Monomial::one(3, 9),
            &ord,
        )
        .unwrap();
        assert_eq!(binomial_codeword(&b, spec), vec_from_ints(spec, &[1, 0, 4]));

        // x[1,3] - x[3,1] encodes (g^3, 0, g^5) = g^3 * w1.
        let b = Binomial::oriented(
            Monomial::variable(3, 9, 1, 3),
            Monomial::variable(3, 9, 3, 1),
            &ord,
        )
        .unwrap();
        let cw = binomial_codeword(&b, spec);
        assert_eq!(cw.get(0), FieldElement::Pow(3));
        assert_eq!(cw.get(1), FieldElement::Zero);
        assert_eq!(cw.get(2), FieldElement::Pow(5));
        assert!(is_member(&code, &b));
    }

    #[test]
    fn orientation_rejects_equal_sides() {
        let ord = TermOrder::deglex_default(2, 3);
        let m = Monomial::variable(2, 3, 1, 1);
        assert!(Binomial::oriented(m.clone(), m, &ord).is_err());
    }
}
