//! Ready-made small fields and the two worked example codes, shared by
//! tests, benchmarks, and documentation.

use crate::code::{new_code, LinearCode};
use crate::crossing::FieldVector;
use crate::field::{build_field, FieldSpec};

/// A field of the given size q <= 9, built from a fixed primitive
/// polynomial. Panics on unsupported q.
pub fn field(q: u32) -> FieldSpec {
    let (p, r, coeffs): (u32, u32, &[u32]) = match q {
        2 => (2, 1, &[1, 1]),          // x + 1
        3 => (3, 1, &[1, 1]),          // x + 1, g = 2
        4 => (2, 2, &[1, 1, 1]),       // x^2 + x + 1
        5 => (5, 1, &[3, 1]),          // x + 3, g = 2
        7 => (7, 1, &[4, 1]),          // x + 4, g = 3
        8 => (2, 3, &[1, 1, 0, 1]),    // x^3 + x + 1
        9 => (3, 2, &[2, 2, 1]),       // x^2 - x - 1
        _ => panic!("no sample field of size {q}"),
    };
    build_field(p, r, coeffs).expect("sample polynomials are primitive")
}

pub fn vector_from_ints(spec: &FieldSpec, ints: &[u32]) -> FieldVector {
    FieldVector::new(
        ints.iter()
            .map(|&c| spec.element_from_int(c).expect("code in range"))
            .collect(),
    )
}

/// The [3,2] code over F_9 with rows (1, 0, g+1) and (0, 1, 2g).
pub fn example_code_f9() -> LinearCode {
    let spec = field(9);
    let rows = vec![
        vector_from_ints(&spec, &[1, 0, 4]),
        vector_from_ints(&spec, &[0, 1, 6]),
    ];
    new_code(spec, rows).expect("rows are independent")
}

/// The [6,3] ternary code.
pub fn example_code_f6_3() -> LinearCode {
    let spec = field(3);
    let rows = vec![
        vector_from_ints(&spec, &[1, 0, 0, 2, 2, 0]),
        vector_from_ints(&spec, &[0, 1, 0, 1, 1, 0]),
        vector_from_ints(&spec, &[0, 0, 1, 1, 2, 1]),
    ];
    new_code(spec, rows).expect("rows are independent")
}
