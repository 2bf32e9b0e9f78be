//! Print the reduced basis of the worked ternary example with the decoded
//! difference of each element.

use codeal::crossing::TermOrder;
use codeal::gbasis::reduced_gb;
use codeal::ideal::binomial_codeword;
use codeal::samples;

fn main() {
    let code = samples::example_code_f6_3();
    let ord = TermOrder::deglex_default(6, 3);
    let gb = reduced_gb(&code, &ord).unwrap();
    println!("basis size: {}", gb.len());
    println!("standard: {}", gb.standard_monomials().len());
    let spec = code.spec();
    for b in gb.elements() {
        let cw = binomial_codeword(b, spec);
        let ints: Vec<String> = cw
            .entries()
            .iter()
            .map(|&e| spec.element_to_int(e).to_string())
            .collect();
        println!("{}   | cw = ({})", b, ints.join(","));
    }
    println!("--- standard monomials ---");
    for s in gb.standard_monomials() {
        print!("{} ", s);
    }
    println!();
}
