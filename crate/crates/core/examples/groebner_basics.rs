//! Gröbner bases, Hilbert data, elimination and saturation for the twisted
//! cubic.

use qplab::{Ideal, MonomialOrder, Polynomial, Rationals, Result};

fn main() -> Result<()> {
    let q = Rationals;
    let tc = Ideal::parse(q, 4, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"])?;

    for ord in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
        println!("{ord:?} basis:");
        for g in tc.groebner_basis(ord).iter() {
            println!("  {}", g.to_string_with(&q));
        }
    }

    let h = tc.hilbert_function()?;
    let hf: Vec<u64> = (0..6).map(|t| h.hf_at(t)).collect();
    println!("HF(0..6) = {hf:?}");
    println!("(dim, deg, codim) = {:?}", tc.dim_deg_codim()?);

    // [1:0:0:0] lies on the curve, so the image is a conic
    let image = tc.elimination_ideal(1)?;
    println!("image of the projection from [1:0:0:0]: {:?}", image.generator_strings());

    let x0 = Polynomial::var(&q, 4, 0);
    let padded = Ideal::new(q, 4, tc.generators().iter().map(|g| g.mul(&q, &x0)).collect())?;
    println!("(x0 I : x0^inf) == I ? {}", padded.saturate_by(&x0)?.equals(&tc)?);
    println!("(x0 I : x0) == I ? {}", padded.ideal_quotient(&x0)?.equals(&tc)?);
    Ok(())
}
