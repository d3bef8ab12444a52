//! Koszul strand tables, regularity and the syzygy-variety extraction.

use qplab::families::build_family;
use qplab::strands::{extract_syzygy_variety, strand_table};
use qplab::{PrimeField, Result};

fn main() -> Result<()> {
    let f = PrimeField::new(32003)?;
    for (name, params) in [
        ("scroll", vec![1, 2]),
        ("del_pezzo_quintic", vec![]),
        ("cmr_curve", vec![5, 8, 1]),
        ("genus3", vec![3, 6]),
    ] {
        let v = build_family(&f, name, &params, 7)?;
        let c = v.dim_deg_codim()?.2 as usize;
        println!("{}", v.name());
        print!("{}", strand_table(&v, c + 1, 1)?.render());
        println!();
    }

    let curve = build_family(&f, "cmr_curve", &[5, 8, 1], 7)?;
    let y = extract_syzygy_variety(&curve, 1)?;
    println!("syzygy variety of {}: (n, d, c) = {:?}", curve.name(), y.dim_deg_codim()?);
    Ok(())
}
