//! Every named family with its shape `(r, n, d, c)` and quadric count.

use qplab::families::build_family;
use qplab::invariants::quadric_count;
use qplab::{PrimeField, Result};

fn main() -> Result<()> {
    let f = PrimeField::new(32003)?;
    let cases: &[(&str, &[i64])] = &[
        ("projective_space", &[3]),
        ("rational_normal_curve", &[5]),
        ("scroll", &[1, 2]),
        ("scroll", &[1, 1, 2]),
        ("quadric", &[4]),
        ("veronese", &[2, 2]),
        ("veronese", &[2, 3]),
        ("del_pezzo_quintic", &[]),
        ("del_pezzo_quintic_container", &[]),
        ("cmr_curve", &[5, 8, 1]),
        ("cmr_curve", &[5, 8, 0]),
        ("genus3", &[2, 0]),
        ("genus3", &[3, 3]),
    ];
    println!("{:<32} {:>3} {:>3} {:>3} {:>3} {:>5}", "family", "r", "n", "d", "c", "dimI2");
    for (name, params) in cases {
        let v = build_family(&f, name, params, 7)?;
        let (n, d, c) = v.dim_deg_codim()?;
        println!("{:<32} {:>3} {:>3} {:>3} {:>3} {:>5}", v.name(), v.r(), n, d, c, quadric_count(&v)?);
    }
    Ok(())
}
