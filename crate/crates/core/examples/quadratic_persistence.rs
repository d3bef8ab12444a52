//! Quadratic persistence with its certificate: the witness tuple and the
//! quadric counts level by level.

use qplab::families::build_family;
use qplab::invariants::{quadratic_persistence, DEFAULT_SAMPLES};
use qplab::{PrimeField, Result};

fn main() -> Result<()> {
    let f = PrimeField::new(32003)?;
    for (name, params) in [
        ("quadric", vec![4]),
        ("rational_normal_curve", vec![5]),
        ("veronese", vec![2, 3]),
        ("del_pezzo_quintic", vec![]),
        ("cmr_curve", vec![5, 8, 1]),
        ("cmr_curve", vec![5, 8, 0]),
    ] {
        let v = build_family(&f, name, &params, 7)?;
        let cert = quadratic_persistence(&v, DEFAULT_SAMPLES, 11)?;
        println!("{:<28} qp = {}  dim I_2 by level {:?}", v.name(), cert.value, cert.floor_evidence);
        let witness: Vec<String> = cert.witness.iter().map(|p| p.format(&f)).collect();
        println!("    witness {}", witness.join(" "));
    }
    Ok(())
}
