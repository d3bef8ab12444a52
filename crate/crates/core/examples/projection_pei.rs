//! Projections from points and partial elimination ideals of the rational
//! normal quartic.

use qplab::projection::{partial_elimination_ideals, pei_dimension_identity_check, project_from_points};
use qplab::varieties::rational_normal_curve;
use qplab::{Rationals, Result};

fn main() -> Result<()> {
    let q = Rationals;
    let c = rational_normal_curve(&q, 4)?;
    let p = c.sample_point(1)?;
    let p2 = c.sample_point(2)?;
    println!("points {} and {}", p.format(&q), p2.format(&q));

    let once = project_from_points(&c, std::slice::from_ref(&p))?;
    println!("from one point: (n, d, c) = {:?}, {} quadrics", once.dim_deg_codim()?, once.quadric_basis()?.len());
    let twice = project_from_points(&c, &[p.clone(), p2])?;
    println!("from two points: (n, d, c) = {:?}, {} quadrics", twice.dim_deg_codim()?, twice.quadric_basis()?.len());

    let pei = partial_elimination_ideals(&c, &p, 2, None)?;
    println!("  i   t   dim (K_i)_t");
    for ((i, t), dim) in &pei.dims {
        println!("{i:>3} {t:>3} {dim:>5}");
    }
    let id = pei_dimension_identity_check(&c, &p)?;
    println!("dim I_2 = {} = {} + {}: {}", id.dim_i2, id.dim_projected_i2, id.dim_k1_1, id.holds);
    Ok(())
}
