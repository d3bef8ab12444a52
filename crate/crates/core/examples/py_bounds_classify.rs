//! Pythagoras-number intervals and classification verdicts, with and
//! without a containing variety of minimal degree.

use qplab::families::build_family;
use qplab::invariants::{invariant_report, ReportOptions};
use qplab::{PrimeField, Result};

fn main() -> Result<()> {
    let f = PrimeField::new(32003)?;
    let pairs: &[(&str, &[i64], Option<(&str, &[i64])>)] = &[
        ("rational_normal_curve", &[4], None),
        ("cmr_curve", &[5, 8, 1], Some(("scroll", &[1, 3]))),
        ("del_pezzo_quintic", &[], Some(("del_pezzo_quintic_container", &[]))),
        ("veronese", &[2, 3], None),
    ];
    for (name, params, container) in pairs {
        let v = build_family(&f, name, params, 7)?;
        let container = container.map(|(n, p)| build_family(&f, n, p, 7)).transpose()?;
        let opts = ReportOptions {
            container: container.as_ref(),
            ..ReportOptions::default()
        };
        let rep = invariant_report(&v, &opts)?;
        println!(
            "{:<26} qp = {}  py in [{}, {}]  minimal degree {}  d = c + 2 {}",
            rep.name,
            rep.qp,
            rep.py_lower.map_or("-".into(), |x| x.to_string()),
            rep.py_upper.map_or("-".into(), |x| x.to_string()),
            rep.verdicts.is_minimal_degree,
            rep.verdicts.is_d_c2
        );
        for k in &rep.known {
            println!("    known: {}", k.source);
        }
    }
    Ok(())
}
