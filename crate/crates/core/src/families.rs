//! Named constructors with integer parameters, as used by the corpus and
//! the `family` command.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::varieties::{
    cmr_curve, cmr_secant_line, del_pezzo_quintic, del_pezzo_quintic_container, fermat_quartic,
    plane_curve_points, plane_curve_reembed, projective_space, quadric_hypersurface, rational_normal_curve,
    scroll, veronese, Variety,
};

/// `(name, parameter synopsis)` for every family.
pub const FAMILIES: &[(&str, &str)] = &[
    ("projective_space", "r"),
    ("rational_normal_curve", "d"),
    ("scroll", "a1 a2 ... ak"),
    ("quadric", "r"),
    ("veronese", "n d"),
    ("del_pezzo_quintic", ""),
    ("del_pezzo_quintic_container", ""),
    ("cmr_curve", "r d on_scroll(0|1)   (uses the seed)"),
    ("cmr_secant_line", "r"),
    ("genus3", "k npoints   (Fermat-type quartic x0^4 + x1^4 - x2^4, points from the seed)"),
];

fn arity(name: &str, params: &[i64], n: usize) -> Result<()> {
    if params.len() != n {
        return Err(Error::Usage(format!(
            "{name} takes {n} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

fn nonneg(v: i64) -> Result<usize> {
    usize::try_from(v).map_err(|_| Error::Usage(format!("parameter {v} must be nonnegative")))
}

/// Builds the family `name` over `field`.
pub fn build_family<F: Field>(field: &F, name: &str, params: &[i64], seed: u64) -> Result<Variety<F>> {
    let v = match name {
        "projective_space" => {
            arity(name, params, 1)?;
            projective_space(field, nonneg(params[0])?)
        }
        "rational_normal_curve" => {
            arity(name, params, 1)?;
            rational_normal_curve(field, nonneg(params[0])?)?
        }
        "scroll" => {
            let a = params.iter().map(|&x| nonneg(x)).collect::<Result<Vec<_>>>()?;
            scroll(field, &a)?
        }
        "quadric" => {
            arity(name, params, 1)?;
            quadric_hypersurface(field, nonneg(params[0])?)?
        }
        "veronese" => {
            arity(name, params, 2)?;
            let dd = u32::try_from(params[1]).map_err(|_| Error::Usage("bad Veronese degree".into()))?;
            veronese(field, nonneg(params[0])?, dd)?
        }
        "del_pezzo_quintic" => {
            arity(name, params, 0)?;
            del_pezzo_quintic(field)?
        }
        "del_pezzo_quintic_container" => {
            arity(name, params, 0)?;
            del_pezzo_quintic_container(field)?
        }
        "cmr_curve" => {
            arity(name, params, 3)?;
            cmr_curve(field, nonneg(params[0])?, nonneg(params[1])?, params[2] != 0, seed)?
        }
        "cmr_secant_line" => {
            arity(name, params, 1)?;
            cmr_secant_line(field, nonneg(params[0])?)?
        }
        "genus3" => {
            arity(name, params, 2)?;
            let k = u32::try_from(params[0]).map_err(|_| Error::Usage("bad twist degree".into()))?;
            let f = fermat_quartic(field);
            let pts = plane_curve_points(field, &f, nonneg(params[1])?, seed)?;
            plane_curve_reembed(field, &f, k, &pts)?
        }
        _ => {
            let names: Vec<&str> = FAMILIES.iter().map(|(n, _)| *n).collect();
            return Err(Error::Usage(format!(
                "unknown family `{name}`; known: {}",
                names.join(", ")
            )));
        }
    };
    let label: Vec<String> = params.iter().map(|p| p.to_string()).collect();
    Ok(v.with_name(format!("{name}({})", label.join(","))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn builds_and_rejects() {
        let q = Rationals;
        let v = build_family(&q, "scroll", &[1, 2], 0).unwrap();
        assert_eq!(v.name(), "scroll(1,2)");
        assert_eq!(v.dim_deg_codim().unwrap(), (2, 3, 2));
        assert!(matches!(build_family(&q, "scroll", &[-1], 0), Err(Error::Usage(_))));
        assert!(matches!(build_family(&q, "nope", &[], 0), Err(Error::Usage(_))));
        assert!(matches!(build_family(&q, "veronese", &[2], 0), Err(Error::Usage(_))));
        let f = PrimeField::new(32003).unwrap();
        let g = build_family(&f, "genus3", &[2, 1], 4).unwrap();
        assert_eq!(g.dim_deg_codim().unwrap(), (1, 7, 3));
    }
}
