//! The `.ideal` and `.variety` text formats.
//!
//! An `.ideal` file starts with `ring r=<r> char=<p>` (`char=0` for the
//! rationals) followed by one generator per line. A `.variety` file is an
//! ideal block followed by optional sections:
//!
//! ```text
//! # provenance comment
//! name: twisted cubic
//! ring r=3 char=0
//! x0*x2 - x1^2
//! ...
//! param: s=1 rational=true
//! x0^3
//! ...
//! space:
//! <generators of the source ideal, if any>
//! totally_real: true
//! ```
//!
//! `#` starts a comment anywhere on a line.

use std::path::Path;

use crate::error::{Error, Result};
use crate::field::{Field, FieldConfig};
use crate::groebner::Ideal;
use crate::poly::{parse_polynomial, Polynomial};
use crate::varieties::{Param, RationalMap, Variety};

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(strip_comment).filter(|l| !l.is_empty())
}

fn key_values(s: &str) -> Result<Vec<(&str, &str)>> {
    s.split_whitespace()
        .map(|kv| {
            kv.split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{kv}`")))
        })
        .collect()
}

fn parse_ring_line(line: &str) -> Result<(usize, FieldConfig)> {
    let rest = line
        .strip_prefix("ring")
        .ok_or_else(|| Error::Parse(format!("expected `ring r=<r> char=<p>`, got `{line}`")))?;
    let mut r = None;
    let mut ch = None;
    for (k, v) in key_values(rest)? {
        match k {
            "r" => r = Some(v.parse::<usize>().map_err(|_| Error::Parse(format!("bad r `{v}`")))?),
            "char" => ch = Some(FieldConfig::parse(v)?),
            _ => return Err(Error::Parse(format!("unknown ring attribute `{k}`"))),
        }
    }
    match (r, ch) {
        (Some(r), Some(ch)) => Ok((r, ch)),
        _ => Err(Error::Parse("ring line needs both r= and char=".into())),
    }
}

/// The field named on the `ring` line, so callers can pick the coefficient
/// type before parsing the rest.
pub fn peek_field(text: &str) -> Result<FieldConfig> {
    let line = content_lines(text)
        .find(|l| l.starts_with("ring"))
        .ok_or_else(|| Error::Parse("missing `ring` line".into()))?;
    Ok(parse_ring_line(line)?.1)
}

fn check_field<F: Field>(field: &F, declared: FieldConfig) -> Result<()> {
    if field.config() != declared {
        return Err(Error::FieldMismatch(declared.to_string(), field.config().to_string()));
    }
    Ok(())
}

fn parse_polys<F: Field>(field: &F, nvars: usize, lines: &[&str]) -> Result<Vec<Polynomial<F::Elem>>> {
    lines.iter().map(|l| parse_polynomial(field, nvars, l)).collect()
}

pub fn parse_ideal<F: Field>(field: &F, text: &str) -> Result<Ideal<F>> {
    let mut lines = content_lines(text);
    let first = lines.next().ok_or_else(|| Error::Parse("empty ideal file".into()))?;
    let (r, declared) = parse_ring_line(first)?;
    check_field(field, declared)?;
    let gens: Vec<&str> = lines.collect();
    Ideal::new(field.clone(), r + 1, parse_polys(field, r + 1, &gens)?)
}

fn ring_line<F: Field>(ideal: &Ideal<F>) -> String {
    format!("ring r={} char={}", ideal.nvars() - 1, ideal.field().characteristic())
}

pub fn format_ideal<F: Field>(ideal: &Ideal<F>) -> String {
    let mut s = ring_line(ideal);
    s.push('\n');
    for g in ideal.generator_strings() {
        s.push_str(&g);
        s.push('\n');
    }
    s
}

enum Section {
    Ideal,
    Param,
    Space,
}

pub fn parse_variety<F: Field>(field: &F, text: &str) -> Result<Variety<F>> {
    let mut name = None;
    let mut ring = None;
    let mut param_head: Option<(usize, bool)> = None;
    let mut totally_real = false;
    let mut section = None;
    let (mut gens, mut comps, mut space) = (Vec::new(), Vec::new(), Vec::new());
    for line in content_lines(text) {
        if let Some(rest) = line.strip_prefix("name:") {
            name = Some(rest.trim().to_string());
        } else if line.starts_with("ring") {
            let (r, declared) = parse_ring_line(line)?;
            check_field(field, declared)?;
            ring = Some(r);
            section = Some(Section::Ideal);
        } else if let Some(rest) = line.strip_prefix("param:") {
            let mut s = None;
            let mut rational = false;
            for (k, v) in key_values(rest)? {
                match k {
                    "s" => s = Some(v.parse::<usize>().map_err(|_| Error::Parse(format!("bad s `{v}`")))?),
                    "rational" => rational = v == "true",
                    _ => return Err(Error::Parse(format!("unknown param attribute `{k}`"))),
                }
            }
            let s = s.ok_or_else(|| Error::Parse("param line needs s=".into()))?;
            param_head = Some((s, rational));
            section = Some(Section::Param);
        } else if line == "space:" {
            section = Some(Section::Space);
        } else if let Some(rest) = line.strip_prefix("totally_real:") {
            totally_real = match rest.trim() {
                "true" => true,
                "false" => false,
                other => return Err(Error::Parse(format!("totally_real must be true or false, got `{other}`"))),
            };
        } else {
            match section {
                Some(Section::Ideal) => gens.push(line),
                Some(Section::Param) => comps.push(line),
                Some(Section::Space) => space.push(line),
                None => return Err(Error::Parse(format!("text before the `ring` line: `{line}`"))),
            }
        }
    }
    let r = ring.ok_or_else(|| Error::Parse("missing `ring` line".into()))?;
    let ideal = Ideal::new(field.clone(), r + 1, parse_polys(field, r + 1, &gens)?)?;
    let param = match param_head {
        Some((s, rational)) => {
            let map = RationalMap::new(s + 1, parse_polys(field, s + 1, &comps)?, rational)?;
            let space = Ideal::new(field.clone(), s + 1, parse_polys(field, s + 1, &space)?)?;
            Some(Param { space, map })
        }
        None if !space.is_empty() => return Err(Error::Parse("`space:` without `param:`".into())),
        None => None,
    };
    Variety::new(name.unwrap_or_else(|| "variety".into()), ideal, param, totally_real)
}

/// Writes `v` with the given provenance lines as leading comments.
pub fn format_variety<F: Field>(v: &Variety<F>, provenance: &[String]) -> String {
    let field = v.field();
    let mut s = String::new();
    for p in provenance {
        s.push_str(&format!("# {p}\n"));
    }
    s.push_str(&format!("name: {}\n", v.name()));
    s.push_str(&format_ideal(v.ideal()));
    if let Some(p) = v.param() {
        s.push_str(&format!(
            "param: s={} rational={}\n",
            p.map.source_nvars() - 1,
            p.map.over_q()
        ));
        for c in p.map.components() {
            s.push_str(&c.to_string_with(field));
            s.push('\n');
        }
        if !p.space.is_zero() {
            s.push_str("space:\n");
            for g in p.space.generator_strings() {
                s.push_str(&g);
                s.push('\n');
            }
        }
    }
    s.push_str(&format!("totally_real: {}\n", v.totally_real()));
    s
}

pub fn read_to_string(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn write_string(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::varieties::{plane_curve_points, plane_curve_reembed, fermat_quartic, rational_normal_curve};

    #[test]
    fn ideal_roundtrip() {
        let text = "# twisted cubic\nring r=3 char=0\nx0*x2 - x1^2\nx0*x3 - x1*x2 # second\nx1*x3 - x2^2\n";
        let i = parse_ideal(&Rationals, text).unwrap();
        assert_eq!(i.generators().len(), 3);
        assert_eq!(peek_field(text).unwrap(), FieldConfig::Rationals);
        let back = parse_ideal(&Rationals, &format_ideal(&i)).unwrap();
        assert!(back.equals(&i).unwrap());
        let p = PrimeField::new(32003).unwrap();
        assert!(matches!(parse_ideal(&p, text), Err(Error::FieldMismatch(_, _))));
    }

    #[test]
    fn variety_roundtrip() {
        let q = Rationals;
        let v = rational_normal_curve(&q, 4).unwrap();
        let text = format_variety(&v, &["constructor rational_normal_curve(4)".into()]);
        let w = parse_variety(&q, &text).unwrap();
        assert!(w.ideal().equals(v.ideal()).unwrap());
        assert!(w.totally_real());
        assert_eq!(w.param().unwrap().map.target_nvars(), 5);

        let f = PrimeField::new(32003).unwrap();
        let quartic = fermat_quartic(&f);
        let pts = plane_curve_points(&f, &quartic, 1, 3).unwrap();
        let c = plane_curve_reembed(&f, &quartic, 2, &pts).unwrap();
        let w = parse_variety(&f, &format_variety(&c, &[])).unwrap();
        assert!(w.ideal().equals(c.ideal()).unwrap());
        assert!(w.sample_point(1).is_ok());
    }

    #[test]
    fn rejects_bad_files() {
        let q = Rationals;
        assert!(parse_ideal(&q, "x0\n").is_err());
        assert!(parse_variety(&q, "ring r=1 char=0\nparam: s=1\nx0^2\nx0*x1\nx1^2\n").is_err());
        assert!(parse_variety(&q, "ring r=2 char=0\nx0^2\ntotally_real: maybe\n").is_err());
    }
}
