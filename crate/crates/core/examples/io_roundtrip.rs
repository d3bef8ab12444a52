//! Writing and reading `.ideal` and `.variety` files.

use qplab::io::{format_ideal, format_variety, parse_ideal, parse_variety, peek_field};
use qplab::varieties::scroll;
use qplab::{Rationals, Result};

fn main() -> Result<()> {
    let q = Rationals;
    let v = scroll(&q, &[1, 2])?;
    let text = format_variety(&v, &["scroll(1,2) over QQ".into()]);
    print!("{text}");
    println!("field on the ring line: {}", peek_field(&text)?);
    let back = parse_variety(&q, &text)?;
    println!("same ideal after reading back: {}", back.ideal().equals(v.ideal())?);

    let ideal_text = format_ideal(v.ideal());
    let i = parse_ideal(&q, &ideal_text)?;
    println!("{} generators in the .ideal form", i.generators().len());
    Ok(())
}
