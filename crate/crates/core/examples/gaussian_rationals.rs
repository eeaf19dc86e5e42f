//! Exact arithmetic in Q(i): parsing, the field operations and powers.

use frobkit::exactnum::{gaussian_arith, parse_gaussian, GaussOp, GaussianRational};
use frobkit::{Error, Result};

fn main() -> Result<()> {
    let x = parse_gaussian("-3/2+1/2i")?;
    let y: GaussianRational = "2-i".parse()?;
    println!("x = {x}, y = {y}");
    println!("x + y = {}", &x + &y);
    println!("x * y = {}", &x * &y);
    println!("x / y = {}", gaussian_arith(GaussOp::Div, &x, &y)?);
    println!("x^5   = {}", x.pow(5)?);
    println!("|y|^2 = {}", y.norm_sqr());
    println!("i^4   = {}", GaussianRational::i().pow(4)?);

    for bad in ["1+", "1/0", "i+i", "3 4"] {
        match parse_gaussian(bad) {
            Err(Error::Parse { position, message }) => println!("{bad:?}: position {position}: {message}"),
            other => println!("{bad:?}: {other:?}"),
        }
    }
    println!("0^0: {:?}", GaussianRational::zero().pow(0));
    println!(
        "1/0: {:?}",
        GaussianRational::one().checked_div(&GaussianRational::zero())
    );
    Ok(())
}
