//! Exact-arithmetic toolkit for tropical plane curves and their dual
//! subdivisions, lattice polygon classification up to unimodular
//! equivalence, and tacnode (A3 singularity) verification in quotient
//! rings over the rationals and Gaussian rationals.
//!
//! Everything in the data path is exact: lattice geometry runs on `i64`
//! coordinates, lifts and curve coordinates on [`Rat`], and polynomial
//! algebra on coefficient rings selected through the [`algebra::Coeff`]
//! trait. No floating point is used anywhere in this crate.

pub mod algebra;
pub mod classify;
pub mod corpus;
pub mod json;
pub mod lattice;
pub mod refine;
pub mod tropical;

/// Exact rational scalar used for valuations, lifts and curve geometry.
pub type Rat = num_rational::BigRational;

/// Exact integer used by the rational scalar.
pub type Int = num_bigint::BigInt;

/// Polynomial over the rationals.
pub type QPoly = algebra::ExactPoly<Rat>;

/// Polynomial over the Gaussian rationals.
pub type GPoly = algebra::ExactPoly<algebra::Gauss>;

pub use algebra::Gauss;

/// Parse an exact rational from a string like `"-3/2"` or `"7"`.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: Int = num
        .parse()
        .map_err(|_| format!("invalid rational numerator in {s:?}"))?;
    let d: Int = den
        .parse()
        .map_err(|_| format!("invalid rational denominator in {s:?}"))?;
    if d == Int::from(0) {
        return Err(format!("zero denominator in rational {s:?}"));
    }
    Ok(Rat::new(n, d))
}

/// Format a rational as `p/q` (or `p` when the denominator is one).
pub fn format_rat(r: &Rat) -> String {
    use num_traits::One;
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Convenience constructor for small rationals.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Convenience constructor for integers as rationals.
pub fn rati(n: i64) -> Rat {
    Rat::from(Int::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        for s in ["-3/2", "7", "0", "64/25", "-41/256"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
        }
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }
}
