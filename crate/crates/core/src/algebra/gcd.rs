//! Univariate gcds over coefficient fields and over univariate quotient
//! rings (where inversion can hit zero divisors and errors loudly), plus a
//! resultant through the norm map used to eliminate an algebraic quantity.

use super::poly::{ExactPoly, Vars};
use super::scalar::{Coeff, FieldCoeff};
use crate::Rat;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum UnivariateError {
    #[error("polynomial is not univariate in {0:?}")]
    NotUnivariate(String),
}

#[derive(Debug, Error, PartialEq)]
pub enum GcdError {
    #[error("{0}")]
    Univariate(#[from] UnivariateError),
    #[error("zero divisor encountered during inversion in the quotient ring: {element}")]
    ZeroDivisor { element: String },
}

/// Dense little-endian coefficient list of a univariate polynomial.
pub(crate) fn to_dense<C: Coeff>(
    p: &ExactPoly<C>,
    var: usize,
) -> Result<Vec<C>, UnivariateError> {
    let mut out = vec![C::zero(); p.degree_in(var) as usize + 1];
    for (e, c) in p.terms() {
        for (v, &k) in e.iter().enumerate() {
            if v != var && k != 0 {
                return Err(UnivariateError::NotUnivariate(
                    p.vars().names()[var].clone(),
                ));
            }
        }
        out[e[var] as usize] = c.clone();
    }
    trim(&mut out);
    Ok(out)
}

pub(crate) fn from_dense<C: Coeff>(vars: &Vars, var: usize, d: &[C]) -> ExactPoly<C> {
    let mut out = ExactPoly::zero(vars);
    for (k, c) in d.iter().enumerate() {
        if !c.is_zero() {
            let mut e = vec![0u32; vars.len()];
            e[var] = k as u32;
            out = out.add(&ExactPoly::monomial(vars, e, c.clone()));
        }
    }
    out
}

pub(crate) fn trim<C: Coeff>(v: &mut Vec<C>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

pub(crate) fn deg<C: Coeff>(v: &[C]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

pub(crate) fn dense_mul<C: Coeff>(a: &[C], b: &[C]) -> Vec<C> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![C::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn dense_sub<C: Coeff>(a: &[C], b: &[C]) -> Vec<C> {
    let n = a.len().max(b.len());
    let mut out = vec![C::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] = x.clone();
    }
    for (i, y) in b.iter().enumerate() {
        out[i] = out[i].clone() - y.clone();
    }
    trim(&mut out);
    out
}

/// Division with remainder by a monic divisor.
pub(crate) fn dense_div_rem_monic<C: Coeff>(a: &[C], b: &[C]) -> (Vec<C>, Vec<C>) {
    assert!(b.last().is_some_and(|c| c.is_one()), "divisor not monic");
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    trim(&mut rem);
    let mut quo = vec![C::zero(); a.len().saturating_sub(db)];
    while rem.len() > db {
        let k = rem.len() - 1 - db;
        let c = rem.last().unwrap().clone();
        quo[k] = c.clone();
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] = rem[k + j].clone() - c.clone() * bj.clone();
        }
        trim(&mut rem);
        if rem.len() <= db {
            break;
        }
    }
    trim(&mut quo);
    (quo, rem)
}

/// Monic gcd over a coefficient field, by the Euclidean algorithm.
pub(crate) fn dense_gcd_field<C: FieldCoeff>(a: &[C], b: &[C]) -> Vec<C> {
    let monic = |mut v: Vec<C>| {
        trim(&mut v);
        if let Some(lc) = v.last().cloned() {
            let inv = lc.inv();
            for c in &mut v {
                *c = c.clone() * inv.clone();
            }
        }
        v
    };
    let mut u = monic(a.to_vec());
    let mut v = monic(b.to_vec());
    if u.len() < v.len() {
        std::mem::swap(&mut u, &mut v);
    }
    while !v.is_empty() {
        let (_, r) = dense_div_rem_monic(&u, &v);
        u = v;
        v = monic(r);
    }
    monic(u)
}

/// Monic gcd of two univariate polynomials over a field.
pub fn poly_gcd<C: FieldCoeff>(
    u: &ExactPoly<C>,
    v: &ExactPoly<C>,
    var: &str,
) -> Result<ExactPoly<C>, GcdError> {
    let idx = u.vars().index(var);
    let du = to_dense(u, idx)?;
    let dv = to_dense(v, idx)?;
    Ok(from_dense(u.vars(), idx, &dense_gcd_field(&du, &dv)))
}

/// Inverse of `a` in `Q[ring_var]/(m)` by the extended Euclidean algorithm;
/// errors with the offending element if `a` is a zero divisor.
pub(crate) fn quotient_inverse(a: &[Rat], m: &[Rat]) -> Result<Vec<Rat>, GcdError> {
    // extended gcd over Q[x]
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: Vec<Rat> = vec![];
    let mut s1: Vec<Rat> = vec![Rat::one()];
    while !r1.is_empty() {
        // make r1 monic for the monic division helper, carrying the factor
        let lc = r1.last().unwrap().clone();
        let inv = FieldCoeff::inv(&lc);
        let r1m: Vec<Rat> = r1.iter().map(|c| c * &inv).collect();
        let (q, rem) = dense_div_rem_monic(&r0, &r1m);
        // r0 - (q/lc)*r1 = rem  with r1 original scale
        let qs: Vec<Rat> = q.iter().map(|c| c * &inv).collect();
        let new_s = dense_sub(&s0, &dense_mul(&qs, &s1));
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = new_s;
    }
    // r0 = gcd (up to scale); invertible iff constant
    if deg(&r0) != Some(0) {
        let vars = Vars::new(["y"]);
        return Err(GcdError::ZeroDivisor {
            element: format!("{}", from_dense(&vars, 0, a)),
        });
    }
    let g = r0[0].clone();
    let ginv = FieldCoeff::inv(&g);
    let mut out: Vec<Rat> = s0.iter().map(|c| c * &ginv).collect();
    // reduce mod m
    let (_, mut rem) = {
        let mm: Vec<Rat> = {
            let lc = m.last().unwrap().clone();
            let inv = FieldCoeff::inv(&lc);
            m.iter().map(|c| c * &inv).collect()
        };
        dense_div_rem_monic(&out, &mm)
    };
    trim(&mut rem);
    out = rem;
    Ok(out)
}

/// Monic gcd in `main_var` of two polynomials whose coefficients live in
/// the quotient ring `Q[ring_var]/(m)`. Inversions of leading coefficients
/// can hit zero divisors when `m` is reducible; that is a loud error.
pub fn poly_gcd_mod(
    u: &ExactPoly<Rat>,
    v: &ExactPoly<Rat>,
    main_var: &str,
    ring_var: &str,
    modulus: &ExactPoly<Rat>,
) -> Result<ExactPoly<Rat>, GcdError> {
    let vars = u.vars().clone();
    let main = vars.index(main_var);
    let ring = vars.index(ring_var);
    let m = to_dense(modulus, ring)?;
    let md = m.len() - 1;

    // a polynomial in main_var with ring-element coefficients
    let split = |p: &ExactPoly<Rat>| -> Vec<Vec<Rat>> {
        let d = p.degree_in(main);
        (0..=d)
            .map(|k| {
                let c = p.coeff_of(main, k);
                let mut dense = to_dense(&c, ring).expect("coefficients in the ring variable");
                // reduce mod m
                if dense.len() > md {
                    let mm: Vec<Rat> = {
                        let lc = m.last().unwrap().clone();
                        let inv = FieldCoeff::inv(&lc);
                        m.iter().map(|c| c * &inv).collect()
                    };
                    let (_, rem) = dense_div_rem_monic(&dense, &mm);
                    dense = rem;
                }
                dense
            })
            .collect()
    };
    let ring_trim = |p: &mut Vec<Vec<Rat>>| {
        while p.last().is_some_and(|c| c.is_empty()) {
            p.pop();
        }
    };
    let ring_mul = |a: &[Rat], b: &[Rat]| -> Vec<Rat> {
        let prod = dense_mul(a, b);
        if prod.len() > md {
            let mm: Vec<Rat> = {
                let lc = m.last().unwrap().clone();
                let inv = FieldCoeff::inv(&lc);
                m.iter().map(|c| c * &inv).collect()
            };
            let (_, rem) = dense_div_rem_monic(&prod, &mm);
            rem
        } else {
            prod
        }
    };

    let mut a = split(u);
    let mut b = split(v);
    ring_trim(&mut a);
    ring_trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let make_monic = |p: &mut Vec<Vec<Rat>>| -> Result<(), GcdError> {
        if let Some(lc) = p.last().cloned() {
            let inv = quotient_inverse(&lc, &m)?;
            for c in p.iter_mut() {
                *c = ring_mul(c, &inv);
            }
        }
        Ok(())
    };
    make_monic(&mut a)?;
    make_monic(&mut b)?;
    while !b.is_empty() {
        // a := a - lc(a) * x^(da-db) * b, repeatedly (b is monic)
        let db = b.len() - 1;
        while a.len() > db && !a.is_empty() {
            let da = a.len() - 1;
            if da < db {
                break;
            }
            let lc = a.last().unwrap().clone();
            let shift = da - db;
            for (j, bj) in b.iter().enumerate() {
                let prod = ring_mul(&lc, bj);
                a[shift + j] = dense_sub(&a[shift + j], &prod);
            }
            ring_trim(&mut a);
            if a.len() <= db {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
        ring_trim(&mut b);
        make_monic(&mut b)?;
    }
    // rebuild as an ExactPoly in (main_var, ring_var)
    let mut out = ExactPoly::zero(&vars);
    for (k, c) in a.iter().enumerate() {
        for (j, r) in c.iter().enumerate() {
            if !r.is_zero() {
                let mut e = vec![0u32; vars.len()];
                e[main] = k as u32;
                e[ring] = j as u32;
                out = out.add(&ExactPoly::monomial(&vars, e, r.clone()));
            }
        }
    }
    Ok(out)
}

/// Resultant of `f(t, y)` and the monic modulus `m(y)`, computed as the
/// determinant of the multiplication-by-`f` matrix on the basis
/// `1, y, ..., y^(d-1)` over `Q[t]` (a Bareiss fraction-free determinant).
pub fn resultant_modulus_norm(
    f: &ExactPoly<Rat>,
    t_var: &str,
    ring_var: &str,
    modulus: &ExactPoly<Rat>,
) -> ExactPoly<Rat> {
    let vars = f.vars().clone();
    let t = vars.index(t_var);
    let yv = vars.index(ring_var);
    let m = to_dense(modulus, yv).expect("modulus univariate");
    assert!(m.last().unwrap().is_one(), "modulus must be monic");
    let d = m.len() - 1;

    // rows: y^k * f reduced mod m, as vectors of Q[t] entries
    let dt = f.degree_in(t);
    let poly_entry = |p: &ExactPoly<Rat>, ydeg: u32| -> Vec<Rat> {
        // coefficient of y^ydeg as a dense polynomial in t
        let mut out = vec![Rat::zero(); dt as usize * 2 + d + 2];
        for (e, c) in p.terms() {
            if e[yv] == ydeg {
                out[e[t] as usize] = out[e[t] as usize].clone() + c.clone();
            }
        }
        trim(&mut out);
        out
    };

    let rel = super::poly::TriangularRelations::new(
        &vars,
        vec![(
            &vars.names()[yv].clone(),
            d as u32,
            from_dense(&vars, yv, &m[..d])
                .neg(),
        )],
    )
    .unwrap();

    let y_poly = ExactPoly::var(&vars, &vars.names()[yv]);
    let mut mat: Vec<Vec<Vec<Rat>>> = Vec::with_capacity(d);
    let mut row_poly = rel.reduce(f);
    for _ in 0..d {
        mat.push((0..d as u32).map(|k| poly_entry(&row_poly, k)).collect());
        row_poly = rel.reduce(&row_poly.mul(&y_poly));
    }

    let det = bareiss_det(mat);
    from_dense(&vars, t, &det)
}

/// Fraction-free determinant over Q[t]; entries are dense polynomials.
fn bareiss_det(mut m: Vec<Vec<Vec<Rat>>>) -> Vec<Rat> {
    let n = m.len();
    if n == 0 {
        return vec![Rat::one()];
    }
    let mut sign = false;
    let mut prev: Vec<Rat> = vec![Rat::one()];
    for k in 0..n - 1 {
        if m[k][k].is_empty() {
            let swap = (k + 1..n).find(|&r| !m[r][k].is_empty());
            match swap {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return Vec::new(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = dense_mul(&m[i][j], &m[k][k]);
                let b = dense_mul(&m[i][k], &m[k][j]);
                let num = dense_sub(&a, &b);
                m[i][j] = dense_div_exact(&num, &prev);
            }
            m[i][k] = Vec::new();
        }
        prev = m[k][k].clone();
    }
    let mut det = m[n - 1][n - 1].clone();
    if sign {
        det = det.iter().map(|c| -c.clone()).collect();
    }
    det
}

/// Exact division in Q[t]; panics if the division is not exact
/// (which would indicate a broken Bareiss invariant).
pub(crate) fn dense_div_exact(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return Vec::new();
    }
    let lc = b.last().unwrap().clone();
    let inv = FieldCoeff::inv(&lc);
    let bm: Vec<Rat> = b.iter().map(|c| c * &inv).collect();
    let (q, r) = dense_div_rem_monic(a, &bm);
    assert!(r.is_empty(), "inexact polynomial division");
    q.iter().map(|c| c * &inv).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::QPoly;

    #[test]
    fn basic_gcds() {
        let v = Vars::new(["x"]);
        let u = QPoly::parse(&v, "x^2 - 1").unwrap();
        let w = QPoly::parse(&v, "x - 1").unwrap();
        assert_eq!(poly_gcd(&u, &w, "x").unwrap(), w);

        // gcd(f, f') for f = (x-1)^2 (x-2): hand factorization oracle
        let f = QPoly::parse(&v, "x^3 - 4 * x^2 + 5 * x - 2").unwrap();
        let fp = f.deriv(0);
        assert_eq!(
            poly_gcd(&f, &fp, "x").unwrap(),
            QPoly::parse(&v, "x - 1").unwrap()
        );
    }

    #[test]
    fn quotient_inverse_and_zero_divisors() {
        let v = Vars::new(["y"]);
        let m = to_dense(&QPoly::parse(&v, "y^4 - 1").unwrap(), 0).unwrap();
        // y is a unit mod y^4-1
        let inv = quotient_inverse(&[Rat::zero(), Rat::one()], &m).unwrap();
        let prod = dense_mul(&[Rat::zero(), Rat::one()], &inv);
        let mm: Vec<Rat> = m.clone();
        let (_, rem) = dense_div_rem_monic(&prod, &mm);
        assert_eq!(rem, vec![Rat::one()]);
        // y - 1 is a zero divisor mod y^4 - 1
        let zd = quotient_inverse(&[-Rat::one(), Rat::one()], &m);
        assert!(matches!(zd, Err(GcdError::ZeroDivisor { .. })));
    }

    #[test]
    fn norm_resultant_eliminates() {
        // norm of (t - y) mod y^2 - 2 is t^2 - 2
        let v = Vars::new(["t", "y"]);
        let f = QPoly::parse(&v, "t - y").unwrap();
        let m = QPoly::parse(&v, "y^2 - 2").unwrap();
        let r = resultant_modulus_norm(&f, "t", "y", &m);
        assert_eq!(r, QPoly::parse(&v, "t^2 - 2").unwrap());
    }
}
