//! Sparse exact multivariate polynomials over a coefficient ring, with a
//! plain-text format and triangular quotient-ring reduction.

use super::scalar::Coeff;
use crate::Rat;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyParseError {
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("invalid coefficient literal {0:?}")]
    BadCoefficient(String),
    #[error("invalid term {0:?}")]
    BadTerm(String),
}

/// Ordered variable context shared by all polynomials of one computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vars(Arc<Vec<String>>);

impl Vars {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Self {
        let v: Vec<String> = names.into_iter().map(Into::into).collect();
        assert!(!v.is_empty());
        let mut dedup = v.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), v.len(), "duplicate variable names");
        Vars(Arc::new(v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index(&self, name: &str) -> usize {
        self.0
            .iter()
            .position(|n| n == name)
            .unwrap_or_else(|| panic!("unknown variable {name:?}"))
    }
}

/// Sparse multivariate polynomial; no zero coefficients are stored and the
/// term map is keyed by exponent vectors, so representation is canonical.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactPoly<C: Coeff> {
    vars: Vars,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Coeff> ExactPoly<C> {
    pub fn zero(vars: &Vars) -> Self {
        ExactPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Vars, c: C) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, C::one())
    }

    pub fn int(vars: &Vars, n: i64) -> Self {
        Self::constant(vars, C::from_i64(n))
    }

    pub fn var(vars: &Vars, name: &str) -> Self {
        let mut e = vec![0u32; vars.len()];
        e[vars.index(name)] = 1;
        Self::monomial(vars, e, C::one())
    }

    pub fn monomial(vars: &Vars, exps: Vec<u32>, c: C) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value if the polynomial is constant.
    pub fn constant_value(&self) -> Option<C> {
        if self.terms.is_empty() {
            return Some(C::zero());
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if e.iter().all(|&k| k == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn coeff(&self, exps: &[u32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    fn insert_term(&mut self, exps: Vec<u32>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars, "variable contexts differ");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars, "variable contexts differ");
        let mut out = Self::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(&self.vars);
        if c.is_zero() {
            return out;
        }
        for (e, k) in &self.terms {
            out.insert_term(e.clone(), k.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(&self.vars);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Coefficient of `var^k`, as a polynomial with the same context.
    pub fn coeff_of(&self, var: usize, k: u32) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[var] == k {
                let mut e2 = e.clone();
                e2[var] = 0;
                out.insert_term(e2, c.clone());
            }
        }
        out
    }

    pub fn deriv(&self, var: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[var] > 0 {
                let mut e2 = e.clone();
                e2[var] -= 1;
                out.insert_term(e2, c.clone() * C::from_i64(e[var] as i64));
            }
        }
        out
    }

    /// Substitute a polynomial for a variable. The replacement must not
    /// contain the substituted variable.
    pub fn substitute(&self, var: usize, value: &Self) -> Self {
        assert_eq!(self.vars, value.vars);
        assert_eq!(value.degree_in(var), 0, "replacement contains the variable");
        let d = self.degree_in(var);
        // Horner over var
        let mut out = Self::zero(&self.vars);
        for k in (0..=d).rev() {
            out = out.mul(value);
            out = out.add(&self.coeff_of(var, k));
        }
        out
    }

    /// Substitute `var := num/den` and clear denominators: returns
    /// `den^D * self|_{var=num/den}` where `D` is the degree in `var`.
    pub fn substitute_rational(&self, var: usize, num: &Self, den: &Self) -> Self {
        assert_eq!(self.vars, num.vars);
        assert_eq!(self.vars, den.vars);
        assert_eq!(num.degree_in(var), 0);
        assert_eq!(den.degree_in(var), 0);
        let d = self.degree_in(var);
        let mut out = Self::zero(&self.vars);
        for k in 0..=d {
            let part = self
                .coeff_of(var, k)
                .mul(&num.pow(k))
                .mul(&den.pow(d - k));
            out = out.add(&part);
        }
        out
    }

    /// Full evaluation at a point given by one value per variable.
    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t = t * point[v].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Divide out the largest common monomial factor; returns the reduced
    /// polynomial and the extracted exponents per variable.
    pub fn strip_monomial_factor(&self) -> (Self, Vec<u32>) {
        if self.terms.is_empty() {
            return (self.clone(), vec![0; self.vars.len()]);
        }
        let n = self.vars.len();
        let mut min_exp = vec![u32::MAX; n];
        for e in self.terms.keys() {
            for v in 0..n {
                min_exp[v] = min_exp[v].min(e[v]);
            }
        }
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let e2: Vec<u32> = e.iter().zip(&min_exp).map(|(a, b)| a - b).collect();
            out.terms.insert(e2, c.clone());
        }
        (out, min_exp)
    }

    /// Map the coefficients into another ring.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> ExactPoly<D> {
        let mut out = ExactPoly::zero(&self.vars);
        for (e, c) in &self.terms {
            out.insert_term(e.clone(), f(c));
        }
        out
    }

    /// Lexicographically greatest term.
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &C)> {
        self.terms.iter().next_back()
    }

    /// Parse the plain text format: terms `c * x^a * y^b` joined by `+`,
    /// coefficients as rational or parenthesised Gaussian literals.
    pub fn parse(vars: &Vars, input: &str) -> Result<Self, PolyParseError>
    where
        C: ParseCoeff,
    {
        let mut out = Self::zero(vars);
        for term in split_terms(input) {
            let term = term.trim();
            if term.is_empty() {
                continue;
            }
            out = out.add(&parse_term(vars, term)?);
        }
        Ok(out)
    }
}

impl ExactPoly<Rat> {
    /// Divide by the rational content and normalize the sign so the
    /// lexicographically greatest term has a positive coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        use num_integer::Integer as _;
        let mut num_gcd = num_bigint::BigInt::zero();
        let mut den_lcm = num_bigint::BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let content = Rat::new(num_gcd, den_lcm);
        let mut out = self.scale(&super::scalar::FieldCoeff::inv(&content));
        if out.leading_term().is_some_and(|(_, c)| c < &Rat::zero()) {
            out = out.neg();
        }
        out
    }

    /// Equality up to a nonzero rational constant factor.
    pub fn eq_up_to_scale(&self, other: &Self) -> bool {
        self.primitive_part() == other.primitive_part()
    }
}

/// Coefficient parsing used by the text format.
pub trait ParseCoeff: Coeff {
    fn parse_coeff(s: &str) -> Result<Self, String>;
}

impl ParseCoeff for Rat {
    fn parse_coeff(s: &str) -> Result<Self, String> {
        crate::parse_rat(s)
    }
}

impl ParseCoeff for super::Gauss {
    fn parse_coeff(s: &str) -> Result<Self, String> {
        super::Gauss::parse(s)
    }
}

/// Split a polynomial string at top-level `+`/`-`, keeping the sign.
fn split_terms(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for (k, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            '+' | '-' if depth == 0 && k > 0 => {
                // not an exponent sign; '^-' never occurs (exponents are
                // nonnegative), '*-'/'* -' handled by trimming
                let prev = s[..k].trim_end().chars().last();
                if !matches!(prev, Some('*') | Some('^') | Some('+') | Some('-') | None) {
                    out.push(cur.clone());
                    cur.clear();
                    if ch == '-' {
                        cur.push('-');
                    }
                    continue;
                }
            }
            _ => {}
        }
        cur.push(ch);
    }
    if !cur.trim().is_empty() {
        out.push(cur);
    }
    out
}

fn parse_term<C: ParseCoeff>(vars: &Vars, term: &str) -> Result<ExactPoly<C>, PolyParseError> {
    let mut body = term.trim();
    let mut neg = false;
    while let Some(rest) = body.strip_prefix('-').or_else(|| body.strip_prefix('+')) {
        if body.starts_with('-') {
            neg = !neg;
        }
        body = rest.trim_start();
    }
    let mut coeff = C::one();
    let mut exps = vec![0u32; vars.len()];
    let mut saw_factor = false;
    for factor in split_factors(body) {
        let f = factor.trim();
        if f.is_empty() {
            continue;
        }
        saw_factor = true;
        let first = f.chars().next().unwrap();
        if first.is_ascii_digit() || first == '(' || first == '-' {
            let c = C::parse_coeff(f).map_err(|_| PolyParseError::BadCoefficient(f.into()))?;
            coeff = coeff * c;
        } else {
            let (name, exp) = match f.split_once('^') {
                Some((n, e)) => {
                    let exp: u32 = e
                        .trim()
                        .parse()
                        .map_err(|_| PolyParseError::BadTerm(f.into()))?;
                    (n.trim(), exp)
                }
                None => (f, 1),
            };
            let idx = vars
                .names()
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| PolyParseError::UnknownVariable(name.into()))?;
            exps[idx] += exp;
        }
    }
    if !saw_factor {
        return Err(PolyParseError::BadTerm(term.into()));
    }
    if neg {
        coeff = -coeff;
    }
    Ok(ExactPoly::monomial(vars, exps, coeff))
}

fn split_factors(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            '*' if depth == 0 => {
                out.push(cur.clone());
                cur.clear();
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    out.push(cur);
    out
}

impl<C: Coeff> fmt::Display for ExactPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mut cs = format!("{c}");
            if first {
                first = false;
                if let Some(rest) = cs.strip_prefix('-') {
                    let is_const = e.iter().all(|&k| k == 0);
                    if !is_const && rest == "1" {
                        write!(f, "-")?;
                        cs = "1".to_string();
                    }
                }
            } else if let Some(rest) = cs.strip_prefix('-') {
                cs = rest.to_string();
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            let is_const = e.iter().all(|&k| k == 0);
            if (is_const || cs != "1") && (is_const || !c.is_one()) {
                parts.push(cs);
            }
            for (v, &k) in e.iter().enumerate() {
                if k == 1 {
                    parts.push(self.vars.names()[v].clone());
                } else if k > 1 {
                    parts.push(format!("{}^{}", self.vars.names()[v], k));
                }
            }
            write!(f, "{}", parts.join(" * "))?;
        }
        Ok(())
    }
}

/// A terminating rewrite system `var^power -> replacement` defining a
/// quotient ring with canonical normal forms.
#[derive(Debug, Clone)]
pub struct TriangularRelations<C: Coeff> {
    rules: Vec<(usize, u32, ExactPoly<C>)>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RelationError {
    #[error("two rules rewrite the same variable")]
    DuplicateVariable,
    #[error("rule replacement for variable {0} is not lower than its leading monomial")]
    NonTerminating(String),
}

impl<C: Coeff> TriangularRelations<C> {
    /// Rules are `(var name, power, replacement)`. A replacement must have
    /// degree `< power` in its own variable and must not mention any
    /// earlier-listed rule variable at or above that rule's power, which
    /// makes the rewrite terminating and, as the rule monomials are
    /// pairwise coprime, confluent.
    pub fn new(
        vars: &Vars,
        rules: Vec<(&str, u32, ExactPoly<C>)>,
    ) -> Result<Self, RelationError> {
        let mut compiled: Vec<(usize, u32, ExactPoly<C>)> = Vec::new();
        for (name, pow, rep) in rules {
            assert_eq!(rep.vars(), vars);
            assert!(pow >= 1);
            let idx = vars.index(name);
            if compiled.iter().any(|(v, _, _)| *v == idx) {
                return Err(RelationError::DuplicateVariable);
            }
            if rep.degree_in(idx) >= pow {
                return Err(RelationError::NonTerminating(name.to_string()));
            }
            for (v, p, _) in &compiled {
                if rep.degree_in(*v) >= *p {
                    return Err(RelationError::NonTerminating(name.to_string()));
                }
            }
            compiled.push((idx, pow, rep));
        }
        Ok(TriangularRelations { rules: compiled })
    }

    pub fn rules(&self) -> &[(usize, u32, ExactPoly<C>)] {
        &self.rules
    }

    /// Reduce to the canonical normal form: no term is divisible by any
    /// rule's leading monomial.
    pub fn reduce(&self, p: &ExactPoly<C>) -> ExactPoly<C> {
        let mut cur = p.clone();
        let mut fuel = 100_000u64;
        loop {
            let mut hit = None;
            'scan: for e in cur.terms.keys() {
                for (v, pow, _) in &self.rules {
                    if e[*v] >= *pow {
                        hit = Some((e.clone(), *v, *pow));
                        break 'scan;
                    }
                }
            }
            let Some((e, v, pow)) = hit else {
                return cur;
            };
            let rep = &self
                .rules
                .iter()
                .find(|(rv, _, _)| *rv == v)
                .unwrap()
                .2;
            let c = cur.terms.remove(&e).unwrap();
            let mut e2 = e.clone();
            e2[v] -= pow;
            let piece = ExactPoly::monomial(&cur.vars, e2, c).mul(rep);
            cur = cur.add(&piece);
            fuel -= 1;
            assert!(fuel > 0, "relation reduction did not terminate");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rati, QPoly};

    fn vxy() -> Vars {
        Vars::new(["x", "y"])
    }

    #[test]
    fn arithmetic_and_derivatives() {
        let v = vxy();
        let p = QPoly::parse(&v, "x^2 - y^4").unwrap();
        let px = p.deriv(v.index("x"));
        assert_eq!(px, QPoly::parse(&v, "2 * x").unwrap());
        let pyy = p.deriv(v.index("y")).deriv(v.index("y"));
        assert_eq!(pyy, QPoly::parse(&v, "-12 * y^2").unwrap());
        // symmetry of mixed partials on a random-ish polynomial
        let q = QPoly::parse(&v, "3/2 * x^3 * y - 7 * x * y^2 + 5").unwrap();
        assert_eq!(
            q.deriv(0).deriv(1),
            q.deriv(1).deriv(0),
        );
    }

    #[test]
    fn parse_display_round_trip() {
        let v = vxy();
        for s in ["x^2 - y^4", "1 + x + y - 4 * x * y", "-3/2 * x * y^3 + 2"] {
            let p = QPoly::parse(&v, s).unwrap();
            let q = QPoly::parse(&v, &p.to_string()).unwrap();
            assert_eq!(p, q, "round trip {s}");
        }
        let vg = Vars::new(["x", "y"]);
        let g = crate::GPoly::parse(&vg, "(-41/256+19/128i) * x + (2i) * y^2").unwrap();
        let g2 = crate::GPoly::parse(&vg, &g.to_string()).unwrap();
        assert_eq!(g, g2);
    }

    #[test]
    fn substitution() {
        let v = vxy();
        let p = QPoly::parse(&v, "x^2 + y").unwrap();
        let r = p.substitute(0, &QPoly::parse(&v, "y + 1").unwrap());
        assert_eq!(r, QPoly::parse(&v, "y^2 + 3 * y + 1").unwrap());
        // rational substitution clears denominators: x := 1/y in x^2 + y
        let num = QPoly::one(&v);
        let den = QPoly::var(&v, "y");
        let r = p.substitute_rational(0, &num, &den);
        assert_eq!(r, QPoly::parse(&v, "1 + y^3").unwrap());
    }

    #[test]
    fn triangular_reduction_examples() {
        // y^5 mod {y^4 -> 1}  =>  y
        let v = vxy();
        let rel =
            TriangularRelations::new(&v, vec![("y", 4, QPoly::one(&v))]).unwrap();
        let p = QPoly::parse(&v, "y^5").unwrap();
        assert_eq!(rel.reduce(&p), QPoly::parse(&v, "y").unwrap());

        // x^2*y mod {x^2 -> y^2*(D+4y)}  =>  D y^3 + 4 y^4
        let v3 = Vars::new(["x", "y", "D"]);
        let rep = QPoly::parse(&v3, "D * y^2 + 4 * y^3").unwrap();
        let rel = TriangularRelations::new(&v3, vec![("x", 2, rep.clone())]).unwrap();
        let p = QPoly::parse(&v3, "x^2 * y").unwrap();
        assert_eq!(rel.reduce(&p), QPoly::parse(&v3, "D * y^3 + 4 * y^4").unwrap());

        // x^2 y^3 mod both rules  =>  D y + 4 y^2
        let rel2 = TriangularRelations::new(
            &v3,
            vec![("x", 2, rep), ("y", 4, QPoly::one(&v3))],
        )
        .unwrap();
        let p = QPoly::parse(&v3, "x^2 * y^3").unwrap();
        let red = rel2.reduce(&p);
        assert_eq!(red, QPoly::parse(&v3, "D * y + 4 * y^2").unwrap());
        // idempotent
        assert_eq!(rel2.reduce(&red), red);
    }

    #[test]
    fn reduction_is_ring_hom_on_exact_roots() {
        // evaluation oracle: pick rational points satisfying the relations
        // exactly (y0 = +-1, x0 free, D = x0^2/y0^2 - 4 y0) and compare.
        let v3 = Vars::new(["x", "y", "D"]);
        let rep = QPoly::parse(&v3, "D * y^2 + 4 * y^3").unwrap();
        let rel = TriangularRelations::new(
            &v3,
            vec![("x", 2, rep), ("y", 4, QPoly::one(&v3))],
        )
        .unwrap();
        let f = QPoly::parse(&v3, "x^3 * y^2 - 2 * x * y^5 + D^2 * x^2").unwrap();
        let g = QPoly::parse(&v3, "x^2 * y^3 + D * x - 7").unwrap();
        for (x0, y0) in [(rat(3, 2), rati(1)), (rat(-5, 3), rati(-1)), (rati(2), rati(1))] {
            let d0 = &x0 * &x0 / (&y0 * &y0) - rati(4) * &y0;
            let pt = vec![x0.clone(), y0.clone(), d0];
            for p in [&f, &g, &f.mul(&g), &f.add(&g)] {
                assert_eq!(rel.reduce(p).eval(&pt), p.eval(&pt));
            }
        }
    }

    #[test]
    fn nonterminating_rules_rejected() {
        let v = vxy();
        let bad = TriangularRelations::new(
            &v,
            vec![("y", 2, QPoly::parse(&v, "y^3").unwrap())],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn primitive_part_normalizes() {
        let v = vxy();
        let p = QPoly::parse(&v, "-8 * x^2 + 4 * y").unwrap();
        assert_eq!(p.primitive_part(), QPoly::parse(&v, "2 * x^2 - y").unwrap());
        assert!(p.eq_up_to_scale(&QPoly::parse(&v, "2 * x^2 - y").unwrap()));
    }
}
