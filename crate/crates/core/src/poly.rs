//! Sparse multivariate polynomials over the integers in the variables
//! `w, x, y, z, t`, with arbitrary-precision coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub const NUM_VARS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    W,
    X,
    Y,
    Z,
    T,
}

impl Var {
    pub const ALL: [Var; NUM_VARS] = [Var::W, Var::X, Var::Y, Var::Z, Var::T];

    pub fn index(self) -> usize {
        match self {
            Var::W => 0,
            Var::X => 1,
            Var::Y => 2,
            Var::Z => 3,
            Var::T => 4,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Var::W => 'w',
            Var::X => 'x',
            Var::Y => 'y',
            Var::Z => 'z',
            Var::T => 't',
        }
    }

    pub fn from_symbol(c: char) -> Option<Var> {
        match c {
            'w' => Some(Var::W),
            'x' => Some(Var::X),
            'y' => Some(Var::Y),
            'z' => Some(Var::Z),
            't' => Some(Var::T),
            _ => None,
        }
    }
}

/// Exponent vector, ordered as (w, x, y, z, t).
pub type Exps = [u16; NUM_VARS];

/// A polynomial stored as a map from exponent vectors to non-zero coefficients.
/// Equality is map equality; the no-zero-coefficient invariant is maintained by
/// every operation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Exps, BigInt>,
}

/// One monomial of the JSON rendering.
#[derive(Debug, Clone, Serialize)]
pub struct PolyTerm {
    pub coeff: String,
    pub exps: Exps,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term([0; NUM_VARS], BigInt::from(c));
        p
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::monomial(v, 1)
    }

    pub fn monomial(v: Var, exp: u16) -> Self {
        let mut exps = [0; NUM_VARS];
        exps[v.index()] = exp;
        let mut p = MultiPoly::zero();
        p.add_term(exps, BigInt::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &BigInt)> {
        self.terms.iter()
    }

    /// Coefficient of an exponent vector (zero when absent).
    pub fn coeff(&self, exps: Exps) -> BigInt {
        self.terms.get(&exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, exps: Exps, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Multiply by a single monomial; used heavily by the recursive engine.
    pub fn mul_monomial(&self, exps: Exps, coeff: &BigInt) -> Self {
        if coeff.is_zero() {
            return MultiPoly::zero();
        }
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            let mut shifted = *e;
            for i in 0..NUM_VARS {
                shifted[i] += exps[i];
            }
            out.add_term(shifted, c * coeff);
        }
        out
    }

    pub fn scale(&self, c: i64) -> Self {
        self.mul_monomial([0; NUM_VARS], &BigInt::from(c))
    }

    pub fn pow(&self, n: u16) -> Self {
        let mut out = MultiPoly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Degree in one variable.
    pub fn degree(&self, v: Var) -> u16 {
        self.terms.keys().map(|e| e[v.index()]).max().unwrap_or(0)
    }

    /// Substitute integers for a subset of the variables; the rest remain
    /// symbolic.
    pub fn eval(&self, assignment: &[(Var, BigInt)]) -> MultiPoly {
        let mut values: [Option<&BigInt>; NUM_VARS] = [None; NUM_VARS];
        for (v, val) in assignment {
            values[v.index()] = Some(val);
        }
        let mut out = MultiPoly::zero();
        for (exps, coeff) in &self.terms {
            let mut c = coeff.clone();
            let mut rest = *exps;
            for i in 0..NUM_VARS {
                if let Some(val) = values[i] {
                    c *= val.pow(exps[i] as u32);
                    rest[i] = 0;
                }
            }
            out.add_term(rest, c);
        }
        out
    }

    pub fn eval_i64(&self, assignment: &[(Var, i64)]) -> MultiPoly {
        let owned: Vec<(Var, BigInt)> = assignment
            .iter()
            .map(|(v, n)| (*v, BigInt::from(*n)))
            .collect();
        self.eval(&owned)
    }

    /// Fully evaluate at integers; panics if any variable is left unassigned.
    pub fn eval_all(&self, w: i64, x: i64, y: i64, z: i64, t: i64) -> BigInt {
        let p = self.eval_i64(&[
            (Var::W, w),
            (Var::X, x),
            (Var::Y, y),
            (Var::Z, z),
            (Var::T, t),
        ]);
        if p.is_zero() {
            return BigInt::zero();
        }
        assert_eq!(p.num_terms(), 1, "evaluation left symbolic variables");
        p.coeff([0; NUM_VARS])
    }

    /// Replace every occurrence of `w` by the polynomial `w - x - y - z`,
    /// expanding exactly.
    pub fn subst_w(&self) -> MultiPoly {
        let base = {
            let mut b = MultiPoly::var(Var::W);
            b = &b - &MultiPoly::var(Var::X);
            b = &b - &MultiPoly::var(Var::Y);
            &b - &MultiPoly::var(Var::Z)
        };
        let max_w = self.degree(Var::W);
        let mut powers = Vec::with_capacity(max_w as usize + 1);
        powers.push(MultiPoly::one());
        for i in 1..=max_w {
            powers.push(&powers[(i - 1) as usize] * &base);
        }
        let mut out = MultiPoly::zero();
        for (exps, coeff) in &self.terms {
            let mut rest = *exps;
            rest[Var::W.index()] = 0;
            out = &out + &powers[exps[0] as usize].mul_monomial(rest, coeff);
        }
        out
    }

    /// JSON-friendly term list, sorted by exponent vector.
    pub fn json_terms(&self) -> Vec<PolyTerm> {
        self.terms
            .iter()
            .map(|(exps, coeff)| PolyTerm {
                coeff: coeff.to_string(),
                exps: *exps,
            })
            .collect()
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: Self) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: Self) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: Self) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let mut e = *e1;
                for i in 0..NUM_VARS {
                    e[i] += e2[i];
                }
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

// Canonical text form groups monomials by the power of t, lowest first, with
// the w,x,y,z part of each group in fixed variable order, e.g.
// "(w+x+z)*t + y*t^2".
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut by_t: BTreeMap<u16, Vec<(Exps, &BigInt)>> = BTreeMap::new();
        for (exps, coeff) in &self.terms {
            by_t.entry(exps[4]).or_default().push((*exps, coeff));
        }
        let mut pieces: Vec<String> = Vec::new();
        for (t_exp, mut group) in by_t {
            // w before x before y before z: descending lex on exponent vectors
            group.sort_by_key(|m| std::cmp::Reverse(m.0));
            pieces.push(render_group(t_exp, &group));
        }
        let mut out = String::new();
        for (i, piece) in pieces.iter().enumerate() {
            if i == 0 {
                out.push_str(piece);
            } else if let Some(rest) = piece.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(piece);
            }
        }
        write!(f, "{out}")
    }
}

fn render_group(t_exp: u16, monomials: &[(Exps, &BigInt)]) -> String {
    let t_part = match t_exp {
        0 => String::new(),
        1 => "t".to_string(),
        k => format!("t^{k}"),
    };
    if monomials.len() == 1 {
        let (exps, coeff) = &monomials[0];
        let body = render_monomial(exps, coeff);
        if t_part.is_empty() {
            return body;
        }
        if body == "1" {
            return t_part;
        }
        if body == "-1" {
            return format!("-{t_part}");
        }
        return format!("{body}*{t_part}");
    }
    let mut body = String::new();
    for (i, (exps, coeff)) in monomials.iter().enumerate() {
        let m = render_monomial(exps, coeff);
        if i == 0 {
            body.push_str(&m);
        } else if let Some(rest) = m.strip_prefix('-') {
            body.push('-');
            body.push_str(rest);
        } else {
            body.push('+');
            body.push_str(&m);
        }
    }
    if t_part.is_empty() {
        body
    } else {
        format!("({body})*{t_part}")
    }
}

/// Renders the w,x,y,z part of one monomial, sign included.
fn render_monomial(exps: &Exps, coeff: &BigInt) -> String {
    let mut factors: Vec<String> = Vec::new();
    for v in [Var::W, Var::X, Var::Y, Var::Z] {
        let e = exps[v.index()];
        match e {
            0 => {}
            1 => factors.push(v.symbol().to_string()),
            k => factors.push(format!("{}^{}", v.symbol(), k)),
        }
    }
    if factors.is_empty() {
        return coeff.to_string();
    }
    let vars = factors.join("*");
    if coeff.is_one() {
        vars
    } else if (-coeff).is_one() {
        format!("-{vars}")
    } else {
        format!("{coeff}*{vars}")
    }
}
