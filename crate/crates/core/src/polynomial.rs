//! Sparse multivariate polynomials with rational coefficients over the fixed
//! alphabet `lam, t, q, r, s`, and unreduced rational functions built from
//! them.
//!
//! `lam` is `e^{-beta}`, `t` is `e^{beta} - 1`, `q` is the number of colors,
//! and `r`, `s` are the shifted color counts used by the certificates.
//!
//! A [`Polynomial`] is stored as a map from [`Monomial`] to a nonzero
//! coefficient; monomials are ordered graded-lexicographically, so the last
//! entry of the map is the leading term. A [`RationalFunction`] is a plain
//! numerator/denominator pair that is never reduced; equality is decided by
//! cross-multiplication.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use crate::rational::{self, Rational};
use crate::{Error, Result};

/// The five formal variables, in alphabet order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Lam,
    T,
    Q,
    R,
    S,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::Lam, Var::T, Var::Q, Var::R, Var::S];

    pub fn name(self) -> &'static str {
        match self {
            Var::Lam => "lam",
            Var::T => "t",
            Var::Q => "q",
            Var::R => "r",
            Var::S => "s",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector, one entry per [`Var`]. Ordered by total degree first,
/// then lexicographically in alphabet order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial([u32; 5]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 5]);

    pub fn new(exponents: [u32; 5]) -> Self {
        Monomial(exponents)
    }

    pub fn var(v: Var, exponent: u32) -> Self {
        let mut e = [0; 5];
        e[v.index()] = exponent;
        Monomial(e)
    }

    pub fn exponents(&self) -> [u32; 5] {
        self.0
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        Monomial(e)
    }

    /// `other / self`; caller guarantees `self.divides(other)`.
    fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut e = other.0;
        for (a, b) in e.iter_mut().zip(self.0.iter()) {
            *a -= b;
        }
        Monomial(e)
    }

    fn without(&self, v: Var) -> Monomial {
        let mut e = self.0;
        e[v.index()] = 0;
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    /// Compact form, `lam^2*q`; the unit monomial prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Outcome of a coefficient sign scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignCheck {
    pub all_nonneg: bool,
    pub is_zero: bool,
    /// The first negative term in graded-lex order, when there is one.
    pub witness: Option<(Monomial, Rational)>,
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::term(c, Monomial::ONE)
    }

    pub fn int(c: i64) -> Self {
        Polynomial::constant(rational::int(c))
    }

    pub fn var(v: Var) -> Self {
        Polynomial::term(Rational::one(), Monomial::var(v, 1))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// Builds a polynomial from possibly repeated or zero terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Univariate polynomial `sum coeffs[i] * v^i`.
    pub fn univariate<I: IntoIterator<Item = Rational>>(v: Var, coeffs: I) -> Self {
        Polynomial::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(v, i as u32), c)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Variables with a positive exponent in some term.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|&v| self.terms.keys().any(|m| m.exponent(v) > 0))
            .collect()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Partial derivative with respect to `v`.
    pub fn derivative(&self, v: Var) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(v);
            if e == 0 {
                return None;
            }
            let mut ex = m.exponents();
            ex[v.index()] -= 1;
            Some((Monomial::new(ex), c * rational::int(i64::from(e))))
        }))
    }

    /// Exact value at a rational point. Every variable occurring in the
    /// polynomial must be bound.
    pub fn eval(&self, point: &BTreeMap<Var, Rational>) -> Result<Rational> {
        for v in self.variables() {
            if !point.contains_key(&v) {
                return Err(Error::MissingBinding(v.name()));
            }
        }
        // Cache powers per variable.
        let mut powers: [Vec<Rational>; 5] = Default::default();
        for v in self.variables() {
            let x = &point[&v];
            let deg = self.degree_in(v) as usize;
            let mut pw = Vec::with_capacity(deg + 1);
            pw.push(Rational::one());
            for i in 1..=deg {
                let next = &pw[i - 1] * x;
                pw.push(next);
            }
            powers[v.index()] = pw;
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in Var::ALL {
                let e = m.exponent(v) as usize;
                if e > 0 {
                    t *= &powers[v.index()][e];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Replaces the variable `v` by a rational constant.
    pub fn eval_var(&self, v: Var, value: &Rational) -> Polynomial {
        let deg = self.degree_in(v);
        let mut pw = Vec::with_capacity(deg as usize + 1);
        pw.push(Rational::one());
        for i in 1..=deg as usize {
            let next = &pw[i - 1] * value;
            pw.push(next);
        }
        Polynomial::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.without(v), c * &pw[m.exponent(v) as usize])),
        )
    }

    /// Polynomial substitution `v -> replacement`.
    pub fn compose(&self, v: Var, replacement: &Polynomial) -> Polynomial {
        let deg = self.degree_in(v);
        let mut pw = Vec::with_capacity(deg as usize + 1);
        pw.push(Polynomial::one());
        for i in 1..=deg as usize {
            let next = &pw[i - 1] * replacement;
            pw.push(next);
        }
        // Group by the exponent of v so each power is multiplied once.
        let mut groups: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            groups
                .entry(m.exponent(v))
                .or_default()
                .add_term(m.without(v), c.clone());
        }
        let mut out = Polynomial::zero();
        for (e, rest) in groups {
            out += &(&rest * &pw[e as usize]);
        }
        out
    }

    /// Substitutes rational functions for some variables, over a common
    /// denominator `prod_v den_v^{deg_v}`.
    pub fn substitute(&self, bindings: &BTreeMap<Var, RationalFunction>) -> Result<RationalFunction> {
        for rf in bindings.values() {
            if rf.den.is_zero() {
                return Err(Error::ZeroDenominator);
            }
        }
        let active: Vec<(Var, &RationalFunction, u32)> = bindings
            .iter()
            .filter_map(|(v, rf)| {
                let deg = self.degree_in(*v);
                (deg > 0).then_some((*v, rf, deg))
            })
            .collect();
        // num_pows[k][e] = num^e * den^(deg - e)
        let mut scaled: Vec<Vec<Polynomial>> = Vec::with_capacity(active.len());
        let mut common_den = Polynomial::one();
        for (_, rf, deg) in &active {
            let deg = *deg as usize;
            let mut num_pw = Vec::with_capacity(deg + 1);
            num_pw.push(Polynomial::one());
            let mut den_pw = Vec::with_capacity(deg + 1);
            den_pw.push(Polynomial::one());
            for i in 1..=deg {
                let n = &num_pw[i - 1] * &rf.num;
                num_pw.push(n);
                let d = &den_pw[i - 1] * &rf.den;
                den_pw.push(d);
            }
            let row = (0..=deg).map(|e| &num_pw[e] * &den_pw[deg - e]).collect();
            scaled.push(row);
            common_den = &common_den * &den_pw[deg];
        }
        // Group terms by their exponents on the bound variables.
        let mut groups: BTreeMap<Vec<u32>, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key: Vec<u32> = active.iter().map(|(v, _, _)| m.exponent(*v)).collect();
            let mut rest = *m;
            for (v, _, _) in &active {
                rest = rest.without(*v);
            }
            groups.entry(key).or_default().add_term(rest, c.clone());
        }
        let mut num = Polynomial::zero();
        for (key, rest) in groups {
            let mut t = rest;
            for (k, e) in key.iter().enumerate() {
                t = &t * &scaled[k][*e as usize];
            }
            num += &t;
        }
        RationalFunction::new(num, common_den)
    }

    /// Exact quotient `self / den`; fails with [`Error::InexactDivision`]
    /// if the remainder is nonzero.
    pub fn divide_exact(&self, den: &Polynomial) -> Result<Polynomial> {
        let (lm, lc) = match den.leading_term() {
            Some((m, c)) => (*m, c.clone()),
            None => return Err(Error::ZeroDenominator),
        };
        let mut rem = self.clone();
        let mut quotient = Polynomial::zero();
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return Err(Error::InexactDivision);
            }
            let qm = lm.quotient_of(m);
            let qc = c / &lc;
            rem -= &den.mul_term(&qm, &qc);
            quotient.add_term(qm, qc);
        }
        Ok(quotient)
    }

    pub fn coeffs_nonneg(&self) -> SignCheck {
        let witness = self
            .terms
            .iter()
            .rev()
            .find(|(_, c)| c.is_negative())
            .map(|(m, c)| (*m, c.clone()));
        SignCheck {
            all_nonneg: witness.is_none(),
            is_zero: self.is_zero(),
            witness,
        }
    }

    /// One term per line, leading term first:
    /// `coeff * lam^a t^b q^c r^d s^e`. The zero polynomial is empty.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let e = m.exponents();
            out.push_str(&format!(
                "{} * lam^{} t^{} q^{} r^{} s^{}\n",
                c, e[0], e[1], e[2], e[3], e[4]
            ));
        }
        out
    }

    /// Inverse of [`Polynomial::to_text`]. Blank lines are ignored; the
    /// reported offset is the byte offset of the offending line.
    pub fn from_text(text: &str) -> Result<Polynomial> {
        let mut p = Polynomial::zero();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let body = line.trim();
            if !body.is_empty() {
                let bad = |msg: &str| Error::Parse {
                    offset,
                    message: format!("{msg} in `{body}`"),
                };
                let (coeff, mono) = body.split_once('*').ok_or_else(|| bad("missing `*`"))?;
                let c = rational::parse(coeff).map_err(|_| bad("bad coefficient"))?;
                let mut e = [0u32; 5];
                let mut seen = 0;
                for factor in mono.split_whitespace() {
                    let (name, exp) = factor.split_once('^').ok_or_else(|| bad("missing `^`"))?;
                    let v = Var::from_name(name).ok_or_else(|| bad("unknown variable"))?;
                    e[v.index()] = exp.parse().map_err(|_| bad("bad exponent"))?;
                    seen += 1;
                }
                if seen != 5 {
                    return Err(bad("expected five factors"));
                }
                p.add_term(Monomial::new(e), c);
            }
            offset += line.len();
        }
        Ok(p)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    /// Single-line human form, leading term first: `3*lam^2 - q + 1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl From<Var> for Polynomial {
    fn from(v: Var) -> Self {
        Polynomial::var(v)
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl<'a> AddAssign<&'a Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &'a Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<'a> SubAssign<&'a Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &'a Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl<'a> MulAssign<&'a Polynomial> for Polynomial {
    fn mul_assign(&mut self, rhs: &'a Polynomial) {
        *self = &*self * rhs;
    }
}

impl<'a, 'b> Add<&'b Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'b Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a, 'b> Sub<&'b Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'b Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a, 'b> Mul<&'b Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'b Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                out.add_term(m.mul(n), a * b);
            }
        }
        out
    }
}

impl<'a> Neg for &'a Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &'a Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// `num / den` with no cancellation. Equality is `a*d == c*b`.
#[derive(Clone)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn into_parts(self) -> (Polynomial, Polynomial) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> RationalFunction {
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &Polynomial) -> RationalFunction {
        RationalFunction {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    pub fn div_poly(&self, p: &Polynomial) -> Result<RationalFunction> {
        RationalFunction::new(self.num.clone(), &self.den * p)
    }

    pub fn recip(&self) -> Result<RationalFunction> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RationalFunction) -> Result<RationalFunction> {
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn eval(&self, point: &BTreeMap<Var, Rational>) -> Result<Rational> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(Error::Undefined("denominator vanishes at the point"));
        }
        Ok(self.num.eval(point)? / d)
    }

    pub fn substitute(&self, bindings: &BTreeMap<Var, RationalFunction>) -> Result<RationalFunction> {
        let n = self.num.substitute(bindings)?;
        let d = self.den.substitute(bindings)?;
        n.checked_div(&d)
    }

    pub fn compose(&self, v: Var, replacement: &Polynomial) -> Result<RationalFunction> {
        RationalFunction::new(self.num.compose(v, replacement), self.den.compose(v, replacement))
    }

    /// The polynomial this function equals; errors unless the denominator
    /// divides the numerator exactly.
    pub fn to_polynomial(&self) -> Result<Polynomial> {
        self.num.divide_exact(&self.den)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }
}

impl<'a, 'b> Add<&'b RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &'b RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            };
        }
        RationalFunction {
            num: &self.num * &rhs.den + &rhs.num * &self.den,
            den: &self.den * &rhs.den,
        }
    }
}

impl<'a> Neg for &'a RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<'a, 'b> Sub<&'b RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &'b RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a, 'b> Mul<&'b RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &'b RationalFunction) -> RationalFunction {
        RationalFunction {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

/// Shorthand for the alphabet variables as polynomials.
pub fn lam() -> Polynomial {
    Polynomial::var(Var::Lam)
}

pub fn q() -> Polynomial {
    Polynomial::var(Var::Q)
}

pub fn t() -> Polynomial {
    Polynomial::var(Var::T)
}

pub fn r() -> Polynomial {
    Polynomial::var(Var::R)
}

pub fn s() -> Polynomial {
    Polynomial::var(Var::S)
}

/// `lam -> 1/(1+t)`.
pub fn lam_to_t() -> RationalFunction {
    RationalFunction {
        num: Polynomial::one(),
        den: Polynomial::one() + t(),
    }
}

pub fn point(bindings: &[(Var, Rational)]) -> BTreeMap<Var, Rational> {
    bindings.iter().cloned().collect()
}
