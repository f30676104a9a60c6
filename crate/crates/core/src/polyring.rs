//! Sparse polynomials over `Z` in the variables `h_H^+`, `h_H^-`.
//!
//! Terms are kept in graded lexicographic order with variables ordered by
//! hyperplane index, `+` before `-`. The text form lists terms in ascending
//! order, e.g. `1 - 1 * h1^+^1 * h1^-^1`, with hyperplanes numbered from 1.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::faces::{FaceComplex, FaceId, Sign};
use crate::modp;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    pub hyperplane: usize,
    pub sign: Sign,
}

impl VarId {
    pub fn new(hyperplane: usize, sign: Sign) -> Self {
        assert!(!sign.is_zero(), "variables carry a nonzero sign");
        VarId { hyperplane, sign }
    }

    pub fn plus(hyperplane: usize) -> Self {
        VarId::new(hyperplane, Sign::Plus)
    }

    pub fn minus(hyperplane: usize) -> Self {
        VarId::new(hyperplane, Sign::Minus)
    }

    /// Every variable of an arrangement with `m` hyperplanes, in order.
    pub fn all(m: usize) -> impl Iterator<Item = VarId> {
        (0..m).flat_map(|h| [VarId::plus(h), VarId::minus(h)])
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h{}^{}", self.hyperplane + 1, self.sign)
    }
}

/// Exponent map with strictly positive exponents, sorted by variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(VarId, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: VarId) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, u32)>) -> Self {
        let mut acc: BTreeMap<VarId, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *acc.entry(v).or_default() += e;
        }
        Monomial(acc.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    /// Product of the given variables, each to the first power.
    pub fn product_of(vars: impl IntoIterator<Item = VarId>) -> Self {
        Monomial::from_pairs(vars.into_iter().map(|v| (v, 1)))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.0.iter().find(|(w, _)| *w == v).map_or(0, |&(_, e)| e)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarId, u32)> + '_ {
        self.0.iter().copied()
    }

    pub fn is_square_free(&self) -> bool {
        self.0.iter().all(|&(_, e)| e == 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    /// `self / divisor` when `divisor` divides `self`.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < divisor.0.len() && divisor.0[j].0 < v {
                return None;
            }
            if j < divisor.0.len() && divisor.0[j].0 == v {
                let d = divisor.0[j].1;
                match e.cmp(&d) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v, e - d)),
                }
                j += 1;
            } else {
                out.push((v, e));
            }
        }
        if j < divisor.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    fn eval_mod_p(&self, assignment: &impl Fn(VarId) -> u64, p: u64) -> u64 {
        self.0.iter().fold(1 % p, |acc, &(v, e)| modp::mul(acc, modp::pow(assignment(v), e as u64, p), p))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then the larger exponent on
    /// the earliest variable wins.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0) {
                if a.0 != b.0 {
                    // the side holding the earlier variable has the larger exponent there
                    return if a.0 < b.0 { Ordering::Greater } else { Ordering::Less };
                }
                if a.1 != b.1 {
                    return a.1.cmp(&b.1);
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|(v, e)| format!("{v}^{e}")).collect();
        write!(f, "{}", parts.join(" * "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Polynomial::term(Monomial::one(), BigInt::from(c))
    }

    pub fn term(m: Monomial, coef: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(m, coef);
        }
        Polynomial { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Polynomial::term(m, BigInt::one())
    }

    pub fn var(v: VarId) -> Self {
        Polynomial::monomial(Monomial::var(v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::one()).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::one())
    }

    /// The graded-lex largest term.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// The monomial if this polynomial is a single term with coefficient 1.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && c.is_one() => Some(m),
            _ => None,
        }
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.terms.keys().flat_map(|m| m.iter().map(|(v, _)| v)).collect()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += coef * shift * other`.
    fn add_scaled(&mut self, other: &Polynomial, coef: &BigInt, shift: &Monomial) {
        for (m, c) in &other.terms {
            self.add_term(m.mul(shift), c * coef);
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        let mut base = self.clone();
        let mut k = k;
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

    /// `self / divisor`, failing unless the division is exact in `Z[h]`.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (lm, lc) = divisor.leading_term().ok_or(Error::InexactDivision)?;
        let (lm, lc) = (lm.clone(), lc.clone());
        if divisor.terms.len() == 1 {
            // dividing by a single term is termwise
            let mut out = BTreeMap::new();
            for (m, c) in &self.terms {
                let q = m.checked_div(&lm).ok_or(Error::InexactDivision)?;
                let (qc, rem) = c.div_rem(&lc);
                if !rem.is_zero() {
                    return Err(Error::InexactDivision);
                }
                out.insert(q, qc);
            }
            return Ok(Polynomial { terms: out });
        }
        let mut rem = self.clone();
        let mut quotient = Polynomial::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let shift = rm.checked_div(&lm).ok_or(Error::InexactDivision)?;
            let (qc, r) = rc.div_rem(&lc);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            rem.add_scaled(divisor, &-&qc, &shift);
            quotient.add_term(shift, qc);
        }
        Ok(quotient)
    }

    /// Value in `Z/p` under a total assignment of the variables.
    pub fn eval_mod_p(&self, assignment: impl Fn(VarId) -> u64, p: u64) -> u64 {
        let pb = BigInt::from(p);
        self.terms.iter().fold(0, |acc, (m, c)| {
            let cm = c.mod_floor(&pb).to_u64().expect("reduced below p");
            modp::add(acc, modp::mul(cm, m.eval_mod_p(&assignment, p), p), p)
        })
    }

    /// Sets every variable matching `vanish` to zero.
    pub fn substitute_zero(&self, vanish: impl Fn(VarId) -> bool) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.iter().all(|(v, _)| !vanish(v)))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn parse(text: &str) -> std::result::Result<Polynomial, String> {
        parse_polynomial(text)
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        Polynomial::monomial(m)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        Polynomial { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
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

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                write!(f, "{c}")?;
            } else if c.is_negative() {
                write!(f, " - {}", c.abs())?;
            } else {
                write!(f, " + {c}")?;
            }
            for (v, e) in m.iter() {
                write!(f, " * {v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        parse_polynomial(s)
    }
}

fn parse_var(token: &str) -> std::result::Result<(VarId, u32), String> {
    let body = token.strip_prefix('h').ok_or_else(|| format!("expected variable, found `{token}`"))?;
    let mut parts = body.split('^');
    let index: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .filter(|&i| i >= 1)
        .ok_or_else(|| format!("bad hyperplane index in `{token}`"))?;
    let sign = match parts.next() {
        Some("+") => Sign::Plus,
        Some("-") => Sign::Minus,
        _ => return Err(format!("bad sign in `{token}`")),
    };
    let exp = match parts.next() {
        None => 1,
        Some(e) => e.parse::<u32>().map_err(|_| format!("bad exponent in `{token}`"))?,
    };
    if parts.next().is_some() {
        return Err(format!("trailing data in `{token}`"));
    }
    Ok((VarId::new(index - 1, sign), exp))
}

fn parse_polynomial(text: &str) -> std::result::Result<Polynomial, String> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.is_empty() {
        return Err("empty polynomial".into());
    }
    let mut out = Polynomial::zero();
    let mut i = 0;
    let mut negate = false;
    loop {
        let coef_tok = tokens.get(i).ok_or("expected coefficient")?;
        let mut coef: BigInt = coef_tok.parse().map_err(|_| format!("bad coefficient `{coef_tok}`"))?;
        if negate {
            coef = -coef;
        }
        i += 1;
        let mut vars = Vec::new();
        while tokens.get(i) == Some(&"*") {
            let tok = tokens.get(i + 1).ok_or("expected variable after `*`")?;
            vars.push(parse_var(tok)?);
            i += 2;
        }
        out.add_term(Monomial::from_pairs(vars), coef);
        match tokens.get(i) {
            None => return Ok(out),
            Some(&"+") => negate = false,
            Some(&"-") => negate = true,
            Some(t) => return Err(format!("unexpected token `{t}`")),
        }
        i += 1;
    }
}

/// `b_F = ∏_{H ∈ A_F} h_H^+ h_H^-` for a non-chamber face.
pub fn weight(c: &FaceComplex, f: FaceId) -> Result<Polynomial> {
    let hs = c.centralization(f)?;
    Ok(Polynomial::monomial(weight_monomial(&hs)))
}

pub fn weight_monomial(hyperplanes: &[usize]) -> Monomial {
    Monomial::product_of(hyperplanes.iter().flat_map(|&h| [VarId::plus(h), VarId::minus(h)]))
}
