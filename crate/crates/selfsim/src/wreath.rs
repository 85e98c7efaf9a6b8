//! Canonical elements and generator words of `G_{p,d} = A x| X`.
//!
//! An element is a pair (f, v) with f in the group algebra (the A-part,
//! additively) and v in Z^d (the X-part). The multiplication convention is
//!
//! ```text
//! (f1, v1) * (f2, v2) = (f1 + f2 * X^{-v1}, v1 + v2)
//! ```
//!
//! so that the conjugate a^{x^v} has A-part f * X^v and the cofactor
//! calculus of the recursion transcribes directly.

use std::fmt;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::poly::{ExpVec, LaurentPoly};

/// Canonical element of `G_{p,d}`; equality is componentwise.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct WreathElement {
    a: LaurentPoly,
    x: ExpVec,
}

impl WreathElement {
    pub fn new(a: LaurentPoly, x: ExpVec) -> Self {
        assert_eq!(a.ctx().d(), x.dim(), "rank mismatch");
        WreathElement { a, x }
    }

    pub fn identity(ctx: Context) -> Self {
        WreathElement {
            a: LaurentPoly::zero(ctx),
            x: ExpVec::zero(ctx.d()),
        }
    }

    /// The lamp generator a, with A-part 1.
    pub fn gen_a(ctx: Context) -> Self {
        WreathElement {
            a: LaurentPoly::one(ctx),
            x: ExpVec::zero(ctx.d()),
        }
    }

    /// The mover generator x_{i+1}.
    pub fn gen_x(ctx: Context, i: usize) -> Self {
        WreathElement {
            a: LaurentPoly::zero(ctx),
            x: ExpVec::unit(ctx.d(), i),
        }
    }

    pub fn from_a(a: LaurentPoly) -> Self {
        let x = ExpVec::zero(a.ctx().d());
        WreathElement { a, x }
    }

    pub fn from_x(ctx: Context, x: ExpVec) -> Self {
        WreathElement {
            a: LaurentPoly::zero(ctx),
            x,
        }
    }

    pub fn ctx(&self) -> Context {
        self.a.ctx()
    }

    pub fn a_part(&self) -> &LaurentPoly {
        &self.a
    }

    pub fn x_part(&self) -> &ExpVec {
        &self.x
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_zero() && self.x.is_zero()
    }

    pub fn mul(&self, other: &WreathElement) -> WreathElement {
        assert_eq!(self.ctx(), other.ctx(), "context mismatch");
        WreathElement {
            a: self.a.add(&other.a.mul_monomial(&self.x.neg())),
            x: self.x.add(&other.x),
        }
    }

    pub fn inv(&self) -> WreathElement {
        WreathElement {
            a: self.a.mul_monomial(&self.x).neg(),
            x: self.x.neg(),
        }
    }

    pub fn pow(&self, k: i64) -> WreathElement {
        let base = if k >= 0 { self.clone() } else { self.inv() };
        let mut acc = WreathElement::identity(self.ctx());
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// g^{-1} * self * g.
    pub fn conjugate(&self, g: &WreathElement) -> WreathElement {
        g.inv().mul(self).mul(g)
    }

    /// [self, other] = self^{-1} other^{-1} self other.
    pub fn commutator(&self, other: &WreathElement) -> WreathElement {
        self.inv().mul(&other.inv()).mul(self).mul(other)
    }
}

/// A-part of the conjugate a^{f * X^v}: conjugation by the monomial x^v is
/// multiplication by X^v on the polynomial side.
pub fn conjugate_by_x(f: &LaurentPoly, v: &ExpVec) -> LaurentPoly {
    f.mul_monomial(v)
}

impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} ; ", self.a)?;
        let mut sep = "";
        for i in 0..self.x.dim() {
            write!(f, "{sep}{}", self.x.get(i))?;
            sep = ",";
        }
        write!(f, ")")
    }
}

/// A single generator letter: `a`, `A` (= a^{-1}), `x<i>`, `X<i>` (= x_i^{-1}).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Letter {
    A,
    AInv,
    X(usize),
    XInv(usize),
}

impl Letter {
    pub fn inverse(&self) -> Letter {
        match *self {
            Letter::A => Letter::AInv,
            Letter::AInv => Letter::A,
            Letter::X(i) => Letter::XInv(i),
            Letter::XInv(i) => Letter::X(i),
        }
    }

    pub fn eval(&self, ctx: Context) -> WreathElement {
        match *self {
            Letter::A => WreathElement::gen_a(ctx),
            Letter::AInv => WreathElement::gen_a(ctx).inv(),
            Letter::X(i) => WreathElement::gen_x(ctx, i),
            Letter::XInv(i) => WreathElement::gen_x(ctx, i).inv(),
        }
    }

    /// Every letter valid for rank d, positive generators first.
    pub fn alphabet(d: usize) -> Vec<Letter> {
        let mut out = vec![Letter::A, Letter::AInv];
        for i in 0..d {
            out.push(Letter::X(i));
            out.push(Letter::XInv(i));
        }
        out
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Letter::A => write!(f, "a"),
            Letter::AInv => write!(f, "A"),
            Letter::X(i) => write!(f, "x{}", i + 1),
            Letter::XInv(i) => write!(f, "X{}", i + 1),
        }
    }
}

/// A word over the generator alphabet, e.g. `a*x1*A*X2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorWord(Vec<Letter>);

impl GeneratorWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        GeneratorWord(letters)
    }

    pub fn empty() -> Self {
        GeneratorWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parses `a`, `A`, `x<k>`, `X<k>` joined by `*`.
    pub fn parse(ctx: Context, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(GeneratorWord::empty());
        }
        let mut letters = Vec::new();
        for tok in s.split('*') {
            let tok = tok.trim();
            let bad = || Error::BadLetter(tok.to_string());
            if tok == "a" {
                letters.push(Letter::A);
            } else if tok == "A" {
                letters.push(Letter::AInv);
            } else if let Some(rest) = tok.strip_prefix('x') {
                let k: usize = rest.parse().map_err(|_| bad())?;
                if k < 1 || k > ctx.d() {
                    return Err(bad());
                }
                letters.push(Letter::X(k - 1));
            } else if let Some(rest) = tok.strip_prefix('X') {
                let k: usize = rest.parse().map_err(|_| bad())?;
                if k < 1 || k > ctx.d() {
                    return Err(bad());
                }
                letters.push(Letter::XInv(k - 1));
            } else {
                return Err(bad());
            }
        }
        Ok(GeneratorWord(letters))
    }

    /// Left-to-right product of the generator images.
    pub fn eval(&self, ctx: Context) -> WreathElement {
        let mut acc = WreathElement::identity(ctx);
        for l in &self.0 {
            acc = acc.mul(&l.eval(ctx));
        }
        acc
    }

    /// Freely reduced form: no adjacent inverse pairs.
    pub fn reduced(&self) -> GeneratorWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        GeneratorWord(out)
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        let mut sep = "";
        for l in &self.0 {
            write!(f, "{sep}{l}")?;
            sep = "*";
        }
        Ok(())
    }
}
