//! Sparse Laurent polynomials over GF(p) in d variables.
//!
//! A [`LaurentPoly`] is a canonical term map: only nonzero coefficients are
//! stored, keyed by exponent vector under the fixed lexicographic order, so
//! structural equality is exact polynomial equality. Written additively, these
//! are also the elements of the base group A of `G_{p,d} = A x| X`.

use std::collections::BTreeMap;
use std::fmt;

use crate::context::Context;
use crate::error::{Error, Result};

/// A Laurent exponent vector in Z^d. Ordering is lexicographic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExpVec(Vec<i64>);

impl ExpVec {
    pub fn new(exps: Vec<i64>) -> Self {
        ExpVec(exps)
    }

    pub fn zero(d: usize) -> Self {
        ExpVec(vec![0; d])
    }

    /// The i-th standard basis vector (0-based), i.e. the exponent of x_{i+1}.
    pub fn unit(d: usize, i: usize) -> Self {
        let mut v = vec![0; d];
        v[i] = 1;
        ExpVec(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &ExpVec) -> ExpVec {
        assert_eq!(self.dim(), other.dim(), "exponent rank mismatch");
        ExpVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("Laurent exponent overflow"))
                .collect(),
        )
    }

    pub fn sub(&self, other: &ExpVec) -> ExpVec {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ExpVec {
        ExpVec(self.0.iter().map(|&a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> ExpVec {
        ExpVec(
            self.0
                .iter()
                .map(|&a| a.checked_mul(k).expect("Laurent exponent overflow"))
                .collect(),
        )
    }
}

/// Element of GF(p)[x1^{±1}, ..., xd^{±1}] in canonical sparse form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LaurentPoly {
    ctx: Context,
    terms: BTreeMap<ExpVec, u32>,
}

impl LaurentPoly {
    pub fn zero(ctx: Context) -> Self {
        LaurentPoly {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: Context, c: i64) -> Self {
        Self::monomial(ctx, ExpVec::zero(ctx.d()), c)
    }

    pub fn one(ctx: Context) -> Self {
        Self::constant(ctx, 1)
    }

    /// The variable x_{i+1} (0-based index).
    pub fn var(ctx: Context, i: usize) -> Self {
        Self::monomial(ctx, ExpVec::unit(ctx.d(), i), 1)
    }

    /// c * X^e, canonicalized.
    pub fn monomial(ctx: Context, e: ExpVec, c: i64) -> Self {
        assert_eq!(e.dim(), ctx.d(), "exponent rank mismatch");
        let mut terms = BTreeMap::new();
        let c = ctx.reduce(c);
        if c != 0 {
            terms.insert(e, c);
        }
        LaurentPoly { ctx, terms }
    }

    /// 1 + x1 + ... + x1^{n-1}; multiplied by (x1 - 1) it gives x1^n - 1.
    pub fn geometric_sum(ctx: Context, n: u64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter(
                "geometric sum needs n >= 1".into(),
            ));
        }
        let mut f = Self::zero(ctx);
        for k in 0..n {
            f.add_term(ExpVec::unit(ctx.d(), 0).scale(k as i64), 1);
        }
        Ok(f)
    }

    pub fn ctx(&self) -> Context {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, u32)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn coeff(&self, e: &ExpVec) -> u32 {
        self.terms.get(e).copied().unwrap_or(0)
    }

    fn add_term(&mut self, e: ExpVec, c: u32) {
        let c = c % self.ctx.p();
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = self.ctx.add(*o.get(), c);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn assert_ctx(&self, other: &LaurentPoly) {
        assert_eq!(self.ctx, other.ctx, "context mismatch");
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        self.assert_ctx(other);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.ctx);
        for (e, c) in self.terms() {
            out.terms.insert(e.clone(), self.ctx.neg(c));
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    /// Distributive convolution product, canonicalized.
    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        self.assert_ctx(other);
        let mut out = LaurentPoly::zero(self.ctx);
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1.add(e2), self.ctx.mul(c1, c2));
            }
        }
        out
    }

    pub fn scalar_mul(&self, k: u32) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.ctx);
        let k = k % self.ctx.p();
        if k == 0 {
            return out;
        }
        for (e, c) in self.terms() {
            out.terms.insert(e.clone(), self.ctx.mul(c, k));
        }
        out
    }

    /// Multiplication by the monomial X^v (an exponent shift).
    pub fn mul_monomial(&self, v: &ExpVec) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.ctx);
        for (e, c) in self.terms() {
            out.terms.insert(e.add(v), c);
        }
        out
    }

    /// Substitution at a point with all coordinates nonzero in GF(p).
    pub fn evaluate(&self, point: &[u32]) -> Result<u32> {
        if point.len() != self.ctx.d() {
            return Err(Error::DimMismatch {
                expected: self.ctx.d(),
                got: point.len(),
            });
        }
        if point.iter().any(|&c| c % self.ctx.p() == 0) {
            return Err(Error::ZeroCoordinate);
        }
        let mut acc = 0u32;
        for (e, c) in self.terms() {
            let mut t = c;
            for (i, &pt) in point.iter().enumerate() {
                t = self.ctx.mul(t, self.ctx.pow(pt, e.get(i)));
            }
            acc = self.ctx.add(acc, t);
        }
        Ok(acc)
    }

    /// Sum of coefficients: the value at the all-ones point.
    pub fn augmentation(&self) -> u32 {
        let mut acc = 0;
        for (_, c) in self.terms() {
            acc = self.ctx.add(acc, c);
        }
        acc
    }

    /// Ring-homomorphism image of x_i -> X^{images[i]}: every exponent vector
    /// is pushed through the integer matrix whose rows are the images.
    pub fn substitute(&self, images: &[ExpVec]) -> LaurentPoly {
        assert_eq!(images.len(), self.ctx.d(), "substitution rank mismatch");
        let mut out = LaurentPoly::zero(self.ctx);
        for (e, c) in self.terms() {
            let mut img = ExpVec::zero(self.ctx.d());
            for i in 0..self.ctx.d() {
                img = img.add(&images[i].scale(e.get(i)));
            }
            out.add_term(img, c);
        }
        out
    }

    /// Exact division by (x1 - c) for d = 1; recovers r with r*(x1-c) = f.
    ///
    /// Shifts to an ordinary polynomial, runs synthetic division, shifts back.
    pub fn divide_by_linear(&self, c: u32) -> Result<LaurentPoly> {
        if self.ctx.d() != 1 {
            return Err(Error::DimMismatch {
                expected: 1,
                got: self.ctx.d(),
            });
        }
        let c = c % self.ctx.p();
        if c == 0 {
            return Err(Error::InvalidParameter(
                "divide_by_linear needs c != 0".into(),
            ));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let min = self.terms.keys().next().unwrap().get(0);
        let max = self.terms.keys().next_back().unwrap().get(0);
        let deg = (max - min) as usize;
        let mut coeffs = vec![0u32; deg + 1];
        for (e, co) in self.terms() {
            coeffs[(e.get(0) - min) as usize] = co;
        }
        if deg == 0 {
            return Err(Error::NonzeroRemainder { c });
        }
        // Synthetic division of sum a_k x^k by (x - c).
        let mut q = vec![0u32; deg];
        q[deg - 1] = coeffs[deg];
        for k in (1..deg).rev() {
            q[k - 1] = self.ctx.add(coeffs[k], self.ctx.mul(c, q[k]));
        }
        let rem = self.ctx.add(coeffs[0], self.ctx.mul(c, q[0]));
        if rem != 0 {
            return Err(Error::NonzeroRemainder { c });
        }
        let mut out = LaurentPoly::zero(self.ctx);
        for (k, &co) in q.iter().enumerate() {
            out.add_term(ExpVec::new(vec![min + k as i64]), co);
        }
        Ok(out)
    }

    /// Parses the canonical text form, e.g. `x1^2 + 2*x2^-1 + 1`.
    pub fn parse(ctx: Context, s: &str) -> Result<Self> {
        Parser::new(ctx, s).parse()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Terms in descending lexicographic exponent order.
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if e.is_zero() {
                write!(f, "{c}")?;
                continue;
            }
            if *c != 1 {
                write!(f, "{c}*")?;
            }
            let mut sep = "";
            for i in 0..e.dim() {
                let ei = e.get(i);
                if ei == 0 {
                    continue;
                }
                write!(f, "{sep}x{}", i + 1)?;
                if ei != 1 {
                    write!(f, "^{ei}")?;
                }
                sep = "*";
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    ctx: Context,
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(ctx: Context, s: &'a str) -> Self {
        Parser {
            ctx,
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn parse(&mut self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero(self.ctx);
        let mut sign: i64 = 1;
        if let Some(b'-') = self.peek() {
            self.pos += 1;
            sign = -1;
        } else if let Some(b'+') = self.peek() {
            self.pos += 1;
        }
        loop {
            let term = self.term()?;
            acc = if sign >= 0 { acc.add(&term) } else { acc.sub(&term) };
            match self.peek() {
                None => return Ok(acc),
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                Some(_) => return self.err("expected '+' or '-'"),
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::one(self.ctx);
        loop {
            let factor = self.factor()?;
            acc = acc.mul(&factor);
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some(b'0'..=b'9') => {
                let n = self.integer()?;
                Ok(LaurentPoly::constant(self.ctx, n))
            }
            Some(b'x') => {
                self.pos += 1;
                let idx = self.integer()?;
                if idx < 1 || idx as usize > self.ctx.d() {
                    return self.err(&format!(
                        "variable index out of range 1..={}",
                        self.ctx.d()
                    ));
                }
                let exp = if let Some(b'^') = self.peek() {
                    self.pos += 1;
                    self.signed_integer()?
                } else {
                    1
                };
                Ok(LaurentPoly::monomial(
                    self.ctx,
                    ExpVec::unit(self.ctx.d(), idx as usize - 1).scale(exp),
                    1,
                ))
            }
            _ => self.err("expected a coefficient or a variable"),
        }
    }

    fn signed_integer(&mut self) -> Result<i64> {
        let mut sign = 1;
        if let Some(b'-') = self.peek() {
            self.pos += 1;
            sign = -1;
        }
        Ok(sign * self.integer()?)
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<i64>()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "integer overflow".into(),
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx(p: u32, d: usize) -> Context {
        Context::new(p, d).unwrap()
    }

    fn p(c: Context, s: &str) -> LaurentPoly {
        LaurentPoly::parse(c, s).unwrap()
    }

    /// Independent dense schoolbook product for d = 1.
    fn naive_mul_d1(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        let c = a.ctx();
        if a.is_zero() || b.is_zero() {
            return LaurentPoly::zero(c);
        }
        let bounds = |f: &LaurentPoly| {
            let min = f.terms().map(|(e, _)| e.get(0)).min().unwrap();
            let max = f.terms().map(|(e, _)| e.get(0)).max().unwrap();
            (min, max)
        };
        let (amin, amax) = bounds(a);
        let (bmin, bmax) = bounds(b);
        let dense = |f: &LaurentPoly, min: i64, max: i64| {
            let mut v = vec![0u32; (max - min + 1) as usize];
            for (e, co) in f.terms() {
                v[(e.get(0) - min) as usize] = co;
            }
            v
        };
        let av = dense(a, amin, amax);
        let bv = dense(b, bmin, bmax);
        let mut out = LaurentPoly::zero(c);
        for (i, &ca) in av.iter().enumerate() {
            for (j, &cb) in bv.iter().enumerate() {
                let coeff = c.mul(ca, cb);
                let term = LaurentPoly::monomial(
                    c,
                    ExpVec::new(vec![amin + i as i64 + bmin + j as i64]),
                    coeff as i64,
                );
                out = out.add(&term);
            }
        }
        out
    }

    #[test]
    fn add_identity_and_inverse() {
        let c = ctx(3, 1);
        let f = p(c, "x1^2 + 2*x1");
        assert_eq!(f.add(&LaurentPoly::zero(c)), f);
        let g = p(c, "x1 - 1");
        let h = p(c, "1 - x1");
        assert!(g.add(&h).is_zero());
    }

    #[test]
    fn add_gf2() {
        let c = ctx(2, 1);
        let f = p(c, "x1 + 1");
        let g = p(c, "x1^2 + x1");
        assert_eq!(f.add(&g), p(c, "x1^2 + 1"));
    }

    #[test]
    fn mul_unit_and_gf2_square() {
        let c = ctx(2, 1);
        let f = p(c, "x1 + 1");
        assert_eq!(LaurentPoly::one(c).mul(&f), f);
        let expect = naive_mul_d1(&f, &f);
        assert_eq!(f.mul(&f), expect);
        assert_eq!(f.mul(&f), p(c, "x1^2 + 1"));
    }

    #[test]
    fn mul_gf3_cyclotomic() {
        let c = ctx(3, 1);
        let f = p(c, "x1 - 1");
        let g = p(c, "x1^2 + x1 + 1");
        let expect = naive_mul_d1(&f, &g);
        assert_eq!(f.mul(&g), expect);
        assert_eq!(f.mul(&g), p(c, "x1^3 - 1"));
    }

    #[test]
    fn evaluate_examples() {
        let c1 = ctx(3, 1);
        assert_eq!(p(c1, "x1 - 1").evaluate(&[1]).unwrap(), 0);
        assert_eq!(p(c1, "2").evaluate(&[2]).unwrap(), 2);
        let c5 = ctx(5, 1);
        assert_eq!(p(c5, "x1 - 2").evaluate(&[3]).unwrap(), 1);
        assert!(matches!(
            p(c5, "x1").evaluate(&[0]),
            Err(Error::ZeroCoordinate)
        ));
    }

    #[test]
    fn divide_by_linear_examples() {
        let c = ctx(3, 1);
        let f = p(c, "x1 - 1");
        assert_eq!(f.divide_by_linear(1).unwrap(), LaurentPoly::one(c));
        let g = p(c, "x1^2 - 1");
        assert_eq!(g.divide_by_linear(1).unwrap(), p(c, "x1 + 1"));
        assert!(LaurentPoly::zero(c).divide_by_linear(1).unwrap().is_zero());
        assert!(matches!(
            p(c, "x1").divide_by_linear(1),
            Err(Error::NonzeroRemainder { c: 1 })
        ));
    }

    #[test]
    fn divide_by_linear_laurent_support() {
        let c = ctx(5, 1);
        // f = x^-3 (x - 2)(x + 1)
        let f = p(c, "x1^-3").mul(&p(c, "x1 - 2")).mul(&p(c, "x1 + 1"));
        let r = f.divide_by_linear(2).unwrap();
        assert_eq!(r.mul(&p(c, "x1 - 2")), f);
    }

    #[test]
    fn geometric_sum_examples() {
        let c = ctx(2, 1);
        assert_eq!(LaurentPoly::geometric_sum(c, 1).unwrap(), LaurentPoly::one(c));
        assert_eq!(
            LaurentPoly::geometric_sum(c, 3).unwrap(),
            p(c, "x1^2 + x1 + 1")
        );
        assert!(LaurentPoly::geometric_sum(c, 0).is_err());
        // Phi_n * (x - 1) = x^n - 1, and Phi_n(1) = n mod p.
        for p_ in [2u32, 3, 5] {
            let c = ctx(p_, 1);
            for n in 1..=7u64 {
                let phi = LaurentPoly::geometric_sum(c, n).unwrap();
                let lhs = phi.mul(&p(c, "x1 - 1"));
                let rhs = p(c, &format!("x1^{n} - 1"));
                assert_eq!(lhs, rhs);
                assert_eq!(phi.evaluate(&[1]).unwrap(), (n % p_ as u64) as u32);
            }
        }
    }

    #[test]
    fn substitute_examples() {
        let c = ctx(2, 1);
        let f = p(c, "x1^3 + x1");
        let id = vec![ExpVec::unit(1, 0)];
        assert_eq!(f.substitute(&id), f);
        // x -> x^2: r(x) -> r(x^2)
        let sq = vec![ExpVec::new(vec![2])];
        assert_eq!(f.substitute(&sq), p(c, "x1^6 + x1^2"));

        let c2 = ctx(2, 2);
        let g = p(c2, "x1 + x2");
        let swap = vec![ExpVec::unit(2, 1), ExpVec::unit(2, 0)];
        assert_eq!(g.substitute(&swap), g);
    }

    #[test]
    fn display_canonical_order() {
        let c = ctx(2, 2);
        let f = p(c, "x1^-1*x2^-1 + 1");
        assert_eq!(f.to_string(), "1 + x1^-1*x2^-1");
        let g = p(c, "x2^-1 + x1^-1*x2^-1");
        assert_eq!(g.to_string(), "x2^-1 + x1^-1*x2^-1");
        assert_eq!(LaurentPoly::zero(c).to_string(), "0");
        let c3 = ctx(3, 1);
        assert_eq!(p(c3, "x1^3 - 1").to_string(), "x1^3 + 2");
    }

    #[test]
    fn parse_error_position() {
        let c = ctx(2, 2);
        match LaurentPoly::parse(c, "x1 + x9") {
            Err(Error::Parse { pos, .. }) => assert!(pos >= 5),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(LaurentPoly::parse(c, "x1 + + x2").is_err());
    }

    fn arb_poly(p_: u32, d: usize) -> impl Strategy<Value = LaurentPoly> {
        let c = ctx(p_, d);
        proptest::collection::vec(
            (
                proptest::collection::vec(-3i64..=3, d),
                0..p_ as i64,
            ),
            0..6,
        )
        .prop_map(move |terms| {
            let mut f = LaurentPoly::zero(c);
            for (e, co) in terms {
                f = f.add(&LaurentPoly::monomial(c, ExpVec::new(e), co));
            }
            f
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(3, 2), b in arb_poly(3, 2), c in arb_poly(3, 2)) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn mul_matches_schoolbook(a in arb_poly(5, 1), b in arb_poly(5, 1)) {
            prop_assert_eq!(a.mul(&b), naive_mul_d1(&a, &b));
        }

        #[test]
        fn evaluate_is_ring_hom(a in arb_poly(5, 2), b in arb_poly(5, 2), pt in proptest::collection::vec(1u32..5, 2)) {
            let lhs = a.mul(&b).evaluate(&pt).unwrap();
            let c = ctx(5, 2);
            let rhs = c.mul(a.evaluate(&pt).unwrap(), b.evaluate(&pt).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn divide_by_linear_roundtrip(r in arb_poly(5, 1), c0 in 1u32..5) {
            let c = ctx(5, 1);
            let lin = LaurentPoly::var(c, 0).sub(&LaurentPoly::constant(c, c0 as i64));
            let f = r.mul(&lin);
            let q = f.divide_by_linear(c0).unwrap();
            prop_assert_eq!(q.mul(&lin), f);
        }

        #[test]
        fn substitution_composes(f in arb_poly(3, 2), m in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 2), 2), n in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 2), 2)) {
            let m: Vec<ExpVec> = m.into_iter().map(ExpVec::new).collect();
            let n: Vec<ExpVec> = n.into_iter().map(ExpVec::new).collect();
            // Substituting M then N equals substituting the matrix product.
            let lhs = f.substitute(&m).substitute(&n);
            let mn: Vec<ExpVec> = m
                .iter()
                .map(|row| {
                    let mut acc = ExpVec::zero(2);
                    for i in 0..2 {
                        acc = acc.add(&n[i].scale(row.get(i)));
                    }
                    acc
                })
                .collect();
            prop_assert_eq!(lhs, f.substitute(&mn));
        }

        #[test]
        fn display_parse_roundtrip(f in arb_poly(5, 2)) {
            let c = ctx(5, 2);
            let s = f.to_string();
            prop_assert_eq!(LaurentPoly::parse(c, &s).unwrap(), f);
        }
    }
}
