//! Named similarity-pair constructions for `G_{p,d}` and their parameter
//! validation.
//!
//! * `theorem2(p, n, u)`: degree p, normal H of index p; A0 is the
//!   augmentation ideal of `k[x]`, alpha: x -> x^n, mu: r(x)(x-1) -> r(x^n)u(x).
//!   Requires gcd(p, n) = 1 and u(1) != 0.
//! * `theorem3(p, j)`: degree p, H of index p with A0 = ker(eval at j),
//!   n = 1, u = 1. j = 1 with p = 2 is the classical lamplighter pair.
//! * `theorem4(p, d)`: degree p^2 for d >= 2; A0 the augmentation ideal,
//!   Y = <x1^p, x2, ..., xd>, alpha the rotation x1^p -> x2, x_j -> x_{j+1},
//!   x_d -> x1, mu the augmentation closed form.

use serde::{Deserialize, Serialize};

use crate::context::Context;
use crate::endo::{MuSpec, VirtualEndo};
use crate::error::{Error, Result};
use crate::ideal::IdealSpec;
use crate::lattice::Lattice;
use crate::pair::{PairConfig, SimilarityPair};
use crate::poly::{ExpVec, LaurentPoly};

/// A run configuration's construction choice, as ingested from JSON.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Construction {
    ClassicalLamplighter,
    Theorem2 { p: u32, n: i64, u: String },
    Theorem3 { p: u32, j: u32 },
    Theorem4 { p: u32, d: usize },
    Custom { pair: PairConfig },
}

impl Construction {
    pub fn build(&self) -> Result<SimilarityPair> {
        match self {
            Construction::ClassicalLamplighter => theorem3_pair(2, 1),
            Construction::Theorem2 { p, n, u } => {
                let ctx = Context::new(*p, 1)?;
                let u = LaurentPoly::parse(ctx, u)?;
                theorem2_pair(*p, *n, &u)
            }
            Construction::Theorem3 { p, j } => theorem3_pair(*p, *j),
            Construction::Theorem4 { p, d } => theorem4_pair(*p, *d),
            Construction::Custom { pair } => SimilarityPair::from_config(pair),
        }
    }
}

/// Degree-p pair with A0 = ker(eval at c), full Y, alpha: x -> x^n and
/// mu: r(x)(x-c) -> r(x^n) u(x). No validity conditions beyond structure.
pub fn degree_p_pair(p: u32, n: i64, u: &LaurentPoly, c: u32) -> Result<SimilarityPair> {
    let ctx = Context::new(p, 1)?;
    if u.ctx() != ctx {
        return Err(Error::ContextMismatch);
    }
    let a0 = IdealSpec::EvaluationKernel { point: vec![c % p] };
    let y = Lattice::full(1);
    let endo = VirtualEndo::new(
        ctx,
        &a0,
        &y,
        vec![vec![n]],
        MuSpec::DegreeP {
            n,
            u: u.clone(),
            c: c % p,
        },
    )?;
    SimilarityPair::undeformed(ctx, a0, y, endo)
}

pub fn theorem2_pair(p: u32, n: i64, u: &LaurentPoly) -> Result<SimilarityPair> {
    if n == 0 || n.rem_euclid(p as i64) == 0 {
        return Err(Error::InvalidParameter(format!(
            "theorem2 requires gcd(p, n) = 1; got p = {p}, n = {n}"
        )));
    }
    if u.evaluate(&[1])? == 0 {
        return Err(Error::InvalidParameter(
            "theorem2 requires u(1) != 0".into(),
        ));
    }
    degree_p_pair(p, n, u, 1)
}

pub fn theorem3_pair(p: u32, j: u32) -> Result<SimilarityPair> {
    if j < 1 || j >= p {
        return Err(Error::InvalidParameter(format!(
            "theorem3 requires 1 <= j <= p-1; got j = {j}, p = {p}"
        )));
    }
    let ctx = Context::new(p, 1)?;
    degree_p_pair(p, 1, &LaurentPoly::one(ctx), j)
}

pub fn theorem4_pair(p: u32, d: usize) -> Result<SimilarityPair> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!(
            "theorem4 requires d >= 2; got d = {d}"
        )));
    }
    let ctx = Context::new(p, d)?;
    let a0 = IdealSpec::augmentation(ctx);
    let y = Lattice::new(standard_y_basis(p, d)).unwrap();
    let endo = VirtualEndo::new(
        ctx,
        &a0,
        &y,
        rotation_alpha(d),
        MuSpec::Augmentation {
            split: ExpVec::unit(d, 0),
        },
    )?;
    SimilarityPair::undeformed(ctx, a0, y, endo)
}

/// Basis rows of Y = <x1^p, x2, ..., xd>.
pub fn standard_y_basis(p: u32, d: usize) -> Vec<Vec<i64>> {
    let mut basis = vec![vec![0i64; d]; d];
    basis[0][0] = p as i64;
    for i in 1..d {
        basis[i][i] = 1;
    }
    basis
}

/// Alpha rows on that basis: x1^p -> x2, x_j -> x_{j+1} (2<=j<=d-1), x_d -> x1.
pub fn rotation_alpha(d: usize) -> Vec<Vec<i64>> {
    let mut alpha = vec![vec![0i64; d]; d];
    alpha[0][1] = 1;
    for j in 1..d - 1 {
        alpha[j][j + 1] = 1;
    }
    alpha[d - 1][0] = 1;
    alpha
}
