//! Distinguished ideals of the group algebra used as A0 specifications.
//!
//! Two kinds cover every construction here: the kernel of evaluation at a
//! point with nonzero coordinates (codimension 1; the augmentation ideal is
//! the all-ones point), and the exponent-reduction ideal generated by the
//! elements x_i^v - 1 (index p^(v^d)).

use serde::{Deserialize, Serialize};

use crate::context::Context;
use crate::error::{Error, Result};
use crate::poly::{ExpVec, LaurentPoly};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum IdealSpec {
    /// { f : f(point) = 0 }, point coordinates nonzero in GF(p).
    #[serde(rename = "eval")]
    EvaluationKernel { point: Vec<u32> },
    /// Sum of the ideals A(x_i^v - 1): membership is vanishing after
    /// reducing all exponents mod v.
    #[serde(rename = "expred")]
    ExponentReduction { v: i64 },
}

impl IdealSpec {
    /// The augmentation ideal: evaluation kernel at the all-ones point.
    pub fn augmentation(ctx: Context) -> Self {
        IdealSpec::EvaluationKernel {
            point: vec![1; ctx.d()],
        }
    }

    pub fn validate(&self, ctx: Context) -> Result<()> {
        match self {
            IdealSpec::EvaluationKernel { point } => {
                if point.len() != ctx.d() {
                    return Err(Error::DimMismatch {
                        expected: ctx.d(),
                        got: point.len(),
                    });
                }
                if point.iter().any(|&c| c % ctx.p() == 0) {
                    return Err(Error::ZeroCoordinate);
                }
                Ok(())
            }
            IdealSpec::ExponentReduction { v } => {
                if *v < 1 {
                    return Err(Error::InvalidParameter(
                        "exponent-reduction modulus must be >= 1".into(),
                    ));
                }
                Ok(())
            }
        }
    }

    pub fn contains(&self, f: &LaurentPoly) -> bool {
        match self {
            IdealSpec::EvaluationKernel { point } => {
                f.evaluate(point).map(|v| v == 0).unwrap_or(false)
            }
            IdealSpec::ExponentReduction { .. } => self.reduce(f).is_zero(),
        }
    }

    /// Canonical representative of f + A0; f is a member iff this is f's
    /// deviation, i.e. contains(f) iff reduce(f) == reduce(0).
    pub fn reduce(&self, f: &LaurentPoly) -> LaurentPoly {
        let ctx = f.ctx();
        match self {
            IdealSpec::EvaluationKernel { point } => {
                let val = f.evaluate(point).expect("validated evaluation point");
                LaurentPoly::constant(ctx, val as i64)
            }
            IdealSpec::ExponentReduction { v } => {
                let mut out = LaurentPoly::zero(ctx);
                for (e, c) in f.terms() {
                    let red = ExpVec::new(e.as_slice().iter().map(|&k| k.rem_euclid(*v)).collect());
                    out = out.add(&LaurentPoly::monomial(ctx, red, c as i64));
                }
                out
            }
        }
    }

    /// [A : A0], None when it does not fit in u128.
    pub fn index_in_algebra(&self, ctx: Context) -> Option<u128> {
        match self {
            IdealSpec::EvaluationKernel { .. } => Some(ctx.p() as u128),
            IdealSpec::ExponentReduction { v } => {
                let cells = (*v as u128).checked_pow(ctx.d() as u32)?;
                if cells > 64 {
                    return None;
                }
                (ctx.p() as u128).checked_pow(cells as u32)
            }
        }
    }

    /// Deterministic coset representatives of A0 in A, zero first.
    pub fn coset_transversal(&self, ctx: Context, bound: usize) -> Result<Vec<LaurentPoly>> {
        match self {
            IdealSpec::EvaluationKernel { .. } => Ok((0..ctx.p())
                .map(|c| LaurentPoly::constant(ctx, c as i64))
                .collect()),
            IdealSpec::ExponentReduction { v } => {
                let size = self.index_in_algebra(ctx).ok_or_else(|| {
                    Error::BoundExceeded("coset transversal does not fit".into())
                })?;
                if size > bound as u128 {
                    return Err(Error::BoundExceeded(format!(
                        "coset transversal has {size} elements, bound is {bound}"
                    )));
                }
                // Monomial box [0, v)^d in lexicographic order; coefficient
                // assignments counted in base p, least-significant first.
                let mut monos = Vec::new();
                let mut cur = vec![0i64; ctx.d()];
                'outer: loop {
                    monos.push(ExpVec::new(cur.clone()));
                    let mut i = ctx.d();
                    loop {
                        if i == 0 {
                            break 'outer;
                        }
                        i -= 1;
                        cur[i] += 1;
                        if cur[i] < *v {
                            break;
                        }
                        cur[i] = 0;
                    }
                }
                let total = size as usize;
                let mut out = Vec::with_capacity(total);
                for mut k in 0..total {
                    let mut f = LaurentPoly::zero(ctx);
                    for m in &monos {
                        let c = (k % ctx.p() as usize) as i64;
                        k /= ctx.p() as usize;
                        if c != 0 {
                            f = f.add(&LaurentPoly::monomial(ctx, m.clone(), c));
                        }
                    }
                    out.push(f);
                }
                Ok(out)
            }
        }
    }
}
