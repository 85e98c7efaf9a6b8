//! The virtual endomorphism data (mu, alpha) of a similarity pair.
//!
//! `alpha` is a monomorphism Y -> X given by an integer matrix on the Y
//! basis. `mu` is an additive map A0 -> A in one of two closed forms:
//!
//! * `DegreeP` (d = 1): mu(r(x)(x - c)) = r(x^n) u(x), the map behind the
//!   degree-p representations of `G_{p,1}`;
//! * `Augmentation` (d >= 2): on the augmentation ideal, with X/Y cyclic of
//!   order p generated by a split direction s, mu(X^e - 1) = u0 * X^{alpha(y)}
//!   where e = u0*s + y is the unique split with 0 <= u0 < p and y in Y,
//!   extended additively. With the standard Y and s = e1 this sends
//!   x1^{u0+u1*p} - 1 to u0 * x2^{u1} and kills k[Y]'.
//!
//! [`VirtualEndo::mu_apply_via_decomposition`] recomputes the augmentation
//! image through the explicit direct-sum decomposition of the ideal instead
//! of term splitting; it is the independent oracle for `mu_apply`.

use serde::{Deserialize, Serialize};

use crate::context::Context;
use crate::error::{Error, Result};
use crate::ideal::IdealSpec;
use crate::lattice::{det, Lattice};
use crate::poly::{ExpVec, LaurentPoly};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MuSpec {
    DegreeP {
        n: i64,
        u: LaurentPoly,
        c: u32,
    },
    Augmentation {
        /// Generator of X/Y; the x1 direction for the standard lattice.
        split: ExpVec,
    },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VirtualEndo {
    alpha: Vec<Vec<i64>>,
    mu: MuSpec,
}

impl VirtualEndo {
    /// Validates alpha (nonsingular on the Y basis) and the mu form against
    /// the ideal and lattice it acts on.
    pub fn new(
        ctx: Context,
        a0: &IdealSpec,
        y: &Lattice,
        alpha: Vec<Vec<i64>>,
        mu: MuSpec,
    ) -> Result<Self> {
        let d = ctx.d();
        if alpha.len() != d || alpha.iter().any(|r| r.len() != d) {
            return Err(Error::DimMismatch {
                expected: d,
                got: alpha.len(),
            });
        }
        if det(&alpha) == 0 {
            return Err(Error::InvalidParameter(
                "alpha matrix is singular; alpha must be a monomorphism".into(),
            ));
        }
        match &mu {
            MuSpec::DegreeP { n, u, c } => {
                if d != 1 {
                    return Err(Error::DimMismatch { expected: 1, got: d });
                }
                if *n == 0 {
                    return Err(Error::InvalidParameter("degree-p mu needs n != 0".into()));
                }
                if u.ctx() != ctx {
                    return Err(Error::ContextMismatch);
                }
                let c = c % ctx.p();
                if c == 0 {
                    return Err(Error::InvalidParameter("degree-p mu needs c != 0".into()));
                }
                match a0 {
                    IdealSpec::EvaluationKernel { point } if point[0] % ctx.p() == c => {}
                    _ => {
                        return Err(Error::InvalidParameter(
                            "degree-p mu requires A0 = ker(eval at c)".into(),
                        ))
                    }
                }
            }
            MuSpec::Augmentation { split } => {
                if d < 2 {
                    return Err(Error::DimMismatch { expected: 2, got: d });
                }
                if *a0 != IdealSpec::augmentation(ctx) {
                    return Err(Error::InvalidParameter(
                        "augmentation mu requires A0 = augmentation ideal".into(),
                    ));
                }
                if split.dim() != d {
                    return Err(Error::DimMismatch {
                        expected: d,
                        got: split.dim(),
                    });
                }
                if y.index() != ctx.p() as u64 {
                    return Err(Error::InvalidParameter(
                        "augmentation mu requires [X:Y] = p".into(),
                    ));
                }
                if y.contains(split) || !y.contains(&split.scale(ctx.p() as i64)) {
                    return Err(Error::InvalidParameter(
                        "split direction must generate X/Y".into(),
                    ));
                }
                dual_functional(split)?;
            }
        }
        Ok(VirtualEndo { alpha, mu })
    }

    pub fn alpha_matrix(&self) -> &[Vec<i64>] {
        &self.alpha
    }

    pub fn mu_spec(&self) -> &MuSpec {
        &self.mu
    }

    /// Image of a lattice vector: Y coordinates pushed through alpha.
    pub fn alpha_apply(&self, y: &Lattice, v: &ExpVec) -> Result<ExpVec> {
        let coords = y
            .coords(v)
            .ok_or_else(|| Error::InvalidParameter("vector is not in Y".into()))?;
        Ok(ExpVec::new(crate::lattice::mat_vec_mul(
            &coords,
            &self.alpha,
        )))
    }

    /// Ring-homomorphism image of w in k[Y]: every monomial of w must lie on
    /// the lattice.
    pub fn alpha_on_poly(&self, y: &Lattice, w: &LaurentPoly) -> Result<LaurentPoly> {
        let ctx = w.ctx();
        let mut out = LaurentPoly::zero(ctx);
        for (e, c) in w.terms() {
            let img = self.alpha_apply(y, e)?;
            out = out.add(&LaurentPoly::monomial(ctx, img, c as i64));
        }
        Ok(out)
    }

    /// mu image of an element of the domain ideal.
    pub fn mu_apply(&self, a0: &IdealSpec, y: &Lattice, f: &LaurentPoly) -> Result<LaurentPoly> {
        if !a0.contains(f) {
            return Err(Error::OutsideIdeal);
        }
        let ctx = f.ctx();
        match &self.mu {
            MuSpec::DegreeP { n, u, c } => {
                let r = f.divide_by_linear(*c)?;
                Ok(r.substitute(&[ExpVec::new(vec![*n])]).mul(u))
            }
            MuSpec::Augmentation { split } => {
                // mu(sum c_e X^e) = sum c_e mu(X^e - 1); the constants cancel
                // because the augmentation of f is zero.
                let mut out = LaurentPoly::zero(ctx);
                for (e, coeff) in f.terms() {
                    let (u0, tail) = split_exponent(ctx, y, split, e)?;
                    if u0 == 0 {
                        continue;
                    }
                    let img = self.alpha_apply(y, &tail)?;
                    out = out.add(&LaurentPoly::monomial(
                        ctx,
                        img,
                        ctx.mul(coeff, u0) as i64,
                    ));
                }
                Ok(out)
            }
        }
    }

    /// Independent route to the augmentation mu image. Decomposes f along
    ///
    /// ```text
    /// I = k<s^p>' (+) sum_{1<=i<p} k<s^p>(s^i - 1)
    ///       (+) sum_z k<s^p>(z - 1) (+) sum_{z, 1<=i<p} k<s^p>(s^i - 1)(z - 1)
    /// ```
    ///
    /// with z ranging over Y-monomials transverse to the split direction,
    /// computing the block coefficients b0, b_i, a_z, b_{i,z} explicitly,
    /// then applies the image formula: b0 and the a_z block map to 0,
    /// b_i (s^i - 1) to i * b_i^alpha, and b_{i,z} (s^i - 1)(z - 1) to
    /// i * b_{i,z}^alpha (z^alpha - 1).
    pub fn mu_apply_via_decomposition(
        &self,
        a0: &IdealSpec,
        y: &Lattice,
        f: &LaurentPoly,
    ) -> Result<LaurentPoly> {
        let split = match &self.mu {
            MuSpec::Augmentation { split } => split,
            _ => {
                return Err(Error::InvalidParameter(
                    "decomposition route exists for the augmentation mu only".into(),
                ))
            }
        };
        if !a0.contains(f) {
            return Err(Error::OutsideIdeal);
        }
        let ctx = f.ctx();
        let p = ctx.p();
        let dual = dual_functional(split)?;

        // Group the terms of f as g_{z,u0}(s^p) * s^{u0} * z, keyed on
        // (z, u0) with g in k<s^p>.
        use std::collections::BTreeMap;
        let mut groups: BTreeMap<(ExpVec, u32), LaurentPoly> = BTreeMap::new();
        for (e, coeff) in f.terms() {
            let (u0, tail) = split_exponent(ctx, y, split, e)?;
            let s_comp: i64 = tail
                .as_slice()
                .iter()
                .zip(&dual)
                .map(|(&a, &b)| a * b)
                .sum();
            debug_assert_eq!(s_comp.rem_euclid(p as i64), 0);
            let u1 = s_comp.div_euclid(p as i64);
            let z = tail.sub(&split.scale(u1 * p as i64));
            let part = LaurentPoly::monomial(ctx, split.scale(u1 * p as i64), coeff as i64);
            groups
                .entry((z, u0))
                .and_modify(|g| *g = g.add(&part))
                .or_insert(part);
        }

        // Assemble the block coefficients.
        let mut b0 = LaurentPoly::zero(ctx);
        let mut b_i: BTreeMap<u32, LaurentPoly> = BTreeMap::new();
        let mut b_iz: BTreeMap<(u32, ExpVec), LaurentPoly> = BTreeMap::new();
        for ((z, u0), g) in &groups {
            b0 = b0.add(g);
            if *u0 >= 1 {
                b_i.entry(*u0)
                    .and_modify(|acc| *acc = acc.add(g))
                    .or_insert_with(|| g.clone());
                if !z.is_zero() {
                    b_iz.insert((*u0, z.clone()), g.clone());
                }
            }
        }
        if b0.augmentation() != 0 {
            return Err(Error::OutsideIdeal);
        }

        let mut out = LaurentPoly::zero(ctx);
        for (i, b) in &b_i {
            out = out.add(&self.alpha_on_poly(y, b)?.scalar_mul(*i));
        }
        for ((i, z), b) in &b_iz {
            let z_alpha = self.alpha_apply(y, z)?;
            let factor = LaurentPoly::monomial(ctx, z_alpha, 1).sub(&LaurentPoly::one(ctx));
            out = out.add(&self.alpha_on_poly(y, b)?.mul(&factor).scalar_mul(*i));
        }
        Ok(out)
    }

    /// Transport through a unimodular automorphism of X (column action
    /// v -> v * gamma): alpha becomes alpha * gamma on the transported basis
    /// and the mu form is conjugated within its family.
    pub fn twist(&self, ctx: Context, gamma: &[Vec<i64>]) -> Result<VirtualEndo> {
        let alpha = crate::lattice::mat_mul(&self.alpha, gamma);
        let mu = match &self.mu {
            MuSpec::Augmentation { split } => MuSpec::Augmentation {
                split: ExpVec::new(crate::lattice::mat_vec_mul(split.as_slice(), gamma)),
            },
            MuSpec::DegreeP { n, u, c } => {
                // GL_1(Z) = {1, -1}. Inversion x -> x^{-1} carries the kernel
                // of evaluation at c to the kernel at c^{-1} and conjugates mu
                // to r(x)(x - c^{-1}) -> r(x^n) * (-c^{-1} x^n u(x^{-1})).
                match gamma[0][0] {
                    1 => MuSpec::DegreeP {
                        n: *n,
                        u: u.clone(),
                        c: *c,
                    },
                    -1 => {
                        let c_inv = ctx.inv(*c)?;
                        let u_new = u
                            .substitute(&[ExpVec::new(vec![-1])])
                            .mul_monomial(&ExpVec::new(vec![*n]))
                            .scalar_mul(ctx.neg(c_inv));
                        MuSpec::DegreeP {
                            n: *n,
                            u: u_new,
                            c: c_inv,
                        }
                    }
                    _ => return Err(Error::NotUnimodular),
                }
            }
        };
        Ok(VirtualEndo { alpha, mu })
    }
}

/// The unique split e = u0 * s + y with 0 <= u0 < p and y in Y.
fn split_exponent(
    ctx: Context,
    y: &Lattice,
    split: &ExpVec,
    e: &ExpVec,
) -> Result<(u32, ExpVec)> {
    for u0 in 0..ctx.p() {
        let tail = e.sub(&split.scale(u0 as i64));
        if y.contains(&tail) {
            return Ok((u0, tail));
        }
    }
    Err(Error::InvalidParameter(
        "exponent does not split against Y".into(),
    ))
}

/// An integer functional phi with phi(s) = 1; exists iff s is primitive.
fn dual_functional(s: &ExpVec) -> Result<Vec<i64>> {
    let v = s.as_slice();
    let mut phi = vec![0i64; v.len()];
    let mut g = 0i64;
    for (i, &vi) in v.iter().enumerate() {
        if vi == 0 {
            continue;
        }
        if g == 0 {
            g = vi.abs();
            phi[i] = vi.signum();
            continue;
        }
        let (gg, a, b) = ext_gcd(g, vi.abs());
        for x in phi.iter_mut() {
            *x *= a;
        }
        phi[i] = b * vi.signum();
        g = gg;
    }
    if g != 1 {
        return Err(Error::InvalidParameter(
            "split direction must be a primitive vector".into(),
        ));
    }
    Ok(phi)
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Serde image of a mu specification; polynomial fields are canonical text
/// and resolve against a context at pair-construction time.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum MuConfig {
    #[serde(rename = "degree_p")]
    DegreeP { n: i64, u: String, c: u32 },
    #[serde(rename = "augmentation")]
    Augmentation {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        split: Option<Vec<i64>>,
    },
}

impl MuConfig {
    pub fn resolve(&self, ctx: Context) -> Result<MuSpec> {
        Ok(match self {
            MuConfig::DegreeP { n, u, c } => MuSpec::DegreeP {
                n: *n,
                u: LaurentPoly::parse(ctx, u)?,
                c: *c,
            },
            MuConfig::Augmentation { split } => MuSpec::Augmentation {
                split: match split {
                    Some(v) => ExpVec::new(v.clone()),
                    None => ExpVec::unit(ctx.d(), 0),
                },
            },
        })
    }

    pub fn from_spec(spec: &MuSpec) -> Self {
        match spec {
            MuSpec::DegreeP { n, u, c } => MuConfig::DegreeP {
                n: *n,
                u: u.to_string(),
                c: *c,
            },
            MuSpec::Augmentation { split } => {
                let standard =
                    split.get(0) == 1 && split.as_slice().iter().skip(1).all(|&k| k == 0);
                MuConfig::Augmentation {
                    split: if standard {
                        None
                    } else {
                        Some(split.as_slice().to_vec())
                    },
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u32, d: usize) -> Context {
        Context::new(p, d).unwrap()
    }

    fn poly(c: Context, s: &str) -> LaurentPoly {
        LaurentPoly::parse(c, s).unwrap()
    }

    fn standard_aug_endo(p: u32, d: usize) -> (Context, IdealSpec, Lattice, VirtualEndo) {
        let c = ctx(p, d);
        let a0 = IdealSpec::augmentation(c);
        let mut basis = vec![vec![0i64; d]; d];
        basis[0][0] = p as i64;
        for i in 1..d {
            basis[i][i] = 1;
        }
        let y = Lattice::new(basis).unwrap();
        // alpha: x1^p -> x2, x_j -> x_{j+1}, x_d -> x1.
        let mut alpha = vec![vec![0i64; d]; d];
        alpha[0][1] = 1;
        for j in 1..d - 1 {
            alpha[j][j + 1] = 1;
        }
        alpha[d - 1][0] = 1;
        let endo = VirtualEndo::new(
            c,
            &a0,
            &y,
            alpha,
            MuSpec::Augmentation {
                split: ExpVec::unit(d, 0),
            },
        )
        .unwrap();
        (c, a0, y, endo)
    }

    #[test]
    fn mu_zero_maps_to_zero() {
        let (c, a0, y, endo) = standard_aug_endo(2, 2);
        let zero = LaurentPoly::zero(c);
        assert!(endo.mu_apply(&a0, &y, &zero).unwrap().is_zero());
        assert!(endo
            .mu_apply_via_decomposition(&a0, &y, &zero)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn mu_on_monomial_differences() {
        let (c, a0, y, endo) = standard_aug_endo(2, 2);
        // x1^3 - 1 -> x2 (u0 = 1, u1 = 1).
        let f = poly(c, "x1^3 - 1");
        assert_eq!(endo.mu_apply(&a0, &y, &f).unwrap(), poly(c, "x2"));
        // x2^k - 1 -> 0 (inside k[Y]').
        for k in [-2i64, 1, 3] {
            let g = poly(c, &format!("x2^{k} - 1"));
            assert!(endo.mu_apply(&a0, &y, &g).unwrap().is_zero());
        }
        // x1^p (x1 - 1) -> x2.
        let h = poly(c, "x1^2").mul(&poly(c, "x1 - 1"));
        assert_eq!(endo.mu_apply(&a0, &y, &h).unwrap(), poly(c, "x2"));
    }

    #[test]
    fn mu_rejects_non_members() {
        let (c, a0, y, endo) = standard_aug_endo(2, 2);
        assert!(matches!(
            endo.mu_apply(&a0, &y, &poly(c, "x1")),
            Err(Error::OutsideIdeal)
        ));
    }

    #[test]
    fn degree_p_mu_is_division_then_substitution() {
        // n = 1, u = 1, c = j: mu(r(x)(x - j)) = r(x).
        for p in [3u32, 5] {
            for j in 1..p {
                let c = ctx(p, 1);
                let a0 = IdealSpec::EvaluationKernel { point: vec![j] };
                let y = Lattice::full(1);
                let endo = VirtualEndo::new(
                    c,
                    &a0,
                    &y,
                    vec![vec![1]],
                    MuSpec::DegreeP {
                        n: 1,
                        u: LaurentPoly::one(c),
                        c: j,
                    },
                )
                .unwrap();
                let r = poly(c, "x1^2 + 2*x1^-1 + 1");
                let lin = poly(c, &format!("x1 - {j}"));
                let img = endo.mu_apply(&a0, &y, &r.mul(&lin)).unwrap();
                assert_eq!(img, r);
            }
        }
    }

    #[test]
    fn decomposition_agrees_on_skew_example() {
        let (c, a0, y, endo) = standard_aug_endo(2, 2);
        // mu((x2 - 1)(x1 - 1)) = (x2 - 1)^alpha * mu(x1 - 1) = x1 - 1 for d=2.
        let f = poly(c, "x2 - 1").mul(&poly(c, "x1 - 1"));
        assert_eq!(endo.mu_apply(&a0, &y, &f).unwrap(), poly(c, "x1 - 1"));
        assert_eq!(
            endo.mu_apply_via_decomposition(&a0, &y, &f).unwrap(),
            poly(c, "x1 - 1")
        );
        // w = x2, nu = x1 - 1: mu(x2(x1 - 1)) = x2^alpha * 1 = x1.
        let g = poly(c, "x2").mul(&poly(c, "x1 - 1"));
        assert_eq!(endo.mu_apply(&a0, &y, &g).unwrap(), poly(c, "x1"));
    }

    #[test]
    fn validation_rejects_bad_data() {
        let c = ctx(2, 2);
        let a0 = IdealSpec::augmentation(c);
        let y = Lattice::new(vec![vec![2, 0], vec![0, 1]]).unwrap();
        // Singular alpha.
        assert!(VirtualEndo::new(
            c,
            &a0,
            &y,
            vec![vec![1, 1], vec![1, 1]],
            MuSpec::Augmentation {
                split: ExpVec::unit(2, 0)
            },
        )
        .is_err());
        // Split inside Y.
        assert!(VirtualEndo::new(
            c,
            &a0,
            &y,
            vec![vec![0, 1], vec![1, 0]],
            MuSpec::Augmentation {
                split: ExpVec::new(vec![2, 0])
            },
        )
        .is_err());
        // Wrong ideal for degree-p.
        let c1 = ctx(3, 1);
        let a1 = IdealSpec::EvaluationKernel { point: vec![2] };
        assert!(VirtualEndo::new(
            c1,
            &a1,
            &Lattice::full(1),
            vec![vec![1]],
            MuSpec::DegreeP {
                n: 1,
                u: LaurentPoly::one(c1),
                c: 1,
            },
        )
        .is_err());
    }
}
