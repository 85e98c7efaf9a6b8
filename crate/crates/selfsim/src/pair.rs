//! Similarity pairs (H, f): the seed data of a state-closed representation.
//!
//! H is determined by an ideal specification A0 (its intersection with A),
//! a finite-index lattice Y (its image in X) and a deformation map sending
//! each Y basis vector y_i to a value v_i with H generated by A0 and the
//! elements v_i y_i. The homomorphism f is the pair (mu, alpha) acting on the
//! canonical factorization of elements of H.

use serde::{Deserialize, Serialize};

use crate::context::Context;
use crate::endo::{MuConfig, VirtualEndo};
use crate::error::{Error, Result};
use crate::ideal::IdealSpec;
use crate::lattice::{det, Lattice};
use crate::poly::{ExpVec, LaurentPoly};
use crate::wreath::WreathElement;

/// Cap on coset transversals of A0 in A during enumeration.
pub const TRANSVERSAL_CAP: usize = 4096;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimilarityPair {
    ctx: Context,
    a0: IdealSpec,
    y: Lattice,
    deformation: Vec<LaurentPoly>,
    endo: VirtualEndo,
}

impl SimilarityPair {
    pub fn new(
        ctx: Context,
        a0: IdealSpec,
        y: Lattice,
        deformation: Vec<LaurentPoly>,
        endo: VirtualEndo,
    ) -> Result<Self> {
        a0.validate(ctx)?;
        if y.dim() != ctx.d() {
            return Err(Error::DimMismatch {
                expected: ctx.d(),
                got: y.dim(),
            });
        }
        if deformation.len() != ctx.d() {
            return Err(Error::DimMismatch {
                expected: ctx.d(),
                got: deformation.len(),
            });
        }
        for v in &deformation {
            if v.ctx() != ctx {
                return Err(Error::ContextMismatch);
            }
            if !v.is_zero() && a0.contains(v) {
                return Err(Error::InvalidParameter(
                    "deformation values must lie outside A0 or be zero".into(),
                ));
            }
        }
        Ok(SimilarityPair {
            ctx,
            a0,
            y,
            deformation,
            endo,
        })
    }

    /// Undeformed pair A0 * Y.
    pub fn undeformed(
        ctx: Context,
        a0: IdealSpec,
        y: Lattice,
        endo: VirtualEndo,
    ) -> Result<Self> {
        let deformation = vec![LaurentPoly::zero(ctx); ctx.d()];
        SimilarityPair::new(ctx, a0, y, deformation, endo)
    }

    pub fn ctx(&self) -> Context {
        self.ctx
    }

    pub fn a0(&self) -> &IdealSpec {
        &self.a0
    }

    pub fn lattice(&self) -> &Lattice {
        &self.y
    }

    pub fn deformation(&self) -> &[LaurentPoly] {
        &self.deformation
    }

    pub fn endo(&self) -> &VirtualEndo {
        &self.endo
    }

    pub fn is_deformed(&self) -> bool {
        self.deformation.iter().any(|v| !v.is_zero())
    }

    /// [G : H] = [A : A0] * [X : Y].
    pub fn index(&self) -> Result<u128> {
        let ia = self
            .a0
            .index_in_algebra(self.ctx)
            .ok_or_else(|| Error::BoundExceeded("index does not fit".into()))?;
        Ok(ia * self.y.index() as u128)
    }

    pub fn ideal_contains(&self, f: &LaurentPoly) -> bool {
        self.a0.contains(f)
    }

    pub fn alpha_apply(&self, v: &ExpVec) -> Result<ExpVec> {
        self.endo.alpha_apply(&self.y, v)
    }

    pub fn alpha_on_poly(&self, w: &LaurentPoly) -> Result<LaurentPoly> {
        self.endo.alpha_on_poly(&self.y, w)
    }

    pub fn mu_apply(&self, f: &LaurentPoly) -> Result<LaurentPoly> {
        self.endo.mu_apply(&self.a0, &self.y, f)
    }

    pub fn mu_apply_via_decomposition(&self, f: &LaurentPoly) -> Result<LaurentPoly> {
        self.endo.mu_apply_via_decomposition(&self.a0, &self.y, f)
    }

    /// The canonical H-representative over the lattice vector v:
    /// (v_1 y_1)^{c_1} ... (v_d y_d)^{c_d} with c the Y coordinates of v.
    pub fn deformation_rep(&self, v: &ExpVec) -> Result<WreathElement> {
        if !self.is_deformed() {
            if !self.y.contains(v) {
                return Err(Error::InvalidParameter("vector is not in Y".into()));
            }
            return Ok(WreathElement::from_x(self.ctx, v.clone()));
        }
        let coords = self
            .y
            .coords(v)
            .ok_or_else(|| Error::InvalidParameter("vector is not in Y".into()))?;
        let mut acc = WreathElement::identity(self.ctx);
        for (i, &c) in coords.iter().enumerate() {
            let gen = WreathElement::new(self.deformation[i].clone(), self.y.basis_row(i));
            acc = acc.mul(&gen.pow(c));
        }
        Ok(acc)
    }

    /// Membership test for H; returns the A0 component of the canonical
    /// factorization when g is a member.
    pub fn member(&self, g: &WreathElement) -> Result<Option<LaurentPoly>> {
        if !self.y.contains(g.x_part()) {
            return Ok(None);
        }
        let rep = self.deformation_rep(g.x_part())?;
        let a0_part = g.a_part().sub(rep.a_part());
        if self.a0.contains(&a0_part) {
            Ok(Some(a0_part))
        } else {
            Ok(None)
        }
    }

    /// f(h) for h in H: mu on the A0 component, alpha on the Y component.
    pub fn f_apply(&self, h: &WreathElement) -> Result<WreathElement> {
        let a0_part = self
            .member(h)?
            .ok_or_else(|| Error::InvalidParameter("element is not in H".into()))?;
        let img_a = self.mu_apply(&a0_part)?;
        let img_x = self.alpha_apply(h.x_part())?;
        Ok(WreathElement::new(img_a, img_x))
    }

    /// Replacement: zero the deformation, keeping (mu, alpha). Idempotent,
    /// index-preserving.
    pub fn replace(&self) -> SimilarityPair {
        let mut out = self.clone();
        out.deformation = vec![LaurentPoly::zero(self.ctx); self.ctx.d()];
        out
    }

    /// Transport through a unimodular automorphism gamma of X.
    pub fn twist(&self, gamma: &[Vec<i64>]) -> Result<SimilarityPair> {
        let d = self.ctx.d();
        if gamma.len() != d || gamma.iter().any(|r| r.len() != d) {
            return Err(Error::DimMismatch {
                expected: d,
                got: gamma.len(),
            });
        }
        let dt = det(gamma);
        if dt != 1 && dt != -1 {
            return Err(Error::NotUnimodular);
        }
        let gamma_inv = unimodular_inverse(gamma, dt as i64);

        let a0 = match &self.a0 {
            IdealSpec::ExponentReduction { v } => IdealSpec::ExponentReduction { v: *v },
            IdealSpec::EvaluationKernel { point } => {
                // f^gamma vanishes at q with q_i = prod_j c_j^{gamma_inv[i][j]}.
                let q: Vec<u32> = (0..d)
                    .map(|i| {
                        let mut acc = 1u32;
                        for (j, &cj) in point.iter().enumerate() {
                            acc = self.ctx.mul(acc, self.ctx.pow(cj, gamma_inv[i][j]));
                        }
                        acc
                    })
                    .collect();
                IdealSpec::EvaluationKernel { point: q }
            }
        };
        let y = self.y.transform(gamma)?;
        let images: Vec<ExpVec> = gamma.iter().map(|r| ExpVec::new(r.clone())).collect();
        let deformation: Vec<LaurentPoly> =
            self.deformation.iter().map(|f| f.substitute(&images)).collect();
        let endo = self.endo.twist(self.ctx, gamma)?;
        let endo = VirtualEndo::new(self.ctx, &a0, &y, endo.alpha_matrix().to_vec(), endo.mu_spec().clone())?;
        SimilarityPair::new(self.ctx, a0, y, deformation, endo)
    }

    /// Checks [y_i, w_j] in [y_j, w_i] A0 for all i < j, where w_i is the
    /// conjugate of the deformation value v_i by y_i. Returns the failing
    /// index pairs.
    pub fn deformation_consistency_failures(&self) -> Vec<(usize, usize)> {
        deformation_failures(self.ctx, &self.a0, &self.y, &self.deformation)
    }

    pub fn to_config(&self) -> PairConfig {
        PairConfig {
            p: self.ctx.p(),
            d: self.ctx.d(),
            ideal: self.a0.clone(),
            lattice: self.y.basis().to_vec(),
            alpha: self.endo.alpha_matrix().to_vec(),
            mu: MuConfig::from_spec(self.endo.mu_spec()),
            deformation: if self.is_deformed() {
                Some(self.deformation.iter().map(|f| f.to_string()).collect())
            } else {
                None
            },
        }
    }

    pub fn from_config(cfg: &PairConfig) -> Result<SimilarityPair> {
        let ctx = Context::new(cfg.p, cfg.d)?;
        let y = Lattice::new(cfg.lattice.clone())?;
        let mu = cfg.mu.resolve(ctx)?;
        let endo = VirtualEndo::new(ctx, &cfg.ideal, &y, cfg.alpha.clone(), mu)?;
        let deformation = match &cfg.deformation {
            None => vec![LaurentPoly::zero(ctx); ctx.d()],
            Some(strings) => {
                if strings.len() != ctx.d() {
                    return Err(Error::DimMismatch {
                        expected: ctx.d(),
                        got: strings.len(),
                    });
                }
                strings
                    .iter()
                    .map(|s| LaurentPoly::parse(ctx, s))
                    .collect::<Result<Vec<_>>>()?
            }
        };
        SimilarityPair::new(ctx, cfg.ideal.clone(), y, deformation, endo)
    }
}

fn unimodular_inverse(gamma: &[Vec<i64>], dt: i64) -> Vec<Vec<i64>> {
    // Adjugate over i64; entries stay small for unimodular desk-scale input.
    let d = gamma.len();
    let mut inv = vec![vec![0i64; d]; d];
    for i in 0..d {
        for j in 0..d {
            let minor: Vec<Vec<i64>> = gamma
                .iter()
                .enumerate()
                .filter(|(r, _)| *r != j)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != i)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let m = if minor.is_empty() { 1 } else { det(&minor) as i64 };
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            inv[i][j] = sign * m * dt;
        }
    }
    inv
}

fn deformation_failures(
    ctx: Context,
    a0: &IdealSpec,
    y: &Lattice,
    values: &[LaurentPoly],
) -> Vec<(usize, usize)> {
    let d = ctx.d();
    let mut failures = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let yi = WreathElement::from_x(ctx, y.basis_row(i));
            let yj = WreathElement::from_x(ctx, y.basis_row(j));
            let wi = WreathElement::from_a(values[i].mul_monomial(&y.basis_row(i)));
            let wj = WreathElement::from_a(values[j].mul_monomial(&y.basis_row(j)));
            let lhs = yi.commutator(&wj);
            let rhs = yj.commutator(&wi);
            let diff = lhs.mul(&rhs.inv());
            debug_assert!(diff.x_part().is_zero());
            if !a0.contains(diff.a_part()) {
                failures.push((i, j));
            }
        }
    }
    failures
}

/// All deformation maps of A0 * Y: assignments of coset representatives to
/// the Y basis satisfying the pairwise commutator constraint. The zero
/// deformation is always present (and listed first).
pub fn enumerate_deformations(
    ctx: Context,
    a0: &IdealSpec,
    y: &Lattice,
    transversal_bound: usize,
) -> Result<Vec<Vec<LaurentPoly>>> {
    a0.validate(ctx)?;
    let reps = a0.coset_transversal(ctx, transversal_bound)?;
    let d = ctx.d();
    let total = (reps.len() as u128)
        .checked_pow(d as u32)
        .ok_or_else(|| Error::BoundExceeded("deformation space too large".into()))?;
    if total > 1_000_000 {
        return Err(Error::BoundExceeded(format!(
            "deformation space has {total} assignments"
        )));
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; d];
    'outer: loop {
        let candidate: Vec<LaurentPoly> = idx.iter().map(|&k| reps[k].clone()).collect();
        if deformation_failures(ctx, a0, y, &candidate).is_empty() {
            out.push(candidate);
        }
        let mut i = 0;
        loop {
            if i == d {
                break 'outer;
            }
            idx[i] += 1;
            if idx[i] < reps.len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
    Ok(out)
}

/// Structured-text form of a similarity pair.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairConfig {
    pub p: u32,
    pub d: usize,
    pub ideal: IdealSpec,
    pub lattice: Vec<Vec<i64>>,
    pub alpha: Vec<Vec<i64>>,
    pub mu: MuConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deformation: Option<Vec<String>>,
}

/// Outcome of randomized skew-condition sampling: (w.nu)^mu = w^alpha nu^mu.
#[derive(Clone, Debug, Serialize)]
pub struct SkewReport {
    pub trials: usize,
    pub failures: Vec<SkewFailure>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SkewFailure {
    pub w: String,
    pub nu: String,
    pub lhs: String,
    pub rhs: String,
}

impl SkewReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Samples random (w, nu) with w in k[Y] and nu in A0 and checks the skew
/// condition exactly; failures carry the counterexamples.
pub fn check_skew_condition(
    pair: &SimilarityPair,
    trials: usize,
    seed: u64,
) -> Result<SkewReport> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let ctx = pair.ctx();
    let mut failures = Vec::new();
    for _ in 0..trials {
        let w = random_lattice_poly(ctx, pair.lattice(), &mut rng);
        let nu = random_ideal_element(ctx, pair.a0(), &mut rng);
        let lhs = pair.mu_apply(&w.mul(&nu))?;
        let rhs = pair.alpha_on_poly(&w)?.mul(&pair.mu_apply(&nu)?);
        if lhs != rhs {
            failures.push(SkewFailure {
                w: w.to_string(),
                nu: nu.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
            if failures.len() >= 16 {
                break;
            }
        }
    }
    Ok(SkewReport { trials, failures })
}

/// Random element of the subalgebra k[Y]: monomials on the lattice.
pub fn random_lattice_poly<R: rand::Rng>(
    ctx: Context,
    y: &Lattice,
    rng: &mut R,
) -> LaurentPoly {
    let nterms = rng.gen_range(0..5);
    let mut f = LaurentPoly::zero(ctx);
    for _ in 0..nterms {
        let coords: Vec<i64> = (0..ctx.d()).map(|_| rng.gen_range(-2..=2)).collect();
        let e = ExpVec::new(crate::lattice::mat_vec_mul(&coords, y.basis()));
        let c = rng.gen_range(0..ctx.p()) as i64;
        f = f.add(&LaurentPoly::monomial(ctx, e, c));
    }
    f
}

/// Random element of A0: a random polynomial minus its coset representative.
pub fn random_ideal_element<R: rand::Rng>(
    ctx: Context,
    a0: &IdealSpec,
    rng: &mut R,
) -> LaurentPoly {
    let f = random_poly(ctx, rng, 5, 3);
    f.sub(&a0.reduce(&f))
}

/// Random sparse Laurent polynomial.
pub fn random_poly<R: rand::Rng>(
    ctx: Context,
    rng: &mut R,
    max_terms: usize,
    exp_range: i64,
) -> LaurentPoly {
    let nterms = rng.gen_range(0..=max_terms);
    let mut f = LaurentPoly::zero(ctx);
    for _ in 0..nterms {
        let e: Vec<i64> = (0..ctx.d())
            .map(|_| rng.gen_range(-exp_range..=exp_range))
            .collect();
        let c = rng.gen_range(0..ctx.p()) as i64;
        f = f.add(&LaurentPoly::monomial(ctx, ExpVec::new(e), c));
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::lattice::mat_mul;

    fn poly(c: Context, s: &str) -> LaurentPoly {
        LaurentPoly::parse(c, s).unwrap()
    }

    #[test]
    fn index_examples() {
        let pair = families::theorem4_pair(2, 2).unwrap();
        assert_eq!(pair.index().unwrap(), 4);
        let pair = families::theorem3_pair(5, 2).unwrap();
        assert_eq!(pair.index().unwrap(), 5);
    }

    #[test]
    fn replace_is_idempotent_and_preserves_index() {
        let pair = families::theorem4_pair(2, 2).unwrap();
        let ctx = pair.ctx();
        let deformed = SimilarityPair::new(
            ctx,
            pair.a0().clone(),
            pair.lattice().clone(),
            vec![poly(ctx, "x1"), LaurentPoly::zero(ctx)],
            pair.endo().clone(),
        )
        .unwrap();
        assert!(deformed.is_deformed());
        let replaced = deformed.replace();
        assert!(!replaced.is_deformed());
        assert_eq!(replaced.index().unwrap(), deformed.index().unwrap());
        assert_eq!(replaced.replace(), replaced);
        assert_eq!(replaced.endo(), deformed.endo());
    }

    #[test]
    fn deformation_values_must_leave_a0() {
        let pair = families::theorem4_pair(2, 2).unwrap();
        let ctx = pair.ctx();
        // x1 - 1 lies in the augmentation ideal: invalid deformation value.
        let bad = SimilarityPair::new(
            ctx,
            pair.a0().clone(),
            pair.lattice().clone(),
            vec![poly(ctx, "x1 - 1"), LaurentPoly::zero(ctx)],
            pair.endo().clone(),
        );
        assert!(bad.is_err());
    }

    #[test]
    fn twist_identity_and_swap() {
        let pair = families::theorem4_pair(2, 2).unwrap();
        let id = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(pair.twist(&id).unwrap(), pair);

        let swap = vec![vec![0, 1], vec![1, 0]];
        let twisted = pair.twist(&swap).unwrap();
        // Y = <x1^p, x2> becomes <x2^p, x1>.
        let expect = Lattice::new(vec![vec![0, 2], vec![1, 0]]).unwrap();
        assert_eq!(
            twisted.lattice().transversal(),
            expect.transversal()
        );
        assert!(twisted.lattice().contains(&ExpVec::new(vec![0, 2])));
        assert!(twisted.lattice().contains(&ExpVec::new(vec![1, 0])));
        assert!(!twisted.lattice().contains(&ExpVec::new(vec![0, 1])));
        assert_eq!(twisted.index().unwrap(), pair.index().unwrap());

        let shear = vec![vec![1, 0], vec![3, 1]];
        let sheared = pair.twist(&shear).unwrap();
        assert_eq!(sheared.index().unwrap(), pair.index().unwrap());

        let not_uni = vec![vec![2, 0], vec![0, 1]];
        assert!(matches!(pair.twist(&not_uni), Err(Error::NotUnimodular)));
    }

    #[test]
    fn twist_composes() {
        let pair = families::theorem4_pair(3, 2).unwrap();
        let g1 = vec![vec![0, 1], vec![1, 0]];
        let g2 = vec![vec![1, 2], vec![0, 1]];
        let lhs = pair.twist(&g1).unwrap().twist(&g2).unwrap();
        let rhs = pair.twist(&mat_mul(&g1, &g2)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn degree_p_twist_keeps_mu_consistent() {
        // Twisting by inversion preserves the skew condition and index.
        let c = Context::new(5, 1).unwrap();
        let u = poly(c, "x1 + 2");
        let pair = families::theorem2_pair(5, 2, &u).unwrap();
        let inv = vec![vec![-1]];
        let twisted = pair.twist(&inv).unwrap();
        assert_eq!(twisted.index().unwrap(), pair.index().unwrap());
        let report = check_skew_condition(&twisted, 200, 7).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        // Twisting twice returns to the original.
        assert_eq!(pair.twist(&inv).unwrap().twist(&inv).unwrap(), pair);
        // Conjugation identity: mu'(nu^gamma) = mu(nu)^gamma.
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let gamma_img = vec![ExpVec::new(vec![-1])];
        for _ in 0..100 {
            let nu = random_ideal_element(c, pair.a0(), &mut rng);
            let lhs = twisted.mu_apply(&nu.substitute(&gamma_img)).unwrap();
            let rhs = pair.mu_apply(&nu).unwrap().substitute(&gamma_img);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn augmentation_twist_conjugates_mu() {
        use rand::SeedableRng;
        let pair = families::theorem4_pair(2, 2).unwrap();
        let gamma = vec![vec![1, 1], vec![0, 1]];
        let twisted = pair.twist(&gamma).unwrap();
        let gamma_img: Vec<ExpVec> = gamma.iter().map(|r| ExpVec::new(r.clone())).collect();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let nu = random_ideal_element(pair.ctx(), pair.a0(), &mut rng);
            let lhs = twisted.mu_apply(&nu.substitute(&gamma_img)).unwrap();
            let rhs = pair.mu_apply(&nu).unwrap().substitute(&gamma_img);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn member_and_f_apply_on_undeformed_pair() {
        let pair = families::theorem4_pair(2, 2).unwrap();
        let ctx = pair.ctx();
        // x1^2 is in H = A0 Y, x1 is not.
        let x1 = WreathElement::gen_x(ctx, 0);
        assert!(pair.member(&x1).unwrap().is_none());
        let sq = x1.pow(2);
        assert!(pair.member(&sq).unwrap().is_some());
        let img = pair.f_apply(&sq).unwrap();
        assert_eq!(img, WreathElement::gen_x(ctx, 1));
        // a^{x1 - 1} is in H with A0 component x1 - 1; image is a.
        let h = WreathElement::from_a(poly(ctx, "x1 - 1"));
        assert_eq!(pair.member(&h).unwrap().unwrap(), poly(ctx, "x1 - 1"));
        assert_eq!(
            pair.f_apply(&h).unwrap(),
            WreathElement::from_a(LaurentPoly::one(ctx))
        );
    }

    #[test]
    fn deformed_membership_corrects_the_a_part() {
        let pair = families::theorem3_pair(2, 1).unwrap();
        let ctx = pair.ctx();
        // Deform y_1 = x by v = a (the constant 1, outside A0 = <x-1>).
        let deformed = SimilarityPair::new(
            ctx,
            pair.a0().clone(),
            pair.lattice().clone(),
            vec![LaurentPoly::one(ctx)],
            pair.endo().clone(),
        )
        .unwrap();
        // a x is in the deformed H, bare x is not.
        let ax = WreathElement::from_a(LaurentPoly::one(ctx))
            .mul(&WreathElement::gen_x(ctx, 0));
        assert!(deformed.member(&ax).unwrap().is_some());
        assert!(deformed.member(&WreathElement::gen_x(ctx, 0)).unwrap().is_none());
        // Replacement recovers the undeformed pair.
        assert_eq!(deformed.replace(), pair);
    }

    #[test]
    fn enumerate_deformations_examples() {
        // d = 1: every coset representative is a valid single choice.
        let c = Context::new(3, 1).unwrap();
        let a0 = IdealSpec::EvaluationKernel { point: vec![1] };
        let y = Lattice::full(1);
        let defs = enumerate_deformations(c, &a0, &y, TRANSVERSAL_CAP).unwrap();
        assert_eq!(defs.len(), 3);
        assert!(defs[0][0].is_zero());

        // d = 2, augmentation ideal, p = 2: constraint checked pairwise;
        // constants commute with everything so all four pass.
        let c2 = Context::new(2, 2).unwrap();
        let a02 = IdealSpec::augmentation(c2);
        let y2 = Lattice::new(vec![vec![2, 0], vec![0, 1]]).unwrap();
        let defs2 = enumerate_deformations(c2, &a02, &y2, TRANSVERSAL_CAP).unwrap();
        assert_eq!(defs2.len(), 4);
        assert!(defs2.iter().all(|d| deformation_failures(c2, &a02, &y2, d).is_empty()));
        assert!(defs2[0].iter().all(|v| v.is_zero()));
    }

    #[test]
    fn pair_config_roundtrip() {
        let pair = families::theorem4_pair(3, 2).unwrap();
        let cfg = pair.to_config();
        let json = serde_json::to_string(&cfg).unwrap();
        let back: PairConfig = serde_json::from_str(&json).unwrap();
        assert_eq!(SimilarityPair::from_config(&back).unwrap(), pair);
    }

    #[test]
    fn skew_condition_holds_for_families() {
        let pair = families::theorem4_pair(2, 2).unwrap();
        let report = check_skew_condition(&pair, 300, 0).unwrap();
        assert!(report.passed(), "{:?}", report.failures);

        let c = Context::new(3, 1).unwrap();
        let u = poly(c, "x1 + 1");
        let pair2 = families::theorem2_pair(3, 2, &u).unwrap();
        let report2 = check_skew_condition(&pair2, 300, 0).unwrap();
        assert!(report2.passed(), "{:?}", report2.failures);
    }

    #[test]
    fn mu_is_additive() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let pair = families::theorem4_pair(3, 2).unwrap();
        for _ in 0..200 {
            let f = random_ideal_element(pair.ctx(), pair.a0(), &mut rng);
            let g = random_ideal_element(pair.ctx(), pair.a0(), &mut rng);
            let lhs = pair.mu_apply(&f.add(&g)).unwrap();
            let rhs = pair.mu_apply(&f).unwrap().add(&pair.mu_apply(&g).unwrap());
            assert_eq!(lhs, rhs);
        }
    }
}
