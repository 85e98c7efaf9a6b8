//! Simplicity criteria for degree-p virtual endomorphisms and a bounded
//! search for invariant-ideal witnesses of non-simplicity.

use std::collections::BTreeSet;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::pair::SimilarityPair;
use crate::poly::LaurentPoly;

/// Verdict of the degree-p criteria.
///
/// The necessary conditions are: u does not vanish on the forward orbit of c
/// under t -> t^n in GF(p)^*, and writing n = p^s n' with gcd(p, n') = 1,
/// either s = 0 or ord(c) does not divide n' - 1. They are sufficient for
/// c = 1 and for (n, u) = (1, 1); outside those cases a pass is reported as
/// `Inconclusive`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimplicityVerdict {
    Simple,
    /// Carries the name of a nonzero mu-invariant ideal inside A0.
    NotSimple(String),
    Inconclusive,
}

pub fn check_simplicity_degree_p(
    ctx: Context,
    n: i64,
    u: &LaurentPoly,
    c: u32,
) -> Result<SimplicityVerdict> {
    if ctx.d() != 1 {
        return Err(Error::DimMismatch {
            expected: 1,
            got: ctx.d(),
        });
    }
    if u.is_zero() {
        return Err(Error::InvalidParameter("u must be nonzero".into()));
    }
    let c = c % ctx.p();
    if c == 0 {
        return Err(Error::InvalidParameter("c must be nonzero".into()));
    }
    if n == 0 {
        // alpha: x -> 1 is not a monomorphism; M(x-1) is mu-invariant.
        return Ok(SimplicityVerdict::NotSimple(
            "M*(x1-1) (alpha is not injective)".to_string(),
        ));
    }

    // Orbit of c under t -> t^n: if u(c^{n^i}) = 0 at the first index i, the
    // ideal M * u(x) u(x^n) ... u(x^{n^{i-1}}) is mu-invariant (M itself when
    // i = 0, i.e. (x - c) | u).
    let mut t = c;
    let mut seen = BTreeSet::new();
    let mut i = 0usize;
    while seen.insert(t) {
        if u.evaluate(&[t])? == 0 {
            let witness = if i == 0 {
                "M (since (x1 - c) divides u)".to_string()
            } else {
                let factors: Vec<String> = (0..i)
                    .map(|k| {
                        let e = pow_str(n, k);
                        if e == "1" {
                            "u(x1)".to_string()
                        } else {
                            format!("u(x1^{e})")
                        }
                    })
                    .collect();
                format!("M*{}", factors.join("*"))
            };
            return Ok(SimplicityVerdict::NotSimple(witness));
        }
        t = ctx.pow(t, n);
        i += 1;
    }

    // n = p^s n' with gcd(p, n') = 1: need s = 0 or ord(c) not dividing n'-1.
    let mut s = 0u32;
    let mut n_prime = n;
    while n_prime.rem_euclid(ctx.p() as i64) == 0 {
        n_prime /= ctx.p() as i64;
        s += 1;
    }
    if s > 0 {
        let ord = ctx.order(c)? as i64;
        if (n_prime - 1).rem_euclid(ord) == 0 {
            let witness = if c == 1 {
                "I*(x1-1)^2".to_string()
            } else {
                format!("M*(x1-{c})^2")
            };
            return Ok(SimplicityVerdict::NotSimple(witness));
        }
    }

    // Sufficiency: proved for c = 1 (gcd(p, n) = 1 and u(1) != 0 established
    // above) and for n = 1, u = 1 at any c.
    if c == 1 {
        return Ok(SimplicityVerdict::Simple);
    }
    if n == 1 && *u == LaurentPoly::one(ctx) {
        return Ok(SimplicityVerdict::Simple);
    }
    Ok(SimplicityVerdict::Inconclusive)
}

fn pow_str(n: i64, k: usize) -> String {
    // n^k as an exact integer string for small k.
    let mut acc: i128 = 1;
    for _ in 0..k {
        acc *= n as i128;
    }
    acc.to_string()
}

/// Bounded orbit closure: grows each seed under mu against the coset
/// representatives of k[Y] in A, deduplicating by canonical form. When the
/// generator set reaches a fixed point while staying inside A0, its A-span is
/// a nonzero mu-invariant ideal inside A0 and is returned as a witness of
/// non-simplicity. Escaping A0 or exceeding the bound yields None.
pub fn invariant_ideal_witness(
    pair: &SimilarityPair,
    seeds: &[LaurentPoly],
    iteration_bound: usize,
) -> Result<Option<Vec<LaurentPoly>>> {
    let ctx = pair.ctx();
    let transversal = pair.lattice().transversal();
    'seeds: for seed in seeds {
        if seed.is_zero() || !pair.ideal_contains(seed) {
            continue;
        }
        let mut set: BTreeSet<LaurentPoly> = BTreeSet::new();
        set.insert(seed.clone());
        let mut frontier = vec![seed.clone()];
        while !frontier.is_empty() {
            if set.len() > iteration_bound {
                continue 'seeds;
            }
            let mut next = Vec::new();
            for g in &frontier {
                for t in &transversal {
                    // A0 is an ideal, so the shift stays inside the mu domain.
                    let shifted = g.mul(&LaurentPoly::monomial(ctx, t.clone(), 1));
                    let img = pair.mu_apply(&shifted)?;
                    if img.is_zero() {
                        continue;
                    }
                    if !pair.ideal_contains(&img) {
                        continue 'seeds;
                    }
                    if set.insert(img.clone()) {
                        next.push(img);
                    }
                }
            }
            frontier = next;
        }
        return Ok(Some(set.into_iter().collect()));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn ctx(p: u32) -> Context {
        Context::new(p, 1).unwrap()
    }

    fn poly(c: Context, s: &str) -> LaurentPoly {
        LaurentPoly::parse(c, s).unwrap()
    }

    #[test]
    fn theorem3_parameters_are_simple() {
        for p in [2u32, 3, 5] {
            let c = ctx(p);
            for j in 1..p {
                let v = check_simplicity_degree_p(c, 1, &LaurentPoly::one(c), j).unwrap();
                assert_eq!(v, SimplicityVerdict::Simple, "p={p} j={j}");
            }
        }
    }

    #[test]
    fn divisible_u_is_not_simple() {
        let c = ctx(3);
        // u = x - 2 vanishes at c = 2.
        let u = poly(c, "x1 - 2");
        match check_simplicity_degree_p(c, 1, &u, 2).unwrap() {
            SimplicityVerdict::NotSimple(w) => assert!(w.starts_with("M"), "{w}"),
            v => panic!("expected NotSimple, got {v:?}"),
        }
        // u vanishing later on the orbit of c under t -> t^n.
        let c5 = ctx(5);
        // c = 2, n = 2: orbit 2 -> 4 -> 1. u = x - 4 vanishes at index 1,
        // u = x - 1 at index 2.
        let u2 = poly(c5, "x1 - 4");
        match check_simplicity_degree_p(c5, 2, &u2, 2).unwrap() {
            SimplicityVerdict::NotSimple(w) => assert_eq!(w, "M*u(x1)"),
            v => panic!("expected NotSimple, got {v:?}"),
        }
        let u3 = poly(c5, "x1 - 1");
        match check_simplicity_degree_p(c5, 2, &u3, 2).unwrap() {
            SimplicityVerdict::NotSimple(w) => assert_eq!(w, "M*u(x1)*u(x1^2)"),
            v => panic!("expected NotSimple, got {v:?}"),
        }
    }

    #[test]
    fn p_divides_n_is_not_simple_at_c_one() {
        let c = ctx(3);
        let u = LaurentPoly::one(c);
        match check_simplicity_degree_p(c, 3, &u, 1).unwrap() {
            SimplicityVerdict::NotSimple(w) => assert_eq!(w, "I*(x1-1)^2"),
            v => panic!("expected NotSimple, got {v:?}"),
        }
        // gcd(p, n) = 1 with u(1) != 0 at c = 1: simple by the closed theory.
        assert_eq!(
            check_simplicity_degree_p(c, 2, &poly(c, "x1 + 1"), 1).unwrap(),
            SimplicityVerdict::Simple
        );
    }

    #[test]
    fn inconclusive_outside_proved_cases() {
        let c = ctx(5);
        // c = 2, n = 2, u = 1: necessary conditions hold, sufficiency unproved.
        let v = check_simplicity_degree_p(c, 2, &LaurentPoly::one(c), 2).unwrap();
        assert_eq!(v, SimplicityVerdict::Inconclusive);
    }

    #[test]
    fn u_zero_is_an_error() {
        let c = ctx(3);
        assert!(check_simplicity_degree_p(c, 1, &LaurentPoly::zero(c), 1).is_err());
    }

    #[test]
    fn witness_search_finds_stable_ideal() {
        // Sabotage: u = x - 1 at c = 1, n = 1 makes mu the identity on M;
        // the seed x - 1 is a fixed point.
        let c = ctx(2);
        let u = poly(c, "x1 + 1");
        let pair = families::degree_p_pair(2, 1, &u, 1).unwrap();
        let seed = poly(c, "x1 + 1");
        let witness = invariant_ideal_witness(&pair, &[seed.clone()], 1000).unwrap();
        let witness = witness.expect("witness expected");
        assert!(witness.contains(&seed));
        for w in &witness {
            assert!(pair.ideal_contains(w));
        }
    }

    #[test]
    fn no_witness_for_simple_families() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let pair = families::theorem4_pair(2, 2).unwrap();
        let seeds: Vec<LaurentPoly> = (0..5)
            .map(|_| crate::pair::random_ideal_element(pair.ctx(), pair.a0(), &mut rng))
            .collect();
        assert!(invariant_ideal_witness(&pair, &seeds, 2000)
            .unwrap()
            .is_none());
        // The zero seed never yields a witness.
        assert!(
            invariant_ideal_witness(&pair, &[LaurentPoly::zero(pair.ctx())], 100)
                .unwrap()
                .is_none()
        );
    }
}
