//! Wreath recursion over a compiled similarity pair: coset actions, Schreier
//! decomposition, vertex actions, portraits, exact state closures, action
//! triviality and kernel scans.
//!
//! States are exact group elements with canonical-form equality, never
//! truncated portraits, so a completed closure is a genuine finite-state
//! certificate and triviality of finite-state actions is decidable.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::automaton::MealyAutomaton;
use crate::context::Context;
use crate::endo::MuSpec;
use crate::error::{Error, Result};
use crate::exec;
use crate::families;
use crate::pair::{SimilarityPair, TRANSVERSAL_CAP};
use crate::perm::Permutation;
use crate::poly::{ExpVec, LaurentPoly};
use crate::wreath::{GeneratorWord, Letter, WreathElement};

/// Default cap on closure sizes.
pub const DEFAULT_MAX_STATES: usize = 10_000;
/// Default word-length bound for kernel scans.
pub const DEFAULT_KERNEL_WORD_LENGTH: usize = 6;
/// Default portrait depth.
pub const DEFAULT_PORTRAIT_DEPTH: usize = 8;
/// Hard cap on the tree degree; beyond this the tree is unusable anyway.
const MAX_DEGREE: u128 = 10_000;

/// A compiled representation: the transversal of H in G with its letter
/// indexing, ready to run the recursion. Immutable after construction.
#[derive(Clone, Debug)]
pub struct RepContext {
    pair: SimilarityPair,
    degree: usize,
    transversal: Vec<WreathElement>,
    transversal_inv: Vec<WreathElement>,
}

/// Triviality verdict for the action of one element.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Triviality {
    Trivial,
    NonTrivial,
    Unknown,
}

/// Depth-truncated labeling of tree vertices by root permutations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Portrait {
    degree: usize,
    depth: usize,
    labels: BTreeMap<Vec<usize>, Permutation>,
}

impl RepContext {
    /// Compiles a similarity pair: enumerates the transversal s * t over the
    /// lattice transversal (outer index) and the A0 coset representatives
    /// (inner index), so the letter of x^t a^s is t_idx * |S| + s_idx.
    pub fn new(pair: SimilarityPair) -> Result<Self> {
        let degree = pair.index()?;
        if degree > MAX_DEGREE {
            return Err(Error::BoundExceeded(format!(
                "tree degree {degree} exceeds the cap {MAX_DEGREE}"
            )));
        }
        let ctx = pair.ctx();
        let lattice_reps = pair.lattice().transversal();
        let ideal_reps = pair.a0().coset_transversal(ctx, TRANSVERSAL_CAP)?;
        let mut transversal = Vec::with_capacity(degree as usize);
        for t in &lattice_reps {
            for s in &ideal_reps {
                let el = WreathElement::from_x(ctx, t.clone())
                    .mul(&WreathElement::from_a(s.clone()));
                transversal.push(el);
            }
        }
        debug_assert_eq!(transversal.len() as u128, degree);
        let transversal_inv = transversal.iter().map(|t| t.inv()).collect();
        Ok(RepContext {
            pair,
            degree: degree as usize,
            transversal,
            transversal_inv,
        })
    }

    pub fn from_construction(c: &families::Construction) -> Result<Self> {
        RepContext::new(c.build()?)
    }

    pub fn ctx(&self) -> Context {
        self.pair.ctx()
    }

    pub fn pair(&self) -> &SimilarityPair {
        &self.pair
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn transversal(&self) -> &[WreathElement] {
        &self.transversal
    }

    pub fn gen_a(&self) -> WreathElement {
        WreathElement::gen_a(self.ctx())
    }

    pub fn gen_x(&self, i: usize) -> WreathElement {
        WreathElement::gen_x(self.ctx(), i)
    }

    pub fn eval_word(&self, w: &GeneratorWord) -> WreathElement {
        w.eval(self.ctx())
    }

    /// The coset letter of g and the Schreier cofactor (t_i g) t_j^{-1}.
    fn resolve(&self, s: &WreathElement) -> Result<(usize, WreathElement)> {
        for (j, tinv) in self.transversal_inv.iter().enumerate() {
            let h = s.mul(tinv);
            if self.pair.member(&h)?.is_some() {
                return Ok((j, h));
            }
        }
        Err(Error::CosetResolution(s.to_string()))
    }

    /// The permutation induced on the transversal letters.
    pub fn coset_action(&self, g: &WreathElement) -> Result<Permutation> {
        let mut images = Vec::with_capacity(self.degree);
        for t in &self.transversal {
            let (j, _) = self.resolve(&t.mul(g))?;
            images.push(j);
        }
        Permutation::new(images)
    }

    /// First-level sections and root permutation: child i is f applied to
    /// the Schreier cofactor h_i = (t_i g) t_j^{-1}, t_j the representative
    /// of the target coset.
    pub fn decompose(&self, g: &WreathElement) -> Result<(Vec<WreathElement>, Permutation)> {
        let mut children = Vec::with_capacity(self.degree);
        let mut images = Vec::with_capacity(self.degree);
        for t in &self.transversal {
            let (j, h) = self.resolve(&t.mul(g))?;
            children.push(self.pair.f_apply(&h)?);
            images.push(j);
        }
        Ok((children, Permutation::new(images)?))
    }

    /// Image of a vertex (a string over [0, m)) under the tree action.
    pub fn act_on_vertex(&self, g: &WreathElement, vertex: &[usize]) -> Result<Vec<usize>> {
        if let Some(&bad) = vertex.iter().find(|&&l| l >= self.degree) {
            return Err(Error::BadVertexLetter {
                letter: bad,
                degree: self.degree,
            });
        }
        let mut out = Vec::with_capacity(vertex.len());
        let mut state = g.clone();
        for &letter in vertex {
            let (children, perm) = self.decompose(&state)?;
            out.push(perm.apply(letter));
            state = children[letter].clone();
        }
        Ok(out)
    }

    /// Labels every vertex of depth < `depth` with the root permutation of
    /// its section.
    pub fn portrait(&self, g: &WreathElement, depth: usize) -> Result<Portrait> {
        let mut labels = BTreeMap::new();
        let mut memo: HashMap<WreathElement, (Vec<WreathElement>, Permutation)> = HashMap::new();
        if depth > 0 {
            let mut level: Vec<(Vec<usize>, WreathElement)> = vec![(Vec::new(), g.clone())];
            for _ in 0..depth {
                let mut next = Vec::new();
                for (vertex, el) in level {
                    let (children, perm) = match memo.get(&el) {
                        Some(hit) => hit.clone(),
                        None => {
                            let computed = self.decompose(&el)?;
                            memo.insert(el.clone(), computed.clone());
                            computed
                        }
                    };
                    labels.insert(vertex.clone(), perm);
                    if vertex.len() + 1 < depth {
                        for (l, child) in children.into_iter().enumerate() {
                            let mut v = vertex.clone();
                            v.push(l);
                            next.push((v, child));
                        }
                    }
                }
                level = next;
            }
        }
        Ok(Portrait {
            degree: self.degree,
            depth,
            labels,
        })
    }

    /// Exact state closure of g under the section map, breadth-first with
    /// canonical-form deduplication. None when more than `max_states` states
    /// appear. Level expansion runs in the batch executor; discovery order is
    /// deterministic regardless.
    pub fn state_closure(
        &self,
        g: &WreathElement,
        max_states: usize,
    ) -> Result<Option<MealyAutomaton>> {
        if max_states < 1 {
            return Err(Error::InvalidParameter("max_states must be >= 1".into()));
        }
        let mut states: Vec<WreathElement> = vec![g.clone()];
        let mut index: HashMap<WreathElement, usize> = HashMap::new();
        index.insert(g.clone(), 0);
        let mut transitions: Vec<Vec<usize>> = Vec::new();
        let mut outputs: Vec<Permutation> = Vec::new();
        let mut frontier: Vec<usize> = vec![0];
        while !frontier.is_empty() {
            let elements: Vec<WreathElement> =
                frontier.iter().map(|&i| states[i].clone()).collect();
            let decomps = exec::map_batch(&elements, |el| self.decompose(el));
            let mut next = Vec::new();
            for decomp in decomps {
                let (children, perm) = decomp?;
                let mut row = Vec::with_capacity(self.degree);
                for child in children {
                    let idx = match index.get(&child) {
                        Some(&i) => i,
                        None => {
                            if states.len() >= max_states {
                                return Ok(None);
                            }
                            let i = states.len();
                            states.push(child.clone());
                            index.insert(child, i);
                            next.push(i);
                            i
                        }
                    };
                    row.push(idx);
                }
                transitions.push(row);
                outputs.push(perm);
            }
            frontier = next;
        }
        // Discovery order with the identity first, when present.
        let e = WreathElement::identity(self.ctx());
        if let Some(&eidx) = index.get(&e) {
            if eidx != 0 {
                let mut order: Vec<usize> = (0..states.len()).collect();
                order.remove(eidx);
                order.insert(0, eidx);
                let mut newpos = vec![0usize; states.len()];
                for (new, &old) in order.iter().enumerate() {
                    newpos[old] = new;
                }
                let states = order.iter().map(|&i| states[i].clone()).collect();
                let transitions = order
                    .iter()
                    .map(|&i| transitions[i].iter().map(|&t| newpos[t]).collect())
                    .collect();
                let outputs = order.iter().map(|&i| outputs[i].clone()).collect();
                return Ok(Some(MealyAutomaton::new(
                    self.degree,
                    states,
                    transitions,
                    outputs,
                )));
            }
        }
        Ok(Some(MealyAutomaton::new(
            self.degree,
            states,
            transitions,
            outputs,
        )))
    }

    /// Decides triviality of the action for finite-state elements: trivial
    /// iff every reachable section has the identity root permutation.
    pub fn is_trivial_action(&self, g: &WreathElement, max_states: usize) -> Result<Triviality> {
        let mut seen: HashMap<WreathElement, ()> = HashMap::new();
        let mut queue = std::collections::VecDeque::new();
        seen.insert(g.clone(), ());
        queue.push_back(g.clone());
        while let Some(el) = queue.pop_front() {
            let (children, perm) = self.decompose(&el)?;
            if !perm.is_identity() {
                return Ok(Triviality::NonTrivial);
            }
            for child in children {
                if !seen.contains_key(&child) {
                    if seen.len() >= max_states {
                        return Ok(Triviality::Unknown);
                    }
                    seen.insert(child.clone(), ());
                    queue.push_back(child);
                }
            }
        }
        Ok(Triviality::Trivial)
    }

    /// Enumerates freely reduced generator words up to the length bound and
    /// checks that every word with a nontrivial group element acts
    /// nontrivially. Words whose element acts trivially are kernel witnesses;
    /// bound-limited checks are reported as unknown.
    pub fn kernel_scan(&self, max_word_length: usize, max_states: usize) -> Result<KernelReport> {
        let ctx = self.ctx();
        let alphabet = Letter::alphabet(ctx.d());
        let mut words_enumerated: u64 = 0;
        // One representative word (the first in enumeration order) per
        // distinct nontrivial group element.
        let mut reps: Vec<(WreathElement, GeneratorWord)> = Vec::new();
        let mut seen: HashMap<WreathElement, ()> = HashMap::new();
        let mut stack: Vec<(Vec<Letter>, WreathElement)> =
            vec![(Vec::new(), WreathElement::identity(ctx))];
        while let Some((prefix, el)) = stack.pop() {
            if prefix.len() >= max_word_length {
                continue;
            }
            for &l in &alphabet {
                if prefix.last() == Some(&l.inverse()) {
                    continue;
                }
                let mut word = prefix.clone();
                word.push(l);
                let next = el.mul(&l.eval(ctx));
                words_enumerated += 1;
                if !next.is_identity() && !seen.contains_key(&next) {
                    seen.insert(next.clone(), ());
                    reps.push((next.clone(), GeneratorWord::new(word.clone())));
                }
                stack.push((word, next));
            }
        }
        let verdicts = exec::map_batch(&reps, |(el, _)| self.is_trivial_action(el, max_states));
        let mut witnesses = Vec::new();
        let mut unknown = Vec::new();
        for ((el, word), verdict) in reps.iter().zip(verdicts) {
            match verdict? {
                Triviality::NonTrivial => {}
                Triviality::Trivial => witnesses.push(KernelWitness {
                    word: word.to_string(),
                    element: el.to_string(),
                }),
                Triviality::Unknown => unknown.push(word.to_string()),
            }
        }
        witnesses.sort();
        unknown.sort();
        Ok(KernelReport {
            max_word_length,
            words_enumerated,
            elements_checked: reps.len(),
            witnesses,
            unknown,
        })
    }

    /// Compares the Schreier-built decomposition of every generator against
    /// the closed-form children of the construction the pair came from.
    pub fn verify_closed_form(&self) -> Result<ClosedFormReport> {
        let expected = self.closed_form_decompositions()?;
        let mut checks = Vec::new();
        for (name, element, want_children, want_perm) in expected {
            let (children, perm) = self.decompose(&element)?;
            let child_diffs: Vec<usize> = (0..self.degree)
                .filter(|&i| children[i] != want_children[i])
                .collect();
            let perm_ok = perm == want_perm;
            let passed = child_diffs.is_empty() && perm_ok;
            let details = if passed {
                String::new()
            } else {
                format!(
                    "mismatched letters {:?}; perm computed {} expected {}",
                    child_diffs, perm, want_perm
                )
            };
            checks.push(ClosedFormCheck {
                generator: name,
                passed,
                details,
            });
        }
        Ok(ClosedFormReport { checks })
    }

    /// The closed-form first-level decompositions of the generators, for the
    /// two constructed families.
    #[allow(clippy::type_complexity)]
    fn closed_form_decompositions(
        &self,
    ) -> Result<Vec<(String, WreathElement, Vec<WreathElement>, Permutation)>> {
        let ctx = self.ctx();
        let p = ctx.p() as usize;
        let d = ctx.d();
        let e = WreathElement::identity(ctx);
        match self.pair.endo().mu_spec().clone() {
            MuSpec::DegreeP { n, u, c } => {
                if self.pair.is_deformed() || self.degree != p {
                    return Err(Error::NotAFamily);
                }
                let mut out = Vec::new();
                // a = (e, ..., e) followed by the +1 cycle on letters.
                let a_perm = Permutation::new((0..p).map(|i| (i + 1) % p).collect())?;
                out.push((
                    "a".to_string(),
                    self.gen_a(),
                    vec![e.clone(); p],
                    a_perm,
                ));
                // x = (x^n a^{0u}, x^n a^{1u}, ...) with letter map i -> ic.
                let mut children = Vec::with_capacity(p);
                for i in 0..p {
                    let pow = u
                        .scalar_mul(i as u32)
                        .mul_monomial(&ExpVec::new(vec![-n]));
                    children.push(WreathElement::new(pow, ExpVec::new(vec![n])));
                }
                let x_perm =
                    Permutation::new((0..p).map(|i| (i * c as usize) % p).collect())?;
                out.push(("x1".to_string(), self.gen_x(0), children, x_perm));
                Ok(out)
            }
            MuSpec::Augmentation { .. } => {
                // Validated against the standard construction only.
                let standard = families::theorem4_pair(ctx.p(), d)?;
                if self.pair != standard {
                    return Err(Error::NotAFamily);
                }
                let m = p * p;
                let letter = |i: usize, j: usize| i * p + j;
                let mut out = Vec::new();

                // a: trivial children, letter ij -> i(j+1).
                let mut a_images = vec![0; m];
                for i in 0..p {
                    for j in 0..p {
                        a_images[letter(i, j)] = letter(i, (j + 1) % p);
                    }
                }
                out.push((
                    "a".to_string(),
                    self.gen_a(),
                    vec![e.clone(); m],
                    Permutation::new(a_images)?,
                ));

                // x1: children (a^j)^{x2^{-1}} for i < p-1, with a trailing
                // x2 on the last block; letters ij -> (i+1)j.
                let x2_inv = ExpVec::unit(d, 1).neg();
                let mut x1_children = Vec::with_capacity(m);
                let mut x1_images = vec![0; m];
                for i in 0..p {
                    for j in 0..p {
                        let poly = LaurentPoly::monomial(ctx, x2_inv.clone(), j as i64);
                        let child = if i < p - 1 {
                            WreathElement::from_a(poly)
                        } else {
                            WreathElement::new(poly, ExpVec::unit(d, 1))
                        };
                        x1_children.push(child);
                        x1_images[letter(i, j)] = letter((i + 1) % p, j);
                    }
                }
                out.push((
                    "x1".to_string(),
                    self.gen_x(0),
                    x1_children,
                    Permutation::new(x1_images)?,
                ));

                // x_l (2 <= l <= d): children (a^{-ij})^{x2^{-1}(1 - x_{l+1}^{-1})} x_{l+1}
                // with l+1 wrapping to 1, and the trivial permutation.
                for l in 1..d {
                    let succ = (l + 1) % d;
                    let mut children = Vec::with_capacity(m);
                    for i in 0..p {
                        for j in 0..p {
                            let coeff = ctx.reduce(-((i * j) as i64));
                            let shape = LaurentPoly::monomial(ctx, x2_inv.clone(), 1).sub(
                                &LaurentPoly::monomial(
                                    ctx,
                                    x2_inv.add(&ExpVec::unit(d, succ).neg()),
                                    1,
                                ),
                            );
                            let poly = shape.scalar_mul(coeff);
                            children.push(WreathElement::new(poly, ExpVec::unit(d, succ)));
                        }
                    }
                    out.push((
                        format!("x{}", l + 1),
                        self.gen_x(l),
                        children,
                        Permutation::identity(m),
                    ));
                }
                Ok(out)
            }
        }
    }
}

impl Portrait {
    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn label(&self, vertex: &[usize]) -> Option<&Permutation> {
        self.labels.get(vertex)
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Indented text rendering, one vertex per line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (vertex, perm) in &self.labels {
            let indent = "  ".repeat(vertex.len());
            let name = if vertex.is_empty() {
                "@".to_string()
            } else {
                vertex
                    .iter()
                    .map(|l| l.to_string())
                    .collect::<Vec<_>>()
                    .join(if self.degree > 10 { "," } else { "" })
            };
            out.push_str(&format!("{indent}{name} {perm}\n"));
        }
        out
    }
}

/// Outcome of a kernel scan.
#[derive(Clone, Debug, Serialize)]
pub struct KernelReport {
    pub max_word_length: usize,
    pub words_enumerated: u64,
    pub elements_checked: usize,
    pub witnesses: Vec<KernelWitness>,
    pub unknown: Vec<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq, PartialOrd, Ord)]
pub struct KernelWitness {
    pub word: String,
    pub element: String,
}

impl KernelReport {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty() && self.unknown.is_empty()
    }
}

/// Outcome of the generator closed-form comparison.
#[derive(Clone, Debug, Serialize)]
pub struct ClosedFormReport {
    pub checks: Vec<ClosedFormCheck>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosedFormCheck {
    pub generator: String,
    pub passed: bool,
    pub details: String,
}

impl ClosedFormReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Parses a vertex string: bare digits for degree <= 10, comma-separated
/// letters otherwise.
pub fn parse_vertex(s: &str, degree: usize) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let letters: Vec<usize> = if s.contains(',') || degree > 10 {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::BadLetter(t.to_string()))
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::BadLetter(c.to_string()))
            })
            .collect::<Result<Vec<_>>>()?
    };
    if let Some(&bad) = letters.iter().find(|&&l| l >= degree) {
        return Err(Error::BadVertexLetter {
            letter: bad,
            degree,
        });
    }
    Ok(letters)
}

/// Renders a vertex back to text under the same convention.
pub fn format_vertex(vertex: &[usize], degree: usize) -> String {
    if vertex.is_empty() {
        return String::new();
    }
    let sep = if degree > 10 { "," } else { "" };
    vertex
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}
