//! Mealy automata materialized from state closures: incidence matrices,
//! DOT and CSV exports, and comparison against a transcribed reference.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::wreath::WreathElement;

/// A letter transducer whose states are exact group elements. On input
/// letter l in state s the automaton outputs l under the root permutation of
/// s and moves to the section of s at l.
#[derive(Clone, Debug)]
pub struct MealyAutomaton {
    degree: usize,
    states: Vec<WreathElement>,
    names: Vec<String>,
    transitions: Vec<Vec<usize>>,
    outputs: Vec<Permutation>,
}

impl MealyAutomaton {
    pub(crate) fn new(
        degree: usize,
        states: Vec<WreathElement>,
        transitions: Vec<Vec<usize>>,
        outputs: Vec<Permutation>,
    ) -> Self {
        let names = states.iter().map(|s| s.to_string()).collect();
        MealyAutomaton {
            degree,
            states,
            names,
            transitions,
            outputs,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[WreathElement] {
        &self.states
    }

    pub fn state_names(&self) -> &[String] {
        &self.names
    }

    pub fn transition(&self, state: usize, letter: usize) -> usize {
        self.transitions[state][letter]
    }

    pub fn output(&self, state: usize) -> &Permutation {
        &self.outputs[state]
    }

    pub fn find_state(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Entry (s, s') counts the letters carrying state s to state s'.
    pub fn incidence_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.state_count();
        let mut m = vec![vec![0usize; n]; n];
        for (s, row) in self.transitions.iter().enumerate() {
            for &t in row {
                m[s][t] += 1;
            }
        }
        m
    }

    /// Deterministic DOT digraph: one edge per (state, letter), labeled
    /// `letter|output`.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("digraph mealy {\n");
        out.push_str("  rankdir=LR;\n");
        for (i, name) in self.names.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", escape(name));
        }
        for (s, row) in self.transitions.iter().enumerate() {
            for (l, &t) in row.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "  n{s} -> n{t} [label=\"{l}|{}\"];",
                    self.outputs[s].apply(l)
                );
            }
        }
        out.push_str("}\n");
        out
    }

    /// Incidence matrix as CSV with a header row of state names.
    pub fn to_csv(&self) -> String {
        let m = self.incidence_matrix();
        let mut out = String::new();
        out.push_str("state");
        for name in &self.names {
            let _ = write!(out, ",\"{}\"", name);
        }
        out.push('\n');
        for (i, row) in m.iter().enumerate() {
            let _ = write!(out, "\"{}\"", self.names[i]);
            for v in row {
                let _ = write!(out, ",{v}");
            }
            out.push('\n');
        }
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// A transcribed reference automaton: state names (canonical element text) in
/// source order, optional aliases, the incidence matrix, and any known errata
/// of the source table (cells where the transcription disagrees with the
/// recomputation, kept verbatim rather than silently patched).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Reference {
    pub states: Vec<String>,
    #[serde(default)]
    pub aliases: Vec<String>,
    pub matrix: Vec<Vec<usize>>,
    #[serde(default)]
    pub errata: Vec<CellDiff>,
    #[serde(default)]
    pub note: String,
}

impl Reference {
    pub fn from_json(s: &str) -> Result<Self> {
        let r: Reference = serde_json::from_str(s)?;
        if r.states.len() != r.matrix.len()
            || r.matrix.iter().any(|row| row.len() != r.states.len())
        {
            return Err(Error::InvalidParameter(
                "reference matrix shape does not match the state list".into(),
            ));
        }
        if !r.aliases.is_empty() && r.aliases.len() != r.states.len() {
            return Err(Error::InvalidParameter(
                "reference aliases do not match the state list".into(),
            ));
        }
        Ok(r)
    }

    pub fn alias_of(&self, name: &str) -> Option<&str> {
        let i = self.states.iter().position(|s| s == name)?;
        self.aliases.get(i).map(|s| s.as_str())
    }
}

/// One differing incidence cell, by state names.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellDiff {
    pub row: String,
    pub col: String,
    pub computed: usize,
    pub reference: usize,
}

/// Alignment diff between a computed automaton and a reference.
#[derive(Clone, Debug, Serialize)]
pub struct DiffReport {
    /// Reference states missing from the automaton.
    pub missing_states: Vec<String>,
    /// Automaton states not in the reference.
    pub extra_states: Vec<String>,
    /// Cell disagreements over the common states.
    pub cell_diffs: Vec<CellDiff>,
}

impl DiffReport {
    pub fn is_empty(&self) -> bool {
        self.missing_states.is_empty() && self.extra_states.is_empty() && self.cell_diffs.is_empty()
    }

    /// True when the only disagreements are exactly the reference's recorded
    /// errata.
    pub fn matches_errata(&self, reference: &Reference) -> bool {
        if !self.missing_states.is_empty() || !self.extra_states.is_empty() {
            return false;
        }
        let mut got = self.cell_diffs.clone();
        let mut want = reference.errata.clone();
        got.sort();
        want.sort();
        got == want
    }
}

/// Aligns states by canonical element name and reports missing and extra
/// states and differing incidence cells.
pub fn compare_to_reference(aut: &MealyAutomaton, reference: &Reference) -> DiffReport {
    let mut missing = Vec::new();
    let mut ref_index: BTreeMap<&str, usize> = BTreeMap::new();
    for (i, name) in reference.states.iter().enumerate() {
        ref_index.insert(name.as_str(), i);
    }
    let mut aut_pos: Vec<Option<usize>> = vec![None; reference.states.len()];
    for (i, name) in reference.states.iter().enumerate() {
        match aut.find_state(name) {
            Some(j) => aut_pos[i] = Some(j),
            None => missing.push(name.clone()),
        }
    }
    let extra: Vec<String> = aut
        .state_names()
        .iter()
        .filter(|n| !ref_index.contains_key(n.as_str()))
        .cloned()
        .collect();

    let m = aut.incidence_matrix();
    let mut cell_diffs = Vec::new();
    for (i, pi) in aut_pos.iter().enumerate() {
        for (j, pj) in aut_pos.iter().enumerate() {
            if let (Some(si), Some(sj)) = (pi, pj) {
                let computed = m[*si][*sj];
                let expected = reference.matrix[i][j];
                if computed != expected {
                    cell_diffs.push(CellDiff {
                        row: reference.states[i].clone(),
                        col: reference.states[j].clone(),
                        computed,
                        reference: expected,
                    });
                }
            }
        }
    }
    DiffReport {
        missing_states: missing,
        extra_states: extra,
        cell_diffs,
    }
}

/// The transcription of the published 12-state incidence table for x1 in the
/// degree-4 representation of `G_{2,2}`, with its known errata.
pub fn g22_x1_reference() -> Reference {
    Reference::from_json(include_str!("../data/g22_x1_reference.json"))
        .expect("embedded reference parses")
}
