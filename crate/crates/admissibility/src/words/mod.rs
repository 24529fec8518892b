//! Group words, finite presentations, and searches for epimorphisms onto
//! finite groups.
//!
//! Conventions: `[u, v] = u⁻¹v⁻¹uv` and `u^v = v⁻¹uv`.

mod parse;
mod search;

pub use parse::{parse_word, ParseError};
pub use search::{
    central_reduction_quotient_test, count_epimorphisms, count_epimorphisms_naive, is_prop_quotient,
    is_prop_quotient_with, verify_epimorphism, Budget, CentralReduction, EpimorphismCount, QuotientStrategy,
    QuotientVerdict, SearchError, BUDGET_ENV_VAR, DEFAULT_BUDGET,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::group::FiniteGroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Word {
    /// `x_index ^ exp`
    Gen { index: usize, exp: i64 },
    Product(Vec<Word>),
    Commutator(Box<Word>, Box<Word>),
    Power(Box<Word>, i64),
}

impl Word {
    pub fn gen(index: usize) -> Word {
        Word::Gen { index, exp: 1 }
    }

    pub fn gen_pow(index: usize, exp: i64) -> Word {
        Word::Gen { index, exp }
    }

    pub fn identity() -> Word {
        Word::Product(Vec::new())
    }

    pub fn product(parts: impl IntoIterator<Item = Word>) -> Word {
        Word::Product(parts.into_iter().collect())
    }

    pub fn commutator(u: Word, v: Word) -> Word {
        Word::Commutator(Box::new(u), Box::new(v))
    }

    pub fn pow(self, k: i64) -> Word {
        Word::Power(Box::new(self), k)
    }

    pub fn inverse(self) -> Word {
        self.pow(-1)
    }

    /// `u^v = v⁻¹ u v`.
    pub fn conjugate(u: Word, v: Word) -> Word {
        Word::product([v.clone().inverse(), u, v])
    }

    /// Largest generator index occurring, or `None` for words without letters.
    pub fn max_generator(&self) -> Option<usize> {
        match self {
            Word::Gen { index, .. } => Some(*index),
            Word::Product(ws) => ws.iter().filter_map(Word::max_generator).max(),
            Word::Commutator(u, v) => u.max_generator().max(v.max_generator()),
            Word::Power(w, _) => w.max_generator(),
        }
    }

    /// Exponent sum of each generator (length `rank`). Commutators contribute 0.
    pub fn exponent_sums(&self, rank: usize) -> Vec<i64> {
        let mut out = vec![0; rank];
        self.add_exponent_sums(1, &mut out);
        out
    }

    fn add_exponent_sums(&self, scale: i64, out: &mut [i64]) {
        match self {
            Word::Gen { index, exp } => out[*index] += scale * exp,
            Word::Product(ws) => ws.iter().for_each(|w| w.add_exponent_sums(scale, out)),
            Word::Commutator(..) => {}
            Word::Power(w, k) => w.add_exponent_sums(scale * k, out),
        }
    }

    /// Value of the word under `x_i ↦ assignment[i]`.
    pub fn evaluate(&self, g: &FiniteGroup, assignment: &[usize]) -> usize {
        match self {
            Word::Gen { index, exp } => g.pow(assignment[*index], *exp),
            Word::Product(ws) => ws.iter().fold(g.identity(), |acc, w| g.mul(acc, w.evaluate(g, assignment))),
            Word::Commutator(u, v) => g.commutator(u.evaluate(g, assignment), v.evaluate(g, assignment)),
            Word::Power(w, k) => g.pow(w.evaluate(g, assignment), *k),
        }
    }

    /// Writes the word using `names` for the generators.
    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

pub fn evaluate_word(w: &Word, g: &FiniteGroup, assignment: &[usize]) -> usize {
    w.evaluate(g, assignment)
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(w: &Word, names: &[String], f: &mut fmt::Formatter<'_>, top: bool) -> fmt::Result {
            let name = |i: usize| names.get(i).cloned().unwrap_or_else(|| format!("x{i}"));
            match w {
                Word::Gen { index, exp: 1 } => write!(f, "{}", name(*index)),
                Word::Gen { index, exp } => write!(f, "{}^{}", name(*index), exp),
                Word::Product(ws) if ws.is_empty() => write!(f, "1"),
                Word::Product(ws) => {
                    if !top {
                        write!(f, "(")?;
                    }
                    for (k, p) in ws.iter().enumerate() {
                        if k > 0 {
                            write!(f, " ")?;
                        }
                        go(p, names, f, false)?;
                    }
                    if !top {
                        write!(f, ")")?;
                    }
                    Ok(())
                }
                Word::Commutator(u, v) => {
                    write!(f, "[")?;
                    go(u, names, f, true)?;
                    write!(f, ",")?;
                    go(v, names, f, true)?;
                    write!(f, "]")
                }
                Word::Power(w, k) => {
                    match **w {
                        Word::Gen { exp: 1, .. } | Word::Commutator(..) => go(w, names, f, false)?,
                        Word::Product(_) => go(w, names, f, false)?,
                        _ => {
                            write!(f, "(")?;
                            go(w, names, f, true)?;
                            write!(f, ")")?;
                        }
                    }
                    write!(f, "^{k}")
                }
            }
        }
        go(self.word, self.names, f, true)
    }
}

/// Category in which a presentation is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mode {
    AbstractFinite,
    /// Pro-p completion; only finite p-groups are valid targets.
    ProP(u64),
    /// Maximal pro-(odd order) quotient; only odd-order targets are valid.
    ProPrimeTo2,
}

impl Mode {
    pub fn parse(text: &str) -> Option<Mode> {
        let t = text.trim();
        match t {
            "abstract" | "abstract-finite" => Some(Mode::AbstractFinite),
            "pro-prime-to-2" | "pro-odd" => Some(Mode::ProPrimeTo2),
            _ => {
                let p = t.strip_prefix("pro-p:").or_else(|| t.strip_prefix("pro-"))?;
                p.parse().ok().filter(|&p| crate::arith::is_prime(p)).map(Mode::ProP)
            }
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::AbstractFinite => write!(f, "abstract-finite"),
            Mode::ProP(p) => write!(f, "pro-{p}"),
            Mode::ProPrimeTo2 => write!(f, "pro-prime-to-2"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
    pub mode: Mode,
    /// Per-generator bound: the image must have order dividing it.
    pub torsion: Vec<Option<u64>>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>, mode: Mode) -> Self {
        let torsion = vec![None; generators.len()];
        Presentation { generators, relators, mode, torsion }
    }

    /// Free group (or free pro-p group) on `x1, ..., x_rank`.
    pub fn free(rank: usize, mode: Mode) -> Self {
        Self::new((1..=rank).map(|i| format!("x{i}")).collect(), Vec::new(), mode)
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn with_torsion(mut self, generator: usize, bound: u64) -> Self {
        self.torsion[generator] = Some(bound);
        self
    }

    /// Whether an assignment of images satisfies every relator and torsion bound.
    pub fn satisfied_by(&self, g: &FiniteGroup, images: &[usize]) -> bool {
        images.len() == self.rank()
            && self.torsion.iter().zip(images).all(|(t, &x)| t.is_none_or(|b| b % g.element_order(x) as u64 == 0))
            && self.relators.iter().all(|r| r.evaluate(g, images) == g.identity())
    }

    /// Exponent sums of the relators, plus one row per torsion bound, mod `p`.
    pub fn relation_matrix_mod(&self, p: u64) -> Vec<Vec<u64>> {
        let k = self.rank();
        let mut rows: Vec<Vec<u64>> = self
            .relators
            .iter()
            .map(|r| r.exponent_sums(k).iter().map(|&e| e.rem_euclid(p as i64) as u64).collect())
            .collect();
        for (i, t) in self.torsion.iter().enumerate() {
            if let Some(b) = t {
                let mut row = vec![0; k];
                row[i] = b % p;
                rows.push(row);
            }
        }
        rows
    }

    /// Rank over `F_p` of the abelianization mod `p`.
    pub fn abelianization_rank_mod(&self, p: u64) -> usize {
        crate::arith::nullspace_mod(&self.relation_matrix_mod(p), self.rank(), p).len()
    }

    pub fn parse(text: &str, mode: Mode) -> Result<Self, ParseError> {
        parse::parse_presentation(text, mode)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} | ", self.generators.join(","))?;
        let mut rels: Vec<String> =
            self.relators.iter().map(|r| r.display(&self.generators).to_string()).collect();
        for (i, t) in self.torsion.iter().enumerate() {
            if let Some(b) = t {
                rels.push(format!("{}^{}", self.generators[i], b));
            }
        }
        write!(f, "{}>", rels.join(", "))
    }
}
