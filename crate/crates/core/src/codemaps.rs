//! Elementary code maps and their extension to simplicial complexes.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::codeword::{mask, Codeword, NeuralCode, MAX_NEURONS};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// A bijection of `[n]`, stored as 1-based images `γ(1), …, γ(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > MAX_NEURONS {
            return Err(Error::NotAPermutation { n, reason: "size must be between 1 and 64".into() });
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n {
                return Err(Error::NotAPermutation { n, reason: format!("image {i} outside 1..={n}") });
            }
            if std::mem::replace(&mut seen[i - 1], true) {
                return Err(Error::NotAPermutation { n, reason: format!("image {i} repeated") });
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new((1..=n).collect())
    }

    /// Swaps `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::NotAPermutation { n, reason: format!("transposition ({a} {b}) outside 1..={n}") });
        }
        images.swap(a - 1, b - 1);
        Self::new(images)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `γ(i)`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &g) in self.images.iter().enumerate() {
            inv[g - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// Sends neuron `i` to neuron `γ(i)`.
    pub fn relabel(&self, cw: &Codeword) -> Codeword {
        let bits = cw.neurons().fold(0u64, |acc, i| acc | 1 << (self.image(i) - 1));
        Codeword::from_raw(cw.n(), bits)
    }

    /// `σ ↦ σ_{γ(1)} σ_{γ(2)} ⋯ σ_{γ(n)}`: position `i` takes the bit at `γ(i)`.
    pub fn apply_to_word(&self, cw: &Codeword) -> Codeword {
        self.inverse().relabel(cw)
    }

    /// Every permutation of `[n]` in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Permutation> {
        fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                out.push(Permutation { images: prefix.clone() });
                return;
            }
            for i in 0..used.len() {
                if !used[i] {
                    used[i] = true;
                    prefix.push(i + 1);
                    extend(prefix, used, out);
                    prefix.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        extend(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Comma-separated images, e.g. `2,3,1`.
    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|_| Error::NotAPermutation { n: 0, reason: format!("'{}' is not an index", t.trim()) })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(images)
    }
}

/// Removes coordinate `d`, shifting later coordinates down.
pub fn delete_coordinate(cw: &Codeword, d: usize) -> Result<Codeword> {
    let n = cw.n();
    if d == 0 || d > n {
        return Err(Error::NeuronOutOfRange { index: d, n });
    }
    if n == 1 {
        return Err(Error::EmptyProjection);
    }
    let low = cw.bits() & mask(d - 1);
    let high = (cw.bits() >> d) << (d - 1);
    Ok(Codeword::from_raw(n - 1, low | high))
}

/// Inserts a new coordinate at position `d` carrying `bit`.
pub fn insert_coordinate(cw: &Codeword, d: usize, bit: bool) -> Result<Codeword> {
    let n = cw.n();
    if d == 0 || d > n + 1 {
        return Err(Error::NeuronOutOfRange { index: d, n: n + 1 });
    }
    if n + 1 > MAX_NEURONS {
        return Err(Error::InvalidNeuronCount { n: n + 1 });
    }
    let low = cw.bits() & mask(d - 1);
    let high = (cw.bits() >> (d - 1)) << d;
    Ok(Codeword::from_raw(n + 1, low | high | (bit as u64) << (d - 1)))
}

/// One of the elementary maps that neural ring homomorphisms decompose into.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementaryMap {
    Permute(Permutation),
    AddTrivialOn,
    AddTrivialOff,
    /// Appends a copy of neuron `source` at position `n + 1`.
    Duplicate { source: usize },
    /// Deletes neuron `delete`.
    Project { delete: usize },
    /// Identity into a larger code on the same neurons.
    Include { target: NeuralCode },
}

impl ElementaryMap {
    /// Width of the output when applied to width-`n` words.
    pub fn output_width(&self, n: usize) -> Result<usize> {
        let widen = || if n < MAX_NEURONS { Ok(n + 1) } else { Err(Error::InvalidNeuronCount { n: n + 1 }) };
        match self {
            ElementaryMap::Permute(g) if g.n() != n => Err(Error::WidthMismatch { expected: n, found: g.n() }),
            ElementaryMap::Permute(_) => Ok(n),
            ElementaryMap::AddTrivialOn | ElementaryMap::AddTrivialOff => widen(),
            ElementaryMap::Duplicate { source } if *source == 0 || *source > n => {
                Err(Error::NeuronOutOfRange { index: *source, n })
            }
            ElementaryMap::Duplicate { .. } => widen(),
            ElementaryMap::Project { delete } if *delete == 0 || *delete > n => {
                Err(Error::NeuronOutOfRange { index: *delete, n })
            }
            ElementaryMap::Project { .. } if n == 1 => Err(Error::EmptyProjection),
            ElementaryMap::Project { .. } => Ok(n - 1),
            ElementaryMap::Include { target } if target.n() != n => {
                Err(Error::WidthMismatch { expected: n, found: target.n() })
            }
            ElementaryMap::Include { .. } => Ok(n),
        }
    }

    /// Image of any width-`n` word.
    pub fn apply_word(&self, cw: &Codeword) -> Result<Codeword> {
        self.output_width(cw.n())?;
        let n = cw.n();
        match self {
            ElementaryMap::Permute(g) => Ok(g.apply_to_word(cw)),
            ElementaryMap::AddTrivialOn => insert_coordinate(cw, n + 1, true),
            ElementaryMap::AddTrivialOff => insert_coordinate(cw, n + 1, false),
            ElementaryMap::Duplicate { source } => insert_coordinate(cw, n + 1, cw.contains(*source)),
            ElementaryMap::Project { delete } => delete_coordinate(cw, *delete),
            ElementaryMap::Include { .. } => Ok(*cw),
        }
    }
}

impl fmt::Display for ElementaryMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementaryMap::Permute(g) => write!(f, "permute({g})"),
            ElementaryMap::AddTrivialOn => f.write_str("add_trivial_on"),
            ElementaryMap::AddTrivialOff => f.write_str("add_trivial_off"),
            ElementaryMap::Duplicate { source } => write!(f, "duplicate({source})"),
            ElementaryMap::Project { delete } => write!(f, "project({delete})"),
            ElementaryMap::Include { target } => write!(f, "include({})", target.sorted_binary().join(",")),
        }
    }
}

impl FromStr for ElementaryMap {
    type Err = Error;

    /// Inverse of `Display`: `permute(2,1)`, `add_trivial_on`, `add_trivial_off`,
    /// `duplicate(1)`, `project(3)` or `include(010,110)` with binary words.
    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let bad = |reason: &str| Error::MalformedText { column: 1, reason: format!("map step '{text}': {reason}") };
        let (name, arg) = match text.split_once('(') {
            Some((name, rest)) => {
                let arg = rest.strip_suffix(')').ok_or_else(|| bad("missing ')'"))?;
                (name.trim(), Some(arg.trim()))
            }
            None => (text, None),
        };
        let index = |arg: Option<&str>| -> Result<usize> {
            arg.and_then(|a| a.parse().ok()).ok_or_else(|| bad("expected a neuron index"))
        };
        match (name.to_ascii_lowercase().replace('-', "_").as_str(), arg) {
            ("permute", Some(a)) => Ok(ElementaryMap::Permute(a.parse()?)),
            ("add_trivial_on", None) => Ok(ElementaryMap::AddTrivialOn),
            ("add_trivial_off", None) => Ok(ElementaryMap::AddTrivialOff),
            ("duplicate", a) => Ok(ElementaryMap::Duplicate { source: index(a)? }),
            ("project", a) => Ok(ElementaryMap::Project { delete: index(a)? }),
            ("include", Some(a)) => {
                let words: Vec<&str> = a.split(',').map(str::trim).filter(|w| !w.is_empty()).collect();
                let n = words.first().map(|w| w.chars().count()).ok_or_else(|| bad("empty target code"))?;
                let target = NeuralCode::parse(n, crate::codeword::NotationForm::Binary, words)?;
                Ok(ElementaryMap::Include { target })
            }
            _ => Err(bad("unknown step")),
        }
    }
}

impl Serialize for ElementaryMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A domain code followed by elementary maps applied left to right.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeMap {
    domain: NeuralCode,
    steps: Vec<ElementaryMap>,
}

impl CodeMap {
    /// Checks that widths chain and every inclusion target contains the
    /// image reaching it.
    pub fn new(domain: NeuralCode, steps: Vec<ElementaryMap>) -> Result<Self> {
        let mut image = domain.clone();
        for step in &steps {
            let next = image_under(step, &image)?;
            if let ElementaryMap::Include { target } = step {
                if !image.is_subcode_of(target) {
                    return Err(Error::IncludeTargetTooSmall);
                }
            }
            image = next;
        }
        Ok(CodeMap { domain, steps })
    }

    pub fn single(domain: NeuralCode, step: ElementaryMap) -> Result<Self> {
        Self::new(domain, vec![step])
    }

    pub fn domain(&self) -> &NeuralCode {
        &self.domain
    }

    pub fn steps(&self) -> &[ElementaryMap] {
        &self.steps
    }

    /// Image of a codeword of the domain.
    pub fn apply(&self, cw: &Codeword) -> Result<Codeword> {
        if cw.n() != self.domain.n() {
            return Err(Error::WidthMismatch { expected: self.domain.n(), found: cw.n() });
        }
        if !self.domain.contains(cw) {
            return Err(Error::NotInDomain { word: cw.to_binary() });
        }
        self.apply_to_face(cw)
    }

    /// Image of any width-`n` word, used to extend the map to `Δ`.
    pub fn apply_to_face(&self, cw: &Codeword) -> Result<Codeword> {
        self.steps.iter().try_fold(*cw, |acc, step| step.apply_word(&acc))
    }

    pub fn image_code(&self) -> Result<NeuralCode> {
        self.steps.iter().try_fold(self.domain.clone(), |acc, step| image_under(step, &acc))
    }

    /// Width of the image code.
    pub fn output_width(&self) -> Result<usize> {
        self.steps.iter().try_fold(self.domain.n(), |n, step| step.output_width(n))
    }
}

impl fmt::Display for CodeMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(ElementaryMap::to_string).collect();
        f.write_str(&parts.join(" ; "))
    }
}

fn image_under(step: &ElementaryMap, code: &NeuralCode) -> Result<NeuralCode> {
    let n = step.output_width(code.n())?;
    NeuralCode::new(n, code.words().iter().map(|w| step.apply_word(w)).collect::<Result<Vec<_>>>()?)
}

/// `q(Δ)`: the face-wise image, which need not be a complex.
pub fn extend_to_complex(step: &ElementaryMap, k: &SimplicialComplex) -> Result<BTreeSet<Codeword>> {
    step.output_width(k.n())?;
    k.faces().map(|f| step.apply_word(&f)).collect()
}

/// Face-wise image of an arbitrary set of words.
pub fn image_of<'a, I: IntoIterator<Item = &'a Codeword>>(step: &ElementaryMap, words: I) -> Result<BTreeSet<Codeword>> {
    words.into_iter().map(|w| step.apply_word(w)).collect()
}
