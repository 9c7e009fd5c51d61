//! Codewords and neural codes.
//!
//! A [`Codeword`] is a subset of the neurons `1..=n`, stored as the low `n`
//! bits of a `u64` (bit `i - 1` set when neuron `i` fires). Three textual
//! notations are supported: set form `{1,3}`, word form `13` and binary form
//! `1010`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_NEURONS: usize = 64;

pub const EMPTY_SYMBOL: &str = "∅";

#[inline]
pub(crate) fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_width(n: usize) -> Result<()> {
    if n == 0 || n > MAX_NEURONS {
        return Err(Error::InvalidNeuronCount { n });
    }
    Ok(())
}

/// A subset of `[n]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword {
    // field order matters: Ord compares width first, then bit value
    n: u8,
    bits: u64,
}

impl Codeword {
    pub fn empty(n: usize) -> Result<Self> {
        check_width(n)?;
        Ok(Codeword { n: n as u8, bits: 0 })
    }

    pub fn full(n: usize) -> Result<Self> {
        check_width(n)?;
        Ok(Codeword { n: n as u8, bits: mask(n) })
    }

    /// Builds a codeword from raw bits; bits above `n` are an error.
    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        check_width(n)?;
        if bits & !mask(n) != 0 {
            let index = 64 - bits.leading_zeros() as usize;
            return Err(Error::NeuronOutOfRange { index, n });
        }
        Ok(Codeword { n: n as u8, bits })
    }

    /// Builds a codeword from 1-based neuron indices.
    pub fn from_neurons<I: IntoIterator<Item = usize>>(n: usize, neurons: I) -> Result<Self> {
        check_width(n)?;
        let mut bits = 0u64;
        for i in neurons {
            if i == 0 || i > n {
                return Err(Error::NeuronOutOfRange { index: i, n });
            }
            bits |= 1 << (i - 1);
        }
        Ok(Codeword { n: n as u8, bits })
    }

    #[inline]
    pub(crate) fn from_raw(n: usize, bits: u64) -> Self {
        debug_assert!((1..=MAX_NEURONS).contains(&n) && bits & !mask(n) == 0);
        Codeword { n: n as u8, bits }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// Number of neurons that fire.
    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// `|σ| - 1`; the empty face has dimension -1.
    #[inline]
    pub fn dim(&self) -> i32 {
        self.len() as i32 - 1
    }

    #[inline]
    pub fn contains(&self, neuron: usize) -> bool {
        neuron >= 1 && neuron <= self.n() && self.bits & (1 << (neuron - 1)) != 0
    }

    /// Firing neurons in increasing order, 1-based.
    pub fn neurons(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..self.n()).filter(move |i| bits & (1 << i) != 0).map(|i| i + 1)
    }

    pub fn is_subset(&self, other: &Codeword) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(&self, other: &Codeword) -> bool {
        self.bits & other.bits == 0
    }

    /// Same subset viewed on `m >= n` neurons.
    pub fn widen(&self, m: usize) -> Result<Self> {
        if m < self.n() {
            return Err(Error::WidthMismatch { expected: self.n(), found: m });
        }
        Codeword::from_bits(m, self.bits)
    }

    pub fn with(&self, neuron: usize) -> Result<Self> {
        if neuron == 0 || neuron > self.n() {
            return Err(Error::NeuronOutOfRange { index: neuron, n: self.n() });
        }
        Ok(Codeword { n: self.n, bits: self.bits | 1 << (neuron - 1) })
    }

    pub fn without(&self, neuron: usize) -> Result<Self> {
        if neuron == 0 || neuron > self.n() {
            return Err(Error::NeuronOutOfRange { index: neuron, n: self.n() });
        }
        Ok(Codeword { n: self.n, bits: self.bits & !(1 << (neuron - 1)) })
    }

    fn same_width(&self, other: &Codeword) -> Result<()> {
        if self.n != other.n {
            return Err(Error::WidthMismatch { expected: self.n(), found: other.n() });
        }
        Ok(())
    }

    /// Intersection.
    pub fn meet(&self, other: &Codeword) -> Result<Self> {
        self.same_width(other)?;
        Ok(Codeword { n: self.n, bits: self.bits & other.bits })
    }

    /// Union.
    pub fn join(&self, other: &Codeword) -> Result<Self> {
        self.same_width(other)?;
        Ok(Codeword { n: self.n, bits: self.bits | other.bits })
    }

    /// Binary form, e.g. `1010` for `{1,3}` on four neurons.
    pub fn to_binary(&self) -> String {
        (0..self.n())
            .map(|i| if self.bits & (1 << i) != 0 { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Codeword({})", self.to_binary())
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let form = if self.n() <= 9 { NotationForm::Word } else { NotationForm::Set };
        f.write_str(&format_codeword(self, form).expect("form chosen to fit"))
    }
}

impl Serialize for Codeword {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_binary())
    }
}

impl<'de> Deserialize<'de> for Codeword {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        let n = text.chars().count();
        parse_codeword(&text, NotationForm::Binary, n).map_err(serde::de::Error::custom)
    }
}

/// The three ways of writing a codeword.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NotationForm {
    Set,
    Word,
    Binary,
}

impl NotationForm {
    pub const ALL: [NotationForm; 3] = [NotationForm::Set, NotationForm::Word, NotationForm::Binary];
}

impl std::str::FromStr for NotationForm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "set" => Ok(NotationForm::Set),
            "word" => Ok(NotationForm::Word),
            "binary" | "bin" => Ok(NotationForm::Binary),
            other => Err(format!("unknown notation form '{other}' (expected set, word or binary)")),
        }
    }
}

fn malformed(column: usize, reason: impl Into<String>) -> Error {
    Error::MalformedText { column, reason: reason.into() }
}

/// Parses one codeword. Columns in errors are 1-based character positions in `text`.
pub fn parse_codeword(text: &str, form: NotationForm, n: usize) -> Result<Codeword> {
    check_width(n)?;
    let lead = text.chars().take_while(|c| c.is_whitespace()).count();
    let body = text.trim();
    if body.is_empty() {
        return Err(malformed(lead + 1, "empty text"));
    }
    if body == EMPTY_SYMBOL {
        return Codeword::empty(n);
    }
    match form {
        NotationForm::Set => parse_set(body, lead, n),
        NotationForm::Word => parse_word(body, lead, n),
        NotationForm::Binary => parse_binary(body, lead, n),
    }
}

fn set_bit(bits: &mut u64, index: usize, n: usize, column: usize) -> Result<()> {
    if index == 0 || index > n {
        return Err(Error::NeuronOutOfRange { index, n });
    }
    let b = 1u64 << (index - 1);
    if *bits & b != 0 {
        return Err(malformed(column, format!("neuron {index} repeated")));
    }
    *bits |= b;
    Ok(())
}

fn parse_set(body: &str, lead: usize, n: usize) -> Result<Codeword> {
    let chars: Vec<char> = body.chars().collect();
    if chars[0] != '{' {
        return Err(malformed(lead + 1, "set form must start with '{'"));
    }
    if *chars.last().unwrap() != '}' || chars.len() < 2 {
        return Err(malformed(lead + chars.len(), "set form must end with '}'"));
    }
    let inner = &chars[1..chars.len() - 1];
    let mut bits = 0u64;
    if inner.iter().all(|c| c.is_whitespace()) {
        return Codeword::from_bits(n, 0);
    }
    // column of inner[0] is lead + 2
    let mut start = 0;
    for end in (0..=inner.len()).filter(|&i| i == inner.len() || inner[i] == ',') {
        let item: String = inner[start..end].iter().collect();
        let skip = item.chars().take_while(|c| c.is_whitespace()).count();
        let column = lead + 2 + start + skip;
        let token = item.trim();
        if token.is_empty() {
            return Err(malformed(column, "missing neuron index"));
        }
        let index: usize = token
            .parse()
            .map_err(|_| malformed(column, format!("'{token}' is not a neuron index")))?;
        set_bit(&mut bits, index, n, column)?;
        start = end + 1;
    }
    Codeword::from_bits(n, bits)
}

fn parse_word(body: &str, lead: usize, n: usize) -> Result<Codeword> {
    if n > 9 {
        return Err(Error::UnrepresentableForm { n });
    }
    let mut bits = 0u64;
    for (k, c) in body.chars().enumerate() {
        let column = lead + 1 + k;
        let index = match c {
            '1'..='9' => c as usize - '0' as usize,
            _ => return Err(malformed(column, format!("'{c}' is not a neuron digit 1-9"))),
        };
        set_bit(&mut bits, index, n, column)?;
    }
    Codeword::from_bits(n, bits)
}

fn parse_binary(body: &str, lead: usize, n: usize) -> Result<Codeword> {
    let len = body.chars().count();
    let mut bits = 0u64;
    for (k, c) in body.chars().enumerate() {
        match c {
            '0' => {}
            '1' if k < n => bits |= 1 << k,
            '1' => {}
            _ => return Err(malformed(lead + 1 + k, format!("'{c}' is not a binary digit"))),
        }
    }
    if len != n {
        return Err(Error::WidthMismatch { expected: n, found: len });
    }
    Codeword::from_bits(n, bits)
}

/// Renders a codeword; inverse of [`parse_codeword`] for the same form.
pub fn format_codeword(cw: &Codeword, form: NotationForm) -> Result<String> {
    Ok(match form {
        NotationForm::Binary => cw.to_binary(),
        NotationForm::Word => {
            if cw.n() > 9 {
                return Err(Error::UnrepresentableForm { n: cw.n() });
            }
            if cw.is_empty() {
                EMPTY_SYMBOL.to_string()
            } else {
                cw.neurons().map(|i| char::from(b'0' + i as u8)).collect()
            }
        }
        NotationForm::Set => {
            let items: Vec<String> = cw.neurons().map(|i| i.to_string()).collect();
            format!("{{{}}}", items.join(","))
        }
    })
}

/// Result of [`word_ops`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordOps {
    pub subset: bool,
    pub meet: Codeword,
    pub join: Codeword,
}

pub fn word_ops(a: &Codeword, b: &Codeword) -> Result<WordOps> {
    Ok(WordOps { subset: a.is_subset(b) && a.n == b.n, meet: a.meet(b)?, join: a.join(b)? })
}

/// Maximal elements of a collection of same-width codewords.
pub fn maximal_elements<'a, I: IntoIterator<Item = &'a Codeword>>(words: I) -> Vec<Codeword> {
    let mut sorted: Vec<Codeword> = words.into_iter().copied().collect();
    sorted.sort_by(|a, b| b.len().cmp(&a.len()).then(a.bits.cmp(&b.bits)));
    sorted.dedup();
    let mut kept: Vec<Codeword> = Vec::new();
    for w in sorted {
        if !kept.iter().any(|k| w.is_subset(k)) {
            kept.push(w);
        }
    }
    kept.sort();
    kept
}

/// A neural code: a finite set of codewords on `n` neurons.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NeuralCode {
    n: usize,
    words: BTreeSet<Codeword>,
}

impl NeuralCode {
    pub fn new<I: IntoIterator<Item = Codeword>>(n: usize, words: I) -> Result<Self> {
        check_width(n)?;
        let mut set = BTreeSet::new();
        for w in words {
            if w.n() != n {
                return Err(Error::WidthMismatch { expected: n, found: w.n() });
            }
            set.insert(w);
        }
        Ok(NeuralCode { n, words: set })
    }

    /// Parses each item with `form`.
    pub fn parse<'a, I: IntoIterator<Item = &'a str>>(n: usize, form: NotationForm, items: I) -> Result<Self> {
        let words = items
            .into_iter()
            .map(|t| parse_codeword(t, form, n))
            .collect::<Result<Vec<_>>>()?;
        NeuralCode::new(n, words)
    }

    pub fn empty(n: usize) -> Result<Self> {
        NeuralCode::new(n, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &BTreeSet<Codeword> {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Codeword) -> bool {
        self.words.contains(w)
    }

    pub fn is_subcode_of(&self, other: &NeuralCode) -> bool {
        self.n == other.n && self.words.is_subset(&other.words)
    }

    /// Binary strings sorted lexicographically.
    pub fn sorted_binary(&self) -> Vec<String> {
        sorted_binary(self.words.iter())
    }
}

pub(crate) fn sorted_binary<'a, I: IntoIterator<Item = &'a Codeword>>(words: I) -> Vec<String> {
    let mut out: Vec<String> = words.into_iter().map(Codeword::to_binary).collect();
    out.sort();
    out
}

/// Maximal codewords of the code, an antichain under inclusion.
pub fn facets(code: &NeuralCode) -> Vec<Codeword> {
    maximal_elements(code.words.iter())
}

impl fmt::Debug for NeuralCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NeuralCode(n={}, {{", self.n)?;
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("})")
    }
}

#[derive(Serialize, Deserialize)]
struct CodeRepr {
    n: usize,
    words: Vec<String>,
}

impl Serialize for NeuralCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CodeRepr { n: self.n, words: self.sorted_binary() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for NeuralCode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = CodeRepr::deserialize(d)?;
        NeuralCode::parse(repr.n, NotationForm::Binary, repr.words.iter().map(String::as_str))
            .map_err(serde::de::Error::custom)
    }
}
