//! Braid words, their permutations, components and simple rewrites.
//!
//! Letter `k` stands for the generator at strand positions `|k|, |k|+1`,
//! positive when `k > 0`. Strand positions are 1-based.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("malformed token {0:?}")]
    Malformed(String),
    #[error("zero is not a braid letter")]
    ZeroLetter,
    #[error("letter {letter} needs at least {needed} strands, got {strands}")]
    TooFewStrands { letter: i32, needed: usize, strands: usize },
    #[error("strand count must be at least 1")]
    NoStrands,
    #[error("letter index {index} out of range for a word of length {len}")]
    BadIndex { index: usize, len: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for &k in &letters {
            if k == 0 {
                return Err(BraidError::ZeroLetter);
            }
            let needed = k.unsigned_abs() as usize + 1;
            if needed > strands {
                return Err(BraidError::TooFewStrands { letter: k, needed, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Strand count inferred as `max|k| + 1` (1 for the empty word).
    pub fn from_letters(letters: Vec<i32>) -> Result<Self, BraidError> {
        let strands = letters.iter().map(|k| k.unsigned_abs() as usize + 1).max().unwrap_or(1);
        Self::new(strands, letters)
    }

    /// Parses whitespace-separated signed integers with an optional
    /// `strands=S` token.
    pub fn parse(text: &str) -> Result<Self, BraidError> {
        Self::parse_with_strands(text, None)
    }

    /// Like [`BraidWord::parse`]; `strands` overrides any inline prefix.
    pub fn parse_with_strands(text: &str, strands: Option<usize>) -> Result<Self, BraidError> {
        let mut inline = None;
        let mut letters = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            if let Some(s) = tok.strip_prefix("strands=") {
                inline = Some(s.parse::<usize>().map_err(|_| BraidError::Malformed(tok.to_string()))?);
                continue;
            }
            let k: i32 = tok.parse().map_err(|_| BraidError::Malformed(tok.to_string()))?;
            if k == 0 {
                return Err(BraidError::ZeroLetter);
            }
            letters.push(k);
        }
        match strands.or(inline) {
            Some(s) => Self::new(s, letters),
            None => Self::from_letters(letters),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn crossing_count(&self) -> usize {
        self.letters.len()
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|k| k.signum() as i64).sum()
    }

    /// Position-to-position map: `perm[p-1]` is where the strand entering at
    /// bottom position `p` exits at the top (1-based values).
    pub fn permutation(&self) -> Vec<usize> {
        // at[q] = bottom position of the strand currently at q
        let mut at: Vec<usize> = (1..=self.strands).collect();
        for &k in &self.letters {
            let i = k.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (q, &p) in at.iter().enumerate() {
            perm[p - 1] = q + 1;
        }
        perm
    }

    /// Cycles of the permutation, each listed from its smallest position and
    /// ordered by that position.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = Vec::new();
        for start in 1..=self.strands {
            if seen[start - 1] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut p = start;
            while !seen[p - 1] {
                seen[p - 1] = true;
                cyc.push(p);
                p = perm[p - 1];
            }
            cycles.push(cyc);
        }
        cycles
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Every letter's sign flipped.
    pub fn reflect(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|k| -k).collect() }
    }

    /// `(b_plus, b_minus, b_zero)` at letter `pos`.
    pub fn skein_triple(&self, pos: usize) -> Result<(Self, Self, Self), BraidError> {
        let k = *self.letters.get(pos).ok_or(BraidError::BadIndex { index: pos, len: self.letters.len() })?;
        let with = |x: Option<i32>| {
            let mut l = self.letters.clone();
            match x {
                Some(v) => l[pos] = v,
                None => {
                    l.remove(pos);
                }
            }
            BraidWord { strands: self.strands, letters: l }
        };
        Ok((with(Some(k.abs())), with(Some(-k.abs())), with(None)))
    }

    /// Appends `sigma_s^{sign}` on one extra strand (a Markov stabilization).
    pub fn stabilize(&self, sign: i32) -> Self {
        let s = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if sign >= 0 { s } else { -s });
        BraidWord { strands: self.strands + 1, letters }
    }

    /// Blackboard-framed 2-parallel: every strand doubled, every letter
    /// replaced by the four crossings of one pair passing the other.
    pub fn two_cable(&self) -> Self {
        let letters = self
            .letters
            .iter()
            .flat_map(|&k| {
                let (i, s) = (k.abs(), k.signum());
                [2 * i * s, (2 * i - 1) * s, (2 * i + 1) * s, 2 * i * s]
            })
            .collect();
        BraidWord { strands: 2 * self.strands, letters }
    }

    /// Positions never touched by a letter.
    pub fn free_strands(&self) -> Vec<usize> {
        let mut touched = vec![false; self.strands];
        for &k in &self.letters {
            let i = k.unsigned_abs() as usize;
            touched[i - 1] = true;
            touched[i] = true;
        }
        (1..=self.strands).filter(|p| !touched[p - 1]).collect()
    }

    /// The word with free strands deleted and remaining positions closed up.
    /// Returns the compressed word and the number of strands removed.
    pub fn without_free_strands(&self) -> (Self, usize) {
        let free = self.free_strands();
        if free.is_empty() || free.len() == self.strands {
            return (self.clone(), 0);
        }
        let letters = self
            .letters
            .iter()
            .map(|&k| {
                let i = k.unsigned_abs() as usize;
                let below = free.iter().filter(|&&p| p < i).count() as i32;
                k.signum() * (i as i32 - below)
            })
            .collect();
        (BraidWord { strands: self.strands - free.len(), letters }, free.len())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.letters.iter().map(|k| k.to_string()).collect();
        write!(f, "{}", body.join(" "))
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

/// `(sigma_1^{-1} sigma_2)^m` on three strands.
pub fn weaving(m: usize) -> BraidWord {
    let letters = std::iter::repeat_n([-1, 2], m).flatten().collect();
    BraidWord { strands: 3, letters }
}

/// Named braids shipped with the engine.
pub fn preset(name: &str) -> Option<BraidWord> {
    let b = |s: usize, l: &[i32]| BraidWord::new(s, l.to_vec()).ok();
    match name {
        "unknot" => b(1, &[]),
        "unknot-pos" => b(2, &[1]),
        "unknot-neg" => b(2, &[-1]),
        "unlink2" => b(2, &[]),
        "hopf" => b(2, &[-1, -1]),
        "hopf-pos" => b(2, &[1, 1]),
        "trefoil" | "trefoil-right" => b(2, &[1, 1, 1]),
        "trefoil-left" => b(2, &[-1, -1, -1]),
        "figure-eight" => b(3, &[-1, 2, -1, 2]),
        "link-5" => b(3, &[1, -2, -2, -1, 2]),
        "mixed-8" => b(3, &[-1, -1, -1, 2, 1, 2, 2, -1]),
        "torus-2-6" => b(2, &[-1, -1, -1, -1, -1, -1]),
        "w3-2" => Some(weaving(2)),
        "w3-3" | "borromean" => Some(weaving(3)),
        "w3-4" => Some(weaving(4)),
        "w3-5" => Some(weaving(5)),
        _ => None,
    }
}

pub const PRESET_NAMES: &[&str] = &[
    "unknot",
    "unknot-pos",
    "unknot-neg",
    "unlink2",
    "hopf",
    "hopf-pos",
    "trefoil-right",
    "trefoil-left",
    "figure-eight",
    "link-5",
    "mixed-8",
    "torus-2-6",
    "w3-2",
    "w3-3",
    "w3-4",
    "w3-5",
];

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        BraidWord::parse(s).unwrap()
    }

    #[test]
    fn parse_and_infer() {
        let b = w("-1 2 -1 2");
        assert_eq!(b.strands(), 3);
        assert_eq!(b.letters(), &[-1, 2, -1, 2]);
        let e = w("strands=1");
        assert_eq!((e.strands(), e.crossing_count()), (1, 0));
        assert_eq!(w("-3 2").strands(), 4);
        assert_eq!(BraidWord::parse("0 1"), Err(BraidError::ZeroLetter));
        assert!(matches!(BraidWord::parse("1 x"), Err(BraidError::Malformed(_))));
        assert!(matches!(BraidWord::parse("strands=2 2"), Err(BraidError::TooFewStrands { .. })));
        assert_eq!(BraidWord::parse_with_strands("1", Some(4)).unwrap().strands(), 4);
    }

    #[test]
    fn permutations_and_components() {
        assert_eq!(w("-1 2").component_count(), 1);
        assert_eq!(weaving(3).permutation(), vec![1, 2, 3]);
        assert_eq!(weaving(3).component_count(), 3);
        assert_eq!(BraidWord::new(2, vec![]).unwrap().component_count(), 2);
        assert_eq!(w("1 1").components(), vec![vec![1], vec![2]]);
        assert_eq!(w("1").components(), vec![vec![1, 2]]);
    }

    #[test]
    fn skein_triples() {
        let (p, m, z) = w("1 1 1").skein_triple(0).unwrap();
        assert_eq!((p.to_string(), m.to_string(), z.to_string()), ("1 1 1".into(), "-1 1 1".into(), "1 1".into()));
        let (p, m, z) = w("-1").skein_triple(0).unwrap();
        assert_eq!((p.to_string(), m.to_string(), z.to_string()), ("1".into(), "-1".into(), "".into()));
        assert_eq!(z.strands(), 2);
        let (p, m, z) = w("-1 2").skein_triple(1).unwrap();
        assert_eq!((p.to_string(), m.to_string(), z.to_string()), ("-1 2".into(), "-1 -2".into(), "-1".into()));
        assert!(w("1").skein_triple(1).is_err());
    }

    #[test]
    fn reflect_and_writhe() {
        assert_eq!(w("1 1 1").reflect(), w("-1 -1 -1"));
        assert_eq!(w("-1 2 -1 2").reflect(), w("1 -2 1 -2"));
        let b = w("1 -2 3 3");
        assert_eq!(b.reflect().reflect(), b);
        assert_eq!(b.reflect().writhe(), -b.writhe());
        assert_eq!(b.reflect().permutation(), b.permutation());
    }

    #[test]
    fn free_strands_compress() {
        let b = BraidWord::new(5, vec![3, -3]).unwrap();
        assert_eq!(b.free_strands(), vec![1, 2, 5]);
        let (c, k) = b.without_free_strands();
        assert_eq!((c.strands(), c.letters(), k), (2, &[1, -1][..], 3));
        let e = BraidWord::new(3, vec![]).unwrap();
        assert_eq!(e.without_free_strands(), (e.clone(), 0));
    }

    #[test]
    fn presets_resolve() {
        for name in PRESET_NAMES {
            assert!(preset(name).is_some(), "{name}");
        }
        assert_eq!(preset("w3-4").unwrap().to_string(), "-1 2 -1 2 -1 2 -1 2");
    }
}
