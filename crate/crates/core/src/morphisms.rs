//! Non-erasing morphisms between digit alphabets.
//!
//! Besides application and composition this module produces prefixes of
//! fixed points `m^ω(a)` and inverts morphisms on finite words. The three
//! morphisms the rest of the crate is built around are available as
//! [`Morphism::f`], [`Morphism::g`] and [`Morphism::h`], or by name through
//! [`Morphism::by_name`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::words::{to_digits, Letter, Word, MAX_ALPHABET};

#[derive(Clone, PartialEq, Eq)]
pub struct Morphism {
    name: Option<String>,
    source_alphabet_size: u8,
    target_alphabet_size: u8,
    images: Vec<Vec<Letter>>,
}

/// Names accepted by [`Morphism::by_name`].
pub const REGISTRY: [&str; 3] = ["f", "g", "h"];

impl Morphism {
    /// Builds a morphism from one image per source letter. All images must be
    /// non-empty and over the same alphabet.
    pub fn new(images: Vec<Word>) -> Result<Self> {
        let first = images
            .first()
            .ok_or_else(|| Error::InvalidMorphism("no images".into()))?;
        let target = first.alphabet_size();
        if images.len() > MAX_ALPHABET {
            return Err(Error::InvalidAlphabetSize(images.len()));
        }
        let mut raw = Vec::with_capacity(images.len());
        for (letter, image) in images.into_iter().enumerate() {
            if image.alphabet_size() != target {
                return Err(Error::AlphabetMismatch {
                    expected: target as u8,
                    found: image.alphabet_size() as u8,
                });
            }
            if image.is_empty() {
                return Err(Error::ErasingImage(letter as Letter));
            }
            raw.push(image.into_letters());
        }
        Ok(Morphism {
            name: None,
            source_alphabet_size: raw.len() as u8,
            target_alphabet_size: target as u8,
            images: raw,
        })
    }

    fn from_table(name: &str, target: u8, table: &[&str]) -> Self {
        let images = table
            .iter()
            .map(|s| s.bytes().map(|b| b - b'0').collect())
            .collect::<Vec<Vec<Letter>>>();
        Morphism {
            name: Some(name.to_string()),
            source_alphabet_size: images.len() as u8,
            target_alphabet_size: target,
            images,
        }
    }

    /// `f: Σ_3 → Σ_2`, `0 ↦ 0, 1 ↦ 01, 2 ↦ 011`.
    pub fn f() -> Self {
        Self::from_table("f", 2, &["0", "01", "011"])
    }

    /// `g: Σ_3 → Σ_3`, `0 ↦ 011, 1 ↦ 0121, 2 ↦ 012121`.
    pub fn g() -> Self {
        Self::from_table("g", 3, &["011", "0121", "012121"])
    }

    /// `h: Σ_3 → Σ_3`, `0 ↦ 01, 1 ↦ 02, 2 ↦ 022`.
    pub fn h() -> Self {
        Self::from_table("h", 3, &["01", "02", "022"])
    }

    pub fn identity(alphabet_size: usize) -> Result<Self> {
        let images = (0..alphabet_size)
            .map(|a| Word::new(alphabet_size, vec![a as Letter]))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(images)?.with_name("id"))
    }

    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "f" => Ok(Self::f()),
            "g" => Ok(Self::g()),
            "h" => Ok(Self::h()),
            other => Err(Error::UnknownMorphism(other.to_string())),
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn source_alphabet_size(&self) -> usize {
        self.source_alphabet_size as usize
    }

    pub fn target_alphabet_size(&self) -> usize {
        self.target_alphabet_size as usize
    }

    pub fn image(&self, letter: Letter) -> Result<Word> {
        self.images
            .get(letter as usize)
            .map(|img| Word::from_parts(self.target_alphabet_size, img.clone()))
            .ok_or(Error::InvalidLetter {
                letter,
                alphabet_size: self.source_alphabet_size,
            })
    }

    pub fn images(&self) -> impl Iterator<Item = &[Letter]> {
        self.images.iter().map(Vec::as_slice)
    }

    pub fn min_image_len(&self) -> usize {
        self.images.iter().map(Vec::len).min().unwrap_or(1)
    }

    pub fn apply(&self, word: &Word) -> Result<Word> {
        if word.alphabet_size() != self.source_alphabet_size() {
            return Err(Error::AlphabetMismatch {
                expected: self.source_alphabet_size,
                found: word.alphabet_size() as u8,
            });
        }
        Ok(Word::from_parts(
            self.target_alphabet_size,
            self.apply_letters(word.letters()),
        ))
    }

    /// Unchecked application on raw letters. Panics on a letter outside the
    /// source alphabet.
    pub fn apply_letters(&self, letters: &[Letter]) -> Vec<Letter> {
        let mut out = Vec::with_capacity(letters.len() * self.min_image_len());
        for &a in letters {
            out.extend_from_slice(&self.images[a as usize]);
        }
        out
    }

    /// The morphism `outer ∘ inner`.
    pub fn compose(outer: &Morphism, inner: &Morphism) -> Result<Morphism> {
        if inner.target_alphabet_size != outer.source_alphabet_size {
            return Err(Error::AlphabetMismatch {
                expected: outer.source_alphabet_size,
                found: inner.target_alphabet_size,
            });
        }
        let name = match (&outer.name, &inner.name) {
            (Some(o), Some(i)) => Some(format!("{o}∘{i}")),
            _ => None,
        };
        Ok(Morphism {
            name,
            source_alphabet_size: inner.source_alphabet_size,
            target_alphabet_size: outer.target_alphabet_size,
            images: inner
                .images
                .iter()
                .map(|img| outer.apply_letters(img))
                .collect(),
        })
    }

    /// True iff the image of `letter` is `letter · u` with `u` non-empty.
    pub fn is_prolongable(&self, letter: Letter) -> bool {
        match self.images.get(letter as usize) {
            Some(img) => img.len() >= 2 && img[0] == letter,
            None => false,
        }
    }

    /// Iterator-like buffer over the fixed point `self^ω(seed)`.
    pub fn fixed_point(&self, seed: Letter) -> Result<FixedPointStream> {
        FixedPointStream::new(self.clone(), seed)
    }

    /// Length-`n` prefix of `self^ω(seed)`.
    pub fn fixed_point_prefix(&self, seed: Letter, n: usize) -> Result<Word> {
        Ok(self.fixed_point(seed)?.prefix(n))
    }

    /// Exhaustively checks `u ≤ v ⇒ m(u) ≤ m(v)` over all source words of
    /// length at most `max_len`.
    ///
    /// Lexicographic order is total, so it is enough to sort the candidate
    /// words and check that consecutive images never decrease.
    pub fn is_order_preserving(&self, max_len: usize) -> bool {
        let mut words: Vec<Vec<Letter>> = vec![Vec::new()];
        let mut layer = words.clone();
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * self.images.len());
            for w in &layer {
                for a in 0..self.source_alphabet_size {
                    let mut x = w.clone();
                    x.push(a);
                    next.push(x);
                }
            }
            words.extend(next.iter().cloned());
            layer = next;
        }
        words.sort();
        let mut prev = self.apply_letters(&words[0]);
        for w in &words[1..] {
            let img = self.apply_letters(w);
            if img < prev {
                return false;
            }
            prev = img;
        }
        true
    }

    /// Inverts the morphism on a finite word.
    ///
    /// Finds `W` and a residue `t` with `word = m(W) · t`, where `t` is empty
    /// or a non-empty proper prefix of some image. The search is depth first,
    /// trying longer images before shorter ones, and remembers offsets from
    /// which no factorization exists.
    pub fn decode(&self, word: &Word) -> Result<DecodeResult> {
        if word.alphabet_size() != self.target_alphabet_size() {
            return Err(Error::AlphabetMismatch {
                expected: self.target_alphabet_size,
                found: word.alphabet_size() as u8,
            });
        }
        let text = word.letters();
        let n = text.len();

        let mut order: Vec<Letter> = (0..self.source_alphabet_size).collect();
        order.sort_by_key(|&a| std::cmp::Reverse(self.images[a as usize].len()));

        let is_partial_image = |pos: usize| {
            let rest = &text[pos..];
            self.images
                .iter()
                .any(|img| img.len() > rest.len() && img.starts_with(rest))
        };

        let mut dead = vec![false; n + 1];
        // (offset, index into `order` of the next choice to try)
        let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
        let mut preimage: Vec<Letter> = Vec::new();
        let mut furthest = 0;

        while let Some(&mut (pos, ref mut choice)) = stack.last_mut() {
            furthest = furthest.max(pos);
            if pos == n {
                return Ok(DecodeResult::Decoded {
                    preimage: Word::from_parts(self.source_alphabet_size, preimage),
                    residue: 0,
                });
            }
            let mut advanced = None;
            while *choice < order.len() {
                let a = order[*choice];
                *choice += 1;
                let img = &self.images[a as usize];
                let end = pos + img.len();
                if end <= n && !dead[end] && text[pos..end] == img[..] {
                    advanced = Some((a, end));
                    break;
                }
            }
            match advanced {
                Some((a, end)) => {
                    preimage.push(a);
                    stack.push((end, 0));
                }
                None if is_partial_image(pos) => {
                    return Ok(DecodeResult::Decoded {
                        preimage: Word::from_parts(self.source_alphabet_size, preimage),
                        residue: n - pos,
                    });
                }
                None => {
                    dead[pos] = true;
                    stack.pop();
                    preimage.pop();
                }
            }
        }
        Ok(DecodeResult::Failed { offset: furthest })
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism({}: ", self.name.as_deref().unwrap_or("_"))?;
        for (a, img) in self.images.iter().enumerate() {
            write!(f, "{a}->{} ", to_digits(img))?;
        }
        write!(f, ")")
    }
}

/// Text format: one `letter -> image` line per source letter.
impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, img) in self.images.iter().enumerate() {
            writeln!(f, "{a} -> {}", to_digits(img))?;
        }
        Ok(())
    }
}

/// Parses the `letter -> image` text format. Lines may come in any order but
/// must cover `0..n` exactly once. Blank lines and `#` comments are skipped.
/// The target alphabet is the smallest (at least binary) one containing all
/// image letters.
impl FromStr for Morphism {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut table: Vec<Option<Vec<Letter>>> = Vec::new();
        for line in s.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (lhs, rhs) = line
                .split_once("->")
                .ok_or_else(|| Error::InvalidMorphism(format!("missing '->' in {line:?}")))?;
            let letter: usize = lhs
                .trim()
                .parse()
                .map_err(|_| Error::InvalidMorphism(format!("bad letter {:?}", lhs.trim())))?;
            if letter >= MAX_ALPHABET {
                return Err(Error::InvalidAlphabetSize(letter + 1));
            }
            let image = Word::from_digits(rhs.trim())?.into_letters();
            if table.len() <= letter {
                table.resize(letter + 1, None);
            }
            if table[letter].replace(image).is_some() {
                return Err(Error::InvalidMorphism(format!(
                    "letter {letter} defined twice"
                )));
            }
        }
        let images: Vec<Vec<Letter>> = table
            .into_iter()
            .enumerate()
            .map(|(a, img)| {
                img.ok_or_else(|| Error::InvalidMorphism(format!("letter {a} has no image")))
            })
            .collect::<Result<_>>()?;
        let target = images
            .iter()
            .flatten()
            .map(|&l| l as usize + 1)
            .max()
            .unwrap_or(0)
            .max(2);
        Morphism::new(
            images
                .into_iter()
                .map(|img| Word::new(target, img))
                .collect::<Result<_>>()?,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecodeResult {
    /// `input = m(preimage) · t` with `|t| = residue`.
    Decoded { preimage: Word, residue: usize },
    /// No factorization; `offset` is the furthest position the search reached.
    Failed { offset: usize },
}

impl DecodeResult {
    pub fn preimage(&self) -> Option<&Word> {
        match self {
            DecodeResult::Decoded { preimage, .. } => Some(preimage),
            DecodeResult::Failed { .. } => None,
        }
    }

    /// The preimage when the whole input decoded with no trailing residue.
    pub fn exact(&self) -> Option<&Word> {
        match self {
            DecodeResult::Decoded {
                preimage,
                residue: 0,
            } => Some(preimage),
            _ => None,
        }
    }
}

/// Growing prefix of a fixed point `m^ω(seed)`.
#[derive(Debug, Clone)]
pub struct FixedPointStream {
    morphism: Morphism,
    seed: Letter,
    buffer: Vec<Letter>,
}

impl FixedPointStream {
    pub fn new(morphism: Morphism, seed: Letter) -> Result<Self> {
        if morphism.source_alphabet_size != morphism.target_alphabet_size {
            return Err(Error::AlphabetMismatch {
                expected: morphism.source_alphabet_size,
                found: morphism.target_alphabet_size,
            });
        }
        if !morphism.is_prolongable(seed) {
            return Err(Error::NotProlongable(seed));
        }
        Ok(FixedPointStream {
            buffer: vec![seed],
            morphism,
            seed,
        })
    }

    pub fn seed(&self) -> Letter {
        self.seed
    }

    fn grow_to(&mut self, n: usize) {
        while self.buffer.len() < n {
            self.buffer = self.morphism.apply_letters(&self.buffer);
        }
    }

    pub fn prefix_letters(&mut self, n: usize) -> &[Letter] {
        self.grow_to(n);
        &self.buffer[..n]
    }

    pub fn prefix(&mut self, n: usize) -> Word {
        let alphabet = self.morphism.source_alphabet_size;
        Word::from_parts(alphabet, self.prefix_letters(n).to_vec())
    }
}

/// Splits a binary word as `p · rest` with `p ∈ {ε, 1, 11}` and `rest` empty
/// or starting with `0`. Every 3-free binary word factors this way, and the
/// remainder is then a candidate for decoding by `f`.
pub fn strip_3free_header(word: &Word) -> Result<(Word, Word)> {
    if word.alphabet_size() != 2 {
        return Err(Error::AlphabetMismatch {
            expected: 2,
            found: word.alphabet_size() as u8,
        });
    }
    let ones = word.letters().iter().take_while(|&&l| l == 1).count();
    if ones >= 3 {
        return Err(Error::CubeDetected);
    }
    let (header, rest) = word.letters().split_at(ones);
    Ok((
        Word::from_parts(2, header.to_vec()),
        Word::from_parts(2, rest.to_vec()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(s: &str) -> Word {
        Word::parse(s, 3).unwrap()
    }

    fn b(s: &str) -> Word {
        Word::parse(s, 2).unwrap()
    }

    #[test]
    fn constant_tables() {
        let table = |m: Morphism| m.images().map(to_digits).collect::<Vec<_>>();
        assert_eq!(table(Morphism::f()), ["0", "01", "011"]);
        assert_eq!(table(Morphism::g()), ["011", "0121", "012121"]);
        assert_eq!(table(Morphism::h()), ["01", "02", "022"]);
        assert_eq!(Morphism::f().target_alphabet_size(), 2);
        assert_eq!(Morphism::g().target_alphabet_size(), 3);
        for name in REGISTRY {
            assert_eq!(Morphism::by_name(name).unwrap().name(), Some(name));
        }
        assert!(Morphism::by_name("k").is_err());
    }

    #[test]
    fn apply_examples() {
        assert_eq!(Morphism::f().apply(&t("2")).unwrap(), b("011"));
        assert_eq!(Morphism::g().apply(&t("01")).unwrap(), t("0110121"));
        assert_eq!(Morphism::h().apply(&t("")).unwrap(), t(""));
        assert!(Morphism::f().apply(&b("01")).is_err());
    }

    #[test]
    fn compose_examples() {
        let (f, g, h) = (Morphism::f(), Morphism::g(), Morphism::h());
        // f(g(0)) = f(011) = 0·01·01
        let fg = Morphism::compose(&f, &g).unwrap();
        assert_eq!(fg.apply(&t("0")).unwrap(), b("00101"));
        // f(h(0)) = f(01) = 0·01
        let fh = Morphism::compose(&f, &h).unwrap();
        assert_eq!(fh.apply(&t("0")).unwrap(), b("001"));
        let id = Morphism::identity(3).unwrap();
        let gid = Morphism::compose(&g, &id).unwrap();
        assert_eq!(
            gid.images().collect::<Vec<_>>(),
            g.images().collect::<Vec<_>>()
        );
        assert!(Morphism::compose(&g, &f).is_err());
    }

    #[test]
    fn prolongability() {
        assert!(Morphism::h().is_prolongable(0));
        assert!(!Morphism::f().is_prolongable(0));
        assert!(!Morphism::g().is_prolongable(1));
        assert!(Morphism::g().is_prolongable(0));
    }

    #[test]
    fn fixed_point_prefixes() {
        let h = Morphism::h();
        assert_eq!(h.fixed_point_prefix(0, 4).unwrap(), t("0102"));
        assert_eq!(h.fixed_point_prefix(0, 9).unwrap(), t("010201022"));
        assert_eq!(h.fixed_point_prefix(0, 0).unwrap(), t(""));
        assert_eq!(h.fixed_point_prefix(1, 3), Err(Error::NotProlongable(1)));
        assert!(Morphism::f().fixed_point_prefix(0, 3).is_err());
    }

    #[test]
    fn fixed_point_prefixes_are_nested() {
        let mut stream = Morphism::h().fixed_point(0).unwrap();
        let long = stream.prefix(10_000);
        for n in [0, 1, 7, 100, 1234, 9999] {
            assert!(stream.prefix(n).is_prefix_of(&long));
        }
        // h(prefix) extends the prefix: the buffer really is a fixed point.
        let p = stream.prefix(1000);
        assert!(p.is_prefix_of(&Morphism::h().apply(&p).unwrap()));
    }

    #[test]
    fn order_preservation() {
        for m in [Morphism::f(), Morphism::g(), Morphism::h()] {
            assert!(m.is_order_preserving(8), "{m:?}");
        }
        let swap: Morphism = "0 -> 1\n1 -> 0".parse().unwrap();
        assert!(!swap.is_order_preserving(2));
    }

    #[test]
    fn decode_examples() {
        assert_eq!(
            Morphism::g().decode(&t("0110121")).unwrap(),
            DecodeResult::Decoded {
                preimage: t("01"),
                residue: 0
            }
        );
        assert_eq!(
            Morphism::h().decode(&t("01")).unwrap(),
            DecodeResult::Decoded {
                preimage: t("0"),
                residue: 0
            }
        );
        assert!(matches!(
            Morphism::f().decode(&t("0112")),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn decode_residues_and_failures() {
        let g = Morphism::g();
        // trailing 01212 is a proper prefix of g(2)
        assert_eq!(
            g.decode(&t("01101212")).unwrap(),
            DecodeResult::Decoded {
                preimage: t("0"),
                residue: 5
            }
        );
        assert_eq!(g.decode(&t("0110")).unwrap().preimage(), Some(&t("0")));
        assert_eq!(
            g.decode(&t("0111")).unwrap(),
            DecodeResult::Failed { offset: 3 }
        );
        assert_eq!(
            g.decode(&t("2")).unwrap(),
            DecodeResult::Failed { offset: 0 }
        );
    }

    #[test]
    fn decode_backtracks_past_a_greedy_dead_end() {
        let tricky: Morphism = "0 -> 01\n1 -> 011\n2 -> 1101".parse().unwrap();
        // Longest-first takes 011 and gets stuck on 101; the only
        // factorization is 01 · 1101.
        let w = b("011101");
        assert_eq!(tricky.decode(&w).unwrap().exact(), Some(&t("02")));
    }

    #[test]
    fn header_stripping() {
        let (p, rest) = strip_3free_header(&b("1001")).unwrap();
        assert_eq!((p, rest), (b("1"), b("001")));
        let (p, rest) = strip_3free_header(&b("001001010")).unwrap();
        assert_eq!((p, rest), (b(""), b("001001010")));
        assert_eq!(strip_3free_header(&b("11")).unwrap(), (b("11"), b("")));
        assert_eq!(strip_3free_header(&b("1110")), Err(Error::CubeDetected));
        assert!(strip_3free_header(&t("0")).is_err());
    }

    #[test]
    fn text_format_round_trip() {
        let g = Morphism::g();
        let parsed: Morphism = g.to_string().parse().unwrap();
        assert_eq!(
            parsed.images().collect::<Vec<_>>(),
            g.images().collect::<Vec<_>>()
        );
        assert!("0 -> \n".parse::<Morphism>().is_err());
        assert!("1 -> 0".parse::<Morphism>().is_err());
        assert!("0 -> 0\n0 -> 1".parse::<Morphism>().is_err());
        assert!("0 = 1".parse::<Morphism>().is_err());
    }

    fn ternary(max: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(0u8..3, 0..=max).prop_map(|l| Word::new(3, l).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn decode_inverts_apply(w in ternary(50)) {
            for m in [Morphism::f(), Morphism::g(), Morphism::h()] {
                let image = m.apply(&w).unwrap();
                let decoded = m.decode(&image).unwrap();
                prop_assert_eq!(decoded.exact(), Some(&w));
            }
        }

        #[test]
        fn compose_agrees_with_nested_application(w in ternary(30)) {
            let (f, g, h) = (Morphism::f(), Morphism::g(), Morphism::h());
            for (outer, inner) in [(&f, &g), (&f, &h), (&g, &h), (&h, &g)] {
                let c = Morphism::compose(outer, inner).unwrap();
                prop_assert_eq!(
                    c.apply(&w).unwrap(),
                    outer.apply(&inner.apply(&w).unwrap()).unwrap()
                );
            }
        }
    }
}
