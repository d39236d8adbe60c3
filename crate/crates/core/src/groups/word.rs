use std::fmt;

/// A generator or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: usize, inv: bool) -> Self {
        Letter { gen, inv }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, inv: !self.inv }
    }

    pub fn sign(self) -> i64 {
        if self.inv {
            -1
        } else {
            1
        }
    }
}

/// An element of a free group, always stored freely reduced.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn gen(i: usize) -> Self {
        Word { letters: vec![Letter::new(i, false)] }
    }

    pub fn gen_inv(i: usize) -> Self {
        Word { letters: vec![Letter::new(i, true)] }
    }

    /// Builds a word from an arbitrary letter sequence, reducing it.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        free_reduce(letters)
    }

    /// Words given as signed, one-based generator numbers: `[1, 2, -1]` is
    /// `x1 x2 x1^-1`.
    pub fn from_signed(letters: &[i64]) -> Self {
        free_reduce(letters.iter().map(|&l| {
            assert!(l != 0, "generator numbers are one-based");
            Letter::new(l.unsigned_abs() as usize - 1, l < 0)
        }))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            if letters.last() == Some(&l.inverse()) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        Word { letters }
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.unsigned_abs()).fold(Word::identity(), |acc, _| acc.mul(&base))
    }

    /// `g^-1 w g`.
    pub fn conjugate_by(&self, g: &Word) -> Word {
        g.inverse().mul(self).mul(g)
    }

    /// `[a, b] = a b a^-1 b^-1`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.mul(b).mul(&a.inverse()).mul(&b.inverse())
    }

    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.letters.iter().filter(|l| l.gen == gen).map(|l| l.sign()).sum()
    }

    pub fn max_gen(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.gen).max()
    }

    /// Renders with the given labels, collapsing runs into powers.
    pub fn display_with<'a>(&'a self, labels: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, labels: Some(labels) }
    }
}

/// Freely reduces a letter sequence with a single stack pass.
pub fn free_reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    Word { letters: out }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    labels: Option<&'a [String]>,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return write!(f, "1");
        }
        let mut first = true;
        for run in self.word.letters.chunk_by(|a, b| a == b) {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let l = run[0];
            match self.labels {
                Some(names) => write!(f, "{}", names[l.gen])?,
                None => write!(f, "x{}", l.gen + 1)?,
            }
            let e = run.len() as i64 * l.sign();
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        WordDisplay { word: self, labels: None }.fmt(f)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction() {
        assert!(Word::from_signed(&[1, -1]).is_identity());
        assert_eq!(Word::from_signed(&[1, 2, -2, 1]), Word::from_signed(&[1, 1]));
        let w = Word::from_signed(&[1, 2, -1]);
        assert_eq!(free_reduce(w.letters().iter().copied()), w);
    }

    #[test]
    fn group_ops() {
        let a = Word::gen(0);
        let b = Word::gen(1);
        let c = Word::commutator(&a, &b);
        assert_eq!(c.to_string(), "x1 x2 x1^-1 x2^-1");
        assert!(c.mul(&c.inverse()).is_identity());
        assert_eq!(a.pow(3).to_string(), "x1^3");
        assert_eq!(a.pow(-2).to_string(), "x1^-2");
        assert_eq!(c.exponent_sum(0), 0);
        assert_eq!(b.conjugate_by(&a).to_string(), "x1^-1 x2 x1");
    }
}
