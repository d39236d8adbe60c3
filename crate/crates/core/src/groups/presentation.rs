use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::word::{Letter, Word};
use super::GroupError;

/// A finite presentation `<x_1, ..., x_m | r_1, ..., r_q>`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    labels: Vec<String>,
    relators: Vec<Word>,
    meridians: Vec<bool>,
}

impl Presentation {
    /// All generators are flagged as meridians.
    pub fn new(labels: Vec<String>, relators: Vec<Word>) -> Result<Self, GroupError> {
        let n = labels.len();
        Self::with_meridians(labels, relators, vec![true; n])
    }

    pub fn with_meridians(
        labels: Vec<String>,
        relators: Vec<Word>,
        meridians: Vec<bool>,
    ) -> Result<Self, GroupError> {
        if labels.is_empty() {
            return Err(GroupError::EmptyGenerators);
        }
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if !is_identifier(l) {
                return Err(GroupError::Syntax { line: 0, msg: format!("invalid generator name `{l}`") });
            }
            if seen.insert(l.as_str(), i).is_some() {
                return Err(GroupError::DuplicateGenerator { line: 0, name: l.clone() });
            }
        }
        for r in &relators {
            if let Some(g) = r.max_gen() {
                if g >= labels.len() {
                    return Err(GroupError::GeneratorIndex { index: g, count: labels.len() });
                }
            }
        }
        assert_eq!(meridians.len(), labels.len(), "one meridian flag per generator");
        Ok(Presentation { labels, relators, meridians })
    }

    /// Generators named `x1, ..., xm`.
    pub fn numbered(m: usize, relators: Vec<Word>) -> Result<Self, GroupError> {
        Self::new((1..=m).map(|i| format!("x{i}")).collect(), relators)
    }

    pub fn num_generators(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn meridians(&self) -> &[bool] {
        &self.meridians
    }

    pub fn is_meridian(&self, g: usize) -> bool {
        self.meridians[g]
    }

    pub fn first_meridian(&self) -> Option<usize> {
        self.meridians.iter().position(|&b| b)
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }

    pub fn push_relator(&mut self, r: Word) {
        assert!(r.max_gen().is_none_or(|g| g < self.labels.len()));
        self.relators.push(r);
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

/// Parses the line-oriented presentation format:
///
/// ```text
/// # comment
/// gens: a b
/// rel: a b a^-1 b^-1
/// meridians: a b
/// ```
///
/// Without a `meridians:` line every generator counts as a meridian.
pub fn parse_presentation(text: &str) -> Result<Presentation, GroupError> {
    let mut labels: Option<Vec<String>> = None;
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut relators = Vec::new();
    let mut meridians: Option<Vec<bool>> = None;

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| GroupError::Syntax { line: line_no, msg: "expected `key: value`".into() })?;
        let tokens: Vec<&str> = rest.split_whitespace().collect();
        match key.trim() {
            "gens" => {
                if labels.is_some() {
                    return Err(GroupError::Syntax { line: line_no, msg: "second `gens:` line".into() });
                }
                if tokens.is_empty() {
                    return Err(GroupError::EmptyGenerators);
                }
                let mut ls = Vec::new();
                for t in tokens {
                    if !is_identifier(t) {
                        return Err(GroupError::Syntax {
                            line: line_no,
                            msg: format!("invalid generator name `{t}`"),
                        });
                    }
                    if index.insert(t.to_string(), ls.len()).is_some() {
                        return Err(GroupError::DuplicateGenerator { line: line_no, name: t.to_string() });
                    }
                    ls.push(t.to_string());
                }
                labels = Some(ls);
            }
            "rel" => {
                if labels.is_none() {
                    return Err(GroupError::Syntax { line: line_no, msg: "`rel:` before `gens:`".into() });
                }
                let mut letters = Vec::new();
                for t in tokens {
                    let (name, exp) = parse_token(t, line_no)?;
                    let g = *index
                        .get(name)
                        .ok_or_else(|| GroupError::UnknownGenerator { line: line_no, name: name.to_string() })?;
                    let l = Letter::new(g, exp < 0);
                    letters.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
                }
                relators.push(Word::from_letters(letters));
            }
            "meridians" => {
                let ls = labels
                    .as_ref()
                    .ok_or_else(|| GroupError::Syntax { line: line_no, msg: "`meridians:` before `gens:`".into() })?;
                if meridians.is_some() {
                    return Err(GroupError::Syntax { line: line_no, msg: "second `meridians:` line".into() });
                }
                let mut flags = vec![false; ls.len()];
                for t in tokens {
                    let g = *index
                        .get(t)
                        .ok_or_else(|| GroupError::UnknownGenerator { line: line_no, name: t.to_string() })?;
                    flags[g] = true;
                }
                meridians = Some(flags);
            }
            other => {
                return Err(GroupError::Syntax { line: line_no, msg: format!("unknown key `{other}`") });
            }
        }
    }
    let labels = labels.ok_or(GroupError::EmptyGenerators)?;
    let n = labels.len();
    Ok(Presentation { labels, relators, meridians: meridians.unwrap_or_else(|| vec![true; n]) })
}

fn parse_token(t: &str, line: usize) -> Result<(&str, i64), GroupError> {
    let Some((name, exp)) = t.split_once('^') else {
        return Ok((t, 1));
    };
    let malformed = || GroupError::MalformedExponent { line, token: t.to_string() };
    let digits = exp.strip_prefix(['+', '-']).unwrap_or(exp);
    if name.is_empty() || digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(malformed());
    }
    let e: i64 = exp.parse().map_err(|_| malformed())?;
    if e.unsigned_abs() > 1 << 20 {
        return Err(malformed());
    }
    Ok((name, e))
}

impl FromStr for Presentation {
    type Err = GroupError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_presentation(s)
    }
}

/// Serializes back to the text format; `parse_presentation` inverts it.
impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens: {}", self.labels.join(" "))?;
        for r in &self.relators {
            if r.is_identity() {
                writeln!(f, "rel:")?;
            } else {
                writeln!(f, "rel: {}", r.display_with(&self.labels))?;
            }
        }
        if self.meridians.iter().any(|&b| !b) {
            let names: Vec<&str> = self
                .labels
                .iter()
                .zip(&self.meridians)
                .filter(|(_, &b)| b)
                .map(|(l, _)| l.as_str())
                .collect();
            if names.is_empty() {
                writeln!(f, "meridians:")?;
            } else {
                writeln!(f, "meridians: {}", names.join(" "))?;
            }
        }
        Ok(())
    }
}
