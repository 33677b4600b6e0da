use crate::error::{Error, Result};
use serde::{Serialize, Serializer};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Gen {
    S,
    T,
}

impl Gen {
    pub fn other(self) -> Gen {
        match self {
            Gen::S => Gen::T,
            Gen::T => Gen::S,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Word in the two standard generators, stored as maximal syllables `s^i` / `t^j`
/// with nonzero exponents and alternating letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct SyllableWord {
    syllables: Vec<(Gen, i64)>,
}

impl SyllableWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_syllables(it: impl IntoIterator<Item = (Gen, i64)>) -> Self {
        let mut w = Self::new();
        for (g, e) in it {
            w.push(g, e);
        }
        w
    }

    /// Append `g^e`, merging with the last syllable and cancelling as needed.
    pub fn push(&mut self, g: Gen, e: i64) {
        if e == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some((h, f)) if *h == g => {
                *f += e;
                if *f == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((g, e)),
        }
    }

    /// Parse tokens `s`, `t`, `S`, `T` with optional `^n` exponents; whitespace is
    /// ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let chars: Vec<char> = text.chars().collect();
        let mut w = Self::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            i += 1;
            let (g, sign) = match c {
                's' => (Gen::S, 1),
                't' => (Gen::T, 1),
                'S' => (Gen::S, -1),
                'T' => (Gen::T, -1),
                c if c.is_whitespace() || c == '*' || c == '.' => continue,
                c => {
                    return Err(Error::InvalidInput(format!(
                        "unexpected character {c:?} in word"
                    )))
                }
            };
            let mut e = 1i64;
            if chars.get(i) == Some(&'^') {
                i += 1;
                let start = i;
                if matches!(chars.get(i), Some('-') | Some('+')) {
                    i += 1;
                }
                while chars.get(i).is_some_and(|c| c.is_ascii_digit()) {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                e = s
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad exponent {s:?} in word")))?;
            }
            w.push(g, sign * e);
        }
        Ok(w)
    }

    pub fn syllables(&self) -> &[(Gen, i64)] {
        &self.syllables
    }

    /// Syllable length.
    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn letter_length(&self) -> u64 {
        self.syllables.iter().map(|s| s.1.unsigned_abs()).sum()
    }

    pub fn inverse(&self) -> Self {
        SyllableWord {
            syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut w = self.clone();
        for &(g, e) in &other.syllables {
            w.push(g, e);
        }
        w
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut w = Self::new();
        for _ in 0..n.unsigned_abs() {
            w = w.concat(&base);
        }
        w
    }

    /// No cancellation or merging between the last and first syllables.
    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.syllables.first(), self.syllables.last()) {
            (Some(a), Some(b)) => self.syllables.len() == 1 || a.0 != b.0,
            _ => true,
        }
    }

    /// Alternating product `s t s t ...` with n letters.
    pub fn alternating(first: Gen, n: u32) -> Self {
        let mut g = first;
        let mut w = Self::new();
        for _ in 0..n {
            w.push(g, 1);
            g = g.other();
        }
        w
    }

    /// The braid relator `prod(s,t;q) prod(t,s;q)^-1`.
    pub fn braid_relator(q: u32) -> Self {
        Self::alternating(Gen::S, q).concat(&Self::alternating(Gen::T, q).inverse())
    }

    /// Generator-index form used by the extension engines: s is 0, t is 1.
    pub fn gen_word(&self) -> Vec<(usize, i64)> {
        self.syllables
            .iter()
            .map(|&(g, e)| (g.index(), e))
            .collect()
    }
}

impl fmt::Display for SyllableWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "e");
        }
        for (i, &(g, e)) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let c = match g {
                Gen::S => 's',
                Gen::T => 't',
            };
            match e {
                1 => write!(f, "{c}")?,
                -1 => write!(f, "{}", c.to_ascii_uppercase())?,
                _ => write!(f, "{c}^{e}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for SyllableWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_merge() {
        let w = SyllableWord::parse("s t s^-2 t^3").unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(w.letter_length(), 7);
        let w = SyllableWord::parse("s s S t T T").unwrap();
        assert_eq!(w.syllables(), &[(Gen::S, 1), (Gen::T, -1)]);
        assert_eq!(SyllableWord::parse("s S").unwrap(), SyllableWord::new());
        assert_eq!(SyllableWord::parse("stST").unwrap().to_string(), "s t S T");
        assert!(SyllableWord::parse("s x").is_err());
        assert!(SyllableWord::parse("s^").is_err());
    }

    #[test]
    fn inverse_concat_pow() {
        let w = SyllableWord::parse("s t^2 S").unwrap();
        assert!(w.concat(&w.inverse()).is_empty());
        assert_eq!(w.pow(2).to_string(), "s t^4 S");
        assert_eq!(w.pow(-1), w.inverse());
        assert!(!w.is_cyclically_reduced());
        assert!(SyllableWord::parse("s t").unwrap().is_cyclically_reduced());
    }

    #[test]
    fn braid_relator_shape() {
        assert_eq!(SyllableWord::braid_relator(3).to_string(), "s t s T S T");
        assert_eq!(SyllableWord::braid_relator(2).to_string(), "s t S T");
    }
}
