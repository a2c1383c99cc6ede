//! Object label sets.

use crate::error::{Error, Result};

/// The fixed, ordered set of objects a ranking speaks about.
///
/// Labels are trimmed, must be non-empty, and must be pairwise distinct.
/// Their order defines the row order of every matrix built over them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectLabels {
    labels: Vec<String>,
}

impl ObjectLabels {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(|s| s.into().trim().to_string()).collect();
        if labels.is_empty() {
            return Err(Error::EmptyInput);
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::EmptyLabel { index: i });
            }
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(ObjectLabels { labels })
    }

    /// `A`, `B`, ..., `Z`, `AA`, `AB`, ... for quick construction in tests and examples.
    pub fn alphabetic(n: usize) -> Self {
        fn name(mut i: usize) -> String {
            let mut out = Vec::new();
            loop {
                out.push(b'A' + (i % 26) as u8);
                i /= 26;
                if i == 0 {
                    break;
                }
                i -= 1;
            }
            out.reverse();
            String::from_utf8(out).unwrap()
        }
        ObjectLabels { labels: (0..n.max(1)).map(name).collect() }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(String::as_str)
    }

    pub fn as_slice(&self) -> &[String] {
        &self.labels
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_blanks() {
        assert_eq!(
            ObjectLabels::new(["A", "B", "A"]).unwrap_err(),
            Error::DuplicateLabel("A".into())
        );
        assert_eq!(ObjectLabels::new(["A", "  "]).unwrap_err(), Error::EmptyLabel { index: 1 });
        assert_eq!(ObjectLabels::new(Vec::<String>::new()).unwrap_err(), Error::EmptyInput);
    }

    #[test]
    fn trims_and_indexes() {
        let l = ObjectLabels::new([" A ", "B"]).unwrap();
        assert_eq!(l.get(0), "A");
        assert_eq!(l.index_of("B"), Some(1));
        assert_eq!(l.index_of("C"), None);
    }

    #[test]
    fn alphabetic_wraps_past_z() {
        let l = ObjectLabels::alphabetic(28);
        assert_eq!(l.get(0), "A");
        assert_eq!(l.get(25), "Z");
        assert_eq!(l.get(26), "AA");
        assert_eq!(l.get(27), "AB");
    }
}
