//! Named diagrams, one per line: `name: PD... [; tail: c0, c1, ...]`.

use std::path::Path;

use crate::diagram::{parse_pd, PlanarDiagram};
use crate::error::{Error, Result};

const BUILTIN: &str = include_str!("../../data/corpus.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub pd_text: String,
    pub diagram: PlanarDiagram,
    /// known leading tail coefficients, if recorded
    pub expected_tail: Option<Vec<i64>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Corpus {
    entries: Vec<CorpusEntry>,
}

impl Corpus {
    /// The corpus shipped with the crate.
    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("built-in corpus parses")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut entries: Vec<CorpusEntry> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let at = |msg: String| Error::Parse(format!("line {}: {msg}", i + 1));
            let (name, rest) = line
                .split_once(':')
                .ok_or_else(|| at("expected `name: PD...`".into()))?;
            let name = name.trim();
            if name.is_empty() || name.contains(char::is_whitespace) {
                return Err(at(format!("bad name {name:?}")));
            }
            if entries.iter().any(|e| e.name == name) {
                return Err(at(format!("duplicate name {name}")));
            }
            let (pd_text, fixture) = match rest.split_once(';') {
                Some((pd, fx)) => (pd.trim(), Some(fx.trim())),
                None => (rest.trim(), None),
            };
            let diagram = parse_pd(pd_text).map_err(|e| at(e.to_string()))?;
            let expected_tail = fixture
                .map(|fx| {
                    let body = fx
                        .strip_prefix("tail:")
                        .ok_or_else(|| at(format!("unknown fixture {fx:?}")))?;
                    body.split(',')
                        .map(|c| c.trim().parse::<i64>().map_err(|e| at(e.to_string())))
                        .collect::<Result<Vec<_>>>()
                })
                .transpose()?;
            entries.push(CorpusEntry {
                name: name.to_string(),
                pd_text: pd_text.to_string(),
                diagram,
                expected_tail,
            });
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[CorpusEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// The diagram called `name`, or a parse error naming the known entries.
    pub fn diagram(&self, name: &str) -> Result<&PlanarDiagram> {
        self.get(name).map(|e| &e.diagram).ok_or_else(|| {
            let known: Vec<&str> = self.entries.iter().map(|e| e.name.as_str()).collect();
            Error::Parse(format!("unknown knot {name:?}; known: {}", known.join(", ")))
        })
    }
}
