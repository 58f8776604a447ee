//! Editable data files behind the realizer: surface templates per slot/value
//! and the pragmatic-marker text inventory. Both use a plain `key = a | b | c`
//! line format with `#` comments.

use crate::mr::SlotName;
use crate::persona::{FeatureClass, FeatureId};
use once_cell::sync::Lazy;
use std::collections::BTreeMap;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexiconError {
    #[error("line {line}: expected `key = entries`")]
    BadSyntax { line: usize },
    #[error("line {line}: unknown slot `{token}`")]
    UnknownSlot { line: usize, token: String },
    #[error("line {line}: unknown feature `{token}`")]
    UnknownFeature { line: usize, token: String },
    #[error("line {line}: `{token}` is not a pragmatic marker")]
    NotPragmatic { line: usize, token: String },
    #[error("line {line}: empty entry list")]
    EmptyEntries { line: usize },
    #[error("io error reading lexicon: {0}")]
    Io(String),
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

fn split_entries(rhs: &str) -> Vec<String> {
    rhs.split('|').map(|e| e.trim().to_string()).filter(|e| !e.is_empty()).collect()
}

/// Verb-phrase templates for one slot value, plus the optional noun phrase
/// used by the "with" aggregation cue.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TemplateEntry {
    pub vps: Vec<String>,
    pub with_phrase: Option<String>,
}

/// Lexicalization templates keyed by (slot, lowercased value). Name and near
/// are open-class and realized from the slot value itself, so they carry no
/// entries here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemplateLexicon {
    entries: BTreeMap<(SlotName, String), TemplateEntry>,
}

impl TemplateLexicon {
    pub fn parse(text: &str) -> Result<TemplateLexicon, LexiconError> {
        let mut entries: BTreeMap<(SlotName, String), TemplateEntry> = BTreeMap::new();
        for (line, content) in data_lines(text) {
            let (key, rhs) = content.split_once('=').ok_or(LexiconError::BadSyntax { line })?;
            let key = key.trim();
            let (key, is_with) = match key.strip_suffix(".with") {
                Some(stem) => (stem, true),
                None => (key, false),
            };
            let (slot_tok, value) =
                key.split_once('.').ok_or(LexiconError::BadSyntax { line })?;
            let slot = SlotName::parse(slot_tok).ok_or_else(|| LexiconError::UnknownSlot {
                line,
                token: slot_tok.to_string(),
            })?;
            let texts = split_entries(rhs);
            if texts.is_empty() {
                return Err(LexiconError::EmptyEntries { line });
            }
            let entry = entries.entry((slot, value.trim().to_lowercase())).or_default();
            if is_with {
                entry.with_phrase = Some(texts[0].clone());
            } else {
                entry.vps = texts;
            }
        }
        Ok(TemplateLexicon { entries })
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<TemplateLexicon, LexiconError> {
        let text = std::fs::read_to_string(path).map_err(|e| LexiconError::Io(e.to_string()))?;
        TemplateLexicon::parse(&text)
    }

    pub fn shipped() -> &'static TemplateLexicon {
        static SHIPPED: Lazy<TemplateLexicon> = Lazy::new(|| {
            TemplateLexicon::parse(include_str!("../data/templates.txt"))
                .expect("shipped template lexicon must parse")
        });
        &SHIPPED
    }

    pub fn lookup(&self, slot: SlotName, value: &str) -> Option<&TemplateEntry> {
        self.entries.get(&(slot, value.to_lowercase()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(SlotName, String), &TemplateEntry)> {
        self.entries.iter()
    }
}

/// Marker texts per pragmatic feature. Entries may contain a bare `X` token
/// standing for the subject noun phrase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkerLexicon {
    entries: BTreeMap<FeatureId, Vec<String>>,
}

impl MarkerLexicon {
    pub fn parse(text: &str) -> Result<MarkerLexicon, LexiconError> {
        let mut entries = BTreeMap::new();
        for (line, content) in data_lines(text) {
            let (key, rhs) = content.split_once('=').ok_or(LexiconError::BadSyntax { line })?;
            let feature = FeatureId::parse(key).ok_or_else(|| LexiconError::UnknownFeature {
                line,
                token: key.trim().to_string(),
            })?;
            if feature.class() != FeatureClass::Pragmatic {
                return Err(LexiconError::NotPragmatic { line, token: key.trim().to_string() });
            }
            let texts = split_entries(rhs);
            if texts.is_empty() {
                return Err(LexiconError::EmptyEntries { line });
            }
            entries.insert(feature, texts);
        }
        Ok(MarkerLexicon { entries })
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<MarkerLexicon, LexiconError> {
        let text = std::fs::read_to_string(path).map_err(|e| LexiconError::Io(e.to_string()))?;
        MarkerLexicon::parse(&text)
    }

    pub fn shipped() -> &'static MarkerLexicon {
        static SHIPPED: Lazy<MarkerLexicon> = Lazy::new(|| {
            MarkerLexicon::parse(include_str!("../data/markers.txt"))
                .expect("shipped marker lexicon must parse")
        });
        &SHIPPED
    }

    pub fn texts(&self, f: FeatureId) -> &[String] {
        self.entries.get(&f).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Counting patterns for a feature: entry texts with the subject
    /// placeholder and anything after it stripped, lowercased.
    pub fn counting_patterns(&self, f: FeatureId) -> Vec<String> {
        self.texts(f)
            .iter()
            .map(|t| {
                let lower = t.to_lowercase();
                match lower.find(" x") {
                    Some(pos)
                        if lower[pos + 2..]
                            .chars()
                            .next()
                            .map_or(true, |c| !c.is_alphanumeric()) =>
                    {
                        lower[..pos].trim().to_string()
                    }
                    _ => lower,
                }
            })
            .collect()
    }
}
