//! Personality voices as stylistic parameter profiles: 24 features split into
//! 5 aggregation operations and 19 pragmatic markers, each set to a high/low/
//! don't-care level with a derived numeric weight. Voices pair up through an
//! antonym structure, and two profiles can be combined under explicit
//! strategies that serve as oracles for multivoice behavior.

use crate::mr::PersonalityId;
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FeatureClass {
    Aggregation,
    Pragmatic,
}

/// The 24 stylistic features; the first 5 are aggregation operations, the
/// rest pragmatic markers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FeatureId {
    Period,
    WithCue,
    Conjunction,
    AllMerge,
    AlsoCue,
    AckDefinitive,
    AckJustification,
    AckYeah,
    Confirmation,
    InitialRejection,
    CompetenceMitigation,
    FilledPauseStative,
    DownKindOf,
    DownLike,
    DownAround,
    Exclaim,
    IndicateSurprise,
    GeneralSoftener,
    DownSubord,
    Emphasizer,
    EmphYouKnow,
    Expletives,
    InGroupMarker,
    TagQuestion,
}

impl FeatureId {
    pub const COUNT: usize = 24;

    pub const ALL: [FeatureId; 24] = [
        FeatureId::Period,
        FeatureId::WithCue,
        FeatureId::Conjunction,
        FeatureId::AllMerge,
        FeatureId::AlsoCue,
        FeatureId::AckDefinitive,
        FeatureId::AckJustification,
        FeatureId::AckYeah,
        FeatureId::Confirmation,
        FeatureId::InitialRejection,
        FeatureId::CompetenceMitigation,
        FeatureId::FilledPauseStative,
        FeatureId::DownKindOf,
        FeatureId::DownLike,
        FeatureId::DownAround,
        FeatureId::Exclaim,
        FeatureId::IndicateSurprise,
        FeatureId::GeneralSoftener,
        FeatureId::DownSubord,
        FeatureId::Emphasizer,
        FeatureId::EmphYouKnow,
        FeatureId::Expletives,
        FeatureId::InGroupMarker,
        FeatureId::TagQuestion,
    ];

    pub const AGGREGATION: [FeatureId; 5] = [
        FeatureId::Period,
        FeatureId::WithCue,
        FeatureId::Conjunction,
        FeatureId::AllMerge,
        FeatureId::AlsoCue,
    ];

    pub const PRAGMATIC: [FeatureId; 19] = [
        FeatureId::AckDefinitive,
        FeatureId::AckJustification,
        FeatureId::AckYeah,
        FeatureId::Confirmation,
        FeatureId::InitialRejection,
        FeatureId::CompetenceMitigation,
        FeatureId::FilledPauseStative,
        FeatureId::DownKindOf,
        FeatureId::DownLike,
        FeatureId::DownAround,
        FeatureId::Exclaim,
        FeatureId::IndicateSurprise,
        FeatureId::GeneralSoftener,
        FeatureId::DownSubord,
        FeatureId::Emphasizer,
        FeatureId::EmphYouKnow,
        FeatureId::Expletives,
        FeatureId::InGroupMarker,
        FeatureId::TagQuestion,
    ];

    pub fn index(self) -> usize {
        Self::ALL.iter().position(|f| *f == self).unwrap()
    }

    pub fn class(self) -> FeatureClass {
        if (self.index()) < 5 {
            FeatureClass::Aggregation
        } else {
            FeatureClass::Pragmatic
        }
    }

    pub fn of_class(class: FeatureClass) -> &'static [FeatureId] {
        match class {
            FeatureClass::Aggregation => &Self::AGGREGATION,
            FeatureClass::Pragmatic => &Self::PRAGMATIC,
        }
    }

    pub fn key(self) -> &'static str {
        match self {
            FeatureId::Period => "period",
            FeatureId::WithCue => "with_cue",
            FeatureId::Conjunction => "conjunction",
            FeatureId::AllMerge => "all_merge",
            FeatureId::AlsoCue => "also_cue",
            FeatureId::AckDefinitive => "ack_definitive",
            FeatureId::AckJustification => "ack_justification",
            FeatureId::AckYeah => "ack_yeah",
            FeatureId::Confirmation => "confirmation",
            FeatureId::InitialRejection => "initial_rejection",
            FeatureId::CompetenceMitigation => "competence_mitigation",
            FeatureId::FilledPauseStative => "filled_pause_stative",
            FeatureId::DownKindOf => "down_kind_of",
            FeatureId::DownLike => "down_like",
            FeatureId::DownAround => "down_around",
            FeatureId::Exclaim => "exclaim",
            FeatureId::IndicateSurprise => "indicate_surprise",
            FeatureId::GeneralSoftener => "general_softener",
            FeatureId::DownSubord => "down_subord",
            FeatureId::Emphasizer => "emphasizer",
            FeatureId::EmphYouKnow => "emph_you_know",
            FeatureId::Expletives => "expletives",
            FeatureId::InGroupMarker => "in_group_marker",
            FeatureId::TagQuestion => "tag_question",
        }
    }

    pub fn parse(token: &str) -> Option<FeatureId> {
        let norm = token.trim().to_lowercase().replace([' ', '-'], "_");
        FeatureId::ALL.iter().copied().find(|f| f.key() == norm)
    }
}

impl fmt::Display for FeatureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParamLevel {
    High,
    Low,
    DontCare,
}

impl ParamLevel {
    pub fn key(self) -> &'static str {
        match self {
            ParamLevel::High => "high",
            ParamLevel::Low => "low",
            ParamLevel::DontCare => "dont_care",
        }
    }

    pub fn parse(token: &str) -> Option<ParamLevel> {
        let norm = token.trim().to_lowercase().replace([' ', '-', '\''], "_");
        match norm.as_str() {
            "high" => Some(ParamLevel::High),
            "low" => Some(ParamLevel::Low),
            "dont_care" | "dontcare" | "dc" => Some(ParamLevel::DontCare),
            _ => None,
        }
    }

    /// Default insertion probability for the level.
    pub fn default_weight(self) -> f64 {
        match self {
            ParamLevel::High => 0.9,
            ParamLevel::Low => 0.05,
            ParamLevel::DontCare => 0.2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProfileError {
    #[error("line {line}: unknown feature `{token}`")]
    UnknownFeature { line: usize, token: String },
    #[error("line {line}: unknown level `{token}`")]
    UnknownLevel { line: usize, token: String },
    #[error("line {line}: bad weight `{token}` (must be a number in [0,1])")]
    BadWeight { line: usize, token: String },
    #[error("line {line}: expected `feature = level [weight]`")]
    BadSyntax { line: usize },
}

/// A voice: per-feature levels plus derived (overridable) weights.
///
/// Pragmatic weights are independent insertion probabilities; aggregation
/// weights are normalized into a categorical over the five operations when
/// the planner samples sentence joins.
#[derive(Debug, Clone, PartialEq)]
pub struct StyleProfile {
    pub id: String,
    levels: [ParamLevel; FeatureId::COUNT],
    weights: [f64; FeatureId::COUNT],
}

impl StyleProfile {
    /// All features at don't-care.
    pub fn neutral(id: impl Into<String>) -> StyleProfile {
        StyleProfile {
            id: id.into(),
            levels: [ParamLevel::DontCare; FeatureId::COUNT],
            weights: [ParamLevel::DontCare.default_weight(); FeatureId::COUNT],
        }
    }

    pub fn level(&self, f: FeatureId) -> ParamLevel {
        self.levels[f.index()]
    }

    pub fn weight(&self, f: FeatureId) -> f64 {
        self.weights[f.index()]
    }

    /// Sets the level and resets the weight to the level default.
    pub fn set_level(&mut self, f: FeatureId, level: ParamLevel) {
        self.levels[f.index()] = level;
        self.weights[f.index()] = level.default_weight();
    }

    pub fn set_weight(&mut self, f: FeatureId, w: f64) {
        self.weights[f.index()] = w.clamp(0.0, 1.0);
    }

    fn set(&mut self, f: FeatureId, level: ParamLevel, weight: Option<f64>) {
        self.set_level(f, level);
        if let Some(w) = weight {
            self.set_weight(f, w);
        }
    }

    /// Aggregation weights normalized to a categorical over the 5 operations,
    /// in [`FeatureId::AGGREGATION`] order.
    pub fn aggregation_distribution(&self) -> [f64; 5] {
        let mut dist = [0.0; 5];
        let mut total = 0.0;
        for (i, f) in FeatureId::AGGREGATION.iter().enumerate() {
            dist[i] = self.weight(*f);
            total += dist[i];
        }
        if total <= 0.0 {
            // Degenerate all-zero profile: fall back to uniform.
            return [0.2; 5];
        }
        for d in &mut dist {
            *d /= total;
        }
        dist
    }

    pub fn weight_vector(&self) -> [f64; FeatureId::COUNT] {
        self.weights
    }

    /// Parses the key/value text format: one `feature = level [weight]` per
    /// line, `#` comments, unlisted features default to don't-care.
    pub fn parse(id: impl Into<String>, text: &str) -> Result<StyleProfile, ProfileError> {
        let mut profile = StyleProfile::neutral(id);
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rhs) = line.split_once('=').ok_or(ProfileError::BadSyntax { line: line_no })?;
            if key.trim() == "id" {
                profile.id = rhs.trim().to_string();
                continue;
            }
            let feature = FeatureId::parse(key)
                .ok_or_else(|| ProfileError::UnknownFeature { line: line_no, token: key.trim().to_string() })?;
            let mut parts = rhs.split_whitespace();
            let level_tok = parts.next().ok_or(ProfileError::BadSyntax { line: line_no })?;
            let level = ParamLevel::parse(level_tok)
                .ok_or_else(|| ProfileError::UnknownLevel { line: line_no, token: level_tok.to_string() })?;
            let weight = match parts.next() {
                Some(tok) => {
                    let w: f64 = tok.parse().map_err(|_| ProfileError::BadWeight {
                        line: line_no,
                        token: tok.to_string(),
                    })?;
                    if !(0.0..=1.0).contains(&w) {
                        return Err(ProfileError::BadWeight { line: line_no, token: tok.to_string() });
                    }
                    Some(w)
                }
                None => None,
            };
            if parts.next().is_some() {
                return Err(ProfileError::BadSyntax { line: line_no });
            }
            profile.set(feature, level, weight);
        }
        Ok(profile)
    }

    /// The inverse of [`StyleProfile::parse`]; don't-care features with the
    /// default weight are omitted.
    pub fn to_text(&self) -> String {
        let mut out = format!("id = {}\n", self.id);
        for f in FeatureId::ALL {
            let level = self.level(f);
            let weight = self.weight(f);
            let default = level.default_weight();
            if level == ParamLevel::DontCare && (weight - default).abs() < 1e-12 {
                continue;
            }
            if (weight - default).abs() < 1e-12 {
                out.push_str(&format!("{} = {}\n", f.key(), level.key()));
            } else {
                out.push_str(&format!("{} = {} {}\n", f.key(), level.key(), weight));
            }
        }
        out
    }
}

macro_rules! shipped_profile {
    ($name:ident, $file:expr) => {
        static $name: Lazy<StyleProfile> = Lazy::new(|| {
            let stem = $file.trim_end_matches(".profile");
            StyleProfile::parse(stem, include_str!(concat!("../data/profiles/", $file)))
                .expect(concat!("shipped profile ", $file, " must parse"))
        });
    };
}

shipped_profile!(AGREEABLE_PROFILE, "agreeable.profile");
shipped_profile!(DISAGREEABLE_PROFILE, "disagreeable.profile");
shipped_profile!(CONSCIENTIOUS_PROFILE, "conscientious.profile");
shipped_profile!(UNCONSCIENTIOUS_PROFILE, "unconscientious.profile");
shipped_profile!(EXTRAVERT_PROFILE, "extravert.profile");

/// The shipped calibrated profile for a voice.
pub fn default_profile(p: PersonalityId) -> &'static StyleProfile {
    match p {
        PersonalityId::Agreeable => &AGREEABLE_PROFILE,
        PersonalityId::Disagreeable => &DISAGREEABLE_PROFILE,
        PersonalityId::Conscientious => &CONSCIENTIOUS_PROFILE,
        PersonalityId::Unconscientious => &UNCONSCIENTIOUS_PROFILE,
        PersonalityId::Extravert => &EXTRAVERT_PROFILE,
    }
}

/// The exact-opposite voice, where one exists.
pub fn antonym(p: PersonalityId) -> Option<PersonalityId> {
    match p {
        PersonalityId::Agreeable => Some(PersonalityId::Disagreeable),
        PersonalityId::Disagreeable => Some(PersonalityId::Agreeable),
        PersonalityId::Conscientious => Some(PersonalityId::Unconscientious),
        PersonalityId::Unconscientious => Some(PersonalityId::Conscientious),
        PersonalityId::Extravert => None,
    }
}

/// All unordered voice pairs except the two antonym pairs, in canonical
/// (declaration) order. Always 8 pairs.
pub fn enumerate_pairs() -> Vec<(PersonalityId, PersonalityId)> {
    let mut pairs = Vec::new();
    for (i, a) in PersonalityId::ALL.iter().enumerate() {
        for b in PersonalityId::ALL[i + 1..].iter() {
            if antonym(*a) == Some(*b) {
                continue;
            }
            pairs.push((*a, *b));
        }
    }
    pairs
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CombinationStrategy {
    /// p1's level wins wherever p1 is not don't-care; order-sensitive.
    FirstWins,
    /// Arithmetic mean of weights; commutative and idempotent. The
    /// interpolation oracle.
    Average,
    /// High if either is high, else low if either is low.
    UnionHigh,
}

impl CombinationStrategy {
    pub fn key(self) -> &'static str {
        match self {
            CombinationStrategy::FirstWins => "first_wins",
            CombinationStrategy::Average => "average",
            CombinationStrategy::UnionHigh => "union_high",
        }
    }

    pub fn parse(token: &str) -> Option<CombinationStrategy> {
        match token.trim().to_lowercase().replace('-', "_").as_str() {
            "first_wins" | "firstwins" | "first" => Some(CombinationStrategy::FirstWins),
            "average" | "avg" | "mean" => Some(CombinationStrategy::Average),
            "union_high" | "unionhigh" | "union" => Some(CombinationStrategy::UnionHigh),
            _ => None,
        }
    }
}

/// Combines two profiles feature by feature under the given strategy.
pub fn combine_profiles(
    p1: &StyleProfile,
    p2: &StyleProfile,
    strategy: CombinationStrategy,
) -> StyleProfile {
    let id = format!("{}+{}", p1.id, p2.id);
    let mut out = StyleProfile::neutral(id);
    for f in FeatureId::ALL {
        let (l1, l2) = (p1.level(f), p2.level(f));
        let (w1, w2) = (p1.weight(f), p2.weight(f));
        let (level, weight) = match strategy {
            CombinationStrategy::FirstWins => {
                if l1 != ParamLevel::DontCare {
                    (l1, w1)
                } else {
                    (l2, w2)
                }
            }
            CombinationStrategy::Average => {
                let level = if l1 == l2 { l1 } else { ParamLevel::DontCare };
                (level, (w1 + w2) / 2.0)
            }
            CombinationStrategy::UnionHigh => {
                if l1 == ParamLevel::High || l2 == ParamLevel::High {
                    (ParamLevel::High, w1.max(w2))
                } else if l1 == ParamLevel::Low || l2 == ParamLevel::Low {
                    (ParamLevel::Low, w1.min(w2))
                } else {
                    (ParamLevel::DontCare, (w1 + w2) / 2.0)
                }
            }
        };
        out.levels[f.index()] = level;
        out.weights[f.index()] = weight;
    }
    out
}
