//! Meaning representations: the dialog-act + slot/value structures that drive
//! generation and auditing, their wire grammar, and delexicalization.
//!
//! The canonical grammar is a single line of the form
//! `inform(slot[value], slot[value], ...)` optionally followed by one or two
//! `convert(personality[TAG])` acts. A lenient pre-normalizer also accepts the
//! bare comma-separated `slot[value]` lists found in E2E-style CSV exports and
//! repairs stray close-parens mid-list.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// The closed set of attribute slots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SlotName {
    Name,
    EatType,
    Food,
    PriceRange,
    CustomerRating,
    Area,
    FamilyFriendly,
    Near,
}

impl SlotName {
    pub const ALL: [SlotName; 8] = [
        SlotName::Name,
        SlotName::EatType,
        SlotName::Food,
        SlotName::PriceRange,
        SlotName::CustomerRating,
        SlotName::Area,
        SlotName::FamilyFriendly,
        SlotName::Near,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SlotName::Name => "name",
            SlotName::EatType => "eatType",
            SlotName::Food => "food",
            SlotName::PriceRange => "priceRange",
            SlotName::CustomerRating => "customerRating",
            SlotName::Area => "area",
            SlotName::FamilyFriendly => "familyFriendly",
            SlotName::Near => "near",
        }
    }

    /// Accepts camelCase, snake_case and the spaced form used by raw E2E CSVs
    /// ("customer rating"), case-insensitively.
    pub fn parse(token: &str) -> Option<SlotName> {
        let norm: String = token
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '_')
            .flat_map(|c| c.to_lowercase())
            .collect();
        match norm.as_str() {
            "name" => Some(SlotName::Name),
            "eattype" => Some(SlotName::EatType),
            "food" => Some(SlotName::Food),
            "pricerange" => Some(SlotName::PriceRange),
            "customerrating" => Some(SlotName::CustomerRating),
            "area" => Some(SlotName::Area),
            "familyfriendly" => Some(SlotName::FamilyFriendly),
            "near" => Some(SlotName::Near),
            _ => None,
        }
    }
}

impl fmt::Display for SlotName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One attribute/value pair. Values are verbatim surface strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Slot {
    pub name: SlotName,
    pub value: String,
}

impl Slot {
    pub fn new(name: SlotName, value: impl Into<String>) -> Slot {
        Slot { name, value: value.into() }
    }
}

/// The five Big Five voices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PersonalityId {
    Agreeable,
    Disagreeable,
    Conscientious,
    Unconscientious,
    Extravert,
}

impl PersonalityId {
    pub const ALL: [PersonalityId; 5] = [
        PersonalityId::Agreeable,
        PersonalityId::Disagreeable,
        PersonalityId::Conscientious,
        PersonalityId::Unconscientious,
        PersonalityId::Extravert,
    ];

    /// The convert-tag token, e.g. `EXTRAVERT`.
    pub fn tag(&self) -> &'static str {
        match self {
            PersonalityId::Agreeable => "AGREEABLE",
            PersonalityId::Disagreeable => "DISAGREEABLE",
            PersonalityId::Conscientious => "CONSCIENTIOUS",
            PersonalityId::Unconscientious => "UNCONSCIENTIOUS",
            PersonalityId::Extravert => "EXTRAVERT",
        }
    }

    /// Short label used in report tables.
    pub fn short_label(&self) -> &'static str {
        match self {
            PersonalityId::Agreeable => "Agree",
            PersonalityId::Disagreeable => "Disagr",
            PersonalityId::Conscientious => "Consc",
            PersonalityId::Unconscientious => "Unconsc",
            PersonalityId::Extravert => "Extra",
        }
    }

    /// Lowercase identifier used for profile files and CLI arguments.
    pub fn key(&self) -> &'static str {
        match self {
            PersonalityId::Agreeable => "agreeable",
            PersonalityId::Disagreeable => "disagreeable",
            PersonalityId::Conscientious => "conscientious",
            PersonalityId::Unconscientious => "unconscientious",
            PersonalityId::Extravert => "extravert",
        }
    }

    pub fn parse(token: &str) -> Option<PersonalityId> {
        let norm = token.trim().to_lowercase();
        match norm.as_str() {
            "agreeable" | "agree" => Some(PersonalityId::Agreeable),
            "disagreeable" | "disagr" | "disagree" => Some(PersonalityId::Disagreeable),
            "conscientious" | "consc" | "conscientiousness" => Some(PersonalityId::Conscientious),
            "unconscientious" | "unconsc" | "unconscientiousness" => {
                Some(PersonalityId::Unconscientious)
            }
            "extravert" | "extra" | "extraversion" => Some(PersonalityId::Extravert),
            _ => None,
        }
    }
}

impl fmt::Display for PersonalityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A dialog act plus ordered slots and the ordered personality convert tags
/// attached to it. Tag order is significant and survives round-trips.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeaningRepresentation {
    pub act: String,
    pub slots: Vec<Slot>,
    pub style_tags: Vec<PersonalityId>,
}

impl MeaningRepresentation {
    pub fn new(slots: Vec<Slot>) -> MeaningRepresentation {
        MeaningRepresentation { act: "inform".to_string(), slots, style_tags: Vec::new() }
    }

    pub fn with_tags(slots: Vec<Slot>, tags: Vec<PersonalityId>) -> MeaningRepresentation {
        MeaningRepresentation { act: "inform".to_string(), slots, style_tags: tags }
    }

    pub fn slot(&self, name: SlotName) -> Option<&Slot> {
        self.slots.iter().find(|s| s.name == name)
    }

    pub fn has_slot(&self, name: SlotName) -> bool {
        self.slot(name).is_some()
    }
}

/// Placeholder tokens substituted for proper-noun slot values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Placeholder {
    Name,
    Near,
}

impl Placeholder {
    pub fn token(&self) -> &'static str {
        match self {
            Placeholder::Name => "NAME",
            Placeholder::Near => "NEAR",
        }
    }

    pub fn slot(&self) -> SlotName {
        match self {
            Placeholder::Name => SlotName::Name,
            Placeholder::Near => SlotName::Near,
        }
    }
}

/// Records the original values removed by delexicalization.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DelexMap {
    entries: BTreeMap<Placeholder, String>,
}

impl DelexMap {
    pub fn new() -> DelexMap {
        DelexMap::default()
    }

    pub fn insert(&mut self, p: Placeholder, original: impl Into<String>) {
        self.entries.insert(p, original.into());
    }

    pub fn get(&self, p: Placeholder) -> Option<&str> {
        self.entries.get(&p).map(|s| s.as_str())
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MrError {
    #[error("unknown slot name `{0}`")]
    UnknownSlot(String),
    #[error("duplicate slot `{0}`")]
    DuplicateSlot(SlotName),
    #[error("malformed MR near `{0}`")]
    MalformedBrackets(String),
    #[error("unknown personality `{0}`")]
    UnknownPersonality(String),
    #[error("more than two convert tags")]
    TooManyStyleTags,
    #[error("duplicate convert tag `{0}`")]
    DuplicateStyleTag(PersonalityId),
    #[error("unknown dialog act `{0}`")]
    UnknownAct(String),
    #[error("empty value for slot `{0}`")]
    EmptyValue(SlotName),
    #[error("placeholder `{0}` has no entry in the delex map")]
    UnboundPlaceholder(String),
}

fn snippet(s: &str) -> String {
    let t = s.trim();
    if t.is_empty() {
        "<empty>".to_string()
    } else {
        t.chars().take(40).collect()
    }
}

/// Strips `convert(personality[TAG])` acts out of the input, returning the
/// remainder and the tags in source order.
fn extract_convert_acts(input: &str) -> Result<(String, Vec<PersonalityId>), MrError> {
    let lower: Vec<char> = input.chars().flat_map(|c| c.to_lowercase()).collect();
    let chars: Vec<char> = input.chars().collect();
    // Lowercasing each char individually keeps indices aligned for ASCII and
    // the typical BMP input this grammar sees.
    debug_assert_eq!(lower.len(), chars.len());

    let mut tags = Vec::new();
    let mut keep = String::new();
    let mut i = 0;
    let kw: Vec<char> = "convert".chars().collect();
    while i < chars.len() {
        let at_kw = i + kw.len() <= lower.len()
            && lower[i..i + kw.len()] == kw[..]
            && (i == 0 || !lower[i - 1].is_alphanumeric())
            && (i + kw.len() >= lower.len() || !lower[i + kw.len()].is_alphanumeric());
        if !at_kw {
            keep.push(chars[i]);
            i += 1;
            continue;
        }
        // Parse `convert ( personality [ TAG ] )`.
        let mut j = i + kw.len();
        let expect = |lit: &str, j: &mut usize| -> bool {
            while *j < chars.len() && chars[*j].is_whitespace() {
                *j += 1;
            }
            let lit_chars: Vec<char> = lit.chars().collect();
            if *j + lit_chars.len() <= lower.len() && lower[*j..*j + lit_chars.len()] == lit_chars[..] {
                *j += lit_chars.len();
                true
            } else {
                false
            }
        };
        if !expect("(", &mut j) || !expect("personality", &mut j) || !expect("[", &mut j) {
            return Err(MrError::MalformedBrackets(snippet(&input[..]) ));
        }
        let start = j;
        while j < chars.len() && chars[j] != ']' {
            j += 1;
        }
        if j >= chars.len() {
            return Err(MrError::MalformedBrackets(snippet(&chars[start..].iter().collect::<String>())));
        }
        let token: String = chars[start..j].iter().collect();
        j += 1; // ']'
        if !expect(")", &mut j) {
            return Err(MrError::MalformedBrackets(snippet(&token)));
        }
        let tag = PersonalityId::parse(&token)
            .ok_or_else(|| MrError::UnknownPersonality(token.trim().to_string()))?;
        tags.push(tag);
        i = j;
    }
    Ok((keep, tags))
}

/// Parses the canonical MR grammar, with lenient normalization of the
/// bracket/paren variants seen in E2E CSV exports.
pub fn parse_mr(input: &str) -> Result<MeaningRepresentation, MrError> {
    let (remainder, tags) = extract_convert_acts(input)?;
    if tags.len() > 2 {
        return Err(MrError::TooManyStyleTags);
    }
    for (i, t) in tags.iter().enumerate() {
        if tags[..i].contains(t) {
            return Err(MrError::DuplicateStyleTag(*t));
        }
    }

    let body = remainder.trim();
    let list = if body.is_empty() {
        String::new()
    } else if let Some(paren) = body.find('(') {
        // Leading `act(...)` form. Anything before the first paren is the act
        // name; stray parens later in the list are dropped by the normalizer.
        let act = body[..paren].trim();
        if !act.eq_ignore_ascii_case("inform") {
            return Err(MrError::UnknownAct(act.to_string()));
        }
        // Parens become separators so a stray close-paren mid-list still
        // splits cleanly; empty pieces are skipped below.
        body[paren..]
            .chars()
            .map(|c| if c == '(' || c == ')' { ',' } else { c })
            .collect()
    } else {
        // Bare E2E convention: comma-separated slot[value] pairs.
        body.to_string()
    };

    let mut slots: Vec<Slot> = Vec::new();
    for piece in split_top_level(&list) {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let open = piece.find('[').ok_or_else(|| MrError::MalformedBrackets(snippet(piece)))?;
        let close = piece.find(']').ok_or_else(|| MrError::MalformedBrackets(snippet(piece)))?;
        if close < open || !piece[close + 1..].trim().is_empty() {
            return Err(MrError::MalformedBrackets(snippet(piece)));
        }
        let inner = &piece[open + 1..close];
        if inner.contains('[') {
            return Err(MrError::MalformedBrackets(snippet(piece)));
        }
        let key = piece[..open].trim();
        let name = SlotName::parse(key).ok_or_else(|| MrError::UnknownSlot(key.to_string()))?;
        let value = inner.trim();
        if value.is_empty() {
            return Err(MrError::EmptyValue(name));
        }
        if slots.iter().any(|s| s.name == name) {
            return Err(MrError::DuplicateSlot(name));
        }
        slots.push(Slot::new(name, value));
    }

    Ok(MeaningRepresentation { act: "inform".to_string(), slots, style_tags: tags })
}

/// Splits on commas that sit outside square brackets.
fn split_top_level(list: &str) -> Vec<&str> {
    let mut pieces = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in list.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                pieces.push(&list[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    pieces.push(&list[start..]);
    pieces
}

/// Canonical single-line form; `parse_mr(serialize_mr(m)) == m`.
pub fn serialize_mr(mr: &MeaningRepresentation) -> String {
    let mut out = String::from("inform(");
    for (i, slot) in mr.slots.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(slot.name.as_str());
        out.push('[');
        out.push_str(&slot.value);
        out.push(']');
    }
    out.push(')');
    for tag in &mr.style_tags {
        out.push_str(" convert(personality[");
        out.push_str(tag.tag());
        out.push_str("])");
    }
    out
}

/// Case-insensitive whole-token replacement of every occurrence of `needle`.
fn replace_word_ci(haystack: &str, needle: &str, replacement: &str) -> String {
    if needle.is_empty() {
        return haystack.to_string();
    }
    let hay: Vec<char> = haystack.chars().collect();
    let pat: Vec<char> = needle.chars().collect();
    let mut out = String::new();
    let mut i = 0;
    while i < hay.len() {
        let fits = i + pat.len() <= hay.len();
        let matches = fits
            && hay[i..i + pat.len()]
                .iter()
                .zip(pat.iter())
                .all(|(a, b)| a.to_lowercase().eq(b.to_lowercase()));
        let bounded = matches
            && (i == 0 || !hay[i - 1].is_alphanumeric())
            && (i + pat.len() >= hay.len() || !hay[i + pat.len()].is_alphanumeric());
        if bounded {
            out.push_str(replacement);
            i += pat.len();
        } else {
            out.push(hay[i]);
            i += 1;
        }
    }
    out
}

/// Replaces name/near values with NAME/NEAR placeholders in both the MR and
/// the utterance. Matching is case-insensitive on whole-token boundaries; when
/// one value contains the other the longer one is replaced first.
pub fn delexicalize(
    mr: &MeaningRepresentation,
    utterance: &str,
) -> (MeaningRepresentation, String, DelexMap) {
    let mut targets: Vec<(Placeholder, String)> = Vec::new();
    for p in [Placeholder::Name, Placeholder::Near] {
        if let Some(slot) = mr.slot(p.slot()) {
            if slot.value != p.token() {
                targets.push((p, slot.value.clone()));
            }
        }
    }
    // Longer values first so a value embedded in the other is not clobbered.
    targets.sort_by(|a, b| b.1.chars().count().cmp(&a.1.chars().count()));

    let mut text = utterance.to_string();
    let mut out_mr = mr.clone();
    let mut map = DelexMap::new();
    for (p, value) in targets {
        text = replace_word_ci(&text, &value, p.token());
        for slot in &mut out_mr.slots {
            if slot.name == p.slot() {
                slot.value = p.token().to_string();
            }
        }
        map.insert(p, value);
    }
    (out_mr, text, map)
}

/// Restores placeholders from the map. Errors if a placeholder token occurs
/// without a corresponding entry.
pub fn relexicalize(utterance: &str, map: &DelexMap) -> Result<String, MrError> {
    let mut text = utterance.to_string();
    for p in [Placeholder::Name, Placeholder::Near] {
        let token = p.token();
        let present = find_word(&text, token);
        match (present, map.get(p)) {
            (true, Some(original)) => {
                text = replace_word_exact(&text, token, original);
            }
            (true, None) => return Err(MrError::UnboundPlaceholder(token.to_string())),
            (false, _) => {}
        }
    }
    Ok(text)
}

fn find_word(haystack: &str, needle: &str) -> bool {
    let hay: Vec<char> = haystack.chars().collect();
    let pat: Vec<char> = needle.chars().collect();
    let mut i = 0;
    while i + pat.len() <= hay.len() {
        if hay[i..i + pat.len()] == pat[..]
            && (i == 0 || !hay[i - 1].is_alphanumeric())
            && (i + pat.len() >= hay.len() || !hay[i + pat.len()].is_alphanumeric())
        {
            return true;
        }
        i += 1;
    }
    false
}

fn replace_word_exact(haystack: &str, needle: &str, replacement: &str) -> String {
    let hay: Vec<char> = haystack.chars().collect();
    let pat: Vec<char> = needle.chars().collect();
    let mut out = String::new();
    let mut i = 0;
    while i < hay.len() {
        let bounded = i + pat.len() <= hay.len()
            && hay[i..i + pat.len()] == pat[..]
            && (i == 0 || !hay[i - 1].is_alphanumeric())
            && (i + pat.len() >= hay.len() || !hay[i + pat.len()].is_alphanumeric());
        if bounded {
            out.push_str(replacement);
            i += pat.len();
        } else {
            out.push(hay[i]);
            i += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const TABLE1_CANONICAL: &str = "inform(name[Browns Cambridge], eatType[pub], priceRange[average], food[Italian], near[Adriatic], familyFriendly[yes], area[city centre])";
    // As printed in the source table, with the close-paren stranded mid-list.
    const TABLE1_STRAY_PAREN: &str = "inform(name[Browns Cambridge], eatType[pub], priceRange[average], food[Italian], near[Adriatic]) familyFriendly[yes], area[city centre]";

    #[test]
    fn parses_seven_slots_in_order() {
        let mr = parse_mr(TABLE1_CANONICAL).unwrap();
        assert_eq!(mr.act, "inform");
        assert_eq!(mr.style_tags, vec![]);
        let names: Vec<SlotName> = mr.slots.iter().map(|s| s.name).collect();
        assert_eq!(
            names,
            vec![
                SlotName::Name,
                SlotName::EatType,
                SlotName::PriceRange,
                SlotName::Food,
                SlotName::Near,
                SlotName::FamilyFriendly,
                SlotName::Area,
            ]
        );
        assert_eq!(mr.slot(SlotName::Name).unwrap().value, "Browns Cambridge");
        assert_eq!(mr.slot(SlotName::Area).unwrap().value, "city centre");
    }

    #[test]
    fn normalizer_repairs_stray_paren() {
        let a = parse_mr(TABLE1_CANONICAL).unwrap();
        let b = parse_mr(TABLE1_STRAY_PAREN).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn accepts_bare_e2e_field() {
        let mr = parse_mr("name[The Vaults], eatType[pub], priceRange[more than £30]").unwrap();
        assert_eq!(mr.slots.len(), 3);
        assert_eq!(mr.slot(SlotName::PriceRange).unwrap().value, "more than £30");
    }

    #[test]
    fn convert_tags_in_source_order() {
        let mr = parse_mr(
            "inform(eatType[pub]) convert(personality[EXTRAVERT]) convert(personality[DISAGREEABLE])",
        )
        .unwrap();
        assert_eq!(mr.slots.len(), 1);
        assert_eq!(
            mr.style_tags,
            vec![PersonalityId::Extravert, PersonalityId::Disagreeable]
        );
    }

    #[test]
    fn rejects_duplicate_slot() {
        assert_eq!(
            parse_mr("inform(eatType[pub], eatType[pub])"),
            Err(MrError::DuplicateSlot(SlotName::EatType))
        );
    }

    #[test]
    fn rejects_unknown_slot() {
        assert_eq!(
            parse_mr("inform(wifi[yes])"),
            Err(MrError::UnknownSlot("wifi".to_string()))
        );
    }

    #[test]
    fn rejects_unknown_act() {
        assert_eq!(
            parse_mr("request(area[city centre])"),
            Err(MrError::UnknownAct("request".to_string()))
        );
    }

    #[test]
    fn rejects_unknown_personality() {
        assert_eq!(
            parse_mr("inform(eatType[pub]) convert(personality[NEUROTIC])"),
            Err(MrError::UnknownPersonality("NEUROTIC".to_string()))
        );
    }

    #[test]
    fn rejects_three_tags() {
        let s = "inform(eatType[pub]) convert(personality[EXTRAVERT]) convert(personality[AGREEABLE]) convert(personality[CONSCIENTIOUS])";
        assert_eq!(parse_mr(s), Err(MrError::TooManyStyleTags));
    }

    #[test]
    fn rejects_duplicate_tag() {
        let s = "inform(eatType[pub]) convert(personality[EXTRAVERT]) convert(personality[EXTRAVERT])";
        assert_eq!(parse_mr(s), Err(MrError::DuplicateStyleTag(PersonalityId::Extravert)));
    }

    #[test]
    fn rejects_malformed_brackets() {
        assert!(matches!(parse_mr("inform(eatType[pub"), Err(MrError::MalformedBrackets(_))));
        assert!(matches!(parse_mr("inform(eatType]pub[)"), Err(MrError::MalformedBrackets(_))));
        assert!(matches!(
            parse_mr("inform(eatType[pub] area[riverside])"),
            Err(MrError::MalformedBrackets(_))
        ));
    }

    #[test]
    fn rejects_empty_value() {
        assert_eq!(parse_mr("inform(food[])"), Err(MrError::EmptyValue(SlotName::Food)));
    }

    #[test]
    fn serialize_canonical_forms() {
        let mr = MeaningRepresentation::new(vec![Slot::new(SlotName::EatType, "pub")]);
        assert_eq!(serialize_mr(&mr), "inform(eatType[pub])");

        let tagged = MeaningRepresentation::with_tags(
            vec![Slot::new(SlotName::EatType, "pub")],
            vec![PersonalityId::Disagreeable],
        );
        assert_eq!(
            serialize_mr(&tagged),
            "inform(eatType[pub]) convert(personality[DISAGREEABLE])"
        );
    }

    #[test]
    fn round_trip_preserves_slot_order() {
        let mr = parse_mr(TABLE1_CANONICAL).unwrap();
        let round = parse_mr(&serialize_mr(&mr)).unwrap();
        assert_eq!(mr, round);
    }

    #[test]
    fn tag_order_yields_distinct_strings() {
        let slots = vec![Slot::new(SlotName::EatType, "pub")];
        let ab = MeaningRepresentation::with_tags(
            slots.clone(),
            vec![PersonalityId::Extravert, PersonalityId::Disagreeable],
        );
        let ba = MeaningRepresentation::with_tags(
            slots,
            vec![PersonalityId::Disagreeable, PersonalityId::Extravert],
        );
        assert_ne!(serialize_mr(&ab), serialize_mr(&ba));
    }

    #[test]
    fn delex_replaces_name_and_near() {
        let mr = parse_mr(TABLE1_CANONICAL).unwrap();
        let (dmr, text, map) = delexicalize(&mr, "Browns Cambridge is a pub near Adriatic.");
        assert_eq!(text, "NAME is a pub near NEAR.");
        assert_eq!(dmr.slot(SlotName::Name).unwrap().value, "NAME");
        assert_eq!(dmr.slot(SlotName::Near).unwrap().value, "NEAR");
        assert_eq!(map.get(Placeholder::Name), Some("Browns Cambridge"));
        assert_eq!(map.get(Placeholder::Near), Some("Adriatic"));
    }

    #[test]
    fn delex_without_proper_nouns_is_noop() {
        let mr = parse_mr("inform(eatType[pub], area[riverside])").unwrap();
        let (dmr, text, map) = delexicalize(&mr, "It is a pub by the river.");
        assert_eq!(dmr, mr);
        assert_eq!(text, "It is a pub by the river.");
        assert!(map.is_empty());
    }

    #[test]
    fn delex_replaces_every_occurrence() {
        let mr = parse_mr("inform(name[Blue Lantern], eatType[pub])").unwrap();
        let utterance = "Blue Lantern is a pub. You will like blue lantern.";
        // Brute-force oracle: scan for case-insensitive occurrences first.
        let occurrences = utterance.to_lowercase().matches("blue lantern").count();
        assert_eq!(occurrences, 2);
        let (_, text, _) = delexicalize(&mr, utterance);
        assert_eq!(text, "NAME is a pub. You will like NAME.");
        assert_eq!(text.matches("NAME").count(), occurrences);
    }

    #[test]
    fn delex_respects_token_boundaries() {
        let mr = parse_mr("inform(name[Cambridge])").unwrap();
        let (_, text, _) = delexicalize(&mr, "Cambridge is not in Cambridgeshire.");
        assert_eq!(text, "NAME is not in Cambridgeshire.");
    }

    #[test]
    fn relex_restores_originals() {
        let mut map = DelexMap::new();
        map.insert(Placeholder::Name, "Browns Cambridge");
        map.insert(Placeholder::Near, "Adriatic");
        let text = relexicalize("NAME is a pub near NEAR.", &map).unwrap();
        assert_eq!(text, "Browns Cambridge is a pub near Adriatic.");
    }

    #[test]
    fn relex_without_placeholders_is_noop() {
        let map = DelexMap::new();
        assert_eq!(relexicalize("It is a pub.", &map).unwrap(), "It is a pub.");
    }

    #[test]
    fn relex_unbound_placeholder_errors() {
        let map = DelexMap::new();
        assert_eq!(
            relexicalize("NAME is nice.", &map),
            Err(MrError::UnboundPlaceholder("NAME".to_string()))
        );
    }

    #[test]
    fn relex_ignores_embedded_tokens() {
        let map = DelexMap::new();
        // RENAMED contains NAME but is a single token.
        assert_eq!(relexicalize("RENAMED it.", &map).unwrap(), "RENAMED it.");
    }

    #[test]
    fn delex_relex_is_identity() {
        let mr = parse_mr(TABLE1_CANONICAL).unwrap();
        let original = "Browns Cambridge is a pub near Adriatic, and Browns Cambridge is nice.";
        let (_, delexed, map) = delexicalize(&mr, original);
        assert_eq!(relexicalize(&delexed, &map).unwrap(), original);
    }
}
