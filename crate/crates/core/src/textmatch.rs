//! Case-insensitive, token-boundary-anchored pattern scanning shared by the
//! fidelity auditor and the feature counter. All offsets refer to a lowercased
//! copy of the haystack; callers never need positions in the original string.

/// A candidate or accepted pattern occurrence. `tag` is caller-defined
/// (typically an index into a pattern table).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Span {
    pub start: usize,
    pub end: usize,
    pub tag: usize,
}

pub(crate) fn lowercase(text: &str) -> String {
    text.to_lowercase()
}

fn boundary_before(hay: &str, idx: usize) -> bool {
    hay[..idx].chars().next_back().map_or(true, |c| !c.is_alphanumeric())
}

fn boundary_after(hay: &str, idx: usize) -> bool {
    hay[idx..].chars().next().map_or(true, |c| !c.is_alphanumeric())
}

/// All token-bounded occurrences of `needle` in the (already lowercased)
/// haystack, as byte ranges.
pub(crate) fn find_occurrences(hay_lower: &str, needle_lower: &str) -> Vec<(usize, usize)> {
    if needle_lower.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut from = 0;
    while let Some(pos) = hay_lower[from..].find(needle_lower) {
        let start = from + pos;
        let end = start + needle_lower.len();
        if boundary_before(hay_lower, start) && boundary_after(hay_lower, end) {
            out.push((start, end));
        }
        from = start + hay_lower[start..].chars().next().map_or(1, |c| c.len_utf8());
    }
    out
}

/// Greedy longest-first, leftmost selection of non-overlapping spans from the
/// candidate list. Ties break on start offset, then tag, so the result is
/// fully deterministic.
pub(crate) fn select_nonoverlapping(mut candidates: Vec<Span>) -> Vec<Span> {
    candidates.sort_by(|a, b| {
        (b.end - b.start)
            .cmp(&(a.end - a.start))
            .then(a.start.cmp(&b.start))
            .then(a.tag.cmp(&b.tag))
    });
    let mut accepted: Vec<Span> = Vec::new();
    for c in candidates {
        if accepted.iter().all(|a| c.end <= a.start || c.start >= a.end) {
            accepted.push(c);
        }
    }
    accepted.sort_by_key(|s| s.start);
    accepted
}

/// Convenience: scan `patterns` (lowercased) over the haystack and return the
/// accepted non-overlapping matches tagged with the pattern index.
pub(crate) fn match_patterns(hay_lower: &str, patterns: &[String]) -> Vec<Span> {
    let mut candidates = Vec::new();
    for (tag, p) in patterns.iter().enumerate() {
        for (start, end) in find_occurrences(hay_lower, p) {
            candidates.push(Span { start, end, tag });
        }
    }
    select_nonoverlapping(candidates)
}
