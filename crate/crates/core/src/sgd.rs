//! The `.sgd` diagram format and the certificate file format.
//!
//! Line-oriented, `#` comments. A diagram file:
//!
//! ```text
//! sgd 1
//! V v1 a1.0 a2.0 a1.1
//! X x1 a2.1 a3.0 a4.0 a3.1 over=02
//! ```
//!
//! `V` lines give a graph vertex and its arc-ends in counterclockwise
//! rotation order; `X` lines give a crossing's four arc-ends in
//! counterclockwise order with `over=` naming the slot pair of the strand
//! passing over. Every arc-end token appears exactly once. `L` lines attach
//! free-text labels and are ignored by the reader.
//!
//! Serialization is canonical: vertex lines sorted by id, then crossing
//! lines sorted by id, arcs renumbered by first appearance. Certificates
//! are text documents naming an initial diagram (by path or inline) and a
//! `step cycle=<strand ids> face=<face id>` line per contraction.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use thiserror::Error;

use crate::diagram::{ArcId, Dart, Diagram, NodeId, OverPair};
use crate::disk::DiskSpec;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    fn new(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            msg: msg.into(),
        }
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn parse_prefixed_id(tok: &str, prefix: char, line: usize, col: usize) -> Result<u32, ParseError> {
    let rest = tok
        .strip_prefix(prefix)
        .ok_or_else(|| ParseError::new(line, col, format!("expected `{prefix}<number>`, got `{tok}`")))?;
    rest.parse::<u32>()
        .map_err(|_| ParseError::new(line, col, format!("expected `{prefix}<number>`, got `{tok}`")))
}

fn parse_dart(tok: &str, line: usize, col: usize) -> Result<Dart, ParseError> {
    let bad = || ParseError::new(line, col, format!("expected `a<number>.<0|1>`, got `{tok}`"));
    let body = tok.strip_prefix('a').ok_or_else(bad)?;
    let (arc, end) = body.split_once('.').ok_or_else(bad)?;
    let arc: ArcId = arc.parse().map_err(|_| bad())?;
    let end: u8 = match end {
        "0" => 0,
        "1" => 1,
        _ => return Err(bad()),
    };
    Ok(Dart::new(arc, end))
}

/// Column (1-based) of the `i`-th whitespace-separated token of `line`.
fn token_col(line: &str, index: usize) -> usize {
    let mut count = 0;
    let mut in_tok = false;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            in_tok = false;
        } else if !in_tok {
            in_tok = true;
            if count == index {
                return i + 1;
            }
            count += 1;
        }
    }
    line.len() + 1
}

/// Parse a diagram document.
pub fn parse(text: &str) -> Result<Diagram, ParseError> {
    let mut lines = text.lines().enumerate();
    let header = loop {
        match lines.next() {
            Some((i, raw)) => {
                let line = strip_comment(raw).trim();
                if line.is_empty() {
                    continue;
                }
                break (i + 1, line.to_string());
            }
            None => return Err(ParseError::new(1, 1, "missing `sgd 1` header")),
        }
    };
    if header.1 != "sgd 1" {
        return Err(ParseError::new(header.0, 1, "expected `sgd 1` header"));
    }

    let mut d = Diagram::new();
    let mut seen: BTreeMap<Dart, usize> = BTreeMap::new();
    for (i, raw) in lines {
        let lineno = i + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let mut record_dart = |d: Dart, tok_index: usize| -> Result<(), ParseError> {
            if let Some(&first) = seen.get(&d) {
                return Err(ParseError::new(
                    lineno,
                    token_col(raw, tok_index),
                    format!("arc-end {d} already placed on line {first}"),
                ));
            }
            seen.insert(d, lineno);
            Ok(())
        };
        match toks[0] {
            "V" => {
                if toks.len() < 2 {
                    return Err(ParseError::new(lineno, 1, "V line needs a vertex id"));
                }
                let id: NodeId = parse_prefixed_id(toks[1], 'v', lineno, token_col(raw, 1))?;
                if d.vertices().contains_key(&id) {
                    return Err(ParseError::new(
                        lineno,
                        token_col(raw, 1),
                        format!("duplicate vertex id v{id}"),
                    ));
                }
                let mut rot = Vec::new();
                for (k, tok) in toks[2..].iter().enumerate() {
                    let dart = parse_dart(tok, lineno, token_col(raw, k + 2))?;
                    record_dart(dart, k + 2)?;
                    rot.push(dart);
                }
                d.add_vertex(id, rot);
            }
            "X" => {
                if toks.len() != 7 {
                    return Err(ParseError::new(
                        lineno,
                        1,
                        "X line needs an id, four arc-ends and over=",
                    ));
                }
                let id: NodeId = parse_prefixed_id(toks[1], 'x', lineno, token_col(raw, 1))?;
                if d.crossings().contains_key(&id) {
                    return Err(ParseError::new(
                        lineno,
                        token_col(raw, 1),
                        format!("duplicate crossing id x{id}"),
                    ));
                }
                let mut ends = [Dart::new(0, 0); 4];
                for k in 0..4 {
                    let dart = parse_dart(toks[2 + k], lineno, token_col(raw, 2 + k))?;
                    record_dart(dart, 2 + k)?;
                    ends[k] = dart;
                }
                let over = match toks[6] {
                    "over=02" => OverPair::Slots02,
                    "over=13" => OverPair::Slots13,
                    other => {
                        return Err(ParseError::new(
                            lineno,
                            token_col(raw, 6),
                            format!("expected over=02 or over=13, got `{other}`"),
                        ))
                    }
                };
                d.add_crossing(id, ends, over);
            }
            "L" => {} // labels carry no structure
            other => {
                return Err(ParseError::new(
                    lineno,
                    1,
                    format!("unknown record `{other}`"),
                ));
            }
        }
    }

    for (&dart, &line) in &seen {
        if !seen.contains_key(&dart.mate()) {
            return Err(ParseError::new(
                line,
                1,
                format!("arc-end {} is never placed", dart.mate()),
            ));
        }
    }
    Ok(d)
}

/// Canonical serialization. Emits vertex lines sorted by id, then crossing
/// lines sorted by id, with arcs renumbered in order of first appearance.
pub fn serialize(d: &Diagram) -> String {
    let mut renumber: BTreeMap<ArcId, ArcId> = BTreeMap::new();
    let mut next: ArcId = 1;
    let mut map = |dart: Dart, renumber: &mut BTreeMap<ArcId, ArcId>| -> Dart {
        let id = *renumber.entry(dart.arc).or_insert_with(|| {
            let id = next;
            next += 1;
            id
        });
        Dart::new(id, dart.end)
    };
    let mut out = String::from("sgd 1\n");
    for (&id, rot) in d.vertices() {
        out.push_str(&format!("V v{id}"));
        for &dart in rot {
            out.push_str(&format!(" {}", map(dart, &mut renumber)));
        }
        out.push('\n');
    }
    for (&id, c) in d.crossings() {
        out.push_str(&format!("X x{id}"));
        for &dart in &c.ends {
            out.push_str(&format!(" {}", map(dart, &mut renumber)));
        }
        let over = match c.over {
            OverPair::Slots02 => "02",
            OverPair::Slots13 => "13",
        };
        out.push_str(&format!(" over={over}\n"));
    }
    out
}

/// Renumber a diagram's arcs exactly as `serialize` would, so that
/// in-memory diagrams can be compared with parsed canonical files.
pub fn canonicalize_arcs(d: &Diagram) -> Diagram {
    parse(&serialize(d)).expect("serialized diagram reparses")
}

/// Parse `cycle=s1,s2 face=F3` (the DiskSpec text form).
pub fn parse_disk_spec(text: &str) -> Result<DiskSpec, ParseError> {
    let mut cycle: Option<Vec<usize>> = None;
    let mut face: Option<usize> = None;
    for (k, tok) in text.split_whitespace().enumerate() {
        let col = token_col(text, k);
        if let Some(list) = tok.strip_prefix("cycle=") {
            let mut ids = Vec::new();
            for part in list.split(',') {
                let id = parse_prefixed_id(part, 's', 1, col)? as usize;
                if id == 0 {
                    return Err(ParseError::new(1, col, "strand ids start at s1"));
                }
                ids.push(id - 1);
            }
            cycle = Some(ids);
        } else if let Some(f) = tok.strip_prefix("face=") {
            let id = parse_prefixed_id(f, 'F', 1, col)? as usize;
            if id == 0 {
                return Err(ParseError::new(1, col, "face ids start at F1"));
            }
            face = Some(id - 1);
        } else {
            return Err(ParseError::new(
                1,
                col,
                format!("expected cycle=... or face=..., got `{tok}`"),
            ));
        }
    }
    match (cycle, face) {
        (Some(c), Some(f)) => Ok(DiskSpec::new(c, f)),
        _ => Err(ParseError::new(1, 1, "disk needs both cycle= and face=")),
    }
}

/// A parsed certificate document: the initial diagram plus contraction
/// steps in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateFile {
    pub initial: Diagram,
    pub steps: Vec<DiskSpec>,
}

impl fmt::Display for CertificateFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", write_certificate(self, None))
    }
}

/// Serialize a certificate. With `initial_path` set, the diagram is
/// referenced by path; otherwise its canonical body is inlined.
pub fn write_certificate(cert: &CertificateFile, initial_path: Option<&str>) -> String {
    let mut out = String::from("cert 1\n");
    match initial_path {
        Some(p) => out.push_str(&format!("initial {p}\n")),
        None => {
            out.push_str("initial inline\n");
            out.push_str(&serialize(&cert.initial));
            out.push_str("end\n");
        }
    }
    for s in &cert.steps {
        out.push_str(&format!("step {}\n", s.to_text()));
    }
    out
}

/// Parse a certificate document. `dir` resolves relative initial paths.
pub fn parse_certificate(text: &str, dir: Option<&Path>) -> Result<CertificateFile, ParseError> {
    let mut initial: Option<Diagram> = None;
    let mut steps = Vec::new();
    let mut lines = text.lines().enumerate().peekable();
    let mut saw_header = false;
    while let Some((i, raw)) = lines.next() {
        let lineno = i + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if !saw_header {
            if line != "cert 1" {
                return Err(ParseError::new(lineno, 1, "expected `cert 1` header"));
            }
            saw_header = true;
            continue;
        }
        if let Some(rest) = line.strip_prefix("initial") {
            let rest = rest.trim();
            if rest == "inline" {
                let mut body = String::new();
                let mut closed = false;
                for (_, raw) in lines.by_ref() {
                    if strip_comment(raw).trim() == "end" {
                        closed = true;
                        break;
                    }
                    body.push_str(raw);
                    body.push('\n');
                }
                if !closed {
                    return Err(ParseError::new(lineno, 1, "inline diagram not closed by `end`"));
                }
                initial = Some(parse(&body)?);
            } else if rest.is_empty() {
                return Err(ParseError::new(lineno, 1, "initial needs a path or `inline`"));
            } else {
                let path = match dir {
                    Some(base) => base.join(rest),
                    None => Path::new(rest).to_path_buf(),
                };
                let body = std::fs::read_to_string(&path).map_err(|e| {
                    ParseError::new(lineno, 1, format!("cannot read {}: {e}", path.display()))
                })?;
                initial = Some(parse(&body)?);
            }
        } else if let Some(rest) = line.strip_prefix("step") {
            steps.push(parse_disk_spec(rest.trim())?);
        } else {
            return Err(ParseError::new(lineno, 1, format!("unknown record `{line}`")));
        }
    }
    if !saw_header {
        return Err(ParseError::new(1, 1, "missing `cert 1` header"));
    }
    let initial = initial.ok_or_else(|| ParseError::new(1, 1, "certificate has no initial diagram"))?;
    Ok(CertificateFile { initial, steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::shapes::*;

    #[test]
    fn marker_circle_round_trip() {
        let d = parse("sgd 1\nV v1 a1.0 a1.1\n").unwrap();
        assert_eq!(d, marked_circle());
        assert_eq!(serialize(&d), "sgd 1\nV v1 a1.0 a1.1\n");
    }

    #[test]
    fn hopf_parses_and_validates() {
        let text = serialize(&hopf_link());
        let d = parse(&text).unwrap();
        assert!(d.validate().is_valid());
        assert_eq!(d.faces().len(), 4);
        assert_eq!(serialize(&d), text);
    }

    #[test]
    fn duplicate_arc_end_named() {
        let err = parse("sgd 1\nV v1 a1.0 a1.0\n").unwrap_err();
        assert!(err.msg.contains("a1.0"), "{err}");
        assert_eq!(err.line, 2);
    }

    #[test]
    fn missing_mate_reported() {
        let err = parse("sgd 1\nV v1 a1.0\n").unwrap_err();
        assert!(err.msg.contains("a1.1"), "{err}");
    }

    #[test]
    fn header_required() {
        assert!(parse("V v1 a1.0 a1.1\n").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn bad_over_flag() {
        let err =
            parse("sgd 1\nX x1 a1.0 a2.0 a1.1 a2.1 over=12\n").unwrap_err();
        assert!(err.msg.contains("over="));
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let d = parse("# intro\nsgd 1\n\n# circle\nV v1 a1.0 a1.1  # rotation\n").unwrap();
        assert_eq!(d, marked_circle());
    }

    #[test]
    fn serialization_renumbers_by_first_appearance() {
        let mut d = Diagram::new();
        d.add_vertex(1, vec![Dart::new(7, 0), Dart::new(7, 1)]);
        assert_eq!(serialize(&d), "sgd 1\nV v1 a1.0 a1.1\n");
        // Reparsing the canonical form is a fixed point.
        let c = canonicalize_arcs(&d);
        assert_eq!(serialize(&c), serialize(&d));
        assert_eq!(parse(&serialize(&c)).unwrap(), c);
    }

    #[test]
    fn disk_spec_text_round_trip() {
        let spec = DiskSpec::new(vec![0, 2], 4);
        assert_eq!(spec.to_text(), "cycle=s1,s3 face=F5");
        assert_eq!(parse_disk_spec(&spec.to_text()).unwrap(), spec);
        assert!(parse_disk_spec("cycle=s0 face=F1").is_err());
        assert!(parse_disk_spec("face=F1").is_err());
    }

    #[test]
    fn certificate_inline_round_trip() {
        let cert = CertificateFile {
            initial: canonicalize_arcs(&hopf_link()),
            steps: vec![DiskSpec::new(vec![0], 1)],
        };
        let text = write_certificate(&cert, None);
        let parsed = parse_certificate(&text, None).unwrap();
        assert_eq!(parsed, cert);
    }

    #[test]
    fn certificate_needs_initial() {
        assert!(parse_certificate("cert 1\nstep cycle=s1 face=F1\n", None).is_err());
    }
}
