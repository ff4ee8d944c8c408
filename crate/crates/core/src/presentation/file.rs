//! Text format for presentations:
//!
//! ```text
//! field Q                  # or: field Fp 32003
//! base R { vars t; relations t^2 }
//! algebra A over R { mode graded; vars x, y; relations x^2, x*y }
//! ```
//!
//! Body statements are `vars`, `relations`, `mode`, `prime` (generators of
//! an asserted prime ideal) and `flat asserted`, separated by `;` or line
//! breaks.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::poly::{Field, DEFAULT_PRIME};

use super::{AlgebraPresentation, BaseDescriptor, Mode, PresentationError};

/// A parsed presentation file.
#[derive(Clone, Debug)]
pub struct PresentationFile {
    pub field: Field,
    pub bases: Vec<Arc<AlgebraPresentation>>,
    pub algebras: Vec<AlgebraPresentation>,
}

impl PresentationFile {
    /// Looks up an algebra, then a base, by name.
    pub fn get(&self, name: &str) -> Result<AlgebraPresentation, PresentationError> {
        if let Some(a) = self.algebras.iter().find(|a| a.name() == name) {
            return Ok(a.clone());
        }
        if let Some(b) = self.bases.iter().find(|b| b.name() == name) {
            return Ok((**b).clone());
        }
        Err(PresentationError::UnknownAlgebra(name.to_string()))
    }

    pub fn names(&self) -> Vec<&str> {
        self.algebras.iter().map(AlgebraPresentation::name).collect()
    }
}

fn err(line: usize, message: impl Into<String>) -> PresentationError {
    PresentationError::Parse { line, message: message.into() }
}

pub fn parse_field(text: &str) -> Option<Field> {
    let t = text.trim();
    if t == "Q" || t == "QQ" {
        return Some(Field::Rational);
    }
    let rest = t.strip_prefix("Fp").or_else(|| t.strip_prefix("F_")).or_else(|| t.strip_prefix("GF"))?;
    let rest = rest.trim_start_matches([':', '(', ' ']).trim_end_matches(')').trim();
    let p: u64 = if rest.is_empty() { DEFAULT_PRIME } else { rest.parse().ok()? };
    (p < (1 << 31) && Field::is_prime_modulus(p)).then_some(Field::Prime(p))
}

fn split_list(text: &str) -> Vec<String> {
    text.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

struct Body {
    vars: Vec<String>,
    relations: Vec<String>,
    mode: Option<Mode>,
    prime: Option<Vec<String>>,
    flat_asserted: bool,
}

fn parse_body(text: &str, first_line: usize) -> Result<Body, PresentationError> {
    let mut body = Body { vars: Vec::new(), relations: Vec::new(), mode: None, prime: None, flat_asserted: false };
    for (offset, line) in text.split('\n').enumerate() {
        let line_no = first_line + offset;
        for stmt in line.split(';') {
            let stmt = stmt.trim();
            if stmt.is_empty() {
                continue;
            }
            let (kw, rest) = stmt.split_once(char::is_whitespace).unwrap_or((stmt, ""));
            match kw {
                "vars" => body.vars.extend(split_list(rest)),
                "relations" => body.relations.extend(split_list(rest)),
                "mode" => {
                    body.mode = Some(match rest.trim() {
                        "graded" => Mode::Graded,
                        "local" => Mode::Local,
                        "affine" => Mode::Affine,
                        other => return Err(err(line_no, format!("unknown mode `{other}`"))),
                    })
                }
                "prime" => body.prime = Some(split_list(rest)),
                "flat" if rest.trim() == "asserted" => body.flat_asserted = true,
                other => return Err(err(line_no, format!("unknown statement `{other}`"))),
            }
        }
    }
    Ok(body)
}

fn build(
    name: &str,
    base: BaseDescriptor,
    body: Body,
    line: usize,
) -> Result<AlgebraPresentation, PresentationError> {
    let wrap = |e: PresentationError| match e {
        PresentationError::Parse { .. } => e,
        other => err(line, format!("in `{name}`: {other}")),
    };
    let mut a = AlgebraPresentation::new(name, base, &body.vars, &body.relations, body.mode.unwrap_or(Mode::Graded))
        .map_err(wrap)?;
    if let Some(prime) = body.prime {
        let ring = a.ring().clone();
        let gens = prime.iter().map(|g| ring.parse(g)).collect::<Result<Vec<_>, _>>().map_err(|e| wrap(e.into()))?;
        let ideal = crate::groebner::Ideal::new(&ring, gens).map_err(|e| wrap(e.into()))?;
        a = a.with_prime(ideal)?;
    }
    Ok(a.with_flat_asserted(body.flat_asserted))
}

/// Parses a presentation file. `field_override` replaces the declared field.
pub fn parse_presentation_file(text: &str, field_override: Option<Field>) -> Result<PresentationFile, PresentationError> {
    let cleaned: String = text.lines().map(|l| l.split('#').next().unwrap_or("")).collect::<Vec<_>>().join("\n");
    let mut field: Option<Field> = None;
    let mut bases: Vec<Arc<AlgebraPresentation>> = Vec::new();
    let mut algebras: Vec<AlgebraPresentation> = Vec::new();
    let mut names: HashSet<String> = HashSet::new();

    let bytes: Vec<char> = cleaned.chars().collect();
    let mut pos = 0;
    let line_at = |p: usize| bytes[..p.min(bytes.len())].iter().filter(|c| **c == '\n').count() + 1;
    while pos < bytes.len() {
        while pos < bytes.len() && bytes[pos].is_whitespace() {
            pos += 1;
        }
        if pos >= bytes.len() {
            break;
        }
        let line = line_at(pos);
        let start = pos;
        while pos < bytes.len() && !bytes[pos].is_whitespace() && bytes[pos] != '{' {
            pos += 1;
        }
        let keyword: String = bytes[start..pos].iter().collect();
        match keyword.as_str() {
            "field" => {
                let end = bytes[pos..].iter().position(|c| *c == '\n').map_or(bytes.len(), |k| pos + k);
                let spec: String = bytes[pos..end].iter().collect();
                let declared = parse_field(&spec).ok_or_else(|| err(line, format!("unknown field `{}`", spec.trim())))?;
                if field.is_some() {
                    return Err(err(line, "field declared twice"));
                }
                if !bases.is_empty() || !algebras.is_empty() {
                    return Err(err(line, "field must be declared before algebras"));
                }
                field = Some(field_override.unwrap_or(declared));
                pos = end;
            }
            "base" | "algebra" => {
                let open = bytes[pos..].iter().position(|c| *c == '{').map(|k| pos + k).ok_or_else(|| err(line, "expected `{`"))?;
                let header: String = bytes[pos..open].iter().collect();
                let close = bytes[open..].iter().position(|c| *c == '}').map(|k| open + k).ok_or_else(|| err(line, "missing `}`"))?;
                let body_text: String = bytes[open + 1..close].iter().collect();
                let body = parse_body(&body_text, line_at(open))?;
                pos = close + 1;

                let words: Vec<&str> = header.split_whitespace().collect();
                let (name, over) = match words.as_slice() {
                    [name] => (*name, None),
                    [name, "over", base] => (*name, Some(*base)),
                    _ => return Err(err(line, format!("malformed header `{}`", header.trim()))),
                };
                if !names.insert(name.to_string()) {
                    return Err(err(line, format!("duplicate name `{name}`")));
                }
                let f = field.or(field_override).unwrap_or(Field::Rational);
                field = Some(f);
                let base = match over {
                    None => BaseDescriptor::PrimeField(f),
                    Some(b) if keyword == "base" => return Err(err(line, format!("base `{name}` cannot lie over `{b}`"))),
                    Some(b) => match bases.iter().find(|x| x.name() == b) {
                        Some(x) => BaseDescriptor::Algebra(Arc::clone(x)),
                        None if parse_field(b) == Some(f) => BaseDescriptor::PrimeField(f),
                        None => return Err(err(line, format!("unknown base `{b}`"))),
                    },
                };
                let a = build(name, base, body, line)?;
                if keyword == "base" {
                    bases.push(Arc::new(a));
                } else {
                    algebras.push(a);
                }
            }
            other => return Err(err(line, format!("unexpected `{other}`"))),
        }
    }
    Ok(PresentationFile { field: field.or(field_override).unwrap_or(Field::Rational), bases, algebras })
}

fn field_line(f: Field) -> String {
    match f {
        Field::Rational => "field Q".to_string(),
        Field::Prime(p) => format!("field Fp {p}"),
    }
}

fn render_body(a: &AlgebraPresentation) -> String {
    let mut parts = vec![format!("mode {}", a.mode()), format!("vars {}", a.vars().join(", "))];
    let rels: Vec<String> = a.relations().gens().iter().map(ToString::to_string).collect();
    parts.push(format!("relations {}", rels.join(", ")));
    if let Some(p) = a.prime() {
        let gens: Vec<String> = p.gens().iter().map(ToString::to_string).collect();
        parts.push(format!("prime {}", gens.join(", ")));
    }
    if a.flat_asserted() {
        parts.push("flat asserted".to_string());
    }
    parts.join("; ")
}

/// Renders algebras (and their bases) so that parsing gives them back.
pub fn render_presentation_file(items: &[&AlgebraPresentation]) -> String {
    let mut out = String::new();
    let field = items.first().map_or(Field::Rational, |a| a.field());
    writeln!(out, "{}", field_line(field)).unwrap();
    let mut seen: HashSet<String> = HashSet::new();
    for a in items {
        if let BaseDescriptor::Algebra(b) = a.base() {
            if seen.insert(b.name().to_string()) {
                writeln!(out, "base {} {{ {} }}", b.name(), render_body(b)).unwrap();
            }
        }
    }
    for a in items {
        if !seen.insert(a.name().to_string()) {
            continue;
        }
        match a.base() {
            BaseDescriptor::PrimeField(_) => writeln!(out, "algebra {} {{ {} }}", a.name(), render_body(a)).unwrap(),
            BaseDescriptor::Algebra(b) => {
                writeln!(out, "algebra {} over {} {{ {} }}", a.name(), b.name(), render_body(a)).unwrap()
            }
        }
    }
    out
}
