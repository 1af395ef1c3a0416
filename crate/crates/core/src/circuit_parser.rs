//! Line-oriented `.circuit` format.
//!
//! One statement per line, whitespace-separated tokens, `#` starts a comment.
//! Statement order is propagation order.
//!
//! ```text
//! space <name> labels=<l1,l2,...>
//! bs <space> couple=<la,lb> convention=<paper|symmetric>
//! switch1234 <space>
//! wavefilter <space> phi=<angle> transmit_to=<next|detector:NAME> reflect_to=<next|detector:NAME>
//! merge <spaceA,spaceB> map=<la.lb>-><label>,... leak_to=detector:NAME,... into=<space>
//! detector <name> space=<space> label=<label>
//! ```
//!
//! Every element except `detector` also takes optional `at=<space>.<label>`
//! (act only in that arm) and `name=<text>` (trace name); detectors take `at`.
//! Angles are decimal floats or π literals (`pi`, `pi/4`, `3*pi/4`).
//!
//! [`render_circuit`] emits the canonical form: declarations first, lowercase
//! keywords, options sorted by key, no comments, LF line endings.

use std::fmt;

use crate::angle::parse_angle;
use crate::error::Error;
use crate::optical_network::{BsConvention, Circuit, Element, ElementKind, Port, Sink};
use crate::qstate::SpaceLabel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParseErrorKind {
    UnknownElement,
    BadArity,
    UndeclaredSpace,
    BadNumber,
    DuplicateName,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {:?}: {}", self.line, self.column, self.kind, self.message)
    }
}

impl std::error::Error for ParseError {}

/// A parsed item with its 1-based source line.
#[derive(Debug, Clone, PartialEq)]
pub struct Located<T> {
    pub line: usize,
    pub item: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CircuitDoc {
    pub source_name: String,
    pub declarations: Vec<Located<SpaceLabel>>,
    pub element_lines: Vec<Located<Element>>,
}

impl CircuitDoc {
    pub fn spaces(&self) -> Vec<SpaceLabel> {
        self.declarations.iter().map(|d| d.item.clone()).collect()
    }

    pub fn elements(&self) -> Vec<Element> {
        self.element_lines.iter().map(|e| e.item.clone()).collect()
    }

    pub fn circuit(&self) -> crate::Result<Circuit> {
        Circuit::new(self.spaces(), self.elements())
    }

    /// Equality of declarations and elements, ignoring line numbers and source name.
    pub fn same_structure(&self, other: &CircuitDoc) -> bool {
        self.spaces() == other.spaces() && self.elements() == other.elements()
    }
}

pub fn parse_circuit(text: &str) -> Result<CircuitDoc, ParseError> {
    parse_circuit_named("<input>", text)
}

pub fn parse_circuit_named(source_name: &str, text: &str) -> Result<CircuitDoc, ParseError> {
    let mut doc = CircuitDoc {
        source_name: source_name.to_string(),
        declarations: Vec::new(),
        element_lines: Vec::new(),
    };
    let mut detector_statements: Vec<String> = Vec::new();
    for (i, raw) in text.split('\n').enumerate() {
        let line = i + 1;
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let content = raw.split('#').next().unwrap_or("");
        let tokens = tokenize(content);
        if tokens.is_empty() {
            continue;
        }
        let mut st = Statement::new(line, &tokens);
        let declared = doc.spaces();
        match st.keyword.as_str() {
            "space" => {
                let decl = st.parse_space(&declared)?;
                doc.declarations.push(Located { line, item: decl });
            }
            "bs" | "switch1234" | "wavefilter" | "merge" | "detector" => {
                let element = st.parse_element(&declared, &detector_statements)?;
                if let ElementKind::Detector { .. } = element.kind {
                    detector_statements.push(element.name.clone().expect("detectors are named"));
                }
                doc.element_lines.push(Located { line, item: element });
            }
            _ => {
                return Err(st.error(
                    0,
                    ParseErrorKind::UnknownElement,
                    format!("unknown statement '{}'", tokens[0].text),
                ))
            }
        }
    }
    Ok(doc)
}

#[derive(Debug, Clone)]
struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokenize(content: &str) -> Vec<Token<'_>> {
    let mut tokens = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    let mut column = 0;
    for (byte, ch) in content.char_indices() {
        column += 1;
        if ch.is_whitespace() {
            if let Some((b, c)) = start.take() {
                tokens.push(Token { text: &content[b..byte], column: c });
            }
        } else if start.is_none() {
            start = Some((byte, column));
        }
    }
    if let Some((b, c)) = start {
        tokens.push(Token { text: &content[b..], column: c });
    }
    tokens
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn is_label(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

/// One tokenized statement: keyword, positional arguments, and `key=value` options.
struct Statement<'a> {
    line: usize,
    keyword: String,
    keyword_column: usize,
    positional: Vec<Token<'a>>,
    options: Vec<(String, Token<'a>)>,
    used: Vec<bool>,
}

impl<'a> Statement<'a> {
    fn new(line: usize, tokens: &[Token<'a>]) -> Self {
        let mut positional = Vec::new();
        let mut options = Vec::new();
        for t in &tokens[1..] {
            match t.text.split_once('=') {
                Some((k, v)) => options.push((
                    k.to_ascii_lowercase(),
                    Token { text: v, column: t.column + k.chars().count() + 1 },
                )),
                None => positional.push(t.clone()),
            }
        }
        let used = vec![false; options.len()];
        Statement {
            line,
            keyword: tokens[0].text.to_ascii_lowercase(),
            keyword_column: tokens[0].column,
            positional,
            options,
            used,
        }
    }

    fn error(&self, column: usize, kind: ParseErrorKind, message: String) -> ParseError {
        let column = if column == 0 { self.keyword_column } else { column };
        ParseError { line: self.line, column, message, kind }
    }

    fn arity(&self, msg: String) -> ParseError {
        self.error(0, ParseErrorKind::BadArity, msg)
    }

    /// Checks positional count and option keys before anything else is read.
    fn check_shape(&self, positional: usize, required: &[&str], optional: &[&str]) -> Result<(), ParseError> {
        if self.positional.len() != positional {
            let col = self.positional.get(positional).map_or(0, |t| t.column);
            return Err(self.error(
                col,
                ParseErrorKind::BadArity,
                format!(
                    "'{}' takes {positional} positional argument(s), got {}",
                    self.keyword,
                    self.positional.len()
                ),
            ));
        }
        for (i, (k, v)) in self.options.iter().enumerate() {
            let key_col = v.column - k.chars().count() - 1;
            if !required.contains(&k.as_str()) && !optional.contains(&k.as_str()) {
                return Err(self.error(
                    key_col,
                    ParseErrorKind::BadArity,
                    format!("'{}' does not take option '{k}'", self.keyword),
                ));
            }
            if self.options[..i].iter().any(|(k2, _)| k2 == k) {
                return Err(self.error(key_col, ParseErrorKind::BadArity, format!("option '{k}' given twice")));
            }
            if v.text.is_empty() {
                return Err(self.error(v.column, ParseErrorKind::BadArity, format!("option '{k}' has no value")));
            }
        }
        for r in required {
            if !self.options.iter().any(|(k, _)| k == r) {
                return Err(self.arity(format!("'{}' requires option '{r}='", self.keyword)));
            }
        }
        Ok(())
    }

    fn opt(&mut self, key: &str) -> Option<Token<'a>> {
        let i = self.options.iter().position(|(k, _)| k == key)?;
        self.used[i] = true;
        Some(self.options[i].1.clone())
    }

    fn space<'d>(&self, declared: &'d [SpaceLabel], tok: &Token<'_>) -> Result<&'d SpaceLabel, ParseError> {
        declared.iter().find(|f| f.name() == tok.text).ok_or_else(|| {
            self.error(tok.column, ParseErrorKind::UndeclaredSpace, format!("space '{}' is not declared", tok.text))
        })
    }

    fn label_in(&self, factor: &SpaceLabel, label: &str, column: usize) -> Result<String, ParseError> {
        if factor.index_of(label).is_none() {
            return Err(self.error(
                column,
                ParseErrorKind::UndeclaredSpace,
                format!("label '{label}' is not declared in space '{}'", factor.name()),
            ));
        }
        Ok(label.to_string())
    }

    fn parse_space(&mut self, declared: &[SpaceLabel]) -> Result<SpaceLabel, ParseError> {
        self.check_shape(1, &["labels"], &[])?;
        let name = self.positional[0].clone();
        if !is_identifier(name.text) {
            return Err(self.error(name.column, ParseErrorKind::BadArity, format!("'{}' is not a valid space name", name.text)));
        }
        if declared.iter().any(|f| f.name() == name.text) {
            return Err(self.error(name.column, ParseErrorKind::DuplicateName, format!("space '{}' declared twice", name.text)));
        }
        let tok = self.opt("labels").expect("required");
        let labels: Vec<&str> = tok.text.split(',').collect();
        for (i, l) in labels.iter().enumerate() {
            if !is_label(l) {
                return Err(self.error(tok.column, ParseErrorKind::BadArity, format!("'{l}' is not a valid label")));
            }
            if labels[..i].contains(l) {
                return Err(self.error(tok.column, ParseErrorKind::DuplicateName, format!("label '{l}' repeated")));
            }
        }
        SpaceLabel::new(name.text, &labels).map_err(|e| self.arity(e.to_string()))
    }

    fn parse_element(&mut self, declared: &[SpaceLabel], detectors: &[String]) -> Result<Element, ParseError> {
        let common = ["at", "name"];
        let mut element = match self.keyword.as_str() {
            "bs" => {
                self.check_shape(1, &["couple", "convention"], &common)?;
                let factor = self.space(declared, &self.positional[0])?.clone();
                let couple = self.opt("couple").expect("required");
                let parts: Vec<&str> = couple.text.split(',').collect();
                if parts.len() != 2 {
                    return Err(self.error(couple.column, ParseErrorKind::BadArity, "couple= takes exactly two labels".into()));
                }
                let a = self.label_in(&factor, parts[0], couple.column)?;
                let b = self.label_in(&factor, parts[1], couple.column)?;
                if a == b {
                    return Err(self.error(couple.column, ParseErrorKind::BadArity, "couple= needs two distinct labels".into()));
                }
                let conv_tok = self.opt("convention").expect("required");
                let convention = BsConvention::from_keyword(&conv_tok.text.to_ascii_lowercase()).ok_or_else(|| {
                    self.error(conv_tok.column, ParseErrorKind::BadArity, format!("unknown convention '{}'", conv_tok.text))
                })?;
                Element::beam_splitter(factor.name(), &a, &b, convention)
            }
            "switch1234" => {
                self.check_shape(1, &[], &common)?;
                let tok = self.positional[0].clone();
                let factor = self.space(declared, &tok)?;
                if factor.dim() != 4 {
                    return Err(self.error(tok.column, ParseErrorKind::BadArity, format!("space '{}' must have 4 labels", tok.text)));
                }
                Element::mode_switch(factor.name())
            }
            "wavefilter" => {
                self.check_shape(1, &["phi", "transmit_to", "reflect_to"], &common)?;
                let tok = self.positional[0].clone();
                let factor = self.space(declared, &tok)?;
                if factor.dim() != 4 {
                    return Err(self.error(tok.column, ParseErrorKind::BadArity, format!("space '{}' must have 4 labels", tok.text)));
                }
                let name = factor.name().to_string();
                let phi_tok = self.opt("phi").expect("required");
                let phi = parse_angle(phi_tok.text)
                    .map_err(|m| self.error(phi_tok.column, ParseErrorKind::BadNumber, m))?;
                let transmit_tok = self.opt("transmit_to").expect("required");
                let transmit_to = self.sink(&transmit_tok)?;
                let reflect_tok = self.opt("reflect_to").expect("required");
                let reflect_to = self.sink(&reflect_tok)?;
                Element::wave_filter(&name, phi, transmit_to, reflect_to)
            }
            "merge" => {
                self.check_shape(1, &["map", "leak_to", "into"], &common)?;
                let inputs_tok = self.positional[0].clone();
                let names: Vec<&str> = inputs_tok.text.split(',').collect();
                if names.len() != 2 {
                    return Err(self.error(inputs_tok.column, ParseErrorKind::BadArity, "merge takes two comma-separated spaces".into()));
                }
                let first = self.space(declared, &Token { text: names[0], column: inputs_tok.column })?.clone();
                let second = self.space(declared, &Token { text: names[1], column: inputs_tok.column })?.clone();
                let into_tok = self.opt("into").expect("required");
                let into = self.space(declared, &into_tok)?.clone();
                let map_tok = self.opt("map").expect("required");
                let mut map = Vec::new();
                for entry in map_tok.text.split(',') {
                    let bad = || self.error(map_tok.column, ParseErrorKind::BadArity, format!("malformed map entry '{entry}'"));
                    let (pair, target) = entry.split_once("->").ok_or_else(bad)?;
                    let (la, lb) = pair.split_once('.').ok_or_else(bad)?;
                    let la = self.label_in(&first, la, map_tok.column)?;
                    let lb = self.label_in(&second, lb, map_tok.column)?;
                    let target = self.label_in(&into, target, map_tok.column)?;
                    map.push(((la, lb), target));
                }
                let leak_tok = self.opt("leak_to").expect("required");
                let mut leak_to = Vec::new();
                for part in leak_tok.text.split(',') {
                    match self.sink(&Token { text: part, column: leak_tok.column })? {
                        Sink::Detector(n) => leak_to.push(n),
                        Sink::Next => {
                            return Err(self.error(leak_tok.column, ParseErrorKind::BadArity, "leak_to entries must be detectors".into()))
                        }
                    }
                }
                Element {
                    kind: ElementKind::PathMerge {
                        inputs: (first.name().into(), second.name().into()),
                        map,
                        leak_to,
                        into: into.name().into(),
                    },
                    at: None,
                    name: None,
                }
            }
            "detector" => {
                self.check_shape(1, &["space", "label"], &["at"])?;
                let name = self.positional[0].clone();
                if !is_identifier(name.text) {
                    return Err(self.error(name.column, ParseErrorKind::BadArity, format!("'{}' is not a valid detector name", name.text)));
                }
                if detectors.iter().any(|d| d == name.text) {
                    return Err(self.error(name.column, ParseErrorKind::DuplicateName, format!("detector '{}' declared twice", name.text)));
                }
                let space_tok = self.opt("space").expect("required");
                let factor = self.space(declared, &space_tok)?.clone();
                let label_tok = self.opt("label").expect("required");
                let label = self.label_in(&factor, label_tok.text, label_tok.column)?;
                Element::detector(name.text, factor.name(), &label)
            }
            _ => unreachable!("keyword dispatched by caller"),
        };
        if let Some(tok) = self.opt("at") {
            let (space, label) = tok.text.split_once('.').ok_or_else(|| {
                self.error(tok.column, ParseErrorKind::BadArity, "at= expects <space>.<label>".into())
            })?;
            let factor = self.space(declared, &Token { text: space, column: tok.column })?.clone();
            let label = self.label_in(&factor, label, tok.column)?;
            element.at = Some(Port::new(space, label));
        }
        if let Some(tok) = self.opt("name") {
            element.name = Some(tok.text.to_string());
        }
        debug_assert!(self.used.iter().all(|u| *u));
        element.validate(declared).map_err(|e| {
            let kind = match e {
                Error::Label(_) => ParseErrorKind::UndeclaredSpace,
                _ => ParseErrorKind::BadArity,
            };
            self.error(0, kind, e.to_string())
        })?;
        Ok(element)
    }

    fn sink(&self, tok: &Token<'_>) -> Result<Sink, ParseError> {
        if tok.text.eq_ignore_ascii_case("next") {
            return Ok(Sink::Next);
        }
        match tok.text.split_once(':') {
            Some((kw, name)) if kw.eq_ignore_ascii_case("detector") && is_identifier(name) => {
                Ok(Sink::Detector(name.to_string()))
            }
            _ => Err(self.error(
                tok.column,
                ParseErrorKind::BadArity,
                format!("expected 'next' or 'detector:NAME', got '{}'", tok.text),
            )),
        }
    }
}

/// Canonical text of a document. Parsing the output yields a structurally
/// identical document, and rendering is idempotent.
pub fn render_circuit(doc: &CircuitDoc) -> String {
    let mut out = String::new();
    for d in &doc.declarations {
        out.push_str(&format!("space {} labels={}\n", d.item.name(), d.item.labels().join(",")));
    }
    for e in &doc.element_lines {
        out.push_str(&render_element(&e.item));
        out.push('\n');
    }
    out
}

fn render_element(e: &Element) -> String {
    let mut opts: Vec<(&str, String)> = Vec::new();
    let (keyword, positional) = match &e.kind {
        ElementKind::BeamSplitter { space, couple, convention } => {
            opts.push(("couple", format!("{},{}", couple.0, couple.1)));
            opts.push(("convention", convention.keyword().into()));
            ("bs", space.clone())
        }
        ElementKind::ModeSwitch { space } => ("switch1234", space.clone()),
        ElementKind::WaveFilter { space, phi, transmit_to, reflect_to } => {
            opts.push(("phi", format!("{phi}")));
            opts.push(("transmit_to", transmit_to.to_string()));
            opts.push(("reflect_to", reflect_to.to_string()));
            ("wavefilter", space.clone())
        }
        ElementKind::PathMerge { inputs, map, leak_to, into } => {
            let m: Vec<String> = map.iter().map(|((a, b), t)| format!("{a}.{b}->{t}")).collect();
            let l: Vec<String> = leak_to.iter().map(|n| format!("detector:{n}")).collect();
            opts.push(("map", m.join(",")));
            opts.push(("leak_to", l.join(",")));
            opts.push(("into", into.clone()));
            ("merge", format!("{},{}", inputs.0, inputs.1))
        }
        ElementKind::Detector { space, label } => {
            opts.push(("space", space.clone()));
            opts.push(("label", label.clone()));
            ("detector", e.name.clone().expect("detectors are named"))
        }
    };
    if let Some(p) = &e.at {
        opts.push(("at", p.to_string()));
    }
    if let (Some(n), false) = (&e.name, matches!(e.kind, ElementKind::Detector { .. })) {
        opts.push(("name", n.clone()));
    }
    opts.sort_by(|a, b| a.0.cmp(b.0));
    let mut line = format!("{keyword} {positional}");
    for (k, v) in opts {
        line.push_str(&format!(" {k}={v}"));
    }
    line
}
