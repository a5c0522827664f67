//! Line-oriented `key = value` documents.
//!
//! ```text
//! document = { line } ;
//! line     = ws , [ comment | field ] , ws , newline ;
//! comment  = "#" , { any character except newline } ;
//! field    = key , ws , "=" , ws , value ;
//! key      = ident , { "." , ident } ;
//! ident    = ( letter | "_" ) , { letter | digit | "_" } ;
//! value    = number | bool | word | list ;
//! list     = "[" , ws , [ value , { ws , "," , ws , value } ] , ws , "]" ;
//! number   = [ "-" | "+" ] , digits , [ "." , digits ] , [ ( "e" | "E" ) , [ "-" | "+" ] , digits ] ;
//!            (digits alone, within 64-bit range, read as an integer)
//! bool     = "true" | "false" ;
//! word     = letter , { letter | digit | "_" | "-" } ;
//! ws       = { " " | "\t" } ;
//! ```
//!
//! A point is a two-number list `[x, y]`; a triangle is a list of three
//! points. Emitted numbers carry 17 significant digits, so a parsed
//! document re-emits byte-identically.

use std::fmt::{self, Write as _};

use pedal_core::{Point, Triangle};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    /// Written without a fraction or exponent.
    Integer(i64),
    Number(f64),
    Bool(bool),
    Word(String),
    List(Vec<Value>),
}

impl Value {
    pub fn point(p: Point) -> Value {
        Value::List(vec![Value::Number(p.x), Value::Number(p.y)])
    }

    pub fn triangle(t: &Triangle) -> Value {
        Value::List(t.vertices().into_iter().map(Value::point).collect())
    }

    pub fn numbers(xs: impl IntoIterator<Item = f64>) -> Value {
        Value::List(xs.into_iter().map(Value::Number).collect())
    }

    pub fn word(s: impl Into<String>) -> Value {
        Value::Word(s.into())
    }

    fn as_number(&self) -> Option<f64> {
        match self {
            Value::Number(x) => Some(*x),
            Value::Integer(n) => Some(*n as f64),
            _ => None,
        }
    }

    fn as_point(&self) -> Option<Point> {
        match self {
            Value::List(items) if items.len() == 2 => {
                Some(Point::new(items[0].as_number()?, items[1].as_number()?))
            }
            _ => None,
        }
    }
}

/// Formats `x` with 17 significant digits.
pub fn format_number(x: f64) -> String {
    format!("{x:.16e}")
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Integer(n) => write!(f, "{n}"),
            Value::Number(x) => f.write_str(&format_number(*x)),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Word(w) => f.write_str(w),
            Value::List(items) => {
                f.write_char('[')?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{item}")?;
                }
                f.write_char(']')
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Entry {
    /// Text after the `#`, verbatim.
    Comment(String),
    Field {
        key: String,
        value: Value,
    },
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Document {
    pub entries: Vec<Entry>,
}

impl Document {
    pub fn new() -> Self {
        Document::default()
    }

    pub fn comment(&mut self, text: &str) -> &mut Self {
        self.entries.push(Entry::Comment(format!(" {text}")));
        self
    }

    /// Appends a field. Panics on a malformed or duplicate key; keys are
    /// program constants.
    pub fn set(&mut self, key: &str, value: Value) -> &mut Self {
        assert!(valid_key(key), "malformed key {key:?}");
        assert!(self.get(key).is_none(), "duplicate key {key:?}");
        self.entries.push(Entry::Field {
            key: key.to_string(),
            value,
        });
        self
    }

    pub fn number(&mut self, key: &str, x: f64) -> &mut Self {
        self.set(key, Value::Number(x))
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.iter().find_map(|e| match e {
            Entry::Field { key: k, value } if k == key => Some(value),
            _ => None,
        })
    }

    pub fn fields(&self) -> impl Iterator<Item = (&str, &Value)> {
        self.entries.iter().filter_map(|e| match e {
            Entry::Field { key, value } => Some((key.as_str(), value)),
            Entry::Comment(_) => None,
        })
    }

    fn require(&self, key: &str) -> Result<&Value, CliError> {
        self.get(key)
            .ok_or_else(|| CliError::Missing(key.to_string()))
    }

    fn type_error(key: &str, expected: &'static str) -> CliError {
        CliError::Type {
            key: key.to_string(),
            expected,
        }
    }

    pub fn get_number(&self, key: &str) -> Result<f64, CliError> {
        self.require(key)?
            .as_number()
            .ok_or_else(|| Self::type_error(key, "a number"))
    }

    pub fn get_point(&self, key: &str) -> Result<Point, CliError> {
        self.require(key)?
            .as_point()
            .ok_or_else(|| Self::type_error(key, "a point [x, y]"))
    }

    pub fn get_triangle(&self, key: &str) -> Result<Triangle, CliError> {
        let err = || Self::type_error(key, "a triangle [[x, y], [x, y], [x, y]]");
        match self.require(key)? {
            Value::List(items) if items.len() == 3 => {
                let p: Vec<Point> = items
                    .iter()
                    .map(Value::as_point)
                    .collect::<Option<_>>()
                    .ok_or_else(err)?;
                Ok(Triangle::new(p[0], p[1], p[2]))
            }
            _ => Err(err()),
        }
    }

    pub fn get_numbers(&self, key: &str) -> Result<Vec<f64>, CliError> {
        match self.require(key)? {
            Value::List(items) => items
                .iter()
                .map(Value::as_number)
                .collect::<Option<_>>()
                .ok_or_else(|| Self::type_error(key, "a list of numbers")),
            _ => Err(Self::type_error(key, "a list of numbers")),
        }
    }

    pub fn get_points(&self, key: &str) -> Result<Vec<Point>, CliError> {
        match self.require(key)? {
            Value::List(items) => items
                .iter()
                .map(Value::as_point)
                .collect::<Option<_>>()
                .ok_or_else(|| Self::type_error(key, "a list of points")),
            _ => Err(Self::type_error(key, "a list of points")),
        }
    }

    pub fn integer(&mut self, key: &str, n: i64) -> &mut Self {
        self.set(key, Value::Integer(n))
    }

    pub fn get_integer(&self, key: &str) -> Result<i64, CliError> {
        match self.require(key)? {
            Value::Integer(n) => Ok(*n),
            _ => Err(Self::type_error(key, "an integer")),
        }
    }

    pub fn get_bool(&self, key: &str) -> Result<bool, CliError> {
        match self.require(key)? {
            Value::Bool(b) => Ok(*b),
            _ => Err(Self::type_error(key, "true or false")),
        }
    }

    pub fn emit(&self) -> String {
        let mut out = String::new();
        for entry in &self.entries {
            match entry {
                Entry::Comment(text) => {
                    out.push('#');
                    out.push_str(text);
                }
                Entry::Field { key, value } => {
                    let _ = write!(out, "{key} = {value}");
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Document, CliError> {
        let mut doc = Document::new();
        for (index, raw) in text.lines().enumerate() {
            let line_no = index + 1;
            let err = |message: String| CliError::Parse {
                line: line_no,
                message,
            };
            let line = raw.trim_matches(|c| c == ' ' || c == '\t' || c == '\r');
            if line.is_empty() {
                continue;
            }
            if let Some(text) = line.strip_prefix('#') {
                doc.entries.push(Entry::Comment(text.to_string()));
                continue;
            }
            let (key, rest) = line
                .split_once('=')
                .ok_or_else(|| err("expected `key = value`".into()))?;
            let key = key.trim_end_matches([' ', '\t']);
            if !valid_key(key) {
                return Err(err(format!("malformed key {key:?}")));
            }
            if doc.get(key).is_some() {
                return Err(err(format!("duplicate key {key:?}")));
            }
            let mut cursor = Cursor::new(rest);
            cursor.skip_ws();
            let value = cursor.value().map_err(&err)?;
            cursor.skip_ws();
            if !cursor.at_end() {
                return Err(err(format!(
                    "trailing characters after value: {:?}",
                    cursor.rest()
                )));
            }
            doc.entries.push(Entry::Field {
                key: key.to_string(),
                value,
            });
        }
        Ok(doc)
    }
}

fn valid_key(key: &str) -> bool {
    !key.is_empty()
        && key.split('.').all(|ident| {
            let mut chars = ident.chars();
            matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        })
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(' ' | '\t')) {
            self.pos += 1;
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !f(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.src[start..self.pos]
    }

    fn value(&mut self) -> Result<Value, String> {
        match self.peek() {
            Some('[') => self.list(),
            Some(c) if c.is_ascii_digit() || c == '-' || c == '+' || c == '.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() => {
                let word = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-');
                Ok(match word {
                    "true" => Value::Bool(true),
                    "false" => Value::Bool(false),
                    w => Value::Word(w.to_string()),
                })
            }
            Some(c) => Err(format!("unexpected character {c:?}")),
            None => Err("missing value".into()),
        }
    }

    fn number(&mut self) -> Result<Value, String> {
        let text =
            self.take_while(|c| c.is_ascii_digit() || matches!(c, '-' | '+' | '.' | 'e' | 'E'));
        if !is_decimal(text) {
            return Err(format!("malformed number {text:?}"));
        }
        if !text.contains(['.', 'e', 'E']) {
            if let Ok(n) = text.parse::<i64>() {
                return Ok(Value::Integer(n));
            }
        }
        text.parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .map(Value::Number)
            .ok_or_else(|| format!("number out of range {text:?}"))
    }

    fn list(&mut self) -> Result<Value, String> {
        self.pos += 1;
        let mut items = Vec::new();
        self.skip_ws();
        if self.peek() == Some(']') {
            self.pos += 1;
            return Ok(Value::List(items));
        }
        loop {
            self.skip_ws();
            items.push(self.value()?);
            self.skip_ws();
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(']') => {
                    self.pos += 1;
                    return Ok(Value::List(items));
                }
                Some(c) => return Err(format!("expected `,` or `]`, found {c:?}")),
                None => return Err("unterminated list".into()),
            }
        }
    }
}

/// Checks the `number` production of the grammar.
fn is_decimal(s: &str) -> bool {
    let s = s.strip_prefix(['-', '+']).unwrap_or(s);
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], Some(&s[i + 1..])),
        None => (s, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let mantissa_ok = match mantissa.split_once('.') {
        Some((int, frac)) => digits(int) && digits(frac),
        None => digits(mantissa),
    };
    let exponent_ok = exponent.is_none_or(|e| digits(e.strip_prefix(['-', '+']).unwrap_or(e)));
    mantissa_ok && exponent_ok
}
