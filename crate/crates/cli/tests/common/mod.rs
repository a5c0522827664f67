//! Helpers shared by the CLI test targets.

#![allow(dead_code)]

use std::io::Write;
use std::process::{Command, Output, Stdio};

pub fn pedal_bin() -> &'static str {
    env!("CARGO_BIN_EXE_pedal")
}

/// Runs the binary with `args`, feeding `stdin`.
pub fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(pedal_bin())
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn pedal");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("wait for pedal")
}

fn is_name_start(c: u8) -> bool {
    c.is_ascii_alphabetic() || c == b'_' || c == b':'
}

fn is_name_char(c: u8) -> bool {
    is_name_start(c) || c.is_ascii_digit() || c == b'-' || c == b'.'
}

struct Cursor<'a> {
    s: &'a [u8],
    i: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }

    fn starts_with(&self, p: &str) -> bool {
        self.s[self.i..].starts_with(p.as_bytes())
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.i += 1;
        }
    }

    fn name(&mut self) -> Result<&'a str, String> {
        let start = self.i;
        match self.peek() {
            Some(c) if is_name_start(c) => self.i += 1,
            _ => return Err(format!("expected a name at byte {start}")),
        }
        while self.peek().is_some_and(is_name_char) {
            self.i += 1;
        }
        Ok(std::str::from_utf8(&self.s[start..self.i]).unwrap())
    }

    fn expect(&mut self, p: &str) -> Result<(), String> {
        if self.starts_with(p) {
            self.i += p.len();
            Ok(())
        } else {
            Err(format!("expected {p:?} at byte {}", self.i))
        }
    }

    /// Character data up to `stop`, checking entity references.
    fn text(&mut self, stop: u8) -> Result<(), String> {
        while let Some(c) = self.peek() {
            match c {
                c if c == stop => return Ok(()),
                b'<' => return Err(format!("raw '<' at byte {}", self.i)),
                b'&' => {
                    let end = self.s[self.i..]
                        .iter()
                        .position(|&b| b == b';')
                        .ok_or("unterminated entity")?;
                    let entity = std::str::from_utf8(&self.s[self.i + 1..self.i + end]).unwrap();
                    let known = matches!(entity, "amp" | "lt" | "gt" | "apos" | "quot")
                        || entity.strip_prefix('#').is_some_and(|n| {
                            n.strip_prefix('x').map_or(n.parse::<u32>().is_ok(), |h| {
                                u32::from_str_radix(h, 16).is_ok()
                            })
                        });
                    if !known {
                        return Err(format!("unknown entity &{entity};"));
                    }
                    self.i += end + 1;
                }
                _ => self.i += 1,
            }
        }
        Ok(())
    }
}

/// Minimal XML 1.0 well-formedness check: optional declaration, one root
/// element, matched tags, unique quoted attributes, valid entities.
pub fn check_well_formed(doc: &str) -> Result<(), String> {
    let mut c = Cursor {
        s: doc.as_bytes(),
        i: 0,
    };
    if c.starts_with("<?xml") {
        let end = doc.find("?>").ok_or("unterminated declaration")?;
        c.i = end + 2;
    }
    c.skip_ws();
    let mut stack: Vec<&str> = Vec::new();
    let mut roots = 0;
    loop {
        if stack.is_empty() {
            c.skip_ws();
            if c.peek().is_none() {
                break;
            }
        }
        if c.peek().is_none() {
            return Err(format!("unclosed element <{}>", stack.last().unwrap()));
        }
        if c.starts_with("<!--") {
            let end = doc[c.i..].find("-->").ok_or("unterminated comment")?;
            c.i += end + 3;
        } else if c.starts_with("</") {
            c.i += 2;
            let name = c.name()?;
            c.skip_ws();
            c.expect(">")?;
            match stack.pop() {
                Some(open) if open == name => {}
                other => return Err(format!("</{name}> closes {other:?}")),
            }
        } else if c.starts_with("<") {
            c.i += 1;
            let name = c.name()?;
            if stack.is_empty() {
                roots += 1;
                if roots > 1 {
                    return Err("more than one root element".into());
                }
            }
            let mut attrs: Vec<&str> = Vec::new();
            loop {
                let before = c.i;
                c.skip_ws();
                if c.starts_with("/>") {
                    c.i += 2;
                    break;
                }
                if c.starts_with(">") {
                    c.i += 1;
                    stack.push(name);
                    break;
                }
                if c.i == before {
                    return Err(format!("missing space before attribute at byte {}", c.i));
                }
                let attr = c.name()?;
                if attrs.contains(&attr) {
                    return Err(format!("duplicate attribute {attr}"));
                }
                attrs.push(attr);
                c.skip_ws();
                c.expect("=")?;
                c.skip_ws();
                let quote = c.peek().ok_or("eof in attribute")?;
                if quote != b'"' && quote != b'\'' {
                    return Err(format!("unquoted attribute {attr}"));
                }
                c.i += 1;
                c.text(quote)?;
                c.expect(if quote == b'"' { "\"" } else { "'" })?;
            }
        } else if stack.is_empty() {
            return Err(format!("text outside the root element at byte {}", c.i));
        } else {
            c.text(b'<')?;
        }
    }
    if roots == 1 {
        Ok(())
    } else {
        Err("no root element".into())
    }
}

#[test]
fn checker_accepts_and_rejects() {
    assert!(check_well_formed("<?xml version=\"1.0\"?>\n<a x=\"1\"><b/>t &amp; u</a>\n").is_ok());
    assert!(check_well_formed("<a><b></a></b>").is_err());
    assert!(check_well_formed("<a x=\"1\" x=\"2\"/>").is_err());
    assert!(check_well_formed("<a>&nope;</a>").is_err());
    assert!(check_well_formed("<a/><b/>").is_err());
    assert!(check_well_formed("<a>1 < 2</a>").is_err());
}
