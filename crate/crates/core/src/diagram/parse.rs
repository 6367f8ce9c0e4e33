//! Text formats for diagrams.
//!
//! * PD text: `X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]`, optionally wrapped in `PD[...]`
//! * PD JSON: `{"pd": [[1,4,2,5], ...], "free_loops": 0}`
//! * braid: `braid 3: 1 -2 1`
//!
//! `#` starts a comment that runs to the end of the line.

use serde::{Deserialize, Serialize};

use super::{BraidWord, DiagramError, Label, LinkDiagram};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdJson {
    pub pd: Vec<[Label; 4]>,
    #[serde(default)]
    pub free_loops: usize,
}

fn without_comments(text: &str) -> String {
    text.lines()
        .map(|l| match l.find('#') {
            Some(i) => &l[..i],
            None => l,
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn syntax(text: &str, offset: usize, message: impl Into<String>) -> DiagramError {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    DiagramError::MalformedSyntax { line, column, message: message.into() }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(ch) = self.text[self.pos..].chars().next() {
            if ch.is_whitespace() || ch == ',' {
                self.pos += ch.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn expect(&mut self, ch: char) -> Result<(), DiagramError> {
        if self.peek() == Some(ch) {
            self.pos += ch.len_utf8();
            Ok(())
        } else {
            let found = self.peek().map_or("end of input".to_string(), |c| format!("'{c}'"));
            Err(syntax(self.text, self.pos, format!("expected '{ch}', found {found}")))
        }
    }

    fn number(&mut self) -> Result<Label, DiagramError> {
        while self.peek().is_some_and(|c| c == ' ' || c == '\t') {
            self.pos += 1;
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits = &self.text[start..self.pos];
        let value = digits
            .parse::<Label>()
            .map_err(|_| syntax(self.text, start, "expected a positive integer label"))?;
        while self.peek().is_some_and(|c| c == ' ' || c == '\t') {
            self.pos += 1;
        }
        Ok(value)
    }
}

/// Parse PD text into raw 4-tuples without validating labels.
pub fn parse_pd_tuples(text: &str) -> Result<Vec<[Label; 4]>, DiagramError> {
    let clean = without_comments(text);
    let mut cur = Cursor { text: &clean, pos: 0 };
    let mut out = Vec::new();
    cur.skip_ws();
    let wrapped = clean[cur.pos..].starts_with("PD[");
    if wrapped {
        cur.pos += 3;
    }
    loop {
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(']') if wrapped => {
                cur.pos += 1;
                cur.skip_ws();
                if cur.peek().is_some() {
                    return Err(syntax(&clean, cur.pos, "trailing input after PD[...]"));
                }
                return Ok(out);
            }
            Some('X') => {
                cur.pos += 1;
                cur.expect('[')?;
                let mut x = [0; 4];
                for (i, slot) in x.iter_mut().enumerate() {
                    *slot = cur.number()?;
                    if i < 3 {
                        cur.expect(',')?;
                    }
                }
                cur.expect(']')?;
                out.push(x);
            }
            Some(c) => return Err(syntax(&clean, cur.pos, format!("unexpected '{c}'"))),
        }
    }
    if wrapped {
        return Err(syntax(&clean, clean.len(), "unterminated PD["));
    }
    Ok(out)
}

pub fn parse_pd(text: &str) -> Result<LinkDiagram, DiagramError> {
    let tuples = parse_pd_tuples(text)?;
    LinkDiagram::from_pd(&tuples, 0)
}

pub fn parse_pd_json(text: &str) -> Result<LinkDiagram, DiagramError> {
    let v: PdJson = serde_json::from_str(text)
        .map_err(|e| DiagramError::MalformedSyntax { line: e.line(), column: e.column(), message: e.to_string() })?;
    LinkDiagram::from_pd(&v.pd, v.free_loops)
}

pub fn parse_braid(text: &str) -> Result<BraidWord, DiagramError> {
    let clean = without_comments(text);
    let body = clean.trim_start();
    let start = clean.len() - body.len();
    let rest = body
        .strip_prefix("braid")
        .ok_or_else(|| syntax(&clean, start, "expected 'braid'"))?;
    let colon = rest.find(':').ok_or_else(|| syntax(&clean, start, "expected ':' after strand count"))?;
    let strands: usize = rest[..colon]
        .trim()
        .parse()
        .map_err(|_| syntax(&clean, start + 5, "expected strand count"))?;
    let mut letters = Vec::new();
    let word_start = start + 5 + colon + 1;
    let mut offset = word_start;
    for tok in clean[word_start..].split_inclusive(|c: char| c.is_whitespace() || c == ',') {
        let t = tok.trim_matches(|c: char| c.is_whitespace() || c == ',');
        if !t.is_empty() {
            letters.push(t.parse::<i32>().map_err(|_| syntax(&clean, offset, format!("bad generator '{t}'")))?);
        }
        offset += tok.len();
    }
    BraidWord::new(strands, letters)
}

/// Accepts any of the three formats.
pub fn parse_diagram(text: &str) -> Result<LinkDiagram, DiagramError> {
    let body = without_comments(text);
    let trimmed = body.trim_start();
    if trimmed.starts_with('{') {
        parse_pd_json(&body)
    } else if trimmed.starts_with("braid") {
        parse_braid(text)?.closure()
    } else {
        parse_pd(text)
    }
}
