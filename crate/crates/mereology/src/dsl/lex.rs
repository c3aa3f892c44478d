//! Lexer for the `.msys` specification language.

use num_bigint::BigInt;
use num_traits::pow::Pow;

use crate::behavior::Rational;
use crate::dsl::Diagnostic;
use crate::span::Span;

#[derive(Debug, Clone, PartialEq)]
pub enum Tok {
    Ident(String),
    Num(Rational),
    // Keywords; all lowercase, case-sensitive.
    System,
    Part,
    Constraint,
    Query,
    Of,
    On,
    Behaviors,
    Grid,
    Where,
    Simulate,
    Init,
    Update,
    Horizon,
    Project,
    By,
    Join,
    Meet,
    Generator,
    In,
    To,
    Step,
    And,
    Or,
    Not,
    Implies,
    Forall,
    Exists,
    True,
    False,
    Allows,
    Ensures,
    Compatible,
    Determines,
    Entails,
    Leq,
    Laws,
    // Symbols.
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Dot,
    Colon,
    Arrow,
    Plus,
    Minus,
    Star,
    Slash,
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    Eof,
}

impl Tok {
    /// Human-readable name used in expected-token sets.
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(_) => "an identifier".to_string(),
            Tok::Num(_) => "a number".to_string(),
            Tok::Eof => "end of input".to_string(),
            Tok::LBrace => "`{`".to_string(),
            Tok::RBrace => "`}`".to_string(),
            Tok::LParen => "`(`".to_string(),
            Tok::RParen => "`)`".to_string(),
            Tok::LBracket => "`[`".to_string(),
            Tok::RBracket => "`]`".to_string(),
            Tok::Comma => "`,`".to_string(),
            Tok::Dot => "`.`".to_string(),
            Tok::Colon => "`:`".to_string(),
            Tok::Arrow => "`->`".to_string(),
            Tok::Plus => "`+`".to_string(),
            Tok::Minus => "`-`".to_string(),
            Tok::Star => "`*`".to_string(),
            Tok::Slash => "`/`".to_string(),
            Tok::Eq => "`=`".to_string(),
            Tok::Ne => "`!=`".to_string(),
            Tok::Lt => "`<`".to_string(),
            Tok::Le => "`<=`".to_string(),
            Tok::Gt => "`>`".to_string(),
            Tok::Ge => "`>=`".to_string(),
            kw => format!("`{}`", keyword_text(kw)),
        }
    }
}

fn keyword_text(tok: &Tok) -> &'static str {
    match tok {
        Tok::System => "system",
        Tok::Part => "part",
        Tok::Constraint => "constraint",
        Tok::Query => "query",
        Tok::Of => "of",
        Tok::On => "on",
        Tok::Behaviors => "behaviors",
        Tok::Grid => "grid",
        Tok::Where => "where",
        Tok::Simulate => "simulate",
        Tok::Init => "init",
        Tok::Update => "update",
        Tok::Horizon => "horizon",
        Tok::Project => "project",
        Tok::By => "by",
        Tok::Join => "join",
        Tok::Meet => "meet",
        Tok::Generator => "generator",
        Tok::In => "in",
        Tok::To => "to",
        Tok::Step => "step",
        Tok::And => "and",
        Tok::Or => "or",
        Tok::Not => "not",
        Tok::Implies => "implies",
        Tok::Forall => "forall",
        Tok::Exists => "exists",
        Tok::True => "true",
        Tok::False => "false",
        Tok::Allows => "allows",
        Tok::Ensures => "ensures",
        Tok::Compatible => "compatible",
        Tok::Determines => "determines",
        Tok::Entails => "entails",
        Tok::Leq => "leq",
        Tok::Laws => "laws",
        _ => unreachable!("not a keyword"),
    }
}

fn keyword(text: &str) -> Option<Tok> {
    Some(match text {
        "system" => Tok::System,
        "part" => Tok::Part,
        "constraint" => Tok::Constraint,
        "query" => Tok::Query,
        "of" => Tok::Of,
        "on" => Tok::On,
        "behaviors" => Tok::Behaviors,
        "grid" => Tok::Grid,
        "where" => Tok::Where,
        "simulate" => Tok::Simulate,
        "init" => Tok::Init,
        "update" => Tok::Update,
        "horizon" => Tok::Horizon,
        "project" => Tok::Project,
        "by" => Tok::By,
        "join" => Tok::Join,
        "meet" => Tok::Meet,
        "generator" => Tok::Generator,
        "in" => Tok::In,
        "to" => Tok::To,
        "step" => Tok::Step,
        "and" => Tok::And,
        "or" => Tok::Or,
        "not" => Tok::Not,
        "implies" => Tok::Implies,
        "forall" => Tok::Forall,
        "exists" => Tok::Exists,
        "true" => Tok::True,
        "false" => Tok::False,
        "allows" => Tok::Allows,
        "ensures" => Tok::Ensures,
        "compatible" => Tok::Compatible,
        "determines" => Tok::Determines,
        "entails" => Tok::Entails,
        "leq" => Tok::Leq,
        "laws" => Tok::Laws,
        _ => return None,
    })
}

struct Lexer<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
    line: u32,
    col: u32,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Lexer<'a> {
        Lexer { text, bytes: text.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            // Columns count bytes of multi-byte characters once.
            if b < 0x80 || b >= 0xc0 {
                self.col += 1;
            }
        }
        Some(b)
    }

    fn here(&self) -> (usize, u32, u32) {
        (self.pos, self.line, self.col)
    }

    fn skip_trivia(&mut self) {
        while let Some(b) = self.peek() {
            match b {
                b' ' | b'\t' | b'\r' | b'\n' => {
                    self.bump();
                }
                b'#' => {
                    while let Some(b) = self.peek() {
                        if b == b'\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                _ => break,
            }
        }
    }

    fn lex_number(&mut self) -> Result<Tok, String> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.bump();
        }
        let mut frac_digits = 0usize;
        if self.peek() == Some(b'.') && self.bytes.get(self.pos + 1).is_some_and(|b| b.is_ascii_digit())
        {
            self.bump();
            while self.peek().is_some_and(|b| b.is_ascii_digit()) {
                self.bump();
                frac_digits += 1;
            }
        }
        let text: String = self.text[start..self.pos].chars().filter(|&c| c != '.').collect();
        let numer: BigInt = text.parse().map_err(|_| "malformed number".to_string())?;
        let denom = BigInt::from(10).pow(frac_digits as u32);
        Ok(Tok::Num(Rational::new(numer, denom)))
    }
}

/// Tokenize the whole input. The result always ends with `Eof`.
pub fn lex(text: &str) -> Result<Vec<(Tok, Span)>, Diagnostic> {
    let mut lexer = Lexer::new(text);
    let mut out = Vec::new();
    loop {
        lexer.skip_trivia();
        let (start, line, col) = lexer.here();
        let Some(b) = lexer.peek() else {
            out.push((Tok::Eof, Span::new(start, start, line, col)));
            return Ok(out);
        };
        let tok = match b {
            b'0'..=b'9' => lexer.lex_number().map_err(|message| Diagnostic {
                message,
                span: Span::new(start, lexer.pos, line, col),
                expected: vec!["a number".to_string()],
            })?,
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while lexer
                    .peek()
                    .is_some_and(|b| b.is_ascii_alphanumeric() || b == b'_')
                {
                    lexer.bump();
                }
                let word = &lexer.text[start..lexer.pos];
                keyword(word).unwrap_or_else(|| Tok::Ident(word.to_string()))
            }
            b'{' => {
                lexer.bump();
                Tok::LBrace
            }
            b'}' => {
                lexer.bump();
                Tok::RBrace
            }
            b'(' => {
                lexer.bump();
                Tok::LParen
            }
            b')' => {
                lexer.bump();
                Tok::RParen
            }
            b'[' => {
                lexer.bump();
                Tok::LBracket
            }
            b']' => {
                lexer.bump();
                Tok::RBracket
            }
            b',' => {
                lexer.bump();
                Tok::Comma
            }
            b'.' => {
                lexer.bump();
                Tok::Dot
            }
            b':' => {
                lexer.bump();
                Tok::Colon
            }
            b'+' => {
                lexer.bump();
                Tok::Plus
            }
            b'*' => {
                lexer.bump();
                Tok::Star
            }
            b'/' => {
                lexer.bump();
                Tok::Slash
            }
            b'-' => {
                lexer.bump();
                if lexer.peek() == Some(b'>') {
                    lexer.bump();
                    Tok::Arrow
                } else {
                    Tok::Minus
                }
            }
            b'=' => {
                lexer.bump();
                Tok::Eq
            }
            b'<' => {
                lexer.bump();
                if lexer.peek() == Some(b'=') {
                    lexer.bump();
                    Tok::Le
                } else {
                    Tok::Lt
                }
            }
            b'>' => {
                lexer.bump();
                if lexer.peek() == Some(b'=') {
                    lexer.bump();
                    Tok::Ge
                } else {
                    Tok::Gt
                }
            }
            b'!' => {
                lexer.bump();
                if lexer.peek() == Some(b'=') {
                    lexer.bump();
                    Tok::Ne
                } else {
                    return Err(Diagnostic {
                        message: "unexpected character `!` (did you mean `!=` or `not`?)"
                            .to_string(),
                        span: Span::new(start, lexer.pos, line, col),
                        expected: vec![],
                    });
                }
            }
            other => {
                let ch = text[start..].chars().next().unwrap_or(other as char);
                lexer.bump();
                return Err(Diagnostic {
                    message: format!("unexpected character `{ch}`"),
                    span: Span::new(start, start + ch.len_utf8(), line, col),
                    expected: vec![],
                });
            }
        };
        out.push((tok, Span::new(start, lexer.pos, line, col)));
    }
}
