use num_bigint::BigInt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Tok {
    Let,
    KwPp,
    KwOx,
    KwC00,
    KwC00t,
    KwVec,
    KwMat,
    KwPsi,
    Name(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Pipe,
    JoinOp,
    MeetOp,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Colon,
    Comma,
    Equals,
    Newline,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Let => "`let`".into(),
            Tok::KwPp => "`pp`".into(),
            Tok::KwOx => "`ox`".into(),
            Tok::KwC00 => "`c00`".into(),
            Tok::KwC00t => "`c00t`".into(),
            Tok::KwVec => "`vec`".into(),
            Tok::KwMat => "`mat`".into(),
            Tok::KwPsi => "`psi`".into(),
            Tok::Name(n) => format!("name `{n}`"),
            Tok::Int(v) => format!("integer `{v}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::JoinOp => "`\\/`".into(),
            Tok::MeetOp => "`/\\`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Equals => "`=`".into(),
            Tok::Newline => "end of line".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

pub fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = input.chars().peekable();
    let mut line = 1usize;
    let mut column = 1usize;
    let push = |tokens: &mut Vec<Token>, tok: Tok, line: usize, column: usize| {
        tokens.push(Token { tok, line, column });
    };
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, column);
        match c {
            '\n' => {
                chars.next();
                push(&mut tokens, Tok::Newline, tl, tc);
                line += 1;
                column = 1;
            }
            ' ' | '\t' | '\r' => {
                chars.next();
                column += 1;
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                    column += 1;
                }
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                        column += 1;
                    } else {
                        break;
                    }
                }
                push(&mut tokens, Tok::Int(digits.parse().unwrap()), tl, tc);
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let mut word = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        word.push(d);
                        chars.next();
                        column += 1;
                    } else {
                        break;
                    }
                }
                let tok = match word.as_str() {
                    "let" => Tok::Let,
                    "pp" => Tok::KwPp,
                    "ox" => Tok::KwOx,
                    "c00" => Tok::KwC00,
                    "c00t" => Tok::KwC00t,
                    "vec" => Tok::KwVec,
                    "mat" => Tok::KwMat,
                    "psi" => Tok::KwPsi,
                    _ => Tok::Name(word),
                };
                push(&mut tokens, tok, tl, tc);
            }
            '\\' => {
                chars.next();
                column += 1;
                if chars.peek() == Some(&'/') {
                    chars.next();
                    column += 1;
                    push(&mut tokens, Tok::JoinOp, tl, tc);
                } else {
                    return Err(syntax(tl, tc, "expected `/` after `\\`"));
                }
            }
            '/' => {
                chars.next();
                column += 1;
                if chars.peek() == Some(&'\\') {
                    chars.next();
                    column += 1;
                    push(&mut tokens, Tok::MeetOp, tl, tc);
                } else {
                    push(&mut tokens, Tok::Slash, tl, tc);
                }
            }
            _ => {
                chars.next();
                column += 1;
                let tok = match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '|' => Tok::Pipe,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    ':' => Tok::Colon,
                    ',' => Tok::Comma,
                    '=' => Tok::Equals,
                    other => {
                        return Err(syntax(tl, tc, &format!("unexpected character `{other}`")));
                    }
                };
                push(&mut tokens, tok, tl, tc);
            }
        }
    }
    tokens.push(Token {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(tokens)
}

fn syntax(line: usize, column: usize, message: &str) -> Error {
    Error::Syntax {
        context: "lex".into(),
        line,
        column,
        message: message.into(),
    }
}
