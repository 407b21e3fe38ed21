use std::fmt;

use crate::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Zero,
    One,
    LBracket,
    RBracket,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Plus,
    Semi,
    SemiSemi,
    Star,
    Bang,
    Amp,
    Pipe,
    EqEq,
    Le,
    Tilde,
    Comma,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Ident(name) => return write!(f, "`{name}`"),
            Tok::Zero => "`0`",
            Tok::One => "`1`",
            Tok::LBracket => "`[`",
            Tok::RBracket => "`]`",
            Tok::LParen => "`(`",
            Tok::RParen => "`)`",
            Tok::LBrace => "`{`",
            Tok::RBrace => "`}`",
            Tok::Plus => "`+`",
            Tok::Semi => "`;`",
            Tok::SemiSemi => "`;;`",
            Tok::Star => "`*`",
            Tok::Bang => "`!`",
            Tok::Amp => "`&`",
            Tok::Pipe => "`|`",
            Tok::EqEq => "`==`",
            Tok::Le => "`<=`",
            Tok::Tilde => "`~`",
            Tok::Comma => "`,`",
            Tok::Eof => "end of input",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

/// Splits `src` into tokens. `#` and `//` start comments running to the end
/// of the line.
pub fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut col) = (1, 1);

    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars<'_>>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                bump(&mut chars);
            }
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut name = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_alphanumeric() || c == '_' || c == '\'' {
                    name.push(c);
                    bump(&mut chars);
                } else {
                    break;
                }
            }
            out.push(Token { tok: Tok::Ident(name), pos });
            continue;
        }
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_alphanumeric() {
                    digits.push(c);
                    bump(&mut chars);
                } else {
                    break;
                }
            }
            let tok = match digits.as_str() {
                "0" => Tok::Zero,
                "1" => Tok::One,
                _ => return Err(ParseError::at(pos, format!("unexpected `{digits}`; only the constants 0 and 1 are numbers"))),
            };
            out.push(Token { tok, pos });
            continue;
        }
        bump(&mut chars);
        let tok = match c {
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            '+' => Tok::Plus,
            '*' => Tok::Star,
            '!' => Tok::Bang,
            '&' => Tok::Amp,
            '|' => Tok::Pipe,
            '~' => Tok::Tilde,
            ',' => Tok::Comma,
            ';' => {
                if chars.peek() == Some(&';') {
                    bump(&mut chars);
                    Tok::SemiSemi
                } else {
                    Tok::Semi
                }
            }
            '=' if chars.peek() == Some(&'=') => {
                bump(&mut chars);
                Tok::EqEq
            }
            '<' if chars.peek() == Some(&'=') => {
                bump(&mut chars);
                Tok::Le
            }
            '/' if chars.peek() == Some(&'/') => {
                while chars.peek().is_some_and(|&c| c != '\n') {
                    bump(&mut chars);
                }
                continue;
            }
            other => return Err(ParseError::at(pos, format!("unexpected character `{other}`"))),
        };
        out.push(Token { tok, pos });
    }
    out.push(Token { tok: Tok::Eof, pos: Pos { line, col } });
    Ok(out)
}
