//! Recursive-descent parser for expressions, programs, triples, guarded
//! strings and goal files.
//!
//! Grammar (`;` is the KAT product, `;;` program sequencing):
//!
//! ```text
//! goal   := sig item*
//! sig    := ('tests' ident* ';')? ('actions' ident* ';')?
//! item   := 'assume' (equation | triple) | 'show' (equation | prog '~' prog | triple)
//! equation := expr ('==' | '<=') expr
//! expr   := term ('+' term)*
//! term   := factor (';' factor)*
//! factor := base '*'*
//! base   := action | '[' bool ']' | '0' | '1' | '(' expr ')'
//! bool   := bt ('|' bt)*
//! bt     := bf ('&' bf)*
//! bf     := '!' bf | test | 'T' | 'F' | '(' bool ')'
//! prog   := patom (';;' patom)*
//! patom  := 'skip' | action | 'if' bool 'then' prog 'else' prog 'fi'
//!         | 'while' bool 'do' prog 'od' | '(' prog ')'
//! triple := '{' bool '}' prog '{' bool '}'
//! ```
//!
//! Binary operators associate to the right.

use katdec_core::hyp::{Comparison, Equation};
use katdec_core::syntax::{mk_dot, mk_plus, mk_star, BoolExpr, KatExpr, Signature};
use katdec_core::{Atom, GuardedString, HoareTriple, Prog};

use crate::goal::{Assumption, GoalFile, Show};
use crate::lexer::{tokenize, Pos, Tok, Token};
use crate::{GoalError, ParseError};

const KEYWORDS: &[&str] = &[
    "tests", "actions", "assume", "show", "skip", "if", "then", "else", "fi", "while", "do", "od", "T", "F",
];

pub struct Parser<'s> {
    toks: Vec<Token>,
    at: usize,
    sig: &'s Signature,
}

impl<'s> Parser<'s> {
    pub fn new(src: &str, sig: &'s Signature) -> Result<Self, ParseError> {
        Ok(Parser { toks: tokenize(src)?, at: 0, sig })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].pos
    }

    fn advance(&mut self) -> Tok {
        let t = self.toks[self.at].tok.clone();
        if t != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.advance();
            true
        } else {
            false
        }
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::at(self.pos(), msg.into()))
    }

    fn unexpected<T>(&self, expected: &str) -> Result<T, ParseError> {
        let found = self.peek();
        let hint = match found {
            Tok::SemiSemi => " (`;;` sequences programs; use `;` for the KAT product)",
            Tok::Tilde => " (`~` compares programs, not expressions)",
            _ => "",
        };
        self.error(format!("expected {expected}, found {found}{hint}"))
    }

    fn expect(&mut self, t: &Tok) -> Result<(), ParseError> {
        if self.eat(t) {
            Ok(())
        } else {
            self.unexpected(&t.to_string())
        }
    }

    fn is_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        if self.is_keyword(kw) {
            self.advance();
            Ok(())
        } else {
            self.unexpected(&format!("`{kw}`"))
        }
    }

    pub fn expect_end(&mut self) -> Result<(), ParseError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            self.unexpected("end of input")
        }
    }

    pub fn expr(&mut self) -> Result<KatExpr, ParseError> {
        let head = self.term()?;
        if self.eat(&Tok::Plus) {
            Ok(mk_plus(head, self.expr()?))
        } else {
            Ok(head)
        }
    }

    fn term(&mut self) -> Result<KatExpr, ParseError> {
        let head = self.factor()?;
        if self.eat(&Tok::Semi) {
            Ok(mk_dot(head, self.term()?))
        } else {
            Ok(head)
        }
    }

    fn factor(&mut self) -> Result<KatExpr, ParseError> {
        let mut x = self.base()?;
        while self.eat(&Tok::Star) {
            x = mk_star(x);
        }
        Ok(x)
    }

    fn base(&mut self) -> Result<KatExpr, ParseError> {
        match self.peek().clone() {
            Tok::Zero => {
                self.advance();
                Ok(KatExpr::Zero)
            }
            Tok::One => {
                self.advance();
                Ok(KatExpr::One)
            }
            Tok::LBracket => {
                self.advance();
                let a = self.bool_expr()?;
                self.expect(&Tok::RBracket)?;
                Ok(KatExpr::Test(a))
            }
            Tok::LParen => {
                self.advance();
                let x = self.expr()?;
                self.expect(&Tok::RParen)?;
                Ok(x)
            }
            Tok::Ident(name) if !KEYWORDS.contains(&name.as_str()) => {
                if let Some(p) = self.sig.letter_id(&name) {
                    self.advance();
                    Ok(KatExpr::Letter(p))
                } else if self.sig.test_id(&name).is_some() {
                    self.error(format!("`{name}` is a test, not an action; write `[{name}]`"))
                } else {
                    self.error(format!("undeclared action `{name}`"))
                }
            }
            _ => self.unexpected("an expression"),
        }
    }

    pub fn bool_expr(&mut self) -> Result<BoolExpr, ParseError> {
        let head = self.bool_term()?;
        if self.eat(&Tok::Pipe) {
            Ok(BoolExpr::or(head, self.bool_expr()?))
        } else {
            Ok(head)
        }
    }

    fn bool_term(&mut self) -> Result<BoolExpr, ParseError> {
        let head = self.bool_factor()?;
        if self.eat(&Tok::Amp) {
            Ok(BoolExpr::and(head, self.bool_term()?))
        } else {
            Ok(head)
        }
    }

    fn bool_factor(&mut self) -> Result<BoolExpr, ParseError> {
        match self.peek().clone() {
            Tok::Bang => {
                self.advance();
                Ok(!self.bool_factor()?)
            }
            Tok::LParen => {
                self.advance();
                let a = self.bool_expr()?;
                self.expect(&Tok::RParen)?;
                Ok(a)
            }
            Tok::Ident(name) if name == "T" => {
                self.advance();
                Ok(BoolExpr::Top)
            }
            Tok::Ident(name) if name == "F" => {
                self.advance();
                Ok(BoolExpr::Bot)
            }
            Tok::Ident(name) if !KEYWORDS.contains(&name.as_str()) => {
                if let Some(t) = self.sig.test_id(&name) {
                    self.advance();
                    Ok(BoolExpr::Prim(t))
                } else if self.sig.letter_id(&name).is_some() {
                    self.error(format!("`{name}` is an action, not a test"))
                } else {
                    self.error(format!("undeclared test `{name}`"))
                }
            }
            _ => self.unexpected("a test"),
        }
    }

    pub fn equation(&mut self) -> Result<Equation, ParseError> {
        let lhs = self.expr()?;
        let relation = match self.peek() {
            Tok::EqEq => Comparison::Eq,
            Tok::Le => Comparison::Le,
            _ => return self.unexpected("`==` or `<=`"),
        };
        self.advance();
        let rhs = self.expr()?;
        Ok(Equation { lhs, rhs, relation })
    }

    pub fn prog(&mut self) -> Result<Prog, ParseError> {
        let head = self.prog_atom()?;
        if self.eat(&Tok::SemiSemi) {
            Ok(Prog::seq(head, self.prog()?))
        } else {
            Ok(head)
        }
    }

    fn prog_atom(&mut self) -> Result<Prog, ParseError> {
        if self.eat(&Tok::LParen) {
            let p = self.prog()?;
            self.expect(&Tok::RParen)?;
            return Ok(p);
        }
        let Tok::Ident(name) = self.peek().clone() else { return self.unexpected("a program") };
        match name.as_str() {
            "skip" => {
                self.advance();
                Ok(Prog::Skip)
            }
            "if" => {
                self.advance();
                let b = self.bool_expr()?;
                self.expect_keyword("then")?;
                let p = self.prog()?;
                self.expect_keyword("else")?;
                let q = self.prog()?;
                self.expect_keyword("fi")?;
                Ok(Prog::ite(b, p, q))
            }
            "while" => {
                self.advance();
                let b = self.bool_expr()?;
                self.expect_keyword("do")?;
                let p = self.prog()?;
                self.expect_keyword("od")?;
                Ok(Prog::whl(b, p))
            }
            _ if KEYWORDS.contains(&name.as_str()) => self.unexpected("a program"),
            _ => match self.sig.letter_id(&name) {
                Some(p) => {
                    self.advance();
                    Ok(Prog::Act(p))
                }
                None if self.sig.test_id(&name).is_some() => {
                    self.error(format!("`{name}` is a test, not an action"))
                }
                None => self.error(format!("undeclared action `{name}`")),
            },
        }
    }

    pub fn triple(&mut self) -> Result<HoareTriple, ParseError> {
        self.expect(&Tok::LBrace)?;
        let pre = self.bool_expr()?;
        self.expect(&Tok::RBrace)?;
        let prog = self.prog()?;
        self.expect(&Tok::LBrace)?;
        let post = self.bool_expr()?;
        self.expect(&Tok::RBrace)?;
        Ok(HoareTriple::new(pre, prog, post))
    }

    /// `{a,!b}`: every declared test, in declaration order, each once.
    fn atom(&mut self) -> Result<Atom, ParseError> {
        self.expect(&Tok::LBrace)?;
        let mut bits = 0u32;
        for t in self.sig.tests() {
            if t.0 > 0 {
                self.expect(&Tok::Comma)?;
            }
            let positive = !self.eat(&Tok::Bang);
            match self.peek().clone() {
                Tok::Ident(name) if self.sig.test_id(&name) == Some(t) => {
                    self.advance();
                }
                _ => return self.unexpected(&format!("test `{}`", self.sig.test_name(t))),
            }
            if positive {
                bits |= 1 << t.0;
            }
        }
        self.expect(&Tok::RBrace)?;
        Ok(Atom(bits))
    }

    pub fn guarded_string(&mut self) -> Result<GuardedString, ParseError> {
        let mut u = GuardedString::atom(self.atom()?);
        while let Tok::Ident(name) = self.peek().clone() {
            let Some(p) = self.sig.letter_id(&name) else {
                return self.error(format!("undeclared action `{name}`"));
            };
            self.advance();
            let next = self.atom()?;
            u.push(p, next);
        }
        Ok(u)
    }

    /// Whether a `~` occurs before the next `assume`/`show` or the end.
    fn item_has_tilde(&self) -> bool {
        self.toks[self.at..]
            .iter()
            .map(|t| &t.tok)
            .take_while(|t| !matches!(t, Tok::Eof) && !matches!(t, Tok::Ident(s) if s == "assume" || s == "show"))
            .any(|t| *t == Tok::Tilde)
    }
}

fn declared_names(p: &mut Parser<'_>) -> Result<Vec<String>, ParseError> {
    let mut names = Vec::new();
    loop {
        match p.peek().clone() {
            Tok::Semi => {
                p.advance();
                return Ok(names);
            }
            Tok::Ident(name) if KEYWORDS.contains(&name.as_str()) => {
                return p.error(format!("`{name}` is reserved and cannot be declared"));
            }
            Tok::Ident(name) => {
                p.advance();
                names.push(name);
            }
            _ => return p.unexpected("an identifier or `;`"),
        }
    }
}

/// Parses a complete goal file.
pub fn parse_goal(src: &str, atom_limit: usize) -> Result<GoalFile, GoalError> {
    // The signature has to be known before anything else can be resolved.
    let empty = Signature::new(Vec::<String>::new(), Vec::<String>::new()).expect("empty signature");
    let mut head = Parser::new(src, &empty)?;
    let mut tests = Vec::new();
    let mut actions = Vec::new();
    let mut seen_tests = false;
    let mut seen_actions = false;
    loop {
        if head.is_keyword("tests") && !seen_tests {
            head.advance();
            tests = declared_names(&mut head)?;
            seen_tests = true;
        } else if head.is_keyword("actions") && !seen_actions {
            head.advance();
            actions = declared_names(&mut head)?;
            seen_actions = true;
        } else {
            break;
        }
    }
    let body_start = head.at;
    let sig = Signature::with_atom_limit(tests, actions, atom_limit)?;

    let mut p = Parser { toks: head.toks, at: body_start, sig: &sig };
    let mut assumptions = Vec::new();
    let mut show: Option<Show> = None;
    loop {
        if p.is_keyword("assume") {
            p.advance();
            if *p.peek() == Tok::LBrace {
                assumptions.push(Assumption::Triple(p.triple()?));
            } else {
                assumptions.push(Assumption::Equation(p.equation()?));
            }
        } else if p.is_keyword("show") {
            if show.is_some() {
                return Err(p.error::<()>("a goal file has exactly one `show`").unwrap_err().into());
            }
            p.advance();
            show = Some(if *p.peek() == Tok::LBrace {
                Show::Triple(p.triple()?)
            } else if p.item_has_tilde() {
                let lhs = p.prog()?;
                p.expect(&Tok::Tilde)?;
                Show::ProgEquiv(lhs, p.prog()?)
            } else {
                Show::Equation(p.equation()?)
            });
        } else if *p.peek() == Tok::Eof {
            break;
        } else if p.is_keyword("tests") || p.is_keyword("actions") {
            return Err(p.error::<()>("declarations must come first, once each").unwrap_err().into());
        } else {
            return Err(p.unexpected::<()>("`assume` or `show`").unwrap_err().into());
        }
    }
    let Some(show) = show else {
        return Err(p.error::<()>("missing `show`").unwrap_err().into());
    };
    Ok(GoalFile { signature: sig.clone(), assumptions, show })
}

pub fn parse_expr(sig: &Signature, src: &str) -> Result<KatExpr, ParseError> {
    let mut p = Parser::new(src, sig)?;
    let x = p.expr()?;
    p.expect_end()?;
    Ok(x)
}

pub fn parse_bool(sig: &Signature, src: &str) -> Result<BoolExpr, ParseError> {
    let mut p = Parser::new(src, sig)?;
    let a = p.bool_expr()?;
    p.expect_end()?;
    Ok(a)
}

pub fn parse_equation(sig: &Signature, src: &str) -> Result<Equation, ParseError> {
    let mut p = Parser::new(src, sig)?;
    let e = p.equation()?;
    p.expect_end()?;
    Ok(e)
}

pub fn parse_prog(sig: &Signature, src: &str) -> Result<Prog, ParseError> {
    let mut p = Parser::new(src, sig)?;
    let x = p.prog()?;
    p.expect_end()?;
    Ok(x)
}

pub fn parse_triple(sig: &Signature, src: &str) -> Result<HoareTriple, ParseError> {
    let mut p = Parser::new(src, sig)?;
    let t = p.triple()?;
    p.expect_end()?;
    Ok(t)
}

pub fn parse_guarded_string(sig: &Signature, src: &str) -> Result<GuardedString, ParseError> {
    let mut p = Parser::new(src, sig)?;
    let u = p.guarded_string()?;
    p.expect_end()?;
    Ok(u)
}
