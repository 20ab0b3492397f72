//! Infix expression language: lexer, parser and printer.
//!
//! ```text
//! sum     := tensor (('+' | '-') tensor)*
//! tensor  := meet ('#' meet)*
//! meet    := wedge ('&' wedge)*
//! wedge   := unary ('^' unary)*
//! unary   := '*' unary | '-' unary | atom
//! atom    := rational | name | '(' letter '|' place ')' | '(' sum ')'
//!          | 'bp' '(' letters ';' place ':' count (',' place ':' count)* ')'
//!          | 'dia' '(' int ',' int ',' int ',' sum ')'
//!          | '[' sum (',' sum)* ']'
//! ```

use crate::error::{Error, Result};
use crate::letterplace::{word_string, Letter, Word};
use crate::ring::{format_q, Q};
use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Number(Q),
    Name(String),
    Var(Letter, u8),
    Biproduct(Word, Vec<(u8, u32)>),
    Star(Box<Expr>),
    Neg(Box<Expr>),
    Wedge(Box<Expr>, Box<Expr>),
    Meet(Box<Expr>, Box<Expr>),
    Tensor(Box<Expr>, Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Diamond(usize, usize, usize, Box<Expr>),
    Bracket(Vec<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            Tok::Int(s.parse().unwrap())
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else if "+-*^&#()[]|,;:/".contains(c) {
            i += 1;
            Tok::Sym(c)
        } else {
            return Err(Error::Syntax {
                line: l0,
                column: c0,
                message: format!("unexpected character {c:?}"),
            });
        };
        col += i - start;
        out.push(Token { tok, line: l0, column: c0 });
    }
    out.push(Token { tok: Tok::End, line, column: col });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos < self.toks.len() - 1 {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        let t = &self.toks[self.pos];
        Err(Error::Syntax {
            line: t.line,
            column: t.column,
            message: message.into(),
        })
    }

    fn is_sym(&self, c: char) -> bool {
        *self.peek() == Tok::Sym(c)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.is_sym(c) {
            self.next();
            Ok(())
        } else {
            self.error(format!("expected '{c}'"))
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.next();
                Ok(n)
            }
            _ => self.error("expected an integer"),
        }
    }

    fn small<T: TryFrom<BigInt>>(&mut self) -> Result<T> {
        let n = self.int()?;
        match T::try_from(n) {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos -= 1;
                self.error("integer out of range")
            }
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut e = self.tensor()?;
        loop {
            if self.is_sym('+') {
                self.next();
                e = Expr::Add(Box::new(e), Box::new(self.tensor()?));
            } else if self.is_sym('-') {
                self.next();
                e = Expr::Sub(Box::new(e), Box::new(self.tensor()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn tensor(&mut self) -> Result<Expr> {
        let mut e = self.meet()?;
        while self.is_sym('#') {
            self.next();
            e = Expr::Tensor(Box::new(e), Box::new(self.meet()?));
        }
        Ok(e)
    }

    fn meet(&mut self) -> Result<Expr> {
        let mut e = self.wedge()?;
        while self.is_sym('&') {
            self.next();
            e = Expr::Meet(Box::new(e), Box::new(self.wedge()?));
        }
        Ok(e)
    }

    fn wedge(&mut self) -> Result<Expr> {
        let mut e = self.unary()?;
        while self.is_sym('^') {
            self.next();
            e = Expr::Wedge(Box::new(e), Box::new(self.unary()?));
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.is_sym('*') {
            self.next();
            return Ok(Expr::Star(Box::new(self.unary()?)));
        }
        if self.is_sym('-') {
            self.next();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn letter(&mut self) -> Result<Letter> {
        if let Tok::Ident(s) = self.peek().clone() {
            let mut cs = s.chars();
            if let (Some(l), None) = (cs.next().and_then(Letter::from_char), cs.next()) {
                self.next();
                return Ok(l);
            }
        }
        self.error("expected a single letter")
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.next();
                if self.is_sym('/') {
                    self.next();
                    let d = self.int()?;
                    if d == BigInt::from(0) {
                        self.pos -= 1;
                        return self.error("zero denominator");
                    }
                    return Ok(Expr::Number(Q::new(n, d)));
                }
                Ok(Expr::Number(Q::from_integer(n)))
            }
            Tok::Ident(name) if name == "bp" && *self.peek_at(1) == Tok::Sym('(') => {
                self.next();
                self.next();
                let w = match self.peek().clone() {
                    Tok::Ident(s) => {
                        let w: Option<Word> = s.chars().map(Letter::from_char).collect();
                        match w {
                            Some(w) => {
                                self.next();
                                w
                            }
                            None => return self.error("expected a word of letters"),
                        }
                    }
                    _ => Vec::new(),
                };
                self.expect(';')?;
                let mut degree = Vec::new();
                if !self.is_sym(')') {
                    loop {
                        let p: u8 = self.small()?;
                        self.expect(':')?;
                        let c: u32 = self.small()?;
                        degree.push((p, c));
                        if self.is_sym(',') {
                            self.next();
                        } else {
                            break;
                        }
                    }
                }
                self.expect(')')?;
                Ok(Expr::Biproduct(w, degree))
            }
            Tok::Ident(name) if name == "dia" && *self.peek_at(1) == Tok::Sym('(') => {
                self.next();
                self.next();
                let h: usize = self.small()?;
                self.expect(',')?;
                let j: usize = self.small()?;
                self.expect(',')?;
                let i: usize = self.small()?;
                self.expect(',')?;
                let e = self.sum()?;
                self.expect(')')?;
                Ok(Expr::Diamond(h, j, i, Box::new(e)))
            }
            Tok::Ident(name) => {
                self.next();
                Ok(Expr::Name(name))
            }
            Tok::Sym('(') => {
                // (x|i) letterplace variable, otherwise grouping
                if matches!(self.peek_at(1), Tok::Ident(_)) && *self.peek_at(2) == Tok::Sym('|') {
                    self.next();
                    let l = self.letter()?;
                    self.expect('|')?;
                    let p: u8 = self.small()?;
                    if p == 0 {
                        self.pos -= 1;
                        return self.error("places start at 1");
                    }
                    self.expect(')')?;
                    return Ok(Expr::Var(l, p));
                }
                self.next();
                let e = self.sum()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Sym('[') => {
                self.next();
                let mut items = vec![self.sum()?];
                while self.is_sym(',') {
                    self.next();
                    items.push(self.sum()?);
                }
                self.expect(']')?;
                Ok(Expr::Bracket(items))
            }
            Tok::End => self.error("unexpected end of input"),
            _ => self.error("expected an operand"),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.sum()?;
    if *p.peek() != Tok::End {
        return p.error("unexpected trailing input");
    }
    Ok(e)
}

// Binding strength used by the printer; atoms and prefix forms bind tightest.
fn level(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Tensor(..) => 2,
        Expr::Meet(..) => 3,
        Expr::Wedge(..) => 4,
        Expr::Star(_) | Expr::Neg(_) => 5,
        Expr::Number(q) if q < &Q::from_integer(0.into()) => 5,
        _ => 6,
    }
}

fn wrap(e: &Expr, min: u8) -> String {
    if level(e) < min {
        format!("({})", print(e))
    } else {
        print(e)
    }
}

/// Prints with the minimal parentheses needed for `parse` to rebuild the
/// same tree.
pub fn print(e: &Expr) -> String {
    match e {
        Expr::Number(q) => {
            let s = format_q(q);
            match s.strip_prefix('-') {
                Some(rest) => format!("-{rest}"),
                None => s,
            }
        }
        Expr::Name(n) => n.clone(),
        Expr::Var(l, p) => format!("({l}|{p})"),
        Expr::Biproduct(w, d) => {
            let d: Vec<String> = d.iter().map(|(p, q)| format!("{p}:{q}")).collect();
            format!("bp({}; {})", word_string(w), d.join(", "))
        }
        Expr::Star(x) => format!("*{}", wrap(x, 5)),
        Expr::Neg(x) => format!("-{}", wrap(x, 5)),
        Expr::Wedge(a, b) => format!("{} ^ {}", wrap(a, 4), wrap(b, 5)),
        Expr::Meet(a, b) => format!("{} & {}", wrap(a, 3), wrap(b, 4)),
        Expr::Tensor(a, b) => format!("{} # {}", wrap(a, 2), wrap(b, 3)),
        Expr::Add(a, b) => format!("{} + {}", wrap(a, 1), wrap(b, 2)),
        Expr::Sub(a, b) => format!("{} - {}", wrap(a, 1), wrap(b, 2)),
        Expr::Diamond(h, j, i, x) => format!("dia({h}, {j}, {i}, {})", print(x)),
        Expr::Bracket(items) => {
            let items: Vec<String> = items.iter().map(print).collect();
            format!("[{}]", items.join(", "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn name(s: &str) -> Box<Expr> {
        Box::new(Expr::Name(s.into()))
    }

    #[test]
    fn precedence() {
        let e = parse("p1 ^ p2 & q1 ^ q2").unwrap();
        assert_eq!(
            e,
            Expr::Meet(
                Box::new(Expr::Wedge(name("p1"), name("p2"))),
                Box::new(Expr::Wedge(name("q1"), name("q2")))
            )
        );
        let e = parse("*a ^ b").unwrap();
        assert_eq!(e, Expr::Wedge(Box::new(Expr::Star(name("a"))), name("b")));
    }

    #[test]
    fn diamond_and_atoms() {
        let e = parse("dia(1,2,1, (p1^p2) # (q1^q2))").unwrap();
        assert!(matches!(e, Expr::Diamond(1, 2, 1, _)));
        let e = parse("(x|1) ^ bp(xy; 1:1, 2:1) + 3/4").unwrap();
        assert_eq!(print(&e), "(x|1) ^ bp(xy; 1:1, 2:1) + 3/4");
    }

    #[test]
    fn error_positions() {
        match parse("p1 ^ ^") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (1, 6)),
            other => panic!("{other:?}"),
        }
        match parse("a +\n  $") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
        assert!(parse("1/0").is_err());
        assert!(parse("(a").is_err());
    }

    #[test]
    fn print_parenthesizes() {
        for text in ["(a + b) ^ c", "a - (b - c)", "(a # b) # c", "a # (b # c)", "*(a ^ b)", "-(-a)", "(a & b) & c"] {
            let e = parse(text).unwrap();
            assert_eq!(parse(&print(&e)).unwrap(), e, "{text}");
        }
        assert_eq!(print(&parse("a # (b # c)").unwrap()), "a # (b # c)");
    }
}
