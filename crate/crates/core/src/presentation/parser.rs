use super::{GeneratorDecl, Presentation, RelationExpr, Symmetry};
use crate::free3::{Free3Error, GenImage, GenSubst, Shape, Tree};
use crate::scalar::{Field, Rational, Scalar};
use num_bigint::BigInt;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Lexical(char),
    UnbalancedParens,
    UnknownGenerator(String),
    DuplicateGenerator(String),
    RepeatedVariable(char),
    WrongArity(String),
    UndeclaredParameter(String),
    DivisionByZero,
    Expected(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Lexical(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::UnbalancedParens => write!(f, "unbalanced parentheses"),
            ParseErrorKind::UnknownGenerator(g) => write!(f, "unknown generator {g}"),
            ParseErrorKind::DuplicateGenerator(g) => write!(f, "generator {g} declared twice"),
            ParseErrorKind::RepeatedVariable(v) => write!(f, "variable {v} used twice in a monomial"),
            ParseErrorKind::WrongArity(what) => write!(f, "wrong arity: {what}"),
            ParseErrorKind::UndeclaredParameter(p) => write!(f, "parameter {p} used but not declared"),
            ParseErrorKind::DivisionByZero => write!(f, "division by zero"),
            ParseErrorKind::Expected(what) => write!(f, "expected {what}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{kind} at {line}:{col}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "{s}"),
            Tok::Int(n) => write!(f, "{n}"),
            Tok::Sym(c) => write!(f, "{c}"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

const SYMBOLS: &str = "(),;:{}+-*/^=";
const RESERVED: [&str; 6] = ["x", "y", "z", "q", "u", "v"];

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
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
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let start = col;
        if c.is_ascii_digit() {
            let mut s = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                s.push(chars[i]);
                i += 1;
                col += 1;
            }
            let n = s.parse::<BigInt>().expect("digits");
            out.push(Token { tok: Tok::Int(n), line, col: start });
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                s.push(chars[i]);
                i += 1;
                col += 1;
            }
            out.push(Token { tok: Tok::Ident(s), line, col: start });
        } else if SYMBOLS.contains(c) {
            out.push(Token { tok: Tok::Sym(c), line, col: start });
            i += 1;
            col += 1;
        } else {
            return Err(ParseError {
                kind: ParseErrorKind::Lexical(c),
                line,
                col,
            });
        }
    }
    out.push(Token { tok: Tok::End, line, col });
    Ok(out)
}

/// Rejects unbalanced parentheses before parsing, pointing at the offending
/// `)` or at the last token when some `(` is never closed.
fn check_parens(tokens: &[Token]) -> Result<(), ParseError> {
    let mut depth = 0usize;
    let mut last = None;
    for t in tokens {
        match t.tok {
            Tok::Sym('(') => depth += 1,
            Tok::Sym(')') => {
                if depth == 0 {
                    return Err(ParseError {
                        kind: ParseErrorKind::UnbalancedParens,
                        line: t.line,
                        col: t.col,
                    });
                }
                depth -= 1;
            }
            // Statements never span a semicolon, so a pending `(` there is unbalanced.
            Tok::Sym(';') if depth > 0 => {
                let at: &Token = last.unwrap_or(t);
                return Err(ParseError {
                    kind: ParseErrorKind::UnbalancedParens,
                    line: at.line,
                    col: at.col,
                });
            }
            Tok::End => {
                if depth > 0 {
                    let at: &Token = last.unwrap_or(t);
                    return Err(ParseError {
                        kind: ParseErrorKind::UnbalancedParens,
                        line: at.line,
                        col: at.col,
                    });
                }
            }
            _ => {}
        }
        last = Some(t);
    }
    Ok(())
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    gens: Vec<GeneratorDecl>,
    allow_q: bool,
    /// Generators allowed on the right-hand side of a substitution.
    target: Option<&'a Shape>,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn new(text: &str) -> PResult<Self> {
        let toks = lex(text)?;
        check_parens(&toks)?;
        Ok(Parser {
            toks,
            pos: 0,
            gens: Vec::new(),
            allow_q: false,
            target: None,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn here(&self) -> (usize, usize) {
        let t = &self.toks[self.pos];
        (t.line, t.col)
    }

    fn err<T>(&self, kind: ParseErrorKind) -> PResult<T> {
        let (line, col) = self.here();
        Err(ParseError { kind, line, col })
    }

    fn err_at<T>(&self, at: (usize, usize), kind: ParseErrorKind) -> PResult<T> {
        Err(ParseError {
            kind,
            line: at.0,
            col: at.1,
        })
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn is_sym(&self, c: char) -> bool {
        *self.peek() == Tok::Sym(c)
    }

    fn is_kw(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    fn expect_sym(&mut self, c: char) -> PResult<()> {
        if self.is_sym(c) {
            self.bump();
            Ok(())
        } else {
            self.err(ParseErrorKind::Expected(format!("'{c}', found {}", self.peek())))
        }
    }

    fn expect_kw(&mut self, kw: &str) -> PResult<()> {
        if self.is_kw(kw) {
            self.bump();
            Ok(())
        } else {
            self.err(ParseErrorKind::Expected(format!("'{kw}', found {}", self.peek())))
        }
    }

    fn ident(&mut self) -> PResult<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            other => self.err(ParseErrorKind::Expected(format!("identifier, found {other}"))),
        }
    }

    fn presentation(&mut self) -> PResult<Presentation> {
        let (name, wrapped) = if self.is_kw("operad") {
            self.bump();
            let name = self.ident()?;
            self.expect_sym('{')?;
            (name, true)
        } else {
            ("P".to_string(), false)
        };
        let mut params = Vec::new();
        if self.is_kw("params") {
            self.bump();
            self.expect_sym(':')?;
            self.expect_kw("q")?;
            self.expect_sym(';')?;
            params.push("q".to_string());
            self.allow_q = true;
        }
        while self.is_kw("gen") {
            self.bump();
            let at = self.here();
            let name = self.ident()?;
            if RESERVED.contains(&name.as_str()) || ["operad", "params", "gen", "rel"].contains(&name.as_str()) {
                return self.err_at(at, ParseErrorKind::Expected(format!("generator name, found reserved {name}")));
            }
            if self.gens.iter().any(|g| g.name == name) {
                return self.err_at(at, ParseErrorKind::DuplicateGenerator(name));
            }
            self.expect_sym(':')?;
            let sym = match self.ident()?.as_str() {
                "comm" => Symmetry::Comm,
                "anti" => Symmetry::Anti,
                "none" => Symmetry::None,
                other => {
                    return self.err(ParseErrorKind::Expected(format!("comm, anti or none, found {other}")))
                }
            };
            self.expect_sym(';')?;
            self.gens.push(GeneratorDecl { name, symmetry: sym });
        }
        let mut relations = Vec::new();
        while self.is_kw("rel") {
            self.bump();
            relations.push(self.relation()?);
            self.expect_sym(';')?;
        }
        if wrapped {
            self.expect_sym('}')?;
        }
        if *self.peek() != Tok::End {
            let what = if self.is_kw("gen") {
                "relations after all generator declarations".to_string()
            } else {
                format!("'gen' or 'rel', found {}", self.peek())
            };
            return self.err(ParseErrorKind::Expected(what));
        }
        if self.gens.is_empty() {
            return self.err(ParseErrorKind::Expected("at least one generator".into()));
        }
        Ok(Presentation::new(&name, params, self.gens.clone(), relations)
            .expect("relations validated during parsing"))
    }

    /// `sum "=" ("0" | sum)`; a nonzero right-hand side is moved to the left.
    fn relation(&mut self) -> PResult<RelationExpr> {
        let lhs = self.sum()?;
        self.expect_sym('=')?;
        if matches!(self.peek(), Tok::Int(n) if n == &BigInt::from(0)) && self.peek_at(1) == &Tok::Sym(';') {
            self.bump();
            return Ok(lhs);
        }
        let rhs = self.sum()?;
        Ok(lhs.add(&rhs.scale(&-Scalar::one())))
    }

    fn sum(&mut self) -> PResult<RelationExpr> {
        let mut sign = Scalar::one();
        if self.is_sym('-') {
            self.bump();
            sign = -sign;
        } else if self.is_sym('+') {
            self.bump();
        }
        let mut acc = self.term()?.scale(&sign);
        loop {
            let s = if self.is_sym('+') {
                Scalar::one()
            } else if self.is_sym('-') {
                -Scalar::one()
            } else {
                return Ok(acc);
            };
            self.bump();
            acc = acc.add(&self.term()?.scale(&s));
        }
    }

    fn at_app(&self) -> bool {
        matches!(self.peek(), Tok::Ident(s) if !RESERVED.contains(&s.as_str()))
            && *self.peek_at(1) == Tok::Sym('(')
    }

    /// A `(` opening a group that contains generator applications.
    fn at_group(&self) -> bool {
        if !self.is_sym('(') {
            return false;
        }
        let mut depth = 0;
        let mut k = self.pos;
        while k < self.toks.len() {
            match &self.toks[k].tok {
                Tok::Sym('(') => depth += 1,
                Tok::Sym(')') => {
                    depth -= 1;
                    if depth == 0 {
                        return false;
                    }
                }
                Tok::Ident(s) if !RESERVED.contains(&s.as_str()) => return true,
                Tok::End => return false,
                _ => {}
            }
            k += 1;
        }
        false
    }

    /// `(scalar ("*" | "/"))* (app | "(" sum ")")`.
    fn term(&mut self) -> PResult<RelationExpr> {
        let mut coef = Scalar::one();
        let mut divide = false;
        loop {
            if self.at_app() || self.at_group() {
                if divide {
                    return self.err(ParseErrorKind::Expected("a scalar after '/'".into()));
                }
                let body = if self.at_app() {
                    let start = self.here();
                    let t = self.app()?;
                    self.check_monomial(&t, start)?;
                    RelationExpr::new(vec![(Scalar::one(), t)])
                } else {
                    self.bump();
                    let s = self.sum()?;
                    self.expect_sym(')')?;
                    s
                };
                return Ok(body.scale(&coef));
            }
            let at = self.here();
            let f = self.scalar_pow()?;
            coef = if divide {
                match coef.div(&f) {
                    Ok(c) => c,
                    Err(_) => return self.err_at(at, ParseErrorKind::DivisionByZero),
                }
            } else {
                coef * f
            };
            if self.is_sym('*') {
                divide = false;
            } else if self.is_sym('/') {
                divide = true;
            } else {
                return self.err(ParseErrorKind::Expected(format!(
                    "'*' and a generator application, found {}",
                    self.peek()
                )));
            }
            self.bump();
        }
    }

    fn check_monomial(&self, t: &Tree, at: (usize, usize)) -> PResult<()> {
        if self.target.is_some() {
            return Ok(());
        }
        let leaves = t.leaves();
        if t.nodes() != 2 || leaves.len() != 3 {
            return self.err_at(
                at,
                ParseErrorKind::WrongArity(format!(
                    "monomial has {} leaves and {} operations, expected 3 and 2",
                    leaves.len(),
                    t.nodes()
                )),
            );
        }
        for (i, v) in leaves.iter().enumerate() {
            if leaves[..i].contains(v) {
                return self.err_at(at, ParseErrorKind::RepeatedVariable(crate::free3::VAR_NAMES[*v as usize]));
            }
        }
        Ok(())
    }

    fn gen_lookup(&self, name: &str) -> Option<usize> {
        match self.target {
            Some(s) => s.gen_index(name),
            None => self.gens.iter().position(|g| g.name == name),
        }
    }

    fn app(&mut self) -> PResult<Tree> {
        let at = self.here();
        let name = self.ident()?;
        let Some(g) = self.gen_lookup(&name) else {
            return self.err_at(at, ParseErrorKind::UnknownGenerator(name));
        };
        self.expect_sym('(')?;
        let mut args = vec![self.arg()?];
        while self.is_sym(',') {
            self.bump();
            args.push(self.arg()?);
        }
        self.expect_sym(')')?;
        if args.len() != 2 {
            return self.err_at(
                at,
                ParseErrorKind::WrongArity(format!("{name} takes 2 arguments, got {}", args.len())),
            );
        }
        let r = args.pop().expect("two args");
        let l = args.pop().expect("two args");
        Ok(Tree::app(g, l, r))
    }

    fn arg(&mut self) -> PResult<Tree> {
        match self.peek().clone() {
            Tok::Ident(s) if s == "x" || s == "y" || s == "z" => {
                self.bump();
                Ok(Tree::Var(match s.as_str() {
                    "x" => 0,
                    "y" => 1,
                    _ => 2,
                }))
            }
            Tok::Ident(_) => self.app(),
            other => self.err(ParseErrorKind::Expected(format!("variable or application, found {other}"))),
        }
    }

    fn scalar_sum(&mut self) -> PResult<Scalar> {
        let mut neg = false;
        if self.is_sym('-') {
            self.bump();
            neg = true;
        } else if self.is_sym('+') {
            self.bump();
        }
        let first = self.scalar_prod()?;
        let mut acc = if neg { -first } else { first };
        loop {
            if self.is_sym('+') {
                self.bump();
                acc += self.scalar_prod()?;
            } else if self.is_sym('-') {
                self.bump();
                acc = acc - self.scalar_prod()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn scalar_prod(&mut self) -> PResult<Scalar> {
        let mut acc = self.scalar_pow()?;
        loop {
            if self.is_sym('*') {
                self.bump();
                acc = acc * self.scalar_pow()?;
            } else if self.is_sym('/') {
                self.bump();
                let at = self.here();
                let d = self.scalar_pow()?;
                acc = match acc.div(&d) {
                    Ok(c) => c,
                    Err(_) => return self.err_at(at, ParseErrorKind::DivisionByZero),
                };
            } else {
                return Ok(acc);
            }
        }
    }

    fn scalar_pow(&mut self) -> PResult<Scalar> {
        let base = self.scalar_atom()?;
        if !self.is_sym('^') {
            return Ok(base);
        }
        self.bump();
        let neg = if self.is_sym('-') {
            self.bump();
            true
        } else {
            false
        };
        let Tok::Int(n) = self.peek().clone() else {
            return self.err(ParseErrorKind::Expected("integer exponent".into()));
        };
        let at = self.here();
        self.bump();
        let e: i64 = match i64::try_from(n) {
            Ok(e) if e <= 64 => e,
            _ => return self.err_at(at, ParseErrorKind::Expected("exponent at most 64".into())),
        };
        let e = if neg { -e } else { e };
        base.powi(e)
            .or_else(|_| self.err_at(at, ParseErrorKind::DivisionByZero))
    }

    fn scalar_atom(&mut self) -> PResult<Scalar> {
        let at = self.here();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Scalar::from_rational(Rational::from_integer(n)))
            }
            Tok::Ident(s) if s == "u" => {
                self.bump();
                Ok(Scalar::u())
            }
            Tok::Ident(s) if s == "q" || s == "v" => {
                if !self.allow_q {
                    return self.err_at(at, ParseErrorKind::UndeclaredParameter("q".into()));
                }
                self.bump();
                Ok(if s == "q" { Scalar::q() } else { Scalar::v() })
            }
            Tok::Sym('(') => {
                self.bump();
                let s = self.scalar_sum()?;
                self.expect_sym(')')?;
                Ok(s)
            }
            Tok::Sym('-') => {
                self.bump();
                Ok(-self.scalar_pow()?)
            }
            other => self.err(ParseErrorKind::Expected(format!("scalar, found {other}"))),
        }
    }
}

/// Parses a presentation in the grammar
/// `operad NAME { params: q; gen m: none; rel ... = 0; }` (the `operad`
/// wrapper is optional).
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    Parser::new(text)?.presentation()
}

/// Parses a single relation `sum = 0` (or `sum = sum`) over the generators of `p`.
pub fn parse_relation(p: &Presentation, text: &str) -> Result<RelationExpr, ParseError> {
    let mut parser = Parser::new(text)?;
    parser.gens = p.gens().to_vec();
    parser.allow_q = true;
    let r = if parser.is_sym('=') {
        parser.err(ParseErrorKind::Expected("a relation".into()))?
    } else {
        let lhs = parser.sum()?;
        if parser.is_sym('=') {
            parser.bump();
            let rhs = parser.sum_or_zero()?;
            lhs.add(&rhs.scale(&-Scalar::one()))
        } else {
            lhs
        }
    };
    if parser.is_sym(';') {
        parser.bump();
    }
    if *parser.peek() != Tok::End {
        return parser.err(ParseErrorKind::Expected(format!("end of relation, found {}", parser.peek())));
    }
    Ok(r)
}

impl<'a> Parser<'a> {
    fn sum_or_zero(&mut self) -> PResult<RelationExpr> {
        if matches!(self.peek(), Tok::Int(n) if n == &BigInt::from(0))
            && matches!(self.peek_at(1), Tok::Sym(';') | Tok::End)
        {
            self.bump();
            return Ok(RelationExpr::zero());
        }
        self.sum()
    }
}

/// Parses a generator substitution such as
/// `m(x,y) = ((1+v)/2)*m(x,y) + ((1-v)/2)*m(y,x)`, one clause per source
/// generator separated by `;`. Each right-hand side is a combination of
/// `target` generators applied to `(x,y)` or `(y,x)`.
pub fn parse_substitution(source: &Shape, target: &Shape, text: &str) -> Result<GenSubst, ParseError> {
    let mut parser = Parser::new(text)?;
    parser.allow_q = true;
    let mut images: Vec<Option<Vec<GenImage>>> = vec![None; source.gens().len()];
    while *parser.peek() != Tok::End {
        let at = parser.here();
        let name = parser.ident()?;
        let Some(g) = source.gen_index(&name) else {
            return parser.err_at(at, ParseErrorKind::UnknownGenerator(name));
        };
        parser.expect_sym('(')?;
        parser.expect_kw("x")?;
        parser.expect_sym(',')?;
        parser.expect_kw("y")?;
        parser.expect_sym(')')?;
        parser.expect_sym('=')?;
        parser.target = Some(target);
        let rhs = parser.sum()?;
        parser.target = None;
        let mut terms = Vec::new();
        for (c, t) in rhs.terms {
            let img = match &t {
                Tree::App(h, l, r) => match (l.as_ref(), r.as_ref()) {
                    (Tree::Var(0), Tree::Var(1)) => GenImage::new(c, *h, false),
                    (Tree::Var(1), Tree::Var(0)) => GenImage::new(c, *h, true),
                    _ => {
                        return parser.err_at(at, ParseErrorKind::WrongArity("image terms must be g(x,y) or g(y,x)".into()))
                    }
                },
                Tree::Var(_) => unreachable!("terms are applications"),
            };
            terms.push(img);
        }
        images[g] = Some(terms);
        if parser.is_sym(';') {
            parser.bump();
        } else if *parser.peek() != Tok::End {
            return parser.err(ParseErrorKind::Expected(format!("';', found {}", parser.peek())));
        }
    }
    let mut out = Vec::new();
    for (g, img) in images.into_iter().enumerate() {
        match img {
            Some(i) => out.push(i),
            None => {
                let (line, col) = parser.here();
                return Err(ParseError {
                    kind: ParseErrorKind::Expected(format!("an image for generator {}", source.gens()[g].name)),
                    line,
                    col,
                });
            }
        }
    }
    Ok(GenSubst::new(out))
}

impl From<Free3Error> for ParseErrorKind {
    fn from(e: Free3Error) -> Self {
        ParseErrorKind::Expected(e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err_kind(text: &str) -> (ParseErrorKind, usize, usize) {
        let e = parse_presentation(text).unwrap_err();
        (e.kind, e.line, e.col)
    }

    #[test]
    fn bare_body_parses() {
        let p = parse_presentation("gen m: none; rel m(m(x,y),z) - m(x,m(y,z)) = 0;").unwrap();
        assert_eq!(p.gens().len(), 1);
        assert_eq!(p.relation_space().rank(), 6);
    }

    #[test]
    fn unbalanced_position() {
        let e = parse_presentation("rel m(m(x,y),z) - m(x,m(y,z)").unwrap_err();
        assert_eq!(e.to_string(), "unbalanced parentheses at 1:28");
        assert_eq!(err_kind("gen m: none;\nrel m(x,y)) = 0;").0, ParseErrorKind::UnbalancedParens);
    }

    #[test]
    fn error_kinds() {
        assert_eq!(err_kind("gen m: none; rel m(x,y) ? 0;"), (ParseErrorKind::Lexical('?'), 1, 25));
        assert_eq!(
            err_kind("gen m: none;\nrel k(m(x,y),z) = 0;"),
            (ParseErrorKind::UnknownGenerator("k".into()), 2, 5)
        );
        assert_eq!(
            err_kind("gen m: none; rel m(m(x,x),z) = 0;").0,
            ParseErrorKind::RepeatedVariable('x')
        );
        assert!(matches!(err_kind("gen m: none; rel m(x,y,z) = 0;").0, ParseErrorKind::WrongArity(_)));
        assert!(matches!(err_kind("gen m: none; rel m(x,y) = 0;").0, ParseErrorKind::WrongArity(_)));
        assert_eq!(
            err_kind("gen m: none; rel q*m(m(x,y),z) = 0;").0,
            ParseErrorKind::UndeclaredParameter("q".into())
        );
        assert_eq!(
            err_kind("gen m: none; gen m: comm;").0,
            ParseErrorKind::DuplicateGenerator("m".into())
        );
    }

    #[test]
    fn scalar_coefficients() {
        let p = parse_presentation(
            "operad T { params: q; gen m: none; rel ((q-1)/(q+3) + (1/2)*u)*m(m(x,y),z) - 2/3*m(x,m(y,z)) = 0; }",
        )
        .unwrap();
        let r = &p.relations[0];
        assert_eq!(r.terms[0].0.to_string(), "(q-1)/(q+3) + (1/2)*u");
        assert_eq!(r.terms[1].0, Scalar::rat(-2, 3));
    }

    #[test]
    fn grouped_sum_and_rhs() {
        let a = parse_presentation("gen m: none; rel m(x,m(y,z)) = m(m(x,y),z) - (1/3)*(m(m(x,z),y) + m(m(y,z),x));")
            .unwrap();
        assert_eq!(a.relations[0].terms.len(), 4);
        assert_eq!(a.relations[0].terms[3].0, Scalar::rat(1, 3));
    }

    #[test]
    fn substitution_text() {
        let s = Shape::new(vec![GeneratorDecl::new("m", Symmetry::None)]);
        let sub = parse_substitution(&s, &s, "m(x,y) = ((1+v)/2)*m(x,y) + ((1-v)/2)*m(y,x)").unwrap();
        assert_eq!(sub.images[0].len(), 2);
        assert!(sub.images[0][1].swapped);
    }
}
