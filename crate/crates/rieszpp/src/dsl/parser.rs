//! Recursive-descent parser for definition files and single expressions.
//!
//! Operator precedence, tightest first: `| |`, `*` (scalar), unary `-`,
//! binary `-` and `+`, `/\`, `\/`; binary operators associate left.
//! Elaboration is eager: named operations run as the expression is parsed,
//! so a parsed binding is always a finished value.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::c00::{C00TensorExpr, FinSuppMap, Index};
use crate::error::{Error, Result};
use crate::exactnum::{Polynomial, Rational};
use crate::finitedim::{FiniteMatrix, FiniteVector};
use crate::pplattice::PiecewisePoly;
use crate::tensorlattice::{LatticeExpr, TensorSum};

use super::lexer::{tokenize, Tok, Token};

/// Any value a binding can hold.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Pp(PiecewisePoly),
    Tensor(LatticeExpr),
    C00Rat(FinSuppMap<Rational>),
    C00Pp(FinSuppMap<PiecewisePoly>),
    CtenRat(C00TensorExpr<Rational>),
    CtenPp(C00TensorExpr<PiecewisePoly>),
    Vector(FiniteVector),
    Matrix(FiniteMatrix),
    Psi {
        rows: usize,
        cols: usize,
        table: BTreeMap<(usize, usize), FiniteMatrix>,
    },
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Pp(_) => "piecewise polynomial",
            Value::Tensor(_) => "tensor expression",
            Value::C00Rat(_) => "c00 map of rationals",
            Value::C00Pp(_) => "c00 map of piecewise polynomials",
            Value::CtenRat(_) => "indicator-tensor expression of rationals",
            Value::CtenPp(_) => "indicator-tensor expression of piecewise polynomials",
            Value::Vector(_) => "finite vector",
            Value::Matrix(_) => "finite matrix",
            Value::Psi { .. } => "bimorphism table",
        }
    }
}

/// An ordered, name-addressable list of bindings. The name `h` is reserved
/// and always bound to the counterexample target.
#[derive(Debug, Clone)]
pub struct SourceProgram {
    bindings: Vec<(String, Value)>,
    by_name: HashMap<String, usize>,
}

impl SourceProgram {
    fn with_builtins() -> Self {
        let mut p = SourceProgram {
            bindings: Vec::new(),
            by_name: HashMap::new(),
        };
        p.insert("h".to_string(), Value::Tensor(builtin_h()));
        p
    }

    fn insert(&mut self, name: String, value: Value) {
        self.by_name.insert(name.clone(), self.bindings.len());
        self.bindings.push((name, value));
    }

    pub fn get(&self, name: &str) -> Result<&Value> {
        self.by_name
            .get(name)
            .map(|&i| &self.bindings[i].1)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    /// User bindings in definition order, excluding the built-in `h`.
    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.bindings.iter().skip(1).map(|(n, _)| n.as_str())
    }
}

/// The counterexample target h = (1 (x) y^2) /\ (x^2 (x) 1) as an input
/// expression.
pub fn builtin_h() -> LatticeExpr {
    let one = PiecewisePoly::constant(Rational::from_integer(1.into()));
    let sq = PiecewisePoly::from_poly(Polynomial::monomial(Rational::from_integer(1.into()), 2));
    LatticeExpr::Meet(
        Box::new(LatticeExpr::leaf(TensorSum::elementary(
            one.clone(),
            sq.clone(),
        ))),
        Box::new(LatticeExpr::leaf(TensorSum::elementary(sq, one))),
    )
}

/// Parses a definition file: one `let NAME = expr` per line, `#` comments.
pub fn parse_program(text: &str) -> Result<SourceProgram> {
    let tokens = tokenize(text)?;
    let mut program = SourceProgram::with_builtins();
    let mut p = Parser {
        toks: &tokens,
        pos: 0,
    };
    loop {
        while p.peek() == &Tok::Newline {
            p.bump();
        }
        if p.peek() == &Tok::Eof {
            break;
        }
        p.expect(&Tok::Let)?;
        let name = match p.bump().clone() {
            Token {
                tok: Tok::Name(n), ..
            } => n,
            t => return Err(p.unexpected_at(&t, "a binding name")),
        };
        if name == "h" || name == "x" || name == "y" {
            return Err(Error::Binding {
                name,
                source: Box::new(Error::Type("this name is reserved".into())),
            });
        }
        if program.by_name.contains_key(&name) {
            return Err(Error::Binding {
                name,
                source: Box::new(Error::Type("name is already bound".into())),
            });
        }
        p.expect(&Tok::Equals)?;
        let tv = p
            .parse_expr(&program)
            .map_err(|e| bind_err(&name, e))?;
        match p.peek() {
            Tok::Newline | Tok::Eof => {}
            _ => {
                let t = p.current().clone();
                return Err(bind_err(&name, p.unexpected_at(&t, "end of line")));
            }
        }
        program.insert(name, tv.value);
    }
    Ok(program)
}

/// Parses a single expression against the built-in environment only.
pub fn parse_value(text: &str) -> Result<Value> {
    let tokens = tokenize(text)?;
    let program = SourceProgram::with_builtins();
    let mut p = Parser {
        toks: &tokens,
        pos: 0,
    };
    while p.peek() == &Tok::Newline {
        p.bump();
    }
    let tv = p.parse_expr(&program)?;
    while p.peek() == &Tok::Newline {
        p.bump();
    }
    if p.peek() != &Tok::Eof {
        let t = p.current().clone();
        return Err(p.unexpected_at(&t, "end of input"));
    }
    Ok(tv.value)
}

/// Parses a standalone rational such as "7", "-3/2" (used for CLI flags).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        toks: &tokens,
        pos: 0,
    };
    let r = p.parse_rat(true)?;
    if p.peek() != &Tok::Eof {
        let t = p.current().clone();
        return Err(p.unexpected_at(&t, "end of input"));
    }
    Ok(r)
}

fn bind_err(name: &str, e: Error) -> Error {
    match e {
        already @ Error::Binding { .. } => already,
        other => Error::Binding {
            name: name.to_string(),
            source: Box::new(other),
        },
    }
}

/// The variable letter seen inside piecewise-polynomial literals; used to
/// keep x on left tensor factors and y on right ones.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Var {
    Unused,
    X,
    Y,
}

impl Var {
    fn merge(self, other: Var) -> Result<Var> {
        match (self, other) {
            (Var::Unused, v) | (v, Var::Unused) => Ok(v),
            (a, b) if a == b => Ok(a),
            _ => Err(Error::Type(
                "variables x and y mixed in one piecewise polynomial".into(),
            )),
        }
    }
}

/// A parsed value plus the variable letter of its pp literals, if any.
struct TV {
    value: Value,
    var: Var,
}

impl TV {
    fn new(value: Value) -> Self {
        TV {
            value,
            var: Var::Unused,
        }
    }
}

struct Parser<'a> {
    toks: &'a [Token],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn current(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek2(&self) -> &Tok {
        if self.pos + 1 < self.toks.len() {
            &self.toks[self.pos + 1].tok
        } else {
            &Tok::Eof
        }
    }

    fn bump(&mut self) -> &Token {
        let t = &self.toks[self.pos];
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected_at(&self, t: &Token, wanted: &str) -> Error {
        Error::Syntax {
            context: "parse".into(),
            line: t.line,
            column: t.column,
            message: format!("expected {wanted}, found {}", t.tok.describe()),
        }
    }

    fn expect(&mut self, tok: &Tok) -> Result<()> {
        if self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            let t = self.current().clone();
            Err(self.unexpected_at(&t, &tok.describe()))
        }
    }

    fn parse_expr(&mut self, env: &SourceProgram) -> Result<TV> {
        let mut lhs = self.parse_meet_level(env)?;
        while self.peek() == &Tok::JoinOp {
            self.bump();
            let rhs = self.parse_meet_level(env)?;
            lhs = join_vals(lhs, rhs)?;
        }
        Ok(lhs)
    }

    fn parse_meet_level(&mut self, env: &SourceProgram) -> Result<TV> {
        let mut lhs = self.parse_additive(env)?;
        while self.peek() == &Tok::MeetOp {
            self.bump();
            let rhs = self.parse_additive(env)?;
            lhs = meet_vals(lhs, rhs)?;
        }
        Ok(lhs)
    }

    fn parse_additive(&mut self, env: &SourceProgram) -> Result<TV> {
        let mut lhs = self.parse_unary(env)?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    let rhs = self.parse_unary(env)?;
                    lhs = add_vals(lhs, rhs)?;
                }
                Tok::Minus => {
                    self.bump();
                    let rhs = self.parse_unary(env)?;
                    lhs = add_vals(lhs, neg_val(rhs)?)?;
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn parse_unary(&mut self, env: &SourceProgram) -> Result<TV> {
        if self.peek() == &Tok::Minus {
            self.bump();
            let v = self.parse_unary(env)?;
            return neg_val(v);
        }
        self.parse_scale(env)
    }

    fn parse_scale(&mut self, env: &SourceProgram) -> Result<TV> {
        if matches!(self.peek(), Tok::Int(_)) {
            let c = self.parse_rat(false)?;
            self.expect(&Tok::Star)?;
            let v = self.parse_unary(env)?;
            return scale_val(&c, v);
        }
        self.parse_primary(env)
    }

    fn parse_primary(&mut self, env: &SourceProgram) -> Result<TV> {
        match self.peek().clone() {
            Tok::Pipe => {
                self.bump();
                let v = self.parse_expr(env)?;
                self.expect(&Tok::Pipe)?;
                abs_val(v)
            }
            Tok::LParen => {
                self.bump();
                let v = self.parse_expr(env)?;
                self.expect(&Tok::RParen)?;
                if self.peek() == &Tok::KwOx {
                    self.bump();
                    self.expect(&Tok::LParen)?;
                    let rhs = self.parse_expr(env)?;
                    self.expect(&Tok::RParen)?;
                    return tensor_pair(v, rhs);
                }
                Ok(v)
            }
            Tok::KwPp => self.parse_ppterm(),
            Tok::KwC00 => self.parse_c00_map(),
            Tok::KwC00t => self.parse_c00_tensor(),
            Tok::KwVec => self.parse_vec(),
            Tok::KwMat => self.parse_mat().map(|m| TV::new(Value::Matrix(m))),
            Tok::KwPsi => self.parse_psi(env),
            Tok::Name(n) => {
                self.bump();
                Ok(TV::new(env.get(&n)?.clone()))
            }
            _ => {
                let t = self.current().clone();
                Err(self.unexpected_at(&t, "an expression"))
            }
        }
    }

    /// "pp" ("[" rat ":" poly "]")+
    fn parse_ppterm(&mut self) -> Result<TV> {
        self.expect(&Tok::KwPp)?;
        let mut breakpoints = Vec::new();
        let mut pieces = Vec::new();
        let mut var = Var::Unused;
        while self.peek() == &Tok::LBracket {
            self.bump();
            let b = self.parse_rat(false)?;
            self.expect(&Tok::Colon)?;
            let (p, v) = self.parse_poly()?;
            self.expect(&Tok::RBracket)?;
            breakpoints.push(b);
            pieces.push(p);
            var = var.merge(v)?;
        }
        if breakpoints.is_empty() {
            let t = self.current().clone();
            return Err(self.unexpected_at(&t, "`[` opening a piece"));
        }
        let f = PiecewisePoly::new(breakpoints, pieces)?;
        Ok(TV {
            value: Value::Pp(f),
            var,
        })
    }

    /// poly := ["-"] term (("+" | "-") term)* ;
    /// term := rat ("*" var ("^" INT)?)? | var ("^" INT)?
    fn parse_poly(&mut self) -> Result<(Polynomial, Var)> {
        let mut acc = Polynomial::zero();
        let mut var = Var::Unused;
        let mut negate = false;
        if self.peek() == &Tok::Minus {
            self.bump();
            negate = true;
        }
        loop {
            let (term, v) = self.parse_poly_term()?;
            var = var.merge(v)?;
            acc = if negate { &acc - &term } else { &acc + &term };
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    negate = false;
                }
                Tok::Minus => {
                    self.bump();
                    negate = true;
                }
                _ => return Ok((acc, var)),
            }
        }
    }

    fn parse_poly_term(&mut self) -> Result<(Polynomial, Var)> {
        let coeff = if matches!(self.peek(), Tok::Int(_)) {
            let c = self.parse_rat(false)?;
            if self.peek() == &Tok::Star {
                self.bump();
            } else {
                return Ok((Polynomial::constant(c), Var::Unused));
            }
            c
        } else {
            Rational::from_integer(1.into())
        };
        let var = match self.peek().clone() {
            Tok::Name(n) if n == "x" => {
                self.bump();
                Var::X
            }
            Tok::Name(n) if n == "y" => {
                self.bump();
                Var::Y
            }
            _ => {
                let t = self.current().clone();
                return Err(self.unexpected_at(&t, "a variable `x` or `y`"));
            }
        };
        let degree = if self.peek() == &Tok::Caret {
            self.bump();
            match self.bump().clone() {
                Token {
                    tok: Tok::Int(n), ..
                } => usize::try_from(&n).map_err(|_| Error::Type("exponent too large".into()))?,
                t => return Err(self.unexpected_at(&t, "an integer exponent")),
            }
        } else {
            1
        };
        Ok((Polynomial::monomial(coeff, degree), var))
    }

    /// rat := ["-"] INT ("/" POSINT)? ; the sign is only allowed where a
    /// literal rational is expected, not in expression position.
    fn parse_rat(&mut self, allow_neg: bool) -> Result<Rational> {
        let mut neg = false;
        if allow_neg && self.peek() == &Tok::Minus {
            self.bump();
            neg = true;
        }
        let num: BigInt = match self.bump().clone() {
            Token {
                tok: Tok::Int(n), ..
            } => n,
            t => return Err(self.unexpected_at(&t, "a number")),
        };
        let mut den = BigInt::from(1);
        if self.peek() == &Tok::Slash && matches!(self.peek2(), Tok::Int(_)) {
            self.bump();
            if let Token {
                tok: Tok::Int(d),
                line,
                column,
            } = self.bump().clone()
            {
                if d.is_zero() {
                    return Err(Error::Syntax {
                        context: "parse".into(),
                        line,
                        column,
                        message: "denominator must be positive".into(),
                    });
                }
                den = d;
            }
        }
        let r = Rational::new(num, den);
        Ok(if neg { -r } else { r })
    }

    /// "c00" "{" [entry ("," entry)*] "}" ; entry := NAME ":" (rat | ppterm)
    fn parse_c00_map(&mut self) -> Result<TV> {
        self.expect(&Tok::KwC00)?;
        self.expect(&Tok::LBrace)?;
        let mut rat_pairs: Vec<(Index, Rational)> = Vec::new();
        let mut pp_pairs: Vec<(Index, PiecewisePoly)> = Vec::new();
        if self.peek() != &Tok::RBrace {
            loop {
                let key = match self.bump().clone() {
                    Token {
                        tok: Tok::Name(n), ..
                    } => Index::new(n),
                    t => return Err(self.unexpected_at(&t, "an index name")),
                };
                self.expect(&Tok::Colon)?;
                match self.parse_c00_value()? {
                    C00Value::Rat(r) => rat_pairs.push((key, r)),
                    C00Value::Pp(f) => pp_pairs.push((key, f)),
                }
                if self.peek() == &Tok::Comma {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect(&Tok::RBrace)?;
        if !rat_pairs.is_empty() && !pp_pairs.is_empty() {
            return Err(Error::Type(
                "c00 map mixes rational and piecewise-polynomial values".into(),
            ));
        }
        Ok(TV::new(if pp_pairs.is_empty() {
            Value::C00Rat(FinSuppMap::from_entries(rat_pairs))
        } else {
            Value::C00Pp(FinSuppMap::from_entries(pp_pairs))
        }))
    }

    fn parse_c00_value(&mut self) -> Result<C00Value> {
        if self.peek() == &Tok::KwPp {
            let tv = self.parse_ppterm()?;
            if tv.var == Var::Y {
                return Err(Error::Type("c00 map values use the variable x".into()));
            }
            match tv.value {
                Value::Pp(f) => Ok(C00Value::Pp(f)),
                _ => unreachable!(),
            }
        } else {
            Ok(C00Value::Rat(self.parse_rat(true)?))
        }
    }

    /// "c00t" ("[" NAME ":" (rat | ppterm) "]")+ — a sum of indicator
    /// tensors 1_{name} (x) value.
    fn parse_c00_tensor(&mut self) -> Result<TV> {
        self.expect(&Tok::KwC00t)?;
        let mut rat_pairs: Vec<(Index, Rational)> = Vec::new();
        let mut pp_pairs: Vec<(Index, PiecewisePoly)> = Vec::new();
        while self.peek() == &Tok::LBracket {
            self.bump();
            let key = match self.bump().clone() {
                Token {
                    tok: Tok::Name(n), ..
                } => Index::new(n),
                t => return Err(self.unexpected_at(&t, "an index name")),
            };
            self.expect(&Tok::Colon)?;
            match self.parse_c00_value()? {
                C00Value::Rat(r) => rat_pairs.push((key, r)),
                C00Value::Pp(f) => pp_pairs.push((key, f)),
            }
            self.expect(&Tok::RBracket)?;
        }
        if rat_pairs.is_empty() && pp_pairs.is_empty() {
            let t = self.current().clone();
            return Err(self.unexpected_at(&t, "`[` opening an indicator term"));
        }
        if !rat_pairs.is_empty() && !pp_pairs.is_empty() {
            return Err(Error::Type(
                "c00t sum mixes rational and piecewise-polynomial values".into(),
            ));
        }
        Ok(TV::new(if pp_pairs.is_empty() {
            Value::CtenRat(C00TensorExpr::Sum(rat_pairs))
        } else {
            Value::CtenPp(C00TensorExpr::Sum(pp_pairs))
        }))
    }

    /// "vec" "[" [rat ("," rat)*] "]"
    fn parse_vec(&mut self) -> Result<TV> {
        self.expect(&Tok::KwVec)?;
        self.expect(&Tok::LBracket)?;
        let mut coords = Vec::new();
        if self.peek() != &Tok::RBracket {
            loop {
                coords.push(self.parse_rat(true)?);
                if self.peek() == &Tok::Comma {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect(&Tok::RBracket)?;
        Ok(TV::new(Value::Vector(FiniteVector::new(coords))))
    }

    /// "mat" "[" row ("," row)* "]" ; row := "[" rat ("," rat)* "]"
    fn parse_mat(&mut self) -> Result<FiniteMatrix> {
        self.expect(&Tok::KwMat)?;
        self.expect(&Tok::LBracket)?;
        let mut data: Vec<Rational> = Vec::new();
        let mut rows = 0usize;
        let mut cols: Option<usize> = None;
        loop {
            self.expect(&Tok::LBracket)?;
            let mut row = Vec::new();
            loop {
                row.push(self.parse_rat(true)?);
                if self.peek() == &Tok::Comma {
                    self.bump();
                } else {
                    break;
                }
            }
            self.expect(&Tok::RBracket)?;
            match cols {
                None => cols = Some(row.len()),
                Some(c) => {
                    if row.len() != c {
                        return Err(Error::DimensionMismatch {
                            expected: format!("rows of {c} entries"),
                            got: format!("a row of {} entries", row.len()),
                        });
                    }
                }
            }
            rows += 1;
            data.extend(row);
            if self.peek() == &Tok::Comma {
                self.bump();
            } else {
                break;
            }
        }
        self.expect(&Tok::RBracket)?;
        FiniteMatrix::new(rows, cols.unwrap(), data)
    }

    /// "psi" "{" entry ("," entry)* "}" ;
    /// entry := "(" INT "," INT ")" ":" (mat | NAME)
    fn parse_psi(&mut self, env: &SourceProgram) -> Result<TV> {
        self.expect(&Tok::KwPsi)?;
        self.expect(&Tok::LBrace)?;
        let mut table = BTreeMap::new();
        let mut rows = 0usize;
        let mut cols = 0usize;
        loop {
            self.expect(&Tok::LParen)?;
            let i = self.parse_small_index()?;
            self.expect(&Tok::Comma)?;
            let j = self.parse_small_index()?;
            self.expect(&Tok::RParen)?;
            self.expect(&Tok::Colon)?;
            let m = match self.peek().clone() {
                Tok::KwMat => self.parse_mat()?,
                Tok::Name(n) => {
                    self.bump();
                    match env.get(&n)? {
                        Value::Matrix(m) => m.clone(),
                        other => {
                            return Err(Error::Type(format!(
                                "psi entries must be matrices, `{n}` is a {}",
                                other.kind()
                            )))
                        }
                    }
                }
                _ => {
                    let t = self.current().clone();
                    return Err(self.unexpected_at(&t, "a matrix"));
                }
            };
            table.insert((i, j), m);
            rows = rows.max(i + 1);
            cols = cols.max(j + 1);
            if self.peek() == &Tok::Comma {
                self.bump();
            } else {
                break;
            }
        }
        self.expect(&Tok::RBrace)?;
        Ok(TV::new(Value::Psi { rows, cols, table }))
    }

    fn parse_small_index(&mut self) -> Result<usize> {
        match self.bump().clone() {
            Token {
                tok: Tok::Int(n), ..
            } => usize::try_from(&n).map_err(|_| Error::Type("index too large".into())),
            t => Err(self.unexpected_at(&t, "a basis index")),
        }
    }
}

enum C00Value {
    Rat(Rational),
    Pp(PiecewisePoly),
}

fn type_err(op: &str, a: &Value, b: Option<&Value>) -> Error {
    match b {
        Some(b) => Error::Type(format!(
            "`{op}` cannot combine a {} with a {}",
            a.kind(),
            b.kind()
        )),
        None => Error::Type(format!("`{op}` does not apply to a {}", a.kind())),
    }
}

fn tensor_pair(left: TV, right: TV) -> Result<TV> {
    if left.var == Var::Y {
        return Err(Error::Type("left tensor factor uses the variable x".into()));
    }
    if right.var == Var::X {
        return Err(Error::Type("right tensor factor uses the variable y".into()));
    }
    match (left.value, right.value) {
        (Value::Pp(l), Value::Pp(r)) => Ok(TV::new(Value::Tensor(LatticeExpr::leaf(
            TensorSum::elementary(l, r),
        )))),
        (a, b) => Err(type_err("ox", &a, Some(&b))),
    }
}

fn join_vals(a: TV, b: TV) -> Result<TV> {
    let var = a.var.merge(b.var)?;
    let value = match (a.value, b.value) {
        (Value::Pp(f), Value::Pp(g)) => Value::Pp(f.join(&g)?),
        (Value::Tensor(f), Value::Tensor(g)) => {
            Value::Tensor(LatticeExpr::Join(Box::new(f), Box::new(g)))
        }
        (Value::CtenRat(f), Value::CtenRat(g)) => {
            Value::CtenRat(C00TensorExpr::Join(Box::new(f), Box::new(g)))
        }
        (Value::CtenPp(f), Value::CtenPp(g)) => {
            Value::CtenPp(C00TensorExpr::Join(Box::new(f), Box::new(g)))
        }
        (Value::C00Rat(f), Value::C00Rat(g)) => Value::C00Rat(f.join(&g)?),
        (Value::C00Pp(f), Value::C00Pp(g)) => Value::C00Pp(f.join(&g)?),
        (a, b) => return Err(type_err("\\/", &a, Some(&b))),
    };
    Ok(TV { value, var })
}

fn meet_vals(a: TV, b: TV) -> Result<TV> {
    let var = a.var.merge(b.var)?;
    let value = match (a.value, b.value) {
        (Value::Pp(f), Value::Pp(g)) => Value::Pp(f.meet(&g)?),
        (Value::Tensor(f), Value::Tensor(g)) => {
            Value::Tensor(LatticeExpr::Meet(Box::new(f), Box::new(g)))
        }
        (Value::CtenRat(f), Value::CtenRat(g)) => {
            Value::CtenRat(C00TensorExpr::Meet(Box::new(f), Box::new(g)))
        }
        (Value::CtenPp(f), Value::CtenPp(g)) => {
            Value::CtenPp(C00TensorExpr::Meet(Box::new(f), Box::new(g)))
        }
        (Value::C00Rat(f), Value::C00Rat(g)) => Value::C00Rat(f.meet(&g)?),
        (Value::C00Pp(f), Value::C00Pp(g)) => Value::C00Pp(f.meet(&g)?),
        (a, b) => return Err(type_err("/\\", &a, Some(&b))),
    };
    Ok(TV { value, var })
}

fn add_vals(a: TV, b: TV) -> Result<TV> {
    let var = a.var.merge(b.var)?;
    let value = match (a.value, b.value) {
        (Value::Pp(f), Value::Pp(g)) => Value::Pp(f.add(&g)),
        (Value::Tensor(f), Value::Tensor(g)) => {
            Value::Tensor(LatticeExpr::Sum(Box::new(f), Box::new(g)))
        }
        (Value::CtenRat(f), Value::CtenRat(g)) => {
            Value::CtenRat(C00TensorExpr::Add(Box::new(f), Box::new(g)))
        }
        (Value::CtenPp(f), Value::CtenPp(g)) => {
            Value::CtenPp(C00TensorExpr::Add(Box::new(f), Box::new(g)))
        }
        (Value::C00Rat(f), Value::C00Rat(g)) => Value::C00Rat(f.add(&g)),
        (Value::C00Pp(f), Value::C00Pp(g)) => Value::C00Pp(f.add(&g)),
        (Value::Matrix(f), Value::Matrix(g)) => Value::Matrix(f.add(&g)?),
        (a, b) => return Err(type_err("+", &a, Some(&b))),
    };
    Ok(TV { value, var })
}

fn neg_val(a: TV) -> Result<TV> {
    let value = match a.value {
        Value::Pp(f) => Value::Pp(f.negate()),
        Value::Tensor(f) => Value::Tensor(LatticeExpr::Negate(Box::new(f))),
        Value::CtenRat(f) => Value::CtenRat(C00TensorExpr::Negate(Box::new(f))),
        Value::CtenPp(f) => Value::CtenPp(C00TensorExpr::Negate(Box::new(f))),
        Value::C00Rat(f) => Value::C00Rat(f.negate()),
        Value::C00Pp(f) => Value::C00Pp(f.negate()),
        Value::Matrix(f) => Value::Matrix(f.scale(&-Rational::from_integer(1.into()))),
        other => return Err(type_err("-", &other, None)),
    };
    Ok(TV { value, var: a.var })
}

fn scale_val(c: &Rational, a: TV) -> Result<TV> {
    let value = match a.value {
        Value::Pp(f) => Value::Pp(f.scale(c)),
        Value::Tensor(f) => Value::Tensor(LatticeExpr::Scale(c.clone(), Box::new(f))),
        Value::CtenRat(f) => Value::CtenRat(C00TensorExpr::Scale(c.clone(), Box::new(f))),
        Value::CtenPp(f) => Value::CtenPp(C00TensorExpr::Scale(c.clone(), Box::new(f))),
        Value::C00Rat(f) => Value::C00Rat(f.scale(c)),
        Value::C00Pp(f) => Value::C00Pp(f.scale(c)),
        Value::Matrix(f) => Value::Matrix(f.scale(c)),
        other => return Err(type_err("*", &other, None)),
    };
    Ok(TV { value, var: a.var })
}

fn abs_val(a: TV) -> Result<TV> {
    let value = match a.value {
        Value::Pp(f) => Value::Pp(f.abs()?),
        Value::Tensor(f) => Value::Tensor(LatticeExpr::Abs(Box::new(f))),
        Value::CtenRat(f) => Value::CtenRat(C00TensorExpr::Abs(Box::new(f))),
        Value::CtenPp(f) => Value::CtenPp(C00TensorExpr::Abs(Box::new(f))),
        Value::C00Rat(f) => Value::C00Rat(f.abs_val()?),
        Value::C00Pp(f) => Value::C00Pp(f.abs_val()?),
        other => return Err(type_err("| |", &other, None)),
    };
    Ok(TV { value, var: a.var })
}
