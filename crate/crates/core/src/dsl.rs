//! Text format for algebras, modules and 2-cocycles.
//!
//! ```text
//! # the Virasoro algebra
//! algebra vir {
//!   even L;
//!   [L 0 L] = d L;
//!   [L 1 L] = 2 L;
//! }
//!
//! module M over vir {
//!   even v;
//!   <L 0 v> = d v + 1/2 v;
//!   <L 1 v> = 2 v;
//! }
//!
//! cocycle c over vir {
//!   (L 3 L) = 1;
//! }
//! ```
//!
//! A term is `[coefficient] [d^k] GEN`; coefficients are Gaussian rationals
//! such as `-3/2`, `2i`, `(1/2-i)`. Products given in one order only are
//! completed by skew-symmetry; when both orders are given they must agree.
//! `relation d c = γ c;` makes `c` a torsion generator.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::Arc;

use crate::algebra::{mirror_of, ConformalSuperalgebra};
use crate::builtins;
use crate::cohomology::TwoCocycle;
use crate::dpoly::DPoly;
use crate::element::{Basis, Element, Generator, LambdaPoly, Parity};
use crate::error::{ParseError, ParseErrorKind};
use crate::module::ConformalModule;
use crate::scalar::Scalar;

/// Largest accepted product index or ∂-power.
pub const MAX_INDEX: usize = 64;

type PResult<T> = std::result::Result<T, ParseError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Pos {
    line: usize,
    col: usize,
}

#[derive(Clone, Debug)]
pub enum Item {
    Algebra(Arc<ConformalSuperalgebra>),
    Module(ConformalModule),
    Cocycle(TwoCocycle),
}

#[derive(Clone, Debug, Default)]
pub struct Document {
    pub items: Vec<Item>,
}

impl Document {
    pub fn algebras(&self) -> impl Iterator<Item = &Arc<ConformalSuperalgebra>> {
        self.items.iter().filter_map(|x| match x {
            Item::Algebra(a) => Some(a),
            _ => None,
        })
    }

    pub fn modules(&self) -> impl Iterator<Item = &ConformalModule> {
        self.items.iter().filter_map(|x| match x {
            Item::Module(m) => Some(m),
            _ => None,
        })
    }

    pub fn cocycles(&self) -> impl Iterator<Item = &TwoCocycle> {
        self.items.iter().filter_map(|x| match x {
            Item::Cocycle(c) => Some(c),
            _ => None,
        })
    }
}

/// Parses a document; `over` names resolve to earlier blocks, then to
/// `known`, then to built-ins.
pub fn parse_with(src: &str, known: &[Arc<ConformalSuperalgebra>]) -> PResult<Document> {
    let mut p = Parser { src, pos: 0, line: 1, col: 1 };
    let mut doc = Document::default();
    loop {
        p.skip_ws();
        if p.at_end() {
            return Ok(doc);
        }
        let at = p.here();
        let kw = p.ident()?;
        let item = match kw.as_str() {
            "algebra" => Item::Algebra(Arc::new(p.algebra_block(at)?)),
            "module" => Item::Module(p.module_block(at, &doc, known)?),
            "cocycle" => Item::Cocycle(p.cocycle_block(at, &doc, known)?),
            _ => {
                return Err(err(
                    at,
                    ParseErrorKind::Syntax,
                    format!("expected `algebra`, `module` or `cocycle`, found `{kw}`"),
                ))
            }
        };
        doc.items.push(item);
    }
}

pub fn parse(src: &str) -> PResult<Document> {
    parse_with(src, &[])
}

/// The first algebra block of `src`.
pub fn parse_algebra(src: &str) -> PResult<ConformalSuperalgebra> {
    let doc = parse(src)?;
    let a = doc.algebras().next().ok_or_else(|| err(Pos { line: 1, col: 1 }, ParseErrorKind::Syntax, "no algebra block"))?;
    Ok((**a).clone())
}

/// The first module block of `src`.
pub fn parse_module(src: &str, known: &[Arc<ConformalSuperalgebra>]) -> PResult<ConformalModule> {
    let doc = parse_with(src, known)?;
    let m = doc.modules().next().cloned();
    m.ok_or_else(|| err(Pos { line: 1, col: 1 }, ParseErrorKind::Syntax, "no module block"))
}

/// The first cocycle block of `src`.
pub fn parse_cocycle(src: &str, known: &[Arc<ConformalSuperalgebra>]) -> PResult<TwoCocycle> {
    let doc = parse_with(src, known)?;
    let c = doc.cocycles().next().cloned();
    c.ok_or_else(|| err(Pos { line: 1, col: 1 }, ParseErrorKind::Syntax, "no cocycle block"))
}

/// Comma- or semicolon-separated elements over `basis`, e.g. `d v + 2 v, c`.
pub fn parse_elements(basis: &Basis, text: &str) -> PResult<Vec<Element>> {
    let mut p = Parser { src: text, pos: 0, line: 1, col: 1 };
    let scope = Scope::of(basis);
    let mut out = Vec::new();
    loop {
        p.skip_ws();
        if p.at_end() {
            return Ok(out);
        }
        out.push(basis.normalize(&p.expr(&scope)?));
        if !(p.eat(',') || p.eat(';')) {
            p.skip_ws();
            if !p.at_end() {
                return Err(err(p.here(), ParseErrorKind::Syntax, format!("expected `,`, found {}", p.describe_next())));
            }
        }
    }
}

fn err(at: Pos, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
    ParseError { line: at.line, col: at.col, kind, message: message.into() }
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

/// Generator declarations of one block.
struct Scope {
    gens: Vec<Generator>,
    index: HashMap<String, usize>,
    relations: HashMap<usize, Pos>,
}

impl Scope {
    fn new() -> Self {
        Scope { gens: Vec::new(), index: HashMap::new(), relations: HashMap::new() }
    }

    fn of(basis: &Basis) -> Self {
        Scope {
            gens: basis.gens().to_vec(),
            index: basis.gens().iter().enumerate().map(|(k, g)| (g.name.clone(), k)).collect(),
            relations: HashMap::new(),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    col: usize,
}

impl Parser<'_> {
    fn here(&self) -> Pos {
        Pos { line: self.line, col: self.col }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek2(&self) -> Option<char> {
        self.src[self.pos..].chars().nth(1)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c == '#' {
                while self.peek().is_some_and(|c| c != '\n') {
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn describe_next(&self) -> String {
        match self.peek() {
            None => "end of input".to_string(),
            Some(c) => format!("`{c}`"),
        }
    }

    fn expect(&mut self, ch: char) -> PResult<()> {
        self.skip_ws();
        if self.peek() == Some(ch) {
            self.bump();
            Ok(())
        } else {
            Err(err(self.here(), ParseErrorKind::Syntax, format!("expected `{ch}`, found {}", self.describe_next())))
        }
    }

    fn eat(&mut self, ch: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(ch) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn peek_ident(&mut self) -> Option<&str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let mut chars = rest.char_indices();
        match chars.next() {
            Some((_, c)) if is_ident_start(c) => {}
            _ => return None,
        }
        let end = chars.find(|(_, c)| !is_ident_char(*c)).map_or(rest.len(), |(k, _)| k);
        Some(&rest[..end])
    }

    fn ident(&mut self) -> PResult<String> {
        self.skip_ws();
        match self.peek_ident() {
            Some(s) => {
                let s = s.to_string();
                for _ in s.chars() {
                    self.bump();
                }
                Ok(s)
            }
            None => Err(err(
                self.here(),
                ParseErrorKind::Syntax,
                format!("expected an identifier, found {}", self.describe_next()),
            )),
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        let at = self.here();
        let got = self.ident()?;
        if got == kw {
            Ok(())
        } else {
            Err(err(at, ParseErrorKind::Syntax, format!("expected `{kw}`, found `{got}`")))
        }
    }

    /// Block names may contain punctuation such as `current(sl2)`.
    fn block_name(&mut self) -> PResult<String> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| !c.is_whitespace() && c != '{' && c != '#') {
            self.bump();
        }
        if self.pos == start {
            return Err(err(self.here(), ParseErrorKind::Syntax, "expected a name"));
        }
        Ok(self.src[start..self.pos].to_string())
    }

    fn index(&mut self) -> PResult<usize> {
        self.skip_ws();
        let at = self.here();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        let text = &self.src[start..self.pos];
        if text.is_empty() {
            return Err(err(at, ParseErrorKind::Syntax, format!("expected an integer, found {}", self.describe_next())));
        }
        match text.parse::<usize>() {
            Ok(n) if n <= MAX_INDEX => Ok(n),
            _ => Err(err(at, ParseErrorKind::Invalid, format!("index `{text}` exceeds {MAX_INDEX}"))),
        }
    }

    fn starts_coefficient(&mut self) -> bool {
        self.skip_ws();
        match self.peek() {
            Some('(') => true,
            Some(c) if c.is_ascii_digit() => true,
            _ => self.peek_ident() == Some("i"),
        }
    }

    fn coefficient(&mut self) -> PResult<Scalar> {
        self.skip_ws();
        let at = self.here();
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                while self.peek().is_some_and(|c| c != ')' && c != ';' && c != '\n') {
                    self.bump();
                }
                if self.peek() != Some(')') {
                    return Err(err(at, ParseErrorKind::MalformedCoefficient, "unclosed `(` in coefficient"));
                }
                self.bump();
            }
            Some(c) if c.is_ascii_digit() => {
                while self.peek().is_some_and(|c| c.is_ascii_digit() || c == '/' || c == '.') {
                    self.bump();
                }
                if self.peek() == Some('i') && !self.peek2().is_some_and(is_ident_char) {
                    self.bump();
                }
            }
            _ => {
                self.ident()?;
            }
        }
        let text = &self.src[start..self.pos];
        text.parse::<Scalar>()
            .map_err(|_| err(at, ParseErrorKind::MalformedCoefficient, format!("malformed coefficient `{text}`")))
    }

    fn signed_coefficient(&mut self) -> PResult<Scalar> {
        let neg = self.eat('-');
        if !neg {
            self.eat('+');
        }
        let c = self.coefficient()?;
        Ok(if neg { -&c } else { c })
    }

    fn generator(&mut self, scope: &Scope, what: &str) -> PResult<(usize, Pos)> {
        self.skip_ws();
        let at = self.here();
        let name = self.ident()?;
        match scope.index.get(&name) {
            Some(&k) => Ok((k, at)),
            None => Err(err(at, ParseErrorKind::UndefinedGenerator, format!("undefined {what} `{name}`"))),
        }
    }

    fn term(&mut self, sign: Scalar, scope: &Scope) -> PResult<Element> {
        let mut c = sign;
        if self.starts_coefficient() {
            c = &c * &self.coefficient()?;
            self.skip_ws();
            if matches!(self.peek(), Some(';') | Some('+') | Some('-') | None) {
                if c.is_zero() {
                    return Ok(Element::zero());
                }
                return Err(err(self.here(), ParseErrorKind::Syntax, "expected a generator after the coefficient"));
            }
            self.eat('*');
        }
        let mut k = 0;
        if self.peek_ident() == Some("d") {
            self.ident()?;
            k = if self.eat('^') { self.index()? } else { 1 };
            self.eat('*');
        }
        let (g, _) = self.generator(scope, "generator")?;
        Ok(Element::term(g, DPoly::monomial(c, k)))
    }

    fn expr(&mut self, scope: &Scope) -> PResult<Element> {
        let mut out = Element::zero();
        let mut sign = if self.eat('-') {
            -&Scalar::one()
        } else {
            self.eat('+');
            Scalar::one()
        };
        loop {
            out.add_assign(&self.term(sign, scope)?);
            if self.eat('+') {
                sign = Scalar::one();
            } else if self.eat('-') {
                sign = -&Scalar::one();
            } else {
                return Ok(out);
            }
        }
    }

    fn declare(&mut self, scope: &mut Scope, parity: Parity) -> PResult<()> {
        loop {
            self.skip_ws();
            let at = self.here();
            let name = self.ident()?;
            if name == "d" || name == "i" {
                return Err(err(at, ParseErrorKind::Invalid, format!("`{name}` is reserved")));
            }
            if scope.index.contains_key(&name) {
                return Err(err(at, ParseErrorKind::DuplicateGenerator, format!("generator `{name}` declared twice")));
            }
            scope.index.insert(name.clone(), scope.gens.len());
            scope.gens.push(Generator::new(name, parity));
            if !self.eat(',') {
                break;
            }
        }
        self.expect(';')
    }

    /// `relation d c = γ c;`
    fn relation(&mut self, scope: &mut Scope) -> PResult<()> {
        self.keyword("d")?;
        let (g, at) = self.generator(scope, "generator")?;
        self.expect('=')?;
        let rhs_at = {
            self.skip_ws();
            self.here()
        };
        let rhs = self.expr(scope)?;
        self.expect(';')?;
        let p = rhs.get(g);
        if rhs.support().any(|k| k != g) || !p.is_constant() {
            return Err(err(rhs_at, ParseErrorKind::Invalid, "a relation must read `d c = γ c` for a scalar γ"));
        }
        if scope.relations.insert(g, at).is_some() {
            return Err(err(at, ParseErrorKind::DuplicateProduct, format!("duplicate relation for `{}`", scope.gens[g].name)));
        }
        scope.gens[g] = scope.gens[g].clone().with_torsion(p.coeff(0));
        Ok(())
    }

    fn open_block(&mut self) -> PResult<()> {
        self.expect('{')
    }

    fn algebra_block(&mut self, start: Pos) -> PResult<ConformalSuperalgebra> {
        let name = self.block_name()?;
        self.open_block()?;
        let mut scope = Scope::new();
        let mut products: BTreeMap<(usize, usize), BTreeMap<usize, (Element, Pos)>> = BTreeMap::new();
        loop {
            self.skip_ws();
            let at = self.here();
            if self.eat('}') {
                break;
            }
            if self.eat('[') {
                let (a, _) = self.generator(&scope, "generator")?;
                let n = self.index()?;
                let (b, _) = self.generator(&scope, "generator")?;
                self.expect(']')?;
                self.expect('=')?;
                let x = self.expr(&scope)?;
                self.expect(';')?;
                let slot = products.entry((a, b)).or_default();
                if slot.insert(n, (x, at)).is_some() {
                    return Err(err(at, ParseErrorKind::DuplicateProduct, "duplicate product line"));
                }
                continue;
            }
            if self.at_end() {
                return Err(err(at, ParseErrorKind::Syntax, "unterminated block, expected `}`"));
            }
            let word = self.ident()?;
            match word.as_str() {
                "even" => self.declare(&mut scope, Parity::Even)?,
                "odd" => self.declare(&mut scope, Parity::Odd)?,
                "relation" => self.relation(&mut scope)?,
                _ => return Err(err(at, ParseErrorKind::Syntax, format!("unexpected `{word}`"))),
            }
        }
        let basis = Basis::new(scope.gens.clone());
        let mut brackets: BTreeMap<(usize, usize), (LambdaPoly, Pos)> = BTreeMap::new();
        for (&pair, rows) in &products {
            let mut lp = LambdaPoly::zero();
            for (&n, (x, _)) in rows {
                lp.add_scaled_at(n, &basis.normalize(x), &Scalar::factorial(n).inv());
            }
            let last = rows.values().map(|(_, p)| *p).max().unwrap_or(start);
            brackets.insert(pair, (lp, last));
        }
        for (&(i, j), (lp, at)) in &brackets {
            if let Some((other, other_at)) = brackets.get(&(j, i)) {
                if *lp != mirror_of(&basis, j, i, other) {
                    return Err(err(
                        (*at).max(*other_at),
                        ParseErrorKind::MirrorMismatch,
                        format!(
                            "products of ({}, {}) disagree with the skew-symmetric mirror",
                            basis.name(i),
                            basis.name(j)
                        ),
                    ));
                }
            }
        }
        ConformalSuperalgebra::from_brackets(name, scope.gens, brackets.into_iter().map(|(k, (lp, _))| (k, lp)))
            .map_err(|e| err(start, ParseErrorKind::Invalid, e.to_string()))
    }

    fn resolve(
        &mut self,
        doc: &Document,
        known: &[Arc<ConformalSuperalgebra>],
    ) -> PResult<Arc<ConformalSuperalgebra>> {
        self.keyword("over")?;
        self.skip_ws();
        let at = self.here();
        let name = self.block_name()?;
        if let Some(a) = doc.algebras().collect::<Vec<_>>().into_iter().rev().chain(known.iter()).find(|a| a.name() == name) {
            return Ok(a.clone());
        }
        builtins::algebra(&name)
            .map(Arc::new)
            .map_err(|_| err(at, ParseErrorKind::UndefinedGenerator, format!("unknown algebra `{name}`")))
    }

    fn module_block(
        &mut self,
        start: Pos,
        doc: &Document,
        known: &[Arc<ConformalSuperalgebra>],
    ) -> PResult<ConformalModule> {
        let name = self.block_name()?;
        let algebra = self.resolve(doc, known)?;
        self.open_block()?;
        let alg_scope = Scope::of(algebra.basis());
        let mut scope = Scope::new();
        let mut actions: BTreeMap<(usize, usize, usize), Element> = BTreeMap::new();
        loop {
            self.skip_ws();
            let at = self.here();
            if self.eat('}') {
                break;
            }
            if self.eat('<') {
                let (a, _) = self.generator(&alg_scope, "algebra generator")?;
                let n = self.index()?;
                let (v, _) = self.generator(&scope, "module generator")?;
                self.expect('>')?;
                self.expect('=')?;
                let x = self.expr(&scope)?;
                self.expect(';')?;
                if actions.insert((a, v, n), x).is_some() {
                    return Err(err(at, ParseErrorKind::DuplicateProduct, "duplicate action line"));
                }
                continue;
            }
            if self.at_end() {
                return Err(err(at, ParseErrorKind::Syntax, "unterminated block, expected `}`"));
            }
            let word = self.ident()?;
            match word.as_str() {
                "even" => self.declare(&mut scope, Parity::Even)?,
                "odd" => self.declare(&mut scope, Parity::Odd)?,
                "relation" => self.relation(&mut scope)?,
                _ => return Err(err(at, ParseErrorKind::Syntax, format!("unexpected `{word}`"))),
            }
        }
        ConformalModule::from_actions(name, algebra, scope.gens, actions.into_iter().map(|((a, v, n), x)| (a, v, n, x)))
            .map_err(|e| err(start, ParseErrorKind::Invalid, e.to_string()))
    }

    fn cocycle_block(
        &mut self,
        start: Pos,
        doc: &Document,
        known: &[Arc<ConformalSuperalgebra>],
    ) -> PResult<TwoCocycle> {
        self.block_name()?;
        let algebra = self.resolve(doc, known)?;
        self.open_block()?;
        let scope = Scope::of(algebra.basis());
        let mut values: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        loop {
            self.skip_ws();
            let at = self.here();
            if self.eat('}') {
                break;
            }
            if !self.eat('(') {
                return Err(err(at, ParseErrorKind::Syntax, format!("expected `(` or `}}`, found {}", self.describe_next())));
            }
            let (a, _) = self.generator(&scope, "algebra generator")?;
            let n = self.index()?;
            let (b, _) = self.generator(&scope, "algebra generator")?;
            self.expect(')')?;
            self.expect('=')?;
            let v = self.signed_coefficient()?;
            self.expect(';')?;
            if values.insert((a, b, n), v).is_some() {
                return Err(err(at, ParseErrorKind::DuplicateProduct, "duplicate cocycle value"));
            }
        }
        TwoCocycle::from_values(algebra, values.into_iter().map(|((a, b, n), v)| (a, b, n, v)))
            .map_err(|e| err(start, ParseErrorKind::Invalid, e.to_string()))
    }
}

fn split_sign(c: &Scalar) -> (bool, Scalar) {
    let neg = c.re.signum() < 0 || (c.re.is_zero() && c.im.signum() < 0);
    if neg {
        (true, -c)
    } else {
        (false, c.clone())
    }
}

/// DSL text of an element, `0` when zero.
pub fn emit_element(basis: &Basis, x: &Element) -> String {
    let mut out = String::new();
    for (g, p) in x.terms() {
        for (k, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, abs) = split_sign(c);
            match (out.is_empty(), neg) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            if !abs.is_one() {
                let _ = write!(out, "{abs} ");
            }
            match k {
                0 => {}
                1 => out.push_str("d "),
                _ => {
                    let _ = write!(out, "d^{k} ");
                }
            }
            out.push_str(basis.name(g));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn emit_scalar(c: &Scalar) -> String {
    let (neg, abs) = split_sign(c);
    if neg {
        format!("-{abs}")
    } else {
        abs.to_string()
    }
}

fn emit_decls(out: &mut String, basis: &Basis) {
    for g in basis.gens() {
        let kw = if g.parity == Parity::Even { "even" } else { "odd" };
        let _ = writeln!(out, "  {kw} {};", g.name);
    }
    for (k, g) in basis.gens().iter().enumerate() {
        if let Some(c) = &g.torsion {
            let rhs = emit_element(basis, &Element::term(k, DPoly::constant(c.clone())));
            let _ = writeln!(out, "  relation d {} = {rhs};", g.name);
        }
    }
}

/// Emits products `a^i_(n)a^j` for `i <= j`; the rest follow by skew-symmetry.
pub fn emit_algebra(r: &ConformalSuperalgebra) -> String {
    let basis = r.basis();
    let mut out = format!("algebra {} {{\n", r.name());
    emit_decls(&mut out, basis);
    for row in r.lambda_table() {
        if row.a <= row.b {
            let _ = writeln!(
                out,
                "  [{} {} {}] = {};",
                basis.name(row.a),
                row.n,
                basis.name(row.b),
                emit_element(basis, &row.value)
            );
        }
    }
    out.push_str("}\n");
    out
}

pub fn emit_module(m: &ConformalModule) -> String {
    let basis = m.basis();
    let alg = m.algebra().basis();
    let mut out = format!("module {} over {} {{\n", m.name(), m.algebra().name());
    emit_decls(&mut out, basis);
    for a in 0..m.algebra().rank() {
        for v in 0..m.rank() {
            for (n, x) in m.table().get(a, v).products().into_iter().enumerate() {
                if !x.is_zero() {
                    let _ = writeln!(out, "  <{} {} {}> = {};", alg.name(a), n, basis.name(v), emit_element(basis, &x));
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn emit_cocycle(name: &str, c: &TwoCocycle) -> String {
    let basis = c.algebra().basis();
    let mut out = format!("cocycle {name} over {} {{\n", c.algebra().name());
    for (&(i, j, n), v) in c.stored() {
        let _ = writeln!(out, "  ({} {} {}) = {};", basis.name(i), n, basis.name(j), emit_scalar(v));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::virasoro;

    const VIR: &str = "algebra vir { even L; [L 0 L] = d^1 L; [L 1 L] = 2 L; }";

    #[test]
    fn virasoro_text() {
        let r = parse_algebra(VIR).unwrap();
        let v = virasoro();
        assert_eq!(r.table(), v.table());
        assert_eq!(r.basis(), v.basis());
    }

    #[test]
    fn undefined_generator_position() {
        let e = parse_algebra("algebra x {\n  even L;\n  [L 0 M] = d^1 M;\n}").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UndefinedGenerator);
        assert_eq!((e.line, e.col), (3, 8));
        assert!(e.message.contains('M'));
    }

    #[test]
    fn empty_body() {
        let r = parse_algebra("algebra z {}").unwrap();
        assert_eq!(r.rank(), 0);
    }

    #[test]
    fn error_classes() {
        let kind = |s: &str| parse_algebra(s).unwrap_err().kind;
        assert_eq!(kind("algebra x { even L; [L 0 L] = 1/0 L; }"), ParseErrorKind::MalformedCoefficient);
        assert_eq!(kind("algebra x { even L; [L 1 L] = 2 L; [L 1 L] = 2 L; }"), ParseErrorKind::DuplicateProduct);
        assert_eq!(kind("algebra x { even L, L; }"), ParseErrorKind::DuplicateGenerator);
        assert_eq!(kind("algebra x { even L; [L 0 L] = L; }"), ParseErrorKind::MirrorMismatch);
        assert_eq!(kind("algebra x { even L; [L 0 L] = d L"), ParseErrorKind::Syntax);
    }

    #[test]
    fn gaussian_coefficients() {
        let src = "algebra x { even a, b, c; [a 0 b] = (1/2-i) c + 2i d c - i d^2 c; }";
        let r = parse_algebra(src).unwrap();
        let want = Element::term(
            2,
            DPoly::from_coeffs(vec![
                "1/2-i".parse().unwrap(),
                &Scalar::i() * &Scalar::from_int(2),
                -&Scalar::i(),
            ]),
        );
        assert_eq!(r.gen_product(0, 1, 0), want);
        let again = parse_algebra(&emit_algebra(&r)).unwrap();
        assert_eq!(again.table(), r.table());
    }

    #[test]
    fn module_and_cocycle() {
        let src = "module m over vir {\n even v;\n odd c;\n relation d c = 0;\n <L 0 v> = d v + 1/2 v;\n <L 1 v> = 2 v;\n <L 3 v> = c;\n}\n\
                   cocycle k over vir { (L 3 L) = 1/12; }";
        let doc = parse(src).unwrap();
        let m = doc.modules().next().unwrap();
        assert_eq!(m.basis().torsion_dim(), 1);
        let again = parse_module(&emit_module(m), &[]).unwrap();
        assert_eq!(again.table(), m.table());
        let c = doc.cocycles().next().unwrap();
        assert_eq!(c.value(0, 0, 3), Scalar::from_ratio(1, 12));
        let e = parse("module m over vir { even v; <L 0 w> = v; }").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UndefinedGenerator);
    }
}
