use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ParseError;
use crate::freealg::{GeneratorSet, MonomialOrder, NcPolynomial, Scalar, Term, Word};
use crate::groebner::Presentation;

/// Reads a presentation file.
///
/// ```text
/// # comments run to the end of the line
/// generators: X < Y
/// order: deglex
/// Y*X - X*Y - 1
/// X*X = 2/3*Y
/// ```
///
/// The generators line lists names by ascending precedence. The order line
/// is optional and `deglex` is the only accepted value. Each further line is
/// one relation; `lhs = rhs` stands for `lhs - rhs`.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut order: Option<MonomialOrder> = None;
    let mut seen_order_line = false;
    let mut relations = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        if let Some(rest) = header(line, "generators") {
            if order.is_some() {
                return Err(syntax(line_no, 1, "generators declared twice"));
            }
            order = Some(parse_generators(rest, line_no, line.len() - rest.len() + 1)?);
            continue;
        }
        if let Some(rest) = header(line, "order") {
            if seen_order_line {
                return Err(syntax(line_no, 1, "order declared twice"));
            }
            seen_order_line = true;
            let name = rest.trim();
            if name != "deglex" {
                let col = line.len() - rest.trim_start().len() + 1;
                return Err(syntax(
                    line_no,
                    col,
                    &format!("unsupported order `{name}`, expected `deglex`"),
                ));
            }
            continue;
        }
        let Some(ord) = &order else {
            return Err(syntax(line_no, 1, "relation before the generators line"));
        };
        let poly = parse_relation(line, ord, line_no)?;
        if poly.is_zero() {
            return Err(syntax(line_no, 1, "relation is identically zero"));
        }
        relations.push(poly);
    }
    let order = order.ok_or(ParseError::MissingGenerators)?;
    Ok(Presentation::new(order, relations).expect("relations are nonzero and share the order"))
}

/// Reads a single polynomial over the generators of `order`.
pub fn parse_polynomial(text: &str, order: &MonomialOrder) -> Result<NcPolynomial, ParseError> {
    if text.contains('\n') {
        return Err(syntax(1, text.find('\n').unwrap_or(0) + 1, "expected a single line"));
    }
    let mut p = Parser::new(text, order, 1);
    let poly = p.expression()?;
    p.expect_end()?;
    Ok(poly)
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn header<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    let t = line.trim_start();
    let rest = t.strip_prefix(key)?.trim_start();
    rest.strip_prefix(':')
}

fn syntax(line: usize, column: usize, message: &str) -> ParseError {
    ParseError::Syntax {
        line,
        column,
        message: message.to_owned(),
    }
}

fn is_name_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

fn parse_generators(rest: &str, line: usize, offset: usize) -> Result<MonomialOrder, ParseError> {
    let mut names: Vec<String> = Vec::new();
    let mut col = offset;
    for (k, part) in rest.split('<').enumerate() {
        let name = part.trim();
        let start = col + (part.len() - part.trim_start().len());
        if name.is_empty() {
            let what = if k == 0 && rest.trim().is_empty() {
                "no generators declared"
            } else {
                "empty generator name"
            };
            return Err(syntax(line, start, what));
        }
        let mut chars = name.chars();
        let valid = chars.next().is_some_and(is_name_start) && chars.all(is_name_char);
        if !valid {
            return Err(syntax(line, start, &format!("invalid generator name `{name}`")));
        }
        if names.iter().any(|n| n == name) {
            return Err(ParseError::DuplicateGenerator {
                name: name.to_owned(),
                line,
            });
        }
        names.push(name.to_owned());
        col += part.len() + 1;
    }
    let gens = GeneratorSet::new(names).expect("names were validated");
    Ok(MonomialOrder::deglex(Arc::new(gens)))
}

fn parse_relation(line: &str, order: &MonomialOrder, line_no: usize) -> Result<NcPolynomial, ParseError> {
    let mut p = Parser::new(line, order, line_no);
    let lhs = p.expression()?;
    p.skip_ws();
    if p.peek() == Some('=') {
        p.bump();
        let rhs = p.expression()?;
        p.expect_end()?;
        return Ok(&lhs - &rhs);
    }
    p.expect_end()?;
    Ok(lhs)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
    order: &'a MonomialOrder,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, order: &'a MonomialOrder, line: usize) -> Self {
        Parser {
            text,
            pos: 0,
            line,
            order,
        }
    }

    fn column(&self) -> usize {
        self.text[..self.pos].chars().count() + 1
    }

    fn error(&self, message: &str) -> ParseError {
        syntax(self.line, self.column(), message)
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(&format!("unexpected `{c}`"))),
        }
    }

    /// `['+'|'-'] term (('+'|'-') term)*`
    fn expression(&mut self) -> Result<NcPolynomial, ParseError> {
        let mut terms: Vec<Term> = Vec::new();
        self.skip_ws();
        let mut negate = match self.peek() {
            Some('-') => {
                self.bump();
                true
            }
            Some('+') => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let mut t = self.term()?;
            if negate {
                t.coeff = -t.coeff;
            }
            terms.push(t);
            self.skip_ws();
            negate = match self.peek() {
                Some('+') => false,
                Some('-') => true,
                _ => break,
            };
            self.bump();
        }
        Ok(NcPolynomial::from_terms(self.order, terms))
    }

    /// `factor ('*' factor)*` where a factor is a number or `name['^'k]`.
    fn term(&mut self) -> Result<Term, ParseError> {
        let mut coeff = Scalar::one();
        let mut letters = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coeff *= self.number()?,
                Some(c) if is_name_start(c) => {
                    let col = self.column();
                    let name = self.name();
                    let x = self
                        .order
                        .generators()
                        .index_of(name)
                        .ok_or_else(|| ParseError::UnknownGenerator {
                            name: name.to_owned(),
                            line: self.line,
                            column: col,
                        })?;
                    let k = self.exponent()?;
                    letters.extend(std::iter::repeat_n(x, k));
                }
                Some(c) => return Err(self.error(&format!("expected a coefficient or generator, found `{c}`"))),
                None => return Err(self.error("expected a coefficient or generator, found end of line")),
            }
            self.skip_ws();
            if self.peek() == Some('*') {
                self.bump();
            } else {
                break;
            }
        }
        Ok(Term::new(coeff, Word::new(letters)))
    }

    fn name(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(is_name_char) {
            self.bump();
        }
        &self.text[start..self.pos]
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(self.text[start..self.pos].parse().expect("ascii digits"))
    }

    /// `digits ['/' digits]`
    fn number(&mut self) -> Result<Scalar, ParseError> {
        let p = self.digits()?;
        if self.peek() != Some('/') {
            return Ok(Scalar::from_integer(p));
        }
        self.bump();
        let col = self.column();
        let q = self.digits()?;
        if q.is_zero() {
            return Err(syntax(self.line, col, "zero denominator"));
        }
        Ok(Scalar::new(p, q))
    }

    fn exponent(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.bump();
        self.skip_ws();
        let col = self.column();
        let k = self.digits()?;
        usize::try_from(&k)
            .ok()
            .filter(|&k| k <= 4096)
            .ok_or_else(|| syntax(self.line, col, "exponent out of range"))
    }
}
