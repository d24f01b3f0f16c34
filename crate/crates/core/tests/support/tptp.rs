//! A recursive-descent checker for the TPTP FOF fragment the emitter uses.
//!
//! Follows the TPTP grammar for `fof` annotated formulas: `&` and `|` chain
//! only with themselves, `=>` does not chain, quantifier and negation bodies
//! are unitary, and every variable must be bound. Parsed formulas come back
//! as library ASTs so a round-trip can be compared structurally.

use posetrep_core::logic::{Formula, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Lower(String),
    Upper(String),
    Dollar(String),
    Punct(&'static str),
}

const PUNCT: [&str; 18] = [
    "<=>", "<~>", "=>", "<=", "~|", "~&", "!=", "(", ")", "[", "]", ",", ".", ":", "!", "?", "~", "&",
];

fn lex(src: &str) -> Result<Vec<Tok>, String> {
    let mut toks = Vec::new();
    let mut rest = src;
    'outer: while let Some(c) = rest.chars().next() {
        if c.is_whitespace() {
            rest = &rest[c.len_utf8()..];
            continue;
        }
        for p in PUNCT.iter().chain(["|", "="].iter()) {
            if rest.starts_with(p) {
                toks.push(Tok::Punct(p));
                rest = &rest[p.len()..];
                continue 'outer;
            }
        }
        let word_len = |s: &str| {
            s.char_indices()
                .find(|&(_, ch)| !(ch.is_ascii_alphanumeric() || ch == '_'))
                .map_or(s.len(), |(i, _)| i)
        };
        if c == '$' {
            let len = 1 + word_len(&rest[1..]);
            toks.push(Tok::Dollar(rest[..len].to_string()));
            rest = &rest[len..];
        } else if c.is_ascii_lowercase() {
            let len = word_len(rest);
            toks.push(Tok::Lower(rest[..len].to_string()));
            rest = &rest[len..];
        } else if c.is_ascii_uppercase() {
            let len = word_len(rest);
            toks.push(Tok::Upper(rest[..len].to_string()));
            rest = &rest[len..];
        } else {
            return Err(format!("unexpected character {c:?}"));
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    bound: Vec<String>,
}

/// The name and formula of one `fof(name, role, formula).` line.
pub fn parse_fof(src: &str) -> Result<(String, Formula), String> {
    let mut p = Parser { toks: lex(src)?, pos: 0, bound: Vec::new() };
    p.keyword("fof")?;
    p.punct("(")?;
    let name = p.lower()?;
    p.punct(",")?;
    let role = p.lower()?;
    if !["axiom", "hypothesis", "conjecture", "lemma", "theorem"].contains(&role.as_str()) {
        return Err(format!("unsupported role {role}"));
    }
    p.punct(",")?;
    let f = p.logic_formula()?;
    p.punct(")")?;
    p.punct(".")?;
    if p.pos != p.toks.len() {
        return Err("trailing input".into());
    }
    Ok((name, f))
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Result<Tok, String> {
        let t = self.toks.get(self.pos).cloned().ok_or("unexpected end of input")?;
        self.pos += 1;
        Ok(t)
    }

    fn is_punct(&self, p: &str) -> bool {
        matches!(self.peek(), Some(Tok::Punct(q)) if *q == p)
    }

    fn punct(&mut self, p: &str) -> Result<(), String> {
        match self.next()? {
            Tok::Punct(q) if q == p => Ok(()),
            t => Err(format!("expected {p}, found {t:?}")),
        }
    }

    fn lower(&mut self) -> Result<String, String> {
        match self.next()? {
            Tok::Lower(w) => Ok(w),
            t => Err(format!("expected a lower word, found {t:?}")),
        }
    }

    fn keyword(&mut self, k: &str) -> Result<(), String> {
        match self.lower()? {
            w if w == k => Ok(()),
            w => Err(format!("expected {k}, found {w}")),
        }
    }

    fn logic_formula(&mut self) -> Result<Formula, String> {
        let first = self.unitary()?;
        for op in ["&", "|"] {
            if self.is_punct(op) {
                let mut parts = vec![first];
                while self.is_punct(op) {
                    self.pos += 1;
                    parts.push(self.unitary()?);
                }
                for other in ["&", "|", "=>", "<=>", "<=", "<~>", "~|", "~&"] {
                    if self.is_punct(other) {
                        return Err(format!("{other} after an {op} chain needs parentheses"));
                    }
                }
                return Ok(if op == "&" { Formula::And(parts) } else { Formula::Or(parts) });
            }
        }
        if self.is_punct("=>") {
            self.pos += 1;
            let rhs = self.unitary()?;
            if matches!(self.peek(), Some(Tok::Punct(q)) if [")", "."].contains(q)) || self.peek().is_none() {
                return Ok(Formula::implies(first, rhs));
            }
            return Err("=> does not associate".into());
        }
        for op in ["<=>", "<=", "<~>", "~|", "~&"] {
            if self.is_punct(op) {
                return Err(format!("connective {op} is not produced by the emitter"));
            }
        }
        Ok(first)
    }

    fn unitary(&mut self) -> Result<Formula, String> {
        match self.peek().cloned() {
            Some(Tok::Punct("(")) => {
                self.pos += 1;
                let f = self.logic_formula()?;
                self.punct(")")?;
                Ok(f)
            }
            Some(Tok::Punct("~")) => {
                self.pos += 1;
                Ok(Formula::not(self.unitary()?))
            }
            Some(Tok::Punct(q @ ("!" | "?"))) => {
                self.pos += 1;
                self.punct("[")?;
                let mut vars = Vec::new();
                loop {
                    match self.next()? {
                        Tok::Upper(v) => vars.push(v),
                        t => return Err(format!("expected a variable, found {t:?}")),
                    }
                    if self.is_punct(",") {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                self.punct("]")?;
                self.punct(":")?;
                let depth = self.bound.len();
                self.bound.extend(vars.iter().cloned());
                let body = self.unitary();
                self.bound.truncate(depth);
                let mut f = body?;
                for v in vars.iter().rev() {
                    let v = var_id(v)?;
                    f = if q == "!" { Formula::forall(v, f) } else { Formula::exists(v, f) };
                }
                Ok(f)
            }
            Some(Tok::Dollar(w)) => {
                self.pos += 1;
                match w.as_str() {
                    "$true" => Ok(Formula::And(Vec::new())),
                    "$false" => Ok(Formula::Or(Vec::new())),
                    _ => Err(format!("unknown defined word {w}")),
                }
            }
            Some(Tok::Lower(w)) => {
                self.pos += 1;
                if w != "leq" {
                    return Err(format!("unknown predicate {w}"));
                }
                self.punct("(")?;
                let a = self.variable()?;
                self.punct(",")?;
                let b = self.variable()?;
                self.punct(")")?;
                Ok(Formula::Leq(a, b))
            }
            Some(Tok::Upper(_)) => {
                let a = self.variable()?;
                let negated = match self.next()? {
                    Tok::Punct("=") => false,
                    Tok::Punct("!=") => true,
                    t => return Err(format!("expected = or !=, found {t:?}")),
                };
                let b = self.variable()?;
                let eq = Formula::Eq(a, b);
                Ok(if negated { Formula::not(eq) } else { eq })
            }
            t => Err(format!("expected a formula, found {t:?}")),
        }
    }

    fn variable(&mut self) -> Result<Var, String> {
        match self.next()? {
            Tok::Upper(v) if self.bound.contains(&v) => var_id(&v),
            Tok::Upper(v) => Err(format!("variable {v} is not bound")),
            t => Err(format!("expected a variable, found {t:?}")),
        }
    }
}

fn var_id(v: &str) -> Result<Var, String> {
    v.strip_prefix('X')
        .and_then(|d| d.parse().ok())
        .map(Var)
        .ok_or_else(|| format!("variable {v} is not of the form X<n>"))
}
