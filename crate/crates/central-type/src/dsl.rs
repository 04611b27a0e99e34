//! The presentation DSL.
//!
//! Text form of the collection presentations that drive every group and
//! algebra construction, e.g.
//!
//! ```text
//! algebra d4_example {
//!   generators: s, t;
//!   modulus: 4;
//!   order: s^4 = 1;
//!   order: t^2 = 1;
//!   relation: [t,s] = w(1) * s^2;
//! }
//! ```
//!
//! `w(k)` is ζ_m^k for the declared modulus m. `param t16 in mu(2);`
//! declares a sweep parameter ranging over μ_2 inside μ_m. Comments run
//! from `#` to end of line. Unstated commutator relations default to
//! trivial commutation, matching the convention of the source tables.

use thiserror::Error;

use crate::constructions::{CollectionPresentation, PowerRule, RelationRule, ScalarExpr, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("parse error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("undeclared generator '{name}' at {line}:{col}")]
    UndeclaredGenerator { name: String, line: usize, col: usize },
    #[error("generator '{0}' has no order declaration")]
    MissingOrder(String),
    #[error("document error: {0}")]
    Document(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocKind {
    Group,
    Algebra,
    Sweep,
}

impl DocKind {
    fn keyword(self) -> &'static str {
        match self {
            DocKind::Group => "group",
            DocKind::Algebra => "algebra",
            DocKind::Sweep => "sweep",
        }
    }
}

/// A parameter declaration `param name in mu(d);`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamDecl {
    pub name: String,
    pub order: u32,
}

/// A parsed DSL document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DslDocument {
    pub kind: DocKind,
    pub name: String,
    pub presentation: CollectionPresentation,
    pub params: Vec<ParamDecl>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Token {
    text: String,
    line: usize,
    col: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 0usize;
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        col += 1;
        match c {
            '\n' => {
                line += 1;
                col = 0;
            }
            '#' => {
                for c2 in chars.by_ref() {
                    if c2 == '\n' {
                        line += 1;
                        col = 0;
                        break;
                    }
                }
            }
            c if c.is_whitespace() => {}
            c if c.is_alphanumeric() || c == '_' => {
                let start = col;
                let mut word = String::new();
                word.push(c);
                while let Some(&c2) = chars.peek() {
                    if c2.is_alphanumeric() || c2 == '_' {
                        word.push(c2);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                out.push(Token { text: word, line, col: start });
            }
            '{' | '}' | ';' | ':' | ',' | '*' | '=' | '^' | '(' | ')' | '[' | ']' => {
                out.push(Token { text: c.to_string(), line, col });
            }
            other => {
                return Err(ParseError::Syntax {
                    line,
                    col,
                    msg: format!("unexpected character '{}'", other),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Result<Token, ParseError> {
        let t = self.tokens.get(self.pos).cloned().ok_or(ParseError::Syntax {
            line: self.tokens.last().map_or(1, |t| t.line),
            col: self.tokens.last().map_or(0, |t| t.col),
            msg: "unexpected end of input".into(),
        })?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, s: &str) -> Result<Token, ParseError> {
        let t = self.next()?;
        if t.text != s {
            return Err(ParseError::Syntax {
                line: t.line,
                col: t.col,
                msg: format!("expected '{}', found '{}'", s, t.text),
            });
        }
        Ok(t)
    }

    fn expect_int(&mut self) -> Result<(u32, Token), ParseError> {
        let t = self.next()?;
        match t.text.parse::<u32>() {
            Ok(v) => Ok((v, t)),
            Err(_) => Err(ParseError::Syntax {
                line: t.line,
                col: t.col,
                msg: format!("expected an integer, found '{}'", t.text),
            }),
        }
    }
}

fn err_at(t: &Token, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line: t.line, col: t.col, msg: msg.into() }
}

/// Parse a DSL document.
pub fn parse_dsl(text: &str) -> Result<DslDocument, ParseError> {
    let mut p = Parser { tokens: tokenize(text)?, pos: 0 };
    let head = p.next()?;
    let kind = match head.text.as_str() {
        "group" => DocKind::Group,
        "algebra" => DocKind::Algebra,
        "sweep" => DocKind::Sweep,
        other => {
            return Err(err_at(
                &head,
                format!("expected 'group', 'algebra' or 'sweep', found '{}'", other),
            ))
        }
    };
    let name_tok = p.next()?;
    let name = name_tok.text.clone();
    p.expect("{")?;

    struct RawRule {
        gen: Token,
        exp: u32,
        rhs: Vec<Token>,
    }
    struct RawRel {
        x: Token,
        y: Token,
        rhs: Vec<Token>,
    }
    let mut generators: Vec<String> = Vec::new();
    let mut modulus: Option<u32> = None;
    let mut raw_orders: Vec<RawRule> = Vec::new();
    let mut raw_rels: Vec<RawRel> = Vec::new();
    let mut params: Vec<ParamDecl> = Vec::new();

    loop {
        let t = p.next()?;
        match t.text.as_str() {
            "}" => break,
            "generators" => {
                p.expect(":")?;
                loop {
                    let g = p.next()?;
                    if !g.text.chars().next().map_or(false, |c| c.is_alphabetic()) {
                        return Err(err_at(&g, "generator names start with a letter"));
                    }
                    if generators.contains(&g.text) {
                        return Err(err_at(&g, format!("duplicate generator '{}'", g.text)));
                    }
                    generators.push(g.text.clone());
                    let sep = p.next()?;
                    match sep.text.as_str() {
                        "," => continue,
                        ";" => break,
                        _ => return Err(err_at(&sep, "expected ',' or ';'")),
                    }
                }
            }
            "modulus" => {
                p.expect(":")?;
                let (m, tok) = p.expect_int()?;
                if m == 0 {
                    return Err(err_at(&tok, "modulus must be positive"));
                }
                if modulus.replace(m).is_some() {
                    return Err(err_at(&tok, "duplicate modulus declaration"));
                }
                p.expect(";")?;
            }
            "order" => {
                p.expect(":")?;
                let gen = p.next()?;
                p.expect("^")?;
                let (exp, exp_tok) = p.expect_int()?;
                if exp == 0 {
                    return Err(err_at(&exp_tok, "generator order must be positive"));
                }
                p.expect("=")?;
                let rhs = collect_until_semi(&mut p)?;
                raw_orders.push(RawRule { gen, exp, rhs });
            }
            "relation" => {
                p.expect(":")?;
                p.expect("[")?;
                let x = p.next()?;
                p.expect(",")?;
                let y = p.next()?;
                p.expect("]")?;
                p.expect("=")?;
                let rhs = collect_until_semi(&mut p)?;
                raw_rels.push(RawRel { x, y, rhs });
            }
            "param" => {
                let name = p.next()?;
                p.expect("in")?;
                p.expect("mu")?;
                p.expect("(")?;
                let (d, dtok) = p.expect_int()?;
                p.expect(")")?;
                p.expect(";")?;
                if d == 0 {
                    return Err(err_at(&dtok, "parameter range must be positive"));
                }
                if params.iter().any(|q| q.name == name.text) {
                    return Err(err_at(&name, format!("duplicate parameter '{}'", name.text)));
                }
                params.push(ParamDecl { name: name.text.clone(), order: d });
            }
            other => return Err(err_at(&t, format!("unexpected declaration '{}'", other))),
        }
    }
    if generators.is_empty() {
        return Err(ParseError::Syntax {
            line: name_tok.line,
            col: name_tok.col,
            msg: "document declares no generators".into(),
        });
    }
    let m = match (kind, modulus) {
        (DocKind::Group, m) => m.unwrap_or(1),
        (_, Some(m)) => m,
        _ => {
            return Err(ParseError::Document(format!("'{}' requires a modulus declaration", name)))
        }
    };
    for q in &params {
        if m % q.order != 0 {
            return Err(ParseError::Document(format!(
                "parameter '{}' range mu({}) does not divide modulus {}",
                q.name, q.order, m
            )));
        }
    }
    if kind != DocKind::Sweep && !params.is_empty() {
        return Err(ParseError::Document("parameters are only allowed in sweep documents".into()));
    }

    let gen_index = |t: &Token| -> Result<usize, ParseError> {
        generators.iter().position(|g| g == &t.text).ok_or(ParseError::UndeclaredGenerator {
            name: t.text.clone(),
            line: t.line,
            col: t.col,
        })
    };
    let param_names: Vec<String> = params.iter().map(|q| q.name.clone()).collect();

    let mut power_rules: Vec<Option<PowerRule>> = vec![None; generators.len()];
    for r in &raw_orders {
        let gi = gen_index(&r.gen)?;
        let (scalar, word) = parse_rhs(&r.rhs, &generators, &param_names, m)?;
        if power_rules[gi].is_some() {
            return Err(err_at(&r.gen, format!("duplicate order declaration for '{}'", r.gen.text)));
        }
        power_rules[gi] = Some(PowerRule { exponent: r.exp, scalar, word });
    }
    let mut rules = Vec::new();
    for (i, r) in power_rules.into_iter().enumerate() {
        match r {
            Some(r) => rules.push(r),
            None => return Err(ParseError::MissingOrder(generators[i].clone())),
        }
    }

    let mut relations = Vec::new();
    for r in &raw_rels {
        let xi = gen_index(&r.x)?;
        let yi = gen_index(&r.y)?;
        if xi == yi {
            return Err(err_at(&r.x, "commutator of a generator with itself"));
        }
        let (scalar, word) = parse_rhs(&r.rhs, &generators, &param_names, m)?;
        relations.push(RelationRule { left: xi, right: yi, scalar, word });
    }

    if kind == DocKind::Group {
        let scalar_free = rules.iter().all(|r| r.scalar.is_zero())
            && relations.iter().all(|r| r.scalar.is_zero());
        if !scalar_free {
            return Err(ParseError::Document(
                "group presentations must not carry scalar twists".into(),
            ));
        }
    }

    let presentation = CollectionPresentation {
        name: name.clone(),
        generators,
        modulus: m,
        power_rules: rules,
        relations,
    };
    Ok(DslDocument { kind, name, presentation, params })
}

fn collect_until_semi(p: &mut Parser) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    loop {
        match p.peek() {
            None => {
                return Err(ParseError::Syntax {
                    line: 0,
                    col: 0,
                    msg: "unterminated declaration".into(),
                })
            }
            Some(t) if t.text == ";" => {
                p.next()?;
                return Ok(out);
            }
            Some(_) => out.push(p.next()?),
        }
    }
}

/// Parse a right-hand side: product of `w(k)`, parameter names, `1`, and
/// generator powers `g` / `g^k`.
fn parse_rhs(
    tokens: &[Token],
    generators: &[String],
    params: &[String],
    m: u32,
) -> Result<(ScalarExpr, Word), ParseError> {
    let mut scalar = ScalarExpr::zero();
    let mut word: Vec<(usize, i64)> = Vec::new();
    let mut q = Parser { tokens: tokens.to_vec(), pos: 0 };
    if tokens.is_empty() {
        return Err(ParseError::Syntax { line: 0, col: 0, msg: "empty right-hand side".into() });
    }
    loop {
        let t = q.next()?;
        if t.text == "1" {
            // multiplicative identity: contributes nothing
        } else if t.text == "w" {
            q.expect("(")?;
            let (k, _) = q.expect_int()?;
            q.expect(")")?;
            scalar.base = (scalar.base + k) % m;
        } else if params.contains(&t.text) {
            scalar.params.push(t.text.clone());
        } else if let Some(gi) = generators.iter().position(|g| g == &t.text) {
            let mut e = 1i64;
            if q.peek().map_or(false, |t| t.text == "^") {
                q.expect("^")?;
                let (k, _) = q.expect_int()?;
                e = k as i64;
            }
            word.push((gi, e));
        } else {
            return Err(ParseError::UndeclaredGenerator {
                name: t.text.clone(),
                line: t.line,
                col: t.col,
            });
        }
        match q.peek() {
            None => break,
            Some(t) if t.text == "*" => {
                q.next()?;
            }
            Some(t) => return Err(err_at(t, "expected '*' between factors")),
        }
    }
    scalar.params.sort();
    Ok((scalar, Word::new(word)))
}

/// Canonical text form; `parse_dsl(print_dsl(d))` is the identity.
pub fn print_dsl(doc: &DslDocument) -> String {
    let pres = &doc.presentation;
    let mut out = String::new();
    out.push_str(&format!("{} {} {{\n", doc.kind.keyword(), doc.name));
    out.push_str(&format!("  generators: {};\n", pres.generators.join(", ")));
    if doc.kind != DocKind::Group || pres.modulus != 1 {
        out.push_str(&format!("  modulus: {};\n", pres.modulus));
    }
    for (i, r) in pres.power_rules.iter().enumerate() {
        out.push_str(&format!(
            "  order: {}^{} = {};\n",
            pres.generators[i],
            r.exponent,
            rhs_string(&r.scalar, &r.word, pres)
        ));
    }
    let mut rels: Vec<&RelationRule> = pres.relations.iter().collect();
    rels.sort_by_key(|r| (r.left, r.right));
    for r in rels {
        out.push_str(&format!(
            "  relation: [{},{}] = {};\n",
            pres.generators[r.left],
            pres.generators[r.right],
            rhs_string(&r.scalar, &r.word, pres)
        ));
    }
    let mut params = doc.params.clone();
    params.sort_by(|a, b| a.name.cmp(&b.name));
    for q in &params {
        out.push_str(&format!("  param {} in mu({});\n", q.name, q.order));
    }
    out.push_str("}\n");
    out
}

fn rhs_string(scalar: &ScalarExpr, word: &Word, pres: &CollectionPresentation) -> String {
    let mut factors: Vec<String> = Vec::new();
    if scalar.base != 0 {
        factors.push(format!("w({})", scalar.base));
    }
    for p in &scalar.params {
        factors.push(p.clone());
    }
    for &(g, e) in word.letters() {
        if e == 1 {
            factors.push(pres.generators[g].clone());
        } else {
            factors.push(format!("{}^{}", pres.generators[g], e));
        }
    }
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join(" * ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const D4: &str = "algebra d4_example {\n  generators: s, t;\n  modulus: 4;\n  order: s^4 = 1;\n  order: t^2 = 1;\n  relation: [t,s] = w(1) * s^2;\n}\n";

    #[test]
    fn parse_and_print_roundtrip() {
        let doc = parse_dsl(D4).unwrap();
        assert_eq!(doc.kind, DocKind::Algebra);
        assert_eq!(doc.presentation.generators, vec!["s", "t"]);
        assert_eq!(doc.presentation.modulus, 4);
        let printed = print_dsl(&doc);
        let doc2 = parse_dsl(&printed).unwrap();
        assert_eq!(doc, doc2);
        assert_eq!(print_dsl(&doc2), printed);
    }

    #[test]
    fn scalar_attaches_to_relation() {
        let text = "algebra h {\n generators: a, b, c;\n modulus: 9;\n order: a^9 = 1;\n order: b^3=1;\n order: c^3=1;\n relation: [c,a] = w(1) * b;\n}\n";
        let doc = parse_dsl(text).unwrap();
        let rel = &doc.presentation.relations[0];
        assert_eq!(rel.scalar.base, 1);
        assert_eq!(rel.word.letters(), &[(1usize, 1i64)]);
    }

    #[test]
    fn empty_body_is_error() {
        assert!(parse_dsl("group g {}").is_err());
        assert!(parse_dsl("").is_err());
    }

    #[test]
    fn missing_order_is_reported() {
        let text = "group g {\n generators: a, b;\n order: a^2 = 1;\n}\n";
        match parse_dsl(text) {
            Err(ParseError::MissingOrder(name)) => assert_eq!(name, "b"),
            other => panic!("expected MissingOrder, got {:?}", other),
        }
    }

    #[test]
    fn undeclared_generator_is_reported() {
        let text = "group g {\n generators: a;\n order: a^2 = 1;\n relation: [a,z] = 1;\n}\n";
        assert!(matches!(parse_dsl(text), Err(ParseError::UndeclaredGenerator { .. })));
    }

    #[test]
    fn group_presentations_reject_scalars() {
        let text = "group g {\n generators: a;\n modulus: 4;\n order: a^2 = w(1);\n}\n";
        assert!(matches!(parse_dsl(text), Err(ParseError::Document(_))));
    }

    #[test]
    fn params_only_in_sweeps() {
        let text = "sweep s {\n generators: a, b;\n modulus: 4;\n order: a^4=1;\n order: b^2=1;\n relation: [a,b] = d * a^2;\n param d in mu(4);\n}\n";
        let doc = parse_dsl(text).unwrap();
        assert_eq!(doc.params.len(), 1);
        assert_eq!(doc.presentation.relations[0].scalar.params, vec!["d"]);
        let bad = text.replace("sweep", "algebra");
        assert!(parse_dsl(&bad).is_err());
    }

    #[test]
    fn comments_are_skipped() {
        let text = "# leading comment\ngroup g { # inline\n generators: a;\n order: a^3 = 1;\n}\n";
        assert!(parse_dsl(text).is_ok());
    }
}
