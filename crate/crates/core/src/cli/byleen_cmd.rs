use std::path::Path;

use clap::Subcommand;
use serde_json::json;

use super::{read_file, CliError, Outcome};
use crate::byleen::{parse_letter, parse_word, Byleen, ByleenError, Letter, NormalForm};
use crate::finite::{cyclic_group, trivial, FiniteSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum ByleenCommand {
    /// Normal form of a word.
    Eval { word: String },
    /// Product of two words.
    Mul { x: String, y: String },
    /// Certificate that the letter pair `(w1, w2)` lies in the diagonal
    /// subsemigroup generated by `(g, h)`.
    Span {
        g: String,
        h: String,
        w1: String,
        w2: String,
    },
    /// Certificate for an arbitrary target pair `(p, q)`.
    Express {
        g: String,
        h: String,
        p: String,
        q: String,
    },
    /// A verified inverse.
    Inverse { t: String },
}

/// `trivial`, `cN`, or a path to a Cayley JSON file.
pub fn base_by_name(name: &str) -> Result<FiniteSemigroup, CliError> {
    if name == "trivial" {
        return Ok(trivial());
    }
    if let Some(n) = name.strip_prefix('c').and_then(|d| d.parse::<usize>().ok()) {
        if n == 0 {
            return Err(CliError::Usage(
                "cyclic group order must be positive".into(),
            ));
        }
        return Ok(cyclic_group(n));
    }
    let text = read_file(Path::new(name))?;
    FiniteSemigroup::from_json(&text).map_err(|e| CliError::Parse(e.to_string()))
}

fn to_cli(err: ByleenError) -> CliError {
    match err {
        ByleenError::Unverified(msg) => CliError::Verification(msg),
        other => CliError::Usage(other.to_string()),
    }
}

fn word(m: &Byleen, text: &str) -> Result<NormalForm, CliError> {
    parse_word(m, text).map_err(to_cli)
}

fn letter(m: &Byleen, text: &str) -> Result<Letter, CliError> {
    let mut tokens = text.split_whitespace();
    match (tokens.next(), tokens.next()) {
        (Some(tok), None) => parse_letter(tok, m.base().order(), m.base_identity()).map_err(to_cli),
        _ => Err(CliError::Usage(format!(
            "expected a single letter, got `{text}`"
        ))),
    }
}

pub fn cmd_byleen(base: FiniteSemigroup, command: &ByleenCommand) -> Result<Outcome, CliError> {
    let order = base.order();
    let m = Byleen::new(base).map_err(to_cli)?;
    let subject = json!({ "kind": "byleen", "base_order": order });
    let report = match command {
        ByleenCommand::Eval { word: w } => {
            let nf = word(&m, w)?;
            json!({ "subject": subject, "input": w, "normal_form": nf })
        }
        ByleenCommand::Mul { x, y } => {
            let (x, y) = (word(&m, x)?, word(&m, y)?);
            let product = m.mul(&x, &y).map_err(to_cli)?;
            json!({ "subject": subject, "x": x, "y": y, "product": product })
        }
        ByleenCommand::Span { g, h, w1, w2 } => {
            let (g, h) = (word(&m, g)?, word(&m, h)?);
            let (w1, w2) = (letter(&m, w1)?, letter(&m, w2)?);
            let cert = m.span_witness(&g, &h, &w1, &w2).map_err(to_cli)?;
            json!({ "subject": subject, "certificate": cert })
        }
        ByleenCommand::Express { g, h, p, q } => {
            let (g, h) = (word(&m, g)?, word(&m, h)?);
            let (p, q) = (word(&m, p)?, word(&m, q)?);
            let cert = m.express_pair(&g, &h, &p, &q).map_err(to_cli)?;
            json!({ "subject": subject, "certificate": cert })
        }
        ByleenCommand::Inverse { t } => {
            let t = word(&m, t)?;
            let inv = m.regular_inverse(&t).map_err(to_cli)?;
            json!({ "subject": subject, "element": t, "inverse": inv, "verified": true })
        }
    };
    Ok(Outcome::new(report, true))
}
