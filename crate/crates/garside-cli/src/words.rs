//! The braid-word input syntax.
//!
//! Tokens separated by whitespace: `s<k>` for the k-th atom (k ≥ 1), `D`
//! for the Garside element, either with an optional `^<int>` exponent.
//! `D^-1` expands to the reversed, inverted Δ word. Parsing a printed
//! canonical word gives back the same element after normalization.

use std::fmt;

use garside::Structure;

/// A syntax error with the byte offset of the offending token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at byte {}: {}",
            self.position, self.message
        )
    }
}

impl std::error::Error for WordError {}

fn err(position: usize, message: impl Into<String>) -> WordError {
    WordError {
        position,
        message: message.into(),
    }
}

/// Parses a word into signed 1-based atoms, expanding exponents and Δ.
pub fn parse_word<S: Structure>(text: &str, structure: &S) -> Result<Vec<i64>, WordError> {
    let delta: Vec<i64> = structure
        .delta_word()
        .iter()
        .map(|&a| a as i64 + 1)
        .collect();
    let mut out = Vec::new();
    let mut offset = 0;
    for raw in text.split_whitespace() {
        let position = text[offset..]
            .find(raw)
            .map(|p| p + offset)
            .unwrap_or(offset);
        offset = position + raw.len();

        let (base, exponent) = match raw.find('^') {
            Some(caret) => {
                let exp_text = &raw[caret + 1..];
                let exp: i64 = exp_text
                    .parse()
                    .map_err(|_| err(position + caret + 1, format!("bad exponent `{exp_text}`")))?;
                (&raw[..caret], exp)
            }
            None => (raw, 1),
        };
        let letters: Vec<i64> = if base == "D" {
            delta.clone()
        } else if let Some(num) = base.strip_prefix('s') {
            let k: i64 = num
                .parse()
                .map_err(|_| err(position, format!("bad atom token `{base}`")))?;
            if k < 1 {
                return Err(err(position, "atom numbers start at 1"));
            }
            vec![k]
        } else {
            return Err(err(position, format!("unrecognized token `{base}`")));
        };
        if exponent >= 0 {
            for _ in 0..exponent {
                out.extend(&letters);
            }
        } else {
            for _ in 0..-exponent {
                out.extend(letters.iter().rev().map(|&a| -a));
            }
        }
    }
    Ok(out)
}
