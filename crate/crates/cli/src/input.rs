//! Reading codes from `--code` text or an input file.

use std::io::Read;
use std::path::Path;

use obstrukt::{parse_codeword, Codeword, Error, NeuralCode, NotationForm};

use crate::error::CliError;

/// Splits `text` at commas outside braces, returning each piece with its
/// 0-based character offset.
pub fn split_top_level(text: &str) -> Vec<(usize, &str)> {
    let mut parts = Vec::new();
    let (mut depth, mut start_byte, mut start_char) = (0i32, 0usize, 0usize);
    for (ci, (bi, c)) in text.char_indices().enumerate() {
        match c {
            '{' => depth += 1,
            '}' => depth -= 1,
            ',' if depth == 0 => {
                parts.push((start_char, &text[start_byte..bi]));
                start_byte = bi + 1;
                start_char = ci + 1;
            }
            _ => {}
        }
    }
    parts.push((start_char, &text[start_byte..]));
    parts
}

fn located(error: Error, source_name: &str, line: usize, offset: usize) -> CliError {
    let (column, message) = match &error {
        Error::MalformedText { column, reason } => (offset + column, reason.clone()),
        other => (offset + 1, other.to_string()),
    };
    CliError::Parse { source_name: source_name.to_string(), line, column, message }
}

fn parse_word(text: &str, form: NotationForm, n: usize, source_name: &str, line: usize, offset: usize) -> Result<Codeword, CliError> {
    parse_codeword(text, form, n).map_err(|e| located(e, source_name, line, offset))
}

/// Parses inline code text such as `123,24,2`; an all-blank string is the empty code.
pub fn parse_inline(text: &str, n: usize, form: NotationForm) -> Result<NeuralCode, CliError> {
    if text.trim().is_empty() {
        return Ok(NeuralCode::empty(n)?);
    }
    let words = split_top_level(text)
        .into_iter()
        .map(|(offset, piece)| parse_word(piece, form, n, "--code", 1, offset))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(NeuralCode::new(n, words)?)
}

/// Parses the file format: a `n=<int>` header line, then one codeword per line.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_file(text: &str, form: NotationForm, source_name: &str) -> Result<NeuralCode, CliError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('#')
    });
    let parse_error = |line: usize, column: usize, message: &str| CliError::Parse {
        source_name: source_name.to_string(),
        line,
        column,
        message: message.to_string(),
    };
    let (header_line, header) = lines.next().ok_or_else(|| parse_error(1, 1, "missing header line 'n=<int>'"))?;
    let lead = header.chars().take_while(|c| c.is_whitespace()).count();
    let value = header
        .trim()
        .strip_prefix("n")
        .map(str::trim_start)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| parse_error(header_line, lead + 1, "expected header 'n=<int>'"))?;
    let n: usize = value
        .trim()
        .parse()
        .map_err(|_| parse_error(header_line, lead + 1, &format!("'{}' is not a neuron count", value.trim())))?;
    NeuralCode::empty(n).map_err(|e| parse_error(header_line, lead + 1, &e.to_string()))?;
    let words = lines.map(|(line, text)| parse_word(text, form, n, source_name, line, 0)).collect::<Result<Vec<_>, _>>()?;
    Ok(NeuralCode::new(n, words)?)
}

/// Reads a file path, or standard input for `-`.
pub fn read_source(path: &Path) -> Result<(String, String), CliError> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Io { path: "<stdin>".into(), message: e.to_string() })?;
        return Ok(("<stdin>".into(), text));
    }
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io { path: name.clone(), message: e.to_string() })?;
    Ok((name, text))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn top_level_split_respects_braces() {
        assert_eq!(split_top_level("{1,2},{3}"), vec![(0, "{1,2}"), (6, "{3}")]);
        assert_eq!(split_top_level("12,3"), vec![(0, "12"), (3, "3")]);
    }

    #[test]
    fn inline_codes() {
        let c = parse_inline("123,24,2", 4, NotationForm::Word).unwrap();
        assert_eq!(c.len(), 3);
        let s = parse_inline("{1,2,3}, {2,4}", 4, NotationForm::Set).unwrap();
        assert_eq!(s.sorted_binary(), vec!["0101", "1110"]);
        assert!(parse_inline("", 3, NotationForm::Word).unwrap().is_empty());
    }

    #[test]
    fn inline_errors_carry_columns() {
        match parse_inline("12,1x", 3, NotationForm::Word) {
            Err(CliError::Parse { line: 1, column, .. }) => assert_eq!(column, 5),
            other => panic!("{other:?}"),
        }
        match parse_inline("12,7", 3, NotationForm::Word) {
            Err(CliError::Parse { line: 1, column: 4, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn file_format() {
        let c = parse_file("n=4\n123\n\n# note\n24\n2\n", NotationForm::Word, "f").unwrap();
        assert_eq!(c.sorted_binary(), vec!["0100", "0101", "1110"]);
        match parse_file("n=3\n12\n1a\n", NotationForm::Word, "f") {
            Err(CliError::Parse { line: 3, column: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_file("3\n12", NotationForm::Word, "f"), Err(CliError::Parse { line: 1, .. })));
        assert!(matches!(parse_file("", NotationForm::Word, "f"), Err(CliError::Parse { .. })));
    }
}
