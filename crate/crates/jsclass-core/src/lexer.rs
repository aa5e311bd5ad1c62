//! ES5 tokenizer.
//!
//! Produces the token stream the parser consumes. Two details carry the
//! language's statement rules: every token records whether a line
//! terminator preceded it (the input to automatic semicolon insertion), and
//! `/` is disambiguated between division and regex literal from the
//! previous significant token.

use crate::ast::SourceSpan;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Lexical class of a token.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    /// Identifier or contextual name.
    Identifier,
    /// ES5 reserved word.
    Keyword,
    /// Operator or delimiter.
    Punctuator,
    /// Numeric literal.
    Number,
    /// String literal.
    String,
    /// `true` or `false`.
    Boolean,
    /// `null`.
    Null,
    /// Regular-expression literal.
    Regex,
    /// End of input; always the last and only such token.
    Eof,
}

/// One lexed token.
#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    /// Lexical class.
    pub kind: TokenKind,
    /// Verbatim source text (empty for eof).
    pub text: String,
    /// Source range of the lexeme.
    pub span: SourceSpan,
    /// True when a line terminator (or a comment containing one) separates
    /// this token from the previous one. Drives semicolon insertion.
    pub preceded_by_newline: bool,
}

/// Tokenization failure: unterminated literal/comment or illegal character.
#[derive(Debug, Clone, PartialEq)]
pub struct LexError {
    /// What went wrong.
    pub message: String,
    /// Where it went wrong.
    pub span: SourceSpan,
}

impl fmt::Display for LexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at {}:{}",
            self.message, self.span.start_line, self.span.start_col
        )
    }
}

/// The ES5 reserved words, including future reserved words, which this
/// lexer treats uniformly as keywords. `true`/`false`/`null` are separate
/// token kinds and `get`/`set` are contextual identifiers.
pub const KEYWORDS: &[&str] = &[
    "break",
    "case",
    "catch",
    "class",
    "const",
    "continue",
    "debugger",
    "default",
    "delete",
    "do",
    "else",
    "enum",
    "export",
    "extends",
    "finally",
    "for",
    "function",
    "if",
    "import",
    "in",
    "instanceof",
    "new",
    "return",
    "super",
    "switch",
    "this",
    "throw",
    "try",
    "typeof",
    "var",
    "void",
    "while",
    "with",
];

fn is_ident_start(c: char) -> bool {
    c == '_' || c == '$' || c.is_alphabetic()
}

fn is_ident_part(c: char) -> bool {
    c == '_' || c == '$' || c.is_alphanumeric()
}

fn is_line_terminator(c: char) -> bool {
    matches!(c, '\n' | '\r' | '\u{2028}' | '\u{2029}')
}

struct Lexer {
    chars: Vec<char>,
    pos: usize,
    line: u32,
    col: u32,
}

impl Lexer {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek2(&self) -> Option<char> {
        self.chars.get(self.pos + 1).copied()
    }

    /// Consumes one character, folding `\r\n` into a single line advance.
    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if is_line_terminator(c) {
            if c == '\r' && self.peek() == Some('\n') {
                self.pos += 1;
            }
            self.line += 1;
            self.col = 0;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn here(&self) -> (u32, u32) {
        (self.line, self.col)
    }

    fn error(&self, message: &str, start: (u32, u32)) -> LexError {
        LexError {
            message: String::from(message),
            span: SourceSpan::new(start.0, start.1, self.line, self.col),
        }
    }
}

/// Whether a `/` at the current position starts a regex literal, judged by
/// the previous significant token. After value-like tokens `/` is division;
/// after operators, keywords, and `{`/`}`, a regex may begin. A `}` is
/// treated as closing a block (regex position), which is the common case in
/// real code; `(expr)`-style division after `)` stays division.
fn regex_allowed(prev: Option<&Token>) -> bool {
    let Some(prev) = prev else {
        return true;
    };
    match prev.kind {
        TokenKind::Identifier
        | TokenKind::Number
        | TokenKind::String
        | TokenKind::Boolean
        | TokenKind::Null
        | TokenKind::Regex => false,
        TokenKind::Keyword => prev.text != "this",
        TokenKind::Punctuator => !matches!(prev.text.as_str(), ")" | "]" | "++" | "--"),
        TokenKind::Eof => false,
    }
}

// Longest-match table; ordered so longer punctuators are tried first.
const PUNCTUATORS: &[&str] = &[
    ">>>=", "===", "!==", ">>>", "<<=", ">>=", "<=", ">=", "==", "!=", "&&", "||", "++", "--",
    "<<", ">>", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "{", "}", "(", ")", "[", "]", ";",
    ",", "<", ">", "+", "-", "*", "%", "&", "|", "^", "!", "~", "?", ":", "=", ".", "/",
];

/// Tokenizes ES5 source text. A UTF-8 BOM, if present, is skipped as
/// whitespace. The returned list always ends with exactly one eof token.
pub fn tokenize(source_text: &str) -> Result<Vec<Token>, LexError> {
    let mut lx = Lexer {
        chars: source_text.chars().collect(),
        pos: 0,
        line: 1,
        col: 0,
    };
    let mut tokens: Vec<Token> = Vec::new();
    let mut newline_pending = false;

    loop {
        // Whitespace and comments; both can carry line terminators.
        loop {
            match lx.peek() {
                Some(c) if is_line_terminator(c) => {
                    lx.bump();
                    newline_pending = true;
                }
                Some(c) if c.is_whitespace() || c == '\u{feff}' => {
                    lx.bump();
                }
                Some('/') if lx.peek2() == Some('/') => {
                    while let Some(c) = lx.peek() {
                        if is_line_terminator(c) {
                            break;
                        }
                        lx.bump();
                    }
                }
                Some('/') if lx.peek2() == Some('*') => {
                    let start = lx.here();
                    lx.bump();
                    lx.bump();
                    let mut closed = false;
                    while let Some(c) = lx.bump() {
                        if is_line_terminator(c) {
                            newline_pending = true;
                        }
                        if c == '*' && lx.peek() == Some('/') {
                            lx.bump();
                            closed = true;
                            break;
                        }
                    }
                    if !closed {
                        return Err(lx.error("unterminated block comment", start));
                    }
                }
                _ => break,
            }
        }

        let start = lx.here();
        let start_pos = lx.pos;
        let Some(c) = lx.peek() else {
            tokens.push(Token {
                kind: TokenKind::Eof,
                text: String::new(),
                span: SourceSpan::new(start.0, start.1, start.0, start.1),
                preceded_by_newline: newline_pending,
            });
            return Ok(tokens);
        };

        let kind = if is_ident_start(c) {
            while lx.peek().is_some_and(is_ident_part) {
                lx.bump();
            }
            let word: String = lx.chars[start_pos..lx.pos].iter().collect();
            match word.as_str() {
                "true" | "false" => TokenKind::Boolean,
                "null" => TokenKind::Null,
                w if KEYWORDS.contains(&w) => TokenKind::Keyword,
                _ => TokenKind::Identifier,
            }
        } else if c.is_ascii_digit() || (c == '.' && lx.peek2().is_some_and(|d| d.is_ascii_digit()))
        {
            lex_number(&mut lx, start)?;
            TokenKind::Number
        } else if c == '\'' || c == '"' {
            lex_string(&mut lx, start)?;
            TokenKind::String
        } else if c == '/' && regex_allowed(tokens.last()) {
            lex_regex(&mut lx, start)?;
            TokenKind::Regex
        } else {
            let mut matched = None;
            for p in PUNCTUATORS {
                if source_matches_at(&lx.chars, lx.pos, p) {
                    matched = Some(*p);
                    break;
                }
            }
            let Some(p) = matched else {
                lx.bump();
                return Err(lx.error("illegal character", start));
            };
            for _ in 0..p.chars().count() {
                lx.bump();
            }
            TokenKind::Punctuator
        };

        let text: String = lx.chars[start_pos..lx.pos].iter().collect();
        tokens.push(Token {
            kind,
            text,
            span: SourceSpan::new(start.0, start.1, lx.line, lx.col),
            preceded_by_newline: newline_pending,
        });
        newline_pending = false;
    }
}

fn source_matches_at(chars: &[char], pos: usize, pat: &str) -> bool {
    pat.chars()
        .enumerate()
        .all(|(i, pc)| chars.get(pos + i) == Some(&pc))
}

fn lex_number(lx: &mut Lexer, start: (u32, u32)) -> Result<(), LexError> {
    if lx.peek() == Some('0') && matches!(lx.peek2(), Some('x') | Some('X')) {
        lx.bump();
        lx.bump();
        let mut digits = 0;
        while lx.peek().is_some_and(|c| c.is_ascii_hexdigit()) {
            lx.bump();
            digits += 1;
        }
        if digits == 0 {
            return Err(lx.error("malformed hex literal", start));
        }
    } else {
        while lx.peek().is_some_and(|c| c.is_ascii_digit()) {
            lx.bump();
        }
        if lx.peek() == Some('.') {
            lx.bump();
            while lx.peek().is_some_and(|c| c.is_ascii_digit()) {
                lx.bump();
            }
        }
        if matches!(lx.peek(), Some('e') | Some('E')) {
            lx.bump();
            if matches!(lx.peek(), Some('+') | Some('-')) {
                lx.bump();
            }
            let mut digits = 0;
            while lx.peek().is_some_and(|c| c.is_ascii_digit()) {
                lx.bump();
                digits += 1;
            }
            if digits == 0 {
                return Err(lx.error("malformed exponent", start));
            }
        }
    }
    if lx.peek().is_some_and(is_ident_start) {
        return Err(lx.error("identifier starts immediately after number", start));
    }
    Ok(())
}

fn lex_string(lx: &mut Lexer, start: (u32, u32)) -> Result<(), LexError> {
    let quote = lx.bump().expect("caller saw the quote");
    loop {
        let Some(c) = lx.peek() else {
            return Err(lx.error("unterminated string", start));
        };
        if is_line_terminator(c) {
            return Err(lx.error("unterminated string", start));
        }
        lx.bump();
        if c == quote {
            return Ok(());
        }
        if c == '\\' {
            // Any escaped character is consumed, including a line
            // terminator (string continuation).
            if lx.bump().is_none() {
                return Err(lx.error("unterminated string", start));
            }
        }
    }
}

fn lex_regex(lx: &mut Lexer, start: (u32, u32)) -> Result<(), LexError> {
    lx.bump(); // opening '/'
    let mut in_class = false;
    loop {
        let Some(c) = lx.peek() else {
            return Err(lx.error("unterminated regular expression", start));
        };
        if is_line_terminator(c) {
            return Err(lx.error("unterminated regular expression", start));
        }
        lx.bump();
        match c {
            '\\' => {
                if lx.bump().is_none() {
                    return Err(lx.error("unterminated regular expression", start));
                }
            }
            '[' => in_class = true,
            ']' => in_class = false,
            '/' if !in_class => break,
            _ => {}
        }
    }
    while lx.peek().is_some_and(is_ident_part) {
        lx.bump();
    }
    Ok(())
}

/// Decodes the value of a string literal lexeme (including the quotes).
/// Unknown escapes follow ES5: the backslash drops and the character stays.
pub fn decode_string_literal(raw: &str) -> String {
    let chars: Vec<char> = raw.chars().collect();
    let mut out = String::new();
    // Skip the delimiting quotes.
    let mut i = 1;
    let end = chars.len().saturating_sub(1);
    while i < end {
        let c = chars[i];
        i += 1;
        if c != '\\' || i >= end {
            if c != '\\' {
                out.push(c);
            }
            continue;
        }
        let e = chars[i];
        i += 1;
        match e {
            'b' => out.push('\u{8}'),
            'f' => out.push('\u{c}'),
            'n' => out.push('\n'),
            'r' => out.push('\r'),
            't' => out.push('\t'),
            'v' => out.push('\u{b}'),
            '0' if !chars.get(i).is_some_and(|d| d.is_ascii_digit()) => out.push('\0'),
            'x' => {
                let hex: String = chars[i..(i + 2).min(end)].iter().collect();
                if hex.len() == 2 {
                    if let Ok(v) = u32::from_str_radix(&hex, 16) {
                        if let Some(decoded) = char::from_u32(v) {
                            out.push(decoded);
                            i += 2;
                            continue;
                        }
                    }
                }
                out.push('x');
            }
            'u' => {
                let hex: String = chars[i..(i + 4).min(end)].iter().collect();
                if hex.len() == 4 {
                    if let Ok(v) = u32::from_str_radix(&hex, 16) {
                        if let Some(decoded) = char::from_u32(v) {
                            out.push(decoded);
                            i += 4;
                            continue;
                        }
                    }
                }
                out.push('u');
            }
            c if is_line_terminator(c) => {
                // Line continuation contributes nothing. Collapse \r\n.
                if c == '\r' && chars.get(i) == Some(&'\n') {
                    i += 1;
                }
            }
            c if c.is_digit(8) => {
                // Legacy octal escape: up to three octal digits.
                let mut v = 0u32;
                let mut n = 0;
                let mut j = i - 1;
                while n < 3 && j < end && chars[j].is_digit(8) {
                    v = v * 8 + chars[j].to_digit(8).expect("checked octal digit");
                    j += 1;
                    n += 1;
                }
                if let Some(decoded) = char::from_u32(v) {
                    out.push(decoded);
                }
                i = j;
            }
            other => out.push(other),
        }
    }
    out
}

/// Parses the numeric value of a number lexeme (decimal, hex, or legacy
/// octal form).
pub fn decode_number_literal(raw: &str) -> f64 {
    if let Some(hex) = raw.strip_prefix("0x").or_else(|| raw.strip_prefix("0X")) {
        return u64::from_str_radix(hex, 16)
            .map(|v| v as f64)
            .unwrap_or(0.0);
    }
    if raw.len() > 1 && raw.starts_with('0') && raw.chars().all(|c| c.is_digit(8)) {
        return u64::from_str_radix(&raw[1..], 8)
            .map(|v| v as f64)
            .unwrap_or(0.0);
    }
    raw.parse::<f64>().unwrap_or(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn kinds_and_texts(src: &str) -> Vec<(TokenKind, String)> {
        tokenize(src)
            .expect("lexes")
            .into_iter()
            .map(|t| (t.kind, t.text))
            .collect()
    }

    #[test]
    fn smallest_statement() {
        assert_eq!(
            kinds_and_texts("var x=1;"),
            vec![
                (TokenKind::Keyword, "var".to_string()),
                (TokenKind::Identifier, "x".to_string()),
                (TokenKind::Punctuator, "=".to_string()),
                (TokenKind::Number, "1".to_string()),
                (TokenKind::Punctuator, ";".to_string()),
                (TokenKind::Eof, String::new()),
            ]
        );
    }

    #[test]
    fn this_member_assignment() {
        let tokens = tokenize("this.name=name;").expect("lexes");
        assert_eq!(tokens.len(), 7); // 6 + eof
        assert_eq!(tokens[0].kind, TokenKind::Keyword);
        assert_eq!(tokens[0].text, "this");
    }

    #[test]
    fn newline_flag_set_across_gap() {
        let tokens = tokenize("a\n=1").expect("lexes");
        assert_eq!(tokens[0].text, "a");
        assert!(!tokens[0].preceded_by_newline);
        assert_eq!(tokens[1].text, "=");
        assert!(tokens[1].preceded_by_newline);
        assert!(!tokens[2].preceded_by_newline);
    }

    #[test]
    fn newline_inside_block_comment_sets_flag() {
        let tokens = tokenize("a /* x\n */ b").expect("lexes");
        assert!(tokens[1].preceded_by_newline);
    }

    #[test]
    fn line_comment_hides_content() {
        let tokens = tokenize("a // b c d\ne").expect("lexes");
        let texts: Vec<_> = tokens.iter().map(|t| t.text.as_str()).collect();
        assert_eq!(texts, vec!["a", "e", ""]);
    }

    #[test]
    fn regex_after_operators_division_after_values() {
        let tokens = tokenize("var re = /ab/g; var q = a / b / c;").expect("lexes");
        let regexes: Vec<_> = tokens
            .iter()
            .filter(|t| t.kind == TokenKind::Regex)
            .map(|t| t.text.as_str())
            .collect();
        assert_eq!(regexes, vec!["/ab/g"]);
    }

    #[test]
    fn regex_with_class_and_escape() {
        let tokens = tokenize("s.match(/[/\\]]+/)").expect("lexes");
        assert!(tokens
            .iter()
            .any(|t| t.kind == TokenKind::Regex && t.text == "/[/\\]]+/"));
    }

    #[test]
    fn regex_after_return_and_paren() {
        let tokens = tokenize("f(/x/); function g() { return /y/; }").expect("lexes");
        let regexes = tokens.iter().filter(|t| t.kind == TokenKind::Regex).count();
        assert_eq!(regexes, 2);
    }

    #[test]
    fn division_after_call_result() {
        let tokens = tokenize("f(x) / 2").expect("lexes");
        assert!(tokens.iter().all(|t| t.kind != TokenKind::Regex));
    }

    #[test]
    fn punctuator_longest_match() {
        let texts: Vec<_> = kinds_and_texts("a >>>= b >>> c >> d > e")
            .into_iter()
            .filter(|(k, _)| *k == TokenKind::Punctuator)
            .map(|(_, t)| t)
            .collect();
        assert_eq!(texts, vec![">>>=", ">>>", ">>", ">"]);
    }

    #[test]
    fn number_forms() {
        for src in [
            "0", "42", "3.14", ".5", "5.", "1e10", "2.5e-3", "0xFF", "0x0",
        ] {
            let tokens = tokenize(src).expect(src);
            assert_eq!(tokens[0].kind, TokenKind::Number, "{src}");
            assert_eq!(tokens[0].text, src, "{src}");
        }
    }

    #[test]
    fn number_values() {
        assert_eq!(decode_number_literal("0xFF"), 255.0);
        assert_eq!(decode_number_literal("2.75"), 2.75);
        assert_eq!(decode_number_literal(".5"), 0.5);
        assert_eq!(decode_number_literal("0777"), 511.0);
        assert_eq!(decode_number_literal("1e3"), 1000.0);
    }

    #[test]
    fn string_escapes_decode() {
        assert_eq!(decode_string_literal("'it\\'s'"), "it's");
        assert_eq!(decode_string_literal("\"a\\nb\""), "a\nb");
        assert_eq!(decode_string_literal("'\\x41\\u0042'"), "AB");
        assert_eq!(decode_string_literal("'a\\\nb'"), "ab");
        assert_eq!(decode_string_literal("'\\0'"), "\0");
        assert_eq!(decode_string_literal("'\\101'"), "A");
        assert_eq!(decode_string_literal("'\\q'"), "q");
    }

    #[test]
    fn unterminated_string_errors_with_span() {
        let err = tokenize("var s = 'abc").expect_err("must fail");
        assert!(err.message.contains("unterminated string"));
        assert_eq!(err.span.start_line, 1);
        assert_eq!(err.span.start_col, 8);
    }

    #[test]
    fn unterminated_comment_errors() {
        let err = tokenize("a /* b").expect_err("must fail");
        assert!(err.message.contains("unterminated block comment"));
    }

    #[test]
    fn illegal_character_errors() {
        let err = tokenize("var a = 1 # 2").expect_err("must fail");
        assert!(err.message.contains("illegal character"));
    }

    #[test]
    fn eof_is_last_and_unique() {
        let tokens = tokenize("a b c").expect("lexes");
        let eofs = tokens.iter().filter(|t| t.kind == TokenKind::Eof).count();
        assert_eq!(eofs, 1);
        assert_eq!(tokens.last().expect("nonempty").kind, TokenKind::Eof);
    }

    #[test]
    fn bom_is_skipped() {
        let tokens = tokenize("\u{feff}var x;").expect("lexes");
        assert_eq!(tokens[0].text, "var");
        assert_eq!(tokens[0].span.start_col, 1); // BOM occupies column 0
    }

    #[test]
    fn crlf_counts_one_line() {
        let tokens = tokenize("a\r\nb").expect("lexes");
        assert_eq!(tokens[1].span.start_line, 2);
        assert!(tokens[1].preceded_by_newline);
    }

    #[test]
    fn keywords_as_property_names_still_lex_as_keywords() {
        let tokens = tokenize("a.delete").expect("lexes");
        assert_eq!(tokens[2].kind, TokenKind::Keyword);
        assert_eq!(tokens[2].text, "delete");
    }
}
