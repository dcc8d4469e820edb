//! Byte-level tokenizer for Java sources.
//!
//! Comments and whitespace never become tokens, so nothing downstream can
//! match inside them. String and char literals are single tokens.

use crate::span::Span;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    Int,
    Float,
    Str,
    TextBlock,
    Char,
    Punct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexError {
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Default)]
pub struct Lexed {
    pub tokens: Vec<Token>,
    pub comments: Vec<Span>,
}

const PUNCT: &[&str] = &[
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=", ">=", "+=", "-=", "*=",
    "/=", "&=", "|=", "^=", "%=", "<<", ">>", "(", ")", "{", "}", "[", "]", ";", ",", ".", "@", "=", ">", "<", "!",
    "~", "?", ":", "+", "-", "*", "/", "&", "|", "^", "%",
];

fn is_ident_start(b: u8) -> bool {
    b.is_ascii_alphabetic() || b == b'_' || b == b'$' || b >= 0x80
}

fn is_ident_part(b: u8) -> bool {
    is_ident_start(b) || b.is_ascii_digit()
}

pub fn lex(src: &[u8]) -> Result<Lexed, LexError> {
    let mut out = Lexed::default();
    let mut i = 0;
    let n = src.len();
    while i < n {
        let b = src[i];
        if b.is_ascii_whitespace() || b == 0x0c {
            i += 1;
            continue;
        }
        if b == b'/' && i + 1 < n && src[i + 1] == b'/' {
            let start = i;
            while i < n && src[i] != b'\n' {
                i += 1;
            }
            out.comments.push(Span::new(start, i));
            continue;
        }
        if b == b'/' && i + 1 < n && src[i + 1] == b'*' {
            let start = i;
            i += 2;
            loop {
                if i + 1 >= n {
                    return Err(LexError { offset: start, message: "unterminated block comment".into() });
                }
                if src[i] == b'*' && src[i + 1] == b'/' {
                    i += 2;
                    break;
                }
                i += 1;
            }
            out.comments.push(Span::new(start, i));
            continue;
        }
        let start = i;
        let kind = if is_ident_start(b) {
            while i < n && is_ident_part(src[i]) {
                i += 1;
            }
            TokenKind::Ident
        } else if b.is_ascii_digit() || (b == b'.' && i + 1 < n && src[i + 1].is_ascii_digit()) {
            let (end, float) = lex_number(src, i);
            i = end;
            if float {
                TokenKind::Float
            } else {
                TokenKind::Int
            }
        } else if src[i..].starts_with(b"\"\"\"") {
            i += 3;
            loop {
                if i >= n {
                    return Err(LexError { offset: start, message: "unterminated text block".into() });
                }
                if src[i] == b'\\' {
                    i += 2;
                    continue;
                }
                if src[i..].starts_with(b"\"\"\"") {
                    i += 3;
                    break;
                }
                i += 1;
            }
            TokenKind::TextBlock
        } else if b == b'"' || b == b'\'' {
            i = lex_quoted(src, i, b)?;
            if b == b'"' {
                TokenKind::Str
            } else {
                TokenKind::Char
            }
        } else {
            let rest = &src[i..];
            match PUNCT.iter().find(|p| rest.starts_with(p.as_bytes())) {
                Some(p) => i += p.len(),
                None => return Err(LexError { offset: i, message: format!("unexpected byte 0x{b:02x}") }),
            }
            TokenKind::Punct
        };
        out.tokens.push(Token { kind, span: Span::new(start, i) });
    }
    Ok(out)
}

fn lex_quoted(src: &[u8], start: usize, quote: u8) -> Result<usize, LexError> {
    let mut i = start + 1;
    loop {
        match src.get(i) {
            None | Some(b'\n') => return Err(LexError { offset: start, message: "unterminated literal".into() }),
            Some(b'\\') => i += 2,
            Some(&c) if c == quote => return Ok(i + 1),
            Some(_) => i += 1,
        }
    }
}

fn lex_number(src: &[u8], mut i: usize) -> (usize, bool) {
    let n = src.len();
    let mut float = false;
    if src[i] == b'0' && i + 1 < n && matches!(src[i + 1], b'x' | b'X' | b'b' | b'B') {
        let hex = matches!(src[i + 1], b'x' | b'X');
        i += 2;
        while i < n && (src[i].is_ascii_hexdigit() || src[i] == b'_') {
            i += 1;
        }
        if hex && i < n && src[i] == b'.' {
            float = true;
            i += 1;
            while i < n && (src[i].is_ascii_hexdigit() || src[i] == b'_') {
                i += 1;
            }
        }
        if hex && i < n && matches!(src[i], b'p' | b'P') {
            float = true;
            i += 1;
            if i < n && matches!(src[i], b'+' | b'-') {
                i += 1;
            }
            while i < n && src[i].is_ascii_digit() {
                i += 1;
            }
        }
    } else {
        while i < n && (src[i].is_ascii_digit() || src[i] == b'_') {
            i += 1;
        }
        if i + 1 < n && src[i] == b'.' && src[i + 1].is_ascii_digit() {
            float = true;
            i += 1;
            while i < n && (src[i].is_ascii_digit() || src[i] == b'_') {
                i += 1;
            }
        } else if i < n && src[i] == b'.' && !(i + 1 < n && (is_ident_start(src[i + 1]) || src[i + 1] == b'.')) {
            // `1.` is a double literal; `1.foo` and `1..` are not
            float = true;
            i += 1;
        }
        if i < n && matches!(src[i], b'e' | b'E') {
            let mut j = i + 1;
            if j < n && matches!(src[j], b'+' | b'-') {
                j += 1;
            }
            if j < n && src[j].is_ascii_digit() {
                float = true;
                i = j;
                while i < n && (src[i].is_ascii_digit() || src[i] == b'_') {
                    i += 1;
                }
            }
        }
    }
    if i < n && matches!(src[i], b'f' | b'F' | b'd' | b'D') {
        float = true;
        i += 1;
    } else if i < n && matches!(src[i], b'l' | b'L') {
        i += 1;
    }
    (i, float)
}

/// Decodes the body of a string literal token (quotes stripped, escapes
/// resolved). Invalid escapes are kept verbatim.
pub fn decode_string(raw: &[u8]) -> String {
    let body = if raw.len() >= 2 { &raw[1..raw.len() - 1] } else { raw };
    let text = String::from_utf8_lossy(body);
    let mut out = String::with_capacity(text.len());
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        if c != '\\' {
            out.push(c);
            continue;
        }
        match chars.next() {
            Some('n') => out.push('\n'),
            Some('t') => out.push('\t'),
            Some('r') => out.push('\r'),
            Some('b') => out.push('\u{8}'),
            Some('f') => out.push('\u{c}'),
            Some('s') => out.push(' '),
            Some('0') => out.push('\0'),
            Some(other @ ('"' | '\'' | '\\')) => out.push(other),
            Some('u') => {
                while chars.peek() == Some(&'u') {
                    chars.next();
                }
                let hex: String = chars.by_ref().take(4).collect();
                match u32::from_str_radix(&hex, 16).ok().and_then(char::from_u32) {
                    Some(ch) => out.push(ch),
                    None => {
                        out.push_str("\\u");
                        out.push_str(&hex);
                    }
                }
            }
            Some(other) => {
                out.push('\\');
                out.push(other);
            }
            None => out.push('\\'),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(src: &str) -> Vec<&str> {
        lex(src.as_bytes()).unwrap().tokens.iter().map(|t| &src[t.span.start..t.span.end]).collect()
    }

    #[test]
    fn comments_and_strings_are_opaque() {
        let src = "a(/* b( */ \"c(\", '(') // d(\n e";
        assert_eq!(texts(src), vec!["a", "(", "\"c(\"", ",", "'('", ")", "e"]);
        let lexed = lex(src.as_bytes()).unwrap();
        assert_eq!(lexed.comments.len(), 2);
    }

    #[test]
    fn longest_punctuation_wins() {
        assert_eq!(texts("x >>>= 1; a->b; A::b"), vec!["x", ">>>=", "1", ";", "a", "->", "b", ";", "A", "::", "b"]);
    }

    #[test]
    fn numbers() {
        let src = "0x1F 1_000L 3.5f .5 1e10 2. 07";
        let kinds: Vec<_> = lex(src.as_bytes()).unwrap().tokens.iter().map(|t| t.kind).collect();
        assert_eq!(texts(src), vec!["0x1F", "1_000L", "3.5f", ".5", "1e10", "2.", "07"]);
        assert_eq!(
            kinds,
            vec![
                TokenKind::Int,
                TokenKind::Int,
                TokenKind::Float,
                TokenKind::Float,
                TokenKind::Float,
                TokenKind::Float,
                TokenKind::Int
            ]
        );
    }

    #[test]
    fn escaped_quotes_and_text_blocks() {
        assert_eq!(texts(r#"s = "a\"b";"#), vec!["s", "=", r#""a\"b""#, ";"]);
        let tb = "x = \"\"\"\n  hi \"there\"\n\"\"\";";
        assert_eq!(texts(tb)[2], "\"\"\"\n  hi \"there\"\n\"\"\"");
    }

    #[test]
    fn non_utf8_bytes_are_identifier_parts() {
        let src = b"int caf\xe9 = 1;";
        assert_eq!(lex(src).unwrap().tokens.len(), 5);
    }

    #[test]
    fn unterminated_literals_fail() {
        assert!(lex(b"\"abc").is_err());
        assert!(lex(b"/* abc").is_err());
        assert!(lex(b"'a\n'").is_err());
    }

    #[test]
    fn decode() {
        assert_eq!(decode_string(br#""a\nb\"cA""#), "a\nb\"cA");
    }
}
