//! Recursive-descent parser.
//!
//! ```text
//! formula := disj
//! disj    := conj ("|" conj)*
//! conj    := neg ("&" neg)*
//! neg     := "~" neg | atom
//! atom    := letter | "T" | "F" | "(" formula ")"
//! ```
//!
//! `⊤ ⊥ ¬ ∧ ∨` are accepted as aliases of `T F ~ & |`.

use std::fmt;

use thiserror::Error;

use super::Formula;

/// Syntax error at a character offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Top,
    Bot,
    Not,
    And,
    Or,
    LParen,
    RParen,
    Letter(String),
    End,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Top => f.write_str("`T`"),
            Token::Bot => f.write_str("`F`"),
            Token::Not => f.write_str("`~`"),
            Token::And => f.write_str("`&`"),
            Token::Or => f.write_str("`|`"),
            Token::LParen => f.write_str("`(`"),
            Token::RParen => f.write_str("`)`"),
            Token::Letter(p) => write!(f, "letter `{p}`"),
            Token::End => f.write_str("end of input"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '~' | '¬' => Token::Not,
            '&' | '∧' => Token::And,
            '|' | '∨' => Token::Or,
            '(' => Token::LParen,
            ')' => Token::RParen,
            '⊤' => Token::Top,
            '⊥' => Token::Bot,
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                let tok = match word.as_str() {
                    "T" => Token::Top,
                    "F" => Token::Bot,
                    _ if c.is_ascii_lowercase() => Token::Letter(word),
                    _ if c == 'T' || c == 'F' => {
                        return Err(ParseError {
                            pos: start,
                            message: format!("`{word}` clashes with the reserved constant `{c}`"),
                        })
                    }
                    _ => {
                        return Err(ParseError {
                            pos: start,
                            message: format!("letter `{word}` must start with a lowercase letter"),
                        })
                    }
                };
                out.push((start, tok));
                continue;
            }
            other => {
                return Err(ParseError {
                    pos: i,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((i, tok));
        i += 1;
    }
    out.push((chars.len(), Token::End));
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.at].1
    }

    fn pos(&self) -> usize {
        self.tokens[self.at].0
    }

    fn bump(&mut self) -> Token {
        let tok = self.tokens[self.at].1.clone();
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        tok
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError {
            pos: self.pos(),
            message: format!("expected {expected}, found {}", self.peek()),
        }
    }

    fn disj(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conj()?;
        while *self.peek() == Token::Or {
            self.bump();
            lhs = Formula::or(lhs, self.conj()?);
        }
        Ok(lhs)
    }

    fn conj(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.neg()?;
        while *self.peek() == Token::And {
            self.bump();
            lhs = Formula::and(lhs, self.neg()?);
        }
        Ok(lhs)
    }

    fn neg(&mut self) -> Result<Formula, ParseError> {
        if *self.peek() == Token::Not {
            self.bump();
            return Ok(Formula::neg(self.neg()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Token::Top => {
                self.bump();
                Ok(Formula::Top)
            }
            Token::Bot => {
                self.bump();
                Ok(Formula::Bot)
            }
            Token::Letter(p) => {
                self.bump();
                Ok(Formula::Letter(p))
            }
            Token::LParen => {
                self.bump();
                let inner = self.disj()?;
                if *self.peek() != Token::RParen {
                    return Err(self.error("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error("a letter, constant, `~` or `(`")),
        }
    }
}

pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        at: 0,
    };
    let f = parser.disj()?;
    if *parser.peek() != Token::End {
        return Err(parser.error("an operator or end of input"));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Formula {
        Formula::letter(s)
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(parse("p & (q | r)").unwrap(), Formula::and(p("p"), Formula::or(p("q"), p("r"))));
        assert_eq!(parse("~~p").unwrap(), Formula::neg(Formula::neg(p("p"))));
        assert_eq!(parse("p & q | r").unwrap(), Formula::or(Formula::and(p("p"), p("q")), p("r")));
        assert_eq!(
            parse("p | q | r").unwrap(),
            Formula::or(Formula::or(p("p"), p("q")), p("r"))
        );
    }

    #[test]
    fn unicode_aliases() {
        assert_eq!(parse("¬p ∧ ⊤ ∨ ⊥").unwrap(), parse("~p & T | F").unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse("p &").unwrap_err();
        assert_eq!(e.pos, 3);
        let e = parse("(p | q").unwrap_err();
        assert_eq!(e.pos, 6);
        assert_eq!(parse("p q").unwrap_err().pos, 2);
        assert_eq!(parse("p $ q").unwrap_err().pos, 2);
        assert!(parse("").is_err());
    }

    #[test]
    fn reserved_names() {
        assert!(parse("Tx").unwrap_err().message.contains("reserved"));
        assert!(parse("F1 & p").unwrap_err().message.contains("reserved"));
        assert!(parse("Q").unwrap_err().message.contains("lowercase"));
        assert_eq!(parse("p1_x").unwrap(), p("p1_x"));
    }
}
