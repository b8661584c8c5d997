//! Compressed cycle patterns: `(label^exp, ...)` terms, powers of
//! subsequences, and `#` (drop the last expanded label).

use crate::graph::Label;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("malformed pattern: {0}")]
    Malformed(String),
}

/// One pattern symbol; bound to concrete labels at expansion time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatSym {
    A,
    B,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatItem {
    /// `a^e` or `b^e`; negative exponents expand to the inverse label.
    Term { sym: PatSym, exp: i32 },
    /// `(items)^power` followed by `drops` trailing `#`s, each deleting
    /// the last label of the expansion.
    Group { items: Vec<PatItem>, power: u32, drops: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    items: Vec<PatItem>,
}

impl Pattern {
    pub fn new(items: Vec<PatItem>) -> Pattern {
        Pattern { items }
    }

    /// Parses the compact notation, e.g. `((a,b^2)^3#,a)^3` or
    /// `(a^3, b^-1, a, b^-1, a^4, b^2, a^-2, b, a^2, b, a^3, b, a^-1,
    /// b^-1, a^-1, b^-2)`.
    pub fn parse(text: &str) -> Result<Pattern, PatternError> {
        let mut p = Parser { chars: text.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 };
        let items = p.sequence()?;
        if p.pos != p.chars.len() {
            return Err(PatternError::Malformed(format!(
                "trailing input at position {}",
                p.pos
            )));
        }
        Ok(Pattern { items })
    }

    /// Expands to a flat label sequence with `a`, `b` bound to the given
    /// labels.
    pub fn expand(&self, a: Label, b: Label) -> Result<Vec<Label>, PatternError> {
        let mut out = Vec::new();
        expand_items(&self.items, a, b, &mut out)?;
        Ok(out)
    }
}

fn expand_items(
    items: &[PatItem],
    a: Label,
    b: Label,
    out: &mut Vec<Label>,
) -> Result<(), PatternError> {
    for item in items {
        match item {
            PatItem::Term { sym, exp } => {
                if *exp == 0 {
                    return Err(PatternError::Malformed("zero exponent".to_string()));
                }
                let base = match sym {
                    PatSym::A => a,
                    PatSym::B => b,
                };
                let l = if *exp < 0 { base.inverse() } else { base };
                for _ in 0..exp.unsigned_abs() {
                    out.push(l);
                }
            }
            PatItem::Group { items, power, drops } => {
                if *power == 0 {
                    return Err(PatternError::Malformed("zero power".to_string()));
                }
                let mut once = Vec::new();
                expand_items(items, a, b, &mut once)?;
                if (*drops as usize) > once.len() * *power as usize {
                    return Err(PatternError::Malformed("# drops past the start".to_string()));
                }
                let mut block = Vec::with_capacity(once.len() * *power as usize);
                for _ in 0..*power {
                    block.extend_from_slice(&once);
                }
                block.truncate(block.len() - *drops as usize);
                out.extend_from_slice(&block);
            }
        }
    }
    Ok(())
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expect(&mut self, c: char) -> Result<(), PatternError> {
        if self.bump() == Some(c) {
            Ok(())
        } else {
            Err(PatternError::Malformed(format!("expected '{c}' at position {}", self.pos)))
        }
    }

    fn sequence(&mut self) -> Result<Vec<PatItem>, PatternError> {
        // top level: parenthesized comma-list, or a bare single item
        if self.peek() == Some('(') {
            let item = self.item()?;
            // a lone parenthesized group IS the sequence when nothing follows
            if self.pos == self.chars.len() {
                return Ok(vec![item]);
            }
            let mut items = vec![item];
            while self.peek() == Some(',') {
                self.bump();
                items.push(self.item()?);
            }
            return Ok(items);
        }
        let mut items = vec![self.item()?];
        while self.peek() == Some(',') {
            self.bump();
            items.push(self.item()?);
        }
        Ok(items)
    }

    fn item(&mut self) -> Result<PatItem, PatternError> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let mut items = vec![self.item()?];
                while self.peek() == Some(',') {
                    self.bump();
                    items.push(self.item()?);
                }
                self.expect(')')?;
                let power = if self.peek() == Some('^') {
                    self.bump();
                    let e = self.integer()?;
                    if e <= 0 {
                        return Err(PatternError::Malformed("group power must be positive".into()));
                    }
                    e as u32
                } else {
                    1
                };
                let mut drops = 0u32;
                while self.peek() == Some('#') {
                    self.bump();
                    drops += 1;
                }
                Ok(PatItem::Group { items, power, drops })
            }
            Some('a') | Some('b') => {
                let sym = if self.bump() == Some('a') { PatSym::A } else { PatSym::B };
                let exp = if self.peek() == Some('^') {
                    self.bump();
                    self.integer()?
                } else {
                    1
                };
                if exp == 0 {
                    return Err(PatternError::Malformed("zero exponent".into()));
                }
                Ok(PatItem::Term { sym, exp })
            }
            other => Err(PatternError::Malformed(format!(
                "unexpected {:?} at position {}",
                other, self.pos
            ))),
        }
    }

    fn integer(&mut self) -> Result<i32, PatternError> {
        let neg = if self.peek() == Some('-') {
            self.bump();
            true
        } else {
            false
        };
        let mut digits = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if digits.is_empty() {
            return Err(PatternError::Malformed(format!("expected digits at {}", self.pos)));
        }
        let v: i32 = digits
            .parse()
            .map_err(|_| PatternError::Malformed("integer overflow".to_string()))?;
        Ok(if neg { -v } else { v })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(vals: &[i8]) -> Vec<Label> {
        vals.iter().map(|&v| Label::new(v).unwrap()).collect()
    }

    #[test]
    fn sixteen_term_pattern_expands_to_27() {
        let p =
            Pattern::parse("(a^3, b^-1, a, b^-1, a^4, b^2, a^-2, b, a^2, b, a^3, b, a^-1, b^-1, a^-1, b^-2)")
                .unwrap();
        let out = p.expand(Label::gen(1), Label::gen(2)).unwrap();
        assert_eq!(out.len(), 27);
        assert_eq!(&out[..6], &labels(&[1, 1, 1, -2, 1, -2])[..]);
        assert_eq!(&out[25..], &labels(&[-2, -2])[..]);
    }

    #[test]
    fn nested_power_with_drop() {
        let p = Pattern::parse("((a,b^2)^3#,a)^3").unwrap();
        let out = p.expand(Label::gen(1), Label::gen(2)).unwrap();
        assert_eq!(out.len(), 27);
        // block of nine: (a b b) (a b b) (a b) then a
        let block = labels(&[1, 2, 2, 1, 2, 2, 1, 2, 1]);
        assert_eq!(&out[..9], &block[..]);
        assert_eq!(&out[9..18], &block[..]);
        assert_eq!(&out[18..], &block[..]);
    }

    #[test]
    fn simple_power() {
        let p = Pattern::parse("(a)^3").unwrap();
        assert_eq!(p.expand(Label::gen(1), Label::gen(2)).unwrap(), labels(&[1, 1, 1]));
    }

    #[test]
    fn binding_respects_inverse_labels() {
        let p = Pattern::parse("(a,b)").unwrap();
        let out = p.expand(Label::gen(1), Label::gen_inv(2)).unwrap();
        assert_eq!(out, labels(&[1, -2]));
        // b^-1 with b bound to an inverse label flips back
        let p = Pattern::parse("(b^-1)").unwrap();
        assert_eq!(p.expand(Label::gen(1), Label::gen_inv(2)).unwrap(), labels(&[2]));
    }

    #[test]
    fn malformed_patterns() {
        for bad in ["", "(a", "c^2", "(a,b)^0", "a^0", "(a)##", "(a,b)^2###x"] {
            assert!(Pattern::parse(bad).is_err() || {
                let p = Pattern::parse(bad).unwrap();
                p.expand(Label::gen(1), Label::gen(2)).is_err()
            });
        }
    }
}
