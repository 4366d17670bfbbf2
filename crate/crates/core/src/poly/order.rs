use std::cmp::Ordering;
use std::fmt;

/// A monomial order: total, multiplicative, with 1 minimal.
///
/// `Block { front }` is the elimination order that compares the first
/// `front` exponents by degrevlex and breaks ties by degrevlex on the rest;
/// any monomial involving a front variable is larger than any monomial
/// free of them, so a Groebner basis under it intersects cleanly with the
/// back subring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermOrder {
    Lex,
    DegRevLex,
    Block { front: usize },
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            // Reverse-lex tie break: the last differing exponent decides,
            // and the smaller exponent there wins.
            for i in (0..a.len()).rev() {
                match a[i].cmp(&b[i]) {
                    Ordering::Equal => continue,
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        }
        other => other,
    }
}

impl TermOrder {
    /// Compares exponent vectors of equal length.
    pub fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match *self {
            TermOrder::Lex => {
                for i in 0..a.len() {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            TermOrder::DegRevLex => degrevlex(a, b),
            TermOrder::Block { front } => {
                let k = front.min(a.len());
                match degrevlex(&a[..k], &b[..k]) {
                    Ordering::Equal => degrevlex(&a[k..], &b[k..]),
                    other => other,
                }
            }
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::Lex => write!(f, "lex"),
            TermOrder::DegRevLex => write!(f, "degrevlex"),
            TermOrder::Block { front } => write!(f, "block:{front}"),
        }
    }
}
