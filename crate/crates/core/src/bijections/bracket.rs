//! Full bracketings of the string `1 2 ... L` and full binary trees with `L`
//! leaves.
//!
//! A bracketing is kept as a token sequence and is only constructed when it
//! parses as `expr := letter | '(' expr expr ')'`, with the letters in order.
//! Adjacent letters are separated by a single space: `(1(2(3 4)))`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rcgraph::RcGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Token {
    Open,
    Close,
    Letter(usize),
}

/// Leaves carry their letter; internal nodes have exactly two children.
/// Serializes as nested arrays, e.g. `[1,[2,[3,4]]]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BinaryTree {
    Leaf(usize),
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bracketing {
    tokens: Vec<Token>,
    letters: usize,
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedBracketing(msg.into())
}

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    pub fn leaves(&self) -> usize {
        match self {
            BinaryTree::Leaf(_) => 1,
            BinaryTree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    /// Leaf labels left to right.
    pub fn labels(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_labels(&mut out);
        out
    }

    fn collect_labels(&self, out: &mut Vec<usize>) {
        match self {
            BinaryTree::Leaf(x) => out.push(*x),
            BinaryTree::Node(l, r) => {
                l.collect_labels(out);
                r.collect_labels(out);
            }
        }
    }

    /// Mirror image, with leaves relabelled so they read `1..=L` again.
    pub fn flip(&self) -> Self {
        let total = self.leaves();
        self.mirror(total)
    }

    fn mirror(&self, total: usize) -> Self {
        match self {
            BinaryTree::Leaf(x) => BinaryTree::Leaf(total + 1 - x),
            BinaryTree::Node(l, r) => BinaryTree::node(r.mirror(total), l.mirror(total)),
        }
    }

    /// Every tree reachable by one left rotation `(A (B C)) -> ((A B) C)`
    /// at some node.
    pub fn left_rotations(&self) -> Vec<BinaryTree> {
        let mut out = Vec::new();
        if let BinaryTree::Node(a, bc) = self {
            if let BinaryTree::Node(b, c) = bc.as_ref() {
                out.push(BinaryTree::node(
                    BinaryTree::node((**a).clone(), (**b).clone()),
                    (**c).clone(),
                ));
            }
            for l in a.left_rotations() {
                out.push(BinaryTree::node(l, (**bc).clone()));
            }
            for r in bc.left_rotations() {
                out.push(BinaryTree::node((**a).clone(), r));
            }
        }
        out
    }

    pub fn to_bracketing(&self) -> Bracketing {
        fn emit(t: &BinaryTree, out: &mut Vec<Token>) {
            match t {
                BinaryTree::Leaf(x) => out.push(Token::Letter(*x)),
                BinaryTree::Node(l, r) => {
                    out.push(Token::Open);
                    emit(l, out);
                    emit(r, out);
                    out.push(Token::Close);
                }
            }
        }
        let mut tokens = Vec::new();
        emit(self, &mut tokens);
        Bracketing::from_tokens(tokens).expect("trees print as full bracketings")
    }

    /// `[first, last]` letter spans of the internal nodes, pre-order.
    pub fn spans(&self) -> Vec<(usize, usize)> {
        fn walk(t: &BinaryTree, out: &mut Vec<(usize, usize)>) -> (usize, usize) {
            match t {
                BinaryTree::Leaf(x) => (*x, *x),
                BinaryTree::Node(l, r) => {
                    let idx = out.len();
                    out.push((0, 0));
                    let (a, _) = walk(l, out);
                    let (_, b) = walk(r, out);
                    out[idx] = (a, b);
                    (a, b)
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }
}

impl Bracketing {
    pub fn from_tokens(tokens: Vec<Token>) -> Result<Self> {
        let tree = parse(&tokens)?;
        let letters = tree.leaves();
        if tree.labels() != (1..=letters).collect::<Vec<_>>() {
            return Err(malformed("letters are not 1..L in order"));
        }
        Ok(Bracketing { tokens, letters })
    }

    /// Places one bracket pair around each span `[first, last]`. The parse of
    /// the resulting string must pair the brackets back into exactly these
    /// spans, i.e. every span is a matching pair.
    pub fn from_spans(letters: usize, spans: &[(usize, usize)]) -> Result<Self> {
        let mut opens: Vec<Vec<usize>> = vec![Vec::new(); letters + 2];
        let mut closes: Vec<Vec<usize>> = vec![Vec::new(); letters + 2];
        for &(a, b) in spans {
            if a == 0 || b > letters || a > b {
                return Err(malformed(format!("span [{a},{b}] out of range")));
            }
            opens[a].push(b);
            closes[b].push(a);
        }
        let mut tokens = Vec::new();
        for x in 1..=letters {
            tokens.extend(opens[x].iter().map(|_| Token::Open));
            tokens.push(Token::Letter(x));
            tokens.extend(closes[x].iter().map(|_| Token::Close));
        }
        let b = Bracketing::from_tokens(tokens)?;
        let mut want: Vec<_> = spans.to_vec();
        let mut got = b.tree().spans();
        want.sort_unstable();
        got.sort_unstable();
        if want != got {
            return Err(malformed("bracket pairs do not match their spans"));
        }
        Ok(b)
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn letters(&self) -> usize {
        self.letters
    }

    /// Number of bracket pairs.
    pub fn pairs(&self) -> usize {
        self.tokens.iter().filter(|t| **t == Token::Open).count()
    }

    pub fn tree(&self) -> BinaryTree {
        parse(&self.tokens).expect("validated on construction")
    }

    /// Reverses the string together with its brackets; letter `x` becomes
    /// `L + 1 - x`.
    pub fn reverse(&self) -> Self {
        let tokens = self
            .tokens
            .iter()
            .rev()
            .map(|t| match t {
                Token::Open => Token::Close,
                Token::Close => Token::Open,
                Token::Letter(x) => Token::Letter(self.letters + 1 - x),
            })
            .collect();
        Bracketing {
            tokens,
            letters: self.letters,
        }
    }
}

fn parse(tokens: &[Token]) -> Result<BinaryTree> {
    fn expr(tokens: &[Token], pos: &mut usize) -> Result<BinaryTree> {
        match tokens.get(*pos) {
            Some(Token::Letter(x)) => {
                *pos += 1;
                Ok(BinaryTree::Leaf(*x))
            }
            Some(Token::Open) => {
                *pos += 1;
                let l = expr(tokens, pos)?;
                let r = expr(tokens, pos)?;
                if tokens.get(*pos) != Some(&Token::Close) {
                    return Err(malformed(format!("expected ')' at token {}", *pos + 1)));
                }
                *pos += 1;
                Ok(BinaryTree::node(l, r))
            }
            Some(Token::Close) => Err(malformed(format!("unexpected ')' at token {}", *pos + 1))),
            None => Err(malformed("unexpected end")),
        }
    }
    let mut pos = 0;
    let t = expr(tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(malformed(format!("trailing tokens after position {pos}")));
    }
    Ok(t)
}

/// Tree of a bracketing.
pub fn tree_of(b: &Bracketing) -> BinaryTree {
    b.tree()
}

/// One bracket pair per non-trivial elbow `(i, j)`: open before letter `j`,
/// close after letter `n + 2 - i`.
pub fn bracketing_of(d: &RcGraph) -> Result<Bracketing> {
    let n = d.zigzag_order()?;
    let spans: Vec<_> = d
        .elbows()
        .into_iter()
        .map(|(i, j)| (j, n + 2 - i))
        .collect();
    Bracketing::from_spans(n + 1, &spans)
}

impl fmt::Display for Bracketing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut prev_letter = false;
        for t in &self.tokens {
            match t {
                Token::Open => {
                    f.write_str("(")?;
                    prev_letter = false;
                }
                Token::Close => {
                    f.write_str(")")?;
                    prev_letter = false;
                }
                Token::Letter(x) => {
                    if prev_letter {
                        f.write_str(" ")?;
                    }
                    write!(f, "{x}")?;
                    prev_letter = true;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for Bracketing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut tokens = Vec::new();
        let mut chars = s.chars().peekable();
        while let Some(&c) = chars.peek() {
            match c {
                '(' => {
                    tokens.push(Token::Open);
                    chars.next();
                }
                ')' => {
                    tokens.push(Token::Close);
                    chars.next();
                }
                c if c.is_whitespace() => {
                    chars.next();
                }
                c if c.is_ascii_digit() => {
                    let mut v = 0usize;
                    while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                        v = v * 10 + d as usize;
                        chars.next();
                    }
                    tokens.push(Token::Letter(v));
                }
                other => return Err(malformed(format!("unexpected character {other:?}"))),
            }
        }
        Bracketing::from_tokens(tokens)
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serde_json::to_string(self).map_err(|_| fmt::Error)?)
    }
}
