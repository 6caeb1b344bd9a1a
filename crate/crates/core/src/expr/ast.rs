use std::fmt;

/// A node of a parsed rational expression.
///
/// Variables are stored as indices into the owning [`ExpressionAST`]'s
/// sorted variable list.
#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Var(usize),
    Literal(f64),
    /// `sqrt(k)` for a positive integer `k`, evaluated lazily.
    SqrtLiteral(u64),
    Neg(Box<Node>),
    Sum(Vec<Node>),
    Product(Vec<Node>),
    Quotient(Box<Node>, Box<Node>),
    /// Integer power with a nonzero exponent; negative exponents are Laurent terms.
    Power(Box<Node>, i32),
}

impl Node {
    pub fn kind(&self) -> NodeKind {
        match self {
            Node::Var(_) => NodeKind::Variable,
            Node::Literal(_) => NodeKind::Literal,
            Node::SqrtLiteral(_) => NodeKind::SqrtLiteral,
            Node::Neg(_) => NodeKind::Negation,
            Node::Sum(_) => NodeKind::Sum,
            Node::Product(_) => NodeKind::Product,
            Node::Quotient(_, _) => NodeKind::Quotient,
            Node::Power(_, _) => NodeKind::IntegerPower,
        }
    }

    pub fn children(&self) -> Vec<&Node> {
        match self {
            Node::Var(_) | Node::Literal(_) | Node::SqrtLiteral(_) => Vec::new(),
            Node::Neg(c) | Node::Power(c, _) => vec![c.as_ref()],
            Node::Sum(cs) | Node::Product(cs) => cs.iter().collect(),
            Node::Quotient(n, d) => vec![n.as_ref(), d.as_ref()],
        }
    }

    /// True when no variable occurs below this node.
    pub fn is_constant(&self) -> bool {
        match self {
            Node::Var(_) => false,
            Node::Literal(_) | Node::SqrtLiteral(_) => true,
            _ => self.children().iter().all(|c| c.is_constant()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Variable,
    Literal,
    SqrtLiteral,
    Negation,
    Sum,
    Product,
    Quotient,
    IntegerPower,
}

/// A parsed multivariable rational function with complex-evaluable coefficients.
///
/// Immutable after construction; share freely across threads.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpressionAST {
    pub(crate) root: Node,
    pub(crate) vars: Vec<String>,
}

impl ExpressionAST {
    pub fn root(&self) -> &Node {
        &self.root
    }

    /// Sorted, de-duplicated variable names; position `i` is the coordinate
    /// that [`Node::Var(i)`](Node::Var) reads.
    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn variable_count(&self) -> usize {
        self.vars.len()
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.vars.binary_search_by(|v| v.as_str().cmp(name)).ok()
    }

    /// Canonical fully parenthesized infix form. Re-parsing the output yields
    /// a structurally identical AST.
    pub fn to_canonical_string(&self) -> String {
        let mut out = String::new();
        self.write_node(&self.root, &mut out);
        out
    }

    fn write_node(&self, node: &Node, out: &mut String) {
        match node {
            Node::Var(i) => out.push_str(&self.vars[*i]),
            Node::Literal(v) => out.push_str(&format!("{v}")),
            Node::SqrtLiteral(k) => out.push_str(&format!("sqrt({k})")),
            Node::Neg(c) => {
                out.push('-');
                self.write_node(c, out);
            }
            Node::Sum(cs) => self.write_joined(cs, " + ", out),
            Node::Product(cs) => self.write_joined(cs, " * ", out),
            Node::Quotient(n, d) => {
                out.push('(');
                self.write_node(n, out);
                out.push_str(" / ");
                self.write_node(d, out);
                out.push(')');
            }
            Node::Power(base, e) => {
                // a negated base must be grouped or it would re-parse as -(b^e)
                if matches!(**base, Node::Neg(_)) {
                    out.push('(');
                    self.write_node(base, out);
                    out.push(')');
                } else {
                    self.write_node(base, out);
                }
                out.push_str(&format!("^{e}"));
            }
        }
    }

    fn write_joined(&self, cs: &[Node], sep: &str, out: &mut String) {
        out.push('(');
        for (i, c) in cs.iter().enumerate() {
            if i > 0 {
                out.push_str(sep);
            }
            self.write_node(c, out);
        }
        out.push(')');
    }
}

impl fmt::Display for ExpressionAST {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}
