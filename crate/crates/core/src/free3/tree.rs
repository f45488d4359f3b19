use std::fmt;

/// Leaf variable: `0 = x`, `1 = y`, `2 = z`.
pub type Var = u8;

pub const VAR_NAMES: [char; 3] = ['x', 'y', 'z'];

/// A planar binary tree whose internal nodes carry generator indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tree {
    Var(Var),
    App(usize, Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn app(gen: usize, left: Tree, right: Tree) -> Tree {
        Tree::App(gen, Box::new(left), Box::new(right))
    }

    pub fn x() -> Tree {
        Tree::Var(0)
    }

    pub fn y() -> Tree {
        Tree::Var(1)
    }

    pub fn z() -> Tree {
        Tree::Var(2)
    }

    /// Number of leaves.
    pub fn arity(&self) -> usize {
        match self {
            Tree::Var(_) => 1,
            Tree::App(_, l, r) => l.arity() + r.arity(),
        }
    }

    /// Number of generator applications.
    pub fn nodes(&self) -> usize {
        match self {
            Tree::Var(_) => 0,
            Tree::App(_, l, r) => 1 + l.nodes() + r.nodes(),
        }
    }

    pub fn leaves(&self) -> Vec<Var> {
        match self {
            Tree::Var(v) => vec![*v],
            Tree::App(_, l, r) => {
                let mut out = l.leaves();
                out.extend(r.leaves());
                out
            }
        }
    }

    /// Renames leaves, `x_i -> x_{perm[i]}`.
    pub fn relabel(&self, perm: &[Var; 3]) -> Tree {
        match self {
            Tree::Var(v) => Tree::Var(perm[*v as usize]),
            Tree::App(g, l, r) => Tree::app(*g, l.relabel(perm), r.relabel(perm)),
        }
    }

    /// Reverses the arguments at every node.
    pub fn mirror(&self) -> Tree {
        match self {
            Tree::Var(v) => Tree::Var(*v),
            Tree::App(g, l, r) => Tree::app(*g, r.mirror(), l.mirror()),
        }
    }

    /// Prefix rendering in the relation grammar, e.g. `m(m(x,y),z)`.
    pub fn render(&self, names: &[String]) -> String {
        match self {
            Tree::Var(v) => VAR_NAMES[*v as usize].to_string(),
            Tree::App(g, l, r) => format!("{}({},{})", names[*g], l.render(names), r.render(names)),
        }
    }

    /// Infix rendering with a single operation symbol, e.g. `(x.y).z`.
    pub fn render_infix(&self, op: &str) -> String {
        match self {
            Tree::Var(v) => VAR_NAMES[*v as usize].to_string(),
            Tree::App(_, l, r) => {
                let wrap = |t: &Tree| match t {
                    Tree::Var(_) => t.render_infix(op),
                    _ => format!("({})", t.render_infix(op)),
                };
                format!("{}{op}{}", wrap(l), wrap(r))
            }
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Var(v) => write!(f, "{}", VAR_NAMES[*v as usize]),
            Tree::App(g, l, r) => write!(f, "g{g}({l},{r})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mirror_reverses_every_node() {
        let t = Tree::app(0, Tree::app(0, Tree::x(), Tree::y()), Tree::z());
        assert_eq!(t.mirror().render_infix("."), "z.(y.x)");
        assert_eq!(t.mirror().mirror(), t);
    }

    #[test]
    fn relabel_and_render() {
        let t = Tree::app(0, Tree::x(), Tree::app(1, Tree::y(), Tree::z()));
        let names = vec!["m".to_string(), "c".to_string()];
        assert_eq!(t.relabel(&[1, 0, 2]).render(&names), "m(y,c(x,z))");
        assert_eq!(t.arity(), 3);
        assert_eq!(t.nodes(), 2);
    }
}
