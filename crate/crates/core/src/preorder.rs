//! Source-side pre-ordering of role-annotated constituency trees for
//! SVO-to-SOV translation.
//!
//! At every clause node the children are rearranged into the target role
//! order C_m S_m S V_m O_m O V; prepositions become postpositions ("the hero
//! of the movie" -> "the movie of the hero"). Children without a clause role
//! keep their relative positions.

use crate::error::{Error, Result};

/// Grammatical-role label carried by a tree node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    S,
    Sm,
    V,
    Vm,
    O,
    Om,
    Cm,
    Np,
    Pp,
    P,
    X,
}

impl Role {
    fn from_label(label: &str) -> Option<Role> {
        Some(match label {
            "S" => Role::S,
            "S_m" => Role::Sm,
            "V" => Role::V,
            "V_m" => Role::Vm,
            "O" => Role::O,
            "O_m" => Role::Om,
            "C_m" => Role::Cm,
            "NP" => Role::Np,
            "PP" => Role::Pp,
            "P" => Role::P,
            "X" => Role::X,
            _ => return None,
        })
    }

    pub fn parse(label: &str) -> Result<Role> {
        Role::from_label(label).ok_or_else(|| {
            Error::InvalidArgument(format!("unknown role label {label:?}"))
        })
    }
}

/// Constituency tree node: either an internal node with children or a leaf
/// with a surface token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoleTree {
    pub label: Role,
    pub children: Vec<RoleTree>,
    pub token: Option<String>,
}

impl RoleTree {
    pub fn leaf(label: Role, token: &str) -> RoleTree {
        RoleTree {
            label,
            children: Vec::new(),
            token: Some(token.to_string()),
        }
    }

    pub fn node(label: Role, children: Vec<RoleTree>) -> RoleTree {
        RoleTree {
            label,
            children,
            token: None,
        }
    }

    /// All leaf tokens in tree order.
    pub fn tokens(&self) -> Vec<String> {
        let mut out = Vec::new();
        fn walk(t: &RoleTree, out: &mut Vec<String>) {
            if let Some(tok) = &t.token {
                out.push(tok.clone());
            }
            for c in &t.children {
                walk(c, out);
            }
        }
        walk(self, &mut out);
        out
    }
}

/// Target clause order: a role's index is its emission rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseOrder(pub Vec<Role>);

impl Default for ClauseOrder {
    fn default() -> Self {
        ClauseOrder(vec![
            Role::Cm,
            Role::Sm,
            Role::S,
            Role::Vm,
            Role::Om,
            Role::O,
            Role::V,
        ])
    }
}

impl ClauseOrder {
    /// Parse the config form "C_m,S_m,S,V_m,O_m,O,V".
    pub fn parse(text: &str) -> Result<ClauseOrder> {
        let roles: Result<Vec<Role>> = text.split(',').map(|l| Role::parse(l.trim())).collect();
        let roles = roles?;
        if roles.is_empty() {
            return Err(Error::InvalidArgument("empty clause order".into()));
        }
        Ok(ClauseOrder(roles))
    }

    fn rank(&self, role: Role) -> Option<usize> {
        self.0.iter().position(|&r| r == role)
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        let _ = self.text;
        Error::TreeParse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn atom(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len()
            && !self.chars[self.pos].is_whitespace()
            && self.chars[self.pos] != '('
            && self.chars[self.pos] != ')'
        {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn node(&mut self) -> Result<RoleTree> {
        self.skip_ws();
        if self.chars.get(self.pos) != Some(&'(') {
            return Err(self.err("expected '('"));
        }
        self.pos += 1;
        self.skip_ws();
        let label_pos = self.pos;
        let label_text = self.atom();
        if label_text.is_empty() {
            return Err(self.err("missing node label"));
        }
        if !label_text
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
            || !label_text.chars().next().unwrap().is_ascii_alphabetic()
        {
            self.pos = label_pos;
            return Err(self.err(&format!("unknown label {label_text:?}")));
        }
        // auxiliary labels (ROOT, VP, ...) are transparent: they map to X
        let label = Role::from_label(&label_text).unwrap_or(Role::X);
        enum Item {
            Tree(RoleTree),
            Token(String),
        }
        let mut items = Vec::new();
        loop {
            self.skip_ws();
            match self.chars.get(self.pos) {
                Some(')') => {
                    self.pos += 1;
                    break;
                }
                Some('(') => items.push(Item::Tree(self.node()?)),
                Some(_) => items.push(Item::Token(self.atom())),
                None => return Err(self.err("unbalanced brackets: expected ')'")),
            }
        }
        if items.is_empty() {
            return Err(self.err("empty node"));
        }
        // "(V shot)" is a leaf; several bare tokens become X leaves
        if items.len() == 1 {
            if let Item::Token(tok) = &items[0] {
                return Ok(RoleTree::leaf(label, tok));
            }
        }
        let children = items
            .into_iter()
            .map(|it| match it {
                Item::Tree(t) => t,
                Item::Token(tok) => RoleTree::leaf(Role::X, &tok),
            })
            .collect();
        Ok(RoleTree::node(label, children))
    }
}

/// Parse one bracketed expression "(LABEL child ...)" into a tree. Strict:
/// errors carry the character position.
pub fn read_tree(text: &str) -> Result<RoleTree> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        text,
    };
    let tree = p.node()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("trailing content after tree"));
    }
    Ok(tree)
}

/// Pre-order a tree into the target token sequence using the default clause
/// order.
pub fn reorder(tree: &RoleTree) -> Vec<String> {
    reorder_with(tree, &ClauseOrder::default())
}

/// Pre-order with a custom clause order. Role-labeled children are permuted
/// into order rank within the slots they occupied; other children stay put;
/// P children are emitted last within their node (postposition swap). Every
/// child is reordered recursively.
pub fn reorder_with(tree: &RoleTree, order: &ClauseOrder) -> Vec<String> {
    let mut out = Vec::new();
    emit(tree, order, &mut out);
    out
}

fn emit(tree: &RoleTree, order: &ClauseOrder, out: &mut Vec<String>) {
    if let Some(tok) = &tree.token {
        out.push(tok.clone());
        return;
    }
    let n = tree.children.len();
    // permute role-labeled children into clause order within their slots
    let mut arranged: Vec<&RoleTree> = tree.children.iter().collect();
    let role_slots: Vec<usize> = (0..n)
        .filter(|&i| order.rank(tree.children[i].label).is_some())
        .collect();
    let mut role_children: Vec<&RoleTree> = role_slots
        .iter()
        .map(|&i| &tree.children[i])
        .collect();
    role_children.sort_by_key(|c| order.rank(c.label).unwrap());
    for (&slot, child) in role_slots.iter().zip(role_children) {
        arranged[slot] = child;
    }
    // postposition swap: P constituents follow their complement
    let (others, postpositions): (Vec<&RoleTree>, Vec<&RoleTree>) =
        arranged.iter().partition(|c| c.label != Role::P);
    for child in others.into_iter().chain(postpositions) {
        emit(child, order, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn read_leaf_and_node() {
        let t = read_tree("(V shot)").unwrap();
        assert_eq!(t, RoleTree::leaf(Role::V, "shot"));
        let t = read_tree("(S (X the) (X hero))").unwrap();
        assert_eq!(t.label, Role::S);
        assert_eq!(t.children.len(), 2);
    }

    #[test]
    fn bare_token_sequences_become_x_leaves() {
        let t = read_tree("(S the hero)").unwrap();
        assert_eq!(t.label, Role::S);
        assert_eq!(t.tokens(), vec!["the", "hero"]);
    }

    #[test]
    fn parse_errors_with_position() {
        match read_tree("(S").unwrap_err() {
            Error::TreeParse { pos, .. } => assert_eq!(pos, 2),
            e => panic!("unexpected {e}"),
        }
        assert!(read_tree("()").is_err());
        assert!(read_tree("(S x))").is_err());
        assert!(read_tree("(? x)").is_err());
    }

    #[test]
    fn worked_example() {
        let t = read_tree(
            "(ROOT (S the hero) (S_m (PP (P of) (NP the movie))) (V shot) (O the scene) (V_m quickly))",
        )
        .unwrap();
        assert_eq!(
            reorder(&t).join(" "),
            "the movie of the hero quickly the scene shot"
        );
    }

    #[test]
    fn single_constituent_unchanged() {
        let t = read_tree("(V ran)").unwrap();
        assert_eq!(reorder(&t), vec!["ran"]);
    }

    #[test]
    fn clause_modifier_comes_first() {
        let t = read_tree(
            "(ROOT (S he) (V said) (C_m (X when) (X asked)) (O something))",
        )
        .unwrap();
        assert_eq!(reorder(&t).join(" "), "when asked he something said");
    }

    #[test]
    fn x_only_children_keep_order() {
        let t = read_tree("(ROOT (X a) (X b) (X c))").unwrap();
        assert_eq!(reorder(&t), vec!["a", "b", "c"]);
    }

    #[test]
    fn reorder_is_idempotent_on_ordered_trees() {
        let t = read_tree(
            "(ROOT (S_m (NP the movie) (P of)) (S the hero) (V_m quickly) (O the scene) (V shot))",
        )
        .unwrap();
        let once = reorder(&t).join(" ");
        assert_eq!(once, "the movie of the hero quickly the scene shot");
    }

    #[test]
    fn reorder_is_a_permutation() {
        let t = read_tree(
            "(ROOT (S the hero) (S_m (PP (P of) (NP the movie))) (V shot) (O the scene) (V_m quickly))",
        )
        .unwrap();
        let mut input = t.tokens();
        let mut output = reorder(&t);
        input.sort();
        output.sort();
        assert_eq!(input, output);
    }

    #[test]
    fn custom_clause_order() {
        let order = ClauseOrder::parse("V,S,O").unwrap();
        let t = read_tree("(ROOT (S he) (O it) (V saw))").unwrap();
        assert_eq!(reorder_with(&t, &order).join(" "), "saw he it");
        assert!(ClauseOrder::parse("V,,S").is_err());
    }
}
