//! Partial semantic trees.
//!
//! Nodes live in an arena owned by the tree and are addressed by [`NodeId`].
//! Nodes are only ever appended, so ids stay valid as a tree grows. Each node
//! has at most an argument daughter and a functor daughter, plus an optional
//! LINK edge to the root of an adjoined tree.

use std::fmt::Write as _;

use crate::tensor::{contract, mu, Tensor, TensorError};
use crate::types::{DSType, TypeSpaceMap};

pub type NodeId = usize;

#[derive(Debug, Clone, PartialEq)]
pub struct DSNode {
    pub id: NodeId,
    pub ds_type: DSType,
    /// `?Ty(..)`: the node still has to be developed.
    pub requirement: bool,
    pub formula: Option<Tensor>,
    /// Symbolic rendering of the formula, e.g. `T^mary T^likes T^john`.
    pub term: Option<String>,
    pub argument: Option<NodeId>,
    pub functor: Option<NodeId>,
    pub mother: Option<NodeId>,
    /// Root of a tree LINKed from this node.
    pub link: Option<NodeId>,
    /// For a LINKed root, the node it hangs from.
    pub link_host: Option<NodeId>,
}

impl DSNode {
    fn new(id: NodeId, ds_type: DSType) -> DSNode {
        DSNode {
            id,
            ds_type,
            requirement: true,
            formula: None,
            term: None,
            argument: None,
            functor: None,
            mother: None,
            link: None,
            link_host: None,
        }
    }

    pub fn is_complete(&self) -> bool {
        !self.requirement
    }

    pub fn has_children(&self) -> bool {
        self.argument.is_some() || self.functor.is_some()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DSTree {
    nodes: Vec<DSNode>,
    root: NodeId,
    pointer: NodeId,
    /// Node decorated by the most recent lexical action.
    last_decorated: Option<NodeId>,
}

impl DSTree {
    /// One-node tree `?Ty(t)` with the pointer at the root.
    pub fn axiom() -> DSTree {
        DSTree {
            nodes: vec![DSNode::new(0, DSType::T)],
            root: 0,
            pointer: 0,
            last_decorated: None,
        }
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn pointer(&self) -> NodeId {
        self.pointer
    }

    pub fn node(&self, id: NodeId) -> &DSNode {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[DSNode] {
        &self.nodes
    }

    pub fn pointed(&self) -> &DSNode {
        &self.nodes[self.pointer]
    }

    pub fn root_node(&self) -> &DSNode {
        &self.nodes[self.root]
    }

    pub fn last_decorated(&self) -> Option<NodeId> {
        self.last_decorated
    }

    pub fn root_formula(&self) -> Option<&Tensor> {
        self.nodes[self.root].formula.as_ref()
    }

    /// No outstanding requirements anywhere and a propositional root formula.
    pub fn is_complete(&self) -> bool {
        let root = self.root_node();
        self.nodes.iter().all(DSNode::is_complete)
            && root.ds_type == DSType::T
            && root.formula.is_some()
    }

    pub(crate) fn set_pointer(&mut self, id: NodeId) {
        debug_assert!(id < self.nodes.len());
        self.pointer = id;
    }

    pub(crate) fn add_node(&mut self, ds_type: DSType) -> NodeId {
        let id = self.nodes.len();
        self.nodes.push(DSNode::new(id, ds_type));
        id
    }

    pub(crate) fn add_argument(&mut self, mother: NodeId, ds_type: DSType) -> NodeId {
        let id = self.add_node(ds_type);
        self.nodes[id].mother = Some(mother);
        self.nodes[mother].argument = Some(id);
        id
    }

    pub(crate) fn add_functor(&mut self, mother: NodeId, ds_type: DSType) -> NodeId {
        let id = self.add_node(ds_type);
        self.nodes[id].mother = Some(mother);
        self.nodes[mother].functor = Some(id);
        id
    }

    pub(crate) fn add_link(&mut self, host: NodeId) -> NodeId {
        let id = self.add_node(DSType::T);
        self.nodes[id].link_host = Some(host);
        self.nodes[host].link = Some(id);
        id
    }

    pub(crate) fn decorate(&mut self, id: NodeId, formula: Tensor, term: String) {
        let n = &mut self.nodes[id];
        n.formula = Some(formula);
        n.term = Some(term);
        n.requirement = false;
        self.last_decorated = Some(id);
    }

    /// Nearest propositional node above `id` (or `id` itself), following
    /// mother edges only.
    pub fn enclosing_proposition(&self, mut id: NodeId) -> NodeId {
        loop {
            if self.nodes[id].ds_type == DSType::T {
                return id;
            }
            match self.nodes[id].mother {
                Some(m) => id = m,
                None => return id,
            }
        }
    }

    /// Roots of trees LINKed from nodes in the daughter-subtree of `id`, in
    /// pre-order (argument before functor). Does not descend into embedded
    /// propositional daughters.
    pub fn links_under(&self, id: NodeId) -> Vec<NodeId> {
        let mut out = Vec::new();
        let mut stack = vec![id];
        while let Some(n) = stack.pop() {
            let node = &self.nodes[n];
            if let Some(l) = node.link {
                out.push(l);
            }
            // embedded propositions fold their own links
            for d in [node.functor, node.argument].into_iter().flatten() {
                if self.nodes[d].ds_type != DSType::T {
                    stack.push(d);
                }
            }
        }
        out
    }

    /// Decorates `id` from its two complete daughters: the functor formula is
    /// contracted with the argument formula, and at propositional nodes every
    /// completed LINKed clause below is folded in with `μ`.
    pub(crate) fn eliminate(&mut self, id: NodeId, map: &TypeSpaceMap) -> Result<(), TensorError> {
        let node = &self.nodes[id];
        let (a, f) = (
            node.argument.expect("elimination needs an argument"),
            node.functor.expect("elimination needs a functor"),
        );
        let (arg, fun) = (&self.nodes[a], &self.nodes[f]);
        let pairs = map
            .application_pairs(&fun.ds_type)
            .expect("functor daughters have function types");
        let mut formula = contract(
            fun.formula.as_ref().expect("complete functor"),
            arg.formula.as_ref().expect("complete argument"),
            &pairs,
        )?;
        let (ta, tf) = (
            arg.term.clone().unwrap_or_default(),
            fun.term.clone().unwrap_or_default(),
        );
        let mut term = if fun.ds_type.result() == Some(&DSType::T) {
            format!("{ta} {tf}")
        } else {
            format!("{tf} {ta}")
        };
        if node.ds_type == DSType::T {
            for l in self.links_under(id) {
                let linked = &self.nodes[l];
                if let (false, Some(lf)) = (linked.requirement, linked.formula.as_ref()) {
                    formula = mu(lf, &formula)?;
                    term = format!("μ({}, {term})", linked.term.as_deref().unwrap_or(""));
                }
            }
        }
        let n = &mut self.nodes[id];
        n.formula = Some(formula);
        n.term = Some(term);
        n.requirement = false;
        Ok(())
    }

    /// Recomputes the formula of `id` from the leaf decorations alone,
    /// ignoring any formula stored on inner nodes. `None` if some leaf below
    /// is still undecorated.
    pub fn recompute(&self, id: NodeId, map: &TypeSpaceMap) -> Result<Option<Tensor>, TensorError> {
        let node = &self.nodes[id];
        let mut value = match (node.argument, node.functor) {
            (None, None) => return Ok(node.formula.clone()),
            (Some(a), Some(f)) => {
                let (Some(av), Some(fv)) = (self.recompute(a, map)?, self.recompute(f, map)?)
                else {
                    return Ok(None);
                };
                let pairs = map
                    .application_pairs(&self.nodes[f].ds_type)
                    .expect("functor daughters have function types");
                contract(&fv, &av, &pairs)?
            }
            _ => return Ok(None),
        };
        if node.ds_type == DSType::T {
            for l in self.links_under(id) {
                if let Some(lv) = self.recompute(l, map)? {
                    value = mu(&lv, &value)?;
                }
            }
        }
        Ok(Some(value))
    }

    /// Deterministic indented rendering: argument daughter before functor
    /// daughter, LINKed trees indented under their host.
    pub fn render(&self, map: &TypeSpaceMap) -> String {
        let mut out = String::new();
        self.render_node(self.root, 0, "", map, &mut out);
        out
    }

    /// One-line decoration of a node, e.g. `?Ty(⟨e,t⟩) : ?W ⊗ S, ◊`.
    pub fn label(&self, id: NodeId, map: &TypeSpaceMap) -> String {
        let n = &self.nodes[id];
        let q = if n.requirement { "?" } else { "" };
        let mut s = format!("{q}Ty({}) : {q}{}", n.ds_type, map.signature_of(&n.ds_type));
        if let Some(t) = &n.term {
            let _ = write!(s, ", {t}");
        }
        if id == self.pointer {
            s.push_str(", ◊");
        }
        s
    }

    fn render_node(
        &self,
        id: NodeId,
        depth: usize,
        prefix: &str,
        map: &TypeSpaceMap,
        out: &mut String,
    ) {
        let n = &self.nodes[id];
        let _ = writeln!(
            out,
            "{}{}{}",
            "  ".repeat(depth),
            prefix,
            self.label(id, map)
        );
        if let Some(a) = n.argument {
            self.render_node(a, depth + 1, "", map, out);
        }
        if let Some(f) = n.functor {
            self.render_node(f, depth + 1, "", map, out);
        }
        if let Some(l) = n.link {
            self.render_node(l, depth + 1, "LINK ", map, out);
        }
    }
}
