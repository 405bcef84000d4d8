//! Hash-consed five-node form of an expression.
//!
//! Derived constructors expand here. Repeated sums are built by doubling,
//! so `poly(a, n)` costs `O(log n)` nodes, and `koch(a, s)` costs `O(s)`.

use std::collections::HashMap;
use std::sync::Arc;

use super::NearEdgeExpr;
use crate::geom::PointSet;

pub type NodeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    E,
    /// Index into [`CoreDag::leaf`].
    Leaf(usize),
    Vee(NodeId, NodeId),
    Wedge(NodeId, NodeId),
    Flip(NodeId),
}

/// Shared store of core nodes; children always precede parents.
#[derive(Clone, Debug, Default)]
pub struct CoreDag {
    nodes: Vec<Node>,
    index: HashMap<Node, NodeId>,
    leaves: Vec<Arc<PointSet>>,
    leaf_index: HashMap<Arc<PointSet>, usize>,
}

impl CoreDag {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, id: NodeId) -> Node {
        self.nodes[id]
    }

    pub fn leaf(&self, i: usize) -> &Arc<PointSet> {
        &self.leaves[i]
    }

    fn intern(&mut self, n: Node) -> NodeId {
        if let Some(&id) = self.index.get(&n) {
            return id;
        }
        self.nodes.push(n);
        self.index.insert(n, self.nodes.len() - 1);
        self.nodes.len() - 1
    }

    pub fn e(&mut self) -> NodeId {
        self.intern(Node::E)
    }

    pub fn leaf_node(&mut self, p: &Arc<PointSet>) -> NodeId {
        let i = match self.leaf_index.get(p) {
            Some(&i) => i,
            None => {
                self.leaves.push(p.clone());
                self.leaf_index.insert(p.clone(), self.leaves.len() - 1);
                self.leaves.len() - 1
            }
        };
        self.intern(Node::Leaf(i))
    }

    pub fn vee(&mut self, a: NodeId, b: NodeId) -> NodeId {
        self.intern(Node::Vee(a, b))
    }

    pub fn wedge(&mut self, a: NodeId, b: NodeId) -> NodeId {
        self.intern(Node::Wedge(a, b))
    }

    /// `flip(flip(a)) = a` and `flip(E) = E`.
    pub fn flip(&mut self, a: NodeId) -> NodeId {
        match self.nodes[a] {
            Node::Flip(inner) => inner,
            Node::E => a,
            _ => self.intern(Node::Flip(a)),
        }
    }

    /// `a op a op ... op a`, `n >= 1` copies, by doubling.
    fn power(&mut self, a: NodeId, n: usize, op: fn(&mut Self, NodeId, NodeId) -> NodeId) -> NodeId {
        debug_assert!(n >= 1);
        let mut acc: Option<NodeId> = None;
        let mut sq = a;
        let mut k = n;
        loop {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => sq,
                    Some(x) => op(self, x, sq),
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            sq = op(self, sq, sq);
        }
        acc.expect("n >= 1")
    }

    /// Adds `expr` and returns its root.
    pub fn add(&mut self, expr: &NearEdgeExpr) -> NodeId {
        match expr {
            NearEdgeExpr::E => self.e(),
            NearEdgeExpr::Leaf(p) => self.leaf_node(p),
            NearEdgeExpr::Vee(a, b) => {
                let (a, b) = (self.add(a), self.add(b));
                self.vee(a, b)
            }
            NearEdgeExpr::Wedge(a, b) => {
                let (a, b) = (self.add(a), self.add(b));
                self.wedge(a, b)
            }
            NearEdgeExpr::Flip(a) => {
                let a = self.add(a);
                self.flip(a)
            }
            NearEdgeExpr::Ccvx(i) => {
                let e = self.e();
                self.power(e, *i, Self::vee)
            }
            NearEdgeExpr::Cccv(i) => {
                let e = self.e();
                self.power(e, *i, Self::wedge)
            }
            NearEdgeExpr::Koch(a, s) => {
                let mut k = self.add(a);
                for _ in 0..*s {
                    let f = self.flip(k);
                    k = self.vee(f, f);
                }
                k
            }
            NearEdgeExpr::PolyChain(a, n) => {
                let a = self.add(a);
                let f = self.flip(a);
                self.power(f, *n, Self::vee)
            }
            NearEdgeExpr::TwinChain(a, n) => {
                let a = self.add(a);
                let f = self.flip(a);
                let p = self.power(f, *n, Self::vee);
                let fp = self.flip(p);
                let e = self.e();
                let left = self.vee(fp, e);
                self.vee(left, fp)
            }
        }
    }
}
