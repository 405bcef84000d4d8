use std::collections::HashMap;

use malachite_nz::integer::Integer;

use super::core::{CoreDag, Node, NodeId};
use super::NearEdgeExpr;
use crate::error::{Error, Result};
use crate::geom::{flip, is_chain, PointSet};
use crate::oracle::{brute_joint_poly, upper_triangulation_poly};
use crate::poly::{integer_value, BasisTag, JointPoly, TaggedPoly};
use crate::transform::{apply_m, convert_joint, lift1, lift2, vee, Transform};

/// Evaluates expressions to `a^{yu}`, caching every core node. One
/// evaluator per thread; nothing is shared.
#[derive(Default)]
pub struct Evaluator {
    dag: CoreDag,
    memo: HashMap<NodeId, JointPoly>,
}

impl Evaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dag(&self) -> &CoreDag {
        &self.dag
    }

    /// `a^{yu}` of `expr`.
    pub fn joint_yu(&mut self, expr: &NearEdgeExpr) -> Result<JointPoly> {
        let root = self.dag.add(expr);
        self.node_yu(root)
    }

    /// `a^{yu}` of a core node; children are evaluated first, in id order.
    pub fn node_yu(&mut self, root: NodeId) -> Result<JointPoly> {
        for id in 0..=root {
            if self.memo.contains_key(&id) {
                continue;
            }
            let p = match self.dag.node(id) {
                Node::E => JointPoly::from_ints(BasisTag::Y, BasisTag::U, &[&[], &[0, 1]])?,
                Node::Leaf(i) => brute_joint_poly(self.dag.leaf(i))?,
                Node::Flip(a) => self.memo[&a].transpose()?,
                Node::Vee(a, b) => {
                    let pa = lift1(Transform::M, &self.memo[&a])?;
                    let pb = lift1(Transform::M, &self.memo[&b])?;
                    lift1(Transform::T, &pa.mul(&pb)?)?
                }
                Node::Wedge(a, b) => {
                    let pa = lift2(Transform::M, &self.memo[&a])?;
                    let pb = lift2(Transform::M, &self.memo[&b])?;
                    lift2(Transform::T, &pa.mul(&pb)?)?
                }
            };
            self.memo.insert(id, p);
        }
        Ok(self.memo[&root].clone())
    }

    /// The joint polynomial in the requested pair of variables.
    pub fn joint_poly(&mut self, expr: &NearEdgeExpr, upper: BasisTag, lower: BasisTag) -> Result<JointPoly> {
        convert_joint(&self.joint_yu(expr)?, upper, lower)
    }
}

/// The joint polynomial of `expr` in `(upper, lower)`.
pub fn joint_poly(expr: &NearEdgeExpr, upper: BasisTag, lower: BasisTag) -> Result<JointPoly> {
    Evaluator::new().joint_poly(expr, upper, lower)
}

/// `t`, `m = M(t)`, `t*` and `m* = M(t*)` of a chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainPolys {
    pub t: TaggedPoly,
    pub m: TaggedPoly,
    pub t_star: TaggedPoly,
    pub m_star: TaggedPoly,
}

impl ChainPolys {
    /// `t(y) t*(u)`, which equals `a^{yu}` for a chain.
    pub fn joint(&self) -> Result<JointPoly> {
        JointPoly::outer(&self.t, &self.t_star)
    }
}

/// `(t, t*)` by the univariate rules, independent of the joint evaluation.
fn chain_pair(dag: &CoreDag, root: NodeId) -> Result<(TaggedPoly, TaggedPoly)> {
    let mut memo: Vec<Option<(TaggedPoly, TaggedPoly)>> = vec![None; dag.len()];
    for id in 0..=root {
        let get = |k: NodeId| memo[k].clone().expect("children precede parents");
        let pair = match dag.node(id) {
            Node::E => (TaggedPoly::var(BasisTag::Y), TaggedPoly::var(BasisTag::U)),
            Node::Leaf(i) => leaf_chain(dag.leaf(i))?,
            Node::Flip(a) => {
                let (t, s) = get(a);
                (s.retag(BasisTag::Y), t.retag(BasisTag::U))
            }
            Node::Vee(a, b) => {
                let ((ta, sa), (tb, sb)) = (get(a), get(b));
                (vee(&ta, &tb)?, sa.mul(&sb)?)
            }
            Node::Wedge(a, b) => {
                let ((ta, sa), (tb, sb)) = (get(a), get(b));
                (ta.mul(&tb)?, vee(&sa, &sb)?)
            }
        };
        memo[id] = Some(pair);
    }
    Ok(memo[root].take().expect("root evaluated"))
}

fn leaf_chain(points: &PointSet) -> Result<(TaggedPoly, TaggedPoly)> {
    if !is_chain(points)? {
        return Err(Error::NotAChain);
    }
    let t = upper_triangulation_poly(points)?;
    let s = upper_triangulation_poly(&flip(points))?.retag(BasisTag::U);
    Ok((t, s))
}

/// Chain polynomials; errors with [`Error::NotAChain`] if a leaf is not a
/// chain. Sums and flips of chains are chains.
pub fn chain_polys(expr: &NearEdgeExpr) -> Result<ChainPolys> {
    let mut dag = CoreDag::new();
    let root = dag.add(expr);
    let (t, t_star) = chain_pair(&dag, root)?;
    Ok(ChainPolys {
        m: apply_m(&t)?,
        m_star: apply_m(&t_star)?,
        t,
        t_star,
    })
}

fn to_integer(c: &malachite_q::Rational) -> Result<Integer> {
    integer_value(c).ok_or_else(|| Error::domain(format!("non-integer count {c}")))
}

/// Upper and lower hull segment counts, read off as the smallest exponents
/// of `a^{yu}`.
pub fn hull_segments(a_yu: &JointPoly) -> Result<(usize, usize)> {
    a_yu.min_exponents()
        .ok_or_else(|| Error::domain("zero joint polynomial"))
}

/// Triangulations of the realized near-edge: `[y^i u^j] a^{yu}` at the
/// smallest exponents.
pub fn count_triangulations(expr: &NearEdgeExpr) -> Result<Integer> {
    let a = Evaluator::new().joint_yu(expr)?;
    let (i, j) = hull_segments(&a)?;
    to_integer(&a.coeff(i, j))
}

/// Triangulations of a convex polygon with `edges[k]` glued on its `k`-th
/// side, upper side inward: `[y^1 u^j] T^1((1/x) prod a^{xu})`.
pub fn count_glued_polygon(edges: &[NearEdgeExpr]) -> Result<Integer> {
    if edges.len() < 3 {
        return Err(Error::domain("a glued polygon needs at least three edges"));
    }
    let mut ev = Evaluator::new();
    let mut prod = JointPoly::from_ints(BasisTag::X, BasisTag::U, &[&[1]])?;
    for e in edges {
        prod = prod.mul(&ev.joint_poly(e, BasisTag::X, BasisTag::U)?)?;
    }
    let (_, cols) = prod.dims();
    if (0..cols).any(|j| prod.coeff(0, j) != 0u32) {
        return Err(Error::domain("product of edge polynomials is not divisible by x"));
    }
    let (_, j) = hull_segments(&prod)?;
    let shifted: Vec<TaggedPoly> = prod.rows().into_iter().skip(1).collect();
    let divided = JointPoly::from_rows(BasisTag::X, BasisTag::U, &shifted)?;
    let a = lift1(Transform::T, &divided)?;
    to_integer(&a.coeff(1, j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::realize;
    use crate::oracle::count_all_triangulations;

    fn jp(rows: &[&[i64]]) -> JointPoly {
        JointPoly::from_ints(BasisTag::Y, BasisTag::U, rows).unwrap()
    }

    #[test]
    fn small_joint_polys() {
        assert_eq!(
            joint_poly(&NearEdgeExpr::E, BasisTag::Y, BasisTag::U).unwrap(),
            jp(&[&[], &[0, 1]])
        );
        assert_eq!(
            joint_poly(&NearEdgeExpr::Ccvx(2), BasisTag::Y, BasisTag::U).unwrap(),
            jp(&[&[], &[0, 0, 1], &[0, 0, 1]])
        );
        assert_eq!(
            joint_poly(&NearEdgeExpr::Cccv(2), BasisTag::Y, BasisTag::U).unwrap(),
            jp(&[&[], &[], &[0, 1, 1]])
        );
    }

    #[test]
    fn chain_examples() {
        let c4 = chain_polys(&NearEdgeExpr::Ccvx(4)).unwrap();
        assert_eq!(c4.t, TaggedPoly::from_ints(BasisTag::Y, &[0, 5, 5, 3, 1]));
        assert_eq!(c4.m, TaggedPoly::from_ints(BasisTag::X, &[0, 0, 0, 0, 1]));
        let v3 = chain_polys(&NearEdgeExpr::Cccv(3)).unwrap();
        assert_eq!(v3.t, TaggedPoly::from_ints(BasisTag::Y, &[0, 0, 0, 1]));
        let w = NearEdgeExpr::wedge(NearEdgeExpr::Ccvx(2), NearEdgeExpr::Ccvx(2));
        let cw = chain_polys(&w).unwrap();
        assert_eq!(cw.t, TaggedPoly::from_ints(BasisTag::Y, &[0, 0, 1, 2, 1]));
        assert_eq!(cw.joint().unwrap(), Evaluator::new().joint_yu(&w).unwrap());
    }

    #[test]
    fn leaf_chains_use_the_oracle() {
        let pts = realize(&NearEdgeExpr::koch(NearEdgeExpr::E, 2)).unwrap();
        let leaf = NearEdgeExpr::leaf(pts).unwrap();
        let direct = chain_polys(&NearEdgeExpr::koch(NearEdgeExpr::E, 2)).unwrap();
        assert_eq!(chain_polys(&leaf).unwrap(), direct);
        let bad = NearEdgeExpr::leaf(PointSet::from_ints(&[(0, 0), (1, -3), (2, 2), (3, 0)])).unwrap();
        assert!(matches!(chain_polys(&bad), Err(Error::NotAChain)));
        assert!(joint_poly(&bad, BasisTag::X, BasisTag::V).is_ok());
    }

    #[test]
    fn counts() {
        assert_eq!(count_triangulations(&NearEdgeExpr::Ccvx(4)).unwrap(), 5);
        assert_eq!(count_triangulations(&NearEdgeExpr::E).unwrap(), 1);
        let x = NearEdgeExpr::vee(NearEdgeExpr::Cccv(2), NearEdgeExpr::flip(NearEdgeExpr::Ccvx(2)));
        let p = realize(&x).unwrap();
        assert_eq!(
            Integer::from(count_all_triangulations(&p).unwrap()),
            count_triangulations(&x).unwrap()
        );
    }

    #[test]
    fn glued_polygons() {
        let six = vec![NearEdgeExpr::E; 6];
        assert_eq!(count_glued_polygon(&six).unwrap(), 14);
        let three = vec![NearEdgeExpr::Cccv(2); 3];
        assert_eq!(count_glued_polygon(&three).unwrap(), 4);
        let parts = [
            NearEdgeExpr::Ccvx(2),
            NearEdgeExpr::flip(NearEdgeExpr::Cccv(2)),
            NearEdgeExpr::Cccv(3),
        ];
        let mut edges = parts.to_vec();
        edges.push(NearEdgeExpr::E);
        let chain = NearEdgeExpr::vee(NearEdgeExpr::vee(parts[0].clone(), parts[1].clone()), parts[2].clone());
        assert_eq!(
            count_glued_polygon(&edges).unwrap(),
            count_triangulations(&chain).unwrap()
        );
        assert!(count_glued_polygon(&six[..2]).is_err());
    }
}
