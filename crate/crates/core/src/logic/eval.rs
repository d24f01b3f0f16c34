use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{Formula, Var};
use crate::error::{Error, Result};
use crate::poset::Poset;

/// Values of free variables, as element indices.
pub type Assignment = BTreeMap<Var, usize>;

/// Truth of `f` in `p` under `assignment`.
///
/// Quantifiers are evaluated by exhaustive search, with two shortcuts that
/// keep the nested game formulas tractable: a block of `∀` over a conjunction
/// (or `∃` over a disjunction) is split so each part ranges only over its own
/// free variables, and quantified variables not free in the body are skipped.
pub fn evaluate(p: &Poset, f: &Formula, assignment: &Assignment) -> Result<bool> {
    let node = Node::build(f);
    if let Some(&v) = node.free.iter().find(|v| !assignment.contains_key(&Var(**v))) {
        return Err(Error::UnboundVariable(v));
    }
    if let Some(&e) = assignment.values().find(|&&e| e >= p.len()) {
        return Err(Error::IndexOutOfRange(e));
    }
    let mut width = 0;
    f.visit_vars(&mut |v| width = width.max(v.0 as usize + 1));
    for v in assignment.keys() {
        width = width.max(v.0 as usize + 1);
    }
    let mut env = vec![0usize; width];
    for (v, &e) in assignment {
        env[v.0 as usize] = e;
    }
    Ok(Eval { p, env }.node(&node))
}

/// A formula annotated with its free variables (sorted ids).
struct Node<'f> {
    f: &'f Formula,
    free: Vec<u32>,
    kids: Vec<Node<'f>>,
}

impl<'f> Node<'f> {
    fn build(f: &'f Formula) -> Node<'f> {
        let (kids, free) = match f {
            Formula::Leq(a, b) | Formula::Eq(a, b) => {
                let mut free = vec![a.0, b.0];
                free.sort_unstable();
                free.dedup();
                (Vec::new(), free)
            }
            Formula::Not(g) => {
                let k = Node::build(g);
                let free = k.free.clone();
                (vec![k], free)
            }
            Formula::Implies(a, b) => {
                let kids = vec![Node::build(a), Node::build(b)];
                let free = union(&kids);
                (kids, free)
            }
            Formula::And(gs) | Formula::Or(gs) => {
                let kids: Vec<Node<'f>> = gs.iter().map(Node::build).collect();
                let free = union(&kids);
                (kids, free)
            }
            Formula::Forall(v, g) | Formula::Exists(v, g) => {
                let k = Node::build(g);
                let free = k.free.iter().copied().filter(|&x| x != v.0).collect();
                (vec![k], free)
            }
        };
        Node { f, free, kids }
    }
}

fn union(kids: &[Node<'_>]) -> Vec<u32> {
    let mut free: Vec<u32> = kids.iter().flat_map(|k| k.free.iter().copied()).collect();
    free.sort_unstable();
    free.dedup();
    free
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Quant {
    All,
    Some,
}

struct Eval<'p> {
    p: &'p Poset,
    env: Vec<usize>,
}

impl Eval<'_> {
    fn node(&mut self, n: &Node<'_>) -> bool {
        match n.f {
            Formula::Leq(a, b) => self.p.leq(self.env[a.0 as usize], self.env[b.0 as usize]),
            Formula::Eq(a, b) => self.env[a.0 as usize] == self.env[b.0 as usize],
            Formula::Not(_) => !self.node(&n.kids[0]),
            Formula::And(_) => n.kids.iter().all(|k| self.node(k)),
            Formula::Or(_) => n.kids.iter().any(|k| self.node(k)),
            Formula::Implies(..) => !self.node(&n.kids[0]) || self.node(&n.kids[1]),
            Formula::Forall(..) => self.block(n, Quant::All),
            Formula::Exists(..) => self.block(n, Quant::Some),
        }
    }

    /// A maximal run of same-kind quantifiers starting at `n`.
    fn block(&mut self, n: &Node<'_>, q: Quant) -> bool {
        let mut vars = Vec::new();
        let mut body = n;
        while let (Formula::Forall(v, _), Quant::All) | (Formula::Exists(v, _), Quant::Some) = (body.f, q) {
            if !vars.contains(&v.0) {
                vars.push(v.0);
            }
            body = &body.kids[0];
        }
        let splits = matches!(
            (body.f, q),
            (Formula::And(_), Quant::All) | (Formula::Or(_), Quant::Some)
        );
        if splits {
            let part = |this: &mut Self, k: &Node<'_>| {
                let own: Vec<u32> = vars.iter().copied().filter(|v| k.free.contains(v)).collect();
                this.range(&own, k, q)
            };
            match q {
                Quant::All => body.kids.iter().all(|k| part(self, k)),
                Quant::Some => body.kids.iter().any(|k| part(self, k)),
            }
        } else {
            let own: Vec<u32> = vars.iter().copied().filter(|v| body.free.contains(v)).collect();
            self.range(&own, body, q)
        }
    }

    fn range(&mut self, vars: &[u32], body: &Node<'_>, q: Quant) -> bool {
        let Some((&v, rest)) = vars.split_first() else {
            return self.node(body);
        };
        let slot = v as usize;
        let saved = self.env[slot];
        let want = q == Quant::Some;
        let mut result = !want;
        for e in 0..self.p.len() {
            self.env[slot] = e;
            if self.range(rest, body, q) == want {
                result = want;
                break;
            }
        }
        self.env[slot] = saved;
        result
    }
}
