use alloc::collections::BTreeSet;

use super::Formula;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormulaStats {
    /// One per AST node, atoms included.
    pub node_count: usize,
    /// Longest chain of nested quantifiers.
    pub quantifier_depth: usize,
    /// Distinct variables, bound or free.
    pub variable_count: usize,
}

pub fn formula_stats(f: &Formula) -> FormulaStats {
    let mut vars = BTreeSet::new();
    f.visit_vars(&mut |v| {
        vars.insert(v);
    });
    FormulaStats {
        node_count: nodes(f),
        quantifier_depth: depth(f),
        variable_count: vars.len(),
    }
}

fn nodes(f: &Formula) -> usize {
    1 + match f {
        Formula::Leq(..) | Formula::Eq(..) => 0,
        Formula::Not(g) | Formula::Forall(_, g) | Formula::Exists(_, g) => nodes(g),
        Formula::And(gs) | Formula::Or(gs) => gs.iter().map(nodes).sum(),
        Formula::Implies(a, b) => nodes(a) + nodes(b),
    }
}

fn depth(f: &Formula) -> usize {
    match f {
        Formula::Leq(..) | Formula::Eq(..) => 0,
        Formula::Not(g) => depth(g),
        Formula::Forall(_, g) | Formula::Exists(_, g) => 1 + depth(g),
        Formula::And(gs) | Formula::Or(gs) => gs.iter().map(depth).max().unwrap_or(0),
        Formula::Implies(a, b) => depth(a).max(depth(b)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{build_phi, FormulaSpec};

    #[test]
    fn depth_grows_by_a_round_of_binders() {
        for (r, s) in [(1, 1), (2, 1), (2, 3)] {
            let mut expected = 0;
            for n in 0..3 {
                let phi = build_phi(FormulaSpec::new(1, r, s, n).unwrap()).unwrap();
                assert_eq!(formula_stats(&phi.formula).quantifier_depth, expected);
                expected = r + s + 1 + expected.max(2);
            }
        }
    }

    #[test]
    fn base_case_counts() {
        let phi = build_phi(FormulaSpec::new(3, 1, 1, 0).unwrap()).unwrap();
        // And of three negated equalities.
        assert_eq!(
            formula_stats(&phi.formula),
            FormulaStats { node_count: 7, quantifier_depth: 0, variable_count: 4 }
        );
    }
}
