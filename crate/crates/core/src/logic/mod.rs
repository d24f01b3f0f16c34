//! First-order formulas over the signature `{≤, =}` and the recursive axiom
//! families describing the `(α, β)`-game.
//!
//! `φ_{krsn}(x⃗_k, y)` holds under an assignment exactly when `∃` has an
//! `n`-strategy in the `(r+1, s+1)`-game from `({x₁ … x_k}, {y})`, and the
//! sentence `ψ_{rsn}` says that holds from every `({p}, {q})` with `p ≰ q`.
//! The builders here construct those formulas literally; [`evaluate`] checks
//! them on a finite poset and [`emit_tptp`] prints them for external provers.

mod eval;
mod stats;
mod tptp;

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub use eval::{evaluate, Assignment};
pub use stats::{formula_stats, FormulaStats};
pub use tptp::emit_tptp;

/// A variable, rendered `X<id>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub u32);

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Formula {
    Leq(Var, Var),
    Eq(Var, Var),
    Not(Box<Formula>),
    /// Empty conjunction is true.
    And(Vec<Formula>),
    /// Empty disjunction is false.
    Or(Vec<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Forall(Var, Box<Formula>),
    Exists(Var, Box<Formula>),
}

impl Formula {
    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn neq(a: Var, b: Var) -> Formula {
        Formula::not(Formula::Eq(a, b))
    }

    /// Conjunction; a single conjunct is returned as is.
    pub fn and(mut parts: Vec<Formula>) -> Formula {
        if parts.len() == 1 {
            parts.pop().expect("one part")
        } else {
            Formula::And(parts)
        }
    }

    /// Disjunction; a single disjunct is returned as is.
    pub fn or(mut parts: Vec<Formula>) -> Formula {
        if parts.len() == 1 {
            parts.pop().expect("one part")
        } else {
            Formula::Or(parts)
        }
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn forall(v: Var, body: Formula) -> Formula {
        Formula::Forall(v, Box::new(body))
    }

    pub fn exists(v: Var, body: Formula) -> Formula {
        Formula::Exists(v, Box::new(body))
    }

    /// `∀v₁ … ∀v_k body`, outermost first.
    pub fn forall_all(vars: &[Var], body: Formula) -> Formula {
        vars.iter().rev().fold(body, |acc, &v| Formula::forall(v, acc))
    }

    pub fn free_vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<Var>, out: &mut BTreeSet<Var>) {
        let mut note = |v: &Var, bound: &Vec<Var>| {
            if !bound.contains(v) {
                out.insert(*v);
            }
        };
        match self {
            Formula::Leq(a, b) | Formula::Eq(a, b) => {
                note(a, bound);
                note(b, bound);
            }
            Formula::Not(f) => f.collect_free(bound, out),
            Formula::And(fs) | Formula::Or(fs) => {
                for f in fs {
                    f.collect_free(bound, out);
                }
            }
            Formula::Implies(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Forall(v, f) | Formula::Exists(v, f) => {
                bound.push(*v);
                f.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn is_closed(&self) -> bool {
        self.free_vars().is_empty()
    }
}

/// Hands out fresh variables in increasing order.
#[derive(Clone, Debug, Default)]
pub struct VarGen {
    next: u32,
}

impl VarGen {
    pub fn new() -> VarGen {
        VarGen::default()
    }

    /// Continue after the variables already used by `f`.
    pub fn after(f: &Formula) -> VarGen {
        let mut max = None;
        f.visit_vars(&mut |v| max = max.max(Some(v.0)));
        VarGen {
            next: max.map_or(0, |m| m + 1),
        }
    }

    pub fn fresh(&mut self) -> Var {
        let v = Var(self.next);
        self.next += 1;
        v
    }

    pub fn fresh_n(&mut self, k: usize) -> Vec<Var> {
        (0..k).map(|_| self.fresh()).collect()
    }
}

impl Formula {
    /// Calls `f` on every variable occurrence, bound or free.
    pub fn visit_vars(&self, f: &mut impl FnMut(Var)) {
        match self {
            Formula::Leq(a, b) | Formula::Eq(a, b) => {
                f(*a);
                f(*b);
            }
            Formula::Not(g) => g.visit_vars(f),
            Formula::And(gs) | Formula::Or(gs) => gs.iter().for_each(|g| g.visit_vars(f)),
            Formula::Implies(a, b) => {
                a.visit_vars(f);
                b.visit_vars(f);
            }
            Formula::Forall(v, g) | Formula::Exists(v, g) => {
                f(*v);
                g.visit_vars(f);
            }
        }
    }
}

/// `M_k(x⃗, y)`: `y` is the meet of the `xᵢ`.
pub fn meet_is(gen: &mut VarGen, xs: &[Var], y: Var) -> Formula {
    let z = gen.fresh();
    let mut parts: Vec<Formula> = xs.iter().map(|&x| Formula::Leq(y, x)).collect();
    let below_all = Formula::and(xs.iter().map(|&x| Formula::Leq(z, x)).collect());
    parts.push(Formula::forall(z, Formula::implies(below_all, Formula::Leq(z, y))));
    Formula::and(parts)
}

/// `J_k(x⃗, y)`: `y` is the join of the `xᵢ`.
pub fn join_is(gen: &mut VarGen, xs: &[Var], y: Var) -> Formula {
    let z = gen.fresh();
    let mut parts: Vec<Formula> = xs.iter().map(|&x| Formula::Leq(x, y)).collect();
    let above_all = Formula::and(xs.iter().map(|&x| Formula::Leq(x, z)).collect());
    parts.push(Formula::forall(z, Formula::implies(above_all, Formula::Leq(y, z))));
    Formula::and(parts)
}

/// `C_km(x⃗, y⃗)`: every `yⱼ` equals some `xᵢ`.
pub fn contained_in(xs: &[Var], ys: &[Var]) -> Formula {
    Formula::and(
        ys.iter()
            .map(|&y| Formula::or(xs.iter().map(|&x| Formula::Eq(y, x)).collect()))
            .collect(),
    )
}

/// `D_km(x⃗, y⃗)`: no `yⱼ` equals any `xᵢ`.
pub fn disjoint_from(xs: &[Var], ys: &[Var]) -> Formula {
    Formula::and(
        ys.iter()
            .flat_map(|&y| xs.iter().map(move |&x| Formula::neq(y, x)))
            .collect(),
    )
}

/// `σ_k(x⃗, c)`: `c` lies above some `xᵢ` (a legal up-move).
pub fn up_move(gen: &mut VarGen, xs: &[Var], c: Var) -> Formula {
    let z = gen.fresh();
    Formula::exists(
        z,
        Formula::And(alloc::vec![contained_in(xs, &[z]), Formula::Leq(z, c)]),
    )
}

/// `τ_kr(x⃗, a⃗, c)`: the `aⱼ` are among the `xᵢ` and `c` is their meet.
pub fn meet_move(gen: &mut VarGen, xs: &[Var], args: &[Var], c: Var) -> Formula {
    Formula::And(alloc::vec![contained_in(xs, args), meet_is(gen, args, c)])
}

/// `ρ_ks(x⃗, b⃗)`: the join of the `bⱼ` exists and is among the `xᵢ`.
pub fn join_move(gen: &mut VarGen, xs: &[Var], args: &[Var]) -> Formula {
    let z = gen.fresh();
    Formula::exists(
        z,
        Formula::And(alloc::vec![contained_in(xs, &[z]), join_is(gen, args, z)]),
    )
}

/// The named building blocks, by arity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Primitive {
    Join(usize),
    Meet(usize),
    Contained(usize, usize),
    Disjoint(usize, usize),
    UpMove(usize),
    MeetMove(usize, usize),
    JoinMove(usize, usize),
}

/// A formula together with its intended free variables, in argument order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenFormula {
    pub formula: Formula,
    pub free: Vec<Var>,
}

/// Builds a primitive on fresh argument variables `X0, X1, …` (in argument
/// order; for `Join`/`Meet` the last one is `y`).
pub fn build_primitive(kind: Primitive) -> Result<OpenFormula> {
    let arities: &[usize] = match &kind {
        Primitive::Join(k) | Primitive::Meet(k) | Primitive::UpMove(k) => core::slice::from_ref(k),
        Primitive::Contained(k, m)
        | Primitive::Disjoint(k, m)
        | Primitive::MeetMove(k, m)
        | Primitive::JoinMove(k, m) => &[*k, *m],
    };
    if arities.contains(&0) {
        return Err(Error::ZeroArity);
    }
    let mut gen = VarGen::new();
    let (formula, free) = match kind {
        Primitive::Join(k) | Primitive::Meet(k) => {
            let xs = gen.fresh_n(k);
            let y = gen.fresh();
            let f = if matches!(kind, Primitive::Join(_)) {
                join_is(&mut gen, &xs, y)
            } else {
                meet_is(&mut gen, &xs, y)
            };
            (f, [xs, alloc::vec![y]].concat())
        }
        Primitive::Contained(k, m) | Primitive::Disjoint(k, m) => {
            let xs = gen.fresh_n(k);
            let ys = gen.fresh_n(m);
            let f = if matches!(kind, Primitive::Contained(..)) {
                contained_in(&xs, &ys)
            } else {
                disjoint_from(&xs, &ys)
            };
            (f, [xs, ys].concat())
        }
        Primitive::UpMove(k) => {
            let xs = gen.fresh_n(k);
            let c = gen.fresh();
            (up_move(&mut gen, &xs, c), [xs, alloc::vec![c]].concat())
        }
        Primitive::MeetMove(k, r) => {
            let xs = gen.fresh_n(k);
            let args = gen.fresh_n(r);
            let c = gen.fresh();
            let f = meet_move(&mut gen, &xs, &args, c);
            (f, [xs, args, alloc::vec![c]].concat())
        }
        Primitive::JoinMove(k, s) => {
            let xs = gen.fresh_n(k);
            let args = gen.fresh_n(s);
            let f = join_move(&mut gen, &xs, &args);
            (f, [xs, args].concat())
        }
    };
    Ok(OpenFormula { formula, free })
}

/// Indices of `φ_{krsn}`: `k` accumulated elements, meets of up to `r`,
/// joins of up to `s` elements, `n` rounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormulaSpec {
    pub k: usize,
    pub r: usize,
    pub s: usize,
    pub n: usize,
}

impl FormulaSpec {
    pub fn new(k: usize, r: usize, s: usize, n: usize) -> Result<FormulaSpec> {
        if k == 0 || r == 0 || s == 0 {
            return Err(Error::ZeroArity);
        }
        Ok(FormulaSpec { k, r, s, n })
    }
}

/// `φ_{krsn}(x⃗, y)` on the given free variables; bound variables come from `gen`.
pub fn phi_with(gen: &mut VarGen, r: usize, s: usize, n: usize, xs: &[Var], y: Var) -> Formula {
    if n == 0 {
        return disjoint_from(xs, &[y]);
    }
    let meet_args = gen.fresh_n(r);
    let join_args = gen.fresh_n(s);
    let c = gen.fresh();
    let extended = |gen: &mut VarGen, e: Var| {
        let mut next = xs.to_vec();
        next.push(e);
        phi_with(gen, r, s, n - 1, &next, y)
    };

    let up = Formula::implies(up_move(gen, xs, c), extended(gen, c));
    let meet = Formula::implies(meet_move(gen, xs, &meet_args, c), extended(gen, c));
    let guard = join_move(gen, xs, &join_args);
    let choices = join_args.iter().map(|&b| extended(gen, b)).collect();
    let join = Formula::implies(guard, Formula::or(choices));

    let mut bound = meet_args;
    bound.extend(join_args);
    bound.push(c);
    Formula::forall_all(&bound, Formula::And(alloc::vec![up, meet, join]))
}

/// `φ_{krsn}` with free variables `X0 … X{k-1}` for `x⃗` and `Xk` for `y`.
pub fn build_phi(spec: FormulaSpec) -> Result<OpenFormula> {
    let spec = FormulaSpec::new(spec.k, spec.r, spec.s, spec.n)?;
    let mut gen = VarGen::new();
    let xs = gen.fresh_n(spec.k);
    let y = gen.fresh();
    let formula = phi_with(&mut gen, spec.r, spec.s, spec.n, &xs, y);
    Ok(OpenFormula {
        formula,
        free: [xs, alloc::vec![y]].concat(),
    })
}

/// `ψ_{rsn} = ∀x ∀y (x ≰ y → φ_{1rsn}(x, y))`.
pub fn build_psi(r: usize, s: usize, n: usize) -> Result<Formula> {
    FormulaSpec::new(1, r, s, n)?;
    let mut gen = VarGen::new();
    let x = gen.fresh();
    let y = gen.fresh();
    let body = Formula::implies(
        Formula::not(Formula::Leq(x, y)),
        phi_with(&mut gen, r, s, n, &[x], y),
    );
    Ok(Formula::forall_all(&[x, y], body))
}

/// The pairwise form of the game formula, with binary meets and joins and
/// `∀` choosing two elements per round:
///
/// `∀a ∀b ( (∃c(C(x⃗,c) ∧ c ≤ a) → φ(x⃗,a,y))
///        ∧ ∀c((C(x⃗,a) ∧ C(x⃗,b) ∧ M(a,b,c)) → φ(x⃗,c,y))
///        ∧ (∃c(C(x⃗,c) ∧ J(a,b,c)) → φ(x⃗,a,y) ∨ φ(x⃗,b,y)) )`
///
/// The meet conjunct binds `c` universally; it names the unique meet.
pub fn pairwise_phi_with(gen: &mut VarGen, n: usize, xs: &[Var], y: Var) -> Formula {
    if n == 0 {
        return disjoint_from(xs, &[y]);
    }
    let a = gen.fresh();
    let b = gen.fresh();
    let extended = |gen: &mut VarGen, e: Var| {
        let mut next = xs.to_vec();
        next.push(e);
        pairwise_phi_with(gen, n - 1, &next, y)
    };

    let up = Formula::implies(up_move(gen, xs, a), extended(gen, a));

    let c = gen.fresh();
    let meet_guard = Formula::And(alloc::vec![
        contained_in(xs, &[a]),
        contained_in(xs, &[b]),
        meet_is(gen, &[a, b], c),
    ]);
    let meet = Formula::forall(c, Formula::implies(meet_guard, extended(gen, c)));

    let z = gen.fresh();
    let join_guard = Formula::exists(
        z,
        Formula::And(alloc::vec![contained_in(xs, &[z]), join_is(gen, &[a, b], z)]),
    );
    let choices = Formula::Or(alloc::vec![extended(gen, a), extended(gen, b)]);
    let join = Formula::implies(join_guard, choices);

    Formula::forall_all(&[a, b], Formula::And(alloc::vec![up, meet, join]))
}

/// The pairwise formula with free variables `X0 … X{m-1}`, `Xm`.
pub fn build_pairwise_phi(m: usize, n: usize) -> Result<OpenFormula> {
    if m == 0 {
        return Err(Error::ZeroArity);
    }
    let mut gen = VarGen::new();
    let xs = gen.fresh_n(m);
    let y = gen.fresh();
    let formula = pairwise_phi_with(&mut gen, n, &xs, y);
    Ok(OpenFormula {
        formula,
        free: [xs, alloc::vec![y]].concat(),
    })
}

/// Renders as an s-expression, e.g. `(forall X0 (leq X0 X0))`.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, head: &str, parts: &[Formula]| {
            f.write_str("(")?;
            f.write_str(head)?;
            for p in parts {
                write!(f, " {p}")?;
            }
            f.write_str(")")
        };
        match self {
            Formula::Leq(a, b) => write!(f, "(leq {a} {b})"),
            Formula::Eq(a, b) => write!(f, "(= {a} {b})"),
            Formula::Not(g) => write!(f, "(not {g})"),
            Formula::And(gs) => list(f, "and", gs),
            Formula::Or(gs) => list(f, "or", gs),
            Formula::Implies(a, b) => write!(f, "(=> {a} {b})"),
            Formula::Forall(v, g) => write!(f, "(forall {v} {g})"),
            Formula::Exists(v, g) => write!(f, "(exists {v} {g})"),
        }
    }
}
