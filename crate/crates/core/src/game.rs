//! The `(α, β)`-game.
//!
//! A position is a pair `(U, V)`. Each round `∀` plays one of
//!
//! * `Up(b)` for some `b ≥ a ∈ U`, and `∃` must add `b`;
//! * `Meet(A)` for nonempty `A ⊆ U`, `|A| < α`, `⋀A` defined, and `∃` must add `⋀A`;
//! * `Join(B)` for nonempty `B`, `|B| < β`, `⋁B` defined and in `U`, and `∃`
//!   adds some `b ∈ B` of her choice.
//!
//! `∀` wins as soon as `U ∩ V ≠ ∅` at the start of a round. `∃` has an
//! `n`-strategy if she can avoid that through round `n`, and an
//! `ω`-strategy if she can avoid it forever. On a finite poset the latter is
//! a safety game, solved here by a greatest-fixpoint iteration over the
//! reachable `U`-sets.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::filter::incomparable_pairs;
use crate::params::GameParams;
use crate::poset::Poset;
use crate::set::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GamePosition {
    /// `U`: what `∃` has been forced to accept so far.
    pub accumulated: ElementSet,
    /// `V`: fixed for the whole game.
    pub forbidden: ElementSet,
}

impl GamePosition {
    pub fn new(accumulated: ElementSet, forbidden: ElementSet) -> GamePosition {
        GamePosition {
            accumulated,
            forbidden,
        }
    }

    /// The position `({p}, {q})`.
    pub fn start(p: usize, q: usize) -> GamePosition {
        GamePosition::new(ElementSet::singleton(p), ElementSet::singleton(q))
    }

    pub fn is_lost(&self) -> bool {
        self.accumulated.intersects(self.forbidden)
    }

    fn with(self, e: usize) -> GamePosition {
        GamePosition::new(self.accumulated.with(e), self.forbidden)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    Up(usize),
    Meet(ElementSet),
    Join(ElementSet),
}

/// How long `∃` survives from a position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SurvivalDepth {
    /// `U ∩ V ≠ ∅` already: not even a 0-strategy.
    Lost,
    /// The largest `n` with an `n`-strategy.
    Rounds(usize),
    Omega,
}

impl SurvivalDepth {
    /// Whether this depth guarantees an `n`-strategy.
    pub fn survives(self, n: usize) -> bool {
        match self {
            SurvivalDepth::Lost => false,
            SurvivalDepth::Rounds(d) => n <= d,
            SurvivalDepth::Omega => true,
        }
    }
}

/// One round of a play: `∀`'s move and the element `∃` added in response.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub mv: Move,
    pub added: usize,
}

/// A poset with precomputed move tables for fixed `(α, β)`.
#[derive(Clone, Debug)]
pub struct Game<'p> {
    poset: &'p Poset,
    params: GameParams,
    /// `(A, ⋀A)` for every admissible `A` with a defined meet, ascending by `A`.
    meets: Vec<(ElementSet, usize)>,
    /// `(B, ⋁B)` for every admissible `B` with a defined join, ascending by `B`.
    joins: Vec<(ElementSet, usize)>,
}

impl<'p> Game<'p> {
    pub fn new(poset: &'p Poset, params: GameParams) -> Game<'p> {
        let n = poset.len();
        let table = |max: usize, op: &dyn Fn(ElementSet) -> Option<usize>| {
            poset
                .carrier()
                .subsets_up_to(max)
                .into_iter()
                .filter_map(|s| op(s).map(|e| (s, e)))
                .collect::<Vec<_>>()
        };
        let meets = table(params.alpha.max_size(n), &|s| poset.meet(s));
        let joins = table(params.beta.max_size(n), &|s| poset.join(s));
        Game {
            poset,
            params,
            meets,
            joins,
        }
    }

    pub fn poset(&self) -> &'p Poset {
        self.poset
    }

    pub fn params(&self) -> GameParams {
        self.params
    }

    /// Every legal `∀` move: `Up` by element, then `Meet` and `Join` by bitmask.
    pub fn legal_moves(&self, pos: GamePosition) -> Vec<Move> {
        let u = pos.accumulated;
        let mut moves: Vec<Move> = self.poset.up_closure(u).iter().map(Move::Up).collect();
        moves.extend(
            self.meets
                .iter()
                .filter(|(a, _)| a.is_subset(u))
                .map(|&(a, _)| Move::Meet(a)),
        );
        moves.extend(
            self.joins
                .iter()
                .filter(|&&(_, j)| u.contains(j))
                .map(|&(b, _)| Move::Join(b)),
        );
        moves
    }

    pub fn is_legal(&self, pos: GamePosition, mv: Move) -> bool {
        let u = pos.accumulated;
        let n = self.poset.len();
        match mv {
            Move::Up(b) => b < n && self.poset.up_closure(u).contains(b),
            Move::Meet(a) => {
                !a.is_empty()
                    && a.is_subset(u)
                    && a.len() <= self.params.alpha.max_size(n)
                    && self.poset.meet(a).is_some()
            }
            Move::Join(b) => {
                !b.is_empty()
                    && b.is_subset(self.poset.carrier())
                    && b.len() <= self.params.beta.max_size(n)
                    && self.poset.join(b).is_some_and(|j| u.contains(j))
            }
        }
    }

    /// The positions `∃` may move to; `V` is unchanged.
    pub fn respond(&self, pos: GamePosition, mv: Move) -> Result<Vec<GamePosition>> {
        if !self.is_legal(pos, mv) {
            return Err(Error::IllegalMove);
        }
        Ok(self.successors(pos, mv))
    }

    fn successors(&self, pos: GamePosition, mv: Move) -> Vec<GamePosition> {
        self.additions(mv).iter().map(|e| pos.with(e)).collect()
    }

    /// The elements `∃` may add in answer to `mv`.
    fn additions(&self, mv: Move) -> ElementSet {
        match mv {
            Move::Up(b) => ElementSet::singleton(b),
            Move::Meet(a) => ElementSet::singleton(self.poset.meet(a).expect("legal meet move")),
            Move::Join(b) => b,
        }
    }

    /// Decides an `n`-strategy by direct recursion over the rules: `U ∩ V = ∅`
    /// and, when `n > 0`, every legal move has a response with an
    /// `(n-1)`-strategy. Memoized on `(U, n)`.
    pub fn has_n_strategy(&self, pos: GamePosition, n: usize) -> bool {
        BoundedSearch::new(self).has_n_strategy(pos, n)
    }

    /// Options that can change the position, as lists of `∃`'s possible
    /// successors. A move `∃` can answer without changing `U` never affects
    /// winnability, so it is dropped.
    fn effective_options(&self, u: ElementSet) -> Vec<Vec<ElementSet>> {
        let mut forced = self.poset.up_closure(u).difference(u);
        for &(a, m) in &self.meets {
            if a.is_subset(u) {
                forced = forced.with(m);
            }
        }
        forced = forced.difference(u);
        let mut options: Vec<Vec<ElementSet>> =
            forced.iter().map(|e| alloc::vec![u.with(e)]).collect();
        for &(b, j) in &self.joins {
            if u.contains(j) && !b.intersects(u) {
                options.push(b.iter().map(|e| u.with(e)).collect());
            }
        }
        options
    }

    /// Solves the safety game from `pos` by greatest fixpoint over the
    /// `U`-sets reachable from it.
    pub fn solve(&self, pos: GamePosition) -> Solution {
        let v = pos.forbidden;
        let mut states = alloc::vec![pos.accumulated];
        let mut index = BTreeMap::new();
        index.insert(pos.accumulated, 0usize);
        let mut queue = VecDeque::from([0usize]);
        let mut pending: Vec<Option<Vec<Vec<usize>>>> = alloc::vec![None];
        while let Some(i) = queue.pop_front() {
            let u = states[i];
            let opts = if u.intersects(v) {
                Vec::new()
            } else {
                self.effective_options(u)
                    .into_iter()
                    .map(|succs| {
                        succs
                            .into_iter()
                            .map(|s| {
                                *index.entry(s).or_insert_with(|| {
                                    states.push(s);
                                    pending.push(None);
                                    queue.push_back(states.len() - 1);
                                    states.len() - 1
                                })
                            })
                            .collect()
                    })
                    .collect()
            };
            pending[i] = Some(opts);
        }
        let edges: Vec<Vec<Vec<usize>>> =
            pending.into_iter().map(|o| o.expect("every state expanded")).collect();

        let mut alive: Vec<bool> = states.iter().map(|u| !u.intersects(v)).collect();
        let mut rank: Vec<SurvivalDepth> = alive
            .iter()
            .map(|&a| if a { SurvivalDepth::Omega } else { SurvivalDepth::Lost })
            .collect();
        let mut round = 0;
        loop {
            let next: Vec<bool> = (0..states.len())
                .map(|i| {
                    alive[i]
                        && edges[i]
                            .iter()
                            .all(|succs| succs.iter().any(|&s| alive[s]))
                })
                .collect();
            let mut changed = false;
            for i in 0..states.len() {
                if alive[i] && !next[i] {
                    rank[i] = SurvivalDepth::Rounds(round);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
            alive = next;
            round += 1;
        }
        Solution {
            forbidden: v,
            states,
            index,
            rank,
            stabilization: round,
        }
    }

    pub fn has_omega_strategy(&self, pos: GamePosition) -> bool {
        self.survival_depth(pos) == SurvivalDepth::Omega
    }

    pub fn survival_depth(&self, pos: GamePosition) -> SurvivalDepth {
        self.solve(pos).depth(pos.accumulated)
    }

    /// A play in which `∀` wins as fast as possible and `∃` holds out as long
    /// as possible. `None` if `∃` has an `ω`-strategy.
    pub fn forcing_trace(&self, pos: GamePosition) -> Option<Vec<TraceStep>> {
        let solution = self.solve(pos);
        let mut cur = pos;
        let mut trace = Vec::new();
        loop {
            let depth = solution.depth(cur.accumulated);
            let d = match depth {
                SurvivalDepth::Omega => return None,
                SurvivalDepth::Lost => return Some(trace),
                SurvivalDepth::Rounds(d) => d,
            };
            let u = cur.accumulated;
            let (mv, adds) = self
                .legal_moves(cur)
                .into_iter()
                .map(|mv| (mv, self.additions(mv)))
                .find(|(_, adds)| {
                    !adds.intersects(u)
                        && adds
                            .iter()
                            .all(|e| solution.depth(u.with(e)) < SurvivalDepth::Rounds(d))
                })
                .expect("a position of finite depth has a forcing move");
            let mut best = adds.first().expect("moves add at least one element");
            for e in adds.iter().skip(1) {
                if solution.depth(u.with(e)) > solution.depth(u.with(best)) {
                    best = e;
                }
            }
            trace.push(TraceStep { mv, added: best });
            cur = cur.with(best);
        }
    }

    /// `∃` has an `n`-strategy from `({p}, {q})` for every `p ≰ q`.
    pub fn all_pairs_n_strategy(&self, n: usize) -> bool {
        let mut search = BoundedSearch::new(self);
        incomparable_pairs(self.poset).all(|(a, b)| search.has_n_strategy(GamePosition::start(a, b), n))
    }

    /// `∃` has an `ω`-strategy from `({p}, {q})` for every `p ≰ q`.
    pub fn is_representable(&self) -> bool {
        self.first_losing_pair().is_none()
    }

    pub fn first_losing_pair(&self) -> Option<(usize, usize)> {
        incomparable_pairs(self.poset).find(|&(a, b)| !self.has_omega_strategy(GamePosition::start(a, b)))
    }
}

/// Ranks of the positions reachable from a start, from [`Game::solve`].
#[derive(Clone, Debug)]
pub struct Solution {
    forbidden: ElementSet,
    states: Vec<ElementSet>,
    index: BTreeMap<ElementSet, usize>,
    rank: Vec<SurvivalDepth>,
    stabilization: usize,
}

impl Solution {
    /// Survival depth of a reachable `U`; positions that were never reached
    /// are reported by their `U ∩ V` status only when already lost.
    pub fn depth(&self, u: ElementSet) -> SurvivalDepth {
        match self.index.get(&u) {
            Some(&i) => self.rank[i],
            None if u.intersects(self.forbidden) => SurvivalDepth::Lost,
            None => panic!("position {u:?} was not reached from the start"),
        }
    }

    /// Number of `U`-sets reachable from the start.
    pub fn reachable(&self) -> usize {
        self.states.len()
    }

    /// The first `k` with `W_k = W_{k+1}`: beyond it, `has_n_strategy` is
    /// constant in `n` at every reachable position.
    pub fn stabilization_depth(&self) -> usize {
        self.stabilization
    }

    /// Reachable `U`-sets with their ranks, in discovery order.
    pub fn positions(&self) -> impl Iterator<Item = (ElementSet, SurvivalDepth)> + '_ {
        self.states.iter().copied().zip(self.rank.iter().copied())
    }
}

/// Memoized bounded-depth search, sharing the per-`U` move analysis across
/// queries on the same game.
struct BoundedSearch<'g, 'p> {
    game: &'g Game<'p>,
    options: BTreeMap<ElementSet, Vec<Vec<ElementSet>>>,
    memo: BTreeMap<(ElementSet, ElementSet, usize), bool>,
}

impl<'g, 'p> BoundedSearch<'g, 'p> {
    fn new(game: &'g Game<'p>) -> Self {
        BoundedSearch {
            game,
            options: BTreeMap::new(),
            memo: BTreeMap::new(),
        }
    }

    /// Each legal move as the sorted list of `U`-sets `∃` can answer with,
    /// deduplicated across moves.
    fn options(&mut self, u: ElementSet) -> Vec<Vec<ElementSet>> {
        if let Some(o) = self.options.get(&u) {
            return o.clone();
        }
        let pos = GamePosition::new(u, ElementSet::EMPTY);
        let mut opts: Vec<Vec<ElementSet>> = self
            .game
            .legal_moves(pos)
            .into_iter()
            .map(|mv| {
                let mut succ: Vec<ElementSet> = self
                    .game
                    .successors(pos, mv)
                    .into_iter()
                    .map(|p| p.accumulated)
                    .collect();
                succ.sort_unstable();
                succ.dedup();
                succ
            })
            .collect();
        opts.sort_unstable();
        opts.dedup();
        self.options.insert(u, opts.clone());
        opts
    }

    fn has_n_strategy(&mut self, pos: GamePosition, n: usize) -> bool {
        if pos.is_lost() {
            return false;
        }
        if n == 0 {
            return true;
        }
        let key = (pos.accumulated, pos.forbidden, n);
        if let Some(&r) = self.memo.get(&key) {
            return r;
        }
        let result = self.options(pos.accumulated).iter().all(|succs| {
            succs
                .iter()
                .any(|&u| self.has_n_strategy(GamePosition::new(u, pos.forbidden), n - 1))
        });
        self.memo.insert(key, result);
        result
    }
}

pub fn legal_moves(p: &Poset, pos: GamePosition, prm: GameParams) -> Vec<Move> {
    Game::new(p, prm).legal_moves(pos)
}

pub fn respond(p: &Poset, pos: GamePosition, mv: Move, prm: GameParams) -> Result<Vec<GamePosition>> {
    Game::new(p, prm).respond(pos, mv)
}

pub fn has_n_strategy(p: &Poset, pos: GamePosition, prm: GameParams, n: usize) -> bool {
    Game::new(p, prm).has_n_strategy(pos, n)
}

pub fn has_omega_strategy(p: &Poset, pos: GamePosition, prm: GameParams) -> bool {
    Game::new(p, prm).has_omega_strategy(pos)
}

pub fn survival_depth(p: &Poset, pos: GamePosition, prm: GameParams) -> SurvivalDepth {
    Game::new(p, prm).survival_depth(pos)
}

pub fn all_pairs_n_strategy(p: &Poset, prm: GameParams, n: usize) -> bool {
    Game::new(p, prm).all_pairs_n_strategy(n)
}

/// Representability decided by the game: an `ω`-strategy from every `({p}, {q})`, `p ≰ q`.
pub fn game_representable(p: &Poset, prm: GameParams) -> bool {
    Game::new(p, prm).is_representable()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{boolean, chain, hexagon_witness, m3};
    use crate::params::Params;

    fn p33() -> Params {
        Params::finite(3, 3)
    }

    fn set(p: &Poset, names: &[&str]) -> ElementSet {
        names.iter().map(|n| p.index_of(n).unwrap()).collect()
    }

    fn ix(p: &Poset, name: &str) -> usize {
        p.index_of(name).unwrap()
    }

    #[test]
    fn legal_moves_from_an_atom_of_m3() {
        let p = m3();
        let pos = GamePosition::new(set(&p, &["a"]), ElementSet::EMPTY);
        let a = set(&p, &["a"]);
        assert_eq!(
            legal_moves(&p, pos, p33()),
            [
                Move::Up(ix(&p, "a")),
                Move::Up(ix(&p, "top")),
                Move::Meet(a),
                Move::Join(a),
                Move::Join(set(&p, &["bot", "a"])),
            ]
        );
    }

    #[test]
    fn legal_moves_grow_with_top() {
        let p = m3();
        let pos = GamePosition::new(set(&p, &["a", "top"]), ElementSet::EMPTY);
        let moves = legal_moves(&p, pos, p33());
        for m in [
            Move::Join(set(&p, &["b", "c"])),
            Move::Join(set(&p, &["a", "b"])),
            Move::Join(set(&p, &["a", "c"])),
            Move::Join(set(&p, &["b", "top"])),
            Move::Meet(set(&p, &["a", "top"])),
        ] {
            assert!(moves.contains(&m), "{m:?} missing");
        }
        // Joins landing on bot are not playable: bot is not in U.
        assert!(!moves.contains(&Move::Join(set(&p, &["bot"]))));
    }

    #[test]
    fn empty_u_has_no_moves() {
        let p = m3();
        assert!(legal_moves(&p, GamePosition::new(ElementSet::EMPTY, ElementSet::EMPTY), p33()).is_empty());
    }

    #[test]
    fn responses() {
        let p = m3();
        let pos = GamePosition::new(set(&p, &["a", "top"]), ElementSet::EMPTY);
        let succ = respond(&p, pos, Move::Join(set(&p, &["b", "c"])), p33()).unwrap();
        assert_eq!(
            succ.iter().map(|s| s.accumulated).collect::<Vec<_>>(),
            [set(&p, &["a", "top", "b"]), set(&p, &["a", "top", "c"])]
        );
        let pos = GamePosition::new(set(&p, &["a", "c"]), ElementSet::EMPTY);
        let succ = respond(&p, pos, Move::Meet(set(&p, &["a", "c"])), p33()).unwrap();
        assert_eq!(succ[0].accumulated, set(&p, &["a", "c", "bot"]));
        let c = chain(3).unwrap();
        let pos = GamePosition::new(ElementSet::singleton(0), ElementSet::EMPTY);
        assert_eq!(
            respond(&c, pos, Move::Up(2), p33()).unwrap(),
            [GamePosition::new(ElementSet::from_elements([0, 2]), ElementSet::EMPTY)]
        );
        assert_eq!(respond(&c, pos, Move::Meet(ElementSet::singleton(2)), p33()), Err(Error::IllegalMove));
    }

    #[test]
    fn m3_survives_exactly_three_rounds() {
        let p = m3();
        let start = GamePosition::start(ix(&p, "a"), ix(&p, "b"));
        assert!(has_n_strategy(&p, start, p33(), 3));
        assert!(!has_n_strategy(&p, start, p33(), 4));
        assert!(!has_omega_strategy(&p, start, p33()));
        assert_eq!(survival_depth(&p, start, p33()), SurvivalDepth::Rounds(3));
        let a = ix(&p, "a");
        assert_eq!(survival_depth(&p, GamePosition::start(a, a), p33()), SurvivalDepth::Lost);
        assert!(!has_n_strategy(&p, GamePosition::start(a, a), p33(), 0));
    }

    #[test]
    fn forcing_trace_in_m3() {
        let p = m3();
        let game = Game::new(&p, p33());
        let trace = game.forcing_trace(GamePosition::start(ix(&p, "a"), ix(&p, "b"))).unwrap();
        assert_eq!(trace.len(), 4);
        assert_eq!(trace.last().unwrap().mv, Move::Up(ix(&p, "b")));
        assert_eq!(trace.last().unwrap().added, ix(&p, "b"));
    }

    #[test]
    fn hexagon_and_chain_have_omega_strategies() {
        let h = hexagon_witness();
        let start = GamePosition::start(ix(&h, "a"), ix(&h, "b"));
        assert!(has_omega_strategy(&h, start, p33()));
        assert_eq!(survival_depth(&h, start, p33()), SurvivalDepth::Omega);
        assert!(Game::new(&h, p33()).forcing_trace(start).is_none());
        let c = chain(2).unwrap();
        assert!(has_omega_strategy(&c, GamePosition::start(1, 0), p33()));
    }

    #[test]
    fn all_pairs_examples() {
        let p = m3();
        // (top, bot) falls in three rounds: join {a,b}, join {a,c}, then a meet of two atoms.
        let top_bot = GamePosition::start(ix(&p, "top"), ix(&p, "bot"));
        assert_eq!(survival_depth(&p, top_bot, p33()), SurvivalDepth::Rounds(2));
        assert!(all_pairs_n_strategy(&p, p33(), 2));
        assert!(!all_pairs_n_strategy(&p, p33(), 3));
        assert!(!all_pairs_n_strategy(&p, p33(), 4));
        let h = hexagon_witness();
        for n in [0, 1, 5, 10] {
            assert!(all_pairs_n_strategy(&h, p33(), n));
        }
    }

    #[test]
    fn game_representability_examples() {
        assert!(!game_representable(&m3(), p33()));
        assert!(game_representable(&hexagon_witness(), p33()));
        assert!(game_representable(&boolean(2).unwrap(), p33()));
    }

    #[test]
    fn stabilization_is_bounded_by_reachable_states() {
        let p = m3();
        let sol = Game::new(&p, p33()).solve(GamePosition::start(ix(&p, "a"), ix(&p, "b")));
        assert!(sol.stabilization_depth() <= sol.reachable());
        assert_eq!(sol.positions().next().map(|(_, d)| d), Some(SurvivalDepth::Rounds(3)));
    }
}
