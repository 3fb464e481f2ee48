//! Latin-square secret sharing.
//!
//! The dealer keeps a Latin square as the key and publishes only its order.
//! The share pool is the union of several critical sets of the key, and each
//! player receives triples from the pool. Pooled triples reconstruct the key
//! by completion: any uniquely completable pool recovers it.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::access::{AccessError, AccessStructure, PlayerId, PlayerSet, MAX_PLAYERS};
use crate::critical::{is_critical_set, Criticality};
use crate::latin::{
    complete, count_completions, Budget, CompletionResult, Count, LatinError, LatinSquare,
    PartialLatinSquare, Triple,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LsssError {
    #[error("declared set #{0} is not a critical set of the secret square")]
    NotACriticalSet(usize),
    #[error("share pool has {pool} triples, not enough for {players} players")]
    TooFewShares { pool: usize, players: usize },
    #[error("share pool has {pool} triples but one-per-player needs exactly {players}")]
    TooManyShares { pool: usize, players: usize },
    #[error("triple {0} is assigned more than once")]
    DuplicateTriple(Triple),
    #[error("assignment does not match the share pool")]
    AssignmentMismatch,
    #[error("player count {0} is outside 1..={MAX_PLAYERS}")]
    PlayerCount(usize),
    #[error("unknown player {0}")]
    UnknownPlayer(u32),
    #[error("bad attack strategy: {0}")]
    BadStrategy(String),
    #[error(transparent)]
    Latin(#[from] LatinError),
    #[error(transparent)]
    Access(#[from] AccessError),
}

/// How the share pool is spread over players.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum DealPolicy {
    /// Each player receives exactly one triple.
    #[default]
    OnePerPlayer,
    /// All triples are dealt round-robin.
    Partition,
}

impl DealPolicy {
    pub fn as_str(&self) -> &'static str {
        match self {
            DealPolicy::OnePerPlayer => "one-per-player",
            DealPolicy::Partition => "partition",
        }
    }
}

impl FromStr for DealPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "one-per-player" => Ok(DealPolicy::OnePerPlayer),
            "partition" => Ok(DealPolicy::Partition),
            other => Err(format!("unknown deal policy `{other}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LsssDeal {
    secret: LatinSquare,
    share_pool: PartialLatinSquare,
    assignment: BTreeMap<PlayerId, BTreeSet<Triple>>,
    declared: Vec<PartialLatinSquare>,
    policy: DealPolicy,
}

fn verify_declared(
    secret: &LatinSquare,
    declared: &[PartialLatinSquare],
    budget: Budget,
) -> Result<PartialLatinSquare, LsssError> {
    let mut pool = PartialLatinSquare::new(secret.order())?;
    for (i, set) in declared.iter().enumerate() {
        if !secret.extends(set) {
            return Err(LsssError::NotACriticalSet(i));
        }
        match is_critical_set(set, budget)? {
            Criticality::Critical(cert) if cert.square == *secret => {}
            _ => return Err(LsssError::NotACriticalSet(i)),
        }
        for t in set.iter() {
            pool.insert(*t)?;
        }
    }
    Ok(pool)
}

/// Verifies every declared critical set and hands out the share pool.
///
/// The pool is shuffled with `seed` before assignment, so which player holds
/// which triple depends on the seed.
pub fn deal(
    secret: &LatinSquare,
    critical_sets: &[PartialLatinSquare],
    players: usize,
    policy: DealPolicy,
    seed: u64,
    budget: Budget,
) -> Result<LsssDeal, LsssError> {
    if players == 0 || players > MAX_PLAYERS {
        return Err(LsssError::PlayerCount(players));
    }
    let pool = verify_declared(secret, critical_sets, budget)?;
    let size = pool.len();
    if size < players {
        return Err(LsssError::TooFewShares {
            pool: size,
            players,
        });
    }
    if policy == DealPolicy::OnePerPlayer && size > players {
        return Err(LsssError::TooManyShares {
            pool: size,
            players,
        });
    }
    let mut triples: Vec<Triple> = pool.iter().copied().collect();
    triples.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut assignment: BTreeMap<PlayerId, BTreeSet<Triple>> = BTreeMap::new();
    for (i, t) in triples.into_iter().enumerate() {
        let player = PlayerId::new((i % players) as u32 + 1).expect("player count checked");
        assignment.entry(player).or_default().insert(t);
    }
    Ok(LsssDeal {
        secret: secret.clone(),
        share_pool: pool,
        assignment,
        declared: critical_sets.to_vec(),
        policy,
    })
}

impl LsssDeal {
    /// Rebuilds a deal from explicit parts, checking every invariant.
    pub fn from_parts(
        secret: LatinSquare,
        declared: Vec<PartialLatinSquare>,
        assignment: BTreeMap<PlayerId, BTreeSet<Triple>>,
        policy: DealPolicy,
        budget: Budget,
    ) -> Result<Self, LsssError> {
        let pool = verify_declared(&secret, &declared, budget)?;
        let players = assignment.len();
        if players == 0 || players > MAX_PLAYERS {
            return Err(LsssError::PlayerCount(players));
        }
        if let Some(p) = assignment.keys().find(|p| p.index() as usize > players) {
            return Err(LsssError::UnknownPlayer(p.index()));
        }
        let mut seen = BTreeSet::new();
        for t in assignment.values().flatten() {
            if !seen.insert(*t) {
                return Err(LsssError::DuplicateTriple(*t));
            }
        }
        if &seen != pool.entries() || assignment.values().any(BTreeSet::is_empty) {
            return Err(LsssError::AssignmentMismatch);
        }
        if policy == DealPolicy::OnePerPlayer && assignment.values().any(|s| s.len() != 1) {
            return Err(LsssError::AssignmentMismatch);
        }
        Ok(Self {
            secret,
            share_pool: pool,
            assignment,
            declared,
            policy,
        })
    }

    pub fn secret(&self) -> &LatinSquare {
        &self.secret
    }

    pub fn order(&self) -> usize {
        self.secret.order()
    }

    pub fn share_pool(&self) -> &PartialLatinSquare {
        &self.share_pool
    }

    pub fn assignment(&self) -> &BTreeMap<PlayerId, BTreeSet<Triple>> {
        &self.assignment
    }

    pub fn declared(&self) -> &[PartialLatinSquare] {
        &self.declared
    }

    pub fn policy(&self) -> DealPolicy {
        self.policy
    }

    pub fn player_count(&self) -> usize {
        self.assignment.len()
    }

    pub fn players(&self) -> PlayerSet {
        self.assignment.keys().copied().collect()
    }

    pub fn shares_of(&self, player: PlayerId) -> Option<&BTreeSet<Triple>> {
        self.assignment.get(&player)
    }

    /// Union of the triples held by `players`.
    pub fn pooled(&self, players: PlayerSet) -> PartialLatinSquare {
        let mut p = PartialLatinSquare::new(self.order()).expect("order already validated");
        for (id, triples) in &self.assignment {
            if players.contains(*id) {
                for t in triples {
                    p.insert(*t).expect("dealt triples fit the order");
                }
            }
        }
        p
    }

    /// Players holding at least one triple of `set`.
    pub fn holders(&self, set: &PartialLatinSquare) -> PlayerSet {
        self.assignment
            .iter()
            .filter(|(_, ts)| ts.iter().any(|t| set.contains(t)))
            .map(|(id, _)| *id)
            .collect()
    }

    /// The player-level access structure induced by the declared sets.
    pub fn access_structure(&self) -> Result<AccessStructure, LsssError> {
        let holders: Vec<PlayerSet> = self.declared.iter().map(|d| self.holders(d)).collect();
        Ok(AccessStructure::from_collection(self.player_count(), holders)?)
    }

    /// The pooled triples of `players` contain some declared critical set.
    pub fn is_authorized_shares(&self, players: PlayerSet) -> bool {
        let pooled = self.pooled(players);
        self.declared.iter().any(|d| d.is_subset(&pooled))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReconstructionOutcome {
    Recovered(LatinSquare),
    Ambiguous(Count),
    Inconsistent,
}

/// Completes pooled shares without reference to the deal.
pub fn reconstruct(pooled: &PartialLatinSquare, budget: Budget) -> Result<ReconstructionOutcome, LsssError> {
    Ok(match complete(pooled, budget)? {
        CompletionResult::Unique(square) => ReconstructionOutcome::Recovered(square),
        CompletionResult::Multiple(count) => ReconstructionOutcome::Ambiguous(count),
        CompletionResult::None => ReconstructionOutcome::Inconsistent,
    })
}

pub fn is_authorized_shares(deal: &LsssDeal, players: PlayerSet) -> bool {
    deal.is_authorized_shares(players)
}

/// Result of reconstructing from every subset of players.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AccessAudit {
    pub subsets_checked: usize,
    pub authorized_recovered: usize,
    pub unauthorized_ambiguous: usize,
    /// Rejected by the access test yet recovered the secret: the pool holds a
    /// critical set nobody declared.
    pub undeclared_critical: Vec<PlayerSet>,
    /// Authorized subsets that failed to recover the secret, or rejected
    /// subsets that produced something other than the secret or ambiguity.
    pub failures: Vec<(PlayerSet, ReconstructionOutcome)>,
}

impl AccessAudit {
    pub fn is_sound(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Reconstructs from every subset of players and cross-checks the access test.
pub fn audit_access(deal: &LsssDeal, budget: Budget) -> Result<AccessAudit, LsssError> {
    let w = deal.player_count();
    assert!(w <= 20, "exhaustive audit is limited to 20 players");
    let mut audit = AccessAudit::default();
    for bits in 0..1u64 << w {
        let players = PlayerSet::from_bits(bits);
        let outcome = reconstruct(&deal.pooled(players), budget)?;
        audit.subsets_checked += 1;
        let recovered = matches!(&outcome, ReconstructionOutcome::Recovered(sq) if sq == deal.secret());
        if deal.is_authorized_shares(players) {
            if recovered {
                audit.authorized_recovered += 1;
            } else {
                audit.failures.push((players, outcome));
            }
        } else if recovered {
            audit.undeclared_critical.push(players);
        } else if matches!(outcome, ReconstructionOutcome::Ambiguous(_)) {
            audit.unauthorized_ambiguous += 1;
        } else {
            audit.failures.push((players, outcome));
        }
    }
    Ok(audit)
}

/// Completion count of each pooled triple on its own; lower means the share
/// says more about the key.
pub fn rank_shares(deal: &LsssDeal, budget: Budget) -> Result<BTreeMap<Triple, Count>, LsssError> {
    let mut out = BTreeMap::new();
    for t in deal.share_pool().iter() {
        let single = PartialLatinSquare::from_triples(deal.order(), [*t])?;
        out.insert(*t, count_completions(&single, budget)?);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AttackStrategy {
    /// Obtain the shares of one uniformly chosen unknown player.
    PickOneRandom,
    /// Obtain the shares of two distinct uniformly chosen unknown players.
    PickPairRandom,
    /// Knowing where the unknown shares sit, choose one unknown player and
    /// guess a symbol for each of that player's cells uniformly from `1..=n`.
    GuessCellValues,
}

impl AttackStrategy {
    pub fn as_str(&self) -> &'static str {
        match self {
            AttackStrategy::PickOneRandom => "pick-one-random",
            AttackStrategy::PickPairRandom => "pick-pair-random",
            AttackStrategy::GuessCellValues => "guess-cell-values",
        }
    }
}

impl fmt::Display for AttackStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AttackStrategy {
    type Err = LsssError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pick-one-random" => Ok(AttackStrategy::PickOneRandom),
            "pick-pair-random" => Ok(AttackStrategy::PickPairRandom),
            "guess-cell-values" => Ok(AttackStrategy::GuessCellValues),
            other => Err(LsssError::BadStrategy(other.to_string())),
        }
    }
}

/// A reduced fraction in `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Probability {
    num: u64,
    den: u64,
}

impl Probability {
    pub fn new(num: u64, den: u64) -> Option<Self> {
        if den == 0 || num > den {
            return None;
        }
        let g = num.gcd(&den);
        Some(Self {
            num: num / g,
            den: den / g,
        })
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AttackReport {
    pub strategy: AttackStrategy,
    pub known: PlayerSet,
    pub trials: u64,
    pub successes: u64,
    pub estimated_probability: f64,
    pub exact_probability: Option<Probability>,
}

// Largest sample space enumerated for the exact probability.
const EXACT_LIMIT: u64 = 1_000_000;

struct Attack<'a> {
    deal: &'a LsssDeal,
    base: PartialLatinSquare,
    unknown: Vec<PlayerId>,
    budget: Budget,
    memo: HashMap<PartialLatinSquare, bool>,
}

impl Attack<'_> {
    fn succeeds(&mut self, extra: &[Triple]) -> Result<bool, LsssError> {
        let mut pool = self.base.clone();
        for t in extra {
            pool.insert(*t)?;
        }
        if let Some(&hit) = self.memo.get(&pool) {
            return Ok(hit);
        }
        let hit = matches!(
            reconstruct(&pool, self.budget)?,
            ReconstructionOutcome::Recovered(ref sq) if sq == self.deal.secret()
        );
        self.memo.insert(pool, hit);
        Ok(hit)
    }

    fn shares(&self, p: PlayerId) -> Vec<Triple> {
        self.deal.assignment[&p].iter().copied().collect()
    }

    /// Symbol guesses for `cells`, indexed `0..n^k`.
    fn guess(&self, p: PlayerId, mut index: u64) -> Vec<Triple> {
        let n = self.deal.order() as u64;
        self.shares(p)
            .iter()
            .map(|t| {
                let symbol = (index % n) as usize + 1;
                index /= n;
                Triple::new(t.row, t.col, symbol)
            })
            .collect()
    }

    fn guesses_per_player(&self, p: PlayerId) -> Option<u64> {
        (self.deal.order() as u64).checked_pow(self.deal.assignment[&p].len() as u32)
    }

    fn exact(&mut self, strategy: AttackStrategy) -> Result<Option<Probability>, LsssError> {
        let k = self.unknown.len() as u64;
        let unknown = self.unknown.clone();
        match strategy {
            AttackStrategy::PickOneRandom => {
                let mut hits = 0;
                for &p in &unknown {
                    hits += self.succeeds(&self.shares(p))? as u64;
                }
                Ok(Probability::new(hits, k))
            }
            AttackStrategy::PickPairRandom => {
                let mut hits = 0;
                for (i, &a) in unknown.iter().enumerate() {
                    for &b in &unknown[i + 1..] {
                        let mut extra = self.shares(a);
                        extra.extend(self.shares(b));
                        hits += self.succeeds(&extra)? as u64;
                    }
                }
                Ok(Probability::new(hits, k * (k - 1) / 2))
            }
            AttackStrategy::GuessCellValues => {
                let sizes: Option<Vec<u64>> = unknown.iter().map(|&p| self.guesses_per_player(p)).collect();
                let Some(sizes) = sizes else { return Ok(None) };
                if sizes.iter().sum::<u64>() > EXACT_LIMIT {
                    return Ok(None);
                }
                // Each player is chosen with probability 1/k, then each guess
                // with probability 1/size.
                let den = sizes.iter().fold(1u64, |acc, s| acc.lcm(s)).checked_mul(k);
                let Some(den) = den else { return Ok(None) };
                let mut num = 0u64;
                for (&p, &size) in unknown.iter().zip(&sizes) {
                    let mut hits = 0u64;
                    for g in 0..size {
                        hits += self.succeeds(&self.guess(p, g))? as u64;
                    }
                    num += hits * (den / k / size);
                }
                Ok(Probability::new(num, den))
            }
        }
    }

    fn sample(&mut self, strategy: AttackStrategy, rng: &mut ChaCha8Rng) -> Result<bool, LsssError> {
        match strategy {
            AttackStrategy::PickOneRandom => {
                let p = self.unknown[rng.gen_range(0..self.unknown.len())];
                self.succeeds(&self.shares(p))
            }
            AttackStrategy::PickPairRandom => {
                let pair: Vec<PlayerId> = self.unknown.choose_multiple(rng, 2).copied().collect();
                let mut extra = self.shares(pair[0]);
                extra.extend(self.shares(pair[1]));
                self.succeeds(&extra)
            }
            AttackStrategy::GuessCellValues => {
                let p = self.unknown[rng.gen_range(0..self.unknown.len())];
                let n = self.deal.order();
                let extra: Vec<Triple> = self
                    .shares(p)
                    .iter()
                    .map(|t| Triple::new(t.row, t.col, rng.gen_range(1..=n)))
                    .collect();
                self.succeeds(&extra)
            }
        }
    }
}

/// Estimates how often an intruder holding the shares of `known` recovers
/// the key under `strategy`.
///
/// If the known shares already reconstruct the key every strategy succeeds
/// with probability 1. Otherwise the exact probability is enumerated when
/// the sample space is small enough, next to a seeded Monte Carlo estimate.
pub fn simulate_attack(
    deal: &LsssDeal,
    known: PlayerSet,
    strategy: AttackStrategy,
    trials: u64,
    seed: u64,
    budget: Budget,
) -> Result<AttackReport, LsssError> {
    let dealt = deal.players();
    if let Some(p) = known.iter().find(|p| !dealt.contains(*p)) {
        return Err(LsssError::UnknownPlayer(p.index()));
    }
    let unknown: Vec<PlayerId> = dealt.iter().filter(|p| !known.contains(*p)).collect();
    let needed = if strategy == AttackStrategy::PickPairRandom { 2 } else { 1 };
    if unknown.len() < needed {
        return Err(LsssError::BadStrategy(format!(
            "{strategy} needs {needed} unknown player(s), {} left",
            unknown.len()
        )));
    }
    let mut attack = Attack {
        deal,
        base: deal.pooled(known),
        unknown,
        budget,
        memo: HashMap::new(),
    };
    if attack.succeeds(&[])? {
        return Ok(AttackReport {
            strategy,
            known,
            trials,
            successes: trials,
            estimated_probability: 1.0,
            exact_probability: Probability::new(1, 1),
        });
    }
    let exact = attack.exact(strategy)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut successes = 0;
    for _ in 0..trials {
        successes += attack.sample(strategy, &mut rng)? as u64;
    }
    Ok(AttackReport {
        strategy,
        known,
        trials,
        successes,
        estimated_probability: if trials == 0 {
            0.0
        } else {
            successes as f64 / trials as f64
        },
        exact_probability: exact,
    })
}

/// Ready-made deals used by tests, the analysis harness and the CLI.
pub mod fixtures {
    use super::*;

    fn partial(order: usize, triples: &[(usize, usize, usize)]) -> PartialLatinSquare {
        PartialLatinSquare::from_triples(order, triples.iter().map(|&(r, c, s)| Triple::new(r, c, s)))
            .expect("fixture triples fit the order")
    }

    fn player(i: u32) -> PlayerId {
        PlayerId::new(i).expect("fixture player ids are positive")
    }

    fn assign(by_player: &[(usize, usize, usize)]) -> BTreeMap<PlayerId, BTreeSet<Triple>> {
        by_player
            .iter()
            .enumerate()
            .map(|(i, &(r, c, s))| (player(i as u32 + 1), BTreeSet::from([Triple::new(r, c, s)])))
            .collect()
    }

    /// The order-3 back-circulant square.
    pub fn back_circulant_3() -> LatinSquare {
        LatinSquare::back_circulant(3).expect("order 3 is valid")
    }

    /// `{(1,1;1), (2,2;3)}`, a critical set of the back-circulant square.
    pub fn two_triple_set() -> PartialLatinSquare {
        partial(3, &[(1, 1, 1), (2, 2, 3)])
    }

    /// Two players, one triple each of [`two_triple_set`].
    pub fn two_triple_deal() -> LsssDeal {
        LsssDeal::from_parts(
            back_circulant_3(),
            vec![two_triple_set()],
            assign(&[(1, 1, 1), (2, 2, 3)]),
            DealPolicy::OnePerPlayer,
            Budget::unlimited(),
        )
        .expect("fixture is valid")
    }

    /// The order-2 square `[[1,2],[2,1]]` with its four singleton critical
    /// sets, one per player.
    pub fn four_singleton_deal() -> LsssDeal {
        let square = LatinSquare::from_rows(&[vec![1, 2], vec![2, 1]]).expect("valid square");
        let declared = square
            .triples()
            .map(|t| PartialLatinSquare::from_triples(2, [t]).expect("fits"))
            .collect();
        LsssDeal::from_parts(
            square,
            declared,
            assign(&[(1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1)]),
            DealPolicy::OnePerPlayer,
            Budget::unlimited(),
        )
        .expect("fixture is valid")
    }

    /// Player whose single share leaves exactly one winning pick among the
    /// other four in [`one_in_four_deal`].
    pub const ONE_IN_FOUR_DEFECTOR: u32 = 3;

    /// Five shares of the back-circulant order-3 square.
    ///
    /// Player 3 holds (2,2;3). Of the other four shares only player 1's
    /// (1,1;1) completes a critical set with it; pairing it with (1,2;2),
    /// (1,3;3) or (2,1;2) leaves two completions.
    pub fn one_in_four_deal() -> LsssDeal {
        let declared = vec![
            partial(3, &[(1, 1, 1), (2, 2, 3)]),
            partial(3, &[(1, 2, 2), (1, 3, 3), (2, 2, 3)]),
            partial(3, &[(1, 1, 1), (1, 2, 2), (2, 1, 2)]),
        ];
        LsssDeal::from_parts(
            back_circulant_3(),
            declared,
            assign(&[(1, 1, 1), (1, 2, 2), (2, 2, 3), (1, 3, 3), (2, 1, 2)]),
            DealPolicy::OnePerPlayer,
            Budget::unlimited(),
        )
        .expect("fixture is valid")
    }
}
