//! Side-by-side security metrics for the two schemes.
//!
//! The Latin-square side measures how fast the completion count collapses
//! as shares leak, how strongly each declared critical set forces its
//! completion, and how often a single defector wins by picking one more
//! share. The RSA side runs end-to-end, quorum, tamper, replay and share-size
//! suites over a parameter matrix. [`compare`] turns both into named flags,
//! each pointing at the metric that raised it.

use std::fmt::Write as _;

use num_bigint::{BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use thiserror::Error;

use crate::access::{PlayerId, PlayerSet};
use crate::critical::{classify_forcing, greedy_critical_sets, Strength};
use crate::document::{rsa_share_document, Origin};
use crate::latin::{count_completions, random_latin_square, Budget, Count, LatinError, PartialLatinSquare};
use crate::lsss::{deal, simulate_attack, AttackReport, AttackStrategy, DealPolicy, LsssDeal, LsssError, Probability};
use crate::rsa::{
    combine, keygen, sign_share, verify_share, RsaError, RsaThresholdParams, SignatureShare, TEST_MODULUS_BITS,
};

/// Order from which Latin-square schemes are considered relatively secure.
pub const SECURE_ORDER: usize = 11;
/// Literature estimate of the completions of a leaked set at order 11. Cited,
/// never recomputed.
pub const ORDER_11_COMPLETIONS_ESTIMATE: u64 = 19_000_000;
/// Single-defector success probability at which the risk flag is raised.
pub const DEFECTOR_RISK: (u64, u64) = (1, 4);

/// Monte Carlo trials per attack in generated reports.
pub const ATTACK_TRIALS: u64 = 2_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("order {0} is outside the solver-feasible range 2..=7")]
    OrderOutOfRange(usize),
    #[error(transparent)]
    Latin(#[from] LatinError),
    #[error(transparent)]
    Lsss(#[from] LsssError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StrengthLabel {
    Strong,
    SemiStrong,
    Neither,
}

impl StrengthLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            StrengthLabel::Strong => "strong",
            StrengthLabel::SemiStrong => "semi-strong",
            StrengthLabel::Neither => "neither",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "strong" => Some(StrengthLabel::Strong),
            "semi-strong" => Some(StrengthLabel::SemiStrong),
            "neither" => Some(StrengthLabel::Neither),
            _ => None,
        }
    }

    pub fn is_forcing(&self) -> bool {
        *self != StrengthLabel::Neither
    }
}

impl From<&Strength> for StrengthLabel {
    fn from(s: &Strength) -> Self {
        match s {
            Strength::Strong(_) => StrengthLabel::Strong,
            Strength::SemiStrong(_) => StrengthLabel::SemiStrong,
            Strength::NeitherOrUnknown => StrengthLabel::Neither,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CriticalSetRecord {
    pub set: PartialLatinSquare,
    pub strength: StrengthLabel,
    /// Completion counts after revealing the first `k` triples of the set,
    /// for `k = 0..=size`.
    pub leak_curve: Vec<Count>,
}

impl CriticalSetRecord {
    pub fn size(&self) -> usize {
        self.set.len()
    }

    /// Exact counts never increase along the curve.
    pub fn leak_curve_is_monotone(&self) -> bool {
        let exact: Vec<u64> = self.leak_curve.iter().filter(|c| c.is_exact()).map(Count::value).collect();
        exact.windows(2).all(|w| w[1] <= w[0])
    }
}

/// One attack cell: `report` is `None` when the solver budget ran out.
#[derive(Clone, Debug, PartialEq)]
pub struct AttackEntry {
    pub known: PlayerSet,
    pub report: Option<AttackReport>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DealRecord {
    pub players: usize,
    pub critical_sets: Vec<CriticalSetRecord>,
    pub attacks: Vec<AttackEntry>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LsssSecurityReport {
    pub order: usize,
    pub seed: u64,
    pub deals: Vec<DealRecord>,
}

impl LsssSecurityReport {
    pub fn leak_curves_are_monotone(&self) -> bool {
        self.deals
            .iter()
            .flat_map(|d| &d.critical_sets)
            .all(CriticalSetRecord::leak_curve_is_monotone)
    }

    /// Highest exact single-defector success probability, with its location.
    pub fn worst_single_defector(&self) -> Option<(usize, usize, Probability)> {
        let mut worst: Option<(usize, usize, Probability)> = None;
        for (i, d) in self.deals.iter().enumerate() {
            for (j, a) in d.attacks.iter().enumerate() {
                let Some(p) = a.report.as_ref().and_then(|r| r.exact_probability) else { continue };
                if a.known.len() != 1 {
                    continue;
                }
                if worst.is_none_or(|(_, _, w)| p.as_f64() > w.as_f64()) {
                    worst = Some((i, j, p));
                }
            }
        }
        worst
    }
}

fn leak_curve(set: &PartialLatinSquare, budget: Budget) -> Result<Vec<Count>, LatinError> {
    let mut prefix = PartialLatinSquare::new(set.order())?;
    let mut curve = vec![count_completions(&prefix, budget)?];
    for t in set.iter() {
        prefix.insert(*t)?;
        curve.push(count_completions(&prefix, budget)?);
    }
    Ok(curve)
}

/// Strength, leak curve and single-defector attacks for one deal.
pub fn assess_deal(deal: &LsssDeal, trials: u64, seed: u64, budget: Budget) -> Result<DealRecord, AnalysisError> {
    let mut critical_sets = Vec::new();
    for set in deal.declared() {
        critical_sets.push(CriticalSetRecord {
            set: set.clone(),
            strength: StrengthLabel::from(&classify_forcing(set)),
            leak_curve: leak_curve(set, budget)?,
        });
    }
    let mut attacks = Vec::new();
    if deal.player_count() >= 2 {
        for p in deal.players().iter() {
            let known = PlayerSet::EMPTY.with(p);
            let attack_seed = seed ^ (u64::from(p.index()) << 32);
            let report = match simulate_attack(deal, known, AttackStrategy::PickOneRandom, trials, attack_seed, budget) {
                Ok(r) => Some(r),
                Err(LsssError::Latin(LatinError::BudgetExceeded { .. })) => None,
                Err(e) => return Err(e.into()),
            };
            attacks.push(AttackEntry { known, report });
        }
    }
    Ok(DealRecord {
        players: deal.player_count(),
        critical_sets,
        attacks,
    })
}

/// Two greedy critical sets of a fresh random square, dealt one per player.
pub fn generate_deal(order: usize, seed: u64, budget: Budget) -> Result<LsssDeal, AnalysisError> {
    let square = random_latin_square(order, seed)?;
    let sets = greedy_critical_sets(&square, 2, seed.rotate_left(17) ^ 0x5eed, budget)?;
    let pool: std::collections::BTreeSet<_> = sets.iter().flat_map(|s| s.iter().copied()).collect();
    Ok(deal(&square, &sets, pool.len(), DealPolicy::OnePerPlayer, seed, budget)?)
}

/// Generates `deal_count` deals of order `n` and assesses each.
pub fn run_lsss_security(order: usize, deal_count: usize, seed: u64, budget: Budget) -> Result<LsssSecurityReport, AnalysisError> {
    if !(2..=7).contains(&order) {
        return Err(AnalysisError::OrderOutOfRange(order));
    }
    let mut deals = Vec::with_capacity(deal_count);
    for i in 0..deal_count {
        let deal_seed = seed.wrapping_add(i as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        let d = generate_deal(order, deal_seed, budget)?;
        deals.push(assess_deal(&d, ATTACK_TRIALS, deal_seed, budget)?);
    }
    Ok(LsssSecurityReport { order, seed, deals })
}

/// Report for an existing set of deals, all of the same order.
pub fn run_lsss_security_on(deals: &[LsssDeal], seed: u64, budget: Budget) -> Result<LsssSecurityReport, AnalysisError> {
    let order = deals.first().map_or(0, LsssDeal::order);
    if let Some(d) = deals.iter().find(|d| d.order() != order) {
        return Err(AnalysisError::OrderOutOfRange(d.order()));
    }
    let deals = deals
        .iter()
        .enumerate()
        .map(|(i, d)| assess_deal(d, ATTACK_TRIALS, seed.wrapping_add(i as u64), budget))
        .collect::<Result<_, _>>()?;
    Ok(LsssSecurityReport { order, seed, deals })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellResults {
    pub end_to_end: bool,
    pub quorums_checked: usize,
    pub quorum_independent: bool,
    pub tamper_trials: usize,
    pub tamper_rejected: usize,
    pub replay_trials: usize,
    pub replay_rejected: usize,
    /// Combining with a tampered share was refused every time.
    pub combine_refused: bool,
    pub share_bytes: usize,
}

impl CellResults {
    pub fn passed(&self) -> bool {
        self.end_to_end
            && self.quorum_independent
            && self.tamper_rejected == self.tamper_trials
            && self.replay_rejected == self.replay_trials
            && self.combine_refused
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellOutcome {
    ParamViolation(String),
    Failed(String),
    Ran(CellResults),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RsaCell {
    pub params: RsaThresholdParams,
    pub outcome: CellOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RsaRobustnessReport {
    pub seed: u64,
    pub tampers_per_cell: usize,
    pub cells: Vec<RsaCell>,
    pub warnings: Vec<String>,
}

impl RsaRobustnessReport {
    fn ran(&self) -> impl Iterator<Item = (&RsaThresholdParams, &CellResults)> {
        self.cells.iter().filter_map(|c| match &c.outcome {
            CellOutcome::Ran(r) => Some((&c.params, r)),
            _ => None,
        })
    }

    /// `None` when no tampering was attempted.
    pub fn tamper_rejection_rate(&self) -> Option<f64> {
        let (trials, rejected) = self
            .ran()
            .fold((0, 0), |(t, r), (_, c)| (t + c.tamper_trials, r + c.tamper_rejected));
        (trials > 0).then(|| rejected as f64 / trials as f64)
    }

    /// Every cell that passed its parameter gate ran and passed.
    pub fn all_passed(&self) -> bool {
        self.cells.iter().all(|c| match &c.outcome {
            CellOutcome::ParamViolation(_) => true,
            CellOutcome::Failed(_) => false,
            CellOutcome::Ran(r) => r.passed(),
        })
    }

    /// `(players, modulus_bits, bytes)` for each cell that ran.
    pub fn share_sizes(&self) -> Vec<(usize, u64, usize)> {
        self.ran().map(|(p, r)| (p.players, p.modulus_bits, r.share_bytes)).collect()
    }

    /// Serialized share length depends only on the modulus size.
    pub fn share_size_constant(&self) -> bool {
        let sizes = self.share_sizes();
        sizes
            .iter()
            .all(|&(_, bits, bytes)| sizes.iter().filter(|s| s.1 == bits).all(|s| s.2 == bytes))
    }
}

/// `w ∈ {2, 3, 5}` with the largest tolerable `c` and `t = c + 1`.
pub fn default_matrix(modulus_bits: u64) -> Vec<RsaThresholdParams> {
    minimal_matrix(&[2, 3, 5], modulus_bits)
}

/// For each `w`, the largest tolerable `c` and the smallest valid `t = c + 1`.
pub fn minimal_matrix(players: &[usize], modulus_bits: u64) -> Vec<RsaThresholdParams> {
    players
        .iter()
        .map(|&w| {
            let c = w.saturating_sub(1) / 2;
            RsaThresholdParams {
                players: w,
                threshold: c + 1,
                corrupted: c,
                modulus_bits,
            }
        })
        .collect()
}

/// Every `t` for each `w` in `players`, with the largest `c` it tolerates.
pub fn full_matrix(players: &[usize], modulus_bits: u64) -> Vec<RsaThresholdParams> {
    players
        .iter()
        .flat_map(|&w| {
            (1..=w).map(move |t| RsaThresholdParams {
                players: w,
                threshold: t,
                corrupted: (t - 1).min(w - t),
                modulus_bits,
            })
        })
        .collect()
}

/// Every `t`-subset of `0..w` as index vectors, lexicographic.
pub fn subsets(w: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..t).collect();
    if t > w {
        return out;
    }
    loop {
        out.push(idx.clone());
        let Some(pos) = (0..t).rev().find(|&i| idx[i] != i + w - t) else {
            return out;
        };
        idx[pos] += 1;
        for j in pos + 1..t {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn random_square_unit<R: Rng>(n: &BigUint, rng: &mut R) -> BigUint {
    loop {
        let r = rng.gen_biguint_below(n);
        let u = r.modpow(&BigUint::from(2u32), n);
        if !u.is_one() && u.gcd(n).is_one() {
            return u;
        }
    }
}

fn run_cell(params: &RsaThresholdParams, tampers: usize, seed: u64) -> CellOutcome {
    if let Err(RsaError::ParamViolation(why)) = params.validate() {
        return CellOutcome::ParamViolation(why);
    }
    match run_checked_cell(params, tampers, seed) {
        Ok(r) => CellOutcome::Ran(r),
        Err(e) => CellOutcome::Failed(e.to_string()),
    }
}

fn run_checked_cell(params: &RsaThresholdParams, tampers: usize, seed: u64) -> Result<CellResults, RsaError> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let dealing = keygen(params, &mut rng)?;
    let (pk, vks) = (&dealing.public, &dealing.verification);
    let n = &pk.modulus;
    let message = format!("robustness w={} t={} seed={seed}", params.players, params.threshold).into_bytes();
    let other = [message.as_slice(), b"/replay"].concat();

    let shares: Vec<SignatureShare> = dealing
        .shares
        .iter()
        .map(|s| sign_share(&message, s, pk, vks))
        .collect::<Result<_, _>>()?;
    let honest_ok = shares.iter().all(|s| verify_share(&message, s, pk, vks));

    let mut signatures = Vec::new();
    let quorums = subsets(params.players, params.threshold);
    for q in &quorums {
        let chosen: Vec<SignatureShare> = q.iter().map(|&i| shares[i].clone()).collect();
        signatures.push(combine(&message, &chosen, pk, vks).ok());
    }
    let end_to_end = honest_ok && signatures.iter().all(Option::is_some);
    let quorum_independent = signatures.windows(2).all(|w| w[0] == w[1]);

    let mut tamper_rejected = 0;
    let mut combine_refused = true;
    for k in 0..tampers {
        let victim = rng.gen_range(0..shares.len());
        let mut bad = shares[victim].clone();
        bad.value = bad.value * random_square_unit(n, &mut rng) % n;
        if !verify_share(&message, &bad, pk, vks) {
            tamper_rejected += 1;
        }
        // put the tampered share into a quorum that includes its player
        let quorum = &quorums[k % quorums.len()];
        let mut chosen: Vec<SignatureShare> = quorum.iter().map(|&i| shares[i].clone()).collect();
        match chosen.iter().position(|s| s.player == bad.player) {
            Some(pos) => chosen[pos] = bad.clone(),
            None => chosen[0] = bad.clone(),
        }
        if combine(&message, &chosen, pk, vks) != Err(RsaError::InvalidShareIncluded(bad.player.index())) {
            combine_refused = false;
        }
    }

    let replay_rejected = shares.iter().filter(|s| !verify_share(&other, s, pk, vks)).count();

    let sizes: Vec<usize> = dealing
        .shares
        .iter()
        .map(|s| rsa_share_document(s, params.modulus_bits, Origin::Derived).emit().len())
        .collect();
    let share_bytes = sizes[0];
    let sizes_agree = sizes.iter().all(|&b| b == share_bytes);

    Ok(CellResults {
        end_to_end,
        quorums_checked: quorums.len(),
        quorum_independent: quorum_independent && sizes_agree,
        tamper_trials: tampers,
        tamper_rejected,
        replay_trials: shares.len(),
        replay_rejected,
        combine_refused,
        share_bytes,
    })
}

/// Runs every cell of `matrix`, spread over `threads` workers.
///
/// Cell `i` is seeded from `seed` and `i`, so the report does not depend on
/// the thread count.
pub fn run_rsa_robustness(matrix: &[RsaThresholdParams], tampers_per_cell: usize, seed: u64, threads: usize) -> RsaRobustnessReport {
    let threads = threads.max(1);
    let cell_seed = |i: usize| seed ^ (i as u64 + 1).wrapping_mul(0xa076_1d64_78bd_642f);
    let mut outcomes: Vec<Option<CellOutcome>> = vec![None; matrix.len()];
    std::thread::scope(|scope| {
        let chunk = matrix.len().div_ceil(threads).max(1);
        for (c, slot) in outcomes.chunks_mut(chunk).enumerate() {
            scope.spawn(move || {
                for (k, out) in slot.iter_mut().enumerate() {
                    let i = c * chunk + k;
                    *out = Some(run_cell(&matrix[i], tampers_per_cell, cell_seed(i)));
                }
            });
        }
    });
    let cells = matrix
        .iter()
        .zip(outcomes)
        .map(|(p, o)| RsaCell {
            params: *p,
            outcome: o.expect("every cell ran"),
        })
        .collect();
    let mut warnings = Vec::new();
    if tampers_per_cell == 0 {
        warnings.push("no tamperings requested: rejection rate is vacuous".to_string());
    }
    RsaRobustnessReport {
        seed,
        tampers_per_cell,
        cells,
        warnings,
    }
}

/// The default matrix with 128-bit test primes and 100 tamperings per cell.
pub fn run_default_rsa_robustness(seed: u64) -> RsaRobustnessReport {
    run_rsa_robustness(&default_matrix(TEST_MODULUS_BITS), 100, seed, 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FlagId {
    /// A declared critical set is strong or semi-strong.
    ForcingCriticalSet,
    /// The square is below [`SECURE_ORDER`].
    SmallOrder,
    /// One defector completes a critical set with probability at least 1/4.
    SingleDefector,
    /// Every threshold RSA suite passed.
    RsaRobust,
}

impl FlagId {
    pub const ALL: [FlagId; 4] = [
        FlagId::ForcingCriticalSet,
        FlagId::SmallOrder,
        FlagId::SingleDefector,
        FlagId::RsaRobust,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FlagId::ForcingCriticalSet => "forcing-critical-set",
            FlagId::SmallOrder => "small-order",
            FlagId::SingleDefector => "single-defector",
            FlagId::RsaRobust => "rsa-robust",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.as_str() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    pub id: FlagId,
    pub raised: bool,
    /// Path of the metric inside the sub-reports, with its value.
    pub metric: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonReport {
    pub lsss: LsssSecurityReport,
    pub rsa: RsaRobustnessReport,
    pub flags: Vec<Flag>,
}

impl ComparisonReport {
    pub fn flag(&self, id: FlagId) -> Option<&Flag> {
        self.flags.iter().find(|f| f.id == id)
    }

    pub fn is_raised(&self, id: FlagId) -> bool {
        self.flag(id).is_some_and(|f| f.raised)
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "Latin-square scheme, order {}", self.lsss.order);
        for (i, d) in self.lsss.deals.iter().enumerate() {
            let _ = writeln!(s, "  deal {i}: {} players", d.players);
            for c in &d.critical_sets {
                let curve: Vec<String> = c.leak_curve.iter().map(Count::to_string).collect();
                let _ = writeln!(
                    s,
                    "    critical set of size {} ({}), leak curve {}",
                    c.size(),
                    c.strength.as_str(),
                    curve.join(" -> ")
                );
            }
            for a in &d.attacks {
                match &a.report {
                    Some(r) => {
                        let exact = r.exact_probability.map_or("n/a".to_string(), |p| p.to_string());
                        let _ = writeln!(
                            s,
                            "    defector {}: exact {exact}, estimate {:.4} over {} trials",
                            a.known, r.estimated_probability, r.trials
                        );
                    }
                    None => {
                        let _ = writeln!(s, "    defector {}: budget exceeded", a.known);
                    }
                }
            }
        }
        let _ = writeln!(
            s,
            "  reference: at order {SECURE_ORDER} a leaked set is estimated to have at least {ORDER_11_COMPLETIONS_ESTIMATE} completions (not recomputed)"
        );
        let _ = writeln!(s, "Threshold RSA");
        for c in &self.rsa.cells {
            let status = match &c.outcome {
                CellOutcome::ParamViolation(why) => format!("rejected ({why})"),
                CellOutcome::Failed(why) => format!("FAILED ({why})"),
                CellOutcome::Ran(r) => format!(
                    "{} quorums, tamper {}/{}, replay {}/{}, share {} bytes: {}",
                    r.quorums_checked,
                    r.tamper_rejected,
                    r.tamper_trials,
                    r.replay_rejected,
                    r.replay_trials,
                    r.share_bytes,
                    if r.passed() { "pass" } else { "FAIL" }
                ),
            };
            let _ = writeln!(s, "  {}: {status}", c.params);
        }
        for w in &self.rsa.warnings {
            let _ = writeln!(s, "  warning: {w}");
        }
        let _ = writeln!(s, "Flags");
        for f in &self.flags {
            let _ = writeln!(
                s,
                "  [{}] {} ({})",
                if f.raised { "x" } else { " " },
                f.id.as_str(),
                f.metric
            );
        }
        s
    }
}

/// Derives the comparison flags from the two sub-reports.
pub fn compare(lsss: &LsssSecurityReport, rsa: &RsaRobustnessReport) -> ComparisonReport {
    let mut flags = Vec::new();

    let forcing = lsss.deals.iter().enumerate().find_map(|(i, d)| {
        d.critical_sets
            .iter()
            .position(|c| c.strength.is_forcing())
            .map(|j| (i, j, d.critical_sets[j].strength))
    });
    flags.push(Flag {
        id: FlagId::ForcingCriticalSet,
        raised: forcing.is_some(),
        metric: match forcing {
            Some((i, j, label)) => format!("lsss.deal[{i}].critical-set[{j}].strength={}", label.as_str()),
            None => format!(
                "lsss.critical-sets.forcing=0/{}",
                lsss.deals.iter().map(|d| d.critical_sets.len()).sum::<usize>()
            ),
        },
    });

    flags.push(Flag {
        id: FlagId::SmallOrder,
        raised: lsss.order < SECURE_ORDER,
        metric: format!("lsss.order={}", lsss.order),
    });

    let worst = lsss.worst_single_defector();
    let (num, den) = DEFECTOR_RISK;
    flags.push(Flag {
        id: FlagId::SingleDefector,
        raised: worst.is_some_and(|(_, _, p)| p.numerator() * den >= num * p.denominator()),
        metric: match worst {
            Some((i, j, p)) => format!("lsss.deal[{i}].attack[{j}].exact={p}"),
            None => "lsss.attacks.exact=none".to_string(),
        },
    });

    let rate = rsa.tamper_rejection_rate();
    flags.push(Flag {
        id: FlagId::RsaRobust,
        raised: rsa.all_passed() && rate.is_some_and(|r| r == 1.0) && rsa.share_size_constant(),
        metric: match rate {
            Some(r) => format!("rsa.tamper-rejection-rate={r}"),
            None => "rsa.tamper-rejection-rate=vacuous".to_string(),
        },
    });

    ComparisonReport {
        lsss: lsss.clone(),
        rsa: rsa.clone(),
        flags,
    }
}

/// Player `i` as a set, for callers building attack cells by hand.
pub fn single(player: u32) -> PlayerSet {
    PlayerId::new(player).map_or(PlayerSet::EMPTY, |p| PlayerSet::EMPTY.with(p))
}
