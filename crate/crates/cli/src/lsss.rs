use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use critshare::access::{PlayerId, PlayerSet};
use critshare::critical::greedy_critical_sets;
use critshare::document::{
    deal_public_document, parse_deal_public, parse_partial, parse_share, parse_square, pool_shares, rebuild_deal,
    report_document, share_document, square_document, DealPublic, Origin, ShareFile,
};
use critshare::latin::{random_latin_square, Budget, Count};
use critshare::lsss::{audit_access, deal, rank_shares, reconstruct, simulate_attack, LsssDeal, ReconstructionOutcome};

use crate::args::{parse_players, Context, DealInput, LsssCommand};
use crate::failure::Failure;
use crate::io::{create_dir, emit, emit_to, read_doc, read_docs};

fn read_shares(paths: &[PathBuf]) -> Result<Vec<ShareFile>, Failure> {
    read_docs(paths)?.iter().map(|d| parse_share(d).map_err(Failure::from)).collect()
}

fn load_deal(input: &DealInput, budget: Budget) -> Result<LsssDeal, Failure> {
    let public = parse_deal_public(&read_doc(&input.deal)?)?;
    let shares = read_shares(&input.shares)?;
    Ok(rebuild_deal(&public, &shares, budget)?)
}

fn player_set(spec: &str) -> Result<PlayerSet, Failure> {
    parse_players(spec)
        .map_err(Failure::usage)?
        .into_iter()
        .map(|i| PlayerId::new(i).ok_or_else(|| Failure::validation(format!("bad player index {i}"))))
        .collect()
}

fn players_value(set: PlayerSet) -> String {
    if set.is_empty() {
        "none".into()
    } else {
        set.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

pub fn share_path(dir: &Path, player: PlayerId) -> PathBuf {
    dir.join(format!("share-{player}.txt"))
}

pub fn run(cmd: LsssCommand, ctx: &Context) -> Result<(), Failure> {
    let budget = ctx.budget;
    match cmd {
        LsssCommand::Deal {
            square,
            order,
            sets,
            auto,
            players,
            policy,
            seed,
            out_dir,
            secret_out,
        } => {
            let secret = match (square, order) {
                (Some(path), _) => parse_square(&read_doc(&path)?)?,
                (None, Some(n)) => random_latin_square(n, seed)?,
                (None, None) => return Err(Failure::usage("--square or --order is required")),
            };
            let declared = if sets.is_empty() {
                greedy_critical_sets(&secret, auto.unwrap_or(1), seed, budget)?
            } else {
                read_docs(&sets)?
                    .iter()
                    .map(|d| parse_partial(d).map_err(Failure::from))
                    .collect::<Result<Vec<_>, _>>()?
            };
            let pool: BTreeSet<_> = declared.iter().flat_map(|s| s.iter().copied()).collect();
            let dealt = deal(&secret, &declared, players.unwrap_or(pool.len()), policy, seed, budget)?;
            create_dir(&out_dir)?;
            let public = DealPublic::of(&dealt)?;
            emit_to(&deal_public_document(&public, Origin::Seed(seed)), &out_dir.join("deal-public.txt"))?;
            for p in dealt.players().iter() {
                let doc = share_document(&dealt, p, Origin::Seed(seed)).expect("dealt player has shares");
                emit_to(&doc, &share_path(&out_dir, p))?;
            }
            if let Some(path) = secret_out {
                emit_to(&square_document(dealt.secret(), Origin::Seed(seed)), &path)?;
            }
            Ok(())
        }
        LsssCommand::Reconstruct {
            shares,
            square_out,
            output,
        } => {
            let files = read_shares(&shares)?;
            let pooled = pool_shares(&files)?;
            let holders: PlayerSet = files.iter().map(|f| f.player).collect();
            let outcome = reconstruct(&pooled, budget)?;
            let mut report = report_document("outcome", Origin::Derived);
            report.push("players", players_value(holders)).push("pooled", pooled.len());
            let result = match &outcome {
                ReconstructionOutcome::Recovered(square) => {
                    report.push("outcome", "recovered");
                    if let Some(path) = &square_out {
                        emit_to(&square_document(square, Origin::Derived), path)?;
                    }
                    Ok(())
                }
                ReconstructionOutcome::Ambiguous(count) => {
                    report.push("outcome", "ambiguous").push("completions", count);
                    Err(Failure::validation(format!("shares are not authorized: {count} completions")))
                }
                ReconstructionOutcome::Inconsistent => {
                    report.push("outcome", "inconsistent");
                    Err(Failure::validation("pooled shares have no completion"))
                }
            };
            emit(&report, output.out.as_deref())?;
            result
        }
        LsssCommand::Attack {
            input,
            known,
            strategy,
            trials,
            seed,
            output,
        } => {
            let dealt = load_deal(&input, budget)?;
            let known = player_set(&known)?;
            let r = simulate_attack(&dealt, known, strategy, trials, seed, budget)?;
            let mut report = report_document("attack", Origin::Seed(seed));
            report
                .push("strategy", r.strategy)
                .push("known", players_value(r.known))
                .push("trials", r.trials)
                .push("successes", r.successes)
                .push("estimate", r.estimated_probability)
                .push("exact", r.exact_probability.map_or("none".to_string(), |p| p.to_string()));
            emit(&report, output.out.as_deref())
        }
        LsssCommand::Rank { input, output } => {
            let dealt = load_deal(&input, budget)?;
            let mut ranking: Vec<_> = rank_shares(&dealt, budget)?.into_iter().collect();
            ranking.sort_by_key(|(t, c)| (matches!(c, Count::AtLeast(_)), c.value(), *t));
            let mut report = report_document("ranking", Origin::Derived);
            for (t, c) in ranking {
                report.push("share", format!("{} {} {} completions {c}", t.row, t.col, t.symbol));
            }
            emit(&report, output.out.as_deref())
        }
        LsssCommand::Audit { input, output } => {
            let dealt = load_deal(&input, budget)?;
            let audit = audit_access(&dealt, budget)?;
            let mut report = report_document("audit", Origin::Derived);
            report
                .push("subsets", audit.subsets_checked)
                .push("authorized-recovered", audit.authorized_recovered)
                .push("unauthorized-ambiguous", audit.unauthorized_ambiguous)
                .push("sound", if audit.is_sound() { "yes" } else { "no" });
            for s in &audit.undeclared_critical {
                report.push("undeclared-critical", players_value(*s));
            }
            for (s, _) in &audit.failures {
                report.push("failure", players_value(*s));
            }
            emit(&report, output.out.as_deref())?;
            if audit.is_sound() {
                Ok(())
            } else {
                Err(Failure::verification("access audit found silent failures"))
            }
        }
    }
}
