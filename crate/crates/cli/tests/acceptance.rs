//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so every line is always printed. The
//! process exits non-zero if any criterion fails.

#[path = "../../core/tests/oracle/mod.rs"]
mod oracle;

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use critshare::access::{PlayerId, PlayerSet};
use critshare::analysis::{full_matrix, run_lsss_security_on, run_rsa_robustness, CellOutcome};
use critshare::critical::{classify_strength, find_critical_sets, greedy_critical_sets, is_critical_set, SearchLimits, Strength};
use critshare::document::{rsa_share_document, validate, Document, Kind, Origin};
use critshare::latin::{count_completions, random_latin_square, Budget, Count, LatinSquare, PartialLatinSquare, Triple};
use critshare::lsss::{
    audit_access, deal, fixtures, reconstruct, simulate_attack, AttackStrategy, DealPolicy, ReconstructionOutcome,
};
use critshare::rsa::{
    combine, keygen, sign_share, verify_share, verify_signature, RsaError, RsaThresholdParams, SignatureShare,
    TEST_MODULUS_BITS,
};
use num_bigint::{BigUint, RandBigInt};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::{ChaCha20Rng, ChaCha8Rng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {{
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    }};
}

fn partial(n: usize, triples: &[(usize, usize, usize)]) -> PartialLatinSquare {
    PartialLatinSquare::from_triples(n, triples.iter().map(|&(r, c, s)| Triple::new(r, c, s))).unwrap()
}

fn as_tuples(p: &PartialLatinSquare) -> Vec<(usize, usize, usize)> {
    p.iter().map(|t| (t.row, t.col, t.symbol)).collect()
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let took = start.elapsed();
    if took > limit {
        Err(format!("took {took:.1?}, limit {limit:?}"))
    } else {
        Ok(took)
    }
}

fn completion_counts() -> Outcome {
    let start = Instant::now();
    for (n, total) in [(1, 1), (2, 2), (3, 12), (4, 576)] {
        let empty = PartialLatinSquare::new(n).unwrap();
        let got = count_completions(&empty, Budget::unlimited()).map_err(|e| e.to_string())?;
        ensure!(got == Count::Exact(total), "order {n}: empty square has {got} completions, expected {total}");
        ensure!(oracle::all_squares(n).len() as u64 == total, "oracle disagrees on order {n} total");
    }
    let mut checked = 0;
    for n in 1..=3 {
        let squares = oracle::all_squares(n);
        for p in oracle::all_consistent_partials(n) {
            let expected = oracle::count_containing(&squares, n, &p);
            let got = count_completions(&partial(n, &p), Budget::unlimited()).unwrap();
            ensure!(got == Count::Exact(expected), "order {n} {p:?}: solver {got}, oracle {expected}");
            checked += 1;
        }
    }
    let squares = oracle::all_squares(4);
    let mut rng = ChaCha8Rng::seed_from_u64(0x4444);
    let mut random = 0;
    while random < 1_000 {
        let k = rng.gen_range(0..=10);
        let mut cells: Vec<usize> = (0..16).collect();
        cells.shuffle(&mut rng);
        let p: Vec<_> = if random % 2 == 0 {
            let sq = &squares[rng.gen_range(0..squares.len())];
            cells[..k].iter().map(|&c| (c / 4 + 1, c % 4 + 1, sq[c])).collect()
        } else {
            let mut out = Vec::new();
            for &c in &cells[..k] {
                out.push((c / 4 + 1, c % 4 + 1, rng.gen_range(1..=4)));
                if !oracle::consistent(&out) {
                    out.pop();
                }
            }
            out
        };
        let expected = oracle::count_containing(&squares, 4, &p);
        let got = count_completions(&partial(4, &p), Budget::unlimited()).unwrap();
        ensure!(got == Count::Exact(expected), "order 4 {p:?}: solver {got}, oracle {expected}");
        random += 1;
    }
    let took = within(Duration::from_secs(120), start)?;
    Ok(format!(
        "totals 1/2/12/576; {checked} exhaustive partials (orders 1-3) and {random} random order-4 partials match the oracle in {took:.1?}"
    ))
}

fn critical_fixtures() -> Outcome {
    let start = Instant::now();
    let b = Budget::unlimited();
    let order2 = partial(2, &[(1, 1, 1)]);
    let cert = is_critical_set(&order2, b).unwrap().certificate().ok_or("{(1,1;1)} is not critical at order 2")?;
    ensure!(cert.square == LatinSquare::from_rows(&[vec![1, 2], vec![2, 1]]).unwrap(), "wrong order-2 completion");
    ensure!(oracle::is_critical(&oracle::all_squares(2), 2, &[(1, 1, 1)]), "oracle rejects the order-2 fixture");

    let bc3 = LatinSquare::back_circulant(3).unwrap();
    let fixture = fixtures::two_triple_set();
    let cert = is_critical_set(&fixture, b).unwrap().certificate().ok_or("two-triple set is not critical")?;
    ensure!(cert.square == bc3, "two-triple set completes to the wrong square");
    ensure!(cert.verify(b).unwrap(), "certificate does not verify");
    ensure!(
        oracle::is_critical(&oracle::all_squares(3), 3, &as_tuples(&fixture)),
        "oracle rejects the two-triple set"
    );
    let strength = classify_strength(&fixture, b).map_err(|e| e.to_string())?;
    ensure!(matches!(strength, Strength::Strong(_)), "two-triple set classifies as {}", strength.label());

    let search = find_critical_sets(&bc3, 9, &SearchLimits::default()).unwrap();
    ensure!(search.exhaustive, "order-3 scan was not exhaustive");
    let min = search.sets.iter().map(|c| c.size()).min();
    ensure!(min == Some(2), "minimum critical set size {min:?}, expected 2");
    let squares = oracle::all_squares(3);
    let mut oracle_min = usize::MAX;
    for mask in 1u32..1 << 9 {
        let subset: Vec<_> = bc3.triples().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, t)| (t.row, t.col, t.symbol)).collect();
        if oracle::is_critical(&squares, 3, &subset) {
            oracle_min = oracle_min.min(subset.len());
        }
    }
    ensure!(oracle_min == 2, "oracle minimum is {oracle_min}");
    let took = within(Duration::from_secs(60), start)?;
    Ok(format!(
        "order-2 singleton critical; two-triple set critical and strong; minimum size 2 over {} critical sets ({took:.1?})",
        search.sets.len()
    ))
}

fn lsss_round_trip() -> Outcome {
    let start = Instant::now();
    let b = Budget::unlimited();
    let oracles: Vec<Vec<oracle::Flat>> = (0..=4).map(|n| if n == 0 { vec![] } else { oracle::all_squares(n) }).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x3333);
    let (mut deals, mut subsets, mut flagged) = (0, 0, 0);
    while deals < 240 {
        let n = 2 + deals % 3;
        let seed: u64 = rng.gen();
        let square = random_latin_square(n, seed).unwrap();
        let sets = greedy_critical_sets(&square, rng.gen_range(1..=3), seed, b).unwrap();
        let pool: BTreeSet<Triple> = sets.iter().flat_map(|s| s.iter().copied()).collect();
        let (policy, w) = if pool.len() <= 5 && rng.gen_bool(0.5) {
            (DealPolicy::OnePerPlayer, pool.len())
        } else {
            (DealPolicy::Partition, rng.gen_range(1..=pool.len().min(5)))
        };
        let d = deal(&square, &sets, w, policy, seed, b).map_err(|e| format!("deal failed: {e}"))?;
        let secret: oracle::Flat = square.to_rows().concat();
        let audit = audit_access(&d, b).unwrap();
        ensure!(audit.is_sound(), "audit of deal {deals} reports failures {:?}", audit.failures);
        for bits in 0u64..1 << w {
            let s = PlayerSet::from_bits(bits);
            let pooled = d.pooled(s);
            let t = as_tuples(&pooled);
            let completions = oracle::count_containing(&oracles[n], n, &t);
            let outcome = reconstruct(&pooled, b).unwrap();
            if d.is_authorized_shares(s) {
                ensure!(completions == 1 && oracle::contains(&secret, n, &t), "deal {deals}: authorized {s} does not determine the secret");
                ensure!(outcome == ReconstructionOutcome::Recovered(square.clone()), "deal {deals}: authorized {s} gave {outcome:?}");
            } else {
                match outcome {
                    ReconstructionOutcome::Ambiguous(Count::Exact(k)) if k == completions && k > 1 => {}
                    ReconstructionOutcome::Recovered(ref sq) if *sq == square && completions == 1 => {
                        ensure!(audit.undeclared_critical.contains(&s), "deal {deals}: rejected {s} recovered silently");
                        flagged += 1;
                    }
                    other => return Err(format!("deal {deals}: rejected {s} gave {other:?}, oracle {completions}")),
                }
            }
            subsets += 1;
        }
        deals += 1;
    }
    let took = within(Duration::from_secs(180), start)?;
    Ok(format!(
        "{deals} deals, {subsets} subsets, 0 silent failures, {flagged} undeclared-critical flags ({took:.1?})"
    ))
}

fn one_in_four() -> Outcome {
    let start = Instant::now();
    let d = fixtures::one_in_four_deal();
    ensure!(d.share_pool().len() == 5, "fixture has {} shares", d.share_pool().len());
    let known = PlayerSet::EMPTY.with(PlayerId::new(fixtures::ONE_IN_FOUR_DEFECTOR).unwrap());
    let r = simulate_attack(&d, known, AttackStrategy::PickOneRandom, 10_000, 0x1a4, Budget::unlimited())
        .map_err(|e| e.to_string())?;
    let exact = r.exact_probability.ok_or("no exact probability")?;
    ensure!((exact.numerator(), exact.denominator()) == (1, 4), "exact probability {exact}");
    let err = (r.estimated_probability - 0.25).abs();
    ensure!(err <= 0.013, "Monte Carlo estimate {} is {err:.4} from 1/4", r.estimated_probability);
    let report = run_lsss_security_on(&[fixtures::two_triple_deal()], 0, Budget::unlimited()).map_err(|e| e.to_string())?;
    let curve = &report.deals[0].critical_sets[0].leak_curve;
    ensure!(
        *curve == vec![Count::Exact(12), Count::Exact(4), Count::Exact(1)],
        "leak curve {curve:?}"
    );
    let took = within(Duration::from_secs(60), start)?;
    Ok(format!(
        "exact 1/4, estimate {:.4} over 10000 trials; leak curve 12 -> 4 -> 1; order-11 count not reproduced ({took:.1?})",
        r.estimated_probability
    ))
}

fn rsa_params() -> Vec<RsaThresholdParams> {
    full_matrix(&[2, 3, 5, 7], TEST_MODULUS_BITS)
}

fn quorums(w: usize, t: usize) -> Vec<Vec<usize>> {
    critshare::analysis::subsets(w, t)
}

fn rsa_end_to_end() -> Outcome {
    let start = Instant::now();
    let mut cells = 0;
    let mut combined = 0;
    for (i, p) in rsa_params().iter().enumerate() {
        let mut rng = ChaCha20Rng::seed_from_u64(500 + i as u64);
        let dealing = keygen(p, &mut rng).map_err(|e| format!("{p}: {e}"))?;
        let (pk, vks) = (&dealing.public, &dealing.verification);
        let msg = format!("end to end {p}").into_bytes();
        let shares: Vec<SignatureShare> = dealing.shares.iter().map(|s| sign_share(&msg, s, pk, vks).unwrap()).collect();
        let mut first = None;
        for q in quorums(p.players, p.threshold) {
            let chosen: Vec<_> = q.iter().map(|&j| shares[j].clone()).collect();
            let sig = combine(&msg, &chosen, pk, vks).map_err(|e| format!("{p} quorum {q:?}: {e}"))?;
            ensure!(verify_signature(&msg, &sig, pk), "{p} quorum {q:?}: signature does not verify");
            match &first {
                None => first = Some(sig),
                Some(f) => ensure!(*f == sig, "{p}: quorum {q:?} gives a different signature"),
            }
            combined += 1;
        }
        cells += 1;
    }
    let took = within(Duration::from_secs(300), start)?;
    Ok(format!("{cells} cells, {combined} quorums combined and verified, identical per run ({took:.1?})"))
}

fn rsa_robustness() -> Outcome {
    let start = Instant::now();
    let mut tampers = 0;
    let mut replays = 0;
    for (i, p) in rsa_params().iter().enumerate() {
        let mut rng = ChaCha20Rng::seed_from_u64(600 + i as u64);
        let dealing = keygen(p, &mut rng).unwrap();
        let (pk, vks) = (&dealing.public, &dealing.verification);
        let n = &pk.modulus;
        let msg = b"robustness".to_vec();
        let other = b"robustness, elsewhere".to_vec();
        let shares: Vec<SignatureShare> = dealing.shares.iter().map(|s| sign_share(&msg, s, pk, vks).unwrap()).collect();
        let qs = quorums(p.players, p.threshold);
        for k in 0..100 {
            let victim = rng.gen_range(0..shares.len());
            let factor = rng.gen_biguint_range(&BigUint::from(2u32), n);
            let mut bad = shares[victim].clone();
            bad.value = &bad.value * &factor % n;
            ensure!(bad.value != shares[victim].value, "{p}: tampering was a no-op");
            ensure!(!verify_share(&msg, &bad, pk, vks), "{p}: tampered share {k} accepted");
            let with_victim: Vec<&Vec<usize>> = qs.iter().filter(|q| q.contains(&victim)).collect();
            let q = with_victim[k % with_victim.len()];
            let chosen: Vec<_> = q.iter().map(|&j| if j == victim { bad.clone() } else { shares[j].clone() }).collect();
            let res = combine(&msg, &chosen, pk, vks);
            ensure!(
                res == Err(RsaError::InvalidShareIncluded(bad.player.index())),
                "{p}: combine with tampered share gave {res:?}"
            );
            tampers += 1;
        }
        for s in &shares {
            ensure!(!verify_share(&other, s, pk, vks), "{p}: share replayed on another message accepted");
            replays += 1;
        }
    }
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let report = run_rsa_robustness(&rsa_params(), 100, 0x66, threads);
    ensure!(report.all_passed(), "harness report has failing cells");
    ensure!(report.tamper_rejection_rate() == Some(1.0), "harness rejection rate {:?}", report.tamper_rejection_rate());
    for c in &report.cells {
        ensure!(matches!(c.outcome, CellOutcome::Ran(_)), "{} did not run", c.params);
    }
    let took = start.elapsed();
    Ok(format!(
        "{tampers} tamperings and {replays} replays rejected, combine refused every tampered quorum; harness agrees ({took:.1?})"
    ))
}

fn parameter_gate() -> Outcome {
    let start = Instant::now();
    let (mut rejected, mut accepted) = (0, 0);
    for w in 0..=7usize {
        for t in 0..=7usize {
            for c in 0..=7usize {
                let p = RsaThresholdParams {
                    players: w,
                    threshold: t,
                    corrupted: c,
                    modulus_bits: TEST_MODULUS_BITS,
                };
                let violates = !(t > c && w >= c + t) || w == 0;
                let mut rng = ChaCha20Rng::seed_from_u64((w * 64 + t * 8 + c) as u64);
                let res = keygen(&p, &mut rng);
                if violates {
                    ensure!(matches!(res, Err(RsaError::ParamViolation(_))), "{p} was not rejected");
                    ensure!(RsaThresholdParams::new(w, t, c, TEST_MODULUS_BITS).is_err(), "{p} accepted by new");
                    rejected += 1;
                } else {
                    ensure!(res.is_ok(), "{p} valid but keygen failed: {:?}", res.err());
                    accepted += 1;
                }
            }
        }
    }
    let took = start.elapsed();
    Ok(format!("{rejected} violating triples rejected at keygen, {accepted} valid triples accepted ({took:.1?})"))
}

fn share_size() -> Outcome {
    let mut summary = Vec::new();
    for bits in [TEST_MODULUS_BITS, 512] {
        let mut sizes = BTreeSet::new();
        for w in 2..=7usize {
            let c = (w - 1) / 2;
            let p = RsaThresholdParams::new(w, c + 1, c, bits).unwrap();
            let mut rng = ChaCha20Rng::seed_from_u64(800 + w as u64 + bits);
            let dealing = keygen(&p, &mut rng).unwrap();
            for s in &dealing.shares {
                sizes.insert(rsa_share_document(s, bits, Origin::Seed(0)).emit().len());
            }
        }
        ensure!(sizes.len() == 1, "{bits}-bit shares vary in size: {sizes:?}");
        summary.push(format!("{} bytes at {bits} bits", sizes.iter().next().unwrap()));
    }
    Ok(format!("serialized secret share is constant across w = 2..7: {}", summary.join(", ")))
}

struct Cli {
    bin: PathBuf,
    dir: PathBuf,
}

impl Cli {
    fn run(&self, args: &[&str]) -> Output {
        Command::new(&self.bin)
            .args(args)
            .current_dir(&self.dir)
            .env_remove("CRITSHARE_BUDGET")
            .output()
            .expect("binary runs")
    }

    fn ok(&self, args: &[&str]) -> Result<Output, String> {
        let out = self.run(args);
        ensure!(
            out.status.success(),
            "`{}` exited {:?}: {}",
            args.join(" "),
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        );
        Ok(out)
    }

    fn code(&self, args: &[&str]) -> Option<i32> {
        self.run(args).status.code()
    }

    fn write(&self, name: &str, text: &str) -> PathBuf {
        let p = self.dir.join(name);
        std::fs::write(&p, text).unwrap();
        p
    }
}

fn files_under(dir: &Path) -> Vec<PathBuf> {
    let mut out = Vec::new();
    for e in std::fs::read_dir(dir).unwrap() {
        let p = e.unwrap().path();
        if p.is_dir() {
            out.extend(files_under(&p));
        } else {
            out.push(p);
        }
    }
    out.sort();
    out
}

fn cli_round_trip() -> Outcome {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let cli = Cli {
        bin: PathBuf::from(env!("CARGO_BIN_EXE_critshare")),
        dir: tmp.path().to_path_buf(),
    };
    let docs = tmp.path().join("docs");
    std::fs::create_dir(&docs).unwrap();
    let d = |name: &str| format!("docs/{name}");
    cli.write(
        "docs/bc.txt",
        "format_version 1\nkind square\norigin derived\norder 3\nrow 1 2 3\nrow 2 3 1\nrow 3 1 2\n",
    );
    cli.ok(&["latin", "gen", "--order", "4", "--seed", "2", "--out", &d("gen.txt")])?;
    cli.ok(&["critical", "find", "--in", &d("bc.txt"), "--max-size", "2", "--sets-dir", &d("sets"), "--out", &d("found.txt")])?;
    let set = d("sets/set-1.txt");
    cli.ok(&["critical", "check", "--in", &set, "--out", &d("cert.txt")])?;
    cli.ok(&["critical", "classify", "--in", &set, "--out", &d("strength.txt")])?;
    cli.ok(&["latin", "count", "--in", &set, "--out", &d("count.txt")])?;
    cli.ok(&["lsss", "deal", "--square", &d("bc.txt"), "--set", &set, "--seed", "3", "--out-dir", &d("deal"), "--secret-out", &d("secret.txt")])?;
    let (dp, s1, s2) = (d("deal/deal-public.txt"), d("deal/share-1.txt"), d("deal/share-2.txt"));
    cli.ok(&["lsss", "reconstruct", "--share", &s1, "--share", &s2, "--square-out", &d("recovered.txt"), "--out", &d("outcome.txt")])?;
    let recovered = std::fs::read_to_string(tmp.path().join("docs/recovered.txt")).unwrap();
    ensure!(recovered.lines().skip(3).eq("order 3\nrow 1 2 3\nrow 2 3 1\nrow 3 1 2".lines()), "recovered square differs");
    let deal_args = ["--deal", &dp, "--share", &s1, "--share", &s2];
    cli.ok(&[&["lsss", "attack"][..], &deal_args, &["--known", "1", "--trials", "200", "--out", &d("attack.txt")]].concat())?;
    cli.ok(&[&["lsss", "rank"][..], &deal_args, &["--out", &d("rank.txt")]].concat())?;
    cli.ok(&[&["lsss", "audit"][..], &deal_args, &["--out", &d("audit.txt")]].concat())?;
    cli.ok(&["rsa", "keygen", "--players", "3", "--threshold", "2", "--corrupted", "1", "--bits", "256", "--seed", "9", "--out-dir", &d("rsa")])?;
    let keys = ["--pubkey", "docs/rsa/pubkey.txt", "--vks", "docs/rsa/vks.txt"];
    for i in 1..=3 {
        let share = format!("docs/rsa/share-{i}.txt");
        let out = format!("docs/sig-{i}.txt");
        cli.ok(&[&["rsa", "sign-share"][..], &keys, &["--share", &share, "--message", "m", "--out", &out]].concat())?;
    }
    cli.ok(&[&["rsa", "verify-share"][..], &keys, &["--sig-share", "docs/sig-2.txt", "--message", "m"]].concat())?;
    cli.ok(&[&["rsa", "combine"][..], &keys, &["--sig-share", "docs/sig-1.txt", "--sig-share", "docs/sig-3.txt", "--message", "m", "--out", &d("sig.txt")]].concat())?;
    cli.ok(&["rsa", "verify", "--pubkey", "docs/rsa/pubkey.txt", "--signature", &d("sig.txt"), "--message", "m"])?;
    cli.ok(&["analyze", "lsss", "--deal", &dp, "--share", &s1, "--share", &s2, "--out", &d("lsss-report.txt")])?;
    cli.ok(&["analyze", "rsa", "--players", "2,3", "--tampers", "5", "--out", &d("rsa-report.txt")])?;
    cli.ok(&["analyze", "compare", "--order", "3", "--deals", "1", "--players", "2", "--tampers", "5", "--out", &d("compare.txt")])?;

    let mut kinds = BTreeSet::new();
    let files = files_under(&docs);
    for f in &files {
        let text = std::fs::read_to_string(f).unwrap();
        let doc = validate(&text).map_err(|e| format!("{}: {e}", f.display()))?;
        ensure!(doc.emit() == text, "{} is not canonical", f.display());
        ensure!(Document::parse(&doc.emit()).unwrap() == doc, "{} does not round-trip", f.display());
        kinds.insert(doc.kind);
    }
    ensure!(kinds.len() == Kind::ALL.len(), "pipeline emitted only {kinds:?}");

    // scripted failures
    let outcome = cli.run(&["lsss", "reconstruct", "--share", &s1]);
    ensure!(outcome.status.code() == Some(2), "unauthorized reconstruct exited {:?}", outcome.status.code());
    let body = String::from_utf8_lossy(&outcome.stdout);
    ensure!(body.contains("outcome ambiguous\ncompletions 4\n"), "outcome document was {body:?}");
    cli.write("docs/empty6.txt", "format_version 1\nkind partial\norigin derived\norder 6\n");
    let blown = cli.code(&["latin", "count", "--in", "docs/empty6.txt", "--budget", "100"]);
    ensure!(blown == Some(3), "budget blowout exited {blown:?}");
    let env_blown = Command::new(&cli.bin)
        .args(["latin", "count", "--in", "docs/empty6.txt"])
        .current_dir(&cli.dir)
        .env("CRITSHARE_BUDGET", "100")
        .output()
        .unwrap()
        .status
        .code();
    ensure!(env_blown == Some(3), "CRITSHARE_BUDGET blowout exited {env_blown:?}");
    let sig = std::fs::read_to_string(tmp.path().join("docs/sig.txt")).unwrap();
    let forged: String = sig
        .lines()
        .map(|l| match l.strip_prefix("value ") {
            Some(v) => format!("value {}", (BigUint::parse_bytes(v.as_bytes(), 16).unwrap() + 1u32).to_str_radix(16)),
            None => l.to_string(),
        })
        .map(|l| l + "\n")
        .collect();
    cli.write("bad-sig.txt", &forged);
    let bad = cli.code(&["rsa", "verify", "--pubkey", "docs/rsa/pubkey.txt", "--signature", "bad-sig.txt", "--message", "m"]);
    ensure!(bad == Some(4), "bad signature exited {bad:?}");
    let wrong = cli.code(&["rsa", "verify", "--pubkey", "docs/rsa/pubkey.txt", "--signature", &d("sig.txt"), "--message", "n"]);
    ensure!(wrong == Some(4), "signature on another message exited {wrong:?}");
    let share = std::fs::read_to_string(tmp.path().join("docs/sig-2.txt")).unwrap();
    let tampered = share.replace("\nvalue ", "\nvalue 1");
    cli.write("bad-share.txt", &tampered);
    let refused = cli.code(&[&["rsa", "combine"][..], &keys, &["--sig-share", "docs/sig-1.txt", "--sig-share", "bad-share.txt", "--message", "m"]].concat());
    ensure!(refused == Some(4), "combine with a tampered share exited {refused:?}");
    let usage = cli.code(&["lsss", "frobnicate"]);
    ensure!(usage == Some(1), "usage error exited {usage:?}");
    let gate = cli.code(&["rsa", "keygen", "--players", "3", "--threshold", "1", "--corrupted", "1", "--bits", "256", "--seed", "1", "--out-dir", "x"]);
    ensure!(gate == Some(2), "parameter violation exited {gate:?}");
    Ok(format!(
        "{} documents of all {} kinds re-parse canonically; exit codes 2/3/3/4/4/4/1/2 on the failure matrix",
        files.len(),
        kinds.len()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("completion-count oracle equivalence", completion_counts),
        ("critical-set fixtures", critical_fixtures),
        ("LSSS round trip", lsss_round_trip),
        ("single defector 1 in 4", one_in_four),
        ("threshold RSA end to end", rsa_end_to_end),
        ("tamper and replay robustness", rsa_robustness),
        ("parameter gate", parameter_gate),
        ("share-size bound", share_size),
        ("CLI round trip and exit codes", cli_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".to_string()));
        match result {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
