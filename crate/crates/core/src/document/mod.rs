//! Line-delimited text documents for squares, deals, keys and reports.
//!
//! Every document opens with three header lines:
//!
//! ```text
//! format_version 1
//! kind partial
//! origin seed 7
//! ```
//!
//! followed by `key value` lines in a fixed order per kind. Parsing is
//! strict: anything that would not be emitted byte-for-byte again is
//! rejected, so `emit(parse(text)) == text` for every accepted input.

mod report;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::access::{PlayerId, PlayerSet};
use crate::latin::{complete, validate_square, Budget, CompletionResult, LatinError, LatinSquare, PartialLatinSquare, Triple};
use crate::lsss::{DealPolicy, LsssDeal, LsssError};
use crate::rsa::{RsaPublicKey, SecretKeyShare, ShareProof, Signature, SignatureShare, VerificationKeys};

pub use report::{
    comparison_document, lsss_report_document, report_document, report_subtype, rsa_report_document, REPORT_SUBTYPES,
};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DocumentError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("unsupported format version {0}")]
    UnsupportedVersion(String),
    #[error("unknown document kind `{0}`")]
    UnknownKind(String),
    #[error("expected a {expected} document, found {found}")]
    WrongKind { expected: Kind, found: Kind },
    #[error("missing field `{0}`")]
    MissingField(String),
    #[error("unexpected field `{0}`")]
    UnexpectedField(String),
    #[error("bad value for `{key}`: `{value}`")]
    BadValue { key: String, value: String },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Latin(#[from] LatinError),
    #[error(transparent)]
    Lsss(#[from] LsssError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Square,
    Partial,
    DealPublic,
    Share,
    RsaPubkey,
    RsaShare,
    RsaVks,
    SigShare,
    Signature,
    Report,
}

impl Kind {
    pub const ALL: [Kind; 10] = [
        Kind::Square,
        Kind::Partial,
        Kind::DealPublic,
        Kind::Share,
        Kind::RsaPubkey,
        Kind::RsaShare,
        Kind::RsaVks,
        Kind::SigShare,
        Kind::Signature,
        Kind::Report,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::Square => "square",
            Kind::Partial => "partial",
            Kind::DealPublic => "deal-public",
            Kind::Share => "share",
            Kind::RsaPubkey => "rsa-pubkey",
            Kind::RsaShare => "rsa-share",
            Kind::RsaVks => "rsa-vks",
            Kind::SigShare => "sig-share",
            Kind::Signature => "signature",
            Kind::Report => "report",
        }
    }

    /// Kinds that carry secret material.
    pub fn is_secret(&self) -> bool {
        matches!(self, Kind::Square | Kind::RsaShare)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = DocumentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Kind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| DocumentError::UnknownKind(s.to_string()))
    }
}

/// How the randomness behind a document was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    Seed(u64),
    EntropySystem,
    /// Computed from other documents without fresh randomness.
    Derived,
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::Seed(s) => write!(f, "seed {s}"),
            Origin::EntropySystem => f.write_str("entropy system"),
            Origin::Derived => f.write_str("derived"),
        }
    }
}

impl FromStr for Origin {
    type Err = DocumentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || DocumentError::BadValue {
            key: "origin".into(),
            value: s.into(),
        };
        match s {
            "entropy system" => Ok(Origin::EntropySystem),
            "derived" => Ok(Origin::Derived),
            _ => {
                let seed = s.strip_prefix("seed ").ok_or_else(bad)?;
                parse_decimal(seed).map(Origin::Seed).ok_or_else(bad)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    pub key: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub kind: Kind,
    pub origin: Origin,
    pub fields: Vec<Field>,
}

fn valid_key(key: &str) -> bool {
    !key.is_empty()
        && key.bytes().all(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || b == b'-')
        && !matches!(key, "format_version" | "kind" | "origin")
}

fn valid_value(value: &str) -> bool {
    !value.is_empty()
        && !value.starts_with(' ')
        && !value.ends_with(' ')
        && !value.contains("  ")
        && value.chars().all(|c| c == ' ' || c.is_ascii_graphic())
}

impl Document {
    pub fn new(kind: Kind, origin: Origin) -> Self {
        Self {
            kind,
            origin,
            fields: Vec::new(),
        }
    }

    /// Appends a field.
    ///
    /// # Panics
    /// If `key` or `value` is not in canonical form; callers build values
    /// from typed data, so this is a programming error.
    pub fn push(&mut self, key: &str, value: impl fmt::Display) -> &mut Self {
        let value = value.to_string();
        assert!(valid_key(key), "bad field key `{key}`");
        assert!(valid_value(&value), "bad value `{value}` for `{key}`");
        self.fields.push(Field {
            key: key.to_string(),
            value,
        });
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|f| f.key == key).map(|f| f.value.as_str())
    }

    pub fn get_all<'a>(&'a self, key: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.fields.iter().filter(move |f| f.key == key).map(|f| f.value.as_str())
    }

    pub fn emit(&self) -> String {
        let mut out = format!("format_version {FORMAT_VERSION}\nkind {}\norigin {}\n", self.kind, self.origin);
        for f in &self.fields {
            out.push_str(&f.key);
            out.push(' ');
            out.push_str(&f.value);
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let syntax = |line: usize, reason: &str| DocumentError::Syntax {
            line,
            reason: reason.to_string(),
        };
        let body = text.strip_suffix('\n').ok_or_else(|| syntax(0, "document must end with a newline"))?;
        let lines: Vec<&str> = body.split('\n').collect();
        let header = |i: usize, key: &str| -> Result<&str, DocumentError> {
            let line = lines.get(i).ok_or_else(|| DocumentError::MissingField(key.to_string()))?;
            line.strip_prefix(key)
                .and_then(|r| r.strip_prefix(' '))
                .ok_or_else(|| syntax(i + 1, &format!("expected `{key}`")))
        };
        let version = header(0, "format_version")?;
        if version != FORMAT_VERSION.to_string() {
            return Err(DocumentError::UnsupportedVersion(version.to_string()));
        }
        let kind: Kind = header(1, "kind")?.parse()?;
        let origin: Origin = header(2, "origin")?.parse()?;
        let mut doc = Document::new(kind, origin);
        for (i, line) in lines.iter().enumerate().skip(3) {
            let (key, value) = line.split_once(' ').ok_or_else(|| syntax(i + 1, "expected `key value`"))?;
            if !valid_key(key) {
                return Err(syntax(i + 1, "bad field key"));
            }
            if !valid_value(value) {
                return Err(syntax(i + 1, "value is not in canonical form"));
            }
            doc.fields.push(Field {
                key: key.to_string(),
                value: value.to_string(),
            });
        }
        Ok(doc)
    }

    pub fn expect_kind(&self, kind: Kind) -> Result<&Self, DocumentError> {
        if self.kind == kind {
            Ok(self)
        } else {
            Err(DocumentError::WrongKind {
                expected: kind,
                found: self.kind,
            })
        }
    }

    fn reader(&self, kind: Kind) -> Result<Reader<'_>, DocumentError> {
        self.expect_kind(kind)?;
        Ok(Reader {
            fields: &self.fields,
            pos: 0,
        })
    }
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.emit())
    }
}

/// Consumes fields in their canonical order.
struct Reader<'a> {
    fields: &'a [Field],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn next(&mut self, key: &str) -> Result<&'a str, DocumentError> {
        match self.fields.get(self.pos) {
            Some(f) if f.key == key => {
                self.pos += 1;
                Ok(&f.value)
            }
            _ => Err(DocumentError::MissingField(key.to_string())),
        }
    }

    fn many(&mut self, key: &str) -> Vec<&'a str> {
        let mut out = Vec::new();
        while let Some(f) = self.fields.get(self.pos).filter(|f| f.key == key) {
            out.push(f.value.as_str());
            self.pos += 1;
        }
        out
    }

    fn finish(self) -> Result<(), DocumentError> {
        match self.fields.get(self.pos) {
            Some(f) => Err(DocumentError::UnexpectedField(f.key.clone())),
            None => Ok(()),
        }
    }
}

fn bad(key: &str, value: &str) -> DocumentError {
    DocumentError::BadValue {
        key: key.to_string(),
        value: value.to_string(),
    }
}

/// Decimal without sign or leading zeros.
pub fn parse_decimal(s: &str) -> Option<u64> {
    let canonical = !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) && (s == "0" || !s.starts_with('0'));
    if canonical {
        s.parse().ok()
    } else {
        None
    }
}

fn decimal(key: &str, s: &str) -> Result<u64, DocumentError> {
    parse_decimal(s).ok_or_else(|| bad(key, s))
}

fn small(key: &str, s: &str) -> Result<usize, DocumentError> {
    usize::try_from(decimal(key, s)?).map_err(|_| bad(key, s))
}

fn decimals(key: &str, s: &str) -> Result<Vec<usize>, DocumentError> {
    s.split(' ').map(|t| small(key, t)).collect()
}

fn player(key: &str, s: &str) -> Result<PlayerId, DocumentError> {
    u32::try_from(decimal(key, s)?)
        .ok()
        .and_then(PlayerId::new)
        .ok_or_else(|| bad(key, s))
}

/// Lowercase hex without leading zeros; zero is `0`.
pub fn to_hex(n: &BigUint) -> String {
    n.to_str_radix(16)
}

pub fn parse_hex(s: &str) -> Option<BigUint> {
    let canonical = !s.is_empty()
        && s.bytes().all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(&b))
        && (s == "0" || !s.starts_with('0'));
    if canonical {
        BigUint::parse_bytes(s.as_bytes(), 16)
    } else {
        None
    }
}

/// Lowercase hex left-padded to exactly `digits` characters.
pub fn to_fixed_hex(n: &BigUint, digits: usize) -> String {
    let h = n.to_str_radix(16);
    assert!(h.len() <= digits, "value does not fit in {digits} hex digits");
    format!("{h:0>digits$}")
}

pub fn parse_fixed_hex(s: &str, digits: usize) -> Option<BigUint> {
    let canonical = s.len() == digits && s.bytes().all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(&b));
    if canonical {
        BigUint::parse_bytes(s.as_bytes(), 16)
    } else {
        None
    }
}

fn hex(key: &str, s: &str) -> Result<BigUint, DocumentError> {
    parse_hex(s).ok_or_else(|| bad(key, s))
}

/// SHA-256 of a message as 64 lowercase hex digits.
pub fn message_digest(message: &[u8]) -> String {
    Sha256::digest(message).iter().map(|b| format!("{b:02x}")).collect()
}

fn digest(key: &str, s: &str) -> Result<String, DocumentError> {
    let ok = s.len() == 64 && s.bytes().all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(&b));
    if ok {
        Ok(s.to_string())
    } else {
        Err(bad(key, s))
    }
}

fn join<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn triple_value(t: &Triple) -> String {
    format!("{} {} {}", t.row, t.col, t.symbol)
}

fn parse_triple(key: &str, s: &str) -> Result<Triple, DocumentError> {
    match decimals(key, s)?.as_slice() {
        &[r, c, v] => Ok(Triple::new(r, c, v)),
        _ => Err(bad(key, s)),
    }
}

/// Strictly increasing triples, the canonical order.
fn parse_triples(values: &[&str]) -> Result<Vec<Triple>, DocumentError> {
    let triples = values.iter().map(|v| parse_triple("triple", v)).collect::<Result<Vec<_>, _>>()?;
    if let Some(i) = (1..triples.len()).find(|&i| triples[i - 1] >= triples[i]) {
        return Err(bad("triple", values[i]));
    }
    Ok(triples)
}

pub fn square_document(square: &LatinSquare, origin: Origin) -> Document {
    let mut doc = Document::new(Kind::Square, origin);
    doc.push("order", square.order());
    for row in square.rows() {
        doc.push("row", join(row));
    }
    doc
}

pub fn parse_square(doc: &Document) -> Result<LatinSquare, DocumentError> {
    let mut r = doc.reader(Kind::Square)?;
    let order = small("order", r.next("order")?)?;
    let rows = r
        .many("row")
        .into_iter()
        .map(|v| decimals("row", v))
        .collect::<Result<Vec<_>, _>>()?;
    r.finish()?;
    if rows.len() != order {
        return Err(DocumentError::Invalid(format!("order {order} square has {} rows", rows.len())));
    }
    Ok(validate_square(&rows)?)
}

pub fn partial_document(partial: &PartialLatinSquare, origin: Origin) -> Document {
    let mut doc = Document::new(Kind::Partial, origin);
    doc.push("order", partial.order());
    for t in partial.iter() {
        doc.push("triple", triple_value(t));
    }
    doc
}

/// Parses a partial square; clashing triples are accepted here and left to
/// the consumer.
pub fn parse_partial(doc: &Document) -> Result<PartialLatinSquare, DocumentError> {
    let mut r = doc.reader(Kind::Partial)?;
    let order = small("order", r.next("order")?)?;
    let triples = parse_triples(&r.many("triple"))?;
    r.finish()?;
    Ok(PartialLatinSquare::from_triples(order, triples)?)
}

/// One player's LSSS share.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShareFile {
    pub player: PlayerId,
    pub shares: PartialLatinSquare,
}

pub fn share_document(deal: &LsssDeal, player: PlayerId, origin: Origin) -> Option<Document> {
    let triples = deal.shares_of(player)?;
    let mut doc = Document::new(Kind::Share, origin);
    doc.push("order", deal.order()).push("player", player);
    for t in triples {
        doc.push("triple", triple_value(t));
    }
    Some(doc)
}

pub fn parse_share(doc: &Document) -> Result<ShareFile, DocumentError> {
    let mut r = doc.reader(Kind::Share)?;
    let order = small("order", r.next("order")?)?;
    let player = player("player", r.next("player")?)?;
    let triples = parse_triples(&r.many("triple"))?;
    r.finish()?;
    if triples.is_empty() {
        return Err(DocumentError::MissingField("triple".into()));
    }
    Ok(ShareFile {
        player,
        shares: PartialLatinSquare::from_triples(order, triples)?,
    })
}

/// Everything about a deal except the symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DealPublic {
    pub order: usize,
    pub players: usize,
    pub policy: DealPolicy,
    /// `(player, row, col)` for every share position.
    pub holders: Vec<(PlayerId, usize, usize)>,
    /// Cell positions of each declared critical set.
    pub critical_sets: Vec<Vec<(usize, usize)>>,
    pub basis: Vec<PlayerSet>,
}

impl DealPublic {
    pub fn of(deal: &LsssDeal) -> Result<Self, LsssError> {
        let holders = deal
            .assignment()
            .iter()
            .flat_map(|(p, ts)| ts.iter().map(move |t| (*p, t.row, t.col)))
            .collect();
        let critical_sets = deal
            .declared()
            .iter()
            .map(|s| s.iter().map(|t| (t.row, t.col)).collect())
            .collect();
        Ok(Self {
            order: deal.order(),
            players: deal.player_count(),
            policy: deal.policy(),
            holders,
            critical_sets,
            basis: deal.access_structure()?.basis().to_vec(),
        })
    }
}

pub fn deal_public_document(public: &DealPublic, origin: Origin) -> Document {
    let mut doc = Document::new(Kind::DealPublic, origin);
    doc.push("order", public.order)
        .push("players", public.players)
        .push("policy", public.policy.as_str());
    for (p, r, c) in &public.holders {
        doc.push("holder", format!("{p} {r} {c}"));
    }
    for set in &public.critical_sets {
        doc.push("critical-set", join(set.iter().map(|(r, c)| format!("{r} {c}"))));
    }
    for b in &public.basis {
        doc.push("basis", join(b.iter()));
    }
    doc
}

pub fn parse_deal_public(doc: &Document) -> Result<DealPublic, DocumentError> {
    let mut r = doc.reader(Kind::DealPublic)?;
    let order = small("order", r.next("order")?)?;
    let players = small("players", r.next("players")?)?;
    let policy_str = r.next("policy")?;
    let policy = policy_str.parse().map_err(|_| bad("policy", policy_str))?;
    let mut holders = Vec::new();
    for v in r.many("holder") {
        match decimals("holder", v)?.as_slice() {
            &[p, row, col] => holders.push((player("holder", &p.to_string())?, row, col)),
            _ => return Err(bad("holder", v)),
        }
    }
    let mut critical_sets = Vec::new();
    for v in r.many("critical-set") {
        let nums = decimals("critical-set", v)?;
        if nums.len() % 2 != 0 {
            return Err(bad("critical-set", v));
        }
        critical_sets.push(nums.chunks(2).map(|c| (c[0], c[1])).collect());
    }
    let mut basis = Vec::new();
    for v in r.many("basis") {
        let ids = decimals("basis", v)?;
        let set: PlayerSet = ids
            .iter()
            .map(|&i| player("basis", &i.to_string()))
            .collect::<Result<_, _>>()?;
        if set.len() != ids.len() || join(set.iter()) != v {
            return Err(bad("basis", v));
        }
        basis.push(set);
    }
    r.finish()?;
    let public = DealPublic {
        order,
        players,
        policy,
        holders,
        critical_sets,
        basis,
    };
    if deal_public_document(&public, doc.origin) != *doc {
        return Err(DocumentError::Invalid("deal-public fields are not in canonical order".into()));
    }
    Ok(public)
}

/// Pools the triples of several share files. Players must be distinct.
pub fn pool_shares(files: &[ShareFile]) -> Result<PartialLatinSquare, DocumentError> {
    let order = files.first().map_or(0, |f| f.shares.order());
    let mut seen = BTreeSet::new();
    let mut pooled = PartialLatinSquare::new(order.max(1))?;
    for f in files {
        if f.shares.order() != order {
            return Err(DocumentError::Invalid("share files disagree on the order".into()));
        }
        if !seen.insert(f.player) {
            return Err(DocumentError::Invalid(format!("player {} appears twice", f.player)));
        }
        for t in f.shares.iter() {
            pooled.insert(*t)?;
        }
    }
    Ok(pooled)
}

/// Rebuilds a full deal from its public part and every player's share.
pub fn rebuild_deal(public: &DealPublic, files: &[ShareFile], budget: Budget) -> Result<LsssDeal, DocumentError> {
    let mut assignment: BTreeMap<PlayerId, BTreeSet<Triple>> = BTreeMap::new();
    for f in files {
        if f.shares.order() != public.order {
            return Err(DocumentError::Invalid(format!("share of player {} has the wrong order", f.player)));
        }
        if assignment.insert(f.player, f.shares.entries().clone()).is_some() {
            return Err(DocumentError::Invalid(format!("player {} appears twice", f.player)));
        }
    }
    if let Some(missing) = (1..=public.players as u32).filter_map(PlayerId::new).find(|p| !assignment.contains_key(p)) {
        return Err(DocumentError::Invalid(format!("every share is needed; player {missing} is missing")));
    }
    let positions: Vec<(PlayerId, usize, usize)> = assignment
        .iter()
        .flat_map(|(p, ts)| ts.iter().map(move |t| (*p, t.row, t.col)))
        .collect();
    if positions != public.holders {
        return Err(DocumentError::Invalid("shares do not match the published holder positions".into()));
    }
    let pool = pool_shares(files)?;
    let secret = match complete(&pool, budget)? {
        CompletionResult::Unique(sq) => sq,
        _ => return Err(DocumentError::Invalid("the full share pool does not determine a unique square".into())),
    };
    let declared = public
        .critical_sets
        .iter()
        .map(|cells| {
            PartialLatinSquare::from_triples(
                public.order,
                cells.iter().map(|&(r, c)| Triple::new(r, c, secret.get(r, c))),
            )
        })
        .collect::<Result<Vec<_>, _>>()?;
    for set in &declared {
        if !set.is_subset(&pool) {
            return Err(DocumentError::Invalid("a declared critical set lies outside the share pool".into()));
        }
    }
    let deal = LsssDeal::from_parts(secret, declared, assignment, public.policy, budget)?;
    if DealPublic::of(&deal)? != *public {
        return Err(DocumentError::Invalid("published basis does not match the rebuilt deal".into()));
    }
    Ok(deal)
}

pub fn rsa_pubkey_document(pk: &RsaPublicKey, origin: Origin) -> Document {
    let mut doc = Document::new(Kind::RsaPubkey, origin);
    doc.push("modulus", to_hex(&pk.modulus))
        .push("exponent", to_hex(&pk.exponent))
        .push("players", pk.players)
        .push("threshold", pk.threshold)
        .push("corrupted", pk.corrupted)
        .push("modulus-bits", pk.modulus_bits);
    doc
}

pub fn parse_rsa_pubkey(doc: &Document) -> Result<RsaPublicKey, DocumentError> {
    let mut r = doc.reader(Kind::RsaPubkey)?;
    let pk = RsaPublicKey {
        modulus: hex("modulus", r.next("modulus")?)?,
        exponent: hex("exponent", r.next("exponent")?)?,
        players: small("players", r.next("players")?)?,
        threshold: small("threshold", r.next("threshold")?)?,
        corrupted: small("corrupted", r.next("corrupted")?)?,
        modulus_bits: decimal("modulus-bits", r.next("modulus-bits")?)?,
    };
    r.finish()?;
    pk.params().validate().map_err(|e| DocumentError::Invalid(e.to_string()))?;
    if pk.modulus.bits() != pk.modulus_bits {
        return Err(DocumentError::Invalid("modulus length does not match modulus-bits".into()));
    }
    Ok(pk)
}

/// Hex digits used for a secret share at a given modulus size.
pub fn share_hex_digits(modulus_bits: u64) -> usize {
    2 * (modulus_bits as usize).div_ceil(8)
}

/// The secret is written at a fixed width set by the modulus size, so the
/// document length does not depend on the player count or the value.
pub fn rsa_share_document(share: &SecretKeyShare, modulus_bits: u64, origin: Origin) -> Document {
    let mut doc = Document::new(Kind::RsaShare, origin);
    doc.push("player", share.player)
        .push("modulus-bits", modulus_bits)
        .push("secret", to_fixed_hex(&share.secret, share_hex_digits(modulus_bits)));
    doc
}

pub fn parse_rsa_share(doc: &Document) -> Result<(SecretKeyShare, u64), DocumentError> {
    let mut r = doc.reader(Kind::RsaShare)?;
    let player = player("player", r.next("player")?)?;
    let bits = decimal("modulus-bits", r.next("modulus-bits")?)?;
    let s = r.next("secret")?;
    let secret = parse_fixed_hex(s, share_hex_digits(bits)).ok_or_else(|| bad("secret", s))?;
    r.finish()?;
    Ok((SecretKeyShare { player, secret }, bits))
}

pub fn rsa_vks_document(vks: &VerificationKeys, origin: Origin) -> Document {
    let mut doc = Document::new(Kind::RsaVks, origin);
    doc.push("generator", to_hex(&vks.generator));
    for (i, k) in vks.keys.iter().enumerate() {
        doc.push("key", format!("{} {}", i + 1, to_hex(k)));
    }
    doc
}

pub fn parse_rsa_vks(doc: &Document) -> Result<VerificationKeys, DocumentError> {
    let mut r = doc.reader(Kind::RsaVks)?;
    let generator = hex("generator", r.next("generator")?)?;
    let mut keys = Vec::new();
    for (i, v) in r.many("key").into_iter().enumerate() {
        let (idx, k) = v.split_once(' ').ok_or_else(|| bad("key", v))?;
        if decimal("key", idx)? != i as u64 + 1 {
            return Err(bad("key", v));
        }
        keys.push(hex("key", k)?);
    }
    r.finish()?;
    if keys.is_empty() {
        return Err(DocumentError::MissingField("key".into()));
    }
    Ok(VerificationKeys { generator, keys })
}

/// A signature share bound to the digest of its message.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigShareFile {
    pub message_digest: String,
    pub share: SignatureShare,
}

pub fn sig_share_document(share: &SignatureShare, message: &[u8], origin: Origin) -> Document {
    let mut doc = Document::new(Kind::SigShare, origin);
    doc.push("message-sha256", message_digest(message))
        .push("player", share.player)
        .push("value", to_hex(&share.value))
        .push("challenge", to_hex(&share.proof.challenge))
        .push("response", to_hex(&share.proof.response));
    doc
}

pub fn parse_sig_share(doc: &Document) -> Result<SigShareFile, DocumentError> {
    let mut r = doc.reader(Kind::SigShare)?;
    let message_digest = digest("message-sha256", r.next("message-sha256")?)?;
    let player = player("player", r.next("player")?)?;
    let value = hex("value", r.next("value")?)?;
    let challenge = hex("challenge", r.next("challenge")?)?;
    let response = hex("response", r.next("response")?)?;
    r.finish()?;
    Ok(SigShareFile {
        message_digest,
        share: SignatureShare {
            player,
            value,
            proof: ShareProof { challenge, response },
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureFile {
    pub message_digest: String,
    pub signature: Signature,
}

pub fn signature_document(sig: &Signature, message: &[u8], origin: Origin) -> Document {
    let mut doc = Document::new(Kind::Signature, origin);
    doc.push("message-sha256", message_digest(message)).push("value", to_hex(&sig.0));
    doc
}

pub fn parse_signature(doc: &Document) -> Result<SignatureFile, DocumentError> {
    let mut r = doc.reader(Kind::Signature)?;
    let message_digest = digest("message-sha256", r.next("message-sha256")?)?;
    let value = hex("value", r.next("value")?)?;
    r.finish()?;
    Ok(SignatureFile {
        message_digest,
        signature: Signature(value),
    })
}

/// Parses `text` and runs the typed decoder for its kind.
pub fn validate(text: &str) -> Result<Document, DocumentError> {
    let doc = Document::parse(text)?;
    match doc.kind {
        Kind::Square => parse_square(&doc).map(drop)?,
        Kind::Partial => parse_partial(&doc).map(drop)?,
        Kind::DealPublic => parse_deal_public(&doc).map(drop)?,
        Kind::Share => parse_share(&doc).map(drop)?,
        Kind::RsaPubkey => parse_rsa_pubkey(&doc).map(drop)?,
        Kind::RsaShare => parse_rsa_share(&doc).map(drop)?,
        Kind::RsaVks => parse_rsa_vks(&doc).map(drop)?,
        Kind::SigShare => parse_sig_share(&doc).map(drop)?,
        Kind::Signature => parse_signature(&doc).map(drop)?,
        Kind::Report => report_subtype(&doc).map(drop)?,
    }
    Ok(doc)
}
