//! Threshold RSA signatures with non-interactive share verification.
//!
//! A trusted dealer builds `N = pq` from safe primes `p = 2p' + 1` and
//! `q = 2q' + 1`, picks a prime exponent `e > w` and shares the secret
//! exponent `d = e^-1 mod p'q'` with a degree `t - 1` polynomial. With
//! `x = H(M)` and `Δ = w!`, player `i` publishes `x_i = x^(2Δ s_i)` together
//! with a Fiat-Shamir proof that `log_v v_i = log_(x^4Δ) x_i^2`. Any `t`
//! verified shares combine to the unique `y` with `y^e = x (mod N)`, which is
//! an ordinary RSA signature.
//!
//! Arithmetic is not constant time. This module is a laboratory, not a
//! signing service.

pub mod hash;
pub mod prime;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{CryptoRng, RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use thiserror::Error;

use crate::access::PlayerId;
use hash::{challenge, derive_nonce, hash_to_unit, CHALLENGE_BITS};
use prime::{gen_safe_prime, is_probable_prime};

/// Smallest modulus accepted, test mode only.
pub const MIN_MODULUS_BITS: u64 = 128;
/// Default modulus size.
pub const DEFAULT_MODULUS_BITS: u64 = 512;
/// Modulus size used by the test matrices: two 128-bit safe primes.
pub const TEST_MODULUS_BITS: u64 = 256;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RsaError {
    #[error("parameter violation: {0}")]
    ParamViolation(String),
    #[error("entropy source failed: {0}")]
    EntropyFailure(String),
    #[error("message hash shares a factor with the modulus")]
    FactorFound(BigUint),
    #[error("player {0} is not part of this key")]
    UnknownPlayer(u32),
    #[error("need {need} signature shares, got {got}")]
    TooFewShares { got: usize, need: usize },
    #[error("player {0} contributed more than one share")]
    DuplicatePlayer(u32),
    #[error("signature share from player {0} fails verification")]
    InvalidShareIncluded(u32),
    #[error("combined value is not a valid signature")]
    CombineFailed,
}

/// `w` players, `t` shares to sign, at most `c` corrupted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RsaThresholdParams {
    pub players: usize,
    pub threshold: usize,
    pub corrupted: usize,
    pub modulus_bits: u64,
}

impl RsaThresholdParams {
    pub fn new(players: usize, threshold: usize, corrupted: usize, modulus_bits: u64) -> Result<Self, RsaError> {
        let p = Self {
            players,
            threshold,
            corrupted,
            modulus_bits,
        };
        p.validate()?;
        Ok(p)
    }

    /// Checks `t >= c + 1`, `w - c >= t` and the modulus size.
    pub fn validate(&self) -> Result<(), RsaError> {
        let RsaThresholdParams {
            players: w,
            threshold: t,
            corrupted: c,
            modulus_bits,
        } = *self;
        if w == 0 || w > crate::access::MAX_PLAYERS {
            return Err(RsaError::ParamViolation(format!("player count {w} outside 1..=64")));
        }
        if t < c + 1 {
            return Err(RsaError::ParamViolation(format!("t = {t} < c + 1 = {}", c + 1)));
        }
        if w < c + t {
            return Err(RsaError::ParamViolation(format!("w - c = {} < t = {t}", w as i64 - c as i64)));
        }
        if modulus_bits < MIN_MODULUS_BITS || modulus_bits % 2 != 0 {
            return Err(RsaError::ParamViolation(format!(
                "modulus size {modulus_bits} must be even and at least {MIN_MODULUS_BITS}"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for RsaThresholdParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "w={} t={} c={} bits={}",
            self.players, self.threshold, self.corrupted, self.modulus_bits
        )
    }
}

/// Where keygen and randomized proofs draw randomness from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Entropy {
    Seed(u64),
    System,
}

impl Entropy {
    pub fn rng(self) -> Result<ChaCha20Rng, RsaError> {
        match self {
            Entropy::Seed(s) => Ok(ChaCha20Rng::seed_from_u64(s)),
            Entropy::System => {
                ChaCha20Rng::from_rng(rand::rngs::OsRng).map_err(|e| RsaError::EntropyFailure(e.to_string()))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RsaPublicKey {
    pub modulus: BigUint,
    pub exponent: BigUint,
    pub players: usize,
    pub threshold: usize,
    pub corrupted: usize,
    pub modulus_bits: u64,
}

impl RsaPublicKey {
    pub fn params(&self) -> RsaThresholdParams {
        RsaThresholdParams {
            players: self.players,
            threshold: self.threshold,
            corrupted: self.corrupted,
            modulus_bits: self.modulus_bits,
        }
    }

    /// `Δ = w!`.
    pub fn delta(&self) -> BigUint {
        factorial(self.players)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecretKeyShare {
    pub player: PlayerId,
    pub secret: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationKeys {
    /// A random square modulo `N`.
    pub generator: BigUint,
    /// `v^(s_i)` for player `i` at index `i - 1`.
    pub keys: Vec<BigUint>,
}

impl VerificationKeys {
    pub fn key(&self, player: PlayerId) -> Option<&BigUint> {
        self.keys.get(player.index() as usize - 1)
    }
}

/// Dealer-only values, kept so invariants can be re-checked in tests and
/// reports. Never serialized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DealerSecrets {
    pub p: BigUint,
    pub q: BigUint,
    /// `m = p'q'`, the order of the squares modulo `N`.
    pub m: BigUint,
    pub d: BigUint,
}

#[derive(Clone, Debug)]
pub struct Dealing {
    pub public: RsaPublicKey,
    pub shares: Vec<SecretKeyShare>,
    pub verification: VerificationKeys,
    pub dealer: DealerSecrets,
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

fn mod_inverse(a: &BigUint, n: &BigUint) -> Option<BigUint> {
    let a = BigInt::from(a.clone());
    let n_int = BigInt::from(n.clone());
    let g = a.extended_gcd(&n_int);
    if !g.gcd.is_one() {
        return None;
    }
    g.x.mod_floor(&n_int).to_biguint()
}

/// `base^exp mod n` for a signed exponent; `None` if `base` is not a unit.
fn pow_signed(base: &BigUint, exp: &BigInt, n: &BigUint) -> Option<BigUint> {
    let magnitude = exp.magnitude();
    if exp.sign() == Sign::Minus {
        Some(mod_inverse(base, n)?.modpow(magnitude, n))
    } else {
        Some(base.modpow(magnitude, n))
    }
}

fn smallest_prime_above<R: RngCore + ?Sized>(floor: u64, rng: &mut R) -> BigUint {
    let mut e = BigUint::from(floor.max(65_537));
    while !is_probable_prime(&e, rng) {
        e += 1u32;
    }
    e
}

/// The trusted dealer.
pub fn keygen<R: RngCore + CryptoRng>(params: &RsaThresholdParams, rng: &mut R) -> Result<Dealing, RsaError> {
    params.validate()?;
    let prime_bits = params.modulus_bits / 2;
    let e = smallest_prime_above(params.players as u64 + 1, rng);
    let (p, q) = loop {
        let p = gen_safe_prime(prime_bits, rng);
        let q = gen_safe_prime(prime_bits, rng);
        if p != q && p != e && q != e {
            break (p, q);
        }
    };
    let p1: BigUint = &p >> 1u32;
    let q1: BigUint = &q >> 1u32;
    let m = &p1 * &q1;
    let n = &p * &q;
    let d = mod_inverse(&e, &m).ok_or_else(|| RsaError::ParamViolation("e is not invertible modulo m".into()))?;

    let mut coeffs = vec![d.clone()];
    coeffs.extend((1..params.threshold).map(|_| rng.gen_biguint_below(&m)));
    let shares: Vec<SecretKeyShare> = (1..=params.players as u32)
        .map(|i| {
            let x = BigUint::from(i);
            let s = coeffs.iter().rev().fold(BigUint::zero(), |acc, a| (acc * &x + a) % &m);
            SecretKeyShare {
                player: PlayerId::new(i).expect("player index in range"),
                secret: s,
            }
        })
        .collect();

    let generator = loop {
        let r = rng.gen_biguint_range(&BigUint::from(2u32), &n);
        if r.gcd(&n).is_one() {
            let v = r.modpow(&BigUint::from(2u32), &n);
            if !v.is_one() {
                break v;
            }
        }
    };
    let keys = shares.iter().map(|s| generator.modpow(&s.secret, &n)).collect();

    Ok(Dealing {
        public: RsaPublicKey {
            modulus: n,
            exponent: e,
            players: params.players,
            threshold: params.threshold,
            corrupted: params.corrupted,
            modulus_bits: params.modulus_bits,
        },
        shares,
        verification: VerificationKeys { generator, keys },
        dealer: DealerSecrets { p, q, m, d },
    })
}

/// Fiat-Shamir proof of equal discrete logs: challenge and response.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShareProof {
    pub challenge: BigUint,
    pub response: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureShare {
    pub player: PlayerId,
    /// `H(M)^(2Δ s_i) mod N`.
    pub value: BigUint,
    pub proof: ShareProof,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature(pub BigUint);

/// How the proof nonce is chosen.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum NonceMode {
    /// Derived from the share and message; signing is reproducible.
    #[default]
    Deterministic,
    Randomized,
}

fn nonce_bits(pk: &RsaPublicKey) -> u64 {
    pk.modulus.bits() + 2 * CHALLENGE_BITS
}

fn proof_challenge(
    v: &BigUint,
    x_tilde: &BigUint,
    vi: &BigUint,
    xi_sq: &BigUint,
    v_commit: &BigUint,
    x_commit: &BigUint,
) -> BigUint {
    challenge(&[v, x_tilde, vi, xi_sq, v_commit, x_commit])
}

fn sign_with_nonce(
    message: &[u8],
    share: &SecretKeyShare,
    pk: &RsaPublicKey,
    vks: &VerificationKeys,
    nonce: BigUint,
) -> Result<SignatureShare, RsaError> {
    let n = &pk.modulus;
    let vi = vks.key(share.player).ok_or(RsaError::UnknownPlayer(share.player.index()))?;
    let x = hash_to_unit(message, n).map_err(RsaError::FactorFound)?;
    let delta = pk.delta();
    let value = x.modpow(&(BigUint::from(2u32) * &delta * &share.secret), n);
    let x_tilde = x.modpow(&(BigUint::from(4u32) * &delta), n);
    let xi_sq = value.modpow(&BigUint::from(2u32), n);
    let v_commit = vks.generator.modpow(&nonce, n);
    let x_commit = x_tilde.modpow(&nonce, n);
    let c = proof_challenge(&vks.generator, &x_tilde, vi, &xi_sq, &v_commit, &x_commit);
    let response = &share.secret * &c + nonce;
    Ok(SignatureShare {
        player: share.player,
        value,
        proof: ShareProof {
            challenge: c,
            response,
        },
    })
}

/// Signature share with a deterministic proof nonce.
pub fn sign_share(
    message: &[u8],
    share: &SecretKeyShare,
    pk: &RsaPublicKey,
    vks: &VerificationKeys,
) -> Result<SignatureShare, RsaError> {
    let nonce = derive_nonce(&share.secret, &pk.modulus, share.player.index(), message, nonce_bits(pk));
    sign_with_nonce(message, share, pk, vks, nonce)
}

/// Signature share with a proof nonce drawn from `rng`.
pub fn sign_share_randomized<R: RngCore + CryptoRng>(
    message: &[u8],
    share: &SecretKeyShare,
    pk: &RsaPublicKey,
    vks: &VerificationKeys,
    rng: &mut R,
) -> Result<SignatureShare, RsaError> {
    let nonce = rng.gen_biguint(nonce_bits(pk));
    sign_with_nonce(message, share, pk, vks, nonce)
}

/// Why a share was rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShareCheck {
    Valid,
    /// Out of range, not a unit, or from an unknown player.
    Malformed(&'static str),
    /// Well formed but the proof does not verify.
    ProofFailed,
}

/// Full diagnostic form of [`verify_share`].
pub fn check_share(message: &[u8], sig: &SignatureShare, pk: &RsaPublicKey, vks: &VerificationKeys) -> ShareCheck {
    let n = &pk.modulus;
    let Some(vi) = vks.key(sig.player) else {
        return ShareCheck::Malformed("unknown player");
    };
    if sig.player.index() as usize > pk.players {
        return ShareCheck::Malformed("unknown player");
    }
    if sig.value.is_zero() || sig.value >= *n || !sig.value.gcd(n).is_one() {
        return ShareCheck::Malformed("share value is not a unit modulo N");
    }
    if sig.proof.challenge.bits() > CHALLENGE_BITS {
        return ShareCheck::Malformed("challenge too large");
    }
    let Ok(x) = hash_to_unit(message, n) else {
        return ShareCheck::Malformed("message hash is not a unit");
    };
    let delta = pk.delta();
    let x_tilde = x.modpow(&(BigUint::from(4u32) * &delta), n);
    let xi_sq = sig.value.modpow(&BigUint::from(2u32), n);
    let neg_c = -BigInt::from(sig.proof.challenge.clone());
    let z = &sig.proof.response;
    let (Some(vi_c), Some(xi_c)) = (pow_signed(vi, &neg_c, n), pow_signed(&xi_sq, &neg_c, n)) else {
        return ShareCheck::Malformed("verification key is not a unit");
    };
    let v_commit = vks.generator.modpow(z, n) * vi_c % n;
    let x_commit = x_tilde.modpow(z, n) * xi_c % n;
    if proof_challenge(&vks.generator, &x_tilde, vi, &xi_sq, &v_commit, &x_commit) == sig.proof.challenge {
        ShareCheck::Valid
    } else {
        ShareCheck::ProofFailed
    }
}

/// Checks a signature share against public values only.
pub fn verify_share(message: &[u8], sig: &SignatureShare, pk: &RsaPublicKey, vks: &VerificationKeys) -> bool {
    check_share(message, sig, pk, vks) == ShareCheck::Valid
}

/// Integer Lagrange coefficients at 0 scaled by `Δ`, for the given players.
pub fn lagrange_at_zero(players: &[u32], delta: &BigUint) -> Vec<BigInt> {
    let delta = BigInt::from(delta.clone());
    players
        .iter()
        .map(|&j| {
            let (num, den) = players
                .iter()
                .filter(|&&k| k != j)
                .fold((delta.clone(), BigInt::one()), |(num, den), &k| {
                    (num * BigInt::from(k), den * (BigInt::from(k) - BigInt::from(j)))
                });
            debug_assert!((&num % &den).is_zero());
            num / den
        })
        .collect()
}

/// Combines `t` verified shares from distinct players into a signature.
///
/// Every supplied share is verified; the first `t` are combined. The result
/// is the unique `e`-th root of `H(M)`, so it does not depend on which
/// quorum produced it.
pub fn combine(
    message: &[u8],
    shares: &[SignatureShare],
    pk: &RsaPublicKey,
    vks: &VerificationKeys,
) -> Result<Signature, RsaError> {
    let t = pk.threshold;
    if shares.len() < t {
        return Err(RsaError::TooFewShares {
            got: shares.len(),
            need: t,
        });
    }
    let mut seen = BTreeSet::new();
    for s in shares {
        if !seen.insert(s.player) {
            return Err(RsaError::DuplicatePlayer(s.player.index()));
        }
    }
    for s in shares {
        if !verify_share(message, s, pk, vks) {
            return Err(RsaError::InvalidShareIncluded(s.player.index()));
        }
    }
    let n = &pk.modulus;
    let x = hash_to_unit(message, n).map_err(RsaError::FactorFound)?;
    let quorum = &shares[..t];
    let delta = pk.delta();
    let ids: Vec<u32> = quorum.iter().map(|s| s.player.index()).collect();
    let lambdas = lagrange_at_zero(&ids, &delta);
    let two = BigInt::from(2);
    let mut w = BigUint::one();
    for (s, lambda) in quorum.iter().zip(&lambdas) {
        let term = pow_signed(&s.value, &(&two * lambda), n).ok_or(RsaError::CombineFailed)?;
        w = w * term % n;
    }
    // w^e = x^(4Δ²); recover y with y^e = x from a·4Δ² + b·e = 1.
    let e_prime = BigInt::from(BigUint::from(4u32) * &delta * &delta);
    let e = BigInt::from(pk.exponent.clone());
    let g = e_prime.extended_gcd(&e);
    if !g.gcd.is_one() {
        return Err(RsaError::CombineFailed);
    }
    let wa = pow_signed(&w, &g.x, n).ok_or(RsaError::CombineFailed)?;
    let xb = pow_signed(&x, &g.y, n).ok_or(RsaError::CombineFailed)?;
    let y = wa * xb % n;
    let sig = Signature(y);
    if !verify_signature(message, &sig, pk) {
        return Err(RsaError::CombineFailed);
    }
    Ok(sig)
}

/// Standard RSA verification: `0 < y < N` and `y^e = H(M) (mod N)`.
pub fn verify_signature(message: &[u8], sig: &Signature, pk: &RsaPublicKey) -> bool {
    let n = &pk.modulus;
    if sig.0.is_zero() || sig.0 >= *n {
        return false;
    }
    match hash_to_unit(message, n) {
        Ok(x) => sig.0.modpow(&pk.exponent, n) == x,
        Err(_) => false,
    }
}
