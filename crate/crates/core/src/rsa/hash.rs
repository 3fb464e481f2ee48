//! Hashing into `Z*_N`, the proof challenge hash, and the canonical
//! transcript encoding they share.
//!
//! Transcript elements are encoded as a 4-byte big-endian length followed by
//! the big-endian magnitude with no leading zero bytes; zero is the empty
//! magnitude.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use sha2::{Digest, Sha256};

/// Bits in a proof challenge.
pub const CHALLENGE_BITS: u64 = 128;

const FDH_TAG: &[u8] = b"critshare/fdh/v1";
const CHALLENGE_TAG: &[u8] = b"critshare/dleq/v1";
const NONCE_TAG: &[u8] = b"critshare/nonce/v1";

/// Appends the canonical length-prefixed encoding of `x` to `out`.
pub fn encode_element(x: &BigUint, out: &mut Vec<u8>) {
    let bytes = if x.is_zero() { Vec::new() } else { x.to_bytes_be() };
    out.extend_from_slice(&(bytes.len() as u32).to_be_bytes());
    out.extend_from_slice(&bytes);
}

fn encode_bytes(bytes: &[u8], out: &mut Vec<u8>) {
    out.extend_from_slice(&(bytes.len() as u32).to_be_bytes());
    out.extend_from_slice(bytes);
}

pub fn encode_transcript(elements: &[&BigUint]) -> Vec<u8> {
    let mut out = Vec::new();
    for x in elements {
        encode_element(x, &mut out);
    }
    out
}

/// SHA-256 in counter mode over `prefix`, truncated to `len` bytes.
fn expand(prefix: &[u8], len: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(len + 32);
    let mut counter = 0u32;
    while out.len() < len {
        let mut h = Sha256::new();
        h.update(prefix);
        h.update(counter.to_be_bytes());
        out.extend_from_slice(&h.finalize());
        counter += 1;
    }
    out.truncate(len);
    out
}

/// Full-domain hash of `message` into `Z_N`.
///
/// Expands to 16 bytes more than `N` before reducing so the bias is
/// negligible. Returns `Err(factor)` with a nontrivial common factor when the
/// output is not a unit modulo `N` (including the zero output, which yields
/// `N` itself).
pub fn hash_to_unit(message: &[u8], n: &BigUint) -> Result<BigUint, BigUint> {
    let mut prefix = FDH_TAG.to_vec();
    encode_element(n, &mut prefix);
    encode_bytes(message, &mut prefix);
    let len = (n.bits() as usize).div_ceil(8) + 16;
    let x = BigUint::from_bytes_be(&expand(&prefix, len)) % n;
    let g = x.gcd(n);
    if g.is_one() {
        Ok(x)
    } else {
        Err(g)
    }
}

/// Fiat-Shamir challenge over the canonical transcript of `elements`.
pub fn challenge(elements: &[&BigUint]) -> BigUint {
    let mut h = Sha256::new();
    h.update(CHALLENGE_TAG);
    h.update(encode_transcript(elements));
    let digest = h.finalize();
    BigUint::from_bytes_be(&digest[..(CHALLENGE_BITS / 8) as usize])
}

/// Deterministic proof nonce below `2^bits`, derived from the share secret,
/// the modulus, the player index and the message.
pub fn derive_nonce(secret: &BigUint, n: &BigUint, player: u32, message: &[u8], bits: u64) -> BigUint {
    let mut prefix = NONCE_TAG.to_vec();
    encode_element(secret, &mut prefix);
    encode_element(n, &mut prefix);
    encode_element(&BigUint::from(player), &mut prefix);
    encode_bytes(message, &mut prefix);
    let bytes = expand(&prefix, bits.div_ceil(8) as usize);
    let x = BigUint::from_bytes_be(&bytes);
    let excess = bytes.len() as u64 * 8 - bits;
    x >> excess
}
