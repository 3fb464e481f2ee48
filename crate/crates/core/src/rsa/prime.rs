//! Miller-Rabin testing and safe-prime search over `BigUint`.

use std::sync::LazyLock;

use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, ToPrimitive, Zero};
use rand::RngCore;

const MR_ROUNDS: usize = 40;

static SMALL_PRIMES: LazyLock<Vec<u64>> = LazyLock::new(|| {
    const LIMIT: usize = 4096;
    let mut composite = vec![false; LIMIT];
    let mut primes = Vec::new();
    for i in 2..LIMIT {
        if !composite[i] {
            primes.push(i as u64);
            for j in (i * i..LIMIT).step_by(i) {
                composite[j] = true;
            }
        }
    }
    primes
});

pub fn small_primes() -> &'static [u64] {
    &SMALL_PRIMES
}

/// Probabilistic primality test: trial division, then Miller-Rabin with
/// random bases drawn from `rng`.
pub fn is_probable_prime<R: RngCore + ?Sized>(n: &BigUint, rng: &mut R) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for &p in small_primes() {
        let p_big = BigUint::from(p);
        if *n == p_big {
            return true;
        }
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().expect("n > 2 so n - 1 > 0");
    let d = &n_minus_one >> s;
    'witness: for _ in 0..MR_ROUNDS {
        let a = rng.gen_biguint_range(&two, &n_minus_one);
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_one {
                continue 'witness;
            }
            if x == one {
                return false;
            }
        }
        return false;
    }
    true
}

/// A random safe prime `p = 2q + 1` of exactly `bits` bits whose two top
/// bits are set, so the product of two such primes has exactly `2 * bits`
/// bits.
///
/// Candidates for `q` walk upward in steps of 6 from a random start with
/// `q = 5 (mod 6)`; residues modulo the small primes are tracked so that
/// Miller-Rabin only runs on candidates where neither `q` nor `p` has a small
/// factor.
pub fn gen_safe_prime<R: RngCore + ?Sized>(bits: u64, rng: &mut R) -> BigUint {
    assert!(bits >= 16, "safe primes below 16 bits are not supported");
    let q_bits = bits - 1;
    let primes = &small_primes()[2..]; // 2 and 3 are handled by the stepping
    loop {
        let mut q = rng.gen_biguint(q_bits);
        q.set_bit(q_bits - 1, true);
        q.set_bit(q_bits - 2, true);
        // round up to 5 mod 6
        let r = (&q % 6u32).to_u64().expect("small");
        q += (11 - r) % 6;
        let mut residues: Vec<u64> = primes.iter().map(|&p| (&q % p).to_u64().expect("small")).collect();
        let limit = BigUint::one() << q_bits;
        let mut offset = 0u64;
        while offset < 1 << 20 {
            let survivor = primes.iter().zip(&residues).all(|(&p, &rq)| {
                // q itself small-prime free, and p = 2q + 1 likewise
                rq != 0 && (2 * rq + 1) % p != 0
            });
            if survivor {
                let cand = &q + offset;
                if cand >= limit {
                    break;
                }
                if is_probable_prime(&cand, rng) {
                    let p = (&cand << 1u32) + 1u32;
                    if is_probable_prime(&p, rng) {
                        return p;
                    }
                }
            }
            offset += 6;
            for (r, &p) in residues.iter_mut().zip(primes) {
                *r = (*r + 6) % p;
            }
        }
    }
}

/// True when `p` and `(p - 1) / 2` are both probable primes.
pub fn is_safe_prime<R: RngCore + ?Sized>(p: &BigUint, rng: &mut R) -> bool {
    if p.is_zero() || !p.bit(0) {
        return false;
    }
    is_probable_prime(p, rng) && is_probable_prime(&(p >> 1u32), rng)
}
