use critshare::document::{
    message_digest, parse_rsa_pubkey, parse_rsa_share, parse_rsa_vks, parse_sig_share, parse_signature,
    rsa_pubkey_document, rsa_share_document, rsa_vks_document, sig_share_document, signature_document, Origin,
};
use critshare::rsa::{
    check_share, combine, keygen, sign_share, sign_share_randomized, verify_signature, Entropy, RsaPublicKey,
    RsaThresholdParams, ShareCheck, VerificationKeys,
};

use crate::args::{Context, KeyInput, RsaCommand};
use crate::failure::Failure;
use crate::io::{create_dir, emit, emit_to, message_bytes, read_doc};

fn load_keys(keys: &KeyInput) -> Result<(RsaPublicKey, VerificationKeys), Failure> {
    let pk = parse_rsa_pubkey(&read_doc(&keys.pubkey)?)?;
    let vks = parse_rsa_vks(&read_doc(&keys.vks)?)?;
    if vks.keys.len() != pk.players {
        return Err(Failure::validation("verification keys do not match the public key"));
    }
    Ok((pk, vks))
}

fn check_digest(expected: &str, message: &[u8]) -> Result<(), Failure> {
    if expected == message_digest(message) {
        Ok(())
    } else {
        Err(Failure::verification("document was produced for a different message"))
    }
}

pub fn run(cmd: RsaCommand, _ctx: &Context) -> Result<(), Failure> {
    match cmd {
        RsaCommand::Keygen {
            players,
            threshold,
            corrupted,
            bits,
            seed,
            entropy: _,
            out_dir,
        } => {
            let params = RsaThresholdParams::new(players, threshold, corrupted, bits)?;
            let (entropy, origin) = match seed {
                Some(s) => (Entropy::Seed(s), Origin::Seed(s)),
                None => (Entropy::System, Origin::EntropySystem),
            };
            let dealing = keygen(&params, &mut entropy.rng()?)?;
            create_dir(&out_dir)?;
            emit_to(&rsa_pubkey_document(&dealing.public, origin), &out_dir.join("pubkey.txt"))?;
            emit_to(&rsa_vks_document(&dealing.verification, origin), &out_dir.join("vks.txt"))?;
            for s in &dealing.shares {
                let doc = rsa_share_document(s, bits, origin);
                emit_to(&doc, &out_dir.join(format!("share-{}.txt", s.player)))?;
            }
            Ok(())
        }
        RsaCommand::SignShare {
            keys,
            share,
            message,
            nonce_seed,
            output,
        } => {
            let (pk, vks) = load_keys(&keys)?;
            let (secret, bits) = parse_rsa_share(&read_doc(&share)?)?;
            if bits != pk.modulus_bits {
                return Err(Failure::validation("share was made for a different modulus size"));
            }
            let msg = message_bytes(&message)?;
            let (sig, origin) = match nonce_seed {
                Some(s) => {
                    let mut rng = Entropy::Seed(s).rng()?;
                    (sign_share_randomized(&msg, &secret, &pk, &vks, &mut rng)?, Origin::Seed(s))
                }
                None => (sign_share(&msg, &secret, &pk, &vks)?, Origin::Derived),
            };
            emit(&sig_share_document(&sig, &msg, origin), output.out.as_deref())
        }
        RsaCommand::VerifyShare { keys, sig_share, message } => {
            let (pk, vks) = load_keys(&keys)?;
            let file = parse_sig_share(&read_doc(&sig_share)?)?;
            let msg = message_bytes(&message)?;
            check_digest(&file.message_digest, &msg)?;
            match check_share(&msg, &file.share, &pk, &vks) {
                ShareCheck::Valid => {
                    println!("valid");
                    Ok(())
                }
                ShareCheck::Malformed(why) => Err(Failure::verification(format!("malformed share: {why}"))),
                ShareCheck::ProofFailed => Err(Failure::verification("share proof does not verify")),
            }
        }
        RsaCommand::Combine {
            keys,
            sig_shares,
            message,
            output,
        } => {
            let (pk, vks) = load_keys(&keys)?;
            let msg = message_bytes(&message)?;
            let mut shares = Vec::new();
            for path in &sig_shares {
                let file = parse_sig_share(&read_doc(path)?)?;
                check_digest(&file.message_digest, &msg)?;
                shares.push(file.share);
            }
            let sig = combine(&msg, &shares, &pk, &vks)?;
            emit(&signature_document(&sig, &msg, Origin::Derived), output.out.as_deref())
        }
        RsaCommand::Verify {
            pubkey,
            signature,
            message,
        } => {
            let pk = parse_rsa_pubkey(&read_doc(&pubkey)?)?;
            let file = parse_signature(&read_doc(&signature)?)?;
            let msg = message_bytes(&message)?;
            check_digest(&file.message_digest, &msg)?;
            if verify_signature(&msg, &file.signature, &pk) {
                println!("valid");
                Ok(())
            } else {
                Err(Failure::verification("signature does not verify"))
            }
        }
    }
}
