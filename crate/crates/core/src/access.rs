//! Monotone access structures over a small set of players.
//!
//! An access structure is stored through its basis: the minimal authorized
//! subsets. A set of players is authorized when it contains some basis
//! element.

use std::fmt;

use thiserror::Error;

/// Largest player count a [`PlayerSet`] bitmask can hold.
pub const MAX_PLAYERS: usize = 64;

/// A 1-based player index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlayerId(u32);

impl PlayerId {
    /// `index` must be at least 1.
    pub fn new(index: u32) -> Option<Self> {
        (index >= 1 && index as usize <= MAX_PLAYERS).then_some(Self(index))
    }

    pub fn index(self) -> u32 {
        self.0
    }
}

impl fmt::Display for PlayerId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A subset of players as a bitmask; bit `i - 1` is player `i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlayerSet(u64);

impl PlayerSet {
    pub const EMPTY: PlayerSet = PlayerSet(0);

    pub fn from_bits(bits: u64) -> Self {
        Self(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// Players `1..=w`.
    pub fn all(w: usize) -> Self {
        if w >= 64 {
            Self(u64::MAX)
        } else {
            Self((1u64 << w) - 1)
        }
    }

    pub fn with(self, p: PlayerId) -> Self {
        Self(self.0 | 1 << (p.0 - 1))
    }

    pub fn contains(self, p: PlayerId) -> bool {
        self.0 >> (p.0 - 1) & 1 == 1
    }

    pub fn is_subset(self, other: PlayerSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: PlayerSet) -> Self {
        Self(self.0 | other.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Highest player index present, 0 for the empty set.
    pub fn max_index(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = PlayerId> {
        (0..64u32)
            .filter(move |i| self.0 >> i & 1 == 1)
            .map(|i| PlayerId(i + 1))
    }
}

impl FromIterator<PlayerId> for PlayerSet {
    fn from_iter<I: IntoIterator<Item = PlayerId>>(iter: I) -> Self {
        iter.into_iter().fold(PlayerSet::EMPTY, PlayerSet::with)
    }
}

impl fmt::Display for PlayerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", ids.join(","))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AccessError {
    #[error("threshold parameters need 1 <= t <= w (got t={t}, w={w})")]
    BadParams { t: usize, w: usize },
    #[error("player count {0} is outside 1..={MAX_PLAYERS}")]
    PlayerCount(usize),
    #[error("basis element {set} is empty or names a player above {w}")]
    BadBasisElement { set: PlayerSet, w: usize },
}

/// `t` of `w` players are required.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThresholdParams {
    t: usize,
    w: usize,
}

impl ThresholdParams {
    pub fn new(t: usize, w: usize) -> Result<Self, AccessError> {
        if w > MAX_PLAYERS {
            return Err(AccessError::PlayerCount(w));
        }
        if t < 1 || t > w {
            return Err(AccessError::BadParams { t, w });
        }
        Ok(Self { t, w })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn w(&self) -> usize {
        self.w
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AccessStructure {
    player_count: usize,
    basis: Vec<PlayerSet>,
    threshold: Option<usize>,
}

impl AccessStructure {
    /// Builds the structure generated by `collection`, reduced to its
    /// minimal elements.
    pub fn from_collection<I>(player_count: usize, collection: I) -> Result<Self, AccessError>
    where
        I: IntoIterator<Item = PlayerSet>,
    {
        if player_count > MAX_PLAYERS {
            return Err(AccessError::PlayerCount(player_count));
        }
        let all = PlayerSet::all(player_count);
        let sets: Vec<PlayerSet> = collection.into_iter().collect();
        if let Some(&set) = sets.iter().find(|s| s.is_empty() || !s.is_subset(all)) {
            return Err(AccessError::BadBasisElement {
                set,
                w: player_count,
            });
        }
        Ok(Self {
            player_count,
            basis: basis_of(&sets),
            threshold: None,
        })
    }

    pub fn player_count(&self) -> usize {
        self.player_count
    }

    /// Minimal authorized subsets, sorted by bitmask.
    pub fn basis(&self) -> &[PlayerSet] {
        &self.basis
    }

    /// `Some(t)` for a threshold structure.
    pub fn threshold(&self) -> Option<usize> {
        self.threshold
    }

    pub fn is_authorized(&self, set: PlayerSet) -> bool {
        match self.threshold {
            Some(t) => set.is_subset(PlayerSet::all(self.player_count)) && set.len() >= t,
            None => self.basis.iter().any(|b| b.is_subset(set)),
        }
    }

    /// Every authorized subset of `{1..w}`. Exponential in `w`.
    pub fn closure(&self) -> Vec<PlayerSet> {
        assert!(self.player_count <= 24, "closure is only enumerable for small w");
        (0..1u64 << self.player_count)
            .map(PlayerSet)
            .filter(|&s| self.is_authorized(s))
            .collect()
    }
}

/// The `(t, w)` threshold structure: basis is every `t`-subset of `{1..w}`.
pub fn threshold_structure(t: usize, w: usize) -> Result<AccessStructure, AccessError> {
    let params = ThresholdParams::new(t, w)?;
    let mut basis = Vec::new();
    let mut idx: Vec<u32> = (0..t as u32).collect();
    loop {
        basis.push(PlayerSet(idx.iter().fold(0u64, |m, &i| m | 1 << i)));
        let Some(pos) = (0..t).rev().find(|&i| idx[i] != (i + w - t) as u32) else {
            break;
        };
        idx[pos] += 1;
        for j in pos + 1..t {
            idx[j] = idx[j - 1] + 1;
        }
    }
    basis.sort();
    Ok(AccessStructure {
        player_count: params.w,
        basis,
        threshold: Some(params.t),
    })
}

pub fn is_authorized(s: &AccessStructure, set: PlayerSet) -> bool {
    s.is_authorized(set)
}

/// Minimal elements of `collection` under inclusion, deduplicated and
/// sorted by bitmask.
pub fn basis_of(collection: &[PlayerSet]) -> Vec<PlayerSet> {
    let mut out: Vec<PlayerSet> = collection
        .iter()
        .copied()
        .filter(|&s| !collection.iter().any(|&o| o != s && o.is_subset(s)))
        .collect();
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ids: &[u32]) -> PlayerSet {
        ids.iter().map(|&i| PlayerId::new(i).unwrap()).collect()
    }

    #[test]
    fn threshold_bases() {
        let s = threshold_structure(2, 3).unwrap();
        assert_eq!(s.basis(), &[set(&[1, 2]), set(&[1, 3]), set(&[2, 3])]);
        assert_eq!(threshold_structure(1, 1).unwrap().basis(), &[set(&[1])]);
        assert_eq!(threshold_structure(3, 3).unwrap().basis(), &[set(&[1, 2, 3])]);
        assert_eq!(threshold_structure(4, 3), Err(AccessError::BadParams { t: 4, w: 3 }));
        assert_eq!(threshold_structure(0, 3), Err(AccessError::BadParams { t: 0, w: 3 }));
    }

    #[test]
    fn authorization() {
        let s = threshold_structure(2, 3).unwrap();
        assert!(s.is_authorized(set(&[1, 2])));
        assert!(!s.is_authorized(set(&[2])));
        let g = AccessStructure::from_collection(3, [set(&[1, 2])]).unwrap();
        assert!(g.is_authorized(set(&[1, 2, 3])));
        assert!(!g.is_authorized(set(&[1, 3])));
    }

    #[test]
    fn empty_basis_authorizes_nobody() {
        let g = AccessStructure::from_collection(3, []).unwrap();
        assert!(!g.is_authorized(PlayerSet::all(3)));
        assert!(g.closure().is_empty());
    }

    #[test]
    fn bases() {
        assert_eq!(basis_of(&[set(&[1, 2]), set(&[1, 2, 3])]), vec![set(&[1, 2])]);
        assert_eq!(basis_of(&[]), vec![]);
        assert_eq!(basis_of(&[set(&[1]), set(&[2, 3])]), vec![set(&[1]), set(&[2, 3])]);
        assert_eq!(basis_of(&[set(&[2]), set(&[2])]), vec![set(&[2])]);
    }

    #[test]
    fn rejects_bad_elements() {
        assert!(AccessStructure::from_collection(2, [set(&[3])]).is_err());
        assert!(AccessStructure::from_collection(2, [PlayerSet::EMPTY]).is_err());
        assert!(PlayerId::new(0).is_none());
    }

    #[test]
    fn player_set_helpers() {
        let s = set(&[1, 3]);
        assert_eq!(s.len(), 2);
        assert_eq!(s.max_index(), 3);
        assert_eq!(s.to_string(), "{1,3}");
        assert_eq!(s.iter().map(PlayerId::index).collect::<Vec<_>>(), vec![1, 3]);
    }
}
