//! Dissociation numbers and canonical maximum dissociation sets of paths.
//!
//! Positions along a path of order `n` are numbered `1..=n`.

use thiserror::Error;

/// The order of a path together with its residue mod 3, which decides every
/// structural property used here.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathResidue {
    pub n: usize,
    pub residue: u8,
}

impl PathResidue {
    pub fn new(n: usize) -> Self {
        PathResidue {
            n,
            residue: (n % 3) as u8,
        }
    }
}

/// Dissociation number of the path on `n` vertices: `(2n + n mod 3) / 3`.
///
/// For `n` in `{1, 2}` the whole path is a dissociation set and the formula
/// gives `n` as well.
pub fn psi_path(n: usize) -> usize {
    (2 * n + n % 3) / 3
}

/// Which structural property a [`path_witness`] must exhibit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessMode {
    /// `n ≡ 0 (mod 3)`: the first endpoint is left out.
    ExcludeFirstLeaf,
    /// `n ≡ 1 (mod 3)`: the first endpoint is in, with no selected neighbor.
    IsolateFirstLeaf,
    /// `n ≡ 2 (mod 3)`: the only maximum dissociation set.
    Unique,
}

impl WitnessMode {
    pub fn residue(self) -> u8 {
        match self {
            WitnessMode::ExcludeFirstLeaf => 0,
            WitnessMode::IsolateFirstLeaf => 1,
            WitnessMode::Unique => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("witness mode {mode:?} needs n ≡ {} (mod 3), got n = {n}", mode.residue())]
pub struct ModeResidueMismatch {
    pub n: usize,
    pub mode: WitnessMode,
}

/// A maximum dissociation set of the path on `n` vertices realizing `mode`,
/// as ascending positions in `1..=n`.
///
/// Layout: an optional anchor (skip position 1, or take it alone and skip 2),
/// then adjacent pairs separated by one skipped vertex.
pub fn path_witness(n: usize, mode: WitnessMode) -> Result<Vec<usize>, ModeResidueMismatch> {
    if PathResidue::new(n).residue != mode.residue() {
        return Err(ModeResidueMismatch { n, mode });
    }
    let mut set = Vec::with_capacity(psi_path(n));
    let mut pos = match mode {
        WitnessMode::ExcludeFirstLeaf => 2,
        WitnessMode::IsolateFirstLeaf => {
            set.push(1);
            3
        }
        WitnessMode::Unique => 1,
    };
    while pos < n {
        set.push(pos);
        set.push(pos + 1);
        pos += 3;
    }
    debug_assert_eq!(set.len(), psi_path(n));
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every maximum dissociation set of the path on `n` vertices, as
    /// position bitmasks (bit `i` is position `i + 1`), by a full scan.
    fn brute_max_sets(n: usize) -> Vec<u32> {
        let valid = |mask: u32| {
            (0..n).all(|i| {
                if mask >> i & 1 == 0 {
                    return true;
                }
                let left = i > 0 && mask >> (i - 1) & 1 == 1;
                let right = i + 1 < n && mask >> (i + 1) & 1 == 1;
                !(left && right)
            })
        };
        let all: Vec<u32> = (0..1u32 << n).filter(|&m| valid(m)).collect();
        let best = all.iter().map(|m| m.count_ones()).max().unwrap();
        all.into_iter().filter(|m| m.count_ones() == best).collect()
    }

    fn to_mask(positions: &[usize]) -> u32 {
        positions.iter().map(|&p| 1u32 << (p - 1)).sum()
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(psi_path(1), 1);
        assert_eq!(psi_path(2), 2);
        assert_eq!(psi_path(3), 2);
        assert_eq!(psi_path(4), 3);
        assert_eq!(psi_path(5), 4);
        assert_eq!(psi_path(6), 4);
        assert_eq!(psi_path(7), 5);
    }

    #[test]
    fn closed_form_matches_brute_force() {
        for n in 1..=16 {
            let best = brute_max_sets(n)[0].count_ones() as usize;
            assert_eq!(psi_path(n), best, "n = {n}");
        }
    }

    #[test]
    fn witness_examples() {
        assert_eq!(
            path_witness(6, WitnessMode::ExcludeFirstLeaf).unwrap(),
            vec![2, 3, 5, 6]
        );
        assert_eq!(
            path_witness(4, WitnessMode::IsolateFirstLeaf).unwrap(),
            vec![1, 3, 4]
        );
        assert_eq!(
            path_witness(5, WitnessMode::Unique).unwrap(),
            vec![1, 2, 4, 5]
        );
        assert_eq!(
            path_witness(1, WitnessMode::IsolateFirstLeaf).unwrap(),
            vec![1]
        );
        assert_eq!(path_witness(2, WitnessMode::Unique).unwrap(), vec![1, 2]);
    }

    #[test]
    fn witnesses_are_maximum_sets_found_by_brute_force() {
        for n in 1..=16 {
            let mode = match n % 3 {
                0 => WitnessMode::ExcludeFirstLeaf,
                1 => WitnessMode::IsolateFirstLeaf,
                _ => WitnessMode::Unique,
            };
            let w = to_mask(&path_witness(n, mode).unwrap());
            assert!(brute_max_sets(n).contains(&w), "n = {n}");
        }
    }

    #[test]
    fn mismatched_mode_is_rejected() {
        assert_eq!(
            path_witness(6, WitnessMode::Unique).unwrap_err(),
            ModeResidueMismatch {
                n: 6,
                mode: WitnessMode::Unique
            }
        );
        assert!(path_witness(5, WitnessMode::IsolateFirstLeaf).is_err());
        assert!(path_witness(4, WitnessMode::ExcludeFirstLeaf).is_err());
    }

    #[test]
    fn witnesses_satisfy_their_mode_up_to_sixty() {
        for n in 3..=60 {
            let mode = match n % 3 {
                0 => WitnessMode::ExcludeFirstLeaf,
                1 => WitnessMode::IsolateFirstLeaf,
                _ => WitnessMode::Unique,
            };
            let set = path_witness(n, mode).unwrap();
            let mut member = vec![false; n + 2];
            for &p in &set {
                member[p] = true;
            }
            let induced = |p: usize| member[p - 1] as usize + member[p + 1] as usize;
            assert!(set.iter().all(|&p| induced(p) <= 1), "n = {n}");
            assert_eq!(set.len(), psi_path(n));
            match mode {
                WitnessMode::ExcludeFirstLeaf => assert!(!member[1]),
                WitnessMode::IsolateFirstLeaf => assert!(member[1] && induced(1) == 0),
                WitnessMode::Unique => {
                    assert!(member[1] && member[n]);
                    assert_eq!((induced(1), induced(n)), (1, 1));
                }
            }
        }
    }
}
