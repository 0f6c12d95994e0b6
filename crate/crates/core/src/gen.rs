//! Seeded random rule systems and tuple sampling.
//!
//! All randomness comes from ChaCha8 seeded with `seed_from_u64`, which is
//! portable across platforms. Systems are drawn from stream 0 and tuples from
//! stream 1 of the same seed.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rules::{AttributeId, DecisionRule, ExtendedTuple, RuleSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenParams {
    pub n_attrs: u32,
    pub n_rules: usize,
    pub min_len: usize,
    pub max_len: usize,
    pub n_values: u32,
    pub seed: u64,
}

impl GenParams {
    pub fn validate(&self) -> Result<()> {
        let ok = 1 <= self.min_len
            && self.min_len <= self.max_len
            && self.max_len <= self.n_attrs as usize
            && self.n_rules >= 1
            && self.n_values >= 1;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParams(format!(
                "need 1 <= min_len <= max_len <= n_attrs, n_rules >= 1, n_values >= 1 (got {self:?})"
            )))
        }
    }
}

/// Each rule gets a uniform length in `min_len..=max_len`, a uniform subset of
/// `a1..a_n` of that size, uniform values and a uniform decision in
/// `0..n_values`.
pub fn random_system(p: &GenParams) -> Result<RuleSystem> {
    p.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let rules = (0..p.n_rules)
        .map(|_| {
            let len = rng.gen_range(p.min_len..=p.max_len);
            let mut attrs = index::sample(&mut rng, p.n_attrs as usize, len).into_vec();
            attrs.sort_unstable();
            let lhs = attrs
                .into_iter()
                .map(|i| (AttributeId(i as u32 + 1), rng.gen_range(0..p.n_values)))
                .collect();
            let rhs = rng.gen_range(0..p.n_values);
            DecisionRule::new(lhs, rhs).expect("sampled attributes are distinct")
        })
        .collect();
    RuleSystem::new(rules)
}

/// `count` tuples drawn independently and uniformly from EV(S).
pub fn sample_tuples(system: &RuleSystem, seed: u64, count: usize) -> Vec<ExtendedTuple> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(1);
    let m = system.measures();
    let domains: Vec<_> = m
        .attrs
        .iter()
        .map(|&a| (a, m.extended_values(a).expect("attribute in A(S)")))
        .collect();
    (0..count)
        .map(|_| {
            let values = domains
                .iter()
                .map(|(a, dom)| (*a, dom[rng.gen_range(0..dom.len())]))
                .collect();
            ExtendedTuple::new(system, values).expect("values drawn from EV(S)")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(seed: u64) -> GenParams {
        GenParams {
            n_attrs: 6,
            n_rules: 8,
            min_len: 1,
            max_len: 4,
            n_values: 3,
            seed,
        }
    }

    #[test]
    fn same_seed_same_system() {
        assert_eq!(random_system(&params(42)).unwrap(), random_system(&params(42)).unwrap());
        assert_ne!(random_system(&params(42)).unwrap(), random_system(&params(43)).unwrap());
    }

    #[test]
    fn fixed_length_forces_d() {
        let p = GenParams {
            min_len: 3,
            max_len: 3,
            ..params(1)
        };
        let s = random_system(&p).unwrap();
        assert_eq!(s.measures().d, 3);
        assert!(s.rules().iter().all(|r| r.len() == 3));
    }

    #[test]
    fn single_value_forces_k() {
        let p = GenParams {
            n_values: 1,
            ..params(5)
        };
        assert_eq!(random_system(&p).unwrap().measures().k, 1);
    }

    #[test]
    fn invalid_params_rejected() {
        for bad in [
            GenParams { min_len: 0, ..params(0) },
            GenParams { min_len: 3, max_len: 2, ..params(0) },
            GenParams { max_len: 7, ..params(0) },
            GenParams { n_rules: 0, ..params(0) },
            GenParams { n_values: 0, ..params(0) },
        ] {
            assert!(matches!(random_system(&bad), Err(Error::InvalidParams(_))), "{bad:?}");
        }
    }

    #[test]
    fn tuples_are_deterministic_and_in_ev() {
        let s = random_system(&params(9)).unwrap();
        let a = sample_tuples(&s, 9, 50);
        assert_eq!(a, sample_tuples(&s, 9, 50));
        assert_eq!(a.len(), 50);
    }
}
