//! The standard parameter sweep over all nine families.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::family::FamilySpec;
use super::lemmas::check_type1_params;
use crate::partition::is_valid_entry;
use crate::Result;

/// Random draws per `(p, q)` for the two versal families.
pub const OSS_DRAWS: usize = 5;

/// Every family in the standard sweep, in a fixed order. Random parameters
/// for the versal families come from a ChaCha stream seeded with `seed`.
pub fn standard_suite(seed: u64) -> Result<Vec<FamilySpec>> {
    let mut out = Vec::new();
    for p in [3, 5, 7] {
        for e in 2..=20 {
            for e2 in 2..=e / 2 {
                let e1 = e - e2;
                if check_type1_params(p, e1, e2).is_ok() {
                    out.push(FamilySpec::A { p, e1, e2 });
                }
            }
        }
    }
    for p in [3, 5, 7] {
        let h = (p + 1) / 2;
        out.push(FamilySpec::B {
            p,
            e1: h,
            e2: h,
            e3: h,
        });
    }
    for p in [5, 7] {
        for e1 in 2..=8 {
            for e2 in 2..=8 {
                let s = FamilySpec::C { p, e1, e2 };
                if s.validate().is_ok() {
                    out.push(s);
                }
            }
        }
    }
    for p in [5, 7] {
        out.extend((1..p).map(|n| FamilySpec::D { p, n }));
    }
    out.push(FamilySpec::E1 { p: 5 });
    out.push(FamilySpec::E2 { p: 5 });
    let mut rng = seeded_rng(seed);
    for p in [3, 5] {
        for q in 1..=3 {
            for _ in 0..OSS_DRAWS {
                out.push(FamilySpec::random_oss1(p, q, &mut rng)?);
            }
            for _ in 0..OSS_DRAWS {
                let l = rand::Rng::gen_range(&mut rng, 1..p);
                out.push(FamilySpec::random_oss2(p, q, l, &mut rng)?);
            }
        }
    }
    for p in [3, 5] {
        for e1 in [p, 2 * p] {
            for e2 in 2..=8 {
                if is_valid_entry(p, e2) {
                    out.push(FamilySpec::Pz { p, e1, e2 });
                }
            }
        }
    }
    Ok(out)
}

/// The random stream used for parameter draws.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
