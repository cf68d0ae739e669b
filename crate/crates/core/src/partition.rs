//! Partition sets `Omega_d`: multisets of ramification invariants summing to
//! `d + 2`, every entry at least 2 and not congruent to 1 modulo `p`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::{ensure_prime, Error, Result};

/// True iff `e` can occur as an `e_j` in characteristic `p`.
pub fn is_valid_entry(p: u32, e: u32) -> bool {
    e >= 2 && e % p != 1 % p
}

/// A canonical (sorted non-increasing) partition attached to a prime.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    p: u32,
    entries: Vec<u32>,
}

impl Partition {
    /// Validates and canonicalizes `entries`.
    pub fn new(p: u32, mut entries: Vec<u32>) -> Result<Partition> {
        ensure_prime(p)?;
        if entries.is_empty() {
            return Err(Error::Precondition(
                "a partition needs at least one entry".into(),
            ));
        }
        if let Some(&entry) = entries.iter().find(|&&e| !is_valid_entry(p, e)) {
            return Err(Error::InvalidEntry { entry, p });
        }
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { p, entries })
    }

    pub(crate) fn from_sorted(p: u32, entries: Vec<u32>) -> Partition {
        debug_assert!(entries.windows(2).all(|w| w[0] >= w[1]));
        Partition { p, entries }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `d = sum(entries) - 2`.
    pub fn d(&self) -> u32 {
        self.entries.iter().sum::<u32>() - 2
    }

    /// Replaces the entry at `index` by `parts`, returning the canonical result.
    pub fn split_entry(&self, index: usize, parts: &[u32]) -> Result<Partition> {
        let mut v = self.entries.clone();
        let e = v.remove(index);
        if parts.iter().sum::<u32>() != e {
            return Err(Error::Precondition(format!("parts do not sum to {e}")));
        }
        v.extend_from_slice(parts);
        Partition::new(self.p, v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries.iter().map(u32::to_string).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

/// All of `Omega_d`, in lexicographically descending order.
pub fn enumerate_omega(p: u32, d: u32) -> Result<Vec<Partition>> {
    ensure_prime(p)?;
    let n = d + 2;
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(p, n, n, &mut cur, &mut out);
    Ok(out)
}

fn fill(p: u32, remaining: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted(p, cur.clone()));
        return;
    }
    for e in (2..=max.min(remaining)).rev() {
        if !is_valid_entry(p, e) {
            continue;
        }
        let rest = remaining - e;
        if rest == 1 {
            continue;
        }
        cur.push(e);
        fill(p, rest, e, cur, out);
        cur.pop();
    }
}

/// Number of elements of `Omega_d`, computed without materializing it.
pub fn count_omega(p: u32, d: u32) -> Result<u64> {
    ensure_prime(p)?;
    let n = (d + 2) as usize;
    let mut ways = vec![0u64; n + 1];
    ways[0] = 1;
    for e in 2..=n {
        if is_valid_entry(p, e as u32) {
            for s in e..=n {
                ways[s] += ways[s - e];
            }
        }
    }
    Ok(ways[n])
}

fn check_context(a: &Partition, b: &Partition) -> Result<()> {
    if a.p != b.p || a.d() != b.d() {
        return Err(Error::MismatchedContext(a.p, b.p, a.d(), b.d()));
    }
    Ok(())
}

/// If `fine` refines `coarse`, returns a grouping of `fine`'s entries: block
/// `i` lists the entries that sum to `coarse.entries()[i]`.
pub fn is_refinement(coarse: &Partition, fine: &Partition) -> Result<Option<Vec<Vec<u32>>>> {
    check_context(coarse, fine)?;
    if fine.len() < coarse.len() {
        return Ok(None);
    }
    let mut remaining: Vec<u32> = coarse.entries.clone();
    let mut blocks = vec![Vec::new(); coarse.len()];
    if assign(&fine.entries, 0, &mut remaining, &mut blocks) {
        Ok(Some(blocks))
    } else {
        Ok(None)
    }
}

fn assign(fine: &[u32], i: usize, remaining: &mut [u32], blocks: &mut [Vec<u32>]) -> bool {
    if i == fine.len() {
        return remaining.iter().all(|&r| r == 0);
    }
    let e = fine[i];
    for b in 0..remaining.len() {
        if remaining[b] < e {
            continue;
        }
        // Blocks with identical remaining capacity and contents are
        // interchangeable; try only the first.
        if (0..b).any(|c| remaining[c] == remaining[b] && blocks[c] == blocks[b]) {
            continue;
        }
        // The remainder of a block must still be fillable by entries >= 2.
        if remaining[b] - e == 1 {
            continue;
        }
        remaining[b] -= e;
        blocks[b].push(e);
        if assign(fine, i + 1, remaining, blocks) {
            return true;
        }
        blocks[b].pop();
        remaining[b] += e;
    }
    false
}

/// True iff some sub-multiset of at least two entries sums to a valid entry,
/// i.e. merging it gives a strictly coarser partition in `Omega_d`.
pub fn has_valid_merge(part: &Partition) -> bool {
    let p = part.p;
    let total: u32 = part.entries.iter().sum();
    // reach[s] = bitmask over "uses 0 / 1 / >= 2 entries" of subsets summing to s.
    let mut reach = vec![0u8; total as usize + 1];
    reach[0] = 1;
    for &e in &part.entries {
        for s in (e as usize..=total as usize).rev() {
            let from = reach[s - e as usize];
            if from == 0 {
                continue;
            }
            let mut add = 0u8;
            if from & 1 != 0 {
                add |= 2;
            }
            if from & 6 != 0 {
                add |= 4;
            }
            reach[s] |= add;
        }
    }
    (2..=total).any(|s| reach[s as usize] & 4 != 0 && is_valid_entry(p, s))
}

/// True iff `e` is a sum of at least two valid entries.
pub fn splittable(p: u32, e: u32) -> bool {
    (2..=e / 2).any(|a| is_valid_entry(p, a) && (is_valid_entry(p, e - a) || splittable(p, e - a)))
}

/// Partitions with no strictly coarser element of `Omega_d`.
pub fn minimal_partitions(p: u32, d: u32) -> Result<Vec<Partition>> {
    Ok(enumerate_omega(p, d)?
        .into_iter()
        .filter(|x| !has_valid_merge(x))
        .collect())
}

/// Partitions with no strictly finer element of `Omega_d`.
pub fn maximal_partitions(p: u32, d: u32) -> Result<Vec<Partition>> {
    Ok(enumerate_omega(p, d)?
        .into_iter()
        .filter(|x| x.entries.iter().all(|&e| !splittable(p, e)))
        .collect())
}

/// `floor(d/2) - ceil((d-4)/3)`, the closed-form count of maximal partitions.
pub fn maximal_count_formula(d: u32) -> i64 {
    let d = d as i64;
    d.div_euclid(2) - (-(4 - d).div_euclid(3))
}

/// Genus data of a cover with the given ramification invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GenusData {
    pub p: u32,
    pub g: u64,
    pub d: u32,
    pub p_rank: u64,
}

pub fn genus_of(part: &Partition) -> GenusData {
    let (p, d) = (part.p, part.d());
    GenusData {
        p,
        g: d as u64 * (p as u64 - 1) / 2,
        d,
        p_rank: (part.len() as u64 - 1) * (p as u64 - 1),
    }
}

/// `d = 2g/(p-1)`, or `None` when no cover of genus `g` exists (empty moduli).
pub fn d_from_genus(p: u32, g: u64) -> Result<Option<u32>> {
    ensure_prime(p)?;
    let q = p as u64 - 1;
    if (2 * g) % q != 0 {
        return Ok(None);
    }
    u32::try_from(2 * g / q)
        .map(Some)
        .map_err(|_| Error::Precondition("genus too large".into()))
}
