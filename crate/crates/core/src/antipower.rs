//! Anti-power structure of 𝐭: block-distinctness queries and the functions
//! 𝔎_j(m), γ_j(k), Γ_j(k).
//!
//! A query (j, k, m) names the j-fix 𝐭_{j+1} ⋯ 𝐭_{j+km}, split into k blocks
//! of length m; block r (0-based, r = 0…k−1) is ⟨rm+j+1, (r+1)m+j⟩. The word
//! is a k-anti-power iff the blocks are pairwise distinct. Block equality is
//! decided by a 64-bit digest filter followed by a mandatory bit-exact
//! comparison; the digest is never the verdict.

use crate::error::{Error, Result};
use crate::tm::{Bits, Segment, TmBuffer};
use std::collections::HashMap;
use std::hash::{BuildHasherDefault, Hasher};

/// A (j, k, m) anti-power query: shift j, block count k ≥ 1, block length m ≥ 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ApQuery {
    pub j: u64,
    pub k: u64,
    pub m: u64,
}

impl ApQuery {
    pub fn new(j: u64, k: u64, m: u64) -> Result<ApQuery> {
        if k == 0 {
            return Err(Error::Domain("block count k must be at least 1".into()));
        }
        if m == 0 {
            return Err(Error::Domain("block length m must be at least 1".into()));
        }
        Ok(ApQuery { j, k, m })
    }

    /// The segment of block r (0-based).
    pub fn block_segment(&self, r: u64) -> Segment {
        Segment::new(r * self.m + self.j + 1, (r + 1) * self.m + self.j)
            .expect("block indices are positive")
    }
}

/// Digest plus the segment it was taken from. Two blocks are reported equal
/// only after their segments compare bit-exactly; the digest only filters.
#[derive(Debug, Clone, Copy)]
pub struct BlockFingerprint {
    pub hash64: u64,
    pub segment: Segment,
}

impl BlockFingerprint {
    pub fn of_block(bits: &Bits, q: &ApQuery, r: u64) -> BlockFingerprint {
        let segment = q.block_segment(r);
        BlockFingerprint {
            hash64: bits.range_hash(segment.alpha() - 1, q.m),
            segment,
        }
    }
}

/// The digests are already well-mixed 64-bit values; feed them straight
/// through as the bucket key instead of re-hashing.
#[derive(Default)]
struct DigestHasher(u64);

impl Hasher for DigestHasher {
    fn finish(&self) -> u64 {
        self.0
    }
    fn write(&mut self, _bytes: &[u8]) {
        unreachable!("digest keys are written as u64")
    }
    fn write_u64(&mut self, n: u64) {
        self.0 = n;
    }
}

type DigestMap = HashMap<u64, Vec<u64>, BuildHasherDefault<DigestHasher>>;

fn grow_for(buf: &mut TmBuffer, j: u64, m: u64, k: u64, what: &str) -> Result<()> {
    let need = (j as u128) + (k as u128) * (m as u128);
    if need > buf.cap_letters() as u128 {
        return Err(Error::Resource {
            requested_letters: need.min(u64::MAX as u128) as u64,
            cap_letters: buf.cap_letters(),
            context: what.to_string(),
        });
    }
    buf.extend_to(need as u64)
}

/// Smallest block index r < k_cap whose block equals some earlier block, or
/// `None` when all k_cap blocks are pairwise distinct. Streaming, one pass.
pub fn first_repeat_index(buf: &mut TmBuffer, j: u64, m: u64, k_cap: u64) -> Result<Option<u64>> {
    if m == 0 || k_cap == 0 {
        return Err(Error::Domain("m and k_cap must be at least 1".into()));
    }
    grow_for(buf, j, m, k_cap, "anti-power query")?;
    Ok(first_repeat_in(buf.bits(), j, m, k_cap))
}

/// Core scan over an already grown prefix. Pure; safe to run from many
/// threads sharing one buffer.
pub(crate) fn first_repeat_in(bits: &Bits, j: u64, m: u64, k_cap: u64) -> Option<u64> {
    debug_assert!(j + k_cap * m <= bits.len());
    // threshold scans usually stop long before k_cap; let the map grow
    let mut seen: DigestMap = DigestMap::with_capacity_and_hasher(
        k_cap.min(1 << 12) as usize,
        BuildHasherDefault::default(),
    );
    for r in 0..k_cap {
        let off = j + r * m;
        let h = bits.range_hash(off, m);
        match seen.entry(h) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                for &prev in e.get().iter() {
                    if bits.range_eq(j + prev * m, off, m) {
                        return Some(r);
                    }
                }
                e.get_mut().push(r);
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(vec![r]);
            }
        }
    }
    None
}

/// Is the j-fix of length km a k-anti-power?
pub fn is_anti_power(buf: &mut TmBuffer, q: &ApQuery) -> Result<bool> {
    Ok(first_repeat_index(buf, q.j, q.m, q.k)?.is_none())
}

/// Largest k the residue-class upper bounds allow before a repeat is forced,
/// plus slack; the scan in [`frak_k`] can never legitimately reach it.
fn frak_scan_cap(j: u64, m: u64) -> u64 {
    const SLACK: u64 = 16;
    if m == 1 {
        // pigeonhole: three letters over {0,1} cannot be pairwise distinct
        return 3;
    }
    let ell = ceil_log2(m + j);
    let p = |e: u32| 1u128 << e;
    let (num, den) = if m.is_multiple_of(2) {
        // K_j(m) < 2^{l+1} + (2^{l+1} - j)/m
        (p(ell + 1) * m as u128 + p(ell + 1) - j as u128, m as u128)
    } else if m % 8 == 1 {
        // m = 2^L h + 1, h odd, L >= 3: K_j(m) < 2^l + (2^l (2^{L+1} + 4) - j)/m
        let l = (m - 1).trailing_zeros();
        (
            p(ell) * m as u128 + p(ell) * (p(l + 1) + 4) - j as u128,
            m as u128,
        )
    } else if m % 32 == 29 {
        // K_j(m) < 2^{l+1} + (20 * 2^l - j)/m
        (p(ell + 1) * m as u128 + 20 * p(ell) - j as u128, m as u128)
    } else {
        // odd, not 1 mod 8, not 29 mod 32: K_j(m) < 2^l + (37 * 2^l - j)/m
        (p(ell) * m as u128 + 37 * p(ell) - j as u128, m as u128)
    };
    let mut cap = u64::try_from(num / den).unwrap_or(u64::MAX).saturating_add(SLACK);
    if m < 40 {
        cap = cap.min((1u64 << m) + 1);
    }
    cap
}

/// ⌈log₂ x⌉ for x ≥ 1, in integer arithmetic.
pub(crate) fn ceil_log2(x: u64) -> u32 {
    assert!(x >= 1);
    if x == 1 {
        0
    } else {
        64 - (x - 1).leading_zeros()
    }
}

/// 𝔎_j(m): the smallest k such that the j-fix of length km is NOT a
/// k-anti-power. Always exists (pigeonhole gives 𝔎_j(m) ≤ 2^m + 1); the scan
/// is capped by the applicable upper bound plus slack, and exhausting the cap
/// is an internal error because it contradicts a proved bound.
pub fn frak_k(buf: &mut TmBuffer, j: u64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::Domain("block length m must be at least 1".into()));
    }
    // a single block already needs j + m letters; gating here keeps the
    // scan-cap arithmetic comfortably inside u64
    if j as u128 + m as u128 > buf.cap_letters() as u128 {
        return Err(Error::Resource {
            requested_letters: (j as u128 + m as u128).min(u64::MAX as u128) as u64,
            cap_letters: buf.cap_letters(),
            context: "threshold scan".to_string(),
        });
    }
    let cap = frak_scan_cap(j, m);
    match first_repeat_index(buf, j, m, cap)? {
        Some(r) => Ok(r + 1),
        None => Err(Error::Internal(format!(
            "no repeated block for j={j}, m={m} within the scan cap {cap}, \
             which exceeds a proved bound on K_j(m)"
        ))),
    }
}

/// Safety cap for the γ ascent; far above every proved asymptotic ratio.
pub fn gamma_search_cap(k: u64) -> u64 {
    k.saturating_mul(8).saturating_add(64)
}

/// γ_j(k) = min AP_j(𝐭, k): the smallest m whose (j, k, m) word is a
/// k-anti-power, found by ascending m = 1, 2, …
pub fn gamma(buf: &mut TmBuffer, j: u64, k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::Domain("block count k must be at least 1".into()));
    }
    let cap = gamma_search_cap(k);
    for m in 1..=cap {
        if is_anti_power(buf, &ApQuery { j, k, m })? {
            return Ok(m);
        }
    }
    Err(Error::Internal(format!(
        "gamma_{j}({k}) exceeded the search cap {cap}; this contradicts the \
         linear growth of gamma and indicates a bug"
    )))
}

/// Γ_j(k) = sup of the odd positive integers m whose (j, k, m) word is NOT a
/// k-anti-power. For k ≥ 3 every such m is at most 3k−4, so the scan walks
/// odd m down from there and returns the first failure; `None` means the set
/// is empty (always the case for k < 3, where the sup is −∞).
pub fn big_gamma(buf: &mut TmBuffer, j: u64, k: u64) -> Result<Option<u64>> {
    if k == 0 {
        return Err(Error::Domain("block count k must be at least 1".into()));
    }
    if k < 3 {
        return Ok(None);
    }
    let mut m = k.saturating_mul(3) - 4;
    if m.is_multiple_of(2) {
        m -= 1;
    }
    while m >= 1 {
        if !is_anti_power(buf, &ApQuery { j, k, m })? {
            return Ok(Some(m));
        }
        if m == 1 {
            break;
        }
        m -= 2;
    }
    Ok(None)
}

/// (m ∈ AP_j(𝐭,k), 2m ∈ AP_j(𝐭,k)). The doubling conjecture predicts the two
/// agree for all but finitely many m; a violation is inequality of the pair.
pub fn ap_membership_pair(buf: &mut TmBuffer, j: u64, k: u64, m: u64) -> Result<(bool, bool)> {
    if k < 3 {
        return Err(Error::Domain(format!(
            "membership pairs are defined for k >= 3, got k = {k}"
        )));
    }
    if m == 0 {
        return Err(Error::Domain("block length m must be at least 1".into()));
    }
    let a = is_anti_power(buf, &ApQuery { j, k, m })?;
    let b = is_anti_power(buf, &ApQuery { j, k, m: 2 * m })?;
    Ok((a, b))
}
