//! The Thue-Morse word: generation, indexing and slicing.
//!
//! The word 𝐭 = 0110100110010110… is exposed through two independent routes:
//! the stateless letter rule [`tm_letter`] (letter i is the parity of the
//! popcount of i−1) and the doubling generator [`TmBuffer`] (repeatedly append
//! the bitwise complement of the current prefix). The two must agree
//! everywhere; the test suite checks this over the first 2^22 letters.
//!
//! Indexing convention: the public API is 1-based (letter i of 𝐭), matching
//! the segment notation ⟨α, β⟩ = 𝐭_α ⋯ 𝐭_β. Internally bit i−1 of the packed
//! storage holds 𝐭_i, least-significant-bit first within each u64 word.

use crate::error::{Error, Result};
use std::fmt;

/// Default buffer cap: 2^31 letters, i.e. 256 MiB packed.
pub const DEFAULT_CAP_LETTERS: u64 = 1 << 31;

/// Letter 𝐭_i (1-based): parity of the number of 1 bits in i−1.
pub fn tm_letter(i: u64) -> Result<u8> {
    if i == 0 {
        return Err(Error::Domain(
            "letter indices are 1-based; got i = 0".into(),
        ));
    }
    Ok(((i - 1).count_ones() & 1) as u8)
}

/// Unchecked variant of [`tm_letter`] for hot loops. `i` must be ≥ 1.
#[inline]
pub(crate) fn letter_unchecked(i: u64) -> u8 {
    debug_assert!(i >= 1);
    ((i - 1).count_ones() & 1) as u8
}

/// 1-based inclusive index range ⟨α, β⟩ into 𝐭.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segment {
    alpha: u64,
    beta: u64,
}

#[allow(clippy::len_without_is_empty)] // len >= 1 by the alpha <= beta invariant
impl Segment {
    pub fn new(alpha: u64, beta: u64) -> Result<Segment> {
        if alpha == 0 || alpha > beta {
            return Err(Error::Domain(format!(
                "segment requires 1 <= alpha <= beta, got <{alpha}, {beta}>"
            )));
        }
        Ok(Segment { alpha, beta })
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    pub fn beta(&self) -> u64 {
        self.beta
    }

    pub fn len(&self) -> u64 {
        self.beta - self.alpha + 1
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.alpha, self.beta)
    }
}

/// A packed bit string. Bit k (0-based) lives in word k/64 at position k%64.
///
/// Invariant: bits past `len` in the last word are zero, so whole-word
/// operations (equality, hashing, complement) need no per-use masking.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Bits {
    words: Vec<u64>,
    len: u64,
}

impl Bits {
    pub fn new() -> Bits {
        Bits::default()
    }

    pub fn with_capacity(bits: u64) -> Bits {
        Bits {
            words: Vec::with_capacity(bits.div_ceil(64) as usize),
            len: 0,
        }
    }

    /// Parse a string of ASCII `0`/`1` characters.
    pub fn from_bit_str(s: &str) -> Result<Bits> {
        let mut out = Bits::with_capacity(s.len() as u64);
        for (pos, ch) in s.chars().enumerate() {
            match ch {
                '0' => out.push(0),
                '1' => out.push(1),
                other => {
                    return Err(Error::Domain(format!(
                        "bit string may contain only 0 and 1; found {other:?} at offset {pos}"
                    )))
                }
            }
        }
        Ok(out)
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Bit at 0-based offset `idx`. Panics if out of range.
    pub fn get(&self, idx: u64) -> u8 {
        assert!(
            idx < self.len,
            "bit index {idx} out of range (len {})",
            self.len
        );
        ((self.words[(idx / 64) as usize] >> (idx % 64)) & 1) as u8
    }

    pub fn push(&mut self, bit: u8) {
        debug_assert!(bit <= 1);
        let word = (self.len / 64) as usize;
        if word == self.words.len() {
            self.words.push(0);
        }
        self.words[word] |= u64::from(bit) << (self.len % 64);
        self.len += 1;
    }

    /// 64 bits starting at `bit_off`, zero-padded past the end of the string.
    #[inline]
    pub fn read_word(&self, bit_off: u64) -> u64 {
        let word = (bit_off / 64) as usize;
        let shift = (bit_off % 64) as u32;
        if word >= self.words.len() {
            return 0;
        }
        let lo = self.words[word] >> shift;
        if shift == 0 {
            lo
        } else {
            let hi = self.words.get(word + 1).copied().unwrap_or(0);
            lo | (hi << (64 - shift))
        }
    }

    /// Bit-exact comparison of the ranges [a, a+len) and [b, b+len).
    /// Both ranges must lie inside the string.
    pub fn range_eq(&self, a: u64, b: u64, len: u64) -> bool {
        debug_assert!(a + len <= self.len && b + len <= self.len);
        let mut done = 0;
        while done + 64 <= len {
            if self.read_word(a + done) != self.read_word(b + done) {
                return false;
            }
            done += 64;
        }
        let rem = len - done;
        if rem == 0 {
            return true;
        }
        let mask = u64::MAX >> (64 - rem);
        (self.read_word(a + done) ^ self.read_word(b + done)) & mask == 0
    }

    /// Stable 64-bit digest of the range [off, off+len). Collisions must be
    /// confirmed bit-exactly; the digest is only a filter.
    pub fn range_hash(&self, off: u64, len: u64) -> u64 {
        debug_assert!(off + len <= self.len);
        const K: u64 = 0x9e37_79b9_7f4a_7c15;
        let mut h = len.wrapping_mul(K) ^ 0x2545_f491_4f6c_dd1d;
        let mut done = 0;
        while done + 64 <= len {
            h = mix(h ^ self.read_word(off + done));
            done += 64;
        }
        let rem = len - done;
        if rem > 0 {
            let mask = u64::MAX >> (64 - rem);
            h = mix(h ^ (self.read_word(off + done) & mask));
        }
        h
    }

    /// Copy of the range [off, off+len) as a fresh bit string.
    pub fn slice(&self, off: u64, len: u64) -> Bits {
        assert!(off + len <= self.len, "slice out of range");
        let mut words = Vec::with_capacity(len.div_ceil(64) as usize);
        let mut done = 0;
        while done < len {
            words.push(self.read_word(off + done));
            done += 64;
        }
        if !len.is_multiple_of(64) {
            let last = words.len() - 1;
            words[last] &= u64::MAX >> (64 - len % 64);
        }
        Bits { words, len }
    }

    /// Append the bitwise complement of the current contents (the doubling
    /// step of the Thue-Morse construction). Only valid when `len` is a
    /// multiple of 64, so whole words can be complemented.
    fn append_complement(&mut self) {
        debug_assert_eq!(self.len % 64, 0);
        let n = self.words.len();
        self.words.reserve(n);
        for i in 0..n {
            let w = !self.words[i];
            self.words.push(w);
        }
        self.len *= 2;
    }

    pub fn to_bit_string(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) == 1 { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Display for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

#[inline]
fn mix(x: u64) -> u64 {
    // splitmix64 finalizer
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// A bit-packed prefix of 𝐭 that grows on demand by the doubling law.
///
/// The buffer length is always a power of two ≥ 64; growth appends the
/// complement of the current prefix one whole word at a time, which is exact
/// because A_{n+1} = A_n · complement(A_n). A fully grown buffer is immutable
/// and can be shared across threads; extend before fanning out readers.
#[derive(Debug, Clone)]
pub struct TmBuffer {
    bits: Bits,
    cap_letters: u64,
}

#[allow(clippy::len_without_is_empty)] // holds at least the 64-letter seed
impl TmBuffer {
    /// Buffer seeded with the first 64 letters, default cap.
    pub fn new() -> TmBuffer {
        TmBuffer::with_cap(DEFAULT_CAP_LETTERS).expect("default cap is valid")
    }

    /// Buffer with an explicit cap (in letters). The cap must be at least 64;
    /// since growth always targets a power of two, the usable capacity is the
    /// largest power of two not exceeding the cap.
    pub fn with_cap(cap_letters: u64) -> Result<TmBuffer> {
        if cap_letters < 64 {
            return Err(Error::Domain(format!(
                "buffer cap must be at least 64 letters, got {cap_letters}"
            )));
        }
        // Seed one word by doubling inside a register: 0 -> 01 -> 0110 -> ...
        let mut w: u64 = 0;
        let mut len = 1;
        while len < 64 {
            let mask = (1u64 << len) - 1;
            w |= (!w & mask) << len;
            len *= 2;
        }
        Ok(TmBuffer {
            bits: Bits {
                words: vec![w],
                len: 64,
            },
            cap_letters,
        })
    }

    pub fn len(&self) -> u64 {
        self.bits.len()
    }

    pub fn cap_letters(&self) -> u64 {
        self.cap_letters
    }

    /// Read-only view of the packed prefix.
    pub fn bits(&self) -> &Bits {
        &self.bits
    }

    /// Letter 𝐭_i (1-based) from the grown prefix. Panics if i is 0 or past
    /// the current length; call [`TmBuffer::extend_to`] first.
    pub fn letter(&self, i: u64) -> u8 {
        assert!(i >= 1, "letter indices are 1-based");
        self.bits.get(i - 1)
    }

    /// Grow the prefix so it holds at least `n` letters. Growth proceeds to
    /// the next power of two; existing bits are never touched. Errs if the
    /// power-of-two target would exceed the cap.
    pub fn extend_to(&mut self, n: u64) -> Result<()> {
        if n <= self.bits.len() {
            return Ok(());
        }
        let target = n
            .checked_next_power_of_two()
            .ok_or_else(|| Error::Resource {
                requested_letters: n,
                cap_letters: self.cap_letters,
                context: String::new(),
            })?;
        if target > self.cap_letters {
            return Err(Error::Resource {
                requested_letters: n,
                cap_letters: self.cap_letters,
                context: String::new(),
            });
        }
        while self.bits.len() < target {
            self.bits.append_complement();
        }
        Ok(())
    }

    /// ⟨α, β⟩ as a packed bit string, growing the buffer as needed.
    pub fn segment_bits(&mut self, seg: Segment) -> Result<Bits> {
        self.extend_to(seg.beta())?;
        Ok(self.bits.slice(seg.alpha() - 1, seg.len()))
    }
}

impl Default for TmBuffer {
    fn default() -> Self {
        TmBuffer::new()
    }
}

/// μⁿ(word) where μ(0) = 01 and μ(1) = 10. Output length is |word|·2ⁿ.
pub fn mu_apply(word: &Bits, n: u32) -> Bits {
    let mut cur = word.clone();
    for _ in 0..n {
        let mut next = Bits::with_capacity(cur.len() * 2);
        for i in 0..cur.len() {
            let b = cur.get(i);
            next.push(b);
            next.push(1 - b);
        }
        cur = next;
    }
    cur
}

/// σ(word) where σ(01) = 0 and σ(10) = 1, halving the word. Every consecutive
/// pair must be 01 or 10; a 00 or 11 pair is a coding error naming the
/// offending block (1-based).
pub fn sigma_apply(word: &Bits) -> Result<Bits> {
    if !word.len().is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "pair coding requires even length, got {}",
            word.len()
        )));
    }
    let mut out = Bits::with_capacity(word.len() / 2);
    for block in 0..word.len() / 2 {
        let a = word.get(2 * block);
        let b = word.get(2 * block + 1);
        if a == b {
            return Err(Error::Coding { block: block + 1 });
        }
        out.push(a);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const PREFIX16: &str = "0110100110010110";

    #[test]
    fn letter_rule_matches_printed_prefix() {
        assert_eq!(tm_letter(1).unwrap(), 0);
        assert_eq!(tm_letter(2).unwrap(), 1);
        let got: String = (1..=16)
            .map(|i| char::from(b'0' + tm_letter(i).unwrap()))
            .collect();
        assert_eq!(got, PREFIX16);
    }

    #[test]
    fn letter_rule_at_large_index() {
        // binary expansion of 2^20 has exactly one 1
        assert_eq!(tm_letter((1 << 20) + 1).unwrap(), 1);
    }

    #[test]
    fn letter_index_zero_is_domain_error() {
        assert!(matches!(tm_letter(0), Err(Error::Domain(_))));
    }

    #[test]
    fn buffer_seed_matches_printed_prefix() {
        let buf = TmBuffer::new();
        assert!(buf.len() >= 16);
        let head: String = (1..=16).map(|i| char::from(b'0' + buf.letter(i))).collect();
        assert_eq!(head, PREFIX16);
    }

    #[test]
    fn extend_is_noop_when_long_enough() {
        let mut buf = TmBuffer::new();
        let before = buf.len();
        buf.extend_to(10).unwrap();
        assert_eq!(buf.len(), before);
    }

    #[test]
    fn extend_grows_to_next_power_of_two() {
        let mut buf = TmBuffer::new();
        buf.extend_to(65).unwrap();
        assert_eq!(buf.len(), 128);
        buf.extend_to(129).unwrap();
        assert_eq!(buf.len(), 256);
    }

    #[test]
    fn growth_appends_complement_of_prefix() {
        let mut buf = TmBuffer::new();
        buf.extend_to(128).unwrap();
        for i in 1..=64 {
            assert_eq!(buf.letter(64 + i), 1 - buf.letter(i));
        }
    }

    #[test]
    fn extend_past_cap_is_resource_error() {
        let mut buf = TmBuffer::with_cap(1 << 10).unwrap();
        let err = buf.extend_to((1 << 10) + 1).unwrap_err();
        match err {
            Error::Resource { cap_letters, .. } => assert_eq!(cap_letters, 1 << 10),
            other => panic!("expected resource error, got {other:?}"),
        }
        // exactly at the cap is fine
        buf.extend_to(1 << 10).unwrap();
        assert_eq!(buf.len(), 1 << 10);
    }

    #[test]
    fn segment_examples() {
        let mut buf = TmBuffer::new();
        let s = buf.segment_bits(Segment::new(1, 16).unwrap()).unwrap();
        assert_eq!(s.to_bit_string(), PREFIX16);
        let s = buf.segment_bits(Segment::new(4, 5).unwrap()).unwrap();
        assert_eq!(s.to_bit_string(), "01");
        let s = buf.segment_bits(Segment::new(5, 8).unwrap()).unwrap();
        assert_eq!(s.to_bit_string(), "1001");
    }

    #[test]
    fn segment_validation() {
        assert!(Segment::new(0, 3).is_err());
        assert!(Segment::new(5, 4).is_err());
        assert_eq!(Segment::new(7, 7).unwrap().len(), 1);
    }

    #[test]
    fn mu_examples() {
        let zero = Bits::from_bit_str("0").unwrap();
        assert_eq!(mu_apply(&zero, 1).to_bit_string(), "01");
        assert_eq!(mu_apply(&zero, 3).to_bit_string(), "01101001");
        let w = Bits::from_bit_str("1011").unwrap();
        assert_eq!(mu_apply(&w, 0), w);
    }

    #[test]
    fn sigma_examples() {
        let w = Bits::from_bit_str("0110").unwrap();
        assert_eq!(sigma_apply(&w).unwrap().to_bit_string(), "01");
        let prefix = Bits::from_bit_str(PREFIX16).unwrap();
        assert_eq!(sigma_apply(&mu_apply(&prefix, 1)).unwrap(), prefix);
        let bad = Bits::from_bit_str("0011").unwrap();
        assert_eq!(sigma_apply(&bad).unwrap_err(), Error::Coding { block: 1 });
        let odd = Bits::from_bit_str("011").unwrap();
        assert!(matches!(sigma_apply(&odd), Err(Error::Domain(_))));
    }

    #[test]
    fn mu_of_buffer_pairs_matches_buffer() {
        // (t_{2i-1}, t_{2i}) = mu(t_i)
        let mut buf = TmBuffer::new();
        buf.extend_to(4096).unwrap();
        for i in 1..=2048u64 {
            let (a, b) = (buf.letter(2 * i - 1), buf.letter(2 * i));
            if buf.letter(i) == 0 {
                assert_eq!((a, b), (0, 1), "at i={i}");
            } else {
                assert_eq!((a, b), (1, 0), "at i={i}");
            }
        }
    }

    #[test]
    fn adjacent_letters_after_even_index_differ() {
        // t_{2m+1} != t_{2m+2} for 2m+2 <= 2^20
        let mut buf = TmBuffer::new();
        buf.extend_to(1 << 20).unwrap();
        for m in 1..=((1u64 << 20) - 2) / 2 {
            assert_ne!(buf.letter(2 * m + 1), buf.letter(2 * m + 2), "at m={m}");
        }
    }

    #[test]
    fn pair_at_scaled_index_is_stable() {
        // t_{2^L k + 1} t_{2^L k + 2} = t_{2^{L+1} k + 1} t_{2^{L+1} k + 2}
        let mut buf = TmBuffer::new();
        buf.extend_to((1 << 11) * (1 << 10) + 2).unwrap();
        for l in 1..=10u32 {
            for k in 1..=(1u64 << 10) {
                let a = (buf.letter((1 << l) * k + 1), buf.letter((1 << l) * k + 2));
                let b = (
                    buf.letter((1 << (l + 1)) * k + 1),
                    buf.letter((1 << (l + 1)) * k + 2),
                );
                assert_eq!(a, b, "at L={l}, k={k}");
            }
        }
    }

    #[test]
    fn power_of_two_segments_are_mu_images() {
        // <2^n r + 1, 2^n (r+1)> = mu^n(t_{r+1}) for n <= 12, r <= 2^8
        let mut buf = TmBuffer::new();
        buf.extend_to((1 << 12) * 257).unwrap();
        for n in 0..=12u32 {
            for r in 0..=(1u64 << 8) {
                let seg = Segment::new((1 << n) * r + 1, (1 << n) * (r + 1)).unwrap();
                let got = buf.segment_bits(seg).unwrap();
                let mut letter = Bits::new();
                letter.push(buf.letter(r + 1));
                assert_eq!(got, mu_apply(&letter, n), "at n={n}, r={r}");
            }
        }
    }

    #[test]
    fn prefix_is_cube_free() {
        // no factor www with |w| >= 1 in the prefix of length 2^12
        let mut buf = TmBuffer::new();
        buf.extend_to(1 << 12).unwrap();
        let bits = buf.bits();
        let n = 1u64 << 12;
        for w in 1..=n / 3 {
            for start in 0..=(n - 3 * w) {
                assert!(
                    !(bits.range_eq(start, start + w, w) && bits.range_eq(start, start + 2 * w, w)),
                    "cube of length {w} at offset {start}"
                );
            }
        }
    }

    #[test]
    fn bits_roundtrip_and_slice() {
        let s = "101100111000101";
        let b = Bits::from_bit_str(s).unwrap();
        assert_eq!(b.to_bit_string(), s);
        assert_eq!(b.slice(3, 5).to_bit_string(), &s[3..8]);
        assert!(Bits::from_bit_str("01x").is_err());
    }

    #[test]
    fn range_eq_handles_word_boundaries() {
        let mut buf = TmBuffer::new();
        buf.extend_to(1 << 10).unwrap();
        let bits = buf.bits();
        // from the printed prefix: t5..8 = 1001, t13..16 = 0110
        assert!(!bits.range_eq(4, 12, 4));
        // t over the alphabet {A_6, B_6} is t itself: 64-letter block i is A_6
        // iff t_i = 0, so blocks 1 and 4 agree and blocks 1 and 3 differ.
        assert!(bits.range_eq(0, 192, 64));
        assert!(bits.range_eq(64, 128, 64));
        assert!(!bits.range_eq(0, 128, 64));
    }
}
