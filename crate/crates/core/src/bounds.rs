//! Instantiation and verification of the upper/lower bounds on 𝔎_j(m), the
//! yvy divisibility property, the six-condition block-equality construction,
//! and the three explicit k-families with their Γ lower bounds.
//!
//! All bound values are exact rationals; comparisons against observed
//! integers cross-multiply. A check whose hypothesis is not met is reported
//! as skipped (vacuously true), never silently counted as a pass.

use crate::antipower::{ceil_log2, frak_k};
use crate::error::{Error, Result};
use crate::rational::Ratio;
use crate::tm::{letter_unchecked, TmBuffer};

/// ℓ = ⌈log₂(m + j)⌉, the scale every bound here is phrased in.
pub fn ell_of(j: u64, m: u64) -> u32 {
    assert!(m >= 1, "ell_of requires m >= 1");
    ceil_log2(m + j)
}

/// δ(m) = ⌈log₂(m/3)⌉ for m ≥ 2: the smallest d ≥ 0 with 3·2^d ≥ m.
pub fn delta_of(m: u64) -> Result<u32> {
    if m < 2 {
        return Err(Error::Domain(format!("delta_of requires m >= 2, got {m}")));
    }
    let mut d = 0;
    while 3u64 << d < m {
        d += 1;
    }
    Ok(d)
}

/// 2^{δ(m)} as an exact rational, extended to m = 1 where δ = −1.
fn delta_pow2_ratio(m: u64) -> Ratio {
    if m == 1 {
        Ratio::new(1, 2)
    } else {
        Ratio::from_int(1i128 << delta_of(m).expect("m >= 2"))
    }
}

/// The upper-bound registry. Each variant carries its hypothesis class on m
/// (and, for the uniform bounds, the positivity of the denominator).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LemmaId {
    /// m even: 𝔎_j(m) < 2^{ℓ+1} + (2^{ℓ+1} − j)/m.
    Even,
    /// m = 2^L h + 1 (h odd, L ≥ 3): 𝔎_j(m) < 2^ℓ + (2^ℓ(2^{L+1}+4) − j)/m.
    OneMod8A,
    /// Same m shape, witnessed by any admissible n:
    /// 𝔎_j(m) ≤ 2^{ℓ+1} − (2^{ℓ+1}(n−1) + j)/m.
    OneMod8B,
    /// m ≡ 29 (mod 32): 𝔎_j(m) < 2^{ℓ+1} + (20·2^ℓ − j)/m.
    Mod32_29,
    /// m odd, ≢ 1 (mod 8), ≢ 29 (mod 32): 𝔎_j(m) < 2^ℓ + (37·2^ℓ − j)/m.
    OddOther,
    /// m ≡ 1 (mod 8) uniform form: 𝔎_j(m) ≤ 2^ℓ + 2^{ℓ+1}(2^ℓ+2+j)/(2^{ℓ−1}−j).
    Uniform1Mod8,
    /// m ≥ 2, ≢ 1 (mod 8): 𝔎_j(m) ≤ 2^ℓ + 2^{ℓ+1}·max{2^ℓ+2+j, 20}/(2^{ℓ−1}−j).
    UniformOther,
    /// Witness pair t_s t_{s+1} = t_{m+s} t_{m+s+1}:
    /// 𝔎_j(m) < 2^ℓ + (2^ℓ(s+1) − j)/m.
    SWitness,
}

impl LemmaId {
    pub const ALL: [LemmaId; 8] = [
        LemmaId::Even,
        LemmaId::OneMod8A,
        LemmaId::OneMod8B,
        LemmaId::Mod32_29,
        LemmaId::OddOther,
        LemmaId::Uniform1Mod8,
        LemmaId::UniformOther,
        LemmaId::SWitness,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            LemmaId::Even => "EVEN",
            LemmaId::OneMod8A => "ONE_MOD8_A",
            LemmaId::OneMod8B => "ONE_MOD8_B",
            LemmaId::Mod32_29 => "MOD32_29",
            LemmaId::OddOther => "ODD_OTHER",
            LemmaId::Uniform1Mod8 => "UNIFORM_1MOD8",
            LemmaId::UniformOther => "UNIFORM_OTHER",
            LemmaId::SWitness => "S_WITNESS",
        }
    }

    pub fn parse(s: &str) -> Result<LemmaId> {
        LemmaId::ALL
            .iter()
            .copied()
            .find(|l| l.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown lemma id {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    StrictLess,
    LessEqual,
    StrictGreater,
}

impl Comparison {
    pub fn as_str(&self) -> &'static str {
        match self {
            Comparison::StrictLess => "<",
            Comparison::LessEqual => "<=",
            Comparison::StrictGreater => ">",
        }
    }

    fn eval(&self, observed: u64, bound: Ratio) -> bool {
        let ord = bound.cmp_int(observed as i128);
        match self {
            Comparison::StrictLess => ord == std::cmp::Ordering::Greater,
            Comparison::LessEqual => ord != std::cmp::Ordering::Less,
            Comparison::StrictGreater => ord == std::cmp::Ordering::Less,
        }
    }
}

/// One verified bound instance. `holds` is the truth of
/// `observed <comparison> bound` whenever the hypothesis is met, and is
/// vacuously true (a "skipped" row) otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub lemma_id: &'static str,
    pub j: u64,
    pub m: u64,
    pub ell: u32,
    pub hypothesis_met: bool,
    pub bound: Option<Ratio>,
    pub comparison: Comparison,
    pub observed: u64,
    pub holds: bool,
}

impl BoundCheck {
    pub fn skipped(&self) -> bool {
        !self.hypothesis_met
    }
}

/// Default cap on the witness search in [`LemmaId::SWitness`]; generous
/// against the witnesses the hypothesis-class proofs actually use (s ≤ 36).
pub const DEFAULT_S_WITNESS_CAP: u64 = 64;

/// Decompose m = 2^L h + 1 with h odd, L ≥ 3 (the "1 mod 8" shape).
fn one_mod8_shape(m: u64) -> Option<u32> {
    if m >= 9 && (m - 1).is_multiple_of(8) {
        Some((m - 1).trailing_zeros())
    } else {
        None
    }
}

/// Smallest s ≥ 1 with t_s t_{s+1} = t_{m+s} t_{m+s+1}, up to `s_cap`.
pub fn s_witness(m: u64, s_cap: u64) -> Option<u64> {
    (1..=s_cap).find(|&s| {
        letter_unchecked(s) == letter_unchecked(m + s)
            && letter_unchecked(s + 1) == letter_unchecked(m + s + 1)
    })
}

/// Evaluate one registry lemma against an already computed 𝔎_j(m) value.
/// Hypotheses only involve residues of m and letters of 𝐭 (via the stateless
/// letter rule), so no buffer is needed.
pub fn check_upper_bound_with_observed(
    lemma: LemmaId,
    j: u64,
    m: u64,
    observed: u64,
) -> Result<BoundCheck> {
    if m == 0 {
        return Err(Error::Domain("block length m must be at least 1".into()));
    }
    if m.checked_add(j).is_none() {
        return Err(Error::Domain(format!("m + j overflows at j = {j}, m = {m}")));
    }
    let ell = ell_of(j, m);
    let p = |e: u32| 1i128 << e;
    let (ji, mi) = (j as i128, m as i128);

    let mut extra_ok = true; // per-instance facts the lemma's argument relies on
    let (hypothesis_met, bound, comparison) = match lemma {
        LemmaId::Even => (
            m.is_multiple_of(2),
            Some(Ratio::new(p(ell + 1) * mi + p(ell + 1) - ji, mi)),
            Comparison::StrictLess,
        ),
        LemmaId::OneMod8A => match one_mod8_shape(m) {
            Some(l) => (
                true,
                Some(Ratio::new(p(ell) * mi + p(ell) * (p(l + 1) + 4) - ji, mi)),
                Comparison::StrictLess,
            ),
            None => (false, None, Comparison::StrictLess),
        },
        LemmaId::OneMod8B => {
            let mut best: Option<Ratio> = None;
            if let Some(l) = one_mod8_shape(m) {
                for n in 2..=(1u64 << (l - 1)) {
                    let letters_agree = letter_unchecked(m - n) == letter_unchecked(m - n + 1);
                    // m + j <= (1 - 1/(2n+2)) 2^l  <=>  (m+j)(2n+2) <= 2^l (2n+1)
                    let size_ok = (m + j) as u128 * (2 * n + 2) as u128
                        <= (1u128 << ell) * (2 * n + 1) as u128;
                    if letters_agree && size_ok {
                        let ni = n as i128;
                        let b = Ratio::new(p(ell + 1) * mi - p(ell + 1) * (ni - 1) - ji, mi);
                        best = Some(match best {
                            Some(cur) => cur.min(b),
                            None => b,
                        });
                        // the admissible-n argument leans on the letter triple
                        // t_{m-2n..m-2n+2} = t_{2m-2n..2m-2n+2}; verify it
                        // per instance rather than assuming it
                        for d in 0..3 {
                            if letter_unchecked(m - 2 * n + d)
                                != letter_unchecked(2 * m - 2 * n + d)
                            {
                                extra_ok = false;
                            }
                        }
                    }
                }
            }
            (best.is_some(), best, Comparison::LessEqual)
        }
        LemmaId::Mod32_29 => (
            m % 32 == 29,
            Some(Ratio::new(p(ell + 1) * mi + 20 * p(ell) - ji, mi)),
            Comparison::StrictLess,
        ),
        LemmaId::OddOther => (
            m % 2 == 1 && m % 8 != 1 && m % 32 != 29,
            Some(Ratio::new(p(ell) * mi + 37 * p(ell) - ji, mi)),
            Comparison::StrictLess,
        ),
        LemmaId::Uniform1Mod8 => {
            // the m = 2^L h + 1 shape forces m >= 9, hence ell >= 4
            let den = if one_mod8_shape(m).is_some() {
                p(ell - 1) - ji
            } else {
                0
            };
            if den > 0 {
                let num = p(ell) * den + p(ell + 1) * (p(ell) + 2 + ji);
                (true, Some(Ratio::new(num, den)), Comparison::LessEqual)
            } else {
                (false, None, Comparison::LessEqual)
            }
        }
        LemmaId::UniformOther => {
            let shape = m >= 2 && m % 8 != 1;
            let den = if ell >= 1 { p(ell - 1) - ji } else { 0 };
            if shape && den > 0 {
                let mx = (p(ell) + 2 + ji).max(20);
                let num = p(ell) * den + p(ell + 1) * mx;
                (true, Some(Ratio::new(num, den)), Comparison::LessEqual)
            } else {
                (false, None, Comparison::LessEqual)
            }
        }
        LemmaId::SWitness => {
            if m >= 2 {
                match s_witness(m, DEFAULT_S_WITNESS_CAP) {
                    Some(s) => (
                        true,
                        Some(Ratio::new(p(ell) * mi + p(ell) * (s as i128 + 1) - ji, mi)),
                        Comparison::StrictLess,
                    ),
                    None => (false, None, Comparison::StrictLess),
                }
            } else {
                (false, None, Comparison::StrictLess)
            }
        }
    };

    let holds = !hypothesis_met
        || (extra_ok && bound.map(|b| comparison.eval(observed, b)).unwrap_or(false));
    Ok(BoundCheck {
        lemma_id: lemma.as_str(),
        j,
        m,
        ell,
        hypothesis_met,
        bound,
        comparison,
        observed,
        holds,
    })
}

/// Evaluate one registry lemma: computes 𝔎_j(m) and checks the bound.
pub fn check_upper_bound(buf: &mut TmBuffer, lemma: LemmaId, j: u64, m: u64) -> Result<BoundCheck> {
    let observed = frak_k(buf, j, m)?;
    check_upper_bound_with_observed(lemma, j, m, observed)
}

/// The two lower bounds at scale ℓ ≥ 3:
/// 𝔎_j(3·2^{ℓ−2}+1) > (5·2^{2ℓ−3}−j)/(3·2^{ℓ−2}+1) and
/// 𝔎_j(2^{ℓ−1}+3) > (2^{2ℓ−2}−j)/(2^{ℓ−1}+3).
pub fn check_lower_bound_gen47(
    buf: &mut TmBuffer,
    j: u64,
    ell: u32,
) -> Result<(BoundCheck, BoundCheck)> {
    if ell < 3 {
        return Err(Error::Domain(format!(
            "the lower bounds require ell >= 3, got {ell}"
        )));
    }
    if ell > 30 {
        return Err(Error::Domain(format!(
            "ell = {ell} is out of desk-scale range"
        )));
    }
    let ji = j as i128;
    let m1 = 3 * (1u64 << (ell - 2)) + 1;
    let m2 = (1u64 << (ell - 1)) + 3;
    let bound1 = Ratio::new(5 * (1i128 << (2 * ell - 3)) - ji, m1 as i128);
    let bound2 = Ratio::new((1i128 << (2 * ell - 2)) - ji, m2 as i128);
    let mk = |lemma_id, m, bound, observed| BoundCheck {
        lemma_id,
        j,
        m,
        ell,
        hypothesis_met: true,
        bound: Some(bound),
        comparison: Comparison::StrictGreater,
        observed,
        holds: Comparison::StrictGreater.eval(observed, bound),
    };
    let o1 = frak_k(buf, j, m1)?;
    let o2 = frak_k(buf, j, m2)?;
    Ok((mk("GEN47_A", m1, bound1, o1), mk("GEN47_B", m2, bound2, o2)))
}

/// For every odd m ≤ 3k−4: if 𝔎_j(m) ≤ k (i.e. m is NOT in the odd
/// anti-power set at level k), then k−1 ≥ 2^{δ(m)}. The check certifies the
/// sharper per-m fact 𝔎_j(m) > 2^{δ(m)}, which implies the claim for every
/// k ≥ 𝔎_j(m) at once; rows with 𝔎_j(m) > k are reported as skipped.
pub fn check_gencor(buf: &mut TmBuffer, j: u64, k: u64) -> Result<Vec<BoundCheck>> {
    if k < 3 {
        return Err(Error::Domain(format!(
            "the divisibility check requires k >= 3, got k = {k}"
        )));
    }
    let mut rows = Vec::new();
    let odd_ceiling = k.saturating_mul(3) - 4;
    // walk m downward so the largest threshold scan, which dominates the
    // buffer need, runs first; an infeasible sweep then errors immediately
    let mut m = odd_ceiling - (1 - odd_ceiling % 2);
    loop {
        let observed = frak_k(buf, j, m)?;
        let bound = delta_pow2_ratio(m);
        let hypothesis_met = observed <= k;
        rows.push(BoundCheck {
            lemma_id: "GENCOR",
            j,
            m,
            ell: ell_of(j, m),
            hypothesis_met,
            bound: Some(bound),
            comparison: Comparison::StrictGreater,
            observed,
            holds: !hypothesis_met || Comparison::StrictGreater.eval(observed, bound),
        });
        if m == 1 {
            break;
        }
        m -= 2;
    }
    rows.reverse();
    Ok(rows)
}

/// One yvy violation: equal length-m factors at 1-based positions
/// `position` and `position + yv_len` whose gap 2^{δ(m)} fails to divide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct YvyViolation {
    pub position: u64,
    pub yv_len: u64,
}

/// Naive scan for the divisibility property: every pair of equal length-m
/// factors y at positions a < b ≤ prefix_len − m has 2^{δ(m)} | (b − a).
/// The double loop is deliberately the brute-force oracle; an empty result
/// is the expected outcome.
pub fn check_prop_yvy(buf: &mut TmBuffer, m: u64, prefix_len: u64) -> Result<Vec<YvyViolation>> {
    if m < 2 {
        return Err(Error::Domain(format!("yvy scan requires m >= 2, got {m}")));
    }
    if prefix_len < m.saturating_mul(3) {
        return Err(Error::Domain(format!(
            "yvy scan requires prefix_len >= 3m, got {prefix_len} < {}",
            m.saturating_mul(3)
        )));
    }
    buf.extend_to(prefix_len)?;
    let bits = buf.bits();
    let divisor = 1u64 << delta_of(m)?;
    let last = prefix_len - m;
    let mut violations = Vec::new();
    for a in 1..=last {
        for b in (a + 1)..=last {
            if (b - a) % divisor != 0 && bits.range_eq(a - 1, b - 1, m) {
                violations.push(YvyViolation {
                    position: a,
                    yv_len: b - a,
                });
            }
        }
    }
    Ok(violations)
}

/// The six parameters of the block-equality construction, plus the shift j.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructionTuple {
    pub j: u64,
    pub r: u64,
    pub m: u64,
    pub ell: u32,
    pub h: u64,
    pub p: u64,
    pub q: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionVerdict {
    /// All six conditions hold. `blocks_equal` is the bit-exact confirmation
    /// that block r equals block r + 2^{ℓ−2} (length m, shift j), which
    /// witnesses 𝔎_j(m) ≤ r + 2^{ℓ−2} + 1 = `frak_k_upper`.
    Holds {
        blocks_equal: bool,
        frak_k_upper: u64,
    },
    /// `condition` (1-based) is the first of the six conditions to fail.
    ConditionFailed { condition: u8 },
}

/// Check the six conditions by exact arithmetic and, when they all hold,
/// confirm the concluded block equality letter-by-letter with the stateless
/// letter rule (so arbitrarily large instances need no buffer).
pub fn verify_construction(t: &ConstructionTuple) -> Result<ConstructionVerdict> {
    if t.ell < 2 {
        return Err(Error::Domain(format!(
            "the construction requires ell >= 2, got {}",
            t.ell
        )));
    }
    // keep every condition product inside i128
    if t.ell > 80 {
        return Err(Error::Domain(format!("ell = {} is out of range", t.ell)));
    }
    let field_cap = 1u64 << 40;
    for (name, v) in [("j", t.j), ("r", t.r), ("m", t.m), ("h", t.h), ("p", t.p), ("q", t.q)] {
        if v >= field_cap {
            return Err(Error::Domain(format!(
                "construction field {name} = {v} is out of range (must be below 2^40)"
            )));
        }
    }
    let (j, r, m, h, p, q) = (
        t.j as i128,
        t.r as i128,
        t.m as i128,
        t.h as i128,
        t.p as i128,
        t.q as i128,
    );
    let pw = |e: u32| 1i128 << e;
    let ell = t.ell;

    // conditions scaled by 4 so that 2^{l-2} and 2^{l-1} stay integral
    let c1 = 4 * h < pw(ell);
    let c2 = 2 <= m && m < pw(ell);
    let c3 = 4 * r * m == pw(ell + 3) * p + pw(ell + 1) + 4 * h - 4 * j;
    let c4 = 4 * (r + 1) * m <= pw(ell + 3) * p + 5 * pw(ell) - 4 * j;
    let c5 = (4 * r + pw(ell)) * m == pw(ell + 3) * q + 3 * pw(ell) + 4 * h - 4 * j;
    let c6 = letter_unchecked(t.p + 1) != letter_unchecked(t.q + 1);

    for (idx, ok) in [c1, c2, c3, c4, c5, c6].into_iter().enumerate() {
        if !ok {
            return Ok(ConstructionVerdict::ConditionFailed {
                condition: idx as u8 + 1,
            });
        }
    }

    let r2 = t.r as u128 + (1u128 << (ell - 2));
    let hi_end = (r2 + 1) * t.m as u128 + t.j as u128;
    if hi_end > u64::MAX as u128 {
        return Err(Error::Domain(
            "construction blocks exceed 64-bit letter positions".into(),
        ));
    }
    let lo_base = t.r * t.m + t.j;
    let hi_base = r2 as u64 * t.m + t.j;
    let blocks_equal =
        (1..=t.m).all(|i| letter_unchecked(lo_base + i) == letter_unchecked(hi_base + i));

    Ok(ConstructionVerdict::Holds {
        blocks_equal,
        frak_k_upper: r2 as u64 + 1,
    })
}

/// The three explicit k-families whose Γ lower bounds pin the limiting ratios.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// k_α = 2^{2α} + 2^α + 2, with Γ_j(k_α) ≥ 3·2^{2α} − 2^α + 1.
    KAlpha,
    /// K_β = 2^{2β+1} + 3·2^{β+3} + 49, with Γ_j(K_β) ≥ 3·2^{2β+1} − 2^{β−1} + 1.
    KBeta,
    /// κ_ρ = 2^ρ + 2, with Γ_j(κ_ρ) ≥ 5·2^{ρ−1} − 8χ_j(ρ) + 1 (j ≥ 1).
    KappaRho,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::KAlpha => "k_alpha",
            Family::KBeta => "K_beta",
            Family::KappaRho => "kappa_rho",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        let norm: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .map(|c| c.to_ascii_lowercase())
            .collect();
        match norm.as_str() {
            "kalpha" | "alpha" => Ok(Family::KAlpha),
            "kbeta" | "beta" => Ok(Family::KBeta),
            "kapparho" | "kappa" | "rho" => Ok(Family::KappaRho),
            _ => Err(Error::Domain(format!(
                "unknown family {s:?} (expected k-alpha, K-beta or kappa-rho)"
            ))),
        }
    }

    /// Parameter floor at shift j, reading ⌈log₂ 0⌉ as 0.
    pub fn parameter_floor(&self, j: u64) -> u32 {
        let lg = if j == 0 { 0 } else { ceil_log2(j) };
        match self {
            Family::KAlpha => lg + 2,
            Family::KBeta => lg + 9,
            Family::KappaRho => lg + 8,
        }
    }
}

/// One member of a k-family together with its guaranteed Γ lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyPoint {
    pub family: Family,
    pub parameter: u32,
    pub k_value: u64,
    pub m_bound: u64,
}

/// χ_j(ρ): 2j+1 when n+ρ is even, 4j+3 when odd, where n is the number of
/// 1 bits of j. Undefined at j = 0.
pub fn chi(j: u64, rho: u32) -> Result<u64> {
    if j == 0 {
        return Err(Error::Domain(
            "chi is undefined at j = 0 (its defining popcount parity needs j >= 1)".into(),
        ));
    }
    if rho == 0 {
        return Err(Error::Domain("chi requires rho >= 1".into()));
    }
    let n = u64::from(j.count_ones());
    if (n + rho as u64).is_multiple_of(2) {
        Ok(2 * j + 1)
    } else {
        Ok(4 * j + 3)
    }
}

/// Evaluate a family member and its guaranteed lower bound m_bound.
pub fn family_point(family: Family, parameter: u32, j: u64) -> Result<FamilyPoint> {
    let floor = family.parameter_floor(j);
    if parameter < floor {
        return Err(Error::Hypothesis(format!(
            "{} requires parameter >= {floor} at j = {j}, got {parameter}",
            family.as_str()
        )));
    }
    if parameter > 28 {
        return Err(Error::Domain(format!(
            "parameter {parameter} overflows 64-bit family arithmetic"
        )));
    }
    let a = parameter;
    let (k_value, m_bound) = match family {
        Family::KAlpha => (
            (1u64 << (2 * a)) + (1 << a) + 2,
            3 * (1u64 << (2 * a)) - (1 << a) + 1,
        ),
        Family::KBeta => (
            (1u64 << (2 * a + 1)) + 3 * (1 << (a + 3)) + 49,
            3 * (1u64 << (2 * a + 1)) - (1 << (a - 1)) + 1,
        ),
        Family::KappaRho => {
            let x = chi(j, a)?;
            ((1u64 << a) + 2, 5 * (1u64 << (a - 1)) - 8 * x + 1)
        }
    };
    Ok(FamilyPoint {
        family,
        parameter,
        k_value,
        m_bound,
    })
}

/// The witness tuple behind each family's Γ lower bound.
pub fn construction_for(family: Family, parameter: u32, j: u64) -> Result<ConstructionTuple> {
    let point = family_point(family, parameter, j)?;
    let a = parameter;
    let t = match family {
        Family::KAlpha => {
            if a < 3 {
                return Err(Error::Hypothesis(format!(
                    "the k_alpha witness tuple needs alpha >= 3 for integral p, got {a}"
                )));
            }
            ConstructionTuple {
                j,
                r: (1 << a) + 1,
                m: point.m_bound,
                ell: 2 * a + 2,
                h: j + 1,
                p: 3 * (1 << (a - 3)),
                q: 3 * (1 << (2 * a - 3)) + (1 << (a - 2)),
            }
        }
        Family::KBeta => ConstructionTuple {
            j,
            r: 3 * (1 << (a + 3)) + 48,
            m: point.m_bound,
            ell: 2 * a + 3,
            h: 48 + j,
            p: 9 * (1 << a) + 17,
            q: 3 * (1 << (2 * a - 2)) + 143 * (1 << (a - 4)) + 17,
        },
        Family::KappaRho => {
            let x = chi(j, a)?;
            ConstructionTuple {
                j,
                r: 1,
                m: point.m_bound,
                ell: a + 2,
                h: (1 << (a - 1)) - 8 * x + j + 1,
                p: 0,
                q: 5 * (1 << (a - 4)) - x,
            }
        }
    };
    Ok(t)
}

/// The three envelopes governing the asymptotics:
/// g dominates every uniform upper bound at scale ℓ, while f and h are the
/// floors of the two lower bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Envelopes {
    pub g: Ratio,
    pub f: i64,
    pub h: i64,
}

fn check_ell_range(ell: u32) -> Result<()> {
    if ell < 3 {
        return Err(Error::Domain(format!(
            "the envelopes require ell >= 3, got {ell}"
        )));
    }
    // keeps every downstream product, including decimal rendering of the
    // values, inside i128
    if ell > 40 {
        return Err(Error::Domain(format!("ell = {ell} is out of range")));
    }
    Ok(())
}

/// f_j(ℓ) = ⌊(5·2^{2ℓ−3} − j) / (3·2^{ℓ−2} + 1)⌋ for ℓ ≥ 3.
pub fn envelope_f(j: u64, ell: u32) -> Result<i64> {
    check_ell_range(ell)?;
    let num = 5 * (1i128 << (2 * ell - 3)) - j as i128;
    Ok(Ratio::new(num, 3 * (1i128 << (ell - 2)) + 1).floor() as i64)
}

/// h_j(ℓ) = ⌊(2^{2ℓ−2} − j) / (2^{ℓ−1} + 3)⌋ for ℓ ≥ 3.
pub fn envelope_h(j: u64, ell: u32) -> Result<i64> {
    check_ell_range(ell)?;
    let num = (1i128 << (2 * ell - 2)) - j as i128;
    Ok(Ratio::new(num, (1i128 << (ell - 1)) + 3).floor() as i64)
}

pub fn asymptotic_envelopes(j: u64, ell: u32) -> Result<Envelopes> {
    check_ell_range(ell)?;
    let ji = j as i128;
    let den = (1i128 << (ell - 1)) - ji;
    if den <= 0 {
        return Err(Error::Hypothesis(format!(
            "g requires 2^(ell-1) > j, got ell = {ell}, j = {j}"
        )));
    }
    let mx = ((1i128 << ell) + 2 + ji).max(20);
    let g = Ratio::new((1i128 << ell) * den + (1i128 << (ell + 1)) * mx, den);
    Ok(Envelopes {
        g,
        f: envelope_f(j, ell)?,
        h: envelope_h(j, ell)?,
    })
}

/// The interleaving h_j(ℓ) < f_j(ℓ) ≤ h_j(ℓ+1) that makes the f/h scales
/// cover every k. Only f and h are involved, so this is defined even where
/// g's denominator hypothesis fails.
pub fn envelopes_interleave(j: u64, ell: u32) -> Result<bool> {
    Ok(envelope_h(j, ell)? < envelope_f(j, ell)? && envelope_f(j, ell)? <= envelope_h(j, ell + 1)?)
}
