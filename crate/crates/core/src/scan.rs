//! Batch drivers sweeping (j, k, m) grids into plot-ready rows: γ/Γ ratio
//! tables, doubling-conjecture statistics, and family probes.
//!
//! Grid points are independent, so sweeps run on a static partition of the
//! range across workers and merge in input order; repeated runs with the same
//! inputs produce identical rows regardless of worker count. Each worker owns
//! its word buffer.

use crate::antipower::{ap_membership_pair, big_gamma, gamma, is_anti_power, ApQuery};
use crate::bounds::{family_point, Family, FamilyPoint};
use crate::error::{Error, Result};
use crate::rational::Ratio;
use crate::tm::TmBuffer;

/// One k of a ratio sweep: γ_j(k), Γ_j(k) and their ratios to k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioRow {
    pub j: u64,
    pub k: u64,
    pub gamma: u64,
    pub gamma_ratio: Ratio,
    pub big_gamma: Option<u64>,
    pub big_gamma_ratio: Option<Ratio>,
}

/// Doubling-conjecture statistics for one (j, k): the m ≤ m_max with
/// asymmetric membership of (m, 2m).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub j: u64,
    pub k: u64,
    pub m_max: u64,
    pub violations: Vec<u64>,
}

impl ConjectureReport {
    pub fn count(&self) -> u64 {
        self.violations.len() as u64
    }
}

/// A probed family member: is m_bound really outside the anti-power set at
/// k_value, and how close is the ratio to its limit?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyProbePoint {
    pub point: FamilyPoint,
    pub observed_ok: bool,
    pub ratio: Ratio,
}

/// Run `work` over `items`, strided across at most `threads` workers, and
/// merge results in input order. `threads <= 1` runs inline (no spawn), which
/// also keeps single-threaded targets happy. The first error in input order
/// wins, so failures are as deterministic as successes.
fn run_partitioned_with<I, T, F, B>(
    items: Vec<I>,
    threads: usize,
    make_buf: B,
    work: F,
) -> Result<Vec<T>>
where
    I: Sync,
    T: Send,
    F: Fn(&mut TmBuffer, &I) -> Result<T> + Sync,
    B: Fn() -> TmBuffer + Sync,
{
    let n = items.len();
    if threads <= 1 || n <= 1 {
        let mut buf = make_buf();
        return items.iter().map(|it| work(&mut buf, it)).collect();
    }
    let workers = threads.min(n);
    let mut slots: Vec<Option<Result<T>>> = (0..n).map(|_| None).collect();
    std::thread::scope(|scope| {
        let mut handles = Vec::with_capacity(workers);
        for (stripe, chunk) in stripes(&items, &mut slots, workers) {
            let work = &work;
            let make_buf = &make_buf;
            handles.push(scope.spawn(move || {
                let mut buf = make_buf();
                for (item, slot) in stripe.into_iter().zip(chunk) {
                    *slot = Some(work(&mut buf, item));
                }
            }));
        }
        for h in handles {
            h.join().expect("worker panicked");
        }
    });
    let mut out = Vec::with_capacity(n);
    for slot in slots {
        out.push(slot.expect("every slot filled")?);
    }
    Ok(out)
}

type Stripe<'a, I, T> = (Vec<&'a I>, Vec<&'a mut Option<Result<T>>>);

/// Pair up the i-th item with the i-th result slot, striding by worker count.
fn stripes<'a, I, T>(
    items: &'a [I],
    slots: &'a mut [Option<Result<T>>],
    workers: usize,
) -> Vec<Stripe<'a, I, T>> {
    let mut out: Vec<Stripe<'a, I, T>> = (0..workers).map(|_| (Vec::new(), Vec::new())).collect();
    for (i, (item, slot)) in items.iter().zip(slots.iter_mut()).enumerate() {
        out[i % workers].0.push(item);
        out[i % workers].1.push(slot);
    }
    out
}

fn with_k_context<T>(res: Result<T>, k: u64) -> Result<T> {
    res.map_err(|e| match e {
        Error::Resource {
            requested_letters,
            cap_letters,
            context,
        } => Error::Resource {
            requested_letters,
            cap_letters,
            context: if context.is_empty() {
                format!("k = {k}")
            } else {
                format!("k = {k}: {context}")
            },
        },
        other => other,
    })
}

/// γ and Γ ratios for every k in [k_min, k_max].
pub fn ratio_sweep(
    j: u64,
    k_min: u64,
    k_max: u64,
    threads: usize,
    cap_letters: u64,
) -> Result<Vec<RatioRow>> {
    if k_min < 1 || k_min > k_max {
        return Err(Error::Domain(format!(
            "need 1 <= k_min <= k_max, got [{k_min}, {k_max}]"
        )));
    }
    drop(TmBuffer::with_cap(cap_letters)?); // reject bad caps before spawning
    let ks: Vec<u64> = (k_min..=k_max).collect();
    run_partitioned_with(
        ks,
        threads,
        || TmBuffer::with_cap(cap_letters).expect("validated cap"),
        |buf, &k| {
            let g = with_k_context(gamma(buf, j, k), k)?;
            let bg = with_k_context(big_gamma(buf, j, k), k)?;
            Ok(RatioRow {
                j,
                k,
                gamma: g,
                gamma_ratio: Ratio::new(g as i128, k as i128),
                big_gamma: bg,
                big_gamma_ratio: bg.map(|m| Ratio::new(m as i128, k as i128)),
            })
        },
    )
}

/// Exhaustive membership-pair scan of m in [1, m_max] at one (j, k).
pub fn conjecture_scan(buf: &mut TmBuffer, j: u64, k: u64, m_max: u64) -> Result<ConjectureReport> {
    if k < 3 {
        return Err(Error::Domain(format!(
            "the doubling conjecture concerns k >= 3, got k = {k}"
        )));
    }
    let mut violations = Vec::new();
    for m in 1..=m_max {
        let (a, b) = ap_membership_pair(buf, j, k, m)?;
        if a != b {
            violations.push(m);
        }
    }
    Ok(ConjectureReport {
        j,
        k,
        m_max,
        violations,
    })
}

/// [`conjecture_scan`] over a k-range, parallel, rows in k order.
pub fn conjecture_sweep(
    j: u64,
    k_min: u64,
    k_max: u64,
    m_max: u64,
    threads: usize,
    cap_letters: u64,
) -> Result<Vec<ConjectureReport>> {
    if k_min < 3 || k_min > k_max {
        return Err(Error::Domain(format!(
            "need 3 <= k_min <= k_max, got [{k_min}, {k_max}]"
        )));
    }
    drop(TmBuffer::with_cap(cap_letters)?);
    let ks: Vec<u64> = (k_min..=k_max).collect();
    run_partitioned_with(
        ks,
        threads,
        || TmBuffer::with_cap(cap_letters).expect("validated cap"),
        |buf, &k| with_k_context(conjecture_scan(buf, j, k, m_max), k),
    )
}

/// Mean violation count per (j, k) pair across a batch of reports; the mean
/// is exact. Reports may mix several j (the joint mean) or share one.
pub fn mean_violation_count(reports: &[ConjectureReport]) -> Ratio {
    if reports.is_empty() {
        return Ratio::from_int(0);
    }
    let total: i128 = reports.iter().map(|r| r.count() as i128).sum();
    Ratio::new(total, reports.len() as i128)
}

/// Probe family members across a parameter range: for each point, check that
/// m_bound really lies outside the anti-power set at k_value.
pub fn family_probe(
    family: Family,
    param_min: u32,
    param_max: u32,
    j: u64,
    threads: usize,
    cap_letters: u64,
) -> Result<Vec<FamilyProbePoint>> {
    if param_min > param_max {
        return Err(Error::Domain(format!(
            "need param_min <= param_max, got [{param_min}, {param_max}]"
        )));
    }
    // surface hypothesis errors (parameter below floor) and bad caps before
    // spawning
    for p in param_min..=param_max {
        family_point(family, p, j)?;
    }
    drop(TmBuffer::with_cap(cap_letters)?);
    let params: Vec<u32> = (param_min..=param_max).collect();
    run_partitioned_with(
        params,
        threads,
        || TmBuffer::with_cap(cap_letters).expect("validated cap"),
        |buf, &parameter| {
            let point = family_point(family, parameter, j)?;
            let q = ApQuery::new(j, point.k_value, point.m_bound)?;
            let observed_ok = !is_anti_power(buf, &q)?;
            Ok(FamilyProbePoint {
                ratio: Ratio::new(point.m_bound as i128, point.k_value as i128),
                point,
                observed_ok,
            })
        },
    )
}
