//! Browser bindings for the interactive demo page.
//!
//! Three operations, each returning a JSON string the page renders directly:
//! a segment viewer, an anti-power block inspector, and a γ/Γ ratio curve
//! generator. Inputs are capped so every call stays comfortably inside a
//! single animation frame on the main thread (the wasm build is
//! single-threaded; sweeps run with one worker).

use antipower::{ApQuery, Error, Ratio, Segment, TmBuffer};
use wasm_bindgen::prelude::wasm_bindgen;

/// Keep interactive queries bounded: 2^24 letters is 2 MiB packed and far
/// more than the page ever renders.
const DEMO_CAP_LETTERS: u64 = 1 << 24;
/// Upper limit on k * m for the block inspector.
const DEMO_WORD_LIMIT: u64 = 1 << 20;

fn err_json(e: impl std::fmt::Display) -> String {
    serde_json::json!({ "error": e.to_string() }).to_string()
}

fn demo_buffer() -> TmBuffer {
    TmBuffer::with_cap(DEMO_CAP_LETTERS).expect("demo cap is valid")
}

fn ratio_fields(r: Ratio) -> serde_json::Value {
    serde_json::json!({
        "fraction": r.to_fraction_string(),
        "decimal": r.to_decimal_string(6),
        "value": r.numer() as f64 / r.denom() as f64,
    })
}

/// Letters t_alpha ... t_beta as {"alpha", "beta", "bits"}.
#[wasm_bindgen]
pub fn tm_segment(alpha: u32, beta: u32) -> String {
    let seg = match Segment::new(alpha as u64, beta as u64) {
        Ok(s) => s,
        Err(e) => return err_json(e),
    };
    if seg.len() > 1 << 16 {
        return err_json(Error::Domain(format!(
            "segment length {} exceeds the demo limit of {} letters",
            seg.len(),
            1 << 16
        )));
    }
    let mut buf = demo_buffer();
    match buf.segment_bits(seg) {
        Ok(bits) => serde_json::json!({
            "alpha": alpha,
            "beta": beta,
            "bits": bits.to_bit_string(),
        })
        .to_string(),
        Err(e) => err_json(e),
    }
}

/// The k blocks of the (j, k, m) word, each with the index of the earlier
/// block it duplicates (if any), plus the verdict and K_j(m).
#[wasm_bindgen]
pub fn antipower_blocks(j: u32, k: u32, m: u32) -> String {
    let q = match ApQuery::new(j as u64, k as u64, m as u64) {
        Ok(q) => q,
        Err(e) => return err_json(e),
    };
    if q.k * q.m > DEMO_WORD_LIMIT {
        return err_json(Error::Domain(format!(
            "k * m = {} exceeds the demo limit of {DEMO_WORD_LIMIT} letters",
            q.k * q.m
        )));
    }
    let mut buf = demo_buffer();
    if let Err(e) = buf.extend_to(q.j + q.k * q.m) {
        return err_json(e);
    }
    let bits = buf.bits();
    let mut blocks = Vec::with_capacity(q.k as usize);
    let mut duplicate_of = Vec::with_capacity(q.k as usize);
    for r in 0..q.k {
        let seg = q.block_segment(r);
        let block = bits.slice(seg.alpha() - 1, q.m);
        let twin = (0..r)
            .find(|&prev| bits.range_eq(q.block_segment(prev).alpha() - 1, seg.alpha() - 1, q.m));
        blocks.push(if q.m <= 512 {
            block.to_bit_string()
        } else {
            // blocks too wide to draw letter-by-letter are elided client-side
            format!("{}...", block.slice(0, 512).to_bit_string())
        });
        duplicate_of.push(twin);
    }
    let is_anti_power = duplicate_of.iter().all(Option::is_none);
    let frak_k = antipower::frak_k(&mut buf, q.j, q.m).ok();
    serde_json::json!({
        "j": j, "k": k, "m": m,
        "is_anti_power": is_anti_power,
        "frak_k": frak_k,
        "blocks": blocks,
        "duplicate_of": duplicate_of,
    })
    .to_string()
}

/// Rows {k, gamma, gamma_ratio, big_gamma, big_gamma_ratio} for plotting the
/// two ratio curves over [k_min, k_max].
#[wasm_bindgen]
pub fn ratio_curve(j: u32, k_min: u32, k_max: u32) -> String {
    if k_max > 512 {
        return err_json(Error::Domain(
            "the demo sweep is limited to k <= 512".to_string(),
        ));
    }
    match antipower::ratio_sweep(j as u64, k_min as u64, k_max as u64, 1, DEMO_CAP_LETTERS) {
        Ok(rows) => {
            let rows: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "k": r.k,
                        "gamma": r.gamma,
                        "gamma_ratio": ratio_fields(r.gamma_ratio),
                        "big_gamma": r.big_gamma,
                        "big_gamma_ratio": r.big_gamma_ratio.map(ratio_fields),
                    })
                })
                .collect();
            serde_json::json!({ "j": j, "rows": rows }).to_string()
        }
        Err(e) => err_json(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segment_json_matches_prefix() {
        let v: serde_json::Value = serde_json::from_str(&tm_segment(1, 16)).unwrap();
        assert_eq!(v["bits"], "0110100110010110");
        let v: serde_json::Value = serde_json::from_str(&tm_segment(5, 4)).unwrap();
        assert!(v["error"].as_str().unwrap().contains("domain"));
    }

    #[test]
    fn block_inspector_flags_duplicates() {
        let v: serde_json::Value = serde_json::from_str(&antipower_blocks(0, 3, 3)).unwrap();
        assert_eq!(v["is_anti_power"], false);
        assert_eq!(v["frak_k"], 3);
        assert_eq!(v["blocks"][0], "011");
        assert_eq!(v["blocks"][1], "010");
        assert_eq!(v["blocks"][2], "011");
        assert_eq!(v["duplicate_of"][2], 0);
        assert_eq!(v["duplicate_of"][0], serde_json::Value::Null);

        let v: serde_json::Value = serde_json::from_str(&antipower_blocks(2, 3, 4)).unwrap();
        assert_eq!(v["is_anti_power"], true);
    }

    #[test]
    fn ratio_curve_rows() {
        let v: serde_json::Value = serde_json::from_str(&ratio_curve(0, 1, 12)).unwrap();
        let rows = v["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 12);
        assert_eq!(rows[2]["gamma"], 5);
        assert_eq!(rows[2]["big_gamma"], 3);
        assert_eq!(rows[2]["gamma_ratio"]["fraction"], "5/3");
        assert_eq!(rows[0]["big_gamma"], serde_json::Value::Null);

        let v: serde_json::Value = serde_json::from_str(&ratio_curve(0, 1, 9999)).unwrap();
        assert!(v["error"].as_str().is_some());
    }

    #[test]
    fn limits_are_enforced() {
        let v: serde_json::Value = serde_json::from_str(&antipower_blocks(0, 4096, 4096)).unwrap();
        assert!(v["error"].as_str().unwrap().contains("demo limit"));
    }
}
