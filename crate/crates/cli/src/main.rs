//! `antipower` command-line front end.
//!
//! One subcommand per library operation; records go to stdout as JSON lines
//! (default) or CSV, diagnostics to stderr. Exit codes: 0 success, 1 domain /
//! hypothesis / usage error, 2 resource error, 3 internal inconsistency.

mod emit;

use antipower::bounds::{self, LemmaId};
use antipower::scan;
use antipower::tm::DEFAULT_CAP_LETTERS;
use antipower::{
    ApQuery, ConstructionTuple, ConstructionVerdict, Error, Family, Ratio, Segment, TmBuffer,
};
use emit::{push_ratio, write_records, Format, Record, Val};
use std::collections::BTreeMap;
use std::time::Instant;

const COMMANDS: &[&str] = &[
    "letter",
    "segment",
    "antipower",
    "gamma",
    "big-gamma",
    "frak-k",
    "bounds-verify",
    "gen47",
    "gencor",
    "yvy",
    "construct",
    "family",
    "ratio-sweep",
    "conjecture-scan",
];

fn main() {
    std::process::exit(run(std::env::args().skip(1).collect()));
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Core(e)
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Domain(_) | Error::Hypothesis(_) | Error::Coding { .. } => 1,
        Error::Resource { .. } => 2,
        Error::Internal(_) => 3,
    }
}

fn run(args: Vec<String>) -> i32 {
    let Some(command) = args.first().map(String::as_str) else {
        eprintln!("{}", top_usage());
        return 1;
    };
    if matches!(command, "-h" | "--help" | "help") {
        println!("{}", top_usage());
        return 0;
    }
    if !COMMANDS.contains(&command) {
        eprintln!("unknown subcommand {command:?}\n\n{}", top_usage());
        return 1;
    }
    let rest = &args[1..];
    if rest.iter().any(|a| a == "-h" || a == "--help") {
        println!("{}", help_for(command));
        return 0;
    }

    let started = Instant::now();
    match dispatch(command, rest) {
        Ok(records) => {
            let elapsed_ms = started.elapsed().as_millis() as u64;
            // re-parse the common flags for the output format; they were
            // already validated inside dispatch
            let format = rest
                .iter()
                .position(|a| a == "--format" || a.starts_with("--format="))
                .map(|i| {
                    let raw = &rest[i];
                    let v = raw
                        .strip_prefix("--format=")
                        .map(str::to_string)
                        .unwrap_or_else(|| rest.get(i + 1).cloned().unwrap_or_default());
                    Format::parse(&v).expect("validated by dispatch")
                })
                .unwrap_or(Format::Json);
            let stdout = std::io::stdout();
            if let Err(e) = write_records(&mut stdout.lock(), format, command, &records, elapsed_ms)
            {
                eprintln!("error: failed to write output: {e}");
                return 1;
            }
            0
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}\n\n{}", help_for(command));
            1
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

// ---------------------------------------------------------------------------
// flag parsing
// ---------------------------------------------------------------------------

struct Flags {
    values: BTreeMap<String, String>,
    switches: Vec<String>,
}

fn parse_flags(tokens: &[String], allowed: &[&str], switches: &[&str]) -> Result<Flags, Failure> {
    let mut values = BTreeMap::new();
    let mut found_switches = Vec::new();
    let mut it = tokens.iter().peekable();
    while let Some(tok) = it.next() {
        let Some(body) = tok.strip_prefix("--") else {
            return Err(Failure::Usage(format!("unexpected argument {tok:?}")));
        };
        let (key, inline) = match body.split_once('=') {
            Some((k, v)) => (k.to_string(), Some(v.to_string())),
            None => (body.to_string(), None),
        };
        if switches.contains(&key.as_str()) {
            if inline.is_some() {
                return Err(Failure::Usage(format!("--{key} takes no value")));
            }
            found_switches.push(key);
            continue;
        }
        if !allowed.contains(&key.as_str()) {
            return Err(Failure::Usage(format!("unknown flag --{key}")));
        }
        let value = match inline {
            Some(v) => v,
            None => match it.next() {
                Some(v) => v.clone(),
                None => return Err(Failure::Usage(format!("--{key} needs a value"))),
            },
        };
        if values.insert(key.clone(), value).is_some() {
            return Err(Failure::Usage(format!("--{key} given twice")));
        }
    }
    Ok(Flags {
        values,
        switches: found_switches,
    })
}

impl Flags {
    fn req_u64(&self, key: &str) -> Result<u64, Failure> {
        self.opt_u64(key)?
            .ok_or_else(|| Failure::Usage(format!("--{key} is required")))
    }

    fn opt_u64(&self, key: &str) -> Result<Option<u64>, Failure> {
        match self.values.get(key) {
            None => Ok(None),
            Some(raw) => raw.parse::<u64>().map(Some).map_err(|_| {
                Failure::Usage(format!("--{key} wants a nonnegative integer, got {raw:?}"))
            }),
        }
    }

    fn u64_or(&self, key: &str, default: u64) -> Result<u64, Failure> {
        Ok(self.opt_u64(key)?.unwrap_or(default))
    }

    fn str_opt(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    fn has_switch(&self, key: &str) -> bool {
        self.switches.iter().any(|s| s == key)
    }

    fn format(&self) -> Result<Format, Failure> {
        match self.str_opt("format") {
            None => Ok(Format::Json),
            Some(v) => Format::parse(v)
                .ok_or_else(|| Failure::Usage(format!("--format must be json or csv, got {v:?}"))),
        }
    }

    fn threads(&self) -> Result<usize, Failure> {
        match self.opt_u64("threads")? {
            None => Ok(std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)),
            Some(0) => Err(Failure::Usage("--threads must be at least 1".into())),
            Some(n) => Ok(n as usize),
        }
    }

    fn cap_letters(&self) -> Result<u64, Failure> {
        match self.opt_u64("mem-cap")? {
            None => Ok(DEFAULT_CAP_LETTERS),
            Some(bytes) => Ok(bytes.saturating_mul(8)),
        }
    }

    fn buffer(&self) -> Result<TmBuffer, Failure> {
        Ok(TmBuffer::with_cap(self.cap_letters()?)?)
    }

    /// Inclusive range given either `--<single>` or `--<lo_key>`/`--<hi_key>`.
    fn range(
        &self,
        single: &str,
        lo_key: &str,
        hi_key: &str,
        name: &str,
    ) -> Result<(u64, u64), Failure> {
        match (
            self.opt_u64(single)?,
            self.opt_u64(lo_key)?,
            self.opt_u64(hi_key)?,
        ) {
            (Some(v), None, None) => Ok((v, v)),
            (None, Some(lo), Some(hi)) => Ok((lo, hi)),
            (None, None, None) => Err(Failure::Usage(format!(
                "give --{single} or both --{lo_key} and --{hi_key} for the {name} range"
            ))),
            _ => Err(Failure::Usage(format!(
                "--{single} conflicts with --{lo_key}/--{hi_key}"
            ))),
        }
    }
}

const COMMON: &[&str] = &["format", "threads", "mem-cap"];

fn with_common<'a>(extra: &[&'a str]) -> Vec<&'a str> {
    COMMON.iter().chain(extra).copied().collect()
}

fn to_u32(value: u64, what: &str) -> Result<u32, Failure> {
    u32::try_from(value).map_err(|_| Failure::Usage(format!("--{what} = {value} is out of range")))
}

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

fn dispatch(command: &str, tokens: &[String]) -> Result<Vec<Record>, Failure> {
    match command {
        "letter" => cmd_letter(tokens),
        "segment" => cmd_segment(tokens),
        "antipower" => cmd_antipower(tokens),
        "gamma" => cmd_gamma(tokens),
        "big-gamma" => cmd_big_gamma(tokens),
        "frak-k" => cmd_frak_k(tokens),
        "bounds-verify" => cmd_bounds_verify(tokens),
        "gen47" => cmd_gen47(tokens),
        "gencor" => cmd_gencor(tokens),
        "yvy" => cmd_yvy(tokens),
        "construct" => cmd_construct(tokens),
        "family" => cmd_family(tokens),
        "ratio-sweep" => cmd_ratio_sweep(tokens),
        "conjecture-scan" => cmd_conjecture_scan(tokens),
        _ => unreachable!("validated in run()"),
    }
}

fn cmd_letter(tokens: &[String]) -> Result<Vec<Record>, Failure> {
    let flags = parse_flags(tokens, &with_common(&["i"]), &[])?;
    flags.format()?;
    let i = flags.req_u64("i")?;
    let letter = antipower::tm_letter(i)?;
    Ok(vec![Record {
        inputs: vec![("i", Val::U64(i))],
        result: vec![("letter", Val::U64(letter as u64))],
    }])
}

fn cmd_segment(tokens: &[String]) -> Result<Vec<Record>, Failure> {
    let flags = parse_flags(tokens, &with_common(&["alpha", "beta"]), &[])?;
    flags.format()?;
    let alpha = flags.req_u64("alpha")?;
    let beta = flags.req_u64("beta")?;
    let mut buf = flags.buffer()?;
    let bits = buf.segment_bits(Segment::new(alpha, beta)?)?;
    Ok(vec![Record {
        inputs: vec![("alpha", Val::U64(alpha)), ("beta", Val::U64(beta))],
        result: vec![
            ("length", Val::U64(bits.len())),
            ("bits", Val::Str(bits.to_bit_string())),
        ],
    }])
}

fn cmd_antipower(tokens: &[String]) -> Result<Vec<Record>, Failure> {
    let flags = parse_flags(tokens, &with_common(&["j", "k", "m"]), &[])?;
    flags.format()?;
    let (j, k, m) = (
        flags.u64_or("j", 0)?,
        flags.req_u64("k")?,
        flags.req_u64("m")?,
    );
    let mut buf = flags.buffer()?;
    let q = ApQuery::new(j, k, m)?;
    let ap = antipower::is_anti_power(&mut buf, &q)?;
    Ok(vec![Record {
        inputs: vec![("j", Val::U64(j)), ("k", Val::U64(k)), ("m", Val::U64(m))],
        result: vec![("is_anti_power", Val::Bool(ap))],
    }])
}

fn cmd_gamma(tokens: &[String]) -> Result<Vec<Record>, Failure> {
    let flags = parse_flags(tokens, &with_common(&["j", "k"]), &[])?;
    flags.format()?;
    let (j, k) = (flags.u64_or("j", 0)?, flags.req_u64("k")?);
    let mut buf = flags.buffer()?;
    let g = antipower::gamma(&mut buf, j, k)?;
    Ok(vec![Record {
        inputs: vec![("j", Val::U64(j)), ("k", Val::U64(k))],
        result: vec![("gamma", Val::U64(g))],
    }])
}

fn cmd_big_gamma(tokens: &[String]) -> Result<Vec<Record>, Failure> {
    let flags = parse_flags(tokens, &with_common(&["j", "k"]), &[])?;
    flags.format()?;
    let (j, k) = (flags.u64_or("j", 0)?, flags.req_u64("k")?);
    let mut buf = flags.buffer()?;
    let g = antipower::big_gamma(&mut buf, j, k)?;
    Ok(vec![Record {
        inputs: vec![("j", Val::U64(j)), ("k", Val::U64(k))],
        result: vec![("big_gamma", Val::opt_u64(g))],
    }])
}

fn cmd_frak_k(tokens: &[String]) -> Result<Vec<Record>, Failure> {
    let flags = parse_flags(tokens, &with_common(&["j", "m"]), &[])?;
    flags.format()?;
    let (j, m) = (flags.u64_or("j", 0)?, flags.req_u64("m")?);
    let mut buf = flags.buffer()?;
    let k = antipower::frak_k(&mut buf, j, m)?;
    Ok(vec![Record {
        inputs: vec![("j", Val::U64(j)), ("m", Val::U64(m))],
        result: vec![("frak_k", Val::U64(k))],
    }])
}

fn bound_check_record(
    check: &antipower::BoundCheck,
    extra_inputs: Vec<(&'static str, Val)>,
) -> Record {
    let status = if check.skipped() {
        "skipped"
    } else if check.holds {
        "pass"
    } else {
        "fail"
    };
    let mut result = vec![
        ("ell", Val::U64(check.ell as u64)),
        ("hypothesis_met", Val::Bool(check.hypothesis_met)),
        (
            "comparison",
            Val::Str(check.comparison.as_str().to_string()),
        ),
    ];
    push_ratio(&mut result, "bound", "bound_dec", check.bound);
    result.push(("observed", Val::U64(check.observed)));
    result.push(("holds", Val::Bool(check.holds)));
    result.push(("status", Val::Str(status.to_string())));
    Record {
        inputs: extra_inputs,
        result,
    }
}

fn cmd_bounds_verify(tokens: &[String]) -> Result<Vec<Record>, Failure> {
    let flags = parse_flags(
        tokens,
        &with_common(&["lemma", "j", "m", "m-min", "m-max"]),
        &[],
    )?;
    flags.format()?;
    let j = flags.u64_or("j", 0)?;
    let (m_min, m_max) = flags.range("m", "m-min", "m-max", "block length")?;
    if m_min < 1 || m_min > m_max {
        return Err(Failure::Usage(format!(
            "need 1 <= m-min <= m-max, got [{m_min}, {m_max}]"
        )));
    }
    let lemmas: Vec<LemmaId> = match flags.str_opt("lemma") {
        None => LemmaId::ALL.to_vec(),
        Some(raw) if raw.eq_ignore_ascii_case("all") => LemmaId::ALL.to_vec(),
        Some(raw) => vec![LemmaId::parse(raw)?],
    };
    let mut buf = flags.buffer()?;
    let mut records = Vec::new();
    for m in m_min..=m_max {
        let observed = antipower::frak_k(&mut buf, j, m)?;
        for lemma in &lemmas {
            let check = bounds::check_upper_bound_with_observed(*lemma, j, m, observed)?;
            records.push(bound_check_record(
                &check,
                vec![
                    ("lemma", Val::Str(check.lemma_id.to_string())),
                    ("j", Val::U64(j)),
                    ("m", Val::U64(m)),
                ],
            ));
        }
    }
    Ok(records)
}

fn cmd_gen47(tokens: &[String]) -> Result<Vec<Record>, Failure> {
    let flags = parse_flags(
        tokens,
        &with_common(&["j", "ell", "ell-min", "ell-max"]),
        &[],
    )?;
    flags.format()?;
    let j = flags.u64_or("j", 0)?;
    let (lo, hi) = flags.range("ell", "ell-min", "ell-max", "scale")?;
    let mut buf = flags.buffer()?;
    let mut records = Vec::new();
    for ell in lo..=hi {
        let (a, b) = bounds::check_lower_bound_gen47(&mut buf, j, to_u32(ell, "ell")?)?;
        for check in [a, b] {
            // the scale ell reappears in the result fields
            records.push(bound_check_record(
                &check,
                vec![
                    ("lemma", Val::Str(check.lemma_id.to_string())),
                    ("j", Val::U64(j)),
                    ("m", Val::U64(check.m)),
                ],
            ));
        }
    }
    Ok(records)
}

fn cmd_gencor(tokens: &[String]) -> Result<Vec<Record>, Failure> {
    let flags = parse_flags(tokens, &with_common(&["j", "k"]), &[])?;
    flags.format()?;
    let (j, k) = (flags.u64_or("j", 0)?, flags.req_u64("k")?);
    let mut buf = flags.buffer()?;
    let rows = bounds::check_gencor(&mut buf, j, k)?;
    Ok(rows
        .iter()
        .map(|check| {
            bound_check_record(
                check,
                vec![
                    ("j", Val::U64(j)),
                    ("k", Val::U64(k)),
                    ("m", Val::U64(check.m)),
                ],
            )
        })
        .collect())
}

fn cmd_yvy(tokens: &[String]) -> Result<Vec<Record>, Failure> {
    let flags = parse_flags(tokens, &with_common(&["m", "prefix-len"]), &[])?;
    flags.format()?;
    let m = flags.req_u64("m")?;
    let prefix_len = flags.u64_or("prefix-len", 4096)?;
    let mut buf = flags.buffer()?;
    let violations = bounds::check_prop_yvy(&mut buf, m, prefix_len)?;
    let joined = violations
        .iter()
        .map(|v| format!("{}:{}", v.position, v.yv_len))
        .collect::<Vec<_>>()
        .join(";");
    Ok(vec![Record {
        inputs: vec![("m", Val::U64(m)), ("prefix_len", Val::U64(prefix_len))],
        result: vec![
            ("violation_count", Val::U64(violations.len() as u64)),
            ("violations", Val::Str(joined)),
        ],
    }])
}

fn cmd_construct(tokens: &[String]) -> Result<Vec<Record>, Failure> {
    let flags = parse_flags(
        tokens,
        &with_common(&["j", "r", "m", "ell", "h", "p", "q"]),
        &[],
    )?;
    flags.format()?;
    let t = ConstructionTuple {
        j: flags.u64_or("j", 0)?,
        r: flags.req_u64("r")?,
        m: flags.req_u64("m")?,
        ell: to_u32(flags.req_u64("ell")?, "ell")?,
        h: flags.req_u64("h")?,
        p: flags.req_u64("p")?,
        q: flags.req_u64("q")?,
    };
    let verdict = antipower::verify_construction(&t)?;
    let result = match verdict {
        ConstructionVerdict::Holds {
            blocks_equal,
            frak_k_upper,
        } => vec![
            ("all_conditions_hold", Val::Bool(true)),
            ("failed_condition", Val::Null),
            ("blocks_equal", Val::Bool(blocks_equal)),
            ("frak_k_upper", Val::U64(frak_k_upper)),
        ],
        ConstructionVerdict::ConditionFailed { condition } => vec![
            ("all_conditions_hold", Val::Bool(false)),
            ("failed_condition", Val::U64(condition as u64)),
            ("blocks_equal", Val::Null),
            ("frak_k_upper", Val::Null),
        ],
    };
    Ok(vec![Record {
        inputs: vec![
            ("j", Val::U64(t.j)),
            ("r", Val::U64(t.r)),
            ("m", Val::U64(t.m)),
            ("ell", Val::U64(t.ell as u64)),
            ("h", Val::U64(t.h)),
            ("p", Val::U64(t.p)),
            ("q", Val::U64(t.q)),
        ],
        result,
    }])
}

fn cmd_family(tokens: &[String]) -> Result<Vec<Record>, Failure> {
    let flags = parse_flags(
        tokens,
        &with_common(&["family", "param", "param-min", "param-max", "j"]),
        &["probe"],
    )?;
    flags.format()?;
    let family = Family::parse(
        flags
            .str_opt("family")
            .ok_or_else(|| Failure::Usage("--family is required".into()))?,
    )?;
    let j = flags.u64_or("j", 0)?;
    let (lo, hi) = flags.range("param", "param-min", "param-max", "parameter")?;
    let (lo, hi) = (to_u32(lo, "param")?, to_u32(hi, "param")?);
    if lo > hi {
        return Err(Failure::Usage(format!(
            "need param-min <= param-max, got [{lo}, {hi}]"
        )));
    }
    let probe = flags.has_switch("probe");
    let base_inputs = |parameter: u32| {
        vec![
            ("family", Val::Str(family.as_str().to_string())),
            ("parameter", Val::U64(parameter as u64)),
            ("j", Val::U64(j)),
        ]
    };
    if probe {
        let points = scan::family_probe(family, lo, hi, j, flags.threads()?, flags.cap_letters()?)?;
        Ok(points
            .iter()
            .map(|p| {
                let mut result = vec![
                    ("k_value", Val::U64(p.point.k_value)),
                    ("m_bound", Val::U64(p.point.m_bound)),
                ];
                push_ratio(&mut result, "ratio", "ratio_dec", Some(p.ratio));
                result.push(("observed_ok", Val::Bool(p.observed_ok)));
                Record {
                    inputs: base_inputs(p.point.parameter),
                    result,
                }
            })
            .collect())
    } else {
        let mut records = Vec::new();
        for parameter in lo..=hi {
            let point = antipower::family_point(family, parameter, j)?;
            let mut result = vec![
                ("k_value", Val::U64(point.k_value)),
                ("m_bound", Val::U64(point.m_bound)),
            ];
            push_ratio(
                &mut result,
                "ratio",
                "ratio_dec",
                Some(Ratio::new(point.m_bound as i128, point.k_value as i128)),
            );
            records.push(Record {
                inputs: base_inputs(point.parameter),
                result,
            });
        }
        Ok(records)
    }
}

fn cmd_ratio_sweep(tokens: &[String]) -> Result<Vec<Record>, Failure> {
    let flags = parse_flags(tokens, &with_common(&["j", "k-min", "k-max"]), &[])?;
    flags.format()?;
    let j = flags.u64_or("j", 0)?;
    let k_min = flags.req_u64("k-min")?;
    let k_max = flags.req_u64("k-max")?;
    let rows = scan::ratio_sweep(j, k_min, k_max, flags.threads()?, flags.cap_letters()?)?;
    Ok(rows
        .iter()
        .map(|r| {
            let mut result = vec![("gamma", Val::U64(r.gamma))];
            push_ratio(
                &mut result,
                "gamma_ratio",
                "gamma_ratio_dec",
                Some(r.gamma_ratio),
            );
            result.push(("big_gamma", Val::opt_u64(r.big_gamma)));
            push_ratio(
                &mut result,
                "big_gamma_ratio",
                "big_gamma_ratio_dec",
                r.big_gamma_ratio,
            );
            Record {
                inputs: vec![("j", Val::U64(r.j)), ("k", Val::U64(r.k))],
                result,
            }
        })
        .collect())
}

fn cmd_conjecture_scan(tokens: &[String]) -> Result<Vec<Record>, Failure> {
    let flags = parse_flags(
        tokens,
        &with_common(&["j", "k", "k-min", "k-max", "m-max"]),
        &[],
    )?;
    flags.format()?;
    let j = flags.u64_or("j", 0)?;
    let (k_min, k_max) = flags.range("k", "k-min", "k-max", "block count")?;
    let m_max = flags.u64_or("m-max", 1000)?;
    let reports = scan::conjecture_sweep(
        j,
        k_min,
        k_max,
        m_max,
        flags.threads()?,
        flags.cap_letters()?,
    )?;
    let mean = scan::mean_violation_count(&reports);
    eprintln!(
        "summary: j={j} pairs={} total_violations={} mean_per_pair={} (~{})",
        reports.len(),
        reports.iter().map(|r| r.count()).sum::<u64>(),
        mean.to_fraction_string(),
        mean.to_decimal_string(6),
    );
    Ok(reports
        .iter()
        .map(|r| {
            let joined = r
                .violations
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(";");
            Record {
                inputs: vec![
                    ("j", Val::U64(r.j)),
                    ("k", Val::U64(r.k)),
                    ("m_max", Val::U64(r.m_max)),
                ],
                result: vec![
                    ("count", Val::U64(r.count())),
                    ("violations", Val::Str(joined)),
                ],
            }
        })
        .collect())
}

// ---------------------------------------------------------------------------
// help
// ---------------------------------------------------------------------------

fn top_usage() -> String {
    "antipower: anti-power structure of the Thue-Morse word\n\n\
         usage: antipower <subcommand> [flags]\n\n\
         subcommands:\n\
        \x20 letter           letter t_i by the popcount rule\n\
        \x20 segment          bits of <alpha, beta>\n\
        \x20 antipower        is the (j, k, m) word a k-anti-power?\n\
        \x20 gamma            gamma_j(k), smallest anti-power block length\n\
        \x20 big-gamma        Gamma_j(k), largest failing odd block length\n\
        \x20 frak-k           K_j(m), smallest failing block count\n\
        \x20 bounds-verify    check upper-bound lemmas against observed K_j(m)\n\
        \x20 gen47            check the two lower bounds at scale ell\n\
        \x20 gencor           divisibility corollary over odd m <= 3k-4\n\
        \x20 yvy              scan equal-factor gaps for 2^delta divisibility\n\
        \x20 construct        verify a six-condition block-equality tuple\n\
        \x20 family           k-family members and their Gamma lower bounds\n\
        \x20 ratio-sweep      gamma/Gamma ratio table over a k range\n\
        \x20 conjecture-scan  doubling-conjecture violation statistics\n\n\
         common flags: --format json|csv (default json), --threads N,\n\
         --mem-cap BYTES (word buffer cap, default 268435456)\n\n\
         run `antipower <subcommand> --help` for flags and CSV columns"
        .to_string()
}

fn help_for(command: &str) -> String {
    let (flags, columns) = match command {
        "letter" => ("--i I", "letter"),
        "segment" => ("--alpha A --beta B", "length, bits"),
        "antipower" => ("[--j J] --k K --m M", "is_anti_power"),
        "gamma" => ("[--j J] --k K", "gamma"),
        "big-gamma" => ("[--j J] --k K", "big_gamma (empty when the odd failing set is empty)"),
        "frak-k" => ("[--j J] --m M", "frak_k"),
        "bounds-verify" => (
            "[--lemma ID|all] [--j J] (--m M | --m-min A --m-max B)",
            "lemma, j, m, ell, hypothesis_met, comparison, bound, bound_dec, observed, holds, status",
        ),
        "gen47" => (
            "[--j J] (--ell L | --ell-min A --ell-max B)",
            "lemma, j, m, ell, hypothesis_met, comparison, bound, bound_dec, observed, holds, status",
        ),
        "gencor" => (
            "[--j J] --k K",
            "j, k, m, ell, hypothesis_met, comparison, bound, bound_dec, observed, holds, status \
             (observed is K_j(m); skipped rows have K_j(m) > k)",
        ),
        "yvy" => ("--m M [--prefix-len N]  (default prefix 4096)", "m, prefix_len, violation_count, violations (pos:gap;...)"),
        "construct" => (
            "[--j J] --r R --m M --ell L --h H --p P --q Q",
            "j, r, m, ell, h, p, q, all_conditions_hold, failed_condition, blocks_equal, frak_k_upper",
        ),
        "family" => (
            "--family k-alpha|K-beta|kappa-rho (--param P | --param-min A --param-max B) [--j J] [--probe]",
            "family, parameter, j, k_value, m_bound, ratio, ratio_dec[, observed_ok with --probe]",
        ),
        "ratio-sweep" => (
            "[--j J] --k-min A --k-max B",
            "j, k, gamma, gamma_ratio, gamma_ratio_dec, big_gamma, big_gamma_ratio, big_gamma_ratio_dec",
        ),
        "conjecture-scan" => (
            "[--j J] (--k K | --k-min A --k-max B) [--m-max N]  (default m-max 1000)",
            "j, k, m_max, count, violations (m;m;...); per-run mean goes to stderr",
        ),
        _ => ("", ""),
    };
    format!(
        "usage: antipower {command} {flags} [--format json|csv] [--threads N] [--mem-cap BYTES]\n\n\
         CSV columns: schema_version, command, {columns}, elapsed_ms\n\
         JSON lines carry the same fields under inputs/result."
    )
}
