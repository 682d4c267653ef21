//! Verification suites. Each suite returns one [`Check`] per identity and
//! parameter set.

use clap::ValueEnum;
use gpav_core::gf::{
    c_ogf_counts, c_ogf_residual, centralizer_ogf, p_egf_counts, parabolic_inner_sum,
    parabolic_residual_from_counts, rook_polynomial, rook_polynomial_via_laguerre, EgfExponent,
    OgfForm,
};
use gpav_core::recurrences::refined_c_boundaries;
use gpav_core::{
    c_sequence, classical_centralizer_set, classical_parabolic_set, p_closed_form_l1, p_sequence,
    parse_pattern, reference_sequence, CentralizerReading, CountSequence, Error, FamilyParams,
    Kind, PatternFamily, Reference,
};
use log::info;
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::error::{CliError, Result};
use crate::report::{Check, Verdict};
use crate::sweep::Sweeper;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Main11,
    Main12,
    Tp1,
    Bd1,
    Par,
    Refined,
    Lemmas,
    Claesson,
    AIndependence,
    All,
}

impl Suite {
    const EACH: [Suite; 9] = [
        Suite::Main11,
        Suite::Main12,
        Suite::Tp1,
        Suite::Bd1,
        Suite::Par,
        Suite::Refined,
        Suite::Lemmas,
        Suite::Claesson,
        Suite::AIndependence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Main11 => "main11",
            Suite::Main12 => "main12",
            Suite::Tp1 => "tp1",
            Suite::Bd1 => "bd1",
            Suite::Par => "par",
            Suite::Refined => "refined",
            Suite::Lemmas => "lemmas",
            Suite::Claesson => "claesson",
            Suite::AIndependence => "a-independence",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest pattern length swept.
    pub kmax: usize,
    /// Largest permutation length counted by brute force.
    pub nmax: usize,
    /// Truncation order for series identities.
    pub order: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            kmax: 5,
            nmax: 8,
            order: 12,
        }
    }
}

/// Size of the extra brute-force checks in `main11`.
pub const SPOT_N: usize = 9;
const SPOT_PARAMS: [(usize, usize, usize); 3] = [(4, 1, 2), (5, 1, 3), (5, 2, 2)];
/// Largest block length in the parabolic suite.
pub const PAR_MAX: usize = 3;
/// Upper end of the `l = 1` closed-form comparison.
pub const CLOSED_FORM_N: usize = 15;
const CATALAN_N: usize = 20;
const EGF_MIN_N: usize = 9;

fn pj(p: &FamilyParams) -> Value {
    json!({ "kind": if p.kind() == Kind::C { "C" } else { "P" }, "k": p.k(), "a": p.a(), "l": p.l() })
}

fn pjn(p: &FamilyParams, n: usize) -> Value {
    let mut v = pj(p);
    v["n"] = json!(n);
    v
}

fn explicit(patterns: &[&str]) -> PatternFamily {
    PatternFamily::explicit(patterns.iter().map(|s| parse_pattern(s).unwrap()).collect()).unwrap()
}

pub fn run(suite: Suite, cfg: &VerifyConfig, sw: &Sweeper) -> Result<Vec<Check>> {
    if !(3..=gpav_core::perm::MAX_PATTERN_LEN).contains(&cfg.kmax) {
        return Err(CliError::Usage(format!(
            "--kmax {} outside 3..=9",
            cfg.kmax
        )));
    }
    if cfg.nmax > sw.oracle().ceiling() {
        return Err(Error::CeilingExceeded {
            n: cfg.nmax,
            ceiling: sw.oracle().ceiling(),
        }
        .into());
    }
    if suite == Suite::All {
        let mut out = Vec::new();
        for s in Suite::EACH {
            out.extend(run(s, cfg, sw)?);
        }
        return Ok(out);
    }
    info!("suite {} with {cfg:?}", suite.name());
    match suite {
        Suite::Main11 => main11(cfg, sw),
        Suite::Main12 => main12(cfg),
        Suite::Tp1 => tp1(cfg, sw),
        Suite::Bd1 => bd1(cfg, sw),
        Suite::Par => par(cfg, sw),
        Suite::Refined => refined(cfg, sw),
        Suite::Lemmas => first_letter_identities(cfg, sw),
        Suite::Claesson => length_three(cfg, sw),
        Suite::AIndependence => a_independence(cfg, sw),
        Suite::All => unreachable!(),
    }
}

fn main11(cfg: &VerifyConfig, sw: &Sweeper) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let cat = FamilyParams::c(3, 1, 2)?;
    out.push(Check::sequences(
        "main11-catalan",
        pj(&cat),
        (
            "catalan",
            &reference_sequence(Reference::Catalan, CATALAN_N),
        ),
        ("recurrence", &c_sequence(&cat, CATALAN_N)?),
    ));
    for params in FamilyParams::all(Kind::C, cfg.kmax) {
        out.push(Check::sequences(
            "main11",
            pj(&params),
            ("oracle", &sw.sequence(&params.family(), cfg.nmax)?),
            ("recurrence", &c_sequence(&params, cfg.nmax)?),
        ));
    }
    if cfg.nmax < SPOT_N && SPOT_N <= sw.oracle().ceiling() {
        for (k, a, l) in SPOT_PARAMS.into_iter().filter(|t| t.0 <= cfg.kmax) {
            let params = FamilyParams::c(k, a, l)?;
            let oracle = sw.count(&params.family(), SPOT_N)?;
            let rec = c_sequence(&params, SPOT_N)?[SPOT_N].clone();
            out.push(Check::holds(
                "main11-spot",
                pjn(&params, SPOT_N),
                oracle == rec,
                json!({ "oracle": oracle.to_string(), "recurrence": rec.to_string() }),
            ));
        }
    }
    Ok(out)
}

fn main12(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for k in 3..=cfg.kmax {
        for l in 2..k {
            let params = FamilyParams::c(k, 1, l)?;
            let p = json!({ "k": k, "l": l, "order": cfg.order });
            out.push(Check::residual(
                "main12",
                p.clone(),
                &c_ogf_residual(&params, cfg.order, OgfForm::Published)?,
            ));
            out.push(Check::residual(
                "main12-corrected",
                p.clone(),
                &c_ogf_residual(&params, cfg.order, OgfForm::Corrected)?,
            ));
            out.push(Check::sequences(
                "main12-coefficients",
                p,
                ("recurrence", &c_sequence(&params, cfg.order)?),
                ("series", &c_ogf_counts(&params, cfg.order)?),
            ));
        }
    }
    Ok(out)
}

fn tp1(cfg: &VerifyConfig, sw: &Sweeper) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for params in FamilyParams::all(Kind::P, cfg.kmax) {
        out.push(Check::sequences(
            "tp1-recurrence",
            pj(&params),
            ("oracle", &sw.sequence(&params.family(), cfg.nmax)?),
            ("recurrence", &p_sequence(&params, cfg.nmax)?),
        ));
    }
    let n_egf = cfg.nmax.max(EGF_MIN_N);
    for k in 3..=cfg.kmax {
        for l in 1..k {
            let rec = p_sequence(&FamilyParams::p(k, 1, l)?, n_egf)?;
            out.push(Check::sequences(
                "tp1-egf",
                json!({ "k": k, "l": l, "exponent": "k-l", "constant": "(k-l-1)!" }),
                ("recurrence", &rec),
                ("egf", &p_egf_counts(k, l, n_egf, EgfExponent::KMinusL)?),
            ));
            let printed = p_egf_counts(k, l, n_egf, EgfExponent::KMinusOne);
            let (agrees, detail) = match &printed {
                Ok(seq) => match rec.first_divergence(seq) {
                    None => (true, json!({ "agrees_with_recurrence": true })),
                    Some(i) => (
                        false,
                        json!({
                            "agrees_with_recurrence": false,
                            "first_divergence": i,
                            "expected": rec[i].to_string(),
                            "actual": seq.get(i).map(|v| v.to_string()),
                        }),
                    ),
                },
                Err(e) => (
                    false,
                    json!({ "agrees_with_recurrence": false, "error": e.to_string() }),
                ),
            };
            out.push(Check::holds(
                "tp1-printed-exponent",
                json!({ "k": k, "l": l, "exponent": "k-1", "expect_agreement": l == 1 }),
                agrees == (l == 1),
                detail,
            ));
        }
    }
    for k in 3..=cfg.kmax.max(6) {
        let rec = p_sequence(&FamilyParams::p(k, 1, 1)?, CLOSED_FORM_N)?;
        let mut bad = None;
        for n in k - 1..=CLOSED_FORM_N {
            let closed = p_closed_form_l1(k, n)?;
            if closed != rec[n] {
                bad = Some((n, closed));
                break;
            }
        }
        let detail = match &bad {
            None => json!({ "n_min": k - 1, "n_max": CLOSED_FORM_N }),
            Some((n, v)) => json!({
                "first_divergence": n,
                "expected": rec[*n].to_string(),
                "actual": v.to_string(),
            }),
        };
        out.push(Check::holds(
            "tp1-closed-form",
            json!({ "k": k, "l": 1 }),
            bad.is_none(),
            detail,
        ));
    }
    let inv = reference_sequence(Reference::Involutions, cfg.nmax);
    for a in 1..=2 {
        let params = FamilyParams::p(3, a, 2)?;
        out.push(Check::sequences(
            "tp1-involutions",
            pj(&params),
            ("involutions", &inv),
            ("oracle", &sw.sequence(&params.family(), cfg.nmax)?),
        ));
    }
    out.push(Check::sequences(
        "tp1-involutions-egf",
        json!({ "k": 3, "l": 2 }),
        (
            "involutions",
            &reference_sequence(Reference::Involutions, cfg.order),
        ),
        ("egf", &p_egf_counts(3, 2, cfg.order, EgfExponent::KMinusL)?),
    ));
    Ok(out)
}

fn bd1(cfg: &VerifyConfig, sw: &Sweeper) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    out.push(Check::sequences(
        "bd1-catalan",
        json!({ "k": 3 }),
        ("catalan", &reference_sequence(Reference::Catalan, cfg.nmax)),
        (
            "series",
            &CountSequence::new(centralizer_ogf(3, cfg.nmax)?.count_coeffs()?),
        ),
    ));
    let mut passing = serde_json::Map::new();
    for k in 3..=cfg.kmax {
        let series = CountSequence::new(centralizer_ogf(k, cfg.nmax)?.count_coeffs()?);
        let mut ok_readings = Vec::new();
        for reading in [CentralizerReading::Prefix, CentralizerReading::Stabilizer] {
            let fam = classical_centralizer_set(k, reading)?;
            let check = Check::sequences(
                "bd1",
                json!({ "k": k, "reading": reading.to_string() }),
                ("oracle", &sw.sequence(&fam, cfg.nmax)?),
                ("series", &series),
            );
            if check.verdict == Verdict::Pass {
                ok_readings.push(reading.to_string());
            }
            out.push(check);
        }
        passing.insert(k.to_string(), json!(ok_readings));
    }
    out.push(Check::info(
        "bd1-readings",
        json!({ "n_max": cfg.nmax }),
        json!({ "passing_readings_by_k": passing }),
    ));
    Ok(out)
}

fn par(cfg: &VerifyConfig, sw: &Sweeper) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for l in 1..=PAR_MAX {
        for m in 1..=PAR_MAX {
            for a in 1..=m + 1 {
                let fam = classical_parabolic_set(l, m, a)?;
                let counts = sw.sequence(&fam, cfg.nmax)?;
                out.push(Check::residual(
                    "par",
                    json!({ "l": l, "m": m, "a": a, "order": cfg.nmax }),
                    &parabolic_residual_from_counts(l, m, &counts, cfg.nmax)?,
                ));
            }
            let fractional: Vec<Value> = (0..l.min(m))
                .map(|r| Ok((r, parabolic_inner_sum(l, m, r)?)))
                .collect::<gpav_core::Result<Vec<_>>>()?
                .into_iter()
                .filter(|(_, v)| !v.is_integer())
                .map(|(r, v)| json!({ "r": r, "inner_sum": v.to_string() }))
                .collect();
            out.push(Check::info(
                "par-inner-sum",
                json!({ "l": l, "m": m }),
                json!({ "all_integral": fractional.is_empty(), "fractional": fractional }),
            ));
            out.push(Check::holds(
                "par-rook-laguerre",
                json!({ "s": l, "t": m }),
                rook_polynomial(l, m) == rook_polynomial_via_laguerre(l, m),
                json!({ "rook": rook_polynomial(l, m).to_string() }),
            ));
        }
    }
    Ok(out)
}

fn refined(cfg: &VerifyConfig, sw: &Sweeper) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for params in FamilyParams::all(Kind::C, cfg.kmax) {
        let fam = params.family();
        let (k, a) = (params.k(), params.a());
        for n in k..=cfg.nmax {
            let fast = refined_c_boundaries(&params, n)?;
            let profile = sw.first_letter_profile(&fam, n)?;
            let bad = fast.iter().enumerate().find_map(|(idx, v)| {
                let i = idx + 1;
                let letter = n - k + a + 1 - i;
                (profile[letter] != *v).then(|| (i, letter, profile[letter].clone(), v.clone()))
            });
            let detail = match bad {
                None => json!({ "boundaries": fast.len() }),
                Some((i, letter, oracle, formula)) => json!({
                    "first_divergence": i,
                    "first_letter": letter,
                    "expected": oracle.to_string(),
                    "actual": formula.to_string(),
                }),
            };
            let ok = detail.get("first_divergence").is_none();
            out.push(Check::holds("refined", pjn(&params, n), ok, detail));
        }
    }
    Ok(out)
}

/// Ordered selections of `m` distinct letters from `pool`.
fn arrangements(pool: &[u8], m: usize) -> Vec<Vec<u8>> {
    fn go(pool: &[u8], m: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for &v in pool {
            if !cur.contains(&v) {
                cur.push(v);
                go(pool, m, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(pool, m, &mut Vec::new(), &mut out);
    out
}

fn equality(name: &str, params: Value, what: Option<Value>, lhs: &BigUint, rhs: &BigUint) -> Check {
    let mut detail = json!({ "lhs": lhs.to_string(), "rhs": rhs.to_string() });
    if let Some(w) = what {
        detail["at"] = w;
    }
    Check::holds(name, params, lhs == rhs, detail)
}

fn first_letter_identities(cfg: &VerifyConfig, sw: &Sweeper) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let generalized: Vec<FamilyParams> = FamilyParams::all(Kind::C, cfg.kmax)
        .into_iter()
        .chain(FamilyParams::all(Kind::P, cfg.kmax))
        .collect();
    for params in &generalized {
        let fam = params.family();
        let mut bad = None;
        for n in 1..=cfg.nmax {
            let total: BigUint = sw.first_letter_profile(&fam, n)?.iter().sum();
            let count = sw.count(&fam, n)?;
            if total != count {
                bad = Some(json!({ "n": n, "lhs": count.to_string(), "rhs": total.to_string() }));
                break;
            }
        }
        out.push(Check::holds(
            "first-letter-partition",
            pj(params),
            bad.is_none(),
            bad.unwrap_or_else(|| json!({ "n_max": cfg.nmax })),
        ));
    }
    for params in FamilyParams::all(Kind::C, cfg.kmax) {
        let fam = params.family();
        let (k, a, l) = (params.k(), params.a(), params.l());
        for n in k..=cfg.nmax {
            let profile = sw.first_letter_profile(&fam, n)?;
            let prev = sw.first_letter_profile(&fam, n - 1)?;
            let count_prev: BigUint = prev.iter().sum();
            let count: BigUint = profile.iter().sum();
            let tail: BigUint = (a..=n - k + a).map(|j| &profile[j]).sum();
            let rhs = BigUint::from(k - 1) * &count_prev + tail;
            out.push(equality(
                "c-first-letter-recurrence",
                pjn(&params, n),
                None,
                &count,
                &rhs,
            ));

            let count_prev2 = sw.count(&fam, n - 2)?;
            let mut failure = None;
            for (j, refined) in profile.iter().enumerate().take(n - k + a + 1).skip(a) {
                let sum: BigUint = (a..=j + l - 2).map(|i| &prev[i]).sum();
                let rhs = BigUint::from(k - l - 1) * &count_prev2 + sum;
                if *refined != rhs {
                    failure = Some(equality(
                        "c-refined-recurrence",
                        pjn(&params, n),
                        Some(json!({ "j": j })),
                        refined,
                        &rhs,
                    ));
                    break;
                }
            }
            out.push(failure.unwrap_or_else(|| {
                Check::holds(
                    "c-refined-recurrence",
                    pjn(&params, n),
                    true,
                    json!({ "j_range": [a, n - k + a] }),
                )
            }));
        }
    }
    for params in FamilyParams::all(Kind::P, cfg.kmax) {
        let fam = params.family();
        let (k, a, l) = (params.k(), params.a(), params.l());
        for n in k..=cfg.nmax {
            let lo = a as u8;
            let hi = (n - k + l + a - 1) as u8;
            let in_range: Vec<u8> = (lo..=hi).collect();
            let out_range: Vec<u8> = (1..=n as u8).filter(|v| !(lo..=hi).contains(v)).collect();

            let mut failure = None;
            'first: for m in 0..l {
                let expected = sw.count(&fam, n - m - 1)?;
                for head in arrangements(&in_range, m) {
                    for &j in &out_range {
                        let mut prefix = head.clone();
                        prefix.push(j);
                        let got = sw.refined(&fam, n, &prefix)?;
                        if got != expected {
                            failure = Some(equality(
                                "p-prefix-reduction",
                                pjn(&params, n),
                                Some(json!({ "prefix": prefix })),
                                &got,
                                &expected,
                            ));
                            break 'first;
                        }
                    }
                }
            }
            out.push(failure.unwrap_or_else(|| {
                Check::holds("p-prefix-reduction", pjn(&params, n), true, json!({}))
            }));

            let zero = BigUint::from(0u32);
            let mut failure = None;
            for prefix in arrangements(&in_range, l) {
                let got = sw.refined(&fam, n, &prefix)?;
                if got != zero {
                    failure = Some(equality(
                        "p-full-block-prefix",
                        pjn(&params, n),
                        Some(json!({ "prefix": prefix })),
                        &got,
                        &zero,
                    ));
                    break;
                }
            }
            out.push(failure.unwrap_or_else(|| {
                Check::holds("p-full-block-prefix", pjn(&params, n), true, json!({}))
            }));
        }
        let rejected = matches!(
            sw.refined(&fam, k, &[a as u8, a as u8]),
            Err(CliError::Core(Error::InvalidPrefix(_)))
        );
        out.push(Check::holds(
            "p-repeated-prefix",
            pjn(&params, k),
            rejected,
            json!({ "prefix": [a, a], "rejected": rejected }),
        ));
    }
    Ok(out)
}

const BELL_PATTERNS: [&str; 8] = [
    "1-23", "3-21", "12-3", "32-1", "1-32", "3-12", "21-3", "23-1",
];
const CATALAN_PATTERNS: [&str; 4] = ["2-13", "2-31", "13-2", "31-2"];

fn length_three(cfg: &VerifyConfig, sw: &Sweeper) -> Result<Vec<Check>> {
    let n = cfg.nmax;
    let mut out = Vec::new();
    let mut against = |name: &str, patterns: &[&str], reference: Reference| -> Result<()> {
        let seq = sw.sequence(&explicit(patterns), n)?;
        out.push(Check::sequences(
            name,
            json!({ "patterns": patterns }),
            (reference.name(), &reference_sequence(reference, n)),
            ("oracle", &seq),
        ));
        Ok(())
    };
    for p in BELL_PATTERNS {
        against("length3-bell", &[p], Reference::Bell)?;
    }
    for p in CATALAN_PATTERNS {
        against("length3-catalan", &[p], Reference::Catalan)?;
    }
    against(
        "length3-involutions",
        &["1-23", "1-32"],
        Reference::Involutions,
    )?;
    against("length3-motzkin", &["1-23", "13-2"], Reference::Motzkin)?;
    let bessel = sw.sequence(&explicit(&["1-23", "12-3"]), n)?;
    let values: Vec<String> = bessel.values().iter().map(|v| v.to_string()).collect();
    out.push(Check::info(
        "length3-bessel",
        json!({ "patterns": ["1-23", "12-3"] }),
        json!({ "values": values }),
    ));
    Ok(out)
}

fn a_independence(cfg: &VerifyConfig, sw: &Sweeper) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for kind in [Kind::C, Kind::P] {
        for k in 3..=cfg.kmax {
            for l in 1..k {
                let anchors: Vec<usize> = FamilyParams::anchors(kind, k, l).collect();
                let seqs = anchors
                    .iter()
                    .map(|&a| sw.sequence(&FamilyParams::new(kind, k, a, l)?.family(), cfg.nmax))
                    .collect::<Result<Vec<_>>>()?;
                let name = if kind == Kind::C { "C" } else { "P" };
                let params = json!({ "kind": name, "k": k, "l": l, "a": anchors });
                let diverging = seqs
                    .iter()
                    .zip(&anchors)
                    .find_map(|(s, &a)| seqs[0].first_divergence(s).map(|i| (a, i)));
                let detail = match diverging {
                    None => json!({ "n_max": cfg.nmax }),
                    Some((a, i)) => json!({
                        "a": a,
                        "first_divergence": i,
                        "expected": seqs[0][i].to_string(),
                        "actual": seqs[anchors.iter().position(|&x| x == a).unwrap()].get(i).map(|v| v.to_string()),
                    }),
                };
                out.push(Check::holds(
                    "a-independence",
                    params,
                    diverging.is_none(),
                    detail,
                ));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            kmax: 4,
            nmax: 6,
            order: 8,
        }
    }

    #[test]
    fn small_suites_pass() {
        let sw = Sweeper::new(9, Some(1)).unwrap();
        for suite in [
            Suite::Main11,
            Suite::Tp1,
            Suite::Bd1,
            Suite::Refined,
            Suite::Lemmas,
            Suite::Claesson,
            Suite::AIndependence,
        ] {
            let checks = run(suite, &small(), &sw).unwrap();
            assert!(!checks.is_empty());
            for c in &checks {
                assert_ne!(
                    c.verdict,
                    Verdict::Fail,
                    "{} {} {}",
                    c.name,
                    c.params,
                    c.detail
                );
            }
        }
    }

    #[test]
    fn published_main12_fails_only_for_long_blocks() {
        let checks = run(Suite::Main12, &small(), &Sweeper::new(9, Some(1)).unwrap()).unwrap();
        for c in checks {
            let l = c.params["l"].as_u64().unwrap();
            let expect_pass = c.name != "main12" || l == 2;
            assert_eq!(
                c.verdict == Verdict::Pass,
                expect_pass,
                "{} {}",
                c.name,
                c.params
            );
        }
    }

    #[test]
    fn arrangement_count() {
        assert_eq!(arrangements(&[1, 2, 3, 4], 2).len(), 12);
        assert_eq!(arrangements(&[1, 2], 0), vec![Vec::<u8>::new()]);
    }

    #[test]
    fn bounds_are_checked() {
        let sw = Sweeper::new(9, Some(1)).unwrap();
        let too_big = VerifyConfig {
            nmax: 10,
            ..small()
        };
        assert_eq!(
            run(Suite::Claesson, &too_big, &sw).unwrap_err().exit_code(),
            2
        );
        let bad_k = VerifyConfig { kmax: 2, ..small() };
        assert!(run(Suite::Main11, &bad_k, &sw).is_err());
    }
}
