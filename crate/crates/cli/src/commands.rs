use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use eaqmds_core::cyclic::{check_matrix_from_generator, ConsecutiveSpec, CyclicSetup};
use eaqmds_core::families::{
    record_at, run_family, FamilyOutcome, FamilyParams, FamilyTag, Verification,
};
use eaqmds_core::gfield::{make_field, TowerMap};
use eaqmds_core::intmath::factorize;
use eaqmds_core::tables::{reproduce_tables, WhichTable};
use eaqmds_core::verify::{gram_rank, MdsStatus};
use eaqmds_core::zmod::{CosetClass, CosetContext, DefiningSet, Witness};
use eaqmds_core::{Error, Result};
use log::{debug, info};
use serde_json::{json, Value};

use crate::args::{CodeArgs, DecomposeArgs, FamilyArgs, ModulusArgs, SweepArgs, TablesArgs, VerifyArgs};
use crate::output::{render_records_and_reports, Payload, RecordJson, ReportJson};

/// What a command produced.
pub struct Outcome {
    pub payload: Payload,
    /// Command-specific text shown above the records in text mode.
    pub text: String,
    /// Some check came back wrong.
    pub failed: bool,
    /// Whether text mode appends the record and report lines.
    pub tail: bool,
}

impl Outcome {
    fn new(payload: Payload) -> Self {
        Self {
            payload,
            text: String::new(),
            failed: false,
            tail: true,
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = self.text.clone();
        if !self.tail {
            return out;
        }
        out.push_str(&render_records_and_reports(
            &self.payload.records,
            &self.payload.reports,
        ));
        out
    }
}

fn tag(n: u8) -> FamilyTag {
    FamilyTag::from_number(n).expect("validated by clap")
}

fn coset_lists(ctx: &CosetContext, set: &DefiningSet) -> Result<Vec<Vec<u64>>> {
    set.reps()
        .iter()
        .map(|&r| ctx.coset(r).map(|c| c.elements().to_vec()))
        .collect()
}

fn braces(v: &[u64]) -> String {
    let parts: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn cosets(a: &ModulusArgs) -> Result<Outcome> {
    let ctx = CosetContext::new(a.n, a.q)?;
    let mut classes = Vec::new();
    let mut text = format!("q^2-cyclotomic cosets mod {} (q = {}):\n", a.n, a.q);
    for c in ctx.all_cosets() {
        let (class, partner) = match ctx.classify(&c) {
            CosetClass::SkewSymmetric => ("skewSymmetric", None),
            CosetClass::AsymmetricPair { partner } => ("asymmetricPair", Some(partner)),
        };
        let _ = write!(text, "  C_{} = {}  {class}", c.representative(), braces(c.elements()));
        if let Some(p) = partner {
            let _ = write!(text, " with C_{p}");
        }
        text.push('\n');
        classes.push(json!({
            "representative": c.representative(),
            "elements": c.elements(),
            "class": class,
            "partner": partner,
        }));
    }
    let mut payload = Payload::new("cosets", json!({ "n": a.n, "q": a.q }));
    payload.data = json!({ "cosets": classes });
    Ok(Outcome {
        text,
        ..Outcome::new(payload)
    })
}

pub fn decompose(a: &DecomposeArgs) -> Result<Outcome> {
    let spec = ConsecutiveSpec::new(a.q, a.n, a.k)?;
    let ctx = CosetContext::new(a.n, a.q)?;
    let t = spec.build_t();
    let d = ctx.decompose(&t);
    let tss = coset_lists(&ctx, &d.tss)?;
    let tsas = coset_lists(&ctx, &d.tsas)?;
    let witnesses: Vec<Value> = d
        .witnesses
        .iter()
        .map(|w| match *w {
            Witness::SkewSymmetric { rep } => json!({ "type": "skewSymmetric", "rep": rep }),
            Witness::AsymmetricPair {
                rep,
                partner,
                image,
            } => json!({
                "type": "asymmetricPair",
                "rep": rep,
                "partner": partner,
                "image": image,
            }),
        })
        .collect();

    let mut text = format!(
        "T = C_{} u ... u C_{}, |T| = {}\n",
        spec.s(),
        spec.s() + a.k,
        t.len()
    );
    let list = |sets: &[Vec<u64>]| sets.iter().map(|s| braces(s)).collect::<Vec<_>>().join(", ");
    let _ = writeln!(text, "T_ss  = [{}], |T_ss| = {}", list(&tss), d.tss_size());
    let _ = writeln!(text, "T_sas = [{}]", list(&tsas));
    for w in &d.witnesses {
        match *w {
            Witness::SkewSymmetric { rep } => {
                let _ = writeln!(text, "  C_{rep} is skew symmetric");
            }
            Witness::AsymmetricPair {
                rep,
                partner,
                image,
            } => {
                let _ = writeln!(
                    text,
                    "  C_{rep} and C_{partner} form a skew asymmetric pair: -{}*{rep} = {image} mod {}",
                    a.q, a.n
                );
            }
        }
    }

    let mut payload = Payload::new("decompose", json!({ "n": a.n, "q": a.q, "k": a.k }));
    payload.data = json!({
        "t": t.elements(),
        "tss": tss,
        "tsas": tsas,
        "tssSize": d.tss_size(),
        "witnesses": witnesses,
    });
    Ok(Outcome {
        text,
        ..Outcome::new(payload)
    })
}

fn family_params_json(f: &FamilyArgs, p: &FamilyParams) -> Value {
    json!({
        "family": f.family,
        "l": f.l,
        "m": f.m,
        "a": p.a,
        "q": p.q,
        "n": p.n,
        "s": p.s,
    })
}

pub fn code(a: &CodeArgs, cap: u128) -> Result<Outcome> {
    if a.d < 3 || a.d.is_multiple_of(2) {
        return Err(Error::InvalidFamily(format!("d = {} must be odd and at least 3", a.d)));
    }
    let f = &a.family;
    let params = FamilyParams::new(tag(f.family), f.l, f.m)?;
    let k = (a.d - 3) / 2;
    let spec = params.consecutive(k)?;
    let setup = CyclicSetup::new(params.q, params.n)?;
    info!("{params}, k' = {k}");
    let t = spec.build_t();
    let code = setup.code_spec(&t)?;
    let record = record_at(&params, setup.cosets(), Some((&setup, cap)), k)?;

    let generator: Vec<String> = code.generator.iter().map(ToString::to_string).collect();
    let mut text = format!("{params}\n");
    let _ = writeln!(
        text,
        "cyclic [{}, {}, >= {}] code over GF({}^2), T = {}",
        code.n,
        code.dimension,
        code.designed_distance,
        params.q,
        braces(&t.elements().iter().copied().collect::<Vec<_>>())
    );
    let _ = writeln!(text, "g(x) coefficients, low to high: [{}]", generator.join(", "));

    let mut params_json = family_params_json(f, &params);
    params_json["d"] = json!(a.d);
    let mut payload = Payload::new("code", params_json);
    payload.data = json!({
        "codeSpec": {
            "n": code.n,
            "q": code.q,
            "definingSet": t.elements(),
            "generator": generator,
            "dimension": code.dimension,
            "designedDistance": code.designed_distance,
        },
    });
    let failed = !record.is_consistent();
    payload.records.push(RecordJson::new(&record, cap));
    Ok(Outcome {
        text,
        failed,
        ..Outcome::new(payload)
    })
}

fn outcome_data(o: &FamilyOutcome) -> Value {
    let computed = o.computed.map(|c| json!([c.d_min, c.d_max]));
    let (lo, hi) = o.params.stated_d_range();
    json!({
        "computedRange": computed,
        "statedRange": [lo, hi],
        "profile": o.profile.iter().map(|e| json!({ "k": e.k, "tssSize": e.tss })).collect::<Vec<_>>(),
    })
}

pub fn verify(a: &VerifyArgs, cap: u128) -> Result<Outcome> {
    let f = &a.family;
    let tag = tag(f.family);
    let mut outcome = if a.all_d {
        run_family(tag, f.l, f.m, Verification::Full { minor_cap: cap })?
    } else {
        let mut o = run_family(tag, f.l, f.m, Verification::Cosets)?;
        if let Some(c) = o.computed {
            let setup = CyclicSetup::new(o.params.q, o.params.n)?;
            let ctx = o.params.cosets();
            let mut ks = vec![c.k_min()];
            if c.k_max() != c.k_min() {
                ks.push(c.k_max());
            }
            o.records = ks
                .into_iter()
                .map(|k| record_at(&o.params, &ctx, Some((&setup, cap)), k))
                .collect::<Result<_>>()?;
            o.full = true;
        }
        o
    };
    let failed = outcome.records.iter().any(|r| !r.is_consistent()) || outcome.computed.is_none();

    let mut text = format!("{}\n", outcome.params);
    match outcome.computed {
        Some(c) => {
            let _ = writeln!(text, "|T_ss| = 4 for odd {} <= d <= {}", c.d_min, c.d_max);
        }
        None => text.push_str("no run index gives |T_ss| = 4\n"),
    }

    let mut payload = Payload::new("verify", family_params_json(f, &outcome.params));
    payload.params["allD"] = json!(a.all_d);
    payload.params["cap"] = json!(cap);
    payload.data = outcome_data(&outcome);
    payload.records = std::mem::take(&mut outcome.records)
        .iter()
        .map(|r| RecordJson::new(r, cap))
        .collect();
    payload.reports = outcome.reports.iter().map(ReportJson::from).collect();
    Ok(Outcome {
        text,
        failed,
        ..Outcome::new(payload)
    })
}

pub fn tables(a: &TablesArgs, cap: u128) -> Result<Outcome> {
    let which = WhichTable::from_number(a.which).expect("validated by clap");
    let verification = Verification::FullUpToQ {
        max_q: a.full_up_to,
        minor_cap: cap,
    };
    let t = reproduce_tables(which, verification)?;
    let mut payload = Payload::new(
        "tables",
        json!({ "which": a.which, "fullUpTo": a.full_up_to, "cap": cap }),
    );
    let mut failed = false;
    let mut rows = Vec::new();
    for row in &t.rows {
        failed |= !row.verified();
        let p = &row.params;
        rows.push(json!({
            "l": p.l,
            "m": p.m,
            "q": p.q,
            "n": p.n,
            "code": format!("[[{},{}-2d,d;4]]_{}", p.n, p.n + 6, p.q),
            "computedRange": row.computed.map(|c| [c.d_min, c.d_max]),
            "printed": {
                "n": row.printed.n,
                "kConst": row.printed.k_const,
                "subscript": row.printed.subscript,
                "range": [row.printed.d_min, row.printed.d_max],
            },
            "verification": if row.full { "matrix" } else { "cosets" },
            "verified": row.verified(),
        }));
        for r in &row.records {
            payload
                .records
                .push(RecordJson::new(r, cap).with_instance(p.tag.number(), p.l, p.m));
        }
    }
    let summary: Vec<Value> = t
        .summary
        .iter()
        .map(|s| {
            json!({
                "family": s.tag.number(),
                "a": s.a,
                "code": s.code,
                "distance": s.distance,
                "checks": s.checks.iter().map(|c| json!({
                    "l": c.instance.l,
                    "m": c.instance.m,
                    "q": c.instance.q,
                    "stated": [c.stated.0, c.stated.1],
                    "computed": c.computed.map(|r| [r.d_min, r.d_max]),
                    "agrees": c.agrees(),
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    payload.data = json!({ "rows": rows, "summary": summary });
    payload.reports = t.reports.iter().map(ReportJson::from).collect();

    // the rendered table already lists the reports
    Ok(Outcome {
        text: t.render(),
        failed,
        tail: false,
        ..Outcome::new(payload)
    })
}

enum Cell {
    Done(Box<FamilyOutcome>),
    Skipped(String),
}

pub fn sweep(a: &SweepArgs, cap: u128) -> Result<Outcome> {
    let tag = tag(a.family);
    let grid: Vec<(u64, u64)> = (a.l_range.0..=a.l_range.1)
        .flat_map(|l| (a.m_range.0..=a.m_range.1).map(move |m| (l, m)))
        .collect();
    let verification = match a.full_up_to {
        Some(max_q) => Verification::FullUpToQ {
            max_q,
            minor_cap: cap,
        },
        None => Verification::Cosets,
    };
    let jobs = a
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .clamp(1, grid.len().max(1));
    info!("sweeping {} instances on {jobs} threads", grid.len());

    let next = AtomicUsize::new(0);
    let cells: Mutex<Vec<Option<Result<Cell>>>> = Mutex::new((0..grid.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(l, m)) = grid.get(i) else { break };
                let cell = match run_family(tag, l, m, verification) {
                    Ok(o) => Ok(Cell::Done(Box::new(o))),
                    Err(e @ (Error::NotPrimePower(_) | Error::InvalidFamily(_))) => {
                        Ok(Cell::Skipped(e.to_string()))
                    }
                    Err(e) => Err(e),
                };
                cells.lock().expect("no worker panicked")[i] = Some(cell);
            });
        }
    });

    let mut payload = Payload::new(
        "sweep",
        json!({
            "family": a.family,
            "lRange": [a.l_range.0, a.l_range.1],
            "mRange": [a.m_range.0, a.m_range.1],
            "fullUpTo": a.full_up_to,
            "cap": cap,
        }),
    );
    let mut text = String::new();
    let mut failed = false;
    let mut entries = Vec::new();
    let cells = cells.into_inner().expect("no worker panicked");
    for (&(l, m), cell) in grid.iter().zip(cells) {
        match cell.expect("every index visited")? {
            Cell::Skipped(reason) => {
                debug!("skip l={l} m={m}: {reason}");
                entries.push(json!({ "l": l, "m": m, "status": "skipped", "reason": reason }));
            }
            Cell::Done(o) => {
                let c = o.computed;
                failed |= c.is_none() || o.records.iter().any(|r| !r.is_consistent() || r.c != 4);
                let _ = writeln!(
                    text,
                    "l={l} m={m}: q={} n={} d-range {}",
                    o.params.q,
                    o.params.n,
                    c.map_or("none".to_string(), |c| format!("{}..{}", c.d_min, c.d_max))
                );
                entries.push(json!({
                    "l": l,
                    "m": m,
                    "status": "ok",
                    "q": o.params.q,
                    "n": o.params.n,
                    "computedRange": c.map(|c| [c.d_min, c.d_max]),
                    "matrixVerified": o.full,
                }));
                payload.records.extend(
                    o.records
                        .iter()
                        .map(|r| RecordJson::new(r, cap).with_instance(a.family, l, m)),
                );
                payload.reports.extend(o.reports.iter().map(ReportJson::from));
            }
        }
    }
    let skipped = entries.iter().filter(|e| e["status"] == "skipped").count();
    let _ = writeln!(text, "{} instances, {skipped} skipped", entries.len());
    payload.data = json!({ "grid": entries });
    Ok(Outcome {
        text,
        failed,
        ..Outcome::new(payload)
    })
}

struct Check {
    name: &'static str,
    passed: bool,
    detail: String,
}

fn check_field_axioms() -> Result<Check> {
    let f = make_field(5, 2)?;
    let els: Vec<_> = (0..f.order()).map(|i| f.from_index(i)).collect();
    let mut bad = 0usize;
    for a in &els {
        for b in &els {
            for c in &els {
                let assoc = f.mul(&f.mul(a, b), c) == f.mul(a, &f.mul(b, c));
                let dist = f.mul(a, &f.add(b, c)) == f.add(&f.mul(a, b), &f.mul(a, c));
                bad += usize::from(!(assoc && dist));
            }
            bad += usize::from(f.mul(a, b) != f.mul(b, a));
        }
        if !a.is_zero() {
            bad += usize::from(f.mul(a, &f.inv(a)?) != f.one());
        }
    }
    Ok(Check {
        name: "GF(25) field axioms, exhaustive",
        passed: bad == 0,
        detail: format!("{bad} violations"),
    })
}

fn check_roots_of_unity() -> Result<Check> {
    let mut bad = Vec::new();
    for (n, q) in [(17, 13), (29, 17), (37, 31), (65, 47), (73, 27)] {
        let t = TowerMap::new(q)?;
        let g = t.nth_root_of_unity(n)?;
        let top = t.top();
        let exact = top.pow(&g, n) == top.one()
            && factorize(n).iter().all(|&(p, _)| top.pow(&g, n / p) != top.one());
        if !exact {
            bad.push(n);
        }
    }
    Ok(Check {
        name: "primitive n-th roots of unity for n in {17,29,37,65,73}",
        passed: bad.is_empty(),
        detail: format!("wrong order for {bad:?}"),
    })
}

fn check_oracles(q: u64, n: u64) -> Result<Check> {
    let setup = CyclicSetup::new(q, n)?;
    let mut bad = Vec::new();
    for k in 0..=n.div_ceil(2) - 2 {
        let t = ConsecutiveSpec::new(q, n, k)?.build_t();
        let h = setup.parity_check_matrix(&t)?;
        let gram = gram_rank(setup.field(), h.matrix());
        let tss = setup.cosets().decompose(&t).tss_size();
        if gram != tss {
            bad.push((k, gram, tss));
        }
    }
    Ok(Check {
        name: if q == 13 {
            "rank(HH^dagger) = |T_ss| for every run index, q = 13"
        } else {
            "rank(HH^dagger) = |T_ss| for every run index, q = 17"
        },
        passed: bad.is_empty(),
        detail: format!("(k', gram, |T_ss|) mismatches: {bad:?}"),
    })
}

fn check_parity_routes(q: u64, n: u64) -> Result<Check> {
    let setup = CyclicSetup::new(q, n)?;
    let field = setup.field();
    let mut bad = Vec::new();
    for k in 0..=n.div_ceil(2) - 2 {
        let t = ConsecutiveSpec::new(q, n, k)?.build_t();
        let g: Vec<_> = setup
            .generator_polynomial(&t)?
            .iter()
            .map(|c| field.from_element(c))
            .collect();
        let mut from_h = check_matrix_from_generator(field, &g, n as usize)?;
        from_h.rref(field);
        let mut vandermonde = setup.parity_check_matrix(&t)?.matrix().clone();
        vandermonde.rref(field);
        if from_h.without_zero_rows() != vandermonde.without_zero_rows() {
            bad.push(k);
        }
    }
    Ok(Check {
        name: "Vandermonde and check-polynomial parity checks agree, q = 13",
        passed: bad.is_empty(),
        detail: format!("differ at k' = {bad:?}"),
    })
}

fn check_anchor(tag: FamilyTag, l: u64, m: u64, expected: &[(i64, u64)], cap: u128) -> Result<Check> {
    let o = run_family(tag, l, m, Verification::Full { minor_cap: cap })?;
    let got: Vec<(i64, u64)> = o.records.iter().map(|r| (r.k, r.d)).collect();
    let clean = o
        .records
        .iter()
        .all(|r| r.is_consistent() && r.c == 4 && r.mds != MdsStatus::Failed);
    let skipped = o.records.iter().filter(|r| r.mds == MdsStatus::Skipped).count();
    Ok(Check {
        name: if tag == FamilyTag::One {
            "family 1 (l, m) = (3, 1) records"
        } else {
            "family 2 (l, m) = (7, 1) records"
        },
        passed: got == expected && clean,
        detail: format!("(k, d) = {got:?}, {skipped} minor checks over cap"),
    })
}

pub fn selfcheck(cap: u128) -> Result<Outcome> {
    let checks = [
        check_field_axioms()?,
        check_roots_of_unity()?,
        check_oracles(13, 17)?,
        check_oracles(17, 29)?,
        check_parity_routes(13, 17)?,
        check_anchor(FamilyTag::One, 3, 1, &[(9, 7), (5, 9), (1, 11)], cap)?,
        check_anchor(FamilyTag::Two, 7, 1, &[(17, 9), (13, 11), (9, 13)], cap)?,
    ];
    let mut text = String::new();
    for c in &checks {
        let _ = write!(text, "{} {}", if c.passed { "ok  " } else { "FAIL" }, c.name);
        if !c.passed {
            let _ = write!(text, ": {}", c.detail);
        }
        text.push('\n');
    }
    let failed = checks.iter().any(|c| !c.passed);
    let mut payload = Payload::new("selfcheck", json!({ "cap": cap }));
    payload.data = json!({
        "checks": checks.iter().map(|c| json!({
            "name": c.name,
            "passed": c.passed,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    });
    Ok(Outcome {
        text,
        failed,
        ..Outcome::new(payload)
    })
}
