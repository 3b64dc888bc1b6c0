//! JSON, CSV and text forms of records and reports.

use std::fmt::Write as _;
use std::io;

use eaqmds_core::families::{DiscrepancyKind, DiscrepancyReport, Instance, ReportWitness};
use eaqmds_core::verify::{EaqmdsRecord, MdsStatus, MinorVerdict, Saturation};
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// The top-level JSON document every command emits.
#[derive(Debug, Serialize)]
pub struct Payload {
    pub version: &'static str,
    pub command: &'static str,
    pub params: Value,
    pub records: Vec<RecordJson>,
    pub reports: Vec<ReportJson>,
    pub data: Value,
}

impl Payload {
    pub fn new(command: &'static str, params: Value) -> Self {
        Self {
            version: VERSION,
            command,
            params,
            records: Vec::new(),
            reports: Vec::new(),
            data: Value::Null,
        }
    }
}

/// `true`, `false` or `"skipped"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MdsFlag(pub MdsStatus);

impl Serialize for MdsFlag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0 {
            MdsStatus::Verified => s.serialize_bool(true),
            MdsStatus::Failed => s.serialize_bool(false),
            MdsStatus::Skipped => s.serialize_str("skipped"),
        }
    }
}

impl MdsFlag {
    fn as_str(self) -> &'static str {
        match self.0 {
            MdsStatus::Verified => "true",
            MdsStatus::Failed => "false",
            MdsStatus::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "verdict", rename_all = "camelCase")]
pub enum MinorJson {
    Mds {
        subsets: u128,
    },
    NotMds {
        witness: Vec<usize>,
    },
    Skipped {
        cost: u128,
        cap: u128,
    },
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RecordJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    pub q: u64,
    pub n: u64,
    pub k: i64,
    pub d: u64,
    pub c: u64,
    pub saturation: &'static str,
    pub mds_verified: MdsFlag,
    pub defining_set_size: u64,
    pub tss_size: u64,
    pub gram_rank: Option<usize>,
    pub ebits_agree: Option<bool>,
    pub minor_check: Option<MinorJson>,
}

pub fn saturation_str(s: Saturation) -> &'static str {
    match s {
        Saturation::Saturated => "saturated",
        Saturation::Slack => "slack",
        Saturation::Violated => "violated",
    }
}

impl RecordJson {
    pub fn new(r: &EaqmdsRecord, cap: u128) -> Self {
        Self {
            family: None,
            l: None,
            m: None,
            q: r.q,
            n: r.n,
            k: r.k,
            d: r.d,
            c: r.c,
            saturation: saturation_str(r.saturation),
            mds_verified: MdsFlag(r.mds),
            defining_set_size: r.defining_set_size,
            tss_size: r.tss_size,
            gram_rank: r.ebits.map(|e| e.gram_rank),
            ebits_agree: r.ebits.map(|e| e.agree),
            minor_check: r.minor.as_ref().map(|m| match m {
                MinorVerdict::Mds { subsets } => MinorJson::Mds { subsets: *subsets },
                MinorVerdict::NotMds { witness } => MinorJson::NotMds {
                    witness: witness.clone(),
                },
                MinorVerdict::Skipped { cost } => MinorJson::Skipped { cost: *cost, cap },
            }),
        }
    }

    pub fn with_instance(mut self, family: u8, l: u64, m: u64) -> Self {
        self.family = Some(family);
        self.l = Some(l);
        self.m = Some(m);
        self
    }

    /// `[[n,k,d;c]]_q`.
    pub fn bracket(&self) -> String {
        format!("[[{},{},{};{}]]_{}", self.n, self.k, self.d, self.c, self.q)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportJson {
    pub kind: &'static str,
    pub claim: String,
    pub instance: Option<Value>,
    #[serde(rename = "paper")]
    pub claimed: String,
    pub computed: String,
    pub witness: Value,
}

fn kind_str(k: DiscrepancyKind) -> &'static str {
    match k {
        DiscrepancyKind::RangeMismatch => "rangeMismatch",
        DiscrepancyKind::TssFormulaMismatch => "tssFormulaMismatch",
        DiscrepancyKind::TableTypo => "tableTypo",
    }
}

fn instance_json(i: &Instance) -> Value {
    json!({ "family": i.tag.number(), "l": i.l, "m": i.m, "q": i.q, "n": i.n })
}

fn witness_json(w: &ReportWitness) -> Value {
    match w {
        ReportWitness::DistanceRange { stated, computed } => json!({
            "type": "distanceRange",
            "stated": [stated.0, stated.1],
            "computed": [computed.0, computed.1],
        }),
        ReportWitness::EbitCount { k, tss, pairs } => json!({
            "type": "ebitCount",
            "k": k,
            "tssSize": tss,
            "asymmetricPairs": pairs.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
        }),
        ReportWitness::CosetPairs {
            predicted,
            computed,
        } => json!({
            "type": "cosetPairs",
            "predicted": predicted.iter().map(|p| json!({
                "offset": p.label,
                "coset": p.coset,
                "image": p.image_coset,
            })).collect::<Vec<_>>(),
            "computedPairs": computed.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
        }),
        ReportWitness::NonIntegralIndex {
            numerator,
            denominator,
        } => json!({
            "type": "nonIntegralIndex",
            "numerator": numerator,
            "denominator": denominator,
        }),
        ReportWitness::TableCell {
            table,
            q,
            cell,
            printed,
            computed,
        } => json!({
            "type": "tableCell",
            "table": table,
            "q": q,
            "cell": cell,
            "printed": printed,
            "computed": computed,
        }),
        ReportWitness::Notation {
            table,
            printed,
            expected,
        } => json!({
            "type": "notation",
            "table": table,
            "printed": printed,
            "expected": expected,
        }),
    }
}

impl From<&DiscrepancyReport> for ReportJson {
    fn from(r: &DiscrepancyReport) -> Self {
        Self {
            kind: kind_str(r.kind),
            claim: r.claim.clone(),
            instance: r.instance.as_ref().map(instance_json),
            claimed: r.claimed.clone(),
            computed: r.computed.clone(),
            witness: witness_json(&r.witness),
        }
    }
}

pub fn write_json(out: &mut dyn io::Write, payload: &Payload) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, payload)?;
    writeln!(out)
}

/// Records only, one row each.
pub fn write_csv(out: &mut dyn io::Write, records: &[RecordJson]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "family", "l", "m", "q", "n", "k", "d", "c", "saturation", "mdsVerified", "gramRank",
        "tssSize",
    ])?;
    let opt = |x: Option<u64>| x.map_or(String::new(), |v| v.to_string());
    for r in records {
        w.write_record([
            r.family.map_or(String::new(), |f| f.to_string()),
            opt(r.l),
            opt(r.m),
            r.q.to_string(),
            r.n.to_string(),
            r.k.to_string(),
            r.d.to_string(),
            r.c.to_string(),
            r.saturation.to_string(),
            r.mds_verified.as_str().to_string(),
            r.gram_rank.map_or(String::new(), |g| g.to_string()),
            r.tss_size.to_string(),
        ])?;
    }
    w.flush()
}

/// Generic text tail: one line per record, then the reports.
pub fn render_records_and_reports(records: &[RecordJson], reports: &[ReportJson]) -> String {
    let mut out = String::new();
    for r in records {
        let mut line = r.bracket();
        if let (Some(f), Some(l), Some(m)) = (r.family, r.l, r.m) {
            line = format!("family {f} l={l} m={m}: {line}");
        }
        let _ = write!(line, "  {}  mds={}", r.saturation, r.mds_verified.as_str());
        if let Some(g) = r.gram_rank {
            let _ = write!(line, "  gram={g}");
        }
        let _ = write!(line, "  |T_ss|={}", r.tss_size);
        if let Some(MinorJson::NotMds { witness }) = &r.minor_check {
            let _ = write!(line, "  dependent columns {witness:?}");
        }
        let _ = writeln!(out, "{line}");
    }
    if !reports.is_empty() {
        let _ = writeln!(out, "discrepancies:");
        for r in reports {
            let _ = writeln!(out, "  [{}] {}: {} vs {}", r.kind, r.claim, r.claimed, r.computed);
        }
    }
    out
}
