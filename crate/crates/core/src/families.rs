//! The two EA-quantum MDS families of length `n = (q^2 + 1) / a`,
//! `q = a*m + l`:
//!
//! * family 1: `a = l^2 + 1`, `l` odd;
//! * family 2: `a = (l^2 + 1) / 5`, `l = 10t + 3` or `l = 10t + 7`.
//!
//! Ground truth is always the coset-level computation (and, when enabled,
//! the Gram rank). The published closed forms are evaluated as claims and
//! every disagreement becomes a [`DiscrepancyReport`].

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclic::{bch_designed_distance, ConsecutiveSpec, CyclicSetup};
use crate::gfield::{factor_prime_power, PrimePower};
use crate::intmath::ceil_div;
use crate::tables::{printed_row, PrintedRow};
use crate::verify::{eaqmds_record, eaqmds_record_from_cosets, gram_rank, EaqmdsRecord};
use crate::zmod::{CosetClass, CosetContext, CyclotomicCoset, Witness};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyTag {
    One,
    Two,
}

impl FamilyTag {
    pub fn number(self) -> u8 {
        match self {
            FamilyTag::One => 1,
            FamilyTag::Two => 2,
        }
    }

    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(FamilyTag::One),
            2 => Some(FamilyTag::Two),
            _ => None,
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// Residue class of `l` in family 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwoCase {
    /// `l = 10t + 3`
    Three,
    /// `l = 10t + 7`
    Seven,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyParams {
    pub tag: FamilyTag,
    pub l: u64,
    pub m: u64,
    pub a: u64,
    pub q: u64,
    pub n: u64,
    pub s: u64,
    /// `l = 10t + 3` or `10t + 7` (family 2 only).
    pub t: Option<u64>,
    pub case: Option<TwoCase>,
    pub prime_power: PrimePower,
}

impl FamilyParams {
    /// Validates `(l, m)` for the family. A `q` that is not a prime power
    /// yields [`Error::NotPrimePower`], which sweeps treat as a skip.
    pub fn new(tag: FamilyTag, l: u64, m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidFamily("m must be positive".into()));
        }
        let (a, t, case) = match tag {
            FamilyTag::One => {
                if l < 3 || l.is_multiple_of(2) {
                    return Err(Error::InvalidFamily(format!("l = {l} must be odd and at least 3")));
                }
                (l * l + 1, None, None)
            }
            FamilyTag::Two => {
                let case = match l % 10 {
                    3 => TwoCase::Three,
                    7 => TwoCase::Seven,
                    _ => {
                        return Err(Error::InvalidFamily(format!(
                            "l = {l} must be 3 or 7 modulo 10"
                        )))
                    }
                };
                (((l * l + 1) / 5), Some(l / 10), Some(case))
            }
        };
        let q = a
            .checked_mul(m)
            .and_then(|x| x.checked_add(l))
            .ok_or_else(|| Error::InvalidFamily("q overflows".into()))?;
        let prime_power = factor_prime_power(q)?;
        let q2p1 = q as u128 * q as u128 + 1;
        if !q2p1.is_multiple_of(a as u128) {
            return Err(Error::Internal(format!("a = {a} does not divide q^2 + 1")));
        }
        let n = u64::try_from(q2p1 / a as u128)
            .map_err(|_| Error::InvalidFamily("n overflows".into()))?;
        if n % 2 == 0 || n < 3 {
            return Err(Error::BadLength { q, n });
        }
        Ok(Self {
            tag,
            l,
            m,
            a,
            q,
            n,
            s: n.div_ceil(2),
            t,
            case,
            prime_power,
        })
    }

    /// Largest run index, `s - 2`.
    pub fn max_k(&self) -> u64 {
        self.s - 2
    }

    pub fn cosets(&self) -> CosetContext {
        CosetContext::new(self.n, self.q).expect("n | q^2 + 1")
    }

    pub fn consecutive(&self, k: u64) -> Result<ConsecutiveSpec> {
        ConsecutiveSpec::new(self.q, self.n, k)
    }

    /// The published distance range for this family, as printed (the
    /// bounds need not be odd).
    pub fn stated_d_range(&self) -> (u64, u64) {
        let (l, m) = (self.l, self.m);
        match self.tag {
            FamilyTag::One => ((l + 1) * m + 3, (3 * l - 4) * m + 3),
            FamilyTag::Two => (((l - 1) / 2 + ceil_div(l, 10)) * m + 5, (l + 1) * m + 5),
        }
    }

    /// The published upper end of the run index range with `|T_ss| = 4`.
    pub fn stated_k_max(&self) -> u64 {
        let (l, m) = (self.l, self.m);
        match (self.tag, self.case) {
            (FamilyTag::One, _) => (3 * l - 1) / 2 * m,
            (FamilyTag::Two, Some(TwoCase::Three)) => l.div_ceil(2) * m + 1,
            (FamilyTag::Two, _) => l.div_ceil(2) * m + 2,
        }
    }

    fn stated_k_max_formula(&self) -> &'static str {
        match (self.tag, self.case) {
            (FamilyTag::One, _) => "(3l-1)/2*m",
            (FamilyTag::Two, Some(TwoCase::Three)) => "(l+1)/2*m+1",
            (FamilyTag::Two, _) => "(l+1)/2*m+2",
        }
    }

    fn stated_d_formula(&self) -> &'static str {
        match self.tag {
            FamilyTag::One => "(l+1)m+3 <= d <= (3l-4)m+3",
            FamilyTag::Two => "((l-1)/2+ceil(l/10))m+5 <= d <= (l+1)m+5",
        }
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "family {} (l={}, m={}): a={}, q={}, n={}",
            self.tag, self.l, self.m, self.a, self.q, self.n
        )
    }
}

/// Where a distance range came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimSource {
    TheoremText,
    TableText,
    Computed,
}

/// An odd distance range `d_min..=d_max`, `d = 2k + 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RangeClaim {
    pub source: ClaimSource,
    pub d_min: u64,
    pub d_max: u64,
}

impl RangeClaim {
    /// Normalises printed bounds to the odd values they contain.
    pub fn from_bounds(source: ClaimSource, lo: u64, hi: u64) -> Option<Self> {
        let lo = if lo.is_multiple_of(2) { lo + 1 } else { lo };
        let hi = if hi.is_multiple_of(2) { hi.checked_sub(1)? } else { hi };
        (lo <= hi).then_some(Self {
            source,
            d_min: lo,
            d_max: hi,
        })
    }

    pub fn k_min(&self) -> u64 {
        (self.d_min - 3) / 2
    }

    pub fn k_max(&self) -> u64 {
        (self.d_max - 3) / 2
    }

    pub fn same_range(&self, other: &RangeClaim) -> bool {
        (self.d_min, self.d_max) == (other.d_min, other.d_max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiscrepancyKind {
    RangeMismatch,
    TssFormulaMismatch,
    TableTypo,
}

/// A predicted coset together with where the neg-q map sends it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetImage {
    /// `s`-relative offset used by the closed form.
    pub label: i64,
    pub coset: Vec<u64>,
    pub image_coset: Vec<u64>,
}

/// Data that lets a reader re-run the oracle behind a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReportWitness {
    DistanceRange {
        stated: (u64, u64),
        computed: (u64, u64),
    },
    /// `|T_ss|` at run index `k` with the asymmetric pairs found there.
    EbitCount {
        k: u64,
        tss: u64,
        pairs: Vec<(u64, u64)>,
    },
    CosetPairs {
        predicted: Vec<CosetImage>,
        computed: Vec<(u64, u64)>,
    },
    NonIntegralIndex {
        numerator: u64,
        denominator: u64,
    },
    TableCell {
        table: u8,
        q: u64,
        cell: &'static str,
        printed: u64,
        computed: u64,
    },
    Notation {
        table: u8,
        printed: &'static str,
        expected: &'static str,
    },
}

/// The instance a report is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Instance {
    pub tag: FamilyTag,
    pub l: u64,
    pub m: u64,
    pub q: u64,
    pub n: u64,
}

impl From<&FamilyParams> for Instance {
    fn from(p: &FamilyParams) -> Self {
        Self {
            tag: p.tag,
            l: p.l,
            m: p.m,
            q: p.q,
            n: p.n,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyReport {
    pub kind: DiscrepancyKind,
    /// Stable identifier of the claim under test, e.g. `family1.d_range`.
    pub claim: String,
    pub instance: Option<Instance>,
    pub claimed: String,
    pub computed: String,
    pub witness: ReportWitness,
}

/// Closed-form prediction of the two cosets making up `T_ss`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PredictedTss {
    Cosets {
        labels: [i64; 2],
        cosets: [CyclotomicCoset; 2],
    },
    /// The coset index formula does not evaluate to an integer.
    NonIntegral { numerator: u64, denominator: u64 },
}

/// Evaluates the published closed form for `T_ss`. Labels are offsets from
/// `s`; cosets are returned as sets, so `C_x` and `C_{n-x}` coincide.
pub fn predicted_tss(params: &FamilyParams) -> PredictedTss {
    let (l, m) = (params.l, params.m);
    let labels: [i64; 2] = match (params.tag, params.case) {
        (FamilyTag::One, _) => [(l.div_ceil(2) * m) as i64, ((l - 1) / 2 * m) as i64],
        (FamilyTag::Two, Some(TwoCase::Three)) => {
            let numerator = (l + 3) * m;
            if numerator % 4 != 0 {
                return PredictedTss::NonIntegral {
                    numerator,
                    denominator: 4,
                };
            }
            [(numerator / 4) as i64, (l / 10 * m) as i64]
        }
        (FamilyTag::Two, _) => {
            let numerator = ((l - 1) / 2 + ceil_div(l, 10)) * m;
            if !numerator.is_multiple_of(2) {
                return PredictedTss::NonIntegral {
                    numerator,
                    denominator: 2,
                };
            }
            [(numerator / 2) as i64, -((ceil_div(l, 10) * m) as i64) - 1]
        }
    };
    let ctx = params.cosets();
    let coset = |offset: i64| {
        let x = (params.s as i128 + offset as i128).rem_euclid(params.n as i128) as u64;
        ctx.coset(x).expect("reduced mod n")
    };
    PredictedTss::Cosets {
        labels,
        cosets: [coset(labels[0]), coset(labels[1])],
    }
}

/// One row of a run-index sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProfileEntry {
    pub k: u64,
    pub tss: u64,
    /// `rank(H H^†)`, when the matrix route ran.
    pub gram: Option<u64>,
}

/// `|T_ss|` for `k = 0..=k_max` via the coset decomposition only.
pub fn tss_profile(params: &FamilyParams, k_max: u64) -> Result<Vec<ProfileEntry>> {
    let ctx = params.cosets();
    (0..=k_max)
        .map(|k| {
            let t = params.consecutive(k)?.build_t();
            Ok(ProfileEntry {
                k,
                tss: ctx.decompose(&t).tss_size() as u64,
                gram: None,
            })
        })
        .collect()
}

/// Both ebit oracles for `k = 0..=k_max`.
pub fn scan_c_profile(params: &FamilyParams, k_max: u64) -> Result<Vec<ProfileEntry>> {
    let setup = CyclicSetup::new(params.q, params.n)?;
    scan_c_profile_with(params, &setup, k_max)
}

pub fn scan_c_profile_with(
    params: &FamilyParams,
    setup: &CyclicSetup,
    k_max: u64,
) -> Result<Vec<ProfileEntry>> {
    let ctx = params.cosets();
    (0..=k_max)
        .map(|k| {
            let t = params.consecutive(k)?.build_t();
            let h = setup.parity_check_matrix(&t)?;
            Ok(ProfileEntry {
                k,
                tss: ctx.decompose(&t).tss_size() as u64,
                gram: Some(gram_rank(setup.field(), h.matrix()) as u64),
            })
        })
        .collect()
}

/// The first maximal run of `k` with `|T_ss| = 4`, as a distance range.
pub fn computed_range(profile: &[ProfileEntry]) -> Option<RangeClaim> {
    let start = profile.iter().position(|e| e.tss == 4)?;
    let len = profile[start..].iter().take_while(|e| e.tss == 4).count();
    let (k0, k1) = (profile[start].k, profile[start + len - 1].k);
    Some(RangeClaim {
        source: ClaimSource::Computed,
        d_min: 2 * k0 + 3,
        d_max: 2 * k1 + 3,
    })
}

/// How much checking each record receives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verification {
    /// Coset decomposition only.
    Cosets,
    /// Gram rank, EA-Singleton and the minor check (up to `minor_cap`
    /// column subsets) for every record.
    Full { minor_cap: u128 },
    /// `Full` when `q <= max_q`, otherwise `Cosets`.
    FullUpToQ { max_q: u64, minor_cap: u128 },
}

impl Verification {
    fn resolve(self, q: u64) -> Option<u128> {
        match self {
            Verification::Cosets => None,
            Verification::Full { minor_cap } => Some(minor_cap),
            Verification::FullUpToQ { max_q, minor_cap } => (q <= max_q).then_some(minor_cap),
        }
    }
}

#[derive(Debug, Clone)]
pub struct FamilyOutcome {
    pub params: FamilyParams,
    /// Coset-level `|T_ss|` from `k = 0` until one past the last run
    /// index any claim mentions.
    pub profile: Vec<ProfileEntry>,
    pub claims: Vec<RangeClaim>,
    pub computed: Option<RangeClaim>,
    pub records: Vec<EaqmdsRecord>,
    pub reports: Vec<DiscrepancyReport>,
    /// Whether records went through the matrix oracles.
    pub full: bool,
}

pub fn family1(l: u64, m: u64, verification: Verification) -> Result<FamilyOutcome> {
    run_family(FamilyTag::One, l, m, verification)
}

pub fn family2(l: u64, m: u64, verification: Verification) -> Result<FamilyOutcome> {
    run_family(FamilyTag::Two, l, m, verification)
}

pub fn run_family(
    tag: FamilyTag,
    l: u64,
    m: u64,
    verification: Verification,
) -> Result<FamilyOutcome> {
    let params = FamilyParams::new(tag, l, m)?;
    let ctx = params.cosets();
    let printed = printed_row(tag, l, params.q);

    // sweep past everything a claim refers to, and past the end of the run
    let (_, stated_hi) = params.stated_d_range();
    let mut horizon = params.stated_k_max().max(stated_hi.saturating_sub(3) / 2);
    if let Some(row) = printed {
        horizon = horizon.max(row.d_max.saturating_sub(3) / 2);
    }
    let mut profile = Vec::new();
    for k in 0..=params.max_k() {
        let t = params.consecutive(k)?.build_t();
        let tss = ctx.decompose(&t).tss_size() as u64;
        profile.push(ProfileEntry { k, tss, gram: None });
        if k > horizon && tss > 4 {
            break;
        }
    }
    let computed = computed_range(&profile);

    let mut claims = Vec::new();
    let (lo, hi) = params.stated_d_range();
    let stated = RangeClaim::from_bounds(ClaimSource::TheoremText, lo, hi);
    claims.extend(stated);
    let table_claim = printed.and_then(|r| RangeClaim::from_bounds(ClaimSource::TableText, r.d_min, r.d_max));
    claims.extend(table_claim);
    claims.extend(computed);

    let mut reports = Vec::new();
    let instance = Instance::from(&params);
    let family = tag.number();

    if let Some(comp) = computed {
        if stated.is_none_or(|s| !s.same_range(&comp)) {
            reports.push(DiscrepancyReport {
                kind: DiscrepancyKind::RangeMismatch,
                claim: format!("family{family}.d_range"),
                instance: Some(instance),
                claimed: format!("{} gives {lo} <= d <= {hi}", params.stated_d_formula()),
                computed: format!("|T_ss| = 4 exactly for odd {} <= d <= {}", comp.d_min, comp.d_max),
                witness: ReportWitness::DistanceRange {
                    stated: (lo, hi),
                    computed: (comp.d_min, comp.d_max),
                },
            });
        }
    }

    // the run-index claim: |T_ss| = 4 from the stated lower distance up to
    // the stated k bound
    if let Some(s) = stated {
        let k_hi = params.stated_k_max().min(params.max_k());
        let bad = profile
            .iter()
            .filter(|e| e.k >= s.k_min() && e.k <= k_hi)
            .find(|e| e.tss != 4);
        if let Some(e) = bad {
            let t = params.consecutive(e.k)?.build_t();
            let pairs = asymmetric_pairs(&ctx, &t);
            reports.push(DiscrepancyReport {
                kind: DiscrepancyKind::RangeMismatch,
                claim: format!("family{family}.tss_run"),
                instance: Some(instance),
                claimed: format!(
                    "|T_ss| = 4 for k <= {} = {}",
                    params.stated_k_max_formula(),
                    params.stated_k_max()
                ),
                computed: format!("|T_ss| = {} at k' = {}", e.tss, e.k),
                witness: ReportWitness::EbitCount {
                    k: e.k,
                    tss: e.tss,
                    pairs,
                },
            });
        }
    }

    if let Some(comp) = computed {
        if let Some(report) = tss_formula_report(&params, &ctx, comp.k_max())? {
            reports.push(report);
        }
    }

    if let Some(row) = printed {
        reports.extend(table_row_reports(&params, row, computed));
    }

    let mut records = Vec::new();
    let cap = verification.resolve(params.q);
    if let Some(comp) = computed {
        let setup = match cap {
            Some(_) => Some(CyclicSetup::new(params.q, params.n)?),
            None => None,
        };
        for k in comp.k_min()..=comp.k_max() {
            let full = setup.as_ref().zip(cap);
            records.push(record_at(&params, &ctx, full, k)?);
        }
    }

    Ok(FamilyOutcome {
        params,
        profile,
        claims,
        computed,
        records,
        reports,
        full: cap.is_some(),
    })
}

/// The record for run index `k`: matrix-verified with the given setup and
/// minor-check cap, or coset-level when `full` is `None`.
pub fn record_at(
    params: &FamilyParams,
    ctx: &CosetContext,
    full: Option<(&CyclicSetup, u128)>,
    k: u64,
) -> Result<EaqmdsRecord> {
    let t = params.consecutive(k)?.build_t();
    let delta = bch_designed_distance(&t)?;
    match full {
        Some((setup, cap)) => {
            let h = setup.parity_check_matrix(&t)?;
            eaqmds_record(ctx, setup.field(), &t, &h, delta, cap)
        }
        None => eaqmds_record_from_cosets(ctx, &t, delta),
    }
}

fn asymmetric_pairs(ctx: &CosetContext, t: &crate::zmod::DefiningSet) -> Vec<(u64, u64)> {
    ctx.decompose(t)
        .witnesses
        .iter()
        .filter_map(|w| match *w {
            Witness::AsymmetricPair { rep, partner, .. } => Some((rep, partner)),
            Witness::SkewSymmetric { .. } => None,
        })
        .collect()
}

fn tss_formula_report(
    params: &FamilyParams,
    ctx: &CosetContext,
    k: u64,
) -> Result<Option<DiscrepancyReport>> {
    let t = params.consecutive(k)?.build_t();
    let decomposition = ctx.decompose(&t);
    let computed_pairs = asymmetric_pairs(ctx, &t);
    let mut computed_cosets: Vec<Vec<u64>> = decomposition
        .tss
        .reps()
        .iter()
        .map(|&r| ctx.coset(r).map(|c| c.elements().to_vec()))
        .collect::<Result<_>>()?;
    computed_cosets.sort();
    let claim = format!("family{}.tss_cosets", params.tag.number());
    let instance = Some(Instance::from(params));
    let computed_text = format!("T_ss = {}", render_cosets(&computed_cosets));

    match predicted_tss(params) {
        PredictedTss::NonIntegral {
            numerator,
            denominator,
        } => Ok(Some(DiscrepancyReport {
            kind: DiscrepancyKind::TssFormulaMismatch,
            claim,
            instance,
            claimed: format!("coset index {numerator}/{denominator} is not an integer"),
            computed: computed_text,
            witness: ReportWitness::NonIntegralIndex {
                numerator,
                denominator,
            },
        })),
        PredictedTss::Cosets { labels, cosets } => {
            let mut predicted: Vec<Vec<u64>> = cosets.iter().map(|c| c.elements().to_vec()).collect();
            predicted.sort();
            predicted.dedup();
            if predicted == computed_cosets {
                return Ok(None);
            }
            let images = labels
                .iter()
                .zip(&cosets)
                .map(|(&label, c)| {
                    let image = match ctx.classify(c) {
                        CosetClass::SkewSymmetric => c.clone(),
                        CosetClass::AsymmetricPair { partner } => ctx.coset(partner)?,
                    };
                    Ok(CosetImage {
                        label,
                        coset: c.elements().to_vec(),
                        image_coset: image.elements().to_vec(),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let label = |x: i64| {
                if x >= 0 {
                    format!("C_{{s+{x}}}")
                } else {
                    format!("C_{{s{x}}}")
                }
            };
            Ok(Some(DiscrepancyReport {
                kind: DiscrepancyKind::TssFormulaMismatch,
                claim,
                instance,
                claimed: format!(
                    "T_ss = {{{}, {}}} = {}",
                    label(labels[0]),
                    label(labels[1]),
                    render_cosets(&predicted)
                ),
                computed: computed_text,
                witness: ReportWitness::CosetPairs {
                    predicted: images,
                    computed: computed_pairs,
                },
            }))
        }
    }
}

fn render_cosets(cosets: &[Vec<u64>]) -> String {
    let parts: Vec<String> = cosets
        .iter()
        .map(|c| {
            let inner: Vec<String> = c.iter().map(|x| format!("{x}")).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect();
    format!("{{{}}}", parts.join(", "))
}

fn table_row_reports(
    params: &FamilyParams,
    row: &PrintedRow,
    computed: Option<RangeClaim>,
) -> Vec<DiscrepancyReport> {
    let mut out = Vec::new();
    let instance = Some(Instance::from(params));
    let claim = format!("table{}.row.q{}", row.table, row.q);
    let mut cell = |name: &'static str, printed: u64, actual: u64| {
        if printed != actual {
            out.push(DiscrepancyReport {
                kind: DiscrepancyKind::TableTypo,
                claim: claim.clone(),
                instance,
                claimed: format!("{name} printed as {printed}"),
                computed: format!("{name} = {actual}"),
                witness: ReportWitness::TableCell {
                    table: row.table,
                    q: row.q,
                    cell: name,
                    printed,
                    computed: actual,
                },
            });
        }
    };
    cell("n", row.n, params.n);
    cell("n+6 in [[n, n+6-2d, d; 4]]", row.k_const, params.n + 6);
    cell("field subscript", row.subscript, params.q);
    if let Some(comp) = computed {
        if (row.d_min, row.d_max) != (comp.d_min, comp.d_max) {
            out.push(DiscrepancyReport {
                kind: DiscrepancyKind::RangeMismatch,
                claim,
                instance,
                claimed: format!("{} <= d <= {}", row.d_min, row.d_max),
                computed: format!("{} <= d <= {}", comp.d_min, comp.d_max),
                witness: ReportWitness::DistanceRange {
                    stated: (row.d_min, row.d_max),
                    computed: (comp.d_min, comp.d_max),
                },
            });
        }
    }
    out
}
