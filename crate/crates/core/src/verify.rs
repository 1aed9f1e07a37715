//! Exhaustive grid verification of catalog identities against the
//! term-by-term oracle.
//!
//! Points are enumerated per identity over the slots it reads; unused slots
//! collapse to their defaults. Records come back in canonical order (catalog
//! order, then parameters lexicographically in `n, j, r, s, p, m, x, z`)
//! whatever the parallelism, so reports are byte-for-byte reproducible.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use rayon::prelude::*;
use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::closed_forms::{domain_violation, evaluate_unchecked, IdentityId, IdentityParams, Slot};
use crate::integers::{Index, Rational};
use crate::{Error, Result};

/// Inclusive integer interval `lo..=hi`, written `lo..hi` on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntRange {
    pub lo: Index,
    pub hi: Index,
}

impl IntRange {
    pub fn new(lo: Index, hi: Index) -> Self {
        IntRange { lo, hi }
    }

    pub fn single(v: Index) -> Self {
        IntRange { lo: v, hi: v }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn len(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            (self.hi as i128 - self.lo as i128 + 1) as usize
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Index> {
        self.lo..=self.hi
    }
}

impl FromStr for IntRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRange(s.to_string());
        let range = match s.split_once("..") {
            Some((a, b)) => IntRange::new(
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            ),
            None => IntRange::single(s.trim().parse().map_err(|_| bad())?),
        };
        if range.is_empty() {
            return Err(bad());
        }
        Ok(range)
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub ids: Vec<IdentityId>,
    pub n: IntRange,
    pub j: IntRange,
    pub r: IntRange,
    pub s: IntRange,
    pub p: IntRange,
    /// `m` for the even-power families (and anything else reading `m`).
    pub m: IntRange,
    /// `m` for the odd-power families.
    pub odd_m: IntRange,
    pub x: IntRange,
    pub z: IntRange,
    /// When false, points that only violate a soft domain restriction
    /// (`p != 0` for Q13/Q14) are evaluated anyway and annotated.
    pub skip_inapplicable: bool,
}

impl Default for GridSpec {
    /// The full verification grid.
    fn default() -> Self {
        let sym4 = IntRange::new(-4, 4);
        GridSpec {
            ids: IdentityId::ALL.to_vec(),
            n: IntRange::new(0, 12),
            j: sym4,
            r: sym4,
            s: sym4,
            p: sym4,
            m: IntRange::new(0, 3),
            odd_m: IntRange::new(0, 2),
            x: IntRange::new(-2, 2),
            z: IntRange::new(-2, 2),
            skip_inapplicable: true,
        }
    }
}

impl GridSpec {
    /// A grid over `ids` with every range a single default point.
    pub fn point(ids: &[IdentityId]) -> Self {
        let d = IdentityParams::default();
        GridSpec {
            ids: ids.to_vec(),
            n: IntRange::single(d.n),
            j: IntRange::single(d.j),
            r: IntRange::single(d.r),
            s: IntRange::single(d.s),
            p: IntRange::single(d.p),
            m: IntRange::single(d.m),
            odd_m: IntRange::single(d.m),
            x: IntRange::single(d.x),
            z: IntRange::single(d.z),
            skip_inapplicable: true,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ranges = [
            self.n, self.j, self.r, self.s, self.p, self.m, self.odd_m, self.x, self.z,
        ];
        if let Some(r) = ranges.iter().find(|r| r.is_empty()) {
            return Err(Error::InvalidRange(r.to_string()));
        }
        for (name, r) in [("n", self.n), ("m", self.m), ("m", self.odd_m)] {
            if r.lo < 0 {
                return Err(Error::Negative { name, value: r.lo });
            }
        }
        Ok(())
    }

    fn range(&self, id: IdentityId, slot: Slot) -> IntRange {
        if !id.uses(slot) {
            return IntRange::single(IdentityParams::default().get(slot));
        }
        match slot {
            Slot::N => self.n,
            Slot::J => self.j,
            Slot::R => self.r,
            Slot::S => self.s,
            Slot::P => self.p,
            Slot::M if id.is_odd_power() => self.odd_m,
            Slot::M => self.m,
            Slot::X => self.x,
            Slot::Z => self.z,
        }
    }

    fn ids_in_order(&self) -> Vec<IdentityId> {
        let mut ids = self.ids.clone();
        ids.sort();
        ids.dedup();
        ids
    }

    /// Every `(id, params)` point in canonical order.
    pub fn points(&self) -> Vec<(IdentityId, IdentityParams)> {
        let mut out = Vec::new();
        for id in self.ids_in_order() {
            let ranges: Vec<(Slot, IntRange)> =
                Slot::ALL.iter().map(|&s| (s, self.range(id, s))).collect();
            let mut current = IdentityParams::default();
            enumerate(&ranges, &mut current, &mut |p| out.push((id, *p)));
        }
        out
    }

    /// Number of points [`run_grid`] will record.
    pub fn cardinality(&self) -> usize {
        self.ids_in_order()
            .into_iter()
            .map(|id| {
                Slot::ALL
                    .iter()
                    .map(|&s| self.range(id, s).len())
                    .product::<usize>()
            })
            .sum()
    }
}

fn enumerate(
    ranges: &[(Slot, IntRange)],
    current: &mut IdentityParams,
    emit: &mut impl FnMut(&IdentityParams),
) {
    match ranges.split_first() {
        None => emit(current),
        Some((&(slot, range), rest)) => {
            for v in range.iter() {
                current.set(slot, v);
                enumerate(rest, current, emit);
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationRecord {
    pub id: IdentityId,
    /// Collapsed parameters: unused slots hold their defaults.
    pub params: IdentityParams,
    pub lhs: Option<Rational>,
    pub rhs: Option<Rational>,
    /// `None` iff the point was skipped.
    pub matched: Option<bool>,
    pub skipped: Option<String>,
    /// Set for points evaluated outside a soft domain restriction.
    pub note: Option<String>,
    /// An evaluation error; such a record counts as a failure.
    pub error: Option<String>,
}

impl VerificationRecord {
    pub fn is_failure(&self) -> bool {
        self.matched == Some(false)
    }

    fn to_line(&self) -> RecordLine {
        RecordLine {
            id: self.id,
            params: ParamsMap(
                self.params
                    .used(self.id)
                    .into_iter()
                    .map(|(k, v)| (k.to_string(), v))
                    .collect(),
            ),
            lhs: self.lhs.as_ref().map(ToString::to_string),
            rhs: self.rhs.as_ref().map(ToString::to_string),
            matched: self.matched,
            skipped: self.skipped.clone(),
            note: self.note.clone(),
            error: self.error.clone(),
        }
    }

    /// One JSON object; big values are decimal strings.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(&self.to_line()).expect("record serialization cannot fail")
    }

    /// Inverse of [`to_json_line`](Self::to_json_line).
    pub fn from_json_line(line: &str) -> std::result::Result<Self, String> {
        let raw: RecordLine = serde_json::from_str(line).map_err(|e| e.to_string())?;
        let mut params = IdentityParams::default();
        for (k, v) in &raw.params.0 {
            let slot = Slot::ALL
                .iter()
                .find(|s| s.name() == k)
                .ok_or_else(|| format!("unknown parameter `{k}`"))?;
            params.set(*slot, *v);
        }
        let parse = |s: &Option<String>| -> std::result::Result<Option<Rational>, String> {
            s.as_deref()
                .map(|v| v.parse::<Rational>().map_err(|e| format!("{v}: {e}")))
                .transpose()
        };
        Ok(VerificationRecord {
            id: raw.id,
            params,
            lhs: parse(&raw.lhs)?,
            rhs: parse(&raw.rhs)?,
            matched: raw.matched,
            skipped: raw.skipped,
            note: raw.note,
            error: raw.error,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct RecordLine {
    id: IdentityId,
    params: ParamsMap,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lhs: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rhs: Option<String>,
    #[serde(rename = "match", default, skip_serializing_if = "Option::is_none")]
    matched: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    skipped: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

/// Ordered `name -> integer` map.
struct ParamsMap(Vec<(String, Index)>);

impl Serialize for ParamsMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for ParamsMap {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = ParamsMap;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an object of integer parameters")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> std::result::Result<ParamsMap, A::Error> {
                let mut out = Vec::new();
                while let Some((k, v)) = access.next_entry::<String, Index>()? {
                    out.push((k, v));
                }
                Ok(ParamsMap(out))
            }
        }
        deserializer.deserialize_map(V)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityTotals {
    pub id: Option<IdentityId>,
    pub checked: usize,
    pub matched: usize,
    pub skipped: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub checks: usize,
    pub matched: usize,
    pub skipped: usize,
    pub failed: usize,
    pub verdict: String,
    pub identities: Vec<IdentityTotals>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub records: Vec<VerificationRecord>,
    /// Per-identity counts, in catalog order.
    pub totals: Vec<IdentityTotals>,
}

impl Report {
    pub fn from_records(records: Vec<VerificationRecord>) -> Self {
        let mut by_id: BTreeMap<IdentityId, IdentityTotals> = BTreeMap::new();
        for rec in &records {
            let t = by_id.entry(rec.id).or_insert_with(|| IdentityTotals {
                id: Some(rec.id),
                ..Default::default()
            });
            match rec.matched {
                None => t.skipped += 1,
                Some(true) => {
                    t.checked += 1;
                    t.matched += 1;
                }
                Some(false) => {
                    t.checked += 1;
                    t.failed += 1;
                }
            }
        }
        Report {
            records,
            totals: by_id.into_values().collect(),
        }
    }

    pub fn failures(&self) -> Vec<&VerificationRecord> {
        self.records.iter().filter(|r| r.is_failure()).collect()
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| !r.is_failure())
    }

    pub fn summary(&self) -> Summary {
        let sum = |f: fn(&IdentityTotals) -> usize| self.totals.iter().map(f).sum::<usize>();
        Summary {
            checks: sum(|t| t.checked),
            matched: sum(|t| t.matched),
            skipped: sum(|t| t.skipped),
            failed: sum(|t| t.failed),
            verdict: if self.passed() { "PASS" } else { "FAIL" }.to_string(),
            identities: self.totals.clone(),
        }
    }

    /// One JSON object per record, then `{"summary": ...}`; newline-terminated.
    pub fn to_json_lines(&self) -> String {
        #[derive(Serialize)]
        struct Trailer<'a> {
            summary: &'a Summary,
        }
        let mut out = String::new();
        for rec in &self.records {
            out.push_str(&rec.to_json_line());
            out.push('\n');
        }
        let summary = self.summary();
        out.push_str(&serde_json::to_string(&Trailer { summary: &summary }).expect("summary"));
        out.push('\n');
        out
    }
}

fn evaluate_point(id: IdentityId, params: IdentityParams, skip_inapplicable: bool) -> VerificationRecord {
    let mut rec = VerificationRecord {
        id,
        params,
        lhs: None,
        rhs: None,
        matched: None,
        skipped: None,
        note: None,
        error: None,
    };
    if let Some(v) = domain_violation(id, &params) {
        if skip_inapplicable || !v.soft {
            rec.skipped = Some(v.reason);
            return rec;
        }
        rec.note = Some(format!("out-of-contract: {}", v.reason));
    }
    match evaluate_unchecked(id, &params) {
        Ok(pair) => {
            rec.matched = Some(pair.matched);
            rec.lhs = Some(pair.lhs);
            rec.rhs = Some(pair.rhs);
        }
        Err(e) => {
            rec.matched = Some(false);
            rec.lhs = id
                .descriptor()
                .lhs_embedding(&params)
                .and_then(|e| e.evaluate())
                .ok();
            rec.error = Some(e.to_string());
        }
    }
    rec
}

/// Check every grid point, using up to `parallelism` worker threads.
pub fn run_grid(spec: &GridSpec, parallelism: usize) -> Result<Report> {
    spec.validate()?;
    let points = spec.points();
    let skip = spec.skip_inapplicable;
    let eval = |&(id, params): &(IdentityId, IdentityParams)| evaluate_point(id, params, skip);
    let records: Vec<VerificationRecord> = if parallelism <= 1 {
        points.iter().map(eval).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(parallelism)
            .build()
            .expect("thread pool");
        // Indexed collect keeps the input order.
        pool.install(|| points.par_iter().map(eval).collect())
    };
    Ok(Report::from_records(records))
}

/// Human-readable summary: one line per identity, the failures, and a
/// final verdict line (`PASS (N checks)` or `FAIL (...)`).
pub fn summarize(report: &Report) -> String {
    let mut out = String::new();
    for t in &report.totals {
        let id = t.id.map(|i| i.tag()).unwrap_or("?");
        let _ = writeln!(
            out,
            "{id:<11} checked={:<7} matched={:<7} skipped={:<6} failed={}",
            t.checked, t.matched, t.skipped, t.failed
        );
    }
    let failures = report.failures();
    for f in &failures {
        let params: Vec<String> = f
            .params
            .used(f.id)
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let show = |v: &Option<Rational>| v.as_ref().map_or("-".to_string(), ToString::to_string);
        let _ = write!(
            out,
            "FAIL {} {}: lhs={} rhs={}",
            f.id,
            params.join(" "),
            show(&f.lhs),
            show(&f.rhs)
        );
        if let Some(e) = &f.error {
            let _ = write!(out, " ({e})");
        }
        out.push('\n');
    }
    let s = report.summary();
    if failures.is_empty() {
        let _ = writeln!(out, "PASS ({} checks, {} skipped)", s.checks, s.skipped);
    } else {
        let _ = writeln!(out, "FAIL ({} failures of {} checks)", s.failed, s.checks);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c18_grid() -> GridSpec {
        GridSpec {
            n: IntRange::new(0, 2),
            s: IntRange::new(0, 1),
            ..GridSpec::point(&[IdentityId::C18])
        }
    }

    #[test]
    fn range_parsing() {
        assert_eq!("0..12".parse::<IntRange>().unwrap(), IntRange::new(0, 12));
        assert_eq!("-4..4".parse::<IntRange>().unwrap(), IntRange::new(-4, 4));
        assert_eq!("3".parse::<IntRange>().unwrap(), IntRange::single(3));
        assert!("4..0".parse::<IntRange>().is_err());
        assert!("a..b".parse::<IntRange>().is_err());
    }

    #[test]
    fn c18_grid_all_match() {
        let report = run_grid(&c18_grid(), 1).unwrap();
        assert_eq!(report.records.len(), 6);
        assert!(report.records.iter().all(|r| r.matched == Some(true)));
        let hit = report
            .records
            .iter()
            .find(|r| r.params.n == 2 && r.params.s == 1)
            .unwrap();
        assert_eq!(hit.lhs.as_ref().unwrap().to_string(), "11");
    }

    #[test]
    fn q13_p_zero_is_skipped() {
        let spec = GridSpec {
            p: IntRange::single(0),
            n: IntRange::new(0, 3),
            ..GridSpec::point(&[IdentityId::Q13])
        };
        let report = run_grid(&spec, 2).unwrap();
        assert_eq!(report.records.len(), 4);
        for r in &report.records {
            assert_eq!(r.skipped.as_deref(), Some("p must be nonzero"));
            assert_eq!(r.matched, None);
        }
        assert!(report.passed());
    }

    #[test]
    fn out_of_contract_points_are_evaluated_on_request() {
        let spec = GridSpec {
            p: IntRange::single(0),
            n: IntRange::new(0, 4),
            j: IntRange::new(-2, 2),
            skip_inapplicable: false,
            ..GridSpec::point(&[IdentityId::Q13, IdentityId::Q14])
        };
        let report = run_grid(&spec, 1).unwrap();
        assert!(report.records.iter().all(|r| r.note.is_some() && r.matched.is_some()));
        assert!(report.passed());
    }

    #[test]
    fn empty_ids_empty_report() {
        let report = run_grid(&GridSpec::point(&[]), 4).unwrap();
        assert!(report.records.is_empty());
        assert_eq!(summarize(&report).trim(), "PASS (0 checks, 0 skipped)");
    }

    #[test]
    fn summaries() {
        let report = run_grid(&c18_grid(), 1).unwrap();
        assert!(summarize(&report).contains("PASS"));

        let mut bad = report.records.clone();
        bad[3].matched = Some(false);
        bad[3].rhs = Some(Rational::from_integer(99.into()));
        let bad = Report::from_records(bad);
        let text = summarize(&bad);
        assert!(text.contains("FAIL"));
        let p = bad.records[3].params;
        assert!(text.contains(&format!("n={} s={}", p.n, p.s)));
        assert_eq!(bad.failures().len(), 1);
    }

    #[test]
    fn cardinality_matches_records() {
        let spec = GridSpec {
            n: IntRange::new(0, 2),
            j: IntRange::new(-1, 1),
            m: IntRange::new(0, 1),
            odd_m: IntRange::new(0, 2),
            ..GridSpec::point(&[IdentityId::C18, IdentityId::EvenF, IdentityId::OddL])
        };
        let report = run_grid(&spec, 3).unwrap();
        assert_eq!(report.records.len(), spec.cardinality());
        // C18: n only; EVEN_F: n*j*m; ODD_L: n*j*odd_m.
        assert_eq!(spec.cardinality(), 3 + 3 * 3 * 2 + 3 * 3 * 3);
    }

    #[test]
    fn invalid_specs_rejected() {
        let spec = GridSpec {
            n: IntRange::new(-1, 2),
            ..GridSpec::point(&[IdentityId::C18])
        };
        assert!(run_grid(&spec, 1).is_err());
        let spec = GridSpec {
            s: IntRange::new(2, 1),
            ..GridSpec::point(&[IdentityId::C18])
        };
        assert!(run_grid(&spec, 1).is_err());
    }

    #[test]
    fn json_lines_round_trip() {
        let spec = GridSpec {
            n: IntRange::new(0, 2),
            p: IntRange::new(0, 1),
            ..GridSpec::point(&[IdentityId::C22, IdentityId::Q13])
        };
        let report = run_grid(&spec, 1).unwrap();
        for rec in &report.records {
            let line = rec.to_json_line();
            let back = VerificationRecord::from_json_line(&line).unwrap();
            assert_eq!(&back, rec);
            assert_eq!(back.to_json_line(), line);
        }
        assert_eq!(
            report.records[0].to_json_line(),
            r#"{"id":"Q13","params":{"n":0,"j":1,"r":1,"s":0,"p":0},"skipped":"p must be nonzero"}"#
        );
        let c22 = report.records.iter().find(|r| r.id == IdentityId::C22).unwrap();
        assert_eq!(
            c22.to_json_line(),
            r#"{"id":"C22","params":{"n":0,"s":0},"lhs":"0","rhs":"0","match":true}"#
        );
    }
}
