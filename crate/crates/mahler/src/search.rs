//! Exhaustive minimum-measure search over bounded monic families, with
//! deterministic sharding and resumable checkpoints.
//!
//! The family for degree n and bound b: monic polynomials with coefficients
//! in [-b, b] and nonzero constant term (an x factor never changes the
//! measure), optionally restricted to self-reciprocal ones. Enumeration is
//! lexicographic on the ascending coefficient tuple with values compared in
//! descending order (b first, -b last), constant term most significant;
//! ties on the measure keep the earlier tuple, so results are independent
//! of the shard count.

use crate::cyclotomic::is_cyclotomic_product;
use crate::error::{Error, Result};
use crate::measure::{mahler_measure, MeasureResult};
use crate::poly::IntPolynomial;
use num_traits::ToPrimitive;
use std::io::Write;
use std::path::Path;
use std::time::{Duration, Instant};

/// Non-reciprocal polynomials have measure at least the plastic number
/// (~1.324718); once the running best drops below this threshold they can
/// be skipped. The acceptance suite re-verifies the theorem exhaustively on
/// every family where the prune may fire below degree 9.
pub const PLASTIC_PRUNE_THRESHOLD: f64 = 1.32471;

/// Measures closer than this are treated as a tie and broken by tuple order.
const TIE_EPS: f64 = 1e-11;
/// Candidates within this window of the running best are re-measured at the
/// tight tolerance before a record decision.
const NEAR_BEST_WINDOW: f64 = 1e-6;
const TIGHT_TOL: f64 = 1e-12;

const CHECKPOINT_VERSION: &str = "lehmer-search-v1";

/// Parameters of one (possibly sharded) search.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchSpec {
    pub degree: usize,
    pub coeff_bound: i64,
    pub reciprocal_only: bool,
    pub tol: f64,
    pub shard_index: usize,
    pub shard_count: usize,
}

impl SearchSpec {
    pub fn new(degree: usize, coeff_bound: i64, reciprocal_only: bool, tol: f64) -> Result<Self> {
        let spec = SearchSpec {
            degree,
            coeff_bound,
            reciprocal_only,
            tol,
            shard_index: 0,
            shard_count: 1,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_shard(mut self, index: usize, count: usize) -> Result<Self> {
        self.shard_index = index;
        self.shard_count = count;
        self.validate()?;
        Ok(self)
    }

    fn validate(&self) -> Result<()> {
        if self.degree < 1 {
            return Err(Error::Domain("search degree must be at least 1".into()));
        }
        if self.coeff_bound < 1 {
            return Err(Error::Domain("coefficient bound must be at least 1".into()));
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::Domain("tolerance must be positive".into()));
        }
        if self.shard_count == 0 || self.shard_index >= self.shard_count {
            return Err(Error::Domain(
                "shard index must satisfy 0 <= index < count".into(),
            ));
        }
        Ok(())
    }

    /// Family size by direct combinatorics (used to cross-check the
    /// enumerator).
    pub fn family_size(&self) -> u64 {
        let w = 2 * self.coeff_bound as u64 + 1;
        let n = self.degree as u32;
        if !self.reciprocal_only {
            return (w - 1) * w.pow(n - 1);
        }
        if self.degree.is_multiple_of(2) {
            let s = n / 2;
            w.pow(s) + w.pow(s - 1)
        } else {
            let s = (n - 1) / 2;
            2 * w.pow(s)
        }
    }
}

/// Running state of a search; resumable via checkpoints.
#[derive(Clone, Debug)]
pub struct SearchState {
    pub spec: SearchSpec,
    /// Last completed coefficient tuple (ascending, leading 1 included).
    pub cursor: Option<Vec<i64>>,
    pub best: Option<BestEntry>,
    pub scanned: u64,
    pub skipped_cyclotomic: u64,
    pub skipped_pruned: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct BestEntry {
    pub polynomial: IntPolynomial,
    pub tuple: Vec<i64>,
    pub measure: MeasureResult,
}

impl SearchState {
    pub fn fresh(spec: SearchSpec) -> Self {
        SearchState {
            spec,
            cursor: None,
            best: None,
            scanned: 0,
            skipped_cyclotomic: 0,
            skipped_pruned: 0,
            elapsed: Duration::ZERO,
        }
    }
}

/// Completed-search summary.
#[derive(Clone, Debug)]
pub struct SearchRecord {
    pub best_polynomial: IntPolynomial,
    pub best_measure: MeasureResult,
    /// Polynomials actually measured.
    pub scanned: u64,
    pub skipped_cyclotomic: u64,
    pub skipped_pruned: u64,
    pub elapsed: Duration,
}

/// True when `a` precedes `b` in enumeration order (descending values,
/// constant term most significant).
fn tuple_precedes(a: &[i64], b: &[i64]) -> bool {
    for (x, y) in a.iter().zip(b.iter()) {
        if x != y {
            return x > y;
        }
    }
    false
}

/// Yields every polynomial of this shard's slice of the family, in order.
pub fn enumerate(spec: &SearchSpec) -> impl Iterator<Item = IntPolynomial> + '_ {
    Enumerator::new(spec.clone()).filter_map(move |(ordinal, tuple)| {
        if ordinal % spec.shard_count as u64 == spec.shard_index as u64 {
            Some(poly_from_tuple(&tuple))
        } else {
            None
        }
    })
}

fn poly_from_tuple(tuple: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(tuple)
}

/// Odometer over free coefficient positions, each running through a fixed
/// descending value list.
struct Odometer {
    values: Vec<Vec<i64>>,
    idx: Vec<usize>,
    started: bool,
    done: bool,
}

impl Odometer {
    fn new(values: Vec<Vec<i64>>) -> Self {
        let done = values.iter().any(|v| v.is_empty());
        let idx = vec![0; values.len()];
        Odometer {
            values,
            idx,
            started: false,
            done,
        }
    }

    fn next_tuple(&mut self) -> Option<Vec<i64>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
        } else {
            let mut pos = self.values.len();
            loop {
                if pos == 0 {
                    self.done = true;
                    return None;
                }
                pos -= 1;
                if self.idx[pos] + 1 < self.values[pos].len() {
                    self.idx[pos] += 1;
                    for i in pos + 1..self.values.len() {
                        self.idx[i] = 0;
                    }
                    break;
                }
            }
        }
        Some(
            self.idx
                .iter()
                .enumerate()
                .map(|(i, &j)| self.values[i][j])
                .collect(),
        )
    }
}

/// Enumerates the full family (all shards) with a running ordinal.
struct Enumerator {
    spec: SearchSpec,
    phase: usize,
    odo: Odometer,
    ordinal: u64,
}

impl Enumerator {
    fn new(spec: SearchSpec) -> Self {
        let odo = Odometer::new(Self::phase_values(&spec, 0));
        Enumerator {
            spec,
            phase: 0,
            odo,
            ordinal: 0,
        }
    }

    fn descending(bound: i64, skip_zero: bool) -> Vec<i64> {
        let mut v = Vec::with_capacity(2 * bound as usize + 1);
        let mut c = bound;
        while c >= -bound {
            if !(skip_zero && c == 0) {
                v.push(c);
            }
            c -= 1;
        }
        v
    }

    /// Free-position value lists per phase. Phase 0 is the general family,
    /// or the palindromic branch (P* = +P) under reciprocal_only; phase 1 is
    /// the anti-reciprocal branch (P* = -P).
    fn phase_values(spec: &SearchSpec, phase: usize) -> Vec<Vec<i64>> {
        let n = spec.degree;
        let b = spec.coeff_bound;
        if !spec.reciprocal_only {
            let mut v = vec![Self::descending(b, true)];
            v.extend(std::iter::repeat_n(Self::descending(b, false), n - 1));
            return v;
        }
        let free = if n.is_multiple_of(2) {
            let s = n / 2;
            if phase == 0 {
                s
            } else {
                s - 1
            }
        } else {
            (n - 1) / 2
        };
        std::iter::repeat_n(Self::descending(b, false), free).collect()
    }

    fn assemble(&self, free: &[i64]) -> Vec<i64> {
        let n = self.spec.degree;
        if !self.spec.reciprocal_only {
            let mut t = free.to_vec();
            t.push(1);
            return t;
        }
        let mut t = vec![0i64; n + 1];
        t[n] = 1;
        if self.phase == 0 {
            t[0] = 1;
            for (j, &v) in free.iter().enumerate() {
                t[j + 1] = v;
                t[n - (j + 1)] = v;
            }
        } else {
            t[0] = -1;
            for (j, &v) in free.iter().enumerate() {
                t[j + 1] = v;
                t[n - (j + 1)] = -v;
            }
            // even degree: the middle coefficient of an anti-reciprocal
            // polynomial is forced to 0, which t starts as
        }
        t
    }
}

impl Iterator for Enumerator {
    type Item = (u64, Vec<i64>);

    fn next(&mut self) -> Option<(u64, Vec<i64>)> {
        loop {
            if let Some(free) = self.odo.next_tuple() {
                let tuple = self.assemble(&free);
                let ordinal = self.ordinal;
                self.ordinal += 1;
                return Some((ordinal, tuple));
            }
            if self.spec.reciprocal_only && self.phase == 0 {
                self.phase = 1;
                self.odo = Odometer::new(Self::phase_values(&self.spec, 1));
            } else {
                return None;
            }
        }
    }
}

/// Advances the state over at most `limit` candidates of this shard
/// (unbounded when None). Returns true when the shard is exhausted.
pub fn run_search(state: &mut SearchState, limit: Option<u64>) -> Result<bool> {
    run_search_inner(state, limit, true)
}

fn run_search_inner(state: &mut SearchState, limit: Option<u64>, prune: bool) -> Result<bool> {
    let started = Instant::now();
    let spec = state.spec.clone();
    let mut iter = Enumerator::new(spec.clone());
    if let Some(cursor) = &state.cursor {
        let mut found = false;
        for (_, tuple) in iter.by_ref() {
            if &tuple == cursor {
                found = true;
                break;
            }
        }
        if !found {
            return Err(Error::Checkpoint(
                "cursor does not belong to the search family".into(),
            ));
        }
    }
    let mut processed = 0u64;
    for (ordinal, tuple) in iter {
        if ordinal % spec.shard_count as u64 != spec.shard_index as u64 {
            continue;
        }
        if let Some(limit) = limit {
            if processed >= limit {
                state.elapsed += started.elapsed();
                return Ok(false);
            }
        }
        let p = poly_from_tuple(&tuple);
        if is_cyclotomic_product(&p)? {
            state.skipped_cyclotomic += 1;
        } else if prune
            && state
                .best
                .as_ref()
                .is_some_and(|b| b.measure.value < PLASTIC_PRUNE_THRESHOLD)
            && !p.is_self_reciprocal()
        {
            state.skipped_pruned += 1;
        } else {
            let meas = mahler_measure(&p, spec.tol)?;
            state.scanned += 1;
            let near_best = match &state.best {
                None => true,
                Some(b) => meas.value < b.measure.value + NEAR_BEST_WINDOW,
            };
            if near_best {
                let tight = mahler_measure(&p, TIGHT_TOL.min(spec.tol))?;
                let replace = match &state.best {
                    None => true,
                    Some(b) => {
                        tight.value < b.measure.value - TIE_EPS
                            || ((tight.value - b.measure.value).abs() <= TIE_EPS
                                && tuple_precedes(&tuple, &b.tuple))
                    }
                };
                if replace {
                    state.best = Some(BestEntry {
                        polynomial: p,
                        tuple: tuple.clone(),
                        measure: tight,
                    });
                }
            }
        }
        state.cursor = Some(tuple);
        processed += 1;
    }
    state.elapsed += started.elapsed();
    Ok(true)
}

/// Runs one shard of the search to completion.
pub fn search_min_measure(spec: &SearchSpec) -> Result<SearchRecord> {
    let mut state = SearchState::fresh(spec.clone());
    let complete = run_search(&mut state, None)?;
    debug_assert!(complete);
    finalize(state)
}

/// Converts a finished state into a record.
pub fn finalize(state: SearchState) -> Result<SearchRecord> {
    let best = state
        .best
        .ok_or_else(|| Error::Domain("the family contains no non-cyclotomic polynomial".into()))?;
    Ok(SearchRecord {
        best_polynomial: best.polynomial,
        best_measure: best.measure,
        scanned: state.scanned,
        skipped_cyclotomic: state.skipped_cyclotomic,
        skipped_pruned: state.skipped_pruned,
        elapsed: state.elapsed,
    })
}

/// Merges per-shard records: min on the measure (ties to the earlier
/// tuple), sum on the counts. Associative and commutative.
pub fn merge_records(a: SearchRecord, b: SearchRecord) -> SearchRecord {
    let a_tuple: Vec<i64> = a
        .best_polynomial
        .coeffs()
        .iter()
        .map(|c| c.to_i64().expect("search coefficients fit i64"))
        .collect();
    let b_tuple: Vec<i64> = b
        .best_polynomial
        .coeffs()
        .iter()
        .map(|c| c.to_i64().expect("search coefficients fit i64"))
        .collect();
    let b_wins = b.best_measure.value < a.best_measure.value - TIE_EPS
        || ((b.best_measure.value - a.best_measure.value).abs() <= TIE_EPS
            && tuple_precedes(&b_tuple, &a_tuple));
    let (best_polynomial, best_measure) = if b_wins {
        (b.best_polynomial, b.best_measure)
    } else {
        (a.best_polynomial, a.best_measure)
    };
    SearchRecord {
        best_polynomial,
        best_measure,
        scanned: a.scanned + b.scanned,
        skipped_cyclotomic: a.skipped_cyclotomic + b.skipped_cyclotomic,
        skipped_pruned: a.skipped_pruned + b.skipped_pruned,
        elapsed: a.elapsed.max(b.elapsed),
    }
}

/// Fans the family out over `shard_count` concurrent shards and merges.
pub fn search_sharded(spec: &SearchSpec, shard_count: usize) -> Result<SearchRecord> {
    if shard_count <= 1 {
        return search_min_measure(&spec.clone().with_shard(0, 1)?);
    }
    let shards: Vec<SearchSpec> = (0..shard_count)
        .map(|i| spec.clone().with_shard(i, shard_count))
        .collect::<Result<_>>()?;
    let results: Vec<Result<SearchRecord>> = std::thread::scope(|scope| {
        let handles: Vec<_> = shards
            .iter()
            .map(|s| scope.spawn(move || search_min_measure(s)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search thread panicked"))
            .collect()
    });
    let mut merged: Option<SearchRecord> = None;
    for r in results {
        let rec = r?;
        merged = Some(match merged {
            None => rec,
            Some(acc) => merge_records(acc, rec),
        });
    }
    merged.ok_or_else(|| Error::Domain("no shards".into()))
}

fn fmt_real(x: f64) -> String {
    format!("{x:.16e}")
}

/// Serializes a search state in the line-oriented checkpoint format.
pub fn checkpoint_to_string(state: &SearchState) -> String {
    let spec = &state.spec;
    let mut out = String::new();
    out.push_str(CHECKPOINT_VERSION);
    out.push('\n');
    out.push_str(&format!(
        "spec degree={} coeff_bound={} reciprocal_only={} tol={} shard_index={} shard_count={}\n",
        spec.degree,
        spec.coeff_bound,
        spec.reciprocal_only,
        fmt_real(spec.tol),
        spec.shard_index,
        spec.shard_count
    ));
    match &state.cursor {
        Some(tuple) => out.push_str(&format!("cursor {}\n", wire_of(tuple))),
        None => out.push_str("cursor -\n"),
    }
    match &state.best {
        Some(b) => out.push_str(&format!(
            "best {} value={} radius={}\n",
            b.polynomial.to_wire(),
            fmt_real(b.measure.value),
            fmt_real(b.measure.error_radius)
        )),
        None => out.push_str("best -\n"),
    }
    out.push_str(&format!(
        "counts scanned={} skipped_cyclotomic={} skipped_pruned={}\n",
        state.scanned, state.skipped_cyclotomic, state.skipped_pruned
    ));
    out
}

fn wire_of(tuple: &[i64]) -> String {
    tuple
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Writes a checkpoint atomically (temp file + rename): a reader never sees
/// partial state.
pub fn checkpoint_save(state: &SearchState, path: &Path) -> Result<()> {
    let tmp = path.with_extension("tmp");
    {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(checkpoint_to_string(state).as_bytes())?;
        f.sync_all()?;
    }
    std::fs::rename(&tmp, path)?;
    Ok(())
}

fn parse_kv<'a>(token: &'a str, key: &str) -> Result<&'a str> {
    token
        .strip_prefix(key)
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| Error::Checkpoint(format!("expected {key}=..., found {token:?}")))
}

fn bad(line: &str) -> Error {
    Error::Checkpoint(format!("malformed checkpoint line: {line:?}"))
}

/// Parses the checkpoint format back into a state.
pub fn checkpoint_from_str(text: &str) -> Result<SearchState> {
    let mut lines = text.lines();
    let version = lines
        .next()
        .ok_or_else(|| Error::Checkpoint("empty checkpoint file".into()))?;
    if version != CHECKPOINT_VERSION {
        return Err(Error::Checkpoint(format!(
            "unsupported checkpoint version {version:?} (expected {CHECKPOINT_VERSION:?})"
        )));
    }

    let spec_line = lines.next().ok_or_else(|| bad("<missing spec>"))?;
    let toks: Vec<&str> = spec_line.split_whitespace().collect();
    if toks.len() != 7 || toks[0] != "spec" {
        return Err(bad(spec_line));
    }
    let degree: usize = parse_kv(toks[1], "degree")?
        .parse()
        .map_err(|_| bad(spec_line))?;
    let coeff_bound: i64 = parse_kv(toks[2], "coeff_bound")?
        .parse()
        .map_err(|_| bad(spec_line))?;
    let reciprocal_only: bool = parse_kv(toks[3], "reciprocal_only")?
        .parse()
        .map_err(|_| bad(spec_line))?;
    let tol: f64 = parse_kv(toks[4], "tol")?
        .parse()
        .map_err(|_| bad(spec_line))?;
    let shard_index: usize = parse_kv(toks[5], "shard_index")?
        .parse()
        .map_err(|_| bad(spec_line))?;
    let shard_count: usize = parse_kv(toks[6], "shard_count")?
        .parse()
        .map_err(|_| bad(spec_line))?;
    let spec = SearchSpec::new(degree, coeff_bound, reciprocal_only, tol)
        .and_then(|s| s.with_shard(shard_index, shard_count))
        .map_err(|e| Error::Checkpoint(format!("invalid spec in checkpoint: {e}")))?;

    let cursor_line = lines.next().ok_or_else(|| bad("<missing cursor>"))?;
    let cursor = match cursor_line.strip_prefix("cursor ") {
        Some("-") => None,
        Some(wire) => Some(parse_tuple(wire, spec.degree)?),
        None => return Err(bad(cursor_line)),
    };

    let best_line = lines.next().ok_or_else(|| bad("<missing best>"))?;
    let best = match best_line.strip_prefix("best ") {
        Some("-") => None,
        Some(rest) => {
            let toks: Vec<&str> = rest.split_whitespace().collect();
            if toks.len() != 3 {
                return Err(bad(best_line));
            }
            let tuple = parse_tuple(toks[0], spec.degree)?;
            let value: f64 = parse_kv(toks[1], "value")?
                .parse()
                .map_err(|_| bad(best_line))?;
            let radius: f64 = parse_kv(toks[2], "radius")?
                .parse()
                .map_err(|_| bad(best_line))?;
            Some(BestEntry {
                polynomial: poly_from_tuple(&tuple),
                tuple,
                measure: MeasureResult {
                    value,
                    error_radius: radius,
                    method: crate::measure::MeasureMethod::RootProduct,
                    root_moduli: None,
                },
            })
        }
        None => return Err(bad(best_line)),
    };

    let counts_line = lines.next().ok_or_else(|| bad("<missing counts>"))?;
    let toks: Vec<&str> = counts_line.split_whitespace().collect();
    if toks.len() != 4 || toks[0] != "counts" {
        return Err(bad(counts_line));
    }
    let scanned: u64 = parse_kv(toks[1], "scanned")?
        .parse()
        .map_err(|_| bad(counts_line))?;
    let skipped_cyclotomic: u64 = parse_kv(toks[2], "skipped_cyclotomic")?
        .parse()
        .map_err(|_| bad(counts_line))?;
    let skipped_pruned: u64 = parse_kv(toks[3], "skipped_pruned")?
        .parse()
        .map_err(|_| bad(counts_line))?;

    Ok(SearchState {
        spec,
        cursor,
        best,
        scanned,
        skipped_cyclotomic,
        skipped_pruned,
        elapsed: Duration::ZERO,
    })
}

fn parse_tuple(wire: &str, degree: usize) -> Result<Vec<i64>> {
    let tuple: Vec<i64> = wire
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Checkpoint(format!("malformed coefficient tuple {wire:?}")))?;
    if tuple.len() != degree + 1 || tuple.last() != Some(&1) {
        return Err(Error::Checkpoint(format!(
            "coefficient tuple {wire:?} does not describe a monic degree-{degree} polynomial"
        )));
    }
    Ok(tuple)
}

/// Loads a checkpoint file.
pub fn checkpoint_resume(path: &Path) -> Result<SearchState> {
    let text = std::fs::read_to_string(path)?;
    checkpoint_from_str(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil;

    fn spec(degree: usize, bound: i64, reciprocal: bool) -> SearchSpec {
        SearchSpec::new(degree, bound, reciprocal, 1e-9).unwrap()
    }

    #[test]
    fn enumeration_counts_match_combinatorics() {
        for (d, b, r) in [
            (2usize, 1i64, false),
            (3, 1, false),
            (2, 2, false),
            (4, 1, true),
            (5, 1, true),
            (10, 1, true),
            (6, 2, true),
            (1, 1, true),
            (1, 1, false),
        ] {
            let s = spec(d, b, r);
            let count = enumerate(&s).count() as u64;
            assert_eq!(count, s.family_size(), "degree {d} bound {b} recip {r}");
        }
        // spot checks: degree 2 all = 6; degree 10 reciprocal = 3^5 + 3^4
        assert_eq!(spec(2, 1, false).family_size(), 6);
        assert_eq!(spec(10, 1, true).family_size(), 324);
        assert_eq!(spec(4, 1, true).family_size(), 12);
    }

    #[test]
    fn enumeration_is_descending_lex_and_valid() {
        let s = spec(4, 1, true);
        let polys: Vec<IntPolynomial> = enumerate(&s).collect();
        let tuples: Vec<Vec<i64>> = polys
            .iter()
            .map(|p| p.coeffs().iter().map(|c| c.to_i64().unwrap()).collect())
            .collect();
        for w in tuples.windows(2) {
            assert!(tuple_precedes(&w[0], &w[1]));
        }
        for (p, t) in polys.iter().zip(&tuples) {
            assert!(p.is_monic());
            assert!(t[0] != 0);
            assert!(p.is_self_reciprocal(), "{p}");
        }
    }

    #[test]
    fn shards_partition_the_family() {
        let s = spec(4, 1, true);
        let all: Vec<String> = enumerate(&s).map(|p| p.to_wire()).collect();
        let mut merged = Vec::new();
        for i in 0..4 {
            let shard = s.clone().with_shard(i, 4).unwrap();
            merged.extend(enumerate(&shard).map(|p| p.to_wire()));
        }
        merged.sort();
        let mut sorted_all = all.clone();
        sorted_all.sort();
        assert_eq!(merged, sorted_all);
        assert_eq!(all.len(), 12);
    }

    #[test]
    fn degree_two_search_finds_golden_ratio() {
        let rec = search_min_measure(&spec(2, 1, false)).unwrap();
        assert!((rec.best_measure.value - 1.618_033_988_749_895).abs() < 1e-9);
        // first of the two tied golden polynomials in descending-lex order
        assert_eq!(rec.best_polynomial.to_wire(), "-1,1,1");
        assert_eq!(
            rec.scanned + rec.skipped_cyclotomic + rec.skipped_pruned,
            spec(2, 1, false).family_size()
        );
    }

    #[test]
    fn degree_four_reciprocal_search() {
        let rec = search_min_measure(&spec(4, 1, true)).unwrap();
        assert!((rec.best_measure.value - 1.722_083_805_739_043).abs() < 1e-9);
        // x^4+x^3-x^2+x+1, the mirror of x^4-x^3-x^2-x+1, comes first in
        // descending-lex order; both share the measure exactly
        assert_eq!(rec.best_polynomial.to_wire(), "1,1,-1,1,1");
        let mirror_measure = mahler_measure(&testutil::salem4(), 1e-12).unwrap();
        assert!((rec.best_measure.value - mirror_measure.value).abs() < 1e-10);
    }

    #[test]
    fn degree_ten_reciprocal_reproduces_lehmer() {
        let rec = search_min_measure(&spec(10, 1, true)).unwrap();
        assert_eq!(rec.best_polynomial, testutil::lehmer());
        assert!((rec.best_measure.value - 1.176_280_818_259_917_5).abs() < 1e-10);
        assert_eq!(
            rec.scanned + rec.skipped_cyclotomic + rec.skipped_pruned,
            324
        );
    }

    #[test]
    fn shard_counts_agree() {
        let s = spec(10, 1, true);
        let one = search_sharded(&s, 1).unwrap();
        let two = search_sharded(&s, 2).unwrap();
        let eight = search_sharded(&s, 8).unwrap();
        for other in [&two, &eight] {
            assert_eq!(one.best_polynomial, other.best_polynomial);
            assert_eq!(one.best_measure.value, other.best_measure.value);
            assert_eq!(one.scanned, other.scanned);
            assert_eq!(one.skipped_cyclotomic, other.skipped_cyclotomic);
            assert_eq!(one.skipped_pruned, other.skipped_pruned);
        }
    }

    #[test]
    fn monotone_running_best() {
        let s = spec(6, 1, true);
        let mut state = SearchState::fresh(s);
        let mut last = f64::INFINITY;
        loop {
            let done = run_search(&mut state, Some(5)).unwrap();
            if let Some(b) = &state.best {
                assert!(b.measure.value <= last + 1e-15);
                last = b.measure.value;
            }
            if done {
                break;
            }
        }
    }

    #[test]
    fn completeness_no_prune_needed_at_degree_six() {
        // at degree <= 6 the best stays above the plastic threshold, so the
        // prune never fires and the pruned run equals the naive one
        let s = spec(6, 1, false);
        let mut pruned = SearchState::fresh(s.clone());
        run_search_inner(&mut pruned, None, true).unwrap();
        let mut naive = SearchState::fresh(s.clone());
        run_search_inner(&mut naive, None, false).unwrap();
        assert_eq!(pruned.skipped_pruned, 0);
        assert_eq!(pruned.scanned, naive.scanned);
        let (a, b) = (pruned.best.unwrap(), naive.best.unwrap());
        assert_eq!(a.polynomial, b.polynomial);
        assert_eq!(a.measure.value, b.measure.value);
        assert_eq!(pruned.scanned + pruned.skipped_cyclotomic, s.family_size());
    }

    #[test]
    fn prune_fires_below_plastic_threshold() {
        // degree 8 without the reciprocal restriction: once the best drops
        // to ~1.28064 the non-reciprocal candidates are skipped
        let rec = search_min_measure(&spec(8, 1, false)).unwrap();
        assert!(rec.skipped_pruned > 0);
        assert!((rec.best_measure.value - 1.280_638_156_267_757_3).abs() < 1e-9);
        assert_eq!(
            rec.scanned + rec.skipped_cyclotomic + rec.skipped_pruned,
            spec(8, 1, false).family_size()
        );
        // the pruned run still finds the same record as the naive one
        let mut naive = SearchState::fresh(spec(8, 1, false));
        run_search_inner(&mut naive, None, false).unwrap();
        assert_eq!(naive.best.unwrap().polynomial, rec.best_polynomial);
    }

    #[test]
    fn checkpoint_roundtrip() {
        let s = spec(10, 1, true);
        let mut state = SearchState::fresh(s);
        run_search(&mut state, Some(100)).unwrap();
        let text = checkpoint_to_string(&state);
        let restored = checkpoint_from_str(&text).unwrap();
        assert_eq!(restored.spec, state.spec);
        assert_eq!(restored.cursor, state.cursor);
        assert_eq!(restored.scanned, state.scanned);
        assert_eq!(restored.skipped_cyclotomic, state.skipped_cyclotomic);
        let (a, b) = (restored.best.unwrap(), state.best.unwrap());
        assert_eq!(a.polynomial, b.polynomial);
        assert_eq!(a.measure.value, b.measure.value);
        assert_eq!(a.measure.error_radius, b.measure.error_radius);
    }

    #[test]
    fn empty_progress_checkpoint_roundtrips_to_fresh() {
        let s = spec(4, 1, true);
        let state = SearchState::fresh(s.clone());
        let restored = checkpoint_from_str(&checkpoint_to_string(&state)).unwrap();
        assert!(restored.cursor.is_none());
        assert!(restored.best.is_none());
        let mut resumed = restored;
        run_search(&mut resumed, None).unwrap();
        let direct = search_min_measure(&s).unwrap();
        assert_eq!(resumed.best.unwrap().polynomial, direct.best_polynomial);
    }

    #[test]
    fn interrupted_resume_matches_uninterrupted() {
        let s = spec(10, 1, true);
        let direct = search_min_measure(&s).unwrap();

        let mut state = SearchState::fresh(s);
        let done = run_search(&mut state, Some(150)).unwrap();
        assert!(!done);
        let text = checkpoint_to_string(&state);
        let mut resumed = checkpoint_from_str(&text).unwrap();
        let done = run_search(&mut resumed, None).unwrap();
        assert!(done);
        let rec = finalize(resumed).unwrap();
        assert_eq!(rec.best_polynomial, direct.best_polynomial);
        assert_eq!(rec.best_measure.value, direct.best_measure.value);
        assert_eq!(rec.scanned, direct.scanned);
        assert_eq!(rec.skipped_cyclotomic, direct.skipped_cyclotomic);
        assert_eq!(rec.skipped_pruned, direct.skipped_pruned);
    }

    #[test]
    fn checkpoint_rejects_corruption() {
        assert!(checkpoint_from_str("").is_err());
        assert!(checkpoint_from_str("other-version-v9\n").is_err());
        let s = spec(4, 1, true);
        let good = checkpoint_to_string(&SearchState::fresh(s));
        let truncated: String = good.lines().take(2).collect::<Vec<_>>().join("\n");
        assert!(checkpoint_from_str(&truncated).is_err());
        let mangled = good.replace("cursor -", "cursor 5,bad");
        assert!(checkpoint_from_str(&mangled).is_err());
    }

    #[test]
    fn degree_one_family_is_all_cyclotomic() {
        let err = search_min_measure(&spec(1, 1, true)).unwrap_err();
        assert!(err.to_string().contains("no non-cyclotomic"));
    }
}
