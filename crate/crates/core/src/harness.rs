//! Exhaustive checks of order-theoretic claims over small instances.
//!
//! A suite enumerates instances for one claim, checks them in parallel and
//! returns one [`VerdictRecord`] per instance, in generation order. Each
//! record carries its instance in full, so [`replay`] can check it again.

use std::sync::Arc;
use std::time::Instant;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::enumerate::{canonical_code, posets_up_to, MAX_ENUMERATION_SIZE};
use crate::error::{Error, Result};
use crate::io::PosetFile;
use crate::maxitive::{
    extend_lower_star, extend_star, from_ideal_family, ideal_family_of, lower_star_contains_base, maxitive_extensions,
    maxitive_maps, monotone_maps, ExtendedMap, MonotoneMap, RationalConeMap, DEFAULT_ALTERNATING_DEPTH,
};
use crate::mspace::{build_space, Generator, MaxMapSpace};
use crate::poset::{dm_completion, FinitePoset, OrderExtension};
use crate::residuation::{heyting_arrow, residuation_verdict};
use crate::selection::{ContinuityWitness, FilterSelection, SelectionKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    SevenElement,
    Interpolation,
    SingletonCollapse,
    Supercontinuity,
    Alternating,
    IdealRoundtrip,
    Extension,
    #[serde(rename = "residuated-forward")]
    ResiduatedForward,
    #[serde(rename = "residuated-converse")]
    ResiduatedConverse,
    HeytingArrow,
    FrameAdjunction,
    Representation,
    Corollary,
    PointwiseInf,
    #[serde(rename = "generator")]
    GeneratorLemma,
}

impl Claim {
    pub const ALL: [Claim; 15] = [
        Claim::SevenElement,
        Claim::Interpolation,
        Claim::SingletonCollapse,
        Claim::Supercontinuity,
        Claim::Alternating,
        Claim::IdealRoundtrip,
        Claim::Extension,
        Claim::ResiduatedForward,
        Claim::ResiduatedConverse,
        Claim::HeytingArrow,
        Claim::FrameAdjunction,
        Claim::Representation,
        Claim::Corollary,
        Claim::PointwiseInf,
        Claim::GeneratorLemma,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::SevenElement => "seven-element",
            Claim::Interpolation => "interpolation",
            Claim::SingletonCollapse => "singleton-collapse",
            Claim::Supercontinuity => "supercontinuity",
            Claim::Alternating => "alternating",
            Claim::IdealRoundtrip => "ideal-roundtrip",
            Claim::Extension => "extension",
            Claim::ResiduatedForward => "residuated-forward",
            Claim::ResiduatedConverse => "residuated-converse",
            Claim::HeytingArrow => "heyting-arrow",
            Claim::FrameAdjunction => "frame-adjunction",
            Claim::Representation => "representation",
            Claim::Corollary => "corollary",
            Claim::PointwiseInf => "pointwise-inf",
            Claim::GeneratorLemma => "generator",
        }
    }

    pub fn parse(id: &str) -> Result<Claim> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == id)
            .ok_or_else(|| Error::UnknownClaim(id.to_string()))
    }

    /// Size caps used when none are given.
    pub fn default_bounds(self) -> Bounds {
        let (max_size, max_target) = match self {
            Claim::SevenElement => (7, 2),
            Claim::Interpolation | Claim::SingletonCollapse | Claim::Supercontinuity => (5, 0),
            Claim::Alternating => (4, 0),
            Claim::IdealRoundtrip | Claim::ResiduatedForward | Claim::ResiduatedConverse => (4, 4),
            Claim::Extension => (4, 3),
            Claim::HeytingArrow => (5, 0),
            Claim::FrameAdjunction
            | Claim::Representation
            | Claim::Corollary
            | Claim::PointwiseInf
            | Claim::GeneratorLemma => (3, 3),
        };
        Bounds { max_size, max_target }
    }

    /// Whether the claim ranges over selections given on the command line.
    pub fn uses_selections(self) -> bool {
        matches!(self, Claim::Interpolation)
    }
}

/// Size caps: `max_size` for the source poset (or the only poset),
/// `max_target` for the target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max_size: usize,
    pub max_target: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sample {
    pub count: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub bounds: Bounds,
    pub selections: Vec<SelectionKind>,
    pub sample: Option<Sample>,
}

impl SuiteOptions {
    pub fn defaults(claim: Claim) -> Self {
        SuiteOptions {
            bounds: claim.default_bounds(),
            selections: SelectionKind::BUILT_IN.to_vec(),
            sample: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    HypothesisNotMet,
}

/// Everything needed to rebuild and recheck one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub e: PosetFile,
    /// Isomorphism-invariant code of `e`, in hex.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e_hash: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<PosetFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l_hash: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub selection: Option<SelectionKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<usize>,
}

fn hash_of(p: &FinitePoset) -> Option<String> {
    (p.len() <= 8).then(|| format!("{:016x}", canonical_code(p)))
}

impl Instance {
    pub fn new(e: &FinitePoset) -> Self {
        Instance {
            e: PosetFile::from_poset(e),
            e_hash: hash_of(e),
            l: None,
            l_hash: None,
            selection: None,
            depth: None,
        }
    }

    pub fn with_target(mut self, l: &FinitePoset) -> Self {
        self.l = Some(PosetFile::from_poset(l));
        self.l_hash = hash_of(l);
        self
    }

    pub fn with_selection(mut self, kind: SelectionKind) -> Self {
        self.selection = Some(kind);
        self
    }

    pub fn source(&self) -> Result<FinitePoset> {
        self.e.to_poset("instance.e")
    }

    pub fn target(&self) -> Result<FinitePoset> {
        match &self.l {
            Some(l) => l.to_poset("instance.l"),
            None => Err(Error::PosetMismatch),
        }
    }
}

/// The result of checking one instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Outcome {
    pub verdict: Verdict,
    /// Counterexample data; always present on failure.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    /// Facts recorded without being asserted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub observation: Option<Value>,
}

impl Outcome {
    fn pass() -> Self {
        Outcome {
            verdict: Verdict::Pass,
            witness: None,
            observation: None,
        }
    }

    fn fail(witness: Value) -> Self {
        Outcome {
            verdict: Verdict::Fail,
            witness: Some(witness),
            observation: None,
        }
    }

    fn unmet(reason: &str) -> Self {
        Outcome {
            verdict: Verdict::HypothesisNotMet,
            witness: None,
            observation: Some(json!({ "reason": reason })),
        }
    }

    fn observing(mut self, observation: Value) -> Self {
        self.observation = Some(observation);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub claim: Claim,
    pub instance: Instance,
    #[serde(flatten)]
    pub outcome: Outcome,
    /// Wall-clock time of the check; not part of the outcome.
    pub elapsed_micros: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub hypothesis_not_met: usize,
}

impl Summary {
    pub fn of(records: &[VerdictRecord]) -> Self {
        let mut s = Summary::default();
        for r in records {
            match r.outcome.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::HypothesisNotMet => s.hypothesis_not_met += 1,
            }
        }
        s
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.hypothesis_not_met
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub claim: Claim,
    pub bounds: Bounds,
    pub records: Vec<VerdictRecord>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerdictRecord> {
        self.records.iter().filter(|r| r.outcome.verdict == Verdict::Fail)
    }

    pub fn summary_line(&self) -> String {
        let s = &self.summary;
        format!(
            "{}: {} instances, {} pass, {} fail, {} hypothesis-not-met",
            self.claim.id(),
            s.total(),
            s.pass,
            s.fail,
            s.hypothesis_not_met
        )
    }
}

pub fn run_suite(claim: Claim, options: &SuiteOptions) -> Result<SuiteReport> {
    let b = options.bounds;
    for (size, what) in [(b.max_size, "max size"), (b.max_target, "max target size")] {
        if size > MAX_ENUMERATION_SIZE && claim != Claim::SevenElement {
            return Err(Error::CapExceeded {
                what,
                size,
                cap: MAX_ENUMERATION_SIZE,
            });
        }
    }
    let mut instances = instances(claim, options)?;
    if let Some(sample) = options.sample {
        let mut rng = ChaCha8Rng::seed_from_u64(sample.seed);
        let count = sample.count.min(instances.len());
        let mut picked = index::sample(&mut rng, instances.len(), count).into_vec();
        picked.sort_unstable();
        instances = picked.into_iter().map(|i| instances[i].clone()).collect();
    }
    let records: Vec<VerdictRecord> = instances
        .into_par_iter()
        .map(|instance| {
            let start = Instant::now();
            let outcome = check(claim, &instance);
            VerdictRecord {
                claim,
                instance,
                outcome,
                elapsed_micros: start.elapsed().as_micros() as u64,
            }
        })
        .collect();
    Ok(SuiteReport {
        claim,
        bounds: b,
        summary: Summary::of(&records),
        records,
    })
}

/// Checks the record's instance again.
pub fn replay(record: &VerdictRecord) -> Outcome {
    check(record.claim, &record.instance)
}

/// Confirms that a failing record fails again with the same witness.
pub fn confirm_witness(record: &VerdictRecord) -> Result<()> {
    let again = replay(record);
    if record.outcome.verdict != Verdict::Fail
        || again.verdict != Verdict::Fail
        || again.witness != record.outcome.witness
    {
        return Err(Error::WitnessMismatch(record.claim.id().to_string()));
    }
    Ok(())
}

fn instances(claim: Claim, options: &SuiteOptions) -> Result<Vec<Instance>> {
    let Bounds { max_size, max_target } = options.bounds;
    let pairs = |labeled_e: bool, labeled_l: bool| -> Result<Vec<Instance>> {
        let es = posets_up_to(max_size, !labeled_e)?;
        let ls = posets_up_to(max_target, !labeled_l)?;
        Ok(es
            .iter()
            .flat_map(|e| ls.iter().map(move |l| Instance::new(e).with_target(l)))
            .collect())
    };
    Ok(match claim {
        Claim::SevenElement => {
            vec![Instance::new(&FinitePoset::seven_element()).with_target(&FinitePoset::chain(2))]
        }
        Claim::Interpolation => posets_up_to(max_size, false)?
            .iter()
            .flat_map(|p| {
                options
                    .selections
                    .iter()
                    .map(move |&k| Instance::new(p).with_selection(k))
            })
            .collect(),
        Claim::SingletonCollapse => posets_up_to(max_size, false)?
            .iter()
            .map(|p| Instance::new(p).with_selection(SelectionKind::Principal))
            .collect(),
        Claim::Supercontinuity => posets_up_to(max_size, false)?
            .iter()
            .filter(|p| p.is_lattice())
            .map(|p| Instance::new(p).with_selection(SelectionKind::Upper))
            .collect(),
        Claim::Alternating => posets_up_to(max_size, true)?
            .iter()
            .map(|p| {
                let mut i = Instance::new(p);
                i.depth = Some(DEFAULT_ALTERNATING_DEPTH);
                i
            })
            .collect(),
        Claim::IdealRoundtrip => pairs(false, false)?
            .into_iter()
            .map(|i| i.with_selection(SelectionKind::Filtered))
            .collect(),
        Claim::Extension => pairs(false, false)?
            .into_iter()
            .map(|i| i.with_selection(SelectionKind::Filtered))
            .collect(),
        Claim::ResiduatedForward | Claim::ResiduatedConverse => pairs(false, false)?,
        Claim::HeytingArrow => posets_up_to(max_size, true)?
            .iter()
            .filter(|p| p.is_lattice())
            .map(Instance::new)
            .collect(),
        Claim::FrameAdjunction => {
            let mut out = pairs(false, false)?;
            for e in posets_up_to(max_size, true)? {
                for l in [FinitePoset::m3(), FinitePoset::n5()] {
                    out.push(Instance::new(&e).with_target(&l));
                }
            }
            out
        }
        Claim::Representation | Claim::Corollary | Claim::PointwiseInf | Claim::GeneratorLemma => pairs(false, false)?
            .into_iter()
            .map(|i| i.with_selection(SelectionKind::Filtered))
            .collect(),
    })
}

/// Checks one instance of a claim.
pub fn check(claim: Claim, instance: &Instance) -> Outcome {
    let result = match claim {
        Claim::SevenElement => check_seven(instance),
        Claim::Interpolation => check_interpolation(instance),
        Claim::SingletonCollapse => check_singleton(instance),
        Claim::Supercontinuity => check_supercontinuity(instance),
        Claim::Alternating => check_alternating(instance),
        Claim::IdealRoundtrip => check_ideal_roundtrip(instance),
        Claim::Extension => check_extension(instance),
        Claim::ResiduatedForward => check_residuated(instance, true),
        Claim::ResiduatedConverse => check_residuated(instance, false),
        Claim::HeytingArrow => check_heyting(instance),
        Claim::FrameAdjunction => check_frame(instance),
        Claim::Representation => check_representation(instance),
        Claim::Corollary => check_corollary(instance),
        Claim::PointwiseInf => check_pointwise_inf(instance),
        Claim::GeneratorLemma => check_generator(instance),
    };
    result.unwrap_or_else(|e| Outcome::fail(json!({ "error": e.to_string() })))
}

fn selection_of(instance: &Instance) -> SelectionKind {
    instance.selection.unwrap_or(SelectionKind::Filtered)
}

fn check_seven(instance: &Instance) -> Result<Outcome> {
    let e = Arc::new(instance.source()?);
    let l = Arc::new(instance.target()?);
    let z = e.index_of("z").ok_or(Error::UnknownLabel("z".into()))?;
    let values = (0..e.len()).map(|g| usize::from(g == z)).collect();
    let v = MonotoneMap::new(e.clone(), l, values)?;
    let pairwise = v.is_pairwise_maxitive();
    let witness = v.maxitivity_witness()?;
    let family = witness.map(|w| e.format_subset(w));
    let found = json!({ "pairwise": pairwise, "maxitive": witness.is_none(), "family": family });
    if pairwise && family.as_deref() == Some("{a,b,c}") {
        Ok(Outcome::pass().observing(found))
    } else {
        Ok(Outcome::fail(found))
    }
}

fn check_interpolation(instance: &Instance) -> Result<Outcome> {
    let p = instance.source()?;
    let sel = FilterSelection::new(&p, selection_of(instance))?;
    if !sel.is_union_complete()? {
        return Ok(Outcome::unmet("selection is not union-complete"));
    }
    let report = sel.continuity_report();
    if !report.is_continuous {
        return Ok(Outcome::unmet("not continuous"));
    }
    if report.has_interpolation {
        return Ok(Outcome::pass());
    }
    let pairs: Vec<(String, String)> = report
        .witnesses
        .iter()
        .filter_map(|w| match *w {
            ContinuityWitness::NoInterpolant { y, x } => Some((p.label(y), p.label(x))),
            _ => None,
        })
        .collect();
    Ok(Outcome::fail(json!({ "no_interpolant": pairs })))
}

fn check_singleton(instance: &Instance) -> Result<Outcome> {
    let p = instance.source()?;
    let rel = FilterSelection::new(&p, SelectionKind::Principal)?.way_above();
    for x in 0..p.len() {
        for y in 0..p.len() {
            if rel.is_way_above(y, x) != p.leq(x, y) {
                return Ok(Outcome::fail(json!({
                    "y": p.label(y),
                    "x": p.label(x),
                    "way_above": rel.is_way_above(y, x),
                })));
            }
        }
    }
    Ok(Outcome::pass())
}

fn check_supercontinuity(instance: &Instance) -> Result<Outcome> {
    let p = instance.source()?;
    let profile = p.classify();
    if !profile.is_lattice {
        return Ok(Outcome::unmet("not a lattice"));
    }
    let continuous = FilterSelection::new(&p, SelectionKind::Upper)?
        .continuity_report()
        .is_continuous;
    if continuous == profile.is_distributive {
        Ok(Outcome::pass())
    } else {
        Ok(Outcome::fail(json!({
            "continuous": continuous,
            "distributive": profile.is_distributive,
        })))
    }
}

fn check_alternating(instance: &Instance) -> Result<Outcome> {
    let e = Arc::new(instance.source()?);
    if !e.is_join_semilattice() {
        return Ok(Outcome::unmet("not a join-semilattice"));
    }
    let depth = instance.depth.unwrap_or(DEFAULT_ALTERNATING_DEPTH);
    let mut checked = 0usize;
    for values in monotone_maps(&e, &FinitePoset::chain(4)) {
        let ints: Vec<i64> = values.iter().map(|&x| x as i64).collect();
        let v = RationalConeMap::from_integers(e.clone(), &ints)?;
        if !v.is_maxitive()? {
            continue;
        }
        checked += 1;
        if let Some(w) = v.alternating_witness(depth) {
            return Ok(Outcome::fail(json!({ "values": ints, "counterexample": w })));
        }
    }
    Ok(Outcome::pass().observing(json!({ "maxitive_maps": checked })))
}

fn check_ideal_roundtrip(instance: &Instance) -> Result<Outcome> {
    let e = Arc::new(instance.source()?);
    let l = Arc::new(instance.target()?);
    let sel = FilterSelection::new(&l, selection_of(instance))?;
    let rel = sel.way_above();
    for values in maxitive_maps(&e, &l)? {
        let v = MonotoneMap::new(e.clone(), l.clone(), values.clone())?;
        let fam = ideal_family_of(&v)?;
        let back = from_ideal_family(&fam, &sel).map(|w| w.values().to_vec());
        let right_continuous = fam.is_right_continuous(&rel);
        if back.as_ref() != Ok(&values) || !right_continuous {
            return Ok(Outcome::fail(json!({
                "values": values,
                "reconstructed": back.map_err(|e| e.to_string()),
                "right_continuous": right_continuous,
            })));
        }
    }
    Ok(Outcome::pass())
}

fn dominated(l: &FinitePoset, low: &[usize], high: &[usize]) -> bool {
    low.iter().zip(high).all(|(&a, &b)| l.leq(a, b))
}

fn check_extension(instance: &Instance) -> Result<Outcome> {
    let e = Arc::new(instance.source()?);
    let l = Arc::new(instance.target()?);
    let ext = dm_completion(&e);
    let kind = selection_of(instance);
    let sel_e = FilterSelection::new(&e, kind)?;
    let sel_l = FilterSelection::new(&l, kind)?;
    let star_ok = e.is_join_semilattice() && sel_l.continuity_report().is_domain;
    let lower_ok = ext.complete().classify().is_distributive && lower_star_contains_base(&ext);
    if !star_ok && !lower_ok {
        return Ok(Outcome::unmet(
            "E is not a join-semilattice and E₍*₎ misses E or Ē is not distributive",
        ));
    }
    let mut compared = 0usize;
    // v₍*₎ needs suprema of ↓a ∩ E in L; they exist when that set is directed
    let mut undefined_lower = 0usize;
    for values in maxitive_maps(&e, &l)? {
        let v = MonotoneMap::new(e.clone(), l.clone(), values.clone())?;
        if star_ok {
            let star = extend_star(&v, &ext, &sel_e, &sel_l)?;
            if let Some(w) = extremality_failure(&v, &ext, &star, true)? {
                return Ok(Outcome::fail(json!({ "part": "star", "values": values, "failure": w })));
            }
            compared += 1;
        }
        if lower_ok {
            let low = match extend_lower_star(&v, &ext) {
                Err(Error::MissingSupremum(_)) => {
                    undefined_lower += 1;
                    continue;
                }
                other => other?,
            };
            if let Some(w) = extremality_failure(&v, &ext, &low, false)? {
                return Ok(Outcome::fail(
                    json!({ "part": "lower-star", "values": values, "failure": w }),
                ));
            }
            compared += 1;
        }
    }
    Ok(Outcome::pass().observing(json!({
        "star": star_ok,
        "lower_star": lower_ok,
        "extensions_compared": compared,
        "lower_star_undefined": undefined_lower,
    })))
}

/// Checks that `candidate` extends `v`, is maxitive, and bounds every other
/// maxitive extension on its domain from above (`greatest`) or below.
fn extremality_failure(
    v: &MonotoneMap,
    ext: &OrderExtension,
    candidate: &ExtendedMap,
    greatest: bool,
) -> Result<Option<Value>> {
    let l = v.target();
    if !candidate.restricts_to(v, ext) {
        return Ok(Some(json!({ "reason": "does not extend v" })));
    }
    if let Some(w) = candidate.map.maxitivity_witness()? {
        return Ok(Some(
            json!({ "reason": "not maxitive", "family": candidate.map.source().format_subset(w) }),
        ));
    }
    let mine = candidate.map.values();
    for other in maxitive_extensions(v, ext, candidate)? {
        let ok = if greatest {
            dominated(l, &other, mine)
        } else {
            dominated(l, mine, &other)
        };
        if !ok {
            return Ok(Some(json!({ "candidate": mine, "other": other })));
        }
    }
    Ok(None)
}

fn check_residuated(instance: &Instance, forward: bool) -> Result<Outcome> {
    let e = Arc::new(instance.source()?);
    let l = Arc::new(instance.target()?);
    let ext = dm_completion(&e);
    let mut applicable = 0usize;
    let mut searched = 0usize;
    for values in monotone_maps(&e, &l) {
        let v = MonotoneMap::new(e.clone(), l.clone(), values.clone())?;
        let verdict = residuation_verdict(&v, &ext);
        searched += 1;
        if forward {
            if !verdict.forward_ok {
                return Ok(Outcome::fail(json!({ "values": values, "verdict": verdict })));
            }
        } else if let Some(ok) = verdict.converse_ok {
            applicable += 1;
            if !ok {
                return Ok(Outcome::fail(json!({ "values": values, "verdict": verdict })));
            }
        }
    }
    if !forward && applicable == 0 {
        return Ok(Outcome::unmet("Ē is not meet-continuous and E is not complete"));
    }
    Ok(Outcome::pass().observing(json!({ "maps": searched })))
}

/// Least `t` with `s <= r ∨ t`, found by testing the adjunction for every
/// candidate.
fn scan_residual(l: &FinitePoset, r: usize, s: usize) -> Option<usize> {
    let holds = |t: usize| l.join(r, t).is_some_and(|j| l.leq(s, j));
    (0..l.len()).find(|&t| (0..l.len()).all(|u| holds(u) == l.leq(t, u)))
}

fn check_heyting(instance: &Instance) -> Result<Outcome> {
    let l = instance.source()?;
    let profile = l.classify();
    if !profile.is_lattice || !profile.is_distributive {
        return match heyting_arrow(&l, 0, 0) {
            Err(Error::NotDistributive(_)) | Err(Error::NotLattice(_)) => Ok(Outcome::unmet("L is not distributive")),
            other => Ok(Outcome::fail(json!({ "accepted": format!("{other:?}") }))),
        };
    }
    for r in 0..l.len() {
        for s in 0..l.len() {
            let arrow = heyting_arrow(&l, r, s)?;
            let oracle = scan_residual(&l, r, s);
            let decomposes = !l.leq(r, s) || l.join(r, arrow) == Some(s);
            if oracle != Some(arrow) || !decomposes {
                return Ok(Outcome::fail(json!({
                    "r": l.label(r),
                    "s": l.label(s),
                    "arrow": l.label(arrow),
                    "scan": oracle.map(|t| l.label(t)),
                    "decomposes": decomposes,
                })));
            }
        }
    }
    Ok(Outcome::pass())
}

fn space_of(instance: &Instance) -> Result<std::result::Result<MaxMapSpace, Outcome>> {
    let e = Arc::new(instance.source()?);
    let l = Arc::new(instance.target()?);
    if !l.is_complete_lattice() {
        return Ok(Err(Outcome::unmet("L is not a complete lattice")));
    }
    Ok(Ok(build_space(e, l)?))
}

#[allow(clippy::needless_range_loop)]
fn check_frame(instance: &Instance) -> Result<Outcome> {
    let s = match space_of(instance)? {
        Ok(s) => s,
        Err(unmet) => return Ok(unmet),
    };
    if !s.target().classify().is_distributive {
        return Ok(Outcome::unmet("L is not distributive"));
    }
    let n = s.len();
    let join: Vec<Vec<Option<usize>>> = (0..n).map(|u| (0..n).map(|w| s.join(u, w)).collect()).collect();
    let below_join = |v: usize, u: usize, w: usize| join[u][w].is_some_and(|j| s.leq(v, j));
    for u in 0..n {
        for v in 0..n {
            let least = (0..n).find(|&m| (0..n).all(|w| below_join(v, u, w) == s.leq(m, w)));
            let arrow = s.m_arrow(u, v);
            let fail = |what: &str| {
                Outcome::fail(json!({
                    "u": s.values(u),
                    "v": s.values(v),
                    "arrow": arrow.as_ref().map(|&a| s.values(a).to_vec()).map_err(|e| e.to_string()),
                    "scan": least.map(|m| s.values(m).to_vec()),
                    "check": what,
                }))
            };
            let Ok(a) = arrow else {
                return Ok(fail("construction"));
            };
            if least != Some(a) {
                return Ok(fail("least element"));
            }
            if s.arrow_formula(u, v)? != s.values(a) {
                return Ok(fail("closed form"));
            }
            if s.leq(u, v) {
                let decomposes = join[u][a] == Some(v);
                let smallest = (0..n).all(|w| join[u][w] != Some(v) || s.leq(a, w));
                if !decomposes || !smallest {
                    return Ok(fail("decomposition"));
                }
            }
        }
    }
    Ok(Outcome::pass().observing(json!({ "maps": n })))
}

fn check_representation(instance: &Instance) -> Result<Outcome> {
    let s = match space_of(instance)? {
        Ok(s) => s,
        Err(unmet) => return Ok(unmet),
    };
    let l = s.target();
    let rel = FilterSelection::new(l, selection_of(instance))?.way_above();
    for h in 0..s.source().len() {
        for t in 0..l.len() {
            let gen = Generator { h, s: t };
            if let Err(e) = s.generator_map(gen) {
                return Ok(Outcome::fail(json!({ "generator": gen, "error": e.to_string() })));
            }
        }
    }
    for v in 0..s.len() {
        let rep = s.representation(v, &rel)?;
        if !rep.exact {
            return Ok(Outcome::fail(json!({ "values": s.values(v), "representation": rep })));
        }
    }
    let upper = FilterSelection::new(l, SelectionKind::Upper)?.way_above();
    let mut inexact_under_upper = 0usize;
    for v in 0..s.len() {
        if !s.representation(v, &upper)?.exact {
            inexact_under_upper += 1;
        }
    }
    Ok(Outcome::pass().observing(json!({
        "maps": s.len(),
        "inexact_under_upper": inexact_under_upper,
    })))
}

fn corollary_mismatch(s: &MaxMapSpace, kind: SelectionKind) -> Result<Option<Value>> {
    let rel_l = FilterSelection::new(s.target(), kind)?.way_above();
    let definitional = s.way_above_in_m(kind)?;
    let corollary = s.corollary_relation(&rel_l)?;
    for v in 0..s.len() {
        for w in 0..s.len() {
            let (d, c) = (definitional.is_way_above(w, v), corollary.is_way_above(w, v));
            if d != c {
                return Ok(Some(json!({
                    "w": s.values(w),
                    "v": s.values(v),
                    "definitional": d,
                    "corollary": c,
                })));
            }
        }
    }
    Ok(None)
}

fn check_corollary(instance: &Instance) -> Result<Outcome> {
    let s = match space_of(instance)? {
        Ok(s) => s,
        Err(unmet) => return Ok(unmet),
    };
    if let Some(w) = corollary_mismatch(&s, selection_of(instance))? {
        return Ok(Outcome::fail(w));
    }
    let order = s.order()?;
    let collapses = s.way_above_in_m(SelectionKind::Filtered)?.equals_order(order);
    let upper = corollary_mismatch(&s, SelectionKind::Upper)?;
    Ok(Outcome::pass().observing(json!({
        "filtered_is_order": collapses,
        "upper_agrees": upper.is_none(),
        "upper_mismatch": upper,
    })))
}

fn check_pointwise_inf(instance: &Instance) -> Result<Outcome> {
    let s = match space_of(instance)? {
        Ok(s) => s,
        Err(unmet) => return Ok(unmet),
    };
    let order = s.order()?;
    let sel = FilterSelection::new(order, selection_of(instance))?;
    for &f in sel.fsets() {
        let inf = s.pointwise_inf(f, &sel)?;
        if !inf.is_infimum {
            return Ok(Outcome::fail(json!({
                "family": order.format_subset(f),
                "pointwise": inf.values,
                "maxitive": inf.index.is_some(),
            })));
        }
    }
    let upper = FilterSelection::new(order, SelectionKind::Upper)?;
    let mut not_maxitive = 0usize;
    for &f in upper.fsets() {
        if s.pointwise_inf(f, &upper)?.index.is_none() {
            not_maxitive += 1;
        }
    }
    Ok(Outcome::pass().observing(json!({
        "fsets": sel.fsets().len(),
        "upper_sets_with_non_maxitive_inf": not_maxitive,
    })))
}

fn check_generator(instance: &Instance) -> Result<Outcome> {
    let s = match space_of(instance)? {
        Ok(s) => s,
        Err(unmet) => return Ok(unmet),
    };
    let kind = selection_of(instance);
    let rel_l = FilterSelection::new(s.target(), kind)?.way_above();
    let rel_m = s.way_above_in_m(kind)?;
    match s.generator_lemma_failures(&rel_l, &rel_m)?.first() {
        None => Ok(Outcome::pass()),
        Some((gen, v)) => Ok(Outcome::fail(json!({ "generator": gen, "v": s.values(*v) }))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(claim: Claim, max_size: usize, max_target: usize) -> SuiteReport {
        let mut options = SuiteOptions::defaults(claim);
        options.bounds = Bounds { max_size, max_target };
        run_suite(claim, &options).unwrap()
    }

    #[test]
    fn claim_ids_round_trip() {
        for c in Claim::ALL {
            assert_eq!(Claim::parse(c.id()).unwrap(), c);
            let text = serde_json::to_string(&c).unwrap();
            assert_eq!(text, format!("\"{}\"", c.id()));
        }
        assert_eq!(Claim::parse("nope").unwrap_err(), Error::UnknownClaim("nope".into()));
    }

    #[test]
    fn seven_element_suite() {
        let r = run_suite(Claim::SevenElement, &SuiteOptions::defaults(Claim::SevenElement)).unwrap();
        assert_eq!(
            r.summary,
            Summary {
                pass: 1,
                fail: 0,
                hypothesis_not_met: 0
            }
        );
    }

    #[test]
    fn suites_are_deterministic() {
        let strip = |r: SuiteReport| -> Vec<(Instance, Outcome)> {
            r.records.into_iter().map(|x| (x.instance, x.outcome)).collect()
        };
        let a = small(Claim::Interpolation, 3, 0);
        let b = small(Claim::Interpolation, 3, 0);
        assert_eq!(strip(a), strip(b));
    }

    #[test]
    fn converse_failure_replays() {
        let r = small(Claim::ResiduatedConverse, 3, 2);
        let fail = r.failures().next().expect("antichain in M3 breaks the converse");
        confirm_witness(fail).unwrap();
        let fine = r.records.iter().find(|x| x.outcome.verdict == Verdict::Pass).unwrap();
        assert!(confirm_witness(fine).is_err());
    }

    #[test]
    fn sampling_is_seeded() {
        let mut options = SuiteOptions::defaults(Claim::SingletonCollapse);
        options.bounds.max_size = 4;
        options.sample = Some(Sample { count: 10, seed: 7 });
        let a = run_suite(Claim::SingletonCollapse, &options).unwrap();
        let b = run_suite(Claim::SingletonCollapse, &options).unwrap();
        assert_eq!(a.records.len(), 10);
        let ids = |r: &SuiteReport| r.records.iter().map(|x| x.instance.clone()).collect::<Vec<_>>();
        assert_eq!(ids(&a), ids(&b));
    }

    #[test]
    fn frame_records_non_distributive_targets() {
        let r = small(Claim::FrameAdjunction, 1, 2);
        assert_eq!(r.summary.fail, 0);
        assert!(r.summary.hypothesis_not_met >= 2);
    }

    #[test]
    fn bounds_are_capped() {
        let mut options = SuiteOptions::defaults(Claim::Interpolation);
        options.bounds.max_size = 9;
        assert!(matches!(
            run_suite(Claim::Interpolation, &options),
            Err(Error::CapExceeded { .. })
        ));
    }
}
