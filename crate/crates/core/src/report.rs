//! The per-ring JSON report behind `e2homlab report`.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::barhom::{connecting_replay, f_cycle, g_cycle, h_cycle, shuffle_product, verify_cycle};
use crate::bloch::{
    check_lambda_bar, eta_map, lambda_bar_maps, refined_bloch, rp_bar_presentation, rp_geometric, EtaReport,
    LambdaBarCheck, RefinedBloch, SymSq,
};
use crate::error::{Error, Result};
use crate::invariants::{
    bar_witt_suite, d1_differentials, grothendieck_witt, h1_compare, i_squared, replay_d2_proof, BarWitt, D1Report,
    D2Replay, H1Report,
};
use crate::lab::{Caps, Lab};
use crate::matgroup::Mat2;
use crate::ringkit::{local_decomposition, tilde_extension, LocalFactor};
use crate::zlinalg::AbGroup;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Section {
    Ring,
    Complex,
    H1,
    D1,
    D2,
    Gw,
    Cycles,
    Bloch,
}

impl Section {
    pub const ALL: [Section; 8] = [
        Section::Ring,
        Section::Complex,
        Section::H1,
        Section::D1,
        Section::D2,
        Section::Gw,
        Section::Cycles,
        Section::Bloch,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Section::Ring => "ring",
            Section::Complex => "complex",
            Section::H1 => "h1",
            Section::D1 => "d1",
            Section::D2 => "d2",
            Section::Gw => "gw",
            Section::Cycles => "cycles",
            Section::Bloch => "bloch",
        }
    }
}

impl FromStr for Section {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Section::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown check '{s}'"))
    }
}

/// Parses a comma separated selector; `all` or an empty string selects every section.
pub fn parse_sections(text: &str) -> std::result::Result<Vec<Section>, String> {
    if text.is_empty() || text == "all" {
        return Ok(Section::ALL.to_vec());
    }
    let mut out: Vec<Section> = text.split(',').map(|s| s.trim().parse()).collect::<std::result::Result<_, _>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct RingData {
    pub order: usize,
    pub characteristic: usize,
    pub units: usize,
    pub unit_group: AbGroup,
    pub square_classes: usize,
    pub w_size: usize,
    pub two_is_unit: bool,
    pub universal: bool,
    pub local_factors: Vec<LocalFactor>,
    /// `Z/gcd(n^2, 2n)` for `n = |A^x|` when the unit group is cyclic
    pub tilde_extension: Option<AbGroup>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplexData {
    pub degree: usize,
    pub sizes: Vec<usize>,
    /// degree at which the build stopped because of the cap
    pub truncated_at: Option<usize>,
    /// `H_0 .. H_{degree-1}`; `null` where the next degree is unavailable
    pub homology: Vec<Option<AbGroup>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GwData {
    pub gw: AbGroup,
    pub i: AbGroup,
    pub i_squared: Option<AbGroup>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i_squared_note: Option<String>,
    pub bar_witt: BarWitt,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Tally {
    pub checked: usize,
    pub passed: usize,
}

impl Tally {
    fn add(&mut self, ok: bool) {
        self.checked += 1;
        self.passed += usize::from(ok);
    }

    fn ok(&self) -> bool {
        self.checked == self.passed
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CycleData {
    pub applicable: bool,
    pub f: Tally,
    pub g: Tally,
    pub h: Tally,
    pub shuffles: Tally,
    pub connecting: Tally,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlochData {
    pub rp_bar: AbGroup,
    pub symbols: usize,
    pub relations: usize,
    pub skipped: usize,
    pub lambda_bar: LambdaBarCheck,
    pub s2: AbGroup,
    pub rp: AbGroup,
    pub rp1: AbGroup,
    pub boundaries_in_i2: bool,
    pub eta: EtaReport,
    pub refined: Option<RefinedBloch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refined_note: Option<String>,
    /// `lambda_2` on geometric classes is the symbol-level substitute
    pub lambda2_symbol_level: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub version: &'static str,
    pub spec: String,
    pub ring_label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ring: Option<RingData>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complex: Option<ComplexData>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h1: Option<H1Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d1: Option<D1Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d2: Option<Vec<D2Replay>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gw: Option<GwData>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycles: Option<CycleData>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bloch: Option<BlochData>,
    /// names of internal checks that did not hold
    pub failed_checks: Vec<String>,
    /// sections that could not be computed, with the reason
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub notes: BTreeMap<&'static str, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_millis: Option<BTreeMap<&'static str, u128>>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Refusals become notes in the report; caps and parse errors abort it.
fn soft<T>(r: Result<T>) -> Result<std::result::Result<T, String>> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(Error::Precondition(m)) => Ok(Err(m)),
        Err(e) => Err(e),
    }
}

fn ring_data(lab: &Lab) -> RingData {
    let r = &lab.ring;
    let d = local_decomposition(r);
    let unit_group = lab.units.unit_group(r);
    let n = lab.units.units.len() as u64;
    let tilde = (unit_group.ngens() <= 1).then(|| tilde_extension(n));
    RingData {
        order: r.order(),
        characteristic: r.characteristic(),
        units: lab.units.units.len(),
        unit_group,
        square_classes: lab.units.class_count(),
        w_size: lab.w.len(),
        two_is_unit: lab.two_is_unit(),
        universal: d.universal,
        local_factors: d.factors,
        tilde_extension: tilde,
    }
}

fn complex_data(lab: &Lab, degree: usize) -> Result<ComplexData> {
    let y = lab.complex()?;
    let built = y.max_degree().min(degree);
    let homology = (0..degree)
        .map(|k| (k < y.max_degree()).then(|| y.homology(k)).transpose())
        .collect::<Result<_>>()?;
    Ok(ComplexData {
        degree,
        sizes: y.sizes().into_iter().take(built + 1).collect(),
        truncated_at: y.truncated().map(|(k, _)| k).filter(|&k| k <= degree),
        homology,
    })
}

fn gw_data(lab: &Lab) -> Result<GwData> {
    let gw = grothendieck_witt(lab)?;
    let (i_sq, note) = match soft(i_squared(lab, &gw))? {
        Ok(x) => (Some(x.group), None),
        Err(m) => (None, Some(m)),
    };
    Ok(GwData {
        gw: gw.group.clone(),
        i: gw.i_group(),
        i_squared: i_sq,
        i_squared_note: note,
        bar_witt: bar_witt_suite(lab, &gw)?,
    })
}

fn cycle_data(lab: &Lab) -> Result<CycleData> {
    let mut out = CycleData {
        applicable: lab.two_is_unit(),
        f: Tally::default(),
        g: Tally::default(),
        h: Tally::default(),
        shuffles: Tally::default(),
        connecting: Tally::default(),
    };
    if !out.applicable {
        return Ok(out);
    }
    let (r, e2) = (&lab.ring, lab.e2()?);
    let minus = lab.e2_elem(&Mat2::minus_identity(r))?;
    let gw = grothendieck_witt(lab)?;
    let check = |t: &mut Tally, shuffles: &mut Tally, z: crate::barhom::BarChain| -> Result<()> {
        t.add(verify_cycle(r, e2, &z));
        shuffles.add(verify_cycle(r, e2, &shuffle_product(lab, minus, &z)?));
        Ok(())
    };
    for &a in &lab.units.units {
        for &b in &lab.units.units {
            check(&mut out.f, &mut out.shuffles, f_cycle(lab, a, b)?)?;
            check(&mut out.h, &mut out.shuffles, h_cycle(lab, a, b)?)?;
            out.connecting.add(connecting_replay(lab, &gw, a, b)?.ok());
        }
    }
    for x in r.elements() {
        for y in r.elements() {
            check(&mut out.g, &mut out.shuffles, g_cycle(lab, x, y)?)?;
        }
    }
    Ok(out)
}

fn bloch_data(lab: &Lab) -> Result<BlochData> {
    let sym = SymSq::new(lab)?;
    let rp_bar = rp_bar_presentation(lab)?;
    let lb = lambda_bar_maps(lab, &sym);
    let lambda_bar = check_lambda_bar(lab, &rp_bar, &lb)?;
    let geom = rp_geometric(lab)?;
    let eta = eta_map(lab, &rp_bar, &geom, &lb)?;
    let (refined, note) = match soft(refined_bloch(lab, &rp_bar, &geom, &lb, &eta, &sym))? {
        Ok(x) => (Some(x), None),
        Err(m) => (None, Some(m)),
    };
    Ok(BlochData {
        rp_bar: rp_bar.group().clone(),
        symbols: rp_bar.symbols,
        relations: rp_bar.relations.len(),
        skipped: rp_bar.skipped,
        lambda_bar,
        s2: sym.s2_group().clone(),
        rp: geom.group().clone(),
        rp1: geom.rp1(),
        boundaries_in_i2: geom.boundaries_in_i2,
        eta: eta.report,
        refined,
        refined_note: note,
        lambda2_symbol_level: true,
    })
}

fn failed_checks(rep: &Report) -> Vec<String> {
    let mut out = Vec::new();
    let mut need = |ok: bool, name: &str| {
        if !ok {
            out.push(name.to_string());
        }
    };
    if let Some(c) = &rep.complex {
        need(c.homology.first().is_some_and(|h| h.as_ref() == Some(&AbGroup::free(1))), "complex.h0");
    }
    if let Some(h) = &rep.h1 {
        need(h.ok(), "h1");
    }
    if let Some(d) = &rep.d1 {
        need(d.ok(), "d1");
    }
    if let Some(d) = &rep.d2 {
        need(d.iter().all(D2Replay::ok), "d2.replay");
    }
    if let Some(g) = &rep.gw {
        need(g.bar_witt.ok(), "gw.bar_witt");
    }
    if let Some(c) = &rep.cycles {
        need(c.f.ok() && c.g.ok() && c.h.ok(), "cycles.suite");
        need(c.shuffles.ok(), "cycles.shuffles");
        need(c.connecting.ok(), "cycles.connecting");
    }
    if let Some(b) = &rep.bloch {
        need(b.lambda_bar.lambda1_kills && b.lambda_bar.lambda2_kills, "bloch.lambda_bar");
        need(b.eta.well_defined && b.eta.lambda_compatible, "bloch.eta");
        need(!b.eta.iso || b.eta.bijective, "bloch.iso");
        need(b.boundaries_in_i2, "bloch.boundaries_in_i2");
        if let Some(rb) = &b.refined {
            need(rb.lambda2_well_defined && rb.alpha_compatible && rb.alpha_well_defined, "bloch.refined");
        }
    }
    out
}

/// Builds the report for one ring spec. The complex is built up to `degree` (at most 4).
pub fn run_report(spec: &str, caps: Caps, degree: usize, sections: &[Section], timing: bool) -> Result<Report> {
    if degree > crate::unimod::MAX_DEGREE {
        return Err(Error::Precondition(format!(
            "degree {degree} exceeds the supported maximum {}",
            crate::unimod::MAX_DEGREE
        )));
    }
    let lab = Lab::from_spec(spec, Caps { degree, ..caps })?;
    let mut times = BTreeMap::new();
    let mut rep = Report {
        schema: SCHEMA_VERSION,
        version: env!("CARGO_PKG_VERSION"),
        spec: spec.to_string(),
        ring_label: lab.label(),
        ring: None,
        complex: None,
        h1: None,
        d1: None,
        d2: None,
        gw: None,
        cycles: None,
        bloch: None,
        failed_checks: Vec::new(),
        notes: BTreeMap::new(),
        timing_millis: None,
    };
    for &s in sections {
        let start = Instant::now();
        let done = match s {
            Section::Ring => {
                rep.ring = Some(ring_data(&lab));
                Ok(())
            }
            Section::Complex => complex_data(&lab, degree).map(|x| rep.complex = Some(x)),
            Section::H1 => h1_compare(&lab).map(|x| rep.h1 = Some(x)),
            Section::D1 => d1_differentials(&lab).map(|x| rep.d1 = Some(x)),
            Section::D2 => lab
                .units
                .units
                .iter()
                .map(|&a| replay_d2_proof(&lab, a))
                .collect::<Result<Vec<_>>>()
                .map(|x| rep.d2 = Some(x)),
            Section::Gw => gw_data(&lab).map(|x| rep.gw = Some(x)),
            Section::Cycles => cycle_data(&lab).map(|x| rep.cycles = Some(x)),
            Section::Bloch => bloch_data(&lab).map(|x| rep.bloch = Some(x)),
        };
        if let Err(m) = soft(done)? {
            rep.notes.insert(s.name(), m);
        }
        times.insert(s.name(), start.elapsed().as_millis());
    }
    rep.failed_checks = failed_checks(&rep);
    if timing {
        rep.timing_millis = Some(times);
    }
    Ok(rep)
}
