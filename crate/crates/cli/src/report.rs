//! The JSON report of one singularity.
//!
//! Every integer and fraction is a decimal string so that arbitrarily large
//! values survive any JSON parser. Field order is the struct order below.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use cqsres_core::{
    discrepancies, enumerate_presolutions, invariants, m_resolution, maximal_resolution, minimal_resolution,
    self_intersections, verify_presolution, ConeRecord, CyclicQuotient, Error, ExactRational, Fan, MVector, NVector,
    PResolutionRecord, Result, TType,
};

pub type Pair = [String; 2];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub n: String,
    pub q: String,
    pub a_chain: Vec<String>,
    pub b_chain: Vec<String>,
    pub e: String,
    pub minimal_resolution: ResolutionEntry,
    pub maximal_resolution: ResolutionEntry,
    pub p_resolutions: Vec<PResolutionEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionEntry {
    pub rays: Vec<Pair>,
    pub r_vector: Pair,
    /// `α_j` for every ray, boundary rays included.
    pub alphas: Vec<String>,
    /// `α_j - 1` for the interior rays.
    pub discrepancies: Vec<String>,
    pub self_intersections: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PResolutionEntry {
    pub chain: Vec<String>,
    pub q_seq: Vec<String>,
    pub rays: Vec<Pair>,
    pub cones: Vec<ConeEntry>,
    pub verified: bool,
    pub m_resolution_rays: Vec<Pair>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeEntry {
    pub index: usize,
    pub w: Pair,
    pub height: String,
    pub length: String,
    pub left: Pair,
    pub right: Pair,
    pub degenerate: bool,
    pub milnor: Option<String>,
    /// `smooth`, `T`, `non-T` or `degenerate`.
    #[serde(rename = "type")]
    pub kind: String,
    pub normal_form: Option<Pair>,
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn nv(v: &NVector) -> Pair {
    [v.x.to_string(), v.y.to_string()]
}

fn mv(v: &MVector) -> Pair {
    [v.a.to_string(), v.b.to_string()]
}

fn rays(f: &Fan) -> Vec<Pair> {
    f.rays().iter().map(nv).collect()
}

fn fraction(r: &ExactRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn resolution_entry(f: &Fan) -> Result<ResolutionEntry> {
    let d = discrepancies(f);
    Ok(ResolutionEntry {
        rays: rays(f),
        r_vector: [fraction(&d.r_vector.a), fraction(&d.r_vector.b)],
        alphas: d.alphas.iter().map(fraction).collect(),
        discrepancies: d.discrepancies().iter().map(fraction).collect(),
        self_intersections: strings(&self_intersections(f)?),
    })
}

fn cone_entry(c: &ConeRecord) -> ConeEntry {
    let (kind, normal_form) = match &c.ttype {
        None => ("degenerate", None),
        Some(TType::Smooth) => ("smooth", None),
        Some(TType::T { normal_form, .. }) => ("T", Some(normal_form)),
        Some(TType::NotT { normal_form }) => ("non-T", Some(normal_form)),
    };
    ConeEntry {
        index: c.index,
        w: mv(&c.w),
        height: c.height.to_string(),
        length: c.length.to_string(),
        left: nv(&c.left),
        right: nv(&c.right),
        degenerate: c.degenerate,
        milnor: c.milnor.as_ref().map(ToString::to_string),
        kind: kind.to_string(),
        normal_form: normal_form.map(|cq| [cq.n().to_string(), cq.q().to_string()]),
    }
}

fn presolution_entry(p: &PResolutionRecord) -> PResolutionEntry {
    PResolutionEntry {
        chain: strings(p.chain.entries()),
        q_seq: strings(p.qseq.values()),
        rays: rays(&p.fan),
        cones: p.cones.iter().map(cone_entry).collect(),
        verified: verify_presolution(p).pass,
        m_resolution_rays: rays(&m_resolution(p)),
    }
}

impl Report {
    /// The full report of `cq`, computed on its canonical representative.
    pub fn build(cq: &CyclicQuotient) -> Result<Report> {
        let cq = cq.canonical();
        let inv = invariants(&cq);
        let p_resolutions = enumerate_presolutions(&cq)?.iter().map(presolution_entry).collect();
        Ok(Report {
            n: cq.n().to_string(),
            q: cq.q().to_string(),
            a_chain: strings(&inv.a_chain),
            b_chain: strings(&inv.b_chain),
            e: inv.e.to_string(),
            minimal_resolution: resolution_entry(&minimal_resolution(&cq))?,
            maximal_resolution: resolution_entry(&maximal_resolution(&cq))?,
            p_resolutions,
        })
    }

    pub fn base(&self) -> Result<CyclicQuotient> {
        CyclicQuotient::new(parse_int(&self.n)?, parse_int(&self.q)?)
    }

    pub fn minimal_fan(&self) -> Result<Fan> {
        fan(&self.base()?, &self.minimal_resolution.rays)
    }

    pub fn maximal_fan(&self) -> Result<Fan> {
        fan(&self.base()?, &self.maximal_resolution.rays)
    }

    /// P-resolution fans and their M-resolutions, in report order.
    pub fn presolution_fans(&self) -> Result<Vec<(Fan, Fan)>> {
        let base = self.base()?;
        self.p_resolutions.iter().map(|p| Ok((fan(&base, &p.rays)?, fan(&base, &p.m_resolution_rays)?))).collect()
    }

    /// Plain-text rendering for the terminal.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "Y({},{})", self.n, self.q);
        let _ = writeln!(s, "  a = ({})  e = {}", self.a_chain.join(","), self.e);
        let _ = writeln!(s, "  b = ({})", self.b_chain.join(","));
        for (name, r) in [("minimal", &self.minimal_resolution), ("maximal", &self.maximal_resolution)] {
            let _ = writeln!(s, "{name} resolution, R = [{}, {}]", r.r_vector[0], r.r_vector[1]);
            let _ = writeln!(s, "  rays  {}", pairs(&r.rays));
            let _ = writeln!(s, "  alpha {}", r.alphas.join(" "));
            let _ = writeln!(
                s,
                "  -c_j  {}",
                r.self_intersections.iter().map(|c| format!("-{c}")).collect::<Vec<_>>().join(" ")
            );
        }
        let _ = writeln!(s, "P-resolutions: {}", self.p_resolutions.len());
        for p in &self.p_resolutions {
            let status = if p.verified { "verified" } else { "FAILED" };
            let _ = writeln!(s, "  k = ({})  q = ({})  {status}", p.chain.join(","), p.q_seq.join(","));
            let _ = writeln!(s, "    rays   {}", pairs(&p.rays));
            for c in p.cones.iter().filter(|c| !c.degenerate && c.length != "0") {
                let milnor = c.milnor.as_deref().unwrap_or("-");
                let nf = c.normal_form.as_ref().map(|p| format!(" Y({},{})", p[0], p[1])).unwrap_or_default();
                let _ = writeln!(
                    s,
                    "    τ^{:<3} w = [{},{}]  d = {}  ℓ = {}  μ = {}  {}{}",
                    c.index, c.w[0], c.w[1], c.height, c.length, milnor, c.kind, nf
                );
            }
            let _ = writeln!(s, "    M-res  {}", pairs(&p.m_resolution_rays));
        }
        s
    }
}

fn pairs(v: &[Pair]) -> String {
    v.iter().map(|p| format!("({},{})", p[0], p[1])).collect::<Vec<_>>().join(" ")
}

fn parse_int(s: &str) -> Result<BigInt> {
    BigInt::from_str(s).map_err(|_| Error::Internal(format!("not an integer: {s:?}")))
}

fn fan(base: &CyclicQuotient, rays: &[Pair]) -> Result<Fan> {
    let rays =
        rays.iter().map(|[x, y]| Ok(NVector { x: parse_int(x)?, y: parse_int(y)? })).collect::<Result<Vec<_>>>()?;
    Fan::new(base.clone(), rays)
}
