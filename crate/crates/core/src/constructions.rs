//! Named certificate broadcasts on the generated families, and the two
//! strength-reduction procedures.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::broadcast::{
    analyze, is_bn_independent, is_dominating, is_hearing_independent, is_irredundant,
    is_minimal_dominating, Broadcast,
};
use crate::error::{Error, Result};
use crate::families::{generate, FamilySpec};
use crate::graph::{distances, DistanceMatrix, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CertificateName {
    #[serde(rename = "spider_bnr_f0")]
    SpiderBnrF0,
    #[serde(rename = "spider_bn_full")]
    SpiderBnFull,
    #[serde(rename = "spider_h_full")]
    SpiderHFull,
    #[serde(rename = "grid3k_gamma")]
    Grid3kGamma,
    #[serde(rename = "Tk_gamma_f")]
    TkGammaF,
    #[serde(rename = "Tk_bnr_g")]
    TkBnrG,
    #[serde(rename = "T_bnr_f14")]
    TBnrF14,
    #[serde(rename = "T_gamma_g13")]
    TGammaG13,
    #[serde(rename = "Hk_lambda")]
    HkLambda,
    #[serde(rename = "Hk_bnr_union")]
    HkBnrUnion,
    #[serde(rename = "Gk_bnr_f")]
    GkBnrF,
    #[serde(rename = "Gk_dom_set")]
    GkDomSet,
    #[serde(rename = "KnP3_gamma_f")]
    KnP3GammaF,
    #[serde(rename = "KnP3_alpha_h")]
    KnP3AlphaH,
    #[serde(rename = "open_question_hd")]
    OpenQuestionHd,
}

/// A property a certificate is claimed to have (or, for `NotDominating`, to
/// lack).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    BnIndependent,
    HearingIndependent,
    Irredundant,
    Dominating,
    MinimalDominating,
    NotDominating,
}

impl Claim {
    pub fn name(self) -> &'static str {
        match self {
            Claim::BnIndependent => "bn_independent",
            Claim::HearingIndependent => "hearing_independent",
            Claim::Irredundant => "irredundant",
            Claim::Dominating => "dominating",
            Claim::MinimalDominating => "minimal_dominating",
            Claim::NotDominating => "not_dominating",
        }
    }

    pub fn holds(self, f: &Broadcast, g: &Graph, d: &DistanceMatrix) -> bool {
        match self {
            Claim::BnIndependent => is_bn_independent(f, g, d),
            Claim::HearingIndependent => is_hearing_independent(f, g, d),
            Claim::Irredundant => is_irredundant(f, g, d).unwrap_or(false),
            Claim::Dominating => is_dominating(f, g, d),
            Claim::MinimalDominating => is_minimal_dominating(f, g, d),
            Claim::NotDominating => !is_dominating(f, g, d),
        }
    }
}

impl CertificateName {
    pub const ALL: [CertificateName; 15] = [
        CertificateName::SpiderBnrF0,
        CertificateName::SpiderBnFull,
        CertificateName::SpiderHFull,
        CertificateName::Grid3kGamma,
        CertificateName::TkGammaF,
        CertificateName::TkBnrG,
        CertificateName::TBnrF14,
        CertificateName::TGammaG13,
        CertificateName::HkLambda,
        CertificateName::HkBnrUnion,
        CertificateName::GkBnrF,
        CertificateName::GkDomSet,
        CertificateName::KnP3GammaF,
        CertificateName::KnP3AlphaH,
        CertificateName::OpenQuestionHd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CertificateName::SpiderBnrF0 => "spider_bnr_f0",
            CertificateName::SpiderBnFull => "spider_bn_full",
            CertificateName::SpiderHFull => "spider_h_full",
            CertificateName::Grid3kGamma => "grid3k_gamma",
            CertificateName::TkGammaF => "Tk_gamma_f",
            CertificateName::TkBnrG => "Tk_bnr_g",
            CertificateName::TBnrF14 => "T_bnr_f14",
            CertificateName::TGammaG13 => "T_gamma_g13",
            CertificateName::HkLambda => "Hk_lambda",
            CertificateName::HkBnrUnion => "Hk_bnr_union",
            CertificateName::GkBnrF => "Gk_bnr_f",
            CertificateName::GkDomSet => "Gk_dom_set",
            CertificateName::KnP3GammaF => "KnP3_gamma_f",
            CertificateName::KnP3AlphaH => "KnP3_alpha_h",
            CertificateName::OpenQuestionHd => "open_question_hd",
        }
    }

    pub fn claims(self) -> &'static [Claim] {
        use Claim::*;
        match self {
            CertificateName::SpiderBnrF0 | CertificateName::TkBnrG | CertificateName::GkBnrF => {
                &[BnIndependent, Irredundant]
            }
            CertificateName::SpiderBnFull => &[BnIndependent],
            CertificateName::SpiderHFull => &[HearingIndependent],
            CertificateName::TBnrF14 | CertificateName::HkBnrUnion => {
                &[BnIndependent, Irredundant, NotDominating]
            }
            CertificateName::Grid3kGamma
            | CertificateName::TkGammaF
            | CertificateName::TGammaG13
            | CertificateName::HkLambda
            | CertificateName::GkDomSet
            | CertificateName::KnP3GammaF => &[Dominating, MinimalDominating],
            CertificateName::KnP3AlphaH => &[BnIndependent, Irredundant, Dominating],
            CertificateName::OpenQuestionHd => &[HearingIndependent, MinimalDominating],
        }
    }
}

impl fmt::Display for CertificateName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CertificateName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CertificateName::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidCertificate(format!("unknown certificate `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateSpec {
    #[serde(rename = "certificate")]
    pub name: CertificateName,
    pub family: FamilySpec,
}

impl CertificateSpec {
    pub fn new(name: CertificateName, family: FamilySpec) -> Self {
        CertificateSpec { name, family }
    }

    /// Weight the construction is stated to have on this instance.
    pub fn expected_weight(&self) -> Result<u32> {
        self.placements().map(|(_, w)| w)
    }

    /// Labelled strength placements and the stated weight.
    fn placements(&self) -> Result<(Vec<(String, u32)>, u32)> {
        let incompatible = || {
            Error::InvalidCertificate(format!("{} does not apply to {}", self.name, self.family))
        };
        let mut out = Vec::new();
        let weight = match (self.name, &self.family) {
            (
                CertificateName::SpiderBnrF0
                | CertificateName::SpiderBnFull
                | CertificateName::SpiderHFull,
                FamilySpec::Spider(legs),
            ) => {
                let r = legs[0] as u32;
                let k = legs.len() as u32;
                if legs.iter().any(|&l| l as u32 != r) || k < 2 || r < 2 {
                    return Err(Error::InvalidCertificate(format!(
                        "{} needs a spider Sp(r^k) with r, k >= 2",
                        self.name
                    )));
                }
                for i in 1..=k {
                    let s = match self.name {
                        CertificateName::SpiderBnrF0 if i == 1 => r,
                        CertificateName::SpiderBnrF0 => r - 1,
                        CertificateName::SpiderBnFull => r,
                        _ => 2 * r - 1,
                    };
                    out.push((format!("l_{i}"), s));
                }
                match self.name {
                    CertificateName::SpiderBnrF0 => k * (r - 1) + 1,
                    CertificateName::SpiderBnFull => k * r,
                    _ => k * (2 * r - 1),
                }
            }
            (CertificateName::Grid3kGamma, &FamilySpec::Grid(3, k)) => {
                for j in 1..=k {
                    out.push((format!("(1,{j})"), 2));
                }
                2 * k as u32
            }
            (CertificateName::TkGammaF, &FamilySpec::ChainTreeTk(k)) => {
                for i in 1..=k {
                    out.push((format!("l_{i}"), 4));
                }
                4 * k as u32
            }
            (CertificateName::TkBnrG, &FamilySpec::ChainTreeTk(k)) => {
                for i in 1..=k {
                    out.push((format!("l_{i}"), 2));
                    out.push((format!("l'_{i}"), 1));
                }
                3 * k as u32
            }
            (CertificateName::TBnrF14, FamilySpec::AnchorTreeT) => {
                anchor_f14(None, &mut out);
                14
            }
            (CertificateName::TGammaG13, FamilySpec::AnchorTreeT) => {
                anchor_g13(None, &mut out);
                13
            }
            (CertificateName::HkLambda, &FamilySpec::LinkedTreesHk(k)) => {
                for i in 1..=3 * k {
                    if i % 3 == 2 {
                        anchor_g13(Some(i), &mut out);
                    } else {
                        anchor_f14(Some(i), &mut out);
                    }
                }
                41 * k as u32
            }
            (CertificateName::HkBnrUnion, &FamilySpec::LinkedTreesHk(k)) => {
                for i in 1..=3 * k {
                    anchor_f14(Some(i), &mut out);
                }
                42 * k as u32
            }
            (CertificateName::GkBnrF, &FamilySpec::LayeredGk(k)) => {
                for i in 1..=k + 1 {
                    out.push((format!("x_{i}"), 2));
                    out.push((format!("w_{i}"), 1));
                }
                3 * (k as u32 + 1)
            }
            (CertificateName::GkDomSet, &FamilySpec::LayeredGk(k)) => {
                out.push(("v".into(), 1));
                for i in 1..=k + 1 {
                    out.push((format!("x_{i}"), 1));
                    out.push((format!("w_{i}"), 1));
                }
                2 * k as u32 + 3
            }
            (CertificateName::KnP3GammaF, &FamilySpec::CompleteTimesP3(n)) => {
                for i in 1..=n {
                    out.push((format!("x_{i}"), 2));
                }
                2 * n as u32
            }
            (CertificateName::KnP3AlphaH, &FamilySpec::CompleteTimesP3(n)) => {
                if n < 2 {
                    return Err(incompatible());
                }
                let z = if n >= 3 { 3 } else { 1 };
                out.push(("x_1".into(), 1));
                out.push(("y_2".into(), 1));
                out.push((format!("z_{z}"), 1));
                3
            }
            (CertificateName::OpenQuestionHd, FamilySpec::OpenQuestionExample) => {
                out.push(("u_1".into(), 2));
                out.push(("u_2".into(), 2));
                4
            }
            _ => return Err(incompatible()),
        };
        Ok((out, weight))
    }
}

fn anchor_label(base: &str, copy: Option<usize>, side: &str, j: usize) -> String {
    match copy {
        Some(i) => format!("{base}_{{{i},{side},{j}}}"),
        None => format!("{base}_{{{side},{j}}}"),
    }
}

/// 3 on the first leaf of each side, 2 on the other four.
fn anchor_f14(copy: Option<usize>, out: &mut Vec<(String, u32)>) {
    for side in ["u", "w"] {
        for j in 1..=3 {
            out.push((anchor_label("l", copy, side, j), if j == 1 { 3 } else { 2 }));
        }
    }
}

/// 2 on all six leaves, 1 on the centre.
fn anchor_g13(copy: Option<usize>, out: &mut Vec<(String, u32)>) {
    for side in ["u", "w"] {
        for j in 1..=3 {
            out.push((anchor_label("l", copy, side, j), 2));
        }
    }
    let centre = match copy {
        Some(i) => format!("v_{i}"),
        None => "v".to_string(),
    };
    out.push((centre, 1));
}

/// Builds and validates a certificate on its family instance.
pub fn build(spec: &CertificateSpec) -> Result<Broadcast> {
    let g = generate(&spec.family)?;
    let d = distances(&g);
    build_on(spec, &g, &d)
}

/// As [`build`], on an already generated instance of `spec.family`.
pub fn build_on(spec: &CertificateSpec, g: &Graph, d: &DistanceMatrix) -> Result<Broadcast> {
    let (placements, weight) = spec.placements()?;
    let mut strengths = vec![0u32; g.n()];
    for (label, s) in &placements {
        let v = g.index_of(label).ok_or_else(|| {
            Error::InvalidCertificate(format!("no vertex `{label}` in {}", spec.family))
        })?;
        strengths[v] = *s;
    }
    let f = Broadcast::new(strengths);
    let reject = |reason: String| Error::CertificateRejected {
        name: spec.name.to_string(),
        reason,
    };
    f.validate(d).map_err(|e| reject(e.to_string()))?;
    if f.weight() != weight {
        return Err(reject(format!("weight {} != {weight}", f.weight())));
    }
    for claim in spec.name.claims() {
        if !claim.holds(&f, g, d) {
            return Err(reject(format!("{} fails", claim.name())));
        }
    }
    Ok(f)
}

fn check_len(f: &Broadcast, g: &Graph) -> Result<()> {
    if f.len() != g.n() {
        return Err(Error::LengthMismatch {
            left: f.len(),
            right: g.n(),
        });
    }
    Ok(())
}

/// Lowers `f(v)` by one, where `v` broadcasts with an empty private boundary
/// in a dominating bn-independent broadcast.
pub fn decrement_reduction(
    f: &Broadcast,
    v: usize,
    g: &Graph,
    d: &DistanceMatrix,
) -> Result<Broadcast> {
    check_len(f, g)?;
    if v >= g.n() || f.strength(v) == 0 {
        return Err(Error::Precondition(format!(
            "vertex {v} is not broadcasting"
        )));
    }
    if !is_dominating(f, g, d) || !is_bn_independent(f, g, d) {
        return Err(Error::Precondition(
            "broadcast must be dominating and bn-independent".into(),
        ));
    }
    let a = analyze(f, g, d)?;
    if !a.private_boundary(v).is_empty() {
        return Err(Error::Precondition(format!(
            "vertex {v} has a nonempty private boundary"
        )));
    }
    let reduced = f.with(v, f.strength(v) - 1);
    let post = analyze(&reduced, g, d)?;
    let sets = post.sets(v);
    let ok = is_dominating(&reduced, g, d)
        && is_bn_independent(&reduced, g, d)
        && sets.is_some_and(|s| {
            let inside = s.boundary.iter().all(|u| s.private_boundary.contains(u));
            !s.boundary.is_empty()
                && inside
                && (s.strength == 1 || s.boundary == s.private_boundary)
        });
    if !ok {
        return Err(Error::Precondition(
            "input is not of the form the reduction applies to".into(),
        ));
    }
    Ok(reduced)
}

/// Repeatedly decrements the least-index broadcaster with an empty private
/// boundary until the broadcast is irredundant. Returns the result and the
/// number of decrements.
pub fn irredundant_reduction(
    f: &Broadcast,
    g: &Graph,
    d: &DistanceMatrix,
) -> Result<(Broadcast, usize)> {
    check_len(f, g)?;
    f.validate(d)?;
    if !is_dominating(f, g, d) || !is_bn_independent(f, g, d) {
        return Err(Error::Precondition(
            "broadcast must be dominating and bn-independent".into(),
        ));
    }
    let mut cur = f.clone();
    let mut steps = 0;
    loop {
        let a = analyze(&cur, g, d)?;
        let Some(v) = a
            .broadcasters
            .iter()
            .find(|b| b.private_boundary.is_empty())
            .map(|b| b.vertex)
        else {
            break;
        };
        cur = cur.with(v, cur.strength(v) - 1);
        steps += 1;
    }
    debug_assert!(is_dominating(&cur, g, d));
    debug_assert_eq!(cur.weight() as usize + steps, f.weight() as usize);
    Ok((cur, steps))
}
