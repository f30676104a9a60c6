//! Euler characteristics of chamber closures, chamber types, and the two
//! Euler-characteristic lemmas on chambers and panel removals.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::faces::{FaceComplex, FaceId};
use crate::geometry::is_bounded;
use crate::report::{Counterexample, Details, ReportEntry};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChamberType {
    Bounded,
    Type1,
    Type2,
    Type3,
    Unknown,
}

impl ChamberType {
    /// `χ(C̄)` for chambers of this type in `R^n`.
    pub fn predicted_euler(self, n: usize) -> Option<i64> {
        match self {
            ChamberType::Bounded => Some(1),
            ChamberType::Type1 => Some(0),
            ChamberType::Type2 => Some(-1),
            ChamberType::Type3 => Some(parity(n + 1)),
            ChamberType::Unknown => None,
        }
    }
}

fn parity(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Σ_{F ⪯ D} (-1)^{dim F}`.
pub fn euler_closure(c: &FaceComplex, d: FaceId) -> Result<i64> {
    c.require_chamber(d)?;
    Ok(c.closure_faces(d).into_iter().map(|f| parity(c.face(f).dim)).sum())
}

pub fn face_is_bounded(c: &FaceComplex, f: FaceId) -> Result<bool> {
    let arr = c.arrangement();
    is_bounded(arr.dim(), &arr.constraints(c.signs(f).signs()))
}

/// Connected components of `∂D`, two frontier faces touching when one lies
/// in the closure of the other.
pub fn frontier_components(c: &FaceComplex, d: FaceId) -> Result<Vec<Vec<FaceId>>> {
    c.require_chamber(d)?;
    let frontier: Vec<FaceId> = c.closure_faces(d).into_iter().filter(|&f| f != d).collect();
    let mut parent: Vec<usize> = (0..frontier.len()).collect();
    fn root(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..frontier.len() {
        for j in i + 1..frontier.len() {
            if c.leq(frontier[i], frontier[j]) || c.leq(frontier[j], frontier[i]) {
                let (a, b) = (root(&mut parent, i), root(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<FaceId>> = Default::default();
    for i in 0..frontier.len() {
        let r = root(&mut parent, i);
        groups.entry(r).or_default().push(frontier[i]);
    }
    Ok(groups.into_values().collect())
}

fn parallel(c: &FaceComplex, a: usize, b: usize) -> bool {
    let hs = c.arrangement().hyperplanes();
    crate::geometry::affine_rank(&[hs[a].normal().to_vec(), hs[b].normal().to_vec()]) == 1
}

/// Bounded by LP; otherwise by frontier components in the plane and by
/// `χ(D̄)` (checked against the component count) in other dimensions.
pub fn classify(c: &FaceComplex, d: FaceId) -> Result<ChamberType> {
    if face_is_bounded(c, d)? {
        return Ok(ChamberType::Bounded);
    }
    let n = c.dim();
    let components = frontier_components(c, d)?.len();
    if n == 2 {
        return Ok(match components {
            1 => ChamberType::Type1,
            2 => {
                let panels = c.panels(d)?;
                let lines: Vec<usize> = panels.iter().map(|&p| c.signs(p).zero_set()[0]).collect();
                if panels.len() == 2 && parallel(c, lines[0], lines[1]) {
                    ChamberType::Type3
                } else {
                    ChamberType::Type2
                }
            }
            _ => ChamberType::Unknown,
        });
    }
    let by_euler = classify_by_euler(n, euler_closure(c, d)?, components);
    Ok(by_euler)
}

/// The unbounded type whose Euler characteristic is `chi` and whose frontier
/// has `components` components, if exactly one fits.
pub fn classify_by_euler(n: usize, chi: i64, components: usize) -> ChamberType {
    let candidates: Vec<ChamberType> = [(ChamberType::Type1, 1), (ChamberType::Type2, 1), (ChamberType::Type3, 2)]
        .into_iter()
        .filter(|&(t, k)| t.predicted_euler(n) == Some(chi) && k == components)
        .map(|(t, _)| t)
        .collect();
    match candidates.as_slice() {
        [t] => *t,
        _ => ChamberType::Unknown,
    }
}

fn shares_ridge(c: &FaceComplex, a: FaceId, b: FaceId) -> bool {
    let n = c.dim();
    n >= 2 && c.ids().any(|g| c.face(g).dim + 2 == n && c.leq(g, a) && c.leq(g, b))
}

/// Whether `panels` is a nonempty proper subset of the panels of `chamber`
/// whose members each share a codimension-two face with another member.
pub fn admissible_panels(c: &FaceComplex, chamber: FaceId, panels: &[FaceId]) -> Result<()> {
    let all = c.panels(chamber)?;
    if panels.is_empty() {
        return Err(Error::InvalidPanelSubset("empty".into()));
    }
    if let Some(p) = panels.iter().find(|p| !all.contains(p)) {
        return Err(Error::InvalidPanelSubset(format!("face {p} is not a panel of {chamber}")));
    }
    let mut distinct = panels.to_vec();
    distinct.sort();
    distinct.dedup();
    if distinct.len() == all.len() {
        return Err(Error::InvalidPanelSubset("all panels".into()));
    }
    if distinct.len() > 1 {
        for &p in &distinct {
            if !distinct.iter().any(|&q| q != p && shares_ridge(c, p, q)) {
                return Err(Error::InvalidPanelSubset(format!("panel {p} meets no other panel in codimension two")));
            }
        }
    }
    Ok(())
}

/// `χ(C̄ \ ∪ F̄_j)` for an admissible set of panels.
pub fn euler_closure_minus_panels(c: &FaceComplex, chamber: FaceId, panels: &[FaceId]) -> Result<i64> {
    admissible_panels(c, chamber, panels)?;
    Ok(c.closure_faces(chamber)
        .into_iter()
        .filter(|&g| !panels.iter().any(|&p| c.leq(g, p)))
        .map(|g| parity(c.face(g).dim))
        .sum())
}

/// `-1` for a type-1 chamber with bounded panel union, `0` otherwise.
pub fn predicted_minus_panels(c: &FaceComplex, kind: ChamberType, panels: &[FaceId]) -> Result<i64> {
    if kind != ChamberType::Type1 {
        return Ok(0);
    }
    for &p in panels {
        if !face_is_bounded(c, p)? {
            return Ok(0);
        }
    }
    Ok(-1)
}

/// `χ(C̄)` against the type table; unclassified chambers are skipped.
pub fn lemma_ch_check(c: &FaceComplex) -> ReportEntry {
    let mut details = Details::default();
    for &d in c.chambers() {
        let outcome = classify(c, d).and_then(|t| Ok((t, euler_closure(c, d)?)));
        match outcome {
            Ok((ChamberType::Unknown, _)) => details.skipped += 1,
            Ok((t, chi)) => {
                details.checked += 1;
                let expected = t.predicted_euler(c.dim()).unwrap_or_default();
                if chi != expected {
                    details
                        .counterexamples
                        .push(Counterexample::new(format!("{t:?} chamber has χ = {chi}, expected {expected}"), vec![d]));
                }
            }
            Err(e) => details.counterexamples.push(Counterexample::new(e.to_string(), vec![d])),
        }
    }
    ReportEntry::from_details("lemma_ch", details)
}

/// Every admissible panel subset of every chamber in `panel_limit`-panel
/// chambers or smaller.
pub fn admissible_subsets(c: &FaceComplex, chamber: FaceId, panel_limit: usize) -> Result<Vec<Vec<FaceId>>> {
    let all = c.panels(chamber)?;
    if all.len() > panel_limit {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << all.len()) - 1 {
        let subset: Vec<FaceId> = (0..all.len()).filter(|&i| mask >> i & 1 == 1).map(|i| all[i]).collect();
        if admissible_panels(c, chamber, &subset).is_ok() {
            out.push(subset);
        }
    }
    Ok(out)
}

pub const PANEL_LIMIT: usize = 16;

/// `χ(C̄ \ ∪ F̄_j)` against the two-case prediction for every admissible
/// panel subset; unclassified chambers are skipped.
pub fn lemma_chm_check(c: &FaceComplex) -> ReportEntry {
    let mut details = Details::default();
    for &d in c.chambers() {
        let mut run = || -> Result<()> {
            let kind = classify(c, d)?;
            let subsets = admissible_subsets(c, d, PANEL_LIMIT)?;
            if kind == ChamberType::Unknown {
                details.skipped += subsets.len().max(1) as u64;
                return Ok(());
            }
            for j in subsets {
                details.checked += 1;
                let chi = euler_closure_minus_panels(c, d, &j)?;
                let expected = predicted_minus_panels(c, kind, &j)?;
                if chi != expected {
                    let mut faces = vec![d];
                    faces.extend(&j);
                    details.counterexamples.push(Counterexample::new(
                        format!("{kind:?} chamber minus panels has χ = {chi}, expected {expected}"),
                        faces,
                    ));
                }
            }
            Ok(())
        };
        if let Err(e) = run() {
            details.counterexamples.push(Counterexample::new(e.to_string(), vec![d]));
        }
    }
    ReportEntry::from_details("lemma_chm", details)
}
