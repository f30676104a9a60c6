//! The distance function `v`, Varchenko matrices, their determinants, face
//! multiplicities, and the factorization checks built on them.

use std::fmt;

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::apartments::Apartment;
use crate::error::{Error, Result};
use crate::faces::{FaceComplex, FaceId, Sign};
use crate::modp;
use crate::polyring::{weight_monomial, Monomial, Polynomial, VarId};
use crate::report::{Counterexample, Details, ReportEntry};

/// Square matrix with `entry(C, D) = v(D, C)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VMatrix {
    labels: Vec<FaceId>,
    num_hyperplanes: usize,
    entries: Vec<Polynomial>,
}

impl VMatrix {
    /// A matrix given explicitly, row-major; rows are labelled `0..size`.
    pub fn from_entries(size: usize, num_hyperplanes: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::NotSquare(entries.len()));
        }
        Ok(VMatrix { labels: (0..size).map(FaceId).collect(), num_hyperplanes, entries })
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn num_hyperplanes(&self) -> usize {
        self.num_hyperplanes
    }

    /// Chamber ids indexing rows and columns.
    pub fn labels(&self) -> &[FaceId] {
        &self.labels
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row * self.size() + col]
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    /// Diagonal of ones; off-diagonal square-free monomials such that
    /// `entry(C, D) · entry(D, C)` is `∏ h_H^+ h_H^-` over the hyperplanes involved.
    pub fn check_shape(&self) -> std::result::Result<(), String> {
        let n = self.size();
        for i in 0..n {
            if !self.entry(i, i).is_one() {
                return Err(format!("diagonal entry {i} is not 1"));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let m = self.entry(i, j).as_monomial().ok_or(format!("entry ({i},{j}) is not a monomial"))?;
                if !m.is_square_free() || m.is_one() {
                    return Err(format!("entry ({i},{j}) is not a square-free nonconstant monomial"));
                }
                let t = self.entry(j, i).as_monomial().ok_or(format!("entry ({j},{i}) is not a monomial"))?;
                let hs: Vec<usize> = m.iter().map(|(v, _)| v.hyperplane).collect();
                let ht: Vec<usize> = t.iter().map(|(v, _)| v.hyperplane).collect();
                if hs != ht || m.mul(t) != weight_monomial(&hs) {
                    return Err(format!("entries ({i},{j}) and ({j},{i}) do not use opposite variables"));
                }
            }
        }
        Ok(())
    }

    pub fn evaluate(&self, assignment: &Assignment, p: u64) -> Vec<u64> {
        self.entries.iter().map(|e| e.eval_mod_p(|v| assignment.value(v), p)).collect()
    }
}

/// `ℋ(C, D)`: the half-spaces containing `C` but not `D`.
pub fn separator_set(c: &FaceComplex, a: FaceId, b: FaceId) -> Result<Vec<(usize, Sign)>> {
    c.require_chamber(a)?;
    c.require_chamber(b)?;
    let (sa, sb) = (c.signs(a).signs(), c.signs(b).signs());
    Ok((0..sa.len()).filter(|&h| sa[h] == -sb[h]).map(|h| (h, sa[h])).collect())
}

fn distance_monomial(sa: &[Sign], sb: &[Sign]) -> Monomial {
    Monomial::product_of((0..sa.len()).filter(|&h| sa[h] == -sb[h] && !sa[h].is_zero()).map(|h| VarId::new(h, sa[h])))
}

/// The distance `v(C, D)`.
pub fn distance(c: &FaceComplex, a: FaceId, b: FaceId) -> Result<Polynomial> {
    c.require_chamber(a)?;
    c.require_chamber(b)?;
    Ok(Polynomial::monomial(distance_monomial(c.signs(a).signs(), c.signs(b).signs())))
}

pub fn varchenko_matrix(c: &FaceComplex, chambers: &[FaceId]) -> Result<VMatrix> {
    for &ch in chambers {
        c.require_chamber(ch)?;
    }
    let mut entries = Vec::with_capacity(chambers.len() * chambers.len());
    for &row in chambers {
        for &col in chambers {
            entries.push(Polynomial::monomial(distance_monomial(c.signs(col).signs(), c.signs(row).signs())));
        }
    }
    Ok(VMatrix { labels: chambers.to_vec(), num_hyperplanes: c.arrangement().len(), entries })
}

/// Laplace expansion along the first row.
pub fn det_cofactor(entries: &[Polynomial], n: usize) -> Polynomial {
    fn expand(entries: &[Polynomial], n: usize, row: usize, cols: &mut Vec<usize>) -> Polynomial {
        if cols.is_empty() {
            return Polynomial::one();
        }
        let mut acc = Polynomial::zero();
        for k in 0..cols.len() {
            let col = cols[k];
            let a = &entries[row * n + col];
            if a.is_zero() {
                continue;
            }
            cols.remove(k);
            let minor = expand(entries, n, row + 1, cols);
            cols.insert(k, col);
            let term = a * &minor;
            acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }
    expand(entries, n, 0, &mut (0..n).collect())
}

/// Fraction-free elimination; every division is exact.
pub fn det_bareiss(mut m: Vec<Polynomial>, n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Ok(Polynomial::one());
    }
    let mut negate = false;
    let mut prev = Polynomial::one();
    for k in 0..n - 1 {
        if m[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i * n + k].is_zero()) else {
                return Ok(Polynomial::zero());
            };
            for j in 0..n {
                m.swap(k * n + j, p * n + j);
            }
            negate = !negate;
        }
        let pivot = m[k * n + k].clone();
        for i in k + 1..n {
            let lead = m[i * n + k].clone();
            for j in k + 1..n {
                let num = &(&pivot * &m[i * n + j]) - &(&lead * &m[k * n + j]);
                m[i * n + j] = num.exact_div(&prev)?;
            }
            m[i * n + k] = Polynomial::zero();
        }
        prev = pivot;
    }
    let det = m[n * n - 1].clone();
    Ok(if negate { -det } else { det })
}

pub const COFACTOR_LIMIT: usize = 6;

/// Exact determinant: cofactor expansion up to [`COFACTOR_LIMIT`], Bareiss above.
pub fn det_symbolic(m: &VMatrix) -> Result<Polynomial> {
    if m.size() <= COFACTOR_LIMIT {
        Ok(det_cofactor(&m.entries, m.size()))
    } else {
        det_bareiss(m.entries.clone(), m.size())
    }
}

/// Values in `Z/p` for every variable `h_H^±`, indexed `2H` and `2H + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    values: Vec<u64>,
}

impl Assignment {
    pub fn new(values: Vec<u64>) -> Self {
        Assignment { values }
    }

    pub fn constant(num_hyperplanes: usize, value: u64) -> Self {
        Assignment { values: vec![value; 2 * num_hyperplanes] }
    }

    /// Uniform values in `[0, p)`; depends only on `(seed, trial)`.
    pub fn random(num_hyperplanes: usize, seed: u64, trial: u64, p: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        Assignment { values: (0..2 * num_hyperplanes).map(|_| rng.gen_range(0..p)).collect() }
    }

    pub fn value(&self, v: VarId) -> u64 {
        let slot = 2 * v.hyperplane + usize::from(v.sign == Sign::Minus);
        self.values[slot]
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// First 16 hex digits of the SHA-256 of the little-endian values.
    pub fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        for v in &self.values {
            hasher.update(v.to_le_bytes());
        }
        hasher.finalize().iter().take(8).map(|b| format!("{b:02x}")).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularTrial {
    pub trial: u64,
    pub assignment: Assignment,
    pub value: u64,
}

pub fn det_at(m: &VMatrix, assignment: &Assignment, p: u64) -> u64 {
    modp::determinant(m.evaluate(assignment, p), m.size(), p)
}

/// Determinant at `trials` random points; trials may run in parallel but the
/// result is ordered by trial index.
pub fn det_modular(m: &VMatrix, seed: u64, trials: u64, p: u64) -> Vec<ModularTrial> {
    (0..trials)
        .into_par_iter()
        .map(|trial| {
            let assignment = Assignment::random(m.num_hyperplanes(), seed, trial, p);
            let value = det_at(m, &assignment, p);
            ModularTrial { trial, assignment, value }
        })
        .collect()
}

/// Whether `C̄ ∩ H` is exactly the closure of `F`.
fn closure_meets_hyperplane_in(c: &FaceComplex, chamber: FaceId, h: usize, f: FaceId) -> bool {
    let on_h = c.closure_faces(chamber).into_iter().filter(|&g| c.signs(g).get(h).is_zero());
    let mut contains_f = false;
    for g in on_h {
        if g == f {
            contains_f = true;
        }
        if !c.leq(g, f) {
            return false;
        }
    }
    contains_f
}

/// `β_F^H`: half the number of chambers in `chambers` whose closure meets
/// `H` exactly in `F̄`.
pub fn multiplicity(c: &FaceComplex, f: FaceId, h: usize, chambers: &[FaceId]) -> Result<u32> {
    let zeros = c.centralization(f)?;
    if !zeros.contains(&h) {
        return Err(Error::NotInCentralization { face: f.0, hyperplane: h });
    }
    let count = chambers.iter().filter(|&&ch| closure_meets_hyperplane_in(c, ch, h, f)).count();
    if count % 2 == 1 {
        return Err(Error::OddMultiplicity { face: f.0, hyperplane: h, count });
    }
    Ok((count / 2) as u32)
}

/// `β_F^H` for every `H ∈ A_F`.
pub fn multiplicities(c: &FaceComplex, f: FaceId, chambers: &[FaceId]) -> Result<Vec<(usize, u32)>> {
    c.centralization(f)?.into_iter().map(|h| multiplicity(c, f, h, chambers).map(|b| (h, b))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub face: FaceId,
    pub weight: Monomial,
    pub exponent: u32,
}

/// `∏ (1 - b_F)^{β_F}` kept in factored form.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FactoredDet {
    pub factors: Vec<Factor>,
}

impl FactoredDet {
    pub fn expand(&self) -> Polynomial {
        let mut acc = Polynomial::one();
        for factor in self.factors.iter().filter(|f| f.exponent > 0) {
            let base = &Polynomial::one() - &Polynomial::monomial(factor.weight.clone());
            acc = &acc * &base.pow(factor.exponent);
        }
        acc
    }

    pub fn eval_mod_p(&self, assignment: &Assignment, p: u64) -> u64 {
        self.factors.iter().fold(1 % p, |acc, factor| {
            let b = Polynomial::monomial(factor.weight.clone()).eval_mod_p(|v| assignment.value(v), p);
            modp::mul(acc, modp::pow(modp::sub(1, b, p), factor.exponent as u64, p), p)
        })
    }

    /// Exponents summed per distinct weight, ordered by degree and then by
    /// hyperplane indices.
    pub fn by_weight(&self) -> Vec<(Monomial, u32)> {
        let mut acc: std::collections::BTreeMap<Monomial, u32> = Default::default();
        for f in &self.factors {
            if f.exponent > 0 {
                *acc.entry(f.weight.clone()).or_default() += f.exponent;
            }
        }
        let mut out: Vec<(Monomial, u32)> = acc.into_iter().collect();
        out.sort_by_key(|(m, _)| (m.degree(), m.iter().map(|(v, _)| v.hyperplane).collect::<Vec<_>>()));
        out
    }
}

impl fmt::Display for FactoredDet {
    /// Groups equal weights: `(1 - h2^+*h2^-)^2 * (1 - h3^+*h3^-)^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_factors(&self.by_weight()))
    }
}

/// `(1 - m1)^e1 * (1 - m2)^e2 * …`, or `1` for no factors.
pub fn format_factors(factors: &[(Monomial, u32)]) -> String {
    if factors.is_empty() {
        return "1".into();
    }
    let parts: Vec<String> = factors
        .iter()
        .map(|(m, e)| {
            let vars: Vec<String> = m.iter().map(|(v, k)| if k == 1 { v.to_string() } else { format!("{v}^{k}") }).collect();
            format!("(1 - {})^{e}", vars.join("*"))
        })
        .collect();
    parts.join(" * ")
}

/// `∏ (1 - m)^e` expanded.
pub fn expand_factors(factors: &[(Monomial, u32)]) -> Polynomial {
    factors.iter().fold(Polynomial::one(), |acc, (m, e)| {
        &acc * &(&Polynomial::one() - &Polynomial::monomial(m.clone())).pow(*e)
    })
}

/// Writes `p` as `∏ (1 - b_S)^{e_S}` over weights `b_S = ∏_{H ∈ S} h_H^+ h_H^-`
/// of nonempty hyperplane sets `S`, by repeated exact division. Returns
/// `None` when something other than such factors remains or when there are
/// more than `max_hyperplanes` hyperplanes.
pub fn factor_by_weights(p: &Polynomial, num_hyperplanes: usize, max_hyperplanes: usize) -> Option<Vec<(Monomial, u32)>> {
    if num_hyperplanes > max_hyperplanes || p.is_zero() {
        return None;
    }
    let mut rest = p.clone();
    let mut found = Vec::new();
    let mut masks: Vec<u32> = (1u32..1 << num_hyperplanes).collect();
    masks.sort_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));
    for mask in masks {
        if rest.is_one() {
            break;
        }
        let hs: Vec<usize> = (0..num_hyperplanes).filter(|&h| mask >> h & 1 == 1).collect();
        let b = weight_monomial(&hs);
        let factor = &Polynomial::one() - &Polynomial::monomial(b.clone());
        let mut e = 0;
        while let Ok(q) = rest.exact_div(&factor) {
            rest = q;
            e += 1;
        }
        if e > 0 {
            found.push((b, e));
        }
    }
    if !rest.is_one() {
        return None;
    }
    found.sort_by_key(|(m, _)| (m.degree(), m.iter().map(|(v, _)| v.hyperplane).collect::<Vec<_>>()));
    Some(found)
}

/// The factored product over the non-chamber faces `faces`, with
/// multiplicities counted among `chambers` on the first hyperplane of each `A_F`.
pub fn product_formula(c: &FaceComplex, faces: &[FaceId], chambers: &[FaceId]) -> Result<FactoredDet> {
    let mut factors = Vec::new();
    for &f in faces {
        let zeros = c.centralization(f)?;
        let exponent = multiplicity(c, f, zeros[0], chambers)?;
        factors.push(Factor { face: f, weight: weight_monomial(&zeros), exponent });
    }
    Ok(FactoredDet { factors })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DetMode {
    /// Symbolic up to the threshold, modular above.
    Auto,
    Symbolic,
    Modular,
}

#[derive(Clone, Debug)]
pub struct DetConfig {
    pub mode: DetMode,
    pub symbolic_threshold: usize,
    pub trials: u64,
    pub seed: u64,
    pub prime: u64,
}

impl Default for DetConfig {
    fn default() -> Self {
        DetConfig { mode: DetMode::Auto, symbolic_threshold: 12, trials: 10, seed: 0, prime: modp::DEFAULT_PRIME }
    }
}

impl DetConfig {
    pub fn use_symbolic(&self, size: usize) -> bool {
        match self.mode {
            DetMode::Auto => size <= self.symbolic_threshold,
            DetMode::Symbolic => true,
            DetMode::Modular => false,
        }
    }
}

/// Outcome of comparing `det V_A^K` with the product formula.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub matrix: VMatrix,
    pub factored: FactoredDet,
    pub determinant: Option<Polynomial>,
    pub trials: Vec<ModularTrial>,
    pub details: Details,
}

impl Factorization {
    pub fn passed(&self) -> bool {
        self.details.counterexamples.is_empty()
    }

    pub fn into_entry(self) -> ReportEntry {
        ReportEntry::from_details("factorization", self.details)
    }
}

/// Checks that `β_F^H` is independent of `H ∈ A_F` for every non-chamber face
/// of the apartment, then compares the determinant with the product formula,
/// symbolically or at random points mod `p`.
pub fn factorization(c: &FaceComplex, apartment: &Apartment, cfg: &DetConfig) -> Result<Factorization> {
    let chambers = apartment.chambers_in(c);
    let walls: Vec<FaceId> = apartment.faces_in(c).into_iter().filter(|&f| !c.is_chamber(f)).collect();
    let mut details = Details::default();
    details.note("apartment", apartment.to_string());
    details.note("chambers", chambers.len().to_string());

    for &f in &walls {
        details.checked += 1;
        match multiplicities(c, f, &chambers) {
            Ok(betas) => {
                if betas.iter().any(|&(_, b)| b != betas[0].1) {
                    let listing: Vec<String> = betas.iter().map(|(h, b)| format!("H{}:{b}", h + 1)).collect();
                    details.counterexamples.push(Counterexample::new(
                        format!("multiplicity depends on the hyperplane: {}", listing.join(" ")),
                        vec![f],
                    ));
                }
            }
            Err(e) => details.counterexamples.push(Counterexample::new(e.to_string(), vec![f])),
        }
    }
    let factored = product_formula(c, &walls, &chambers)?;
    details.note("factored", factored.to_string());

    let matrix = varchenko_matrix(c, &chambers)?;
    let mut determinant = None;
    let mut trials = Vec::new();
    details.checked += 1;
    if cfg.use_symbolic(chambers.len()) {
        details.note("mode", "symbolic");
        let det = det_symbolic(&matrix)?;
        let expanded = factored.expand();
        if !det.constant_term().is_one() {
            details.counterexamples.push(
                Counterexample::new("determinant constant term is not 1", vec![]).with_polynomials(vec![det.to_string()]),
            );
        }
        if det != expanded {
            details.counterexamples.push(
                Counterexample::new("determinant differs from the product formula", chambers.clone())
                    .with_polynomials(vec![det.to_string(), expanded.to_string()]),
            );
        }
        determinant = Some(det);
    } else {
        details.note("mode", "modular");
        details.note("seed", cfg.seed.to_string());
        details.note("prime", cfg.prime.to_string());
        trials = det_modular(&matrix, cfg.seed, cfg.trials, cfg.prime);
        for t in &trials {
            let expected = factored.eval_mod_p(&t.assignment, cfg.prime);
            if expected != t.value {
                details.counterexamples.push(
                    Counterexample::new(
                        format!(
                            "trial {} ({}): determinant {} != product {}",
                            t.trial,
                            t.assignment.digest(),
                            t.value,
                            expected
                        ),
                        vec![],
                    )
                    .with_polynomials(vec![]),
                );
            }
        }
        details.note("trials", trials.len().to_string());
    }
    Ok(Factorization { matrix, factored, determinant, trials, details })
}

/// Report-entry form of [`factorization`]; errors become failures.
pub fn verify_factorization(c: &FaceComplex, apartment: &Apartment, cfg: &DetConfig) -> ReportEntry {
    match factorization(c, apartment, cfg) {
        Ok(f) => f.into_entry(),
        Err(e) => {
            let mut details = Details::default();
            details.note("apartment", apartment.to_string());
            details.counterexamples.push(Counterexample::new(e.to_string(), vec![]));
            ReportEntry::from_details("factorization", details)
        }
    }
}

/// `v(C, D) = v(C, FD) v(FD, D)` for all chambers `C, D` and faces `F ⪯ C`.
pub fn v_path_identity_check(c: &FaceComplex) -> ReportEntry {
    let mut details = Details::default();
    for &a in c.chambers() {
        let closure = c.closure_faces(a);
        for &b in c.chambers() {
            let direct = distance_monomial(c.signs(a).signs(), c.signs(b).signs());
            for &f in &closure {
                details.checked += 1;
                let fd = match c.tits_product(f, b) {
                    Ok(fd) => fd,
                    Err(e) => {
                        details.counterexamples.push(Counterexample::new(e.to_string(), vec![a, b, f]));
                        continue;
                    }
                };
                let via = distance_monomial(c.signs(a).signs(), c.signs(fd).signs())
                    .mul(&distance_monomial(c.signs(fd).signs(), c.signs(b).signs()));
                if via != direct {
                    details.counterexamples.push(
                        Counterexample::new("v(C,D) != v(C,FD) v(FD,D)", vec![a, b, f])
                            .with_polynomials(vec![direct.to_string(), via.to_string()]),
                    );
                }
            }
        }
    }
    ReportEntry::from_details("v_path", details)
}

/// `m(A, D)`: coordinate `v(D, C)` at every chamber `C` with `AC = D`, zero elsewhere.
pub fn m_vector(c: &FaceComplex, a: FaceId, d: FaceId) -> Result<Vec<Polynomial>> {
    c.require_chamber(d)?;
    if !c.leq(a, d) {
        return Err(Error::NotNested { lower: a.0, upper: d.0 });
    }
    c.chambers()
        .iter()
        .map(|&ch| Ok(if c.tits_product(a, ch)? == d { distance(c, d, ch)? } else { Polynomial::zero() }))
        .collect()
}

fn signed(p: &Polynomial, negative: bool) -> Polynomial {
    if negative {
        -p
    } else {
        p.clone()
    }
}

fn mad_pair(c: &FaceComplex, a: FaceId, d: FaceId) -> Result<Option<Counterexample>> {
    let len = c.chambers().len();
    let mut lhs = vec![Polynomial::zero(); len];
    for f in c.nested_interval(a, d)? {
        let m = m_vector(c, f, d)?;
        let neg = c.rank(f) % 2 == 1;
        for (acc, x) in lhs.iter_mut().zip(&m) {
            *acc = &*acc + &signed(x, neg);
        }
    }
    let opposite = c.opposite_through(a, d)?;
    let scale = signed(&distance(c, d, opposite)?, c.rank(d) % 2 == 1);
    let rhs: Vec<Polynomial> = m_vector(c, a, opposite)?.iter().map(|x| &scale * x).collect();
    for (k, (l, r)) in lhs.iter().zip(&rhs).enumerate() {
        if l != r {
            return Ok(Some(
                Counterexample::new(format!("coordinate at chamber {}", c.chambers()[k]), vec![a, d])
                    .with_polynomials(vec![l.to_string(), r.to_string()]),
            ));
        }
    }
    Ok(None)
}

/// `Σ_{F ∈ [A, D]} (-1)^{rk F} m(F, D) = (-1)^{rk D} v(D, D̃_A) m(A, D̃_A)`
/// for every nested pair `(A, D)` with `D` a chamber.
pub fn mad_recurrence_check(c: &FaceComplex) -> ReportEntry {
    let pairs = c.nested_pairs_to_chambers();
    let outcomes: Vec<Result<Option<Counterexample>>> =
        pairs.par_iter().map(|pair| mad_pair(c, pair.lower, pair.upper)).collect();
    let mut details = Details::default();
    for (pair, outcome) in pairs.iter().zip(outcomes) {
        details.checked += 1;
        match outcome {
            Ok(None) => {}
            Ok(Some(cx)) => details.counterexamples.push(cx),
            Err(e) => details.counterexamples.push(Counterexample::new(e.to_string(), vec![pair.lower, pair.upper])),
        }
    }
    ReportEntry::from_details("mad_recurrence", details)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::faces::{enumerate_faces, SignVector};
    use crate::geometry::{Arrangement, Hyperplane};

    fn complex(dim: usize, hs: &[(&[i64], i64)]) -> FaceComplex {
        let arr =
            Arrangement::new(dim, hs.iter().map(|(a, b)| Hyperplane::from_ints(a, *b).unwrap()).collect()).unwrap();
        enumerate_faces(&arr).unwrap()
    }

    fn id(c: &FaceComplex, s: &str) -> FaceId {
        c.lookup(SignVector::parse(s).unwrap().signs()).unwrap()
    }

    fn hh(h: usize) -> Polynomial {
        &Polynomial::one() - &Polynomial::monomial(weight_monomial(&[h]))
    }

    #[test]
    fn separators_and_distances() {
        let c = complex(1, &[(&[1], 0)]);
        let (p, m) = (id(&c, "+"), id(&c, "-"));
        assert!(separator_set(&c, p, p).unwrap().is_empty());
        assert_eq!(separator_set(&c, p, m).unwrap(), vec![(0, Sign::Plus)]);
        assert!(distance(&c, p, p).unwrap().is_one());
        assert_eq!(distance(&c, p, m).unwrap(), Polynomial::var(VarId::plus(0)));
        assert!(separator_set(&c, id(&c, "0"), p).is_err());

        let c = complex(2, &[(&[1, 0], 0), (&[0, 1], 0)]);
        assert_eq!(separator_set(&c, id(&c, "++"), id(&c, "--")).unwrap(), vec![(0, Sign::Plus), (1, Sign::Plus)]);
    }

    #[test]
    fn r1_matrix_and_determinant() {
        let c = complex(1, &[(&[1], 0)]);
        let m = varchenko_matrix(&c, c.chambers()).unwrap();
        assert!(m.entry(0, 0).is_one());
        assert_eq!(*m.entry(0, 1), Polynomial::var(VarId::minus(0)));
        assert_eq!(*m.entry(1, 0), Polynomial::var(VarId::plus(0)));
        m.check_shape().unwrap();
        assert_eq!(det_symbolic(&m).unwrap(), hh(0));
        let a = Assignment::new(vec![2, 3]);
        assert_eq!(det_at(&m, &a, 101), 96);
        assert_eq!(det_at(&m, &Assignment::constant(1, 0), 101), 1);
    }

    #[test]
    fn crossing_lines_determinant() {
        let c = complex(2, &[(&[1, 0], 0), (&[0, 1], 0)]);
        let m = varchenko_matrix(&c, c.chambers()).unwrap();
        let expected = &hh(0).pow(2) * &hh(1).pow(2);
        assert_eq!(det_cofactor(m.entries(), 4), expected);
        assert_eq!(det_bareiss(m.entries().to_vec(), 4).unwrap(), expected);
    }

    #[test]
    fn multiplicities_on_small_complexes() {
        let c = complex(1, &[(&[1], 0)]);
        assert_eq!(multiplicity(&c, id(&c, "0"), 0, c.chambers()).unwrap(), 1);

        let c = complex(2, &[(&[1, 0], 0), (&[0, 1], 0)]);
        assert_eq!(multiplicity(&c, id(&c, "00"), 0, c.chambers()).unwrap(), 0);
        assert_eq!(multiplicity(&c, id(&c, "0+"), 0, c.chambers()).unwrap(), 1);
        assert_eq!(multiplicity(&c, id(&c, "0-"), 0, c.chambers()).unwrap(), 1);
        assert!(matches!(
            multiplicity(&c, id(&c, "0+"), 1, c.chambers()),
            Err(Error::NotInCentralization { .. })
        ));
    }

    #[test]
    fn product_formulas() {
        let c = complex(1, &[(&[1], 0)]);
        let walls = vec![id(&c, "0")];
        assert_eq!(product_formula(&c, &walls, c.chambers()).unwrap().expand(), hh(0));

        let c = complex(2, &[(&[1, 0], 0), (&[0, 1], 0)]);
        let walls: Vec<FaceId> = c.ids().filter(|&f| !c.is_chamber(f)).collect();
        let fd = product_formula(&c, &walls, c.chambers()).unwrap();
        assert_eq!(fd.expand(), &hh(0).pow(2) * &hh(1).pow(2));
        assert_eq!(fd.to_string(), "(1 - h1^+*h1^-)^2 * (1 - h2^+*h2^-)^2");
    }

    #[test]
    fn recovering_weight_factors() {
        let c = complex(2, &[(&[1, 0], 0), (&[0, 1], 0)]);
        let det = det_symbolic(&varchenko_matrix(&c, c.chambers()).unwrap()).unwrap();
        let found = factor_by_weights(&det, 2, 8).unwrap();
        assert_eq!(format_factors(&found), "(1 - h1^+*h1^-)^2 * (1 - h2^+*h2^-)^2");
        assert_eq!(expand_factors(&found), det);
        let odd = &det + &Polynomial::var(VarId::plus(0));
        assert!(factor_by_weights(&odd, 2, 8).is_none());
        assert_eq!(factor_by_weights(&Polynomial::one(), 2, 8), Some(vec![]));
    }

    #[test]
    fn modular_trials_are_deterministic() {
        let c = complex(2, &[(&[1, 0], 0), (&[0, 1], 0)]);
        let m = varchenko_matrix(&c, c.chambers()).unwrap();
        let a = det_modular(&m, 42, 8, modp::DEFAULT_PRIME);
        let b = det_modular(&m, 42, 8, modp::DEFAULT_PRIME);
        assert_eq!(a, b);
        assert_eq!(a.len(), 8);
        let walls: Vec<FaceId> = c.ids().filter(|&f| !c.is_chamber(f)).collect();
        let fd = product_formula(&c, &walls, c.chambers()).unwrap();
        let det = det_symbolic(&m).unwrap();
        for t in &a {
            assert_eq!(t.value, fd.eval_mod_p(&t.assignment, modp::DEFAULT_PRIME));
            assert_eq!(t.value, det.eval_mod_p(|v| t.assignment.value(v), modp::DEFAULT_PRIME));
        }
    }

    #[test]
    fn m_vectors() {
        let c = complex(1, &[(&[1], 0)]);
        let (z, p) = (id(&c, "0"), id(&c, "+"));
        let v = m_vector(&c, z, p).unwrap();
        assert!(v[c.chamber_index(p).unwrap()].is_one());
        assert!(v[c.chamber_index(id(&c, "-")).unwrap()].is_zero());
        let dd = m_vector(&c, p, p).unwrap();
        for &ch in c.chambers() {
            assert_eq!(dd[c.chamber_index(ch).unwrap()], distance(&c, p, ch).unwrap());
        }

        let c = complex(2, &[(&[1, 0], 0), (&[0, 1], 0)]);
        let pp = id(&c, "++");
        let v = m_vector(&c, id(&c, "00"), pp).unwrap();
        assert_eq!(v.iter().filter(|x| !x.is_zero()).count(), 1);
        assert!(v[c.chamber_index(pp).unwrap()].is_one());
    }

    #[test]
    fn identity_checks_on_small_complexes() {
        for c in [
            complex(1, &[(&[1], 0)]),
            complex(2, &[(&[1, 0], 0), (&[0, 1], 0)]),
            complex(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], 1)]),
        ] {
            let e = v_path_identity_check(&c);
            assert!(e.passed(), "{e:?}");
            let e = mad_recurrence_check(&c);
            assert!(e.passed(), "{e:?}");
        }
    }

    #[test]
    fn factorization_for_r1() {
        let c = complex(1, &[(&[1], 0)]);
        let e = verify_factorization(&c, &Apartment::whole_space(), &DetConfig::default());
        assert!(e.passed(), "{e:?}");
    }
}
