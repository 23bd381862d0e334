//! Exhaustive checks of the Poincaré polynomial equality, Bruhat closure of
//! Schubert point sets, maximality of standard points and dominance
//! inclusions, plus scans over families of shapes.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rewrite::{normalize_deletion, DeletionSite};
use crate::schubert_points::{schubert_point, SchubertPoints};
use crate::shapes::{dominance_leq, Partition};
use crate::springer::{springer_poincare, EllVector};
use crate::weyl::{
    bruhat_leq, canonical_factorization, union_of_ideals, Permutation, PoincarePolynomial,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Claim {
    Theorem1,
    Closure,
    Deletion,
    Maximality,
    Dominance,
}

impl Claim {
    pub fn id(self) -> &'static str {
        match self {
            Claim::Theorem1 => "theorem1",
            Claim::Closure => "closure",
            Claim::Deletion => "deletion",
            Claim::Maximality => "maximality",
            Claim::Dominance => "dominance",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theorem1" => Ok(Claim::Theorem1),
            "closure" => Ok(Claim::Closure),
            "deletion" => Ok(Claim::Deletion),
            "maximality" => Ok(Claim::Maximality),
            "dominance" => Ok(Claim::Dominance),
            other => Err(Error::Parse(format!("unknown claim {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
        })
    }
}

/// The deletion that produced a witness: the letter at `pos` of string
/// `string` in the canonical factorization of `point`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeletionWitness {
    pub point: Permutation,
    pub string: usize,
    pub pos: usize,
}

/// A permutation that breaks a claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub permutation: Permutation,
    /// Reduced word from the canonical factorization.
    pub word: String,
    pub deletion: Option<DeletionWitness>,
    /// String lengths of the permutation, i.e. the ℓ-vector no tableau has.
    pub ell: EllVector,
}

impl Witness {
    pub fn new(permutation: Permutation) -> Self {
        let factorization = canonical_factorization(&permutation);
        Witness {
            word: factorization.to_word().to_string(),
            ell: EllVector::from(&factorization),
            permutation,
            deletion: None,
        }
    }

    fn with_deletion(permutation: Permutation, point: &Permutation, site: DeletionSite) -> Self {
        Witness {
            deletion: Some(DeletionWitness { point: point.clone(), string: site.string, pos: site.pos }),
            ..Witness::new(permutation)
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polynomials {
    pub springer: Option<PoincarePolynomial>,
    pub schubert_all: Option<PoincarePolynomial>,
    pub schubert_standard: Option<PoincarePolynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub shape: Partition,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub versus: Option<Partition>,
    pub claim: Claim,
    pub verdict: Verdict,
    pub polynomials: Polynomials,
    pub witnesses: Vec<Witness>,
}

impl VerificationReport {
    fn new(shape: &Partition, claim: Claim, polynomials: Polynomials, witnesses: Vec<Witness>) -> Self {
        let verdict = if witnesses.is_empty() { Verdict::Holds } else { Verdict::Fails };
        VerificationReport { shape: shape.clone(), versus: None, claim, verdict, polynomials, witnesses }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.claim, self.shape)?;
        if let Some(mu) = &self.versus {
            write!(f, " vs ({mu})")?;
        }
        write!(f, ": {}", self.verdict)?;
        let polys = [
            ("springer", &self.polynomials.springer),
            ("schubert_all", &self.polynomials.schubert_all),
            ("schubert_standard", &self.polynomials.schubert_standard),
        ];
        for (name, poly) in polys {
            if let Some(p) = poly {
                write!(f, "\n  {name}: {p}")?;
            }
        }
        for w in &self.witnesses {
            write!(f, "\n  witness {} = {} ell {}", w.permutation, w.word, w.ell)?;
            if let Some(d) = &w.deletion {
                write!(f, " from {} erasing w_{} pos {}", d.point, d.string, d.pos)?;
            }
        }
        Ok(())
    }
}

/// At most three rows or at most two columns.
pub fn is_valid_family(shape: &Partition) -> bool {
    shape.num_rows() <= 3 || shape.num_columns() <= 2
}

/// Point set of a shape with the union of its lower ideals, shared by checks.
struct ShapeData {
    points: SchubertPoints,
    union: HashSet<Permutation>,
}

impl ShapeData {
    fn new(shape: &Partition) -> Self {
        let points = SchubertPoints::new(shape);
        let union = union_of_ideals(points.points()).expect("points share the rank of the shape");
        ShapeData { points, union }
    }

    fn closure_witnesses(&self) -> Vec<Witness> {
        let mut missing: Vec<&Permutation> =
            self.union.iter().filter(|v| !self.points.contains(v)).collect();
        missing.sort();
        missing.into_iter().cloned().map(Witness::new).collect()
    }

    fn comparison(&self, shape: &Partition) -> VerificationReport {
        let standard = self.points.standard_points();
        let union_standard = union_of_ideals(&standard).expect("points share the rank of the shape");
        let springer = springer_poincare(shape);
        let all = PoincarePolynomial::from_degrees(self.union.iter().map(Permutation::length));
        let std_poly = PoincarePolynomial::from_degrees(union_standard.iter().map(Permutation::length));
        let mut witnesses = Vec::new();
        if springer != all || springer != std_poly {
            witnesses = self.closure_witnesses();
            let mut uncovered: Vec<&Permutation> =
                self.points.points().iter().filter(|w| !union_standard.contains(w)).collect();
            uncovered.sort();
            uncovered.dedup();
            witnesses.extend(uncovered.into_iter().cloned().map(Witness::new));
            if witnesses.is_empty() {
                // Equal sets with unequal polynomials means repeated points.
                witnesses.extend(repeated_points(&self.points).into_iter().map(Witness::new));
            }
        }
        let polynomials =
            Polynomials { springer: Some(springer), schubert_all: Some(all), schubert_standard: Some(std_poly) };
        VerificationReport::new(shape, Claim::Theorem1, polynomials, witnesses)
    }
}

fn repeated_points(points: &SchubertPoints) -> Vec<Permutation> {
    let mut seen = HashSet::new();
    let mut repeated: Vec<Permutation> =
        points.points().iter().filter(|w| !seen.insert(*w)).cloned().collect();
    repeated.sort();
    repeated.dedup();
    repeated
}

/// Springer polynomial against the unions of ideals of all points and of the
/// standard points, for any shape.
pub fn compare_poincare(shape: &Partition) -> VerificationReport {
    ShapeData::new(shape).comparison(shape)
}

/// Equality of the Springer polynomial with both unions of Schubert varieties.
pub fn check_theorem1(shape: &Partition) -> Result<VerificationReport> {
    if !is_valid_family(shape) {
        return Err(Error::UnsupportedShape {
            shape: shape.to_string(),
            reason: "the equality is only established for at most three rows or at most two columns",
        });
    }
    Ok(compare_poincare(shape))
}

/// Every permutation below a Schubert point is a Schubert point.
pub fn check_closure(shape: &Partition) -> VerificationReport {
    let data = ShapeData::new(shape);
    VerificationReport::new(shape, Claim::Closure, Polynomials::default(), data.closure_witnesses())
}

/// Every single-letter deletion from a Schubert point is a Schubert point.
pub fn check_deletion_closure(shape: &Partition) -> VerificationReport {
    let points = SchubertPoints::new(shape);
    let witnesses: Vec<Witness> = points
        .points()
        .par_iter()
        .flat_map_iter(|w| {
            let f = canonical_factorization(w);
            let points = &points;
            DeletionSite::all(&f).into_iter().filter_map(move |site| {
                let result = normalize_deletion(&f, site).expect("sites come from the factorization").result;
                let v = result.to_permutation();
                (!points.contains(&v)).then(|| Witness::with_deletion(v, w, site))
            })
        })
        .collect();
    VerificationReport::new(shape, Claim::Deletion, Polynomials::default(), witnesses)
}

/// Each point lies below the point of its standardization, and distinct
/// standard points are incomparable.
pub fn check_maximality(shape: &Partition) -> VerificationReport {
    let points = SchubertPoints::new(shape);
    let mut witnesses: Vec<Witness> = points
        .iter()
        .collect::<Vec<_>>()
        .par_iter()
        .filter_map(|(t, w)| {
            let top = schubert_point(&t.standardize());
            (!bruhat_leq(w, &top).expect("same rank")).then(|| Witness::new((*w).clone()))
        })
        .collect();
    let standard = points.standard_points();
    for (a, u) in standard.iter().enumerate() {
        for v in &standard[a + 1..] {
            if u != v && (bruhat_leq(u, v).expect("same rank") || bruhat_leq(v, u).expect("same rank")) {
                witnesses.push(Witness::new(u.clone()));
                witnesses.push(Witness::new(v.clone()));
            }
        }
    }
    VerificationReport::new(shape, Claim::Maximality, Polynomials::default(), witnesses)
}

/// For `λ ≥ μ`, every Schubert point of `λ` is a Schubert point of `μ`.
pub fn check_dominance(lambda: &Partition, mu: &Partition) -> Result<VerificationReport> {
    if !dominance_leq(mu, lambda)? {
        return Err(Error::NotDominating { lambda: lambda.to_string(), mu: mu.to_string() });
    }
    let upper = SchubertPoints::new(lambda);
    let lower = SchubertPoints::new(mu);
    let mut missing: Vec<Permutation> =
        upper.points().iter().filter(|w| !lower.contains(w)).cloned().collect();
    missing.sort();
    missing.dedup();
    let witnesses = missing.into_iter().map(Witness::new).collect();
    let mut report = VerificationReport::new(lambda, Claim::Dominance, Polynomials::default(), witnesses);
    report.versus = Some(mu.clone());
    Ok(report)
}

/// Run one claim on one shape; dominance needs [`check_dominance`].
pub fn check(shape: &Partition, claim: Claim) -> Result<VerificationReport> {
    match claim {
        Claim::Theorem1 => check_theorem1(shape),
        Claim::Closure => Ok(check_closure(shape)),
        Claim::Deletion => Ok(check_deletion_closure(shape)),
        Claim::Maximality => Ok(check_maximality(shape)),
        Claim::Dominance => Err(Error::Parse("dominance needs a second shape".into())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    ThreeRow,
    TwoColumn,
    All,
    InvalidOnly,
}

impl Family {
    pub fn contains(self, shape: &Partition) -> bool {
        match self {
            Family::ThreeRow => shape.num_rows() <= 3,
            Family::TwoColumn => shape.num_columns() <= 2,
            Family::All => true,
            Family::InvalidOnly => !is_valid_family(shape),
        }
    }

    /// Members of size at most `max_n`, by increasing size and reverse
    /// lexicographic order within a size.
    pub fn members(self, max_n: usize) -> Vec<Partition> {
        (1..=max_n).flat_map(Partition::all).filter(|p| self.contains(p)).collect()
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "three-row" => Ok(Family::ThreeRow),
            "two-column" => Ok(Family::TwoColumn),
            "all" => Ok(Family::All),
            "invalid-only" => Ok(Family::InvalidOnly),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::ThreeRow => "three-row",
            Family::TwoColumn => "two-column",
            Family::All => "all",
            Family::InvalidOnly => "invalid-only",
        })
    }
}

/// Polynomial comparison and closure for every member of `family`, two
/// reports per shape in family order. `jobs = 0` uses all cores.
pub fn scan(family: Family, max_n: usize, jobs: usize) -> Result<Vec<VerificationReport>> {
    let shapes = family.members(max_n);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Parse(format!("thread pool: {e}")))?;
    let reports: Vec<[VerificationReport; 2]> = pool.install(|| {
        shapes
            .par_iter()
            .map(|shape| {
                let data = ShapeData::new(shape);
                let closure =
                    VerificationReport::new(shape, Claim::Closure, Polynomials::default(), data.closure_witnesses());
                [data.comparison(shape), closure]
            })
            .collect()
    });
    Ok(reports.into_iter().flatten().collect())
}
