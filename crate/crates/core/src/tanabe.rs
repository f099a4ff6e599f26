//! Tanabe subalgebras `T_l(r,p,n) ⊆ A_l(n)`: classification, products,
//! closure, the distinguished central element `Z` and the JM elements.

use std::collections::BTreeSet;
use std::fmt;

use num::{BigInt, One, Zero};

use crate::arith::{binomial, falling_factorial, rat, Rational};
use crate::diagram::{enumerate_diagrams, Diagram, Vertex};
use crate::error::{Error, Result};
use crate::level::Level;
use crate::vector::{Basis, DiagramVector};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TanabeParams {
    pub r: u32,
    pub p: u32,
    pub n: usize,
}

impl TanabeParams {
    pub fn new(r: u32, p: u32, n: usize) -> Result<Self> {
        if r == 0 || p == 0 || n == 0 {
            return Err(Error::Params(format!("need r, p, n ≥ 1, got ({r},{p},{n})")));
        }
        if !r.is_multiple_of(p) {
            return Err(Error::Params(format!("p = {p} does not divide r = {r}")));
        }
        Ok(TanabeParams { r, p, n })
    }

    /// `m = r / p`.
    pub fn m(&self) -> u32 {
        self.r / self.p
    }
}

impl fmt::Display for TanabeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.p, self.n)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum TanabeClass {
    Pi,
    Lambda,
    Theta,
    None,
}

impl fmt::Display for TanabeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TanabeClass::Pi => "Pi",
            TanabeClass::Lambda => "Lambda",
            TanabeClass::Theta => "Theta",
            TanabeClass::None => "None",
        })
    }
}

fn divides(m: u32, x: i64) -> bool {
    x.rem_euclid(m as i64) == 0
}

pub fn classify(d: &Diagram, params: TanabeParams) -> TanabeClass {
    let (r, m) = (params.r, params.m());
    let diffs: Vec<i64> = d.block_stats().iter().map(|s| s.difference()).collect();
    if diffs.iter().all(|&x| divides(r, x)) {
        return TanabeClass::Pi;
    }
    if !diffs.iter().all(|&x| divides(m, x)) {
        return TanabeClass::None;
    }
    let blocks = d.num_blocks();
    if blocks == params.n
        && diffs.iter().all(|&x| !divides(r, x))
        && diffs.iter().all(|&x| divides(r, x - diffs[0]))
    {
        TanabeClass::Lambda
    } else if blocks > params.n {
        // some difference is nonzero mod r, since Pi failed
        TanabeClass::Theta
    } else {
        TanabeClass::None
    }
}

#[derive(Clone, Debug)]
pub struct TanabeBasis {
    pub level: Level,
    pub params: TanabeParams,
    /// Every diagram of `A_l`, with its class.
    pub classified: Vec<(Diagram, TanabeClass)>,
    /// Pi diagrams with at most `n` blocks, together with Lambda.
    pub pi_basis: Vec<Diagram>,
}

impl TanabeBasis {
    pub fn with_class(&self, c: TanabeClass) -> Vec<Diagram> {
        self.classified
            .iter()
            .filter(|(_, x)| *x == c)
            .map(|(d, _)| d.clone())
            .collect()
    }

    /// Diagrams whose x-elements span `T_l(r,p,n)`: Pi, Lambda and Theta.
    pub fn spanning(&self) -> Vec<Diagram> {
        self.classified
            .iter()
            .filter(|(_, c)| *c != TanabeClass::None)
            .map(|(d, _)| d.clone())
            .collect()
    }

    pub fn contains(&self, d: &Diagram) -> bool {
        self.classified
            .iter()
            .any(|(x, c)| x == d && *c != TanabeClass::None)
    }
}

pub fn tanabe_basis(level: Level, params: TanabeParams) -> Result<TanabeBasis> {
    let classified: Vec<(Diagram, TanabeClass)> = enumerate_diagrams(level)?
        .into_iter()
        .map(|d| {
            let c = classify(&d, params);
            (d, c)
        })
        .collect();
    let pi_basis = classified
        .iter()
        .filter(|(d, c)| {
            (*c == TanabeClass::Pi && d.num_blocks() <= params.n) || *c == TanabeClass::Lambda
        })
        .map(|(d, _)| d.clone())
        .collect();
    Ok(TanabeBasis {
        level,
        params,
        classified,
        pi_basis,
    })
}

fn require(v: &DiagramVector, basis: Basis) -> Result<()> {
    if v.basis() != basis {
        return Err(Error::BasisMismatch(format!("expected {basis}-basis, got {}", v.basis())));
    }
    Ok(())
}

fn same_size(a: &DiagramVector, b: &DiagramVector) -> Result<()> {
    if a.k() != b.k() {
        return Err(Error::Dimension(format!("A_{} times A_{}", a.k(), b.k())));
    }
    Ok(())
}

/// Product in the diagram basis: `d1 d2 = n^l (d1 ∘ d2)`.
pub fn multiply_diagram(a: &DiagramVector, b: &DiagramVector, n: usize) -> Result<DiagramVector> {
    require(a, Basis::Diagram)?;
    require(b, Basis::Diagram)?;
    same_size(a, b)?;
    let mut out = DiagramVector::zero(a.k(), Basis::Diagram);
    for (d1, c1) in a.terms() {
        for (d2, c2) in b.terms() {
            let (d, l) = d1.compose(d2)?;
            let w = Rational::from_integer(BigInt::from(n).pow(l as u32));
            out.add_term(d, c1 * c2 * w);
        }
    }
    Ok(out)
}

/// Structure constants `x_{d1} x_{d2} = sum c_d x_d`.
///
/// Zero unless the bottom of `d1` matches the top of `d2`. Otherwise every
/// partial matching of the top-only blocks of `d1` with the bottom-only blocks
/// of `d2` gives one term, with coefficient `(n - |d|)_l`.
pub fn x_product(d1: &Diagram, d2: &Diagram, n: usize) -> Result<Vec<(Diagram, BigInt)>> {
    if d1.k() != d2.k() {
        return Err(Error::Dimension(format!("A_{} times A_{}", d1.k(), d2.k())));
    }
    if !d1.bottom_matches_top(d2) {
        return Ok(vec![]);
    }
    let k = d1.k();
    let (base, l) = d1.compose(d2)?;
    let labels = base.labels();
    let top_only: Vec<usize> = d1
        .index_blocks()
        .iter()
        .filter(|b| b.iter().all(|&v| v < k))
        .map(|b| labels[b[0]])
        .collect();
    let bottom_only: Vec<usize> = d2
        .index_blocks()
        .iter()
        .filter(|b| b.iter().all(|&v| v >= k))
        .map(|b| labels[b[0]])
        .collect();
    let mut out = Vec::new();
    let mut groups: Vec<usize> = (0..base.num_blocks()).collect();
    let mut used = vec![false; bottom_only.len()];
    each_matching(0, &top_only, &bottom_only, &mut used, &mut groups, &mut |g| {
        let d = base.merge_blocks(g);
        let c = falling_factorial(n as i64 - d.num_blocks() as i64, l);
        if !c.is_zero() {
            out.push((d, c));
        }
    });
    Ok(out)
}

fn each_matching(
    i: usize,
    tops: &[usize],
    bottoms: &[usize],
    used: &mut [bool],
    groups: &mut [usize],
    f: &mut dyn FnMut(&[usize]),
) {
    if i == tops.len() {
        f(groups);
        return;
    }
    each_matching(i + 1, tops, bottoms, used, groups, f);
    for j in 0..bottoms.len() {
        if !used[j] {
            used[j] = true;
            let saved = groups[bottoms[j]];
            groups[bottoms[j]] = tops[i];
            each_matching(i + 1, tops, bottoms, used, groups, f);
            groups[bottoms[j]] = saved;
            used[j] = false;
        }
    }
}

pub fn multiply_x(a: &DiagramVector, b: &DiagramVector, n: usize) -> Result<DiagramVector> {
    require(a, Basis::X)?;
    require(b, Basis::X)?;
    same_size(a, b)?;
    let mut out = DiagramVector::zero(a.k(), Basis::X);
    for (d1, c1) in a.terms() {
        for (d2, c2) in b.terms() {
            let c12 = c1 * c2;
            for (d, c) in x_product(d1, d2, n)? {
                out.add_term(d, &c12 * Rational::from_integer(c));
            }
        }
    }
    Ok(out)
}

/// Product in whatever basis both inputs share.
pub fn multiply(a: &DiagramVector, b: &DiagramVector, n: usize) -> Result<DiagramVector> {
    match a.basis() {
        Basis::Diagram => multiply_diagram(a, b, n),
        Basis::X => multiply_x(a, b, n),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureFailure {
    pub left: Diagram,
    pub right: Diagram,
    pub stray: Diagram,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureReport {
    pub pairs_checked: usize,
    pub failure: Option<ClosureFailure>,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Check that products of spanning x-elements stay in the span.
pub fn closure_check(level: Level, params: TanabeParams) -> Result<ClosureReport> {
    let basis = tanabe_basis(level, params)?;
    let span = basis.spanning();
    let members: BTreeSet<&Diagram> = span.iter().collect();
    let mut pairs = 0;
    for a in &span {
        for b in &span {
            pairs += 1;
            for (d, _) in x_product(a, b, params.n)? {
                if !members.contains(&d) {
                    return Ok(ClosureReport {
                        pairs_checked: pairs,
                        failure: Some(ClosureFailure {
                            left: a.clone(),
                            right: b.clone(),
                            stray: d,
                        }),
                    });
                }
            }
        }
    }
    Ok(ClosureReport {
        pairs_checked: pairs,
        failure: None,
    })
}

/// Add the strand `{k+1,(k+1)'}` to every term. In the x-basis a term `x_d`
/// maps to `x_{d'}` plus every way of joining one block of `d'` to the strand.
pub fn embed(v: &DiagramVector) -> DiagramVector {
    let k = v.k();
    let mut out = DiagramVector::zero(k + 1, v.basis());
    for (d, c) in v.terms() {
        let e = d.embed();
        if v.basis() == Basis::X {
            let strand = e.labels()[k];
            for b in 0..e.num_blocks() {
                if b != strand {
                    let groups: Vec<usize> =
                        (0..e.num_blocks()).map(|x| if x == strand { b } else { x }).collect();
                    out.add_term(e.merge_blocks(&groups), c.clone());
                }
            }
        }
        out.add_term(e, c.clone());
    }
    out
}

/// Embed repeatedly until the vector lives in `A_k`.
pub fn embed_to(v: &DiagramVector, k: usize) -> Result<DiagramVector> {
    if v.k() > k {
        return Err(Error::Dimension(format!("cannot embed A_{} into A_{k}", v.k())));
    }
    let mut out = v.clone();
    while out.k() < k {
        out = embed(&out);
    }
    Ok(out)
}

fn vertex_set(s: &[usize]) -> Result<BTreeSet<usize>> {
    let set: BTreeSet<usize> = s.iter().copied().collect();
    if set.len() != s.len() || set.contains(&0) {
        return Err(Error::Params("S must be distinct positive indices".into()));
    }
    Ok(set)
}

/// One block `S ∪ S'` with identity strands elsewhere.
pub fn build_b_s(k: usize, s: &[usize]) -> Result<Diagram> {
    build_d_i(k, s, &[])
}

/// Blocks `I` and `(S ∪ S') \ I` with identity strands elsewhere; `I = ∅` or
/// `I = S ∪ S'` gives `b_S`.
pub fn build_d_i(k: usize, s: &[usize], i: &[Vertex]) -> Result<Diagram> {
    let s = vertex_set(s)?;
    if s.iter().any(|&x| x > k) || s.is_empty() {
        return Err(Error::Params(format!("S must be a nonempty subset of 1..{k}")));
    }
    let mut within = BTreeSet::new();
    for &v in i {
        let j = match v {
            Vertex::Top(j) | Vertex::Bottom(j) => j,
        };
        if !s.contains(&j) {
            return Err(Error::Params(format!("{v} is not in S ∪ S'")));
        }
        within.insert(v.index(k));
    }
    let all: BTreeSet<usize> = s.iter().flat_map(|&j| [j - 1, k + j - 1]).collect();
    let rest: Vec<usize> = all.difference(&within).copied().collect();
    let mut blocks: Vec<Vec<usize>> = vec![];
    if !within.is_empty() {
        blocks.push(within.into_iter().collect());
    }
    if !rest.is_empty() {
        blocks.push(rest);
    }
    for j in 1..=k {
        if !s.contains(&j) {
            blocks.push(vec![j - 1, k + j - 1]);
        }
    }
    Diagram::from_index_blocks(k, blocks)
}

/// `sum_{I} (-1)^{N(I)-M(I)} (d_I - b_S)` over unordered splits `{I, I^c}` of
/// `S ∪ S'` into two nonempty parts with `N(I) ≡ M(I) mod r`. Each split is
/// counted once. `keep` filters the splits.
fn split_sum(
    k: usize,
    s: &[usize],
    r: u32,
    keep: &dyn Fn(&[Vertex]) -> bool,
    out: &mut DiagramVector,
    scale: &Rational,
) -> Result<()> {
    let elems: Vec<Vertex> = s
        .iter()
        .map(|&j| Vertex::Top(j))
        .chain(s.iter().map(|&j| Vertex::Bottom(j)))
        .collect();
    let b_s = build_b_s(k, s)?;
    let full = (1u32 << elems.len()) - 1;
    // the first element always sits in I, so each split appears once
    for mask in (1..full).filter(|m| m & 1 == 1) {
        let part: Vec<Vertex> = (0..elems.len())
            .filter(|&t| mask >> t & 1 == 1)
            .map(|t| elems[t])
            .collect();
        let top = part.iter().filter(|v| matches!(v, Vertex::Top(_))).count() as i64;
        let diff = 2 * top - part.len() as i64;
        if !divides(r, diff) || !keep(&part) {
            continue;
        }
        let sign = if diff % 2 == 0 { scale.clone() } else { -scale.clone() };
        out.add_term(build_d_i(k, s, &part)?, sign.clone());
        out.add_term(b_s.clone(), -sign);
    }
    Ok(())
}

fn nonempty_subsets(elems: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (1u32..1 << elems.len()).map(move |m| {
        (0..elems.len())
            .filter(|&t| m >> t & 1 == 1)
            .map(|t| elems[t])
            .collect()
    })
}

/// The central element `Z_{l,r}` of `T_l(r,p,n)`, in the diagram basis of `A_{ceil(l)}`.
pub fn build_z(level: Level, r: u32, n: usize) -> Result<DiagramVector> {
    if r == 0 {
        return Err(Error::Params("r must be positive".into()));
    }
    let k = level.ambient();
    let floor = level.floor();
    let mut z = DiagramVector::basis_element(Diagram::identity(k), Basis::Diagram)
        .scale(&Rational::from_integer(binomial(n as i64, 2)));
    let n1 = rat(n as i64 - 1);
    let lower: Vec<usize> = (1..=floor).collect();
    for s in nonempty_subsets(&lower) {
        let sign = if s.len() % 2 == 0 { Rational::one() } else { -Rational::one() };
        z.add_term(build_b_s(k, &s)?, &sign * &n1);
        split_sum(k, &s, r, &|_| true, &mut z, &sign)?;
    }
    if level.is_half() {
        // S containing k: the extra vertices k, k' stay together
        for t in std::iter::once(vec![]).chain(nonempty_subsets(&lower)) {
            let mut s = t;
            s.push(k);
            let sign = if s.len() % 2 == 0 { Rational::one() } else { -Rational::one() };
            z.add_term(build_b_s(k, &s)?, &sign * &n1);
            let together = |part: &[Vertex]| {
                part.contains(&Vertex::Top(k)) == part.contains(&Vertex::Bottom(k))
            };
            split_sum(k, &s, r, &together, &mut z, &sign)?;
        }
    }
    Ok(z)
}

/// JM element `M_l`: `M_{1/2} = 1`, else `Z_l - Z_{l-1/2}`, in `A_{ceil(l)}`.
pub fn build_m(level: Level, r: u32, n: usize) -> Result<DiagramVector> {
    let prev = level
        .prev()
        .ok_or_else(|| Error::Params("M_l is defined for l ≥ 1/2".into()))?;
    if level.two_l() == 1 {
        return Ok(DiagramVector::basis_element(Diagram::identity(1), Basis::Diagram));
    }
    let z = build_z(level, r, n)?;
    let z_prev = embed_to(&build_z(prev, r, n)?, level.ambient())?;
    z.sub(&z_prev)
}

/// `M_{1/2}, M_1, ..., M_l`, all embedded in `A_{ceil(l)}`.
pub fn jm_family(level: Level, r: u32, n: usize) -> Result<Vec<(Level, DiagramVector)>> {
    level
        .up_to()
        .map(|j| Ok((j, embed_to(&build_m(j, r, n)?, level.ambient())?)))
        .collect()
}

/// `x` of the all-singletons diagram of `A_k`, for `T_k(2,2,2k)`.
pub fn build_m22(k: usize, params: TanabeParams) -> Result<DiagramVector> {
    if (params.r, params.p, params.n) != (2, 2, 2 * k) {
        return Err(Error::Params(format!(
            "M_k,2,2 needs (r,p,n) = (2,2,{}), got {params}",
            2 * k
        )));
    }
    Ok(DiagramVector::basis_element(Diagram::singletons(k), Basis::X))
}

/// Whether `v` commutes with every spanning element of `T_l(r,p,n)`.
pub fn is_central(v: &DiagramVector, level: Level, params: TanabeParams) -> Result<bool> {
    if v.k() != level.ambient() {
        return Err(Error::Dimension(format!(
            "element of A_{} tested at level {level}",
            v.k()
        )));
    }
    let x = v.to_x()?;
    for d in tanabe_basis(level, params)?.spanning() {
        let b = DiagramVector::basis_element(d, Basis::X);
        if multiply_x(&x, &b, params.n)? != multiply_x(&b, &x, params.n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the x-support of `v` lies in the spanning set of `T_l(r,p,n)`.
pub fn in_tanabe(v: &DiagramVector, level: Level, params: TanabeParams) -> Result<bool> {
    let basis = tanabe_basis(level, params)?;
    Ok(v.to_x()?.terms().all(|(d, _)| basis.contains(d)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Matrix;

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    fn a2() -> Vec<Diagram> {
        [
            "{1};{2};{1'};{2'}",
            "{1,2};{1'};{2'}",
            "{1,1'};{2};{2'}",
            "{1,2'};{2};{1'}",
            "{2,1'};{1};{2'}",
            "{2,2'};{1};{1'}",
            "{1',2'};{1};{2}",
            "{1,2};{1',2'}",
            "{1,2'};{2,1'}",
            "{1,1'};{2,2'}",
            "{1,1',2'};{2}",
            "{1,2,1'};{2'}",
            "{1,2,2'};{1'}",
            "{2,1',2'};{1}",
            "{1,2,1',2'}",
        ]
        .iter()
        .map(|s| d(s))
        .collect()
    }

    fn class_set(r: u32, p: u32, n: usize, c: TanabeClass) -> Vec<usize> {
        let params = TanabeParams::new(r, p, n).unwrap();
        a2().iter()
            .enumerate()
            .filter(|(_, x)| classify(x, params) == c)
            .map(|(i, _)| i + 1)
            .collect()
    }

    #[test]
    fn classification_tables() {
        use TanabeClass::*;
        assert_eq!(class_set(2, 2, 2, Pi), vec![8, 9, 10, 15]);
        assert_eq!(class_set(2, 2, 2, Lambda), vec![11, 12, 13, 14]);
        assert_eq!(class_set(2, 2, 2, Theta), vec![1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(class_set(2, 2, 3, Lambda), Vec::<usize>::new());
        assert_eq!(class_set(2, 2, 3, Theta), vec![1]);
        assert_eq!(class_set(2, 2, 4, Lambda), vec![1]);
        assert_eq!(class_set(2, 2, 4, Theta), Vec::<usize>::new());
        for r in 3..=6 {
            assert_eq!(class_set(r, 1, 2, Pi), vec![9, 10, 15]);
        }
        assert_eq!(class_set(3, 3, 3, Lambda), vec![2, 7]);
        assert_eq!(class_set(4, 2, 2, Lambda), vec![8]);
        assert_eq!(class_set(4, 4, 2, Lambda), vec![8]);
        for (r, p) in [(5, 5), (6, 3), (6, 6), (8, 4)] {
            for n in 1..6 {
                assert!(class_set(r, p, n, Lambda).is_empty());
            }
        }
    }

    #[test]
    fn bad_params() {
        assert!(TanabeParams::new(4, 3, 2).is_err());
        assert!(TanabeParams::new(0, 1, 2).is_err());
    }

    #[test]
    fn x_square_of_singletons() {
        // x_{{1},{1'}}^2 = (n-2) x_{{1},{1'}} + (n-1) x_{{1,1'}}
        let s = Diagram::singletons(1);
        let prod = x_product(&s, &s, 5).unwrap();
        let mut v = DiagramVector::zero(1, Basis::X);
        for (dd, c) in prod {
            v.add_term(dd, Rational::from_integer(c));
        }
        assert_eq!(v.coefficient(&s), rat(3));
        assert_eq!(v.coefficient(&Diagram::identity(1)), rat(4));
    }

    #[test]
    fn b_s_and_d_i() {
        assert_eq!(build_b_s(2, &[1, 2]).unwrap(), d("{1,2,1',2'}"));
        assert_eq!(build_b_s(2, &[1]).unwrap(), Diagram::identity(2));
        let di = build_d_i(2, &[1, 2], &[Vertex::Top(1), Vertex::Bottom(2)]).unwrap();
        assert_eq!(di, d("{1,2'};{2,1'}"));
        assert_eq!(
            build_d_i(2, &[1, 2], &[Vertex::Top(1), Vertex::Top(2), Vertex::Bottom(1), Vertex::Bottom(2)]).unwrap(),
            build_b_s(2, &[1, 2]).unwrap()
        );
        assert!(build_d_i(2, &[1], &[Vertex::Top(2)]).is_err());
    }

    #[test]
    fn z_low_levels() {
        for n in 1..6 {
            let z0 = build_z(Level::integer(0), 1, n).unwrap();
            assert_eq!(z0.coefficient(&Diagram::identity(0)), Rational::from_integer(binomial(n as i64, 2)));
            let zh = build_z(Level::half(0), 1, n).unwrap();
            assert!(zh.len() <= 1);
            assert_eq!(zh.coefficient(&Diagram::identity(1)), Rational::from_integer(binomial(n as i64 - 1, 2)));
            // r ≥ 2 at level 1: only b_{1} = id survives
            let z1 = build_z(Level::integer(1), 2, n).unwrap();
            assert!(z1.len() <= 1);
            assert_eq!(z1.coefficient(&Diagram::identity(1)), Rational::from_integer(binomial(n as i64 - 1, 2)));
        }
    }

    #[test]
    fn z_level_one_for_r_one() {
        // Z_{1,1} = (C(n,2) - n) id + singletons
        let z = build_z(Level::integer(1), 1, 5).unwrap();
        assert_eq!(z.coefficient(&Diagram::identity(1)), rat(10 - 5));
        assert_eq!(z.coefficient(&Diagram::singletons(1)), rat(1));
        assert_eq!(z.len(), 2);
    }

    #[test]
    fn m_half_is_one() {
        let m = build_m(Level::half(0), 3, 4).unwrap();
        assert_eq!(m, DiagramVector::basis_element(Diagram::identity(1), Basis::Diagram));
        assert!(build_m(Level::integer(0), 1, 2).is_err());
    }

    #[test]
    fn embedding_agrees_across_bases() {
        for dd in enumerate_diagrams(Level::integer(2)).unwrap() {
            let v = DiagramVector::basis_element(dd, Basis::X);
            let via_x = embed(&v);
            let via_d = embed(&v.to_diagram().unwrap()).to_x().unwrap();
            assert_eq!(via_x, via_d);
        }
    }

    #[test]
    fn composition_example() {
        let d1 = d("{1,2,1'};{3,5,3'};{4};{6,5'};{2',4'};{6'}");
        let d2 = d("{1,5,2',3'};{2,4};{3};{6,6'};{1',4'};{5'}");
        let (p, l) = d1.compose(&d2).unwrap();
        assert_eq!(p, d("{1,2,6,2',3'};{3,5};{4};{1',4'};{5'};{6'}"));
        assert_eq!(l, 1);
        let prod = multiply_diagram(
            &DiagramVector::basis_element(d1, Basis::Diagram),
            &DiagramVector::basis_element(d2, Basis::Diagram),
            7,
        )
        .unwrap();
        assert_eq!(prod.coefficient(&p), rat(7));
    }

    #[test]
    fn pi_basis_sizes() {
        // T_1(r,1,n) for r ≥ 2 is spanned by the identity alone
        let b = tanabe_basis(Level::integer(1), TanabeParams::new(2, 1, 3).unwrap()).unwrap();
        assert_eq!(b.pi_basis, vec![Diagram::identity(1)]);
        let b = tanabe_basis(Level::integer(2), TanabeParams::new(2, 2, 2).unwrap()).unwrap();
        assert_eq!(b.pi_basis.len(), 8);
    }

    #[test]
    fn embedding_lands_in_next_tanabe_algebra() {
        let params = TanabeParams::new(2, 2, 3).unwrap();
        for two_l in 0..4 {
            let lv = Level::from_two_l(two_l);
            let next = lv.next();
            let basis_next = tanabe_basis(next, params).unwrap().spanning();
            for dd in tanabe_basis(lv, params).unwrap().spanning() {
                let v = embed_to(&DiagramVector::basis_element(dd, Basis::X), next.ambient()).unwrap();
                assert!(in_tanabe(&v, next, params).unwrap());
                // rank test: adding the image does not enlarge the span
                let cols: Vec<Diagram> = basis_next.clone();
                let mut rows: Vec<Vec<Rational>> = cols
                    .iter()
                    .map(|c| cols.iter().map(|e| if c == e { rat(1) } else { rat(0) }).collect())
                    .collect();
                rows.push(cols.iter().map(|c| v.coefficient(c)).collect());
                let m = Matrix::from_rows(rows, &rat(0)).unwrap();
                assert_eq!(m.rank(), cols.len());
            }
        }
    }

    #[test]
    fn z_needs_r() {
        assert!(build_z(Level::integer(1), 0, 2).is_err());
    }
}
