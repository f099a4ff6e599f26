//! The verification grid: one record per (check tag, grid point).

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use num::{BigUint, One, ToPrimitive};
use rand::{seq::SliceRandom, Rng, SeedableRng};
use serde_json::json;

use crate::action::{
    eig_multiplicities_exhaustive, kappa_half_matrix, kappa_matrix, phi_half, phi_vector, z_matrix,
};
use crate::arith::{rat, Rational};
use crate::bratteli::{build_tower, dims, predict_jm_spectrum, NodeKind};
use crate::diagram::{enumerate_diagrams, Diagram};
use crate::error::Result;
use crate::group::{centralizer_dim, verify_schur_weyl};
use crate::level::Level;
use crate::necklace::factorial;
use crate::spectrum::{compare_jm, spectrum_containment};
use crate::tanabe::{
    build_m22, build_z, classify, closure_check, is_central, jm_family, multiply_diagram,
    multiply_x, tanabe_basis, TanabeClass, TanabeParams,
};
use crate::vector::{Basis, DiagramVector};

pub const TAGS: [&str; 13] = [
    "product-example",
    "classification",
    "mult-oracle",
    "closure",
    "schur-weyl",
    "bratteli-figures",
    "dims",
    "zkr",
    "central",
    "containment",
    "mk22",
    "jm-spectra",
    "jm-commute",
];

/// `(r, p)` pairs of the standard grid.
pub const RP_GRID: [(u32, u32); 7] = [(1, 1), (2, 1), (2, 2), (3, 1), (3, 3), (4, 2), (4, 4)];

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Record {
    pub tag: String,
    pub point: String,
    pub pass: bool,
    /// Discrepancy payload on failure, or a short summary.
    pub detail: String,
}

impl Record {
    fn new(tag: &str, point: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Record {
            tag: tag.into(),
            point: point.into(),
            pass,
            detail: detail.into(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "tag": self.tag, "point": self.point, "pass": self.pass, "detail": self.detail })
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyConfig {
    pub only: Option<String>,
    /// Perturb one multiplyX structure constant, to exercise failure reporting.
    pub inject_fault: bool,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub records: Vec<Record>,
    pub elapsed: BTreeMap<String, Duration>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let failed = self.records.iter().filter(|r| !r.pass).count();
        json!({
            "passed": self.passed(),
            "total": self.records.len(),
            "failed": failed,
            "records": self.records.iter().map(Record::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Run every check matching `config.only`, records sorted for determinism.
pub fn run_suite(config: &VerifyConfig) -> Result<Report> {
    let mut records = Vec::new();
    let mut elapsed = BTreeMap::new();
    for tag in TAGS {
        if config.only.as_deref().is_some_and(|o| o != tag) {
            continue;
        }
        let start = Instant::now();
        records.extend(run_tag(tag, config)?);
        elapsed.insert(tag.to_string(), start.elapsed());
    }
    records.sort();
    Ok(Report { records, elapsed })
}

pub fn run_tag(tag: &str, config: &VerifyConfig) -> Result<Vec<Record>> {
    match tag {
        "product-example" => product_example(),
        "classification" => classification(),
        "mult-oracle" => mult_oracle(config),
        "closure" => closure(),
        "schur-weyl" => schur_weyl(),
        "bratteli-figures" => bratteli_figures(),
        "dims" => dimension_identities(),
        "zkr" => zkr(),
        "central" => centrality(),
        "containment" => containment(),
        "mk22" => mk22(),
        "jm-spectra" => jm_spectra(),
        "jm-commute" => jm_commute(),
        other => Err(crate::error::Error::Params(format!(
            "unknown tag `{other}`; known: {}",
            TAGS.join(", ")
        ))),
    }
}

fn params(r: u32, p: u32, n: usize) -> TanabeParams {
    TanabeParams::new(r, p, n).expect("grid parameters are valid")
}

fn d(s: &str) -> Diagram {
    s.parse().expect("fixed diagram text")
}

fn dv(x: Diagram, basis: Basis) -> DiagramVector {
    DiagramVector::basis_element(x, basis)
}

fn product_example() -> Result<Vec<Record>> {
    let d1 = d("{1,2,1'};{3,5,3'};{4};{6,5'};{2',4'};{6'}");
    let d2 = d("{1,5,2',3'};{2,4};{3};{6,6'};{1',4'};{5'}");
    let expect = d("{1,2,6,2',3'};{3,5};{4};{1',4'};{5'};{6'}");
    let (got, l) = d1.compose(&d2)?;
    let mut out = vec![Record::new(
        "product-example",
        "composition",
        got == expect && l == 1,
        format!("{got} with {l} internal block(s)"),
    )];
    for n in 2..=4 {
        let prod = multiply_diagram(&dv(d1.clone(), Basis::Diagram), &dv(d2.clone(), Basis::Diagram), n)?;
        let want = dv(expect.clone(), Basis::Diagram).scale(&rat(n as i64));
        out.push(Record::new("product-example", format!("n={n}"), prod == want, prod.to_string()));
    }
    Ok(out)
}

/// `d_1 … d_15` of `A_2` in the order used by the classification tables.
pub fn a2_listing() -> Vec<Diagram> {
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

fn classification() -> Result<Vec<Record>> {
    use TanabeClass::*;
    let ds = a2_listing();
    let set = |r: u32, p: u32, n: usize, c: TanabeClass| -> Vec<usize> {
        ds.iter()
            .enumerate()
            .filter(|(_, x)| classify(x, params(r, p, n)) == c)
            .map(|(i, _)| i + 1)
            .collect()
    };
    let mut cases: Vec<(String, Vec<usize>, Vec<usize>)> = vec![
        ("Pi_2(2)".into(), set(2, 2, 2, Pi), vec![8, 9, 10, 15]),
        ("Lambda_2(2,2,2)".into(), set(2, 2, 2, Lambda), vec![11, 12, 13, 14]),
        ("Theta_2(2,2,2)".into(), set(2, 2, 2, Theta), vec![1, 2, 3, 4, 5, 6, 7]),
        ("Lambda_2(2,2,3)".into(), set(2, 2, 3, Lambda), vec![]),
        ("Theta_2(2,2,3)".into(), set(2, 2, 3, Theta), vec![1]),
        ("Lambda_2(2,2,4)".into(), set(2, 2, 4, Lambda), vec![1]),
        ("Lambda_2(3,3,3)".into(), set(3, 3, 3, Lambda), vec![2, 7]),
        ("Lambda_2(4,2,2)".into(), set(4, 2, 2, Lambda), vec![8]),
        ("Lambda_2(4,4,2)".into(), set(4, 4, 2, Lambda), vec![8]),
    ];
    for r in 3..=8 {
        cases.push((format!("Pi_2({r})"), set(r, 1, 2, Pi), vec![9, 10, 15]));
    }
    for r in 5..=12u32 {
        for p in (1..=r).filter(|p| r % p == 0) {
            for n in 1..=6 {
                cases.push((format!("Lambda_2({r},{p},{n})"), set(r, p, n, Lambda), vec![]));
            }
        }
    }
    Ok(cases
        .into_iter()
        .map(|(name, got, want)| {
            let pass = got == want;
            Record::new("classification", name, pass, format!("{got:?}"))
        })
        .collect())
}

/// Oracle product: pass through the diagram basis.
fn oracle_x_product(a: &DiagramVector, b: &DiagramVector, n: usize) -> Result<DiagramVector> {
    multiply_diagram(&a.to_diagram()?, &b.to_diagram()?, n)?.to_x()
}

fn mult_oracle(config: &VerifyConfig) -> Result<Vec<Record>> {
    let ns = [2usize, 3, 4, 7];
    let a2 = enumerate_diagrams(Level::integer(2))?;
    let a3 = enumerate_diagrams(Level::integer(3))?;
    let mut rng = rand::rngs::StdRng::seed_from_u64(config.seed);
    let mut pairs: Vec<(Diagram, Diagram)> = Vec::new();
    for x in &a2 {
        for y in &a2 {
            pairs.push((x.clone(), y.clone()));
        }
    }
    let a2_count = pairs.len();
    for i in 0..1000 {
        let x = a3.choose(&mut rng).expect("A_3 nonempty").clone();
        // every other pair is drawn so that the product is nonzero
        let y = if i % 2 == 0 {
            a3.choose(&mut rng).expect("A_3 nonempty").clone()
        } else {
            let matching: Vec<&Diagram> = a3.iter().filter(|y| x.bottom_matches_top(y)).collect();
            (*matching.choose(&mut rng).expect("some diagram matches")).clone()
        };
        pairs.push((x, y));
    }
    let mut out = Vec::new();
    let fault_at = config.inject_fault.then(|| rng.gen_range(0..a2_count));
    for &n in &ns {
        let mut bad: Option<String> = None;
        let mut count = [0usize; 2];
        for (idx, (x, y)) in pairs.iter().enumerate() {
            let (vx, vy) = (dv(x.clone(), Basis::X), dv(y.clone(), Basis::X));
            let mut fast = multiply_x(&vx, &vy, n)?;
            if fault_at == Some(idx) && n == ns[0] {
                fast.add_term(x.clone(), Rational::one());
            }
            let slow = oracle_x_product(&vx, &vy, n)?;
            count[(x.k() == 3) as usize] += 1;
            if fast != slow && bad.is_none() {
                bad = Some(format!("x[{x}] * x[{y}]: multiplyX = {fast}, oracle = {slow}"));
            }
        }
        let pass = bad.is_none();
        let detail = bad.unwrap_or_else(|| format!("{} pairs of A_2, {} pairs of A_3", count[0], count[1]));
        out.push(Record::new("mult-oracle", format!("n={n}"), pass, detail));
    }
    Ok(out)
}

fn grid_levels() -> [Level; 3] {
    [Level::integer(1), Level::half(1), Level::integer(2)]
}

fn closure() -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for (r, p) in RP_GRID {
        for n in 2..=4 {
            for lv in grid_levels() {
                let rep = closure_check(lv, params(r, p, n))?;
                let detail = match &rep.failure {
                    None => format!("{} pairs", rep.pairs_checked),
                    Some(f) => format!("x[{}] * x[{}] produces x[{}]", f.left, f.right, f.stray),
                };
                out.push(Record::new("closure", format!("{} l={lv}", params(r, p, n)), rep.passed(), detail));
            }
        }
    }
    Ok(out)
}

fn schur_weyl() -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for (r, p) in RP_GRID {
        for n in 2..=4usize {
            for lv in grid_levels() {
                if n.pow(2 * lv.ambient() as u32) > 2000 {
                    continue;
                }
                let rep = verify_schur_weyl(params(r, p, n), lv)?;
                let detail = format!(
                    "|Pi| = {}, centralizer = {}, commutes = {}, independent = {}, kernel = {}",
                    rep.pi_basis_size, rep.centralizer_dim, rep.commutes, rep.independent, rep.kernel_exact
                );
                out.push(Record::new("schur-weyl", format!("{} l={lv}", params(r, p, n)), rep.passed(), detail));
            }
        }
    }
    Ok(out)
}

/// The drawn `(2,2,4)` tower: node labels per level and edges.
pub fn figure_224() -> (Vec<Vec<&'static str>>, Vec<(&'static str, &'static str)>) {
    let nodes = vec![
        vec!["(((4),∅);0)"],
        vec!["((3)^4,∅)"],
        vec!["(((3),(1));0)"],
        vec!["((2)^4,(1))", "((3),∅^4)"],
        vec![
            "(((2),(2));0)",
            "(((2),(2));1)",
            "(((2),(1,1));0)",
            "(((4),∅);0)",
            "(((3,1),∅);0)",
        ],
    ];
    let edges = vec![
        ("(((4),∅);0)", "((3)^4,∅)"),
        ("((3)^4,∅)", "(((3),(1));0)"),
        ("(((3),(1));0)", "((2)^4,(1))"),
        ("(((3),(1));0)", "((3),∅^4)"),
        ("((2)^4,(1))", "(((2),(2));0)"),
        ("((2)^4,(1))", "(((2),(2));1)"),
        ("((2)^4,(1))", "(((2),(1,1));0)"),
        ("((3),∅^4)", "(((4),∅);0)"),
        ("((3),∅^4)", "(((3,1),∅);0)"),
    ];
    (nodes, edges)
}

fn bratteli_figures() -> Result<Vec<Record>> {
    let mut out = Vec::new();
    let g = build_tower(params(2, 2, 4), 2)?;
    let (nodes, edges) = figure_224();
    for (two_l, want) in nodes.iter().enumerate() {
        let lv = Level::from_two_l(two_l);
        let got: BTreeSet<String> = g.level(lv)?.iter().map(|x| x.label.clone()).collect();
        let want_set: BTreeSet<String> = want.iter().map(|s| s.to_string()).collect();
        out.push(Record::new(
            "bratteli-figures",
            format!("(2,2,4) nodes l={lv}"),
            got == want_set,
            format!("{got:?}"),
        ));
    }
    let mut got_edges = BTreeSet::new();
    for two_l in 1..g.levels.len() {
        got_edges.extend(g.edges_into(Level::from_two_l(two_l))?);
    }
    let want_edges: BTreeSet<(String, String)> =
        edges.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    out.push(Record::new(
        "bratteli-figures",
        "(2,2,4) edges",
        got_edges == want_edges,
        format!("{} edges", got_edges.len()),
    ));
    let g = build_tower(params(6, 2, 6), 3)?;
    let label = "(((4),∅),((1)^6,∅),(∅,∅))";
    let node = g.find(Level::half(2), label);
    let pass = node.is_some_and(|x| x.path_count == BigUint::from(2u32));
    out.push(Record::new(
        "bratteli-figures",
        "(6,2,6) l=5/2",
        pass,
        format!("{label}: {:?}", node.map(|x| x.path_count.to_string())),
    ));
    Ok(out)
}

fn dimension_identities() -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for (r, p) in RP_GRID {
        for n in 2..=4usize {
            let pr = params(r, p, n);
            let g = build_tower(pr, n / 2)?;
            for two_l in 0..g.levels.len() {
                let lv = Level::from_two_l(two_l);
                if n < 2 * lv.ambient() {
                    continue;
                }
                let t = dims(&g, lv)?;
                let pi = tanabe_basis(lv, pr)?.pi_basis.len();
                let tensor = BigUint::from(n).pow(lv.floor() as u32);
                let mut pass = t.sum_dim_paths == tensor && t.sum_paths_sq == BigUint::from(pi);
                let mut detail = format!(
                    "sum dim*paths = {} (n^k = {tensor}), sum paths^2 = {} (|Pi| = {pi})",
                    t.sum_dim_paths, t.sum_paths_sq
                );
                if n.pow(2 * lv.floor() as u32) <= 2000 {
                    let c = centralizer_dim(pr, lv)?;
                    pass &= BigUint::from(c) == t.sum_paths_sq;
                    detail.push_str(&format!(", centralizer = {c}"));
                }
                // u > 1 exactly for (2,2,2k) at level k
                let split = g.level(lv)?.iter().any(|x| match &x.kind {
                    NodeKind::Integer { necklace, .. } => necklace.u() > 1,
                    NodeKind::Half(_) => false,
                });
                let expect_split = (r, p) == (2, 2) && !lv.is_half() && n == 2 * lv.floor();
                pass &= split == expect_split;
                out.push(Record::new("dims", format!("{pr} l={lv}"), pass, detail));
            }
        }
    }
    Ok(out)
}

fn zkr() -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for r in 1..=3 {
        for n in 2..=4 {
            for k in 0..=2 {
                let z = phi_vector(&build_z(Level::integer(k), r, n)?, n)?;
                let kap = kappa_matrix(r, n, k)?;
                out.push(Record::new("zkr", format!("r={r} n={n} l={k}"), z == kap, "phi(Z) vs kappa"));
                let zh = phi_half(&build_z(Level::half(k), r, n)?, n)?;
                let kh = kappa_half_matrix(r, n, k)?;
                out.push(Record::new(
                    "zkr",
                    format!("r={r} n={n} l={}", Level::half(k)),
                    zh == kh,
                    "phi(Z) vs kappa on the v_n block",
                ));
            }
        }
    }
    Ok(out)
}

fn small_grid() -> Vec<TanabeParams> {
    let mut v = Vec::new();
    for r in 1..=3u32 {
        for p in (1..=r).filter(|p| r % p == 0) {
            for n in 2..=4 {
                v.push(params(r, p, n));
            }
        }
    }
    v
}

fn centrality() -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for pr in small_grid() {
        for two_l in 0..=4 {
            let lv = Level::from_two_l(two_l);
            let z = build_z(lv, pr.r, pr.n)?;
            let central = is_central(&z, lv, pr)?;
            let detail = if central {
                "Z commutes with T_l".to_string()
            } else {
                centrality_diagnostic(&z, lv, pr)?
            };
            out.push(Record::new("central", format!("{pr} l={lv}"), central, detail));
        }
    }
    Ok(out)
}

// Which basis elements fail to commute, and whether each commutator still acts as zero.
fn centrality_diagnostic(z: &DiagramVector, lv: Level, pr: TanabeParams) -> Result<String> {
    let zx = z.to_x()?;
    let mut stray = Vec::new();
    let mut all_in_kernel = true;
    for d in tanabe_basis(lv, pr)?.spanning() {
        let b = DiagramVector::basis_element(d.clone(), Basis::X);
        let comm = multiply_x(&zx, &b, pr.n)?.sub(&multiply_x(&b, &zx, pr.n)?)?;
        if comm.is_zero() {
            continue;
        }
        let acts = if lv.is_half() { phi_half(&comm, pr.n)? } else { phi_vector(&comm, pr.n)? };
        all_in_kernel &= acts.is_zero();
        stray.push(d.to_string());
    }
    Ok(format!(
        "[Z, x_d] != 0 for {} basis elements ({}); every commutator acts as zero on tensor space: {}",
        stray.len(),
        stray.join(" "),
        all_in_kernel
    ))
}

fn jm_commute() -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for r in 1..=3u32 {
        for n in 2..=4 {
            let lv = Level::integer(2);
            let fam: Vec<DiagramVector> = jm_family(lv, r, n)?
                .into_iter()
                .map(|(_, m)| m.to_x())
                .collect::<Result<_>>()?;
            let mut bad = None;
            for i in 0..fam.len() {
                for j in i + 1..fam.len() {
                    if multiply_x(&fam[i], &fam[j], n)? != multiply_x(&fam[j], &fam[i], n)? {
                        bad.get_or_insert(format!("M_{} and M_{}", Level::from_two_l(i + 1), Level::from_two_l(j + 1)));
                    }
                }
            }
            out.push(Record::new(
                "jm-commute",
                format!("r={r} n={n} l=2"),
                bad.is_none(),
                bad.unwrap_or_else(|| format!("{} elements", fam.len())),
            ));
        }
    }
    Ok(out)
}

fn containment() -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for pr in small_grid() {
        for k in 0..=2 {
            let c = spectrum_containment(pr, k)?;
            let detail = format!("spectrum {:?}, allowed {:?}", c.spectrum, c.allowed);
            out.push(Record::new("containment", format!("{pr} k={k}"), c.passed(), detail));
        }
    }
    Ok(out)
}

fn mk22() -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for k in 1..=2usize {
        let n = 2 * k;
        let pr = params(2, 2, n);
        let m = phi_vector(&build_m22(k, pr)?, n)?;
        let scaled = m.scale(&rat(1 << k));
        out.push(Record::new("mk22", format!("k={k} operator"), scaled == z_matrix(k)?, "2^k phi(M) vs z"));

        let kf = factorial(k).to_i64().expect("small factorial");
        let joint = eig_multiplicities_exhaustive(&m, &[rat(0), rat(kf), rat(-kf)]);
        let (pass, detail) = match joint {
            Ok(s) => {
                let plus = s[&rat(kf)];
                let minus = s[&rat(-kf)];
                (plus == minus && plus > 0, format!("0: {}, +{kf}: {plus}, -{kf}: {minus}", s[&rat(0)]))
            }
            Err(e) => (false, e.to_string()),
        };
        out.push(Record::new("mk22", format!("k={k} spectrum"), pass, detail));

        // the two δ nodes over ((k),(k)) share every JM eigenvalue except the last
        let g = build_tower(pr, k)?;
        let lv = Level::integer(k);
        let joint = predict_jm_spectrum(&g, lv)?;
        let tail: BTreeSet<i64> = joint.keys().filter_map(|t| t.last().copied()).collect();
        let heads_plus: BTreeSet<Vec<i64>> =
            joint.keys().filter(|t| t.last() == Some(&kf)).map(|t| t[..t.len() - 1].to_vec()).collect();
        let heads_minus: BTreeSet<Vec<i64>> =
            joint.keys().filter(|t| t.last() == Some(&-kf)).map(|t| t[..t.len() - 1].to_vec()).collect();
        let pass = tail.contains(&kf) && tail.contains(&-kf) && heads_plus == heads_minus;
        out.push(Record::new("mk22", format!("k={k} separation"), pass, format!("{} tuples", joint.len())));
    }
    Ok(out)
}

fn jm_spectra() -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for (r, p) in RP_GRID {
        for n in 2..=4usize {
            for two_l in 1..=4 {
                let lv = Level::from_two_l(two_l);
                if n < two_l {
                    continue;
                }
                let c = compare_jm(params(r, p, n), lv)?;
                let bad: Vec<String> = c
                    .rows
                    .iter()
                    .filter(|row| row.predicted.to_usize() != Some(row.computed))
                    .map(|row| format!("{:?}: predicted {} computed {}", row.tuple, row.predicted, row.computed))
                    .collect();
                let detail = if bad.is_empty() {
                    format!("{} tuples, total {}", c.rows.len(), c.computed_total())
                } else {
                    format!("{}; total {} of {}", bad.join("; "), c.computed_total(), c.tensor_dim)
                };
                out.push(Record::new("jm-spectra", format!("{} l={lv}", params(r, p, n)), c.passed(), detail));
            }
        }
    }
    Ok(out)
}
