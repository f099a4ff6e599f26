//! `G(r,p,n)` and `L(r,p,n)` as monomial matrix groups, and the centralizer
//! oracle for their tensor actions.
//!
//! Convention: `g = (e, π)` acts by `g v_i = ζ^{e_i} v_{π(i)}`, so `rho(g)` has
//! `ζ^{e_i}` at `(π(i), i)`. The diagram action uses row vectors, so it is
//! compared against the transpose of `rho`.

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use num::{BigUint, One};

use crate::action::{decode, encode, phi_half, phi_x, tensor_dim};
use crate::arith::{Cyclotomic, CyclotomicField, Matrix, Rational, Scalar, SparseEchelon};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::level::Level;
use crate::limits::Limits;
use crate::tanabe::{tanabe_basis, TanabeParams};
use crate::vector::{Basis, DiagramVector};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    r: u32,
    exps: Vec<u32>,
    perm: Vec<usize>,
}

impl GroupElement {
    /// Exponents mod `r` and a 0-based permutation.
    pub fn new(r: u32, exps: Vec<i64>, perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        if exps.len() != n {
            return Err(Error::Dimension("exponent and permutation lengths differ".into()));
        }
        let mut seen = vec![false; n];
        for &x in &perm {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Params(format!("{perm:?} is not a permutation")));
            }
        }
        Ok(GroupElement {
            r,
            exps: exps.iter().map(|&e| e.rem_euclid(r as i64) as u32).collect(),
            perm,
        })
    }

    pub fn identity(r: u32, n: usize) -> Self {
        GroupElement {
            r,
            exps: vec![0; n],
            perm: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Whether the exponent sum is divisible by `p`.
    pub fn in_g(&self, p: u32) -> bool {
        self.exps.iter().map(|&e| e as u64).sum::<u64>() % p as u64 == 0
    }

    /// Whether the element lies in `L(r,p,n)`: it fixes the line of `v_n`.
    pub fn in_l(&self, p: u32) -> bool {
        self.in_g(p) && self.perm.last() == Some(&(self.n() - 1))
    }

    /// `(gh)(v_i) = g(ζ^{f_i} v_{σ(i)})`.
    pub fn mul(&self, h: &GroupElement) -> GroupElement {
        assert_eq!((self.r, self.n()), (h.r, h.n()));
        let exps = (0..self.n())
            .map(|i| (h.exps[i] + self.exps[h.perm[i]]) % self.r)
            .collect();
        let perm = (0..self.n()).map(|i| self.perm[h.perm[i]]).collect();
        GroupElement { r: self.r, exps, perm }
    }
}

fn diag(r: u32, n: usize, entries: &[(usize, i64)]) -> GroupElement {
    let mut e = vec![0i64; n];
    for &(i, x) in entries {
        e[i] += x;
    }
    GroupElement::new(r, e, (0..n).collect()).expect("valid generator")
}

fn transposition(r: u32, n: usize, i: usize) -> GroupElement {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(i, i + 1);
    GroupElement::new(r, vec![0; n], perm).expect("valid generator")
}

/// `t_1`, `h_12` and `s_1 .. s_{n-1}`.
pub fn generators_g(params: TanabeParams) -> Vec<GroupElement> {
    let (r, n) = (params.r, params.n);
    let mut gens = vec![diag(r, n, &[(0, params.p as i64)])];
    if n >= 2 {
        gens.push(diag(r, n, &[(0, 1), (1, -1)]));
    }
    gens.extend((0..n.saturating_sub(1)).map(|i| transposition(r, n, i)));
    gens
}

/// `t_1`, `h_12`, `h_1n` and `s_1 .. s_{n-2}`. The extra `h_1n` is needed because
/// the other generators never move exponent mass onto coordinate `n`.
pub fn generators_l(params: TanabeParams) -> Vec<GroupElement> {
    let (r, n) = (params.r, params.n);
    let mut gens = vec![diag(r, n, &[(0, params.p as i64)])];
    if n >= 2 {
        gens.push(diag(r, n, &[(0, 1), (1, -1)]));
    }
    if n >= 3 {
        gens.push(diag(r, n, &[(0, 1), (n - 1, -1)]));
    }
    gens.extend((0..n.saturating_sub(2)).map(|i| transposition(r, n, i)));
    gens
}

/// `r^n n! / p`.
pub fn order_g(params: TanabeParams) -> BigUint {
    let n = params.n as u32;
    BigUint::from(params.r).pow(n) * factorial(n) / BigUint::from(params.p)
}

/// `r^n (n-1)! / p`.
pub fn order_l(params: TanabeParams) -> BigUint {
    let n = params.n as u32;
    BigUint::from(params.r).pow(n) * factorial(n - 1) / BigUint::from(params.p)
}

fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |a, i| a * BigUint::from(i))
}

/// Breadth-first closure of the generated group.
pub fn group_closure(gens: &[GroupElement], limit: usize) -> Result<HashSet<GroupElement>> {
    let first = gens
        .first()
        .ok_or_else(|| Error::Params("no generators".into()))?;
    let id = GroupElement::identity(first.r, first.n());
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = g.mul(s);
            if seen.insert(h.clone()) {
                Limits::check("group order", seen.len(), limit)?;
                queue.push_back(h);
            }
        }
    }
    Ok(seen)
}

fn field(r: u32) -> Result<Arc<CyclotomicField>> {
    CyclotomicField::get(r)
}

/// The defining `n × n` monomial matrix.
pub fn rho(g: &GroupElement) -> Result<Matrix<Cyclotomic>> {
    tensor_rho(g, 1)
}

/// Images of the basis vectors `v_I` of `V^{⊗k}` as `(J, exponent)`.
fn tensor_images(g: &GroupElement, k: usize) -> Vec<(usize, u32)> {
    let n = g.n();
    (0..n.pow(k as u32))
        .map(|idx| {
            let digits = decode(idx, n, k);
            let image: Vec<usize> = digits.iter().map(|&i| g.perm[i]).collect();
            let e = digits.iter().map(|&i| g.exps[i]).sum::<u32>() % g.r;
            (encode(&image, n), e)
        })
        .collect()
}

fn monomial_matrix(r: u32, images: &[(usize, u32)], scalar: u32) -> Result<Matrix<Cyclotomic>> {
    let f = field(r)?;
    let mut m = Matrix::zeros(images.len(), images.len(), &Cyclotomic::zero(&f));
    for (j, &(i, e)) in images.iter().enumerate() {
        m.set(i, j, Cyclotomic::zeta_pow(&f, (e + scalar) as i64));
    }
    Ok(m)
}

/// `rho(g)^{⊗k}` in the multi-index basis (first coordinate most significant).
pub fn tensor_rho(g: &GroupElement, k: usize) -> Result<Matrix<Cyclotomic>> {
    tensor_dim(g.n(), k)?;
    monomial_matrix(g.r, &tensor_images(g, k), 0)
}

/// Action on `V^{⊗k} ⊗ v_n`; `g` must fix the line of `v_n`.
pub fn tensor_rho_half(g: &GroupElement, k: usize) -> Result<Matrix<Cyclotomic>> {
    let n = g.n();
    if g.perm[n - 1] != n - 1 {
        return Err(Error::Params("element does not fix the line of v_n".into()));
    }
    tensor_dim(n, k)?;
    monomial_matrix(g.r, &tensor_images(g, k), g.exps[n - 1])
}

/// Generators acting at a level: `G` on `V^{⊗k}`, `L` on `V^{⊗k} ⊗ v_n`.
pub fn level_generators(params: TanabeParams, level: Level) -> Result<Vec<Matrix<Cyclotomic>>> {
    let k = level.floor();
    if level.is_half() {
        generators_l(params).iter().map(|g| tensor_rho_half(g, k)).collect()
    } else {
        generators_g(params).iter().map(|g| tensor_rho(g, k)).collect()
    }
}

/// Dimension of the commutant of the generators at `level`, by sparse
/// elimination of `P F - F P = 0` over `Q(ζ_r)`.
pub fn centralizer_dim(params: TanabeParams, level: Level) -> Result<usize> {
    let gens = level_generators(params, level)?;
    let dim = tensor_dim(params.n, level.floor())?;
    let unknowns = dim * dim;
    Limits::check("centralizer unknowns", unknowns, Limits::from_env().max_unknowns)?;
    let mut ech = SparseEchelon::new(unknowns);
    for p in &gens {
        let mut rows_nz: Vec<Vec<(usize, Cyclotomic)>> = vec![vec![]; dim];
        let mut cols_nz: Vec<Vec<(usize, Cyclotomic)>> = vec![vec![]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let v = p.get(i, j);
                if !v.is_zero_value() {
                    rows_nz[i].push((j, v.clone()));
                    cols_nz[j].push((i, v.clone()));
                }
            }
        }
        // (PF)[a][b] = sum_j P[a][j] F[j][b],  (FP)[a][b] = sum_j F[a][j] P[j][b]
        for a in 0..dim {
            for b in 0..dim {
                let mut row: Vec<(usize, Cyclotomic)> = Vec::new();
                for (j, v) in &rows_nz[a] {
                    row.push((j * dim + b, v.clone()));
                }
                for (j, v) in &cols_nz[b] {
                    row.push((a * dim + j, v.negated()));
                }
                ech.insert(row);
            }
        }
    }
    Ok(ech.nullity())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurWeylReport {
    pub params: TanabeParams,
    pub level: Level,
    pub pi_basis_size: usize,
    pub centralizer_dim: usize,
    /// (i) every `φ(x_d)`, `d` in the Pi basis, commutes with the generators.
    pub commutes: bool,
    /// (ii) those operators are linearly independent.
    pub independent: bool,
    /// (iii) Pi-basis size equals the centralizer dimension.
    pub dims_match: bool,
    /// (iv) `φ(x_d) = 0` exactly for spanning `d` with more than `n` blocks.
    pub kernel_exact: bool,
}

impl SchurWeylReport {
    pub fn passed(&self) -> bool {
        self.commutes && self.independent && self.dims_match && self.kernel_exact
    }
}

/// Action of a single `x_d` at `level`.
pub fn level_phi_x(d: &Diagram, level: Level, n: usize) -> Result<Matrix<Rational>> {
    if level.is_half() {
        phi_half(&DiagramVector::basis_element(d.clone(), Basis::X), n)
    } else {
        phi_x(d, n)
    }
}

pub fn verify_schur_weyl(params: TanabeParams, level: Level) -> Result<SchurWeylReport> {
    let n = params.n;
    let basis = tanabe_basis(level, params)?;
    let gens: Vec<Matrix<Cyclotomic>> = level_generators(params, level)?
        .into_iter()
        .map(|g| g.transpose())
        .collect();
    let f = field(params.r)?;
    let proto = Cyclotomic::zero(&f);
    let mut commutes = true;
    let mut flat: Vec<Vec<Rational>> = Vec::new();
    for d in &basis.pi_basis {
        let a = level_phi_x(d, level, n)?;
        let ac = a.map(&proto, |q| Cyclotomic::from_rational(&f, q.clone()));
        for g in &gens {
            if ac.mul(g)? != g.mul(&ac)? {
                commutes = false;
            }
        }
        flat.push((0..a.rows()).flat_map(|i| a.row(i).to_vec()).collect());
    }
    let independent = if flat.is_empty() {
        true
    } else {
        Matrix::from_rows(flat, &Rational::default())?.rank() == basis.pi_basis.len()
    };
    let mut kernel_exact = true;
    for d in basis.spanning() {
        let zero = level_phi_x(&d, level, n)?.is_zero();
        if zero != (d.num_blocks() > n) {
            kernel_exact = false;
        }
    }
    let cdim = centralizer_dim(params, level)?;
    Ok(SchurWeylReport {
        params,
        level,
        pi_basis_size: basis.pi_basis.len(),
        centralizer_dim: cdim,
        commutes,
        independent,
        dims_match: cdim == basis.pi_basis.len(),
        kernel_exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn params(r: u32, p: u32, n: usize) -> TanabeParams {
        TanabeParams::new(r, p, n).unwrap()
    }

    #[test]
    fn closure_orders() {
        for (r, p, n, expect) in [(1, 1, 3, 6usize), (2, 2, 2, 4), (3, 3, 2, 6), (2, 1, 3, 48), (4, 2, 3, 192)] {
            let g = group_closure(&generators_g(params(r, p, n)), 100_000).unwrap();
            assert_eq!(g.len(), expect, "G({r},{p},{n})");
            assert!(g.iter().all(|x| x.in_g(p)));
        }
    }

    #[test]
    fn l_orders() {
        for (r, p, n) in [(2, 1, 3), (2, 2, 3), (3, 3, 3), (4, 2, 3), (2, 2, 4)] {
            let pr = params(r, p, n);
            let l = group_closure(&generators_l(pr), 100_000).unwrap();
            assert_eq!(BigUint::from(l.len()), order_l(pr));
            assert!(l.iter().all(|x| x.in_l(p)));
        }
    }

    #[test]
    fn closure_limit() {
        let err = group_closure(&generators_g(params(2, 1, 4)), 10);
        assert!(matches!(err, Err(Error::SizeLimit(_))));
    }

    #[test]
    fn convention_pinned() {
        let f = field(4).unwrap();
        let t1 = &generators_g(params(4, 2, 2))[0];
        let m = rho(t1).unwrap();
        assert_eq!(*m.get(0, 0), Cyclotomic::zeta_pow(&f, 2));
        assert!(m.get(1, 1).is_one_value());
        let s1 = transposition(1, 2, 0);
        let t = tensor_rho(&s1, 2).unwrap();
        // v1⊗v2 (index 1) ↔ v2⊗v1 (index 2)
        assert!(t.get(2, 1).is_one_value() && t.get(1, 2).is_one_value());
        // the action is diagonal, so v1⊗v1 ↔ v2⊗v2 as well
        assert!(t.get(3, 0).is_one_value() && t.get(0, 3).is_one_value());
        assert!(t.get(1, 1).is_zero_value() && t.get(0, 0).is_zero_value());
    }

    #[test]
    fn rho_is_homomorphism() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for (r, p, n) in [(3, 1, 3), (4, 2, 3), (2, 2, 4)] {
            let elems: Vec<GroupElement> = group_closure(&generators_g(params(r, p, n)), 100_000)
                .unwrap()
                .into_iter()
                .collect();
            for _ in 0..50 {
                let g = &elems[rng.gen_range(0..elems.len())];
                let h = &elems[rng.gen_range(0..elems.len())];
                assert_eq!(rho(&g.mul(h)).unwrap(), rho(g).unwrap().mul(&rho(h).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn centralizer_examples() {
        assert_eq!(centralizer_dim(params(1, 1, 2), Level::integer(1)).unwrap(), 2);
        assert_eq!(centralizer_dim(params(2, 1, 2), Level::integer(1)).unwrap(), 1);
        assert_eq!(centralizer_dim(params(2, 2, 2), Level::integer(2)).unwrap(), 8);
        assert_eq!(centralizer_dim(params(3, 1, 3), Level::integer(1)).unwrap(), 1);
        assert_eq!(centralizer_dim(params(2, 2, 3), Level::integer(0)).unwrap(), 1);
    }

    #[test]
    fn schur_weyl_examples() {
        for (pr, lv) in [
            (params(2, 2, 2), Level::integer(2)),
            (params(3, 1, 3), Level::integer(1)),
            (params(2, 2, 3), Level::half(1)),
        ] {
            let rep = verify_schur_weyl(pr, lv).unwrap();
            assert!(rep.passed(), "{rep:?}");
        }
    }
}
