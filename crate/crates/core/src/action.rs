//! The tensor action `φ: A_k(n) → End(V^{⊗k})` as exact matrices.
//!
//! Rows are input multi-indices and columns outputs, so `φ(ab) = φ(a) φ(b)`.
//! Top vertices read the input, bottom vertices the output. Multi-indices are
//! encoded base `n` with the first coordinate most significant.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::arith::{rat, Cyclotomic, CyclotomicField, Matrix, Rational};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::group::{tensor_rho, GroupElement};
use crate::limits::Limits;
use crate::vector::{Basis, DiagramVector};

pub type ActionMatrix = Matrix<Rational>;

/// `n^k`, subject to the tensor-size guard.
pub fn tensor_dim(n: usize, k: usize) -> Result<usize> {
    let dim = (n as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    let max = Limits::from_env().max_tensor_dim;
    Limits::check("tensor dimension n^k", usize::try_from(dim).unwrap_or(usize::MAX), max)?;
    Ok(dim as usize)
}

pub fn encode(digits: &[usize], n: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * n + d)
}

pub fn decode(mut idx: usize, n: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for slot in out.iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
    out
}

/// Fill ones at `(input, output)` for each value assignment to the blocks.
fn phi_assignments(d: &Diagram, n: usize, injective: bool) -> Result<ActionMatrix> {
    let k = d.k();
    let dim = tensor_dim(n, k)?;
    let mut m = Matrix::rational_zeros(dim, dim);
    let labels = d.labels();
    let blocks = d.num_blocks();
    let mut vals = vec![0usize; blocks];
    let mut used = vec![false; n];
    fn rec(
        b: usize,
        vals: &mut Vec<usize>,
        used: &mut Vec<bool>,
        injective: bool,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        if b == vals.len() {
            emit(vals);
            return;
        }
        for v in 0..used.len() {
            if injective && used[v] {
                continue;
            }
            used[v] = true;
            vals[b] = v;
            rec(b + 1, vals, used, injective, emit);
            used[v] = false;
        }
    }
    if injective && blocks > n {
        return Ok(m);
    }
    rec(0, &mut vals, &mut used, injective, &mut |vals| {
        let top: Vec<usize> = (0..k).map(|i| vals[labels[i]]).collect();
        let bottom: Vec<usize> = (0..k).map(|i| vals[labels[k + i]]).collect();
        m.set(encode(&top, n), encode(&bottom, n), Rational::one());
    });
    Ok(m)
}

/// Indices constant on every block.
pub fn phi_diagram(d: &Diagram, n: usize) -> Result<ActionMatrix> {
    phi_assignments(d, n, false)
}

/// Indices whose equality pattern is exactly `d`.
pub fn phi_x(d: &Diagram, n: usize) -> Result<ActionMatrix> {
    phi_assignments(d, n, true)
}

pub fn phi_vector(v: &DiagramVector, n: usize) -> Result<ActionMatrix> {
    let dim = tensor_dim(n, v.k())?;
    let mut out = Matrix::rational_zeros(dim, dim);
    for (d, c) in v.terms() {
        let m = match v.basis() {
            Basis::Diagram => phi_diagram(d, n)?,
            Basis::X => phi_x(d, n)?,
        };
        out = out.add(&m.scale(c))?;
    }
    Ok(out)
}

/// Action on `V^{⊗k} ⊗ v_n` of an element of `A_{k+1}`: the block of the
/// ambient matrix on indices ending in `n`.
pub fn phi_half(v: &DiagramVector, n: usize) -> Result<ActionMatrix> {
    let kk = v.k();
    if kk == 0 {
        return Err(Error::Dimension("half-level action needs an element of A_{k+1}".into()));
    }
    let full = phi_vector(v, n)?;
    let dim = tensor_dim(n, kk - 1)?;
    let mut out = Matrix::rational_zeros(dim, dim);
    for a in 0..dim {
        let row = a * n + n - 1;
        for col in 0..full.cols() {
            let x = full.get(row, col);
            if x.is_zero() {
                continue;
            }
            if col % n != n - 1 {
                return Err(Error::Invariant(format!(
                    "half-level action leaks from row {row} to column {col}"
                )));
            }
            out.set(a, col / n, x.clone());
        }
    }
    Ok(out)
}

fn cyclotomic_sum(r: u32, n: usize, k: usize, pairs_below: usize) -> Result<ActionMatrix> {
    let f = CyclotomicField::get(r)?;
    let dim = tensor_dim(n, k)?;
    let mut acc = Matrix::zeros(dim, dim, &Cyclotomic::zero(&f));
    for l in 0..r as i64 {
        for i in 0..pairs_below {
            for j in i + 1..pairs_below {
                let mut e = vec![0i64; n];
                e[i] = l;
                e[j] = -l;
                let mut perm: Vec<usize> = (0..n).collect();
                perm.swap(i, j);
                let g = GroupElement::new(r, e, perm)?;
                acc = acc.add(&tensor_rho(&g, k)?)?;
            }
        }
    }
    let acc = acc.scale(&Cyclotomic::from_rational(&f, Rational::new(1.into(), r.into())));
    let q = acc.to_rational()?;
    for i in 0..dim {
        for j in 0..dim {
            if !q.get(i, j).is_integer() {
                return Err(Error::Invariant(format!("κ entry ({i},{j}) is not an integer")));
            }
        }
    }
    Ok(q.transpose())
}

/// `κ_{r,n} = (1/r) Σ_l Σ_{i<j} ζ_i^l ζ_j^{-l} s_ij` on `V^{⊗k}`, row convention.
pub fn kappa_matrix(r: u32, n: usize, k: usize) -> Result<ActionMatrix> {
    cyclotomic_sum(r, n, k, n)
}

/// `κ_{r,n-1}` on `V^{⊗k} ⊗ v_n`: pairs `i < j ≤ n-1`, which fix `v_n`.
pub fn kappa_half_matrix(r: u32, n: usize, k: usize) -> Result<ActionMatrix> {
    if n == 0 {
        return Err(Error::Params("n must be positive".into()));
    }
    cyclotomic_sum(r, n, k, n - 1)
}

/// The two classes of `G(2,2,2k)` splitting the class of `(12)(34)⋯`:
/// perfect matchings with a sign per pair, split by parity of the number of
/// negative pairs. Returns `(odd, even)`.
pub fn z_classes(k: usize) -> Result<(Vec<GroupElement>, Vec<GroupElement>)> {
    if k == 0 || k > 3 {
        return Err(Error::SizeLimit(format!("z-element classes for k = {k} (need 1 ≤ k ≤ 3)")));
    }
    let n = 2 * k;
    let mut matchings = Vec::new();
    fn rec(free: Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some((&a, rest)) = free.split_first() else {
            out.push(cur.clone());
            return;
        };
        for (t, &b) in rest.iter().enumerate() {
            let remaining: Vec<usize> = rest
                .iter()
                .enumerate()
                .filter(|&(s, _)| s != t)
                .map(|(_, &x)| x)
                .collect();
            cur.push((a, b));
            rec(remaining, cur, out);
            cur.pop();
        }
    }
    rec((0..n).collect(), &mut vec![], &mut matchings);
    let (mut odd, mut even) = (vec![], vec![]);
    for m in &matchings {
        for signs in 0u32..1 << k {
            let mut perm: Vec<usize> = (0..n).collect();
            let mut e = vec![0i64; n];
            for (t, &(a, b)) in m.iter().enumerate() {
                perm.swap(a, b);
                if signs >> t & 1 == 1 {
                    e[a] = 1;
                    e[b] = 1;
                }
            }
            let g = GroupElement::new(2, e, perm)?;
            if signs.count_ones() % 2 == 1 {
                odd.push(g);
            } else {
                even.push(g);
            }
        }
    }
    Ok((odd, even))
}

/// `z = ΣC_2 − ΣC_1` acting on `V^{⊗k}` for `G(2,2,2k)`.
pub fn z_matrix(k: usize) -> Result<ActionMatrix> {
    let (odd, even) = z_classes(k)?;
    let n = 2 * k;
    let dim = tensor_dim(n, k)?;
    let f = CyclotomicField::get(2)?;
    let mut acc = Matrix::zeros(dim, dim, &Cyclotomic::zero(&f));
    for g in &even {
        acc = acc.add(&tensor_rho(g, k)?)?;
    }
    for g in &odd {
        acc = acc.sub(&tensor_rho(g, k)?)?;
    }
    debug_assert!(even.iter().chain(&odd).all(|g| g.in_g(2)));
    Ok(acc.to_rational()?.transpose())
}

/// `nullity(A − cI)` for each candidate `c`.
pub fn eig_multiplicities(a: &ActionMatrix, candidates: &[Rational]) -> Result<BTreeMap<Rational, usize>> {
    let mut out = BTreeMap::new();
    for c in candidates {
        if out.contains_key(c) {
            continue;
        }
        let m = a.shift_diagonal(c)?.nullity();
        out.insert(c.clone(), m);
    }
    Ok(out)
}

/// Like [`eig_multiplicities`] but fails unless the multiplicities account for the whole space.
pub fn eig_multiplicities_exhaustive(
    a: &ActionMatrix,
    candidates: &[Rational],
) -> Result<BTreeMap<Rational, usize>> {
    let m = eig_multiplicities(a, candidates)?;
    let total: usize = m.values().sum();
    if total != a.rows() {
        return Err(Error::Invariant(format!(
            "eigenvalue multiplicities sum to {total}, not {}",
            a.rows()
        )));
    }
    Ok(m)
}

/// Dimension of `{v : A_j v = c_j v for all j}`.
pub fn joint_eigenspace_dim(ops: &[ActionMatrix], values: &[Rational]) -> Result<usize> {
    if ops.len() != values.len() {
        return Err(Error::Dimension("operator and eigenvalue counts differ".into()));
    }
    let shifted = ops
        .iter()
        .zip(values)
        .map(|(a, c)| a.shift_diagonal(c))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::vstack(&shifted)?.nullity())
}

/// Integer candidates `lo..=hi`.
pub fn integer_range(lo: i64, hi: i64) -> Vec<Rational> {
    (lo..=hi).map(rat).collect()
}

#[allow(dead_code)]
fn is_identity(m: &ActionMatrix) -> bool {
    m == &Matrix::rational_identity(m.rows())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::enumerate_diagrams;
    use crate::level::Level;
    use crate::tanabe::multiply_diagram;

    #[test]
    fn encoding() {
        assert_eq!(encode(&[1, 0, 2], 3), 11);
        assert_eq!(decode(11, 3, 3), vec![1, 0, 2]);
        assert_eq!(decode(0, 3, 0), Vec::<usize>::new());
    }

    #[test]
    fn identity_and_empty() {
        assert!(is_identity(&phi_diagram(&Diagram::identity(2), 3).unwrap()));
        let e = phi_diagram(&Diagram::identity(0), 3).unwrap();
        assert_eq!(e.rows(), 1);
        assert!(!is_identity(&phi_x(&Diagram::identity(2), 3).unwrap()));
    }

    #[test]
    fn homomorphism_on_a2() {
        let ds = enumerate_diagrams(Level::integer(2)).unwrap();
        for n in 2..=4 {
            for a in &ds {
                for b in &ds {
                    let va = DiagramVector::basis_element(a.clone(), Basis::Diagram);
                    let vb = DiagramVector::basis_element(b.clone(), Basis::Diagram);
                    let lhs = phi_vector(&multiply_diagram(&va, &vb, n).unwrap(), n).unwrap();
                    let rhs = phi_vector(&va, n).unwrap().mul(&phi_vector(&vb, n).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "{a} * {b}, n={n}");
                }
            }
        }
    }

    #[test]
    fn kernel_exactness() {
        for lv in [Level::integer(2), Level::integer(3)] {
            for d in enumerate_diagrams(lv).unwrap() {
                for n in 2..=4 {
                    if lv.ambient() == 3 && n == 4 {
                        continue;
                    }
                    assert_eq!(phi_x(&d, n).unwrap().is_zero(), d.num_blocks() > n);
                }
            }
        }
    }

    #[test]
    fn half_identity_and_slice() {
        let id = DiagramVector::basis_element(Diagram::identity(3), Basis::Diagram);
        assert!(is_identity(&phi_half(&id, 2).unwrap()));
        let d: Diagram = "{1,2,1',2'}".parse().unwrap();
        let full = phi_diagram(&d, 2).unwrap();
        let half = phi_half(&DiagramVector::basis_element(d, Basis::Diagram), 2).unwrap();
        assert_eq!(half.rows(), 2);
        assert_eq!(half.get(1, 1), full.get(3, 3));
        assert_eq!(half.get(0, 0), full.get(1, 1));
    }

    #[test]
    fn half_leak_detected() {
        // {2};{2'} breaks the subspace V ⊗ v_n
        let d: Diagram = "{1,1'};{2};{2'}".parse().unwrap();
        let err = phi_half(&DiagramVector::basis_element(d, Basis::Diagram), 2);
        assert!(matches!(err, Err(Error::Invariant(_))));
    }

    #[test]
    fn kappa_small_cases() {
        assert_eq!(*kappa_matrix(2, 4, 0).unwrap().get(0, 0), rat(6));
        let k = kappa_matrix(1, 2, 1).unwrap();
        assert_eq!((k.get(0, 1), k.get(1, 0), k.get(0, 0)), (&rat(1), &rat(1), &rat(0)));
    }

    #[test]
    fn z_element_k1() {
        let z = z_matrix(1).unwrap();
        let (odd, even) = z_classes(1).unwrap();
        assert_eq!((odd.len(), even.len()), (1, 1));
        // ρ((12)) − ρ((−1,−1,(12))) = 2 · swap
        assert_eq!(z.get(0, 1), &rat(2));
        assert_eq!(z.get(0, 0), &rat(0));
        assert_eq!(z_classes(2).unwrap().0.len() + z_classes(2).unwrap().1.len(), 12);
    }

    #[test]
    fn z_kills_repeated_indices() {
        let z = z_matrix(2).unwrap();
        // v_1 ⊗ v_1 has index 0
        assert!((0..16).all(|j| z.get(0, j).is_zero()));
    }

    #[test]
    fn multiplicities() {
        let id = Matrix::rational_identity(3);
        let m = eig_multiplicities_exhaustive(&id, &[rat(1)]).unwrap();
        assert_eq!(m[&rat(1)], 3);
        assert!(eig_multiplicities_exhaustive(&id, &[rat(0)]).is_err());
        assert_eq!(joint_eigenspace_dim(&[id.clone(), id], &[rat(1), rat(1)]).unwrap(), 3);
    }

    #[test]
    fn tensor_guard() {
        assert!(matches!(tensor_dim(10, 4), Err(Error::SizeLimit(_))) || std::env::var(crate::limits::OVERRIDE_VAR).is_ok());
    }
}
