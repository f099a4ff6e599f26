//! Computed JM spectra: the operators `φ(M_j)` at a level and their joint
//! eigenspaces, compared against the Bratteli prediction.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigUint, ToPrimitive};

use crate::action::{eig_multiplicities, integer_range, phi_half, phi_vector, tensor_dim, ActionMatrix};
use crate::arith::{rat, Rational};
use crate::bratteli::{build_tower_to, content_sums, has_m22, predict_jm_spectrum};
use crate::error::Result;
use crate::level::Level;
use crate::tanabe::{build_m22, build_z, jm_family, TanabeParams};
use crate::vector::DiagramVector;

/// `φ` at a level: the full action at integer levels, the `v_n` block at half levels.
pub fn level_phi(v: &DiagramVector, level: Level, n: usize) -> Result<ActionMatrix> {
    if level.is_half() {
        phi_half(v, n)
    } else {
        phi_vector(v, n)
    }
}

/// `φ(M_{1/2}), …, φ(M_l)`, then `φ(M_{k,2,2})` for `(2,2,2k)` at level `k`.
pub fn jm_operators(params: TanabeParams, level: Level) -> Result<Vec<ActionMatrix>> {
    let mut ops = jm_family(level, params.r, params.n)?
        .into_iter()
        .map(|(_, m)| level_phi(&m, level, params.n))
        .collect::<Result<Vec<_>>>()?;
    if has_m22(params, level) {
        ops.push(phi_vector(&build_m22(level.floor(), params)?, params.n)?);
    }
    Ok(ops)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JmRow {
    pub tuple: Vec<i64>,
    pub predicted: BigUint,
    pub computed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JmComparison {
    pub params: TanabeParams,
    pub level: Level,
    pub rows: Vec<JmRow>,
    pub tensor_dim: usize,
}

impl JmComparison {
    pub fn computed_total(&self) -> usize {
        self.rows.iter().map(|r| r.computed).sum()
    }

    pub fn passed(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.predicted.to_usize() == Some(r.computed))
            && self.computed_total() == self.tensor_dim
    }
}

/// Joint eigenspace dimension for one tuple, by stacking `φ(M_j) − ε_j I`.
fn joint_dim(ops: &[ActionMatrix], tuple: &[i64]) -> Result<usize> {
    let vals: Vec<Rational> = tuple.iter().map(|&e| rat(e)).collect();
    crate::action::joint_eigenspace_dim(ops, &vals)
}

pub fn compare_jm(params: TanabeParams, level: Level) -> Result<JmComparison> {
    let graph = build_tower_to(params, level)?;
    let predicted = predict_jm_spectrum(&graph, level)?;
    let ops = jm_operators(params, level)?;
    let rows = predicted
        .into_iter()
        .map(|(tuple, predicted)| {
            let computed = joint_dim(&ops, &tuple)?;
            Ok(JmRow {
                tuple,
                predicted,
                computed,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(JmComparison {
        params,
        level,
        rows,
        tensor_dim: tensor_dim(params.n, level.floor())?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Containment {
    /// Eigenvalue of `φ(Z_{k,r})` to multiplicity.
    pub spectrum: BTreeMap<i64, usize>,
    pub allowed: BTreeSet<i64>,
    pub tensor_dim: usize,
}

impl Containment {
    pub fn passed(&self) -> bool {
        self.spectrum.values().sum::<usize>() == self.tensor_dim
            && self.spectrum.keys().all(|e| self.allowed.contains(e))
    }
}

/// Eigenvalues of `φ(Z_{k,r})` against the content sums of the level-`k` nodes.
/// The tower is built to level `k` even past `floor(n/2)`.
pub fn spectrum_containment(params: TanabeParams, k: usize) -> Result<Containment> {
    let level = Level::integer(k);
    let graph = build_tower_to(params, level)?;
    let allowed: BTreeSet<i64> = content_sums(&graph, level)?.into_iter().collect();
    let z = phi_vector(&build_z(level, params.r, params.n)?, params.n)?;
    let bound = (params.r as i64) * (k as i64) * (params.n as i64);
    let mut candidates = integer_range(-bound, bound);
    candidates.extend(allowed.iter().map(|&e| rat(e)));
    let spectrum = eig_multiplicities(&z, &candidates)?
        .into_iter()
        .filter(|(_, m)| *m > 0)
        .map(|(e, m)| (e.to_integer().to_i64().expect("small eigenvalue"), m))
        .collect();
    Ok(Containment {
        spectrum,
        allowed,
        tensor_dim: tensor_dim(params.n, k)?,
    })
}
