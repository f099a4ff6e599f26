//! Young diagrams, r-tuples and `(m,p)`-necklaces.
//!
//! An r-tuple `(λ_1, …, λ_r)` is stored by slot; the necklace entry `λ_{(i,j)}`
//! is slot `(j−1)m + i`. Two tuples are equivalent when they differ by a power
//! of `sh^m`, where `sh (λ_1,…,λ_r) = (λ_r, λ_1, …, λ_{r−1})`.

use std::cmp::Reverse;
use std::fmt;

use num::{BigUint, One};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungDiagram(Vec<usize>);

impl YoungDiagram {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Params(format!("{parts:?} is not a partition")));
        }
        Ok(YoungDiagram(parts))
    }

    pub fn row(n: usize) -> Self {
        YoungDiagram(if n == 0 { vec![] } else { vec![n] })
    }

    pub fn empty() -> Self {
        YoungDiagram(vec![])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Rows ending in a removable box (inner corners).
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.0.len())
            .filter(|&i| i + 1 == self.0.len() || self.0[i] > self.0[i + 1])
            .collect()
    }

    /// Rows where a box can be added (outer corners).
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.0.len())
            .filter(|&i| i == 0 || self.0[i - 1] > self.0.get(i).copied().unwrap_or(0))
            .collect()
    }

    /// Remove the last box of row `i`; returns the new diagram and the box's content.
    pub fn remove_box(&self, i: usize) -> (YoungDiagram, i64) {
        let mut parts = self.0.clone();
        let content = parts[i] as i64 - 1 - i as i64;
        parts[i] -= 1;
        if parts[i] == 0 {
            parts.pop();
        }
        (YoungDiagram(parts), content)
    }

    /// Add a box at the end of row `i`; returns the new diagram and the box's content.
    pub fn add_box(&self, i: usize) -> (YoungDiagram, i64) {
        let mut parts = self.0.clone();
        if i == parts.len() {
            parts.push(0);
        }
        let content = parts[i] as i64 - i as i64;
        parts[i] += 1;
        (YoungDiagram(parts), content)
    }

    /// Sum of `column − row` over all boxes.
    pub fn content_sum(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &len)| (0..len as i64).map(|j| j - i as i64).sum::<i64>())
            .sum()
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn hook_count(&self) -> BigUint {
        let n = self.size();
        let mut hooks = BigUint::one();
        for (i, &len) in self.0.iter().enumerate() {
            for j in 0..len {
                let arm = len - j - 1;
                let leg = self.0[i + 1..].iter().filter(|&&l| l > j).count();
                hooks *= BigUint::from(arm + leg + 1);
            }
        }
        factorial(n) / hooks
    }
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |a, i| a * BigUint::from(i))
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RTuple(pub Vec<YoungDiagram>);

impl RTuple {
    /// `((n), ∅, …, ∅)`.
    pub fn root(r: usize, n: usize) -> Self {
        let mut v = vec![YoungDiagram::empty(); r];
        v[0] = YoungDiagram::row(n);
        RTuple(v)
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(YoungDiagram::size).sum()
    }

    /// `sh^s`: slot `t` moves to slot `t + s (mod r)`.
    pub fn shift(&self, s: usize) -> Self {
        let r = self.r();
        let mut out = vec![YoungDiagram::empty(); r];
        for (t, y) in self.0.iter().enumerate() {
            out[(t + s) % r] = y.clone();
        }
        RTuple(out)
    }

    pub fn with_slot(&self, t: usize, y: YoungDiagram) -> Self {
        let mut v = self.0.clone();
        v[t] = y;
        RTuple(v)
    }

    /// `multinomial(n; |λ_1|, …, |λ_r|) · Π hookCount(λ_i)`.
    pub fn tab_count(&self) -> BigUint {
        let mut acc = factorial(self.size());
        for y in &self.0 {
            acc = acc / factorial(y.size()) * y.hook_count();
        }
        acc
    }

    pub fn content_sum(&self) -> i64 {
        self.0.iter().map(YoungDiagram::content_sum).sum()
    }

    /// Entries in necklace order `(1,1), (1,2), …, (1,p), (2,1), …`.
    fn necklace_order(&self, m: usize, p: usize) -> Vec<&YoungDiagram> {
        (0..m)
            .flat_map(|i| (0..p).map(move |j| j * m + i))
            .map(|t| &self.0[t])
            .collect()
    }
}

/// Orbit data of an r-tuple under `sh^m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShiftOrbit {
    /// `b(λ)`, the number of distinct rotations.
    pub b: usize,
    /// `u(λ) = p / b(λ)`.
    pub u: usize,
    /// Least `i` such that `sh^{im}` gives the canonical representative.
    pub canonical_rotation: usize,
}

fn check_mp(r: usize, m: usize, p: usize) -> Result<()> {
    if m * p != r || m == 0 {
        return Err(Error::Params(format!("m·p = {}·{} ≠ r = {r}", m, p)));
    }
    Ok(())
}

/// The canonical representative maximises the necklace-order serialization,
/// so diagrams with more boxes tend to come first, as in the drawn figures.
pub fn shift_orbit(t: &RTuple, m: usize, p: usize) -> Result<ShiftOrbit> {
    check_mp(t.r(), m, p)?;
    let rotations: Vec<RTuple> = (0..p).map(|i| t.shift(i * m)).collect();
    let b = (0..p).filter(|&i| rotations[..i].iter().all(|x| *x != rotations[i])).count();
    let best = (0..p)
        .max_by_key(|&i| (rotations[i].necklace_order(m, p), Reverse(i)))
        .expect("p ≥ 1");
    Ok(ShiftOrbit {
        b,
        u: p / b,
        canonical_rotation: best,
    })
}

fn fmt_necklace(t: &RTuple, m: usize, p: usize, color: Option<(usize, usize)>) -> String {
    let entry = |slot: usize| match color {
        Some((c, n)) if c == slot => format!("{}^{n}", t.0[slot]),
        _ => t.0[slot].to_string(),
    };
    let row = |i: usize| {
        let items: Vec<String> = (0..p).map(|j| entry(j * m + i)).collect();
        format!("({})", items.join(","))
    };
    if m == 1 {
        row(0)
    } else {
        let rows: Vec<String> = (0..m).map(row).collect();
        format!("({})", rows.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Necklace {
    m: usize,
    p: usize,
    tuple: RTuple,
    b: usize,
}

impl Necklace {
    pub fn new(t: RTuple, m: usize, p: usize) -> Result<Self> {
        let orbit = shift_orbit(&t, m, p)?;
        Ok(Necklace {
            m,
            p,
            tuple: t.shift(orbit.canonical_rotation * m),
            b: orbit.b,
        })
    }

    pub fn tuple(&self) -> &RTuple {
        &self.tuple
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn u(&self) -> usize {
        self.p / self.b
    }

    /// `λ_{(i,j)}`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> &YoungDiagram {
        &self.tuple.0[(j - 1) * self.m + i - 1]
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_necklace(&self.tuple, self.m, self.p, None))
    }
}

/// A necklace of `n−1` boxes with one slot colored by `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredNecklace {
    m: usize,
    p: usize,
    n: usize,
    tuple: RTuple,
    color: usize,
}

impl ColoredNecklace {
    /// `color` is a 0-based slot; rotation moves it with the entries.
    pub fn new(t: RTuple, color: usize, m: usize, p: usize, n: usize) -> Result<Self> {
        check_mp(t.r(), m, p)?;
        let r = t.r();
        if color >= r {
            return Err(Error::Params(format!("color slot {color} out of range")));
        }
        let best = (0..p)
            .max_by_key(|&i| {
                let rot = t.shift(i * m);
                let key: Vec<YoungDiagram> = rot.necklace_order(m, p).into_iter().cloned().collect();
                (key, Reverse((color + i * m) % r), Reverse(i))
            })
            .expect("p ≥ 1");
        Ok(ColoredNecklace {
            m,
            p,
            n,
            tuple: t.shift(best * m),
            color: (color + best * m) % r,
        })
    }

    pub fn tuple(&self) -> &RTuple {
        &self.tuple
    }

    /// 0-based colored slot of the canonical representative.
    pub fn color(&self) -> usize {
        self.color
    }

    /// Color position `(i, j)`, 1-based.
    pub fn color_position(&self) -> (usize, usize) {
        (self.color % self.m + 1, self.color / self.m + 1)
    }
}

impl fmt::Display for ColoredNecklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            fmt_necklace(&self.tuple, self.m, self.p, Some((self.color, self.n)))
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yd(parts: &[usize]) -> YoungDiagram {
        YoungDiagram::new(parts.to_vec()).unwrap()
    }

    /// Brute-force count of standard fillings.
    fn brute_syt(parts: &[usize]) -> usize {
        if parts.iter().sum::<usize>() == 0 {
            return 1;
        }
        let y = YoungDiagram(parts.to_vec());
        y.removable_rows()
            .into_iter()
            .map(|i| brute_syt(y.remove_box(i).0.parts()))
            .sum()
    }

    #[test]
    fn hook_counts() {
        assert_eq!(yd(&[5]).hook_count(), BigUint::from(1u32));
        assert_eq!(yd(&[2, 1]).hook_count(), BigUint::from(2u32));
        for p in [vec![3, 2], vec![3, 1, 1], vec![4, 2, 1], vec![2, 2, 2]] {
            assert_eq!(yd(&p).hook_count(), BigUint::from(brute_syt(&p)));
        }
        assert_eq!(YoungDiagram::empty().hook_count(), BigUint::one());
    }

    #[test]
    fn tab_counts() {
        assert_eq!(RTuple(vec![yd(&[2]), yd(&[2])]).tab_count(), BigUint::from(6u32));
        assert_eq!(RTuple(vec![yd(&[2, 1]), yd(&[1])]).tab_count(), BigUint::from(8u32));
    }

    #[test]
    fn corners_and_contents() {
        let y = yd(&[3, 1]);
        assert_eq!(y.removable_rows(), vec![0, 1]);
        assert_eq!(y.addable_rows(), vec![0, 1, 2]);
        assert_eq!(y.remove_box(0), (yd(&[2, 1]), 2));
        assert_eq!(y.add_box(2), (yd(&[3, 1, 1]), -2));
        assert_eq!(y.content_sum(), 1 + 2 - 1);
        assert!(YoungDiagram::new(vec![1, 2]).is_err());
    }

    #[test]
    fn orbits() {
        let kk = RTuple(vec![yd(&[2]), yd(&[2])]);
        let o = shift_orbit(&kk, 1, 2).unwrap();
        assert_eq!((o.b, o.u), (1, 2));
        let o = shift_orbit(&RTuple::root(2, 4), 1, 2).unwrap();
        assert_eq!((o.b, o.u), (2, 1));
        let t = RTuple(vec![yd(&[2, 1]); 3]);
        let o = shift_orbit(&t, 1, 3).unwrap();
        assert_eq!((o.b, o.u), (1, 3));
        assert!(shift_orbit(&t, 2, 2).is_err());
    }

    #[test]
    fn canonical_labels() {
        let t = RTuple(vec![YoungDiagram::empty(), yd(&[4])]);
        assert_eq!(Necklace::new(t, 1, 2).unwrap().to_string(), "((4),∅)");
        let c = ColoredNecklace::new(RTuple(vec![yd(&[1]), yd(&[2])]), 1, 1, 2, 4).unwrap();
        assert_eq!(c.to_string(), "((2)^4,(1))");
        // m = 3, p = 2: slot (i,j) sits at (j-1)·3 + i
        let t = RTuple(vec![
            YoungDiagram::empty(),
            YoungDiagram::empty(),
            YoungDiagram::empty(),
            yd(&[4]),
            yd(&[1]),
            YoungDiagram::empty(),
        ]);
        let c = ColoredNecklace::new(t, 4, 3, 2, 6).unwrap();
        assert_eq!(c.to_string(), "(((4),∅),((1)^6,∅),(∅,∅))");
        assert_eq!(c.color_position(), (2, 1));
    }

    #[test]
    fn necklace_equivalence_is_rotation_invariant() {
        let t = RTuple(vec![yd(&[1]), YoungDiagram::empty(), yd(&[2]), yd(&[1, 1])]);
        let a = Necklace::new(t.clone(), 2, 2).unwrap();
        let b = Necklace::new(t.shift(2), 2, 2).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, Necklace::new(t.shift(1), 2, 2).unwrap());
        assert_eq!(a.entry(1, 1).size() + a.entry(1, 2).size(), 3);
    }
}
