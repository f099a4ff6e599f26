//! Sparse vectors in `A_k` over `Q`, in the diagram basis or the x-basis.
//!
//! The two bases are tied by `d = sum_{d' ≤ d} x_{d'}`.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::arith::{fmt_rational, is_negative, parse_rational, Rational};
use crate::diagram::Diagram;
use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Diagram,
    X,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Diagram => "diagram",
            Basis::X => "x",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiagramVector {
    k: usize,
    basis: Basis,
    coeffs: BTreeMap<Diagram, Rational>,
}

impl DiagramVector {
    pub fn zero(k: usize, basis: Basis) -> Self {
        DiagramVector {
            k,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis_element(d: Diagram, basis: Basis) -> Self {
        let mut v = Self::zero(d.k(), basis);
        v.add_term(d, Rational::one());
        v
    }

    pub fn from_terms(
        k: usize,
        basis: Basis,
        terms: impl IntoIterator<Item = (Diagram, Rational)>,
    ) -> Result<Self> {
        let mut v = Self::zero(k, basis);
        for (d, c) in terms {
            if d.k() != k {
                return Err(Error::Dimension(format!("diagram {d} is not in A_{k}")));
            }
            v.add_term(d, c);
        }
        Ok(v)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &Rational)> {
        self.coeffs.iter()
    }

    pub fn coefficient(&self, d: &Diagram) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, d: Diagram, c: Rational) {
        assert_eq!(d.k(), self.k, "diagram size");
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(d.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&d);
        }
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.k != other.k {
            return Err(Error::Dimension(format!("A_{} vs A_{}", self.k, other.k)));
        }
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(format!("{} vs {}", self.basis, other.basis)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (d, c) in other.terms() {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.k, self.basis);
        for (d, v) in self.terms() {
            out.add_term(d.clone(), v * c);
        }
        out
    }

    pub fn change_basis(&self, target: Basis) -> Result<Self> {
        match (self.basis, target) {
            (a, b) if a == b => Ok(self.clone()),
            (Basis::Diagram, Basis::X) => self.diagram_to_x(),
            _ => self.x_to_diagram(),
        }
    }

    pub fn to_x(&self) -> Result<Self> {
        self.change_basis(Basis::X)
    }

    pub fn to_diagram(&self) -> Result<Self> {
        self.change_basis(Basis::Diagram)
    }

    fn diagram_to_x(&self) -> Result<Self> {
        let mut out = Self::zero(self.k, Basis::X);
        for (d, c) in self.terms() {
            for dd in d.coarsenings()? {
                out.add_term(dd, c.clone());
            }
        }
        Ok(out)
    }

    /// Triangular solve: peel off the finest pending diagram first, in the
    /// order (more blocks first, then canonical order).
    fn x_to_diagram(&self) -> Result<Self> {
        let mut pending: BTreeMap<(Reverse<usize>, Diagram), Rational> = self
            .terms()
            .map(|(d, c)| ((Reverse(d.num_blocks()), d.clone()), c.clone()))
            .collect();
        let mut out = Self::zero(self.k, Basis::Diagram);
        while let Some(((_, d), a)) = pending.pop_first() {
            for dd in d.coarsenings()? {
                if dd == d {
                    continue;
                }
                let key = (Reverse(dd.num_blocks()), dd);
                let e = pending.entry(key.clone()).or_insert_with(Rational::zero);
                *e -= &a;
                if e.is_zero() {
                    pending.remove(&key);
                }
            }
            out.add_term(d, a);
        }
        Ok(out)
    }

    /// x to diagram through Möbius inversion of the refinement lattice:
    /// `x_d = sum_{d' ≤ d} mu(d', d) d'` with `mu = prod (-1)^(c-1) (c-1)!`
    /// over blocks of `d'` made from `c` blocks of `d`.
    pub fn x_to_diagram_mobius(&self) -> Result<Self> {
        if self.basis != Basis::X {
            return Err(Error::BasisMismatch("expected x-basis input".into()));
        }
        let mut out = Self::zero(self.k, Basis::Diagram);
        for (d, c) in self.terms() {
            for dd in d.coarsenings()? {
                let mut counts = vec![0usize; dd.num_blocks()];
                let outer = dd.labels();
                for b in d.index_blocks() {
                    counts[outer[b[0]]] += 1;
                }
                let mut mu = Rational::one();
                for &m in &counts {
                    for i in 1..m {
                        mu *= Rational::from_integer((i as i64).into());
                    }
                    if m % 2 == 0 {
                        mu = -mu;
                    }
                }
                out.add_term(dd, mu * c);
            }
        }
        Ok(out)
    }

    /// Parse `c * D + c * D - D ...`; the basis is supplied by the caller.
    pub fn parse(s: &str, basis: Basis) -> Result<Self> {
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut depth = 0i32;
        let mut cur = String::new();
        let mut negative = false;
        for ch in s.chars() {
            match ch {
                '{' => depth += 1,
                '}' => depth -= 1,
                _ => {}
            }
            if depth == 0 && (ch == '+' || ch == '-') {
                if !cur.trim().is_empty() {
                    terms.push((negative, std::mem::take(&mut cur)));
                    negative = false;
                }
                if ch == '-' {
                    negative = !negative;
                }
                continue;
            }
            cur.push(ch);
        }
        if !cur.trim().is_empty() {
            terms.push((negative, cur));
        }
        if depth != 0 {
            return Err(Error::Parse("unbalanced braces".into()));
        }
        let mut parsed = Vec::new();
        for (neg, t) in terms {
            let (c, d) = match t.split_once('*') {
                Some((c, d)) => (
                    parse_rational(c).ok_or_else(|| Error::Parse(format!("bad coefficient `{c}`")))?,
                    d,
                ),
                None => (Rational::one(), t.as_str()),
            };
            let c = if neg { -c } else { c };
            parsed.push((d.trim().parse::<Diagram>()?, c));
        }
        let k = match parsed.first() {
            Some((d, _)) => d.k(),
            None => return Err(Error::Parse("no terms".into())),
        };
        Self::from_terms(k, basis, parsed)
    }
}

impl fmt::Display for DiagramVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms().enumerate() {
            let (sep, mag) = if is_negative(c) { (" - ", -c) } else { (" + ", c.clone()) };
            match (i, is_negative(c)) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                _ => write!(f, "{sep}")?,
            }
            write!(f, "{} * {}", fmt_rational(&mag), d)?;
        }
        Ok(())
    }
}
