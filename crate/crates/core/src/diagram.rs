//! Set-partition diagrams of `A_k` and their composition.
//!
//! Vertices are numbered `0..k` on top and `k..2k` on the bottom, so top
//! vertex `i` is `i-1` and bottom vertex `i'` is `k+i-1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::level::Level;
use crate::limits::Limits;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    /// Top vertex `i`, 1-based.
    Top(usize),
    /// Bottom vertex `i'`, 1-based.
    Bottom(usize),
}

impl Vertex {
    pub fn index(self, k: usize) -> usize {
        match self {
            Vertex::Top(i) => i - 1,
            Vertex::Bottom(i) => k + i - 1,
        }
    }

    pub fn from_index(v: usize, k: usize) -> Self {
        if v < k {
            Vertex::Top(v + 1)
        } else {
            Vertex::Bottom(v - k + 1)
        }
    }

    fn number(self) -> usize {
        match self {
            Vertex::Top(i) | Vertex::Bottom(i) => i,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Top(i) => write!(f, "{i}"),
            Vertex::Bottom(i) => write!(f, "{i}'"),
        }
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (num, bottom) = match s.strip_suffix('\'') {
            Some(t) => (t, true),
            None => (s, false),
        };
        let i: usize = num
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex `{s}`")))?;
        if i == 0 {
            return Err(Error::Parse("vertices are numbered from 1".into()));
        }
        Ok(if bottom { Vertex::Bottom(i) } else { Vertex::Top(i) })
    }
}

/// Top/bottom vertex counts `(N(B), M(B))` of a block.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct BlockStats {
    pub top: usize,
    pub bottom: usize,
}

impl BlockStats {
    pub fn difference(self) -> i64 {
        self.top as i64 - self.bottom as i64
    }
}

/// A set partition of `{1..k, 1'..k'}` in canonical form: blocks sorted
/// internally and ordered by least vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    k: usize,
    blocks: Vec<Vec<usize>>,
}

impl Diagram {
    /// Build from one block label per vertex (any labels).
    pub fn from_labels(k: usize, labels: &[usize]) -> Self {
        assert_eq!(labels.len(), 2 * k);
        let mut seen: Vec<(usize, usize)> = Vec::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (v, &l) in labels.iter().enumerate() {
            match seen.iter().find(|(lab, _)| *lab == l) {
                Some(&(_, b)) => blocks[b].push(v),
                None => {
                    seen.push((l, blocks.len()));
                    blocks.push(vec![v]);
                }
            }
        }
        Diagram { k, blocks }
    }

    /// Build from blocks of raw vertex indices, checking they partition `0..2k`.
    pub fn from_index_blocks(k: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut labels = vec![usize::MAX; 2 * k];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Parse("empty block".into()));
            }
            for &v in block {
                if v >= 2 * k {
                    return Err(Error::Parse(format!("vertex index {v} out of range for k={k}")));
                }
                if labels[v] != usize::MAX {
                    return Err(Error::Parse(format!(
                        "vertex {} appears twice",
                        Vertex::from_index(v, k)
                    )));
                }
                labels[v] = b;
            }
        }
        if let Some(v) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::Parse(format!("vertex {} missing", Vertex::from_index(v, k))));
        }
        Ok(Self::from_labels(k, &labels))
    }

    pub fn from_blocks(k: usize, blocks: &[Vec<Vertex>]) -> Result<Self> {
        for v in blocks.iter().flatten() {
            if v.number() > k {
                return Err(Error::Parse(format!("vertex {v} out of range for k={k}")));
            }
        }
        Self::from_index_blocks(
            k,
            blocks
                .iter()
                .map(|b| b.iter().map(|v| v.index(k)).collect())
                .collect(),
        )
    }

    pub fn identity(k: usize) -> Self {
        Diagram {
            k,
            blocks: (0..k).map(|i| vec![i, k + i]).collect(),
        }
    }

    /// The diagram with every vertex alone.
    pub fn singletons(k: usize) -> Self {
        Diagram {
            k,
            blocks: (0..2 * k).map(|v| vec![v]).collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Blocks as raw vertex indices.
    pub fn index_blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn blocks(&self) -> Vec<Vec<Vertex>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|&v| Vertex::from_index(v, self.k)).collect())
            .collect()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Block index of each vertex.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; 2 * self.k];
        for (b, block) in self.blocks.iter().enumerate() {
            for &v in block {
                labels[v] = b;
            }
        }
        labels
    }

    pub fn block_stats(&self) -> Vec<BlockStats> {
        self.blocks
            .iter()
            .map(|b| {
                let top = b.iter().filter(|&&v| v < self.k).count();
                BlockStats {
                    top,
                    bottom: b.len() - top,
                }
            })
            .collect()
    }

    /// True when `k` and `k'` share a block, i.e. the diagram lies in `A_{k-1/2}`.
    pub fn is_half_diagram(&self) -> bool {
        self.k > 0 && {
            let l = self.labels();
            l[self.k - 1] == l[2 * self.k - 1]
        }
    }

    /// Partition induced on the top row, as block labels per top vertex.
    fn row_partition(&self, bottom: bool) -> Vec<usize> {
        let labels = self.labels();
        let off = if bottom { self.k } else { 0 };
        let raw: Vec<usize> = (0..self.k).map(|i| labels[off + i]).collect();
        relabel(&raw)
    }

    pub fn top_partition(&self) -> Vec<usize> {
        self.row_partition(false)
    }

    pub fn bottom_partition(&self) -> Vec<usize> {
        self.row_partition(true)
    }

    /// Whether the bottom row of `self` induces the same partition as the top row of `other`.
    pub fn bottom_matches_top(&self, other: &Diagram) -> bool {
        self.k == other.k && self.bottom_partition() == other.top_partition()
    }

    /// Stack `self` over `other`, returning `self ∘ other` and the number of
    /// components lying entirely in the middle row.
    pub fn compose(&self, other: &Diagram) -> Result<(Diagram, usize)> {
        if self.k != other.k {
            return Err(Error::Dimension(format!(
                "composing diagrams of sizes {} and {}",
                self.k, other.k
            )));
        }
        let k = self.k;
        // 0..k top of self, k..2k middle, 2k..3k bottom of other
        let mut uf = UnionFind::new(3 * k);
        for block in &self.blocks {
            for w in block.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        for block in &other.blocks {
            for w in block.windows(2) {
                uf.union(w[0] + k, w[1] + k);
            }
        }
        let mut touches_outer = vec![false; 3 * k];
        for v in (0..k).chain(2 * k..3 * k) {
            touches_outer[uf.find(v)] = true;
        }
        let mut internal = 0;
        for v in k..2 * k {
            if uf.find(v) == v && !touches_outer[v] {
                internal += 1;
            }
        }
        let labels: Vec<usize> = (0..k).chain(2 * k..3 * k).map(|v| uf.find(v)).collect();
        Ok((Diagram::from_labels(k, &labels), internal))
    }

    /// `self ≤ other` in the refinement order: every block of `other` lies inside a block of `self`.
    pub fn coarser_or_equal(&self, other: &Diagram) -> bool {
        if self.k != other.k {
            return false;
        }
        let labels = self.labels();
        other
            .blocks
            .iter()
            .all(|b| b.iter().all(|&v| labels[v] == labels[b[0]]))
    }

    /// Merge the blocks of `self` according to `groups` (a label per block).
    pub fn merge_blocks(&self, groups: &[usize]) -> Diagram {
        let labels = self.labels();
        let merged: Vec<usize> = labels.iter().map(|&b| groups[b]).collect();
        Diagram::from_labels(self.k, &merged)
    }

    /// All diagrams `d' ≤ self`, including `self`.
    pub fn coarsenings(&self) -> Result<Vec<Diagram>> {
        self.coarsenings_with(&Limits::from_env())
    }

    pub fn coarsenings_with(&self, limits: &Limits) -> Result<Vec<Diagram>> {
        Limits::check("blocks to coarsen", self.num_blocks(), limits.max_coarsen_blocks)?;
        let mut out = Vec::new();
        for_each_set_partition(self.num_blocks(), &mut |g| out.push(self.merge_blocks(g)));
        Ok(out)
    }

    /// Add the strand `{k+1, (k+1)'}`.
    pub fn embed(&self) -> Diagram {
        let k = self.k;
        let shift = |v: usize| if v < k { v } else { v + 1 };
        let mut blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&v| shift(v)).collect())
            .collect();
        blocks.push(vec![k, 2 * k + 1]);
        Diagram::from_index_blocks(k + 1, blocks).expect("embedding keeps a partition")
    }
}

fn relabel(raw: &[usize]) -> Vec<usize> {
    let mut map: Vec<usize> = Vec::new();
    raw.iter()
        .map(|l| match map.iter().position(|x| x == l) {
            Some(i) => i,
            None => {
                map.push(*l);
                map.len() - 1
            }
        })
        .collect()
}

/// Call `f` with every restricted growth string of length `len`.
pub fn for_each_set_partition(len: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(pos: usize, max: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if pos == cur.len() {
            f(cur);
            return;
        }
        for v in 0..=max {
            cur[pos] = v;
            rec(pos + 1, if v == max { max + 1 } else { max }, cur, f);
        }
    }
    let mut cur = vec![0; len];
    rec(0, 0, &mut cur, f);
}

/// Every diagram of `A_l`, sorted canonically. Half levels keep the diagrams
/// of `A_{k+1}` joining `k+1` and `(k+1)'`.
pub fn enumerate_diagrams(level: Level) -> Result<Vec<Diagram>> {
    enumerate_diagrams_with(level, &Limits::from_env())
}

pub fn enumerate_diagrams_with(level: Level, limits: &Limits) -> Result<Vec<Diagram>> {
    let k = level.ambient();
    Limits::check("ambient size k", k, limits.max_ambient)?;
    let mut out = Vec::new();
    for_each_set_partition(2 * k, &mut |labels| {
        let d = Diagram::from_labels(k, labels);
        if !level.is_half() || d.is_half_diagram() {
            out.push(d);
        }
    });
    out.sort();
    Ok(out)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Keeps the smaller root, so a root is the least vertex of its component.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}

impl fmt::Display for Diagram {
    /// `{1,2,1'};{2'}`; the empty diagram of `A_0` prints as `{}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                let vs: Vec<String> = b.iter().map(Vertex::to_string).collect();
                format!("{{{}}}", vs.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(";"))
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Diagram {
    type Err = Error;

    /// Parses the printed form; `k` is the largest vertex number present.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "{}" || s.is_empty() {
            return Ok(Diagram { k: 0, blocks: vec![] });
        }
        let mut blocks = Vec::new();
        for part in s.split(';') {
            let inner = part
                .trim()
                .strip_prefix('{')
                .and_then(|t| t.strip_suffix('}'))
                .ok_or_else(|| Error::Parse(format!("block `{part}` is not braced")))?;
            let block = inner
                .split(',')
                .map(str::parse)
                .collect::<Result<Vec<Vertex>>>()?;
            blocks.push(block);
        }
        let k = blocks.iter().flatten().map(|v| v.number()).max().unwrap_or(0);
        Diagram::from_blocks(k, &blocks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_round_trip() {
        let x = d("{2',1};{1',2}");
        assert_eq!(x.to_string(), "{1,2'};{2,1'}");
        assert_eq!(d(&x.to_string()), x);
        assert_eq!(d("{}").k(), 0);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("{1,1'}".parse::<Diagram>().map(|x| x.k()), Ok(1)));
        assert!("{1,2}".parse::<Diagram>().is_err());
        assert!("{1,1};{1'}".parse::<Diagram>().is_err());
        assert!("1,1'".parse::<Diagram>().is_err());
        assert!("{0,1'}".parse::<Diagram>().is_err());
    }

    #[test]
    fn bell_counts() {
        let counts: Vec<usize> = (0..=6)
            .map(|t| enumerate_diagrams(Level::from_two_l(t)).unwrap().len())
            .collect();
        // A_{l} has Bell(2l) elements
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn guard_on_enumeration() {
        let err = enumerate_diagrams_with(Level::integer(5), &Limits::default());
        assert!(matches!(err, Err(Error::SizeLimit(_))));
    }

    #[test]
    fn composition_counts_middle_components() {
        let id = Diagram::identity(2);
        let e = d("{1,2};{1',2'}");
        let (p, l) = e.compose(&e).unwrap();
        assert_eq!((p, l), (e.clone(), 1));
        assert_eq!(id.compose(&e).unwrap(), (e, 0));
        let s = Diagram::singletons(2);
        assert_eq!(s.compose(&s).unwrap(), (s.clone(), 2));
    }

    #[test]
    fn coarsenings_of_singletons() {
        let s = Diagram::singletons(1);
        let c = s.coarsenings().unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.iter().all(|x| x.coarser_or_equal(&s)));
    }

    #[test]
    fn half_diagrams() {
        assert!(!d("{1,2'};{2,1'}").is_half_diagram());
        assert!(d("{1,1'};{2,2'}").is_half_diagram());
    }

    #[test]
    fn embed_adds_strand() {
        assert_eq!(d("{1,1'}").embed(), Diagram::identity(2));
        assert_eq!(d("{1};{1'}").embed().to_string(), "{1};{2,2'};{1'}");
    }

    fn arb_diagram(k: usize) -> impl Strategy<Value = Diagram> {
        proptest::collection::vec(0..2 * k, 2 * k).prop_map(move |l| Diagram::from_labels(k, &l))
    }

    proptest! {
        #[test]
        fn composition_associative(a in arb_diagram(3), b in arb_diagram(3), c in arb_diagram(3)) {
            let (ab, l1) = a.compose(&b).unwrap();
            let (abc, l2) = ab.compose(&c).unwrap();
            let (bc, m1) = b.compose(&c).unwrap();
            let (abc2, m2) = a.compose(&bc).unwrap();
            prop_assert_eq!(abc, abc2);
            prop_assert_eq!(l1 + l2, m1 + m2);
        }

        #[test]
        fn identity_is_unit(a in arb_diagram(3)) {
            let id = Diagram::identity(3);
            prop_assert_eq!(id.compose(&a).unwrap(), (a.clone(), 0));
            prop_assert_eq!(a.compose(&id).unwrap(), (a, 0));
        }

        #[test]
        fn refinement_is_partial_order(a in arb_diagram(2), b in arb_diagram(2), c in arb_diagram(2)) {
            prop_assert!(a.coarser_or_equal(&a));
            if a.coarser_or_equal(&b) && b.coarser_or_equal(&a) {
                prop_assert_eq!(&a, &b);
            }
            if a.coarser_or_equal(&b) && b.coarser_or_equal(&c) {
                prop_assert!(a.coarser_or_equal(&c));
            }
        }

        #[test]
        fn text_round_trip(a in arb_diagram(3)) {
            prop_assert_eq!(a.to_string().parse::<Diagram>().unwrap(), a);
        }
    }
}
