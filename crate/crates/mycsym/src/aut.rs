//! Automorphism and isomorphism search.
//!
//! Candidate targets for each vertex are narrowed by iterated neighborhood
//! refinement (vertices can only swap if they agree on degree, constraint
//! data, and recursively on the class multiset of their neighborhoods), then
//! a backtracking scan assigns images in vertex order, trying targets in
//! ascending order. The first full assignment found is therefore the
//! lexicographically least image vector the constraint admits, which makes
//! every reported permutation deterministic.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::bits;
use crate::graph::{Graph, Perm, VertexSet};

/// Default cap for [`enumerate_automorphisms`].
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// Vertex coloring with palette `1..=num_colors`. Unused palette colors are
/// allowed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    colors: Vec<usize>,
    num_colors: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("palette must contain at least one color")]
    EmptyPalette,
    #[error("color {color} at position {pos} outside palette 1..={num_colors}")]
    OutOfPalette { pos: usize, color: usize, num_colors: usize },
}

impl Coloring {
    pub fn new(colors: Vec<usize>, num_colors: usize) -> Result<Self, ColoringError> {
        if num_colors == 0 {
            return Err(ColoringError::EmptyPalette);
        }
        for (pos, &color) in colors.iter().enumerate() {
            if color == 0 || color > num_colors {
                return Err(ColoringError::OutOfPalette { pos, color, num_colors });
            }
        }
        Ok(Coloring { colors, num_colors })
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Vertices of the given color.
    pub fn class(&self, color: usize) -> VertexSet {
        self.colors.iter().enumerate().filter(|&(_, &c)| c == color).map(|(v, _)| v).collect()
    }
}

/// Restricts which automorphisms a search may return.
#[derive(Clone, Debug, Default)]
pub struct SearchConstraint {
    /// Vertices that must map to themselves.
    pub fixed: VertexSet,
    /// Color classes the permutation must preserve pointwise-by-color.
    pub coloring: Option<Coloring>,
    /// Skip the identity permutation.
    pub exclude_identity: bool,
}

impl SearchConstraint {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn fixing(fixed: impl IntoIterator<Item = usize>) -> Self {
        SearchConstraint { fixed: fixed.into_iter().collect(), ..Self::default() }
    }

    pub fn preserving(coloring: Coloring) -> Self {
        SearchConstraint { coloring: Some(coloring), ..Self::default() }
    }

    pub fn nontrivial() -> Self {
        SearchConstraint { exclude_identity: true, ..Self::default() }
    }

    pub fn and_nontrivial(mut self) -> Self {
        self.exclude_identity = true;
        self
    }
}

/// Edge coloring keyed by a dense `n*n` edge-index matrix; used internally by
/// the distinguishing-index search.
pub(crate) struct EdgeColorView<'a> {
    pub idx: &'a [usize],
    pub colors: &'a [usize],
    pub n: usize,
}

impl EdgeColorView<'_> {
    fn color(&self, u: usize, v: usize) -> usize {
        self.colors[self.idx[u * self.n + v]]
    }
}

/// Refines vertex classes until stable: two vertices keep sharing a class only
/// while they agree on the multiset of neighbor classes. Class ids are
/// reassigned each round in sorted signature order, so the ids are canonical
/// whenever the initial ids are.
fn refine(graphs: &[&Graph], mut cls: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    let mut distinct = distinct_count(&cls);
    loop {
        let mut sig_ids: BTreeMap<(u32, Vec<u32>), u32> = BTreeMap::new();
        let mut sigs: Vec<Vec<(u32, Vec<u32>)>> = Vec::with_capacity(graphs.len());
        for (gi, g) in graphs.iter().enumerate() {
            let mut per = Vec::with_capacity(g.n());
            for v in g.vertices() {
                let mut nb: Vec<u32> = g.neighbors(v).map(|u| cls[gi][u]).collect();
                nb.sort_unstable();
                per.push((cls[gi][v], nb));
            }
            sigs.push(per);
        }
        for per in &sigs {
            for sig in per {
                let next = sig_ids.len() as u32;
                sig_ids.entry(sig.clone()).or_insert(next);
            }
        }
        for (gi, per) in sigs.iter().enumerate() {
            for (v, sig) in per.iter().enumerate() {
                cls[gi][v] = sig_ids[sig];
            }
        }
        let now = sig_ids.len();
        if now == distinct {
            return cls;
        }
        distinct = now;
    }
}

fn distinct_count(cls: &[Vec<u32>]) -> usize {
    let mut seen: Vec<u32> = cls.iter().flatten().copied().collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Stable refinement classes of one graph under the given constraint data.
/// Fixed vertices get singleton start classes, so their final class is `{v}`.
fn constrained_classes(
    g: &Graph,
    fixed: &VertexSet,
    vertex_colors: Option<&[usize]>,
    edge_colors: Option<&EdgeColorView>,
) -> Vec<u32> {
    let mut key_ids: BTreeMap<(usize, usize, usize, Vec<usize>), u32> = BTreeMap::new();
    let mut init = Vec::with_capacity(g.n());
    for v in g.vertices() {
        let vc = vertex_colors.map_or(0, |c| c[v]);
        let tag = if fixed.contains(&v) { v + 1 } else { 0 };
        let mut inc: Vec<usize> = match edge_colors {
            Some(ec) => g.neighbors(v).map(|u| ec.color(v, u)).collect(),
            None => Vec::new(),
        };
        inc.sort_unstable();
        let next = key_ids.len() as u32;
        init.push(*key_ids.entry((g.degree(v), vc, tag, inc)).or_insert(next));
    }
    refine(&[g], vec![init]).pop().unwrap()
}

/// Label-independent invariant: the sorted color multiset of the stable
/// iterated refinement seeded by degree. Color ids are renumbered by sorted
/// key order every round, so the values themselves carry no trace of the
/// vertex labeling — unlike the ids inside [`constrained_classes`], which are
/// only consistent within one call. Equal signatures are necessary (not
/// sufficient) for isomorphism.
pub(crate) fn wl_signature(g: &Graph) -> Vec<u32> {
    let degrees = g.degrees();
    let mut uniq_deg = degrees.clone();
    uniq_deg.sort_unstable();
    uniq_deg.dedup();
    let mut colors: Vec<u32> = degrees
        .iter()
        .map(|d| uniq_deg.binary_search(d).expect("own degree is present") as u32)
        .collect();
    loop {
        let keys: Vec<(u32, Vec<u32>)> = g
            .vertices()
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut uniq = keys.clone();
        uniq.sort_unstable();
        uniq.dedup();
        let next: Vec<u32> = keys
            .iter()
            .map(|k| uniq.binary_search(k).expect("own key is present") as u32)
            .collect();
        // At a stable partition the canonical renumbering reproduces the old
        // colors (keys sort by own color first), so this always terminates.
        if next == colors {
            break;
        }
        colors = next;
    }
    colors.sort_unstable();
    colors
}

struct Backtrack<'a, F> {
    src: &'a Graph,
    dst: &'a Graph,
    cand: &'a [Vec<u64>],
    edge_colors: Option<&'a EdgeColorView<'a>>,
    skip_identity: bool,
    img: Vec<usize>,
    used: Vec<u64>,
    /// Returning `true` stops the whole search.
    visit: F,
}

impl<F: FnMut(&[usize]) -> bool> Backtrack<'_, F> {
    fn run(&mut self) {
        self.step(0);
    }

    /// Returns true when the search should stop.
    fn step(&mut self, v: usize) -> bool {
        if v == self.src.n() {
            if self.skip_identity && self.img.iter().enumerate().all(|(i, &x)| i == x) {
                return false;
            }
            return (self.visit)(&self.img);
        }
        let cand: Vec<usize> = bits::ones(&self.cand[v]).collect();
        for u in cand {
            if bits::test(&self.used, u) || !self.compatible(v, u) {
                continue;
            }
            self.img[v] = u;
            bits::set(&mut self.used, u);
            let stop = self.step(v + 1);
            bits::clear(&mut self.used, u);
            if stop {
                return true;
            }
        }
        false
    }

    fn compatible(&self, v: usize, u: usize) -> bool {
        for j in 0..v {
            let e = self.src.has_edge(v, j);
            if e != self.dst.has_edge(u, self.img[j]) {
                return false;
            }
            if e {
                if let Some(ec) = self.edge_colors {
                    if ec.color(v, j) != ec.color(u, self.img[j]) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn class_masks(n: usize, src_cls: &[u32], dst_cls: &[u32]) -> Vec<Vec<u64>> {
    let w = bits::words_for(n).max(1);
    let mut by_class: BTreeMap<u32, Vec<u64>> = BTreeMap::new();
    for (u, &c) in dst_cls.iter().enumerate() {
        bits::set(by_class.entry(c).or_insert_with(|| vec![0; w]), u);
    }
    src_cls.iter().map(|c| by_class.get(c).cloned().unwrap_or_else(|| vec![0; w])).collect()
}

fn search(
    g: &Graph,
    fixed: &VertexSet,
    vertex_colors: Option<&[usize]>,
    edge_colors: Option<&EdgeColorView>,
    exclude_identity: bool,
    forced: Option<(usize, usize)>,
    mut visit: impl FnMut(&[usize]) -> bool,
) {
    let n = g.n();
    if n == 0 {
        if !exclude_identity {
            visit(&[]);
        }
        return;
    }
    let cls = constrained_classes(g, fixed, vertex_colors, edge_colors);
    let mut cand = class_masks(n, &cls, &cls);
    if let Some((v, u)) = forced {
        if !bits::test(&cand[v], u) {
            return;
        }
        let w = cand[v].len();
        cand[v] = vec![0; w];
        bits::set(&mut cand[v], u);
    }
    let mut bt = Backtrack {
        src: g,
        dst: g,
        cand: &cand,
        edge_colors,
        skip_identity: exclude_identity,
        img: vec![0; n],
        used: vec![0; bits::words_for(n).max(1)],
        visit: &mut visit,
    };
    bt.run();
}

fn constraint_parts<'a>(g: &Graph, c: &'a SearchConstraint) -> (&'a VertexSet, Option<&'a [usize]>) {
    for &v in &c.fixed {
        assert!(v < g.n(), "fixed vertex {v} out of range for graph on {} vertices", g.n());
    }
    let colors = c.coloring.as_ref().map(|col| {
        assert_eq!(col.len(), g.n(), "coloring length does not match vertex count");
        col.colors()
    });
    (&c.fixed, colors)
}

/// First automorphism admitted by the constraint, in lexicographic image
/// order; `None` when only excluded ones exist.
pub fn find_automorphism(g: &Graph, c: &SearchConstraint) -> Option<Perm> {
    let (fixed, colors) = constraint_parts(g, c);
    let mut found = None;
    search(g, fixed, colors, None, c.exclude_identity, None, |img| {
        found = Some(Perm::new(img.to_vec()).expect("search image is a bijection"));
        true
    });
    found
}

pub(crate) fn find_edge_preserving_automorphism(
    g: &Graph,
    ec: &EdgeColorView,
    exclude_identity: bool,
) -> Option<Perm> {
    let mut found = None;
    search(g, &VertexSet::new(), None, Some(ec), exclude_identity, None, |img| {
        found = Some(Perm::new(img.to_vec()).expect("search image is a bijection"));
        true
    });
    found
}

/// True iff `p` maps edges to edges and non-edges to non-edges. A permutation
/// on the wrong number of vertices is never an automorphism.
pub fn is_automorphism(g: &Graph, p: &Perm) -> bool {
    if p.len() != g.n() {
        return false;
    }
    for u in g.vertices() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) != g.has_edge(p.apply(u), p.apply(v)) {
                return false;
            }
        }
    }
    true
}

/// All automorphisms when the group has at most `cap` elements; otherwise the
/// first `cap` in search order with a saturation marker.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Automorphisms {
    Complete(Vec<Perm>),
    Saturated(Vec<Perm>),
}

impl Automorphisms {
    pub fn perms(&self) -> &[Perm] {
        match self {
            Automorphisms::Complete(v) | Automorphisms::Saturated(v) => v,
        }
    }

    pub fn is_complete(&self) -> bool {
        matches!(self, Automorphisms::Complete(_))
    }
}

/// Enumerates automorphisms in lexicographic image order (identity included).
pub fn enumerate_automorphisms(g: &Graph, cap: usize) -> Automorphisms {
    assert!(cap >= 1);
    let mut perms = Vec::new();
    let mut saturated = false;
    search(g, &VertexSet::new(), None, None, false, None, |img| {
        if perms.len() == cap {
            saturated = true;
            return true;
        }
        perms.push(Perm::new(img.to_vec()).expect("search image is a bijection"));
        false
    });
    if saturated {
        Automorphisms::Saturated(perms)
    } else {
        Automorphisms::Complete(perms)
    }
}

/// True iff some bijection maps edges of `g` onto edges of `h`.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    if n == 0 {
        return true;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    let init: Vec<Vec<u32>> = {
        let mut ids: BTreeMap<usize, u32> = BTreeMap::new();
        for &d in dg.iter() {
            let next = ids.len() as u32;
            ids.entry(d).or_insert(next);
        }
        vec![
            g.vertices().map(|v| ids[&g.degree(v)]).collect(),
            h.vertices().map(|v| ids[&h.degree(v)]).collect(),
        ]
    };
    let cls = refine(&[g, h], init);
    let mut count_g: BTreeMap<u32, usize> = BTreeMap::new();
    let mut count_h: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in &cls[0] {
        *count_g.entry(c).or_insert(0) += 1;
    }
    for &c in &cls[1] {
        *count_h.entry(c).or_insert(0) += 1;
    }
    if count_g != count_h {
        return false;
    }
    let cand = class_masks(n, &cls[0], &cls[1]);
    let mut found = false;
    let mut bt = Backtrack {
        src: g,
        dst: h,
        cand: &cand,
        edge_colors: None,
        skip_identity: false,
        img: vec![0; n],
        used: vec![0; bits::words_for(n).max(1)],
        visit: |_: &[usize]| {
            found = true;
            true
        },
    };
    bt.run();
    found
}

/// Orbits of the automorphisms that fix `fixed` pointwise, ordered by
/// smallest member. Two vertices share an orbit iff some such automorphism
/// maps one to the other.
pub fn orbits(g: &Graph, fixed: &VertexSet) -> Vec<VertexSet> {
    let n = g.n();
    for &v in fixed {
        assert!(v < n);
    }
    let cls = constrained_classes(g, fixed, None, None);
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for v in 0..n {
        for u in v + 1..n {
            if cls[u] != cls[v] || root(&mut parent, u) == root(&mut parent, v) {
                continue;
            }
            let mut witness: Option<Vec<usize>> = None;
            search(g, fixed, None, None, false, Some((v, u)), |img| {
                witness = Some(img.to_vec());
                true
            });
            if let Some(img) = witness {
                for (x, &y) in img.iter().enumerate() {
                    let (rx, ry) = (root(&mut parent, x), root(&mut parent, y));
                    if rx != ry {
                        parent[rx] = ry;
                    }
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, VertexSet> = BTreeMap::new();
    for v in 0..n {
        let r = root(&mut parent, v);
        groups.entry(r).or_default().insert(v);
    }
    let mut out: Vec<VertexSet> = groups.into_values().collect();
    out.sort_by_key(|s| *s.first().unwrap());
    out
}
