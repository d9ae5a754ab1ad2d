//! Symmetry parameters, computed exactly by constrained search.
//!
//! * determining number: smallest set whose pointwise stabilizer is trivial;
//! * distinguishing number: fewest colors in a vertex coloring preserved by
//!   no nontrivial automorphism;
//! * cost of 2-distinguishing: smallest color class over distinguishing
//!   2-colorings;
//! * distinguishing index: the edge-coloring analogue.
//!
//! Searches are pruned but exhaustive, so every answer is exact unless a
//! stated budget runs out, and ties always resolve to the lexicographically
//! least witness. Two reductions keep the search spaces small without losing
//! completeness: twin classes force all-but-one of their members into every
//! determining set (swapping two twins is an automorphism, so minimum sets
//! can be normalized onto the forced choice), and any one largest twin class
//! can be rainbow-colored 1..k up front since distinguishing colorings must
//! rainbow every twin class and global color swaps are harmless.

use serde::Serialize;

use crate::aut::{
    enumerate_automorphisms, find_automorphism, find_edge_preserving_automorphism, Automorphisms,
    Coloring, EdgeColorView, SearchConstraint,
};
use crate::bits;
use crate::graph::{components, Graph, VertexSet};
use crate::graph6::encode_graph6;
use crate::twins::{twin_partition, TwinPartition};

/// Default cap on colorings examined per palette size.
pub const DEFAULT_BUDGET: u64 = 1 << 22;

/// Automorphism groups up to this size are enumerated once and replayed per
/// candidate; larger groups fall back to one constrained search per candidate.
const TESTER_CAP: usize = 4096;

enum AutTester {
    /// All nontrivial automorphisms with their moved-vertex masks.
    Group { perms: Vec<Vec<usize>>, moved: Vec<Vec<u64>> },
    Search,
}

impl AutTester {
    fn new(g: &Graph) -> Self {
        match enumerate_automorphisms(g, TESTER_CAP) {
            Automorphisms::Complete(all) => {
                let w = bits::words_for(g.n()).max(1);
                let mut perms = Vec::new();
                let mut moved = Vec::new();
                for p in all {
                    if p.is_identity() {
                        continue;
                    }
                    let mut m = vec![0u64; w];
                    for (i, &v) in p.as_slice().iter().enumerate() {
                        if i != v {
                            bits::set(&mut m, i);
                        }
                    }
                    perms.push(p.as_slice().to_vec());
                    moved.push(m);
                }
                AutTester::Group { perms, moved }
            }
            Automorphisms::Saturated(_) => AutTester::Search,
        }
    }

    fn has_nontrivial(&self, g: &Graph) -> bool {
        match self {
            AutTester::Group { perms, .. } => !perms.is_empty(),
            AutTester::Search => find_automorphism(g, &SearchConstraint::nontrivial()).is_some(),
        }
    }

    /// Is there a nontrivial automorphism fixing the masked set pointwise?
    fn nontrivial_fixing(&self, g: &Graph, mask: &[u64]) -> bool {
        match self {
            AutTester::Group { moved, .. } => moved.iter().any(|m| bits::disjoint(m, mask)),
            AutTester::Search => {
                let fixed: VertexSet = bits::ones(mask).collect();
                let c = SearchConstraint { fixed, coloring: None, exclude_identity: true };
                find_automorphism(g, &c).is_some()
            }
        }
    }

    /// Is there a nontrivial automorphism preserving the vertex coloring?
    fn nontrivial_preserving(&self, g: &Graph, colors: &[usize], palette: usize) -> bool {
        match self {
            AutTester::Group { perms, moved } => perms.iter().zip(moved).any(|(p, m)| {
                bits::ones(m).all(|v| colors[p[v]] == colors[v])
            }),
            AutTester::Search => {
                let col = Coloring::new(colors.to_vec(), palette).expect("search colors stay in palette");
                let c = SearchConstraint::preserving(col).and_nontrivial();
                find_automorphism(g, &c).is_some()
            }
        }
    }

    /// Is there a nontrivial automorphism mapping the masked set onto itself?
    fn nontrivial_stabilizing(&self, g: &Graph, mask: &[u64]) -> bool {
        match self {
            AutTester::Group { perms, moved } => perms.iter().zip(moved).any(|(p, m)| {
                bits::ones(m).all(|v| bits::test(mask, v) == bits::test(mask, p[v]))
            }),
            AutTester::Search => {
                let colors: Vec<usize> =
                    (0..g.n()).map(|v| if bits::test(mask, v) { 1 } else { 2 }).collect();
                self.nontrivial_preserving_by_search(g, &colors, 2)
            }
        }
    }

    fn nontrivial_preserving_by_search(&self, g: &Graph, colors: &[usize], palette: usize) -> bool {
        let col = Coloring::new(colors.to_vec(), palette).expect("mask colors are 1 or 2");
        find_automorphism(g, &SearchConstraint::preserving(col).and_nontrivial()).is_some()
    }

    /// Is there a nontrivial automorphism preserving the edge coloring?
    fn nontrivial_preserving_edges(
        &self,
        g: &Graph,
        edges: &[(usize, usize)],
        view: &EdgeColorView,
    ) -> bool {
        match self {
            AutTester::Group { perms, .. } => perms.iter().any(|p| {
                edges.iter().all(|&(u, v)| {
                    let e = view.idx[u * g.n() + v];
                    let f = view.idx[p[u] * g.n() + p[v]];
                    view.colors[e] == view.colors[f]
                })
            }),
            AutTester::Search => find_edge_preserving_automorphism(g, view, true).is_some(),
        }
    }
}

/// Lexicographic k-subsets of a pool of values.
pub(crate) struct Combinations<'a> {
    pool: &'a [usize],
    k: usize,
    idx: Vec<usize>,
    started: bool,
    done: bool,
}

impl<'a> Combinations<'a> {
    pub(crate) fn new(pool: &'a [usize], k: usize) -> Self {
        Combinations { pool, k, idx: (0..k).collect(), started: false, done: k > pool.len() }
    }
}

impl Iterator for Combinations<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.idx.iter().map(|&i| self.pool[i]).collect());
        }
        let n = self.pool.len();
        let k = self.k;
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            if self.idx[i] != i + n - k {
                break;
            }
        }
        self.idx[i] += 1;
        for j in i + 1..k {
            self.idx[j] = self.idx[j - 1] + 1;
        }
        Some(self.idx.iter().map(|&i| self.pool[i]).collect())
    }
}

fn mask_of(set: impl IntoIterator<Item = usize>, words: usize) -> Vec<u64> {
    let mut m = vec![0u64; words];
    for v in set {
        bits::set(&mut m, v);
    }
    m
}

/// True iff fixing `s` pointwise kills every nontrivial automorphism.
pub fn is_determining_set(g: &Graph, s: &VertexSet) -> bool {
    for &v in s {
        assert!(v < g.n());
    }
    let c = SearchConstraint { fixed: s.clone(), coloring: None, exclude_identity: true };
    find_automorphism(g, &c).is_none()
}

/// Smallest determining set and its size. The witness is the
/// lexicographically least set among those containing the forced all-but-one
/// choice from every twin class.
pub fn determining_number(g: &Graph) -> (usize, VertexSet) {
    determining_number_containing(g, &VertexSet::new())
}

/// Smallest determining set containing `required`.
pub fn determining_number_containing(g: &Graph, required: &VertexSet) -> (usize, VertexSet) {
    for &v in required {
        assert!(v < g.n());
    }
    let part = twin_partition(g);
    let mut seed = required.clone();
    for class in part.classes() {
        if class.len() < 2 {
            continue;
        }
        // Keep all but one member; drop the lowest index not already required.
        if let Some(drop) = class.iter().copied().find(|v| !required.contains(v)) {
            seed.extend(class.iter().copied().filter(|&v| v != drop));
        }
    }
    let tester = AutTester::new(g);
    let w = bits::words_for(g.n()).max(1);
    let base_mask = mask_of(seed.iter().copied(), w);
    let rest: Vec<usize> = g.vertices().filter(|v| !seed.contains(v)).collect();
    for extra in 0..=rest.len() {
        for combo in Combinations::new(&rest, extra) {
            let mut mask = base_mask.clone();
            for &v in &combo {
                bits::set(&mut mask, v);
            }
            if !tester.nontrivial_fixing(g, &mask) {
                let mut set = seed.clone();
                set.extend(combo);
                return (set.len(), set);
            }
        }
    }
    unreachable!("fixing every vertex is always determining")
}

/// True iff no nontrivial automorphism preserves every color class. A
/// coloring on the wrong number of vertices never distinguishes.
pub fn is_distinguishing_coloring(g: &Graph, c: &Coloring) -> bool {
    if c.len() != g.n() {
        return false;
    }
    let constraint = SearchConstraint::preserving(c.clone()).and_nontrivial();
    find_automorphism(g, &constraint).is_none()
}

/// Result of a distinguishing-number search; bounds appear only when the
/// budget ran out first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DistResult {
    Exact { value: usize, witness: Coloring },
    Bounds { lo: usize, hi: usize },
}

impl DistResult {
    pub fn exact_value(&self) -> Option<usize> {
        match self {
            DistResult::Exact { value, .. } => Some(*value),
            DistResult::Bounds { .. } => None,
        }
    }
}

enum ScanOutcome {
    Found,
    Exhausted,
    Budget,
}

/// Enumerates canonical color assignments: `targets[pos]` is the buffer slot
/// filled at `pos`; colors above `base` must first appear in increasing
/// order, and all of `1..=d` must occur by the end (assignments that cannot
/// reach that are cut). When `classes` is given (one class id per target),
/// slots sharing a class must take distinct colors — a repeat would leave the
/// transposition of those twins color-preserving, so whole subtrees die at
/// the assignment. Each completed assignment costs one budget unit.
fn rgs_scan(
    targets: &[usize],
    classes: Option<&[usize]>,
    buf: &mut [usize],
    d: usize,
    pos: usize,
    next_new: usize,
    budget: &mut u64,
    check: &mut dyn FnMut(&[usize]) -> bool,
) -> ScanOutcome {
    if pos == targets.len() {
        if *budget == 0 {
            return ScanOutcome::Budget;
        }
        *budget -= 1;
        return if check(buf) { ScanOutcome::Found } else { ScanOutcome::Exhausted };
    }
    if targets.len() - pos < (d + 1).saturating_sub(next_new) {
        return ScanOutcome::Exhausted;
    }
    for c in 1..=next_new.min(d) {
        if let Some(cls) = classes {
            if (0..pos).any(|p| cls[p] == cls[pos] && buf[targets[p]] == c) {
                continue;
            }
        }
        buf[targets[pos]] = c;
        let nn = if c == next_new { next_new + 1 } else { next_new };
        match rgs_scan(targets, classes, buf, d, pos + 1, nn, budget, check) {
            ScanOutcome::Exhausted => continue,
            other => return other,
        }
    }
    ScanOutcome::Exhausted
}

/// Size-2 twin classes; with two colors these must be split by the color
/// class, which prunes the subset scan hard.
fn twin_pairs(part: &TwinPartition) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for class in part.classes() {
        let vs: Vec<usize> = class.iter().copied().collect();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                pairs.push((a, b));
            }
        }
    }
    pairs
}

enum PaletteOutcome {
    Found(Coloring),
    Exhausted,
    Budget,
}

/// Scans 2-colorings as subsets (the color-1 class), smallest class first.
fn scan_two_colorings(
    g: &Graph,
    part: &TwinPartition,
    tester: &AutTester,
    budget: &mut u64,
    mut on_candidate: impl FnMut(usize),
) -> Option<(usize, Vec<u64>)> {
    let n = g.n();
    if part.largest_class() >= 3 {
        return None;
    }
    let pairs = twin_pairs(part);
    let all: Vec<usize> = (0..n).collect();
    let w = bits::words_for(n).max(1);
    for size in 0..=n / 2 {
        for combo in Combinations::new(&all, size) {
            let mask = mask_of(combo.iter().copied(), w);
            if !pairs.iter().all(|&(a, b)| bits::test(&mask, a) != bits::test(&mask, b)) {
                continue;
            }
            if *budget == 0 {
                on_candidate(size);
                return None;
            }
            *budget -= 1;
            if !tester.nontrivial_stabilizing(g, &mask) {
                return Some((size, mask));
            }
        }
    }
    Some((usize::MAX, Vec::new()))
}

fn try_palette(
    g: &Graph,
    d: usize,
    part: &TwinPartition,
    forced: &[usize],
    tester: &AutTester,
    budget: u64,
) -> PaletteOutcome {
    let n = g.n();
    let mut budget = budget;
    if d == 2 {
        let mut blown = false;
        return match scan_two_colorings(g, part, tester, &mut budget, |_| blown = true) {
            Some((usize::MAX, _)) | None => {
                if blown {
                    PaletteOutcome::Budget
                } else {
                    PaletteOutcome::Exhausted
                }
            }
            Some((_, mask)) => {
                let colors: Vec<usize> =
                    (0..n).map(|v| if bits::test(&mask, v) { 1 } else { 2 }).collect();
                PaletteOutcome::Found(Coloring::new(colors, 2).expect("two-coloring is valid"))
            }
        };
    }
    let k = forced.len();
    debug_assert!(k <= d);
    let mut colors = vec![0usize; n];
    for (i, &v) in forced.iter().enumerate() {
        colors[v] = i + 1;
    }
    let free: Vec<usize> = g.vertices().filter(|v| !forced.contains(v)).collect();
    let free_classes: Vec<usize> = free.iter().map(|&v| part.class_of(v)).collect();
    let mut check = |cols: &[usize]| !tester.nontrivial_preserving(g, cols, d);
    match rgs_scan(&free, Some(&free_classes), &mut colors, d, 0, k + 1, &mut budget, &mut check) {
        ScanOutcome::Found => {
            PaletteOutcome::Found(Coloring::new(colors, d).expect("scan colors stay in palette"))
        }
        ScanOutcome::Exhausted => PaletteOutcome::Exhausted,
        ScanOutcome::Budget => PaletteOutcome::Budget,
    }
}

/// Exact distinguishing number, or bounds when some palette size would need
/// more than `budget` colorings.
///
/// Isolated vertices split off: they are mutual twins moved freely by the
/// automorphism group, so they must be rainbow and the rest of the graph is
/// solved independently.
pub fn distinguishing_number(g: &Graph, budget: u64) -> DistResult {
    assert!(budget >= 1);
    let n = g.n();
    let isolated: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == 0).collect();
    if isolated.len() == n {
        let value = n.max(1);
        let witness = Coloring::new((1..=n).collect(), value).expect("rainbow is valid");
        return DistResult::Exact { value, witness };
    }
    if !isolated.is_empty() {
        let keep: Vec<usize> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
        let core = g.induced(&keep);
        return match distinguishing_number(&core, budget) {
            DistResult::Exact { value, witness } => {
                let m = isolated.len();
                let d = value.max(m);
                let mut colors = vec![0usize; n];
                for (i, &v) in keep.iter().enumerate() {
                    colors[v] = witness.color(i);
                }
                for (i, &v) in isolated.iter().enumerate() {
                    colors[v] = i + 1;
                }
                let witness = Coloring::new(colors, d).expect("merged coloring is valid");
                debug_assert!(is_distinguishing_coloring(g, &witness));
                DistResult::Exact { value: d, witness }
            }
            DistResult::Bounds { lo, hi } => {
                DistResult::Bounds { lo: lo.max(isolated.len()), hi: hi.max(isolated.len()) }
            }
        };
    }
    let tester = AutTester::new(g);
    if !tester.has_nontrivial(g) {
        let witness = Coloring::new(vec![1; n], 1).expect("constant coloring is valid");
        return DistResult::Exact { value: 1, witness };
    }
    let part = twin_partition(g);
    let forced: Vec<usize> = part
        .classes()
        .iter()
        .fold(None::<&VertexSet>, |best, c| match best {
            Some(b) if b.len() >= c.len() => Some(b),
            _ => Some(c),
        })
        .map(|c| c.iter().copied().collect())
        .unwrap_or_default();
    let lb = forced.len().max(2);
    for d in lb..=n {
        match try_palette(g, d, &part, &forced, &tester, budget) {
            PaletteOutcome::Found(witness) => {
                debug_assert!(is_distinguishing_coloring(g, &witness));
                return DistResult::Exact { value: d, witness };
            }
            PaletteOutcome::Exhausted => {}
            PaletteOutcome::Budget => return DistResult::Bounds { lo: d, hi: n },
        }
    }
    unreachable!("a rainbow coloring always distinguishes")
}

/// Outcome of the 2-distinguishing cost search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CostTwoResult {
    /// Smallest color class over distinguishing 2-colorings, with the class.
    Cost { value: usize, class: VertexSet },
    NotTwoDistinguishable,
    BudgetExceeded { lo: usize },
}

/// Cost of 2-distinguishing: scans the smaller color class by ascending size,
/// so the first hit is optimal. Asymmetric graphs cost 0 (an empty class
/// works); graphs with distinguishing number above 2 are reported as not
/// 2-distinguishable.
pub fn cost_2_distinguishing(g: &Graph, budget: u64) -> CostTwoResult {
    assert!(budget >= 1);
    let tester = AutTester::new(g);
    if !tester.has_nontrivial(g) {
        return CostTwoResult::Cost { value: 0, class: VertexSet::new() };
    }
    let part = twin_partition(g);
    let mut budget = budget;
    let mut blown_at = None;
    match scan_two_colorings(g, &part, &tester, &mut budget, |size| blown_at = Some(size)) {
        Some((usize::MAX, _)) => CostTwoResult::NotTwoDistinguishable,
        None => match blown_at {
            Some(lo) => CostTwoResult::BudgetExceeded { lo },
            None => CostTwoResult::NotTwoDistinguishable,
        },
        Some((size, mask)) => {
            CostTwoResult::Cost { value: size, class: bits::ones(&mask).collect() }
        }
    }
}

/// Outcome of the distinguishing-index search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeDistResult {
    /// `witness[i]` colors the i-th edge of `Graph::edges()`.
    Exact { value: usize, witness: Vec<usize> },
    /// No edge coloring can work: a K₂ component (its swap fixes the edge) or
    /// two isolated vertices (their swap touches no edge).
    Undefined,
    Bounds { lo: usize, hi: usize },
}

/// Distinguishing index: fewest edge colors so that no nontrivial
/// automorphism preserves all edge color classes.
pub fn distinguishing_index(g: &Graph, budget: u64) -> EdgeDistResult {
    assert!(budget >= 1);
    let comps = components(g);
    let isolated = comps.iter().filter(|c| c.len() == 1).count();
    if isolated >= 2 || comps.iter().any(|c| c.len() == 2) {
        return EdgeDistResult::Undefined;
    }
    let edges = g.edges();
    let m = edges.len();
    let tester = AutTester::new(g);
    if !tester.has_nontrivial(g) {
        return EdgeDistResult::Exact { value: 1, witness: vec![1; m] };
    }
    // With K₂ components and repeated isolated vertices excluded, the group
    // acts faithfully on edges, so one color cannot distinguish but a rainbow
    // always does.
    let n = g.n();
    let mut idx = vec![usize::MAX; n * n];
    for (e, &(u, v)) in edges.iter().enumerate() {
        idx[u * n + v] = e;
        idx[v * n + u] = e;
    }
    let targets: Vec<usize> = (0..m).collect();
    for d in 2..=m {
        let mut ecolors = vec![0usize; m];
        let mut budget_d = budget;
        let mut check = |cols: &[usize]| {
            let view = EdgeColorView { idx: &idx, colors: cols, n };
            !tester.nontrivial_preserving_edges(g, &edges, &view)
        };
        match rgs_scan(&targets, None, &mut ecolors, d, 0, 1, &mut budget_d, &mut check) {
            ScanOutcome::Found => return EdgeDistResult::Exact { value: d, witness: ecolors },
            ScanOutcome::Exhausted => {}
            ScanOutcome::Budget => return EdgeDistResult::Bounds { lo: d, hi: m },
        }
    }
    unreachable!("a rainbow edge coloring always distinguishes under a faithful action")
}

/// Which parameters [`param_report`] should compute.
#[derive(Clone, Copy, Debug)]
pub struct ParamSelection {
    pub determining: bool,
    pub distinguishing: bool,
    pub cost_two: bool,
    pub edge_distinguishing: bool,
}

impl ParamSelection {
    pub fn all() -> Self {
        ParamSelection { determining: true, distinguishing: true, cost_two: true, edge_distinguishing: true }
    }
}

impl Default for ParamSelection {
    fn default() -> Self {
        Self::all()
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DetEntry {
    pub value: usize,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum DistEntry {
    Exact { value: usize, witness: Vec<usize> },
    Bounds { lo: usize, hi: usize },
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CostEntry {
    Cost { value: usize, class: Vec<usize> },
    NotTwoDistinguishable,
    BudgetExceeded { lo: usize },
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum EdgeEntry {
    Exact { value: usize, edges: Vec<(usize, usize)>, witness: Vec<usize> },
    Undefined,
    Bounds { lo: usize, hi: usize },
}

/// Machine-readable bundle of the selected parameters of one graph.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ParamReport {
    pub n: usize,
    pub edge_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub determining: Option<DetEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distinguishing: Option<DistEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cost_two_distinguishing: Option<CostEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distinguishing_index: Option<EdgeEntry>,
}

pub fn param_report(g: &Graph, sel: ParamSelection, budget: u64) -> ParamReport {
    let determining = sel.determining.then(|| {
        let (value, witness) = determining_number(g);
        DetEntry { value, witness: witness.into_iter().collect() }
    });
    let distinguishing = sel.distinguishing.then(|| match distinguishing_number(g, budget) {
        DistResult::Exact { value, witness } => {
            DistEntry::Exact { value, witness: witness.colors().to_vec() }
        }
        DistResult::Bounds { lo, hi } => DistEntry::Bounds { lo, hi },
    });
    let cost_two_distinguishing = sel.cost_two.then(|| match cost_2_distinguishing(g, budget) {
        CostTwoResult::Cost { value, class } => {
            CostEntry::Cost { value, class: class.into_iter().collect() }
        }
        CostTwoResult::NotTwoDistinguishable => CostEntry::NotTwoDistinguishable,
        CostTwoResult::BudgetExceeded { lo } => CostEntry::BudgetExceeded { lo },
    });
    let distinguishing_index = sel.edge_distinguishing.then(|| match distinguishing_index(g, budget) {
        EdgeDistResult::Exact { value, witness } => {
            EdgeEntry::Exact { value, edges: g.edges(), witness }
        }
        EdgeDistResult::Undefined => EdgeEntry::Undefined,
        EdgeDistResult::Bounds { lo, hi } => EdgeEntry::Bounds { lo, hi },
    });
    ParamReport {
        n: g.n(),
        edge_count: g.edge_count(),
        graph6: encode_graph6(g).ok(),
        determining,
        distinguishing,
        cost_two_distinguishing,
        distinguishing_index,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        complete_graph, cycle_graph, disjoint_union, empty_graph, parse_edge_list, star_graph,
    };
    use crate::mycielskian::classical_M;

    fn pendant_pair_graph() -> Graph {
        parse_edge_list("0 3\n0 4\n0 1\n1 2", 5).unwrap()
    }

    fn asymmetric6() -> Graph {
        parse_edge_list("0 1\n1 2\n2 3\n3 4\n4 5\n1 3", 6).unwrap()
    }

    #[test]
    fn determining_numbers_of_small_graphs() {
        assert_eq!(determining_number(&complete_graph(1)), (0, VertexSet::new()));
        assert_eq!(determining_number(&complete_graph(2)), (1, VertexSet::from([0])));
        assert_eq!(determining_number(&cycle_graph(5)), (2, VertexSet::from([0, 1])));
        assert_eq!(determining_number(&complete_graph(4)).0, 3);
        assert_eq!(determining_number(&star_graph(3)).0, 2);
        assert_eq!(determining_number(&asymmetric6()), (0, VertexSet::new()));
        // One leaf of the twin pair suffices.
        assert_eq!(determining_number(&pendant_pair_graph()), (1, VertexSet::from([4])));
        // K₂ + 3K₁: two isolated vertices are forced, one K₂ endpoint added.
        let g = disjoint_union(&complete_graph(2), &empty_graph(3));
        assert_eq!(determining_number(&g), (3, VertexSet::from([0, 3, 4])));
    }

    #[test]
    fn determining_set_predicate() {
        let c5 = cycle_graph(5);
        assert!(is_determining_set(&c5, &VertexSet::from([0, 1])));
        assert!(!is_determining_set(&c5, &VertexSet::from([0])));
        assert!(!is_determining_set(&complete_graph(3), &VertexSet::from([0])));
        assert!(is_determining_set(&asymmetric6(), &VertexSet::new()));
    }

    #[test]
    fn determining_containing_required_vertices() {
        let c5 = cycle_graph(5);
        let (k, s) = determining_number_containing(&c5, &VertexSet::from([2]));
        assert_eq!(k, 2);
        assert!(s.contains(&2));
        assert!(is_determining_set(&c5, &s));
        assert_eq!(s, VertexSet::from([0, 2]));
    }

    #[test]
    fn distinguishing_numbers_of_small_graphs() {
        let budget = DEFAULT_BUDGET;
        assert_eq!(distinguishing_number(&complete_graph(1), budget).exact_value(), Some(1));
        assert_eq!(distinguishing_number(&asymmetric6(), budget).exact_value(), Some(1));
        for n in 2..=5 {
            assert_eq!(
                distinguishing_number(&complete_graph(n), budget).exact_value(),
                Some(n),
                "K_{n}"
            );
        }
        assert_eq!(distinguishing_number(&cycle_graph(4), budget).exact_value(), Some(3));
        assert_eq!(distinguishing_number(&cycle_graph(5), budget).exact_value(), Some(3));
        assert_eq!(distinguishing_number(&cycle_graph(6), budget).exact_value(), Some(2));
        assert_eq!(distinguishing_number(&classical_M(2).into_graph(), budget).exact_value(), Some(2));
        // Two disjoint triangles force a fourth color.
        let two_k3 = disjoint_union(&complete_graph(3), &complete_graph(3));
        assert_eq!(distinguishing_number(&two_k3, budget).exact_value(), Some(4));
    }

    #[test]
    fn distinguishing_number_with_isolates() {
        let budget = DEFAULT_BUDGET;
        assert_eq!(distinguishing_number(&empty_graph(3), budget).exact_value(), Some(3));
        let g = disjoint_union(&complete_graph(2), &empty_graph(3));
        match distinguishing_number(&g, budget) {
            DistResult::Exact { value, witness } => {
                assert_eq!(value, 3);
                assert!(is_distinguishing_coloring(&g, &witness));
            }
            other => panic!("expected exact result, got {other:?}"),
        }
    }

    #[test]
    fn distinguishing_budget_gives_bounds() {
        match distinguishing_number(&cycle_graph(5), 1) {
            DistResult::Bounds { lo, hi } => {
                assert_eq!(lo, 2);
                assert_eq!(hi, 5);
            }
            other => panic!("expected bounds, got {other:?}"),
        }
    }

    #[test]
    fn distinguishing_coloring_predicate() {
        let c5 = cycle_graph(5);
        assert!(!is_distinguishing_coloring(&c5, &Coloring::new(vec![1, 2, 1, 2, 2], 2).unwrap()));
        assert!(is_distinguishing_coloring(&c5, &Coloring::new(vec![1, 2, 3, 1, 2], 3).unwrap()));
        assert!(!is_distinguishing_coloring(&c5, &Coloring::new(vec![1, 2], 2).unwrap()));
    }

    #[test]
    fn cost_two_of_small_graphs() {
        let budget = DEFAULT_BUDGET;
        assert_eq!(
            cost_2_distinguishing(&asymmetric6(), budget),
            CostTwoResult::Cost { value: 0, class: VertexSet::new() }
        );
        assert_eq!(
            cost_2_distinguishing(&complete_graph(2), budget),
            CostTwoResult::Cost { value: 1, class: VertexSet::from([0]) }
        );
        assert_eq!(cost_2_distinguishing(&cycle_graph(5), budget), CostTwoResult::NotTwoDistinguishable);
        match cost_2_distinguishing(&classical_M(2).into_graph(), budget) {
            CostTwoResult::Cost { value, class } => {
                assert_eq!(value, 2);
                assert_eq!(class.len(), 2);
            }
            other => panic!("expected cost, got {other:?}"),
        }
        // Every 1- or 2-subset of C₆ is preserved by some reflection, so the
        // cost is 3; {0, 1, 2} still has the axis through vertex 1.
        assert_eq!(
            cost_2_distinguishing(&cycle_graph(6), budget),
            CostTwoResult::Cost { value: 3, class: VertexSet::from([0, 1, 3]) }
        );
    }

    #[test]
    fn distinguishing_index_of_small_graphs() {
        let budget = DEFAULT_BUDGET;
        assert_eq!(distinguishing_index(&complete_graph(2), budget), EdgeDistResult::Undefined);
        let with_two_isolates = disjoint_union(&cycle_graph(5), &empty_graph(2));
        assert_eq!(distinguishing_index(&with_two_isolates, budget), EdgeDistResult::Undefined);
        assert_eq!(
            distinguishing_index(&complete_graph(3), budget),
            EdgeDistResult::Exact { value: 3, witness: vec![1, 2, 3] }
        );
        match distinguishing_index(&parse_edge_list("0 1\n1 2", 3).unwrap(), budget) {
            EdgeDistResult::Exact { value, .. } => assert_eq!(value, 2),
            other => panic!("expected exact result, got {other:?}"),
        }
        match distinguishing_index(&cycle_graph(4), budget) {
            EdgeDistResult::Exact { value, .. } => assert_eq!(value, 3),
            other => panic!("expected exact result, got {other:?}"),
        }
        assert_eq!(
            distinguishing_index(&asymmetric6(), budget),
            EdgeDistResult::Exact { value: 1, witness: vec![1; 6] }
        );
    }

    #[test]
    fn report_serializes_deterministically() {
        let r = param_report(&cycle_graph(5), ParamSelection::all(), DEFAULT_BUDGET);
        let json = serde_json::to_string_pretty(&r).unwrap();
        assert!(json.contains("\"graph6\": \"Dhc\""));
        assert!(json.contains("\"determining\""));
        assert!(json.contains("\"not_two_distinguishable\""));
        let again = serde_json::to_string_pretty(&param_report(
            &cycle_graph(5),
            ParamSelection::all(),
            DEFAULT_BUDGET,
        ))
        .unwrap();
        assert_eq!(json, again);
    }

    #[test]
    fn combinations_are_lexicographic() {
        let pool = [2, 5, 7, 9];
        let combos: Vec<Vec<usize>> = Combinations::new(&pool, 2).collect();
        assert_eq!(combos, vec![vec![2, 5], vec![2, 7], vec![2, 9], vec![5, 7], vec![5, 9], vec![7, 9]]);
        assert_eq!(Combinations::new(&pool, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
        assert_eq!(Combinations::new(&pool, 5).count(), 0);
    }

    // Brute-force oracles over all vertex permutations, for cross-checking on
    // tiny graphs.
    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if k <= 1 {
                out.push(cur.clone());
                return;
            }
            for i in 0..k {
                heap(k - 1, cur, out);
                if k % 2 == 0 {
                    cur.swap(i, k - 1);
                } else {
                    cur.swap(0, k - 1);
                }
            }
        }
        heap(n, &mut cur, &mut out);
        out
    }

    fn naive_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
        all_perms(g.n())
            .into_iter()
            .filter(|p| {
                g.vertices().all(|u| {
                    (u + 1..g.n()).all(|v| g.has_edge(u, v) == g.has_edge(p[u], p[v]))
                })
            })
            .collect()
    }

    fn naive_dist(g: &Graph) -> usize {
        let n = g.n();
        let auts = naive_automorphisms(g);
        'd: for d in 1..=n.max(1) {
            let total = (d as u64).pow(n as u32);
            for code in 0..total {
                let mut colors = vec![0usize; n];
                let mut c = code;
                for v in 0..n {
                    colors[v] = (c % d as u64) as usize + 1;
                    c /= d as u64;
                }
                let distinguishing = auts.iter().all(|p| {
                    p.iter().enumerate().all(|(i, &v)| i == v) || (0..n).any(|v| colors[p[v]] != colors[v])
                });
                if distinguishing {
                    return d;
                }
            }
            if n == 0 {
                break 'd;
            }
        }
        n.max(1)
    }

    fn naive_det(g: &Graph) -> usize {
        let n = g.n();
        let auts = naive_automorphisms(g);
        for size in 0..=n {
            for combo in Combinations::new(&(0..n).collect::<Vec<_>>(), size) {
                let determining = auts.iter().all(|p| {
                    p.iter().enumerate().all(|(i, &v)| i == v) || combo.iter().any(|&v| p[v] != v)
                });
                if determining {
                    return size;
                }
            }
        }
        n
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn search_matches_naive_oracles(n in 1usize..=5, seed in any::<u64>()) {
            let mut g = Graph::new(n);
            let mut s = seed;
            for j in 1..n {
                for i in 0..j {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if s >> 63 == 1 {
                        g.add_edge(i, j);
                    }
                }
            }
            let (det, witness) = determining_number(&g);
            prop_assert_eq!(det, naive_det(&g));
            prop_assert!(is_determining_set(&g, &witness));
            let dist = distinguishing_number(&g, DEFAULT_BUDGET);
            prop_assert_eq!(dist.exact_value(), Some(naive_dist(&g)));
        }
    }
}
