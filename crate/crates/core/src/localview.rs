//! Local views of `d`-regular graphs and their canonical forms.
//!
//! A local view around `v` records which pairs of neighbours of `v` are
//! adjacent, and for every neighbour `u` the multiset of colors on
//! `N(u) \ ({v} ∪ N(v))`. The colors of `v` and `N(v)` are not part of it,
//! and boundary vertices have no identity beyond their color.
//!
//! For a fixed ordering of the neighbours, a view is determined up to color
//! relabeling by the multiset of its *columns*: one column per boundary
//! color, holding how many times that color appears at each neighbour. The
//! canonical form takes, over all neighbour permutations, the smallest pair
//! (permuted inner-edge mask, columns sorted in decreasing order); colors are
//! then numbered `1..=q_C` in column order.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graphs::Graph;
use crate::{Error, Result};

pub const MAX_DEGREE: usize = 5;

/// Per-neighbour multiplicities of one boundary color.
pub type Column = [u8; MAX_DEGREE];

fn pair_bit(i: usize, j: usize) -> u32 {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    1 << (a * MAX_DEGREE + b)
}

fn permute_mask(mask: u32, d: usize, perm: &[usize]) -> u32 {
    let mut out = 0;
    for i in 0..d {
        for j in i + 1..d {
            if mask & pair_bit(i, j) != 0 {
                out |= pair_bit(perm[i], perm[j]);
            }
        }
    }
    out
}

fn inner_degree(mask: u32, d: usize, i: usize) -> usize {
    (0..d).filter(|&j| j != i && mask & pair_bit(i, j) != 0).count()
}

/// All permutations of `0..d` in lexicographic order.
pub(crate) fn permutations(d: usize) -> Vec<[usize; MAX_DEGREE]> {
    let mut out = Vec::new();
    let mut cur = [0usize; MAX_DEGREE];
    let mut used = [false; MAX_DEGREE];
    fn rec(
        k: usize,
        d: usize,
        cur: &mut [usize; MAX_DEGREE],
        used: &mut [bool; MAX_DEGREE],
        out: &mut Vec<[usize; MAX_DEGREE]>,
    ) {
        if k == d {
            out.push(*cur);
            return;
        }
        for x in 0..d {
            if !used[x] {
                used[x] = true;
                cur[k] = x;
                rec(k + 1, d, cur, used, out);
                used[x] = false;
            }
        }
    }
    rec(0, d, &mut cur, &mut used, &mut out);
    out
}

fn check_degree(d: usize) -> Result<()> {
    if (2..=MAX_DEGREE).contains(&d) {
        Ok(())
    } else {
        Err(Error::UnsupportedDegree(d))
    }
}

/// A local view in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LocalView {
    degree: u8,
    inner: u32,
    columns: Vec<Column>,
}

/// A local view as written down by hand or read off a graph: arbitrary
/// neighbour order and arbitrary color labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawView {
    pub degree: usize,
    /// Pairs of neighbour slots `0..degree` that are adjacent.
    pub inner_edges: Vec<(usize, usize)>,
    /// One color multiset per neighbour slot.
    pub boundary: Vec<Vec<u32>>,
}

/// Reusable canonicalizer for one degree.
#[derive(Clone, Debug)]
pub struct Canonicalizer {
    d: usize,
    perms: Vec<[usize; MAX_DEGREE]>,
}

impl Canonicalizer {
    pub fn new(d: usize) -> Result<Self> {
        check_degree(d)?;
        Ok(Canonicalizer {
            d,
            perms: permutations(d),
        })
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    /// Canonical form of `(inner, columns)` where slot `i` of every column is
    /// neighbour `i`. Bookkeeping is assumed valid.
    pub fn canonical(&self, inner: u32, columns: &[Column]) -> LocalView {
        let d = self.d;
        let mut best_mask = u32::MAX;
        let mut best_cols: Vec<Column> = Vec::new();
        let mut cols: Vec<Column> = Vec::with_capacity(columns.len());
        for perm in &self.perms {
            let mask = permute_mask(inner, d, perm);
            if mask > best_mask {
                continue;
            }
            cols.clear();
            for c in columns {
                let mut p = [0u8; MAX_DEGREE];
                for i in 0..d {
                    p[perm[i]] = c[i];
                }
                cols.push(p);
            }
            cols.sort_unstable_by(|a, b| b.cmp(a));
            if mask < best_mask || cols < best_cols {
                best_mask = mask;
                best_cols.clone_from(&cols);
            }
        }
        LocalView {
            degree: d as u8,
            inner: best_mask,
            columns: best_cols,
        }
    }

    /// Smallest image of an inner-edge mask under neighbour permutations.
    fn canonical_mask(&self, inner: u32) -> u32 {
        self.perms
            .iter()
            .map(|p| permute_mask(inner, self.d, p))
            .min()
            .unwrap_or(inner)
    }
}

/// Validates a raw view and returns its canonical representative.
pub fn canonicalize(raw: &RawView) -> Result<LocalView> {
    let d = raw.degree;
    let canon = Canonicalizer::new(d)?;
    if raw.boundary.len() != d {
        return Err(Error::InconsistentView(format!(
            "{} boundary multisets for degree {d}",
            raw.boundary.len()
        )));
    }
    let mut inner = 0;
    for &(i, j) in &raw.inner_edges {
        if i >= d || j >= d || i == j {
            return Err(Error::InconsistentView(format!("bad inner edge {i}-{j}")));
        }
        if inner & pair_bit(i, j) != 0 {
            return Err(Error::InconsistentView(format!("repeated inner edge {i}-{j}")));
        }
        inner |= pair_bit(i, j);
    }
    for (i, b) in raw.boundary.iter().enumerate() {
        let need = d - 1 - inner_degree(inner, d, i);
        if b.len() != need {
            return Err(Error::InconsistentView(format!(
                "neighbour {i} has {} boundary colors and {} inner edges; degree is {d}",
                b.len(),
                inner_degree(inner, d, i)
            )));
        }
    }
    let mut colors: BTreeMap<u32, Column> = BTreeMap::new();
    for (i, b) in raw.boundary.iter().enumerate() {
        for &c in b {
            colors.entry(c).or_insert([0; MAX_DEGREE])[i] += 1;
        }
    }
    let columns: Vec<Column> = colors.into_values().collect();
    Ok(canon.canonical(inner, &columns))
}

impl LocalView {
    pub fn degree(&self) -> usize {
        usize::from(self.degree)
    }

    /// Number of distinct boundary colors.
    pub fn q_c(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn inner_mask(&self) -> u32 {
        self.inner
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.inner & pair_bit(i, j) != 0
    }

    /// Adjacent neighbour pairs `(i, j)`, `i < j`.
    pub fn inner_edges(&self) -> Vec<(usize, usize)> {
        let d = self.degree();
        (0..d)
            .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
            .filter(|&(i, j)| self.is_adjacent(i, j))
            .collect()
    }

    pub fn inner_edge_count(&self) -> usize {
        self.inner.count_ones() as usize
    }

    pub fn inner_degree(&self, i: usize) -> usize {
        inner_degree(self.inner, self.degree(), i)
    }

    /// Boundary colors (`1..=q_C`) seen by neighbour `i`, sorted.
    pub fn boundary(&self, i: usize) -> Vec<u32> {
        let mut out = Vec::new();
        for (c, col) in self.columns.iter().enumerate() {
            for _ in 0..col[i] {
                out.push(c as u32 + 1);
            }
        }
        out
    }

    pub fn to_raw(&self) -> RawView {
        RawView {
            degree: self.degree(),
            inner_edges: self.inner_edges(),
            boundary: (0..self.degree()).map(|i| self.boundary(i)).collect(),
        }
    }

    /// Stable sort key for tables: inner-edge count, then boundary colors,
    /// then the canonical encoding.
    fn table_key(&self) -> (usize, usize, u32, &[Column]) {
        (self.inner_edge_count(), self.q_c(), self.inner, &self.columns)
    }

    /// The view with `degree` neighbours whose whole boundary is one color.
    pub fn monochromatic_boundary(degree: usize) -> Result<LocalView> {
        check_degree(degree)?;
        canonicalize(&RawView {
            degree,
            inner_edges: Vec::new(),
            boundary: vec![vec![1; degree - 1]; degree],
        })
    }

    /// The view of the complete graph `K_{degree+1}`.
    pub fn clique(degree: usize) -> Result<LocalView> {
        check_degree(degree)?;
        canonicalize(&RawView {
            degree,
            inner_edges: (0..degree)
                .flat_map(|i| (i + 1..degree).map(move |j| (i, j)))
                .collect(),
            boundary: vec![Vec::new(); degree],
        })
    }

    /// The cubic view where every neighbour sees colors `{1, 2}`.
    pub fn split_boundary_cubic() -> LocalView {
        canonicalize(&RawView {
            degree: 3,
            inner_edges: Vec::new(),
            boundary: vec![vec![1, 2]; 3],
        })
        .expect("valid cubic view")
    }
}

impl fmt::Debug for LocalView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LocalView {
    /// `inner=[0-1] boundary=[{1},{2},{1,3}]`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("inner=[")?;
        for (k, (i, j)) in self.inner_edges().into_iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}-{j}")?;
        }
        f.write_str("] boundary=[")?;
        for i in 0..self.degree() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("{")?;
            for (k, c) in self.boundary(i).into_iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str("}")?;
        }
        f.write_str("]")
    }
}

/// Reads local views off a fixed `d`-regular graph.
#[derive(Clone, Debug)]
pub struct Extractor {
    canon: Canonicalizer,
    /// Per vertex: neighbours, inner mask, external vertices per neighbour.
    frames: Vec<(Vec<usize>, u32, Vec<Vec<usize>>)>,
}

impl Extractor {
    pub fn new(g: &Graph) -> Result<Self> {
        let d = g.regular_degree().ok_or(Error::NotRegular)?;
        let canon = Canonicalizer::new(d)?;
        let frames = (0..g.n())
            .map(|v| {
                let nb = g.neighbors(v).to_vec();
                let mut mask = 0;
                for i in 0..d {
                    for j in i + 1..d {
                        if g.adjacent(nb[i], nb[j]) {
                            mask |= pair_bit(i, j);
                        }
                    }
                }
                let ext = nb
                    .iter()
                    .map(|&u| {
                        g.neighbors(u)
                            .iter()
                            .copied()
                            .filter(|&w| w != v && !nb.contains(&w))
                            .collect()
                    })
                    .collect();
                (nb, mask, ext)
            })
            .collect();
        Ok(Extractor { canon, frames })
    }

    pub fn degree(&self) -> usize {
        self.canon.d
    }

    /// The local view at `v` under the coloring `colors` (one entry per
    /// vertex). Does not bounds-check.
    pub fn view(&self, v: usize, colors: &[u8]) -> LocalView {
        let (_, mask, ext) = &self.frames[v];
        let mut labels: [u8; MAX_DEGREE * (MAX_DEGREE - 1)] = [0; MAX_DEGREE * (MAX_DEGREE - 1)];
        let mut columns: Vec<Column> = Vec::with_capacity(4);
        for (i, outs) in ext.iter().enumerate() {
            for &w in outs {
                let c = colors[w];
                let k = match labels[..columns.len()].iter().position(|&x| x == c) {
                    Some(k) => k,
                    None => {
                        labels[columns.len()] = c;
                        columns.push([0; MAX_DEGREE]);
                        columns.len() - 1
                    }
                };
                columns[k][i] += 1;
            }
        }
        self.canon.canonical(*mask, &columns)
    }
}

/// The canonical local view at `v` of `g` under the coloring `sigma`.
pub fn extract_view(g: &Graph, v: usize, sigma: &[u32]) -> Result<LocalView> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if sigma.len() != g.n() {
        return Err(Error::InvalidArgument(format!(
            "coloring has {} entries for {} vertices",
            sigma.len(),
            g.n()
        )));
    }
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    let nb = g.neighbors(v);
    let mut inner_edges = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            if g.adjacent(nb[i], nb[j]) {
                inner_edges.push((i, j));
            }
        }
    }
    let boundary = nb
        .iter()
        .map(|&u| {
            g.neighbors(u)
                .iter()
                .filter(|&&w| w != v && !nb.contains(&w))
                .map(|&w| sigma[w])
                .collect()
        })
        .collect();
    canonicalize(&RawView {
        degree: d,
        inner_edges,
        boundary,
    })
}

/// All canonical local views of one degree, in a fixed order.
#[derive(Clone, Debug)]
pub struct ViewTable {
    degree: usize,
    max_colors: Option<usize>,
    views: Vec<LocalView>,
    index: BTreeMap<LocalView, usize>,
}

impl ViewTable {
    fn from_set(degree: usize, max_colors: Option<usize>, set: BTreeSet<LocalView>) -> Self {
        let mut views: Vec<LocalView> = set.into_iter().collect();
        views.sort_by(|a, b| a.table_key().cmp(&b.table_key()));
        let index = views.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        ViewTable {
            degree,
            max_colors,
            views,
            index,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The boundary-color cap this table was built with, if any.
    pub fn max_colors(&self) -> Option<usize> {
        self.max_colors
    }

    pub fn views(&self) -> &[LocalView] {
        &self.views
    }

    pub fn len(&self) -> usize {
        self.views.len()
    }

    pub fn is_empty(&self) -> bool {
        self.views.is_empty()
    }

    /// Zero-based position of a canonical view.
    pub fn position(&self, view: &LocalView) -> Option<usize> {
        self.index.get(view).copied()
    }

    pub fn get(&self, index: usize) -> Option<&LocalView> {
        self.views.get(index)
    }

    /// Views using at most `q` boundary colors, with their table positions.
    pub fn admissible(&self, q: usize) -> impl Iterator<Item = (usize, &LocalView)> {
        self.views.iter().enumerate().filter(move |(_, v)| v.q_c() <= q)
    }
}

/// Every local view of degree `d`.
pub fn enumerate_views(d: usize) -> Result<ViewTable> {
    enumerate_views_bounded(d, None, None)
}

/// Local views of degree `d` with at most `max_colors` boundary colors.
/// `budget` caps the table size; exceeding it is an error.
pub fn enumerate_views_bounded(
    d: usize,
    max_colors: Option<usize>,
    budget: Option<usize>,
) -> Result<ViewTable> {
    let canon = Canonicalizer::new(d)?;
    let slots = d * (d - 1);
    let cap = max_colors.unwrap_or(slots).min(slots);
    let mut set = BTreeSet::new();
    let pairs = d * (d - 1) / 2;
    let pair_list: Vec<(usize, usize)> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
    for bits in 0u32..(1 << pairs) {
        let mut mask = 0;
        for (k, &(i, j)) in pair_list.iter().enumerate() {
            if bits & (1 << k) != 0 {
                mask |= pair_bit(i, j);
            }
        }
        if canon.canonical_mask(mask) != mask {
            continue;
        }
        let mut need = [0u8; MAX_DEGREE];
        for (i, n) in need.iter_mut().enumerate().take(d) {
            *n = (d - 1 - inner_degree(mask, d, i)) as u8;
        }
        let mut parts = Vec::new();
        let mut overflow = false;
        vector_partitions(&need, d, None, cap, &mut parts, &mut |cols| {
            set.insert(canon.canonical(mask, cols));
            if budget.is_some_and(|b| set.len() > b) {
                overflow = true;
            }
            !overflow
        });
        if overflow {
            return Err(Error::BudgetExceeded(format!(
                "more than {} local views of degree {d}",
                budget.unwrap_or(0)
            )));
        }
    }
    Ok(ViewTable::from_set(d, max_colors, set))
}

/// Calls `emit` with every multiset of nonzero columns summing to `rest`,
/// listed in non-increasing order, with at most `cap` columns. `emit`
/// returns `false` to stop.
fn vector_partitions(
    rest: &[u8; MAX_DEGREE],
    d: usize,
    bound: Option<Column>,
    cap: usize,
    parts: &mut Vec<Column>,
    emit: &mut dyn FnMut(&[Column]) -> bool,
) -> bool {
    if rest.iter().all(|&x| x == 0) {
        return emit(parts);
    }
    if parts.len() == cap {
        return true;
    }
    // Odometer over all columns <= rest componentwise, largest first.
    let mut col: Column = [0; MAX_DEGREE];
    col[..d].copy_from_slice(&rest[..d]);
    loop {
        let nonzero = col.iter().any(|&x| x != 0);
        if nonzero && bound.map_or(true, |b| col <= b) {
            let mut next = *rest;
            for i in 0..d {
                next[i] -= col[i];
            }
            parts.push(col);
            let keep_going = vector_partitions(&next, d, Some(col), cap, parts, emit);
            parts.pop();
            if !keep_going {
                return false;
            }
        }
        // decrement odometer (last slot fastest)
        let mut i = d;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            if col[i] > 0 {
                col[i] -= 1;
                for j in i + 1..d {
                    col[j] = rest[j];
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(inner: &[(usize, usize)], boundary: &[&[u32]]) -> RawView {
        RawView {
            degree: boundary.len(),
            inner_edges: inner.to_vec(),
            boundary: boundary.iter().map(|b| b.to_vec()).collect(),
        }
    }

    #[test]
    fn color_relabeling_is_invisible() {
        let c1 = LocalView::monochromatic_boundary(3).unwrap();
        let seven = canonicalize(&raw(&[], &[&[7, 7], &[7, 7], &[7, 7]])).unwrap();
        assert_eq!(seven, c1);
        let c2 = LocalView::split_boundary_cubic();
        let swapped = canonicalize(&raw(&[], &[&[2, 1], &[1, 2], &[2, 1]])).unwrap();
        assert_eq!(swapped, c2);
    }

    #[test]
    fn neighbour_order_is_invisible() {
        let a = canonicalize(&raw(&[(0, 1)], &[&[1], &[2], &[3, 4]])).unwrap();
        let b = canonicalize(&raw(&[(1, 2)], &[&[9, 8], &[6], &[5]])).unwrap();
        assert_eq!(a, b);
        let c = canonicalize(&raw(&[], &[&[1, 2], &[3, 4], &[5, 6]])).unwrap();
        let d = canonicalize(&raw(&[], &[&[5, 6], &[1, 2], &[4, 3]])).unwrap();
        assert_eq!(c, d);
        assert_eq!(c.q_c(), 6);
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let v = canonicalize(&raw(&[(0, 2)], &[&[3], &[1, 3], &[1]])).unwrap();
        assert_eq!(canonicalize(&v.to_raw()).unwrap(), v);
        for i in 0..3 {
            assert_eq!(v.boundary(i).len() + v.inner_degree(i), 2);
        }
    }

    #[test]
    fn inconsistent_bookkeeping_rejected() {
        assert!(matches!(
            canonicalize(&raw(&[(0, 1)], &[&[1, 1], &[1], &[1, 1]])),
            Err(Error::InconsistentView(_))
        ));
        assert!(matches!(canonicalize(&raw(&[(0, 0)], &[&[1], &[1]])), Err(Error::InconsistentView(_))));
        assert_eq!(
            canonicalize(&raw(&[], &[&[]])).unwrap_err(),
            Error::UnsupportedDegree(1)
        );
    }

    #[test]
    fn cubic_table_has_35_views() {
        let t = enumerate_views(3).unwrap();
        assert_eq!(t.len(), 35);
        let c1 = LocalView::monochromatic_boundary(3).unwrap();
        let c2 = LocalView::split_boundary_cubic();
        let k4 = LocalView::clique(3).unwrap();
        assert!(t.position(&c1).is_some() && t.position(&c2).is_some());
        assert_eq!(t.position(&k4), Some(34));
        assert_eq!(t.position(&c1), Some(0));
        // two two-triangle views plus K4
        assert_eq!(t.views().iter().filter(|v| v.inner_edge_count() >= 2).count(), 3);
    }

    #[test]
    fn degree_two_table() {
        // two open paths ({1},{1} and {1},{2}) and the triangle
        let t = enumerate_views(2).unwrap();
        assert_eq!(t.len(), 3);
    }

    #[test]
    fn unsupported_degrees() {
        assert_eq!(enumerate_views(1).unwrap_err(), Error::UnsupportedDegree(1));
        assert_eq!(enumerate_views(6).unwrap_err(), Error::UnsupportedDegree(6));
    }

    #[test]
    fn bounded_tables_and_budget() {
        assert_eq!(enumerate_views_bounded(3, Some(3), None).unwrap().len(), 25);
        assert_eq!(enumerate_views_bounded(3, Some(2), None).unwrap().len(), 14);
        assert!(matches!(
            enumerate_views_bounded(3, None, Some(10)),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn extraction_from_small_graphs() {
        let k33 = Graph::complete_bipartite(3).unwrap();
        // far side of vertex 0 is {3,4,5}; their far side is {0,1,2}
        let constant = [1, 1, 1, 5, 5, 5];
        assert_eq!(extract_view(&k33, 0, &constant).unwrap(), LocalView::monochromatic_boundary(3).unwrap());
        let split = [5, 1, 2, 5, 5, 5];
        assert_eq!(extract_view(&k33, 0, &split).unwrap(), LocalView::split_boundary_cubic());
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(extract_view(&k4, 2, &[1, 2, 3, 1]).unwrap(), LocalView::clique(3).unwrap());
        assert!(matches!(
            extract_view(&k4, 4, &[1, 1, 1, 1]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 4 })
        ));
        let ex = Extractor::new(&k33).unwrap();
        let c: [u8; 6] = [5, 1, 2, 5, 5, 5];
        assert_eq!(ex.view(0, &c), LocalView::split_boundary_cubic());
    }
}
