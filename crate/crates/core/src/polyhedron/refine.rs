//! Common refinement of a family of simplexes by a hyperplane arrangement,
//! and pulling triangulations of the resulting convex cells.
//!
//! Every input simplex is cut out by hyperplanes of the arrangement (its hull
//! equations and its extended barycentric facets), so after splitting each
//! simplex by every hyperplane that crosses it, all cells are closed faces of
//! the arrangement. Closed faces of an arrangement meet in common faces, and
//! pulling triangulations taken with one global vertex order agree on shared
//! faces, which makes the union a simplicial complex with no new vertices
//! beyond the cell vertices.

use std::collections::{BTreeSet, HashMap};

use crate::convex::{affine_dim, hyperplane_key, Hyperplane};
use crate::lattice::{Rat, RatPoint};
use crate::simplicial::{centroid, Simplex};

/// A convex cell: sorted vertex list and its affine dimension.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct Cell {
    pub vertices: Vec<RatPoint>,
    pub dim: usize,
}

pub(crate) struct Arrangement {
    hyperplanes: Vec<Hyperplane>,
    signs: HashMap<RatPoint, Vec<i8>>,
    facet_memo: HashMap<Vec<RatPoint>, Vec<Vec<RatPoint>>>,
    pull_memo: HashMap<Vec<RatPoint>, Vec<Vec<RatPoint>>>,
}

impl Arrangement {
    /// The arrangement generated by the halfspace descriptions of `simplexes`.
    pub fn of_simplexes<'a>(simplexes: impl IntoIterator<Item = &'a Simplex>) -> Self {
        let mut keys = BTreeSet::new();
        for s in simplexes {
            let h = s.hrep();
            for p in h.equations.iter().chain(&h.inequalities) {
                if !p.is_degenerate() {
                    keys.insert(hyperplane_key(p));
                }
            }
        }
        Arrangement {
            hyperplanes: keys.into_iter().collect(),
            signs: HashMap::new(),
            facet_memo: HashMap::new(),
            pull_memo: HashMap::new(),
        }
    }

    fn signs(&mut self, p: &RatPoint) -> &[i8] {
        if !self.signs.contains_key(p) {
            let s = self.hyperplanes.iter().map(|h| h.sign_at(p)).collect();
            self.signs.insert(p.clone(), s);
        }
        &self.signs[p]
    }

    /// Maximal closed arrangement faces inside `s`.
    pub fn split(&mut self, s: &Simplex) -> Vec<Cell> {
        let dim = s.dim();
        let mut cells = vec![Cell { vertices: s.vertices().to_vec(), dim }];
        if dim == 0 {
            return cells;
        }
        // Processed hyperplanes are valid (one-sided) for every current cell;
        // so are the simplex's own, which are put first.
        let own: BTreeSet<Hyperplane> = {
            let h = s.hrep();
            h.equations.iter().chain(&h.inequalities).filter(|p| !p.is_degenerate()).map(hyperplane_key).collect()
        };
        let mut order: Vec<usize> = (0..self.hyperplanes.len()).filter(|&i| own.contains(&self.hyperplanes[i])).collect();
        order.extend((0..self.hyperplanes.len()).filter(|&i| !own.contains(&self.hyperplanes[i])));

        for (step, &hi) in order.iter().enumerate() {
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells {
                let signs: Vec<i8> = cell.vertices.iter().map(|v| self.signs(v)[hi]).collect();
                let has_neg = signs.iter().any(|&x| x < 0);
                let has_pos = signs.iter().any(|&x| x > 0);
                if !(has_neg && has_pos) {
                    next.push(cell);
                    continue;
                }
                let valid = &order[..step];
                let tight: Vec<Vec<bool>> = cell
                    .vertices
                    .iter()
                    .map(|v| {
                        let sg = self.signs(v);
                        valid.iter().map(|&j| sg[j] == 0).collect()
                    })
                    .collect();
                let h = &self.hyperplanes[hi];
                let mut new_points = BTreeSet::new();
                for a in 0..cell.vertices.len() {
                    for b in 0..cell.vertices.len() {
                        if !(signs[a] < 0 && signs[b] > 0) {
                            continue;
                        }
                        if !adjacent(&tight, a, b) {
                            continue;
                        }
                        let (u, w) = (&cell.vertices[a], &cell.vertices[b]);
                        let hu = h.eval(u);
                        let hw = h.eval(w);
                        let t = &hu / (&hu - &hw);
                        let p: Vec<Rat> =
                            u.coords().iter().zip(w.coords()).map(|(x, y)| x + &t * (y - x)).collect();
                        new_points.insert(RatPoint::new(p));
                    }
                }
                let mut neg: BTreeSet<RatPoint> = new_points.clone();
                let mut pos: BTreeSet<RatPoint> = new_points;
                for (v, &sg) in cell.vertices.iter().zip(&signs) {
                    if sg <= 0 {
                        neg.insert(v.clone());
                    }
                    if sg >= 0 {
                        pos.insert(v.clone());
                    }
                }
                next.push(Cell { vertices: neg.into_iter().collect(), dim: cell.dim });
                next.push(Cell { vertices: pos.into_iter().collect(), dim: cell.dim });
            }
            cells = next;
        }
        debug_assert!(cells.iter().all(|c| affine_dim(&c.vertices) == c.dim as isize));
        cells
    }

    /// Facets of a face of a final cell. Every hyperplane of the arrangement
    /// is one-sided on such faces.
    pub fn facets(&mut self, vertices: &[RatPoint], dim: usize) -> Vec<Vec<RatPoint>> {
        if dim == 0 {
            return Vec::new();
        }
        if let Some(f) = self.facet_memo.get(vertices) {
            return f.clone();
        }
        let out: Vec<Vec<RatPoint>> = if vertices.len() == dim + 1 {
            (0..vertices.len())
                .map(|i| {
                    let mut v = vertices.to_vec();
                    v.remove(i);
                    v
                })
                .collect()
        } else {
            let mut found = BTreeSet::new();
            for hi in 0..self.hyperplanes.len() {
                let tight: Vec<RatPoint> =
                    vertices.iter().filter(|v| self.signs(v)[hi] == 0).cloned().collect();
                if tight.len() == vertices.len() || tight.len() < dim {
                    continue;
                }
                if affine_dim(&tight) == dim as isize - 1 {
                    found.insert(tight);
                }
            }
            found.into_iter().collect()
        };
        self.facet_memo.insert(vertices.to_vec(), out.clone());
        out
    }

    /// All faces of a cell, itself included.
    pub fn all_faces(&mut self, cell: &Cell, out: &mut BTreeSet<Cell>) {
        if !out.insert(cell.clone()) {
            return;
        }
        for f in self.facets(&cell.vertices, cell.dim) {
            let child = Cell { vertices: f, dim: cell.dim - 1 };
            self.all_faces(&child, out);
        }
    }

    /// Pulling triangulation from the lexicographically least vertex.
    pub fn pull(&mut self, vertices: &[RatPoint], dim: usize) -> Vec<Vec<RatPoint>> {
        if vertices.len() == dim + 1 {
            return vec![vertices.to_vec()];
        }
        if let Some(t) = self.pull_memo.get(vertices) {
            return t.clone();
        }
        let apex = vertices[0].clone();
        let mut out = Vec::new();
        for f in self.facets(vertices, dim) {
            if f.contains(&apex) {
                continue;
            }
            for mut s in self.pull(&f, dim - 1) {
                s.insert(0, apex.clone());
                out.push(s);
            }
        }
        self.pull_memo.insert(vertices.to_vec(), out.clone());
        out
    }

    pub fn triangulate(&mut self, cell: &Cell) -> Vec<Simplex> {
        self.pull(&cell.vertices, cell.dim).into_iter().map(Simplex::from_sorted_unchecked).collect()
    }
}

/// Combinatorial adjacency: `a` and `b` span an edge iff no third vertex is
/// tight on every constraint tight at both.
fn adjacent(tight: &[Vec<bool>], a: usize, b: usize) -> bool {
    let common: Vec<usize> = (0..tight[a].len()).filter(|&j| tight[a][j] && tight[b][j]).collect();
    !(0..tight.len()).any(|z| z != a && z != b && common.iter().all(|&j| tight[z][j]))
}

/// A point in the relative interior of a cell.
pub(crate) fn relative_interior_point(cell: &Cell) -> RatPoint {
    centroid(&cell.vertices)
}

/// Groups simplexes into classes connected by nonempty intersection.
pub(crate) fn intersection_components(simplexes: &[Simplex]) -> Vec<Vec<usize>> {
    let k = simplexes.len();
    let boxes: Vec<_> = simplexes.iter().map(Simplex::bbox).collect();
    let hreps: Vec<_> = simplexes.iter().map(Simplex::hrep).collect();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for i in 0..k {
        for j in i + 1..k {
            if !crate::simplicial::bboxes_overlap(&boxes[i], &boxes[j]) {
                continue;
            }
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri == rj {
                continue;
            }
            if !hreps[i].intersect(&hreps[j]).vertices().is_empty() {
                parent[ri] = rj;
            }
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..k {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort();
    out
}

/// Whether every pair of the given simplexes meets in a common face.
pub(crate) fn meets_properly(a: &Simplex, b: &Simplex) -> bool {
    if !crate::simplicial::bboxes_overlap(&a.bbox(), &b.bbox()) {
        return true;
    }
    a.hrep().intersect(&b.hrep()).vertices().iter().all(|v| a.has_vertex(v) && b.has_vertex(v))
}
