//! The squarefree lex initial ideal of a binomial edge ideal, generated from
//! admissible paths.
//!
//! The ambient ring has `2n` variables `x_1 > ... > x_n > y_1 > ... > y_n`
//! (lex). An admissible path is an induced path between endpoints `i < j`
//! all of whose interior vertices lie outside `[i, j]`; it contributes the
//! squarefree monomial `u_P · x_i · y_j` with
//! `u_P = Π_{interior k > j} x_k · Π_{interior k < i} y_k`.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("path needs at least two vertices")]
    TooShort,
    #[error("vertex {0} repeated")]
    RepeatedVertex(usize),
    #[error("vertices {0} and {1} are consecutive but not adjacent")]
    NotAPath(usize, usize),
    #[error("chord {0}-{1} keeps the path from being induced")]
    Chord(usize, usize),
    #[error("interior vertex {vertex} lies between the endpoints {i} and {j}")]
    InteriorInRange { vertex: usize, i: usize, j: usize },
}

/// A squarefree monomial in the `2n` variables, as a bitmask: bit `v` is
/// `x_{v+1}` and bit `n + v` is `y_{v+1}` for an ambient vertex count `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(u64);

impl Monomial {
    pub fn from_bits(bits: u64) -> Self {
        Monomial(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn x(v: usize) -> Self {
        Monomial(1 << v)
    }

    pub fn y(v: usize, n: usize) -> Self {
        Monomial(1 << (n + v))
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn mul(self, other: Monomial) -> Monomial {
        Monomial(self.0 | other.0)
    }

    /// Text form like `x1*y2`, x-variables then y-variables, ascending.
    pub fn text(self, n: usize) -> String {
        let mut parts = Vec::new();
        for v in 0..n {
            if self.0 >> v & 1 == 1 {
                parts.push(format!("x{}", v + 1));
            }
        }
        for v in 0..n {
            if self.0 >> (n + v) & 1 == 1 {
                parts.push(format!("y{}", v + 1));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Monomial({:#b})", self.0)
    }
}

/// A squarefree monomial ideal given by its minimal generators, sorted by
/// (degree, bitmask).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
    num_vars: usize,
}

impl MonomialIdeal {
    /// Minimalizes, dedupes, and sorts the generators.
    pub fn new(gens: Vec<Monomial>, num_vars: usize) -> Self {
        let mut gens = gens;
        gens.sort_by_key(|m| (m.degree(), m.bits()));
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for m in gens {
            if !minimal.iter().any(|g| g.divides(m)) {
                minimal.push(m);
            }
        }
        MonomialIdeal { gens: minimal, num_vars }
    }

    pub fn zero(num_vars: usize) -> Self {
        MonomialIdeal { gens: Vec::new(), num_vars }
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Ideal sum: the minimalized union of the generator sets. Ambients must
    /// agree.
    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.num_vars, other.num_vars, "ambient mismatch");
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        MonomialIdeal::new(gens, self.num_vars)
    }

    /// Union of the generator supports, as a variable bitmask.
    pub fn support(&self) -> u64 {
        self.gens.iter().fold(0, |acc, g| acc | g.bits())
    }

    /// Text form like `(x1*y2, x2*y3)`; `(0)` for the zero ideal.
    pub fn text(&self) -> String {
        let n = self.num_vars / 2;
        if self.gens.is_empty() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self.gens.iter().map(|m| m.text(n)).collect();
        format!("({})", parts.join(", "))
    }
}

/// An induced path whose interior avoids the closed label interval of its
/// endpoints; stored with the smaller endpoint first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissiblePath {
    vertices: Vec<usize>,
}

impl AdmissiblePath {
    /// Validates the path conditions against `g` and normalizes orientation.
    pub fn try_new(g: &Graph, mut vertices: Vec<usize>) -> Result<Self, PathError> {
        if vertices.len() < 2 {
            return Err(PathError::TooShort);
        }
        let mut seen = 0u64;
        for &v in &vertices {
            if seen >> v & 1 == 1 {
                return Err(PathError::RepeatedVertex(v));
            }
            seen |= 1 << v;
        }
        for w in vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(PathError::NotAPath(w[0], w[1]));
            }
        }
        for (a, &u) in vertices.iter().enumerate() {
            for &w in vertices.iter().skip(a + 2) {
                if g.has_edge(u, w) {
                    return Err(PathError::Chord(u, w));
                }
            }
        }
        if vertices[0] > *vertices.last().unwrap() {
            vertices.reverse();
        }
        let (i, j) = (vertices[0], *vertices.last().unwrap());
        for &v in &vertices[1..vertices.len() - 1] {
            if v > i && v < j {
                return Err(PathError::InteriorInRange { vertex: v, i, j });
            }
        }
        Ok(AdmissiblePath { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// `(i, j)` with `i < j`.
    pub fn endpoints(&self) -> (usize, usize) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    pub fn interior(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    /// Path length `ℓ` (edge count, at least 1).
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }
}

/// Every admissible path of `g` (single edges included), by DFS over induced
/// paths from each start vertex. Each path appears once, smaller endpoint
/// first; the order is deterministic.
pub fn admissible_paths(g: &Graph) -> Vec<AdmissiblePath> {
    let mut out = Vec::new();
    let mut path = Vec::new();
    for start in 0..g.n() {
        path.push(start);
        paths_dfs(g, &mut path, 1u32 << start, &mut out);
        path.pop();
    }
    out
}

fn paths_dfs(g: &Graph, path: &mut Vec<usize>, visited: u32, out: &mut Vec<AdmissiblePath>) {
    let start = path[0];
    let last = *path.last().unwrap();
    if last > start {
        let ok = path[1..path.len() - 1]
            .iter()
            .all(|&v| v < start || v > last);
        if ok {
            out.push(AdmissiblePath { vertices: path.clone() });
        }
    }
    let mut next = g.neighbors(last).bits() & !visited;
    while next != 0 {
        let w = next.trailing_zeros() as usize;
        next &= next - 1;
        // Induced: w may touch the path only at its tip.
        if g.neighbors(w).bits() & visited != 1 << last {
            continue;
        }
        path.push(w);
        paths_dfs(g, path, visited | 1 << w, out);
        path.pop();
    }
}

/// The lex leading monomial `u_P · x_i · y_j` of the path binomial.
pub fn path_leading_monomial(p: &AdmissiblePath, n: usize) -> Monomial {
    let (i, j) = p.endpoints();
    let mut m = Monomial::x(i).mul(Monomial::y(j, n));
    for &v in p.interior() {
        m = m.mul(if v > j { Monomial::x(v) } else { Monomial::y(v, n) });
    }
    m
}

/// The initial ideal of the binomial edge ideal of `g` under the lex order
/// `x_1 > ... > x_n > y_1 > ... > y_n`: the minimalized ideal generated by
/// the leading monomials of all admissible paths. Zero for edgeless graphs.
pub fn initial_ideal(g: &Graph) -> MonomialIdeal {
    let n = g.n();
    let gens: Vec<Monomial> = admissible_paths(g)
        .iter()
        .map(|p| path_leading_monomial(p, n))
        .collect();
    MonomialIdeal::new(gens, 2 * n)
}
