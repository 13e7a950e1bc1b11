//! Exact graded Betti numbers and Castelnuovo–Mumford regularity of
//! squarefree monomial quotients, through reduced simplicial homology of
//! induced Stanley–Reisner subcomplexes over a prime field.
//!
//! For a squarefree ideal `I` with Stanley–Reisner complex `Δ`,
//! `β_{i,j}(R/I) = Σ_{|σ|=j} dim H̃_{j-i-1}(Δ|_σ; GF(p))`, and
//! `reg(R/I) = max{ j - i : β_{i,j} ≠ 0 }`. Only σ that are unions of
//! generator supports can contribute: any other σ has a vertex in no minimal
//! non-face, making `Δ|_σ` a cone and hence acyclic.
//!
//! Homology conventions: the void complex has no reduced homology at all,
//! and the complex `{∅}` has `H̃_{-1} = 1`.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;
use crate::groebner::{initial_ideal, MonomialIdeal};

/// Homology computations enumerate up to `2^k` faces per induced subcomplex;
/// this caps the supported vertex/variable count.
pub const MAX_SUPPORT_VARS: usize = 20;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("effective support of {vars} variables exceeds the {MAX_SUPPORT_VARS}-variable limit")]
    SupportTooLarge { vars: usize },
    #[error("graph on {n} vertices needs 2n = {two_n} variables, over the {MAX_SUPPORT_VARS}-variable limit")]
    GraphTooLarge { n: usize, two_n: usize },
}

fn check_prime(p: u32) -> Result<(), HomologyError> {
    if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
        return Err(HomologyError::NotPrime(p));
    }
    Ok(())
}

/// A simplicial complex on at most 32 vertex slots, presented by its minimal
/// non-faces. A set is a face iff it lies in the vertex set and contains no
/// minimal non-face. An empty minimal non-face denotes the void complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: u32,
    min_nonfaces: Vec<u32>,
}

impl SimplicialComplex {
    /// Minimalizes and dedupes the non-face family.
    pub fn new(vertices: u32, nonfaces: impl IntoIterator<Item = u32>) -> Self {
        let mut nf: Vec<u32> = nonfaces.into_iter().collect();
        debug_assert!(nf.iter().all(|&m| m & !vertices == 0));
        nf.sort_by_key(|m| (m.count_ones(), *m));
        nf.dedup();
        let mut minimal: Vec<u32> = Vec::with_capacity(nf.len());
        for m in nf {
            if !minimal.iter().any(|&g| g & !m == 0) {
                minimal.push(m);
            }
        }
        SimplicialComplex { vertices, min_nonfaces: minimal }
    }

    pub fn vertices(&self) -> u32 {
        self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.count_ones() as usize
    }

    pub fn min_nonfaces(&self) -> &[u32] {
        &self.min_nonfaces
    }

    pub fn is_void(&self) -> bool {
        self.min_nonfaces.first() == Some(&0)
    }

    pub fn is_face(&self, f: u32) -> bool {
        f & !self.vertices == 0 && !self.min_nonfaces.iter().any(|&m| m & !f == 0)
    }

    /// The induced subcomplex on `sigma`.
    pub fn restriction(&self, sigma: u32) -> SimplicialComplex {
        SimplicialComplex::new(
            self.vertices & sigma,
            self.min_nonfaces.iter().copied().filter(|&m| m & !sigma == 0),
        )
    }

    /// Faces grouped by cardinality (`out[k]` holds the size-`k` faces,
    /// sorted ascending); empty for the void complex.
    fn faces_by_card(&self) -> Vec<Vec<u32>> {
        if self.is_void() {
            return Vec::new();
        }
        let verts: Vec<u32> = (0..32)
            .filter(|&v| self.vertices >> v & 1 == 1)
            .map(|v| 1u32 << v)
            .collect();
        let mut out: Vec<Vec<u32>> = vec![Vec::new(); verts.len() + 1];
        let mut stack: Vec<(usize, u32)> = vec![(0, 0)];
        while let Some((idx, cur)) = stack.pop() {
            if idx == verts.len() {
                out[cur.count_ones() as usize].push(cur);
                continue;
            }
            let with = cur | verts[idx];
            if !self.min_nonfaces.iter().any(|&m| m & verts[idx] != 0 && m & !with == 0) {
                stack.push((idx + 1, with));
            }
            stack.push((idx + 1, cur));
        }
        while out.last().is_some_and(Vec::is_empty) {
            out.pop();
        }
        for level in &mut out {
            level.sort_unstable();
        }
        out
    }
}

/// `dim H̃_d(K; GF(p))` for `d = -1, 0, 1, ...`: entry `c` of the result is
/// the dimension in degree `c - 1`. The void complex yields an empty vector.
pub fn reduced_homology_dims(k: &SimplicialComplex, p: u32) -> Result<Vec<usize>, HomologyError> {
    check_prime(p)?;
    if k.vertex_count() > MAX_SUPPORT_VARS {
        return Err(HomologyError::SupportTooLarge { vars: k.vertex_count() });
    }
    Ok(homology_dims_unchecked(k, p))
}

fn homology_dims_unchecked(k: &SimplicialComplex, p: u32) -> Vec<usize> {
    let levels = k.faces_by_card();
    if levels.is_empty() {
        return Vec::new();
    }
    // ranks[c] = rank of the boundary map from size-c faces to size-(c-1)
    // faces; the map out of C_0 = {∅} is zero.
    let mut ranks = vec![0usize; levels.len() + 1];
    for c in 1..levels.len() {
        ranks[c] = if p == 2 {
            boundary_rank_gf2(&levels[c], &levels[c - 1])
        } else {
            boundary_rank_gfp(&levels[c], &levels[c - 1], p)
        };
    }
    (0..levels.len())
        .map(|c| levels[c].len() - ranks[c] - ranks[c + 1])
        .collect()
}

fn face_index(level: &[u32], face: u32) -> usize {
    level.binary_search(&face).expect("boundary face missing from complex")
}

fn boundary_rank_gf2(upper: &[u32], lower: &[u32]) -> usize {
    let words = lower.len().div_ceil(64);
    let mut pivot_of_col: Vec<usize> = vec![usize::MAX; lower.len()];
    let mut pivot_rows: Vec<Vec<u64>> = Vec::new();
    let mut rank = 0;
    let mut row = vec![0u64; words];
    for &face in upper {
        row.iter_mut().for_each(|w| *w = 0);
        let mut rest = face;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            let col = face_index(lower, face & !(1 << v));
            row[col / 64] ^= 1 << (col % 64);
        }
        loop {
            let Some(lead) = first_set(&row) else { break };
            let pr = pivot_of_col[lead];
            if pr == usize::MAX {
                pivot_of_col[lead] = pivot_rows.len();
                pivot_rows.push(row.clone());
                rank += 1;
                break;
            }
            let piv = &pivot_rows[pr];
            for (w, pw) in row.iter_mut().zip(piv) {
                *w ^= pw;
            }
        }
    }
    rank
}

fn first_set(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn boundary_rank_gfp(upper: &[u32], lower: &[u32], p: u32) -> usize {
    let p64 = u64::from(p);
    let inv = |a: u64| -> u64 {
        // Fermat inverse; p is prime and a != 0 mod p.
        let mut base = a % p64;
        let mut exp = p64 - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p64;
            }
            base = base * base % p64;
            exp >>= 1;
        }
        acc
    };
    let mut pivot_of_col: Vec<usize> = vec![usize::MAX; lower.len()];
    let mut pivot_rows: Vec<Vec<u64>> = Vec::new();
    let mut rank = 0;
    for &face in upper {
        let mut row = vec![0u64; lower.len()];
        let mut rest = face;
        let mut pos = 0u32;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            let col = face_index(lower, face & !(1 << v));
            row[col] = if pos % 2 == 0 { 1 } else { p64 - 1 };
            pos += 1;
        }
        loop {
            let Some(lead) = row.iter().position(|&e| e != 0) else { break };
            let pr = pivot_of_col[lead];
            if pr == usize::MAX {
                // Normalize to a leading 1 before registering.
                let scale = inv(row[lead]);
                row.iter_mut().for_each(|e| *e = *e * scale % p64);
                pivot_of_col[lead] = pivot_rows.len();
                pivot_rows.push(row);
                rank += 1;
                break;
            }
            let factor = row[lead];
            let piv = &pivot_rows[pr];
            for (e, pe) in row.iter_mut().zip(piv) {
                *e = (*e + (p64 - factor % p64) * pe) % p64;
            }
        }
    }
    rank
}

/// Graded Betti numbers of the quotient by a squarefree ideal, over `GF(p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    p: u32,
    entries: BTreeMap<(usize, usize), u64>,
    regularity: usize,
}

impl BettiTable {
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries as `(i, j, value)`, ordered by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    /// `max{ j - i : β_{i,j} ≠ 0 }`; at least 0 because `β_{0,0} = 1`.
    pub fn regularity(&self) -> usize {
        self.regularity
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BettiTable", 3)?;
        st.serialize_field("p", &self.p)?;
        let triples: Vec<(usize, usize, u64)> = self.entries().collect();
        st.serialize_field("betti", &triples)?;
        st.serialize_field("reg", &self.regularity)?;
        st.end()
    }
}

/// Compresses the generator supports onto `0..vars`; errors past the
/// variable cap.
fn compressed_gens(ideal: &MonomialIdeal) -> Result<(Vec<u32>, usize), HomologyError> {
    let support = ideal.support();
    let vars = support.count_ones() as usize;
    if vars > MAX_SUPPORT_VARS {
        return Err(HomologyError::SupportTooLarge { vars });
    }
    let positions: Vec<u32> = (0..64).filter(|&b| support >> b & 1 == 1).collect();
    let gens = ideal
        .gens()
        .iter()
        .map(|g| {
            let mut m = 0u32;
            for (new, &old) in positions.iter().enumerate() {
                if g.bits() >> old & 1 == 1 {
                    m |= 1 << new;
                }
            }
            m
        })
        .collect();
    Ok((gens, vars))
}

/// σ contributes iff it is the union of the generator supports inside it;
/// otherwise some vertex of σ misses every minimal non-face and the induced
/// complex is a cone.
fn covered(gens: &[u32], sigma: u32) -> u32 {
    gens.iter().filter(|&&g| g & !sigma == 0).fold(0, |acc, &g| acc | g)
}

/// Exact graded Betti table of the quotient by `ideal` over `GF(p)`, by
/// Hochster's formula over the effective support.
pub fn betti_table(ideal: &MonomialIdeal, p: u32) -> Result<BettiTable, HomologyError> {
    check_prime(p)?;
    assert!(
        ideal.gens().iter().all(|g| g.bits() != 0),
        "unit ideal has no Betti table"
    );
    let (gens, vars) = compressed_gens(ideal)?;
    let mut entries: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for sigma in 0..1u32 << vars {
        if covered(&gens, sigma) != sigma {
            continue;
        }
        let complex = SimplicialComplex::new(sigma, gens.iter().copied().filter(|&g| g & !sigma == 0));
        let dims = homology_dims_unchecked(&complex, p);
        let j = sigma.count_ones() as usize;
        for (c, &d) in dims.iter().enumerate() {
            if d > 0 {
                *entries.entry((j - c, j)).or_insert(0) += d as u64;
            }
        }
    }
    let regularity = entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0);
    Ok(BettiTable { p, entries, regularity })
}

/// `reg(R/I)` over `GF(p)` without assembling the full table: scans σ by
/// descending size and stops once no remaining size can improve the maximum
/// (a σ of size k contributes at most k).
pub fn regularity(ideal: &MonomialIdeal, p: u32) -> Result<usize, HomologyError> {
    check_prime(p)?;
    let (gens, vars) = compressed_gens(ideal)?;
    let mut best = 0usize;
    for k in (1..=vars).rev() {
        if k <= best {
            break;
        }
        let mut sigma = (1u32 << k) - 1;
        let stop = 1u32 << vars;
        while sigma < stop {
            if covered(&gens, sigma) == sigma {
                let complex =
                    SimplicialComplex::new(sigma, gens.iter().copied().filter(|&g| g & !sigma == 0));
                let dims = homology_dims_unchecked(&complex, p);
                let top = dims.iter().rposition(|&d| d > 0);
                if let Some(c) = top {
                    best = best.max(c);
                }
            }
            sigma = next_same_popcount(sigma);
        }
    }
    Ok(best)
}

/// Gosper's hack.
fn next_same_popcount(x: u32) -> u32 {
    let u = x & x.wrapping_neg();
    let v = x.wrapping_add(u);
    if v == 0 {
        return u32::MAX; // popcount overflowed past the msb; caller's bound stops it
    }
    v | (((x ^ v) / u) >> 2)
}

/// `reg(R/J_G)` over `GF(p)`: the regularity of the squarefree lex initial
/// ideal (regularity is preserved under the squarefree degeneration).
/// Additive over connected components; 0 for edgeless graphs.
pub fn reg_binomial_edge(g: &Graph, p: u32) -> Result<usize, HomologyError> {
    if 2 * g.n() > MAX_SUPPORT_VARS {
        return Err(HomologyError::GraphTooLarge { n: g.n(), two_n: 2 * g.n() });
    }
    regularity(&initial_ideal(g), p)
}
