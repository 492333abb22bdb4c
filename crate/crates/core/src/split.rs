//! Splits: vertex bipartitions whose cut is a complete bipartite graph.
//!
//! A split is found by growing a side `X` from a seed: a cut edge `ab`
//! (with `a` inside and `b` outside) plus one more inside vertex `x`. Three
//! forcing rules hold for every split side containing `a` and `x` but not
//! `b`:
//!
//! * a vertex outside `X` with a neighbor in `X` must be adjacent to `a`;
//! * an outside neighbor of `a` must be adjacent to every vertex of
//!   `X ∩ N(b)`;
//! * a vertex of `X` not adjacent to `b` has all its neighbors in `X`.
//!
//! Any vertex violating one of them is pulled into `X`. At the fixpoint the
//! cut between `X ∩ N(b)` and the outside neighbors of `X` is complete, so `X`
//! is a split side as soon as at least two vertices remain outside; and since
//! every rule is forced, the fixpoint is the least split side for that seed.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::ColoredGraph;

/// A split `(A, B, A', B')`: every `A`-`B` pair is adjacent, `A'` sees
/// nothing of `B ∪ B'`, `B'` nothing of `A ∪ A'`, and both sides
/// `A ∪ A'` and `B ∪ B'` have at least two vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub a_prime: Vec<usize>,
    pub b_prime: Vec<usize>,
}

impl Split {
    /// Assembles the split whose first side is `side`.
    pub fn from_side(g: &ColoredGraph, side: &[usize]) -> Split {
        let n = g.vertex_count();
        let mut inside = vec![false; n];
        for &v in side {
            inside[v] = true;
        }
        let mut split = Split { a: vec![], b: vec![], a_prime: vec![], b_prime: vec![] };
        for v in 0..n {
            let crosses = g.neighbors(v).iter().any(|&w| inside[w] != inside[v]);
            match (inside[v], crosses) {
                (true, true) => split.a.push(v),
                (true, false) => split.a_prime.push(v),
                (false, true) => split.b.push(v),
                (false, false) => split.b_prime.push(v),
            }
        }
        split
    }

    pub fn side_a(&self) -> Vec<usize> {
        let mut side: Vec<usize> = self.a.iter().chain(&self.a_prime).copied().collect();
        side.sort_unstable();
        side
    }

    pub fn side_b(&self) -> Vec<usize> {
        let mut side: Vec<usize> = self.b.iter().chain(&self.b_prime).copied().collect();
        side.sort_unstable();
        side
    }

    /// Checks all split conditions against `g`.
    pub fn validate(&self, g: &ColoredGraph) -> Result<()> {
        let n = g.vertex_count();
        let mut part = vec![u8::MAX; n];
        for (tag, set) in [&self.a, &self.b, &self.a_prime, &self.b_prime].into_iter().enumerate() {
            for &v in set {
                if v >= n || part[v] != u8::MAX {
                    return Err(Error::InvalidSplit(format!("vertex {v} missing or repeated")));
                }
                part[v] = tag as u8;
            }
        }
        if part.contains(&u8::MAX) {
            return Err(Error::InvalidSplit("sets do not cover the vertices".into()));
        }
        if self.a.len() + self.a_prime.len() < 2 || self.b.len() + self.b_prime.len() < 2 {
            return Err(Error::InvalidSplit("a side has fewer than two vertices".into()));
        }
        for &u in &self.a {
            for &v in &self.b {
                if !g.has_edge(u, v) {
                    return Err(Error::InvalidSplit(format!("{u} in A and {v} in B not adjacent")));
                }
            }
        }
        for (u, v) in g.edges() {
            let (pu, pv) = (part[u].min(part[v]), part[u].max(part[v]));
            // allowed across sides: only A-B
            let side = |p: u8| p == 0 || p == 2;
            if side(pu) != side(pv) && (pu, pv) != (0, 1) {
                return Err(Error::InvalidSplit(format!("edge {u}-{v} crosses outside A-B")));
            }
        }
        Ok(())
    }
}

/// Order in which `find_split` tries seeds.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SeedOrder {
    #[default]
    Lexicographic,
    /// A seeded random permutation of the lexicographic seed list.
    Shuffled(u64),
}

/// The least split side containing `a` and `x` but not `b`, where `ab` must
/// be an edge. `None` when fewer than two vertices would remain outside.
pub fn split_closure(g: &ColoredGraph, a: usize, b: usize, x: usize) -> Result<Option<Vec<usize>>> {
    let n = g.vertex_count();
    for v in [a, b, x] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if a == x || b == x || !g.has_edge(a, b) {
        return Err(Error::InvalidSplit("seed needs an edge ab and a third vertex x".into()));
    }
    let mut scratch = Closure::new(n);
    Ok(scratch.run(g, a, b, x).then(|| {
        let mut side = scratch.members.clone();
        side.sort_unstable();
        side
    }))
}

/// Some split of the connected graph `g`, or `None` when `g` is prime.
pub fn find_split(g: &ColoredGraph) -> Result<Option<Split>> {
    find_split_with(g, SeedOrder::Lexicographic)
}

pub fn find_split_with(g: &ColoredGraph, order: SeedOrder) -> Result<Option<Split>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(find_split_connected(g, order))
}

/// The side containing a fixed vertex `z` either has `z` on the cut (seeds
/// `(z, b, x)` over `b ∈ N(z)`) or has `z` strictly inside, in which case some
/// cut edge `ab` avoids `z` (seeds `(a, b, z)`). Trying both families is
/// therefore exhaustive.
pub(crate) fn find_split_connected(g: &ColoredGraph, order: SeedOrder) -> Option<Split> {
    let n = g.vertex_count();
    if n < 4 {
        return None;
    }
    let z = (0..n).min_by_key(|&v| g.degree(v)).unwrap();
    let mut scratch = Closure::new(n);
    let try_seed = |scratch: &mut Closure, (a, b, x): (usize, usize, usize)| {
        scratch.run(g, a, b, x).then(|| Split::from_side(g, &scratch.members))
    };

    match order {
        SeedOrder::Lexicographic => {
            // lazily, so early successes stay cheap
            for &b in g.neighbors(z) {
                for x in (0..n).filter(|&x| x != z && x != b) {
                    if let Some(s) = try_seed(&mut scratch, (z, b, x)) {
                        return Some(s);
                    }
                }
            }
            for a in (0..n).filter(|&a| a != z) {
                for &b in g.neighbors(a).iter().filter(|&&b| b != z) {
                    if let Some(s) = try_seed(&mut scratch, (a, b, z)) {
                        return Some(s);
                    }
                }
            }
            None
        }
        SeedOrder::Shuffled(seed) => {
            let mut seeds = Vec::new();
            for &b in g.neighbors(z) {
                seeds.extend((0..n).filter(|&x| x != z && x != b).map(|x| (z, b, x)));
            }
            for a in (0..n).filter(|&a| a != z) {
                seeds.extend(g.neighbors(a).iter().filter(|&&b| b != z).map(|&b| (a, b, z)));
            }
            seeds.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            seeds.into_iter().find_map(|s| try_seed(&mut scratch, s))
        }
    }
}

struct Closure {
    inside: Vec<bool>,
    /// neighbors in `X ∩ N(b)`
    cut_count: Vec<u32>,
    near_a: Vec<bool>,
    near_b: Vec<bool>,
    members: Vec<usize>,
    touched: Vec<usize>,
}

impl Closure {
    fn new(n: usize) -> Self {
        Closure {
            inside: vec![false; n],
            cut_count: vec![0; n],
            near_a: vec![false; n],
            near_b: vec![false; n],
            members: Vec::new(),
            touched: Vec::new(),
        }
    }

    fn reset(&mut self, g: &ColoredGraph, a: usize, b: usize) {
        for &v in &self.members {
            self.inside[v] = false;
        }
        for &v in &self.touched {
            self.cut_count[v] = 0;
        }
        self.members.clear();
        self.touched.clear();
        self.near_a.iter_mut().for_each(|f| *f = false);
        self.near_b.iter_mut().for_each(|f| *f = false);
        for &w in g.neighbors(a) {
            self.near_a[w] = true;
        }
        for &w in g.neighbors(b) {
            self.near_b[w] = true;
        }
    }

    fn push(&mut self, v: usize) {
        if !self.inside[v] {
            self.inside[v] = true;
            self.members.push(v);
        }
    }

    /// Runs the closure; true iff it ends with at least two vertices outside.
    fn run(&mut self, g: &ColoredGraph, a: usize, b: usize, x: usize) -> bool {
        let n = g.vertex_count();
        self.reset(g, a, b);
        self.push(a);
        self.push(x);
        let mut cut_size = 0u32;
        let mut head = 0;
        while head < self.members.len() {
            if self.members.len() + 2 > n {
                return false;
            }
            let v = self.members[head];
            head += 1;
            if self.near_b[v] {
                cut_size += 1;
                for &w in g.neighbors(v) {
                    if self.cut_count[w] == 0 {
                        self.touched.push(w);
                    }
                    self.cut_count[w] += 1;
                }
                for &w in g.neighbors(a) {
                    if !self.inside[w] && self.cut_count[w] < cut_size {
                        self.push(w);
                    }
                }
            } else {
                for &w in g.neighbors(v) {
                    self.push(w);
                }
            }
            for &w in g.neighbors(v) {
                if !self.inside[w] && !self.near_a[w] {
                    self.push(w);
                }
            }
        }
        self.members.len() + 2 <= n
    }
}
