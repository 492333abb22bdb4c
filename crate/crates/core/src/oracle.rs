//! Exhaustive reference implementations for small inputs. They only read
//! their inputs through plain accessors and share no logic with the fast
//! paths they are used to check.

use crate::chord::CircleRep;
use crate::error::{Error, Result};
use crate::graph::ColoredGraph;
use crate::split::Split;

pub const ISO_LIMIT: usize = 9;
pub const SPLITS_LIMIT: usize = 7;
pub const FIND_REP_LIMIT: usize = 10;

fn limit(what: &'static str, limit: usize, got: usize) -> Result<()> {
    if got > limit {
        return Err(Error::OracleLimit { what, limit, got });
    }
    Ok(())
}

fn matrix(g: &ColoredGraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut m = vec![vec![false; n]; n];
    for (u, row) in m.iter_mut().enumerate() {
        for &v in g.neighbors(u) {
            row[v] = true;
        }
    }
    m
}

/// Is there a color-preserving isomorphism from `g` to `h`?
pub fn brute_iso(g: &ColoredGraph, h: &ColoredGraph) -> Result<bool> {
    limit("brute_iso", ISO_LIMIT, g.vertex_count())?;
    limit("brute_iso", ISO_LIMIT, h.vertex_count())?;
    let n = g.vertex_count();
    if n != h.vertex_count() {
        return Ok(false);
    }
    let (mg, mh) = (matrix(g), matrix(h));
    let signature = |m: &[Vec<bool>], colors: &[u32], v: usize| (colors[v], m[v].iter().filter(|&&e| e).count());
    let sig_g: Vec<_> = (0..n).map(|v| signature(&mg, g.colors(), v)).collect();
    let sig_h: Vec<_> = (0..n).map(|v| signature(&mh, h.colors(), v)).collect();
    let (mut a, mut b) = (sig_g.clone(), sig_h.clone());
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Ok(false);
    }

    fn extend(
        i: usize,
        image: &mut Vec<usize>,
        used: &mut [bool],
        mg: &[Vec<bool>],
        mh: &[Vec<bool>],
        sig_g: &[(u32, usize)],
        sig_h: &[(u32, usize)],
    ) -> bool {
        let n = used.len();
        if i == n {
            return true;
        }
        for j in 0..n {
            if used[j] || sig_g[i] != sig_h[j] {
                continue;
            }
            if (0..i).any(|k| mg[i][k] != mh[j][image[k]]) {
                continue;
            }
            used[j] = true;
            image.push(j);
            if extend(i + 1, image, used, mg, mh, sig_g, sig_h) {
                return true;
            }
            image.pop();
            used[j] = false;
        }
        false
    }
    Ok(extend(0, &mut Vec::with_capacity(n), &mut vec![false; n], &mg, &mh, &sig_g, &sig_h))
}

/// Least rotation by comparing all of them.
pub fn brute_min_rotation(word: &[u32]) -> Result<Vec<u32>> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = word.len();
    Ok((0..n)
        .map(|k| word[k..].iter().chain(&word[..k]).copied().collect::<Vec<u32>>())
        .min()
        .expect("non-empty"))
}

/// Every split, found by testing all vertex subsets. Each split appears once
/// per orientation.
pub fn brute_splits(g: &ColoredGraph) -> Result<Vec<Split>> {
    let n = g.vertex_count();
    limit("brute_splits", SPLITS_LIMIT, n)?;
    let m = matrix(g);
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < 2 || size + 2 > n {
            continue;
        }
        let inside = |v: usize| mask >> v & 1 == 1;
        let a: Vec<usize> = (0..n).filter(|&v| inside(v) && (0..n).any(|w| !inside(w) && m[v][w])).collect();
        let b: Vec<usize> = (0..n).filter(|&w| !inside(w) && (0..n).any(|v| inside(v) && m[v][w])).collect();
        if a.is_empty() || b.is_empty() || !a.iter().all(|&v| b.iter().all(|&w| m[v][w])) {
            continue;
        }
        out.push(Split {
            a_prime: (0..n).filter(|&v| inside(v) && !a.contains(&v)).collect(),
            b_prime: (0..n).filter(|&w| !inside(w) && !b.contains(&w)).collect(),
            a,
            b,
        });
    }
    Ok(out)
}

/// Searches for a chord diagram whose chord `v` realizes vertex `v`.
pub fn brute_find_rep(g: &ColoredGraph) -> Result<Option<CircleRep>> {
    let n = g.vertex_count();
    limit("brute_find_rep", FIND_REP_LIMIT, n)?;
    if n == 0 {
        return Ok(Some(CircleRep::from_word(Vec::new())?));
    }
    let mut search = RepSearch {
        adj: matrix(g),
        word: Vec::with_capacity(2 * n),
        opened: vec![usize::MAX; n],
        closed: vec![usize::MAX; n],
    };
    // rotate so vertex 0 opens at position 0
    search.open(0);
    if search.run() {
        let word = search.word.iter().map(|&v| v as u32).collect();
        return Ok(Some(CircleRep::from_word(word)?));
    }
    Ok(None)
}

struct RepSearch {
    adj: Vec<Vec<bool>>,
    word: Vec<usize>,
    opened: Vec<usize>,
    closed: Vec<usize>,
}

impl RepSearch {
    fn open(&mut self, v: usize) {
        self.opened[v] = self.word.len();
        self.word.push(v);
    }

    /// Closing `d` fixes its relation to every other chord: `e` crosses `d`
    /// iff exactly one endpoint of `e` lies strictly between `d`'s.
    fn can_close(&self, d: usize) -> bool {
        let (o, p) = (self.opened[d], self.word.len());
        let between = |x: usize| x != usize::MAX && o < x && x < p;
        (0..self.adj.len()).all(|e| {
            e == d || {
                let inside = between(self.opened[e]) as u8 + between(self.closed[e]) as u8;
                (inside == 1) == self.adj[d][e]
            }
        })
    }

    fn run(&mut self) -> bool {
        let n = self.adj.len();
        if self.word.len() == 2 * n {
            return true;
        }
        for v in 0..n {
            if self.opened[v] == usize::MAX {
                self.open(v);
                if self.run() {
                    return true;
                }
                self.word.pop();
                self.opened[v] = usize::MAX;
            } else if self.closed[v] == usize::MAX && self.can_close(v) {
                self.closed[v] = self.word.len();
                self.word.push(v);
                if self.run() {
                    return true;
                }
                self.word.pop();
                self.closed[v] = usize::MAX;
            }
        }
        false
    }
}
