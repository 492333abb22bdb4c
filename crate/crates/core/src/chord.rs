//! Chord diagrams (circle representations) and their rotation-invariant
//! encoding.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Encoding};
use crate::rotation::min_rotation;

/// Clockwise order of chord endpoints; chord `i` is labeled `i` and occurs
/// exactly twice, with labels dense in `0..chord_count`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CircleRep {
    word: Vec<u32>,
}

impl CircleRep {
    /// Parses arbitrary labels, renumbering them `0..n` by first occurrence.
    ///
    /// Also returns the renumbering: `labels[new] == old`.
    pub fn parse(tokens: &[u64]) -> Result<(CircleRep, Vec<u64>)> {
        if tokens.len() % 2 == 1 {
            return Err(Error::OddWord(tokens.len()));
        }
        let mut renumber = std::collections::HashMap::new();
        let mut labels = Vec::new();
        let mut counts: Vec<usize> = Vec::new();
        let mut word = Vec::with_capacity(tokens.len());
        for &t in tokens {
            let id = *renumber.entry(t).or_insert_with(|| {
                labels.push(t);
                counts.push(0);
                labels.len() - 1
            });
            counts[id] += 1;
            word.push(id as u32);
        }
        if let Some(bad) = counts.iter().position(|&c| c != 2) {
            return Err(Error::LabelCount { label: labels[bad], count: counts[bad] });
        }
        Ok((CircleRep { word }, labels))
    }

    /// Wraps a word whose labels are already `0..n`, each exactly twice.
    pub fn from_word(word: Vec<u32>) -> Result<CircleRep> {
        if word.len() % 2 == 1 {
            return Err(Error::OddWord(word.len()));
        }
        let n = word.len() / 2;
        let mut counts = vec![0usize; n];
        for &l in &word {
            match counts.get_mut(l as usize) {
                Some(c) => *c += 1,
                None => return Err(Error::LabelCount { label: l as u64, count: 1 }),
            }
        }
        if let Some(bad) = counts.iter().position(|&c| c != 2) {
            return Err(Error::LabelCount { label: bad as u64, count: counts[bad] });
        }
        Ok(CircleRep { word })
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn chord_count(&self) -> usize {
        self.word.len() / 2
    }

    /// `(first, second)` endpoint positions of every chord.
    pub fn endpoints(&self) -> Vec<(usize, usize)> {
        let mut out = vec![(usize::MAX, usize::MAX); self.chord_count()];
        for (p, &l) in self.word.iter().enumerate() {
            let e = &mut out[l as usize];
            if e.0 == usize::MAX {
                e.0 = p;
            } else {
                e.1 = p;
            }
        }
        out
    }

    /// For every position, the position of the other endpoint of its chord.
    pub fn partners(&self) -> Vec<usize> {
        let mut partner = vec![0; self.word.len()];
        for (a, b) in self.endpoints() {
            partner[a] = b;
            partner[b] = a;
        }
        partner
    }

    /// The word read counterclockwise.
    pub fn reversed(&self) -> CircleRep {
        let mut word = self.word.clone();
        word.reverse();
        CircleRep { word }
    }

    /// The word started at position `k`.
    pub fn rotated(&self, k: usize) -> CircleRep {
        let mut word = self.word.clone();
        if !word.is_empty() {
            let len = word.len();
            word.rotate_left(k % len);
        }
        CircleRep { word }
    }

    /// Renames chord `c` to `perm[c]`.
    pub fn relabeled(&self, perm: &[u32]) -> CircleRep {
        CircleRep { word: self.word.iter().map(|&l| perm[l as usize]).collect() }
    }

    /// Keeps only the chords in `chords`; chord `chords[i]` becomes `i`.
    pub fn restricted(&self, chords: &[usize]) -> CircleRep {
        let mut local = vec![u32::MAX; self.chord_count()];
        for (i, &c) in chords.iter().enumerate() {
            local[c] = i as u32;
        }
        let word = self
            .word
            .iter()
            .filter_map(|&l| (local[l as usize] != u32::MAX).then_some(local[l as usize]))
            .collect();
        CircleRep { word }
    }

    /// Normalizes labels to first-occurrence order.
    pub fn normalized(&self) -> CircleRep {
        let mut map = vec![u32::MAX; self.chord_count()];
        let mut next = 0;
        let word = self
            .word
            .iter()
            .map(|&l| {
                if map[l as usize] == u32::MAX {
                    map[l as usize] = next;
                    next += 1;
                }
                map[l as usize]
            })
            .collect();
        CircleRep { word }
    }

    /// Do chords `u` and `v` alternate around the circle?
    pub fn crosses(ends: &[(usize, usize)], u: usize, v: usize) -> bool {
        let (a, b) = ends[u];
        let inside = |p: usize| a < p && p < b;
        inside(ends[v].0) != inside(ends[v].1)
    }
}

/// The graph whose vertices are the chords, with `uv` an edge iff the
/// endpoints of `u` and `v` alternate. All colors are 0.
pub fn interleaving_graph(rep: &CircleRep) -> ColoredGraph {
    let n = rep.chord_count();
    let ends = rep.endpoints();
    let mut adj = vec![Vec::new(); n];
    let mut open_count = vec![0u8; n];
    for u in 0..n {
        let (a, b) = ends[u];
        let inner = &rep.word[a + 1..b];
        for &l in inner {
            open_count[l as usize] += 1;
        }
        for &l in inner {
            let v = l as usize;
            if open_count[v] == 1 && u < v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for &l in inner {
            open_count[l as usize] = 0;
        }
    }
    ColoredGraph::from_adjacency(adj, vec![0; n])
}

/// Circular word of `(gap, shifted color)` pairs, flattened to length `4n`.
///
/// Gaps lie in `0..=2n-2` and colors are shifted into `2n-1..=3n-2`, so the
/// two kinds of entries never compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaWord {
    values: Vec<u32>,
}

impl LambdaWord {
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn chord_count(&self) -> usize {
        self.values.len() / 4
    }

    /// Number of endpoints strictly between endpoint `i` and its partner,
    /// going clockwise.
    pub fn gap(&self, i: usize) -> u32 {
        self.values[2 * i]
    }

    pub fn shifted_color(&self, i: usize) -> u32 {
        self.values[2 * i + 1]
    }

    /// Rebuilds the chord diagram and chord colors from a (rotation of a)
    /// lambda word. Chords are labeled by first occurrence.
    pub fn decode(values: &[u32]) -> Result<(CircleRep, Vec<u32>)> {
        if values.is_empty() || !values.len().is_multiple_of(4) {
            return Err(Error::MalformedEncoding(format!(
                "lambda word length {} is not a positive multiple of 4",
                values.len()
            )));
        }
        let n = values.len() / 4;
        let positions = 2 * n;
        let shift = 2 * n as u32 - 1;
        let mut label = vec![u32::MAX; positions];
        let mut colors = Vec::with_capacity(n);
        for i in 0..positions {
            let g = values[2 * i];
            let c = values[2 * i + 1];
            if g as usize > positions - 2 {
                return Err(Error::MalformedEncoding(format!("gap {g} out of range")));
            }
            if c < shift || c > shift + n as u32 - 1 {
                return Err(Error::MalformedEncoding(format!("shifted color {c} out of range")));
            }
            let j = (i + g as usize + 1) % positions;
            let back = values[2 * j] as usize;
            if (j + back + 1) % positions != i || values[2 * j + 1] != c {
                return Err(Error::MalformedEncoding(format!(
                    "endpoints {i} and {j} disagree on their chord"
                )));
            }
            if label[i] == u32::MAX {
                let id = colors.len() as u32;
                label[i] = id;
                label[j] = id;
                colors.push(c - shift);
            }
        }
        Ok((CircleRep { word: label }, colors))
    }
}

/// Lambda word of `rep` with chord colors `colors` (each below the chord
/// count).
pub fn lambda_encoding(rep: &CircleRep, colors: &[u32]) -> Result<LambdaWord> {
    let n = rep.chord_count();
    if colors.len() != n {
        return Err(Error::ColorCount { expected: n, got: colors.len() });
    }
    if let Some(&c) = colors.iter().find(|&&c| c as usize >= n) {
        return Err(Error::ColorOutOfRange { color: c, bound: n });
    }
    let positions = 2 * n;
    let partner = rep.partners();
    let shift = positions as u32 - 1;
    let mut values = Vec::with_capacity(2 * positions);
    for (i, &l) in rep.word.iter().enumerate() {
        let gap = (partner[i] + positions - i - 1) % positions;
        values.push(gap as u32);
        values.push(colors[l as usize] + shift);
    }
    Ok(LambdaWord { values })
}

/// Canonical form of a colored chord diagram: the least rotation of its
/// lambda word. Equal outputs exactly for diagrams equal up to rotation and
/// color-preserving relabeling.
pub fn canon_rep(rep: &CircleRep, colors: &[u32]) -> Result<Encoding> {
    let lambda = lambda_encoding(rep, colors)?;
    let (_, least) = min_rotation(lambda.values())?;
    Ok(Encoding(least))
}

/// A uniformly random chord diagram on `n` chords, reproducible per seed.
pub fn random_rep(n: usize, seed: u64) -> Result<CircleRep> {
    if n == 0 {
        return Err(Error::NoChords);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_rep_with(n, &mut rng))
}

pub(crate) fn random_rep_with<R: rand::Rng>(n: usize, rng: &mut R) -> CircleRep {
    let mut positions: Vec<usize> = (0..2 * n).collect();
    positions.shuffle(rng);
    let mut word = vec![0u32; 2 * n];
    for (chord, pair) in positions.chunks(2).enumerate() {
        word[pair[0]] = chord as u32;
        word[pair[1]] = chord as u32;
    }
    CircleRep { word }.normalized()
}
