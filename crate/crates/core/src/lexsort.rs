//! Bucket-based lexicographic sorting of variable-length integer sequences.
//!
//! This is the classic queue-of-buckets scheme: sequences are distributed by
//! their last position first, shorter sequences join the queue only once the
//! scan reaches their length, and each pass visits only the buckets that are
//! actually used at that position. Values are first compacted to a dense
//! alphabet, so the cost is linear in the total length plus the alphabet size
//! regardless of how large the raw values are.

/// Sorts `seqs` lexicographically (a proper prefix sorts first).
///
/// Returns `(order, ranks)`: `order` lists indices in non-decreasing order,
/// and `ranks[i]` is the number of distinct sequences strictly smaller than
/// `seqs[i]`, so equal sequences share a rank.
pub fn lex_sort_sequences<S: AsRef<[u32]>>(seqs: &[S]) -> (Vec<usize>, Vec<usize>) {
    let count = seqs.len();
    if count == 0 {
        return (Vec::new(), Vec::new());
    }
    let max_len = seqs.iter().map(|s| s.as_ref().len()).max().unwrap_or(0);
    let dense = compact_alphabet(seqs);
    let alphabet = dense.alphabet;

    // distinct values used at each position, ascending
    let per_position = used_values_by_position(&dense.values, &dense.offsets, max_len, alphabet);

    let mut by_length: Vec<Vec<usize>> = vec![Vec::new(); max_len + 1];
    for (i, s) in seqs.iter().enumerate() {
        by_length[s.as_ref().len()].push(i);
    }

    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); alphabet];
    let mut queue: Vec<usize> = Vec::with_capacity(count);
    let mut next: Vec<usize> = Vec::with_capacity(count);
    for pos in (0..max_len).rev() {
        next.clear();
        next.extend_from_slice(&by_length[pos + 1]);
        next.extend_from_slice(&queue);
        for &i in &next {
            let value = dense.values[dense.offsets[i] + pos];
            buckets[value as usize].push(i);
        }
        queue.clear();
        for &value in &per_position[pos] {
            queue.append(&mut buckets[value as usize]);
        }
    }
    let mut order = by_length[0].clone();
    order.extend_from_slice(&queue);

    let mut ranks = vec![0; count];
    let mut rank = 0;
    for w in 1..order.len() {
        if seqs[order[w]].as_ref() != seqs[order[w - 1]].as_ref() {
            rank += 1;
        }
        ranks[order[w]] = rank;
    }
    (order, ranks)
}

struct DenseSequences {
    values: Vec<u32>,
    offsets: Vec<usize>,
    alphabet: usize,
}

/// Maps every value to its index among the distinct values, keeping order.
fn compact_alphabet<S: AsRef<[u32]>>(seqs: &[S]) -> DenseSequences {
    let mut offsets = Vec::with_capacity(seqs.len() + 1);
    let mut flat = Vec::new();
    for s in seqs {
        offsets.push(flat.len());
        flat.extend_from_slice(s.as_ref());
    }
    offsets.push(flat.len());
    if flat.is_empty() {
        return DenseSequences { values: flat, offsets, alphabet: 0 };
    }

    let max = *flat.iter().max().unwrap() as usize;
    let rename: Box<dyn Fn(u32) -> u32> = if max <= 2 * flat.len() + 16 {
        // small range: a direct table
        let mut table = vec![u32::MAX; max + 1];
        for &v in &flat {
            table[v as usize] = 0;
        }
        let mut next = 0;
        for slot in table.iter_mut() {
            if *slot == 0 {
                *slot = next;
                next += 1;
            }
        }
        Box::new(move |v| table[v as usize])
    } else {
        let sorted = radix_sort_dedup(flat.clone());
        Box::new(move |v| sorted.binary_search(&v).unwrap() as u32)
    };
    let values: Vec<u32> = flat.iter().map(|&v| rename(v)).collect();
    let alphabet = values.iter().max().map_or(0, |&m| m as usize + 1);
    DenseSequences { values, offsets, alphabet }
}

/// LSD radix sort over bytes, then dedup.
fn radix_sort_dedup(mut xs: Vec<u32>) -> Vec<u32> {
    let mut buf = vec![0u32; xs.len()];
    for shift in [0u32, 8, 16, 24] {
        let mut counts = [0usize; 257];
        for &x in &xs {
            counts[((x >> shift) & 0xff) as usize + 1] += 1;
        }
        for b in 0..256 {
            counts[b + 1] += counts[b];
        }
        for &x in &xs {
            let b = ((x >> shift) & 0xff) as usize;
            buf[counts[b]] = x;
            counts[b] += 1;
        }
        std::mem::swap(&mut xs, &mut buf);
    }
    xs.dedup();
    xs
}

fn used_values_by_position(
    values: &[u32],
    offsets: &[usize],
    max_len: usize,
    alphabet: usize,
) -> Vec<Vec<u32>> {
    // (position, value) pairs, bucketed by value then stably by position
    let mut heads = vec![0usize; alphabet + 1];
    for &v in values {
        heads[v as usize + 1] += 1;
    }
    for a in 0..alphabet {
        heads[a + 1] += heads[a];
    }
    let mut by_value = vec![(0usize, 0u32); values.len()];
    for s in 0..offsets.len() - 1 {
        for (pos, &v) in values[offsets[s]..offsets[s + 1]].iter().enumerate() {
            by_value[heads[v as usize]] = (pos, v);
            heads[v as usize] += 1;
        }
    }
    let mut per_position: Vec<Vec<u32>> = vec![Vec::new(); max_len];
    for (pos, v) in by_value {
        let list = &mut per_position[pos];
        if list.last() != Some(&v) {
            list.push(v);
        }
    }
    per_position
}
