//! Lexicographically least rotation of a circular word.

use crate::error::{Error, Result};

/// Returns the smallest start index of the least rotation, and that rotation.
///
/// Booth's scan over the doubled word maintains a failure function relative
/// to the current candidate start, giving linear time. Booth's candidate is
/// reduced modulo the rotational period of the word so the reported start is
/// the least index achieving the minimum.
pub fn min_rotation(word: &[u32]) -> Result<(usize, Vec<u32>)> {
    let n = word.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let at = |i: usize| word[i % n];
    let mut failure: Vec<isize> = vec![-1; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = failure[j - k - 1];
        while i != -1 && sj != at(k + i as usize + 1) {
            if sj < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = failure[i as usize];
        }
        if i == -1 && sj != at(k) {
            if sj < at(k) {
                k = j;
            }
            failure[j - k] = -1;
        } else {
            failure[j - k] = i + 1;
        }
    }
    let k = k % n;
    let rotation: Vec<u32> = (0..n).map(|i| word[(k + i) % n]).collect();
    let period = rotational_period(&rotation);
    Ok((k % period, rotation))
}

/// Smallest `p > 0` with `rotate(word, p) == word`.
fn rotational_period(word: &[u32]) -> usize {
    let n = word.len();
    let mut prefix = vec![0usize; n];
    for i in 1..n {
        let mut j = prefix[i - 1];
        while j > 0 && word[i] != word[j] {
            j = prefix[j - 1];
        }
        if word[i] == word[j] {
            j += 1;
        }
        prefix[i] = j;
    }
    let p = n - prefix[n - 1];
    if n.is_multiple_of(p) {
        p
    } else {
        n
    }
}
