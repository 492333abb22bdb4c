//! The sequence tools underneath the canonization: bucket lexicographic
//! sorting, least rotations and lambda words.

use circle_canon::chord::{canon_rep, lambda_encoding};
use circle_canon::{lex_sort_sequences, min_rotation, CircleRep};

fn main() -> circle_canon::Result<()> {
    let seqs = vec![vec![1, 2], vec![1], vec![0, 5], vec![1, 2]];
    let (order, ranks) = lex_sort_sequences(&seqs);
    println!("order {order:?}, ranks {ranks:?}");

    let (start, least) = min_rotation(&[2, 1, 3, 1])?;
    println!("least rotation of [2, 1, 3, 1] starts at {start}: {least:?}");

    let (triangle, _) = CircleRep::parse(&[0, 1, 2, 0, 1, 2])?;
    let colors = [0, 0, 1];
    println!("lambda word: {:?}", lambda_encoding(&triangle, &colors)?.values());
    println!("canonical:   {}", canon_rep(&triangle, &colors)?);
    Ok(())
}
