use std::collections::HashMap;

use super::Filtration;
use crate::scalar::Scalar;

/// Persistence pairing of a filtration, as filtration indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Pairing {
    /// `(birth, death)`: the simplex creating a class and the one killing it.
    pub pairs: Vec<(usize, usize)>,
    /// Simplices creating classes that never die.
    pub unpaired: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ReductionOptions {
    /// Reduce top dimension first and zero the columns of simplices already
    /// known to be positive. Produces the same pairing.
    pub clearing: bool,
}

/// XOR of two sorted index sets.
fn add_column(target: &mut Vec<usize>, source: &[usize], scratch: &mut Vec<usize>) {
    scratch.clear();
    let (mut i, mut j) = (0, 0);
    while i < target.len() && j < source.len() {
        match target[i].cmp(&source[j]) {
            std::cmp::Ordering::Less => {
                scratch.push(target[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                scratch.push(source[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    scratch.extend_from_slice(&target[i..]);
    scratch.extend_from_slice(&source[j..]);
    std::mem::swap(target, scratch);
}

/// Standard left-to-right column reduction of the Z_2 boundary matrix.
pub fn reduce<T: Scalar>(filtration: &Filtration<T>) -> Pairing {
    reduce_with(filtration, ReductionOptions::default())
}

pub fn reduce_with<T: Scalar>(filtration: &Filtration<T>, options: ReductionOptions) -> Pairing {
    let mut columns = filtration.boundary_columns();
    let n = columns.len();
    let dims: Vec<usize> = filtration.simplices().iter().map(|s| s.simplex.dim()).collect();

    // Column order: plain left to right, or by descending dimension.
    let order: Vec<usize> = if options.clearing {
        let mut by_dim: Vec<usize> = (0..n).collect();
        by_dim.sort_by_key(|&j| (std::cmp::Reverse(dims[j]), j));
        by_dim
    } else {
        (0..n).collect()
    };

    let mut pivot_owner: HashMap<usize, usize> = HashMap::new();
    let mut cleared = vec![false; n];
    let mut scratch = Vec::new();
    for &j in &order {
        if cleared[j] {
            columns[j].clear();
            continue;
        }
        let mut col = std::mem::take(&mut columns[j]);
        while let Some(&low) = col.last() {
            match pivot_owner.get(&low) {
                Some(&k) => add_column(&mut col, &columns[k], &mut scratch),
                None => break,
            }
        }
        if let Some(&low) = col.last() {
            pivot_owner.insert(low, j);
            if options.clearing {
                cleared[low] = true;
            }
        }
        columns[j] = col;
    }

    let mut pairs: Vec<(usize, usize)> = pivot_owner.iter().map(|(&b, &d)| (b, d)).collect();
    pairs.sort_unstable();
    let unpaired = (0..n)
        .filter(|&j| columns[j].is_empty() && !pivot_owner.contains_key(&j))
        .collect();
    Pairing { pairs, unpaired }
}
