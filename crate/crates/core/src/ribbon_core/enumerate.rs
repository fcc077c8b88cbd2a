//! Exhaustive enumeration of small embedded graphs.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::bounds::{check, Bound};
use super::canonical::{canonical_embedded, form_indexed, CanonicalForm};
use super::surface::Indexed;
use crate::ribbon_core::{ArrowPresentation, EdgeLabel};
use crate::Result;

/// Sequences of length `2n` using each of `0..n` twice, with first
/// occurrences in increasing order.
fn label_sequences(n: usize) -> Vec<Vec<usize>> {
    fn go(seq: &mut Vec<usize>, used: &mut [u8], opened: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if seq.len() == 2 * n {
            out.push(seq.clone());
            return;
        }
        for l in 0..opened {
            if used[l] == 1 {
                used[l] = 2;
                seq.push(l);
                go(seq, used, opened, n, out);
                seq.pop();
                used[l] = 1;
            }
        }
        if opened < n {
            used[opened] = 1;
            seq.push(opened);
            go(seq, used, opened + 1, n, out);
            seq.pop();
            used[opened] = 0;
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![0; n], 0, n, &mut out);
    out
}

/// Every embedded-equivalence class of graphs with exactly `n` edges and no
/// isolated vertices, as canonical representatives sorted by canonical code.
///
/// Candidates are all arrangements of `2n` arrows into consecutive circle
/// blocks with every sign pattern whose first arrow per label is forward;
/// duplicates are removed by canonical code.
pub fn enumerate(n: usize) -> Result<Vec<ArrowPresentation>> {
    check(Bound::EnumerateEdges, "edge count", n)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let labels: Vec<EdgeLabel> = (0..n)
        .map(|i| EdgeLabel::new(format!("e{}", i + 1)).expect("valid label"))
        .collect();
    let found: Vec<BTreeMap<CanonicalForm, Indexed>> = label_sequences(n)
        .par_iter()
        .map(|seq| {
            let mut local = BTreeMap::new();
            let len = seq.len();
            let first: Vec<bool> = (0..len).map(|i| !seq[..i].contains(&seq[i])).collect();
            for cuts in 0..1usize << (len - 1) {
                let mut blocks: Vec<Vec<usize>> = vec![Vec::new()];
                for (i, &l) in seq.iter().enumerate() {
                    blocks.last_mut().expect("block").push(l);
                    if i + 1 < len && cuts >> i & 1 == 1 {
                        blocks.push(Vec::new());
                    }
                }
                for signs in 0..1usize << n {
                    let circles: Vec<Vec<(usize, bool)>> = {
                        let mut pos = 0;
                        blocks
                            .iter()
                            .map(|b| {
                                b.iter()
                                    .map(|&l| {
                                        let fwd = first[pos] || signs >> l & 1 == 0;
                                        pos += 1;
                                        (l, fwd)
                                    })
                                    .collect()
                            })
                            .collect()
                    };
                    let ind = Indexed {
                        circles,
                        labels: labels.clone(),
                    };
                    local.entry(form_indexed(&ind)).or_insert(ind);
                }
            }
            local
        })
        .collect();
    let mut all: BTreeMap<CanonicalForm, Indexed> = BTreeMap::new();
    for part in found {
        for (k, v) in part {
            all.entry(k).or_insert(v);
        }
    }
    Ok(all.values().map(|ind| canonical_embedded(&ind.to_ap())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequence_counts_are_double_factorials() {
        assert_eq!(label_sequences(1).len(), 1);
        assert_eq!(label_sequences(2).len(), 3);
        assert_eq!(label_sequences(3).len(), 15);
    }

    #[test]
    fn one_edge_graphs() {
        let graphs = enumerate(1).unwrap();
        assert_eq!(graphs.len(), 3);
    }

    #[test]
    fn zero_edges_is_empty() {
        assert!(enumerate(0).unwrap().is_empty());
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(enumerate(99), Err(crate::Error::BoundExceeded { .. })));
    }
}
