//! Shared oracles for the integration suites, kept independent of the
//! generation paths they check.

use std::collections::HashSet;
use std::sync::Mutex;

use treebound_core::enumerate::{canonical_code, prufer_decode, CanonicalCode};
use treebound_core::Tree;

/// Counts non-isomorphic trees of order n by decoding every Prüfer sequence
/// and deduplicating canonical codes. Exponential, usable to n = 9.
pub fn prufer_dedup_count(n: usize) -> usize {
    if n <= 2 {
        return 1;
    }
    let classes: Mutex<HashSet<CanonicalCode>> = Mutex::new(HashSet::new());
    std::thread::scope(|scope| {
        for first in 0..n {
            let classes = &classes;
            scope.spawn(move || {
                let mut local: HashSet<CanonicalCode> = HashSet::new();
                let mut seq = vec![0usize; n - 2];
                seq[0] = first;
                loop {
                    let t = Tree::new(n, prufer_decode(n, &seq)).expect("decode yields a tree");
                    local.insert(canonical_code(&t));
                    // Odometer over positions 1.., keeping the first digit.
                    let mut pos = seq.len() - 1;
                    loop {
                        if pos == 0 {
                            classes.lock().unwrap().extend(local);
                            return;
                        }
                        seq[pos] += 1;
                        if seq[pos] < n {
                            break;
                        }
                        seq[pos] = 0;
                        pos -= 1;
                    }
                }
            });
        }
    });
    let set = classes.into_inner().unwrap();
    set.len()
}
