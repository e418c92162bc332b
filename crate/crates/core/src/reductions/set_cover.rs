use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::ReductionError;

/// Exact cover search gives up beyond this many candidate collections.
pub const COVER_SEARCH_LIMIT: u64 = 1_000_000;

/// Universe `{0, .., universe - 1}`, a family of subsets, and a budget.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetCoverInstance {
    universe: usize,
    sets: Vec<Vec<usize>>,
    budget: usize,
}

impl SetCoverInstance {
    /// Every element must lie in some set: an uncovered element would leave its
    /// gadget vertex disconnected.
    pub fn new(universe: usize, sets: Vec<Vec<usize>>, budget: usize) -> Result<SetCoverInstance, ReductionError> {
        if universe == 0 {
            return Err(ReductionError::InvalidSetCover("empty universe".into()));
        }
        if sets.is_empty() {
            return Err(ReductionError::InvalidSetCover("no sets".into()));
        }
        if budget == 0 {
            return Err(ReductionError::InvalidSetCover("budget must be positive".into()));
        }
        let mut covered = vec![false; universe];
        let mut clean = Vec::with_capacity(sets.len());
        for (j, mut set) in sets.into_iter().enumerate() {
            set.sort_unstable();
            set.dedup();
            if let Some(&e) = set.iter().find(|&&e| e >= universe) {
                return Err(ReductionError::InvalidSetCover(format!(
                    "set {j} contains element {e} outside universe of size {universe}"
                )));
            }
            for &e in &set {
                covered[e] = true;
            }
            clean.push(set);
        }
        if let Some(e) = covered.iter().position(|&c| !c) {
            return Err(ReductionError::InvalidSetCover(format!("element {e} is in no set")));
        }
        Ok(SetCoverInstance { universe, sets: clean, budget })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn with_budget(&self, budget: usize) -> Result<SetCoverInstance, ReductionError> {
        SetCoverInstance::new(self.universe, self.sets.clone(), budget)
    }

    /// Number of collections of at most `budget` sets.
    pub fn search_space(&self) -> u64 {
        let m = self.sets.len() as u64;
        let mut total = 0u64;
        let mut binom = 1u64;
        for i in 0..=self.budget.min(self.sets.len()) as u64 {
            total = total.saturating_add(binom);
            binom = binom.saturating_mul(m - i) / (i + 1);
        }
        total
    }

    /// Whether `chosen` (set indices) covers the universe.
    pub fn is_cover(&self, chosen: &[usize]) -> bool {
        let mut covered = vec![false; self.universe];
        for &j in chosen {
            for &e in &self.sets[j] {
                covered[e] = true;
            }
        }
        covered.into_iter().all(|c| c)
    }

    /// Smallest cover of size at most the budget (lexicographically first among
    /// those), `Ok(None)` if there is none, or `Err(space)` when the search space
    /// exceeds [`COVER_SEARCH_LIMIT`].
    pub fn find_cover(&self) -> Result<Option<Vec<usize>>, u64> {
        let space = self.search_space();
        if space > COVER_SEARCH_LIMIT {
            return Err(space);
        }
        let words = self.universe.div_ceil(64);
        let masks: Vec<Vec<u64>> = self
            .sets
            .iter()
            .map(|s| {
                let mut w = vec![0u64; words];
                for &e in s {
                    w[e / 64] |= 1 << (e % 64);
                }
                w
            })
            .collect();
        let mut full = vec![u64::MAX; words];
        if self.universe % 64 != 0 {
            full[words - 1] = (1u64 << (self.universe % 64)) - 1;
        }
        for size in 1..=self.budget.min(self.sets.len()) {
            let mut chosen = Vec::with_capacity(size);
            if search(&masks, &full, size, 0, &mut chosen, &mut vec![0u64; words]) {
                return Ok(Some(chosen));
            }
        }
        Ok(None)
    }
}

fn search(masks: &[Vec<u64>], full: &[u64], size: usize, start: usize, chosen: &mut Vec<usize>, acc: &mut Vec<u64>) -> bool {
    if chosen.len() == size {
        return acc == full;
    }
    for j in start..masks.len() {
        if masks.len() - j < size - chosen.len() {
            break;
        }
        let saved = acc.clone();
        for (w, m) in acc.iter_mut().zip(&masks[j]) {
            *w |= m;
        }
        chosen.push(j);
        if search(masks, full, size, j + 1, chosen, acc) {
            return true;
        }
        chosen.pop();
        *acc = saved;
    }
    false
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k {
        heap(k - 1, p, out);
        if k % 2 == 0 {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
}

fn canonical(family: &[u32], perms: &[Vec<usize>]) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    for p in perms {
        let mut image: Vec<u32> = family
            .iter()
            .map(|&mask| (0..p.len()).filter(|&e| mask >> e & 1 == 1).fold(0u32, |acc, e| acc | 1 << p[e]))
            .collect();
        image.sort_unstable();
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image);
        }
    }
    best.unwrap_or_default()
}

fn families(n: usize, m: usize, start: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if current.len() == m {
        out.push(current.clone());
        return;
    }
    for mask in start..(1u32 << n) {
        current.push(mask);
        families(n, m, mask + 1, current, out);
        current.pop();
    }
}

/// Small set-cover instances: universes of size `1..=max_universe`, families of
/// `1..=max_sets` distinct non-empty sets covering the universe (one per class
/// under relabeling of elements), budgets `1..=max_budget`. Ordered by universe
/// size, number of sets, family and budget, and truncated to `limit` entries.
pub fn set_cover_corpus(max_universe: usize, max_sets: usize, max_budget: usize, limit: usize) -> Vec<SetCoverInstance> {
    assert!(max_universe <= 16, "corpus universes are encoded as 32-bit masks");
    let mut out = Vec::new();
    for n in 1..=max_universe {
        let perms = permutations(n);
        let full = (1u32 << n) - 1;
        for m in 1..=max_sets {
            let mut all = Vec::new();
            families(n, m, 1, &mut Vec::new(), &mut all);
            let classes: BTreeSet<Vec<u32>> = all
                .into_iter()
                .filter(|f| f.iter().fold(0, |acc, s| acc | s) == full)
                .map(|f| canonical(&f, &perms))
                .collect();
            for family in classes {
                let sets: Vec<Vec<usize>> =
                    family.iter().map(|&mask| (0..n).filter(|&e| mask >> e & 1 == 1).collect()).collect();
                for k in 1..=max_budget {
                    if out.len() == limit {
                        return out;
                    }
                    out.push(SetCoverInstance::new(n, sets.clone(), k).expect("corpus families cover the universe"));
                }
            }
        }
    }
    out
}
