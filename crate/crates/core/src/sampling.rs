//! Statistically significant sample sizes and length-stratified sampling.
//!
//! Sample sizes come from Cochran's formula at maximum variance (p = 0.5)
//! with a finite-population correction. Per-project quotas use
//! largest-remainder apportionment, and within a project comments are drawn
//! without replacement from quintile strata over comment length.

use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seed;

/// Closed length interval `[lo, hi]`.
pub type Stratum = (usize, usize);

/// Audit record of one sampling run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SamplingPlan {
    pub confidence: f64,
    pub margin: f64,
    pub population: usize,
    pub sample_size: usize,
    pub per_project_quota: BTreeMap<String, usize>,
    pub strata: BTreeMap<String, Vec<Stratum>>,
    pub seed: u64,
}

/// z-score for the supported confidence levels.
fn z_score(confidence: f64) -> Result<f64> {
    for (level, z) in [(0.90, 1.645), (0.95, 1.960), (0.99, 2.576)] {
        if (confidence - level).abs() < 1e-9 {
            return Ok(z);
        }
    }
    Err(Error::UnsupportedConfidence(confidence))
}

/// Minimum sample size for a population at the given confidence and margin
/// of error: Cochran `n0 = z^2 * 0.25 / e^2`, corrected for finite
/// populations by `n = n0 / (1 + (n0 - 1) / N)` and rounded to nearest.
pub fn required_sample_size(population: usize, confidence: f64, margin: f64) -> Result<usize> {
    if population == 0 {
        return Err(Error::InvalidInput("population must be at least 1".into()));
    }
    if !(margin > 0.0 && margin < 1.0) {
        return Err(Error::InvalidMargin(margin));
    }
    let z = z_score(confidence)?;
    let n0 = z * z * 0.25 / (margin * margin);
    let n = n0 / (1.0 + (n0 - 1.0) / population as f64);
    Ok((n.round() as usize).min(population))
}

/// Split `n` across projects proportionally to their counts using
/// largest-remainder rounding; quotas sum to exactly `n`. Any project whose
/// exact share is at least one half ends up with at least one slot.
pub fn allocate_proportional(
    counts: &BTreeMap<String, usize>,
    n: usize,
) -> Result<BTreeMap<String, usize>> {
    let total: usize = counts.values().sum();
    if total == 0 {
        return Err(Error::EmptyAllocation);
    }
    if n > total {
        return Err(Error::QuotaExceedsPopulation {
            quota: n,
            population: total,
        });
    }

    // Integer largest-remainder: exact share of project i is n*c_i/total.
    let mut quotas: BTreeMap<String, usize> = BTreeMap::new();
    let mut remainders: Vec<(usize, &String)> = Vec::new();
    let mut assigned = 0usize;
    for (name, &count) in counts {
        let product = n * count;
        let base = product / total;
        quotas.insert(name.clone(), base);
        remainders.push((product % total, name));
        assigned += base;
    }
    remainders.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(b.1)));
    for (_, name) in remainders.iter().take(n - assigned) {
        *quotas.get_mut(*name).expect("known project") += 1;
    }

    // Guarantee a slot for every project whose exact share is >= 0.5,
    // taking it from the currently largest quota.
    let needy: Vec<String> = counts
        .iter()
        .filter(|(name, &c)| c > 0 && 2 * n * c >= total && quotas[*name] == 0)
        .map(|(name, _)| name.clone())
        .collect();
    for name in needy {
        let donor = quotas
            .iter()
            .filter(|(other, &q)| q > 1 && **other != name)
            .max_by(|a, b| a.1.cmp(b.1).then_with(|| b.0.cmp(a.0)))
            .map(|(k, _)| k.clone());
        if let Some(donor) = donor {
            *quotas.get_mut(&donor).expect("donor") -= 1;
            *quotas.get_mut(&name).expect("needy") += 1;
        }
    }

    Ok(quotas)
}

/// Nearest-rank percentile: smallest value such that at least `p` percent of
/// the sorted data is at or below it (`p = 0` yields the minimum).
fn nearest_rank(sorted: &[usize], p: usize) -> usize {
    debug_assert!(!sorted.is_empty());
    if p == 0 {
        return sorted[0];
    }
    let n = sorted.len();
    let rank = (p * n).div_ceil(100).max(1);
    sorted[rank - 1]
}

/// Quintile strata over comment lengths: boundaries at the
/// 0/20/40/60/80/100th percentiles, with degenerate intervals collapsed.
/// Returns at most five disjoint intervals covering `[min, max]`.
pub fn quintile_strata(lengths: &[usize]) -> Vec<Stratum> {
    assert!(!lengths.is_empty(), "lengths must be non-empty");
    let mut sorted = lengths.to_vec();
    sorted.sort_unstable();

    let bounds: Vec<usize> = [0usize, 20, 40, 60, 80, 100]
        .iter()
        .map(|&p| nearest_rank(&sorted, p))
        .collect();

    let mut strata = vec![(bounds[0], bounds[1])];
    for hi in &bounds[2..] {
        let lo = strata.last().expect("non-empty").1 + 1;
        if *hi >= lo {
            strata.push((lo, *hi));
        }
    }
    strata
}

/// Draw `quota` items without replacement, split equally across strata
/// (remainder to the most populous strata first). When a stratum holds fewer
/// items than its share, the deficit spills to the next larger stratum.
/// Output order follows the input; the draw is deterministic in `seed`.
pub fn stratified_sample<T: Clone>(
    items: &[T],
    length_of: impl Fn(&T) -> usize,
    quota: usize,
    strata: &[Stratum],
    seed: u64,
) -> Result<Vec<T>> {
    if quota > items.len() {
        return Err(Error::QuotaExceedsPopulation {
            quota,
            population: items.len(),
        });
    }
    if quota == 0 {
        return Ok(Vec::new());
    }
    if strata.is_empty() {
        return Err(Error::InvalidInput("no strata".into()));
    }

    // Bucket item indices per stratum, preserving input order.
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); strata.len()];
    for (idx, item) in items.iter().enumerate() {
        let len = length_of(item);
        let slot = strata.iter().position(|&(lo, hi)| len >= lo && len <= hi);
        match slot {
            Some(s) => buckets[s].push(idx),
            None => {
                return Err(Error::InvalidInput(format!(
                    "item length {len} outside all strata"
                )))
            }
        }
    }

    // Equal split with the remainder going to the largest strata.
    let s = strata.len();
    let mut alloc = vec![quota / s; s];
    let mut by_size: Vec<usize> = (0..s).collect();
    by_size.sort_by(|&a, &b| buckets[b].len().cmp(&buckets[a].len()).then(a.cmp(&b)));
    for &i in by_size.iter().take(quota % s) {
        alloc[i] += 1;
    }

    // Spill deficits from small strata into progressively larger ones.
    let mut by_size_asc = by_size.clone();
    by_size_asc.reverse();
    let mut deficit = 0usize;
    for &i in &by_size_asc {
        alloc[i] += deficit;
        let take = alloc[i].min(buckets[i].len());
        deficit = alloc[i] - take;
        alloc[i] = take;
    }
    // Spare capacity can be stranded in an already-visited stratum; place
    // whatever is left into the largest strata with room.
    for &i in &by_size {
        if deficit == 0 {
            break;
        }
        let room = buckets[i].len() - alloc[i];
        let extra = room.min(deficit);
        alloc[i] += extra;
        deficit -= extra;
    }
    debug_assert_eq!(deficit, 0, "quota <= population guarantees placement");

    // Draw without replacement, one derived generator per stratum.
    let mut chosen: Vec<usize> = Vec::with_capacity(quota);
    for (i, bucket) in buckets.iter().enumerate() {
        let mut pool = bucket.clone();
        let mut rng = seed::rng(seed::derive_seed(seed, "stratum", i as u64));
        // Partial Fisher-Yates: the first alloc[i] slots become the draw.
        for j in 0..alloc[i] {
            let pick = rng.gen_range(j..pool.len());
            pool.swap(j, pick);
        }
        chosen.extend_from_slice(&pool[..alloc[i]]);
    }
    chosen.sort_unstable();
    Ok(chosen.into_iter().map(|i| items[i].clone()).collect())
}
