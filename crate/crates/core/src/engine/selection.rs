use crate::error::{PciaError, Result};
use crate::path::Path;

/// Pure elitism: the `m` lowest-cost paths of `current ++ offspring`, sorted
/// ascending. The sort is stable, so ties keep incumbents ahead of offspring
/// and earlier indices ahead of later ones.
pub fn select_next_generation(
    current: Vec<Path>,
    offspring: Vec<Path>,
    m: usize,
) -> Result<Vec<Path>> {
    let mut pool = current;
    pool.extend(offspring);
    if let Some(index) = pool.iter().position(|p| !p.is_evaluated()) {
        return Err(PciaError::Unevaluated { index });
    }
    if m > pool.len() {
        return Err(PciaError::InvalidConfig(format!(
            "cannot select {m} paths from a pool of {}",
            pool.len()
        )));
    }
    pool.sort_by(|a, b| a.cost().total_cmp(&b.cost()));
    pool.truncate(m);
    Ok(pool)
}
