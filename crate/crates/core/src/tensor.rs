//! Littlewood–Richardson coefficients and the stable symplectic tensor rule.
//!
//! - [`TensorRules::lr_coefficient`]: `c^lambda_{mu nu}` by enumerating LR
//!   skew tableaux (lattice-word condition), memoized.
//! - [`TensorRules::nl_coefficient`]: the Newell–Littlewood number
//!   `N^lambda_{mu nu} = sum_{a,b,c} c^mu_{a b} c^nu_{a c} c^lambda_{b c}`,
//!   the multiplicity of `S_<lambda>` in `S_<mu> (x) S_<nu>` in the stable
//!   range.
//! - [`sp_tensor_columns`]: the closed decomposition of a product of two
//!   fundamental (one-column) representations.
//!
//! Both coefficient kinds are memoized; the memo table can be persisted via
//! [`crate::cache`]. Computation is correct with a cold or absent cache.

use crate::cache::CoefficientCache;
use crate::partition::{enumerate_partitions, Partition};
use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::RwLock;

type Key = (Partition, Partition, Partition);

/// Memoized Littlewood–Richardson / Newell–Littlewood computations.
pub struct TensorRules {
    lr: RwLock<HashMap<Key, u64>>,
    nl: RwLock<HashMap<Key, u64>>,
    cache_dir: Option<PathBuf>,
}

impl Default for TensorRules {
    fn default() -> Self {
        Self::new()
    }
}

impl TensorRules {
    pub fn new() -> Self {
        TensorRules {
            lr: RwLock::new(HashMap::new()),
            nl: RwLock::new(HashMap::new()),
            cache_dir: None,
        }
    }

    /// Attach a cache directory and preload any persisted coefficients.
    /// A missing or unreadable cache is treated as empty.
    pub fn with_cache_dir(dir: &Path) -> Self {
        let rules = Self::new();
        let loaded = CoefficientCache::load(dir);
        *rules.lr.write().unwrap() = loaded.lr;
        *rules.nl.write().unwrap() = loaded.nl;
        TensorRules {
            cache_dir: Some(dir.to_path_buf()),
            ..rules
        }
    }

    /// Persist the memo tables, if a cache directory is attached.
    pub fn save_cache(&self) -> std::io::Result<()> {
        if let Some(dir) = &self.cache_dir {
            let cache = CoefficientCache {
                lr: self.lr.read().unwrap().clone(),
                nl: self.nl.read().unwrap().clone(),
            };
            cache.save(dir)?;
        }
        Ok(())
    }

    /// The Littlewood–Richardson coefficient `c^lambda_{mu nu}`.
    /// Zero whenever `|lambda| != |mu| + |nu|` or `mu` is not contained in
    /// `lambda`.
    pub fn lr_coefficient(&self, lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
        if lam.size() != mu.size() + nu.size() || !mu.contained_in(lam) {
            return 0;
        }
        if nu.is_empty() {
            return 1; // mu == lam here, sizes force it
        }
        let key = (lam.clone(), mu.clone(), nu.clone());
        if let Some(&v) = self.lr.read().unwrap().get(&key) {
            return v;
        }
        let v = lr_count(lam, mu, nu);
        self.lr.write().unwrap().insert(key, v);
        v
    }

    /// The Newell–Littlewood number `N^lambda_{mu nu}`: the multiplicity of
    /// `S_<lambda>` in `S_<mu> (x) S_<nu>` for genus at least
    /// `|mu| + |nu|`. Zero if `|lambda| > |mu| + |nu|` or the sizes have
    /// different parity.
    pub fn nl_coefficient(&self, lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
        let (sl, sm, sn) = (lam.size(), mu.size(), nu.size());
        if sl > sm + sn || (sm + sn - sl) % 2 != 0 {
            return 0;
        }
        let key = (lam.clone(), mu.clone(), nu.clone());
        if let Some(&v) = self.nl.read().unwrap().get(&key) {
            return v;
        }
        let contraction = (sm + sn - sl) / 2;
        let mut total: u64 = 0;
        for alpha in enumerate_partitions(contraction) {
            for beta in enumerate_partitions(sm - contraction) {
                let c_mu = self.lr_coefficient(mu, &alpha, &beta);
                if c_mu == 0 {
                    continue;
                }
                for gamma in enumerate_partitions(sn - contraction) {
                    let c_nu = self.lr_coefficient(nu, &alpha, &gamma);
                    if c_nu == 0 {
                        continue;
                    }
                    let c_lam = self.lr_coefficient(lam, &beta, &gamma);
                    if c_lam != 0 {
                        total += c_mu * c_nu * c_lam;
                    }
                }
            }
        }
        self.nl.write().unwrap().insert(key, total);
        total
    }

    /// All `lambda` with possibly nonzero `N^lambda_{mu nu}`, with their
    /// multiplicities.
    pub fn nl_expand(&self, mu: &Partition, nu: &Partition) -> Vec<(Partition, u64)> {
        // column x column products have a closed form; use it directly
        if mu.is_column() && nu.is_column() {
            return sp_tensor_columns(mu.size(), nu.size())
                .into_iter()
                .map(|p| (p, 1))
                .collect();
        }
        let top = mu.size() + nu.size();
        let mut out = Vec::new();
        let mut s = top;
        loop {
            for lam in enumerate_partitions(s) {
                let c = self.nl_coefficient(&lam, mu, nu);
                if c > 0 {
                    out.push((lam, c));
                }
            }
            if s < 2 {
                break;
            }
            s -= 2;
        }
        out
    }
}

/// The stable decomposition
/// `S_<1^i> (x) S_<1^j> = (+)_{a=0..min(i,j)} (+)_{b=0..a} S_<2^{a-b} 1^{i+j-2a}>`,
/// each summand with multiplicity one.
pub fn sp_tensor_columns(i: u32, j: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for a in 0..=i.min(j) {
        for b in 0..=a {
            out.push(Partition::two_column(a - b, i + j - 2 * a));
        }
    }
    out.sort();
    out
}

/// Count LR skew tableaux of shape `lam/mu` with content `nu`: semistandard
/// fillings whose reverse reading word (right to left along rows, top to
/// bottom) is a lattice word. Cells are filled in reverse reading order so
/// the lattice condition prunes as we go.
fn lr_count(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let rows = lam.num_parts();
    let lamv = lam.parts();
    let mut muv = vec![0u32; rows];
    muv[..mu.num_parts()].copy_from_slice(mu.parts());

    // cells in reverse reading order: (row, col), rows top to bottom,
    // columns right to left
    let mut cells = Vec::new();
    for r in 0..rows {
        for c in (muv[r]..lamv[r]).rev() {
            cells.push((r, c));
        }
    }

    let nvals = nu.num_parts();
    let mut grid: Vec<Vec<Option<usize>>> =
        (0..rows).map(|r| vec![None; lamv[r] as usize]).collect();
    let mut remaining: Vec<u32> = nu.parts().to_vec();
    let mut counts = vec![0u32; nvals];
    let mut total = 0u64;

    rec(
        0, &cells, &lamv, &muv, nvals, &mut grid, &mut remaining, &mut counts, &mut total,
    );
    return total;

    #[allow(clippy::too_many_arguments)]
    fn rec(
        idx: usize,
        cells: &[(usize, u32)],
        lamv: &[u32],
        muv: &[u32],
        nvals: usize,
        grid: &mut Vec<Vec<Option<usize>>>,
        remaining: &mut Vec<u32>,
        counts: &mut Vec<u32>,
        total: &mut u64,
    ) {
        if idx == cells.len() {
            *total += 1;
            return;
        }
        let (r, c) = cells[idx];
        let cu = c as usize;
        for v in 0..nvals {
            if remaining[v] == 0 {
                continue;
            }
            // lattice word: after placing v, #v <= #(v-1)
            if v > 0 && counts[v] + 1 > counts[v - 1] {
                continue;
            }
            // row weakly increasing: right neighbour (already placed) >= v
            if c + 1 < lamv[r] {
                if let Some(right) = grid[r][cu + 1] {
                    if v > right {
                        continue;
                    }
                }
            }
            // column strictly increasing: cell above (already placed unless
            // it lies inside mu) < v
            if r > 0 && c >= muv[r - 1] {
                match grid[r - 1][cu] {
                    Some(up) if up < v => {}
                    _ => continue,
                }
            }
            grid[r][cu] = Some(v);
            remaining[v] -= 1;
            counts[v] += 1;
            rec(idx + 1, cells, lamv, muv, nvals, grid, remaining, counts, total);
            counts[v] -= 1;
            remaining[v] += 1;
            grid[r][cu] = None;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions_up_to;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn lr_examples() {
        let rules = TensorRules::new();
        assert_eq!(rules.lr_coefficient(&p(&[1]), &p(&[1]), &Partition::empty()), 1);
        assert_eq!(rules.lr_coefficient(&p(&[2, 1]), &p(&[1, 1]), &p(&[1])), 1);
        assert_eq!(rules.lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
        // size mismatch
        assert_eq!(rules.lr_coefficient(&p(&[4]), &p(&[1]), &p(&[1])), 0);
    }

    #[test]
    fn lr_unit_and_symmetry() {
        let rules = TensorRules::new();
        let all = enumerate_partitions_up_to(6);
        for lam in &all {
            assert_eq!(rules.lr_coefficient(lam, lam, &Partition::empty()), 1);
            for mu in &all {
                if mu != lam {
                    assert_eq!(rules.lr_coefficient(lam, mu, &Partition::empty()), 0);
                }
            }
        }
        // c^lam_{mu nu} = c^lam_{nu mu}, exhaustively for |lam| <= 12
        for total in 0..=12u32 {
            for lam in enumerate_partitions(total) {
                for a in 0..=total {
                    for mu in enumerate_partitions(a) {
                        for nu in enumerate_partitions(total - a) {
                            assert_eq!(
                                rules.lr_coefficient(&lam, &mu, &nu),
                                rules.lr_coefficient(&lam, &nu, &mu),
                                "lam={lam} mu={mu} nu={nu}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn nl_examples() {
        let rules = TensorRules::new();
        assert_eq!(rules.nl_coefficient(&Partition::empty(), &p(&[1]), &p(&[1])), 1);
        assert_eq!(rules.nl_coefficient(&p(&[2]), &p(&[1]), &p(&[1])), 1);
        // size-parity obstruction
        assert_eq!(rules.nl_coefficient(&p(&[1]), &p(&[1]), &p(&[1])), 0);
    }

    #[test]
    fn nl_fully_symmetric_small() {
        let rules = TensorRules::new();
        let all = enumerate_partitions_up_to(8);
        for lam in &all {
            for mu in &all {
                for nu in &all {
                    if lam.size() + mu.size() + nu.size() > 8 {
                        continue;
                    }
                    let base = rules.nl_coefficient(lam, mu, nu);
                    assert_eq!(base, rules.nl_coefficient(lam, nu, mu));
                    assert_eq!(base, rules.nl_coefficient(mu, lam, nu));
                    assert_eq!(base, rules.nl_coefficient(mu, nu, lam));
                    assert_eq!(base, rules.nl_coefficient(nu, lam, mu));
                    assert_eq!(base, rules.nl_coefficient(nu, mu, lam));
                }
            }
        }
    }

    #[test]
    fn column_rule_examples() {
        assert_eq!(
            sp_tensor_columns(1, 1),
            vec![Partition::empty(), p(&[2]), p(&[1, 1])]
        );
        assert_eq!(
            sp_tensor_columns(2, 1),
            vec![p(&[1]), p(&[2, 1]), p(&[1, 1, 1])]
        );
        for j in 0..=5 {
            assert_eq!(sp_tensor_columns(0, j), vec![Partition::column(j)]);
        }
    }

    #[test]
    fn column_rule_matches_nl() {
        let rules = TensorRules::new();
        for i in 0..=6u32 {
            for j in 0..=6u32 {
                let closed = sp_tensor_columns(i, j);
                let mut s = i + j;
                loop {
                    for lam in enumerate_partitions(s) {
                        let want = closed.iter().filter(|&q| *q == lam).count() as u64;
                        let got = rules.nl_coefficient(
                            &lam,
                            &Partition::column(i),
                            &Partition::column(j),
                        );
                        assert_eq!(got, want, "lam={lam} i={i} j={j}");
                    }
                    if s < 2 {
                        break;
                    }
                    s -= 2;
                }
            }
        }
    }
}
