//! Dimension of the space of odd functions on finite factor groups.
//!
//! On a finite group, λ is odd iff `λ(g⁻¹) = −λ(g)`; this forces `λ(1) = 0`
//! and `λ(g) = 0` for involutions, and leaves one free value per pair
//! `{g, g⁻¹}` with `g ≠ g⁻¹`.

use crate::linalg;
use crate::rack::FiniteGroup;

/// `Σ_s |{g ∈ Γ_s : g² ≠ 1}| / 2`.
pub fn v0_dim(groups: &[FiniteGroup]) -> usize {
    groups
        .iter()
        .map(|g| (0..g.order()).filter(|&x| g.mul(x, x) != g.identity()).count() / 2)
        .sum()
}

/// The same dimension as the nullity of the linear system
/// `λ(g) + λ(g⁻¹) = 0`, `λ(1) = 0`, solved by exact elimination.
pub fn v0_dim_by_elimination(groups: &[FiniteGroup]) -> usize {
    groups
        .iter()
        .map(|g| {
            let n = g.order();
            let mut rows: Vec<Vec<i64>> = (0..n)
                .map(|x| {
                    let mut r = vec![0i64; n];
                    r[x] += 1;
                    r[g.inverse(x)] += 1;
                    r
                })
                .collect();
            let mut id = vec![0i64; n];
            id[g.identity()] = 1;
            rows.push(id);
            n - linalg::rank_i64(&rows)
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let z2 = FiniteGroup::cyclic(2);
        let z3 = FiniteGroup::cyclic(3);
        assert_eq!(v0_dim(&[z2.clone(), z3.clone()]), 1);
        assert_eq!(v0_dim(&[FiniteGroup::trivial(), FiniteGroup::trivial()]), 0);
        let z5 = FiniteGroup::cyclic(5);
        assert_eq!(v0_dim(&[z5.clone(), z5.clone()]), 4);
        for gs in [vec![z2, z3], vec![z5.clone(), z5], vec![FiniteGroup::symmetric(3)], vec![FiniteGroup::cyclic(8)]] {
            assert_eq!(v0_dim(&gs), v0_dim_by_elimination(&gs));
        }
    }
}
