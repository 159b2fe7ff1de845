use serde::Serialize;

use super::Partition;

/// A semistandard filling of `outer / inner` whose reverse reading word is a lattice word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LRTableau {
    pub outer: Partition,
    pub inner: Partition,
    /// Row `r` holds the entries of cells `inner[r]..outer[r]`, left to right; values are 1-based.
    pub filling: Vec<Vec<usize>>,
}

struct Search<'a> {
    outer: &'a Partition,
    inner: &'a Partition,
    content: &'a [usize],
    /// Cells in fill order: rows top to bottom, each row right to left.
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    used: Vec<usize>,
}

impl Search<'_> {
    /// Visits every completed tableau; `visit` returns whether to keep going.
    fn run(&mut self, k: usize, visit: &mut dyn FnMut(&Vec<Vec<usize>>) -> bool) -> bool {
        if k == self.cells.len() {
            return visit(&self.grid);
        }
        let (r, c) = self.cells[k];
        // Row weakly increases, so the cell to the right bounds this one from above.
        let hi = if c + 1 < self.outer.part(r) {
            self.grid[r][c + 1]
        } else {
            self.content.len()
        };
        // Column strictly increases.
        let lo = if r > 0 && c >= self.inner.part(r - 1) {
            self.grid[r - 1][c] + 1
        } else {
            1
        };
        for v in lo..=hi.min(r + 1) {
            let i = v - 1;
            if self.used[i] == self.content[i] {
                continue;
            }
            // Lattice condition on the reverse reading word prefix.
            if i > 0 && self.used[i] + 1 > self.used[i - 1] {
                continue;
            }
            self.used[i] += 1;
            self.grid[r][c] = v;
            let go_on = self.run(k + 1, visit);
            self.grid[r][c] = 0;
            self.used[i] -= 1;
            if !go_on {
                return false;
            }
        }
        true
    }
}

fn search(
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
    visit: &mut dyn FnMut(&Vec<Vec<usize>>) -> bool,
) {
    if !lam.contains(mu) || lam.size() != mu.size() + nu.size() {
        return;
    }
    let cells = (0..lam.length())
        .flat_map(|r| (mu.part(r)..lam.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut s = Search {
        outer: lam,
        inner: mu,
        content: nu.parts(),
        cells,
        grid: lam.parts().iter().map(|&len| vec![0; len]).collect(),
        used: vec![0; nu.length()],
    };
    s.run(0, visit);
}

/// The Littlewood–Richardson coefficient `c^lam_{mu,nu}`: the number of LR tableaux of
/// shape `lam / mu` and content `nu`. Zero when `mu ⊄ lam` or sizes disagree.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let mut count = 0u64;
    search(lam, mu, nu, &mut |_| {
        count += 1;
        true
    });
    count
}

/// All LR tableaux of shape `lam / mu` and content `nu`.
pub fn lr_tableaux(lam: &Partition, mu: &Partition, nu: &Partition) -> Vec<LRTableau> {
    let mut out = Vec::new();
    search(lam, mu, nu, &mut |grid| {
        let filling = grid
            .iter()
            .enumerate()
            .map(|(r, row)| row[mu.part(r)..].to_vec())
            .collect();
        out.push(LRTableau {
            outer: lam.clone(),
            inner: mu.clone(),
            filling,
        });
        true
    });
    out
}

/// Multiplicity of the harmonic Schur functor `S_[nu]` in the restriction of `S_mu` from
/// GL to the orthogonal group: `Σ_ξ c^mu_{nu,ξ}` over `ξ` with all rows of even length.
///
/// Valid for orthogonal groups of rank at least `length(mu)`.
pub fn littlewood_so_multiplicity(mu: &Partition, nu: &Partition) -> u64 {
    if !mu.contains(nu) {
        return 0;
    }
    let rest = mu.size() - nu.size();
    if rest % 2 == 1 {
        return 0;
    }
    Partition::all_of(rest / 2, mu.length(), mu.part(0) / 2)
        .into_iter()
        .map(|half| {
            let xi = Partition::new(half.parts().iter().map(|x| 2 * x).collect())
                .expect("doubling preserves order");
            lr_coefficient(mu, nu, &xi)
        })
        .sum()
}
