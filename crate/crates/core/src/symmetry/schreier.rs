//! Deterministic Schreier–Sims.

use num_bigint::BigUint;

use super::perm::Permutation;

struct Level {
    point: usize,
    gens: Vec<Permutation>,
    /// `transversal[x]` maps `point` to `x`, for `x` in the basic orbit.
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(n: usize, point: usize) -> Level {
        let mut transversal = vec![None; n];
        transversal[point] = Some(Permutation::identity(n));
        Level {
            point,
            gens: Vec::new(),
            transversal,
        }
    }

    fn rebuild_orbit(&mut self) {
        let n = self.transversal.len();
        self.transversal = vec![None; n];
        self.transversal[self.point] = Some(Permutation::identity(n));
        let mut queue = vec![self.point];
        while let Some(x) = queue.pop() {
            let ux = self.transversal[x].clone().expect("reached");
            for s in &self.gens {
                let y = s.apply(x);
                if self.transversal[y].is_none() {
                    self.transversal[y] = Some(ux.then(s));
                    queue.push(y);
                }
            }
        }
    }

    fn orbit(&self) -> impl Iterator<Item = usize> + '_ {
        self.transversal
            .iter()
            .enumerate()
            .filter(|(_, u)| u.is_some())
            .map(|(x, _)| x)
    }

    fn orbit_len(&self) -> usize {
        self.transversal.iter().filter(|u| u.is_some()).count()
    }
}

/// A base and strong generating set.
pub struct StabiliserChain {
    n: usize,
    levels: Vec<Level>,
}

impl StabiliserChain {
    /// Builds a chain for the group generated by `gens`, with `prefix` as
    /// the leading base points.
    pub fn new(n: usize, gens: &[Permutation], prefix: &[usize]) -> StabiliserChain {
        let mut chain = StabiliserChain {
            n,
            levels: prefix.iter().map(|&b| Level::new(n, b)).collect(),
        };
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &gens {
            if chain.levels.iter().all(|l| g.fixes(l.point)) {
                let b = g.first_moved().expect("non-identity");
                chain.levels.push(Level::new(n, b));
            }
        }
        for g in &gens {
            for i in 0..chain.levels.len() {
                chain.levels[i].gens.push(g.clone());
                if !g.fixes(chain.levels[i].point) {
                    break;
                }
            }
        }
        for level in &mut chain.levels {
            level.rebuild_orbit();
        }
        chain.complete();
        chain
    }

    /// Strips `g` through the chain; returns the residue and the level at
    /// which it dropped out (`levels.len()` if it passed every level).
    fn sift(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for i in from..self.levels.len() {
            let level = &self.levels[i];
            let beta = g.apply(level.point);
            match &level.transversal[beta] {
                Some(u) => g = g.then(&u.inverse()),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    fn complete(&mut self) {
        let mut i = self.levels.len();
        'outer: while i > 0 {
            i -= 1;
            let orbit: Vec<usize> = self.levels[i].orbit().collect();
            let gens = self.levels[i].gens.clone();
            for &beta in &orbit {
                let ub = self.levels[i].transversal[beta]
                    .clone()
                    .expect("orbit point");
                for s in &gens {
                    let image = s.apply(beta);
                    let back = self.levels[i].transversal[image]
                        .clone()
                        .expect("closed orbit");
                    let h = ub.then(s).then(&back.inverse());
                    if h.is_identity() {
                        continue;
                    }
                    let (residue, j) = self.sift(h, i + 1);
                    if j == self.levels.len() && residue.is_identity() {
                        continue;
                    }
                    if j == self.levels.len() {
                        let b = residue.first_moved().expect("non-identity");
                        self.levels.push(Level::new(self.n, b));
                    }
                    for l in i + 1..=j {
                        self.levels[l].gens.push(residue.clone());
                        self.levels[l].rebuild_orbit();
                    }
                    i = j + 1;
                    continue 'outer;
                }
            }
        }
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| {
            acc * BigUint::from(l.orbit_len())
        })
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.n && {
            let (residue, j) = self.sift(g.clone(), 0);
            j == self.levels.len() && residue.is_identity()
        }
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    /// Strong generators fixing the first `depth` base points.
    pub fn stabiliser_generators(&self, depth: usize) -> Vec<Permutation> {
        self.levels
            .get(depth)
            .map(|l| l.gens.clone())
            .unwrap_or_default()
    }

    /// Element of the level-`depth` stabiliser mapping its base point to `x`.
    pub fn transversal(&self, depth: usize, x: usize) -> Option<&Permutation> {
        self.levels
            .get(depth)
            .and_then(|l| l.transversal[x].as_ref())
    }
}
