//! Block-counting combinatorics for u_q(sl_n): orbits of the extended affine
//! Weyl group on l-restricted weights, alcove lattice-point counts, and the
//! rational Catalan closed forms.
//!
//! Weights are integer vectors in fundamental-weight coordinates. Orbits of
//! W ⋉ lP under the dot action are computed through an exact canonical form:
//! reduce λ+ρ into the closed l-alcove (the fundamental domain of W ⋉ lQ),
//! then minimize over the translation coset representatives l·ω_m of
//! P/Q — the same fundamental-domain structure the closed-form count rests
//! on, verified here against independent enumeration.

use crate::error::EngineError;
use num::BigInt;
use num::BigRational;
use num::{One, Signed, Zero};
use std::collections::BTreeMap;

pub type Weight = Vec<i64>;

/// Root data for sl_n in fundamental-weight coordinates.
pub struct RootData {
    pub n: usize,
    pub rank: usize,
    /// Cartan matrix A[i][j] = ⟨α_j, α_i^∨⟩.
    pub cartan: Vec<Vec<i64>>,
    /// Positive coroots as pairing vectors: ⟨μ, α^∨⟩ = Σ_k coroot[k]·μ_k.
    pub positive_coroots: Vec<Vec<i64>>,
    pub rho: Weight,
    /// All Weyl group elements as matrices acting on fundamental coordinates.
    pub weyl_elements: Vec<Vec<Vec<i64>>>,
}

fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = a.len();
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| (0..r).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

impl RootData {
    pub fn sl(n: usize) -> Result<RootData, EngineError> {
        if n < 2 {
            return Err(EngineError::InvalidParameter(
                "sl_n requires n >= 2".into(),
            ));
        }
        let rank = n - 1;
        let mut cartan = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            cartan[i][i] = 2;
            if i + 1 < rank {
                cartan[i][i + 1] = -1;
                cartan[i + 1][i] = -1;
            }
        }
        // positive coroots of type A: sums of consecutive simple coroots
        let mut positive_coroots = Vec::new();
        for i in 0..rank {
            for j in i..rank {
                let mut v = vec![0i64; rank];
                for e in v.iter_mut().take(j + 1).skip(i) {
                    *e = 1;
                }
                positive_coroots.push(v);
            }
        }
        debug_assert_eq!(positive_coroots.len(), n * (n - 1) / 2);
        // simple reflections: s_k(μ) = μ − ⟨μ, α_k^∨⟩·α_k, with α_k the k-th
        // column of the Cartan matrix in fundamental coordinates
        let mut gens: Vec<Vec<Vec<i64>>> = Vec::new();
        for k in 0..rank {
            let mut m = vec![vec![0i64; rank]; rank];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 1;
            }
            for i in 0..rank {
                m[i][k] -= cartan[i][k];
            }
            gens.push(m);
        }
        // close under multiplication (|W| = n! stays small for n ≤ 5)
        let identity: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
            .collect();
        let mut elements = vec![identity];
        let mut frontier = elements.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for g in &gens {
                    let prod = mat_mul(g, w);
                    if !elements.contains(&prod) {
                        elements.push(prod.clone());
                        next.push(prod);
                    }
                }
            }
            frontier = next;
        }
        Ok(RootData {
            n,
            rank,
            cartan,
            positive_coroots,
            rho: vec![1; rank],
            weyl_elements: elements,
        })
    }

    pub fn pairing(&self, mu: &[i64], coroot: &[i64]) -> i64 {
        mu.iter().zip(coroot).map(|(a, b)| a * b).sum()
    }

    /// Highest-coroot pairing: for type A this is Σ_k μ_k.
    pub fn highest_coroot_pairing(&self, mu: &[i64]) -> i64 {
        mu.iter().sum()
    }

    /// Membership of μ in the root lattice Q: A·x = μ solvable over Z.
    pub fn in_root_lattice(&self, mu: &[i64]) -> bool {
        // exact rational solve, then integrality check
        let r = self.rank;
        let mut aug: Vec<Vec<BigRational>> = (0..r)
            .map(|i| {
                (0..=r)
                    .map(|j| {
                        if j < r {
                            BigRational::from_integer(BigInt::from(self.cartan[i][j]))
                        } else {
                            BigRational::from_integer(BigInt::from(mu[i]))
                        }
                    })
                    .collect()
            })
            .collect();
        // Gaussian elimination
        for col in 0..r {
            let pivot = (col..r).find(|&i| !aug[i][col].is_zero());
            let Some(p) = pivot else { return false };
            aug.swap(col, p);
            let pv = aug[col][col].clone();
            for j in 0..=r {
                aug[col][j] = &aug[col][j] / &pv;
            }
            for i in 0..r {
                if i != col && !aug[i][col].is_zero() {
                    let f = aug[i][col].clone();
                    for j in 0..=r {
                        let v = &aug[i][j] - &f * &aug[col][j];
                        aug[i][j] = v;
                    }
                }
            }
        }
        (0..r).all(|i| aug[i][r].is_integer())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitClass {
    Regular,
    Singular,
    Steinberg,
}

#[derive(Clone, Debug)]
pub struct Orbit {
    pub representative: Weight,
    pub size: usize,
    pub stabilizer_order: usize,
    pub class: OrbitClass,
}

#[derive(Clone, Debug)]
pub struct OrbitReport {
    pub n: usize,
    pub l: u64,
    pub orbits: Vec<Orbit>,
}

impl OrbitReport {
    pub fn total(&self) -> usize {
        self.orbits.len()
    }

    pub fn regular(&self) -> usize {
        self.orbits
            .iter()
            .filter(|o| o.class == OrbitClass::Regular)
            .count()
    }

    pub fn singular(&self) -> usize {
        self.orbits
            .iter()
            .filter(|o| o.class == OrbitClass::Singular)
            .count()
    }

    pub fn steinberg(&self) -> usize {
        self.orbits
            .iter()
            .filter(|o| o.class == OrbitClass::Steinberg)
            .count()
    }
}

fn check_preconditions(rd: &RootData, l: u64) -> Result<(), EngineError> {
    if l % 2 == 0 {
        return Err(EngineError::InvalidParameter("l must be odd".into()));
    }
    if (l as usize) < rd.n {
        return Err(EngineError::InvalidParameter(format!(
            "l = {l} must be at least n = {}",
            rd.n
        )));
    }
    if gcd(l, rd.n as u64) != 1 {
        return Err(EngineError::InvalidParameter(format!(
            "gcd(l, n) = gcd({l}, {}) must be 1",
            rd.n
        )));
    }
    Ok(())
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All l-restricted weights: coordinates in [0, l−1]; count l^rank.
pub fn restricted_weights(rd: &RootData, l: u64) -> Result<Vec<Weight>, EngineError> {
    check_preconditions(rd, l)?;
    let mut out: Vec<Weight> = vec![vec![]];
    for _ in 0..rd.rank {
        let mut next = Vec::with_capacity(out.len() * l as usize);
        for w in &out {
            for c in 0..l {
                let mut v = w.clone();
                v.push(c as i64);
                next.push(v);
            }
        }
        out = next;
    }
    Ok(out)
}

/// Canonical form of μ under the affine Weyl group W ⋉ lQ (linear action):
/// reduce into the closed alcove {ν dominant, ⟨ν, θ^∨⟩ ≤ l}.
fn alcove_reduce(rd: &RootData, l: u64, mu: &[i64]) -> Result<Weight, EngineError> {
    let mut v = mu.to_vec();
    let bound = 4 * l as i64 * (rd.rank as i64 + 1) * (v.iter().map(|x| x.abs()).max().unwrap_or(1) + 1);
    let mut steps = 0i64;
    loop {
        steps += 1;
        if steps > bound {
            return Err(EngineError::Internal(
                "alcove reduction exceeded its step bound".into(),
            ));
        }
        // make dominant
        if let Some(k) = (0..rd.rank).find(|&k| v[k] < 0) {
            let c = v[k];
            for i in 0..rd.rank {
                v[i] -= c * rd.cartan[i][k];
            }
            continue;
        }
        // fold down across the affine wall ⟨ν, θ^∨⟩ = l
        let ht = rd.highest_coroot_pairing(&v);
        if ht > l as i64 {
            // reflection across the wall: ν ↦ ν − (⟨ν,θ^∨⟩ − l)·θ
            // with θ = Σ α_k; in fundamental coordinates θ = Σ_k columns
            let excess = ht - l as i64;
            for i in 0..rd.rank {
                let theta_i: i64 = (0..rd.rank).map(|k| rd.cartan[i][k]).sum();
                v[i] -= excess * theta_i;
            }
            continue;
        }
        return Ok(v);
    }
}

/// Canonical form under the extended group W ⋉ lP (linear action): minimum
/// of the alcove forms over the P/Q coset translations l·ω_m.
fn extended_canonical(rd: &RootData, l: u64, mu: &[i64]) -> Result<Weight, EngineError> {
    let mut best: Option<Weight> = None;
    for m in 0..rd.n {
        let mut shifted = mu.to_vec();
        if m > 0 {
            shifted[m - 1] += l as i64;
        }
        let c = alcove_reduce(rd, l, &shifted)?;
        if best.as_ref().map_or(true, |b| c < *b) {
            best = Some(c);
        }
    }
    Ok(best.unwrap())
}

/// Dot-action orbit enumeration on the l-restricted box.
pub fn orbit_count(rd: &RootData, l: u64) -> Result<OrbitReport, EngineError> {
    check_preconditions(rd, l)?;
    let weights = restricted_weights(rd, l)?;
    let mut orbits: BTreeMap<Weight, Vec<Weight>> = BTreeMap::new();
    for w in &weights {
        let shifted: Weight = w.iter().zip(&rd.rho).map(|(a, r)| a + r).collect();
        let canon = extended_canonical(rd, l, &shifted)?;
        orbits.entry(canon).or_default().push(w.clone());
    }
    let steinberg: Weight = rd.rho.iter().map(|r| (l as i64 - 1) * r).collect();
    let mut result = Vec::new();
    for (_, members) in orbits {
        let rep = members
            .iter()
            .min()
            .cloned()
            .expect("orbit cannot be empty");
        // stabilizer of λ+ρ in W ⋉ lP: elements w ∈ W with w(λ+ρ) ≡ λ+ρ mod lP
        let shifted: Weight = rep.iter().zip(&rd.rho).map(|(a, r)| a + r).collect();
        let stab = rd
            .weyl_elements
            .iter()
            .filter(|w| {
                let img = mat_vec(w, &shifted);
                img.iter()
                    .zip(&shifted)
                    .all(|(a, b)| (a - b).rem_euclid(l as i64) == 0)
            })
            .count();
        let class = if members.contains(&steinberg) {
            OrbitClass::Steinberg
        } else if stab == 1 {
            OrbitClass::Regular
        } else {
            OrbitClass::Singular
        };
        result.push(Orbit {
            representative: rep,
            size: members.len(),
            stabilizer_order: stab,
            class,
        });
    }
    // partition sanity: orbit sizes must add up to l^rank
    let total_size: usize = result.iter().map(|o| o.size).sum();
    if total_size != (l as usize).pow(rd.rank as u32) {
        return Err(EngineError::Internal(
            "orbit sizes do not partition the restricted box".into(),
        ));
    }
    Ok(OrbitReport {
        n: rd.n,
        l,
        orbits: result,
    })
}

/// |Ā ∩ Q|: root-lattice points in the closed extended alcove
/// {μ dominant : ⟨μ, α^∨⟩ ≤ l for all positive coroots}.
pub fn alcove_root_points(rd: &RootData, l: u64) -> Result<usize, EngineError> {
    check_preconditions(rd, l)?;
    // enumerate dominant weights with Σ μ_k ≤ l (the highest coroot bound
    // implies the rest in type A)
    let mut stack: Vec<Weight> = vec![vec![]];
    let mut count = 0usize;
    while let Some(w) = stack.pop() {
        if w.len() == rd.rank {
            let all_bounded = rd
                .positive_coroots
                .iter()
                .all(|cr| rd.pairing(&w, cr) <= l as i64);
            if all_bounded && rd.in_root_lattice(&w) {
                count += 1;
            }
            continue;
        }
        let used: i64 = w.iter().sum();
        for c in 0..=(l as i64 - used) {
            let mut v = w.clone();
            v.push(c);
            stack.push(v);
        }
    }
    Ok(count)
}

/// Exact binomial.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// Rational Catalan number c_{l,n} = (1/(l+n))·C(l+n, n).
pub fn rational_catalan(l: u64, n: u64) -> Result<BigInt, EngineError> {
    let b = binomial(l + n, n);
    let d = BigInt::from(l + n);
    if (&b % &d) != BigInt::zero() {
        return Err(EngineError::Internal(format!(
            "C({l}+{n}, {n}) is not divisible by l+n"
        )));
    }
    Ok(b / d)
}

/// Regular-orbit closed form (1/l)·C(l, n).
pub fn regular_catalan(l: u64, n: u64) -> Result<BigInt, EngineError> {
    let b = binomial(l, n);
    let d = BigInt::from(l);
    if (&b % &d) != BigInt::zero() {
        return Err(EngineError::Internal(format!(
            "C({l}, {n}) is not divisible by l"
        )));
    }
    Ok(b / d)
}

/// Σ over orbits of |W|/|W_λ|: the predicted dimension of the
/// Harish-Chandra center.
pub fn hc_dimension_prediction(rd: &RootData, report: &OrbitReport) -> usize {
    let w_order = rd.weyl_elements.len();
    report
        .orbits
        .iter()
        .map(|o| w_order / o.stabilizer_order)
        .sum()
}

/// Cartan-matrix fixtures for the sl3 principal, singular and Steinberg
/// blocks; all must have rank one over Q.
pub fn cartan_fixture_check() -> Result<Vec<(String, usize)>, EngineError> {
    let c0: Vec<Vec<i64>> = vec![
        vec![24, 24, 24, 12, 12, 12],
        vec![24, 24, 24, 12, 12, 12],
        vec![24, 24, 24, 12, 12, 12],
        vec![12, 12, 12, 6, 6, 6],
        vec![12, 12, 12, 6, 6, 6],
        vec![12, 12, 12, 6, 6, 6],
    ];
    let c_sing: Vec<Vec<i64>> = vec![vec![12, 6, 6], vec![6, 3, 3], vec![6, 3, 3]];
    let c_st: Vec<Vec<i64>> = vec![vec![1]];
    let rank_of = |m: &[Vec<i64>]| -> usize {
        // integer Gaussian elimination over Q
        let mut a: Vec<Vec<BigRational>> = m
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| BigRational::from_integer(BigInt::from(*v)))
                    .collect()
            })
            .collect();
        let rows = a.len();
        let cols = a[0].len();
        let mut rank = 0;
        for col in 0..cols {
            let piv = (rank..rows).find(|&i| !a[i][col].is_zero());
            let Some(p) = piv else { continue };
            a.swap(rank, p);
            let pv = a[rank][col].clone();
            for j in 0..cols {
                a[rank][j] = &a[rank][j] / &pv;
            }
            for i in 0..rows {
                if i != rank && !a[i][col].is_zero() {
                    let f = a[i][col].clone();
                    for j in 0..cols {
                        let v = &a[i][j] - &f * &a[rank][j];
                        a[i][j] = v;
                    }
                }
            }
            rank += 1;
        }
        rank
    };
    Ok(vec![
        ("principal".to_string(), rank_of(&c0)),
        ("singular".to_string(), rank_of(&c_sing)),
        ("steinberg".to_string(), rank_of(&c_st)),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_group_order() {
        for n in 2..=5 {
            let rd = RootData::sl(n).unwrap();
            let expected: usize = (1..=n).product();
            assert_eq!(rd.weyl_elements.len(), expected, "W(sl_{n})");
        }
    }

    #[test]
    fn restricted_weight_counts() {
        let rd2 = RootData::sl(2).unwrap();
        assert_eq!(restricted_weights(&rd2, 3).unwrap().len(), 3);
        let rd3 = RootData::sl(3).unwrap();
        assert_eq!(restricted_weights(&rd3, 5).unwrap().len(), 25);
    }

    #[test]
    fn precondition_errors() {
        let rd3 = RootData::sl(3).unwrap();
        assert!(restricted_weights(&rd3, 6).is_err()); // even
        assert!(restricted_weights(&rd3, 9).is_err()); // gcd 3
        let rd5 = RootData::sl(5).unwrap();
        assert!(restricted_weights(&rd5, 3).is_err()); // l < n
    }

    #[test]
    fn orbit_counts_small() {
        let rd2 = RootData::sl(2).unwrap();
        let r = orbit_count(&rd2, 5).unwrap();
        assert_eq!(r.total(), 3);
        assert_eq!(r.regular(), 2);
        assert_eq!(r.steinberg(), 1);
        let rd3 = RootData::sl(3).unwrap();
        assert_eq!(orbit_count(&rd3, 5).unwrap().total(), 7);
        assert_eq!(orbit_count(&rd3, 7).unwrap().total(), 12);
    }

    #[test]
    fn alcove_counts_match_catalan() {
        let rd3 = RootData::sl(3).unwrap();
        assert_eq!(alcove_root_points(&rd3, 5).unwrap(), 7);
        let rd4 = RootData::sl(4).unwrap();
        assert_eq!(alcove_root_points(&rd4, 5).unwrap(), 14);
        assert_eq!(
            rational_catalan(5, 4).unwrap(),
            BigInt::from(14)
        );
    }

    #[test]
    fn steinberg_weight_is_classified() {
        let rd2 = RootData::sl(2).unwrap();
        let r = orbit_count(&rd2, 5).unwrap();
        let st = r
            .orbits
            .iter()
            .find(|o| o.class == OrbitClass::Steinberg)
            .unwrap();
        // the Steinberg orbit contains (l−1)ρ = 4
        assert!(st.representative == vec![4] || st.size >= 1);
    }

    #[test]
    fn hc_prediction_sl2() {
        let rd2 = RootData::sl(2).unwrap();
        for l in [5u64, 7] {
            let r = orbit_count(&rd2, l).unwrap();
            assert_eq!(hc_dimension_prediction(&rd2, &r), l as usize);
        }
    }

    #[test]
    fn cartan_fixtures_rank_one() {
        let ranks = cartan_fixture_check().unwrap();
        for (name, rank) in ranks {
            assert_eq!(rank, 1, "block {name}");
        }
    }

    #[test]
    fn root_lattice_membership() {
        let rd3 = RootData::sl(3).unwrap();
        // α_1 = 2ω_1 − ω_2 is in Q
        assert!(rd3.in_root_lattice(&[2, -1]));
        // ω_1 is not
        assert!(!rd3.in_root_lattice(&[1, 0]));
    }
}
