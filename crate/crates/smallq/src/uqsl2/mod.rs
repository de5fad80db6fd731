//! The small quantum group u_q(sl2) at an odd primitive l-th root of unity,
//! built as explicit structure tensors over the PBW basis F^a K^b E^c.
//!
//! Relations: K·E = q²·E·K, K·F = q⁻²·F·K, [E, F] = (K − K⁻¹)/(q − q⁻¹),
//! E^l = F^l = 0, K^l = 1. Hopf structure:
//!   Δ(E) = E⊗1 + K⊗E, Δ(F) = 1⊗F + F⊗K⁻¹, Δ(K) = K⊗K,
//!   S(E) = −K⁻¹E, S(F) = −FK, S(K) = K⁻¹, ε(E) = ε(F) = 0, ε(K) = 1.
//!
//! The multiplication table is filled by iterated right multiplication with
//! the generators (each basis monomial extends its predecessor by exactly one
//! generator), using the reordering identity
//!   E^c·F = F·E^c + [c]·(q^{−(c−1)}K − q^{(c−1)}K⁻¹)/(q − q⁻¹)·E^{c−1}.

pub mod divided;
pub mod kerler;
pub mod ostrik;
pub mod rmatrix;

use crate::cyc::{CycNum, QContext};
use crate::error::EngineError;
use crate::hopf::algebra::{AlgElem, Functional, HopfData, ModuleRep};
use crate::hopf::quasitriangular::TensorElem;
use crate::linalg::{Mat, Subspace};

pub struct SmallQuantumSl2 {
    pub l: u64,
    pub ctx: QContext,
    pub h: HopfData,
    pub idx_e: usize,
    pub idx_k: usize,
    pub idx_f: usize,
}

impl SmallQuantumSl2 {
    pub fn monomial_index(&self, a: u64, b: u64, c: u64) -> usize {
        let l = self.l;
        ((a % l) * l * l + (b % l) * l + (c % l)) as usize
    }

    pub fn monomial_exponents(&self, idx: usize) -> (u64, u64, u64) {
        let l = self.l as usize;
        ((idx / (l * l)) as u64, ((idx / l) % l) as u64, (idx % l) as u64)
    }

    /// F^a K^b E^c with a coefficient.
    pub fn monomial(&self, a: u64, b: u64, c: u64, coeff: CycNum) -> AlgElem {
        AlgElem::monomial(self.ctx.order, self.h.dim, self.monomial_index(a, b, c), coeff)
    }

    pub fn unit_elem(&self) -> AlgElem {
        AlgElem::basis(self.ctx.order, self.h.dim, 0)
    }

    /// E^(n) = Eⁿ/[n]! for n < l.
    pub fn divided_e(&self, n: u64) -> AlgElem {
        let c = self.ctx.q_factorial(n).inv().unwrap();
        self.monomial(0, 0, n, c)
    }

    /// F^(n) = Fⁿ/[n]! for n < l.
    pub fn divided_f(&self, n: u64) -> AlgElem {
        let c = self.ctx.q_factorial(n).inv().unwrap();
        self.monomial(n, 0, 0, c)
    }

    /// The grouplike implementing S² by conjugation: S²(x) = g·x·g⁻¹.
    /// For the adopted structure maps this is a power of K, found by testing.
    pub fn s2_conjugator(&self) -> Result<AlgElem, EngineError> {
        let h = &self.h;
        for b in 0..self.l {
            let g = self.monomial(0, b, 0, self.ctx.one());
            let g_inv = self.monomial(0, (self.l - b) % self.l, 0, self.ctx.one());
            let mut ok = true;
            for gen in h.generating_set() {
                let s2 = h.apply_antipode(&h.antipode[gen])?;
                let conj = h.mult_elems(&h.mult_elems(&g, &AlgElem::basis(h.order, h.dim, gen))?, &g_inv)?;
                if s2 != conj {
                    ok = false;
                    break;
                }
            }
            if ok {
                return Ok(self.monomial(0, b, 0, self.ctx.one()));
            }
        }
        Err(EngineError::StructureCheck(
            "no power of K implements S² by conjugation".into(),
        ))
    }

    /// The (m+1)-dimensional simple module, 0 ≤ m ≤ l−1, in the ladder
    /// convention F·v_j = [j+1]v_{j+1}, E·v_j = [m−j+1]v_{j−1},
    /// K·v_j = q^{m−2j}v_j.
    pub fn simple_module(&self, m: u64) -> Result<ModuleRep, EngineError> {
        if m >= self.l {
            return Err(EngineError::InvalidParameter(format!(
                "simple module weight {m} out of range for l = {}",
                self.l
            )));
        }
        let d = (m + 1) as usize;
        let order = self.ctx.order;
        let mut k_mat = Mat::zero(order, d, d);
        let mut e_mat = Mat::zero(order, d, d);
        let mut f_mat = Mat::zero(order, d, d);
        for j in 0..d {
            k_mat.set(j, j, self.ctx.q_pow(m as i64 - 2 * j as i64));
            if j + 1 < d {
                f_mat.set(j + 1, j, self.ctx.q_int(j as i64 + 1));
            }
            if j >= 1 {
                e_mat.set(j - 1, j, self.ctx.q_int(m as i64 - j as i64 + 1));
            }
        }
        let rep = ModuleRep::from_generators(
            &self.h,
            d,
            &[
                (self.idx_e, e_mat),
                (self.idx_k, k_mat),
                (self.idx_f, f_mat),
            ],
        )?;
        rep.verify_homomorphism(&self.h)?;
        let end_dim = rep.endomorphism_dim(&self.h)?;
        if end_dim != 1 {
            return Err(EngineError::StructureCheck(format!(
                "simple module {m} has End of dimension {end_dim}"
            )));
        }
        Ok(rep)
    }

    pub fn all_simples(&self) -> Result<Vec<ModuleRep>, EngineError> {
        (0..self.l).map(|m| self.simple_module(m)).collect()
    }

    /// Shifted trace functional of L(m): h ↦ Tr(ρ(g)·ρ(h)) with g the
    /// S²-conjugator. Membership in c_l is the caller's check.
    pub fn char_chi(&self, rep: &ModuleRep) -> Result<Functional, EngineError> {
        let g = self.s2_conjugator()?;
        rep.shifted_character(&self.h, &g)
    }

    /// Quantum dimension Tr_{L(m)}(K) = [m+1]_q.
    pub fn q_dimension(&self, m: u64) -> CycNum {
        self.ctx.q_int(m as i64 + 1)
    }

    /// Left integral of u_q(sl2) in closed form, up to scalar:
    /// (Σ_b K^b)·F^{l−1}E^{l−1}.
    pub fn integral_closed_form(&self) -> Result<AlgElem, EngineError> {
        let mut acc = AlgElem::zero(self.ctx.order, self.h.dim);
        for b in 0..self.l {
            acc = acc.add(&self.monomial(self.l - 1, b, self.l - 1, self.ctx.one()))?;
        }
        Ok(acc)
    }
}

/// Right multiplication of a normal-form monomial by a generator, as sparse
/// terms. This is the single rewriting step the whole table is built from.
fn monomial_times_generator(
    ctx: &QContext,
    l: u64,
    dim: usize,
    idx: usize,
    gen: Gen,
) -> Vec<(usize, CycNum)> {
    let (a, b, c) = (
        (idx / (l as usize * l as usize)) as u64,
        ((idx / l as usize) % l as usize) as u64,
        (idx % l as usize) as u64,
    );
    let index = |a: u64, b: u64, c: u64| ((a * l + b) * l + c) as usize;
    match gen {
        Gen::E => {
            if c + 1 == l {
                vec![]
            } else {
                vec![(index(a, b, c + 1), ctx.one())]
            }
        }
        Gen::K => vec![(index(a, (b + 1) % l, c), ctx.q_pow(-2 * c as i64))],
        Gen::F => {
            let mut terms: Vec<(usize, CycNum)> = Vec::with_capacity(3);
            if a + 1 < l {
                terms.push((index(a + 1, b, c), ctx.q_pow(-2 * b as i64)));
            }
            if c >= 1 {
                // [c]·(q^{−(c−1)}·K^{b+1} − q^{(c−1)}·K^{b−1})/(q−q⁻¹) · E^{c−1}
                let denom = ctx.q_pow(1).sub(&ctx.q_pow(-1)).unwrap();
                let factor = ctx.q_int(c as i64).div(&denom).unwrap();
                let plus = factor.mul(&ctx.q_pow(-(c as i64 - 1))).unwrap();
                let minus = factor.mul(&ctx.q_pow(c as i64 - 1)).unwrap().neg();
                terms.push((index(a, (b + 1) % l, c - 1), plus));
                terms.push((index(a, (b + l - 1) % l, c - 1), minus));
            }
            terms
        }
    }
    .into_iter()
    .filter(|(_, v)| !v.is_zero())
    .map(|(i, v)| {
        debug_assert!(i < dim);
        (i, v)
    })
    .collect()
}

#[derive(Clone, Copy)]
enum Gen {
    E,
    K,
    F,
}

/// Build u_q(sl2) for odd l ≥ 3 over Q(ζ_l), or over Q(ζ_4l) when
/// `extended_field` (needed to materialize √l).
pub fn build_uqsl2(l: u64, extended_field: bool) -> Result<SmallQuantumSl2, EngineError> {
    if l < 3 || l % 2 == 0 {
        return Err(EngineError::InvalidParameter(format!(
            "l must be odd and at least 3, got {l}"
        )));
    }
    let ctx = if extended_field {
        QContext::extended(l)
    } else {
        QContext::new(l)
    };
    let order = ctx.order;
    let dim = (l * l * l) as usize;
    let lu = l as usize;
    let idx_e = 1usize;
    let idx_k = lu;
    let idx_f = lu * lu;

    // word decomposition: peel E, then K, then F
    let decomp = |j: usize| -> Option<(usize, Gen)> {
        if j == 0 {
            return None;
        }
        let c = j % lu;
        let b = (j / lu) % lu;
        if c > 0 {
            Some((j - 1, Gen::E))
        } else if b > 0 {
            Some((j - lu, Gen::K))
        } else {
            Some((j - lu * lu, Gen::F))
        }
    };

    // multiplication table by dynamic programming over the right factor
    let mut mult: Vec<AlgElem> = Vec::with_capacity(dim * dim);
    mult.resize(dim * dim, AlgElem::zero(order, dim));
    for i in 0..dim {
        mult[i * dim] = AlgElem::basis(order, dim, i);
    }
    for j in 1..dim {
        let (pred, gen) = decomp(j).unwrap();
        for i in 0..dim {
            let base = mult[i * dim + pred].clone();
            let mut out: Vec<(usize, CycNum)> = Vec::with_capacity(base.terms.len() * 2);
            for (t, coeff) in &base.terms {
                for (t2, c2) in monomial_times_generator(&ctx, l, dim, *t, gen) {
                    out.push((t2, c2.mul(coeff).unwrap()));
                }
            }
            mult[i * dim + j] = AlgElem::from_terms(order, dim, out);
        }
    }

    // counit
    let counit: Vec<CycNum> = (0..dim)
        .map(|j| {
            let c = j % lu;
            let a = j / (lu * lu);
            if a == 0 && c == 0 {
                ctx.one()
            } else {
                ctx.zero()
            }
        })
        .collect();

    let mut h = HopfData {
        dim,
        order,
        labels: (0..dim)
            .map(|j| {
                let c = j % lu;
                let b = (j / lu) % lu;
                let a = j / (lu * lu);
                format!("F^{a} K^{b} E^{c}")
            })
            .collect(),
        mult,
        unit: AlgElem::basis(order, dim, 0),
        coprod: vec![vec![]; dim],
        counit,
        antipode: vec![AlgElem::zero(order, dim); dim],
        antipode_inv: vec![AlgElem::zero(order, dim); dim],
        generators: Some(vec![idx_e, idx_k, idx_f]),
        word_decomp: (0..dim)
            .map(|j| decomp(j).map(|(p, g)| (p, match g {
                Gen::E => idx_e,
                Gen::K => idx_k,
                Gen::F => idx_f,
            })))
            .collect(),
    };

    // coproduct by the same dynamic programming, now in H⊗H
    let cop_e = {
        let mut t = TensorElem::zero(order, dim);
        t.insert((idx_e, 0), ctx.one());
        t.insert((idx_k, idx_e), ctx.one());
        t
    };
    let cop_k = {
        let mut t = TensorElem::zero(order, dim);
        t.insert((idx_k, idx_k), ctx.one());
        t
    };
    let cop_f = {
        let mut t = TensorElem::zero(order, dim);
        t.insert((0, idx_f), ctx.one());
        t.insert((idx_f, ((l - 1) * l) as usize), ctx.one());
        t
    };
    let mut coprods: Vec<TensorElem> = Vec::with_capacity(dim);
    coprods.push(TensorElem::unit(&h));
    for j in 1..dim {
        let (pred, gen) = decomp(j).unwrap();
        let g_cop = match gen {
            Gen::E => &cop_e,
            Gen::K => &cop_k,
            Gen::F => &cop_f,
        };
        let next = coprods[pred].mul(g_cop, &h)?;
        coprods.push(next);
    }
    for (j, t) in coprods.into_iter().enumerate() {
        h.coprod[j] = t
            .terms
            .into_iter()
            .map(|((a, b), c)| (a, b, c))
            .collect();
    }

    // antipode and its inverse, as right-to-left products of the generator
    // images: S(x·g) = S(g)·S(x)
    let s_e = AlgElem::monomial(order, dim, (0 * l + (l - 1)) as usize * lu + 1, ctx.int(-1));
    let s_k = AlgElem::basis(order, dim, ((l - 1) * l) as usize);
    let s_f = AlgElem::monomial(order, dim, (lu * lu) + lu, ctx.int(-1));
    let si_e = AlgElem::monomial(
        order,
        dim,
        ((l - 1) * l) as usize + 1,
        ctx.q_pow(2).neg(),
    );
    let si_k = AlgElem::basis(order, dim, ((l - 1) * l) as usize);
    let si_f = AlgElem::monomial(order, dim, (lu * lu) + lu, ctx.q_pow(-2).neg());
    h.antipode[0] = h.unit.clone();
    h.antipode_inv[0] = h.unit.clone();
    for j in 1..dim {
        let (pred, gen) = decomp(j).unwrap();
        let (sg, sig) = match gen {
            Gen::E => (&s_e, &si_e),
            Gen::K => (&s_k, &si_k),
            Gen::F => (&s_f, &si_f),
        };
        h.antipode[j] = h.mult_elems(sg, &h.antipode[pred])?;
        h.antipode_inv[j] = h.mult_elems(sig, &h.antipode_inv[pred])?;
    }

    Ok(SmallQuantumSl2 {
        l,
        ctx,
        h,
        idx_e,
        idx_k,
        idx_f,
    })
}

/// The kernel-side data of the whole analysis for one l, shared by the CLI
/// commands, the examples and the acceptance suite.
pub struct Analysis {
    pub q: SmallQuantumSl2,
    pub center: Subspace,
    pub integrals: crate::hopf::Integrals,
    pub cointegrals: crate::hopf::Cointegrals,
    pub traces: crate::hopf::TraceSpaces,
    pub radford: crate::hopf::RadfordMaps,
    pub higman: Subspace,
    pub simples: Vec<ModuleRep>,
    pub blocks: crate::hopf::BlockData,
    pub rmatrix: crate::hopf::RMatrix,
    pub drinfeld: crate::hopf::DrinfeldMachinery,
    pub fourier: crate::hopf::Fourier,
    pub z_hc: Subspace,
}

impl Analysis {
    pub fn new(l: u64, extended_field: bool) -> Result<Analysis, EngineError> {
        let q = build_uqsl2(l, extended_field)?;
        let center = crate::hopf::center(&q.h)?;
        let integrals = crate::hopf::integrals(&q.h)?;
        let cointegrals = crate::hopf::cointegrals(&q.h, &integrals.left)?;
        let traces = crate::hopf::trace_spaces(&q.h)?;
        let radford = crate::hopf::radford_maps(&q.h, &cointegrals)?;
        let higman = crate::hopf::higman_ideal(&q.h, &integrals.left, &center)?;
        let simples = q.all_simples()?;
        let blocks = crate::hopf::blocks_and_cartan(&q.h, &simples, &center)?;
        let rmatrix = rmatrix::r_matrix(&q)?;
        let drinfeld = crate::hopf::drinfeld_machinery(&q.h, &rmatrix)?;
        let fourier = crate::hopf::fourier(&q.h, &drinfeld, &radford)?;
        let z_hc = crate::hopf::hc_center(
            &q.h,
            &drinfeld.j_l,
            &drinfeld.drinfeld,
            &simples,
            &traces.c_l,
            &center,
        )?;
        Ok(Analysis {
            q,
            center,
            integrals,
            cointegrals,
            traces,
            radford,
            higman,
            simples,
            blocks,
            rmatrix,
            drinfeld,
            fourier,
            z_hc,
        })
    }

    /// F(z_HC) as a subspace.
    pub fn fourier_of_hc(&self) -> Result<Subspace, EngineError> {
        crate::hopf::invariants::map_subspace(&self.fourier.f, &self.z_hc)
    }
}
