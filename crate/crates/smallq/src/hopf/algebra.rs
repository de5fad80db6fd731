//! Structure-tensor presentation of a finite-dimensional Hopf algebra and the
//! element/functional types that live over it.

use crate::cyc::CycNum;
use crate::error::EngineError;
use crate::linalg::{Mat, SparseRow};

/// A sparse element Σ c_i e_i of the algebra; terms sorted by basis index,
/// no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgElem {
    pub dim: usize,
    pub order: u64,
    pub terms: Vec<(usize, CycNum)>,
}

impl AlgElem {
    pub fn zero(order: u64, dim: usize) -> Self {
        AlgElem {
            dim,
            order,
            terms: vec![],
        }
    }

    pub fn basis(order: u64, dim: usize, i: usize) -> Self {
        AlgElem {
            dim,
            order,
            terms: vec![(i, CycNum::one(order))],
        }
    }

    pub fn monomial(order: u64, dim: usize, i: usize, c: CycNum) -> Self {
        if c.is_zero() {
            return Self::zero(order, dim);
        }
        AlgElem {
            dim,
            order,
            terms: vec![(i, c)],
        }
    }

    pub fn from_terms(order: u64, dim: usize, mut terms: Vec<(usize, CycNum)>) -> Self {
        terms.retain(|(_, c)| !c.is_zero());
        terms.sort_by_key(|(i, _)| *i);
        // merge duplicates
        let mut merged: Vec<(usize, CycNum)> = Vec::with_capacity(terms.len());
        for (i, c) in terms {
            match merged.last_mut() {
                Some((j, acc)) if *j == i => {
                    *acc = acc.add(&c).unwrap();
                }
                _ => merged.push((i, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        AlgElem {
            dim,
            order,
            terms: merged,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: usize) -> CycNum {
        match self.terms.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(pos) => self.terms[pos].1.clone(),
            Err(_) => CycNum::zero(self.order),
        }
    }

    pub fn add(&self, other: &AlgElem) -> Result<AlgElem, EngineError> {
        if self.dim != other.dim {
            return Err(EngineError::ShapeMismatch("AlgElem add".into()));
        }
        let mut out: Vec<(usize, CycNum)> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            match (self.terms.get(i), other.terms.get(j)) {
                (Some((a, va)), Some((b, vb))) => {
                    if a < b {
                        out.push((*a, va.clone()));
                        i += 1;
                    } else if b < a {
                        out.push((*b, vb.clone()));
                        j += 1;
                    } else {
                        let v = va.add(vb)?;
                        if !v.is_zero() {
                            out.push((*a, v));
                        }
                        i += 1;
                        j += 1;
                    }
                }
                (Some((a, va)), None) => {
                    out.push((*a, va.clone()));
                    i += 1;
                }
                (None, Some((b, vb))) => {
                    out.push((*b, vb.clone()));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Ok(AlgElem {
            dim: self.dim,
            order: self.order,
            terms: out,
        })
    }

    pub fn sub(&self, other: &AlgElem) -> Result<AlgElem, EngineError> {
        self.add(&other.scale_neg())
    }

    fn scale_neg(&self) -> AlgElem {
        AlgElem {
            dim: self.dim,
            order: self.order,
            terms: self.terms.iter().map(|(i, c)| (*i, c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &CycNum) -> Result<AlgElem, EngineError> {
        if c.is_zero() {
            return Ok(AlgElem::zero(self.order, self.dim));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (i, v) in &self.terms {
            let w = v.mul(c)?;
            if !w.is_zero() {
                terms.push((*i, w));
            }
        }
        Ok(AlgElem {
            dim: self.dim,
            order: self.order,
            terms,
        })
    }

    pub fn as_sparse_row(&self) -> SparseRow {
        self.terms.clone()
    }

    pub fn from_sparse_row(order: u64, dim: usize, row: &SparseRow) -> AlgElem {
        AlgElem::from_terms(order, dim, row.clone())
    }

    pub fn to_dense(&self) -> Vec<CycNum> {
        let mut v = vec![CycNum::zero(self.order); self.dim];
        for (i, c) in &self.terms {
            v[*i] = c.clone();
        }
        v
    }
}

/// A linear functional on the algebra, stored densely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional {
    pub order: u64,
    pub values: Vec<CycNum>,
}

impl Functional {
    pub fn zero(order: u64, dim: usize) -> Self {
        Functional {
            order,
            values: vec![CycNum::zero(order); dim],
        }
    }

    pub fn eval(&self, x: &AlgElem) -> Result<CycNum, EngineError> {
        let mut acc = CycNum::zero(self.order);
        for (i, c) in &x.terms {
            acc = acc.add(&self.values[*i].mul(c)?)?;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &CycNum) -> Result<Functional, EngineError> {
        let mut values = Vec::with_capacity(self.values.len());
        for v in &self.values {
            values.push(v.mul(c)?);
        }
        Ok(Functional {
            order: self.order,
            values,
        })
    }

    pub fn as_sparse_row(&self) -> SparseRow {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect()
    }
}

/// Complete structure tensors of a finite-dimensional Hopf algebra over
/// Q(ζ_order). `mult` is the full n×n table of basis products (flat, row
/// major), `coprod[i]` lists (j, k, c) with Δ(e_i) = Σ c·e_j⊗e_k.
///
/// `generators`, when present, is an algebra generating set among the basis,
/// and `word_decomp[i] = (pred, gen)` expresses e_i = e_pred·e_gen exactly;
/// the axiom checker uses these for complete verification in O(n²·|gens|)
/// instead of O(n³).
pub struct HopfData {
    pub dim: usize,
    pub order: u64,
    pub labels: Vec<String>,
    pub mult: Vec<AlgElem>,
    pub unit: AlgElem,
    pub coprod: Vec<Vec<(usize, usize, CycNum)>>,
    pub counit: Vec<CycNum>,
    /// S(e_i) for each basis element.
    pub antipode: Vec<AlgElem>,
    /// S⁻¹(e_i) for each basis element.
    pub antipode_inv: Vec<AlgElem>,
    pub generators: Option<Vec<usize>>,
    pub word_decomp: Vec<Option<(usize, usize)>>,
}

impl HopfData {
    pub fn basis_product(&self, i: usize, j: usize) -> &AlgElem {
        &self.mult[i * self.dim + j]
    }

    /// e_i · x for a basis index i.
    pub fn mult_basis_elem(&self, i: usize, x: &AlgElem) -> Result<AlgElem, EngineError> {
        let mut acc = AlgElem::zero(self.order, self.dim);
        for (q, c) in &x.terms {
            acc = acc.add(&self.basis_product(i, *q).scale(c)?)?;
        }
        Ok(acc)
    }

    /// x · e_j for a basis index j.
    pub fn mult_elem_basis(&self, x: &AlgElem, j: usize) -> Result<AlgElem, EngineError> {
        let mut acc = AlgElem::zero(self.order, self.dim);
        for (p, c) in &x.terms {
            acc = acc.add(&self.basis_product(*p, j).scale(c)?)?;
        }
        Ok(acc)
    }

    pub fn mult_elems(&self, x: &AlgElem, y: &AlgElem) -> Result<AlgElem, EngineError> {
        let mut acc = AlgElem::zero(self.order, self.dim);
        for (p, cp) in &x.terms {
            for (q, cq) in &y.terms {
                let c = cp.mul(cq)?;
                acc = acc.add(&self.basis_product(*p, *q).scale(&c)?)?;
            }
        }
        Ok(acc)
    }

    pub fn apply_antipode(&self, x: &AlgElem) -> Result<AlgElem, EngineError> {
        let mut acc = AlgElem::zero(self.order, self.dim);
        for (i, c) in &x.terms {
            acc = acc.add(&self.antipode[*i].scale(c)?)?;
        }
        Ok(acc)
    }

    pub fn apply_antipode_inv(&self, x: &AlgElem) -> Result<AlgElem, EngineError> {
        let mut acc = AlgElem::zero(self.order, self.dim);
        for (i, c) in &x.terms {
            acc = acc.add(&self.antipode_inv[*i].scale(c)?)?;
        }
        Ok(acc)
    }

    pub fn counit_of(&self, x: &AlgElem) -> Result<CycNum, EngineError> {
        let mut acc = CycNum::zero(self.order);
        for (i, c) in &x.terms {
            acc = acc.add(&self.counit[*i].mul(c)?)?;
        }
        Ok(acc)
    }

    /// Δ(x) as a sparse tensor in H⊗H.
    pub fn coprod_of(&self, x: &AlgElem) -> Result<Vec<(usize, usize, CycNum)>, EngineError> {
        let mut map: std::collections::BTreeMap<(usize, usize), CycNum> =
            std::collections::BTreeMap::new();
        for (i, c) in &x.terms {
            for (j, k, w) in &self.coprod[*i] {
                let v = w.mul(c)?;
                if v.is_zero() {
                    continue;
                }
                match map.entry((*j, *k)) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let s = e.get().add(&v)?;
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(v);
                    }
                }
            }
        }
        Ok(map.into_iter().map(|((j, k), c)| (j, k, c)).collect())
    }

    /// Left-multiplication matrix of a basis element: column k = e_i·e_k.
    pub fn left_mult_basis(&self, i: usize) -> Mat {
        let mut m = Mat::zero(self.order, self.dim, self.dim);
        for k in 0..self.dim {
            for (j, c) in &self.basis_product(i, k).terms {
                m.data[*j].push((k, c.clone()));
            }
        }
        for row in &mut m.data {
            row.sort_by_key(|(c, _)| *c);
        }
        m
    }

    /// Right-multiplication matrix of a basis element: column k = e_k·e_i.
    pub fn right_mult_basis(&self, i: usize) -> Mat {
        let mut m = Mat::zero(self.order, self.dim, self.dim);
        for k in 0..self.dim {
            for (j, c) in &self.basis_product(k, i).terms {
                m.data[*j].push((k, c.clone()));
            }
        }
        for row in &mut m.data {
            row.sort_by_key(|(c, _)| *c);
        }
        m
    }

    pub fn left_mult_elem(&self, x: &AlgElem) -> Result<Mat, EngineError> {
        let mut acc = Mat::zero(self.order, self.dim, self.dim);
        for (i, c) in &x.terms {
            acc = acc.add(&self.left_mult_basis(*i).scale(c)?)?;
        }
        Ok(acc)
    }

    pub fn right_mult_elem(&self, x: &AlgElem) -> Result<Mat, EngineError> {
        let mut acc = Mat::zero(self.order, self.dim, self.dim);
        for (i, c) in &x.terms {
            acc = acc.add(&self.right_mult_basis(*i).scale(c)?)?;
        }
        Ok(acc)
    }

    /// The antipode as a matrix acting on coordinate columns.
    pub fn antipode_matrix(&self) -> Mat {
        let mut m = Mat::zero(self.order, self.dim, self.dim);
        for (i, img) in self.antipode.iter().enumerate() {
            for (j, c) in &img.terms {
                m.data[*j].push((i, c.clone()));
            }
        }
        for row in &mut m.data {
            row.sort_by_key(|(c, _)| *c);
        }
        m
    }

    pub fn antipode_inv_matrix(&self) -> Mat {
        let mut m = Mat::zero(self.order, self.dim, self.dim);
        for (i, img) in self.antipode_inv.iter().enumerate() {
            for (j, c) in &img.terms {
                m.data[*j].push((i, c.clone()));
            }
        }
        for row in &mut m.data {
            row.sort_by_key(|(c, _)| *c);
        }
        m
    }

    /// Indices used for axiom checking: the declared generators, or every
    /// basis element when none are declared.
    pub fn generating_set(&self) -> Vec<usize> {
        match &self.generators {
            Some(g) => g.clone(),
            None => (0..self.dim).collect(),
        }
    }

    /// The index of the basis element equal to the unit, when the unit is a
    /// single basis vector (true for all algebras built in this crate).
    pub fn unit_index(&self) -> Option<usize> {
        if self.unit.terms.len() == 1 && self.unit.terms[0].1.is_one() {
            Some(self.unit.terms[0].0)
        } else {
            None
        }
    }
}

/// A finite-dimensional module given by the action of each basis element of
/// the Hopf algebra; built from generator matrices and extended through the
/// word decomposition.
pub struct ModuleRep {
    pub mdim: usize,
    pub order: u64,
    /// action[i] = matrix of e_i on the module.
    pub action: Vec<Mat>,
}

impl ModuleRep {
    /// Extend generator matrices to the whole basis along word_decomp.
    pub fn from_generators(
        h: &HopfData,
        mdim: usize,
        gen_action: &[(usize, Mat)],
    ) -> Result<ModuleRep, EngineError> {
        let mut action: Vec<Option<Mat>> = vec![None; h.dim];
        let unit = h
            .unit_index()
            .ok_or_else(|| EngineError::StructureCheck("unit is not a basis vector".into()))?;
        action[unit] = Some(Mat::identity(h.order, mdim));
        for (g, m) in gen_action {
            if m.rows != mdim || m.cols != mdim {
                return Err(EngineError::ShapeMismatch("generator action".into()));
            }
            action[*g] = Some(m.clone());
        }
        // resolve in dependency order; word_decomp predecessors always have
        // smaller resolution depth, so a fixed-point sweep terminates
        let mut remaining: Vec<usize> = (0..h.dim).filter(|i| action[*i].is_none()).collect();
        while !remaining.is_empty() {
            let mut progressed = false;
            let mut next_remaining = Vec::new();
            for i in remaining {
                let Some((pred, gen)) = h.word_decomp[i] else {
                    return Err(EngineError::StructureCheck(format!(
                        "basis element {i} has no word decomposition and no given action"
                    )));
                };
                match (&action[pred], &action[gen]) {
                    (Some(a), Some(b)) => {
                        action[i] = Some(a.mul(b)?);
                        progressed = true;
                    }
                    _ => next_remaining.push(i),
                }
            }
            if !progressed {
                return Err(EngineError::StructureCheck(
                    "module action not resolvable from generators".into(),
                ));
            }
            remaining = next_remaining;
        }
        Ok(ModuleRep {
            mdim,
            order: h.order,
            action: action.into_iter().map(|m| m.unwrap()).collect(),
        })
    }

    pub fn act_elem(&self, x: &AlgElem) -> Result<Mat, EngineError> {
        let mut acc = Mat::zero(self.order, self.mdim, self.mdim);
        for (i, c) in &x.terms {
            acc = acc.add(&self.action[*i].scale(c)?)?;
        }
        Ok(acc)
    }

    /// Check the action respects every stored basis product (an exhaustive
    /// homomorphism test, feasible for small module dimensions).
    pub fn verify_homomorphism(&self, h: &HopfData) -> Result<(), EngineError> {
        for i in 0..h.dim {
            for j in h.generating_set() {
                let lhs = self.action[i].mul(&self.action[j])?;
                let rhs = self.act_elem(h.basis_product(i, j))?;
                if lhs != rhs {
                    return Err(EngineError::StructureCheck(format!(
                        "module action fails multiplicativity at basis pair ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The trace character h ↦ Tr ρ(h), as a functional.
    pub fn character(&self, h: &HopfData) -> Result<Functional, EngineError> {
        let mut values = Vec::with_capacity(h.dim);
        for i in 0..h.dim {
            values.push(self.action[i].trace()?);
        }
        Ok(Functional {
            order: h.order,
            values,
        })
    }

    /// Shifted character h ↦ Tr(ρ(t)·ρ(h)) for a shift element t.
    pub fn shifted_character(
        &self,
        h: &HopfData,
        shift: &AlgElem,
    ) -> Result<Functional, EngineError> {
        let t = self.act_elem(shift)?;
        let mut values = Vec::with_capacity(h.dim);
        for i in 0..h.dim {
            values.push(t.mul(&self.action[i])?.trace()?);
        }
        Ok(Functional {
            order: h.order,
            values,
        })
    }

    /// Dimension of the endomorphism algebra commuting with the action of
    /// the given generator set.
    pub fn endomorphism_dim(&self, h: &HopfData) -> Result<usize, EngineError> {
        let gens = h.generating_set();
        let pairs: Vec<(Mat, Mat)> = gens
            .iter()
            .map(|g| (self.action[*g].clone(), self.action[*g].clone()))
            .collect();
        Ok(crate::hopf::blocks::hom_space_from_actions(self.order, self.mdim, self.mdim, &pairs)?
            .dim())
    }
}
