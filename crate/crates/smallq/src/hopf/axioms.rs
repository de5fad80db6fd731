//! Hopf-axiom verification for structure-tensor data.
//!
//! Two regimes: with a declared generating set the checks run over basis ×
//! generator pairs, which is complete because every basis element carries an
//! exact word decomposition e = e'·g (verified here first); without one, the
//! checker enumerates all pairs/triples.

use crate::cyc::CycNum;
use crate::error::EngineError;
use crate::hopf::algebra::{AlgElem, HopfData};
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub struct AxiomCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    fn push(&mut self, name: &str, pass: bool, detail: String) {
        self.checks.push(AxiomCheck {
            name: name.to_string(),
            pass,
            detail,
        });
    }
}

fn tensor_mul(
    h: &HopfData,
    a: &[(usize, usize, CycNum)],
    b: &[(usize, usize, CycNum)],
) -> Result<Vec<(usize, usize, CycNum)>, EngineError> {
    let mut map: BTreeMap<(usize, usize), CycNum> = BTreeMap::new();
    for (j1, k1, c1) in a {
        for (j2, k2, c2) in b {
            let c = c1.mul(c2)?;
            let left = h.basis_product(*j1, *j2);
            let right = h.basis_product(*k1, *k2);
            for (jl, cl) in &left.terms {
                for (kr, cr) in &right.terms {
                    let v = c.mul(cl)?.mul(cr)?;
                    if v.is_zero() {
                        continue;
                    }
                    let e = map.entry((*jl, *kr)).or_insert_with(|| CycNum::zero(h.order));
                    *e = e.add(&v)?;
                }
            }
        }
    }
    map.retain(|_, v| !v.is_zero());
    Ok(map.into_iter().map(|((j, k), c)| (j, k, c)).collect())
}

/// Full report on the Hopf axioms. Any failure names the offending basis
/// element or pair.
pub fn verify_hopf_axioms(h: &HopfData) -> Result<AxiomReport, EngineError> {
    let mut report = AxiomReport { checks: vec![] };
    let n = h.dim;
    let gens = h.generating_set();
    let generator_mode = h.generators.is_some();

    // 0. word decomposition consistency (required for generator-mode
    //    completeness): e_i = e_pred·e_gen exactly.
    if generator_mode {
        let mut ok = true;
        let mut detail = String::from("every basis element is a product chain of generators");
        for i in 0..n {
            match h.word_decomp[i] {
                Some((pred, g)) => {
                    let prod = h.basis_product(pred, g);
                    if prod.terms.len() != 1 || prod.terms[0].0 != i || !prod.terms[0].1.is_one() {
                        ok = false;
                        detail = format!("word decomposition of basis {i} is not exact");
                        break;
                    }
                    if !gens.contains(&g) {
                        ok = false;
                        detail = format!("word decomposition of basis {i} uses a non-generator");
                        break;
                    }
                }
                None => {
                    if h.unit_index() != Some(i) {
                        ok = false;
                        detail = format!("basis {i} lacks a word decomposition");
                        break;
                    }
                }
            }
        }
        report.push("word-decomposition", ok, detail);
    }

    // 1. unit laws
    {
        let mut ok = true;
        let mut detail = String::from("1·e = e·1 = e");
        for i in 0..n {
            let left = h.mult_elems(&h.unit, &AlgElem::basis(h.order, n, i))?;
            let right = h.mult_elems(&AlgElem::basis(h.order, n, i), &h.unit)?;
            let e = AlgElem::basis(h.order, n, i);
            if left != e || right != e {
                ok = false;
                detail = format!("unit law fails at basis {i}");
                break;
            }
        }
        report.push("unit", ok, detail);
    }

    // 2. associativity
    {
        let mut ok = true;
        let mut detail;
        if generator_mode {
            detail = format!("(e_i·e_j)·g = e_i·(e_j·g) over all {n}×{n} pairs and generators");
            'outer: for i in 0..n {
                for j in 0..n {
                    let ij = h.basis_product(i, j);
                    for g in &gens {
                        let lhs = h.mult_elem_basis(ij, *g)?;
                        let jg = h.basis_product(j, *g);
                        let rhs = h.mult_basis_elem(i, jg)?;
                        if lhs != rhs {
                            ok = false;
                            detail = format!("associativity fails at ({i}, {j}, gen {g})");
                            break 'outer;
                        }
                    }
                }
            }
        } else {
            detail = format!("(e_i·e_j)·e_k = e_i·(e_j·e_k) over all {n}³ triples");
            'outer2: for i in 0..n {
                for j in 0..n {
                    let ij = h.basis_product(i, j);
                    for k in 0..n {
                        let lhs = h.mult_elem_basis(ij, k)?;
                        let jk = h.basis_product(j, k);
                        let rhs = h.mult_basis_elem(i, jk)?;
                        if lhs != rhs {
                            ok = false;
                            detail = format!("associativity fails at ({i}, {j}, {k})");
                            break 'outer2;
                        }
                    }
                }
            }
        }
        report.push("associativity", ok, detail);
    }

    // 3. counit laws: (ε⊗id)Δ = id = (id⊗ε)Δ, and ε is an algebra map
    {
        let mut ok = true;
        let mut detail = String::from("counit laws and multiplicativity");
        for i in 0..n {
            let mut left = AlgElem::zero(h.order, n);
            let mut right = AlgElem::zero(h.order, n);
            for (j, k, c) in &h.coprod[i] {
                left = left.add(&AlgElem::monomial(h.order, n, *k, c.mul(&h.counit[*j])?))?;
                right = right.add(&AlgElem::monomial(h.order, n, *j, c.mul(&h.counit[*k])?))?;
            }
            let e = AlgElem::basis(h.order, n, i);
            if left != e || right != e {
                ok = false;
                detail = format!("counit law fails at basis {i}");
                break;
            }
        }
        if ok {
            let pairs: Vec<(usize, usize)> = if generator_mode {
                (0..n)
                    .flat_map(|i| gens.iter().map(move |g| (i, *g)))
                    .collect()
            } else {
                (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
            };
            for (i, j) in pairs {
                let prod_eps = h.counit_of(h.basis_product(i, j))?;
                let eps_prod = h.counit[i].mul(&h.counit[j])?;
                if prod_eps != eps_prod {
                    ok = false;
                    detail = format!("ε(ab) ≠ ε(a)ε(b) at ({i}, {j})");
                    break;
                }
            }
        }
        report.push("counit", ok, detail);
    }

    // 4. coassociativity: (Δ⊗id)Δ = (id⊗Δ)Δ on every basis element
    {
        let mut ok = true;
        let mut detail = String::from("(Δ⊗id)Δ = (id⊗Δ)Δ on all basis elements");
        for i in 0..n {
            let mut lhs: BTreeMap<(usize, usize, usize), CycNum> = BTreeMap::new();
            let mut rhs: BTreeMap<(usize, usize, usize), CycNum> = BTreeMap::new();
            for (j, k, c) in &h.coprod[i] {
                for (a, b, w) in &h.coprod[*j] {
                    let v = c.mul(w)?;
                    let e = lhs.entry((*a, *b, *k)).or_insert_with(|| CycNum::zero(h.order));
                    *e = e.add(&v)?;
                }
                for (a, b, w) in &h.coprod[*k] {
                    let v = c.mul(w)?;
                    let e = rhs.entry((*j, *a, *b)).or_insert_with(|| CycNum::zero(h.order));
                    *e = e.add(&v)?;
                }
            }
            lhs.retain(|_, v| !v.is_zero());
            rhs.retain(|_, v| !v.is_zero());
            if lhs != rhs {
                ok = false;
                detail = format!("coassociativity fails at basis {i}");
                break;
            }
        }
        report.push("coassociativity", ok, detail);
    }

    // 5. bialgebra compatibility: Δ(ab) = Δ(a)Δ(b), Δ(1) = 1⊗1
    {
        let mut ok = true;
        let mut detail = String::from("Δ multiplicative");
        let unit_cop = h.coprod_of(&h.unit)?;
        let expected_unit: Vec<(usize, usize, CycNum)> = {
            let mut m: BTreeMap<(usize, usize), CycNum> = BTreeMap::new();
            for (a, ca) in &h.unit.terms {
                for (b, cb) in &h.unit.terms {
                    let v = ca.mul(cb)?;
                    let e = m.entry((*a, *b)).or_insert_with(|| CycNum::zero(h.order));
                    *e = e.add(&v)?;
                }
            }
            m.retain(|_, v| !v.is_zero());
            m.into_iter().map(|((a, b), c)| (a, b, c)).collect()
        };
        if unit_cop != expected_unit {
            ok = false;
            detail = "Δ(1) ≠ 1⊗1".into();
        }
        if ok {
            let pairs: Vec<(usize, usize)> = if generator_mode {
                (0..n)
                    .flat_map(|i| gens.iter().map(move |g| (i, *g)))
                    .collect()
            } else {
                (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
            };
            for (i, j) in pairs {
                let d_prod = h.coprod_of(h.basis_product(i, j))?;
                let prod_d = tensor_mul(h, &h.coprod[i], &h.coprod[j])?;
                if d_prod != prod_d {
                    ok = false;
                    detail = format!("Δ(ab) ≠ Δ(a)Δ(b) at ({i}, {j})");
                    break;
                }
            }
        }
        report.push("bialgebra", ok, detail);
    }

    // 6. antipode axiom: Σ h₁S(h₂) = Σ S(h₁)h₂ = ε(h)·1
    {
        let mut ok = true;
        let mut detail = String::from("Σ h₁S(h₂) = Σ S(h₁)h₂ = ε(h)·1");
        for i in 0..n {
            let mut lhs = AlgElem::zero(h.order, n);
            let mut rhs = AlgElem::zero(h.order, n);
            for (j, k, c) in &h.coprod[i] {
                let sk = &h.antipode[*k];
                let sj = &h.antipode[*j];
                lhs = lhs.add(&h.mult_basis_elem(*j, sk)?.scale(c)?)?;
                rhs = rhs.add(&h.mult_elem_basis(sj, *k)?.scale(c)?)?;
            }
            let target = h.unit.scale(&h.counit[i])?;
            if lhs != target || rhs != target {
                ok = false;
                detail = format!("antipode axiom fails at basis {i}");
                break;
            }
        }
        report.push("antipode", ok, detail);
    }

    // 7. antipode inverse: S∘S⁻¹ = S⁻¹∘S = id
    {
        let mut ok = true;
        let mut detail = String::from("S∘S⁻¹ = id");
        for i in 0..n {
            let a = h.apply_antipode(&h.antipode_inv[i])?;
            let b = h.apply_antipode_inv(&h.antipode[i])?;
            let e = AlgElem::basis(h.order, n, i);
            if a != e || b != e {
                ok = false;
                detail = format!("antipode inverse fails at basis {i}");
                break;
            }
        }
        report.push("antipode-inverse", ok, detail);
    }

    Ok(report)
}
