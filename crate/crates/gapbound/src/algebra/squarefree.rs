//! Squarefree decomposition and gcd-free refinement.
//!
//! Both operations produce the monic squarefree building blocks that place
//! clusters are made of: `squarefree_decomposition` separates a polynomial
//! by root multiplicity, `coprime_refine` splits a family of squarefree
//! polynomials into pairwise coprime factors.

use crate::algebra::Polynomial;
use crate::error::{Error, Result};

/// Yun's algorithm over a field of characteristic zero.
///
/// Returns `(p_i, m_i)` with the `p_i` monic, squarefree, pairwise coprime
/// and the `m_i` strictly increasing, such that the input equals
/// `lc * prod p_i^{m_i}`. Constants decompose into the empty product.
pub fn squarefree_decomposition(p: &Polynomial) -> Result<Vec<(Polynomial, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(Vec::new());
    }
    let f = p.monic();
    let fd = f.derivative();
    let a0 = f.gcd(&fd);
    let mut out = Vec::new();
    // b holds the product of the remaining squarefree parts, d the running
    // difference whose gcd with b isolates the multiplicity-i part.
    let mut b = f.divrem(&a0)?.0;
    let mut d = &fd.divrem(&a0)?.0 - &b.derivative();
    let mut i = 1u32;
    while !b.is_constant() {
        let a = b.gcd(&d);
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        b = b.divrem(&a)?.0;
        let c = d.divrem(&a)?.0;
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(out)
}

/// Radical: the product of the distinct squarefree parts, monic.
pub fn radical(p: &Polynomial) -> Result<Polynomial> {
    let mut r = Polynomial::one();
    for (q, _) in squarefree_decomposition(p)? {
        r = &r * &q;
    }
    Ok(r)
}

/// Refines monic squarefree nonconstant polynomials into a gcd-free basis:
/// the outputs are pairwise coprime, monic, squarefree, and every input is a
/// product of outputs.
pub fn coprime_refine(polys: &[Polynomial]) -> Result<Vec<Polynomial>> {
    for p in polys {
        if p.is_constant() || !p.is_monic() || !p.is_squarefree() {
            return Err(Error::InvalidCluster(format!(
                "coprime_refine input must be monic squarefree nonconstant, got {p}"
            )));
        }
    }
    let mut basis: Vec<Polynomial> = Vec::new();
    for p in polys {
        let mut q = p.clone();
        let mut i = 0;
        while i < basis.len() && !q.is_constant() {
            let g = q.gcd(&basis[i]);
            if g.is_constant() {
                i += 1;
                continue;
            }
            if g != basis[i] {
                // split basis[i] into g and the complement
                let rest = basis[i].divrem(&g)?.0;
                basis[i] = g.clone();
                basis.insert(i + 1, rest);
            }
            // q is squarefree, so one division removes the shared part
            q = q.divrem(&g)?.0;
            i += 1;
        }
        if !q.is_constant() {
            basis.push(q);
        }
    }
    Ok(basis)
}
