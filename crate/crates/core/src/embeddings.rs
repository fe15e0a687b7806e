//! Primitive embeddings of even binary lattices into `U + U`, and through the
//! hyperbolic block of `L`, with Smith-form certificates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::binforms::BinaryEvenForm;
use crate::error::{Error, Result};
use crate::lattices::{self, GramMatrix};
use crate::linalg;
use crate::quadfield::{self, QuadField};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingWitness {
    pub ambient: GramMatrix,
    /// Images of the basis, in ambient coordinates; the order is the
    /// orientation.
    pub vectors: Vec<Vec<BigInt>>,
    pub gram_check: GramMatrix,
    pub primitive: bool,
}

impl EmbeddingWitness {
    fn build(ambient: GramMatrix, vectors: Vec<Vec<BigInt>>) -> Result<Self> {
        let gram_check = ambient.restrict(&vectors)?;
        let primitive = verify_primitive(&ambient, &vectors)?;
        Ok(Self {
            ambient,
            vectors,
            gram_check,
            primitive,
        })
    }
}

/// `x1 = e + a f`, `x2 = b f + e' + c f'` in `U + U` with bases `(e, f)`,
/// `(e', f')`: `x1^2 = 2a`, `x2^2 = 2c`, `x1 x2 = b`.
#[allow(non_snake_case)]
pub fn embed_even_binary_in_U2(f: &BinaryEvenForm) -> Result<EmbeddingWitness> {
    if f.det().is_zero() {
        return Err(Error::Degenerate);
    }
    let z = BigInt::zero;
    let one = BigInt::one;
    let x1 = vec![one(), f.a.clone(), z(), z()];
    let x2 = vec![z(), f.b.clone(), one(), f.c.clone()];
    let u = lattices::hyperbolic_plane();
    EmbeddingWitness::build(lattices::direct_sum(&u, &u), vec![x1, x2])
}

/// The trace-form lattice of `O_K`, embedded in `U + U` and then in `L`
/// through its first hyperbolic block.
pub fn embed_trace_form(k: &QuadField) -> Result<EmbeddingWitness> {
    let form = BinaryEvenForm::from_gram(&quadfield::trace_form_gram(k))?;
    let inner = embed_even_binary_in_U2(&form)?;
    let l = lattices::l_lattice();
    let vectors = inner
        .vectors
        .iter()
        .map(|v| {
            let mut w = vec![BigInt::zero(); l.rank()];
            for (i, x) in v.iter().enumerate() {
                w[lattices::L_HYPERBOLIC_OFFSET + i] = x.clone();
            }
            w
        })
        .collect();
    EmbeddingWitness::build(l, vectors)
}

/// Whether the vectors span a primitive sublattice: every invariant factor
/// of their coordinate matrix equals one.
pub fn verify_primitive(ambient: &GramMatrix, vectors: &[Vec<BigInt>]) -> Result<bool> {
    if vectors.is_empty() || vectors.iter().any(|v| v.len() != ambient.rank()) {
        return Err(Error::Shape);
    }
    let inv = linalg::smith_invariants(&vectors.to_vec());
    if inv.iter().any(|x| x.is_zero()) {
        return Err(Error::Dependent);
    }
    Ok(inv.iter().all(|x| x.is_one()))
}

/// Rational splitting of the ambient lattice along an embedded sublattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanCheck {
    pub complement: GramMatrix,
    pub image_det: BigInt,
    pub complement_det: BigInt,
    /// `[ambient : image + complement]^2`.
    pub index_squared: BigInt,
}

impl SpanCheck {
    pub fn index_is_square(&self) -> bool {
        let r = self.index_squared.sqrt();
        &r * &r == self.index_squared
    }
}

/// Orthogonal complement of the embedded lattice and the determinant
/// identity `det(T) det(T^perp) = [A : T + T^perp]^2 det(A)`.
pub fn span_check(w: &EmbeddingWitness) -> Result<SpanCheck> {
    let basis = lattices::complement_basis(&w.ambient, &w.vectors)?;
    let complement = w.ambient.restrict(&basis)?;
    let image_det = w.gram_check.determinant();
    let complement_det = complement.determinant();
    let total = &image_det * &complement_det;
    let amb = w.ambient.determinant();
    if amb.is_zero() || !total.is_multiple_of(&amb) {
        return Err(Error::InvalidArgument(
            "determinant product not divisible by ambient determinant".into(),
        ));
    }
    let index_squared = (total / amb).abs();
    Ok(SpanCheck {
        complement,
        image_det,
        complement_det,
        index_squared,
    })
}
