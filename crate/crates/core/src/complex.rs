use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::index_set::IndexSet;

/// An abstract simplicial complex on vertex set `[n]`: a hereditary family
/// of nonempty index sets (conventionally the empty set is excluded).
///
/// Faces are kept in a `BTreeSet`, so iteration is in canonical
/// (cardinality, lex) order — in particular, level by level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: u32,
    faces: BTreeSet<IndexSet>,
}

impl SimplicialComplex {
    /// Builds a complex, verifying heredity: every facet of every face must
    /// itself be a face.
    pub fn new(n: u32, faces: BTreeSet<IndexSet>) -> Result<Self> {
        let c = Self::from_faces_unchecked(n, faces)?;
        if let Some((face, missing)) = c.heredity_violation() {
            return Err(Error::InvalidInput(format!(
                "not hereditary: {} is a face but its subset {} is not",
                face, missing
            )));
        }
        Ok(c)
    }

    /// Builds a complex without the heredity check. Intended for callers
    /// that construct hereditary families by construction, and for feeding
    /// deliberately broken inputs to the structural audits.
    pub fn from_faces_unchecked(n: u32, faces: BTreeSet<IndexSet>) -> Result<Self> {
        for f in &faces {
            if f.is_empty() {
                return Err(Error::InvalidInput("complexes exclude the empty face".into()));
            }
            if f.max_label() > n {
                return Err(Error::InvalidInput(format!(
                    "face {} mentions a label above n = {}",
                    f, n
                )));
            }
        }
        Ok(SimplicialComplex { n, faces })
    }

    /// The downward closure of a single set: the full simplex on its
    /// members. Exponential in `|top|`.
    pub fn closure_of(n: u32, top: &IndexSet) -> Result<Self> {
        Self::from_faces_unchecked(n, top.nonempty_subsets().into_iter().collect())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, face: &IndexSet) -> bool {
        self.faces.contains(face)
    }

    /// Faces in (cardinality, lex) order.
    pub fn faces(&self) -> impl Iterator<Item = &IndexSet> {
        self.faces.iter()
    }

    pub fn max_face_size(&self) -> usize {
        self.faces.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    /// First (face, missing facet) pair breaking heredity, if any.
    pub fn heredity_violation(&self) -> Option<(IndexSet, IndexSet)> {
        for face in &self.faces {
            if face.len() < 2 {
                continue;
            }
            for v in face.iter() {
                let facet = face.without(v);
                if !self.faces.contains(&facet) {
                    return Some((face.clone(), facet));
                }
            }
        }
        None
    }

    pub fn is_hereditary(&self) -> bool {
        self.heredity_violation().is_none()
    }

    /// Faces of the subcomplex induced by `tau` (faces contained in `tau`).
    pub fn induced_faces<'a>(&'a self, tau: &'a IndexSet) -> impl Iterator<Item = &'a IndexSet> {
        self.faces.iter().filter(move |f| f.is_subset_of(tau))
    }

    /// Euler characteristic in the crate's empty-set-free convention:
    /// χ = Σ_{σ} (−1)^{|σ|+1}.
    pub fn euler_characteristic(&self) -> BigInt {
        let mut chi = BigInt::from(0);
        for f in &self.faces {
            if f.len() % 2 == 1 {
                chi += 1;
            } else {
                chi -= 1;
            }
        }
        chi
    }
}
