use crate::field::{Elem, Field};
use crate::linalg::Mat;
use crate::symplectic::SymplecticSpace;

use super::cyclic::CyclicPair;
use super::jordan::jordan_block;

/// Collects Darboux blocks: `u` columns, dual columns `w'` with
/// `σ(u_i, w'_j) = δ_ij`, and the matrix of the operator on each `u` block.
#[derive(Default)]
pub(crate) struct Assembly {
    us: Vec<Vec<Elem>>,
    ws: Vec<Vec<Elem>>,
    blocks: Vec<Mat>,
}

impl Assembly {
    /// Chains of `A - λ`. A pair carries `σ(w_i, u_j) = δ_ij`, so its `w`
    /// vectors enter `C` negated; the chain relations are unaffected.
    pub(crate) fn push_pairs(&mut self, field: &Field, lambda: &Elem, pairs: &[CyclicPair]) {
        for p in pairs {
            self.us.extend(p.u.iter().cloned());
            self.ws
                .extend(p.w.iter().map(|v| v.iter().map(|x| field.neg(x)).collect()));
            self.blocks.push(jordan_block(field, lambda, p.degree()));
        }
    }

    pub(crate) fn push_block(&mut self, us: Vec<Vec<Elem>>, ws: Vec<Vec<Elem>>, b: Mat) {
        self.us.extend(us);
        self.ws.extend(ws);
        self.blocks.push(b);
    }

    pub(crate) fn finish(self, space: &SymplecticSpace) -> (Mat, Mat) {
        let f = space.field();
        let cols: Vec<Vec<Elem>> = self.us.into_iter().chain(self.ws).collect();
        (
            Mat::from_columns(f, space.dim(), &cols),
            Mat::block_diag(f, &self.blocks),
        )
    }
}
