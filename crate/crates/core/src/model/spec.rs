use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{BilinearForm, LinMap, Scalar, Tensor2};

use super::tables::{ActionTable, CoprodTable, MulTable};

/// Actions of the algebra on a second space, plus maps on or out of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub dim: usize,
    pub actions: BTreeMap<String, ActionTable>,
    /// Square maps on the carrier (e.g. `theta`) or maps carrier -> algebra (e.g. `T`).
    pub maps: BTreeMap<String, LinMap>,
}

impl Representation {
    pub fn new(dim: usize) -> Self {
        Representation {
            dim,
            actions: BTreeMap::new(),
            maps: BTreeMap::new(),
        }
    }

    pub fn with_action(mut self, name: &str, a: ActionTable) -> Self {
        self.actions.insert(name.to_string(), a);
        self
    }

    pub fn with_map(mut self, name: &str, m: LinMap) -> Self {
        self.maps.insert(name.to_string(), m);
        self
    }

    pub fn action(&self, name: &str) -> Result<&ActionTable> {
        self.actions.get(name).ok_or_else(|| Error::missing(name))
    }
}

/// A based space of dimension `dim` with named structure maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub dim: usize,
    pub basis: Option<Vec<String>>,
    pub weight: Scalar,
    pub ops: BTreeMap<String, MulTable>,
    pub coprods: BTreeMap<String, CoprodTable>,
    pub maps: BTreeMap<String, LinMap>,
    pub forms: BTreeMap<String, BilinearForm>,
    pub tensors: BTreeMap<String, Tensor2>,
    pub rep: Option<Representation>,
}

impl AlgebraSpec {
    pub fn new(dim: usize) -> Self {
        AlgebraSpec {
            dim,
            basis: None,
            weight: Scalar::zero(),
            ops: BTreeMap::new(),
            coprods: BTreeMap::new(),
            maps: BTreeMap::new(),
            forms: BTreeMap::new(),
            tensors: BTreeMap::new(),
            rep: None,
        }
    }

    pub fn with_weight(mut self, w: Scalar) -> Self {
        self.weight = w;
        self
    }

    pub fn with_op(mut self, name: &str, t: MulTable) -> Self {
        self.ops.insert(name.to_string(), t);
        self
    }

    pub fn with_coprod(mut self, name: &str, t: CoprodTable) -> Self {
        self.coprods.insert(name.to_string(), t);
        self
    }

    pub fn with_map(mut self, name: &str, m: LinMap) -> Self {
        self.maps.insert(name.to_string(), m);
        self
    }

    pub fn with_form(mut self, name: &str, b: BilinearForm) -> Self {
        self.forms.insert(name.to_string(), b);
        self
    }

    pub fn with_tensor(mut self, name: &str, r: Tensor2) -> Self {
        self.tensors.insert(name.to_string(), r);
        self
    }

    pub fn with_rep(mut self, rep: Representation) -> Self {
        self.rep = Some(rep);
        self
    }

    pub fn op(&self, name: &str) -> Result<&MulTable> {
        self.ops.get(name).ok_or_else(|| Error::missing(name))
    }

    pub fn coprod(&self, name: &str) -> Result<&CoprodTable> {
        self.coprods.get(name).ok_or_else(|| Error::missing(name))
    }

    pub fn map(&self, name: &str) -> Result<&LinMap> {
        self.maps.get(name).ok_or_else(|| Error::missing(name))
    }

    pub fn form(&self, name: &str) -> Result<&BilinearForm> {
        self.forms.get(name).ok_or_else(|| Error::missing(name))
    }

    pub fn tensor(&self, name: &str) -> Result<&Tensor2> {
        self.tensors.get(name).ok_or_else(|| Error::missing(name))
    }

    pub fn representation(&self) -> Result<&Representation> {
        self.rep.as_ref().ok_or_else(|| Error::missing("rep"))
    }

    /// `prec + succ` when stored, else derived entrywise.
    pub fn circ(&self) -> Result<MulTable> {
        if let Some(c) = self.ops.get("circ") {
            return Ok(c.clone());
        }
        Ok(self.op("prec")? + self.op("succ")?)
    }

    /// Checks that every member agrees with the declared dimensions.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim;
        let bad = |what: &str, name: &str, detail: String| {
            Err(Error::DimensionMismatch(format!("{what} {name:?}: {detail}")))
        };
        if let Some(b) = &self.basis {
            if b.len() != n {
                return bad("basis", "labels", format!("{} labels for dim {n}", b.len()));
            }
        }
        for (name, t) in &self.ops {
            if t.dim() != n {
                return bad("op", name, format!("dim {} != {n}", t.dim()));
            }
        }
        for (name, t) in &self.coprods {
            if t.dim() != n {
                return bad("coprod", name, format!("dim {} != {n}", t.dim()));
            }
        }
        for (name, m) in &self.maps {
            if m.rows() != n || m.cols() != n {
                return bad("map", name, format!("{}x{} on dim {n}", m.rows(), m.cols()));
            }
        }
        for (name, f) in &self.forms {
            if f.dim() != n {
                return bad("form", name, format!("dim {} != {n}", f.dim()));
            }
        }
        for (name, r) in &self.tensors {
            if r.dim() != n {
                return bad("tensor", name, format!("dim {} != {n}", r.dim()));
            }
        }
        if let Some(rep) = &self.rep {
            let m = rep.dim;
            for (name, a) in &rep.actions {
                if a.acting_dim() != n || a.carrier_dim() != m {
                    return bad(
                        "action",
                        name,
                        format!("{}x{} for algebra {n}, carrier {m}", a.acting_dim(), a.carrier_dim()),
                    );
                }
            }
            for (name, t) in &rep.maps {
                if t.cols() != m || (t.rows() != m && t.rows() != n) {
                    return bad("rep map", name, format!("{}x{}", t.rows(), t.cols()));
                }
            }
        }
        Ok(())
    }
}
