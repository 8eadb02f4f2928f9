use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use super::components::{ascending_multiplicities, stratum_table, Descriptor};
use crate::constructions::EigenSpec;
use crate::error::{Error, Result};

/// `S^dim_j`: the `j`-th stratum of dimension `dim`, counted by source.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StratumLabel {
    pub dim: usize,
    pub j: usize,
}

impl fmt::Display for StratumLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S^{}_{}", self.dim, self.j)
    }
}

impl Serialize for StratumLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledStratum {
    pub label: StratumLabel,
    pub source: usize,
    pub sink: usize,
    pub descriptor: Descriptor,
}

/// All nonempty strata, labelled, ordered by decreasing dimension then `j`.
pub fn strata_diagram(spec: &EigenSpec) -> Result<Vec<LabeledStratum>> {
    let mut by_dim: BTreeMap<usize, Vec<(usize, usize, Descriptor)>> = BTreeMap::new();
    for s in stratum_table(spec)? {
        let d = s.descriptor.expect("nonempty strata carry a descriptor");
        by_dim.entry(d.dimension()).or_default().push((s.source, s.sink, d));
    }
    let mut out = Vec::new();
    for (dim, mut group) in by_dim.into_iter().rev() {
        group.sort_by_key(|g| (g.0, g.1));
        for (pos, (source, sink, descriptor)) in group.into_iter().enumerate() {
            out.push(LabeledStratum { label: StratumLabel { dim, j: pos + 1 }, source, sink, descriptor });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeafStratum {
    pub dim: usize,
    pub double_equator: bool,
    pub label: StratumLabel,
    pub source: usize,
    pub sink: usize,
}

/// `S^(k-1)`-bundle over `RP^(k-1)` arising when `A^2 = -Id`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BundleLeafSpace {
    pub k: usize,
    pub base_dim: usize,
    pub fiber_dim: usize,
    pub total_dim: usize,
    pub base_orientable: bool,
    /// Known nontrivial because the base is nonorientable.
    pub nontrivial: bool,
    /// Pullback along `S^(k-1) -> RP^(k-1)`.
    pub pullback_base_dim: usize,
    pub pullback_simply_connected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LeafSpace {
    Strata { n: usize, i: usize, strata: Vec<LeafStratum> },
    Bundle(BundleLeafSpace),
}

impl LeafSpace {
    pub fn strata(&self) -> &[LeafStratum] {
        match self {
            LeafSpace::Strata { strata, .. } => strata,
            LeafSpace::Bundle(_) => &[],
        }
    }

    pub fn dimensions(&self) -> Vec<usize> {
        self.strata().iter().map(|s| s.dim).collect()
    }
}

impl fmt::Display for LeafSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LeafSpace::Strata { strata, .. } => {
                let parts: Vec<String> = strata.iter().map(|s| format!("S^{}", s.dim)).collect();
                f.write_str(&parts.join(" u "))
            }
            LeafSpace::Bundle(b) => write!(
                f,
                "S^{} bundle over RP^{} (dimension {})",
                b.fiber_dim, b.base_dim, b.total_dim
            ),
        }
    }
}

fn c_i_spec(n: usize, i: usize) -> Result<EigenSpec> {
    if i == 0 || i > n.div_ceil(2) {
        return Err(Error::Parameter(format!(
            "i must lie in 1..={} for n = {n}, got {i}",
            n.div_ceil(2)
        )));
    }
    EigenSpec::c_i(n, i)
}

fn mirror(m: usize, source: usize, sink: usize) -> (usize, usize) {
    (m + 1 - sink, m + 1 - source)
}

/// Leaf space of the flow of `C_i` on `RP^n`: the strata fixed by the
/// weight reversal, of dimensions `n-1, n-3, ...`.
pub fn leaf_space(n: usize, i: usize) -> Result<LeafSpace> {
    let spec = c_i_spec(n, i)?;
    let m = spec.len();
    let strata = strata_diagram(&spec)?
        .into_iter()
        .filter(|s| mirror(m, s.source, s.sink) == (s.source, s.sink))
        .map(|s| LeafStratum {
            dim: s.label.dim,
            double_equator: s.label.dim > 0,
            label: s.label,
            source: s.source,
            sink: s.sink,
        })
        .collect();
    Ok(LeafSpace::Strata { n, i, strata })
}

/// Action of the involution on the labelled strata diagram of `C_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrataInvolution {
    pub n: usize,
    pub i: usize,
    /// `(S, tau(S))` for every stratum, in diagram order.
    pub images: Vec<(StratumLabel, StratumLabel)>,
    /// Swapped pairs, each listed once.
    pub pairs: Vec<(StratumLabel, StratumLabel)>,
    pub fixed: Vec<StratumLabel>,
}

impl StrataInvolution {
    pub fn apply(&self, label: StratumLabel) -> Option<StratumLabel> {
        self.images.iter().find(|(s, _)| *s == label).map(|(_, t)| *t)
    }
}

pub fn involution_on_strata(n: usize, i: usize) -> Result<StrataInvolution> {
    let spec = c_i_spec(n, i)?;
    let m = spec.len();
    let diagram = strata_diagram(&spec)?;
    let lookup: BTreeMap<(usize, usize), StratumLabel> =
        diagram.iter().map(|s| ((s.source, s.sink), s.label)).collect();
    let mut images = Vec::with_capacity(diagram.len());
    let mut pairs = Vec::new();
    let mut fixed = Vec::new();
    for s in &diagram {
        let image = *lookup
            .get(&mirror(m, s.source, s.sink))
            .ok_or_else(|| Error::Spec("weight reversal does not preserve the diagram".into()))?;
        images.push((s.label, image));
        if image == s.label {
            fixed.push(s.label);
        } else if s.label < image {
            pairs.push((s.label, image));
        }
    }
    Ok(StrataInvolution { n, i, images, pairs, fixed })
}

pub fn bundle_leaf_space(k: usize) -> Result<LeafSpace> {
    if k < 3 {
        return Err(Error::Parameter(format!("the bundle case needs k >= 3, got {k}")));
    }
    let base_dim = k - 1;
    let fiber_dim = k - 1;
    let base_orientable = base_dim % 2 == 1;
    Ok(LeafSpace::Bundle(BundleLeafSpace {
        k,
        base_dim,
        fiber_dim,
        total_dim: base_dim + fiber_dim,
        base_orientable,
        nontrivial: !base_orientable,
        pullback_base_dim: base_dim,
        // pi_1 of fiber and base both vanish once both spheres have dimension >= 2
        pullback_simply_connected: base_dim >= 2 && fiber_dim >= 2,
    }))
}

/// Multiplicity profile of `C_i`, ascending.
pub fn c_i_multiplicities(n: usize, i: usize) -> Result<Vec<usize>> {
    Ok(ascending_multiplicities(&c_i_spec(n, i)?))
}
