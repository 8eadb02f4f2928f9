//! The flow `exp(tz) x` on `RP^n` for a diagonal generator: fixed components,
//! flowline strata, leaf spaces, and the interval quotient obstruction.

mod components;
mod leaf;
mod limits;
mod star;

pub use components::{
    fixed_components, flowline_stratum, stratum_table, ComponentKind, Descriptor, FixedComponent,
    FlowlineStratum,
};
pub use leaf::{
    bundle_leaf_space, c_i_multiplicities, involution_on_strata, leaf_space, strata_diagram,
    BundleLeafSpace, LabeledStratum, LeafSpace, LeafStratum, StrataInvolution, StratumLabel,
};
pub use limits::{
    analytic_limits, compare_limits, default_horizon, float_weights, numeric_limits,
    numeric_limits_with, random_support_point, Limits, NumericLimits, DOMINANCE_TOLERANCE,
    SUPPORT_THRESHOLD,
};
pub use star::{interval_quotient, invariant_embedding_obstruction, IntervalStar};
