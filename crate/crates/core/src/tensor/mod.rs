//! Structure tensors derived from the Cayley tables: the diagonal metric
//! gamma, the totally antisymmetric b, its rank-4 dual B via the 7-index
//! Levi-Civita symbol, and the exhaustive identity suite over them.

mod epsilon;
mod identity;
mod metric;
mod structure;

pub use epsilon::{epsilon7, permutation_sign, signed_permutations};
pub use identity::{verify_identity, IdentityCheck, IdentityId, ReadingReport};
pub use metric::{metric_from_table, Metric};
pub use structure::{
    dual_tensor, duality_round_trip_sign, jacobian_tensor_check, structure_tensor_from_table,
    unified_product_crosscheck, JacobianTensorReport, Tensor3, Tensor4, TensorError,
    UnifiedProductReport,
};
