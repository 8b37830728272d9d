//! Exact tree-width with witness tree-decompositions, and brambles of order
//! `tw + 1` as matching lower-bound certificates.
//!
//! Vertices are `0..n` in the API and `1..=n` in files and on the command
//! line. All algorithms are deterministic: ties are broken by vertex id.
//!
//! ```
//! use twd::{duality_certificates, verify_bramble, verify_td, Graph, Limits};
//!
//! let g = Graph::grid(3, 3);
//! let cert = duality_certificates(&g, &Limits::default()).unwrap();
//! assert_eq!(cert.tw, 3);
//! assert_eq!(cert.order(), 4);
//! assert!(verify_td(&g, &cert.decomposition).is_ok());
//! assert!(verify_bramble(&g, &cert.bramble).is_ok());
//! ```

pub mod bramble;
pub mod cli;
pub mod decomposition;
pub mod duality;
pub mod format;
pub mod graph;
pub mod separation;
pub mod vertex_set;

pub use bramble::{
    find_covering_bag, min_cover, verify_bramble, Bramble, BrambleError, BrambleViolation, CoverLocation,
    CoverWitness,
};
pub use decomposition::{
    as_partial, glue, realize_flap, star_decomposition, verify_td, verify_td_on, DecompositionError, Flap,
    PartialDecomposition, TreeDecomposition, Violation,
};
pub use duality::{
    condition_i_holds, duality_certificates, extract_bramble, flap_universe, is_k_flap, minimalize,
    synthesize_bramble, treewidth, treewidth_dp_oracle, DualityCertificates, DualityError, FlapFamily,
    DP_ORACLE_MAX_N,
};
pub use format::{parse_br, parse_gr, parse_td, write_br, write_gr, write_td, FormatError};
pub use graph::{Graph, GraphError};
pub use separation::{
    merge_flaps_lemma1, min_xy_separator, restrict_to_side, DisjointPaths, MengerPath, Separation,
    SeparationError, Side,
};
pub use vertex_set::VertexSet;

/// Size guards for the exponential parts of the pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest graph for flap enumeration and [`treewidth`].
    pub universe_n: usize,
    /// Largest graph for [`minimalize`].
    pub minimalize_n: usize,
    /// Largest graph for [`min_cover`] (never above 64).
    pub cover_n: usize,
    /// Most bramble elements [`min_cover`] accepts, after dropping elements
    /// that contain another one.
    pub cover_elements: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            universe_n: 16,
            minimalize_n: 14,
            cover_n: 32,
            cover_elements: 64,
        }
    }
}

impl Limits {
    /// Raises or lowers every vertex-count guard to `n`.
    pub fn with_max_n(self, n: usize) -> Self {
        Self {
            universe_n: n,
            minimalize_n: n,
            cover_n: n,
            ..self
        }
    }

    pub(crate) fn check(&self, n: usize, limit: usize) -> Result<(), DualityError> {
        if n > limit {
            Err(DualityError::TooLarge { n, limit })
        } else {
            Ok(())
        }
    }
}
