//! Configured size limits for the exhaustive algorithms.
//!
//! Defaults can be raised or lowered through the environment: `RIBBON_MAX_EDGES`
//! overrides every edge-count limit and `RIBBON_MAX_K` overrides the colour
//! bound used by valuation counting.

/// The exhaustive computations guarded by a size limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    /// Largest edge count accepted by `enumerate`.
    EnumerateEdges,
    /// Largest edge count accepted by orbit enumeration.
    OrbitEdges,
    /// Largest edge count accepted by 3^e state sums.
    StateSumEdges,
    /// Largest edge count accepted by 2^e subset expansions.
    SubsetEdges,
    /// Largest vertex count accepted by cycle-family enumeration (6^v states).
    CycleFamilyVertices,
    /// Largest edge count accepted by valuation counting (k^(2e) colourings).
    ValuationEdges,
    /// Largest number of colours accepted by valuation counting.
    ValuationColours,
}

impl Bound {
    fn default_value(self) -> usize {
        match self {
            Bound::EnumerateEdges => 4,
            Bound::OrbitEdges => 6,
            Bound::StateSumEdges => 10,
            Bound::SubsetEdges => 14,
            Bound::CycleFamilyVertices => 6,
            Bound::ValuationEdges => 4,
            Bound::ValuationColours => 5,
        }
    }

    fn env_var(self) -> &'static str {
        match self {
            Bound::ValuationColours => "RIBBON_MAX_K",
            _ => "RIBBON_MAX_EDGES",
        }
    }
}

/// Current limit for `bound`, honouring the environment override when it parses.
pub fn limit(bound: Bound) -> usize {
    std::env::var(bound.env_var())
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or_else(|| bound.default_value())
}

/// Fails with [`crate::Error::BoundExceeded`] when `value` exceeds the limit.
pub(crate) fn check(bound: Bound, what: &'static str, value: usize) -> crate::Result<()> {
    let lim = limit(bound);
    if value > lim {
        return Err(crate::Error::BoundExceeded {
            what,
            value,
            limit: lim,
        });
    }
    Ok(())
}
