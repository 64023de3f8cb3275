use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SlopeError {
    /// The fiber polarization has no sections, so the section-count
    /// invariant is zero and the ratio is undefined.
    #[error("fiber polarization has no sections")]
    NoSections,

    /// Slope is a ratio over the pushforward degree.
    #[error("pushforward degree is zero, slope undefined")]
    ZeroPushforwardDegree,

    /// The check could not even be stated on this input.
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("unknown theorem id '{0}'")]
    UnknownTheorem(String),

    /// Twisting line bundle must have positive degree.
    #[error("twisting degree must be positive")]
    NonpositiveDegree,

    #[error("twist multiple must be nonnegative")]
    NegativeTwist,

    /// The log threshold data needs delta > 1 and C > 1.
    #[error("threshold parameters must exceed 1")]
    InvalidThreshold,

    /// q must clear the twist denominator for q H to be integral.
    #[error("q-twist is not an integral class")]
    NonIntegralTwist,

    /// q must satisfy q(C-1) >= 1.
    #[error("twist multiple q too small for the chosen threshold")]
    TwistTooSmall,

    /// Asymptotic threshold needs 2m > n + 1.
    #[error("degenerate denominator: need 2m > n + 1")]
    DegenerateDenominator,
}
