use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field size p^k does not fit in 64 bits")]
    FieldTooLarge,
    #[error("field size {q} exceeds the exp/log table limit {limit}; enable the untabled fallback to go larger")]
    TableLimitExceeded { q: u64, limit: u64 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("modulus is not a monic irreducible polynomial of the expected degree")]
    InvalidModulus,
    #[error("element encoding {enc} is out of range for a field of size {q}")]
    EncodingOutOfRange { enc: u64, q: u64 },
    #[error("elements belong to different fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("square roots via the Frobenius map need characteristic 2, this field has characteristic {0}")]
    OddCharacteristic(u64),
    #[error("division by the zero polynomial")]
    ZeroPolynomialDivision,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("exact division left a nonzero remainder")]
    InexactDivision,
    #[error("length {n} is not coprime to the field size {q}")]
    NotCoprime { n: usize, q: u64 },
    #[error("no embedding of a field of size {base} into a field of size {ext}: {reason}")]
    EmbeddingUnavailable { base: u64, ext: u64, reason: String },
    #[error("coefficient {enc} does not lie in the image of the base field (embedding inconsistency)")]
    CoefficientOutsideBaseField { enc: u64 },
    #[error("extension field of size {ext_q} has no primitive {n}-th root of unity")]
    NoRootsOfUnity { n: usize, ext_q: u64 },
    #[error("defining set is all of Z_{0}; the code is zero and has no distance bound")]
    ZeroCodeDefiningSet(usize),
    #[error("generator polynomial does not divide x^{0} - 1")]
    NotAGenerator(usize),
    #[error("message length {got} does not match code dimension {want}")]
    LengthMismatch { got: usize, want: usize },
    #[error("dimension {dim} is larger than length {n}")]
    DimensionTooLarge { dim: usize, n: usize },
    #[error("designed distance ({num} / {mu}) is not a positive integer >= 2")]
    DegenerateDelta { num: u64, mu: u64 },
    #[error("mu = {mu} does not divide q^m - 1 = {qm1}")]
    NotADivisor { mu: u64, qm1: u64 },
    #[error("m = {0} must be odd unless an explicit designed distance is supplied")]
    EvenExtensionDegree(u32),
    #[error("code is not dual-containing{0}")]
    NotDualContaining(String),
    #[error("no nonzero element with square -1 exists in a field of size {q} (q = 3 mod 4)")]
    NoLambda { q: u64 },
    #[error("lambda = {lambda} does not satisfy lambda^2 = -1")]
    InvalidLambda { lambda: u64 },
    #[error("construction verification failed: {0}")]
    VerificationFailed(String),
    #[error("family bound violated: computed lower bound {computed} is below the claimed bound {claimed}")]
    FamilyBoundViolated { computed: usize, claimed: f64 },
    #[error("enumeration of {count} codewords exceeds the budget of {budget}")]
    BudgetExceeded { count: u128, budget: u64 },
    #[error("code has no nonzero codewords")]
    ZeroCode,
    #[error("transform produced a negative or non-integral coefficient (invalid enumerator)")]
    NonIntegralTransform,
    #[error("weight count does not fit in 64 bits")]
    CountOverflow,
    #[error("integer overflow in gcd identity computation")]
    GcdOverflow,
    #[error("gcd identity mismatch for q={q}, a={a}, b={b}: computed {computed}, closed form {expected}")]
    GcdIdentityMismatch {
        q: u64,
        a: u32,
        b: u32,
        computed: u128,
        expected: u128,
    },
    #[error("closed-form extremal bounds exist for q in {{2, 3}}, got {0}")]
    UnsupportedExtremalField(u64),
    #[error("extremal bound needs an even length, got {0}")]
    OddLength(usize),
    #[error("invalid code file: {0}")]
    InvalidCodeFile(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-parsable identifier, used on the CLI's stderr lines.
    pub fn code(&self) -> &'static str {
        use Error::*;
        match self {
            NotPrime(_) => "not_prime",
            ZeroDegree => "zero_degree",
            FieldTooLarge => "field_too_large",
            TableLimitExceeded { .. } => "table_limit_exceeded",
            NotPrimePower(_) => "not_prime_power",
            InvalidModulus => "invalid_modulus",
            EncodingOutOfRange { .. } => "encoding_out_of_range",
            MixedFields => "mixed_fields",
            DivisionByZero => "division_by_zero",
            OddCharacteristic(_) => "odd_characteristic",
            ZeroPolynomialDivision => "zero_polynomial_division",
            ZeroConstantTerm => "zero_constant_term",
            InexactDivision => "inexact_division",
            NotCoprime { .. } => "not_coprime",
            EmbeddingUnavailable { .. } => "embedding_unavailable",
            CoefficientOutsideBaseField { .. } => "coefficient_outside_base_field",
            NoRootsOfUnity { .. } => "no_roots_of_unity",
            ZeroCodeDefiningSet(_) => "zero_code_defining_set",
            NotAGenerator(_) => "not_a_generator",
            LengthMismatch { .. } => "length_mismatch",
            DimensionTooLarge { .. } => "dimension_too_large",
            DegenerateDelta { .. } => "delta_not_integer",
            NotADivisor { .. } => "mu_not_a_divisor",
            EvenExtensionDegree(_) => "even_extension_degree",
            NotDualContaining(_) => "not_dual_containing",
            NoLambda { .. } => "no_lambda",
            InvalidLambda { .. } => "invalid_lambda",
            VerificationFailed(_) => "verification_failed",
            FamilyBoundViolated { .. } => "family_bound_violated",
            BudgetExceeded { .. } => "budget_exceeded",
            ZeroCode => "zero_code",
            NonIntegralTransform => "non_integral_transform",
            CountOverflow => "count_overflow",
            GcdOverflow => "gcd_overflow",
            GcdIdentityMismatch { .. } => "gcd_identity_mismatch",
            UnsupportedExtremalField(_) => "unsupported_extremal_field",
            OddLength(_) => "odd_length",
            InvalidCodeFile(_) => "invalid_code_file",
            Json(_) => "json",
            Io(_) => "io",
        }
    }
}
