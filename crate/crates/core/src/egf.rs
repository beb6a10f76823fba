//! Truncated power series over exact rationals.
//!
//! A [`TruncatedSeries`] stores ordinary coefficients `u_0..=u_N`. An
//! exponential generating function of the integer sequence `a_n` is stored
//! with `u_n = a_n / n!`; [`term`] recovers `a_n` and checks integrality.
//!
//! Products require equal orders. Nothing is extended or truncated
//! implicitly.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{as_integer, binomial, factorial, BigInt, ExactRational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EgfError {
    #[error("series orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("term sequences differ in length ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("a series needs at least one coefficient")]
    Empty,
    #[error("index {index} is beyond the series order {order}")]
    IndexBeyondOrder { index: usize, order: usize },
    #[error("term {index} is not an integer: n! * [x^n] = {value}")]
    NonIntegralTerm { index: usize, value: String },
    #[error("pole multiplicity must be at least 1")]
    ZeroMultiplicity,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<ExactRational>,
}

/// Integer term sequence `a_0, a_1, ...` of an exponential generating function.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TermSequence(pub Vec<BigInt>);

impl TermSequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.0
    }

    /// The constant sequence `1, 1, ..., 1`.
    pub fn ones(len: usize) -> Self {
        TermSequence(vec![BigInt::one(); len])
    }
}

impl From<Vec<BigInt>> for TermSequence {
    fn from(v: Vec<BigInt>) -> Self {
        TermSequence(v)
    }
}

impl<T: Into<BigInt>> FromIterator<T> for TermSequence {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        TermSequence(iter.into_iter().map(Into::into).collect())
    }
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<ExactRational>) -> Result<Self, EgfError> {
        if coeffs.is_empty() {
            return Err(EgfError::Empty);
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![ExactRational::zero(); order + 1] }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Option<&ExactRational> {
        self.coeffs.get(n)
    }

    /// Coefficientwise sum.
    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, EgfError> {
        check_orders(self, other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TruncatedSeries { coeffs })
    }
}

fn check_orders(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<(), EgfError> {
    if a.order() != b.order() {
        return Err(EgfError::OrderMismatch { left: a.order(), right: b.order() });
    }
    Ok(())
}

/// EGF of a term sequence: `coeffs[n] = terms[n] / n!`.
pub fn from_terms(terms: &TermSequence) -> Result<TruncatedSeries, EgfError> {
    if terms.is_empty() {
        return Err(EgfError::Empty);
    }
    let coeffs = terms
        .0
        .iter()
        .enumerate()
        .map(|(n, a)| ExactRational::new(a.clone(), factorial(n)))
        .collect();
    Ok(TruncatedSeries { coeffs })
}

/// Cauchy product `w_n = sum_{k=0}^{n} u_k v_{n-k}` at the common order.
pub fn cauchy_product(
    a: &TruncatedSeries,
    b: &TruncatedSeries,
) -> Result<TruncatedSeries, EgfError> {
    check_orders(a, b)?;
    let order = a.order();
    let mut coeffs = vec![ExactRational::zero(); order + 1];
    for (i, u) in a.coeffs.iter().enumerate() {
        if u.is_zero() {
            continue;
        }
        for (j, v) in b.coeffs[..=order - i].iter().enumerate() {
            if !v.is_zero() {
                coeffs[i + j] += u * v;
            }
        }
    }
    Ok(TruncatedSeries { coeffs })
}

/// Binomial convolution `c_n = sum_{k=0}^{n} C(n, k) a_k b_{n-k}`, the term
/// sequence of the product of two EGFs.
pub fn binomial_convolution(
    a: &TermSequence,
    b: &TermSequence,
) -> Result<TermSequence, EgfError> {
    if a.len() != b.len() {
        return Err(EgfError::LengthMismatch { left: a.len(), right: b.len() });
    }
    let terms = (0..a.len())
        .map(|n| {
            (0..=n)
                .map(|k| binomial(n, k) * &a.0[k] * &b.0[n - k])
                .sum::<BigInt>()
        })
        .collect();
    Ok(TermSequence(terms))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `e^{x}` or `e^{-x}` through `x^order`.
pub fn series_exp(sign: Sign, order: usize) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|n| {
            let numer = match sign {
                Sign::Minus if n % 2 == 1 => -BigInt::one(),
                _ => BigInt::one(),
            };
            ExactRational::new(numer, factorial(n))
        })
        .collect();
    TruncatedSeries { coeffs }
}

/// `1/(1 - m x)^p` through `x^order`: `coeffs[n] = C(n+p-1, p-1) m^n`.
pub fn series_reciprocal_pole(
    m: impl Into<BigInt>,
    p: usize,
    order: usize,
) -> Result<TruncatedSeries, EgfError> {
    if p == 0 {
        return Err(EgfError::ZeroMultiplicity);
    }
    let m = m.into();
    let mut power = BigInt::one();
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        coeffs.push(ExactRational::from_integer(binomial(n + p - 1, p - 1) * &power));
        power *= &m;
    }
    Ok(TruncatedSeries { coeffs })
}

/// Multiplication by `x^r` at fixed order.
pub fn series_shift(a: &TruncatedSeries, r: usize) -> TruncatedSeries {
    let order = a.order();
    let coeffs = (0..=order)
        .map(|n| if n < r { ExactRational::zero() } else { a.coeffs[n - r].clone() })
        .collect();
    TruncatedSeries { coeffs }
}

/// `x^r e^{-x} / (1-x)^{r+1}`, the EGF of `D_r(n)`.
pub fn egf_r_derangement(r: usize, order: usize) -> TruncatedSeries {
    let pole = series_reciprocal_pole(1, r + 1, order).expect("multiplicity r + 1 >= 1");
    let product = cauchy_product(&series_exp(Sign::Minus, order), &pole)
        .expect("operands share the order");
    series_shift(&product, r)
}

/// `e^{-x} / (1-2x)`, the EGF of `D^B(n)`.
pub fn egf_b_derangement(order: usize) -> TruncatedSeries {
    let pole = series_reciprocal_pole(2, 1, order).expect("multiplicity 1");
    cauchy_product(&series_exp(Sign::Minus, order), &pole).expect("operands share the order")
}

/// `n! [x^n] a`, required to be an integer.
pub fn term(a: &TruncatedSeries, n: usize) -> Result<BigInt, EgfError> {
    let coeff = a
        .coeff(n)
        .ok_or(EgfError::IndexBeyondOrder { index: n, order: a.order() })?;
    let scaled = coeff * ExactRational::from_integer(factorial(n));
    as_integer(&scaled).ok_or_else(|| EgfError::NonIntegralTerm {
        index: n,
        value: format!("{}/{}", scaled.numer(), scaled.denom()),
    })
}

/// Every term `n! [x^n] a` for `n <= order`.
pub fn to_terms(a: &TruncatedSeries) -> Result<TermSequence, EgfError> {
    (0..=a.order()).map(|n| term(a, n)).collect::<Result<Vec<_>, _>>().map(TermSequence)
}
