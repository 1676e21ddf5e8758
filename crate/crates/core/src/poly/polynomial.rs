use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::monomial::{ExponentMatrix, VarIndex};
use super::Rational;
use crate::error::{Error, Result};

/// A polynomial in the entries of a `rows x cols` matrix of indeterminates with
/// exact rational coefficients.
///
/// Terms are kept sorted by the lexicographic monomial order, largest first,
/// and never carry a zero coefficient, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    dims: (usize, usize),
    terms: Vec<(ExponentMatrix, Rational)>,
}

impl Polynomial {
    pub fn zero(dims: (usize, usize)) -> Self {
        Polynomial {
            dims,
            terms: Vec::new(),
        }
    }

    pub fn constant(dims: (usize, usize), c: Rational) -> Self {
        Polynomial::monomial(ExponentMatrix::zeros(dims.0, dims.1), c)
    }

    pub fn one(dims: (usize, usize)) -> Self {
        Polynomial::constant(dims, Rational::one())
    }

    pub fn variable(var: &VarIndex) -> Self {
        Polynomial::monomial(ExponentMatrix::variable(var), Rational::one())
    }

    pub fn monomial(exp: ExponentMatrix, coeff: Rational) -> Self {
        let dims = exp.dims();
        let terms = if coeff.is_zero() {
            Vec::new()
        } else {
            vec![(exp, coeff)]
        };
        Polynomial { dims, terms }
    }

    /// Collects terms, merging repeated monomials and dropping zeros.
    pub fn from_terms<I>(dims: (usize, usize), terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentMatrix, Rational)>,
    {
        let mut acc: BTreeMap<ExponentMatrix, Rational> = BTreeMap::new();
        for (exp, c) in terms {
            if exp.dims() != dims {
                return Err(Error::DimensionMismatch {
                    expected: dims,
                    found: exp.dims(),
                });
            }
            *acc.entry(exp).or_insert_with(Rational::zero) += c;
        }
        Ok(Polynomial::from_map(dims, acc))
    }

    pub(crate) fn from_map(dims: (usize, usize), map: BTreeMap<ExponentMatrix, Rational>) -> Self {
        let terms = map.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Polynomial { dims, terms }
    }

    pub(crate) fn to_map(&self) -> BTreeMap<ExponentMatrix, Rational> {
        self.terms.iter().cloned().collect()
    }

    pub fn dims(&self) -> (usize, usize) {
        self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing monomial order.
    pub fn terms(&self) -> &[(ExponentMatrix, Rational)] {
        &self.terms
    }

    pub fn coefficient(&self, exp: &ExponentMatrix) -> Rational {
        self.terms
            .iter()
            .find(|(e, _)| e == exp)
            .map_or_else(Rational::zero, |(_, c)| c.clone())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(e, _)| e.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.iter().map(|(e, _)| e.degree());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    fn check_dims(&self, other: &Self) -> Result<()> {
        if self.dims != other.dims {
            return Err(Error::DimensionMismatch {
                expected: self.dims,
                found: other.dims,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        let mut acc = self.to_map();
        for (e, c) in &other.terms {
            *acc.entry(e.clone()).or_insert_with(Rational::zero) += c;
        }
        Ok(Polynomial::from_map(self.dims, acc))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            dims: self.dims,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero(self.dims);
        }
        Polynomial {
            dims: self.dims,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        let mut acc: BTreeMap<ExponentMatrix, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.mul(eb)?;
                *acc.entry(e).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Ok(Polynomial::from_map(self.dims, acc))
    }

    /// `c * x^exp * self`.
    pub fn mul_term(&self, exp: &ExponentMatrix, c: &Rational) -> Result<Self> {
        if exp.dims() != self.dims {
            return Err(Error::DimensionMismatch {
                expected: self.dims,
                found: exp.dims(),
            });
        }
        if c.is_zero() {
            return Ok(Polynomial::zero(self.dims));
        }
        // Multiplying by a monomial preserves the order of terms.
        let terms = self
            .terms
            .iter()
            .map(|(e, x)| Ok((e.mul(exp)?, x * c)))
            .collect::<Result<_>>()?;
        Ok(Polynomial {
            dims: self.dims,
            terms,
        })
    }

    pub fn pow(&self, exponent: u32) -> Result<Self> {
        let mut out = Polynomial::one(self.dims);
        for _ in 0..exponent {
            out = out.multiply(self)?;
        }
        Ok(out)
    }

    /// The lex-largest term as `(coefficient, monomial)`.
    pub fn leading_term(&self) -> Result<(Rational, ExponentMatrix)> {
        self.terms
            .first()
            .map(|(e, c)| (c.clone(), e.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Result<&ExponentMatrix> {
        self.terms.first().map(|(e, _)| e).ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_coefficient(&self) -> Result<&Rational> {
        self.terms.first().map(|(_, c)| c).ok_or(Error::ZeroPolynomial)
    }

    /// Rescales so the leading coefficient is 1.
    pub fn monic(&self) -> Result<Self> {
        let lc = self.leading_coefficient()?.clone();
        Ok(self.scale(&lc.recip()))
    }

    /// Sum of coefficients, i.e. evaluation at the all-ones matrix.
    pub fn coefficient_sum(&self) -> Rational {
        self.terms.iter().map(|(_, c)| c.clone()).sum()
    }
}

/// `S(f, g) = (L / lt(f)) f - (L / lt(g)) g` with `L` the lcm of the leading
/// monomials; leading terms include their coefficients.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.check_dims(g)?;
    let (cf, lf) = f.leading_term()?;
    let (cg, lg) = g.leading_term()?;
    let lcm = lf.lcm(&lg)?;
    let mf = lcm.checked_div(&lf).expect("lcm is divisible by each argument");
    let mg = lcm.checked_div(&lg).expect("lcm is divisible by each argument");
    let left = f.mul_term(&mf, &cf.recip())?;
    let right = g.mul_term(&mg, &cg.recip())?;
    left.sub(&right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn x(r: usize, c: usize) -> Polynomial {
        Polynomial::variable(&VarIndex::new(r, c, (2, 2)).unwrap())
    }

    fn mono(rows: &[&[u32]]) -> ExponentMatrix {
        ExponentMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn additive_inverse_vanishes() {
        let p = x(1, 1).add(&x(2, 2).scale(&q(3))).unwrap();
        assert!(p.add(&p.scale(&q(-1))).unwrap().is_zero());
    }

    #[test]
    fn square_of_variable() {
        let sq = x(1, 1).multiply(&x(1, 1)).unwrap();
        assert_eq!(sq.terms(), &[(mono(&[&[2, 0], &[0, 0]]), q(1))]);
    }

    #[test]
    fn difference_of_squares() {
        let a = x(1, 1).add(&x(1, 2)).unwrap();
        let b = x(1, 1).sub(&x(1, 2)).unwrap();
        let expected = x(1, 1).pow(2).unwrap().sub(&x(1, 2).pow(2).unwrap()).unwrap();
        assert_eq!(a.multiply(&b).unwrap(), expected);
        assert_eq!(expected.len(), 2);
    }

    #[test]
    fn leading_terms() {
        let f = Polynomial::from_terms(
            (2, 2),
            [
                (mono(&[&[1, 1], &[1, 0]]), q(4)),
                (mono(&[&[2, 0], &[0, 1]]), q(2)),
            ],
        )
        .unwrap();
        assert_eq!(f.leading_term().unwrap(), (q(2), mono(&[&[2, 0], &[0, 1]])));
        let c = Polynomial::constant((2, 2), q(5));
        assert_eq!(c.leading_term().unwrap(), (q(5), ExponentMatrix::zeros(2, 2)));
        assert_eq!(
            Polynomial::zero((2, 2)).leading_term(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn s_polynomial_basics() {
        let f = x(1, 1).add(&x(2, 2)).unwrap();
        assert!(s_polynomial(&f, &f).unwrap().is_zero());
        assert!(s_polynomial(&x(1, 1), &x(1, 2)).unwrap().is_zero());
        assert!(s_polynomial(&Polynomial::zero((2, 2)), &f).is_err());
        // S(X11 + X22, X11 + X12) = X22 - X12
        let g = x(1, 1).add(&x(1, 2)).unwrap();
        assert_eq!(s_polynomial(&f, &g).unwrap(), x(2, 2).sub(&x(1, 2)).unwrap());
    }

    #[test]
    fn dimension_mismatch() {
        let other = Polynomial::one((2, 3));
        assert!(x(1, 1).add(&other).is_err());
        assert!(x(1, 1).multiply(&other).is_err());
    }

    #[test]
    fn from_terms_merges_and_drops_zeros() {
        let m = mono(&[&[1, 0], &[0, 0]]);
        let p = Polynomial::from_terms((2, 2), [(m.clone(), q(2)), (m, q(-2))]).unwrap();
        assert!(p.is_zero());
    }
}
