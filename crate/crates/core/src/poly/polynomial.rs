use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{PolyError, Result, Ring, TermOrder};

/// Exponent vector; length always equals the ambient ring's arity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial {
            exps: vec![0; arity],
        }
    }

    pub fn var(arity: usize, index: usize) -> Self {
        let mut exps = vec![0; arity];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    /// Product of monomials; fails loudly on exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(PolyError::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(&b, &a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    /// True when the two supports are disjoint (lcm equals the product).
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted descending under the ring's default order
/// (degrevlex) and never carry zero coefficients; the zero polynomial has
/// an empty term list. Values are immutable once built and cheap to share
/// across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, BigRational)>,
}

/// Canonical storage order for terms.
pub(crate) const CANONICAL_ORDER: TermOrder = TermOrder::DegRevLex;

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, BigRational::one())
    }

    pub fn constant(ring: &Ring, c: BigRational) -> Self {
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push((Monomial::one(ring.arity()), c));
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_int(ring: &Ring, n: i64) -> Self {
        Self::constant(ring, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn variable(ring: &Ring, index: usize) -> Result<Self> {
        if index >= ring.arity() {
            return Err(PolyError::IndexOutOfRange {
                index,
                arity: ring.arity(),
            });
        }
        Ok(Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.arity(), index), BigRational::one())],
        })
    }

    /// Normalizes an arbitrary term list: merges equal monomials, drops
    /// zeros, sorts canonically.
    pub fn from_terms(ring: &Ring, terms: Vec<(Monomial, BigRational)>) -> Self {
        let mut map: HashMap<Monomial, BigRational> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.arity(), ring.arity());
            let entry = map.entry(m).or_insert_with(BigRational::zero);
            *entry += c;
        }
        let mut terms: Vec<(Monomial, BigRational)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| CANONICAL_ORDER.cmp_exps(b.0.exps(), a.0.exps()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Terms in canonical (descending degrevlex) order.
    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// True when the polynomial is a nonzero constant.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    /// The order-maximal term. Errors on the zero polynomial.
    pub fn leading_term(&self, order: TermOrder) -> Result<(&Monomial, &BigRational)> {
        if self.terms.is_empty() {
            return Err(PolyError::ZeroPolynomial);
        }
        if order == CANONICAL_ORDER {
            let (m, c) = &self.terms[0];
            return Ok((m, c));
        }
        let mut best = 0;
        for i in 1..self.terms.len() {
            if order.cmp_exps(self.terms[i].0.exps(), self.terms[best].0.exps())
                == Ordering::Greater
            {
                best = i;
            }
        }
        let (m, c) = &self.terms[best];
        Ok((m, c))
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.expect_same(&other.ring)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.expect_same(&other.ring)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.expect_same(&other.ring)?;
        let mut map: HashMap<Monomial, BigRational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb)?;
                let entry = map.entry(m).or_insert_with(BigRational::zero);
                *entry += ca * cb;
            }
        }
        let mut terms: Vec<(Monomial, BigRational)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| CANONICAL_ORDER.cmp_exps(b.0.exps(), a.0.exps()));
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    fn merge(&self, other: &Polynomial, subtract: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match CANONICAL_ORDER.cmp_exps(self.terms[i].0.exps(), other.terms[j].0.exps()) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (m, c) = &other.terms[j];
                    out.push((m.clone(), if subtract { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract {
                        &self.terms[i].1 - &other.terms[j].1
                    } else {
                        &self.terms[i].1 + &other.terms[j].1
                    };
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        for (m, c) in &other.terms[j..] {
            out.push((m.clone(), if subtract { -c } else { c.clone() }));
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Multiplies by a single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (tm, tc) in &self.terms {
            terms.push((tm.mul(m)?, tc * c));
        }
        // Multiplying every monomial by the same monomial preserves the
        // relative order, so the list stays sorted.
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn pow(&self, n: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Formal partial derivative with respect to variable `index`.
    pub fn partial_derivative(&self, index: usize) -> Result<Polynomial> {
        if index >= self.ring.arity() {
            return Err(PolyError::IndexOutOfRange {
                index,
                arity: self.ring.arity(),
            });
        }
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exps()[index];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[index] = e - 1;
            terms.push((
                Monomial::from_exps(exps),
                c * BigRational::from_integer(BigInt::from(e)),
            ));
        }
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.ring.arity() {
            return Err(PolyError::ArityMismatch {
                expected: self.ring.arity(),
                got: point.len(),
            });
        }
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Round-to-nearest floating evaluation.
    pub fn eval_f64(&self, point: &[f64]) -> Result<f64> {
        if point.len() != self.ring.arity() {
            return Err(PolyError::ArityMismatch {
                expected: self.ring.arity(),
                got: point.len(),
            });
        }
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let mut t = c.to_f64().unwrap_or(f64::NAN);
            for (i, &e) in m.exps().iter().enumerate() {
                t *= point[i].powi(e as i32);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Maps the polynomial into `target`, sending variable `i` of this ring
    /// to variable `var_map[i]` of the target ring.
    pub fn remap(&self, target: &Ring, var_map: &[usize]) -> Result<Polynomial> {
        debug_assert_eq!(var_map.len(), self.ring.arity());
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.arity()];
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    let j = var_map[i];
                    if j >= target.arity() {
                        return Err(PolyError::IndexOutOfRange {
                            index: j,
                            arity: target.arity(),
                        });
                    }
                    exps[j] = e;
                }
            }
            terms.push((Monomial::from_exps(exps), c.clone()));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// True when no variable outside `allowed` appears.
    pub fn supported_on(&self, allowed: &[bool]) -> bool {
        self.terms.iter().all(|(m, _)| {
            m.exps()
                .iter()
                .enumerate()
                .all(|(i, &e)| e == 0 || allowed[i])
        })
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: TermOrder) -> Result<Polynomial> {
        let (_, lc) = self.leading_term(order)?;
        if lc.is_one() {
            return Ok(self.clone());
        }
        let inv = lc.recip();
        Ok(self.scale(&inv))
    }
}

fn fmt_coeff(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text form; `parse(format(p))` reproduces `p` bit-exactly.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(fmt_coeff(&abs));
            }
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 1 {
                    factors.push(self.ring.name(i).to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.ring.name(i), e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
