//! Exact coefficient domains: the rationals, odd prime fields, and
//! finite-dimensional commutative unital algebras over them.
//!
//! All arithmetic in this crate is exact; there is no floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DomainError {
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("multiplication table is not commutative at basis pair ({0}, {1})")]
    NonCommutative(usize, usize),
    #[error("multiplication table is not associative at basis triple ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),
    #[error("designated unit is not a two-sided unit")]
    NoUnit,
    #[error("malformed domain data: {0}")]
    Malformed(String),
}

/// A prime field `F_p` (p an odd prime) or the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseField {
    Q,
    Fp(u64),
}

/// An element of a [`BaseField`]. `F` values are always reduced mod p.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum K {
    Q(BigRational),
    F(u64),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl BaseField {
    pub fn rationals() -> Self {
        BaseField::Q
    }

    pub fn prime_field(p: u64) -> Result<Self, DomainError> {
        if p == 2 {
            return Err(DomainError::EvenCharacteristic);
        }
        if !is_prime(p) {
            return Err(DomainError::NotPrime(p));
        }
        Ok(BaseField::Fp(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            BaseField::Q => 0,
            BaseField::Fp(p) => *p,
        }
    }

    pub fn zero(&self) -> K {
        match self {
            BaseField::Q => K::Q(BigRational::zero()),
            BaseField::Fp(_) => K::F(0),
        }
    }

    pub fn one(&self) -> K {
        match self {
            BaseField::Q => K::Q(BigRational::one()),
            BaseField::Fp(_) => K::F(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> K {
        match self {
            BaseField::Q => K::Q(BigRational::from_integer(BigInt::from(n))),
            BaseField::Fp(p) => K::F(n.rem_euclid(*p as i64) as u64),
        }
    }

    /// n/d as a field element; the denominator must be invertible.
    pub fn from_ratio(&self, n: i64, d: i64) -> Option<K> {
        if d == 0 {
            return None;
        }
        match self {
            BaseField::Q => Some(K::Q(BigRational::new(BigInt::from(n), BigInt::from(d)))),
            BaseField::Fp(_) => {
                let num = self.from_i64(n);
                let den = self.from_i64(d);
                self.try_inv(&den).map(|i| self.mul(&num, &i))
            }
        }
    }

    pub fn is_zero(&self, a: &K) -> bool {
        match a {
            K::Q(x) => x.is_zero(),
            K::F(x) => *x == 0,
        }
    }

    pub fn add(&self, a: &K, b: &K) -> K {
        match (self, a, b) {
            (BaseField::Q, K::Q(x), K::Q(y)) => K::Q(x + y),
            (BaseField::Fp(p), K::F(x), K::F(y)) => K::F((x + y) % p),
            _ => panic!("mixed scalar kinds"),
        }
    }

    pub fn sub(&self, a: &K, b: &K) -> K {
        match (self, a, b) {
            (BaseField::Q, K::Q(x), K::Q(y)) => K::Q(x - y),
            (BaseField::Fp(p), K::F(x), K::F(y)) => K::F((x + p - y) % p),
            _ => panic!("mixed scalar kinds"),
        }
    }

    pub fn mul(&self, a: &K, b: &K) -> K {
        match (self, a, b) {
            (BaseField::Q, K::Q(x), K::Q(y)) => K::Q(x * y),
            (BaseField::Fp(p), K::F(x), K::F(y)) => {
                K::F(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            _ => panic!("mixed scalar kinds"),
        }
    }

    pub fn neg(&self, a: &K) -> K {
        match (self, a) {
            (BaseField::Q, K::Q(x)) => K::Q(-x),
            (BaseField::Fp(p), K::F(x)) => K::F((p - x) % p),
            _ => panic!("mixed scalar kinds"),
        }
    }

    pub fn try_inv(&self, a: &K) -> Option<K> {
        if self.is_zero(a) {
            return None;
        }
        match (self, a) {
            (BaseField::Q, K::Q(x)) => Some(K::Q(x.recip())),
            (BaseField::Fp(p), K::F(x)) => Some(K::F(mod_pow(*x, p - 2, *p))),
            _ => panic!("mixed scalar kinds"),
        }
    }

    pub fn inv(&self, a: &K) -> K {
        self.try_inv(a).expect("division by zero")
    }

    pub fn format(&self, a: &K) -> String {
        match a {
            K::Q(x) => {
                if x.denom().is_one() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            K::F(x) => x.to_string(),
        }
    }
}

fn mod_pow(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut bb = b as u128 % m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % m as u128;
        }
        bb = bb * bb % m as u128;
        e >>= 1;
    }
    acc as u64
}

impl fmt::Display for K {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            K::Q(x) => {
                if x.denom().is_one() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
            K::F(x) => write!(f, "{x}"),
        }
    }
}

/// Extracts the rational value; panics on prime-field elements.
pub fn as_rational(a: &K) -> &BigRational {
    match a {
        K::Q(x) => x,
        K::F(_) => panic!("expected a rational"),
    }
}

/// True when the rational is negative (for display ordering only).
pub fn is_negative(a: &K) -> bool {
    match a {
        K::Q(x) => x.is_negative(),
        K::F(_) => false,
    }
}

/// A finite-dimensional commutative, associative, unital algebra over a base
/// field, given by structure constants `mult[s][t] = coordinates of e_s e_t`.
#[derive(Clone, Debug, PartialEq)]
pub struct CommAlgebra {
    pub base: BaseField,
    pub dim: usize,
    mult: Vec<Vec<Vec<K>>>,
    unit: Vec<K>,
}

impl CommAlgebra {
    pub fn new(
        base: BaseField,
        dim: usize,
        mult: Vec<Vec<Vec<K>>>,
        unit: Vec<K>,
    ) -> Result<Self, DomainError> {
        if dim == 0 || mult.len() != dim || unit.len() != dim {
            return Err(DomainError::Malformed(
                "multiplication table shape mismatch".into(),
            ));
        }
        for row in &mult {
            if row.len() != dim || row.iter().any(|v| v.len() != dim) {
                return Err(DomainError::Malformed(
                    "multiplication table shape mismatch".into(),
                ));
            }
        }
        let a = CommAlgebra {
            base,
            dim,
            mult,
            unit,
        };
        for s in 0..dim {
            for t in 0..s {
                if a.mult[s][t] != a.mult[t][s] {
                    return Err(DomainError::NonCommutative(t, s));
                }
            }
        }
        // (e_s e_t) e_u = e_s (e_t e_u), exhaustively
        for s in 0..dim {
            for t in 0..dim {
                for u in 0..dim {
                    let left = a.mul_coords(&a.mult[s][t], &a.basis_vec(u));
                    let right = a.mul_coords(&a.basis_vec(s), &a.mult[t][u]);
                    if left != right {
                        return Err(DomainError::NonAssociative(s, t, u));
                    }
                }
            }
        }
        for s in 0..dim {
            if a.mul_coords(&a.unit.clone(), &a.basis_vec(s)) != a.basis_vec(s) {
                return Err(DomainError::NoUnit);
            }
        }
        Ok(a)
    }

    fn basis_vec(&self, i: usize) -> Vec<K> {
        let mut v = vec![self.base.zero(); self.dim];
        v[i] = self.base.one();
        v
    }

    pub fn unit(&self) -> &[K] {
        &self.unit
    }

    pub fn basis_product(&self, s: usize, t: usize) -> &[K] {
        &self.mult[s][t]
    }

    pub fn mul_coords(&self, x: &[K], y: &[K]) -> Vec<K> {
        let f = &self.base;
        let mut out = vec![f.zero(); self.dim];
        for (s, xs) in x.iter().enumerate() {
            if f.is_zero(xs) {
                continue;
            }
            for (t, yt) in y.iter().enumerate() {
                if f.is_zero(yt) {
                    continue;
                }
                let c = f.mul(xs, yt);
                for (u, m) in self.mult[s][t].iter().enumerate() {
                    if !f.is_zero(m) {
                        out[u] = f.add(&out[u], &f.mul(&c, m));
                    }
                }
            }
        }
        out
    }
}

/// The ground ring of a Lie algebra: a prime field, the rationals, or a
/// commutative algebra over one of those.
#[derive(Clone, Debug, PartialEq)]
pub enum ScalarDomain {
    Field(BaseField),
    Algebra(CommAlgebra),
}

/// An element of a [`ScalarDomain`], as a coordinate vector over the base
/// field (length 1 for field domains).
pub type RingElem = Vec<K>;

impl ScalarDomain {
    pub fn rationals() -> Self {
        ScalarDomain::Field(BaseField::Q)
    }

    pub fn prime_field(p: u64) -> Result<Self, DomainError> {
        Ok(ScalarDomain::Field(BaseField::prime_field(p)?))
    }

    /// `K[t]/(t^N)` with basis `1, t, ..., t^{N-1}`.
    pub fn truncated_polynomial(base: BaseField, n: usize) -> Result<Self, DomainError> {
        if n == 0 {
            return Err(DomainError::Malformed(
                "truncation order must be >= 1".into(),
            ));
        }
        let mut mult = vec![vec![vec![base.zero(); n]; n]; n];
        for s in 0..n {
            for t in 0..n {
                if s + t < n {
                    mult[s][t][s + t] = base.one();
                }
            }
        }
        let mut unit = vec![base.zero(); n];
        unit[0] = base.one();
        Ok(ScalarDomain::Algebra(CommAlgebra::new(
            base, n, mult, unit,
        )?))
    }

    pub fn comm_algebra(a: CommAlgebra) -> Self {
        ScalarDomain::Algebra(a)
    }

    pub fn base(&self) -> BaseField {
        match self {
            ScalarDomain::Field(f) => *f,
            ScalarDomain::Algebra(a) => a.base,
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self, ScalarDomain::Field(_))
    }

    pub fn as_algebra(&self) -> Option<&CommAlgebra> {
        match self {
            ScalarDomain::Algebra(a) => Some(a),
            ScalarDomain::Field(_) => None,
        }
    }

    /// Rank of the domain as a module over its base field.
    pub fn rank(&self) -> usize {
        match self {
            ScalarDomain::Field(_) => 1,
            ScalarDomain::Algebra(a) => a.dim,
        }
    }

    pub fn zero(&self) -> RingElem {
        vec![self.base().zero(); self.rank()]
    }

    pub fn one(&self) -> RingElem {
        match self {
            ScalarDomain::Field(f) => vec![f.one()],
            ScalarDomain::Algebra(a) => a.unit().to_vec(),
        }
    }

    pub fn from_i64(&self, n: i64) -> RingElem {
        self.scale(&self.one(), &self.base().from_i64(n))
    }

    /// Embeds a base-field scalar as `c * 1`.
    pub fn from_base(&self, c: &K) -> RingElem {
        self.scale(&self.one(), c)
    }

    pub fn is_zero(&self, a: &RingElem) -> bool {
        let f = self.base();
        a.iter().all(|x| f.is_zero(x))
    }

    pub fn add(&self, a: &RingElem, b: &RingElem) -> RingElem {
        let f = self.base();
        a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
    }

    pub fn sub(&self, a: &RingElem, b: &RingElem) -> RingElem {
        let f = self.base();
        a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
    }

    pub fn neg(&self, a: &RingElem) -> RingElem {
        let f = self.base();
        a.iter().map(|x| f.neg(x)).collect()
    }

    pub fn mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        match self {
            ScalarDomain::Field(f) => vec![f.mul(&a[0], &b[0])],
            ScalarDomain::Algebra(alg) => alg.mul_coords(a, b),
        }
    }

    pub fn scale(&self, a: &RingElem, c: &K) -> RingElem {
        let f = self.base();
        a.iter().map(|x| f.mul(x, c)).collect()
    }

    pub fn format(&self, a: &RingElem) -> String {
        let f = self.base();
        match self {
            ScalarDomain::Field(_) => f.format(&a[0]),
            ScalarDomain::Algebra(_) => {
                let parts: Vec<String> = a.iter().map(|x| f.format(x)).collect();
                format!("[{}]", parts.join(","))
            }
        }
    }
}

/// Parses the one-line domain specs used by the `.lie` format and the CLI:
/// `field Q`, `field F <p>`, `ring truncated <Q|F p> <N>`.
pub fn parse_domain_spec(spec: &str) -> Result<ScalarDomain, DomainError> {
    let toks: Vec<&str> = spec.split_whitespace().collect();
    match toks.as_slice() {
        ["field", "Q"] | ["Q"] => Ok(ScalarDomain::rationals()),
        ["field", "F", p] | ["F", p] => {
            let p: u64 = p
                .parse()
                .map_err(|_| DomainError::Malformed(format!("bad prime: {spec}")))?;
            ScalarDomain::prime_field(p)
        }
        ["ring", "truncated", "Q", n] | ["truncated", "Q", n] => {
            let n: usize = n
                .parse()
                .map_err(|_| DomainError::Malformed(format!("bad truncation order: {spec}")))?;
            ScalarDomain::truncated_polynomial(BaseField::Q, n)
        }
        ["ring", "truncated", "F", p, n] | ["truncated", "F", p, n] => {
            let p: u64 = p
                .parse()
                .map_err(|_| DomainError::Malformed(format!("bad prime: {spec}")))?;
            let n: usize = n
                .parse()
                .map_err(|_| DomainError::Malformed(format!("bad truncation order: {spec}")))?;
            ScalarDomain::truncated_polynomial(BaseField::prime_field(p)?, n)
        }
        _ => Err(DomainError::Malformed(format!(
            "unrecognized domain spec: {spec}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_domain_basics() {
        assert!(matches!(
            parse_domain_spec("field Q").unwrap(),
            ScalarDomain::Field(BaseField::Q)
        ));
        assert!(matches!(
            parse_domain_spec("field F 3").unwrap(),
            ScalarDomain::Field(BaseField::Fp(3))
        ));
        assert_eq!(
            BaseField::prime_field(2).unwrap_err(),
            DomainError::EvenCharacteristic
        );
        assert_eq!(
            BaseField::prime_field(9).unwrap_err(),
            DomainError::NotPrime(9)
        );
    }

    #[test]
    fn dual_numbers() {
        let d = parse_domain_spec("ring truncated Q 2").unwrap();
        assert_eq!(d.rank(), 2);
        let a = d.as_algebra().unwrap();
        // eps * eps = 0
        let f = BaseField::Q;
        assert!(a.basis_product(1, 1).iter().all(|x| f.is_zero(x)));
    }

    #[test]
    fn truncation_rule_t3() {
        let d = ScalarDomain::truncated_polynomial(BaseField::Q, 3).unwrap();
        let a = d.as_algebra().unwrap();
        // t * t = t^2, t * t^2 = 0
        assert_eq!(a.basis_product(1, 1)[2], BaseField::Q.one());
        assert!(a
            .basis_product(1, 2)
            .iter()
            .all(|x| BaseField::Q.is_zero(x)));
        // N=1 is the base field itself as a 1-dim algebra
        let d1 = ScalarDomain::truncated_polynomial(BaseField::Q, 1).unwrap();
        assert_eq!(d1.rank(), 1);
    }

    #[test]
    fn algebra_axioms_rejected() {
        let f = BaseField::Q;
        // non-commutative 2-dim table: e1*e2 = e1, e2*e1 = e2
        let z = || f.zero();
        let o = || f.one();
        let mult = vec![
            vec![vec![o(), z()], vec![o(), z()]],
            vec![vec![z(), o()], vec![z(), z()]],
        ];
        let unit = vec![o(), z()];
        assert!(matches!(
            CommAlgebra::new(f, 2, mult, unit),
            Err(DomainError::NonCommutative(_, _))
        ));
    }

    #[test]
    fn field_arithmetic_roundtrip() {
        for field in [BaseField::Q, BaseField::Fp(7)] {
            for n in -5i64..6 {
                let a = field.from_i64(n);
                assert!(field.is_zero(&field.add(&a, &field.neg(&a))));
                assert_eq!(field.mul(&a, &field.one()), a);
                if !field.is_zero(&a) {
                    assert_eq!(field.mul(&a, &field.inv(&a)), field.one());
                }
            }
        }
    }

    #[test]
    fn comm_algebra_over_f3() {
        let d = ScalarDomain::truncated_polynomial(BaseField::Fp(3), 2).unwrap();
        let t = vec![BaseField::Fp(3).zero(), BaseField::Fp(3).one()];
        assert!(d.is_zero(&d.mul(&t, &t)));
    }
}
