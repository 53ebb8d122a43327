//! Exact arithmetic in GF(p^n).
//!
//! Elements are stored as codes in `0..p^n`: the code is the base-`p`
//! evaluation of the coefficient vector of the polynomial-basis
//! representation, low degree first. For small fields (q <= 256) full
//! add/mul/inv tables are precomputed; larger fields compute on the fly.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

/// A field element, valid only together with the `Field` it came from.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct FieldElem(pub u16);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Serializable description of GF(p^n). `modulus` is the monic irreducible
/// polynomial chosen for the extension, coefficients low degree first
/// including the leading 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub n: u32,
    pub modulus: Vec<u32>,
}

struct Tables {
    add: Vec<u16>,
    mul: Vec<u16>,
    inv: Vec<u16>,
    neg: Vec<u16>,
}

struct Repr {
    p: u32,
    n: u32,
    q: u32,
    modulus: Vec<u16>, // length n+1, monic
    tables: Option<Tables>,
}

/// Shared handle to a concrete finite field.
#[derive(Clone)]
pub struct Field(Arc<Repr>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.n == other.0.n && self.0.modulus == other.0.modulus)
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

const TABLE_LIMIT: u32 = 256;

impl Field {
    /// Build GF(p^n). With `modulus = None` the lexicographically least
    /// monic irreducible polynomial of degree n over GF(p) is chosen, so
    /// serialized data is reproducible.
    pub fn new(p: u32, n: u32, modulus: Option<&[u32]>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::InvalidInput(
                "extension degree must be positive".into(),
            ));
        }
        let q = (p as u64)
            .checked_pow(n)
            .filter(|&q| q <= 1 << 16)
            .ok_or_else(|| Error::InvalidInput(format!("field order {}^{} exceeds 2^16", p, n)))?
            as u32;
        let modulus: Vec<u16> = match modulus {
            Some(m) => {
                if m.len() != n as usize + 1 {
                    return Err(Error::ModulusDegree {
                        want: n,
                        got: m.len().saturating_sub(1) as u32,
                    });
                }
                let m: Vec<u16> = m.iter().map(|&c| (c % p) as u16).collect();
                if m[n as usize] != 1 {
                    return Err(Error::InvalidInput("modulus must be monic".into()));
                }
                if n > 1 && !poly_irreducible(&m, p) {
                    return Err(Error::ReducibleModulus { p });
                }
                m
            }
            None => default_modulus(p, n)?,
        };
        let mut repr = Repr {
            p,
            n,
            q,
            modulus,
            tables: None,
        };
        if q <= TABLE_LIMIT {
            repr.tables = Some(build_tables(&repr));
        }
        Ok(Field(Arc::new(repr)))
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<Field> {
        Field::new(spec.p, spec.n, Some(&spec.modulus))
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            p: self.0.p,
            n: self.0.n,
            modulus: self.0.modulus.iter().map(|&c| c as u32).collect(),
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.0.n
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// All field elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.0.q as u16).map(FieldElem)
    }

    pub fn elem(&self, code: u32) -> FieldElem {
        FieldElem((code % self.0.q) as u16)
    }

    /// Element from its coefficient vector (low degree first; shorter
    /// vectors are zero-padded).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElem> {
        if coeffs.len() > self.0.n as usize {
            return Err(Error::InvalidInput(format!(
                "coefficient vector of length {} for an extension of degree {}",
                coeffs.len(),
                self.0.n
            )));
        }
        let mut code: u32 = 0;
        for (i, &c) in coeffs.iter().enumerate() {
            code += (c % self.0.p) * self.0.p.pow(i as u32);
        }
        Ok(FieldElem(code as u16))
    }

    pub fn coeffs(&self, e: FieldElem) -> Vec<u16> {
        let mut v = Vec::with_capacity(self.0.n as usize);
        let mut c = e.0 as u32;
        for _ in 0..self.0.n {
            v.push((c % self.0.p) as u16);
            c /= self.0.p;
        }
        v
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if let Some(t) = &self.0.tables {
            return FieldElem(t.add[a.0 as usize * self.0.q as usize + b.0 as usize]);
        }
        self.add_slow(a, b)
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if let Some(t) = &self.0.tables {
            return FieldElem(t.neg[a.0 as usize]);
        }
        let av = self.coeffs(a);
        let p = self.0.p as u16;
        let v: Vec<u16> = av.iter().map(|&c| if c == 0 { 0 } else { p - c }).collect();
        self.encode(&v)
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if let Some(t) = &self.0.tables {
            return FieldElem(t.mul[a.0 as usize * self.0.q as usize + b.0 as usize]);
        }
        self.mul_slow(a, b)
    }

    pub fn inv(&self, a: FieldElem) -> Option<FieldElem> {
        if a.is_zero() {
            return None;
        }
        if let Some(t) = &self.0.tables {
            return Some(FieldElem(t.inv[a.0 as usize]));
        }
        // a^(q-2)
        Some(self.pow(a, self.0.q as u64 - 2))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Option<FieldElem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        let mut base = a;
        let mut acc = FieldElem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn encode(&self, coeffs: &[u16]) -> FieldElem {
        let mut code: u32 = 0;
        for (i, &c) in coeffs.iter().enumerate() {
            code += c as u32 * self.0.p.pow(i as u32);
        }
        FieldElem(code as u16)
    }

    fn add_slow(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let av = self.coeffs(a);
        let bv = self.coeffs(b);
        let p = self.0.p as u16;
        let v: Vec<u16> = av.iter().zip(&bv).map(|(&x, &y)| (x + y) % p).collect();
        self.encode(&v)
    }

    fn mul_slow(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let av = self.coeffs(a);
        let bv = self.coeffs(b);
        let p = self.0.p as u64;
        let n = self.0.n as usize;
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &x) in av.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in bv.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // reduce modulo the monic modulus
        let m: Vec<u64> = self.0.modulus.iter().map(|&c| c as u64).collect();
        for d in (n..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for k in 0..n {
                let sub = (c * m[k]) % p;
                prod[d - n + k] = (prod[d - n + k] + p - sub) % p;
            }
        }
        let v: Vec<u16> = prod[..n].iter().map(|&c| c as u16).collect();
        self.encode(&v)
    }
}

fn build_tables(repr: &Repr) -> Tables {
    let q = repr.q as usize;
    let f = Field(Arc::new(Repr {
        p: repr.p,
        n: repr.n,
        q: repr.q,
        modulus: repr.modulus.clone(),
        tables: None,
    }));
    let mut add = vec![0u16; q * q];
    let mut mul = vec![0u16; q * q];
    let mut inv = vec![0u16; q];
    let mut neg = vec![0u16; q];
    for a in 0..q as u16 {
        let fa = FieldElem(a);
        neg[a as usize] = {
            let av = f.coeffs(fa);
            let p = repr.p as u16;
            let v: Vec<u16> = av.iter().map(|&c| if c == 0 { 0 } else { p - c }).collect();
            f.encode(&v).0
        };
        for b in 0..q as u16 {
            let fb = FieldElem(b);
            add[a as usize * q + b as usize] = f.add_slow(fa, fb).0;
            mul[a as usize * q + b as usize] = f.mul_slow(fa, fb).0;
        }
    }
    for a in 1..q as u16 {
        // find inverse by scanning the multiplication row
        for b in 1..q as u16 {
            if mul[a as usize * q + b as usize] == 1 {
                inv[a as usize] = b;
                break;
            }
        }
    }
    Tables { add, mul, inv, neg }
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Trial factorization over the prime field: a monic polynomial of degree n
/// is irreducible iff no monic polynomial of degree 1..=n/2 divides it.
pub(crate) fn poly_irreducible(poly: &[u16], p: u32) -> bool {
    let n = poly.len() - 1;
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    for d in 1..=n / 2 {
        // monic divisors of degree d: p^d candidates
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut div = vec![0u16; d + 1];
            let mut c = idx;
            for coeff in div.iter_mut().take(d) {
                *coeff = (c % p as u64) as u16;
                c /= p as u64;
            }
            div[d] = 1;
            if poly_rem_is_zero(poly, &div, p) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(poly: &[u16], div: &[u16], p: u32) -> bool {
    let p = p as u64;
    let mut rem: Vec<u64> = poly.iter().map(|&c| c as u64).collect();
    let dd = div.len() - 1;
    while rem.len() > dd {
        let lead = rem[rem.len() - 1];
        if lead != 0 {
            let shift = rem.len() - 1 - dd;
            for k in 0..=dd {
                let idx = shift + k;
                let sub = (lead * div[k] as u64) % p;
                rem[idx] = (rem[idx] + p - sub) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

/// Lexicographically least (on the coefficient list, low degree first)
/// monic irreducible polynomial of degree n over GF(p).
fn default_modulus(p: u32, n: u32) -> Result<Vec<u16>> {
    let n = n as usize;
    let mut coeffs = vec![0u16; n + 1];
    coeffs[n] = 1;
    // odometer in list-lex order: coeffs[0] is most significant
    let total = (p as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    for _ in 0..total {
        if poly_irreducible(&coeffs, p) {
            return Ok(coeffs);
        }
        // increment with coeffs[n-1] fastest
        let mut i = n;
        loop {
            if i == 0 {
                return Err(Error::ReducibleModulus { p });
            }
            i -= 1;
            coeffs[i] += 1;
            if coeffs[i] < p as u16 {
                break;
            }
            coeffs[i] = 0;
        }
    }
    Err(Error::ReducibleModulus { p })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_default_modulus() {
        let f = Field::new(2, 1, None).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.spec().modulus, vec![0, 1]); // x itself
        assert_eq!(f.add(FieldElem(1), FieldElem(1)), FieldElem::ZERO);
    }

    #[test]
    fn gf4_unique_quadratic() {
        let f = Field::new(2, 2, None).unwrap();
        // x^2 + x + 1 is the unique irreducible quadratic over GF(2)
        assert_eq!(f.spec().modulus, vec![1, 1, 1]);
        let w = FieldElem(2); // class of x
        let w2 = f.mul(w, w);
        assert_eq!(w2, f.add(w, FieldElem::ONE)); // x^2 = x + 1
        assert_eq!(f.mul(w, w2), FieldElem::ONE); // x^3 = 1
    }

    #[test]
    fn gf9_modulus_x2_plus_1() {
        // degree mismatch is an error
        assert!(matches!(
            Field::new(3, 1, Some(&[1, 0, 1])),
            Err(Error::ModulusDegree { .. })
        ));
        // x^2 + 1 is irreducible over GF(3): oracle by root enumeration
        for x in 0..3u32 {
            assert_ne!((x * x + 1) % 3, 0);
        }
        let f = Field::new(3, 2, Some(&[1, 0, 1])).unwrap();
        assert_eq!(f.order(), 9);
        // i^2 = -1 = 2
        let i = f.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f.mul(i, i), FieldElem(2));
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2 + 1 = (x+1)^2 over GF(2)
        assert!(matches!(
            Field::new(2, 2, Some(&[1, 0, 1])),
            Err(Error::ReducibleModulus { .. })
        ));
        assert!(matches!(Field::new(4, 1, None), Err(Error::NotPrime(4))));
    }

    #[test]
    fn multiplicative_group_order() {
        for (p, n) in [(2, 1), (2, 2), (2, 4), (3, 1), (3, 2), (5, 1)] {
            let f = Field::new(p, n, None).unwrap();
            let q = f.order() as u64;
            for e in f.elements().skip(1) {
                assert_eq!(f.pow(e, q - 1), FieldElem::ONE);
            }
        }
    }

    #[test]
    fn field_axioms_sampled() {
        for (p, n) in [(2, 2), (3, 2), (2, 4), (7, 1)] {
            let f = Field::new(p, n, None).unwrap();
            let els: Vec<FieldElem> = f.elements().collect();
            let probe: Vec<FieldElem> = els.iter().step_by(1 + els.len() / 13).copied().collect();
            for &a in &probe {
                for &b in &probe {
                    // Frobenius: (a+b)^p = a^p + b^p
                    assert_eq!(
                        f.pow(f.add(a, b), p as u64),
                        f.add(f.pow(a, p as u64), f.pow(b, p as u64))
                    );
                    for &c in &probe {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElem::ONE);
                }
            }
        }
    }

    #[test]
    fn large_field_no_tables() {
        let f = Field::new(2, 16, None).unwrap();
        assert_eq!(f.order(), 1 << 16);
        let a = FieldElem(0x1234);
        let b = FieldElem(0x0457);
        assert_eq!(f.mul(a, b), f.mul(b, a));
        let ai = f.inv(a).unwrap();
        assert_eq!(f.mul(a, ai), FieldElem::ONE);
    }
}
