//! Small finite fields `GF(pᵉ)` as polynomials over `𝔽ₚ` modulo a monic irreducible.
//!
//! An element is stored as the integer `c₀ + c₁p + ⋯ + c_{e−1}p^{e−1}` of its
//! coefficients, so the constants `0..p` come first and element order is
//! lexicographic in the coefficients.

use super::GraphError;

/// Returns `(p, e)` with `q = pᵉ`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = smallest_factor(q);
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && smallest_factor(n) == n
}

fn smallest_factor(n: u64) -> u64 {
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 1;
    }
    n
}

#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u64,
    degree: u32,
    order: u64,
    /// Low coefficients of the monic modulus, `x^e + Σ m_i x^i`.
    modulus: Vec<u64>,
}

impl FiniteField {
    pub fn new(q: u64) -> Result<Self, GraphError> {
        let (p, degree) = prime_power(q).ok_or(GraphError::NotPrimePower(q))?;
        let modulus = if degree == 1 {
            vec![0]
        } else {
            find_irreducible(p, degree as usize)
        };
        Ok(Self {
            p,
            degree,
            order: q,
            modulus,
        })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Coefficients of the modulus, lowest first, including the leading 1.
    pub fn modulus(&self) -> Vec<u64> {
        let mut m = self.modulus.clone();
        m.push(1);
        m
    }

    fn digits(&self, mut x: u64) -> Vec<u64> {
        (0..self.degree)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    fn pack(&self, digits: &[u64]) -> u64 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        self.digitwise(a, b, |x, y| (x + y) % self.p)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.digitwise(a, b, |x, y| (x + self.p - y) % self.p)
    }

    pub fn neg(&self, a: u64) -> u64 {
        self.sub(0, a)
    }

    fn digitwise(&self, mut a: u64, mut b: u64, f: impl Fn(u64, u64) -> u64) -> u64 {
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.degree {
            out += f(a % self.p, b % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.degree == 1 {
            return a * b % self.p;
        }
        let e = self.degree as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, x) in da.iter().enumerate() {
            for (j, y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // x^e ≡ −Σ m_i x^i
        for top in (e..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (i, m) in self.modulus.iter().enumerate() {
                let idx = top - e + i;
                prod[idx] = (prod[idx] + (self.p - m) * c) % self.p;
            }
        }
        self.pack(&prod[..e])
    }

    /// Marks each element that is a nonzero square.
    pub fn nonzero_squares(&self) -> Vec<bool> {
        let mut sq = vec![false; self.order as usize];
        for x in 1..self.order {
            sq[self.mul(x, x) as usize] = true;
        }
        sq
    }

    /// Quadratic character: 0 at 0, +1 on nonzero squares, −1 otherwise.
    pub fn quadratic_character(&self) -> Vec<i8> {
        self.nonzero_squares()
            .iter()
            .enumerate()
            .map(|(x, &s)| match (x, s) {
                (0, _) => 0,
                (_, true) => 1,
                _ => -1,
            })
            .collect()
    }
}

/// First monic irreducible of degree `e` over `𝔽ₚ`, scanning the low
/// coefficients as a base-`p` counter with `c₀` least significant.
fn find_irreducible(p: u64, e: usize) -> Vec<u64> {
    let count = p.pow(e as u32);
    for code in 0..count {
        let mut low = Vec::with_capacity(e);
        let mut c = code;
        for _ in 0..e {
            low.push(c % p);
            c /= p;
        }
        let mut poly = low.clone();
        poly.push(1);
        if is_irreducible(&poly, p) {
            return low;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() - 1;
    if poly[0] == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d as u32) {
            let mut div = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                div.push(c % p);
                c /= p;
            }
            div.push(1);
            if poly_rem_is_zero(poly, &div, p) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(num: &[u64], monic_div: &[u64], p: u64) -> bool {
    let mut r = num.to_vec();
    let d = monic_div.len() - 1;
    for top in (d..r.len()).rev() {
        let c = r[top];
        if c == 0 {
            continue;
        }
        for (i, m) in monic_div.iter().enumerate() {
            let idx = top - d + i;
            r[idx] = (r[idx] + (p - m) * c) % p;
        }
    }
    r[..d].iter().all(|&x| x == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(8192), Some((2, 13)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert!(is_prime(9973));
        assert!(!is_prime(9))
    }

    #[test]
    fn gf9_uses_x2_plus_1() {
        let f = FiniteField::new(9).unwrap();
        assert_eq!(f.modulus(), vec![1, 0, 1]);
        // x · x = x² = −1 = 2
        assert_eq!(f.mul(3, 3), 2);
    }

    #[test]
    fn field_axioms_small() {
        for q in [4, 8, 9, 25, 27, 49] {
            let f = FiniteField::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                assert_eq!(f.mul(a, 1), a);
                if a != 0 {
                    assert!(
                        (1..q).any(|b| f.mul(a, b) == 1),
                        "no inverse for {a} in GF({q})"
                    );
                }
                for b in 0..q {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    let c = (a * 7 + b * 3) % q;
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn squares_are_half() {
        for q in [5, 9, 13, 25, 27, 81] {
            let f = FiniteField::new(q).unwrap();
            let n = f.nonzero_squares().iter().filter(|&&s| s).count() as u64;
            assert_eq!(n, (q - 1) / 2);
        }
        let f = FiniteField::new(5).unwrap();
        assert_eq!(f.nonzero_squares(), vec![false, true, false, false, true]);
    }
}
