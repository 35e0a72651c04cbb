//! Exact factorials and binomial coefficients.

use num_bigint::BigUint;
use num_traits::One;

/// `0!, 1!, ..., n!` built once and indexed.
#[derive(Debug, Clone)]
pub struct Factorials {
    table: Vec<BigUint>,
}

impl Factorials {
    pub fn up_to(n: usize) -> Self {
        let mut table = Vec::with_capacity(n + 1);
        table.push(BigUint::one());
        for i in 1..=n {
            let next = &table[i - 1] * BigUint::from(i);
            table.push(next);
        }
        Factorials { table }
    }

    pub fn get(&self, n: usize) -> &BigUint {
        &self.table[n]
    }

    pub fn max(&self) -> usize {
        self.table.len() - 1
    }
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// `C(a, b)`, taken to be 0 whenever `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigUint {
    if b < 0 || b > a {
        return BigUint::default();
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut acc = BigUint::one();
    for i in 0..b {
        // acc holds C(a, i) here, so the division is exact
        acc = acc * BigUint::from(a - i) / BigUint::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_factorials() {
        let f = Factorials::up_to(10);
        assert_eq!(*f.get(0), BigUint::from(1u32));
        assert_eq!(*f.get(1), BigUint::from(1u32));
        assert_eq!(*f.get(10), BigUint::from(3_628_800u32));
        assert_eq!(factorial(10), *f.get(10));
        assert_eq!(f.max(), 10);
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(5, -1), BigUint::default());
        assert_eq!(binomial(5, 6), BigUint::default());
        assert_eq!(binomial(0, 0), BigUint::from(1u32));
        assert_eq!(binomial(-1, 0), BigUint::default());
        assert_eq!(binomial(10, 3), BigUint::from(120u32));
        assert_eq!(binomial(10, 7), BigUint::from(120u32));
    }

    #[test]
    fn pascal_rule() {
        for a in 1..40i64 {
            for b in 0..=a {
                assert_eq!(binomial(a, b), binomial(a - 1, b) + binomial(a - 1, b - 1));
            }
        }
    }
}
