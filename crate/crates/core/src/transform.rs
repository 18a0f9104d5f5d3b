//! The six sequence transfer maps between the dimension sequence `h`, the
//! generator sequence `a` and the primitive sequence `p`, tied together by
//!
//! ```text
//! 1 + Σ h_n t^n = (1 − Σ a_n t^n)^{-1} = Π_d (1 − t^d)^{-p_d}
//! ```
//!
//! All maps are prefix-exact: output entry `n` depends only on input entries
//! `1..=n`, so a truncated input yields a correct truncated output. Every map
//! runs in `O(N²)` big-rational operations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::SeqError;
use crate::seq::{fmt_rational, Sequence};

/// `μ(n)` by trial division.
pub fn mobius(mut n: usize) -> i8 {
    assert!(n >= 1, "mobius is defined for n >= 1");
    let mut sign = 1i8;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// `μ(1), …, μ(n)` at indices `1..=n` (index 0 unused).
pub fn mobius_table(n: usize) -> Vec<i8> {
    let mut table = vec![0i8; n + 1];
    for (k, slot) in table.iter_mut().enumerate().skip(1) {
        *slot = mobius(k);
    }
    table
}

fn divisors(n: usize) -> impl Iterator<Item = usize> {
    (1..=n).filter(move |d| n % d == 0)
}

/// INVERT: `a ↦ h` with `h_n = a_n + Σ_{k<n} a_k h_{n−k}`.
pub fn invert(a: &Sequence) -> Sequence {
    let a = a.entries();
    let mut h: Vec<BigRational> = Vec::with_capacity(a.len());
    for n in 1..=a.len() {
        let mut acc = a[n - 1].clone();
        for k in 1..n {
            acc += &a[k - 1] * &h[n - k - 1];
        }
        h.push(acc);
    }
    Sequence::new(h)
}

/// INVERTi: `h ↦ a` with `a_n = h_n − Σ_{k<n} a_k h_{n−k}`.
pub fn inverti(h: &Sequence) -> Sequence {
    let h = h.entries();
    let mut a: Vec<BigRational> = Vec::with_capacity(h.len());
    for n in 1..=h.len() {
        let mut acc = h[n - 1].clone();
        for k in 1..n {
            acc -= &a[k - 1] * &h[n - k - 1];
        }
        a.push(acc);
    }
    Sequence::new(a)
}

/// Euler transform `p ↦ h`.
///
/// Uses `c_n = Σ_{d|n} d·p_d` and `n·h_n = c_n + Σ_{k<n} c_k h_{n−k}`.
pub fn euler(p: &Sequence) -> Sequence {
    let p = p.entries();
    let len = p.len();
    let c: Vec<BigRational> = (1..=len)
        .map(|n| {
            divisors(n).fold(BigRational::zero(), |acc, d| {
                acc + &p[d - 1] * BigRational::from_integer(BigInt::from(d))
            })
        })
        .collect();
    let mut h: Vec<BigRational> = Vec::with_capacity(len);
    for n in 1..=len {
        let mut acc = c[n - 1].clone();
        for k in 1..n {
            acc += &c[k - 1] * &h[n - k - 1];
        }
        h.push(acc / BigRational::from_integer(BigInt::from(n)));
    }
    Sequence::new(h)
}

/// Inverse Euler transform `h ↦ p`.
///
/// Takes the logarithmic derivative `c_n = n·h_n − Σ_{k<n} c_k h_{n−k}` and
/// then Möbius-inverts `c_n = Σ_{d|n} d·p_d`.
pub fn euleri(h: &Sequence) -> Sequence {
    let h = h.entries();
    let len = h.len();
    let mut c: Vec<BigRational> = Vec::with_capacity(len);
    for n in 1..=len {
        let mut acc = &h[n - 1] * BigRational::from_integer(BigInt::from(n));
        for k in 1..n {
            acc -= &c[k - 1] * &h[n - k - 1];
        }
        c.push(acc);
    }
    let mu = mobius_table(len);
    (1..=len)
        .map(|n| {
            let sum = divisors(n).fold(BigRational::zero(), |acc, d| match mu[n / d] {
                0 => acc,
                1 => acc + &c[d - 1],
                _ => acc - &c[d - 1],
            });
            sum / BigRational::from_integer(BigInt::from(n))
        })
        .collect()
}

/// [`euleri`] on an integral input, with the integrality of the result
/// checked entry by entry.
///
/// Integral `h` always has integral `p`; an error here means the transform
/// itself is broken.
pub fn euleri_integral(h: &Sequence) -> Result<Vec<BigInt>, SeqError> {
    let p = euleri(h);
    p.iter()
        .enumerate()
        .map(|(i, v)| {
            if v.is_integer() {
                Ok(v.to_integer())
            } else {
                Err(SeqError::NonIntegralResult {
                    index: i + 1,
                    value: fmt_rational(v),
                })
            }
        })
        .collect()
}

/// `φ_{a,p} = euleri ∘ invert`.
pub fn a_to_p(a: &Sequence) -> Sequence {
    euleri(&invert(a))
}

/// `φ_{p,a} = inverti ∘ euler`.
pub fn p_to_a(p: &Sequence) -> Sequence {
    inverti(&euler(p))
}

/// The transfer maps by name, for callers that select one at runtime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransformKind {
    Invert,
    Inverti,
    Euler,
    Euleri,
    AToP,
    PToA,
}

impl TransformKind {
    pub fn apply(self, s: &Sequence) -> Sequence {
        match self {
            TransformKind::Invert => invert(s),
            TransformKind::Inverti => inverti(s),
            TransformKind::Euler => euler(s),
            TransformKind::Euleri => euleri(s),
            TransformKind::AToP => a_to_p(s),
            TransformKind::PToA => p_to_a(s),
        }
    }
}

impl std::str::FromStr for TransformKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "invert" => TransformKind::Invert,
            "inverti" => TransformKind::Inverti,
            "euler" => TransformKind::Euler,
            "euleri" => TransformKind::Euleri,
            "a2p" => TransformKind::AToP,
            "p2a" => TransformKind::PToA,
            other => return Err(format!("unknown transform `{other}`")),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[i64]) -> Sequence {
        Sequence::from_ints(v.iter().copied())
    }

    #[test]
    fn mobius_values() {
        let got: Vec<i8> = (1..=12).map(mobius).collect();
        assert_eq!(got, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn invert_examples() {
        assert_eq!(invert(&s(&[1, 1, 1, 1, 1])), s(&[1, 2, 4, 8, 16]));
        assert_eq!(invert(&s(&[0, 0, 0, 0, 0])), s(&[0, 0, 0, 0, 0]));
        assert_eq!(invert(&s(&[2, -1, 0, 0, 0])), s(&[2, 3, 4, 5, 6]));
        assert_eq!(invert(&s(&[1, 1, 2, 5, 14])), s(&[1, 2, 5, 14, 42]));
    }

    #[test]
    fn inverti_examples() {
        assert_eq!(
            inverti(&s(&[1, 2, 5, 14, 42, 132])),
            s(&[1, 1, 2, 5, 14, 42])
        );
        assert_eq!(inverti(&s(&[1, 1, 2, 3, 5, 8])), s(&[1, 0, 1, 0, 1, 0]));
        assert_eq!(inverti(&s(&[2, 1, 3, 4])), s(&[2, -3, 7, -13]));
        assert_eq!(inverti(&s(&[1, 2, 6, 24, 120])), s(&[1, 1, 3, 13, 71]));
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler(&s(&[2, 0, 0, 0, 0])), s(&[2, 3, 4, 5, 6]));
        assert_eq!(euler(&s(&[1, 0, 0, 0, 0])), s(&[1, 1, 1, 1, 1]));
        assert_eq!(euler(&s(&[1, 1, 3, 8, 25])), s(&[1, 2, 5, 14, 42]));
    }

    #[test]
    fn euleri_examples() {
        assert_eq!(
            euleri(&s(&[1, 2, 5, 15, 52, 203])),
            s(&[1, 1, 3, 9, 34, 135])
        );
        assert_eq!(
            euleri(&s(&[1, 2, 5, 14, 42, 132])),
            s(&[1, 1, 3, 8, 25, 75])
        );
        assert_eq!(
            euleri(&s(&[1, 2, 4, 8, 16, 32, 64, 128, 256])),
            s(&[1, 1, 2, 3, 6, 9, 18, 30, 56])
        );
    }

    #[test]
    fn composite_examples() {
        assert_eq!(
            a_to_p(&s(&[2, 0, 0, 0, 0, 0, 0, 0])),
            s(&[2, 1, 2, 3, 6, 9, 18, 30])
        );
        assert_eq!(
            a_to_p(&s(&[1, 1, 1, 1, 1, 1, 1, 1, 1])),
            s(&[1, 1, 2, 3, 6, 9, 18, 30, 56])
        );
        assert_eq!(a_to_p(&s(&[0, 0, 0])), s(&[0, 0, 0]));
        assert_eq!(
            p_to_a(&s(&[1, 1, 2, 3, 6, 9, 18, 30])),
            s(&[1, 1, 1, 1, 1, 1, 1, 1])
        );
        assert_eq!(
            p_to_a(&s(&[2, 1, 2, 3, 6, 9, 18, 30])),
            s(&[2, 0, 0, 0, 0, 0, 0, 0])
        );
        assert_eq!(p_to_a(&s(&[1, 1, 3, 8, 25])), s(&[1, 1, 2, 5, 14]));
    }

    #[test]
    fn rational_inputs_round_trip() {
        let x: Sequence = "1/2,-3/7,5,0,-1/9".parse().unwrap();
        assert_eq!(inverti(&invert(&x)), x);
        assert_eq!(euleri(&euler(&x)), x);
        assert_eq!(p_to_a(&a_to_p(&x)), x);
    }

    #[test]
    fn euleri_integral_accepts_integer_input() {
        let p = euleri_integral(&s(&[1, 2, 5, 15, 52, 203, 877, 4140])).unwrap();
        let expected: Vec<BigInt> = [1, 1, 3, 9, 34, 135, 610, 2965]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(p, expected);
        let bad: Sequence = "1/2".parse().unwrap();
        assert!(matches!(
            euleri_integral(&bad),
            Err(SeqError::NonIntegralResult { index: 1, .. })
        ));
    }

    #[test]
    fn empty_sequences() {
        let e = Sequence::default();
        for kind in [
            TransformKind::Invert,
            TransformKind::Inverti,
            TransformKind::Euler,
            TransformKind::Euleri,
            TransformKind::AToP,
            TransformKind::PToA,
        ] {
            assert!(kind.apply(&e).is_empty());
        }
    }
}
