use hopfseq::freealg::{
    coproduct, decomposable_span, derived_basis, eulerian_idempotent, is_primitive, primitive_space_basis,
    reduced_coproduct, verify_opg, MultiTensor, NcPoly, OrderedPrimGenSet, Surjection, TensorElement,
};
use hopfseq::linalg::{EchelonSpan, SparseVec};
use hopfseq::lyndon::{enumerate_words, GradedAlphabet, Word};
use hopfseq::transform::{a_to_p, invert};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn sparse(f: &NcPoly) -> SparseVec<Word> {
    f.terms().iter().map(|(w, c)| (w.clone(), c.clone())).collect()
}

fn rank(polys: &[NcPoly]) -> usize {
    let mut span = EchelonSpan::new();
    for p in polys {
        span.insert(&sparse(p));
    }
    span.dim()
}

/// Count vectors over degrees `1..=3` with total at most 3.
fn small_alphabets() -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 0..=3 {
        for b in 0..=3 - a {
            for c in 0..=3 - a - b {
                if a + b + c > 0 {
                    out.push(vec![a, b, c]);
                }
            }
        }
    }
    out
}

fn alphabet(counts: &[usize], n: usize) -> GradedAlphabet {
    let mut c = counts.to_vec();
    c.resize(n.max(c.len()), 0);
    GradedAlphabet::new(c)
}

/// A random homogeneous polynomial: the `(seed, coefficient)` pairs pick words.
fn sample(alpha: &GradedAlphabet, n: usize, picks: &[(usize, i64)]) -> NcPoly {
    let words = enumerate_words(alpha, n).unwrap();
    if words.is_empty() {
        return NcPoly::zero(alpha);
    }
    NcPoly::from_terms(alpha, picks.iter().map(|&(i, c)| (words[i % words.len()].clone(), q(c)))).unwrap()
}

fn alphabet_strategy() -> impl Strategy<Value = Vec<usize>> {
    prop::sample::select(small_alphabets())
}

fn picks() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..10_000, -4i64..=4), 1..=4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coassociative_and_cocommutative(counts in alphabet_strategy(), n in 1usize..=6, p in picks()) {
        let alpha = alphabet(&counts, n);
        let f = sample(&alpha, n, &p);
        let delta = MultiTensor::from_poly(&f).coproduct_at(0);
        prop_assert_eq!(delta.coproduct_at(0), delta.coproduct_at(1));
        let d = coproduct(&f);
        prop_assert_eq!(d.swap(), d);
    }

    #[test]
    fn coproduct_is_multiplicative(
        counts in alphabet_strategy(),
        i in 1usize..=3, j in 1usize..=3,
        p1 in picks(), p2 in picks(),
    ) {
        let alpha = alphabet(&counts, i + j);
        let f = sample(&alpha, i, &p1);
        let g = sample(&alpha, j, &p2);
        prop_assert_eq!(coproduct(&f.mul(&g).unwrap()), coproduct(&f).mul(&coproduct(&g)));
    }

    #[test]
    fn eulerian_idempotent_projects_onto_primitives(counts in alphabet_strategy(), n in 1usize..=5, p in picks()) {
        let alpha = alphabet(&counts, n);
        let f = sample(&alpha, n, &p);
        let e = eulerian_idempotent(&f).unwrap();
        prop_assert!(reduced_coproduct(&e).is_zero());
        prop_assert_eq!(eulerian_idempotent(&e).unwrap(), e);
    }

    #[test]
    fn perturbed_generators_project_to_a_generating_set(
        counts in prop::sample::select(vec![vec![2, 1, 0], vec![1, 1, 1], vec![2, 0, 1], vec![1, 2, 0]]),
        tails in prop::collection::vec(picks(), 4),
    ) {
        let degree = 4;
        let alpha = alphabet(&counts, degree);
        let mut elements = Vec::new();
        for (k, l) in alpha.letters_up_to(degree).into_iter().enumerate() {
            let mut x = NcPoly::letter(&alpha, l).unwrap();
            // decomposable tail: words of length >= 2 of the same degree
            let words: Vec<Word> = enumerate_words(&alpha, l.degree).unwrap().into_iter().filter(|w| w.len() >= 2).collect();
            if !words.is_empty() {
                for &(i, c) in &tails[k % tails.len()] {
                    x = x.add(&NcPoly::from_word(&alpha, words[i % words.len()].clone(), q(c)).unwrap()).unwrap();
                }
            }
            elements.push(eulerian_idempotent(&x).unwrap());
        }
        let opg = OrderedPrimGenSet::from_elements(&alpha, elements, degree).unwrap();
        let verdict = verify_opg(&opg, degree).unwrap();
        prop_assert!(verdict.valid, "{:?}", verdict.failure);
    }

    #[test]
    fn surjection_respects_coproducts(n in 1usize..=4, p in picks(), tail in -3i64..=3) {
        let h = GradedAlphabet::new(vec![2, 1, 0, 0]);
        let k = GradedAlphabet::new(vec![2, 0, 0, 0]);
        let hp = |s: &str| NcPoly::parse(s, &h).unwrap();
        let kp = |s: &str| NcPoly::parse(s, &k).unwrap();
        let z = eulerian_idempotent(&hp(&format!("g2_1 + {tail}*g1_1.g1_2"))).unwrap();
        let host = OrderedPrimGenSet::new(&h, vec![vec![hp("g1_1"), hp("g1_2")], vec![z], vec![], vec![]]);
        let target = OrderedPrimGenSet::new(&k, vec![vec![kp("g1_1"), kp("g1_2")], vec![], vec![], vec![]]);
        let f = Surjection::new(&host, &target).unwrap();
        let x = sample(&h, n, &p);
        prop_assert_eq!(coproduct(&f.apply(&x).unwrap()), f.apply_tensor(&coproduct(&x)).unwrap());
    }
}

#[test]
fn idempotent_fixes_primitive_basis() {
    for counts in [vec![2, 1, 0, 0, 0], vec![1, 1, 1, 0, 0], vec![3, 0, 0, 0, 0]] {
        let alpha = alphabet(&counts, 5);
        for n in 1..=5 {
            for b in primitive_space_basis(&alpha, n).unwrap() {
                assert!(is_primitive(&b));
                assert_eq!(eulerian_idempotent(&b).unwrap(), b);
            }
        }
    }
}

#[test]
fn idempotent_on_every_word() {
    let alpha = alphabet(&[2, 1], 4);
    for n in 1..=4 {
        for w in enumerate_words(&alpha, n).unwrap() {
            let e = eulerian_idempotent(&NcPoly::from_word(&alpha, w.clone(), q(1)).unwrap()).unwrap();
            assert!(reduced_coproduct(&e).is_zero(), "{w}");
            assert_eq!(eulerian_idempotent(&e).unwrap(), e, "{w}");
        }
    }
}

#[test]
fn primitive_dimensions_match_a_to_p() {
    for counts in small_alphabets() {
        let alpha = alphabet(&counts, 6);
        let p = a_to_p(&alpha.count_sequence());
        for n in 1..=6 {
            let basis = primitive_space_basis(&alpha, n).unwrap();
            assert_eq!(BigInt::from(basis.len()), p.at(n).to_integer(), "{counts:?} n={n}");
            assert_eq!(rank(&basis), basis.len());
        }
    }
}

#[test]
fn decomposables_and_derived_dimensions() {
    for counts in small_alphabets() {
        let alpha = alphabet(&counts, 6);
        let a = alpha.count_sequence();
        let h = invert(&a);
        let p = a_to_p(&a);
        for n in 1..=6 {
            let an = BigInt::from(alpha.count(n));
            assert_eq!(
                BigInt::from(decomposable_span(&alpha, n).unwrap().dim()),
                h.at(n).to_integer() - &an,
                "{counts:?} n={n}"
            );
            let derived = derived_basis(&alpha, n).unwrap();
            assert_eq!(BigInt::from(rank(&derived)), p.at(n).to_integer() - &an, "{counts:?} n={n}");
            assert!(derived.iter().all(is_primitive));
        }
    }
}

#[test]
fn tensor_zero_is_neutral() {
    let alpha = alphabet(&[2], 2);
    let f = NcPoly::parse("g1_1.g1_2 - 3*g1_2", &alpha).unwrap();
    let d = coproduct(&f);
    assert_eq!(d.add(&TensorElement::zero(&alpha)), d);
}
