use super::*;
use crate::arith::{LaurentPolynomial, Polynomial};
use crate::cli::{parse_expression, parse_polynomial, GeneratorFile, RelationsFile, SeedFile};
use crate::cluster::{rank3_matrix, MutationWord, Seed};
use crate::groebner::{ideal_equality, GroebnerIdeal};

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn markov(a: i64) -> Seed {
    Seed::initial(rank3_matrix(a, a, a), names(&["x1", "x2", "x3"])).unwrap()
}

fn l(seed: &Seed, e: &str) -> LaurentPolynomial {
    parse_expression(e, seed.names()).unwrap()
}

fn markov_gens(a: i64) -> (Seed, GeneratorSet) {
    let s = markov(a);
    let m = match a {
        2 => "(x1^2 + x2^2 + x3^2)*x1^-1*x2^-1*x3^-1",
        _ => "(x1^3 + x2^3 + x3^3)*x1^-1*x2^-1*x3^-1",
    };
    let g = GeneratorSet::new().with("M", l(&s, m)).unwrap();
    (s, g)
}

struct Fixture {
    seed: Seed,
    gens: GeneratorSet,
    relations: Vec<String>,
}

fn fixture(seed: &str, gens: &str, rels: &str) -> Fixture {
    let seed = SeedFile::from_json(seed).unwrap().to_seed().unwrap();
    let gens = GeneratorFile::from_json(gens).unwrap().to_generator_set(&seed).unwrap();
    let relations = RelationsFile::from_json(rels).unwrap().relations;
    Fixture { seed, gens, relations }
}

fn b332() -> Fixture {
    fixture(
        include_str!("../../fixtures/b332.json"),
        include_str!("../../fixtures/b332_gens.json"),
        include_str!("../../fixtures/b332_relations.json"),
    )
}

fn torus() -> Fixture {
    fixture(
        include_str!("../../fixtures/dreaded_torus.json"),
        include_str!("../../fixtures/dreaded_torus_gens.json"),
        include_str!("../../fixtures/dreaded_torus_relations.json"),
    )
}

#[test]
fn markov_kernel_is_the_hypersurface() {
    let (s, g) = markov_gens(2);
    let pr = build_presentation(&s, &g).unwrap();
    assert_eq!(pr.ambient_names(), names(&["x1", "x2", "x3", "M"]).as_slice());
    let expected = parse_polynomial("x1*x2*x3*M - x1^2 - x2^2 - x3^2", pr.ambient_names()).unwrap();
    let want = GroebnerIdeal::new(4, vec![expected]).unwrap();
    assert!(ideal_equality(pr.kernel(), &want).unwrap());
    assert!(!pr.is_conditional());
}

#[test]
fn frozen_variables_get_inverse_slots() {
    let f = torus();
    let pr = build_presentation(&f.seed, &f.gens).unwrap();
    assert_eq!(
        pr.ambient_names(),
        names(&["a", "b", "c", "d", "X", "Y", "Z", "f", "f_inv"]).as_slice()
    );
    let rel = parse_polynomial("f*f_inv - 1", pr.ambient_names()).unwrap();
    assert!(crate::groebner::ideal_membership(&rel, pr.kernel()).unwrap());
}

#[test]
fn duplicate_and_zero_generators_are_rejected() {
    let s = markov(2);
    let g = GeneratorSet::new().with("M", l(&s, "x1")).unwrap();
    assert!(g.clone().with("M", l(&s, "x2")).is_err());
    assert!(g.with("Z", LaurentPolynomial::zero(3)).is_err());
}

#[test]
fn upper_containment() {
    let (s, g) = markov_gens(2);
    let pr = build_presentation(&s, &g).unwrap();
    assert!(check_upper_containment(&pr, &s).unwrap().holds());

    let m = l(&s, "(x1^2 + x2^2 + x3^2)*x1^-1*x2^-1*x3^-1");
    let after = laurent_in_adjacent_cluster(&s, &m, 0).unwrap();
    assert!(after.nvars() == 3 && !after.is_zero());

    let bad = GeneratorSet::new().with("u", l(&s, "x1^-1")).unwrap();
    let pr = build_presentation(&s, &bad).unwrap();
    let up = check_upper_containment(&pr, &s).unwrap();
    assert!(!up.holds());
    assert_eq!(up.failures, vec![(0, 0)]);

    let f = b332();
    let pr = build_presentation(&f.seed, &f.gens).unwrap();
    assert!(check_upper_containment(&pr, &f.seed).unwrap().holds());
}

#[test]
fn lower_containment_witnesses() {
    let (s, g) = markov_gens(2);
    let pr = build_presentation(&s, &g).unwrap();
    let lower = check_lower_containment(&pr, &s).unwrap();
    assert!(lower.holds());
    let w = lower.witnesses[0].as_ref().unwrap();
    let expect = parse_polynomial("x2*x3*M - x1", pr.ambient_names()).unwrap();
    assert_eq!(pr.image_of(w).unwrap(), pr.image_of(&expect).unwrap());
    assert_eq!(pr.image_of(w).unwrap(), s.mutated_variable(0).unwrap());

    let f = torus();
    let pr = build_presentation(&f.seed, &f.gens).unwrap();
    let lower = check_lower_containment(&pr, &f.seed).unwrap();
    assert!(lower.holds());
    let a1 = parse_polynomial("-c*X + d*Z + b", pr.ambient_names()).unwrap();
    assert_eq!(pr.image_of(&a1).unwrap(), f.seed.mutated_variable(0).unwrap());
    let b1 = parse_polynomial("c*X - b", pr.ambient_names()).unwrap();
    assert_eq!(pr.image_of(&b1).unwrap(), f.seed.mutated_variable(1).unwrap());

    let pr = build_presentation(&s, &GeneratorSet::new()).unwrap();
    let lower = check_lower_containment(&pr, &s).unwrap();
    assert!(!lower.holds());
    assert_eq!(lower.first_failure(), Some(0));
}

#[test]
fn criterion5_on_the_lower_bound_finds_markov_element() {
    let s = markov(2);
    let lb = GeneratorSet::lower_bound(&s).unwrap();
    let pr = build_presentation(&s, &lb).unwrap();
    let c5 = criterion5(&pr, &s).unwrap();
    assert!(!c5.equal);
    let m = l(&s, "(x1^2 + x2^2 + x3^2)*x1^-1*x2^-1*x3^-1");
    assert!(c5.new_elements().contains(&m), "{:?}", c5.new_elements());
    // every candidate is in the upper bound
    for e in c5.new_elements() {
        for i in 0..3 {
            laurent_in_adjacent_cluster(&s, &e, i).unwrap();
        }
    }
}

#[test]
fn criterion5_holds_for_known_presentations() {
    let (s, g) = markov_gens(2);
    let pr = build_presentation(&s, &g).unwrap();
    assert!(criterion5(&pr, &s).unwrap().equal);
    let f = torus();
    let pr = build_presentation(&f.seed, &f.gens).unwrap();
    assert!(criterion5(&pr, &f.seed).unwrap().equal);
}

#[test]
fn verify_fixtures() {
    for f in [b332(), torus()] {
        let r = verify_paper_presentation(&f.seed, &f.gens, &f.relations, &EngineConfig::default()).unwrap();
        assert!(r.all_passed(), "{r:?}");
        assert!(!r.conditional);
    }
}

#[test]
fn verify_markov_three() {
    let (s, g) = markov_gens(3);
    let rels = vec!["x1*x2*x3*M = x1^3 + x2^3 + x3^3".to_string()];
    let r = verify_paper_presentation(&s, &g, &rels, &EngineConfig::default()).unwrap();
    assert!(r.all_passed(), "{r:?}");
}

#[test]
fn verify_rejects_a_sign_error() {
    let f = b332();
    let mut rels = f.relations.clone();
    let first = rels[0].clone();
    let (lhs, rhs) = first.split_once('=').unwrap();
    rels[0] = format!("{lhs}= -({rhs})");
    let r = verify_paper_presentation(&f.seed, &f.gens, &rels, &EngineConfig::default()).unwrap();
    assert!(!r.substitution.passed);
    assert!(!r.all_passed());
}

#[test]
fn verify_rejects_a_missing_relation() {
    let f = torus();
    let rels = f.relations[..4].to_vec();
    let r = verify_paper_presentation(&f.seed, &f.gens, &rels, &EngineConfig::default()).unwrap();
    assert!(r.substitution.passed);
    assert!(!r.ideal_equality.passed);
}

#[test]
fn relations_may_be_laurent_in_frozen_variables() {
    let f = torus();
    let pr = build_presentation(&f.seed, &f.gens).unwrap();
    let rels = vec!["b*X*Z*f^-1 - a*X*f^-1 - b*Y*f^-1 - c*Z*f^-1 = 1".to_string()];
    let parsed = parse_claimed_relations(&pr, &rels).unwrap();
    assert!(pr.image_of(&parsed[0]).unwrap().is_zero());
    let bad = vec!["X*b^-1 = 1".to_string()];
    assert!(parse_claimed_relations(&pr, &bad).is_err());
}

#[test]
fn deep_ideal() {
    let f = torus();
    let pr = build_presentation(&f.seed, &f.gens).unwrap();
    let r = deep_ideal_triviality(&pr, &f.seed, &reduced_words(4, 1)).unwrap();
    assert!(matches!(r, DeepIdealResult::Trivial { .. }), "{r:?}");

    let (s, g) = markov_gens(2);
    let pr = build_presentation(&s, &g).unwrap();
    let r = deep_ideal_triviality(&pr, &s, &[]).unwrap();
    assert_eq!(r, DeepIdealResult::NontrivialForDx { tried: vec![] });
}

#[test]
fn reduced_word_counts() {
    assert_eq!(reduced_words(3, 1).len(), 3);
    assert_eq!(reduced_words(3, 2).len(), 3 + 6);
    assert!(reduced_words(3, 3)
        .iter()
        .all(|w| w.0.windows(2).all(|p| p[0] != p[1])));
    assert_eq!(reduced_words(2, 2)[2], MutationWord::new(vec![0, 1]));
}

#[test]
fn markov_from_lower_bound() {
    let s = markov(2);
    let (p, r) = iterate_default(&s, &GeneratorSet::lower_bound(&s).unwrap(), 5).unwrap();
    assert_eq!(p.status, Status::VerifiedEqualU);
    assert_eq!(p.generator_names.len(), 4);
    assert_eq!(p.relations.len(), 1);
    let gens = p.generator_strings();
    assert_eq!(gens[3].1, "(x1^2 + x2^2 + x3^2)*x1^-1*x2^-1*x3^-1");
    assert!(!r.steps.is_empty());
}

#[test]
fn known_presentation_is_a_fixed_point() {
    let (s, g) = markov_gens(2);
    let (p, r) = iterate_default(&s, &g, 3).unwrap();
    assert_eq!(p.status, Status::VerifiedEqualU);
    assert!(r.steps.iter().all(|s| s.adopted.is_empty()));
    assert_eq!(p.generator_names, names(&["x1", "x2", "x3", "M"]));
}

#[test]
fn max_iterations_is_reported() {
    let s = markov(2);
    let lb = GeneratorSet::lower_bound(&s).unwrap();
    let (p, _) = iterate_default(&s, &lb, 1).unwrap();
    assert_eq!(p.status, Status::MaxIterationsReached);
    let (p, r) = iterate_default(&s, &lb, 0).unwrap();
    assert_eq!(p.status, Status::Candidate);
    assert!(r.steps.is_empty());
}

#[test]
fn kernel_relations_are_normalized() {
    let (s, g) = markov_gens(2);
    let pr = build_presentation(&s, &g).unwrap();
    let rels = kernel_relations(&pr, true).unwrap();
    assert_eq!(rels.len(), 1);
    let r: &Polynomial = &rels[0];
    assert!(r.has_integer_coefficients());
    assert_eq!(r.to_expr_string(pr.ambient_names()), "x1*x2*x3*M - x1^2 - x2^2 - x3^2");
}
