//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Every check compares library answers against the naive truth tables and
//! generators in `common`, never against the library's own evaluator.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use propiso::canon::{ac_canonical, derive, is_theorem_av, is_theorem_nav, nnf_formula, occurrence_permutation, replay};
use propiso::construct::{
    decide_iso_boolean, decide_iso_generality, lemma4_extract, lemma5_implant, lemma6_arrow, BooleanReason,
};
use propiso::formula::{uniform_instance, uniform_instance_pair, BinOp, Polarity};
use propiso::linking::{generalize, LinkEquivalence};
use propiso::oracle::{bounded_closure, oracle_theorem, oracle_witness_search, OracleAnswer};
use propiso::Formula;
use rand::seq::SliceRandom;
use rand::Rng;

/// Wall-clock budget of criteria 1 and 2.
const TIME_LIMIT: Duration = Duration::from_secs(60);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: &[String], detail: String) -> Outcome {
    if failures.is_empty() {
        Outcome { pass: true, detail }
    } else {
        let shown: Vec<&String> = failures.iter().take(3).collect();
        Outcome {
            pass: false,
            detail: format!("{detail}; {} failures, e.g. {shown:?}", failures.len()),
        }
    }
}

// ---------------------------------------------------------------- 1

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();

    // all diversified pairs over {p, q, r}; diversification caps them at 3 leaves
    let names = ["p", "q", "r"];
    let mut small = Vec::new();
    for n in 1..=5usize.min(names.len()) {
        small.extend(formulas_with_leaves(n, &arrangements(&letters(&names), n)));
    }
    let mut pairs = 0usize;
    for a in &small {
        for b in &small {
            pairs += 1;
            if is_theorem_av(a, b).unwrap() != naive_equivalent(a, b) {
                failures.push(format!("{a} / {b}"));
            }
        }
    }

    // the same statement over five letters and up to five leaves, checked per
    // letter set by comparing truth-table classes with canonical-form classes
    let five = ["p", "q", "r", "s", "t"];
    let mut by_letters: BTreeMap<BTreeSet<String>, Vec<Formula>> = BTreeMap::new();
    for n in 1..=5 {
        for g in formulas_with_leaves(n, &arrangements(&letters(&five), n)) {
            by_letters.entry(g.letters()).or_default().push(g);
        }
    }
    let mut formulas = 0usize;
    for (set, group) in &by_letters {
        let ls: Vec<String> = set.iter().cloned().collect();
        let mut table_to_canon: BTreeMap<Vec<bool>, String> = BTreeMap::new();
        let mut canon_to_table: BTreeMap<String, Vec<bool>> = BTreeMap::new();
        for g in group {
            formulas += 1;
            let t = naive_table(g, &ls);
            let c = ac_canonical(g).to_string();
            if table_to_canon.entry(t.clone()).or_insert_with(|| c.clone()) != &c {
                failures.push(format!("equivalent but different canonical forms: {g}"));
            }
            if canon_to_table.entry(c).or_insert(t) != &naive_table(g, &ls) {
                failures.push(format!("same canonical form but inequivalent: {g}"));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > TIME_LIMIT {
        failures.push(format!("took {elapsed:?}"));
    }
    outcome(
        &failures,
        format!("{pairs} pairs over {{p,q,r}} plus {formulas} formulas over 5 letters in {elapsed:.1?}"),
    )
}

// ---------------------------------------------------------------- 2

fn mutate(rng: &mut impl Rng, f: &Formula) -> Formula {
    let ps = f.paths();
    let path = ps.choose(rng).unwrap();
    let mut g = f.clone();
    let node = g.subformula_mut(path).unwrap();
    *node = match node.clone() {
        Formula::And(a, b) => Formula::Or(a, b),
        Formula::Or(a, b) => Formula::And(a, b),
        Formula::Not(a) => *a,
        other => Formula::neg(other),
    };
    g
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(2);
    let mut failures = Vec::new();
    let (mut yes, mut no) = (0, 0);
    for i in 0..10_000 {
        let a = diversified(&mut rng, 1..=6, 0.2);
        let b = match i % 3 {
            0 => diversified(&mut rng, 1..=6, 0.2),
            1 => {
                let steps = rng.gen_range(1..=8);
                shuffle(&mut rng, &a, steps, &REWRITE_AXIOMS)
            }
            _ => {
                let b = shuffle(&mut rng, &a, 3, &REWRITE_AXIOMS);
                mutate(&mut rng, &b)
            }
        };
        let expected = naive_equivalent(&a, &b);
        if expected {
            yes += 1;
        } else {
            no += 1;
        }
        if is_theorem_nav(&a, &b).unwrap() != expected {
            failures.push(format!("{a} / {b}"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > TIME_LIMIT {
        failures.push(format!("took {elapsed:?}"));
    }
    outcome(&failures, format!("10000 pairs ({yes} equivalent, {no} not) in {elapsed:.1?}"))
}

// ---------------------------------------------------------------- 3

fn criterion_3() -> Outcome {
    let mut rng = rng(3);
    let gen = Gen {
        letters: &["p", "q", "r"],
        constants: 0.0,
        negations: 0.25,
    };
    let mut failures = Vec::new();
    let mut total_steps = 0;
    for _ in 0..1000 {
        let a = gen.sized(&mut rng, 1..=7);
        let steps = rng.gen_range(1..=6);
        let b = shuffle(&mut rng, &a, steps, &REWRITE_AXIOMS);
        if ac_canonical(&a) != ac_canonical(&b) {
            failures.push(format!("canonical forms differ: {a} / {b}"));
            continue;
        }
        for (x, y) in [(&a, &b), (&b, &a)] {
            let trace = derive(x, y).unwrap();
            total_steps += trace.len();
            match replay(x, &trace) {
                Ok(end) if &end == y => {}
                other => failures.push(format!("replay of {x} -> {y} ended at {other:?}")),
            }
            let mut perm = occurrence_permutation(x, &trace).unwrap();
            perm.sort_unstable();
            if perm != (0..x.size()).collect::<Vec<_>>() {
                failures.push(format!("trace {x} -> {y} does not permute occurrences"));
            }
        }
    }
    outcome(&failures, format!("1000 shuffled formulas, {total_steps} replayed steps"))
}

// ---------------------------------------------------------------- 4

/// Checks both constructions at occurrence `x` of `a` against truth tables
/// and against the structural shape they promise.
fn check_extraction_and_implant(a: &Formula, x: usize, failures: &mut Vec<String>) -> (Formula, Formula) {
    let l4 = lemma4_extract(a, x).unwrap();
    let letter = a.leaf_letters()[x].to_string();
    let expected_shape = Formula::or(
        Formula::and(Formula::letter(letter.clone()), l4.a1.clone()),
        l4.a2.clone(),
    );
    if !l4.verified || l4.target != expected_shape || !naive_equivalent(a, &l4.target) {
        failures.push(format!("extraction of occurrence {x} from {a}"));
    }
    let l5 = lemma5_implant(a, x, "z").unwrap();
    let mut expected = a.clone();
    let path = a.occurrence_path(x).unwrap();
    let node = expected.subformula_mut(&path).unwrap();
    *node = Formula::and(Formula::letter("z"), node.clone());
    if !l5.verified || l5.b_prime != expected || !naive_entails(&l5.source, &l5.b_prime) {
        failures.push(format!("implant at occurrence {x} of {a}"));
    }
    (l4.target, l5.b_prime)
}

fn generic_leaves(n: usize) -> Vec<Formula> {
    (0..n).map(|i| Formula::letter(format!("x{i}"))).collect()
}

fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    let mut checks = 0usize;

    // every shape and operator choice up to 7 leaves, leaves pairwise distinct:
    // any other formula of that shape is a substitution instance of one of these
    for n in 1..=7 {
        for a in formulas_with_leaves(n, &[generic_leaves(n)]) {
            for x in 0..n {
                check_extraction_and_implant(&a, x, &mut failures);
                checks += 1;
            }
        }
    }

    // every labeling (letters up to renaming, and constants) up to 4 leaves
    for n in 1..=4 {
        for a in formulas_with_leaves(n, &labelings_up_to_renaming(n, true)) {
            for x in 0..a.size() {
                check_extraction_and_implant(&a, x, &mut failures);
                checks += 1;
            }
        }
    }

    // 5 to 7 leaves, sampled: direct check, and the result is the substitution
    // instance of the generic result
    let mut rng = rng(4);
    let mut sampled = 0;
    for _ in 0..3000 {
        let n = rng.gen_range(5..=7);
        let shape = shapes(n).choose(&mut rng).unwrap().clone();
        let ops: Vec<BinOp> = (0..n - 1)
            .map(|_| if rng.gen() { BinOp::And } else { BinOp::Or })
            .collect();
        let leaves: Vec<Formula> = (0..n)
            .map(|_| match rng.gen_range(0..6) {
                0 => Formula::Top,
                1 => Formula::Bot,
                k => Formula::letter(["p", "q", "r", "s"][k - 2]),
            })
            .collect();
        let a = shape.fill(&ops, &leaves);
        if a.size() == 0 {
            continue;
        }
        let generic = shape.fill(&ops, &generic_leaves(n));
        let sigma: BTreeMap<String, Formula> = (0..n).map(|i| (format!("x{i}"), leaves[i].clone())).collect();
        let letter_leaves: Vec<usize> = (0..n).filter(|&i| matches!(leaves[i], Formula::Letter(_))).collect();
        for (x, &gx) in letter_leaves.iter().enumerate() {
            let (t4, t5) = check_extraction_and_implant(&a, x, &mut failures);
            let g4 = lemma4_extract(&generic, gx).unwrap().target.substitute_all(&sigma);
            let g5 = lemma5_implant(&generic, gx, "z").unwrap().b_prime.substitute_all(&sigma);
            if t4 != g4 || t5 != g5 {
                failures.push(format!("occurrence {x} of {a} is not an instance of the generic result"));
            }
            sampled += 1;
        }
    }
    outcome(
        &failures,
        format!("{checks} exhaustive occurrence checks, {sampled} sampled 5-7 leaf checks"),
    )
}

// ---------------------------------------------------------------- 5

/// Replaces a random subformula by something it entails.
fn weaken(rng: &mut impl Rng, f: &Formula, gen: &Gen) -> Formula {
    let ps = f.paths();
    let path = ps.choose(rng).unwrap();
    let mut g = f.clone();
    let node = g.subformula_mut(path).unwrap();
    *node = match (rng.gen_range(0..4), node.clone()) {
        (0, Formula::And(a, b)) => {
            if rng.gen() {
                *a
            } else {
                *b
            }
        }
        (1, Formula::And(a, b)) => Formula::Or(a, b),
        (2, _) => Formula::Top,
        (_, c) => {
            let d = gen.sized(rng, 1..=2);
            if rng.gen() {
                Formula::or(c, d)
            } else {
                Formula::or(d, c)
            }
        }
    };
    g
}

fn criterion_5() -> Outcome {
    let mut rng = rng(5);
    let gen = Gen {
        letters: &["p", "q", "r"],
        constants: 0.1,
        negations: 0.0,
    };
    let mut failures = Vec::new();
    let mut instances = 0;
    while instances < 500 {
        let a = gen.sized(&mut rng, 1..=6);
        let mut b = a.clone();
        for _ in 0..rng.gen_range(1..=3) {
            b = weaken(&mut rng, &b, &gen);
        }
        if b.size() > 10 || a.size() == 0 {
            continue;
        }
        let x = rng.gen_range(0..a.size());
        let p = a.leaf_letters()[x].to_string();
        let ys: Vec<usize> = (0..b.size()).filter(|&y| b.leaf_letters()[y] == p).collect();
        let Some(&y) = ys.choose(&mut rng) else { continue };
        instances += 1;
        if !naive_entails(&a, &b) {
            failures.push(format!("generator broke entailment: {a} -> {b}"));
            continue;
        }
        match lemma6_arrow(&a, &b, x, y) {
            Ok(h) if h.rel == BTreeSet::from([(x, y)]) => {}
            other => failures.push(format!("{a} -> {b} at ({x},{y}): {other:?}")),
        }
    }
    outcome(&failures, format!("{instances} instances, relation exactly {{(x,y)}}"))
}

// ---------------------------------------------------------------- 6

/// A pair of formulas equal to `x` by absorption, with the same occurrences.
fn absorption_pair(rng: &mut impl Rng, x: Formula, y: Formula) -> (Formula, Formula) {
    let left = Formula::or(x.clone(), Formula::and(x.clone(), y.clone()));
    let right = Formula::and(x.clone(), Formula::or(x, y));
    if rng.gen() {
        (left, right)
    } else {
        (right, left)
    }
}

fn homogeneous_pair(rng: &mut impl Rng) -> (Formula, Formula) {
    let gen = Gen {
        letters: &["p", "q", "r"],
        constants: 0.0,
        negations: 0.0,
    };
    let literal = |rng: &mut dyn rand::RngCore| {
        let p = Formula::letter(*["p", "q", "r"].choose(rng).unwrap());
        if rng.gen_bool(0.4) {
            Formula::neg(p)
        } else {
            p
        }
    };
    let base = nnf_formula(&gen.sized(rng, 1..=3));
    let (mut a, mut b) = (base.clone(), base);
    let edits = rng.gen_range(1..=3);
    for _ in 0..edits {
        // replace the same leaf on both sides, each time by something
        // equivalent to it; the leaf sequences of a and b stay identical
        let idx = rng.gen_range(0..a.size());
        let (pa, pb) = (a.occurrence_path(idx).unwrap(), b.occurrence_path(idx).unwrap());
        let leaf = a.subformula(&pa).unwrap().clone();
        let (na, nb) = match rng.gen_range(0..3) {
            0 => {
                let y = literal(rng);
                absorption_pair(rng, leaf, y)
            }
            1 => (Formula::and(leaf.clone(), Formula::Top), Formula::or(Formula::Bot, leaf)),
            _ => (Formula::or(leaf.clone(), Formula::Bot), Formula::and(Formula::Top, leaf)),
        };
        *a.subformula_mut(&pa).unwrap() = na;
        *b.subformula_mut(&pb).unwrap() = nb;
    }
    // negate some leaves consistently, then reassociate and commute one side
    let negated: BTreeSet<String> = ["p", "q", "r"]
        .into_iter()
        .filter(|_| rng.gen_bool(0.3))
        .map(str::to_string)
        .collect();
    let flip = |f: &Formula| {
        let m = negated
            .iter()
            .map(|p| (p.clone(), Formula::neg(Formula::letter(p.as_str()))))
            .collect();
        nnf_formula(&f.substitute_all(&m))
    };
    let (a, b) = (flip(&a), flip(&b));
    let axioms = [
        propiso::canon::Axiom::AssocAnd,
        propiso::canon::Axiom::AssocOr,
        propiso::canon::Axiom::CommAnd,
        propiso::canon::Axiom::CommOr,
    ];
    let steps = rng.gen_range(0..=4);
    let b = shuffle(rng, &b, steps, &axioms);
    (a, b)
}

/// Composite of two occurrence relations, computed directly.
fn relation_compose(f: &[[usize; 2]], g: &[[usize; 2]]) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for &[i, j] in f {
        for &[k, l] in g {
            if j == k {
                out.insert((i, l));
            }
        }
    }
    out
}

fn signed(f: &Formula) -> Vec<(String, Option<Polarity>)> {
    f.occurrences().into_iter().map(|o| (o.letter, o.polarity)).collect()
}

fn criterion_6() -> Outcome {
    let mut rng = rng(6);
    let mut failures = Vec::new();
    let mut sizes = 0;
    for _ in 0..500 {
        let (a, b) = homogeneous_pair(&mut rng);
        sizes += a.size();
        if !naive_equivalent(&a, &b) || a.signed_counts().unwrap() != b.signed_counts().unwrap() {
            failures.push(format!("generator produced a bad pair {a} / {b}"));
            continue;
        }
        let v = decide_iso_boolean(&a, &b).unwrap();
        let Some(w) = v.witness.filter(|_| v.iso) else {
            failures.push(format!("{a} / {b}: {}", v.reason));
            continue;
        };
        let j = w.to_json();
        let id = |n: usize| (0..n).map(|i| (i, i)).collect::<BTreeSet<_>>();
        let (sa, sb) = (signed(&a), signed(&b));
        let respects = j.f.iter().all(|&[s, t]| sa[s] == sb[t]) && j.g.iter().all(|&[s, t]| sb[s] == sa[t]);
        if relation_compose(&j.f, &j.g) != id(a.size())
            || relation_compose(&j.g, &j.f) != id(b.size())
            || !w.verified()
            || !respects
        {
            failures.push(format!("witness for {a} / {b} is not an inverse pair: {j:?}"));
        }
    }
    outcome(
        &failures,
        format!("500 pairs ({sizes} source occurrences), all iso with verified witnesses"),
    )
}

// ---------------------------------------------------------------- 7

/// `a` and `b` are the same formula up to a bijective renaming of letters.
fn alpha_equivalent(a: &Formula, b: &Formula) -> bool {
    let one_way = uniform_instance(a, b).is_some_and(|m| {
        let targets: BTreeSet<&String> = m.values().collect();
        targets.len() == m.len()
    });
    one_way && uniform_instance(b, a).is_some()
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            failures.push(what.to_string());
        }
    };

    let (a, b) = (f("p & (~p | p)"), f("p"));
    let cases = [
        ("s0 s1 | s2 t0", "p & (~p | q)", "q"),
        ("s0 t0", "p & (~q | r)", "p"),
    ];
    for (links, ea, eb) in cases {
        let l = LinkEquivalence::parse(links, a.size(), b.size()).unwrap();
        let g = generalize(&a, &b, &l).unwrap();
        let joint = |x: &Formula, y: &Formula| Formula::and(x.clone(), Formula::neg(y.clone()));
        check(
            alpha_equivalent(&joint(&g.source, &g.target), &joint(&f(ea), &f(eb))),
            &format!("generalization with {links} gave {} -> {}", g.source, g.target),
        );
        check(
            uniform_instance_pair(&a, &b, &g.source, &g.target).is_some(),
            "inputs are not instances of the generalization",
        );
    }

    let boolean = |x: &str, y: &str| decide_iso_boolean(&f(x), &f(y)).unwrap();
    let generality = |x: &str, y: &str| decide_iso_generality(&f(x), &f(y)).unwrap().iso;
    let v = boolean("p & (~p | p)", "p");
    check(
        !v.iso && matches!(v.reason, BooleanReason::NotLetterHomogeneous(_)),
        "p & (~p | p) vs p should be not iso",
    );
    check(boolean("p & T", "p").iso, "p & T vs p should be iso");
    check(
        boolean("p | (p & q)", "p & (p | q)").iso,
        "absorption pair should be Boolean iso",
    );
    check(
        !generality("p | (p & q)", "p & (p | q)"),
        "absorption pair should not be generality iso",
    );
    check(generality("~(p | q)", "~p & ~q"), "De Morgan pair should be generality iso");
    check(generality("~(p & q)", "~p | ~q"), "De Morgan pair should be generality iso");
    outcome(&failures, "2 generalizations and 6 verdicts".into())
}

// ---------------------------------------------------------------- 8

fn criterion_8() -> Outcome {
    let mut failures = Vec::new();
    let names = ["p", "q"];

    // every negation-reduced formula over {p, q} with up to 3 leaves, and
    // sampled formulas with 4 to 6 leaves and arbitrary negations
    let mut domain = Vec::new();
    for n in 1..=3 {
        domain.extend(formulas_with_leaves(n, &words(&literals(&names), n)));
    }
    let exhaustive = domain.len();
    let mut rng = rng(8);
    let gen = Gen {
        letters: &names,
        constants: 0.0,
        negations: 0.2,
    };
    for _ in 0..150 {
        domain.push(gen.sized(&mut rng, 4..=6));
    }

    // oracle yes implies decider yes: every member of a closure is a yes pair
    let mut yes_pairs = 0usize;
    for (i, a) in domain.iter().enumerate() {
        let depth = if i < exhaustive { 3 } else { 2 };
        for b in &bounded_closure(a, depth).unwrap().members {
            yes_pairs += 1;
            if !is_theorem_nav(a, b).unwrap() {
                failures.push(format!("oracle reached {b} from {a}"));
            }
        }
    }

    // decider yes is reached by the oracle at depth 6 (coverage)
    let reduced = &domain[..exhaustive];
    let (mut theorems, mut reached) = (0usize, 0usize);
    for a in reduced.iter().filter(|a| a.size() <= 2) {
        for b in reduced {
            if is_theorem_nav(a, b).unwrap() {
                theorems += 1;
                if oracle_theorem(a, b, 6).unwrap() == OracleAnswer::Yes {
                    reached += 1;
                }
            }
        }
    }
    let mut rng2 = rng_for_coverage();
    for _ in 0..100 {
        let a = reduced.choose(&mut rng2).unwrap();
        let b = shuffle(&mut rng2, a, 4, &REWRITE_AXIOMS);
        theorems += 1;
        if oracle_theorem(a, &b, 6).unwrap() == OracleAnswer::Yes {
            reached += 1;
        }
    }

    // witness search agrees with the Boolean decider on all reduced pairs up
    // to 3 leaves, and on generated homogeneous pairs
    let mut pairs = 0usize;
    let mut isos = 0usize;
    let mut compare = |a: &Formula, b: &Formula, failures: &mut Vec<String>| {
        pairs += 1;
        let decided = decide_iso_boolean(a, b).unwrap().iso;
        let found = oracle_witness_search(a, b).unwrap().is_some();
        isos += usize::from(decided);
        if decided != found {
            failures.push(format!("decider {decided}, search {found}: {a} / {b}"));
        }
    };
    for a in reduced {
        for b in reduced {
            compare(a, b, &mut failures);
        }
    }
    let mut rng3 = common::rng(88);
    for _ in 0..200 {
        let (a, b) = homogeneous_pair(&mut rng3);
        if a.size() <= 8 && b.size() <= 8 {
            compare(&a, &b, &mut failures);
        }
    }

    let coverage = 100.0 * reached as f64 / theorems as f64;
    outcome(
        &failures,
        format!(
            "{yes_pairs} oracle-yes pairs, 0 contradictions allowed; \
             coverage {reached}/{theorems} ({coverage:.1}%); \
             witness search on {pairs} pairs ({isos} iso)"
        ),
    )
}

fn rng_for_coverage() -> rand::rngs::StdRng {
    common::rng(808)
}

// ---------------------------------------------------------------- 9

fn criterion_9() -> Outcome {
    let mut rng = rng(9);
    let gen = Gen {
        letters: &["p", "q", "r", "x1", "foo", "t0"],
        constants: 0.15,
        negations: 0.3,
    };
    let mut failures = Vec::new();
    for _ in 0..10_000 {
        let a = gen.sized(&mut rng, 1..=10);
        let printed = a.to_string();
        match propiso::parse(&printed) {
            Ok(b) if b == a => {}
            other => failures.push(format!("{printed}: {other:?}")),
        }
    }
    outcome(&failures, "10000 random formulas".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("AC theoremhood equals equivalence on diversified &| formulas", criterion_1),
        ("theoremhood with ~ equals equivalence on random diversified pairs", criterion_2),
        ("canonical forms survive shuffles; derivations replay", criterion_3),
        ("extraction and implantation are tautologies", criterion_4),
        ("single-link arrows have relation {(x,y)}", criterion_5),
        ("Boolean witnesses compose to identities", criterion_6),
        ("worked examples reproduced", criterion_7),
        ("oracles agree with the deciders", criterion_8),
        ("parse . print is the identity", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| Outcome {
            pass: false,
            detail: format!(
                "panicked: {}",
                e.downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default()
            ),
        });
        failed += usize::from(!result.pass);
        println!(
            "criterion {}: {} - {name}: {} [{:.1?}]",
            i + 1,
            if result.pass { "PASS" } else { "FAIL" },
            result.detail,
            start.elapsed()
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
