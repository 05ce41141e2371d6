//! Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if any
//! criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use monopro::check::{monopro_laws, Inputs, Observe};
use monopro::container::{Identity, IdentityF, ListF, Logged, LoggerF, OptionF};
use monopro::day::{
    alpha, alpha_inv, day_collapse, day_curry, day_map, day_uncurry, gamma, lambda, lambda_inv, rho, rho_inv,
    Associator, Collapse, Day, DayMorphism, DayPair, PairMorphism, Star, Unit, UnitPro,
};
use monopro::effect::{qsort_logged, EffectArrow, Kleisli, Lift};
use monopro::free::{cons, embed, empty_free, interpret, star_free, Free, FreeChain};
use monopro::monocle::{apply_monocle, compose_rep, each2, each3, each4, each_vec, fold_of, traverse_of};
use monopro::monoid::{IntSum, ListConcat, StringConcat};
use monopro::profunctor::{Forget, ForgetPro, Hom, IdMorphism, ProMorphism, Siso};
use monopro::samples::{self, affine};
use monopro::{Applicative, MonoPro, Profunctor, Transform, Value};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x6d6f_6e6f_7072_6f00;
const LAW_SAMPLES: usize = 100;
const DAY_SAMPLES: usize = 50;
const FREE_SAMPLES: usize = 100;
const LAW_TIME_BUDGET: Duration = Duration::from_secs(60);
const CLI_REPEATS: usize = 10;

const GOLDEN_SORTED: &str = include_str!("golden/qsort_b_a_c.txt");
const GOLDEN_FAILED: &str = include_str!("golden/qsort_b_empty_c.txt");

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn rng_for(criterion: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ criterion)
}

fn index(rng: &mut ChaCha8Rng) -> usize {
    rng.gen_range(0..1000)
}

fn small(rng: &mut ChaCha8Rng) -> i64 {
    rng.gen_range(0..8)
}

// 1. Monoidal profunctor laws across the instance roster.

fn sampled_laws<P: MonoPro + Observe>(
    family: impl Fn(usize) -> P::P<i64, i64>,
    scope: Inputs,
    rng: &mut ChaCha8Rng,
) -> Result<usize, String> {
    let mut compared = 0;
    for _ in 0..LAW_SAMPLES {
        let (f, g, h) = (family(index(rng)), family(index(rng)), family(index(rng)));
        let a = small(rng);
        let triple = ((small(rng), small(rng)), small(rng));
        compared += monopro_laws::<P, i64, i64, i64, i64, i64, i64>(f, g, h, &[a], &[triple], scope)
            .map_err(|v| v.to_string())?;
    }
    Ok(compared)
}

fn law_suite() -> Verdict {
    let mut rng = rng_for(1);
    let started = Instant::now();
    let mut compared = 0;
    let mut instances = 0;
    let mut run = |name: &str, result: Result<usize, String>| -> Result<(), String> {
        instances += 1;
        compared += result.map_err(|e| format!("{name}: {e}"))?;
        Ok(())
    };
    run("Transform", sampled_laws::<Hom>(affine, Inputs::All, &mut rng))?;
    run(
        "Siso<Identity,Option>",
        sampled_laws::<Siso<IdentityF, OptionF>>(samples::siso_identity_option, Inputs::All, &mut rng),
    )?;
    run(
        "Siso<Option,List>",
        sampled_laws::<Siso<OptionF, ListF>>(samples::siso_option_list, Inputs::All, &mut rng),
    )?;
    run(
        "Siso<List,Logger>",
        sampled_laws::<Siso<ListF, LoggerF>>(samples::siso_list_logger, Inputs::All, &mut rng),
    )?;
    run(
        "Forget<IntSum>",
        sampled_laws::<Forget<IntSum>>(samples::forget_sum, Inputs::All, &mut rng),
    )?;
    run(
        "Forget<StringConcat>",
        sampled_laws::<Forget<StringConcat>>(samples::forget_string, Inputs::All, &mut rng),
    )?;
    run(
        "Forget<ListConcat>",
        sampled_laws::<Forget<ListConcat<i64>>>(samples::forget_list, Inputs::All, &mut rng),
    )?;
    run(
        "Kleisli<Identity>",
        sampled_laws::<Kleisli<IdentityF>>(samples::kleisli_identity, Inputs::All, &mut rng),
    )?;
    run(
        "Kleisli<Option>",
        sampled_laws::<Kleisli<OptionF>>(samples::kleisli_option, Inputs::All, &mut rng),
    )?;
    run(
        "Kleisli<List>",
        sampled_laws::<Kleisli<ListF>>(samples::kleisli_list, Inputs::All, &mut rng),
    )?;
    run(
        "Kleisli<Logger>",
        sampled_laws::<Kleisli<LoggerF>>(samples::kleisli_logger, Inputs::All, &mut rng),
    )?;
    run(
        "FreeChain<Hom>",
        sampled_laws::<Free<Hom>>(samples::free_hom, Inputs::All, &mut rng),
    )?;
    run(
        "Lift<Identity>",
        sampled_laws::<Lift<IdentityF>>(
            |k| samples::lift_sample(k, samples::kleisli_identity),
            Inputs::All,
            &mut rng,
        ),
    )?;
    run(
        "Lift<Option>",
        sampled_laws::<Lift<OptionF>>(
            |k| samples::lift_sample(k, samples::kleisli_option),
            Inputs::All,
            &mut rng,
        ),
    )?;
    run(
        "Lift<List>",
        sampled_laws::<Lift<ListF>>(
            |k| samples::lift_sample(k, samples::kleisli_list),
            Inputs::Pure,
            &mut rng,
        ),
    )?;
    run(
        "Lift<Logger>",
        sampled_laws::<Lift<LoggerF>>(
            |k| samples::lift_sample(k, samples::kleisli_logger),
            Inputs::Pure,
            &mut rng,
        ),
    )?;
    let elapsed = started.elapsed();
    ensure(elapsed < LAW_TIME_BUDGET, || {
        format!("took {elapsed:?}, budget {LAW_TIME_BUDGET:?}")
    })?;
    Ok(format!(
        "{instances} instances x {LAW_SAMPLES} samples, {compared} comparisons, 0 failures, {:.2}s \
         (Lift<List>, Lift<Logger> on pure inputs)",
        elapsed.as_secs_f64()
    ))
}

// 2. Day convolution coherence.

struct CollapseLeft;

impl ProMorphism<Day<Day<Hom, Hom>, Hom>, Hom> for CollapseLeft {
    fn apply<S: Value, T: Value>(&self, d: DayPair<Day<Hom, Hom>, Hom, S, T>) -> Transform<S, T> {
        day_collapse(&day_map(&Collapse, &IdMorphism, d))
    }
}

struct CollapseRight;

impl ProMorphism<Day<Hom, Day<Hom, Hom>>, Hom> for CollapseRight {
    fn apply<S: Value, T: Value>(&self, d: DayPair<Hom, Day<Hom, Hom>, S, T>) -> Transform<S, T> {
        day_collapse(&day_map(&IdMorphism, &Collapse, d))
    }
}

struct WithUnit;

impl PairMorphism<Hom, Unit, Hom> for WithUnit {
    fn apply<A: Value, B: Value, C: Value, D: Value>(
        &self,
        p: Transform<A, B>,
        u: UnitPro<C, D>,
    ) -> Transform<(A, C), (B, D)> {
        let d = u.into_value();
        Transform::new(move |(a, _)| (p.apply(a), d.clone()))
    }
}

struct UnitWith;

impl PairMorphism<Unit, Hom, Hom> for UnitWith {
    fn apply<A: Value, B: Value, C: Value, D: Value>(
        &self,
        u: UnitPro<A, B>,
        q: Transform<C, D>,
    ) -> Transform<(A, C), (B, D)> {
        let b = u.into_value();
        Transform::new(move |(_, c)| (b.clone(), q.apply(c)))
    }
}

fn split(k: usize) -> Transform<i64, (i64, i64)> {
    match k % 3 {
        0 => Transform::new(|x| (x, x)),
        1 => Transform::new(|x| (x, x + 1)),
        _ => Transform::new(|x| (2 * x, x - 3)),
    }
}

fn merge(k: usize) -> Transform<(i64, i64), i64> {
    match k % 3 {
        0 => Transform::new(|(a, b)| a + b),
        1 => Transform::new(|(a, b)| a - b),
        _ => Transform::new(|(a, b)| 10 * a + b),
    }
}

fn hom_pair(rng: &mut ChaCha8Rng) -> DayPair<Hom, Hom, i64, i64> {
    DayPair::new(
        affine(index(rng)),
        affine(index(rng)),
        split(index(rng)),
        merge(index(rng)),
    )
}

fn agree(what: &str, lhs: &Transform<i64, i64>, rhs: &Transform<i64, i64>) -> Result<(), String> {
    for x in samples::ints() {
        let (l, r) = (lhs.apply(x), rhs.apply(x));
        ensure(l == r, || format!("{what} at {x}: {l} vs {r}"))?;
    }
    Ok(())
}

fn day_coherence() -> Verdict {
    let mut rng = rng_for(2);
    for _ in 0..DAY_SAMPLES {
        let p = affine(index(&mut rng));
        agree("rho after rho_inv", &rho(rho_inv::<Hom, i64, i64>(p.clone())), &p)?;
        agree(
            "lambda after lambda_inv",
            &lambda(lambda_inv::<Hom, i64, i64>(p.clone())),
            &p,
        )?;

        let v = small(&mut rng);
        let with_unit = DayPair::<Hom, Unit, i64, i64>::new(
            p.clone(),
            UnitPro::<i64, i64>::new(v),
            split(index(&mut rng)),
            merge(index(&mut rng)),
        );
        let observe = |d| DayMorphism::<Hom, Unit, Hom>::apply(&day_uncurry(WithUnit), d);
        agree(
            "rho_inv after rho",
            &observe(rho_inv(rho(with_unit.clone()))),
            &observe(with_unit),
        )?;
        let unit_with = DayPair::<Unit, Hom, i64, i64>::new(
            UnitPro::<i64, i64>::new(v),
            p,
            split(index(&mut rng)),
            merge(index(&mut rng)),
        );
        let observe = |d| DayMorphism::<Unit, Hom, Hom>::apply(&day_uncurry(UnitWith), d);
        agree(
            "lambda_inv after lambda",
            &observe(lambda_inv(lambda(unit_with.clone()))),
            &observe(unit_with),
        )?;

        let nested = DayPair::<Day<Hom, Hom>, Hom, i64, i64>::new(
            hom_pair(&mut rng),
            affine(index(&mut rng)),
            split(index(&mut rng)),
            merge(index(&mut rng)),
        );
        let left = CollapseLeft.apply(nested.clone());
        agree(
            "alpha preserves collapse",
            &CollapseRight.apply(alpha(nested.clone())),
            &left,
        )?;
        agree(
            "alpha_inv after alpha",
            &CollapseLeft.apply(alpha_inv(alpha(nested.clone()))),
            &left,
        )?;
        let right_nested = alpha(nested.clone());
        agree(
            "alpha after alpha_inv",
            &CollapseRight.apply(alpha(alpha_inv(right_nested.clone()))),
            &CollapseRight.apply(right_nested),
        )?;

        let four = DayPair::<Day<Day<Hom, Hom>, Hom>, Hom, i64, i64>::new(
            nested,
            affine(index(&mut rng)),
            split(index(&mut rng)),
            merge(index(&mut rng)),
        );
        let top = alpha(alpha(four.clone()));
        let bottom = day_map(&IdMorphism, &Associator, alpha(day_map(&Associator, &IdMorphism, four)));
        let flatten =
            |x: DayPair<Hom, Day<Hom, Day<Hom, Hom>>, i64, i64>| day_collapse(&day_map(&IdMorphism, &CollapseRight, x));
        agree("pentagon", &flatten(top), &flatten(bottom))?;

        let d = hom_pair(&mut rng);
        agree(
            "gamma involution",
            &day_collapse(&gamma(gamma(d.clone()))),
            &day_collapse(&d),
        )?;

        let round = DayMorphism::<Hom, Hom, Hom>::apply(&day_uncurry(day_curry(Collapse)), d.clone());
        agree("uncurry after curry", &round, &day_collapse(&d))?;
        let (p, q) = (affine(index(&mut rng)), affine(index(&mut rng)));
        let direct: Transform<(i64, i64), (i64, i64)> =
            PairMorphism::<Hom, Hom, Hom>::apply(&Star, p.clone(), q.clone());
        let round: Transform<(i64, i64), (i64, i64)> =
            PairMorphism::<Hom, Hom, Hom>::apply(&day_curry(day_uncurry(Star)), p, q);
        for x in samples::ints() {
            ensure(direct.apply((x, x + 1)) == round.apply((x, x + 1)), || {
                format!("curry after uncurry at {x}")
            })?;
        }
    }
    Ok(format!(
        "{DAY_SAMPLES} sampled pairs: unitor/associator round trips, pentagon, gamma involution, curry/uncurry"
    ))
}

// 3. Free monoidal profunctor.

struct Logging;

impl ProMorphism<Hom, Kleisli<LoggerF>> for Logging {
    fn apply<A: Value, B: Value>(&self, p: Transform<A, B>) -> EffectArrow<LoggerF, A, B> {
        EffectArrow::new(move |a| Logged::new(vec!["h".into()], p.apply(a)))
    }
}

fn chain_of(ks: &[usize]) -> FreeChain<Hom, i64, i64> {
    match ks.split_first() {
        None => FreeChain::stop(0),
        Some((&k, rest)) => Free::<Hom>::dimap(
            Transform::new(|x: i64| (x, x)),
            Transform::new(|(a, b): (i64, i64)| a + b),
            star_free(embed(affine(k)), chain_of(rest)),
        ),
    }
}

fn random_chain(rng: &mut ChaCha8Rng) -> (Vec<usize>, FreeChain<Hom, i64, i64>) {
    let len = rng.gen_range(0..4);
    let ks: Vec<usize> = (0..len).map(|_| index(rng)).collect();
    let chain = chain_of(&ks);
    (ks, chain)
}

fn free_universal_property() -> Verdict {
    let mut rng = rng_for(3);
    for _ in 0..FREE_SAMPLES {
        let p = affine(index(&mut rng));
        let via = interpret::<Hom, Kleisli<LoggerF>, _, _, _>(&Logging, &embed::<Hom, i64, i64>(p.clone()));
        let direct = Logging.apply(p);
        for x in samples::ints() {
            ensure(via.run(x) == direct.run(x), || format!("interpret after embed at {x}"))?;
        }

        let ((ks, a), (js, b)) = (random_chain(&mut rng), random_chain(&mut rng));
        let lhs: EffectArrow<LoggerF, (i64, i64), (i64, i64)> =
            interpret::<Hom, Kleisli<LoggerF>, _, _, _>(&Logging, &star_free(a.clone(), b.clone()));
        let rhs = Kleisli::<LoggerF>::star(
            interpret::<Hom, Kleisli<LoggerF>, _, _, _>(&Logging, &a),
            interpret::<Hom, Kleisli<LoggerF>, _, _, _>(&Logging, &b),
        );
        for x in samples::ints() {
            ensure(lhs.run((x, 7 - x)) == rhs.run((x, 7 - x)), || {
                format!("star homomorphism at {x}")
            })?;
        }
        let empty = interpret::<Hom, Kleisli<LoggerF>, _, _, _>(&Logging, &empty_free());
        ensure(empty.run(()) == LoggerF::pure(()), || "empty homomorphism".into())?;

        ensure(a.depth() == ks.len(), || "depth of a chain".into())?;
        let joined = star_free(a.clone(), b.clone()).depth();
        ensure(joined == ks.len() + js.len(), || {
            format!("depth {joined} != {} + {}", ks.len(), js.len())
        })?;
        ensure(
            cons::<Hom, i64, i64, _, _>(affine(0), b).depth() == js.len() + 1,
            || "depth of cons".into(),
        )?;
    }
    Ok(format!(
        "{FREE_SAMPLES} samples: interpret/embed, star and empty homomorphism, depth additivity"
    ))
}

// 4. Monocles.

fn vectors(n: usize) -> Vec<Vec<i64>> {
    (0..n).fold(vec![Vec::new()], |acc, _| {
        acc.iter()
            .flat_map(|prefix| {
                (0..3).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect()
    })
}

fn monocle_golden() -> Verdict {
    let folded =
        fold_of::<StringConcat, _, _, String>(&each3::<String, String>(), ("AA".into(), "BB".into(), "CC".into()));
    ensure(folded == "AABBCC", || format!("fold gave {folded:?}"))?;

    let mut checked = 0;
    for n in 0..=3 {
        let rep = each_vec::<i64, i64>(n).map_err(|e| e.to_string())?;
        for v in vectors(n) {
            ensure(rep.merge(rep.split(v.clone())) == v, || {
                format!("merge after split at {v:?}")
            })?;
            ensure(rep.split(rep.merge(v.clone())) == v, || {
                format!("split after merge at {v:?}")
            })?;
            checked += 1;
        }
    }

    let f = Transform::new(|x: i64| 2 * x + 1);
    let tagged = ForgetPro::<StringConcat, i64, i64>::new(|x: i64| format!("<{x}>"));
    for outer_n in 0..=3 {
        for inner_n in 0..=3 {
            let outer = each_vec::<Vec<i64>, Vec<i64>>(outer_n).map_err(|e| e.to_string())?;
            let inner = each_vec::<i64, i64>(inner_n).map_err(|e| e.to_string())?;
            let composite = compose_rep(&outer, &inner);
            let flat = apply_monocle::<Hom, _, _, _, _>(&composite, f.clone());
            let nested = apply_monocle::<Hom, _, _, _, _>(&outer, apply_monocle::<Hom, _, _, _, _>(&inner, f.clone()));
            let flat_fold = apply_monocle::<Forget<StringConcat>, _, _, _, _>(&composite, tagged.clone());
            let nested_fold = apply_monocle::<Forget<StringConcat>, _, _, _, _>(
                &outer,
                apply_monocle::<Forget<StringConcat>, _, _, _, _>(&inner, tagged.clone()),
            );
            for foci in vectors(outer_n * inner_n) {
                let s: Vec<Vec<i64>> = if inner_n == 0 {
                    vec![Vec::new(); outer_n]
                } else {
                    foci.chunks(inner_n).map(<[i64]>::to_vec).collect()
                };
                ensure(flat.apply(s.clone()) == nested.apply(s.clone()), || {
                    format!("compose_rep map at {s:?}")
                })?;
                ensure(flat_fold.run(s.clone()) == nested_fold.run(s.clone()), || {
                    format!("compose_rep fold at {s:?}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("fold = \"AABBCC\"; {checked} exhaustive cases over {{0,1,2}}"))
}

// 5. Traversals.

fn traversal_laws() -> Verdict {
    let tag = |x: i64| Logged::new(vec![x.to_string()], x);
    let mut checked = 0;
    for v in vectors(4) {
        let expected_log: Vec<String> = v.iter().map(i64::to_string).collect();
        let pair = (v[0], v[1]);
        let triple = (v[0], v[1], v[2]);
        let quad = (v[0], v[1], v[2], v[3]);

        ensure(
            traverse_of::<IdentityF, _, _, _, _>(&each2(), Identity, pair) == Identity(pair),
            || "pure, arity 2".into(),
        )?;
        ensure(
            traverse_of::<OptionF, _, _, _, _>(&each3(), Some, triple) == Some(triple),
            || "pure, arity 3".into(),
        )?;
        ensure(
            traverse_of::<ListF, _, _, _, _>(&each4(), |a| vec![a], quad) == vec![quad],
            || "pure, arity 4".into(),
        )?;
        ensure(
            traverse_of::<LoggerF, _, _, _, _>(&each4(), LoggerF::pure::<i64>, quad) == LoggerF::pure(quad),
            || "pure, logger".into(),
        )?;

        ensure(
            traverse_of::<LoggerF, _, _, _, _>(&each2(), tag, pair).log == expected_log[..2],
            || format!("order at {pair:?}"),
        )?;
        ensure(
            traverse_of::<LoggerF, _, _, _, _>(&each3(), tag, triple).log == expected_log[..3],
            || format!("order at {triple:?}"),
        )?;
        ensure(
            traverse_of::<LoggerF, _, _, _, _>(&each4(), tag, quad).log == expected_log,
            || format!("order at {quad:?}"),
        )?;
        checked += 1;
    }
    Ok(format!(
        "pure traversal and Logger effect order on {checked} inputs per arity 2..4"
    ))
}

// 6. Logged quicksort.

fn show(items: &[String]) -> String {
    let quoted: Vec<String> = items.iter().map(|w| format!("\"{w}\"")).collect();
    format!("[{}]", quoted.join(","))
}

/// Direct recursion over a plain log and option. Each split line appears
/// twice, once per half of the logged split.
fn oracle(xs: &[String]) -> (Vec<String>, Option<Vec<String>>) {
    let Some((pivot, rest)) = xs.split_first() else {
        return (Vec::new(), Some(Vec::new()));
    };
    if pivot.is_empty() {
        return (Vec::new(), None);
    }
    let (smaller, larger): (Vec<String>, Vec<String>) = rest.iter().cloned().partition(|w| w < pivot);
    let line = format!("Splitting: {} into {}, {}", show(rest), show(&smaller), show(&larger));
    let mut log = vec![line.clone(), line];
    let (left_log, left) = oracle(&smaller);
    log.extend(left_log);
    let Some(left) = left else { return (log, None) };
    let (right_log, right) = oracle(&larger);
    log.extend(right_log);
    let Some(right) = right else { return (log, None) };
    log.push(format!("Merging: {}, {}, and {}", show(&left), pivot, show(&right)));
    (log, Some([left, vec![pivot.clone()], right].concat()))
}

fn render(log: &[String], value: &Option<Vec<String>>) -> String {
    let mut out: String = log.iter().map(|l| format!("{l}\n")).collect();
    match value {
        Some(words) => out.push_str(&format!("RESULT: {}\n", words.join(" "))),
        None => out.push_str("FAIL\n"),
    }
    out
}

fn monopro(args: &[&str]) -> Result<std::process::Output, String> {
    Command::new(env!("CARGO_BIN_EXE_monopro"))
        .args(args)
        .output()
        .map_err(|e| format!("running monopro: {e}"))
}

fn qsort_golden() -> Verdict {
    for (words, golden, code) in [(["b", "a", "c"], GOLDEN_SORTED, 0), (["b", "", "c"], GOLDEN_FAILED, 1)] {
        let input: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        let (log, value) = oracle(&input);
        ensure(render(&log, &value) == golden, || {
            format!("oracle disagrees with the golden file for {words:?}")
        })?;

        let out = qsort_logged(input);
        ensure(out.log == log, || format!("log for {words:?}: {:?}", out.log))?;
        ensure(out.value == value, || format!("payload for {words:?}: {:?}", out.value))?;

        let run = monopro(&[&["qsort"][..], &words].concat())?;
        ensure(run.status.code() == Some(code), || {
            format!("exit code {:?} for {words:?}", run.status.code())
        })?;
        ensure(run.stdout == golden.as_bytes(), || {
            format!("CLI output differs from golden for {words:?}")
        })?;
    }
    let lines = GOLDEN_SORTED.lines().count();
    Ok(format!(
        "Some [a,b,c] with the frozen {lines}-line log, exit 0; None with the 2-line prefix, exit 1"
    ))
}

// 7. CLI determinism.

fn cli_determinism() -> Verdict {
    let commands: [&[&str]; 6] = [
        &["monocle", "fold", "--arity", "3", "--values", "AA,BB,CC"],
        &[
            "monocle", "foldmap", "--arity", "3", "--map", "len", "--values", "a,bb,ccc",
        ],
        &[
            "monocle", "foldmap", "--arity", "2", "--map", "upper", "--values", "ab,cd",
        ],
        &["qsort", "b", "a", "c"],
        &["qsort", "b", "", "c"],
        &["qsort", "delta", "alpha", "charlie", "bravo", "alpha"],
    ];
    for args in commands {
        let first = monopro(args)?;
        for _ in 1..CLI_REPEATS {
            let again = monopro(args)?;
            ensure(
                again.stdout == first.stdout
                    && again.stderr == first.stderr
                    && again.status.code() == first.status.code(),
                || format!("output of {args:?} changed between runs"),
            )?;
        }
    }
    Ok(format!(
        "{} commands x {CLI_REPEATS} runs, byte-identical",
        commands.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("monoidal profunctor laws", law_suite),
        ("Day coherence", day_coherence),
        ("free universal property", free_universal_property),
        ("monocle golden value and representation", monocle_golden),
        ("traversal laws", traversal_laws),
        ("qsort golden", qsort_golden),
        ("CLI determinism", cli_determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let verdict = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|payload| {
            let message = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into());
            Err(message)
        });
        match verdict {
            Ok(detail) => println!("PASS {} {name}: {detail}", n + 1),
            Err(reason) => {
                failures += 1;
                println!("FAIL {} {name}: {reason}", n + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
