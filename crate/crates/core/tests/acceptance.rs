//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines always reach stdout.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use coeffgame::finitefield::{dickson_predicate_deg3, fq_field, is_permutation_poly, supported_fields};
use coeffgame::game::{new_game, Certificate, DomainSpec, GameConfig, GameState, Move, Player, Value};
use coeffgame::numberfield::{roots_in_k, squarefree_norm_shift, NumberField};
use coeffgame::poly::{qpoly, Polynomial};
use coeffgame::qfactor::{factor_over_q, is_irreducible_over_q};
use coeffgame::rational::{frac, Rational};
use coeffgame::ratroots::rational_root_candidates;
use coeffgame::realroots::sturm_real_root_count;
use coeffgame::solver::verify_theorems;
use coeffgame::strategies::{
    nora_last_move_numberfield, nora_last_move_rationals, policy_move, random_move, wanda_last_move, NumberFieldSearch,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn run(name: &str, budget: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let o = f();
    let elapsed = start.elapsed();
    let in_time = elapsed <= budget;
    let pass = o.pass && in_time;
    let timing = format!("{:.3}s of {}s", elapsed.as_secs_f64(), budget.as_secs());
    let late = if in_time { "" } else { " [over time budget]" };
    println!("{} {name}: {} ({timing}){late}", if pass { "PASS" } else { "FAIL" }, o.detail);
    pass
}

fn secs(n: u64) -> Duration {
    Duration::from_secs(n)
}

fn number_field_trials() -> Outcome {
    let k = NumberField::from_minpoly(&[-2, 0, 1]).unwrap();
    let f = |a1| Polynomial::new(vec![k.from_ints(&[-4, -4]), k.from_ints(&[a1]), k.from_ints(&[-3, 1]), k.one()]);
    let mut failures = Vec::new();

    let (roots, t) = roots_in_k(&k, &f(2)).unwrap();
    if t.norm != qpoly(&[-16, -16, 44, -20, 11, -6, 1]) {
        failures.push(format!("a1=2 norm {}", t.norm));
    }
    if !t.norm_factors.factors.iter().any(|(g, _)| *g == qpoly(&[-1, -2, 1])) {
        failures.push("a1=2 factor x^2-2x-1 missing".into());
    }
    if !roots.contains(&k.from_ints(&[1, 1])) {
        failures.push("a1=2 root 1+√2 missing".into());
    }

    let shift = squarefree_norm_shift(&k, &f(4)).unwrap();
    let square = &qpoly(&[-2, 1]) * &qpoly(&[-2, 1]);
    if !shift.rejected.first().is_some_and(|(s, n)| *s == frac(0, 1) && Polynomial::divides(&square, n)) {
        failures.push("a1=4 unshifted norm lacks (x-2)^2".into());
    }
    let shifted = Polynomial::new(vec![k.from_ints(&[-10, -8]), k.from_ints(&[6, 6]), k.from_ints(&[-3, -2]), k.one()]);
    if shift.k != frac(1, 1) || shift.shifted != shifted {
        failures.push(format!("a1=4 shift {} gives {}", shift.k, shift.shifted));
    }
    let (roots, t) = roots_in_k(&k, &f(4)).unwrap();
    if !t.norm_factors.factors.iter().any(|(g, _)| *g == qpoly(&[2, -4, 1])) {
        failures.push("a1=4 factor x^2-4x+2 missing".into());
    }
    if !roots.contains(&k.from_ints(&[2])) {
        failures.push("a1=4 root 2 missing".into());
    }

    let (roots, t) = roots_in_k(&k, &f(8)).unwrap();
    let norm = qpoly(&[-16, -64, 104, -56, 23, -6, 1]);
    if t.norm != norm || !is_irreducible_over_q(&norm).unwrap() || t.norm_factors.factors.len() != 1 {
        failures.push(format!("a1=8 norm {}", t.norm));
    }
    if !roots.is_empty() {
        failures.push("a1=8 reported roots".into());
    }
    let config = GameConfig::new(DomainSpec::NumberField(k.clone(), coeffgame::game::Subring::Field), 3, Player::Wanda).unwrap();
    let moves = [(3, vec![1]), (2, vec![-3, 1]), (0, vec![-4, -4]), (1, vec![8])]
        .into_iter()
        .map(|(i, c)| Move::new(i, Value::Nf(k.from_ints(&c))));
    let verdict = GameState::replay(config, moves).unwrap().verdict().unwrap();
    if verdict.winner != Player::Nora || !matches!(verdict.certificate, Certificate::Trager(_)) {
        failures.push(format!("a1=8 verdict {verdict}"));
    }
    if failures.is_empty() {
        outcome(true, "a1=2 root 1+√2; a1=4 shift k=1 root 2; a1=8 norm irreducible, no roots")
    } else {
        outcome(false, failures.join("; "))
    }
}

fn integer_game() -> Outcome {
    let v = |n| Value::Rational(frac(n, 1));
    let moves = [Move::new(2, v(-12)), Move::new(3, v(7)), Move::new(0, v(4)), Move::new(1, v(10000))];
    let state = GameState::replay(GameConfig::new(DomainSpec::Integers, 3, Player::Wanda).unwrap(), moves).unwrap();
    let f = state.final_poly::<Rational>().unwrap();
    let got: BTreeSet<Rational> = rational_root_candidates(&f).unwrap().to_vec().into_iter().collect();
    let expected: BTreeSet<Rational> = [
        frac(1, 7), frac(-1, 7), frac(2, 7), frac(-2, 7), frac(4, 7), frac(-4, 7),
        frac(1, 1), frac(-1, 1), frac(2, 1), frac(-2, 1), frac(4, 1), frac(-4, 1),
    ]
    .into_iter()
    .collect();
    let verdict = state.verdict().unwrap();
    outcome(got == expected && verdict.winner == Player::Nora, format!("f = {f}; {verdict}"))
}

fn theorem_table() -> Outcome {
    let report = verify_theorems(&[2, 3, 4, 5, 7, 9], &[2, 3, 4]).unwrap();
    let passed = report.rows.iter().filter(|r| r.pass()).count();
    outcome(report.rows.len() == 36 && report.all_pass(), format!("{passed}/{} rows match", report.rows.len()))
}

// ---- soundness sweeps ----

fn random_prefix(rng: &mut ChaCha8Rng, config: GameConfig) -> GameState {
    let mut state = new_game(config).unwrap();
    while state.open_indices().len() > 1 {
        let mv = random_move(rng, &state).unwrap();
        state = state.apply(mv).unwrap();
    }
    state
}

type Engine = fn(&GameState) -> coeffgame::game::Move;

fn play_out(rng: &mut ChaCha8Rng, mut state: GameState, hero: Player, engine: Engine) -> GameState {
    while let Some(p) = state.to_move() {
        let mv = if p == hero { engine(&state) } else { random_move(rng, &state).unwrap() };
        state = state.apply(mv).unwrap();
    }
    state
}

fn policy(state: &GameState) -> Move {
    policy_move(state).unwrap().mv
}

struct Sweep {
    games: usize,
    violations: usize,
    examples: Vec<String>,
}

impl Sweep {
    fn new() -> Self {
        Sweep { games: 0, violations: 0, examples: Vec::new() }
    }

    fn record(&mut self, state: &GameState, expected: Player) {
        self.games += 1;
        let v = state.verdict().unwrap();
        if v.winner == expected && v.verify(state.domain(), &state.final_values().unwrap()) {
            return;
        }
        self.violations += 1;
        if self.examples.len() < 3 {
            self.examples.push(format!("{} over {}: {v}", state.board_string(), state.domain()));
        }
    }

    fn finish(self, seed: u64, min_games: usize) -> Outcome {
        let mut detail = format!("seed {seed}, {} games, {} violation(s)", self.games, self.violations);
        if !self.examples.is_empty() {
            detail.push_str(&format!(": {}", self.examples.join(" | ")));
        }
        outcome(self.violations == 0 && self.games >= min_games, detail)
    }
}

fn first_for_last(d: usize, last: Player) -> Player {
    if d.is_multiple_of(2) {
        last
    } else {
        last.other()
    }
}

const GAMES: usize = 1000;
const NF_GAMES: usize = 200;

fn sweep_wanda_last(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut domains: Vec<DomainSpec> = ["integers", "rationals", "zinv:7", "nf:-2,0,1", "nf:-2,0,1:int", "nf:-2,0,0,1", "reals", "closed"]
        .iter()
        .map(|s| DomainSpec::parse(s).unwrap())
        .collect();
    domains.extend(supported_fields().into_iter().map(DomainSpec::FiniteField));
    let mut sweep = Sweep::new();
    for g in 0..GAMES {
        let domain = domains[g % domains.len()].clone();
        let d = rng.gen_range(2..=6);
        let config = GameConfig::new(domain.clone(), d, first_for_last(d, Player::Wanda)).unwrap();
        let state = match domain {
            DomainSpec::FiniteField(f) if f.q() <= d => play_out(&mut rng, new_game(config).unwrap(), Player::Wanda, policy),
            _ => {
                let prefix = random_prefix(&mut rng, config);
                prefix.apply(wanda_last_move(&prefix).unwrap().mv).unwrap()
            }
        };
        sweep.record(&state, Player::Wanda);
    }
    sweep.finish(seed, GAMES)
}

fn sweep_nora_rationals(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let domains: Vec<DomainSpec> = ["integers", "rationals", "zinv:7"].iter().map(|s| DomainSpec::parse(s).unwrap()).collect();
    let mut sweep = Sweep::new();
    for g in 0..GAMES {
        let d = rng.gen_range(2..=6);
        let config = GameConfig::new(domains[g % 3].clone(), d, first_for_last(d, Player::Nora)).unwrap();
        let prefix = random_prefix(&mut rng, config);
        let state = prefix.apply(nora_last_move_rationals(&prefix).unwrap().mv).unwrap();
        sweep.record(&state, Player::Nora);
    }
    sweep.finish(seed, GAMES)
}

fn sweep_nora_number_fields(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let domains: Vec<DomainSpec> = ["nf:-2,0,1", "nf:-2,0,0,1"].iter().map(|s| DomainSpec::parse(s).unwrap()).collect();
    let search = NumberFieldSearch::default();
    let mut sweep = Sweep::new();
    for g in 0..NF_GAMES {
        let d = rng.gen_range(2..=4);
        let config = GameConfig::new(domains[g % 2].clone(), d, first_for_last(d, Player::Nora)).unwrap();
        let prefix = random_prefix(&mut rng, config);
        let state = prefix.apply(nora_last_move_numberfield(&prefix, &search).unwrap().mv).unwrap();
        sweep.record(&state, Player::Nora);
    }
    sweep.finish(seed, NF_GAMES)
}

fn sweep_full_games(seed: u64, hero: Player, configs: &[GameConfig]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sweep = Sweep::new();
    for g in 0..GAMES {
        let config = configs[g % configs.len()].clone();
        let state = play_out(&mut rng, new_game(config).unwrap(), hero, policy);
        sweep.record(&state, hero);
    }
    sweep.finish(seed, GAMES)
}

fn fq_configs(filter: impl Fn(u64) -> bool, degrees: &[usize], first: impl Fn(usize) -> Player) -> Vec<GameConfig> {
    let mut out = Vec::new();
    for f in supported_fields().into_iter().filter(|f| filter(f.characteristic())) {
        for &d in degrees {
            out.push(GameConfig::new(DomainSpec::FiniteField(f), d, first(d)).unwrap());
        }
    }
    out
}

// ---- property suites ----

fn dickson_cross_check() -> Outcome {
    let mut total = 0usize;
    let mut disagreements = Vec::new();
    for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
        let f = fq_field(p, k).unwrap();
        for a3 in f.elements().skip(1) {
            for a2 in f.elements() {
                for a1 in f.elements() {
                    for a0 in f.elements() {
                        let g = Polynomial::new(vec![a0, a1, a2, a3]);
                        total += 1;
                        if is_permutation_poly(f, &g) != dickson_predicate_deg3(f, &g).unwrap() {
                            disagreements.push(format!("F_{}: {g:?}", f.q()));
                        }
                    }
                }
            }
        }
    }
    outcome(disagreements.is_empty(), format!("{total} cubics, {} disagreement(s)", disagreements.len()))
}

fn random_irreducible(rng: &mut ChaCha8Rng) -> Polynomial<Rational> {
    if rng.gen_bool(0.5) {
        Polynomial::linear_root(&frac(rng.gen_range(-9..=9), rng.gen_range(1..=5)))
    } else {
        loop {
            let (b, c) = (rng.gen_range(-9i64..=9), rng.gen_range(-9i64..=9));
            let disc = b * b - 4 * c;
            let is_square = disc >= 0 && (0..=disc).any(|r| r * r == disc);
            if !is_square {
                return qpoly(&[c, b, 1]);
            }
        }
    }
}

fn primitive(f: &Polynomial<Rational>) -> Polynomial<Rational> {
    let fac = factor_over_q(f).unwrap();
    assert_eq!(fac.factors.len(), 1);
    fac.factors[0].0.clone()
}

fn factorization_suite(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0usize;
    let cases = 10_000;
    for i in 0..cases {
        let ok = if i % 2 == 0 {
            let n = rng.gen_range(2..=4);
            let parts: Vec<_> = (0..n).map(|_| random_irreducible(&mut rng)).collect();
            let f = parts.iter().fold(Polynomial::constant(frac(rng.gen_range(1..=9), 1)), |acc, p| &acc * p);
            let fac = factor_over_q(&f).unwrap();
            let mut got: Vec<_> = fac.factors.iter().flat_map(|(g, m)| std::iter::repeat_n(g.clone(), *m as usize)).collect();
            let mut expected: Vec<_> = parts.iter().map(primitive).collect();
            got.sort_by_key(|g| format!("{g}"));
            expected.sort_by_key(|g| format!("{g}"));
            fac.expand() == f && got == expected
        } else {
            let len = rng.gen_range(2..=9);
            let mut c: Vec<i64> = (0..len).map(|_| rng.gen_range(-12..=12)).collect();
            c[len - 1] = rng.gen_range(1..=12);
            let f = qpoly(&c);
            let fac = factor_over_q(&f).unwrap();
            let degree: usize = fac.factors.iter().map(|(g, m)| g.degree().unwrap() * *m as usize).sum();
            fac.expand() == f && degree == f.degree().unwrap()
        };
        if !ok {
            failures += 1;
        }
    }
    outcome(failures == 0, format!("seed {seed}, {cases} cases, {failures} failure(s)"))
}

fn sturm_suite(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0usize;
    let cases = 10_000;
    for i in 0..cases {
        let ok = if i % 2 == 0 {
            let n = rng.gen_range(1..=6);
            let roots: Vec<Rational> = (0..n).map(|_| frac(rng.gen_range(-30..=30), rng.gen_range(1..=5))).collect();
            let mut f = Polynomial::from_roots(&roots);
            for _ in 0..rng.gen_range(0..=2) {
                f = &f * &qpoly(&[rng.gen_range(1..=9), 0, 1]);
            }
            let distinct: BTreeSet<_> = roots.into_iter().collect();
            sturm_real_root_count(&f).unwrap() == distinct.len()
        } else {
            let deg = 2 * rng.gen_range(0..=4) + 1;
            let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-20..=20)).collect();
            c[deg] = rng.gen_range(1..=20) * if rng.gen_bool(0.5) { 1 } else { -1 };
            sturm_real_root_count(&qpoly(&c)).unwrap() >= 1
        };
        if !ok {
            failures += 1;
        }
    }
    outcome(failures == 0, format!("seed {seed}, {cases} cases, {failures} failure(s)"))
}

fn main() -> ExitCode {
    let mut results = Vec::new();
    results.push(run("number-field worked example", secs(5), number_field_trials));
    results.push(run("integer worked game", secs(1), integer_game));
    results.push(run("finite-field winner table", secs(60), theorem_table));

    let sweep_start = Instant::now();
    results.push(run("sweep 1: Wanda moves last", secs(600), || sweep_wanda_last(101)));
    results.push(run("sweep 2: Nora last over Z, Q, Z[1/7]", secs(600), || sweep_nora_rationals(202)));
    results.push(run("sweep 3: Nora last over Q(√2), Q(∛2)", secs(600), || sweep_nora_number_fields(303)));
    let line4 = fq_configs(|_| true, &[4, 5, 6], |d| first_for_last(d, Player::Nora));
    results.push(run("sweep 4: Nora last over F_q, d >= 4", secs(600), || sweep_full_games(404, Player::Nora, &line4)));
    let reals_even: Vec<_> = [4, 6].iter().map(|&d| GameConfig::new(DomainSpec::Reals, d, Player::Nora).unwrap()).collect();
    results.push(run("sweep 5: Wanda over R, even d", secs(600), || sweep_full_games(505, Player::Wanda, &reals_even)));
    let reals_quad = [GameConfig::new(DomainSpec::Reals, 2, Player::Nora).unwrap()];
    results.push(run("sweep 6: Nora first over R, d = 2", secs(600), || sweep_full_games(606, Player::Nora, &reals_quad)));
    let char3 = fq_configs(|p| p == 3, &[3], |_| Player::Wanda);
    results.push(run("sweep 7: Wanda first, characteristic 3, d = 3", secs(600), || sweep_full_games(707, Player::Wanda, &char3)));
    let other = fq_configs(|p| p != 3, &[3], |_| Player::Wanda);
    results.push(run("sweep 8: Nora second, characteristic not 3, d = 3", secs(600), || sweep_full_games(808, Player::Nora, &other)));
    let sweeps_ok = sweep_start.elapsed() <= secs(600);
    println!("{} sweeps total: {:.2}s of 600s", if sweeps_ok { "PASS" } else { "FAIL" }, sweep_start.elapsed().as_secs_f64());
    results.push(sweeps_ok);

    results.push(run("Dickson cross-check", secs(120), dickson_cross_check));
    results.push(run("factorization properties", secs(300), || factorization_suite(909)));
    results.push(run("Sturm properties", secs(60), || sturm_suite(1010)));

    let passed = results.iter().filter(|&&r| r).count();
    println!("{passed}/{} acceptance criteria pass", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
