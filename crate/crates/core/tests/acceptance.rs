//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::collections::{HashMap, HashSet};
use std::time::{Duration, Instant};

use bruhatkit::bruhat_moves::{chain_toward, going_down_step};
use bruhatkit::colmat::{ColMatrix, TriangularMatrix};
use bruhatkit::decomp::{bruhat_decompose, coset_label, degenerate_to_cell};
use bruhatkit::flags::{
    is_almost_gradation, is_independent, nonspanning_demo, relative_position,
    relative_position_by_decomposition, relative_position_by_dimensions, spans, Filtration, Flag,
};
use bruhatkit::oracle::{
    bruhat_leq_bruteforce, double_coset, enumerate_gl, enumerate_sn, random_almost_gradation,
    random_chain_filtration, random_flag, random_permutation, random_unit, random_upper_triangular,
};
use bruhatkit::permutation::{
    bruhat_leq, bruhat_leq_tableau, converges_prefix, first_difference, reduction_bound,
    region_criterion_within, Convergence, Permutation,
};
use bruhatkit::scalar::Ring;
use bruhatkit::schubert::y_sigma_contains;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn within(elapsed: Duration, limit: Duration, summary: String) -> Outcome {
    if elapsed < limit {
        Ok(format!("{summary} in {:.2?}", elapsed))
    } else {
        Err(format!("{summary} but took {:.2?} (limit {:?})", elapsed, limit))
    }
}

fn bruhat_order_s5() -> Outcome {
    let start = Instant::now();
    let s5 = enumerate_sn(5).map_err(|e| e.to_string())?;
    let mut pairs = 0;
    for s in &s5 {
        for t in &s5 {
            let fast = bruhat_leq(s, t).map_err(|e| e.to_string())?;
            ensure!(fast == bruhat_leq_bruteforce(s, t, 5), "{s} vs {t}: brute force disagrees");
            ensure!(fast == bruhat_leq_tableau(s, t, 5), "{s} vs {t}: tableau disagrees");
            pairs += 1;
        }
    }
    ensure!(pairs == 14_400, "{pairs} pairs");
    within(start.elapsed(), Duration::from_secs(10), format!("{pairs} pairs agree"))
}

fn region_bound_s6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..1000 {
        let (s, t) = (random_permutation(6, &mut rng), random_permutation(6, &mut rng));
        let b = reduction_bound(&s, &t);
        ensure!(
            region_criterion_within(&s, &t, b) == region_criterion_within(&s, &t, 2 * b),
            "{s} vs {t}: bound {b} and {} disagree",
            2 * b
        );
    }
    Ok("1000 random S_6 pairs, zero mismatches".into())
}

fn strictly_below(a: &Permutation, b: &Permutation) -> bool {
    a != b && bruhat_leq(a, b).unwrap()
}

fn descent_steps() -> Outcome {
    let s5 = enumerate_sn(5).map_err(|e| e.to_string())?;
    let mut comparable = 0;
    for sigma in &s5 {
        for tau in &s5 {
            if !strictly_below(sigma, tau) {
                continue;
            }
            comparable += 1;
            let p = first_difference(sigma, tau).map_err(|e| e.to_string())?;
            ensure!(sigma.apply(p) < tau.apply(p), "{sigma} < {tau}: σ(d) ≥ τ(d)");
            let step = going_down_step(sigma, tau, None).map_err(|e| e.to_string())?;
            let t = &step.result;
            ensure!(step.p == p, "{sigma} < {tau}: step at {} not {p}", step.p);
            ensure!(
                bruhat_leq(sigma, t).unwrap() && strictly_below(t, tau),
                "{sigma} < {tau}: σ ≤ τt < τ fails for {t}"
            );
            ensure!(
                sigma.apply(p) <= t.apply(p) && t.apply(p) < tau.apply(p),
                "{sigma} < {tau}: value at p out of range in {t}"
            );
            ensure!((1..p).all(|m| t.apply(m) == tau.apply(m)), "{sigma} < {tau}: prefix moved");

            let chain = chain_toward(sigma, tau, 100, None).map_err(|e| e.to_string())?;
            ensure!(chain.terminated, "{sigma} < {tau}: chain did not terminate");
            let mut current = tau.clone();
            for s in &chain.steps {
                let next = current.swap_positions(s.p, s.q);
                ensure!(next == s.result, "{sigma} < {tau}: step result is not τ·(p,q)");
                ensure!(strictly_below(&next, &current), "{sigma} < {tau}: step does not descend");
                ensure!(bruhat_leq(sigma, &next).unwrap(), "{sigma} < {tau}: stepped below σ");
                current = next;
            }
            ensure!(&current == sigma, "{sigma} < {tau}: transpositions give {current}");
        }
    }
    let id = Permutation::identity();
    let chain = chain_toward(&id, &Permutation::rho(), 50, Some(40)).map_err(|e| e.to_string())?;
    ensure!(!chain.terminated, "chain from ρ terminated");
    let results: Vec<Permutation> = chain.steps.iter().map(|s| s.result.clone()).collect();
    for m in 1..=10 {
        ensure!(
            matches!(converges_prefix(&results, &id, m), Convergence::StableFrom(_)),
            "chain from ρ not stable on prefix {m}"
        );
    }
    Ok(format!("{comparable} comparable S_5 pairs; (id, ρ) stable for m ≤ 10"))
}

fn triangular_inversion() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for ring in [Ring::Rationals, Ring::PrimeField(5)] {
        for _ in 0..500 {
            let n = rng.gen_range(1..=12);
            let m = random_upper_triangular(ring, n, false, &mut rng);
            let t = TriangularMatrix::try_from(m.clone()).map_err(|e| e.to_string())?;
            let left = t.left_inverse_recursion().map_err(|e| e.to_string())?;
            let right = t.right_inverse_recursion().map_err(|e| e.to_string())?;
            ensure!(left == right, "left and right recursions differ on {m}");
            let id = ColMatrix::identity(ring);
            ensure!(m.multiply(left.as_matrix()).unwrap() == id, "b·c ≠ I for {m}");
            ensure!(left.as_matrix().multiply(&m).unwrap() == id, "c·b ≠ I for {m}");
        }
    }
    within(start.elapsed(), Duration::from_secs(5), "500 over ℚ and 500 over F_5".into())
}

fn decomposition_partition() -> Outcome {
    let mut summary = Vec::new();
    for (n, p, expected) in [(3usize, 2u64, 168usize), (2, 3, 48)] {
        let gl = enumerate_gl(n, p).map_err(|e| e.to_string())?;
        ensure!(gl.len() == expected, "GL_{n}(F_{p}) has {} elements", gl.len());
        let mut fibers: HashMap<Permutation, HashSet<ColMatrix>> = HashMap::new();
        for g in &gl {
            let f = bruhat_decompose(g).map_err(|e| format!("{g}: {e}"))?;
            ensure!(f.reproduces(g), "b·σ·c ≠ g for {g}");
            let label = coset_label(g).map_err(|e| e.to_string())?;
            ensure!(label == f.sigma, "{g}: factorization and label disagree");
            fibers.entry(label).or_default().insert(g.clone());
        }
        let mut union: HashSet<ColMatrix> = HashSet::new();
        let mut total = 0;
        for sigma in enumerate_sn(n).map_err(|e| e.to_string())? {
            let coset = double_coset(&sigma, n, p).map_err(|e| e.to_string())?;
            let fiber = fibers.get(&sigma).cloned().unwrap_or_default();
            ensure!(fiber == coset, "GL_{n}(F_{p}): fiber over {sigma} differs from BσB");
            total += coset.len();
            union.extend(coset);
        }
        ensure!(total == union.len(), "GL_{n}(F_{p}): double cosets overlap");
        ensure!(union == gl.iter().cloned().collect(), "GL_{n}(F_{p}): cosets do not cover");
        summary.push(format!("GL_{n}(F_{p}) {expected}"));
    }
    Ok(summary.join(", "))
}

fn ehresmann_closure() -> Outcome {
    let gl = enumerate_gl(3, 2).map_err(|e| e.to_string())?;
    let s3 = enumerate_sn(3).map_err(|e| e.to_string())?;
    let mut cases = 0;
    for g in &gl {
        let tau = coset_label(g).map_err(|e| e.to_string())?;
        for sigma in &s3 {
            let member = y_sigma_contains(sigma, g).map_err(|e| e.to_string())?;
            let below = bruhat_leq(&tau, sigma).map_err(|e| e.to_string())?;
            ensure!(member == below, "g = {g}, σ = {sigma}: Y_σ says {member}, order says {below}");
            cases += 1;
        }
    }
    ensure!(cases == 1008, "{cases} cases");
    Ok(format!("{cases} cases, zero exceptions"))
}

fn degeneration_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for ring in [Ring::Rationals, Ring::PrimeField(7)] {
        let mut done = 0;
        while done < 500 {
            let n = rng.gen_range(2..=6);
            let tau = random_permutation(n, &mut rng);
            let p = rng.gen_range(1..n);
            let q = rng.gen_range(p + 1..=n);
            if tau.apply(p) < tau.apply(q) {
                continue;
            }
            let r = random_unit(ring, &mut rng);
            let d = degenerate_to_cell(&tau, p, q, &r).map_err(|e| e.to_string())?;
            let sigma = tau.swap_positions(p, q);
            let lhs = ColMatrix::permutation_matrix(ring, &sigma)
                .and_then(|s| s.multiply(&ColMatrix::add_multiple(ring, q, p, r.clone())?))
                .map_err(|e| e.to_string())?;
            let rhs = d
                .b
                .as_matrix()
                .multiply(&ColMatrix::permutation_matrix(ring, &tau).unwrap())
                .and_then(|m| m.multiply(d.c.as_matrix()))
                .map_err(|e| e.to_string())?;
            ensure!(lhs == rhs, "τ = {tau}, p = {p}, q = {q}, r = {r}: b·τ·c ≠ σ·L_qp(r)");
            done += 1;
        }
    }
    Ok("500 over ℚ and 500 over F_7".into())
}

fn relative_positions() -> Outcome {
    for p in [2u64, 5] {
        let ring = Ring::prime_field(p).map_err(|e| e.to_string())?;
        let e = Flag::standard(ring, 4);
        for sigma in enumerate_sn(4).map_err(|e| e.to_string())? {
            let f = ColMatrix::permutation_matrix(ring, &sigma)
                .and_then(|s| e.act(&s))
                .map_err(|e| e.to_string())?;
            let w = relative_position(&f, &e).map_err(|e| e.to_string())?;
            ensure!(w == sigma, "F_{p}: w(σE, E) = {w} for σ = {sigma}");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for k in 0..500 {
        let ring = if k % 2 == 0 { Ring::Rationals } else { Ring::PrimeField(5) };
        let dim = rng.gen_range(1..=6);
        let (f, e) = (random_flag(ring, dim, &mut rng), random_flag(ring, dim, &mut rng));
        let a = relative_position_by_decomposition(&f, &e).map_err(|e| e.to_string())?;
        let b = relative_position_by_dimensions(&f, &e).map_err(|e| e.to_string())?;
        ensure!(a == b, "{f} vs {e}: decomposition {a}, dimensions {b}");
        let back = relative_position(&e, &f).map_err(|e| e.to_string())?;
        ensure!(back == a.inverse(), "{f} vs {e}: w(E,F) = {back} but w(F,E) = {a}");
    }
    Ok("S_4 over F_2 and F_5; 500 random flag pairs".into())
}

fn gradations() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let rings = [Ring::Rationals, Ring::PrimeField(2), Ring::PrimeField(5)];
    let (mut chains, mut products) = (0, 0);
    for k in 0..150 {
        let ring = rings[k % rings.len()];
        let dim = rng.gen_range(1..=8);
        let len = rng.gen_range(2..=dim + 2);
        let f = random_chain_filtration(ring, dim, len, &mut rng);
        let c = random_almost_gradation(&f, &mut rng).map_err(|e| e.to_string())?;
        ensure!(is_almost_gradation(&f, &c).unwrap(), "generator produced a non-almost-gradation");
        ensure!(is_independent(&c).unwrap(), "chain almost gradation is dependent");
        ensure!(spans(&f, &c).unwrap(), "chain almost gradation does not span");
        chains += 1;

        let la = rng.gen_range(2..=dim + 1);
        let lb = rng.gen_range(2..=dim + 1);
        let a = random_chain_filtration(ring, dim, la, &mut rng);
        let b = random_chain_filtration(ring, dim, lb, &mut rng);
        let fp = Filtration::intersect_chains(&a, &b).map_err(|e| e.to_string())?;
        let cp = random_almost_gradation(&fp, &mut rng).map_err(|e| e.to_string())?;
        ensure!(is_almost_gradation(&fp, &cp).unwrap(), "generator produced a non-almost-gradation");
        ensure!(is_independent(&cp).unwrap(), "product almost gradation is dependent");
        ensure!(spans(&fp, &cp).unwrap(), "product almost gradation does not span");
        products += 1;
    }
    ensure!(nonspanning_demo(50).map_err(|e| e.to_string())?, "nonspanning_demo(50) is false");
    Ok(format!("{chains} chains, {products} products of two chains, nonspanning_demo(50)"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 bruhat order on S_5", bruhat_order_s5),
        ("2 region bound on S_6", region_bound_s6),
        ("3 descent steps", descent_steps),
        ("4 triangular inversion", triangular_inversion),
        ("5 decomposition partition", decomposition_partition),
        ("6 ehresmann closure", ehresmann_closure),
        ("7 degeneration identity", degeneration_identity),
        ("8 relative position", relative_positions),
        ("9 almost gradations", gradations),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
