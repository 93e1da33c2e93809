//! End-to-end acceptance gate: eight independent criteria, each printing a
//! single pass/fail line. Run with `--nocapture` to see the lines even on
//! success.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use superquiver::gabriel::{build_ar_quiver, build_x_alpha, verify_main_theorem, Setup};
use superquiver::linalg::Matrix;
use superquiver::parity::Parity;
use superquiver::pathalg::{mesh_elements, preprojective_dims, DoubleQuiver};
use superquiver::quiver::ColouredQuiver;
use superquiver::rep::{
    all_indecomposables, bgp_minus, bgp_plus, interval_rep, iso_bricks, simple_rep,
    Representation,
};
use superquiver::roots::{SimpleSystem, SuperRoot, SuperRootSystem};
use superquiver::scalar::Field;
use superquiver::srep::{embed_G, forget_F, parity_functor, super_reflect, Direction};
use superquiver::Rat;

type Criterion = (&'static str, fn() -> Result<(), String>);

fn pi_a22() -> SimpleSystem {
    // Π = {ε₁−ε₂, ε₂−δ₁, δ₁−δ₂}
    SimpleSystem::from_shuffle(2, 2, "EEDD", false).unwrap()
}

/// 1. The six X_α of the A(2,2) worked example, golden-table equality.
fn criterion_worked_example() -> Result<(), String> {
    let start = Instant::now();
    let setup = Setup::new(&pi_a22(), "<<").map_err(|e| e.to_string())?;
    let golden = [
        ("e1-e2", "o^{1|0} <- x^{0|0} <- o^{0|0}"),
        ("e1-d1", "o^{1|0} <- x^{0|1} <- o^{0|0}"),
        ("e1-d2", "o^{1|0} <- x^{0|1} <- o^{1|0}"),
        ("e2-d1", "o^{0|0} <- x^{0|1} <- o^{0|0}"),
        ("e2-d2", "o^{0|0} <- x^{0|1} <- o^{1|0}"),
        ("d1-d2", "o^{0|0} <- x^{0|0} <- o^{1|0}"),
    ];
    for (root, expected) in golden {
        let alpha = SuperRoot::parse(root).unwrap();
        let x = build_x_alpha::<Rat>(&setup, alpha).map_err(|e| e.to_string())?;
        let got = x.render(true);
        if got != expected {
            return Err(format!("X_{}: got {:?}, want {:?}", root, got, expected));
        }
    }
    if start.elapsed().as_secs_f64() >= 1.0 {
        return Err("worked example took ≥ 1 s".into());
    }
    Ok(())
}

/// Deterministic pool of at least five simple systems for A(n,m):
/// shuffle-parametrized ones plus reflection-generated ones.
fn simple_system_pool(n: usize, m: usize) -> Vec<SimpleSystem> {
    let mut shuffles: Vec<(String, bool)> = vec![
        ("E".repeat(n) + &"D".repeat(m), false),
        ("D".repeat(m) + &"E".repeat(n), false),
        ("E".repeat(n) + &"D".repeat(m), true),
    ];
    // an alternating shuffle
    let mut alt = String::new();
    let (mut e, mut d) = (0, 0);
    while e < n || d < m {
        if e < n {
            alt.push('E');
            e += 1;
        }
        if d < m {
            alt.push('D');
            d += 1;
        }
    }
    shuffles.push((alt, false));
    shuffles.dedup();

    let mut pool: Vec<SimpleSystem> = shuffles
        .into_iter()
        .map(|(s, neg)| SimpleSystem::from_shuffle(n, m, &s, neg).unwrap())
        .collect();
    // reflection-generated systems from the standard one
    let standard = SimpleSystem::standard(n, m).unwrap();
    for i in 0..standard.rank() {
        pool.push(standard.reflect(i).unwrap());
    }
    // dedup on the rendered simple roots
    let mut seen = BTreeSet::new();
    pool.retain(|pi| {
        seen.insert(
            pi.simple_roots()
                .iter()
                .map(|r| r.render(true))
                .collect::<Vec<_>>(),
        )
    });
    // rank 1 only has two simple systems in total
    assert!(pool.len() >= 5 || n + m == 2, "need at least five simple systems");
    pool
}

fn orientations(k: usize) -> Vec<String> {
    if k <= 1 {
        return vec![String::new()];
    }
    (0..1u32 << (k - 1))
        .map(|bits| {
            (0..k - 1)
                .map(|i| if bits >> i & 1 == 0 { '<' } else { '>' })
                .collect()
        })
        .collect()
}

/// 2. Main-theorem sweep: n+m ≤ 6, all orientations, ≥ 5 simple systems.
fn criterion_theorem_sweep() -> Result<(), String> {
    let start = Instant::now();
    let mut cases = 0usize;
    for n in 1..=5usize {
        for m in 1..=5usize {
            if n + m < 2 || n + m > 6 {
                continue;
            }
            for pi in simple_system_pool(n, m) {
                for orient in orientations(n + m - 1) {
                    let report = verify_main_theorem::<Rat>(&pi, &orient, false)
                        .map_err(|e| e.to_string())?;
                    if !report.pass() {
                        return Err(format!(
                            "failure at n={} m={} orient={:?}: {}",
                            n,
                            m,
                            orient,
                            serde_json::to_string(&report.to_json()).unwrap()
                        ));
                    }
                    cases += 1;
                }
            }
        }
    }
    if start.elapsed().as_secs() >= 60 {
        return Err(format!("sweep of {} cases took ≥ 60 s", cases));
    }
    Ok(())
}

/// 3. Gabriel oracle: BGP indecomposables = interval classification, A_k k ≤ 6.
fn criterion_gabriel_oracle() -> Result<(), String> {
    for k in 1..=6usize {
        let quiver =
            ColouredQuiver::from_orient_str(vec![Parity::Even; k], &">".repeat(k - 1)).unwrap();
        let mut constructed: Vec<Vec<i64>> = all_indecomposables::<Rat>(&quiver)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|x| x.dim_vector())
            .collect();
        let mut intervals: Vec<Vec<i64>> = (0..k)
            .flat_map(|a| (a..k).map(move |b| (a, b)))
            .map(|(a, b)| interval_rep::<Rat>(&quiver, a, b).unwrap().dim_vector())
            .collect();
        constructed.sort();
        intervals.sort();
        if constructed != intervals || constructed.len() != k * (k + 1) / 2 {
            return Err(format!("A_{}: {:?} vs {:?}", k, constructed, intervals));
        }
    }
    Ok(())
}

fn random_quiver(rng: &mut ChaCha8Rng) -> ColouredQuiver {
    let k = rng.gen_range(2..=5usize);
    let colours: Vec<Parity> = (0..k)
        .map(|_| Parity::from_u8(rng.gen_range(0..2u8)))
        .collect();
    let orient: String = (0..k - 1)
        .map(|_| if rng.gen_bool(0.5) { '<' } else { '>' })
        .collect();
    ColouredQuiver::from_orient_str(colours, &orient).unwrap()
}

fn random_rep(rng: &mut ChaCha8Rng, quiver: &ColouredQuiver) -> Representation<Rat> {
    let dims: Vec<usize> = (0..quiver.num_vertices())
        .map(|_| rng.gen_range(0..=3usize))
        .collect();
    let maps: Vec<Matrix<Rat>> = quiver
        .edges
        .iter()
        .map(|e| {
            Matrix::from_fn(dims[e.target], dims[e.source], |_, _| {
                Rat::from_i64(rng.gen_range(-2..=2i64))
            })
        })
        .collect();
    Representation::new(quiver.clone(), dims, maps).unwrap()
}

/// 4. Super/classical compatibility on ≥ 1000 randomized inputs.
fn criterion_functor_compat() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(20260826);
    let mut checks = 0usize;
    while checks < 1000 {
        let quiver = random_quiver(&mut rng);
        let classical = random_rep(&mut rng, &quiver);
        let g = embed_G(&quiver, &classical);
        if forget_F(&g) != classical {
            return Err("F∘G ≠ Id".into());
        }
        for x in [g.clone(), parity_functor(&g)] {
            for (i, dir) in (0..quiver.num_vertices()).flat_map(|i| {
                [(i, Direction::Minus), (i, Direction::Plus)]
            }) {
                let admissible = match dir {
                    Direction::Minus => quiver.is_sink(i),
                    Direction::Plus => quiver.is_source(i),
                };
                if !admissible {
                    continue;
                }
                let super_side = forget_F(&super_reflect(&x, i, dir).map_err(|e| e.to_string())?);
                let classical_side = match dir {
                    Direction::Minus => bgp_minus(&forget_F(&x), i),
                    Direction::Plus => bgp_plus(&forget_F(&x), i),
                }
                .map_err(|e| e.to_string())?;
                if super_side != classical_side {
                    return Err(format!(
                        "mismatch at vertex {} ({:?}) on {}",
                        i,
                        dir,
                        x.render(true)
                    ));
                }
                checks += 1;
            }
        }
    }
    Ok(())
}

/// 5. S_i⁺ S_i⁻ X ≅ X for every indecomposable X ≇ S_i at a sink i.
fn criterion_near_inverse() -> Result<(), String> {
    for k in 1..=5usize {
        for orient in orientations(k) {
            let quiver =
                ColouredQuiver::from_orient_str(vec![Parity::Even; k], &orient).unwrap();
            let indecomposables =
                all_indecomposables::<Rat>(&quiver).map_err(|e| e.to_string())?;
            for i in quiver.sinks() {
                let simple = simple_rep::<Rat>(&quiver, i);
                for x in &indecomposables {
                    if x.dim_vector() == simple.dim_vector() {
                        continue;
                    }
                    let back = bgp_plus(&bgp_minus(x, i).map_err(|e| e.to_string())?, i)
                        .map_err(|e| e.to_string())?;
                    if !iso_bricks(&back, x).map_err(|e| e.to_string())? {
                        return Err(format!(
                            "S{}⁺S{}⁻ failed on dim {:?} ({:?})",
                            i + 1,
                            i + 1,
                            x.dim_vector(),
                            orient
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// 6. AR quiver: A(2,2) golden layout; counts and bijectivity for n+m ≤ 6.
fn criterion_ar_quiver() -> Result<(), String> {
    let ar = build_ar_quiver(&pi_a22(), "<<").map_err(|e| e.to_string())?;
    let vertices = ar.vertices();
    if vertices.len() != 12 {
        return Err(format!("A(2,2): {} vertices, want 12", vertices.len()));
    }
    let golden = [
        (0usize, 0usize, "e1-e2"),
        (0, 2, "e2-d1"),
        (0, 4, "d1-d2"),
        (0, 6, "d2-e1"),
        (1, 1, "e1-d1"),
        (1, 3, "e2-d2"),
        (1, 5, "d1-e1"),
        (1, 7, "d2-e2"),
        (2, 0, "d2-d1"),
        (2, 2, "e1-d2"),
        (2, 4, "e2-e1"),
        (2, 6, "d1-e2"),
    ];
    for (i, t, label) in golden {
        match ar.label(i, t) {
            Some(r) if r.render(true) == label => {}
            other => {
                return Err(format!(
                    "A(2,2) slot ({},{}): got {:?}, want {}",
                    i, t, other, label
                ))
            }
        }
    }
    // τ∘Φ = Φ∘C and bijectivity are asserted inside build_ar_quiver;
    // re-check the size formula for the whole range.
    for n in 1..=5usize {
        for m in 1..=5usize {
            if n + m < 2 || n + m > 6 {
                continue;
            }
            let pi = SimpleSystem::standard(n, m).unwrap();
            let orient = "<".repeat(n + m - 2);
            let ar = build_ar_quiver(&pi, &orient).map_err(|e| e.to_string())?;
            let expected = (n + m) * (n + m - 1);
            if ar.vertices().len() != expected {
                return Err(format!(
                    "A({},{}): {} vertices, want {}",
                    n,
                    m,
                    ar.vertices().len(),
                    expected
                ));
            }
        }
    }
    Ok(())
}

/// 7. Graded path algebra: θ_i degree 0, ε-independence, dim Π(A₂) = 4.
fn criterion_path_algebra() -> Result<(), String> {
    // exhaustive colourings for k ≤ 4, sampled for k = 5, 6
    for k in 1..=6usize {
        let colour_sets: Vec<u32> = if k <= 4 {
            (0..1u32 << k).collect()
        } else {
            vec![0, (1 << k) - 1, 0b10101 & ((1 << k) - 1), 0b01010 & ((1 << k) - 1)]
        };
        for bits in colour_sets {
            let colours: Vec<Parity> = (0..k)
                .map(|i| Parity::from_u8((bits >> i & 1) as u8))
                .collect();
            let quiver = ColouredQuiver::from_orient_str(colours, &"<".repeat(k - 1)).unwrap();
            let dq = DoubleQuiver::new(quiver.clone());
            for theta in mesh_elements::<Rat>(&dq) {
                if !theta.is_zero() && theta.z2degree(&quiver) != Some(Parity::Even) {
                    return Err(format!("θ not degree 0 for k={} bits={:b}", k, bits));
                }
            }
        }
    }
    // ε-independence of the graded dimensions
    let quiver = ColouredQuiver::from_orient_str(
        vec![Parity::Even, Parity::Odd, Parity::Even],
        "<>",
    )
    .unwrap();
    let a = preprojective_dims::<Rat>(&DoubleQuiver::new(quiver.clone()), 8)
        .map_err(|e| e.to_string())?;
    let b = preprojective_dims::<Rat>(
        &DoubleQuiver::with_signs(quiver, vec![-1, -1]).unwrap(),
        8,
    )
    .map_err(|e| e.to_string())?;
    if a != b {
        return Err("graded dimensions depend on ε".into());
    }
    // dim Π(A₂) = 4, vanishing in path length ≥ 2
    let a2 = ColouredQuiver::from_orient_str(vec![Parity::Even; 2], ">").unwrap();
    let dims = preprojective_dims::<Rat>(&DoubleQuiver::new(a2), 6).map_err(|e| e.to_string())?;
    let total: usize = dims.iter().map(|&(e, o)| e + o).sum();
    if total != 4 || dims[2..].iter().any(|&(e, o)| e + o != 0) {
        return Err(format!("Π(A₂) dims {:?}", dims));
    }
    Ok(())
}

/// 8. Root-count identities for 1 ≤ n,m ≤ 5.
fn criterion_root_counts() -> Result<(), String> {
    for n in 1..=5usize {
        for m in 1..=5usize {
            let rs = SuperRootSystem::new(n, m).unwrap();
            let roots = rs.all_roots();
            let odd = roots.iter().filter(|r| r.parity() == Parity::Odd).count();
            let even = roots.len() - odd;
            if odd != 2 * n * m
                || even != n * (n - 1) + m * (m - 1)
                || roots.len() != (n + m) * (n + m - 1)
            {
                return Err(format!("counts wrong for A({},{})", n, m));
            }
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: Vec<Criterion> = vec![
        ("1 worked example A(2,2)", criterion_worked_example),
        ("2 main-theorem sweep", criterion_theorem_sweep),
        ("3 Gabriel interval oracle", criterion_gabriel_oracle),
        ("4 super/classical functor compatibility", criterion_functor_compat),
        ("5 reflection near-inverse", criterion_near_inverse),
        ("6 AR quiver", criterion_ar_quiver),
        ("7 graded path algebra", criterion_path_algebra),
        ("8 root-count identities", criterion_root_counts),
    ];
    let mut failures = Vec::new();
    for (name, body) in criteria {
        match body() {
            Ok(()) => println!("criterion {}: PASS", name),
            Err(msg) => {
                println!("criterion {}: FAIL ({})", name, msg);
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {:?}", failures);
}
