//! Acceptance criteria 1 to 10, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the report is always printed. The process fails when a
//! criterion outside `KNOWN_FAILURES` fails, or when a listed one starts passing.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use num::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toricnet::crn::analysis::{linkage_classes, stoichiometric_matrix};
use toricnet::crn::trees::{class_block, kernel_residual, matrix_tree_minor};
use toricnet::crn::{
    analyze, birch_point, birch_point_in_class, build_rate_matrix, cayley_matrix, parse_network, simulate, toric_binomials, tree_constants, Bindings,
    Network, RateMode,
};
use toricnet::exactcore::{format_rational, q, qr, IntMatrix, Monomial, QAlgebra, Ring, SparsePoly, Var, Q};
use toricnet::freeprob::oracle::{moments_from_classical_cumulants_oracle, moments_from_free_cumulants_oracle};
use toricnet::freeprob::{
    classical_cumulants, free_cumulants_to_moments, hirzebruch_k, l_genus_log, moments_to_free_cumulants, nc_cumulant_series, todd_log, CumulantSeq,
    MomentSeq,
};
use toricnet::hopfdiff::{ab_bfk_to_ln, bfk_antipode, fgl_over_n, ln_antipode, t, verify_hopf, HopfKind};
use toricnet::ncsf::qsym::pairing_tensor;
use toricnet::ncsf::{compositions, coproduct, pairing, z, z_word, Composition, Partition, QSym};
use toricnet::torictop::{
    chern_number, crn_to_toric, delzant_to_quasitoric, mxi_numbers, v, Bundle, DelzantPolytope, QuasitoricData, SimplicialComplex, TopError,
};

/// Criteria that cannot hold as stated; the analysis is kept with the project notes.
const KNOWN_FAILURES: &[usize] = &[7];

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn net(text: &str) -> Result<Network, String> {
    parse_network(text).map_err(|e| format!("{text:?}: {e}"))
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn criterion_1() -> Outcome {
    let squares = net("2A <-> A + B : 1, 1\nA + B <-> 2B : 1, 1")?;
    let a = analyze(&squares).map_err(err)?;
    check(a.deficiency == 1, || format!("squares deficiency {}", a.deficiency))?;
    check(a.cayley == vec![vec![2, 1, 0], vec![0, 1, 2], vec![1, 1, 1]], || format!("Cayley matrix {:?}", a.cayley))?;
    let bins = toric_binomials(&squares);
    let k = |i| SparsePoly::indexed_var("K", i);
    let expected = k(1).mul(&k(3)).sub(&k(2).pow(2));
    check(bins.len() == 1 && (bins[0].polynomial() == expected || bins[0].polynomial() == expected.neg()), || format!("binomials {bins:?}"))?;
    let tri = net("A <-> B : 1, 1\nB <-> C : 1, 1\nC <-> A : 1, 1")?;
    let a = analyze(&tri).map_err(err)?;
    check(a.deficiency == 0, || format!("triangle deficiency {}", a.deficiency))?;
    check(toric_binomials(&tri).is_empty(), || "triangle has binomials".into())?;
    let s = birch_point(&tri, &RateMode::infer(&tri, None)).map_err(err)?;
    check(s.residual < 1e-9, || format!("residual {:e}", s.residual))?;
    check(s.concentrations.iter().all(|c| (c - 1.0).abs() < 1e-9), || format!("Birch point {:?}", s.concentrations))?;
    Ok(format!("δ = 1 with K1·K3 − K2^2; triangle Birch point {:?}", s.concentrations))
}

fn random_digraph(rng: &mut ChaCha8Rng) -> String {
    let n = rng.gen_range(2..=6);
    let mut order: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut edges: BTreeSet<(usize, usize)> = (0..n).map(|i| (order[i], order[(i + 1) % n])).collect();
    for a in 1..=n {
        for b in 1..=n {
            if a != b && rng.gen_bool(0.3) {
                edges.insert((a, b));
            }
        }
    }
    edges.iter().enumerate().map(|(e, (a, b))| format!("X{a} -> X{b} : k{}", e + 1)).collect::<Vec<_>>().join("\n")
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut minors = 0;
    for _ in 0..25 {
        let text = random_digraph(&mut rng);
        let network = net(&text)?;
        let mode = RateMode::Symbolic;
        let k = tree_constants(&network, &mode).map_err(err)?;
        let m = network.num_complexes();
        let block = class_block(&build_rate_matrix(&network, &mode).map_err(err)?, &(0..m).collect::<Vec<_>>());
        for i in 0..m {
            for j in 0..m {
                let minor = matrix_tree_minor(&block, i, j).map_err(err)?;
                check(minor == k.values[i], || format!("{text:?}: K{} = {} but minor ({j}) gives {minor}", i + 1, k.values[i]))?;
                minors += 1;
            }
        }
        let residual = kernel_residual(&network, &mode, &k).map_err(err)?;
        check(residual.iter().all(Ring::is_zero), || format!("{text:?}: A·K = {residual:?}"))?;
    }
    Ok(format!("25 digraphs, {minors} signed minors, A·K = 0 exactly"))
}

fn corpus() -> Vec<&'static str> {
    vec![
        "A <-> B : 1, 1",
        "A <-> B : 1, 1\nB <-> C : 1, 1\nC <-> A : 1, 1",
        "2A <-> A + B : 1, 1\nA + B <-> 2B : 1, 1",
        "A <-> 2A : 1, 1",
        "A -> B : 1",
        "A + B <-> C : 1, 1",
        "A <-> B : 1, 1\nC <-> D : 1, 1",
        "A <-> B : 1, 1\nC + D <-> E : 1, 1",
        "A + B <-> C : 1, 1\nC -> D + E : 1\nD + E -> A + B : 1",
        "A -> 2B : 1\n2B -> A + C : 1\nA + C -> A : 1",
        "2A <-> B : 1, 1\nA + C <-> D : 1, 1\nB + E <-> F : 1, 1",
        "A -> B : 1\nB -> 2A + 2B : 1\n2A + 2B -> A : 1",
        "S + E <-> C : 1, 1\nC -> P + E : 1",
        "A <-> B : 1, 1\nA + B <-> 2B : 1, 1",
        "X <-> Y : 1, 1\nY <-> Z : 1, 1\n2X <-> X + Y : 1, 1",
        "A + B -> C : 1\nC -> A : 1\nA -> A + B : 1",
        "A <-> 0 : 1, 1",
        "A <-> B : 1, 1\nB <-> C : 1, 1\nD <-> E : 1, 1\nE + F <-> G : 1, 1",
        "A + B <-> 2C : 1, 1\n2C <-> D : 1, 1\nD -> A + B : 1",
        "3A <-> A + 2B : 1, 1\nA + 2B <-> 3B : 1, 1\n3B <-> 3A : 1, 1",
        "A <-> 2B : 1, 1\n2B <-> C : 1, 1\nA <-> C : 1, 1\nD <-> 2D : 1, 1",
        "X1 + X2 -> X3 : 1\nX3 -> X4 : 1\nX4 -> X1 + X2 : 1\nX4 <-> X5 : 1, 1",
    ]
}

fn criterion_3() -> Outcome {
    let mut multi = 0;
    let corpus = corpus();
    for text in &corpus {
        let network = net(text)?;
        let n = network.num_complexes();
        let l = linkage_classes(&network).len();
        let s = stoichiometric_matrix(&network).rank();
        let cayley: IntMatrix = cayley_matrix(&network);
        let (left, right) = (n as i64 - l as i64 - s as i64, n as i64 - cayley.rank() as i64);
        check(left == right, || format!("{text:?}: n − l − s′ = {left}, n − rank(Cayley) = {right}"))?;
        multi += usize::from(l > 1);
    }
    check(corpus.len() >= 20 && multi >= 3, || format!("corpus of {} with {multi} multi-class networks", corpus.len()))?;
    Ok(format!("{} networks, {multi} with several linkage classes", corpus.len()))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let tri = net("A <-> B : k1, k2\nB <-> C : k3, k4\nC <-> A : k5, k6")?;
    let mut worst = (0.0f64, 0.0f64);
    for _ in 0..10 {
        let bindings: Bindings = (1..=6).map(|i| (format!("k{i}"), qr(rng.gen_range(1..=16), 4))).collect();
        let mode = RateMode::Numeric(bindings);
        let c0: Vec<f64> = (0..3).map(|_| rng.gen_range(0.1..3.0)).collect();
        let traj = simulate(&tri, &mode, &c0, 50.0, 0.01).map_err(err)?;
        let birch = birch_point_in_class(&tri, &mode, &c0).map_err(err)?;
        let total: f64 = c0.iter().sum();
        let drift = traj.states.iter().map(|c| (c.iter().sum::<f64>() - total).abs() / total).fold(0.0, f64::max);
        let distance = traj.final_state().iter().zip(&birch.concentrations).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        check(drift <= 1e-8, || format!("Σc drifted by {drift:e}"))?;
        check(distance <= 1e-6, || format!("{distance:e} from the Birch point at t = 50"))?;
        worst = (worst.0.max(drift), worst.1.max(distance));
    }
    Ok(format!("10 runs, max drift {:.1e}, max distance {:.1e}", worst.0, worst.1))
}

fn criterion_5() -> Outcome {
    for kind in [HopfKind::Ln, HopfKind::Bfk] {
        let r = verify_hopf(kind, 8).map_err(err)?;
        check(r.coassociative && r.counital && r.antipode, || format!("{r:?}"))?;
    }
    let mismatch = ab_bfk_to_ln(8).map_err(err)?;
    check(mismatch.is_none(), || format!("abelianization mismatch {mismatch:?}"))?;
    let chi_t2 = ln_antipode(&t(2)).map_err(err)?;
    check(chi_t2 == t(1).pow(2).scale(&q(2)).sub(&t(2)), || format!("χ(t2) = {chi_t2}"))?;
    let chi_z2 = bfk_antipode(&z(2));
    check(chi_z2 == z_word(&[1, 1]).scale(&q(2)).sub(&z(2)), || format!("χ(Z2) = {chi_z2}"))?;
    Ok(format!("axioms to weight 8, χ(t2) = {chi_t2}, χ(Z2) = {chi_z2}"))
}

fn monomial(alpha: &Composition) -> QSym {
    QSym::monomial(alpha.clone())
}

fn word(alpha: &Composition) -> toricnet::ncsf::Ncf {
    z_word(&alpha.parts().iter().map(|&p| p as usize).collect::<Vec<_>>())
}

fn criterion_6() -> Outcome {
    for n in 1..=7 {
        let basis = compositions(n);
        for a in &basis {
            for b in &basis {
                let value = pairing(&word(a), &monomial(b));
                let expected = if a == b { q(1) } else { q(0) };
                check(value == expected, || format!("<Z{}, M{}> = {value}", a.bracket(), b.bracket()))?;
            }
        }
    }
    let mut triples = 0;
    for n in 1..=6 {
        for x in compositions(n) {
            let dx = coproduct(&word(&x));
            for k in 0..=n {
                let lefts = if k == 0 { vec![Composition::empty()] } else { compositions(k) };
                let rights = if k == n { vec![Composition::empty()] } else { compositions(n - k) };
                for a in &lefts {
                    for b in &rights {
                        let (ma, mb) = (monomial(a), monomial(b));
                        let lhs = pairing_tensor(&dx, &ma, &mb);
                        let rhs = pairing(&word(&x), &ma.product(&mb));
                        check(lhs == rhs, || format!("<ΔZ{}, M{}⊗M{}> = {lhs}, <Z, M·M> = {rhs}", x.bracket(), a.bracket(), b.bracket()))?;
                        triples += 1;
                    }
                }
            }
        }
    }
    Ok(format!("identity pairing to weight 7, {triples} adjunction triples"))
}

fn criterion_7() -> Outcome {
    let law = fgl_over_n(6).map_err(err)?;
    let report = law.report().map_err(err)?;
    check(report.unit, || "unit axiom fails".into())?;
    check(report.commutative, || "not commutative".into())?;
    check(law.coeff(1, 1) == z(1).scale(&q(2)), || format!("xy coefficient {}", law.coeff(1, 1)))?;
    check(law.matches_commutative_law().map_err(err)?, || "abelianization differs from the commutative law".into())?;
    check(report.associative, || {
        format!("unit, commutativity, xy = 2·Z[1] and abelianization hold, but associativity fails first in total degree {}", report.first_associativity_failure.unwrap_or(0))
    })?;
    Ok("unit, commutativity, associativity to order 6".into())
}

fn rationals(rng: &mut ChaCha8Rng, n: usize) -> Vec<Q> {
    (0..n).map(|_| qr(rng.gen_range(-6..=6), rng.gen_range(1..=4))).collect()
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..50 {
        let n = rng.gen_range(1..=8);
        let kappa = rationals(&mut rng, n);
        let oracle = moments_from_free_cumulants_oracle(&kappa).map_err(err)?;
        let moments = free_cumulants_to_moments(&CumulantSeq::new(kappa.clone())).map_err(err)?;
        check(moments.moments() == oracle.as_slice(), || format!("free moments of {kappa:?}"))?;
        let back = moments_to_free_cumulants(&moments).map_err(err)?;
        check(back.cumulants() == kappa.as_slice(), || format!("free cumulants of {oracle:?}"))?;
        let classical = moments_from_classical_cumulants_oracle(&kappa).map_err(err)?;
        let back = classical_cumulants(&MomentSeq::new(classical).map_err(err)?).map_err(err)?;
        check(back.cumulants() == kappa.as_slice(), || format!("classical cumulants of {kappa:?}"))?;
    }
    let free = |m: &[i64]| moments_to_free_cumulants(&MomentSeq::from_higher(m.iter().map(|&x| q(x)).collect())).map(|k| k.cumulants().to_vec()).map_err(err);
    check(free(&[0, 1, 0, 2, 0, 5])? == [0, 1, 0, 0, 0, 0].map(q), || "semicircle".into())?;
    check(free(&[1, 2, 5, 14])? == [1, 1, 1, 1].map(q), || "free Poisson".into())?;
    check(free(&[1, 1, 1, 1])? == [1, 0, 0, 0].map(q), || "point mass".into())?;
    let todd = hirzebruch_k(&todd_log(5), 4).map_err(err)?;
    check(todd == vec![q(1), qr(1, 2), qr(1, 12), q(0), qr(-1, 720)], || format!("Todd {todd:?}"))?;
    let l = hirzebruch_k(&l_genus_log(5), 4).map_err(err)?;
    check(l == vec![q(1), q(0), qr(1, 3), q(0), qr(-1, 45)], || format!("L {l:?}"))?;
    let ab = nc_cumulant_series(6).map_err(err)?.abelianized();
    for _ in 0..10 {
        let ms = rationals(&mut rng, 6);
        let expected = moments_to_free_cumulants(&MomentSeq::from_higher(ms.clone())).map_err(err)?;
        for (n, k) in ab.iter().enumerate() {
            let value = k.evaluate(|x| x.index_with_prefix("m").map(|i| ms[i - 1].clone())).map_err(err)?;
            check(value == expected.get(n + 1), || format!("abelianized k{} = {}", n + 1, format_rational(&value)))?;
        }
    }
    Ok("oracles on 50 sequences, spot values, Todd and L series, abelianized nc cumulants to order 6".into())
}

fn degree_monomials(m: usize, d: usize) -> Vec<SparsePoly> {
    if d == 0 {
        return vec![SparsePoly::one()];
    }
    let mut out = Vec::new();
    fn rec(m: usize, start: usize, left: usize, acc: Vec<(Var, u32)>, out: &mut Vec<SparsePoly>) {
        if left == 0 {
            out.push(SparsePoly::monomial(Monomial::from_powers(acc)));
            return;
        }
        for i in start..=m {
            let mut next = acc.clone();
            next.push((Var::indexed("v", i), 1));
            rec(m, i, left - 1, next, out);
        }
    }
    rec(m, 1, d, Vec::new(), &mut out);
    out
}

fn hirzebruch(k: i64) -> Result<QuasitoricData, String> {
    let square = SimplicialComplex::from_one_based(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]).map_err(err)?;
    let lambda = IntMatrix::from_i64(&[vec![1, 0, -1, k], vec![0, 1, 0, -1]]).map_err(err)?;
    QuasitoricData::new(square, lambda, None).map_err(err)
}

fn well_defined(d: &QuasitoricData) -> Result<usize, String> {
    let (m, n) = (d.num_vertices(), d.dimension());
    let mut checked = 0;
    for j in 0..n {
        let theta = (0..m).fold(SparsePoly::zero(), |acc, i| acc.add(&v(i + 1).scale(&Q::from_integer(d.lambda().get(j, i).clone()))));
        for mu in degree_monomials(m, n - 1) {
            let value = d.top_evaluate(&theta.mul(&mu)).map_err(err)?;
            check(value.is_zero(), || format!("θ{}·{mu} evaluates to {value}", j + 1))?;
            checked += 1;
        }
    }
    let top = degree_monomials(m, n);
    let reference: Vec<Q> = top.iter().map(|p| d.top_evaluate(p)).collect::<Result<_, _>>().map_err(err)?;
    let orientations = d.facet_orientations();
    for (facet, &o) in d.complex().facets().iter().zip(&orientations) {
        let other = QuasitoricData::new(d.complex().clone(), d.lambda().clone(), Some(facet)).map_err(err)?;
        let values: Vec<Q> = top.iter().map(|p| other.top_evaluate(p)).collect::<Result<_, _>>().map_err(err)?;
        let expected: Vec<Q> = reference.iter().map(|x| x * q(i64::from(o))).collect();
        check(values == expected, || format!("base facet {facet:?} changes the evaluation beyond its orientation sign"))?;
        checked += values.len();
    }
    Ok(checked)
}

fn polytope(normals: &[&[i64]], offsets: &[Q]) -> DelzantPolytope {
    DelzantPolytope { normals: normals.iter().map(|a| a.to_vec()).collect(), offsets: offsets.to_vec() }
}

fn criterion_9() -> Outcome {
    let cp2 = QuasitoricData::projective_space(2);
    let c11 = chern_number(&cp2, &Partition::new(vec![1, 1]), Bundle::Tangent).map_err(err)?;
    let c2 = chern_number(&cp2, &Partition::new(vec![2]), Bundle::Tangent).map_err(err)?;
    check(c11 == q(9) && c2 == q(3), || format!("CP2 c1² = {c11}, c2 = {c2}"))?;
    let class = mxi_numbers(&cp2).map_err(err)?.to_ncf();
    check(class == z(2).scale(&q(3)).add(&z_word(&[1, 1]).scale(&q(3))), || format!("CP2 class {class}"))?;
    for n in 1..=4u32 {
        let values = mxi_numbers(&QuasitoricData::projective_space(n as usize)).map_err(err)?;
        for alpha in compositions(n) {
            let expected = Q::from_integer(toricnet::exactcore::rational::binomial(u64::from(n) + 1, alpha.len() as u64));
            check(values.value(&alpha) == expected, || format!("CP{n} at {}", alpha.bracket()))?;
        }
    }
    let cp1 = QuasitoricData::projective_space(1);
    let square = mxi_numbers(&cp1.product(&cp1)).map_err(err)?.to_ncf();
    let product = mxi_numbers(&cp1).map_err(err)?.to_ncf().pow(2);
    check(square == product, || format!("CP1×CP1 gives {square}, product {product}"))?;
    let mut evaluations = 0;
    for d in [cp2.clone(), QuasitoricData::projective_space(3), cp1.product(&cp1), hirzebruch(1)?, hirzebruch(3)?] {
        evaluations += well_defined(&d)?;
    }
    let a = qr(7, 3);
    let interval = delzant_to_quasitoric(&polytope(&[&[1], &[-1]], &[q(0), -a.clone()])).map_err(err)?;
    let u1 = interval.data.top_evaluate(&interval.symplectic_class).map_err(err)?;
    check(u1 == a, || format!("interval u[V] = {u1}"))?;
    let triangle = delzant_to_quasitoric(&polytope(&[&[1, 0], &[0, 1], &[-1, -1]], &[q(0), q(0), -a.clone()])).map_err(err)?;
    let u2 = triangle.data.top_evaluate(&triangle.symplectic_class.pow(2)).map_err(err)?;
    let vs = &triangle.vertices;
    let area = ((&vs[1][0] - &vs[0][0]) * (&vs[2][1] - &vs[0][1]) - (&vs[2][0] - &vs[0][0]) * (&vs[1][1] - &vs[0][1])).abs() / q(2);
    check(u2 == &a * &a && u2 == q(2) * area, || format!("triangle u²[V] = {u2}"))?;
    Ok(format!("CP^n classes, multiplicativity, {evaluations} well-definedness evaluations, u[V] = a and u²[V] = a² = 2!·area"))
}

fn criterion_10() -> Outcome {
    let tri = crn_to_toric(&net("A <-> B : 1, 1\nB <-> C : 1, 1\nC <-> A : 1, 1")?).map_err(err)?;
    check(tri.dimension == 2 && tri.class.render() == "3·Z[2] + 3·Z[1,1]", || format!("triangle gives {}", tri.class.render()))?;
    let line = crn_to_toric(&net("A <-> 2A : 1, 1")?).map_err(err)?;
    check(line.dimension == 1 && line.class.render() == "2·Z[1]", || format!("A ⇄ 2A gives {}", line.class.render()))?;
    let squares = crn_to_toric(&net("2A <-> A + B : 1, 1\nA + B <-> 2B : 1, 1")?);
    check(matches!(squares, Err(TopError::DeficiencyNonzero(1))), || format!("squares: {squares:?}"))?;
    let orbifold = crn_to_toric(&net("A -> B : 1\nB -> 2A + 2B : 1\n2A + 2B -> A : 1")?);
    check(matches!(&orbifold, Err(TopError::NonSmooth { divisors }) if divisors == &[1, 3]), || format!("orbifold: {orbifold:?}"))?;
    Ok("CP2, CP1, DeficiencyNonzero, NonSmooth with divisors [1, 3]".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("CRN golden corpus", criterion_1),
        ("matrix-tree theorem", criterion_2),
        ("deficiency double formula", criterion_3),
        ("mass-action dynamics", criterion_4),
        ("Hopf suites", criterion_5),
        ("duality", criterion_6),
        ("formal group law over NSymm", criterion_7),
        ("free probability", criterion_8),
        ("characteristic numbers", criterion_9),
        ("CRN to toric bridge", criterion_10),
    ];
    let start = Instant::now();
    let mut unexpected = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let number = i + 1;
        let clock = Instant::now();
        let outcome = run();
        let elapsed = clock.elapsed().as_secs_f64();
        let known = KNOWN_FAILURES.contains(&number);
        match &outcome {
            Ok(detail) => println!("PASS {number:>2} {name}: {detail} [{elapsed:.2}s]"),
            Err(detail) => println!("FAIL {number:>2} {name}: {detail} [{elapsed:.2}s]{}", if known { " (known)" } else { "" }),
        }
        if outcome.is_ok() == known {
            unexpected.push(number);
        }
    }
    println!("total {:.2}s", start.elapsed().as_secs_f64());
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
