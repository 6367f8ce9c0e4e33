//! One PASS/FAIL line per acceptance criterion, with wall time against its budget.
//!
//! Run with `cargo test -p knotforge --test acceptance -- --nocapture`. The
//! stretch criterion reads a PD file from `KNOTFORGE_LERNA_PD` and is skipped
//! when the variable is unset.

mod common;

use std::time::{Duration, Instant};

use knotforge::algebra::laurent::{loop_value, quantum_two};
use knotforge::algebra::{AbelianGroup, LaurentPoly, PolyMatrix, Variable};
use knotforge::colorings::{
    cocycle_state_sum, dihedral_quandle, fox_coloring_group, fox_colorings, fox_count, quandle_coloring_count,
    quandle_colorings, trivial_quandle, two_chain, Magma2,
};
use knotforge::diagram::corpus::{self, alternating_knots, equivalent_pairs, kink_pairs, r2_pairs, r3_pairs, MoveKind};
use knotforge::diagram::{parse_diagram, BraidWord, LinkDiagram, Sign, Smoothing};
use knotforge::distributive::{one_term_homology, presimplicial_check, rack_boundary, rack_homology, FaceMapFamily};
use knotforge::khovanov::{
    bracket_skein, bracket_state_sum, coefficient_analysis, extreme_group_check, jones_classical, khovanov_complex,
    khovanov_homology, lee_support_check, torsion_predict,
};
use knotforge::yang_baxter::{
    inverse_check, jones_r_matrix, state_sum, yb_boundary, yb_cycle_check, ybe_check, JonesVariant, SetTheoreticYB,
    YangBaxterOperator,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;
type Criterion = (&'static str, u64, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn closure(strands: usize, letters: &[i32]) -> LinkDiagram {
    BraidWord::new(strands, letters.to_vec()).unwrap().closure().unwrap()
}

fn load(name: &str) -> LinkDiagram {
    corpus::load(name).unwrap()
}

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

fn fox() -> Check {
    let trefoil = load("trefoil_right");
    ensure!(fox_count(&trefoil, 3) == 9, "trefoil has {} Fox 3-colorings", fox_count(&trefoil, 3));
    let g = fox_coloring_group(&trefoil);
    ensure!(g == AbelianGroup::from_u64(1, &[3]), "trefoil coloring group {g:?}");
    let k = load("knot_6_2");
    let g = fox_coloring_group(&k);
    ensure!(g == AbelianGroup::from_u64(1, &[11]), "6_2 coloring group {g:?}");
    let colorings = fox_colorings(&k, 11);
    let c = colorings.iter().find(|c| !c.is_constant()).ok_or("no nontrivial 11-coloring of 6_2")?;
    let (arc, _) = k.arcs();
    for x in k.crossings() {
        let [a, b, cc, _] = x.slots.map(|l| c.0[arc[l as usize - 1]]);
        ensure!((a + cc) % 11 == 2 * b % 11, "exhibited coloring fails at {x:?}");
    }
    println!("    6_2 arc colors mod 11: {:?}", c.0);
    Ok(())
}

fn bracket() -> Check {
    for n in 0..=4 {
        let u = LinkDiagram::unlink(n);
        let expected = loop_value().pow(n as i64).unwrap();
        ensure!(bracket_state_sum(&u).map_err(err)? == expected, "unlink of {n} components");
    }
    for (name, d) in corpus::all() {
        if d.crossing_count() <= 8 {
            ensure!(bracket_state_sum(&d).map_err(err)? == bracket_skein(&d).map_err(err)?, "state sum and skein differ on {name}");
        }
    }
    let curl = LaurentPoly::monomial(Variable::A, 3, -1);
    let mut checked = 0;
    for p in kink_pairs() {
        if p.kind != MoveKind::Kink(Sign::Positive) {
            continue;
        }
        let l = bracket_state_sum(&p.left).map_err(err)?;
        let r = bracket_state_sum(&p.right).map_err(err)?;
        ensure!(r == &l * &curl, "factor -A^3 fails on {}", p.name);
        checked += 1;
    }
    ensure!(checked >= 5, "only {checked} positive kink pairs");
    Ok(())
}

fn khovanov() -> Check {
    for (name, d) in corpus::all() {
        ensure!(khovanov_complex(&d).map_err(err)?.d_squared_is_zero(), "d² ≠ 0 on {name}");
    }
    let u = khovanov_homology(&LinkDiagram::unknot()).map_err(err)?;
    ensure!(u.get(0, 1) == AbelianGroup::free(1) && u.get(0, -1) == AbelianGroup::free(1), "unknot table");
    for name in ["trefoil_right", "figure8"] {
        let t = khovanov_homology(&load(name)).map_err(err)?;
        ensure!(common::khovanov_cells(&t) == common::khovanov_golden(name), "{name} differs from its fixture");
        ensure!(t.iter_ij().iter().any(|(_, g)| g.torsion_part() == AbelianGroup::from_u64(0, &[2])), "{name} lacks Z2");
    }
    for (name, d) in corpus::all() {
        let c = khovanov_complex(&d).map_err(err)?;
        let chi = c.euler_characteristic();
        ensure!(c.homology().euler_characteristic() == chi, "Euler characteristic on {name}");
        if d.component_count() > 0 {
            let r = chi.div_exact(&quantum_two()).ok_or(format!("{name}: not divisible by q + 1/q"))?;
            ensure!(&r * &quantum_two() == chi, "{name}: inexact division");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for name in ["trefoil_right", "figure8"] {
        let d = load(name);
        let base = khovanov_homology(&d).map_err(err)?;
        for _ in 0..5 {
            let mut order: Vec<usize> = (0..d.crossing_count()).collect();
            order.shuffle(&mut rng);
            ensure!(khovanov_homology(&d.reorder_crossings(&order)).map_err(err)? == base, "{name} under order {order:?}");
        }
    }
    Ok(())
}

fn structural() -> Check {
    for name in ["sigma1_3", "figure8"] {
        let d = load(name);
        let r = extreme_group_check(&d, &khovanov_homology(&d).map_err(err)?).map_err(err)?;
        ensure!(r.a_side.passes == Some(true) && r.b_side.passes == Some(true), "extreme groups on {name}: {r:?}");
    }
    for n in 3..=5 {
        let d = closure(2, &vec![1; n]);
        let t = khovanov_homology(&d).map_err(err)?;
        for side in [Smoothing::A, Smoothing::B] {
            let p = torsion_predict(&d, side).map_err(err)?;
            let computed = t.get_ab(p.ab.0, p.ab.1).torsion_part();
            ensure!(computed == p.group, "sigma1^{n} side {side:?}: predicted {:?}, computed {computed:?}", p.group);
            if n == 4 && side == Smoothing::B {
                ensure!(p.group == AbelianGroup::from_u64(0, &[2]), "sigma1^4 side B prediction {:?}", p.group);
            }
        }
    }
    let knots = alternating_knots();
    ensure!(!knots.is_empty(), "no alternating knots in the corpus");
    for (name, d) in knots {
        let r = lee_support_check(&khovanov_homology(&d).map_err(err)?, &d, false).map_err(err)?;
        ensure!(r.holds && r.only_z2_torsion, "{name}: {r:?}");
    }
    Ok(())
}

fn quandle_operators() -> Vec<(String, Magma2)> {
    let mut out = vec![("tetrahedral".to_string(), common::tetrahedral())];
    for n in 1..=6 {
        out.push((format!("dihedral{n}"), dihedral_quandle(n)));
        out.push((format!("trivial{n}"), trivial_quandle(n)));
    }
    out
}

fn yang_baxter() -> Check {
    let mut ops: Vec<(String, YangBaxterOperator)> = vec![
        ("jones".into(), jones_r_matrix(JonesVariant::Standard)),
        ("jones-unital".into(), jones_r_matrix(JonesVariant::ColumnUnital)),
    ];
    for (name, r) in &ops {
        ensure!(ybe_check(r), "YBE fails for {name}");
    }
    for (name, q) in quandle_operators() {
        let r = SetTheoreticYB::from_quandle(&q).map_err(err)?.to_operator();
        ensure!(ybe_check(&r), "YBE fails for {name}");
    }
    let q3 = dihedral_quandle(3);
    let d3 = SetTheoreticYB::from_quandle(&q3).map_err(err)?.to_operator();
    for (name, d) in corpus::all() {
        let n = quandle_coloring_count(&d, &q3, false).map_err(err)? as i64;
        ensure!(state_sum(&d, &d3).map_err(err)? == LaurentPoly::constant(d3.variable(), n), "dihedral-3 state sum on {name}");
    }
    ops.push(("dihedral3".into(), d3));
    for (name, r) in &ops {
        ensure!(inverse_check(r), "R R̄ ≠ Id for {name}");
        let id = PolyMatrix::identity(r.dim() * r.dim());
        ensure!(r.matrix().mul(r.inverse().unwrap()).map_err(err)? == id, "R R̄ ≠ Id for {name}");
        for p in r2_pairs().into_iter().chain(r3_pairs()) {
            ensure!(state_sum(&p.left, r).map_err(err)? == state_sum(&p.right, r).map_err(err)?, "{name} on {}", p.name);
        }
    }
    let r = jones_r_matrix(JonesVariant::ColumnUnital);
    ensure!(r.is_column_unital(), "column-unital matrix is not column unital");
    for n in 1..=3 {
        let prod = yb_boundary(&r, n).map_err(err)?.mul(&yb_boundary(&r, n + 1).map_err(err)?).map_err(err)?;
        ensure!(prod.is_zero(), "∂∂ ≠ 0 at degree {n}");
    }
    Ok(())
}

fn distributive() -> Check {
    for k in 1..=3 {
        let t = trivial_quandle(k);
        for n in 0..=3 {
            ensure!(rack_boundary(&t, n, false).map_err(err)?.is_zero(), "T_{k} boundary at {n}");
            let h = rack_homology(&t, n, false).map_err(err)?;
            ensure!(h == AbelianGroup::free(k.pow(n as u32 + 1)), "T_{k} degree {n}: {h:?}");
        }
    }
    let x = dihedral_quandle(3);
    for (n, r, t) in common::distributive_golden("dihedral3_one_term") {
        let g = common::group_parts(&one_term_homology(&x, n).map_err(err)?);
        ensure!(g == (r, t.clone()), "one-term degree {n}: {g:?}");
    }
    for (n, r, t) in common::distributive_golden("dihedral3_rack") {
        let g = common::group_parts(&rack_homology(&x, n, false).map_err(err)?);
        ensure!(g == (r, t.clone()), "rack degree {n}: {g:?}");
    }
    let mut families = vec![
        ("deletion", FaceMapFamily::from_tuple_fn(3, 3, |i, t| [&t[..i], &t[i + 1..]].concat())),
    ];
    for (name, q) in [("dihedral3", dihedral_quandle(3)), ("dihedral4", dihedral_quandle(4)), ("tetrahedral", common::tetrahedral())] {
        families.push((name, FaceMapFamily::one_term(&q, 3)));
    }
    for (name, f) in &families {
        ensure!(presimplicial_check(f, 3), "presimplicial identity fails for {name}");
    }
    Ok(())
}

fn cocycles() -> Check {
    for (qname, q) in [("dihedral3", dihedral_quandle(3)), ("dihedral5", dihedral_quandle(5)), ("tetrahedral", common::tetrahedral())] {
        let r = SetTheoreticYB::from_quandle(&q).map_err(err)?.to_operator();
        for (name, d) in corpus::all() {
            for c in quandle_colorings(&d, &q, false).map_err(err)? {
                ensure!(two_chain(&d, &q, &c).map_err(err)?.boundary(&q).is_empty(), "∂Ψ ≠ 0: {qname} on {name}");
                ensure!(yb_cycle_check(&d, &c.semi_arc_colors(&d), &r).map_err(err)?.is_cycle, "YB ∂Ψ ≠ 0: {qname} on {name}");
            }
        }
    }
    let mut checked = 0;
    for (qname, q, m) in [("dihedral3", dihedral_quandle(3), 3), ("tetrahedral", common::tetrahedral(), 2)] {
        for alpha in common::all_cocycles(&q, m) {
            for p in equivalent_pairs() {
                let l = cocycle_state_sum(&p.left, &q, &alpha).map_err(err)?;
                let r = cocycle_state_sum(&p.right, &q, &alpha).map_err(err)?;
                ensure!(l == r, "{qname} cocycle {:?} on {}", alpha.alpha, p.name);
            }
            checked += 1;
        }
    }
    ensure!(checked > 0, "no cocycles found");
    Ok(())
}

const LERNA_JONES: [i64; 17] = [1, 6, 18, 38, 65, 94, 120, 138, 142, 131, 110, 81, 54, 31, 15, 5, 1];

fn lerna(path: &str) -> Check {
    let text = std::fs::read_to_string(path).map_err(err)?;
    let d = parse_diagram(&text).map_err(err)?;
    let g = fox_coloring_group(&d);
    ensure!(g == AbelianGroup::from_u64(1, &[2, 3, 5, 5, 7]), "coloring group {g:?}");
    let j = jones_classical(&d).map_err(err)?;
    let abs: Vec<i64> = j.terms().map(|(_, c)| i64::try_from(c).unwrap_or(i64::MAX).abs()).collect();
    let mut rev = LERNA_JONES.to_vec();
    rev.reverse();
    ensure!(abs == LERNA_JONES || abs == rev, "Jones coefficients {abs:?}");
    let report = coefficient_analysis(&j);
    ensure!(report.alternating_signs && report.unimodal && report.log_concave, "{report:?}");
    let lee = lee_support_check(&khovanov_homology(&d).map_err(err)?, &d, true).map_err(err)?;
    ensure!(lee.holds && lee.only_z2_torsion, "{lee:?}");
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 7] = [
        ("Fox colorings", 1, fox),
        ("Kauffman bracket", 5, bracket),
        ("Khovanov homology", 30, khovanov),
        ("adequacy and torsion theorems", 60, structural),
        ("Yang-Baxter operators", 30, yang_baxter),
        ("distributive homology", 30, distributive),
        ("cocycle invariants", 30, cocycles),
    ];
    let mut failed = Vec::new();
    for (k, (name, budget, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = f();
        let took = start.elapsed();
        let over = took > Duration::from_secs(*budget);
        let status = if result.is_ok() && !over { "PASS" } else { "FAIL" };
        println!("criterion {}: {status} {name} ({:.2}s of {budget}s)", k + 1, took.as_secs_f64());
        if let Err(e) = &result {
            println!("    {e}");
        } else if over {
            println!("    over time budget");
        }
        if status == "FAIL" {
            failed.push(k + 1);
        }
    }
    match std::env::var("KNOTFORGE_LERNA_PD") {
        Ok(path) => match lerna(&path) {
            Ok(()) => println!("criterion 8: PASS Lerna stretch targets"),
            Err(e) => println!("criterion 8: FAIL Lerna stretch targets\n    {e}"),
        },
        Err(_) => println!("criterion 8: SKIP Lerna stretch targets (set KNOTFORGE_LERNA_PD)"),
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
