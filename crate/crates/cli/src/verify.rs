//! The verification suite. Each manifest entry is one acceptance check;
//! `fast` entries form the quick suite.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use thom_algebra::parse::{parse_poly, parse_ratfn};
use thom_algebra::{q, MPoly, VarId};
use thom_engine::{
    d_stable, extrapolate_table, iab_from_iiiab, localize_tp, porteous_root, shipped_table, supersymmetry_check,
    to_quotient, tp_quotient, working_dims, ThomPolynomial,
};
use thom_euler::{
    complete_by_reciprocity, load_table, max_square_is_symmetric, reciprocity_sum, reciprocity_sum_at, sample_points,
    AlgebraId, EntryValue, EulerTable,
};
use thom_ideals::{computed_representatives, enumerate_ideals, locate, parse_ideal, MonomialIdeal, Representative};
use thom_phi::{phi_tp_localized, phi_tp_schur, segre_coeff, segre_series_check, veronese_check};
use thom_residue::{asym_consistency, kq_catalog, residue_tp, residue_vs_localization};
use thom_schur::{Partition, SchurExpansion};

use crate::args::Suite;
use crate::doc::ReportDoc;

type Outcome = Result<String, String>;

pub struct Check {
    pub id: u32,
    pub name: &'static str,
    pub fast: bool,
    pub run: fn() -> Outcome,
}

pub fn manifest() -> Vec<Check> {
    vec![
        Check { id: 1, name: "A_2 series via localization, l <= 4", fast: true, run: a2_series },
        Check { id: 2, name: "tp of A_3 at l = 0", fast: true, run: a3_at_zero },
        Check { id: 3, name: "Porteous classes, n <= 3, l <= 3", fast: true, run: porteous_classes },
        Check { id: 4, name: "reciprocity completion and zero sums", fast: false, run: reciprocity },
        Check { id: 5, name: "extrapolation of A_3 Euler classes", fast: true, run: extrapolation },
        Check { id: 6, name: "residue equals localization, l <= 2", fast: false, run: residue_localization },
        Check { id: 7, name: "asymmetrization identity", fast: false, run: asymmetrization },
        Check { id: 8, name: "Phi localization equals closed formula", fast: false, run: phi_pipelines },
        Check { id: 9, name: "d-stability, l <= 2", fast: true, run: d_stability },
        Check { id: 10, name: "supersymmetry and (n,p) stability", fast: false, run: supersymmetry },
        Check { id: 11, name: "nonnegative integer Schur coefficients", fast: false, run: positivity },
        Check { id: 12, name: "small-p lowerings", fast: true, run: lowerings },
        Check { id: 13, name: "Segre coefficients", fast: true, run: segre },
        Check { id: 14, name: "fixed-point census", fast: false, run: census },
    ]
}

/// Runs the selected checks in parallel; the report keeps manifest order.
pub fn run_suite(suite: Suite) -> Vec<ReportDoc> {
    let checks: Vec<Check> = manifest().into_iter().filter(|c| suite == Suite::All || c.fast).collect();
    checks
        .par_iter()
        .map(|c| {
            let (status, detail) = match (c.run)() {
                Ok(d) => ("pass", d),
                Err(d) => ("fail", d),
            };
            ReportDoc { check: format!("{:02} {}", c.id, c.name), status: status.into(), detail }
        })
        .collect()
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn expansion(tp: &ThomPolynomial) -> Result<SchurExpansion, String> {
    tp.expansion().cloned().map_err(err)
}

fn a2_series_poly(l: usize) -> MPoly {
    let c = |k: usize| if k == 0 { MPoly::one() } else { MPoly::var(VarId::c(k)) };
    let mut h = &c(l + 1) * &c(l + 1);
    for i in 1..=l + 1 {
        h += &(&c(l + 1 - i) * &c(l + 1 + i)).scale(&q(1 << (i - 1)));
    }
    h
}

fn a2_series() -> Outcome {
    let t0 = Instant::now();
    for l in 0..=4 {
        let tp = tp_quotient(&AlgebraId::a(2), l, shipped_table()).map_err(err)?;
        let got = tp.quotient().map_err(err)?.c_poly();
        ensure(got == a2_series_poly(l), || format!("l = {l}: {got}"))?;
    }
    let dt = t0.elapsed();
    ensure(dt.as_secs_f64() < 5.0, || format!("took {dt:?}"))?;
    Ok(format!("l = 0..4 in {:.2}s", dt.as_secs_f64()))
}

fn a3_at_zero() -> Outcome {
    let tp = tp_quotient(&AlgebraId::a(3), 0, shipped_table()).map_err(err)?;
    let got = tp.quotient().map_err(err)?.c_poly();
    let want = parse_poly("c1^3 + 3*c1*c2 + 2*c3").map_err(err)?;
    ensure(got == want, || got.to_string())?;
    Ok(got.to_string())
}

fn porteous_classes() -> Outcome {
    for n in 1..=3usize {
        for l in 0..=3usize {
            let got = expansion(&to_quotient(&porteous_root(n, n + l)).map_err(err)?)?;
            let want = SchurExpansion::single(Partition::rect((n + l) as u32, n), q(1));
            ensure(got == want, || format!("n = {n}, l = {l}: {got}"))?;
        }
    }
    Ok("16 classes".into())
}

fn reciprocity() -> Outcome {
    let src = include_str!("../../euler/data/euler_classes.tbl");
    let rows: String = src.lines().filter(|l| l.starts_with("A_2 ") && !l.contains("xy")).map(|l| format!("{l}\n")).collect();
    let partial = load_table(&rows).map_err(err)?;
    let got = complete_by_reciprocity(&partial, &AlgebraId::a(2)).map_err(err)?;
    let want = parse_ratfn("(1/3)*(a1-2*a2)*(a2-2*a1)").map_err(err)?;
    ensure(got == want, || format!("e(A_2, M_2^2) = {got}"))?;
    let t = EulerTable::shipped();
    let mut count = 0;
    for alg in t.algebras().filter(|a| a.mu() >= 3) {
        if alg.mu() == 3 {
            ensure(reciprocity_sum(t, alg).map_err(err)?.is_zero(), || format!("{alg}: nonzero sum"))?;
        }
        ensure(max_square_is_symmetric(t, alg, 3).map_err(err)?, || format!("{alg}: M^2 entry not symmetric"))?;
        let mut seen = 0;
        for pt in sample_points(alg.mu(), 8, 11) {
            if let Some(v) = reciprocity_sum_at(t, alg, &pt).map_err(err)? {
                ensure(v == q(0), || format!("{alg}: sum {v} at {pt:?}"))?;
                seen += 1;
            }
        }
        ensure(seen > 0, || format!("{alg}: every sample point was a pole"))?;
        count += 1;
    }
    Ok(format!("A_2 completed, {count} algebras with mu = 3, 4"))
}

fn extrapolation() -> Outcome {
    let a3 = AlgebraId::a(3);
    let tp1 = tp_quotient(&a3, 1, shipped_table()).map_err(err)?;
    let t = extrapolate_table(&a3, &tp1).map_err(err)?;
    for (ideal, value) in [
        ("(x^2,xy,y^3)", "(1/2)*(3*a2-a1)*(a1-a2)^2"),
        ("(x^2,y^2)", "(a1-a2)^2*(2*a1-a2)*(a1-2*a2)/(a1+a2)"),
    ] {
        let got = t.lookup(&a3, &parse_ideal(ideal).map_err(err)?).map_err(err)?;
        let want = EntryValue::Exact(parse_ratfn(value).map_err(err)?);
        ensure(got == want, || format!("{ideal}: {got:?}"))?;
    }
    Ok("both entries reproduced".into())
}

fn residue_localization() -> Outcome {
    let t0 = Instant::now();
    let table = shipped_table();
    let results: Vec<Result<(), String>> = AlgebraId::catalog()
        .par_iter()
        .map(|alg| {
            let r = residue_vs_localization(alg, 2, table.clone()).map_err(err)?;
            ensure(r.passed, || r.details.join("; "))
        })
        .collect();
    results.into_iter().collect::<Result<Vec<()>, String>>()?;
    Ok(format!("9 algebras in {:.1}s", t0.elapsed().as_secs_f64()))
}

fn asymmetrization() -> Outcome {
    let table = EulerTable::shipped();
    let mut signs = Vec::new();
    for alg in AlgebraId::catalog() {
        let r = asym_consistency(&alg, table).map_err(err)?;
        ensure(r.holds, || format!("{alg}: {r:?}"))?;
        signs.push(format!("{alg} {:+}", r.sign.unwrap_or(0)));
    }
    Ok(signs.join(", "))
}

const PHI_CASES: [(usize, usize); 6] = [(1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2)];

fn phi_pipelines() -> Outcome {
    let t0 = Instant::now();
    for (n, r) in PHI_CASES {
        for l in 0..=2 {
            let loc = expansion(&to_quotient(&phi_tp_localized(n, r, n + l).map_err(err)?).map_err(err)?)?;
            let closed = expansion(&phi_tp_schur(n as u32, (n - r) as u32, l as u32).map_err(err)?)?;
            ensure(loc == closed, || format!("Phi_{{{n},{r}}} l = {l}: {loc} vs {closed}"))?;
        }
    }
    Ok(format!("18 classes in {:.1}s", t0.elapsed().as_secs_f64()))
}

fn d_stability() -> Outcome {
    let table = shipped_table();
    for alg in AlgebraId::catalog() {
        let mut prev = tp_quotient(&alg, 0, table.clone()).map_err(err)?;
        for l in 1..=3 {
            let next = tp_quotient(&alg, l, table.clone()).map_err(err)?;
            ensure(d_stable(&alg, &prev, &next).map_err(err)?, || format!("{alg} l = {}", l - 1))?;
            prev = next;
        }
    }
    Ok("9 algebras".into())
}

fn supersymmetry() -> Outcome {
    let table = shipped_table();
    let mut count = 0;
    for alg in AlgebraId::catalog() {
        for l in 0..=1 {
            let (n, p) = working_dims(&alg, l).map_err(err)?;
            let root = localize_tp(&alg, n, p, table.clone()).map_err(err)?;
            ensure(supersymmetry_check(root.root().map_err(err)?), || format!("{alg} at ({n},{p})"))?;
            let up = localize_tp(&alg, n + 1, p + 1, table.clone()).map_err(err)?;
            ensure(supersymmetry_check(up.root().map_err(err)?), || format!("{alg} at ({},{})", n + 1, p + 1))?;
            let a = expansion(&to_quotient(&root).map_err(err)?)?;
            let b = expansion(&to_quotient(&up).map_err(err)?)?;
            ensure(a == b, || format!("{alg}: ({n},{p}) gives {a}, ({},{}) gives {b}", n + 1, p + 1))?;
            count += 2;
        }
    }
    for n in 1..=3 {
        for l in 0..=2 {
            // the rank-0 locus is not (n,p)-stable, only supersymmetric
            let a = porteous_root(n, n + l);
            ensure(supersymmetry_check(a.root().map_err(err)?), || format!("Porteous ({n},{})", n + l))?;
            count += 1;
        }
    }
    for (n, r) in PHI_CASES {
        for l in 0..=2 {
            let tp = phi_tp_localized(n, r, n + l).map_err(err)?;
            ensure(supersymmetry_check(tp.root().map_err(err)?), || format!("Phi_{{{n},{r}}} at ({n},{})", n + l))?;
            count += 1;
        }
    }
    Ok(format!("{count} root-form classes"))
}

fn positivity() -> Outcome {
    let table = shipped_table();
    let mut all: Vec<(String, SchurExpansion)> = Vec::new();
    for alg in AlgebraId::catalog().into_iter().chain([AlgebraId::a(4), AlgebraId::sigma(2), AlgebraId::sigma(3)]) {
        for l in 0..=2 {
            all.push((format!("{alg} l = {l}"), expansion(&tp_quotient(&alg, l, table.clone()).map_err(err)?)?));
        }
    }
    for (n, r) in PHI_CASES {
        for l in 0..=2 {
            all.push((format!("Phi_{{{n},{r}}} l = {l}"), expansion(&phi_tp_schur(n as u32, (n - r) as u32, l as u32).map_err(err)?)?));
        }
    }
    for (alg, k) in kq_catalog() {
        for l in 0..=1 {
            all.push((format!("RES {alg} l = {l}"), expansion(&residue_tp(&k, l).map_err(err)?)?));
        }
    }
    for (what, e) in &all {
        ensure(e.all_nonnegative_integers(), || format!("{what}: {e}"))?;
    }
    Ok(format!("{} classes", all.len()))
}

fn lowerings() -> Outcome {
    let table = shipped_table();
    let iii = tp_quotient(&AlgebraId::iii(2, 3), 1, table.clone()).map_err(err)?;
    let low = expansion(&iab_from_iiiab(&iii, 2, 3).map_err(err)?)?;
    let i23 = expansion(&tp_quotient(&AlgebraId::i2(2, 3), 0, table).map_err(err)?)?;
    ensure(low == i23, || format!("I_{{2,3}}: {low} vs {i23}"))?;
    for n in 2..=3 {
        for l in 0..=2 {
            ensure(veronese_check(n, l).map_err(err)?, || format!("Veronese n = {n}, l = {l}"))?;
        }
    }
    Ok(format!("tp of I_{{2,3}}(0) = {i23}"))
}

fn segre() -> Outcome {
    let b = |v: i64| BigInt::from(v);
    for i in 0..=10i64 {
        ensure(segre_coeff(&[i]) == b(1 << i), || format!("(({i}))"))?;
    }
    for i in 0..=8i64 {
        ensure(segre_coeff(&[i, 0]) == b((1 << i) - 1), || format!("(({i},0))"))?;
    }
    ensure(segre_coeff(&[2, 1]) == b(3), || "((2,1))".into())?;
    ensure(segre_coeff(&[3, 1]) == b(10), || "((3,1))".into())?;
    for n in 1..=3 {
        ensure(segre_series_check(n, 4), || format!("series n = {n}"))?;
    }
    Ok("values and series for n <= 3".into())
}

/// All down-closed sets of `m` nonzero exponent vectors in `n` variables,
/// found by testing every `m`-subset of the candidates.
fn brute_force_ideals(n: usize, m: usize) -> BTreeSet<BTreeSet<Vec<u32>>> {
    let mut cands: Vec<Vec<u32>> = Vec::new();
    let mut v = vec![0u32; n];
    loop {
        let cells: usize = v.iter().map(|&a| a as usize + 1).product();
        if cells > 1 && cells - 1 <= m {
            cands.push(v.clone());
        }
        let mut i = 0;
        while i < n && v[i] as usize == m {
            v[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        v[i] += 1;
    }
    let mut out = BTreeSet::new();
    let mut pick: Vec<usize> = Vec::new();
    fn rec(start: usize, m: usize, cands: &[Vec<u32>], pick: &mut Vec<usize>, out: &mut BTreeSet<BTreeSet<Vec<u32>>>) {
        if pick.len() == m {
            let set: BTreeSet<Vec<u32>> = pick.iter().map(|&i| cands[i].clone()).collect();
            let closed = set.iter().all(|e| {
                (0..e.len()).filter(|&j| e[j] > 0).all(|j| {
                    let mut d = e.clone();
                    d[j] -= 1;
                    d.iter().all(|&x| x == 0) || set.contains(&d)
                })
            });
            if closed {
                out.insert(set);
            }
            return;
        }
        for i in start..cands.len() {
            pick.push(i);
            rec(i + 1, m, cands, pick, out);
            pick.pop();
        }
    }
    rec(0, m, &cands, &mut pick, &mut out);
    out
}

/// The fixed-point lists `I_1, …` as printed for `μ ≤ 4`.
pub const PRINTED_REPRESENTATIVES: [&[&str]; 4] = [
    &["(x^2)"],
    &["(x^3)", "(x^2,xy,y^2)"],
    &["(x^4)", "(x^2,y^2)", "(x^2,xy,y^3)", "(x^2,y^2,z^2,xy,yz,zx)"],
    &["(x^5)", "(x^2,xy,y^4)", "(x^3,xy,y^3)", "(x^2,xy^2,y^3)", "(x^2,y^2,z^3,xy,yz,zx)", "(x^2,y^2,z^2,xy,xz)", "M4"],
];

fn census() -> Outcome {
    let cases: Vec<(usize, usize)> = (1..=4).flat_map(|n| (1..=5).map(move |m| (n, m))).collect();
    let results: Vec<Result<(), String>> = cases
        .par_iter()
        .map(|&(n, m)| {
            let ours: BTreeSet<BTreeSet<Vec<u32>>> =
                enumerate_ideals(n, m).into_iter().map(|i| i.complement().clone()).collect();
            let brute = brute_force_ideals(n, m);
            ensure(ours == brute, || format!("n = {n}, m = {m}: {} vs {}", ours.len(), brute.len()))
        })
        .collect();
    results.into_iter().collect::<Result<Vec<()>, String>>()?;
    for (k, list) in PRINTED_REPRESENTATIVES.iter().enumerate() {
        let mu = k + 1;
        let printed: Vec<Representative> = list
            .iter()
            .map(|s| {
                let ideal = if *s == "M4" { MonomialIdeal::max_square(4) } else { parse_ideal(s).expect("printed ideal") };
                Representative { stabilizer: ideal.stabilizer_order(), ideal }
            })
            .collect();
        let computed = computed_representatives(mu);
        ensure(computed.len() == printed.len(), || format!("mu = {mu}: {} orbits", computed.len()))?;
        let mut hit = BTreeSet::new();
        for r in &computed {
            let (idx, _) = locate(&printed, &r.ideal).ok_or_else(|| format!("mu = {mu}: {} is not listed", r.ideal))?;
            hit.insert(idx);
        }
        ensure(hit.len() == printed.len(), || format!("mu = {mu}: two orbits share a listed ideal"))?;
        let total: u64 = printed.iter().map(|r| r.ideal.embed(mu).orbit().len() as u64).sum();
        ensure(total as usize == enumerate_ideals(mu, mu).len(), || format!("mu = {mu}: orbit sizes"))?;
    }
    Ok("n <= 4, m <= 5; representatives for mu <= 4".into())
}
