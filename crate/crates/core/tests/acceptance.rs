//! Acceptance criteria, one line each. Runs without the libtest harness so
//! every criterion reports even when an earlier one fails.

mod common;

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use multiplate::cartesian::{check_biplate_laws, from_normal_form, to_normal_form, CartesianK};
use multiplate::contracts::{check_applicative_laws, check_comonad_laws, ApplicativeSamples};
use multiplate::finite::{tables, Finite, A2, B3};
use multiplate::fixtures::{biplate_candidates, lens_candidates, pairs, recs, VisitXTwice};
use multiplate::minilang::enumerate::terms_up_to;
use multiplate::minilang::naive::naive_rename;
use multiplate::minilang::passes::{collect_vars_fold, count_nodes_fold, rename_pass};
use multiplate::minilang::{p0, BrokenMiniLang, MiniLang, Term};
use multiplate::samples;
use multiplate::store::{check_coalgebra_laws, check_lens_laws, pat, phone, Address, StoreK};
use multiplate::suites::{self, Suite, SuiteOptions};
use multiplate::vanlaarhoven::{
    check_vl_biplate_laws, check_vl_lens_laws, vl_to_biplate, BiplateFamilies, LensFamilies,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took < budget, || {
        format!("took {took:.2?}, budget {budget:?}")
    })?;
    Ok(took)
}

fn store_coherence() -> Outcome {
    let start = Instant::now();
    let stores = samples::stores();
    let expected = tables::<B3, A2>(&A2::universe()).len() * B3::universe().len();
    ensure(stores.len() == 24 && expected == 24, || {
        format!("{} stores", stores.len())
    })?;
    let v = check_comonad_laws::<StoreK<B3>, A2>(&stores);
    ensure(v.holds(), || v.to_string())?;
    let took = within(start, Duration::from_secs(1))?;
    Ok(format!(
        "3 equations x 24 stores, {} instances, {took:.2?}",
        v.checked
    ))
}

fn lens_equivalence() -> Outcome {
    let cands = lens_candidates();
    let (a, b) = (recs(), B3::universe());
    let mut unlawful = 0;
    for c in &cands {
        let laws = check_lens_laws(&c.lens, &a, &b);
        let coalg = check_coalgebra_laws(&c.lens, &a, &b);
        ensure(laws.holds() == coalg.holds(), || {
            format!("{}: get/set {laws}, coalgebra {coalg}", c.name)
        })?;
        unlawful += usize::from(!laws.holds());
    }
    ensure(cands.len() >= 100 && unlawful >= 3, || {
        format!("{} candidates, {unlawful} unlawful", cands.len())
    })?;
    let got = phone().get(pat());
    ensure(got == "333-4444", || format!("get phone pat = {got:?}"))?;
    let set = phone().set(pat(), "555-6666".into());
    let want = Address {
        phone: "555-6666".into(),
        website: "http://pat.com/".into(),
    };
    ensure(set == want, || format!("set phone pat = {set:?}"))?;
    Ok(format!(
        "{} candidates agree ({unlawful} unlawful), phone fixture exact",
        cands.len()
    ))
}

fn cartesian_laws() -> Outcome {
    let start = Instant::now();
    let all = samples::cartesian_stores_up_to_2();
    let expected = 2 + 3 * 8 + 9 * 512;
    ensure(all.len() == expected, || {
        format!("{} stores, expected {expected}", all.len())
    })?;
    let v = check_comonad_laws::<CartesianK<B3>, A2>(&all);
    ensure(v.holds(), || format!("comonad: {v}"))?;
    let low: Vec<_> = all
        .iter()
        .filter(|s| s.positions().len() <= 1)
        .cloned()
        .collect();
    let (fns, points) = (samples::a2_fns(), A2::universe());
    let (small, wide) = (
        samples::cartesian_fn_stores_small(),
        samples::cartesian_fn_stores(),
    );
    let mut checked = v.checked;
    for (containers, fn_containers) in [(&all, &small), (&low, &wide)] {
        let v = check_applicative_laws(&ApplicativeSamples::<CartesianK<B3>, A2> {
            containers,
            fn_containers,
            fns: &fns,
            points: &points,
        });
        ensure(v.holds(), || format!("applicative: {v}"))?;
        checked += v.checked;
    }
    let mut pairs_checked = 0;
    for f in &wide {
        for x in &all {
            let d = f.ap(x).dimension();
            ensure(d == f.positions().len() + x.positions().len(), || {
                format!(
                    "dimension {d} for f of dimension {} and x = {x:?}",
                    f.dimension()
                )
            })?;
            pairs_checked += 1;
        }
    }
    let took = within(start, Duration::from_secs(10))?;
    Ok(format!(
        "{} stores, {checked} law instances, additivity on {pairs_checked} pairs, {took:.2?}",
        all.len()
    ))
}

fn normal_form() -> Outcome {
    let mut stores = samples::cartesian_stores_up_to_2();
    stores.extend(samples::cartesian_stores_dim3_sampled());
    for (i, s) in stores.iter().enumerate() {
        let n = to_normal_form(s);
        let back = from_normal_form(&n);
        ensure(back == *s, || format!("store #{i}: from (to s) /= s"))?;
        ensure(to_normal_form(&back) == n, || {
            format!("store #{i}: to (from n) /= n")
        })?;
        let slices = s.stores();
        ensure(slices.len() == s.positions().len(), || {
            format!("store #{i}: {} slices", slices.len())
        })?;
        for (k, slice) in slices.iter().enumerate() {
            ensure(slice.extract() == s.extract(), || {
                format!("store #{i}, slice {k}")
            })?;
        }
    }
    Ok(format!(
        "{} stores (dimension 3 sampled at {} tables per position vector)",
        stores.len(),
        samples::dim3_masks().len()
    ))
}

fn vl_lines(prefix: &str) -> Outcome {
    let lines = suites::run(Suite::Vl, &SuiteOptions::default());
    let picked: Vec<_> = lines
        .iter()
        .filter(|l| l.name.starts_with(prefix))
        .collect();
    ensure(picked.len() == 4, || {
        format!("{} isomorphism lines", picked.len())
    })?;
    let mut checked = 0;
    for l in picked {
        ensure(l.passed(), || l.to_string())?;
        checked += l.verdict.checked;
    }
    Ok(format!(
        "round trips and forward agreement, {checked} instances"
    ))
}

fn isomorphisms() -> Outcome {
    vl_lines("iso")
}

fn bridging() -> Outcome {
    let b = B3::universe();
    let (lfam, bfam) = (LensFamilies::standard(&b), BiplateFamilies::standard(&b));
    let mut n = 0;
    for c in lens_candidates() {
        let comonadic = check_coalgebra_laws(&c.lens, &recs(), &b).holds();
        let vl = check_vl_lens_laws(&c.lens, &recs(), &b, &lfam).holds();
        let vl_bi = check_vl_biplate_laws(&c.lens, &recs(), &b, &bfam).holds();
        ensure(comonadic == vl && vl == vl_bi, || {
            format!(
                "{}: comonadic {comonadic}, VL lens {vl}, VL Biplate {vl_bi}",
                c.name
            )
        })?;
        n += 1;
    }
    for c in biplate_candidates() {
        let comonadic = check_biplate_laws(&c.biplate, &pairs(), &b).holds();
        let vl = check_vl_biplate_laws(&c.biplate, &pairs(), &b, &bfam).holds();
        ensure(comonadic == vl, || {
            format!("{}: comonadic {comonadic}, VL {vl}", c.name)
        })?;
        n += 1;
    }
    let comonadic = check_biplate_laws(&vl_to_biplate(&VisitXTwice), &pairs(), &b).holds();
    let vl = check_vl_biplate_laws(&VisitXTwice, &pairs(), &b, &bfam).holds();
    ensure(comonadic == vl && !vl, || {
        format!("visit x twice: comonadic {comonadic}, VL {vl}")
    })?;
    Ok(format!("{} candidates agree", n + 1))
}

fn multiplate_laws() -> Outcome {
    let opts = SuiteOptions::default();
    let universe = terms_up_to(opts.size);
    let shipped = suites::plate_laws::<MiniLang>(&universe);
    ensure(shipped.holds(), || shipped.to_string())?;
    let broken = suites::plate_laws::<BrokenMiniLang>(&universe);
    let witness = broken
        .counterexample
        .as_ref()
        .ok_or_else(|| "broken plate passed".to_string())?;
    println!("     broken plate witness: {witness}");
    Ok(format!(
        "{} terms of size <= {}, {} instances; broken plate rejected",
        universe.len(),
        opts.size,
        shipped.checked
    ))
}

fn headline() -> Outcome {
    let universe = terms_up_to(suites::DEFAULT_SIZE);
    let mut terms: Vec<Term> = vec![Term::Stm(p0())];
    terms.extend(universe.stms.iter().cloned().map(Term::Stm));
    terms.extend(universe.exprs.iter().cloned().map(Term::Expr));
    terms.extend(universe.vars.iter().cloned().map(Term::Var));
    terms.extend(universe.typs.iter().cloned().map(Term::Typ));
    for t in &terms {
        ensure(rename_pass(t.clone()) == naive_rename(t.clone()), || {
            format!("rename at {t}")
        })?;
        ensure(count_nodes_fold(t) == common::count_nodes(t), || {
            format!("count at {t}")
        })?;
        ensure(collect_vars_fold(t) == common::collect_vars(t), || {
            format!("vars at {t}")
        })?;
    }
    let p = Term::Stm(p0());
    let (nodes, vars) = (count_nodes_fold(&p), collect_vars_fold(&p));
    ensure(nodes == 13 && common::count_nodes(&p) == 13, || {
        format!("P0 has {nodes} nodes")
    })?;
    ensure(vars == ["x"; 4] && common::collect_vars(&p) == vars, || {
        format!("P0 vars {vars:?}")
    })?;
    Ok(format!("{} terms, P0: 13 nodes, 4 vars", terms.len()))
}

fn cli_end_to_end() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_multiplate");
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data");
    let p0 = data.join("p0.sexp");
    let p0 = p0.to_str().unwrap();
    let start = Instant::now();
    let laws = Command::new(bin)
        .args(["laws", "--suite", "all"])
        .output()
        .map_err(|e| e.to_string())?;
    let took = within(start, Duration::from_secs(60))?;
    ensure(laws.status.code() == Some(0), || {
        String::from_utf8_lossy(&laws.stdout).into_owned()
    })?;
    let run = Command::new(bin)
        .args(["run", "--pass", "rename", p0])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(
        run.status.code() == Some(0) && run.stdout == common::P0_RENAMED.as_bytes(),
        || format!("rename output {:?}", String::from_utf8_lossy(&run.stdout)),
    )?;
    let bad =
        std::env::temp_dir().join(format!("multiplate-acceptance-{}.sexp", std::process::id()));
    std::fs::write(&bad, "(SBlock (V \"x\")").map_err(|e| e.to_string())?;
    let bad = bad.to_str().unwrap();
    let cases: [(&[&str], i32); 6] = [
        (&["run", "--pass", "rename", bad], 1),
        (&["stats", "--fold", "count", "/nonexistent.sexp"], 1),
        (&["laws", "--suite", "lens", "--broken"], 1),
        (&["run", "--pass", "inline", p0], 2),
        (&["laws", "--suite", "nope"], 2),
        (&["laws", "--size", "0"], 2),
    ];
    for (args, code) in cases {
        let o = Command::new(bin)
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(o.status.code() == Some(code), || {
            format!("{args:?} exited {:?}", o.status.code())
        })?;
        if code == 2 {
            ensure(o.stdout.is_empty(), || format!("{args:?} wrote to stdout"))?;
        }
    }
    Ok(format!(
        "laws --suite all in {took:.2?}, golden rename exact, error codes exact"
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("store comonad coherence", store_coherence),
        ("lens law equivalence", lens_equivalence),
        (
            "Cartesian store comonad and applicative laws",
            cartesian_laws,
        ),
        ("normal form round trip", normal_form),
        ("isomorphism oracles", isomorphisms),
        ("law-set bridging", bridging),
        ("plate laws", multiplate_laws),
        ("generic rename and folds against oracles", headline),
        ("CLI end to end", cli_end_to_end),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {} PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
