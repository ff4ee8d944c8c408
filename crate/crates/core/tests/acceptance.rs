//! Acceptance suite: one PASS/FAIL line per criterion.

use std::sync::{Arc, OnceLock};
use std::time::{Duration, Instant};

use defect_core::corpus::{artinian_over_bases, corpus, CorpusEntry};
use defect_core::groebner::Ideal;
use defect_core::invariants::{is_nonzerodivisor, report, socle_dimension, ExtNat, InvariantConfig, InvariantReport};
use defect_core::oracle::{build_model, oracle_flatness, oracle_report};
use defect_core::poly::{Field, DEFAULT_PRIME};
use defect_core::presentation::{
    tor1_over_base, AlgebraPresentation, BaseDescriptor, FlatnessCertificate, LocalAlgebra, Mode,
};
use defect_core::random::{add_redundant, permute_relations, random_artinian, random_graded, random_principal_pair, rename_all};
use defect_core::theorems::{
    check_nontrivial, run_checks, run_suite, CheckValue, FlatSide, TensorSetup, TheoremCheckResult, TheoremFilter,
};
use rand::SeedableRng;
use rayon::prelude::*;
use rand_chacha::ChaCha8Rng;

const GOLDEN: &str = include_str!("golden/named_instances.json");
const FIELDS: [Field; 2] = [Field::Rational, Field::Prime(DEFAULT_PRIME)];

type Criterion = Result<String, String>;
type CriterionFn = fn() -> Criterion;

struct Corpus {
    entries: Vec<CorpusEntry>,
    setups: Vec<TensorSetup>,
    results: Vec<(String, Vec<TheoremCheckResult>)>,
    elapsed: Duration,
}

fn cfg() -> InvariantConfig {
    InvariantConfig::default()
}

fn corpus_run() -> &'static Result<Corpus, String> {
    static RUN: OnceLock<Result<Corpus, String>> = OnceLock::new();
    RUN.get_or_init(|| {
        let start = Instant::now();
        let entries = corpus();
        let setups = entries
            .iter()
            .map(|e| TensorSetup::new(&e.name, &e.a, &e.b, &cfg()).map_err(|err| format!("{}: {err}", e.name)))
            .collect::<Result<Vec<_>, _>>()?;
        let results = run_suite(&setups, TheoremFilter::All)
            .into_iter()
            .map(|(name, r)| r.map(|r| (name.clone(), r)).map_err(|err| format!("{name}: {err}")))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Corpus { entries, setups, results, elapsed: start.elapsed() })
    })
}

fn corpus_ok() -> Result<&'static Corpus, String> {
    corpus_run().as_ref().map_err(Clone::clone)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn graded(base: &BaseDescriptor, name: &str, vars: &[&str], rels: &[&str]) -> AlgebraPresentation {
    AlgebraPresentation::new(name, base.clone(), vars, rels, Mode::Graded).expect("presentation")
}

/// Every applicable check passes on the whole corpus within the time budget.
fn criterion_1() -> Criterion {
    let c = corpus_ok()?;
    ensure(c.setups.len() >= 30, || format!("only {} setups", c.setups.len()))?;
    let mut checks = 0;
    let mut failures = Vec::new();
    for (name, results) in &c.results {
        for r in results {
            checks += 1 + r.subchecks.len();
            if !r.all_pass() {
                failures.push(format!("{name}: {r}"));
            }
        }
    }
    let mut kinds: Vec<&str> = c.results.iter().flat_map(|(_, r)| r.iter().map(|r| r.theorem.as_str())).collect();
    kinds.sort();
    kinds.dedup();
    for want in ["dim", "depth", "codepth", "idd", "type", "cid", "codim", "equiv.cm", "equiv.regular", "flat.type"] {
        ensure(kinds.contains(&want), || format!("no `{want}` check ran"))?;
    }
    ensure(failures.is_empty(), || failures.join("\n"))?;
    ensure(c.elapsed < Duration::from_secs(60), || format!("corpus took {:?}", c.elapsed))?;
    Ok(format!("{} setups, {checks} comparisons, {:.2?}", c.setups.len(), c.elapsed))
}

fn golden_setup(name: &str, f: Field) -> Result<(TensorSetup, TheoremFilter), String> {
    let k = BaseDescriptor::PrimeField(f);
    let (a, b, filter) = match name {
        "type_of_square_tensor_square" | "cid_of_square_tensor_square" => {
            let filter = if name.starts_with("type") { TheoremFilter::Type } else { TheoremFilter::Cid };
            (
                graded(&k, "A", &["x", "y"], &["x^2", "x*y", "y^2"]),
                graded(&k, "B", &["u", "v"], &["u^2", "u*v", "v^2"]),
                filter,
            )
        }
        "codepth_over_s2_st" => {
            let r = BaseDescriptor::Algebra(Arc::new(graded(&k, "R", &["s", "t"], &["s^2", "s*t"])));
            (graded(&r, "A", &["x"], &[]), graded(&r, "B", &[], &[]), TheoremFilter::Codepth)
        }
        other => return Err(format!("unknown golden instance `{other}`")),
    };
    Ok((TensorSetup::new(name, &a, &b, &cfg()).map_err(|e| e.to_string())?, filter))
}

fn as_int(v: CheckValue) -> Option<i64> {
    match v {
        CheckValue::Int(n) => Some(n),
        _ => None,
    }
}

/// Depth as the length of a regular sequence of variables (or their sum)
/// that ends at a quotient with nonzero socle.
fn depth_by_regular_sequence(j: &Ideal) -> Result<usize, String> {
    let ring = j.ring().clone();
    let sum = (0..ring.nvars()).fold(ring.zero(), |acc, i| &acc + &ring.var(i));
    let mut j = j.clone();
    for length in 0..=ring.nvars() {
        if socle_dimension(&j).map_err(|e| e.to_string())? > 0 {
            return Ok(length);
        }
        let candidates = (0..ring.nvars()).map(|i| ring.var(i)).chain(std::iter::once(sum.clone()));
        let mut next = None;
        for theta in candidates {
            if is_nonzerodivisor(&j, &theta).map_err(|e| e.to_string())? {
                next = Some(theta);
                break;
            }
        }
        j = j.with_generator(next.ok_or("no linear nonzerodivisor among the candidates")?);
    }
    Err("regular sequence longer than the number of variables".into())
}

/// Named instances match the golden values, with an oracle cross-check
/// where the product is Artinian, and the idd rule across the corpus.
fn criterion_2() -> Criterion {
    let golden: serde_json::Value = serde_json::from_str(GOLDEN).map_err(|e| e.to_string())?;
    let instances = golden.as_array().ok_or("golden file is not an array")?;
    for f in FIELDS {
        for g in instances {
            let name = g["name"].as_str().ok_or("missing name")?;
            let theorem = g["theorem"].as_str().ok_or("missing theorem")?;
            let (s, filter) = golden_setup(name, f)?;
            let results = run_checks(&s, filter).map_err(|e| e.to_string())?;
            let r = results.iter().find(|r| r.theorem == theorem).ok_or_else(|| format!("{name}: no {theorem} result"))?;
            ensure(r.all_pass(), || format!("{name}: {r}"))?;
            let lhs = as_int(r.lhs);
            let rhs = as_int(r.rhs);
            ensure(lhs == g["lhs"].as_i64() && rhs == g["rhs"].as_i64(), || format!("{name} over {f}: {r}"))?;
            if s.product_report().dim > 0 {
                let depth = depth_by_regular_sequence(s.product.relations())?;
                let codepth = s.product_report().dim as i64 - depth as i64;
                ensure(theorem != "codepth" || Some(codepth) == lhs, || format!("{name}: regular sequence codepth {codepth}"))?;
            } else {
                let m = build_model(&s.product).map_err(|e| e.to_string())?;
                let o = oracle_report(&m).map_err(|e| e.to_string())?;
                let v = match theorem {
                    "type" => o.type_ as i64,
                    "cid" => o.cid as i64,
                    _ => o.codepth as i64,
                };
                ensure(Some(v) == lhs, || format!("{name}: oracle {theorem} {v}"))?;
            }
        }
    }
    let c = corpus_ok()?;
    let (mut infinite, mut finite) = (0, 0);
    for s in &c.setups {
        let t = s.product_report();
        let gor = s.a_report().flags.gorenstein && s.b_report().flags.gorenstein && s.r_report().flags.gorenstein;
        if gor {
            finite += 1;
            ensure(t.idd == ExtNat::Finite(t.depth as u64), || format!("{}: idd {} depth {}", s.name, t.idd, t.depth))?;
        } else if s.base.is_field() && !(s.a_report().flags.gorenstein && s.b_report().flags.gorenstein) {
            infinite += 1;
            ensure(t.idd == ExtNat::Infinite, || format!("{}: idd {}", s.name, t.idd))?;
        }
    }
    ensure(infinite > 0 && finite > 0, || "idd rule not exercised".into())?;
    Ok(format!("{} golden instances over 2 fields, idd rule on {} setups", instances.len(), infinite + finite))
}

fn without_certificate(mut r: InvariantReport) -> InvariantReport {
    r.flat_certificate = None;
    r
}

fn oracle_agrees(a: &LocalAlgebra, label: &str) -> Result<(), String> {
    let pipeline = report(a, &cfg()).map_err(|e| format!("{label}: {e}"))?;
    let m = build_model(a).map_err(|e| format!("{label}: {e}"))?;
    let o = oracle_report(&m).map_err(|e| format!("{label}: {e}"))?;
    ensure(without_certificate(pipeline.clone()) == o, || format!("{label}: pipeline {pipeline:?} oracle {o:?}"))?;
    ensure(m.koszul_h1_dim() == pipeline.mu, || format!("{label}: koszul {} mu {}", m.koszul_h1_dim(), pipeline.mu))
}

/// The pipeline report agrees with the dense-matrix oracle on random and
/// corpus Artinian algebras.
fn criterion_3() -> Criterion {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut count = 0;
    for i in 0..120 {
        let f = FIELDS[i % 2];
        let p = random_artinian(&mut rng, f, "A");
        let local = p.validate().map_err(|e| format!("{p}: {e}"))?;
        oracle_agrees(&local, &p.to_string())?;
        count += 1;
    }
    let c = corpus_ok()?;
    for s in &c.setups {
        for (label, local, rep) in [("A", &s.a, s.a_report()), ("B", &s.b, s.b_report()), ("A⊗B", &s.product, s.product_report())] {
            if rep.dim == 0 {
                oracle_agrees(local, &format!("{} {label}", s.name))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} Artinian algebras"))
}

/// Report identities hold on every computed report and on random graded
/// algebras.
fn criterion_4() -> Criterion {
    let c = corpus_ok()?;
    let mut count = 0;
    for s in &c.setups {
        let mut reports = vec![s.r_report(), s.a_report(), s.b_report(), s.product_report()];
        reports.extend(s.fibers.iter().flatten().map(|f| f.report()));
        for r in reports {
            r.check_identities().map_err(|e| format!("{}: {e}", s.name))?;
            count += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for i in 0..50 {
        let p = random_graded(&mut rng, FIELDS[i % 2], "A");
        let local = p.validate().map_err(|e| format!("{p}: {e}"))?;
        let r = report(&local, &cfg()).map_err(|e| format!("{p}: {e}"))?;
        r.check_identities().map_err(|e| format!("{p}: {e}"))?;
        count += 1;
    }
    Ok(format!("{count} reports"))
}

fn sorted_outcomes(s: &TensorSetup) -> Result<Vec<String>, String> {
    let mut out: Vec<String> = run_checks(s, TheoremFilter::All)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|r| format!("{:?}", r.outcome()))
        .collect();
    out.sort();
    Ok(out)
}

/// Renaming, permuting relations, adding redundant relations and swapping
/// the factors leave every outcome unchanged.
fn criterion_5() -> Criterion {
    let c = corpus_ok()?;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut jobs = Vec::new();
    for (i, e) in c.entries.iter().enumerate() {
        let err = |x: defect_core::presentation::PresentationError| format!("{}: {x}", e.name);
        jobs.push((i, "rename", rename_all(&e.a, "1").map_err(err)?, rename_all(&e.b, "2").map_err(err)?));
        jobs.push((i, "permute", permute_relations(&mut rng, &e.a).map_err(err)?, permute_relations(&mut rng, &e.b).map_err(err)?));
        jobs.push((i, "redundant", add_redundant(&mut rng, &e.a).map_err(err)?, add_redundant(&mut rng, &e.b).map_err(err)?));
        jobs.push((i, "swap", e.b.clone().with_name("A"), e.a.clone().with_name("B")));
    }
    jobs.par_iter().try_for_each(|(i, kind, a, b)| {
        let name = &c.entries[*i].name;
        let reference = sorted_outcomes(&c.setups[*i])?;
        let v = TensorSetup::new(name, a, b, &cfg()).map_err(|x| format!("{name} {kind}: {x}"))?;
        let got = sorted_outcomes(&v)?;
        ensure(got == reference, || format!("{name} {kind}: {got:?} vs {reference:?}"))
    })?;
    ensure(jobs.len() >= 200, || format!("only {} pairs", jobs.len()))?;
    Ok(format!("{} metamorphic pairs", jobs.len()))
}

/// Flat sides over non-field bases carry a computed certificate, and the
/// Tor₁ test agrees with the dimension count over Artinian bases.
fn criterion_6() -> Criterion {
    let c = corpus_ok()?;
    let mut certified = 0;
    for s in c.setups.iter().filter(|s| !s.base.is_field()) {
        let flat = match s.flat_side {
            FlatSide::A | FlatSide::Both => s.certificates[0],
            FlatSide::B => s.certificates[1],
        };
        ensure(matches!(flat, Some(c) if c != FlatnessCertificate::UserAsserted), || {
            format!("{}: certificate {flat:?}", s.name)
        })?;
        certified += 1;
    }
    let mut algebras: Vec<AlgebraPresentation> = FIELDS.iter().flat_map(|f| artinian_over_bases(*f)).collect();
    algebras.extend(
        c.setups
            .iter()
            .filter(|s| !s.base.is_field() && s.r_report().dim == 0)
            .flat_map(|s| [&s.a, &s.b])
            .filter(|l| report(l, &cfg()).map(|r| r.dim == 0).unwrap_or(false))
            .map(|l| l.presentation().clone()),
    );
    let (mut flat, mut nonflat) = (0, 0);
    for p in &algebras {
        let tor = tor1_over_base(p).map_err(|e| format!("{p}: {e}"))?.vanishes;
        let count = oracle_flatness(p).map_err(|e| format!("{p}: {e}"))?;
        ensure(tor == count, || format!("{p}: tor1 vanishes {tor}, dimension count {count}"))?;
        if tor {
            flat += 1;
        } else {
            nonflat += 1;
        }
    }
    ensure(flat > 0 && nonflat > 0, || format!("flat {flat}, non-flat {nonflat}"))?;
    Ok(format!("{certified} certified setups, {} flatness comparisons ({flat} flat, {nonflat} not)", algebras.len()))
}

/// Nontriviality of the tensor product matches equality of the contracted
/// primes.
fn criterion_7() -> Criterion {
    let t = Arc::new(AlgebraPresentation::over_field("T", Field::Rational, &["t"], &[] as &[&str], Mode::Affine).expect("base"));
    let aff = |name: &str, rel: &str| {
        AlgebraPresentation::new(name, BaseDescriptor::Algebra(Arc::clone(&t)), &[] as &[&str], &[rel], Mode::Affine)
            .expect("affine")
    };
    let k = BaseDescriptor::PrimeField(Field::Rational);
    let mut pairs = vec![
        (aff("A", "t"), aff("B", "t - 1"), false),
        (aff("A", "t"), aff("B", "t"), true),
        (graded(&k, "A", &["x"], &["x^2"]), graded(&k, "B", &["y"], &[]), true),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10 {
        let (a, b) = random_principal_pair(&mut rng);
        let same = a.relations().gens()[0].to_string() == b.relations().gens()[0].to_string();
        pairs.push((a, b, same));
    }
    for (a, b, expected) in &pairs {
        let r = check_nontrivial(a, b, None, None, 0).map_err(|e| e.to_string())?;
        ensure(r.all_pass() && r.lhs == CheckValue::Bool(*expected), || format!("{a} ⊗ {b}: {r}"))?;
    }
    Ok(format!("{} pairs", pairs.len()))
}

fn main() {
    let criteria: [(&str, CriterionFn); 7] = [
        ("corpus checks", criterion_1),
        ("golden instances", criterion_2),
        ("oracle agreement", criterion_3),
        ("report identities", criterion_4),
        ("metamorphic invariance", criterion_5),
        ("flatness certificates", criterion_6),
        ("nontriviality", criterion_7),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match run() {
            Ok(detail) => println!("criterion {} PASS {name}: {detail} [{:.2?}]", i + 1, start.elapsed()),
            Err(err) => {
                println!("criterion {} FAIL {name}: {err}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
