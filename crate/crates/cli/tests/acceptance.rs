//! Acceptance suite. Prints one `criterion N: PASS|FAIL` line per criterion
//! and exits nonzero if any fails.

#[path = "../../core/tests/common/mod.rs"]
mod printed;

use std::time::{Duration, Instant};

use ginv::examples::{AssetSource, Which, EMBEDDED};
use ginv::oracle::{
    gen_factorization, gen_factors, matrix_rel, oracle_pinv, oracle_unfold, run_fuzz, trial_seed,
    FuzzConfig, InstanceSpec, RankProfile, CHAINED_POLICY,
};
use ginv_core::generalized::{
    b_tensor, c_tensor, check_law, inner_inverse, inner_inverse_alternate, product_mp,
    product_mp_alternate, product_mp_involution, triple_rol_check, two_factor_corollary,
    two_factor_mp, verify_product_penrose,
};
use ginv_core::{
    chain, mp_inverse, verify_penrose, DenseTensor, Factorization, LawId, RankPolicy, Verdict,
};

const GOLDEN: f64 = 1e-10;
const IDENTITY: f64 = 1e-10;
const ORACLE: f64 = 1e-12;
const VERDICT: f64 = 1e-8;
const GAP: f64 = 0.1;
const SEED: u64 = 0x00ac_ce97;

/// Collects failures for one criterion.
#[derive(Default)]
struct Check {
    failures: Vec<String>,
    worst: f64,
}

impl Check {
    fn le(&mut self, what: &str, value: f64, tol: f64) {
        self.worst = self.worst.max(value);
        if !(value <= tol) {
            self.failures.push(format!("{what}: {value:e} > {tol:e}"));
        }
    }

    fn ge(&mut self, what: &str, value: f64, bound: f64) {
        if !(value >= bound) {
            self.failures.push(format!("{what}: {value:e} < {bound:e}"));
        }
    }

    fn that(&mut self, what: &str, ok: bool) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    fn golden(&mut self, what: &str, got: &DenseTensor, want: &DenseTensor) {
        match got.max_abs_diff(want) {
            Ok(e) => self.le(what, e, GOLDEN),
            Err(e) => self.failures.push(format!("{what}: {e}")),
        }
    }

    fn within_time(&mut self, elapsed: Duration, limit: Duration) {
        self.that(
            &format!("runtime {elapsed:?} exceeds {limit:?}"),
            elapsed < limit,
        );
    }
}

fn pinv(t: &DenseTensor) -> DenseTensor {
    mp_inverse(t, &RankPolicy::default()).unwrap()
}

/// Frobenius norm of the difference.
fn gap(x: &DenseTensor, y: &DenseTensor) -> f64 {
    x.sub(y).unwrap().frobenius_norm()
}

fn rel(x: &DenseTensor, y: &DenseTensor) -> f64 {
    x.rel_distance(y).unwrap()
}

fn bundled(which: Which) -> Factorization {
    let src = AssetSource::Embedded;
    let get = |w: &str| src.load(&format!("{}_{w}", which.prefix())).unwrap();
    Factorization::new(get("R"), get("S"), get("T")).unwrap()
}

fn criterion_1(c: &mut Check) {
    let start = Instant::now();
    let f = bundled(Which::Example31);
    let a = f.a().clone();
    c.golden("A", &a, &printed::example31_a());
    c.golden("A†", &pinv(&a), &printed::example31_a_pinv());
    c.golden("A_pi", &product_mp(&f).unwrap(), &printed::example31_x());
    c.golden("B", &b_tensor(&f).unwrap(), &printed::example31_b());
    c.golden("C", &c_tensor(&f).unwrap(), &printed::example31_c());
    c.within_time(start.elapsed(), Duration::from_secs(1));
}

fn criterion_2(c: &mut Check) {
    let f = bundled(Which::Example31);
    c.golden("R†", &pinv(f.r()), &printed::example31_r_pinv());
    c.golden("S†", &pinv(f.s()), &printed::example31_s_pinv());
    c.golden("T†", &pinv(f.t()), &printed::example31_t_pinv());
    let inner = chain(&[f.r_pinv(), f.a(), f.t_pinv()]).unwrap();
    c.golden("R†*A*T† = S", &inner, &printed::example31_s());
}

fn criterion_3(c: &mut Check) {
    let f = bundled(Which::Exmppgi);
    let a_pinv = pinv(f.a());
    let w = chain(&[f.t_pinv(), &pinv(f.s()), f.r_pinv()]).unwrap();
    let x = product_mp(&f).unwrap();
    c.golden("A†", &a_pinv, &printed::exmppgi_a_pinv());
    c.golden("R†", f.r_pinv(), &printed::exmppgi_r_pinv());
    c.golden("T†", f.t_pinv(), &printed::exmppgi_t_pinv());
    c.golden("T†*S†*R†", &w, &printed::exmppgi_y());
    c.le("|A† - T†*S†*R†|", gap(&a_pinv, &w), GOLDEN);
    c.ge("|A_pi - A†| (relative)", rel(&x, &a_pinv), GAP);
    c.golden("A_pi", &x, &printed::exmppgi_x());
}

fn criterion_4(c: &mut Check) {
    let f = bundled(Which::Sec4);
    let a_pinv = pinv(f.a());
    let w = chain(&[f.t_pinv(), &pinv(f.s()), f.r_pinv()]).unwrap();
    c.golden("(R*S*T)†", &a_pinv, &printed::sec4_a_pinv());
    c.golden("T†*S†*R†", &w, &printed::sec4_x());
    let rol = triple_rol_check(&f, VERDICT).unwrap();
    c.that("triple-rol verdict is false", !rol.verdict);
    c.that(
        "triple-rol outcome is not ambiguous",
        rol.outcome() == Verdict::Fails,
    );
    c.ge("|A† - T†*S†*R†| (relative)", rel(&a_pinv, &w), GAP);
}

fn spec(trial: usize) -> InstanceSpec {
    InstanceSpec::sample(trial_seed(SEED, trial), 3, 3)
}

fn criterion_5(c: &mut Check) {
    let start = Instant::now();
    let default = RankPolicy::default();
    let mut deficient = 0;
    for trial in 0..200 {
        let s = spec(trial);
        deficient += usize::from(s.rank_profile != RankProfile::Full);
        let (a, _, _) = gen_factors(&s);
        let x = mp_inverse(&a, &default).unwrap();
        let pr = verify_penrose(&a, &x, IDENTITY).unwrap();
        c.le(
            &format!("trial {trial} Penrose"),
            pr.max_residual(),
            IDENTITY,
        );
        let o = oracle_pinv(&oracle_unfold(&a), &default).unwrap();
        c.le(
            &format!("trial {trial} oracle"),
            matrix_rel(&oracle_unfold(&x), &o),
            ORACLE,
        );
    }
    c.that("rank-deficient profiles present", deficient > 0);
    c.within_time(start.elapsed(), Duration::from_secs(30));
}

fn criterion_6(c: &mut Check) {
    let policy = CHAINED_POLICY;
    let mut deficient = 0;
    for trial in 0..100 {
        let s = spec(1000 + trial);
        deficient += usize::from(matches!(s.rank_profile, RankProfile::Deficient(_)));
        let (_, m, n) = gen_factors(&s);
        let mn_pinv = mp_inverse(&m.einstein(&n).unwrap(), &policy).unwrap();
        let tf = two_factor_mp(&m, &n, &policy).unwrap();
        let co = two_factor_corollary(&m, &n, &policy).unwrap();
        c.le(
            &format!("pair {trial} two-factor"),
            rel(&tf, &mn_pinv),
            IDENTITY,
        );
        c.le(
            &format!("pair {trial} corollary"),
            rel(&co, &mn_pinv),
            IDENTITY,
        );
    }
    c.that("deficient pairs present", deficient > 0);
    for trial in 0..50 {
        let mut s = spec(2000 + trial);
        s.rank_profile = RankProfile::Projector;
        let (_, m, n) = gen_factors(&s);
        let p = mp_inverse(&m.einstein(&n).unwrap(), &policy).unwrap();
        c.le(
            &format!("projector pair {trial} idempotent"),
            rel(&p.einstein(&p).unwrap(), &p),
            IDENTITY,
        );
    }
}

fn factorizations() -> Vec<Factorization> {
    (0..100)
        .map(|trial| gen_factorization(&spec(3000 + trial), CHAINED_POLICY))
        .collect()
}

fn criterion_7(c: &mut Check) {
    for (k, f) in factorizations().iter().enumerate() {
        let a = f.a();
        let a_pinv = mp_inverse(a, f.policy()).unwrap();
        let x = product_mp(f).unwrap();
        let pp = verify_product_penrose(f, &x, IDENTITY).unwrap();
        let worst = pp.conditions.iter().map(|r| r.value).fold(0.0, f64::max);
        c.le(&format!("f{k} six equations"), worst, IDENTITY);
        c.le(
            &format!("f{k} alternate A_pi"),
            rel(&x, &product_mp_alternate(f).unwrap()),
            IDENTITY,
        );
        c.le(
            &format!("f{k} alternate inner inverse"),
            rel(
                &inner_inverse(f).unwrap(),
                &inner_inverse_alternate(f).unwrap(),
            ),
            IDENTITY,
        );
        let b = b_tensor(f).unwrap();
        let cc = c_tensor(f).unwrap();
        let ch = |fs: &[&DenseTensor]| chain(fs).unwrap();
        c.le(
            &format!("f{k} B = A_pi*A*A†"),
            rel(&b, &ch(&[&x, a, &a_pinv])),
            IDENTITY,
        );
        c.le(
            &format!("f{k} C = A†*A*A_pi"),
            rel(&cc, &ch(&[&a_pinv, a, &x])),
            IDENTITY,
        );
        c.le(
            &format!("f{k} A_pi = B*A*C"),
            rel(&x, &ch(&[&b, a, &cc])),
            IDENTITY,
        );
        c.le(
            &format!("f{k} A† = C*A*B"),
            rel(&a_pinv, &ch(&[&cc, a, &b])),
            IDENTITY,
        );
        let inv = product_mp_involution(f, IDENTITY).unwrap();
        c.le(
            &format!("f{k} involution"),
            inv.conditions[0].value,
            IDENTITY,
        );
    }
}

const IFF_LAWS: [LawId; 4] = [
    LawId::Coincidence,
    LawId::BEqualsAdag,
    LawId::YDecomposition,
    LawId::TripleRol,
];

fn criterion_8(c: &mut Check) {
    let mut check = |label: &str, f: &Factorization, paper_example: bool| {
        for law in IFF_LAWS {
            let r = check_law(law, f, VERDICT).unwrap();
            c.that(
                &format!("{label} {law}: criterion and direct verdicts differ"),
                r.direct_verdict() == Some(r.verdict),
            );
            if paper_example {
                c.that(&format!("{label} {law}: ambiguous"), !r.ambiguous);
            }
        }
    };
    for (k, f) in factorizations().iter().enumerate() {
        check(&format!("f{k}"), f, false);
    }
    for which in Which::ALL {
        check(which.prefix(), &bundled(which), true);
    }
}

fn run_cli(args: &[&str]) -> i32 {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["ginv"];
    argv.extend_from_slice(args);
    ginv::run(argv, &mut out, &mut err)
}

fn example_of(asset: &str) -> Which {
    Which::ALL
        .into_iter()
        .find(|w| asset.starts_with(&format!("{}_", w.prefix())))
        .unwrap()
}

fn nudge(text: &str, index: usize) -> String {
    let mut v: serde_json::Value = serde_json::from_str(text).unwrap();
    let re = &mut v["entries"][index][0];
    *re = serde_json::json!(re.as_f64().unwrap() + 1e-3);
    v.to_string()
}

fn criterion_9(c: &mut Check) {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        std::fs::write(dir.path().join(format!("{name}.json")), text).unwrap()
    };
    for (name, text) in EMBEDDED {
        write(name, text);
    }
    let assets = dir.path().to_str().unwrap();
    let which = |w: Which| match w {
        Which::Example31 => "3.1",
        Which::Exmppgi => "exmppgi",
        Which::Sec4 => "sec4",
    };
    for w in Which::ALL {
        let code = run_cli(&["examples", "paper", "--which", which(w), "--assets", assets]);
        c.that(
            &format!("unperturbed {} exits 0 (got {code})", w.prefix()),
            code == 0,
        );
    }
    let mut runs = 0;
    for (name, text) in EMBEDDED {
        let w = example_of(name);
        let count = ginv::io::parse_tensor(text).unwrap().entries().len();
        for index in 0..count {
            write(name, &nudge(text, index));
            let code = run_cli(&["examples", "paper", "--which", which(w), "--assets", assets]);
            c.that(&format!("{name}[{index}] + 1e-3 still exits 0"), code != 0);
            runs += 1;
        }
        write(name, text);
    }
    c.that("perturbation runs executed", runs > 0);

    let clean = run_fuzz(&FuzzConfig::new(2, 20, SEED));
    c.that("clean fuzz run has no violations", clean.is_clean());
    let mut cfg = FuzzConfig::new(2, 20, SEED);
    cfg.fault = Some(ginv::oracle::Fault::CorruptB { trial: 7 });
    let faulty = run_fuzz(&cfg);
    c.that(
        &format!(
            "corrupted B gives {} violations, want 1",
            faulty.violations.len()
        ),
        faulty.violations.len() == 1 && faulty.violations[0].trial == 7,
    );
}

fn main() {
    let criteria: [(u32, fn(&mut Check)); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let mut failed = 0;
    for (n, run) in criteria {
        let mut c = Check::default();
        let start = Instant::now();
        run(&mut c);
        let status = if c.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "criterion {n}: {status}  (worst residual {:.3e}, {:.2?})",
            c.worst,
            start.elapsed()
        );
        for f in c.failures.iter().take(10) {
            println!("    {f}");
        }
        failed += usize::from(!c.failures.is_empty());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
