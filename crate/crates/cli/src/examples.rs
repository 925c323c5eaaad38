//! End-to-end reproduction of the three bundled worked examples.

use std::path::PathBuf;

use ginv_core::generalized::{
    b_tensor, c_tensor, check_coincidence, check_y_decomposition, product_mp, triple_rol_check,
    verify_product_penrose,
};
use ginv_core::{chain, mp_inverse, DenseTensor, Factorization, LawReport, RankPolicy, Verdict};
use serde::Serialize;

use crate::io::{parse_tensor, read, IoError};
use crate::Error;

/// Tolerance for matching golden values.
pub const GOLDEN_TOL: f64 = 1e-10;
/// A claimed inequality must show at least this relative gap.
pub const GAP: f64 = 0.1;

macro_rules! assets {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../assets/paper/", $name, ".json")))),*]
    };
}

/// Asset name and file text of every bundled tensor.
pub const EMBEDDED: &[(&str, &str)] = assets![
    "example31_A",
    "example31_R",
    "example31_S",
    "example31_T",
    "example31_A_pinv",
    "example31_R_pinv",
    "example31_S_pinv",
    "example31_T_pinv",
    "example31_X",
    "example31_B",
    "example31_C",
    "exmppgi_A",
    "exmppgi_R",
    "exmppgi_S",
    "exmppgi_T",
    "exmppgi_A_pinv",
    "exmppgi_R_pinv",
    "exmppgi_S_pinv",
    "exmppgi_T_pinv",
    "exmppgi_X",
    "exmppgi_Y",
    "sec4_A",
    "sec4_R",
    "sec4_S",
    "sec4_T",
    "sec4_A_pinv",
    "sec4_R_pinv",
    "sec4_T_pinv",
    "sec4_X",
];

#[derive(Clone, Debug, Default)]
pub enum AssetSource {
    #[default]
    Embedded,
    /// A directory holding `<name>.json` for every asset.
    Dir(PathBuf),
}

impl AssetSource {
    pub fn load(&self, name: &str) -> Result<DenseTensor, IoError> {
        match self {
            AssetSource::Embedded => {
                let text = EMBEDDED
                    .iter()
                    .find(|(n, _)| *n == name)
                    .map(|(_, t)| *t)
                    .unwrap_or_else(|| panic!("no bundled asset {name}"));
                parse_tensor(text)
            }
            AssetSource::Dir(dir) => parse_tensor(&read(&dir.join(format!("{name}.json")))?),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Which {
    #[value(name = "3.1")]
    Example31,
    #[value(name = "exmppgi")]
    Exmppgi,
    #[value(name = "sec4")]
    Sec4,
}

impl Which {
    pub const ALL: [Which; 3] = [Which::Example31, Which::Exmppgi, Which::Sec4];

    pub fn prefix(self) -> &'static str {
        match self {
            Which::Example31 => "example31",
            Which::Exmppgi => "exmppgi",
            Which::Sec4 => "sec4",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Comparison {
    pub quantity: String,
    pub golden: String,
    pub max_abs_error: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub statement: String,
    pub value: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleOutcome {
    pub example: &'static str,
    pub comparisons: Vec<Comparison>,
    pub claims: Vec<Claim>,
}

impl ExampleOutcome {
    pub fn pass(&self) -> bool {
        self.comparisons.iter().all(|c| c.pass) && self.claims.iter().all(|c| c.pass)
    }

    fn compare(&mut self, quantity: &str, got: &DenseTensor, golden: &str, want: &DenseTensor) {
        let err = got.max_abs_diff(want).unwrap_or(f64::INFINITY);
        self.comparisons.push(Comparison {
            quantity: quantity.to_string(),
            golden: golden.to_string(),
            max_abs_error: err,
            pass: err <= GOLDEN_TOL,
        });
    }

    fn claim(&mut self, statement: &str, value: f64, pass: bool) {
        self.claims.push(Claim {
            statement: statement.to_string(),
            value,
            pass,
        });
    }

    fn law(&mut self, report: &LawReport, expected: Verdict) {
        let value = report
            .conditions
            .iter()
            .map(|c| c.value)
            .fold(0.0, f64::max);
        let statement = format!("{} {}", report.law, crate::report::outcome_word(expected));
        self.claim(&statement, value, report.outcome() == expected);
    }
}

struct Golden<'a> {
    src: &'a AssetSource,
    prefix: &'static str,
}

impl Golden<'_> {
    fn name(&self, what: &str) -> String {
        format!("{}_{}", self.prefix, what)
    }

    fn get(&self, what: &str) -> Result<DenseTensor, IoError> {
        self.src.load(&self.name(what))
    }
}

fn pinv(t: &DenseTensor) -> Result<DenseTensor, Error> {
    Ok(mp_inverse(t, &RankPolicy::default())?)
}

/// Recomputes one example from its factors and compares with the golden set.
pub fn run_example(which: Which, src: &AssetSource) -> Result<ExampleOutcome, Error> {
    let g = Golden {
        src,
        prefix: which.prefix(),
    };
    let mut out = ExampleOutcome {
        example: which.prefix(),
        comparisons: Vec::new(),
        claims: Vec::new(),
    };
    let (r, s, t) = (g.get("R")?, g.get("S")?, g.get("T")?);
    let f = match Factorization::new(r.clone(), s.clone(), t.clone()) {
        Ok(f) => f,
        Err(e) => {
            out.claim(&format!("factors chain: {e}"), f64::NAN, false);
            return Ok(out);
        }
    };
    let tol = ginv_core::DEFAULT_LAW_TOLERANCE;
    let a = f.a().clone();
    let a_pinv = pinv(&a)?;
    let cmp = |out: &mut ExampleOutcome, quantity: &str, got: &DenseTensor, what: &str| {
        let name = g.name(what);
        let want = g.get(what)?;
        out.compare(quantity, got, &name, &want);
        Ok::<_, IoError>(())
    };
    cmp(&mut out, "R*S*T", &a, "A")?;
    cmp(&mut out, "A†", &a_pinv, "A_pinv")?;
    cmp(&mut out, "R†", f.r_pinv(), "R_pinv")?;
    cmp(&mut out, "T†", f.t_pinv(), "T_pinv")?;
    let x = product_mp(&f)?;
    let w = chain(&[f.t_pinv(), &pinv(&s)?, f.r_pinv()])?;

    match which {
        Which::Example31 => {
            cmp(&mut out, "S†", &pinv(&s)?, "S_pinv")?;
            cmp(&mut out, "A_pi", &x, "X")?;
            cmp(&mut out, "B", &b_tensor(&f)?, "B")?;
            cmp(&mut out, "C", &c_tensor(&f)?, "C")?;
            let inner = chain(&[f.r_pinv(), &a, f.t_pinv()])?;
            cmp(&mut out, "R†*A*T†", &inner, "S")?;
            let pp = verify_product_penrose(&f, &x, GOLDEN_TOL)?;
            out.law(&pp, Verdict::Holds);
            out.law(&check_coincidence(&f, tol)?, Verdict::Fails);
            out.law(&check_y_decomposition(&f, tol)?, Verdict::Holds);
        }
        Which::Exmppgi => {
            cmp(&mut out, "S†", &pinv(&s)?, "S_pinv")?;
            cmp(&mut out, "A_pi", &x, "X")?;
            cmp(&mut out, "T†*S†*R†", &w, "Y")?;
            let same = a_pinv.rel_distance(&w)?;
            out.claim("A† = T†*S†*R†", same, same <= GOLDEN_TOL);
            let gap = x.rel_distance(&a_pinv)?;
            out.claim("A_pi differs from A†", gap, gap >= GAP);
            out.law(&triple_rol_check(&f, tol)?, Verdict::Holds);
            out.law(&check_coincidence(&f, tol)?, Verdict::Fails);
            out.law(&check_y_decomposition(&f, tol)?, Verdict::Fails);
        }
        Which::Sec4 => {
            cmp(&mut out, "T†*S†*R†", &w, "X")?;
            let rol = triple_rol_check(&f, tol)?;
            let gap = rol.direct.map_or(f64::NAN, |d| d.value);
            out.claim("A† differs from T†*S†*R†", gap, gap >= GAP);
            out.law(&rol, Verdict::Fails);
        }
    }
    Ok(out)
}

pub fn run_examples(which: &[Which], src: &AssetSource) -> Result<Vec<ExampleOutcome>, Error> {
    which.iter().map(|&w| run_example(w, src)).collect()
}
