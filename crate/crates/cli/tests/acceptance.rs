//! End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
//! if anything fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use correspondence::{match_building_blocks, match_genus_one, match_prepotential, q_side_systems, MatchReport};
use fjrw_model::prepotential::s3_action;
use fjrw_model::wdvv::wdvv_at_point;
use fjrw_model::{derived_blocks, fjrw_prepotential, state_space, Case};
use hypergeom_cayley::cayley::graded;
use hypergeom_cayley::{cayley_expansions, verify_elliptic_ramanujan};
use monodromy_numerics::{conjugation_check, monodromy_suite, numeric_continuation_check, rational_constant_oracle, ContinuationForm, Precision};
use q_forms::{verify_ramanujan, verify_ramanujan_with, Normalization};
use series_core::{rat, PowerSeries, Rational, Scalar};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

fn match_ok(r: &MatchReport, min_order: usize) -> Result<(), String> {
    for i in &r.identities {
        if let Some(m) = &i.first_mismatch {
            return Err(format!("{}: mismatch at order {}", i.identity, m.order));
        }
        ensure(i.verified_to_order >= min_order, format!("{} only verified to {}", i.identity, i.verified_to_order))?;
    }
    Ok(())
}

fn c1_ramanujan() -> Outcome {
    let mut n = 0;
    for (level, r) in [(3, 3), (2, 4)] {
        let rep = verify_ramanujan(level, r, 60).map_err(err)?;
        for res in &rep.residuals {
            ensure(res.pass(), format!("level {level}: {} nonzero at {:?}", res.identity, res.first_nonzero))?;
            n += 1;
        }
    }
    Ok(format!("{n} residuals vanish to order 60, including A3^3 = B3^3 + C3^3 and A2^4 = B2^4 + C2^4"))
}

fn c2_coefficients() -> Outcome {
    let l3 = cayley_expansions(3, 12).map_err(err)?;
    let l2 = cayley_expansions(2, 12).map_err(err)?;
    // C(C2) itself is the square root of the squared form
    let c2 = l2.c_series().nth_root(2).map_err(err)?;
    let checks = [
        ("[v^3] C(C3)", l3.c_series().coeff(3).clone(), rat(1, 162)),
        ("[v^5] C_hol(E3)", l3.e_series().coeff(5).clone(), rat(-1, 2430)),
        ("[v^2] C(C2^2)", l2.c_series().coeff(2).clone(), rat(1, 16)),
        ("[v^2] C(C2)", c2.coeff(2).clone(), rat(1, 32)),
        ("[v^3] C_hol(E2)", l2.e_series().coeff(3).clone(), rat(-1, 96)),
        ("[v] C(A2^2)", l2.a_series().coeff(1).clone(), rat(1, 2)),
    ];
    for (name, got, want) in &checks {
        ensure(got == want, format!("{name} = {got}, expected {want}"))?;
    }
    Ok(format!("{} coefficients exact", checks.len()))
}

fn c3_boundary() -> Outcome {
    let cu = derived_blocks(Case::Cubic, 12).map_err(err)?;
    let z = Rational::zero();
    let coeff = |s: &PowerSeries<Rational>, n: usize| s.coeff(n).clone();
    ensure(coeff(cu.f(1), 0) == rat(1, 1), "cubic f1(0)")?;
    ensure(coeff(cu.f(2), 1) == rat(1, 3), "cubic f2'(0)")?;
    ensure(coeff(cu.f(5), 0) == rat(1, 3), "cubic f5(0)")?;
    for i in [2, 3, 4, 6] {
        ensure(coeff(cu.f(i), 0) == z, format!("cubic f{i}(0)"))?;
    }
    let pc = derived_blocks(Case::Pillowcase, 12).map_err(err)?;
    let lead = |name: &str, want: &[Rational]| -> Result<(), String> {
        let s = pc.get(name);
        for (n, w) in want.iter().enumerate() {
            ensure(s.coeff(n) == w, format!("pillowcase [u^{n}] {name} = {}, expected {w}", s.coeff(n)))?;
        }
        Ok(())
    };
    lead("f1", &[rat(-1, 4), z.clone()])?;
    lead("f2", &[z.clone(), rat(-1, 16), z.clone()])?;
    lead("f3", &[z.clone(), rat(1, 16), z.clone()])?;
    lead("f4", &[z.clone(), rat(1, 16), z.clone()])?;
    ensure(pc.get("g5").is_zero(), "pillowcase g5 is not identically zero")?;
    Ok("cubic boundary values and pillowcase leading data exact, g5 = 0".into())
}

fn c4_blocks() -> Outcome {
    let norm = Normalization::default();
    for case in [Case::Cubic, Case::Pillowcase] {
        match_ok(&match_building_blocks(case, 30, norm).map_err(err)?, 30)?;
    }
    let via_cayley = cayley_expansions(3, 8).map_err(err)?.c_series().coeff(6).clone();
    let via_ode = derived_blocks(Case::Cubic, 8).map_err(err)?.f(1).coeff(6).clone();
    ensure(via_cayley == rat(1, 131220) && via_ode == rat(1, 131220), format!("[v^6]: {via_cayley} vs [u^6]: {via_ode}"))?;
    Ok("cubic and pillowcase block identities exact to order 30; [v^6] C(C3) = [u^6] f1 = 1/131220".into())
}

fn c5_prepotential() -> Outcome {
    let norm = Normalization::default();
    let mut n = 0;
    for case in [Case::Cubic, Case::Pillowcase] {
        let r = match_prepotential(case, 20, norm).map_err(err)?;
        match_ok(&r, 20)?;
        n += r.identities.len();
    }
    Ok(format!("{n} monomial coefficients match to order 20"))
}

fn c6_genus_one() -> Outcome {
    match_ok(&match_genus_one(Case::Cubic, 30, Normalization::default()).map_err(err)?, 30)?;
    Ok("C_hol((-2E3 + A3^2)/12) = 3 (6 f3 + f2^2)/36 to order 30".into())
}

fn c7_monodromy() -> Outcome {
    let p = Precision::new(50).map_err(err)?;
    for level in [3, 2] {
        for rep in [monodromy_suite(level).map_err(err)?, conjugation_check(level, p).map_err(err)?, rational_constant_oracle(level, p).map_err(err)?] {
            for c in &rep.checks {
                ensure(c.pass, format!("level {level}: {} error {} > {}", c.check, c.max_error, c.tolerance))?;
            }
        }
    }
    Ok("exact product relations; conjugation and constants 3, 2 within 1e-40 at 50 digits".into())
}

fn c8_continuation() -> Outcome {
    let p = Precision::new(50).map_err(err)?;
    let r = numeric_continuation_check(ContinuationForm::C3, (&rat(0, 1), &rat(1, 100)), 40, p).map_err(err)?;
    ensure(r.digits() >= 15.0, format!("only {:.1} digits", r.digits()))?;
    Ok(format!("C3 at s = 0.01i agrees to {:.1} digits", r.digits()))
}

/// Small deterministic generator for the spot checks below; the randomized
/// versions live in the crates' property tests.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self, lo: i64, hi: i64) -> i64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        lo + ((self.0 >> 33) % (hi - lo + 1) as u64) as i64
    }

    fn series(&mut self, n: usize) -> PowerSeries<Rational> {
        let c: Vec<Rational> = (0..n).map(|_| rat(self.next(-9, 9), self.next(1, 5))).collect();
        PowerSeries::from_rats("x", &c, n)
    }
}

fn c9_properties() -> Outcome {
    let mut g = Lcg(0x5eed);
    for _ in 0..20 {
        let (a, b, c) = (g.series(12), g.series(12), g.series(12));
        let ab_c = a.checked_mul(&b).and_then(|x| x.checked_mul(&c)).map_err(err)?;
        let a_bc = b.checked_mul(&c).and_then(|x| a.checked_mul(&x)).map_err(err)?;
        ensure(ab_c == a_bc, "associativity")?;
        let lhs = b.checked_add(&c).and_then(|x| a.checked_mul(&x)).map_err(err)?;
        let rhs = a.checked_mul(&b).and_then(|x| x.checked_add(&a.checked_mul(&c)?)).map_err(err)?;
        ensure(lhs == rhs, "distributivity")?;
        ensure(a.checked_mul(&b).map_err(err)? == b.checked_mul(&a).map_err(err)?, "commutativity")?;

        let mut f = g.series(12);
        let mut cs = f.coeffs().to_vec();
        cs[0] = Rational::zero();
        if cs[1].is_zero() {
            cs[1] = rat(1, 1);
        }
        f = PowerSeries::from_rats("x", &cs, 12);
        let r = f.reverse().map_err(err)?;
        ensure(f.compose(&r).map_err(err)? == PowerSeries::x("x", 12), "f(f^-1(x)) = x")?;
        ensure(r.reverse().map_err(err)? == f, "reversion is an involution")?;
    }

    let p = fjrw_prepotential(Case::Cubic, 16).map_err(err)?;
    for perm in s3_action() {
        ensure(p.permute(&perm) == p, format!("cubic prepotential not invariant under {perm:?}"))?;
    }

    for (level, m, res) in [(3, 3, [0, 1, 2]), (2, 2, [0, 1, 1])] {
        let f = cayley_expansions(level, 60).map_err(err)?;
        let ok = graded(f.c_series(), m, res[0]) && graded(f.a_series(), m, res[1]) && graded(f.e_series(), m, res[2]);
        ensure(ok, format!("level {level} grading"))?;
        for r in verify_elliptic_ramanujan(level, 30).map_err(err)? {
            ensure(r.pass(), format!("level {level}: {}", r.identity))?;
        }
    }

    for case in [Case::Cubic, Case::Pillowcase] {
        let b = derived_blocks(case, 30).map_err(err)?;
        for c in &b.checks {
            ensure(c.pass(), format!("{}: {}", case.name(), c.identity))?;
        }
        let p = fjrw_prepotential(case, 12).map_err(err)?;
        let eta: Vec<Vec<Rational>> = state_space(case).pairing.iter().map(|r| r.iter().map(|c| c.to_rational().unwrap()).collect()).collect();
        let n = p.coordinates().len() - 1;
        let pt: Vec<Rational> = [1i64, 2, 3, -1, 2, 1, -3].iter().take(n).map(|&x| rat(x, 1)).collect();
        ensure(wdvv_at_point(&p, &eta, &pt).map_err(err)?.pass(), format!("{} WDVV at a rational point", case.name()))?;
    }
    Ok("algebra laws, reversion, S3 symmetry, gradings, elliptic system and WDVV identities hold".into())
}

fn c10_negative_control() -> Outcome {
    let bad = Normalization { e3_denominator: 3 };
    let rep = verify_ramanujan_with(3, 3, 60, bad).map_err(err)?;
    let first = rep.residuals.iter().filter_map(|r| r.first_nonzero.as_ref().map(|x| x.0.clone())).min();
    ensure(first == Some(rat(0, 1)), format!("Ramanujan system with E3 denominator 3 first fails at {first:?}, expected order 0"))?;
    let q = q_side_systems(Case::Cubic, 30, bad).map_err(err)?;
    let qfirst = q.iter().filter_map(|r| r.first_nonzero.as_ref().map(|x| x.0.clone())).min();
    ensure(qfirst == Some(rat(0, 1)), format!("q-side system first fails at {qfirst:?}"))?;

    let m = match_building_blocks(Case::Cubic, 30, bad).map_err(err)?;
    let order = m.first_failure_order().ok_or("sabotaged building blocks still match")?;
    // f3 starts at u^5, so the first coefficient it has is already wrong
    let f3_start = derived_blocks(Case::Cubic, 30).map_err(err)?.f(3).valuation();
    ensure(Some(order) == f3_start, format!("blocks first fail at {order}, f3 starts at {f3_start:?}"))?;
    Ok(format!("E3 denominator 3: Ramanujan and q-side systems fail at order 0, blocks fail at v^{order} (leading f3 coefficient)"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("Ramanujan identities", c1_ramanujan),
        ("elliptic expansion coefficients", c2_coefficients),
        ("FJRW boundary data", c3_boundary),
        ("building-block correspondence", c4_blocks),
        ("prepotential matching", c5_prepotential),
        ("genus one", c6_genus_one),
        ("monodromy", c7_monodromy),
        ("numeric continuation", c8_continuation),
        ("property suites", c9_properties),
        ("negative control", c10_negative_control),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(msg) => println!("criterion {:>2} PASS  {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
