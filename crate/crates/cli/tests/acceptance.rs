//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines come out in order and unfiltered.

use std::process::Command;
use std::time::Instant;

use aw_cli::suites::{self, Suite};
use aw_core::rewriter::Engine;

struct Criterion {
    id: u8,
    what: &'static str,
    suites: Vec<Suite>,
    extra: Option<Result<(), String>>,
}

impl Criterion {
    fn passed(&self) -> bool {
        self.suites.iter().all(Suite::passed) && self.extra.as_ref().map_or(true, |r| r.is_ok())
    }
}

fn timed(id: u8, what: &'static str, f: impl FnOnce() -> (Vec<Suite>, Option<Result<(), String>>)) -> bool {
    let start = Instant::now();
    let (suites, extra) = f();
    let c = Criterion { id, what, suites, extra };
    let checks: usize = c.suites.iter().map(|s| s.items.len()).sum();
    let verdict = if c.passed() { "PASS" } else { "FAIL" };
    println!("criterion {:>2} {verdict}: {} ({checks} checks, {:.1} s)", c.id, c.what, start.elapsed().as_secs_f64());
    if !c.passed() {
        for s in c.suites.iter().filter(|s| !s.passed()) {
            print!("{s}");
        }
        if let Some(Err(e)) = &c.extra {
            println!("  {e}");
        }
    }
    c.passed()
}

fn selfcheck_full() -> Result<(Vec<u8>, i32), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_aw"))
        .args(["--seed", "7", "selfcheck", "--level", "full"])
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.stdout, out.status.code().unwrap_or(-1)))
}

fn main() {
    let mut engine = Engine::new(0);
    let mut ok = true;
    ok &= timed(1, "aw(3) presentation recovered", || (vec![suites::presentation_aw3(&mut engine)], None));
    ok &= timed(2, "morphism property of r_a and rb_a at n = 3, 4", || {
        (vec![suites::morphism_property(3, &mut engine), suites::morphism_property(4, &mut engine)], None)
    });
    ok &= timed(3, "braid relations at n = 3, 4, 5", || ((3..=5).map(|n| suites::braid(n, &mut engine)).collect(), None));
    ok &= timed(4, "centre quotient relations at n = 3, 4, 5", || {
        ((3..=5).map(|n| suites::quotient(n, &mut engine)).collect(), None)
    });
    ok &= timed(5, "coproduct compatibility at n = 3, 4", || {
        (vec![suites::r_delta(3, &mut engine), suites::r_delta(4, &mut engine)], None)
    });
    ok &= timed(6, "Casimir commutation and equality chain in aw(4)", || (vec![suites::casimir4(&mut engine)], None));
    ok &= timed(7, "phi(w_S) = 0 at n = 3, 4 exactly and n = 5 at two points", || {
        (vec![suites::kernel(3, true, &engine), suites::kernel(4, true, &engine), suites::kernel(5, false, &engine)], None)
    });
    ok &= timed(8, "R-matrix compatibility at n = 3, 4", || (vec![suites::rmatrix(3), suites::rmatrix(4)], None));
    ok &= timed(9, "r0 on Gamma_4 and its square", || (vec![suites::gamma4(&mut engine)], None));
    ok &= timed(10, "Racah limits", || (vec![suites::racah()], None));
    ok &= timed(11, "hole independence at n = 4 and C[1;3;5] under phi", || {
        (vec![suites::hole_independence(4, &mut engine), suites::c135(&engine)], None)
    });
    ok &= timed(12, "selfcheck full is byte-identical across runs", || {
        let check = selfcheck_full().and_then(|(a, ca)| {
            let (b, cb) = selfcheck_full()?;
            if a != b {
                return Err("the two reports differ".into());
            }
            if ca != 0 || cb != 0 {
                return Err(format!("exit codes {ca} and {cb}"));
            }
            Ok(())
        });
        (Vec::new(), Some(check))
    });
    if !ok {
        std::process::exit(1);
    }
}
