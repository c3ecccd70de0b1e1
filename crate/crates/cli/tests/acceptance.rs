//! Runs every acceptance criterion and prints one line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use deloop_cli::checks::{sign_dropped_table, verify_all, VerifyOptions, OUT_OF_SCOPE};
use deloop_cli::report::{replay, AdjunctionPair, Evidence, Report, Status};
use deloop_core::algebra::{build_gamma, build_lambda, Violation};
use deloop_core::dell::{parity_certificate, Certificate};
use deloop_core::homological::{sigma, syzygy};
use deloop_core::module::build_m_alpha;
use deloop_core::{ModuleRep, Scalar};

type Verdict = Result<String, String>;

fn passed(rep: &Report, ids: &[&str]) -> Result<(), String> {
    for id in ids {
        let c = rep.check(id).ok_or(format!("check {id} missing"))?;
        if c.status != Status::Pass {
            return Err(format!("{id}: {:?}: {}", c.status, c.detail));
        }
    }
    Ok(())
}

fn evidence<'a>(rep: &'a Report, id: &str) -> &'a [Evidence] {
    rep.check(id).map(|c| c.evidence.as_slice()).unwrap_or(&[])
}

fn ensure(ok: bool, why: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why.into())
    }
}

fn algebra(rep: &Report) -> Verdict {
    passed(rep, &["01-algebra"])?;
    match evidence(rep, "01-algebra") {
        [Evidence::Validation { associativity_triples: 216, violations, relation_failures: Some(r), .. }]
            if violations.is_empty() && r.is_empty() => {}
        _ => return Err("validation evidence does not show 216 clean triples".into()),
    }
    let l = build_lambda(&Scalar::from_int(2)).map_err(|e| e.to_string())?;
    ensure(l.dim() == 6 && l.radical().dim() == 5 && l.radical_power(3).dim() == 0, "dimensions")?;
    Ok("dim 6, 216 triples, rad dim 5, J^3 = 0".into())
}

fn omega_shift(rep: &Report) -> Verdict {
    passed(rep, &["02-omega-shift"])?;
    let n = evidence(rep, "02-omega-shift").iter().filter(|e| matches!(e, Evidence::Isomorphism { .. })).count();
    ensure(n == 10, format!("{n} witnesses"))?;
    let ms = rep.check("02-omega-shift").unwrap().wall_time_ms;
    ensure(ms < 5000, format!("took {ms} ms"))?;
    Ok(format!("10 witnesses in {ms} ms"))
}

fn sigma_shift(rep: &Report) -> Verdict {
    passed(rep, &["03-sigma-shift", "04-adjunction"])?;
    let n = evidence(rep, "03-sigma-shift").len();
    ensure(n == 10, format!("{n} witnesses"))?;
    let pairs: Vec<&AdjunctionPair> = evidence(rep, "04-adjunction")
        .iter()
        .flat_map(|e| match e {
            Evidence::Adjunction { pairs, .. } => pairs.iter().collect(),
            _ => vec![],
        })
        .collect();
    ensure(pairs.len() >= 20, format!("only {} adjunction pairs", pairs.len()))?;
    ensure(pairs.iter().all(|p| p.left == p.right), "adjunction dims differ")?;
    Ok(format!("10 witnesses, adjunction on {} pairs", pairs.len()))
}

fn omega_sigma(rep: &Report) -> Verdict {
    passed(rep, &["05-omega-sigma", "06-torsionless-quotient"])?;
    match evidence(rep, "05-omega-sigma") {
        [Evidence::GammaFree { module, rank: 1, .. }] if module.dim == 2 => {}
        _ => return Err("Omega Sigma M(2) is not 2-dimensional of Gamma-rank 1".into()),
    }
    ensure(evidence(rep, "06-torsionless-quotient").len() == 2, "missing torsionless witnesses")?;
    Ok("dim 2, Gamma-free of rank 1, agrees with the torsionless quotient and M(2)/M(2)z".into())
}

fn semi_gp(rep: &Report) -> Verdict {
    passed(rep, &["07-ext-vanishing", "08-not-torsionless"])?;
    match (evidence(rep, "07-ext-vanishing"), evidence(rep, "08-not-torsionless")) {
        ([Evidence::Ext { dims, .. }], [Evidence::EvaluationKernel { kernel_dim: 1, .. }])
            if dims.len() == 10 && dims.iter().all(|&d| d == 0) => {}
        _ => return Err("unexpected evidence".into()),
    }
    Ok("Ext^1..10 vanish, evaluation kernel dim 1".into())
}

fn headline(rep: &Report) -> Verdict {
    passed(rep, &["09-parity-chain", "10-syzygy-tracking", "11-delooping-bound"])?;
    let certs: Vec<&Certificate> = evidence(rep, "11-delooping-bound")
        .iter()
        .filter_map(|e| match e {
            Evidence::Summand { certificate, .. } => Some(certificate),
            _ => None,
        })
        .collect();
    ensure(certs.len() == 9, format!("{} checks instead of n = 0..=8", certs.len()))?;
    for c in &certs {
        match c {
            Certificate::ParityObstruction { x, y_dim, y_gamma_rank, .. } if x.dim == 3 && 2 * y_gamma_rank == *y_dim => {}
            other => return Err(format!("not a parity obstruction: {}", other.kind())),
        }
    }
    let tracked = evidence(rep, "10-syzygy-tracking").len();
    ensure(tracked == 21, format!("tracked {tracked} steps"))?;
    ensure(rep.notes.iter().any(|n| n.contains("criterion")), "negative-dependence note missing")?;
    Ok("parity certificates for n = 0..=8 (dell M(2) > 8), tracking to n = 20".into())
}

fn transport(rep: &Report) -> Verdict {
    passed(rep, &["12-extension-transport"])?;
    let ev = evidence(rep, "12-extension-transport");
    match ev.first() {
        Some(Evidence::Validation { associativity_triples: 1000, violations, .. }) if violations.is_empty() => {}
        _ => return Err("B not validated".into()),
    }
    ensure(ev.len() == 11, "missing witnesses")?;
    Ok("B of dim 10 validated, 10 witnesses".into())
}

fn findim(rep: &Report) -> Verdict {
    passed(rep, &["13-extension-pdim", "14-opposite-pdim-samples"])?;
    let samples = evidence(rep, "14-opposite-pdim-samples").len();
    ensure(samples >= 6, format!("{samples} samples"))?;
    Ok(format!("(0 Lambda^op) has pdim 1; {} non-projective samples >= 13, projective 0", samples - 1))
}

fn injective_generation(rep: &Report) -> Verdict {
    passed(rep, &["15-m-zero"])?;
    ensure(rep.notes.iter().any(|n| n == OUT_OF_SCOPE), "out-of-scope note missing")?;
    Ok("witness found; derived-category remainder reported out of scope".into())
}

fn mutations() -> Verdict {
    let q = Scalar::from_int(2);
    let (mut failures, mut held) = (Vec::new(), Vec::new());

    let mut opts = VerifyOptions::new(q.clone(), 8, 0);
    opts.corrupt_sign = true;
    let rep = verify_all(&opts).map_err(|e| e.to_string())?;
    if !(rep.aborted.is_some() && rep.checks.len() == 1 && rep.checks[0].status == Status::Fail) {
        failures.push("sign drop not caught".to_string());
    } else {
        held.push(format!("sign drop caught ({})", rep.checks[0].detail));
    }

    let table_report = sign_dropped_table(&q).validate();
    let broken = table_report.violations.iter().any(|v| matches!(v, Violation::Associativity { .. }));
    if !broken {
        failures.push(format!(
            "sign drop leaves all {} associativity triples intact (the mutant is Lambda(-q))",
            table_report.associativity_triples
        ));
    }

    let l = build_lambda(&q).map_err(|e| e.to_string())?;
    let g = build_gamma(&l).map_err(|e| e.to_string())?;
    let m = build_m_alpha(&l, &q).map_err(|e| e.to_string())?;
    let free = syzygy(&sigma(&m).map_err(|e| e.to_string())?);
    let simple = ModuleRep::regular(&l).top().0;
    let non_free = ModuleRep::direct_sum(&[free.clone(), simple]).map_err(|e| e.to_string())?.module;
    let good = parity_certificate(&m, &free, &g).map_err(|e| e.to_string())?;
    let bad = parity_certificate(&m, &non_free, &g).map_err(|e| e.to_string())?;
    if !(good.is_negative() && bad.is_inconclusive()) {
        failures.push(format!("parity with a non-free Y gave {} (free Y gave {})", bad.kind(), good.kind()));
    } else {
        held.push("non-free Y gives inconclusive".to_string());
    }
    if failures.is_empty() {
        Ok(format!("{}; sign drop breaks associativity", held.join("; ")))
    } else {
        Err(format!("{}; held: {}", failures.join("; "), held.join("; ")))
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let rep = match verify_all(&VerifyOptions::new(Scalar::from_int(2), 8, 0)) {
        Ok(r) => r,
        Err(e) => {
            println!("FAIL verify-all did not run: {e}");
            return ExitCode::FAILURE;
        }
    };
    let replayed = replay(&rep);
    let criteria: Vec<(&str, Verdict)> = vec![
        ("1 algebra construction", algebra(&rep)),
        ("2 Omega shift", omega_shift(&rep)),
        ("3 Sigma shift and adjunction", sigma_shift(&rep)),
        ("4 Omega Sigma M(2)", omega_sigma(&rep)),
        ("5 semi-Gorenstein-projective", semi_gp(&rep)),
        ("6 delooping bound", headline(&rep)),
        ("7 one-point extension transport", transport(&rep)),
        ("8 projective dimension spot checks", findim(&rep)),
        ("9 Omega M(0) = M(0)", injective_generation(&rep)),
        ("10 negative controls", mutations()),
        (
            "report replay",
            if replayed.ok() {
                Ok(format!("{} pieces of evidence replayed", replayed.replayed))
            } else {
                Err(format!("{:?}", replayed.failures))
            },
        ),
    ];
    let mut ok = true;
    for (name, v) in &criteria {
        match v {
            Ok(d) => println!("PASS {name}: {d}"),
            Err(d) => {
                ok = false;
                println!("FAIL {name}: {d}");
            }
        }
    }
    println!("total {:.1} s", start.elapsed().as_secs_f64());
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
