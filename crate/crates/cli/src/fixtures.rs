//! Golden JSON files for `Lambda(q)`, `Gamma`, sample `M(a)`, `Lambda(q)[M(q)]`
//! and the opposites.

use std::path::{Path, PathBuf};

use deloop_core::algebra::{build_dual_numbers, build_gamma, build_lambda};
use deloop_core::constructions::{one_point_extension, simple_at_extension_vertex};
use deloop_core::io::{algebra_to_json, module_to_json, to_pretty, write_file, AlgebraRef};
use deloop_core::module::build_m_alpha;
use deloop_core::{Result, Scalar};
use serde_json::json;

/// File-name form of a rational: `-1/4` becomes `m1over4`.
pub fn scalar_slug(a: &Scalar) -> String {
    a.to_string().replace('-', "m").replace('/', "over")
}

/// Sample parameters `0, 1, q, q^2, 1/q`.
pub fn sample_alphas(q: &Scalar) -> Vec<Scalar> {
    let p = |j| q.pow(j).expect("q != 0");
    vec![Scalar::zero(), Scalar::one(), q.clone(), p(2), p(-1)]
}

/// Writes the fixtures into `dir` and returns the paths written, sorted.
pub fn dump_fixtures(q: &Scalar, dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| deloop_core::Error::Io { path: dir.display().to_string(), source: e })?;
    let lambda = build_lambda(q)?;
    let gamma = build_gamma(&lambda)?;
    let m_q = build_m_alpha(&lambda, q)?;
    let ext = one_point_extension(&lambda, &m_q)?;

    let mut files = vec![
        ("lambda.json".to_string(), algebra_to_json(&lambda)),
        ("lambda_op.json".to_string(), algebra_to_json(&*lambda.opposite()?)),
        ("dual_numbers.json".to_string(), algebra_to_json(&build_dual_numbers())),
        (
            "gamma.json".to_string(),
            json!({
                "ambient": "lambda.json",
                "sub": "dual_numbers.json",
                "inclusion": gamma.inclusion().row_iter().map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            }),
        ),
        ("extension.json".to_string(), algebra_to_json(ext.algebra())),
        ("extension_op.json".to_string(), algebra_to_json(&*ext.algebra().opposite()?)),
        (
            "extension_simple.json".to_string(),
            module_to_json(&simple_at_extension_vertex(&ext), &AlgebraRef::Path("extension.json".into())),
        ),
    ];
    for a in sample_alphas(q) {
        let m = build_m_alpha(&lambda, &a)?;
        files.push((format!("m_{}.json", scalar_slug(&a)), module_to_json(&m, &AlgebraRef::Path("lambda.json".into()))));
    }
    files.sort_by(|a, b| a.0.cmp(&b.0));
    let mut written = Vec::new();
    for (name, v) in files {
        let path = dir.join(name);
        write_file(&path, &to_pretty(&v))?;
        written.push(path);
    }
    Ok(written)
}
