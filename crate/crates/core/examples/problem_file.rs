//! Reading a JSON problem file and driving the command line in-process.

use leibcoh::problem::Problem;

const PROBLEM: &str = r#"{
  "field": {"type": "rational"},
  "algebra": {"dim": 3, "brackets": [{"i": 1, "j": 3, "value": [0, 1, 0]},
                                     {"i": 3, "j": 3, "value": [1, 0, 0]}]},
  "group": {"order": 2, "table": [[1, 2], [2, 1]]},
  "action": {"matrices": [[[1, 0, 0], [0, 1, 0], [0, 0, 1]],
                          [[1, 0, 0], [0, -1, 0], [0, 0, -1]]]},
  "coefficients": "coset-functions",
  "max_degree": 3
}"#;

fn main() -> leibcoh::Result<()> {
    let p = Problem::from_json(PROBLEM)?;
    println!("parsed: dim {}, field {}, coefficient violations {}", p.algebra.dim(), p.field, p.coefficients().check().len());

    let path = std::env::temp_dir().join("leibcoh_lambda6_z2.json");
    std::fs::write(&path, PROBLEM).expect("temp dir is writable");
    let out = leibcoh::cli::run(["leibcoh", "cohomology", "--equivariant", path.to_str().expect("utf-8 path")]);
    print!("{}", out.stdout);
    println!("exit code {}", out.code);

    let bad = leibcoh::cli::run(["leibcoh", "--catalog", "lambda6", "zinbiel-check", "--degrees", "0", "1", "1"]);
    print!("{}", bad.stderr);
    println!("exit code {}", bad.code);
    Ok(())
}
