//! Reports: a serializable record per run, rendered as JSON or plain text.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub input: InputInfo,
    pub seed: u64,
    pub sections: Vec<Section>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InputInfo {
    pub name: String,
    pub dim: usize,
    /// Hex SHA-256 of the document bytes.
    pub sha256: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct LefschetzRowReport {
    pub k: usize,
    pub source_degree: u32,
    pub target_degree: u32,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub isomorphism: bool,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "section", rename_all = "snake_case")]
pub enum Section {
    Validation {
        jacobi: bool,
        /// 1-based triples where the Jacobi identity fails.
        jacobi_failures: Vec<[usize; 3]>,
        nilpotent: bool,
        nilpotency_class: Option<usize>,
        lower_central_series: Vec<usize>,
        derived_dim: usize,
    },
    Betti {
        max_degree: u32,
        betti: Vec<usize>,
        poincare_duality: bool,
        euler_characteristic: i64,
    },
    Symplectic {
        /// `document`, `search`
        source: &'static str,
        /// `symplectic`, `not-symplectic`, `none`, `exhausted`
        status: &'static str,
        omega: Option<String>,
        closed: Option<bool>,
        d_omega: Option<String>,
        rank: Option<usize>,
        trials: Option<usize>,
        reason: Option<String>,
    },
    Lefschetz {
        rows: Vec<LefschetzRowReport>,
        holds: bool,
        first_failure: Option<usize>,
    },
    Forcing {
        base: String,
        unknowns: usize,
        equations: usize,
        rank: usize,
        solution_dimension: usize,
        forced_zero: bool,
        /// Basis of admissible twists, each as rows of rational strings.
        solutions: Vec<Vec<Vec<String>>>,
        witness_verified: Option<bool>,
    },
    Twist {
        base: String,
        alpha: Vec<Vec<String>>,
        valid: bool,
        /// Generator `v` with `D^2 v != 0`, and the value.
        defect: Option<(String, String)>,
        obstruction: Option<String>,
        /// `(a_j, coefficient of a_j in the obstruction)`.
        eq1: Vec<(String, String)>,
        hamiltonian: Option<bool>,
    },
    Csplit {
        max_degree: u32,
        total: Vec<usize>,
        base: Vec<usize>,
        fiber: Vec<usize>,
        expected: Vec<usize>,
        additive: bool,
        untwisted: bool,
        tensor_product: bool,
        csplit: bool,
    },
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref()
        .map_or_else(|| "-".to_string(), ToString::to_string)
}

fn matrix(rows: &[Vec<String>]) -> String {
    rows.iter()
        .map(|r| r.join(","))
        .collect::<Vec<_>>()
        .join("; ")
}

impl Report {
    pub fn machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        let _ = writeln!(w, "{} {} {}", self.tool, self.version, self.command);
        let _ = writeln!(
            w,
            "input: {} (dim {}) sha256:{}",
            self.input.name, self.input.dim, self.input.sha256
        );
        let _ = writeln!(w, "seed: {}", self.seed);
        for s in &self.sections {
            let _ = writeln!(w);
            s.render(w);
        }
        out
    }
}

impl Section {
    fn render(&self, w: &mut String) {
        match self {
            Section::Validation {
                jacobi,
                jacobi_failures,
                nilpotent,
                nilpotency_class,
                lower_central_series,
                derived_dim,
            } => {
                let _ = writeln!(w, "[validation]");
                if *jacobi {
                    let _ = writeln!(w, "jacobi: ok");
                } else {
                    let triples: Vec<String> = jacobi_failures
                        .iter()
                        .map(|t| format!("({},{},{})", t[0], t[1], t[2]))
                        .collect();
                    let _ = writeln!(w, "jacobi: fails on {}", triples.join(" "));
                }
                let _ = writeln!(w, "nilpotent: {nilpotent}");
                let _ = writeln!(w, "nilpotency class: {}", opt(nilpotency_class));
                let _ = writeln!(
                    w,
                    "lower central series dims: {}",
                    join(lower_central_series)
                );
                let _ = writeln!(w, "derived subalgebra dim: {derived_dim}");
            }
            Section::Betti {
                max_degree,
                betti,
                poincare_duality,
                euler_characteristic,
            } => {
                let _ = writeln!(w, "[betti]");
                let _ = writeln!(w, "degrees 0..{max_degree}: {}", join(betti));
                let _ = writeln!(w, "poincare duality: {poincare_duality}");
                let _ = writeln!(w, "euler characteristic: {euler_characteristic}");
            }
            Section::Symplectic {
                source,
                status,
                omega,
                closed,
                d_omega,
                rank,
                trials,
                reason,
            } => {
                let _ = writeln!(w, "[symplectic]");
                let _ = writeln!(w, "source: {source}");
                let _ = writeln!(w, "status: {status}");
                if let Some(o) = omega {
                    let _ = writeln!(w, "omega: {o}");
                }
                if let Some(c) = closed {
                    let _ = writeln!(w, "closed: {c}");
                }
                if let Some(d) = d_omega {
                    let _ = writeln!(w, "d(omega): {d}");
                }
                if let Some(r) = rank {
                    let _ = writeln!(w, "rank: {r}");
                }
                if let Some(t) = trials {
                    let _ = writeln!(w, "trials: {t}");
                }
                if let Some(r) = reason {
                    let _ = writeln!(w, "reason: {r}");
                }
            }
            Section::Lefschetz {
                rows,
                holds,
                first_failure,
            } => {
                let _ = writeln!(w, "[hard lefschetz]");
                for r in rows {
                    let _ = writeln!(
                        w,
                        "k={} H^{} -> H^{}: dims {} -> {}, rank {}{}",
                        r.k,
                        r.source_degree,
                        r.target_degree,
                        r.source_dim,
                        r.target_dim,
                        r.rank,
                        if r.isomorphism { "" } else { "  FAILS" }
                    );
                }
                let _ = writeln!(w, "holds: {holds}");
                if let Some(k) = first_failure {
                    let _ = writeln!(w, "first failure: k={k}");
                }
            }
            Section::Forcing {
                base,
                unknowns,
                equations,
                rank,
                solution_dimension,
                forced_zero,
                solutions,
                witness_verified,
            } => {
                let _ = writeln!(w, "[forcing]");
                let _ = writeln!(w, "base: {base}");
                let _ = writeln!(
                    w,
                    "system: {equations} equations, {unknowns} unknowns, rank {rank}"
                );
                let _ = writeln!(w, "solution space dimension: {solution_dimension}");
                let _ = writeln!(w, "alpha forced to zero: {forced_zero}");
                for (p, s) in solutions.iter().enumerate() {
                    let _ = writeln!(w, "solution {}: {}", p + 1, matrix(s));
                }
                if let Some(v) = witness_verified {
                    let _ = writeln!(w, "witness verified: {v}");
                }
            }
            Section::Twist {
                base,
                alpha,
                valid,
                defect,
                obstruction,
                eq1,
                hamiltonian,
            } => {
                let _ = writeln!(w, "[twist]");
                let _ = writeln!(w, "base: {base}");
                let _ = writeln!(w, "alpha: {}", matrix(alpha));
                let _ = writeln!(w, "D^2 = 0: {valid}");
                if let Some((g, value)) = defect {
                    let _ = writeln!(w, "witness: D^2 {g} = {value}");
                }
                if let Some(o) = obstruction {
                    let _ = writeln!(w, "D(omega): {o}");
                }
                for (g, e) in eq1 {
                    let _ = writeln!(w, "{g}-coefficient: {e}");
                }
                if let Some(h) = hamiltonian {
                    let _ = writeln!(w, "hamiltonian: {h}");
                }
            }
            Section::Csplit {
                max_degree,
                total,
                base,
                fiber,
                expected,
                additive,
                untwisted,
                tensor_product,
                csplit,
            } => {
                let _ = writeln!(w, "[csplit]");
                let _ = writeln!(w, "total betti 0..{max_degree}: {}", join(total));
                let _ = writeln!(w, "base betti: {}", join(base));
                let _ = writeln!(w, "fiber betti: {}", join(fiber));
                let _ = writeln!(w, "base (x) fiber: {}", join(expected));
                let _ = writeln!(w, "additive splitting: {additive}");
                let _ = writeln!(w, "untwisted: {untwisted}");
                let _ = writeln!(w, "tensor product dga: {tensor_product}");
                let _ = writeln!(w, "c-splits: {csplit}");
            }
        }
    }
}
