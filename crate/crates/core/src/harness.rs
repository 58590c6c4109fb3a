//! Run records, batch manifests and the comparison summary behind the CLI.

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::upper_candidates;
use crate::error::{Error, Result, SolveError};
use crate::exact::{bds_solve, ExactConfig, Proof};
use crate::graph::{parse_dimacs, random_connected, Graph};
use crate::greedy::greedy_solve;
use crate::heuristic::{dbs_solve, BaseLimit, DbsConfig};
use crate::oracle::brute_force;

pub const CSV_HEADER: [&str; 14] = [
    "instance",
    "n",
    "m",
    "density",
    "algorithm",
    "seed",
    "size",
    "L",
    "ub_leaf",
    "ub_maxdeg",
    "elapsed_ms",
    "proof",
    "alpha",
    "counter",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Greedy,
    Bds,
    Dbs,
    Oracle,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [Self::Greedy, Self::Bds, Self::Dbs, Self::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Self::Greedy => "greedy",
            Self::Bds => "bds",
            Self::Dbs => "dbs",
            Self::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algorithm `{s}` (expected greedy, bds, dbs or oracle)"))
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SolverConfig {
    pub seed: u64,
    pub time_limit_s: Option<f64>,
    pub node_cap: Option<u64>,
    pub max_bases_per_level: Option<u64>,
    pub alpha: Option<f64>,
    pub pruning: bool,
}

impl SolverConfig {
    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.time_limit_s.is_some_and(|t| !t.is_finite() || t <= 0.0) {
            return Err("time limit must be a positive number of seconds".into());
        }
        if self.node_cap == Some(0) || self.max_bases_per_level == Some(0) {
            return Err("budgets must be positive".into());
        }
        if let Some(a) = self.alpha {
            if !(a > 0.0 && a < 1.0) {
                return Err(format!("alpha must lie strictly between 0 and 1, got {a}"));
            }
        }
        Ok(())
    }

    fn time_limit(&self) -> Option<Duration> {
        self.time_limit_s.map(Duration::from_secs_f64)
    }

    pub fn exact(&self) -> ExactConfig {
        ExactConfig {
            time_limit: self.time_limit(),
            node_cap: self.node_cap,
            pruning: self.pruning,
        }
    }

    pub fn dbs(&self) -> DbsConfig {
        DbsConfig {
            alpha: self.alpha,
            seed: self.seed,
            max_bases_per_level: self
                .max_bases_per_level
                .map_or(BaseLimit::Auto, BaseLimit::Fixed),
            time_limit: self.time_limit(),
        }
    }
}

/// One solver run on one instance.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunRecord {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub density: f64,
    pub algorithm: Algorithm,
    pub seed: u64,
    pub size: Option<usize>,
    #[serde(rename = "L")]
    pub lower: u64,
    pub ub_leaf: u64,
    pub ub_maxdeg: u64,
    pub elapsed_ms: f64,
    /// `Exact`, `UpperBoundOnly`, or `error: <message>`.
    pub proof: String,
    pub alpha: Option<f64>,
    /// Enumeration nodes (bds), bases (dbs), subsets (oracle), members (greedy).
    pub counter: u64,
    /// Sorted 1-based ids.
    pub witness: Vec<usize>,
}

impl RunRecord {
    pub fn is_exact(&self) -> bool {
        self.proof == "Exact"
    }

    pub fn budget_exhausted(&self) -> bool {
        self.algorithm == Algorithm::Bds && self.proof == "UpperBoundOnly"
    }

    pub fn csv_row(&self) -> [String; 14] {
        [
            self.instance.clone(),
            self.n.to_string(),
            self.m.to_string(),
            format!("{:.4}", self.density),
            self.algorithm.to_string(),
            self.seed.to_string(),
            self.size.map(|s| s.to_string()).unwrap_or_default(),
            self.lower.to_string(),
            self.ub_leaf.to_string(),
            self.ub_maxdeg.to_string(),
            format!("{:.3}", self.elapsed_ms),
            self.proof.clone(),
            self.alpha.map(|a| format!("{a:.4}")).unwrap_or_default(),
            self.counter.to_string(),
        ]
    }

    /// Same record with the timing column zeroed, for reproducibility checks.
    pub fn without_timing(&self) -> Self {
        Self {
            elapsed_ms: 0.0,
            ..self.clone()
        }
    }
}

fn proof_label(proof: Proof) -> String {
    format!("{proof:?}")
}

fn base_record(g: &Graph, instance: &str, algorithm: Algorithm, cfg: &SolverConfig) -> RunRecord {
    let bounds = upper_candidates(g, None);
    RunRecord {
        instance: instance.to_string(),
        n: g.n(),
        m: g.m(),
        density: g.density(),
        algorithm,
        seed: cfg.seed,
        size: None,
        lower: bounds.lower,
        ub_leaf: bounds.ub_leaf,
        ub_maxdeg: bounds.ub_maxdeg,
        elapsed_ms: 0.0,
        proof: String::new(),
        alpha: None,
        counter: 0,
        witness: Vec::new(),
    }
}

/// Runs one solver; `elapsed_ms` covers the solve call only.
pub fn run_solver(
    g: &Graph,
    instance: &str,
    algorithm: Algorithm,
    cfg: &SolverConfig,
) -> std::result::Result<RunRecord, SolveError> {
    let mut record = base_record(g, instance, algorithm, cfg);
    let heuristic_proof = |size: usize| {
        if size as u64 == record.lower {
            Proof::Exact
        } else {
            Proof::UpperBoundOnly
        }
    };
    let start = Instant::now();
    let (size, proof, counter, witness, alpha) = match algorithm {
        Algorithm::Greedy => {
            let s = greedy_solve(g);
            let n = s.len();
            (n, heuristic_proof(n), n as u64, s.external_ids(), None)
        }
        Algorithm::Bds => {
            let out = bds_solve(g, &cfg.exact());
            (
                out.gamma,
                out.proof,
                out.stats.nodes_visited,
                out.witness.external_ids(),
                None,
            )
        }
        Algorithm::Dbs => {
            let out = dbs_solve(g, &cfg.dbs())?;
            (
                out.size,
                heuristic_proof(out.size),
                out.stats.bases_tried(),
                out.witness.external_ids(),
                Some(out.stats.alpha),
            )
        }
        Algorithm::Oracle => {
            let out = brute_force(g, None)?;
            (
                out.gamma,
                Proof::Exact,
                out.subsets_tested,
                out.witness.iter().map(|v| v + 1).collect(),
                None,
            )
        }
    };
    record.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    record.size = Some(size);
    record.proof = proof_label(proof);
    record.counter = counter;
    record.witness = witness;
    record.alpha = alpha;
    Ok(record)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceSource {
    Generated { n: usize, m: usize, seed: u64 },
    File(PathBuf),
}

impl InstanceSource {
    pub fn id(&self) -> String {
        match self {
            Self::Generated { n, m, seed } => format!("n{n}_m{m}_s{seed}"),
            Self::File(path) => path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string()),
        }
    }

    pub fn load(&self) -> Result<Graph> {
        match self {
            Self::Generated { n, m, seed } => Ok(random_connected(*n, *m, *seed)?),
            Self::File(path) => Ok(parse_dimacs(&std::fs::read(path)?)?),
        }
    }
}

/// Parses `n m seed` lines (commas or whitespace), skipping blanks, `#`
/// comments and a leading `n,m,seed` header.
pub fn parse_manifest(text: &str) -> Result<Vec<InstanceSource>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|f| !f.is_empty())
            .collect();
        if out.is_empty() && fields == ["n", "m", "seed"] {
            continue;
        }
        let bad = |reason: &str| Error::Manifest {
            line: idx + 1,
            reason: reason.to_string(),
        };
        let [n, m, seed] = fields[..] else {
            return Err(bad("expected `n m seed`"));
        };
        out.push(InstanceSource::Generated {
            n: n.parse().map_err(|_| bad("bad n"))?,
            m: m.parse().map_err(|_| bad("bad m"))?,
            seed: seed.parse().map_err(|_| bad("bad seed"))?,
        });
    }
    Ok(out)
}

/// Every regular file in `dir`, sorted by name.
pub fn directory_instances(dir: &Path) -> Result<Vec<InstanceSource>> {
    let mut paths = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let path = entry?.path();
        if path.is_file() {
            paths.push(path);
        }
    }
    paths.sort();
    Ok(paths.into_iter().map(InstanceSource::File).collect())
}

/// Aggregates over a finished batch.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct BenchSummary {
    /// dbs runs on instances with a proven optimum (exact bds or oracle).
    pub dbs_compared: usize,
    pub dbs_optimal: usize,
    /// Mean `|dbs| − γ` over the non-optimal compared runs.
    pub mean_gap: Option<f64>,
    /// Mean `|dbs| / γ` over the non-optimal compared runs.
    pub mean_ratio: Option<f64>,
    /// Mean elapsed milliseconds per algorithm, in first-seen order.
    pub mean_elapsed_ms: Vec<(Algorithm, f64)>,
}

impl BenchSummary {
    pub fn dbs_optimal_fraction(&self) -> Option<f64> {
        (self.dbs_compared > 0).then(|| self.dbs_optimal as f64 / self.dbs_compared as f64)
    }

    pub fn from_rows(rows: &[RunRecord]) -> Self {
        let mut summary = Self::default();
        let mut gaps = Vec::new();
        let mut ratios = Vec::new();
        for dbs in rows.iter().filter(|r| r.algorithm == Algorithm::Dbs) {
            let optimum = rows
                .iter()
                .filter(|r| r.instance == dbs.instance && r.is_exact())
                .filter(|r| matches!(r.algorithm, Algorithm::Bds | Algorithm::Oracle))
                .find_map(|r| r.size);
            let (Some(gamma), Some(size)) = (optimum, dbs.size) else {
                continue;
            };
            summary.dbs_compared += 1;
            if size == gamma {
                summary.dbs_optimal += 1;
            } else {
                gaps.push(size as f64 - gamma as f64);
                ratios.push(size as f64 / gamma as f64);
            }
        }
        let mean = |xs: &[f64]| (!xs.is_empty()).then(|| xs.iter().sum::<f64>() / xs.len() as f64);
        summary.mean_gap = mean(&gaps);
        summary.mean_ratio = mean(&ratios);

        let mut order: Vec<Algorithm> = Vec::new();
        for r in rows {
            if !order.contains(&r.algorithm) {
                order.push(r.algorithm);
            }
        }
        for algo in order {
            let times: Vec<f64> = rows
                .iter()
                .filter(|r| r.algorithm == algo && r.size.is_some())
                .map(|r| r.elapsed_ms)
                .collect();
            if let Some(t) = mean(&times) {
                summary.mean_elapsed_ms.push((algo, t));
            }
        }
        summary
    }

    /// Footer lines, each prefixed with `# `.
    pub fn footer(&self) -> Vec<String> {
        let opt = |x: Option<f64>| x.map_or("NA".to_string(), |v| format!("{v:.4}"));
        let mut lines = vec![
            format!(
                "# dbs_optimal_fraction {} ({}/{})",
                opt(self.dbs_optimal_fraction()),
                self.dbs_optimal,
                self.dbs_compared
            ),
            format!("# dbs_mean_gap_nonoptimal {}", opt(self.mean_gap)),
            format!("# dbs_mean_ratio_nonoptimal {}", opt(self.mean_ratio)),
        ];
        for (algo, t) in &self.mean_elapsed_ms {
            lines.push(format!("# mean_elapsed_ms {algo} {t:.3}"));
        }
        for (i, (a, ta)) in self.mean_elapsed_ms.iter().enumerate() {
            for (b, tb) in &self.mean_elapsed_ms[i + 1..] {
                let ratio = if *tb > 0.0 { opt(Some(ta / tb)) } else { "NA".into() };
                lines.push(format!("# speed_ratio {a}/{b} {ratio}"));
            }
        }
        lines
    }
}

#[derive(Clone, Debug)]
pub struct BenchReport {
    pub rows: Vec<RunRecord>,
    pub summary: BenchSummary,
}

/// Runs every `(instance, algorithm)` pair, in parallel, returning rows in
/// manifest order. Failures land in the row's `proof` column.
pub fn run_bench(
    instances: &[InstanceSource],
    algorithms: &[Algorithm],
    cfg: &SolverConfig,
) -> BenchReport {
    let rows: Vec<RunRecord> = instances
        .par_iter()
        .flat_map_iter(|source| {
            let id = source.id();
            let loaded = source.load();
            algorithms
                .iter()
                .map(|&algo| match &loaded {
                    Ok(g) => run_solver(g, &id, algo, cfg).unwrap_or_else(|e| {
                        let mut r = base_record(g, &id, algo, cfg);
                        r.proof = format!("error: {e}");
                        r
                    }),
                    Err(e) => failed_record(&id, algo, cfg, e),
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let summary = BenchSummary::from_rows(&rows);
    BenchReport { rows, summary }
}

fn failed_record(id: &str, algorithm: Algorithm, cfg: &SolverConfig, e: &Error) -> RunRecord {
    RunRecord {
        instance: id.to_string(),
        n: 0,
        m: 0,
        density: 0.0,
        algorithm,
        seed: cfg.seed,
        size: None,
        lower: 0,
        ub_leaf: 0,
        ub_maxdeg: 0,
        elapsed_ms: 0.0,
        proof: format!("error: {e}"),
        alpha: None,
        counter: 0,
        witness: Vec::new(),
    }
}

pub fn write_csv_header<W: Write>(out: &mut csv::Writer<W>) -> Result<()> {
    out.write_record(CSV_HEADER)?;
    Ok(())
}

/// Header, one row per record and, when any rows exist, the summary footer.
pub fn write_bench_csv<W: Write>(out: W, report: &BenchReport) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    write_csv_header(&mut writer)?;
    for row in &report.rows {
        writer.write_record(row.csv_row())?;
    }
    writer.flush()?;
    let mut inner = writer.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    if !report.rows.is_empty() {
        for line in report.summary.footer() {
            writeln!(inner, "{line}")?;
        }
    }
    Ok(())
}

/// Appends `record` to a CSV file, writing the header first if the file is new or empty.
pub fn append_csv(path: &Path, record: &RunRecord) -> Result<()> {
    let fresh = std::fs::metadata(path).map_or(true, |m| m.len() == 0);
    let file = std::fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)?;
    let mut writer = csv::Writer::from_writer(file);
    if fresh {
        write_csv_header(&mut writer)?;
    }
    writer.write_record(record.csv_row())?;
    writer.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn algorithm_names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
        assert!("ilp".parse::<Algorithm>().is_err());
    }

    #[test]
    fn config_validation() {
        assert!(SolverConfig::default().validate().is_ok());
        for bad in [
            SolverConfig { time_limit_s: Some(0.0), ..Default::default() },
            SolverConfig { node_cap: Some(0), ..Default::default() },
            SolverConfig { alpha: Some(1.0), ..Default::default() },
            SolverConfig { time_limit_s: Some(f64::INFINITY), ..Default::default() },
        ] {
            assert!(bad.validate().is_err());
        }
    }

    #[test]
    fn bds_record_on_path() {
        let r = run_solver(&path(4), "p4", Algorithm::Bds, &SolverConfig::default()).unwrap();
        assert_eq!(r.size, Some(2));
        assert!(r.is_exact());
        assert_eq!((r.lower, r.ub_leaf, r.ub_maxdeg), (2, 2, 2));
        assert_eq!(r.witness, vec![2, 3]);
        assert_eq!(r.csv_row()[3], "0.5000");
    }

    #[test]
    fn manifest_parsing() {
        let text = "n,m,seed\n# comment\n10 20 1\n12,30,2  # trailing\n\n";
        assert_eq!(
            parse_manifest(text).unwrap(),
            vec![
                InstanceSource::Generated { n: 10, m: 20, seed: 1 },
                InstanceSource::Generated { n: 12, m: 30, seed: 2 },
            ]
        );
        assert!(matches!(
            parse_manifest("10 20"),
            Err(Error::Manifest { line: 1, .. })
        ));
        assert!(parse_manifest("").unwrap().is_empty());
    }

    #[test]
    fn empty_bench_is_header_only() {
        let report = run_bench(&[], &Algorithm::ALL, &SolverConfig::default());
        let mut buf = Vec::new();
        write_bench_csv(&mut buf, &report).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "instance,n,m,density,algorithm,seed,size,L,ub_leaf,ub_maxdeg,elapsed_ms,proof,alpha,counter\n"
        );
    }

    #[test]
    fn bench_rows_keep_order_and_record_failures() {
        let sources = vec![
            InstanceSource::Generated { n: 10, m: 9, seed: 1 },
            InstanceSource::Generated { n: 30, m: 87, seed: 2 },
            InstanceSource::Generated { n: 5, m: 20, seed: 3 },
        ];
        let algos = [Algorithm::Oracle, Algorithm::Dbs];
        let report = run_bench(&sources, &algos, &SolverConfig::default());
        let ids: Vec<(&str, Algorithm)> = report
            .rows
            .iter()
            .map(|r| (r.instance.as_str(), r.algorithm))
            .collect();
        assert_eq!(
            ids,
            vec![
                ("n10_m9_s1", Algorithm::Oracle),
                ("n10_m9_s1", Algorithm::Dbs),
                ("n30_m87_s2", Algorithm::Oracle),
                ("n30_m87_s2", Algorithm::Dbs),
                ("n5_m20_s3", Algorithm::Oracle),
                ("n5_m20_s3", Algorithm::Dbs),
            ]
        );
        assert!(report.rows[2].proof.starts_with("error:"));
        assert_eq!(report.rows[2].n, 30);
        assert!(report.rows[4].proof.starts_with("error:"));
        assert_eq!(report.summary.dbs_compared, 1);
    }

    #[test]
    fn density_column() {
        for (n, density) in [(20usize, 0.2), (20, 0.5), (20, 0.8)] {
            let m = (density * (n * (n - 1) / 2) as f64).round() as usize;
            let g = random_connected(n, m, 1).unwrap();
            let r = run_solver(&g, "x", Algorithm::Greedy, &SolverConfig::default()).unwrap();
            let expected = 2.0 * m as f64 / (n * (n - 1)) as f64;
            assert!((r.density - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn summary_statistics() {
        let mk = |inst: &str, algo, size, proof: &str, ms| RunRecord {
            instance: inst.into(),
            n: 10,
            m: 10,
            density: 0.2,
            algorithm: algo,
            seed: 0,
            size: Some(size),
            lower: 1,
            ub_leaf: 9,
            ub_maxdeg: 7,
            elapsed_ms: ms,
            proof: proof.into(),
            alpha: None,
            counter: 0,
            witness: vec![],
        };
        let rows = vec![
            mk("a", Algorithm::Bds, 3, "Exact", 4.0),
            mk("a", Algorithm::Dbs, 3, "UpperBoundOnly", 2.0),
            mk("b", Algorithm::Bds, 4, "Exact", 8.0),
            mk("b", Algorithm::Dbs, 6, "UpperBoundOnly", 2.0),
            mk("c", Algorithm::Bds, 4, "UpperBoundOnly", 8.0),
            mk("c", Algorithm::Dbs, 5, "UpperBoundOnly", 2.0),
        ];
        let s = BenchSummary::from_rows(&rows);
        assert_eq!((s.dbs_compared, s.dbs_optimal), (2, 1));
        assert_eq!(s.dbs_optimal_fraction(), Some(0.5));
        assert_eq!(s.mean_gap, Some(2.0));
        assert_eq!(s.mean_ratio, Some(1.5));
        let footer = s.footer();
        assert!(footer.contains(&"# speed_ratio bds/dbs 3.3333".to_string()));
    }
}
