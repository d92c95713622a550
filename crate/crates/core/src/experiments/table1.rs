use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::assignment::{assign_bidirectional_cds, assign_bidirectional_random, AssignmentPlan};
use crate::error::Result;
use crate::exact::{min_color_cut_exact, ExactOptions};
use crate::graph::Graph;

use super::generate::{derive_seed, gen_connected_erdos_renyi};

const MAX_ATTEMPTS: usize = 10_000;

/// Two interdependent Erdos-Renyi networks evaluated under the CDS-based
/// and random bidirectional assignments.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub n1: usize,
    pub n2: usize,
    pub p1: f64,
    pub p2: f64,
    pub ns1: usize,
    pub ns2: usize,
    pub instances: usize,
    pub seed: u64,
    /// Budget per exact cut evaluation.
    pub budget: Option<Duration>,
    /// Instances evaluated concurrently.
    pub workers: usize,
}

impl ExperimentConfig {
    pub fn table1(p: f64, seed: u64) -> Self {
        ExperimentConfig {
            n1: 50,
            n2: 75,
            p1: p,
            p2: p,
            ns1: 3,
            ns2: 2,
            instances: 10,
            seed,
            budget: Some(Duration::from_secs(600)),
            workers: 1,
        }
    }
}

/// Supply node connectivity of one network under one plan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cell {
    /// Size of the best cut found.
    pub value: usize,
    /// Proven lower bound; equals `value` unless the budget ran out.
    pub lower: usize,
}

impl Cell {
    pub fn is_exact(&self) -> bool {
        self.value == self.lower
    }
}

/// One network of one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideResult {
    pub edges: usize,
    pub k: usize,
    /// `min(k * n_s, n_other)`.
    pub cap: usize,
    pub cds: Cell,
    pub random: Cell,
    /// Rejected disconnected samples before this graph.
    pub retries: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceRow {
    pub instance: usize,
    pub g1: SideResult,
    pub g2: SideResult,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SideMeans {
    pub k: f64,
    pub cap: f64,
    pub cds: f64,
    pub random: f64,
}

#[derive(Clone, Debug)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    pub rows: Vec<InstanceRow>,
    pub g1: SideMeans,
    pub g2: SideMeans,
    /// Cells whose evaluation ran out of budget.
    pub timeouts: usize,
    /// Wall-clock time; not part of the rendered report.
    pub elapsed: Duration,
}

impl ExperimentReport {
    pub fn cell_count(&self) -> usize {
        4 * self.rows.len()
    }

    pub fn render_text(&self) -> String {
        let c = &self.config;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "n1={} p1={} ns1={} n2={} p2={} ns2={} instances={} seed={}",
            c.n1, c.p1, c.ns1, c.n2, c.p2, c.ns2, c.instances, c.seed
        );
        let _ = writeln!(
            out,
            "graph  n   p     k     n_s  k_s_max  k_s_cds  k_s_random"
        );
        for (name, n, p, ns, m) in [
            ("G1", c.n1, c.p1, c.ns1, &self.g1),
            ("G2", c.n2, c.p2, c.ns2, &self.g2),
        ] {
            let _ = writeln!(
                out,
                "{name:<6} {n:<3} {p:<5} {:<5.1} {ns:<4} {:<8.1} {:<8.1} {:.1}",
                m.k, m.cap, m.cds, m.random
            );
        }
        let _ = writeln!(
            out,
            "timeouts {} of {} cells",
            self.timeouts,
            self.cell_count()
        );
        let _ = writeln!(out, "instance  k1 cap1 cds1 rnd1  k2 cap2 cds2 rnd2");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:<9} {:>3} {:>4} {:>4} {:>4} {:>3} {:>4} {:>4} {:>4}",
                r.instance,
                r.g1.k,
                r.g1.cap,
                show(r.g1.cds),
                show(r.g1.random),
                r.g2.k,
                r.g2.cap,
                show(r.g2.cds),
                show(r.g2.random)
            );
        }
        out
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::from(
            "instance,k1,cap1,cds1,cds1_lower,random1,random1_lower,retries1,\
             k2,cap2,cds2,cds2_lower,random2,random2_lower,retries2\n",
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                r.instance,
                r.g1.k,
                r.g1.cap,
                r.g1.cds.value,
                r.g1.cds.lower,
                r.g1.random.value,
                r.g1.random.lower,
                r.g1.retries,
                r.g2.k,
                r.g2.cap,
                r.g2.cds.value,
                r.g2.cds.lower,
                r.g2.random.value,
                r.g2.random.lower,
                r.g2.retries
            );
        }
        let (a, b) = (&self.g1, &self.g2);
        let _ = writeln!(
            out,
            "mean,{},{},{},,{},,,{},{},{},,{},,",
            a.k, a.cap, a.cds, a.random, b.k, b.cap, b.cds, b.random
        );
        out
    }
}

fn show(c: Cell) -> String {
    if c.is_exact() {
        c.value.to_string()
    } else {
        format!("{}-{}", c.lower, c.value)
    }
}

pub fn run_table1(config: &ExperimentConfig) -> Result<ExperimentReport> {
    let start = Instant::now();
    let opts = ExactOptions {
        budget: config.budget,
        workers: 1,
    };
    let run = |i: usize| run_instance(config, &opts, i);
    let rows: Vec<InstanceRow> = if config.workers > 1 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
            .expect("thread pool")
            .install(|| {
                (0..config.instances)
                    .into_par_iter()
                    .map(run)
                    .collect::<Result<_>>()
            })?
    } else {
        (0..config.instances).map(run).collect::<Result<_>>()?
    };
    let means = |side: fn(&InstanceRow) -> &SideResult| {
        let n = rows.len().max(1) as f64;
        let sum =
            |f: fn(&SideResult) -> usize| rows.iter().map(|r| f(side(r)) as f64).sum::<f64>() / n;
        SideMeans {
            k: sum(|s| s.k),
            cap: sum(|s| s.cap),
            cds: sum(|s| s.cds.value),
            random: sum(|s| s.random.value),
        }
    };
    let g1 = means(|r| &r.g1);
    let g2 = means(|r| &r.g2);
    let timeouts = rows
        .iter()
        .flat_map(|r| [r.g1.cds, r.g1.random, r.g2.cds, r.g2.random])
        .filter(|c| !c.is_exact())
        .count();
    Ok(ExperimentReport {
        config: config.clone(),
        rows,
        g1,
        g2,
        timeouts,
        elapsed: start.elapsed(),
    })
}

fn run_instance(config: &ExperimentConfig, opts: &ExactOptions, i: usize) -> Result<InstanceRow> {
    let (g1, retries1) = gen_connected_erdos_renyi(
        config.n1,
        config.p1,
        derive_seed(config.seed, i, 1),
        MAX_ATTEMPTS,
    )?;
    let (g2, retries2) = gen_connected_erdos_renyi(
        config.n2,
        config.p2,
        derive_seed(config.seed, i, 2),
        MAX_ATTEMPTS,
    )?;
    let (cds1, cds2) = assign_bidirectional_cds(&g1, &g2, config.ns1, config.ns2)?;
    let (rnd1, rnd2) = assign_bidirectional_random(
        &g1,
        &g2,
        config.ns1,
        config.ns2,
        derive_seed(config.seed, i, 3),
    )?;
    let side = |g: &Graph,
                other: &Graph,
                ns: usize,
                cds: &AssignmentPlan,
                rnd: &AssignmentPlan,
                retries| {
        let (k, _) = g.node_connectivity()?;
        Ok::<_, crate::Error>(SideResult {
            edges: g.edge_count(),
            k,
            cap: (k * ns).min(other.node_count()),
            cds: evaluate(g, other, cds, opts)?,
            random: evaluate(g, other, rnd, opts)?,
            retries,
        })
    };
    Ok(InstanceRow {
        instance: i,
        g1: side(&g1, &g2, config.ns1, &cds1, &rnd1, retries1)?,
        g2: side(&g2, &g1, config.ns2, &cds2, &rnd2, retries2)?,
    })
}

/// Exact supply node connectivity of `demand` under `plan`.
pub fn evaluate(
    demand: &Graph,
    supply: &Graph,
    plan: &AssignmentPlan,
    opts: &ExactOptions,
) -> Result<Cell> {
    let colored = plan.system(demand, Some(supply))?.transform().colored;
    let r = min_color_cut_exact(&colored, opts)?;
    Ok(Cell {
        value: r.value,
        lower: r.lower_bound,
    })
}
