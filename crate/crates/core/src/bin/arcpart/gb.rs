//! `arcpart gb`: supplies the iterated derivatives of the chosen seed up to
//! the weight bound, runs the truncated Buchberger completion, compares the
//! initial ideal against the expected monomial pattern, and emits the basis
//! certificate together with a per-weight dimension table (pattern count,
//! standard monomials of the computed initial ideal, rank oracle).

use std::path::PathBuf;

use clap::ValueEnum;
use num_bigint::BigUint;
use serde_json::json;

use arcpart::dimension::{quotient_graded_dim, standard_monomial_count, x_variables, xy_variables};
use arcpart::groebner::buchberger_truncated;
use arcpart::hilbert::IdealPattern;
use arcpart::polyring::{f_x2, f_xy, Monomial, MonomialOrder, Polynomial, Variable};

use crate::report::{Format, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Ideal {
    /// The double-point ideal generated by x_1^2 and its derivatives.
    X2,
    /// The node ideal generated by x_1 y_1 and its derivatives.
    Xy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Wlex,
    Wrevlex,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long, value_enum)]
    pub ideal: Ideal,
    #[arg(long, value_enum)]
    pub order: Order,
    /// Weight truncation bound (defaults follow the ideal: 9 for x2, 8 for xy).
    #[arg(long)]
    pub weight_bound: Option<u64>,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(args: &Args) -> anyhow::Result<bool> {
    let w = args.weight_bound.unwrap_or(match args.ideal {
        Ideal::X2 => 9,
        Ideal::Xy => 8,
    });
    anyhow::ensure!(w >= 2, "weight bound must be >= 2");

    let ord = match args.order {
        Order::Wlex => MonomialOrder::WeightedLex,
        Order::Wrevlex => MonomialOrder::WeightedRevlex,
    };
    let (gens, vars, pattern, conjectural): (Vec<Polynomial>, Vec<Variable>, IdealPattern, bool) =
        match (args.ideal, args.order) {
            (Ideal::X2, Order::Wrevlex) => (
                (2..=w as u32).map(|n| f_x2(n).unwrap()).collect(),
                x_variables(w),
                IdealPattern::Gap2 { k: 1 },
                false,
            ),
            (Ideal::X2, Order::Wlex) => (
                (2..=w as u32).map(|n| f_x2(n).unwrap()).collect(),
                x_variables(w),
                IdealPattern::SizeVsSmallest { j: 1 },
                true,
            ),
            (Ideal::Xy, Order::Wrevlex) => (
                (2..=w as u32).map(|n| f_xy(n).unwrap()).collect(),
                xy_variables(w),
                IdealPattern::Node { n0: 1 },
                false,
            ),
            (Ideal::Xy, Order::Wlex) => {
                anyhow::bail!("unsupported combination: no expected pattern for the node ideal under wlex");
            }
        };

    let mut report = Report::new(
        "gb",
        json!({
            "ideal": format!("{:?}", args.ideal).to_lowercase(),
            "order": ord.name(),
            "weight_bound": w,
            "expected_pattern": pattern.name(),
            "conjectural": conjectural,
        }),
        &["weight", "dim_pattern", "dim_initial", "dim_rank_oracle", "agree"],
    );

    let basis = buchberger_truncated(&gens, ord, w)?;
    let initial = basis.initial_ideal();

    let mut got: Vec<Monomial> = initial.generators().to_vec();
    got.sort_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| a.cmp(b)));
    let expected = pattern.minimal_generators_up_to(w);
    let generators_match = got == expected;

    let mut dims_agree = true;
    let mut initial_matches_oracle = true;
    for weight in 0..=w {
        let dim_pattern = pattern.standard_monomial_dim(weight);
        let dim_initial = standard_monomial_count(initial.generators(), &vars, weight);
        let dim_oracle = quotient_graded_dim(&gens, &vars, weight);
        let agree =
            dim_pattern == BigUint::from(dim_initial) && dim_initial == dim_oracle;
        dims_agree &= agree;
        initial_matches_oracle &= dim_initial == dim_oracle;
        report.push_row(json!({
            "weight": weight,
            "dim_pattern": dim_pattern.to_string(),
            "dim_initial": dim_initial,
            "dim_rank_oracle": dim_oracle,
            "agree": agree,
        }));
    }

    report.attach("certificate", serde_json::to_value(basis.certificate())?);
    report.attach(
        "initial_ideal",
        json!({
            "generators": got.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            "expected": expected.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            "match": generators_match,
        }),
    );

    if conjectural {
        report.finding(if generators_match {
            format!(
                "conjectural: the wlex initial ideal of [x1^2] matches the \
                 size-vs-smallest pattern up to weight {w} (the pattern is a guess, \
                 verified here at truncation only)"
            )
        } else {
            format!(
                "conjectural pattern MISMATCH at weight bound {w}: this is a finding \
                 about the guessed pattern, not an implementation failure; the \
                 dimension-oracle column distinguishes the two"
            )
        });
        // A conjecture mismatch is reported, not failed; the run passes as
        // long as the computed initial ideal agrees with the rank oracle.
        report.set_pass(initial_matches_oracle);
    } else {
        report.set_pass(generators_match && dims_agree);
    }

    report.emit(args.format, &args.out)
}
