//! `arcpart partitions`: enumerates or counts one partition family at one
//! weight. Listings use the documented JSON shapes
//! (`{"n": .., "parts": [..]}`, colored parts as `{"v": .., "c": "b"|"r"}`).

use std::path::PathBuf;

use clap::ValueEnum;
use serde_json::json;

use arcpart::partitions::{
    self, count_2c_left, count_2c_right, count_2c_right_min_filtered, count_gap2, count_mod5_14,
    count_minpart_maxsize, count_size_le_smallest, ColoredFamily, Family,
};

use crate::report::{Format, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Unrestricted,
    /// Parts >= l, at most s parts.
    MinpartMaxsize,
    /// No equal or consecutive parts, minimum part k.
    Gap2,
    /// Parts congruent to 1 or 4 mod 5.
    Mod5,
    /// Parts >= k, size <= smallest part - (k-1).
    SizeLeSmallest,
    /// Two colors on 1..2j-1, red only above.
    TwoColorLeft,
    /// Blue count < smallest red - (j-1), all values two-colored.
    TwoColorRight,
    /// Same constraint restricted to parts >= j.
    TwoColorRightMinFiltered,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Target weight.
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_enum)]
    pub family: FamilyName,
    /// Minimum part (minpart-maxsize).
    #[arg(long, default_value_t = 1)]
    pub l: u64,
    /// Maximum size (minpart-maxsize).
    #[arg(long, default_value_t = usize::MAX)]
    pub s: usize,
    /// Shift/minimum-part parameter (gap2, size-le-smallest).
    #[arg(long, default_value_t = 1)]
    pub k: u64,
    /// Color threshold (two-color families).
    #[arg(long, default_value_t = 1)]
    pub j: u64,
    /// Only report the count (dynamic programming), skip the listing.
    #[arg(long)]
    pub count_only: bool,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(args: &Args) -> anyhow::Result<bool> {
    let config = json!({
        "n": args.n,
        "family": format!("{:?}", args.family),
        "l": args.l, "s": if args.s == usize::MAX { json!(null) } else { json!(args.s) },
        "k": args.k, "j": args.j,
        "count_only": args.count_only,
    });

    let colored = matches!(
        args.family,
        FamilyName::TwoColorLeft | FamilyName::TwoColorRight | FamilyName::TwoColorRightMinFiltered
    );
    let columns: &[&str] = if args.count_only {
        &["n", "family", "count"]
    } else if colored {
        &["partition", "parts"]
    } else {
        &["partition", "parts"]
    };
    let mut report = Report::new("partitions", config, columns);

    let count = match args.family {
        FamilyName::Unrestricted => count_minpart_maxsize(args.n, 1, args.n as usize),
        FamilyName::MinpartMaxsize => {
            count_minpart_maxsize(args.n, args.l, args.s.min(args.n as usize))
        }
        FamilyName::Gap2 => count_gap2(args.n, args.k),
        FamilyName::Mod5 => count_mod5_14(args.n),
        FamilyName::SizeLeSmallest => count_size_le_smallest(args.n, args.k),
        FamilyName::TwoColorLeft => count_2c_left(args.n, args.j),
        FamilyName::TwoColorRight => count_2c_right(args.n, args.j),
        FamilyName::TwoColorRightMinFiltered => count_2c_right_min_filtered(args.n, args.j),
    };

    if args.count_only {
        report.push_row(json!({
            "n": args.n,
            "family": family_label(args),
            "count": count.to_string(),
        }));
        return report.emit(args.format, &args.out);
    }

    anyhow::ensure!(
        count <= 1_000_000u32.into(),
        "family has {count} members at n={}; use --count-only",
        args.n
    );

    let listed: u64;
    if colored {
        let family = match args.family {
            FamilyName::TwoColorLeft => ColoredFamily::TwoColorLeft { j: args.j },
            FamilyName::TwoColorRight => ColoredFamily::TwoColorRight { j: args.j },
            FamilyName::TwoColorRightMinFiltered => {
                ColoredFamily::TwoColorRightMinFiltered { j: args.j }
            }
            _ => unreachable!(),
        };
        anyhow::ensure!(args.j >= 1, "j must be >= 1");
        let all = partitions::enumerate_colored(args.n, &family);
        listed = all.len() as u64;
        for p in &all {
            report.push_row(json!({
                "partition": p.to_string(),
                "parts": serde_json::to_value(p)?["parts"],
            }));
        }
    } else {
        let family = match args.family {
            FamilyName::Unrestricted => Family::Unrestricted,
            FamilyName::MinpartMaxsize => Family::MinPartMaxSize {
                min_part: args.l,
                max_size: args.s.min(args.n as usize),
            },
            FamilyName::Gap2 => Family::Gap2 { min_part: args.k },
            FamilyName::Mod5 => Family::Mod5Is1Or4,
            FamilyName::SizeLeSmallest => Family::SizeLeSmallest { shift: args.k },
            _ => unreachable!(),
        };
        if let Family::Gap2 { min_part } | Family::SizeLeSmallest { shift: min_part } = family {
            anyhow::ensure!(min_part >= 1, "k must be >= 1");
        }
        let all = partitions::enumerate(args.n, &family);
        listed = all.len() as u64;
        for p in &all {
            report.push_row(json!({
                "partition": p.to_string(),
                "parts": json!({"n": p.weight(), "parts": p.parts()}),
            }));
        }
    }

    // The DP count and the enumeration must agree; a mismatch here is an
    // implementation bug worth failing loudly on.
    let agree = count == listed.into();
    if !agree {
        report.finding(format!(
            "count mismatch: dynamic programming says {count}, enumeration listed {listed}"
        ));
    }
    report.set_pass(agree);
    report.emit(args.format, &args.out)
}

fn family_label(args: &Args) -> String {
    match args.family {
        FamilyName::Unrestricted => "unrestricted".into(),
        FamilyName::MinpartMaxsize => format!("minpart>={},size<={}", args.l, args.s),
        FamilyName::Gap2 => format!("gap2,minpart>={}", args.k),
        FamilyName::Mod5 => "parts=1or4mod5".into(),
        FamilyName::SizeLeSmallest => format!("size<=smallest-{}", args.k - 1),
        FamilyName::TwoColorLeft => format!("2c-left,j={}", args.j),
        FamilyName::TwoColorRight => format!("2c-right,j={}", args.j),
        FamilyName::TwoColorRightMinFiltered => format!("2c-right-min-filtered,j={}", args.j),
    }
}
