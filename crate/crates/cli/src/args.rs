use clap::{Args, Parser, Subcommand, ValueEnum};

pub const DEFAULT_CAP: u128 = 1_000_000;

#[derive(Debug, Parser)]
#[command(name = "eaqmds", version, about = "Construct and verify EA-quantum MDS codes from cyclic codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Exit with status 1 when any discrepancy is reported.
    #[arg(long, global = true)]
    pub strict: bool,

    /// Largest number of column subsets the MDS minor check will try.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: u128,

    /// Log progress to stderr (repeat for more).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The q^2-cyclotomic cosets modulo n.
    Cosets(ModulusArgs),
    /// Split T = C_s u ... u C_{s+k} into T_ss and T_sas.
    Decompose(DecomposeArgs),
    /// One code of a family, with its record.
    Code(CodeArgs),
    /// Ebit cross-check, minor check and saturation for a family instance.
    Verify(VerifyArgs),
    /// Regenerate a published table with discrepancy reports.
    Tables(TablesArgs),
    /// Run a family over a grid of (l, m).
    Sweep(SweepArgs),
    /// Built-in oracle agreement suite.
    Selfcheck,
}

#[derive(Debug, Args)]
pub struct ModulusArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub q: u64,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub q: u64,
    /// Run index: T has 2(k+1) elements.
    #[arg(long)]
    pub k: u64,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub family: u8,
    #[arg(long)]
    pub l: u64,
    #[arg(long)]
    pub m: u64,
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Odd designed distance, at least 3.
    #[arg(long)]
    pub d: u64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Verify every distance in the range instead of its two ends.
    #[arg(long)]
    pub all_d: bool,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub which: u8,
    /// Rows with q above this get coset-level records only.
    #[arg(long, default_value_t = 31)]
    pub full_up_to: u64,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub family: u8,
    /// Inclusive range, e.g. 3..9.
    #[arg(long, value_parser = parse_range)]
    pub l_range: (u64, u64),
    /// Inclusive range, e.g. 1..5.
    #[arg(long, value_parser = parse_range)]
    pub m_range: (u64, u64),
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Run the matrix oracles for instances with q at most this.
    #[arg(long)]
    pub full_up_to: Option<u64>,
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: u64 = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b: u64 = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..9"), Ok((3, 9)));
        assert_eq!(parse_range("3..=9"), Ok((3, 9)));
        assert!(parse_range("9..3").is_err());
        assert!(parse_range("3-9").is_err());
    }
}
