use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "engeltori", version, about = "Classical knot invariants, exact homology and torus linking classes")]
pub struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants and stabilization of braid or front profiles.
    #[command(subcommand)]
    Knot(KnotCommand),
    /// Homology of chain complexes, Künneth predictions, sphere duality.
    Homology(HomologyArgs),
    /// Self-linking and Thurston-Bennequin classes of tori from scenario manifests.
    #[command(subcommand)]
    Torus(TorusCommand),
    /// Built-in scenarios and randomized law checks.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Pictures of front diagrams.
    #[command(subcommand)]
    Render(RenderCommand),
    /// Built-in complexes.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Debug, Subcommand)]
pub enum KnotCommand {
    /// tb/rot of a front, sl of a braid.
    Invariants { file: PathBuf },
    /// Stabilize a profile `count` times: zigzags for fronts, Markov moves for braids.
    Stabilize {
        file: PathBuf,
        #[arg(long, default_value = "-")]
        sign: String,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
}

#[derive(Debug, Args)]
#[command(args_conflicts_with_subcommands = true, subcommand_negates_reqs = true)]
pub struct HomologyArgs {
    /// Chain complex file or `catalog:<id>`.
    #[arg(required = true)]
    pub input: Option<String>,

    #[command(subcommand)]
    pub command: Option<HomologyCommand>,
}

#[derive(Debug, Subcommand)]
pub enum HomologyCommand {
    /// Predict the homology of a product; checked against the tensor complex when both inputs are complexes.
    Kunneth { a: String, b: String },
    /// Reduced homology of the complement of a subcomplex of S^n.
    Alexander {
        #[arg(long)]
        sphere_dim: usize,
        input: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum TorusCommand {
    /// Self-linking class of the transverse torus described by a manifest.
    SlClass { manifest: PathBuf },
    /// Thurston-Bennequin class of the Legendrian torus described by a manifest.
    TbClass { manifest: PathBuf },
    /// Compare the classes of two manifests by divisibility.
    Distinguish { first: PathBuf, second: PathBuf },
    /// Build the stabilization family of a manifest and compare all pairs.
    Family { manifest: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Transverse tori on the unknot, stabilized 0..=count times.
    Thm11 {
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Legendrian tori on the unknot front, stabilized 0..=count times.
    Thm12 {
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// H_2 of product complements from chain complexes against the closed formula.
    Lemma42,
    /// The Mayer-Vietoris segment for the unknotted torus in S^4.
    Segment,
    /// Randomized algebraic and knot-theoretic laws.
    Laws {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum RenderCommand {
    /// Draw a front as cubic arcs.
    Front {
        file: PathBuf,
        #[arg(long)]
        svg: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// All built-in ids.
    List,
    /// One entry in the chain-complex format, with its stated homology.
    Show { id: String },
}
