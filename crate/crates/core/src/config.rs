use std::env;

/// Size limits shared by every module.
///
/// The defaults can be overridden through environment variables, which the CLI
/// reads once at start-up via [`Caps::from_env`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest cube dimension `n` for a [`CubeFunction`](crate::CubeFunction) (2^24 doubles = 128 MiB).
    pub cube_dim: usize,
    /// Largest code dimension whose 2^k codewords may be enumerated.
    pub code_dim: usize,
    /// Largest ground set for exhaustive subset sums when each term is cheap.
    pub exact_subsets: usize,
    /// Largest ground set for exhaustive subset sums when each term costs O(2^n).
    pub exact_subsets_costly: usize,
    /// Largest ground set for the corank-nullity Tutte sum.
    pub tutte: usize,
}

pub const ENV_CUBE_DIM: &str = "CUBENOISE_CUBE_DIM";
pub const ENV_CODE_DIM: &str = "CUBENOISE_CODE_DIM";
pub const ENV_EXACT_SUBSETS: &str = "CUBENOISE_EXACT_SUBSETS";
pub const ENV_EXACT_SUBSETS_COSTLY: &str = "CUBENOISE_EXACT_SUBSETS_COSTLY";
pub const ENV_TUTTE: &str = "CUBENOISE_TUTTE";

impl Default for Caps {
    fn default() -> Self {
        Caps {
            cube_dim: 24,
            code_dim: 28,
            exact_subsets: 22,
            exact_subsets_costly: 13,
            tutte: 24,
        }
    }
}

impl Caps {
    /// Defaults, with any variable that parses as an integer taking precedence.
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        let read = |key: &str, slot: &mut usize| {
            if let Some(v) = env::var(key).ok().and_then(|s| s.trim().parse().ok()) {
                *slot = v;
            }
        };
        read(ENV_CUBE_DIM, &mut caps.cube_dim);
        read(ENV_CODE_DIM, &mut caps.code_dim);
        read(ENV_EXACT_SUBSETS, &mut caps.exact_subsets);
        read(ENV_EXACT_SUBSETS_COSTLY, &mut caps.exact_subsets_costly);
        read(ENV_TUTTE, &mut caps.tutte);
        caps
    }
}

static GLOBAL: std::sync::OnceLock<Caps> = std::sync::OnceLock::new();

impl Caps {
    /// Process-wide caps, read from the environment on first use.
    pub fn global() -> &'static Caps {
        GLOBAL.get_or_init(Caps::from_env)
    }
}
