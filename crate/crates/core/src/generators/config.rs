use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::chain_core::{parse_rational, ChainFamily, IndexValue};
use crate::error::{Error, Result};
use crate::generators::{
    from_sign_matrix, initial_segment_chain, marciszewski_family, perturbed_chain,
    random_bit_indices, random_indices, uniform_positions, BitIndex, DyadicGround,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    InitialSegment,
    Marciszewski,
    Perturbed,
    SignMatrix,
}

/// Structured-text description of one generated family.
///
/// `xs` holds `p/q` rationals, except for `marciszewski` where it holds bit
/// words (`01101…`). When `xs` is absent, `count` indices are drawn from a
/// generator seeded with `seed`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorConfig {
    pub kind: Option<GeneratorKind>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ground_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xs: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flips_per_set: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
}

impl GeneratorConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    fn require<T: Clone>(&self, value: &Option<T>, name: &str) -> Result<T> {
        value
            .clone()
            .ok_or_else(|| Error::Config(format!("{name} is required for {:?}", self.kind)))
    }

    fn rational_xs(&self, rng: &mut ChaCha8Rng) -> Result<Vec<IndexValue>> {
        match (&self.xs, self.count) {
            (Some(xs), _) => xs.iter().map(|s| s.parse()).collect(),
            (None, Some(count)) => Ok(random_indices(rng, count)),
            (None, None) => Err(Error::Config("either xs or count is required".into())),
        }
    }
}

/// Builds the family a config describes.
pub fn generate(config: &GeneratorConfig) -> Result<ChainFamily> {
    let kind = config
        .kind
        .ok_or_else(|| Error::Config("kind is required".into()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    match kind {
        GeneratorKind::InitialSegment => {
            let points = match (&config.points, config.ground_size) {
                (Some(points), _) => points
                    .iter()
                    .map(|s| s.parse())
                    .collect::<Result<Vec<_>>>()?,
                (None, Some(size)) => uniform_positions(size),
                (None, None) => {
                    return Err(Error::Config(
                        "either points or ground_size is required".into(),
                    ))
                }
            };
            let xs = config.rational_xs(&mut rng)?;
            initial_segment_chain(&points, &xs)
        }
        GeneratorKind::Marciszewski => {
            let ground = DyadicGround::new(config.require(&config.depth, "depth")?)?;
            let xs = match (&config.xs, config.count) {
                (Some(xs), _) => xs
                    .iter()
                    .map(|s| s.parse())
                    .collect::<Result<Vec<BitIndex>>>()?,
                (None, Some(count)) => random_bit_indices(&mut rng, count, ground.depth()),
                (None, None) => return Err(Error::Config("either xs or count is required".into())),
            };
            marciszewski_family(&xs, &ground)
        }
        GeneratorKind::Perturbed => {
            let size = config.require(&config.ground_size, "ground_size")?;
            let xs = config.rational_xs(&mut rng)?;
            perturbed_chain(config.seed, size, &xs, config.flips_per_set.unwrap_or(0))
        }
        GeneratorKind::SignMatrix => {
            let xs = config.rational_xs(&mut rng)?;
            let matrix = config
                .require(&config.matrix, "matrix")?
                .iter()
                .map(|row| row.iter().map(|h| parse_rational(h)).collect())
                .collect::<Result<Vec<_>>>()?;
            from_sign_matrix(&xs, &matrix)
        }
    }
}
