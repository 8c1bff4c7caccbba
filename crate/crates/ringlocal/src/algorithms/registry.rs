//! Name-keyed registry of node algorithms, so front ends can select a
//! strategy at runtime.

use std::collections::BTreeMap;

use crate::model::NodeAlgorithm;

use super::cole_vishkin::{ColeVishkin, CvConfig};
use super::controls::ConstantColour;
use super::largest_id::LargestId;
use super::AlgorithmError;

/// Construction-time parameters shared by all strategies.
#[derive(Debug, Clone, Copy)]
pub struct AlgorithmParams {
    /// Identifier universe is `[0, 2^universe_bits)`; fixes the initial
    /// Cole-Vishkin colour length.
    pub universe_bits: u32,
}

impl Default for AlgorithmParams {
    fn default() -> Self {
        Self { universe_bits: 64 }
    }
}

type Factory = Box<dyn Fn(&AlgorithmParams) -> Box<dyn NodeAlgorithm> + Send + Sync>;

/// Maps strategy names to factories producing boxed node algorithms.
pub struct AlgorithmRegistry {
    factories: BTreeMap<String, Factory>,
}

impl AlgorithmRegistry {
    pub fn empty() -> Self {
        Self { factories: BTreeMap::new() }
    }

    /// Registry preloaded with the shipped strategies.
    pub fn with_builtins() -> Self {
        let mut registry = Self::empty();
        registry.register("largest-id", |_| Box::new(LargestId));
        registry.register("cole-vishkin", |params| {
            Box::new(ColeVishkin::new(CvConfig::new(params.universe_bits)))
        });
        registry.register("constant-colour", |_| Box::new(ConstantColour(0)));
        registry
    }

    pub fn register<F>(&mut self, name: &str, factory: F)
    where
        F: Fn(&AlgorithmParams) -> Box<dyn NodeAlgorithm> + Send + Sync + 'static,
    {
        self.factories.insert(name.to_owned(), Box::new(factory));
    }

    pub fn create(
        &self,
        name: &str,
        params: &AlgorithmParams,
    ) -> Result<Box<dyn NodeAlgorithm>, AlgorithmError> {
        match self.factories.get(name) {
            Some(factory) => Ok(factory(params)),
            None => Err(AlgorithmError::UnknownAlgorithm {
                name: name.to_owned(),
                available: self.names().join(", "),
            }),
        }
    }

    pub fn names(&self) -> Vec<&str> {
        self.factories.keys().map(String::as_str).collect()
    }
}

impl Default for AlgorithmRegistry {
    fn default() -> Self {
        Self::with_builtins()
    }
}
