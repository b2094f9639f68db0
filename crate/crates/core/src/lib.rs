pub mod corpus;
pub mod dataset;
pub mod encoder;
pub mod extractor;
pub mod gold;
pub mod lexer;
pub mod linkers;
pub mod metrics;
pub mod retrieval;
pub mod schema;
pub mod seed;
pub mod stats;
