//! Fixtures, persistence, the external computer-algebra adapter, and
//! reproduction of the tabulated (9, 3) fields.

pub mod cas;
pub mod fixtures;
pub mod table;

pub use cas::{cas_query, CasBackend, CasError, CasResult, ScriptedCas, SubprocessCas};
pub use fixtures::{
    append_verdicts, bundled_fixtures, load_fixtures, parse_fixtures, read_verdicts, save_fixtures,
    FixtureRow, BUNDLED_TABLE,
};
pub use table::{reproduce_table, RowOutcome, TableReport, TableSource};
