//! Acceptance suite for `mla-core`; see `tests/acceptance.rs`.
