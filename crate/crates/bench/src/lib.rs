//! Fixtures shared by the criterion benches.

use std::sync::Arc;

use relcenter::group::{build_group, BuildOptions, Family, FiniteGroup, GroupSpec};

pub fn named(family: Family, parameter: usize) -> Arc<FiniteGroup> {
    Arc::new(
        build_group(&GroupSpec::Named { family, parameter }, &BuildOptions::default())
            .expect("bench fixture group"),
    )
}
