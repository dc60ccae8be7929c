#pragma once

namespace coreblocks::config {

/// Largest n for which count_cores_enum will enumerate partitions.
/// Overridden by the COREBLOCKS_MAX_N environment variable.
int enumeration_bound();

/// Largest n for which character_table will run.
int chartable_bound();

/// Largest n for which group-algebra elements of Sym(n) are expanded.
int group_expansion_bound();
void set_group_expansion_bound(int n);

}  // namespace coreblocks::config
