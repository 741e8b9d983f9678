#ifndef BISETFUN_PRESETS_HPP
#define BISETFUN_PRESETS_HPP

#include <string>
#include <vector>

#include "bisetfun/perm_group.hpp"

namespace bisetfun {

/// Builds a group from a spec string: a preset name (S<n>, A<n>, C<n>,
/// D<2n>, Q8, SL(2,5), F21, V4) or an explicit permutation group
/// "perm:<degree>:<cycles>[;<cycles>...]". Preset generators are frozen so
/// canonical Out indices never drift.
PermGroup parse_group(const std::string &spec);

/// All preset names with group order at most max_order, in a fixed
/// canonical order.
std::vector<std::string> preset_catalog_upto(unsigned long long max_order);

} // namespace bisetfun

#endif
