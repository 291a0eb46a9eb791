#pragma once

// Named instances: one per row of the table of maximal sets, plus the
// strongly resolvable family for s = 2..5.

#include <optional>
#include <string>
#include <vector>

#include "twodist/paramspace.hpp"
#include "twodist/searcher.hpp"

namespace twodist::catalog {

struct Entry {
    std::string name;
    int d = 0;
    int s = 0;
    paramspace::Branch branch = paramspace::Branch::Below;
    int k = 0;
    std::size_t expected_size = 0;
    std::string added_set;  // human description of the added family
    bool has_extra = false;
};

struct BuildOptions {
    bool include_extras = true;
    /// Forces the cross-weight overlap set instead of arbitrating it.
    std::optional<paramspace::MSetRule> m_rule;
};

/// All catalog entries in table order.
const std::vector<Entry>& entries();
std::vector<std::string> names();
/// Throws InvalidArgument for an unknown name.
const Entry& entry(const std::string& name);

/// Builds the named instance. Throws InvalidArgument for an unknown name.
searcher::Instance build_instance(const std::string& name, const BuildOptions& options = {});

/// The extra vector of the named instance, if it has one.
std::optional<CandidateVector> extra_vector(const std::string& name);

/// d = (s-1)(s+1)^2 - 1 for the resolvable family.
int resolvable_dimension(int s);
/// 2 s^2 (s+1).
std::size_t resolvable_size(int s);

}  // namespace twodist::catalog
