#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pairzeta/parallel.hpp"

namespace pairzeta::verify {

struct Check {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;  // failure reason or exception text
};

using Report = std::vector<Check>;

// all, scalar, curve, slices, motivic, qplane, wallcross, nazeta
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

// Runs every check of the selected suite (or all of them) without stopping at
// failures. Random families derive from seed. Progress lines go to `progress`
// when it is non-null. Throws DomainError for unknown selectors.
Report run(std::string_view selector, std::uint64_t seed, Exec exec = Exec::parallel, std::ostream* progress = nullptr);

// The slice, inversion and ray identities on a random 2x2 matrix family over
// N^2 \ {0}, for classes of size <= window.
Report appendix_identities(std::uint64_t seed, std::int64_t window);

bool all_passed(const Report& report);

}  // namespace pairzeta::verify
