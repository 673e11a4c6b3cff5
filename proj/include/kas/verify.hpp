#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kas/report.hpp"

namespace kas {

/// Default prime set for the cyclotomic suite.
std::vector<std::int64_t> default_primes();

Report verify_grouplaws();
Report verify_matrices();
Report verify_morphisms();
Report verify_cyclotomic(std::span<const std::int64_t> primes);
Report verify_all(std::span<const std::int64_t> primes);

/// Dispatch by scope name: grouplaws, matrices, morphisms, cyclotomic, all.
Report verify_scope(const std::string& scope, std::span<const std::int64_t> primes);

}  // namespace kas
