#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace endgrid {

// Usage errors: bad parameters, malformed inputs. CLI maps these to exit 2.
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

// A structural check failed on otherwise well-formed input (antichain hit an
// interval twice, component labelling broke down, ...). CLI maps to exit 1.
class CertificationError : public std::runtime_error {
 public:
  explicit CertificationError(const std::string& what) : std::runtime_error(what) {}
};

// Cross-checks disagreed; indicates a bug in this library. CLI maps to exit 3.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Verbosity from ENDGRID_LOG: 0 = silent (default), 1 = info, 2 = debug.
int log_level();
void log_info(const std::string& msg);
void log_debug(const std::string& msg);

// Uniform draw from [0, n) via rejection sampling on the raw mt19937 stream,
// so results do not depend on the standard library's distribution internals.
std::uint32_t rand_below(std::mt19937& rng, std::uint32_t n);

}  // namespace endgrid
