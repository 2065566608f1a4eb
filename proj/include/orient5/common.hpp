#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace orient5 {

// Distances are ints with a dedicated infinity sentinel. The sentinel never
// takes part in arithmetic; external output serializes it as "inf".
constexpr int kInfDist = std::numeric_limits<int>::max();

inline std::string dist_to_string(int d) {
  return d == kInfDist ? "inf" : std::to_string(d);
}

// Error kinds map 1:1 onto CLI exit codes (input 2, precondition 3, budget 4).
enum class ErrorKind { InvalidInput, Precondition, BudgetExhausted, Internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_input(const std::string& msg) {
  throw Error(ErrorKind::InvalidInput, msg);
}
[[noreturn]] inline void fail_pre(const std::string& msg) {
  throw Error(ErrorKind::Precondition, msg);
}
[[noreturn]] inline void fail_budget(const std::string& msg) {
  throw Error(ErrorKind::BudgetExhausted, msg);
}
// Internal failures are defects: verification of a construction that is
// supposed to succeed by design must never be silently ignored.
[[noreturn]] inline void fail_internal(const std::string& msg) {
  throw Error(ErrorKind::Internal, msg);
}

// 64-bit FNV-1a, used to fingerprint base graphs in serialized orientations.
constexpr uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr uint64_t kFnvPrime = 1099511628211ULL;

inline uint64_t fnv1a_append(uint64_t h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

inline std::string hex_u64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

}  // namespace orient5
