#ifndef NQF_RATIONAL_HPP
#define NQF_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nqf {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

// Raised when an internal exactness guarantee fails (non-exact division,
// inconsistent expansion, rank certification failure).  Always a bug or a
// violated precondition, never a recoverable condition.
class InvariantViolation : public std::logic_error {
public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

// Bad input: unsupported type/rank, degree overflow, malformed argument.
class EngineError : public std::runtime_error {
public:
  explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

inline bool isInteger(const Rat& r) { return denominator(r) == 1; }

// "3/2", "-7", "0"; matches mpq_rational::str()
inline std::string ratStr(const Rat& r) { return r.str(); }

inline Rat ratFromString(const std::string& s) {
  try {
    return Rat(s);
  } catch (const std::exception&) {
    throw EngineError("bad rational literal: " + s);
  }
}

// Residue of r mod p.  Returns false if the denominator vanishes mod p
// (the prime is unusable for this matrix).
bool ratModP(const Rat& r, uint64_t p, uint64_t& out);

}  // namespace nqf

#endif
