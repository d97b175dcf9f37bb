#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptl {

// Every failure surfaced by the library carries one of these codes.  The CLI
// maps them onto its exit-code contract: validation failures -> 2, budget
// overruns -> 3, internal consistency violations -> 4.
enum class errc {
    not_prime,
    budget_exceeded,
    zero_polynomial,
    invalid_model,
    invalid_datum,
    non_integral,
    weil_bound,
    not_coprime,
    inconsistent_signature,
    genus_mismatch,
    bad_digits,
    parse,
    internal,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
  public:
    Error(errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
    Error(errc code, std::string msg, std::size_t offset)
        : std::runtime_error(std::move(msg)), code_(code), offset_(offset) {}

    errc code() const { return code_; }
    // Byte offset into the source text, for parse errors; npos otherwise.
    std::size_t offset() const { return offset_; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  private:
    errc code_;
    std::size_t offset_ = npos;
};

[[noreturn]] inline void fail(errc code, std::string msg) { throw Error(code, std::move(msg)); }

// Enumeration budget shared by the point-counting and root-counting loops.
// Defaults to 2^24 field elements; PTL_BUDGET overrides it.
std::uint64_t enumeration_budget();

}  // namespace ptl
