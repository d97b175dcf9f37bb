#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptl/error.hpp"

namespace ptl::arith {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// A prime field F_p or an explicit extension F_{p^k} = F_p[x]/(modulus).
//
// Elements are passed around as packed codes in [0, p^k): the code of
// sum c_i * x^i is sum c_i * p^i.  Code order therefore coincides with the
// lexicographic order on coefficient tuples read from the top, which is what
// keeps modulus selection and embedding root searches deterministic.
//
// Immutable after construction; safe to share across threads.
class Fq {
  public:
    // Builds F_{p^k} with the lexicographically smallest monic irreducible
    // modulus of degree k (no modulus stored when k = 1).
    static Fq make(u64 p, unsigned k);

    u64 p() const { return p_; }
    unsigned degree() const { return k_; }
    u64 order() const { return order_; }
    // Non-leading modulus coefficients c_0..c_{k-1} of x^k + sum c_i x^i.
    // Empty for prime fields.
    const std::vector<u64>& modulus() const { return mod_; }

    u64 zero() const { return 0; }
    u64 one() const { return 1; }
    // Code of the generator x (only meaningful for k > 1).
    u64 gen() const { return p_; }
    // Image of an integer under Z -> F_q.
    u64 from_int(std::int64_t n) const;

    u64 add(u64 a, u64 b) const;
    u64 sub(u64 a, u64 b) const;
    u64 neg(u64 a) const;
    u64 mul(u64 a, u64 b) const;
    u64 pow(u64 a, u64 e) const;
    u64 inv(u64 a) const;
    // a^(p^e), by repeated p-th powering.
    u64 frobenius(u64 a, u64 e) const;

    // Base-p digits (= coefficients over F_p, little-endian), length k.
    std::vector<u64> coeffs(u64 a) const;
    u64 from_coeffs(const std::vector<u64>& c) const;

    bool same_field(const Fq& other) const {
        return p_ == other.p_ && k_ == other.k_ && mod_ == other.mod_;
    }

    std::string name() const;  // "F_9" style

    // Default-constructed fields are placeholders; build real ones via make().
    Fq() = default;

  private:
    u64 p_ = 0;
    unsigned k_ = 0;
    u64 order_ = 0;
    std::vector<u64> mod_;  // c_0..c_{k-1}

    u64 reduce_mul(const u64* a, const u64* b) const;
};

// Univariate polynomial over a field, as packed element codes c_0..c_d with
// no trailing zeros (empty = zero polynomial, degree -1 here standing in for
// the -infinity sentinel).
struct Poly {
    std::vector<u64> c;

    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    u64 leading() const { return c.empty() ? 0 : c.back(); }
    u64 coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
};

Poly poly_from_coeffs(std::vector<u64> coeffs);  // trims trailing zeros
Poly poly_add(const Fq& F, const Poly& a, const Poly& b);
Poly poly_sub(const Fq& F, const Poly& a, const Poly& b);
Poly poly_mul(const Fq& F, const Poly& a, const Poly& b, long dmax = -1);
Poly poly_scale(const Fq& F, const Poly& a, u64 s);
// Binary exponentiation; with dmax >= 0 every intermediate product is
// truncated above degree dmax.
Poly poly_pow(const Fq& F, const Poly& h, u64 e, long dmax = -1);
u64 poly_eval(const Fq& F, const Poly& a, u64 x);
Poly poly_derivative(const Fq& F, const Poly& a);
Poly poly_mod(const Fq& F, const Poly& a, const Poly& m);
Poly poly_gcd(const Fq& F, Poly a, Poly b);  // monic gcd
// x^e mod m, for the Rabin irreducibility walk and root-count cross-checks.
Poly poly_xpow_mod(const Fq& F, u128 e, const Poly& m);

// Number of distinct roots of f in F (exhaustive scan; cross-checked against
// gcd(f, x^q - x) whenever deg f <= 64).
u64 poly_root_count(const Fq& F, const Poly& f);

bool is_prime_u64(u64 n);

// The embedding F_{p^r} -> F_{p^{rs}} determined by mapping the generator of
// `from` to the smallest root (in code order) of its modulus in `to`.
class Embedding {
  public:
    Embedding(const Fq& from, const Fq& to);
    u64 map(u64 a) const;
    const Fq& from() const { return *from_; }
    const Fq& to() const { return *to_; }

  private:
    const Fq* from_;
    const Fq* to_;
    std::vector<u64> gen_pows_;  // images of x^0..x^{r-1}
};

}  // namespace ptl::arith
