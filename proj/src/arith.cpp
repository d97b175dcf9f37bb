#include "ptl/arith.hpp"

#include <algorithm>
#include <cstdlib>

namespace ptl {

std::uint64_t enumeration_budget() {
    static const std::uint64_t value = [] {
        if (const char* env = std::getenv("PTL_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
        }
        return std::uint64_t(1) << 24;
    }();
    return value;
}

const char* errc_name(errc c) {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::invalid_model: return "InvalidModel";
        case errc::invalid_datum: return "InvalidDatum";
        case errc::non_integral: return "NonIntegralCoefficient";
        case errc::weil_bound: return "WeilBoundViolation";
        case errc::not_coprime: return "NotCoprime";
        case errc::inconsistent_signature: return "InconsistentSignature";
        case errc::genus_mismatch: return "GenusMismatch";
        case errc::bad_digits: return "BadDigits";
        case errc::parse: return "ParseError";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

}  // namespace ptl

namespace ptl::arith {

namespace {

constexpr u64 kFieldMakeBound = u64(1) << 40;

u64 mulmod(u64 a, u64 b, u64 p) {
    // p < 2^31, operands reduced, so the product fits in 64 bits.
    return (a * b) % p;
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

u64 Fq::from_int(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return static_cast<u64>(r);
}

std::vector<u64> Fq::coeffs(u64 a) const {
    std::vector<u64> out(k_);
    for (unsigned i = 0; i < k_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
    return out;
}

u64 Fq::from_coeffs(const std::vector<u64>& c) const {
    u64 a = 0;
    for (std::size_t i = c.size(); i-- > 0;) a = a * p_ + (c[i] % p_);
    return a;
}

u64 Fq::add(u64 a, u64 b) const {
    if (k_ == 1) {
        u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    u64 out = 0, mult = 1;
    for (unsigned i = 0; i < k_; ++i) {
        u64 s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        out += s * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

u64 Fq::neg(u64 a) const {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    u64 out = 0, mult = 1;
    for (unsigned i = 0; i < k_; ++i) {
        u64 d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * mult;
        mult *= p_;
        a /= p_;
    }
    return out;
}

u64 Fq::sub(u64 a, u64 b) const { return add(a, neg(b)); }

u64 Fq::reduce_mul(const u64* a, const u64* b) const {
    // Schoolbook product followed by reduction modulo the monic modulus.
    unsigned k = k_;
    u64 buf[128] = {0};
    for (unsigned i = 0; i < k; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < k; ++j) {
            if (b[j] == 0) continue;
            buf[i + j] = (buf[i + j] + mulmod(a[i], b[j], p_)) % p_;
        }
    }
    for (unsigned i = 2 * k - 2; i >= k; --i) {
        u64 t = buf[i];
        if (t == 0) continue;
        buf[i] = 0;
        for (unsigned j = 0; j < k; ++j) {
            if (mod_[j] == 0) continue;
            u64 sub = mulmod(t, mod_[j], p_);
            u64 cur = buf[i - k + j];
            buf[i - k + j] = cur >= sub ? cur - sub : cur + p_ - sub;
        }
    }
    u64 out = 0;
    for (unsigned i = k; i-- > 0;) out = out * p_ + buf[i];
    return out;
}

u64 Fq::mul(u64 a, u64 b) const {
    if (k_ == 1) return mulmod(a, b, p_);
    u64 da[64], db[64];
    for (unsigned i = 0; i < k_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    return reduce_mul(da, db);
}

u64 Fq::pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

u64 Fq::inv(u64 a) const {
    if (a == 0) fail(errc::internal, "inverse of zero in " + name());
    return pow(a, order_ - 2);
}

u64 Fq::frobenius(u64 a, u64 e) const {
    e %= k_;
    for (u64 i = 0; i < e; ++i) a = pow(a, p_);
    return a;
}

std::string Fq::name() const { return "F_" + std::to_string(order_); }

Poly poly_from_coeffs(std::vector<u64> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return Poly{std::move(coeffs)};
}

Poly poly_add(const Fq& F, const Poly& a, const Poly& b) {
    std::vector<u64> out(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(a.coeff(i), b.coeff(i));
    return poly_from_coeffs(std::move(out));
}

Poly poly_sub(const Fq& F, const Poly& a, const Poly& b) {
    std::vector<u64> out(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(a.coeff(i), b.coeff(i));
    return poly_from_coeffs(std::move(out));
}

Poly poly_mul(const Fq& F, const Poly& a, const Poly& b, long dmax) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    long deg = a.degree() + b.degree();
    if (dmax >= 0 && deg > dmax) deg = dmax;
    std::vector<u64> out(deg + 1, 0);
    std::size_t imax = std::min(a.c.size(), static_cast<std::size_t>(deg) + 1);
    for (std::size_t i = 0; i < imax; ++i) {
        if (a.c[i] == 0) continue;
        std::size_t jmax = std::min(b.c.size(), static_cast<std::size_t>(deg) + 1 - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (b.c[j] == 0) continue;
            out[i + j] = F.add(out[i + j], F.mul(a.c[i], b.c[j]));
        }
    }
    return poly_from_coeffs(std::move(out));
}

Poly poly_scale(const Fq& F, const Poly& a, u64 s) {
    std::vector<u64> out(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) out[i] = F.mul(a.c[i], s);
    return poly_from_coeffs(std::move(out));
}

Poly poly_pow(const Fq& F, const Poly& h, u64 e, long dmax) {
    Poly result = poly_from_coeffs({1});
    Poly base = h;
    if (dmax >= 0 && base.degree() > dmax) base = poly_mul(F, base, result, dmax);
    while (e) {
        if (e & 1) result = poly_mul(F, result, base, dmax);
        e >>= 1;
        if (e) base = poly_mul(F, base, base, dmax);
    }
    return result;
}

u64 poly_eval(const Fq& F, const Poly& a, u64 x) {
    u64 r = 0;
    for (std::size_t i = a.c.size(); i-- > 0;) r = F.add(F.mul(r, x), a.c[i]);
    return r;
}

Poly poly_derivative(const Fq& F, const Poly& a) {
    if (a.c.size() <= 1) return Poly{};
    std::vector<u64> out(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        out[i - 1] = F.mul(a.c[i], F.from_int(static_cast<std::int64_t>(i)));
    return poly_from_coeffs(std::move(out));
}

Poly poly_mod(const Fq& F, const Poly& a, const Poly& m) {
    if (m.is_zero()) fail(errc::internal, "poly_mod by zero");
    Poly r = a;
    u64 lc_inv = F.inv(m.leading());
    while (!r.is_zero() && r.degree() >= m.degree()) {
        long shift = r.degree() - m.degree();
        u64 factor = F.mul(r.leading(), lc_inv);
        for (std::size_t i = 0; i < m.c.size(); ++i) {
            std::size_t pos = i + shift;
            r.c[pos] = F.sub(r.c[pos], F.mul(factor, m.c[i]));
        }
        while (!r.c.empty() && r.c.back() == 0) r.c.pop_back();
    }
    return r;
}

Poly poly_gcd(const Fq& F, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.leading() != 1) a = poly_scale(F, a, F.inv(a.leading()));
    return a;
}

Poly poly_xpow_mod(const Fq& F, u128 e, const Poly& m) {
    Poly result = poly_mod(F, poly_from_coeffs({1}), m);
    Poly base = poly_mod(F, poly_from_coeffs({0, 1}), m);
    while (e) {
        if (e & 1) result = poly_mod(F, poly_mul(F, result, base), m);
        e >>= 1;
        if (e) base = poly_mod(F, poly_mul(F, base, base), m);
    }
    return result;
}

namespace {

// Rabin test: f (monic, degree k) is irreducible over F_p iff x^{p^k} = x
// mod f and gcd(x^{p^d} - x, f) = 1 for every proper divisor d of k.
bool is_irreducible(const Fq& Fp, const Poly& f) {
    unsigned k = static_cast<unsigned>(f.degree());
    u64 p = Fp.p();
    u128 pk = 1;
    for (unsigned i = 0; i < k; ++i) pk *= p;
    Poly x = poly_from_coeffs({0, 1});
    Poly xq = poly_xpow_mod(Fp, pk, f);
    if (!(poly_sub(Fp, xq, x).is_zero())) return false;
    for (unsigned d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        u128 pd = 1;
        for (unsigned i = 0; i < d; ++i) pd *= p;
        Poly xpd = poly_xpow_mod(Fp, pd, f);
        Poly g = poly_gcd(Fp, poly_sub(Fp, xpd, x), f);
        if (g.degree() != 0) return false;
    }
    return true;
}

}  // namespace

Fq Fq::make(u64 p, unsigned k) {
    if (!is_prime_u64(p)) fail(errc::not_prime, std::to_string(p) + " is not prime");
    if (p >= (u64(1) << 31)) fail(errc::budget_exceeded, "p >= 2^31");
    if (k < 1) fail(errc::invalid_model, "extension degree must be positive");
    u128 order = 1;
    for (unsigned i = 0; i < k; ++i) {
        order *= p;
        if (order > kFieldMakeBound) fail(errc::budget_exceeded, "p^k exceeds 2^40");
    }
    Fq F;
    F.p_ = p;
    F.k_ = k;
    F.order_ = static_cast<u64>(order);
    if (k == 1) return F;

    Fq Fp;
    Fp.p_ = p;
    Fp.k_ = 1;
    Fp.order_ = p;

    // Scan coefficient tuples (c_{k-1},...,c_0) in ascending numeric order.
    // The tuple value is sum c_i p^i with c_{k-1} most significant, so a
    // plain counter decomposed base p little-endian walks the scan order.
    u64 count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (u64 code = 0; code < count; ++code) {
        std::vector<u64> c(k + 1, 0);
        u64 t = code;
        for (unsigned i = 0; i < k; ++i) {
            c[i] = t % p;
            t /= p;
        }
        c[k] = 1;
        Poly f = poly_from_coeffs(c);
        if (is_irreducible(Fp, f)) {
            F.mod_.assign(f.c.begin(), f.c.end() - 1);
            return F;
        }
    }
    fail(errc::internal, "no irreducible polynomial found");
}

u64 poly_root_count(const Fq& F, const Poly& f) {
    if (f.is_zero()) fail(errc::zero_polynomial, "root count of zero polynomial");
    if (F.order() > enumeration_budget())
        fail(errc::budget_exceeded, "field too large for exhaustive root count");
    u64 count = 0;
    for (u64 x = 0; x < F.order(); ++x)
        if (poly_eval(F, f, x) == 0) ++count;
    if (f.degree() <= 64 && f.degree() >= 1) {
        // deg gcd(f, x^q - x) equals the number of distinct roots in F_q.
        Poly xq = poly_xpow_mod(F, F.order(), f);
        Poly g = poly_gcd(F, poly_sub(F, xq, poly_from_coeffs({0, 1})), f);
        u64 via_gcd = g.is_zero() ? static_cast<u64>(f.degree()) : static_cast<u64>(g.degree());
        if (via_gcd != count)
            fail(errc::internal, "root count mismatch between scan and gcd check");
    }
    return count;
}

Embedding::Embedding(const Fq& from, const Fq& to) : from_(&from), to_(&to) {
    if (from.p() != to.p() || to.degree() % from.degree() != 0)
        fail(errc::internal, "no embedding " + from.name() + " -> " + to.name());
    unsigned r = from.degree();
    gen_pows_.assign(r, 0);
    gen_pows_[0] = 1;
    if (r == 1) return;
    // Smallest root of the base modulus in the target field, by scan.
    Poly modulus;
    {
        std::vector<u64> c;
        for (u64 coeff : from.modulus()) c.push_back(coeff);  // F_p constants map verbatim
        c.push_back(1);
        modulus = poly_from_coeffs(c);
    }
    u64 root = 0;
    bool found = false;
    for (u64 x = 0; x < to.order(); ++x) {
        if (poly_eval(to, modulus, x) == 0) {
            root = x;
            found = true;
            break;
        }
    }
    if (!found) fail(errc::internal, "embedding root not found");
    for (unsigned i = 1; i < r; ++i) gen_pows_[i] = to.mul(gen_pows_[i - 1], root);
}

u64 Embedding::map(u64 a) const {
    if (from_->degree() == 1) return a;  // F_p constants share codes
    std::vector<u64> c = from_->coeffs(a);
    u64 out = 0;
    for (unsigned i = 0; i < from_->degree(); ++i)
        out = to_->add(out, to_->mul(c[i], gen_pows_[i]));
    return out;
}

}  // namespace ptl::arith
