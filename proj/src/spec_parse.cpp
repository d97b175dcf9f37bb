#include "ptl/spec_parse.hpp"

#include <cctype>
#include <map>

namespace ptl::cli {

using arith::Fq;
using arith::Poly;
using arith::u64;

namespace {

class Cursor {
  public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) err(std::string("expected '") + c + "'");
    }
    std::size_t pos() {
        skip_ws();
        return pos_;
    }
    [[noreturn]] void err(const std::string& msg) { err_at(msg, pos_); }
    [[noreturn]] void err_at(const std::string& msg, std::size_t at) {
        throw Error(errc::parse, msg + " at byte " + std::to_string(at), at);
    }
    u64 integer() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            err("expected integer");
        u64 v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<u64>(text_[pos_] - '0');
            if (v > (u64(1) << 62)) err("integer literal too large");
            ++pos_;
        }
        return v;
    }
    std::string word() {
        skip_ws();
        std::string w;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            w += text_[pos_++];
        return w;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// Parses a polynomial in `var` over F, with 't' as the generator literal.
// Grammar: sum of signed terms; term := factor ('*' factor)*;
// factor := integer | var['^'e] | 't'['^'e].
Poly parse_poly(Cursor& cur, const Fq& F, char var) {
    // exponents of (var, t) -> coefficient
    std::map<std::pair<u64, u64>, u64> terms;
    bool first = true;
    while (true) {
        cur.skip_ws();
        char c = cur.peek();
        u64 sign = 1;
        if (c == '+' || c == '-') {
            cur.eat(c);
            if (c == '-') sign = F.neg(F.one());
        } else if (!first) {
            break;  // end of polynomial
        }
        first = false;
        u64 coeff = sign;
        u64 var_exp = 0, gen_exp = 0;
        bool any = false;
        while (true) {
            cur.skip_ws();
            char f = cur.peek();
            if (std::isdigit(static_cast<unsigned char>(f))) {
                coeff = F.mul(coeff, F.from_int(static_cast<std::int64_t>(cur.integer() % F.p())));
                any = true;
            } else if (f == var) {
                cur.eat(var);
                u64 e = 1;
                if (cur.eat('^')) e = cur.integer();
                var_exp += e;
                any = true;
            } else if (f == 't') {
                cur.eat('t');
                if (F.degree() == 1) cur.err("generator 't' requires an extension field");
                u64 e = 1;
                if (cur.eat('^')) e = cur.integer();
                gen_exp += e;
                any = true;
            } else {
                break;
            }
            if (!cur.eat('*')) {
                // implicit adjacency is not in the grammar; stop unless the
                // next char continues a factor without '*'
                char nx = cur.peek();
                if (nx == var || nx == 't' || std::isdigit(static_cast<unsigned char>(nx)))
                    cur.err("missing '*' between factors");
                break;
            }
        }
        if (!any) cur.err("expected term");
        if (var_exp > 4096) cur.err("exponent too large");
        u64 key_coeff = F.mul(coeff, F.pow(F.gen(), gen_exp));
        auto key = std::make_pair(var_exp, u64(0));
        u64& slot = terms[key];
        slot = F.add(slot, key_coeff);
    }
    u64 max_deg = 0;
    for (const auto& [k, v] : terms)
        if (v != 0) max_deg = std::max(max_deg, k.first);
    std::vector<u64> c(max_deg + 1, 0);
    bool nonzero = false;
    for (const auto& [k, v] : terms) {
        if (v == 0) continue;
        c[k.first] = F.add(c[k.first], v);
        nonzero = true;
    }
    if (!nonzero) c.clear();
    return arith::poly_from_coeffs(std::move(c));
}

u64 parse_element(Cursor& cur, const Fq& F) {
    Poly p = parse_poly(cur, F, '\1');  // no main variable: constants and t only
    if (p.degree() > 0) cur.err("expected field element");
    return p.coeff(0);
}

Fq parse_field(Cursor& cur) {
    cur.skip_ws();
    if (!cur.eat('F')) cur.err("expected field 'F<p>[^k]'");
    u64 p = cur.integer();
    u64 k = 1;
    if (cur.eat('^')) k = cur.integer();
    if (k == 0 || k > 64) cur.err("bad extension degree");
    return Fq::make(p, static_cast<unsigned>(k));
}

}  // namespace

curves::CurveModel parse_curve_spec(std::string_view text) {
    Cursor cur(text);
    std::size_t kind_at = cur.pos();
    std::string kind = cur.word();
    if (kind != "hyp" && kind != "sup" && kind != "add")
        cur.err_at("kind must be hyp, sup or add", kind_at);
    cur.expect(';');
    Fq F = parse_field(cur);
    cur.expect(';');

    if (kind == "hyp") {
        if (cur.word() != "h") cur.err("expected 'h='");
        cur.expect('=');
        Poly h = parse_poly(cur, F, 'x');
        if (!cur.done()) cur.err("trailing input");
        return curves::HyperellipticModel{F, h};
    }
    if (kind == "sup") {
        if (cur.word() != "m") cur.err("expected 'm='");
        cur.expect('=');
        u64 m = cur.integer();
        cur.expect(';');
        if (cur.word() != "a") cur.err("expected 'a='");
        cur.expect('=');
        std::vector<u64> a;
        a.push_back(cur.integer());
        while (cur.eat(',')) a.push_back(cur.integer());
        cur.expect(';');
        if (cur.word() != "b") cur.err("expected 'b='");
        cur.expect('=');
        std::vector<u64> b;
        b.push_back(parse_element(cur, F));
        while (cur.eat(',')) b.push_back(parse_element(cur, F));
        if (!cur.done()) cur.err("trailing input");
        return curves::SuperellipticModel{F, m, b, a};
    }
    if (cur.word() != "A") cur.err("expected 'A='");
    cur.expect('=');
    Poly A = parse_poly(cur, F, 'y');
    cur.expect(';');
    if (cur.word() != "h") cur.err("expected 'h='");
    cur.expect('=');
    Poly h = parse_poly(cur, F, 'x');
    if (!cur.done()) cur.err("trailing input");
    return curves::AdditiveCoverModel{F, A, h};
}

}  // namespace ptl::cli
