#include "ptl/render.hpp"

#include <algorithm>
#include <cctype>

namespace ptl::cli {

using zeta::NewtonPolygon;

std::string rat_str(const Rat& r) { return r.str(); }

std::string polygon_str(const NewtonPolygon& np) {
    if (np.slopes.empty()) return "(empty)";
    long ord = std::min(np.mult_of(Rat(0)), np.mult_of(Rat(1)));
    long ss = np.mult_of(Rat(1, 2)) / 2;
    std::string out;
    auto append = [&](const std::string& block, long count) {
        if (count <= 0) return;
        if (!out.empty()) out += "+";
        out += block;
        if (count > 1) out += "^" + std::to_string(count);
    };
    append("ord", ord);
    for (const auto& [s, m] : np.slopes) {
        if (s == Rat(0) || s == Rat(1) || s == Rat(1, 2)) continue;
        if (s > Rat(1, 2)) continue;  // partner of a lower slope
        long t = s.den;
        if (np.mult_of(Rat(1) - s) == m && m % t == 0) {
            append("(" + s.str() + "," + (Rat(1) - s).str() + ")", m / t);
        } else {
            append(s.str(), m);  // fallback for asymmetric pieces
            append((Rat(1) - s).str(), np.mult_of(Rat(1) - s));
        }
    }
    // Leftover unpaired 0/1 slopes (asymmetric per-orbit polygons).
    if (np.mult_of(Rat(0)) != np.mult_of(Rat(1))) {
        long extra0 = np.mult_of(Rat(0)) - ord;
        long extra1 = np.mult_of(Rat(1)) - ord;
        append("0", extra0);
        append("1", extra1);
    }
    append("ss", ss);
    return out;
}

namespace {

struct PCursor {
    const std::string& s;
    std::size_t i = 0;

    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void err(const std::string& msg) {
        throw Error(errc::parse, msg + " at byte " + std::to_string(i), i);
    }
    long integer() {
        ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) err("expected integer");
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            v = v * 10 + (s[i++] - '0');
        return v;
    }
    Rat rat() {
        long n = integer();
        if (eat('/')) return Rat(n, integer());
        return Rat(n);
    }
};

}  // namespace

NewtonPolygon parse_polygon(const std::string& text) {
    PCursor cur{text};
    std::vector<std::pair<Rat, long>> slopes;
    bool first = true;
    while (true) {
        cur.ws();
        if (cur.i >= text.size()) break;
        if (!first) {
            if (!cur.eat('+')) cur.err("expected '+'");
        }
        first = false;
        cur.ws();
        long count = 1;
        if (text.compare(cur.i, 3, "ord") == 0) {
            cur.i += 3;
            if (cur.eat('^')) count = cur.integer();
            slopes.push_back({Rat(0), count});
            slopes.push_back({Rat(1), count});
        } else if (text.compare(cur.i, 2, "ss") == 0) {
            cur.i += 2;
            if (cur.eat('^')) count = cur.integer();
            slopes.push_back({Rat(1, 2), 2 * count});
        } else if (cur.eat('(')) {
            Rat a = cur.rat();
            if (!cur.eat(',')) cur.err("expected ','");
            Rat b = cur.rat();
            if (!cur.eat(')')) cur.err("expected ')'");
            if (!(a + b == Rat(1))) cur.err("pair slopes must sum to 1");
            if (cur.eat('^')) count = cur.integer();
            long t = std::max(a.den, b.den);
            slopes.push_back({a, t * count});
            if (!(a == b)) slopes.push_back({b, t * count});
        } else if (std::isdigit(static_cast<unsigned char>(text[cur.i]))) {
            Rat s = cur.rat();
            long mult = 1;
            if (cur.eat('^')) mult = cur.integer();
            slopes.push_back({s, mult});
        } else {
            cur.err("expected polygon block");
        }
    }
    if (slopes.empty()) cur.err("empty polygon");
    return zeta::polygon_from_slopes(std::move(slopes));
}

}  // namespace ptl::cli
