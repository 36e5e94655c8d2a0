#pragma once

/* Exact rational generating functions with (1 - t^a) denominator factors,
 * signed structure-theorem combinations, and dimension tables.
 *
 * Expansion works by seeding the numerator coefficients and sweeping one
 * geometric-series convolution per denominator factor; everything is exact
 * integer arithmetic. Equality of rational functions is decided by
 * cross-multiplying numerators against the other side's denominator.
 */

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coho {

using Coeffs = std::vector<long long>;  // dense, index = degree

struct RationalSeries {
    std::vector<std::pair<int, long long>> num;  // sparse (degree, coefficient)
    std::vector<int> den;                        // multiset of a, each a factor (1 - t^a)
};

inline RationalSeries make_series(std::vector<std::pair<int, long long>> num,
                                  std::vector<int> den) {
    for (auto& [d, c] : num)
        if (d < 0) throw std::invalid_argument("make_series: negative numerator degree");
    for (int a : den)
        if (a <= 0) throw std::invalid_argument("make_series: denominator exponent must be positive");
    std::sort(num.begin(), num.end());
    std::vector<std::pair<int, long long>> merged;
    for (auto& [d, c] : num) {
        if (!merged.empty() && merged.back().first == d)
            merged.back().second += c;
        else
            merged.push_back({d, c});
    }
    std::erase_if(merged, [](auto& p) { return p.second == 0; });
    std::sort(den.begin(), den.end());
    return {std::move(merged), std::move(den)};
}

inline Coeffs expand(const RationalSeries& s, int n_max) {
    if (n_max < 0) throw std::invalid_argument("expand: negative degree bound");
    Coeffs c(size_t(n_max) + 1, 0);
    for (auto& [d, k] : s.num)
        if (d <= n_max) c[size_t(d)] += k;
    for (int a : s.den)
        for (int i = a; i <= n_max; ++i) c[size_t(i)] += c[size_t(i - a)];
    return c;
}

// ---- dense polynomial helpers (for exact rational-function identities) ----

namespace detail {

inline Coeffs num_poly(const RationalSeries& s) {
    int top = 0;
    for (auto& [d, c] : s.num) top = std::max(top, d);
    Coeffs p(size_t(top) + 1, 0);
    for (auto& [d, c] : s.num) p[size_t(d)] += c;
    return p;
}

inline Coeffs poly_mul(const Coeffs& a, const Coeffs& b) {
    Coeffs r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

inline Coeffs den_poly(const std::vector<int>& den) {
    Coeffs p{1};
    for (int a : den) {
        Coeffs f(size_t(a) + 1, 0);
        f[0] = 1;
        f[size_t(a)] = -1;
        p = poly_mul(p, f);
    }
    return p;
}

inline void trim(Coeffs& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace detail

inline bool series_equal(const RationalSeries& a, const RationalSeries& b) {
    Coeffs lhs = detail::poly_mul(detail::num_poly(a), detail::den_poly(b.den));
    Coeffs rhs = detail::poly_mul(detail::num_poly(b), detail::den_poly(a.den));
    detail::trim(lhs);
    detail::trim(rhs);
    return lhs == rhs;
}

inline RationalSeries scale(const RationalSeries& s, long long c) {
    std::vector<std::pair<int, long long>> num;
    for (auto& [d, k] : s.num) num.push_back({d, c * k});
    return make_series(std::move(num), s.den);
}

inline RationalSeries add(const RationalSeries& a, const RationalSeries& b) {
    Coeffs n = detail::poly_mul(detail::num_poly(a), detail::den_poly(b.den));
    Coeffs m = detail::poly_mul(detail::num_poly(b), detail::den_poly(a.den));
    n.resize(std::max(n.size(), m.size()), 0);
    for (size_t i = 0; i < m.size(); ++i) n[i] += m[i];
    std::vector<std::pair<int, long long>> num;
    for (size_t i = 0; i < n.size(); ++i)
        if (n[i]) num.push_back({int(i), n[i]});
    std::vector<int> den = a.den;
    den.insert(den.end(), b.den.begin(), b.den.end());
    return make_series(std::move(num), std::move(den));
}

// ---- dimension tables ----

struct DimTable {
    std::string name;
    int lo = 0;
    Coeffs dims;

    int hi() const { return lo + int(dims.size()) - 1; }
    long long at(int d) const {
        if (d < lo || d > hi()) throw std::out_of_range("DimTable::at: degree " + std::to_string(d));
        return dims[size_t(d - lo)];
    }
};

inline DimTable table_from_series(std::string name, const RationalSeries& s, int n_max) {
    return {std::move(name), 0, expand(s, n_max)};
}

struct TableMismatch {
    int degree;
    long long lhs, rhs;
    bool operator==(const TableMismatch&) const = default;
};

inline std::vector<TableMismatch> compare(const DimTable& a, const DimTable& b) {
    int lo = std::max(a.lo, b.lo), hi = std::min(a.hi(), b.hi());
    if (lo > hi) throw std::invalid_argument("compare: tables '" + a.name + "' and '" + b.name +
                                             "' have no common degree");
    std::vector<TableMismatch> out;
    for (int d = lo; d <= hi; ++d)
        if (a.at(d) != b.at(d)) out.push_back({d, a.at(d), b.at(d)});
    return out;
}

// ---- structure theorems: signed sums of series that must stay non-negative ----

struct StructureTheorem {
    std::string name;
    std::vector<std::pair<long long, RationalSeries>> terms;  // (multiplicity, series)
};

struct NegativeCoefficient : std::runtime_error {
    int degree;
    Coeffs partials;  // contribution of each term at that degree, multiplicity applied

    NegativeCoefficient(const std::string& name, int deg, Coeffs parts)
        : std::runtime_error(format(name, deg, parts)), degree(deg), partials(std::move(parts)) {}

    static std::string format(const std::string& name, int deg, const Coeffs& parts) {
        std::ostringstream os;
        os << name << ": negative dimension at degree " << deg << " (partials:";
        for (auto p : parts) os << ' ' << p;
        os << ")";
        return os.str();
    }
};

inline DimTable combine(const StructureTheorem& st, int n_max) {
    std::vector<Coeffs> parts;
    for (auto& [mult, s] : st.terms) {
        Coeffs c = expand(s, n_max);
        for (auto& v : c) v *= mult;
        parts.push_back(std::move(c));
    }
    Coeffs total(size_t(n_max) + 1, 0);
    for (auto& p : parts)
        for (size_t i = 0; i < p.size(); ++i) total[i] += p[i];
    for (int d = 0; d <= n_max; ++d)
        if (total[size_t(d)] < 0) {
            Coeffs at;
            for (auto& p : parts) at.push_back(p[size_t(d)]);
            throw NegativeCoefficient(st.name, d, std::move(at));
        }
    return {st.name, 0, std::move(total)};
}

// single rational function carrying the whole signed sum
inline RationalSeries to_series(const StructureTheorem& st) {
    RationalSeries acc = make_series({}, {});
    for (auto& [mult, s] : st.terms) acc = add(acc, scale(s, mult));
    return acc;
}

// ---- literals:  num: [(0,1),(18,1)] den: [8,12]  ----

namespace detail {

struct SeriesParser {
    const std::string& s;
    size_t i = 0;

    explicit SeriesParser(const std::string& text) : s(text) {}

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
    void expect(char c) {
        if (!eat(c))
            throw std::invalid_argument("series literal: expected '" + std::string(1, c) +
                                        "' at position " + std::to_string(i));
    }
    void keyword(const std::string& k) {
        ws();
        if (s.compare(i, k.size(), k) != 0)
            throw std::invalid_argument("series literal: expected '" + k + "'");
        i += k.size();
    }
    long long integer() {
        ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw std::invalid_argument("series literal: expected integer at position " +
                                        std::to_string(start));
        return std::stoll(s.substr(start, i - start));
    }
};

}  // namespace detail

inline RationalSeries parse_series(const std::string& text) {
    detail::SeriesParser p(text);
    p.keyword("num:");
    p.expect('[');
    std::vector<std::pair<int, long long>> num;
    if (!p.eat(']')) {
        do {
            p.expect('(');
            int d = int(p.integer());
            p.expect(',');
            long long c = p.integer();
            p.expect(')');
            num.push_back({d, c});
        } while (p.eat(','));
        p.expect(']');
    }
    p.keyword("den:");
    p.expect('[');
    std::vector<int> den;
    if (!p.eat(']')) {
        do den.push_back(int(p.integer()));
        while (p.eat(','));
        p.expect(']');
    }
    p.ws();
    if (p.i != text.size())
        throw std::invalid_argument("series literal: trailing input at position " +
                                    std::to_string(p.i));
    return make_series(std::move(num), std::move(den));
}

inline std::string render_series(const RationalSeries& s) {
    std::ostringstream os;
    os << "num: [";
    for (size_t k = 0; k < s.num.size(); ++k) {
        if (k) os << ',';
        os << '(' << s.num[k].first << ',' << s.num[k].second << ')';
    }
    os << "] den: [";
    for (size_t k = 0; k < s.den.size(); ++k) {
        if (k) os << ',';
        os << s.den[k];
    }
    os << ']';
    return os.str();
}

// ---- table export ----

inline std::string to_csv(const DimTable& t) {
    std::ostringstream os;
    os << "degree,dim\n";
    for (int d = t.lo; d <= t.hi(); ++d) os << d << ',' << t.at(d) << '\n';
    return os.str();
}

inline std::string to_json(const DimTable& t) {
    std::ostringstream os;
    os << "{\"name\":\"";
    for (char c : t.name) {
        if (c == '"' || c == '\\') os << '\\';
        os << c;
    }
    os << "\",\"degrees\":[";
    for (int d = t.lo; d <= t.hi(); ++d) os << (d > t.lo ? "," : "") << d;
    os << "],\"dims\":[";
    for (int d = t.lo; d <= t.hi(); ++d) os << (d > t.lo ? "," : "") << t.at(d);
    os << "]}";
    return os.str();
}

// ---- named series and structure theorems used across the workbench ----

inline const std::map<std::string, RationalSeries>& series_registry() {
    static const std::map<std::string, RationalSeries> reg = [] {
        std::map<std::string, RationalSeries> r;
        r["psu-radical"] = make_series({{2, 1}, {7, 1}, {11, 1}, {14, 1}}, {8, 12});
        r["mcl-radical"] = make_series({{7, 1}, {11, 1}}, {8, 12});
        r["a6-invariants"] = make_series({{0, 1}, {9, 1}, {15, 1}, {24, 1}}, {3, 5, 8, 12});
        r["a7-invariants"] = make_series(
            {{0, 1}, {18, 1}, {20, 1}, {21, 1}, {24, 1}, {25, 1}, {27, 1}, {45, 1}},
            {8, 12, 14, 15});
        r["psu-double"] = make_series({{0, 1}, {3, 1}, {15, 1}, {18, 1}}, {8, 12});
        r["mcl-double"] = make_series({{0, 1}, {18, 1}}, {8, 12});
        r["dickson4"] = make_series({{0, 1}}, {8, 12, 14, 15});
        r["dickson2"] = make_series({{0, 1}}, {2, 3});
        // (t^7 - 1)(1 - t^11) over the same denominator: the closed-form correction
        // that turns 2 * a7-invariants into the McL series
        r["mcl-extra"] = make_series({{0, -1}, {7, 1}, {11, 1}, {18, -1}}, {8, 12});
        // F2[d8,d12,e1](1, a7, a11, x18) e1 summand of the N series
        r["n-extra"] = make_series({{1, 1}, {8, 1}, {12, 1}, {19, 1}}, {1, 8, 12});
        return r;
    }();
    return reg;
}

inline const RationalSeries& named_series(const std::string& name) {
    auto& reg = series_registry();
    auto it = reg.find(name);
    if (it == reg.end()) throw std::invalid_argument("unknown series '" + name + "'");
    return it->second;
}

inline const std::map<std::string, StructureTheorem>& theorem_registry() {
    static const std::map<std::string, StructureTheorem> reg = [] {
        std::map<std::string, StructureTheorem> r;
        auto& s = series_registry();
        r["psu-total"] = {"psu-total",
                          {{1, s.at("psu-radical")}, {2, s.at("a6-invariants")},
                           {-1, s.at("psu-double")}}};
        r["psu-expansion"] = {"psu-expansion",
                              {{2, s.at("a6-invariants")}, {-1, s.at("psu-double")}}};
        r["mcl-total"] = {"mcl-total",
                          {{1, s.at("mcl-radical")}, {2, s.at("a7-invariants")},
                           {-1, s.at("mcl-double")}}};
        r["mcl-closed"] = {"mcl-closed", {{2, s.at("a7-invariants")}, {1, s.at("mcl-extra")}}};
        r["n-total"] = {"n-total",
                        {{1, s.at("mcl-radical")}, {1, s.at("a7-invariants")},
                         {1, s.at("n-extra")}}};
        return r;
    }();
    return reg;
}

inline const StructureTheorem& named_theorem(const std::string& name) {
    auto& reg = theorem_registry();
    auto it = reg.find(name);
    if (it == reg.end()) throw std::invalid_argument("unknown structure theorem '" + name + "'");
    return it->second;
}

}  // namespace coho
