#include "lpm/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "lpm/errors.hpp"

namespace lpm {

Monomial::Monomial(int nvars) : exps_(static_cast<size_t>(nvars), 0) {
    if (nvars < 1) throw InputError("monomial needs at least one variable");
}

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    if (exps_.empty()) throw InputError("monomial needs at least one variable");
    for (int e : exps_) {
        if (e < 0) throw InputError("monomial exponents must be nonnegative");
    }
    degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

int Monomial::exponent(int i) const {
    if (i < 0 || i >= nvars()) return 0;
    return exps_[static_cast<size_t>(i)];
}

bool Monomial::is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
    if (nvars() != other.nvars()) throw InputError("monomial width mismatch in divisibility test");
    for (size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

Monomial Monomial::times_var(int i) const {
    if (i < 0 || i >= nvars()) throw InputError("variable index out of range");
    Monomial m = *this;
    ++m.exps_[static_cast<size_t>(i)];
    ++m.degree_;
    return m;
}

Monomial Monomial::div_var(int i) const {
    if (i < 0 || i >= nvars() || exps_[static_cast<size_t>(i)] == 0)
        throw InputError("cannot divide by x" + std::to_string(i));
    Monomial m = *this;
    --m.exps_[static_cast<size_t>(i)];
    --m.degree_;
    return m;
}

Monomial Monomial::swap_var(int from, int to) const {
    return div_var(from).times_var(to);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw InputError("monomial width mismatch in product");
    Monomial m = a;
    for (size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] += b.exps_[i];
    m.degree_ += b.degree_;
    return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    if (!b.divides(a)) throw InputError("inexact monomial quotient");
    Monomial m = a;
    for (size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] -= b.exps_[i];
    m.degree_ -= b.degree_;
    return m;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    if (auto c = nvars() <=> o.nvars(); c != 0) return c;
    for (size_t i = 0; i < exps_.size(); ++i) {
        if (auto c = exps_[i] <=> o.exps_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::string Monomial::str() const {
    if (is_unit()) return "1";
    std::string out;
    for (int i = 0; i < nvars(); ++i) {
        int e = exps_[static_cast<size_t>(i)];
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(i);
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

namespace {

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int parse_uint(std::string_view s, const std::string& what) {
    if (s.empty()) throw InputError("monomial parse error: missing number after " + what);
    long v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw InputError("monomial parse error: bad number '" + std::string(s) + "'");
        v = v * 10 + (c - '0');
        if (v > 1'000'000) throw InputError("monomial parse error: number out of range");
    }
    return static_cast<int>(v);
}

Monomial parse_vector_form(std::string_view body, int nvars) {
    std::vector<int> exps;
    size_t pos = 0;
    while (pos <= body.size()) {
        size_t comma = body.find(',', pos);
        std::string_view tok = trimmed(body.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
        if (tok.empty() && exps.empty() && comma == std::string_view::npos) break; // "[]"
        exps.push_back(parse_uint(tok, "vector entry"));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (static_cast<int>(exps.size()) != nvars)
        throw InputError("monomial vector form has " + std::to_string(exps.size()) +
                         " entries, instance has " + std::to_string(nvars) + " variables");
    return Monomial(std::move(exps));
}

} // namespace

Monomial Monomial::parse(std::string_view text, int nvars) {
    std::string_view s = trimmed(text);
    if (s.empty()) throw InputError("monomial parse error: empty input");
    if (s.front() == '[') {
        if (s.back() != ']') throw InputError("monomial parse error: unterminated '['");
        return parse_vector_form(s.substr(1, s.size() - 2), nvars);
    }
    if (s == "1") return Monomial(nvars);

    Monomial m(nvars);
    size_t pos = 0;
    while (pos < s.size()) {
        size_t star = s.find('*', pos);
        std::string_view term = trimmed(s.substr(pos, star == std::string_view::npos ? star : star - pos));
        if (term.empty() || term.front() != 'x')
            throw InputError("monomial parse error: expected x<idx> term, got '" + std::string(term) + "'");
        term.remove_prefix(1);
        size_t caret = term.find('^');
        int idx = parse_uint(trimmed(term.substr(0, caret)), "'x'");
        int exp = 1;
        if (caret != std::string_view::npos) exp = parse_uint(trimmed(term.substr(caret + 1)), "'^'");
        if (idx >= nvars)
            throw InputError("monomial parse error: x" + std::to_string(idx) + " is outside x0..x" +
                             std::to_string(nvars - 1));
        for (int k = 0; k < exp; ++k) m = m.times_var(idx);
        if (star == std::string_view::npos) break;
        pos = star + 1;
    }
    return m;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (int e : m.exponents()) {
        h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace lpm
