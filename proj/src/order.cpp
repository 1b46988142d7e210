#include "lpm/order.hpp"

#include <algorithm>
#include <array>
#include <cstring>

#include "lpm/errors.hpp"

namespace lpm {

Convention parse_convention(std::string_view text) {
    if (text == "HI" || text == "hi") return Convention::HI;
    if (text == "LO" || text == "lo") return Convention::LO;
    throw InputError("unknown convention '" + std::string(text) + "' (expected HI or LO)");
}

std::string convention_name(Convention c) { return c == Convention::HI ? "HI" : "LO"; }

Ordering reverse(Ordering o) {
    if (o == Ordering::Less) return Ordering::Greater;
    if (o == Ordering::Greater) return Ordering::Less;
    return Ordering::Equal;
}

LVector l_vector(const LatticePath& p) {
    const int n = p.n();
    const int r = p.r();
    LVector v(static_cast<size_t>(n) * static_cast<size_t>(r), 0);
    int prev = 0;
    for (int i = 0; i < n; ++i) {
        int top = p.east_heights()[static_cast<size_t>(i)];
        if (top > prev) v[static_cast<size_t>(i * r + (r - top))] = 1;
        prev = top;
    }
    return v;
}

std::string format_lvector(const LVector& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    out += ')';
    return out;
}

bool factor_precedes(const LatticePath& a, const LatticePath& b) {
    // HI precede on l-vectors; equal l-vectors mean equal paths, so the
    // word comparison only breaks ties between distinct shapes.
    LVector la = l_vector(a);
    LVector lb = l_vector(b);
    for (size_t i = 0; i < la.size() && i < lb.size(); ++i) {
        if (la[i] != lb[i]) return la[i] > lb[i];
    }
    return a.word() < b.word();
}

BaseRingMonomial::BaseRingMonomial(int n, int r) : n_(n), r_(r) {
    if (n < 0 || r < 0 || n + r < 1) throw InputError("base ring monomial needs n + r >= 1");
}

BaseRingMonomial::BaseRingMonomial(std::vector<LatticePath> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw InputError("use the (n, r) constructor for the unit monomial");
    n_ = factors_.front().n();
    r_ = factors_.front().r();
    for (const LatticePath& f : factors_) {
        if (f.n() != n_ || f.r() != r_)
            throw InputError("base ring monomial factors live over different (n, r)");
    }
    std::sort(factors_.begin(), factors_.end(),
              [](const LatticePath& a, const LatticePath& b) { return factor_precedes(a, b); });
}

Monomial BaseRingMonomial::image() const {
    Monomial out(n_ + 1);
    for (const LatticePath& f : factors_) out = out * path_monomial(f);
    return out;
}

BaseRingMonomial operator*(const BaseRingMonomial& a, const BaseRingMonomial& b) {
    if (a.n_ != b.n_ || a.r_ != b.r_) throw InputError("base ring monomial dimension mismatch");
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    std::vector<LatticePath> merged = a.factors_;
    merged.insert(merged.end(), b.factors_.begin(), b.factors_.end());
    return BaseRingMonomial(std::move(merged));
}

bool BaseRingMonomial::divides(const BaseRingMonomial& other) const {
    if (n_ != other.n_ || r_ != other.r_) throw InputError("base ring monomial dimension mismatch");
    size_t j = 0;
    for (const LatticePath& f : factors_) {
        while (j < other.factors_.size() && other.factors_[j].word() != f.word()) ++j;
        if (j == other.factors_.size()) return false;
        ++j;
    }
    return true;
}

BaseRingMonomial BaseRingMonomial::divide_by(const BaseRingMonomial& b) const {
    if (!b.divides(*this)) throw InputError("inexact base ring monomial quotient");
    std::vector<LatticePath> rest;
    std::vector<bool> used(b.factors_.size(), false);
    for (const LatticePath& f : factors_) {
        bool removed = false;
        for (size_t k = 0; k < b.factors_.size(); ++k) {
            if (!used[k] && b.factors_[k].word() == f.word()) {
                used[k] = true;
                removed = true;
                break;
            }
        }
        if (!removed) rest.push_back(f);
    }
    if (rest.empty()) return BaseRingMonomial(n_, r_);
    return BaseRingMonomial(std::move(rest));
}

BaseRingMonomial BaseRingMonomial::lcm(const BaseRingMonomial& a, const BaseRingMonomial& b) {
    if (a.n_ != b.n_ || a.r_ != b.r_) throw InputError("base ring monomial dimension mismatch");
    // Per-factor max multiplicity; both lists are canonically sorted.
    std::vector<LatticePath> out = a.factors_;
    std::vector<bool> matched(a.factors_.size(), false);
    for (const LatticePath& f : b.factors_) {
        bool found = false;
        for (size_t k = 0; k < a.factors_.size(); ++k) {
            if (!matched[k] && a.factors_[k].word() == f.word()) {
                matched[k] = true;
                found = true;
                break;
            }
        }
        if (!found) out.push_back(f);
    }
    if (out.empty()) return BaseRingMonomial(a.n_, a.r_);
    return BaseRingMonomial(std::move(out));
}

bool BaseRingMonomial::operator==(const BaseRingMonomial& o) const {
    if (n_ != o.n_ || r_ != o.r_ || factors_.size() != o.factors_.size()) return false;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].word() != o.factors_[i].word()) return false;
    }
    return true;
}

std::string BaseRingMonomial::key() const {
    std::string out;
    for (const LatticePath& f : factors_) {
        out += f.word();
        out += '|';
    }
    return out;
}

std::string BaseRingMonomial::str() const {
    if (is_unit()) return "1";
    std::string out;
    for (const LatticePath& f : factors_) {
        if (!out.empty()) out += '*';
        out += "Y{" + path_monomial(f).str() + "}";
    }
    return out;
}

std::string BaseRingMonomial::vertex_str() const {
    std::string out = "{";
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += ", ";
        out += path_monomial(factors_[i]).str();
    }
    out += '}';
    return out;
}

bool l_precedes(const LVector& a, const LVector& b, Convention conv) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return conv == Convention::HI ? a[i] > b[i] : a[i] < b[i];
    }
    return false;
}

LVector l_sum(const BaseRingMonomial& M) {
    LVector out(static_cast<size_t>(M.n()) * static_cast<size_t>(M.r()), 0);
    for (const LatticePath& f : M.factors()) {
        LVector lf = l_vector(f);
        for (size_t i = 0; i < out.size(); ++i) out[i] += lf[i];
    }
    return out;
}

namespace {

bool ref_precedes(const FactorRef& a, const FactorRef& b, int nr, Convention conv) {
    for (int i = 0; i < nr; ++i) {
        if (a.lvec[i] != b.lvec[i]) return conv == Convention::HI ? a.lvec[i] > b.lvec[i] : a.lvec[i] < b.lvec[i];
    }
    return a.word < b.word;
}

} // namespace

Ordering compare_factor_lists(std::span<const FactorRef> a, std::span<const FactorRef> b, int nr,
                              Convention conv) {
    // Degree rule first: grades the same-degree comparisons into a full order.
    if (a.size() != b.size()) return a.size() > b.size() ? Ordering::Greater : Ordering::Less;

    // l-sum comparison, coordinate by coordinate with early exit.
    for (int i = 0; i < nr; ++i) {
        int sa = 0, sb = 0;
        for (const FactorRef& f : a) sa += f.lvec[i];
        for (const FactorRef& f : b) sb += f.lvec[i];
        if (sa != sb) {
            bool first_greater = conv == Convention::HI ? sa > sb : sa < sb;
            return first_greater ? Ordering::Greater : Ordering::Less;
        }
    }

    // Tie-break: sort both lists by the convention's precede relation and
    // invert the factor comparison at the first differing position.
    constexpr size_t kMaxInline = 32;
    if (a.size() > kMaxInline) throw InputError("base ring monomial degree exceeds the supported bound");
    std::array<FactorRef, kMaxInline> sa_buf, sb_buf;
    std::copy(a.begin(), a.end(), sa_buf.begin());
    std::copy(b.begin(), b.end(), sb_buf.begin());
    auto cmp = [nr, conv](const FactorRef& x, const FactorRef& y) { return ref_precedes(x, y, nr, conv); };
    std::sort(sa_buf.begin(), sa_buf.begin() + a.size(), cmp);
    std::sort(sb_buf.begin(), sb_buf.begin() + b.size(), cmp);
    for (size_t i = 0; i < a.size(); ++i) {
        const FactorRef& sigma = sa_buf[i];
        const FactorRef& tau = sb_buf[i];
        if (sigma.word == tau.word) continue;
        return ref_precedes(tau, sigma, nr, conv) ? Ordering::Greater : Ordering::Less;
    }
    return Ordering::Equal;
}

namespace {

Ordering compare_brm(const BaseRingMonomial& M, const BaseRingMonomial& M_prime, Convention conv) {
    if (M.n() != M_prime.n() || M.r() != M_prime.r())
        throw InputError("cannot compare base ring monomials over different (n, r)");
    const int nr = M.n() * M.r();
    std::vector<LVector> store;
    store.reserve(M.factors().size() + M_prime.factors().size());
    std::vector<FactorRef> ra, rb;
    for (const LatticePath& f : M.factors()) {
        store.push_back(l_vector(f));
        ra.push_back(FactorRef{store.back().data(), f.word()});
    }
    for (const LatticePath& f : M_prime.factors()) {
        store.push_back(l_vector(f));
        rb.push_back(FactorRef{store.back().data(), f.word()});
    }
    return compare_factor_lists(ra, rb, nr, conv);
}

} // namespace

Ordering compare_l(const BaseRingMonomial& M, const BaseRingMonomial& M_prime, Convention conv) {
    return compare_brm(M, M_prime, conv);
}

Ordering compare_L_matroid(const BaseRingMonomial& M, const BaseRingMonomial& M_prime, Convention conv) {
    auto embed = [](const BaseRingMonomial& b) {
        if (b.is_unit()) return BaseRingMonomial(b.n() + b.r(), b.r());
        std::vector<LatticePath> factors;
        factors.reserve(b.factors().size());
        for (const LatticePath& f : b.factors()) factors.push_back(embed_squarefree(f));
        return BaseRingMonomial(std::move(factors));
    };
    if (M.n() != M_prime.n() || M.r() != M_prime.r())
        throw InputError("cannot compare base ring monomials over different (n, r)");
    return compare_brm(embed(M), embed(M_prime), conv);
}

} // namespace lpm
