#include "stringhom/complex_x.hpp"

#include <algorithm>
#include <stdexcept>

namespace stringhom {

namespace {

void require_f00(const Element& e, const char* op) {
    if (e.complex() != Cx::F00)
        throw std::invalid_argument(std::string(op) + " expects an element of f00");
}

// Terms of the Leibniz differential of a closed monomial: for each even
// subscript n = 2k with odd exponent, m * x_n^{-1} * x_k^2.
void diff_closed_into(Element& out, const OpenTag& tag, const ClosedMonomial& m) {
    for (auto [n, e] : m.factors()) {
        if (n % 2 != 0 || e % 2 == 0) continue;
        out.toggle({tag, m.times_var(n, -1).times_var(n / 2, 2)});
    }
}

} // namespace

Element diff_x(const Element& e) {
    require_f00(e, "diff_x");
    Element r(Cx::F00);
    for (const auto& g : e.terms()) diff_closed_into(r, g.tag, g.closed);
    return r;
}

OddDecomposition odd_decompose(int n) {
    if (n == 0) throw std::invalid_argument("odd_decompose: n must be nonzero");
    int k = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++k;
    }
    return {n, k};
}

Element decay(int j, int k, const Element& e) {
    if (j % 2 == 0) throw std::invalid_argument("decay: j must be odd");
    if (k < 1) throw std::invalid_argument("decay: k must be at least 1");
    const int hi = j << k, lo = j << (k - 1);
    Element r(e.complex());
    for (const auto& g : e.terms()) {
        if (g.closed.exponent_of(hi) % 2 == 0) continue;
        r.toggle({g.tag, g.closed.times_var(hi, -1).times_var(lo, 2)});
    }
    return r;
}

Element fusion(int j, int k, const Element& e) {
    if (j % 2 == 0) throw std::invalid_argument("fusion: j must be odd");
    if (k < 1) throw std::invalid_argument("fusion: k must be at least 1");
    const int hi = j << k, lo = j << (k - 1);
    Element r(e.complex());
    for (const auto& g : e.terms()) {
        if (g.closed.exponent_of(lo) < 2) continue;
        r.toggle({g.tag, g.closed.times_var(lo, -2).times_var(hi, 1)});
    }
    return r;
}

// ---------------------------------------------------------------------------

YMonomial YMonomial::var(int index, int exponent) {
    if (index < 0) throw std::invalid_argument("y index must be nonnegative");
    if (exponent <= 0) throw std::invalid_argument("y exponent must be positive");
    YMonomial m;
    m.factors_.emplace_back(index, exponent);
    return m;
}

int YMonomial::exponent_of(int index) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), index,
                               [](const auto& f, int i) { return f.first < i; });
    return (it != factors_.end() && it->first == index) ? it->second : 0;
}

YMonomial YMonomial::times_var(int index, int delta) const {
    if (index < 0) throw std::invalid_argument("y index must be nonnegative");
    YMonomial r = *this;
    auto it = std::lower_bound(r.factors_.begin(), r.factors_.end(), index,
                               [](const auto& f, int i) { return f.first < i; });
    if (it != r.factors_.end() && it->first == index) {
        it->second += delta;
        if (it->second < 0) throw std::invalid_argument("negative exponent in times_var");
        if (it->second == 0) r.factors_.erase(it);
    } else {
        if (delta < 0) throw std::invalid_argument("negative exponent in times_var");
        if (delta > 0) r.factors_.insert(it, {index, delta});
    }
    return r;
}

long YMonomial::grade() const {
    long g = 0;
    for (auto [i, e] : factors_) g += static_cast<long>(e) << i;
    return g;
}

YElement YElement::single(YMonomial m) {
    YElement e;
    e.toggle(std::move(m));
    return e;
}

void YElement::toggle(YMonomial m) {
    auto [it, inserted] = terms_.insert(std::move(m));
    if (!inserted) terms_.erase(it);
}

YElement& YElement::operator+=(const YElement& o) {
    for (const auto& m : o.terms_) toggle(m);
    return *this;
}

YElement diff_y(const YElement& e) {
    YElement r;
    for (const auto& m : e.terms())
        for (auto [i, ex] : m.factors()) {
            if (i == 0 || ex % 2 == 0) continue;
            r.toggle(m.times_var(i, -1).times_var(i - 1, 2));
        }
    return r;
}

YElement alpha_y(int k, const YElement& e) {
    if (k < 0) throw std::invalid_argument("alpha_y: k must be nonnegative");
    YElement r;
    if (k == 0) return r;
    for (const auto& m : e.terms()) {
        if (m.exponent_of(k) % 2 == 0) continue;
        r.toggle(m.times_var(k, -1).times_var(k - 1, 2));
    }
    return r;
}

YElement alpha_y_star(int k, const YElement& e) {
    if (k < 0) throw std::invalid_argument("alpha_y_star: k must be nonnegative");
    YElement r;
    if (k == 0) return r;
    for (const auto& m : e.terms()) {
        if (m.exponent_of(k - 1) < 2) continue;
        r.toggle(m.times_var(k - 1, -2).times_var(k, 1));
    }
    return r;
}

Level level_of(const YMonomial& m) {
    const int e0 = m.exponent_of(0);
    const int e1 = m.exponent_of(1);
    if (e0 >= 2 || e1 % 2 == 1) return Level::at(0);
    // Now e0 <= 1 and e1 is even.
    int j = 0; // smallest positive index with nonzero exponent
    for (auto [i, ex] : m.factors())
        if (i >= 1) {
            j = i;
            break;
        }
    if (j == 0) return Level::inf(); // m is 1 or y_0
    return m.exponent_of(j) % 2 == 0 ? Level::at(j) : Level::at(j - 1);
}

// ---------------------------------------------------------------------------

bool is_fermionic(const ClosedMonomial& m) {
    for (auto [k, e] : m.factors())
        if (k % 2 == 0 || e != 1) return false;
    return true;
}

bool is_clean_pos(const ClosedMonomial& m) {
    return is_fermionic(m) && m.exponent_of(1) == 0;
}

bool is_clean_neg(const ClosedMonomial& m) {
    return is_fermionic(m) && m.exponent_of(-1) == 0;
}

bool is_clean_total(const ClosedMonomial& m) {
    return is_fermionic(m) && m.exponent_of(1) == 0 && m.exponent_of(-1) == 0;
}

namespace {

void fermionic_rec(const std::vector<int>& subs, std::size_t idx, int winding, int budget,
                   std::vector<int>& chosen, std::vector<ClosedMonomial>& out) {
    // Prune: remaining subscripts cannot bridge the winding gap within budget.
    if (winding != 0 && (winding < 0 ? -winding : winding) > budget) return;
    if (idx == subs.size()) {
        if (winding != 0) return;
        ClosedMonomial m;
        for (int s : chosen) m = m.times_var(s, 1);
        out.push_back(std::move(m));
        return;
    }
    fermionic_rec(subs, idx + 1, winding, budget, chosen, out);
    int s = subs[idx];
    int w = s < 0 ? -s : s;
    if (w <= budget) {
        chosen.push_back(s);
        fermionic_rec(subs, idx + 1, winding - s, budget - w, chosen, out);
        chosen.pop_back();
    }
}

} // namespace

std::vector<ClosedMonomial> fermionic_monomials(HalfInt winding, HalfInt max_weight,
                                                bool exclude_pos1, bool exclude_neg1) {
    std::vector<ClosedMonomial> out;
    if (!winding.is_whole()) return out;
    const long w = winding.whole_value();
    const long maxw = max_weight.doubled() >> 1; // floor; weights are integers
    if (maxw < 0) return out;
    std::vector<int> subs;
    for (int s = 1; s <= maxw; s += 2) {
        if (!(exclude_pos1 && s == 1)) subs.push_back(s);
        if (!(exclude_neg1 && s == 1)) subs.push_back(-s);
    }
    std::vector<int> chosen;
    fermionic_rec(subs, 0, static_cast<int>(w), static_cast<int>(maxw), chosen, out);
    std::sort(out.begin(), out.end(), [](const ClosedMonomial& a, const ClosedMonomial& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        if (a.string_count() != b.string_count()) return a.string_count() < b.string_count();
        return a < b;
    });
    return out;
}

namespace {

void y_rec(int index, long rem, YMonomial cur, std::vector<YMonomial>& out) {
    out.push_back(cur);
    for (int i = index;; ++i) {
        long unit = 1L << i;
        if (unit > rem) break;
        for (long e = 1; e * unit <= rem; ++e)
            y_rec(i + 1, rem - e * unit, cur.times_var(i, static_cast<int>(e)), out);
    }
}

} // namespace

std::vector<YMonomial> y_monomials_up_to(long max_grade) {
    std::vector<YMonomial> out;
    if (max_grade < 0) return out;
    y_rec(0, max_grade, YMonomial(), out);
    std::sort(out.begin(), out.end(), [](const YMonomial& a, const YMonomial& b) {
        if (a.grade() != b.grade()) return a.grade() < b.grade();
        return a < b;
    });
    return out;
}

std::vector<YMonomial> y_monomials_of_grade(long grade) {
    std::vector<YMonomial> out;
    for (auto& m : y_monomials_up_to(grade))
        if (m.grade() == grade) out.push_back(std::move(m));
    return out;
}

} // namespace stringhom
