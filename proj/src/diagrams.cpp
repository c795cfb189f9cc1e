#include "stringhom/diagrams.hpp"

#include <algorithm>
#include <stdexcept>

namespace stringhom {

const char* name(Cx cx) {
    switch (cx) {
        case Cx::F00: return "f00";
        case Cx::F11: return "f11";
        case Cx::F02: return "f02";
        case Cx::F22: return "f22";
    }
    return "?";
}

ClosedMonomial ClosedMonomial::var(int subscript, int exponent) {
    if (subscript == 0) throw std::invalid_argument("closed curve subscript must be nonzero");
    if (exponent <= 0) throw std::invalid_argument("closed curve exponent must be positive");
    ClosedMonomial m;
    m.factors_.emplace_back(subscript, exponent);
    return m;
}

int ClosedMonomial::exponent_of(int subscript) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), subscript,
                               [](const auto& f, int s) { return f.first < s; });
    return (it != factors_.end() && it->first == subscript) ? it->second : 0;
}

ClosedMonomial ClosedMonomial::times(const ClosedMonomial& o) const {
    ClosedMonomial r;
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first < b->first)
            r.factors_.push_back(*a++);
        else if (a->first > b->first)
            r.factors_.push_back(*b++);
        else {
            r.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    r.factors_.insert(r.factors_.end(), a, factors_.end());
    r.factors_.insert(r.factors_.end(), b, o.factors_.end());
    return r;
}

ClosedMonomial ClosedMonomial::times_var(int subscript, int delta) const {
    if (subscript == 0) throw std::invalid_argument("closed curve subscript must be nonzero");
    ClosedMonomial r = *this;
    auto it = std::lower_bound(r.factors_.begin(), r.factors_.end(), subscript,
                               [](const auto& f, int s) { return f.first < s; });
    if (it != r.factors_.end() && it->first == subscript) {
        it->second += delta;
        if (it->second < 0) throw std::invalid_argument("negative exponent in times_var");
        if (it->second == 0) r.factors_.erase(it);
    } else {
        if (delta < 0) throw std::invalid_argument("negative exponent in times_var");
        if (delta > 0) r.factors_.insert(it, {subscript, delta});
    }
    return r;
}

int ClosedMonomial::winding() const {
    int w = 0;
    for (auto [k, e] : factors_) w += k * e;
    return w;
}

int ClosedMonomial::weight() const {
    int w = 0;
    for (auto [k, e] : factors_) w += (k < 0 ? -k : k) * e;
    return w;
}

int ClosedMonomial::string_count() const {
    int c = 0;
    for (auto [k, e] : factors_) c += e;
    return c;
}

Cx complex_of(const OpenTag& tag) {
    switch (tag.index()) {
        case 0: return Cx::F00;
        case 1: return Cx::F11;
        case 2: return Cx::F02;
        default: return Cx::F22;
    }
}

HalfInt tag_winding(const OpenTag& tag) {
    return std::visit(
        [](const auto& t) -> HalfInt {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, TagEmpty>)
                return HalfInt::whole(0);
            else if constexpr (std::is_same_v<T, TagArcC>)
                return HalfInt::whole(t.n);
            else if constexpr (std::is_same_v<T, TagArcA>)
                return t.h;
            else if constexpr (std::is_same_v<T, TagInsular>)
                return t.i + t.j;
            else
                return HalfInt::whole(t.m + t.n);
        },
        tag);
}

HalfInt tag_weight(const OpenTag& tag) {
    return std::visit(
        [](const auto& t) -> HalfInt {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, TagEmpty>)
                return HalfInt::whole(0);
            else if constexpr (std::is_same_v<T, TagArcC>)
                return HalfInt::whole(t.n < 0 ? -t.n : t.n);
            else if constexpr (std::is_same_v<T, TagArcA>)
                return t.h.abs();
            else if constexpr (std::is_same_v<T, TagInsular>)
                return t.i.abs() + t.j.abs();
            else
                return HalfInt::whole((t.m < 0 ? -t.m : t.m) + (t.n < 0 ? -t.n : t.n));
        },
        tag);
}

void validate_tag(const OpenTag& tag) {
    if (const auto* a = std::get_if<TagArcA>(&tag)) {
        if (a->h.is_whole()) throw std::invalid_argument("a-subscript must be half-odd");
    } else if (const auto* i = std::get_if<TagInsular>(&tag)) {
        if (i->i.is_whole() || i->j.is_whole())
            throw std::invalid_argument("a/b subscripts must be half-odd");
    }
}

HalfInt winding(const Generator& g) {
    return tag_winding(g.tag) + HalfInt::whole(g.closed.winding());
}

HalfInt weight(const Generator& g) {
    return tag_weight(g.tag) + HalfInt::whole(g.closed.weight());
}

bool operator==(const Generator& a, const Generator& b) {
    return a.tag == b.tag && a.closed == b.closed;
}

std::strong_ordering operator<=>(const Generator& a, const Generator& b) {
    if (auto c = weight(a) <=> weight(b); c != 0) return c;
    if (auto c = a.closed.string_count() <=> b.closed.string_count(); c != 0) return c;
    if (auto c = a.closed <=> b.closed; c != 0) return c;
    return a.tag <=> b.tag;
}

Element Element::single(Generator g) {
    Element e(g.complex());
    e.toggle(std::move(g));
    return e;
}

void Element::toggle(Generator g) {
    if (g.complex() != cx_) throw std::invalid_argument("generator complex mismatch");
    auto [it, inserted] = terms_.insert(std::move(g));
    if (!inserted) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
    if (o.cx_ != cx_) throw std::invalid_argument("element complex mismatch");
    for (const auto& g : o.terms_) toggle(g);
    return *this;
}

Element mul_closed(const Element& e, const ClosedMonomial& m) {
    Element r(e.complex());
    for (const auto& g : e.terms()) r.toggle({g.tag, g.closed.times(m)});
    return r;
}

Element mul_var(const Element& e, int subscript, int exponent) {
    if (subscript == 0) return Element::zero(e.complex()); // contractible loop
    Element r(e.complex());
    for (const auto& g : e.terms()) r.toggle({g.tag, g.closed.times_var(subscript, exponent)});
    return r;
}

namespace {

void append_atom(std::vector<std::string>& atoms, char sym, const std::string& sub) {
    atoms.push_back(std::string(1, sym) + "(" + sub + ")");
}

} // namespace

std::string to_string(const Generator& g) {
    std::vector<std::string> atoms;
    std::visit(
        [&](const auto& t) {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, TagArcC>)
                append_atom(atoms, 'c', std::to_string(t.n));
            else if constexpr (std::is_same_v<T, TagArcA>)
                append_atom(atoms, 'a', t.h.str());
            else if constexpr (std::is_same_v<T, TagInsular>) {
                append_atom(atoms, 'a', t.i.str());
                append_atom(atoms, 'b', t.j.str());
            } else if constexpr (std::is_same_v<T, TagTraversing>) {
                append_atom(atoms, 'c', std::to_string(t.m));
                append_atom(atoms, 'd', std::to_string(t.n));
            }
        },
        g.tag);
    for (auto [k, e] : g.closed.factors()) {
        std::string a = "x(" + std::to_string(k) + ")";
        if (e > 1) a += "^" + std::to_string(e);
        atoms.push_back(std::move(a));
    }
    if (atoms.empty()) return "1";
    std::string s = atoms[0];
    for (std::size_t i = 1; i < atoms.size(); ++i) s += "*" + atoms[i];
    return s;
}

std::string to_string(const Element& e) {
    if (e.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& g : e.terms()) {
        if (!first) s += " + ";
        s += to_string(g);
        first = false;
    }
    return s;
}

} // namespace stringhom
