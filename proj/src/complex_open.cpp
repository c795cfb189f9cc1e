#include "stringhom/complex_open.hpp"

#include <stdexcept>

namespace stringhom {

namespace {

// Leibniz terms of the closed part: for each even n = 2k with odd exponent,
// toggle tag * (m / x_n) * x_k^2.
void closed_diff_into(Element& out, const OpenTag& tag, const ClosedMonomial& m) {
    for (auto [n, e] : m.factors()) {
        if (n % 2 != 0 || e % 2 == 0) continue;
        out.toggle({tag, m.times_var(n, -1).times_var(n / 2, 2)});
    }
}

// Resolutions of the arc a_h: splittings h = i + j with i half-odd and j a
// nonzero integer, both of h's sign. emit(i, j) once per splitting.
template <typename F>
void for_arc_splittings(HalfInt h, F&& emit) {
    const int step = h.sign();
    if (step == 0) throw std::logic_error("arc subscript cannot be zero");
    for (HalfInt i = HalfInt::halves(step); i.abs() < h.abs(); i += HalfInt::whole(step))
        emit(i, static_cast<int>((h - i).whole_value()));
}

} // namespace

Element diff(const Generator& g) {
    Element out(g.complex());
    const ClosedMonomial& m = g.closed;
    std::visit(
        [&](const auto& t) {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, TagEmpty>) {
                closed_diff_into(out, t, m);
            } else if constexpr (std::is_same_v<T, TagArcC>) {
                closed_diff_into(out, t, m);
                for (auto [k, e] : m.factors()) {
                    if (k % 2 == 0 || e % 2 == 0) continue;
                    out.toggle({TagArcC{t.n + k}, m.times_var(k, -1)});
                }
            } else if constexpr (std::is_same_v<T, TagArcA>) {
                closed_diff_into(out, t, m);
                for_arc_splittings(t.h, [&](HalfInt i, int j) {
                    out.toggle({TagArcA{i}, m.times_var(j, 1)});
                });
            } else if constexpr (std::is_same_v<T, TagInsular>) {
                closed_diff_into(out, t, m);
                for_arc_splittings(t.i, [&](HalfInt i, int j) {
                    out.toggle({TagInsular{i, t.j}, m.times_var(j, 1)});
                });
                for_arc_splittings(t.j, [&](HalfInt i, int j) {
                    out.toggle({TagInsular{t.i, i}, m.times_var(j, 1)});
                });
            } else { // TagTraversing
                closed_diff_into(out, t, m);
                out += mul_closed(insular_diagonal(t.m + t.n), m);
                for (auto [k, e] : m.factors()) {
                    if (k % 2 == 0 || e % 2 == 0) continue;
                    ClosedMonomial rest = m.times_var(k, -1);
                    out.toggle({TagTraversing{t.m + k, t.n}, rest});
                    out.toggle({TagTraversing{t.m, t.n + k}, rest});
                }
            }
        },
        g.tag);
    return out;
}

Element diff(const Element& e) {
    if (e.complex() == Cx::F00) return diff_x(e);
    Element out(e.complex());
    for (const auto& g : e.terms()) out += diff(g);
    return out;
}

std::optional<TravString> bracket_open_closed(TravString s, int k) {
    if (k == 0) throw std::invalid_argument("bracket subscript must be nonzero");
    if (k % 2 == 0) return std::nullopt;
    return TravString{s.side, s.subscript + k};
}

Element bracket_c_closed(int i, int k) {
    Element out(Cx::F11);
    if (auto r = bracket_open_closed({TravSide::C, i}, k)) out.toggle({TagArcC{r->subscript}, {}});
    return out;
}

Element insular_diagonal(int n) {
    Element out(Cx::F22);
    if (n == 0) return out;
    const int step = n > 0 ? 1 : -1;
    for (HalfInt k = HalfInt::halves(step); k.abs() < HalfInt::whole(n).abs();
         k += HalfInt::whole(step))
        out.toggle({TagInsular{k, HalfInt::whole(n) - k}, {}});
    return out;
}

const char* name(SummandId s) {
    switch (s) {
        case SummandId::APBP: return "a+b+";
        case SummandId::APBM: return "a+b-";
        case SummandId::AMBP: return "a-b+";
        case SummandId::AMBM: return "a-b-";
        case SummandId::CD: return "cd";
    }
    return "?";
}

SummandId summand_classify(const Generator& g) {
    if (g.complex() != Cx::F22)
        throw std::invalid_argument("summand_classify expects an f22 generator");
    if (const auto* t = std::get_if<TagInsular>(&g.tag)) {
        if (t->i.sign() > 0) return t->j.sign() > 0 ? SummandId::APBP : SummandId::APBM;
        return t->j.sign() > 0 ? SummandId::AMBP : SummandId::AMBM;
    }
    return SummandId::CD;
}

Element iota(const Element& e) {
    Element out(e.complex());
    for (const auto& g : e.terms()) {
        ClosedMonomial m;
        for (auto [k, ex] : g.closed.factors()) m = m.times_var(-k, ex);
        OpenTag tag = std::visit(
            [](const auto& t) -> OpenTag {
                using T = std::decay_t<decltype(t)>;
                if constexpr (std::is_same_v<T, TagEmpty>)
                    return t;
                else if constexpr (std::is_same_v<T, TagArcC>)
                    return TagArcC{-t.n};
                else if constexpr (std::is_same_v<T, TagArcA>)
                    return TagArcA{-t.h};
                else if constexpr (std::is_same_v<T, TagInsular>)
                    return TagInsular{-t.i, -t.j};
                else
                    return TagTraversing{-t.m, -t.n};
            },
            g.tag);
        out.toggle({tag, std::move(m)});
    }
    return out;
}

Element diagonal_sum(int n, const Element& e) {
    if (e.complex() != Cx::F22)
        throw std::invalid_argument("diagonal_sum expects an element of f22");
    Element out(Cx::F00);
    for (const auto& g : e.terms())
        if (const auto* t = std::get_if<TagTraversing>(&g.tag))
            if (t->m + t->n == n) out.toggle({TagEmpty{}, g.closed});
    return out;
}

namespace {

void require_f11(const Element& e, const char* op) {
    if (e.complex() != Cx::F11)
        throw std::invalid_argument(std::string(op) + " expects an element of f11");
}

} // namespace

Element source_alpha(int j, const Element& e) {
    require_f11(e, "source_alpha");
    if (j % 2 == 0) throw std::invalid_argument("source_alpha: j must be odd");
    Element out(Cx::F11);
    for (const auto& g : e.terms()) {
        if (g.closed.exponent_of(j) % 2 == 0) continue;
        int n = std::get<TagArcC>(g.tag).n;
        out.toggle({TagArcC{n + j}, g.closed.times_var(j, -1)});
    }
    return out;
}

Element source_alpha_star(int j, const Element& e) {
    require_f11(e, "source_alpha_star");
    if (j % 2 == 0) throw std::invalid_argument("source_alpha_star: j must be odd");
    Element out(Cx::F11);
    for (const auto& g : e.terms()) {
        int n = std::get<TagArcC>(g.tag).n;
        out.toggle({TagArcC{n - j}, g.closed.times_var(j, 1)});
    }
    return out;
}

Element closeoff_plus(const Element& e) {
    if (e.complex() != Cx::F02)
        throw std::invalid_argument("closeoff_plus expects an element of f02");
    Element out(Cx::F00);
    for (const auto& g : e.terms()) {
        HalfInt h = std::get<TagArcA>(g.tag).h;
        if (h.sign() <= 0) throw std::invalid_argument("closeoff_plus: arc subscript not positive");
        // a_{n-1/2} -> x_n
        int n = static_cast<int>((h + HalfInt::halves(1)).whole_value());
        out.toggle({TagEmpty{}, g.closed.times_var(n, 1)});
    }
    return out;
}

Element glue_both(const Element& e) {
    if (e.complex() != Cx::F22)
        throw std::invalid_argument("glue_both expects an element of f22");
    Element out(Cx::F00);
    for (const auto& g : e.terms()) {
        const auto* t = std::get_if<TagInsular>(&g.tag);
        if (!t || t->i.sign() <= 0 || t->j.sign() >= 0)
            throw std::invalid_argument("glue_both: term not in the a+/b- summand");
        int xi = static_cast<int>((t->i + HalfInt::halves(1)).whole_value());
        int xj = static_cast<int>((t->j - HalfInt::halves(1)).whole_value());
        out.toggle({TagEmpty{}, g.closed.times_var(xi, 1).times_var(xj, 1)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Disc complex.

EElement EElement::single(EGen g) {
    EElement e;
    e.toggle(g);
    return e;
}

EElement EElement::from_bits(std::uint8_t b) {
    if (b >= 64) throw std::invalid_argument("EElement has six generators");
    EElement e;
    e.bits_ = b;
    return e;
}

std::string to_string(const EElement& e) {
    static const char* names[] = {"A+", "A-", "B", "T0", "T1", "U"};
    if (e.is_zero()) return "0";
    std::string s;
    for (int i = 0; i < 6; ++i) {
        if (!e.contains(static_cast<EGen>(i))) continue;
        if (!s.empty()) s += " + ";
        s += names[i];
    }
    return s;
}

EElement diff_e(const EElement& e) {
    EElement r;
    if (e.contains(EGen::U)) {
        r.toggle(EGen::B);
        r.toggle(EGen::T0);
        r.toggle(EGen::T1);
    }
    return r;
}

Element disc_incl(const EElement& e) {
    Element out(Cx::F22);
    if (e.contains(EGen::APlus)) out.toggle({TagInsular{half(1), half(-1)}, {}});
    if (e.contains(EGen::AMinus)) out.toggle({TagInsular{half(-1), half(1)}, {}});
    if (e.contains(EGen::B)) out.toggle({TagInsular{half(1), half(1)}, ClosedMonomial::var(-1)});
    if (e.contains(EGen::T0)) out.toggle({TagTraversing{0, 0}, {}});
    if (e.contains(EGen::T1)) out.toggle({TagTraversing{-1, 1}, {}});
    if (e.contains(EGen::U)) out.toggle({TagTraversing{0, 1}, ClosedMonomial::var(-1)});
    return out;
}

namespace {

// True when m is the single variable x_s with exponent 1.
bool is_single_var(const ClosedMonomial& m, int s) {
    return m.factors().size() == 1 && m.factors()[0] == std::pair<int, int>{s, 1};
}

} // namespace

EElement disc_proj(const Element& e) {
    if (e.complex() != Cx::F22) throw std::invalid_argument("disc_proj expects an element of f22");
    EElement r;
    for (const auto& g : e.terms()) {
        if (const auto* t = std::get_if<TagInsular>(&g.tag)) {
            if (g.closed.empty() && t->i == half(1) && t->j == half(-1))
                r.toggle(EGen::APlus);
            else if (g.closed.empty() && t->i == half(-1) && t->j == half(1))
                r.toggle(EGen::AMinus);
            else if (t->i.sign() == t->j.sign()) {
                HalfInt s = t->i + t->j; // nonzero integer
                if (is_single_var(g.closed, static_cast<int>((-s).whole_value())))
                    r.toggle(EGen::B);
            }
        } else if (const auto* t2 = std::get_if<TagTraversing>(&g.tag)) {
            int d = t2->m + t2->n;
            if (g.closed.empty() && d == 0) {
                r.toggle(t2->m % 2 == 0 ? EGen::T0 : EGen::T1);
            } else if (d % 2 != 0 && is_single_var(g.closed, -d)) {
                r.toggle(EGen::U);
            }
        }
    }
    return r;
}

bool e_is_cycle(const EElement& e) { return !e.contains(EGen::U); }

bool e_is_boundary(const EElement& e) {
    EElement image;
    image.toggle(EGen::B);
    image.toggle(EGen::T0);
    image.toggle(EGen::T1);
    return e.is_zero() || e == image;
}

bool e_nonzero_in_homology(const EElement& e) {
    return e_is_cycle(e) && !e_is_boundary(e);
}

} // namespace stringhom
