#include "stringhom/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace stringhom {

const char* name(SummandFilter f) {
    switch (f) {
        case SummandFilter::APBP: return "a+b+";
        case SummandFilter::APBM: return "a+b-";
        case SummandFilter::AMBP: return "a-b+";
        case SummandFilter::AMBM: return "a-b-";
        case SummandFilter::CD: return "cd";
        case SummandFilter::ArcPos: return "a+";
        case SummandFilter::ArcNeg: return "a-";
    }
    return "?";
}

std::optional<SummandFilter> summand_filter_from(std::string_view s) {
    if (s == "a+b+") return SummandFilter::APBP;
    if (s == "a+b-") return SummandFilter::APBM;
    if (s == "a-b+") return SummandFilter::AMBP;
    if (s == "a-b-") return SummandFilter::AMBM;
    if (s == "cd") return SummandFilter::CD;
    if (s == "a+") return SummandFilter::ArcPos;
    if (s == "a-") return SummandFilter::ArcNeg;
    return std::nullopt;
}

void validate(const TruncationSpec& spec) {
    if (spec.summand) {
        switch (*spec.summand) {
            case SummandFilter::APBP:
            case SummandFilter::APBM:
            case SummandFilter::AMBP:
            case SummandFilter::AMBM:
                if (spec.complex != Cx::F22)
                    throw std::invalid_argument("insular summand filters apply to f22 only");
                break;
            case SummandFilter::CD:
                throw std::invalid_argument(
                    "the traversing summand is not differential-stable; its cycles are "
                    "certified through diagonal sums and the disc projection instead");
            case SummandFilter::ArcPos:
            case SummandFilter::ArcNeg:
                if (spec.complex != Cx::F02)
                    throw std::invalid_argument("arc sign filters apply to f02 only");
                break;
        }
    }
    if (spec.max_a_degree) {
        bool ok = (spec.complex == Cx::F02 && spec.summand == SummandFilter::ArcPos) ||
                  (spec.complex == Cx::F22 &&
                   (spec.summand == SummandFilter::APBP || spec.summand == SummandFilter::APBM));
        if (!ok)
            throw std::invalid_argument(
                "the a-degree cap applies to complexes supported on positive a-strings");
        if (spec.max_a_degree->is_whole())
            throw std::invalid_argument("the a-degree cap must be a half-odd integer");
    }
}

std::vector<ClosedMonomial> closed_monomials(int winding, int max_weight) {
    std::vector<ClosedMonomial> out;
    if (max_weight < 0) return out;
    // Walk subscripts ascending; prune when the winding gap exceeds the
    // remaining weight budget.
    struct Rec {
        int maxw;
        std::vector<ClosedMonomial>* out;
        void go(int sub, int target, int budget, ClosedMonomial cur) {
            if (std::abs(target) > budget) return;
            if (sub == 0) { // no contractible subscript
                go(1, target, budget, std::move(cur));
                return;
            }
            if (sub > maxw) {
                if (target == 0) out->push_back(std::move(cur));
                return;
            }
            for (int e = 0; e * std::abs(sub) <= budget; ++e)
                go(sub + 1, target - sub * e, budget - std::abs(sub) * e,
                   e == 0 ? cur : cur.times_var(sub, e));
        }
    } rec{max_weight, &out};
    rec.go(-max_weight, winding, max_weight, {});
    std::sort(out.begin(), out.end(), [](const ClosedMonomial& a, const ClosedMonomial& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        if (a.string_count() != b.string_count()) return a.string_count() < b.string_count();
        return a < b;
    });
    return out;
}

namespace {

// Append generators tag * m over closed monomials m with the window's
// leftover winding and weight.
void append_with_closed(std::vector<Generator>& out, const OpenTag& tag, HalfInt winding,
                        HalfInt max_weight) {
    HalfInt cw = winding - tag_winding(tag);
    HalfInt cmax = max_weight - tag_weight(tag);
    if (!cw.is_whole()) return; // closed windings are integers
    if (cmax < HalfInt::whole(0)) return;
    for (auto& m : closed_monomials(static_cast<int>(cw.whole_value()),
                                    static_cast<int>(cmax.doubled() / 2))) // floor
        out.push_back({tag, std::move(m)});
}

bool insular_in_filter(SummandFilter f, HalfInt i, HalfInt j) {
    switch (f) {
        case SummandFilter::APBP: return i.sign() > 0 && j.sign() > 0;
        case SummandFilter::APBM: return i.sign() > 0 && j.sign() < 0;
        case SummandFilter::AMBP: return i.sign() < 0 && j.sign() > 0;
        case SummandFilter::AMBM: return i.sign() < 0 && j.sign() < 0;
        default: return false;
    }
}

} // namespace

std::vector<Generator> enumerate_basis(const TruncationSpec& spec) {
    validate(spec);
    std::vector<Generator> out;
    const HalfInt w = spec.winding, mw = spec.max_weight;
    if (mw < HalfInt::whole(0)) return out;
    const long budget = mw.doubled(); // doubled weight budget for tags

    switch (spec.complex) {
        case Cx::F00:
            append_with_closed(out, TagEmpty{}, w, mw);
            break;
        case Cx::F11:
            for (long n = -(budget / 2); n <= budget / 2; ++n)
                append_with_closed(out, TagArcC{static_cast<int>(n)}, w, mw);
            break;
        case Cx::F02:
            for (long d = 1; d <= budget; d += 2) {
                if (!spec.summand || spec.summand == SummandFilter::ArcPos) {
                    HalfInt h = HalfInt::halves(d);
                    if (!spec.max_a_degree || h <= *spec.max_a_degree)
                        append_with_closed(out, TagArcA{h}, w, mw);
                }
                if (!spec.summand || spec.summand == SummandFilter::ArcNeg)
                    append_with_closed(out, TagArcA{HalfInt::halves(-d)}, w, mw);
            }
            break;
        case Cx::F22: {
            for (long di = 1; di <= budget; di += 2)
                for (long dj = 1; di + dj <= budget; dj += 2)
                    for (int si : {1, -1})
                        for (int sj : {1, -1}) {
                            HalfInt i = HalfInt::halves(si * di), j = HalfInt::halves(sj * dj);
                            if (spec.summand && !insular_in_filter(*spec.summand, i, j)) continue;
                            if (spec.max_a_degree && i.sign() > 0 && *spec.max_a_degree < i)
                                continue;
                            append_with_closed(out, TagInsular{i, j}, w, mw);
                        }
            if (!spec.summand) {
                long mmax = budget / 2;
                for (long m = -mmax; m <= mmax; ++m)
                    for (long n = -mmax; n <= mmax; ++n) {
                        if (std::abs(m) + std::abs(n) > mmax) continue;
                        append_with_closed(
                            out, TagTraversing{static_cast<int>(m), static_cast<int>(n)}, w, mw);
                    }
            }
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

gf2::BitVector coordinates(const Element& e, const std::vector<Generator>& basis) {
    gf2::BitVector v(basis.size());
    for (const auto& g : e.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), g);
        if (it == basis.end() || !(*it == g))
            throw std::out_of_range("element has a term outside the window: " + to_string(g));
        v.flip(static_cast<std::size_t>(it - basis.begin()));
    }
    return v;
}

Element element_of(const gf2::BitVector& v, const std::vector<Generator>& basis, Cx cx) {
    Element e(cx);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.get(i)) e.toggle(basis[i]);
    return e;
}

gf2::BitMatrix boundary_matrix(const TruncationSpec& spec) {
    auto basis = enumerate_basis(spec);
    gf2::BitMatrix b(basis.size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        Element d = diff(basis[c]);
        gf2::BitVector col = coordinates(d, basis); // diff stays inside the window
        for (std::size_t r = 0; r < basis.size(); ++r)
            if (col.get(r)) b.set(r, c, true);
    }
    return b;
}

HomologyReport homology_dim(const TruncationSpec& spec, bool want_reps) {
    HomologyReport rep;
    rep.spec = spec;
    auto basis = enumerate_basis(spec);
    auto b = boundary_matrix(spec);
    std::size_t r = gf2::rank(b);
    rep.dim_space = basis.size();
    rep.dim_image = r;
    rep.dim_kernel = basis.size() - r;
    rep.dim_homology = rep.dim_kernel - rep.dim_image;
    rep.predicted = predicted_dim(spec);
    if (want_reps) {
        gf2::Span span;
        for (std::size_t c = 0; c < basis.size(); ++c) {
            gf2::BitVector col(basis.size());
            for (std::size_t i = 0; i < basis.size(); ++i)
                if (b.get(i, c)) col.set(i, true);
            span.insert(std::move(col));
        }
        for (auto& k : gf2::kernel_basis(b))
            if (span.insert(k)) rep.basis_reps.push_back(element_of(k, basis, spec.complex));
    }
    return rep;
}

bool is_cycle(const Element& e) { return diff(e).is_zero(); }

std::optional<Element> is_boundary(const Element& e, HalfInt max_weight) {
    if (e.is_zero()) return Element::zero(e.complex());
    auto it = e.terms().begin();
    HalfInt w = winding(*it);
    for (const auto& g : e.terms()) {
        if (winding(g) != w)
            throw std::invalid_argument("is_boundary needs a winding-homogeneous element");
        if (max_weight < weight(g)) return std::nullopt; // outside the window
    }
    TruncationSpec spec{e.complex(), w, max_weight, std::nullopt, std::nullopt};
    auto basis = enumerate_basis(spec);
    auto b = boundary_matrix(spec);
    auto sol = gf2::solve(b, coordinates(e, basis));
    if (!sol) return std::nullopt;
    return element_of(*sol, basis, e.complex());
}

// ---------------------------------------------------------------------------
// Counting oracles.

std::size_t count_fermionic(HalfInt w, HalfInt mw) { return fermionic_monomials(w, mw).size(); }
std::size_t count_clean_pos(HalfInt w, HalfInt mw) {
    return fermionic_monomials(w, mw, true, false).size();
}
std::size_t count_clean_neg(HalfInt w, HalfInt mw) {
    return fermionic_monomials(w, mw, false, true).size();
}
std::size_t count_clean_total(HalfInt w, HalfInt mw) {
    return fermionic_monomials(w, mw, true, true).size();
}

namespace {

// Free-module counts over the standard-form bases of the insular theorems.
std::size_t count_f22_pp(const TruncationSpec& s) {
    std::size_t total = 0;
    for (long i = 1; HalfInt::whole(i) <= s.max_weight; ++i) {
        if (s.max_a_degree && *s.max_a_degree < HalfInt::halves(2 * i - 1)) continue;
        total += count_clean_pos(s.winding - HalfInt::whole(i), s.max_weight - HalfInt::whole(i));
    }
    return total;
}

std::size_t count_f22_mm(const TruncationSpec& s) {
    std::size_t total = 0;
    for (long i = 1; HalfInt::whole(i) <= s.max_weight; ++i)
        total += count_clean_neg(s.winding + HalfInt::whole(i), s.max_weight - HalfInt::whole(i));
    return total;
}

} // namespace

std::optional<std::size_t> predicted_dim(const TruncationSpec& spec) {
    switch (spec.complex) {
        case Cx::F00:
            if (!spec.summand) return count_fermionic(spec.winding, spec.max_weight);
            return std::nullopt;
        case Cx::F02:
            if (spec.summand == SummandFilter::ArcPos && !spec.max_a_degree)
                return count_clean_pos(spec.winding - HalfInt::halves(1),
                                       spec.max_weight - HalfInt::halves(1));
            if (spec.summand == SummandFilter::ArcNeg)
                return count_clean_neg(spec.winding + HalfInt::halves(1),
                                       spec.max_weight - HalfInt::halves(1));
            return std::nullopt;
        case Cx::F22:
            if (!spec.summand) return std::nullopt;
            switch (*spec.summand) {
                case SummandFilter::APBP: return count_f22_pp(spec);
                case SummandFilter::AMBM:
                    if (spec.max_a_degree) return std::nullopt;
                    return count_f22_mm(spec);
                case SummandFilter::APBM:
                    // A cap changes this summand's homology (witnesses in the
                    // reduction raise the a-degree), so no capped prediction.
                    if (spec.max_a_degree) return std::nullopt;
                    return count_clean_total(spec.winding, spec.max_weight - HalfInt::whole(1));
                case SummandFilter::AMBP:
                    return count_clean_total(spec.winding, spec.max_weight - HalfInt::whole(1));
                default: return std::nullopt;
            }
        case Cx::F11:
            // The vanishing theorem holds only in the stabilized limit; see
            // stabilization_scan. No per-window prediction.
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<std::size_t> predicted_dim(std::string_view theorem, const TruncationSpec& spec) {
    if (theorem == "f11") return spec.complex == Cx::F11 ? std::optional<std::size_t>(0)
                                                         : std::nullopt;
    auto p = predicted_dim(spec);
    if (!p) return std::nullopt;
    if (theorem == "hx" && spec.complex == Cx::F00) return p;
    if (theorem == "f02" && spec.complex == Cx::F02) return p;
    if (theorem == "f22pp" && spec.summand == SummandFilter::APBP) return p;
    if (theorem == "f22pm" && spec.summand == SummandFilter::APBM) return p;
    if (theorem == "f22mp" && spec.summand == SummandFilter::AMBP) return p;
    if (theorem == "f22mm" && spec.summand == SummandFilter::AMBM) return p;
    return std::nullopt;
}

std::vector<ScanRow> stabilization_scan(const TruncationSpec& templ,
                                        const std::vector<HalfInt>& weights) {
    std::vector<ScanRow> rows;
    for (HalfInt mw : weights) {
        TruncationSpec s = templ;
        s.max_weight = mw;
        rows.push_back({mw, homology_dim(s), false});
    }
    // Flag the largest suffix agreeing with predictions. For F11 the
    // prediction is the limit value 0.
    bool limit_f11 = templ.complex == Cx::F11 && !templ.summand;
    bool ok = true;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        bool agrees;
        if (limit_f11)
            agrees = it->report.dim_homology == 0;
        else if (it->report.predicted)
            agrees = it->report.dim_homology == *it->report.predicted;
        else
            agrees = false;
        ok = ok && agrees;
        it->stable = ok;
    }
    return rows;
}

} // namespace stringhom
