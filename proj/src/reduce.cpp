#include "stringhom/reduce.hpp"

#include <stdexcept>

#include "stringhom/complex_open.hpp"
#include "stringhom/gf2.hpp"
#include "stringhom/homology.hpp"

namespace stringhom {

namespace {

// Solve f = sum_i coeff_i * standards[i] + diff(g) inside the window. The
// standard part of any solution is unique (the standards are independent in
// the window's homology); the witness is the solver's deterministic choice.
struct StandardSolve {
    std::vector<bool> coeffs;
    Element witness;
};

StandardSolve solve_standard(const Element& f, const std::vector<Element>& standards,
                             const TruncationSpec& window) {
    auto basis = enumerate_basis(window);
    const std::size_t n = basis.size(), s = standards.size();
    gf2::BitMatrix m(n, s + n);
    for (std::size_t c = 0; c < s; ++c) {
        auto col = coordinates(standards[c], basis);
        for (std::size_t r = 0; r < n; ++r)
            if (col.get(r)) m.set(r, c, true);
    }
    for (std::size_t c = 0; c < n; ++c) {
        auto col = coordinates(diff(basis[c]), basis);
        for (std::size_t r = 0; r < n; ++r)
            if (col.get(r)) m.set(r, s + c, true);
    }
    auto sol = gf2::solve(m, coordinates(f, basis));
    if (!sol)
        throw std::logic_error("standard-form solve failed on a cycle; window inconsistent");
    StandardSolve out{std::vector<bool>(s, false), Element::zero(window.complex)};
    for (std::size_t c = 0; c < s; ++c) out.coeffs[c] = sol->get(c);
    for (std::size_t c = 0; c < n; ++c)
        if (sol->get(s + c)) out.witness.toggle(basis[c]);
    return out;
}

void require_cycle(const Element& e, const char* op) {
    if (!diff(e).is_zero())
        throw std::invalid_argument(std::string(op) + " expects a cycle");
}

void require_weight(const Element& e, HalfInt bound, const char* op) {
    for (const auto& g : e.terms())
        if (bound < weight(g))
            throw std::invalid_argument(std::string(op) + ": term weight exceeds the bound");
}

// Split into winding-homogeneous parts; each part of a cycle is a cycle.
std::map<HalfInt, Element> winding_parts(const Element& e) {
    std::map<HalfInt, Element> parts;
    for (const auto& g : e.terms()) {
        auto [it, fresh] = parts.try_emplace(winding(g), e.complex());
        it->second.toggle(g);
    }
    return parts;
}

} // namespace

FermionicRep fermionic_rep(const Element& cycle, HalfInt bound) {
    if (cycle.complex() != Cx::F00)
        throw std::invalid_argument("fermionic_rep expects an element of f00");
    require_cycle(cycle, "fermionic_rep");
    require_weight(cycle, bound, "fermionic_rep");
    FermionicRep out{Element::zero(Cx::F00), Element::zero(Cx::F00)};
    for (auto& [w, part] : winding_parts(cycle)) {
        std::vector<Element> standards;
        for (auto& m : fermionic_monomials(w, bound))
            standards.push_back(Element::single({TagEmpty{}, m}));
        TruncationSpec window{Cx::F00, w, bound, std::nullopt, std::nullopt};
        auto sol = solve_standard(part, standards, window);
        for (std::size_t i = 0; i < standards.size(); ++i)
            if (sol.coeffs[i]) out.fermionic += standards[i];
        out.witness += sol.witness;
    }
    return out;
}

F02Reduction reduce_f02_plus(const Element& cycle, HalfInt bound) {
    if (cycle.complex() != Cx::F02)
        throw std::invalid_argument("reduce_f02_plus expects an element of f02");
    for (const auto& g : cycle.terms())
        if (std::get<TagArcA>(g.tag).h.sign() <= 0)
            throw std::invalid_argument("reduce_f02_plus: term not supported on positive arcs");
    require_cycle(cycle, "reduce_f02_plus");
    require_weight(cycle, bound, "reduce_f02_plus");
    F02Reduction out{Element::zero(Cx::F00), Element::zero(Cx::F02)};
    for (auto& [w, part] : winding_parts(cycle)) {
        std::vector<ClosedMonomial> cleans =
            fermionic_monomials(w - HalfInt::halves(1), bound - HalfInt::halves(1), true, false);
        std::vector<Element> standards;
        for (auto& q : cleans) standards.push_back(Element::single({TagArcA{half(1)}, q}));
        TruncationSpec window{Cx::F02, w, bound, SummandFilter::ArcPos, std::nullopt};
        auto sol = solve_standard(part, standards, window);
        for (std::size_t i = 0; i < cleans.size(); ++i)
            if (sol.coeffs[i]) out.clean.toggle({TagEmpty{}, cleans[i]});
        out.witness += sol.witness;
    }
    return out;
}

PpReduction reduce_pp(const Element& cycle, HalfInt a_bound, HalfInt bound) {
    if (cycle.complex() != Cx::F22)
        throw std::invalid_argument("reduce_pp expects an element of f22");
    for (const auto& g : cycle.terms()) {
        if (summand_classify(g) != SummandId::APBP)
            throw std::invalid_argument("reduce_pp: term not in the a+/b+ summand");
        if (a_bound < std::get<TagInsular>(g.tag).i)
            throw std::invalid_argument("reduce_pp: a-degree exceeds the cap");
    }
    require_cycle(cycle, "reduce_pp");
    require_weight(cycle, bound, "reduce_pp");
    PpReduction out{{}, Element::zero(Cx::F22)};
    for (auto& [w, part] : winding_parts(cycle)) {
        std::vector<Element> standards;
        std::vector<std::pair<int, ClosedMonomial>> keys;
        for (long i = 1; HalfInt::whole(i) <= bound; ++i) {
            if (a_bound < HalfInt::halves(2 * i - 1)) break;
            for (auto& q : fermionic_monomials(w - HalfInt::whole(i), bound - HalfInt::whole(i),
                                               true, false)) {
                standards.push_back(mul_closed(insular_diagonal(static_cast<int>(i)), q));
                keys.emplace_back(static_cast<int>(i), q);
            }
        }
        TruncationSpec window{Cx::F22, w, bound, SummandFilter::APBP, a_bound};
        auto sol = solve_standard(part, standards, window);
        for (std::size_t i = 0; i < keys.size(); ++i) {
            if (!sol.coeffs[i]) continue;
            auto [diag, q] = keys[i];
            auto [it, fresh] = out.q.try_emplace(diag, Cx::F00);
            it->second.toggle({TagEmpty{}, q});
        }
        out.witness += sol.witness;
    }
    return out;
}

PmReduction reduce_pm(const Element& cycle, HalfInt bound) {
    if (cycle.complex() != Cx::F22)
        throw std::invalid_argument("reduce_pm expects an element of f22");
    for (const auto& g : cycle.terms())
        if (summand_classify(g) != SummandId::APBM)
            throw std::invalid_argument("reduce_pm: term not in the a+/b- summand");
    require_cycle(cycle, "reduce_pm");
    require_weight(cycle, bound, "reduce_pm");
    PmReduction out{Element::zero(Cx::F00), Element::zero(Cx::F22)};
    for (auto& [w, part] : winding_parts(cycle)) {
        std::vector<ClosedMonomial> cleans =
            fermionic_monomials(w, bound - HalfInt::whole(1), true, true);
        std::vector<Element> standards;
        for (auto& q : cleans)
            standards.push_back(Element::single({TagInsular{half(1), half(-1)}, q}));
        TruncationSpec window{Cx::F22, w, bound, SummandFilter::APBM, std::nullopt};
        auto sol = solve_standard(part, standards, window);
        for (std::size_t i = 0; i < cleans.size(); ++i)
            if (sol.coeffs[i]) out.totally_clean.toggle({TagEmpty{}, cleans[i]});
        out.witness += sol.witness;
    }
    return out;
}

} // namespace stringhom
