#include "stringhom/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace stringhom {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(pos, std::string("expected '") + c + "' " + what);
    }
    long integer() {
        skip_ws();
        std::size_t start = pos;
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError(start, "expected an integer");
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000000) throw ParseError(start, "subscript out of range");
            ++pos;
        }
        return neg ? -v : v;
    }
};

struct Atom {
    char sym;     // 'x','a','b','c','d', or '1'/'0' literals
    HalfInt sub;  // value of the subscript
    int exponent; // >= 1
    std::size_t pos;
};

// One parsed product term, reduced to its open subscripts and closed part.
struct TermBuilder {
    std::optional<HalfInt> a, b;
    std::optional<int> c, d;
    ClosedMonomial closed;
    bool zero = false;

    void add(const Atom& at) {
        switch (at.sym) {
            case '0': zero = true; return;
            case '1': return;
            case 'x': {
                if (!at.sub.is_whole()) throw ParseError(at.pos, "fractional subscript on x");
                long k = at.sub.whole_value();
                if (k == 0) {
                    zero = true; // contractible loop
                    return;
                }
                closed = closed.times_var(static_cast<int>(k), at.exponent);
                return;
            }
            case 'a':
            case 'b': {
                if (at.sub.is_whole())
                    throw ParseError(at.pos, std::string("subscript of ") + at.sym +
                                                 " must be a half-odd integer");
                if (at.exponent != 1)
                    throw ParseError(at.pos, "open strings cannot carry exponents");
                auto& slot = at.sym == 'a' ? a : b;
                if (slot) throw ParseError(at.pos, std::string("repeated ") + at.sym + "-string");
                slot = at.sub;
                return;
            }
            case 'c':
            case 'd': {
                if (!at.sub.is_whole())
                    throw ParseError(at.pos,
                                     std::string("fractional subscript on ") + at.sym);
                if (at.exponent != 1)
                    throw ParseError(at.pos, "open strings cannot carry exponents");
                auto& slot = at.sym == 'c' ? c : d;
                if (slot) throw ParseError(at.pos, std::string("repeated ") + at.sym + "-string");
                slot = static_cast<int>(at.sub.whole_value());
                return;
            }
        }
        throw ParseError(at.pos, "unknown symbol");
    }

    std::optional<Generator> finish(Cx cx, std::size_t pos) const {
        if (zero) return std::nullopt;
        switch (cx) {
            case Cx::F00:
                if (a || b || c || d)
                    throw ParseError(pos, "f00 terms cannot contain open strings");
                return Generator{TagEmpty{}, closed};
            case Cx::F11:
                if (!c || a || b || d)
                    throw ParseError(pos, "f11 terms need exactly one c-string");
                return Generator{TagArcC{*c}, closed};
            case Cx::F02:
                if (!a || b || c || d)
                    throw ParseError(pos, "f02 terms need exactly one a-string");
                return Generator{TagArcA{*a}, closed};
            case Cx::F22:
                if (a && b && !c && !d) return Generator{TagInsular{*a, *b}, closed};
                if (c && d && !a && !b) return Generator{TagTraversing{*c, *d}, closed};
                throw ParseError(pos, "f22 terms need an a/b pair or a c/d pair");
        }
        throw ParseError(pos, "unknown complex");
    }
};

Atom parse_atom(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    char c = cur.peek();
    if (c == '0' || c == '1') {
        ++cur.pos;
        return {c, HalfInt::whole(0), 1, start};
    }
    if (c != 'x' && c != 'a' && c != 'b' && c != 'c' && c != 'd')
        throw ParseError(cur.pos, "expected an atom (x/a/b/c/d, '0' or '1')");
    ++cur.pos;
    cur.expect('(', "after symbol");
    long num = cur.integer();
    HalfInt sub = HalfInt::whole(num);
    if (cur.accept('/')) {
        std::size_t dpos = cur.pos;
        long den = cur.integer();
        if (den != 2) throw ParseError(dpos, "only halves are supported in subscripts");
        sub = HalfInt::halves(num);
    }
    cur.expect(')', "after subscript");
    int exponent = 1;
    if (cur.accept('^')) {
        std::size_t epos = cur.pos;
        long e = cur.integer();
        if (e < 1) throw ParseError(epos, "exponents must be positive");
        exponent = static_cast<int>(e);
    }
    return {c, sub, exponent, start};
}

} // namespace

Element parse_element(std::string_view text, Cx cx) {
    Cursor cur{text};
    Element out(cx);
    if (cur.eof()) throw ParseError(0, "empty expression");
    do {
        std::size_t term_pos = cur.pos;
        TermBuilder term;
        term.add(parse_atom(cur));
        while (cur.accept('*')) term.add(parse_atom(cur));
        if (auto g = term.finish(cx, term_pos)) out.toggle(std::move(*g));
    } while (cur.accept('+'));
    if (!cur.eof()) throw ParseError(cur.pos, "unexpected trailing input");
    return out;
}

} // namespace stringhom
