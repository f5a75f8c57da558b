#ifndef FG_POLY_HPP
#define FG_POLY_HPP

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fg/ring.hpp"

namespace fg {

// Sparse exact-coefficient polynomial.  Terms are kept sorted descending
// under the ring's monomial order; no zero coefficients are stored.
class Poly {
  public:
    RingPtr ring;
    std::vector<std::pair<Monomial, Coeff>> terms;

    Poly() = default;
    explicit Poly(RingPtr r) : ring(std::move(r)) {}

    static Poly zero(const RingPtr& r) { return Poly(r); }

    static Poly constant(const RingPtr& r, Coeff c) {
        Poly p(r);
        c = fld_normalize(r->field, c);
        if (!c.is_zero()) p.terms.emplace_back(Monomial(r->nvars()), c);
        return p;
    }

    static Poly term(const RingPtr& r, Monomial m, Coeff c) {
        Poly p(r);
        c = fld_normalize(r->field, c);
        if (!c.is_zero()) p.terms.emplace_back(std::move(m), c);
        return p;
    }

    static Poly variable(const RingPtr& r, int i) {
        Monomial m(r->nvars());
        m.e[i] = 1;
        return term(r, m, Coeff(1));
    }

    bool is_zero() const { return terms.empty(); }

    const Monomial& lead_mono() const {
        if (terms.empty()) throw error("leading term of zero polynomial");
        return terms.front().first;
    }
    const Coeff& lead_coeff() const {
        if (terms.empty()) throw error("leading term of zero polynomial");
        return terms.front().second;
    }

    bool operator==(const Poly& o) const { return terms == o.terms; }
};

inline Poly poly_add(const Poly& f, const Poly& g) {
    check_same_ring(f.ring, g.ring);
    const Ring& R = *f.ring;
    Poly r(f.ring);
    std::size_t i = 0, j = 0;
    while (i < f.terms.size() || j < g.terms.size()) {
        int c;
        if (i >= f.terms.size()) c = -1;
        else if (j >= g.terms.size()) c = 1;
        else c = mono_cmp(R.order, f.terms[i].first, g.terms[j].first);
        if (c > 0) {
            r.terms.push_back(f.terms[i++]);
        } else if (c < 0) {
            r.terms.push_back(g.terms[j++]);
        } else {
            Coeff s = fld_add(R.field, f.terms[i].second, g.terms[j].second);
            if (!s.is_zero()) r.terms.emplace_back(f.terms[i].first, s);
            ++i, ++j;
        }
    }
    return r;
}

inline Poly poly_neg(const Poly& f) {
    Poly r(f.ring);
    r.terms.reserve(f.terms.size());
    for (auto& [m, c] : f.terms) r.terms.emplace_back(m, fld_neg(f.ring->field, c));
    return r;
}

inline Poly poly_sub(const Poly& f, const Poly& g) { return poly_add(f, poly_neg(g)); }

inline Poly poly_scale(const Poly& f, const Coeff& c) {
    Coeff cc = fld_normalize(f.ring->field, c);
    Poly r(f.ring);
    if (cc.is_zero()) return r;
    for (auto& [m, a] : f.terms) {
        Coeff p = fld_mul(f.ring->field, a, cc);
        if (!p.is_zero()) r.terms.emplace_back(m, p);
    }
    return r;
}

// f * (c * x^m)
inline Poly poly_mul_term(const Poly& f, const Monomial& m, const Coeff& c) {
    Poly r(f.ring);
    Coeff cc = fld_normalize(f.ring->field, c);
    if (cc.is_zero()) return r;
    for (auto& [fm, fc] : f.terms) {
        Coeff p = fld_mul(f.ring->field, fc, cc);
        if (!p.is_zero()) r.terms.emplace_back(mono_mul(fm, m), p);
    }
    return r;
}

inline Poly poly_mul(const Poly& f, const Poly& g) {
    check_same_ring(f.ring, g.ring);
    const Ring& R = *f.ring;
    struct Desc {
        MonoOrder ord;
        bool operator()(const Monomial& a, const Monomial& b) const {
            return mono_cmp(ord, a, b) > 0;
        }
    };
    std::map<Monomial, Coeff, Desc> acc{Desc{R.order}};
    for (auto& [fm, fc] : f.terms)
        for (auto& [gm, gc] : g.terms) {
            Monomial m = mono_mul(fm, gm);
            Coeff p = fld_mul(R.field, fc, gc);
            auto it = acc.find(m);
            if (it == acc.end()) acc.emplace(std::move(m), p);
            else it->second = fld_add(R.field, it->second, p);
        }
    Poly r(f.ring);
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms.emplace_back(m, c);
    return r;
}

inline Poly poly_pow(const Poly& f, int k) {
    Poly r = Poly::constant(f.ring, Coeff(1));
    for (int i = 0; i < k; ++i) r = poly_mul(r, f);
    return r;
}

// Common (multi)degree of all terms, or nullopt for an inhomogeneous input.
inline std::optional<Degree> degree_of(const Poly& f) {
    if (f.is_zero()) throw error("degree of zero undefined");
    Degree d = f.ring->mono_degree(f.terms.front().first);
    for (auto& [m, c] : f.terms)
        if (f.ring->mono_degree(m) != d) return std::nullopt;
    return d;
}

inline bool is_homogeneous(const Poly& f) {
    return f.is_zero() || degree_of(f).has_value();
}

inline bool homogeneity_check(const std::vector<Poly>& gens) {
    for (auto& g : gens)
        if (!is_homogeneous(g)) return false;
    return true;
}

// ---- text form: `3*x^2*y - 1/2*y^3` ----

inline std::string mono_str(const Ring& R, const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!first) os << "*";
        os << R.vars[i];
        if (m.e[i] != 1) os << "^" << m.e[i];
        first = false;
    }
    return os.str();
}

inline std::string poly_str(const Poly& f) {
    if (f.is_zero()) return "0";
    const Ring& R = *f.ring;
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : f.terms) {
        mpq_class v = c.v;
        bool neg = v < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        mpq_class a = neg ? mpq_class(-v) : v;
        std::string ms = mono_str(R, m);
        if (ms.empty()) os << a.get_str();
        else if (a == 1) os << ms;
        else os << a.get_str() << "*" << ms;
        first = false;
    }
    return os.str();
}

namespace detail {
struct PolyLexer {
    const std::string& s;
    std::size_t i = 0;
    explicit PolyLexer(const std::string& str) : s(str) {}
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
};
}  // namespace detail

// factor := number | number "/" number | ident ["^" int]
// term   := factor ("*" factor)*
// poly   := ["-"] term (("+"|"-") term)*
inline Poly parse_poly(const RingPtr& r, detail::PolyLexer& lx) {
    auto parse_int = [&](bool allow_sign) -> std::string {
        lx.skip();
        std::string num;
        if (allow_sign && lx.i < lx.s.size() && (lx.s[lx.i] == '-' || lx.s[lx.i] == '+'))
            num += lx.s[lx.i++];
        while (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i])))
            num += lx.s[lx.i++];
        if (num.empty() || num == "-" || num == "+") throw error("expected integer in polynomial");
        return num;
    };
    auto parse_factor = [&]() -> Poly {
        char c = lx.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = parse_int(false);
            if (lx.eat('/')) num += "/" + parse_int(false);
            return Poly::constant(r, fld_from_string(r->field, num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (lx.i < lx.s.size() &&
                   (std::isalnum(static_cast<unsigned char>(lx.s[lx.i])) || lx.s[lx.i] == '_'))
                name += lx.s[lx.i++];
            int vi = r->var_index(name);
            if (vi < 0) throw error("unknown variable '" + name + "'");
            int exp = 1;
            if (lx.eat('^')) exp = std::stoi(parse_int(true));
            if (exp < 0) throw error("negative exponent");
            Monomial m(r->nvars());
            m.e[vi] = exp;
            return Poly::term(r, m, Coeff(1));
        }
        if (c == '(') {
            lx.eat('(');
            Poly p = parse_poly(r, lx);
            if (!lx.eat(')')) throw error("expected ')' in polynomial");
            return p;
        }
        throw error("unexpected character in polynomial: '" + std::string(1, c) + "'");
    };
    auto parse_term = [&]() -> Poly {
        Poly p = parse_factor();
        while (lx.eat('*')) p = poly_mul(p, parse_factor());
        return p;
    };
    Poly acc = Poly::zero(r);
    bool neg = false;
    if (lx.eat('-')) neg = true;
    else lx.eat('+');
    Poly t = parse_term();
    acc = neg ? poly_neg(t) : t;
    for (;;) {
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.eat(c);
            Poly u = parse_term();
            acc = c == '+' ? poly_add(acc, u) : poly_sub(acc, u);
        } else {
            break;
        }
    }
    return acc;
}

inline Poly parse_poly(const RingPtr& r, const std::string& text) {
    detail::PolyLexer lx(text);
    Poly p = parse_poly(r, lx);
    lx.skip();
    if (lx.i != lx.s.size()) throw error("trailing input in polynomial: '" + text + "'");
    return p;
}

}  // namespace fg

#endif
