#ifndef FG_RING_HPP
#define FG_RING_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "fg/monomial.hpp"

namespace fg {

enum class Grading { standard, fine };

// (Multi)degree: length 1 under the standard Z-grading, length nvars under
// the fine Z^n grading.
using Degree = std::vector<int>;

inline Degree deg_add(const Degree& a, const Degree& b) {
    Degree r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline Degree deg_sub(const Degree& a, const Degree& b) {
    Degree r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

struct Ring {
    std::vector<std::string> vars;
    Field field;
    Grading grading = Grading::standard;
    MonoOrder order = MonoOrder::degrevlex;

    Ring(std::vector<std::string> v, Field f, Grading g = Grading::standard,
         MonoOrder o = MonoOrder::degrevlex)
        : vars(std::move(v)), field(f), grading(g), order(o) {
        std::set<std::string> seen(vars.begin(), vars.end());
        if (seen.size() != vars.size()) throw error("duplicate variable names");
        if (vars.empty()) throw error("ring needs at least one variable");
    }

    std::size_t nvars() const { return vars.size(); }
    std::size_t deg_len() const { return grading == Grading::standard ? 1 : nvars(); }

    Degree zero_degree() const { return Degree(deg_len(), 0); }

    Degree mono_degree(const Monomial& m) const {
        if (grading == Grading::standard) return Degree{m.total()};
        return Degree(m.e.begin(), m.e.end());
    }

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool same_as(const Ring& o) const {
        return vars == o.vars && field == o.field && grading == o.grading && order == o.order;
    }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars, Field f,
                         Grading g = Grading::standard,
                         MonoOrder o = MonoOrder::degrevlex) {
    return std::make_shared<const Ring>(std::move(vars), f, g, o);
}

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return;
    if (!a || !b || !a->same_as(*b)) throw error("ring mismatch");
}

}  // namespace fg

#endif
