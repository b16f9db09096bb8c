#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fp.hpp"
#include "monomial.hpp"

namespace frobstar {

// A polynomial ring F_p[x_1..x_n] with a fixed global monomial order.
// Rings are immutable and shared by pointer.
struct Ring {
    int p;
    std::vector<std::string> vars;
    MonoOrder order;

    size_t nvars() const { return vars.size(); }

    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(int p, std::vector<std::string> vars,
                         MonoOrder order = MonoOrder{}) {
    if (!is_prime_int(p))
        throw std::invalid_argument("p must be prime, got " + std::to_string(p));
    if (p > 32749)
        throw capability_error("p exceeds the supported coefficient range");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw std::invalid_argument("empty variable name");
        if (!seen.insert(v).second)
            throw std::invalid_argument("duplicate variable name: " + v);
    }
    auto r = std::make_shared<Ring>();
    r->p = p;
    r->vars = std::move(vars);
    r->order = order;
    return r;
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->p == b->p && a->vars == b->vars && a->order == b->order;
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw ring_mismatch("operands live in different rings");
}

}  // namespace frobstar
