#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace frobstar {

// Exponent vector of a monomial; length equals the number of ring variables.
using Expo = std::vector<int>;

inline int total_degree(const Expo& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

inline bool expo_divides(const Expo& a, const Expo& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Expo expo_add(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// Requires b >= a componentwise.
inline Expo expo_sub(const Expo& b, const Expo& a) {
    Expo r(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

inline Expo expo_lcm(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline bool expo_coprime(const Expo& a, const Expo& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

// Graded reverse lexicographic comparison on a slice [lo, hi) of the
// exponent vector.  Returns <0, 0, >0 like strcmp with "a cmp b" in the
// grevlex order (positive when a is the larger monomial).
inline int grevlex_cmp_slice(const Expo& a, const Expo& b, size_t lo, size_t hi) {
    int da = 0, db = 0;
    for (size_t i = lo; i < hi; ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

// grevlex restricted to the variables selected by a mask
inline int grevlex_cmp_masked(const Expo& a, const Expo& b,
                              const std::vector<unsigned char>& mask, bool selected) {
    int da = 0, db = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (static_cast<bool>(mask[i]) == selected) { da += a[i]; db += b[i]; }
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (static_cast<bool>(mask[i]) != selected) continue;
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

// Monomial orders used by the library.  Grevlex is the working order;
// ElimFirstK makes the first k variables an elimination block (tag
// variables), ElimSubset makes an arbitrary variable subset the dominant
// block (generic-fiber computations).
struct MonoOrder {
    enum Kind { Grevlex, ElimFirstK, ElimSubset } kind = Grevlex;
    size_t k = 0;                      // size of the leading elimination block
    std::vector<unsigned char> mask;   // dominant variables for ElimSubset

    // strcmp-style: >0 iff a > b in the order.
    int cmp(const Expo& a, const Expo& b) const {
        switch (kind) {
            case Grevlex:
                return grevlex_cmp_slice(a, b, 0, a.size());
            case ElimFirstK: {
                int c = grevlex_cmp_slice(a, b, 0, k);
                if (c != 0) return c;
                return grevlex_cmp_slice(a, b, k, a.size());
            }
            case ElimSubset: {
                int c = grevlex_cmp_masked(a, b, mask, true);
                if (c != 0) return c;
                return grevlex_cmp_masked(a, b, mask, false);
            }
        }
        return 0;
    }
    bool greater(const Expo& a, const Expo& b) const { return cmp(a, b) > 0; }

    bool operator==(const MonoOrder& o) const {
        return kind == o.kind && k == o.k && mask == o.mask;
    }
};

}  // namespace frobstar
