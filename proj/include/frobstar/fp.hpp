#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace frobstar {

inline bool is_prime_int(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Canonical representative in [0, p).
inline int fp_normalize(long long v, int p) {
    long long r = v % p;
    if (r < 0) r += p;
    return static_cast<int>(r);
}

inline int fp_add(int a, int b, int p) { return fp_normalize((long long)a + b, p); }
inline int fp_sub(int a, int b, int p) { return fp_normalize((long long)a - b, p); }
inline int fp_mul(int a, int b, int p) { return fp_normalize((long long)a * b, p); }
inline int fp_neg(int a, int p) { return fp_normalize(-(long long)a, p); }

inline int fp_pow(int a, long long e, int p) {
    a = fp_normalize(a, p);
    int r = 1 % p;
    while (e > 0) {
        if (e & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline int fp_inv(int a, int p) {
    a = fp_normalize(a, p);
    if (a == 0) throw std::domain_error("fp_inv: division by zero in F_" + std::to_string(p));
    return fp_pow(a, p - 2, p);
}

}  // namespace frobstar
