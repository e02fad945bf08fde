#pragma once

#include "liealg/properties.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace testing {

using namespace liealg;

// [X_i, X_j] = sum c X_k, all indices 1-based.
struct Br {
    std::size_t i, j;
    std::vector<std::pair<std::size_t, Rational>> terms;
};

inline StructureTensor tensor(std::size_t n, std::initializer_list<Br> brackets) {
    StructureTensor t(n);
    for (const auto& b : brackets) {
        Vec v(n);
        for (const auto& [k, c] : b.terms) v[k - 1] = Scalar(c);
        t.set_bracket(b.i - 1, b.j - 1, v);
    }
    return t;
}

// Framed tensor from the adjoint matrices of X3, X4, ... on span(X1, X2) plus extra brackets.
inline StructureTensor framed(std::size_t n, std::initializer_list<std::pair<std::size_t, Mat>> adjoints,
                              std::initializer_list<Br> extra = {}) {
    StructureTensor t = tensor(n, extra);
    for (const auto& [x, a] : adjoints)
        for (std::size_t c = 0; c < 2; ++c) {
            Vec v(n);
            v[0] = a(0, c);
            v[1] = a(1, c);
            t.set_bracket(x - 1, c, v);
        }
    return t;
}

inline Mat M(std::initializer_list<std::initializer_list<Scalar>> rows) { return Mat(rows); }
inline Scalar Q(long long p, long long q = 1) { return Scalar(Rational(p, q)); }

}  // namespace testing
