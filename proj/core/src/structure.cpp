#include "liealg/structure.hpp"

namespace liealg {

Vec StructureTensor::bracket_basis(std::size_t i, std::size_t j) const {
    auto first = c_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j) * n_);
    return Vec(first, first + static_cast<std::ptrdiff_t>(n_));
}

void StructureTensor::refresh(std::size_t i, std::size_t j) {
    bool any = false;
    for (std::size_t k = 0; k < n_ && !any; ++k) any = !coeff(i, j, k).is_zero();
    nz_[i * n_ + j] = nz_[j * n_ + i] = any ? 1 : 0;
}

void StructureTensor::set_bracket(std::size_t i, std::size_t j, const Vec& value) {
    if (i >= n_ || j >= n_ || value.size() != n_) throw DimensionError("bracket index out of range");
    if (i == j) {
        if (!is_zero(value)) throw std::invalid_argument("[X, X] must vanish");
        return;
    }
    for (std::size_t k = 0; k < n_; ++k) {
        c_[(i * n_ + j) * n_ + k] = value[k];
        c_[(j * n_ + i) * n_ + k] = -value[k];
    }
    refresh(i, j);
}

void StructureTensor::set_coeff(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
    if (i >= n_ || j >= n_ || k >= n_) throw DimensionError("bracket index out of range");
    if (i == j) {
        if (!value.is_zero()) throw std::invalid_argument("[X, X] must vanish");
        return;
    }
    c_[(i * n_ + j) * n_ + k] = value;
    c_[(j * n_ + i) * n_ + k] = -value;
    refresh(i, j);
}

Vec StructureTensor::bracket(const Vec& u, const Vec& v) const {
    Vec out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (!nz_[i * n_ + j]) continue;
            Scalar w = u[i] * v[j] - u[j] * v[i];
            if (w.is_zero()) continue;
            const Scalar* c = &c_[(i * n_ + j) * n_];
            for (std::size_t k = 0; k < n_; ++k)
                if (!c[k].is_zero()) out[k] += w * c[k];
        }
    }
    return out;
}

Mat StructureTensor::ad(const Vec& x) const {
    Mat m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (!nz_[i * n_ + j]) continue;
            const Scalar* c = &c_[(i * n_ + j) * n_];
            for (std::size_t k = 0; k < n_; ++k)
                if (!c[k].is_zero()) m(k, j) += x[i] * c[k];
        }
    }
    return m;
}

Mat StructureTensor::ad_basis(std::size_t i) const { return ad(unit_vector(n_, i)); }

bool StructureTensor::is_abelian() const {
    for (char f : nz_)
        if (f) return false;
    return true;
}

bool StructureTensor::is_rational() const {
    for (const auto& x : c_)
        if (!x.is_rational()) return false;
    return true;
}

std::optional<JacobiViolation> validate(const StructureTensor& t) {
    std::size_t n = t.dim();
    // [[Xi,Xj],Xk] = sum_l c_ij^l [X_l, X_k]
    auto outer = [&](std::size_t i, std::size_t j, std::size_t k, Vec& acc) {
        if (!t.pair_nonzero(i, j)) return;
        for (std::size_t l = 0; l < n; ++l) {
            const Scalar& c = t.coeff(i, j, l);
            if (c.is_zero() || !t.pair_nonzero(l, k)) continue;
            for (std::size_t m = 0; m < n; ++m) {
                const Scalar& d = t.coeff(l, k, m);
                if (!d.is_zero()) acc[m] += c * d;
            }
        }
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec acc(n);
                outer(i, j, k, acc);
                outer(j, k, i, acc);
                outer(k, i, j, acc);
                if (!is_zero(acc)) return JacobiViolation{i, j, k, acc};
            }
    return std::nullopt;
}

BasisChange::BasisChange(Mat t) : t_(std::move(t)) {
    if (!t_.is_square()) throw DimensionError("basis change must be square");
    auto inv = try_inverse(t_);
    if (!inv) throw SingularTransform("basis change is singular");
    inv_ = std::move(*inv);
}

BasisChange BasisChange::identity(std::size_t n) { return BasisChange(Mat::identity(n), Mat::identity(n)); }

BasisChange BasisChange::then(const BasisChange& next) const {
    return BasisChange(t_ * next.t_, next.inv_ * inv_);
}

StructureTensor transform(const StructureTensor& t, const BasisChange& b) {
    std::size_t n = t.dim();
    if (b.dim() != n) throw DimensionError("basis change dimension mismatch");
    const Mat& T = b.matrix();
    const Mat& Ti = b.inverse_matrix();
    // D[a][j] = [X_a, T e_j] in old coordinates
    std::vector<Vec> d(n * n, Vec(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t bb = 0; bb < n; ++bb) {
            if (!t.pair_nonzero(a, bb)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& tb = T(bb, j);
                if (tb.is_zero()) continue;
                Vec& acc = d[a * n + j];
                for (std::size_t l = 0; l < n; ++l) {
                    const Scalar& c = t.coeff(a, bb, l);
                    if (!c.is_zero()) acc[l] += tb * c;
                }
            }
        }
    StructureTensor out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec w(n);
            for (std::size_t a = 0; a < n; ++a) {
                const Scalar& ta = T(a, i);
                if (ta.is_zero()) continue;
                const Vec& src = d[a * n + j];
                for (std::size_t l = 0; l < n; ++l)
                    if (!src[l].is_zero()) w[l] += ta * src[l];
            }
            if (is_zero(w)) continue;
            out.set_bracket(i, j, Ti.apply(w));
        }
    return out;
}

StructureTensor transform(const StructureTensor& t, const Mat& m) { return transform(t, BasisChange(m)); }

}  // namespace liealg
