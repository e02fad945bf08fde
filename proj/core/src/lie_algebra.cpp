#include "liealg/lie_algebra.hpp"

namespace liealg {

Subspace bracket_span(const StructureTensor& t, const Subspace& u, const Subspace& v) {
    std::vector<Vec> out;
    for (const auto& x : u.basis())
        for (const auto& y : v.basis()) {
            Vec w = t.bracket(x, y);
            if (!is_zero(w)) out.push_back(std::move(w));
        }
    return Subspace::span(out, t.dim());
}

namespace {

// {x : [x, e_j] in c for all j}
Subspace centralizer_mod(const StructureTensor& t, const Subspace& c) {
    std::size_t n = t.dim();
    std::vector<Vec> annihilator;
    if (c.dim() == 0) {
        for (std::size_t i = 0; i < n; ++i) annihilator.push_back(unit_vector(n, i));
    } else {
        annihilator = kernel(Mat::from_rows(c.basis(), n));
    }
    std::vector<Vec> rows;
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& q : annihilator) {
            Vec row(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (!t.pair_nonzero(i, j)) continue;
                Scalar s;
                for (std::size_t k = 0; k < n; ++k)
                    if (!q[k].is_zero()) s += q[k] * t.coeff(i, j, k);
                row[i] = s;
            }
            if (!is_zero(row)) rows.push_back(std::move(row));
        }
    if (rows.empty()) return Subspace::whole(n);
    return Subspace::span(kernel(Mat::from_rows(rows, n)), n);
}

}  // namespace

LieAlgebra::LieAlgebra(StructureTensor t) : t_(std::move(t)) {
    std::size_t n = t_.dim();
    Subspace g = Subspace::whole(n);

    derived_.push_back(g);
    for (std::size_t step = 0; step <= n; ++step) {
        Subspace next = bracket_span(t_, derived_.back(), derived_.back());
        if (next == derived_.back()) break;
        derived_.push_back(std::move(next));
    }
    solvable_ = derived_.back().dim() == 0;

    lower_.push_back(g);
    for (std::size_t step = 0; step <= n; ++step) {
        Subspace next = bracket_span(t_, g, lower_.back());
        if (next == lower_.back()) break;
        lower_.push_back(std::move(next));
    }
    nilpotent_ = lower_.back().dim() == 0;
    step_ = nilpotent_ ? lower_.size() - 1 : 0;
    if (nilpotent_ && n > 0 && step_ == 0) step_ = 1;

    upper_.push_back(Subspace(n));
    for (std::size_t step = 0; step <= n; ++step) {
        Subspace next = centralizer_mod(t_, upper_.back());
        if (next == upper_.back()) break;
        upper_.push_back(std::move(next));
    }
}

std::vector<std::size_t> LieAlgebra::upper_central_dims() const {
    std::vector<std::size_t> d;
    for (std::size_t i = 1; i < upper_.size(); ++i) d.push_back(upper_[i].dim());
    return d;
}

Mat restricted_adjoint(const StructureTensor& t, const Vec& x, const Subspace& s) {
    std::size_t m = s.dim();
    Mat a(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        Vec img = t.bracket(x, s.basis()[j]);
        Vec c = s.coordinates(img);
        for (std::size_t i = 0; i < m; ++i) a(i, j) = c[i];
    }
    return a;
}

AdjointAlgebra adjoint_algebra(const LieAlgebra& a) {
    AdjointAlgebra out;
    out.derived = a.derived_ideal();
    const auto& t = a.tensor();
    for (const auto& x : out.derived.basis())
        for (const auto& y : out.derived.basis())
            if (!is_zero(t.bracket(x, y))) throw NonAbelianDerivedIdeal("derived ideal is not abelian");
    std::size_t m = out.derived.dim();
    std::vector<Vec> flat;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Mat ax = restricted_adjoint(t, unit_vector(a.dim(), i), out.derived);
        if (ax.is_zero()) continue;
        Vec f;
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) f.push_back(ax(r, c));
        std::vector<Vec> trial = flat;
        trial.push_back(f);
        if (Subspace::span(trial, m * m).dim() == trial.size()) {
            flat = std::move(trial);
            out.basis.push_back(std::move(ax));
            out.generators.push_back(i);
        }
    }
    return out;
}

}  // namespace liealg
