#include "liealg/properties.hpp"

#include <array>
#include <atomic>
#include <mutex>
#include <thread>

namespace liealg {

void PropertyResult::fail(const std::string& what) {
    passed = false;
    ++failures;
    if (notes.size() < 8) notes.push_back(what);
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& f) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) f(i);
        });
    for (auto& th : pool) th.join();
}

namespace {

std::uint64_t task_seed(std::uint64_t seed, const char* label, std::uint64_t a, std::uint64_t b = 0) {
    return Rng(seed).split(label, a).split("task", b).next();
}

// Runs count tasks; each returns an empty string on success. Failures are reported in task order.
void run_tasks(PropertyResult& r, std::size_t count, const SweepConfig& cfg, const std::function<std::string(std::size_t)>& task) {
    std::vector<std::string> out(count);
    std::atomic<bool> stop{false};
    parallel_for(count, cfg.jobs, [&](std::size_t i) {
        if (stop) return;
        try {
            out[i] = task(i);
        } catch (const std::exception& e) {
            out[i] = std::string("exception: ") + e.what();
        }
        if (!out[i].empty() && cfg.fail_fast) stop = true;
    });
    for (std::size_t i = 0; i < count; ++i) {
        ++r.checked;
        if (!out[i].empty()) r.fail(out[i]);
    }
}

std::string check_classification(const StructureTensor& input, const ClassLabel& built) {
    Classification c = classify_n2(input);
    if (!same_class_as_expected(c.label, built)) return built.str() + " classified as " + c.label.str();
    if (!(transform(input, c.witness.transform) == canonical_tensor(c.label))) return "witness fails for " + built.str();
    return {};
}

Mat random_int_matrix(Rng& rng, std::size_t n, int bound) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(rng.range(-bound, bound));
    return m;
}

Mat random_invertible(Rng& rng, std::size_t n, int bound) {
    while (true) {
        Mat m = random_int_matrix(rng, n, bound);
        if (!det(m).is_zero()) return m;
    }
}

Scalar random_scale(Rng& rng) {
    static const Rational choices[] = {1, -1, 2, -2, Rational(1, 2), 3, Rational(-2, 3)};
    return Scalar(choices[rng.below(7)]);
}

// b = C (c a) C^-1, so c a = C^-1 b C.
Mat conjugate_scaled(const Mat& a, const Scalar& c, const Mat& conj) { return conj * a.scaled(c) * inverse(conj); }

bool witness_ok(const PropSimVerdict& v, const Mat& a, const Mat& b) {
    if (v.mode != PropSimVerdict::Mode::Exact) return true;
    return v.c && v.C && verify_prop_witness(a, b, *v.c, *v.C);
}

}  // namespace

Mat left_block(const Mat& a) {
    Mat m(a.rows() + 1, a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    return m;
}

Mat right_block(const Mat& a) {
    Mat m(a.rows() + 1, a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j + 1) = a(i, j);
    return m;
}

RightBlockPair right_block_counterexample() { return {Mat::identity(2), Mat::diagonal({Scalar(1), Scalar(2)})}; }

std::optional<RightBlockPair> search_right_block_counterexample(int bound) {
    std::vector<Mat> mats;
    for (int a = -bound; a <= bound; ++a)
        for (int b = -bound; b <= bound; ++b)
            for (int c = -bound; c <= bound; ++c)
                for (int d = -bound; d <= bound; ++d)
                    if (a * d - b * c != 0) mats.push_back(Mat{{a, b}, {c, d}});
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i + 1; j < mats.size(); ++j) {
            if (prop_similar(mats[i], mats[j]).equivalent) continue;
            if (prop_similar(right_block(mats[i]), right_block(mats[j])).equivalent) return RightBlockPair{mats[i], mats[j]};
        }
    return std::nullopt;
}

PropertyResult check_idempotence(const SweepConfig& cfg) {
    PropertyResult r;
    r.name = "corpus idempotence";
    std::vector<ClassLabel> pts = sweep_points();
    std::vector<StructureTensor> built;
    for (const auto& p : pts) built.push_back(build(p));
    std::size_t s = cfg.scrambles;
    run_tasks(r, pts.size() * s, cfg, [&](std::size_t i) {
        std::size_t p = i / s;
        Scrambled sc = scramble(built[p], task_seed(cfg.seed, "idempotence", p, i % s));
        return check_classification(sc.tensor, pts[p]);
    });
    r.notes.insert(r.notes.begin(), std::to_string(pts.size()) + " (family, parameter) points x " + std::to_string(s) + " scrambles");
    return r;
}

PropertyResult check_g4_2_3_identification(const SweepConfig& cfg) {
    PropertyResult r;
    r.name = "G4_2_3(lambda != 0) identified with aff(R)+aff(R)";
    std::vector<ClassLabel> pts;
    for (const auto& p : sweep_points())
        if (p.family == Family::G4_2_3 && !p.lambda.is_zero()) pts.push_back(p);
    std::size_t s = cfg.scrambles;
    run_tasks(r, pts.size() * s, cfg, [&](std::size_t i) -> std::string {
        std::size_t p = i / s;
        Scrambled sc = scramble(build(pts[p]), task_seed(cfg.seed, "g423", p, i % s));
        Classification c = classify_n2(sc.tensor);
        if (c.label.family != Family::AffR_plus_AffR || c.label.d != pts[p].d) return pts[p].str() + " classified as " + c.label.str();
        if (!(transform(sc.tensor, c.witness.transform) == build(c.label))) return "witness fails for " + pts[p].str();
        return {};
    });
    return r;
}

namespace {

// Jacobi sum for n = 3 with integer structure constants c[pair][k], pairs (01, 02, 12).
bool jacobi3(const std::array<std::array<int, 3>, 3>& c) {
    auto br = [&](int i, int j, int k) -> int {
        if (i == j) return 0;
        int sign = i < j ? 1 : -1;
        int a = std::min(i, j), b = std::max(i, j);
        int p = a == 0 ? (b == 1 ? 0 : 1) : 2;
        return sign * c[p][k];
    };
    // [[Xi, Xj], Xk] = sum_m c_ij^m [Xm, Xk]
    auto term = [&](int i, int j, int k, int out) {
        int s = 0;
        for (int m = 0; m < 3; ++m) s += br(i, j, m) * br(m, k, out);
        return s;
    };
    for (int out = 0; out < 3; ++out)
        if (term(0, 1, 2, out) + term(1, 2, 0, out) + term(2, 0, 1, out) != 0) return false;
    return true;
}

std::string derived_ideal_facts(const StructureTensor& t) {
    LieAlgebra a(t);
    if (!a.solvable() || a.derived_ideal().dim() != 2) return {};
    const auto& b = a.derived_ideal().basis();
    if (!is_zero(t.bracket(b[0], b[1]))) return "non-abelian 2-dim derived ideal";
    AdjointAlgebra adj = adjoint_algebra(a);
    if (adj.dim() > 2) return "dim A_G > 2";
    if (adj.dim() > 4 / 4 + 1) return "Schur-Jacobson bound violated";
    for (const auto& x : adj.basis)
        for (const auto& y : adj.basis)
            if (!(x * y == y * x)) return "A_G not commutative";
    return {};
}

}  // namespace

PropertyResult check_derived_ideal_structure(const SweepConfig& cfg) {
    PropertyResult r;
    r.name = "derived ideal structure";
    std::vector<StructureTensor> corpus;
    for (const auto& p : sweep_points()) corpus.push_back(build(p));
    corpus.push_back(aff_c());
    corpus.push_back(direct_sum(aff_r(), aff_r()));
    corpus.push_back(direct_sum(heisenberg(1), heisenberg(1)));
    std::size_t fuzzed = std::min<std::size_t>(cfg.fuzz, 2000);
    std::size_t base = corpus.size();
    run_tasks(r, base + fuzzed, cfg, [&](std::size_t i) -> std::string {
        if (i < base) return derived_ideal_facts(corpus[i]);
        Rng rng = Rng(cfg.seed).split("fuzz", i - base);
        while (true) {
            StructureTensor t = fuzz_tensor(rng, 3 + rng.below(cfg.fuzz_max_dim - 2));
            if (t.dim()) return derived_ideal_facts(t);
        }
    });

    // Exhaustive n = 3 search: no validated solvable algebra has a non-abelian 2-dim derived ideal.
    int b = cfg.n3_bound, width = 2 * b + 1;
    std::size_t total = 1;
    for (int i = 0; i < 9; ++i) total *= static_cast<std::size_t>(width);
    std::size_t validated = 0, in_class = 0;
    std::array<std::array<int, 3>, 3> c{};
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t x = code;
        for (int p = 0; p < 3; ++p)
            for (int k = 0; k < 3; ++k) {
                c[p][k] = static_cast<int>(x % width) - b;
                x /= width;
            }
        if (!jacobi3(c)) continue;
        ++validated;
        StructureTensor t(3);
        const std::size_t pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
        for (int p = 0; p < 3; ++p) t.set_bracket(pairs[p][0], pairs[p][1], {Scalar(c[p][0]), Scalar(c[p][1]), Scalar(c[p][2])});
        LieAlgebra a(t);
        if (!a.solvable() || a.derived_ideal().dim() != 2) continue;
        ++in_class;
        const auto& d = a.derived_ideal().basis();
        if (!is_zero(t.bracket(d[0], d[1]))) r.fail("n = 3 table with non-abelian derived ideal");
    }
    r.notes.push_back("n = 3 search: " + std::to_string(total) + " tables, " + std::to_string(validated) + " satisfy Jacobi, " +
                      std::to_string(in_class) + " solvable with dim G^1 = 2");
    return r;
}

PropertyResult check_odd_dimension_decomposability(const SweepConfig& cfg) {
    PropertyResult r;
    r.name = "odd-dimension decomposability";
    std::vector<ClassLabel> pts = sweep_points();
    std::vector<StructureTensor> built;
    for (const auto& p : pts) built.push_back(build(p));
    std::size_t np = pts.size();
    run_tasks(r, np + cfg.odd_dim_scrambles, cfg, [&](std::size_t i) -> std::string {
        StructureTensor t = i < np ? built[i] : scramble(built[(i - np) % np], task_seed(cfg.seed, "odd-dim", i)).tensor;
        Classification c = classify_n2(t);
        LieAlgebra a(t);
        std::size_t n = t.dim();
        if (c.label.family != Family::TwoStepNilpotent_OutOfScope && !c.label.decomposable() && !a.nilpotent() && n % 2 == 1 && n >= 5)
            return "indecomposable non-nilpotent odd-dimensional result " + c.label.str();
        return {};
    });
    return r;
}

PropertyResult check_propsim_engine(const SweepConfig& cfg) {
    PropertyResult r;
    r.name = "proportional similarity engine";
    std::atomic<std::size_t> numeric{0}, positives{0};
    run_tasks(r, cfg.propsim_pairs, cfg, [&](std::size_t i) -> std::string {
        Rng rng = Rng(cfg.seed).split("propsim", i);
        std::size_t n = 2 + i % 2;
        Mat a = random_int_matrix(rng, n, 2);
        bool related = i % 2 == 0;
        Scalar c1 = random_scale(rng);
        Mat conj1 = random_unimodular(n, rng, 3 * n);
        Mat b = related ? conjugate_scaled(a, c1, conj1) : random_int_matrix(rng, n, 2);

        if (!prop_similar(a, a).equivalent) return "not reflexive";
        PropSimVerdict ab = prop_similar(a, b), ba = prop_similar(b, a);
        if (ab.mode == PropSimVerdict::Mode::NumericFallback) ++numeric;
        if (related && !ab.equivalent) return "related pair rejected: " + a.str() + " " + b.str();
        if (ab.equivalent != ba.equivalent) return "not symmetric";
        if (!ab.equivalent) return {};
        ++positives;
        if (!witness_ok(ab, a, b) || !witness_ok(ba, b, a)) return "witness fails";
        if (ab.mode == PropSimVerdict::Mode::Exact && !verify_prop_witness(b, a, ab.c->inverse(), inverse(*ab.C)))
            return "inverted witness fails";
        // transitivity with a composed witness
        Scalar c2 = random_scale(rng);
        Mat d = conjugate_scaled(b, c2, random_unimodular(n, rng, 3 * n));
        PropSimVerdict bd = prop_similar(b, d), ad = prop_similar(a, d);
        if (!bd.equivalent || !ad.equivalent) return "not transitive";
        if (ab.mode == PropSimVerdict::Mode::Exact && bd.mode == PropSimVerdict::Mode::Exact &&
            !verify_prop_witness(a, d, *ab.c * *bd.c, *bd.C * *ab.C))
            return "composed witness fails";
        return {};
    });
    r.notes.push_back(std::to_string(positives.load()) + " equivalent pairs, " + std::to_string(numeric.load()) + " numeric verdicts");

    // Block facts on GL3(Q) pairs
    run_tasks(r, cfg.block_pairs, cfg, [&](std::size_t i) -> std::string {
        Rng rng = Rng(cfg.seed).split("blocks", i);
        Mat a = random_invertible(rng, 3, 2);
        Mat b;
        if (i % 2 == 0) {
            Scalar c = random_scale(rng);
            b = conjugate_scaled(a, c, random_unimodular(3, rng, 9));
        } else {
            b = random_invertible(rng, 3, 2);
        }
        bool inner = prop_similar(a, b).equivalent;
        PropSimVerdict outer = prop_similar(left_block(a), left_block(b));
        if (inner != outer.equivalent) return "left-block equivalence differs from inner equivalence";
        if (outer.equivalent && !witness_ok(outer, left_block(a), left_block(b))) return "left-block witness fails: " + a.str() + " " + b.str() + " c = " + (outer.c ? outer.c->str() : "-");
        Mat l = left_block(a), rb = right_block(b);
        if (prop_similar(l, rb).equivalent) return "left block equivalent to right block";
        if (rank(l * l) != rank(l) || !(rank(rb * rb) < rank(rb))) return "square-rank obstruction does not separate the shapes";
        return {};
    });

    RightBlockPair fx = right_block_counterexample();
    ++r.checked;
    PropSimVerdict outer = prop_similar(right_block(fx.A), right_block(fx.B));
    if (prop_similar(fx.A, fx.B).equivalent || !outer.equivalent || !witness_ok(outer, right_block(fx.A), right_block(fx.B)))
        r.fail("right-block counterexample fixture does not hold");
    ++r.checked;
    auto found = search_right_block_counterexample(1);
    if (!found)
        r.fail("bounded search found no right-block counterexample");
    else
        r.notes.push_back("search found A = " + found->A.str() + ", B = " + found->B.str());
    return r;
}

PropertyResult check_codim2_suite(const SweepConfig& cfg) {
    PropertyResult r;
    r.name = "codimension-2 structure matrices";
    const auto& t5 = codim2_catalog();
    for (std::size_t i = 0; i < t5.size(); ++i)
        for (std::size_t j = 0; j < t5.size(); ++j) {
            ++r.checked;
            Codim2Iso iso = codim2_isomorphic(t5[i].abar, t5[j].abar);
            if (iso.isomorphic != (i == j)) r.fail("catalog entries " + std::to_string(i + 1) + " and " + std::to_string(j + 1));
            if (iso.isomorphic && !iso.verified) r.fail("M_f not verified for entry " + std::to_string(i + 1));
        }
    for (const auto& e : t5) {
        ++r.checked;
        if (!prop_similar(e.closed_form, e.abar).equivalent) r.fail("closed form of " + e.name + " differs from its fixture");
    }
    std::size_t s = cfg.codim2_scrambles;
    run_tasks(r, t5.size() * s, cfg, [&](std::size_t i) -> std::string {
        const Codim2Entry& e = t5[i / s];
        Scrambled sc = scramble(codim2_tensor(e.abar), task_seed(cfg.seed, "codim2", i / s, i % s));
        Codim2Form f = normalize_codim2(LieAlgebra(sc.tensor));
        if (f.kind != Codim2Form::Kind::StructureMatrix) return e.name + " normalized as decomposable";
        if (f.shape != e.shape) return e.name + " changed block shape";
        if (!(transform(sc.tensor, f.witness) == f.normalized)) return e.name + " normalization witness fails";
        Codim2Iso iso = codim2_isomorphic(e.abar, f.Abar);
        if (!iso.isomorphic) return e.name + " not recovered";
        if (!iso.verified) return e.name + " M_f fails bracket transport";
        return {};
    });
    return r;
}

PropertyResult check_l6_family() {
    PropertyResult r;
    r.name = "six-dimensional nilpotent family normalization";
    for (int g : {1, 4, 2, -1, -3}) {
        ++r.checked;
        L6Report m = check_l6_normalization(Rational(g));
        if (!m.ok) r.fail("gamma = " + std::to_string(g) + ": " + m.detail);
    }
    return r;
}

PropertyResult check_redundancy_witnesses() {
    PropertyResult r;
    r.name = "parameter redundancy witnesses";
    // diag(1,2) and diag(1,1/2): a Lie isomorphism blockdiag(C, 1/c) from the propsim witness.
    auto iso_from_propsim = [&](const Mat& src, const Mat& tgt, const ClassLabel& ls, const ClassLabel& lt, const std::string& what) {
        ++r.checked;
        StructureTensor ts(3), tt(3);
        for (std::size_t c = 0; c < 2; ++c) {
            ts.set_bracket(2, c, {src(0, c), src(1, c), Scalar(0)});
            tt.set_bracket(2, c, {tgt(0, c), tgt(1, c), Scalar(0)});
        }
        PropSimVerdict v = prop_similar(tgt, src);  // c tgt = C^-1 src C
        if (!v.equivalent || !v.c || !v.C) return r.fail(what + ": no exact witness");
        Mat M = Mat::identity(3);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) M(i, j) = (*v.C)(i, j);
        M(2, 2) = v.c->inverse();
        if (!(transform(ts, M) == tt)) return r.fail(what + ": transported tensor differs");
        Classification a = classify_n2(ts), b = classify_n2(tt);
        if (!a.label.same_class(b.label) || !(a.label.key == b.label.key)) return r.fail(what + ": keys differ");
        if (!(ls.key == lt.key)) return r.fail(what + ": label keys differ");
        r.notes.push_back(what + ": c = " + v.c->str() + ", j = " + a.label.key.str());
    };
    iso_from_propsim(Mat::diagonal({Scalar(1), Scalar(2)}), Mat::diagonal({Scalar(1), Scalar(Rational(1, 2))}),
                     ClassLabel::g3_2_1(Scalar(2)), ClassLabel::g3_2_1(Scalar(Rational(1, 2))), "diag(1,2) vs diag(1,1/2)");
    // rotations with rational cosine: φ = arccos(3/5) and π - φ; arccos(5/13) and π - φ
    for (auto [p, s, q] : {std::array<int, 3>{3, 4, 5}, std::array<int, 3>{5, 12, 13}}) {
        Rational cs(p, q), sn(s, q);
        Mat rot{{Scalar(cs), Scalar(-sn)}, {Scalar(sn), Scalar(cs)}};
        Mat rot2{{Scalar(-cs), Scalar(-sn)}, {Scalar(sn), Scalar(-cs)}};
        Rational j = Rational(4) * cs * cs;
        iso_from_propsim(rot, rot2, ClassLabel::g3_2_3(j), ClassLabel::g3_2_3(j),
                         "rotation(arccos " + cs.str() + ") vs rotation(pi - arccos " + cs.str() + ")");
    }
    // the classifier's own witness maps the λ = 2 algebra onto the λ = 1/2 representative
    ++r.checked;
    StructureTensor t2 = build(ClassLabel::g3_2_1(Scalar(2)));
    Classification c = classify_n2(t2);
    if (!(c.label.lambda == Scalar(Rational(1, 2))) || !(transform(t2, c.witness.transform) == build(ClassLabel::g3_2_1(Scalar(Rational(1, 2))))))
        r.fail("classifier witness for lambda = 2");
    return r;
}

PropertyResult check_fuzz_completeness(const SweepConfig& cfg) {
    PropertyResult r;
    r.name = "fuzz completeness";
    std::atomic<std::size_t> rejected{0}, out_of_scope{0};
    run_tasks(r, cfg.fuzz, cfg, [&](std::size_t i) -> std::string {
        Rng rng = Rng(cfg.seed).split("fuzz", i);
        StructureTensor t;
        while (true) {
            t = fuzz_tensor(rng, 3 + rng.below(cfg.fuzz_max_dim - 2));
            if (t.dim()) break;
            ++rejected;
        }
        Classification c = classify_n2(t);
        if (c.label.family == Family::TwoStepNilpotent_OutOfScope) {
            ++out_of_scope;
            return transform(t, c.witness.transform) == c.normalized ? std::string() : "frame witness fails";
        }
        if (!(transform(t, c.witness.transform) == canonical_tensor(c.label))) return "witness fails for " + c.label.str();
        return {};
    });
    r.notes.push_back(std::to_string(rejected.load()) + " rejected draws, " + std::to_string(out_of_scope.load()) + " 2-step nilpotent");
    return r;
}

std::vector<PropertyResult> run_sweep(const SweepConfig& cfg) {
    std::vector<PropertyResult> out;
    auto add = [&](PropertyResult r) {
        out.push_back(std::move(r));
        return !cfg.fail_fast || out.back().passed;
    };
    add(check_idempotence(cfg)) && add(check_g4_2_3_identification(cfg)) && add(check_derived_ideal_structure(cfg)) &&
        add(check_odd_dimension_decomposability(cfg)) && add(check_propsim_engine(cfg)) && add(check_codim2_suite(cfg)) &&
        add(check_l6_family()) && add(check_redundancy_witnesses()) && add(check_fuzz_completeness(cfg));
    return out;
}

}  // namespace liealg
