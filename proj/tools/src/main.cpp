#include "json_io.hpp"

#include "liealg/properties.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace liealg;
using io::json;

namespace {

enum Exit { Ok = 0, BadInput = 1, OutOfClass = 2, SweepFailed = 3, Internal = 4 };

struct Options {
    std::string format = "json";
    std::uint64_t seed = 7;
    std::size_t scrambles = 100;
    bool witness = false;
    bool fail_fast = false;
    unsigned jobs = 1;
    std::vector<std::string> inputs;
    // gen
    std::string family;
    std::string params = "{}";
    int abelian_ext = 0;
    std::optional<std::uint64_t> scramble_seed;
    // sweep sizes
    std::size_t fuzz = 10000;
    std::size_t odd_dim_scrambles = 10000;
};

bool text(const Options& o) { return o.format == "text"; }

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw io::InputError("cannot open " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

json read_json(const std::string& path) { return io::parse_text(read_input(path)); }
StructureTensor read_algebra(const std::string& path) { return io::algebra_from_json(read_json(path)); }

void print_matrix(std::ostream& os, const Mat& m, const std::string& indent = "  ") {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << indent;
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "  " : "") << m(r, c).str();
        os << "\n";
    }
}

std::string bracket_table(const StructureTensor& t) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = i + 1; j < t.dim(); ++j) {
            if (!t.pair_nonzero(i, j)) continue;
            os << (first ? "" : ", ") << "[X" << i + 1 << ",X" << j + 1 << "] = ";
            bool lead = true;
            for (std::size_t k = 0; k < t.dim(); ++k) {
                const Scalar& c = t.coeff(i, j, k);
                if (c.is_zero()) continue;
                std::string s = c.str();
                if (!lead) os << (s[0] == '-' ? " - " : " + ");
                else if (s[0] == '-') os << "-";
                if (s[0] == '-') s = s.substr(1);
                if (s != "1") os << s << "*";
                os << "X" << k + 1;
                lead = false;
            }
            first = false;
        }
    return first ? "abelian" : os.str();
}

void print_algebra(const Options& o, const StructureTensor& t) {
    if (text(o))
        std::cout << "dim " << t.dim() << ": " << bracket_table(t) << "\n";
    else
        std::cout << io::algebra_to_json(t).dump() << "\n";
}

int cmd_validate(const Options& o) {
    StructureTensor t = read_algebra(o.inputs.at(0));
    auto v = validate(t);
    if (!v) {
        std::cout << "ok\n";
        return Ok;
    }
    json res = json::array();
    for (const auto& c : v->residual) res.push_back(io::to_json(c));
    if (text(o))
        std::cout << "jacobi fails at (" << v->i + 1 << ", " << v->j + 1 << ", " << v->k + 1 << "): residual " << res.dump() << "\n";
    else
        std::cout << json{{"ok", false}, {"triple", {v->i + 1, v->j + 1, v->k + 1}}, {"residual", res}}.dump() << "\n";
    return BadInput;
}

int cmd_invariants(const Options& o) {
    LieAlgebra a(read_algebra(o.inputs.at(0)));
    auto dims = [](const std::vector<Subspace>& s) {
        std::vector<std::size_t> d;
        for (const auto& x : s) d.push_back(x.dim());
        return d;
    };
    json out{{"dim", a.dim()},
             {"derived_series", dims(a.derived_series())},
             {"lower_central_series", dims(a.lower_central_series())},
             {"upper_central_series", dims(a.upper_central_series())},
             {"solvable", a.solvable()},
             {"nilpotent", a.nilpotent()},
             {"nilpotency_step", a.nilpotency_step()},
             {"center_dim", a.center().dim()},
             {"derived_dim", a.derived_ideal().dim()},
             {"jacobi_ok", !validate(a.tensor())}};
    try {
        out["adjoint_algebra_dim"] = adjoint_algebra(a).dim();
        out["derived_abelian"] = true;
    } catch (const NonAbelianDerivedIdeal&) {
        out["adjoint_algebra_dim"] = nullptr;
        out["derived_abelian"] = false;
    }
    if (!text(o)) {
        std::cout << out.dump() << "\n";
        return Ok;
    }
    for (auto it = out.begin(); it != out.end(); ++it) std::cout << it.key() << ": " << it.value().dump() << "\n";
    return Ok;
}

int cmd_classify(const Options& o) {
    StructureTensor t = read_algebra(o.inputs.at(0));
    Classification c = classify_n2(t);
    if (text(o)) {
        std::cout << "family: " << family_name(c.label.family) << "\nlabel: " << c.label.str()
                  << "\nparams: " << io::label_params(c.label).dump() << "\nabelian_ext: " << c.label.d
                  << "\ncanonical: " << bracket_table(c.normalized) << "\nwitness (columns are the new basis):\n";
        print_matrix(std::cout, c.witness.transform.matrix());
        if (o.witness)
            for (const auto& s : c.witness.steps) std::cout << "  step: " << s << "\n";
        return Ok;
    }
    json out = io::label_to_json(c.label);
    out["witness"] = io::to_json(c.witness.transform.matrix());
    out["canonical"] = io::algebra_to_json(c.normalized);
    if (o.witness) out["steps"] = c.witness.steps;
    std::cout << out.dump() << "\n";
    return Ok;
}

int cmd_codim2(const Options& o) {
    Codim2Form f = normalize_codim2(LieAlgebra(read_algebra(o.inputs.at(0))));
    bool dec = f.kind == Codim2Form::Kind::Decomposable;
    if (text(o)) {
        std::cout << "case: " << (dec ? "decomposable" : "structure_matrix") << "\n";
        if (dec) {
            std::cout << "inner: " << bracket_table(f.inner) << "\n";
        } else {
            std::cout << "shape: " << shape_name(f.shape) << "\nA:\n";
            print_matrix(std::cout, f.A);
            std::cout << "Abar:\n";
            print_matrix(std::cout, f.Abar);
        }
        std::cout << "witness:\n";
        print_matrix(std::cout, f.witness.matrix());
        return Ok;
    }
    json out{{"case", dec ? "decomposable" : "structure_matrix"}};
    if (dec) {
        out["inner"] = io::algebra_to_json(f.inner);
    } else {
        out["shape"] = shape_name(f.shape);
        out["A"] = io::to_json(f.A);
        out["Abar"] = io::to_json(f.Abar);
    }
    out["witness"] = io::to_json(f.witness.matrix());
    std::cout << out.dump() << "\n";
    return Ok;
}

json verdict_json(const PropSimVerdict& v, bool witness) {
    json out{{"equivalent", v.equivalent}, {"mode", v.mode == PropSimVerdict::Mode::Exact ? "exact" : "numeric"}};
    out["c"] = v.c ? io::to_json(*v.c) : json(nullptr);
    if (!v.c_numeric.empty()) out["c_numeric"] = v.c_numeric;
    if (witness && v.C) out["C"] = io::to_json(*v.C);
    return out;
}

int cmd_codim2_iso(const Options& o) {
    if (o.inputs.size() != 2) throw io::InputError("codim2-iso needs two inputs");
    // each input is either an algebra or a structure matrix Abar
    auto load = [](const std::string& path) -> std::pair<Mat, std::optional<Codim2Form>> {
        json j = read_json(path);
        if (j.is_array()) return {io::matrix_from_json(j), std::nullopt};
        Codim2Form f = normalize_codim2(LieAlgebra(io::algebra_from_json(j)));
        if (f.kind != Codim2Form::Kind::StructureMatrix) throw std::invalid_argument(path + " normalizes to the decomposable case");
        return {f.Abar, f};
    };
    auto [a1, f1] = load(o.inputs[0]);
    auto [a2, f2] = load(o.inputs[1]);
    Codim2Iso iso = codim2_isomorphic(a1, a2);
    json out{{"isomorphic", iso.isomorphic}, {"verdict", verdict_json(iso.verdict, o.witness)}};
    if (iso.M_f) {
        out["verified"] = iso.verified;
        if (o.witness) out["M_f"] = io::to_json(*iso.M_f);
    }
    if (o.witness) {
        if (f1) out["witness1"] = io::to_json(f1->witness.matrix());
        if (f2) out["witness2"] = io::to_json(f2->witness.matrix());
    }
    if (text(o)) {
        std::cout << (iso.isomorphic ? "isomorphic" : "not isomorphic");
        if (iso.M_f) std::cout << (iso.verified ? " (M_f verified)" : " (M_f FAILED verification)");
        std::cout << "\n";
        if (o.witness && iso.M_f) {
            std::cout << "M_f:\n";
            print_matrix(std::cout, *iso.M_f);
        }
        return Ok;
    }
    std::cout << out.dump() << "\n";
    return Ok;
}

int cmd_propsim(const Options& o) {
    if (o.inputs.size() != 2) throw io::InputError("propsim needs two inputs");
    Mat a = io::matrix_from_json(read_json(o.inputs[0]));
    Mat b = io::matrix_from_json(read_json(o.inputs[1]));
    PropSimVerdict v = prop_similar(a, b);
    if (!text(o)) {
        std::cout << verdict_json(v, o.witness).dump() << "\n";
        return Ok;
    }
    std::cout << (v.equivalent ? "equivalent" : "not equivalent");
    if (v.c) std::cout << ", c = " << v.c->str();
    if (!v.c_numeric.empty()) std::cout << ", c ~ " << v.c_numeric << " (numeric)";
    std::cout << "\n";
    if (o.witness && v.C) {
        std::cout << "C:\n";
        print_matrix(std::cout, *v.C);
    }
    return Ok;
}

StructureTensor fixture(const std::string& name, const json& p) {
    auto int_param = [&](const char* k, int fallback) { return p.contains(k) ? p[k].get<int>() : fallback; };
    if (name == "aff_r") return aff_r();
    if (name == "aff_c") return aff_c();
    if (name == "heisenberg") return heisenberg(int_param("m", 1));
    if (name == "l6_gamma") return l6_gamma(p.contains("gamma") ? io::rational_from_json(p["gamma"]) : Rational(1));
    if (name == "h3_plus_h3") return h3_plus_h3_split();
    throw io::InputError("unknown family or fixture " + name);
}

StructureTensor with_abelian(const StructureTensor& t, int d) {
    if (d <= 0) return t;
    return direct_sum(t, StructureTensor(static_cast<std::size_t>(d)));
}

int cmd_gen(const Options& o) {
    json p = io::parse_text(o.params);
    if (o.abelian_ext < 0) throw io::InputError("--abelian-ext must be non-negative");
    StructureTensor t = family_from_name(o.family) ? build(io::label_from_json(o.family, p, o.abelian_ext))
                                                  : with_abelian(fixture(o.family, p), o.abelian_ext);
    if (o.scramble_seed) t = scramble(t, *o.scramble_seed).tensor;
    print_algebra(o, t);
    return Ok;
}

struct TableRow {
    ClassLabel sample;  // representative parameters for the JSON bracket data
    const char* name;
    const char* conditions;
    const char* brackets;
    const char* pipeline;
    const char* comment;
};

std::vector<TableRow> table_rows() {
    return {
        {ClassLabel::g3_2_1(Scalar(2)), "G3_2_1(lambda)", "lambda != 0", "[X3,X1] = X1, [X3,X2] = lambda X2", "nonsingular a_X", ""},
        {ClassLabel::simple(Family::G3_2_2), "G3_2_2", "", "[X3,X1] = X1, [X3,X2] = X1 + X2", "nonsingular a_X", ""},
        {ClassLabel::g3_2_3(Rational(1)), "G3_2_3(j)", "j = tr^2/det in [0, 4)",
         "[X3,X1] = X2, [X3,X2] = -j X1 + j X2 (j = 0: [X3,X1] = X2, [X3,X2] = -X1)", "nonsingular a_X",
         "phi = arccos(+-sqrt(j)/2)"},
        {ClassLabel::simple(Family::G4_2_1), "G4_2_1", "", "[X3,X1] = X1, [X3,X4] = X2", "singular a_X", ""},
        {ClassLabel::simple(Family::G4_2_2), "G4_2_2", "", "[X3,X2] = X1, [X3,X4] = X2", "singular a_X", "3-step nilpotent"},
        {ClassLabel::heis(1), "aff(R) + h_{2m+1}", "m >= 1", "[X3,X1] = X1, [X4,X5] = ... = [X_{2m+2},X_{2m+3}] = X2",
         "singular a_X", "decomposable"},
        {ClassLabel::with_k(Family::G5p2k_2, 0), "G5p2k_2", "k >= 0",
         "[X3,X1] = X2, [X3,X4] = X1, [X4,X5] = ... = [X_{2k+4},X_{2k+5}] = X2", "singular a_X", "3-step nilpotent"},
        {ClassLabel::with_k(Family::G6p2k_2_1, 0), "G6p2k_2_1", "k >= 0",
         "[X3,X1] = X1, [X3,X4] = X2, [X5,X6] = ... = [X_{2k+5},X_{2k+6}] = X2", "singular a_X", ""},
        {ClassLabel::with_k(Family::G6p2k_2_2, 0), "G6p2k_2_2", "k >= 0",
         "[X3,X1] = X2, [X3,X4] = X1, [X5,X6] = ... = [X_{2k+5},X_{2k+6}] = X2", "singular a_X", "3-step nilpotent"},
        {ClassLabel::simple(Family::AffR_plus_AffR), "aff(R) + aff(R)", "", "[X3,X1] = X1, [X4,X2] = X2", "dim A_G = 2",
         "decomposable"},
        {ClassLabel::g4_2_3(Rational(0)), "G4_2_3(lambda)", "lambda real",
         "[X3,X2] = X1 + lambda X2, [X4,X1] = X1, [X4,X2] = X2", "dim A_G = 2",
         "lambda != 0 is isomorphic to aff(R) + aff(R)"},
        {ClassLabel::simple(Family::G4_2_4_AffC), "G4_2_4 = aff(C)", "", "[X3,X1] = -X2, [X3,X2] = X1, [X4,X1] = X1, [X4,X2] = X2",
         "dim A_G = 2", ""},
    };
}

int cmd_table(const Options& o) {
    auto rows = table_rows();
    if (!text(o)) {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back(json{{"family", family_name(r.sample.family)},
                               {"name", r.name},
                               {"conditions", r.conditions},
                               {"brackets", r.brackets},
                               {"pipeline", r.pipeline},
                               {"comment", r.comment},
                               {"sample", io::label_to_json(r.sample)},
                               {"sample_algebra", io::algebra_to_json(build(r.sample))}});
        std::cout << out.dump(2) << "\n";
        return Ok;
    }
    std::cout << "Solvable Lie algebras with 2-dimensional derived ideal, not 2-step nilpotent.\n"
              << "Each type also appears as R^d + type (trivial abelian extension).\n\n";
    for (const auto& r : rows) {
        std::cout << r.name;
        if (*r.conditions) std::cout << "   [" << r.conditions << "]";
        std::cout << "\n    " << r.brackets << "\n    pipeline: " << r.pipeline;
        if (*r.comment) std::cout << "; " << r.comment;
        std::cout << "\n";
    }
    return Ok;
}

int cmd_sweep(const Options& o) {
    SweepConfig cfg;
    cfg.seed = o.seed;
    cfg.scrambles = o.scrambles;
    cfg.fuzz = o.fuzz;
    cfg.odd_dim_scrambles = o.odd_dim_scrambles;
    cfg.jobs = o.jobs;
    cfg.fail_fast = o.fail_fast;
    auto results = run_sweep(cfg);
    bool ok = true;
    std::size_t total = 0;
    json out = json::array();
    for (const auto& r : results) {
        ok = ok && r.passed;
        total += r.checked;
        out.push_back(json{{"property", r.name}, {"passed", r.passed}, {"checked", r.checked}, {"failures", r.failures}, {"notes", r.notes}});
    }
    if (text(o)) {
        std::cout << "seed " << o.seed << ", " << o.scrambles << " scrambles per point\n";
        for (const auto& r : results) {
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.checked << " checked, " << r.failures << " failed\n";
            for (const auto& n : r.notes) std::cout << "     " << n << "\n";
        }
        std::cout << (ok ? "all properties hold" : "property failures") << " (" << total << " checks)\n";
    } else {
        std::cout << json{{"seed", o.seed}, {"scrambles", o.scrambles}, {"passed", ok}, {"checks", total}, {"properties", out}}.dump(2)
                  << "\n";
    }
    return ok ? Ok : SweepFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"liealg: exact structure-constant tools for solvable Lie algebras"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* c) {
        c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };
    auto with_inputs = [&](CLI::App* c, std::size_t count, const char* what) {
        common(c);
        c->add_option("inputs", o.inputs, what)->required()->expected(static_cast<int>(count));
    };

    auto* validate_cmd = app.add_subcommand("validate", "Check the Jacobi identity");
    with_inputs(validate_cmd, 1, "Algebra JSON file or - for stdin");
    auto* inv = app.add_subcommand("invariants", "Series dimensions, solvability, nilpotency, dim of the adjoint algebra");
    with_inputs(inv, 1, "Algebra JSON file or - for stdin");
    auto* cls = app.add_subcommand("classify", "Classify a solvable algebra with 2-dimensional derived ideal");
    with_inputs(cls, 1, "Algebra JSON file or - for stdin");
    cls->add_flag("--witness", o.witness, "Include the normalization steps");
    auto* c2 = app.add_subcommand("codim2", "Normalize an algebra with abelian derived ideal of codimension 2");
    with_inputs(c2, 1, "Algebra JSON file or - for stdin");
    auto* c2i = app.add_subcommand("codim2-iso", "Isomorphism test for two codimension-2 algebras (algebra JSON or Abar matrix)");
    with_inputs(c2i, 2, "Two inputs");
    c2i->add_flag("--witness", o.witness, "Include M_f and the normalization witnesses");
    auto* ps = app.add_subcommand("propsim", "Proportional similarity of two square matrices");
    with_inputs(ps, 2, "Two matrix JSON files");
    ps->add_flag("--witness", o.witness, "Include the conjugator C");

    auto* gen = app.add_subcommand("gen", "Emit a family representative or fixture as algebra JSON");
    common(gen);
    gen->add_option("family", o.family, "Family name (see table) or fixture: aff_r, aff_c, heisenberg, l6_gamma, h3_plus_h3")->required();
    gen->add_option("--params", o.params, "Parameters as a JSON object, e.g. {\"lambda\":\"1/2\"}");
    gen->add_option("--abelian-ext", o.abelian_ext, "Dimension of the abelian summand");
    gen->add_option("--scramble", o.scramble_seed, "Apply a seeded unimodular basis change");

    auto* table = app.add_subcommand("table", "List the classification families with bracket tables");
    common(table);

    auto* sweep = app.add_subcommand("sweep", "Run the property suite");
    common(sweep);
    sweep->add_option("--seed", o.seed, "Master seed");
    sweep->add_option("--scrambles", o.scrambles, "Scrambles per (family, parameter) point");
    sweep->add_option("--fuzz", o.fuzz, "Random tensors for the fuzz property");
    sweep->add_option("--odd-dim-scrambles", o.odd_dim_scrambles, "Scrambles for the odd-dimension property");
    sweep->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    sweep->add_flag("--fail-fast", o.fail_fast, "Stop at the first failing property");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate_cmd) return cmd_validate(o);
        if (*inv) return cmd_invariants(o);
        if (*cls) return cmd_classify(o);
        if (*c2) return cmd_codim2(o);
        if (*c2i) return cmd_codim2_iso(o);
        if (*ps) return cmd_propsim(o);
        if (*gen) return cmd_gen(o);
        if (*table) return cmd_table(o);
        if (*sweep) return cmd_sweep(o);
    } catch (const NotInClass& e) {
        std::cerr << "not in class: " << e.what() << "\n";
        return e.reason == NotInClassReason::JacobiFails ? BadInput : OutOfClass;
    } catch (const Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return OutOfClass;
    } catch (const ImpossibleBranch& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return Internal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return BadInput;
    } catch (const io::InputError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return BadInput;
    } catch (const io::json::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return BadInput;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return BadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return Internal;
    }
    return Ok;
}
