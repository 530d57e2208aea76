#include <altmap/constellation.hpp>
#include <altmap/eulerian.hpp>
#include <altmap/map_oracle.hpp>
#include <altmap/peeling.hpp>
#include <altmap/spectral.hpp>
#include <altmap/table.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace altmap;

namespace {

constexpr int kOracleCap = 6;

struct Output {
    std::string format = "json"; // json|csv
    std::string file;            // empty = stdout
};

void add_output_flags(CLI::App* cmd, Output& out)
{
    cmd->add_option("--format", out.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output", out.file,
                    "file name (written under $ALTMAP_OUTPUT_DIR if set)");
}

int emit(const CoefficientTable& table, const Output& out)
{
    std::string text = out.format == "csv" ? table.to_csv() : table.to_json();
    if (out.file.empty()) {
        std::cout << text;
        return 0;
    }
    std::string dir = ".";
    if (const char* env = std::getenv("ALTMAP_OUTPUT_DIR")) dir = env;
    std::string path = dir + "/" + out.file;
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open " << path << "\n";
        return 2;
    }
    f << text;
    return 0;
}

void add_params(CoefficientTable& t,
                std::initializer_list<std::pair<std::string, std::string>> ps)
{
    for (auto& p : ps) t.params.push_back(p);
}

int run_solve(int m, int d, int t_order, int x_order, const Output& out)
{
    Series V = solve_V(ConstellationParams{m, d}, t_order, x_order);
    CoefficientTable t = CoefficientTable::from_series("solve",
                                                       "vertex-fixed-point", V);
    add_params(t, {{"m", std::to_string(m)},
                   {"d", std::to_string(d)},
                   {"t_order", std::to_string(t_order)},
                   {"x_order", std::to_string(x_order)}});
    return emit(t, out);
}

int run_alternating(int m, int d, int r_max, int t_order, int x_order,
                    const Output& out)
{
    ConstellationParams cp{m, d};
    auto A = alternating_A(cp, r_max);
    CoefficientTable t;
    t.command = "alternating";
    if (t_order > 0) {
        t.formula = "alternating-evaluated";
        Series V = solve_V(cp, t_order, x_order);
        auto alpha = compute_alphas(cp, V);
        t.index_names.push_back("r");
        for (const auto& v : V.vars()) t.index_names.push_back(v);
        for (int r = 0; r <= r_max; ++r) {
            Series Ar = eval_at_valpha(A[r], V, alpha);
            for (const auto& [e, c] : Ar.terms()) {
                std::vector<int> idx{r};
                idx.insert(idx.end(), e.begin(), e.end());
                t.add_row(idx, c);
            }
        }
    } else {
        t.formula = "alternating-reversion";
        t.index_names.push_back("r");
        for (const auto& v : A[0].vars()) t.index_names.push_back(v);
        for (int r = 0; r <= r_max; ++r)
            for (const auto& [e, c] : A[r].terms()) {
                std::vector<int> idx{r};
                idx.insert(idx.end(), e.begin(), e.end());
                t.add_row(idx, c);
            }
    }
    add_params(t, {{"m", std::to_string(m)},
                   {"d", std::to_string(d)},
                   {"r_max", std::to_string(r_max)},
                   {"t_order", std::to_string(t_order)},
                   {"x_order", std::to_string(x_order)}});
    return emit(t, out);
}

int run_monochromatic(int m, int d, int p_max, const std::string& color,
                      int t_order, int x_order, const Output& out)
{
    ConstellationParams cp{m, d};
    HypermapWeights w = constellation_weights(cp, t_order, x_order);
    HypermapSpectralData sd = solve_spectral(w);
    BoundaryColor bc = color == "white" ? BoundaryColor::white
                                        : BoundaryColor::black;
    auto W = monochromatic_W(w, sd, bc, p_max);
    CoefficientTable t;
    t.command = "monochromatic";
    t.formula = "spectral-parametrization";
    t.index_names.push_back("p");
    for (const auto& v : w.ring_zero.vars()) t.index_names.push_back(v);
    for (int p = 0; p <= p_max; ++p)
        for (const auto& [e, c] : W[p].terms()) {
            std::vector<int> idx{p};
            idx.insert(idx.end(), e.begin(), e.end());
            t.add_row(idx, c);
        }
    add_params(t, {{"m", std::to_string(m)},
                   {"d", std::to_string(d)},
                   {"color", color},
                   {"p_max", std::to_string(p_max)},
                   {"t_order", std::to_string(t_order)},
                   {"x_order", std::to_string(x_order)}});
    return emit(t, out);
}

int run_peel(int m, int d, int r_max, int p_max, int t_order, int x_order,
             const Output& out)
{
    ConstellationParams cp{m, d};
    HypermapWeights w = constellation_weights(cp, t_order, x_order);
    MixedBoundaryTable tbl = peel_recursion(w, r_max, p_max);
    CoefficientTable t;
    t.command = "peel";
    t.formula = "mixed-boundary-recursion";
    t.index_names.push_back("p");
    t.index_names.push_back("r");
    for (const auto& v : w.ring_zero.vars()) t.index_names.push_back(v);
    for (int p = 0; p <= p_max; ++p)
        for (int r = 0; r <= r_max; ++r)
            for (const auto& [e, c] : tbl.at(p, r).terms()) {
                std::vector<int> idx{p, r};
                idx.insert(idx.end(), e.begin(), e.end());
                t.add_row(idx, c);
            }
    add_params(t, {{"m", std::to_string(m)},
                   {"d", std::to_string(d)},
                   {"r_max", std::to_string(r_max)},
                   {"p_max", std::to_string(p_max)},
                   {"t_order", std::to_string(t_order)},
                   {"x_order", std::to_string(x_order)}});
    return emit(t, out);
}

int run_oracle(int max_edges, const std::string& word, bool semi_simple,
               const Output& out)
{
    if (max_edges > kOracleCap) {
        std::cerr << "oracle: --max-edges above the safety cap (" << kOracleCap
                  << ")\n";
        return 2;
    }
    BoundaryWord w;
    for (char c : word) {
        if (c == 'b') w.push_back(Side::black);
        else if (c == 'w') w.push_back(Side::white);
        else {
            std::cerr << "oracle: boundary word must use letters b/w\n";
            return 2;
        }
    }
    CoefficientTable t;
    t.command = "oracle";
    t.formula = "rotation-sweep";
    if (w.empty()) {
        // No boundary prescribed: plain rooted map counts by edge number.
        t.index_names = {"edges"};
        for (int e = 0; e <= max_edges; ++e)
            t.add_row({e}, Rational(count_rooted_maps(e)));
        add_params(t, {{"max_edges", std::to_string(max_edges)},
                       {"boundary", ""},
                       {"semi_simple", semi_simple ? "1" : "0"}});
        return emit(t, out);
    }
    t.index_names = {"edges", "vertices", "black_faces", "white_faces"};
    for (int e = 0; e <= max_edges; ++e) {
        std::map<std::vector<int>, long> agg;
        for (const auto& [prof, c] : enumerate_hypermaps(e, w, semi_simple))
            agg[{e, static_cast<int>(prof.vertices),
                 static_cast<int>(prof.black_degrees.size()),
                 static_cast<int>(prof.white_degrees.size())}] += c;
        for (const auto& [idx, c] : agg) t.add_row(idx, Rational(c));
    }
    add_params(t, {{"max_edges", std::to_string(max_edges)},
                   {"boundary", word},
                   {"semi_simple", semi_simple ? "1" : "0"}});
    return emit(t, out);
}

int run_eulerian(const std::string& series, int t_order, int z_order,
                 const Output& out)
{
    CoefficientTable t;
    t.command = "eulerian";
    if (series == "T") {
        t = CoefficientTable::from_series("eulerian", "alternating-substitution",
                                          compute_T(t_order, z_order));
    } else if (series == "Z") {
        t = CoefficientTable::from_series("eulerian", "critical-partition-function",
                                          compute_Z(z_order));
    } else {
        t = CoefficientTable::from_series("eulerian", "semi-simple-closed-form",
                                          compute_B(t_order, z_order));
    }
    add_params(t, {{"series", series},
                   {"t_order", std::to_string(t_order)},
                   {"z_order", std::to_string(z_order)}});
    return emit(t, out);
}

int run_asymptotics(int n_max, int p_max, long z_num, long z_den)
{
    AsymptoticsReport rep = asymptotic_ratios(n_max, p_max, frac(z_num, z_den));
    std::ostringstream os;
    os << "# ratio report; exact rational coefficients, final division in "
          "256-bit floats, printed to double precision\n";
    os << "# z = " << z_num << "/" << z_den << "\n";
    os.precision(12);
    for (auto& [n, r] : rep.coeff_ratios)
        os << "coeff n=" << n << " ratio=" << r << "\n";
    for (auto& [p, r] : rep.C_ratios) os << "C p=" << p << " ratio=" << r << "\n";
    for (auto& [p, r] : rep.Z_ratios) os << "Z p=" << p << " ratio=" << r << "\n";
    std::cout << os.str();
    return 0;
}

int run_verify(int m, int d, int t_order)
{
    int x_order = std::max(2, t_order / 2);
    ConstellationParams cp{m, d};
    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << name << ": " << (ok ? "ok" : "FAIL") << "\n";
        if (!ok) all_ok = false;
    };

    HypermapWeights w = constellation_weights(cp, t_order, x_order);
    HypermapSpectralData sd = solve_spectral(w);
    report("spectral-conditions", conditions_hold(w, sd));

    auto kr = kernel_identities_check(cp, t_order, x_order, 2 * m + 2);
    report("kernel-identities", kr.ok() && kr.depth >= 2 * m + 2);

    Series V = solve_V(cp, t_order, x_order);
    auto alpha = compute_alphas(cp, V);
    auto A = alternating_A(cp, 2);
    MixedBoundaryTable tbl = peel_recursion(w, 2, 2 * m);
    bool peel_ok = true;
    for (int r = 0; r <= 2 && peel_ok; ++r)
        peel_ok = tbl.A(r) == eval_at_valpha(A[r], V, alpha);
    report("peeling-vs-reversion", peel_ok);
    report("peel-functional-equation", functional_equation_residual(w, tbl).ok);

    Series t = Series::variable(V.vars(), V.trunc(), "t");
    report("vertex-identity", t == V - Rational(m - 1) * alpha[0]);

    report("closed-form-vs-substitution", compute_B(6, 4) == compute_B_substitution(6, 4));
    report("quartic-certificate", quartic_residual(compute_B(8, 6)).is_zero());
    report("T-parametrization", T_parametrization_check(6, 3));
    report("partition-function-normalization", compute_Z(4).coeff("z", 0) == 1);

    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact series toolkit for maps with alternating boundaries"};
    app.require_subcommand(1);

    int m = 3, d = 1, t_order = 8, x_order = 4, r_max = 2, p_max = 4, z_order = 5;
    int max_edges = 3, n_max = 100;
    long z_num = 1, z_den = 8;
    std::string color = "black", word, series = "B";
    bool semi_simple = false, asym = false;
    Output out;

    auto* solve = app.add_subcommand("solve", "vertex generating series");
    solve->add_option("--m", m)->check(CLI::Range(2, 64));
    solve->add_option("--d", d)->check(CLI::PositiveNumber);
    solve->add_option("--t-order", t_order)->check(CLI::PositiveNumber);
    solve->add_option("--x-order", x_order)->check(CLI::NonNegativeNumber);
    add_output_flags(solve, out);

    auto* alt = app.add_subcommand("alternating", "alternating-boundary series");
    alt->add_option("--m", m)->check(CLI::Range(2, 64));
    alt->add_option("--d", d)->check(CLI::PositiveNumber);
    alt->add_option("--r-max", r_max)->check(CLI::NonNegativeNumber);
    int alt_t_order = 0;
    alt->add_option("--t-order", alt_t_order,
                    "evaluate in the weight variables up to this order");
    alt->add_option("--x-order", x_order)->check(CLI::NonNegativeNumber);
    add_output_flags(alt, out);

    auto* mono = app.add_subcommand("monochromatic",
                                    "monochromatic-boundary series");
    mono->add_option("--m", m)->check(CLI::Range(2, 64));
    mono->add_option("--d", d)->check(CLI::PositiveNumber);
    mono->add_option("--p-max", p_max)->check(CLI::NonNegativeNumber);
    mono->add_option("--color", color)->check(CLI::IsMember({"black", "white"}));
    mono->add_option("--t-order", t_order)->check(CLI::PositiveNumber);
    mono->add_option("--x-order", x_order)->check(CLI::NonNegativeNumber);
    add_output_flags(mono, out);

    auto* peel = app.add_subcommand("peel", "mixed-boundary recursion table");
    peel->add_option("--m", m)->check(CLI::Range(2, 64));
    peel->add_option("--d", d)->check(CLI::PositiveNumber);
    peel->add_option("--r-max", r_max)->check(CLI::NonNegativeNumber);
    peel->add_option("--p-max", p_max)->check(CLI::NonNegativeNumber);
    peel->add_option("--t-order", t_order)->check(CLI::PositiveNumber);
    peel->add_option("--x-order", x_order)->check(CLI::NonNegativeNumber);
    add_output_flags(peel, out);

    auto* oracle = app.add_subcommand("oracle", "brute-force map counts");
    oracle->add_option("--max-edges", max_edges)->required();
    oracle->add_option("--boundary", word, "letters b/w, e.g. wb");
    oracle->add_flag("--semi-simple", semi_simple);
    add_output_flags(oracle, out);

    auto* eul = app.add_subcommand("eulerian", "Eulerian triangulation series");
    eul->add_option("--series", series)->check(CLI::IsMember({"T", "B", "Z"}));
    eul->add_option("--t-order", t_order)->check(CLI::PositiveNumber);
    eul->add_option("--z-order", z_order)->check(CLI::PositiveNumber);
    eul->add_flag("--asymptotics", asym, "ratio-trend report instead of a table");
    eul->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
    eul->add_option("--p-max", p_max)->check(CLI::PositiveNumber);
    eul->add_option("--z-num", z_num);
    eul->add_option("--z-den", z_den);
    add_output_flags(eul, out);

    auto* verify = app.add_subcommand("verify", "cross-module identity suite");
    verify->add_option("--m", m)->check(CLI::Range(2, 64));
    verify->add_option("--d", d)->check(CLI::PositiveNumber);
    verify->add_option("--t-order", t_order)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return run_solve(m, d, t_order, x_order, out);
        if (alt->parsed())
            return run_alternating(m, d, r_max, alt_t_order, x_order, out);
        if (mono->parsed())
            return run_monochromatic(m, d, p_max, color, t_order, x_order, out);
        if (peel->parsed())
            return run_peel(m, d, r_max, p_max, t_order, x_order, out);
        if (oracle->parsed()) return run_oracle(max_edges, word, semi_simple, out);
        if (eul->parsed())
            return asym ? run_asymptotics(n_max, p_max, z_num, z_den)
                        : run_eulerian(series, t_order, z_order, out);
        if (verify->parsed()) return run_verify(m, d, t_order);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
