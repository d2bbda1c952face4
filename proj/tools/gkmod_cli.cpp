// Batch driver: verification suites, structure reports over parameter grids,
// Hermitian form tables, deformation gauges, limit probes, and the 2x2
// warm-up example. Output is deterministic: fixed orderings, exact rational
// strings, shortest-round-trip floats.

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gkmod/deform.hpp"
#include "gkmod/families.hpp"
#include "gkmod/hermitian.hpp"
#include "gkmod/serialize.hpp"
#include "gkmod/structure.hpp"
#include "gkmod/toy.hpp"

namespace {

using namespace gkmod;

struct CommonOpts {
    std::string family = "all";
    int epsilon = 1;
    std::string nu_text;
    std::string grid_text;
    std::string float_text;
    std::string psi_name = "canonical";
    int window = 30;
    std::string format;  // per-subcommand default filled by add_common_flags
    double tol = 1e-8;
    std::string out_path;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o, const std::string& default_format) {
    o.format = default_format;
    cmd->add_option("--family", o.family, "pi | Pi | piPrime | psiCustom | all");
    cmd->add_option("--epsilon", o.epsilon, "parity: 1 or -1");
    cmd->add_option("--nu", o.nu_text, "exact parameter, e.g. 7/2, -3, i, i*3/4");
    cmd->add_option("--nu-grid", o.grid_text, "comma list of exact parameters, or range a..b[:step]");
    cmd->add_option("--float", o.float_text, "float parameter re[,im] (explicit opt-in)");
    cmd->add_option("--psi", o.psi_name, "gauge for psiCustom: canonical | one");
    cmd->add_option("--window", o.window, "weight window bound");
    cmd->add_option("--format", o.format, "json | csv | md");
    cmd->add_option("--tol", o.tol, "tolerance for float checks");
    cmd->add_option("--out", o.out_path, "write the report to this file instead of stdout");
}

void validate_common(const CommonOpts& o) {
    if (o.epsilon != 1 && o.epsilon != -1)
        throw std::invalid_argument("--epsilon must be 1 or -1");
    if (o.format != "json" && o.format != "csv" && o.format != "md")
        throw std::invalid_argument("--format must be json, csv, or md");
}

NuParameter parse_float_nu(const std::string& text) {
    std::istringstream in(text);
    double re = 0, im = 0;
    char sep = 0;
    if (!(in >> re)) throw std::invalid_argument("not a float parameter: '" + text + "'");
    if (in >> sep) {
        if (sep != ',' || !(in >> im))
            throw std::invalid_argument("not a float parameter: '" + text + "'");
    }
    std::string rest;
    if (in >> rest) throw std::invalid_argument("not a float parameter: '" + text + "'");
    return nu_float({re, im});
}

// "a..b" or "a..b:step" with exact rational endpoints, or a comma list of
// exact parameter strings. No float round-trip.
std::vector<NuParameter> parse_grid(const std::string& text) {
    std::vector<NuParameter> grid;
    const std::size_t dots = text.find("..");
    if (dots != std::string::npos) {
        const std::string from = text.substr(0, dots);
        std::string to = text.substr(dots + 2);
        Rat step = 1;
        if (const std::size_t colon = to.find(':'); colon != std::string::npos) {
            step = parse_rat(to.substr(colon + 1));
            to = to.substr(0, colon);
        }
        const Rat lo = parse_rat(from);
        const Rat hi = parse_rat(to);
        if (step <= 0) throw std::invalid_argument("grid step must be positive");
        if (hi < lo) throw std::invalid_argument("grid range is empty");
        if ((hi - lo) / step > 4096) throw std::invalid_argument("grid has too many points");
        for (Rat v = lo; v <= hi; v += step) grid.push_back(nu_real(v));
        return grid;
    }
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) grid.push_back(parse_nu(item));
    }
    if (grid.empty()) throw std::invalid_argument("empty parameter grid");
    return grid;
}

std::vector<NuParameter> resolve_parameters(const CommonOpts& o) {
    const int given = !o.nu_text.empty() + !o.grid_text.empty() + !o.float_text.empty();
    if (given == 0) throw std::invalid_argument("need one of --nu, --nu-grid, --float");
    if (given > 1) throw std::invalid_argument("--nu, --nu-grid, --float are mutually exclusive");
    if (!o.nu_text.empty()) return {parse_nu(o.nu_text)};
    if (!o.float_text.empty()) return {parse_float_nu(o.float_text)};
    return parse_grid(o.grid_text);
}

std::vector<FamilyKind> resolve_families(const std::string& name) {
    if (name == "all")
        return {FamilyKind::Principal, FamilyKind::Deformed, FamilyKind::Alternate};
    return {family_kind_from_name(name)};
}

FamilySpec make_spec(FamilyKind kind, const CommonOpts& o, const NuParameter& nu) {
    FamilySpec spec;
    spec.kind = kind;
    spec.epsilon = o.epsilon;
    spec.nu = nu;
    spec.window = o.window;
    if (kind == FamilyKind::PsiDeformed) spec.psi = psi_handle_by_name(o.psi_name);
    return spec;
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + o.out_path + "'");
    out << text;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

// Display form c*sqrt(q) for report detail columns.
std::string format_scalar(const RadicalScalar& s) {
    const CRat& c = s.coeff();
    std::string coeff;
    if (c.is_real())
        coeff = format_rat(c.re);
    else if (c.re == 0)
        coeff = (c.im == 1 ? "" : c.im == -1 ? "-" : format_rat(c.im)) + std::string("i");
    else
        coeff = "(" + format_rat(c.re) + (rat_sign(c.im) >= 0 ? "+" : "") + format_rat(c.im) + "i)";
    if (s.radicand() == 1) return coeff;
    const std::string root = "sqrt(" + s.radicand().str() + ")";
    if (coeff == "1") return root;
    if (coeff == "-1") return "-" + root;
    return coeff + "*" + root;
}

// ---------------------------------------------------------------- verify --

struct CheckRow {
    FamilyKind kind;
    NuParameter nu;
    std::string check;
    bool pass = false;
    std::string detail;
};

int run_verify(const CommonOpts& o) {
    const std::vector<NuParameter> grid = resolve_parameters(o);
    const std::vector<FamilyKind> families = resolve_families(o.family);
    std::vector<CheckRow> rows;

    for (const NuParameter& nu : grid) {
        for (FamilyKind kind : families) {
            const FamilySpec spec = make_spec(kind, o, nu);
            if (is_exact(nu)) {
                const ExactTriple t = build_family(spec);
                rows.push_back({kind, nu, "brackets", verify_brackets(t), "exact"});
                const auto casimir = casimir_scalar(t);
                const RadicalScalar want{CRat(nu_squared_minus_one(nu))};
                const bool pass = casimir.has_value() && *casimir == want;
                rows.push_back({kind, nu, "casimir", pass,
                                casimir ? format_scalar(*casimir) : "not scalar"});
            } else {
                const FloatTriple t = build_family_float(spec);
                rows.push_back(
                    {kind, nu, "brackets", verify_brackets_approx(t, o.tol), "approx"});
                const auto casimir = casimir_scalar_approx(t, o.tol);
                const std::complex<double> z = to_complex(nu);
                const std::complex<double> want = z * z - 1.0;
                const bool pass = casimir.has_value() && std::abs(*casimir - want) <= o.tol;
                rows.push_back({kind, nu, "casimir", pass,
                                casimir ? format_double(casimir->real()) + "," +
                                              format_double(casimir->imag())
                                        : "not scalar"});
            }
        }
    }
    for (FamilyKind kind : families) {
        if (kind == FamilyKind::PsiDeformed) continue;  // alpha/beta need a definable gauge
        const PoleObstructionReport report =
            pole_obstruction_check(coefficient_functions(kind, o.epsilon, o.window), grid, o.tol);
        rows.push_back({kind, grid.front(), "poleObstruction", report.passed,
                        "checks=" + std::to_string(report.checks) +
                            " maxDeviation=" + format_double(report.max_deviation)});
    }

    bool all_pass = true;
    for (const CheckRow& row : rows) all_pass = all_pass && row.pass;

    std::string text;
    if (o.format == "json") {
        Json arr = Json::array();
        for (const CheckRow& row : rows) {
            Json j;
            j["family"] = family_kind_name(row.kind);
            j["epsilon"] = o.epsilon;
            j["nu"] = format_nu(row.nu);
            j["window"] = o.window;
            j["check"] = row.check;
            j["pass"] = row.pass;
            j["detail"] = row.detail;
            arr.push_back(std::move(j));
        }
        text = arr.dump(2) + "\n";
    } else if (o.format == "csv") {
        text = "family,epsilon,nu,check,pass,detail\n";
        for (const CheckRow& row : rows)
            text += family_kind_name(row.kind) + "," + std::to_string(o.epsilon) + "," +
                    csv_cell(format_nu(row.nu)) + "," + row.check + "," +
                    (row.pass ? "true" : "false") + "," + csv_cell(row.detail) + "\n";
    } else {
        text = "| family | epsilon | nu | check | pass | detail |\n";
        text += "|---|---|---|---|---|---|\n";
        for (const CheckRow& row : rows)
            text += "| " + family_kind_name(row.kind) + " | " + std::to_string(o.epsilon) +
                    " | " + format_nu(row.nu) + " | " + row.check + " | " +
                    (row.pass ? "true" : "false") + " | " + row.detail + " |\n";
    }
    emit(o, text);
    return all_pass ? 0 : 1;
}

// -------------------------------------------------------------- structure --

int run_structure(const CommonOpts& o) {
    const std::vector<NuParameter> grid = resolve_parameters(o);
    const std::vector<FamilyKind> families = resolve_families(o.family);

    struct Entry {
        FamilyKind kind;
        NuParameter nu;
        SeriesReport report;
    };
    std::vector<Entry> entries;
    for (const NuParameter& nu : grid)
        for (FamilyKind kind : families)
            entries.push_back({kind, nu, series_report(make_spec(kind, o, nu))});

    std::string text;
    if (o.format == "json") {
        Json arr = Json::array();
        for (const Entry& e : entries) {
            Json j;
            j["family"] = family_kind_name(e.kind);
            j["epsilon"] = o.epsilon;
            j["nu"] = format_nu(e.nu);
            j["window"] = o.window;
            j["report"] = series_report_to_json(e.report);
            arr.push_back(std::move(j));
        }
        text = arr.dump(2) + "\n";
    } else {
        std::vector<std::string> factor_cells;
        factor_cells.reserve(entries.size());
        for (const Entry& e : entries) {
            std::string cell;
            for (const FactorLabel& f : e.report.factors) {
                if (!cell.empty()) cell += ';';
                cell += f.str();
            }
            factor_cells.push_back(std::move(cell));
        }
        if (o.format == "csv") {
            text = "family,epsilon,nu,bracket,completelyReducible,indecomposable,factors\n";
            for (std::size_t i = 0; i < entries.size(); ++i) {
                const Entry& e = entries[i];
                text += family_kind_name(e.kind) + "," + std::to_string(o.epsilon) + "," +
                        csv_cell(format_nu(e.nu)) + "," + csv_cell(e.report.bracket) + "," +
                        (e.report.completely_reducible ? "true" : "false") + "," +
                        (e.report.indecomposable ? "true" : "false") + "," +
                        csv_cell(factor_cells[i]) + "\n";
            }
        } else {
            text = "| family | epsilon | nu | bracket | completelyReducible | indecomposable |"
                   " factors |\n|---|---|---|---|---|---|---|\n";
            for (std::size_t i = 0; i < entries.size(); ++i) {
                const Entry& e = entries[i];
                text += "| " + family_kind_name(e.kind) + " | " + std::to_string(o.epsilon) +
                        " | " + format_nu(e.nu) + " | " + e.report.bracket + " | " +
                        (e.report.completely_reducible ? "true" : "false") + " | " +
                        (e.report.indecomposable ? "true" : "false") + " | " + factor_cells[i] +
                        " |\n";
            }
        }
    }
    emit(o, text);
    return 0;
}

// -------------------------------------------------------------- hermitian --

int run_hermitian(const CommonOpts& o) {
    if (!o.grid_text.empty())
        throw std::invalid_argument("hermitian reports one form; use --nu (or --float)");
    const NuParameter nu = resolve_parameters(o).front();
    const FamilyKind kind =
        o.family == "all" ? FamilyKind::Principal : family_kind_from_name(o.family);

    ExactForm exact{WeightWindow(Parity(o.epsilon), 6), {}, 0, 0};
    FormTable<double> approx{WeightWindow(Parity(o.epsilon), 6), {}, 0, 0};
    bool is_float = !is_exact(nu);
    if (kind == FamilyKind::Principal) {
        if (is_float)
            approx = form_on_pi_float(o.epsilon, to_complex(nu), o.window);
        else
            exact = form_on_pi(o.epsilon, nu, o.window);
    } else if (kind == FamilyKind::Deformed) {
        if (is_float) throw std::invalid_argument("the deformed family's form is exact-only");
        exact = form_on_Pi(o.epsilon, nu, o.window);
    } else {
        throw std::invalid_argument("forms are defined for --family pi and Pi");
    }

    std::string text;
    if (o.format == "csv") {
        text = is_float ? form_to_csv(approx) : form_to_csv(exact);
    } else if (o.format == "json") {
        Json j;
        j["family"] = family_kind_name(kind);
        j["epsilon"] = o.epsilon;
        j["nu"] = format_nu(nu);
        j["window"] = o.window;
        j["normalizedAt"] = is_float ? approx.normalized_at : exact.normalized_at;
        j["scaleOrder"] = is_float ? approx.scale_order : exact.scale_order;
        Json values = Json::array();
        if (is_float) {
            for (const auto& [w, v] : approx.values)
                values.push_back(Json{{"weight", w},
                                      {"value", v},
                                      {"sign", v > 0 ? 1 : v < 0 ? -1 : 0}});
        } else {
            for (const auto& [w, v] : exact.values)
                values.push_back(
                    Json{{"weight", w}, {"value", format_rat(v)}, {"sign", rat_sign(v)}});
        }
        j["values"] = std::move(values);
        text = j.dump(2) + "\n";
    } else {
        text = "| weight | value | sign |\n|---|---|---|\n";
        if (is_float) {
            for (const auto& [w, v] : approx.values)
                text += "| " + std::to_string(w) + " | " + format_double(v) + " | " +
                        std::to_string(v > 0 ? 1 : v < 0 ? -1 : 0) + " |\n";
        } else {
            for (const auto& [w, v] : exact.values)
                text += "| " + std::to_string(w) + " | " + format_rat(v) + " | " +
                        std::to_string(rat_sign(v)) + " |\n";
        }
    }
    emit(o, text);
    return 0;
}

// ----------------------------------------------------------- deform/probe --

struct ProbeOpts {
    long nu0 = 0;
    int m = 0;
    std::string psi_name = "canonical";
    int steps = 52;
    std::string delta0_text = "1/8";
    double tol = 1e-8;
};

Json run_probe_json(const ProbeOpts& p) {
    const PsiHandle psi = psi_handle_by_name(p.psi_name);
    LimitProbe probe;
    probe.nu0 = p.nu0;
    probe.steps = p.steps;
    probe.delta0 = parse_rat(p.delta0_text);
    probe.tol = p.tol;

    const auto direction_list = [&](LimitExpression expr) {
        Json arr = Json::array();
        for (ProbeDirection dir : {ProbeDirection::FromAbove, ProbeDirection::FromBelow,
                                   ProbeDirection::Imaginary}) {
            LimitProbe one = probe;
            one.direction = dir;
            arr.push_back(probe_to_json(p.nu0, p.m, dir, probe_limit(psi, p.m, one, expr)));
        }
        return arr;
    };

    Json j;
    j["psi"] = p.psi_name;
    j["m"] = p.m;
    j["nu0"] = p.nu0;
    j["raisingOverPsi"] = direction_list(LimitExpression::RaisingOverPsi);
    j["loweringTimesPsi"] = direction_list(LimitExpression::LoweringTimesPsi);
    return j;
}

int run_probe(const CommonOpts& o, const ProbeOpts& p) {
    if (o.format != "json") throw std::invalid_argument("probe reports are JSON only");
    emit(o, run_probe_json(p).dump(2) + "\n");
    return 0;
}

int run_deform(const CommonOpts& o, const ProbeOpts& p, bool probe_mode) {
    if (probe_mode) return run_probe(o, p);
    if (o.format != "json") throw std::invalid_argument("deform reports are JSON only");

    const NuParameter nu = resolve_parameters(o).front();
    const WeightWindow window(Parity(o.epsilon), o.window);
    const PhiTable phi = phi_table(nu, window);

    Json j;
    j["epsilon"] = o.epsilon;
    j["nu"] = format_nu(nu);
    j["window"] = o.window;
    Json phi_json = Json::array();
    for (const auto& [w, value] : phi.values)
        phi_json.push_back(Json{{"weight", w}, {"val", scalar_to_json(value)}});
    j["phi"] = std::move(phi_json);

    const PsiHandle psi = psi_from_phi(phi);
    Json psi_json = Json::array();
    for (int m : window.midpoints())
        if (window.contains(m - 1) && window.contains(m + 1))
            psi_json.push_back(
                Json{{"m", m}, {"val", scalar_to_json(exact_psi_value(psi, m, nu))}});
    j["psi"] = std::move(psi_json);

    FamilySpec principal = make_spec(FamilyKind::Principal, o, nu);
    FamilySpec deformed = make_spec(FamilyKind::Deformed, o, nu);
    const ExactTriple conjugated = conjugate_by_S(build_pi(principal), phi);
    const ExactTriple target = build_Pi(deformed);
    const bool reproduces = conjugated.H == target.H && conjugated.E == target.E &&
                            conjugated.F == target.F;
    j["reproducesDeformed"] = reproduces;

    emit(o, j.dump(2) + "\n");
    return reproduces ? 0 : 1;
}

// -------------------------------------------------------------------- toy --

Json mat2_json(const Mat2& m) {
    return Json::array({Json::array({m.a, m.b}), Json::array({m.c, m.d})});
}

std::string mat2_text(const Mat2& m) {
    return "[[" + format_double(m.a) + ", " + format_double(m.b) + "], [" + format_double(m.c) +
           ", " + format_double(m.d) + "]]";
}

int run_toy(const CommonOpts& o, double t) {
    const std::complex<double> z = o.nu_text.empty()
                                       ? (o.float_text.empty()
                                              ? std::complex<double>(0.25, 0.0)
                                              : to_complex(parse_float_nu(o.float_text)))
                                       : to_complex(parse_nu(o.nu_text));
    if (z.imag() != 0.0) throw std::invalid_argument("the 2x2 example uses a real parameter");
    const double nu = z.real();
    if (nu == 0.0) throw std::invalid_argument("S(0) is singular; use a nonzero --nu");

    const bool algebra_ok = toy_conjugation_check(nu, 1e-12);
    const bool group_ok = toy_group_conjugation_check(nu, group_exp(t), 1e-10) &&
                          toy_group_conjugation_check(nu, group_delta(), 1e-12);
    const ToyLimit limit = toy_Pi_limit(t);
    const bool pass = algebra_ok && group_ok && limit.converged;

    struct TableRow {
        int k;
        double nu_k, dist_exp, dist_delta;
    };
    std::vector<TableRow> table;
    for (int k = 0; k <= 24; k += 4) {
        const double nu_k = std::ldexp(1.0, -k);
        table.push_back({k, nu_k,
                         mat2_distance(toy_Pi(nu_k, group_exp(t)), limit.exp_limit),
                         mat2_distance(toy_Pi(nu_k, group_delta()), limit.delta_limit)});
    }

    std::string text;
    if (o.format == "json") {
        Json j;
        j["nu"] = nu;
        j["t"] = t;
        j["pi"] = Json{{"exp", mat2_json(toy_pi(nu, group_exp(t)))},
                       {"delta", mat2_json(toy_pi(nu, group_delta()))}};
        j["Pi"] = Json{{"exp", mat2_json(toy_Pi(nu, group_exp(t)))},
                       {"delta", mat2_json(toy_Pi(nu, group_delta()))}};
        j["conjugationAlgebra"] = algebra_ok;
        j["conjugationGroup"] = group_ok;
        j["limit"] = Json{{"exp", mat2_json(limit.exp_limit)},
                          {"delta", mat2_json(limit.delta_limit)},
                          {"converged", limit.converged},
                          {"finalDistance", limit.final_distance}};
        Json rows = Json::array();
        for (const TableRow& row : table)
            rows.push_back(Json{{"k", row.k},
                                {"nu", row.nu_k},
                                {"distExp", row.dist_exp},
                                {"distDelta", row.dist_delta}});
        j["convergence"] = std::move(rows);
        text = j.dump(2) + "\n";
    } else if (o.format == "csv") {
        text = "k,nu,distExp,distDelta\n";
        for (const TableRow& row : table)
            text += std::to_string(row.k) + "," + format_double(row.nu_k) + "," +
                    format_double(row.dist_exp) + "," + format_double(row.dist_delta) + "\n";
    } else {
        text = "nu = " + format_double(nu) + ", t = " + format_double(t) + "\n\n";
        text += "pi(nu)(e^t)    = " + mat2_text(toy_pi(nu, group_exp(t))) + "\n";
        text += "pi(nu)(delta)  = " + mat2_text(toy_pi(nu, group_delta())) + "\n";
        text += "Pi(nu)(e^t)    = " + mat2_text(toy_Pi(nu, group_exp(t))) + "\n";
        text += "Pi(nu)(delta)  = " + mat2_text(toy_Pi(nu, group_delta())) + "\n\n";
        text += std::string("S X S^-1 = Y:          ") + (algebra_ok ? "pass" : "FAIL") + "\n";
        text += std::string("S pi(g) S^-1 = Pi(g):  ") + (group_ok ? "pass" : "FAIL") + "\n\n";
        text += "| k | nu | dist e^t | dist delta |\n|---|---|---|---|\n";
        for (const TableRow& row : table)
            text += "| " + std::to_string(row.k) + " | " + format_double(row.nu_k) + " | " +
                    format_double(row.dist_exp) + " | " + format_double(row.dist_delta) + " |\n";
        text += "\nlimit e^t   -> " + mat2_text(limit.exp_limit) + "\n";
        text += "limit delta -> " + mat2_text(limit.delta_limit) + "\n";
        text += std::string("converged: ") + (limit.converged ? "true" : "false") + "\n";
    }
    emit(o, text);
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sl(2) weight-module family analyzer"};
    app.require_subcommand(1);

    CommonOpts verify_opts, structure_opts, hermitian_opts, deform_opts, probe_opts, toy_opts;
    ProbeOpts probe_cfg, deform_probe_cfg;
    std::string deform_probe_text;
    double toy_t = 1.0;

    CLI::App* verify = app.add_subcommand("verify", "bracket, Casimir, and pole-product checks");
    add_common_flags(verify, verify_opts, "json");

    CLI::App* structure = app.add_subcommand("structure", "composition-series reports");
    add_common_flags(structure, structure_opts, "json");

    CLI::App* hermitian = app.add_subcommand("hermitian", "invariant form tables");
    add_common_flags(hermitian, hermitian_opts, "csv");

    CLI::App* deform = app.add_subcommand("deform", "gauge tables and limit probes");
    add_common_flags(deform, deform_opts, "json");
    deform->add_option("--probe", deform_probe_text, "probe mode: nu0=<integer>");
    deform->add_option("--m", deform_probe_cfg.m, "probed midpoint");
    deform->add_option("--steps", deform_probe_cfg.steps, "dyadic probe depth");
    deform->add_option("--delta0", deform_probe_cfg.delta0_text, "initial probe offset");

    CLI::App* probe = app.add_subcommand("probe", "dyadic limit probes of the gauge expressions");
    add_common_flags(probe, probe_opts, "json");
    probe->add_option("--nu0", probe_cfg.nu0, "integer limit point")->required();
    probe->add_option("--m", probe_cfg.m, "probed midpoint")->required();
    probe->add_option("--steps", probe_cfg.steps, "dyadic probe depth");
    probe->add_option("--delta0", probe_cfg.delta0_text, "initial probe offset");

    CLI::App* toy = app.add_subcommand("toy", "2x2 example matrices and limits");
    add_common_flags(toy, toy_opts, "md");
    toy->add_option("--t", toy_t, "group coordinate of e^t");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(verify)) return run_verify(verify_opts);
        if (app.got_subcommand(structure)) return run_structure(structure_opts);
        if (app.got_subcommand(hermitian)) return run_hermitian(hermitian_opts);
        if (app.got_subcommand(deform)) {
            const bool probe_mode = !deform_probe_text.empty();
            if (probe_mode) {
                const std::string prefix = "nu0=";
                if (deform_probe_text.rfind(prefix, 0) != 0)
                    throw std::invalid_argument("--probe expects nu0=<integer>");
                deform_probe_cfg.nu0 = std::stol(deform_probe_text.substr(prefix.size()));
                deform_probe_cfg.psi_name = deform_opts.psi_name;
                deform_probe_cfg.tol = deform_opts.tol;
            }
            return run_deform(deform_opts, deform_probe_cfg, probe_mode);
        }
        if (app.got_subcommand(probe)) {
            probe_cfg.psi_name = probe_opts.psi_name;
            probe_cfg.tol = probe_opts.tol;
            return run_probe(probe_opts, probe_cfg);
        }
        if (app.got_subcommand(toy)) return run_toy(toy_opts, toy_t);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
