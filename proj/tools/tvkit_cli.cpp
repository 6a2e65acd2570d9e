// tvkit command-line front end: time-value transforms, stream NPV/IRR,
// knowledge weights, divergence probes, indifference selection, and
// curve-table emission (CSV, optional SVG) for the standard figure set.
#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tvkit/knowledge_tv.hpp"
#include "tvkit/money_tv.hpp"
#include "tvkit/rate_solver.hpp"
#include "tvkit/valuation_core.hpp"
#include "tvkit/weight_profiles.hpp"

namespace {

using json = nlohmann::json;
using namespace tvkit;

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// shortest decimal representation that round-trips the double
std::string shortest(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// fixed 10-significant-digit rendering for scalar results
std::string ten_digits(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%#.10g", v);
    return buf;
}

void emit_line(const std::string& line, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << line << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out)
            throw UsageError("cannot open output file: " + out_path);
        out << line << "\n";
    }
}

CashFlowStream load_stream(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open stream file: " + path);

    std::vector<std::pair<double, double>> pairs;
    if (path.size() >= 5 && path.ends_with(".json")) {
        json doc;
        try {
            in >> doc;
        } catch (const json::exception& e) {
            throw UsageError(path + ": " + e.what());
        }
        if (!doc.is_array())
            throw UsageError(path + ": expected a JSON array of flows");
        for (const auto& entry : doc) {
            if (!entry.contains("time") || !entry.contains("amount"))
                throw UsageError(path + ": flow needs \"time\" and \"amount\"");
            pairs.emplace_back(entry["time"].get<double>(),
                               entry["amount"].get<double>());
        }
        return make_stream(pairs);
    }

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (line_no == 1) {
            if (line != "time,amount")
                throw UsageError(path + ":1: expected header 'time,amount'");
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw UsageError(path + ":" + std::to_string(line_no) +
                             ": expected 'time,amount' row");
        try {
            pairs.emplace_back(std::stod(line.substr(0, comma)),
                               std::stod(line.substr(comma + 1)));
        } catch (const std::exception&) {
            throw UsageError(path + ":" + std::to_string(line_no) +
                             ": malformed number");
        }
    }
    try {
        return make_stream(pairs);
    } catch (const OutOfDomainError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

struct Grid {
    double start = 0.0;
    double stop = 0.0;
    int steps = 0;

    double at(int i) const {
        if (steps == 1)
            return start;
        return start + (stop - start) * i / (steps - 1);
    }
};

Grid parse_range(const std::string& text) {
    Grid g;
    const auto first = text.find(':');
    const auto second = text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw UsageError("range must be start:stop:steps");
    try {
        g.start = std::stod(text.substr(0, first));
        g.stop = std::stod(text.substr(first + 1, second - first - 1));
        g.steps = std::stoi(text.substr(second + 1));
    } catch (const std::exception&) {
        throw UsageError("range must be start:stop:steps");
    }
    if (g.steps < 1 || (g.steps > 1 && !(g.start < g.stop)))
        throw UsageError("range needs start < stop and steps >= 1");
    return g;
}

/// Ordered rows of (t, series values) with named columns.
struct CurveTable {
    std::vector<std::string> names; // series names, excluding the t column
    std::vector<std::vector<double>> rows; // each row: t followed by values

    void validate() const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != names.size() + 1)
                throw UsageError("curve table has a ragged row");
            for (double v : rows[r])
                if (!std::isfinite(v))
                    throw UsageError("curve table contains a non-finite value");
            if (r > 0 && !(rows[r][0] > rows[r - 1][0]))
                throw UsageError("curve table t-column must strictly increase");
        }
    }

    std::string to_csv() const {
        std::string out = "t";
        for (const auto& n : names)
            out += "," + n;
        out += "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i)
                    out += ",";
                out += shortest(row[i]);
            }
            out += "\n";
        }
        return out;
    }

    std::string to_svg() const;
};

std::string CurveTable::to_svg() const {
    constexpr double width = 800.0;
    constexpr double height = 500.0;
    constexpr double margin = 40.0;
    static const char* const palette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                          "#9467bd", "#ff7f0e", "#8c564b"};

    double tmin = rows.front()[0];
    double tmax = rows.back()[0];
    double vmin = rows.front()[1];
    double vmax = vmin;
    for (const auto& row : rows)
        for (std::size_t i = 1; i < row.size(); ++i) {
            vmin = std::min(vmin, row[i]);
            vmax = std::max(vmax, row[i]);
        }
    if (tmax == tmin)
        tmax = tmin + 1.0;
    if (vmax == vmin)
        vmax = vmin + 1.0;

    const auto sx = [&](double t) {
        return margin + (t - tmin) / (tmax - tmin) * (width - 2 * margin);
    };
    const auto sy = [&](double v) {
        return height - margin -
               (v - vmin) / (vmax - vmin) * (height - 2 * margin);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\">\n";
    for (std::size_t s = 0; s < names.size(); ++s) {
        svg << "<polyline fill=\"none\" stroke=\"" << palette[s % 6]
            << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& row : rows)
            svg << sx(row[0]) << "," << sy(row[1 + s]) << " ";
        svg << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

// Declared figure defaults: the reference figures carry no axis numbers,
// so these constants are ours and every one is overridable by flags.
struct FigureParams {
    double rate = 0.05;   // fig 1 interest
    double k = 0.1;       // figs 2/3 rate
    double lambda = 0.5;  // fig 7 decay
    double x0 = 1.0;      // fig 3 initial levels
    double amplitude = 1.0;
    double center = 15.0; // figs 4/6 peak location
    double width = 3.0;   // fig 4
    double eps = 0.05;    // fig 6 nascent-delta width
    double shock = 10.0;  // fig 7 shock time
};

using Series = std::pair<std::string, std::function<double(double)>>;

std::vector<Series> figure_series(int figure, const FigureParams& p) {
    switch (figure) {
    case 1:
        return {{"discount",
                 [p](double n) {
                     return money::discount_factor(Rate::interest(p.rate),
                                                   Periods(n))
                         .value;
                 }},
                {"compound", [p](double n) {
                     return money::fv_of_pv(1.0, Rate::interest(p.rate),
                                            Periods(n));
                 }}};
    case 2:
        return {{"hyperbolic",
                 [p](double d) {
                     return money::discount_factor_hyperbolic(p.k, Periods(d))
                         .value;
                 }},
                {"exponential", [p](double d) {
                     return money::discount_factor_exp_continuous(p.k,
                                                                  Periods(d))
                         .value;
                 }}};
    case 3:
        return {{"growth",
                 [p](double t) { return profiles::exp_growth(p.x0, p.k, t); }},
                {"decay", [p](double t) {
                     return profiles::exp_decay(p.x0, p.k, t);
                 }}};
    case 4:
        return {{"gaussian", [p](double t) {
                     return profiles::gaussian_weight(
                         profiles::GaussianProfile{p.amplitude, p.center,
                                                   p.width},
                         t);
                 }}};
    case 5: {
        const profiles::MixtureProfile m{
            {{0.5, profiles::GaussianProfile{1.0, 10.0, 2.0}},
             {0.5, profiles::GaussianProfile{1.0, 20.0, 2.0}}}};
        return {{"mixture",
                 [m](double t) { return profiles::mixture_weight(m, t); }}};
    }
    case 6:
        return {{"impulse", [p](double t) {
                     return profiles::nascent_delta(p.eps, p.center, t);
                 }}};
    case 7:
        return {{"impulse_response", [p](double t) {
                     return profiles::impulse_response(
                         p.shock, Rate::decay(p.lambda), t);
                 }}};
    default:
        throw UsageError("figure must be in 1..7");
    }
}

std::vector<Series> spec_series(const std::string& spec_text) {
    json doc;
    try {
        doc = json::parse(spec_text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("bad curve spec: ") + e.what());
    }
    if (!doc.contains("series") || !doc["series"].is_array() ||
        doc["series"].empty())
        throw UsageError("curve spec needs a non-empty \"series\" array");

    std::vector<Series> out;
    for (const auto& s : doc["series"]) {
        const std::string type = s.value("type", "");
        const std::string name = s.value("name", type);
        const auto num = [&s](const char* key, double fallback) {
            return s.value(key, fallback);
        };
        if (type == "gaussian") {
            profiles::GaussianProfile g{num("a", 1.0), num("b", 0.0),
                                        num("c", 1.0)};
            out.emplace_back(name, [g](double t) {
                return profiles::gaussian_weight(g, t);
            });
        } else if (type == "normal") {
            profiles::NormalDensity d{num("mean", 0.0), num("variance", 1.0)};
            out.emplace_back(name, [d](double x) {
                return profiles::normal_density(d, x);
            });
        } else if (type == "beta") {
            profiles::BetaDensity d{num("alpha", 2.0), num("beta", 2.0)};
            out.emplace_back(name, [d](double x) {
                return (x < 0.0 || x > 1.0) ? 0.0
                                            : profiles::beta_density(d, x);
            });
        } else if (type == "delta") {
            const double eps = num("eps", 0.05);
            const double center = num("center", 0.0);
            out.emplace_back(name, [eps, center](double t) {
                return profiles::nascent_delta(eps, center, t);
            });
        } else if (type == "impulse") {
            const double shock = num("shock", 0.0);
            const Rate lam = Rate::decay(num("lambda", 0.5));
            out.emplace_back(name, [shock, lam](double t) {
                return profiles::impulse_response(shock, lam, t);
            });
        } else if (type == "growth") {
            const double x0 = num("x0", 1.0);
            const double k = num("k", 0.1);
            out.emplace_back(name, [x0, k](double t) {
                return profiles::exp_growth(x0, k, t);
            });
        } else if (type == "decay") {
            const double n0 = num("n0", 1.0);
            const double lam = num("lambda", 0.1);
            out.emplace_back(name, [n0, lam](double t) {
                return profiles::exp_decay(n0, lam, t);
            });
        } else if (type == "hyperbolic") {
            const double k = num("k", 0.1);
            out.emplace_back(name, [k](double d) {
                return money::discount_factor_hyperbolic(k, Periods(d)).value;
            });
        } else if (type == "exponential") {
            const double k = num("k", 0.1);
            out.emplace_back(name, [k](double d) {
                return money::discount_factor_exp_continuous(k, Periods(d))
                    .value;
            });
        } else if (type == "discount") {
            const Rate i = Rate::interest(num("i", 0.05));
            out.emplace_back(name, [i](double n) {
                return money::discount_factor(i, Periods(n)).value;
            });
        } else if (type == "compound") {
            const Rate i = Rate::interest(num("i", 0.05));
            out.emplace_back(name, [i](double n) {
                return money::fv_of_pv(1.0, i, Periods(n));
            });
        } else {
            throw UsageError("unknown series type: '" + type + "'");
        }
    }
    return out;
}

std::string default_range(int figure) {
    switch (figure) {
    case 2: return "0:50:501";
    case 6: return "0:30:601";
    default: return "0:30:301";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"time-value computations for money and knowledge"};
    app.require_subcommand(1);

    std::string out_path;
    std::string format = "csv";
    app.add_option("--out", out_path, "write output to this file")
        ->configurable(false);
    app.add_option("--format", format, "curve output format")
        ->check(CLI::IsMember({"csv", "svg"}));

    double amount = 0.0;
    double rate = 0.0;
    double periods_value = 0.0;
    auto* pv_cmd = app.add_subcommand("pv", "present value of a future amount");
    pv_cmd->add_option("--amount", amount)->required();
    pv_cmd->add_option("--rate", rate)->required();
    pv_cmd->add_option("--periods", periods_value)->required();

    auto* fv_cmd = app.add_subcommand("fv", "future value of a present amount");
    fv_cmd->add_option("--amount", amount)->required();
    fv_cmd->add_option("--rate", rate)->required();
    fv_cmd->add_option("--periods", periods_value)->required();

    std::string stream_path;
    auto* npv_cmd = app.add_subcommand("npv", "net present value of a stream");
    npv_cmd->add_option("--stream", stream_path)->required();
    npv_cmd->add_option("--rate", rate)->required();

    double lo = -0.9;
    double hi = 10.0;
    double tol = 1e-12;
    auto* irr_cmd = app.add_subcommand("irr", "internal rate of return");
    irr_cmd->add_option("--stream", stream_path)->required();
    irr_cmd->add_option("--lo", lo, "bracket lower end");
    irr_cmd->add_option("--hi", hi, "bracket upper end");
    irr_cmd->add_option("--tol", tol, "relative NPV tolerance");

    double k = 0.0;
    auto* weight_cmd = app.add_subcommand("weight", "knowledge weight (1+k)^n");
    weight_cmd->add_option("--k", k)->required();
    weight_cmd->add_option("--periods", periods_value)->required();

    double base = 1.0;
    double threshold = 0.0;
    std::int64_t nmax = 10000;
    auto* probe_cmd =
        app.add_subcommand("probe", "divergence probe of base*(1+k)^n");
    probe_cmd->add_option("--base", base);
    probe_cmd->add_option("--k", k)->required();
    probe_cmd->add_option("--threshold", threshold)->required();
    probe_cmd->add_option("--nmax", nmax);

    std::vector<std::string> select_values;
    double select_tol = knowledge::kDefaultIndifferenceTol;
    std::uint64_t seed = 0;
    auto* select_cmd = app.add_subcommand(
        "select", "pick uniformly among the best-valued options");
    select_cmd
        ->add_option("--values", select_values,
                     "comma-separated entries: a number, or 'div'")
        ->required()
        ->delimiter(',');
    select_cmd->add_option("--tol", select_tol);
    select_cmd->add_option("--seed", seed);

    int figure = 0;
    std::string spec_text;
    std::string range_text;
    auto* curve_cmd = app.add_subcommand("curve", "emit figure curve data");
    auto* fig_opt = curve_cmd->add_option("--figure", figure)
                        ->check(CLI::Range(1, 7));
    auto* spec_opt =
        curve_cmd->add_option("--spec", spec_text, "JSON series spec");
    fig_opt->excludes(spec_opt);
    curve_cmd->add_option("--range", range_text, "grid as start:stop:steps");
    FigureParams fig;
    curve_cmd->add_option("--rate", fig.rate, "figure 1 interest rate");
    curve_cmd->add_option("--k", fig.k, "figures 2/3 rate");
    curve_cmd->add_option("--lambda", fig.lambda, "figure 7 decay rate");
    curve_cmd->add_option("--x0", fig.x0, "figure 3 initial level");
    curve_cmd->add_option("--amplitude", fig.amplitude, "figure 4 amplitude");
    curve_cmd->add_option("--center", fig.center, "figures 4/6 center");
    curve_cmd->add_option("--width", fig.width, "figure 4 width");
    curve_cmd->add_option("--eps", fig.eps, "figure 6 delta width");
    curve_cmd->add_option("--shock", fig.shock, "figure 7 shock time");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the one-line message to stderr
        return kExitUsage;
    }

    if (pv_cmd->parsed()) {
        emit_line(ten_digits(money::pv_of_fv(amount, Rate::interest(rate),
                                             Periods(periods_value))),
                  out_path);
    } else if (fv_cmd->parsed()) {
        emit_line(ten_digits(money::fv_of_pv(amount, Rate::interest(rate),
                                             Periods(periods_value))),
                  out_path);
    } else if (npv_cmd->parsed()) {
        emit_line(ten_digits(money::pv_of_stream(load_stream(stream_path),
                                                 Rate::interest(rate))),
                  out_path);
    } else if (irr_cmd->parsed()) {
        const Rate r = solver::irr(load_stream(stream_path),
                                   solver::Bracket(lo, hi), tol);
        emit_line(ten_digits(r.value()), out_path);
    } else if (weight_cmd->parsed()) {
        emit_line(ten_digits(knowledge::weight(Rate::knowledge(k),
                                               Periods(periods_value))
                                 .value),
                  out_path);
    } else if (probe_cmd->parsed()) {
        try {
            const auto result = knowledge::limit_probe(
                base, Rate::knowledge(k), threshold, nmax);
            if (result.is_divergent())
                emit_line("DIVERGENT N=" +
                              std::to_string(result.certificate().crossing_period),
                          out_path);
            else
                emit_line("FINITE " + shortest(result.finite_value()), out_path);
        } catch (const InconclusiveError& e) {
            emit_line("INCONCLUSIVE value_at_nmax=" +
                          shortest(e.value_at_n_max()),
                      out_path);
            return kExitNumerical;
        }
    } else if (select_cmd->parsed()) {
        std::vector<ValuationResult> values;
        for (const auto& entry : select_values) {
            if (entry == "div") {
                // synthetic certificate standing in for any divergent option
                values.push_back(ValuationResult::divergent(
                    knowledge::limit_probe(1.0, Rate::knowledge(1.0), 1.5, 10)
                        .certificate()));
            } else {
                try {
                    values.push_back(ValuationResult::finite(std::stod(entry)));
                } catch (const std::exception&) {
                    throw UsageError("bad select entry: '" + entry + "'");
                }
            }
        }
        emit_line(std::to_string(knowledge::indifference_select(
                      values, select_tol, seed)),
                  out_path);
    } else if (curve_cmd->parsed()) {
        if (fig_opt->count() == 0 && spec_opt->count() == 0)
            throw UsageError("curve needs --figure or --spec");
        const auto series = spec_opt->count() ? spec_series(spec_text)
                                              : figure_series(figure, fig);
        const Grid grid =
            parse_range(range_text.empty() ? default_range(figure ? figure : 1)
                                           : range_text);
        CurveTable table;
        for (const auto& [name, fn] : series)
            table.names.push_back(name);
        for (int i = 0; i < grid.steps; ++i) {
            std::vector<double> row{grid.at(i)};
            for (const auto& [name, fn] : series)
                row.push_back(fn(row[0]));
            table.rows.push_back(std::move(row));
        }
        table.validate();
        const std::string body =
            format == "svg" ? table.to_svg() : table.to_csv();
        if (out_path.empty()) {
            std::cout << body;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out)
                throw UsageError("cannot open output file: " + out_path);
            out << body;
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const OutOfDomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const AxiomViolationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const EmptyStreamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const EmptyInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NoSignChangeError&) {
        std::cerr << "error: no sign change in bracket\n";
        return kExitNumerical;
    } catch (const NonConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const NumericalFailureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
