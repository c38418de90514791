#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "durrmeyer/analysis.hpp"
#include "durrmeyer/expr.hpp"
#include "durrmeyer/functions.hpp"
#include "durrmeyer/io.hpp"
#include "durrmeyer/moments.hpp"
#include "durrmeyer/operators.hpp"
#include "durrmeyer/quadrature.hpp"

namespace durrmeyer::cli {

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitAssert = 3;
constexpr int kExitIo = 4;

struct options {
    experiment_config cfg;
    std::string n_list;
    std::string x_list;
    int central_order = -1;
    int raw_order = -1;
    int example = 0;
};

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string cell;
    for (char ch : text) {
        if (ch == ',') {
            out.push_back(cell);
            cell.clear();
        } else {
            cell += ch;
        }
    }
    out.push_back(cell);
    return out;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    for (const auto& cell : split_csv(text)) {
        char* end = nullptr;
        const long v = std::strtol(cell.c_str(), &end, 10);
        if (end == cell.c_str() || *end != '\0')
            throw operators::invalid_spec(std::string(what) + ": bad integer '" + cell + "'");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& text, const char* what) {
    std::vector<double> out;
    for (const auto& cell : split_csv(text)) {
        char* end = nullptr;
        const double v = std::strtod(cell.c_str(), &end);
        if (end == cell.c_str() || *end != '\0')
            throw operators::invalid_spec(std::string(what) + ": bad number '" + cell + "'");
        out.push_back(v);
    }
    return out;
}

std::filesystem::path resolve_outdir(const options& o) {
    std::string dir = o.cfg.out_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("DURRMEYER_OUT"); env && *env) dir = env;
    }
    if (dir.empty()) dir = "out";
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw io::io_error("cannot create output directory " + dir + ": " + ec.message());
    return dir;
}

// "m1-custom" builds the order-I operator from the --a0/--a1 expressions
// evaluated at n; every other name goes through the preset table.
operators::operator_spec make_spec(const std::string& name, int n, const options& o) {
    if (name == "m1-custom") {
        if (o.cfg.a0_expr.empty() || o.cfg.a1_expr.empty())
            throw operators::invalid_spec("m1-custom needs both --a0 and --a1");
        return operators::m1_spec(
            n, basis::linear_coeff{expr::eval_in_n(o.cfg.a0_expr, n),
                                   expr::eval_in_n(o.cfg.a1_expr, n)});
    }
    return operators::preset(name, n);
}

void finalize_operators(options& o, const std::vector<int>& default_n) {
    if (!o.n_list.empty())
        o.cfg.n_values = parse_int_list(o.n_list, "--n");
    if (o.cfg.n_values.empty()) o.cfg.n_values = default_n;

    std::vector<std::string> flat;
    for (const auto& p : o.cfg.presets)
        for (const auto& name : split_csv(p)) flat.push_back(name);
    o.cfg.presets = flat;

    const bool have_a0 = !o.cfg.a0_expr.empty(), have_a1 = !o.cfg.a1_expr.empty();
    if (have_a0 != have_a1)
        throw operators::invalid_spec("--a0 and --a1 must be given together");
    if (have_a0 &&
        std::find(o.cfg.presets.begin(), o.cfg.presets.end(), "m1-custom") ==
            o.cfg.presets.end())
        o.cfg.presets.emplace_back("m1-custom");
    if (o.cfg.presets.empty()) o.cfg.presets.emplace_back("classical");

    if (o.cfg.grid_resolution < 11)
        throw operators::invalid_spec("--grid must be at least 11");
    for (int n : o.cfg.n_values)
        if (n < 1) throw operators::invalid_spec("--n entries must be positive");
}

struct op_column {
    std::string label;
    std::vector<double> values;  // approximant on the grid
    std::vector<double> errors;  // |f - approximant|
    double sup_error = 0.0;
};

std::vector<op_column> evaluate_operators(const options& o,
                                          const functions::target_function& f,
                                          const analysis::grid& g) {
    std::vector<op_column> cols;
    for (const auto& name : o.cfg.presets) {
        for (int n : o.cfg.n_values) {
            const auto spec = make_spec(name, n, o);
            op_column col;
            col.label = spec.id();
            col.values.reserve(g.points.size());
            col.errors.reserve(g.points.size());
            for (const auto& [x, v] : operators::apply_on_grid(spec, f, g)) {
                const double err = std::fabs(f.eval(x) - v);
                col.values.push_back(v);
                col.errors.push_back(err);
                col.sup_error = std::max(col.sup_error, err);
            }
            cols.push_back(std::move(col));
        }
    }
    return cols;
}

io::series to_series(const std::string& label, const std::vector<double>& xs,
                     const std::vector<double>& ys) {
    io::series s;
    s.label = label;
    s.points.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) s.points.emplace_back(xs[i], ys[i]);
    return s;
}

int cmd_approximate(options& o) {
    finalize_operators(o, {10});
    if (o.cfg.function_id.empty())
        throw operators::invalid_spec("approximate needs --f");
    const auto& f = functions::by_name(o.cfg.function_id);
    const auto g = analysis::grid::uniform(o.cfg.grid_resolution);
    const auto dir = resolve_outdir(o);

    std::vector<double> fvals;
    fvals.reserve(g.points.size());
    for (double x : g.points) fvals.push_back(f.eval(x));

    std::vector<std::string> header = {"x", "f"};
    std::vector<std::vector<double>> columns = {g.points, fvals};
    std::vector<io::series> plots = {to_series("f", g.points, fvals)};
    for (auto& col : evaluate_operators(o, f, g)) {
        header.push_back(col.label);
        plots.push_back(to_series(col.label, g.points, col.values));
        columns.push_back(std::move(col.values));
    }

    const auto csv = dir / (f.id + "_approx.csv");
    io::write_csv(csv.string(), header, columns);
    std::printf("wrote %s\n", csv.string().c_str());
    if (o.cfg.svg) {
        const auto svg = dir / (f.id + "_approx.svg");
        io::write_svg(svg.string(), f.id + " approximants", plots);
        std::printf("wrote %s\n", svg.string().c_str());
    }
    return 0;
}

int cmd_errors(options& o) {
    finalize_operators(o, {10});
    if (o.cfg.function_id.empty()) throw operators::invalid_spec("errors needs --f");
    const auto& f = functions::by_name(o.cfg.function_id);
    const auto g = analysis::grid::uniform(o.cfg.grid_resolution);
    const auto dir = resolve_outdir(o);

    std::vector<std::string> header = {"x"};
    std::vector<std::vector<double>> columns = {g.points};
    std::vector<io::series> plots;
    for (auto& col : evaluate_operators(o, f, g)) {
        std::printf("%s sup-error %s\n", col.label.c_str(),
                    io::format_double(col.sup_error).c_str());
        header.push_back(col.label);
        plots.push_back(to_series(col.label, g.points, col.errors));
        columns.push_back(std::move(col.errors));
    }

    const auto csv = dir / (f.id + "_errors.csv");
    io::write_csv(csv.string(), header, columns);
    std::printf("wrote %s\n", csv.string().c_str());
    if (o.cfg.svg) {
        const auto svg = dir / (f.id + "_errors.svg");
        io::write_svg(svg.string(), f.id + " absolute errors", plots);
        std::printf("wrote %s\n", svg.string().c_str());
    }
    return 0;
}

int cmd_moments(options& o) {
    finalize_operators(o, {10});
    if (o.cfg.presets.size() != 1)
        throw operators::invalid_spec("moments needs exactly one --preset");
    if ((o.central_order < 0) == (o.raw_order < 0))
        throw operators::invalid_spec("moments needs exactly one of --central or --raw");
    const auto xs = o.x_list.empty()
                        ? std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}
                        : parse_double_list(o.x_list, "--x");

    moments::moment_query q;
    q.kind = o.central_order >= 0 ? moments::moment_kind::central
                                  : moments::moment_kind::raw;
    q.order = o.central_order >= 0 ? o.central_order : o.raw_order;
    for (int n : o.cfg.n_values) {
        q.spec = make_spec(o.cfg.presets.front(), n, o);
        std::printf("# %s %s order %d\n", q.spec.id().c_str(),
                    q.kind == moments::moment_kind::central ? "central" : "raw",
                    q.order);
        for (double x : xs) {
            q.x = x;
            const auto closed = moments::closed_moment(q);
            if (!closed) {
                std::fprintf(stderr,
                             "no closed form for this family/kind/order; supported:\n");
                for (const auto& line : moments::supported_closed_forms())
                    std::fprintf(stderr, "  %s\n", line.c_str());
                return kExitConfig;
            }
            const double brute = moments::moment_bruteforce(q);
            std::printf("x=%-8g closed=%-24s brute=%-24s |diff|=%.3e%s\n", x,
                        io::format_double(closed->value).c_str(),
                        io::format_double(brute).c_str(),
                        std::fabs(closed->value - brute),
                        closed->asymptotic ? "  [leading term]" : "");
        }
    }
    return 0;
}

int cmd_rate(options& o) {
    finalize_operators(o, {16, 32, 64, 128, 256});
    if (o.cfg.function_id.empty()) throw operators::invalid_spec("rate needs --f");
    if (o.cfg.presets.size() != 1)
        throw operators::invalid_spec("rate needs exactly one --preset");
    if (o.cfg.n_values.size() < 4)
        throw operators::invalid_spec("rate needs at least four --n values");
    const auto& f = functions::by_name(o.cfg.function_id);
    const auto g = analysis::grid::uniform(o.cfg.grid_resolution);
    const std::string name = o.cfg.presets.front();

    const auto fit = analysis::convergence_order(
        [&](int n) { return make_spec(name, n, o); }, f, o.cfg.n_values, g);

    for (std::size_t i = 0; i < fit.n_values.size(); ++i)
        std::printf("n=%-6d sup-error %s\n", fit.n_values[i],
                    io::format_double(fit.sup_errors[i]).c_str());
    if (fit.degenerate) {
        std::printf("degenerate fit: sup-errors are at the noise floor\n");
    } else {
        std::printf("slope %.6f  intercept %.6f  r2 %.6f\n", fit.slope,
                    fit.intercept, fit.r_squared);
    }

    const auto dir = resolve_outdir(o);
    std::vector<double> ncol(fit.n_values.begin(), fit.n_values.end());
    const auto csv = dir / (f.id + "_" + name + "_rate.csv");
    io::write_csv(csv.string(), {"n", "sup_error"}, {ncol, fit.sup_errors});
    std::printf("wrote %s\n", csv.string().c_str());
    if (o.cfg.svg) {
        io::series s;
        s.label = name;
        for (std::size_t i = 0; i < ncol.size(); ++i)
            s.points.emplace_back(std::log10(ncol[i]),
                                  std::log10(std::max(fit.sup_errors[i], 1e-18)));
        const auto svg = dir / (f.id + "_" + name + "_rate.svg");
        io::write_svg(svg.string(), f.id + " sup-error vs n (log10 axes)", {s});
        std::printf("wrote %s\n", svg.string().c_str());
    }
    return 0;
}

// Shared emitter for the three published examples. Writes the approximant
// and error tables plus plots, prints sup-error summary lines, and returns
// the sup-errors keyed by (preset, n) for the ordering assertions.
std::map<std::pair<std::string, int>, double> emit_example(
    const options& o, const functions::target_function& f,
    const std::vector<std::string>& names, const std::vector<int>& ns,
    bool per_operator_files) {
    const auto g = analysis::grid::uniform(o.cfg.grid_resolution);
    const auto dir = resolve_outdir(o);
    std::vector<double> fvals;
    fvals.reserve(g.points.size());
    for (double x : g.points) fvals.push_back(f.eval(x));

    std::map<std::pair<std::string, int>, double> sups;
    const auto eval_one = [&](const std::string& name, int n, op_column& col) {
        const auto spec = operators::preset(name, n);
        col.label = spec.id();
        for (const auto& [x, v] : operators::apply_on_grid(spec, f, g)) {
            const double err = std::fabs(f.eval(x) - v);
            col.values.push_back(v);
            col.errors.push_back(err);
            col.sup_error = std::max(col.sup_error, err);
        }
        sups[{name, n}] = col.sup_error;
        std::printf("%s %s sup-error %s\n", f.id.c_str(), col.label.c_str(),
                    io::format_double(col.sup_error).c_str());
    };

    if (!per_operator_files) {
        std::vector<std::string> aheader = {"x", "f"}, eheader = {"x"};
        std::vector<std::vector<double>> acols = {g.points, fvals}, ecols = {g.points};
        std::vector<io::series> aplots = {to_series("f", g.points, fvals)}, eplots;
        for (const auto& name : names) {
            for (int n : ns) {
                op_column col;
                eval_one(name, n, col);
                aheader.push_back(col.label);
                eheader.push_back(col.label);
                aplots.push_back(to_series(col.label, g.points, col.values));
                eplots.push_back(to_series(col.label, g.points, col.errors));
                acols.push_back(std::move(col.values));
                ecols.push_back(std::move(col.errors));
            }
        }
        io::write_csv((dir / (f.id + "_approx.csv")).string(), aheader, acols);
        io::write_csv((dir / (f.id + "_errors.csv")).string(), eheader, ecols);
        io::write_svg((dir / (f.id + "_approx.svg")).string(),
                      f.id + " approximants", aplots);
        io::write_svg((dir / (f.id + "_errors.svg")).string(),
                      f.id + " absolute errors", eplots);
        std::printf("wrote %s and companions\n",
                    (dir / (f.id + "_approx.csv")).string().c_str());
        return sups;
    }

    for (const auto& name : names) {
        std::vector<std::string> aheader = {"x", "f"}, eheader = {"x"};
        std::vector<std::vector<double>> acols = {g.points, fvals}, ecols = {g.points};
        std::vector<io::series> aplots = {to_series("f", g.points, fvals)}, eplots;
        for (int n : ns) {
            op_column col;
            eval_one(name, n, col);
            const std::string tag = "n" + std::to_string(n);
            aheader.push_back(tag);
            eheader.push_back(tag);
            aplots.push_back(to_series(tag, g.points, col.values));
            eplots.push_back(to_series(tag, g.points, col.errors));
            acols.push_back(std::move(col.values));
            ecols.push_back(std::move(col.errors));
        }
        const std::string stem = f.id + "_" + name;
        io::write_csv((dir / (stem + "_approx.csv")).string(), aheader, acols);
        io::write_csv((dir / (stem + "_errors.csv")).string(), eheader, ecols);
        io::write_svg((dir / (stem + "_approx.svg")).string(),
                      f.id + " " + name + " approximants", aplots);
        io::write_svg((dir / (stem + "_errors.svg")).string(),
                      f.id + " " + name + " absolute errors", eplots);
        std::printf("wrote %s and companions\n",
                    (dir / (stem + "_approx.csv")).string().c_str());
    }
    return sups;
}

void assert_modified_beat_classical(
    const std::map<std::pair<std::string, int>, double>& sups, int n,
    const std::string& which) {
    const double classical = sups.at({"classical", n});
    for (const std::string name : {"m2-tilde", "m3-tilde"}) {
        const double modified = sups.at({name, n});
        if (!(modified < classical))
            throw operators::numerical_assertion(
                which + ": " + name + " sup-error " + io::format_double(modified) +
                " is not below classical " + io::format_double(classical) +
                " at n=" + std::to_string(n));
    }
}

int cmd_reproduce(options& o) {
    if (o.cfg.grid_resolution < 11)
        throw operators::invalid_spec("--grid must be at least 11");
    switch (o.example) {
        case 1: {
            const auto sups = emit_example(
                o, functions::by_name("example1"),
                {"classical", "m1-example1", "m2-tilde", "m3-tilde"}, {10}, false);
            assert_modified_beat_classical(sups, 10, "example 1");
            return 0;
        }
        case 2: {
            emit_example(o, functions::by_name("example2"),
                         {"classical", "m1-example2", "m2-tilde", "m3-tilde"}, {10},
                         false);
            return 0;
        }
        case 3: {
            const auto sups = emit_example(
                o, functions::by_name("example3"),
                {"classical", "m1-example1", "m2-tilde", "m3-tilde"}, {5, 10, 20},
                true);
            assert_modified_beat_classical(sups, 10, "example 3");
            return 0;
        }
        default:
            throw operators::invalid_spec("reproduce-example takes 1, 2 or 3");
    }
}

int run_impl(int argc, char** argv) {
    CLI::App app{"Durrmeyer-type operators: approximation, moments, rates, plots"};
    app.require_subcommand(1);
    app.set_config("--config")
        ->description("flat key=value file; command-line flags override");

    options o;
    app.add_option("--preset", o.cfg.presets,
                   "operator preset(s); repeat or comma-separate");
    app.add_option("--n", o.n_list, "degree list, e.g. 16,32,64");
    app.add_option("--f", o.cfg.function_id, "target function name");
    app.add_option("--grid", o.cfg.grid_resolution, "grid resolution (>= 11)");
    app.add_option("--out", o.cfg.out_dir,
                   "output directory (default $DURRMEYER_OUT or ./out)");
    app.add_flag("--svg", o.cfg.svg, "also write SVG plots");
    app.add_option("--a0", o.cfg.a0_expr, "order-I a0(n), rational expression in n");
    app.add_option("--a1", o.cfg.a1_expr, "order-I a1(n), rational expression in n");
    app.add_option("--central", o.central_order, "central moment order");
    app.add_option("--raw", o.raw_order, "raw moment order");
    app.add_option("--x", o.x_list, "evaluation points, e.g. 0,0.25,0.5");

    auto* approximate =
        app.add_subcommand("approximate", "tabulate f and operator approximants");
    auto* errors = app.add_subcommand("errors", "tabulate absolute errors");
    auto* moments_cmd =
        app.add_subcommand("moments", "compare closed-form and brute-force moments");
    auto* rate = app.add_subcommand("rate", "fit the convergence order");
    auto* reproduce =
        app.add_subcommand("reproduce-example", "rebuild a published example");
    reproduce->add_option("example", o.example, "example number")
        ->required()
        ->check(CLI::Range(1, 3));
    for (auto* sub : {approximate, errors, moments_cmd, rate, reproduce})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    if (approximate->parsed()) return cmd_approximate(o);
    if (errors->parsed()) return cmd_errors(o);
    if (moments_cmd->parsed()) return cmd_moments(o);
    if (rate->parsed()) return cmd_rate(o);
    return cmd_reproduce(o);
}

}

int run(int argc, char** argv) {
    try {
        return run_impl(argc, argv);
    } catch (const operators::numerical_assertion& e) {
        std::fprintf(stderr, "numerical assertion failed: %s\n", e.what());
        return kExitAssert;
    } catch (const io::io_error& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return kExitIo;
    } catch (const std::filesystem::filesystem_error& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid configuration: %s\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

}
