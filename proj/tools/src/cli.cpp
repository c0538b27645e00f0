#include "heatbox/cli.hpp"

#include "heatbox/convex_geom.hpp"
#include "heatbox/errors.hpp"
#include "heatbox/images.hpp"
#include "heatbox/spectrum.hpp"
#include "heatbox/trace.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace heatbox::cli {

namespace {

using Cell = std::optional<double>;

struct Table {
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(const Table& table, std::ostream& out) {
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out << (i ? "," : "") << table.columns[i];
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ",";
            if (row[i]) out << format_number(*row[i]);
        }
        out << "\n";
    }
}

void write_json(const Table& table, std::ostream& out) {
    nlohmann::json j;
    j["command"] = table.command;
    j["columns"] = table.columns;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json jrow = nlohmann::json::array();
        for (const Cell& cell : row) {
            if (cell)
                jrow.push_back(*cell);
            else
                jrow.push_back(nullptr);
        }
        j["rows"].push_back(std::move(jrow));
    }
    out << j.dump(2) << "\n";
}

QuadratureSpec make_quad(const RunConfig& config) {
    QuadratureSpec quad;
    if (config.tol > 0.0) quad.rel_tol = config.tol;
    return quad;
}

TruncationSpec make_trunc(const RunConfig& config) {
    TruncationSpec trunc;
    if (config.max_terms > 0) trunc.max_terms_per_axis = config.max_terms;
    return trunc;
}

double product_exact_half(const std::vector<double>& edges, double t) {
    double z = 1.0;
    for (double a : edges) z *= trace_exact_half(a, t);
    return z;
}

double trace_by_method(const RunConfig& config, const SpectralModel& model,
                       double t) {
    const TruncationSpec trunc = make_trunc(config);
    if (config.method == "direct") return trace_direct(model, t, trunc);
    if (config.method == "exact-half") {
        if (model.s != 0.5)
            throw domain_error("method exact-half requires --s 0.5");
        return product_exact_half(model.box.edges, t);
    }
    if (config.method == "theta") {
        if (model.s != 1.0) throw domain_error("method theta requires --s 1");
        return trace_theta_s1(model.box, t);
    }
    if (config.method == "asymptotic") return trace_asymptotic(model, t);
    if (config.method == "images") {
        const QuadratureSpec quad = make_quad(config);
        if (model.box.dim() == 1)
            return image_trace(model.box.edges[0], model.s, t, {}, quad).value;
        if (model.box.dim() == 2 && model.s == 1.0)
            return images_2d_gaussian_trace(model.box, t, {}, quad);
        throw domain_error(
            "method images supports d=1 (any s) or d=2 with s=1");
    }
    throw domain_error("unknown trace method: " + config.method);
}

Table run_geometry(const RunConfig& config) {
    const HyperBox box(config.edges);
    const GeometryReport report = geometry_report(box);
    Table table{"geometry", {"m", "V_m", "W_m", "mean_breadth", "volume"}, {}};
    for (int m = 0; m <= box.dim(); ++m)
        table.rows.push_back({double(m), report.intrinsic_volumes[m],
                              report.quermassintegrals[m], report.mean_breadth,
                              report.volume});
    return table;
}

Table run_trace(const RunConfig& config) {
    const SpectralModel model(HyperBox(config.edges), config.s);
    Table table{"trace", {"t", "z"}, {}};
    for (double t : config.t_grid.points())
        table.rows.push_back({t, trace_by_method(config, model, t)});
    return table;
}

Table run_compare(const RunConfig& config) {
    const SpectralModel model(HyperBox(config.edges), config.s);
    const TruncationSpec trunc = make_trunc(config);
    Table table{"compare",
                {"t", "z_direct", "z_exact_half", "z_theta_s1", "z_asymptotic",
                 "rel_err_asym"},
                {}};
    for (double t : config.t_grid.points()) {
        const double direct = trace_direct(model, t, trunc);
        const double asym = trace_asymptotic(model, t);
        Cell exact_half, theta;
        if (model.s == 0.5) exact_half = product_exact_half(model.box.edges, t);
        if (model.s == 1.0) theta = trace_theta_s1(model.box, t);
        table.rows.push_back({t, direct, exact_half, theta, asym,
                              std::abs(direct - asym) / direct});
    }
    return table;
}

Table run_counting(const RunConfig& config) {
    const SpectralModel model(HyperBox(config.edges), config.s);
    if (!(config.e_max > 0.0))
        throw domain_error("counting: --e-max must be positive");
    const double count = double(counting_function(model, config.e_max));
    const double weyl = weyl_prediction(model, config.e_max);
    Table table{"counting", {"e_max", "count", "weyl", "ratio"}, {}};
    table.rows.push_back({config.e_max, count, weyl, count / weyl});
    return table;
}

Table run_images(const RunConfig& config) {
    if (!(config.s > 0.0) || !(config.s <= 1.0))
        throw domain_error("images: --s must lie in (0, 1]");
    if (!(config.edge > 0.0))
        throw domain_error("images: --edge must be positive");
    const QuadratureSpec quad = make_quad(config);
    Table table{"images",
                {"t", "z_images", "bulk", "image_pairs", "boundary"},
                {}};
    for (double t : config.t_grid.points()) {
        const ImageTraceReport r = image_trace(config.edge, config.s, t, {}, quad);
        table.rows.push_back({t, r.value, r.bulk, r.image_pairs, r.boundary});
    }
    return table;
}

Table run_corners(const RunConfig& config) {
    Table table{"corners", {"n", "correction"}, {}};
    if (config.ngon > 0) {
        table.rows.push_back(
            {double(config.ngon), regular_polygon_correction(config.ngon)});
    } else {
        const CornerSpec spec(config.angles);
        table.rows.push_back(
            {double(spec.angles.size()), corner_correction(spec)});
    }
    return table;
}

} // namespace

std::vector<double> TimeGrid::points() const {
    std::vector<double> pts;
    pts.reserve(count);
    if (count == 1) {
        pts.push_back(t_min);
        return pts;
    }
    for (int i = 0; i < count; ++i) {
        const double f = double(i) / double(count - 1);
        if (log_spacing)
            pts.push_back(
                std::exp(std::log(t_min) + f * (std::log(t_max) - std::log(t_min))));
        else
            pts.push_back(t_min + f * (t_max - t_min));
    }
    return pts;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        Table table;
        switch (config.command) {
            case Command::geometry: table = run_geometry(config); break;
            case Command::trace: table = run_trace(config); break;
            case Command::compare: table = run_compare(config); break;
            case Command::counting: table = run_counting(config); break;
            case Command::images: table = run_images(config); break;
            case Command::corners: table = run_corners(config); break;
        }
        std::ostringstream body;
        if (config.format == OutputFormat::csv)
            write_csv(table, body);
        else
            write_json(table, body);
        if (config.out_path.empty()) {
            out << body.str();
        } else {
            std::ofstream file(config.out_path);
            if (!file) {
                err << "error: cannot open output file " << config.out_path
                    << "\n";
                return kExitArgError;
            }
            file << body.str();
        }
        return kExitOk;
    } catch (const resource_error& e) {
        err << "numerical error: " << e.what() << "\n";
        return kExitNumericalError;
    } catch (const numerical_error& e) {
        err << "numerical error: " << e.what()
            << " (achieved error " << format_number(e.achieved_error) << ")\n";
        return kExitNumericalError;
    } catch (const domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitDomainError;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    RunConfig config;
    std::string t_grid_text;
    std::string format_text = "csv";
    std::string edges_text;
    std::string angles_text;

    CLI::App app{"Heat trace of sum_i (-d^2/dx_i^2)^s on a box, by four routes"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format_text)
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", config.out_path);
        sub->add_option("--tol", config.tol);
        sub->add_option("--max-terms", config.max_terms);
    };
    auto add_box = [&](CLI::App* sub, bool need_s) {
        sub->add_option("--edges", edges_text)->required();
        if (need_s) sub->add_option("--s", config.s)->required();
    };
    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--t-grid", t_grid_text);
    };

    CLI::App* geometry = app.add_subcommand("geometry");
    add_box(geometry, false);
    add_common(geometry);

    CLI::App* trace = app.add_subcommand("trace");
    add_box(trace, true);
    trace->add_option("--method", config.method)
        ->check(CLI::IsMember(
            {"direct", "exact-half", "theta", "asymptotic", "images"}));
    add_grid(trace);
    add_common(trace);

    CLI::App* compare = app.add_subcommand("compare");
    add_box(compare, true);
    add_grid(compare);
    add_common(compare);

    CLI::App* counting = app.add_subcommand("counting");
    add_box(counting, true);
    counting->add_option("--e-max", config.e_max)->required();
    add_common(counting);

    CLI::App* images = app.add_subcommand("images");
    images->add_option("--edge", config.edge)->required();
    images->add_option("--s", config.s)->required();
    add_grid(images);
    add_common(images);

    CLI::App* corners = app.add_subcommand("corners");
    corners->add_option("--ngon", config.ngon);
    corners->add_option("--angles", angles_text);
    add_common(corners);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return e.get_exit_code() == 0 ? kExitOk : kExitArgError;
    }

    auto parse_list = [&](const std::string& text, const char* what) {
        std::vector<double> values;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                values.push_back(std::stod(item, &used));
                if (used != item.size()) throw std::invalid_argument(item);
            } catch (const std::exception&) {
                throw domain_error(std::string(what) + ": bad number '" + item +
                                   "'");
            }
        }
        return values;
    };

    try {
        if (geometry->parsed()) config.command = Command::geometry;
        if (trace->parsed()) config.command = Command::trace;
        if (compare->parsed()) config.command = Command::compare;
        if (counting->parsed()) config.command = Command::counting;
        if (images->parsed()) config.command = Command::images;
        if (corners->parsed()) config.command = Command::corners;

        config.format =
            format_text == "json" ? OutputFormat::json : OutputFormat::csv;
        if (!edges_text.empty()) config.edges = parse_list(edges_text, "--edges");
        if (!angles_text.empty())
            config.angles = parse_list(angles_text, "--angles");
        if (corners->parsed() && config.ngon == 0 && config.angles.empty()) {
            err << "corners: need --ngon or --angles\n";
            return kExitArgError;
        }

        if (!t_grid_text.empty()) {
            std::vector<std::string> parts;
            std::stringstream ss(t_grid_text);
            std::string item;
            while (std::getline(ss, item, ':')) parts.push_back(item);
            if (parts.size() != 4) {
                err << "--t-grid expects MIN:MAX:SPACING:COUNT\n";
                return kExitArgError;
            }
            try {
                config.t_grid.t_min = std::stod(parts[0]);
                config.t_grid.t_max = std::stod(parts[1]);
                config.t_grid.count = std::stoi(parts[3]);
            } catch (const std::exception&) {
                err << "--t-grid expects MIN:MAX:SPACING:COUNT\n";
                return kExitArgError;
            }
            if (parts[2] == "log")
                config.t_grid.log_spacing = true;
            else if (parts[2] == "linear")
                config.t_grid.log_spacing = false;
            else {
                err << "--t-grid spacing must be log or linear\n";
                return kExitArgError;
            }
            if (!(config.t_grid.t_min > 0.0) ||
                !(config.t_grid.t_min < config.t_grid.t_max) ||
                config.t_grid.count < 1) {
                err << "--t-grid requires 0 < MIN < MAX and COUNT >= 1\n";
                return kExitArgError;
            }
        }
    } catch (const domain_error& e) {
        err << "argument error: " << e.what() << "\n";
        return kExitArgError;
    }

    return run(config, out, err);
}

} // namespace heatbox::cli
