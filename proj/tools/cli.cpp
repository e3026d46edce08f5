#include "cli.hpp"

#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "cyclab/error.hpp"
#include "cyclab/experiments.hpp"
#include "cyclab/inequalities.hpp"
#include "cyclab/wronskian.hpp"
#include "cyclab/zero_counter.hpp"

namespace cyclab::cli {

namespace {

constexpr Command kCommands[] = {Command::coeffs, Command::rolle,  Command::zeros,    Command::sweep,
                                 Command::cartan, Command::remez, Command::frobenius};

struct IoError : Error {
    using Error::Error;
};

Complex optional_point(const Json& input, const char* key) {
    return input.contains(key) ? complex_from_json(input[key]) : Complex{};
}

Json run_coeffs(const RunManifest& m, const Json& input) {
    const ExpPolyParams lambda = params_from_json(input);
    Json coeffs = Json::array();
    for (std::size_t n = 0; n <= m.max_n; ++n) coeffs.push_back(to_json(maclaurin_coeff(lambda, n)));
    return {{"params", to_json(lambda)}, {"coefficients", std::move(coeffs)}};
}

Json run_rolle(const RunManifest& m, const Json& input) {
    return to_json(rolle_check(params_from_json(input), m.truncation));
}

Json run_zeros(const RunManifest& m, const Json& input) {
    const ExpPolyParams lambda = params_from_json(input);
    const Disk disk = input.contains("disk") ? disk_from_json(input["disk"]) : Disk{};
    ZeroCountOptions opts;
    opts.oracle_truncation = m.truncation;
    return to_json(count_zeros(lambda, disk, opts));
}

Json run_sweep(const RunManifest& m, const Json& input) {
    SweepConfig cfg = sweep_config_from_json(input);
    if (m.seed) cfg.seed = *m.seed;
    if (m.workers) cfg.workers = *m.workers;
    if (m.samples) cfg.samples = *m.samples;
    if (m.epsilon) cfg.epsilon = *m.epsilon;
    if (m.delta) cfg.delta = *m.delta;
    cfg.validate();
    const SweepReport rep = cfg.base_point
                                ? empirical_cyclicity(cfg)
                                : bound_conformance_sweep(cfg.shape, cfg.samples, cfg.seed, cfg.workers, cfg.delta);
    // Worker count never changes results, so it stays out of the report.
    cfg.workers = 1;
    return {{"config", to_json(cfg)}, {"report", to_json(rep)}};
}

Json run_cartan(const RunManifest& m, const Json& input) {
    CartanConfig cfg;
    cfg.w = optional_point(input, "w");
    if (input.contains("grid")) cfg.grid = input["grid"].get<std::size_t>();
    if (input.contains("radius_factor")) cfg.radius_factor = input["radius_factor"].get<double>();
    if (m.H) cfg.H = *m.H;
    if (m.d) cfg.d = *m.d;
    if (m.R) cfg.R = *m.R;
    return to_json(cartan_verify(params_from_json(input), cfg));
}

Json run_remez(const RunManifest& m, const Json& input) {
    if (input.contains("coeffs")) {
        const auto coeffs = input["coeffs"].get<std::vector<double>>();
        const auto iv = input.at("interval").get<std::vector<double>>();
        if (iv.size() != 2) throw ParseError("interval must be [lo, hi]");
        std::vector<Interval> omega;
        for (const auto& piece : input.at("omega")) {
            const auto w = piece.get<std::vector<double>>();
            if (w.size() != 2) throw ParseError("omega pieces must be [lo, hi]");
            omega.push_back({w[0], w[1]});
        }
        return to_json(classical_remez_verify(coeffs, {iv[0], iv[1]}, omega));
    }
    RemezConfig cfg;
    const Json& iv = input.at("interval");
    if (!iv.is_array() || iv.size() != 2) throw ParseError("interval must be [a, b] with complex endpoints");
    cfg.interval = {complex_from_json(iv[0]), complex_from_json(iv[1])};
    for (const auto& piece : input.at("omega")) {
        if (!piece.is_array() || piece.size() != 2) throw ParseError("omega pieces must be [a, b]");
        cfg.omega.push_back({complex_from_json(piece[0]), complex_from_json(piece[1])});
    }
    if (input.contains("c_exponent")) cfg.c_exponent = input["c_exponent"].get<std::size_t>();
    if (input.contains("radius_factor")) cfg.radius_factor = input["radius_factor"].get<double>();
    if (m.c_hat) cfg.c_hat = *m.c_hat;
    return to_json(remez_verify(params_from_json(input), cfg, optional_point(input, "w")));
}

Json run_frobenius(const RunManifest& m, const Json& input) {
    std::vector<Jet> fs;
    for (const auto& f : input.at("functions")) fs.push_back(family_jet(params_from_json(f), m.truncation));
    if (fs.empty()) throw ParseError("\"functions\" must not be empty");
    const Jet g = family_jet(params_from_json(input.at("g")), m.truncation);
    const double rescale = input.contains("rescale") ? input["rescale"].get<double>() : 0.0;
    return to_json(frobenius_residual(fs, g, {}, rescale));
}

std::string csv_scalar(const Json& v) {
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string quoted = "\"";
        for (const char ch : s) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        return quoted + "\"";
    }
    return v.dump();
}

void flatten(const Json& v, const std::string& prefix, std::ostringstream& out) {
    if (v.is_object()) {
        for (const auto& [k, child] : v.items()) flatten(child, prefix.empty() ? k : prefix + "." + k, out);
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "." + std::to_string(i), out);
    } else {
        out << csv_scalar(Json(prefix)) << ',' << csv_scalar(v) << '\n';
    }
}

std::string extension_of(const std::filesystem::path& p) {
    std::string ext = p.extension().string();
    for (char& ch : ext) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return ext;
}

}  // namespace

Command command_from_string(const std::string& name) {
    for (const Command c : kCommands) {
        if (name == to_string(c)) return c;
    }
    throw DomainError("unknown command \"" + name + "\"");
}

const char* to_string(Command command) {
    switch (command) {
        case Command::coeffs: return "coeffs";
        case Command::rolle: return "rolle";
        case Command::zeros: return "zeros";
        case Command::sweep: return "sweep";
        case Command::cartan: return "cartan";
        case Command::remez: return "remez";
        case Command::frobenius: return "frobenius";
    }
    return "coeffs";
}

Json execute(const RunManifest& manifest, const Json& input) {
    if (!input.is_object()) throw ParseError("input document must be a JSON object");
    try {
        switch (manifest.command) {
            case Command::coeffs: return run_coeffs(manifest, input);
            case Command::rolle: return run_rolle(manifest, input);
            case Command::zeros: return run_zeros(manifest, input);
            case Command::sweep: return run_sweep(manifest, input);
            case Command::cartan: return run_cartan(manifest, input);
            case Command::remez: return run_remez(manifest, input);
            case Command::frobenius: return run_frobenius(manifest, input);
        }
    } catch (const Json::exception& e) {
        throw ParseError(e.what());
    }
    throw DomainError("unhandled command");
}

std::string render_csv(Command command, const Json& report) {
    std::ostringstream out;
    if (command == Command::sweep) {
        out << "index,hash,status,count,residual\n";
        for (const auto& r : report.at("report").at("records")) {
            out << r.at("index").dump() << ',' << r.at("hash").get<std::string>() << ','
                << r.at("status").get<std::string>() << ',' << (r.contains("count") ? r["count"].dump() : "") << ','
                << (r.contains("residual") ? r["residual"].dump() : "") << '\n';
        }
    } else if (command == Command::coeffs) {
        out << "n,re,im\n";
        const Json& c = report.at("coefficients");
        for (std::size_t n = 0; n < c.size(); ++n) out << n << ',' << c[n][0].dump() << ',' << c[n][1].dump() << '\n';
    } else {
        out << "key,value\n";
        flatten(report, "", out);
    }
    return out.str();
}

int run(const RunManifest& manifest, std::ostream& err) {
    const std::string ext = extension_of(manifest.output_path);
    if (ext != ".json" && ext != ".csv") {
        err << "error: output must end in .json or .csv: " << manifest.output_path.string() << '\n';
        return exit_usage;
    }
    try {
        std::ifstream in(manifest.input_path);
        if (!in) throw IoError("cannot open input " + manifest.input_path.string());
        Json input;
        try {
            input = Json::parse(in);
        } catch (const Json::parse_error& e) {
            throw ParseError(manifest.input_path.string() + ": " + e.what());
        }

        const Json report = execute(manifest, input);
        const std::string text = ext == ".json" ? report.dump(2) + "\n" : render_csv(manifest.command, report);

        std::ofstream out(manifest.output_path, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open output " + manifest.output_path.string());
        out << text;
        out.close();
        if (!out) throw IoError("failed writing " + manifest.output_path.string());
        return exit_ok;
    } catch (const ParseError& e) {
        err << "schema error: " << e.what() << '\n';
        return exit_schema;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return exit_io;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_numeric;
    }
}

}  // namespace cyclab::cli
