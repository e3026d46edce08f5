#include "cyclab/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <utility>

#include "cyclab/error.hpp"

namespace cyclab {

namespace {

// Runs a decoder, translating library exceptions into ParseError.
template <class F>
auto decode(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const Json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    } catch (const DomainError& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    } catch (const NumericError& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw ParseError(std::string("expected an object holding \"") + key + "\"");
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
    return *it;
}

Json real(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

double real_from(const Json& j) {
    if (j.is_null()) return std::numeric_limits<double>::infinity();
    if (!j.is_number()) throw ParseError("expected a number");
    return j.get<double>();
}

std::size_t count_from(const Json& j) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw ParseError("expected a nonnegative integer");
    return j.get<std::size_t>();
}

Json order_json(const Order& o) { return o ? Json(*o) : Json(-1); }

Order order_from(const Json& j) {
    if (!j.is_number_integer()) throw ParseError("expected an integer order");
    const auto v = j.get<std::int64_t>();
    if (v == -1) return std::nullopt;
    if (v < 0) throw ParseError("order must be nonnegative or -1");
    return static_cast<std::size_t>(v);
}

std::vector<Complex> complex_rows(const Json& j, std::size_t rows, std::size_t cols, const char* key) {
    if (!j.is_array() || j.size() != rows) {
        throw ParseError(std::string("\"") + key + "\" must hold " + std::to_string(rows) + " rows");
    }
    std::vector<Complex> out;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != cols) {
            throw ParseError(std::string("each row of \"") + key + "\" must hold " + std::to_string(cols) +
                             " entries");
        }
        for (const auto& z : row) out.push_back(complex_from_json(z));
    }
    return out;
}

Json complex_matrix(std::span<const Complex> flat, std::size_t cols) {
    Json rows = Json::array();
    for (std::size_t start = 0; start < flat.size(); start += cols) {
        Json row = Json::array();
        for (std::size_t i = 0; i < cols; ++i) row.push_back(to_json(flat[start + i]));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Json to_json(Complex z) { return Json::array({real(z.real()), real(z.imag())}); }

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError("complex numbers are [re, im] pairs of numbers");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const FamilyShape& shape) { return {{"m", shape.m}, {"p", shape.p}, {"q", shape.q}}; }

FamilyShape shape_from_json(const Json& j) {
    return decode("family shape", [&] {
        FamilyShape s{count_from(field(j, "m")), count_from(field(j, "p")), count_from(field(j, "q"))};
        s.validate();
        return s;
    });
}

Json to_json(const ExpPolyParams& lambda) {
    Json j = to_json(lambda.shape());
    j["c"] = complex_matrix(lambda.c_all(), lambda.shape().p + 1);
    j["d"] = complex_matrix(lambda.d_all(), lambda.shape().q);
    return j;
}

ExpPolyParams params_from_json(const Json& j) {
    return decode("parameters", [&] {
        const FamilyShape s = shape_from_json(j);
        return ExpPolyParams(s, complex_rows(field(j, "c"), s.m, s.p + 1, "c"),
                             complex_rows(field(j, "d"), s.m, s.q, "d"));
    });
}

Json to_json(const Jet& jet) {
    Json j = Json::array();
    for (const Complex z : jet.coeffs()) j.push_back(to_json(z));
    return j;
}

Jet jet_from_json(const Json& j) {
    return decode("jet", [&] {
        if (!j.is_array()) throw ParseError("a jet is an array of [re, im] pairs");
        std::vector<Complex> c;
        for (const auto& z : j) c.push_back(complex_from_json(z));
        return Jet(std::move(c));
    });
}

Json to_json(const WronskianTable& table) {
    Json j = to_json(table.shape);
    Json entries = Json::object();
    for (const auto& [mask, order] : table.entries) entries[std::to_string(mask)] = order_json(order);
    j["entries"] = std::move(entries);
    return j;
}

WronskianTable table_from_json(const Json& j) {
    return decode("Wronskian table", [&] {
        WronskianTable t;
        t.shape = shape_from_json(j);
        const Json& entries = field(j, "entries");
        if (!entries.is_object()) throw ParseError("\"entries\" must be an object");
        for (const auto& [key, value] : entries.items()) {
            std::size_t used = 0;
            const unsigned long mask = std::stoul(key, &used);
            if (used != key.size() || mask == 0 || mask > t.full_set()) {
                throw ParseError("invalid subset mask \"" + key + "\"");
            }
            t.entries[static_cast<std::uint32_t>(mask)] = order_from(value);
        }
        return t;
    });
}

Json to_json(const Disk& disk) { return {{"center", to_json(disk.center)}, {"radius", real(disk.radius)}}; }

Disk disk_from_json(const Json& j) {
    return decode("disk", [&] {
        Disk d{complex_from_json(field(j, "center")), real_from(field(j, "radius"))};
        d.validate();
        return d;
    });
}

Json to_json(const ZeroCountReport& rep) {
    Json roots = Json::array();
    for (const auto& r : rep.oracle_roots) roots.push_back({{"root", to_json(r.root)}, {"multiplicity", r.multiplicity}});
    Json j = {{"disk", to_json(rep.disk)},   {"count", rep.count}, {"residual", real(rep.quadrature_residual)},
              {"nodes", rep.nodes},          {"roots", std::move(roots)}, {"agreed", rep.agreed}};
    if (!rep.oracle_note.empty()) j["oracle_note"] = rep.oracle_note;
    return j;
}

ZeroCountReport zero_report_from_json(const Json& j) {
    return decode("zero count report", [&] {
        ZeroCountReport rep;
        rep.disk = disk_from_json(field(j, "disk"));
        rep.count = count_from(field(j, "count"));
        rep.quadrature_residual = real_from(field(j, "residual"));
        rep.agreed = field(j, "agreed").get<bool>();
        if (j.contains("nodes")) rep.nodes = count_from(j["nodes"]);
        for (const auto& r : field(j, "roots")) {
            rep.oracle_roots.push_back({complex_from_json(field(r, "root")), count_from(field(r, "multiplicity"))});
        }
        if (j.contains("oracle_note")) rep.oracle_note = j["oracle_note"].get<std::string>();
        return rep;
    });
}

Json to_json(const InequalityReport& rep) {
    Json j = {{"lhs", real(rep.lhs)},
              {"rhs", real(rep.rhs)},
              {"margin", real(rep.margin)},
              {"satisfied", rep.satisfied}};
    if (rep.empirical_exponent) j["empirical_exponent"] = real(*rep.empirical_exponent);
    if (rep.empirical_constant) j["empirical_constant"] = real(*rep.empirical_constant);
    if (rep.witness) {
        Json w = Json::array();
        for (const auto& d : *rep.witness) w.push_back(to_json(d));
        j["witness"] = std::move(w);
    }
    j["note"] = rep.note;
    return j;
}

InequalityReport inequality_report_from_json(const Json& j) {
    return decode("inequality report", [&] {
        InequalityReport rep;
        rep.lhs = real_from(field(j, "lhs"));
        rep.rhs = real_from(field(j, "rhs"));
        rep.margin = real_from(field(j, "margin"));
        rep.satisfied = field(j, "satisfied").get<bool>();
        if (j.contains("empirical_exponent")) rep.empirical_exponent = real_from(j["empirical_exponent"]);
        if (j.contains("empirical_constant")) rep.empirical_constant = real_from(j["empirical_constant"]);
        if (j.contains("witness")) {
            std::vector<Disk> w;
            for (const auto& d : j["witness"]) {
                // Shrunk exclusion disks may have radius 0 when there are no zeros.
                w.push_back({complex_from_json(field(d, "center")), real_from(field(d, "radius"))});
            }
            rep.witness = std::move(w);
        }
        if (j.contains("note")) rep.note = j["note"].get<std::string>();
        return rep;
    });
}

Json to_json(const RolleReport& rep) {
    return {{"ord_sum", order_json(rep.ord_sum)},
            {"bound", rep.bound ? Json(*rep.bound) : Json(nullptr)},
            {"satisfied", rep.satisfied},
            {"vacuous", rep.vacuous},
            {"table", to_json(rep.table)}};
}

RolleReport rolle_report_from_json(const Json& j) {
    return decode("Rolle report", [&] {
        RolleReport rep;
        rep.ord_sum = order_from(field(j, "ord_sum"));
        const Json& b = field(j, "bound");
        if (!b.is_null()) rep.bound = count_from(b);
        rep.satisfied = field(j, "satisfied").get<bool>();
        rep.vacuous = field(j, "vacuous").get<bool>();
        rep.table = table_from_json(field(j, "table"));
        return rep;
    });
}

Json to_json(const FrobeniusReport& rep) {
    return {{"residual", real(rep.residual)},
            {"scale", real(rep.scale)},
            {"rescale", real(rep.rescale)},
            {"orders_lost", rep.orders_lost},
            {"window", rep.window},
            {"pole_encountered", rep.pole_encountered},
            {"wronskian_orders", rep.wronskian_orders}};
}

FrobeniusReport frobenius_report_from_json(const Json& j) {
    return decode("Frobenius report", [&] {
        FrobeniusReport rep;
        rep.residual = real_from(field(j, "residual"));
        rep.scale = real_from(field(j, "scale"));
        rep.rescale = real_from(field(j, "rescale"));
        rep.orders_lost = count_from(field(j, "orders_lost"));
        rep.window = count_from(field(j, "window"));
        rep.pole_encountered = field(j, "pole_encountered").get<bool>();
        for (const auto& o : field(j, "wronskian_orders")) rep.wronskian_orders.push_back(count_from(o));
        return rep;
    });
}

Json to_json(const SweepConfig& cfg) {
    Json j = to_json(cfg.shape);
    if (cfg.base_point) j["base_point"] = to_json(*cfg.base_point);
    j["epsilon"] = real(cfg.epsilon);
    j["delta"] = real(cfg.delta);
    j["samples"] = cfg.samples;
    j["seed"] = cfg.seed;
    j["workers"] = cfg.workers;
    j["with_oracle"] = cfg.with_oracle;
    return j;
}

SweepConfig sweep_config_from_json(const Json& j) {
    return decode("sweep config", [&] {
        SweepConfig cfg;
        cfg.shape = shape_from_json(j);
        if (j.contains("base_point")) cfg.base_point = params_from_json(j["base_point"]);
        if (j.contains("epsilon")) cfg.epsilon = real_from(j["epsilon"]);
        if (j.contains("delta")) cfg.delta = real_from(j["delta"]);
        if (j.contains("samples")) cfg.samples = count_from(j["samples"]);
        if (j.contains("seed")) {
            if (!j["seed"].is_number_unsigned()) throw ParseError("seed must be a nonnegative integer");
            cfg.seed = j["seed"].get<std::uint64_t>();
        }
        if (j.contains("workers")) cfg.workers = count_from(j["workers"]);
        if (j.contains("with_oracle")) cfg.with_oracle = j["with_oracle"].get<bool>();
        cfg.validate();
        return cfg;
    });
}

const char* to_string(SampleStatus status) {
    switch (status) {
        case SampleStatus::counted: return "counted";
        case SampleStatus::rejected_center: return "rejected_center";
        case SampleStatus::rejected_near_center: return "rejected_near_center";
        case SampleStatus::failed: return "failed";
    }
    return "failed";
}

SampleStatus sample_status_from_string(const std::string& s) {
    for (const auto st : {SampleStatus::counted, SampleStatus::rejected_center, SampleStatus::rejected_near_center,
                          SampleStatus::failed}) {
        if (s == to_string(st)) return st;
    }
    throw ParseError("unknown sample status \"" + s + "\"");
}

std::string hash_string(std::uint64_t hash) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

Json to_json(const SweepReport& rep) {
    Json histogram = Json::object();
    for (const auto& [count, n] : rep.histogram) histogram[std::to_string(count)] = n;
    Json violating = Json::array();
    for (const auto& v : rep.violating) violating.push_back(to_json(v));
    Json records = Json::array();
    for (const auto& r : rep.records) {
        Json row = {{"index", r.index}, {"hash", hash_string(r.param_hash)}, {"status", to_string(r.status)}};
        if (r.status == SampleStatus::counted) {
            row["count"] = r.count;
            row["residual"] = real(r.residual);
            row["agreed"] = r.agreed;
        }
        if (!r.message.empty()) row["message"] = r.message;
        records.push_back(std::move(row));
    }
    Json j = {{"shape", to_json(rep.shape)},
              {"epsilon", real(rep.epsilon)},
              {"delta", real(rep.delta)},
              {"seed", rep.seed},
              {"bound", rep.bound},
              {"max_count", rep.max_count},
              {"histogram", std::move(histogram)},
              {"counted", rep.counted},
              {"rejected", rep.rejected},
              {"failed", rep.failed},
              {"violations", rep.violations},
              {"violating", std::move(violating)},
              {"records", std::move(records)}};
    if (rep.argmax) j["argmax"] = to_json(*rep.argmax);
    return j;
}

SweepReport sweep_report_from_json(const Json& j) {
    return decode("sweep report", [&] {
        SweepReport rep;
        rep.shape = shape_from_json(field(j, "shape"));
        rep.epsilon = real_from(field(j, "epsilon"));
        rep.delta = real_from(field(j, "delta"));
        rep.seed = field(j, "seed").get<std::uint64_t>();
        rep.bound = count_from(field(j, "bound"));
        rep.max_count = count_from(field(j, "max_count"));
        if (j.contains("argmax")) rep.argmax = params_from_json(j["argmax"]);
        for (const auto& [key, n] : field(j, "histogram").items()) rep.histogram[std::stoul(key)] = count_from(n);
        rep.counted = count_from(field(j, "counted"));
        rep.rejected = count_from(field(j, "rejected"));
        rep.failed = count_from(field(j, "failed"));
        rep.violations = count_from(field(j, "violations"));
        for (const auto& v : field(j, "violating")) rep.violating.push_back(params_from_json(v));
        for (const auto& r : field(j, "records")) {
            SampleRecord rec;
            rec.index = count_from(field(r, "index"));
            const std::string hash = field(r, "hash").get<std::string>();
            std::size_t used = 0;
            rec.param_hash = std::stoull(hash, &used, 16);
            if (used != hash.size()) throw ParseError("invalid parameter hash \"" + hash + "\"");
            rec.status = sample_status_from_string(field(r, "status").get<std::string>());
            if (r.contains("count")) rec.count = count_from(r["count"]);
            if (r.contains("residual")) rec.residual = real_from(r["residual"]);
            if (r.contains("agreed")) rec.agreed = r["agreed"].get<bool>();
            if (r.contains("message")) rec.message = r["message"].get<std::string>();
            rep.records.push_back(std::move(rec));
        }
        return rep;
    });
}

}  // namespace cyclab
