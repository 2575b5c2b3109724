#include "dictatorlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dictatorlab {

namespace {

using nlohmann::json;

json parse_file(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec) || ec)
        throw IoError("cannot open " + path.string());
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

GridShape shape_from_json(const json& j, std::int64_t size_cap, const std::string& where) {
    if (!j.is_object()) throw ValidationError(where + ": expected a JSON object");
    if (!j.contains("r") || !j["r"].is_number_integer())
        throw ValidationError(where + ": missing integer field \"r\"");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ValidationError(where + ": missing integer field \"n\"");
    const std::int64_t r = j["r"].get<std::int64_t>();
    const std::int64_t n = j["n"].get<std::int64_t>();
    if (n < 1) throw ValidationError(where + ": dimension must be at least 1");
    if (r < 2 || r > size_cap) throw ValidationError(where + ": radix must be at least 2");
    return GridShape(static_cast<int>(r), static_cast<int>(n), size_cap);
}

std::vector<Complex> complex_array(const json& arr, std::int64_t expected, const std::string& where) {
    if (!arr.is_array() || static_cast<std::int64_t>(arr.size()) != expected)
        throw ValidationError(where + ": expected an array of " + std::to_string(expected) +
                              " [re,im] pairs");
    std::vector<Complex> out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw ValidationError(where + ": entries must be [re,im] number pairs");
        out.emplace_back(v[0].get<double>(), v[1].get<double>());
    }
    return out;
}

json complex_to_json(std::span<const Complex> values) {
    json arr = json::array();
    for (const Complex& v : values) arr.push_back({v.real(), v.imag()});
    return arr;
}

json rational_to_json(const Rational& q) {
    return json{{"num", q.num}, {"den", q.den}, {"value", q.value()}};
}

}  // namespace

GridFunction load_grid_function(const std::filesystem::path& path, std::int64_t size_cap) {
    const json j = parse_file(path);
    const GridShape shape = shape_from_json(j, size_cap, path.string());
    const bool has_values = j.contains("values");
    const bool has_ones = j.contains("ones");
    if (has_values == has_ones)
        throw ValidationError(path.string() + ": need exactly one of \"values\" or \"ones\"");
    if (has_values)
        return GridFunction(shape, complex_array(j["values"], shape.size(), path.string()));

    if (!j["ones"].is_array())
        throw ValidationError(path.string() + ": \"ones\" must be an array of point indices");
    std::vector<Complex> values(static_cast<std::size_t>(shape.size()), Complex{0.0, 0.0});
    for (const auto& v : j["ones"]) {
        if (!v.is_number_integer())
            throw ValidationError(path.string() + ": \"ones\" entries must be integers");
        const std::int64_t idx = v.get<std::int64_t>();
        if (idx < 0 || idx >= shape.size())
            throw ValidationError(path.string() + ": point index " + std::to_string(idx) +
                                  " outside [0," + std::to_string(shape.size() - 1) + "]");
        values[static_cast<std::size_t>(idx)] = Complex{1.0, 0.0};
    }
    return GridFunction(shape, std::move(values));
}

void save_grid_function(const GridFunction& f, const std::filesystem::path& path) {
    json j;
    j["r"] = f.shape().r();
    j["n"] = f.shape().n();
    j["values"] = complex_to_json(f.values());
    write_text_atomic(path, j.dump() + "\n");
}

Spectrum load_spectrum(const std::filesystem::path& path, std::int64_t size_cap) {
    const json j = parse_file(path);
    const GridShape shape = shape_from_json(j, size_cap, path.string());
    if (!j.contains("coeffs"))
        throw ValidationError(path.string() + ": missing \"coeffs\"");
    return Spectrum(shape, complex_array(j["coeffs"], shape.size(), path.string()));
}

void save_spectrum(const Spectrum& spec, const std::filesystem::path& path) {
    json j;
    j["r"] = spec.shape().r();
    j["n"] = spec.shape().n();
    j["coeffs"] = complex_to_json(spec.coeffs());
    write_text_atomic(path, j.dump() + "\n");
}

VertexSet load_vertex_set(const std::filesystem::path& path, std::int64_t size_cap) {
    const json j = parse_file(path);
    const GridShape shape = shape_from_json(j, size_cap, path.string());
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw ValidationError(path.string() + ": missing array field \"vertices\"");
    std::vector<std::int64_t> members;
    members.reserve(j["vertices"].size());
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || static_cast<int>(v.size()) != shape.n())
            throw ValidationError(path.string() + ": vertices must be arrays of " +
                                  std::to_string(shape.n()) + " residues");
        Point p;
        p.coords.reserve(v.size());
        for (const auto& c : v) {
            if (!c.is_number_integer())
                throw ValidationError(path.string() + ": coordinates must be integers");
            p.coords.push_back(c.get<int>());
        }
        members.push_back(index_of(p, shape));  // range-checks each residue
    }
    return VertexSet(shape, std::move(members));
}

void save_vertex_set(const VertexSet& vs, const std::filesystem::path& path) {
    json j;
    j["r"] = vs.shape().r();
    j["n"] = vs.shape().n();
    json verts = json::array();
    for (std::int64_t m : vs.members()) {
        const Point p = point_of(m, vs.shape());
        verts.push_back(p.coords);
    }
    j["vertices"] = std::move(verts);
    write_text_atomic(path, j.dump() + "\n");
}

std::string report_to_json(const StabilityReport& report) {
    json rec;
    rec["i0"] = report.recovery.i0;
    rec["g"] = complex_to_json(report.recovery.g);
    json g1 = json::array();
    for (double v : report.recovery.g1) g1.push_back(static_cast<int>(v));
    rec["g1"] = std::move(g1);
    rec["dictator"] = {{"coord", report.recovery.dictator.coord},
                       {"value", report.recovery.dictator.value}};
    rec["residual_g"] = report.recovery.residual_g;
    rec["residual_g1"] = report.recovery.residual_g1;
    rec["degenerate"] = report.recovery.degenerate;

    json j;
    j["r"] = report.r;
    j["n"] = report.n;
    j["epsilon"] = rational_to_json(report.epsilon);
    j["tail_weight"] = report.tail_weight;
    j["tail_bound"] = report.tail_bound;
    j["level1_weight"] = report.level1_weight;
    j["a_sq_sorted"] = report.a_sq_sorted;
    j["recovery"] = std::move(rec);
    j["symdiff"] = rational_to_json(report.symdiff);
    j["theorem_bound"] = report.theorem_bound;
    j["hypotheses"] = {{"r_ge_20", report.hypotheses.r_ge_20},
                       {"eps_lt_1e_minus_9", report.hypotheses.eps_lt_1e_minus_9},
                       {"level1_le_inv_r", report.hypotheses.level1_le_inv_r},
                       {"eps_lt_inv_1e8_r", report.hypotheses.eps_lt_inv_1e8_r}};
    j["oracle_agrees"] = report.oracle_agrees;
    return j.dump(2) + "\n";
}

std::string levels_csv(const LevelWeights& lw) {
    std::string out = "level,weight\n";
    for (std::size_t k = 0; k < lw.weights.size(); ++k)
        out += std::to_string(k) + "," + format_double(lw.weights[k]) + "\n";
    return out;
}

std::vector<VerifyTrial> run_perturbation_corpus(const GridShape& shape, std::int64_t k_max,
                                                 int seed_count, std::uint64_t base_seed) {
    if (k_max < 0 || k_max > shape.size() / shape.r())
        throw ValidationError("k_max outside [0," + std::to_string(shape.size() / shape.r()) + "]");
    if (seed_count < 1) throw ValidationError("seed count must be positive");

    std::vector<VerifyTrial> rows;
    rows.reserve(static_cast<std::size_t>((k_max + 1) * seed_count));
    for (std::int64_t k = 0; k <= k_max; ++k) {
        for (int s = 0; s < seed_count; ++s) {
            const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(s);
            const int coord = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(shape.n()));
            const int value = static_cast<int>((seed / static_cast<std::uint64_t>(shape.n())) %
                                               static_cast<std::uint64_t>(shape.r()));
            const DictatorSet source(shape, coord, value);
            const IndependentSet j = perturb(source, k, seed);

            VerifyTrial trial = verify_one_set(j);
            trial.k = k;
            trial.seed = static_cast<std::int64_t>(seed);
            trial.source = CoordValue{coord, value};
            rows.push_back(std::move(trial));
        }
    }
    return rows;
}

VerifyTrial verify_one_set(const IndependentSet& j) {
    const auto [dict, report] = recover_independent_set(j);
    VerifyTrial trial;
    trial.r = report.r;
    trial.n = report.n;
    trial.epsilon = report.epsilon;
    trial.tail_weight = report.tail_weight;
    trial.tail_bound = report.tail_bound;
    trial.recovered = CoordValue{dict.coord(), dict.value()};
    trial.symdiff = report.symdiff;
    trial.theorem_bound = report.theorem_bound;
    trial.oracle_agrees = report.oracle_agrees;
    return trial;
}

std::string verify_csv(const std::vector<VerifyTrial>& rows, const std::string& provenance) {
    std::string out;
    if (!provenance.empty()) out += "# " + provenance + "\n";
    out += "r,n,k,seed,epsilon,tail_weight,tail_bound,i0,j,symdiff,theorem_bound,oracle_agrees\n";
    for (const VerifyTrial& t : rows) {
        out += std::to_string(t.r) + "," + std::to_string(t.n) + "," + std::to_string(t.k) + "," +
               std::to_string(t.seed) + "," + format_double(t.epsilon.value()) + "," +
               format_double(t.tail_weight) + "," + format_double(t.tail_bound) + "," +
               std::to_string(t.recovered.coord) + "," + std::to_string(t.recovered.value) + "," +
               format_double(t.symdiff.value()) + "," + format_double(t.theorem_bound) + "," +
               (t.oracle_agrees ? "1" : "0") + "\n";
    }
    return out;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw IoError("failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot move output into place at " + path.string());
    }
}

}  // namespace dictatorlab
