#pragma once

// File formats and machine-readable reports.
//
//   GridFunction  {"r":int,"n":int,"values":[[re,im],...]}   index order
//                 {"r":int,"n":int,"ones":[pointIndex,...]}  Boolean shorthand
//   Spectrum      {"r":int,"n":int,"coeffs":[[re,im],...]}
//   VertexSet     {"r":int,"n":int,"vertices":[[c1,...,cn],...]}
//
// Floating-point values survive a save/load round trip bit-exactly. Writers
// build the whole payload in memory, write to a temporary file, and rename,
// so failures never leave partial artifacts behind.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dictatorlab/stability.hpp"

namespace dictatorlab {

GridFunction load_grid_function(const std::filesystem::path& path,
                                std::int64_t size_cap = GridShape::kDefaultSizeCap);
void save_grid_function(const GridFunction& f, const std::filesystem::path& path);

Spectrum load_spectrum(const std::filesystem::path& path,
                       std::int64_t size_cap = GridShape::kDefaultSizeCap);
void save_spectrum(const Spectrum& spec, const std::filesystem::path& path);

VertexSet load_vertex_set(const std::filesystem::path& path,
                          std::int64_t size_cap = GridShape::kDefaultSizeCap);
void save_vertex_set(const VertexSet& vs, const std::filesystem::path& path);

std::string report_to_json(const StabilityReport& report);

/// CSV "level,weight" table.
std::string levels_csv(const LevelWeights& lw);

/// One verification trial; k and seed are -1 when the set came from a file
/// rather than the perturbation generator.
struct VerifyTrial {
    int r = 0;
    int n = 0;
    std::int64_t k = -1;
    std::int64_t seed = -1;
    CoordValue source;  // dictator the generator perturbed (corpus mode only)
    Rational epsilon;
    double tail_weight = 0.0;
    double tail_bound = 0.0;
    CoordValue recovered;
    Rational symdiff;
    double theorem_bound = 0.0;
    bool oracle_agrees = false;
};

/// Perturbation sweep over k = 0..k_max and the given seed range. The seed
/// picks the source dictator (coord = 1 + seed mod n, value = (seed/n) mod r)
/// and drives the removal draw, so every trial is reproducible from its row.
std::vector<VerifyTrial> run_perturbation_corpus(const GridShape& shape, std::int64_t k_max,
                                                 int seed_count, std::uint64_t base_seed);

VerifyTrial verify_one_set(const IndependentSet& j);

/// Frozen column order:
/// r,n,k,seed,epsilon,tail_weight,tail_bound,i0,j,symdiff,theorem_bound,oracle_agrees
std::string verify_csv(const std::vector<VerifyTrial>& rows, const std::string& provenance);

/// "%.17g" rendering used by every CSV writer, so equal doubles always
/// produce equal bytes.
std::string format_double(double v);

void write_text_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace dictatorlab
