#pragma once

#include <optional>
#include <string>
#include <vector>

#include "narrow2/serialize.hpp"

namespace narrow2::cli {

enum class Format { json, csv, text };

Format parse_format(const std::string& name);

struct MaximalOutput {
  AcceptableVector vector;
  MaximalityReport report;
  std::optional<std::uint64_t> c;
  std::int64_t ray_bound = 0;
  RayPrediction prediction;
  UnitReductionReport units;
};

std::string render_legendre(Format f, const Integer& a, std::uint64_t p, int value);
std::string render_redei(Format f, const RedeiContext& ctx, std::uint64_t c, int value,
                         bool verbose);
std::string render_unit(Format f, const QuadraticUnit& u);
std::string render_maximal(Format f, const MaximalOutput& out, bool verbose);

// Search results carry the limit and, with --timing, the wall time.
struct SearchMeta {
  std::uint64_t limit = 0;
  std::optional<double> seconds;
};

std::string render_space(Format f, const RedeiSpace& space, const SearchMeta& meta, bool verbose);
std::string render_triples(Format f, const std::vector<unsigned>& profile, std::size_t pool,
                           const EnumerationResult& result, const SearchMeta& meta, bool verbose);
std::string render_rayclass(Format f, const std::vector<unsigned>& profile,
                            const RayClassSearchResult& result, const SearchMeta& meta,
                            bool verbose);

std::string render_validation(Format f, const ValidationResult& r);
std::string render_shrinking(Format f, const ShrinkingResult& r);

struct ClassesRow {
  std::vector<std::size_t> x;
  EquivalenceResult result;
};
std::string render_classes(Format f, const AdditiveSystem& s, const std::vector<ClassesRow>& rows);

}  // namespace narrow2::cli
