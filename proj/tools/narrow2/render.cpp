#include "render.hpp"

#include <iomanip>
#include <sstream>

#include "narrow2/errors.hpp"

namespace narrow2::cli {

namespace {

template <typename Range>
std::string join(const Range& values, const char* sep = " ") {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << sep;
    out << v;
    first = false;
  }
  return out.str();
}

const char* flag(bool b) { return b ? "true" : "false"; }

std::string seconds_text(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << s;
  return out.str();
}

void add_meta(Json& j, const SearchMeta& meta) {
  j["limit"] = meta.limit;
  if (meta.seconds) j["wall_time_seconds"] = *meta.seconds;
}

void text_meta(std::ostringstream& out, const SearchMeta& meta) {
  out << "limit " << meta.limit << "\n";
  if (meta.seconds) out << "wall_time " << seconds_text(*meta.seconds) << "\n";
}

void text_transcript(std::ostringstream& out, const std::vector<Condition>& conditions) {
  for (const auto& c : conditions) {
    out << kind_name(c.kind) << " " << join(c.args) << " " << c.value << " "
        << (c.passed ? "ok" : "fail") << "\n";
  }
}

void text_units(std::ostringstream& out, const UnitReductionReport& u) {
  out << "unit_verdict " << flag(u.verdict) << "\n";
  for (const auto& row : u.rows) {
    out << "unit d=" << row.d << " l=" << row.l << " split=" << flag(row.split)
        << " square=" << flag(row.unit_is_square) << "\n";
  }
  for (std::uint64_t l : u.minus_one_primes) {
    out << "unit d=-1 l=" << l << " square=" << flag(u.minus_one_square) << "\n";
  }
  if (!u.full_unit_group) out << "unit_scope quadratic subfields only\n";
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw ArgumentError("unknown format " + name);
}

std::string render_legendre(Format f, const Integer& a, std::uint64_t p, int value) {
  switch (f) {
    case Format::json:
      return dump(Json{{"kind", "legendre"}, {"args", {a.get_str(), std::to_string(p)}},
                       {"value", value}});
    case Format::csv:
      return "kind,a,p,value\nlegendre," + a.get_str() + "," + std::to_string(p) + "," +
             std::to_string(value) + "\n";
    case Format::text:
      break;
  }
  return std::to_string(value) + "\n";
}

std::string render_redei(Format f, const RedeiContext& ctx, std::uint64_t c, int value,
                         bool verbose) {
  const auto& s = ctx.solution;
  std::vector<std::string> quartic;
  for (const auto& q : ctx.quartic) quartic.push_back(q.get_str());
  switch (f) {
    case Format::json:
      return dump(Json{{"kind", "redei"}, {"args", {ctx.a, ctx.b, c}}, {"value", value},
                       {"context", to_json(ctx)}});
    case Format::csv:
      return "kind,a,b,c,value,x,y,z\nredei," + std::to_string(ctx.a) + "," +
             std::to_string(ctx.b) + "," + std::to_string(c) + "," + std::to_string(value) + "," +
             s.x.get_str() + "," + s.y.get_str() + "," + s.z.get_str() + "\n";
    case Format::text:
      break;
  }
  std::ostringstream out;
  out << value << "\n";
  if (verbose) {
    out << "solution " << s.x << " " << s.y << " " << s.z << "\n";
    out << "quartic " << join(quartic) << "\n";
  }
  return out.str();
}

std::string render_unit(Format f, const QuadraticUnit& u) {
  switch (f) {
    case Format::json:
      return dump(to_json(u));
    case Format::csv:
      return "d,u,v,half,norm\n" + std::to_string(u.d) + "," + u.u.get_str() + "," +
             u.v.get_str() + "," + flag(u.half) + "," + std::to_string(u.norm) + "\n";
    case Format::text:
      break;
  }
  std::ostringstream out;
  out << "d " << u.d << "\nu " << u.u << "\nv " << u.v << "\nhalf " << flag(u.half) << "\nnorm "
      << u.norm << "\n";
  return out.str();
}

std::string render_maximal(Format f, const MaximalOutput& m, bool verbose) {
  const auto& r = m.report;
  if (f == Format::json) {
    Json j{{"vector", to_json(m.vector)}, {"report", to_json(r)}};
    if (m.c) {
      j["ray"] = Json{{"c", *m.c},
                      {"bound", m.ray_bound},
                      {"prediction", to_json(m.prediction)},
                      {"units", to_json(m.units)}};
    }
    return dump(j);
  }
  if (f == Format::csv) {
    std::ostringstream out;
    out << "entries,verdict,n,omega_total,bound,failed_conditions";
    if (m.c) out << ",c,ray_bound,ray_attained,unit_verdict";
    out << "\n" << join(m.vector.entries, ";") << "," << flag(r.verdict) << "," << r.n << ","
        << r.omega_total << "," << r.bound << "," << r.failed_conditions.size();
    if (m.c) {
      out << "," << *m.c << "," << m.ray_bound << "," << flag(m.prediction.attained) << ","
          << flag(m.units.verdict);
    }
    out << "\n";
    return out.str();
  }
  std::ostringstream out;
  out << "verdict " << flag(r.verdict) << "\n";
  out << "n " << r.n << "\n";
  out << "omega " << r.omega_total << "\n";
  out << "bound " << r.bound << "\n";
  out << "failed " << r.failed_conditions.size() << "\n";
  text_transcript(out, verbose ? r.transcript : r.failed_conditions);
  if (m.c) {
    out << "c " << *m.c << "\n";
    out << "ray_bound " << m.ray_bound << "\n";
    out << "ray_attained " << flag(m.prediction.attained) << "\n";
    text_units(out, m.units);
  }
  return out.str();
}

std::string render_space(Format f, const RedeiSpace& space, const SearchMeta& meta, bool verbose) {
  if (f == Format::json) {
    Json j{{"space", to_json(space)}};
    add_meta(j, meta);
    return dump(j);
  }
  std::ostringstream out;
  if (f == Format::csv) {
    out << "coordinate,prime\n";
    for (std::size_t i = 0; i < space.m(); ++i) {
      for (std::uint64_t p : space.sets[i]) out << i + 1 << "," << p << "\n";
    }
    return out.str();
  }
  for (std::size_t i = 0; i < space.m(); ++i) out << "X" << i + 1 << " " << join(space.sets[i]) << "\n";
  out << "conditions " << space.certificate.size() << "\n";
  text_meta(out, meta);
  if (verbose) text_transcript(out, space.certificate);
  return out.str();
}

std::string render_triples(Format f, const std::vector<unsigned>& profile, std::size_t pool,
                           const EnumerationResult& result, const SearchMeta& meta, bool verbose) {
  if (f == Format::json) {
    Json j{{"profile", profile}, {"pool", pool}, {"result", to_json(result)}};
    add_meta(j, meta);
    return dump(j);
  }
  std::ostringstream out;
  if (f == Format::csv) {
    out << "entries,omega_total,bound,verdict\n";
    for (const auto& mv : result.vectors) {
      out << join(mv.vector.entries, ";") << "," << mv.report.omega_total << ","
          << mv.report.bound << "," << flag(mv.report.verdict) << "\n";
    }
    return out.str();
  }
  for (std::size_t i = 0; i < result.space.m(); ++i) {
    out << "X" << i + 1 << " " << join(result.space.sets[i]) << "\n";
  }
  for (const auto& mv : result.vectors) {
    out << "vector " << join(mv.vector.entries) << " bound " << mv.report.bound << "\n";
    if (verbose) text_transcript(out, mv.report.transcript);
  }
  out << "maximal " << result.vectors.size() << "\n";
  out << "rejected " << result.rejected << "\n";
  text_meta(out, meta);
  return out.str();
}

std::string render_rayclass(Format f, const std::vector<unsigned>& profile,
                            const RayClassSearchResult& r, const SearchMeta& meta, bool verbose) {
  if (f == Format::json) {
    Json j{{"profile", profile}, {"result", to_json(r)}};
    add_meta(j, meta);
    return dump(j);
  }
  std::ostringstream out;
  if (f == Format::csv) {
    out << "c,entries,combined,verdict,bound,unit_verdict\n";
    out << r.c << "," << join(r.vector.entries, ";") << "," << join(r.combined.entries, ";") << ","
        << flag(r.report.verdict) << "," << r.report.bound << "," << flag(r.units.verdict) << "\n";
    return out.str();
  }
  out << "vector " << join(r.vector.entries) << "\n";
  out << "combined " << join(r.combined.entries) << "\n";
  out << "verdict " << flag(r.report.verdict) << "\n";
  out << "bound " << r.report.bound << "\n";
  text_units(out, r.units);
  text_meta(out, meta);
  if (verbose) text_transcript(out, r.report.transcript);
  return out.str();
}

std::string render_validation(Format f, const ValidationResult& r) {
  if (f == Format::json) return dump(to_json(r));
  std::ostringstream out;
  if (f == Format::csv) {
    out << "kind,subset_mask,detail\n";
    for (const auto& v : r.violations) out << v.kind << "," << v.subset << ",\"" << v.detail << "\"\n";
    return out.str();
  }
  out << "valid " << flag(r.valid) << "\n";
  out << "violations " << r.violation_count << "\n";
  for (const auto& v : r.violations) out << v.kind << " " << v.detail << "\n";
  return out.str();
}

std::string render_shrinking(Format f, const ShrinkingResult& r) {
  if (f == Format::json) return dump(to_json(r));
  if (f == Format::csv) {
    return "lhs,rhs,delta,a,holds\n" + r.lhs.get_str() + "," + r.rhs.get_str() + "," +
           r.delta.get_str() + "," + r.a.get_str() + "," + flag(r.holds) + "\n";
  }
  // mpq prints integers without a denominator; keep the fraction form.
  auto frac = [](const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  };
  return "lhs " + frac(r.lhs) + " rhs " + frac(r.rhs) + " holds " + flag(r.holds) + "\n";
}

std::string render_classes(Format f, const AdditiveSystem& s, const std::vector<ClassesRow>& rows) {
  if (f == Format::json) {
    Json list = Json::array();
    for (const auto& row : rows) list.push_back(Json{{"x", row.x}, {"result", to_json(row.result)}});
    return dump(list);
  }
  std::ostringstream out;
  if (f == Format::csv) out << "x,v_size,blocks,w_size,is_equivalence\n";
  const auto& last = s.ground_sets.back();
  for (const auto& row : rows) {
    const auto& e = row.result;
    if (f == Format::csv) {
      out << join(row.x, ";") << "," << e.v.size() << "," << e.blocks.size() << "," << e.w_size
          << "," << flag(e.is_equivalence) << "\n";
      continue;
    }
    out << "x (" << join(row.x, ", ") << ") |V| " << e.v.size() << " |W| " << e.w_size
        << " equivalence " << flag(e.is_equivalence) << " blocks";
    for (const auto& block : e.blocks) {
      std::vector<std::string> names;
      for (std::size_t a : block) names.push_back(last[a]);
      out << " {" << join(names, ",") << "}";
    }
    out << "\n";
    for (const auto& v : e.violations) out << "  " << v << "\n";
  }
  return out.str();
}

}  // namespace narrow2::cli
