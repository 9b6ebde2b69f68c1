#include "narrow2/serialize.hpp"

#include <bit>

#include "narrow2/errors.hpp"
#include "narrow2/expansion.hpp"

namespace narrow2 {

namespace {

std::string str(const Integer& v) { return v.get_str(); }
std::string str(const mpq_class& v) { return v.get_str(); }

Json subset_members(std::uint32_t subset) {
  Json out = Json::array();
  for (unsigned i = 0; subset >> i; ++i) {
    if ((subset >> i) & 1) out.push_back(i + 1);
  }
  return out;
}

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw FormatError(where, what);
}

const Json& field(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) bad(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(where + "." + key, "missing");
  return *it;
}

std::uint64_t unsigned_at(const Json& j, const std::string& where, std::uint64_t max) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    bad(where, "expected a non-negative integer");
  }
  const auto v = j.get<std::uint64_t>();
  if (v > max) bad(where, "value " + std::to_string(v) + " exceeds " + std::to_string(max));
  return v;
}

}  // namespace

Json to_json(const TernarySolution& s) {
  return Json{{"a", s.a}, {"b", s.b}, {"x", str(s.x)}, {"y", str(s.y)}, {"z", str(s.z)}};
}

Json to_json(const RedeiContext& ctx) {
  Json quartic = Json::array();
  for (const auto& q : ctx.quartic) quartic.push_back(str(q));
  return Json{{"a", ctx.a}, {"b", ctx.b}, {"solution", to_json(ctx.solution)},
              {"quartic", quartic}};
}

Json to_json(const QuadraticUnit& u) {
  return Json{{"d", u.d}, {"u", str(u.u)}, {"v", str(u.v)}, {"half", u.half}, {"norm", u.norm}};
}

Json to_json(const Condition& c) {
  return Json{{"kind", kind_name(c.kind)}, {"args", c.args}, {"value", c.value},
              {"passed", c.passed}};
}

Json to_json(const AcceptableVector& v) {
  return Json{{"entries", v.entries}, {"factors", v.factors}};
}

Json to_json(const MaximalityReport& r) {
  Json transcript = Json::array();
  for (const auto& c : r.transcript) transcript.push_back(to_json(c));
  Json failed = Json::array();
  for (const auto& c : r.failed_conditions) failed.push_back(to_json(c));
  return Json{{"verdict", r.verdict},  {"n", r.n},
              {"omega_total", r.omega_total}, {"bound", r.bound},
              {"transcript", transcript}, {"failed_conditions", failed}};
}

Json to_json(const UnitReductionReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"d", row.d},
                        {"l", row.l},
                        {"split", row.split},
                        {"evaluated", row.evaluated},
                        {"unit_is_square", row.unit_is_square},
                        {"unit_residue", row.unit_residue}});
  }
  return Json{{"c", r.c},
              {"subfields", r.subfields},
              {"rows", rows},
              {"minus_one_primes", r.minus_one_primes},
              {"minus_one_square", r.minus_one_square},
              {"full_unit_group", r.full_unit_group},
              {"verdict", r.verdict}};
}

Json to_json(const RayPrediction& p) {
  return Json{{"value", p.value}, {"certified", p.certified}, {"attained", p.attained}};
}

Json to_json(const RedeiSpace& s) {
  Json cert = Json::array();
  for (const auto& c : s.certificate) cert.push_back(to_json(c));
  return Json{{"m", s.m()},
              {"sets", s.sets},
              {"certificate", cert},
              {"generator_sign", "totally positive (x > 0)"}};
}

Json to_json(const EnumerationResult& r) {
  Json vectors = Json::array();
  for (const auto& mv : r.vectors) {
    vectors.push_back(Json{{"vector", to_json(mv.vector)}, {"report", to_json(mv.report)}});
  }
  return Json{{"space", to_json(r.space)}, {"vectors", vectors}, {"rejected", r.rejected}};
}

Json to_json(const RayClassSearchResult& r) {
  return Json{{"c", r.c},
              {"vector", to_json(r.vector)},
              {"combined", to_json(r.combined)},
              {"report", to_json(r.report)},
              {"units", to_json(r.units)},
              {"space", to_json(r.space)},
              {"pool", r.pool}};
}

Json to_json(const ValidationResult& r) {
  Json list = Json::array();
  for (const auto& v : r.violations) {
    list.push_back(Json{{"kind", v.kind},
                        {"subset", subset_members(v.subset)},
                        {"points", v.points},
                        {"detail", v.detail}});
  }
  return Json{{"valid", r.valid}, {"violation_count", r.violation_count}, {"violations", list}};
}

Json to_json(const ShrinkingResult& r) {
  return Json{{"lhs", str(r.lhs)}, {"rhs", str(r.rhs)}, {"delta", str(r.delta)},
              {"a", str(r.a)},     {"holds", r.holds}};
}

Json to_json(const EquivalenceResult& r) {
  return Json{{"v", r.v},
              {"blocks", r.blocks},
              {"w_size", r.w_size},
              {"is_equivalence", r.is_equivalence},
              {"violations", r.violations}};
}

Json additive_to_json(const AdditiveSystem& s) {
  Json subsets = Json::array();
  for (std::uint32_t S : subsets_in_order(s.d)) {
    Json c = Json::array();
    for (std::uint8_t bit : s.c[S]) c.push_back(static_cast<int>(bit));
    subsets.push_back(Json{{"subset", subset_members(S)},
                           {"dim", s.value_dims[S]},
                           {"f", s.f[S]},
                           {"c", c}});
  }
  return Json{{"c_empty_default", s.c_empty_default},
              {"d", s.d},
              {"ground_sets", s.ground_sets},
              {"subsets", subsets}};
}

AdditiveSystem additive_from_json(const Json& j) {
  AdditiveSystem s;
  s.d = static_cast<unsigned>(unsigned_at(field(j, "d", "$"), "$.d", 4));
  const Json& sets = field(j, "ground_sets", "$");
  if (!sets.is_array() || sets.size() != s.d) bad("$.ground_sets", "expected d arrays");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::string where = "$.ground_sets[" + std::to_string(i) + "]";
    if (!sets[i].is_array() || sets[i].empty()) bad(where, "expected a nonempty array");
    if (sets[i].size() > 64) bad(where, "ground set too large");
    s.ground_sets.emplace_back();
    for (std::size_t e = 0; e < sets[i].size(); ++e) {
      if (!sets[i][e].is_string()) bad(where + "[" + std::to_string(e) + "]", "expected a string");
      s.ground_sets.back().push_back(sets[i][e].get<std::string>());
    }
  }
  const std::uint32_t count = 1u << s.d;
  s.value_dims.assign(count, 0);
  s.f.assign(count, {});
  s.c.assign(count, {});
  std::vector<bool> seen(count, false), has_c(count, false);

  const Json& subsets = field(j, "subsets", "$");
  if (!subsets.is_array() || subsets.size() != count) {
    bad("$.subsets", "expected " + std::to_string(count) + " entries");
  }
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    const std::string where = "$.subsets[" + std::to_string(k) + "]";
    const Json& entry = subsets[k];
    const Json& members = field(entry, "subset", where);
    if (!members.is_array()) bad(where + ".subset", "expected an array");
    std::uint32_t mask = 0;
    for (std::size_t m = 0; m < members.size(); ++m) {
      const auto i = unsigned_at(members[m], where + ".subset[" + std::to_string(m) + "]", s.d);
      if (i == 0) bad(where + ".subset[" + std::to_string(m) + "]", "coordinates are 1-based");
      if (mask & (1u << (i - 1))) bad(where + ".subset", "repeated coordinate");
      mask |= 1u << (i - 1);
    }
    if (seen[mask]) bad(where + ".subset", "duplicate subset");
    seen[mask] = true;
    s.value_dims[mask] =
        static_cast<unsigned>(unsigned_at(field(entry, "dim", where), where + ".dim", 31));
    const std::size_t size = s.ambient_size(mask);
    const Json& f = field(entry, "f", where);
    if (!f.is_array() || f.size() != size) {
      bad(where + ".f", "expected " + std::to_string(size) + " values");
    }
    s.f[mask].reserve(size);
    for (std::size_t x = 0; x < size; ++x) {
      s.f[mask].push_back(static_cast<std::uint32_t>(
          unsigned_at(f[x], where + ".f[" + std::to_string(x) + "]", 0xffffffffu)));
    }
    if (entry.contains("c")) {
      const Json& c = entry["c"];
      if (!c.is_array() || c.size() != size) {
        bad(where + ".c", "expected " + std::to_string(size) + " flags");
      }
      for (std::size_t x = 0; x < size; ++x) {
        const std::string at = where + ".c[" + std::to_string(x) + "]";
        if (c[x].is_boolean()) {
          s.c[mask].push_back(c[x].get<bool>() ? 1 : 0);
        } else {
          s.c[mask].push_back(static_cast<std::uint8_t>(unsigned_at(c[x], at, 1)));
        }
      }
      has_c[mask] = true;
    }
  }
  bool any_missing = false, any_present = false;
  for (std::uint32_t S = 1; S < count; ++S) {
    (has_c[S] ? any_present : any_missing) = true;
  }
  if (any_missing && any_present) {
    bad("$.subsets", "\"c\" must be given for every nonempty subset or for none");
  }
  s.c_empty_default = !has_c[0];
  if (j.contains("c_empty_default")) {
    if (!j["c_empty_default"].is_boolean()) bad("$.c_empty_default", "expected a boolean");
    s.c_empty_default = j["c_empty_default"].get<bool>() || !has_c[0];
  }
  if (!has_c[0]) s.c[0].assign(s.ambient_size(0), 1);
  if (any_missing) derive_membership(s);
  return s;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace narrow2
