#include "narrow2/additive.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "narrow2/errors.hpp"

namespace narrow2 {

namespace {

std::vector<std::size_t> radices(const AdditiveSystem& s, std::uint32_t subset) {
  std::vector<std::size_t> r(s.d);
  for (unsigned i = 0; i < s.d; ++i) {
    const std::size_t n = s.set_size(i);
    r[i] = ((subset >> i) & 1) ? n * n : n;
  }
  return r;
}

std::vector<std::size_t> weights(const std::vector<std::size_t>& radix) {
  std::vector<std::size_t> w(radix.size(), 1);
  for (std::size_t i = radix.size(); i-- > 1;) w[i - 1] = w[i] * radix[i];
  return w;
}

std::string point_text(const AdditiveSystem& s, std::uint32_t subset, std::size_t index) {
  const auto codes = s.decode(subset, index);
  std::string out = "(";
  for (unsigned i = 0; i < s.d; ++i) {
    if (i) out += ", ";
    const std::size_t n = s.set_size(i);
    if ((subset >> i) & 1) {
      out += "(" + s.ground_sets[i][codes[i] / n] + ", " + s.ground_sets[i][codes[i] % n] + ")";
    } else {
      out += s.ground_sets[i][codes[i]];
    }
  }
  return out + ")";
}

std::string subset_text(std::uint32_t subset) {
  std::string out = "{";
  bool first = true;
  for (unsigned i = 0; subset >> i; ++i) {
    if (!((subset >> i) & 1)) continue;
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

// Whether every specialization of x in C_S lies in C_{S - j}^acc.
bool closure_holds(const AdditiveSystem& s, std::uint32_t subset, std::size_t index) {
  auto codes = s.decode(subset, index);
  for (unsigned j = 0; j < s.d; ++j) {
    if (!((subset >> j) & 1)) continue;
    const std::size_t n = s.set_size(j);
    const std::size_t pair = codes[j];
    const std::uint32_t smaller = subset & ~(1u << j);
    for (std::size_t e : {pair / n, pair % n}) {
      codes[j] = e;
      if (!s.accepted(smaller, s.encode(smaller, codes))) return false;
    }
    codes[j] = pair;
  }
  return true;
}

bool parity(std::uint64_t w, std::uint64_t r) { return std::popcount(w & r) & 1; }

mpq_class rational_pow(const mpq_class& base, unsigned long exp) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exp);
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace

std::size_t AdditiveSystem::ambient_size(std::uint32_t subset) const {
  std::size_t total = 1;
  for (std::size_t r : radices(*this, subset)) total *= r;
  return total;
}

std::vector<std::size_t> AdditiveSystem::decode(std::uint32_t subset, std::size_t index) const {
  const auto radix = radices(*this, subset);
  std::vector<std::size_t> codes(d);
  for (std::size_t i = d; i-- > 0;) {
    codes[i] = index % radix[i];
    index /= radix[i];
  }
  return codes;
}

std::size_t AdditiveSystem::encode(std::uint32_t subset, const std::vector<std::size_t>& codes) const {
  const auto radix = radices(*this, subset);
  std::size_t index = 0;
  for (unsigned i = 0; i < d; ++i) index = index * radix[i] + codes[i];
  return index;
}

void derive_membership(AdditiveSystem& system) {
  const std::uint32_t count = 1u << system.d;
  system.c.resize(count);
  if (system.c[0].size() != system.ambient_size(0)) {
    system.c[0].assign(system.ambient_size(0), 1);
    system.c_empty_default = true;
  }
  std::vector<std::uint32_t> order(count);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  for (std::uint32_t s : order) {
    if (s == 0) continue;
    const std::size_t size = system.ambient_size(s);
    system.c[s].assign(size, 0);
    for (std::size_t x = 0; x < size; ++x) system.c[s][x] = closure_holds(system, s, x) ? 1 : 0;
  }
}

ValidationResult validate(const AdditiveSystem& s, std::size_t keep) {
  ValidationResult out;
  auto report = [&](Violation v) {
    out.valid = false;
    ++out.violation_count;
    if (out.violations.size() < keep) out.violations.push_back(std::move(v));
  };

  const std::uint32_t count = 1u << s.d;
  bool shape_ok = s.ground_sets.size() == s.d && s.value_dims.size() == count &&
                  s.f.size() == count && s.c.size() == count;
  for (unsigned i = 0; shape_ok && i < s.d; ++i) shape_ok = !s.ground_sets[i].empty();
  for (std::uint32_t S = 0; shape_ok && S < count; ++S) {
    shape_ok = s.f[S].size() == s.ambient_size(S) && s.c[S].size() == s.ambient_size(S) &&
               s.value_dims[S] <= 31;
  }
  if (!shape_ok) {
    report({"shape", 0, {}, "tables do not match the ground sets"});
    return out;
  }

  for (std::uint32_t S = 0; S < count; ++S) {
    const std::uint64_t limit = std::uint64_t{1} << s.value_dims[S];
    for (std::size_t x = 0; x < s.f[S].size(); ++x) {
      if (s.f[S][x] >= limit) {
        report({"range", S, {x},
                "F_" + subset_text(S) + point_text(s, S, x) + " lies outside A_" + subset_text(S)});
      }
    }
  }

  for (std::uint32_t S = 1; S < count; ++S) {
    for (std::size_t x = 0; x < s.c[S].size(); ++x) {
      const bool expected = closure_holds(s, S, x);
      if (expected != static_cast<bool>(s.c[S][x])) {
        report({"closure", S, {x},
                std::string("C_") + subset_text(S) + " membership of " + point_text(s, S, x) +
                    (expected ? " missing" : " not implied by its specializations")});
      }
    }
  }

  for (std::uint32_t S = 1; S < count; ++S) {
    const auto radix = radices(s, S);
    const auto w = weights(radix);
    const std::size_t size = s.ambient_size(S);
    for (unsigned j = 0; j < s.d; ++j) {
      if (!((S >> j) & 1)) continue;
      const std::size_t n = s.set_size(j);
      for (std::size_t base = 0; base < size; ++base) {
        if ((base / w[j]) % radix[j] != 0) continue;
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            const std::size_t x1 = base + (a * n + b) * w[j];
            if (!s.c[S][x1]) continue;
            for (std::size_t c = 0; c < n; ++c) {
              const std::size_t x2 = base + (b * n + c) * w[j];
              const std::size_t x3 = base + (a * n + c) * w[j];
              if (!s.c[S][x2] || !s.c[S][x3]) continue;
              if ((s.f[S][x1] ^ s.f[S][x2]) != s.f[S][x3]) {
                report({"additivity", S, {x1, x2, x3},
                        "F_" + subset_text(S) + " fails on " + point_text(s, S, x1) + ", " +
                            point_text(s, S, x2) + ", " + point_text(s, S, x3) +
                            " (coordinate " + std::to_string(j + 1) + ")"});
              }
            }
          }
        }
      }
    }
  }
  return out;
}

mpq_class density_empty(const AdditiveSystem& s) {
  const std::size_t size = s.ambient_size(0);
  std::size_t hits = 0;
  for (std::size_t x = 0; x < size; ++x) hits += s.accepted(0, x) ? 1 : 0;
  mpq_class out(static_cast<unsigned long>(hits), static_cast<unsigned long>(size));
  out.canonicalize();
  return out;
}

ShrinkingResult verify_shrinking(const AdditiveSystem& s) {
  const auto check = validate(s, 1);
  if (!check.valid) {
    throw ValidationError("additive system is invalid: " + check.violations.front().detail);
  }
  ShrinkingResult out;
  const std::uint32_t full = s.full();
  const std::size_t size = s.ambient_size(full);
  std::size_t hits = 0;
  for (std::size_t x = 0; x < size; ++x) hits += s.accepted(full, x) ? 1 : 0;
  out.lhs = mpq_class(static_cast<unsigned long>(hits), static_cast<unsigned long>(size));
  out.lhs.canonicalize();
  out.delta = density_empty(s);
  const unsigned max_dim = *std::max_element(s.value_dims.begin(), s.value_dims.end());
  mpz_ui_pow_ui(out.a.get_mpz_t(), 2, max_dim);
  unsigned long three_d = 1;
  for (unsigned i = 0; i < s.d; ++i) three_d *= 3;
  mpz_class a_power;
  mpz_pow_ui(a_power.get_mpz_t(), out.a.get_mpz_t(), three_d);
  out.rhs = rational_pow(out.delta, 1ul << s.d) / mpq_class(a_power);
  out.rhs.canonicalize();
  out.holds = out.lhs >= out.rhs;
  return out;
}

EquivalenceResult equivalence_structure(const AdditiveSystem& s, const std::vector<std::size_t>& x) {
  if (s.d == 0) throw ArgumentError("equivalence_structure needs d >= 1");
  if (x.size() != s.d - 1) {
    throw ArgumentError("equivalence_structure: expected " + std::to_string(s.d - 1) +
                        " pair coordinates, got " + std::to_string(x.size()));
  }
  for (unsigned i = 0; i + 1 < s.d; ++i) {
    if (x[i] >= s.set_size(i) * s.set_size(i)) {
      throw ArgumentError("equivalence_structure: coordinate " + std::to_string(i + 1) +
                          " is out of range");
    }
  }
  const unsigned last = s.d - 1;
  const std::size_t n = s.set_size(last);
  const std::uint32_t lower = s.full() & ~(1u << last);
  const std::uint32_t full = s.full();

  EquivalenceResult out;
  std::vector<std::size_t> codes = x;
  codes.push_back(0);
  std::vector<bool> in_v(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    codes[last] = a;
    if (s.accepted(lower, s.encode(lower, codes))) {
      in_v[a] = true;
      out.v.push_back(a);
    }
  }
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      codes[last] = a * n + b;
      rel[a][b] = s.accepted(full, s.encode(full, codes));
      out.w_size += rel[a][b] ? 1 : 0;
    }
  }
  const auto& label = s.ground_sets[last];
  auto fail = [&](const std::string& text) {
    out.is_equivalence = false;
    out.violations.push_back(text);
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (rel[a][b] && (!in_v[a] || !in_v[b])) {
        fail("support: (" + label[a] + ", " + label[b] + ") in W(x) but not in V(x) x V(x)");
      }
    }
  }
  for (std::size_t a : out.v) {
    if (!rel[a][a]) fail("reflexivity: (" + label[a] + ", " + label[a] + ") not in W(x)");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (rel[a][b] && !rel[b][a]) {
        fail("symmetry: (" + label[a] + ", " + label[b] + ") in W(x) but (" + label[b] + ", " +
             label[a] + ") is not");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!rel[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (rel[b][c] && !rel[a][c]) {
          fail("transitivity: (" + label[a] + ", " + label[b] + ") and (" + label[b] + ", " +
               label[c] + ") in W(x) but (" + label[a] + ", " + label[c] + ") is not");
        }
      }
    }
  }

  // Connected components of W on V. They are the classes when W is an
  // equivalence relation.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t a : out.v) {
    for (std::size_t b : out.v) {
      if (rel[a][b]) {
        const std::size_t ra = find(a), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    }
  }
  std::vector<std::vector<std::size_t>> by_root(n);
  for (std::size_t a : out.v) by_root[find(a)].push_back(a);
  for (auto& block : by_root) {
    if (!block.empty()) out.blocks.push_back(std::move(block));
  }
  return out;
}

AdditiveSystem random_bilinear_system(std::uint64_t seed, unsigned d,
                                      const std::vector<std::size_t>& sizes, unsigned max_dim) {
  if (sizes.size() != d) {
    throw ArgumentError("random_bilinear_system: expected " + std::to_string(d) + " set sizes");
  }
  if (d > 4) throw ArgumentError("random_bilinear_system: d must be at most 4");
  if (max_dim > 16) throw ArgumentError("random_bilinear_system: value dimension too large");
  for (std::size_t n : sizes) {
    if (n == 0 || n > 16) throw ArgumentError("random_bilinear_system: set sizes must be 1..16");
  }
  constexpr unsigned kLabelBits = 3;
  constexpr std::uint64_t kLabelMask = (1u << kLabelBits) - 1;
  std::mt19937_64 rng(seed);

  AdditiveSystem s;
  s.d = d;
  std::vector<std::vector<std::uint64_t>> labels(d);
  s.ground_sets.resize(d);
  for (unsigned i = 0; i < d; ++i) {
    for (std::size_t e = 0; e < sizes[i]; ++e) {
      s.ground_sets[i].push_back("x" + std::to_string(i + 1) + "_" + std::to_string(e));
      labels[i].push_back(rng() & kLabelMask);
    }
  }
  const std::uint32_t count = 1u << d;
  s.value_dims.resize(count);
  s.f.resize(count);
  s.c.resize(count);
  for (std::uint32_t S = 0; S < count; ++S) {
    s.value_dims[S] = static_cast<unsigned>(rng() % (max_dim + 1));
    const std::size_t size = s.ambient_size(S);
    s.f[S].assign(size, 0);
    for (unsigned bit = 0; bit < s.value_dims[S]; ++bit) {
      // Two terms, each a product of one linear form per paired coordinate
      // and an affine form in the unpaired labels.
      struct Term {
        std::vector<std::uint64_t> forms;
        std::uint64_t constant;
      };
      Term terms[2];
      for (auto& t : terms) {
        for (unsigned i = 0; i < d; ++i) t.forms.push_back(rng() & kLabelMask);
        t.constant = rng() & 1;
      }
      std::uint64_t cross_u = rng() & kLabelMask, cross_v = rng() & kLabelMask;
      for (std::size_t x = 0; x < size; ++x) {
        const auto codes = s.decode(S, x);
        int value = 0;
        for (const auto& t : terms) {
          int product = 1;
          int affine = static_cast<int>(t.constant);
          for (unsigned i = 0; i < d; ++i) {
            const std::size_t n = sizes[i];
            if ((S >> i) & 1) {
              const std::uint64_t diff = labels[i][codes[i] / n] ^ labels[i][codes[i] % n];
              product &= parity(t.forms[i], diff);
            } else {
              affine ^= parity(t.forms[i], labels[i][codes[i]]);
            }
          }
          value ^= product & affine;
        }
        if (S == 0 && d >= 2) {
          value ^= parity(cross_u, labels[0][codes[0]]) & parity(cross_v, labels[1][codes[1]]);
        }
        if (value) s.f[S][x] |= 1u << bit;
      }
    }
  }
  s.c[0].assign(s.ambient_size(0), 1);
  s.c_empty_default = true;
  derive_membership(s);
  return s;
}

AdditiveSystem zero_system(const std::vector<std::size_t>& sizes, unsigned dim) {
  AdditiveSystem s;
  s.d = static_cast<unsigned>(sizes.size());
  for (unsigned i = 0; i < s.d; ++i) {
    if (sizes[i] == 0) throw ArgumentError("zero_system: empty ground set");
    s.ground_sets.emplace_back();
    for (std::size_t e = 0; e < sizes[i]; ++e) {
      s.ground_sets[i].push_back("x" + std::to_string(i + 1) + "_" + std::to_string(e));
    }
  }
  const std::uint32_t count = 1u << s.d;
  s.value_dims.assign(count, dim);
  s.f.resize(count);
  s.c.resize(count);
  for (std::uint32_t S = 0; S < count; ++S) {
    s.f[S].assign(s.ambient_size(S), 0);
    s.c[S].assign(s.ambient_size(S), 1);
  }
  return s;
}

}  // namespace narrow2
