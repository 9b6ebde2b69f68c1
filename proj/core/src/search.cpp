#include "narrow2/search.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <thread>

#include "narrow2/errors.hpp"
#include "narrow2/residues.hpp"

namespace narrow2 {

namespace {

struct Candidates {
  std::vector<std::uint64_t> members;  // every prime already in the space, sorted
  std::vector<std::shared_ptr<const RedeiContext>> pairs;
};

Candidates prepare(const RedeiSpace& space, RedeiCache& cache) {
  Candidates out;
  for (const auto& set : space.sets) out.members.insert(out.members.end(), set.begin(), set.end());
  std::sort(out.members.begin(), out.members.end());
  for (std::size_t i = 0; i < space.m(); ++i) {
    for (std::size_t j = i + 1; j < space.m(); ++j) {
      for (std::uint64_t p : space.sets[i]) {
        for (std::uint64_t q : space.sets[j]) out.pairs.push_back(cache.context(p, q));
      }
    }
  }
  return out;
}

bool qualifies(const Candidates& c, std::uint64_t z, const CandidateFilter& extra) {
  if (std::binary_search(c.members.begin(), c.members.end(), z)) return false;
  for (std::uint64_t p : c.members) {
    if (jacobi(z % p, p) != 1) return false;
  }
  for (const auto& ctx : c.pairs) {
    if (frobenius_bit(*ctx, z) != 0) return false;
  }
  return !extra || extra(z);
}

std::vector<char> evaluate(const Candidates& c, const std::vector<PrimeP1Mod4>& batch,
                           const CandidateFilter& extra, unsigned workers) {
  std::vector<char> pass(batch.size(), 0);
  if (workers <= 1 || batch.size() < 2 * workers) {
    for (std::size_t i = 0; i < batch.size(); ++i) pass[i] = qualifies(c, batch[i], extra);
    return pass;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < batch.size(); i += workers) {
            pass[i] = qualifies(c, batch[i], extra);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return pass;
}

void append_certificate(RedeiSpace& space, std::uint64_t z) {
  for (const auto& set : space.sets) {
    for (std::uint64_t p : set) {
      space.certificate.push_back({Condition::Kind::legendre, {p, z}, 1, true});
    }
  }
  for (std::size_t i = 0; i < space.m(); ++i) {
    for (std::size_t j = i + 1; j < space.m(); ++j) {
      for (std::uint64_t p : space.sets[i]) {
        for (std::uint64_t q : space.sets[j]) {
          space.certificate.push_back({Condition::Kind::redei, {p, q, z}, 0, true});
        }
      }
    }
  }
}

// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::vector<std::uint64_t>> products(const std::vector<std::uint64_t>& set,
                                                 std::size_t k) {
  std::vector<std::vector<std::uint64_t>> out;
  for_each_subset(set.size(), k, [&](const std::vector<std::size_t>& idx) {
    std::vector<std::uint64_t> chosen;
    for (std::size_t i : idx) chosen.push_back(set[i]);
    out.push_back(std::move(chosen));
    return true;
  });
  return out;
}

std::uint64_t product_of(const std::vector<std::uint64_t>& primes) {
  unsigned __int128 acc = 1;
  for (std::uint64_t p : primes) {
    acc *= p;
    if (acc >> 64) throw ArgumentError("entry exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

// Walks the Cartesian product of the per-coordinate choices in lexicographic
// order, stopping when visit returns false.
void for_each_choice(const std::vector<std::vector<std::vector<std::uint64_t>>>& choices,
                     const std::function<bool(const std::vector<std::uint64_t>&)>& visit) {
  const std::size_t n = choices.size();
  for (const auto& c : choices) {
    if (c.empty()) return;
  }
  std::vector<std::size_t> pos(n, 0);
  while (true) {
    std::vector<std::uint64_t> entries;
    for (std::size_t i = 0; i < n; ++i) entries.push_back(product_of(choices[i][pos[i]]));
    if (!visit(entries)) return;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++pos[i] < choices[i].size()) break;
      pos[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

void check_profile(const std::vector<unsigned>& profile, std::size_t max_entries) {
  if (profile.empty()) throw ArgumentError("profile must have at least one entry");
  if (profile.size() > max_entries) {
    throw UnsupportedDimensionError("unsupported dimension " + std::to_string(profile.size()) +
                                    ": at most " + std::to_string(max_entries) +
                                    " entries can be certified");
  }
  for (unsigned k : profile) {
    if (k == 0) throw ArgumentError("profile entries must be at least 1");
  }
}

}  // namespace

RedeiSpace extend_space(const RedeiSpace& space, std::size_t count, const SearchOptions& options,
                        RedeiCache& cache, const CandidateFilter& extra) {
  const Candidates candidates = prepare(space, cache);
  RedeiSpace out = space;
  std::vector<std::uint64_t> accepted;
  PrimeStream stream(options.limit);
  const std::size_t batch_size = std::max<std::size_t>(options.batch, 1);
  std::vector<PrimeP1Mod4> batch;
  while (accepted.size() < count) {
    batch.clear();
    if (!stream.next_batch(batch_size, batch)) break;
    const auto pass = evaluate(candidates, batch, extra, std::max(options.workers, 1u));
    for (std::size_t i = 0; i < batch.size() && accepted.size() < count; ++i) {
      if (pass[i]) accepted.push_back(batch[i]);
    }
  }
  if (accepted.size() < count) {
    throw ExhaustionError(accepted.size(), count,
                          "found " + std::to_string(accepted.size()) + " of " +
                              std::to_string(count) + " primes for coordinate " +
                              std::to_string(space.m() + 1) + " below " +
                              std::to_string(options.limit));
  }
  for (std::uint64_t z : accepted) append_certificate(out, z);
  out.sets.push_back(std::move(accepted));
  return out;
}

RedeiSpace build_space(std::size_t m, std::size_t count, const SearchOptions& options,
                       RedeiCache& cache) {
  if (m == 0) throw ArgumentError("build_space needs m >= 1");
  RedeiSpace space;
  for (std::size_t i = 0; i < m; ++i) space = extend_space(space, count, options, cache);
  return space;
}

EnumerationResult enumerate_maximal_vectors(const std::vector<unsigned>& profile, std::size_t pool,
                                            const SearchOptions& options, RedeiCache& cache,
                                            std::size_t max_vectors) {
  check_profile(profile, 3);
  if (pool == 0) throw ArgumentError("pool size must be at least 1");
  const unsigned kmax = *std::max_element(profile.begin(), profile.end());
  EnumerationResult out;
  out.space = build_space(profile.size(), kmax * pool, options, cache);
  std::vector<std::vector<std::vector<std::uint64_t>>> choices;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    choices.push_back(products(out.space.sets[i], profile[i]));
  }
  for_each_choice(choices, [&](const std::vector<std::uint64_t>& entries) {
    const AcceptableVector v = parse_acceptable(entries);
    MaximalityReport report = is_maximal(v, &cache);
    if (report.verdict) {
      out.vectors.push_back({v, std::move(report)});
    } else {
      ++out.rejected;
    }
    return max_vectors == 0 || out.vectors.size() < max_vectors;
  });
  return out;
}

RayClassSearchResult find_ray_class_vector(std::uint64_t c, const std::vector<unsigned>& profile,
                                           const SearchOptions& options, RedeiCache& cache) {
  check_profile(profile, 2);
  if (c == 0) throw ArgumentError("modulus must be positive");
  const auto c_factors = factorize(c);
  if (std::adjacent_find(c_factors.begin(), c_factors.end()) != c_factors.end()) {
    throw ArgumentError("modulus " + std::to_string(c) + " is not squarefree");
  }
  for (std::uint64_t l : c_factors) {
    if (l % 4 != 1) {
      throw ArgumentError("modulus prime " + std::to_string(l) + " = " + std::to_string(l % 4) +
                          " mod 4");
    }
  }
  const std::size_t offset = c > 1 ? 1 : 0;
  CandidateFilter unit_filter;
  if (c > 1) {
    unit_filter = [&c_factors](std::uint64_t z) {
      for (std::uint64_t l : c_factors) {
        if (!unit_is_square_mod(z, l)) return false;
      }
      return true;
    };
  }

  constexpr std::size_t kMaxPool = 64;
  for (std::size_t pool = 1; pool <= kMaxPool; pool *= 2) {
    RedeiSpace space;
    if (c > 1) space.sets.push_back(c_factors);
    for (unsigned k : profile) space = extend_space(space, k * pool, options, cache, unit_filter);

    std::vector<std::vector<std::vector<std::uint64_t>>> choices;
    for (std::size_t i = 0; i < profile.size(); ++i) {
      choices.push_back(products(space.sets[offset + i], profile[i]));
    }
    std::optional<RayClassSearchResult> found;
    for_each_choice(choices, [&](const std::vector<std::uint64_t>& entries) {
      std::vector<std::uint64_t> combined_entries;
      if (c > 1) combined_entries.push_back(c);
      combined_entries.insert(combined_entries.end(), entries.begin(), entries.end());
      const AcceptableVector combined = parse_acceptable(combined_entries);
      MaximalityReport report = is_maximal(combined, &cache);
      if (!report.verdict) return true;
      const AcceptableVector v = parse_acceptable(entries);
      UnitReductionReport units = verify_unit_reduction(v, c);
      if (!units.verdict) return true;
      found = RayClassSearchResult{c, v, combined, std::move(report), std::move(units), space, pool};
      return false;
    });
    if (found) return std::move(*found);
  }
  throw ExhaustionError(0, 1,
                        "no vector passed the unit check with pools of up to " +
                            std::to_string(kMaxPool) + " primes per coordinate");
}

}  // namespace narrow2
