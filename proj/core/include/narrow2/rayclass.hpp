#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "narrow2/maximality.hpp"
#include "narrow2/units.hpp"

namespace narrow2 {

// One (d, l) check: does l split in Q(sqrt d), and is the fundamental unit of
// Q(sqrt d) a square modulo the primes above l?
struct UnitRow {
  std::uint64_t d = 0;
  std::uint64_t l = 0;
  bool split = false;
  bool evaluated = false;  // false when l does not split
  bool unit_is_square = false;
  std::uint64_t unit_residue = 0;  // image of the unit in F_l
};

struct UnitReductionReport {
  std::uint64_t c = 1;
  std::vector<std::uint64_t> subfields;  // squarefree d, subsets in (size, lex) order
  std::vector<UnitRow> rows;
  std::vector<std::uint64_t> minus_one_primes;  // l | c with -1 checked
  bool minus_one_square = true;
  bool verdict = true;
  // Only quadratic-subfield units are tested; for n >= 2 this is a necessary
  // condition on the full unit group, not a proof of it.
  bool full_unit_group = false;
};

struct UnitReductionOptions {
  bool larger_root = false;  // embed sqrt(d) as the larger root mod l
};

// Throws ArgumentError when c is not squarefree, has a prime != 1 mod 4, or
// shares a prime with v.
UnitReductionReport verify_unit_reduction(const AcceptableVector& v, std::uint64_t c,
                                          const UnitReductionOptions& options = {});

// Whether the fundamental unit of Q(sqrt d) is a nonzero square at the prime
// above l chosen by the root embedding. Requires (d/l) = 1.
bool unit_is_square_mod(std::uint64_t d, std::uint64_t l, bool larger_root = false,
                        std::uint64_t* residue_out = nullptr);

struct RayPrediction {
  std::int64_t value = 0;
  bool certified = false;  // vector certified maximal (n <= 3)
  bool attained = false;   // certified and the unit report passes
};

RayPrediction predicted_ray_dimension(const AcceptableVector& v, std::uint64_t c,
                                      RedeiCache* cache = nullptr);

// PARI/GP script computing the narrow and ray class 2-ranks of the
// multiquadratic field; see docs/formats.md. Throws UnsupportedDimensionError
// for n >= 4.
std::string emit_gp_script(const AcceptableVector& v, std::uint64_t c,
                           RedeiCache* cache = nullptr);

}  // namespace narrow2
