#pragma once

#include "narrow2/additive.hpp"
#include "narrow2/errors.hpp"
#include "narrow2/expansion.hpp"
#include "narrow2/maximality.hpp"
#include "narrow2/primes.hpp"
#include "narrow2/rayclass.hpp"
#include "narrow2/redei.hpp"
#include "narrow2/residues.hpp"
#include "narrow2/search.hpp"
#include "narrow2/serialize.hpp"
#include "narrow2/ternary.hpp"
#include "narrow2/units.hpp"
