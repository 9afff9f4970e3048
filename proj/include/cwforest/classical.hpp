#pragma once

#include <cstddef>
#include <vector>

#include "cwforest/forest.hpp"
#include "cwforest/rational.hpp"

// Properties of the Calkin-Wilf tree, the (1,1) tree rooted at 1.
namespace cwforest::classical {

ForestConfig calkin_wilf();

/// c(n, i).
Rational cw_vertex(const TreeAddress& addr);

/// q -> 1 / (2 floor(q) + 1 - q). Within a row this maps each entry to the
/// next one; the last entry of row n maps to 1/(n+2), the first of row n+1.
Rational newman_successor(const Rational& q);

/// Row of q, read off its continued fraction as (a0 + ... + ak) - 1.
BigInt cw_row_of(const Rational& q);

/// Row n regenerated by iterating newman_successor from 1/(n+1).
std::vector<Rational> newman_row(std::size_t n, std::size_t max_row = kDefaultMaxRow);

/// Checks c(n,1) = 1/(n+1), c(n,2^n) = n+1 and that each denominator in row n
/// equals the next numerator.
bool check_denominator_chain(std::size_t n, std::size_t max_row = kDefaultMaxRow);

}  // namespace cwforest::classical
