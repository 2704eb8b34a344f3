#pragma once

#include "termrank/classops.hpp"
#include "termrank/matrix.hpp"

// Brute-force reference implementations for small inputs. Deliberately
// naive: these certify the production algorithms and share no code with
// them beyond the core types (the production modules never call back here).
namespace termrank::oracle {

// Exhaustive over per-column choices (a row holding a 1, or nothing).
// Requires n <= 12.
int brute_rank(const BinaryMatrix& a, int t);

// Minimum of t*|E| + #(columns with a 1 outside E) over all row subsets E.
// Requires m <= 20.
long long brute_cover(const BinaryMatrix& a, int t);

// Maximum of brute_rank over every member of the class.
long long brute_max_rank(const DegreePair& pair, int t,
                         long long limit = classops::kDefaultEnumLimit);

// Whether some outer-class member dominates some inner-class member
// entrywise. False whenever either class is empty.
bool brute_nested_pair(const DegreePair& outer, const DegreePair& inner,
                       long long limit = classops::kDefaultEnumLimit);

}  // namespace termrank::oracle
