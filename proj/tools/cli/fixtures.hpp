#pragma once

// Named collections and synthetic generators shared by the CLI, the property
// suites and the tests.

#include <memory>
#include <vector>

#include "noisygen/generators.hpp"

namespace noisygen::fixtures {

/// L1 = B_0 + {(1,0),(1,1)}, L2 = B_1 + {(0,0),(0,1)}.
Collection c_ex();

/// M1 = B_0 + F, M2 = B_1 + F with F = {(2,0),(2,1),(2,2),(2,3)}.
Collection c_sh();

/// The single language L1 of c_ex.
Collection singleton_l1();

Collection columns();

/// D_0 <= D_1 <= D_2. Level j adds two languages B_{2j} + F_j and
/// B_{2j+1} + F_j, where F_j holds the first 2j+2 elements of column 6+j.
/// Each level raises NC_1 by two: 4, 6, 8.
std::vector<Collection> chain_gadgets();

/// On a history of length n: (100 + n - 1, 0), a fresh column per prefix.
std::unique_ptr<Generator> fresh_column_generator();

/// On a history: (c, 1) for the smallest column c the history touches.
std::unique_ptr<Generator> inside_generator();

}  // namespace noisygen::fixtures
