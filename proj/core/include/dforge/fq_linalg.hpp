#pragma once

#include <vector>

#include "dforge/fq.hpp"

namespace dforge {

using FqVector = std::vector<FqField::Value>;

/// Basis of {a : Σ a_j columns[j] = 0}, each vector of length columns.size().
/// Columns may have different lengths (missing entries are zero). The basis
/// is in reduced form: each vector has a 1 at a distinct free index.
std::vector<FqVector> fq_nullspace(const FqField& F, const std::vector<FqVector>& columns);

}  // namespace dforge
