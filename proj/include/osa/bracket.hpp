// Lie bracket and the triangular-like decomposition.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "osa/core.hpp"

namespace osa {

enum class TriangularClass { Lowering, Diagonal, Raising };

const char* class_name(TriangularClass c);

/// sigma with an empty index replaced by its equivalent combination whose
/// pattern windows are all nonempty; other generators are returned as is.
Element expand_extended_sigma(const Generator& g, const Params& p);

/// Bracket of two generators as a combination of generators.
Element bracket(const Generator& a, const Generator& b, const Params& p);
Element bracket(const Element& a, const Element& b, const Params& p);

TriangularClass classify(const Generator& g);

struct RootData {
  std::vector<std::pair<Generator, int>> pairs;
};

std::optional<RootData> is_root_vector(const Element& e, const Params& p);

/// Throws std::invalid_argument unless both generators are Diagonal.
bool cartan_commutes(const Generator& g1, const Generator& g2, const Params& p);

}  // namespace osa
