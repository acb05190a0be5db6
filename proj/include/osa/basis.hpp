// Membership in the bases B0 and B4 and rewriting into them.
#pragma once

#include <vector>

#include "osa/core.hpp"

namespace osa {

enum class BasisTag { B0, B4 };

struct CanonicalElement {
  BasisTag basis = BasisTag::B0;
  Element terms;
  bool operator==(const CanonicalElement&) const = default;
};

bool in_B0(const Generator& g);
bool in_B4(const Generator& g);

Element to_B0(const Element& e, const Params& p);
Element to_B4(const Element& e, const Params& p);
CanonicalElement canonical(const Element& e, BasisTag basis, const Params& p);

/// Number of nested rewrite steps to_B4 needs for g (0 for B4 generators).
int to_B4_depth(const Generator& g, const Params& p);

/// Every generator with #upper + #lower <= max_size.
std::vector<Generator> all_generators(const Params& p, int max_size);

/// Exact rank test of the chain-action matrix of all B0 generators of size
/// <= max_size on chains of body length <= max_len.
bool independence_check_B0(int max_size, int max_len, const Params& p);

}  // namespace osa
