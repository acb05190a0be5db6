// The defining representation on open chains, its tensor powers, Young
// symmetrizers and the chain inner product.
#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "osa/core.hpp"
#include "osa/weights.hpp"

namespace osa {

/// phi-bar^{a} (x) s^{body} (x) phi^{b}
struct Chain {
  int a = 1;
  Seq body;
  int b = 1;
  bool operator==(const Chain&) const = default;
};

/// Orders chains by the word body.a.b (length first, then lexicographic).
std::strong_ordering chain_compare(const Chain& x, const Chain& y);

struct ChainLess {
  bool operator()(const Chain& x, const Chain& y) const { return chain_compare(x, y) < 0; }
};

struct ChainTupleLess {
  bool operator()(const std::vector<Chain>& x, const std::vector<Chain>& y) const;
};

using ChainState = std::map<Chain, Q, ChainLess>;

struct TensorState {
  int arity = 1;
  std::map<std::vector<Chain>, Q, ChainTupleLess> terms;

  bool empty() const { return terms.empty(); }
  bool operator==(const TensorState&) const = default;
};

std::string render(const Chain& c);
std::string render(const ChainState& s);
std::string render(const TensorState& t);

void check_params(const Chain& c, const Params& p);

ChainState chain_state(const Chain& c, const Q& coeff = 1);
TensorState tensor_state(const std::vector<Chain>& tuple, const Q& coeff = 1);

/// Every chain with body length <= max_len, ascending.
std::vector<Chain> enumerate_chains(const Params& p, int max_len);

/// Action of a single generator on a single chain.
ChainState act(const Generator& g, const Chain& c);
ChainState act(const Element& e, const ChainState& psi);
ChainState act(const Element& e, const ChainState& psi, const Params& p);

/// Leibniz action on d-fold tensors.
TensorState act_tensor(const Element& e, const TensorState& psi);

/// Unnormalized Young symmetrizer of the row-major canonical tableau:
/// column antisymmetrizer applied after the row symmetrizer.
TensorState young_project(const TensorState& psi, const Partition& gamma);

Q inner_chain(const ChainState& a, const ChainState& b);
Q inner_chain(const TensorState& a, const TensorState& b);

/// True iff a and b act identically on every chain of body length <= max_len.
bool equal_on_chains(const Element& a, const Element& b, int max_len, const Params& p);

/// Thrown when the Young symmetrizer annihilates the seed tensor.
class ZeroVectorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// c_gamma applied to the tensor whose slots in row r hold the r-th
/// enumerated lowest-weight argument realized as a chain.
TensorState lowest_weight_vector_concrete(const Partition& gamma, const Params& p);

}  // namespace osa
