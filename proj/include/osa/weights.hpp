// Lowest-weight data h = (h_I, h_II, h_III, h_IV).
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "osa/core.hpp"

namespace osa {

struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);
  /// Accepts "2,1", "gamma=2,1" or the empty string.
  static Partition parse(const std::string& text);

  int size() const;
  std::string str() const;
  bool operator==(const Partition&) const = default;
};

/// Diagonal argument of one of the four weight functions.
/// I: (l1; seq; l2), II: (l1; seq), III: (seq; l2), IV: (seq).
struct HArg {
  Kind kind = Kind::F;
  int l1 = 0;
  Seq seq;
  int l2 = 0;

  static HArg I(int l1, Seq s, int l2) { return {Kind::F, l1, std::move(s), l2}; }
  static HArg II(int l, Seq s) { return {Kind::L, l, std::move(s), 0}; }
  static HArg III(Seq s, int l) { return {Kind::R, 0, std::move(s), l}; }
  static HArg IV(Seq s) { return {Kind::S, 0, std::move(s), 0}; }

  bool operator==(const HArg&) const = default;
};

struct HArgLess {
  bool operator()(const HArg& a, const HArg& b) const;
};

std::string render(const HArg& a);

/// The diagonal generator whose vacuum eigenvalue is h(arg).
Generator diagonal_generator(const HArg& a);
/// Inverse of diagonal_generator; empty if g is not diagonal.
std::optional<HArg> diagonal_arg(const Generator& g);
/// Arguments whose diagonal generator lies in the basis B4 (free choices).
bool is_free_arg(const HArg& a);

enum class WeightMode { AF, Free };

class DivergentSumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Weight {
  Params params;
  WeightMode mode = WeightMode::AF;
  Q alpha = 0;
  /// Deviations of h_I from alpha.
  std::map<HArg, Q, HArgLess> hI;
  /// Free-mode values of h_II, h_III, h_IV on free arguments.
  std::map<HArg, Q, HArgLess> free;

  /// Stores v at a: kind I into hI (as deviation from alpha), others into free.
  void set(const HArg& a, const Q& v);
};

/// k-th argument (1-based) of the partition filling order.
HArg arg_enumerate(long k, const Params& p);
/// Inverse of arg_enumerate for kind-I arguments.
long arg_index(const HArg& a, const Params& p);

Weight weight_from_partition(const Partition& gamma, const Params& p);

Q h_eval(const Weight& w, const HArg& a);

/// Longest sequence carrying a nonzero h_I deviation, or -1 if none.
int support_length(const Weight& w);

/// Free-mode weight whose free tables hold the values of w on every free
/// argument with sequence length <= max_len.
Weight free_seeded_from(const Weight& w, int max_len);

bool is_approximately_finite(const Weight& w);

struct LemmaA {
  Q alpha;
  int n = 0;
};
LemmaA lemma_a_params(const Weight& w);

struct WeightSplit {
  Q alpha;
  Weight af;
  Weight ti;
};
WeightSplit split_weight(const Weight& w);

/// Every diagonal argument of the given kind with sequence length <= max_len.
std::vector<HArg> diagonal_args(Kind kind, const Params& p, int max_len);

std::string weight_to_json(const Weight& w);
Weight weight_from_json(const std::string& text);

}  // namespace osa
