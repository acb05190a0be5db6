// Verma-like modules: PBW words over raising B4 letters, normal ordering,
// the contravariant form, Gram matrices and the sl(2) and norm checks.
#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "osa/bracket.hpp"
#include "osa/chains.hpp"
#include "osa/core.hpp"
#include "osa/linalg.hpp"
#include "osa/weights.hpp"

namespace osa {

/// Letters in non-increasing gen_compare order; the leftmost letter acts last.
using PbwWord = std::vector<Generator>;

struct WordLess {
  bool operator()(const PbwWord& a, const PbwWord& b) const;
};

using VermaState = std::map<PbwWord, Q, WordLess>;

std::string render(const PbwWord& w);
std::string render(const VermaState& s);

VermaState vacuum();

class VermaModule {
 public:
  explicit VermaModule(Weight w);

  const Weight& weight() const { return w_; }
  const Params& params() const { return w_.params; }

  VermaState apply(const Element& g, const VermaState& s);
  /// Coefficient of the vacuum in word applied to the vacuum (rightmost first).
  Q expectation(const std::vector<Element>& word);
  Q hermitian_form(const std::vector<Element>& e1, const std::vector<Element>& e2);

  /// Same expectation by bubble-sorting letters into raising, diagonal,
  /// lowering order, choosing the transposition at random each step.
  Q expectation_reordered(const std::vector<Element>& word, std::mt19937_64& rng);

  /// Vacuum eigenvalue of a diagonal B4 generator.
  Q vacuum_value(const Generator& g) const;

 private:
  const VermaState& apply_gen(const Generator& x, const PbwWord& w);
  Q reorder(std::vector<Generator> word, std::mt19937_64& rng);

  struct KeyLess {
    bool operator()(const std::pair<Generator, PbwWord>& a, const std::pair<Generator, PbwWord>& b) const;
  };

  Weight w_;
  std::map<std::pair<Generator, PbwWord>, VermaState, KeyLess> memo_;
};

VermaState apply(const Element& g, const VermaState& s, const Weight& w);
Q expectation(const std::vector<Element>& word, const Weight& w);
Q hermitian_form(const std::vector<Element>& e1, const std::vector<Element>& e2, const Weight& w);

std::vector<Element> word_elements(const PbwWord& w);

/// Raising B4 generators with #upper + #lower + 1 <= max_cost.
std::vector<Generator> pbw_letters(const Params& p, int max_cost);
/// Every PBW word whose letters' costs sum to at most max_size, vacuum first.
std::vector<PbwWord> pbw_words(const Params& p, int max_size);

struct GramMatrix {
  std::vector<PbwWord> index;
  Matrix entries;
};

GramMatrix gram_matrix(const Weight& w, int max_word_size);
GramMatrix gram_matrix(VermaModule& m, int max_word_size);
Inertia inertia(const GramMatrix& g);

std::string render(const GramMatrix& g);

struct Sl2Triple {
  Element e;
  Element h;
  Element f;
};

/// Throws std::invalid_argument unless upper.l1.l3 > lower.l2.l4.
Sl2Triple sl2_triple(const Seq& upper, const Seq& lower, const std::array<int, 4>& flavors, const Params& p);

/// Image of a PBW word applied to a concrete tensor vector.
TensorState act_word(const std::vector<Element>& word, const TensorState& v);

struct OracleReport {
  bool ok = true;
  long pairs = 0;
  std::string failure;
};

/// Compares hermitian_form with the normalized chain inner product in the
/// Young-symmetrized tensor model for all PBW word pairs of size <= max_size.
OracleReport concrete_oracle(const Partition& gamma, const Params& p, int max_size);

/// True iff every radical vector of g maps to zero on the concrete vector.
bool radical_vanishes(const GramMatrix& g, const Inertia& in, const Partition& gamma, const Params& p);

/// Number of (K', L') with K'.I.L' = K.I.L and K'.J.L' = K.J.L.
long splitting_count(const Seq& I, const Seq& J, const Seq& K, const Seq& L);

/// Norm of sigma[upper|lower] minus its f-corrections with #K + #L <= p.
/// abstract_value: <omega(s) s> minus the splitting-weighted h_I differences;
/// concrete_value: the squared norm of the corrected operator on v_gamma.
/// ok requires equality and non-negativity.
struct Myeq1Result {
  Q abstract_value;
  Q concrete_value;
  bool ok = false;
};

Myeq1Result myeq1_evaluate(const Seq& upper, const Seq& lower, int p, const Partition& gamma, const Params& params);
bool myeq1_check(const Seq& upper, const Seq& lower, int p, const Partition& gamma, const Params& params);

}  // namespace osa
