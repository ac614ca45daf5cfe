#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "splitegh/graded.hpp"
#include "splitegh/lpp.hpp"
#include "splitegh/regseq.hpp"

namespace splitegh {

/// An ideal together with a split regular sequence inside it.
class EghInput {
 public:
  /// Checks that the sequence is regular (n forms in n variables) and that
  /// every f_i lies in the ideal; throws ArgumentError otherwise.
  EghInput(IdealPresentation ideal, SplitSequence sequence);

  const IdealPresentation& ideal() const noexcept { return ideal_; }
  const SplitSequence& sequence() const noexcept { return sequence_; }
  int num_vars() const noexcept { return ideal_.num_vars(); }
  Field field() const noexcept { return ideal_.field(); }
  /// socle bound + 1; every Hilbert function in play vanishes there.
  int truncation() const { return sequence_.socle_bound() + 1; }

 private:
  IdealPresentation ideal_;
  SplitSequence sequence_;
};

struct EghOptions {
  /// Certify every slice by running the construction on it in one variable
  /// fewer. Without it the slice ideals are read off their Hilbert functions.
  bool recurse = true;
  /// Worker threads for the independent degree steps.
  int threads = 1;
  /// Overrides the truncation degree.
  std::optional<int> max_degree;
};

struct SliceRecord {
  int index = 0;
  HilbertFunction hilbert;              // H(S/J_i) through d+1-i
  std::vector<std::size_t> segment_sizes;  // |L_{i,t}|
  int image_vars = 0;
  std::vector<std::string> image_sequence;  // factors after the coordinate change
  bool certified = false;               // recursion reproduced the function
};

struct DegreeStep {
  int degree = 0;
  std::vector<std::string> factor_order;  // q_1, ..., q_s
  std::vector<std::size_t> chain_dims;    // the maximised intersection dimensions
  HilbertFunction j_hilbert;              // H(S/J) through d+1
  std::vector<SliceRecord> slices;
  HilbertFunction k_hilbert;              // H(S/K) through d+1
  std::vector<std::string> k_generators;
  std::uint64_t input_at_d = 0, k_at_d = 0;
  std::uint64_t input_at_next = 0, k_at_next = 0;
  std::vector<std::size_t> lpp_segment_sizes;  // compressed K through d+1
};

struct Lemma20Record {
  int j = 0;
  bool holds = true;
  std::vector<std::string> hilbert;  // one per m > j
};

struct VerificationReport {
  bool ok = false;
  int truncation = 0;
  std::vector<std::uint64_t> input_dims;   // dim I_t
  std::vector<std::uint64_t> output_dims;  // dim K_t
  HilbertFunction input_hilbert;
  HilbertFunction output_hilbert;
  bool hilbert_equal = false;
  std::optional<int> first_divergence;
  bool contains_powers = false;
  std::vector<std::string> missing_powers;
  bool closed = false;
  std::optional<int> closure_failure;
  bool lex_plus_powers = false;
  std::vector<DegreeStep> steps;
  std::vector<Lemma20Record> lemma20;
  std::vector<std::string> problems;
};

struct EghResult {
  MonomialIdeal output;
  std::vector<int> powers;
  HilbertFunction hilbert;
  std::vector<DegreeStep> steps;
  std::vector<Lemma20Record> lemma20;
  VerificationReport report;

  std::vector<Monomial> generators() const { return output.minimal_generators(); }
};

/// Greedy ordering of the factors of f_n for J at degree d: q_1 maximises
/// dim(J_d cap <q>_d), q_2 maximises dim((J:q_1)_{d-1} cap <q>_{d-1}), and so
/// on through q_{s-1}; ties go to the lower original index. `dims` receives
/// the maxima when non-null.
std::vector<Polynomial> order_factors(const IdealTower& j, const std::vector<Polynomial>& qs, int d,
                                      std::vector<std::size_t>* dims = nullptr);

/// The ideal generated by the sequence and I_d, as a tower through d+1.
IdealTower step_ideal(const IdealTower& sequence_ideal, const IdealTower& ideal, int d);

/// One degree step for n >= 2: a monomial ideal K containing the pure powers
/// with H(S/K, t) = H(S/J, t) for t <= min(d+1, truncation).
MonomialIdeal theorem21_degree_step(const EghInput& input, int d, const EghOptions& options = {},
                                    DegreeStep* record = nullptr);

/// Runs every degree step, compresses, glues and verifies. Throws
/// InvariantError if a guaranteed property fails.
EghResult egh_construct(const EghInput& input, const EghOptions& options = {});

/// H((P : q_1 ... q_j) + <q_m>) is the same for every m > j, the q being the
/// factors of f_n in the given order.
bool lemma20_check(const SplitSequence& sequence, int j, std::vector<std::string>* hilbert = nullptr);

/// Recomputes both Hilbert functions from the generators by a separate code
/// path and checks pure powers and closure. Never throws on failed checks.
VerificationReport verify(const EghInput& input, const EghResult& result);

}  // namespace splitegh
