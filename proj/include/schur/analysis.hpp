#ifndef SCHUR_ANALYSIS_HPP
#define SCHUR_ANALYSIS_HPP

#include "schur/exactla.hpp"
#include "schur/free_lie.hpp"
#include "schur/lie_core.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace schur {

using Count = std::int64_t;

class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Closed-form bounds on dim M(L) in terms of n = dim L, m = dim gamma_2(L)
// and the nilpotency class c.
Count batten(Count n);
Count hardy_stitzinger(Count n, Count m);
Count yankosky_closed(Count n, Count m);
/// Requires m >= 1.
Count niroomand_russo(Count n, Count m);
/// (n-m-1)(n+m)/2 - sum_{i=2}^{min(n-m,c)} (n-m-i). Requires m >= 1, c >= 2, n-m >= 2.
Count rai_bound(Count n, Count m, Count c);
/// rai_bound minus dim(Z/(gamma_2 cap Z)) * dim gamma_2. Informational only:
/// it is not a valid upper bound in general.
Count rai_refined(const LieAlgebra& L);

struct BoundReport {
  std::string name;
  Count n = 0;
  Count m = 0;
  Count c = 0;
  Count dim_M = 0;
  Count batten = 0;
  Count hardy_stitzinger = 0;
  Count yankosky_closed = 0;
  std::optional<Count> niroomand_russo;
  std::optional<Count> rai;
  std::optional<Count> rai_refined;
  bool theorem_holds = true;  // vacuous when rai is absent
  bool refined_holds = true;  // vacuous when rai_refined is absent

  static std::optional<Count> slack(std::optional<Count> bound, Count dim_M) {
    if (!bound) return std::nullopt;
    return *bound - dim_M;
  }
};

BoundReport bound_report(const LieAlgebra& L);
nlohmann::json to_json(const BoundReport& r);

struct KernelEntry {
  std::size_t i = 0;
  Count dim_gamma_i_mod_next = 0;
  Count dim_M_of_L_mod_gamma_i = 0;
  Count dim_M_of_L_mod_gamma_next = 0;
  Count ker_lambda_i = 0;
  Count required_lower_bound = 0;
  bool satisfied = false;  // ker >= required and 0 <= ker <= (n-m) * dim_gamma_i_mod_next
};

struct KernelProfile {
  Count n = 0;
  Count m = 0;
  Count c = 0;
  std::vector<KernelEntry> entries;  // i = 2..c
};

/// ker(lambda_i) for 2 <= i <= c from multiplier dimensions of quotients:
///   dim M(L/gamma_i) + (n-m-1) dim(gamma_i/gamma_{i+1}) - dim M(L/gamma_{i+1}).
/// Throws PreconditionError when L is abelian.
KernelProfile ker_lambda_dims(const LieAlgebra& L);
nlohmann::json to_json(const KernelProfile& k);

struct Eq3Check {
  Count lhs = 0;  // dim M(L)
  Count rhs = 0;  // dim M(L/gamma_2) + (n-m-1) m - sum ker(lambda_i)
  bool holds = false;
};

/// nullopt for abelian L.
std::optional<Eq3Check> eq3_consistency(const LieAlgebra& L);
Eq3Check eq3_consistency(const LieAlgebra& L, const KernelProfile& k, Count dim_M);

struct YankoskyStep {
  Count bound = 0;  // dim M(L/gamma_c) + dim(L/gamma_c) dim gamma_c - dim gamma_c
  bool holds = false;
};

YankoskyStep yankosky_step(const LieAlgebra& L);

struct WitnessCommutator {
  std::vector<std::size_t> generators;  // indices into minimal_generators(L)
  BracketExpr expr;                     // left-normed over those indices
  Vector value;
};

/// First left-normed bracket of minimal generators, in lexicographic order of
/// the index tuple, whose value lies in gamma_i but not gamma_{i+1}.
/// Throws std::out_of_range unless 2 <= i <= c.
WitnessCommutator witness_commutator(const LieAlgebra& L, std::size_t i);

struct PsiWitness {
  std::size_t i = 0;
  std::vector<std::size_t> y;          // generator indices, repeats allowed
  std::vector<std::size_t> z;          // distinct, outside the set of y
  std::size_t top_dim = 0;             // dim L/gamma_2
  std::size_t layer_dim = 0;           // dim gamma_i/gamma_{i+1}
  std::vector<Vector> tensors;         // row-major (top_dim x layer_dim)
  std::size_t independence_rank = 0;
  std::vector<Vector> bracket_images;  // in gamma_{i+1}/gamma_{i+2}
  bool all_nonzero = false;
  bool images_vanish = false;

  bool ok() const { return all_nonzero && images_vanish && independence_rank == z.size(); }
};

/// Requires m >= 1 and 2 <= i <= min(n-m, c); throws std::out_of_range otherwise.
PsiWitness psi_witnesses(const LieAlgebra& L, std::size_t i);
nlohmann::json to_json(const PsiWitness& w);

struct TheoremVerification {
  BoundReport report;
  KernelProfile kernel;
  Eq3Check eq3;
  YankoskyStep yankosky;
  std::vector<PsiWitness> witnesses;  // i = 2..min(n-m, c)
  std::vector<std::string> failures;  // asserted checks that failed

  bool passed() const { return failures.empty(); }
};

/// Runs every check without throwing on failed assertions. Requires a
/// nonabelian nilpotent algebra.
TheoremVerification check_theorem(const LieAlgebra& L);

class VerificationFailure : public std::runtime_error {
 public:
  explicit VerificationFailure(TheoremVerification v);
  TheoremVerification verification;
};

/// check_theorem, throwing VerificationFailure when any assertion fails.
TheoremVerification verify_theorem(const LieAlgebra& L);

nlohmann::json to_json(const TheoremVerification& v);

}  // namespace schur

#endif
