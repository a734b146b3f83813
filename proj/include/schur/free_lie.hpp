#ifndef SCHUR_FREE_LIE_HPP
#define SCHUR_FREE_LIE_HPP

#include "schur/exactla.hpp"
#include "schur/lie_core.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace schur {

/// Formal bracket tree over generator symbols x_0, x_1, ... (printed 1-based).
class BracketExpr {
 public:
  static BracketExpr generator(std::size_t index);
  static BracketExpr bracket(BracketExpr left, BracketExpr right);

  bool is_generator() const { return !node_->left; }
  std::size_t generator_index() const { return node_->gen; }
  const BracketExpr& left() const { return *node_->left; }
  const BracketExpr& right() const { return *node_->right; }
  std::size_t degree() const { return node_->degree; }

  std::string to_string() const;

  friend bool operator==(const BracketExpr& a, const BracketExpr& b);

 private:
  struct Node {
    std::size_t gen = 0;
    std::size_t degree = 1;
    std::shared_ptr<const BracketExpr> left;
    std::shared_ptr<const BracketExpr> right;
  };
  explicit BracketExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

struct BracketTerm {
  Rational coeff;
  BracketExpr expr;
};
using BracketSum = std::vector<BracketTerm>;

std::string to_string(const BracketSum& sum);

/// [x_1, ..., x_k]_l = [...[[x_1, x_2], x_3], ..., x_k]. Throws on empty input.
BracketExpr left_normed(const std::vector<std::size_t>& xs);
/// [x_1, ..., x_k]_r = [x_1, [..., [x_{k-1}, x_k]...]]. Throws on empty input.
BracketExpr right_normed(const std::vector<std::size_t>& xs);

using Word = std::vector<std::size_t>;

bool is_lyndon(const Word& w);
/// w = uv with v the longest proper Lyndon suffix. Requires |w| >= 2.
std::pair<Word, Word> standard_factorization(const Word& w);
/// Lyndon words over `letters` symbols with 1 <= length <= max_degree,
/// ordered by length, then lexicographically.
std::vector<Word> lyndon_words(std::size_t letters, std::size_t max_degree);
/// Standard bracketing of a Lyndon word.
BracketExpr standard_bracketing(const Word& w);
std::string word_to_string(const Word& w);

/// Element of the free Lie algebra in the Lyndon basis. No zero coefficients.
class FreeLieElement {
 public:
  FreeLieElement() = default;
  static FreeLieElement basis(Word w);

  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Word& w) const;

  void add(const Word& w, const Rational& c);
  FreeLieElement& operator+=(const FreeLieElement& o);
  FreeLieElement& operator*=(const Rational& c);
  friend FreeLieElement operator+(FreeLieElement a, const FreeLieElement& b) { return a += b; }
  friend FreeLieElement operator-(FreeLieElement a, const FreeLieElement& b);
  friend FreeLieElement operator*(const Rational& c, FreeLieElement a) { return a *= c; }
  friend bool operator==(const FreeLieElement&, const FreeLieElement&) = default;

  /// "0" for zero, otherwise "c*[w] + ..." in Lyndon order.
  std::string to_string() const;

 private:
  std::map<Word, Rational> terms_;
};

/// Bracket of two elements, rewritten into the Lyndon basis.
FreeLieElement lie_bracket(const FreeLieElement& a, const FreeLieElement& b);
FreeLieElement expand_to_lyndon(const BracketExpr& e);
FreeLieElement expand_to_lyndon(const BracketSum& sum);

/// One summand of the commutator identity: [commutator, x_singleton], with
/// commutator of weight i.
struct IdentityTerm {
  BracketExpr commutator;
  std::size_t singleton;
};

constexpr std::size_t kDefaultArityCap = 6;

/// The i+1 summands of the identity on generators x_1..x_{i+1} (indices 0..i):
///   [[x_1..x_i]_l, x_{i+1}] + [[x_{i+1}, [x_1..x_{i-1}]_l], x_i]
///   + sum_{k=2}^{i-1} [[[x_{i+2-k}..x_{i+1}]_r, [x_1..x_{i-k}]_l], x_{i+1-k}]
///   + [[x_2..x_{i+1}]_r, x_1].
/// Throws std::invalid_argument for i < 3.
std::vector<IdentityTerm> lemma31_terms(std::size_t i);
/// Same term pattern for any i >= 2; at i = 2 it is the Jacobi identity.
std::vector<IdentityTerm> identity_terms(std::size_t i);
BracketSum lemma31_expression(std::size_t i);
/// Lyndon normal form of lemma31_expression(i); the identity says it is 0.
FreeLieElement verify_lemma31(std::size_t i);

/// Evaluates a bracket tree in L with x_k bound to assignment[k].
Vector evaluate(const BracketExpr& e, const LieAlgebra& L, const std::vector<Vector>& assignment);

/// Free nilpotent algebra on d generators of class c; basis = Lyndon words of
/// degree <= c in lyndon_words order.
LieAlgebra free_nilpotent(std::size_t generators, std::size_t cls);

}  // namespace schur

#endif
