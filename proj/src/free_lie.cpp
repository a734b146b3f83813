#include "schur/free_lie.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace schur {

BracketExpr BracketExpr::generator(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->gen = index;
  return BracketExpr(std::move(n));
}

BracketExpr BracketExpr::bracket(BracketExpr left, BracketExpr right) {
  auto n = std::make_shared<Node>();
  n->degree = left.degree() + right.degree();
  n->left = std::make_shared<const BracketExpr>(std::move(left));
  n->right = std::make_shared<const BracketExpr>(std::move(right));
  return BracketExpr(std::move(n));
}

std::string BracketExpr::to_string() const {
  if (is_generator()) return "x" + std::to_string(generator_index() + 1);
  return "[" + left().to_string() + "," + right().to_string() + "]";
}

bool operator==(const BracketExpr& a, const BracketExpr& b) {
  if (a.is_generator() || b.is_generator())
    return a.is_generator() && b.is_generator() && a.generator_index() == b.generator_index();
  return a.left() == b.left() && a.right() == b.right();
}

std::string to_string(const BracketSum& sum) {
  if (sum.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < sum.size(); ++k) {
    const Rational& c = sum[k].coeff;
    if (k) out += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) out += "-";
    const Rational a = abs(c);
    if (a != 1) out += a.get_str() + "*";
    out += sum[k].expr.to_string();
  }
  return out;
}

BracketExpr left_normed(const std::vector<std::size_t>& xs) {
  if (xs.empty()) throw std::invalid_argument("left_normed needs at least one symbol");
  BracketExpr e = BracketExpr::generator(xs.front());
  for (std::size_t k = 1; k < xs.size(); ++k) e = BracketExpr::bracket(e, BracketExpr::generator(xs[k]));
  return e;
}

BracketExpr right_normed(const std::vector<std::size_t>& xs) {
  if (xs.empty()) throw std::invalid_argument("right_normed needs at least one symbol");
  BracketExpr e = BracketExpr::generator(xs.back());
  for (std::size_t k = xs.size() - 1; k-- > 0;) e = BracketExpr::bracket(BracketExpr::generator(xs[k]), e);
  return e;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t r = 1; r < w.size(); ++r) {
    Word rot(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
    if (!(w < rot)) return false;
  }
  return true;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2) throw std::invalid_argument("standard factorization needs length >= 2");
  for (std::size_t split = 1; split < w.size(); ++split) {
    Word v(w.begin() + static_cast<std::ptrdiff_t>(split), w.end());
    if (is_lyndon(v)) return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split)), std::move(v)};
  }
  throw std::logic_error("unreachable: last letter is always a Lyndon suffix");
}

std::vector<Word> lyndon_words(std::size_t letters, std::size_t max_degree) {
  std::vector<Word> out;
  if (letters == 0 || max_degree == 0) return out;
  // Duval's generation in lexicographic order
  Word w{0};
  while (!w.empty()) {
    out.push_back(w);
    const std::size_t m = w.size();
    while (w.size() < max_degree) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == letters - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });
  return out;
}

BracketExpr standard_bracketing(const Word& w) {
  if (w.size() == 1) return BracketExpr::generator(w[0]);
  auto [u, v] = standard_factorization(w);
  return BracketExpr::bracket(standard_bracketing(u), standard_bracketing(v));
}

std::string word_to_string(const Word& w) { return standard_bracketing(w).to_string(); }

FreeLieElement FreeLieElement::basis(Word w) {
  FreeLieElement e;
  e.terms_.emplace(std::move(w), Rational(1));
  return e;
}

Rational FreeLieElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FreeLieElement::add(const Word& w, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

FreeLieElement& FreeLieElement::operator+=(const FreeLieElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FreeLieElement& FreeLieElement::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

FreeLieElement operator-(FreeLieElement a, const FreeLieElement& b) {
  for (const auto& [w, c] : b.terms_) a.add(w, -c);
  return a;
}

std::string FreeLieElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) out += "-";
    first = false;
    const Rational a = abs(c);
    if (a != 1) out += a.get_str() + "*";
    out += word_to_string(w);
  }
  return out;
}

namespace {

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

class LyndonBracketCache {
 public:
  FreeLieElement get(const Word& u, const Word& v) {
    {
      std::lock_guard lock(mu_);
      auto it = cache_.find({u, v});
      if (it != cache_.end()) return it->second;
    }
    FreeLieElement r = compute(u, v);
    std::lock_guard lock(mu_);
    cache_.emplace(std::make_pair(u, v), r);
    return r;
  }

 private:
  // [P(u), P(v)] for Lyndon words u < v.
  FreeLieElement compute(const Word& u, const Word& v) {
    if (u.size() == 1) return FreeLieElement::basis(concat(u, v));
    auto [u1, u2] = standard_factorization(u);
    if (!(u2 < v)) return FreeLieElement::basis(concat(u, v));
    // [[u1,u2],v] = [u1,[u2,v]] + [[u1,v],u2]
    const FreeLieElement p1 = FreeLieElement::basis(u1);
    const FreeLieElement p2 = FreeLieElement::basis(u2);
    const FreeLieElement pv = FreeLieElement::basis(v);
    return lie_bracket(p1, lie_bracket(p2, pv)) + lie_bracket(lie_bracket(p1, pv), p2);
  }

  std::mutex mu_;
  std::map<std::pair<Word, Word>, FreeLieElement> cache_;
};

LyndonBracketCache& bracket_cache() {
  static LyndonBracketCache cache;
  return cache;
}

FreeLieElement basis_bracket(const Word& u, const Word& v) {
  if (u == v) return {};
  if (v < u) {
    FreeLieElement r = bracket_cache().get(v, u);
    r *= Rational(-1);
    return r;
  }
  return bracket_cache().get(u, v);
}

}  // namespace

FreeLieElement lie_bracket(const FreeLieElement& a, const FreeLieElement& b) {
  FreeLieElement out;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) {
      const Rational c = cu * cv;
      const FreeLieElement uv = basis_bracket(u, v);
      for (const auto& [w, cw] : uv.terms()) out.add(w, c * cw);
    }
  return out;
}

FreeLieElement expand_to_lyndon(const BracketExpr& e) {
  if (e.is_generator()) return FreeLieElement::basis(Word{e.generator_index()});
  return lie_bracket(expand_to_lyndon(e.left()), expand_to_lyndon(e.right()));
}

FreeLieElement expand_to_lyndon(const BracketSum& sum) {
  FreeLieElement out;
  for (const auto& t : sum) {
    FreeLieElement e = expand_to_lyndon(t.expr);
    e *= t.coeff;
    out += e;
  }
  return out;
}

std::vector<IdentityTerm> identity_terms(std::size_t i) {
  if (i < 2) throw std::invalid_argument("identity terms need arity i >= 2, got " + std::to_string(i));
  // symbols x_1..x_{i+1} are indices 0..i
  auto range = [](std::size_t first, std::size_t last) {  // 1-based inclusive
    std::vector<std::size_t> xs;
    for (std::size_t k = first; k <= last; ++k) xs.push_back(k - 1);
    return xs;
  };
  std::vector<IdentityTerm> terms;
  terms.push_back({left_normed(range(1, i)), i});
  for (std::size_t k = 1; k < i; ++k) {
    BracketExpr tail = right_normed(range(i + 2 - k, i + 1));
    terms.push_back({BracketExpr::bracket(std::move(tail), left_normed(range(1, i - k))), i - k});
  }
  terms.push_back({right_normed(range(2, i + 1)), 0});
  return terms;
}

std::vector<IdentityTerm> lemma31_terms(std::size_t i) {
  if (i < 3) throw std::invalid_argument("the commutator identity needs arity i >= 3, got " + std::to_string(i));
  return identity_terms(i);
}

BracketSum lemma31_expression(std::size_t i) {
  BracketSum sum;
  for (auto& t : lemma31_terms(i))
    sum.push_back({Rational(1), BracketExpr::bracket(t.commutator, BracketExpr::generator(t.singleton))});
  return sum;
}

FreeLieElement verify_lemma31(std::size_t i) { return expand_to_lyndon(lemma31_expression(i)); }

Vector evaluate(const BracketExpr& e, const LieAlgebra& L, const std::vector<Vector>& assignment) {
  if (e.is_generator()) return assignment.at(e.generator_index());
  return L.bracket(evaluate(e.left(), L, assignment), evaluate(e.right(), L, assignment));
}

LieAlgebra free_nilpotent(std::size_t generators, std::size_t cls) {
  if (generators == 0 || cls == 0) throw std::invalid_argument("free_nilpotent needs d >= 1 and c >= 1");
  const std::vector<Word> words = lyndon_words(generators, cls);
  std::map<Word, std::size_t> index;
  for (std::size_t k = 0; k < words.size(); ++k) index.emplace(words[k], k);
  const std::size_t n = words.size();
  StructureConstants sc(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (words[a].size() + words[b].size() > cls) continue;
      const FreeLieElement r = basis_bracket(words[a], words[b]);
      if (r.is_zero()) continue;
      Vector v = zero_vector(n);
      for (const auto& [w, c] : r.terms()) v[index.at(w)] = c;
      sc.set(a, b, std::move(v));
    }
  return LieAlgebra::validate("freenil:" + std::to_string(generators) + "," + std::to_string(cls), std::move(sc));
}

}  // namespace schur
