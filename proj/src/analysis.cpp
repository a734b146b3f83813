#include "schur/analysis.hpp"

#include "schur/homology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace schur {

Count batten(Count n) { return n * (n - 1) / 2; }

Count hardy_stitzinger(Count n, Count m) { return batten(n) - m; }

Count yankosky_closed(Count n, Count m) { return (n + m) * (n - m - 1) / 2; }

Count niroomand_russo(Count n, Count m) {
  if (m < 1) throw PreconditionError("niroomand_russo requires m >= 1");
  return (n - m - 1) * (n + m - 2) / 2 + 1;
}

Count rai_bound(Count n, Count m, Count c) {
  if (m < 1 || c < 2 || n - m < 2)
    throw PreconditionError("rai_bound requires m >= 1, c >= 2 and n - m >= 2 (got n=" + std::to_string(n) +
                            ", m=" + std::to_string(m) + ", c=" + std::to_string(c) + ")");
  Count value = (n - m - 1) * (n + m) / 2;
  for (Count i = 2; i <= std::min(n - m, c); ++i) value -= n - m - i;
  return value;
}

namespace {

struct Shape {
  Count n, m, c;
};

Shape shape_of(const SeriesProfile& p, const LieAlgebra& L) {
  return {static_cast<Count>(L.dim()), static_cast<Count>(p.derived_dim), static_cast<Count>(p.nilpotency_class)};
}

bool rai_applies(const Shape& s) { return s.m >= 1 && s.c >= 2 && s.n - s.m >= 2; }

Count refined_subtrahend(const LieAlgebra& L, const SeriesProfile& p) {
  const Subspace z = center(L);
  const Subspace& g2 = p.gamma(2);
  const Count central_top = static_cast<Count>(z.dim() - intersect(z, g2).dim());
  return central_top * static_cast<Count>(g2.dim());
}

Count dim_M(const LieAlgebra& L) { return static_cast<Count>(multiplier_dim(L).dim_M); }

Count dim_M_mod(const LieAlgebra& L, const Subspace& ideal) {
  if (ideal.dim() == 0) return dim_M(L);
  return dim_M(quotient_algebra(L, ideal).algebra);
}

BoundReport make_report(const LieAlgebra& L, const SeriesProfile& p, Count dimM) {
  const Shape s = shape_of(p, L);
  BoundReport r;
  r.name = L.name();
  r.n = s.n;
  r.m = s.m;
  r.c = s.c;
  r.dim_M = dimM;
  r.batten = batten(s.n);
  r.hardy_stitzinger = hardy_stitzinger(s.n, s.m);
  r.yankosky_closed = yankosky_closed(s.n, s.m);
  if (s.m >= 1) r.niroomand_russo = niroomand_russo(s.n, s.m);
  if (rai_applies(s)) {
    r.rai = rai_bound(s.n, s.m, s.c);
    r.rai_refined = *r.rai - refined_subtrahend(L, p);
    r.theorem_holds = dimM <= *r.rai;
    r.refined_holds = dimM <= *r.rai_refined;
  }
  return r;
}

KernelProfile make_kernel_profile(const LieAlgebra& L, const SeriesProfile& p) {
  const Shape s = shape_of(p, L);
  if (s.m < 1) throw PreconditionError(L.name() + " is abelian; ker(lambda_i) needs m >= 1");
  KernelProfile k{s.n, s.m, s.c, {}};
  const Count gens = s.n - s.m;
  // M(L/gamma_i) for i = 2..c+1; gamma_{c+1} = 0 gives L itself
  std::vector<Count> quotient_M(static_cast<std::size_t>(s.c) + 2, 0);
  for (std::size_t i = 2; i <= static_cast<std::size_t>(s.c) + 1; ++i) quotient_M[i] = dim_M_mod(L, p.gamma(i));
  for (std::size_t i = 2; i <= static_cast<std::size_t>(s.c); ++i) {
    KernelEntry e;
    e.i = i;
    e.dim_gamma_i_mod_next = static_cast<Count>(p.gamma_dim(i) - p.gamma_dim(i + 1));
    e.dim_M_of_L_mod_gamma_i = quotient_M[i];
    e.dim_M_of_L_mod_gamma_next = quotient_M[i + 1];
    e.ker_lambda_i = quotient_M[i] + (gens - 1) * e.dim_gamma_i_mod_next - quotient_M[i + 1];
    const Count ii = static_cast<Count>(i);
    e.required_lower_bound = ii <= std::min(gens, s.c) ? std::max<Count>(0, gens - ii) : 0;
    e.satisfied = e.ker_lambda_i >= e.required_lower_bound && e.ker_lambda_i >= 0 &&
                  e.ker_lambda_i <= gens * e.dim_gamma_i_mod_next;
    k.entries.push_back(e);
  }
  return k;
}

nlohmann::json opt(const std::optional<Count>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

// Odometer over tuples in {0..base-1}^len, lexicographic.
bool next_tuple(std::vector<std::size_t>& t, std::size_t base) {
  for (std::size_t k = t.size(); k-- > 0;) {
    if (++t[k] < base) return true;
    t[k] = 0;
  }
  return false;
}

}  // namespace

Count rai_refined(const LieAlgebra& L) {
  const SeriesProfile p = series_profile(L);
  const Shape s = shape_of(p, L);
  return rai_bound(s.n, s.m, s.c) - refined_subtrahend(L, p);
}

BoundReport bound_report(const LieAlgebra& L) {
  const SeriesProfile p = series_profile(L);
  return make_report(L, p, dim_M(L));
}

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json slack = {
      {"batten", r.batten - r.dim_M},
      {"hardy_stitzinger", r.hardy_stitzinger - r.dim_M},
      {"yankosky_closed", r.yankosky_closed - r.dim_M},
      {"niroomand_russo", opt(BoundReport::slack(r.niroomand_russo, r.dim_M))},
      {"rai", opt(BoundReport::slack(r.rai, r.dim_M))},
      {"rai_refined", opt(BoundReport::slack(r.rai_refined, r.dim_M))},
  };
  return {
      {"name", r.name},
      {"n", r.n},
      {"m", r.m},
      {"c", r.c},
      {"dim_M", r.dim_M},
      {"batten", r.batten},
      {"hardy_stitzinger", r.hardy_stitzinger},
      {"yankosky_closed", r.yankosky_closed},
      {"niroomand_russo", opt(r.niroomand_russo)},
      {"rai", opt(r.rai)},
      {"rai_refined", opt(r.rai_refined)},
      {"slack", std::move(slack)},
      {"theorem_holds", r.theorem_holds},
      {"refined_holds", r.refined_holds},
  };
}

KernelProfile ker_lambda_dims(const LieAlgebra& L) { return make_kernel_profile(L, series_profile(L)); }

nlohmann::json to_json(const KernelProfile& k) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : k.entries)
    entries.push_back({{"i", e.i},
                       {"dim_gamma_i_mod_next", e.dim_gamma_i_mod_next},
                       {"dim_M_of_L_mod_gamma_i", e.dim_M_of_L_mod_gamma_i},
                       {"dim_M_of_L_mod_gamma_next", e.dim_M_of_L_mod_gamma_next},
                       {"ker_lambda_i", e.ker_lambda_i},
                       {"required_lower_bound", e.required_lower_bound},
                       {"satisfied", e.satisfied}});
  return {{"n", k.n}, {"m", k.m}, {"c", k.c}, {"entries", std::move(entries)}};
}

Eq3Check eq3_consistency(const LieAlgebra& L, const KernelProfile& k, Count dimM) {
  (void)L;
  const Count gens = k.n - k.m;
  Eq3Check e;
  e.lhs = dimM;
  e.rhs = batten(gens) + (gens - 1) * k.m;
  for (const auto& entry : k.entries) e.rhs -= entry.ker_lambda_i;
  e.holds = e.lhs == e.rhs;
  return e;
}

std::optional<Eq3Check> eq3_consistency(const LieAlgebra& L) {
  const SeriesProfile p = series_profile(L);
  if (p.derived_dim == 0) return std::nullopt;
  return eq3_consistency(L, make_kernel_profile(L, p), dim_M(L));
}

YankoskyStep yankosky_step(const LieAlgebra& L) {
  const SeriesProfile p = series_profile(L);
  if (p.nilpotency_class < 2) throw PreconditionError(L.name() + " is abelian; the class-c step needs c >= 2");
  const Subspace& last = p.gamma(p.nilpotency_class);
  const Count d = static_cast<Count>(last.dim());
  const Count top = static_cast<Count>(L.dim()) - d;
  YankoskyStep y;
  y.bound = dim_M_mod(L, last) + top * d - d;
  y.holds = dim_M(L) <= y.bound;
  return y;
}

WitnessCommutator witness_commutator(const LieAlgebra& L, std::size_t i) {
  const SeriesProfile p = series_profile(L);
  if (i < 2 || i > p.nilpotency_class)
    throw std::out_of_range("witness commutator needs 2 <= i <= c = " + std::to_string(p.nilpotency_class) +
                            ", got " + std::to_string(i));
  const std::vector<Vector> gens = minimal_generators(L);
  const Subspace& next = p.gamma(i + 1);
  std::vector<std::size_t> t(i, 0);
  do {
    const BracketExpr expr = left_normed(t);
    Vector value = evaluate(expr, L, gens);
    if (!next.contains(value)) return {t, expr, std::move(value)};
  } while (next_tuple(t, gens.size()));
  throw std::logic_error("left-normed generator brackets failed to span gamma_i mod gamma_{i+1}");
}

PsiWitness psi_witnesses(const LieAlgebra& L, std::size_t i) {
  const SeriesProfile p = series_profile(L);
  const std::size_t gens_count = p.gen_count;
  const std::size_t upper = std::min(gens_count, p.nilpotency_class);
  if (p.derived_dim == 0 || i < 2 || i > upper)
    throw std::out_of_range("psi witnesses need m >= 1 and 2 <= i <= min(n-m, c) = " + std::to_string(upper) +
                            ", got " + std::to_string(i));
  const std::size_t n = L.dim();
  const std::vector<Vector> gens = minimal_generators(L);
  const QuotientCoords top(p.gamma(2), Subspace::full(n));
  const QuotientCoords layer(p.gamma(i + 1), p.gamma(i));
  const QuotientCoords next(p.gamma(i + 2), p.gamma(i + 1));

  PsiWitness w;
  w.i = i;
  w.y = witness_commutator(L, i).generators;
  w.top_dim = top.dim();
  w.layer_dim = layer.dim();
  const std::set<std::size_t> used(w.y.begin(), w.y.end());
  for (std::size_t g = 0; g < gens_count && w.z.size() < gens_count - i; ++g)
    if (!used.count(g)) w.z.push_back(g);

  const std::vector<IdentityTerm> terms = identity_terms(i);

  w.all_nonzero = true;
  w.images_vanish = true;
  Matrix stacked(0, w.top_dim * w.layer_dim);
  for (std::size_t zj : w.z) {
    std::vector<Vector> assignment;
    for (std::size_t yk : w.y) assignment.push_back(gens[yk]);
    assignment.push_back(gens[zj]);
    Vector tensor = zero_vector(w.top_dim * w.layer_dim);
    for (const auto& term : terms) {
      const Vector wcoords = layer.coords(evaluate(term.commutator, L, assignment));
      const Vector ucoords = top.coords(assignment[term.singleton]);
      for (std::size_t a = 0; a < w.top_dim; ++a) {
        if (sgn(ucoords[a]) == 0) continue;
        for (std::size_t b = 0; b < w.layer_dim; ++b) tensor[a * w.layer_dim + b] += ucoords[a] * wcoords[b];
      }
    }
    // beta(u (x) w) = [w, u] in gamma_{i+1}/gamma_{i+2}
    Vector image = zero_vector(next.dim());
    for (std::size_t a = 0; a < w.top_dim; ++a)
      for (std::size_t b = 0; b < w.layer_dim; ++b) {
        const Rational& t = tensor[a * w.layer_dim + b];
        if (sgn(t) == 0) continue;
        const Vector img = next.coords(L.bracket(layer.lift(b), top.lift(a)));
        for (std::size_t k = 0; k < img.size(); ++k) image[k] += t * img[k];
      }
    if (is_zero(tensor)) w.all_nonzero = false;
    if (!is_zero(image)) w.images_vanish = false;
    stacked.append_row(tensor);
    w.tensors.push_back(std::move(tensor));
    w.bracket_images.push_back(std::move(image));
  }
  w.independence_rank = rank(stacked);
  return w;
}

nlohmann::json to_json(const PsiWitness& w) {
  auto vec = [](const Vector& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
  };
  nlohmann::json tensors = nlohmann::json::array();
  for (const auto& t : w.tensors) tensors.push_back(vec(t));
  nlohmann::json images = nlohmann::json::array();
  for (const auto& t : w.bracket_images) images.push_back(vec(t));
  return {{"i", w.i},
          {"y", w.y},
          {"z", w.z},
          {"top_dim", w.top_dim},
          {"layer_dim", w.layer_dim},
          {"tensors", std::move(tensors)},
          {"independence_rank", w.independence_rank},
          {"bracket_images", std::move(images)},
          {"all_nonzero", w.all_nonzero},
          {"images_vanish", w.images_vanish}};
}

TheoremVerification check_theorem(const LieAlgebra& L) {
  const SeriesProfile p = series_profile(L);
  if (p.derived_dim == 0) throw PreconditionError(L.name() + " is abelian; the bound applies to m >= 1");
  TheoremVerification v;
  const Count dimM = dim_M(L);
  v.report = make_report(L, p, dimM);
  v.kernel = make_kernel_profile(L, p);
  v.eq3 = eq3_consistency(L, v.kernel, dimM);
  v.yankosky = yankosky_step(L);

  auto fail = [&](std::string what) { v.failures.push_back(L.name() + ": " + std::move(what)); };
  if (!v.report.theorem_holds)
    fail("dim M = " + std::to_string(dimM) + " exceeds rai bound " + std::to_string(*v.report.rai));
  for (const auto& e : v.kernel.entries)
    if (!e.satisfied)
      fail("ker(lambda_" + std::to_string(e.i) + ") = " + std::to_string(e.ker_lambda_i) + " violates [" +
           std::to_string(e.required_lower_bound) + ", " +
           std::to_string((v.kernel.n - v.kernel.m) * e.dim_gamma_i_mod_next) + "]");
  if (!v.eq3.holds)
    fail("telescoped multiplier identity gives " + std::to_string(v.eq3.rhs) + ", expected " +
         std::to_string(v.eq3.lhs));
  if (!v.yankosky.holds)
    fail("dim M = " + std::to_string(dimM) + " exceeds class-c step bound " + std::to_string(v.yankosky.bound));
  const std::size_t upper = std::min(p.gen_count, p.nilpotency_class);
  for (std::size_t i = 2; i <= upper; ++i) {
    PsiWitness w = psi_witnesses(L, i);
    if (!w.ok())
      fail("psi witnesses at i=" + std::to_string(i) + ": rank " + std::to_string(w.independence_rank) + " of " +
           std::to_string(w.z.size()) + (w.all_nonzero ? "" : ", zero tensor") +
           (w.images_vanish ? "" : ", nonzero bracket image"));
    v.witnesses.push_back(std::move(w));
  }
  return v;
}

VerificationFailure::VerificationFailure(TheoremVerification v)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "verification failed";
        for (const auto& f : v.failures) os << "; " << f;
        return os.str();
      }()),
      verification(std::move(v)) {}

TheoremVerification verify_theorem(const LieAlgebra& L) {
  TheoremVerification v = check_theorem(L);
  if (!v.passed()) throw VerificationFailure(std::move(v));
  return v;
}

nlohmann::json to_json(const TheoremVerification& v) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : v.witnesses) witnesses.push_back(to_json(w));
  return {{"report", to_json(v.report)},
          {"kernel", to_json(v.kernel)},
          {"eq3", {{"lhs", v.eq3.lhs}, {"rhs", v.eq3.rhs}, {"holds", v.eq3.holds}}},
          {"yankosky_step", {{"bound", v.yankosky.bound}, {"holds", v.yankosky.holds}}},
          {"witnesses", std::move(witnesses)},
          {"failures", v.failures}};
}

}  // namespace schur
