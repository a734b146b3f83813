// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include "oracle.hpp"

#include "schur/analysis.hpp"
#include "schur/catalog.hpp"
#include "schur/cli.hpp"
#include "schur/homology.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace schur;

namespace {

constexpr double kLemmaSeconds = 30.0;
constexpr double kGridSeconds = 5.0;

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    else if (detail.size() < 400) detail += "; " + why;
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct CliOutcome {
  int code;
  std::string out;
  std::string err;
};

CliOutcome cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(SCHUR_FIXTURES) + "/" + name; }

const std::vector<CorpusEntry>& nonabelian_corpus() {
  static const std::vector<CorpusEntry> entries = default_corpus().nonabelian();
  return entries;
}

Verdict lemma_identity() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const CliOutcome r = cli_run({"verify", "lemma", "--arity-max", "6"});
  const double elapsed = seconds_since(t0);
  if (r.code != 0) v.fail("exit code " + std::to_string(r.code));
  for (int i = 3; i <= 6; ++i)
    if (r.out.find("i=" + std::to_string(i) + ": 0\n") == std::string::npos)
      v.fail("no zero residual line for i=" + std::to_string(i));
  if (elapsed >= kLemmaSeconds) v.fail("took " + std::to_string(elapsed) + " s");
  if (v.pass) v.detail = "residual 0 for i=3..6 in " + std::to_string(elapsed) + " s";
  return v;
}

Verdict abelian_anchor() {
  Verdict v;
  for (std::size_t n = 0; n <= 8; ++n) {
    const std::size_t got = multiplier_dim(abelian_algebra(n)).dim_M;
    if (got != n * (n > 0 ? n - 1 : 0) / 2) v.fail("abelian:" + std::to_string(n) + " gave " + std::to_string(got));
  }
  for (const auto& e : nonabelian_corpus()) {
    const auto r = multiplier_dim(build(e.spec));
    if (r.dim_M >= r.n * (r.n - 1) / 2) v.fail(e.spec + " reaches n(n-1)/2");
  }
  if (v.pass) v.detail = "n=0..8 exact, " + std::to_string(nonabelian_corpus().size()) + " nonabelian strictly below";
  return v;
}

Verdict theorem_on_corpus() {
  Verdict v;
  const auto& corpus = nonabelian_corpus();
  if (corpus.size() < 20) v.fail("only " + std::to_string(corpus.size()) + " nonabelian members");
  for (const auto& e : corpus) {
    const BoundReport r = bound_report(build(e.spec));
    if (!r.rai || r.dim_M > *r.rai)
      v.fail(e.spec + ": dim M " + std::to_string(r.dim_M) + " > " + (r.rai ? std::to_string(*r.rai) : "none"));
  }
  if (v.pass) v.detail = std::to_string(corpus.size()) + " nonabelian members within the bound";
  return v;
}

Verdict kernel_inequality() {
  Verdict v;
  std::size_t checked = 0;
  for (const auto& e : nonabelian_corpus()) {
    const KernelProfile k = ker_lambda_dims(build(e.spec));
    const Count gens = k.n - k.m;
    for (const auto& entry : k.entries) {
      const Count i = static_cast<Count>(entry.i);
      const std::string at = e.spec + " i=" + std::to_string(i);
      if (entry.ker_lambda_i < 0 || entry.ker_lambda_i > gens * entry.dim_gamma_i_mod_next) v.fail(at + " out of range");
      if (i >= 2 && i <= std::min(gens, k.c)) {
        ++checked;
        if (entry.ker_lambda_i < gens - i) v.fail(at + " below n-m-i");
      }
    }
  }
  if (v.pass) v.detail = std::to_string(checked) + " (algebra, i) pairs";
  return v;
}

Verdict telescoping() {
  Verdict v;
  for (const auto& e : nonabelian_corpus()) {
    const auto c = eq3_consistency(build(e.spec));
    if (!c || !c->holds) v.fail(e.spec);
  }
  if (v.pass) v.detail = "exact on " + std::to_string(nonabelian_corpus().size()) + " members";
  return v;
}

Verdict yankosky_direct() {
  Verdict v;
  for (const auto& e : nonabelian_corpus()) {
    const YankoskyStep y = yankosky_step(build(e.spec));
    if (!y.holds) v.fail(e.spec);
  }
  if (v.pass) v.detail = "holds on " + std::to_string(nonabelian_corpus().size()) + " members";
  return v;
}

Verdict psi_witness_sets() {
  Verdict v;
  std::size_t sets = 0;
  for (const auto& e : nonabelian_corpus()) {
    const LieAlgebra L = build(e.spec);
    const auto p = series_profile(L);
    const std::size_t gens = p.gen_count;
    for (std::size_t i = 2; i <= std::min(gens, p.nilpotency_class); ++i) {
      const PsiWitness w = psi_witnesses(L, i);
      ++sets;
      const std::string at = e.spec + " i=" + std::to_string(i);
      if (w.tensors.size() != gens - i || w.independence_rank != gens - i) v.fail(at + " rank");
      if (!w.images_vanish) v.fail(at + " image");
    }
  }
  if (v.pass) v.detail = std::to_string(sets) + " witness sets";
  return v;
}

// Stated as: equality iff min(n-m, c) = 2.
Verdict dominance_grid() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t points = 0;
  std::vector<std::string> counterexamples;
  for (Count n = 3; n <= 12; ++n)
    for (Count m = 1; n - m >= 2; ++m)
      for (Count c = 2; c <= n - 1; ++c) {
        ++points;
        const Count r = rai_bound(n, m, c);
        const Count nr = niroomand_russo(n, m);
        if (r > nr) v.fail("rai > nr at " + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(c));
        if ((r == nr) != (std::min(n - m, c) == 2))
          counterexamples.push_back("(n,m,c)=(" + std::to_string(n) + "," + std::to_string(m) + "," +
                                    std::to_string(c) + ") rai=nr=" + std::to_string(nr));
      }
  const double elapsed = seconds_since(t0);
  if (!counterexamples.empty())
    v.fail("equality without min(n-m,c)=2 at " + std::to_string(counterexamples.size()) + " points, first " +
           counterexamples.front());
  if (elapsed >= kGridSeconds) v.fail("took " + std::to_string(elapsed) + " s");
  if (v.pass) v.detail = std::to_string(points) + " grid points";
  return v;
}

Verdict exact_values() {
  Verdict v;
  struct Case {
    const char* spec;
    oracle::IntTable table;
    std::size_t expected;
  };
  const std::vector<Case> cases{{"heisenberg:1", oracle::h3(), 2},
                                {"heisenberg:2", oracle::h5(), 5},
                                {"filiform:4", oracle::filiform4(), 2},
                                {"dirsum:heisenberg:1+abelian:1", oracle::h3_plus_a1(), 4}};
  for (const auto& c : cases) {
    const int brute = oracle::h2_by_cochains(c.table);
    const std::size_t got = multiplier_dim(build(c.spec)).dim_M;
    if (brute != static_cast<int>(c.expected)) v.fail(std::string(c.spec) + " oracle gave " + std::to_string(brute));
    if (got != c.expected) v.fail(std::string(c.spec) + " library gave " + std::to_string(got));
  }
  if (v.pass) v.detail = "2, 5, 2, 4 from library and cochain oracle";
  return v;
}

Verdict remark_probe() {
  Verdict v;
  const CliOutcome r = cli_run({"verify", "corpus"});
  if (r.code != 0) v.fail("default run exit " + std::to_string(r.code));
  const auto warn = r.err.find("warning");
  if (warn == std::string::npos || r.err.find("dirsum:heisenberg:1+abelian:1", warn) == std::string::npos)
    v.fail("no warning naming dirsum:heisenberg:1+abelian:1");
  const CliOutcome strict = cli_run({"verify", "corpus", "--strict-remark"});
  if (strict.code != 1) v.fail("strict run exit " + std::to_string(strict.code));
  std::size_t violators = 0;
  for (const auto& e : nonabelian_corpus())
    if (!bound_report(build(e.spec)).refined_holds) ++violators;
  if (violators == 0) v.fail("no refined-bound violation recorded");
  if (v.pass) v.detail = std::to_string(violators) + " violators, exit 0 default, exit 1 strict";
  return v;
}

Verdict parser() {
  Verdict v;
  const CorpusManifest corpus = default_corpus();
  for (const auto& e : corpus.entries) {
    const LieAlgebra L = build(e.spec);
    const LieAlgebra back = parse_file(serialize(L));
    if (!(back == L) || back.name() != L.name()) v.fail("round trip " + e.spec);
  }
  struct Bad {
    const char* file;
    std::size_t line;
  };
  for (const Bad& b : {Bad{"bad_order.lie", 3}, Bad{"bad_index.lie", 4}, Bad{"bad_coeff.lie", 5}}) {
    try {
      (void)load_file(fixture(b.file));
      v.fail(std::string(b.file) + " parsed");
    } catch (const ParseError& e) {
      if (e.line != b.line) v.fail(std::string(b.file) + " line " + std::to_string(e.line));
    }
    const CliOutcome r = cli_run({"info", "file:" + fixture(b.file)});
    if (r.code != 2) v.fail(std::string(b.file) + " exit " + std::to_string(r.code));
    if (r.err.find(std::string(b.file) + ":" + std::to_string(b.line) + ":") == std::string::npos)
      v.fail(std::string(b.file) + " message lacks line number");
  }
  if (v.pass) v.detail = std::to_string(corpus.entries.size()) + " round trips, 3 malformed files rejected";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"lemma identity", lemma_identity},   {"abelian anchor", abelian_anchor},
      {"bound on corpus", theorem_on_corpus}, {"kernel inequality", kernel_inequality},
      {"telescoping", telescoping},          {"yankosky step", yankosky_direct},
      {"psi witnesses", psi_witness_sets},   {"dominance grid", dominance_grid},
      {"exact values", exact_values},        {"remark probe", remark_probe},
      {"parser", parser}};
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    if (!v.pass) ++failed;
    std::cout << "criterion " << k + 1 << " (" << criteria[k].first << "): " << (v.pass ? "PASS" : "FAIL") << " - "
              << v.detail << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
