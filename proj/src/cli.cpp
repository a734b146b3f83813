#include "schur/cli.hpp"

#include "schur/analysis.hpp"
#include "schur/catalog.hpp"
#include "schur/free_lie.hpp"
#include "schur/homology.hpp"
#include "schur/lie_core.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace schur::cli {

namespace {

using nlohmann::json;

enum class Format { Table, Json, Csv };

std::string opt_str(const std::optional<Count>& v) { return v ? std::to_string(*v) : "-"; }

std::string refined_cell(const BoundReport& r) {
  if (!r.rai_refined) return "-";
  return std::to_string(*r.rai_refined) + (r.refined_holds ? "" : "!");
}

const std::vector<std::string> kBoundColumns = {"name", "n", "m", "c", "dimM", "batten", "hs", "yank", "nr",
                                                "rai", "refined"};

std::vector<std::string> bound_cells(const BoundReport& r) {
  return {r.name,
          std::to_string(r.n),
          std::to_string(r.m),
          std::to_string(r.c),
          std::to_string(r.dim_M),
          std::to_string(r.batten),
          std::to_string(r.hardy_stitzinger),
          std::to_string(r.yankosky_closed),
          opt_str(r.niroomand_russo),
          opt_str(r.rai),
          refined_cell(r)};
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t k = 0; k < header.size(); ++k) width[k] = header[k].size();
  for (const auto& r : rows)
    for (std::size_t k = 0; k < r.size(); ++k) width[k] = std::max(width[k], r[k].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k) out << "  ";
      if (k == 0)
        out << std::left << std::setw(static_cast<int>(width[k])) << cells[k];
      else
        out << std::right << std::setw(static_cast<int>(width[k])) << cells[k];
    }
    out << std::left << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void print_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) out << (k ? "," : "") << cells[k];
    out << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void print_rows(std::ostream& out, Format f, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  if (f == Format::Csv)
    print_csv(out, header, rows);
  else
    print_table(out, header, rows);
}

std::string join(const std::vector<std::size_t>& xs, std::size_t offset = 1) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + std::to_string(xs[k] + offset);
  return s;
}

std::vector<std::size_t> series_dims(const std::vector<Subspace>& series) {
  std::vector<std::size_t> out;
  for (const auto& s : series) out.push_back(s.dim());
  return out;
}

int cmd_info(const std::string& spec, Format f, std::ostream& out) {
  const LieAlgebra L = build(spec);
  const SeriesProfile p = series_profile(L);
  const std::vector<std::size_t> lower = series_dims(p.lower);
  const std::vector<std::size_t> upper = series_dims(p.upper);
  const std::size_t zdim = center(L).dim();
  if (f == Format::Json) {
    out << json{{"name", L.name()},
                {"n", L.dim()},
                {"m", p.derived_dim},
                {"c", p.nilpotency_class},
                {"gen_count", p.gen_count},
                {"lower_dims", lower},
                {"upper_dims", upper},
                {"center_dim", zdim},
                {"abelian", L.is_abelian()}}
               .dump(2)
        << "\n";
    return kOk;
  }
  auto dims = [](const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + std::to_string(v[k]);
    return s;
  };
  print_rows(out, f, {"name", "n", "m", "c", "gen_count", "lower_dims", "upper_dims", "center_dim"},
             {{L.name(), std::to_string(L.dim()), std::to_string(p.derived_dim), std::to_string(p.nilpotency_class),
               std::to_string(p.gen_count), dims(lower), dims(upper), std::to_string(zdim)}});
  return kOk;
}

int cmd_multiplier(const std::string& spec, Format f, std::ostream& out) {
  const LieAlgebra L = build(spec);
  const MultiplierResult r = multiplier_dim(L);
  if (f == Format::Json) {
    out << json{{"name", L.name()}, {"n", r.n}, {"dim_M", r.dim_M}, {"rank_d2", r.rank_d2}, {"rank_d3", r.rank_d3}}
               .dump(2)
        << "\n";
    return kOk;
  }
  print_rows(out, f, {"name", "n", "dimM", "rank_d2", "rank_d3"},
             {{L.name(), std::to_string(r.n), std::to_string(r.dim_M), std::to_string(r.rank_d2),
               std::to_string(r.rank_d3)}});
  return kOk;
}

int cmd_bounds(const std::string& spec, Format f, std::ostream& out, std::ostream& err) {
  const LieAlgebra L = build(spec);
  const BoundReport r = bound_report(L);
  if (f == Format::Json)
    out << to_json(r).dump(2) << "\n";
  else
    print_rows(out, f, kBoundColumns, {bound_cells(r)});
  if (!r.refined_holds)
    err << "warning: " << r.name << ": refined value " << *r.rai_refined << " is below dim M = " << r.dim_M << "\n";
  return r.theorem_holds ? kOk : kAssertionFailed;
}

int cmd_kernel(const std::string& spec, Format f, std::ostream& out, std::ostream& err) {
  const LieAlgebra L = build(spec);
  const TheoremVerification v = check_theorem(L);
  if (f == Format::Json) {
    out << to_json(v).dump(2) << "\n";
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : v.kernel.entries) {
      std::string witness = "-";
      for (const auto& w : v.witnesses)
        if (w.i == e.i)
          witness = "y=" + join(w.y) + " z=" + (w.z.empty() ? "{}" : join(w.z)) + " rank=" +
                    std::to_string(w.independence_rank) + (w.images_vanish ? " beta=0" : " beta!=0");
      rows.push_back({std::to_string(e.i), std::to_string(e.dim_gamma_i_mod_next),
                      std::to_string(e.dim_M_of_L_mod_gamma_i), std::to_string(e.dim_M_of_L_mod_gamma_next),
                      std::to_string(e.ker_lambda_i), std::to_string(e.required_lower_bound),
                      e.satisfied ? "ok" : "FAIL", witness});
    }
    if (f == Format::Table) out << L.name() << ": n=" << v.kernel.n << " m=" << v.kernel.m << " c=" << v.kernel.c << "\n";
    print_rows(out, f, {"i", "dim_layer", "dimM_L/g_i", "dimM_L/g_i+1", "ker", "required", "status", "witness"}, rows);
    if (f == Format::Table)
      out << "telescoped identity: " << v.eq3.lhs << " = " << v.eq3.rhs << (v.eq3.holds ? " ok" : " FAIL") << "\n";
  }
  for (const auto& msg : v.failures) err << "error: " << msg << "\n";
  return v.passed() ? kOk : kAssertionFailed;
}

struct CorpusOptions {
  std::optional<std::size_t> max_dim;
  bool parallel = false;
  bool strict_remark = false;
};

struct CorpusItem {
  CorpusEntry entry;
  BoundReport report;
  std::optional<TheoremVerification> verification;  // nonabelian members only
  std::vector<std::string> failures;
};

CorpusItem evaluate_member(const CorpusEntry& e) {
  CorpusItem item{e, {}, std::nullopt, {}};
  const LieAlgebra L = build(e.spec);
  if (e.abelian) {
    item.report = bound_report(L);
    if (item.report.dim_M != item.report.batten)
      item.failures.push_back(e.spec + ": abelian multiplier " + std::to_string(item.report.dim_M) + " != n(n-1)/2");
    return item;
  }
  TheoremVerification v = check_theorem(L);
  item.report = v.report;
  item.failures = v.failures;
  if (item.report.dim_M >= item.report.batten)
    item.failures.push_back(e.spec + ": nonabelian multiplier " + std::to_string(item.report.dim_M) +
                            " is not below n(n-1)/2");
  item.verification = std::move(v);
  return item;
}

int cmd_verify_corpus(const CorpusOptions& opts, Format f, std::ostream& out, std::ostream& err) {
  const CorpusManifest manifest = default_corpus(opts.max_dim);
  std::vector<CorpusItem> items(manifest.entries.size());
  if (opts.parallel) {
    std::atomic<std::size_t> next{0};
    std::vector<std::string> errors(items.size());
    auto worker = [&] {
      for (std::size_t k; (k = next.fetch_add(1)) < items.size();) {
        try {
          items[k] = evaluate_member(manifest.entries[k]);
        } catch (const std::exception& ex) {
          errors[k] = ex.what();
        }
      }
    };
    const unsigned threads = std::max(2u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
      if (!e.empty()) throw std::runtime_error(e);
  } else {
    for (std::size_t k = 0; k < items.size(); ++k) items[k] = evaluate_member(manifest.entries[k]);
  }

  std::vector<std::string> failures;
  std::vector<std::string> violators;
  for (const auto& it : items) {
    failures.insert(failures.end(), it.failures.begin(), it.failures.end());
    if (!it.report.refined_holds) violators.push_back(it.report.name);
  }
  const std::size_t nonabelian =
      static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const CorpusItem& i) { return !i.entry.abelian; }));

  if (f == Format::Json) {
    json algebras = json::array();
    for (const auto& it : items) {
      json a = to_json(it.report);
      if (it.verification) {
        a["kernel"] = to_json(it.verification->kernel);
        a["eq3"] = {{"lhs", it.verification->eq3.lhs},
                    {"rhs", it.verification->eq3.rhs},
                    {"holds", it.verification->eq3.holds}};
        a["yankosky_step"] = {{"bound", it.verification->yankosky.bound},
                              {"holds", it.verification->yankosky.holds}};
        json w = json::array();
        for (const auto& x : it.verification->witnesses) w.push_back(to_json(x));
        a["witnesses"] = std::move(w);
      }
      a["abelian"] = it.entry.abelian;
      a["failures"] = it.failures;
      algebras.push_back(std::move(a));
    }
    out << json{{"members", items.size()},
                {"nonabelian_members", nonabelian},
                {"algebras", std::move(algebras)},
                {"remark_violations", violators},
                {"failures", failures},
                {"passed", failures.empty()}}
               .dump(2)
        << "\n";
  } else {
    std::vector<std::string> header = kBoundColumns;
    header.push_back("status");
    std::vector<std::vector<std::string>> rows;
    for (const auto& it : items) {
      auto cells = bound_cells(it.report);
      cells.push_back(it.failures.empty() ? "ok" : "FAIL");
      rows.push_back(std::move(cells));
    }
    print_rows(out, f, header, rows);
    if (f == Format::Table)
      out << items.size() << " algebras (" << nonabelian << " nonabelian), " << failures.size() << " failed checks, "
          << violators.size() << " refined-bound violations\n";
  }
  for (const auto& msg : failures) err << "error: " << msg << "\n";
  if (!violators.empty()) {
    err << "warning: refined bound below dim M for:";
    for (const auto& v : violators) err << " " << v;
    err << "\n";
  }
  if (!failures.empty()) return kAssertionFailed;
  if (opts.strict_remark && !violators.empty()) return kAssertionFailed;
  return kOk;
}

int cmd_verify_lemma(std::size_t arity_max, Format f, std::ostream& out) {
  bool all_zero = true;
  json results = json::array();
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 3; i <= arity_max; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    const BracketSum expr = lemma31_expression(i);
    const FreeLieElement residual = expand_to_lyndon(expr);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all_zero = all_zero && residual.is_zero();
    if (f == Format::Table) {
      out << "i=" << i << ": " << residual.to_string() << "\n";
      out << "  " << to_string(expr) << " = 0\n";
    }
    results.push_back({{"i", i},
                       {"terms", expr.size()},
                       {"residual", residual.to_string()},
                       {"expression", to_string(expr)},
                       {"seconds", secs}});
    rows.push_back({std::to_string(i), std::to_string(expr.size()), residual.to_string(), to_string(expr)});
  }
  if (f == Format::Json) out << results.dump(2) << "\n";
  if (f == Format::Csv) print_csv(out, {"i", "terms", "residual", "expression"}, rows);
  return all_zero ? kOk : kAssertionFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schur multiplier dimensions and bounds for nilpotent Lie algebras", "schur"};
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));

  std::string spec;
  auto* info = app.add_subcommand("info", "Series profile of an algebra");
  info->add_option("spec", spec, "Algebra spec")->required();
  auto* mult = app.add_subcommand("multiplier", "Schur multiplier dimension");
  mult->add_option("spec", spec, "Algebra spec")->required();
  auto* bounds = app.add_subcommand("bounds", "All multiplier bounds for an algebra");
  bounds->add_option("spec", spec, "Algebra spec")->required();
  auto* kernel = app.add_subcommand("kernel", "Kernel dimensions and witnesses");
  kernel->add_option("spec", spec, "Algebra spec")->required();

  auto* verify = app.add_subcommand("verify", "Verification runs");
  verify->require_subcommand(1);
  CorpusOptions copts;
  std::size_t max_dim = 0;
  bool json_flag = false;
  auto* corpus = verify->add_subcommand("corpus", "Check every bound on the generated corpus");
  auto* max_dim_opt = corpus->add_option("--max-dim", max_dim, "Drop members above this dimension");
  corpus->add_flag("--json", json_flag, "Same as --format json");
  corpus->add_flag("--parallel", copts.parallel, "One worker per algebra");
  corpus->add_flag("--strict-remark", copts.strict_remark, "Exit 1 when the refined bound fails");
  std::size_t arity_max = kDefaultArityCap;
  auto* lemma = verify->add_subcommand("lemma", "Rewrite the commutator identity to Lyndon normal form");
  lemma->add_option("--arity-max", arity_max, "Largest arity i to check")->check(CLI::Range(3, 12));

  std::vector<std::string> argv_store{"schur"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Format f = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Table;
  try {
    if (*info) return cmd_info(spec, f, out);
    if (*mult) return cmd_multiplier(spec, f, out);
    if (*bounds) return cmd_bounds(spec, f, out, err);
    if (*kernel) return cmd_kernel(spec, f, out, err);
    if (*corpus) {
      if (*max_dim_opt) copts.max_dim = max_dim;
      if (json_flag) f = Format::Json;
      return cmd_verify_corpus(copts, f, out, err);
    }
    if (*lemma) return cmd_verify_lemma(arity_max, f, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const JacobiViolation& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const NotNilpotent& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace schur::cli
