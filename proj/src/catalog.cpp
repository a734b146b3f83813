#include "schur/catalog.hpp"

#include "schur/free_lie.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace schur {

namespace {

std::string format_parse_error(const std::string& message, std::size_t line, const std::string& source) {
  std::string out;
  if (!source.empty()) out += source + ":";
  if (line > 0) out += std::to_string(line) + ":";
  if (!out.empty()) out += " ";
  return out + message;
}

std::size_t parse_count(std::string_view text, std::string_view what, std::size_t line = 0,
                        const std::string& source = {}) {
  std::size_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw ParseError("expected a non-negative integer for " + std::string(what) + ", got '" + std::string(text) + "'",
                     line, source);
  return value;
}

void check_dim(std::size_t n, std::string_view spec) {
  if (n > kMaxCatalogDim)
    throw ParseError("dimension " + std::to_string(n) + " of '" + std::string(spec) + "' exceeds the limit of " +
                     std::to_string(kMaxCatalogDim));
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) ++k;
    const std::size_t start = k;
    while (k < line.size() && !(line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) ++k;
    if (k > start) out.push_back(line.substr(start, k - start));
  }
  return out;
}

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

Rational parse_rational(std::string_view text, std::size_t line, const std::string& source) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("coefficient '" + std::string(text) + "' is not a rational p or p/q", line, source);
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  const mpz_class numerator(n, 10);
  const mpz_class denominator(std::string(den), 10);
  if (denominator == 0) throw ParseError("coefficient '" + std::string(text) + "' has a zero denominator", line, source);
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

}  // namespace

ParseError::ParseError(std::string message, std::size_t l, std::string src)
    : std::runtime_error(format_parse_error(message, l, src)), line(l), source(std::move(src)) {}

LieAlgebra heisenberg(std::size_t k) {
  // basis x_1..x_k, y_1..y_k, z
  const std::size_t n = 2 * k + 1;
  StructureConstants sc(n);
  for (std::size_t j = 0; j < k; ++j) sc.set(j, k + j, unit_vector(n, n - 1));
  return LieAlgebra::validate("heisenberg:" + std::to_string(k), std::move(sc));
}

LieAlgebra filiform(std::size_t n) {
  if (n < 3) throw ParseError("filiform:n needs n >= 3");
  StructureConstants sc(n);
  for (std::size_t i = 1; i + 1 < n; ++i) sc.set(0, i, unit_vector(n, i + 1));
  return LieAlgebra::validate("filiform:" + std::to_string(n), std::move(sc));
}

LieAlgebra build(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("algebra spec '" + std::string(spec) + "' has no family prefix (expected e.g. heisenberg:1)");
  const std::string_view family = spec.substr(0, colon);
  const std::string_view arg = spec.substr(colon + 1);

  if (family == "abelian") {
    const std::size_t n = parse_count(arg, "abelian:n");
    check_dim(n, spec);
    return abelian_algebra(n);
  }
  if (family == "heisenberg") {
    const std::size_t k = parse_count(arg, "heisenberg:k");
    if (k < 1) throw ParseError("heisenberg:k needs k >= 1");
    check_dim(2 * k + 1, spec);
    return heisenberg(k);
  }
  if (family == "filiform") {
    const std::size_t n = parse_count(arg, "filiform:n");
    check_dim(n, spec);
    return filiform(n);
  }
  if (family == "freenil") {
    const auto comma = arg.find(',');
    if (comma == std::string_view::npos) throw ParseError("freenil spec needs the form freenil:d,c");
    const std::size_t d = parse_count(arg.substr(0, comma), "freenil generators");
    const std::size_t c = parse_count(arg.substr(comma + 1), "freenil class");
    if (d < 1 || c < 1) throw ParseError("freenil:d,c needs d >= 1 and c >= 1");
    if (d > kMaxCatalogDim || c > kMaxCatalogDim) check_dim(std::max(d, c), spec);
    check_dim(lyndon_words(d, c).size(), spec);
    return free_nilpotent(d, c);
  }
  if (family == "dirsum") {
    const auto plus = arg.rfind('+');
    if (plus == std::string_view::npos || plus == 0 || plus + 1 == arg.size())
      throw ParseError("dirsum spec needs the form dirsum:<spec>+<spec>");
    const LieAlgebra a = build(arg.substr(0, plus));
    const LieAlgebra b = build(arg.substr(plus + 1));
    check_dim(a.dim() + b.dim(), spec);
    return direct_sum(a, b).renamed("dirsum:" + a.name() + "+" + b.name());
  }
  if (family == "file") return load_file(std::string(arg));
  throw ParseError("unknown algebra family '" + std::string(family) + "'");
}

LieAlgebra parse_file(std::string_view text, const std::string& source) {
  std::optional<std::string> name;
  std::optional<std::size_t> dim;
  std::optional<StructureConstants> sc;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;  // pair -> line
  bool ended = false;
  std::size_t end_line = 0;
  std::size_t last_line = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokenize(line);
    if (tok.empty()) continue;
    last_line = line_no;
    auto fail = [&](const std::string& msg) { throw ParseError(msg, line_no, source); };

    if (ended) fail("unexpected content after 'end'");
    const std::string_view kw = tok[0];
    if (kw == "algebra") {
      if (name) fail("duplicate 'algebra' line");
      if (tok.size() != 2) fail("expected 'algebra <name>'");
      name = std::string(tok[1]);
    } else if (kw == "dim") {
      if (!name) fail("'dim' must follow 'algebra <name>'");
      if (dim) fail("duplicate 'dim' line");
      if (tok.size() != 2) fail("expected 'dim <n>'");
      const std::size_t n = parse_count(tok[1], "dim", line_no, source);
      if (n > kMaxCatalogDim) fail("dim " + std::to_string(n) + " exceeds the limit of " + std::to_string(kMaxCatalogDim));
      dim = n;
      sc.emplace(n);
    } else if (kw == "bracket") {
      if (!dim) fail("'bracket' before 'dim'");
      if (tok.size() < 5 || tok[3] != "->") fail("expected 'bracket <i> <j> -> <c>*<k> ...'");
      const std::size_t i = parse_count(tok[1], "basis index", line_no, source);
      const std::size_t j = parse_count(tok[2], "basis index", line_no, source);
      if (i < 1 || i > *dim) fail("undeclared basis index " + std::to_string(i));
      if (j < 1 || j > *dim) fail("undeclared basis index " + std::to_string(j));
      if (i >= j) fail("bracket indices must satisfy i < j, got " + std::to_string(i) + " " + std::to_string(j));
      if (auto [it, fresh] = seen.emplace(std::make_pair(i, j), line_no); !fresh)
        fail("bracket " + std::to_string(i) + " " + std::to_string(j) + " already given on line " +
             std::to_string(it->second));
      Vector value = zero_vector(*dim);
      for (std::size_t t = 4; t < tok.size(); ++t) {
        const auto star = tok[t].find('*');
        if (star == std::string_view::npos) fail("term '" + std::string(tok[t]) + "' is not of the form <c>*<k>");
        const Rational c = parse_rational(tok[t].substr(0, star), line_no, source);
        const std::size_t k = parse_count(tok[t].substr(star + 1), "basis index", line_no, source);
        if (k < 1 || k > *dim) fail("undeclared basis index " + std::to_string(k));
        value[k - 1] += c;
      }
      sc->set(i - 1, j - 1, std::move(value));
    } else if (kw == "end") {
      if (!dim) fail("'end' before 'dim'");
      if (tok.size() != 1) fail("unexpected tokens after 'end'");
      ended = true;
      end_line = line_no;
    } else {
      fail("unknown keyword '" + std::string(kw) + "'");
    }
  }
  if (!ended) throw ParseError("missing 'end'", last_line, source);
  try {
    return LieAlgebra::validate(*name, std::move(*sc));
  } catch (const JacobiViolation& e) {
    throw ParseError(e.what(), end_line, source);
  }
}

std::string serialize(const LieAlgebra& L) {
  std::ostringstream os;
  os << "algebra " << L.name() << "\n";
  os << "dim " << L.dim() << "\n";
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      const Vector* v = L.structure().entry(i, j);
      if (!v) continue;
      os << "bracket " << i + 1 << " " << j + 1 << " ->";
      for (std::size_t k = 0; k < v->size(); ++k)
        if (sgn((*v)[k]) != 0) os << " " << (*v)[k].get_str() << "*" << k + 1;
      os << "\n";
    }
  os << "end\n";
  return os.str();
}

LieAlgebra load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_file(buf.str(), path);
}

std::vector<CorpusEntry> CorpusManifest::nonabelian() const {
  std::vector<CorpusEntry> out;
  std::copy_if(entries.begin(), entries.end(), std::back_inserter(out), [](const CorpusEntry& e) { return !e.abelian; });
  return out;
}

CorpusManifest default_corpus(std::optional<std::size_t> max_dim) {
  constexpr std::size_t kSumDim = 8;
  std::vector<std::string> specs;
  for (std::size_t n = 1; n <= 8; ++n) specs.push_back("abelian:" + std::to_string(n));
  std::vector<std::string> nonabelian;
  for (std::size_t k = 1; k <= 3; ++k) nonabelian.push_back("heisenberg:" + std::to_string(k));
  for (std::size_t n = 4; n <= 8; ++n) nonabelian.push_back("filiform:" + std::to_string(n));
  for (const char* f : {"freenil:2,2", "freenil:2,3", "freenil:2,4", "freenil:3,2", "freenil:3,3"})
    nonabelian.push_back(f);
  specs.insert(specs.end(), nonabelian.begin(), nonabelian.end());

  std::map<std::string, std::size_t> dims;
  for (const auto& s : specs) dims[s] = build(s).dim();
  // sums: a nonabelian member plus an abelian one, or two nonabelian members
  const std::vector<std::string> summand_families(nonabelian.begin(), nonabelian.end() - 5);
  for (std::size_t a = 0; a < summand_families.size(); ++a) {
    const std::string& left = summand_families[a];
    for (std::size_t k = 1; dims[left] + k <= kSumDim; ++k) specs.push_back("dirsum:" + left + "+abelian:" + std::to_string(k));
    for (std::size_t b = a; b < summand_families.size(); ++b) {
      const std::string& right = summand_families[b];
      if (dims[left] + dims[right] <= kSumDim) specs.push_back("dirsum:" + left + "+" + right);
    }
  }

  CorpusManifest m;
  for (const auto& s : specs) {
    const LieAlgebra L = build(s);
    if (max_dim && L.dim() > *max_dim) continue;
    m.entries.push_back({s, L.dim(), L.is_abelian()});
  }
  std::sort(m.entries.begin(), m.entries.end(), [](const CorpusEntry& x, const CorpusEntry& y) { return x.spec < y.spec; });
  return m;
}

}  // namespace schur
