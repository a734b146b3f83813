#ifndef SCHUR_CATALOG_HPP
#define SCHUR_CATALOG_HPP

#include "schur/lie_core.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schur {

/// Largest dimension any built-in family or file may declare.
constexpr std::size_t kMaxCatalogDim = 64;

/// Bad algebra spec string, or a malformed `.lie` file. Line is 1-based and 0
/// when the error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t line = 0, std::string source = {});
  std::size_t line;
  std::string source;
};

/// Builds an algebra from a textual spec:
///   abelian:n  heisenberg:k  filiform:n  freenil:d,c  dirsum:<spec>+<spec>  file:<path>
/// dirsum splits on its last '+', so nested sums associate to the left.
LieAlgebra build(std::string_view spec);

LieAlgebra heisenberg(std::size_t k);
/// [e_1, e_i] = e_{i+1} for 2 <= i <= n-1. Requires n >= 3.
LieAlgebra filiform(std::size_t n);

/// Parses the `.lie` format:
///   algebra <name>
///   dim <n>
///   bracket <i> <j> -> <c1>*<k1> [<c2>*<k2> ...]    (1-based, i < j, c = p or p/q)
///   end
/// `#` starts a comment. Unlisted pairs bracket to zero.
LieAlgebra parse_file(std::string_view text, const std::string& source = "<text>");
std::string serialize(const LieAlgebra& L);
LieAlgebra load_file(const std::string& path);

struct CorpusEntry {
  std::string spec;
  std::size_t dim = 0;
  bool abelian = false;
};

struct CorpusManifest {
  std::vector<CorpusEntry> entries;  // sorted by spec

  std::vector<CorpusEntry> nonabelian() const;
};

/// abelian:1..8, heisenberg:1..3, filiform:4..8, freenil at (2,2) (2,3) (2,4)
/// (3,2) (3,3), and every direct sum of a nonabelian family member with an
/// abelian or nonabelian member whose total dimension is at most 8.
/// With max_dim set, members of larger dimension are dropped.
CorpusManifest default_corpus(std::optional<std::size_t> max_dim = std::nullopt);

}  // namespace schur

#endif
