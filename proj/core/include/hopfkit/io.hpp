#pragma once

#include "hopfkit/characters.hpp"
#include "hopfkit/groups.hpp"
#include "hopfkit/hopf_algebra.hpp"
#include "hopfkit/morphism.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hopfkit {

/// Malformed input or unreadable file. The message carries the line and
/// column for syntax errors and the offending field otherwise.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An algebra file: structure constants, an optional R-matrix and an optional
/// hint telling the character machinery what the algebra is.
///
/// Layout: {"name", "dim", "basis": [labels], "mult": [[i, j, k, s]],
/// "unit": [[i, s]], "comult": [[i, j, k, s]], "counit": [[i, s]],
/// "antipode": [[j, i, s]] meaning S(e_j) has coefficient s at e_i,
/// "rmatrix": [[i, j, s]], "hint": {"kind", "group"}}; scalars are strings in
/// the exact scalar text format.
struct AlgebraFile {
  HopfPtr hopf;
  std::optional<TensorElement> r;
  CharacterHint hint;
};

AlgebraFile parse_algebra(std::string_view text);
AlgebraFile load_algebra(const std::filesystem::path& path);
/// Deterministic: entries sorted by index, one entry per line.
std::string dump_algebra(const FiniteDimHopf& h, const std::optional<TensorElement>& r = std::nullopt,
                         const CharacterHint& hint = {});
void save_algebra(const std::filesystem::path& path, const FiniteDimHopf& h,
                  const std::optional<TensorElement>& r = std::nullopt, const CharacterHint& hint = {});

/// {"name", "labels", "table"}; a bare JSON string names a builtin group.
FiniteGroup parse_group(std::string_view text);
FiniteGroup load_group(const std::filesystem::path& path);
std::string dump_group(const FiniteGroup& g);

/// {"dim", "vectors": [[[i, s], ...], ...]}: a list of sparse vectors, used
/// for character lists and subcoalgebra bases.
std::vector<Vec> parse_vectors(std::string_view text, std::size_t dim);
std::vector<Vec> load_vectors(const std::filesystem::path& path, std::size_t dim);
std::string dump_vectors(std::size_t dim, const std::vector<Vec>& vectors);

/// {"source", "target", "rows", "cols", "entries": [[r, c, s]]}
std::string dump_morphism(const HopfMorphism& m);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace hopfkit
