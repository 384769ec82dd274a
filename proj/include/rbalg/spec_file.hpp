#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbalg/bimodules.hpp"
#include "rbalg/free_algebra.hpp"
#include "rbalg/pseudotwistors.hpp"

namespace rbalg {

enum class StructureKind { assoc, dend, tridend, quadri };

std::string to_string(StructureKind k);
/// Throws ParseError on an unknown name.
StructureKind parse_structure_kind(const std::string& name);
/// Operation names in document order: mu | prec, succ | prec, succ, dot | nw, sw, ne, se.
const std::vector<std::string>& operation_names(StructureKind k);

struct BaxterBlock {
  std::optional<LinearMap> right;
  std::optional<LinearMap> left;
};

struct TwistBlock {
  LinearMap atilde;
  LinearMap btilde;
};

struct BimoduleBlock {
  BiHomBimodule module;
  std::optional<LinearMap> grb;
};

/// Missing atilde/btilde read as identity; T1 and T2 come together.
struct TwistorBlock {
  Matrix T;
  std::optional<Matrix> companion;
  std::optional<Matrix> T1;
  std::optional<Matrix> T2;
  LinearMap atilde;
  LinearMap btilde;
};

/// In-memory form of a structure document. Scalars are strings in the
/// scalar grammar; matrices are lists of column images; c[i][j] is the
/// coordinate list of op(e_i, e_j).
struct AlgebraSpec {
  Field field;
  StructureKind kind;
  std::size_t dim;
  std::map<std::string, StructureTable> operations;
  LinearMap alpha;
  LinearMap beta;
  std::vector<RBOperator> rota_baxter;
  std::optional<BaxterBlock> baxter;
  std::optional<TwistBlock> twist;
  std::optional<BimoduleBlock> bimodule;
  std::vector<TwistorBlock> twistors;

  /// Throws KindMismatch when `kind` differs.
  BiHomAssociativeAlgebra as_assoc() const;
  BiHomDendriform as_dend() const;
  BiHomTridendriform as_tridend() const;
  BiHomQuadri as_quadri() const;

  static AlgebraSpec from(const BiHomAssociativeAlgebra& a);
  static AlgebraSpec from(const BiHomDendriform& d);
  static AlgebraSpec from(const BiHomTridendriform& t);
  static AlgebraSpec from(const BiHomQuadri& q);

  WeakPseudotwistor weak_twistor(std::size_t index) const;
  PseudotwistorWithCompanions twistor_with_companions(std::size_t index) const;

  bool operator==(const AlgebraSpec& o) const;
};

/// Throws ParseError with line/column for syntax errors and a path for shape errors.
AlgebraSpec parse_spec(std::string_view text);
std::string serialize_spec(const AlgebraSpec& spec);

/// {"field": ..., "basis_size": m, "terms": [{"coeff": "2", "tree": "(L L){0}", "word": [0, 1]}]};
/// trees use the RB-augmented notation of parse_aug_tree.
FreeElement parse_free_element(std::string_view text);
std::string serialize_free_element(const FreeElement& x);

AlgebraSpec read_spec_file(const std::string& path);
void write_spec_file(const std::string& path, const AlgebraSpec& spec);

}  // namespace rbalg
