#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coproduct.hpp"
#include "lie.hpp"
#include "matrix.hpp"
#include "product.hpp"
#include "scalar.hpp"
#include "space.hpp"
#include "tensor.hpp"

namespace rbla {

// One algebra's worth of raw data: carrier space, weight, and named products
// and operators on it.
struct AlgebraPart {
  Space space;
  Scalar weight;
  std::map<std::string, BilinearProduct> products;
  std::map<std::string, Mat> operators;

  bool operator==(const AlgebraPart&) const = default;
};

// A module over the main algebra: rho is indexed by the algebra's basis, and
// the optional operators act on the module.
struct RepresentationData {
  Space module;
  std::vector<Mat> rho;
  std::optional<Mat> alpha;
  std::optional<Mat> beta;

  bool operator==(const RepresentationData&) const = default;
};

// Cross actions of a pair of algebras: rho[i] is the main e_i acting on the
// partner space, mu[j] the partner's e_j acting back on the main space. The
// _right companions carry the second action of a two-sided (pre-Lie) pair and
// stay zero for Lie pairs.
struct MatchedActions {
  std::vector<Mat> rho;
  std::vector<Mat> mu;
  std::vector<Mat> rho_right;
  std::vector<Mat> mu_right;

  bool operator==(const MatchedActions&) const = default;
};

struct StructureDocument {
  AlgebraPart algebra;
  std::map<std::string, BilinearForm> forms;
  std::map<std::string, Coproduct> coproducts;
  std::map<std::string, Tensor2> tensors;
  std::map<std::string, RepresentationData> representations;
  std::optional<AlgebraPart> partner;
  std::optional<MatchedActions> actions;

  bool operator==(const StructureDocument&) const = default;
};

// A file holds one document or a batch of them.
struct DocumentFile {
  bool batch = false;
  std::vector<StructureDocument> docs;

  bool operator==(const DocumentFile&) const = default;
};

// Largest accepted dimension; the RBLA_MAX_DIM variable overrides the
// default of 16.
int max_dimension();

// Both throw InputError with the JSON path of the offending field.
// parse(serialize(f)) reproduces f exactly; antisymmetrized products are
// stored and re-emitted in completed form.
DocumentFile parse_document(const std::string& text);
std::string serialize_document(const DocumentFile& f);

} // namespace rbla
