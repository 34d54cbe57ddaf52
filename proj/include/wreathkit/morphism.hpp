#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wreathkit/matrix.hpp"

namespace wreathkit {

/// A named finite-dimensional space. The unit object is the reserved name "I"
/// with dim 1; an empty space list also denotes the unit object.
struct SpaceRef {
  std::string name;
  std::int64_t dim = 1;

  bool operator==(const SpaceRef& o) const { return name == o.name && dim == o.dim; }
  bool operator!=(const SpaceRef& o) const { return !(*this == o); }
};

inline SpaceRef unit_space() { return SpaceRef{"I", 1}; }

std::int64_t total_dim(const std::vector<SpaceRef>& spaces);
std::vector<std::int64_t> dims_of(const std::vector<SpaceRef>& spaces);
std::string spaces_str(const std::vector<SpaceRef>& spaces);

/// An exact linear map between tensor products of named spaces. Rows are
/// indexed by the flattened cod basis, columns by the flattened dom basis;
/// multi-indices flatten lexicographically row-major: (i, j) in X⊗Y maps to
/// i*dim(Y) + j.
class Morphism {
 public:
  Morphism() = default;
  Morphism(std::vector<SpaceRef> dom, std::vector<SpaceRef> cod, Mat entries);

  const std::vector<SpaceRef>& dom() const { return dom_; }
  const std::vector<SpaceRef>& cod() const { return cod_; }
  const Mat& mat() const { return mat_; }
  Mat& mat() { return mat_; }
  const FieldSpec& field() const { return mat_.field(); }

  std::int64_t dom_dim() const { return total_dim(dom_); }
  std::int64_t cod_dim() const { return total_dim(cod_); }

  /// Same underlying matrix presented between different space lists.
  Morphism relabeled(std::vector<SpaceRef> dom, std::vector<SpaceRef> cod) const;

  Morphism operator+(const Morphism& o) const;
  Morphism operator-(const Morphism& o) const;
  Morphism scaled(const Scalar& s) const;
  bool is_zero() const { return mat_.is_zero(); }

  std::string sig_str() const;

 private:
  std::vector<SpaceRef> dom_, cod_;
  Mat mat_;
};

/// Tensor product of morphisms (Kronecker product under the flattening).
Morphism kron(const Morphism& f, const Morphism& g);
Morphism kron3(const Morphism& f, const Morphism& g, const Morphism& h);
Morphism kron4(const Morphism& a, const Morphism& b, const Morphism& c, const Morphism& d);

/// g∘f; requires cod(f) = dom(g) as dimension lists.
Morphism compose(const Morphism& g, const Morphism& f);
Morphism compose3(const Morphism& h, const Morphism& g, const Morphism& f);
Morphism compose4(const Morphism& k, const Morphism& h, const Morphism& g, const Morphism& f);

/// Exact equality; throws ShapeMismatch when dimension lists differ.
bool mor_equal(const Morphism& f, const Morphism& g);

Morphism identity(FieldSpec f, const std::vector<SpaceRef>& spaces);
Morphism identity(FieldSpec f, const SpaceRef& space);
Morphism zero_morphism(FieldSpec f, const std::vector<SpaceRef>& dom,
                       const std::vector<SpaceRef>& cod);
/// The symmetry X⊗Y → Y⊗X of the ground category, as an explicit morphism.
Morphism flip(FieldSpec f, const SpaceRef& x, const SpaceRef& y);

/// Permutation of tensor legs: `order[k]` is the source position landing at
/// target position k; order must be a permutation of 0..n-1.
Morphism leg_permutation(FieldSpec f, const std::vector<SpaceRef>& source,
                         const std::vector<std::size_t>& order);

/// Deterministic splitmix64-based generator; stable across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t n);  // uniform-ish in [0, n)
  Scalar scalar(const FieldSpec& f);     // small random field element
  Scalar nonzero_scalar(const FieldSpec& f);

 private:
  std::uint64_t state_;
};

Morphism random_morphism(Rng& rng, FieldSpec f, const std::vector<SpaceRef>& dom,
                         const std::vector<SpaceRef>& cod);

/// Invertible square matrix on one space, for seeded change-of-basis tests.
Morphism random_invertible(Rng& rng, FieldSpec f, const SpaceRef& x);

}  // namespace wreathkit
