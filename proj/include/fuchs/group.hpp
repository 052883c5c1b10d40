#pragma once

#include "fuchs/matrix.hpp"
#include "fuchs/numeric.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fuchs {

enum class ElementKind { Permutation, Matrix, ProjectiveMatrix };

// Arithmetic context shared by all elements of one group; payloads are flat uint32 words.
class ElementDomain {
 public:
  static std::shared_ptr<const ElementDomain> permutations(std::uint32_t degree);
  static std::shared_ptr<const ElementDomain> matrices(FieldPtr field, std::uint32_t n);
  // Matrices modulo the scalars lambda*I with lambda^n = 1.
  static std::shared_ptr<const ElementDomain> projective(FieldPtr field, std::uint32_t n);

  ElementKind kind() const { return kind_; }
  std::uint32_t degree() const { return degree_; }
  const FieldPtr& field() const { return field_; }
  std::size_t width() const { return width_; }

  void identity(std::uint32_t* out) const;
  // out = a * b; for permutations the product applies a first.
  void multiply(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const;
  void inverse(const std::uint32_t* a, std::uint32_t* out) const;
  void canonicalize(std::uint32_t* x) const;
  bool compatible(const ElementDomain& other) const;
  std::string serialize(const std::uint32_t* x) const;
  std::string describe() const;

 private:
  ElementDomain() = default;

  ElementKind kind_ = ElementKind::Permutation;
  std::uint32_t degree_ = 0;
  std::size_t width_ = 0;
  FieldPtr field_;
  std::vector<FieldElement> scalars_;
};

using DomainPtr = std::shared_ptr<const ElementDomain>;

class GroupElement {
 public:
  GroupElement(DomainPtr domain, std::vector<std::uint32_t> payload);

  // Images of 0..n-1 (zero-based).
  static GroupElement permutation(std::vector<std::uint32_t> images);
  // Cycles on points 1..degree, e.g. {{1,2},{1,2,3}} style single cycles.
  static GroupElement from_cycles(std::uint32_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);
  static GroupElement matrix(const Matrix& m);
  static GroupElement projective(const Matrix& m);

  const DomainPtr& domain() const { return domain_; }
  const std::vector<std::uint32_t>& payload() const { return payload_; }
  std::string serialize() const { return domain_->serialize(payload_.data()); }

  GroupElement operator*(const GroupElement& other) const;
  GroupElement inverse() const;
  bool operator==(const GroupElement& other) const { return payload_ == other.payload_; }

 private:
  DomainPtr domain_;
  std::vector<std::uint32_t> payload_;
};

using ElementId = std::uint32_t;

class GroupTable {
 public:
  static constexpr std::size_t kDefaultCap = 2'000'000;
  static constexpr std::size_t kCayleyLimit = 2048;

  GroupTable(DomainPtr domain, std::vector<std::uint32_t> flat, std::vector<ElementId> generators, std::string label);
  GroupTable(GroupTable&&) noexcept;
  GroupTable& operator=(GroupTable&&) noexcept;
  ~GroupTable();

  const ElementDomain& domain() const { return *domain_; }
  const DomainPtr& domain_ptr() const { return domain_; }
  std::size_t order() const { return order_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  std::span<const std::uint32_t> payload(ElementId id) const {
    return {flat_.data() + static_cast<std::size_t>(id) * width_, width_};
  }
  GroupElement element(ElementId id) const;
  std::optional<ElementId> find(const std::uint32_t* payload) const;
  ElementId index_of(const GroupElement& x) const;

  ElementId identity() const { return identity_; }
  ElementId inverse(ElementId id) const { return inverse_[id]; }
  ElementId multiply(ElementId a, ElementId b) const;
  ElementId power(ElementId a, std::uint64_t k) const;
  std::uint32_t element_order(ElementId a) const;
  const std::vector<ElementId>& generators() const { return generators_; }

  // Builds the full multiplication table when |G| <= kCayleyLimit; idempotent and thread-safe.
  void prepare_cayley() const;

 private:
  friend GroupTable closure(const std::vector<GroupElement>& generators, std::size_t cap);
  struct Index;
  struct Cayley;

  DomainPtr domain_;
  std::size_t width_;
  std::size_t order_;
  std::vector<std::uint32_t> flat_;
  std::vector<ElementId> generators_;
  std::vector<ElementId> inverse_;
  ElementId identity_ = 0;
  std::string label_;
  std::unique_ptr<Index> index_;
  std::unique_ptr<Cayley> cayley_;
};

// Breadth-first closure; elements are re-indexed by ascending payload afterwards.
GroupTable closure(const std::vector<GroupElement>& generators, std::size_t cap = GroupTable::kDefaultCap);

enum class GroupFamily { GL, SL, Sp, PSL, Sym, Alt, Cyclic, Dihedral };

struct GroupSpec {
  GroupFamily family;
  std::uint32_t n = 0;  // natural-module dimension for matrix families, degree otherwise
  std::uint64_t q = 0;  // 0 for non-matrix families
  std::string to_string() const;
};

// Grammar: NAME '(' int (',' int)? ')' with NAME in GL SL Sp PSL S A C D.
GroupSpec parse_group_spec(std::string_view text);
// Closed-form order of the family instance.
BigInt group_order_formula(const GroupSpec& spec);
GroupTable standard_group(const GroupSpec& spec, std::size_t cap = GroupTable::kDefaultCap);

// Generators used by standard_group, exposed for tests.
std::vector<GroupElement> standard_generators(const GroupSpec& spec);

bool generates(const GroupTable& group, const std::vector<GroupElement>& xs);
// Order of the subgroup generated by the given ids.
std::size_t subgroup_order(const GroupTable& group, std::span<const ElementId> ids);

}  // namespace fuchs
