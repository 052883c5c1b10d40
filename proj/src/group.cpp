#include "fuchs/group.hpp"

#include "fuchs/error.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>

namespace fuchs {

// ---------------------------------------------------------------- domains

std::shared_ptr<const ElementDomain> ElementDomain::permutations(std::uint32_t degree) {
  if (degree == 0) fail(ErrorKind::Mismatch, "permutation degree must be positive");
  std::shared_ptr<ElementDomain> d(new ElementDomain());
  d->kind_ = ElementKind::Permutation;
  d->degree_ = degree;
  d->width_ = degree;
  return d;
}

std::shared_ptr<const ElementDomain> ElementDomain::matrices(FieldPtr field, std::uint32_t n) {
  if (n == 0 || n > Matrix::kMaxDim) fail(ErrorKind::TooLarge, "matrix dimension out of range");
  std::shared_ptr<ElementDomain> d(new ElementDomain());
  d->kind_ = ElementKind::Matrix;
  d->degree_ = n;
  d->width_ = static_cast<std::size_t>(n) * n;
  d->field_ = std::move(field);
  return d;
}

std::shared_ptr<const ElementDomain> ElementDomain::projective(FieldPtr field, std::uint32_t n) {
  std::shared_ptr<ElementDomain> d(new ElementDomain());
  d->kind_ = ElementKind::ProjectiveMatrix;
  d->degree_ = n;
  d->width_ = static_cast<std::size_t>(n) * n;
  d->field_ = std::move(field);
  const Field& f = *d->field_;
  for (std::uint64_t code = 1; code < f.order(); ++code) {
    const FieldElement x{static_cast<std::uint32_t>(code)};
    if (f.pow(x, n) == f.one()) d->scalars_.push_back(x);
  }
  return d;
}

void ElementDomain::identity(std::uint32_t* out) const {
  if (kind_ == ElementKind::Permutation) {
    for (std::uint32_t i = 0; i < degree_; ++i) out[i] = i;
    return;
  }
  std::fill(out, out + width_, 0U);
  for (std::uint32_t i = 0; i < degree_; ++i) out[i * degree_ + i] = 1;
}

void ElementDomain::multiply(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
  if (kind_ == ElementKind::Permutation) {
    for (std::uint32_t i = 0; i < degree_; ++i) out[i] = b[a[i]];
    return;
  }
  const Field& f = *field_;
  const std::uint32_t n = degree_;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      FieldElement acc{0};
      for (std::uint32_t k = 0; k < n; ++k) {
        const std::uint32_t x = a[i * n + k], y = b[k * n + j];
        if (x != 0 && y != 0) acc = f.add(acc, f.mul({x}, {y}));
      }
      out[i * n + j] = acc.code;
    }
  }
  if (kind_ == ElementKind::ProjectiveMatrix) canonicalize(out);
}

void ElementDomain::inverse(const std::uint32_t* a, std::uint32_t* out) const {
  if (kind_ == ElementKind::Permutation) {
    for (std::uint32_t i = 0; i < degree_; ++i) out[a[i]] = i;
    return;
  }
  Matrix m(field_, degree_);
  for (std::uint32_t i = 0; i < degree_; ++i) {
    for (std::uint32_t j = 0; j < degree_; ++j) m.set(i, j, {a[i * degree_ + j]});
  }
  const Matrix inv = m.inverse();
  for (std::size_t k = 0; k < width_; ++k) out[k] = inv.entries()[k].code;
  if (kind_ == ElementKind::ProjectiveMatrix) canonicalize(out);
}

void ElementDomain::canonicalize(std::uint32_t* x) const {
  if (kind_ != ElementKind::ProjectiveMatrix) return;
  // Representative: lexicographically least payload among the scalar multiples.
  const Field& f = *field_;
  std::vector<std::uint32_t> best(x, x + width_), cand(width_);
  for (const auto s : scalars_) {
    for (std::size_t k = 0; k < width_; ++k) cand[k] = f.mul(s, {x[k]}).code;
    if (cand < best) best = cand;
  }
  std::copy(best.begin(), best.end(), x);
}

bool ElementDomain::compatible(const ElementDomain& other) const {
  if (kind_ != other.kind_ || degree_ != other.degree_) return false;
  if (kind_ == ElementKind::Permutation) return true;
  return field_->order() == other.field_->order() && field_->characteristic() == other.field_->characteristic();
}

std::string ElementDomain::serialize(const std::uint32_t* x) const {
  std::string out = "[";
  if (kind_ == ElementKind::Permutation) {
    for (std::uint32_t i = 0; i < degree_; ++i) {
      if (i) out += ",";
      out += std::to_string(x[i] + 1);
    }
    return out + "]";
  }
  for (std::uint32_t i = 0; i < degree_; ++i) {
    if (i) out += ";";
    for (std::uint32_t j = 0; j < degree_; ++j) {
      if (j) out += ",";
      out += field_->format({x[i * degree_ + j]});
    }
  }
  return out + "]";
}

std::string ElementDomain::describe() const {
  switch (kind_) {
    case ElementKind::Permutation: return "permutations of degree " + std::to_string(degree_);
    case ElementKind::Matrix: return std::to_string(degree_) + "x" + std::to_string(degree_) + " matrices over " + field_->name();
    case ElementKind::ProjectiveMatrix:
      return "projective " + std::to_string(degree_) + "x" + std::to_string(degree_) + " matrices over " + field_->name();
  }
  return "";
}

// ---------------------------------------------------------------- elements

GroupElement::GroupElement(DomainPtr domain, std::vector<std::uint32_t> payload)
    : domain_(std::move(domain)), payload_(std::move(payload)) {
  if (payload_.size() != domain_->width()) fail(ErrorKind::Mismatch, "payload width does not match its domain");
  domain_->canonicalize(payload_.data());
}

GroupElement GroupElement::permutation(std::vector<std::uint32_t> images) {
  const auto n = static_cast<std::uint32_t>(images.size());
  std::vector<bool> seen(n, false);
  for (auto v : images) {
    if (v >= n || seen[v]) fail(ErrorKind::Mismatch, "image list is not a permutation");
    seen[v] = true;
  }
  return GroupElement(ElementDomain::permutations(n), std::move(images));
}

GroupElement GroupElement::from_cycles(std::uint32_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0U);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto from = cycle[i], to = cycle[(i + 1) % cycle.size()];
      if (from < 1 || from > degree || to < 1 || to > degree) fail(ErrorKind::Mismatch, "cycle point out of range");
      images[from - 1] = to - 1;
    }
  }
  return permutation(std::move(images));
}

namespace {

std::vector<std::uint32_t> matrix_payload(const Matrix& m) {
  std::vector<std::uint32_t> out(m.entries().size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = m.entries()[k].code;
  return out;
}

}  // namespace

GroupElement GroupElement::matrix(const Matrix& m) {
  if (m.determinant().code == 0) fail(ErrorKind::Singular, "group elements must be invertible");
  return GroupElement(ElementDomain::matrices(m.field_ptr(), static_cast<std::uint32_t>(m.dim())), matrix_payload(m));
}

GroupElement GroupElement::projective(const Matrix& m) {
  if (m.determinant().code == 0) fail(ErrorKind::Singular, "group elements must be invertible");
  return GroupElement(ElementDomain::projective(m.field_ptr(), static_cast<std::uint32_t>(m.dim())), matrix_payload(m));
}

GroupElement GroupElement::operator*(const GroupElement& other) const {
  if (!domain_->compatible(*other.domain_)) fail(ErrorKind::IncompatibleGenerators, "elements live in different domains");
  std::vector<std::uint32_t> out(payload_.size());
  domain_->multiply(payload_.data(), other.payload_.data(), out.data());
  return GroupElement(domain_, std::move(out));
}

GroupElement GroupElement::inverse() const {
  std::vector<std::uint32_t> out(payload_.size());
  domain_->inverse(payload_.data(), out.data());
  return GroupElement(domain_, std::move(out));
}

// ---------------------------------------------------------------- flat hash set

namespace {

std::uint64_t hash_words(const std::uint32_t* x, std::size_t width) {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL;
  for (std::size_t i = 0; i < width; ++i) {
    h ^= x[i] + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return h;
}

// Open addressing over ids into an external flat payload array; slot value 0 means empty.
class FlatIndex {
 public:
  explicit FlatIndex(std::size_t width) : width_(width) { slots_.assign(1024, 0); }

  std::optional<ElementId> find(const std::vector<std::uint32_t>& flat, const std::uint32_t* x) const {
    const std::size_t mask = slots_.size() - 1;
    std::size_t pos = hash_words(x, width_) & mask;
    while (slots_[pos] != 0) {
      const ElementId id = slots_[pos] - 1;
      if (std::equal(x, x + width_, flat.data() + static_cast<std::size_t>(id) * width_)) return id;
      pos = (pos + 1) & mask;
    }
    return std::nullopt;
  }

  void insert(const std::vector<std::uint32_t>& flat, ElementId id) {
    if (2 * (count_ + 1) > slots_.size()) rehash(flat, slots_.size() * 2);
    place(flat, id);
    ++count_;
  }

  void rebuild(const std::vector<std::uint32_t>& flat, std::size_t count) {
    std::size_t size = 1024;
    while (size < 2 * count + 2) size *= 2;
    slots_.assign(size, 0);
    count_ = 0;
    for (std::size_t id = 0; id < count; ++id) insert(flat, static_cast<ElementId>(id));
  }

 private:
  void place(const std::vector<std::uint32_t>& flat, ElementId id) {
    const std::size_t mask = slots_.size() - 1;
    std::size_t pos = hash_words(flat.data() + static_cast<std::size_t>(id) * width_, width_) & mask;
    while (slots_[pos] != 0) pos = (pos + 1) & mask;
    slots_[pos] = id + 1;
  }

  void rehash(const std::vector<std::uint32_t>& flat, std::size_t size) {
    std::vector<std::uint32_t> old;
    old.swap(slots_);
    slots_.assign(size, 0);
    for (auto s : old) {
      if (s != 0) place(flat, s - 1);
    }
  }

  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<std::uint32_t> slots_;
};

}  // namespace

struct GroupTable::Index {
  explicit Index(std::size_t width) : set(width) {}
  FlatIndex set;
};

struct GroupTable::Cayley {
  std::once_flag once;
  std::vector<ElementId> table;
};

// ---------------------------------------------------------------- group table

GroupTable::GroupTable(DomainPtr domain, std::vector<std::uint32_t> flat, std::vector<ElementId> generators, std::string label)
    : domain_(std::move(domain)),
      width_(domain_->width()),
      order_(flat.size() / domain_->width()),
      flat_(std::move(flat)),
      generators_(std::move(generators)),
      label_(std::move(label)),
      index_(std::make_unique<Index>(domain_->width())),
      cayley_(std::make_unique<Cayley>()) {
  index_->set.rebuild(flat_, order_);
  std::vector<std::uint32_t> buf(width_);
  domain_->identity(buf.data());
  const auto id = find(buf.data());
  if (!id) fail(ErrorKind::Mismatch, "element list lacks the identity");
  identity_ = *id;
  inverse_.resize(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    domain_->inverse(flat_.data() + i * width_, buf.data());
    const auto inv = find(buf.data());
    if (!inv) fail(ErrorKind::Mismatch, "element list is not closed under inverses");
    inverse_[i] = *inv;
  }
}

GroupTable::GroupTable(GroupTable&&) noexcept = default;
GroupTable& GroupTable::operator=(GroupTable&&) noexcept = default;
GroupTable::~GroupTable() = default;

GroupElement GroupTable::element(ElementId id) const {
  const auto p = payload(id);
  return GroupElement(domain_, std::vector<std::uint32_t>(p.begin(), p.end()));
}

std::optional<ElementId> GroupTable::find(const std::uint32_t* x) const { return index_->set.find(flat_, x); }

ElementId GroupTable::index_of(const GroupElement& x) const {
  if (!domain_->compatible(*x.domain())) fail(ErrorKind::NotAMember, "element " + x.serialize() + " has the wrong shape");
  const auto id = find(x.payload().data());
  if (!id) fail(ErrorKind::NotAMember, x.serialize());
  return *id;
}

void GroupTable::prepare_cayley() const {
  if (order_ > kCayleyLimit) return;
  std::call_once(cayley_->once, [this] {
    std::vector<ElementId> table(order_ * order_);
    std::vector<std::uint32_t> buf(width_);
    for (std::size_t a = 0; a < order_; ++a) {
      for (std::size_t b = 0; b < order_; ++b) {
        domain_->multiply(flat_.data() + a * width_, flat_.data() + b * width_, buf.data());
        table[a * order_ + b] = *find(buf.data());
      }
    }
    cayley_->table = std::move(table);
  });
}

ElementId GroupTable::multiply(ElementId a, ElementId b) const {
  if (!cayley_->table.empty()) return cayley_->table[static_cast<std::size_t>(a) * order_ + b];
  thread_local std::vector<std::uint32_t> buf;
  buf.resize(width_);
  domain_->multiply(flat_.data() + static_cast<std::size_t>(a) * width_, flat_.data() + static_cast<std::size_t>(b) * width_,
                    buf.data());
  const auto id = find(buf.data());
  if (!id) fail(ErrorKind::Mismatch, "product escaped the group table");
  return *id;
}

ElementId GroupTable::power(ElementId a, std::uint64_t k) const {
  ElementId result = identity_;
  ElementId base = a;
  while (k > 0) {
    if (k & 1U) result = multiply(result, base);
    k >>= 1U;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

std::uint32_t GroupTable::element_order(ElementId a) const {
  std::uint32_t k = 1;
  ElementId x = a;
  while (x != identity_) {
    x = multiply(x, a);
    ++k;
  }
  return k;
}

GroupTable closure(const std::vector<GroupElement>& generators, std::size_t cap) {
  if (generators.empty()) fail(ErrorKind::IncompatibleGenerators, "no generators given");
  const DomainPtr domain = generators.front().domain();
  for (const auto& g : generators) {
    if (!domain->compatible(*g.domain())) fail(ErrorKind::IncompatibleGenerators, "generators differ in field or degree");
  }
  const std::size_t width = domain->width();
  std::vector<std::uint32_t> flat(width);
  domain->identity(flat.data());
  FlatIndex index(width);
  index.insert(flat, 0);
  std::vector<std::uint32_t> buf(width);
  std::size_t count = 1;
  for (std::size_t head = 0; head < count; ++head) {
    for (const auto& g : generators) {
      domain->multiply(flat.data() + head * width, g.payload().data(), buf.data());
      if (index.find(flat, buf.data())) continue;
      if (count >= cap) fail(ErrorKind::CapExceeded, "closure reached " + std::to_string(count) + " elements (cap " + std::to_string(cap) + ")");
      flat.insert(flat.end(), buf.begin(), buf.end());
      index.insert(flat, static_cast<ElementId>(count));
      ++count;
    }
  }
  // Deterministic indexing: ascending payload order.
  std::vector<ElementId> perm(count);
  std::iota(perm.begin(), perm.end(), 0U);
  std::sort(perm.begin(), perm.end(), [&](ElementId x, ElementId y) {
    return std::lexicographical_compare(flat.begin() + x * width, flat.begin() + (x + 1) * width, flat.begin() + y * width,
                                        flat.begin() + (y + 1) * width);
  });
  std::vector<std::uint32_t> sorted(count * width);
  for (std::size_t i = 0; i < count; ++i) {
    std::copy(flat.begin() + perm[i] * width, flat.begin() + (perm[i] + 1) * width, sorted.begin() + i * width);
  }
  flat.clear();
  flat.shrink_to_fit();
  GroupTable table(domain, std::move(sorted), {}, "");
  for (const auto& g : generators) table.generators_.push_back(table.index_of(g));
  return table;
}

// ---------------------------------------------------------------- standard groups

std::string GroupSpec::to_string() const {
  switch (family) {
    case GroupFamily::GL: return "GL(" + std::to_string(n) + "," + std::to_string(q) + ")";
    case GroupFamily::SL: return "SL(" + std::to_string(n) + "," + std::to_string(q) + ")";
    case GroupFamily::Sp: return "Sp(" + std::to_string(n) + "," + std::to_string(q) + ")";
    case GroupFamily::PSL: return "PSL(" + std::to_string(n) + "," + std::to_string(q) + ")";
    case GroupFamily::Sym: return "S(" + std::to_string(n) + ")";
    case GroupFamily::Alt: return "A(" + std::to_string(n) + ")";
    case GroupFamily::Cyclic: return "C(" + std::to_string(n) + ")";
    case GroupFamily::Dihedral: return "D(" + std::to_string(n) + ")";
  }
  return "";
}

GroupSpec parse_group_spec(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  const auto open = s.find('('), close = s.rfind(')');
  if (open == std::string::npos || close != s.size() - 1 || close < open) {
    fail(ErrorKind::ParseError, "group spec '" + std::string(text) + "' must look like NAME(int[,int])");
  }
  const std::string name = s.substr(0, open);
  const std::string args = s.substr(open + 1, close - open - 1);
  std::vector<std::uint64_t> nums;
  std::size_t start = 0;
  while (start <= args.size()) {
    const auto comma = args.find(',', start);
    const std::string tok = args.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (tok.empty() || tok.size() > 12 || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      fail(ErrorKind::ParseError, "bad integer '" + tok + "' in group spec '" + std::string(text) + "'");
    }
    nums.push_back(std::stoull(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  GroupSpec spec{};
  auto need = [&](std::size_t count) {
    if (nums.size() != count) fail(ErrorKind::ParseError, name + " takes " + std::to_string(count) + " argument(s)");
  };
  if (name == "GL" || name == "SL" || name == "Sp" || name == "PSL") {
    need(2);
    spec.family = name == "GL" ? GroupFamily::GL : name == "SL" ? GroupFamily::SL : name == "Sp" ? GroupFamily::Sp : GroupFamily::PSL;
    spec.n = static_cast<std::uint32_t>(nums[0]);
    spec.q = nums[1];
    if (spec.n < 1) fail(ErrorKind::ParseError, "dimension must be positive");
    if (spec.family == GroupFamily::Sp && spec.n % 2 != 0) fail(ErrorKind::ParseError, "Sp dimension must be even");
    if (prime_power(spec.q).first == 0) fail(ErrorKind::NotPrime, std::to_string(spec.q) + " is not a prime power");
  } else if (name == "S" || name == "A" || name == "C" || name == "D") {
    need(1);
    spec.family = name == "S" ? GroupFamily::Sym : name == "A" ? GroupFamily::Alt : name == "C" ? GroupFamily::Cyclic : GroupFamily::Dihedral;
    spec.n = static_cast<std::uint32_t>(nums[0]);
    if (spec.n < 1) fail(ErrorKind::ParseError, "degree must be positive");
  } else if (name == "SO" || name == "O" || name == "Omega") {
    fail(ErrorKind::UnsupportedFamily, name + " matrix groups are not constructed");
  } else {
    fail(ErrorKind::ParseError, "unknown group family '" + name + "'");
  }
  return spec;
}

namespace {

BigInt order_gl(std::uint64_t n, std::uint64_t q) {
  BigInt qn = pow_big(q, n), out = 1;
  for (std::uint64_t i = 0; i < n; ++i) out *= qn - pow_big(q, i);
  return out;
}

BigInt order_sp(std::uint64_t half, std::uint64_t q) {
  BigInt out = pow_big(q, half * half);
  for (std::uint64_t i = 1; i <= half; ++i) out *= pow_big(q, 2 * i) - 1;
  return out;
}

FieldPtr field_for(std::uint64_t q) {
  const auto [p, a] = prime_power(q);
  if (p == 0) fail(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  return field_make(static_cast<std::uint32_t>(p), a);
}

Matrix elementary(const FieldPtr& f, std::uint32_t n, std::uint32_t i, std::uint32_t j, FieldElement alpha) {
  Matrix m = Matrix::identity(f, n);
  m.set(i, j, alpha);
  return m;
}

std::vector<Matrix> sl_generators(const FieldPtr& f, std::uint32_t n) {
  std::vector<Matrix> gens;
  const Field& field = *f;
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    for (std::uint32_t k = 0; k < field.degree(); ++k) {
      const FieldElement alpha = field.pow(field.generator(), k);
      gens.push_back(elementary(f, n, i, i + 1, alpha));
      gens.push_back(elementary(f, n, i + 1, i, alpha));
    }
  }
  return gens;
}

// Gram matrix [[0, I], [-I, 0]] of the standard alternating form.
Matrix symplectic_form(const FieldPtr& f, std::uint32_t dim) {
  const std::uint32_t half = dim / 2;
  Matrix omega(f, dim);
  for (std::uint32_t i = 0; i < half; ++i) {
    omega.set(i, half + i, f->one());
    omega.set(half + i, i, f->neg(f->one()));
  }
  return omega;
}

}  // namespace

BigInt group_order_formula(const GroupSpec& spec) {
  switch (spec.family) {
    case GroupFamily::GL: return order_gl(spec.n, spec.q);
    case GroupFamily::SL: return order_gl(spec.n, spec.q) / (spec.q - 1);
    case GroupFamily::Sp: return order_sp(spec.n / 2, spec.q);
    case GroupFamily::PSL: return order_gl(spec.n, spec.q) / (spec.q - 1) / gcd_u64(spec.n, spec.q - 1);
    case GroupFamily::Sym: return factorial(spec.n);
    case GroupFamily::Alt: return spec.n < 2 ? BigInt(1) : BigInt(factorial(spec.n) / 2);
    case GroupFamily::Cyclic: return spec.n;
    case GroupFamily::Dihedral: return BigInt(2) * spec.n;
  }
  return 0;
}

std::vector<GroupElement> standard_generators(const GroupSpec& spec) {
  std::vector<GroupElement> gens;
  switch (spec.family) {
    case GroupFamily::GL:
    case GroupFamily::SL:
    case GroupFamily::PSL: {
      const FieldPtr f = field_for(spec.q);
      for (const auto& m : sl_generators(f, spec.n)) {
        gens.push_back(spec.family == GroupFamily::PSL ? GroupElement::projective(m) : GroupElement::matrix(m));
      }
      if (spec.family == GroupFamily::GL) {
        std::vector<FieldElement> diag(spec.n, f->one());
        diag[0] = f->generator();
        gens.push_back(GroupElement::matrix(Matrix::diagonal(f, diag)));
      }
      if (gens.empty()) {
        gens.push_back(spec.family == GroupFamily::PSL ? GroupElement::projective(Matrix::identity(f, spec.n))
                                                       : GroupElement::matrix(Matrix::identity(f, spec.n)));
      }
      break;
    }
    case GroupFamily::Sp: {
      const FieldPtr f = field_for(spec.q);
      const Field& field = *f;
      const std::uint32_t dim = spec.n;
      const Matrix omega = symplectic_form(f, dim);
      std::vector<std::vector<FieldElement>> vectors;
      for (std::uint32_t i = 0; i < dim; ++i) {
        std::vector<FieldElement> v(dim, field.zero());
        v[i] = field.one();
        vectors.push_back(v);
        for (std::uint32_t j = i + 1; j < dim; ++j) {
          auto w = v;
          w[j] = field.one();
          vectors.push_back(w);
        }
      }
      for (const auto& v : vectors) {
        // w = omega * v; transvection x -> x + alpha <x, v> v with <x, v> = x^T omega v.
        std::vector<FieldElement> w(dim, field.zero());
        for (std::uint32_t r = 0; r < dim; ++r) {
          for (std::uint32_t c = 0; c < dim; ++c) w[r] = field.add(w[r], field.mul(omega(r, c), v[c]));
        }
        for (std::uint32_t k = 0; k <= field.degree(); ++k) {
          const FieldElement alpha = field.pow(field.generator(), k);
          Matrix t = Matrix::identity(f, dim);
          for (std::uint32_t r = 0; r < dim; ++r) {
            for (std::uint32_t c = 0; c < dim; ++c) t.set(r, c, field.add(t(r, c), field.mul(alpha, field.mul(v[r], w[c]))));
          }
          gens.push_back(GroupElement::matrix(t));
        }
      }
      break;
    }
    case GroupFamily::Sym:
      if (spec.n == 1) {
        gens.push_back(GroupElement::permutation({0}));
      } else {
        std::vector<std::uint32_t> cycle(spec.n);
        std::iota(cycle.begin(), cycle.end(), 1U);
        gens.push_back(GroupElement::from_cycles(spec.n, {{1, 2}}));
        if (spec.n > 2) gens.push_back(GroupElement::from_cycles(spec.n, {cycle}));
      }
      break;
    case GroupFamily::Alt:
      if (spec.n < 3) {
        gens.push_back(GroupElement::permutation(spec.n == 2 ? std::vector<std::uint32_t>{0, 1} : std::vector<std::uint32_t>{0}));
      } else {
        for (std::uint32_t k = 3; k <= spec.n; ++k) gens.push_back(GroupElement::from_cycles(spec.n, {{1, 2, k}}));
      }
      break;
    case GroupFamily::Cyclic: {
      std::vector<std::uint32_t> images(spec.n);
      for (std::uint32_t i = 0; i < spec.n; ++i) images[i] = (i + 1) % spec.n;
      gens.push_back(GroupElement::permutation(images));
      break;
    }
    case GroupFamily::Dihedral:
      if (spec.n == 1) {
        gens.push_back(GroupElement::from_cycles(2, {{1, 2}}));
      } else if (spec.n == 2) {
        gens.push_back(GroupElement::from_cycles(4, {{1, 2}}));
        gens.push_back(GroupElement::from_cycles(4, {{3, 4}}));
      } else {
        std::vector<std::uint32_t> rot(spec.n), refl(spec.n);
        for (std::uint32_t i = 0; i < spec.n; ++i) {
          rot[i] = (i + 1) % spec.n;
          refl[i] = (spec.n - i) % spec.n;
        }
        gens.push_back(GroupElement::permutation(rot));
        gens.push_back(GroupElement::permutation(refl));
      }
      break;
  }
  return gens;
}

GroupTable standard_group(const GroupSpec& spec, std::size_t cap) {
  const BigInt expected = group_order_formula(spec);
  if (expected > cap) {
    fail(ErrorKind::CapExceeded, spec.to_string() + " has order " + expected.str() + " above the cap " + std::to_string(cap));
  }
  GroupTable g = closure(standard_generators(spec), cap);
  if (BigInt(g.order()) != expected) {
    fail(ErrorKind::Mismatch, spec.to_string() + " closed to order " + std::to_string(g.order()) + ", formula gives " + expected.str());
  }
  g.set_label(spec.to_string());
  return g;
}

std::size_t subgroup_order(const GroupTable& group, std::span<const ElementId> ids) {
  std::vector<char> seen(group.order(), 0);
  std::vector<ElementId> queue{group.identity()};
  seen[group.identity()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const ElementId g : ids) {
      const ElementId y = group.multiply(queue[head], g);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return queue.size();
}

bool generates(const GroupTable& group, const std::vector<GroupElement>& xs) {
  std::vector<ElementId> ids;
  for (const auto& x : xs) ids.push_back(group.index_of(x));
  return subgroup_order(group, ids) == group.order();
}

}  // namespace fuchs
