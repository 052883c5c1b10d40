#include "fuchs/levi.hpp"

#include "fuchs/error.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

namespace fuchs {

namespace {

std::string join_ints(const std::vector<int>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string family_name(ClassicalFamily f) {
  switch (f) {
    case ClassicalFamily::GL: return "GL";
    case ClassicalFamily::Sp: return "Sp";
    case ClassicalFamily::O: return "O";
  }
  return "?";
}

ClassicalFamily tail_family(Ambient a) { return a == Ambient::Sp ? ClassicalFamily::Sp : ClassicalFamily::O; }

bool has_tail(Ambient a) { return a == Ambient::Sp || a == Ambient::SO; }

std::int64_t tail_dimension(Ambient a, int tail) {
  const std::int64_t t = tail;
  return a == Ambient::Sp ? t * (t + 1) / 2 : t * (t - 1) / 2;
}

int parse_int(const std::string& tok, std::string_view whole) {
  if (tok.empty() || tok.size() > 6 || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    fail(ErrorKind::ParseError, "bad integer '" + tok + "' in Levi spec '" + std::string(whole) + "'");
  }
  return std::stoi(tok);
}

std::vector<int> parse_list(const std::string& s, std::string_view whole) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(',', start);
    out.push_back(parse_int(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start), whole));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

int JordanType::dimension() const {
  int d = 0;
  for (std::size_t i = 0; i < mult.size(); ++i) d += static_cast<int>(i + 1) * mult[i];
  return d;
}

bool JordanType::is_identity() const {
  for (std::size_t i = 1; i < mult.size(); ++i) {
    if (mult[i] != 0) return false;
  }
  return true;
}

std::vector<int> JordanType::partition() const {
  std::vector<int> out;
  for (std::size_t i = mult.size(); i-- > 0;) out.insert(out.end(), mult[i], static_cast<int>(i + 1));
  return out;
}

std::string JordanType::to_string() const {
  const auto parts = partition();
  return parts.empty() ? "-" : join_ints(parts, ",");
}

JordanType jordan_from_partition(ClassicalFamily family, const std::vector<int>& parts) {
  JordanType t{family, {}};
  for (int p : parts) {
    if (p <= 0) fail(ErrorKind::InvalidType, "block sizes must be positive");
    if (static_cast<std::size_t>(p) > t.mult.size()) t.mult.resize(p, 0);
    ++t.mult[p - 1];
  }
  return t;
}

bool parity_ok(const JordanType& t) {
  for (std::size_t i = 0; i < t.mult.size(); ++i) {
    if (t.mult[i] < 0) return false;
    const bool odd_size = (i % 2) == 0;
    if (t.family == ClassicalFamily::Sp && odd_size && t.mult[i] % 2 != 0) return false;
    if (t.family == ClassicalFamily::O && !odd_size && t.mult[i] % 2 != 0) return false;
  }
  return t.family != ClassicalFamily::Sp || t.dimension() % 2 == 0;
}

std::int64_t dim_cent_unipotent(const JordanType& t) {
  if (!parity_ok(t)) fail(ErrorKind::InvalidType, family_name(t.family) + " type " + t.to_string() + " violates block parity");
  std::int64_t s = 0;
  std::int64_t odd_blocks = 0;
  const std::size_t len = t.mult.size();
  for (std::size_t i = 0; i < len; ++i) {
    const std::int64_t size = static_cast<std::int64_t>(i) + 1;
    const std::int64_t bi = t.mult[i];
    s += size * bi * bi;
    for (std::size_t j = i + 1; j < len; ++j) s += 2 * size * bi * t.mult[j];
    if (size % 2 == 1) odd_blocks += bi;
  }
  switch (t.family) {
    case ClassicalFamily::GL: return s;
    case ClassicalFamily::Sp: return (s + odd_blocks) / 2;
    case ClassicalFamily::O: return (s - odd_blocks) / 2;
  }
  return s;
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<JordanType> unipotent_types(ClassicalFamily family, int dim) {
  if (family == ClassicalFamily::Sp && dim % 2 != 0) fail(ErrorKind::InvalidType, "Sp needs even dimension");
  std::vector<JordanType> out;
  for (const auto& p : partitions_of(dim)) {
    auto t = jordan_from_partition(family, p);
    if (parity_ok(t)) out.push_back(std::move(t));
  }
  return out;
}

std::string ambient_name(Ambient a) {
  switch (a) {
    case Ambient::GL: return "GL";
    case Ambient::SL: return "SL";
    case Ambient::Sp: return "Sp";
    case Ambient::SO: return "SO";
  }
  return "?";
}

LeviShape make_levi(Ambient ambient, int dim, std::vector<int> gl_blocks, int tail) {
  if (dim < 1) fail(ErrorKind::InvalidType, "Levi ambient dimension must be positive");
  for (int k : gl_blocks) {
    if (k <= 0) fail(ErrorKind::InvalidType, "GL block sizes must be positive");
  }
  std::sort(gl_blocks.begin(), gl_blocks.end(), std::greater<>());
  const int total = std::accumulate(gl_blocks.begin(), gl_blocks.end(), 0);
  if (!has_tail(ambient)) {
    if (tail != 0 || total != dim) {
      fail(ErrorKind::InvalidType, ambient_name(ambient) + "(" + std::to_string(dim) + ") blocks must sum to " + std::to_string(dim));
    }
  } else {
    if (ambient == Ambient::Sp && (dim % 2 != 0 || tail % 2 != 0)) fail(ErrorKind::InvalidType, "Sp dimensions must be even");
    if (tail < 0 || 2 * total + tail != dim) {
      fail(ErrorKind::InvalidType, "2*sum(blocks) + tail must equal " + std::to_string(dim));
    }
  }
  return LeviShape{ambient, dim, std::move(gl_blocks), tail};
}

LeviShape parse_levi(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s += c;
  }
  const auto open = s.find('(');
  const auto close = s.find(')');
  if (open == std::string::npos || close == std::string::npos || close < open) {
    fail(ErrorKind::ParseError, "Levi spec '" + s + "' must look like GL(4):2,2 or Sp(8):gl=2,2;tail=0");
  }
  const std::string fam = s.substr(0, open);
  const int dim = parse_int(s.substr(open + 1, close - open - 1), text);
  Ambient a;
  if (fam == "GL") a = Ambient::GL;
  else if (fam == "SL") a = Ambient::SL;
  else if (fam == "Sp") a = Ambient::Sp;
  else if (fam == "SO") a = Ambient::SO;
  else fail(ErrorKind::ParseError, "unknown Levi ambient '" + fam + "'");
  std::string body;
  if (close + 1 < s.size()) {
    if (s[close + 1] != ':') fail(ErrorKind::ParseError, "expected ':' after " + s.substr(0, close + 1));
    body = s.substr(close + 2);
  }
  if (!has_tail(a)) {
    auto blocks = body.empty() ? std::vector<int>{dim} : parse_list(body, text);
    return make_levi(a, dim, std::move(blocks), 0);
  }
  std::vector<int> blocks;
  std::optional<int> tail;
  std::size_t start = 0;
  while (start <= body.size() && !body.empty()) {
    const auto pos = body.find(';', start);
    const std::string item = body.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    if (item.rfind("gl=", 0) == 0) blocks = parse_list(item.substr(3), text);
    else if (item.rfind("tail=", 0) == 0) tail = parse_int(item.substr(5), text);
    else fail(ErrorKind::ParseError, "unexpected item '" + item + "' in Levi spec");
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  const int total = std::accumulate(blocks.begin(), blocks.end(), 0);
  return make_levi(a, dim, std::move(blocks), tail.value_or(dim - 2 * total));
}

std::string to_string(const LeviShape& shape) {
  std::string out = ambient_name(shape.ambient) + "(" + std::to_string(shape.dim) + "):";
  if (!has_tail(shape.ambient)) return out + join_ints(shape.gl_blocks, ",");
  return out + "gl=" + join_ints(shape.gl_blocks, ",") + ";tail=" + std::to_string(shape.tail);
}

std::int64_t ambient_dimension(Ambient ambient, int dim) {
  const std::int64_t n = dim;
  switch (ambient) {
    case Ambient::GL: return n * n;
    case Ambient::SL: return n * n - 1;
    case Ambient::Sp: return n * (n + 1) / 2;
    case Ambient::SO: return n * (n - 1) / 2;
  }
  return 0;
}

std::int64_t levi_dimension(const LeviShape& shape) {
  std::int64_t d = 0;
  for (int k : shape.gl_blocks) d += static_cast<std::int64_t>(k) * k;
  if (shape.ambient == Ambient::SL) d -= 1;
  if (has_tail(shape.ambient)) d += tail_dimension(shape.ambient, shape.tail);
  return d;
}

bool is_torus(const LeviShape& shape) {
  const bool unit_blocks = std::all_of(shape.gl_blocks.begin(), shape.gl_blocks.end(), [](int k) { return k == 1; });
  if (!has_tail(shape.ambient)) return unit_blocks;
  return unit_blocks && (shape.ambient == Ambient::Sp ? shape.tail == 0 : shape.tail <= 2);
}

std::vector<LeviShape> all_levi_shapes(Ambient ambient, int dim) {
  std::vector<LeviShape> out;
  if (!has_tail(ambient)) {
    for (auto& p : partitions_of(dim)) {
      if (p.size() > 1) out.push_back(make_levi(ambient, dim, std::move(p), 0));
    }
    return out;
  }
  if (ambient == Ambient::Sp && dim % 2 != 0) fail(ErrorKind::InvalidType, "Sp needs even dimension");
  for (int j = 1; 2 * j <= dim; ++j) {
    for (auto& p : partitions_of(j)) out.push_back(make_levi(ambient, dim, std::move(p), dim - 2 * j));
  }
  return out;
}

std::vector<LeviUnipotent> levi_unipotent_classes(const LeviShape& shape, std::uint64_t cap) {
  std::vector<std::vector<JordanType>> factors;
  for (int k : shape.gl_blocks) factors.push_back(unipotent_types(ClassicalFamily::GL, k));
  if (has_tail(shape.ambient)) factors.push_back(unipotent_types(tail_family(shape.ambient), shape.tail));
  std::uint64_t total = 1;
  for (const auto& f : factors) {
    total *= f.size();
    if (total > cap) fail(ErrorKind::TooExpensive, "Levi " + to_string(shape) + " has more than " + std::to_string(cap) + " unipotent classes");
  }
  std::vector<LeviUnipotent> out;
  out.reserve(total);
  std::vector<std::size_t> idx(factors.size(), 0);
  while (true) {
    LeviUnipotent u;
    u.reserve(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) u.push_back(factors[i][idx[i]]);
    out.push_back(std::move(u));
    std::size_t pos = factors.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < factors[pos].size()) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
    if (factors.empty()) return out;
  }
}

JordanType fuse_to_ambient(const LeviShape& shape, const LeviUnipotent& u) {
  const std::size_t expected = shape.gl_blocks.size() + (has_tail(shape.ambient) ? 1 : 0);
  if (u.size() != expected) {
    fail(ErrorKind::Mismatch, "expected " + std::to_string(expected) + " factor types for " + to_string(shape) + ", got " + std::to_string(u.size()));
  }
  const bool classical = has_tail(shape.ambient);
  JordanType out{classical ? tail_family(shape.ambient) : ClassicalFamily::GL, {}};
  auto add = [&](const JordanType& t, int weight) {
    if (t.mult.size() > out.mult.size()) out.mult.resize(t.mult.size(), 0);
    for (std::size_t i = 0; i < t.mult.size(); ++i) out.mult[i] += weight * t.mult[i];
  };
  for (std::size_t i = 0; i < shape.gl_blocks.size(); ++i) {
    if (u[i].family != ClassicalFamily::GL || u[i].dimension() != shape.gl_blocks[i]) {
      fail(ErrorKind::Mismatch, "factor " + std::to_string(i) + " type " + u[i].to_string() + " does not fit GL(" + std::to_string(shape.gl_blocks[i]) + ")");
    }
    add(u[i], classical ? 2 : 1);
  }
  if (classical) {
    const auto& t = u.back();
    if (t.family != tail_family(shape.ambient) || t.dimension() != shape.tail || !parity_ok(t)) {
      fail(ErrorKind::Mismatch, "tail type " + t.to_string() + " does not fit the tail of " + to_string(shape));
    }
    add(t, 1);
  }
  while (!out.mult.empty() && out.mult.back() == 0) out.mult.pop_back();
  return out;
}

std::int64_t levi_orbit_dimension(const LeviShape& shape, const LeviUnipotent& u) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < shape.gl_blocks.size(); ++i) {
    const std::int64_t k = shape.gl_blocks[i];
    d += k * k - dim_cent_unipotent(u.at(i));
  }
  if (has_tail(shape.ambient)) d += tail_dimension(shape.ambient, shape.tail) - dim_cent_unipotent(u.back());
  return d;
}

std::int64_t ambient_orbit_dimension(const LeviShape& shape, const JordanType& fused) {
  // Unipotent orbits of SL and GL coincide.
  const Ambient a = shape.ambient == Ambient::SL ? Ambient::GL : shape.ambient;
  return ambient_dimension(a, shape.dim) - dim_cent_unipotent(fused);
}

std::string AlphaResult::witness_string() const {
  if (witness.empty()) return "-";
  std::string out = "(";
  const bool tail = ambient && ambient->family != ClassicalFamily::GL;
  const std::size_t blocks = witness.size() - (tail ? 1 : 0);
  for (std::size_t i = 0; i < blocks; ++i) {
    if (i) out += "|";
    out += witness[i].to_string();
  }
  if (tail && witness.back().dimension() > 0) out += ";" + witness.back().to_string();
  return out + ")";
}

AlphaResult alpha(const LeviShape& shape, std::uint64_t cap) {
  AlphaResult best{Rational(0), {}, std::nullopt, 0, 0};
  if (is_torus(shape)) return best;
  for (const auto& u : levi_unipotent_classes(shape, cap)) {
    if (std::all_of(u.begin(), u.end(), [](const JordanType& t) { return t.is_identity(); })) continue;
    const auto fused = fuse_to_ambient(shape, u);
    const auto lo = levi_orbit_dimension(shape, u);
    const auto go = ambient_orbit_dimension(shape, fused);
    const Rational r(lo, go);
    if (!best.ambient || r > best.value) best = AlphaResult{r, u, fused, lo, go};
  }
  return best;
}

Rational alpha_bound_classical(const LeviShape& shape) {
  return Rational(1, 2) * (1 + Rational(levi_dimension(shape), ambient_dimension(shape.ambient, shape.dim)));
}

Rational alpha_semisimple_bound_gl(const LeviShape& shape, std::uint64_t cap) {
  if (has_tail(shape.ambient)) fail(ErrorKind::UnsupportedFamily, "semisimple bound is implemented for GL/SL ambients only");
  if (is_torus(shape)) return Rational(0);
  const auto& k = shape.gl_blocks;
  const std::size_t r = k.size();
  const std::int64_t n = shape.dim;
  std::int64_t levi_sq = 0;
  for (int x : k) levi_sq += static_cast<std::int64_t>(x) * x;
  // Eigenvalue columns are vectors a with 0 <= a_i <= k_i, indexed in mixed radix.
  std::vector<std::uint64_t> radix(r);
  std::uint64_t span = 1;
  for (std::size_t i = 0; i < r; ++i) {
    radix[i] = span;
    span *= static_cast<std::uint64_t>(k[i]) + 1;
    if (span > cap) fail(ErrorKind::TooExpensive, "eigenvalue pattern space of " + to_string(shape) + " exceeds cap");
  }
  std::vector<int> rem(k.begin(), k.end());
  std::uint64_t nodes = 0;
  Rational best(0);
  std::function<void(std::uint64_t, std::size_t, std::int64_t, std::int64_t)> rec =
      [&](std::uint64_t max_index, std::size_t parts, std::int64_t col_sq, std::int64_t cell_sq) {
        if (++nodes > cap) fail(ErrorKind::TooExpensive, "eigenvalue pattern sweep of " + to_string(shape) + " exceeds cap");
        if (std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; })) {
          if (parts >= 2) {
            const Rational ratio(levi_sq - cell_sq, n * n - col_sq);
            if (ratio > best) best = ratio;
          }
          return;
        }
        std::uint64_t rem_index = 0;
        for (std::size_t i = 0; i < r; ++i) rem_index += radix[i] * rem[i];
        for (std::uint64_t idx = std::min(max_index, rem_index); idx >= 1; --idx) {
          std::int64_t col = 0;
          std::int64_t cells = 0;
          bool fits = true;
          std::vector<int> a(r);
          for (std::size_t i = 0; i < r; ++i) {
            a[i] = static_cast<int>((idx / radix[i]) % (static_cast<std::uint64_t>(k[i]) + 1));
            if (a[i] > rem[i]) {
              fits = false;
              break;
            }
            col += a[i];
            cells += static_cast<std::int64_t>(a[i]) * a[i];
          }
          if (!fits) continue;
          for (std::size_t i = 0; i < r; ++i) rem[i] -= a[i];
          rec(idx, parts + 1, col_sq + col * col, cell_sq + cells);
          for (std::size_t i = 0; i < r; ++i) rem[i] += a[i];
        }
      };
  rec(span - 1, 0, 0, 0);
  return best;
}

namespace {

// best[p][x]: least sum of squares of at most p positive parts summing to x.
struct SquareSplit {
  std::vector<std::vector<std::int64_t>> best;
  std::vector<std::vector<int>> choice;

  SquareSplit(int parts, int total) {
    const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
    best.assign(parts + 1, std::vector<std::int64_t>(total + 1, inf));
    choice.assign(parts + 1, std::vector<int>(total + 1, 0));
    for (int p = 0; p <= parts; ++p) best[p][0] = 0;
    for (int p = 1; p <= parts; ++p) {
      for (int x = 1; x <= total; ++x) {
        for (int y = 1; y <= x; ++y) {
          const std::int64_t v = static_cast<std::int64_t>(y) * y + best[p - 1][x - y];
          if (v < best[p][x]) {
            best[p][x] = v;
            choice[p][x] = y;
          }
        }
      }
    }
  }

  std::vector<int> blocks(int parts, int x) const {
    std::vector<int> out;
    for (int p = parts; x > 0; --p) {
      const int y = choice[p][x];
      out.push_back(y);
      x -= y;
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  }
};

constexpr int kJmMaxDim = 800;

}  // namespace

JmResult dim_Jm(JmFamily family, int dim, std::uint64_t m) {
  if (dim < 1 || dim > kJmMaxDim) fail(ErrorKind::OutOfRange, "dimension " + std::to_string(dim) + " outside 1.." + std::to_string(kJmMaxDim));
  if (m == 0) fail(ErrorKind::Inadmissible, "m must be positive");
  const bool linear = family == JmFamily::GL || family == JmFamily::SL;
  const Ambient a = family == JmFamily::GL ? Ambient::GL
                    : family == JmFamily::SL ? Ambient::SL
                    : family == JmFamily::Sp ? Ambient::Sp
                                             : Ambient::SO;
  if (a == Ambient::Sp && dim % 2 != 0) fail(ErrorKind::InvalidType, "Sp needs even dimension");
  const std::int64_t dim_g = ambient_dimension(a, dim);
  auto finish = [&](LeviShape shape) {
    const auto ld = levi_dimension(shape);
    return JmResult{dim_g - ld, std::move(shape), ld};
  };
  if (m == 1) return finish(linear ? make_levi(a, dim, {dim}, 0) : make_levi(a, dim, {}, dim));
  if (linear) {
    const int parts = static_cast<int>(std::min<std::uint64_t>(m, static_cast<std::uint64_t>(dim)));
    const SquareSplit split(parts, dim);
    return finish(make_levi(a, dim, split.blocks(parts, dim), 0));
  }
  if (m % 2 == 0) fail(ErrorKind::Inadmissible, ambient_name(a) + " needs odd m, got " + std::to_string(m));
  const int nu = a == Ambient::SO ? dim % 2 : 0;
  const int half = (dim - nu) / 2;
  const int parts = static_cast<int>(std::min<std::uint64_t>((m - 1) / 2, static_cast<std::uint64_t>(half)));
  const SquareSplit split(parts, half);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  int best_t = 0;
  for (int t = 0; t <= half; ++t) {
    const std::int64_t v = tail_dimension(a, 2 * t + nu) + split.best[parts][half - t];
    if (v < best) {
      best = v;
      best_t = t;
    }
  }
  return finish(make_levi(a, dim, split.blocks(parts, half - best_t), 2 * best_t + nu));
}

}  // namespace fuchs
