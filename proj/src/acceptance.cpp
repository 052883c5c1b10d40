#include "fuchs/acceptance.hpp"

#include "fuchs/cache.hpp"
#include "fuchs/chartab.hpp"
#include "fuchs/classes.hpp"
#include "fuchs/cli.hpp"
#include "fuchs/construct.hpp"
#include "fuchs/error.hpp"
#include "fuchs/homcount.hpp"
#include "fuchs/levi.hpp"
#include "fuchs/modlinalg.hpp"
#include "fuchs/signature.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>

namespace fuchs {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

CriterionLine timed(std::string id, std::string title, const std::function<bool(std::string&)>& body) {
  CriterionLine line;
  line.id = std::move(id);
  line.title = std::move(title);
  const auto start = Clock::now();
  try {
    line.pass = body(line.detail);
  } catch (const std::exception& e) {
    line.pass = false;
    line.detail += (line.detail.empty() ? "" : "; ") + std::string("exception: ") + e.what();
  }
  line.seconds = seconds_since(start);
  return line;
}

// ---- 1: character tables ----

CriterionLine criterion_tables() {
  return timed("1", "character tables: degrees, two-prime orthogonality, numeric orthogonality, indicators", [](std::string& detail) {
    const char* groups[] = {"C(5)", "S(3)", "S(4)", "A(5)", "D(4)", "SL(2,3)", "SL(2,5)", "PSL(2,7)", "GL(2,3)", "Sp(4,3)"};
    bool ok = true;
    std::ostringstream os;
    for (const char* label : groups) {
      const auto start = Clock::now();
      const auto group = standard_group(parse_group_spec(label));
      const auto classes = conjugacy_classes(group);
      const auto table = character_table(group, classes);
      const double secs = seconds_since(start);

      const std::uint64_t order = group.order();
      BigInt sum_sq = 0;
      for (auto d : table.degrees) sum_sq += BigInt(d) * d;
      const bool counts = table.num_characters() == classes.size();
      const bool degrees = sum_sq == order;

      const auto tensor = structure_tensor(group, classes);
      bool modular = true;
      for (std::size_t skip = 0; skip < 2; ++skip) {
        const auto p = dixon_prime(order, classes.exponent, skip + 1);
        modular = modular && modular_orthogonality_holds(dixon_modular(group, classes, tensor, p), classes, order);
      }
      auto recomputed = character_table(group, classes, 1);
      recomputed.dixon_prime = table.dixon_prime;
      modular = modular && recomputed == table;
      const double err = orthogonality_error(table);

      std::int64_t fs = 0;
      for (std::size_t r = 0; r < table.num_characters(); ++r) fs += table.indicators[r] * static_cast<std::int64_t>(table.degrees[r]);
      std::int64_t roots = 0;
      for (ElementId x = 0; x < group.order(); ++x) roots += group.multiply(x, x) == group.identity();

      const double limit = std::string(label) == "Sp(4,3)" ? 60.0 : 1.0;
      const bool good = counts && degrees && modular && err <= 1e-8 && fs == roots && secs < limit;
      ok = ok && good;
      char buf[256];
      std::snprintf(buf, sizeof buf, "%s%s k=%zu err=%.1e %.2fs%s%s%s%s%s", os.tellp() ? " " : "", label, table.num_characters(), err,
                    secs, counts ? "" : " !classes", degrees ? "" : " !degrees", modular ? "" : " !modular", fs == roots ? "" : " !indicators",
                    secs < limit ? "" : " !time");
      os << buf;
    }
    detail = os.str();
    return ok;
  });
}

// ---- 2: formula against oracle ----

std::vector<ClassTuple> admissible_tuples(const FuchsianSignature& sig, const ClassData& classes, std::size_t limit) {
  std::vector<ClassTuple> out;
  ClassTuple cur;
  std::function<void(std::size_t)> rec = [&](std::size_t slot) {
    if (out.size() >= limit) return;
    if (slot == sig.periods.size()) {
      out.push_back(cur);
      return;
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (sig.periods[slot] % classes.classes[c].element_order != 0) continue;
      cur.push_back(c);
      rec(slot + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

CriterionLine criterion_oracle_grid(unsigned threads) {
  return timed("2", "character-sum counts equal enumeration on the signature x group grid", [threads](std::string& detail) {
    const char* sigs[] = {"o:g=0:m=2,2,2", "o:g=0:m=2,3,7", "o:g=0:m=2,2,2,2", "o:g=1:m=2",
                          "o:g=1:m=3",     "n:g=1:m=2,2",   "n:g=2",           "o:g=2"};
    const char* groups[] = {"S(3)", "S(4)", "A(4)", "A(5)", "D(4)", "SL(2,3)"};
    std::size_t cells = 0, skipped = 0, checks = 0;
    std::vector<std::string> bad;
    for (const char* glabel : groups) {
      const auto group = standard_group(parse_group_spec(glabel));
      const auto classes = conjugacy_classes(group);
      const auto table = character_table(group, classes);
      for (const char* slabel : sigs) {
        const auto sig = parse_signature(slabel);
        OracleOptions probe;
        if (oracle_cost(sig, group, classes, probe) > probe.cost_cap) {
          ++skipped;
          continue;
        }
        ++cells;
        for (bool exact : {false, true}) {
          FormulaOptions fo;
          fo.exact_orders = exact;
          OracleOptions oo;
          oo.exact_orders = exact;
          oo.threads = threads;
          ++checks;
          if (hom_count_total(sig, table, fo) != oracle_hom_count(sig, group, classes, oo)) {
            bad.push_back(std::string(slabel) + " " + glabel + (exact ? " exact" : " total"));
          }
        }
        for (const auto& tup : admissible_tuples(sig, classes, 40)) {
          if (sig.periods.empty()) break;
          OracleOptions oo;
          oo.classes = tup;
          oo.threads = threads;
          ++checks;
          if (hom_count_classes(sig, table, tup) != oracle_hom_count(sig, group, classes, oo)) {
            bad.push_back(std::string(slabel) + " " + glabel + " classes");
          }
        }
      }
    }
    detail = std::to_string(cells) + " cells, " + std::to_string(checks) + " equalities, " + std::to_string(skipped) +
             " cells over the cost cap";
    if (!bad.empty()) detail += "; mismatch: " + bad.front() + " (+" + std::to_string(bad.size() - 1) + ")";
    return bad.empty() && cells >= 30;
  });
}

// ---- 3: orientation weight ----

CriterionLine criterion_orientation() {
  return timed("3", "orientation weight: closed surfaces into C3", [](std::string& detail) {
    const auto group = standard_group(parse_group_spec("C(3)"));
    const auto classes = conjugacy_classes(group);
    const auto table = character_table(group, classes);
    const auto oriented = parse_signature("o:g=2");
    const auto nonoriented = parse_signature("n:g=2");
    const BigInt fo = hom_count_total(oriented, table), oo = oracle_hom_count(oriented, group, classes);
    const BigInt fn = hom_count_total(nonoriented, table), on = oracle_hom_count(nonoriented, group, classes);
    detail = "oriented " + to_string(fo) + "/" + to_string(oo) + ", nonoriented " + to_string(fn) + "/" + to_string(on);
    return fo == 81 && oo == 81 && fn == on;
  });
}

// ---- 4: constructions ----

CriterionLine criterion_constructions() {
  return timed("4", "order-m constructions: order, brute-force centralizer, class-size exponent", [](std::string& detail) {
    struct Case {
      Ambient family;
      int n;
      std::uint64_t m, q;
    };
    const Case cases[] = {{Ambient::GL, 3, 3, 7}, {Ambient::GL, 4, 2, 5}, {Ambient::GL, 4, 4, 5},
                          {Ambient::SL, 4, 2, 5}, {Ambient::GL, 2, 2, 3}, {Ambient::SL, 6, 2, 7}};
    bool ok = true;
    std::ostringstream os;
    for (const auto& c : cases) {
      const auto [p, a] = prime_power(c.q);
      const auto e = construct_element(c.family, c.n, c.m, field_make(static_cast<std::uint32_t>(p), a));
      const bool order_ok = matrix_order(e.matrix, c.m) == c.m;
      std::string route = "none";
      bool cent_ok = true;
      if (order_gl_q(static_cast<std::uint64_t>(c.n), c.q) <= 2'000'000) {
        const auto gl = standard_group(GroupSpec{GroupFamily::GL, static_cast<std::uint32_t>(c.n), c.q});
        route = "scan";
        cent_ok = BigInt(centralizer_order(gl, GroupElement::matrix(e.matrix))) == e.centralizer_order;
      } else if (const auto counted = commutant_centralizer_order(e.matrix, false)) {
        route = "commutant";
        cent_ok = *counted == e.centralizer_order;
        if (e.centralizer_order_in_sl) {
          const auto in_sl = commutant_centralizer_order(e.matrix, true);
          cent_ok = cent_ok && in_sl && *in_sl == *e.centralizer_order_in_sl;
        }
      }
      const auto check = class_size_check(e);
      const bool good = order_ok && cent_ok && check.exceeds_exponent_bound;
      ok = ok && good;
      os << (os.tellp() ? " " : "") << ambient_name(c.family) << c.n << "/m" << c.m << "/q" << c.q << ":" << route << (good ? "" : "!");
    }
    detail = os.str();
    return ok;
  });
}

// ---- 5: alpha sweeps ----

bool has_a3_factor(const LeviShape& s) {
  for (int b : s.gl_blocks) {
    if (b == 4) return true;
  }
  return s.ambient == Ambient::SO && s.tail == 6;
}

std::vector<CriterionLine> criterion_alpha() {
  std::vector<CriterionLine> lines;

  lines.push_back(timed("5a", "alpha at most half of one plus the Levi dimension ratio", [](std::string& detail) {
    std::vector<std::pair<Ambient, int>> ambients;
    for (int n = 2; n <= 8; ++n) ambients.emplace_back(Ambient::GL, n);
    for (int n = 1; n <= 5; ++n) ambients.emplace_back(Ambient::Sp, 2 * n);
    for (int N = 3; N <= 13; ++N) {
      if (N != 4) ambients.emplace_back(Ambient::SO, N);
    }
    std::size_t shapes = 0;
    std::vector<std::string> bad;
    for (const auto& [amb, dim] : ambients) {
      for (const auto& shape : all_levi_shapes(amb, dim)) {
        ++shapes;
        if (alpha(shape).value > alpha_bound_classical(shape)) bad.push_back(to_string(shape));
      }
    }
    detail = std::to_string(shapes) + " Levi shapes" + (bad.empty() ? "" : "; violated by " + bad.front());
    return bad.empty();
  }));

  lines.push_back(timed("5b", "balanced GL Levis have alpha at most 1/m", [](std::string& detail) {
    std::size_t shapes = 0;
    std::vector<std::string> bad;
    for (int n = 2; n <= 10; ++n) {
      for (int m = 2; m <= n; ++m) {
        const int k = n / m, s = n % m;
        std::vector<int> blocks(static_cast<std::size_t>(s), k + 1);
        blocks.insert(blocks.end(), static_cast<std::size_t>(m - s), k);
        const auto shape = make_levi(Ambient::GL, n, blocks, 0);
        ++shapes;
        if (alpha(shape).value > Rational(1, m)) bad.push_back(to_string(shape));
      }
    }
    detail = std::to_string(shapes) + " shapes" + (bad.empty() ? "" : "; violated by " + bad.front());
    return bad.empty();
  }));

  lines.push_back(timed("5c", "GL_k^r Levis with a torus tail have alpha at most 1/(2r)", [](std::string& detail) {
    std::size_t shapes = 0;
    std::vector<std::string> bad;
    for (int n = 2; n <= 6; ++n) {
      for (int r = 1; r <= n; ++r) {
        if (n % r != 0) continue;
        const std::vector<int> blocks(static_cast<std::size_t>(r), n / r);
        std::vector<LeviShape> cases{make_levi(Ambient::Sp, 2 * n, blocks, 0), make_levi(Ambient::SO, 2 * n + 1, blocks, 1)};
        if (n + 1 <= 6) cases.push_back(make_levi(Ambient::SO, 2 * n + 2, blocks, 2));
        for (const auto& shape : cases) {
          ++shapes;
          if (alpha(shape).value > Rational(1, 2 * r)) bad.push_back(to_string(shape));
        }
      }
    }
    detail = std::to_string(shapes) + " shapes" + (bad.empty() ? "" : "; violated by " + bad.front());
    return bad.empty();
  }));

  lines.push_back(timed("5d", "odd/even orthogonal orbit ratio at most 1+1/n", [](std::string& detail) {
    std::size_t classes = 0;
    std::vector<std::string> bad;
    for (int n = 1; 2 * n <= 12; ++n) {
      const auto even_dim = ambient_dimension(Ambient::SO, 2 * n), odd_dim = ambient_dimension(Ambient::SO, 2 * n + 1);
      for (const auto& u : unipotent_types(ClassicalFamily::O, 2 * n)) {
        if (u.is_identity()) continue;
        JordanType v = u;
        v.mult[0] += 1;
        ++classes;
        const Rational ratio(odd_dim - dim_cent_unipotent(v), even_dim - dim_cent_unipotent(u));
        if (ratio > 1 + Rational(1, n)) bad.push_back("SO" + std::to_string(2 * n) + ":" + u.to_string() + "=" + to_string(ratio));
      }
    }
    detail = std::to_string(classes) + " classes, " + std::to_string(bad.size()) + " exceed" + (bad.empty() ? "" : ", e.g. " + bad.front());
    return bad.empty();
  }));

  std::vector<std::pair<LeviShape, AlphaResult>> so14;
  for (const auto& shape : all_levi_shapes(Ambient::SO, 14)) so14.emplace_back(shape, alpha(shape));

  lines.push_back(timed("5e", "SO(14) Levis: every alpha below 5/6", [&so14](std::string& detail) {
    const auto* best = &so14.front();
    for (const auto& entry : so14) {
      if (entry.second.value > best->second.value) best = &entry;
    }
    detail = "max alpha " + to_string(best->second.value) + " at " + to_string(best->first) + " witness " +
             best->second.witness_string();
    return best->second.value < Rational(5, 6);
  }));

  lines.push_back(timed("5f", "SO(14) Levis of dimension <= 25: A3 factor with alpha 1/3, or alpha below 1/4", [&so14](std::string& detail) {
    std::size_t small = 0;
    std::vector<std::string> bad;
    for (const auto& [shape, res] : so14) {
      if (levi_dimension(shape) > 25) continue;
      ++small;
      const bool a3_case = has_a3_factor(shape) && res.value == Rational(1, 3);
      if (!a3_case && !(res.value < Rational(1, 4))) bad.push_back(to_string(shape) + "=" + to_string(res.value));
    }
    detail = std::to_string(small) + " shapes, " + std::to_string(bad.size()) + " in neither case" + (bad.empty() ? "" : ", e.g. " + bad.front());
    return bad.empty();
  }));
  return lines;
}

// ---- 6: extremal Levi dimensions ----

CriterionLine criterion_extremal() {
  return timed("6", "minimal centralizer dimension within the n^2/m and dim G/m windows", [](std::string& detail) {
    std::size_t checks = 0;
    std::vector<std::string> bad;
    for (int n = 2; n <= 40; ++n) {
      for (int m = 2; m <= n; ++m) {
        const Rational lo(n * n, m), d(dim_Jm(JmFamily::GL, n, static_cast<std::uint64_t>(m)).levi_dim);
        ++checks;
        if (d < lo || d > lo + Rational(m, 4)) bad.push_back("GL" + std::to_string(n) + "/m" + std::to_string(m));
      }
    }
    for (int rank = 3; rank <= 20; ++rank) {
      const std::pair<JmFamily, int> series[] = {{JmFamily::Sp, 2 * rank}, {JmFamily::SO, 2 * rank + 1}, {JmFamily::SO, 2 * rank}};
      for (const auto& [fam, dim] : series) {
        const Ambient amb = fam == JmFamily::Sp ? Ambient::Sp : Ambient::SO;
        const std::int64_t dim_g = ambient_dimension(amb, dim);
        for (int m = 3; m <= rank; m += 2) {
          const Rational center(dim_g, m), d(dim_Jm(fam, dim, static_cast<std::uint64_t>(m)).levi_dim);
          ++checks;
          if (d < center - 1 || d > center + Rational(m * m, 2)) bad.push_back(ambient_name(amb) + std::to_string(dim) + "/m" + std::to_string(m));
        }
      }
    }
    detail = std::to_string(checks) + " (family, n, m) cases" + (bad.empty() ? "" : "; outside: " + bad.front());
    return bad.empty();
  });
}

// ---- 7: j_m on SO(14) ----

CriterionLine criterion_jm() {
  return timed("7", "dim J_m of SO(14) equals 84 - 2[m=11] - 6[m=7]", [](std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    for (std::uint64_t m : {7, 11, 13, 17, 19, 23}) {
      const auto got = dim_Jm(JmFamily::SO, 14, m).jm;
      const std::int64_t want = 84 - (m == 11 ? 2 : 0) - (m == 7 ? 6 : 0);
      ok = ok && got == want;
      os << (os.tellp() ? " " : "") << "m" << m << "=" << got;
    }
    detail = os.str();
    return ok;
  });
}

// ---- 8: zeta(1) for SL(2,q) ----

CriterionLine criterion_zeta() {
  return timed("8", "zeta(1) of SL(2,q), q=3,5,7: degree bound and decrease from 5 to 7", [](std::string& detail) {
    bool ok = true;
    std::map<std::uint64_t, Rational> values;
    std::ostringstream os;
    for (std::uint64_t q : {3, 5, 7}) {
      const auto group = standard_group(GroupSpec{GroupFamily::SL, 2, q});
      const auto table = character_table(group, conjugacy_classes(group));
      const Rational z = *zeta_exact(table, Rational(1));
      std::uint64_t d_min = 0;
      for (std::size_t r = 1; r < table.num_characters(); ++r) {
        if (d_min == 0 || table.degrees[r] < d_min) d_min = table.degrees[r];
      }
      const Rational cap(static_cast<std::int64_t>(table.num_characters() - 1), static_cast<std::int64_t>(d_min));
      ok = ok && z - 1 <= cap;
      values[q] = z;
      os << (os.tellp() ? " " : "") << "q" << q << "=" << to_string(z);
    }
    ok = ok && values[7] < values[5];
    detail = os.str();
    return ok;
  });
}

// ---- 9: generation ----

CriterionLine criterion_epi(unsigned threads) {
  return timed("9", "(2,3,7) surjects onto PSL(2,7); (2,2,2) never onto S3", [threads](std::string& detail) {
    OracleOptions oo;
    oo.threads = threads;
    const auto psl = standard_group(parse_group_spec("PSL(2,7)"));
    const auto hurwitz = epi_count(parse_signature("o:g=0:m=2,3,7"), psl, conjugacy_classes(psl), oo);
    const auto s3 = standard_group(parse_group_spec("S(3)"));
    const auto klein = epi_count(parse_signature("o:g=0:m=2,2,2"), s3, conjugacy_classes(s3), oo);
    detail = "PSL(2,7) epi " + to_string(hurwitz.epi) + " P=" + to_string(hurwitz.probability) + "; S3 epi " + to_string(klein.epi);
    return hurwitz.epi > 0 && hurwitz.probability > 0 && hurwitz.probability <= 1 && klein.epi == 0;
  });
}

// ---- 10: determinism ----

std::string capture(std::vector<std::string> args, int& status) {
  std::ostringstream out, err;
  status = run_cli(args, out, err);
  return out.str();
}

CriterionLine criterion_determinism() {
  return timed("10", "byte-identical reports across runs, thread counts and cache state", [](std::string& detail) {
    std::vector<std::vector<std::string>> commands;
    for (const char* g : {"C(5)", "S(3)", "S(4)", "A(5)", "D(4)", "SL(2,3)", "SL(2,5)", "PSL(2,7)", "GL(2,3)"}) {
      commands.push_back({"chartab", "--group", g, "--multiplicities"});
    }
    for (const char* s : {"o:g=0:m=2,2,2", "o:g=0:m=2,3,7", "n:g=1:m=2,2", "o:g=1:m=3"}) {
      for (const char* g : {"S(4)", "SL(2,3)"}) commands.push_back({"homcount", "--sig", s, "--group", g, "--oracle", "both", "--threads", "4"});
    }
    commands.push_back({"homcount", "--sig", "o:g=2", "--group", "C(3)", "--oracle", "both"});
    commands.push_back({"construct", "--family", "GL", "--n", "3", "--m", "3", "--q", "7"});
    commands.push_back({"construct", "--family", "SL", "--n", "4", "--m", "2", "--q", "5"});
    commands.push_back({"construct", "--family", "GL", "--n", "2", "--m", "2", "--q", "3"});
    for (const char* l : {"GL(4):2,2", "Sp(8):gl=2,2;tail=0", "SO(14):gl=1;tail=12", "SO(13):gl=3;tail=7"}) {
      commands.push_back({"alpha", "--levi", l});
      commands.push_back({"alphabound", "--levi", l});
    }
    for (const char* m : {"7", "11", "13"}) commands.push_back({"jm", "--family", "SO", "--n", "14", "--m", m});
    for (const char* g : {"SL(2,3)", "SL(2,5)", "SL(2,7)"}) commands.push_back({"zeta", "--group", g, "--s", "1"});
    commands.push_back({"epi", "--sig", "o:g=0:m=2,3,7", "--group", "PSL(2,7)", "--threads", "4"});

    namespace fs = std::filesystem;
    const fs::path base = fs::temp_directory_path() / ("fuchscount-det-" + std::to_string(Clock::now().time_since_epoch().count()));
    const std::string cache_a = (base / "a").string(), cache_b = (base / "b").string();
    std::size_t compared = 0;
    std::vector<std::string> bad;
    for (const auto& cmd : commands) {
      auto with_cache = [&](const std::string& dir) {
        std::vector<std::string> v{"--cache-dir", dir};
        v.insert(v.end(), cmd.begin(), cmd.end());
        return v;
      };
      auto single = cmd;
      for (std::size_t i = 0; i + 1 < single.size(); ++i) {
        if (single[i] == "--threads") single[i + 1] = "1";
      }
      int s1 = 0, s2 = 0, s3 = 0, s4 = 0;
      const std::string first = capture(with_cache(cache_a), s1);
      const std::string cached = capture(with_cache(cache_a), s2);
      const std::string fresh = capture(with_cache(cache_b), s3);
      std::vector<std::string> serial{"--cache-dir", cache_b};
      serial.insert(serial.end(), single.begin(), single.end());
      const std::string one_thread = capture(serial, s4);
      ++compared;
      if (first.empty() || first != cached || first != fresh || first != one_thread || s1 != s2 || s1 != s3 || s1 != s4) {
        bad.push_back(cmd[0] + " " + cmd[2]);
      }
    }
    std::error_code ec;
    fs::remove_all(base, ec);
    detail = std::to_string(compared) + " commands x 4 runs" + (bad.empty() ? "" : "; differs: " + bad.front());
    return bad.empty();
  });
}

}  // namespace

std::vector<CriterionLine> run_criterion(int criterion, unsigned threads) {
  switch (criterion) {
    case 1: return {criterion_tables()};
    case 2: return {criterion_oracle_grid(threads)};
    case 3: return {criterion_orientation()};
    case 4: return {criterion_constructions()};
    case 5: return criterion_alpha();
    case 6: return {criterion_extremal()};
    case 7: return {criterion_jm()};
    case 8: return {criterion_zeta()};
    case 9: return {criterion_epi(threads)};
    case 10: return {criterion_determinism()};
    default: fail(ErrorKind::OutOfRange, "criterion must be 1.." + std::to_string(kCriterionCount));
  }
}

std::string format_line(const CriterionLine& line) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2fs", line.seconds);
  return std::string(line.pass ? "PASS" : "FAIL") + " [" + line.id + "] " + line.title + " :: " + line.detail + " (" + secs + ")";
}

}  // namespace fuchs
