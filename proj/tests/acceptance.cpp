// Acceptance suite: one PASS/FAIL line per criterion. Limits are wall-clock
// seconds and are fixed here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fusion/cli.hpp"
#include "fusion/coefficients.hpp"
#include "fusion/crosscheck.hpp"
#include "fusion/crystal.hpp"
#include "fusion/cylindric.hpp"
#include "fusion/tableau.hpp"
#include "fusion/tabloid.hpp"
#include "golden.hpp"

using namespace fusion;

namespace {

constexpr double kGoldenLimit = 1.0;       // per coefficient query
constexpr double kInverseLimit = 60.0;
constexpr double kInvolutionLimit = 120.0;
constexpr double kAgreementLimit = 300.0;
constexpr double kDefaultLimit = 300.0;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void criterion(int id, const std::string& title, double limit, const std::function<Verdict()>& body) {
  const auto t0 = Clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  const double dt = seconds_since(t0);
  v.require(dt < limit, "exceeded time limit");
  if (!v.pass) ++failures;
  std::printf("[%s] %2d %-34s %8.3f s (limit %.0f s)%s%s\n", v.pass ? "PASS" : "FAIL", id, title.c_str(), dt, limit,
              v.detail.empty() ? "" : "  ", v.detail.c_str());
  std::fflush(stdout);
}

Verdict golden_values() {
  Verdict v;
  struct Query {
    std::vector<std::string> args;
    std::string expected;
  };
  std::vector<Query> queries;
  for (const char* m : {"kw", "cyl", "det"}) {
    queries.push_back({{"coeff", "--level", "3", "--rank", "3", "--lambda", "1,1", "--mu", "2,2,2", "--nu", "4,2,2",
                        "--method", m},
                       "0\n"});
  }
  for (const char* m : {"kw", "cyl", "det", "pos"}) {
    queries.push_back({{"coeff", "--level", "4", "--rank", "3", "--lambda", "3,1", "--mu", "4,2,1", "--nu", "5,5,1",
                        "--method", m},
                       "1\n"});
  }
  for (const auto& q : queries) {
    std::ostringstream out, err;
    const auto t0 = Clock::now();
    const int code = cli::run(q.args, out, err);
    const double dt = seconds_since(t0);
    const std::string tag = q.args[7] + " " + q.args.back();
    v.require(code == 0 && out.str() == q.expected, tag + " gave " + out.str());
    v.require(dt < kGoldenLimit, tag + " too slow");
  }
  return v;
}

Verdict tabloid_fixtures() {
  Verdict v;
  using Fixture = std::map<Composition, std::pair<int, Partition>>;
  const std::vector<std::pair<Partition, Fixture>> fixtures{
      {{3, 2, 1},
       {{{3, 2, 1}, {1, {3, 2, 1}}}, {{1, 4, 1}, {-1, {4, 1, 1}}}, {{3, 0, 3}, {-1, {3, 3}}}, {{1, 0, 5}, {1, {5, 1}}}}},
      {{2, 2, 2},
       {{{2, 2, 2}, {1, {2, 2, 2}}},
        {{2, 1, 3}, {-1, {3, 2, 1}}},
        {{1, 3, 2}, {-1, {3, 2, 1}}},
        {{0, 3, 3}, {1, {3, 3}}},
        {{0, 2, 4}, {-1, {4, 2}}},
        {{1, 1, 4}, {1, {4, 1, 1}}}}}};
  for (const auto& [mu, want] : fixtures) {
    const auto got = enumerate_tabloids(mu);
    v.require(got.size() == want.size(), to_string(mu) + ": wrong count");
    for (const Tabloid& t : got) {
      auto it = want.find(t.weight);
      v.require(it != want.end() && it->second.first == t.sign && it->second.second == t.type,
                to_string(mu) + ": unexpected tabloid");
    }
  }
  return v;
}

Verdict cylindric_fixtures() {
  Verdict v;
  const FusionContext ctx(3, 3);
  const SkewShape shape({4, 2, 2}, {1, 1});
  const std::vector<std::pair<Composition, std::size_t>> counts{
      {{2, 2, 2}, 2}, {{2, 1, 3}, 1}, {{1, 3, 2}, 1}, {{0, 3, 3}, 0}, {{0, 2, 4}, 0}, {{1, 1, 4}, 0}};
  for (const auto& [content, n] : counts) {
    v.require(enumerate_cylindric(shape, content, ctx).size() == n, "content " + to_string(Word(content)));
  }
  v.require(is_cylindric(SkewTableau(shape, {{1, 2, 3}, {2}, {1, 3}}), ctx), "first filling rejected");
  v.require(is_cylindric(SkewTableau(shape, {{1, 1, 3}, {2}, {2, 3}}), ctx), "second filling rejected");
  v.require(!is_cylindric(SkewTableau(shape, {{1, 1, 2}, {2}, {3, 3}}), ctx), "third filling accepted");
  return v;
}

Verdict crystal_fixtures() {
  Verdict v;
  const Word w = parse_word("4123322341214223");
  v.require(apply_crystal(w, CrystalOp::raise, 2, 4) == parse_word("4123322341214222"), "e2");
  v.require(apply_crystal(w, CrystalOp::lower, 2, 4) == parse_word("4123322341214233"), "f2");
  v.require(apply_crystal(w, CrystalOp::reflect, 2, 4) == parse_word("4123322341214333"), "s2");
  const SkewShape shape({4, 2, 2}, {1, 1});
  const SkewTableau t(shape, {{1, 2, 3}, {2}, {1, 3}});
  const auto e = apply_crystal_tableau(t, CrystalOp::raise, 2, 3);
  v.require(e.has_value(), "e2 annihilated the tableau");
  if (e) {
    const auto s = apply_crystal_tableau(*e, CrystalOp::reflect, 2, 3);
    v.require(s && *s == SkewTableau(shape, {{1, 3, 3}, {2}, {1, 3}}), "s2 e2 image");
    v.require(s && s->content(3) == Composition{2, 1, 3}, "s2 e2 content");
  }
  return v;
}

Verdict inverse_matrix() {
  Verdict v;
  for (int m = 0; m <= 8; ++m) {
    const auto parts = partitions_of(m);
    std::map<std::pair<Partition, Partition>, std::int64_t> kinv, k;
    for (const Partition& a : parts) {
      for (const Partition& b : parts) {
        kinv[{a, b}] = inverse_kostka(a, b);
        k[{a, b}] = kostka(SkewShape(a), b.parts());
      }
    }
    for (const Partition& lambda : parts) {
      for (const Partition& mu : parts) {
        std::int64_t s = 0;
        for (const Partition& alpha : parts) s += k.at({lambda, alpha}) * kinv.at({alpha, mu});
        v.require(s == (lambda == mu ? 1 : 0), to_string(lambda) + " " + to_string(mu));
      }
    }
  }
  return v;
}

Verdict involution_suite() {
  Verdict v;
  for (const auto& [lambda, mu, nu] : classical_triples(8)) {
    std::int64_t sum = 0;
    std::int64_t fixed = 0;
    const std::string where = to_string(lambda) + to_string(mu) + to_string(nu);
    for_each_crystal_pair(lambda, mu, nu, 0, [&](const CrystalPair& p) {
      sum += p.sigma.sign();
      const CrystalPair q = rs_involution(p);
      v.require(rs_involution(q) == p, where + ": not an involution");
      if (q == p) {
        ++fixed;
        v.require(p.sigma.is_identity() && is_lattice(reading_word(p.tableau)), where + ": bad fixed point");
      } else {
        v.require(q.sigma.sign() == -p.sigma.sign(), where + ": sign not reversed");
      }
    });
    const auto lr = lr_coefficient(lambda, mu, nu);
    v.require(sum == lr && fixed == lr && lr_via_involution(lambda, mu, nu) == lr, where + ": count mismatch");
  }
  return v;
}

const std::vector<FusionContext> kGrid{{2, 2}, {3, 2}, {2, 3}, {3, 3}};

Verdict cross_method() {
  Verdict v;
  for (const FusionContext& ctx : kGrid) {
    for (const auto& [lambda, mu, nu] : admissible_triples(ctx)) {
      const std::string where = to_string(lambda) + to_string(mu) + to_string(nu);
      const auto kw = fusion_kac_walton(lambda, mu, nu, ctx);
      v.require(kw >= 0, where + ": negative");
      v.require(fusion_signed_tabloid(lambda, mu, nu, ctx) == kw, where + ": cyl");
      v.require(fusion_signed_det(lambda, mu, nu, ctx) == kw, where + ": det");
      if (auto pos = fusion_positive(lambda, mu, nu, ctx)) v.require(*pos == kw, where + ": pos");
    }
  }
  return v;
}

Verdict stability() {
  Verdict v;
  for (int n = 2; n <= 4; ++n) {
    for (const auto& [lambda, mu, nu] : admissible_triples(FusionContext(8, n), 8)) {
      const auto lr = lr_coefficient(lambda, mu, nu);
      const FusionContext tight(std::max(1, nu.size()), n);
      if (!in_box(lambda, tight) || !in_box(mu, tight)) continue;
      v.require(fusion_kac_walton(lambda, mu, nu, tight) == lr, to_string(lambda) + to_string(mu) + to_string(nu));
      v.require(fusion_kac_walton(lambda, mu, nu, FusionContext(8, n)) == lr, "level 8");
    }
  }
  return v;
}

Verdict symmetry_laws() {
  Verdict v;
  for (const FusionContext& ctx : kGrid) {
    const FusionContext dual(ctx.rank, ctx.level);
    for (const auto& [lambda, mu, nu] : admissible_triples(ctx)) {
      const std::string where = to_string(lambda) + to_string(mu) + to_string(nu);
      const auto c = fusion_kac_walton(lambda, mu, nu, ctx);
      v.require(fusion_kac_walton(mu, lambda, nu, ctx) == c, where + ": commutativity");
      if (lambda.part(0) < ctx.level) {
        v.require(fusion_kac_walton(add_full_column(lambda, ctx.rank), mu, add_full_column(nu, ctx.rank), ctx) == c,
                  where + ": column law");
      }
      if (has_full_column(lambda, ctx.rank) && has_full_column(nu, ctx.rank)) {
        v.require(fusion_kac_walton(remove_full_column(lambda, ctx.rank), mu, remove_full_column(nu, ctx.rank), ctx) ==
                      c,
                  where + ": column removal");
      }
      const auto image = level_rank_image(nu, ctx);
      v.require(image && in_level_rank(*image, dual), where + ": fold leaves the dual alcove");
      if (image && in_level_rank(*image, dual)) {
        v.require(fusion_kac_walton(transpose(lambda), transpose(mu), *image, dual) == c, where + ": level-rank");
      }
    }
  }
  return v;
}

Verdict cli_contract() {
  Verdict v;
  const auto cases = golden::load_cases(FUSION_GOLDEN_DIR);
  v.require(!cases.empty(), "no golden cases");
  for (const auto& c : cases) {
    const auto o = golden::check(c, FUSION_GOLDEN_DIR);
    v.require(o.ok, c.name + ": " + o.detail);
  }
  return v;
}

}  // namespace

int main() {
  criterion(1, "golden coefficient values", kGoldenLimit * 8, golden_values);
  criterion(2, "tabloid fixtures", kDefaultLimit, tabloid_fixtures);
  criterion(3, "cylindric fixtures", kDefaultLimit, cylindric_fixtures);
  criterion(4, "crystal fixtures", kDefaultLimit, crystal_fixtures);
  criterion(5, "inverse Kostka identity, m <= 8", kInverseLimit, inverse_matrix);
  criterion(6, "involution suite, |nu| <= 8", kInvolutionLimit, involution_suite);
  criterion(7, "cross-method agreement", kAgreementLimit, cross_method);
  criterion(8, "stability", kDefaultLimit, stability);
  criterion(9, "symmetry laws", kDefaultLimit, symmetry_laws);
  criterion(10, "CLI contract", kDefaultLimit, cli_contract);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
