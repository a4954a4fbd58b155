#include "fusion/crosscheck.hpp"

#include <map>
#include <sstream>

#include "fusion/coefficients.hpp"
#include "fusion/crystal.hpp"
#include "fusion/tableau.hpp"
#include "fusion/tabloid.hpp"

namespace fusion {

namespace {

constexpr std::size_t kMaxFailuresKept = 5;

std::string triple_text(const Partition& l, const Partition& m, const Partition& n) {
  return to_string(l) + " " + to_string(m) + " " + to_string(n);
}

}  // namespace

std::vector<FusionTriple> admissible_triples(const FusionContext& ctx, int max_weight) {
  const auto box = partitions_in_box(ctx.level, ctx.rank);
  std::vector<FusionTriple> out;
  for (const Partition& lambda : box) {
    for (const Partition& mu : box) {
      const int m = lambda.size() + mu.size();
      if (max_weight >= 0 && m > max_weight) continue;
      for (Partition& nu : partitions_of(m, ctx.rank)) {
        if (in_level_rank(nu, ctx)) out.push_back({lambda, mu, std::move(nu)});
      }
    }
  }
  return out;
}

std::vector<FusionTriple> classical_triples(int max_weight) {
  std::vector<FusionTriple> out;
  for (int m = 0; m <= max_weight; ++m) {
    for (const Partition& nu : partitions_of(m)) {
      for (int k = 0; k <= m; ++k) {
        for (const Partition& lambda : partitions_of(k)) {
          if (!nu.contains(lambda)) continue;
          for (Partition& mu : partitions_of(m - k)) out.push_back({lambda, std::move(mu), nu});
        }
      }
    }
  }
  return out;
}

std::optional<Partition> level_rank_image(const Partition& nu, const FusionContext& ctx) {
  auto folded = fold_parts(transpose(nu), ctx.level);
  if (!is_partition_sequence(folded)) return std::nullopt;
  return Partition(std::move(folded));
}

void IdentityCheck::record(bool good, const std::string& what) {
  ++checked;
  if (good) {
    ++passed;
  } else if (failures.size() < kMaxFailuresKept) {
    failures.push_back(what);
  }
}

bool CrosscheckReport::ok() const {
  for (const auto& c : checks) {
    if (!c.ok()) return false;
  }
  return true;
}

CrosscheckReport crosscheck(const FusionContext& ctx, int max_weight) {
  CrosscheckReport report{ctx, max_weight, {}};
  IdentityCheck agree{"kw = cyl = det", 0, 0, {}};
  IdentityCheck nonneg{"nonnegativity", 0, 0, {}};
  IdentityCheck positive{"positive formula agrees", 0, 0, {}};
  IdentityCheck commute{"commutativity", 0, 0, {}};
  IdentityCheck column{"height-n column law", 0, 0, {}};
  IdentityCheck duality{"level-rank duality", 0, 0, {}};
  IdentityCheck stable{"stability", 0, 0, {}};
  IdentityCheck involution{"involution", 0, 0, {}};
  IdentityCheck signed_sum{"signed sum = lr", 0, 0, {}};
  IdentityCheck inverse{"inverse Kostka", 0, 0, {}};

  const FusionContext dual(ctx.rank, ctx.level);
  const int n = ctx.rank;
  for (const auto& [lambda, mu, nu] : admissible_triples(ctx, max_weight)) {
    const std::string where = triple_text(lambda, mu, nu);
    const auto kw = fusion_kac_walton(lambda, mu, nu, ctx);
    const auto cyl = fusion_signed_tabloid(lambda, mu, nu, ctx);
    const auto det = fusion_signed_det(lambda, mu, nu, ctx);
    agree.record(kw == cyl && cyl == det,
                 where + ": kw=" + std::to_string(kw) + " cyl=" + std::to_string(cyl) + " det=" + std::to_string(det));
    nonneg.record(kw >= 0, where + ": " + std::to_string(kw));

    if (auto pos = fusion_positive(lambda, mu, nu, ctx)) {
      positive.record(*pos == kw, where + ": pos=" + std::to_string(*pos) + " kw=" + std::to_string(kw));
    }
    commute.record(fusion_kac_walton(mu, lambda, nu, ctx) == kw, where);

    if (lambda.part(0) < ctx.level) {
      const auto plus = fusion_kac_walton(add_full_column(lambda, n), mu, add_full_column(nu, n), ctx);
      column.record(plus == kw, where + ": with column " + std::to_string(plus));
    }

    const auto image = level_rank_image(nu, ctx);
    if (!image || !in_level_rank(*image, dual)) {
      duality.record(false, where + ": fold is not in the dual alcove");
    } else {
      const auto d = fusion_kac_walton(transpose(lambda), transpose(mu), *image, dual);
      duality.record(d == kw, where + ": dual " + std::to_string(d));
    }

    if (ctx.level >= nu.size()) {
      stable.record(kw == lr_coefficient(lambda, mu, nu), where);
    }
  }

  for (const auto& [lambda, mu, nu] : classical_triples(max_weight)) {
    const std::string where = triple_text(lambda, mu, nu);
    std::int64_t sum = 0;
    std::int64_t fixed = 0;
    bool good = true;
    for_each_crystal_pair(lambda, mu, nu, 0, [&](const CrystalPair& p) {
      sum += p.sigma.sign();
      const CrystalPair q = rs_involution(p);
      if (rs_involution(q) != p) good = false;
      if (q == p) {
        ++fixed;
        if (!p.sigma.is_identity() || !is_lattice(reading_word(p.tableau))) good = false;
      } else if (q.sigma.sign() != -p.sigma.sign()) {
        good = false;
      }
    });
    involution.record(good, where);
    const auto lr = lr_coefficient(lambda, mu, nu);
    signed_sum.record(sum == lr && fixed == lr, where + ": sum=" + std::to_string(sum) +
                                                    " fixed=" + std::to_string(fixed) + " lr=" + std::to_string(lr));
  }

  for (int m = 0; m <= max_weight; ++m) {
    const auto parts = partitions_of(m);
    std::map<std::pair<Partition, Partition>, std::int64_t> inv;
    for (const Partition& alpha : parts) {
      for (const Partition& mu : parts) inv[{alpha, mu}] = inverse_kostka(alpha, mu);
    }
    for (const Partition& lambda : parts) {
      for (const Partition& mu : parts) {
        std::int64_t s = 0;
        for (const Partition& alpha : parts) {
          const auto k = inv.at({alpha, mu});
          if (k != 0) s += kostka(SkewShape(lambda, {}), alpha.parts()) * k;
        }
        inverse.record(s == (lambda == mu ? 1 : 0), to_string(lambda) + " " + to_string(mu));
      }
    }
  }

  report.checks = {agree, nonneg, positive, commute, column, duality, stable, involution, signed_sum, inverse};
  return report;
}

}  // namespace fusion
