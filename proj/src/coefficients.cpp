#include "fusion/coefficients.hpp"

#include <algorithm>
#include <numeric>

#include "fusion/checked.hpp"
#include "fusion/crystal.hpp"
#include "fusion/cylindric.hpp"
#include "fusion/tableau.hpp"
#include "fusion/tabloid.hpp"

namespace fusion {

void SchurExpansion::add(const Partition& p, std::int64_t c) {
  if (c == 0) return;
  if (ctx_ && !in_level_rank(p, *ctx_)) {
    throw std::invalid_argument("expansion key " + to_string(p) + " is outside P^{level,rank}");
  }
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
    return;
  }
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

std::int64_t SchurExpansion::coefficient(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

std::optional<Straightened> straighten(const Partition& gamma, const FusionContext& ctx) {
  const int n = ctx.rank;
  auto beta = gamma.padded(n);
  const auto rho = staircase(n);
  for (int k = 0; k < n; ++k) beta[static_cast<std::size_t>(k)] += rho[static_cast<std::size_t>(k)];

  int sign = 1;
  for (;;) {
    // Sort strictly descending; the permutation parity is the inversion count.
    int inversions = 0;
    for (std::size_t a = 0; a < beta.size(); ++a) {
      for (std::size_t b = a + 1; b < beta.size(); ++b) {
        if (beta[a] < beta[b]) ++inversions;
        if (beta[a] == beta[b]) return std::nullopt;
      }
    }
    std::sort(beta.begin(), beta.end(), std::greater<>());
    if (inversions % 2) sign = -sign;

    const int spread = beta.front() - beta.back();
    if (spread == ctx.modulus()) return std::nullopt;
    if (spread < ctx.modulus()) break;
    const int hi = beta.front();
    beta.front() = beta.back() + ctx.modulus();
    beta.back() = hi - ctx.modulus();
    sign = -sign;
  }
  for (int k = 0; k < n; ++k) beta[static_cast<std::size_t>(k)] -= rho[static_cast<std::size_t>(k)];
  return Straightened{sign, Partition(std::move(beta))};
}

void require_fusion_inputs(const Partition& lambda, const Partition& mu, const Partition& nu,
                           const FusionContext& ctx) {
  const std::string box = std::to_string(ctx.level) + "x" + std::to_string(ctx.rank) + " box";
  if (!in_box(lambda, ctx)) throw std::invalid_argument("lambda " + to_string(lambda) + " does not fit in the " + box);
  if (!in_box(mu, ctx)) throw std::invalid_argument("mu " + to_string(mu) + " does not fit in the " + box);
  if (!in_level_rank(nu, ctx)) {
    throw std::invalid_argument("nu " + to_string(nu) + " is not of level " + std::to_string(ctx.level) +
                                " and rank " + std::to_string(ctx.rank));
  }
  if (lambda.size() + mu.size() != nu.size()) {
    throw std::invalid_argument("|lambda| + |mu| must equal |nu|");
  }
}

namespace {

/// Partitions gamma in the Littlewood-Richardson support window of
/// (lambda, mu) with at most `rank` parts.
std::vector<Partition> support(const Partition& lambda, const Partition& mu, int rank) {
  std::vector<Partition> out;
  for (auto& g : partitions_of(lambda.size() + mu.size(), rank, lambda.part(0) + mu.part(0))) {
    if (g.contains(lambda) && g.contains(mu)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::int64_t fusion_kac_walton(const Partition& lambda, const Partition& mu, const Partition& nu,
                               const FusionContext& ctx) {
  require_fusion_inputs(lambda, mu, nu, ctx);
  std::int64_t sum = 0;
  for (const Partition& gamma : support(lambda, mu, ctx.rank)) {
    auto s = straighten(gamma, ctx);
    if (!s || s->nu != nu) continue;
    sum = checked_add(sum, checked_mul(s->sign, lr_coefficient(lambda, mu, gamma)));
  }
  return sum;
}

SchurExpansion expand_product(const Partition& lambda, const Partition& mu, const FusionContext& ctx) {
  if (!in_box(lambda, ctx) || !in_box(mu, ctx)) {
    throw std::invalid_argument("expand: lambda and mu must fit in the " + std::to_string(ctx.level) + "x" +
                                std::to_string(ctx.rank) + " box");
  }
  SchurExpansion out(ctx);
  for (const Partition& gamma : support(lambda, mu, ctx.rank)) {
    const std::int64_t c = lr_coefficient(lambda, mu, gamma);
    if (c == 0) continue;
    if (auto s = straighten(gamma, ctx)) out.add(s->nu, checked_mul(s->sign, c));
  }
  return out;
}

std::int64_t fusion_signed_tabloid(const Partition& lambda, const Partition& mu, const Partition& nu,
                                   const FusionContext& ctx) {
  require_fusion_inputs(lambda, mu, nu, ctx);
  if (!nu.contains(lambda)) return 0;
  const SkewShape shape(nu, lambda);
  std::int64_t sum = 0;
  for (const Tabloid& t : enumerate_tabloids(mu)) {
    sum = checked_add(sum, checked_mul(t.sign, cylindric_kostka(shape, t.weight, ctx)));
  }
  return sum;
}

std::int64_t fusion_signed_det(const Partition& lambda, const Partition& mu, const Partition& nu,
                               const FusionContext& ctx) {
  require_fusion_inputs(lambda, mu, nu, ctx);
  if (!nu.contains(lambda)) return 0;
  const SkewShape shape(nu, lambda);
  std::vector<int> perm(static_cast<std::size_t>(ctx.rank));
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t sum = 0;
  do {
    const SignedPermutation sigma(perm);
    const auto content = shifted_content(sigma, mu);
    if (std::any_of(content.begin(), content.end(), [](int c) { return c < 0; })) continue;
    sum = checked_add(sum, checked_mul(sigma.sign(), cylindric_kostka(shape, content, ctx)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

namespace {

std::optional<PositiveRoute> try_window(const Partition& inner, const Partition& mu, const Partition& outer,
                                        const FusionContext& ctx) {
  if (!outer.contains(inner)) return std::nullopt;
  auto tr = theorem1_transform(SkewShape(outer, inner), mu, ctx);
  if (!tr) return std::nullopt;
  PositiveRoute r;
  r.value = lr_coefficient(tr->inner, mu, tr->outer);
  r.lambda = inner;
  r.mu = mu;
  r.nu = outer;
  r.transform = std::move(*tr);
  return r;
}

}  // namespace

std::optional<PositiveRoute> fusion_positive_route(const Partition& lambda, const Partition& mu,
                                                   const Partition& nu, const FusionContext& ctx) {
  require_fusion_inputs(lambda, mu, nu, ctx);
  const int n = ctx.rank;
  for (bool swapped : {false, true}) {
    const Partition& a = swapped ? mu : lambda;
    const Partition& b = swapped ? lambda : mu;
    if (auto r = try_window(a, b, nu, ctx)) {
      r->swapped = swapped;
      return r;
    }
  }
  for (bool swapped : {false, true}) {
    Partition a = swapped ? mu : lambda;
    const Partition& b = swapped ? lambda : mu;
    Partition c = nu;
    int stripped = 0;
    while (has_full_column(a, n) && has_full_column(c, n)) {
      a = remove_full_column(a, n);
      c = remove_full_column(c, n);
      ++stripped;
    }
    if (stripped == 0) continue;
    if (auto r = try_window(a, b, c, ctx)) {
      r->swapped = swapped;
      r->stripped_columns = stripped;
      return r;
    }
  }
  return std::nullopt;
}

std::optional<std::int64_t> fusion_positive(const Partition& lambda, const Partition& mu, const Partition& nu,
                                            const FusionContext& ctx) {
  if (auto r = fusion_positive_route(lambda, mu, nu, ctx)) return r->value;
  return std::nullopt;
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::automatic: return "auto";
    case Method::kac_walton: return "kw";
    case Method::cylindric: return "cyl";
    case Method::determinant: return "det";
    case Method::positive: return "pos";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  if (text == "auto") return Method::automatic;
  if (text == "kw") return Method::kac_walton;
  if (text == "cyl") return Method::cylindric;
  if (text == "det") return Method::determinant;
  if (text == "pos") return Method::positive;
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

std::int64_t fusion_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu,
                                const FusionContext& ctx, Method method) {
  switch (method) {
    case Method::automatic:
      if (auto v = fusion_positive(lambda, mu, nu, ctx)) return *v;
      return fusion_kac_walton(lambda, mu, nu, ctx);
    case Method::kac_walton: return fusion_kac_walton(lambda, mu, nu, ctx);
    case Method::cylindric: return fusion_signed_tabloid(lambda, mu, nu, ctx);
    case Method::determinant: return fusion_signed_det(lambda, mu, nu, ctx);
    case Method::positive:
      if (auto v = fusion_positive(lambda, mu, nu, ctx)) return *v;
      throw NotApplicable();
  }
  throw std::invalid_argument("unknown method");
}

}  // namespace fusion
