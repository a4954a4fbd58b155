#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fusion/partition.hpp"
#include "fusion/superposition.hpp"

namespace fusion {

/// Element of the (fusion) ring in the Schur basis. Zero terms are never
/// stored.
class SchurExpansion {
 public:
  SchurExpansion() = default;
  explicit SchurExpansion(std::optional<FusionContext> ctx) : ctx_(ctx) {}

  void add(const Partition& p, std::int64_t c);
  std::int64_t coefficient(const Partition& p) const;

  const std::map<Partition, std::int64_t>& terms() const { return terms_; }
  const std::optional<FusionContext>& context() const { return ctx_; }

 private:
  std::map<Partition, std::int64_t> terms_;
  std::optional<FusionContext> ctx_;
};

struct Straightened {
  int sign = 1;
  Partition nu;
};

/// Moves gamma + rho into the fundamental alcove of the level-`level`
/// affine Weyl group by sorting and reflecting, tracking the sign. Absent
/// when gamma + rho lies on a wall. Requires at most `rank` parts.
std::optional<Straightened> straighten(const Partition& gamma, const FusionContext& ctx);

/// Throws std::invalid_argument naming the failed condition unless
/// lambda, mu lie in the box, nu in P^{level,rank} and |lambda|+|mu| = |nu|.
void require_fusion_inputs(const Partition& lambda, const Partition& mu, const Partition& nu,
                           const FusionContext& ctx);

/// Alternating sum of Littlewood-Richardson coefficients folded into the
/// alcove by `straighten`.
std::int64_t fusion_kac_walton(const Partition& lambda, const Partition& mu, const Partition& nu,
                               const FusionContext& ctx);

/// Sum over tabloids T of shape mu of sign(T) times the number of cylindric
/// tableaux of shape nu/lambda with content weight(T).
std::int64_t fusion_signed_tabloid(const Partition& lambda, const Partition& mu, const Partition& nu,
                                   const FusionContext& ctx);

/// Sum over sigma in S_rank of sign(sigma) times the number of cylindric
/// tableaux of shape nu/lambda with content sigma(mu + rho) - rho.
std::int64_t fusion_signed_det(const Partition& lambda, const Partition& mu, const Partition& nu,
                               const FusionContext& ctx);

/// How the positive formula was reached.
struct PositiveRoute {
  std::int64_t value = 0;
  Partition lambda;  ///< inner partition fed to the window transform
  Partition mu;
  Partition nu;
  WindowTransform transform;
  bool swapped = false;
  int stripped_columns = 0;
};

/// Tries the window transform on (lambda, mu, nu), then with lambda and mu
/// swapped, then after stripping common height-rank columns, in that order.
std::optional<PositiveRoute> fusion_positive_route(const Partition& lambda, const Partition& mu,
                                                   const Partition& nu, const FusionContext& ctx);

std::optional<std::int64_t> fusion_positive(const Partition& lambda, const Partition& mu, const Partition& nu,
                                            const FusionContext& ctx);

/// Full fusion product s_lambda * s_mu in the Schur basis.
SchurExpansion expand_product(const Partition& lambda, const Partition& mu, const FusionContext& ctx);

enum class Method { automatic, kac_walton, cylindric, determinant, positive };

std::string_view to_string(Method m);
/// Accepts auto, kw, cyl, det, pos.
Method parse_method(std::string_view text);

class NotApplicable : public std::runtime_error {
 public:
  NotApplicable() : std::runtime_error("positive formula not applicable") {}
};

/// Dispatcher. `automatic` uses the positive formula when it applies and the
/// straightening sum otherwise; `positive` throws NotApplicable when it does
/// not apply.
std::int64_t fusion_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu,
                                const FusionContext& ctx, Method method = Method::automatic);

}  // namespace fusion
