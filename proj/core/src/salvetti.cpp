#include "artinsigma/salvetti.hpp"

#include "artinsigma/link_conditions.hpp"

namespace artinsigma {

CrossCheckReport cross_check(const EvenGraph& g, const Character& chi, std::uint64_t p, int n) {
  require_prime_or_zero(p);
  if (n < 0) throw InputError("n must be nonnegative");
  require_even_fc(g);
  if (chi.size() != g.size()) throw InputError("character domain does not match the graph");
  CrossCheckReport report;
  report.p = p;
  report.n = n;
  report.formula_free_rank = kernel_free_rank(g, chi, p, n);
  with_field(p, [&](const auto& field) {
    auto cx = build_salvetti_complex(g, chi, field, n + 1);
    auto module = homology_module(cx, n);
    report.oracle_free_rank = module.free_rank;
    report.module = std::move(module);
  });
  if (!report.agrees()) {
    throw CrossCheckMismatch("free rank of H_" + std::to_string(n) + " over F[t^+-1] is " +
                                 std::to_string(report.oracle_free_rank) + " but the link formula gives " +
                                 std::to_string(report.formula_free_rank),
                             report);
  }
  return report;
}

}  // namespace artinsigma
