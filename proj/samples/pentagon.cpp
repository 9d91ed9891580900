// Certifies the 5-cycle at the regular-pentagon inner products, builds the
// code in the plane and reads the graph back.
#include <cstdio>

#include "twodist/twodist.hpp"

int main() {
  using namespace twodist;
  const CodeParameters params = CodeParameters::pentagon();
  const Graph c5 = cycle_graph(5);

  const AlphaCertificate cert = certify_alpha(c5, params);
  std::printf("valid=%d rank=%d q=%.12f p=%.12f equality=%d\n", cert.valid, cert.rank_r, cert.quadform_value(),
              params.p().value(), cert.equality_case);

  const SphericalCode code = realize_from_alpha(c5, params);
  for (const auto& v : code.vectors) std::printf("  (% .6f, % .6f)\n", v[0], v[1]);
  const bool round_trip = alpha_graph(code) == c5;
  std::printf("round trip: %s\n", round_trip ? "ok" : "FAILED");
  return cert.valid && cert.rank_r == 2 && round_trip ? 0 : 1;
}
