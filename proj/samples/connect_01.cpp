// Continues the solution vector at 0 to the solutions at 1 with c_10 and
// compares against the series at 1.
//
//   sample_connect_01 [params.json] [z]

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hgc/json_io.hpp"

int main(int argc, char** argv) {
  using namespace hgc;
  Parameters p = make_params({{0.3, 0.0}, {0.7, 0.0}}, {{1.4, 0.0}});
  if (argc > 1) {
    std::ifstream in(argv[1]);
    std::stringstream ss;
    ss << in.rdbuf();
    p = parse_params(ss.str());
  }
  double z = argc > 2 ? std::atof(argv[2]) : 0.5;

  ConnectionMatrix C = c_10(p);
  SolutionVector F0 = solution_vector(Point::zero, p, z);
  SolutionVector F1 = solution_vector(Point::one, p, z);
  for (int i = 0; i <= p.n; ++i) {
    cplx pred = 0.0;
    for (int k = 0; k <= p.n; ++k) pred += F0.values[k] * C.entries(k, i);
    std::printf("i=%d  series at 1: %+.15f %+.15fi  via c_10: %+.15f %+.15fi  diff %.1e\n", i + 1,
                F1.values[i].real(), F1.values[i].imag(), pred.real(), pred.imag(),
                std::abs(pred - F1.values[i]));
  }
  return 0;
}
